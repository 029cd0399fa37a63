use std::fs;
use std::path::Path;
use std::sync::Arc;

use klcat_core::suite::{run, run_block};
use klcat_core::{
    BasisKind, BlockSuite, CartanDatum, HeckeAlgebra, K0Model, KlVariant, LaurentPoly, RankOne,
    Suite, VerificationReport, WeylGroup,
};
use serde::Serialize;

use crate::emit::Format;
use crate::{CliError, KlBasis, Settings};

fn group(cartan: &str, cap: u128) -> Result<Arc<WeylGroup>, CliError> {
    let datum: CartanDatum = cartan.parse()?;
    Ok(Arc::new(WeylGroup::with_cap(datum, cap)?))
}

/// Columns separated by two spaces, each padded to its widest cell.
fn columns(rows: &[Vec<String>]) -> String {
    let n = rows.iter().map(Vec::len).max().unwrap_or(0);
    let widths: Vec<usize> = (0..n)
        .map(|j| {
            rows.iter()
                .filter_map(|r| r.get(j))
                .map(|c| c.chars().count())
                .max()
                .unwrap_or(0)
        })
        .collect();
    let mut out = String::new();
    for r in rows {
        let mut line = String::new();
        for (j, cell) in r.iter().enumerate() {
            if j > 0 {
                line.push_str("  ");
            }
            line.push_str(cell);
            if j + 1 < r.len() {
                line.push_str(&" ".repeat(widths[j] - cell.chars().count()));
            }
        }
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out
}

fn csv_rows(rows: &[Vec<String>]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    for r in rows {
        w.write_record(r).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8 input")
}

fn json_line<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string(value).expect("output serializes");
    s.push('\n');
    s
}

/// One row per term, `exponent, coefficient`.
fn term_rows(p: &LaurentPoly) -> Vec<(String, String)> {
    p.terms()
        .map(|(e, c)| (e.to_string(), c.to_string()))
        .collect()
}

pub(crate) fn weyl(cartan: &str, info: bool, s: &Settings) -> Result<String, CliError> {
    let g = group(cartan, s.cap)?;
    if info {
        let sum = g.summary();
        return Ok(match s.format {
            Format::Json => json_line(&sum),
            fmt => {
                let rows = vec![
                    vec!["type".into(), sum.cartan_type],
                    vec!["order".into(), sum.order.to_string()],
                    vec!["longest_length".into(), sum.longest_length.to_string()],
                    vec!["longest_word".into(), sum.longest_word],
                ];
                if fmt == Format::Csv {
                    csv_rows(
                        &[vec!["key".into(), "value".into()]]
                            .into_iter()
                            .chain(rows)
                            .collect::<Vec<_>>(),
                    )
                } else {
                    columns(&rows)
                }
            }
        });
    }
    let export = g.export();
    if s.format == Format::Json {
        return Ok(json_line(&export));
    }
    let mut rows = vec![vec![
        "word".to_string(),
        "length".to_string(),
        "covers".to_string(),
    ]];
    for el in &export.elements {
        let below: Vec<&str> = export
            .covers
            .iter()
            .filter(|(_, hi)| *hi == el.word)
            .map(|(lo, _)| lo.as_str())
            .collect();
        rows.push(vec![
            el.word.clone(),
            el.length.to_string(),
            below.join(" "),
        ]);
    }
    Ok(if s.format == Format::Csv {
        csv_rows(&rows)
    } else {
        columns(&rows)
    })
}

#[derive(Serialize)]
struct KlCoeff<'a> {
    x: &'a str,
    y: &'a str,
    coeff: &'a LaurentPoly,
}

pub(crate) fn klpoly(
    cartan: &str,
    x: &str,
    y: Option<&str>,
    basis: KlBasis,
    s: &Settings,
) -> Result<String, CliError> {
    let g = group(cartan, s.cap)?;
    let x = g.parse_word(x)?;
    let y = y.map(|w| g.parse_word(w)).transpose()?;
    let alg = HeckeAlgebra::new(Arc::clone(&g));
    let variant = match basis {
        KlBasis::C => KlVariant::C,
        KlBasis::CPrime => KlVariant::Cprime,
    };
    let c = alg.kl_element(x, variant)?;
    let xn = g.name(x);
    let entries: Vec<(String, LaurentPoly)> = match y {
        Some(y) => vec![(g.name(y), c.coeff(y))],
        None => g
            .elements()
            .map(|y| (g.name(y), c.coeff(y)))
            .filter(|(_, p)| !p.is_zero())
            .collect(),
    };
    let one = y.is_some();
    Ok(match s.format {
        Format::Json => {
            let objs: Vec<KlCoeff> = entries
                .iter()
                .map(|(yn, p)| KlCoeff {
                    x: &xn,
                    y: yn,
                    coeff: p,
                })
                .collect();
            if one {
                json_line(&objs[0])
            } else {
                json_line(&objs)
            }
        }
        Format::Csv => {
            let mut rows = vec![vec![
                "x".to_string(),
                "y".into(),
                "exponent".into(),
                "coeff".into(),
            ]];
            for (yn, p) in &entries {
                for (e, k) in term_rows(p) {
                    rows.push(vec![xn.clone(), yn.clone(), e, k]);
                }
            }
            csv_rows(&rows)
        }
        Format::Table => {
            let mut rows = vec![vec!["x".to_string(), "y".into(), "coeff".into()]];
            rows.extend(
                entries
                    .iter()
                    .map(|(yn, p)| vec![xn.clone(), yn.clone(), p.to_string()]),
            );
            columns(&rows)
        }
    })
}

#[derive(Serialize)]
struct Expansion<'a> {
    x: &'a str,
    from: &'a str,
    to: &'a str,
    coeffs: Vec<KlTerm<'a>>,
}

#[derive(Serialize)]
struct KlTerm<'a> {
    y: &'a str,
    coeff: &'a LaurentPoly,
}

pub(crate) fn basis_change(
    cartan: &str,
    from: BasisKind,
    to: BasisKind,
    x: &str,
    s: &Settings,
) -> Result<String, CliError> {
    let g = group(cartan, s.cap)?;
    let x = g.parse_word(x)?;
    let model = K0Model::new(Arc::clone(&g));
    let class = model.class_of(x, from)?;
    let coords = model.expand(&class, to)?;
    let entries: Vec<(String, &LaurentPoly)> = coords
        .iter()
        .filter(|(_, p)| !p.is_zero())
        .map(|(&i, p)| (g.name(g.elt(i)), p))
        .collect();
    let xn = g.name(x);
    Ok(match s.format {
        Format::Json => json_line(&Expansion {
            x: &xn,
            from: from.name(),
            to: to.name(),
            coeffs: entries
                .iter()
                .map(|(y, p)| KlTerm { y, coeff: p })
                .collect(),
        }),
        Format::Csv => {
            let mut rows = vec![vec!["y".to_string(), "exponent".into(), "coeff".into()]];
            for (y, p) in &entries {
                for (e, k) in term_rows(p) {
                    rows.push(vec![y.clone(), e, k]);
                }
            }
            csv_rows(&rows)
        }
        Format::Table => {
            let mut rows = vec![vec![format!("{to}"), format!("coeff in {from}_{xn}")]];
            rows.extend(entries.iter().map(|(y, p)| vec![y.clone(), p.to_string()]));
            columns(&rows)
        }
    })
}

pub(crate) fn verify(
    cartan: &str,
    suite: Suite,
    s: &Settings,
) -> Result<VerificationReport, CliError> {
    let datum: CartanDatum = cartan.parse()?;
    Ok(run(datum, suite, s.cap)?)
}

pub(crate) fn block_check(
    suite: BlockSuite,
    homology: Option<&Path>,
) -> Result<VerificationReport, CliError> {
    let block = RankOne::new()?;
    if let Some(path) = homology {
        let fail = |e: &dyn std::fmt::Display| CliError::Write {
            path: path.display().to_string(),
            reason: e.to_string(),
        };
        let mut w = csv::Writer::from_writer(Vec::new());
        for row in block.homology_table() {
            w.serialize(row).map_err(|e| fail(&e))?;
        }
        let bytes = w.into_inner().map_err(|e| fail(&e))?;
        fs::write(path, bytes).map_err(|e| fail(&e))?;
    }
    Ok(run_block(&block, suite))
}
