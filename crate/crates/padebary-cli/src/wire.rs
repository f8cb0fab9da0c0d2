//! JSON file formats: a series record `{"coeffs": [[re, im], ...]}` and a
//! tagged approximant record whose `kind` field selects the representation.
//! Readers also accept bare numbers where a `[re, im]` pair is expected and
//! a bare array in place of the series record.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use padebary::barycentric::{BarycentricForm1, BarycentricForm2};
use padebary::pade::RationalFunction;
use padebary::poly::Polynomial;
use padebary::prony::{PartialFraction, PartialFractionTerm};
use padebary::series::FormalPowerSeries;
use padebary::Approximant;

use crate::CliError;

fn pair(z: Complex64) -> [f64; 2] {
    [z.re, z.im]
}

fn pairs(v: &[Complex64]) -> Vec<[f64; 2]> {
    v.iter().copied().map(pair).collect()
}

fn complex(p: [f64; 2]) -> Complex64 {
    Complex64::new(p[0], p[1])
}

fn complexes(v: &[[f64; 2]]) -> Vec<Complex64> {
    v.iter().copied().map(complex).collect()
}

/// One JSON value as a complex number: a number or an `[re]` / `[re, im]`
/// array.
fn value_as_complex(v: &Value) -> Result<Complex64, CliError> {
    let bad = || CliError::Input(format!("expected a number or [re, im] pair, found {v}"));
    match v {
        Value::Number(n) => Ok(Complex64::new(n.as_f64().ok_or_else(bad)?, 0.0)),
        Value::Array(parts) if parts.len() == 1 || parts.len() == 2 => {
            let get = |i: usize| -> Result<f64, CliError> {
                match parts.get(i) {
                    None => Ok(0.0),
                    Some(Value::Number(n)) => n.as_f64().ok_or_else(bad),
                    Some(_) => Err(bad()),
                }
            };
            Ok(Complex64::new(get(0)?, get(1)?))
        }
        _ => Err(bad()),
    }
}

/// Parses series JSON: either `{"coeffs": [...]}` or a bare array.
pub fn series_from_json(text: &str) -> Result<FormalPowerSeries, CliError> {
    let value: Value = serde_json::from_str(text)?;
    let list = match &value {
        Value::Object(map) => map
            .get("coeffs")
            .and_then(Value::as_array)
            .ok_or_else(|| CliError::Input("series JSON lacks a \"coeffs\" array".into()))?,
        Value::Array(items) => items,
        _ => return Err(CliError::Input("series JSON must be an object or array".into())),
    };
    let coeffs = list
        .iter()
        .map(value_as_complex)
        .collect::<Result<Vec<_>, _>>()?;
    Ok(FormalPowerSeries::new(coeffs)?)
}

/// Canonical series JSON text (trailing newline included).
pub fn series_to_json(c: &FormalPowerSeries) -> String {
    let record = serde_json::json!({ "coeffs": pairs(c.coeffs()) });
    let mut text = serde_json::to_string_pretty(&record).expect("serializable value");
    text.push('\n');
    text
}

#[derive(Serialize, Deserialize)]
struct TermRecord {
    a: [f64; 2],
    p: [f64; 2],
}

/// Tagged approximant record mirroring [`Approximant`].
#[derive(Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
enum ApproxRecord {
    Rational {
        num: Vec<[f64; 2]>,
        den: Vec<[f64; 2]>,
    },
    Bary1 {
        a: Vec<[f64; 2]>,
        pnodes: Vec<[f64; 2]>,
        b: Vec<[f64; 2]>,
        znodes: Vec<[f64; 2]>,
    },
    Bary2 {
        a: Vec<[f64; 2]>,
        pnodes: Vec<[f64; 2]>,
        b: Vec<[f64; 2]>,
        znodes: Vec<[f64; 2]>,
    },
    Pfpa {
        terms: Vec<TermRecord>,
    },
}

/// Parses and revalidates a tagged approximant record.
pub fn approximant_from_json(text: &str) -> Result<Approximant, CliError> {
    let record: ApproxRecord = serde_json::from_str(text)?;
    let approx = match record {
        ApproxRecord::Rational { num, den } => Approximant::Rational(RationalFunction::new(
            Polynomial::new(complexes(&num)),
            Polynomial::new(complexes(&den)),
        )?),
        ApproxRecord::Bary1 { a, pnodes, b, znodes } => Approximant::Bary1(BarycentricForm1::new(
            complexes(&a),
            complexes(&pnodes),
            complexes(&b),
            complexes(&znodes),
        )?),
        ApproxRecord::Bary2 { a, pnodes, b, znodes } => Approximant::Bary2(BarycentricForm2::new(
            complexes(&a),
            complexes(&pnodes),
            complexes(&b),
            complexes(&znodes),
        )?),
        ApproxRecord::Pfpa { terms } => Approximant::PartialFraction(PartialFraction::new(
            terms
                .into_iter()
                .map(|t| PartialFractionTerm {
                    residue: complex(t.a),
                    node: complex(t.p),
                })
                .collect(),
        )?),
    };
    Ok(approx)
}

/// Canonical tagged JSON text for an approximant (trailing newline included).
pub fn approximant_to_json(approx: &Approximant) -> String {
    let record = match approx {
        Approximant::Rational(rational) => ApproxRecord::Rational {
            num: pairs(rational.num().coeffs()),
            den: pairs(rational.den().coeffs()),
        },
        Approximant::Bary1(form) => ApproxRecord::Bary1 {
            a: pairs(form.a()),
            pnodes: pairs(form.pnodes()),
            b: pairs(form.b()),
            znodes: pairs(form.znodes()),
        },
        Approximant::Bary2(form) => ApproxRecord::Bary2 {
            a: pairs(form.a()),
            pnodes: pairs(form.pnodes()),
            b: pairs(form.b()),
            znodes: pairs(form.znodes()),
        },
        Approximant::PartialFraction(pf) => ApproxRecord::Pfpa {
            terms: pf
                .terms()
                .iter()
                .map(|t| TermRecord {
                    a: pair(t.residue),
                    p: pair(t.node),
                })
                .collect(),
        },
    };
    let mut text = serde_json::to_string_pretty(&record).expect("serializable value");
    text.push('\n');
    text
}
