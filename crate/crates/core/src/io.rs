//! Lossless JSON and CSV forms of series and cyclotomic values.
//!
//! JSON: `{"scale": s, "trunc": T, "terms": [{"q_exp": e, "x": [{"x_exp": d,
//! "num": "...", "den": "..."}]}]}` with ascending exponents, rationals as
//! decimal strings and `"trunc": null` for an exact (complete) value. The
//! exponent `e` means `q^{e/s}`.
//!
//! CSV: one row `scale,trunc,q_exp,x_exp,num,den` per nonzero coefficient.
//! A zero series has no rows, so its window travels in a single row with
//! empty `q_exp`.

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use crate::algebra::{CycloNum, QSeries, XLaurent};
use crate::error::{Error, Result};

#[derive(Serialize, Deserialize)]
struct SeriesDoc {
    scale: u32,
    trunc: Option<i64>,
    terms: Vec<TermDoc>,
}

#[derive(Serialize, Deserialize)]
struct TermDoc {
    q_exp: i64,
    x: Vec<CoeffDoc>,
}

#[derive(Serialize, Deserialize)]
struct CoeffDoc {
    x_exp: i64,
    num: String,
    den: String,
}

#[derive(Serialize, Deserialize)]
struct CycloDoc {
    order: u64,
    /// Coefficients of `zeta^power`, `power < phi(order)`.
    coeffs: Vec<ZetaDoc>,
    value: String,
}

#[derive(Serialize, Deserialize)]
struct ZetaDoc {
    power: usize,
    num: String,
    den: String,
}

fn parse_rational(num: &str, den: &str) -> Result<BigRational> {
    let n: BigInt = num.parse().map_err(|_| Error::Parse(format!("bad numerator '{num}'")))?;
    let d: BigInt = den.parse().map_err(|_| Error::Parse(format!("bad denominator '{den}'")))?;
    if d == BigInt::from(0) {
        return Err(Error::Parse("zero denominator".into()));
    }
    Ok(BigRational::new(n, d))
}

fn coeff_docs(c: &XLaurent) -> Vec<CoeffDoc> {
    c.terms()
        .map(|(d, r)| CoeffDoc {
            x_exp: d,
            num: r.numer().to_string(),
            den: r.denom().to_string(),
        })
        .collect()
}

fn to_doc(s: &QSeries) -> SeriesDoc {
    SeriesDoc {
        scale: s.scale(),
        trunc: s.trunc(),
        terms: s
            .terms()
            .map(|(e, c)| TermDoc {
                q_exp: e,
                x: coeff_docs(c),
            })
            .collect(),
    }
}

fn from_doc(doc: SeriesDoc) -> Result<QSeries> {
    if doc.scale == 0 {
        return Err(Error::Parse("scale must be positive".into()));
    }
    let mut terms = Vec::with_capacity(doc.terms.len());
    for t in doc.terms {
        let c = t
            .x
            .iter()
            .map(|x| Ok((x.x_exp, parse_rational(&x.num, &x.den)?)))
            .collect::<Result<Vec<_>>>()?;
        terms.push((t.q_exp, XLaurent::from_terms(c)));
    }
    Ok(QSeries::from_terms(doc.scale, doc.trunc, terms))
}

pub fn series_to_json(s: &QSeries) -> String {
    serde_json::to_string_pretty(&to_doc(s)).expect("series documents always serialize")
}

pub fn series_from_json(text: &str) -> Result<QSeries> {
    let doc: SeriesDoc = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    from_doc(doc)
}

/// A Laurent polynomial in `q` as an exact series.
pub fn laurent_to_json(p: &XLaurent) -> String {
    series_to_json(&QSeries::from_q_laurent(p))
}

pub fn cyclo_to_json(c: &CycloNum) -> String {
    let doc = CycloDoc {
        order: c.order(),
        coeffs: c
            .coeffs()
            .iter()
            .enumerate()
            .filter(|(_, r)| !num_traits::Zero::is_zero(*r))
            .map(|(power, r)| ZetaDoc {
                power,
                num: r.numer().to_string(),
                den: r.denom().to_string(),
            })
            .collect(),
        value: c.to_string(),
    };
    serde_json::to_string_pretty(&doc).expect("cyclotomic documents always serialize")
}

pub fn cyclo_from_json(text: &str) -> Result<CycloNum> {
    let doc: CycloDoc = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    if doc.order == 0 {
        return Err(Error::Parse("order must be positive".into()));
    }
    let len = doc.coeffs.iter().map(|z| z.power + 1).max().unwrap_or(0);
    let mut dense = vec![BigRational::from_integer(0.into()); len];
    for z in &doc.coeffs {
        dense[z.power] = parse_rational(&z.num, &z.den)?;
    }
    Ok(CycloNum::from_dense(doc.order, dense))
}

#[derive(Serialize)]
struct CycloCsvRow {
    order: u64,
    power: usize,
    num: String,
    den: String,
}

/// One row `order,power,num,den` per nonzero coefficient of `zeta^power`.
pub fn cyclo_to_csv(c: &CycloNum) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    for (power, r) in c.coeffs().iter().enumerate() {
        if num_traits::Zero::is_zero(r) {
            continue;
        }
        w.serialize(CycloCsvRow {
            order: c.order(),
            power,
            num: r.numer().to_string(),
            den: r.denom().to_string(),
        })
        .map_err(|e| Error::Parse(e.to_string()))?;
    }
    let bytes = w.into_inner().map_err(|e| Error::Parse(e.to_string()))?;
    String::from_utf8(bytes).map_err(|e| Error::Parse(e.to_string()))
}

#[derive(Serialize, Deserialize)]
struct CsvRow {
    scale: u32,
    trunc: Option<i64>,
    q_exp: Option<i64>,
    x_exp: Option<i64>,
    num: String,
    den: String,
}

pub fn series_to_csv(s: &QSeries) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    let mut rows = 0;
    for (e, c) in s.terms() {
        for (d, r) in c.terms() {
            w.serialize(CsvRow {
                scale: s.scale(),
                trunc: s.trunc(),
                q_exp: Some(e),
                x_exp: Some(d),
                num: r.numer().to_string(),
                den: r.denom().to_string(),
            })
            .map_err(|e| Error::Parse(e.to_string()))?;
            rows += 1;
        }
    }
    if rows == 0 {
        w.serialize(CsvRow {
            scale: s.scale(),
            trunc: s.trunc(),
            q_exp: None,
            x_exp: None,
            num: "0".into(),
            den: "1".into(),
        })
        .map_err(|e| Error::Parse(e.to_string()))?;
    }
    let bytes = w.into_inner().map_err(|e| Error::Parse(e.to_string()))?;
    String::from_utf8(bytes).map_err(|e| Error::Parse(e.to_string()))
}

pub fn series_from_csv(text: &str) -> Result<QSeries> {
    let mut r = csv::Reader::from_reader(text.as_bytes());
    let mut header: Option<(u32, Option<i64>)> = None;
    let mut terms: Vec<(i64, XLaurent)> = Vec::new();
    for row in r.deserialize::<CsvRow>() {
        let row = row.map_err(|e| Error::Parse(e.to_string()))?;
        match header {
            None => header = Some((row.scale, row.trunc)),
            Some(h) if h != (row.scale, row.trunc) => {
                return Err(Error::Parse("rows disagree on scale or trunc".into()))
            }
            _ => {}
        }
        if let (Some(e), Some(d)) = (row.q_exp, row.x_exp) {
            let c = XLaurent::monomial(parse_rational(&row.num, &row.den)?, d);
            terms.push((e, c));
        }
    }
    let (scale, trunc) = header.ok_or_else(|| Error::Parse("no rows".into()))?;
    if scale == 0 {
        return Err(Error::Parse("scale must be positive".into()));
    }
    Ok(QSeries::from_terms(scale, trunc, terms))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::knot::{u_series, KnotFamilyParams};

    #[test]
    fn json_and_csv_roundtrip() {
        let u = u_series(KnotFamilyParams::new(2, 1).unwrap(), 6);
        assert_eq!(series_from_json(&series_to_json(&u)).unwrap(), u);
        assert_eq!(series_from_csv(&series_to_csv(&u).unwrap()).unwrap(), u);
        let z = QSeries::zero(3, 7);
        assert_eq!(series_from_csv(&series_to_csv(&z).unwrap()).unwrap(), z);
    }

    #[test]
    fn json_shape() {
        let s = QSeries::from_q_laurent(&XLaurent::from_int_terms(&[(3, 1)]));
        let v: serde_json::Value = serde_json::from_str(&series_to_json(&s)).unwrap();
        assert_eq!(v["scale"], 1);
        assert!(v["trunc"].is_null());
        assert_eq!(v["terms"][0]["q_exp"], 3);
        assert_eq!(v["terms"][0]["x"][0]["num"], "1");
    }

    #[test]
    fn cyclo_roundtrip() {
        let c = &CycloNum::zeta_pow(12, 5) + &CycloNum::from_int(12, -3);
        assert_eq!(cyclo_from_json(&cyclo_to_json(&c)).unwrap(), c);
    }

    #[test]
    fn rejects_garbage() {
        assert!(series_from_json("{\"scale\": 0, \"trunc\": null, \"terms\": []}").is_err());
        assert!(series_from_json("[1]").is_err());
        assert!(series_from_csv("").is_err());
    }
}
