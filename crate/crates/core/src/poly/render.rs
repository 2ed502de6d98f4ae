//! Text, LaTeX and JSON serialization of [`FactoredRational`].

use std::fmt::Write as _;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed};
use serde::{Deserialize, Serialize};

use super::rational::{BinomFactor, FactoredRational};
use super::ztpoly::ZTPoly;
use crate::error::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Text,
    Latex,
    Json,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "text" => Ok(Format::Text),
            "latex" => Ok(Format::Latex),
            "json" => Ok(Format::Json),
            other => Err(Error::Format(format!("unknown output format {other:?}"))),
        }
    }
}

/// One numerator term in the JSON document.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermDoc {
    pub z: u32,
    pub t: u32,
    pub c: String,
}

/// One denominator factor in the JSON document.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactorDoc {
    pub z: u32,
    pub t: u32,
    pub m: u32,
}

/// The on-disk and CLI JSON shape of a factored rational function.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RationalDoc {
    pub numerator: Vec<TermDoc>,
    pub denominator: Vec<FactorDoc>,
}

impl From<&FactoredRational> for RationalDoc {
    fn from(r: &FactoredRational) -> Self {
        RationalDoc {
            numerator: r
                .numerator()
                .terms()
                .iter()
                .map(|((z, t), c)| TermDoc {
                    z: *z,
                    t: *t,
                    c: c.to_string(),
                })
                .collect(),
            denominator: r
                .denominator()
                .iter()
                .map(|f| FactorDoc {
                    z: f.a,
                    t: f.b,
                    m: f.m,
                })
                .collect(),
        }
    }
}

impl TryFrom<&RationalDoc> for FactoredRational {
    type Error = Error;

    fn try_from(doc: &RationalDoc) -> Result<Self, Error> {
        let mut terms = Vec::with_capacity(doc.numerator.len());
        for term in &doc.numerator {
            let c = BigInt::from_str(&term.c)
                .map_err(|_| Error::Format(format!("bad coefficient {:?}", term.c)))?;
            terms.push(((term.z, term.t), c));
        }
        let factors = doc
            .denominator
            .iter()
            .map(|f| BinomFactor::new(f.z, f.t, f.m))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(FactoredRational::new(ZTPoly::from_terms(terms), factors))
    }
}

impl FactoredRational {
    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Text => render_text(self),
            Format::Latex => render_latex(self),
            Format::Json => serde_json::to_string(&RationalDoc::from(self))
                .expect("rational documents always serialize"),
        }
    }

    pub fn from_json(s: &str) -> Result<Self, Error> {
        let doc: RationalDoc = serde_json::from_str(s)?;
        FactoredRational::try_from(&doc)
    }
}

fn text_factor(f: &BinomFactor) -> String {
    let mono = match (f.a, f.b) {
        (a, 0) => text_var("z", a),
        (0, b) => text_var("t", b),
        (a, b) => format!("{}*{}", text_var("z", a), text_var("t", b)),
    };
    match f.m {
        1 => format!("(1-{mono})"),
        m => format!("(1-{mono})^{m}"),
    }
}

fn text_var(var: &str, e: u32) -> String {
    if e == 1 {
        var.to_string()
    } else {
        format!("{var}^{e}")
    }
}

/// `num/((1-z*t^2)*(1-z^2))`; a multi-term numerator is parenthesized.
fn render_text(r: &FactoredRational) -> String {
    let num = r.numerator().to_string();
    if r.denominator().is_empty() {
        return num;
    }
    let num = if r.numerator().len() > 1 {
        format!("({num})")
    } else {
        num
    };
    let factors: Vec<String> = r.denominator().iter().map(text_factor).collect();
    if factors.len() == 1 && r.denominator()[0].m == 1 {
        format!("{num}/{}", factors[0])
    } else {
        format!("{num}/({})", factors.join("*"))
    }
}

fn latex_var(var: &str, e: u32) -> String {
    match e {
        0 => String::new(),
        1 => var.to_string(),
        e if e < 10 => format!("{var}^{e}"),
        e => format!("{var}^{{{e}}}"),
    }
}

fn latex_poly(p: &ZTPoly) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (idx, ((z, t), c)) in p.terms().iter().enumerate() {
        if c.is_negative() {
            out.push('-');
        } else if idx > 0 {
            out.push('+');
        }
        let mag = c.abs();
        if !mag.is_one() || (*z, *t) == (0, 0) {
            let _ = write!(out, "{mag}");
        }
        out.push_str(&latex_var("z", *z));
        out.push_str(&latex_var("t", *t));
    }
    out
}

/// `\frac{num}{(1-zt)(1-zt^3)(1-z^4)}`.
fn render_latex(r: &FactoredRational) -> String {
    let num = latex_poly(r.numerator());
    if r.denominator().is_empty() {
        return num;
    }
    let mut den = String::new();
    for f in r.denominator() {
        let _ = write!(den, "(1-{}{})", latex_var("z", f.a), latex_var("t", f.b));
        if f.m > 1 {
            let _ = write!(den, "^{{{}}}", f.m);
        }
    }
    format!("\\frac{{{num}}}{{{den}}}")
}
