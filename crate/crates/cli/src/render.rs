//! Text, LaTeX and JSON renderings of elements and partition combinations.
//!
//! Terms are listed in graded-lex descending order of partitions and each
//! `β`-coefficient in ascending order of exponent, so equal inputs give equal
//! bytes.

use grothendieck::algebra::BetaScalar;
use grothendieck::symfunc::Partition;
use num_bigint::{BigInt, Sign};
use num_traits::{One, Signed};
use serde::{Deserialize, Serialize};
use serde_json::Number;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Latex,
    Text,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub partition: Vec<u32>,
    pub coeff: Vec<(u32, Number)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CapsJson {
    pub n_vars: usize,
    pub max_degree: u32,
}

/// Output of `compute`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ElementJson {
    pub family: String,
    pub shape: Vec<u32>,
    pub method: String,
    pub basis: String,
    pub terms: Vec<TermJson>,
    pub caps: CapsJson,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExpansionParams {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub s: Option<Vec<u32>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mu: Option<Vec<u32>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub shape: Option<Vec<u32>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rows: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cols: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub i: Option<usize>,
}

/// Output of `expand`: `Σ c_ν F_ν` with `F` the family.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExpansionJson {
    pub family: String,
    pub expansion: String,
    pub params: ExpansionParams,
    pub terms: Vec<TermJson>,
}

pub fn terms_json<'a, I>(terms: I) -> Vec<TermJson>
where
    I: IntoIterator<Item = (&'a Partition, &'a BetaScalar)>,
{
    terms
        .into_iter()
        .map(|(p, c)| TermJson {
            partition: p.parts().to_vec(),
            coeff: c
                .terms()
                .map(|(e, k)| (e, k.to_string().parse().expect("integers are valid JSON numbers")))
                .collect(),
        })
        .collect()
}

/// Compact JSON followed by a newline.
pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string(value).expect("output types serialize");
    s.push('\n');
    s
}

fn beta_power(e: u32, latex: bool) -> String {
    match (e, latex) {
        (0, _) => String::new(),
        (1, true) => "\\beta".into(),
        (1, false) => "b".into(),
        (e, true) => format!("\\beta^{{{e}}}"),
        (e, false) => format!("b^{e}"),
    }
}

/// A `β`-polynomial with its leading sign split off, so that it can follow
/// `+` or `-` in a sum. Multi-term coefficients are parenthesized.
fn signed_coeff(c: &BetaScalar, latex: bool) -> (bool, String) {
    let terms: Vec<(u32, &BigInt)> = c.terms().collect();
    if let [(e, k)] = terms[..] {
        let neg = k.sign() == Sign::Minus;
        let mag = k.abs();
        let num = if mag.is_one() && e > 0 {
            String::new()
        } else {
            mag.to_string()
        };
        let sep = if num.is_empty() || e == 0 || latex { "" } else { " " };
        return (neg, format!("{num}{sep}{}", beta_power(e, latex)));
    }
    let mut s = String::new();
    for (idx, (e, k)) in terms.iter().enumerate() {
        let (neg, body) = signed_coeff(&BetaScalar::monomial((*k).clone(), *e), latex);
        match (idx, neg) {
            (0, true) => s.push('-'),
            (0, false) => {}
            (_, true) => s.push_str(" - "),
            (_, false) => s.push_str(" + "),
        }
        s.push_str(&body);
    }
    (false, format!("({s})"))
}

/// `Σ c_ν X_ν` where `X_ν` is `symbol(ν)`; `None` marks the constant term.
fn linear_sum<'a, I>(terms: I, latex: bool, symbol: impl Fn(&Partition) -> Option<String>) -> String
where
    I: IntoIterator<Item = (&'a Partition, &'a BetaScalar)>,
{
    let mut out = String::new();
    for (idx, (p, c)) in terms.into_iter().enumerate() {
        let (neg, coeff) = signed_coeff(c, latex);
        match (idx, neg) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        match symbol(p) {
            None => out.push_str(&coeff),
            Some(basis) if coeff == "1" => out.push_str(&basis),
            Some(basis) => {
                out.push_str(&coeff);
                out.push(' ');
                out.push_str(&basis);
            }
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out.push('\n');
    out
}

/// `family` is `"G"` or `"g"`.
pub fn combo_text<'a, I>(family: &str, terms: I, format: Format) -> String
where
    I: IntoIterator<Item = (&'a Partition, &'a BetaScalar)>,
{
    let latex = format == Format::Latex;
    linear_sum(terms, latex, |p| {
        Some(if latex {
            let label = if p.is_empty() {
                "\\varnothing".to_string()
            } else {
                p.to_string()
            };
            format!("{family}_{{{label}}}")
        } else {
            format!("{family}({p})")
        })
    })
}

/// LaTeX for an element in the basis named by `symbol` (`s`, `m` or `h`).
pub fn element_latex<'a, I>(symbol: &str, terms: I) -> String
where
    I: IntoIterator<Item = (&'a Partition, &'a BetaScalar)>,
{
    linear_sum(terms, true, |p| (!p.is_empty()).then(|| format!("{symbol}_{{{p}}}")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use grothendieck::pieri::PartitionCombo;
    use grothendieck::symfunc::part;

    fn b(c: i64, e: u32) -> BetaScalar {
        BetaScalar::monomial(c.into(), e)
    }

    #[test]
    fn coefficients() {
        assert_eq!(signed_coeff(&b(1, 0), false), (false, "1".into()));
        assert_eq!(signed_coeff(&b(-2, 1), false), (true, "2 b".into()));
        assert_eq!(signed_coeff(&b(-1, 3), true), (true, "\\beta^{3}".into()));
        let two = BetaScalar::from_terms([(0, 1.into()), (1, (-2).into())]);
        assert_eq!(signed_coeff(&two, false), (false, "(1 - 2 b)".into()));
    }

    #[test]
    fn combos() {
        let c = PartitionCombo::from_terms([
            (part(&[3]), b(1, 0)),
            (part(&[2, 1]), b(1, 0)),
            (part(&[2, 2]), b(-1, 1)),
        ]);
        assert_eq!(
            combo_text("G", c.canonical_terms(), Format::Text),
            "-b G(2,2) + G(3) + G(2,1)\n"
        );
        assert_eq!(
            combo_text("G", c.canonical_terms(), Format::Latex),
            "-\\beta G_{2,2} + G_{3} + G_{2,1}\n"
        );
        assert_eq!(
            combo_text("g", PartitionCombo::zero().canonical_terms(), Format::Text),
            "0\n"
        );
        let e = PartitionCombo::single(Partition::empty());
        assert_eq!(
            combo_text("G", e.canonical_terms(), Format::Latex),
            "G_{\\varnothing}\n"
        );
    }

    #[test]
    fn element_constants() {
        let one = [(Partition::empty(), b(1, 0))];
        assert_eq!(element_latex("s", one.iter().map(|(p, c)| (p, c))), "1\n");
        let t = [(part(&[1]), b(1, 0)), (Partition::empty(), b(-1, 0))];
        assert_eq!(element_latex("s", t.iter().map(|(p, c)| (p, c))), "s_{1} - 1\n");
    }
}
