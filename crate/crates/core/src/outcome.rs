//! Exact payoff values.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

pub type Rational = BigRational;

/// One exact payoff per player.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Outcome(pub Vec<Rational>);

impl Outcome {
    pub fn new(values: Vec<Rational>) -> Self {
        Outcome(values)
    }

    pub fn from_ints(values: &[i64]) -> Self {
        Outcome(values.iter().map(|&v| int(v)).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn get(&self, player: usize) -> &Rational {
        &self.0[player]
    }

    pub fn values(&self) -> &[Rational] {
        &self.0
    }

    pub fn is_ints(&self, expected: &[i64]) -> bool {
        self.0.len() == expected.len() && self.0.iter().zip(expected).all(|(a, &b)| *a == int(b))
    }
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, v) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", fmt_rational(v))?;
        }
        write!(f, ")")
    }
}

pub fn int(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

/// `INT` or `INT/INT`, optional leading minus on the numerator.
pub fn parse_rational(text: &str) -> Option<Rational> {
    let parse_int = |s: &str| -> Option<BigInt> {
        let digits = s.strip_prefix('-').unwrap_or(s);
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return None;
        }
        s.parse().ok()
    };
    match text.split_once('/') {
        None => parse_int(text).map(Rational::from_integer),
        Some((num, den)) => {
            let num = parse_int(num)?;
            if den.starts_with('-') {
                return None;
            }
            let den = parse_int(den)?;
            if den.is_zero() {
                return None;
            }
            Some(Rational::new(num, den))
        }
    }
}

/// Canonical text form: integers bare, fractions reduced as `p/q`.
pub fn fmt_rational(v: &Rational) -> String {
    if v.is_integer() {
        v.numer().to_string()
    } else {
        let sign = if v.is_negative() { "-" } else { "" };
        format!("{}{}/{}", sign, v.numer().abs(), v.denom())
    }
}

/// Dense ranks of `values`: equal values share a rank, larger values get
/// larger ranks, ranks start at 0.
pub(crate) fn dense_ranks(values: &[&Rational]) -> Vec<u32> {
    let mut sorted: Vec<&Rational> = values.to_vec();
    sorted.sort();
    sorted.dedup();
    values
        .iter()
        .map(|v| sorted.binary_search(v).expect("value present") as u32)
        .collect()
}
