//! Positional numerals, least significant digit first, and the injective
//! codecs that relate the domains of two Büchi arithmetics.

use std::fmt;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Arbitrary-precision natural number.
pub type Natural = BigUint;

/// A numeral radix, always at least 2.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "u32", into = "u32")]
pub struct Base(u32);

impl Base {
    pub fn new(radix: u32) -> Result<Self> {
        if radix < 2 {
            return Err(Error::InvalidBase(radix));
        }
        Ok(Base(radix))
    }

    pub fn radix(self) -> u32 {
        self.0
    }

    /// `Some(k)` when the radix is `k²`.
    pub fn square_root(self) -> Option<Base> {
        let r = (self.0 as f64).sqrt().round() as u32;
        (r * r == self.0 && r >= 2).then_some(Base(r))
    }

    pub fn squared(self) -> Result<Base> {
        self.0
            .checked_mul(self.0)
            .map(Base)
            .ok_or(Error::InvalidBase(u32::MAX))
    }

    pub fn succ(self) -> Result<Base> {
        self.0.checked_add(1).map(Base).ok_or(Error::InvalidBase(u32::MAX))
    }
}

impl TryFrom<u32> for Base {
    type Error = Error;

    fn try_from(radix: u32) -> Result<Self> {
        Base::new(radix)
    }
}

impl From<Base> for u32 {
    fn from(b: Base) -> u32 {
        b.0
    }
}

impl fmt::Display for Base {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Digits of a natural in some base, LSD first, without trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DigitSeq {
    base: Base,
    digits: Vec<u32>,
}

impl DigitSeq {
    /// Validates every digit and drops trailing zeros.
    pub fn new(base: Base, mut digits: Vec<u32>) -> Result<Self> {
        if let Some(&digit) = digits.iter().find(|&&d| d >= base.radix()) {
            return Err(Error::InvalidDigit { digit, radix: base.radix() });
        }
        while digits.last() == Some(&0) {
            digits.pop();
        }
        Ok(DigitSeq { base, digits })
    }

    pub fn base(&self) -> Base {
        self.base
    }

    pub fn digits(&self) -> &[u32] {
        &self.digits
    }

    pub fn len(&self) -> usize {
        self.digits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.digits.is_empty()
    }

    pub fn into_digits(self) -> Vec<u32> {
        self.digits
    }

    pub fn value(&self) -> Natural {
        fold_digits(self.base, &self.digits)
    }
}

fn fold_digits(base: Base, digits: &[u32]) -> Natural {
    digits.iter().rev().fold(Natural::zero(), |acc, &d| acc * base.radix() + d)
}

pub fn to_digits(x: &Natural, base: Base) -> DigitSeq {
    let radix = Natural::from(base.radix());
    let mut digits = Vec::new();
    let mut rest = x.clone();
    while !rest.is_zero() {
        let (q, r) = rest.div_rem(&radix);
        digits.push(r.to_u32().expect("remainder below radix"));
        rest = q;
    }
    DigitSeq { base, digits }
}

/// Reads an LSD-first digit slice; trailing zeros are ignored.
pub fn from_digits(digits: &[u32], base: Base) -> Result<Natural> {
    if let Some(&digit) = digits.iter().find(|&&d| d >= base.radix()) {
        return Err(Error::InvalidDigit { digit, radix: base.radix() });
    }
    Ok(fold_digits(base, digits))
}

/// Coefficient of `radix^position` in `x`.
pub fn digit_at(x: &Natural, base: Base, position: usize) -> u32 {
    to_digits(x, base).digits.get(position).copied().unwrap_or(0)
}

/// The interleaving bijection `ℕ^m → ℕ`: digit `l` of `xs[i]` lands at
/// position `m·l + i` of the result.
pub fn interleave_encode(xs: &[Natural], base: Base) -> Natural {
    let m = xs.len();
    if m == 1 {
        return xs[0].clone();
    }
    let seqs: Vec<DigitSeq> = xs.iter().map(|x| to_digits(x, base)).collect();
    let width = seqs.iter().map(DigitSeq::len).max().unwrap_or(0);
    let mut digits = vec![0; width * m];
    for (i, seq) in seqs.iter().enumerate() {
        for (l, &d) in seq.digits.iter().enumerate() {
            digits[m * l + i] = d;
        }
    }
    fold_digits(base, &digits)
}

pub fn interleave_decode(x: &Natural, base: Base, m: usize) -> Vec<Natural> {
    assert!(m >= 1, "interleave arity must be positive");
    if m == 1 {
        return vec![x.clone()];
    }
    let seq = to_digits(x, base);
    let mut parts = vec![Vec::new(); m];
    for (p, &d) in seq.digits.iter().enumerate() {
        parts[p % m].push(d);
    }
    parts.iter().map(|ds| fold_digits(base, ds)).collect()
}

/// Base-`k²` number to base-`k`: each digit `k·l + m` becomes `l` followed by
/// `m`, with `l` at the lower position.
pub fn pairgroup_encode(x: &Natural, k: Base) -> Natural {
    let wide = Base(k.radix() * k.radix());
    let mut digits = Vec::new();
    for &d in to_digits(x, wide).digits() {
        digits.push(d / k.radix());
        digits.push(d % k.radix());
    }
    fold_digits(k, &digits)
}

/// Inverse of [`pairgroup_encode`]; odd-length inputs are padded with one
/// trailing zero digit before grouping.
pub fn pairgroup_decode(y: &Natural, k: Base) -> Natural {
    let wide = Base(k.radix() * k.radix());
    let mut digits = to_digits(y, k).into_digits();
    if digits.len() % 2 == 1 {
        digits.push(0);
    }
    let grouped: Vec<u32> = digits.chunks(2).map(|p| k.radix() * p[0] + p[1]).collect();
    fold_digits(wide, &grouped)
}

/// Rereads the base-`k` digits of `x` as a base-`k+1` numeral.
pub fn digitavoid_encode(x: &Natural, k: Base) -> Natural {
    fold_digits(Base(k.radix() + 1), to_digits(x, k).digits())
}

/// Rereads the base-`k+1` digits of `y` in base `k`; fails when digit `k` occurs.
pub fn digitavoid_decode(y: &Natural, k: Base) -> Result<Natural> {
    let wide = Base(k.radix() + 1);
    let seq = to_digits(y, wide);
    if seq.digits.contains(&k.radix()) {
        return Err(Error::DigitPresent {
            value: y.to_string(),
            digit: k.radix(),
            radix: wide.radix(),
        });
    }
    Ok(fold_digits(k, seq.digits()))
}

/// Most significant digit first; digits above 9 are separated by dots.
impl fmt::Display for DigitSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.digits.is_empty() {
            return f.write_str("0");
        }
        let sep = if self.base.radix() > 10 { "." } else { "" };
        let text: Vec<String> = self.digits.iter().rev().map(u32::to_string).collect();
        f.write_str(&text.join(sep))
    }
}

/// Injective map from elements of a source structure (tuples of naturals)
/// into the naturals of a target Büchi arithmetic.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Codec {
    /// `ℕ^m → ℕ` by digit interleaving in one base.
    Interleave { m: usize, base: Base },
    /// Base `k²` into base `k`.
    PairGroup { k: Base },
    /// Base `k` into base `k+1`, avoiding digit `k`.
    DigitAvoid { k: Base },
    /// Components applied left to right. Only the first may be multi-ary.
    Compose(Vec<Codec>),
}

impl Codec {
    pub fn identity() -> Codec {
        Codec::Compose(Vec::new())
    }

    /// Number of naturals making up one source element.
    pub fn source_arity(&self) -> usize {
        match self {
            Codec::Interleave { m, .. } => *m,
            Codec::PairGroup { .. } | Codec::DigitAvoid { .. } => 1,
            Codec::Compose(parts) => parts.first().map_or(1, Codec::source_arity),
        }
    }

    pub fn source_base(&self) -> Option<Base> {
        match self {
            Codec::Interleave { base, .. } => Some(*base),
            Codec::PairGroup { k } => Some(Base(k.radix() * k.radix())),
            Codec::DigitAvoid { k } => Some(*k),
            Codec::Compose(parts) => parts.first().and_then(Codec::source_base),
        }
    }

    pub fn target_base(&self) -> Option<Base> {
        match self {
            Codec::Interleave { base, .. } => Some(*base),
            Codec::PairGroup { k } => Some(*k),
            Codec::DigitAvoid { k } => Some(Base(k.radix() + 1)),
            Codec::Compose(parts) => parts.last().and_then(Codec::target_base),
        }
    }

    /// Checks arities and that consecutive components agree on bases.
    pub fn validate(&self) -> Result<()> {
        match self {
            Codec::Interleave { m, .. } if *m == 0 => {
                Err(Error::InvalidCodec("interleave arity must be positive".into()))
            }
            Codec::PairGroup { k } if k.radix().checked_mul(k.radix()).is_none() => {
                Err(Error::InvalidCodec(format!("radix {k} squared overflows")))
            }
            Codec::DigitAvoid { k } if k.radix() == u32::MAX => {
                Err(Error::InvalidCodec(format!("radix {k} has no successor")))
            }
            Codec::Compose(parts) => {
                for (i, part) in parts.iter().enumerate() {
                    part.validate()?;
                    if i > 0 && part.source_arity() != 1 {
                        return Err(Error::InvalidCodec(
                            "only the first composed codec may be multi-ary".into(),
                        ));
                    }
                }
                for pair in parts.windows(2) {
                    if pair[0].target_base() != pair[1].source_base() {
                        return Err(Error::InvalidCodec(format!(
                            "base mismatch between {:?} and {:?}",
                            pair[0], pair[1]
                        )));
                    }
                }
                Ok(())
            }
            _ => Ok(()),
        }
    }

    pub fn apply(&self, xs: &[Natural]) -> Result<Natural> {
        if xs.len() != self.source_arity() {
            return Err(Error::ArityMismatch { expected: self.source_arity(), found: xs.len() });
        }
        Ok(match self {
            Codec::Interleave { base, .. } => interleave_encode(xs, *base),
            Codec::PairGroup { k } => pairgroup_encode(&xs[0], *k),
            Codec::DigitAvoid { k } => digitavoid_encode(&xs[0], *k),
            Codec::Compose(parts) => match parts.split_first() {
                None => xs[0].clone(),
                Some((first, rest)) => {
                    let mut y = first.apply(xs)?;
                    for part in rest {
                        y = part.apply(std::slice::from_ref(&y))?;
                    }
                    y
                }
            },
        })
    }

    /// `None` when `y` is outside the image of [`Codec::apply`].
    pub fn invert(&self, y: &Natural) -> Option<Vec<Natural>> {
        match self {
            Codec::Interleave { m, base } => Some(interleave_decode(y, *base, *m)),
            Codec::PairGroup { k } => Some(vec![pairgroup_decode(y, *k)]),
            Codec::DigitAvoid { k } => digitavoid_decode(y, *k).ok().map(|x| vec![x]),
            Codec::Compose(parts) => {
                let mut xs = vec![y.clone()];
                for part in parts.iter().rev() {
                    if xs.len() != 1 {
                        return None;
                    }
                    xs = part.invert(&xs[0])?;
                }
                Some(xs)
            }
        }
    }

    pub fn contains(&self, y: &Natural) -> bool {
        self.invert(y).is_some()
    }
}
