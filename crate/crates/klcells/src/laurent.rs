//! Exact sparse Laurent polynomials in one variable `v` with integer
//! coefficients.
//!
//! A [`LaurentPoly`] stores its terms as a list of `(exponent, coefficient)`
//! pairs sorted by increasing exponent with no zero coefficients, so
//! structural equality is mathematical equality. Coefficients are `i64`;
//! every arithmetic step is overflow-checked and overflow panics.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::ParseError;

/// Element of `Z[v, v^-1]`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct LaurentPoly {
    terms: Vec<(i32, i64)>,
}

fn checked_add(a: i64, b: i64) -> i64 {
    a.checked_add(b).expect("Laurent coefficient overflow")
}

fn checked_mul(a: i64, b: i64) -> i64 {
    a.checked_mul(b).expect("Laurent coefficient overflow")
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::monomial(1, 0)
    }

    /// `coeff * v^exp`.
    pub fn monomial(coeff: i64, exp: i32) -> Self {
        if coeff == 0 {
            Self::zero()
        } else {
            Self {
                terms: vec![(exp, coeff)],
            }
        }
    }

    /// `v^a + v^-a`, the eigenvalue of `C'_s` on `C'_y` when `sy < y`.
    pub fn v_sym(a: i32) -> Self {
        Self::monomial(1, a) + Self::monomial(1, -a)
    }

    /// Builds a polynomial from arbitrary `(exponent, coefficient)` pairs,
    /// combining repeated exponents and dropping zeros.
    pub fn from_terms<I: IntoIterator<Item = (i32, i64)>>(terms: I) -> Self {
        let mut terms: Vec<(i32, i64)> = terms.into_iter().collect();
        terms.sort_by_key(|&(e, _)| e);
        let mut out: Vec<(i32, i64)> = Vec::with_capacity(terms.len());
        for (e, c) in terms {
            match out.last_mut() {
                Some((le, lc)) if *le == e => *lc = checked_add(*lc, c),
                _ => out.push((e, c)),
            }
        }
        out.retain(|&(_, c)| c != 0);
        Self { terms: out }
    }

    /// Terms in increasing exponent order.
    pub fn terms(&self) -> &[(i32, i64)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms == [(0, 1)]
    }

    pub fn coeff(&self, exp: i32) -> i64 {
        self.terms
            .binary_search_by_key(&exp, |&(e, _)| e)
            .map(|i| self.terms[i].1)
            .unwrap_or(0)
    }

    /// Highest exponent, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<i32> {
        self.terms.last().map(|&(e, _)| e)
    }

    /// Lowest exponent, or `None` for the zero polynomial.
    pub fn low_degree(&self) -> Option<i32> {
        self.terms.first().map(|&(e, _)| e)
    }

    /// The bar involution `v^a -> v^-a`.
    pub fn bar(&self) -> Self {
        Self {
            terms: self.terms.iter().rev().map(|&(e, c)| (-e, c)).collect(),
        }
    }

    pub fn is_bar_invariant(&self) -> bool {
        let n = self.terms.len();
        (0..n).all(|i| {
            let (e, c) = self.terms[i];
            let (f, d) = self.terms[n - 1 - i];
            e == -f && c == d
        })
    }

    /// Multiplies by `v^k`.
    pub fn shift(&self, k: i32) -> Self {
        Self {
            terms: self.terms.iter().map(|&(e, c)| (e + k, c)).collect(),
        }
    }

    pub fn scale(&self, k: i64) -> Self {
        if k == 0 {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|&(e, c)| (e, checked_mul(c, k))).collect(),
        }
    }

    /// Splits into the parts with negative, zero and positive exponents.
    pub fn split_by_sign(&self) -> (Self, Self, Self) {
        let mut neg = Vec::new();
        let mut zero = Vec::new();
        let mut pos = Vec::new();
        for &(e, c) in &self.terms {
            match e.cmp(&0) {
                Ordering::Less => neg.push((e, c)),
                Ordering::Equal => zero.push((e, c)),
                Ordering::Greater => pos.push((e, c)),
            }
        }
        (Self { terms: neg }, Self { terms: zero }, Self { terms: pos })
    }

    /// All exponents strictly negative (membership in `A_{<0}`).
    pub fn is_strictly_negative(&self) -> bool {
        self.degree().is_none_or(|d| d < 0)
    }

    /// All exponents non-positive (membership in `A_{<=0}`).
    pub fn is_non_positive(&self) -> bool {
        self.degree().is_none_or(|d| d <= 0)
    }

    /// The unique bar-invariant polynomial congruent to `self` modulo
    /// `A_{<0}`: keeps the constant and positive terms and mirrors the
    /// positive ones.
    pub fn bar_symmetrize_nonneg(&self) -> Self {
        let (_, zero, pos) = self.split_by_sign();
        let mirrored = pos.bar();
        mirrored + zero + pos
    }

    fn merge(&self, other: &Self, sign: i64) -> Self {
        let (a, b) = (&self.terms, &other.terms);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                Ordering::Greater => {
                    out.push((b[j].0, checked_mul(sign, b[j].1)));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = checked_add(a[i].1, checked_mul(sign, b[j].1));
                    if c != 0 {
                        out.push((a[i].0, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend(b[j..].iter().map(|&(e, c)| (e, checked_mul(sign, c))));
        Self { terms: out }
    }

    /// `self += coeff * v^shift * other`, the inner loop of the basis
    /// recursions.
    pub fn add_scaled_shifted(&mut self, other: &Self, coeff: i64, shift: i32) {
        if other.is_zero() || coeff == 0 {
            return;
        }
        let scaled = Self {
            terms: other
                .terms
                .iter()
                .map(|&(e, c)| (e + shift, checked_mul(c, coeff)))
                .collect(),
        };
        *self = self.merge(&scaled, 1);
    }
}

impl Add for LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: Self) -> Self {
        self.merge(&rhs, 1)
    }
}

impl<'a> Add<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.merge(rhs, 1)
    }
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        *self = self.merge(rhs, 1);
    }
}

impl Sub for LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: Self) -> Self {
        self.merge(&rhs, -1)
    }
}

impl<'a> Sub<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.merge(rhs, -1)
    }
}

impl SubAssign<&LaurentPoly> for LaurentPoly {
    fn sub_assign(&mut self, rhs: &LaurentPoly) {
        *self = self.merge(rhs, -1);
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> Self {
        self.scale(-1)
    }
}

impl<'a> Mul<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() || rhs.is_zero() {
            return LaurentPoly::zero();
        }
        let mut acc = Vec::with_capacity(self.terms.len() * rhs.terms.len());
        for &(e, c) in &self.terms {
            for &(f, d) in &rhs.terms {
                acc.push((e + f, checked_mul(c, d)));
            }
        }
        LaurentPoly::from_terms(acc)
    }
}

impl Mul for LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: Self) -> Self {
        &self * &rhs
    }
}

impl fmt::Display for LaurentPoly {
    /// Renders as `c_k*v^k + ...` with exponents descending, e.g.
    /// `v^2 + 2 - 3*v^-1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, &(e, c)) in self.terms.iter().rev().enumerate() {
            let mag = c.unsigned_abs();
            if i == 0 {
                if c < 0 {
                    write!(f, "-")?;
                }
            } else if c < 0 {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            match (e, mag) {
                (0, _) => write!(f, "{mag}")?,
                (_, 1) => write_power(f, e)?,
                _ => {
                    write!(f, "{mag}*")?;
                    write_power(f, e)?;
                }
            }
        }
        Ok(())
    }
}

fn write_power(f: &mut fmt::Formatter<'_>, e: i32) -> fmt::Result {
    if e == 1 {
        write!(f, "v")
    } else {
        write!(f, "v^{e}")
    }
}

impl FromStr for LaurentPoly {
    type Err = ParseError;

    /// Parses the rendering produced by `Display`; whitespace is ignored and
    /// exponents may be written `v^-2` or `v^(-2)`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let src: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if src.is_empty() {
            return Err(ParseError::new("empty polynomial"));
        }
        let bytes = src.as_bytes();
        let mut terms = Vec::new();
        let mut pos = 0;
        while pos < bytes.len() {
            let mut sign = 1i64;
            if bytes[pos] == b'+' || bytes[pos] == b'-' {
                if bytes[pos] == b'-' {
                    sign = -1;
                }
                pos += 1;
            } else if pos != 0 {
                return Err(ParseError::new(format!("expected sign at offset {pos} in {s:?}")));
            }
            // term ends at the next '+' or '-' that is not part of an exponent
            let start = pos;
            while pos < bytes.len() {
                let b = bytes[pos];
                if (b == b'+' || b == b'-') && pos > start && !matches!(bytes[pos - 1], b'^' | b'(') {
                    break;
                }
                pos += 1;
            }
            terms.push(parse_term(&src[start..pos], sign)?);
        }
        Ok(Self::from_terms(terms))
    }
}

fn parse_term(t: &str, sign: i64) -> Result<(i32, i64), ParseError> {
    let bad = || ParseError::new(format!("malformed term {t:?}"));
    let (coeff_part, power_part) = match t.find('v') {
        Some(i) => (&t[..i], Some(&t[i + 1..])),
        None => (t, None),
    };
    let coeff_part = coeff_part.strip_suffix('*').unwrap_or(coeff_part);
    let coeff: i64 = if coeff_part.is_empty() {
        if power_part.is_none() {
            return Err(bad());
        }
        1
    } else {
        coeff_part.parse().map_err(|_| bad())?
    };
    let exp: i32 = match power_part {
        None => 0,
        Some("") => 1,
        Some(p) => {
            let p = p.strip_prefix('^').ok_or_else(bad)?;
            let p = p.strip_prefix('(').and_then(|q| q.strip_suffix(')')).unwrap_or(p);
            p.parse().map_err(|_| bad())?
        }
    };
    Ok((exp, sign * coeff))
}
