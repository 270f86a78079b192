//! Rank-two parabolic subgroups `W_{s,t}`: longest elements, the pieces
//! `Gamma_s`, `Gamma_t`, strings of a coset, the string reversal `w -> w~`
//! and the multiset operator `T_{s,t}`.

use super::{CoxeterSystem, Element, GeneratorSet};
use crate::error::{Error, Result};

/// `w_{s,t}` together with `Gamma_s^{s,t}` and `Gamma_t^{s,t}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DihedralData {
    pub longest: Element,
    /// Elements of `W_{s,t}` with right descent set `{s}`.
    pub gamma_s: Vec<Element>,
    /// Elements of `W_{s,t}` with right descent set `{t}`.
    pub gamma_t: Vec<Element>,
}

/// `T_{s,t}(w)` as a two-element multiset (repeated when the intersection
/// has a single member).
pub type TMultiset = [Element; 2];

impl CoxeterSystem {
    fn check_pair(&self, s: usize, t: usize) -> Result<u32> {
        for g in [s, t] {
            if g >= self.rank() {
                return Err(Error::GeneratorOutOfRange(g));
            }
        }
        if s == t {
            return Err(Error::SameGenerator);
        }
        Ok(self.matrix().get(s, t))
    }

    /// `x s t s ...` with `k` letters.
    pub fn alternating_from(&self, x: Element, s: usize, t: usize, k: usize) -> Element {
        (0..k).fold(x, |acc, i| self.right_mul(acc, if i % 2 == 0 { s } else { t }))
    }

    pub fn dihedral_data(&self, s: usize, t: usize) -> Result<DihedralData> {
        let m = self.check_pair(s, t)? as usize;
        let one = Element::IDENTITY;
        let longest = self.alternating_from(one, s, t, m);
        let mut gamma_s = Vec::new();
        let mut gamma_t = Vec::new();
        for k in 1..m {
            for (a, b) in [(s, t), (t, s)] {
                let w = self.alternating_from(one, a, b, k);
                // the last letter is the unique right descent
                if self.is_right_descent(w, s) {
                    gamma_s.push(w);
                } else {
                    gamma_t.push(w);
                }
            }
        }
        gamma_s.sort();
        gamma_t.sort();
        Ok(DihedralData {
            longest,
            gamma_s,
            gamma_t,
        })
    }

    /// `w` lies in `D_R(s,t)`: exactly one of `s`, `t` is a right descent.
    pub fn in_descent_pair(&self, w: Element, s: usize, t: usize) -> bool {
        self.is_right_descent(w, s) != self.is_right_descent(w, t)
    }

    /// Minimal coset representative, first letter and position (1-based) of
    /// `w` in its string.
    fn string_position(&self, w: Element, s: usize, t: usize) -> Result<(Element, usize, usize, usize)> {
        let m = self.check_pair(s, t)? as usize;
        if m < 3 || !self.in_descent_pair(w, s, t) {
            return Err(Error::NotInDescentPair { s, t });
        }
        let pair: GeneratorSet = [s, t].into_iter().collect();
        let (x, u) = self.coset_decompose(w, pair);
        let i = self.length(u);
        let first = if self.alternating_from(Element::IDENTITY, s, t, i) == u {
            s
        } else {
            t
        };
        Ok((x, first, i, m))
    }

    /// The string `(xa, xab, xaba, ...)` of length `m - 1` containing `w`.
    pub fn string_of(&self, w: Element, s: usize, t: usize) -> Result<Vec<Element>> {
        let (x, a, _, m) = self.string_position(w, s, t)?;
        let b = if a == s { t } else { s };
        Ok((1..m).map(|k| self.alternating_from(x, a, b, k)).collect())
    }

    /// Position-reversal inside the string: the `i`th element goes to the
    /// `(m - i)`th.
    pub fn tilde(&self, w: Element, s: usize, t: usize) -> Result<Element> {
        let (x, a, i, m) = self.string_position(w, s, t)?;
        let b = if a == s { t } else { s };
        Ok(self.alternating_from(x, a, b, m - i))
    }

    /// `{ws, wt} ∩ D_R(s,t)` as a multiset of size two.
    pub fn t_operator(&self, w: Element, s: usize, t: usize) -> Result<TMultiset> {
        let m = self.check_pair(s, t)?;
        if m < 3 || !self.in_descent_pair(w, s, t) {
            return Err(Error::NotInDescentPair { s, t });
        }
        let hits: Vec<Element> = [self.right_mul(w, s), self.right_mul(w, t)]
            .into_iter()
            .filter(|&y| self.in_descent_pair(y, s, t))
            .collect();
        match hits.as_slice() {
            [a] => Ok([*a, *a]),
            [a, b] => Ok([*a.min(b), *a.max(b)]),
            _ => unreachable!("T_(s,t) of an element of D_R(s,t) is never empty"),
        }
    }
}
