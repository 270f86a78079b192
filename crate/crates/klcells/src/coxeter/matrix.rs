use std::fmt;
use std::str::FromStr;

use super::CyclotomicRing;
use crate::error::{Error, ParseError, Result};

/// Named finite Coxeter types.
///
/// Generator numbering: `A_n` and `H_n` are chains with the exceptional bond
/// (for `H`) between generators 0 and 1; `B_n` has the order-4 bond between
/// 0 and 1; `D_n` attaches both 0 and 1 to 2; `F4` has its order-4 bond
/// between 1 and 2; `E_n` follows Bourbaki shifted to 0-based indices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CoxeterType {
    A(usize),
    B(usize),
    D(usize),
    E(usize),
    F4,
    G2,
    H3,
    H4,
    I2(u32),
}

impl CoxeterType {
    pub fn rank(self) -> usize {
        match self {
            CoxeterType::A(n) | CoxeterType::B(n) | CoxeterType::D(n) | CoxeterType::E(n) => n,
            CoxeterType::F4 | CoxeterType::H4 => 4,
            CoxeterType::H3 => 3,
            CoxeterType::G2 | CoxeterType::I2(_) => 2,
        }
    }

    fn bonds(self) -> Result<Vec<(usize, usize, u32)>> {
        let chain = |n: usize, from: usize| (from..n.saturating_sub(1)).map(|i| (i, i + 1, 3));
        let bonds = match self {
            CoxeterType::A(n) if n >= 1 => chain(n, 0).collect(),
            CoxeterType::B(n) if n >= 2 => {
                let mut v = vec![(0, 1, 4)];
                v.extend(chain(n, 1));
                v
            }
            CoxeterType::D(n) if n >= 4 => {
                let mut v = vec![(0, 2, 3), (1, 2, 3)];
                v.extend(chain(n, 2));
                v
            }
            CoxeterType::E(n) if (6..=8).contains(&n) => {
                let mut v = vec![(0, 2, 3), (1, 3, 3)];
                v.extend(chain(n, 2));
                v
            }
            CoxeterType::F4 => vec![(0, 1, 3), (1, 2, 4), (2, 3, 3)],
            CoxeterType::G2 => vec![(0, 1, 6)],
            CoxeterType::H3 => vec![(0, 1, 5), (1, 2, 3)],
            CoxeterType::H4 => vec![(0, 1, 5), (1, 2, 3), (2, 3, 3)],
            CoxeterType::I2(m) if m >= 2 => vec![(0, 1, m)],
            other => return Err(Error::InvalidMatrix(format!("unsupported type {other}"))),
        };
        Ok(bonds)
    }
}

impl fmt::Display for CoxeterType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoxeterType::A(n) => write!(f, "A{n}"),
            CoxeterType::B(n) => write!(f, "B{n}"),
            CoxeterType::D(n) => write!(f, "D{n}"),
            CoxeterType::E(n) => write!(f, "E{n}"),
            CoxeterType::F4 => write!(f, "F4"),
            CoxeterType::G2 => write!(f, "G2"),
            CoxeterType::H3 => write!(f, "H3"),
            CoxeterType::H4 => write!(f, "H4"),
            CoxeterType::I2(m) => write!(f, "I2({m})"),
        }
    }
}

impl FromStr for CoxeterType {
    type Err = ParseError;

    /// Accepts `A3`, `B4`, `F4`, `G2`, `H3`, `I2(5)` and so on.
    fn from_str(s: &str) -> Result<Self, ParseError> {
        let s = s.trim();
        let bad = || ParseError::new(format!("unknown Coxeter type {s:?}"));
        if let Some(rest) = s.strip_prefix("I2(").and_then(|r| r.strip_suffix(')')) {
            return rest.parse().map(CoxeterType::I2).map_err(|_| bad());
        }
        match s {
            "F4" => return Ok(CoxeterType::F4),
            "G2" => return Ok(CoxeterType::G2),
            "H3" => return Ok(CoxeterType::H3),
            "H4" => return Ok(CoxeterType::H4),
            _ => {}
        }
        let (head, num) = s.split_at(1.min(s.len()));
        let n: usize = num.parse().map_err(|_| bad())?;
        Self::from_family(head, n).ok_or_else(bad)
    }
}

impl CoxeterType {
    /// `("B", 3)` style construction; `H` and `I` families map onto the
    /// exceptional variants.
    pub fn from_family(family: &str, rank: usize) -> Option<Self> {
        match family {
            "A" => Some(CoxeterType::A(rank)),
            "B" | "C" => Some(CoxeterType::B(rank)),
            "D" => Some(CoxeterType::D(rank)),
            "E" => Some(CoxeterType::E(rank)),
            "F" if rank == 4 => Some(CoxeterType::F4),
            "G" if rank == 2 => Some(CoxeterType::G2),
            "H" if rank == 3 => Some(CoxeterType::H3),
            "H" if rank == 4 => Some(CoxeterType::H4),
            _ => None,
        }
    }
}

/// Symmetric Coxeter matrix with finite entries.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CoxeterMatrix {
    entries: Vec<Vec<u32>>,
}

impl CoxeterMatrix {
    pub fn new(entries: Vec<Vec<u32>>) -> Result<Self> {
        let n = entries.len();
        for (i, row) in entries.iter().enumerate() {
            if row.len() != n {
                return Err(Error::InvalidMatrix(format!(
                    "row {i} has length {} (expected {n})",
                    row.len()
                )));
            }
            for (j, &m) in row.iter().enumerate() {
                if i == j && m != 1 {
                    return Err(Error::InvalidMatrix(format!(
                        "diagonal entry m[{i}][{i}] = {m} (must be 1)"
                    )));
                }
                if i != j && m < 2 {
                    return Err(Error::InvalidMatrix(format!(
                        "off-diagonal entry m[{i}][{j}] = {m} (must be >= 2; infinite entries are not supported)"
                    )));
                }
                if entries[j][i] != m {
                    return Err(Error::InvalidMatrix(format!("matrix is not symmetric at ({i},{j})")));
                }
            }
        }
        Ok(Self { entries })
    }

    pub fn from_type(ty: CoxeterType) -> Result<Self> {
        let n = ty.rank();
        let mut entries = vec![vec![2u32; n]; n];
        for (i, row) in entries.iter_mut().enumerate() {
            row[i] = 1;
        }
        for (i, j, m) in ty.bonds()? {
            entries[i][j] = m;
            entries[j][i] = m;
        }
        Self::new(entries)
    }

    pub fn rank(&self) -> usize {
        self.entries.len()
    }

    /// Order of `st`.
    pub fn get(&self, s: usize, t: usize) -> u32 {
        self.entries[s][t]
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.entries
    }

    pub fn restrict(&self, gens: &[usize]) -> CoxeterMatrix {
        CoxeterMatrix {
            entries: gens
                .iter()
                .map(|&s| gens.iter().map(|&t| self.entries[s][t]).collect())
                .collect(),
        }
    }

    /// Edges with `m >= 3` form a forest.
    fn is_forest(&self) -> bool {
        let n = self.rank();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while p[r] != r {
                r = p[r];
            }
            p[x] = r;
            r
        }
        for i in 0..n {
            for j in i + 1..n {
                if self.entries[i][j] >= 3 {
                    let (a, b) = (find(&mut parent, i), find(&mut parent, j));
                    if a == b {
                        return false;
                    }
                    parent[a] = b;
                }
            }
        }
        true
    }

    /// Coefficient ring and Cartan matrix `a[s][t]` with
    /// `s(alpha_t) = alpha_t - a[s][t] alpha_s`.
    ///
    /// On a forest the crystallographic bonds use integer entries
    /// (`-1/-1`, `-1/-2`, `-1/-3`); other bonds, and every bond on a diagram
    /// with a cycle, use the symmetric `-2cos(pi/m)`.
    pub(super) fn cartan(&self) -> Result<(CyclotomicRing, Vec<Vec<Vec<i64>>>)> {
        let n = self.rank();
        let forest = self.is_forest();
        let integral = |m: u32| forest && matches!(m, 2 | 3 | 4 | 6);
        let mut order = 1usize;
        for i in 0..n {
            for j in i + 1..n {
                let m = self.entries[i][j];
                if !integral(m) {
                    if m > 10_000 {
                        return Err(Error::UnsupportedEntry(m));
                    }
                    order = lcm(order, 2 * m as usize);
                }
            }
        }
        let ring = CyclotomicRing::new(order);
        let mut a = vec![vec![ring.zero(); n]; n];
        for i in 0..n {
            a[i][i] = ring.from_int(2);
            for j in i + 1..n {
                let m = self.entries[i][j];
                let (aij, aji) = if integral(m) {
                    let (x, y) = match m {
                        2 => (0, 0),
                        3 => (-1, -1),
                        4 => (-2, -1),
                        _ => (-3, -1),
                    };
                    (ring.from_int(x), ring.from_int(y))
                } else {
                    let c = ring.two_cos_pi_over(m as usize);
                    let neg: Vec<i64> = c.iter().map(|x| -x).collect();
                    (neg.clone(), neg)
                };
                a[i][j] = aij;
                a[j][i] = aji;
            }
        }
        Ok((ring, a))
    }
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn lcm(a: usize, b: usize) -> usize {
    a / gcd(a, b) * b
}
