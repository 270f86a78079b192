//! Orders of permutation groups by a deterministic Schreier–Sims
//! stabiliser chain.
//!
//! Permutations act on `0..n` and are stored as image vectors; products are
//! read left to right (`(a * b)[i] = b[a[i]]`). Transversals are kept as
//! Schreier vectors so memory stays linear in `n` per level, which matters
//! once `n` is in the tens of thousands.

use std::fmt;

use num_bigint::BigUint;

pub type Perm = Vec<u32>;

fn identity(n: usize) -> Perm {
    (0..n as u32).collect()
}

fn is_identity(p: &[u32]) -> bool {
    p.iter().enumerate().all(|(i, &x)| i as u32 == x)
}

fn compose(a: &[u32], b: &[u32]) -> Perm {
    a.iter().map(|&x| b[x as usize]).collect()
}

fn invert(a: &[u32]) -> Perm {
    let mut inv = vec![0u32; a.len()];
    for (i, &x) in a.iter().enumerate() {
        inv[x as usize] = i as u32;
    }
    inv
}

const NOT_IN_ORBIT: u32 = u32::MAX;
const ROOT: u32 = u32::MAX - 1;

#[derive(Debug, Clone)]
struct Level {
    point: u32,
    gens: Vec<Perm>,
    inverses: Vec<Perm>,
    /// `back[x]` is the index of the generator that first reached `x`.
    back: Vec<u32>,
    orbit: Vec<u32>,
}

impl Level {
    fn new(point: u32, n: usize) -> Self {
        let mut level = Self {
            point,
            gens: Vec::new(),
            inverses: Vec::new(),
            back: vec![NOT_IN_ORBIT; n],
            orbit: Vec::new(),
        };
        level.rebuild_orbit();
        level
    }

    fn add_generator(&mut self, g: Perm) {
        self.inverses.push(invert(&g));
        self.gens.push(g);
        self.rebuild_orbit();
    }

    fn rebuild_orbit(&mut self) {
        self.back.iter_mut().for_each(|b| *b = NOT_IN_ORBIT);
        self.back[self.point as usize] = ROOT;
        self.orbit = vec![self.point];
        let mut head = 0;
        while head < self.orbit.len() {
            let x = self.orbit[head];
            for (k, g) in self.gens.iter().enumerate() {
                let y = g[x as usize];
                if self.back[y as usize] == NOT_IN_ORBIT {
                    self.back[y as usize] = k as u32;
                    self.orbit.push(y);
                }
            }
            head += 1;
        }
    }

    fn contains(&self, x: u32) -> bool {
        self.back[x as usize] != NOT_IN_ORBIT
    }

    /// `h * u_x^{-1}`, where `u_x` maps the base point to `x`.
    fn strip_by(&self, h: &mut Perm, x: u32) {
        let mut x = x;
        while self.back[x as usize] != ROOT {
            let k = self.back[x as usize] as usize;
            let inv = &self.inverses[k];
            *h = compose(h, inv);
            x = inv[x as usize];
        }
    }

    /// The transversal element `u_x`.
    fn transversal(&self, x: u32) -> Perm {
        let mut u = identity(self.back.len());
        self.strip_by(&mut u, x);
        invert(&u)
    }
}

/// A base and strong generating set for the group generated by some
/// permutations.
#[derive(Debug, Clone)]
pub struct StabilizerChain {
    degree: usize,
    levels: Vec<Level>,
}

impl StabilizerChain {
    pub fn new(degree: usize, generators: &[Perm]) -> Self {
        for g in generators {
            assert_eq!(g.len(), degree, "permutation of the wrong degree");
        }
        let mut chain = Self {
            degree,
            levels: Vec::new(),
        };
        let gens: Vec<Perm> = generators.iter().filter(|g| !is_identity(g)).cloned().collect();
        for g in &gens {
            if chain.levels.iter().all(|l| g[l.point as usize] == l.point) {
                let moved = g
                    .iter()
                    .enumerate()
                    .position(|(i, &x)| i as u32 != x)
                    .expect("non-identity");
                chain.levels.push(Level::new(moved as u32, degree));
            }
        }
        for g in gens {
            for i in 0..chain.levels.len() {
                chain.levels[i].add_generator(g.clone());
                if g[chain.levels[i].point as usize] != chain.levels[i].point {
                    break;
                }
            }
        }
        chain.complete();
        chain
    }

    /// Sifts `h` through levels `from..`; returns the residue and the level
    /// where sifting stopped (`levels.len()` if it went through).
    fn strip(&self, mut h: Perm, from: usize) -> (Perm, usize) {
        for (j, level) in self.levels.iter().enumerate().skip(from) {
            let x = h[level.point as usize];
            if !level.contains(x) {
                return (h, j);
            }
            level.strip_by(&mut h, x);
        }
        let k = self.levels.len();
        (h, k)
    }

    fn complete(&mut self) {
        let mut i = self.levels.len() as isize - 1;
        while i >= 0 {
            let lvl = i as usize;
            match self.find_failing_schreier_generator(lvl) {
                None => i -= 1,
                Some((h, j)) => {
                    if j == self.levels.len() {
                        let moved = h
                            .iter()
                            .enumerate()
                            .position(|(x, &y)| x as u32 != y)
                            .expect("non-identity");
                        self.levels.push(Level::new(moved as u32, self.degree));
                    }
                    for l in lvl + 1..=j {
                        self.levels[l].add_generator(h.clone());
                    }
                    i = j as isize;
                }
            }
        }
    }

    fn find_failing_schreier_generator(&self, lvl: usize) -> Option<(Perm, usize)> {
        let level = &self.levels[lvl];
        for &x in &level.orbit {
            let ux = level.transversal(x);
            for (k, g) in level.gens.iter().enumerate() {
                let y = g[x as usize];
                if level.back[y as usize] == k as u32 && level.inverses[k][y as usize] == x {
                    continue; // tree edge: the Schreier generator is trivial
                }
                let mut h = compose(&ux, g);
                level.strip_by(&mut h, y);
                let (residue, j) = self.strip(h, lvl + 1);
                if j < self.levels.len() || !is_identity(&residue) {
                    return Some((residue, j));
                }
            }
        }
        None
    }

    pub fn base(&self) -> Vec<u32> {
        self.levels.iter().map(|l| l.point).collect()
    }

    pub fn orbit_sizes(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.orbit.len()).collect()
    }

    pub fn order(&self) -> GroupOrder {
        GroupOrder::from_factors_of(self.orbit_sizes().into_iter().map(|x| x as u64))
    }

    /// Membership test by sifting.
    pub fn contains(&self, p: &[u32]) -> bool {
        let (h, j) = self.strip(p.to_vec(), 0);
        j == self.levels.len() && is_identity(&h)
    }
}

/// An exact group order together with its prime factorisation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupOrder {
    pub order: BigUint,
    /// `(prime, exponent)` by increasing prime.
    pub factors: Vec<(u64, u32)>,
}

impl GroupOrder {
    fn from_factors_of(parts: impl Iterator<Item = u64>) -> Self {
        let mut order = BigUint::from(1u32);
        let mut factors: std::collections::BTreeMap<u64, u32> = Default::default();
        for mut x in parts {
            order *= x;
            let mut p = 2u64;
            while p * p <= x {
                while x % p == 0 {
                    *factors.entry(p).or_default() += 1;
                    x /= p;
                }
                p += 1;
            }
            if x > 1 {
                *factors.entry(x).or_default() += 1;
            }
        }
        Self {
            order,
            factors: factors.into_iter().collect(),
        }
    }

    /// `prod p^e` for the given factorisation.
    pub fn from_factorization(factors: &[(u64, u32)]) -> BigUint {
        factors
            .iter()
            .fold(BigUint::from(1u32), |acc, &(p, e)| acc * BigUint::from(p).pow(e))
    }
}

impl fmt::Display for GroupOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self
            .factors
            .iter()
            .map(|&(p, e)| if e == 1 { p.to_string() } else { format!("{p}^{e}") })
            .collect();
        write!(f, "{}", parts.join(" * "))
    }
}

/// Order of the group generated by `generators` acting on `0..degree`.
pub fn permutation_group_order(degree: usize, generators: &[Perm]) -> GroupOrder {
    StabilizerChain::new(degree, generators).order()
}
