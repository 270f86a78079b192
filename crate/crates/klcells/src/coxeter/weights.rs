use super::{CoxeterMatrix, CoxeterSystem, Element};
use crate::error::{Error, Result};

/// Positive integer weights `p_s`, constant on conjugacy classes of
/// generators.
#[derive(Debug, Clone, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
pub struct WeightFunction {
    weights: Vec<i32>,
}

impl WeightFunction {
    pub fn new(matrix: &CoxeterMatrix, weights: Vec<i32>) -> Result<Self> {
        let n = matrix.rank();
        if weights.len() != n {
            return Err(Error::InvalidWeights(format!(
                "expected {n} weights, got {}",
                weights.len()
            )));
        }
        if let Some(s) = weights.iter().position(|&p| p <= 0) {
            return Err(Error::InvalidWeights(format!(
                "weight of generator {s} must be positive"
            )));
        }
        // generators joined by an odd bond are conjugate
        for s in 0..n {
            for t in s + 1..n {
                if matrix.get(s, t) % 2 == 1 && weights[s] != weights[t] {
                    return Err(Error::InvalidWeights(format!(
                        "generators {s} and {t} are conjugate but have weights {} and {}",
                        weights[s], weights[t]
                    )));
                }
            }
        }
        Ok(Self { weights })
    }

    pub fn equal(matrix: &CoxeterMatrix) -> Self {
        Self {
            weights: vec![1; matrix.rank()],
        }
    }

    pub fn get(&self, s: usize) -> i32 {
        self.weights[s]
    }

    pub fn as_slice(&self) -> &[i32] {
        &self.weights
    }

    pub fn is_equal_parameter(&self) -> bool {
        self.weights.windows(2).all(|w| w[0] == w[1])
    }

    /// Restriction to a parabolic subsystem with generators `gens`.
    pub fn restrict(&self, gens: &[usize]) -> Self {
        Self {
            weights: gens.iter().map(|&s| self.weights[s]).collect(),
        }
    }

    /// `p_w`, summed along a reduced word.
    pub fn of(&self, system: &CoxeterSystem, w: Element) -> i32 {
        system.word(w).iter().map(|&s| self.weights[s as usize]).sum()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coxeter::CoxeterType;

    #[test]
    fn validation() {
        let b3 = CoxeterMatrix::from_type(CoxeterType::B(3)).unwrap();
        assert!(WeightFunction::new(&b3, vec![2, 1, 1]).is_ok());
        assert!(WeightFunction::new(&b3, vec![1, 2, 1]).is_err());
        assert!(WeightFunction::new(&b3, vec![1, 1]).is_err());
        assert!(WeightFunction::new(&b3, vec![0, 1, 1]).is_err());
        let a3 = CoxeterMatrix::from_type(CoxeterType::A(3)).unwrap();
        assert!(WeightFunction::new(&a3, vec![1, 1, 2]).is_err());
    }
}
