//! Exact evaluation of `χ^T(D) = ∏_{α∨>0} ⟨D, α∨⟩ / ⟨ρ, α∨⟩`, the Weyl
//! dimension formula and the volume polynomial `vol = m! χ^T`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::roots::{RootSystem, WeightVector};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CharFormulaError {
    #[error("weight {0} is not dominant")]
    NotDominant(WeightVector),
    #[error("weight has {got} coordinates, expected {expected}")]
    DimensionMismatch { got: usize, expected: usize },
    #[error("dimension {0} is not a positive integer")]
    NotIntegral(BigRational),
}

#[derive(Debug, Clone)]
pub struct EulerData {
    rank: usize,
    positive_coroots: Vec<Vec<i64>>,
    /// `⟨ρ, α∨⟩` for each positive coroot.
    rho_pairings: Vec<i64>,
}

impl EulerData {
    pub fn new(rs: &RootSystem) -> Self {
        let positive_coroots: Vec<Vec<i64>> = rs.positive().iter().map(|r| r.coroot.clone()).collect();
        let rho = WeightVector::rho(rs.rank());
        let rho_pairings = positive_coroots.iter().map(|c| rho.pair_coroot(c)).collect();
        Self { rank: rs.rank(), positive_coroots, rho_pairings }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Degree of `χ^T` and `vol`: the number of positive coroots.
    pub fn degree(&self) -> usize {
        self.positive_coroots.len()
    }

    pub fn positive_coroots(&self) -> &[Vec<i64>] {
        &self.positive_coroots
    }

    fn check(&self, d: &WeightVector) -> Result<(), CharFormulaError> {
        if d.rank() == self.rank {
            Ok(())
        } else {
            Err(CharFormulaError::DimensionMismatch { got: d.rank(), expected: self.rank })
        }
    }

    pub fn euler_char_shifted(&self, d: &WeightVector) -> Result<BigRational, CharFormulaError> {
        self.check(d)?;
        let mut num = BigInt::one();
        let mut den = BigInt::one();
        for (c, &r) in self.positive_coroots.iter().zip(&self.rho_pairings) {
            num *= d.pair_coroot(c);
            den *= r;
        }
        Ok(BigRational::new(num, den))
    }

    /// Dimension of the irreducible representation of highest weight `λ`.
    pub fn weyl_dim(&self, lambda: &WeightVector) -> Result<BigInt, CharFormulaError> {
        self.check(lambda)?;
        if !lambda.is_dominant() {
            return Err(CharFormulaError::NotDominant(lambda.clone()));
        }
        let shifted = lambda + &WeightVector::rho(self.rank);
        let value = self.euler_char_shifted(&shifted)?;
        if !value.is_integer() || value <= BigRational::zero() {
            return Err(CharFormulaError::NotIntegral(value));
        }
        Ok(value.to_integer())
    }

    pub fn vol(&self, d: &WeightVector) -> Result<BigRational, CharFormulaError> {
        let factorial: BigInt = (1..=self.degree()).map(BigInt::from).product();
        Ok(self.euler_char_shifted(d)? * BigRational::from_integer(factorial))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cartan::{catalog, Family};

    fn data(f: Family, n: usize) -> EulerData {
        EulerData::new(&RootSystem::new(&catalog(f, n).unwrap()).unwrap())
    }

    fn int(x: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(x))
    }

    #[test]
    fn chi_examples() {
        let a2 = data(Family::A, 2);
        assert_eq!(a2.euler_char_shifted(&WeightVector::rho(2)).unwrap(), int(1));
        assert_eq!(a2.euler_char_shifted(&WeightVector(vec![2, 2])).unwrap(), int(8));
        assert_eq!(a2.euler_char_shifted(&WeightVector(vec![1, -1])).unwrap(), int(0));
        assert!(a2.euler_char_shifted(&WeightVector(vec![1])).is_err());
    }

    #[test]
    fn dim_examples() {
        let a1 = data(Family::A, 1);
        for n in 0..10 {
            assert_eq!(a1.weyl_dim(&WeightVector(vec![n])).unwrap(), BigInt::from(n + 1));
        }
        let a2 = data(Family::A, 2);
        assert_eq!(a2.weyl_dim(&WeightVector(vec![1, 0])).unwrap(), BigInt::from(3));
        assert_eq!(a2.weyl_dim(&WeightVector(vec![1, 1])).unwrap(), BigInt::from(8));
        assert!(matches!(a2.weyl_dim(&WeightVector(vec![-1, 0])), Err(CharFormulaError::NotDominant(_))));
        let g2 = data(Family::G, 2);
        let dims: Vec<BigInt> =
            [[1, 0], [0, 1]].iter().map(|w| g2.weyl_dim(&WeightVector(w.to_vec())).unwrap()).collect();
        let mut dims: Vec<i64> = dims.iter().map(|d| i64::try_from(d).unwrap()).collect();
        dims.sort();
        assert_eq!(dims, vec![7, 14]);
    }

    #[test]
    fn vol_examples() {
        assert_eq!(data(Family::A, 1).vol(&WeightVector(vec![1])).unwrap(), int(1));
        let a2 = data(Family::A, 2);
        assert_eq!(a2.vol(&WeightVector(vec![2, 2])).unwrap(), int(48));
        assert_eq!(a2.vol(&WeightVector(vec![0, 3])).unwrap(), int(0));
        assert_eq!(a2.degree(), 3);
    }
}
