use num_bigint::BigUint;
use num_traits::One;
use serde::{Deserialize, Serialize};

use super::CountError;

/// Binomial coefficient C(n, k), exact.
pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::from(0u32);
    }
    let k = k.min(n - k);
    let mut res = BigUint::one();
    for i in 0..k {
        res = res * BigUint::from(n - i) / BigUint::from(i + 1);
    }
    res
}

/// Catalan number C(2n, n) / (n + 1), exact.
pub fn catalan(n: u64) -> BigUint {
    binomial(2 * n, n) / BigUint::from(n + 1)
}

/// The per-instance counting constants: `n` red segments, lens parameters
/// `(a, b)`, and the exact gadget triangulation constants. `alpha` counts the
/// triangulations of a blue gadget polygon that contain a three-lens-vertex
/// triangle, `beta` the same for a red gadget, `gamma` the triangulations of
/// the twelve-sided polygon at a red-red crossing.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct CountingConstants {
    pub n: u64,
    pub a: u64,
    pub b: u64,
    pub alpha: BigUint,
    pub beta: BigUint,
    pub gamma: BigUint,
}

impl CountingConstants {
    /// The master product
    /// `q_{n,r} = alpha^(n-r) beta^r gamma^((n-2r)/2) a^(2r) (a+b)^(2(n-r)) 2^(3r)`,
    /// defined for even `n` and `0 <= r <= n/2`.
    pub fn q_value(&self, r: u64) -> Result<BigUint, CountError> {
        let n = self.n;
        if n % 2 != 0 || r > n / 2 {
            return Err(CountError::BadR { n, r });
        }
        if n == 0 {
            return Ok(BigUint::one());
        }
        let ab = BigUint::from(self.a + self.b);
        let a = BigUint::from(self.a);
        let mut q = self.alpha.pow((n - r) as u32);
        q *= self.beta.pow(r as u32);
        q *= self.gamma.pow(((n - 2 * r) / 2) as u32);
        q *= a.pow(2 * r as u32);
        q *= ab.pow(2 * (n - r) as u32);
        q *= BigUint::from(2u32).pow(3 * r as u32);
        Ok(q)
    }

    /// All q-values for r = 0 .. n/2.
    pub fn q_table(&self) -> Result<Vec<BigUint>, CountError> {
        (0..=self.n / 2).map(|r| self.q_value(r)).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomials() {
        assert_eq!(binomial(2, 1), BigUint::from(2u32));
        assert_eq!(binomial(4, 2), BigUint::from(6u32));
        assert_eq!(binomial(8, 4), BigUint::from(70u32));
    }

    #[test]
    fn catalans() {
        let expect = [1u64, 1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796];
        for (i, &e) in expect.iter().enumerate() {
            assert_eq!(catalan(i as u64), BigUint::from(e));
        }
    }

    fn consts(n: u64, a: u64, b: u64, alpha: u32, beta: u32, gamma: u32) -> CountingConstants {
        CountingConstants {
            n,
            a,
            b,
            alpha: BigUint::from(alpha),
            beta: BigUint::from(beta),
            gamma: BigUint::from(gamma),
        }
    }

    #[test]
    fn q_empty_product() {
        let c = consts(0, 3, 2, 5, 9, 4);
        assert_eq!(c.q_value(0).unwrap(), BigUint::one());
    }

    #[test]
    fn q_r_zero_formula() {
        let c = consts(4, 3, 2, 5, 9, 4);
        // alpha^n gamma^(n/2) (a+b)^(2n)
        let expect = BigUint::from(5u32).pow(4)
            * BigUint::from(4u32).pow(2)
            * BigUint::from(5u32).pow(8);
        assert_eq!(c.q_value(0).unwrap(), expect);
    }

    #[test]
    fn q_ratio() {
        // q_{n,r} / q_{n,r-1} = 8 beta a^2 / (alpha gamma (a+b)^2), exactly.
        let c = consts(6, 4, 3, 7, 11, 3);
        for r in 1..=3u64 {
            let lhs = c.q_value(r).unwrap() * c.alpha.clone() * c.gamma.clone()
                * BigUint::from((c.a + c.b) * (c.a + c.b));
            let rhs = c.q_value(r - 1).unwrap()
                * BigUint::from(8u32)
                * c.beta.clone()
                * BigUint::from(c.a * c.a);
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn q_bad_r() {
        let c = consts(4, 3, 2, 5, 9, 4);
        assert!(c.q_value(3).is_err());
        let odd = consts(5, 3, 2, 5, 9, 4);
        assert!(odd.q_value(1).is_err());
    }
}
