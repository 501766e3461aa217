use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::CubicError;
use crate::geom::ProjPoint;

/// Exponent triples of the cubic monomial basis, in coefficient order.
pub const MONOMIALS: [(u32, u32, u32); 10] = [
    (3, 0, 0),
    (2, 1, 0),
    (2, 0, 1),
    (1, 2, 0),
    (1, 1, 1),
    (1, 0, 2),
    (0, 3, 0),
    (0, 2, 1),
    (0, 1, 2),
    (0, 0, 3),
];

/// The ten cubic monomials evaluated at `p`.
pub fn monomial_row(p: &ProjPoint) -> Vec<BigInt> {
    let [x, y, z] = p.coords();
    MONOMIALS.iter().map(|&(a, b, c)| x.pow(a) * y.pow(b) * z.pow(c)).collect()
}

/// The six conic monomials `X², XY, XZ, Y², YZ, Z²` evaluated at `p`.
pub fn conic_row(p: &ProjPoint) -> Vec<BigInt> {
    let [x, y, z] = p.coords();
    vec![x * x, x * y, x * z, y * y, y * z, z * z]
}

pub fn monomial_matrix(points: &[ProjPoint]) -> Vec<Vec<BigInt>> {
    points.iter().map(monomial_row).collect()
}

/// A nonzero cubic form with canonical coefficients (gcd 1, leading nonzero positive).
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cubic([BigInt; 10]);

impl Cubic {
    pub fn new(coeffs: [BigInt; 10]) -> Result<Self, CubicError> {
        let g = coeffs.iter().fold(BigInt::zero(), |g, c| g.gcd(c));
        if g.is_zero() {
            return Err(CubicError::ZeroCubic);
        }
        let g = if coeffs.iter().find(|c| !c.is_zero()).is_some_and(|c| c.is_negative()) { -g } else { g };
        Ok(Cubic(coeffs.map(|c| c / &g)))
    }

    pub fn from_slice(coeffs: &[BigInt]) -> Result<Self, CubicError> {
        let arr: [BigInt; 10] = coeffs.to_vec().try_into().map_err(|_| CubicError::ZeroCubic)?;
        Self::new(arr)
    }

    pub fn from_i64(coeffs: [i64; 10]) -> Result<Self, CubicError> {
        Self::new(coeffs.map(BigInt::from))
    }

    pub fn coeffs(&self) -> &[BigInt; 10] {
        &self.0
    }

    pub fn eval(&self, p: &ProjPoint) -> BigInt {
        monomial_row(p).iter().zip(&self.0).map(|(m, c)| m * c).sum()
    }

    pub fn contains(&self, p: &ProjPoint) -> bool {
        self.eval(p).is_zero()
    }
}

pub fn on_cubic(c: &Cubic, p: &ProjPoint) -> bool {
    c.contains(p)
}

impl fmt::Debug for Cubic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        const NAMES: [&str; 10] = ["X^3", "X^2Y", "X^2Z", "XY^2", "XYZ", "XZ^2", "Y^3", "Y^2Z", "YZ^2", "Z^3"];
        let mut first = true;
        for (c, name) in self.0.iter().zip(NAMES) {
            if c.is_zero() {
                continue;
            }
            if first {
                write!(f, "{c}{name}")?;
            } else if c.is_negative() {
                write!(f, " - {}{name}", -c)?;
            } else {
                write!(f, " + {c}{name}")?;
            }
            first = false;
        }
        Ok(())
    }
}
