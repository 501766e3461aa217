use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

use super::GeomError;

/// Divides a nonzero triple by the gcd of its entries and flips the sign so
/// that the first nonzero entry is positive.
pub fn canonicalize(triple: &[BigInt; 3]) -> Result<[BigInt; 3], GeomError> {
    let g = triple[0].gcd(&triple[1]).gcd(&triple[2]);
    if g.is_zero() {
        return Err(GeomError::InvalidInput("zero homogeneous triple".into()));
    }
    let lead_negative = triple.iter().find(|v| !v.is_zero()).is_some_and(|v| v.is_negative());
    let g = if lead_negative { -g } else { g };
    Ok([&triple[0] / &g, &triple[1] / &g, &triple[2] / &g])
}

/// A point of the real projective plane with canonical integer coordinates.
///
/// Finite points have `Z != 0`; points with `Z = 0` are directions on the
/// line at infinity.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ProjPoint([BigInt; 3]);

/// The line `aX + bY + cZ = 0`, canonical like [`ProjPoint`].
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ProjLine([BigInt; 3]);

impl ProjPoint {
    pub fn new(x: impl Into<BigInt>, y: impl Into<BigInt>, z: impl Into<BigInt>) -> Result<Self, GeomError> {
        Self::from_triple([x.into(), y.into(), z.into()])
    }

    pub fn from_triple(triple: [BigInt; 3]) -> Result<Self, GeomError> {
        canonicalize(&triple).map(ProjPoint)
    }

    /// The finite point `(x, y)`.
    pub fn affine(x: i64, y: i64) -> Self {
        ProjPoint::new(x, y, 1).expect("Z = 1 is never the zero triple")
    }

    /// The finite point with rational coordinates `(x, y)`.
    pub fn from_rational(x: &BigRational, y: &BigRational) -> Self {
        let d = x.denom().lcm(y.denom());
        let xn = x.numer() * (&d / x.denom());
        let yn = y.numer() * (&d / y.denom());
        ProjPoint::from_triple([xn, yn, d]).expect("denominator is nonzero")
    }

    /// The point at infinity in direction `(dx, dy)`.
    pub fn direction(dx: impl Into<BigInt>, dy: impl Into<BigInt>) -> Result<Self, GeomError> {
        Self::new(dx, dy, 0)
    }

    pub fn x(&self) -> &BigInt {
        &self.0[0]
    }

    pub fn y(&self) -> &BigInt {
        &self.0[1]
    }

    pub fn z(&self) -> &BigInt {
        &self.0[2]
    }

    pub fn coords(&self) -> &[BigInt; 3] {
        &self.0
    }

    pub fn is_finite(&self) -> bool {
        !self.0[2].is_zero()
    }

    pub fn at_infinity(&self) -> bool {
        self.0[2].is_zero()
    }

    /// Affine coordinates, `None` at infinity.
    pub fn to_affine(&self) -> Option<(BigRational, BigRational)> {
        if self.at_infinity() {
            return None;
        }
        Some((
            BigRational::new(self.0[0].clone(), self.0[2].clone()),
            BigRational::new(self.0[1].clone(), self.0[2].clone()),
        ))
    }

    /// Lossy affine coordinates for drawing.
    pub fn to_f64(&self) -> Option<(f64, f64)> {
        let (x, y) = self.to_affine()?;
        Some((x.to_f64()?, y.to_f64()?))
    }

    /// Applies `M · (X, Y, Z)^T`.
    pub fn transform(&self, m: &[[BigInt; 3]; 3]) -> Result<Self, GeomError> {
        let c = &self.0;
        let row = |r: &[BigInt; 3]| &r[0] * &c[0] + &r[1] * &c[1] + &r[2] * &c[2];
        Self::from_triple([row(&m[0]), row(&m[1]), row(&m[2])])
    }
}

impl ProjLine {
    pub fn new(a: impl Into<BigInt>, b: impl Into<BigInt>, c: impl Into<BigInt>) -> Result<Self, GeomError> {
        Self::from_triple([a.into(), b.into(), c.into()])
    }

    pub fn from_triple(triple: [BigInt; 3]) -> Result<Self, GeomError> {
        canonicalize(&triple).map(ProjLine)
    }

    pub fn at_infinity() -> Self {
        ProjLine([BigInt::zero(), BigInt::zero(), BigInt::from(1)])
    }

    pub fn coeffs(&self) -> &[BigInt; 3] {
        &self.0
    }

    pub fn is_at_infinity(&self) -> bool {
        self.0[0].is_zero() && self.0[1].is_zero()
    }

    /// `aX + bY + cZ` at `p`.
    pub fn eval(&self, p: &ProjPoint) -> BigInt {
        let (l, q) = (&self.0, p.coords());
        &l[0] * &q[0] + &l[1] * &q[1] + &l[2] * &q[2]
    }
}

impl fmt::Debug for ProjPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}:{}:{})", self.0[0], self.0[1], self.0[2])
    }
}

impl fmt::Display for ProjPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl fmt::Debug for ProjLine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}:{}:{}]", self.0[0], self.0[1], self.0[2])
    }
}

impl fmt::Display for ProjLine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn tri(a: i64, b: i64, c: i64) -> [BigInt; 3] {
        [a.into(), b.into(), c.into()]
    }

    #[test]
    fn canonical_examples() {
        assert_eq!(canonicalize(&tri(2, 4, 6)).unwrap(), tri(1, 2, 3));
        assert_eq!(canonicalize(&tri(-1, 0, 2)).unwrap(), tri(1, 0, -2));
        assert_eq!(canonicalize(&tri(0, -3, 0)).unwrap(), tri(0, 1, 0));
        assert!(matches!(canonicalize(&tri(0, 0, 0)), Err(GeomError::InvalidInput(_))));
    }

    #[test]
    fn rational_points() {
        let half = BigRational::new(1.into(), 2.into());
        let third = BigRational::new((-1).into(), 3.into());
        let p = ProjPoint::from_rational(&half, &third);
        assert_eq!(p, ProjPoint::new(3, -2, 6).unwrap());
        assert_eq!(p.to_affine().unwrap(), (half, third));
        assert!(ProjPoint::direction(1, 2).unwrap().to_affine().is_none());
    }

    proptest! {
        #[test]
        fn canonical_is_idempotent_and_scale_invariant(
            a in -50i64..50, b in -50i64..50, c in -50i64..50, k in prop_oneof![-9i64..=-1, 1i64..=9],
        ) {
            prop_assume!(a != 0 || b != 0 || c != 0);
            let once = canonicalize(&tri(a, b, c)).unwrap();
            prop_assert_eq!(&canonicalize(&once).unwrap(), &once);
            prop_assert_eq!(canonicalize(&tri(a * k, b * k, c * k)).unwrap(), once);
        }
    }
}
