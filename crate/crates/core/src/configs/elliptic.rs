use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::cubic::Cubic;
use crate::geom::ProjPoint;

/// `y² + a1·xy + a3·y = x³ + a2·x² + a4·x + a6` over the rationals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeierstrassCurve {
    pub a1: BigRational,
    pub a2: BigRational,
    pub a3: BigRational,
    pub a4: BigRational,
    pub a6: BigRational,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CurvePoint {
    Infinity,
    Affine(BigRational, BigRational),
}

impl CurvePoint {
    pub fn to_proj(&self) -> ProjPoint {
        match self {
            CurvePoint::Infinity => ProjPoint::new(0, 1, 0).expect("nonzero"),
            CurvePoint::Affine(x, y) => ProjPoint::from_rational(x, y),
        }
    }
}

impl WeierstrassCurve {
    /// Tate normal form `y² + (1 - c)xy - by = x³ - bx²`, on which `(0, 0)`
    /// is a point of order at least 4.
    pub fn tate_normal(b: BigRational, c: BigRational) -> Self {
        WeierstrassCurve {
            a1: BigRational::one() - c,
            a2: -b.clone(),
            a3: -b,
            a4: BigRational::zero(),
            a6: BigRational::zero(),
        }
    }

    pub fn contains(&self, p: &CurvePoint) -> bool {
        match p {
            CurvePoint::Infinity => true,
            CurvePoint::Affine(x, y) => {
                y * y + &self.a1 * x * y + &self.a3 * y == x * x * x + &self.a2 * x * x + &self.a4 * x + &self.a6
            }
        }
    }

    pub fn neg(&self, p: &CurvePoint) -> CurvePoint {
        match p {
            CurvePoint::Infinity => CurvePoint::Infinity,
            CurvePoint::Affine(x, y) => CurvePoint::Affine(x.clone(), -y - &self.a1 * x - &self.a3),
        }
    }

    pub fn add(&self, p: &CurvePoint, q: &CurvePoint) -> CurvePoint {
        let (CurvePoint::Affine(x1, y1), CurvePoint::Affine(x2, y2)) = (p, q) else {
            return if *p == CurvePoint::Infinity { q.clone() } else { p.clone() };
        };
        let lambda = if x1 == x2 {
            let denom = y1 + y2 + &self.a1 * x2 + &self.a3;
            if denom.is_zero() {
                return CurvePoint::Infinity;
            }
            let three = BigRational::from_integer(3.into());
            let two = BigRational::from_integer(2.into());
            (three * x1 * x1 + two * &self.a2 * x1 + &self.a4 - &self.a1 * y1) / denom
        } else {
            (y2 - y1) / (x2 - x1)
        };
        let nu = y1 - &lambda * x1;
        let x3 = &lambda * &lambda + &self.a1 * &lambda - &self.a2 - x1 - x2;
        let y3 = -(&lambda + &self.a1) * &x3 - nu - &self.a3;
        CurvePoint::Affine(x3, y3)
    }

    pub fn mul(&self, k: i64, p: &CurvePoint) -> CurvePoint {
        let mut base = if k < 0 { self.neg(p) } else { p.clone() };
        let mut k = k.unsigned_abs();
        let mut acc = CurvePoint::Infinity;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.add(&acc, &base);
            }
            base = self.add(&base, &base);
            k >>= 1;
        }
        acc
    }

    /// The order of `p` if it is at most `limit`.
    pub fn order(&self, p: &CurvePoint, limit: usize) -> Option<usize> {
        let mut q = p.clone();
        for k in 1..=limit {
            if q == CurvePoint::Infinity {
                return Some(k);
            }
            q = self.add(&q, p);
        }
        None
    }

    /// The homogenized defining polynomial as a canonical [`Cubic`].
    pub fn cubic(&self) -> Cubic {
        let coeffs = [&self.a1, &self.a2, &self.a3, &self.a4, &self.a6];
        let d = coeffs.iter().fold(BigInt::one(), |d, c| d.lcm(c.denom()));
        let scale = |c: &BigRational| (c * BigRational::from_integer(d.clone())).to_integer();
        let zero = BigInt::zero();
        // Y²Z + a1·XYZ + a3·YZ² - X³ - a2·X²Z - a4·XZ² - a6·Z³
        Cubic::new([
            -d.clone(),
            zero.clone(),
            -scale(&self.a2),
            zero.clone(),
            scale(&self.a1),
            -scale(&self.a4),
            zero,
            d.clone(),
            scale(&self.a3),
            -scale(&self.a6),
        ])
        .expect("Y²Z coefficient is nonzero")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn tate_point_orders() {
        // b = c = -1 gives a point of order 5 (y² - xy + y = x³ + x² after the sign flip)
        let e = WeierstrassCurve::tate_normal(q(-1, 1), q(-1, 1));
        let o = CurvePoint::Affine(q(0, 1), q(0, 1));
        assert!(e.contains(&o));
        assert_eq!(e.order(&o, 20), Some(5));
        assert_eq!(e.mul(5, &o), CurvePoint::Infinity);
        assert_eq!(e.mul(-2, &o), e.mul(3, &o));
        assert!(e.contains(&e.mul(2, &o)));
    }

    #[test]
    fn cubic_vanishes_on_curve_points() {
        let e = WeierstrassCurve::tate_normal(q(-42, 8405), q(42, 205));
        let c = e.cubic();
        let g = CurvePoint::Affine(q(0, 1), q(0, 1));
        for k in 0..10 {
            assert!(c.contains(&e.mul(k, &g).to_proj()));
        }
        assert!(c.contains(&CurvePoint::Infinity.to_proj()));
    }

    #[test]
    fn collinear_triples_sum_to_zero() {
        let e = WeierstrassCurve::tate_normal(q(-42, 8405), q(42, 205));
        let g = CurvePoint::Affine(q(0, 1), q(0, 1));
        let c = CurvePoint::Affine(q(-6, 41), q(108, 1681));
        assert!(e.contains(&c));
        let (a, b) = (e.add(&e.mul(2, &g), &c), e.add(&e.mul(5, &g), &c));
        let third = e.neg(&e.add(&a, &b));
        assert!(crate::geom::collinear(&a.to_proj(), &b.to_proj(), &third.to_proj()));
    }
}
