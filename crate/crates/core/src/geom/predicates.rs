use num_bigint::{BigInt, Sign};
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use super::{GeomError, ProjLine, ProjPoint};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Orientation {
    Clockwise,
    Collinear,
    CounterClockwise,
}

impl Orientation {
    pub fn as_i8(self) -> i8 {
        match self {
            Orientation::Clockwise => -1,
            Orientation::Collinear => 0,
            Orientation::CounterClockwise => 1,
        }
    }

    fn from_sign(s: Sign) -> Self {
        match s {
            Sign::Minus => Orientation::Clockwise,
            Sign::NoSign => Orientation::Collinear,
            Sign::Plus => Orientation::CounterClockwise,
        }
    }
}

fn cross(u: &[BigInt; 3], v: &[BigInt; 3]) -> [BigInt; 3] {
    [
        &u[1] * &v[2] - &u[2] * &v[1],
        &u[2] * &v[0] - &u[0] * &v[2],
        &u[0] * &v[1] - &u[1] * &v[0],
    ]
}

/// Determinant of the 3×3 matrix with rows `p`, `q`, `r`.
pub fn det3(p: &[BigInt; 3], q: &[BigInt; 3], r: &[BigInt; 3]) -> BigInt {
    let c = cross(q, r);
    &p[0] * &c[0] + &p[1] * &c[1] + &p[2] * &c[2]
}

pub fn incident(p: &ProjPoint, l: &ProjLine) -> bool {
    l.eval(p).is_zero()
}

/// The line through two distinct points.
pub fn join(p: &ProjPoint, q: &ProjPoint) -> Result<ProjLine, GeomError> {
    if p == q {
        return Err(GeomError::DegenerateJoin);
    }
    Ok(ProjLine::from_triple(cross(p.coords(), q.coords())).expect("distinct canonical points span a line"))
}

/// The intersection of two distinct lines; parallel finite lines meet at infinity.
pub fn meet(l1: &ProjLine, l2: &ProjLine) -> Result<ProjPoint, GeomError> {
    if l1 == l2 {
        return Err(GeomError::DegenerateMeet);
    }
    Ok(ProjPoint::from_triple(cross(l1.coeffs(), l2.coeffs())).expect("distinct canonical lines meet in a point"))
}

pub fn collinear(p: &ProjPoint, q: &ProjPoint, r: &ProjPoint) -> bool {
    det3(p.coords(), q.coords(), r.coords()).is_zero()
}

/// Orientation of three finite points; counterclockwise is positive.
pub fn orientation(p: &ProjPoint, q: &ProjPoint, r: &ProjPoint) -> Result<Orientation, GeomError> {
    if p.at_infinity() || q.at_infinity() || r.at_infinity() {
        return Err(GeomError::InvalidInput("orientation of a point at infinity".into()));
    }
    // det(rows) = zp*zq*zr * (affine orientation determinant)
    let d = det3(p.coords(), q.coords(), r.coords());
    let flips = [p, q, r].iter().filter(|s| s.z().is_negative()).count();
    let s = if flips % 2 == 1 { -d } else { d };
    Ok(Orientation::from_sign(s.sign()))
}

/// Which side of `l` the point `p` lies on, as -1, 0 or +1.
///
/// For finite points the sign is taken after scaling `p` to `Z > 0`, so two
/// finite points get the same sign iff they lie in the same open half-plane.
/// Points at infinity use their canonical coordinates as-is.
pub fn side_of_line(l: &ProjLine, p: &ProjPoint) -> i8 {
    let v = l.eval(p);
    let s = match v.sign() {
        Sign::Minus => -1,
        Sign::NoSign => 0,
        Sign::Plus => 1,
    };
    if p.z().is_negative() {
        -s
    } else {
        s
    }
}

/// Whether `m` lies in the open segment between the finite points `a` and `b`.
///
/// `m` must be collinear with `a` and `b` and differ from both; a point at
/// infinity is never inside a segment.
pub fn strictly_between(a: &ProjPoint, b: &ProjPoint, m: &ProjPoint) -> Result<bool, GeomError> {
    let (Some((ax, ay)), Some((bx, by))) = (a.to_affine(), b.to_affine()) else {
        return Err(GeomError::InvalidInput("segment endpoint at infinity".into()));
    };
    if a == b {
        return Err(GeomError::InvalidInput("segment endpoints coincide".into()));
    }
    if !collinear(a, b, m) {
        return Err(GeomError::InvalidInput(format!("{m} is not on the line through {a} and {b}")));
    }
    if m == a || m == b {
        return Err(GeomError::InvalidInput(format!("{m} coincides with a segment endpoint")));
    }
    let Some((mx, my)) = m.to_affine() else {
        return Ok(false);
    };
    let (dx, dy) = (&bx - &ax, &by - &ay);
    let t: BigRational = (&mx - &ax) * &dx + (&my - &ay) * &dy;
    let len2 = &dx * &dx + &dy * &dy;
    Ok(t.is_positive() && t < len2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn pt(x: i64, y: i64, z: i64) -> ProjPoint {
        ProjPoint::new(x, y, z).unwrap()
    }

    fn ln(a: i64, b: i64, c: i64) -> ProjLine {
        ProjLine::new(a, b, c).unwrap()
    }

    #[test]
    fn join_examples() {
        assert_eq!(join(&pt(0, 0, 1), &pt(1, 0, 1)).unwrap(), ln(0, 1, 0));
        assert_eq!(join(&pt(1, 0, 0), &pt(0, 1, 0)).unwrap(), ProjLine::at_infinity());
        let (p, q) = (pt(1, 1, 1), pt(2, 3, 1));
        let l = join(&p, &q).unwrap();
        // (1,1,1) x (2,3,1) = (1*1-1*3, 1*2-1*1, 1*3-1*2) = (-2, 1, 1) -> (2, -1, -1)
        assert_eq!(l, ln(2, -1, -1));
        assert!(incident(&p, &l) && incident(&q, &l));
        assert_eq!(join(&p, &p), Err(GeomError::DegenerateJoin));
    }

    #[test]
    fn meet_examples() {
        assert_eq!(meet(&ln(0, 1, 0), &ln(1, 0, 0)).unwrap(), pt(0, 0, 1));
        assert_eq!(meet(&ln(0, 1, 0), &ln(0, 1, -1)).unwrap(), pt(1, 0, 0));
        assert_eq!(meet(&ln(3, 1, 2), &ln(3, 1, 2)), Err(GeomError::DegenerateMeet));
    }

    #[test]
    fn collinear_examples() {
        assert!(collinear(&pt(0, 0, 1), &pt(1, 1, 1), &pt(2, 2, 1)));
        assert!(!collinear(&pt(0, 0, 1), &pt(1, 0, 1), &pt(0, 1, 1)));
        assert!(collinear(&pt(0, 0, 1), &pt(1, 2, 1), &pt(1, 2, 0)));
    }

    #[test]
    fn orientation_examples() {
        let (o, a, b) = (pt(0, 0, 1), pt(1, 0, 1), pt(0, 1, 1));
        assert_eq!(orientation(&o, &a, &b).unwrap(), Orientation::CounterClockwise);
        assert_eq!(orientation(&o, &b, &a).unwrap(), Orientation::Clockwise);
        assert_eq!(orientation(&o, &pt(1, 1, 1), &pt(2, 2, 1)).unwrap(), Orientation::Collinear);
        // negative Z after canonicalization must not flip the answer
        let a_neg = pt(-1, 0, -1);
        assert_eq!(a_neg, pt(1, 0, 1));
        let c = pt(1, 0, -2); // the point (-1/2, 0)
        assert_eq!(orientation(&c, &o, &b).unwrap(), Orientation::CounterClockwise);
        assert!(orientation(&o, &a, &pt(1, 0, 0)).is_err());
    }

    #[test]
    fn between_examples() {
        let (a, b) = (pt(0, 0, 1), pt(2, 0, 1));
        assert!(strictly_between(&a, &b, &pt(1, 0, 1)).unwrap());
        assert!(!strictly_between(&a, &b, &pt(3, 0, 1)).unwrap());
        assert!(!strictly_between(&a, &b, &pt(-1, 0, 1)).unwrap());
        assert!(!strictly_between(&a, &b, &pt(1, 0, 0)).unwrap());
        assert!(strictly_between(&a, &a, &pt(1, 0, 1)).is_err());
        assert!(strictly_between(&a, &b, &pt(1, 1, 1)).is_err());
        assert!(strictly_between(&a, &b, &b).is_err());
    }

    fn finite() -> impl Strategy<Value = ProjPoint> {
        (-30i64..30, -30i64..30, 1i64..4).prop_map(|(x, y, z)| pt(x, y, z))
    }

    fn any_point() -> impl Strategy<Value = ProjPoint> {
        (-30i64..30, -30i64..30, -3i64..4)
            .prop_filter("nonzero", |(x, y, z)| *x != 0 || *y != 0 || *z != 0)
            .prop_map(|(x, y, z)| pt(x, y, z))
    }

    proptest! {
        #[test]
        fn join_and_meet_are_incident(p in any_point(), q in any_point(), r in any_point(), s in any_point()) {
            prop_assume!(p != q && r != s);
            let l1 = join(&p, &q).unwrap();
            prop_assert!(incident(&p, &l1) && incident(&q, &l1));
            let l2 = join(&r, &s).unwrap();
            if l1 != l2 {
                let m = meet(&l1, &l2).unwrap();
                prop_assert!(incident(&m, &l1) && incident(&m, &l2));
            }
        }

        #[test]
        fn collinear_matches_join(p in any_point(), q in any_point(), r in any_point()) {
            prop_assume!(p != q);
            prop_assert_eq!(collinear(&p, &q, &r), incident(&r, &join(&p, &q).unwrap()));
        }

        #[test]
        fn orientation_is_antisymmetric(p in finite(), q in finite(), r in finite()) {
            let a = orientation(&p, &q, &r).unwrap().as_i8();
            prop_assert_eq!(orientation(&q, &p, &r).unwrap().as_i8(), -a);
            prop_assert_eq!(orientation(&p, &r, &q).unwrap().as_i8(), -a);
        }

        #[test]
        fn betweenness_is_exclusive(ax in -20i64..20, ay in -20i64..20, dx in -5i64..5, dy in -5i64..5, s in -6i64..6, t in -6i64..6) {
            prop_assume!((dx, dy) != (0, 0) && s != t && s != 0 && t != 0);
            let a = pt(ax, ay, 1);
            let b = pt(ax + s * dx, ay + s * dy, 1);
            let m = pt(ax + t * dx, ay + t * dy, 1);
            if strictly_between(&a, &b, &m).unwrap() {
                prop_assert!(!strictly_between(&a, &m, &b).unwrap());
            }
        }
    }
}
