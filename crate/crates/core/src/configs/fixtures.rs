use num_rational::BigRational;
use num_traits::Zero;

use super::{gen_affine_regular, gen_sharpness_example, ConfigError, CurvePoint, WeierstrassCurve};
use crate::cubic::Cubic;
use crate::geom::{general_position_violation, ProjPoint};
use crate::incidence::{verify_bipartite_piercing, verify_piercing, BipartiteConfiguration, Configuration, PierceMode};
use crate::io::{ConfigDocument, PointSets};

/// Parameters of a Tate-normal-form curve `y² + (1 - c)xy - by = x³ - bx²`
/// on which `g = (0, 0)` has order `order`, together with a non-torsion
/// point `shift` on the bounded oval.
///
/// The fixture is `P_i = i·g + shift`, `R_k = k·g - 2·shift`; three such
/// points are collinear exactly when their indices sum to `0 mod order`.
/// `P` lies on the oval and `R` on the unbounded branch, so every `R`
/// point is outside every segment of `P`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TorsionSpec {
    pub order: usize,
    pub b: (i64, i64),
    pub c: (i64, i64),
    pub shift: ((i64, i64), (i64, i64)),
}

pub const TORSION_SPECS: [TorsionSpec; 4] = [
    TorsionSpec { order: 8, b: (90, 121), c: (90, 11), shift: ((-90, 11), (-1620, 121)) },
    TorsionSpec { order: 9, b: (-1548, 16807), c: (-36, 343), shift: ((-6, 49), (60, 2401)) },
    TorsionSpec { order: 10, b: (-42, 8405), c: (42, 205), shift: ((-6, 41), (108, 1681)) },
    TorsionSpec { order: 12, b: (-663, 6400), c: (-39, 320), shift: ((-3, 20), (27, 800)) },
];

fn q((n, d): (i64, i64)) -> BigRational {
    BigRational::new(n.into(), d.into())
}

impl TorsionSpec {
    pub fn curve(&self) -> WeierstrassCurve {
        WeierstrassCurve::tate_normal(q(self.b), q(self.c))
    }

    pub fn generator(&self) -> CurvePoint {
        CurvePoint::Affine(BigRational::zero(), BigRational::zero())
    }

    pub fn shift_point(&self) -> CurvePoint {
        CurvePoint::Affine(q(self.shift.0), q(self.shift.1))
    }

    /// `(P, R)` in index order.
    pub fn points(&self) -> (Vec<ProjPoint>, Vec<ProjPoint>) {
        let e = self.curve();
        let g = self.generator();
        let s = self.shift_point();
        let minus_2s = e.mul(-2, &s);
        let n = self.order as i64;
        let p = (0..n).map(|i| e.add(&e.mul(i, &g), &s).to_proj()).collect();
        let r = (0..n).map(|k| e.add(&e.mul(k, &g), &minus_2s).to_proj()).collect();
        (p, r)
    }
}

fn torsion_spec(order: usize) -> Result<&'static TorsionSpec, ConfigError> {
    TORSION_SPECS.iter().find(|s| s.order == order).ok_or(ConfigError::UnsupportedN(order))
}

/// The torsion fixture of the given order; with `bipartite`, blue and green
/// are the even- and odd-indexed `P` points and `R` keeps only odd indices.
pub fn torsion_document(order: usize, bipartite: bool) -> Result<ConfigDocument, ConfigError> {
    let spec = torsion_spec(order)?;
    let (p, r) = spec.points();
    let cubic = Some(spec.curve().cubic());
    if bipartite {
        if !order.is_multiple_of(2) {
            return Err(ConfigError::UnsupportedN(order));
        }
        let pick = |v: &[ProjPoint], parity: usize| -> Vec<ProjPoint> {
            v.iter().enumerate().filter(|(i, _)| i % 2 == parity).map(|(_, p)| p.clone()).collect()
        };
        let bc = BipartiteConfiguration::new(pick(&p, 0), pick(&p, 1), pick(&r, 1))?;
        Ok(ConfigDocument {
            sets: PointSets::Bipartite(bc),
            mode: PierceMode::OutsideSegment,
            cubic,
            provenance: Some(format!(
                "bipartite split of the order-{order} torsion fixture: B = even, G = odd multiples, R = odd indices"
            )),
        })
    } else {
        Ok(ConfigDocument {
            sets: PointSets::Plain(Configuration::new(p, r, PierceMode::OutsideSegment)?),
            mode: PierceMode::OutsideSegment,
            cubic,
            provenance: Some(format!(
                "y^2 + ({})xy - ({})y = x^3 - ({})x^2, g = (0,0) of order {order}, P_i = i*g + s, R_k = k*g - 2s with s = ({}, {})",
                q((1, 1)) - q(spec.c),
                q(spec.b),
                q(spec.b),
                q(spec.shift.0),
                q(spec.shift.1)
            )),
        })
    }
}

/// A named fixture shipped with the crate.
#[derive(Clone, Copy, Debug)]
pub struct FixtureDescriptor {
    pub name: &'static str,
    pub json: &'static str,
}

const FIXTURES: [FixtureDescriptor; 11] = [
    FixtureDescriptor { name: "triangle", json: include_str!("../../fixtures/triangle.json") },
    FixtureDescriptor { name: "square-infinity", json: include_str!("../../fixtures/square-infinity.json") },
    FixtureDescriptor { name: "hexagon", json: include_str!("../../fixtures/hexagon.json") },
    FixtureDescriptor { name: "sharpness-n4", json: include_str!("../../fixtures/sharpness-n4.json") },
    FixtureDescriptor { name: "torsion-n8", json: include_str!("../../fixtures/torsion-n8.json") },
    FixtureDescriptor { name: "torsion-n9", json: include_str!("../../fixtures/torsion-n9.json") },
    FixtureDescriptor { name: "torsion-n10", json: include_str!("../../fixtures/torsion-n10.json") },
    FixtureDescriptor { name: "torsion-n12", json: include_str!("../../fixtures/torsion-n12.json") },
    FixtureDescriptor { name: "bipartite-2n10", json: include_str!("../../fixtures/bipartite-2n10.json") },
    FixtureDescriptor { name: "bipartite-2n12", json: include_str!("../../fixtures/bipartite-2n12.json") },
    FixtureDescriptor { name: "incidence-n6-no-cubic", json: include_str!("../../fixtures/incidence-n6-no-cubic.json") },
];

/// Six points in general position whose fifteen lines are pierced by six
/// points, with no cubic through all twelve (found by the conjecture scan).
fn incidence_counterexample() -> Result<ConfigDocument, ConfigError> {
    let p = [(-3, -2), (-1, 2), (-1, 4), (-3, 3), (3, -4), (3, 3)].iter().map(|&(x, y)| ProjPoint::affine(x, y)).collect();
    let r = [(-1, 6, 2), (-9, 8, 5), (0, 1, 0), (-9, 0, 1), (0, 1, 2), (-9, 6, 1)]
        .iter()
        .map(|&(x, y, z)| ProjPoint::new(x, y, z).expect("nonzero"))
        .collect();
    let mut doc = ConfigDocument::plain(Configuration::new(p, r, PierceMode::Incidence)?);
    doc.provenance = Some("six points pierced by six points with no cubic through all twelve".into());
    Ok(doc)
}

pub fn fixture_names() -> impl Iterator<Item = &'static str> {
    FIXTURES.iter().map(|f| f.name)
}

fn with_cubic(config: Configuration, cubic: [i64; 10], provenance: &str) -> ConfigDocument {
    let mut doc = ConfigDocument::plain(config);
    doc.cubic = Some(Cubic::from_i64(cubic).expect("nonzero"));
    doc.provenance = Some(provenance.to_string());
    doc
}

/// Rebuilds a fixture from its construction rather than from the shipped file.
pub fn build_fixture(name: &str) -> Result<ConfigDocument, ConfigError> {
    let doc = match name {
        "triangle" => with_cubic(
            gen_affine_regular(3)?,
            [0, 0, 0, 0, 1, 0, 0, 0, 0, 0],
            "affine-regular triangle with its three chord directions; cubic XYZ",
        ),
        "square-infinity" => with_cubic(
            gen_affine_regular(4)?,
            [0, 0, 1, 0, 0, 0, 0, 1, 0, -1],
            "affine-regular square with its four chord directions; cubic (X^2 + Y^2 - Z^2)Z",
        ),
        "hexagon" => with_cubic(
            gen_affine_regular(6)?,
            [0, 0, 1, 0, -1, 0, 0, 1, 0, -1],
            "affine-regular hexagon with its six chord directions; cubic (X^2 - XY + Y^2 - Z^2)Z",
        ),
        "sharpness-n4" => {
            let mut doc = ConfigDocument::plain(gen_sharpness_example(4)?);
            doc.provenance = Some("unit square pierced by its diagonal intersection and two directions".into());
            doc
        }
        "torsion-n8" => torsion_document(8, false)?,
        "torsion-n9" => torsion_document(9, false)?,
        "torsion-n10" => torsion_document(10, false)?,
        "torsion-n12" => torsion_document(12, false)?,
        "bipartite-2n10" => torsion_document(10, true)?,
        "bipartite-2n12" => torsion_document(12, true)?,
        "incidence-n6-no-cubic" => incidence_counterexample()?,
        other => return Err(ConfigError::UnknownFixture(other.to_string())),
    };
    gate(&doc)?;
    Ok(doc)
}

/// Checks general position of `P` (or `B ∪ G`), the declared piercing mode
/// and, if present, that the cubic vanishes on every point.
pub fn gate(doc: &ConfigDocument) -> Result<(), ConfigError> {
    let fail = |msg: String| Err(ConfigError::FixtureGateFailure(msg));
    let (points, report) = match &doc.sets {
        PointSets::Plain(c) => (c.p().to_vec(), verify_piercing(c, doc.mode)?),
        PointSets::Bipartite(bc) => {
            if doc.mode != PierceMode::OutsideSegment {
                return fail("bipartite configurations are checked in outside_segment mode".into());
            }
            (bc.colored_points(), verify_bipartite_piercing(bc)?)
        }
    };
    if let Some(t) = general_position_violation(&points) {
        return fail(format!("points {t:?} are collinear"));
    }
    if let Some(&(i, j)) = report.violations.first() {
        return fail(format!("pair ({i}, {j}) is not pierced in {} mode", doc.mode));
    }
    if let Some(c) = &doc.cubic {
        if let Some(p) = doc.sets.all_points().iter().find(|p| !c.contains(p)) {
            return fail(format!("cubic does not vanish at {p}"));
        }
    }
    Ok(())
}

/// Loads and gates a shipped fixture.
pub fn load_fixture(name: &str) -> Result<ConfigDocument, ConfigError> {
    let f = FIXTURES.iter().find(|f| f.name == name).ok_or_else(|| ConfigError::UnknownFixture(name.to_string()))?;
    let doc = ConfigDocument::parse(f.json)?;
    gate(&doc)?;
    Ok(doc)
}

pub fn load_torsion_fixture(order: usize) -> Result<ConfigDocument, ConfigError> {
    load_fixture(&format!("torsion-n{order}")).map_err(|e| match e {
        ConfigError::UnknownFixture(_) => ConfigError::UnsupportedN(order),
        e => e,
    })
}
