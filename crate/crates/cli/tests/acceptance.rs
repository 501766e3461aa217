//! One line per acceptance criterion; exits nonzero if any fails.

use std::collections::BTreeSet;
use std::path::PathBuf;
use std::time::{Duration, Instant};

use num_integer::Integer;
use pierce_cli::run;
use pierce_core::configs::{fixture_names, gen_affine_regular, gen_random_general_position, gen_sharpness_example, load_fixture};
use pierce_core::cubic::{certify_bipartite_cubic, certify_cubic, chasles_verify, claim1_instance, claim2_instance, ChaslesInstance, Strategy};
use pierce_core::geom::{collinear, count_directions, ProjLine};
use pierce_core::incidence::{
    check_alternation, extract_bipartite_structure, extract_cyclic_structure, hull_audit, tangency_check, verify_piercing,
};
use pierce_core::io::{ConfigDocument, PointSets};
use pierce_core::opt::{conjecture_scan, min_pierce, ungar_check, ScanOptions};
use pierce_core::oracle;
use pierce_core::{PierceMode, ProjPoint};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(start: Instant, limit: Duration) -> Result<(), String> {
    let t = start.elapsed();
    ensure(t < limit, || format!("took {t:?}, limit {limit:?}"))
}

fn plain(doc: &ConfigDocument) -> Result<&pierce_core::Configuration, String> {
    match &doc.sets {
        PointSets::Plain(c) => Ok(c),
        PointSets::Bipartite(_) => Err("expected a plain configuration".into()),
    }
}

fn fixture_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../core/fixtures").join(format!("{name}.json"))
}

fn pierce(args: &[&str]) -> i32 {
    let (mut out, mut err) = (Vec::new(), Vec::new());
    run(std::iter::once("pierce").chain(args.iter().copied()), &mut out, &mut err)
}

fn constructions() -> Outcome {
    for n in [3, 4, 6] {
        let start = Instant::now();
        let c = gen_affine_regular(n).map_err(|e| e.to_string())?;
        let rep = verify_piercing(&c, PierceMode::OutsideSegment).map_err(|e| e.to_string())?;
        ensure(rep.violations.is_empty(), || format!("n={n}: {} violations", rep.violations.len()))?;
        let d = count_directions(c.p());
        ensure(d == n, || format!("n={n}: {d} directions"))?;
        within(start, Duration::from_secs(1))?;
    }
    Ok("n = 3, 4, 6: 0 violations, n directions".into())
}

fn sharpness() -> Outcome {
    let start = Instant::now();
    let quad = gen_sharpness_example(4).map_err(|e| e.to_string())?;
    let four = min_pierce(quad.p(), PierceMode::Incidence).map_err(|e| e.to_string())?.optimum;
    let two = min_pierce(&[ProjPoint::affine(0, 0), ProjPoint::affine(3, 1)], PierceMode::Incidence)
        .map_err(|e| e.to_string())?
        .optimum;
    ensure(four == 3 && two == 1, || format!("optima {four} and {two}"))?;
    within(start, Duration::from_secs(1))?;
    Ok("quadrilateral 3, two points 1".into())
}

fn lower_bound() -> Outcome {
    let start = Instant::now();
    let mut seen = Vec::new();
    for n in [6usize, 5] {
        for seed in 0..5 {
            let p = gen_random_general_position(n, 4, 100 + seed).map_err(|e| e.to_string())?;
            let opt = min_pierce(&p, PierceMode::Incidence).map_err(|e| e.to_string())?.optimum;
            ensure(opt >= n, || format!("n={n} seed={seed}: optimum {opt}"))?;
            seen.push(opt);
        }
    }
    within(start, Duration::from_secs(600))?;
    Ok(format!("optima {seen:?}"))
}

fn random_line(rng: &mut ChaCha8Rng) -> Option<ProjLine> {
    ProjLine::new(rng.random_range(-9i64..=9), rng.random_range(-9i64..=9), rng.random_range(-30i64..=30)).ok()
}

fn chasles() -> Outcome {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let (mut built, mut draws) = (0, 0);
    while built < 200 {
        draws += 1;
        ensure(draws < 100_000, || "could not draw enough grids".into())?;
        let ls: Option<Vec<ProjLine>> = (0..6).map(|_| random_line(&mut rng)).collect();
        let Some(ls) = ls else { continue };
        let Ok(inst) = ChaslesInstance::new([ls[0].clone(), ls[1].clone(), ls[2].clone()], [ls[3].clone(), ls[4].clone(), ls[5].clone()])
        else {
            continue;
        };
        built += 1;
        ensure(chasles_verify(&inst), || format!("grid {built} fails"))?;
        let pts = inst.points();
        let full = oracle::cubic_kernel_dim(&pts);
        ensure((0..9).all(|d| oracle::cubic_kernel_dim(&[&pts[..d], &pts[d + 1..]].concat()) == full), || {
            format!("grid {built}: rational rank disagrees")
        })?;
    }
    within(start, Duration::from_secs(60))?;
    Ok(format!("{built} grids verified"))
}

fn structure() -> Outcome {
    let names = ["hexagon", "torsion-n8", "torsion-n9", "torsion-n10", "torsion-n12"];
    for name in names {
        let start = Instant::now();
        let doc = load_fixture(name).map_err(|e| e.to_string())?;
        let c = plain(&doc)?;
        let st = extract_cyclic_structure(c).map_err(|e| format!("{name}: {e}"))?;
        ensure(oracle::triple_scan(c.p(), c.r(), &st.order, &st.labels, false), || format!("{name}: triple scan disagrees"))?;
        let audit = hull_audit(c).map_err(|e| format!("{name}: {e}"))?;
        let n = c.n();
        ensure(audit.c == 0 && audit.r_outside.len() == n && audit.k == n, || {
            format!("{name}: c={} |R_out|={} k={}", audit.c, audit.r_outside.len(), audit.k)
        })?;
        ensure(tangency_check(c, &st), || format!("{name}: tangency fails"))?;
        within(start, Duration::from_secs(10))?;
    }
    Ok(format!("{} fixtures", names.len()))
}

fn pipeline() -> Outcome {
    let start = Instant::now();
    let doc = load_fixture("torsion-n10").map_err(|e| e.to_string())?;
    let c = plain(&doc)?;
    let stored = doc.cubic.clone().ok_or("no stored cubic")?;
    let st = extract_cyclic_structure(c).map_err(|e| e.to_string())?;
    let points = c.all_points();
    ensure(points.len() == 20, || format!("{} points", points.len()))?;
    for strategy in [Strategy::Direct, Strategy::Seeded] {
        let cert = certify_cubic(c, &st, strategy).map_err(|e| format!("{strategy:?}: {e}"))?;
        ensure(cert.strategy == strategy, || format!("{strategy:?} fell back"))?;
        ensure(oracle::cubic_vanishes(&cert.cubic, &points), || format!("{strategy:?}: cubic misses a point"))?;
        // both are canonical (primitive, leading coefficient positive), so equality is equality up to scale
        ensure(cert.cubic == stored, || format!("{strategy:?}: differs from the stored curve"))?;
    }
    let lp = st.labeled(c.p(), c.r());
    let (mut one, mut two) = (0, 0);
    for i in 0..10 {
        if let Ok(g) = claim1_instance(i, &lp) {
            ensure(chasles_verify(&g.instance), || format!("first claim, i={i}"))?;
            one += 1;
        }
        if let Ok(g) = claim2_instance(i, &lp) {
            ensure(chasles_verify(&g.instance), || format!("second claim, i={i}"))?;
            two += 1;
        }
    }
    ensure(one > 0 && two > 0, || format!("only {one} and {two} grid instances"))?;
    within(start, Duration::from_secs(30))?;
    Ok(format!("both strategies equal the stored curve; {one} + {two} claim grids verify"))
}

fn bipartite() -> Outcome {
    let start = Instant::now();
    let doc = load_fixture("bipartite-2n12").map_err(|e| e.to_string())?;
    let PointSets::Bipartite(bc) = &doc.sets else { return Err("expected a bipartite fixture".into()) };
    ensure(check_alternation(bc), || "alternation fails".into())?;
    let st = extract_bipartite_structure(bc).map_err(|e| e.to_string())?;
    ensure(st.modulus == 12 && st.labels.iter().all(|l| l % 2 == 1), || format!("labels {:?} mod {}", st.labels, st.modulus))?;
    let points = bc.all_points();
    ensure(points.len() == 18, || format!("{} points", points.len()))?;
    for strategy in [Strategy::Direct, Strategy::Seeded] {
        let cert = certify_bipartite_cubic(bc, &st, strategy).map_err(|e| format!("{strategy:?}: {e}"))?;
        ensure(oracle::cubic_vanishes(&cert.cubic, &points), || format!("{strategy:?}: cubic misses a point"))?;
    }
    within(start, Duration::from_secs(30))?;
    Ok("alternation, odd labels mod 12, cubic on 18 points".into())
}

/// Direction count computed from reduced integer vectors, independent of the library.
fn naive_directions(p: &[(i64, i64)]) -> usize {
    let mut dirs = BTreeSet::new();
    for (a, &(x1, y1)) in p.iter().enumerate() {
        for &(x2, y2) in &p[a + 1..] {
            let (mut dx, mut dy) = (x2 - x1, y2 - y1);
            let g = dx.gcd(&dy);
            (dx, dy) = (dx / g, dy / g);
            if dx < 0 || (dx == 0 && dy < 0) {
                (dx, dy) = (-dx, -dy);
            }
            dirs.insert((dx, dy));
        }
    }
    dirs.len()
}

fn ungar() -> Outcome {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let mut sets = 0;
    let mut tight = 0;
    while sets < 100 {
        let n = rng.random_range(3..=10usize);
        let mut raw = BTreeSet::new();
        while raw.len() < n {
            raw.insert((rng.random_range(-3i64..=3), rng.random_range(-3i64..=3)));
        }
        let raw: Vec<(i64, i64)> = raw.into_iter().collect();
        let p: Vec<ProjPoint> = raw.iter().map(|&(x, y)| ProjPoint::affine(x, y)).collect();
        if (2..n).all(|t| collinear(&p[0], &p[1], &p[t])) {
            continue;
        }
        sets += 1;
        let rep = ungar_check(&p).map_err(|e| e.to_string())?;
        let bound = 2 * (n / 2);
        let naive = naive_directions(&raw);
        ensure(rep.directions == naive, || format!("set {sets}: {} directions, oracle says {naive}", rep.directions))?;
        ensure(naive >= bound && rep.pass, || format!("set {sets}: {naive} directions < {bound}"))?;
        tight += usize::from(rep.tight);
    }
    within(start, Duration::from_secs(30))?;
    Ok(format!("{sets} sets, {tight} tight"))
}

fn mutate(text: &str) -> Result<String, String> {
    let mut v: serde_json::Value = serde_json::from_str(text).map_err(|e| e.to_string())?;
    let key = if v.get("P").is_some() { "P" } else { "B" };
    let x = &mut v[key][0][0];
    let bumped: num_bigint::BigInt = match x {
        serde_json::Value::String(s) => s.parse::<num_bigint::BigInt>().map_err(|e| e.to_string())? + 1,
        other => return Err(format!("unexpected coordinate {other}")),
    };
    *x = serde_json::Value::String(bumped.to_string());
    Ok(pierce_core::io::pretty_json(&v))
}

fn oracle_gate() -> Outcome {
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let mut count = 0;
    for name in fixture_names() {
        let path = fixture_path(name);
        let code = pierce(&["oracle", path.to_str().ok_or("path")?]);
        ensure(code == 0, || format!("{name}: exit {code}"))?;
        let text = std::fs::read_to_string(&path).map_err(|e| e.to_string())?;
        let mutant = dir.path().join(format!("{name}.json"));
        std::fs::write(&mutant, mutate(&text)?).map_err(|e| e.to_string())?;
        let code = pierce(&["oracle", mutant.to_str().ok_or("path")?]);
        ensure(code != 0, || format!("mutant of {name}: exit 0"))?;
        count += 1;
    }
    Ok(format!("{count} fixtures exit 0, {count} mutants exit nonzero"))
}

/// Returns `(status, summary)`. The scan fails on errors, irreproducible
/// reports or falsifications the oracle does not confirm; confirmed
/// falsifications are reported as a deviation from the expected count of 0.
fn scan() -> (&'static str, String) {
    const SEED: u64 = 2026;
    let start = Instant::now();
    let (a, b) = match (conjecture_scan(6, 100, SEED, ScanOptions::default()), conjecture_scan(6, 100, SEED, ScanOptions::default())) {
        (Ok(a), Ok(b)) => (a, b),
        (Err(e), _) | (_, Err(e)) => return ("FAIL", e.to_string()),
    };
    if a != b {
        return ("FAIL", "two runs with the same seed differ".into());
    }
    let confirmed = a.falsifications.iter().all(|f| {
        let all: Vec<ProjPoint> = f.p.iter().chain(&f.r).cloned().collect();
        f.r.len() == 6
            && oracle::naive_violations(&f.p, &f.r, PierceMode::Incidence, None).is_empty()
            && oracle::cubic_kernel_dim(&all) == 0
    });
    if !confirmed {
        return ("FAIL", "a reported falsification does not survive the oracle".into());
    }
    if start.elapsed() >= Duration::from_secs(900) {
        return ("FAIL", format!("took {:?}", start.elapsed()));
    }
    let summary = format!(
        "seed {SEED}: reproducible, {} of 100 instances with optimum 6, {} witnesses tested, {} falsifications",
        a.in_hypothesis,
        a.witnesses_tested,
        a.falsifications.len()
    );
    if a.falsifications.is_empty() {
        ("PASS", summary)
    } else {
        (
            "DEVIATION",
            format!(
                "{summary} (expected 0; each is an incidence-mode piercing set of size 6 with no cubic through P ∪ R, \
                 independently confirmed — see the incidence-n6-no-cubic fixture)"
            ),
        )
    }
}

fn main() {
    let criteria: [Criterion; 9] = [
        ("affine-regular constructions", constructions),
        ("sharpness", sharpness),
        ("lower bound at desk scale", lower_bound),
        ("ninth point of a 3+3 grid", chasles),
        ("cyclic structure and hull audit", structure),
        ("cubic certification, order 10", pipeline),
        ("bipartite pipeline, 2n = 12", bipartite),
        ("direction bound", ungar),
        ("oracle gate and mutants", oracle_gate),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let (ok, detail) = match f() {
            Ok(d) => (true, d),
            Err(d) => (false, d),
        };
        failed += usize::from(!ok);
        println!("criterion {:>2} {}: {name}: {detail} [{:.2?}]", i + 1, if ok { "PASS" } else { "FAIL" }, start.elapsed());
    }
    let start = Instant::now();
    let (status, detail) = scan();
    failed += usize::from(status == "FAIL");
    println!("criterion 10 {status}: conjecture scan: {detail} [{:.2?}]", start.elapsed());
    if failed > 0 {
        println!("{failed} criteria failed");
        std::process::exit(1);
    }
}
