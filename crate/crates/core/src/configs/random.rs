use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::ConfigError;
use crate::geom::{collinear, ProjPoint};

const TRIES_PER_POINT: usize = 2_000;

/// `n` distinct affine integer points in `[-bound, bound]²`, no three
/// collinear, drawn deterministically from `seed`.
///
/// A `(2b+1) × (2b+1)` grid holds at most `2(2b+1)` points in general
/// position, so larger requests are rejected up front.
pub fn gen_random_general_position(n: usize, bound: i64, seed: u64) -> Result<Vec<ProjPoint>, ConfigError> {
    if bound < 1 {
        return Err(ConfigError::InvalidInput(format!("bound must be positive, got {bound}")));
    }
    let side = 2 * bound as u128 + 1;
    if n as u128 > 2 * side {
        return Err(ConfigError::InvalidInput(format!(
            "at most {} points in general position fit in [-{bound}, {bound}]^2",
            2 * side
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out: Vec<ProjPoint> = Vec::with_capacity(n);
    let max_tries = TRIES_PER_POINT * n.max(1);
    let mut tries = 0;
    while out.len() < n {
        if tries == max_tries {
            return Err(ConfigError::ExhaustedRetries { n, bound, tries });
        }
        tries += 1;
        let p = ProjPoint::affine(rng.random_range(-bound..=bound), rng.random_range(-bound..=bound));
        if out.contains(&p) {
            continue;
        }
        let ok = out.iter().enumerate().all(|(i, a)| out[i + 1..].iter().all(|b| !collinear(a, b, &p)));
        if ok {
            out.push(p);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::is_general_position;
    use proptest::prelude::*;

    #[test]
    fn deterministic() {
        let a = gen_random_general_position(7, 10, 42).unwrap();
        assert_eq!(a, gen_random_general_position(7, 10, 42).unwrap());
        assert_ne!(a, gen_random_general_position(7, 10, 43).unwrap());
    }

    #[test]
    fn rejects_impossible_requests() {
        assert!(matches!(gen_random_general_position(7, 1, 0), Err(ConfigError::InvalidInput(_))));
        assert!(matches!(gen_random_general_position(3, 0, 0), Err(ConfigError::InvalidInput(_))));
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(32))]
        #[test]
        fn output_is_in_general_position(n in 0usize..9, bound in 3i64..20, seed: u64) {
            let pts = gen_random_general_position(n, bound, seed).unwrap();
            prop_assert_eq!(pts.len(), n);
            prop_assert!(is_general_position(&pts));
            for p in &pts {
                let (x, y) = p.to_f64().unwrap();
                prop_assert!(x.abs() <= bound as f64 && y.abs() <= bound as f64);
            }
        }
    }
}
