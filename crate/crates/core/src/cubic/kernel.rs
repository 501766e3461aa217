use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Fraction-free Gauss–Jordan reduction (Bareiss). Every division is exact
/// and after the last step each pivot row has the same pivot value.
struct Reduced {
    rows: Vec<Vec<BigInt>>,
    pivots: Vec<usize>,
    det: BigInt,
}

fn reduce(matrix: &[Vec<BigInt>], ncols: usize) -> Reduced {
    let mut a: Vec<Vec<BigInt>> = matrix.to_vec();
    let m = a.len();
    let mut prev = BigInt::one();
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..ncols {
        if r == m {
            break;
        }
        let Some(p) = (r..m).filter(|&i| !a[i][col].is_zero()).min_by_key(|&i| a[i][col].magnitude().clone()) else {
            continue;
        };
        a.swap(r, p);
        let pivot_row = a[r].clone();
        let piv = pivot_row[col].clone();
        for (i, row) in a.iter_mut().enumerate() {
            if i == r {
                continue;
            }
            let f = row[col].clone();
            for j in 0..ncols {
                let num = &piv * &row[j] - &f * &pivot_row[j];
                let (q, rem) = num.div_rem(&prev);
                debug_assert!(rem.is_zero(), "inexact fraction-free step");
                row[j] = q;
            }
        }
        prev = piv;
        pivots.push(col);
        r += 1;
    }
    Reduced { rows: a, pivots, det: prev }
}

pub fn rank(matrix: &[Vec<BigInt>], ncols: usize) -> usize {
    reduce(matrix, ncols).pivots.len()
}

fn primitive(mut v: Vec<BigInt>) -> Vec<BigInt> {
    let g = v.iter().fold(BigInt::zero(), |g, c| g.gcd(c));
    if !g.is_zero() {
        let g = if v.iter().find(|c| !c.is_zero()).is_some_and(|c| c.is_negative()) { -g } else { g };
        for c in &mut v {
            *c = &*c / &g;
        }
    }
    v
}

/// Integer basis of the right null space of `matrix` (`m × ncols`), one
/// primitive vector per free column, in increasing free-column order.
pub fn kernel(matrix: &[Vec<BigInt>], ncols: usize) -> Vec<Vec<BigInt>> {
    let red = reduce(matrix, ncols);
    let free: Vec<usize> = (0..ncols).filter(|c| !red.pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![BigInt::zero(); ncols];
            v[f] = red.det.clone();
            for (t, &pc) in red.pivots.iter().enumerate() {
                debug_assert_eq!(red.rows[t][pc], red.det);
                v[pc] = -red.rows[t][f].clone();
            }
            primitive(v)
        })
        .collect()
}
