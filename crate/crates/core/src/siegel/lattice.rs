//! Integer-lattice helpers for the Siegel solver: rational kernel bases,
//! Hermite-style size reduction, and an exact LLL with rational
//! Gram-Schmidt data. Dimensions stay in the dozens at desk scale.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Kernel basis of an integer matrix (rows x cols), as integer vectors with
/// content removed. Deterministic: RREF with first-nonzero pivoting, free
/// variables in column order.
pub fn kernel_basis(rows: &[Vec<BigInt>], cols: usize) -> Vec<Vec<BigInt>> {
    let mut m: Vec<Vec<BigRational>> = rows
        .iter()
        .map(|r| r.iter().map(|c| BigRational::from(c.clone())).collect())
        .collect();
    let nrows = m.len();
    let mut pivot_cols: Vec<usize> = Vec::new();
    let mut row = 0usize;
    for col in 0..cols {
        let Some(pr) = (row..nrows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(row, pr);
        let inv = m[row][col].clone().recip();
        for j in col..cols {
            let v = &m[row][j] * &inv;
            m[row][j] = v;
        }
        for r in 0..nrows {
            if r != row && !m[r][col].is_zero() {
                let f = m[r][col].clone();
                for j in col..cols {
                    let v = &m[r][j] - &f * &m[row][j];
                    m[r][j] = v;
                }
            }
        }
        pivot_cols.push(col);
        row += 1;
        if row == nrows {
            break;
        }
    }
    let is_pivot = {
        let mut v = vec![false; cols];
        for &c in &pivot_cols {
            v[c] = true;
        }
        v
    };
    let mut basis = Vec::new();
    for free in 0..cols {
        if is_pivot[free] {
            continue;
        }
        let mut vq = vec![BigRational::zero(); cols];
        vq[free] = BigRational::one();
        for (r, &pc) in pivot_cols.iter().enumerate() {
            vq[pc] = -m[r][free].clone();
        }
        // clear denominators and content
        let mut lcm = BigInt::one();
        for q in &vq {
            lcm = lcm.lcm(q.denom());
        }
        let mut vi: Vec<BigInt> = vq.iter().map(|q| q.numer() * (&lcm / q.denom())).collect();
        let mut g = BigInt::zero();
        for x in &vi {
            g = g.gcd(x);
        }
        if !g.is_zero() && !g.is_one() {
            for x in &mut vi {
                *x /= &g;
            }
        }
        basis.push(vi);
    }
    basis
}

/// Row-style Hermite reduction: brings the basis toward upper-triangular form
/// with reduced entries. Keeps the lattice generated by the rows unchanged.
pub fn hnf_reduce(mut basis: Vec<Vec<BigInt>>) -> Vec<Vec<BigInt>> {
    if basis.is_empty() {
        return basis;
    }
    let cols = basis[0].len();
    let mut top = 0usize;
    for col in 0..cols {
        if top >= basis.len() {
            break;
        }
        loop {
            // find the row (>= top) with smallest nonzero |entry| in this column
            let mut best: Option<usize> = None;
            for r in top..basis.len() {
                if basis[r][col].is_zero() {
                    continue;
                }
                match best {
                    None => best = Some(r),
                    Some(b) => {
                        if basis[r][col].magnitude() < basis[b][col].magnitude() {
                            best = Some(r);
                        }
                    }
                }
            }
            let Some(b) = best else { break };
            basis.swap(top, b);
            let mut done = true;
            let pivot = basis[top][col].clone();
            for r in top + 1..basis.len() {
                if basis[r][col].is_zero() {
                    continue;
                }
                let q = div_round(&basis[r][col], &pivot);
                if !q.is_zero() {
                    for j in 0..cols {
                        let sub = &q * &basis[top][j];
                        basis[r][j] -= sub;
                    }
                }
                if !basis[r][col].is_zero() {
                    done = false;
                }
            }
            if done {
                // normalize pivot sign, reduce rows above
                if basis[top][col].is_negative() {
                    for x in &mut basis[top] {
                        *x = -x.clone();
                    }
                }
                top += 1;
                break;
            }
        }
    }
    basis.retain(|r| r.iter().any(|x| !x.is_zero()));
    basis
}

/// Nearest-integer quotient.
fn div_round(a: &BigInt, b: &BigInt) -> BigInt {
    let (q, r) = a.div_rem(b);
    if r.magnitude() * 2u32 > *b.magnitude() {
        if r.is_negative() == b.is_negative() {
            q + 1
        } else {
            q - 1
        }
    } else {
        q
    }
}

/// Exact LLL reduction (delta = 99/100) on the rows. Returns the reduced
/// basis sorted by (max |entry|, lexicographic) ascending.
pub fn lll_reduce(mut basis: Vec<Vec<BigInt>>) -> Vec<Vec<BigInt>> {
    basis.retain(|r| r.iter().any(|x| !x.is_zero()));
    let n = basis.len();
    if n <= 1 {
        return basis;
    }
    let delta = BigRational::new(BigInt::from(99), BigInt::from(100));

    // rational Gram-Schmidt recomputation
    let gram = |basis: &Vec<Vec<BigInt>>| -> (Vec<Vec<BigRational>>, Vec<BigRational>) {
        let n = basis.len();
        let mut mu = vec![vec![BigRational::zero(); n]; n];
        let mut b = vec![BigRational::zero(); n];
        // b*_i = b_i - sum_{j<i} mu_ij b*_j ; track via rational dot products
        let mut bstar: Vec<Vec<BigRational>> = Vec::with_capacity(n);
        for i in 0..n {
            let mut v: Vec<BigRational> = basis[i]
                .iter()
                .map(|x| BigRational::from(x.clone()))
                .collect();
            for j in 0..i {
                if b[j].is_zero() {
                    mu[i][j] = BigRational::zero();
                    continue;
                }
                let num: BigRational = basis[i]
                    .iter()
                    .zip(&bstar[j])
                    .map(|(x, y)| BigRational::from(x.clone()) * y)
                    .sum();
                mu[i][j] = num / &b[j];
                for (kx, y) in v.iter_mut().zip(&bstar[j]) {
                    *kx -= &mu[i][j] * y;
                }
            }
            b[i] = v.iter().map(|x| x * x).sum();
            bstar.push(v);
        }
        (mu, b)
    };

    let (mut mu, mut b) = gram(&basis);
    let mut k = 1usize;
    let mut guard = 0usize;
    while k < n {
        guard += 1;
        if guard > 20_000 {
            break; // safety valve; verification happens downstream
        }
        // size-reduce row k against rows < k
        for j in (0..k).rev() {
            let q = rational_round(&mu[k][j]);
            if !q.is_zero() {
                for idx in 0..basis[j].len() {
                    let sub = &q * &basis[j][idx];
                    basis[k][idx] -= sub;
                }
                let (m2, b2) = gram(&basis);
                mu = m2;
                b = b2;
            }
        }
        // Lovasz condition
        let lhs = &b[k];
        let rhs = (&delta - &mu[k][k - 1] * &mu[k][k - 1]) * &b[k - 1];
        if *lhs >= rhs || b[k - 1].is_zero() {
            k += 1;
        } else {
            basis.swap(k, k - 1);
            let (m2, b2) = gram(&basis);
            mu = m2;
            b = b2;
            k = k.max(2) - 1;
        }
    }
    basis.sort_by(|a, bb| {
        let ma = a.iter().map(|x| x.magnitude().clone()).max().unwrap();
        let mb = bb.iter().map(|x| x.magnitude().clone()).max().unwrap();
        ma.cmp(&mb).then_with(|| a.cmp(bb))
    });
    basis
}

fn rational_round(q: &BigRational) -> BigInt {
    let two = BigInt::from(2);
    let num = q.numer() * &two + q.denom();
    let den = q.denom() * &two;
    num.div_floor(&den)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bi(v: i64) -> BigInt {
        BigInt::from(v)
    }

    #[test]
    fn kernel_of_simple_row() {
        // x + 2y + z = 0
        let rows = vec![vec![bi(1), bi(2), bi(1)]];
        let basis = kernel_basis(&rows, 3);
        assert_eq!(basis.len(), 2);
        for v in &basis {
            let r: BigInt = v[0].clone() + 2 * v[1].clone() + v[2].clone();
            assert!(r.is_zero());
        }
    }

    #[test]
    fn hnf_keeps_lattice_and_shrinks() {
        let basis = vec![
            vec![bi(100), bi(0), bi(2)],
            vec![bi(99), bi(1), bi(2)],
            vec![bi(0), bi(100), bi(0)],
        ];
        let h = hnf_reduce(basis);
        assert_eq!(h.len(), 3);
        // all rows nonzero
        assert!(h.iter().all(|r| r.iter().any(|x| !x.is_zero())));
    }

    #[test]
    fn lll_finds_short_vector() {
        // classic: rows (1, 0, 1000000) and (0, 1, 999999) -> short combo
        let basis = vec![
            vec![bi(1), bi(0), bi(1_000_000)],
            vec![bi(0), bi(1), bi(999_999)],
        ];
        let red = lll_reduce(basis);
        let shortest = &red[0];
        let maxe = shortest.iter().map(|x| x.magnitude().clone()).max().unwrap();
        assert!(maxe <= bi(2).magnitude().clone());
    }

    #[test]
    fn lll_deterministic() {
        let basis = vec![
            vec![bi(7), bi(3), bi(-2), bi(0)],
            vec![bi(1), bi(-4), bi(5), bi(2)],
            vec![bi(0), bi(6), bi(6), bi(-3)],
        ];
        let a = lll_reduce(basis.clone());
        let b = lll_reduce(basis);
        assert_eq!(a, b);
    }
}
