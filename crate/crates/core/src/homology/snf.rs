//! Smith normal form over checked 64-bit integers.

use crate::error::{Error, Result};

/// Dense integer matrix stored row-major.
pub type IntMatrix = Vec<Vec<i64>>;

/// `u * m * v = diag(d)` with `u`, `v` unimodular and `d[i] | d[i + 1]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Snf {
    pub d: Vec<i64>,
    pub u: IntMatrix,
    pub u_inv: IntMatrix,
    pub v: IntMatrix,
}

pub fn identity(n: usize) -> IntMatrix {
    (0..n)
        .map(|i| (0..n).map(|j| i64::from(i == j)).collect())
        .collect()
}

fn mul_add(x: i64, k: i64, y: i64) -> Result<i64> {
    k.checked_mul(y)
        .and_then(|p| x.checked_add(p))
        .ok_or(Error::IntegerOverflow)
}

pub fn mat_mul(a: &IntMatrix, b: &IntMatrix) -> Result<IntMatrix> {
    let (r, k, c) = (a.len(), b.len(), b.first().map_or(0, Vec::len));
    let mut out = vec![vec![0i64; c]; r];
    for i in 0..r {
        for j in 0..c {
            for l in 0..k {
                out[i][j] = mul_add(out[i][j], a[i][l], b[l][j])?;
            }
        }
    }
    Ok(out)
}

pub fn mat_vec(a: &IntMatrix, x: &[i64]) -> Result<Vec<i64>> {
    a.iter()
        .map(|row| {
            row.iter()
                .zip(x)
                .try_fold(0i64, |acc, (&r, &v)| mul_add(acc, r, v))
        })
        .collect()
}

struct Reducer {
    a: IntMatrix,
    u: IntMatrix,
    u_inv: IntMatrix,
    v: IntMatrix,
}

impl Reducer {
    /// row i += k * row j
    fn add_row(&mut self, i: usize, j: usize, k: i64) -> Result<()> {
        for c in 0..self.a.len() {
            self.a[i][c] = mul_add(self.a[i][c], k, self.a[j][c])?;
            self.u[i][c] = mul_add(self.u[i][c], k, self.u[j][c])?;
        }
        for r in 0..self.a.len() {
            self.u_inv[r][j] = mul_add(self.u_inv[r][j], -k, self.u_inv[r][i])?;
        }
        Ok(())
    }

    /// col j += k * col i
    fn add_col(&mut self, j: usize, i: usize, k: i64) -> Result<()> {
        for r in 0..self.a.len() {
            self.a[r][j] = mul_add(self.a[r][j], k, self.a[r][i])?;
            self.v[r][j] = mul_add(self.v[r][j], k, self.v[r][i])?;
        }
        Ok(())
    }

    fn swap_rows(&mut self, i: usize, j: usize) {
        self.a.swap(i, j);
        self.u.swap(i, j);
        for row in &mut self.u_inv {
            row.swap(i, j);
        }
    }

    fn swap_cols(&mut self, i: usize, j: usize) {
        for r in 0..self.a.len() {
            self.a[r].swap(i, j);
            self.v[r].swap(i, j);
        }
    }

    fn negate_row(&mut self, i: usize) {
        for c in 0..self.a.len() {
            self.a[i][c] = -self.a[i][c];
            self.u[i][c] = -self.u[i][c];
        }
        for row in &mut self.u_inv {
            row[i] = -row[i];
        }
    }
}

/// Smith normal form of a square nonsingular integer matrix.
pub fn smith_normal_form(m: &IntMatrix) -> Result<Snf> {
    let n = m.len();
    if m.iter().any(|row| row.len() != n) {
        return Err(Error::DimensionMismatch {
            expected: n,
            got: m.iter().map(Vec::len).find(|&l| l != n).unwrap_or(n),
        });
    }
    let mut r = Reducer {
        a: m.clone(),
        u: identity(n),
        u_inv: identity(n),
        v: identity(n),
    };
    for t in 0..n {
        loop {
            let pivot = (t..n)
                .flat_map(|i| (t..n).map(move |j| (i, j)))
                .filter(|&(i, j)| r.a[i][j] != 0)
                .min_by_key(|&(i, j)| r.a[i][j].unsigned_abs());
            let Some((pi, pj)) = pivot else {
                return Err(Error::SingularLattice);
            };
            if pi != t {
                r.swap_rows(pi, t);
            }
            if pj != t {
                r.swap_cols(pj, t);
            }
            let p = r.a[t][t];
            let mut clean = true;
            for i in (t + 1)..n {
                if r.a[i][t] != 0 {
                    r.add_row(i, t, -(r.a[i][t] / p))?;
                    clean &= r.a[i][t] == 0;
                }
            }
            for j in (t + 1)..n {
                if r.a[t][j] != 0 {
                    r.add_col(j, t, -(r.a[t][j] / p))?;
                    clean &= r.a[t][j] == 0;
                }
            }
            if !clean {
                continue;
            }
            let bad = (t + 1..n).find(|&i| (t + 1..n).any(|j| r.a[i][j] % p != 0));
            match bad {
                Some(i) => r.add_row(t, i, 1)?,
                None => break,
            }
        }
        if r.a[t][t] < 0 {
            r.negate_row(t);
        }
    }
    Ok(Snf {
        d: (0..n).map(|i| r.a[i][i]).collect(),
        u: r.u,
        u_inv: r.u_inv,
        v: r.v,
    })
}

/// Basis of `{x in Z^g : a . x = 0 mod k}`, returned as columns of a `g x g` matrix.
pub fn kernel_mod(a: &[i64], k: i64) -> Result<IntMatrix> {
    if k == 0 {
        return Err(Error::SingularLattice);
    }
    let g = a.len();
    // Column-reduce the row (a, k) in Z^{g+1}; the trailing columns span its kernel.
    let mut row: Vec<i64> = a.iter().copied().chain([k]).collect();
    let mut v = identity(g + 1);
    while let Some(p) = (0..=g)
        .filter(|&j| row[j] != 0)
        .min_by_key(|&j| row[j].unsigned_abs())
    {
        if p != 0 {
            row.swap(0, p);
            for r in &mut v {
                r.swap(0, p);
            }
        }
        let mut clean = true;
        for j in 1..=g {
            if row[j] != 0 {
                let q = row[j] / row[0];
                row[j] = mul_add(row[j], -q, row[0])?;
                for r in &mut v {
                    r[j] = mul_add(r[j], -q, r[0])?;
                }
                clean &= row[j] == 0;
            }
        }
        if clean {
            break;
        }
    }
    Ok((0..g).map(|i| v[i][1..].to_vec()).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn det(m: &IntMatrix) -> i128 {
        let n = m.len();
        if n == 0 {
            return 1;
        }
        (0..n)
            .map(|j| {
                let minor: IntMatrix = (1..n)
                    .map(|i| (0..n).filter(|&c| c != j).map(|c| m[i][c]).collect())
                    .collect();
                let s = if j % 2 == 0 { 1 } else { -1 };
                s * m[0][j] as i128 * det(&minor)
            })
            .sum()
    }

    fn check(m: &IntMatrix) {
        let s = smith_normal_form(m).unwrap();
        let n = m.len();
        let prod = mat_mul(&mat_mul(&s.u, m).unwrap(), &s.v).unwrap();
        for i in 0..n {
            for j in 0..n {
                assert_eq!(prod[i][j], if i == j { s.d[i] } else { 0 });
            }
        }
        assert_eq!(mat_mul(&s.u, &s.u_inv).unwrap(), identity(n));
        assert_eq!(det(&s.u).abs(), 1);
        assert_eq!(det(&s.v).abs(), 1);
        for w in s.d.windows(2) {
            assert_eq!(w[1] % w[0], 0);
        }
        assert_eq!(s.d.iter().map(|&x| x as i128).product::<i128>(), det(m).abs());
    }

    #[test]
    fn diagonal_scaling() {
        let s = smith_normal_form(&vec![vec![3, 0, 0], vec![0, 3, 0], vec![0, 0, 3]]).unwrap();
        assert_eq!(s.d, vec![3, 3, 3]);
    }

    #[test]
    fn needs_divisibility_fix() {
        let m = vec![vec![2, 0], vec![0, 3]];
        assert_eq!(smith_normal_form(&m).unwrap().d, vec![1, 6]);
        check(&m);
    }

    #[test]
    fn singular() {
        assert_eq!(
            smith_normal_form(&vec![vec![1, 2], vec![2, 4]]),
            Err(Error::SingularLattice)
        );
    }

    #[test]
    fn overflow_is_reported() {
        assert_eq!(
            mat_mul(&vec![vec![i64::MAX]], &vec![vec![2]]),
            Err(Error::IntegerOverflow)
        );
        // Eliminating the first column multiplies the huge entry by -1e18.
        let m = vec![vec![1, i64::MAX / 3], vec![1_000_000_000_000_000_000, 1]];
        assert_eq!(smith_normal_form(&m), Err(Error::IntegerOverflow));
    }

    #[test]
    fn kernel_index() {
        let k = kernel_mod(&[1, 1, 1], 3).unwrap();
        assert_eq!(det(&k).abs(), 3);
        for j in 0..3 {
            let s: i64 = (0..3).map(|i| k[i][j]).sum();
            assert_eq!(s % 3, 0);
        }
        let k = kernel_mod(&[2, 4], 6).unwrap();
        assert_eq!(det(&k).abs(), 3);
    }

    proptest! {
        #[test]
        fn snf_invariants(entries in proptest::collection::vec(-9i64..=9, 9)) {
            let m: IntMatrix = entries.chunks(3).map(<[i64]>::to_vec).collect();
            prop_assume!(det(&m) != 0);
            check(&m);
        }

        #[test]
        fn kernel_has_expected_index(a in proptest::collection::vec(-20i64..=20, 1..4), k in 1i64..30) {
            let ker = kernel_mod(&a, k).unwrap();
            let g = a.len();
            let image = a.iter().fold(k, |acc, &x| num_integer::gcd(acc, x));
            prop_assert_eq!(det(&ker).abs(), (k / image) as i128);
            for j in 0..g {
                let s: i64 = (0..g).map(|i| a[i] * ker[i][j]).sum();
                prop_assert_eq!(s.rem_euclid(k), 0);
            }
        }
    }
}
