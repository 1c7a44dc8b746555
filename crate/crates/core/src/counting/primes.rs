//! Prime cycle and cycle counts recovered from circuit counts by Möbius inversion.

use super::ClassCounts;
use crate::error::{Error, Result};
use crate::homology::QuotientGroup;

pub fn mobius(n: usize) -> i64 {
    let mut n = n;
    let mut mu = 1;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            n /= p;
            if n % p == 0 {
                return 0;
            }
            mu = -mu;
        }
        p += 1;
    }
    if n > 1 {
        mu = -mu;
    }
    mu
}

fn divisors(l: usize) -> impl Iterator<Item = usize> {
    (1..=l).filter(move |d| l % d == 0)
}

/// Fills `pi` and `pi_c` given `N` and a solver for `k b = a`.
fn fill<F>(counts: &mut ClassCounts, divide: F) -> Result<()>
where
    F: Fn(&[i64], usize) -> Vec<Vec<i64>>,
{
    let len = counts.max_len;
    let labels: Vec<Vec<i64>> = counts.rows.keys().cloned().collect();
    let mut pi: Vec<Vec<u64>> = vec![vec![0; len]; labels.len()];
    let index: std::collections::HashMap<&Vec<i64>, usize> =
        labels.iter().enumerate().map(|(i, l)| (l, i)).collect();
    for l in 1..=len {
        for (i, label) in labels.iter().enumerate() {
            let mut sum: i128 = 0;
            for d in divisors(l) {
                let mu = mobius(l / d);
                if mu == 0 {
                    continue;
                }
                let n: u64 = divide(label, l / d).iter().map(|b| counts.n(b, d)).sum();
                sum += i128::from(mu) * i128::from(n);
            }
            if sum < 0 || sum % l as i128 != 0 {
                return Err(Error::NonIntegerResult {
                    value: sum as f64 / l as f64,
                });
            }
            pi[i][l - 1] = (sum / l as i128) as u64;
        }
    }
    let lookup = |b: &Vec<i64>, d: usize| index.get(b).map_or(0, |&j| pi[j][d - 1]);
    let mut pi_c: Vec<Vec<u64>> = vec![vec![0; len]; labels.len()];
    for (i, label) in labels.iter().enumerate() {
        for l in 1..=len {
            pi_c[i][l - 1] = divisors(l)
                .map(|d| divide(label, l / d).iter().map(|b| lookup(b, d)).sum::<u64>())
                .sum();
        }
    }
    for (i, label) in labels.iter().enumerate() {
        let row = counts.rows.get_mut(label).expect("label exists");
        row.pi = std::mem::take(&mut pi[i]);
        row.pi_c = std::mem::take(&mut pi_c[i]);
    }
    counts.has_primes = true;
    Ok(())
}

/// Prime and cycle counts for classes of a finite quotient.
pub fn fill_primes_quotient(counts: &mut ClassCounts, q: &QuotientGroup) -> Result<()> {
    fill(counts, |a, k| {
        q.divide(q.index_of(a), k as i64)
            .into_iter()
            .map(|b| q.elements[b].clone())
            .collect()
    })
}

/// Prime and cycle counts for classes in `Z^g`, where `k b = a` has at most one solution.
pub fn fill_primes_integral(counts: &mut ClassCounts) -> Result<()> {
    fill(counts, |a, k| {
        let k = k as i64;
        if a.iter().all(|x| x % k == 0) {
            vec![a.iter().map(|x| x / k).collect()]
        } else {
            Vec::new()
        }
    })
}
