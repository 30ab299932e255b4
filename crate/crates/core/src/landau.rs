//! Landau's function and its two parity-restricted variants, with witness
//! partitions.
//!
//! lambda(n) is the maximum lcm over all partitions of n; lambda0 restricts
//! to partitions with no even part; lambda2 to partitions with a positive
//! even number of even parts. The maxima are attained on partitions into
//! powers of distinct primes padded with 1s (odd primes for lambda0; odd
//! primes plus one power of two and one extra 2 for lambda2), which reduces
//! the search to a small dynamic program over prime powers.

use crate::{Error, Result};
use num_bigint::BigUint;
use num_traits::One;

/// A value of (a variant of) Landau's function with a witness partition.
/// The witness parts are sorted descending, padded with 1s to sum exactly
/// to n, and their lcm equals `value`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LandauValue {
    pub value: BigUint,
    pub witness: Vec<u64>,
}

impl LandauValue {
    pub fn witness_string(&self) -> String {
        self.witness
            .iter()
            .map(|p| p.to_string())
            .collect::<Vec<_>>()
            .join(",")
    }
}

fn primes_up_to(n: u64) -> Vec<u64> {
    let mut sieve = vec![true; (n + 1).max(2) as usize];
    sieve[0] = false;
    sieve[1] = false;
    let mut p = 2usize;
    while p * p <= n as usize {
        if sieve[p] {
            let mut q = p * p;
            while q <= n as usize {
                sieve[q] = false;
                q += p;
            }
        }
        p += 1;
    }
    (2..=n as usize).filter(|&i| sieve[i]).map(|i| i as u64).collect()
}

/// Maximum product of prime powers over distinct primes from `primes` with
/// total sum <= budget; returns the product and the chosen parts.
fn best_prime_power_product(primes: &[u64], budget: u64) -> (BigUint, Vec<u64>) {
    let b = budget as usize;
    // choice[i][r]: exponent power p_i^e (as the part value) chosen at
    // prime i with remaining budget r, 0 = skip.
    let mut value: Vec<Vec<BigUint>> = vec![vec![BigUint::one(); b + 1]; primes.len() + 1];
    let mut choice: Vec<Vec<u64>> = vec![vec![0u64; b + 1]; primes.len() + 1];
    for i in (0..primes.len()).rev() {
        for r in 0..=b {
            let mut best = value[i + 1][r].clone();
            let mut pick = 0u64;
            let mut pw = primes[i];
            while pw <= r as u64 {
                let cand = &value[i + 1][r - pw as usize] * BigUint::from(pw);
                if cand > best {
                    best = cand;
                    pick = pw;
                }
                pw = match pw.checked_mul(primes[i]) {
                    Some(x) => x,
                    None => break,
                };
            }
            value[i][r] = best;
            choice[i][r] = pick;
        }
    }
    let mut parts = Vec::new();
    let mut r = b;
    for i in 0..primes.len() {
        let pick = choice[i][r];
        if pick > 0 {
            parts.push(pick);
            r -= pick as usize;
        }
    }
    (value[0][b].clone(), parts)
}

fn finish(mut parts: Vec<u64>, n: u64, value: BigUint) -> LandauValue {
    parts.sort_unstable_by(|a, b| b.cmp(a));
    let used: u64 = parts.iter().sum();
    parts.extend(std::iter::repeat(1).take((n - used) as usize));
    LandauValue { value, witness: parts }
}

/// lambda(n): maximum order of a permutation of n elements.
pub fn landau(n: u64) -> LandauValue {
    let primes = primes_up_to(n);
    let (value, parts) = best_prime_power_product(&primes, n);
    finish(parts, n, value)
}

/// lambda0(n): maximum lcm over partitions of n with only odd parts.
pub fn landau0(n: u64) -> LandauValue {
    let primes: Vec<u64> = primes_up_to(n).into_iter().filter(|&p| p != 2).collect();
    let (value, parts) = best_prime_power_product(&primes, n);
    finish(parts, n, value)
}

/// lambda2(n): maximum lcm over partitions of n with a positive even number
/// of even parts. Undefined (None) for n <= 3.
pub fn landau2(n: u64) -> Option<LandauValue> {
    if n < 4 {
        return None;
    }
    // Witness shape: a power of two 2^c, an extra 2, odd prime powers, 1s.
    // The extra 2 contributes nothing to the lcm, so the value is
    // 2^c * lambda0(n - 2^c - 2).
    let mut best: Option<LandauValue> = None;
    let mut pw = 2u64;
    while pw + 2 <= n {
        let odd = landau0(n - pw - 2);
        let value = odd.value * BigUint::from(pw);
        let mut parts = odd.witness;
        parts.push(pw);
        parts.push(2);
        let cand = finish(parts, n, value);
        if best.as_ref().map_or(true, |b| cand.value > b.value) {
            best = Some(cand);
        }
        pw *= 2;
    }
    best
}

fn to_u64(v: &BigUint) -> u64 {
    let digits = v.to_u64_digits();
    match digits.len() {
        0 => 0,
        1 => digits[0],
        _ => panic!("landau value exceeds u64"),
    }
}

pub fn landau_u64(n: usize) -> u64 {
    to_u64(&landau(n as u64).value)
}

pub fn landau0_u64(n: usize) -> u64 {
    to_u64(&landau0(n as u64).value)
}

pub fn landau2_u64(n: usize) -> Option<u64> {
    landau2(n as u64).map(|v| to_u64(&v.value))
}

/// One row of the table emitted by the CLI.
#[derive(Clone, Debug)]
pub struct TableRow {
    pub n: u64,
    pub lambda: LandauValue,
    pub lambda0: LandauValue,
    pub lambda2: Option<LandauValue>,
}

pub fn table(max_n: u64) -> Result<Vec<TableRow>> {
    if max_n < 1 {
        return Err(Error::Param("table needs n >= 1".into()));
    }
    Ok((1..=max_n)
        .map(|n| TableRow {
            n,
            lambda: landau(n),
            lambda0: landau0(n),
            lambda2: landau2(n),
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(n: u64) -> (u64, String) {
        let l = landau(n);
        (to_u64(&l.value), l.witness_string())
    }

    fn v0(n: u64) -> (u64, String) {
        let l = landau0(n);
        (to_u64(&l.value), l.witness_string())
    }

    fn v2(n: u64) -> Option<(u64, String)> {
        landau2(n).map(|l| (to_u64(&l.value), l.witness_string()))
    }

    #[test]
    fn first_twenty_values_and_witnesses() {
        let lam: [(u64, &str); 20] = [
            (1, "1"),
            (2, "2"),
            (3, "3"),
            (4, "4"),
            (6, "3,2"),
            (6, "3,2,1"),
            (12, "4,3"),
            (15, "5,3"),
            (20, "5,4"),
            (30, "5,3,2"),
            (30, "5,3,2,1"),
            (60, "5,4,3"),
            (60, "5,4,3,1"),
            (84, "7,4,3"),
            (105, "7,5,3"),
            (140, "7,5,4"),
            (210, "7,5,3,2"),
            (210, "7,5,3,2,1"),
            (420, "7,5,4,3"),
            (420, "7,5,4,3,1"),
        ];
        for (i, &(val, wit)) in lam.iter().enumerate() {
            assert_eq!(v(i as u64 + 1), (val, wit.to_string()), "lambda({})", i + 1);
        }

        let lam0: [(u64, &str); 20] = [
            (1, "1"),
            (1, "1,1"),
            (3, "3"),
            (3, "3,1"),
            (5, "5"),
            (5, "5,1"),
            (7, "7"),
            (15, "5,3"),
            (15, "5,3,1"),
            (21, "7,3"),
            (21, "7,3,1"),
            (35, "7,5"),
            (35, "7,5,1"),
            (45, "9,5"),
            (105, "7,5,3"),
            (105, "7,5,3,1"),
            (105, "7,5,3,1,1"),
            (105, "7,5,3,1,1,1"),
            (165, "11,5,3"),
            (165, "11,5,3,1"),
        ];
        for (i, &(val, wit)) in lam0.iter().enumerate() {
            assert_eq!(v0(i as u64 + 1), (val, wit.to_string()), "lambda0({})", i + 1);
        }

        assert_eq!(v2(1), None);
        assert_eq!(v2(3), None);
        let lam2: [(u64, &str); 17] = [
            (2, "2,2"),
            (2, "2,2,1"),
            (4, "4,2"),
            (6, "3,2,2"),
            (6, "3,2,2,1"),
            (12, "4,3,2"),
            (12, "4,3,2,1"),
            (20, "5,4,2"),
            (30, "5,3,2,2"),
            (30, "5,3,2,2,1"),
            (60, "5,4,3,2"),
            (60, "5,4,3,2,1"),
            (84, "7,4,3,2"),
            (84, "7,4,3,2,1"),
            (140, "7,5,4,2"),
            (210, "7,5,3,2,2"),
            (210, "7,5,3,2,2,1"),
        ];
        for (i, &(val, wit)) in lam2.iter().enumerate() {
            let n = i as u64 + 4;
            assert_eq!(v2(n), Some((val, wit.to_string())), "lambda2({n})");
        }
    }

    #[test]
    fn witnesses_are_consistent() {
        use num_integer::Integer;
        for n in 1..=60u64 {
            for lv in [Some(landau(n)), Some(landau0(n)), landau2(n)].into_iter().flatten() {
                assert_eq!(lv.witness.iter().sum::<u64>(), n);
                let lcm = lv
                    .witness
                    .iter()
                    .fold(BigUint::one(), |acc, &p| {
                        let p = BigUint::from(p);
                        &acc / acc.gcd(&p) * p
                    });
                assert_eq!(lcm, lv.value, "lcm of witness for n={n}");
            }
        }
    }

    #[test]
    fn spot_large_values() {
        assert_eq!(to_u64(&landau(140).value), 41_495_273_820);
        assert_eq!(landau2(100).map(|l| to_u64(&l.value)), Some(232_792_560));
    }

    #[test]
    fn parity_variant_inequalities() {
        for n in 4..=140u64 {
            let l = landau(n).value;
            let l0 = landau0(n).value;
            let l2 = landau2(n).unwrap().value;
            assert!(l0 <= l && l2 <= l);
            // max(lambda0, lambda2) >= lambda/2
            let m = l0.max(l2);
            assert!(&m * 2u32 >= l, "n={n}");
        }
        for n in 18..=140u64 {
            let l = landau(n).value;
            let l2 = landau2(n).unwrap().value;
            assert!(l <= &l2 * 2u32, "lambda/lambda2 <= 2 at n={n}");
        }
    }

    #[test]
    fn lambda2_witness_has_four_parts_from_twelve() {
        for n in 12..=140u64 {
            assert!(landau2(n).unwrap().witness.len() >= 4, "n={n}");
        }
    }
}
