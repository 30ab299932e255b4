//! Johnson-graph constructions: necklace-representative paths, the
//! n-symmetric balanced 1-track cycle for coprime (n,k), the q-symmetric
//! cycle for the general case, the q(n,k) parameter, and middle-levels
//! cycles found by quotient-lifted search.

use crate::auto::Automorphism;
use crate::cube::brgc_words;
use crate::graphs::ImplicitGraph;
use crate::verify::{self, HamCycle, LiftOutcome, SearchBudget};
use crate::word::Word;
use crate::{Error, Result};
use num_integer::Integer;
use std::collections::HashMap;

/// Lexicographically smallest rotation, the canonical necklace
/// representative.
pub fn necklace_canonical(w: &Word) -> Word {
    (0..w.len()).map(|r| w.rotated_left(r)).min().unwrap_or_else(|| w.clone())
}

fn weight_word(ones: usize, zeros: usize) -> Word {
    let mut v = vec![1; ones];
    v.extend(std::iter::repeat(0).take(zeros));
    Word(v)
}

const NECKLACE_BUDGET: u64 = 100_000_000;

/// A path in J_{n,k} from 1^k 0^(n-k) to 1^(k-1) 01 0^(n-k-1) visiting each
/// necklace exactly once. The two degenerate shapes (k=1, and k=n-1) are
/// single-vertex paths.
pub fn necklace_path(n: usize, k: usize) -> Result<Vec<Word>> {
    if k == 0 || k >= n {
        return Err(Error::Param(format!(
            "necklace path needs n > k > 0, got ({n},{k})"
        )));
    }
    if k == 1 {
        return Ok(vec![weight_word(1, n - 1)]);
    }
    if k == n - 1 {
        return Ok(vec![weight_word(k, 1)]);
    }

    let g = ImplicitGraph::johnson(n, k)?;
    // Necklace ids keyed by canonical rotation.
    let mut necklace_of: Vec<u32> = vec![u32::MAX; g.vertex_count() as usize];
    let mut count = 0u32;
    let mut canon_ids: HashMap<Word, u32> = HashMap::new();
    for v in g.iter_vertices() {
        let canon = necklace_canonical(&v);
        let id = *canon_ids.entry(canon).or_insert_with(|| {
            count += 1;
            count - 1
        });
        necklace_of[g.encode(&v) as usize] = id;
    }
    let m = count as usize;

    let start = weight_word(k, n - k);
    let mut end = weight_word(k - 1, 0);
    end.0.extend([0, 1]);
    end.0.extend(std::iter::repeat(0).take(n - k - 1));
    let end_class = necklace_of[g.encode(&end) as usize];

    if m == 1 {
        // Start and end share the only necklace; a single-vertex path can
        // not realize both endpoints, which the callers' special cases
        // already avoid.
        return Err(Error::Param(format!("({n},{k}) has a single necklace")));
    }

    // DFS with Warnsdorff ordering over necklace classes; the end necklace
    // is entered last, and only through the exact end vertex.
    let mut visited = vec![false; m];
    visited[necklace_of[g.encode(&start) as usize] as usize] = true;
    let mut path = vec![start.clone()];
    let mut nodes = 0u64;

    let candidates = |cur: &Word, visited: &[bool], depth: usize| -> Vec<Word> {
        let last = depth == m - 1;
        let mut out: Vec<(usize, Word)> = Vec::new();
        for w in g.neighbors(cur).expect("valid vertex") {
            let cls = necklace_of[g.encode(&w) as usize];
            if visited[cls as usize] {
                continue;
            }
            if cls == end_class {
                if last && w == end {
                    out.push((0, w));
                }
                continue;
            }
            if last {
                continue;
            }
            let onward = g
                .neighbors(&w)
                .expect("valid vertex")
                .iter()
                .filter(|u| !visited[necklace_of[g.encode(u) as usize] as usize])
                .count();
            if onward > 0 {
                out.push((onward, w));
            }
        }
        out.sort();
        out.into_iter().map(|(_, w)| w).collect()
    };

    let mut stack = vec![candidates(&start, &visited, 1).into_iter()];
    while let Some(iter) = stack.last_mut() {
        match iter.next() {
            Some(next) => {
                nodes += 1;
                if nodes > NECKLACE_BUDGET {
                    return Err(Error::Search(format!(
                        "necklace path search for ({n},{k}) exceeded {NECKLACE_BUDGET} nodes"
                    )));
                }
                path.push(next.clone());
                if path.len() == m {
                    return Ok(path);
                }
                visited[necklace_of[g.encode(&next) as usize] as usize] = true;
                stack.push(candidates(&next, &visited, path.len()).into_iter());
            }
            None => {
                stack.pop();
                if let Some(v) = path.pop() {
                    visited[necklace_of[g.encode(&v) as usize] as usize] = false;
                }
            }
        }
    }
    Err(Error::Search(format!(
        "no necklace path found for ({n},{k})"
    )))
}

/// n-symmetric balanced 1-track Hamilton cycle of J_{n,k} for coprime n, k:
/// the necklace path followed by its images under the full cyclic shift.
pub fn coprime_cycle(n: usize, k: usize) -> Result<HamCycle> {
    if k == 0 || k >= n {
        return Err(Error::Param(format!("need n > k > 0, got ({n},{k})")));
    }
    if n.gcd(&k) != 1 {
        return Err(Error::Param(format!("({n},{k}) are not coprime")));
    }
    let p = necklace_path(n, k)?;
    let f = Automorphism::shift_all(n);
    let mut vertices = Vec::with_capacity(p.len() * n);
    let mut block = p;
    for _ in 0..n {
        vertices.extend(block.iter().cloned());
        block = block.iter().map(|w| f.apply(w)).collect();
    }
    let cycle = HamCycle::new(
        ImplicitGraph::johnson(n, k)?,
        vertices,
        "coprime",
        Some(f.clone()),
        Some(n as u64),
    );
    verify::validate_cycle(&cycle).map_err(Error::Violation)?;
    if !verify::check_symmetric(&cycle, &f, n as u64)? {
        return Err(Error::Search("coprime cycle fails its symmetry".into()));
    }
    Ok(cycle)
}

/// The largest q <= n with q > max(k, n-k) such that q is coprime to every
/// l in [k-(n-q), k]. Always exists for n > k > 0.
pub fn q_of(n: usize, k: usize) -> usize {
    assert!(n > k && k > 0, "q(n,k) needs n > k > 0");
    'outer: for q in (1..=n).rev() {
        if q <= k.max(n - k) {
            break;
        }
        let lo = k - (n - q);
        for l in lo..=k {
            if q.gcd(&l) != 1 {
                continue 'outer;
            }
        }
        return q;
    }
    unreachable!("q(n,k) exists for all n > k > 0");
}

/// q-symmetric Hamilton cycle of J_{n,k} with at most 1+n-q tracks, where
/// q = q(n,k). Concatenates necklace paths over the first q positions,
/// indexed by a BRGC cycle on the last n-q positions; the final block is
/// reversed and rotated so the cycle closes under the prefix shift.
pub fn general_cycle(n: usize, k: usize) -> Result<HamCycle> {
    if k == 0 || k >= n {
        return Err(Error::Param(format!("need n > k > 0, got ({n},{k})")));
    }
    let q = q_of(n, k);
    if q == n {
        let mut c = coprime_cycle(n, k)?;
        c.meta.construction = "general".into();
        return Ok(c);
    }
    let r = n - q;
    let gray = brgc_words(r);
    let mut paths: HashMap<usize, Vec<Word>> = HashMap::new();
    let mut block_path = |l: usize| -> Result<Vec<Word>> {
        if let Some(p) = paths.get(&l) {
            return Ok(p.clone());
        }
        let p = necklace_path(q, l)?;
        paths.insert(l, p.clone());
        Ok(p)
    };

    let mut path = Vec::new();
    let last = gray.len() - 1;
    for (i, x) in gray.iter().enumerate() {
        let l = k - x.weight();
        let block = block_path(l)?;
        if i < last {
            for w in &block {
                path.push(w.concat(x));
            }
        } else {
            // Reverse every bitstring and rotate left by q-l so the block
            // runs from 1^l 0^(q-l) to 01^(l-1) 0^(q-l-1) 1.
            for w in &block {
                path.push(w.reversed().rotated_left(q - l).concat(x));
            }
        }
    }

    let f = Automorphism::shift_prefix(n, q);
    let mut vertices = Vec::with_capacity(path.len() * q);
    let mut block = path;
    for _ in 0..q {
        vertices.extend(block.iter().cloned());
        block = block.iter().map(|w| f.apply(w)).collect();
    }
    let cycle = HamCycle::new(
        ImplicitGraph::johnson(n, k)?,
        vertices,
        "general",
        Some(f.clone()),
        Some(q as u64),
    );
    verify::validate_cycle(&cycle).map_err(Error::Violation)?;
    if !verify::check_symmetric(&cycle, &f, q as u64)? {
        return Err(Error::Search("general cycle fails its symmetry".into()));
    }
    Ok(cycle)
}

/// n-symmetric Hamilton cycle of the middle-levels graph M_n (odd n),
/// found by the quotient-lifted search under the full cyclic shift.
pub fn middle_levels_cycle(n: usize) -> Result<HamCycle> {
    middle_levels_cycle_with(n, &Automorphism::shift_all(n))
}

/// Lifted-search middle-levels cycle under an arbitrary automorphism with
/// uniform orbits, e.g. the shift-and-complement maps.
pub fn middle_levels_cycle_with(n: usize, f: &Automorphism) -> Result<HamCycle> {
    let g = ImplicitGraph::middle_levels(n)?;
    match verify::lifted_cycle_search(&g, f, &SearchBudget::default())? {
        LiftOutcome::Cycle(c) => Ok(c),
        LiftOutcome::Exhausted => Err(Error::Search(format!(
            "no symmetric Hamilton cycle in M_{n} under the given automorphism"
        ))),
        LiftOutcome::BudgetExceeded => Err(Error::Search(format!(
            "middle-levels search for M_{n} exceeded its budget"
        ))),
    }
}

/// The automorphism of M_7 that fixes the first two bits, left-shifts the
/// remaining five, and complements everything. Its order is 10.
pub fn m7_shift_complement() -> Automorphism {
    // Output position i takes input position pi[i] (0-based), complemented:
    // (x1 x2 x4 x5 x6 x7 x3) complemented.
    Automorphism::johnson(vec![0, 1, 3, 4, 5, 6, 2], true).expect("valid permutation")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::verify::{balance_stats, cycle_compression, track_count, BalanceStats};

    fn wb(s: &str) -> Word {
        Word::from_bits(s).unwrap()
    }

    #[test]
    fn necklace_path_tiny() {
        // (5,2): two necklaces; brute force shows the only 2-vertex path
        // from 11000 with the required endpoint is (11000, 10100).
        assert_eq!(necklace_path(5, 2).unwrap(), vec![wb("11000"), wb("10100")]);
        assert_eq!(necklace_path(7, 1).unwrap(), vec![wb("1000000")]);
        assert_eq!(necklace_path(4, 3).unwrap(), vec![wb("1110")]);
        assert!(necklace_path(4, 0).is_err());
    }

    #[test]
    fn necklace_path_properties() {
        for (n, k) in [(7usize, 2usize), (7, 3), (8, 3), (9, 4), (11, 3)] {
            let p = necklace_path(n, k).unwrap();
            let g = ImplicitGraph::johnson(n, k).unwrap();
            // Exactly one vertex per necklace.
            let mut canons: Vec<Word> = p.iter().map(necklace_canonical).collect();
            canons.sort();
            canons.dedup();
            assert_eq!(canons.len(), p.len(), "({n},{k}) repeats a necklace");
            let mut all: Vec<Word> = g.iter_vertices().map(|v| necklace_canonical(&v)).collect();
            all.sort();
            all.dedup();
            assert_eq!(p.len(), all.len(), "({n},{k}) misses necklaces");
            for w in p.windows(2) {
                assert!(g.adjacent(&w[0], &w[1]));
            }
            assert_eq!(p[0], weight_word(k, n - k));
            let mut end = vec![1; k - 1];
            end.extend([0, 1]);
            end.extend(std::iter::repeat(0).take(n - k - 1));
            assert_eq!(*p.last().unwrap(), Word(end), "({n},{k}) end vertex");
        }
    }

    #[test]
    fn coprime_j72() {
        let c = coprime_cycle(7, 2).unwrap();
        assert_eq!(c.len(), 21);
        assert_eq!(cycle_compression(&c).unwrap(), 7);
        assert_eq!(track_count(&c).unwrap().tracks, 1);
        match balance_stats(&c).unwrap() {
            BalanceStats::BitChanges(v) => assert!(v.iter().all(|&x| x == 6)),
            _ => panic!("wrong stats"),
        }
        assert!(coprime_cycle(6, 3).is_err());
    }

    #[test]
    fn coprime_complete_graph_cases() {
        let c = coprime_cycle(5, 1).unwrap();
        assert_eq!(c.len(), 5);
        assert_eq!(cycle_compression(&c).unwrap(), 5);
        let c = coprime_cycle(5, 4).unwrap();
        assert_eq!(cycle_compression(&c).unwrap(), 5);
    }

    #[test]
    fn q_of_values() {
        assert_eq!(q_of(10, 4), 7);
        assert_eq!(q_of(9, 3), 7);
        assert_eq!(q_of(6, 3), 5);
        assert_eq!(q_of(7, 2), 7);
        assert_eq!(q_of(12, 4), 11);
    }

    #[test]
    fn q_of_matches_brute_force() {
        // Independent check of the defining conditions, scanning all q.
        for n in 2..=30usize {
            for k in 1..n {
                let q = q_of(n, k);
                let ok = |q: usize| {
                    q > k.max(n - k)
                        && (k - (n - q)..=k).all(|l| q.gcd(&l) == 1)
                };
                assert!(ok(q), "q({n},{k})={q} fails the conditions");
                for better in q + 1..=n {
                    assert!(!ok(better), "q({n},{k})={q} is not maximal");
                }
            }
        }
    }

    #[test]
    fn general_j63() {
        let c = general_cycle(6, 3).unwrap();
        assert_eq!(c.len(), 20);
        assert!(cycle_compression(&c).unwrap() >= 5);
        assert!(track_count(&c).unwrap().tracks <= 2);
    }

    #[test]
    fn general_delegates_to_coprime() {
        let a = general_cycle(7, 2).unwrap();
        let b = coprime_cycle(7, 2).unwrap();
        assert_eq!(a.vertices, b.vertices);
    }

    #[test]
    fn middle_levels_m5() {
        let c = middle_levels_cycle(5).unwrap();
        assert_eq!(c.len(), 20);
        assert_eq!(c.meta.claimed_k, Some(5));
        assert!(cycle_compression(&c).unwrap() >= 5);
    }
}
