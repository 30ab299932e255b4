//! Hypercube constructions: the binary reflected Gray code, orbit
//! representatives of the shift-complement automorphism, representative
//! paths, zigzag Cartesian products, and Hamilton cycles with optimal
//! compression or few tracks.

use crate::auto::{self, Automorphism};
use crate::graphs::ImplicitGraph;
use crate::verify::{self, HamCycle};
use crate::word::{Sym, Word};
use crate::{Error, Result};

/// Binary reflected Gray code listing of {0,1}^n (n >= 0).
pub fn brgc_words(n: usize) -> Vec<Word> {
    (0..(1u64 << n))
        .map(|i| {
            let code = i ^ (i >> 1);
            Word((0..n).map(|b| ((code >> (n - 1 - b)) & 1) as Sym).collect())
        })
        .collect()
}

/// The BRGC as a Hamilton cycle of Q_n, together with the automorphism
/// x_1 x_2 x_3 -> x_2 !x_1 !x_3 that realizes its 4-fold symmetry.
pub fn brgc(n: usize) -> Result<HamCycle> {
    if n < 2 {
        return Err(Error::Param("Q_1 has no Hamilton cycle".into()));
    }
    let mut pi: Vec<usize> = (0..n).collect();
    pi.swap(0, 1);
    let mut z = vec![0u8; n];
    z[1] = 1;
    if n >= 3 {
        z[2] = 1;
    }
    let f = Automorphism::hypercube(pi, z)?;
    Ok(HamCycle::new(
        ImplicitGraph::hypercube(n)?,
        brgc_words(n),
        "brgc",
        Some(f),
        Some(4),
    ))
}

/// The auxiliary automorphism g: cyclic left shift, complementing the bit
/// that wraps around. Its orbits on Q_n all have size 2n when n is a power
/// of two.
pub fn shift_complement(n: usize) -> Automorphism {
    let pi: Vec<usize> = (0..n).map(|i| (i + 1) % n).collect();
    let mut z = vec![0u8; n];
    z[n - 1] = 1;
    Automorphism::hypercube(pi, z).expect("valid by construction")
}

/// Interleaves two equal-length bitstrings: u_1 v_1 u_2 v_2 ... u_n v_n.
pub fn interleave(u: &Word, v: &Word) -> Result<Word> {
    if u.len() != v.len() {
        return Err(Error::Param(format!(
            "interleave needs equal lengths, got {} and {}",
            u.len(),
            v.len()
        )));
    }
    let mut out = Vec::with_capacity(2 * u.len());
    for i in 0..u.len() {
        out.push(u[i]);
        out.push(v[i]);
    }
    Ok(Word(out))
}

fn require_power_of_two(n: usize, min: usize) -> Result<()> {
    if n < min || !n.is_power_of_two() {
        return Err(Error::Param(format!(
            "dimension must be a power of two >= {min}, got {n}"
        )));
    }
    Ok(())
}

/// Orbit representatives R_n of the shift-complement automorphism, for
/// n a power of two >= 2, in the doubling enumeration order
/// (outer: shift count k, middle: u, inner: v).
pub fn representatives(n: usize) -> Result<Vec<Word>> {
    require_power_of_two(n, 2)?;
    let mut reps = vec![Word::zeros(2)];
    let mut half = 2usize;
    while half < n {
        let g = shift_complement(half);
        // All g^k(u) for u in R_half, k < half.
        let mut shifted: Vec<Vec<Word>> = vec![reps.clone()];
        for _ in 1..half {
            let prev = shifted.last().unwrap();
            shifted.push(prev.iter().map(|u| g.apply(u)).collect());
        }
        let mut next = Vec::with_capacity(reps.len() * reps.len() * half);
        for k in 0..half {
            for ui in 0..reps.len() {
                for v in &reps {
                    next.push(interleave(&shifted[k][ui], v)?);
                }
            }
        }
        reps = next;
        half *= 2;
    }
    Ok(reps)
}

/// A path on orbit representatives, its generating automorphism, and the
/// common orbit size.
#[derive(Clone, Debug)]
pub struct RepPath {
    pub path: Vec<Word>,
    pub automorphism: Automorphism,
    pub orbit_size: u64,
}

/// The representative path P_n in Q_n from 0^n to 0^(n-2)10, visiting every
/// element of R_n exactly once. Defined for n a power of two >= 4.
pub fn rep_path(n: usize) -> Result<RepPath> {
    require_power_of_two(n, 4)?;
    let mut path = vec![Word::from_bits("0000").unwrap(), Word::from_bits("0010").unwrap()];
    let mut half = 4usize;
    while half < n {
        let g = shift_complement(half);
        // P'  = P, g^2(P), ..., g^(half-2)(P)
        // P'' = g(P), g^3(P), ..., g^(half-1)(P)
        let mut images: Vec<Vec<Word>> = vec![path.clone()];
        for _ in 1..half {
            let prev = images.last().unwrap();
            images.push(prev.iter().map(|u| g.apply(u)).collect());
        }
        let mut p1 = Vec::new();
        let mut p2 = Vec::new();
        for k in (0..half).step_by(2) {
            p1.extend(images[k].iter().cloned());
            p2.extend(images[k + 1].iter().cloned());
        }
        let rev: Vec<Word> = path.iter().rev().cloned().collect();
        let mut next = Vec::new();
        for (a, b) in zigzag(&p1, &path)? {
            next.push(interleave(&a, &b)?);
        }
        for (a, b) in zigzag(&p2, &rev)? {
            next.push(interleave(&a, &b)?);
        }
        path = next;
        half *= 2;
    }
    Ok(RepPath {
        path,
        automorphism: shift_complement(n),
        orbit_size: 2 * n as u64,
    })
}

/// Zigzag path in a Cartesian product: (P,v_1), (reverse P, v_2), ...
/// Requires |Q| even; starts at (p_1,q_1), ends at (p_1,q_last), and covers
/// P x Q.
pub fn zigzag(p: &[Word], q: &[Word]) -> Result<Vec<(Word, Word)>> {
    if q.len() % 2 != 0 {
        return Err(Error::Param(format!(
            "zigzag needs an even second path, got length {}",
            q.len()
        )));
    }
    let mut out = Vec::with_capacity(p.len() * q.len());
    for (j, v) in q.iter().enumerate() {
        if j % 2 == 0 {
            out.extend(p.iter().map(|u| (u.clone(), v.clone())));
        } else {
            out.extend(p.iter().rev().map(|u| (u.clone(), v.clone())));
        }
    }
    Ok(out)
}

fn hypercube_parts(f: &Automorphism) -> Result<(&[usize], &[u8])> {
    match f {
        Automorphism::Hypercube { pi, z } => Ok((pi, z)),
        _ => Err(Error::Param("expected a hypercube automorphism".into())),
    }
}

/// Product automorphism (g,h) acting on Q_(n+m) coordinates.
fn product_automorphism(n: usize, g: &Automorphism, m: usize, h: &Automorphism) -> Result<Automorphism> {
    let (gp, gz) = hypercube_parts(g)?;
    let (hp, hz) = hypercube_parts(h)?;
    if gp.len() != n || hp.len() != m {
        return Err(Error::Param("automorphism dimensions do not match".into()));
    }
    let mut pi: Vec<usize> = gp.to_vec();
    pi.extend(hp.iter().map(|&p| p + n));
    let mut z = gz.to_vec();
    z.extend_from_slice(hz);
    Automorphism::hypercube(pi, z)
}

/// k-symmetric Hamilton cycle of Q_n x Q_m from a representative path and a
/// Hamilton path: C = (P zigzag Q), f(P zigzag Q), ..., f^(k-1)(...) with
/// f = (g,h). Every precondition is checked and reported by name.
pub fn product_cycle(
    n: usize,
    g: &Automorphism,
    p: &[Word],
    m: usize,
    h: &Automorphism,
    q: &[Word],
) -> Result<HamCycle> {
    let qn = ImplicitGraph::hypercube(n)?;
    let qm = ImplicitGraph::hypercube(m)?;
    let orbs = auto::orbits(g, &qn);
    let k = orbs
        .uniform_size
        .ok_or_else(|| Error::Param("product_cycle: orbits of g are not uniform".into()))?;
    if k < 2 {
        return Err(Error::Param("product_cycle: orbit size must be >= 2".into()));
    }
    if p.len() as u64 != qn.vertex_count() / k {
        return Err(Error::Param(
            "product_cycle: P does not have one vertex per orbit".into(),
        ));
    }
    let mut orbit_seen = vec![false; p.len()];
    let mut orbit_of = vec![0u32; qn.vertex_count() as usize];
    for (oid, orbit) in orbs.orbits.iter().enumerate() {
        for &v in orbit {
            orbit_of[v as usize] = oid as u32;
        }
    }
    for w in p {
        qn.validate_vertex(w)?;
        let oid = orbit_of[qn.encode(w) as usize] as usize;
        if orbit_seen[oid] {
            return Err(Error::Param(
                "product_cycle: P repeats an orbit of g".into(),
            ));
        }
        orbit_seen[oid] = true;
    }
    for win in p.windows(2) {
        if !qn.adjacent(&win[0], &win[1]) {
            return Err(Error::Param("product_cycle: P is not a path".into()));
        }
    }
    let u = &p[0];
    if !qn.adjacent(u, &g.apply(u)) {
        return Err(Error::Param(
            "product_cycle: start of P is not adjacent to g(start)".into(),
        ));
    }
    if qm.vertex_count() % 2 != 0 {
        return Err(Error::Param("product_cycle: |V(H)| must be even".into()));
    }
    if k % h.order() != 0 {
        return Err(Error::Param(
            "product_cycle: ord(h) must divide the orbit size of g".into(),
        ));
    }
    if q.len() as u64 != qm.vertex_count() {
        return Err(Error::Param("product_cycle: Q is not a Hamilton path".into()));
    }
    let mut seen = vec![false; q.len()];
    for w in q {
        qm.validate_vertex(w)?;
        let idx = qm.encode(w) as usize;
        if seen[idx] {
            return Err(Error::Param("product_cycle: Q repeats a vertex".into()));
        }
        seen[idx] = true;
    }
    for win in q.windows(2) {
        if !qm.adjacent(&win[0], &win[1]) {
            return Err(Error::Param("product_cycle: Q is not a path".into()));
        }
    }
    if *q.last().unwrap() != h.apply(&q[0]) {
        return Err(Error::Param(
            "product_cycle: Q must run from v to h(v)".into(),
        ));
    }

    let f = product_automorphism(n, g, m, h)?;
    let block: Vec<Word> = zigzag(p, q)?
        .into_iter()
        .map(|(a, b)| a.concat(&b))
        .collect();
    let mut vertices = Vec::with_capacity(block.len() * k as usize);
    let mut cur = block;
    for _ in 0..k {
        vertices.extend(cur.iter().cloned());
        cur = cur.iter().map(|w| f.apply(w)).collect();
    }
    let cycle = HamCycle::new(
        ImplicitGraph::hypercube(n + m)?,
        vertices,
        "product",
        Some(f.clone()),
        Some(k),
    );
    verify::validate_cycle(&cycle).map_err(Error::Violation)?;
    if !verify::check_symmetric(&cycle, &f, k)? {
        return Err(Error::Search("product cycle fails its symmetry".into()));
    }
    Ok(cycle)
}

/// Hamilton path of Q_m from 0^m to the unit vector e_pos (0-based), built
/// from a BRGC on the remaining coordinates.
fn ham_path_flip_one(m: usize, pos: usize) -> Vec<Word> {
    let gray = brgc_words(m - 1);
    let insert = |w: &Word, bit: Sym| {
        let mut v = w.0.clone();
        v.insert(pos, bit);
        Word(v)
    };
    let mut out: Vec<Word> = gray.iter().map(|w| insert(w, 0)).collect();
    out.extend(gray.iter().rev().map(|w| insert(w, 1)));
    out
}

/// Hamilton cycle of Q_n with the best possible compression: 4 for
/// n in {2,3,4} (the BRGC), otherwise 2^ceil(log2 n) via the product of a
/// representative path in Q_(2^r) with a BRGC path.
pub fn optimal_cube_cycle(n: usize) -> Result<HamCycle> {
    if n < 2 {
        return Err(Error::Param("Q_1 has no Hamilton cycle".into()));
    }
    if n <= 4 {
        let mut c = brgc(n)?;
        c.meta.construction = "optimal".into();
        return Ok(c);
    }
    let r = (usize::BITS - (n - 1).leading_zeros() - 1) as usize; // ceil(log2 n) - 1
    let half = 1usize << r;
    let m = n - half;
    let g = shift_complement(half);
    let p = rep_path(half)?.path;
    // h flips the first bit of Q_m; the BRGC is a Hamilton path from 0^m to
    // 10^(m-1) = h(0^m).
    let mut z = vec![0u8; m];
    z[0] = 1;
    let h = Automorphism::hypercube((0..m).collect(), z)?;
    let q = brgc_words(m);
    let mut c = product_cycle(half, &g, &p, m, &h, &q)?;
    c.meta.construction = "optimal".into();
    Ok(c)
}

/// 2n-symmetric Hamilton cycle of Q_(n + sum ms) with at most 1 + ms.len()
/// tracks. `n` must be a power of two >= 4 and `ms` a non-increasing list
/// of powers of two <= n.
pub fn t_track_cycle(n: usize, ms: &[usize]) -> Result<HamCycle> {
    require_power_of_two(n, 4)?;
    if ms.is_empty() {
        return Err(Error::Param("need at least one extra block".into()));
    }
    for w in ms.windows(2) {
        if w[0] < w[1] {
            return Err(Error::Param("block sizes must be non-increasing".into()));
        }
    }
    for &mi in ms {
        if !mi.is_power_of_two() || mi > n {
            return Err(Error::Param(format!(
                "block sizes must be powers of two <= {n}, got {mi}"
            )));
        }
    }
    let g = shift_complement(n);
    let p = rep_path(n)?.path;
    let m: usize = ms.iter().sum();

    // h complements the first bit, then cyclically left-shifts each block.
    let mut pi = Vec::with_capacity(m);
    let mut base = 0usize;
    for &len in ms {
        for i in 0..len {
            pi.push(base + (i + 1) % len);
        }
        base += len;
    }
    let z: Vec<u8> = pi.iter().map(|&src| u8::from(src == 0)).collect();
    let h = Automorphism::hypercube(pi, z)?;

    let q = if ms.len() == 1 {
        // Reversing every word of the BRGC gives a Hamilton path from 0^m
        // to 0^(m-1)1 = h(0^m).
        brgc_words(m).iter().map(|w| w.reversed()).collect()
    } else {
        ham_path_flip_one(m, ms[0] - 1)
    };
    let mut c = product_cycle(n, &g, &p, m, &h, &q)?;
    c.meta.construction = format!("ttrack[{}]", ms.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(","));
    Ok(c)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn wb(s: &str) -> Word {
        Word::from_bits(s).unwrap()
    }

    #[test]
    fn brgc_small() {
        let c2 = brgc(2).unwrap();
        assert_eq!(c2.vertices, vec![wb("00"), wb("01"), wb("11"), wb("10")]);
        let c3 = brgc(3).unwrap();
        assert_eq!(
            c3.vertices,
            ["000", "001", "011", "010", "110", "111", "101", "100"]
                .iter()
                .map(|s| wb(s))
                .collect::<Vec<_>>()
        );
        assert!(brgc(1).is_err());
    }

    #[test]
    fn brgc_is_four_symmetric() {
        for n in 2..=8 {
            let c = brgc(n).unwrap();
            let f = c.meta.automorphism.clone().unwrap();
            assert!(verify::check_symmetric(&c, &f, 4).unwrap(), "n={n}");
        }
    }

    #[test]
    fn interleave_table_rows() {
        assert_eq!(interleave(&wb("0000"), &wb("0010")).unwrap(), wb("00000100"));
        let g = shift_complement(4);
        assert_eq!(interleave(&g.apply(&wb("0000")), &wb("0000")).unwrap(), wb("00000010"));
        assert_eq!(interleave(&wb("0000"), &wb("0000")).unwrap(), wb("00000000"));
        assert!(interleave(&wb("00"), &wb("000")).is_err());
    }

    #[test]
    fn representatives_golden() {
        assert_eq!(representatives(2).unwrap(), vec![wb("00")]);
        assert_eq!(representatives(4).unwrap(), vec![wb("0000"), wb("0010")]);
        let r8: Vec<Word> = [
            "00000000", "00000100", "00001000", "00001100",
            "00000010", "00000110", "00100010", "00100110",
            "00001010", "00001110", "10001010", "10001110",
            "00101010", "00101110", "00101000", "00101100",
        ]
        .iter()
        .map(|s| wb(s))
        .collect();
        assert_eq!(representatives(8).unwrap(), r8);
        assert!(representatives(6).is_err());
    }

    #[test]
    fn representative_orbit_properties() {
        // No two elements of R_n share an orbit of g, and the orbits of the
        // representatives cover the cube: |R_n| * 2n = 2^n.
        for n in [2usize, 4, 8, 16] {
            let reps = representatives(n).unwrap();
            assert_eq!(reps.len() as u64, (1u64 << n) / (2 * n as u64));
            let g = shift_complement(n);
            let mut covered = vec![false; 1 << n];
            let graph = ImplicitGraph::hypercube(n).unwrap();
            for x in &reps {
                let mut w = x.clone();
                for j in 0..2 * n {
                    let idx = graph.encode(&w) as usize;
                    assert!(
                        !covered[idx],
                        "g^{j}(x) hits a previously covered vertex for n={n}"
                    );
                    covered[idx] = true;
                    w = g.apply(&w);
                }
                assert_eq!(w, *x, "orbit of {x} has size != 2n");
            }
            assert!(covered.iter().all(|&c| c), "orbits do not cover Q_{n}");
        }
    }

    #[test]
    fn rep_path_golden() {
        let p4 = rep_path(4).unwrap();
        assert_eq!(p4.path, vec![wb("0000"), wb("0010")]);
        let p8 = rep_path(8).unwrap();
        let expect: Vec<Word> = [
            "00000000", "00001000", "00001010", "10001010",
            "10001110", "00001110", "00001100", "00000100",
            "00000110", "00100110", "00101110", "00101100",
            "00101000", "00101010", "00100010", "00000010",
        ]
        .iter()
        .map(|s| wb(s))
        .collect();
        assert_eq!(p8.path, expect);
        assert!(rep_path(2).is_err());
    }

    #[test]
    fn rep_path_properties() {
        for n in [4usize, 8, 16] {
            let rp = rep_path(n).unwrap();
            let graph = ImplicitGraph::hypercube(n).unwrap();
            // Path in Q_n from 0^n to 0^(n-2)10 on exactly the set R_n.
            assert_eq!(rp.path[0], Word::zeros(n));
            let mut end = Word::zeros(n);
            end.0[n - 2] = 1;
            assert_eq!(*rp.path.last().unwrap(), end);
            for w in rp.path.windows(2) {
                assert!(graph.adjacent(&w[0], &w[1]));
            }
            let mut sorted = rp.path.clone();
            sorted.sort();
            let mut reps = representatives(n).unwrap();
            reps.sort();
            assert_eq!(sorted, reps);
        }
    }

    #[test]
    fn zigzag_smallest() {
        let p = vec![wb("0"), wb("1")];
        let q = vec![wb("00"), wb("01")];
        let zz = zigzag(&p, &q).unwrap();
        assert_eq!(
            zz,
            vec![
                (wb("0"), wb("00")),
                (wb("1"), wb("00")),
                (wb("1"), wb("01")),
                (wb("0"), wb("01")),
            ]
        );
        assert!(zigzag(&p, &q[..1]).is_err());
    }

    #[test]
    fn interleave_shift_identities() {
        // g^(2i)(u o v) = g^i(u) o g^i(v) and
        // g^(2i+1)(u o v) = g^i(v) o g^(i+1)(u), for all 4-bit u, v.
        let g4 = shift_complement(4);
        let g8 = shift_complement(8);
        let all4: Vec<Word> = (0..16u64)
            .map(|i| ImplicitGraph::hypercube(4).unwrap().decode(i))
            .collect();
        let pow = |g: &Automorphism, w: &Word, e: usize| {
            let mut x = w.clone();
            for _ in 0..e {
                x = g.apply(&x);
            }
            x
        };
        for u in &all4 {
            for v in &all4 {
                let uv = interleave(u, v).unwrap();
                for i in 0..8 {
                    let even = pow(&g8, &uv, 2 * i);
                    assert_eq!(even, interleave(&pow(&g4, u, i), &pow(&g4, v, i)).unwrap());
                    let odd = pow(&g8, &uv, 2 * i + 1);
                    assert_eq!(odd, interleave(&pow(&g4, v, i), &pow(&g4, u, i + 1)).unwrap());
                }
            }
        }
    }

    #[test]
    fn product_cycle_rejects_bad_inputs() {
        let g = shift_complement(4);
        let p = rep_path(4).unwrap().path;
        let mut z = vec![0u8; 2];
        z[0] = 1;
        let h = Automorphism::hypercube(vec![0, 1], z).unwrap();
        let q = brgc_words(2);
        assert!(product_cycle(4, &g, &p, 2, &h, &q).is_ok());
        // Broken Q: end vertex not h(start).
        let mut q_bad = brgc_words(2);
        q_bad.swap(2, 3);
        let err = product_cycle(4, &g, &p, 2, &h, &q_bad).unwrap_err();
        assert!(err.to_string().contains("Q"), "got {err}");
        // Broken P: drop a vertex.
        let err = product_cycle(4, &g, &p[..1], 2, &h, &q).unwrap_err();
        assert!(err.to_string().contains("P"), "got {err}");
    }

    #[test]
    fn optimal_q5_has_compression_8() {
        let c = optimal_cube_cycle(5).unwrap();
        assert_eq!(c.len(), 32);
        assert_eq!(verify::cycle_compression(&c).unwrap(), 8);
    }

    #[test]
    fn flip_one_path_is_hamiltonian() {
        for (m, pos) in [(1usize, 0usize), (3, 1), (4, 3)] {
            let p = ham_path_flip_one(m, pos);
            let g = ImplicitGraph::hypercube(m).unwrap();
            assert_eq!(p.len() as u64, g.vertex_count());
            for w in p.windows(2) {
                assert!(g.adjacent(&w[0], &w[1]));
            }
            assert_eq!(p[0], Word::zeros(m));
            let mut e = Word::zeros(m);
            e.0[pos] = 1;
            assert_eq!(*p.last().unwrap(), e);
        }
    }
}
