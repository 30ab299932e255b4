//! Permutahedron constructions: the Steinhaus-Johnson-Trotter cycle,
//! Hamilton-laceable paths, multiset-permutation Hamilton paths and cycles,
//! the block-rotation automorphism f_a with its orbit-representative path,
//! symmetric cycles of order lcm(a), the best-achievable compression via
//! the Landau variants, and the balanced 1-track cycle in the cyclic
//! permutahedron.

use crate::auto::Automorphism;
use crate::graphs::ImplicitGraph;
use crate::landau;
use crate::search;
use crate::verify::{self, HamCycle};
use crate::word::{Sym, Word};
use crate::{Error, Result};
use num_integer::Integer;
use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

// ---------------------------------------------------------------------
// Permutation spaces over an arbitrary ordered ground set.

fn perm_count(m: usize) -> u64 {
    (1..=m as u64).product()
}

/// Lehmer rank of `w` as a permutation of the sorted ground set `values`.
fn perm_rank(values: &[Sym], w: &Word) -> u64 {
    let m = values.len();
    let mut rank = 0u64;
    for i in 0..m {
        let smaller = w.0[i + 1..].iter().filter(|&&x| x < w[i]).count() as u64;
        rank += smaller * perm_count(m - 1 - i);
    }
    rank
}

fn adjacent_swaps(w: &Word) -> Vec<Word> {
    let mut out = Vec::with_capacity(w.len().saturating_sub(1));
    for i in 0..w.len().saturating_sub(1) {
        let mut v = w.clone();
        v.0.swap(i, i + 1);
        out.push(v);
    }
    out.sort();
    out
}

/// Parity of a sequence of distinct values: inversion count mod 2.
pub fn parity(w: &Word) -> bool {
    let mut inv = 0usize;
    for i in 0..w.len() {
        for j in i + 1..w.len() {
            if w[i] > w[j] {
                inv += 1;
            }
        }
    }
    inv % 2 == 1
}

fn differ_by_adjacent_swap(x: &Word, y: &Word) -> bool {
    let diffs: Vec<usize> = (0..x.len()).filter(|&i| x[i] != y[i]).collect();
    matches!(diffs.as_slice(), [a, b] if *b == a + 1 && x[*a] == y[*b] && x[*b] == y[*a])
}

const LACE_BUDGET: u64 = 100_000_000;

fn lace_memo() -> &'static Mutex<HashMap<(usize, Vec<u8>), Vec<Vec<u8>>>> {
    static MEMO: OnceLock<Mutex<HashMap<(usize, Vec<u8>), Vec<Vec<u8>>>>> = OnceLock::new();
    MEMO.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Hamilton path in the permutahedron over the ground set of `x` from `x`
/// to `y`. Requires opposite parity (|X| >= 4 or |X| = 2), or endpoints
/// differing by an adjacent transposition when |X| = 3. Subproblems are
/// memoized up to value relabeling.
pub fn lace_path(x: &Word, y: &Word) -> Result<Vec<Word>> {
    let mut values = x.0.clone();
    values.sort_unstable();
    let mut ys = y.0.clone();
    ys.sort_unstable();
    if values != ys || x.len() != y.len() {
        return Err(Error::Param(format!("{x} and {y} are not over one ground set")));
    }
    let m = values.len();
    match m {
        0 => return Err(Error::Param("empty ground set".into())),
        1 => return Ok(vec![x.clone()]),
        2 => {
            return if x == y {
                Err(Error::Param("no Hamilton path between equal endpoints".into()))
            } else {
                Ok(vec![x.clone(), y.clone()])
            }
        }
        3 => {
            if !differ_by_adjacent_swap(x, y) {
                return Err(Error::Param(format!(
                    "3-element laceability needs endpoints one swap apart, got {x} -> {y}"
                )));
            }
        }
        _ => {
            if parity(x) == parity(y) {
                return Err(Error::Param(format!(
                    "no Hamilton path between same-parity endpoints {x} and {y}"
                )));
            }
        }
    }

    // Relabel to ranks, normalize the start to the identity by composing
    // with the value permutation that sorts x.
    let rank_of = |v: Sym| values.binary_search(&v).unwrap() as u8;
    let xr: Vec<u8> = x.0.iter().map(|&v| rank_of(v)).collect();
    let yr: Vec<u8> = y.0.iter().map(|&v| rank_of(v)).collect();
    let mut sigma = vec![0u8; m];
    for (i, &r) in xr.iter().enumerate() {
        sigma[r as usize] = i as u8;
    }
    let key_y: Vec<u8> = yr.iter().map(|&r| sigma[r as usize]).collect();
    let key = (m, key_y.clone());

    if let Some(cached) = lace_memo().lock().unwrap().get(&key) {
        return Ok(restore(cached, &sigma, &values));
    }

    let start = Word(( 0..m as Sym).collect());
    let end = Word(key_y.iter().map(|&r| r as Sym).collect());
    let canonical = search::ham_path(
        perm_count(m) as usize,
        |w| perm_rank(&(0..m as Sym).collect::<Vec<_>>(), w),
        adjacent_swaps,
        &start,
        &end,
        LACE_BUDGET,
    )
    .ok_or_else(|| Error::Search(format!("lace path search failed for {x} -> {y}")))?;
    let stored: Vec<Vec<u8>> = canonical
        .iter()
        .map(|w| w.0.iter().map(|&s| s as u8).collect())
        .collect();
    let out = restore(&stored, &sigma, &values);
    lace_memo().lock().unwrap().insert(key, stored);
    Ok(out)
}

fn restore(stored: &[Vec<u8>], sigma: &[u8], values: &[Sym]) -> Vec<Word> {
    // Invert sigma, then map ranks back to ground-set values.
    let mut inv = vec![0u8; sigma.len()];
    for (r, &i) in sigma.iter().enumerate() {
        inv[i as usize] = r as u8;
    }
    stored
        .iter()
        .map(|w| Word(w.iter().map(|&c| values[inv[c as usize] as usize]).collect()))
        .collect()
}

// ---------------------------------------------------------------------
// Compositions and multiset permutations.

/// A composition a_1, ..., a_m of n, with associated blocks
/// A_i = {b_i+1, ..., b_i+a_i} partitioning [n] in order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Composition {
    pub parts: Vec<usize>,
}

impl Composition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.is_empty() || parts.iter().any(|&a| a == 0) {
            return Err(Error::Param("composition parts must be positive".into()));
        }
        Ok(Composition { parts })
    }

    pub fn n(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn m(&self) -> usize {
        self.parts.len()
    }

    /// Start offset of block i (0-based): values are offset+1 ..= offset+a_i.
    pub fn block_start(&self, i: usize) -> usize {
        self.parts[..i].iter().sum()
    }

    pub fn block_values(&self, i: usize) -> Vec<Sym> {
        let b = self.block_start(i);
        (b + 1..=b + self.parts[i]).map(|v| v as Sym).collect()
    }

    /// The identity a-permutation 1^a_1 2^a_2 ... m^a_m.
    pub fn ide(&self) -> Word {
        let mut v = Vec::with_capacity(self.n());
        for (i, &a) in self.parts.iter().enumerate() {
            v.extend(std::iter::repeat(i as Sym + 1).take(a));
        }
        Word(v)
    }

    pub fn lcm(&self) -> u64 {
        self.parts.iter().fold(1u64, |acc, &a| acc.lcm(&(a as u64)))
    }

    fn frequencies_match(&self, u: &Word) -> bool {
        if u.len() != self.n() {
            return false;
        }
        let mut freq = vec![0usize; self.m()];
        for &s in &u.0 {
            if s < 1 || s as usize > self.m() {
                return false;
            }
            freq[s as usize - 1] += 1;
        }
        freq.iter().zip(&self.parts).all(|(f, a)| f == a)
    }
}

/// Replaces the j-th occurrence of value i in `u` by the j-th entry of
/// xs[i-1]; each xs[i-1] must be a permutation of block A_i.
pub fn mix(comp: &Composition, u: &Word, xs: &[Word]) -> Result<Word> {
    if !comp.frequencies_match(u) {
        return Err(Error::Param(format!("{u} does not have frequencies {:?}", comp.parts)));
    }
    if xs.len() != comp.m() {
        return Err(Error::Param("one block permutation per part is required".into()));
    }
    for (i, x) in xs.iter().enumerate() {
        let mut sorted = x.0.clone();
        sorted.sort_unstable();
        if sorted != comp.block_values(i) {
            return Err(Error::Param(format!(
                "{x} is not a permutation of block {}",
                i + 1
            )));
        }
    }
    Ok(mix_unchecked(comp, u, xs))
}

fn mix_unchecked(comp: &Composition, u: &Word, xs: &[Word]) -> Word {
    let mut counters = vec![0usize; comp.m()];
    let mut out = Vec::with_capacity(u.len());
    for &s in &u.0 {
        let i = s as usize - 1;
        out.push(xs[i][counters[i]]);
        counters[i] += 1;
    }
    Word(out)
}

/// All a-permutations in lexicographic order.
fn multiset_perms(comp: &Composition) -> Vec<Word> {
    let mut out = Vec::new();
    let mut freq: Vec<usize> = comp.parts.clone();
    let mut cur: Vec<Sym> = Vec::with_capacity(comp.n());
    fn rec(freq: &mut [usize], cur: &mut Vec<Sym>, n: usize, out: &mut Vec<Word>) {
        if cur.len() == n {
            out.push(Word(cur.clone()));
            return;
        }
        for i in 0..freq.len() {
            if freq[i] > 0 {
                freq[i] -= 1;
                cur.push(i as Sym + 1);
                rec(freq, cur, n, out);
                cur.pop();
                freq[i] += 1;
            }
        }
    }
    rec(&mut freq, &mut cur, comp.n(), &mut out);
    out
}

fn ga_neighbors(w: &Word) -> Vec<Word> {
    let mut out = Vec::new();
    for i in 0..w.len() - 1 {
        if w[i] != w[i + 1] {
            let mut v = w.clone();
            v.0.swap(i, i + 1);
            out.push(v);
        }
    }
    out.sort();
    out
}

pub enum GaHam {
    Path(Vec<Word>),
    Cycle(Vec<Word>),
}

/// Hamilton path or cycle in the multiset-permutation graph G(a): a path
/// from 1^a_1 2^a_2 to 2^a_2 1^a_1 when m = 2 with both parts odd, a cycle
/// when m >= 3 with at least two odd parts (except the known exceptional
/// shape {n-2,1,1} with n even).
pub fn ga_ham(comp: &Composition) -> Result<GaHam> {
    let n = comp.n();
    let m = comp.m();
    let odd = comp.parts.iter().filter(|&&a| a % 2 == 1).count();
    let all = multiset_perms(comp);
    let index: HashMap<Word, u64> = all.iter().cloned().zip(0u64..).collect();
    let lookup = |w: &Word| index[w];

    if m == 2 && comp.parts[0] % 2 == 1 && comp.parts[1] % 2 == 1 {
        let start = comp.ide();
        let mut end = vec![2 as Sym; comp.parts[1]];
        end.extend(std::iter::repeat(1).take(comp.parts[0]));
        let end = Word(end);
        let p = search::ham_path(all.len(), lookup, ga_neighbors, &start, &end, LACE_BUDGET)
            .ok_or_else(|| Error::Search(format!("no Hamilton path in G({:?})", comp.parts)))?;
        return Ok(GaHam::Path(p));
    }
    if m >= 3 && odd >= 2 {
        let mut sorted = comp.parts.clone();
        sorted.sort_unstable();
        if m == 3 && n % 2 == 0 && sorted[0] == 1 && sorted[1] == 1 && sorted[2] == n - 2 {
            return Err(Error::Param(format!(
                "G({:?}) has no Hamilton cycle: exceptional shape (n-2,1,1) with even n",
                comp.parts
            )));
        }
        let start = comp.ide();
        let c = search::ham_cycle(all.len(), lookup, ga_neighbors, &start, LACE_BUDGET)
            .ok_or_else(|| Error::Search(format!("no Hamilton cycle found in G({:?})", comp.parts)))?;
        return Ok(GaHam::Cycle(c));
    }
    Err(Error::Param(format!(
        "G({:?}) is outside the Hamilton path/cycle shapes (m=2 both odd, or m>=3 with two odd parts)",
        comp.parts
    )))
}

// ---------------------------------------------------------------------
// The automorphism f_a and its orbit-representative path.

/// The automorphism (ide, f_1 f_2 ... f_m) of the permutahedron: each f_i
/// cycles the values of block A_i. Its order is lcm(a).
pub fn fa_automorphism(comp: &Composition) -> Automorphism {
    let n = comp.n();
    let mut pi = vec![0 as Sym; n];
    for i in 0..comp.m() {
        let vals = comp.block_values(i);
        for (j, &v) in vals.iter().enumerate() {
            pi[v as usize - 1] = vals[(j + 1) % vals.len()];
        }
    }
    Automorphism::perm(false, pi).expect("valid value permutation")
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum PinShape {
    /// Pairwise coprime odd parts, the first at least 3.
    OddCoprime,
    /// 2, then a power of two, then parts pairwise coprime to it.
    TwoPowTwo,
}

fn pin_shape(comp: &Composition) -> Result<PinShape> {
    let parts = &comp.parts;
    let pairwise_coprime = |xs: &[usize]| -> bool {
        for i in 0..xs.len() {
            for j in i + 1..xs.len() {
                if xs[i].gcd(&xs[j]) != 1 {
                    return false;
                }
            }
        }
        true
    };
    if parts.iter().all(|&a| a % 2 == 1) && parts[0] >= 3 && pairwise_coprime(parts) {
        return Ok(PinShape::OddCoprime);
    }
    if parts.len() >= 2
        && parts[0] == 2
        && parts[1].is_power_of_two()
        && parts[1] >= 2
        && pairwise_coprime(&parts[1..])
    {
        return Ok(PinShape::TwoPowTwo);
    }
    Err(Error::Param(format!(
        "composition {:?} fits neither symmetric-cycle shape \
         (odd pairwise-coprime with a_1 >= 3, or 2, 2^c, pairwise-coprime rest)",
        parts
    )))
}

/// Path in the permutahedron starting at the identity, ending at a neighbor
/// of f_a(identity), visiting exactly one vertex of every f_a-orbit whose
/// multiset pattern is the identity a-permutation.
pub fn id_mix_path(comp: &Composition) -> Result<Vec<Word>> {
    let shape = pin_shape(comp)?;
    let q = id_mix_rec(&comp.parts, shape)?;
    // The construction promises these endpoints; fail loudly otherwise.
    let n = comp.n();
    debug_assert_eq!(q[0], Word::identity_perm(n));
    let f = fa_automorphism(comp);
    let g = ImplicitGraph::permutahedron(n)?;
    if !g.adjacent(q.last().unwrap(), &f.apply(&Word::identity_perm(n))) {
        return Err(Error::Search(
            "representative path does not end next to f_a(identity)".into(),
        ));
    }
    Ok(q)
}

fn id_mix_rec(parts: &[usize], shape: PinShape) -> Result<Vec<Word>> {
    let m = parts.len();
    let n: usize = parts.iter().sum();
    let asc = |lo: usize, hi: usize| -> Word { Word((lo as Sym..=hi as Sym).collect()) };

    if shape == PinShape::OddCoprime && m == 1 {
        // Representatives fix the value n at the last position; the path is
        // a lace path in the permutahedron on 1..n-1 with n appended.
        let x = asc(1, n - 1);
        let y = x.rotated_left(1);
        let p = lace_path(&x, &y)?;
        return Ok(p.into_iter().map(|w| append(&w, n as Sym)).collect());
    }
    if shape == PinShape::TwoPowTwo && m == 2 {
        if n == 4 {
            return Ok(vec![
                Word::new(vec![1, 2, 3, 4]),
                Word::new(vec![2, 1, 3, 4]),
            ]);
        }
        let x = asc(3, n - 1);
        let mut y = x.clone();
        y.0.swap(0, 1);
        let p = lace_path(&x, &y)?;
        let xp = x.rotated_left(1);
        let p2 = lace_path(&y, &xp)?;
        let mut out = Vec::with_capacity(p.len() + p2.len());
        for w in &p {
            out.push(Word([vec![1, 2], w.0.clone(), vec![n as Sym]].concat()));
        }
        for w in &p2 {
            out.push(Word([vec![2, 1], w.0.clone(), vec![n as Sym]].concat()));
        }
        return Ok(out);
    }

    // Induction step: strip the last part.
    let a_m = parts[m - 1];
    let np = n - a_m;
    let q = id_mix_rec(&parts[..m - 1], shape)?;
    if a_m == 1 {
        return Ok(q.into_iter().map(|w| append(&w, n as Sym)).collect());
    }
    // a_m >= 3, odd. Two representative systems for the block cycles:
    // value n fixed last, and value n'+2 fixed first.
    let x = asc(np + 1, n - 1);
    let mut y = x.clone();
    y.0.swap(0, 1);
    let p = lace_path(&x, &y)?;
    let x2 = {
        let mut v = vec![(np + 1) as Sym];
        v.extend(((np + 3) as Sym)..=(n as Sym));
        Word(v)
    };
    let y2 = x2.rotated_left(1);
    let p2 = lace_path(&x2, &y2)?;

    let l = q.len();
    if l % 2 != 0 {
        return Err(Error::Search(
            "representative path has odd length; splice impossible".into(),
        ));
    }
    let mut out = Vec::new();
    for (i, z) in q.iter().enumerate() {
        if i < l - 1 {
            if i % 2 == 0 {
                for w in &p {
                    out.push(Word([z.0.clone(), w.0.clone(), vec![n as Sym]].concat()));
                }
            } else {
                for w in p.iter().rev() {
                    out.push(Word([z.0.clone(), w.0.clone(), vec![n as Sym]].concat()));
                }
            }
        } else {
            for w in &p2 {
                out.push(Word([z.0.clone(), vec![(np + 2) as Sym], w.0.clone()].concat()));
            }
        }
    }
    Ok(out)
}

fn append(w: &Word, s: Sym) -> Word {
    let mut v = w.0.clone();
    v.push(s);
    Word(v)
}

// ---------------------------------------------------------------------
// Symmetric Hamilton cycles of the permutahedron.

/// Splits a block-structured permutation into its per-block permutations.
fn block_tuple(comp: &Composition, w: &Word) -> Result<Vec<Word>> {
    let mut out = Vec::with_capacity(comp.m());
    for i in 0..comp.m() {
        let b = comp.block_start(i);
        let chunk = Word(w.0[b..b + comp.parts[i]].to_vec());
        let mut sorted = chunk.0.clone();
        sorted.sort_unstable();
        if sorted != comp.block_values(i) {
            return Err(Error::Search(format!(
                "representative {w} is not block-structured"
            )));
        }
        out.push(chunk);
    }
    Ok(out)
}

/// lcm(a)-symmetric Hamilton cycle of the permutahedron under f_a, for
/// compositions of either admissible shape.
pub fn pin_cycle(comp: &Composition) -> Result<HamCycle> {
    let shape = pin_shape(comp)?;
    let n = comp.n();
    if n < 3 {
        return Err(Error::Param("need n >= 3".into()));
    }
    let k = comp.lcm();
    let f = fa_automorphism(comp);
    let q = id_mix_path(comp)?;
    let tuples: Vec<Vec<Word>> = q
        .iter()
        .map(|w| block_tuple(comp, w))
        .collect::<Result<_>>()?;

    let path: Vec<Word> = if comp.m() == 1 {
        q
    } else if shape == PinShape::OddCoprime && comp.m() == 2 {
        let r = match ga_ham(comp)? {
            GaHam::Path(p) => p,
            GaHam::Cycle(_) => unreachable!("two odd parts give a path"),
        };
        let rrev: Vec<Word> = r.iter().rev().cloned().collect();
        if tuples.len() % 2 != 0 {
            return Err(Error::Search("odd orbit path length".into()));
        }
        let mut out = Vec::with_capacity(r.len() * tuples.len());
        for (i, y) in tuples.iter().enumerate() {
            let block = if i % 2 == 0 { &r } else { &rrev };
            for u in block {
                out.push(mix_unchecked(comp, u, y));
            }
        }
        out
    } else {
        // Hamilton cycle in G(a) through the base pattern; the two paths
        // obtained by deleting one of its edges at the base pattern give
        // the per-step choice.
        let base = if shape == PinShape::TwoPowTwo && comp.parts[1] == 2 {
            // Shifted base word 1^2 3^a_3 ... m^a_m 2^2.
            let mut v = vec![1 as Sym, 1];
            for i in 2..comp.m() {
                v.extend(std::iter::repeat(i as Sym + 1).take(comp.parts[i]));
            }
            v.extend([2, 2]);
            Word(v)
        } else {
            comp.ide()
        };
        let cyc = match ga_ham(comp)? {
            GaHam::Cycle(c) => c,
            GaHam::Path(_) => unreachable!("m >= 3 gives a cycle"),
        };
        let pos = cyc
            .iter()
            .position(|w| *w == base)
            .ok_or_else(|| Error::Search("base pattern missing from G(a) cycle".into()))?;
        let mut rot = cyc;
        rot.rotate_left(pos);
        // r ends at the successor of base, r2 at its predecessor.
        let mut r = vec![rot[0].clone()];
        r.extend(rot[1..].iter().rev().cloned());
        let r2 = rot;
        if tuples.len() % 2 != 0 {
            return Err(Error::Search("odd orbit path length".into()));
        }
        let perm_graph = ImplicitGraph::permutahedron(n)?;
        let mut out = Vec::with_capacity(r.len() * tuples.len());
        for i in (0..tuples.len()).step_by(2) {
            let (y0, y1) = (&tuples[i], &tuples[i + 1]);
            let pick = [&r, &r2]
                .into_iter()
                .find(|cand| {
                    let e = cand.last().unwrap();
                    perm_graph.adjacent(
                        &mix_unchecked(comp, e, y0),
                        &mix_unchecked(comp, e, y1),
                    )
                })
                .ok_or_else(|| {
                    Error::Search("neither deleted-edge path matches the step".into())
                })?;
            for u in pick {
                out.push(mix_unchecked(comp, u, y0));
            }
            for u in pick.iter().rev() {
                out.push(mix_unchecked(comp, u, y1));
            }
        }
        out
    };

    let mut vertices = Vec::with_capacity(path.len() * k as usize);
    let mut block = path;
    for _ in 0..k {
        vertices.extend(block.iter().cloned());
        block = block.iter().map(|w| f.apply(w)).collect();
    }
    let cycle = HamCycle::new(
        ImplicitGraph::permutahedron(n)?,
        vertices,
        &format!("pin{:?}", comp.parts),
        Some(f.clone()),
        Some(k),
    );
    verify::validate_cycle(&cycle).map_err(Error::Violation)?;
    if !verify::check_symmetric(&cycle, &f, k)? {
        return Err(Error::Search("pin cycle fails its symmetry".into()));
    }
    Ok(cycle)
}

/// Hamilton cycle of the permutahedron with compression
/// max(lambda0(n), lambda2(n)), choosing whichever witness composition is
/// larger (and constructible).
pub fn best_perm_cycle(n: usize) -> Result<HamCycle> {
    if n < 3 {
        return Err(Error::Param("need n >= 3".into()));
    }
    let l0 = landau::landau0(n as u64);
    let l2 = landau::landau2(n as u64);

    let comp0 = Composition::new(l0.witness.iter().map(|&p| p as usize).collect())?;
    let comp2 = l2.as_ref().and_then(|l| lambda2_composition(&l.witness));
    let use2 = match (&l2, &comp2) {
        (Some(l), Some(_)) => l.value > l0.value,
        _ => false,
    };
    if use2 {
        pin_cycle(&comp2.unwrap())
    } else {
        pin_cycle(&comp0)
    }
}

/// Reorders a lambda2 witness (odd prime powers, 2^c, 2, 1s) into the
/// composition shape (2, 2^c, rest); None when it has fewer than 4 parts.
fn lambda2_composition(witness: &[u64]) -> Option<Composition> {
    if witness.len() < 4 {
        return None;
    }
    let mut evens: Vec<u64> = witness.iter().copied().filter(|a| a % 2 == 0).collect();
    let odds: Vec<u64> = witness.iter().copied().filter(|a| a % 2 == 1).collect();
    evens.sort_unstable();
    if evens.len() != 2 || evens[0] != 2 || !evens[1].is_power_of_two() {
        return None;
    }
    let mut parts = vec![2usize, evens[1] as usize];
    parts.extend(odds.iter().map(|&a| a as usize));
    Composition::new(parts).ok()
}

// ---------------------------------------------------------------------
// The Steinhaus-Johnson-Trotter cycle.

/// SJT listing of all permutations of 1..n: each permutation of the
/// previous order is expanded by sweeping the new largest value across all
/// positions, alternating direction.
pub fn sjt_words(n: usize) -> Vec<Word> {
    let mut cur: Vec<Vec<Sym>> = vec![vec![1]];
    for v in 2..=n as Sym {
        let mut next = Vec::with_capacity(cur.len() * v as usize);
        for (idx, p) in cur.iter().enumerate() {
            if idx % 2 == 0 {
                for pos in (0..=p.len()).rev() {
                    let mut q = p.clone();
                    q.insert(pos, v);
                    next.push(q);
                }
            } else {
                for pos in 0..=p.len() {
                    let mut q = p.clone();
                    q.insert(pos, v);
                    next.push(q);
                }
            }
        }
        cur = next;
    }
    cur.into_iter().map(Word).collect()
}

/// The SJT cycle in the permutahedron, with the automorphism that realizes
/// its known compression (6 for n = 3, 4 and 3 for n >= 5).
pub fn sjt(n: usize) -> Result<HamCycle> {
    if n < 3 {
        return Err(Error::Param("the SJT cycle needs n >= 3".into()));
    }
    let (f, k) = if n == 3 {
        (Automorphism::perm(true, vec![2, 3, 1])?, 6)
    } else if n == 4 {
        (Automorphism::perm(true, vec![2, 3, 1, 4])?, 6)
    } else {
        let mut pi: Vec<Sym> = vec![3, 1, 2];
        pi.extend(4..=n as Sym);
        (Automorphism::perm(false, pi)?, 3)
    };
    Ok(HamCycle::new(
        ImplicitGraph::permutahedron(n)?,
        sjt_words(n),
        "sjt",
        Some(f),
        Some(k),
    ))
}

// ---------------------------------------------------------------------
// The cyclic permutahedron.

/// n-symmetric balanced 1-track Hamilton cycle of the cyclic permutahedron
/// (adjacent transpositions plus the first/last swap), for odd n >= 3.
/// Representatives fix the value n at the last position.
pub fn plus_one_track(n: usize) -> Result<HamCycle> {
    if n < 3 || n % 2 == 0 {
        return Err(Error::Param(format!(
            "the 1-track construction needs odd n >= 3, got {n}"
        )));
    }
    let x = Word((1..n as Sym).collect());
    let y = x.rotated_left(1);
    let p = lace_path(&x, &y)?;
    let block: Vec<Word> = p.iter().map(|w| append(w, n as Sym)).collect();
    let f = Automorphism::shift_all(n);
    let mut vertices = Vec::with_capacity(block.len() * n);
    let mut cur = block;
    for _ in 0..n {
        vertices.extend(cur.iter().cloned());
        cur = cur.iter().map(|w| f.apply(w)).collect();
    }
    let cycle = HamCycle::new(
        ImplicitGraph::permutahedron_plus(n)?,
        vertices,
        "plus-one-track",
        Some(f.clone()),
        Some(n as u64),
    );
    verify::validate_cycle(&cycle).map_err(Error::Violation)?;
    if !verify::check_symmetric(&cycle, &f, n as u64)? {
        return Err(Error::Search("1-track cycle fails its symmetry".into()));
    }
    Ok(cycle)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::verify::{balance_stats, cycle_compression, track_count, BalanceStats};

    #[test]
    fn sjt_small() {
        let w3: Vec<Vec<Sym>> = sjt_words(3).into_iter().map(|w| w.0).collect();
        assert_eq!(
            w3,
            vec![
                vec![1, 2, 3],
                vec![1, 3, 2],
                vec![3, 1, 2],
                vec![3, 2, 1],
                vec![2, 3, 1],
                vec![2, 1, 3],
            ]
        );
        assert!(sjt(2).is_err());
    }

    #[test]
    fn sjt_symmetry_matches_claim() {
        for n in 3..=6 {
            let c = sjt(n).unwrap();
            assert!(verify::validate_cycle(&c).is_ok());
            let f = c.meta.automorphism.clone().unwrap();
            let k = c.meta.claimed_k.unwrap();
            assert!(verify::check_symmetric(&c, &f, k).unwrap(), "n={n}");
        }
    }

    #[test]
    fn mix_example() {
        let comp = Composition::new(vec![3, 2]).unwrap();
        let u = Word::new(vec![1, 2, 2, 1, 1]);
        let xs = vec![Word::new(vec![2, 1, 3]), Word::new(vec![5, 4])];
        assert_eq!(mix(&comp, &u, &xs).unwrap(), Word::new(vec![2, 5, 4, 1, 3]));
        let idxs = vec![Word::new(vec![1, 2, 3]), Word::new(vec![4, 5])];
        assert_eq!(
            mix(&comp, &comp.ide(), &idxs).unwrap(),
            Word::identity_perm(5)
        );
        assert!(mix(&comp, &Word::new(vec![1, 1, 1, 2, 2]), &[xs[1].clone(), xs[0].clone()]).is_err());
    }

    #[test]
    fn lace_tiny_and_parity() {
        let p = lace_path(&Word::new(vec![1, 2]), &Word::new(vec![2, 1])).unwrap();
        assert_eq!(p.len(), 2);
        // Same parity on 4 elements is rejected without search.
        assert!(lace_path(&Word::identity_perm(4), &Word::new(vec![2, 1, 4, 3])).is_err());
        // 1234 -> 2341 is odd, so a full path exists (oracle: 2341 has 3
        // inversions).
        let p = lace_path(&Word::identity_perm(4), &Word::new(vec![2, 3, 4, 1])).unwrap();
        assert_eq!(p.len(), 24);
        let g = ImplicitGraph::permutahedron(4).unwrap();
        for w in p.windows(2) {
            assert!(g.adjacent(&w[0], &w[1]));
        }
    }

    #[test]
    fn lace_three_element_rule() {
        let ok = lace_path(&Word::new(vec![1, 2, 3]), &Word::new(vec![2, 1, 3])).unwrap();
        assert_eq!(ok.len(), 6);
        assert!(lace_path(&Word::new(vec![1, 2, 3]), &Word::new(vec![2, 3, 1])).is_err());
    }

    #[test]
    fn ga_ham_shapes() {
        // (3,1): the graph is a path on 4 words with endpoints of degree 1.
        match ga_ham(&Composition::new(vec![3, 1]).unwrap()).unwrap() {
            GaHam::Path(p) => {
                assert_eq!(p.len(), 4);
                assert_eq!(p[0], Word::new(vec![1, 1, 1, 2]));
                assert_eq!(p[3], Word::new(vec![2, 1, 1, 1]));
            }
            _ => panic!("expected a path"),
        }
        // (1,1,1): G(a) is the 6-cycle of permutations.
        match ga_ham(&Composition::new(vec![1, 1, 1]).unwrap()).unwrap() {
            GaHam::Cycle(c) => assert_eq!(c.len(), 6),
            _ => panic!("expected a cycle"),
        }
        // Exceptional shape: (4,1,1) with n=6.
        assert!(ga_ham(&Composition::new(vec![4, 1, 1]).unwrap()).is_err());
    }

    #[test]
    fn fa_orbits_for_2_3() {
        let comp = Composition::new(vec![2, 3]).unwrap();
        let f = fa_automorphism(&comp);
        assert_eq!(f.order(), 6);
        let g = ImplicitGraph::permutahedron(5).unwrap();
        let orbs = crate::auto::orbits(&f, &g);
        assert_eq!(orbs.orbits.len(), 20);
        assert_eq!(orbs.uniform_size, Some(6));
        // The orbit of the identity contains the six listed permutations.
        let id_orbit: Vec<Word> = {
            let mut w = Word::identity_perm(5);
            let mut o = Vec::new();
            for _ in 0..6 {
                o.push(w.clone());
                w = f.apply(&w);
            }
            o
        };
        for s in [
            [1, 2, 3, 4, 5],
            [2, 1, 4, 5, 3],
            [1, 2, 5, 3, 4],
            [2, 1, 3, 4, 5],
            [1, 2, 4, 5, 3],
            [2, 1, 5, 3, 4],
        ] {
            assert!(id_orbit.contains(&Word::new(s.to_vec())));
        }
    }

    #[test]
    fn id_mix_small_cases() {
        // a=(3): two orbits of f_a on the 6 permutations; the path is
        // (123, 213) and 213 is adjacent to f(123)=231.
        let q = id_mix_rec(&[3], PinShape::OddCoprime).unwrap();
        assert_eq!(q, vec![Word::new(vec![1, 2, 3]), Word::new(vec![2, 1, 3])]);
        // a=(2,2): the quoted base case.
        let q = id_mix_rec(&[2, 2], PinShape::TwoPowTwo).unwrap();
        assert_eq!(
            q,
            vec![Word::new(vec![1, 2, 3, 4]), Word::new(vec![2, 1, 3, 4])]
        );
        // Orbit-representative property for a=(5): 24 representatives, one
        // per orbit.
        let comp = Composition::new(vec![5]).unwrap();
        let q = id_mix_path(&comp).unwrap();
        assert_eq!(q.len(), 24);
        let f = fa_automorphism(&comp);
        let g = ImplicitGraph::permutahedron(5).unwrap();
        let orbs = crate::auto::orbits(&f, &g);
        let mut orbit_ids = std::collections::HashSet::new();
        let mut orbit_of = vec![0u32; 120];
        for (oid, o) in orbs.orbits.iter().enumerate() {
            for &v in o {
                orbit_of[v as usize] = oid as u32;
            }
        }
        for w in &q {
            assert!(orbit_ids.insert(orbit_of[g.encode(w) as usize]));
        }
    }

    #[test]
    fn pin_cycle_small() {
        for parts in [vec![3], vec![5], vec![3, 1]] {
            let comp = Composition::new(parts.clone()).unwrap();
            let c = pin_cycle(&comp).unwrap();
            assert_eq!(c.meta.claimed_k, Some(comp.lcm()), "{parts:?}");
        }
        // Shape (ii) with c=1 and m=4.
        let comp = Composition::new(vec![2, 2, 3, 1]).unwrap();
        let c = pin_cycle(&comp).unwrap();
        assert_eq!(c.len(), 40320);
        assert_eq!(c.meta.claimed_k, Some(6));
        // Shape rejections.
        assert!(pin_cycle(&Composition::new(vec![2, 3, 2]).unwrap()).is_err());
        assert!(pin_cycle(&Composition::new(vec![3, 3]).unwrap()).is_err());
    }

    #[test]
    fn pin_cycle_5_3() {
        let comp = Composition::new(vec![5, 3]).unwrap();
        let c = pin_cycle(&comp).unwrap();
        assert_eq!(c.len(), 40320);
        let f = fa_automorphism(&comp);
        assert!(verify::check_symmetric(&c, &f, 15).unwrap());
    }

    #[test]
    fn best_perm_small() {
        let c = best_perm_cycle(5).unwrap();
        assert_eq!(c.meta.claimed_k, Some(5));
        assert_eq!(cycle_compression(&c).unwrap(), 5);
    }

    #[test]
    fn plus_one_track_small() {
        let c = plus_one_track(3).unwrap();
        assert_eq!(c.len(), 6);
        assert!(cycle_compression(&c).unwrap() >= 3);
        assert!(plus_one_track(4).is_err());

        let c5 = plus_one_track(5).unwrap();
        assert!(cycle_compression(&c5).unwrap() >= 5);
        assert_eq!(track_count(&c5).unwrap().tracks, 1);
        match balance_stats(&c5).unwrap() {
            BalanceStats::TranspositionUses(u) => {
                assert_eq!(u, vec![24, 24, 24, 24, 24]);
            }
            _ => panic!("wrong stats"),
        }
    }
}
