//! Independent verification of Hamilton cycles: validity, compression
//! factor, prescribed symmetry, LCF distance sequences, track counts,
//! balance statistics, quotient-lifted cycle search, and exact Hamilton
//! compression for small parametrized families.

use crate::auto::{self, Automorphism};
use crate::graphs::ImplicitGraph;
use crate::landau;
use crate::word::Word;
use crate::{Error, Result};
use std::time::{Duration, Instant};

#[derive(Clone, Debug)]
pub struct CycleMeta {
    pub construction: String,
    pub automorphism: Option<Automorphism>,
    pub claimed_k: Option<u64>,
}

/// An ordered vertex list claimed to be a Hamilton cycle of `graph`.
#[derive(Clone, Debug)]
pub struct HamCycle {
    pub graph: ImplicitGraph,
    pub vertices: Vec<Word>,
    pub meta: CycleMeta,
}

impl HamCycle {
    pub fn new(
        graph: ImplicitGraph,
        vertices: Vec<Word>,
        construction: &str,
        automorphism: Option<Automorphism>,
        claimed_k: Option<u64>,
    ) -> Self {
        HamCycle {
            graph,
            vertices,
            meta: CycleMeta {
                construction: construction.to_string(),
                automorphism,
                claimed_k,
            },
        }
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// The same cycle started `by` positions later.
    pub fn rotated(&self, by: usize) -> Self {
        let mut v = self.vertices.clone();
        let n = v.len().max(1);
        v.rotate_left(by % n);
        HamCycle {
            graph: self.graph.clone(),
            vertices: v,
            meta: self.meta.clone(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub index: usize,
    pub reason: String,
}

impl std::fmt::Display for Violation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "violation at index {}: {}", self.index, self.reason)
    }
}

/// Confirms the Hamilton-cycle invariants or pinpoints the first violation:
/// correct length, valid and pairwise distinct vertices, consecutive
/// adjacency including the wrap-around edge.
pub fn validate_cycle(c: &HamCycle) -> std::result::Result<(), Violation> {
    let n = c.graph.vertex_count();
    if c.vertices.len() as u64 != n {
        return Err(Violation {
            index: c.vertices.len().saturating_sub(1),
            reason: format!("cycle has {} vertices, graph has {}", c.vertices.len(), n),
        });
    }
    let mut seen = vec![false; n as usize];
    for (i, v) in c.vertices.iter().enumerate() {
        if let Err(e) = c.graph.validate_vertex(v) {
            return Err(Violation { index: i, reason: e.to_string() });
        }
        let idx = c.graph.encode(v) as usize;
        if seen[idx] {
            return Err(Violation {
                index: i,
                reason: format!("vertex {v} repeats"),
            });
        }
        seen[idx] = true;
    }
    for i in 0..c.vertices.len() {
        let j = (i + 1) % c.vertices.len();
        if !c.graph.adjacent(&c.vertices[i], &c.vertices[j]) {
            return Err(Violation {
                index: i,
                reason: format!(
                    "consecutive vertices {} and {} are not adjacent",
                    c.vertices[i], c.vertices[j]
                ),
            });
        }
    }
    Ok(())
}

fn divisors_ascending(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n % d == 0 {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    large.reverse();
    small.extend(large);
    small
}

/// Compression factor kappa(G, C): the largest divisor k of N such that
/// rotating the cycle by N/k positions maps every edge of G onto an edge.
pub fn cycle_compression(c: &HamCycle) -> Result<u64> {
    validate_cycle(c).map_err(Error::Violation)?;
    let n = c.vertices.len() as u64;
    let pos = position_table(c);
    for s in divisors_ascending(n) {
        if s == n {
            break;
        }
        if rotation_preserves_edges(c, &pos, s as usize) {
            return Ok(n / s);
        }
    }
    Ok(1)
}

fn position_table(c: &HamCycle) -> Vec<u32> {
    let mut pos = vec![0u32; c.vertices.len()];
    for (i, v) in c.vertices.iter().enumerate() {
        pos[c.graph.encode(v) as usize] = i as u32;
    }
    pos
}

fn rotation_preserves_edges(c: &HamCycle, pos: &[u32], s: usize) -> bool {
    let n = c.vertices.len();
    for i in 0..n {
        let u = &c.vertices[i];
        let iu = c.graph.encode(u);
        for v in c.graph.neighbors(u).expect("validated vertex") {
            let iv = c.graph.encode(&v);
            if iv < iu {
                continue;
            }
            let j = pos[iv as usize] as usize;
            let su = &c.vertices[(i + s) % n];
            let sv = &c.vertices[(j + s) % n];
            if !c.graph.adjacent(su, sv) {
                return false;
            }
        }
    }
    true
}

/// True iff rotating the cycle by N/k positions equals applying `f`, i.e.
/// f(x_i) = x_{i+N/k} for all i.
pub fn check_symmetric(c: &HamCycle, f: &Automorphism, k: u64) -> Result<bool> {
    let n = c.vertices.len() as u64;
    if k == 0 || n % k != 0 {
        return Err(Error::Param(format!("k={k} does not divide N={n}")));
    }
    let step = (n / k) as usize;
    for i in 0..c.vertices.len() {
        if f.apply(&c.vertices[i]) != c.vertices[(i + step) % c.vertices.len()] {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Per-vertex cyclic distances to the non-cycle neighbors, normalized to
/// (-N/2, N/2], plus the smallest period of the sequence.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LcfAnnotation {
    pub dist_sets: Vec<Vec<i64>>,
    pub period: usize,
}

impl LcfAnnotation {
    pub fn is_cubic(&self) -> bool {
        self.dist_sets.iter().all(|d| d.len() == 1)
    }
}

impl std::fmt::Display for LcfAnnotation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let n = self.dist_sets.len();
        let reps = n / self.period.max(1);
        let one = |set: &Vec<i64>| -> String {
            if set.len() == 1 {
                set[0].to_string()
            } else {
                format!(
                    "{{{}}}",
                    set.iter().map(|d| d.to_string()).collect::<Vec<_>>().join(",")
                )
            }
        };
        let body: Vec<String> = self.dist_sets[..self.period].iter().map(one).collect();
        let label = if self.is_cubic() { "d" } else { "D" };
        write!(f, "{label}=({})^{reps}", body.join(","))
    }
}

pub fn lcf(c: &HamCycle) -> Result<LcfAnnotation> {
    validate_cycle(c).map_err(Error::Violation)?;
    let n = c.vertices.len();
    let pos = position_table(c);
    let mut dist_sets = Vec::with_capacity(n);
    for (i, v) in c.vertices.iter().enumerate() {
        let prev = (i + n - 1) % n;
        let next = (i + 1) % n;
        let mut set = Vec::new();
        for w in c.graph.neighbors(v).expect("validated vertex") {
            let j = pos[c.graph.encode(&w) as usize] as usize;
            if j == prev || j == next {
                continue;
            }
            let mut d = ((j + n - i) % n) as i64;
            if d > n as i64 / 2 {
                d -= n as i64;
            }
            debug_assert!(!(-1..=1).contains(&d));
            set.push(d);
        }
        set.sort_unstable();
        dist_sets.push(set);
    }
    let period = smallest_period(&dist_sets);
    Ok(LcfAnnotation { dist_sets, period })
}

fn smallest_period<T: PartialEq>(seq: &[T]) -> usize {
    let n = seq.len();
    for p in divisors_ascending(n as u64) {
        let p = p as usize;
        if (0..n).all(|i| seq[i] == seq[(i + p) % n]) {
            return p;
        }
    }
    n
}

/// Partition of the word columns into cyclic-shift equivalence classes.
#[derive(Clone, Debug)]
pub struct TrackInfo {
    pub tracks: usize,
    /// Class id per column.
    pub class_of: Vec<usize>,
    /// Left-rotation taking each column to its class canonical form.
    pub shift_of: Vec<usize>,
}

pub fn track_count(c: &HamCycle) -> Result<TrackInfo> {
    if c.vertices.is_empty() {
        return Err(Error::Param("empty cycle".into()));
    }
    let cols = c.vertices[0].len();
    let rows = c.vertices.len();
    let mut class_of = Vec::with_capacity(cols);
    let mut shift_of = Vec::with_capacity(cols);
    let mut canon_forms: Vec<Vec<u32>> = Vec::new();
    for j in 0..cols {
        let col: Vec<u32> = (0..rows).map(|i| c.vertices[i][j]).collect();
        let r = least_rotation(&col);
        let mut canon = Vec::with_capacity(rows);
        canon.extend_from_slice(&col[r..]);
        canon.extend_from_slice(&col[..r]);
        let class = match canon_forms.iter().position(|f| *f == canon) {
            Some(k) => k,
            None => {
                canon_forms.push(canon);
                canon_forms.len() - 1
            }
        };
        class_of.push(class);
        shift_of.push(r);
    }
    Ok(TrackInfo {
        tracks: canon_forms.len(),
        class_of,
        shift_of,
    })
}

/// Index of the lexicographically least rotation of `s`.
fn least_rotation(s: &[u32]) -> usize {
    let n = s.len();
    let (mut i, mut j, mut k) = (0usize, 1usize, 0usize);
    while i < n && j < n && k < n {
        let a = s[(i + k) % n];
        let b = s[(j + k) % n];
        if a == b {
            k += 1;
            continue;
        }
        if a > b {
            i += k + 1;
        } else {
            j += k + 1;
        }
        if i == j {
            j += 1;
        }
        k = 0;
    }
    i.min(j)
}

/// Balance statistics: per-column value-change counts for bitstring
/// families, per-transposition usage counts for permutation families.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BalanceStats {
    /// changes[j] counts steps at which column j changes value; each column
    /// changes 0->1 and 1->0 equally often, so the count is twice the
    /// per-direction flip count.
    BitChanges(Vec<u64>),
    /// uses[t] counts steps swapping positions (t, t+1), with t = n-1 for
    /// the cyclic first/last swap.
    TranspositionUses(Vec<u64>),
}

pub fn balance_stats(c: &HamCycle) -> Result<BalanceStats> {
    validate_cycle(c).map_err(Error::Violation)?;
    use ImplicitGraph::*;
    let n = c.vertices.len();
    let cols = c.vertices[0].len();
    match &c.graph {
        Hypercube { .. } | Johnson { .. } | MiddleLevels { .. } => {
            let mut changes = vec![0u64; cols];
            for i in 0..n {
                let (u, v) = (&c.vertices[i], &c.vertices[(i + 1) % n]);
                for (j, cnt) in changes.iter_mut().enumerate() {
                    if u[j] != v[j] {
                        *cnt += 1;
                    }
                }
            }
            Ok(BalanceStats::BitChanges(changes))
        }
        Permutahedron { n: w } | PermutahedronPlus { n: w } => {
            let mut uses = vec![0u64; *w];
            for i in 0..n {
                let (u, v) = (&c.vertices[i], &c.vertices[(i + 1) % n]);
                let diffs: Vec<usize> = (0..*w).filter(|&j| u[j] != v[j]).collect();
                match diffs.as_slice() {
                    [a, b] if b == &(a + 1) => uses[*a] += 1,
                    [a, b] if *a == 0 && *b == w - 1 => uses[w - 1] += 1,
                    _ => {
                        return Err(Error::Param(format!(
                            "step {i} is not a single transposition"
                        )))
                    }
                }
            }
            Ok(BalanceStats::TranspositionUses(uses))
        }
        _ => Err(Error::Param(
            "balance statistics are defined for bitstring and permutation families".into(),
        )),
    }
}

/// Limits for backtracking sweeps. `nodes` bounds expanded nodes per search;
/// `wall` optionally bounds the total elapsed time of a sweep.
#[derive(Clone, Copy, Debug)]
pub struct SearchBudget {
    pub nodes: u64,
    pub wall: Option<Duration>,
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget { nodes: 100_000_000, wall: None }
    }
}

pub enum LiftOutcome {
    Cycle(HamCycle),
    Exhausted,
    BudgetExceeded,
}

/// Backtracking search for a path visiting every orbit of `f` exactly once
/// whose last vertex is adjacent to f(first). On success the path and its
/// f-images assemble into a k-symmetric Hamilton cycle.
///
/// Requires all orbits to share one size. Expansion is in lexicographic
/// vertex order, so the first solution is deterministic.
pub fn lifted_cycle_search(
    g: &ImplicitGraph,
    f: &Automorphism,
    budget: &SearchBudget,
) -> Result<LiftOutcome> {
    let orbs = auto::orbits(f, g);
    let k = orbs
        .uniform_size
        .ok_or_else(|| Error::Param("orbit sizes are not uniform".into()))?;
    let n = g.vertex_count() as usize;
    let m = orbs.orbits.len();
    let mut orbit_of = vec![0u32; n];
    for (oid, orbit) in orbs.orbits.iter().enumerate() {
        for &v in orbit {
            orbit_of[v as usize] = oid as u32;
        }
    }

    let start = g.decode(0);
    let f_start = f.apply(&start);
    let mut visited = vec![false; m];
    visited[orbit_of[0] as usize] = true;
    let mut path = vec![start.clone()];
    let mut stack = vec![lift_candidates(g, &orbit_of, &visited, &start)];
    let mut nodes = 0u64;

    while let Some(iter) = stack.last_mut() {
        match iter.next() {
            Some(next) => {
                nodes += 1;
                if nodes > budget.nodes {
                    return Ok(LiftOutcome::BudgetExceeded);
                }
                if path.len() + 1 == m {
                    if g.adjacent(&next, &f_start) {
                        path.push(next);
                        return Ok(LiftOutcome::Cycle(assemble_lifted(g, f, k, &path)?));
                    }
                    continue;
                }
                visited[orbit_of[g.encode(&next) as usize] as usize] = true;
                path.push(next.clone());
                stack.push(lift_candidates(g, &orbit_of, &visited, &next));
            }
            None => {
                stack.pop();
                if let Some(v) = path.pop() {
                    visited[orbit_of[g.encode(&v) as usize] as usize] = false;
                }
            }
        }
    }
    // Single-orbit special case: the path is just the start vertex.
    if m == 1 {
        if g.adjacent(&start, &f_start) {
            return Ok(LiftOutcome::Cycle(assemble_lifted(g, f, k, &[start])?));
        }
        return Ok(LiftOutcome::Exhausted);
    }
    Ok(LiftOutcome::Exhausted)
}

fn lift_candidates(
    g: &ImplicitGraph,
    orbit_of: &[u32],
    visited: &[bool],
    from: &Word,
) -> std::vec::IntoIter<Word> {
    let mut out = Vec::new();
    for w in g.neighbors(from).expect("valid vertex") {
        if !visited[orbit_of[g.encode(&w) as usize] as usize] {
            out.push(w);
        }
    }
    out.into_iter()
}

fn assemble_lifted(g: &ImplicitGraph, f: &Automorphism, k: u64, path: &[Word]) -> Result<HamCycle> {
    let mut vertices = Vec::with_capacity(path.len() * k as usize);
    let mut block: Vec<Word> = path.to_vec();
    for _ in 0..k {
        vertices.extend(block.iter().cloned());
        block = block.iter().map(|w| f.apply(w)).collect();
    }
    let cycle = HamCycle::new(
        g.clone(),
        vertices,
        "lifted-search",
        Some(f.clone()),
        Some(k),
    );
    validate_cycle(&cycle).map_err(Error::Violation)?;
    if !check_symmetric(&cycle, f, k)? {
        return Err(Error::Search("lifted cycle fails its own symmetry".into()));
    }
    Ok(cycle)
}

/// Largest k for which a k-symmetric Hamilton cycle can exist in Q_n.
pub fn cube_compression_bound(n: usize) -> u64 {
    if n == 2 {
        return 4;
    }
    let mut k = 1u64;
    while k * 2 < 2 * n as u64 {
        k *= 2;
    }
    k
}

pub fn johnson_compression_bound(n: usize, k: usize) -> u64 {
    if n == 2 * k {
        2 * n as u64
    } else {
        n as u64
    }
}

/// For the middle-levels graph M_n (n odd).
pub fn middle_levels_compression_bound(n: usize) -> u64 {
    2 * n as u64
}

pub fn perm_compression_bound(n: usize) -> u64 {
    if n < 4 {
        return 2 * landau::landau_u64(n);
    }
    match n % 4 {
        0 | 1 => (2 * landau::landau0_u64(n)).max(landau::landau2_u64(n).unwrap_or(0)),
        _ => landau::landau_u64(n),
    }
}

fn family_bound(g: &ImplicitGraph) -> Option<u64> {
    use ImplicitGraph::*;
    match g {
        Hypercube { n } => Some(cube_compression_bound(*n)),
        Johnson { n, k } => Some(johnson_compression_bound(*n, *k)),
        MiddleLevels { n } => Some(middle_levels_compression_bound(*n)),
        Permutahedron { n } => Some(perm_compression_bound(*n)),
        _ => None,
    }
}

/// A hypercube candidate must additionally have power-of-two orbit size.
fn family_admits_orbit_size(g: &ImplicitGraph, s: u64) -> bool {
    match g {
        ImplicitGraph::Hypercube { n } => *n < 3 || s.is_power_of_two(),
        _ => true,
    }
}

#[derive(Clone, Debug)]
pub enum KappaResult {
    /// All candidates above k were refuted exhaustively (or excluded by a
    /// proven family bound).
    Exact { k: u64, witness: Option<Box<HamCycle>> },
    /// The sweep ran out of budget: k is certified achievable, anything up
    /// to `untested_max_order` remains open.
    LowerBound {
        k: u64,
        witness: Option<Box<HamCycle>>,
        untested_max_order: u64,
    },
}

impl KappaResult {
    pub fn value(&self) -> u64 {
        match self {
            KappaResult::Exact { k, .. } | KappaResult::LowerBound { k, .. } => *k,
        }
    }

    pub fn is_exact(&self) -> bool {
        matches!(self, KappaResult::Exact { .. })
    }

    pub fn witness(&self) -> Option<&HamCycle> {
        match self {
            KappaResult::Exact { witness, .. } | KappaResult::LowerBound { witness, .. } => {
                witness.as_deref()
            }
        }
    }
}

/// Exact Hamilton compression by sweeping candidate automorphisms with
/// uniform orbit size in decreasing size order and running the lifted
/// search on each. `autos` overrides the family enumeration (required for
/// explicit graphs).
pub fn kappa_exact(
    g: &ImplicitGraph,
    budget: &SearchBudget,
    autos: Option<Vec<Automorphism>>,
) -> Result<KappaResult> {
    let t0 = Instant::now();
    let candidates = match autos {
        Some(a) => a,
        None => enumerate_automorphisms(g)?,
    };
    let bound = family_bound(g);
    let n = g.vertex_count();

    // Group candidates by uniform orbit size.
    let mut by_size: std::collections::BTreeMap<u64, Vec<Automorphism>> = Default::default();
    for f in candidates {
        let ord = f.order();
        if let Some(b) = bound {
            if ord > b {
                continue;
            }
        }
        if n % ord != 0 || !family_admits_orbit_size(g, ord) {
            continue;
        }
        let orbs = auto::orbits(&f, g);
        if let Some(s) = orbs.uniform_size {
            if s == ord {
                by_size.entry(s).or_default().push(f);
            }
        }
    }
    by_size.entry(1).or_default().push(Automorphism::Identity);

    let mut best: Option<(u64, HamCycle)> = None;
    let mut out_of_time = false;
    let mut untested_max = 0u64;
    for (&size, fs) in by_size.iter().rev() {
        if best.is_some() {
            break;
        }
        for f in fs {
            if let Some(w) = budget.wall {
                if t0.elapsed() > w {
                    out_of_time = true;
                }
            }
            if out_of_time {
                untested_max = untested_max.max(size);
                continue;
            }
            match lifted_cycle_search(g, f, budget)? {
                LiftOutcome::Cycle(c) => {
                    best = Some((size, c));
                    break;
                }
                LiftOutcome::Exhausted => {}
                LiftOutcome::BudgetExceeded => {
                    untested_max = untested_max.max(size);
                }
            }
        }
    }

    match best {
        Some((k, c)) => {
            if untested_max > k {
                Ok(KappaResult::LowerBound {
                    k,
                    witness: Some(Box::new(c)),
                    untested_max_order: untested_max,
                })
            } else {
                Ok(KappaResult::Exact { k, witness: Some(Box::new(c)) })
            }
        }
        None => {
            if untested_max > 0 {
                Ok(KappaResult::LowerBound {
                    k: 0,
                    witness: None,
                    untested_max_order: untested_max,
                })
            } else {
                // Even the identity search found nothing: not Hamiltonian.
                Ok(KappaResult::Exact { k: 0, witness: None })
            }
        }
    }
}

/// Family automorphism enumeration for small parametrized graphs.
pub fn enumerate_automorphisms(g: &ImplicitGraph) -> Result<Vec<Automorphism>> {
    use ImplicitGraph::*;
    match g {
        Hypercube { n } => {
            if *n > 6 {
                return Err(Error::Param(format!(
                    "hypercube automorphism sweep is limited to n <= 6, got {n}"
                )));
            }
            let mut out = Vec::new();
            for pi in permutations(*n) {
                for zbits in 0..(1u32 << n) {
                    let z: Vec<u8> = (0..*n).map(|i| ((zbits >> i) & 1) as u8).collect();
                    out.push(Automorphism::hypercube(pi.clone(), z)?);
                }
            }
            Ok(out)
        }
        Johnson { n, k } => {
            let mut out = Vec::new();
            for pi in permutations(*n) {
                out.push(Automorphism::johnson(pi.clone(), false)?);
                if *n == 2 * k {
                    out.push(Automorphism::johnson(pi, true)?);
                }
            }
            Ok(out)
        }
        MiddleLevels { n } => {
            let mut out = Vec::new();
            for pi in permutations(*n) {
                out.push(Automorphism::johnson(pi.clone(), false)?);
                out.push(Automorphism::johnson(pi, true)?);
            }
            Ok(out)
        }
        Permutahedron { n } => {
            let mut out = Vec::new();
            for pi in permutations(*n) {
                let values: Vec<u32> = pi.iter().map(|&p| p as u32 + 1).collect();
                out.push(Automorphism::perm(false, values.clone())?);
                out.push(Automorphism::perm(true, values)?);
            }
            Ok(out)
        }
        AbelianCayley { group, gens } => {
            if !crate::cayley::is_canonical_generating_set(group, gens) {
                return Err(Error::Param(
                    "automorphism enumeration needs a canonical generating set; \
                     supply an explicit automorphism list otherwise"
                        .into(),
                ));
            }
            if group.factor_orders().iter().any(|&m| !crate::cayley::is_prime(m)) {
                return Err(Error::Param(
                    "present the group with prime cyclic factors for the sweep".into(),
                ));
            }
            // Aut is the product of the dihedral groups of the prime cycles:
            // per coordinate x -> +-x + c.
            let moduli: Vec<u64> = group.factor_orders().to_vec();
            let mut out = vec![Automorphism::Identity];
            let mut stack: Vec<(Vec<bool>, Vec<u64>)> = vec![(Vec::new(), Vec::new())];
            for &m in &moduli {
                let mut next = Vec::new();
                for (negs, offs) in stack {
                    for neg in [false, true] {
                        for c in 0..m {
                            let mut n2 = negs.clone();
                            let mut o2 = offs.clone();
                            n2.push(neg);
                            o2.push(c);
                            next.push((n2, o2));
                        }
                    }
                }
                stack = next;
            }
            for (negate, offset) in stack {
                out.push(Automorphism::Cayley {
                    moduli: moduli.clone(),
                    negate,
                    offset,
                });
            }
            Ok(out)
        }
        PermutahedronPlus { .. } | Explicit { .. } => Err(Error::Param(
            "no built-in automorphism enumeration for this family; supply a list".into(),
        )),
    }
}

/// All permutations of 0..n as index maps, in lexicographic order.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..n).collect();
    loop {
        out.push(cur.clone());
        // next_permutation
        let mut i = n.wrapping_sub(1);
        while i > 0 && cur[i - 1] >= cur[i] {
            i -= 1;
        }
        if i == 0 {
            break;
        }
        let mut j = n - 1;
        while cur[j] <= cur[i - 1] {
            j -= 1;
        }
        cur.swap(i - 1, j);
        cur[i..].reverse();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cube;

    #[test]
    fn validate_catches_breaks() {
        let c = cube::brgc(3).unwrap();
        assert!(validate_cycle(&c).is_ok());

        let mut broken = c.clone();
        broken.vertices.swap(2, 5);
        let v = validate_cycle(&broken).unwrap_err();
        assert!(v.index <= 5, "break index {}", v.index);

        let mut short = c.clone();
        short.vertices.pop();
        assert!(validate_cycle(&short).is_err());
    }

    #[test]
    fn compression_of_cycle_graph_is_n() {
        // Any Hamilton cycle of C_n has compression n.
        let n = 6;
        let edges: Vec<(u32, u32)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        let g = ImplicitGraph::explicit(n as usize, &edges).unwrap();
        let verts: Vec<Word> = (0..n).map(|i| Word::new(vec![i])).collect();
        let c = HamCycle::new(g, verts, "cycle", None, None);
        assert_eq!(cycle_compression(&c).unwrap(), 6);
    }

    #[test]
    fn period_and_divisors() {
        assert_eq!(divisors_ascending(12), vec![1, 2, 3, 4, 6, 12]);
        assert_eq!(smallest_period(&[1, 2, 1, 2]), 2);
        assert_eq!(smallest_period(&[1, 2, 2, 1]), 4);
    }

    #[test]
    fn least_rotation_examples() {
        assert_eq!(least_rotation(&[1, 0, 0]), 1);
        assert_eq!(least_rotation(&[0, 1, 0, 1]), 0);
        assert_eq!(least_rotation(&[2, 1, 2, 0]), 3);
    }

    #[test]
    fn track_count_start_invariant() {
        let c = cube::brgc(4).unwrap();
        let t = track_count(&c).unwrap().tracks;
        for r in [1, 3, 7] {
            assert_eq!(track_count(&c.rotated(r)).unwrap().tracks, t);
        }
    }

    #[test]
    fn brgc2_balance() {
        let c = cube::brgc(2).unwrap();
        match balance_stats(&c).unwrap() {
            BalanceStats::BitChanges(v) => assert_eq!(v, vec![2, 2]),
            _ => panic!("wrong stats kind"),
        }
    }

    #[test]
    fn bounds() {
        assert_eq!(cube_compression_bound(2), 4);
        assert_eq!(cube_compression_bound(3), 4);
        assert_eq!(cube_compression_bound(5), 8);
        assert_eq!(cube_compression_bound(12), 16);
        assert_eq!(johnson_compression_bound(7, 2), 7);
        assert_eq!(johnson_compression_bound(6, 3), 12);
        assert_eq!(middle_levels_compression_bound(7), 14);
        assert_eq!(perm_compression_bound(5), 10);
        assert_eq!(perm_compression_bound(4), 6);
    }

    #[test]
    fn lifted_search_on_k4_involution() {
        // K_4 with the fixed-point-free involution (0 1)(2 3). Oracle: among
        // the three Hamilton cycles of K_4, at least one is 2-symmetric
        // under it (brute force over all 3 cycles checks 0-2-1-3 works).
        let edges = vec![(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];
        let g = ImplicitGraph::explicit(4, &edges).unwrap();
        let f = Automorphism::explicit(vec![1, 0, 3, 2]).unwrap();
        match lifted_cycle_search(&g, &f, &SearchBudget::default()).unwrap() {
            LiftOutcome::Cycle(c) => {
                assert_eq!(c.len(), 4);
                assert!(check_symmetric(&c, &f, 2).unwrap());
            }
            _ => panic!("expected a 2-symmetric cycle"),
        }
    }

    #[test]
    fn nonuniform_orbits_rejected() {
        let g = ImplicitGraph::johnson(6, 3).unwrap();
        let f = Automorphism::shift_all(6);
        assert!(lifted_cycle_search(&g, &f, &SearchBudget::default()).is_err());
    }

    #[test]
    fn kappa_exact_tiny_cubes() {
        for (n, expect) in [(3usize, 4u64), (4, 4)] {
            let g = ImplicitGraph::hypercube(n).unwrap();
            let r = kappa_exact(&g, &SearchBudget::default(), None).unwrap();
            assert!(r.is_exact());
            assert_eq!(r.value(), expect, "kappa(Q_{n})");
        }
    }
}
