//! Abelian groups, their Cayley graphs, and symmetric Hamilton cycles in
//! them: the folklore Hamilton-cycle construction, the compression form of
//! the factor group lemma, voltage-based lifting, the even-order
//! compression-2 constructions, and the odd-order classification.

use crate::auto::Automorphism;
use crate::graphs::ImplicitGraph;
use crate::search;
use crate::verify::{self, HamCycle};
use crate::word::{Sym, Word};
use crate::{Error, Result};
use num_integer::Integer;

/// A finite abelian group presented as a direct sum of cyclic factors
/// Z_{n_1} + ... + Z_{n_l}; elements are residue tuples.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AbelianGroup {
    factors: Vec<u64>,
}

impl AbelianGroup {
    pub fn new(factors: Vec<u64>) -> Result<Self> {
        if factors.iter().any(|&m| m < 2) {
            return Err(Error::Param("cyclic factor orders must be >= 2".into()));
        }
        Ok(AbelianGroup { factors })
    }

    /// Parses a group description like "Z3xZ5" or "Z2xZ2xZ4".
    pub fn parse(s: &str) -> Result<Self> {
        let mut factors = Vec::new();
        for part in s.split(['x', 'X']) {
            let part = part.trim();
            let digits = part
                .strip_prefix('Z')
                .or_else(|| part.strip_prefix('z'))
                .ok_or_else(|| Error::Format(format!("bad group factor {part:?}")))?;
            let m: u64 = digits
                .parse()
                .map_err(|_| Error::Format(format!("bad group factor {part:?}")))?;
            factors.push(m);
        }
        AbelianGroup::new(factors)
    }

    pub fn rank(&self) -> usize {
        self.factors.len()
    }

    pub fn factor_orders(&self) -> &[u64] {
        &self.factors
    }

    pub fn order(&self) -> u64 {
        self.factors.iter().product()
    }

    pub fn zero(&self) -> Word {
        Word::zeros(self.rank())
    }

    pub fn validate(&self, w: &Word) -> Result<()> {
        if w.len() != self.rank()
            || w.0.iter().zip(&self.factors).any(|(&x, &m)| x as u64 >= m)
        {
            return Err(Error::Vertex(format!(
                "{w} is not an element of {self}"
            )));
        }
        Ok(())
    }

    pub fn add(&self, a: &Word, b: &Word) -> Word {
        Word(
            (0..self.rank())
                .map(|i| ((a[i] as u64 + b[i] as u64) % self.factors[i]) as Sym)
                .collect(),
        )
    }

    pub fn neg(&self, a: &Word) -> Word {
        Word(
            (0..self.rank())
                .map(|i| ((self.factors[i] - a[i] as u64) % self.factors[i]) as Sym)
                .collect(),
        )
    }

    pub fn sub(&self, a: &Word, b: &Word) -> Word {
        self.add(a, &self.neg(b))
    }

    pub fn scale(&self, k: u64, a: &Word) -> Word {
        Word(
            (0..self.rank())
                .map(|i| ((a[i] as u64 * (k % self.factors[i])) % self.factors[i]) as Sym)
                .collect(),
        )
    }

    pub fn element_order(&self, a: &Word) -> u64 {
        let mut ord = 1u64;
        for i in 0..self.rank() {
            let m = self.factors[i];
            let o = m / m.gcd(&(a[i] as u64));
            ord = ord.lcm(&o);
        }
        ord
    }

    /// Mixed-radix index, last coordinate fastest.
    pub fn index(&self, w: &Word) -> u64 {
        let mut idx = 0u64;
        for i in 0..self.rank() {
            idx = idx * self.factors[i] + w[i] as u64;
        }
        idx
    }

    pub fn element(&self, mut idx: u64) -> Word {
        let mut v = vec![0 as Sym; self.rank()];
        for i in (0..self.rank()).rev() {
            v[i] = (idx % self.factors[i]) as Sym;
            idx /= self.factors[i];
        }
        Word(v)
    }

    pub fn iter_elements(&self) -> impl Iterator<Item = Word> + '_ {
        (0..self.order()).map(move |i| self.element(i))
    }

    /// Subgroup generated by `gens`, as a sorted list of element indices.
    pub fn span(&self, gens: &[Word]) -> Vec<u64> {
        let n = self.order() as usize;
        let mut seen = vec![false; n];
        let mut queue = vec![self.zero()];
        seen[0] = true;
        let mut out = vec![0u64];
        while let Some(w) = queue.pop() {
            for s in gens {
                for next in [self.add(&w, s), self.sub(&w, s)] {
                    let idx = self.index(&next) as usize;
                    if !seen[idx] {
                        seen[idx] = true;
                        out.push(idx as u64);
                        queue.push(next);
                    }
                }
            }
        }
        out.sort_unstable();
        out
    }

    pub fn generates(&self, gens: &[Word]) -> bool {
        self.span(gens).len() as u64 == self.order()
    }

    /// Orders of the primary (prime-power) cyclic components, one list entry
    /// per component, sorted.
    pub fn primary_orders(&self) -> Vec<u64> {
        let mut out = Vec::new();
        for &m in &self.factors {
            let mut rem = m;
            let mut p = 2u64;
            while p * p <= rem {
                if rem % p == 0 {
                    let mut q = 1;
                    while rem % p == 0 {
                        q *= p;
                        rem /= p;
                    }
                    out.push(q);
                }
                p += 1;
            }
            if rem > 1 {
                out.push(rem);
            }
        }
        out.sort_unstable();
        out
    }

    pub fn is_squarefree(&self) -> bool {
        self.primary_orders().iter().all(|&q| is_prime(q))
    }

    /// Projects an element into primary coordinates (CRT on each factor),
    /// in the same component order as `primary_orders` before sorting.
    fn primary_coordinates(&self, w: &Word) -> Vec<(u64, u64)> {
        let mut out = Vec::new();
        for i in 0..self.rank() {
            let mut rem = self.factors[i];
            let x = w[i] as u64;
            let mut p = 2u64;
            while p * p <= rem {
                if rem % p == 0 {
                    let mut q = 1;
                    while rem % p == 0 {
                        q *= p;
                        rem /= p;
                    }
                    out.push((q, x % q));
                }
                p += 1;
            }
            if rem > 1 {
                out.push((rem, x % rem));
            }
        }
        out
    }
}

impl std::fmt::Display for AbelianGroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self.factors.iter().map(|m| format!("Z{m}")).collect();
        write!(f, "{}", parts.join("x"))
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Inclusion-minimal generating set: drops generators (as +-pairs) that are
/// redundant, scanning in the given order.
pub fn minimize_generating_set(group: &AbelianGroup, gens: &[Word]) -> Vec<Word> {
    let mut kept: Vec<Word> = dedup_signed(group, gens);
    let mut i = 0;
    while i < kept.len() {
        let mut trial = kept.clone();
        trial.remove(i);
        if group.generates(&trial) {
            kept = trial;
        } else {
            i += 1;
        }
    }
    kept
}

/// Removes duplicates and negation-partners, keeping the representative with
/// the smaller index.
fn dedup_signed(group: &AbelianGroup, gens: &[Word]) -> Vec<Word> {
    let mut out: Vec<Word> = Vec::new();
    for s in gens {
        let n = group.neg(s);
        if !out.contains(s) && !out.contains(&n) {
            let keep = if group.index(s) <= group.index(&n) { s.clone() } else { n };
            out.push(keep);
        }
    }
    out
}

/// Canonical generating set test for squarefree groups: in primary
/// coordinates, every generator is supported on exactly one component and
/// every component is covered by exactly one generator.
pub fn is_canonical_generating_set(group: &AbelianGroup, gens: &[Word]) -> bool {
    if !group.is_squarefree() {
        return false;
    }
    let comps = group.primary_coordinates(&group.zero()).len();
    if gens.len() != comps {
        return false;
    }
    let mut covered = vec![false; comps];
    for s in gens {
        let coords = group.primary_coordinates(s);
        let supp: Vec<usize> = coords
            .iter()
            .enumerate()
            .filter(|(_, &(_, x))| x != 0)
            .map(|(i, _)| i)
            .collect();
        if supp.len() != 1 || covered[supp[0]] {
            return false;
        }
        covered[supp[0]] = true;
    }
    covered.iter().all(|&c| c)
}

fn cayley_graph(group: &AbelianGroup, gens: &[Word]) -> Result<ImplicitGraph> {
    ImplicitGraph::abelian_cayley(group.clone(), gens.to_vec())
}

/// Hamilton cycle in Gamma(G,S) by the folklore construction: a nested
/// boustrophedon over the filtration <s_1> <= <s_1,s_2> <= ... of cyclic
/// quotients. Twisted closing steps use short Hamilton-path searches inside
/// the subgroup graphs.
pub fn abelian_ham_cycle(group: &AbelianGroup, gens: &[Word]) -> Result<HamCycle> {
    if group.order() < 3 {
        return Err(Error::Param("group order must be >= 3".into()));
    }
    if !group.generates(gens) {
        return Err(Error::Param("given set does not generate the group".into()));
    }
    let gens = dedup_signed(group, gens);
    let graph = cayley_graph(group, &gens)?;
    let words = subgroup_cycle(group, &gens)?;
    let cycle = HamCycle::new(graph, words, "abelian-folklore", None, None);
    verify::validate_cycle(&cycle).map_err(|v| Error::Search(format!("construction bug: {v}")))?;
    Ok(cycle)
}

/// Hamilton cycle of the subgroup <gens>, starting at 0. The twisted
/// closing steps of the boustrophedon can hit parity dead ends for one
/// particular generator ordering; rotating the filtration usually fixes
/// that, and a direct cycle search over the subgroup covers the rest at
/// these sizes.
fn subgroup_cycle(group: &AbelianGroup, gens: &[Word]) -> Result<Vec<Word>> {
    for rot in 0..gens.len() {
        let mut order = gens.to_vec();
        order.rotate_left(rot);
        if let Ok(w) = ham_cycle_words(group, &order) {
            return Ok(w);
        }
    }
    let span = group.span(gens);
    let lookup = |w: &Word| span.binary_search(&group.index(w)).unwrap() as u64;
    let neighbors = |w: &Word| -> Vec<Word> {
        let mut out = Vec::new();
        for s in gens {
            for next in [group.add(w, s), group.sub(w, s)] {
                if next != *w {
                    out.push(next);
                }
            }
        }
        out.sort();
        out.dedup();
        out
    };
    search::ham_cycle(span.len(), lookup, neighbors, &group.zero(), 100_000_000)
        .ok_or_else(|| Error::Search("no Hamilton cycle found in Cayley graph".into()))
}

fn ham_cycle_words(group: &AbelianGroup, gens: &[Word]) -> Result<Vec<Word>> {
    // Filtration: subgroup spanned by gens[..i]. Recurse on the largest
    // proper prefix that still makes progress.
    let mut useful: Vec<Word> = Vec::new();
    for s in gens {
        if !subgroup_contains(group, &useful, s) {
            useful.push(s.clone());
        }
    }
    build_cycle(group, &useful)
}

fn subgroup_contains(group: &AbelianGroup, gens: &[Word], x: &Word) -> bool {
    let span = group.span(gens);
    span.binary_search(&group.index(x)).is_ok()
}

/// Builds a Hamilton cycle of <gens> within `group`, as explicit words.
/// Every generator in `gens` strictly enlarges the span of its predecessors.
fn build_cycle(group: &AbelianGroup, gens: &[Word]) -> Result<Vec<Word>> {
    let s = gens.last().expect("nonempty generating set");
    let rest = &gens[..gens.len() - 1];
    let h_span = group.span(rest);
    let h_size = h_span.len() as u64;
    // d = index of H in <H, s>; w = d*s, the twist accumulated by going
    // around the coset cycle once.
    let mut d = 1u64;
    let mut acc = s.clone();
    while h_span.binary_search(&group.index(&acc)).is_err() {
        acc = group.add(&acc, s);
        d += 1;
    }
    let w = acc;

    if h_size == 1 {
        if d < 3 {
            return Err(Error::Search("cyclic base case shorter than a cycle".into()));
        }
        return Ok((0..d).map(|j| group.scale(j, s)).collect());
    }
    if h_size == 2 {
        // Ladder: up one rail, across, down the other.
        let h = group.element(h_span[1]);
        let mut out = Vec::with_capacity(2 * d as usize);
        for j in 0..d {
            out.push(group.scale(j, s));
        }
        for j in (0..d).rev() {
            out.push(group.add(&group.scale(j, s), &h));
        }
        return Ok(out);
    }

    // |H| >= 3: Hamilton cycle of H by recursion.
    let h_cycle = build_cycle(group, rest)?;
    if d == 1 {
        return Ok(h_cycle);
    }
    let zero_idx = group.index(&group.zero());
    let h_words: Vec<Word> = rotate_to_start(h_cycle, |x| group.index(x) == zero_idx);
    let m = h_words.len();
    let w_is_zero = group.index(&w) == 0;

    // Comb: climb column 0, then snake rows over columns 1..d-1. For even m
    // the comb closes through a -s edge at column 1; for odd m it closes
    // through the wrap edge, which requires zero twist.
    if m % 2 == 0 || w_is_zero {
        return Ok(comb(group, s, d, &h_words));
    }

    // Twisted closing: the boustrophedon must exit at -w so that the final
    // +s step lands back on 0.
    let target = group.neg(&w);
    if d % 2 == 1 {
        let path = ham_path_in_subgroup(group, rest, &h_span, &group.zero(), &target)?;
        return Ok(snake(group, s, d, &path));
    }
    // d even: snake a 0 -> v path over the first d-1 columns, then walk the
    // last column from v to -w.
    let reversed = rotate_to_start(
        h_words.iter().rev().cloned().collect(),
        |x| group.index(x) == zero_idx,
    );
    for p in [&h_words, &reversed] {
        let v = p.last().unwrap().clone();
        if group.index(&v) == group.index(&target) {
            continue;
        }
        if let Ok(last) = ham_path_in_subgroup(group, rest, &h_span, &v, &target) {
            let mut out = snake(group, s, d - 1, p);
            let base = group.scale(d - 1, s);
            out.extend(last.iter().map(|x| group.add(&base, x)));
            return Ok(out);
        }
    }
    Err(Error::Search(
        "folklore construction: no closing Hamilton path found".into(),
    ))
}

fn rotate_to_start(mut words: Vec<Word>, pred: impl Fn(&Word) -> bool) -> Vec<Word> {
    let pos = words.iter().position(pred).expect("start vertex present");
    words.rotate_left(pos);
    words
}

/// Boustrophedon: column j holds js + P, alternating direction.
fn snake(group: &AbelianGroup, s: &Word, cols: u64, path: &[Word]) -> Vec<Word> {
    let mut out = Vec::with_capacity(cols as usize * path.len());
    for j in 0..cols {
        let base = group.scale(j, s);
        if j % 2 == 0 {
            out.extend(path.iter().map(|x| group.add(&base, x)));
        } else {
            out.extend(path.iter().rev().map(|x| group.add(&base, x)));
        }
    }
    out
}

/// Column 0 bottom-to-top, then rows m-1 down to 0 snaked over columns
/// 1..d-1. Ends at (d-1, row 0) for odd m (closes via the wrap edge) or at
/// (1, row 0) for even m (closes via -s).
fn comb(group: &AbelianGroup, s: &Word, d: u64, rows: &[Word]) -> Vec<Word> {
    let m = rows.len();
    let mut out = Vec::with_capacity(d as usize * m);
    for row in rows {
        out.push(row.clone());
    }
    for r in (0..m).rev() {
        let forward = (m - 1 - r) % 2 == 0;
        let cols: Vec<u64> = if forward {
            (1..d).collect()
        } else {
            (1..d).rev().collect()
        };
        for j in cols {
            out.push(group.add(&group.scale(j, s), &rows[r]));
        }
    }
    out
}

/// Lifts a coset-representative path to an ord(g)-symmetric Hamilton cycle:
/// C = P, g+P, 2g+P, ..., with P running from 0 to g+s and meeting every
/// coset of <g> exactly once.
pub fn factor_comp_cycle(
    group: &AbelianGroup,
    gens: &[Word],
    g: &Word,
    s: &Word,
    p: &[Word],
) -> Result<HamCycle> {
    let graph = cayley_graph(group, gens)?;
    if !gens.iter().any(|t| *t == *s || group.neg(t) == *s) {
        return Err(Error::Param(format!("{s} is not in the generating set")));
    }
    let ord = group.element_order(g);
    let cosets = group.order() / ord;
    if p.len() as u64 != cosets {
        return Err(Error::Param(format!(
            "path has {} vertices but <g> has {cosets} cosets",
            p.len()
        )));
    }
    if p[0] != group.zero() || *p.last().unwrap() != group.add(g, s) {
        return Err(Error::Param("path must run from 0 to g+s".into()));
    }
    // Coset id: index of the canonical representative found by subtracting
    // multiples of g.
    let coset_id = |x: &Word| -> u64 {
        let mut best = group.index(x);
        let mut cur = x.clone();
        for _ in 1..ord {
            cur = group.add(&cur, g);
            best = best.min(group.index(&cur));
        }
        best
    };
    let mut seen = std::collections::HashSet::new();
    for (i, x) in p.iter().enumerate() {
        group.validate(x)?;
        if i + 1 < p.len() && !graph.adjacent(x, &p[i + 1]) {
            return Err(Error::Param(format!(
                "path vertices {x} and {} are not adjacent",
                p[i + 1]
            )));
        }
        if !seen.insert(coset_id(x)) {
            return Err(Error::Param(format!(
                "path hits the coset of {x} twice"
            )));
        }
    }

    let f = Automorphism::cayley_translation(group.factor_orders().to_vec(), g.0.iter().map(|&x| x as u64).collect());
    let mut vertices = Vec::with_capacity(group.order() as usize);
    let mut block: Vec<Word> = p.to_vec();
    for _ in 0..ord {
        vertices.extend(block.iter().cloned());
        block = block.iter().map(|w| f.apply(w)).collect();
    }
    let cycle = HamCycle::new(graph, vertices, "factor-lemma", Some(f.clone()), Some(ord));
    verify::validate_cycle(&cycle).map_err(Error::Violation)?;
    if !verify::check_symmetric(&cycle, &f, ord)? {
        return Err(Error::Search("lifted cycle fails its symmetry".into()));
    }
    Ok(cycle)
}

/// Quotient Hamilton cycle of G/<h> realized as labels; returns the label
/// sequence (elements of the signed generating set) whose partial sums
/// visit one representative per coset.
fn quotient_label_cycle(
    group: &AbelianGroup,
    gens: &[Word],
    h: &Word,
) -> Result<Vec<Word>> {
    let h_span = group.span(&[h.clone()]);
    let coset_of = |x: &Word| -> u64 {
        let mut best = group.index(x);
        let mut cur = x.clone();
        loop {
            cur = group.add(&cur, h);
            if cur == *x {
                break;
            }
            best = best.min(group.index(&cur));
        }
        best
    };
    // Quotient group: reuse the generic construction on the quotient by
    // mapping coset representatives. Build the quotient as an explicit
    // search over canonical representatives.
    let mut canon: Vec<Word> = Vec::new();
    let mut canon_ids: std::collections::HashMap<u64, usize> = Default::default();
    for x in group.iter_elements() {
        let c = coset_of(&x);
        if let std::collections::hash_map::Entry::Vacant(e) = canon_ids.entry(c) {
            e.insert(canon.len());
            canon.push(group.element(c));
        }
    }
    let m = canon.len();
    if m < 3 {
        return Err(Error::Param("quotient too small for a cycle".into()));
    }
    let signed: Vec<Word> = gens
        .iter()
        .flat_map(|s| [s.clone(), group.neg(s)])
        .collect();
    let neighbors = |w: &Word| -> Vec<Word> {
        let mut out: Vec<Word> = signed
            .iter()
            .map(|s| group.element(coset_of(&group.add(w, s))))
            .filter(|u| u != w)
            .collect();
        out.sort();
        out.dedup();
        out
    };
    let index_of = |w: &Word| canon_ids[&group.index(w)] as u64;
    let start = group.element(coset_of(&group.zero()));
    let cyc = search::ham_cycle(m, index_of, neighbors, &start, 50_000_000)
        .ok_or_else(|| Error::Search("no Hamilton cycle in the quotient".into()))?;
    // Realize each quotient step by a concrete generator label.
    let mut labels = Vec::with_capacity(m);
    let mut cur = group.zero();
    for i in 0..m {
        let target_coset = group.index(&cyc[(i + 1) % m]);
        let lab = signed
            .iter()
            .find(|s| coset_of(&group.add(&cur, s)) == target_coset)
            .ok_or_else(|| Error::Search("quotient step has no generator label".into()))?
            .clone();
        cur = group.add(&cur, &lab);
        labels.push(lab);
    }
    let _ = h_span;
    Ok(labels)
}

/// Sum of a label sequence: the voltage of the quotient cycle it realizes.
fn voltage(group: &AbelianGroup, labels: &[Word]) -> Word {
    labels
        .iter()
        .fold(group.zero(), |acc, l| group.add(&acc, l))
}

/// Lifts a labelled quotient cycle with voltage v, <v> = <h>, via the
/// factor lemma.
fn lift_labels(
    group: &AbelianGroup,
    gens: &[Word],
    labels: &[Word],
) -> Result<HamCycle> {
    let v = voltage(group, labels);
    let mut p = vec![group.zero()];
    for l in &labels[..labels.len() - 1] {
        p.push(group.add(p.last().unwrap(), l));
    }
    let s_last = labels.last().unwrap().clone();
    // P ends at v - s_last = g + s with g = v and s = -s_last.
    factor_comp_cycle(group, gens, &v, &group.neg(&s_last), &p)
}

/// Hamilton cycle with compression at least 2 in any Cayley graph of an
/// even-order abelian group with |G| >= 4. The generating set is minimized
/// first; a single generator of full order short-circuits to the rotation
/// cycle.
pub fn comp2_cycle(group: &AbelianGroup, gens_in: &[Word]) -> Result<HamCycle> {
    let n = group.order();
    if n < 4 || n % 2 != 0 {
        return Err(Error::Param(format!(
            "compression-2 construction needs even order >= 4, got {n}"
        )));
    }
    if !group.generates(gens_in) {
        return Err(Error::Param("given set does not generate the group".into()));
    }
    let gens = minimize_generating_set(group, gens_in);
    let graph = cayley_graph(group, &gens)?;

    // Circulant short-circuit: a single generator of full order.
    if let Some(s) = gens.iter().find(|s| group.element_order(s) == n) {
        let vertices: Vec<Word> = (0..n).map(|j| group.scale(j, s)).collect();
        let f = Automorphism::cayley_translation(
            group.factor_orders().to_vec(),
            s.0.iter().map(|&x| x as u64).collect(),
        );
        let cycle = HamCycle::new(graph, vertices, "circulant", Some(f), Some(n));
        verify::validate_cycle(&cycle).map_err(Error::Violation)?;
        return Ok(cycle);
    }

    let even_gens: Vec<&Word> = gens
        .iter()
        .filter(|s| group.element_order(s) % 2 == 0)
        .collect();
    if even_gens.is_empty() {
        return Err(Error::Search(
            "no generator of even order in a minimal generating set of an even group".into(),
        ));
    }

    // Case 1: some generator of order 2. C = P^, f(P^) for the reflection
    // f(x) = (s + v) - x, with P^ a Hamilton path of <S'> embedded at the
    // 0-coset.
    if let Some(s) = even_gens.iter().find(|s| group.element_order(s) == 2) {
        let rest: Vec<Word> = gens.iter().filter(|t| *t != *s).cloned().collect();
        let sub = group.span(&rest);
        if 2 * sub.len() as u64 != n {
            return Err(Error::Search(
                "order-2 generator does not split the group".into(),
            ));
        }
        let p_hat: Vec<Word> = if sub.len() == 1 {
            vec![group.zero()]
        } else if sub.len() == 2 {
            vec![group.zero(), group.element(sub[1])]
        } else {
            // Hamilton cycle of <S'> read as a path from 0 to its last
            // vertex.
            subgroup_cycle(group, &rest)?
        };
        let v = p_hat.last().unwrap().clone();
        let center = group.add(s, &v);
        let f = Automorphism::cayley_reflection(
            group.factor_orders().to_vec(),
            center.0.iter().map(|&x| x as u64).collect(),
        );
        let mut vertices = p_hat.clone();
        vertices.extend(p_hat.iter().map(|w| f.apply(w)));
        let cycle = HamCycle::new(graph, vertices, "comp2-reflection", Some(f.clone()), Some(2));
        verify::validate_cycle(&cycle).map_err(Error::Violation)?;
        if !verify::check_symmetric(&cycle, &f, 2)? {
            return Err(Error::Search("reflection cycle fails its symmetry".into()));
        }
        return Ok(cycle);
    }

    // Case 2: a generator s of order >= 4. Find a quotient Hamilton cycle
    // by <2s> and retarget its voltage to 2s by flipping +-s labels.
    let s = even_gens[0].clone();
    let h = group.add(&s, &s);
    let mut labels = quotient_label_cycle(group, &gens, &h)?;
    retarget_voltage(group, &mut labels, &s, &h)?;
    let mut c = lift_labels(group, &gens, &labels)?;
    c.meta.construction = "comp2-voltage".into();
    Ok(c)
}

/// Flips +-s labels until the voltage generates <h>, h = 2s. Flipping one
/// label changes the voltage by +-2s, and s-labelled edges stay valid in
/// the quotient because s = -s modulo <h>.
fn retarget_voltage(
    group: &AbelianGroup,
    labels: &mut [Word],
    s: &Word,
    h: &Word,
) -> Result<()> {
    let neg_s = group.neg(s);
    let h_ord = group.element_order(h);
    let plus: Vec<usize> = (0..labels.len()).filter(|&i| labels[i] == *s).collect();
    let minus: Vec<usize> = (0..labels.len()).filter(|&i| labels[i] == neg_s).collect();
    if plus.is_empty() && minus.is_empty() {
        return Err(Error::Search(
            "quotient cycle uses no +-s edge; voltage cannot be retargeted".into(),
        ));
    }
    let good = |v: &Word| group.element_order(v) == h_ord;
    // Flipping t plus-labels (or t minus-labels) moves the voltage by
    // -+2ts, sweeping all reachable multiples.
    let attempt = |from: &Word, to: &Word, count: usize| -> Option<Vec<Word>> {
        let source: &[usize] = if *from == *s { &plus } else { &minus };
        let mut trial = labels.to_vec();
        for &i in source.iter().take(count) {
            trial[i] = to.clone();
        }
        if good(&voltage(group, &trial)) {
            Some(trial)
        } else {
            None
        }
    };
    for t in 0..=plus.len() {
        if let Some(trial) = attempt(&s.clone(), &neg_s, t) {
            labels.clone_from_slice(&trial);
            return Ok(());
        }
    }
    for t in 1..=minus.len() {
        if let Some(trial) = attempt(&neg_s.clone(), s, t) {
            labels.clone_from_slice(&trial);
            return Ok(());
        }
    }
    Err(Error::Search(
        "no flip pattern reaches a voltage generating <2s>".into(),
    ))
}

/// Classification result for odd-order abelian Cayley graphs.
#[derive(Clone, Debug)]
pub enum OddOrderClass {
    /// kappa = 1, certified by an exhaustive automorphism sweep.
    IncompressibleCertified { ham: HamCycle },
    /// kappa = 1 expected (canonical squarefree composite), but the order
    /// is too large for the exhaustive sweep.
    IncompressibleConjectured { ham: HamCycle },
    /// A p-symmetric witness cycle for some prime p dividing |G|.
    CompressionAtLeast { p: u64, witness: HamCycle },
}

/// Classifies an odd-order abelian Cayley graph: canonical generating sets
/// on squarefree composite groups are incompressible (certified
/// exhaustively up to order 1000); everything else carries a p-symmetric
/// cycle built from a nonzero-voltage quotient cycle or a full rotation.
pub fn odd_order_classify(group_in: &AbelianGroup, gens_in: &[Word]) -> Result<OddOrderClass> {
    let n = group_in.order();
    if n % 2 == 0 {
        return Err(Error::Param("classification applies to odd order".into()));
    }
    if !group_in.generates(gens_in) {
        return Err(Error::Param("given set does not generate the group".into()));
    }
    // Work in primary coordinates so the automorphism sweep has the
    // product-of-prime-cycles shape.
    let (group, gens) = to_primary(group_in, gens_in)?;
    let gens = minimize_generating_set(&group, &gens);

    // Full-order generator: the rotation cycle has compression n.
    if let Some(s) = gens.iter().find(|s| group.element_order(s) == n) {
        let graph = cayley_graph(&group, &gens)?;
        let vertices: Vec<Word> = (0..n).map(|j| group.scale(j, s)).collect();
        let f = Automorphism::cayley_translation(
            group.factor_orders().to_vec(),
            s.0.iter().map(|&x| x as u64).collect(),
        );
        let cycle = HamCycle::new(graph, vertices, "circulant", Some(f), Some(n));
        verify::validate_cycle(&cycle).map_err(Error::Violation)?;
        let p = smallest_prime_factor(n);
        return Ok(OddOrderClass::CompressionAtLeast { p, witness: cycle });
    }

    if group.is_squarefree() && !is_prime(n) && is_canonical_generating_set(&group, &gens) {
        let ham = abelian_ham_cycle(&group, &gens)?;
        if n > 1000 {
            return Ok(OddOrderClass::IncompressibleConjectured { ham });
        }
        let graph = cayley_graph(&group, &gens)?;
        let r = verify::kappa_exact(&graph, &verify::SearchBudget::default(), None)?;
        if r.is_exact() && r.value() == 1 {
            return Ok(OddOrderClass::IncompressibleCertified { ham });
        }
        return Err(Error::Search(format!(
            "sweep disagrees with the incompressibility classification: {r:?}"
        )));
    }

    // Compressible: find h of prime order p such that some quotient
    // Hamilton cycle has voltage generating <h>.
    let mut candidates: Vec<Word> = Vec::new();
    for s in &gens {
        let ord = group.element_order(s);
        if !is_prime(ord) {
            let p = smallest_prime_factor(ord);
            candidates.push(group.scale(ord / p, s));
        }
    }
    for x in group.iter_elements() {
        let ord = group.element_order(&x);
        if ord > 1 && is_prime(ord) && !gens.contains(&x) && !gens.contains(&group.neg(&x)) {
            candidates.push(x);
        }
    }
    for h in candidates {
        let p = group.element_order(&h);
        if let Ok(labels) = quotient_label_cycle(&group, &gens, &h) {
            let v = voltage(&group, &labels);
            if group.element_order(&v) == p {
                // Nonzero voltage in a prime-order kernel generates it.
                let witness = lift_labels(&group, &gens, &labels)?;
                return Ok(OddOrderClass::CompressionAtLeast { p, witness });
            }
            // Retry: look for another cycle by rotating generator priority.
            if let Ok(w) = retry_nonzero_voltage(&group, &gens, &h) {
                return Ok(OddOrderClass::CompressionAtLeast { p, witness: w });
            }
        }
    }
    Err(Error::Search(
        "no nonzero-voltage quotient cycle found within budget".into(),
    ))
}

/// Presents the group with prime-power cyclic factors and maps the
/// generators accordingly.
fn to_primary(group: &AbelianGroup, gens: &[Word]) -> Result<(AbelianGroup, Vec<Word>)> {
    let mut pairs: Vec<(u64, usize)> = Vec::new(); // (primary order, source factor)
    for (i, &m) in group.factor_orders().iter().enumerate() {
        let mut rem = m;
        let mut p = 2u64;
        while p * p <= rem {
            if rem % p == 0 {
                let mut q = 1;
                while rem % p == 0 {
                    q *= p;
                    rem /= p;
                }
                pairs.push((q, i));
            }
            p += 1;
        }
        if rem > 1 {
            pairs.push((rem, i));
        }
    }
    let primary = AbelianGroup::new(pairs.iter().map(|&(q, _)| q).collect())?;
    let map = |w: &Word| -> Word {
        Word(
            pairs
                .iter()
                .map(|&(q, i)| (w[i] as u64 % q) as crate::word::Sym)
                .collect(),
        )
    };
    Ok((primary, gens.iter().map(map).collect()))
}

fn retry_nonzero_voltage(
    group: &AbelianGroup,
    gens: &[Word],
    h: &Word,
) -> Result<HamCycle> {
    let p = group.element_order(h);
    for rot in 1..gens.len().max(1) {
        let mut order = gens.to_vec();
        let len = order.len();
        order.rotate_left(rot % len);
        if let Ok(labels) = quotient_label_cycle(group, &order, h) {
            let v = voltage(group, &labels);
            if group.element_order(&v) == p {
                return lift_labels(group, gens, &labels);
            }
        }
    }
    Err(Error::Search("no nonzero-voltage cycle found".into()))
}

fn smallest_prime_factor(n: u64) -> u64 {
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return d;
        }
        d += 1;
    }
    n
}

/// Hamilton path search inside the subgroup graph spanned by `span`.
fn ham_path_in_subgroup(
    group: &AbelianGroup,
    gens: &[Word],
    span: &[u64],
    from: &Word,
    to: &Word,
) -> Result<Vec<Word>> {
    let lookup = |w: &Word| span.binary_search(&group.index(w)).ok();
    let n = span.len();
    let neighbors = |w: &Word| -> Vec<Word> {
        let mut out = Vec::new();
        for s in gens {
            for next in [group.add(w, s), group.sub(w, s)] {
                if lookup(&next).is_some() {
                    out.push(next);
                }
            }
        }
        out.sort();
        out.dedup();
        out
    };
    search::ham_path(
        n,
        |w| lookup(w).unwrap() as u64,
        neighbors,
        from,
        to,
        50_000_000,
    )
    .ok_or_else(|| Error::Search("no Hamilton path in subgroup".into()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn group_basics() {
        let g = AbelianGroup::parse("Z3xZ5").unwrap();
        assert_eq!(g.order(), 15);
        assert_eq!(g.primary_orders(), vec![3, 5]);
        assert!(g.is_squarefree());
        let z15 = AbelianGroup::parse("Z15").unwrap();
        assert_eq!(z15.primary_orders(), vec![3, 5]);
        let z9 = AbelianGroup::parse("Z9").unwrap();
        assert!(!z9.is_squarefree());
        let a = g.element(7);
        assert_eq!(g.index(&a), 7);
    }

    #[test]
    fn canonical_generating_sets() {
        let g = AbelianGroup::parse("Z3xZ5").unwrap();
        let canon = vec![Word::new(vec![1, 0]), Word::new(vec![0, 1])];
        assert!(is_canonical_generating_set(&g, &canon));
        let skew = vec![Word::new(vec![1, 1])];
        assert!(!is_canonical_generating_set(&g, &skew));
        // Z15 with {1} is the same group but the generator covers both
        // primary components.
        let z15 = AbelianGroup::parse("Z15").unwrap();
        assert!(!is_canonical_generating_set(&z15, &[Word::new(vec![1])]));
    }

    #[test]
    fn minimization() {
        let g = AbelianGroup::parse("Z6").unwrap();
        let min = minimize_generating_set(&g, &[Word::new(vec![1]), Word::new(vec![2])]);
        assert_eq!(min.len(), 1);
        let g2 = AbelianGroup::parse("Z2xZ4").unwrap();
        let min2 = minimize_generating_set(
            &g2,
            &[Word::new(vec![1, 0]), Word::new(vec![0, 1]), Word::new(vec![1, 1])],
        );
        assert_eq!(min2.len(), 2);
        assert!(g2.generates(&min2));
    }
}
