//! The graph families as implicit graphs: neighbor oracles plus bijective
//! vertex <-> index codecs.
//!
//! Families: hypercube Q_n (bitstrings, single-bit flips), Johnson graph
//! J_{n,k} (fixed-weight bitstrings, 0/1 transpositions), middle-levels
//! graph M_n for odd n (weights (n-1)/2 and (n+1)/2 in Q_n), permutahedron
//! Pi_n (permutations, adjacent transpositions), Pi_n^+ (adds the
//! first/last transposition), Cayley graphs of abelian groups, and explicit
//! graphs given by adjacency lists.

use crate::cayley::AbelianGroup;
use crate::word::{Sym, Word};
use crate::{Error, Result};

/// C(n, k) without overflow for the sizes used here (n <= 64).
pub fn binomial(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc as u64
}

pub fn factorial(n: usize) -> u64 {
    (1..=n as u64).product()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ImplicitGraph {
    Hypercube { n: usize },
    Johnson { n: usize, k: usize },
    /// Middle two levels of Q_n for odd n >= 3.
    MiddleLevels { n: usize },
    Permutahedron { n: usize },
    PermutahedronPlus { n: usize },
    AbelianCayley { group: AbelianGroup, gens: Vec<Word> },
    /// Adjacency lists with sorted neighbor indices.
    Explicit { adj: Vec<Vec<u32>> },
}

use ImplicitGraph::*;

impl ImplicitGraph {
    pub fn hypercube(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::Param("hypercube dimension must be >= 1".into()));
        }
        Ok(Hypercube { n })
    }

    pub fn johnson(n: usize, k: usize) -> Result<Self> {
        if n == 0 || k > n {
            return Err(Error::Param(format!("invalid Johnson parameters ({n},{k})")));
        }
        Ok(Johnson { n, k })
    }

    pub fn middle_levels(n: usize) -> Result<Self> {
        if n < 3 || n % 2 == 0 {
            return Err(Error::Param(format!(
                "middle-levels graph needs odd dimension >= 3, got {n}"
            )));
        }
        Ok(MiddleLevels { n })
    }

    pub fn permutahedron(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::Param("permutahedron order must be >= 1".into()));
        }
        Ok(Permutahedron { n })
    }

    pub fn permutahedron_plus(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::Param("permutahedron order must be >= 1".into()));
        }
        Ok(PermutahedronPlus { n })
    }

    pub fn abelian_cayley(group: AbelianGroup, gens: Vec<Word>) -> Result<Self> {
        for s in &gens {
            group.validate(s)?;
            if s.0.iter().all(|&c| c == 0) {
                return Err(Error::Param("generating set contains the identity".into()));
            }
        }
        if !group.generates(&gens) {
            return Err(Error::Param("given set does not generate the group".into()));
        }
        Ok(AbelianCayley { group, gens })
    }

    pub fn explicit(n: usize, edges: &[(u32, u32)]) -> Result<Self> {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            if u as usize >= n || v as usize >= n || u == v {
                return Err(Error::Param(format!("bad edge ({u},{v}) for {n} vertices")));
            }
            adj[u as usize].push(v);
            adj[v as usize].push(u);
        }
        for l in &mut adj {
            l.sort_unstable();
            l.dedup();
        }
        Ok(Explicit { adj })
    }

    /// Length of the vertex words of this family.
    pub fn word_len(&self) -> usize {
        match self {
            Hypercube { n } | Johnson { n, .. } | MiddleLevels { n } => *n,
            Permutahedron { n } | PermutahedronPlus { n } => *n,
            AbelianCayley { group, .. } => group.rank(),
            Explicit { .. } => 1,
        }
    }

    pub fn vertex_count(&self) -> u64 {
        match self {
            Hypercube { n } => 1u64 << n,
            Johnson { n, k } => binomial(*n, *k),
            MiddleLevels { n } => 2 * binomial(*n, n / 2),
            Permutahedron { n } | PermutahedronPlus { n } => factorial(*n),
            AbelianCayley { group, .. } => group.order(),
            Explicit { adj } => adj.len() as u64,
        }
    }

    /// Degree of every vertex, where the family is regular.
    pub fn regular_degree(&self) -> Option<usize> {
        match self {
            Hypercube { n } => Some(*n),
            Johnson { n, k } => Some(k * (n - k)),
            MiddleLevels { n } => Some(n / 2 + 1),
            Permutahedron { n } => Some(n.saturating_sub(1)),
            PermutahedronPlus { n } => Some(if *n >= 3 { *n } else { n.saturating_sub(1) }),
            AbelianCayley { .. } | Explicit { .. } => None,
        }
    }

    pub fn validate_vertex(&self, w: &Word) -> Result<()> {
        let fail = |msg: String| Err(Error::Vertex(msg));
        match self {
            Hypercube { n } => {
                if w.len() != *n || w.0.iter().any(|&s| s > 1) {
                    return fail(format!("{w} is not a bitstring of length {n}"));
                }
            }
            Johnson { n, k } => {
                if w.len() != *n || w.0.iter().any(|&s| s > 1) || w.weight() != *k {
                    return fail(format!("{w} is not an ({n},{k})-combination"));
                }
            }
            MiddleLevels { n } => {
                let m = n / 2;
                let wt = w.weight();
                if w.len() != *n || w.0.iter().any(|&s| s > 1) || (wt != m && wt != m + 1) {
                    return fail(format!("{w} is not a middle-levels vertex of M_{n}"));
                }
            }
            Permutahedron { n } | PermutahedronPlus { n } => {
                if w.len() != *n || !is_permutation(&w.0) {
                    return fail(format!("{w} is not a permutation of 1..{n}"));
                }
            }
            AbelianCayley { group, .. } => group.validate(w)?,
            Explicit { adj } => {
                if w.len() != 1 || w[0] as usize >= adj.len() {
                    return fail(format!("{w} is not a vertex index < {}", adj.len()));
                }
            }
        }
        Ok(())
    }

    /// All neighbors of `v`, sorted lexicographically, without duplicates.
    pub fn neighbors(&self, v: &Word) -> Result<Vec<Word>> {
        self.validate_vertex(v)?;
        let mut out = Vec::new();
        match self {
            Hypercube { n } => {
                for i in 0..*n {
                    let mut u = v.clone();
                    u.0[i] ^= 1;
                    out.push(u);
                }
            }
            Johnson { n, .. } => {
                for i in 0..*n {
                    if v[i] != 1 {
                        continue;
                    }
                    for j in 0..*n {
                        if v[j] == 0 {
                            let mut u = v.clone();
                            u.0.swap(i, j);
                            out.push(u);
                        }
                    }
                }
            }
            MiddleLevels { n } => {
                let m = n / 2;
                let up = v.weight() == m;
                for i in 0..*n {
                    if (v[i] == 0) == up {
                        let mut u = v.clone();
                        u.0[i] ^= 1;
                        out.push(u);
                    }
                }
            }
            Permutahedron { n } | PermutahedronPlus { n } => {
                for i in 0..n.saturating_sub(1) {
                    let mut u = v.clone();
                    u.0.swap(i, i + 1);
                    out.push(u);
                }
                if matches!(self, PermutahedronPlus { .. }) && *n >= 3 {
                    let mut u = v.clone();
                    u.0.swap(0, *n - 1);
                    out.push(u);
                }
            }
            AbelianCayley { group, gens } => {
                for s in gens {
                    out.push(group.add(v, s));
                    out.push(group.sub(v, s));
                }
            }
            Explicit { adj } => {
                for &u in &adj[v[0] as usize] {
                    out.push(Word(vec![u]));
                }
            }
        }
        out.sort();
        out.dedup();
        Ok(out)
    }

    /// Adjacency test; assumes both words are valid vertices.
    pub fn adjacent(&self, u: &Word, v: &Word) -> bool {
        match self {
            Hypercube { .. } | MiddleLevels { .. } => {
                diff_count(&u.0, &v.0, 2) == 1
            }
            Johnson { .. } => diff_count(&u.0, &v.0, 3) == 2,
            Permutahedron { .. } => adjacent_transposed(&u.0, &v.0),
            PermutahedronPlus { n } => {
                adjacent_transposed(&u.0, &v.0)
                    || (*n >= 3 && cyclic_end_transposed(&u.0, &v.0))
            }
            AbelianCayley { group, gens } => {
                let d = group.sub(u, v);
                gens.iter().any(|s| *s == d || group.neg(s) == d)
            }
            Explicit { adj } => adj[u[0] as usize].binary_search(&v[0]).is_ok(),
        }
    }

    /// Bijective rank of a vertex among all vertices of the family.
    pub fn encode(&self, w: &Word) -> u64 {
        match self {
            Hypercube { .. } => w.0.iter().fold(0u64, |a, &b| (a << 1) | b as u64),
            Johnson { n, k } => combination_rank(&w.0, *n, *k),
            MiddleLevels { n } => {
                let m = n / 2;
                if w.weight() == m {
                    combination_rank(&w.0, *n, m)
                } else {
                    binomial(*n, m) + combination_rank(&w.0, *n, m + 1)
                }
            }
            Permutahedron { n } | PermutahedronPlus { n } => permutation_rank(&w.0, *n),
            AbelianCayley { group, .. } => group.index(w),
            Explicit { .. } => w[0] as u64,
        }
    }

    pub fn decode(&self, idx: u64) -> Word {
        match self {
            Hypercube { n } => {
                Word((0..*n).map(|i| ((idx >> (n - 1 - i)) & 1) as Sym).collect())
            }
            Johnson { n, k } => combination_unrank(idx, *n, *k),
            MiddleLevels { n } => {
                let m = n / 2;
                let low = binomial(*n, m);
                if idx < low {
                    combination_unrank(idx, *n, m)
                } else {
                    combination_unrank(idx - low, *n, m + 1)
                }
            }
            Permutahedron { n } | PermutahedronPlus { n } => permutation_unrank(idx, *n),
            AbelianCayley { group, .. } => group.element(idx),
            Explicit { .. } => Word(vec![idx as Sym]),
        }
    }

    pub fn iter_vertices(&self) -> impl Iterator<Item = Word> + '_ {
        (0..self.vertex_count()).map(move |i| self.decode(i))
    }

    /// Whether vertex words render as contiguous digits.
    pub fn compact_words(&self) -> bool {
        match self {
            Hypercube { .. } | Johnson { .. } | MiddleLevels { .. } => true,
            Permutahedron { n } | PermutahedronPlus { n } => *n <= 9,
            AbelianCayley { group, .. } => group.factor_orders().iter().all(|&m| m <= 10),
            Explicit { .. } => false,
        }
    }

    pub fn render_vertex(&self, w: &Word) -> String {
        w.render(self.compact_words())
    }

    pub fn parse_vertex(&self, s: &str) -> Result<Word> {
        let s = s.trim();
        let w = if self.compact_words() && !s.contains(',') {
            let mut v = Vec::with_capacity(s.len());
            for c in s.chars() {
                v.push(c.to_digit(10).ok_or_else(|| {
                    Error::Format(format!("bad symbol {c:?} in vertex {s:?}"))
                })? as Sym);
            }
            Word(v)
        } else {
            let mut v = Vec::new();
            for part in s.split(',') {
                v.push(part.trim().parse::<Sym>().map_err(|_| {
                    Error::Format(format!("bad symbol {part:?} in vertex {s:?}"))
                })?);
            }
            Word(v)
        };
        self.validate_vertex(&w)?;
        Ok(w)
    }
}

fn is_permutation(v: &[Sym]) -> bool {
    let n = v.len();
    let mut seen = vec![false; n];
    for &s in v {
        if s < 1 || s as usize > n || seen[s as usize - 1] {
            return false;
        }
        seen[s as usize - 1] = true;
    }
    true
}

/// Counts differing positions, giving up once `cap` is reached.
fn diff_count(u: &[Sym], v: &[Sym], cap: usize) -> usize {
    let mut d = 0;
    for i in 0..u.len() {
        if u[i] != v[i] {
            d += 1;
            if d >= cap {
                return d;
            }
        }
    }
    d
}

fn adjacent_transposed(u: &[Sym], v: &[Sym]) -> bool {
    let n = u.len();
    let mut i = 0;
    while i < n && u[i] == v[i] {
        i += 1;
    }
    if i + 1 >= n || u[i] != v[i + 1] || u[i + 1] != v[i] {
        return false;
    }
    u[i + 2..] == v[i + 2..]
}

fn cyclic_end_transposed(u: &[Sym], v: &[Sym]) -> bool {
    let n = u.len();
    u[0] == v[n - 1] && u[n - 1] == v[0] && u[1..n - 1] == v[1..n - 1]
}

/// Lexicographic rank of a fixed-weight bitstring.
fn combination_rank(w: &[Sym], n: usize, k: usize) -> u64 {
    let mut rank = 0u64;
    let mut r = k;
    for (i, &b) in w.iter().enumerate() {
        if b == 1 {
            rank += binomial(n - 1 - i, r);
            r -= 1;
        }
    }
    rank
}

fn combination_unrank(mut rank: u64, n: usize, k: usize) -> Word {
    let mut w = vec![0 as Sym; n];
    let mut r = k;
    for i in 0..n {
        if r == 0 {
            break;
        }
        let c = binomial(n - 1 - i, r);
        if rank >= c {
            w[i] = 1;
            rank -= c;
            r -= 1;
        }
    }
    Word(w)
}

/// Lehmer-code rank of a permutation of 1..n.
fn permutation_rank(w: &[Sym], n: usize) -> u64 {
    let mut rank = 0u64;
    for i in 0..n {
        let smaller = w[i + 1..].iter().filter(|&&x| x < w[i]).count() as u64;
        rank += smaller * factorial(n - 1 - i);
    }
    rank
}

fn permutation_unrank(mut rank: u64, n: usize) -> Word {
    let mut avail: Vec<Sym> = (1..=n as Sym).collect();
    let mut w = Vec::with_capacity(n);
    for i in 0..n {
        let f = factorial(n - 1 - i);
        let j = (rank / f) as usize;
        rank %= f;
        w.push(avail.remove(j));
    }
    Word(w)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn wb(s: &str) -> Word {
        Word::from_bits(s).unwrap()
    }

    #[test]
    fn hypercube_neighbors() {
        let g = ImplicitGraph::hypercube(3).unwrap();
        let ns = g.neighbors(&wb("000")).unwrap();
        assert_eq!(ns, vec![wb("001"), wb("010"), wb("100")]);
        assert_eq!(g.regular_degree(), Some(3));
    }

    #[test]
    fn johnson_neighbors() {
        let g = ImplicitGraph::johnson(4, 2).unwrap();
        let ns = g.neighbors(&wb("1100")).unwrap();
        assert_eq!(ns, vec![wb("0101"), wb("0110"), wb("1001"), wb("1010")]);
    }

    #[test]
    fn permutahedron_neighbors() {
        let g = ImplicitGraph::permutahedron(3).unwrap();
        let ns = g.neighbors(&Word::new(vec![1, 2, 3])).unwrap();
        assert_eq!(ns, vec![Word::new(vec![1, 3, 2]), Word::new(vec![2, 1, 3])]);
    }

    #[test]
    fn permutahedron_plus_adds_cyclic_edge() {
        let g = ImplicitGraph::permutahedron_plus(3).unwrap();
        let ns = g.neighbors(&Word::new(vec![1, 2, 3])).unwrap();
        assert_eq!(ns.len(), 3);
        assert!(ns.contains(&Word::new(vec![3, 2, 1])));
    }

    #[test]
    fn invalid_vertices_rejected() {
        let g = ImplicitGraph::johnson(4, 2).unwrap();
        assert!(g.neighbors(&wb("1110")).is_err());
        let g = ImplicitGraph::permutahedron(3).unwrap();
        assert!(g.validate_vertex(&Word::new(vec![1, 1, 3])).is_err());
    }

    #[test]
    fn codecs_round_trip() {
        let graphs = vec![
            ImplicitGraph::hypercube(6).unwrap(),
            ImplicitGraph::johnson(7, 3).unwrap(),
            ImplicitGraph::middle_levels(5).unwrap(),
            ImplicitGraph::permutahedron(5).unwrap(),
        ];
        for g in graphs {
            for idx in 0..g.vertex_count() {
                let w = g.decode(idx);
                g.validate_vertex(&w).unwrap();
                assert_eq!(g.encode(&w), idx, "codec mismatch in {g:?}");
            }
        }
    }

    #[test]
    fn neighbor_symmetry_and_regularity() {
        let graphs = vec![
            ImplicitGraph::hypercube(4).unwrap(),
            ImplicitGraph::johnson(6, 2).unwrap(),
            ImplicitGraph::middle_levels(5).unwrap(),
            ImplicitGraph::permutahedron(4).unwrap(),
            ImplicitGraph::permutahedron_plus(4).unwrap(),
        ];
        for g in graphs {
            let deg = g.regular_degree().unwrap();
            for v in g.iter_vertices() {
                let ns = g.neighbors(&v).unwrap();
                assert_eq!(ns.len(), deg, "degree in {g:?} at {v}");
                for u in &ns {
                    assert!(g.adjacent(&v, u));
                    assert!(g.neighbors(u).unwrap().contains(&v), "asymmetric {g:?}");
                }
            }
        }
    }

    #[test]
    fn combination_rank_is_lexicographic() {
        let g = ImplicitGraph::johnson(4, 2).unwrap();
        let words: Vec<Word> = g.iter_vertices().collect();
        let mut sorted = words.clone();
        sorted.sort();
        assert_eq!(words, sorted);
        assert_eq!(g.encode(&wb("1100")), 5);
    }

    #[test]
    fn explicit_graph_from_edges() {
        let g = ImplicitGraph::explicit(3, &[(0, 1), (1, 2), (2, 0)]).unwrap();
        assert_eq!(g.vertex_count(), 3);
        assert!(g.adjacent(&Word(vec![0]), &Word(vec![2])));
        assert!(ImplicitGraph::explicit(2, &[(0, 5)]).is_err());
    }
}
