//! Fixed-length words over small integer alphabets.
//!
//! A `Word` encodes a bitstring, an (n,k)-combination, a permutation in
//! one-line notation, or an element of an abelian group as a residue tuple.
//! The interpretation (and the per-position alphabet bounds) comes from the
//! graph family that owns the vertex, not from the word itself.

pub type Sym = u32;

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word(pub Vec<Sym>);

impl Word {
    pub fn new(symbols: Vec<Sym>) -> Self {
        Word(symbols)
    }

    /// Parses a bitstring like "00101".
    pub fn from_bits(s: &str) -> Option<Self> {
        let mut v = Vec::with_capacity(s.len());
        for c in s.chars() {
            match c {
                '0' => v.push(0),
                '1' => v.push(1),
                _ => return None,
            }
        }
        Some(Word(v))
    }

    pub fn zeros(n: usize) -> Self {
        Word(vec![0; n])
    }

    /// The identity permutation 1..n in one-line notation.
    pub fn identity_perm(n: usize) -> Self {
        Word((1..=n as Sym).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Number of nonzero symbols (Hamming weight for bitstrings).
    pub fn weight(&self) -> usize {
        self.0.iter().filter(|&&s| s != 0).count()
    }

    /// Cyclic left rotation by `k` positions: x_1..x_n -> x_{k+1}..x_n x_1..x_k.
    pub fn rotated_left(&self, k: usize) -> Self {
        let n = self.0.len();
        if n == 0 {
            return self.clone();
        }
        let k = k % n;
        let mut v = Vec::with_capacity(n);
        v.extend_from_slice(&self.0[k..]);
        v.extend_from_slice(&self.0[..k]);
        Word(v)
    }

    pub fn reversed(&self) -> Self {
        let mut v = self.0.clone();
        v.reverse();
        Word(v)
    }

    /// Complements a 0/1 word.
    pub fn complemented(&self) -> Self {
        Word(self.0.iter().map(|&s| 1 - s).collect())
    }

    pub fn concat(&self, other: &Word) -> Self {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }

    /// Renders symbols as contiguous digits when every symbol fits a single
    /// digit, otherwise comma-separated.
    pub fn render(&self, compact: bool) -> String {
        if compact {
            self.0.iter().map(|s| s.to_string()).collect()
        } else {
            self.0
                .iter()
                .map(|s| s.to_string())
                .collect::<Vec<_>>()
                .join(",")
        }
    }
}

impl std::fmt::Debug for Word {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let compact = self.0.iter().all(|&s| s < 10);
        write!(f, "{}", self.render(compact))
    }
}

impl std::fmt::Display for Word {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{:?}", self)
    }
}

impl std::ops::Index<usize> for Word {
    type Output = Sym;
    fn index(&self, i: usize) -> &Sym {
        &self.0[i]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rotation_and_reversal() {
        let w = Word::from_bits("10010").unwrap();
        assert_eq!(w.rotated_left(1), Word::from_bits("00101").unwrap());
        assert_eq!(w.rotated_left(5), w);
        assert_eq!(w.reversed(), Word::from_bits("01001").unwrap());
        assert_eq!(w.complemented(), Word::from_bits("01101").unwrap());
        assert_eq!(w.weight(), 2);
    }

    #[test]
    fn rendering() {
        assert_eq!(Word::new(vec![1, 0, 1]).render(true), "101");
        assert_eq!(Word::new(vec![14, 2]).render(false), "14,2");
    }
}
