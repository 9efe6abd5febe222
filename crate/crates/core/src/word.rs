//! Band generators, braid words and induced permutations.

use std::fmt;

use crate::error::{Error, Result};

/// Sign of a letter in a braid word.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    Positive,
    Negative,
}

impl Sign {
    pub fn value(self) -> i64 {
        match self {
            Sign::Positive => 1,
            Sign::Negative => -1,
        }
    }

    pub fn flip(self) -> Sign {
        match self {
            Sign::Positive => Sign::Negative,
            Sign::Negative => Sign::Positive,
        }
    }
}

/// A signed band generator `a(upper, lower)^{±1}` with `1 <= lower < upper`.
///
/// `σ_i` is the band generator `a(i+1, i)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct BandGenerator {
    upper: usize,
    lower: usize,
    sign: Sign,
}

impl BandGenerator {
    /// Builds `a(i, j)` with the indices taken in either order, as `a_{ji} = a_{ij}`.
    pub fn new(i: usize, j: usize, sign: Sign) -> Result<Self> {
        if i == j {
            return Err(Error::EqualIndices(i));
        }
        let (upper, lower) = if i > j { (i, j) } else { (j, i) };
        if lower == 0 {
            return Err(Error::IndexOutOfRange { index: 0, n: upper });
        }
        Ok(BandGenerator { upper, lower, sign })
    }

    pub fn positive(i: usize, j: usize) -> Result<Self> {
        Self::new(i, j, Sign::Positive)
    }

    /// The classical generator `σ_i = a(i+1, i)`.
    pub fn sigma(i: usize, sign: Sign) -> Result<Self> {
        Self::new(i + 1, i, sign)
    }

    pub fn upper(&self) -> usize {
        self.upper
    }

    pub fn lower(&self) -> usize {
        self.lower
    }

    pub fn sign(&self) -> Sign {
        self.sign
    }

    pub fn inverse(&self) -> Self {
        BandGenerator {
            sign: self.sign.flip(),
            ..*self
        }
    }
}

impl fmt::Display for BandGenerator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "a({},{})", self.upper, self.lower)?;
        if self.sign == Sign::Negative {
            write!(f, "^-1")?;
        }
        Ok(())
    }
}

/// A word in the signed band generators of `B_n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BraidWord {
    n: usize,
    letters: Vec<BandGenerator>,
}

impl BraidWord {
    pub fn identity(n: usize) -> Result<Self> {
        crate::check_strands(n)?;
        Ok(BraidWord {
            n,
            letters: Vec::new(),
        })
    }

    pub fn new(n: usize, letters: Vec<BandGenerator>) -> Result<Self> {
        crate::check_strands(n)?;
        if let Some(g) = letters.iter().find(|g| g.upper > n) {
            return Err(Error::IndexOutOfRange {
                index: g.upper as i64,
                n,
            });
        }
        Ok(BraidWord { n, letters })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn letters(&self) -> &[BandGenerator] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// `δ = a(n,n-1) a(n-1,n-2) ⋯ a(2,1)`.
    pub fn delta(n: usize) -> Result<Self> {
        crate::check_strands(n)?;
        let letters = (2..=n)
            .rev()
            .map(|i| BandGenerator::positive(i, i - 1))
            .collect::<Result<_>>()?;
        Ok(BraidWord { n, letters })
    }

    /// `ε = δ σ_1`.
    pub fn epsilon(n: usize) -> Result<Self> {
        let mut w = Self::delta(n)?;
        if n >= 2 {
            w.letters.push(BandGenerator::positive(2, 1)?);
        }
        Ok(w)
    }

    /// `Δ = σ_1 (σ_2 σ_1) ⋯ (σ_{n-1} ⋯ σ_1)`.
    pub fn half_twist(n: usize) -> Result<Self> {
        crate::check_strands(n)?;
        let mut letters = Vec::new();
        for top in 1..n {
            for i in (1..=top).rev() {
                letters.push(BandGenerator::sigma(i, Sign::Positive)?);
            }
        }
        Ok(BraidWord { n, letters })
    }

    /// The subsimple `[i_k, …, i_1] = a(i_k,i_{k-1}) ⋯ a(i_2,i_1)`.
    pub fn subsimple(n: usize, indices: &[usize]) -> Result<Self> {
        crate::check_strands(n)?;
        for &i in indices {
            if i == 0 || i > n {
                return Err(Error::IndexOutOfRange { index: i as i64, n });
            }
        }
        if indices.windows(2).any(|w| w[0] <= w[1]) {
            let text = format!(
                "[{}]",
                indices
                    .iter()
                    .map(|i| i.to_string())
                    .collect::<Vec<_>>()
                    .join(",")
            );
            return Err(Error::NotDecreasing(text));
        }
        let letters = indices
            .windows(2)
            .map(|w| BandGenerator::positive(w[0], w[1]))
            .collect::<Result<_>>()?;
        Ok(BraidWord { n, letters })
    }

    pub fn inverse(&self) -> Self {
        BraidWord {
            n: self.n,
            letters: self.letters.iter().rev().map(|g| g.inverse()).collect(),
        }
    }

    /// Concatenation `self · other`.
    pub fn concat(&self, other: &BraidWord) -> Result<Self> {
        if self.n != other.n {
            return Err(Error::StrandMismatch(self.n, other.n));
        }
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(BraidWord { n: self.n, letters })
    }

    pub fn pow(&self, m: i64) -> Self {
        let base = if m < 0 { self.inverse() } else { self.clone() };
        let reps = m.unsigned_abs() as usize;
        let mut letters = Vec::with_capacity(base.letters.len() * reps);
        for _ in 0..reps {
            letters.extend_from_slice(&base.letters);
        }
        BraidWord { n: self.n, letters }
    }

    pub fn exponent_sum(&self) -> i64 {
        self.letters.iter().map(|g| g.sign.value()).sum()
    }

    /// Induced permutation: every letter `a(i,j)^{±1}` contributes the
    /// transposition `(i j)`, composed as `π_{xy} = π_x ∘ π_y`.
    pub fn permutation(&self) -> Permutation {
        let mut images: Vec<usize> = (0..self.n).collect();
        for g in &self.letters {
            images.swap(g.upper - 1, g.lower - 1);
        }
        Permutation { images }
    }
}

impl fmt::Display for BraidWord {
    /// Prints the letters in the ASCII grammar accepted by [`crate::parse_word`];
    /// the empty word prints as `()`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "()");
        }
        for (k, g) in self.letters.iter().enumerate() {
            if k > 0 {
                write!(f, " ")?;
            }
            write!(f, "{g}")?;
        }
        Ok(())
    }
}

/// Permutation of `{1..n}`, stored 0-based.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (0..n).collect(),
        }
    }

    /// From 1-based images `i ↦ images[i-1]`.
    pub fn from_images(images: &[usize]) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        let mut zero_based = Vec::with_capacity(n);
        for &x in images {
            if x == 0 || x > n || seen[x - 1] {
                return Err(Error::NotABijection);
            }
            seen[x - 1] = true;
            zero_based.push(x - 1);
        }
        Ok(Permutation { images: zero_based })
    }

    /// `π_δ : i ↦ i-1 (mod n)`.
    pub fn delta(n: usize) -> Self {
        Permutation {
            images: (0..n).map(|i| (i + n - 1) % n).collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.images.len()
    }

    /// 1-based image of `i`.
    pub fn apply(&self, i: usize) -> usize {
        self.images[i - 1] + 1
    }

    /// 1-based images in order.
    pub fn images(&self) -> Vec<usize> {
        self.images.iter().map(|x| x + 1).collect()
    }

    /// `self ∘ other`: `other` is applied first.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(
            self.n(),
            other.n(),
            "composing permutations of different degree"
        );
        Permutation {
            images: other.images.iter().map(|&x| self.images[x]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.n()];
        for (i, &x) in self.images.iter().enumerate() {
            images[x] = i;
        }
        Permutation { images }
    }

    pub fn pow(&self, m: i64) -> Permutation {
        let base = if m < 0 { self.inverse() } else { self.clone() };
        let mut out = Permutation::identity(self.n());
        for _ in 0..m.unsigned_abs() {
            out = out.compose(&base);
        }
        out
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i == x)
    }

    /// 1-based fixed points.
    pub fn fixed_points(&self) -> Vec<usize> {
        self.images
            .iter()
            .enumerate()
            .filter(|(i, x)| i == *x)
            .map(|(i, _)| i + 1)
            .collect()
    }

    /// Cycles as 1-based index lists, each starting at its smallest element.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n()];
        let mut out = Vec::new();
        for start in 0..self.n() {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                cycle.push(i + 1);
                i = self.images[i];
            }
            out.push(cycle);
        }
        out
    }
}

/// Exponent sum of a word.
pub fn exponent_sum(w: &BraidWord) -> i64 {
    w.exponent_sum()
}

/// Induced permutation of a word.
pub fn permutation_of(w: &BraidWord) -> Permutation {
    w.permutation()
}
