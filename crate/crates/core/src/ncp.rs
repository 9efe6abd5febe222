//! Simple elements of the dual structure, realized as noncrossing partitions.
//!
//! A simple element `b_T1 ⋯ b_Tk` is stored through its induced permutation,
//! whose cycles are the blocks, each traversed downwards (`i_m ↦ i_{m-1}` and
//! the minimum back to the maximum). The prefix order on simples is block
//! refinement; products, quotients and complements are permutation
//! compositions whose cycles are read back as blocks.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::word::{BandGenerator, BraidWord, Permutation};

const NONE: u8 = u8::MAX;

/// A noncrossing partition of `{1..n}`, identified with a simple element.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "SimpleJson", into = "SimpleJson")]
pub struct NoncrossingPartition {
    /// 0-based images of the induced permutation.
    perm: Box<[u8]>,
    /// 0-based minimum of the block containing each element.
    block: Box<[u8]>,
}

pub type Simple = NoncrossingPartition;

impl NoncrossingPartition {
    /// Builds the partition whose blocks are the classes of `labels`.
    /// Labels are arbitrary values below `n`, equal exactly on a block.
    fn from_labels(labels: &[u8]) -> Self {
        let n = labels.len();
        let mut first = [NONE; 256];
        let mut last = [NONE; 256];
        let mut perm = vec![0u8; n].into_boxed_slice();
        let mut block = vec![0u8; n].into_boxed_slice();
        for (i, &l) in labels.iter().enumerate() {
            let l = l as usize;
            let i8_ = i as u8;
            if first[l] == NONE {
                first[l] = i8_;
            } else {
                perm[i] = last[l];
            }
            block[i] = first[l];
            last[l] = i8_;
        }
        for l in 0..256 {
            if first[l] != NONE {
                perm[first[l] as usize] = last[l];
            }
        }
        NoncrossingPartition { perm, block }
    }

    /// Reads the cycles of a permutation (0-based images) as blocks.
    fn from_cycles(images: &[u8]) -> Self {
        let n = images.len();
        let mut labels = vec![NONE; n];
        for start in 0..n {
            if labels[start] != NONE {
                continue;
            }
            let mut i = start;
            while labels[i] == NONE {
                labels[i] = start as u8;
                i = images[i] as usize;
            }
        }
        Self::from_labels(&labels)
    }

    /// Like [`from_cycles`](Self::from_cycles), asserting (in debug builds)
    /// that the permutation already is the descending-cycle permutation of a
    /// noncrossing partition, i.e. that it comes from a simple element.
    fn from_simple_perm(images: &[u8]) -> Self {
        let s = Self::from_cycles(images);
        debug_assert!(
            &*s.perm == images,
            "permutation is not that of a simple element"
        );
        debug_assert!(
            s.find_crossing().is_none(),
            "reconstructed partition crosses"
        );
        s
    }

    pub fn identity(n: usize) -> Self {
        let id: Vec<u8> = (0..n as u8).collect();
        NoncrossingPartition {
            perm: id.clone().into_boxed_slice(),
            block: id.into_boxed_slice(),
        }
    }

    /// The Garside element `δ = [n, …, 1]`.
    pub fn delta(n: usize) -> Self {
        Self::from_labels(&vec![0u8; n])
    }

    /// The simple element of the band generator `a(i, j)`.
    pub fn generator(n: usize, i: usize, j: usize) -> Result<Self> {
        Self::from_blocks(&[vec![i, j]], n)
    }

    /// Subsimple `b_T` for a single block `T` (1-based, any order).
    pub fn subsimple(n: usize, block: &[usize]) -> Result<Self> {
        Self::from_blocks(&[block.to_vec()], n)
    }

    /// Builds a simple element from 1-based blocks. Missing elements are
    /// taken as singletons only if `blocks` omits them entirely; overlaps,
    /// out-of-range entries and crossings are rejected.
    pub fn from_blocks(blocks: &[Vec<usize>], n: usize) -> Result<Self> {
        crate::check_strands(n)?;
        let mut labels = vec![NONE; n];
        for b in blocks {
            let Some(&rep) = b.first() else {
                return Err(Error::NotAPartition {
                    n,
                    msg: "empty block".into(),
                });
            };
            for &x in b {
                if x == 0 || x > n {
                    return Err(Error::IndexOutOfRange { index: x as i64, n });
                }
                if labels[x - 1] != NONE {
                    return Err(Error::NotAPartition {
                        n,
                        msg: format!("{x} appears twice"),
                    });
                }
                labels[x - 1] = (rep - 1) as u8;
            }
        }
        for (i, l) in labels.iter_mut().enumerate() {
            if *l == NONE {
                *l = i as u8;
            }
        }
        let s = Self::from_labels(&labels);
        if let Some((p, q)) = s.find_crossing() {
            return Err(Error::Crossing(
                s.block_text(p as usize),
                s.block_text(q as usize),
            ));
        }
        Ok(s)
    }

    /// Like [`from_blocks`](Self::from_blocks) but requires the blocks to
    /// cover `{1..n}` exactly.
    pub fn from_partition(blocks: &[Vec<usize>], n: usize) -> Result<Self> {
        let total: usize = blocks.iter().map(Vec::len).sum();
        if total != n {
            return Err(Error::NotAPartition {
                n,
                msg: format!("blocks cover {total} entries"),
            });
        }
        Self::from_blocks(blocks, n)
    }

    /// Reconstructs a simple element from its induced permutation. Fails if
    /// the permutation is not the descending-cycle permutation of a
    /// noncrossing partition.
    pub fn from_permutation(p: &Permutation) -> Result<Self> {
        let n = p.n();
        crate::check_strands(n)?;
        let images: Vec<u8> = p.images().iter().map(|&x| (x - 1) as u8).collect();
        let s = Self::from_cycles(&images);
        if *s.perm != *images {
            return Err(Error::InvalidParameters(
                "cycles are not descending through their blocks".into(),
            ));
        }
        if let Some((a, b)) = s.find_crossing() {
            return Err(Error::Crossing(
                s.block_text(a as usize),
                s.block_text(b as usize),
            ));
        }
        Ok(s)
    }

    pub fn n(&self) -> usize {
        self.perm.len()
    }

    pub fn is_identity(&self) -> bool {
        self.perm.iter().enumerate().all(|(i, &x)| i == x as usize)
    }

    pub fn is_delta(&self) -> bool {
        self.block.iter().all(|&b| b == 0)
    }

    pub fn permutation(&self) -> Permutation {
        let images: Vec<usize> = self.perm.iter().map(|&x| x as usize + 1).collect();
        Permutation::from_images(&images).expect("stored permutation is a bijection")
    }

    /// 1-based image of strand `i`.
    pub fn image(&self, i: usize) -> usize {
        self.perm[i - 1] as usize + 1
    }

    /// Number of band generators in any positive word for this element
    /// (`n` minus the number of blocks).
    pub fn exponent_sum(&self) -> i64 {
        self.block
            .iter()
            .enumerate()
            .filter(|(i, &b)| *i != b as usize)
            .count() as i64
    }

    /// Blocks (1-based, including singletons) in canonical order: by
    /// ascending minimum, each listed in decreasing order.
    pub fn blocks(&self) -> Vec<Vec<usize>> {
        let n = self.n();
        (0..n)
            .filter(|&i| self.block[i] as usize == i)
            .map(|m| self.block_members_desc(m))
            .collect()
    }

    /// Members of the block with minimum `min` (0-based), as 1-based
    /// indices in decreasing order.
    fn block_members_desc(&self, min: usize) -> Vec<usize> {
        let mut out = vec![min + 1];
        let mut i = self.perm[min] as usize;
        while i != min {
            out.push(i + 1);
            i = self.perm[i] as usize;
        }
        // walk is min, max, next-lower, …: rotate so the list descends
        out.rotate_left(1);
        out
    }

    /// Non-singleton blocks in canonical order.
    pub fn nontrivial_blocks(&self) -> Vec<Vec<usize>> {
        self.blocks().into_iter().filter(|b| b.len() > 1).collect()
    }

    fn block_text(&self, min: usize) -> String {
        let items: Vec<String> = self
            .block_members_desc(min)
            .iter()
            .map(|x| x.to_string())
            .collect();
        format!("[{}]", items.join(","))
    }

    /// Finds two crossing blocks, returned by their 0-based minima.
    fn find_crossing(&self) -> Option<(u8, u8)> {
        // Arcs join consecutive members of a block: (perm[x], x) with perm[x] < x.
        let arcs: Vec<(u8, u8)> = (0..self.n())
            .filter(|&x| (self.perm[x] as usize) < x)
            .map(|x| (self.perm[x], x as u8))
            .collect();
        for &(a, b) in &arcs {
            for &(c, d) in &arcs {
                if a < c && c < b && b < d && self.block[a as usize] != self.block[c as usize] {
                    return Some((self.block[a as usize], self.block[c as usize]));
                }
            }
        }
        None
    }

    /// Canonical positive word: the subsimples of the non-singleton blocks
    /// in canonical block order.
    pub fn to_word(&self) -> BraidWord {
        let mut letters = Vec::new();
        for b in self.nontrivial_blocks() {
            for w in b.windows(2) {
                letters.push(BandGenerator::positive(w[0], w[1]).expect("distinct indices"));
            }
        }
        BraidWord::new(self.n(), letters).expect("indices in range")
    }

    fn check_same(&self, other: &Self) {
        assert_eq!(
            self.n(),
            other.n(),
            "simple elements on different strand counts"
        );
    }

    /// `self ≼ other`: every block of `self` lies inside a block of `other`.
    pub fn refines(&self, other: &Self) -> bool {
        self.check_same(other);
        (0..self.n()).all(|i| other.block[i] == other.block[self.perm[i] as usize])
    }

    /// Greatest common prefix: the common refinement.
    pub fn meet(&self, other: &Self) -> Self {
        self.check_same(other);
        let n = self.n();
        let mut labels = vec![NONE; n];
        let mut rep = [NONE; 256];
        let mut stamp = [NONE; 256];
        for m in 0..n {
            if self.block[m] as usize != m {
                continue;
            }
            // walk the block of `self` with minimum m
            let mut i = m;
            loop {
                let lb = other.block[i] as usize;
                if stamp[lb] != m as u8 {
                    stamp[lb] = m as u8;
                    rep[lb] = i as u8;
                }
                labels[i] = rep[lb];
                i = self.perm[i] as usize;
                if i == m {
                    break;
                }
            }
        }
        Self::from_labels(&labels)
    }

    /// Least common multiple in the prefix order: the partition-lattice join
    /// followed by merging crossing blocks until none cross.
    pub fn join(&self, other: &Self) -> Self {
        self.check_same(other);
        let n = self.n();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        fn union(parent: &mut [usize], a: usize, b: usize) {
            let (ra, rb) = (find(parent, a), find(parent, b));
            if ra != rb {
                parent[ra.max(rb)] = ra.min(rb);
            }
        }
        for i in 0..n {
            union(&mut parent, i, self.block[i] as usize);
            union(&mut parent, i, other.block[i] as usize);
        }
        loop {
            let labels: Vec<u8> = (0..n).map(|i| find(&mut parent, i) as u8).collect();
            let s = Self::from_labels(&labels);
            match s.find_crossing() {
                None => return s,
                Some((p, q)) => union(&mut parent, p as usize, q as usize),
            }
        }
    }

    /// Group product `self · other` when it is simple, i.e. when
    /// `other ≼ ∂(self)`.
    pub fn product(&self, other: &Self) -> Option<Self> {
        self.check_same(other);
        if other.refines(&self.right_complement()) {
            Some(self.product_unchecked(other))
        } else {
            None
        }
    }

    /// Product of simples known to be simple.
    pub(crate) fn product_unchecked(&self, other: &Self) -> Self {
        let images: Vec<u8> = other.perm.iter().map(|&x| self.perm[x as usize]).collect();
        Self::from_simple_perm(&images)
    }

    /// `self⁻¹ · other`, for `self ≼ other`.
    pub fn left_quotient(&self, other: &Self) -> Option<Self> {
        self.check_same(other);
        if self.refines(other) {
            Some(self.left_quotient_unchecked(other))
        } else {
            None
        }
    }

    pub(crate) fn left_quotient_unchecked(&self, other: &Self) -> Self {
        let inv = self.inverse_images();
        let images: Vec<u8> = other.perm.iter().map(|&x| inv[x as usize]).collect();
        Self::from_simple_perm(&images)
    }

    fn inverse_images(&self) -> Vec<u8> {
        let mut inv = vec![0u8; self.n()];
        for (i, &x) in self.perm.iter().enumerate() {
            inv[x as usize] = i as u8;
        }
        inv
    }

    /// `∂(a)`: the simple with `a · ∂(a) = δ`; its permutation is `π_a⁻¹ ∘ π_δ`.
    pub fn right_complement(&self) -> Self {
        let n = self.n();
        let inv = self.inverse_images();
        let images: Vec<u8> = (0..n).map(|i| inv[(i + n - 1) % n]).collect();
        Self::from_simple_perm(&images)
    }

    /// The simple `y` with `y · a = δ`; its permutation is `π_δ ∘ π_a⁻¹`.
    pub fn left_complement(&self) -> Self {
        let n = self.n();
        let inv = self.inverse_images();
        let images: Vec<u8> = inv
            .iter()
            .map(|&x| ((x as usize + n - 1) % n) as u8)
            .collect();
        Self::from_simple_perm(&images)
    }

    /// `τ^k`: shifts every strand index by `+k` modulo `n`.
    pub fn tau(&self, k: i64) -> Self {
        let n = self.n();
        if n == 0 {
            return self.clone();
        }
        let shift = k.rem_euclid(n as i64) as usize;
        if shift == 0 {
            return self.clone();
        }
        let mut labels = vec![0u8; n];
        for i in 0..n {
            labels[(i + shift) % n] = self.block[i];
        }
        Self::from_labels(&labels)
    }

    /// Embeds into `B_m` (`m >= n`) by relabeling strand `i` as `i + offset`;
    /// all other strands are singletons.
    pub fn embed(&self, m: usize, offset: usize) -> Result<Self> {
        if offset + self.n() > m {
            return Err(Error::InvalidParameters(format!(
                "cannot embed B_{} at offset {offset} into B_{m}",
                self.n()
            )));
        }
        let blocks: Vec<Vec<usize>> = self
            .nontrivial_blocks()
            .into_iter()
            .map(|b| b.into_iter().map(|x| x + offset).collect())
            .collect();
        Self::from_blocks(&blocks, m)
    }

    /// Whether every non-singleton block lies inside `support` (1-based).
    pub fn is_supported_on(&self, support: &[usize]) -> bool {
        let mut inside = vec![false; self.n()];
        for &x in support {
            if (1..=self.n()).contains(&x) {
                inside[x - 1] = true;
            }
        }
        (0..self.n())
            .all(|i| self.block[i] as usize == i && self.perm[i] as usize == i || inside[i])
    }

    /// Labels in restricted-growth form; defines the canonical order.
    pub fn block_labels(&self) -> &[u8] {
        &self.block
    }
}

impl Ord for NoncrossingPartition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.perm
            .len()
            .cmp(&other.perm.len())
            .then_with(|| self.block.cmp(&other.block))
    }
}

impl PartialOrd for NoncrossingPartition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for NoncrossingPartition {
    /// `[12,10,1][9,8,2][7,6,4,3]`; the identity prints as `1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut any = false;
        for m in 0..self.n() {
            if self.block[m] as usize == m && self.perm[m] as usize != m {
                write!(f, "{}", self.block_text(m))?;
                any = true;
            }
        }
        if !any {
            write!(f, "1")?;
        }
        Ok(())
    }
}

impl fmt::Debug for NoncrossingPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self} (n={})", self.n())
    }
}

/// JSON form `{"n": int, "blocks": [[desc ints], …]}` with singletons.
#[derive(Serialize, Deserialize)]
pub struct SimpleJson {
    pub n: usize,
    pub blocks: Vec<Vec<usize>>,
}

impl From<NoncrossingPartition> for SimpleJson {
    fn from(s: NoncrossingPartition) -> Self {
        SimpleJson {
            n: s.n(),
            blocks: s.blocks(),
        }
    }
}

impl TryFrom<SimpleJson> for NoncrossingPartition {
    type Error = Error;

    fn try_from(j: SimpleJson) -> Result<Self> {
        Self::from_partition(&j.blocks, j.n)
    }
}

/// Whether the product of two positive band generators
/// `a(p,q) · a(i,j)` (with `q < p`, `j < i`) is simple: the arcs
/// `(q+λ, p+λ)` and `(j, i)` nest or are disjoint.
pub fn pair_is_simple(first: &BandGenerator, second: &BandGenerator) -> bool {
    let (p, q) = (first.upper(), first.lower());
    let (i, j) = (second.upper(), second.lower());
    (p < j) || (i <= q) || (q < j && i <= p) || (j <= q && p < i)
}

/// Default largest `n` accepted by [`enumerate_simples`].
pub const DEFAULT_SIMPLE_BOUND: usize = 14;

/// All simple elements of `B_n` in canonical order (`Catalan(n)` of them).
pub fn enumerate_simples(n: usize) -> Result<Vec<NoncrossingPartition>> {
    enumerate_simples_bounded(n, DEFAULT_SIMPLE_BOUND)
}

pub fn enumerate_simples_bounded(n: usize, bound: usize) -> Result<Vec<NoncrossingPartition>> {
    if n > bound {
        return Err(Error::BoundExceeded {
            what: "strand count for simple enumeration",
            value: n as u128,
            bound: bound as u128,
        });
    }
    crate::check_strands(n)?;
    Ok(enumerate_below(&NoncrossingPartition::delta(n)))
}

/// All simples `x ≼ target`, in canonical order. The interval is the product
/// of the noncrossing lattices of the blocks of `target`.
pub fn enumerate_below(target: &NoncrossingPartition) -> Vec<NoncrossingPartition> {
    let n = target.n();
    let mut out = Vec::new();
    let mut labels = vec![0u8; n];
    // one stack of still-open blocks per block of `target`, keyed by its minimum
    let mut stacks: Vec<Vec<u8>> = vec![Vec::new(); n];
    below_rec(target, 0, &mut labels, &mut stacks, &mut out);
    out
}

fn below_rec(
    target: &NoncrossingPartition,
    i: usize,
    labels: &mut Vec<u8>,
    stacks: &mut Vec<Vec<u8>>,
    out: &mut Vec<NoncrossingPartition>,
) {
    if i == target.n() {
        out.push(NoncrossingPartition::from_labels(labels));
        return;
    }
    let t = target.block[i] as usize;
    // joining an open block closes every block opened after it
    for depth in 0..stacks[t].len() {
        let saved = stacks[t].split_off(depth + 1);
        labels[i] = stacks[t][depth];
        below_rec(target, i + 1, labels, stacks, out);
        stacks[t].extend(saved);
    }
    labels[i] = i as u8;
    stacks[t].push(i as u8);
    below_rec(target, i + 1, labels, stacks, out);
    stacks[t].pop();
}

/// Binomial coefficient with overflow detection.
pub fn binomial(m: u128, k: u128) -> Result<u128> {
    if k > m {
        return Ok(0);
    }
    let k = k.min(m - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        // acc * (m - i) / (i + 1) is exact at every step
        acc = acc
            .checked_mul(m - i)
            .ok_or(Error::Overflow("binomial coefficient"))?
            / (i + 1);
    }
    Ok(acc)
}

pub fn catalan(n: u128) -> Result<u128> {
    Ok(binomial(2 * n, n)? / (n + 1))
}

/// Zeta polynomial of the noncrossing partition lattice of `{1..d}`:
/// the number of multichains `1 ≼ a_1 ≼ ⋯ ≼ a_{r-1} ≼ δ_d`, equal to
/// `C(dr, d-1) / d`.
pub fn zeta(d: u64, r: u64) -> Result<u128> {
    if d == 0 || r == 0 {
        return Err(Error::InvalidParameters(format!(
            "zeta needs d, r >= 1 (got d={d}, r={r})"
        )));
    }
    let dr = (d as u128)
        .checked_mul(r as u128)
        .ok_or(Error::Overflow("zeta"))?;
    let c = binomial(dr, d as u128 - 1)?;
    if c % d as u128 != 0 {
        return Err(Error::Internal(format!(
            "C({dr},{}) not divisible by {d}",
            d - 1
        )));
    }
    Ok(c / d as u128)
}

/// All `r`-compositions `(c_0, …, c_{r-1})` of `target`: tuples of simples
/// with `c_0 ⋯ c_{r-1} = target`, obtained from the multichains
/// `1 ≼ a_1 ≼ ⋯ ≼ a_{r-1} ≼ target` via `c_k = a_k⁻¹ a_{k+1}`.
pub fn enumerate_compositions(
    target: &NoncrossingPartition,
    r: usize,
) -> Result<Vec<Vec<NoncrossingPartition>>> {
    if r == 0 {
        return Err(Error::InvalidParameters("compositions need r >= 1".into()));
    }
    let n = target.n();
    let mut out = Vec::new();
    // chain[k] = a_k with a_0 = 1 and a_r = target, filled from the top down
    let mut chain = vec![NoncrossingPartition::identity(n); r + 1];
    chain[r] = target.clone();
    chains_rec(&mut chain, r, &mut out);
    Ok(out)
}

fn chains_rec(
    chain: &mut Vec<NoncrossingPartition>,
    k: usize,
    out: &mut Vec<Vec<NoncrossingPartition>>,
) {
    if k == 1 {
        let comp = chain
            .windows(2)
            .map(|w| w[0].left_quotient_unchecked(&w[1]))
            .collect();
        out.push(comp);
        return;
    }
    for a in enumerate_below(&chain[k]) {
        chain[k - 1] = a;
        chains_rec(chain, k - 1, out);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(n: usize, blocks: &[&[usize]]) -> NoncrossingPartition {
        let b: Vec<Vec<usize>> = blocks.iter().map(|b| b.to_vec()).collect();
        NoncrossingPartition::from_blocks(&b, n).unwrap()
    }

    #[test]
    fn figure_partition_is_valid() {
        let a = NoncrossingPartition::from_partition(
            &[
                vec![12, 10, 1],
                vec![9, 8, 2],
                vec![7, 6, 4, 3],
                vec![11],
                vec![5],
            ],
            12,
        )
        .unwrap();
        assert_eq!(a.to_string(), "[12,10,1][9,8,2][7,6,4,3]");
    }

    #[test]
    fn crossing_and_bad_partitions_rejected() {
        assert!(matches!(
            NoncrossingPartition::from_partition(&[vec![1, 3], vec![2, 4]], 4),
            Err(Error::Crossing(_, _))
        ));
        assert!(matches!(
            NoncrossingPartition::from_partition(&[vec![1, 2], vec![2, 3]], 3),
            Err(Error::NotAPartition { .. })
        ));
        assert!(matches!(
            NoncrossingPartition::from_partition(&[vec![1, 2]], 3),
            Err(Error::NotAPartition { .. })
        ));
    }

    #[test]
    fn singletons_are_identity() {
        let blocks: Vec<Vec<usize>> = (1..=5).map(|i| vec![i]).collect();
        let a = NoncrossingPartition::from_partition(&blocks, 5).unwrap();
        assert!(a.is_identity());
        assert_eq!(a, NoncrossingPartition::identity(5));
        assert_eq!(a.to_string(), "1");
    }

    #[test]
    fn pair_simplicity_examples() {
        let g = |i, j| BandGenerator::positive(i, j).unwrap();
        assert!(pair_is_simple(&g(2, 1), &g(4, 3)));
        assert!(!pair_is_simple(&g(3, 1), &g(4, 2)));
        assert!(pair_is_simple(&g(4, 1), &g(4, 2)));
    }

    #[test]
    fn refinement_examples() {
        let d = NoncrossingPartition::delta(5);
        for a in enumerate_simples(5).unwrap() {
            assert!(NoncrossingPartition::identity(5).refines(&a));
            assert!(a.refines(&d));
        }
        assert!(!s(3, &[&[2, 1]]).refines(&s(3, &[&[3, 2]])));
    }

    #[test]
    fn meet_and_join_examples() {
        let x = s(4, &[&[4, 2]]);
        assert_eq!(x.meet(&NoncrossingPartition::delta(4)), x);
        assert!(s(3, &[&[3, 2]]).meet(&s(3, &[&[3, 1]])).is_identity());
        assert_eq!(
            s(3, &[&[2, 1]]).join(&s(3, &[&[3, 2]])),
            NoncrossingPartition::delta(3)
        );
        assert_eq!(x.join(&NoncrossingPartition::identity(4)), x);
        assert!(s(4, &[&[3, 1]]).join(&s(4, &[&[4, 2]])).is_delta());
    }

    #[test]
    fn complement_examples() {
        let id = NoncrossingPartition::identity(3);
        let d = NoncrossingPartition::delta(3);
        assert_eq!(id.right_complement(), d);
        assert_eq!(d.right_complement(), id);
        assert_eq!(s(3, &[&[2, 1]]).right_complement(), s(3, &[&[3, 1]]));
        assert_eq!(s(3, &[&[2, 1]]).left_complement(), s(3, &[&[3, 2]]));
        assert_eq!(d.left_complement(), id);
    }

    #[test]
    fn tau_examples() {
        assert_eq!(s(4, &[&[2, 1]]).tau(1), s(4, &[&[3, 2]]));
        assert_eq!(s(13, &[&[10, 8]]).tau(-6), s(13, &[&[4, 2]]));
        assert_eq!(s(13, &[&[4, 1]]).tau(-3), s(13, &[&[11, 1]]));
        assert_eq!(s(13, &[&[4, 3, 2, 1]]).tau(-3), s(13, &[&[13, 12, 11, 1]]));
    }

    #[test]
    fn product_examples() {
        assert_eq!(
            s(13, &[&[3, 2]]).product(&s(13, &[&[4, 2]])),
            Some(s(13, &[&[4, 3, 2]]))
        );
        assert_eq!(s(2, &[&[2, 1]]).product(&s(2, &[&[2, 1]])), None);
        let a = s(6, &[&[5, 3], &[2, 1]]);
        assert_eq!(
            a.product(&a.right_complement()),
            Some(NoncrossingPartition::delta(6))
        );
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(enumerate_simples(1).unwrap().len(), 1);
        let three: Vec<String> = enumerate_simples(3)
            .unwrap()
            .iter()
            .map(|x| x.to_string())
            .collect();
        assert_eq!(three.len(), 5);
        for want in ["1", "[2,1]", "[3,2]", "[3,1]", "[3,2,1]"] {
            assert!(three.contains(&want.to_string()), "{want}");
        }
        assert_eq!(enumerate_simples(4).unwrap().len(), 14);
        assert!(matches!(
            enumerate_simples(15),
            Err(Error::BoundExceeded { .. })
        ));
        let all = enumerate_simples(6).unwrap();
        assert!(all.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn zeta_values() {
        for r in 1..10 {
            assert_eq!(zeta(1, r).unwrap(), 1);
        }
        assert_eq!(zeta(3, 4).unwrap(), 22);
        assert_eq!(binomial(12, 2).unwrap(), 66);
        assert!(zeta(0, 3).is_err());
    }

    #[test]
    fn composition_examples() {
        let id = NoncrossingPartition::identity(4);
        assert_eq!(
            enumerate_compositions(&id, 3).unwrap(),
            vec![vec![id.clone(); 3]]
        );
        let d3 = NoncrossingPartition::delta(3);
        let two = enumerate_compositions(&d3, 2).unwrap();
        assert_eq!(two.len(), 5);
        for c in &two {
            assert_eq!(c[1], c[0].right_complement());
        }
        assert_eq!(enumerate_compositions(&d3, 4).unwrap().len(), 22);
    }

    #[test]
    fn support_check() {
        let a = s(13, &[&[10, 8]]);
        assert!(a.is_supported_on(&[8, 9, 10]));
        assert!(!a.is_supported_on(&[8, 9]));
        assert!(NoncrossingPartition::identity(5).is_supported_on(&[]));
    }

    #[test]
    fn json_round_trip() {
        let a = s(6, &[&[5, 3], &[2, 1]]);
        let text = serde_json::to_string(&a).unwrap();
        assert_eq!(text, r#"{"n":6,"blocks":[[2,1],[5,3],[4],[6]]}"#);
        let back: NoncrossingPartition = serde_json::from_str(&text).unwrap();
        assert_eq!(back, a);
        assert!(
            serde_json::from_str::<NoncrossingPartition>(r#"{"n":4,"blocks":[[3,1],[4,2]]}"#)
                .is_err()
        );
    }
}
