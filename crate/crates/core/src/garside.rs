//! Left normal forms `δ^r a_1 ⋯ a_ℓ` in the dual structure and the group
//! operations on them.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ncp::{NoncrossingPartition, SimpleJson};
use crate::word::{BandGenerator, BraidWord, Permutation, Sign};

/// Left normal form `δ^inf · a_1 ⋯ a_ℓ`, with every `a_i` strictly between
/// `1` and `δ` and every consecutive pair left-weighted.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "NormalFormJson", into = "NormalFormJson")]
pub struct NormalForm {
    n: usize,
    inf: i64,
    factors: Vec<NoncrossingPartition>,
}

impl NormalForm {
    pub fn identity(n: usize) -> Self {
        NormalForm {
            n,
            inf: 0,
            factors: Vec::new(),
        }
    }

    pub fn delta_power(n: usize, k: i64) -> Self {
        NormalForm {
            n,
            inf: k,
            factors: Vec::new(),
        }
    }

    /// `ε^k`, computed as the normal form of the word `(δσ_1)^k`.
    pub fn epsilon_power(n: usize, k: i64) -> Self {
        let e = normalize(&BraidWord::epsilon(n).expect("valid strand count"));
        e.pow(k)
    }

    pub fn from_simple(s: &NoncrossingPartition) -> Self {
        let mut x = NormalForm::identity(s.n());
        x.push_simple(s.clone());
        x
    }

    /// Builds a normal form from its parts, validating every invariant.
    pub fn from_parts(n: usize, inf: i64, factors: Vec<NoncrossingPartition>) -> Result<Self> {
        crate::check_strands(n)?;
        if let Some(f) = factors.iter().find(|f| f.n() != n) {
            return Err(Error::StrandMismatch(n, f.n()));
        }
        let x = NormalForm { n, inf, factors };
        x.validate()?;
        Ok(x)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn inf(&self) -> i64 {
        self.inf
    }

    pub fn sup(&self) -> i64 {
        self.inf + self.factors.len() as i64
    }

    /// Canonical length `ℓ`.
    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn factors(&self) -> &[NoncrossingPartition] {
        &self.factors
    }

    pub fn is_identity(&self) -> bool {
        self.inf == 0 && self.factors.is_empty()
    }

    /// Whether the element is a power of `δ`.
    pub fn is_delta_power(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn exponent_sum(&self) -> i64 {
        self.inf * (self.n as i64 - 1) + self.factors.iter().map(|f| f.exponent_sum()).sum::<i64>()
    }

    pub fn permutation(&self) -> Permutation {
        let mut p = Permutation::delta(self.n).pow(self.inf);
        for f in &self.factors {
            p = p.compose(&f.permutation());
        }
        p
    }

    /// Checks the normal-form invariants.
    pub fn validate(&self) -> Result<()> {
        for (i, f) in self.factors.iter().enumerate() {
            if f.is_identity() || f.is_delta() {
                return Err(Error::Internal(format!("factor {i} ({f}) is trivial or δ")));
            }
        }
        for (i, w) in self.factors.windows(2).enumerate() {
            if !w[0].right_complement().meet(&w[1]).is_identity() {
                return Err(Error::Internal(format!(
                    "factors {i} and {} are not left-weighted: {} · {}",
                    i + 1,
                    w[0],
                    w[1]
                )));
            }
        }
        Ok(())
    }

    pub fn is_left_weighted(&self) -> bool {
        self.validate().is_ok()
    }

    /// Right multiplication by `δ^k`: `a δ^k = δ^k τ^k(a)`.
    pub fn mul_delta_power(&mut self, k: i64) {
        self.inf += k;
        if k != 0 {
            for f in &mut self.factors {
                *f = f.tau(k);
            }
        }
    }

    /// Right multiplication by a simple element, restoring left-weightedness
    /// by sliding `(a, b) ↦ (a t, t⁻¹ b)` with `t = ∂(a) ∧ b` from the right.
    pub fn push_simple(&mut self, s: NoncrossingPartition) {
        assert_eq!(s.n(), self.n, "simple on a different strand count");
        if s.is_identity() {
            return;
        }
        if s.is_delta() {
            self.mul_delta_power(1);
            return;
        }
        self.factors.push(s);
        let mut i = self.factors.len() - 1;
        while i > 0 {
            let t = self.factors[i - 1]
                .right_complement()
                .meet(&self.factors[i]);
            if t.is_identity() {
                break;
            }
            let left = self.factors[i - 1].product_unchecked(&t);
            let right = t.left_quotient_unchecked(&self.factors[i]);
            self.factors[i - 1] = left;
            self.factors[i] = right;
            i -= 1;
        }
        let leading = self.factors.iter().take_while(|f| f.is_delta()).count();
        if leading > 0 {
            self.factors.drain(..leading);
            self.inf += leading as i64;
        }
        while self.factors.last().is_some_and(|f| f.is_identity()) {
            self.factors.pop();
        }
        debug_assert!(
            self.validate().is_ok(),
            "push_simple broke the normal form: {self}"
        );
    }

    /// Right multiplication by a single signed band generator. An inverse
    /// letter enters as `x⁻¹ = δ⁻¹ τ⁻¹(∂(x))`.
    pub fn push_letter(&mut self, g: &BandGenerator) {
        let x = NoncrossingPartition::generator(self.n, g.upper(), g.lower())
            .expect("letter fits the strand count");
        match g.sign() {
            Sign::Positive => self.push_simple(x),
            Sign::Negative => {
                self.mul_delta_power(-1);
                self.push_simple(x.right_complement().tau(-1));
            }
        }
    }

    pub fn multiply(&self, other: &NormalForm) -> NormalForm {
        assert_eq!(
            self.n, other.n,
            "multiplying braids on different strand counts"
        );
        let mut out = self.clone();
        out.mul_delta_power(other.inf);
        for f in &other.factors {
            out.push_simple(f.clone());
        }
        out
    }

    /// `(δ^r a_1 ⋯ a_ℓ)⁻¹ = δ^{-r-ℓ} τ^{-r-ℓ}(∂a_ℓ) ⋯ τ^{-r-1}(∂a_1)`.
    pub fn inverse(&self) -> NormalForm {
        let l = self.factors.len() as i64;
        let mut out = NormalForm::delta_power(self.n, -self.inf - l);
        for (j, f) in self.factors.iter().rev().enumerate() {
            out.push_simple(f.right_complement().tau(-self.inf - l + j as i64));
        }
        out
    }

    pub fn pow(&self, m: i64) -> NormalForm {
        let mut base = if m < 0 { self.inverse() } else { self.clone() };
        let mut e = m.unsigned_abs();
        let mut acc = NormalForm::identity(self.n);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.multiply(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.multiply(&base);
            }
        }
        acc
    }

    /// `τ^k(x) = δ^{-k} x δ^k`.
    pub fn tau(&self, k: i64) -> NormalForm {
        NormalForm {
            n: self.n,
            inf: self.inf,
            factors: self.factors.iter().map(|f| f.tau(k)).collect(),
        }
    }

    /// `g⁻¹ · self · g`.
    pub fn conjugate_by(&self, g: &NormalForm) -> NormalForm {
        g.inverse().multiply(self).multiply(g)
    }

    /// `s⁻¹ · self · s` for a simple `s`, using `s⁻¹ = δ⁻¹ τ⁻¹(∂s)`.
    pub fn conjugate_by_simple(&self, s: &NoncrossingPartition) -> NormalForm {
        let mut out = NormalForm::delta_power(self.n, -1);
        out.push_simple(s.right_complement().tau(-1));
        let mut out = out.multiply(self);
        out.push_simple(s.clone());
        out
    }

    /// A band-generator word representing this element.
    pub fn to_word(&self) -> BraidWord {
        let delta = BraidWord::delta(self.n).expect("valid strand count");
        let mut w = delta.pow(self.inf);
        for f in &self.factors {
            w = w.concat(&f.to_word()).expect("same strand count");
        }
        w
    }

    /// Sort key: infimum, then the factor serializations.
    pub fn canonical_key(&self) -> (i64, Vec<String>) {
        (
            self.inf,
            self.factors.iter().map(|f| f.to_string()).collect(),
        )
    }
}

/// Left normal form of the element represented by `w`.
pub fn normalize(w: &BraidWord) -> NormalForm {
    let mut x = NormalForm::identity(w.n());
    for g in w.letters() {
        x.push_letter(g);
    }
    x
}

/// Sorts normal forms by [`NormalForm::canonical_key`].
pub fn sort_canonical(v: &mut [NormalForm]) {
    v.sort_by_cached_key(|x| x.canonical_key());
}

impl fmt::Display for NormalForm {
    /// `d^r · [..][..] · …`
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "d^{}", self.inf)?;
        for a in &self.factors {
            write!(f, " · {a}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for NormalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self} (n={})", self.n)
    }
}

/// JSON form `{"n": int, "inf": int, "factors": [<simple>, …]}`.
#[derive(Serialize, Deserialize)]
pub struct NormalFormJson {
    pub n: usize,
    pub inf: i64,
    pub factors: Vec<SimpleJson>,
}

impl From<NormalForm> for NormalFormJson {
    fn from(x: NormalForm) -> Self {
        NormalFormJson {
            n: x.n,
            inf: x.inf,
            factors: x.factors.into_iter().map(SimpleJson::from).collect(),
        }
    }
}

impl TryFrom<NormalFormJson> for NormalForm {
    type Error = Error;

    fn try_from(j: NormalFormJson) -> Result<Self> {
        let factors = j
            .factors
            .into_iter()
            .map(NoncrossingPartition::try_from)
            .collect::<Result<Vec<_>>>()?;
        NormalForm::from_parts(j.n, j.inf, factors)
    }
}
