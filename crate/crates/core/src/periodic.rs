//! Periodic braids: classification, the reduction from `ε^k` to
//! `ε^d` with `d = gcd(k, n-1)`, the decomposition of 1-pure super summit
//! elements of `ε^d` and the simple conjugator it yields, and the full
//! conjugacy search pipeline.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{ClaimFailure, Error, Result};
use crate::garside::NormalForm;
use crate::ncp::NoncrossingPartition;
use crate::summit::sss_representative;

/// Conjugacy type of a periodic braid.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PeriodicClass {
    /// Conjugate to `δ^m`, not central.
    DeltaType(i64),
    /// Conjugate to `ε^m`, not central.
    EpsilonType(i64),
    /// Equal to the central element `δ^{jn} = ε^{j(n-1)}`.
    Central(i64),
    NonPeriodic,
}

impl fmt::Display for PeriodicClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PeriodicClass::DeltaType(m) => write!(f, "delta-type {m}"),
            PeriodicClass::EpsilonType(m) => write!(f, "epsilon-type {m}"),
            PeriodicClass::Central(j) => write!(f, "central {j}"),
            PeriodicClass::NonPeriodic => write!(f, "non-periodic"),
        }
    }
}

/// Classifies `x` by exponent sum and a central power: `x^n = δ^{mn}` with
/// exponent sum `m(n-1)` means δ-type, `x^{n-1} = δ^{mn}` with exponent sum
/// `mn` means ε-type.
pub fn classify_periodic(x: &NormalForm) -> PeriodicClass {
    let n = x.n() as i64;
    if x.is_delta_power() && x.inf() % n == 0 {
        return PeriodicClass::Central(x.inf() / n);
    }
    if n == 1 {
        return PeriodicClass::Central(0);
    }
    let e = x.exponent_sum();
    if e % (n - 1) == 0 {
        let m = e / (n - 1);
        if x.pow(n) == NormalForm::delta_power(x.n(), m * n) {
            return PeriodicClass::DeltaType(m);
        }
    }
    if e % n == 0 {
        let m = e / n;
        if x.pow(n - 1) == NormalForm::delta_power(x.n(), m * n) {
            return PeriodicClass::EpsilonType(m);
        }
    }
    PeriodicClass::NonPeriodic
}

fn extended_gcd(a: i64, b: i64) -> (i64, i64, i64) {
    if b == 0 {
        (a, 1, 0)
    } else {
        let (g, x, y) = extended_gcd(b, a % b);
        (g, y, x - (a / b) * y)
    }
}

pub fn gcd(a: i64, b: i64) -> i64 {
    extended_gcd(a.abs(), b.abs()).0
}

/// `(d, p, q)` with `d = gcd(k, n-1) > 0` and `(n-1)p + kq = d`, choosing
/// the smallest `|q|`, then the smallest `|p|`, then positive `q`.
pub fn reduce_exponent(k: i64, n: usize) -> Result<(i64, i64, i64)> {
    if k == 0 {
        return Err(Error::ZeroExponent);
    }
    if n < 2 {
        return Err(Error::InvalidParameters(format!(
            "exponent reduction needs n >= 2, got {n}"
        )));
    }
    let big = n as i64 - 1;
    let (g, x, y) = extended_gcd(big, k.abs());
    let (p0, q0) = (x, if k < 0 { -y } else { y });
    debug_assert_eq!(big * p0 + k * q0, g);
    // all solutions: q = q0 + t·(n-1)/d, p = p0 - t·k/d
    let step_q = big / g;
    let step_p = k / g;
    let t = (q0.rem_euclid(step_q) - q0) / step_q;
    let candidates = [t, t - 1].map(|t| (p0 - t * step_p, q0 + t * step_q));
    let best = candidates
        .into_iter()
        .min_by_key(|&(p, q)| (q.abs(), p.abs(), q < 0))
        .expect("two candidates");
    Ok((g, best.0, best.1))
}

/// `δ^{np} x^q`.
pub fn transport(x: &NormalForm, p: i64, q: i64) -> NormalForm {
    let n = x.n() as i64;
    NormalForm::delta_power(x.n(), n * p).multiply(&x.pow(q))
}

/// Conjugates a super summit element of a noncentral `ε^d` by a power of `δ`
/// to make it 1-pure: returns `u` in `0..n` and `τ^u(x) = δ^{-u} x δ^u`.
pub fn purify(x: &NormalForm) -> Result<(i64, NormalForm)> {
    let fixed = x.permutation().fixed_points();
    if fixed.len() != 1 {
        return Err(Error::FixedPoints(fixed.len()));
    }
    let n = x.n() as i64;
    // τ moves a fixed point f to f + 1
    let u = (1 - fixed[0] as i64).rem_euclid(n);
    Ok((u, x.tau(u)))
}

/// The blocks `S_k = kd + {2, …, d+1}` for `k = 0..(n-1)/d`.
pub fn round_reduction_blocks(n: usize, d: usize) -> Result<Vec<Vec<usize>>> {
    if d < 2 {
        return Err(Error::InvalidParameters(format!("need d >= 2, got {d}")));
    }
    if n < 2 || !(n - 1).is_multiple_of(d) {
        return Err(Error::InvalidParameters(format!(
            "{d} does not divide n - 1 = {}",
            n.saturating_sub(1)
        )));
    }
    Ok(support_blocks(n, d))
}

fn support_blocks(n: usize, d: usize) -> Vec<Vec<usize>> {
    (0..(n - 1) / d)
        .map(|k| (k * d + 2..=k * d + d + 1).collect())
        .collect()
}

/// A 1-pure super summit element `δ^d a_{d+1,1} b_0 ⋯ b_{r-1}` of `ε^d`
/// split into its parts; `b_k` is supported on `S_k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decomposition {
    pub n: usize,
    pub d: usize,
    pub r: usize,
    pub b: Vec<NoncrossingPartition>,
}

impl Decomposition {
    /// Builds `δ^d a_{d+1,1} b_0 ⋯ b_{r-1}`.
    pub fn rebuild(&self) -> Result<NormalForm> {
        let mut a = NoncrossingPartition::generator(self.n, self.d + 1, 1)?;
        for b in &self.b {
            a = a
                .product(b)
                .ok_or_else(|| Error::Internal(format!("a·{b} is not simple")))?;
        }
        let mut x = NormalForm::delta_power(self.n, self.d as i64);
        x.push_simple(a);
        Ok(x)
    }

    /// `b_0 τ^{-d}(b_1) ⋯ τ^{-(r-1)d}(b_{r-1})`, or `None` if a partial
    /// product is not simple.
    pub fn chained_product(&self) -> Option<NoncrossingPartition> {
        let mut acc = NoncrossingPartition::identity(self.n);
        for (k, b) in self.b.iter().enumerate() {
            acc = acc.product(&b.tau(-((k * self.d) as i64)))?;
        }
        Some(acc)
    }
}

fn check_divisor(n: usize, d: usize) -> Result<usize> {
    if d == 0 || n < 3 || !(n - 1).is_multiple_of(d) || (n - 1) / d < 2 {
        return Err(Error::InvalidParameters(format!(
            "need d | n - 1 with (n - 1)/d >= 2 (n = {n}, d = {d})"
        )));
    }
    Ok((n - 1) / d)
}

/// Splits a 1-pure element of `[ε^d]^S` as `δ^d a_{d+1,1} b_0 ⋯ b_{r-1}`,
/// checking each structural claim in turn.
pub fn characterize(x: &NormalForm, d: usize) -> Result<Decomposition> {
    let n = x.n();
    let r = check_divisor(n, d)?;
    if x.inf() != d as i64 || x.len() != 1 {
        return Err(ClaimFailure::Shape {
            expected_inf: d as i64,
            inf: x.inf(),
            len: x.len(),
        }
        .into());
    }
    let image = x.permutation().apply(1);
    if image != 1 {
        return Err(ClaimFailure::NotOnePure { image }.into());
    }
    let identity = NoncrossingPartition::identity(n);
    if d == 1 {
        if *x != NormalForm::epsilon_power(n, 1) {
            return Err(ClaimFailure::NotEpsilon.into());
        }
        return Ok(Decomposition {
            n,
            d,
            r,
            b: vec![identity; r],
        });
    }
    let a = &x.factors()[0];
    if a.image(1) != d + 1 {
        return Err(ClaimFailure::FirstBond { expected: d + 1 }.into());
    }
    let bond = NoncrossingPartition::generator(n, d + 1, 1)?;
    let rest = bond
        .left_quotient(a)
        .ok_or(ClaimFailure::FirstBond { expected: d + 1 })?;
    let mut parts: Vec<Vec<Vec<usize>>> = vec![Vec::new(); r];
    for block in rest.nontrivial_blocks() {
        let (lo, hi) = (*block.last().unwrap(), block[0]);
        let k = lo.saturating_sub(2) / d;
        if lo < 2 || k >= r || hi > k * d + d + 1 {
            let text = format!(
                "[{}]",
                block
                    .iter()
                    .map(|i| i.to_string())
                    .collect::<Vec<_>>()
                    .join(",")
            );
            return Err(ClaimFailure::Straddle { block: text }.into());
        }
        parts[k].push(block);
    }
    let b = parts
        .iter()
        .map(|blocks| NoncrossingPartition::from_blocks(blocks, n))
        .collect::<Result<Vec<_>>>()?;
    let dec = Decomposition { n, d, r, b };
    let top: Vec<usize> = (2..=d + 1).rev().collect();
    let expected = NoncrossingPartition::subsimple(n, &top)?;
    match dec.chained_product() {
        Some(p) if p == expected => Ok(dec),
        found => Err(ClaimFailure::ChainProduct {
            found: found.map_or_else(|| "not simple".to_string(), |p| p.to_string()),
            expected: expected.to_string(),
        }
        .into()),
    }
}

/// `c = τ^{-d}(b_1 ⋯ b_{r-1}) τ^{-2d}(b_2 ⋯ b_{r-1}) ⋯ τ^{-(r-1)d}(b_{r-1})`,
/// a simple element with `c⁻¹ x c = ε^d`.
pub fn conjugator_from_decomposition(dec: &Decomposition) -> Result<NoncrossingPartition> {
    let n = dec.n;
    let mut c = NoncrossingPartition::identity(n);
    // suffix = b_k ⋯ b_{r-1}, built from the right
    let mut suffix = NoncrossingPartition::identity(n);
    let mut terms = Vec::with_capacity(dec.r);
    for k in (1..dec.r).rev() {
        suffix = dec.b[k]
            .product(&suffix)
            .ok_or_else(|| Error::Internal(format!("b_{k} ⋯ b_{} is not simple", dec.r - 1)))?;
        terms.push(suffix.tau(-((k * dec.d) as i64)));
    }
    for t in terms.iter().rev() {
        c = c
            .product(t)
            .ok_or_else(|| Error::Internal("conjugator is not simple".into()))?;
    }
    Ok(c)
}

/// What a certificate conjugates to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum TargetKind {
    Epsilon,
    Delta,
    Central,
}

/// Intermediate data of the ε-pipeline: `γ = trace · δ^shift · c`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EpsilonWitness {
    pub d: i64,
    pub p: i64,
    pub q: i64,
    pub trace: NormalForm,
    pub shift: i64,
    pub decomposition: Decomposition,
    pub simple_conjugator: NoncrossingPartition,
}

/// A conjugator `γ` with `γ⁻¹ · x · γ` equal to the target.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConjugacyCertificate {
    pub n: usize,
    pub k: i64,
    pub target: TargetKind,
    pub gamma: NormalForm,
    pub verified: bool,
    #[serde(skip)]
    pub witness: Option<EpsilonWitness>,
}

impl ConjugacyCertificate {
    /// The target element `ε^k` or `δ^k`.
    pub fn target_element(&self, epsilon: bool) -> NormalForm {
        if epsilon {
            NormalForm::epsilon_power(self.n, self.k)
        } else {
            NormalForm::delta_power(self.n, self.k)
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NonConjugacy {
    pub conjugate: bool,
    pub reason: String,
}

/// Outcome of a conjugacy search.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Verdict {
    Conjugate(ConjugacyCertificate),
    NotConjugate(NonConjugacy),
}

impl Verdict {
    fn no(reason: impl Into<String>) -> Self {
        Verdict::NotConjugate(NonConjugacy {
            conjugate: false,
            reason: reason.into(),
        })
    }

    pub fn certificate(&self) -> Option<&ConjugacyCertificate> {
        match self {
            Verdict::Conjugate(c) => Some(c),
            Verdict::NotConjugate(_) => None,
        }
    }
}

fn certify(
    x: &NormalForm,
    k: i64,
    target: TargetKind,
    want: &NormalForm,
    gamma: NormalForm,
) -> ConjugacyCertificate {
    let verified = x.conjugate_by(&gamma) == *want;
    ConjugacyCertificate {
        n: x.n(),
        k,
        target,
        gamma,
        verified,
        witness: None,
    }
}

/// Finds `γ` with `γ⁻¹ x γ = ε^k`, or reports that none exists.
pub fn solve_csp(x: &NormalForm, k: i64) -> Result<Verdict> {
    let n = x.n();
    let ni = n as i64;
    if k == 0 {
        return Ok(if x.is_identity() {
            Verdict::Conjugate(certify(
                x,
                0,
                TargetKind::Central,
                x,
                NormalForm::identity(n),
            ))
        } else {
            Verdict::no("target ε^0 is the identity and the input is not")
        });
    }
    let e = x.exponent_sum();
    if e != k * ni {
        return Ok(Verdict::no(format!(
            "exponent sums differ: {e} vs {}",
            k * ni
        )));
    }
    if x.pow(ni - 1) != NormalForm::delta_power(n, k * ni) {
        return Ok(Verdict::no(format!(
            "x^{} is not the central element δ^{}",
            ni - 1,
            k * ni
        )));
    }
    let target = NormalForm::epsilon_power(n, k);
    let (d, p, q) = reduce_exponent(k, n)?;
    if d == ni - 1 {
        // ε^k is central
        return Ok(if *x == target {
            Verdict::Conjugate(certify(
                x,
                k,
                TargetKind::Central,
                &target,
                NormalForm::identity(n),
            ))
        } else {
            Verdict::no("ε^k is central and differs from the input")
        });
    }
    let moved = transport(x, p, q);
    let (rep, trace) = sss_representative(&moved)?;
    let (u, pure) = match purify(&rep) {
        Ok(v) => v,
        Err(e) => return Ok(Verdict::no(format!("purification failed: {e}"))),
    };
    let dec = match characterize(&pure, d as usize) {
        Ok(dec) => dec,
        Err(e) => return Ok(Verdict::no(format!("{e}"))),
    };
    let c = conjugator_from_decomposition(&dec)?;
    let gamma = trace
        .product
        .multiply(&NormalForm::delta_power(n, u))
        .multiply(&NormalForm::from_simple(&c));
    let mut cert = certify(x, k, TargetKind::Epsilon, &target, gamma);
    cert.witness = Some(EpsilonWitness {
        d,
        p,
        q,
        trace: trace.product,
        shift: u,
        decomposition: dec,
        simple_conjugator: c,
    });
    Ok(Verdict::Conjugate(cert))
}

/// Finds `γ` with `γ⁻¹ x γ = δ^m`; the super summit set of `δ^m` is `{δ^m}`.
pub fn solve_csp_delta(x: &NormalForm, m: i64) -> Result<Verdict> {
    let n = x.n();
    let ni = n as i64;
    let e = x.exponent_sum();
    if e != m * (ni - 1) {
        return Ok(Verdict::no(format!(
            "exponent sums differ: {e} vs {}",
            m * (ni - 1)
        )));
    }
    let target = NormalForm::delta_power(n, m);
    let (rep, trace) = sss_representative(x)?;
    if rep != target {
        return Ok(Verdict::no(format!(
            "super summit representative {rep} is not δ^{m}"
        )));
    }
    let kind = if m % ni == 0 {
        TargetKind::Central
    } else {
        TargetKind::Delta
    };
    Ok(Verdict::Conjugate(certify(
        x,
        m,
        kind,
        &target,
        trace.product,
    )))
}

/// `f(x) = x^{k/d}`.
pub fn stable_map_f(x: &NormalForm, k: i64, d: i64) -> Result<NormalForm> {
    if d == 0 || k % d != 0 {
        return Err(Error::InvalidParameters(format!("{d} does not divide {k}")));
    }
    Ok(x.pow(k / d))
}

/// `g(x) = δ^{np} x^q`.
pub fn stable_map_g(x: &NormalForm, p: i64, q: i64) -> NormalForm {
    transport(x, p, q)
}

/// Whether `x`, assumed conjugate to `ε^k`, lies in the stable super summit
/// set: `x^m` must realize the summit infimum and supremum of `ε^{km}` for
/// `m = 1..(n-1)/gcd(k, n-1)`. Beyond that range `x^m` differs from a lower
/// power by the central `δ^n`, which shifts both bounds by `n`.
pub fn is_stable_sss(x: &NormalForm, k: i64) -> Result<bool> {
    let n = x.n();
    let ni = n as i64;
    if x.exponent_sum() != k * ni {
        return Err(Error::InvalidParameters(format!(
            "exponent sum {} is not that of ε^{k}",
            x.exponent_sum()
        )));
    }
    if n < 2 {
        return Ok(true);
    }
    let d = if k == 0 { ni - 1 } else { gcd(k, ni - 1) };
    for m in 1..=(ni - 1) / d {
        let (rep, _) = sss_representative(&NormalForm::epsilon_power(n, k * m))?;
        let y = x.pow(m);
        if y.inf() != rep.inf() || y.sup() != rep.sup() {
            return Ok(false);
        }
    }
    Ok(true)
}
