//! Cycling, decycling and partial cycling, and super summit sets reached by
//! iterating them. Every conjugation returns its conjugator `g`, oriented so
//! that `g⁻¹ · x · g` is the result.

use std::collections::HashSet;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::garside::{sort_canonical, NormalForm};
use crate::ncp::{enumerate_simples_bounded, NoncrossingPartition};

/// Default cap on cycling/decycling steps in [`sss_representative`].
pub const DEFAULT_ITERATION_CAP: usize = 1_000_000;

/// Default largest `n` accepted by [`sss_brute_force`].
pub const DEFAULT_BRUTE_FORCE_BOUND: usize = 9;

/// Conjugators accumulated while moving an element into its super summit set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConjugatorTrace {
    pub steps: Vec<NormalForm>,
    pub product: NormalForm,
}

impl ConjugatorTrace {
    pub fn new(n: usize) -> Self {
        ConjugatorTrace {
            steps: Vec::new(),
            product: NormalForm::identity(n),
        }
    }

    pub fn push(&mut self, g: NormalForm) {
        self.product = self.product.multiply(&g);
        self.steps.push(g);
    }
}

/// `c(x) = δ^r a_2 ⋯ a_ℓ τ^{-r}(a_1)`, conjugated by `τ^{-r}(a_1)`.
/// An element of canonical length 0 is returned unchanged.
pub fn cycling(x: &NormalForm) -> (NormalForm, NormalForm) {
    let Some(first) = x.factors().first() else {
        return (x.clone(), NormalForm::identity(x.n()));
    };
    let g = first.tau(-x.inf());
    let mut out = NormalForm::delta_power(x.n(), x.inf());
    for f in &x.factors()[1..] {
        out.push_simple(f.clone());
    }
    out.push_simple(g.clone());
    (out, NormalForm::from_simple(&g))
}

/// `d(x) = a_ℓ δ^r a_1 ⋯ a_{ℓ-1} = δ^r τ^r(a_ℓ) a_1 ⋯ a_{ℓ-1}`, conjugated by `a_ℓ⁻¹`.
pub fn decycling(x: &NormalForm) -> (NormalForm, NormalForm) {
    let Some(last) = x.factors().last() else {
        return (x.clone(), NormalForm::identity(x.n()));
    };
    let mut out = NormalForm::delta_power(x.n(), x.inf());
    out.push_simple(last.tau(x.inf()));
    for f in &x.factors()[..x.len() - 1] {
        out.push_simple(f.clone());
    }
    (out, NormalForm::from_simple(last).inverse())
}

/// Partial cycling by a prefix `a'` of the first factor `a_1 = a' a''`:
/// `δ^u a'' a_2 ⋯ a_ℓ τ^{-u}(a')`, conjugated by `τ^{-u}(a')`.
pub fn partial_cycling(
    x: &NormalForm,
    prefix: &NoncrossingPartition,
) -> Result<(NormalForm, NormalForm)> {
    let Some(first) = x.factors().first() else {
        return Err(Error::NotAPrefix(format!("{prefix} (no first factor)")));
    };
    let rest = prefix
        .left_quotient(first)
        .ok_or_else(|| Error::NotAPrefix(prefix.to_string()))?;
    let g = prefix.tau(-x.inf());
    let mut out = NormalForm::delta_power(x.n(), x.inf());
    out.push_simple(rest);
    for f in &x.factors()[1..] {
        out.push_simple(f.clone());
    }
    out.push_simple(g.clone());
    Ok((out, NormalForm::from_simple(&g)))
}

/// An element of the super summit set of `x` together with the conjugator
/// that reaches it.
///
/// Cycling is iterated until the orbit closes without raising the infimum
/// (the visited set restarts whenever it rises); decycling then lowers the
/// supremum the same way.
pub fn sss_representative(x: &NormalForm) -> Result<(NormalForm, ConjugatorTrace)> {
    sss_representative_capped(x, DEFAULT_ITERATION_CAP)
}

pub fn sss_representative_capped(
    x: &NormalForm,
    cap: usize,
) -> Result<(NormalForm, ConjugatorTrace)> {
    let mut trace = ConjugatorTrace::new(x.n());
    let mut current = x.clone();
    let mut steps = 0usize;

    let mut phase = |current: &mut NormalForm,
                     trace: &mut ConjugatorTrace,
                     step: fn(&NormalForm) -> (NormalForm, NormalForm),
                     improved: fn(&NormalForm, &NormalForm) -> bool|
     -> Result<()> {
        let mut seen = HashSet::new();
        seen.insert(current.clone());
        while !current.is_empty() {
            steps += 1;
            if steps > cap {
                return Err(Error::IterationCap(cap));
            }
            let (next, g) = step(current);
            trace.push(g);
            if improved(current, &next) {
                seen.clear();
            }
            *current = next;
            if !seen.insert(current.clone()) {
                break;
            }
        }
        Ok(())
    };

    phase(&mut current, &mut trace, cycling, |a, b| b.inf() > a.inf())?;
    phase(&mut current, &mut trace, decycling, |a, b| {
        b.sup() < a.sup()
    })?;
    Ok((current, trace))
}

/// The full super summit set of `x`: closure of a representative under
/// conjugation by every simple element, keeping the conjugates with the same
/// infimum and supremum. Canonically sorted.
pub fn sss_brute_force(x: &NormalForm) -> Result<Vec<NormalForm>> {
    sss_brute_force_bounded(x, DEFAULT_BRUTE_FORCE_BOUND)
}

pub fn sss_brute_force_bounded(x: &NormalForm, bound: usize) -> Result<Vec<NormalForm>> {
    let n = x.n();
    if n > bound {
        return Err(Error::BoundExceeded {
            what: "strand count for brute-force super summit sets",
            value: n as u128,
            bound: bound as u128,
        });
    }
    let (rep, _) = sss_representative(x)?;
    let simples: Vec<NoncrossingPartition> = enumerate_simples_bounded(n, bound)?
        .into_iter()
        .filter(|s| !s.is_identity())
        .collect();
    let (inf, sup) = (rep.inf(), rep.sup());
    let mut found: HashSet<NormalForm> = HashSet::new();
    found.insert(rep.clone());
    let mut frontier = vec![rep];
    while !frontier.is_empty() {
        let candidates: Vec<NormalForm> = frontier
            .par_iter()
            .flat_map_iter(|y| {
                simples
                    .iter()
                    .map(move |s| y.conjugate_by_simple(s))
                    .filter(|z| z.inf() == inf && z.sup() == sup)
            })
            .collect();
        frontier = candidates
            .into_iter()
            .filter(|z| found.insert(z.clone()))
            .collect();
    }
    let mut out: Vec<NormalForm> = found.into_iter().collect();
    sort_canonical(&mut out);
    Ok(out)
}
