//! Exact counting and explicit listing of the super summit set of `ε^d` for
//! a divisor `d` of `n - 1`.
//!
//! Every 1-pure element is `δ^d a_{d+1,1} b_0 ⋯ b_{r-1}` with `b_k = τ^{kd}(c_k)`
//! for an `r`-composition `(c_0, …, c_{r-1})` of `[d+1, …, 2]`; the whole set
//! is the `n` shifts `τ^u` of those.

use std::collections::HashSet;
use std::io::{BufRead, Write};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::garside::{sort_canonical, NormalForm};
use crate::ncp::{binomial, enumerate_compositions, NoncrossingPartition};
use crate::periodic::{characterize, purify};

/// Default cap on the size of a table built by [`enumerate_sss`].
pub const DEFAULT_TABLE_BOUND: u128 = 2_000_000;

/// `r = (n-1)/d`, rejecting `n < 3`, `d = 0`, `d ∤ n-1` and the central case `d = n-1`.
pub fn rounds(n: usize, d: usize) -> Result<usize> {
    crate::check_strands(n)?;
    if n < 3 || d == 0 || !(n - 1).is_multiple_of(d) || (n - 1) / d < 2 {
        return Err(Error::InvalidParameters(format!(
            "need d | n - 1 with (n - 1)/d >= 2 (n = {n}, d = {d})"
        )));
    }
    Ok((n - 1) / d)
}

/// `n · C(n-1, d-1) / d`.
pub fn count_sss(n: usize, d: usize) -> Result<u128> {
    rounds(n, d)?;
    let c = binomial(n as u128 - 1, d as u128 - 1)?;
    let total = c
        .checked_mul(n as u128)
        .ok_or(Error::Overflow("count_sss"))?;
    if total % d as u128 != 0 {
        return Err(Error::Internal(format!("{total} not divisible by {d}")));
    }
    Ok(total / d as u128)
}

/// A canonically sorted super summit set of `ε^d` in `B_n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SssTable {
    pub n: usize,
    pub d: usize,
    pub r: usize,
    pub elements: Vec<NormalForm>,
}

#[derive(Serialize, Deserialize)]
struct TableHeader {
    n: usize,
    d: usize,
    count: usize,
}

impl SssTable {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, x: &NormalForm) -> bool {
        self.elements
            .binary_search_by(|y| y.canonical_key().cmp(&x.canonical_key()))
            .is_ok()
    }

    /// The 1-pure elements (those fixing strand 1).
    pub fn one_pure(&self) -> Vec<&NormalForm> {
        self.elements
            .iter()
            .filter(|x| x.permutation().apply(1) == 1)
            .collect()
    }

    /// Writes a header line `{"n":…,"d":…,"count":…}` and one normal form per line.
    pub fn write_jsonl<W: Write>(&self, mut w: W) -> std::io::Result<()> {
        let header = TableHeader {
            n: self.n,
            d: self.d,
            count: self.elements.len(),
        };
        serde_json::to_writer(&mut w, &header)?;
        writeln!(w)?;
        for x in &self.elements {
            serde_json::to_writer(&mut w, x)?;
            writeln!(w)?;
        }
        Ok(())
    }

    pub fn read_jsonl<R: BufRead>(r: R) -> Result<Self> {
        let mut lines = r.lines();
        let bad = |e: &dyn std::fmt::Display| Error::Table(e.to_string());
        let header: TableHeader = match lines.next() {
            Some(line) => serde_json::from_str(&line.map_err(|e| bad(&e))?).map_err(|e| bad(&e))?,
            None => return Err(Error::Table("missing header".into())),
        };
        let r = rounds(header.n, header.d)?;
        let mut elements = Vec::with_capacity(header.count);
        for line in lines {
            let line = line.map_err(|e| bad(&e))?;
            if line.trim().is_empty() {
                continue;
            }
            let x: NormalForm = serde_json::from_str(&line).map_err(|e| bad(&e))?;
            if x.n() != header.n {
                return Err(Error::StrandMismatch(header.n, x.n()));
            }
            elements.push(x);
        }
        if elements.len() != header.count {
            return Err(Error::Table(format!(
                "header says {} elements, found {}",
                header.count,
                elements.len()
            )));
        }
        sort_canonical(&mut elements);
        Ok(SssTable {
            n: header.n,
            d: header.d,
            r,
            elements,
        })
    }
}

/// The 1-pure element `δ^d a_{d+1,1} b_0 ⋯ b_{r-1}` built from an
/// `r`-composition of `[d, …, 1]` in `B_d`.
pub fn one_pure_from_composition(
    n: usize,
    d: usize,
    composition: &[NoncrossingPartition],
) -> Result<NormalForm> {
    let mut a = NoncrossingPartition::generator(n, d + 1, 1)?;
    for (k, c) in composition.iter().enumerate() {
        let b = c.embed(n, 1)?.tau((k * d) as i64);
        a = a.product(&b).ok_or_else(|| {
            Error::Internal(format!("a_{{{},1}} b_0 ⋯ b_{k} is not simple", d + 1))
        })?;
    }
    let mut x = NormalForm::delta_power(n, d as i64);
    x.push_simple(a);
    Ok(x)
}

pub fn enumerate_sss(n: usize, d: usize) -> Result<SssTable> {
    enumerate_sss_bounded(n, d, DEFAULT_TABLE_BOUND)
}

pub fn enumerate_sss_bounded(n: usize, d: usize, bound: u128) -> Result<SssTable> {
    let r = rounds(n, d)?;
    let count = count_sss(n, d)?;
    if count > bound {
        return Err(Error::BoundExceeded {
            what: "super summit set size",
            value: count,
            bound,
        });
    }
    let pure: Vec<NormalForm> = if d == 1 {
        vec![NormalForm::epsilon_power(n, 1)]
    } else {
        let top = NoncrossingPartition::delta(d);
        enumerate_compositions(&top, r)?
            .par_iter()
            .map(|comp| one_pure_from_composition(n, d, comp))
            .collect::<Result<_>>()?
    };
    let mut seen = HashSet::with_capacity(count as usize);
    let mut elements = Vec::with_capacity(count as usize);
    for x in &pure {
        for u in 0..n as i64 {
            let y = x.tau(u);
            if !seen.insert(y.clone()) {
                return Err(Error::Internal(format!(
                    "duplicate super summit element {y}"
                )));
            }
            elements.push(y);
        }
    }
    if elements.len() as u128 != count {
        return Err(Error::Internal(format!(
            "enumerated {} elements, expected {count}",
            elements.len()
        )));
    }
    sort_canonical(&mut elements);
    Ok(SssTable { n, d, r, elements })
}

/// Whether `x` lies in the super summit set of `ε^d`: some `τ^u(x)` is
/// 1-pure and passes the structural characterization.
pub fn verify_membership(x: &NormalForm, n: usize, d: usize) -> bool {
    if x.n() != n || rounds(n, d).is_err() {
        return false;
    }
    match purify(x) {
        Ok((_, pure)) => characterize(&pure, d).is_ok(),
        Err(_) => false,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::garside::normalize;
    use crate::parse_word;

    fn nf(text: &str, n: usize) -> NormalForm {
        normalize(&parse_word(text, n).unwrap())
    }

    #[test]
    fn counts() {
        assert_eq!(count_sss(13, 3).unwrap(), 286);
        assert_eq!(count_sss(9, 4).unwrap(), 126);
        for n in 3..40 {
            assert_eq!(count_sss(n, 1).unwrap(), n as u128);
        }
        assert!(count_sss(13, 5).is_err());
        assert!(count_sss(13, 12).is_err());
        assert!(count_sss(13, 0).is_err());
    }

    #[test]
    fn small_tables() {
        let t = enumerate_sss(5, 2).unwrap();
        assert_eq!(t.len(), 10);
        assert_eq!(t.one_pure().len(), 2);
        let t = enumerate_sss(5, 1).unwrap();
        let e = NormalForm::epsilon_power(5, 1);
        assert!((0..5).all(|u| t.contains(&e.tau(u))));
    }

    #[test]
    fn table_contains_worked_example() {
        let t = enumerate_sss(13, 3).unwrap();
        assert_eq!(t.len(), 286);
        assert!(t.contains(&nf("d^3 a(4,1) [3,2] [10,8]", 13)));
        assert!(t.contains(&NormalForm::epsilon_power(13, 3)));
        assert_eq!(t.one_pure().len(), 22);
    }

    #[test]
    fn membership() {
        assert!(verify_membership(&nf("d^3 a(4,1) [3,2] [10,8]", 13), 13, 3));
        assert!(verify_membership(&NormalForm::epsilon_power(13, 3), 13, 3));
        assert!(verify_membership(
            &NormalForm::epsilon_power(13, 3).tau(5),
            13,
            3
        ));
        assert!(!verify_membership(&nf("d^3 [4,3,2,1] s2", 13), 13, 3));
        assert!(!verify_membership(&NormalForm::epsilon_power(13, 3), 13, 4));
        assert!(!verify_membership(&NormalForm::epsilon_power(13, 3), 12, 3));
    }

    #[test]
    fn jsonl_round_trip() {
        let t = enumerate_sss(7, 2).unwrap();
        let mut buf = Vec::new();
        t.write_jsonl(&mut buf).unwrap();
        let text = String::from_utf8(buf.clone()).unwrap();
        assert!(text.starts_with("{\"n\":7,\"d\":2,\"count\":21}\n"));
        assert_eq!(text.lines().count(), 22);
        assert_eq!(SssTable::read_jsonl(&buf[..]).unwrap(), t);
        assert!(SssTable::read_jsonl(&b"{\"n\":7,\"d\":2,\"count\":3}\n"[..]).is_err());
    }
}
