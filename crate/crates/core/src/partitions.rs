//! Partitions and the surgery operations that drive the CV-module short
//! exact sequence.
//!
//! Parts are indexed from zero: a partition with `n + 1` parts is
//! `xi_0 >= xi_1 >= ... >= xi_n > 0`. Composite operations act on that slot
//! sequence first and only then drop zero slots.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        let ok = parts.iter().all(|&p| p > 0) && parts.windows(2).all(|w| w[0] >= w[1]);
        if ok {
            Ok(Self { parts })
        } else {
            Err(Error::InvalidPartition(parts))
        }
    }

    pub fn empty() -> Self {
        Self::default()
    }

    /// Sorts `parts` into weakly decreasing order and drops zeros.
    pub fn from_unsorted(mut parts: Vec<u32>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Self { parts }
    }

    /// Canonicalizes a slot sequence by stripping trailing zero slots.
    ///
    /// Panics if a slot is negative or the nonzero slots are out of order;
    /// every operation in this module produces valid slots.
    fn from_slots(slots: Vec<i64>) -> Self {
        let mut parts: Vec<u32> = slots
            .into_iter()
            .map(|s| u32::try_from(s).expect("partition slot went negative"))
            .collect();
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Self::new(parts).expect("slot sequence is weakly decreasing")
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn n_parts(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }

    pub fn largest(&self) -> u32 {
        self.parts.first().copied().unwrap_or(0)
    }

    pub fn last(&self) -> Option<u32> {
        self.parts.last().copied()
    }

    fn slots(&self) -> Vec<i64> {
        self.parts.iter().map(|&p| i64::from(p)).collect()
    }

    fn nonempty(&self) -> Result<()> {
        if self.is_empty() {
            Err(Error::Empty)
        } else {
            Ok(())
        }
    }
}

impl TryFrom<Vec<u32>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<u32>) -> Result<Self> {
        Self::new(parts)
    }
}

impl From<Partition> for Vec<u32> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

/// Prints `3,2,1`, or `-` for the empty partition.
impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "-");
        }
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let trimmed = s.trim();
        let bad = |reason: &str| Error::ParsePartition {
            input: s.to_string(),
            reason: reason.to_string(),
        };
        if trimmed == "-" {
            return Ok(Self::empty());
        }
        if trimmed.is_empty() {
            return Err(bad("empty string (use \"-\" for the empty partition)"));
        }
        let parts = trimmed
            .split(',')
            .map(|t| t.trim().parse::<u32>().map_err(|e| bad(&e.to_string())))
            .collect::<Result<Vec<_>>>()?;
        Self::new(parts).map_err(|_| bad("parts must be positive and weakly decreasing"))
    }
}

/// Lambda1 offset together with a partition, indexing a CV module.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CVIndex {
    pub lambda1_offset: i64,
    pub xi: Partition,
}

impl CVIndex {
    pub fn new(lambda1_offset: i64, xi: Partition) -> Self {
        Self { lambda1_offset, xi }
    }
}

/// Conjugate partition.
pub fn transpose(xi: &Partition) -> Partition {
    let parts = (1..=xi.largest())
        .map(|c| xi.parts.iter().filter(|&&p| p >= c).count() as u32)
        .collect();
    Partition { parts }
}

/// Sum of the first `r` parts of the transpose, i.e. `sum_i min(xi_i, r)`.
pub fn col_partial_sum(xi: &Partition, r: u32) -> u32 {
    xi.parts.iter().map(|&p| p.min(r)).sum()
}

/// `xi^+`: bump part `l` (minimal with `xi_l = xi_{n-1}`) and lower the last
/// part. A one-part partition is returned unchanged.
pub fn xi_plus(xi: &Partition) -> Result<Partition> {
    xi.nonempty()?;
    if xi.n_parts() == 1 {
        return Ok(xi.clone());
    }
    Ok(plus_of_slots(xi.slots()))
}

fn plus_of_slots(mut slots: Vec<i64>) -> Partition {
    let n = slots.len() - 1;
    let target = slots[n - 1];
    let l = slots.iter().position(|&s| s == target).unwrap();
    slots[l] += 1;
    slots[n] -= 1;
    Partition::from_slots(slots)
}

/// `(xi_0, ..., xi_{n-2}, xi_{n-1} - xi_n + extra)`; empty for one part.
fn minus_with(xi: &Partition, extra: i64) -> Partition {
    let mut slots = xi.slots();
    if slots.len() < 2 {
        return Partition::empty();
    }
    let last = slots.pop().unwrap();
    *slots.last_mut().unwrap() += extra - last;
    Partition::from_slots(slots)
}

pub fn xi_minus(xi: &Partition) -> Result<Partition> {
    xi.nonempty()?;
    Ok(minus_with(xi, 0))
}

/// Last part lowered by one.
pub fn xi_hat(xi: &Partition) -> Result<Partition> {
    xi.nonempty()?;
    let mut slots = xi.slots();
    *slots.last_mut().unwrap() -= 1;
    Ok(Partition::from_slots(slots))
}

/// Last part lowered by two; empty when the last part is 1.
pub fn xi_tilde(xi: &Partition) -> Result<Partition> {
    xi.nonempty()?;
    let mut slots = xi.slots();
    let last = slots.last_mut().unwrap();
    if *last < 2 {
        return Ok(Partition::empty());
    }
    *last -= 2;
    Ok(Partition::from_slots(slots))
}

/// `(hat xi)^-`, computed on the unstripped hat so its zero slot is consumed.
pub fn hat_minus(xi: &Partition) -> Result<Partition> {
    xi.nonempty()?;
    Ok(minus_with(xi, 1))
}

/// `(tilde xi)^-`; empty when tilde xi is (last part 1, or a single part).
pub fn tilde_minus(xi: &Partition) -> Result<Partition> {
    xi.nonempty()?;
    if xi.last() == Some(1) {
        return Ok(Partition::empty());
    }
    Ok(minus_with(xi, 2))
}

/// The hat, minus and plus of `(hat xi)^- = (xi_0, ..., xi_{n-2}, 1)`,
/// defined when `xi_{n-1} = xi_n`.
pub fn hat_minus_composites(xi: &Partition) -> Result<(Partition, Partition, Partition)> {
    let p = xi.parts();
    let n_parts = p.len();
    if n_parts < 2 || p[n_parts - 2] != p[n_parts - 1] {
        return Err(Error::CaseMismatch(format!(
            "need xi_(n-1) = xi_n, got {xi}"
        )));
    }
    let prefix: Vec<i64> = p[..n_parts - 2].iter().map(|&v| i64::from(v)).collect();
    let hat = Partition::from_slots(prefix.clone());
    if prefix.is_empty() {
        return Ok((hat, Partition::empty(), Partition::empty()));
    }
    let mut minus = prefix.clone();
    *minus.last_mut().unwrap() -= 1;
    let mut with_one = prefix;
    with_one.push(1);
    Ok((hat, Partition::from_slots(minus), plus_of_slots(with_one)))
}

/// `min_{0<=k<=n} (k r + sum_{j>=k+1} xi_j)`; zero for the empty partition.
pub fn lemma_bound(xi: &Partition, r: u32) -> u32 {
    let p = xi.parts();
    if p.is_empty() {
        return 0;
    }
    (0..p.len())
        .map(|k| k as u32 * r + p[k + 1..].iter().sum::<u32>())
        .min()
        .unwrap()
}

/// `(r, |(xi^tr)^(r)| - r + 1)` for `1 <= r <= largest - 1`.
pub fn minimal_relations(xi: &Partition) -> Vec<(u32, u32)> {
    (1..xi.largest())
        .map(|r| (r, col_partial_sum(xi, r) + 1 - r))
        .collect()
}

/// All partitions of `size`, in reverse lexicographic order.
pub fn partitions_of(size: u32) -> Vec<Partition> {
    fn rec(remaining: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition { parts: cur.clone() });
            return;
        }
        for part in (1..=max.min(remaining)).rev() {
            cur.push(part);
            rec(remaining - part, part, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(size, size, &mut Vec::new(), &mut out);
    out
}

/// Partitions with at most `rows` parts, each at most `max_part`.
pub fn partitions_in_box(rows: u32, max_part: u32) -> Vec<Partition> {
    fn rec(rows: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        out.push(Partition { parts: cur.clone() });
        if rows == 0 {
            return;
        }
        for part in 1..=max {
            cur.push(part);
            rec(rows - 1, part, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(rows, max_part, &mut Vec::new(), &mut out);
    out.sort();
    out
}
