//! Integer multisets, stored as a value to multiplicity table.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

/// A finite multiset of integers with canonical (sorted) ordering.
///
/// Rendered as `value^multiplicity` pairs, e.g. `-2^1 0^2 1^4`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Multiset {
    counts: BTreeMap<i64, usize>,
}

impl Multiset {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn insert(&mut self, value: i64) {
        *self.counts.entry(value).or_insert(0) += 1;
    }

    pub fn insert_many(&mut self, value: i64, times: usize) {
        if times > 0 {
            *self.counts.entry(value).or_insert(0) += times;
        }
    }

    pub fn extend(&mut self, other: &Multiset) {
        for (&v, &m) in &other.counts {
            self.insert_many(v, m);
        }
    }

    /// Multiplicity of `value`.
    pub fn count(&self, value: i64) -> usize {
        self.counts.get(&value).copied().unwrap_or(0)
    }

    pub fn contains(&self, value: i64) -> bool {
        self.count(value) > 0
    }

    /// Total number of elements, with multiplicity.
    pub fn len(&self) -> usize {
        self.counts.values().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.counts.is_empty()
    }

    /// Number of elements divisible by `e` (zero included).
    pub fn count_divisible(&self, e: i64) -> usize {
        self.counts
            .iter()
            .filter(|(v, _)| v.rem_euclid(e) == 0)
            .map(|(_, m)| m)
            .sum()
    }

    /// True iff every element of `self` occurs in `other` at least as often.
    pub fn is_submultiset_of(&self, other: &Multiset) -> bool {
        self.counts.iter().all(|(&v, &m)| other.count(v) >= m)
    }

    /// `(value, multiplicity)` pairs in increasing value order.
    pub fn iter(&self) -> impl Iterator<Item = (i64, usize)> + '_ {
        self.counts.iter().map(|(&v, &m)| (v, m))
    }

    /// All elements in increasing order, repeated by multiplicity.
    pub fn to_sorted_vec(&self) -> Vec<i64> {
        self.iter()
            .flat_map(|(v, m)| std::iter::repeat_n(v, m))
            .collect()
    }
}

impl FromIterator<i64> for Multiset {
    fn from_iter<I: IntoIterator<Item = i64>>(iter: I) -> Self {
        let mut out = Multiset::new();
        for v in iter {
            out.insert(v);
        }
        out
    }
}

impl fmt::Display for Multiset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (v, m) in self.iter() {
            if !first {
                f.write_str(" ")?;
            }
            first = false;
            write!(f, "{v}^{m}")?;
        }
        Ok(())
    }
}
