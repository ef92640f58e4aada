//! Partitions, multipartitions, Young-diagram nodes and their hook lengths.
//!
//! Components of a multipartition are 0-indexed; rows and columns of a
//! diagram are 1-indexed. A partition stores no trailing zeros, and any
//! part read beyond the stored length is zero.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::multiset::Multiset;

/// A weakly decreasing list of positive integers.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Builds a partition, dropping trailing zeros.
    ///
    /// Fails if the parts are not weakly decreasing.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotDecreasing(parts));
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Self { parts })
    }

    pub fn empty() -> Self {
        Self::default()
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn rank(&self) -> usize {
        self.parts.iter().sum()
    }

    /// The part in (1-based) row `i`, zero beyond the diagram.
    pub fn part(&self, i: usize) -> usize {
        if i == 0 {
            return 0;
        }
        self.parts.get(i - 1).copied().unwrap_or(0)
    }

    pub fn contains_node(&self, i: usize, j: usize) -> bool {
        i >= 1 && j >= 1 && j <= self.part(i)
    }

    /// Nodes `(row, col)` in row-major order.
    pub fn nodes(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(r, &len)| (1..=len).map(move |c| (r + 1, c)))
    }

    /// The conjugate partition: column heights of the diagram.
    pub fn conjugate(&self) -> Partition {
        let width = self.part(1);
        let parts = (1..=width)
            .map(|k| self.parts.iter().take_while(|&&p| p >= k).count())
            .collect();
        Partition { parts }
    }

    /// Height of column `j` (the `j`-th part of the conjugate).
    pub fn column_height(&self, j: usize) -> usize {
        if j == 0 {
            return 0;
        }
        self.parts.iter().take_while(|&&p| p >= j).count()
    }

    /// Generalised hook length `λ_i - i + μ'_j - j + 1` of node `(i, j)` of
    /// `self` with respect to `mu`.
    pub fn generalized_hook(&self, mu: &Partition, i: usize, j: usize) -> Result<i64> {
        if !self.contains_node(i, j) {
            return Err(Error::NodeOutside { row: i, col: j });
        }
        Ok(self.part(i) as i64 - i as i64 + mu.column_height(j) as i64 - j as i64 + 1)
    }

    /// Classical hook length of a node known to be in the diagram.
    pub(crate) fn hook(&self, i: usize, j: usize) -> i64 {
        self.part(i) as i64 - i as i64 + self.column_height(j) as i64 - j as i64 + 1
    }

    /// The multiset of classical hook lengths, one per node.
    pub fn hooks_multiset(&self) -> Multiset {
        self.nodes().map(|(i, j)| self.hook(i, j)).collect()
    }

    /// `N(λ) = Σ (i-1) λ_i`.
    pub fn n_invariant(&self) -> usize {
        self.parts.iter().enumerate().map(|(i, &p)| i * p).sum()
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return f.write_str("0");
        }
        let s: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        f.write_str(&s.join("."))
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Parts separated by `.`; the empty partition is written `0`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = |reason: &str| Error::Parse {
            input: s.to_string(),
            reason: reason.to_string(),
        };
        if s.is_empty() {
            return Err(bad("empty component; write `0` for the empty partition"));
        }
        if s == "0" {
            return Ok(Partition::empty());
        }
        let parts = s
            .split('.')
            .map(|p| {
                p.trim()
                    .parse::<usize>()
                    .map_err(|_| bad("parts must be nonnegative integers"))
            })
            .collect::<Result<Vec<_>>>()?;
        if parts.contains(&0) {
            return Err(bad("zero parts are not allowed inside a partition"));
        }
        Partition::new(parts).map_err(|_| bad("parts must be weakly decreasing"))
    }
}

/// A Young-diagram node of a multipartition.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Node {
    pub component: usize,
    pub row: usize,
    pub col: usize,
}

impl Node {
    pub fn new(component: usize, row: usize, col: usize) -> Self {
        Self {
            component,
            row,
            col,
        }
    }

    /// The content `col - row`.
    pub fn content(&self) -> i64 {
        self.col as i64 - self.row as i64
    }
}

/// The `s`-charged content `(j - i) + s + 1` of a node.
pub fn charged_content(node: &Node, s: i64) -> i64 {
    node.content() + s + 1
}

/// An `l`-tuple of partitions.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Multipartition {
    components: Vec<Partition>,
}

impl Multipartition {
    /// Fails only if `components` is empty (the level must be at least 1).
    pub fn new(components: Vec<Partition>) -> Result<Self> {
        if components.is_empty() {
            return Err(Error::LevelMismatch {
                expected: 1,
                found: 0,
            });
        }
        Ok(Self { components })
    }

    pub fn empty(level: usize) -> Self {
        assert!(level >= 1, "level must be positive");
        Self {
            components: vec![Partition::empty(); level],
        }
    }

    pub fn level(&self) -> usize {
        self.components.len()
    }

    pub fn rank(&self) -> usize {
        self.components.iter().map(Partition::rank).sum()
    }

    pub fn components(&self) -> &[Partition] {
        &self.components
    }

    pub fn component(&self, a: usize) -> &Partition {
        &self.components[a]
    }

    pub fn into_components(self) -> Vec<Partition> {
        self.components
    }

    pub fn nodes(&self) -> impl Iterator<Item = Node> + '_ {
        self.components
            .iter()
            .enumerate()
            .flat_map(|(a, p)| p.nodes().map(move |(i, j)| Node::new(a, i, j)))
    }

    /// All parts of all components, sorted weakly decreasing.
    pub fn bar(&self) -> Partition {
        let mut parts: Vec<usize> = self
            .components
            .iter()
            .flat_map(|p| p.parts().iter().copied())
            .collect();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    /// Restriction to the listed components, in the given order.
    pub fn restrict(&self, indices: &[usize]) -> Multipartition {
        Multipartition {
            components: indices
                .iter()
                .map(|&i| self.components[i].clone())
                .collect(),
        }
    }

    /// Reorders components so that old component `i` lands at `perm[i]`.
    pub fn permute(&self, perm: &[usize]) -> Multipartition {
        let mut components = vec![Partition::empty(); self.level()];
        for (old, &new) in perm.iter().enumerate() {
            components[new] = self.components[old].clone();
        }
        Multipartition { components }
    }
}

impl fmt::Display for Multipartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.components.iter().map(|p| p.to_string()).collect();
        f.write_str(&s.join("|"))
    }
}

impl FromStr for Multipartition {
    type Err = Error;

    /// Components separated by `|`, parts by `.`, empty component `0`.
    fn from_str(s: &str) -> Result<Self> {
        let components = s
            .split('|')
            .map(Partition::from_str)
            .collect::<Result<Vec<_>>>()?;
        Multipartition::new(components)
    }
}

impl Serialize for Multipartition {
    fn serialize<S: serde::Serializer>(
        &self,
        serializer: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Multipartition {
    fn deserialize<D: serde::Deserializer<'de>>(
        deserializer: D,
    ) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// A multicharge `(s_0, ..., s_{l-1})`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Multicharge(pub Vec<i64>);

impl Multicharge {
    pub fn new(charges: Vec<i64>) -> Self {
        Self(charges)
    }

    pub fn zero(level: usize) -> Self {
        Self(vec![0; level])
    }

    pub fn level(&self) -> usize {
        self.0.len()
    }

    pub fn as_slice(&self) -> &[i64] {
        &self.0
    }

    pub fn get(&self, a: usize) -> i64 {
        self.0[a]
    }

    pub fn is_sorted(&self) -> bool {
        self.0.windows(2).all(|w| w[0] <= w[1])
    }

    /// Membership in `A_e^l`: `s_0 <= s_1 <= ... <= s_{l-1} <= s_0 + e`.
    pub fn in_fundamental_domain(&self, e: u32) -> bool {
        self.is_sorted()
            && match (self.0.first(), self.0.last()) {
                (Some(first), Some(last)) => *last <= first + e as i64,
                _ => true,
            }
    }

    pub(crate) fn check_level(&self, level: usize) -> Result<()> {
        if self.level() != level {
            return Err(Error::LevelMismatch {
                expected: level,
                found: self.level(),
            });
        }
        Ok(())
    }
}

impl fmt::Display for Multicharge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(|c| c.to_string()).collect();
        f.write_str(&s.join(","))
    }
}

impl FromStr for Multicharge {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let charges = s
            .split(',')
            .map(|c| {
                c.trim().parse::<i64>().map_err(|_| Error::Parse {
                    input: s.to_string(),
                    reason: "charges must be comma-separated integers".into(),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Multicharge(charges))
    }
}

/// All partitions of `n`, in decreasing lexicographic order.
pub fn partitions(n: usize) -> Vec<Partition> {
    fn rec(n: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if n == 0 {
            out.push(Partition {
                parts: prefix.clone(),
            });
            return;
        }
        for k in (1..=n.min(max)).rev() {
            prefix.push(k);
            rec(n - k, k, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

/// Every `l`-multipartition of rank `n`, each exactly once.
///
/// Order: decreasing lexicographic on the vector of component ranks, then
/// decreasing lexicographic on parts, component 0 varying slowest. For
/// `l = 2, n = 2` this gives `2|0, 1.1|0, 1|1, 0|2, 0|1.1`.
pub fn enumerate_multipartitions(l: usize, n: usize) -> Vec<Multipartition> {
    assert!(l >= 1, "level must be positive");
    let tables: Vec<Vec<Partition>> = (0..=n).map(partitions).collect();
    let mut out = Vec::new();
    let mut ranks = Vec::with_capacity(l);
    rank_vectors(l, n, &mut ranks, &mut |ranks| {
        let mut current = Vec::with_capacity(l);
        product(ranks, &tables, &mut current, &mut out);
    });
    out
}

fn rank_vectors(l: usize, n: usize, prefix: &mut Vec<usize>, visit: &mut dyn FnMut(&[usize])) {
    if prefix.len() + 1 == l {
        prefix.push(n);
        visit(prefix);
        prefix.pop();
        return;
    }
    for k in (0..=n).rev() {
        prefix.push(k);
        rank_vectors(l, n - k, prefix, visit);
        prefix.pop();
    }
}

fn product(
    ranks: &[usize],
    tables: &[Vec<Partition>],
    current: &mut Vec<Partition>,
    out: &mut Vec<Multipartition>,
) {
    let depth = current.len();
    if depth == ranks.len() {
        out.push(Multipartition {
            components: current.clone(),
        });
        return;
    }
    for p in &tables[ranks[depth]] {
        current.push(p.clone());
        product(ranks, tables, current, out);
        current.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn conjugate_examples() {
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
        assert_eq!(p(&[5, 4, 2, 1, 1]).conjugate(), p(&[5, 3, 2, 2, 1]));
        assert_eq!(p(&[3]).conjugate(), p(&[1, 1, 1]));
    }

    #[test]
    fn rejects_increasing_parts() {
        assert!(matches!(
            Partition::new(vec![1, 2]),
            Err(Error::NotDecreasing(_))
        ));
        assert_eq!(Partition::new(vec![2, 1, 0, 0]).unwrap(), p(&[2, 1]));
    }

    #[test]
    fn generalized_hook_examples() {
        let lam = p(&[5, 4, 2, 1, 1]);
        assert_eq!(lam.generalized_hook(&lam, 1, 1).unwrap(), 9);
        let row = p(&[6]);
        for j in 1..=6 {
            assert_eq!(
                row.generalized_hook(&Partition::empty(), 1, j).unwrap(),
                6 - j as i64
            );
        }
        let one = p(&[1]);
        assert_eq!(one.generalized_hook(&one, 1, 1).unwrap(), 1);
        assert_eq!(
            lam.generalized_hook(&lam, 2, 5),
            Err(Error::NodeOutside { row: 2, col: 5 })
        );
    }

    #[test]
    fn hook_multisets() {
        assert!(Partition::empty().hooks_multiset().is_empty());
        assert_eq!(p(&[2]).hooks_multiset().to_sorted_vec(), vec![1, 2]);
        assert_eq!(p(&[2, 1]).hooks_multiset().to_sorted_vec(), vec![1, 1, 3]);
    }

    #[test]
    fn n_invariant_examples() {
        assert_eq!(Partition::empty().n_invariant(), 0);
        assert_eq!(p(&[5, 4, 2, 1, 1]).n_invariant(), 15);
        for k in 1..8 {
            assert_eq!(p(&vec![1; k]).n_invariant(), k * (k - 1) / 2);
        }
    }

    #[test]
    fn bar_sorts_all_parts() {
        let mp: Multipartition = "2|1|1.1".parse().unwrap();
        assert_eq!(mp.bar(), p(&[2, 1, 1, 1]));
        let mp: Multipartition = "3.1|2.1.1".parse().unwrap();
        assert_eq!(mp.bar(), p(&[3, 2, 1, 1, 1]));
        assert_eq!(Multipartition::empty(4).bar(), Partition::empty());
    }

    #[test]
    fn charged_content_examples() {
        assert_eq!(charged_content(&Node::new(0, 1, 1), 0), 1);
        assert_eq!(charged_content(&Node::new(0, 2, 1), 0), 0);
        assert_eq!(charged_content(&Node::new(0, 1, 3), 2), 5);
    }

    #[test]
    fn grammar() {
        let mp: Multipartition = "3.1|2.1.1".parse().unwrap();
        assert_eq!(mp.components(), &[p(&[3, 1]), p(&[2, 1, 1])]);
        let mp: Multipartition = "2|0|1.1".parse().unwrap();
        assert_eq!(mp.components(), &[p(&[2]), Partition::empty(), p(&[1, 1])]);
        assert_eq!(mp.to_string(), "2|0|1.1");
        assert!("1.2".parse::<Multipartition>().is_err());
        assert!("1||2".parse::<Multipartition>().is_err());
        assert!("a".parse::<Multipartition>().is_err());
        assert!("2.0.1".parse::<Multipartition>().is_err());
        let s: Multicharge = "0, 2".parse().unwrap();
        assert_eq!(s, Multicharge(vec![0, 2]));
        assert!("0;2".parse::<Multicharge>().is_err());
    }

    #[test]
    fn enumeration_examples() {
        assert_eq!(
            enumerate_multipartitions(1, 0),
            vec![Multipartition::empty(1)]
        );
        let two: Vec<String> = enumerate_multipartitions(2, 1)
            .iter()
            .map(|m| m.to_string())
            .collect();
        assert_eq!(two, ["1|0", "0|1"]);
        let five: Vec<String> = enumerate_multipartitions(2, 2)
            .iter()
            .map(|m| m.to_string())
            .collect();
        assert_eq!(five, ["2|0", "1.1|0", "1|1", "0|2", "0|1.1"]);
    }

    #[test]
    fn fundamental_domain() {
        assert!(Multicharge(vec![0, 1, 3]).in_fundamental_domain(3));
        assert!(!Multicharge(vec![0, 1, 4]).in_fundamental_domain(3));
        assert!(!Multicharge(vec![1, 0]).in_fundamental_domain(3));
    }

    #[test]
    fn permute_moves_components() {
        let mp: Multipartition = "2|1|0".parse().unwrap();
        assert_eq!(mp.permute(&[2, 0, 1]).to_string(), "1|0|2");
    }
}
