//! Fayers weights, `(e, s)`-cores and residue-content block keys.
//!
//! The residue of a node `(row, col)` of component `a` is
//! `col - row + s_a (mod e)`.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::abacus::{multi_beta, BetaConfig};
use crate::error::{Error, Result};
use crate::partition::{Multicharge, Multipartition, Partition};

/// Number of nodes of each residue class mod `e`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ResidueVector {
    pub e: u32,
    pub counts: Vec<usize>,
}

impl ResidueVector {
    pub fn total(&self) -> usize {
        self.counts.iter().sum()
    }

    /// `c_i` for any integer `i`, read mod `e`.
    pub fn get(&self, i: i64) -> usize {
        self.counts[i.rem_euclid(self.e as i64) as usize]
    }
}

fn check_modulus(e: u32) -> Result<()> {
    if e < 2 {
        return Err(Error::InvalidModulus { e, min: 2 });
    }
    Ok(())
}

pub fn residue_vector(mp: &Multipartition, s: &Multicharge, e: u32) -> Result<ResidueVector> {
    check_modulus(e)?;
    s.check_level(mp.level())?;
    let mut counts = vec![0; e as usize];
    for node in mp.nodes() {
        let r = (node.content() + s.get(node.component)).rem_euclid(e as i64);
        counts[r as usize] += 1;
    }
    Ok(ResidueVector { e, counts })
}

/// Fayers' weight `Σ_i c_{s_i} - ½ Σ_i (c_i - c_{i-1})²`.
pub fn fayers_weight(mp: &Multipartition, s: &Multicharge, e: u32) -> Result<usize> {
    let c = residue_vector(mp, s, e)?;
    let linear: i64 = s.as_slice().iter().map(|&si| c.get(si) as i64).sum();
    let squares: i64 = (0..e as i64)
        .map(|i| {
            let d = c.get(i) as i64 - c.get(i - 1) as i64;
            d * d
        })
        .sum();
    if squares % 2 != 0 {
        return Err(Error::Invariant(format!(
            "odd square sum {squares} in weight formula"
        )));
    }
    let w = linear - squares / 2;
    usize::try_from(w).map_err(|_| Error::Invariant(format!("negative weight {w}")))
}

/// Two residue-content classes: equal keys put multipartitions of equal
/// rank in the same block.
pub fn proxy_block_key(mp: &Multipartition, s: &Multicharge, e: u32) -> Result<ResidueVector> {
    residue_vector(mp, s, e)
}

/// One elementary move of the abacus reduction.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Move {
    /// Bead at `x` moves from component `c - 1` up to component `c`.
    Lift { c: usize, x: i64 },
    /// Bead at `x` of the top component moves to `x - e` in component 0.
    Wrap { x: i64 },
}

/// The `(e, s)`-core of a charged multipartition with its weight.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoreResult {
    pub core: Multipartition,
    /// Charges of the terminal abacus, as read off its bead counts.
    pub charges: Multicharge,
    pub weight: usize,
}

struct Abacus {
    beads: Vec<BTreeSet<i64>>,
    m: i64,
    e: i64,
}

impl Abacus {
    fn lifts(&self) -> Vec<Move> {
        let mut out = Vec::new();
        for c in 1..self.beads.len() {
            for &x in self.beads[c - 1].iter().rev() {
                if !self.beads[c].contains(&x) {
                    out.push(Move::Lift { c, x });
                }
            }
        }
        out
    }

    fn wraps(&self) -> Vec<Move> {
        let top = self.beads.len() - 1;
        self.beads[top]
            .iter()
            .rev()
            .filter(|&&x| x - self.e > -self.m && !self.beads[0].contains(&(x - self.e)))
            .map(|&x| Move::Wrap { x })
            .collect()
    }

    fn apply(&mut self, mv: Move) {
        match mv {
            Move::Lift { c, x } => {
                self.beads[c - 1].remove(&x);
                self.beads[c].insert(x);
            }
            Move::Wrap { x } => {
                let top = self.beads.len() - 1;
                self.beads[top].remove(&x);
                self.beads[0].insert(x - self.e);
            }
        }
    }
}

/// Runs the abacus reduction, letting `choose` pick among the currently
/// applicable moves (it receives a nonempty list and returns an index).
/// Lifts are always exhausted before any wrap is considered.
pub fn reduce_with<F>(cfg: &BetaConfig, e: u32, mut choose: F) -> Result<(BetaConfig, usize)>
where
    F: FnMut(&[Move]) -> usize,
{
    check_modulus(e)?;
    let charge = cfg.charge();
    if !charge.in_fundamental_domain(e) {
        return Err(Error::OutsideFundamentalDomain {
            charge: charge.0,
            e,
        });
    }
    let mut ab = Abacus {
        beads: cfg
            .components()
            .iter()
            .map(|x| x.iter().copied().collect())
            .collect(),
        m: cfg.window(),
        e: e as i64,
    };
    let mut moves = 0;
    loop {
        let mut options = ab.lifts();
        if options.is_empty() {
            options = ab.wraps();
        }
        if options.is_empty() {
            break;
        }
        let pick = choose(&options);
        ab.apply(options[pick]);
        moves += 1;
    }
    let components = ab
        .beads
        .into_iter()
        .map(|set| set.into_iter().rev().collect())
        .collect();
    Ok((
        BetaConfig::from_components(components, cfg.window())?,
        moves,
    ))
}

// Lifts come ordered by c, then by decreasing x; wraps by decreasing x.
fn deterministic(_options: &[Move]) -> usize {
    0
}

/// `(e, s)`-core and weight by the abacus reduction in window `m`.
///
/// Requires `s ∈ A_e^l`.
pub fn core(mp: &Multipartition, s: &Multicharge, m: i64, e: u32) -> Result<CoreResult> {
    check_modulus(e)?;
    s.check_level(mp.level())?;
    if !s.in_fundamental_domain(e) {
        return Err(Error::OutsideFundamentalDomain {
            charge: s.0.clone(),
            e,
        });
    }
    let cfg = multi_beta(mp, s, m)?;
    let (terminal, weight) = reduce_with(&cfg, e, deterministic)?;
    let (core, charges) = terminal.to_multipartition();
    Ok(CoreResult {
        core,
        charges,
        weight,
    })
}

/// Weight as the number of moves of the abacus reduction.
pub fn uglov_weight(mp: &Multipartition, s: &Multicharge, m: i64, e: u32) -> Result<usize> {
    core(mp, s, m, e).map(|c| c.weight)
}

/// Classical `e`-core by repeatedly removing rim `e`-hooks, always taking
/// the hook of the topmost (then leftmost) node with hook length `e`.
/// Returns the core and the number of hooks removed.
pub fn ecore_classical(p: &Partition, e: u32) -> Result<(Partition, usize)> {
    check_modulus(e)?;
    let e = e as i64;
    let mut current = p.clone();
    let mut removed = 0;
    loop {
        let found = current.nodes().find(|&(i, j)| current.hook(i, j) == e);
        let Some((i, j)) = found else { break };
        let leg = current.column_height(j) - i;
        let mut parts = current.parts().to_vec();
        for r in i..i + leg {
            parts[r - 1] = current.part(r + 1) - 1;
        }
        parts[i + leg - 1] = j - 1;
        current = Partition::new(parts)?;
        removed += 1;
    }
    Ok((current, removed))
}

/// Whether the hook multiset of the `e`-core is contained in that of `p`.
pub fn bgo_check(p: &Partition, e: u32) -> Result<bool> {
    let (core, _) = ecore_classical(p, e)?;
    Ok(core.hooks_multiset().is_submultiset_of(&p.hooks_multiset()))
}
