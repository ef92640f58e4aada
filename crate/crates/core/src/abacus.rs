//! β-numbers, `l`-abaci and charged hook lengths.
//!
//! A component with charge `s` and window `m` is stored as the strictly
//! decreasing tuple `(β_1, ..., β_{m+s})` with `β_j = λ_j - j + s + 1`; the
//! last entry is always `1 - m`, and every position `<= -m` is implicitly
//! a bead.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::multiset::Multiset;
use crate::partition::{Multicharge, Multipartition, Partition};

/// The tuple of `s`-charged β-numbers of `p` in a window of size `m`.
pub fn beta_numbers(p: &Partition, s: i64, m: i64) -> Result<Vec<i64>> {
    let len = m + s;
    if m < 1 || len < 1 || (len as usize) <= p.len() {
        return Err(Error::WindowTooSmall {
            m,
            charge: s,
            parts: p.len(),
        });
    }
    Ok((1..=len)
        .map(|j| p.part(j as usize) as i64 - j + s + 1)
        .collect())
}

/// Inverse of [`beta_numbers`]: recovers the partition and its charge.
pub fn partition_from_beta(x: &[i64], m: i64) -> Result<(Partition, i64)> {
    if m < 1 {
        return Err(Error::MalformedBeta(format!(
            "window m={m} must be positive"
        )));
    }
    if x.last() != Some(&(1 - m)) {
        return Err(Error::MalformedBeta(format!(
            "{x:?} must end with 1 - m = {}",
            1 - m
        )));
    }
    if x.windows(2).any(|w| w[0] <= w[1]) {
        return Err(Error::MalformedBeta(format!(
            "{x:?} is not strictly decreasing"
        )));
    }
    let s = x.len() as i64 - m;
    let parts = x
        .iter()
        .enumerate()
        .map(|(idx, &b)| (b + idx as i64 + 1 - s - 1) as usize)
        .collect();
    Ok((Partition::new(parts)?, s))
}

/// An `l`-abacus in a fixed window.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BetaConfig {
    components: Vec<Vec<i64>>,
    m: i64,
}

impl BetaConfig {
    /// Validates raw bead tuples; the charge of component `c` is
    /// `|X^c| - m`.
    pub fn from_components(components: Vec<Vec<i64>>, m: i64) -> Result<Self> {
        if components.is_empty() {
            return Err(Error::LevelMismatch {
                expected: 1,
                found: 0,
            });
        }
        for x in &components {
            partition_from_beta(x, m)?;
        }
        Ok(Self { components, m })
    }

    pub fn level(&self) -> usize {
        self.components.len()
    }

    pub fn window(&self) -> i64 {
        self.m
    }

    pub fn component(&self, c: usize) -> &[i64] {
        &self.components[c]
    }

    pub fn components(&self) -> &[Vec<i64>] {
        &self.components
    }

    pub fn charge(&self) -> Multicharge {
        Multicharge(
            self.components
                .iter()
                .map(|x| x.len() as i64 - self.m)
                .collect(),
        )
    }

    /// Reads the abacus back as a charged multipartition.
    pub fn to_multipartition(&self) -> (Multipartition, Multicharge) {
        let components = self
            .components
            .iter()
            .map(|x| {
                partition_from_beta(x, self.m)
                    .expect("validated on construction")
                    .0
            })
            .collect();
        (
            Multipartition::new(components).expect("level is positive"),
            self.charge(),
        )
    }

    /// Whether position `x` holds a bead in component `c`.
    pub fn has_bead(&self, c: usize, x: i64) -> bool {
        x <= -self.m || self.components[c].contains(&x)
    }

    /// Empty positions of component `b`, left to right. Infinite.
    pub fn gaps(&self, b: usize) -> impl Iterator<Item = i64> + '_ {
        let start = 2 - self.m;
        (start..).filter(move |&y| !self.components[b].contains(&y))
    }

    /// Number of empty positions to the left of `x` in component `c`.
    pub fn gaps_left_of(&self, c: usize, x: i64) -> usize {
        let beads_between = self.components[c]
            .iter()
            .filter(|&&y| y > 1 - self.m && y < x)
            .count();
        (x - (1 - self.m) - 1).max(0) as usize - beads_between
    }

    fn bead_index(&self, c: usize, x: i64) -> Result<()> {
        if self.components[c].contains(&x) {
            Ok(())
        } else {
            Err(Error::NotABead {
                component: c,
                value: x,
            })
        }
    }
}

/// `X[λ, m]` for a charged multipartition.
pub fn multi_beta(mp: &Multipartition, s: &Multicharge, m: i64) -> Result<BetaConfig> {
    s.check_level(mp.level())?;
    let components = mp
        .components()
        .iter()
        .zip(s.as_slice())
        .map(|(p, &sc)| beta_numbers(p, sc, m))
        .collect::<Result<Vec<_>>>()?;
    Ok(BetaConfig { components, m })
}

/// Smallest window size that is always valid: the largest number of parts
/// of any component, plus `max |s_i|`, plus one.
pub fn default_window(mp: &Multipartition, s: &Multicharge) -> i64 {
    let parts = mp
        .components()
        .iter()
        .map(Partition::len)
        .max()
        .unwrap_or(0) as i64;
    let charge = s.as_slice().iter().map(|c| c.abs()).max().unwrap_or(0);
    parts + charge + 1
}

/// A multiset of charged hook lengths `h + s_a - s_b`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChargedHookMultiset {
    pub hooks: Multiset,
    /// Whether the `a = b` terms are present.
    pub diagonal_included: bool,
}

/// Brute-force charged hooks: every ordered component pair `(a, b)` and
/// every node of `λ^a`.
pub fn charged_hooks_direct(
    mp: &Multipartition,
    s: &Multicharge,
    include_diagonal: bool,
) -> Result<ChargedHookMultiset> {
    s.check_level(mp.level())?;
    let mut hooks = Multiset::new();
    for (a, la) in mp.components().iter().enumerate() {
        for (b, lb) in mp.components().iter().enumerate() {
            if a == b && !include_diagonal {
                continue;
            }
            for (i, j) in la.nodes() {
                hooks.insert(la.generalized_hook(lb, i, j)? + s.get(a) - s.get(b));
            }
        }
    }
    Ok(ChargedHookMultiset {
        hooks,
        diagonal_included: include_diagonal,
    })
}

/// `H^b(x) = { x - y^b_d : d = 1..δ(x) }` for a bead `x` of component `a`.
pub fn bead_hooks(cfg: &BetaConfig, a: usize, x: i64, b: usize) -> Result<Vec<i64>> {
    cfg.bead_index(a, x)?;
    let delta = cfg.gaps_left_of(a, x);
    Ok(cfg.gaps(b).take(delta).map(|y| x - y).collect())
}

/// Charged hooks read off the abacus by the bead/gap procedure.
pub fn charged_hooks_abacus(cfg: &BetaConfig, include_diagonal: bool) -> ChargedHookMultiset {
    let mut hooks = Multiset::new();
    let l = cfg.level();
    for a in 0..l {
        for &x in cfg.component(a) {
            let delta = cfg.gaps_left_of(a, x);
            if delta == 0 {
                continue;
            }
            for b in 0..l {
                if a == b && !include_diagonal {
                    continue;
                }
                for y in cfg.gaps(b).take(delta) {
                    hooks.insert(x - y);
                }
            }
        }
    }
    ChargedHookMultiset {
        hooks,
        diagonal_included: include_diagonal,
    }
}

/// Whether `0 ∈ H^{c2}(x)` for a bead `x` of component `c1`, decided by
/// comparing bead counts below `x`.
pub fn zero_membership(cfg: &BetaConfig, c1: usize, c2: usize, x: i64) -> Result<bool> {
    cfg.bead_index(c1, x)?;
    if cfg.component(c2).contains(&x) {
        return Ok(false);
    }
    let below = |c: usize| cfg.component(c).iter().filter(|&&y| y < x).count();
    Ok(below(c1) < below(c2))
}

/// `N_k(x)` for a bead `x` of component `c`.
///
/// For `k = 0` this counts later components missing `x`; for `k > 0` it
/// counts components with an empty slot at `x - ke` inside the window.
pub fn n_k(cfg: &BetaConfig, c: usize, x: i64, k: u32, e: u32) -> Result<usize> {
    cfg.bead_index(c, x)?;
    if k == 0 {
        return Ok((c + 1..cfg.level())
            .filter(|&t| !cfg.component(t).contains(&x))
            .count());
    }
    if e < 2 {
        return Err(Error::InvalidModulus { e, min: 2 });
    }
    let target = x - k as i64 * e as i64;
    if target <= -cfg.window() {
        return Ok(0);
    }
    Ok((0..cfg.level())
        .filter(|&t| !cfg.component(t).contains(&target))
        .count())
}

/// Number of charged hooks equal to zero, as `Σ N_0(x)`.
///
/// Requires a weakly increasing multicharge.
pub fn count_zero_hooks(cfg: &BetaConfig) -> Result<usize> {
    let charge = cfg.charge();
    if !charge.is_sorted() {
        return Err(Error::UnsortedCharge(charge.0));
    }
    let mut total = 0;
    for c in 0..cfg.level() {
        for &x in cfg.component(c) {
            total += n_k(cfg, c, x, 0, 0)?;
        }
    }
    Ok(total)
}

/// Number of charged hooks (diagonal included) divisible by `e`, as
/// `Σ_x Σ_{k>=0} N_k(x)`.
///
/// Requires the multicharge to lie in `A_e^l`. The sum over `k` stops once
/// `x - ke <= -m`, after which every term vanishes.
pub fn count_divisible_hooks(cfg: &BetaConfig, e: u32) -> Result<usize> {
    if e < 2 {
        return Err(Error::InvalidModulus { e, min: 2 });
    }
    let charge = cfg.charge();
    if !charge.in_fundamental_domain(e) {
        return Err(Error::OutsideFundamentalDomain {
            charge: charge.0,
            e,
        });
    }
    let mut total = 0;
    for c in 0..cfg.level() {
        for &x in cfg.component(c) {
            total += n_k(cfg, c, x, 0, e)?;
            let mut k = 1;
            while x - (k as i64) * (e as i64) > -cfg.window() {
                total += n_k(cfg, c, x, k, e)?;
                k += 1;
            }
        }
    }
    Ok(total)
}

/// Reduces each charge into `[0, e)` and sorts, so the result lies in
/// `A_e^l`. The returned permutation sends old component `i` to `perm[i]`;
/// apply it to a multipartition with [`Multipartition::permute`].
pub fn normalize_multicharge(s: &Multicharge, e: u32) -> (Multicharge, Vec<usize>) {
    let reduced: Vec<i64> = s
        .as_slice()
        .iter()
        .map(|c| c.rem_euclid(e as i64))
        .collect();
    let mut order: Vec<usize> = (0..reduced.len()).collect();
    order.sort_by_key(|&i| reduced[i]);
    let mut perm = vec![0; reduced.len()];
    for (new, &old) in order.iter().enumerate() {
        perm[old] = new;
    }
    let sorted = order.iter().map(|&i| reduced[i]).collect();
    (Multicharge(sorted), perm)
}

/// ASCII picture of the abacus: component `l-1` on top, `#` for a bead,
/// `.` for an empty position, `|` between positions -1 and 0, and a row
/// of position labels underneath.
pub fn render_abacus(cfg: &BetaConfig) -> String {
    let lo = -cfg.window();
    let top = cfg
        .components()
        .iter()
        .filter_map(|x| x.first().copied())
        .max()
        .unwrap_or(0);
    let hi = top.max(0) + 2;
    let mut out = String::new();
    for c in (0..cfg.level()).rev() {
        let _ = write!(out, "{c:>3} ");
        for x in lo..=hi {
            if x == 0 {
                out.push_str(" |");
            }
            out.push_str(if cfg.has_bead(c, x) { "  #" } else { "  ." });
        }
        out.push('\n');
    }
    out.push_str("    ");
    for x in lo..=hi {
        if x == 0 {
            out.push_str("  ");
        }
        let _ = write!(out, "{x:>3}");
    }
    out.push('\n');
    out
}
