//! Exhaustive block scan: every multipartition of a given level and rank is
//! evaluated four ways (Fayers weight, abacus reduction, divisible charged
//! hooks, Schur-element defect) and grouped by residue content.
//!
//! A block is flagged when its members disagree on the defect or when any
//! member's four values disagree with each other.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::abacus::{count_divisible_hooks, default_window, multi_beta, normalize_multicharge};
use crate::error::{Error, Result};
use crate::extensions::orbit;
use crate::partition::{enumerate_multipartitions, Multicharge, Multipartition};
use crate::schur::defect_integer;
use crate::weight::{core, fayers_weight, proxy_block_key, ResidueVector};

/// Signature of the defect computation under test.
pub type DefectFn = dyn Fn(&Multipartition, &Multicharge, u32) -> Result<usize> + Sync;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanParams {
    pub l: usize,
    pub n: usize,
    pub e: u32,
    pub charge: Multicharge,
    /// Number of packages for the `σ`-orbit column; must divide `l`.
    pub p: Option<usize>,
}

impl ScanParams {
    pub fn validate(&self) -> Result<()> {
        if self.l == 0 {
            return Err(Error::InvalidSpec("level must be positive".into()));
        }
        if self.e < 2 {
            return Err(Error::InvalidModulus { e: self.e, min: 2 });
        }
        self.charge.check_level(self.l)?;
        if let Some(p) = self.p {
            if p == 0 || !self.l.is_multiple_of(p) {
                return Err(Error::NotDivisible {
                    level: self.l,
                    d: p,
                });
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MemberReport {
    pub multipartition: Multipartition,
    pub fayers_weight: usize,
    pub uglov_weight: usize,
    pub hook_count: usize,
    pub defect: usize,
    /// Core of the input after its charge is normalised into `A_e^l`.
    pub core: Multipartition,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub orbit_size: Option<usize>,
}

impl MemberReport {
    pub fn consistent(&self) -> bool {
        self.fayers_weight == self.uglov_weight
            && self.uglov_weight == self.hook_count
            && self.hook_count == self.defect
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlockReport {
    pub id: usize,
    pub key: ResidueVector,
    pub members: Vec<MemberReport>,
    /// Common defect, when all members agree.
    pub defect: Option<usize>,
    /// Common weight, when all members agree.
    pub weight: Option<usize>,
    pub violation: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanReport {
    pub l: usize,
    pub n: usize,
    pub e: u32,
    pub charge: Multicharge,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub p: Option<usize>,
    pub blocks: Vec<BlockReport>,
    pub violation: bool,
}

/// The four-way evaluation of one multipartition.
pub fn evaluate_member(
    mp: &Multipartition,
    params: &ScanParams,
    defect: &DefectFn,
) -> Result<MemberReport> {
    let s = &params.charge;
    let (normal, perm) = normalize_multicharge(s, params.e);
    let moved = mp.permute(&perm);
    let m = default_window(&moved, &normal);
    let reduced = core(&moved, &normal, m, params.e)?;
    let hook_count = count_divisible_hooks(&multi_beta(&moved, &normal, m)?, params.e)?;
    let orbit_size = match params.p {
        Some(p) => Some(orbit(mp, params.l / p, p)?.size),
        None => None,
    };
    Ok(MemberReport {
        multipartition: mp.clone(),
        fayers_weight: fayers_weight(mp, s, params.e)?,
        uglov_weight: reduced.weight,
        hook_count,
        defect: defect(mp, s, params.e)?,
        core: reduced.core,
        orbit_size,
    })
}

fn common<T: PartialEq + Copy>(mut values: impl Iterator<Item = T>) -> Option<T> {
    let first = values.next()?;
    values.all(|v| v == first).then_some(first)
}

/// Groups evaluated members into blocks, in order of first appearance.
pub fn assemble(params: &ScanParams, members: Vec<MemberReport>) -> Result<ScanReport> {
    let mut index: BTreeMap<ResidueVector, usize> = BTreeMap::new();
    let mut blocks: Vec<BlockReport> = Vec::new();
    for member in members {
        let key = proxy_block_key(&member.multipartition, &params.charge, params.e)?;
        let id = *index.entry(key.clone()).or_insert_with(|| {
            blocks.push(BlockReport {
                id: blocks.len(),
                key,
                members: Vec::new(),
                defect: None,
                weight: None,
                violation: false,
            });
            blocks.len() - 1
        });
        blocks[id].members.push(member);
    }
    for block in &mut blocks {
        block.defect = common(block.members.iter().map(|m| m.defect));
        block.weight = common(block.members.iter().map(|m| m.fayers_weight));
        block.violation = block.defect.is_none() || block.members.iter().any(|m| !m.consistent());
    }
    let violation = blocks.iter().any(|b| b.violation);
    Ok(ScanReport {
        l: params.l,
        n: params.n,
        e: params.e,
        charge: params.charge.clone(),
        p: params.p,
        blocks,
        violation,
    })
}

/// Sequential scan with a caller-supplied defect function.
pub fn scan_with(params: &ScanParams, defect: &DefectFn) -> Result<ScanReport> {
    params.validate()?;
    let members = enumerate_multipartitions(params.l, params.n)
        .iter()
        .map(|mp| evaluate_member(mp, params, defect))
        .collect::<Result<Vec<_>>>()?;
    assemble(params, members)
}

pub fn scan(params: &ScanParams) -> Result<ScanReport> {
    scan_with(params, &defect_integer)
}

fn opt(v: Option<usize>) -> String {
    v.map_or_else(|| "-".to_string(), |x| x.to_string())
}

/// Human-readable table.
pub fn render_text(report: &ScanReport) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "scan l={} n={} e={} s={}: {} blocks, {}",
        report.l,
        report.n,
        report.e,
        report.charge,
        report.blocks.len(),
        if report.violation { "VIOLATION" } else { "ok" }
    );
    for b in &report.blocks {
        let key: Vec<String> = b.key.counts.iter().map(usize::to_string).collect();
        let _ = writeln!(
            out,
            "block {} key ({}) defect {} weight {}{}",
            b.id,
            key.join(","),
            opt(b.defect),
            opt(b.weight),
            if b.violation { " VIOLATION" } else { "" }
        );
        for m in &b.members {
            let _ = writeln!(
                out,
                "  {:<20} fayers {} uglov {} hooks {} defect {} core {}",
                m.multipartition.to_string(),
                m.fayers_weight,
                m.uglov_weight,
                m.hook_count,
                m.defect,
                m.core
            );
        }
    }
    out
}
