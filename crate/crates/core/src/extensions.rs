//! The cyclic `σ`-action on multipartitions of level `p·d`, defects for
//! `G(l,p,n)` subalgebra modules, and Yokonuma-Hecke defects and blocks.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::{Multicharge, Multipartition};
use crate::schur::{
    defect_general, defect_integer, specialize_integer, specialize_twisted, CycloSpec,
};
use crate::weight::{proxy_block_key, ResidueVector};

fn package_count(level: usize, d: usize) -> Result<usize> {
    if d == 0 || !level.is_multiple_of(d) {
        return Err(Error::NotDivisible { level, d });
    }
    Ok(level / d)
}

/// Consecutive packages of `size` components.
pub fn packages(mp: &Multipartition, size: usize) -> Result<Vec<Multipartition>> {
    let count = package_count(mp.level(), size)?;
    Ok((0..count)
        .map(|k| mp.restrict(&(k * size..(k + 1) * size).collect::<Vec<_>>()))
        .collect())
}

/// Cyclic right shift by one package of `d` components.
pub fn sigma(mp: &Multipartition, d: usize) -> Result<Multipartition> {
    package_count(mp.level(), d)?;
    let l = mp.level();
    let comps = mp.components();
    Multipartition::new((0..l).map(|i| comps[(i + l - d) % l].clone()).collect())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SigmaOrbit {
    pub representative: Multipartition,
    pub size: usize,
    pub stabilizer: usize,
}

pub fn orbit(mp: &Multipartition, d: usize, p: usize) -> Result<SigmaOrbit> {
    if p == 0 || mp.level() != p * d {
        return Err(Error::LevelMismatch {
            expected: p * d,
            found: mp.level(),
        });
    }
    let mut current = sigma(mp, d)?;
    let mut size = 1;
    while &current != mp {
        current = sigma(&current, d)?;
        size += 1;
    }
    Ok(SigmaOrbit {
        representative: mp.clone(),
        size,
        stabilizer: p / size,
    })
}

fn check_periodic(charges: &[i64], d: usize) -> Result<()> {
    if d == 0
        || charges
            .iter()
            .enumerate()
            .any(|(i, &r)| r != charges[i % d])
    {
        return Err(Error::NotPeriodic(charges.to_vec()));
    }
    Ok(())
}

/// Defect of the subalgebra modules lying over `mp`; the orbit constant
/// `|Ω|/p` contributes nothing.
pub fn glpn_defect(mp: &Multipartition, d: usize, p: usize, spec: &CycloSpec) -> Result<usize> {
    orbit(mp, d, p)?;
    check_periodic(spec.charges(), d)?;
    defect_general(mp, spec)
}

/// Whether `mp` and `σ(mp)` have the same specialised Schur element under
/// `Q_a -> η_l^a y^{s_a}`, `q -> y`; when both integer specialisations
/// `Q_a -> y^{s_a}` are good, those must agree as well.
pub fn sigma_schur_invariance(
    mp: &Multipartition,
    d: usize,
    p: usize,
    s: &Multicharge,
) -> Result<bool> {
    orbit(mp, d, p)?;
    check_periodic(s.as_slice(), d)?;
    let image = sigma(mp, d)?;
    let twisted =
        specialize_twisted(mp, s.as_slice(), 1)? == specialize_twisted(&image, s.as_slice(), 1)?;
    let integer = match (specialize_integer(mp, s), specialize_integer(&image, s)) {
        (Ok(a), Ok(b)) => a == b,
        _ => true,
    };
    Ok(twisted && integer)
}

fn check_yokonuma(mp: &Multipartition, d: usize, l: usize, s: &Multicharge) -> Result<()> {
    if mp.level() != d * l {
        return Err(Error::LevelMismatch {
            expected: d * l,
            found: mp.level(),
        });
    }
    if s.level() != l {
        return Err(Error::LevelMismatch {
            expected: l,
            found: s.level(),
        });
    }
    Ok(())
}

/// Sum of the integer defects of the `d` packages of `l` components, all
/// charged by `s`.
pub fn yokonuma_defect(
    mp: &Multipartition,
    d: usize,
    l: usize,
    s: &Multicharge,
    e: u32,
) -> Result<usize> {
    check_yokonuma(mp, d, l, s)?;
    packages(mp, l)?
        .iter()
        .map(|pkg| defect_integer(pkg, s, e))
        .sum()
}

/// Per-package residue vectors, in package order.
pub fn yokonuma_block_key(
    mp: &Multipartition,
    d: usize,
    l: usize,
    s: &Multicharge,
    e: u32,
) -> Result<Vec<ResidueVector>> {
    check_yokonuma(mp, d, l, s)?;
    packages(mp, l)?
        .iter()
        .map(|pkg| proxy_block_key(pkg, s, e))
        .collect()
}
