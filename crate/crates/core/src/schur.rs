//! Schur elements of Ariki-Koike algebras as structured factor products,
//! their specialisations, and `Φ`-defects.
//!
//! The Schur element of the simple module labelled by `λ` is
//!
//! ```text
//! (-1)^{n(l-1)} q^{-N(λ̄)} Π_{a,(i,j)} [h^{λ^a,λ^a}_{i,j}]_q
//!     Π_{b≠a} (q^{h^{λ^a,λ^b}_{i,j}} Q_a Q_b^{-1} - 1)
//! ```
//!
//! Defects are computed factor by factor: no polynomial is expanded unless
//! [`specialize_integer`] is called explicitly.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::laurent::{LaurentPoly, TwistedLaurent};
use crate::partition::{Multicharge, Multipartition};
use crate::roots::{common_order, RootOfUnity};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GenericSchurFactors {
    pub sign: i8,
    pub q_exp: i64,
    /// Each `h` stands for `[h]_q`.
    pub qints: Vec<u64>,
    /// Each `(h, a, b)` stands for `q^h Q_a Q_b^{-1} - 1`.
    pub pairs: Vec<(i64, usize, usize)>,
}

impl GenericSchurFactors {
    /// `h + s_a - s_b` for every pair factor.
    pub fn charged_pairs<'a>(&'a self, s: &'a Multicharge) -> impl Iterator<Item = i64> + 'a {
        self.pairs
            .iter()
            .map(move |&(h, a, b)| h + s.get(a) - s.get(b))
    }
}

impl fmt::Display for GenericSchurFactors {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut factors = Vec::new();
        if self.q_exp != 0 {
            factors.push(format!("q^{}", self.q_exp));
        }
        for &h in self.qints.iter().filter(|&&h| h > 1) {
            factors.push(format!("[{h}]_q"));
        }
        for &(h, a, b) in &self.pairs {
            factors.push(format!("(q^{h} Q{a}/Q{b} - 1)"));
        }
        let sign = if self.sign < 0 { "-" } else { "" };
        if factors.is_empty() {
            write!(f, "{sign}1")
        } else {
            write!(f, "{sign}{}", factors.join(" "))
        }
    }
}

pub fn schur_factors(mp: &Multipartition) -> GenericSchurFactors {
    let l = mp.level();
    let n = mp.rank();
    let mut qints = Vec::with_capacity(n);
    let mut pairs = Vec::with_capacity(n * (l - 1));
    for node in mp.nodes() {
        let lam = mp.component(node.component);
        qints.push(lam.hook(node.row, node.col) as u64);
        for b in (0..l).filter(|&b| b != node.component) {
            let h = lam
                .generalized_hook(mp.component(b), node.row, node.col)
                .expect("node of the diagram");
            pairs.push((h, node.component, b));
        }
    }
    GenericSchurFactors {
        sign: if (n * (l - 1)).is_multiple_of(2) {
            1
        } else {
            -1
        },
        q_exp: -(mp.bar().n_invariant() as i64),
        qints,
        pairs,
    }
}

/// The Schur element under `Q_a -> y^{s_a}`, `q -> y`, fully expanded.
pub fn specialize_integer(mp: &Multipartition, s: &Multicharge) -> Result<LaurentPoly> {
    s.check_level(mp.level())?;
    let factors = schur_factors(mp);
    let mut out = LaurentPoly::y_pow(factors.q_exp);
    if factors.sign < 0 {
        out = -out;
    }
    for &(h, a, b) in &factors.pairs {
        if h + s.get(a) - s.get(b) == 0 {
            return Err(Error::BadSpecialisation { a, b, hook: h });
        }
    }
    for &h in &factors.qints {
        out.mul_q_integer(h, 1);
    }
    for ch in factors.charged_pairs(s) {
        out.mul_y_pow_minus_one(ch);
    }
    Ok(out)
}

/// The Schur element under `Q_a -> ω^a y^{r_a}`, `q -> y^{q_exp}`, with
/// `ω` a formal primitive `l`-th root of unity, fully expanded.
pub fn specialize_twisted(
    mp: &Multipartition,
    charges: &[i64],
    q_exp: i64,
) -> Result<TwistedLaurent> {
    let l = mp.level();
    if charges.len() != l {
        return Err(Error::LevelMismatch {
            expected: l,
            found: charges.len(),
        });
    }
    if q_exp == 0 {
        return Err(Error::InvalidSpec("q-exponent must be nonzero".into()));
    }
    let order = l as u32;
    let factors = schur_factors(mp);
    let mut out = TwistedLaurent::from_laurent(order, &LaurentPoly::y_pow(q_exp * factors.q_exp));
    if factors.sign < 0 {
        out = out.neg();
    }
    for &h in &factors.qints {
        out.mul_q_integer(h, q_exp);
    }
    for &(h, a, b) in &factors.pairs {
        out.mul_twisted_minus_one(q_exp * h + charges[a] - charges[b], a as i64 - b as i64);
    }
    Ok(out)
}

/// Multiplicity of `Φ_e` in the integer specialisation, read off the
/// factors. For `e >= 2` zero charged hooks count as divisible; for `e = 1`
/// only nonzero charged hooks contribute.
pub fn defect_integer(mp: &Multipartition, s: &Multicharge, e: u32) -> Result<usize> {
    if e == 0 {
        return Err(Error::InvalidModulus { e, min: 1 });
    }
    s.check_level(mp.level())?;
    let factors = schur_factors(mp);
    if e == 1 {
        return Ok(factors.charged_pairs(s).filter(|&ch| ch != 0).count());
    }
    let e = e as i64;
    let q = factors.qints.iter().filter(|&&h| h as i64 % e == 0).count();
    let p = factors
        .charged_pairs(s)
        .filter(|ch| ch.rem_euclid(e) == 0)
        .count();
    Ok(q + p)
}

/// Whether `1 + u + ... + u^{i-1}` vanishes for some `i <= n`.
fn quantum_factorial_vanishes(u: &RootOfUnity, n: usize) -> bool {
    let o = u.order() as usize;
    o > 1 && o <= n
}

fn linked(params: &[RootOfUnity], u: &RootOfUnity, n: usize, a: usize, b: usize) -> Result<bool> {
    let n = n as i64;
    for h in (1 - n)..n {
        if u.pow(h).mul(&params[a])? == params[b] {
            return Ok(true);
        }
    }
    Ok(false)
}

/// Ariki's criterion for the specialised algebra to be semisimple.
pub fn semisimple_check(params: &[RootOfUnity], u: &RootOfUnity, n: usize) -> Result<bool> {
    let mut all = params.to_vec();
    all.push(*u);
    common_order(&all)?;
    if quantum_factorial_vanishes(u, n) {
        return Ok(false);
    }
    for a in 0..params.len() {
        for b in a + 1..params.len() {
            if linked(params, u, n, a, b)? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

fn find(parent: &mut [usize], x: usize) -> usize {
    if parent[x] != x {
        let root = find(parent, parent[x]);
        parent[x] = root;
    }
    parent[x]
}

/// Classes of parameter indices linked by `u^h ξ_a = ξ_b`, `|h| < n`.
/// Each class is sorted; classes are ordered by their smallest member.
pub fn dipper_mathas_classes(
    params: &[RootOfUnity],
    u: &RootOfUnity,
    n: usize,
) -> Result<Vec<Vec<usize>>> {
    let mut all = params.to_vec();
    all.push(*u);
    common_order(&all)?;
    let l = params.len();
    let mut parent: Vec<usize> = (0..l).collect();
    for a in 0..l {
        for b in a + 1..l {
            if linked(params, u, n, a, b)? {
                let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
                parent[ra.max(rb)] = ra.min(rb);
            }
        }
    }
    let mut classes: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for a in 0..l {
        let root = find(&mut parent, a);
        classes.entry(root).or_default().push(a);
    }
    Ok(classes.into_values().collect())
}

/// Renders classes as `{{0,2},{1}}`.
pub fn format_classes(classes: &[Vec<usize>]) -> String {
    let inner: Vec<String> = classes
        .iter()
        .map(|c| {
            let items: Vec<String> = c.iter().map(usize::to_string).collect();
            format!("{{{}}}", items.join(","))
        })
        .collect();
    format!("{{{}}}", inner.join(","))
}

/// Exponents `s_j` in `[0, e)` with `ξ_{a_j} = u^{s_j} ξ_{a_1}`, where
/// `e` is the order of `u`.
pub fn class_multicharge(
    members: &[usize],
    params: &[RootOfUnity],
    u: &RootOfUnity,
) -> Result<Vec<i64>> {
    let Some(&first) = members.first() else {
        return Ok(Vec::new());
    };
    let e = u.order() as i64;
    members
        .iter()
        .map(|&a| {
            (0..e)
                .find(|&k| {
                    u.pow(k)
                        .mul(&params[first])
                        .map(|x| x == params[a])
                        .unwrap_or(false)
                })
                .ok_or(Error::NotInClass(a))
        })
        .collect()
}

/// A cyclotomic specialisation `Q_a -> η_l^a y^{r_a}`, `q -> y^r`,
/// valued at `y = η`, with `η_l = ζ_N^{N/l}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CycloSpec {
    level: usize,
    charges: Vec<i64>,
    q_exp: i64,
    eta: RootOfUnity,
}

impl CycloSpec {
    pub fn new(charges: Vec<i64>, q_exp: i64, eta: RootOfUnity) -> Result<Self> {
        let level = charges.len();
        if level == 0 {
            return Err(Error::InvalidSpec("no charges".into()));
        }
        if q_exp == 0 {
            return Err(Error::InvalidSpec("q-exponent must be nonzero".into()));
        }
        if !eta.ambient().is_multiple_of(level as u64) {
            return Err(Error::InvalidSpec(format!(
                "level {level} does not divide the ambient order {}",
                eta.ambient()
            )));
        }
        Ok(Self {
            level,
            charges,
            q_exp,
            eta,
        })
    }

    /// The specialisation equivalent to `Q_a -> ζ_e^{s_a}`, `q -> ζ_e`:
    /// ambient order `l e`, `η = ζ_{le}`, `r = l`, `r_a = l s_a - a e`.
    pub fn from_integer_multicharge(s: &Multicharge, e: u32) -> Result<Self> {
        if e == 0 {
            return Err(Error::InvalidModulus { e, min: 1 });
        }
        let l = s.level() as i64;
        let e = e as i64;
        let charges = s
            .as_slice()
            .iter()
            .enumerate()
            .map(|(a, &sa)| l * sa - a as i64 * e)
            .collect();
        Self::new(charges, l, RootOfUnity::new((l * e) as u64, 1)?)
    }

    pub fn level(&self) -> usize {
        self.level
    }

    pub fn charges(&self) -> &[i64] {
        &self.charges
    }

    pub fn q_exp(&self) -> i64 {
        self.q_exp
    }

    pub fn eta(&self) -> RootOfUnity {
        self.eta
    }

    fn ambient(&self) -> i64 {
        self.eta.ambient() as i64
    }

    /// The specialised parameters `ξ_a = η_l^a η^{r_a}` and `u = η^r`.
    pub fn parameters(&self) -> (Vec<RootOfUnity>, RootOfUnity) {
        let n = self.ambient();
        let step = n / self.level as i64;
        let t = self.eta.exponent() as i64;
        let xi = self
            .charges
            .iter()
            .enumerate()
            .map(|(a, &r)| {
                RootOfUnity::new(n as u64, a as i64 * step + r * t).expect("positive order")
            })
            .collect();
        (xi, self.eta.pow(self.q_exp))
    }
}

fn divides(n: i64, x: i64) -> bool {
    x.rem_euclid(n) == 0
}

/// Valuation at `η` of the specialised Schur element, factor by factor.
pub fn defect_general(mp: &Multipartition, spec: &CycloSpec) -> Result<usize> {
    if spec.level != mp.level() {
        return Err(Error::LevelMismatch {
            expected: spec.level,
            found: mp.level(),
        });
    }
    let n = spec.ambient();
    let t = spec.eta.exponent() as i64;
    let r = spec.q_exp;
    let step = n / spec.level as i64;
    let factors = schur_factors(mp);
    let mut total = 0i64;
    for &h in &factors.qints {
        let h = h as i64;
        total += divides(n, r * h * t) as i64 - divides(n, r * t) as i64;
    }
    for &(h, a, b) in &factors.pairs {
        let m = r * h + spec.charges[a] - spec.charges[b];
        if m == 0 {
            if a == b {
                return Err(Error::Invariant("pair factor within one component".into()));
            }
            continue;
        }
        let phase = (a as i64 - b as i64) * step;
        total += divides(n, phase + m * t) as i64;
    }
    usize::try_from(total).map_err(|_| Error::Invariant(format!("negative valuation {total}")))
}

/// The defect as a sum over Dipper-Mathas classes of integer defects of
/// the restricted multipartitions, with `e` the order of `u`.
pub fn defect_by_classes(
    mp: &Multipartition,
    params: &[RootOfUnity],
    u: &RootOfUnity,
) -> Result<usize> {
    if params.len() != mp.level() {
        return Err(Error::LevelMismatch {
            expected: params.len(),
            found: mp.level(),
        });
    }
    let e = u.order() as u32;
    let mut total = 0;
    for class in dipper_mathas_classes(params, u, mp.rank())? {
        let sub = mp.restrict(&class);
        if e == 1 {
            total += sub.rank() * (class.len() - 1);
        } else {
            let s = Multicharge::new(class_multicharge(&class, params, u)?);
            total += defect_integer(&sub, &s, e)?;
        }
    }
    Ok(total)
}
