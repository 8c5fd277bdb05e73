//! Fusion data `(H, Y, λ)` and the fusion subcategories they classify.
//!
//! With the engine's conventions the relations on `λ: Y × H → μ_N` read
//! - `λ(y, hh′) = λ(y, h)·λ(y, h′)·γ(h, h′; y)⁻¹`
//! - `λ(yz, h) = λ(y, h)·λ(z, h)·μ(h; y, z)`
//! - `λ(ᵍy, h) = λ(y, g⁻¹hg)·D_{g,y}(g⁻¹hg)`
//!
//! and a simple `S_{x,π}` lies in `C(H, Y, λ)` iff `x ∈ Y` and every `h ∈ H` acts on `π` by
//! the scalar `λ(x, h)`.

use std::collections::{BTreeMap, HashMap, VecDeque};
use std::fmt::Write as _;

use serde::Serialize;
use thiserror::Error;

use crate::crossed::PointedCrossedCategory;
use crate::cyclotomic::Root;
use crate::group::{GroupError, Subgroup};
use crate::projchar::{Cocycle2, ProjChar};
use crate::simples::{IrrSet, SimplesError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LatticeError {
    #[error("{0}")]
    InvalidDatum(String),
    #[error("relation {name} fails at {args:?}")]
    Relation { name: String, args: Vec<usize> },
    #[error("member set is not a fusion subcategory: {0}")]
    NotClosed(String),
    #[error("lambda is ill-defined: {0}")]
    IllDefined(String),
    #[error("bijection failure: {0}")]
    Bijection(String),
    #[error("formula and oracle disagree: {0}")]
    Mismatch(String),
    #[error("too many subcategories: {found} exceeds the limit {limit}")]
    LimitExceeded { found: usize, limit: usize },
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Simples(#[from] SimplesError),
}

/// A set of simples, as a membership mask over the `IrrSet`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Members(Vec<bool>);

impl Members {
    pub fn empty(n: usize) -> Self {
        Members(vec![false; n])
    }

    pub fn full(n: usize) -> Self {
        Members(vec![true; n])
    }

    pub fn from_indices(n: usize, idx: &[usize]) -> Self {
        let mut m = Self::empty(n);
        for &i in idx {
            m.0[i] = true;
        }
        m
    }

    pub fn contains(&self, i: usize) -> bool {
        self.0[i]
    }

    pub fn insert(&mut self, i: usize) -> bool {
        !std::mem::replace(&mut self.0[i], true)
    }

    pub fn indices(&self) -> Vec<usize> {
        (0..self.0.len()).filter(|&i| self.0[i]).collect()
    }

    pub fn count(&self) -> usize {
        self.0.iter().filter(|&&b| b).count()
    }

    pub fn is_subset(&self, other: &Members) -> bool {
        self.0.iter().zip(&other.0).all(|(&a, &b)| !a || b)
    }

    pub fn intersect(&self, other: &Members) -> Members {
        Members(self.0.iter().zip(&other.0).map(|(&a, &b)| a && b).collect())
    }

    pub fn union(&self, other: &Members) -> Members {
        Members(self.0.iter().zip(&other.0).map(|(&a, &b)| a || b).collect())
    }
}

/// `(H, Y, λ)` with `λ` stored as exponents of `ζ_N` on `Y × H`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FusionDatum {
    pub h: Subgroup,
    pub y: Subgroup,
    order: u32,
    ng: usize,
    // |X| × |G| table; zero outside Y × H
    lam: Vec<u32>,
}

impl FusionDatum {
    pub fn lambda(&self, y: usize, h: usize) -> Root {
        Root::new(self.order, self.lam[y * self.ng + h] as i64)
    }

    /// Sort key: `(|H|, H, |Y|, Y, λ)`.
    pub fn key(&self) -> (&Subgroup, &Subgroup, &[u32]) {
        (&self.h, &self.y, &self.lam)
    }

    /// `λ` is identically one.
    pub fn lambda_trivial(&self) -> bool {
        self.lam.iter().all(|&e| e == 0)
    }

    pub fn fpdim(&self, cat: &PointedCrossedCategory) -> u64 {
        (cat.g().order() * self.y.order() / self.h.order()) as u64
    }

    /// `λ` as `(y, h, exponent)` triples over `Y × H`.
    pub fn lambda_table(&self) -> Vec<(usize, usize, u32)> {
        let mut out = Vec::new();
        for &y in self.y.members() {
            for &h in self.h.members() {
                out.push((y, h, self.lam[y * self.ng + h]));
            }
        }
        out
    }

    pub fn summary(&self) -> String {
        format!("(|H|={}, |Y|={}, lambda={})", self.h.order(), self.y.order(), if self.lambda_trivial() { "1" } else { "nontrivial" })
    }
}

impl PartialOrd for FusionDatum {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for FusionDatum {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.key().cmp(&other.key())
    }
}

/// Checks every relation and returns the datum.
pub fn validate_datum(
    cat: &PointedCrossedCategory,
    h: &Subgroup,
    y: &Subgroup,
    lam: impl Fn(usize, usize) -> Root,
) -> Result<FusionDatum, LatticeError> {
    let (g, x) = (cat.g(), cat.x());
    if !h.is_closed_in(g) || !h.is_normal_in(g) {
        return Err(LatticeError::InvalidDatum("H is not a normal subgroup of G".into()));
    }
    if !y.is_closed_in(x) {
        return Err(LatticeError::InvalidDatum("Y is not a subgroup of X".into()));
    }
    if !cat.is_stable(y) {
        return Err(LatticeError::InvalidDatum("Y is not G-stable".into()));
    }
    if !h.members().iter().all(|&a| y.members().iter().all(|&b| cat.act(a, b) == b)) {
        return Err(LatticeError::InvalidDatum("H does not fix Y pointwise".into()));
    }
    let n = cat.order();
    let ng = g.order();
    let mut table = vec![0u32; x.order() * ng];
    for &b in y.members() {
        for &a in h.members() {
            let r = lam(b, a);
            if r.order() != n {
                return Err(LatticeError::InvalidDatum(format!("lambda has order {} instead of {n}", r.order())));
            }
            table[b * ng + a] = r.exp();
        }
    }
    let d = FusionDatum { h: h.clone(), y: y.clone(), order: n, ng, lam: table };
    check_relations(cat, &d)?;
    Ok(d)
}

fn check_relations(cat: &PointedCrossedCategory, d: &FusionDatum) -> Result<(), LatticeError> {
    let (g, x) = (cat.g(), cat.x());
    let fail = |name: &str, args: Vec<usize>| Err(LatticeError::Relation { name: name.into(), args });
    for &b in d.y.members() {
        if !d.lambda(b, g.identity()).is_one() {
            return fail("normalization in H", vec![b]);
        }
    }
    for &a in d.h.members() {
        if !d.lambda(x.identity(), a).is_one() {
            return fail("normalization in Y", vec![a]);
        }
    }
    for &b in d.y.members() {
        for &a in d.h.members() {
            for &a2 in d.h.members() {
                if d.lambda(b, g.mul(a, a2)) != d.lambda(b, a) * d.lambda(b, a2) * cat.gamma(a, a2, b).inv() {
                    return fail("twisted character in H", vec![b, a, a2]);
                }
            }
            for &b2 in d.y.members() {
                if d.lambda(x.mul(b, b2), a) != d.lambda(b, a) * d.lambda(b2, a) * cat.mu(a, b, b2) {
                    return fail("twisted character in Y", vec![b, b2, a]);
                }
            }
            for k in g.elements() {
                let a0 = g.conj(g.inv(k), a);
                if d.lambda(cat.act(k, b), a) != d.lambda(b, a0) * cat.d_gamma_unchecked(k, b, a0) {
                    return fail("G-invariance", vec![k, b, a]);
                }
            }
        }
    }
    Ok(())
}

/// Fills `λ` from its values on generator pairs; `None` when the propagation is inconsistent.
fn propagate(
    cat: &PointedCrossedCategory,
    h: &Subgroup,
    hgens: &[usize],
    ygens: &[usize],
    seed: &[u32],
) -> Option<Vec<Option<u32>>> {
    let (g, x) = (cat.g(), cat.x());
    let n = cat.order();
    let ng = g.order();
    let mut t: Vec<Option<u32>> = vec![None; x.order() * ng];
    let add = |a: u32, b: u32| (a + b) % n;
    let sub = |a: u32, b: u32| (a + n - b) % n;
    for &a in h.members() {
        t[x.identity() * ng + a] = Some(0);
    }
    for (i, &b) in ygens.iter().enumerate() {
        t[b * ng + g.identity()] = Some(0);
        for (j, &a) in hgens.iter().enumerate() {
            t[b * ng + a] = Some(seed[i * hgens.len() + j]);
        }
        // spread along H
        let mut queue = VecDeque::from([g.identity()]);
        let mut seen = vec![false; ng];
        seen[g.identity()] = true;
        while let Some(a) = queue.pop_front() {
            for &s in hgens {
                let as_ = g.mul(a, s);
                let v = sub(add(t[b * ng + a]?, t[b * ng + s]?), cat.gamma(a, s, b).exp());
                match t[b * ng + as_] {
                    Some(w) if w != v => return None,
                    _ => t[b * ng + as_] = Some(v),
                }
                if !seen[as_] {
                    seen[as_] = true;
                    queue.push_back(as_);
                }
            }
        }
    }
    // spread along Y for each h
    for &a in h.members() {
        let mut queue = VecDeque::from([x.identity()]);
        let mut seen = vec![false; x.order()];
        seen[x.identity()] = true;
        while let Some(b) = queue.pop_front() {
            for &s in ygens {
                let bs = x.mul(b, s);
                let v = add(add(t[b * ng + a]?, t[s * ng + a]?), cat.mu(a, b, s).exp());
                match t[bs * ng + a] {
                    Some(w) if w != v => return None,
                    _ => t[bs * ng + a] = Some(v),
                }
                if !seen[bs] {
                    seen[bs] = true;
                    queue.push_back(bs);
                }
            }
        }
    }
    Some(t)
}

/// Every fusion datum, sorted by key.
pub fn enumerate_data(cat: &PointedCrossedCategory) -> Result<Vec<FusionDatum>, LatticeError> {
    let (g, x) = (cat.g(), cat.x());
    let limits = cat.limits();
    let n = cat.order();
    let ng = g.order();
    let normals = g.normal_subgroups(limits.group)?;
    let ysubs: Vec<Subgroup> = x.all_subgroups(limits.group)?.into_iter().filter(|y| cat.is_stable(y)).collect();
    let mut out = Vec::new();
    for h in &normals {
        let hgens = g.generators_of(h);
        for y in &ysubs {
            if !h.members().iter().all(|&a| y.members().iter().all(|&b| cat.act(a, b) == b)) {
                continue;
            }
            let ygens = x.generators_of(y);
            let slots = hgens.len() * ygens.len();
            let total = (n as u64).pow(slots as u32);
            let mut seed = vec![0u32; slots];
            for code in 0..total {
                let mut c = code;
                for s in seed.iter_mut() {
                    *s = (c % n as u64) as u32;
                    c /= n as u64;
                }
                let Some(t) = propagate(cat, h, &hgens, &ygens, &seed) else { continue };
                if y.members().iter().any(|&b| h.members().iter().any(|&a| t[b * ng + a].is_none())) {
                    continue;
                }
                if let Ok(d) = validate_datum(cat, h, y, |b, a| Root::new(n, t[b * ng + a].unwrap_or(0) as i64)) {
                    out.push(d);
                    if out.len() > limits.subcats {
                        return Err(LatticeError::LimitExceeded { found: out.len(), limit: limits.subcats });
                    }
                }
            }
        }
    }
    out.sort();
    out.dedup();
    Ok(out)
}

/// The simples `S_{x,π}` with `x ∈ Y` on which `H` acts by `λ(x, ·)`.
pub fn subcategory_members(irr: &IrrSet, d: &FusionDatum) -> Members {
    let mut m = Members::empty(irr.len());
    for s in irr.simples() {
        let x = s.orbit_rep;
        if !d.y.contains(x) {
            continue;
        }
        let chi = irr.local_char(s.index, x).expect("representative component");
        if d.h.members().iter().all(|&a| chi.scalar_action(a) == Some(d.lambda(x, a))) {
            m.insert(s.index);
        }
    }
    m
}

/// `Σ fpdim²` over the members.
pub fn members_fpdim(irr: &IrrSet, m: &Members) -> u64 {
    m.indices().iter().map(|&i| (irr.get(i).fpdim as u64).pow(2)).sum()
}

/// Whether the members contain the unit and are closed under duals and fusion.
pub fn is_closed(irr: &IrrSet, m: &Members) -> Result<bool, LatticeError> {
    if !m.contains(irr.unit()) {
        return Ok(false);
    }
    let idx = m.indices();
    for &a in &idx {
        if !m.contains(irr.dual(a)?) {
            return Ok(false);
        }
        for &b in &idx {
            if irr.fusion(a, b)?.iter().any(|&(c, _)| !m.contains(c)) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// The smallest fusion subcategory containing `seed`.
pub fn closure(irr: &IrrSet, seed: &Members) -> Result<Members, LatticeError> {
    let mut m = seed.clone();
    m.insert(irr.unit());
    extend_closed(irr, Members::empty(irr.len()), m)
}

/// Closes `m ⊇ base` where `base` is already closed, so only products with new members are formed.
fn extend_closed(irr: &IrrSet, base: Members, mut m: Members) -> Result<Members, LatticeError> {
    let mut have = base.0;
    let mut done: Vec<usize> = (0..irr.len()).filter(|&i| have[i]).collect();
    let mut work: Vec<usize> = m.indices().into_iter().filter(|&i| !have[i]).collect();
    while let Some(a) = work.pop() {
        if have[a] {
            continue;
        }
        have[a] = true;
        done.push(a);
        let mut new = vec![irr.dual(a)?];
        for &b in &done {
            new.extend(irr.fusion(a, b)?.iter().map(|p| p.0));
            new.extend(irr.fusion(b, a)?.iter().map(|p| p.0));
        }
        for c in new {
            if m.insert(c) {
                work.push(c);
            }
        }
    }
    Ok(m)
}

/// Reads `(H, Y, λ)` off a closed member set.
pub fn datum_of(irr: &IrrSet, m: &Members) -> Result<FusionDatum, LatticeError> {
    let cat = irr.cat();
    let (g, x) = (cat.g(), cat.x());
    let idx = m.indices();
    let mut points: Vec<usize> = Vec::new();
    for &s in &idx {
        points.extend(irr.orbit_points(s));
    }
    let y = x.generate(&points);
    let mut h = g.whole();
    for &s in &idx {
        if irr.get(s).orbit_rep == x.identity() {
            h = h.intersect(&irr.local_char(s, x.identity()).expect("component").kernel());
        }
    }
    let mut lam: HashMap<(usize, usize), Root> = HashMap::new();
    for &b in y.members() {
        let owners: Vec<usize> = idx.iter().copied().filter(|&s| irr.local_char(s, b).is_some()).collect();
        if owners.is_empty() {
            return Err(LatticeError::NotClosed(format!("no member is supported at {b}")));
        }
        for &a in h.members() {
            let mut val = None;
            for &s in &owners {
                let chi = irr.local_char(s, b).expect("owner");
                let r = chi
                    .scalar_action(a)
                    .ok_or_else(|| LatticeError::IllDefined(format!("{a} is not scalar on member {s} at {b}")))?;
                match val {
                    None => val = Some(r),
                    Some(v) if v != r => {
                        return Err(LatticeError::IllDefined(format!("members disagree at ({b},{a})")));
                    }
                    _ => {}
                }
            }
            lam.insert((b, a), val.expect("owners nonempty"));
        }
    }
    validate_datum(cat, &h, &y, |b, a| lam[&(b, a)])
}

/// Containment: `Y₁ ⊆ Y₂`, `H₁ ⊇ H₂` and `λ₁ = λ₂` on `Y₁ × H₂`.
pub fn contains(d1: &FusionDatum, d2: &FusionDatum) -> bool {
    d1.y.is_subgroup_of(&d2.y)
        && d2.h.is_subgroup_of(&d1.h)
        && d1.y.members().iter().all(|&b| d2.h.members().iter().all(|&a| d1.lambda(b, a) == d2.lambda(b, a)))
}

/// The datum of `C(d₁) ∩ C(d₂)`: `Y = {y ∈ Y₁ ∩ Y₂ : λ₁(y,·) = λ₂(y,·) on H₁ ∩ H₂}`,
/// `H = H₁H₂`, `λ(y, hh′) = λ₁(y,h)·λ₂(y,h′)·γ(h,h′;y)⁻¹`.
pub fn intersect(cat: &PointedCrossedCategory, d1: &FusionDatum, d2: &FusionDatum) -> Result<FusionDatum, LatticeError> {
    let (g, x) = (cat.g(), cat.x());
    let h12 = d1.h.intersect(&d2.h);
    let ymem: Vec<usize> = d1
        .y
        .intersect(&d2.y)
        .members()
        .iter()
        .copied()
        .filter(|&b| h12.members().iter().all(|&a| d1.lambda(b, a) == d2.lambda(b, a)))
        .collect();
    let y = Subgroup::from_members(x.order(), ymem);
    let h = d1.h.join(&d2.h, g);
    let mut lam: HashMap<(usize, usize), Root> = HashMap::new();
    for &b in y.members() {
        for &a1 in d1.h.members() {
            for &a2 in d2.h.members() {
                let v = d1.lambda(b, a1) * d2.lambda(b, a2) * cat.gamma(a1, a2, b).inv();
                let k = (b, g.mul(a1, a2));
                match lam.get(&k) {
                    Some(&w) if w != v => return Err(LatticeError::IllDefined(format!("intersection at {k:?}"))),
                    _ => {
                        lam.insert(k, v);
                    }
                }
            }
        }
    }
    validate_datum(cat, &h, &y, |b, a| lam[&(b, a)])
}

/// `H_∨ = ⋂_{x ∈ Y₁∩Y₂} ker_G Ind_{H₁∩H₂}^G (λ₁(x,·)·λ₂(x,·)⁻¹)`.
pub fn join_h(cat: &PointedCrossedCategory, d1: &FusionDatum, d2: &FusionDatum) -> Result<Subgroup, LatticeError> {
    let g = cat.g();
    let n = cat.order();
    let h12 = d1.h.intersect(&d2.h);
    let target = Cocycle2::trivial(g.clone(), g.whole(), n);
    let src = Cocycle2::trivial(g.clone(), h12.clone(), n);
    let mut out = g.whole();
    for &b in d1.y.intersect(&d2.y).members() {
        let lin = ProjChar::linear(src.clone(), |a| d1.lambda(b, a) * d2.lambda(b, a).inv());
        let ind = lin.induce(&target).map_err(SimplesError::from)?;
        out = out.intersect(&ind.kernel());
    }
    Ok(out)
}

/// The datum of `C(d₁) ∨ C(d₂)`: `Y = Y₁Y₂`, `H = H_∨`, `λ(yz, h) = λ₁(y,h)·λ₂(z,h)·μ(h;y,z)`.
pub fn join(cat: &PointedCrossedCategory, d1: &FusionDatum, d2: &FusionDatum) -> Result<FusionDatum, LatticeError> {
    let x = cat.x();
    let h = join_h(cat, d1, d2)?;
    let y = d1.y.join(&d2.y, x);
    let mut lam: HashMap<(usize, usize), Root> = HashMap::new();
    for &b1 in d1.y.members() {
        for &b2 in d2.y.members() {
            for &a in h.members() {
                let v = d1.lambda(b1, a) * d2.lambda(b2, a) * cat.mu(a, b1, b2);
                let k = (x.mul(b1, b2), a);
                match lam.get(&k) {
                    Some(&w) if w != v => {
                        return Err(LatticeError::IllDefined(format!("join at {k:?} from ({b1},{b2})")));
                    }
                    _ => {
                        lam.insert(k, v);
                    }
                }
            }
        }
    }
    validate_datum(cat, &h, &y, |b, a| lam[&(b, a)])
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FusionSubcategory {
    pub members: Members,
    pub datum: FusionDatum,
    pub fpdim: u64,
}

/// All subcategories with containment, meet and join tables computed from member sets.
pub struct Lattice {
    pub subcats: Vec<FusionSubcategory>,
    pub index: HashMap<Members, usize>,
    /// `le[i][j]`: subcategory `i` is contained in `j`
    pub le: Vec<Vec<bool>>,
    pub meet: Vec<Vec<usize>>,
    pub join: Vec<Vec<usize>>,
}

/// Builds the lattice, checking the datum/member-set bijection and the dimension law.
pub fn enumerate_subcategories(irr: &IrrSet) -> Result<Lattice, LatticeError> {
    let cat = irr.cat();
    let data = enumerate_data(cat)?;
    let mut subcats = Vec::with_capacity(data.len());
    let mut index = HashMap::new();
    for d in data {
        let members = subcategory_members(irr, &d);
        if !is_closed(irr, &members)? {
            return Err(LatticeError::NotClosed(d.summary()));
        }
        let fpdim = members_fpdim(irr, &members);
        if fpdim != d.fpdim(cat) {
            return Err(LatticeError::Bijection(format!("{} has dimension {fpdim}, expected {}", d.summary(), d.fpdim(cat))));
        }
        let back = datum_of(irr, &members)?;
        if back != d {
            return Err(LatticeError::Bijection(format!("{} does not round-trip", d.summary())));
        }
        if index.insert(members.clone(), subcats.len()).is_some() {
            return Err(LatticeError::Bijection(format!("{} shares its member set", d.summary())));
        }
        subcats.push(FusionSubcategory { members, datum: d, fpdim });
    }
    let k = subcats.len();
    let le: Vec<Vec<bool>> =
        (0..k).map(|i| (0..k).map(|j| subcats[i].members.is_subset(&subcats[j].members)).collect()).collect();
    let mut meet = vec![vec![0; k]; k];
    let mut joins = vec![vec![0; k]; k];
    for i in 0..k {
        for j in 0..k {
            let m = subcats[i].members.intersect(&subcats[j].members);
            meet[i][j] = *index.get(&m).ok_or_else(|| LatticeError::Bijection("intersection is not enumerated".into()))?;
            joins[i][j] = least_upper_bound(&le, &subcats, i, j)
                .ok_or_else(|| LatticeError::Bijection(format!("#{i} and #{j} have no least upper bound")))?;
        }
    }
    Ok(Lattice { subcats, index, le, meet, join: joins })
}

/// The smallest subcategory above both; closing the union of member sets gives the same answer
/// whenever the enumeration is complete, which the closure oracles check.
fn least_upper_bound(le: &[Vec<bool>], subcats: &[FusionSubcategory], i: usize, j: usize) -> Option<usize> {
    let above: Vec<usize> = (0..le.len()).filter(|&t| le[i][t] && le[j][t]).collect();
    let &best = above.iter().min_by_key(|&&t| subcats[t].members.count())?;
    above.iter().all(|&t| le[best][t]).then_some(best)
}

/// All closed member sets, found by closing every set obtained by adding one simple to an
/// already-found subcategory.
pub fn closure_oracle(irr: &IrrSet) -> Result<Vec<Members>, LatticeError> {
    let n = irr.len();
    let start = closure(irr, &Members::empty(n))?;
    let mut found = vec![start.clone()];
    let mut seen: std::collections::HashSet<Members> = [start].into_iter().collect();
    let mut i = 0;
    while i < found.len() {
        let base = found[i].clone();
        for s in 0..n {
            if base.contains(s) {
                continue;
            }
            let mut seed = base.clone();
            seed.insert(s);
            let c = extend_closed(irr, base.clone(), seed)?;
            if seen.insert(c.clone()) {
                found.push(c);
            }
        }
        i += 1;
    }
    found.sort();
    Ok(found)
}

/// All closed member sets by testing every subset containing the unit; for at most 20 simples.
pub fn subset_oracle(irr: &IrrSet) -> Result<Vec<Members>, LatticeError> {
    let n = irr.len();
    assert!(n <= 20, "subset enumeration is exponential");
    let unit = irr.unit();
    let others: Vec<usize> = (0..n).filter(|&i| i != unit).collect();
    let mut out = Vec::new();
    for mask in 0u64..(1 << others.len()) {
        let mut idx = vec![unit];
        idx.extend(others.iter().enumerate().filter(|(b, _)| mask >> b & 1 == 1).map(|(_, &s)| s));
        let m = Members::from_indices(n, &idx);
        if is_closed(irr, &m)? {
            out.push(m);
        }
    }
    out.sort();
    Ok(out)
}

impl Lattice {
    pub fn len(&self) -> usize {
        self.subcats.len()
    }

    pub fn is_empty(&self) -> bool {
        self.subcats.is_empty()
    }

    pub fn find(&self, m: &Members) -> Option<usize> {
        self.index.get(m).copied()
    }

    pub fn bottom(&self) -> usize {
        (0..self.len()).find(|&i| self.subcats[i].members.count() == 1).expect("trivial subcategory")
    }

    pub fn top(&self) -> usize {
        (0..self.len()).max_by_key(|&i| self.subcats[i].fpdim).expect("nonempty lattice")
    }

    /// Covering pairs `(i, j)` with `i ⊂ j` and nothing strictly between.
    pub fn hasse_edges(&self) -> Vec<(usize, usize)> {
        let k = self.len();
        let mut out = Vec::new();
        for i in 0..k {
            for j in 0..k {
                if i == j || !self.le[i][j] {
                    continue;
                }
                if !(0..k).any(|m| m != i && m != j && self.le[i][m] && self.le[m][j]) {
                    out.push((i, j));
                }
            }
        }
        out
    }

    /// Hasse diagram of containment as a DOT digraph, smaller subcategories pointing to larger.
    pub fn to_dot(&self, irr: &IrrSet) -> String {
        let mut s = String::from("digraph subcategories {\n  rankdir=BT;\n  node [shape=box];\n");
        for (i, sc) in self.subcats.iter().enumerate() {
            let labels: Vec<String> = sc.members.indices().iter().map(|&m| irr.get(m).label()).collect();
            let _ = writeln!(
                s,
                "  d{i} [label=\"#{i} |H|={} |Y|={} dim={}\\n{}\"];",
                sc.datum.h.order(),
                sc.datum.y.order(),
                sc.fpdim,
                labels.join(" ")
            );
        }
        for (i, j) in self.hasse_edges() {
            let _ = writeln!(s, "  d{i} -> d{j};");
        }
        s.push_str("}\n");
        s
    }

    /// Compares the datum formulas with the member-set tables for all pairs; returns the
    /// mismatches found.
    pub fn cross_check(&self, irr: &IrrSet) -> Result<Vec<String>, LatticeError> {
        let cat = irr.cat();
        let mut bad = Vec::new();
        let k = self.len();
        for i in 0..k {
            for j in 0..k {
                let (a, b) = (&self.subcats[i].datum, &self.subcats[j].datum);
                if contains(a, b) != self.le[i][j] {
                    bad.push(format!("containment of #{i} in #{j}"));
                }
                match intersect(cat, a, b) {
                    Ok(d) if d == self.subcats[self.meet[i][j]].datum => {}
                    Ok(_) => bad.push(format!("intersection of #{i} and #{j}")),
                    Err(e) => bad.push(format!("intersection of #{i} and #{j}: {e}")),
                }
                match join(cat, a, b) {
                    Ok(d) if d == self.subcats[self.join[i][j]].datum => {}
                    Ok(_) => bad.push(format!("join of #{i} and #{j}")),
                    Err(e) => bad.push(format!("join of #{i} and #{j}: {e}")),
                }
            }
        }
        Ok(bad)
    }
}

/// Serializable view of a datum.
#[derive(Debug, Clone, Serialize)]
pub struct DatumView {
    pub h: Vec<usize>,
    pub y: Vec<usize>,
    /// `(y, h, k)` meaning `λ(y, h) = ζ_N^k`
    pub lambda: Vec<(usize, usize, u32)>,
    pub order: u32,
}

impl From<&FusionDatum> for DatumView {
    fn from(d: &FusionDatum) -> Self {
        DatumView { h: d.h.members().to_vec(), y: d.y.members().to_vec(), lambda: d.lambda_table(), order: d.order }
    }
}

/// Groups data by `(|H|, |Y|)` for selector lookup.
pub fn by_orders(data: &[FusionSubcategory]) -> BTreeMap<(usize, usize), Vec<usize>> {
    let mut m: BTreeMap<(usize, usize), Vec<usize>> = BTreeMap::new();
    for (i, s) in data.iter().enumerate() {
        m.entry((s.datum.h.order(), s.datum.y.order())).or_default().push(i);
    }
    m
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::crossed::Limits;
    use crate::group::FiniteGroup;
    use std::sync::Arc;

    fn irr(name: &str) -> IrrSet {
        let g = FiniteGroup::builtin(name).unwrap();
        IrrSet::new(Arc::new(PointedCrossedCategory::untwisted_double(&g, Limits::default()).unwrap())).unwrap()
    }

    #[test]
    fn toric_code_lattice() {
        let s = irr("c2");
        let lat = enumerate_subcategories(&s).unwrap();
        let mut dims: Vec<u64> = lat.subcats.iter().map(|c| c.fpdim).collect();
        dims.sort();
        assert_eq!(dims, vec![1, 2, 2, 2, 4]);
        assert!(lat.cross_check(&s).unwrap().is_empty());
        assert_eq!(closure_oracle(&s).unwrap().len(), 5);
        assert_eq!(subset_oracle(&s).unwrap().len(), 5);
        let dot = lat.to_dot(&s);
        assert_eq!(dot.matches("->").count(), 6);
    }

    #[test]
    fn s3_lattice_matches_oracles() {
        let s = irr("s3");
        let lat = enumerate_subcategories(&s).unwrap();
        let sets: Vec<Members> = {
            let mut v: Vec<Members> = lat.subcats.iter().map(|c| c.members.clone()).collect();
            v.sort();
            v
        };
        assert_eq!(sets, subset_oracle(&s).unwrap());
        assert_eq!(sets, closure_oracle(&s).unwrap());
        assert!(lat.cross_check(&s).unwrap().is_empty());
    }

    #[test]
    fn invalid_data_are_rejected() {
        let s = irr("s3");
        let cat = s.cat();
        let g = cat.g();
        let t = (0..6).find(|&x| g.element_order(x) == 2).unwrap();
        let h = g.generate(&[t]);
        let one = |_: usize, _: usize| Root::one(cat.order());
        assert!(matches!(validate_datum(cat, &h, &cat.x().trivial(), one), Err(LatticeError::InvalidDatum(_))));
        assert!(validate_datum(cat, &g.trivial(), &cat.x().trivial(), one).is_ok());
    }

    #[test]
    fn larger_lattices_match_closure_oracle() {
        for name in ["klein4", "d4", "q8", "c4"] {
            let s = irr(name);
            let lat = enumerate_subcategories(&s).unwrap();
            let mut sets: Vec<Members> = lat.subcats.iter().map(|c| c.members.clone()).collect();
            sets.sort();
            assert_eq!(sets, closure_oracle(&s).unwrap(), "{name}");
            assert!(lat.cross_check(&s).unwrap().is_empty(), "{name}");
        }
    }

    #[test]
    fn twisted_instance_lattice() {
        let cat = PointedCrossedCategory::validate(&crate::crossed::RawInstance::twisted_c2(), Limits::default()).unwrap();
        let s = IrrSet::new(Arc::new(cat)).unwrap();
        let lat = enumerate_subcategories(&s).unwrap();
        let mut sets: Vec<Members> = lat.subcats.iter().map(|c| c.members.clone()).collect();
        sets.sort();
        assert_eq!(sets, subset_oracle(&s).unwrap());
        assert!(lat.cross_check(&s).unwrap().is_empty());
    }
}
