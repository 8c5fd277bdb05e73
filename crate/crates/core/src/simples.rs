//! Simple objects of the equivariantization: an orbit representative `x` together with an
//! irreducible `α_x`-projective character of the stabilizer `G_x`.
//!
//! A simple `S = S_{x,π}` has one invertible component `k_y` per orbit point `y = ᵗx`; the
//! stabilizer `G_y` acts on that component with character
//! `χ_S(y, g) = D_{t,x}(t⁻¹gt)·χ_π(t⁻¹gt)`.

use std::collections::BTreeMap;
use std::sync::{Arc, OnceLock};

use serde::Serialize;
use thiserror::Error;

use crate::crossed::PointedCrossedCategory;
use crate::cyclotomic::Cyclotomic;
use crate::projchar::{irr_projective, multiplicity, ProjChar, ProjError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SimplesError {
    #[error(transparent)]
    Proj(#[from] ProjError),
    #[error("{0}")]
    Inconsistent(String),
    #[error("element {g} does not carry {y} to its orbit representative")]
    BadTransport { g: usize, y: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Simple {
    pub index: usize,
    pub orbit_rep: usize,
    pub char_index: usize,
    pub degree: u32,
    pub fpdim: u32,
    pub stabilizer_order: usize,
    /// `{∂y : y in the orbit}`, sorted
    pub support: Vec<usize>,
}

impl Simple {
    pub fn label(&self) -> String {
        format!("x{}.{}", self.orbit_rep, self.char_index)
    }
}

/// Multiset of constituents, as `(simple index, multiplicity)` sorted by index.
pub type Decomposition = Vec<(usize, u32)>;

pub struct IrrSet {
    cat: Arc<PointedCrossedCategory>,
    simples: Vec<Simple>,
    // per simple: orbit points with their local characters
    local: Vec<BTreeMap<usize, ProjChar>>,
    by_rep: BTreeMap<usize, Vec<usize>>,
    irr_at: BTreeMap<usize, Arc<Vec<ProjChar>>>,
    table: OnceLock<Result<Vec<Vec<Decomposition>>, SimplesError>>,
}

impl IrrSet {
    pub fn new(cat: Arc<PointedCrossedCategory>) -> Result<Self, SimplesError> {
        let g = cat.g().clone();
        let mut simples = Vec::new();
        let mut local = Vec::new();
        let mut by_rep = BTreeMap::new();
        let mut irr_at = BTreeMap::new();
        for x in cat.orbit_reps() {
            let irr = irr_projective(cat.alpha_at(x))?;
            let orbit = cat.orbit(x);
            let support: std::collections::BTreeSet<usize> = orbit.iter().map(|&y| cat.degree(y)).collect();
            let mut idxs = Vec::new();
            for (ci, chi) in irr.iter().enumerate() {
                let index = simples.len();
                idxs.push(index);
                simples.push(Simple {
                    index,
                    orbit_rep: x,
                    char_index: ci,
                    degree: chi.degree(),
                    fpdim: orbit.len() as u32 * chi.degree(),
                    stabilizer_order: cat.stabilizer(x).order(),
                    support: support.iter().copied().collect(),
                });
                let mut comps = BTreeMap::new();
                for &y in &orbit {
                    let t = cat.transporter(y);
                    let ti = g.inv(t);
                    let c = ProjChar::from_fn(cat.alpha_at(y).clone(), |k| {
                        let h = g.conj(ti, k);
                        chi.value(h).mul_root(cat.d_gamma_unchecked(t, x, h))
                    });
                    comps.insert(y, c);
                }
                local.push(comps);
            }
            by_rep.insert(x, idxs);
            irr_at.insert(x, irr);
        }
        Ok(IrrSet { cat, simples, local, by_rep, irr_at, table: OnceLock::new() })
    }

    pub fn cat(&self) -> &Arc<PointedCrossedCategory> {
        &self.cat
    }

    pub fn simples(&self) -> &[Simple] {
        &self.simples
    }

    pub fn len(&self) -> usize {
        self.simples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.simples.is_empty()
    }

    pub fn get(&self, i: usize) -> &Simple {
        &self.simples[i]
    }

    /// Index of the unit object `S_{e, trivial}`.
    pub fn unit(&self) -> usize {
        let e = self.cat.x().identity();
        self.by_rep[&e][0]
    }

    /// Simples over the orbit of `x`, in character order.
    pub fn over(&self, x: usize) -> &[usize] {
        &self.by_rep[&self.cat.canonical(x)]
    }

    /// The irreducible projective characters at orbit representative `x`.
    pub fn characters_at(&self, x: usize) -> &[ProjChar] {
        &self.irr_at[&x]
    }

    /// `χ_S(y, ·)` for an orbit point `y`.
    pub fn local_char(&self, s: usize, y: usize) -> Option<&ProjChar> {
        self.local[s].get(&y)
    }

    pub fn orbit_points(&self, s: usize) -> impl Iterator<Item = usize> + '_ {
        self.local[s].keys().copied()
    }

    /// The simples with orbit representative `e`, i.e. the copy of `Rep(G)`.
    pub fn rep_g_simples(&self) -> Vec<usize> {
        self.over(self.cat.x().identity()).to_vec()
    }

    /// `Σ fpdim²`, which equals `|G|·|X|`.
    pub fn global_dimension(&self) -> u64 {
        self.simples.iter().map(|s| (s.fpdim as u64).pow(2)).sum()
    }

    /// Transports a character at the non-canonical point `y` to the canonical representative
    /// along `g` (with `ᵍy` canonical) and identifies the resulting simple.
    pub fn conjugate_form(&self, y: usize, chi: &ProjChar, g: usize) -> Result<usize, SimplesError> {
        let cat = &self.cat;
        let gr = cat.g();
        let r = cat.act(g, y);
        if r != cat.canonical(y) {
            return Err(SimplesError::BadTransport { g, y });
        }
        let gi = gr.inv(g);
        let moved = ProjChar::from_fn(cat.alpha_at(r).clone(), |k| {
            let h = gr.conj(gi, k);
            chi.value(h).mul_root(cat.d_gamma_unchecked(g, y, h))
        });
        self.identify_at(r, &moved)
    }

    fn identify_at(&self, r: usize, chi: &ProjChar) -> Result<usize, SimplesError> {
        self.by_rep[&r]
            .iter()
            .copied()
            .find(|&s| self.local[s][&r] == *chi)
            .ok_or_else(|| SimplesError::Inconsistent(format!("character at {r} matches no irreducible")))
    }

    /// The dual object: the orbit of `x⁻¹` with local character `conj(χ_π)·μ(·; x, x⁻¹)⁻¹`.
    pub fn dual(&self, s: usize) -> Result<usize, SimplesError> {
        let cat = &self.cat;
        let x = self.simples[s].orbit_rep;
        let xi = cat.x().inv(x);
        let chi = &self.local[s][&x];
        let alpha = cat.alpha_at(xi).clone();
        let d = ProjChar::from_fn(alpha, |g| chi.value(g).conj().mul_root(cat.mu(g, x, xi).inv()));
        let t = cat.transporter(xi);
        self.conjugate_form(xi, &d, cat.g().inv(t))
    }

    /// The dual found by scanning for unit multiplicity one.
    pub fn dual_by_search(&self, s: usize) -> Result<usize, SimplesError> {
        let unit = self.unit();
        let mut found = None;
        for t in 0..self.len() {
            let m = self.fusion(s, t)?.iter().find(|(u, _)| *u == unit).map_or(0, |p| p.1);
            match (m, found) {
                (0, _) => {}
                (1, None) => found = Some(t),
                _ => return Err(SimplesError::Inconsistent(format!("unit appears wrongly in {s} ⊗ {t}"))),
            }
        }
        found.ok_or_else(|| SimplesError::Inconsistent(format!("{s} has no dual")))
    }

    /// The character of the `u`-component of `S₁ ⊗ S₂` as a `G_u`-projective character.
    pub fn product_char_at(&self, s1: usize, s2: usize, u: usize) -> ProjChar {
        let cat = &self.cat;
        let x = cat.x();
        let n = cat.order();
        let stab = cat.stabilizer(u);
        let mut vals: Vec<Cyclotomic> = vec![Cyclotomic::zero(n); cat.g().order()];
        for (&y1, c1) in &self.local[s1] {
            let y2 = x.mul(x.inv(y1), u);
            let Some(c2) = self.local[s2].get(&y2) else { continue };
            for &g in stab.members() {
                if c1.domain().contains(g) && c2.domain().contains(g) {
                    let t = (c1.value(g) * c2.value(g)).mul_root(cat.mu(g, y1, y2));
                    vals[g] = &vals[g] + &t;
                }
            }
        }
        ProjChar::from_values(cat.alpha_at(u).clone(), vals)
    }

    /// Decomposes `S₁ ⊗ S₂` by the characters of the components over each orbit representative.
    pub fn fusion_constituents(&self, s1: usize, s2: usize) -> Result<Decomposition, SimplesError> {
        let x = self.cat.x();
        let mut reps: Vec<usize> = Vec::new();
        for &y1 in self.local[s1].keys() {
            for &y2 in self.local[s2].keys() {
                let u = self.cat.canonical(x.mul(y1, y2));
                if !reps.contains(&u) {
                    reps.push(u);
                }
            }
        }
        reps.sort_unstable();
        let e = self.cat.g().identity();
        let mut out = Vec::new();
        for u in reps {
            let prod = self.product_char_at(s1, s2, u);
            let degree = prod.value(e).to_integer().unwrap_or(-1);
            // a degree-one character is irreducible, so it is its own unique constituent
            if degree == 1 {
                if let Some(&s) = self.by_rep[&u].iter().find(|&&s| self.local[s][&u].values() == prod.values()) {
                    out.push((s, 1));
                    continue;
                }
            }
            let mut found = 0i64;
            for &s in &self.by_rep[&u] {
                if found == degree {
                    break;
                }
                let m = multiplicity(&self.local[s][&u], &prod)?;
                if m > 0 {
                    out.push((s, m));
                    found += m as i64 * self.local[s][&u].degree() as i64;
                }
            }
        }
        out.sort_unstable();
        self.check_dimension(s1, s2, &out)?;
        Ok(out)
    }

    /// The same decomposition summed over `G_u`-orbits of component pairs `(y₁, y₂)` with
    /// `y₁y₂ = u`, each contributing a multiplicity over the pair stabilizer.
    pub fn fusion_by_pairs(&self, s1: usize, s2: usize) -> Result<Decomposition, SimplesError> {
        let cat = &self.cat;
        let x = cat.x();
        let mut acc: BTreeMap<usize, u32> = BTreeMap::new();
        for u in cat.orbit_reps() {
            let stab = cat.stabilizer(u);
            let pairs: Vec<(usize, usize)> = self.local[s1]
                .keys()
                .map(|&y1| (y1, x.mul(x.inv(y1), u)))
                .filter(|(_, y2)| self.local[s2].contains_key(y2))
                .collect();
            let mut seen = vec![false; pairs.len()];
            for (i, &(y1, y2)) in pairs.iter().enumerate() {
                if seen[i] {
                    continue;
                }
                for &a in stab.members() {
                    let img = (cat.act(a, y1), cat.act(a, y2));
                    if let Some(j) = pairs.iter().position(|&p| p == img) {
                        seen[j] = true;
                    }
                }
                let t = stab.intersect(cat.stabilizer(y1)).intersect(cat.stabilizer(y2));
                let (c1, c2) = (&self.local[s1][&y1], &self.local[s2][&y2]);
                let alpha_t = cat.alpha_at(u).restrict(&t)?;
                let piece = ProjChar::from_fn(alpha_t, |k| (c1.value(k) * c2.value(k)).mul_root(cat.mu(k, y1, y2)));
                // the constituents' degrees add up to that of the induced piece
                let mut left = (stab.order() / t.order()) as u64 * piece.degree() as u64;
                for &s in &self.by_rep[&u] {
                    if left == 0 {
                        break;
                    }
                    let local = &self.local[s][&u];
                    let m = multiplicity(&local.restrict(&t)?, &piece)?;
                    if m > 0 {
                        *acc.entry(s).or_default() += m;
                        left = left.saturating_sub(m as u64 * local.degree() as u64);
                    }
                }
            }
        }
        let out: Decomposition = acc.into_iter().collect();
        self.check_dimension(s1, s2, &out)?;
        Ok(out)
    }

    fn check_dimension(&self, s1: usize, s2: usize, out: &Decomposition) -> Result<(), SimplesError> {
        let lhs: u64 = out.iter().map(|&(s, m)| m as u64 * self.simples[s].fpdim as u64).sum();
        let rhs = self.simples[s1].fpdim as u64 * self.simples[s2].fpdim as u64;
        if lhs != rhs {
            return Err(SimplesError::Inconsistent(format!(
                "dimension identity fails for {s1} ⊗ {s2}: constituents give {lhs}, expected {rhs}"
            )));
        }
        Ok(())
    }

    /// The full fusion table, computed once.
    pub fn fusion_table(&self) -> Result<&Vec<Vec<Decomposition>>, SimplesError> {
        self.table
            .get_or_init(|| {
                (0..self.len())
                    .map(|a| (0..self.len()).map(|b| self.fusion_constituents(a, b)).collect::<Result<Vec<_>, _>>())
                    .collect()
            })
            .as_ref()
            .map_err(|e| e.clone())
    }

    pub fn fusion(&self, a: usize, b: usize) -> Result<&Decomposition, SimplesError> {
        Ok(&self.fusion_table()?[a][b])
    }

    /// Duals of all simples.
    pub fn duals(&self) -> Result<Vec<usize>, SimplesError> {
        (0..self.len()).map(|s| self.dual(s)).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::crossed::Limits;
    use crate::group::FiniteGroup;

    fn irr(name: &str) -> IrrSet {
        let g = FiniteGroup::builtin(name).unwrap();
        IrrSet::new(Arc::new(PointedCrossedCategory::untwisted_double(&g, Limits::default()).unwrap())).unwrap()
    }

    #[test]
    fn toric_code() {
        let s = irr("c2");
        assert_eq!(s.len(), 4);
        assert!(s.simples().iter().all(|x| x.fpdim == 1));
        // S_{g,triv} ⊗ S_{g,triv} = unit
        let gt = s.over(1)[0];
        assert_eq!(s.fusion(gt, gt).unwrap(), &vec![(s.unit(), 1)]);
        for a in 0..4 {
            assert_eq!(s.dual(a).unwrap(), a);
        }
    }

    #[test]
    fn s3_double() {
        let s = irr("s3");
        let dims: Vec<u32> = s.simples().iter().map(|x| x.fpdim).collect();
        assert_eq!(dims, vec![1, 1, 2, 3, 3, 2, 2, 2]);
        assert_eq!(s.global_dimension(), 36);
        assert_eq!(s.rep_g_simples().len(), 3);
        for a in 0..s.len() {
            assert_eq!(s.dual(a).unwrap(), s.dual_by_search(a).unwrap());
            assert_eq!(s.dual(s.dual(a).unwrap()).unwrap(), a);
            for b in 0..s.len() {
                assert_eq!(s.fusion(a, b).unwrap(), &s.fusion_by_pairs(a, b).unwrap());
            }
        }
    }

    #[test]
    fn twisted_and_central_instances() {
        use crate::crossed::RawInstance;
        for raw in [RawInstance::twisted_c2(), RawInstance::central_c2()] {
            let cat = PointedCrossedCategory::validate(&raw, Limits::default()).unwrap();
            let s = IrrSet::new(Arc::new(cat)).unwrap();
            assert_eq!(s.len(), 4);
            for a in 0..4 {
                assert_eq!(s.dual(a).unwrap(), s.dual_by_search(a).unwrap());
                for b in 0..4 {
                    assert_eq!(s.fusion(a, b).unwrap(), &s.fusion_by_pairs(a, b).unwrap());
                }
            }
        }
    }

    #[test]
    fn c3_has_nine_invertibles() {
        let s = irr("c3");
        assert_eq!(s.len(), 9);
        for a in 0..9 {
            for b in 0..9 {
                assert_eq!(s.fusion(a, b).unwrap().len(), 1);
            }
        }
    }

    #[test]
    fn conjugate_form_identity_transport() {
        let s = irr("s3");
        for a in 0..s.len() {
            let x = s.get(a).orbit_rep;
            let chi = s.local_char(a, x).unwrap();
            assert_eq!(s.conjugate_form(x, chi, 0).unwrap(), a);
            for y in s.orbit_points(a).collect::<Vec<_>>() {
                let c = s.local_char(a, y).unwrap();
                let t = s.cat().transporter(y);
                assert_eq!(s.conjugate_form(y, c, s.cat().g().inv(t)).unwrap(), a);
            }
        }
    }
}
