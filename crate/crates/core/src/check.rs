//! The property suite behind `gcrossed check`: every invariant of every module, evaluated on one
//! instance and reported by name.

use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::Serialize;

use crate::centralizer::{self, CentralizerContext};
use crate::crossed::PointedCrossedCategory;
use crate::cyclotomic::{Cyclotomic, Root};
use crate::group::{FiniteGroup, GroupAction, Subgroup};
use crate::lattice::{self, Lattice, LatticeError};
use crate::projchar::{self, Cocycle2, ProjChar};
use crate::simples::{IrrSet, SimplesError};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Level {
    Fast,
    Full,
}

/// One named property with its outcome and up to a handful of failing witnesses.
#[derive(Debug, Clone, Serialize)]
pub struct Outcome {
    pub module: &'static str,
    pub name: String,
    pub passed: bool,
    pub witnesses: Vec<String>,
}

/// Recorded facts that are not pass/fail properties (statements found not to hold as
/// written, compared against their corrected forms).
#[derive(Debug, Clone, Serialize)]
pub struct Observation {
    pub name: String,
    pub holds: bool,
    pub detail: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct CheckReport {
    pub level: Level,
    pub outcomes: Vec<Outcome>,
    pub observations: Vec<Observation>,
}

impl CheckReport {
    pub fn all_passed(&self) -> bool {
        self.outcomes.iter().all(|o| o.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Outcome> {
        self.outcomes.iter().filter(|o| !o.passed)
    }
}

const MAX_WITNESSES: usize = 5;

struct Suite {
    outcomes: Vec<Outcome>,
    observations: Vec<Observation>,
}

impl Suite {
    fn record(&mut self, module: &'static str, name: impl Into<String>, witnesses: Vec<String>) {
        let passed = witnesses.is_empty();
        let total = witnesses.len();
        let mut w: Vec<String> = witnesses.into_iter().take(MAX_WITNESSES).collect();
        if total > MAX_WITNESSES {
            w.push(format!("... {} more", total - MAX_WITNESSES));
        }
        self.outcomes.push(Outcome { module, name: name.into(), passed, witnesses: w });
    }

    fn flag(&mut self, module: &'static str, name: impl Into<String>, ok: bool, witness: impl FnOnce() -> String) {
        let w = if ok { Vec::new() } else { vec![witness()] };
        self.record(module, name, w);
    }

    fn observe(&mut self, name: &str, holds: bool, detail: String) {
        self.observations.push(Observation { name: name.into(), holds, detail });
    }
}

/// Runs the suite. Structural failures that stop later stages (a lattice that cannot be
/// built, say) are recorded as failed properties rather than returned as errors.
pub fn run_checks(cat: Arc<PointedCrossedCategory>, level: Level) -> CheckReport {
    let mut s = Suite { outcomes: Vec::new(), observations: Vec::new() };
    let full = level == Level::Full;
    s.flag("crossed", "instance validates", true, String::new);
    group_checks(&mut s, &cat, full);
    cyclotomic_checks(&mut s, cat.order(), if full { 200 } else { 30 });
    crossed_checks(&mut s, &cat);
    projchar_checks(&mut s, &cat, full);
    let irr = match IrrSet::new(cat.clone()) {
        Ok(irr) => irr,
        Err(e) => {
            s.record("simples", "simple objects enumerate", vec![e.to_string()]);
            return finish(s, level);
        }
    };
    if let Err(e) = simples_checks(&mut s, &irr, full) {
        s.record("simples", "fusion rules compute", vec![e.to_string()]);
        return finish(s, level);
    }
    let lat = match lattice::enumerate_subcategories(&irr) {
        Ok(l) => l,
        Err(e) => {
            s.record("lattice", "datum enumeration and bijection", vec![e.to_string()]);
            return finish(s, level);
        }
    };
    if let Err(e) = lattice_checks(&mut s, &irr, &lat, full) {
        s.record("lattice", "lattice computations", vec![e.to_string()]);
        return finish(s, level);
    }
    match CentralizerContext::new(&irr, &lat) {
        Ok(ctx) => centralizer_checks(&mut s, &ctx, full),
        Err(e) => s.record("centralizer", "centralizers are fusion subcategories", vec![e.to_string()]),
    }
    finish(s, level)
}

fn finish(s: Suite, level: Level) -> CheckReport {
    CheckReport { level, outcomes: s.outcomes, observations: s.observations }
}

fn group_checks(s: &mut Suite, cat: &PointedCrossedCategory, full: bool) {
    let limit = cat.limits().group;
    for (tag, grp) in [("G", cat.g()), ("X", cat.x())] {
        let mut bad = Vec::new();
        match grp.all_subgroups(limit) {
            Ok(subs) => {
                for k in &subs {
                    if !k.is_closed_in(grp) || grp.order() % k.order() != 0 {
                        bad.push(format!("{:?}", k.members()));
                    }
                }
                if full {
                    let normals = grp.normal_subgroups(limit).unwrap_or_default();
                    for k in &subs {
                        let core = grp.core(k);
                        let maximal = normals.iter().filter(|n| n.is_subgroup_of(k)).all(|n| n.is_subgroup_of(&core));
                        if !core.is_normal_in(grp) || !core.is_subgroup_of(k) || !maximal {
                            bad.push(format!("core of {:?}", k.members()));
                        }
                    }
                }
            }
            Err(e) => bad.push(e.to_string()),
        }
        let name = if full { "subgroups closed, Lagrange, cores maximal normal" } else { "subgroups closed, Lagrange" };
        s.record("group", format!("{tag}: {name}"), bad);
    }
    let orbit_stab = |act: &GroupAction, actor: &FiniteGroup, n: usize| -> Vec<String> {
        (0..n)
            .filter(|&p| act.orbit(p).len() * act.stabilizer(actor, p).order() != actor.order())
            .map(|p| p.to_string())
            .collect()
    };
    s.record("group", "orbit-stabilizer for the action on X", orbit_stab(&cat.cm.act, cat.g(), cat.x().order()));
    let conj = GroupAction::conjugation(cat.g());
    s.record("group", "orbit-stabilizer for conjugation on G", orbit_stab(&conj, cat.g(), cat.g().order()));
}

/// Deterministic elements of `Q(ζ_n)` with small rational coefficients.
fn sample_elements(n: u32, count: usize) -> Vec<Cyclotomic> {
    let mut state: u64 = 0x9e37_79b9_7f4a_7c15;
    let mut next = move || {
        state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
        (state >> 33) as i64
    };
    (0..count)
        .map(|_| {
            let mut z = Cyclotomic::zero(n);
            for _ in 0..3 {
                let k = next().rem_euclid(n as i64);
                let q = BigRational::new(BigInt::from(next() % 7 - 3), BigInt::from(next().rem_euclid(4) + 1));
                z = &z + &Cyclotomic::from_root(n, Root::new(n, k)).scale(&q);
            }
            z
        })
        .collect()
}

fn cyclotomic_checks(s: &mut Suite, n: u32, samples: usize) {
    let z = Cyclotomic::from_root(n, Root::new(n, 1));
    let mut bad = Vec::new();
    let mut p = Cyclotomic::one(n);
    for _ in 0..n {
        p = &p * &z;
    }
    if p != Cyclotomic::one(n) {
        bad.push("z^N != 1".to_string());
    }
    if n > 1 {
        let sum = (0..n).fold(Cyclotomic::zero(n), |acc, k| &acc + &Cyclotomic::from_root(n, Root::new(n, k as i64)));
        if !sum.is_zero() {
            bad.push("sum of roots != 0".into());
        }
    }
    s.record("cyclotomic", format!("z^{n} = 1 and the roots sum to zero"), bad);
    let bad: Vec<String> = (0..n)
        .filter(|&k| {
            let r = Root::new(n, k as i64);
            let e = Cyclotomic::from_root(n, r);
            e.as_root() != Some(r) || &e.conj() * &e != Cyclotomic::one(n)
        })
        .map(|k| k.to_string())
        .collect();
    s.record("cyclotomic", "as_root inverts the embedding and conj(z)z = 1 on roots", bad);
    let els = sample_elements(n, samples + 2);
    let mut bad = Vec::new();
    for i in 0..samples {
        let (a, b, c) = (&els[i], &els[i + 1], &els[i + 2]);
        if &(a * b) * c != a * &(b * c) || a * &(b + c) != &(a * b) + &(a * c) || &(a + b) + c != a + &(b + c) {
            bad.push(format!("triple {i}"));
        }
        if !a.is_zero() && &a.inv().expect("nonzero") * a != Cyclotomic::one(n) {
            bad.push(format!("inverse {i}"));
        }
    }
    s.record("cyclotomic", format!("field axioms on {samples} sampled triples"), bad);
}

fn crossed_checks(s: &mut Suite, cat: &PointedCrossedCategory) {
    let (g, x) = (cat.g(), cat.x());
    let mut bad = Vec::new();
    for a in x.elements() {
        for b in x.elements() {
            if cat.degree(x.mul(a, b)) != g.mul(cat.degree(a), cat.degree(b)) {
                bad.push(format!("({a},{b})"));
            }
        }
        for k in g.elements() {
            if cat.degree(cat.act(k, a)) != g.conj(k, cat.degree(a)) {
                bad.push(format!("g={k}, x={a}"));
            }
        }
    }
    s.record("crossed", "grading is multiplicative and equivariant", bad);
    let bad: Vec<String> = x
        .elements()
        .filter_map(|y| cat.alpha_at(y).check().err().map(|e| format!("{y}: {e}")))
        .collect();
    s.record("crossed", "alpha_at is a normalized 2-cocycle on each stabilizer", bad);
    let mut bad = Vec::new();
    for y in x.elements() {
        let stab = cat.stabilizer(y);
        for k in g.elements() {
            let d = |h: usize| cat.d_gamma(k, y, h).expect("stabilizer element");
            let ky = cat.act(k, y);
            for &h in stab.members() {
                for &h2 in stab.members() {
                    let lhs = cat.alpha_at(y).value(h, h2) * d(h) * d(h2) * d(g.mul(h, h2)).inv();
                    if lhs != cat.alpha_at(ky).value(g.conj(k, h), g.conj(k, h2)) {
                        bad.push(format!("y={y}, g={k}, h={h}, h'={h2}"));
                    }
                }
            }
        }
    }
    s.record("projchar", "cocycle transport under conjugation via the D-scalars", bad);
}

/// Distinct stabilizer cocycles of orbit representatives.
fn rep_cocycles(cat: &PointedCrossedCategory) -> Vec<(usize, Cocycle2)> {
    let mut out: Vec<(usize, Cocycle2)> = Vec::new();
    for x in cat.orbit_reps() {
        let c = cat.alpha_at(x).clone();
        if !out.iter().any(|(_, d)| *d == c) {
            out.push((x, c));
        }
    }
    out
}

fn projchar_checks(s: &mut Suite, cat: &PointedCrossedCategory, full: bool) {
    let g = cat.g();
    let n = cat.order();
    let mut orth = Vec::new();
    let mut norm = Vec::new();
    let mut ordinary = Vec::new();
    let mut frob = Vec::new();
    let mut l73 = Vec::new();
    for (x, alpha) in rep_cocycles(cat) {
        let irr = match projchar::irr_projective(&alpha) {
            Ok(v) => v,
            Err(e) => {
                orth.push(format!("x={x}: {e}"));
                continue;
            }
        };
        for (i, a) in irr.iter().enumerate() {
            for (j, b) in irr.iter().enumerate() {
                match projchar::multiplicity(a, b) {
                    Ok(m) if m == u32::from(i == j) => {}
                    Ok(m) => orth.push(format!("x={x}: <{i},{j}> = {m}")),
                    Err(e) => orth.push(format!("x={x}: {e}")),
                }
            }
            for &h in alpha.domain().members() {
                if !a.norm_bound_holds(h) {
                    norm.push(format!("x={x}, char {i}, h={h}"));
                }
            }
        }
        if alpha.is_trivial() {
            match projchar::ordinary_char_table(g.clone(), alpha.domain().clone(), n) {
                Ok(t) => {
                    let key = |v: &[ProjChar]| {
                        let mut k: Vec<Vec<String>> =
                            v.iter().map(|c| c.values().iter().map(|z| z.to_string()).collect()).collect();
                        k.sort();
                        k
                    };
                    if key(&t) != key(&irr) {
                        ordinary.push(format!("x={x}"));
                    }
                }
                Err(e) => ordinary.push(format!("x={x}: {e}")),
            }
        }
        if full && g.order() <= 24 {
            frobenius_on(&alpha, &irr, x, &mut frob, &mut l73);
        }
    }
    s.record("projchar", "row orthogonality of irreducible projective characters", orth);
    s.record("projchar", "|chi(h)|^2 <= chi(1)^2 with equality exactly when h acts by a scalar", norm);
    s.record("projchar", "trivial-cocycle irreducibles equal the ordinary character table", ordinary);
    if full {
        if g.order() <= 24 {
            s.record("projchar", "Frobenius reciprocity on every subgroup of each stabilizer", frob);
            s.record("projchar", "scalar action on an induced character forces it on the inducing character", l73);
        }
        s.record("projchar", "kernel of an induced linear character is the core of its kernel", kernel_core(cat));
    }
}

fn frobenius_on(alpha: &Cocycle2, irr: &[ProjChar], x: usize, frob: &mut Vec<String>, l73: &mut Vec<String>) {
    let g = alpha.group();
    let Ok(subs) = g.all_subgroups(g.order()) else { return };
    for k in subs.iter().filter(|k| k.is_subgroup_of(alpha.domain())) {
        let Ok(beta) = alpha.restrict(k) else {
            frob.push(format!("x={x}: restriction to {:?}", k.members()));
            continue;
        };
        let Ok(small) = projchar::irr_projective(&beta) else {
            frob.push(format!("x={x}: characters of {:?}", k.members()));
            continue;
        };
        for (i, chi) in small.iter().enumerate() {
            let ind = match chi.induce(alpha) {
                Ok(c) => c,
                Err(e) => {
                    frob.push(format!("x={x}: {e}"));
                    continue;
                }
            };
            for (j, psi) in irr.iter().enumerate() {
                let lhs = projchar::multiplicity(&ind, psi);
                let rhs = psi.restrict(k).and_then(|r| projchar::multiplicity(chi, &r));
                if lhs != rhs || lhs.is_err() {
                    frob.push(format!("x={x}, K={:?}, chi={i}, psi={j}", k.members()));
                }
            }
            let all_scalar = k.members().iter().all(|&h| ind.scalar_action(h).is_some());
            if all_scalar && !k.members().iter().all(|&h| chi.scalar_action(h).is_some()) {
                l73.push(format!("x={x}, K={:?}, chi={i}", k.members()));
            }
        }
    }
}

fn kernel_core(cat: &PointedCrossedCategory) -> Vec<String> {
    let g = cat.g();
    let n = cat.order();
    let mut bad = Vec::new();
    let Ok(subs) = g.all_subgroups(cat.limits().group) else { return vec!["subgroups".into()] };
    let whole = Cocycle2::trivial(g.clone(), g.whole(), n);
    for k in &subs {
        let Ok(chars) = projchar::ordinary_char_table(g.clone(), k.clone(), n) else {
            bad.push(format!("characters of {:?}", k.members()));
            continue;
        };
        for (i, chi) in chars.iter().enumerate().filter(|(_, c)| c.degree() == 1) {
            match (chi.induce(&whole), chi.kernel_of_linear()) {
                (Ok(ind), Ok(ker)) if ind.kernel() == g.core(&ker) => {}
                _ => bad.push(format!("K={:?}, chi={i}", k.members())),
            }
        }
    }
    bad
}

fn simples_checks(s: &mut Suite, irr: &IrrSet, full: bool) -> Result<(), SimplesError> {
    let cat = irr.cat();
    let want = (cat.g().order() * cat.x().order()) as u64;
    let got = irr.global_dimension();
    s.flag("simples", "sum of squared fpdims is |G||X|", got == want, || format!("{got} != {want}"));
    let n = irr.len();
    let duals = irr.duals()?;
    let mut bad = Vec::new();
    for a in 0..n {
        let d = duals[a];
        if duals[d] != a || irr.get(d).fpdim != irr.get(a).fpdim || irr.dual_by_search(a)? != d {
            bad.push(irr.get(a).label());
        }
    }
    s.record("simples", "duality is an fpdim-preserving involution, found two ways", bad);
    let mut dim = Vec::new();
    let mut unit = Vec::new();
    let mut routes = Vec::new();
    for a in 0..n {
        for b in 0..n {
            let dec = irr.fusion(a, b)?;
            let total: u64 = dec.iter().map(|&(c, m)| m as u64 * irr.get(c).fpdim as u64).sum();
            if total != irr.get(a).fpdim as u64 * irr.get(b).fpdim as u64 {
                dim.push(format!("{} x {}", irr.get(a).label(), irr.get(b).label()));
            }
            let m1 = dec.iter().find(|p| p.0 == irr.unit()).map_or(0, |p| p.1);
            if m1 != u32::from(b == duals[a]) {
                unit.push(format!("{} x {}", irr.get(a).label(), irr.get(b).label()));
            }
            if full && &irr.fusion_by_pairs(a, b)? != dec {
                routes.push(format!("{} x {}", irr.get(a).label(), irr.get(b).label()));
            }
        }
    }
    s.record("simples", "fusion products have the product fpdim", dim);
    s.record("simples", "the unit occurs once in S x S* and never otherwise", unit);
    if full {
        s.record("simples", "fusion by characters equals fusion by orbit pairs", routes);
        let table = irr.fusion_table()?;
        let mut assoc = Vec::new();
        // (a⊗b)⊗c against a⊗(b⊗c) as multiplicity vectors
        let expand = |pairs: &mut dyn Iterator<Item = (u64, &Vec<(usize, u32)>)>| {
            let mut v = vec![0u64; n];
            for (m, row) in pairs {
                for &(e, k) in row {
                    v[e] += m * k as u64;
                }
            }
            v
        };
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    let l = expand(&mut table[a][b].iter().map(|&(d, m)| (m as u64, &table[d][c])));
                    let r = expand(&mut table[b][c].iter().map(|&(d, m)| (m as u64, &table[a][d])));
                    if l != r {
                        assoc.push(format!("({a},{b},{c})"));
                    }
                }
            }
        }
        s.record("simples", "the fusion ring is associative", assoc);
    }
    Ok(())
}

fn lattice_checks(s: &mut Suite, irr: &IrrSet, lat: &Lattice, full: bool) -> Result<(), LatticeError> {
    let cat = irr.cat();
    s.flag("lattice", "datum_of and subcategory_of are mutually inverse", true, String::new);
    let bad: Vec<String> = lat
        .subcats
        .iter()
        .enumerate()
        .filter(|(_, sc)| sc.fpdim != sc.datum.fpdim(cat))
        .map(|(i, _)| format!("#{i}"))
        .collect();
    s.record("lattice", "FPdim C(H,Y,lambda) = |G||Y|/|H|", bad);
    let bad: Vec<String> = lat
        .subcats
        .iter()
        .enumerate()
        .filter(|(_, sc)| sc.datum.h.order() == 1 && !sc.datum.lambda_trivial())
        .map(|(i, _)| format!("#{i}"))
        .collect();
    s.record("lattice", "data with trivial H have trivial lambda", bad);
    let bad: Vec<String> = lat
        .subcats
        .iter()
        .enumerate()
        .filter(|(_, sc)| !centralizer::support_commutes_with_h(cat, &sc.datum))
        .map(|(i, _)| format!("#{i}"))
        .collect();
    s.record("lattice", "the support subgroup commutes with H", bad);
    let k = lat.len();
    let mut hv_sub = Vec::new();
    let mut hv_law = Vec::new();
    let mut hv_forms = Vec::new();
    let mut literal_fails = 0usize;
    let mut commutative = true;
    for a in 0..irr.len() {
        for b in 0..irr.len() {
            commutative &= irr.fusion(a, b)? == irr.fusion(b, a)?;
        }
    }
    for i in 0..k {
        for j in 0..k {
            let (d1, d2) = (&lat.subcats[i].datum, &lat.subcats[j].datum);
            let h12 = d1.h.intersect(&d2.h);
            let hv = lattice::join_h(cat, d1, d2)?;
            if !hv.is_subgroup_of(&h12) {
                hv_sub.push(format!("(#{i},#{j})"));
            }
            let y12 = d1.y.intersect(&d2.y);
            let meet = &lat.subcats[lat.meet[i][j]].datum;
            if hv.order() * y12.order() != h12.order() * meet.y.order() {
                hv_law.push(format!("(#{i},#{j})"));
            }
            let direct: Vec<usize> = h12
                .members()
                .iter()
                .copied()
                .filter(|&h| y12.members().iter().all(|&y| d1.lambda(y, h) == d2.lambda(y, h)))
                .collect();
            if hv != Subgroup::from_members(cat.g().order(), direct) {
                hv_forms.push(format!("(#{i},#{j})"));
            }
            if hv != h12 {
                literal_fails += 1;
            }
        }
    }
    s.record("lattice", "H of a join lies in H1 n H2", hv_sub);
    s.record("lattice", "|H_join| |Y1 n Y2| = |H1 n H2| |Y_meet|", hv_law);
    s.record("lattice", "H of a join by induced kernels equals the pointwise agreement subgroup", hv_forms);
    s.observe(
        "H of a join equals H1 n H2 for a commutative fusion ring",
        !commutative || literal_fails == 0,
        format!("fusion ring commutative: {commutative}; pairs with H_join != H1 n H2: {literal_fails} of {}", k * k),
    );
    if full {
        s.record("lattice", "containment, intersection and join formulas agree with member sets", lat.cross_check(irr)?);
        let mut enumerated: Vec<lattice::Members> = lat.subcats.iter().map(|c| c.members.clone()).collect();
        enumerated.sort();
        let oracle = lattice::closure_oracle(irr)?;
        s.flag("lattice", "datum enumeration matches the closure oracle", enumerated == oracle, || {
            format!("{} data, {} closed sets", enumerated.len(), oracle.len())
        });
        if irr.len() <= 16 {
            let subsets = lattice::subset_oracle(irr)?;
            s.flag("lattice", "datum enumeration matches exhaustive subset search", enumerated == subsets, || {
                format!("{} data, {} closed subsets", enumerated.len(), subsets.len())
            });
        }
    }
    Ok(())
}

fn centralizer_checks(s: &mut Suite, ctx: &CentralizerContext<'_>, full: bool) {
    let cat = ctx.cat();
    let irr = ctx.irr;
    let lat = ctx.lattice;
    s.flag("centralizer", "centralizers are fusion subcategories", true, String::new);
    s.flag("centralizer", "double braiding and the p-indexed criterion agree on all pairs", ctx.routes_agree, || {
        "matrices differ".into()
    });
    let reports = ctx.reports();
    let mut t58 = Vec::new();
    for r in &reports {
        if !(r.h_of_centralizer_is_support && r.support_bound && r.supports_commute) {
            t58.push(format!("#{}", r.input));
        }
    }
    s.record("centralizer", "H of D' is the support of D; K of D' = H of D'' within H_D n G1", t58);
    let ids = ctx.identities();
    s.record("centralizer", "FPdim(D) FPdim(D') = FPdim(C) FPdim(D n Z2)", ids.dimension.iter().map(|i| format!("#{i}")).collect());
    s.record("centralizer", "D'' = D v Z2", ids.double_centralizer.iter().map(|i| format!("#{i}")).collect());
    s.record("centralizer", "(D v E)' = D' n E'", ids.join_to_meet.iter().map(|p| format!("{p:?}")).collect());
    let nondeg = ctx.is_nondegenerate();
    if nondeg {
        s.record("centralizer", "(D n E)' = D' v E'", ids.meet_to_join.iter().map(|p| format!("{p:?}")).collect());
        s.record(
            "centralizer",
            "support of D' equals H_D",
            ids.support_of_centralizer.iter().map(|i| format!("#{i}")).collect(),
        );
    }
    let literal = lat.subcats.iter().filter(|sc| sc.datum.h != centralizer::support_subgroup(cat, &sc.datum)).count();
    s.observe(
        "H_D equals the support of D on a nondegenerate faithfully graded instance",
        !(nondeg && cat.grading_surjective()) || literal == 0,
        format!("nondegenerate: {nondeg}; faithful grading: {}; subcategories with H_D != K_D: {literal}", cat.grading_surjective()),
    );
    s.flag("centralizer", "H of the Müger center is the grading image", ctx.center_h_is_grading_image(), || {
        format!("|H| = {}", ctx.mueger_center().datum.h.order())
    });
    s.flag("centralizer", "V is central iff G1 lies in ker V", ctx.center_rep_criterion(), || "mismatch".into());
    let e = cat.x().identity();
    let mut l55 = Vec::new();
    for &v in irr.over(e) {
        for t in 0..irr.len() {
            if centralizer::rep_centralizer_test(irr, v, t) != centralizer::centralize_pair(irr, v, t) {
                l55.push(format!("{} / {}", irr.get(v).label(), irr.get(t).label()));
            }
        }
    }
    s.record("centralizer", "S_(e,V) centralizes S iff the support of S lies in ker V", l55);
    if cat.grading_surjective() && nondeg {
        let bad: Vec<String> = reports
            .iter()
            .filter(|r| !r.prediction.as_ref().is_some_and(|p| p.holds()))
            .map(|r| format!("#{} -> {:?}", r.input, r.prediction))
            .collect();
        s.record("centralizer", "closed-form centralizer datum (H' = d(Y), |T|, dimension, lambda~) matches", bad);
        let displayed = reports.iter().filter(|r| r.prediction.as_ref().is_some_and(|p| !p.lambda_displayed_matches)).count();
        s.observe(
            "lambda~ = lambda^-1 omega (omega not inverted)",
            displayed == 0,
            format!("subcategories where only lambda^-1 omega^-1 matches: {displayed} of {}", reports.len()),
        );
    }
    let disp = centralizer::omega_display_mismatches(cat);
    s.record("centralizer", "displayed omega specialization equals the d-scalar composition", disp.iter().map(|w| format!("{w:?}")).collect());
    if full {
        let t = centralizer::transport_invariance(cat);
        s.record("centralizer", "double d-scalar invariant under (b,c) -> (ab,ac)", t.iter().map(|w| format!("{w:?}")).collect());
        let c = centralizer::conjugation_invariance(cat);
        s.record(
            "centralizer",
            "double d-scalar invariant under conjugating both objects (transported structure maps)",
            c.iter().map(|w| format!("{w:?}")).collect(),
        );
        let naive = centralizer::naive_conjugation_mismatches(cat);
        s.observe(
            "double d-scalar invariant under conjugating both objects with identity structure maps",
            naive == 0,
            format!("mismatching tuples: {naive}"),
        );
        let x = cat.x();
        let mut sym = Vec::new();
        let mut inv = Vec::new();
        let table: Vec<Vec<bool>> =
            x.elements().map(|a| x.elements().map(|b| centralizer::g_centralize(irr, a, b)).collect()).collect();
        for a in x.elements() {
            for b in x.elements() {
                if table[a][b] != table[b][a] {
                    sym.push(format!("({a},{b})"));
                }
                if table[a][b] {
                    for m in cat.g().elements() {
                        for n in cat.g().elements() {
                            if !table[cat.act(m, a)][cat.act(n, b)] {
                                inv.push(format!("({a},{b}) by ({m},{n})"));
                            }
                        }
                    }
                }
            }
        }
        s.record("centralizer", "G-centralization is symmetric", sym);
        s.record("centralizer", "G-centralization is G-invariant in each argument", inv);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::crossed::{Limits, RawInstance};

    fn run(raw: RawInstance, level: Level) -> CheckReport {
        run_checks(Arc::new(PointedCrossedCategory::validate(&raw, Limits::default()).unwrap()), level)
    }

    #[test]
    fn full_suite_passes_on_small_instances() {
        for raw in [
            RawInstance::untwisted_double(&FiniteGroup::cyclic(2)),
            RawInstance::twisted_c2(),
            RawInstance::central_c2(),
            RawInstance::untwisted_double(&FiniteGroup::s3()),
        ] {
            let r = run(raw, Level::Full);
            let failed: Vec<&Outcome> = r.failures().collect();
            assert!(failed.is_empty(), "{failed:#?}");
        }
    }

    #[test]
    fn toric_code_records_the_join_observation() {
        let r = run(RawInstance::untwisted_double(&FiniteGroup::cyclic(2)), Level::Fast);
        let obs = r.observations.iter().find(|o| o.name.starts_with("H of a join")).unwrap();
        assert!(!obs.holds);
    }
}
