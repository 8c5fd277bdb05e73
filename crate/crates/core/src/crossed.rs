//! Crossed modules with quasi-abelian 3-cocycles, validated into a pointed braided crossed
//! category with scalar accessors.
//!
//! Chosen isomorphisms are identities, so every structure map is a root of unity read off the
//! tables `w` (associator), `gam` (action coherence), `mu` (monoidality of the action) and
//! `c` (crossed braiding `k_x ⊗ k_y → k_{∂x·y} ⊗ k_x`).

use std::fmt;
use std::sync::Arc;

use num_integer::Integer;
use serde::Serialize;
use thiserror::Error;

use crate::cyclotomic::Root;
use crate::group::{FiniteGroup, GroupAction, GroupError, GroupHom, Subgroup};
use crate::projchar::{required_order, Cocycle2};

/// Size limits applied when loading an instance and enumerating its lattice.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    pub group: usize,
    pub product: usize,
    pub subcats: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits { group: 48, product: 576, subcats: 4096 }
    }
}

/// Unvalidated instance data: Cayley tables, action, boundary and exponent tables mod `order`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RawInstance {
    pub order: u32,
    pub g_name: String,
    pub g_table: Vec<Vec<usize>>,
    pub x_name: String,
    pub x_table: Vec<Vec<usize>>,
    /// `action[g][x] = ᵍx`
    pub action: Vec<Vec<usize>>,
    /// `boundary[x] = ∂x`
    pub boundary: Vec<usize>,
    /// index `(x·|X| + y)·|X| + z`
    pub w: Vec<u32>,
    /// index `(g·|G| + h)·|X| + x`
    pub gam: Vec<u32>,
    /// index `(g·|X| + x)·|X| + y`
    pub mu: Vec<u32>,
    /// index `x·|X| + y`
    pub c: Vec<u32>,
}

/// One violated identity with its argument tuple.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub identity: String,
    pub args: Vec<usize>,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let args: Vec<String> = self.args.iter().map(|a| a.to_string()).collect();
        write!(f, "{} at ({})", self.identity, args.join(","))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InstanceError {
    #[error("group {which}: {err}")]
    Group { which: String, err: GroupError },
    #[error("table {table} has {got} entries, expected {want}")]
    TableSize { table: String, got: usize, want: usize },
    #[error("exponent {value} in table {table} is not reduced mod {order}")]
    Unreduced { table: String, value: u32, order: u32 },
    #[error("{} violation(s), first: {}", .0.len(), .0[0])]
    Violations(Vec<Violation>),
    #[error("instance too large: {0}")]
    LimitExceeded(String),
    #[error("{0} is not in the stabilizer")]
    NotInStabilizer(String),
}

/// Crossed module `(G, X, ∂)` with its action.
#[derive(Debug, Clone)]
pub struct CrossedModule {
    pub g: Arc<FiniteGroup>,
    pub x: Arc<FiniteGroup>,
    pub act: GroupAction,
    pub bd: GroupHom,
}

/// The cocycle tables `(ω, γ, μ, c)` as exponents of `ζ_order`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuasiAbelianCocycle {
    pub order: u32,
    pub w: Vec<u32>,
    pub gam: Vec<u32>,
    pub mu: Vec<u32>,
    pub c: Vec<u32>,
}

impl QuasiAbelianCocycle {
    fn rescale(&self, m: u32) -> Self {
        let f = m / self.order;
        let s = |v: &Vec<u32>| v.iter().map(|e| e * f).collect();
        QuasiAbelianCocycle { order: m, w: s(&self.w), gam: s(&self.gam), mu: s(&self.mu), c: s(&self.c) }
    }
}

/// A validated instance. All scalars are `order()`-th roots of unity.
#[derive(Debug, Clone)]
pub struct PointedCrossedCategory {
    pub cm: CrossedModule,
    pub xi: QuasiAbelianCocycle,
    declared: QuasiAbelianCocycle,
    canon: Vec<usize>,
    transporter: Vec<usize>,
    stabilizers: Vec<Subgroup>,
    alphas: Vec<Cocycle2>,
    limits: Limits,
}

struct Checker {
    n: u32,
    found: Vec<Violation>,
    cap: usize,
}

impl Checker {
    fn expect(&mut self, identity: &str, lhs: u64, rhs: u64, args: &[usize]) {
        if lhs % self.n as u64 != rhs % self.n as u64 && self.found.len() < self.cap {
            self.found.push(Violation { identity: identity.to_string(), args: args.to_vec() });
        }
    }
}

impl PointedCrossedCategory {
    /// Validates raw data against every axiom and reports all violations found (up to 64).
    pub fn validate(raw: &RawInstance, limits: Limits) -> Result<Self, InstanceError> {
        let g = FiniteGroup::from_table(&raw.g_name, &raw.g_table)
            .map_err(|err| InstanceError::Group { which: "G".into(), err })?;
        let x = FiniteGroup::from_table(&raw.x_name, &raw.x_table)
            .map_err(|err| InstanceError::Group { which: "X".into(), err })?;
        let (ng, nx) = (g.order(), x.order());
        if ng > limits.group || nx > limits.group || ng * nx > limits.product {
            return Err(InstanceError::LimitExceeded(format!(
                "|G| = {ng}, |X| = {nx}; limits {} each and {} for the product",
                limits.group, limits.product
            )));
        }
        let act = GroupAction::new(&g, &x, raw.action.clone())
            .map_err(|err| InstanceError::Group { which: "action".into(), err })?;
        let bd = GroupHom::new(&x, &g, raw.boundary.clone())
            .map_err(|err| InstanceError::Group { which: "boundary".into(), err })?;
        let n = raw.order;
        if n == 0 {
            return Err(InstanceError::Unreduced { table: "order".into(), value: 0, order: 0 });
        }
        for (name, table, want) in [
            ("w", &raw.w, nx * nx * nx),
            ("gam", &raw.gam, ng * ng * nx),
            ("mu", &raw.mu, ng * nx * nx),
            ("c", &raw.c, nx * nx),
        ] {
            if table.len() != want {
                return Err(InstanceError::TableSize { table: name.into(), got: table.len(), want });
            }
            if let Some(&value) = table.iter().find(|&&v| v >= n) {
                return Err(InstanceError::Unreduced { table: name.into(), value, order: n });
            }
        }
        let cm = CrossedModule { g: Arc::new(g), x: Arc::new(x), act, bd };
        let xi = QuasiAbelianCocycle { order: n, w: raw.w.clone(), gam: raw.gam.clone(), mu: raw.mu.clone(), c: raw.c.clone() };
        let found = check_axioms(&cm, &xi);
        if !found.is_empty() {
            return Err(InstanceError::Violations(found));
        }
        Ok(Self::assemble(cm, xi, limits))
    }

    fn assemble(cm: CrossedModule, declared: QuasiAbelianCocycle, limits: Limits) -> Self {
        let (g, x) = (&cm.g, &cm.x);
        let nx = x.order();
        let orbits = cm.act.orbits(nx);
        let mut canon = vec![0; nx];
        let mut transporter = vec![0; nx];
        for o in &orbits {
            for &y in o {
                canon[y] = o[0];
                transporter[y] = cm.act.transporter(o[0], y).expect("same orbit");
            }
        }
        let stabilizers: Vec<Subgroup> = x.elements().map(|y| cm.act.stabilizer(g, y)).collect();
        let base = (declared.order as usize).lcm(&g.exponent()).lcm(&x.exponent()) as u32;
        let mut cat = PointedCrossedCategory {
            xi: declared.rescale(base),
            cm,
            declared,
            canon,
            transporter,
            stabilizers,
            alphas: Vec::new(),
            limits,
        };
        cat.alphas = (0..nx).map(|y| cat.build_alpha(y)).collect();
        let need = cat.alphas.iter().fold(base, |m, a| m.lcm(&required_order(a)));
        if need != base {
            cat.xi = cat.declared.rescale(need);
            cat.alphas = (0..nx).map(|y| cat.build_alpha(y)).collect();
        }
        cat
    }

    fn build_alpha(&self, y: usize) -> Cocycle2 {
        let c = Cocycle2::new(self.cm.g.clone(), self.stabilizers[y].clone(), self.xi.order, {
            let ng = self.cm.g.order();
            let mut t = vec![0u32; ng * ng];
            for &a in self.stabilizers[y].members() {
                for &b in self.stabilizers[y].members() {
                    t[a * ng + b] = self.gamma(a, b, y).exp();
                }
            }
            t
        });
        c.expect("validated instances restrict to 2-cocycles on stabilizers")
    }

    /// The untwisted double of `g`: `X = G`, `∂ = id`, conjugation action, trivial tables.
    pub fn untwisted_double(g: &FiniteGroup, limits: Limits) -> Result<Self, InstanceError> {
        Self::validate(&RawInstance::untwisted_double(g), limits)
    }

    /// The raw tables in the declared scalar order, for serialization.
    pub fn to_raw(&self) -> RawInstance {
        let d = &self.declared;
        RawInstance {
            order: d.order,
            g_name: self.cm.g.name().to_string(),
            g_table: self.cm.g.rows(),
            x_name: self.cm.x.name().to_string(),
            x_table: self.cm.x.rows(),
            action: self.cm.act.rows().to_vec(),
            boundary: self.cm.bd.table().to_vec(),
            w: d.w.clone(),
            gam: d.gam.clone(),
            mu: d.mu.clone(),
            c: d.c.clone(),
        }
    }

    pub fn g(&self) -> &Arc<FiniteGroup> {
        &self.cm.g
    }

    pub fn x(&self) -> &Arc<FiniteGroup> {
        &self.cm.x
    }

    pub fn limits(&self) -> Limits {
        self.limits
    }

    /// The global scalar order `N`.
    pub fn order(&self) -> u32 {
        self.xi.order
    }

    pub fn declared_order(&self) -> u32 {
        self.declared.order
    }

    #[inline]
    pub fn act(&self, g: usize, x: usize) -> usize {
        self.cm.act.act(g, x)
    }

    /// The grading `δ(x) = ∂x`.
    #[inline]
    pub fn degree(&self, x: usize) -> usize {
        self.cm.bd.apply(x)
    }

    fn root(&self, e: u32) -> Root {
        Root::new(self.xi.order, e as i64)
    }

    pub fn omega3(&self, x: usize, y: usize, z: usize) -> Root {
        let n = self.cm.x.order();
        self.root(self.xi.w[(x * n + y) * n + z])
    }

    pub fn gamma(&self, g: usize, h: usize, x: usize) -> Root {
        let (ng, nx) = (self.cm.g.order(), self.cm.x.order());
        self.root(self.xi.gam[(g * ng + h) * nx + x])
    }

    pub fn mu(&self, g: usize, x: usize, y: usize) -> Root {
        let nx = self.cm.x.order();
        self.root(self.xi.mu[(g * nx + x) * nx + y])
    }

    /// The braiding scalar of `k_x ⊗ k_y → k_{∂x·y} ⊗ k_x`.
    pub fn braid_scalar(&self, x: usize, y: usize) -> Root {
        self.root(self.xi.c[x * self.cm.x.order() + y])
    }

    /// The scalar by which `g` acts on the one-dimensional multiplicity space of `k_{yz}` in `k_y ⊗ k_z`.
    pub fn tau_scalar(&self, g: usize, y: usize, z: usize) -> Root {
        self.mu(g, y, z)
    }

    /// `α_x(g, h) = γ(g, h; x)` on the stabilizer of `x`.
    pub fn alpha_at(&self, x: usize) -> &Cocycle2 {
        &self.alphas[x]
    }

    /// `D_{g,y}(h) = γ(ghg⁻¹, g; y) / γ(g, h; y)` for `h ∈ G_y`.
    pub fn d_gamma(&self, g: usize, y: usize, h: usize) -> Result<Root, InstanceError> {
        if !self.stabilizers[y].contains(h) {
            return Err(InstanceError::NotInStabilizer(format!("{h} (of G_{y})")));
        }
        Ok(self.d_gamma_unchecked(g, y, h))
    }

    pub(crate) fn d_gamma_unchecked(&self, g: usize, y: usize, h: usize) -> Root {
        let gr = &self.cm.g;
        self.gamma(gr.conj(g, h), g, y) * self.gamma(g, h, y).inv()
    }

    pub fn stabilizer(&self, x: usize) -> &Subgroup {
        &self.stabilizers[x]
    }

    pub fn orbit(&self, x: usize) -> Vec<usize> {
        self.cm.act.orbit(x)
    }

    /// Orbit representatives (minimal indices), ascending.
    pub fn orbit_reps(&self) -> Vec<usize> {
        (0..self.cm.x.order()).filter(|&y| self.canon[y] == y).collect()
    }

    pub fn canonical(&self, y: usize) -> usize {
        self.canon[y]
    }

    /// The least `t` with `ᵗ(canonical(y)) = y`.
    pub fn transporter(&self, y: usize) -> usize {
        self.transporter[y]
    }

    /// `G₁ = ∂(X)`.
    pub fn grading_image(&self) -> Subgroup {
        self.cm.bd.image()
    }

    pub fn boundary_kernel(&self) -> Subgroup {
        self.cm.bd.kernel(&self.cm.x, &self.cm.g)
    }

    pub fn grading_surjective(&self) -> bool {
        self.cm.bd.is_surjective()
    }

    /// The set `{ᵍy : g ∈ G, y ∈ Y}` is `Y`.
    pub fn is_stable(&self, y: &Subgroup) -> bool {
        self.cm.act.is_stable(y)
    }

    pub fn is_untwisted(&self) -> bool {
        let z = |v: &Vec<u32>| v.iter().all(|&e| e == 0);
        z(&self.xi.w) && z(&self.xi.gam) && z(&self.xi.mu) && z(&self.xi.c)
    }
}

impl RawInstance {
    pub fn untwisted_double(g: &FiniteGroup) -> Self {
        let n = g.order();
        RawInstance {
            order: g.exponent() as u32,
            g_name: g.name().to_string(),
            g_table: g.rows(),
            x_name: g.name().to_string(),
            x_table: g.rows(),
            action: GroupAction::conjugation(g).rows().to_vec(),
            boundary: g.elements().collect(),
            w: vec![0; n * n * n],
            gam: vec![0; n * n * n],
            mu: vec![0; n * n * n],
            c: vec![0; n * n],
        }
    }
}

impl RawInstance {
    /// `G = X = Z/2`, `∂ = id`, trivial action, with `γ(s,s;s) = μ(s;s,s) = −1` and
    /// `c(s,s) = i` in fourth roots of unity.
    pub fn twisted_c2() -> Self {
        let mut raw = Self::untwisted_double(&FiniteGroup::cyclic(2));
        raw.order = 4;
        raw.g_name = "c2".into();
        raw.x_name = "c2".into();
        raw.gam[7] = 2;
        raw.mu[7] = 2;
        raw.c[3] = 1;
        raw
    }

    /// Gauge change by the cochain `u: G × X → μ_N`, forced to be normalized:
    /// `γ′ = γ·u(gh,x)/(u(g,ʰx)u(h,x))`, `μ′ = μ·u(g,x)u(g,y)/u(g,xy)`, `c′(x,y) = c(x,y)·u(∂x,y)`.
    /// The result is an equivalent instance with the same simples and fusion rules.
    pub fn gauge_transform(&self, u: impl Fn(usize, usize) -> u32) -> RawInstance {
        let ng = self.g_table.len();
        let nx = self.x_table.len();
        let n = self.order as u64;
        let eg = (0..ng).find(|&e| self.g_table[e][e] == e).expect("identity");
        let ex = (0..nx).find(|&e| self.x_table[e][e] == e).expect("identity");
        let uu = |g: usize, x: usize| if g == eg || x == ex { 0 } else { u(g, x) as u64 % n };
        let red = |v: u64| (v % n) as u32;
        let mut out = self.clone();
        for g in 0..ng {
            for h in 0..ng {
                for x in 0..nx {
                    let i = (g * ng + h) * nx + x;
                    let gh = self.g_table[g][h];
                    out.gam[i] = red(self.gam[i] as u64 + uu(gh, x) + 2 * n - uu(g, self.action[h][x]) - uu(h, x));
                }
            }
            for x in 0..nx {
                for y in 0..nx {
                    let i = (g * nx + x) * nx + y;
                    out.mu[i] = red(self.mu[i] as u64 + uu(g, x) + uu(g, y) + n - uu(g, self.x_table[x][y]));
                }
            }
        }
        for x in 0..nx {
            for y in 0..nx {
                out.c[x * nx + y] = red(self.c[x * nx + y] as u64 + uu(self.boundary[x], y));
            }
        }
        out
    }

    /// The double of `S₃` after a fixed gauge change, so that `γ`, `μ` and `c` are all
    /// nontrivial on a nonabelian group.
    pub fn twisted_s3() -> Self {
        let mut raw = Self::untwisted_double(&FiniteGroup::s3()).gauge_transform(|g, x| (g * g + 2 * x + g * x) as u32);
        raw.g_name = "s3".into();
        raw.x_name = "s3".into();
        raw
    }

    /// `G = X = Z/2` with trivial boundary and action and trivial tables; the grading is not
    /// faithful.
    pub fn central_c2() -> Self {
        let mut raw = Self::untwisted_double(&FiniteGroup::cyclic(2));
        raw.boundary = vec![0, 0];
        raw
    }
}

/// Crossed-module axioms, cocycle identities and the scalar braiding axioms.
fn check_axioms(cm: &CrossedModule, xi: &QuasiAbelianCocycle) -> Vec<Violation> {
    let (g, x) = (&*cm.g, &*cm.x);
    let (ng, nx) = (g.order(), x.order());
    let n = xi.order;
    let mut ck = Checker { n, found: Vec::new(), cap: 64 };
    let neg = |e: u32| ((n - e % n) % n) as u64;
    let w = |a: usize, b: usize, c: usize| xi.w[(a * nx + b) * nx + c] as u64;
    let gam = |a: usize, b: usize, y: usize| xi.gam[(a * ng + b) * nx + y] as u64;
    let mu = |a: usize, y: usize, z: usize| xi.mu[(a * nx + y) * nx + z] as u64;
    let c = |y: usize, z: usize| xi.c[y * nx + z] as u64;
    let act = |a: usize, y: usize| cm.act.act(a, y);
    let bd = |y: usize| cm.bd.apply(y);
    let (eg, ex) = (g.identity(), x.identity());

    for a in x.elements() {
        for b in x.elements() {
            if act(bd(a), b) != x.conj(a, b) {
                ck.found.push(Violation { identity: "boundary acts by conjugation".into(), args: vec![a, b] });
            }
        }
    }
    for a in g.elements() {
        for y in x.elements() {
            if bd(act(a, y)) != g.conj(a, bd(y)) {
                ck.found.push(Violation { identity: "boundary equivariance".into(), args: vec![a, y] });
            }
        }
    }
    if !ck.found.is_empty() {
        return ck.found;
    }

    for a in x.elements() {
        for b in x.elements() {
            for cc in x.elements() {
                if a == ex || b == ex || cc == ex {
                    ck.expect("w normalized", w(a, b, cc), 0, &[a, b, cc]);
                }
                for d in x.elements() {
                    let lhs = w(b, cc, d) + w(a, x.mul(b, cc), d) + w(a, b, cc);
                    let rhs = w(x.mul(a, b), cc, d) + w(a, b, x.mul(cc, d));
                    ck.expect("w 3-cocycle", lhs, rhs, &[a, b, cc, d]);
                }
            }
        }
    }
    for a in g.elements() {
        for y in x.elements() {
            for z in x.elements() {
                if a == eg || y == ex || z == ex {
                    ck.expect("mu normalized", mu(a, y, z), 0, &[a, y, z]);
                }
            }
        }
        for b in g.elements() {
            for y in x.elements() {
                if a == eg || b == eg || y == ex {
                    ck.expect("gam normalized", gam(a, b, y), 0, &[a, b, y]);
                }
            }
        }
    }
    for y in x.elements() {
        ck.expect("c normalized", c(ex, y), 0, &[ex, y]);
        ck.expect("c normalized", c(y, ex), 0, &[y, ex]);
    }
    // ω(x,y,z)/ω(ᵍx,ᵍy,ᵍz) = μ(g;y,z)μ(g;x,yz)/(μ(g;xy,z)μ(g;x,y))
    for a in g.elements() {
        for p in x.elements() {
            for q in x.elements() {
                for r in x.elements() {
                    let lhs = w(p, q, r) + neg(w(act(a, p), act(a, q), act(a, r)) as u32) + mu(a, x.mul(p, q), r) + mu(a, p, q);
                    let rhs = mu(a, q, r) + mu(a, p, x.mul(q, r));
                    ck.expect("w equivariance", lhs, rhs, &[a, p, q, r]);
                }
            }
        }
    }
    // γ(h,l;x)γ(g,hl;x) = γ(gh,l;x)γ(g,h;ˡx)
    for a in g.elements() {
        for b in g.elements() {
            for l in g.elements() {
                for y in x.elements() {
                    let lhs = gam(b, l, y) + gam(a, g.mul(b, l), y);
                    let rhs = gam(g.mul(a, b), l, y) + gam(a, b, act(l, y));
                    ck.expect("gam 2-cocycle", lhs, rhs, &[a, b, l, y]);
                }
            }
        }
    }
    // μ(g;ʰx,ʰy)μ(h;x,y)γ(g,h;x)γ(g,h;y) = μ(gh;x,y)γ(g,h;xy)
    for a in g.elements() {
        for b in g.elements() {
            let ab = g.mul(a, b);
            for p in x.elements() {
                for q in x.elements() {
                    let lhs = mu(a, act(b, p), act(b, q)) + mu(b, p, q) + gam(a, b, p) + gam(a, b, q);
                    let rhs = mu(ab, p, q) + gam(a, b, x.mul(p, q));
                    ck.expect("mu/gam compatibility", lhs, rhs, &[a, b, p, q]);
                }
            }
        }
    }
    // μ(g;x,y)c(ᵍx,ᵍy)γ(ghg⁻¹,g;y) = c(x,y)μ(g;ʰy,x)γ(g,h;y), h = ∂x
    for a in g.elements() {
        for p in x.elements() {
            let h = bd(p);
            for q in x.elements() {
                let lhs = mu(a, p, q) + c(act(a, p), act(a, q)) + gam(g.conj(a, h), a, q);
                let rhs = c(p, q) + mu(a, act(h, q), p) + gam(a, h, q);
                ck.expect("braiding equivariance", lhs, rhs, &[a, p, q]);
            }
        }
    }
    for p in x.elements() {
        let gp = bd(p);
        for q in x.elements() {
            let hq = bd(q);
            for r in x.elements() {
                // c(xy,z)γ(g,h;z)⁻¹ω(x,y,z)⁻¹ω(ᵍʰz,x,y)⁻¹ = c(x,ʰz)c(y,z)ω(x,ʰz,y)⁻¹
                let hr = act(hq, r);
                let lhs = c(x.mul(p, q), r) + w(p, hr, q);
                let rhs = c(p, hr) + c(q, r) + gam(gp, hq, r) + w(p, q, r) + w(act(gp, hr), p, q);
                ck.expect("braiding hexagon (tensor on the left)", lhs, rhs, &[p, q, r]);
                // ω(x,y,z)c(x,yz)μ(g;y,z)ω(ᵍy,ᵍz,x) = c(x,y)ω(ᵍy,x,z)c(x,z)
                let lhs = w(p, q, r) + c(p, x.mul(q, r)) + mu(gp, q, r) + w(act(gp, q), act(gp, r), p);
                let rhs = c(p, q) + w(act(gp, q), p, r) + c(p, r);
                ck.expect("braiding hexagon (tensor on the right)", lhs, rhs, &[p, q, r]);
            }
        }
    }
    ck.found
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn untwisted_doubles_validate() {
        for name in ["c1", "c2", "c3", "klein4", "s3"] {
            let g = FiniteGroup::builtin(name).unwrap();
            let cat = PointedCrossedCategory::untwisted_double(&g, Limits::default()).unwrap();
            assert_eq!(cat.order() as usize, g.exponent());
            assert!(cat.alpha_at(0).is_trivial());
        }
    }

    #[test]
    fn flipped_w_entry_is_reported() {
        let mut raw = RawInstance::untwisted_double(&FiniteGroup::cyclic(2));
        raw.w[3] = 1;
        match PointedCrossedCategory::validate(&raw, Limits::default()) {
            Err(InstanceError::Violations(v)) => assert!(v.iter().any(|v| v.identity == "w 3-cocycle")),
            other => panic!("expected violations, got {other:?}"),
        }
        // w(s,s,s) = -1 is a 3-cocycle, but the trivial braiding no longer satisfies the hexagons
        let mut raw = RawInstance::untwisted_double(&FiniteGroup::cyclic(2));
        raw.w[7] = 1;
        match PointedCrossedCategory::validate(&raw, Limits::default()) {
            Err(InstanceError::Violations(v)) => {
                assert!(v.iter().all(|v| v.identity != "w 3-cocycle"));
                assert!(v.iter().any(|v| v.identity.starts_with("braiding hexagon")));
            }
            other => panic!("expected violations, got {other:?}"),
        }
    }

    #[test]
    fn accessors_on_untwisted_instance() {
        let cat = PointedCrossedCategory::untwisted_double(&FiniteGroup::s3(), Limits::default()).unwrap();
        for g in 0..6 {
            for y in 0..6 {
                assert!(cat.tau_scalar(g, y, y).is_one());
                assert_eq!(cat.degree(y), y);
                for h in cat.stabilizer(y).members() {
                    assert!(cat.d_gamma(g, y, *h).unwrap().is_one());
                }
            }
        }
        let nonstab = (0..6).find(|&h| !cat.stabilizer(1).contains(h)).unwrap();
        assert!(cat.d_gamma(0, 1, nonstab).is_err());
    }

    #[test]
    fn limits_are_enforced() {
        let limits = Limits { group: 4, ..Limits::default() };
        assert!(matches!(
            PointedCrossedCategory::untwisted_double(&FiniteGroup::s3(), limits),
            Err(InstanceError::LimitExceeded(_))
        ));
    }
}
