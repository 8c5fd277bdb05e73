//! Characters of projective representations of (subgroups of) a finite group.
//!
//! Conventions: a projective representation with cocycle α satisfies
//! `ρ(g)ρ(h) = α(g,h)ρ(gh)`. Irreducibles are computed as ordinary characters of the central
//! extension `{(k, g)}` with `(k, g)(k', g') = (k + k' + a(g, g'), gg')` on which `(1, e)` acts
//! by a primitive root, via the Dixon method over a prime field.

use std::collections::hash_map::DefaultHasher;
use std::collections::HashMap;
use std::hash::{Hash, Hasher};
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::Zero;
use thiserror::Error;

use crate::cyclotomic::{Cyclotomic, Root};
use crate::group::{FiniteGroup, Subgroup};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ProjError {
    #[error("cocycle identity fails at ({0},{1},{2})")]
    CocycleIdentity(usize, usize, usize),
    #[error("cocycle is not normalized at ({0},{1})")]
    Normalization(usize, usize),
    #[error("exponent {value} at ({g},{h}) is not reduced mod {order}")]
    Unreduced { g: usize, h: usize, value: u32, order: u32 },
    #[error("characters have different cocycles or domains")]
    CocycleMismatch,
    #[error("inner product {0} is not a nonnegative integer")]
    NonInteger(String),
    #[error("scalar order {have} is not a multiple of the needed order {need}")]
    FieldTooSmall { need: u32, have: u32 },
    #[error("{0} is not a subgroup of the target domain, or the cocycles disagree on it")]
    Incompatible(String),
    #[error("character is not linear")]
    NotLinear,
    #[error("character computation failed: {0}")]
    Internal(String),
}

/// A normalized 2-cocycle with values in μ_N on a subgroup `domain` of an ambient group.
#[derive(Debug, Clone)]
pub struct Cocycle2 {
    group: Arc<FiniteGroup>,
    domain: Subgroup,
    order: u32,
    // ambient n × n exponent table; entries outside domain pairs are zero
    exps: Arc<Vec<u32>>,
}

impl PartialEq for Cocycle2 {
    fn eq(&self, other: &Self) -> bool {
        self.order == other.order
            && self.domain == other.domain
            && self.domain.members().iter().all(|&g| self.domain.members().iter().all(|&h| self.exp(g, h) == other.exp(g, h)))
    }
}

impl Cocycle2 {
    /// Validates normalization and the cocycle identity on `domain`.
    pub fn new(group: Arc<FiniteGroup>, domain: Subgroup, order: u32, exps: Vec<u32>) -> Result<Self, ProjError> {
        let n = group.order();
        assert_eq!(exps.len(), n * n, "exponent table must be ambient-sized");
        let mut masked = vec![0u32; n * n];
        for &g in domain.members() {
            for &h in domain.members() {
                let v = exps[g * n + h];
                if v >= order {
                    return Err(ProjError::Unreduced { g, h, value: v, order });
                }
                masked[g * n + h] = v;
            }
        }
        let c = Cocycle2 { group, domain, order, exps: Arc::new(masked) };
        c.check()?;
        Ok(c)
    }

    /// Builds from a function on domain pairs without validation.
    pub(crate) fn from_fn_unchecked(group: Arc<FiniteGroup>, domain: Subgroup, order: u32, f: impl Fn(usize, usize) -> u32) -> Self {
        let n = group.order();
        let mut exps = vec![0u32; n * n];
        for &g in domain.members() {
            for &h in domain.members() {
                exps[g * n + h] = f(g, h) % order;
            }
        }
        Cocycle2 { group, domain, order, exps: Arc::new(exps) }
    }

    pub fn trivial(group: Arc<FiniteGroup>, domain: Subgroup, order: u32) -> Self {
        Self::from_fn_unchecked(group, domain, order, |_, _| 0)
    }

    /// The first violated normalization or cocycle identity.
    pub fn check(&self) -> Result<(), ProjError> {
        let g = &self.group;
        let e = g.identity();
        for &a in self.domain.members() {
            if self.exp(a, e) != 0 || self.exp(e, a) != 0 {
                return Err(ProjError::Normalization(a, e));
            }
        }
        let n = self.order;
        for &a in self.domain.members() {
            for &b in self.domain.members() {
                let ab = g.mul(a, b);
                for &t in self.domain.members() {
                    let lhs = self.exp(a, b) + self.exp(ab, t);
                    let rhs = self.exp(a, g.mul(b, t)) + self.exp(b, t);
                    if lhs % n != rhs % n {
                        return Err(ProjError::CocycleIdentity(a, b, t));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn domain(&self) -> &Subgroup {
        &self.domain
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    #[inline]
    pub fn exp(&self, g: usize, h: usize) -> u32 {
        self.exps[g * self.group.order() + h]
    }

    #[inline]
    pub fn value(&self, g: usize, h: usize) -> Root {
        Root::new(self.order, self.exp(g, h) as i64)
    }

    pub fn is_trivial(&self) -> bool {
        self.domain.members().iter().all(|&g| self.domain.members().iter().all(|&h| self.exp(g, h) == 0))
    }

    pub fn restrict(&self, h: &Subgroup) -> Result<Self, ProjError> {
        if !h.is_subgroup_of(&self.domain) {
            return Err(ProjError::Incompatible("restriction subgroup".into()));
        }
        Ok(Self::from_fn_unchecked(self.group.clone(), h.clone(), self.order, |a, b| self.exp(a, b)))
    }

    pub fn inverse(&self) -> Self {
        let n = self.order;
        Self::from_fn_unchecked(self.group.clone(), self.domain.clone(), n, |a, b| (n - self.exp(a, b)) % n)
    }

    pub fn product(&self, other: &Self) -> Result<Self, ProjError> {
        if self.domain != other.domain || self.order != other.order {
            return Err(ProjError::CocycleMismatch);
        }
        Ok(Self::from_fn_unchecked(self.group.clone(), self.domain.clone(), self.order, |a, b| self.exp(a, b) + other.exp(a, b)))
    }

    /// Order of the subgroup of μ_N generated by the cocycle values.
    pub fn value_order(&self) -> u32 {
        let mut m = 1u32;
        for &a in self.domain.members() {
            for &b in self.domain.members() {
                m = m.lcm(&self.value(a, b).multiplicative_order());
            }
        }
        m
    }

    fn fingerprint(&self) -> u64 {
        let mut h = DefaultHasher::new();
        self.group.rows().hash(&mut h);
        self.domain.members().hash(&mut h);
        self.order.hash(&mut h);
        for &a in self.domain.members() {
            for &b in self.domain.members() {
                self.exp(a, b).hash(&mut h);
            }
        }
        h.finish()
    }
}

/// The central extension realizing α-projective representations of the domain.
pub struct CentralExtension {
    pub ext: FiniteGroup,
    /// order of the central subgroup
    pub kernel_order: u32,
    members: Vec<usize>,
    pos: HashMap<usize, usize>,
}

impl CentralExtension {
    pub fn new(cocycle: &Cocycle2) -> Self {
        let kord = cocycle.value_order();
        let step = cocycle.order() / kord;
        let members = cocycle.domain().members().to_vec();
        let d = members.len();
        let pos: HashMap<usize, usize> = members.iter().enumerate().map(|(i, &g)| (g, i)).collect();
        let g = cocycle.group();
        let size = kord as usize * d;
        let rows: Vec<Vec<usize>> = (0..size)
            .map(|a| {
                let (ka, ia) = (a / d, a % d);
                (0..size)
                    .map(|b| {
                        let (kb, ib) = (b / d, b % d);
                        let (ga, gb) = (members[ia], members[ib]);
                        let k = (ka + kb + (cocycle.exp(ga, gb) / step) as usize) % kord as usize;
                        k * d + pos[&g.mul(ga, gb)]
                    })
                    .collect()
            })
            .collect();
        let ext = FiniteGroup::from_table("ext", &rows).expect("central extension is a group");
        CentralExtension { ext, kernel_order: kord, members, pos }
    }

    /// Index of `(k, g)`.
    pub fn element(&self, k: u32, g: usize) -> usize {
        k as usize * self.members.len() + self.pos[&g]
    }

    pub fn project(&self, a: usize) -> usize {
        self.members[a % self.members.len()]
    }

    pub fn central_part(&self, a: usize) -> u32 {
        (a / self.members.len()) as u32
    }
}

/// The character of a projective representation, valued in Q(ζ_N) with `N = cocycle.order()`.
#[derive(Debug, Clone, PartialEq)]
pub struct ProjChar {
    cocycle: Cocycle2,
    degree: u32,
    // ambient-indexed, zero outside the domain
    values: Vec<Cyclotomic>,
}

impl ProjChar {
    /// Wraps a value table; `values` is ambient-indexed.
    pub fn from_values(cocycle: Cocycle2, values: Vec<Cyclotomic>) -> Self {
        let e = cocycle.group().identity();
        let degree = values[e].to_integer().expect("character degree is an integer") as u32;
        ProjChar { cocycle, degree, values }
    }

    pub fn from_fn(cocycle: Cocycle2, f: impl Fn(usize) -> Cyclotomic) -> Self {
        let n = cocycle.group().order();
        let order = cocycle.order();
        let values = (0..n).map(|g| if cocycle.domain().contains(g) { f(g) } else { Cyclotomic::zero(order) }).collect();
        Self::from_values(cocycle, values)
    }

    /// The linear character with root values `f`.
    pub fn linear(cocycle: Cocycle2, f: impl Fn(usize) -> Root) -> Self {
        let n = cocycle.order();
        Self::from_fn(cocycle, |g| Cyclotomic::from_root(n, f(g)))
    }

    pub fn trivial(group: Arc<FiniteGroup>, domain: Subgroup, order: u32) -> Self {
        Self::linear(Cocycle2::trivial(group, domain, order), |_| Root::one(order))
    }

    /// The regular character of the twisted group algebra.
    pub fn regular(cocycle: Cocycle2) -> Self {
        let n = cocycle.order();
        let e = cocycle.group().identity();
        let d = cocycle.domain().order() as i64;
        Self::from_fn(cocycle, |g| if g == e { Cyclotomic::from_int(n, d) } else { Cyclotomic::zero(n) })
    }

    pub fn cocycle(&self) -> &Cocycle2 {
        &self.cocycle
    }

    pub fn domain(&self) -> &Subgroup {
        self.cocycle.domain()
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn value(&self, g: usize) -> &Cyclotomic {
        &self.values[g]
    }

    pub fn values(&self) -> &[Cyclotomic] {
        &self.values
    }

    /// `(1/|G|) Σ_g α(g⁻¹,g)⁻¹ χ′(g) χ(g⁻¹)`, the multiplicity of `self` in `other`.
    pub fn multiplicity_in(&self, other: &ProjChar) -> Result<u32, ProjError> {
        multiplicity(self, other)
    }

    pub fn restrict(&self, h: &Subgroup) -> Result<ProjChar, ProjError> {
        let c = self.cocycle.restrict(h)?;
        Ok(ProjChar::from_fn(c, |g| self.values[g].clone()))
    }

    pub fn tensor(&self, other: &ProjChar) -> Result<ProjChar, ProjError> {
        let c = self.cocycle.product(&other.cocycle)?;
        Ok(ProjChar::from_fn(c, |g| &self.values[g] * &other.values[g]))
    }

    pub fn dual(&self) -> ProjChar {
        ProjChar::from_fn(self.cocycle.inverse(), |g| self.values[g].conj())
    }

    /// Multiplies pointwise by root values without changing the recorded cocycle.
    pub fn twist_by(&self, cocycle: Cocycle2, f: impl Fn(usize) -> Root) -> ProjChar {
        ProjChar::from_fn(cocycle, |g| self.values[g].mul_root(f(g)))
    }

    /// `χ(h)/χ(1)` when it is a root of unity, meaning `h` acts by a scalar.
    pub fn scalar_action(&self, h: usize) -> Option<Root> {
        if !self.domain().contains(h) {
            return None;
        }
        let q = BigRational::new(BigInt::from(1), BigInt::from(self.degree));
        self.values[h].scale(&q).as_root()
    }

    /// `|χ(h)|² ≤ χ(1)²`, with equality exactly when `h` acts by a scalar.
    pub fn norm_bound_holds(&self, h: usize) -> bool {
        let n = self.cocycle.order();
        let v = &self.values[h];
        let sq = &(v * &v.conj()) - &Cyclotomic::from_int(n, (self.degree * self.degree) as i64);
        let equal = sq.is_zero();
        if equal != self.scalar_action(h).is_some() {
            return false;
        }
        // the difference is real; its size is only ever compared, never consumed
        equal || sq.to_complex().0 < 1e-9
    }

    /// `{g : χ(g) = χ(1)}`.
    pub fn kernel(&self) -> Subgroup {
        let e = self.cocycle.group().identity();
        let one = &self.values[e];
        Subgroup::from_members(
            self.values.len(),
            self.domain().members().iter().copied().filter(|&g| &self.values[g] == one).collect(),
        )
    }

    /// Same as [`ProjChar::kernel`], but only for linear ordinary characters.
    pub fn kernel_of_linear(&self) -> Result<Subgroup, ProjError> {
        if self.degree != 1 || !self.cocycle.is_trivial() {
            return Err(ProjError::NotLinear);
        }
        Ok(self.kernel())
    }

    /// Induction to the domain of `target`, computed in the central extension.
    pub fn induce(&self, target: &Cocycle2) -> Result<ProjChar, ProjError> {
        induce(self, target)
    }

    pub fn is_irreducible(&self) -> Result<bool, ProjError> {
        Ok(multiplicity(self, self)? == 1)
    }
}

pub fn multiplicity(a: &ProjChar, b: &ProjChar) -> Result<u32, ProjError> {
    if a.cocycle != b.cocycle {
        return Err(ProjError::CocycleMismatch);
    }
    let c = &a.cocycle;
    let g = c.group();
    let n = c.order();
    let mut acc = Cyclotomic::zero(n);
    for &x in c.domain().members() {
        let xi = g.inv(x);
        if a.values[x].is_zero() || b.values[xi].is_zero() {
            continue;
        }
        let t = (&a.values[x] * &b.values[xi]).mul_root(c.value(xi, x).inv());
        acc = &acc + &t;
    }
    let q = acc.to_rational().ok_or_else(|| ProjError::NonInteger(acc.to_string()))?;
    let m = q / BigRational::from_integer(BigInt::from(c.domain().order()));
    if !m.is_integer() || m < BigRational::zero() {
        return Err(ProjError::NonInteger(m.to_string()));
    }
    num_traits::ToPrimitive::to_u32(&m.to_integer()).ok_or_else(|| ProjError::NonInteger(m.to_string()))
}

pub fn induce(chi: &ProjChar, target: &Cocycle2) -> Result<ProjChar, ProjError> {
    let h = chi.domain();
    if !h.is_subgroup_of(target.domain()) {
        return Err(ProjError::Incompatible("induction source".into()));
    }
    if target.restrict(h)? != *chi.cocycle() {
        return Err(ProjError::Incompatible("cocycle on the source subgroup".into()));
    }
    let n = target.order();
    let ce = CentralExtension::new(target);
    let step = n / ce.kernel_order;
    let e = &ce.ext;
    // lift: χ̃(k, h) = ζ^k χ(h)
    let lifted = |a: usize| -> Option<Cyclotomic> {
        let g = ce.project(a);
        h.contains(g).then(|| chi.values[g].mul_root(Root::new(n, (ce.central_part(a) * step) as i64)))
    };
    let hat_order = (ce.kernel_order as usize * h.order()) as i64;
    let denom = BigRational::new(BigInt::from(1), BigInt::from(hat_order));
    Ok(ProjChar::from_fn(target.clone(), |g| {
        let a = ce.element(0, g);
        let mut acc = Cyclotomic::zero(n);
        for x in e.elements() {
            if let Some(v) = lifted(e.conj(x, a)) {
                acc = &acc + &v;
            }
        }
        acc.scale(&denom)
    }))
}

/// Exponent of the central extension, i.e. the scalar order needed to hold all character values.
pub fn required_order(cocycle: &Cocycle2) -> u32 {
    let ce = CentralExtension::new(cocycle);
    (ce.ext.exponent() as u32).lcm(&cocycle.order())
}

/// All irreducible α-projective characters, sorted by degree and then by decreasing values.
pub fn irr_projective(cocycle: &Cocycle2) -> Result<Arc<Vec<ProjChar>>, ProjError> {
    static CACHE: OnceLock<Mutex<HashMap<u64, Vec<(Cocycle2, Arc<Vec<ProjChar>>)>>>> = OnceLock::new();
    let key = cocycle.fingerprint();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(bucket) = cache.lock().expect("character cache").get(&key) {
        if let Some((_, v)) = bucket.iter().find(|(c, _)| c == cocycle && **c.group() == **cocycle.group()) {
            return Ok(v.clone());
        }
    }
    let result = Arc::new(compute_irr(cocycle)?);
    cache.lock().expect("character cache").entry(key).or_default().push((cocycle.clone(), result.clone()));
    Ok(result)
}

/// Ordinary irreducible characters of the subgroup `domain`.
pub fn ordinary_char_table(group: Arc<FiniteGroup>, domain: Subgroup, order: u32) -> Result<Arc<Vec<ProjChar>>, ProjError> {
    irr_projective(&Cocycle2::trivial(group, domain, order))
}

fn compute_irr(cocycle: &Cocycle2) -> Result<Vec<ProjChar>, ProjError> {
    let n = cocycle.order();
    let ce = CentralExtension::new(cocycle);
    let e_exp = ce.ext.exponent() as u32;
    if !n.is_multiple_of(e_exp) {
        return Err(ProjError::FieldTooSmall { need: e_exp.lcm(&n), have: n });
    }
    let table = dixon::character_table(&ce.ext, n).map_err(ProjError::Internal)?;
    let kord = ce.kernel_order;
    let central = ce.element(1 % kord, cocycle.group().identity());
    let want = Root::new(n, (n / kord) as i64);
    let mut out = Vec::new();
    for row in table {
        let deg = row[ce.element(0, cocycle.group().identity())].clone();
        if row[central] != deg.mul_root(want) {
            continue;
        }
        out.push(ProjChar::from_fn(cocycle.clone(), |g| row[ce.element(0, g)].clone()));
    }
    out.sort_by(|a, b| {
        a.degree.cmp(&b.degree).then_with(|| {
            let ka: Vec<&[BigRational]> = a.values.iter().map(|v| v.coeffs()).collect();
            let kb: Vec<&[BigRational]> = b.values.iter().map(|v| v.coeffs()).collect();
            kb.cmp(&ka)
        })
    });
    let total: u32 = out.iter().map(|c| c.degree * c.degree).sum();
    if total as usize != cocycle.domain().order() {
        return Err(ProjError::Internal(format!("degree squares sum to {total}, expected {}", cocycle.domain().order())));
    }
    Ok(out)
}

pub(crate) mod dixon {
    //! Ordinary character tables via class-algebra eigenvectors over F_p.

    use crate::cyclotomic::Cyclotomic;
    use crate::group::FiniteGroup;

    fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
        let mut r = 1u64;
        b %= p;
        while e > 0 {
            if e & 1 == 1 {
                r = r * b % p;
            }
            b = b * b % p;
            e >>= 1;
        }
        r
    }

    fn inv_mod(a: u64, p: u64) -> u64 {
        pow_mod(a, p - 2, p)
    }

    fn is_prime(n: u64) -> bool {
        n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d))
    }

    fn prime_factors(mut n: u64) -> Vec<u64> {
        let mut out = Vec::new();
        let mut d = 2;
        while d * d <= n {
            if n.is_multiple_of(d) {
                out.push(d);
                while n.is_multiple_of(d) {
                    n /= d;
                }
            }
            d += 1;
        }
        if n > 1 {
            out.push(n);
        }
        out
    }

    pub fn choose_prime(order: usize, exponent: usize) -> u64 {
        let bound = (2.0 * (order as f64).sqrt() * order as f64).ceil() as u64;
        let e = exponent as u64;
        let mut p = (bound / e + 1) * e + 1;
        while !is_prime(p) {
            p += e;
        }
        p
    }

    fn primitive_root_of_order(e: u64, p: u64) -> u64 {
        let fac = prime_factors(p - 1);
        let g = (2..p).find(|&g| fac.iter().all(|&q| pow_mod(g, (p - 1) / q, p) != 1)).expect("generator");
        pow_mod(g, (p - 1) / e, p)
    }

    /// Row-reduced basis; returns pivot columns alongside.
    fn rref(mut rows: Vec<Vec<u64>>, p: u64) -> (Vec<Vec<u64>>, Vec<usize>) {
        let width = rows.first().map_or(0, |r| r.len());
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..width {
            if r >= rows.len() {
                break;
            }
            let Some(piv) = (r..rows.len()).find(|&i| rows[i][c] != 0) else { continue };
            rows.swap(r, piv);
            let iv = inv_mod(rows[r][c], p);
            for x in rows[r].iter_mut() {
                *x = *x * iv % p;
            }
            for i in 0..rows.len() {
                if i != r && rows[i][c] != 0 {
                    let f = rows[i][c];
                    for j in 0..width {
                        rows[i][j] = (rows[i][j] + p - f * rows[r][j] % p) % p;
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        rows.truncate(r);
        (rows, pivots)
    }

    fn nullspace(a: &[Vec<u64>], p: u64) -> Vec<Vec<u64>> {
        let d = a.len();
        let (red, pivots) = rref(a.to_vec(), p);
        let free: Vec<usize> = (0..d).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![0u64; d];
                v[f] = 1;
                for (row, &pc) in red.iter().zip(&pivots) {
                    v[pc] = (p - row[f]) % p;
                }
                v
            })
            .collect()
    }

    fn char_poly(a: &[Vec<u64>], p: u64) -> Vec<u64> {
        // Faddeev–LeVerrier; coefficients low degree first, monic
        let d = a.len();
        let mut c = vec![0u64; d + 1];
        c[d] = 1;
        let mut m = vec![vec![0u64; d]; d];
        for k in 1..=d {
            let mut next = vec![vec![0u64; d]; d];
            for i in 0..d {
                for j in 0..d {
                    let mut s = 0u64;
                    for t in 0..d {
                        s = (s + a[i][t] * m[t][j]) % p;
                    }
                    next[i][j] = s;
                }
                next[i][i] = (next[i][i] + c[d - k + 1]) % p;
            }
            m = next;
            let mut tr = 0u64;
            for i in 0..d {
                for t in 0..d {
                    tr = (tr + a[i][t] * m[t][i]) % p;
                }
            }
            c[d - k] = (p - tr * inv_mod(k as u64, p) % p) % p;
        }
        c
    }

    /// All irreducible characters of `g`, each as a per-element value list in Q(ζ_n).
    pub fn character_table(g: &FiniteGroup, n: u32) -> Result<Vec<Vec<Cyclotomic>>, String> {
        let m = g.order();
        let classes = g.conjugacy_classes();
        let r = classes.len();
        let mut class_of = vec![0usize; m];
        for (i, c) in classes.iter().enumerate() {
            for &x in c {
                class_of[x] = i;
            }
        }
        let sizes: Vec<u64> = classes.iter().map(|c| c.len() as u64).collect();
        let inv_class: Vec<usize> = classes.iter().map(|c| class_of[g.inv(c[0])]).collect();
        let e = g.exponent() as u64;
        let p = choose_prime(m, e as usize);
        // a[j][k][l] = #{x ∈ C_j : x⁻¹ z_l ∈ C_k}
        let mut a = vec![vec![vec![0u64; r]; r]; r];
        for l in 0..r {
            let z = classes[l][0];
            for x in g.elements() {
                let y = g.mul(g.inv(x), z);
                a[class_of[x]][class_of[y]][l] += 1;
            }
        }
        let mut spaces: Vec<Vec<Vec<u64>>> = vec![(0..r).map(|i| (0..r).map(|j| (i == j) as u64).collect()).collect()];
        for mj in a.iter() {
            if spaces.iter().all(|s| s.len() == 1) {
                break;
            }
            let mut next = Vec::new();
            for space in spaces {
                if space.len() == 1 {
                    next.push(space);
                    continue;
                }
                let (basis, pivots) = rref(space, p);
                let d = basis.len();
                // A[i][t]: coordinate t of M_j b_i; stored transposed to act on coordinate columns
                let images: Vec<Vec<u64>> = basis
                    .iter()
                    .map(|b| (0..r).map(|k| (0..r).fold(0u64, |s, l| (s + mj[k][l] * b[l]) % p)).collect())
                    .collect();
                let amat: Vec<Vec<u64>> = (0..d).map(|t| (0..d).map(|i| images[i][pivots[t]]).collect()).collect();
                let cp = char_poly(&amat, p);
                let mut found = 0;
                for lam in 0..p {
                    let val = cp.iter().rev().fold(0u64, |acc, &c| (acc * lam + c) % p);
                    if val != 0 {
                        continue;
                    }
                    let shifted: Vec<Vec<u64>> = (0..d)
                        .map(|i| (0..d).map(|j| if i == j { (amat[i][j] + p - lam) % p } else { amat[i][j] }).collect())
                        .collect();
                    let null = nullspace(&shifted, p);
                    found += null.len();
                    let vecs: Vec<Vec<u64>> = null
                        .iter()
                        .map(|c| (0..r).map(|k| (0..d).fold(0u64, |s, i| (s + c[i] * basis[i][k]) % p)).collect())
                        .collect();
                    next.push(vecs);
                }
                if found != d {
                    return Err(format!("class algebra did not split over F_{p}"));
                }
            }
            spaces = next;
        }
        if spaces.len() != r {
            return Err("eigenspaces did not separate".into());
        }
        let id_class = class_of[g.identity()];
        let zeta = primitive_root_of_order(e, p);
        let zinv = inv_mod(zeta, p);
        let einv = inv_mod(e % p, p);
        let mut table = Vec::with_capacity(r);
        for space in spaces {
            let v = &space[0];
            let s = inv_mod(v[id_class], p);
            let w: Vec<u64> = v.iter().map(|x| x * s % p).collect();
            let mut sum = 0u64;
            for l in 0..r {
                sum = (sum + w[l] * w[inv_class[l]] % p * inv_mod(sizes[l] % p, p)) % p;
            }
            let d2 = (m as u64 % p) * inv_mod(sum, p) % p;
            let deg = (1..=((m as f64).sqrt() as u64 + 1)).find(|d| d * d % p == d2).ok_or("no integral degree")?;
            let modval: Vec<u64> = (0..r).map(|l| w[l] * deg % p * inv_mod(sizes[l] % p, p) % p).collect();
            let mut exact_by_class = Vec::with_capacity(r);
            for cl in classes.iter() {
                let x = cl[0];
                let mut powers = Vec::with_capacity(e as usize);
                let mut y = g.identity();
                for _ in 0..e {
                    powers.push(modval[class_of[y]]);
                    y = g.mul(y, x);
                }
                let mut terms = Vec::new();
                for s in 0..e {
                    let step = pow_mod(zinv, s, p);
                    let mut acc = 0u64;
                    let mut zz = 1u64;
                    for &pv in &powers {
                        acc = (acc + pv * zz) % p;
                        zz = zz * step % p;
                    }
                    let ms = acc * einv % p;
                    if ms > deg {
                        return Err(format!("eigenvalue multiplicity {ms} exceeds degree {deg}"));
                    }
                    if ms > 0 {
                        terms.push(((s as u32) * (n / e as u32), ms as i64));
                    }
                }
                exact_by_class.push(Cyclotomic::from_exponent_sum(n, &terms));
            }
            table.push(g.elements().map(|x| exact_by_class[class_of[x]].clone()).collect());
        }
        Ok(table)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn whole(g: &Arc<FiniteGroup>) -> Subgroup {
        g.whole()
    }

    #[test]
    fn s3_table() {
        let g = Arc::new(FiniteGroup::s3());
        let t = ordinary_char_table(g.clone(), whole(&g), 6).unwrap();
        let degs: Vec<u32> = t.iter().map(|c| c.degree()).collect();
        assert_eq!(degs, vec![1, 1, 2]);
        assert!(t[0].values().iter().all(|v| *v == Cyclotomic::one(6)));
        let two = &t[2];
        let tr = (0..6).find(|&x| g.element_order(x) == 2).unwrap();
        assert!(two.value(tr).is_zero());
        assert!(two.scalar_action(tr).is_none());
        let sq = two.tensor(two).unwrap();
        assert_eq!(two.multiplicity_in(&sq).unwrap(), 1);
        for a in t.iter() {
            for b in t.iter() {
                assert_eq!(multiplicity(a, b).unwrap(), (a == b) as u32);
            }
        }
    }

    #[test]
    fn z2_cocycle_gives_two_linear_characters() {
        let g = Arc::new(FiniteGroup::cyclic(2));
        let c = Cocycle2::new(g.clone(), whole(&g), 4, vec![0, 0, 0, 2]).unwrap();
        let irr = irr_projective(&c).unwrap();
        assert_eq!(irr.len(), 2);
        assert!(irr.iter().all(|x| x.degree() == 1));
        // ρ(g)² = α(g,g) = −1, so the values are ±i
        for x in irr.iter() {
            let v = x.value(1);
            assert_eq!(&(v * v), &Cyclotomic::from_int(4, -1));
        }
    }

    #[test]
    fn klein_nontrivial_cocycle_has_one_irreducible() {
        let g = Arc::new(FiniteGroup::klein4());
        // α(a, b) = (-1)^{a_1 b_2} on bit vectors
        let exps: Vec<u32> = (0..16).map(|i| if (i / 4) & 1 == 1 && (i % 4) & 2 == 2 { 1 } else { 0 }).collect();
        let c = Cocycle2::new(g.clone(), whole(&g), 2, exps).unwrap();
        assert!(irr_projective(&c).is_err());
        let c = Cocycle2::new(g.clone(), whole(&g), 4, c.exps.iter().map(|e| e * 2).collect()).unwrap();
        let irr = irr_projective(&c).unwrap();
        assert_eq!(irr.len(), 1);
        assert_eq!(irr[0].degree(), 2);
    }

    #[test]
    fn bad_cocycles_are_rejected() {
        let g = Arc::new(FiniteGroup::cyclic(2));
        assert_eq!(Cocycle2::new(g.clone(), whole(&g), 2, vec![1, 0, 0, 0]).unwrap_err(), ProjError::Normalization(0, 0));
        let g = Arc::new(FiniteGroup::cyclic(3));
        let mut exps = vec![0; 9];
        exps[4] = 1;
        assert!(matches!(Cocycle2::new(g.clone(), whole(&g), 3, exps), Err(ProjError::CocycleIdentity(..))));
    }

    #[test]
    fn induction_from_a3_and_from_trivial() {
        let g = Arc::new(FiniteGroup::s3());
        let a3 = g.generate(&[(0..6).find(|&x| g.element_order(x) == 3).unwrap()]);
        let irr = ordinary_char_table(g.clone(), a3.clone(), 6).unwrap();
        let nontrivial = irr.iter().find(|c| c.kernel().order() == 1).unwrap();
        let target = Cocycle2::trivial(g.clone(), whole(&g), 6);
        assert_eq!(nontrivial.induce(&target).unwrap().degree(), 2);
        let triv = ProjChar::trivial(g.clone(), g.trivial(), 6);
        let reg = triv.induce(&target).unwrap();
        assert_eq!(reg, ProjChar::regular(target));
    }

    #[test]
    fn dual_and_tensor_unit() {
        let g = Arc::new(FiniteGroup::q8());
        let t = ordinary_char_table(g.clone(), whole(&g), 4).unwrap();
        assert_eq!(t.len(), 5);
        for c in t.iter() {
            assert_eq!(&c.dual().dual(), c);
            assert_eq!(&c.tensor(&t[0]).unwrap(), c);
        }
    }
}
