//! Exact arithmetic in Q(ζ_N) and in the group of N-th roots of unity.
//!
//! Elements are stored in the power basis `1, ζ, …, ζ^{φ(N)-1}` after reduction by the
//! N-th cyclotomic polynomial, so equality is coefficient equality.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CycloError {
    #[error("mismatched orders {0} and {1}")]
    OrderMismatch(u32, u32),
    #[error("division by zero")]
    DivisionByZero,
    #[error("{target} is not a multiple of {order}")]
    NotMultiple { order: u32, target: u32 },
}

/// `ζ_order^exp`
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Root {
    order: u32,
    exp: u32,
}

impl Root {
    pub fn new(order: u32, exp: i64) -> Self {
        assert!(order > 0, "root order must be positive");
        Root { order, exp: exp.rem_euclid(order as i64) as u32 }
    }

    pub fn one(order: u32) -> Self {
        Root { order, exp: 0 }
    }

    pub fn order(self) -> u32 {
        self.order
    }

    pub fn exp(self) -> u32 {
        self.exp
    }

    pub fn is_one(self) -> bool {
        self.exp == 0
    }

    pub fn try_mul(self, other: Root) -> Result<Root, CycloError> {
        if self.order != other.order {
            return Err(CycloError::OrderMismatch(self.order, other.order));
        }
        Ok(Root { order: self.order, exp: (self.exp + other.exp) % self.order })
    }

    pub fn inv(self) -> Root {
        Root { order: self.order, exp: (self.order - self.exp) % self.order }
    }

    pub fn pow(self, k: i64) -> Root {
        Root::new(self.order, self.exp as i64 * k)
    }

    /// The same root viewed as an `m`-th root of unity.
    pub fn lift(self, m: u32) -> Result<Root, CycloError> {
        if !m.is_multiple_of(self.order) {
            return Err(CycloError::NotMultiple { order: self.order, target: m });
        }
        Ok(Root { order: m, exp: self.exp * (m / self.order) })
    }

    /// Multiplicative order of this root.
    pub fn multiplicative_order(self) -> u32 {
        self.order / self.order.gcd(&self.exp)
    }
}

impl Mul for Root {
    type Output = Root;

    /// Panics on mismatched orders; use [`Root::try_mul`] to get an error instead.
    fn mul(self, rhs: Root) -> Root {
        self.try_mul(rhs).expect("root orders must agree")
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.exp, self.order)
    }
}

struct Field {
    n: u32,
    phi: usize,
    // reduction of x^k modulo Φ_n, for 0 <= k < n
    powers: Vec<Vec<i64>>,
}

fn cyclotomic_poly(n: u32, cache: &mut HashMap<u32, Vec<i64>>) -> Vec<i64> {
    if let Some(p) = cache.get(&n) {
        return p.clone();
    }
    // x^n - 1, low degree first
    let mut num = vec![0i64; n as usize + 1];
    num[0] = -1;
    num[n as usize] = 1;
    for d in 1..n {
        if n.is_multiple_of(d) {
            let den = cyclotomic_poly(d, cache);
            num = divide_monic(&num, &den);
        }
    }
    cache.insert(n, num.clone());
    num
}

fn divide_monic(num: &[i64], den: &[i64]) -> Vec<i64> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let qd = rem.len() - 1 - dd;
    let mut q = vec![0i64; qd + 1];
    for i in (0..=qd).rev() {
        let c = rem[i + dd];
        q[i] = c;
        for (j, &dj) in den.iter().enumerate() {
            rem[i + j] -= c * dj;
        }
    }
    debug_assert!(rem.iter().all(|&r| r == 0));
    q
}

fn field(n: u32) -> Arc<Field> {
    static FIELDS: OnceLock<Mutex<(HashMap<u32, Arc<Field>>, HashMap<u32, Vec<i64>>)>> = OnceLock::new();
    let mut guard = FIELDS.get_or_init(|| Mutex::new((HashMap::new(), HashMap::new()))).lock().expect("field cache");
    if let Some(f) = guard.0.get(&n) {
        return f.clone();
    }
    let phi_poly = cyclotomic_poly(n, &mut guard.1);
    let phi = phi_poly.len() - 1;
    let mut powers = Vec::with_capacity(n as usize);
    let mut cur = vec![0i64; phi];
    cur[0] = 1;
    for _ in 0..n {
        powers.push(cur.clone());
        // multiply by x, then reduce the x^phi term
        let top = cur[phi - 1];
        let mut next = vec![0i64; phi];
        next[1..phi].copy_from_slice(&cur[..(phi - 1)]);
        for (j, nj) in next.iter_mut().enumerate() {
            *nj -= top * phi_poly[j];
        }
        cur = next;
    }
    let f = Arc::new(Field { n, phi, powers });
    guard.0.insert(n, f.clone());
    f
}

/// An element of Q(ζ_N) in canonical form.
#[derive(Clone)]
pub struct Cyclotomic {
    field: Arc<Field>,
    coeffs: Vec<BigRational>,
}

impl PartialEq for Cyclotomic {
    fn eq(&self, other: &Self) -> bool {
        self.field.n == other.field.n && self.coeffs == other.coeffs
    }
}

impl Eq for Cyclotomic {}

impl std::hash::Hash for Cyclotomic {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.field.n.hash(state);
        self.coeffs.hash(state);
    }
}

impl fmt::Debug for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else if first { "" } else { "+" };
            let a = c.abs();
            let mag = if k > 0 && a.is_one() { String::new() } else { a.to_string() };
            let term = match k {
                0 => mag,
                1 => format!("{mag}z{}", self.field.n),
                _ => format!("{mag}z{}^{k}", self.field.n),
            };
            write!(f, "{sign}{term}")?;
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl Cyclotomic {
    pub fn zero(n: u32) -> Self {
        let field = field(n);
        let coeffs = vec![BigRational::zero(); field.phi];
        Cyclotomic { field, coeffs }
    }

    pub fn from_int(n: u32, v: i64) -> Self {
        Self::from_rational(n, BigRational::from_integer(BigInt::from(v)))
    }

    pub fn one(n: u32) -> Self {
        Self::from_int(n, 1)
    }

    pub fn from_rational(n: u32, v: BigRational) -> Self {
        let mut z = Self::zero(n);
        z.coeffs[0] = v;
        z
    }

    /// Embeds `ζ_N^k`; the root's order must equal `n`.
    pub fn from_root(n: u32, r: Root) -> Self {
        assert_eq!(r.order(), n, "root order must match the field");
        let field = field(n);
        let coeffs = field.powers[r.exp() as usize].iter().map(|&c| BigRational::from_integer(c.into())).collect();
        Cyclotomic { field, coeffs }
    }

    /// `Σ coeff_k ζ_N^k` for an unreduced exponent vector.
    pub fn from_exponent_sum(n: u32, terms: &[(u32, i64)]) -> Self {
        let field = field(n);
        let mut acc = vec![0i64; field.phi];
        for &(k, c) in terms {
            for (a, &p) in acc.iter_mut().zip(&field.powers[(k % n) as usize]) {
                *a += c * p;
            }
        }
        let coeffs = acc.into_iter().map(|c| BigRational::from_integer(c.into())).collect();
        Cyclotomic { field, coeffs }
    }

    pub fn order(&self) -> u32 {
        self.field.n
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn is_rational(&self) -> bool {
        self.coeffs[1..].iter().all(|c| c.is_zero())
    }

    pub fn to_rational(&self) -> Option<BigRational> {
        self.is_rational().then(|| self.coeffs[0].clone())
    }

    pub fn to_integer(&self) -> Option<i64> {
        let r = self.to_rational()?;
        if r.is_integer() {
            r.to_integer().to_i64()
        } else {
            None
        }
    }

    fn check(&self, other: &Self) -> Result<(), CycloError> {
        if self.field.n != other.field.n {
            return Err(CycloError::OrderMismatch(self.field.n, other.field.n));
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self, CycloError> {
        self.check(other)?;
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect();
        Ok(Cyclotomic { field: self.field.clone(), coeffs })
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self, CycloError> {
        self.check(other)?;
        let phi = self.field.phi;
        let n = self.field.n as usize;
        let mut prod = vec![BigRational::zero(); 2 * phi];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    prod[i + j] += a * b;
                }
            }
        }
        let mut coeffs = vec![BigRational::zero(); phi];
        for (k, c) in prod.into_iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if k < phi {
                coeffs[k] += c;
            } else {
                for (t, &p) in self.field.powers[k % n].iter().enumerate() {
                    if p != 0 {
                        coeffs[t] += &c * BigInt::from(p);
                    }
                }
            }
        }
        Ok(Cyclotomic { field: self.field.clone(), coeffs })
    }

    pub fn mul_root(&self, r: Root) -> Self {
        if r.is_one() {
            return self.clone();
        }
        self * &Cyclotomic::from_root(self.order(), r)
    }

    pub fn scale(&self, q: &BigRational) -> Self {
        Cyclotomic { field: self.field.clone(), coeffs: self.coeffs.iter().map(|c| c * q).collect() }
    }

    pub fn scale_int(&self, k: i64) -> Self {
        self.scale(&BigRational::from_integer(k.into()))
    }

    /// Complex conjugation, `ζ ↦ ζ⁻¹`.
    pub fn conj(&self) -> Self {
        let n = self.field.n as usize;
        let mut coeffs = vec![BigRational::zero(); self.field.phi];
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (t, &p) in self.field.powers[(n - k) % n].iter().enumerate() {
                if p != 0 {
                    coeffs[t] += c * BigInt::from(p);
                }
            }
        }
        Cyclotomic { field: self.field.clone(), coeffs }
    }

    /// Multiplicative inverse by solving the multiplication-by-self system over Q.
    pub fn inv(&self) -> Result<Self, CycloError> {
        if self.is_zero() {
            return Err(CycloError::DivisionByZero);
        }
        let phi = self.field.phi;
        let n = self.order();
        // column j of the matrix is self * ζ^j
        let cols: Vec<Cyclotomic> = (0..phi).map(|j| self.mul_root(Root::new(n, j as i64))).collect();
        let mut m: Vec<Vec<BigRational>> =
            (0..phi).map(|i| (0..phi).map(|j| cols[j].coeffs[i].clone()).collect()).collect();
        let mut rhs = vec![BigRational::zero(); phi];
        rhs[0] = BigRational::one();
        for col in 0..phi {
            let piv = (col..phi).find(|&r| !m[r][col].is_zero()).ok_or(CycloError::DivisionByZero)?;
            m.swap(col, piv);
            rhs.swap(col, piv);
            let p = m[col][col].clone();
            for j in col..phi {
                m[col][j] = &m[col][j] / &p;
            }
            rhs[col] = &rhs[col] / &p;
            for r in 0..phi {
                if r != col && !m[r][col].is_zero() {
                    let f = m[r][col].clone();
                    for j in col..phi {
                        let t = &f * &m[col][j];
                        m[r][j] -= t;
                    }
                    let t = &f * &rhs[col];
                    rhs[r] -= t;
                }
            }
        }
        Ok(Cyclotomic { field: self.field.clone(), coeffs: rhs })
    }

    /// The exponent `k` with `self = ζ_N^k`, if any.
    pub fn as_root(&self) -> Option<Root> {
        if !self.coeffs.iter().all(|c| c.is_integer()) {
            return None;
        }
        let ints: Vec<i64> = self.coeffs.iter().map(|c| c.to_integer().to_i64()).collect::<Option<_>>()?;
        self.field.powers.iter().position(|p| *p == ints).map(|k| Root::new(self.field.n, k as i64))
    }

    /// The same element in Q(ζ_M).
    pub fn lift_order(&self, m: u32) -> Result<Self, CycloError> {
        let n = self.field.n;
        if !m.is_multiple_of(n) {
            return Err(CycloError::NotMultiple { order: n, target: m });
        }
        let step = m / n;
        let mut out = Cyclotomic::zero(m);
        for (k, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                let term = Cyclotomic::from_root(m, Root::new(m, (k as u32 * step) as i64)).scale(c);
                out = &out + &term;
            }
        }
        Ok(out)
    }

    /// Value under the embedding `ζ_N ↦ exp(2πi/N)`.
    pub fn to_complex(&self) -> (f64, f64) {
        let n = self.field.n as f64;
        self.coeffs.iter().enumerate().fold((0.0, 0.0), |(re, im), (k, c)| {
            let v = c.to_f64().unwrap_or(f64::NAN);
            let t = 2.0 * std::f64::consts::PI * k as f64 / n;
            (re + v * t.cos(), im + v * t.sin())
        })
    }
}

impl<'a> Add for &'a Cyclotomic {
    type Output = Cyclotomic;
    fn add(self, rhs: &'a Cyclotomic) -> Cyclotomic {
        self.try_add(rhs).expect("cyclotomic orders must agree")
    }
}

impl<'a> Sub for &'a Cyclotomic {
    type Output = Cyclotomic;
    fn sub(self, rhs: &'a Cyclotomic) -> Cyclotomic {
        self.try_add(&-rhs).expect("cyclotomic orders must agree")
    }
}

impl<'a> Mul for &'a Cyclotomic {
    type Output = Cyclotomic;
    fn mul(self, rhs: &'a Cyclotomic) -> Cyclotomic {
        self.try_mul(rhs).expect("cyclotomic orders must agree")
    }
}

impl Neg for &Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        Cyclotomic { field: self.field.clone(), coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(n: u32, k: i64) -> Cyclotomic {
        Cyclotomic::from_root(n, Root::new(n, k))
    }

    #[test]
    fn root_arithmetic() {
        assert!((Root::new(4, 1) * Root::new(4, 3)).is_one());
        assert_eq!(Root::new(6, 2).inv(), Root::new(6, 4));
        assert!(Root::new(2, 1).pow(2).is_one());
        assert_eq!(Root::new(2, 1).try_mul(Root::new(4, 1)), Err(CycloError::OrderMismatch(2, 4)));
        assert_eq!(Root::new(3, 1).lift(6).unwrap(), Root::new(6, 2));
    }

    #[test]
    fn small_identities() {
        assert_eq!(&z(3, 1) + &z(3, 2), Cyclotomic::from_int(3, -1));
        assert_eq!(z(5, 1).conj(), z(5, 4));
        let one = Cyclotomic::one(4);
        assert_eq!(&(&one + &z(4, 1)) * &(&one - &z(4, 1)), Cyclotomic::from_int(4, 2));
    }

    #[test]
    fn as_root_cases() {
        assert_eq!(z(6, 2).as_root(), Some(Root::new(6, 2)));
        assert_eq!(Cyclotomic::from_int(6, 2).as_root(), None);
        assert_eq!((&z(6, 2) + &z(6, 4)).as_root(), Some(Root::new(6, 3)));
        for n in 1..=24 {
            for k in 0..n {
                assert_eq!(z(n, k as i64).as_root(), Some(Root::new(n, k as i64)));
            }
        }
    }

    #[test]
    fn lifting() {
        assert_eq!(z(2, 1).lift_order(4).unwrap(), z(4, 2));
        assert_eq!(Cyclotomic::from_int(5, 3).lift_order(10).unwrap(), Cyclotomic::from_int(10, 3));
        assert_eq!(z(3, 1).lift_order(6).unwrap(), z(6, 2));
        assert!(z(4, 1).lift_order(6).is_err());
    }

    #[test]
    fn inverse_and_sum_of_roots() {
        for n in 2..=16 {
            let s = (0..n).fold(Cyclotomic::zero(n), |acc, k| &acc + &z(n, k as i64));
            assert!(s.is_zero());
            let w = &Cyclotomic::from_int(n, 2) + &z(n, 1);
            assert_eq!(&w * &w.inv().unwrap(), Cyclotomic::one(n));
        }
        assert_eq!(Cyclotomic::zero(5).inv(), Err(CycloError::DivisionByZero));
    }
}
