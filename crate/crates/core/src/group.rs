//! Finite groups given by Cayley tables, their subgroups, homomorphisms and actions.
//!
//! Elements are dense indices `0..n`. Everything is table driven.

use std::collections::{BTreeSet, HashSet, VecDeque};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error("multiplication table is not square (row {row} has {len} entries, expected {n})")]
    NotSquare { row: usize, len: usize, n: usize },
    #[error("empty group table")]
    Empty,
    #[error("table entry {value} at ({row},{col}) out of range 0..{n}")]
    OutOfRange { row: usize, col: usize, value: usize, n: usize },
    #[error("associativity fails at ({0},{1},{2})")]
    NonAssociative(usize, usize, usize),
    #[error("no two-sided identity element")]
    NoIdentity,
    #[error("element {0} has no inverse")]
    NoInverse(usize),
    #[error("homomorphism property fails at ({0},{1})")]
    NotHomomorphism(usize, usize),
    #[error("action fails: {0}")]
    BadAction(String),
    #[error("group order {order} exceeds the limit {limit}")]
    LimitExceeded { order: usize, limit: usize },
}

/// A finite group as a Cayley table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    name: String,
    n: usize,
    mul: Vec<usize>,
    inv: Vec<usize>,
    identity: usize,
}

impl FiniteGroup {
    /// Checks the group axioms on a raw table and reports the first failure.
    pub fn from_table(name: &str, rows: &[Vec<usize>]) -> Result<Self, GroupError> {
        let n = rows.len();
        if n == 0 {
            return Err(GroupError::Empty);
        }
        let mut mul = Vec::with_capacity(n * n);
        for (r, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(GroupError::NotSquare { row: r, len: row.len(), n });
            }
            for (c, &v) in row.iter().enumerate() {
                if v >= n {
                    return Err(GroupError::OutOfRange { row: r, col: c, value: v, n });
                }
                mul.push(v);
            }
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|g| mul[e * n + g] == g && mul[g * n + e] == g))
            .ok_or(GroupError::NoIdentity)?;
        let mut inv = vec![0; n];
        for g in 0..n {
            inv[g] = (0..n)
                .find(|&h| mul[g * n + h] == identity && mul[h * n + g] == identity)
                .ok_or(GroupError::NoInverse(g))?;
        }
        for a in 0..n {
            for b in 0..n {
                let ab = mul[a * n + b];
                for c in 0..n {
                    if mul[ab * n + c] != mul[a * n + mul[b * n + c]] {
                        return Err(GroupError::NonAssociative(a, b, c));
                    }
                }
            }
        }
        Ok(FiniteGroup { name: name.to_string(), n, mul, inv, identity })
    }

    /// Builds the group generated by permutations of `0..degree`, identity first, others in
    /// lexicographic order of their images.
    pub fn from_permutations(name: &str, gens: &[Vec<usize>]) -> Self {
        let degree = gens.first().map_or(0, |g| g.len());
        let id: Vec<usize> = (0..degree).collect();
        let mut seen: BTreeSet<Vec<usize>> = BTreeSet::new();
        seen.insert(id.clone());
        let mut queue = VecDeque::from([id]);
        while let Some(p) = queue.pop_front() {
            for s in gens {
                let q: Vec<usize> = (0..degree).map(|i| s[p[i]]).collect();
                if seen.insert(q.clone()) {
                    queue.push_back(q);
                }
            }
        }
        let elems: Vec<Vec<usize>> = seen.into_iter().collect();
        let index = |p: &Vec<usize>| elems.binary_search(p).expect("closed");
        let rows: Vec<Vec<usize>> = elems
            .iter()
            .map(|a| {
                elems
                    .iter()
                    .map(|b| index(&(0..degree).map(|i| a[b[i]]).collect()))
                    .collect()
            })
            .collect();
        FiniteGroup::from_table(name, &rows).expect("permutation groups are groups")
    }

    pub fn cyclic(n: usize) -> Self {
        let rows: Vec<Vec<usize>> = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
        FiniteGroup::from_table(&format!("c{n}"), &rows).expect("cyclic group")
    }

    pub fn klein4() -> Self {
        let rows: Vec<Vec<usize>> = (0..4).map(|a| (0..4).map(|b| a ^ b).collect()).collect();
        FiniteGroup::from_table("klein4", &rows).expect("klein group")
    }

    pub fn s3() -> Self {
        FiniteGroup::from_permutations("s3", &[vec![1, 0, 2], vec![1, 2, 0]])
    }

    pub fn d4() -> Self {
        FiniteGroup::from_permutations("d4", &[vec![1, 2, 3, 0], vec![0, 3, 2, 1]])
    }

    /// Quaternion units ordered 1, -1, i, -i, j, -j, k, -k.
    pub fn q8() -> Self {
        // unit products: (unit index 0..4 for 1,i,j,k) -> (sign, unit)
        let table = [
            [(0, 0), (0, 1), (0, 2), (0, 3)],
            [(0, 1), (1, 0), (0, 3), (1, 2)],
            [(0, 2), (1, 3), (1, 0), (0, 1)],
            [(0, 3), (0, 2), (1, 1), (1, 0)],
        ];
        let rows: Vec<Vec<usize>> = (0..8)
            .map(|a| {
                (0..8)
                    .map(|b| {
                        let (sa, ua) = (a % 2, a / 2);
                        let (sb, ub) = (b % 2, b / 2);
                        let (s, u) = table[ua][ub];
                        2 * u + (sa + sb + s) % 2
                    })
                    .collect()
            })
            .collect();
        FiniteGroup::from_table("q8", &rows).expect("quaternion group")
    }

    /// Built-in groups by name: `c1`..`c12`, `klein4`, `s3`, `d4`, `q8`.
    pub fn builtin(name: &str) -> Option<Self> {
        match name {
            "klein4" => Some(Self::klein4()),
            "s3" => Some(Self::s3()),
            "d4" => Some(Self::d4()),
            "q8" => Some(Self::q8()),
            _ => {
                let n: usize = name.strip_prefix('c')?.parse().ok()?;
                (1..=12).contains(&n).then(|| Self::cyclic(n))
            }
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.n + b]
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inv[a]
    }

    /// `x g x⁻¹`
    #[inline]
    pub fn conj(&self, x: usize, g: usize) -> usize {
        self.mul(self.mul(x, g), self.inv(x))
    }

    pub fn pow(&self, g: usize, k: usize) -> usize {
        (0..k).fold(self.identity, |acc, _| self.mul(acc, g))
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        self.mul.chunks(self.n).map(|r| r.to_vec()).collect()
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.n
    }

    pub fn element_order(&self, g: usize) -> usize {
        let mut k = 1;
        let mut x = g;
        while x != self.identity {
            x = self.mul(x, g);
            k += 1;
        }
        k
    }

    pub fn exponent(&self) -> usize {
        self.elements().map(|g| self.element_order(g)).fold(1, num_integer::lcm)
    }

    pub fn is_abelian(&self) -> bool {
        self.elements().all(|a| self.elements().all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// `{x g x⁻¹ : x ∈ G}`, sorted.
    pub fn conjugacy_class(&self, g: usize) -> Vec<usize> {
        let set: BTreeSet<usize> = self.elements().map(|x| self.conj(x, g)).collect();
        set.into_iter().collect()
    }

    /// Conjugacy classes ordered by their minimal element.
    pub fn conjugacy_classes(&self) -> Vec<Vec<usize>> {
        let mut done = vec![false; self.n];
        let mut out = Vec::new();
        for g in self.elements() {
            if !done[g] {
                let c = self.conjugacy_class(g);
                for &x in &c {
                    done[x] = true;
                }
                out.push(c);
            }
        }
        out
    }

    pub fn whole(&self) -> Subgroup {
        Subgroup::from_members(self.n, self.elements().collect())
    }

    pub fn trivial(&self) -> Subgroup {
        Subgroup::from_members(self.n, vec![self.identity])
    }

    /// The subgroup generated by `gens`.
    pub fn generate(&self, gens: &[usize]) -> Subgroup {
        let mut mask = vec![false; self.n];
        mask[self.identity] = true;
        let mut members = vec![self.identity];
        let mut i = 0;
        while i < members.len() {
            let a = members[i];
            for &s in gens {
                let b = self.mul(a, s);
                if !mask[b] {
                    mask[b] = true;
                    members.push(b);
                }
            }
            i += 1;
        }
        members.sort_unstable();
        Subgroup { members, mask }
    }

    /// All subgroups, sorted by (order, members).
    pub fn all_subgroups(&self, limit: usize) -> Result<Vec<Subgroup>, GroupError> {
        if self.n > limit {
            return Err(GroupError::LimitExceeded { order: self.n, limit });
        }
        let mut found: HashSet<Vec<usize>> = HashSet::new();
        let mut list: Vec<Subgroup> = Vec::new();
        let mut frontier: Vec<Subgroup> = Vec::new();
        for g in self.elements() {
            let s = self.generate(&[g]);
            if found.insert(s.members.clone()) {
                frontier.push(s.clone());
                list.push(s);
            }
        }
        while let Some(k) = frontier.pop() {
            for g in self.elements() {
                if k.contains(g) {
                    continue;
                }
                let mut gens = k.members.clone();
                gens.push(g);
                let s = self.generate(&gens);
                if found.insert(s.members.clone()) {
                    frontier.push(s.clone());
                    list.push(s);
                }
            }
        }
        list.sort_by(|a, b| (a.order(), &a.members).cmp(&(b.order(), &b.members)));
        Ok(list)
    }

    pub fn normal_subgroups(&self, limit: usize) -> Result<Vec<Subgroup>, GroupError> {
        Ok(self.all_subgroups(limit)?.into_iter().filter(|k| k.is_normal_in(self)).collect())
    }

    /// The largest normal subgroup inside `k`: the intersection of all conjugates.
    pub fn core(&self, k: &Subgroup) -> Subgroup {
        let members = k
            .members()
            .iter()
            .copied()
            .filter(|&h| self.elements().all(|x| k.contains(self.conj(x, h))))
            .collect();
        Subgroup::from_members(self.n, members)
    }

    /// The normal closure of a set of elements.
    pub fn normal_closure(&self, elems: &[usize]) -> Subgroup {
        let gens: BTreeSet<usize> =
            elems.iter().flat_map(|&e| self.elements().map(move |x| (x, e))).map(|(x, e)| self.conj(x, e)).collect();
        self.generate(&gens.into_iter().collect::<Vec<_>>())
    }

    /// A small generating set of `k`, chosen greedily from its members in order.
    pub fn generators_of(&self, k: &Subgroup) -> Vec<usize> {
        let mut gens = Vec::new();
        let mut cur = self.trivial();
        for &h in k.members() {
            if !cur.contains(h) {
                gens.push(h);
                cur = self.generate(&gens);
            }
        }
        gens
    }
}

/// A subgroup, as a sorted member list plus a membership mask over the parent.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Subgroup {
    members: Vec<usize>,
    mask: Vec<bool>,
}

impl PartialOrd for Subgroup {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Subgroup {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.order(), &self.members).cmp(&(other.order(), &other.members))
    }
}

impl Subgroup {
    /// Wraps a member set without checking closure.
    pub fn from_members(parent_order: usize, mut members: Vec<usize>) -> Self {
        members.sort_unstable();
        members.dedup();
        let mut mask = vec![false; parent_order];
        for &m in &members {
            mask[m] = true;
        }
        Subgroup { members, mask }
    }

    #[inline]
    pub fn contains(&self, g: usize) -> bool {
        self.mask[g]
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn order(&self) -> usize {
        self.members.len()
    }

    pub fn parent_order(&self) -> usize {
        self.mask.len()
    }

    pub fn is_subgroup_of(&self, other: &Subgroup) -> bool {
        self.members.iter().all(|&m| other.contains(m))
    }

    pub fn is_closed_in(&self, g: &FiniteGroup) -> bool {
        self.contains(g.identity())
            && self.members.iter().all(|&a| self.contains(g.inv(a)) && self.members.iter().all(|&b| self.contains(g.mul(a, b))))
    }

    pub fn is_normal_in(&self, g: &FiniteGroup) -> bool {
        self.members.iter().all(|&h| g.elements().all(|x| self.contains(g.conj(x, h))))
    }

    pub fn intersect(&self, other: &Subgroup) -> Subgroup {
        let members = self.members.iter().copied().filter(|&m| other.contains(m)).collect();
        Subgroup::from_members(self.parent_order(), members)
    }

    /// The subgroup generated by both.
    pub fn join(&self, other: &Subgroup, g: &FiniteGroup) -> Subgroup {
        let mut gens = g.generators_of(self);
        gens.extend(g.generators_of(other));
        g.generate(&gens)
    }

    /// `x K x⁻¹`
    pub fn conjugate(&self, g: &FiniteGroup, x: usize) -> Subgroup {
        Subgroup::from_members(self.parent_order(), self.members.iter().map(|&h| g.conj(x, h)).collect())
    }

    /// Elementwise `[a, b] = 1` for all members.
    pub fn commutes_with(&self, other: &[usize], g: &FiniteGroup) -> bool {
        self.members.iter().all(|&a| other.iter().all(|&b| g.mul(a, b) == g.mul(b, a)))
    }
}

/// A homomorphism between two groups given by its image table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupHom {
    image_of: Vec<usize>,
    codomain_order: usize,
}

impl GroupHom {
    pub fn new(domain: &FiniteGroup, codomain: &FiniteGroup, image_of: Vec<usize>) -> Result<Self, GroupError> {
        if image_of.len() != domain.order() {
            return Err(GroupError::NotSquare { row: 0, len: image_of.len(), n: domain.order() });
        }
        for (i, &v) in image_of.iter().enumerate() {
            if v >= codomain.order() {
                return Err(GroupError::OutOfRange { row: 0, col: i, value: v, n: codomain.order() });
            }
        }
        for a in domain.elements() {
            for b in domain.elements() {
                if image_of[domain.mul(a, b)] != codomain.mul(image_of[a], image_of[b]) {
                    return Err(GroupError::NotHomomorphism(a, b));
                }
            }
        }
        Ok(GroupHom { image_of, codomain_order: codomain.order() })
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.image_of[x]
    }

    pub fn table(&self) -> &[usize] {
        &self.image_of
    }

    pub fn kernel(&self, domain: &FiniteGroup, codomain: &FiniteGroup) -> Subgroup {
        let e = codomain.identity();
        Subgroup::from_members(domain.order(), domain.elements().filter(|&x| self.image_of[x] == e).collect())
    }

    pub fn image(&self) -> Subgroup {
        Subgroup::from_members(self.codomain_order, self.image_of.clone())
    }

    pub fn image_of_subgroup(&self, k: &Subgroup) -> Subgroup {
        Subgroup::from_members(self.codomain_order, k.members().iter().map(|&x| self.image_of[x]).collect())
    }

    pub fn is_surjective(&self) -> bool {
        self.image().order() == self.codomain_order
    }
}

/// An action of `actor` on `space` by group automorphisms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupAction {
    perm: Vec<Vec<usize>>,
}

impl GroupAction {
    pub fn new(actor: &FiniteGroup, space: &FiniteGroup, perm: Vec<Vec<usize>>) -> Result<Self, GroupError> {
        let m = space.order();
        if perm.len() != actor.order() {
            return Err(GroupError::BadAction(format!("expected {} rows, got {}", actor.order(), perm.len())));
        }
        for (g, row) in perm.iter().enumerate() {
            if row.len() != m {
                return Err(GroupError::BadAction(format!("row {g} has {} entries, expected {m}", row.len())));
            }
            let mut hit = vec![false; m];
            for &x in row {
                if x >= m || hit[x] {
                    return Err(GroupError::BadAction(format!("row {g} is not a permutation")));
                }
                hit[x] = true;
            }
            for x in space.elements() {
                for y in space.elements() {
                    if row[space.mul(x, y)] != space.mul(row[x], row[y]) {
                        return Err(GroupError::BadAction(format!("element {g} is not an automorphism at ({x},{y})")));
                    }
                }
            }
        }
        if perm[actor.identity()].iter().enumerate().any(|(i, &x)| i != x) {
            return Err(GroupError::BadAction("identity does not act trivially".into()));
        }
        for g in actor.elements() {
            for h in actor.elements() {
                let gh = actor.mul(g, h);
                for x in space.elements() {
                    if perm[gh][x] != perm[g][perm[h][x]] {
                        return Err(GroupError::BadAction(format!("composition fails at ({g},{h},{x})")));
                    }
                }
            }
        }
        Ok(GroupAction { perm })
    }

    pub fn trivial(actor: &FiniteGroup, space: &FiniteGroup) -> Self {
        GroupAction { perm: vec![space.elements().collect(); actor.order()] }
    }

    pub fn conjugation(g: &FiniteGroup) -> Self {
        GroupAction { perm: g.elements().map(|a| g.elements().map(|x| g.conj(a, x)).collect()).collect() }
    }

    /// `ᵍx`
    #[inline]
    pub fn act(&self, g: usize, x: usize) -> usize {
        self.perm[g][x]
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.perm
    }

    pub fn stabilizer(&self, actor: &FiniteGroup, x: usize) -> Subgroup {
        Subgroup::from_members(actor.order(), actor.elements().filter(|&g| self.perm[g][x] == x).collect())
    }

    /// Pointwise stabilizer of a set.
    pub fn fixer(&self, actor: &FiniteGroup, xs: &[usize]) -> Subgroup {
        Subgroup::from_members(actor.order(), actor.elements().filter(|&g| xs.iter().all(|&x| self.perm[g][x] == x)).collect())
    }

    /// The orbit of `x`, sorted.
    pub fn orbit(&self, x: usize) -> Vec<usize> {
        let set: BTreeSet<usize> = self.perm.iter().map(|row| row[x]).collect();
        set.into_iter().collect()
    }

    /// Orbits ordered by their minimal element.
    pub fn orbits(&self, space_order: usize) -> Vec<Vec<usize>> {
        let mut done = vec![false; space_order];
        let mut out = Vec::new();
        for x in 0..space_order {
            if !done[x] {
                let o = self.orbit(x);
                for &y in &o {
                    done[y] = true;
                }
                out.push(o);
            }
        }
        out
    }

    /// The least `g` with `ᵍx = y`.
    pub fn transporter(&self, x: usize, y: usize) -> Option<usize> {
        self.perm.iter().position(|row| row[x] == y)
    }

    pub fn is_stable(&self, k: &Subgroup) -> bool {
        self.perm.iter().all(|row| k.members().iter().all(|&x| k.contains(row[x])))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn z2_table_is_a_group() {
        let g = FiniteGroup::from_table("c2", &[vec![0, 1], vec![1, 0]]).unwrap();
        assert_eq!(g.order(), 2);
        assert_eq!(g.inv(1), 1);
    }

    #[test]
    fn non_associative_table_is_rejected() {
        // a Latin square with identity 0 that is not associative
        let rows = vec![
            vec![0, 1, 2, 3, 4],
            vec![1, 0, 3, 4, 2],
            vec![2, 4, 0, 1, 3],
            vec![3, 2, 4, 0, 1],
            vec![4, 3, 1, 2, 0],
        ];
        assert!(matches!(FiniteGroup::from_table("bad", &rows), Err(GroupError::NonAssociative(..))));
    }

    #[test]
    fn builtins_have_expected_orders() {
        for (name, n, e) in [("c1", 1, 1), ("c12", 12, 12), ("klein4", 4, 2), ("s3", 6, 6), ("d4", 8, 4), ("q8", 8, 4)] {
            let g = FiniteGroup::builtin(name).unwrap();
            assert_eq!((g.order(), g.exponent()), (n, e), "{name}");
        }
        assert!(FiniteGroup::builtin("c13").is_none());
        assert!(!FiniteGroup::q8().is_abelian());
    }

    #[test]
    fn s3_classes_and_subgroups() {
        let g = FiniteGroup::s3();
        let t = (0..6).find(|&x| g.element_order(x) == 2).unwrap();
        assert_eq!(g.conjugacy_class(t).len(), 3);
        assert_eq!(g.conjugacy_classes().len(), 3);
        let subs = g.all_subgroups(48).unwrap();
        assert_eq!(subs.len(), 6);
        let normal: Vec<usize> = g.normal_subgroups(48).unwrap().iter().map(|k| k.order()).collect();
        assert_eq!(normal, vec![1, 3, 6]);
        let k = g.generate(&[t]);
        assert_eq!(g.core(&k).order(), 1);
    }

    #[test]
    fn subgroup_counts() {
        assert_eq!(FiniteGroup::klein4().all_subgroups(48).unwrap().len(), 5);
        assert_eq!(FiniteGroup::d4().all_subgroups(48).unwrap().len(), 10);
        assert_eq!(FiniteGroup::q8().all_subgroups(48).unwrap().len(), 6);
        assert_eq!(FiniteGroup::q8().normal_subgroups(48).unwrap().len(), 6);
        assert!(FiniteGroup::cyclic(12).all_subgroups(10).is_err());
    }

    #[test]
    fn conjugation_orbits() {
        let g = FiniteGroup::s3();
        let act = GroupAction::conjugation(&g);
        let sizes: Vec<usize> = act.orbits(6).iter().map(|o| o.len()).collect();
        assert_eq!(sizes, vec![1, 3, 2]);
        for x in g.elements() {
            assert_eq!(act.orbit(x).len() * act.stabilizer(&g, x).order(), 6);
        }
    }

    #[test]
    fn identity_hom_kernel_and_image() {
        let g = FiniteGroup::s3();
        let h = GroupHom::new(&g, &g, g.elements().collect()).unwrap();
        assert_eq!(h.kernel(&g, &g).order(), 1);
        assert!(h.is_surjective());
    }
}
