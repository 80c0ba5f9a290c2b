//! Finite groups given by multiplication tables.
//!
//! Element `0` is always the identity. Galois actions in this crate factor
//! through one of these groups.

use std::collections::BTreeSet;
use std::sync::Arc;

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FiniteGroup {
    order: usize,
    mult: Vec<usize>,
    inverse: Vec<usize>,
}

impl FiniteGroup {
    /// Checks identity, inverses and associativity, in that order, and
    /// reports a witness for the first failure.
    pub fn from_table(table: Vec<Vec<usize>>) -> Result<Self> {
        let n = table.len();
        if n == 0 {
            return Err(Error::InvalidGroup("empty table".into()));
        }
        for (a, row) in table.iter().enumerate() {
            if row.len() != n {
                return Err(Error::InvalidGroup(format!("row {a} has {} entries, expected {n}", row.len())));
            }
            if let Some(&x) = row.iter().find(|&&x| x >= n) {
                return Err(Error::InvalidGroup(format!("row {a} contains out-of-range element {x}")));
            }
        }
        for a in 0..n {
            if table[0][a] != a || table[a][0] != a {
                return Err(Error::InvalidGroup(format!(
                    "element 0 is not an identity: 0*{a} = {}, {a}*0 = {}",
                    table[0][a], table[a][0]
                )));
            }
        }
        let mut inverse = vec![0; n];
        for a in 0..n {
            match (0..n).find(|&b| table[a][b] == 0 && table[b][a] == 0) {
                Some(b) => inverse[a] = b,
                None => return Err(Error::InvalidGroup(format!("element {a} has no inverse"))),
            }
        }
        for a in 0..n {
            for b in 0..n {
                let ab = table[a][b];
                for c in 0..n {
                    if table[ab][c] != table[a][table[b][c]] {
                        return Err(Error::InvalidGroup(format!(
                            "not associative at ({a}, {b}, {c}): ({a}*{b})*{c} = {}, {a}*({b}*{c}) = {}",
                            table[ab][c],
                            table[a][table[b][c]]
                        )));
                    }
                }
            }
        }
        Ok(Self { order: n, mult: table.into_iter().flatten().collect(), inverse })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mult[a * self.order + b]
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a]
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order
    }

    pub fn table(&self) -> Vec<Vec<usize>> {
        self.mult.chunks(self.order).map(|r| r.to_vec()).collect()
    }

    pub fn element_order(&self, g: usize) -> usize {
        let mut x = g;
        let mut k = 1;
        while x != 0 {
            x = self.mul(x, g);
            k += 1;
        }
        k
    }

    pub fn power(&self, g: usize, k: usize) -> usize {
        (0..k).fold(0, |acc, _| self.mul(acc, g))
    }

    pub fn is_abelian(&self) -> bool {
        self.elements().all(|a| self.elements().all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn trivial() -> Self {
        Self::cyclic(1)
    }

    /// `Z/n` with element `k` standing for `g^k`.
    pub fn cyclic(n: usize) -> Self {
        assert!(n >= 1, "cyclic group of order 0");
        let table = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
        Self::from_table(table).expect("cyclic table is a group")
    }

    /// Direct product; `(g, h)` has index `g * |H| + h`.
    pub fn product(g: &Self, h: &Self) -> Self {
        let n = g.order * h.order;
        let table = (0..n)
            .map(|a| {
                (0..n)
                    .map(|b| g.mul(a / h.order, b / h.order) * h.order + h.mul(a % h.order, b % h.order))
                    .collect()
            })
            .collect();
        Self::from_table(table).expect("product of groups is a group")
    }

    pub fn klein() -> Self {
        Self::product(&Self::cyclic(2), &Self::cyclic(2))
    }

    /// Group generated by permutations (closure under composition); elements
    /// are listed in lexicographic order of their images, so the identity
    /// comes first. Composition is `(a*b)(x) = a(b(x))`.
    pub fn from_permutations(generators: &[Vec<usize>]) -> Result<(Self, Vec<Vec<usize>>)> {
        let degree = generators.first().map_or(0, |g| g.len());
        for g in generators {
            let mut seen = vec![false; degree];
            if g.len() != degree || g.iter().any(|&x| x >= degree || std::mem::replace(&mut seen[x], true)) {
                return Err(Error::InvalidGroup(format!("{g:?} is not a permutation of 0..{degree}")));
            }
        }
        let id: Vec<usize> = (0..degree).collect();
        let mut elems: BTreeSet<Vec<usize>> = BTreeSet::from([id]);
        let mut frontier: Vec<Vec<usize>> = elems.iter().cloned().collect();
        while let Some(p) = frontier.pop() {
            for g in generators {
                let q = compose(g, &p);
                if elems.insert(q.clone()) {
                    frontier.push(q);
                }
            }
        }
        let list: Vec<Vec<usize>> = elems.into_iter().collect();
        let index = |p: &Vec<usize>| list.binary_search(p).expect("closed under composition");
        let table = list.iter().map(|a| list.iter().map(|b| index(&compose(a, b))).collect()).collect();
        Ok((Self::from_table(table)?, list))
    }

    /// `S_n`, with the permutation each element stands for.
    pub fn symmetric_with_permutations(n: usize) -> (Self, Vec<Vec<usize>>) {
        let mut gens = Vec::new();
        if n >= 2 {
            let mut t: Vec<usize> = (0..n).collect();
            t.swap(0, 1);
            gens.push(t);
            gens.push((0..n).map(|i| (i + 1) % n).collect());
        } else {
            gens.push((0..n).collect());
        }
        Self::from_permutations(&gens).expect("symmetric group generators are permutations")
    }

    pub fn symmetric(n: usize) -> Self {
        Self::symmetric_with_permutations(n).0
    }

    /// Dihedral group of order `2n`, as symmetries of an `n`-gon.
    pub fn dihedral(n: usize) -> Self {
        let rot: Vec<usize> = (0..n).map(|i| (i + 1) % n).collect();
        let refl: Vec<usize> = (0..n).map(|i| (n - i) % n).collect();
        Self::from_permutations(&[rot, refl]).expect("dihedral generators are permutations").0
    }

    /// Quaternion group of order 8 via its regular representation.
    pub fn quaternion() -> Self {
        // Elements ±1, ±i, ±j, ±k encoded as (sign, unit) -> 2*unit + sign.
        const UNIT: [[(usize, bool); 4]; 4] = [
            [(0, false), (1, false), (2, false), (3, false)],
            [(1, false), (0, true), (3, false), (2, true)],
            [(2, false), (3, true), (0, true), (1, false)],
            [(3, false), (2, false), (1, true), (0, true)],
        ];
        let table = (0..8)
            .map(|a: usize| {
                (0..8)
                    .map(|b: usize| {
                        let (u, neg) = UNIT[a / 2][b / 2];
                        let sign = (a % 2) ^ (b % 2) ^ usize::from(neg);
                        2 * u + sign
                    })
                    .collect()
            })
            .collect();
        Self::from_table(table).expect("quaternion table is a group")
    }

    /// A fixed list of small groups used by the self-checks: `(name, group)`.
    pub fn presets(max_order: usize) -> Vec<(String, Self)> {
        let mut out = vec![("trivial".to_string(), Self::trivial())];
        for n in 2..=max_order {
            out.push((format!("Z/{n}"), Self::cyclic(n)));
        }
        let extra = [
            ("klein", Self::klein()),
            ("S3", Self::symmetric(3)),
            ("Z/2xZ/4", Self::product(&Self::cyclic(2), &Self::cyclic(4))),
            ("(Z/2)^3", Self::product(&Self::klein(), &Self::cyclic(2))),
            ("D4", Self::dihedral(4)),
            ("Q8", Self::quaternion()),
        ];
        out.extend(extra.into_iter().filter(|(_, g)| g.order() <= max_order).map(|(n, g)| (n.to_string(), g)));
        out
    }
}

pub(crate) fn compose(a: &[usize], b: &[usize]) -> Vec<usize> {
    b.iter().map(|&x| a[x]).collect()
}

/// A subgroup of a parent group, as a sorted list of parent element indices.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subgroup {
    parent: Arc<FiniteGroup>,
    elements: Vec<usize>,
}

impl Subgroup {
    /// Validates closure; `elements` need not be sorted.
    pub fn new(parent: Arc<FiniteGroup>, elements: impl IntoIterator<Item = usize>) -> Result<Self> {
        let set: BTreeSet<usize> = elements.into_iter().collect();
        if let Some(&x) = set.iter().find(|&&x| x >= parent.order()) {
            return Err(Error::InvalidGroup(format!("element {x} not in the parent group")));
        }
        if !set.contains(&0) {
            return Err(Error::InvalidGroup("subgroup lacks the identity".into()));
        }
        for &a in &set {
            if !set.contains(&parent.inv(a)) {
                return Err(Error::InvalidGroup(format!("subgroup not closed under inverse of {a}")));
            }
            for &b in &set {
                if !set.contains(&parent.mul(a, b)) {
                    return Err(Error::InvalidGroup(format!("subgroup not closed: {a}*{b}")));
                }
            }
        }
        Ok(Self { parent, elements: set.into_iter().collect() })
    }

    pub fn generated_by(parent: Arc<FiniteGroup>, gens: &[usize]) -> Self {
        let mut set: BTreeSet<usize> = BTreeSet::from([0]);
        let mut frontier = vec![0];
        while let Some(x) = frontier.pop() {
            for &g in gens {
                let y = parent.mul(x, g);
                if set.insert(y) {
                    frontier.push(y);
                }
            }
        }
        Self { parent, elements: set.into_iter().collect() }
    }

    pub fn whole(parent: Arc<FiniteGroup>) -> Self {
        let elements = parent.elements().collect();
        Self { parent, elements }
    }

    pub fn trivial(parent: Arc<FiniteGroup>) -> Self {
        Self { parent, elements: vec![0] }
    }

    pub fn parent(&self) -> &Arc<FiniteGroup> {
        &self.parent
    }

    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn contains(&self, g: usize) -> bool {
        self.elements.binary_search(&g).is_ok()
    }

    /// Position of a parent element inside this subgroup.
    pub fn local_index(&self, g: usize) -> Option<usize> {
        self.elements.binary_search(&g).ok()
    }

    /// The subgroup as a group in its own right; local index `i` stands for
    /// parent element `elements()[i]`.
    pub fn to_group(&self) -> FiniteGroup {
        let table = self
            .elements
            .iter()
            .map(|&a| {
                self.elements
                    .iter()
                    .map(|&b| self.local_index(self.parent.mul(a, b)).expect("closed"))
                    .collect()
            })
            .collect();
        FiniteGroup::from_table(table).expect("a subgroup is a group")
    }

    pub fn is_cyclic(&self) -> bool {
        self.elements.iter().any(|&g| self.parent.element_order(g) == self.order())
    }

    /// Left cosets `gH`, each as a sorted element list, ordered by smallest
    /// element.
    pub fn left_cosets(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.parent.order()];
        let mut out = Vec::new();
        for g in self.parent.elements() {
            if seen[g] {
                continue;
            }
            let mut coset: Vec<usize> = self.elements.iter().map(|&h| self.parent.mul(g, h)).collect();
            coset.sort_unstable();
            for &x in &coset {
                seen[x] = true;
            }
            out.push(coset);
        }
        out
    }

    /// Left multiplication action on `left_cosets()`: entry `[g][c]` is the
    /// coset index of `g * coset_c`.
    pub fn coset_action(&self) -> Vec<Vec<usize>> {
        let cosets = self.left_cosets();
        let mut which = vec![0; self.parent.order()];
        for (i, c) in cosets.iter().enumerate() {
            for &x in c {
                which[x] = i;
            }
        }
        self.parent
            .elements()
            .map(|g| cosets.iter().map(|c| which[self.parent.mul(g, c[0])]).collect())
            .collect()
    }
}

/// `{<g> : g in G}` without duplicates, lexicographically ordered by element
/// lists (so the trivial subgroup comes first).
pub fn cyclic_subgroups(group: &Arc<FiniteGroup>) -> Vec<Subgroup> {
    let set: BTreeSet<Vec<usize>> =
        group.elements().map(|g| Subgroup::generated_by(group.clone(), &[g]).elements).collect();
    set.into_iter().map(|elements| Subgroup { parent: group.clone(), elements }).collect()
}

/// Every subgroup, obtained by closing the cyclic subgroups under joins.
pub fn all_subgroups(group: &Arc<FiniteGroup>) -> Vec<Subgroup> {
    let mut set: BTreeSet<Vec<usize>> = cyclic_subgroups(group).into_iter().map(|s| s.elements).collect();
    loop {
        let current: Vec<Vec<usize>> = set.iter().cloned().collect();
        let mut grew = false;
        for (i, a) in current.iter().enumerate() {
            for b in &current[i + 1..] {
                let gens: Vec<usize> = a.iter().chain(b).copied().collect();
                let j = Subgroup::generated_by(group.clone(), &gens).elements;
                grew |= set.insert(j);
            }
        }
        if !grew {
            break;
        }
    }
    set.into_iter().map(|elements| Subgroup { parent: group.clone(), elements }).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validation() {
        assert!(FiniteGroup::from_table(vec![vec![0, 1], vec![1, 0]]).is_ok());
        let err = FiniteGroup::from_table(vec![vec![0, 1], vec![1, 1]]).unwrap_err();
        assert_eq!(err, Error::InvalidGroup("element 1 has no inverse".into()));
        assert_eq!(FiniteGroup::klein().order(), 4);
        // Latin square that is not associative (a loop of order 5).
        let t = vec![
            vec![0, 1, 2, 3, 4],
            vec![1, 0, 3, 4, 2],
            vec![2, 4, 0, 1, 3],
            vec![3, 2, 4, 0, 1],
            vec![4, 3, 1, 2, 0],
        ];
        let e = FiniteGroup::from_table(t).unwrap_err();
        assert!(e.to_string().contains("not associative"), "{e}");
        let e = FiniteGroup::from_table(vec![vec![1, 0], vec![0, 1]]).unwrap_err();
        assert!(e.to_string().contains("identity"));
    }

    #[test]
    fn constructors() {
        assert_eq!(FiniteGroup::cyclic(1).order(), 1);
        let c2 = FiniteGroup::cyclic(2);
        assert_eq!(c2.table(), vec![vec![0, 1], vec![1, 0]]);
        let k = FiniteGroup::product(&c2, &c2);
        assert!(k.is_abelian());
        assert!(k.elements().all(|g| k.mul(g, g) == 0));
        let s3 = FiniteGroup::symmetric(3);
        assert_eq!(s3.order(), 6);
        assert!(!s3.is_abelian());
        let d4 = FiniteGroup::dihedral(4);
        let q8 = FiniteGroup::quaternion();
        assert_eq!((d4.order(), q8.order()), (8, 8));
        // Q8 has a unique involution; D4 has five.
        let inv = |g: &FiniteGroup| g.elements().filter(|&x| g.element_order(x) == 2).count();
        assert_eq!((inv(&d4), inv(&q8)), (5, 1));
    }

    #[test]
    fn cyclic_subgroup_counts() {
        let count = |g: FiniteGroup| cyclic_subgroups(&Arc::new(g)).len();
        assert_eq!(count(FiniteGroup::cyclic(4)), 3);
        assert_eq!(count(FiniteGroup::klein()), 4);
        assert_eq!(count(FiniteGroup::symmetric(3)), 5);
        let subs = cyclic_subgroups(&Arc::new(FiniteGroup::cyclic(4)));
        assert_eq!(subs[0].elements(), &[0]);
        assert!(subs.iter().all(|s| s.is_cyclic()));
    }

    #[test]
    fn all_subgroup_counts() {
        let count = |g: FiniteGroup| all_subgroups(&Arc::new(g)).len();
        assert_eq!(count(FiniteGroup::symmetric(3)), 6);
        assert_eq!(count(FiniteGroup::dihedral(4)), 10);
        assert_eq!(count(FiniteGroup::quaternion()), 6);
        assert_eq!(count(FiniteGroup::product(&FiniteGroup::klein(), &FiniteGroup::cyclic(2))), 16);
    }

    #[test]
    fn cosets() {
        let s3 = Arc::new(FiniteGroup::symmetric(3));
        let h = cyclic_subgroups(&s3).into_iter().find(|s| s.order() == 2).unwrap();
        assert_eq!(h.left_cosets().len(), 3);
        let act = h.coset_action();
        assert!(act[0].iter().enumerate().all(|(i, &j)| i == j));
        let sub = h.to_group();
        assert_eq!(sub.order(), 2);
    }
}
