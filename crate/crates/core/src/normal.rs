//! Normal inverse subsemigroups: fullness, normality, normal closure, the
//! kernel property, Clifford and closedness tests, and enumeration.

use std::collections::HashSet;

use rayon::prelude::*;

use crate::elemset::ElemSet;
use crate::error::Result;
use crate::semigroup::InverseSemigroup;

/// Contains every idempotent.
pub fn is_full(s: &InverseSemigroup, n: &ElemSet) -> bool {
    s.idempotents().iter().all(|&e| n.contains(e))
}

/// Full inverse subsemigroup closed under conjugation `s⁻¹ns`.
pub fn is_normal(s: &InverseSemigroup, n: &ElemSet) -> bool {
    s.is_inverse_subsemigroup(n)
        && is_full(s, n)
        && n.iter()
            .all(|m| s.elements().all(|x| n.contains(s.mul3(s.inv(x), m, x))))
}

/// Least normal inverse subsemigroup containing `a` (and hence `E(S)`).
pub fn normal_closure(s: &InverseSemigroup, a: &ElemSet) -> ElemSet {
    let mut set = ElemSet::empty(s.len());
    let mut members = Vec::new();
    let mut queue: Vec<usize> = a.iter().chain(s.idempotents().iter().copied()).collect();
    while let Some(x) = queue.pop() {
        if !set.insert(x) {
            continue;
        }
        members.push(x);
        queue.push(s.inv(x));
        for y in s.elements() {
            queue.push(s.mul3(s.inv(y), x, y));
        }
        for &y in &members {
            queue.push(s.mul(x, y));
            queue.push(s.mul(y, x));
        }
    }
    set
}

/// `st ∈ N` and `n ∈ N` imply `snt ∈ N`.
pub fn has_kernel_property(s: &InverseSemigroup, n: &ElemSet) -> bool {
    let members = n.to_vec();
    s.elements().all(|x| {
        s.elements()
            .filter(|&y| n.contains(s.mul(x, y)))
            .all(|y| members.iter().all(|&m| n.contains(s.mul3(x, m, y))))
    })
}

/// Every member has equal domain and range idempotents.
pub fn is_clifford(s: &InverseSemigroup, n: &ElemSet) -> bool {
    n.iter().all(|a| s.dom(a) == s.ran(a))
}

/// `{t : a ≤ t for some a ∈ A}`.
pub fn upward_closure(s: &InverseSemigroup, a: &ElemSet) -> ElemSet {
    let mut up = ElemSet::empty(s.len());
    for t in s.elements() {
        if a.iter().any(|x| s.leq(x, t)) {
            up.insert(t);
        }
    }
    up
}

/// Upward closed in the natural partial order.
pub fn is_closed(s: &InverseSemigroup, a: &ElemSet) -> bool {
    upward_closure(s, a) == *a
}

/// For a monoid: every element outside the group of units, together with
/// the identity. `None` if `s` has no identity.
pub fn non_units_with_identity(s: &InverseSemigroup) -> Option<ElemSet> {
    let one = s.identity()?;
    Some(ElemSet::from_ids(
        s.len(),
        s.elements()
            .filter(|&x| x == one || s.dom(x) != one || s.ran(x) != one),
    ))
}

/// All normal inverse subsemigroups of a finite inverse semigroup, ordered
/// by cardinality then member list, with the strict inclusions between them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NormalLattice {
    pub members: Vec<ElemSet>,
    /// `(i, j)` with `members[i] ⊊ members[j]`.
    pub inclusions: Vec<(usize, usize)>,
}

impl NormalLattice {
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn position(&self, n: &ElemSet) -> Option<usize> {
        self.members.iter().position(|m| m == n)
    }

    /// Covering pairs of the inclusion order.
    pub fn hasse_edges(&self) -> Vec<(usize, usize)> {
        self.inclusions
            .iter()
            .copied()
            .filter(|&(i, j)| {
                !self
                    .inclusions
                    .iter()
                    .any(|&(a, b)| a == i && b != j && self.inclusions.contains(&(b, j)))
            })
            .collect()
    }
}

/// Enumerate every normal inverse subsemigroup.
///
/// Starts from `E(S)` and repeatedly adjoins one principal normal closure,
/// re-closing and deduplicating by bitset, until no new subsemigroup
/// appears.
pub fn enumerate_normal(s: &InverseSemigroup) -> Result<NormalLattice> {
    crate::limits::ensure_within(s.len())?;
    let principal: Vec<ElemSet> = s
        .elements()
        .into_par_iter()
        .map(|x| normal_closure(s, &ElemSet::from_ids(s.len(), [x])))
        .collect();
    let mut distinct: Vec<ElemSet> = principal
        .into_iter()
        .collect::<HashSet<_>>()
        .into_iter()
        .collect();
    distinct.sort_by(ElemSet::canonical_cmp);

    let bottom = normal_closure(s, &ElemSet::empty(s.len()));
    let mut seen: HashSet<ElemSet> = HashSet::from([bottom.clone()]);
    let mut frontier = vec![bottom];
    while !frontier.is_empty() {
        let next: Vec<ElemSet> = frontier
            .par_iter()
            .flat_map_iter(|n| {
                distinct.iter().filter(|c| !c.is_subset(n)).map(move |c| {
                    let mut u = n.clone();
                    u.union_with(c);
                    normal_closure(s, &u)
                })
            })
            .collect();
        frontier.clear();
        for m in next {
            if seen.insert(m.clone()) {
                frontier.push(m);
            }
        }
    }
    let mut members: Vec<ElemSet> = seen.into_iter().collect();
    members.sort_by(ElemSet::canonical_cmp);
    let mut inclusions = Vec::new();
    for (i, a) in members.iter().enumerate() {
        for (j, b) in members.iter().enumerate() {
            if i != j && a.is_subset(b) {
                inclusions.push((i, j));
            }
        }
    }
    Ok(NormalLattice {
        members,
        inclusions,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builders::{cyclic_group, example_s6, symmetric_inverse_monoid};

    fn i2_n1(i2: &InverseSemigroup) -> ElemSet {
        let mut n1 = i2.idempotent_set();
        n1.insert(i2.elem(&[2, 0]));
        n1.insert(i2.elem(&[0, 1]));
        n1
    }

    /// Brute force: every subset of S that is full, closed and conjugation
    /// closed. Only for |S| ≤ 20 or so.
    fn brute_force_normal(s: &InverseSemigroup) -> Vec<ElemSet> {
        let e = s.idempotent_set();
        let others: Vec<usize> = s.elements().filter(|x| !e.contains(*x)).collect();
        let mut out = Vec::new();
        for mask in 0u32..(1 << others.len()) {
            let mut set = e.clone();
            for (i, &x) in others.iter().enumerate() {
                if mask & (1 << i) != 0 {
                    set.insert(x);
                }
            }
            let closed = set.iter().all(|a| {
                set.contains(s.inv(a))
                    && set.iter().all(|b| set.contains(s.mul(a, b)))
                    && s.elements().all(|x| set.contains(s.mul3(s.inv(x), a, x)))
            });
            if closed {
                out.push(set);
            }
        }
        out.sort_by(ElemSet::canonical_cmp);
        out
    }

    #[test]
    fn fullness() {
        let i2 = symmetric_inverse_monoid(2).unwrap();
        assert!(is_full(&i2, &i2.idempotent_set()));
        assert!(!is_full(&i2, &ElemSet::from_ids(7, [0, i2.elem(&[1, 0])])));
        assert!(is_full(&i2, &i2_n1(&i2)));
    }

    #[test]
    fn normality() {
        let i2 = symmetric_inverse_monoid(2).unwrap();
        assert!(is_normal(&i2, &i2.idempotent_set()));
        assert!(is_normal(&i2, &i2_n1(&i2)));
        let tau = i2.elem(&[2, 1]);
        let f = i2.elem(&[2, 0]);
        assert_eq!(i2.mul3(i2.inv(tau), f, tau), i2.inv(f));
        let mut e_tau = i2.idempotent_set();
        e_tau.insert(tau);
        assert!(!is_normal(&i2, &e_tau));
    }

    #[test]
    fn closure_examples() {
        let i2 = symmetric_inverse_monoid(2).unwrap();
        let f = i2.elem(&[2, 0]);
        let tau = i2.elem(&[2, 1]);
        assert_eq!(normal_closure(&i2, &ElemSet::empty(7)), i2.idempotent_set());
        assert_eq!(normal_closure(&i2, &ElemSet::from_ids(7, [f])), i2_n1(&i2));
        assert_eq!(
            normal_closure(&i2, &ElemSet::from_ids(7, [tau])),
            ElemSet::full(7)
        );
    }

    #[test]
    fn kernel_property_and_clifford() {
        let i2 = symmetric_inverse_monoid(2).unwrap();
        let n1 = i2_n1(&i2);
        // oracle: brute-force triple scan written out separately
        let brute = (0..7).all(|x| {
            (0..7).all(|y| {
                !n1.contains(i2.mul(x, y)) || n1.iter().all(|m| n1.contains(i2.mul3(x, m, y)))
            })
        });
        assert_eq!(has_kernel_property(&i2, &n1), brute);
        let s6 = example_s6();
        assert!(has_kernel_property(&s6, &s6.idempotent_set()));

        assert!(is_clifford(&i2, &i2.idempotent_set()));
        assert!(!is_clifford(&i2, &n1));
        assert!(!is_clifford(&i2, &ElemSet::full(7)));
    }

    #[test]
    fn upward_closure_examples() {
        let s6 = example_s6();
        assert_eq!(
            upward_closure(&s6, &ElemSet::from_ids(6, [0])),
            ElemSet::full(6)
        );
        assert!(upward_closure(&s6, &ElemSet::empty(6)).is_empty());
        let i2 = symmetric_inverse_monoid(2).unwrap();
        // 0 ≤ every element, so E(I_2) is not upward closed
        assert!(!is_closed(&i2, &i2.idempotent_set()));
        assert!(is_closed(&i2, &ElemSet::full(7)));
    }

    #[test]
    fn enumeration_matches_brute_force() {
        let i2 = symmetric_inverse_monoid(2).unwrap();
        let lat = enumerate_normal(&i2).unwrap();
        assert_eq!(lat.members, brute_force_normal(&i2));
        assert_eq!(
            lat.members,
            vec![i2.idempotent_set(), i2_n1(&i2), ElemSet::full(7)]
        );
        assert_eq!(lat.hasse_edges(), vec![(0, 1), (1, 2)]);

        let s6 = example_s6();
        assert_eq!(
            enumerate_normal(&s6).unwrap().members,
            brute_force_normal(&s6)
        );

        let z3 = cyclic_group(3).unwrap();
        assert_eq!(enumerate_normal(&z3).unwrap().len(), 2);
        let z2 = cyclic_group(2).unwrap();
        let b = crate::builders::brandt_semigroup_over(2, &z2).unwrap();
        assert_eq!(
            enumerate_normal(&b).unwrap().members,
            brute_force_normal(&b)
        );
    }

    #[test]
    fn closure_operator_laws() {
        let s6 = example_s6();
        for mask in 0u32..64 {
            let a = ElemSet::from_ids(6, (0..6).filter(|i| mask & (1 << i) != 0));
            let c = normal_closure(&s6, &a);
            assert!(a.is_subset(&c));
            assert_eq!(normal_closure(&s6, &c), c);
            assert!(is_normal(&s6, &c));
            for bit in 0..6 {
                let mut b = a.clone();
                b.insert(bit);
                assert!(c.is_subset(&normal_closure(&s6, &b)));
            }
        }
    }
}
