//! The preorder `≤_N`, its symmetrization `≃_N`, and the quotient ordered
//! groupoid `S⫽N`.
//!
//! `s ≤_N t` iff there are `a, b ∈ N` with `a⁻¹a = ss⁻¹`, `bb⁻¹ = s⁻¹s` and
//! `asb ≤ t`.

use fixedbitset::FixedBitSet;
use rayon::prelude::*;
use serde::Serialize;

use crate::elemset::ElemSet;
use crate::error::{IsqError, Result};
use crate::green::green_relations;
use crate::normal::{enumerate_normal, is_normal};
use crate::ogroupoid::{esn_to, verify_axioms, GroupoidParts, OrderedGroupoid};
use crate::partition::Partition;
use crate::semigroup::InverseSemigroup;

/// Members of `N` grouped by range and by domain idempotent.
#[derive(Debug, Clone)]
struct Witnesses {
    by_ran: Vec<Vec<usize>>,
    by_dom: Vec<Vec<usize>>,
}

impl Witnesses {
    fn new(s: &InverseSemigroup, n: &ElemSet) -> Self {
        let mut by_ran = vec![Vec::new(); s.len()];
        let mut by_dom = vec![Vec::new(); s.len()];
        for a in n.iter() {
            by_ran[s.ran(a)].push(a);
            by_dom[s.dom(a)].push(a);
        }
        Self { by_ran, by_dom }
    }

    /// Every `asb` with `a⁻¹a = ss⁻¹`, `bb⁻¹ = s⁻¹s`.
    fn sandwiches<'a>(
        &'a self,
        s: &'a InverseSemigroup,
        x: usize,
    ) -> impl Iterator<Item = usize> + 'a {
        self.by_ran[s.dom(x)]
            .iter()
            .flat_map(move |&a| self.by_dom[s.ran(x)].iter().map(move |&b| s.mul3(a, x, b)))
    }
}

/// The relation `≤_N` on all of `S` as a bit matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NormalPreorder {
    rows: Vec<FixedBitSet>,
}

impl NormalPreorder {
    pub fn leq(&self, s: usize, t: usize) -> bool {
        self.rows[s].contains(t)
    }

    pub fn simeq(&self, s: usize, t: usize) -> bool {
        self.leq(s, t) && self.leq(t, s)
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    /// `self ⊆ other` as relations.
    pub fn is_subrelation(&self, other: &NormalPreorder) -> bool {
        self.rows
            .iter()
            .zip(&other.rows)
            .all(|(a, b)| a.is_subset(b))
    }

    /// Partition into `≃_N` classes.
    pub fn classes(&self) -> Partition {
        let n = self.rows.len();
        let mut label = vec![usize::MAX; n];
        for x in 0..n {
            if label[x] != usize::MAX {
                continue;
            }
            label[x] = x;
            for y in self.rows[x].ones().filter(|&y| y > x) {
                if self.rows[y].contains(x) {
                    label[y] = x;
                }
            }
        }
        Partition::from_labels(&label)
    }
}

fn ensure_normal(s: &InverseSemigroup, n: &ElemSet) -> Result<()> {
    if n.universe() != s.len() || !is_normal(s, n) {
        return Err(IsqError::NotNormal);
    }
    Ok(())
}

/// `s ≤_N t` for one pair, by direct witness search.
pub fn leq_n(s: &InverseSemigroup, n: &ElemSet, x: usize, t: usize) -> Result<bool> {
    s.check(x)?;
    s.check(t)?;
    ensure_normal(s, n)?;
    Ok(leq_n_unchecked(s, n, x, t))
}

pub(crate) fn leq_n_unchecked(s: &InverseSemigroup, n: &ElemSet, x: usize, t: usize) -> bool {
    let w = Witnesses::new(s, n);
    let found = w.sandwiches(s, x).any(|y| s.leq(y, t));
    found
}

/// The full matrix of `≤_N`. Row `s` is the union of the up-sets of the
/// sandwiches `asb`; rows are computed in parallel.
pub fn normal_preorder(s: &InverseSemigroup, n: &ElemSet) -> Result<NormalPreorder> {
    ensure_normal(s, n)?;
    crate::limits::ensure_within(s.len())?;
    Ok(normal_preorder_unchecked(s, n))
}

pub(crate) fn normal_preorder_unchecked(s: &InverseSemigroup, n: &ElemSet) -> NormalPreorder {
    let size = s.len();
    let up: Vec<FixedBitSet> = s
        .elements()
        .into_par_iter()
        .map(|x| {
            let mut row = FixedBitSet::with_capacity(size);
            row.extend(s.elements().filter(|&t| s.leq(x, t)));
            row
        })
        .collect();
    let w = Witnesses::new(s, n);
    let rows = s
        .elements()
        .into_par_iter()
        .map(|x| {
            let mut row = FixedBitSet::with_capacity(size);
            let mut seen = FixedBitSet::with_capacity(size);
            for y in w.sandwiches(s, x) {
                if !seen.put(y) {
                    row.union_with(&up[y]);
                }
            }
            row
        })
        .collect();
    NormalPreorder { rows }
}

/// The partition of `S` into `≃_N` classes.
pub fn simeq_n(s: &InverseSemigroup, n: &ElemSet) -> Result<Partition> {
    Ok(normal_preorder(s, n)?.classes())
}

/// Green's `J` relation of `N`, restricted to `E(S)`. The partition is over
/// positions in `s.idempotents()`.
pub fn j_n_on_idempotents(s: &InverseSemigroup, n: &ElemSet) -> Result<Partition> {
    let (sub, embed) = s.restrict_to(n)?;
    let j = green_relations(&sub).j;
    let mut position = vec![usize::MAX; s.len()];
    for (i, &old) in embed.iter().enumerate() {
        position[old] = i;
    }
    let labels: Vec<usize> = s
        .idempotents()
        .iter()
        .map(|&e| j.class_of(position[e]))
        .collect();
    Ok(Partition::from_labels(&labels))
}

/// Restrict a partition of `S` to `E(S)`, indexed by position in
/// `s.idempotents()`.
pub fn restrict_to_idempotents(s: &InverseSemigroup, p: &Partition) -> Partition {
    let labels: Vec<usize> = s.idempotents().iter().map(|&e| p.class_of(e)).collect();
    Partition::from_labels(&labels)
}

/// `S⫽N`: classes of `≃_N` with the witness-based composition.
///
/// Groupoid element `c` is the `c`-th class in order of least member; the
/// least member is the class id.
#[derive(Debug, Clone)]
pub struct NQuotient {
    pub normal: ElemSet,
    pub preorder: NormalPreorder,
    pub classes: Partition,
    pub groupoid: OrderedGroupoid,
    /// `(c, d, a)`: the composite of classes `c` and `d` was computed with
    /// witness `a`.
    pub witnesses: Vec<(usize, usize, usize)>,
}

impl NQuotient {
    pub fn num_classes(&self) -> usize {
        self.classes.num_classes()
    }

    /// Groupoid element containing `x`.
    pub fn class_of(&self, x: usize) -> usize {
        self.classes.class_of(x)
    }

    /// Least member of class `c`.
    pub fn class_id(&self, c: usize) -> usize {
        self.classes.representative(c)
    }

    pub fn is_inductive(&self) -> bool {
        self.groupoid.is_inductive()
    }

    /// Class order `c ≤ d`.
    pub fn class_leq(&self, c: usize, d: usize) -> bool {
        self.groupoid.leq(c, d)
    }

    pub fn to_json(&self) -> QuotientJson {
        QuotientJson {
            groupoid: self.groupoid.parts(),
            class_ids: (0..self.num_classes()).map(|c| self.class_id(c)).collect(),
            classes: self.classes.classes().to_vec(),
            witnesses: self.witnesses.iter().map(|&(c, d, a)| [c, d, a]).collect(),
            inductive: self.is_inductive(),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct QuotientJson {
    pub groupoid: GroupoidParts,
    pub class_ids: Vec<usize>,
    pub classes: Vec<Vec<usize>>,
    pub witnesses: Vec<[usize; 3]>,
    pub inductive: bool,
}

/// Least `a ∈ N` with `aa⁻¹ ≤ f` and `a⁻¹a = e`.
fn least_witness(s: &InverseSemigroup, by_ran: &[Vec<usize>], f: usize, e: usize) -> Option<usize> {
    by_ran[e].iter().copied().find(|&a| s.leq(s.dom(a), f))
}

/// Every admissible witness, for the independence check.
fn all_witnesses<'a>(
    s: &'a InverseSemigroup,
    by_ran: &'a [Vec<usize>],
    f: usize,
    e: usize,
) -> impl Iterator<Item = usize> + 'a {
    by_ran[e]
        .iter()
        .copied()
        .filter(move |&a| s.leq(s.dom(a), f))
}

/// A composite `[c, d, cd]` and the witness `(c, d, a)` that produced it.
type CompositeRow = ([usize; 3], (usize, usize, usize));

pub fn build_quotient(s: &InverseSemigroup, n: &ElemSet) -> Result<NQuotient> {
    ensure_normal(s, n)?;
    crate::limits::ensure_within(s.len())?;
    let preorder = normal_preorder_unchecked(s, n);
    let classes = preorder.classes();
    let k = classes.num_classes();
    let rep = |c: usize| classes.representative(c);
    let w = Witnesses::new(s, n);

    let mut parts = GroupoidParts {
        elements: (0..k).collect(),
        identities: (0..k)
            .filter(|&c| classes.class(c).iter().any(|&x| s.is_idempotent(x)))
            .collect(),
        dom: (0..k).map(|c| classes.class_of(s.dom(rep(c)))).collect(),
        ran: (0..k).map(|c| classes.class_of(s.ran(rep(c)))).collect(),
        inv: (0..k).map(|c| classes.class_of(s.inv(rep(c)))).collect(),
        labels: (0..k).map(|c| s.label(rep(c))).collect(),
        ..Default::default()
    };
    let mut by_dom_class = vec![Vec::new(); k];
    for d in 0..k {
        by_dom_class[parts.dom[d]].push(d);
    }
    let rows: Vec<Result<Vec<CompositeRow>>> = (0..k)
        .into_par_iter()
        .map(|c| {
            let x = rep(c);
            by_dom_class[parts.ran[c]]
                .iter()
                .map(|&d| {
                    let t = rep(d);
                    let a = least_witness(s, &w.by_ran, s.ran(x), s.dom(t)).ok_or_else(|| {
                        IsqError::Internal(format!("no composition witness for classes {c}, {d}"))
                    })?;
                    Ok(([c, d, classes.class_of(s.mul3(x, a, t))], (c, d, a)))
                })
                .collect()
        })
        .collect();
    let mut witnesses = Vec::new();
    for row in rows {
        for (triple, wit) in row? {
            parts.comp.push(triple);
            witnesses.push(wit);
        }
    }
    for c in 0..k {
        for d in 0..k {
            if c != d && preorder.leq(rep(c), rep(d)) {
                parts.leq.push([c, d]);
            }
        }
    }
    let groupoid = OrderedGroupoid::from_parts(parts)?;
    let report = verify_axioms(&groupoid);
    if let Some(v) = report.violations.first() {
        return Err(IsqError::Internal(format!(
            "quotient fails an ordered groupoid axiom: {v:?}"
        )));
    }
    Ok(NQuotient {
        normal: n.clone(),
        preorder,
        classes,
        groupoid,
        witnesses,
    })
}

/// Recompute every composite with every member of both classes and every
/// admissible witness; true iff the class of the result never changes.
pub fn witness_independence(s: &InverseSemigroup, q: &NQuotient) -> bool {
    let w = Witnesses::new(s, &q.normal);
    q.witnesses.par_iter().all(|&(c, d, _)| {
        let expected = q.groupoid.compose(c, d);
        q.classes.class(c).iter().all(|&x| {
            q.classes.class(d).iter().all(|&t| {
                all_witnesses(s, &w.by_ran, s.ran(x), s.dom(t))
                    .map(|a| Some(q.classes.class_of(s.mul3(x, a, t))))
                    .all(|r| r == expected)
            })
        })
    })
}

pub fn is_inductive_quotient(q: &NQuotient) -> bool {
    q.is_inductive()
}

/// The inverse semigroup of an inductive quotient, via the pseudoproduct.
/// Element ids are groupoid element ids.
pub fn quotient_inverse_semigroup(q: &NQuotient) -> Result<InverseSemigroup> {
    esn_to(&q.groupoid)
}

/// Over all normal inverse subsemigroups, `N ↦ ≤_N` is injective and
/// `N ⊆ M` implies `≤_N ⊆ ≤_M`.
pub fn preorder_embedding_check(s: &InverseSemigroup) -> Result<bool> {
    let lattice = enumerate_normal(s)?;
    let orders: Vec<NormalPreorder> = lattice
        .members
        .par_iter()
        .map(|n| normal_preorder_unchecked(s, n))
        .collect();
    for i in 0..orders.len() {
        for j in 0..orders.len() {
            if i == j {
                continue;
            }
            if orders[i] == orders[j] {
                return Ok(false);
            }
            if lattice.members[i].is_subset(&lattice.members[j])
                && !orders[i].is_subrelation(&orders[j])
            {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builders::{example_s6, example_t, symmetric_inverse_monoid};
    use crate::ogroupoid::esn_from;

    fn i2_n1(i2: &InverseSemigroup) -> ElemSet {
        let mut n1 = i2.idempotent_set();
        n1.insert(i2.elem(&[2, 0]));
        n1.insert(i2.elem(&[0, 1]));
        n1
    }

    #[test]
    fn single_pair_agrees_with_matrix() {
        let i2 = symmetric_inverse_monoid(2).unwrap();
        let n1 = i2_n1(&i2);
        let m = normal_preorder(&i2, &n1).unwrap();
        for x in i2.elements() {
            for t in i2.elements() {
                assert_eq!(leq_n(&i2, &n1, x, t).unwrap(), m.leq(x, t));
            }
        }
        assert!(leq_n(&i2, &n1, i2.elem(&[2, 0]), i2.elem(&[1, 0])).unwrap());
        let mut bad = i2.idempotent_set();
        bad.insert(i2.elem(&[2, 1]));
        assert_eq!(leq_n(&i2, &bad, 0, 0), Err(IsqError::NotNormal));
    }

    #[test]
    fn e_gives_natural_order_and_s_gives_j() {
        for s in [
            example_s6(),
            symmetric_inverse_monoid(2).unwrap(),
            example_t(),
        ] {
            let m = normal_preorder(&s, &s.idempotent_set()).unwrap();
            let full = normal_preorder(&s, &ElemSet::full(s.len())).unwrap();
            let g = green_relations(&s);
            for x in s.elements() {
                for t in s.elements() {
                    assert_eq!(m.leq(x, t), s.leq(x, t));
                    assert_eq!(full.leq(x, t), g.j_preorder(x, t));
                }
            }
            assert_eq!(m.classes(), Partition::identity(s.len()));
        }
    }

    #[test]
    fn s6_by_s6_is_a_three_chain() {
        let s6 = example_s6();
        let q = build_quotient(&s6, &ElemSet::full(6)).unwrap();
        assert_eq!(q.classes.classes(), &[vec![0], vec![1, 2, 3, 5], vec![4]]);
        assert_eq!(q.groupoid.identities(), &[0, 1, 2]);
        assert!(q.class_leq(0, 1) && q.class_leq(1, 2));
        assert!(q.is_inductive());
        assert!(witness_independence(&s6, &q));
    }

    #[test]
    fn i2_by_n1() {
        let i2 = symmetric_inverse_monoid(2).unwrap();
        let q = build_quotient(&i2, &i2_n1(&i2)).unwrap();
        // {0}, {f⁻¹, id2, id1, f}, {id12}, {τ}
        assert_eq!(
            q.classes.classes(),
            &[vec![0], vec![1, 2, 3, 5], vec![4], vec![6]]
        );
        let fc = q.class_of(i2.elem(&[2, 0]));
        assert_eq!(
            q.groupoid.compose(fc, fc),
            Some(q.class_of(i2.elem(&[1, 0])))
        );
        assert!(q.is_inductive());
        let id1 = q.class_of(i2.elem(&[1, 0]));
        let id2 = q.class_of(i2.elem(&[0, 2]));
        assert_eq!(q.groupoid.pseudoproduct(id1, id2), Some(id1));
        assert!(witness_independence(&i2, &q));
        let semigroup = quotient_inverse_semigroup(&q).unwrap();
        assert_eq!(semigroup.len(), 4);
    }

    #[test]
    fn quotient_by_e_is_esn() {
        let i2 = symmetric_inverse_monoid(2).unwrap();
        let q = build_quotient(&i2, &i2.idempotent_set()).unwrap();
        assert_eq!(q.groupoid.parts().comp, esn_from(&i2).parts().comp);
        assert_eq!(q.groupoid.parts().leq, esn_from(&i2).parts().leq);
    }

    #[test]
    fn t_quotient_is_not_inductive() {
        let t = example_t();
        let q = build_quotient(&t, &ElemSet::full(t.len())).unwrap();
        assert!(!q.is_inductive());
        assert_eq!(
            quotient_inverse_semigroup(&q).unwrap_err(),
            IsqError::NotInductive
        );
    }

    #[test]
    fn j_n_matches_simeq_on_idempotents() {
        let i2 = symmetric_inverse_monoid(2).unwrap();
        let n1 = i2_n1(&i2);
        let p = simeq_n(&i2, &n1).unwrap();
        assert_eq!(
            restrict_to_idempotents(&i2, &p),
            j_n_on_idempotents(&i2, &n1).unwrap()
        );
    }

    #[test]
    fn embedding_checks() {
        assert!(preorder_embedding_check(&symmetric_inverse_monoid(2).unwrap()).unwrap());
        assert!(preorder_embedding_check(&example_s6()).unwrap());
        assert!(preorder_embedding_check(&crate::builders::cyclic_group(4).unwrap()).unwrap());
    }
}
