//! Green's relations.
//!
//! `R` and `L` come from the domain and range idempotents, `D` from the
//! idempotents joined by some element, and `J` from comparing principal
//! two-sided ideals `S¹sS¹`.

use crate::elemset::ElemSet;
use crate::partition::{Partition, UnionFind};
use crate::semigroup::InverseSemigroup;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GreenRelations {
    pub r: Partition,
    pub l: Partition,
    pub d: Partition,
    pub j: Partition,
    /// `j_leq[a][b]`: J-class `a` lies below J-class `b` (indices into
    /// `j.classes()`).
    pub j_leq: Vec<Vec<bool>>,
}

impl GreenRelations {
    pub fn j_class_leq(&self, a: usize, b: usize) -> bool {
        self.j_leq[a][b]
    }

    /// Element-level J-preorder.
    pub fn j_preorder(&self, s: usize, t: usize) -> bool {
        self.j_leq[self.j.class_of(s)][self.j.class_of(t)]
    }

    /// True if the J-classes, ordered by inclusion of ideals, form a
    /// meet-semilattice.
    pub fn j_poset_is_meet_semilattice(&self) -> bool {
        poset_is_meet_semilattice(&self.j_leq)
    }
}

/// `leq` is a partial order on `0..n`; check every pair has a greatest lower
/// bound.
pub fn poset_is_meet_semilattice(leq: &[Vec<bool>]) -> bool {
    let n = leq.len();
    (0..n).all(|a| (a..n).all(|b| poset_meet(leq, a, b).is_some()))
}

pub fn poset_meet(leq: &[Vec<bool>], a: usize, b: usize) -> Option<usize> {
    let lower: Vec<usize> = (0..leq.len()).filter(|&z| leq[z][a] && leq[z][b]).collect();
    lower
        .iter()
        .copied()
        .find(|&m| lower.iter().all(|&z| leq[z][m]))
}

/// Principal two-sided ideal `S¹sS¹`.
pub fn principal_ideal(s: &InverseSemigroup, x: usize) -> ElemSet {
    // S¹xS¹ = SxS because x = (xx⁻¹)x(x⁻¹x)
    let mut left = ElemSet::empty(s.len());
    for a in s.elements() {
        left.insert(s.mul(a, x));
    }
    let mut ideal = ElemSet::empty(s.len());
    for l in left.iter() {
        for b in s.elements() {
            ideal.insert(s.mul(l, b));
        }
    }
    ideal
}

pub fn green_relations(s: &InverseSemigroup) -> GreenRelations {
    let n = s.len();
    let r = Partition::from_labels(&s.elements().map(|x| s.dom(x)).collect::<Vec<_>>());
    let l = Partition::from_labels(&s.elements().map(|x| s.ran(x)).collect::<Vec<_>>());

    let mut uf = UnionFind::new(n);
    for x in s.elements() {
        uf.union(s.dom(x), s.ran(x));
    }
    let d_labels: Vec<usize> = s.elements().map(|x| uf.find(s.dom(x))).collect();
    let d = Partition::from_labels(&d_labels);

    // Ideals depend only on the D-class, so compute one per D-class.
    let d_ideals: Vec<ElemSet> = d
        .classes()
        .iter()
        .map(|c| principal_ideal(s, c[0]))
        .collect();
    let j_labels: Vec<&ElemSet> = s.elements().map(|x| &d_ideals[d.class_of(x)]).collect();
    let j = Partition::from_labels(&j_labels);
    let j_ideals: Vec<&ElemSet> = j.classes().iter().map(|c| j_labels[c[0]]).collect();
    let j_leq = j_ideals
        .iter()
        .map(|a| j_ideals.iter().map(|b| a.is_subset(b)).collect())
        .collect();
    GreenRelations { r, l, d, j, j_leq }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builders::{chain_semilattice, example_s6, example_t, symmetric_inverse_monoid};

    fn classes_as_maps(s: &InverseSemigroup, p: &Partition) -> Vec<Vec<String>> {
        p.classes()
            .iter()
            .map(|c| c.iter().map(|&x| s.label(x)).collect())
            .collect()
    }

    #[test]
    fn s6_j_classes_form_a_three_chain() {
        let s6 = example_s6();
        let g = green_relations(&s6);
        let classes = classes_as_maps(&s6, &g.j);
        assert_eq!(
            classes,
            vec![
                vec!["0".to_string()],
                vec![
                    "[2->1]".into(),
                    "[2->2]".into(),
                    "[1->1]".into(),
                    "[1->2]".into()
                ],
                vec!["[1->1, 3->3]".into()],
            ]
        );
        assert!(g.j_class_leq(0, 1) && g.j_class_leq(1, 2) && !g.j_class_leq(2, 1));
        assert!(g.j_poset_is_meet_semilattice());
    }

    #[test]
    fn semilattice_j_is_trivial() {
        let c = chain_semilattice(4).unwrap();
        assert_eq!(green_relations(&c).j, Partition::identity(4));
    }

    #[test]
    fn i2_j_classes_by_rank() {
        let i2 = symmetric_inverse_monoid(2).unwrap();
        let g = green_relations(&i2);
        // oracle: rank of each map
        let ranks: Vec<usize> = i2.maps().unwrap().iter().map(|m| m.rank()).collect();
        assert_eq!(g.j, Partition::from_labels(&ranks));
        assert_eq!(g.j.classes(), &[vec![0], vec![1, 2, 3, 5], vec![4, 6]]);
    }

    #[test]
    fn d_equals_j_on_fixtures() {
        for s in [
            example_s6(),
            example_t(),
            symmetric_inverse_monoid(3).unwrap(),
        ] {
            let g = green_relations(&s);
            assert_eq!(g.d, g.j);
            assert!(g.r.refines(&g.d) && g.l.refines(&g.d));
        }
    }

    #[test]
    fn t_j_poset_is_not_a_semilattice() {
        assert!(!green_relations(&example_t()).j_poset_is_meet_semilattice());
    }
}
