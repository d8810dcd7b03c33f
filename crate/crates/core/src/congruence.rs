//! Congruences on finite inverse semigroups: generation, kernel and trace,
//! congruence pairs, the minimal group congruence, coset congruences of
//! closed normal subsemigroups, and how `≃_N` sits among them.

use std::collections::HashSet;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::elemset::ElemSet;
use crate::error::{IsqError, Result};
use crate::normal::{is_clifford, is_closed, is_normal};
use crate::ogroupoid::{esn_from, esn_to, OgFunctor};
use crate::partition::{Partition, UnionFind};
use crate::quotient::{build_quotient, simeq_n, NQuotient};
use crate::semigroup::{InverseSemigroup, RawTable};

/// `s ρ t` implies `us ρ ut` and `su ρ tu`.
pub fn is_compatible(s: &InverseSemigroup, p: &Partition) -> bool {
    p.len() == s.len()
        && p.classes().par_iter().all(|class| {
            let a = class[0];
            class[1..].iter().all(|&b| {
                s.elements().all(|u| {
                    p.related(s.mul(u, a), s.mul(u, b)) && p.related(s.mul(a, u), s.mul(b, u))
                })
            })
        })
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Congruence {
    partition: Partition,
}

impl Congruence {
    pub fn new(s: &InverseSemigroup, partition: Partition) -> Result<Self> {
        if partition.len() != s.len() {
            return Err(IsqError::NotCongruence(format!(
                "partition of {} elements for a semigroup of {}",
                partition.len(),
                s.len()
            )));
        }
        if !is_compatible(s, &partition) {
            return Err(IsqError::NotCongruence(
                "not compatible with multiplication".into(),
            ));
        }
        Ok(Self { partition })
    }

    pub fn identity(s: &InverseSemigroup) -> Self {
        Self {
            partition: Partition::identity(s.len()),
        }
    }

    pub fn universal(s: &InverseSemigroup) -> Self {
        Self {
            partition: Partition::universal(s.len()),
        }
    }

    pub fn partition(&self) -> &Partition {
        &self.partition
    }

    pub fn related(&self, a: usize, b: usize) -> bool {
        self.partition.related(a, b)
    }

    pub fn num_classes(&self) -> usize {
        self.partition.num_classes()
    }

    /// `self ⊆ other`.
    pub fn refines(&self, other: &Congruence) -> bool {
        self.partition.refines(&other.partition)
    }

    pub fn join(&self, other: &Congruence) -> Congruence {
        Congruence {
            partition: self.partition.join(&other.partition),
        }
    }

    /// `{s : s ρ e for some e ∈ E(S)}`.
    pub fn kernel(&self, s: &InverseSemigroup) -> ElemSet {
        let mut idem_class = vec![false; self.partition.num_classes()];
        for &e in s.idempotents() {
            idem_class[self.partition.class_of(e)] = true;
        }
        ElemSet::from_ids(
            s.len(),
            s.elements()
                .filter(|&x| idem_class[self.partition.class_of(x)]),
        )
    }

    /// Restriction to `E(S)`.
    pub fn trace(&self, s: &InverseSemigroup) -> IdemPartition {
        IdemPartition::from_partition(s, idem_labels(s, &self.partition))
    }

    /// `S/ρ` with classes numbered as in the partition, and the natural map.
    pub fn quotient_semigroup(&self, s: &InverseSemigroup) -> (InverseSemigroup, Vec<usize>) {
        let p = &self.partition;
        let k = p.num_classes();
        let mul = (0..k)
            .map(|c| {
                (0..k)
                    .map(|d| p.class_of(s.mul(p.representative(c), p.representative(d))))
                    .collect()
            })
            .collect();
        let inv = (0..k)
            .map(|c| p.class_of(s.inv(p.representative(c))))
            .collect();
        let natural = s.elements().map(|x| p.class_of(x)).collect();
        (
            InverseSemigroup::from_table_unchecked(RawTable { mul, inv }),
            natural,
        )
    }

    pub fn to_json(&self) -> CongruenceJson {
        CongruenceJson {
            classes: self.partition.classes().to_vec(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CongruenceJson {
    pub classes: Vec<Vec<usize>>,
}

impl CongruenceJson {
    pub fn into_partition(self, n: usize) -> Result<Partition> {
        let mut label = vec![usize::MAX; n];
        for (i, class) in self.classes.iter().enumerate() {
            for &x in class {
                if x >= n {
                    return Err(IsqError::UnknownElement { id: x, size: n });
                }
                if label[x] != usize::MAX {
                    return Err(IsqError::Input(format!("element {x} listed twice")));
                }
                label[x] = i;
            }
        }
        if let Some(x) = label.iter().position(|&l| l == usize::MAX) {
            return Err(IsqError::Input(format!("element {x} in no class")));
        }
        Ok(Partition::from_labels(&label))
    }
}

fn idem_labels(s: &InverseSemigroup, p: &Partition) -> Partition {
    let labels: Vec<usize> = s.idempotents().iter().map(|&e| p.class_of(e)).collect();
    Partition::from_labels(&labels)
}

/// Position of each idempotent in `s.idempotents()`.
fn idem_positions(s: &InverseSemigroup) -> Vec<usize> {
    let mut pos = vec![usize::MAX; s.len()];
    for (i, &e) in s.idempotents().iter().enumerate() {
        pos[e] = i;
    }
    pos
}

/// A partition of `E(S)`, indexed by position in `s.idempotents()`, with its
/// congruence and normality flags computed up front.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdemPartition {
    pub partition: Partition,
    /// Compatible with multiplication in `E(S)`.
    pub is_congruence: bool,
    /// Congruence stable under `e ↦ s⁻¹es`.
    pub is_normal: bool,
}

impl IdemPartition {
    pub fn from_partition(s: &InverseSemigroup, partition: Partition) -> Self {
        let e = s.idempotents();
        let pos = idem_positions(s);
        let related = |a: usize, b: usize| partition.related(pos[a], pos[b]);
        let mut is_congruence = true;
        let mut is_normal = true;
        for class in partition.classes() {
            let a = e[class[0]];
            for &j in &class[1..] {
                let b = e[j];
                is_congruence &= e.iter().all(|&g| related(s.mul(a, g), s.mul(b, g)));
                is_normal &= s
                    .elements()
                    .all(|x| related(s.mul3(s.inv(x), a, x), s.mul3(s.inv(x), b, x)));
            }
        }
        Self {
            partition,
            is_normal: is_normal && is_congruence,
            is_congruence,
        }
    }

    pub fn identity(s: &InverseSemigroup) -> Self {
        Self::from_partition(s, Partition::identity(s.idempotents().len()))
    }

    pub fn universal(s: &InverseSemigroup) -> Self {
        Self::from_partition(s, Partition::universal(s.idempotents().len()))
    }

    /// `e ν f` for idempotent element ids.
    pub fn related(&self, s: &InverseSemigroup, e: usize, f: usize) -> bool {
        let pos = |x: usize| s.idempotents().binary_search(&x).expect("idempotent");
        self.partition.related(pos(e), pos(f))
    }
}

/// Least congruence containing `pairs`.
pub fn congruence_from_pairs(s: &InverseSemigroup, pairs: &[(usize, usize)]) -> Result<Congruence> {
    for &(a, b) in pairs {
        s.check(a)?;
        s.check(b)?;
    }
    let mut uf = UnionFind::new(s.len());
    let mut queue: Vec<(usize, usize)> = pairs.to_vec();
    while let Some((a, b)) = queue.pop() {
        if uf.union(a, b) {
            for u in s.elements() {
                queue.push((s.mul(u, a), s.mul(u, b)));
                queue.push((s.mul(a, u), s.mul(b, u)));
            }
        }
    }
    Ok(Congruence {
        partition: uf.into_partition(),
    })
}

/// `(K, ν)`: a normal inverse subsemigroup and a normal congruence on
/// `E(S)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CongruencePair {
    pub kernel: ElemSet,
    pub trace: IdemPartition,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PairViolation {
    KernelNotNormal,
    TraceNotNormalCongruence,
    /// `se ∈ K` and `s⁻¹s ν e` but `s ∉ K`.
    Condition3 {
        s: usize,
        e: usize,
    },
    /// `u ∈ K` but `uu⁻¹` and `u⁻¹u` are not `ν`-related.
    Condition4 {
        u: usize,
    },
}

pub fn pair_violations(
    s: &InverseSemigroup,
    k: &ElemSet,
    nu: &IdemPartition,
) -> Vec<PairViolation> {
    let mut out = Vec::new();
    if k.universe() != s.len() || !is_normal(s, k) {
        out.push(PairViolation::KernelNotNormal);
    }
    if nu.partition.len() != s.idempotents().len() || !nu.is_normal {
        out.push(PairViolation::TraceNotNormalCongruence);
    }
    if !out.is_empty() {
        return out;
    }
    for x in s.elements() {
        if k.contains(x) {
            continue;
        }
        for &e in s.idempotents() {
            if k.contains(s.mul(x, e)) && nu.related(s, s.ran(x), e) {
                out.push(PairViolation::Condition3 { s: x, e });
            }
        }
    }
    for u in k.iter() {
        if !nu.related(s, s.dom(u), s.ran(u)) {
            out.push(PairViolation::Condition4 { u });
        }
    }
    out
}

pub fn validate_pair(s: &InverseSemigroup, k: &ElemSet, nu: &IdemPartition) -> bool {
    pair_violations(s, k, nu).is_empty()
}

/// `s ρ t` iff `st⁻¹ ∈ K` and `s⁻¹s ν t⁻¹t`. Checked to be a congruence with
/// kernel `K` and trace `ν`.
pub fn rho_from_pair(s: &InverseSemigroup, k: &ElemSet, nu: &IdemPartition) -> Result<Congruence> {
    if let Some(v) = pair_violations(s, k, nu).first() {
        return Err(IsqError::InvalidPair(format!("{v:?}")));
    }
    let pos = idem_positions(s);
    let related = |a: usize, b: usize| {
        k.contains(s.mul(a, s.inv(b))) && nu.partition.related(pos[s.ran(a)], pos[s.ran(b)])
    };
    let rho = relation_to_congruence(s, related, "rho of a pair")?;
    if rho.kernel(s) != *k || rho.trace(s).partition != nu.partition {
        return Err(IsqError::Internal(
            "rho of a pair has the wrong kernel or trace".into(),
        ));
    }
    Ok(rho)
}

/// Turn a relation expected to be a congruence into one, checking
/// reflexivity, symmetry, transitivity and compatibility.
fn relation_to_congruence(
    s: &InverseSemigroup,
    related: impl Fn(usize, usize) -> bool + Sync,
    what: &str,
) -> Result<Congruence> {
    let n = s.len();
    let rows: Vec<Vec<usize>> = s
        .elements()
        .into_par_iter()
        .map(|a| s.elements().filter(|&b| related(a, b)).collect())
        .collect();
    let mut label = vec![usize::MAX; n];
    for a in 0..n {
        if label[a] == usize::MAX {
            for &b in &rows[a] {
                label[b] = a;
            }
        }
    }
    let p = Partition::from_labels(&label);
    // equivalence iff each row is exactly its class
    if (0..n).any(|a| rows[a] != p.class(p.class_of(a))) {
        return Err(IsqError::NotCongruence(format!(
            "{what} is not an equivalence"
        )));
    }
    Congruence::new(s, p).map_err(|_| IsqError::NotCongruence(format!("{what} is not compatible")))
}

/// `s σ t` iff `es = et` for some idempotent `e`.
pub fn minimal_group_congruence(s: &InverseSemigroup) -> Congruence {
    let sigma = relation_to_congruence(
        s,
        |a, b| s.idempotents().iter().any(|&e| s.mul(e, a) == s.mul(e, b)),
        "sigma",
    )
    .expect("sigma is a congruence");
    debug_assert!(sigma.quotient_semigroup(s).0.is_group());
    sigma
}

/// `a ≡_N b` iff `ab⁻¹ ∈ N`, for `N` closed and normal.
pub fn coset_congruence(s: &InverseSemigroup, n: &ElemSet) -> Result<Congruence> {
    if !is_normal(s, n) {
        return Err(IsqError::NotNormal);
    }
    if !is_closed(s, n) {
        return Err(IsqError::NotUpwardClosed);
    }
    let rho = relation_to_congruence(s, |a, b| n.contains(s.mul(a, s.inv(b))), "coset relation")?;
    if rho.kernel(s) != *n || !minimal_group_congruence(s).refines(&rho) {
        return Err(IsqError::Internal(
            "coset congruence has wrong kernel or misses sigma".into(),
        ));
    }
    Ok(rho)
}

/// Is the `≃_N` partition compatible with multiplication?
pub fn is_simeq_congruence(s: &InverseSemigroup, n: &ElemSet) -> Result<bool> {
    Ok(is_compatible(s, &simeq_n(s, n)?))
}

/// `≃_N` refines every congruence with kernel `N`.
pub fn minimality_check(
    s: &InverseSemigroup,
    n: &ElemSet,
    lattice: &CongruenceLattice,
) -> Result<bool> {
    let simeq = simeq_n(s, n)?;
    Ok(lattice
        .members
        .iter()
        .filter(|rho| rho.kernel(s) == *n)
        .all(|rho| simeq.refines(rho.partition())))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdempotentSeparatingReport {
    /// The congruence `st⁻¹ ∈ K`, `s⁻¹s = t⁻¹t`.
    pub rho: Congruence,
    pub simeq: Partition,
    pub rho_equals_simeq: bool,
    /// `S⫽K` is inductive and `κ: [s] ↦ ρ(s)` is an isomorphism onto `S/ρ`.
    pub kappa_is_isomorphism: bool,
}

impl IdempotentSeparatingReport {
    pub fn holds(&self) -> bool {
        self.rho_equals_simeq && self.kappa_is_isomorphism
    }
}

pub fn idempotent_separating_check(
    s: &InverseSemigroup,
    k: &ElemSet,
) -> Result<IdempotentSeparatingReport> {
    if !is_normal(s, k) {
        return Err(IsqError::NotNormal);
    }
    if !is_clifford(s, k) {
        return Err(IsqError::NotClifford);
    }
    let rho = rho_from_pair(s, k, &IdemPartition::identity(s))?;
    let q = build_quotient(s, k)?;
    let rho_equals_simeq = q.classes == *rho.partition();
    let kappa_is_isomorphism = rho_equals_simeq && q.is_inductive() && {
        // classes are numbered identically on both sides
        let (image, _) = rho.quotient_semigroup(s);
        esn_to(&q.groupoid)
            .map(|t| t.raw_table() == image.raw_table())
            .unwrap_or(false)
    };
    Ok(IdempotentSeparatingReport {
        simeq: q.classes,
        rho,
        rho_equals_simeq,
        kappa_is_isomorphism,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InducedPair {
    pub pair: CongruencePair,
    pub rho: Congruence,
    /// `ρ_(N,ν)` equals the kernel of `s ↦ [s]ψ`.
    pub matches_composite: bool,
}

/// The pair `(N, ν)` induced by a surjective star-injective functor
/// `ψ: S⫽N → esn_from(Q)`.
pub fn induced_pair_from_functor(
    s: &InverseSemigroup,
    q: &NQuotient,
    target: &InverseSemigroup,
    psi: &OgFunctor,
) -> Result<InducedPair> {
    let tg = esn_from(target);
    let psi = OgFunctor::new(&q.groupoid, &tg, psi.map().to_vec())?;
    if !psi.is_star_injective(&q.groupoid) {
        return Err(IsqError::NotStarInjective);
    }
    if !psi.is_surjective(&tg) {
        return Err(IsqError::NotSurjective);
    }
    let image = |x: usize| psi.apply(q.class_of(x));
    let labels: Vec<usize> = s.idempotents().iter().map(|&e| image(e)).collect();
    let nu = IdemPartition::from_partition(s, Partition::from_labels(&labels));
    let rho = rho_from_pair(s, &q.normal, &nu)?;
    let composite = Partition::from_labels(&s.elements().map(image).collect::<Vec<_>>());
    let matches_composite = composite == *rho.partition();
    Ok(InducedPair {
        pair: CongruencePair {
            kernel: q.normal.clone(),
            trace: nu,
        },
        rho,
        matches_composite,
    })
}

/// Every congruence, sorted by number of classes (descending) then by
/// labels, with the refinement order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CongruenceLattice {
    pub members: Vec<Congruence>,
}

impl CongruenceLattice {
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn refinements(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (i, a) in self.members.iter().enumerate() {
            for (j, b) in self.members.iter().enumerate() {
                if i != j && a.refines(b) {
                    out.push((i, j));
                }
            }
        }
        out
    }

    pub fn with_kernel<'a>(
        &'a self,
        s: &'a InverseSemigroup,
        n: &'a ElemSet,
    ) -> impl Iterator<Item = &'a Congruence> {
        self.members.iter().filter(move |rho| rho.kernel(s) == *n)
    }
}

/// All congruences of `s`, by joining principal congruences to a fixed
/// point. Refuses semigroups above the enumeration cap.
pub fn all_congruences(s: &InverseSemigroup) -> Result<CongruenceLattice> {
    crate::limits::ensure_within_limit(s.len(), crate::limits::MAX_CONGRUENCE_ENUMERATION)?;
    let pairs: Vec<(usize, usize)> = s
        .elements()
        .flat_map(|a| (a + 1..s.len()).map(move |b| (a, b)))
        .collect();
    let principal: HashSet<Congruence> = pairs
        .par_iter()
        .map(|&p| congruence_from_pairs(s, &[p]).expect("ids in range"))
        .collect();
    let mut principal: Vec<Congruence> = principal.into_iter().collect();
    principal.sort_by(|a, b| a.partition.labels().cmp(b.partition.labels()));

    let bottom = Congruence::identity(s);
    let mut seen: HashSet<Congruence> = HashSet::from([bottom.clone()]);
    let mut frontier = vec![bottom];
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for rho in &frontier {
            for p in &principal {
                if !p.refines(rho) {
                    let j = rho.join(p);
                    if seen.insert(j.clone()) {
                        next.push(j);
                    }
                }
            }
        }
        frontier = next;
    }
    let mut members: Vec<Congruence> = seen.into_iter().collect();
    members.sort_by(|a, b| {
        b.num_classes()
            .cmp(&a.num_classes())
            .then_with(|| a.partition.labels().cmp(b.partition.labels()))
    });
    Ok(CongruenceLattice { members })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builders::{
        chain_semilattice, cyclic_group, direct_product_with_group, example_s6, product_id,
        symmetric_inverse_monoid,
    };
    use crate::normal::{enumerate_normal, has_kernel_property};

    fn i2_n1(i2: &InverseSemigroup) -> ElemSet {
        let mut n1 = i2.idempotent_set();
        n1.insert(i2.elem(&[2, 0]));
        n1.insert(i2.elem(&[0, 1]));
        n1
    }

    #[test]
    fn generation() {
        let i2 = symmetric_inverse_monoid(2).unwrap();
        assert_eq!(
            congruence_from_pairs(&i2, &[]).unwrap(),
            Congruence::identity(&i2)
        );
        let all: Vec<(usize, usize)> = (1..7).map(|b| (0, b)).collect();
        assert_eq!(
            congruence_from_pairs(&i2, &all).unwrap(),
            Congruence::universal(&i2)
        );
        // id1 ~ id2 forces id1 = id1·id1 ~ id2·id1 = 0, so everything of rank ≤ 1 collapses
        let rho = congruence_from_pairs(&i2, &[(i2.elem(&[1, 0]), i2.elem(&[0, 2]))]).unwrap();
        assert_eq!(
            rho.partition().classes(),
            &[vec![0, 1, 2, 3, 5], vec![4], vec![6]]
        );
        assert!(is_compatible(&i2, rho.partition()));
    }

    #[test]
    fn kernel_and_trace() {
        let i2 = symmetric_inverse_monoid(2).unwrap();
        assert_eq!(Congruence::identity(&i2).kernel(&i2), i2.idempotent_set());
        assert_eq!(Congruence::universal(&i2).kernel(&i2), ElemSet::full(7));
        for rho in all_congruences(&i2).unwrap().members {
            let k = rho.kernel(&i2);
            assert!(has_kernel_property(&i2, &k));
            assert!(rho.trace(&i2).is_normal);
        }
    }

    #[test]
    fn pairs() {
        let i2 = symmetric_inverse_monoid(2).unwrap();
        let id = rho_from_pair(&i2, &i2.idempotent_set(), &IdemPartition::identity(&i2)).unwrap();
        assert_eq!(id, Congruence::identity(&i2));
        let bad = pair_violations(&i2, &i2_n1(&i2), &IdemPartition::identity(&i2));
        assert!(bad.contains(&PairViolation::Condition4 {
            u: i2.elem(&[2, 0])
        }));
        let sigma = minimal_group_congruence(&i2);
        let back = rho_from_pair(&i2, &sigma.kernel(&i2), &sigma.trace(&i2)).unwrap();
        assert_eq!(back, sigma);
    }

    #[test]
    fn sigma_examples() {
        let z3 = cyclic_group(3).unwrap();
        assert_eq!(minimal_group_congruence(&z3), Congruence::identity(&z3));
        let c = chain_semilattice(3).unwrap();
        assert_eq!(minimal_group_congruence(&c), Congruence::universal(&c));
        // I_2 has a zero, so its maximal group image is trivial
        let i2 = symmetric_inverse_monoid(2).unwrap();
        assert_eq!(minimal_group_congruence(&i2), Congruence::universal(&i2));
        let p = direct_product_with_group(&i2, &cyclic_group(2).unwrap()).unwrap();
        assert_eq!(minimal_group_congruence(&p).num_classes(), 2);
    }

    #[test]
    fn coset_congruence_on_product() {
        let i2 = symmetric_inverse_monoid(2).unwrap();
        let p = direct_product_with_group(&i2, &cyclic_group(2).unwrap()).unwrap();
        let n = ElemSet::from_ids(14, i2.elements().map(|t| product_id(t, 0, 2)));
        let rho = coset_congruence(&p, &n).unwrap();
        assert_eq!(rho.num_classes(), 2);
        assert!(rho.related(product_id(6, 1, 2), product_id(0, 1, 2)));
        assert_eq!(
            coset_congruence(&p, &ElemSet::full(14)).unwrap(),
            Congruence::universal(&p)
        );
        assert_eq!(
            coset_congruence(&i2, &i2.idempotent_set()),
            Err(IsqError::NotUpwardClosed)
        );
    }

    #[test]
    fn simeq_congruence_examples() {
        let s6 = example_s6();
        assert!(!is_simeq_congruence(&s6, &ElemSet::full(6)).unwrap());
        assert!(is_simeq_congruence(&s6, &s6.idempotent_set()).unwrap());
        let i2 = symmetric_inverse_monoid(2).unwrap();
        assert!(!is_simeq_congruence(&i2, &i2_n1(&i2)).unwrap());
        let lattice = all_congruences(&i2).unwrap();
        for n in enumerate_normal(&i2).unwrap().members {
            assert!(minimality_check(&i2, &n, &lattice).unwrap());
        }
    }

    #[test]
    fn lattice_sizes() {
        assert_eq!(
            all_congruences(&chain_semilattice(2).unwrap())
                .unwrap()
                .len(),
            2
        );
        assert_eq!(all_congruences(&cyclic_group(2).unwrap()).unwrap().len(), 2);
        // I_2: identity, Rees by {0}, Rees by rank ≤ 1, universal
        let i2 = symmetric_inverse_monoid(2).unwrap();
        let lat = all_congruences(&i2).unwrap();
        assert_eq!(lat.len(), 4);
        // brute force over all partitions of the 7 elements
        let mut count = 0;
        let mut labels = vec![0usize; 7];
        fn rec(
            i: usize,
            max: usize,
            labels: &mut Vec<usize>,
            s: &InverseSemigroup,
            count: &mut usize,
        ) {
            if i == labels.len() {
                if is_compatible(s, &Partition::from_labels(labels)) {
                    *count += 1;
                }
                return;
            }
            for l in 0..=max + 1 {
                labels[i] = l;
                rec(i + 1, max.max(l), labels, s, count);
            }
        }
        rec(1, 0, &mut labels, &i2, &mut count);
        assert_eq!(count, lat.len());
    }

    #[test]
    fn idempotent_separating() {
        let i2 = symmetric_inverse_monoid(2).unwrap();
        let r = idempotent_separating_check(&i2, &i2.idempotent_set()).unwrap();
        assert!(r.holds());
        assert_eq!(
            idempotent_separating_check(&i2, &i2_n1(&i2)).unwrap_err(),
            IsqError::NotClifford
        );
        let z2 = cyclic_group(2).unwrap();
        let b = crate::builders::brandt_semigroup_over(2, &z2).unwrap();
        let k = ElemSet::from_ids(b.len(), b.elements().filter(|&x| b.dom(x) == b.ran(x)));
        assert!(idempotent_separating_check(&b, &k).unwrap().holds());
    }

    #[test]
    fn induced_pair_round_trip() {
        let i2 = symmetric_inverse_monoid(2).unwrap();
        for rho in all_congruences(&i2).unwrap().members {
            let k = rho.kernel(&i2);
            let q = build_quotient(&i2, &k).unwrap();
            let (target, natural) = rho.quotient_semigroup(&i2);
            let map: Vec<usize> = (0..q.num_classes())
                .map(|c| natural[q.class_id(c)])
                .collect();
            let psi = OgFunctor::new(&q.groupoid, &esn_from(&target), map).unwrap();
            let induced = induced_pair_from_functor(&i2, &q, &target, &psi).unwrap();
            assert_eq!(induced.rho, rho);
            assert!(induced.matches_composite);
            assert_eq!(induced.pair.trace, rho.trace(&i2));
        }
    }

    #[test]
    fn json_round_trip() {
        let i2 = symmetric_inverse_monoid(2).unwrap();
        let sigma = minimal_group_congruence(&i2);
        let text = serde_json::to_string(&sigma.to_json()).unwrap();
        let back: CongruenceJson = serde_json::from_str(&text).unwrap();
        assert_eq!(&back.into_partition(7).unwrap(), sigma.partition());
        let dup = CongruenceJson {
            classes: vec![vec![0, 1], vec![1]],
        };
        assert!(dup.into_partition(2).is_err());
    }
}
