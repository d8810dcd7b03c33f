//! Factor a homomorphism `φ: S → Σ` as `S → S⫽K → Σ` with a star-injective
//! second leg, `K = {s : sφ ∈ E(Σ)}`, and check that `K` is the only choice.

use crate::elemset::ElemSet;
use crate::error::{IsqError, Result};
use crate::normal::{enumerate_normal, is_normal};
use crate::ogroupoid::{esn_from, OgFunctor, OrderedGroupoid};
use crate::quotient::{build_quotient, NQuotient};
use crate::semigroup::{Homomorphism, InverseSemigroup};

#[derive(Debug, Clone)]
pub struct Factorization {
    pub kernel: ElemSet,
    pub quotient: NQuotient,
    pub target: OrderedGroupoid,
    pub kappa: OgFunctor,
}

impl Factorization {
    /// `[s]κ`, which equals `sφ`.
    pub fn apply(&self, x: usize) -> usize {
        self.kappa.apply(self.quotient.class_of(x))
    }
}

/// `{s : sφ ∈ E(Σ)}`.
pub fn hom_kernel(s: &InverseSemigroup, sigma: &InverseSemigroup, phi: &Homomorphism) -> ElemSet {
    ElemSet::from_ids(
        s.len(),
        s.elements().filter(|&x| sigma.is_idempotent(phi.apply(x))),
    )
}

/// What happens to the only candidate second leg `[s]_N ↦ sφ`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SecondLeg {
    /// Two members of one class have different images.
    NotWellDefined {
        a: usize,
        b: usize,
    },
    NotFunctor(String),
    NotStarInjective(OgFunctor),
    StarInjective(OgFunctor),
}

impl SecondLeg {
    pub fn is_star_injective(&self) -> bool {
        matches!(self, SecondLeg::StarInjective(_))
    }
}

/// Any `ψ` with `π∘ψ = φ` must send `[s]_N` to `sφ`, so there is at most one
/// candidate; classify it.
pub fn second_leg(
    s: &InverseSemigroup,
    phi: &Homomorphism,
    q: &NQuotient,
    target: &OrderedGroupoid,
) -> SecondLeg {
    for class in q.classes.classes() {
        let a = class[0];
        if let Some(&b) = class.iter().find(|&&b| phi.apply(b) != phi.apply(a)) {
            return SecondLeg::NotWellDefined { a, b };
        }
    }
    debug_assert_eq!(q.classes.len(), s.len());
    let map = (0..q.num_classes())
        .map(|c| phi.apply(q.class_id(c)))
        .collect();
    match OgFunctor::new(&q.groupoid, target, map) {
        Err(e) => SecondLeg::NotFunctor(e.to_string()),
        Ok(f) if f.is_star_injective(&q.groupoid) => SecondLeg::StarInjective(f),
        Ok(f) => SecondLeg::NotStarInjective(f),
    }
}

pub fn factorize_hom(
    s: &InverseSemigroup,
    sigma: &InverseSemigroup,
    phi: &Homomorphism,
) -> Result<Factorization> {
    if phi.map().len() != s.len() || phi.map().iter().any(|&y| y >= sigma.len()) {
        return Err(IsqError::NotHomomorphism(
            "map does not fit the semigroups".into(),
        ));
    }
    let kernel = hom_kernel(s, sigma, phi);
    if !is_normal(s, &kernel) {
        return Err(IsqError::Internal(
            "kernel of a homomorphism is not normal".into(),
        ));
    }
    let quotient = build_quotient(s, &kernel)?;
    let target = esn_from(sigma);
    let kappa = match second_leg(s, phi, &quotient, &target) {
        SecondLeg::StarInjective(f) => f,
        other => {
            return Err(IsqError::Internal(format!(
                "second leg through the kernel fails: {other:?}"
            )))
        }
    };
    let f = Factorization {
        kernel,
        quotient,
        target,
        kappa,
    };
    if s.elements().any(|x| f.apply(x) != phi.apply(x)) {
        return Err(IsqError::Internal(
            "factorization does not recover the homomorphism".into(),
        ));
    }
    Ok(f)
}

/// True iff `n` is the kernel of `φ`. Errors if the second leg through
/// `S⫽n` is not a star-injective functor.
pub fn uniqueness_check(
    s: &InverseSemigroup,
    sigma: &InverseSemigroup,
    phi: &Homomorphism,
    n: &ElemSet,
) -> Result<bool> {
    let q = build_quotient(s, n)?;
    match second_leg(s, phi, &q, &esn_from(sigma)) {
        SecondLeg::StarInjective(_) => Ok(*n == hom_kernel(s, sigma, phi)),
        _ => Err(IsqError::NotStarInjective),
    }
}

/// Normal inverse subsemigroups admitting a star-injective second leg.
pub fn admissible_normals(
    s: &InverseSemigroup,
    sigma: &InverseSemigroup,
    phi: &Homomorphism,
) -> Result<Vec<ElemSet>> {
    let target = esn_from(sigma);
    let mut out = Vec::new();
    for n in enumerate_normal(s)?.members {
        let q = build_quotient(s, &n)?;
        if second_leg(s, phi, &q, &target).is_star_injective() {
            out.push(n);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builders::{
        cyclic_group, direct_product_with_group, example_t, product_id, symmetric_inverse_monoid,
    };
    use crate::congruence::minimal_group_congruence;

    #[test]
    fn identity_factors_through_e() {
        let i2 = symmetric_inverse_monoid(2).unwrap();
        let id = Homomorphism::identity(&i2);
        let f = factorize_hom(&i2, &i2, &id).unwrap();
        assert_eq!(f.kernel, i2.idempotent_set());
        assert!(f.kappa.is_isomorphism(&f.quotient.groupoid, &f.target));
        assert_eq!(
            admissible_normals(&i2, &i2, &id).unwrap(),
            vec![i2.idempotent_set()]
        );
    }

    #[test]
    fn sigma_quotient() {
        let i3 = symmetric_inverse_monoid(3).unwrap();
        let sigma = minimal_group_congruence(&i3);
        let (g, natural) = sigma.quotient_semigroup(&i3);
        let phi = Homomorphism::new(&i3, &g, natural).unwrap();
        let f = factorize_hom(&i3, &g, &phi).unwrap();
        assert_eq!(f.kernel, sigma.kernel(&i3));
        assert!(uniqueness_check(&i3, &g, &phi, &f.kernel).unwrap());
        assert_eq!(
            uniqueness_check(&i3, &g, &phi, &i3.idempotent_set()),
            Err(IsqError::NotStarInjective)
        );
    }

    #[test]
    fn projection_onto_the_group() {
        let t = example_t();
        let z2 = cyclic_group(2).unwrap();
        let p = direct_product_with_group(&t, &z2).unwrap();
        let phi = Homomorphism::new(&p, &z2, p.elements().map(|x| x % 2).collect()).unwrap();
        let f = factorize_hom(&p, &z2, &phi).unwrap();
        let expected = ElemSet::from_ids(p.len(), t.elements().map(|x| product_id(x, 0, 2)));
        assert_eq!(f.kernel, expected);
        assert_eq!(admissible_normals(&p, &z2, &phi).unwrap(), vec![expected]);
    }
}
