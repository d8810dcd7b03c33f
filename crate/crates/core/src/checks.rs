//! Property suites over the fixtures. Each suite counts the cases it tried
//! and keeps the first few failures; a property failure is a report entry,
//! not an error.

use std::collections::HashMap;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::builders::{
    brandt_id, brandt_semigroup, cyclic_group, direct_product_with_group, example_s6, example_t,
    product_id, small_fixtures, symmetric_inverse_monoid,
};
use crate::congruence::{
    all_congruences, coset_congruence, idempotent_separating_check, induced_pair_from_functor,
    is_simeq_congruence, minimality_check, rho_from_pair, validate_pair, Congruence, IdemPartition,
};
use crate::elemset::ElemSet;
use crate::error::Result;
use crate::factorize::{admissible_normals, factorize_hom, uniqueness_check};
use crate::green::{green_relations, poset_is_meet_semilattice};
use crate::munn::{self, MunnTree, Presentation};
use crate::normal::{
    enumerate_normal, has_kernel_property, is_clifford, is_closed, is_normal,
    non_units_with_identity,
};
use crate::ogroupoid::{esn_from, esn_to, verify_axioms, OgFunctor};
use crate::partition::Partition;
use crate::poly::{self, PolyElement};
use crate::quotient::{
    build_quotient, j_n_on_idempotents, normal_preorder, preorder_embedding_check,
    restrict_to_idempotents, witness_independence, NQuotient,
};
use crate::semigroup::{Homomorphism, InverseSemigroup};

const KEPT_FAILURES: usize = 8;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    pub name: String,
    pub cases: usize,
    pub failures: usize,
    /// The first few failing cases.
    pub examples: Vec<String>,
}

impl CheckReport {
    pub fn new(name: impl Into<String>) -> Self {
        Self {
            name: name.into(),
            cases: 0,
            failures: 0,
            examples: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.failures == 0 && self.cases > 0
    }

    /// Record one case; `detail` is only evaluated on failure.
    pub fn case(&mut self, ok: bool, detail: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.failures += 1;
            if self.examples.len() < KEPT_FAILURES {
                self.examples.push(detail());
            }
        }
    }

    pub fn absorb(&mut self, other: CheckReport) {
        self.cases += other.cases;
        self.failures += other.failures;
        for e in other.examples {
            if self.examples.len() < KEPT_FAILURES {
                self.examples.push(format!("{}: {e}", other.name));
            }
        }
    }

    /// An error while running the suite counts as a failure.
    pub fn absorb_result(&mut self, other: Result<CheckReport>, name: &str) {
        match other {
            Ok(r) => self.absorb(r),
            Err(e) => self.case(false, || format!("{name}: {e}")),
        }
    }
}

fn set_str(n: &ElemSet) -> String {
    format!("{:?}", n.to_vec())
}

/// `s ≤_N t` straight from the definition, for cross-checking the matrix.
fn leq_by_definition(s: &InverseSemigroup, n: &[usize], x: usize, t: usize) -> bool {
    n.iter().filter(|&&a| s.ran(a) == s.dom(x)).any(|&a| {
        n.iter()
            .filter(|&&b| s.dom(b) == s.ran(x))
            .any(|&b| s.leq(s.mul3(a, x, b), t))
    })
}

/// Basic properties of `≤_N` for every normal `N`.
pub fn preorder_properties(name: &str, s: &InverseSemigroup) -> Result<CheckReport> {
    let mut r = CheckReport::new(format!("preorder properties on {name}"));
    let lattice = enumerate_normal(s)?;
    let green = green_relations(s);
    let e_set = s.idempotent_set();
    let full = ElemSet::full(s.len());
    for n in &lattice.members {
        let pre = normal_preorder(s, n)?;
        let members = n.to_vec();
        let tag = set_str(n);
        for x in s.elements() {
            for t in s.elements() {
                let l = pre.leq(x, t);
                r.case(l == leq_by_definition(s, &members, x, t), || {
                    format!("N={tag}: matrix disagrees at ({x},{t})")
                });
                if *n == e_set {
                    r.case(l == s.leq(x, t), || {
                        format!("≤_E is not the natural order at ({x},{t})")
                    });
                }
                if *n == full {
                    r.case(l == green.j_preorder(x, t), || {
                        format!("≤_S is not the J-preorder at ({x},{t})")
                    });
                }
                if s.leq(x, t) {
                    r.case(l, || format!("N={tag}: {x} ≤ {t} but not {x} ≤_N {t}"));
                }
                if l {
                    r.case(n.contains(s.mul(x, s.inv(t))), || {
                        format!("N={tag}: {x} ≤_N {t} but st⁻¹ ∉ N")
                    });
                    // transitivity
                    for u in s.elements().filter(|&u| pre.leq(t, u)) {
                        r.case(pre.leq(x, u), || {
                            format!("N={tag}: not transitive at ({x},{t},{u})")
                        });
                    }
                }
            }
            r.case(pre.leq(x, x), || format!("N={tag}: not reflexive at {x}"));
            let below_idem = s.idempotents().iter().any(|&e| pre.leq(x, e));
            r.case(below_idem == n.contains(x), || {
                format!("N={tag}: {x} below an idempotent iff in N fails")
            });
            if pre.leq(x, s.mul(x, x)) {
                r.case(n.contains(x), || {
                    format!("N={tag}: {x} ≤_N {x}² but {x} ∉ N")
                });
            }
        }
    }
    Ok(r)
}

/// Properties of `≃_N` for every normal `N`.
pub fn equivalence_properties(name: &str, s: &InverseSemigroup) -> Result<CheckReport> {
    let mut r = CheckReport::new(format!("equivalence properties on {name}"));
    let lattice = enumerate_normal(s)?;
    let green = green_relations(s);
    let e_set = s.idempotent_set();
    let full = ElemSet::full(s.len());
    for n in &lattice.members {
        let p = normal_preorder(s, n)?.classes();
        let tag = set_str(n);
        for m in n.iter() {
            let chain = [m, s.dom(m), s.inv(m), s.ran(m)];
            r.case(chain.iter().all(|&y| p.related(m, y)), || {
                format!("N={tag}: {m} not related to its inverse and idempotents")
            });
        }
        let mut from_idempotents = ElemSet::empty(s.len());
        for &e in s.idempotents() {
            for &y in p.class(p.class_of(e)) {
                from_idempotents.insert(y);
            }
        }
        r.case(from_idempotents == *n, || {
            format!("N={tag}: union of idempotent classes is not N")
        });
        for class in p.classes() {
            let inside = class.iter().filter(|&&y| n.contains(y)).count();
            r.case(inside == 0 || inside == class.len(), || {
                format!("N={tag}: class {class:?} straddles N")
            });
            for &x in class {
                for &t in class {
                    let ok = p.related(s.dom(x), s.dom(t))
                        && p.related(s.ran(x), s.ran(t))
                        && p.related(s.inv(x), s.inv(t));
                    r.case(ok, || {
                        format!("N={tag}: {x} ≃ {t} but dom/ran/inverses are not related")
                    });
                }
            }
        }
        let on_e = restrict_to_idempotents(s, &p);
        r.case(on_e == j_n_on_idempotents(s, n)?, || {
            format!("N={tag}: restriction to E(S) is not J_N")
        });
        if *n == full {
            r.case(p == green.j, || "≃_S is not J".into());
        }
        if *n == e_set {
            r.case(p == Partition::identity(s.len()), || {
                "≃_E is not trivial".into()
            });
        }
    }
    Ok(r)
}

/// `e ≤ f` in the `J_N` order on idempotents: `e ∈ NfN`.
fn j_n_leq(s: &InverseSemigroup, n: &[usize], e: usize, f: usize) -> bool {
    n.iter().any(|&a| n.iter().any(|&b| s.mul3(a, f, b) == e))
}

fn poset_of_identities(q: &NQuotient) -> Vec<Vec<bool>> {
    let ids = q.groupoid.identities();
    ids.iter()
        .map(|&a| ids.iter().map(|&b| q.groupoid.leq(a, b)).collect())
        .collect()
}

/// The quotient groupoid for every normal `N`: axioms, independence of the
/// chosen witness, the identity poset against `N/J_N`, and inductivity.
pub fn quotient_properties(name: &str, s: &InverseSemigroup) -> Result<CheckReport> {
    let mut r = CheckReport::new(format!("quotient groupoids of {name}"));
    let lattice = enumerate_normal(s)?;
    for n in &lattice.members {
        let tag = set_str(n);
        let q = build_quotient(s, n)?;
        let report = verify_axioms(&q.groupoid);
        r.case(report.is_empty(), || {
            format!("N={tag}: {:?}", report.violations.first())
        });
        r.case(witness_independence(s, &q), || {
            format!("N={tag}: composition depends on the witness")
        });

        // identities ↔ J_N-classes of E(S), as posets
        let jn = j_n_on_idempotents(s, n)?;
        let members = n.to_vec();
        let ids = q.groupoid.identities();
        let class_of_identity: Vec<usize> = ids
            .iter()
            .map(|&c| {
                let e = *q
                    .classes
                    .class(c)
                    .iter()
                    .find(|&&x| s.is_idempotent(x))
                    .expect("identity class has an idempotent");
                jn.class_of(s.idempotents().binary_search(&e).expect("idempotent"))
            })
            .collect();
        let mut seen = class_of_identity.clone();
        seen.sort_unstable();
        seen.dedup();
        r.case(
            seen.len() == ids.len() && seen.len() == jn.num_classes(),
            || format!("N={tag}: identities do not biject with J_N-classes"),
        );
        for (i, &c) in ids.iter().enumerate() {
            for (j, &d) in ids.iter().enumerate() {
                let e = s.idempotents()[jn.representative(class_of_identity[i])];
                let f = s.idempotents()[jn.representative(class_of_identity[j])];
                r.case(q.groupoid.leq(c, d) == j_n_leq(s, &members, e, f), || {
                    format!("N={tag}: order on identities {c},{d} differs from J_N")
                });
            }
        }
        let semilattice = poset_is_meet_semilattice(&poset_of_identities(&q));
        r.case(q.is_inductive() == semilattice, || {
            format!("N={tag}: inductive flag disagrees with the identity poset")
        });
        r.case(esn_to(&q.groupoid).is_ok() == semilattice, || {
            format!("N={tag}: esn_to disagrees with the identity poset")
        });
    }
    r.case(preorder_embedding_check(s)?, || {
        "N ↦ ≤_N is not an order embedding".into()
    });
    Ok(r)
}

/// On `I_3`, `α ⪯ β ⟺ d(α) ⊆ d(β)` is a preorder containing `≤` that
/// recovers `N = I_3`, yet it is not `≤_N` for any normal `N`.
pub fn domain_preorder_remark() -> Result<CheckReport> {
    let mut r = CheckReport::new("domain-inclusion preorder on I_3");
    let s = symmetric_inverse_monoid(3)?;
    let maps = s.maps().expect("I_3 is built from partial bijections");
    let dom: Vec<Vec<u8>> = maps.iter().map(|m| m.domain()).collect();
    let below = |a: usize, b: usize| dom[a].iter().all(|x| dom[b].contains(x));
    for a in s.elements() {
        for b in s.elements() {
            if s.leq(a, b) {
                r.case(below(a, b), || {
                    format!("{a} ≤ {b} but domains are not nested")
                });
            }
        }
    }
    let recovered = ElemSet::from_ids(
        s.len(),
        s.elements()
            .filter(|&a| s.idempotents().iter().any(|&e| below(a, e))),
    );
    r.case(recovered == ElemSet::full(s.len()), || {
        "recovered N is not all of I_3".into()
    });
    for n in enumerate_normal(&s)?.members {
        let pre = normal_preorder(&s, &n)?;
        let same = s
            .elements()
            .all(|a| s.elements().all(|b| pre.leq(a, b) == below(a, b)));
        r.case(!same, || format!("⪯ equals ≤_N for N={}", set_str(&n)));
    }
    Ok(r)
}

/// Congruence pairs, minimality of `≃_N`, the functor `S⫽K → S/ρ`, the
/// idempotent-separating case and cosets of closed normal subsemigroups.
pub fn congruence_properties(name: &str, s: &InverseSemigroup) -> Result<CheckReport> {
    let mut r = CheckReport::new(format!("congruences of {name}"));
    let lattice = all_congruences(s)?;
    let normals = enumerate_normal(s)?.members;

    let mut traces: Vec<IdemPartition> = Vec::new();
    for rho in &lattice.members {
        let k = rho.kernel(s);
        let tr = rho.trace(s);
        r.case(validate_pair(s, &k, &tr), || {
            format!(
                "(ker, tr) of {:?} is not a congruence pair",
                rho.partition().classes()
            )
        });
        let back = rho_from_pair(s, &k, &tr);
        r.case(back.as_ref() == Ok(rho), || {
            format!("round trip changes {:?}", rho.partition().classes())
        });
        if !traces.contains(&tr) {
            traces.push(tr);
        }

        // s ≃_K t ⟹ s ρ t, and κ: S⫽K → S/ρ is a surjective star-injective functor
        let q = build_quotient(s, &k)?;
        r.case(q.classes.refines(rho.partition()), || {
            format!("≃_K does not refine {:?}", rho.partition().classes())
        });
        let (image, natural) = rho.quotient_semigroup(s);
        let target = esn_from(&image);
        let map: Vec<usize> = (0..q.num_classes())
            .map(|c| natural[q.class_id(c)])
            .collect();
        match OgFunctor::new(&q.groupoid, &target, map) {
            Ok(kappa) => {
                r.case(kappa.is_star_injective(&q.groupoid), || {
                    "κ is not star-injective".into()
                });
                r.case(kappa.is_surjective(&target), || {
                    "κ is not surjective".into()
                });
                match induced_pair_from_functor(s, &q, &image, &kappa) {
                    Ok(ind) => {
                        r.case(ind.matches_composite && ind.rho == *rho, || {
                            "pair induced by κ does not give back ρ".into()
                        });
                        r.case(
                            ind.pair.kernel == k && ind.pair.trace == rho.trace(s),
                            || "pair induced by κ is not (ker, tr)".into(),
                        );
                    }
                    Err(e) => r.case(false, || format!("induced pair: {e}")),
                }
            }
            Err(e) => r.case(false, || format!("κ is not a functor: {e}")),
        }
    }

    // every valid pair built from a normal kernel and an occurring trace
    for k in &normals {
        for nu in &traces {
            if validate_pair(s, k, nu) {
                let rho = rho_from_pair(s, k, nu)?;
                r.case(rho.kernel(s) == *k && rho.trace(s) == *nu, || {
                    format!("pair ({}, ν) not recovered", set_str(k))
                });
            }
        }
    }

    let mut kernels: Vec<ElemSet> = lattice.members.iter().map(|rho| rho.kernel(s)).collect();
    kernels.sort_by(ElemSet::canonical_cmp);
    kernels.dedup();
    for n in &normals {
        let tag = set_str(n);
        let kp = has_kernel_property(s, n);
        r.case(kp == kernels.contains(n), || {
            format!("N={tag}: kernel property disagrees with being a kernel")
        });
        if kp {
            let jn = IdemPartition::from_partition(s, j_n_on_idempotents(s, n)?);
            let cong = is_simeq_congruence(s, n)?;
            r.case(cong == jn.is_normal, || {
                format!(
                    "N={tag}: ≃_N congruence={cong} but J_N normal={}",
                    jn.is_normal
                )
            });
            if cong {
                r.case(minimality_check(s, n, &lattice)?, || {
                    format!("N={tag}: ≃_N does not refine every congruence with kernel N")
                });
                let simeq = Congruence::new(s, build_quotient(s, n)?.classes)?;
                r.case(simeq.kernel(s) == *n, || {
                    format!("N={tag}: kernel of ≃_N is not N")
                });
            }
        }
        if is_clifford(s, n) {
            let rep = idempotent_separating_check(s, n)?;
            r.case(rep.holds(), || {
                format!("N={tag}: idempotent-separating congruence differs from ≃_N")
            });
        }
        if is_closed(s, n) {
            let coset = coset_congruence(s, n)?;
            let simeq = build_quotient(s, n)?.classes;
            r.case(simeq.refines(coset.partition()), || {
                format!("N={tag}: ≃_N does not refine ≡_N")
            });
            for x in s.elements() {
                for t in s.elements() {
                    let lhs = s.mul3(x, s.inv(t), t);
                    let rhs = s.mul3(t, s.inv(x), x);
                    r.case(coset.related(x, t) == simeq.related(lhs, rhs), || {
                        format!("N={tag}: coset criterion fails at ({x},{t})")
                    });
                }
            }
        }
    }
    Ok(r)
}

/// One homomorphism through the factorization and uniqueness checks.
fn factorization_case(
    label: &str,
    s: &InverseSemigroup,
    sigma: &InverseSemigroup,
    phi: &Homomorphism,
) -> CheckReport {
    let mut r = CheckReport::new(label.to_string());
    match factorize_hom(s, sigma, phi) {
        Ok(f) => {
            r.case(f.kappa.is_star_injective(&f.quotient.groupoid), || {
                "κ is not star-injective".into()
            });
            r.case(s.elements().all(|x| f.apply(x) == phi.apply(x)), || {
                "π∘κ differs from φ".into()
            });
            r.case(
                uniqueness_check(s, sigma, phi, &f.kernel) == Ok(true),
                || "uniqueness_check rejects the kernel".into(),
            );
            match admissible_normals(s, sigma, phi) {
                Ok(adm) => r.case(adm == vec![f.kernel.clone()], || {
                    format!(
                        "admissible normals {:?}",
                        adm.iter().map(set_str).collect::<Vec<_>>()
                    )
                }),
                Err(e) => r.case(false, || e.to_string()),
            }
        }
        Err(e) => r.case(false, || e.to_string()),
    }
    r
}

/// Identity maps, every natural map `S → S/ρ` of the small fixtures, and
/// the projection `T × Z_2 → Z_2`.
pub fn factorization_properties() -> Result<CheckReport> {
    let mut r = CheckReport::new("factorization through S⫽K");
    for (name, s) in small_fixtures() {
        r.absorb(factorization_case(
            &format!("identity on {name}"),
            &s,
            &s,
            &Homomorphism::identity(&s),
        ));
        for (i, rho) in all_congruences(&s)?.members.iter().enumerate() {
            let (image, natural) = rho.quotient_semigroup(&s);
            let phi = Homomorphism::new(&s, &image, natural)?;
            r.absorb(factorization_case(
                &format!("{name} → {name}/ρ{i}"),
                &s,
                &image,
                &phi,
            ));
        }
    }
    let t = example_t();
    let z2 = cyclic_group(2)?;
    let p = direct_product_with_group(&t, &z2)?;
    let phi = Homomorphism::new(&p, &z2, p.elements().map(|x| x % 2).collect())?;
    r.absorb(factorization_case("T×Z_2 → Z_2", &p, &z2, &phi));
    Ok(r)
}

/// `S⫽S` on the six-element example: three classes in a chain, and `≃_S`
/// is not a congruence.
pub fn s6_example() -> Result<CheckReport> {
    let mut r = CheckReport::new("S6 quotient by itself");
    let s = example_s6();
    let id13 = s.elem(&[1, 0, 3, 0]);
    let id1 = s.elem(&[1, 0, 0, 0]);
    let id2 = s.elem(&[0, 2, 0, 0]);
    let f = s.elem(&[2, 0, 0, 0]);
    let zero = s.zero().expect("S6 has a zero");
    let q = build_quotient(&s, &ElemSet::full(s.len()))?;
    let mut expected = vec![vec![id13], vec![id1, id2, f, s.inv(f)], vec![zero]];
    for c in &mut expected {
        c.sort_unstable();
    }
    expected.sort();
    let mut got = q.classes.classes().to_vec();
    got.sort();
    r.case(got == expected, || format!("classes {got:?}"));
    let chain = (0..3).all(|a| (0..3).all(|b| q.class_leq(a, b) || q.class_leq(b, a)));
    r.case(chain, || "classes are not a chain".into());
    r.case(q.preorder.simeq(id1, id2), || "id_1 ≄ id_2".into());
    r.case(s.mul(id13, id1) == id1 && s.mul(id13, id2) == zero, || {
        "products with id_{1,3}".into()
    });
    r.case(!q.preorder.simeq(id1, zero), || "id_1 ≃ 0".into());
    r.case(!is_simeq_congruence(&s, &ElemSet::full(s.len()))?, || {
        "≃_S is a congruence".into()
    });
    Ok(r)
}

/// `T = ⟨id13, id24, f, g⟩`: J-classes are not a semilattice and `T⫽T` is
/// not inductive.
pub fn t_example() -> Result<CheckReport> {
    let mut r = CheckReport::new("T quotient by itself");
    let t = example_t();
    r.case(!green_relations(&t).j_poset_is_meet_semilattice(), || {
        "J-classes form a semilattice".into()
    });
    let q = build_quotient(&t, &ElemSet::full(t.len()))?;
    r.case(!q.is_inductive(), || "T⫽T is inductive".into());
    let e = esn_to(&q.groupoid);
    r.case(matches!(e, Err(crate::IsqError::NotInductive)), || {
        format!("esn_to gave {e:?}")
    });
    Ok(r)
}

/// `I_n⫽N` with `N` the non-permutations and the identity.
pub fn symmetric_example(n: usize) -> Result<CheckReport> {
    let mut r = CheckReport::new(format!("I_{n} by non-permutations with identity"));
    let s = symmetric_inverse_monoid(n)?;
    let normal = non_units_with_identity(&s).expect("I_n is a monoid");
    r.case(is_normal(&s, &normal), || "N is not normal".into());
    let q = build_quotient(&s, &normal)?;
    let fact: usize = (1..=n).product();
    r.case(q.num_classes() == fact + n, || {
        format!("{} classes", q.num_classes())
    });
    let one = s.identity().expect("monoid");
    let perms: Vec<usize> = s
        .elements()
        .filter(|&x| s.dom(x) == one && s.ran(x) == one)
        .collect();
    r.case(perms.len() == fact, || {
        "wrong number of permutations".into()
    });
    for &p in &perms {
        let c = q.class_of(p);
        r.case(q.classes.class(c) == [p], || {
            format!("permutation {p} is not alone in its class")
        });
        let maximal = (0..q.num_classes()).all(|d| !q.class_leq(c, d) || d == c);
        r.case(maximal, || format!("permutation {p} is not maximal"));
        for &p2 in &perms {
            let composite = q.groupoid.compose(c, q.class_of(p2));
            r.case(composite == Some(q.class_of(s.mul(p, p2))), || {
                format!("[{p}][{p2}] is not [{p}{p2}]")
            });
        }
    }
    let defect: Vec<usize> = q
        .groupoid
        .identities()
        .iter()
        .copied()
        .filter(|&c| c != q.class_of(one))
        .collect();
    r.case(defect.len() == n, || {
        format!("{} defect identities", defect.len())
    });
    let chain = defect.iter().all(|&a| {
        defect
            .iter()
            .all(|&b| q.class_leq(a, b) || q.class_leq(b, a))
    });
    r.case(chain, || "defect identities are not a chain".into());
    Ok(r)
}

/// `S = T × G` with `N = T × {1}`: coset classes are `G`, `S⫽N ≅ (T⫽T) × G`,
/// and `κ: S⫽N → S/≡_N` is injective exactly when `T` is simple.
pub fn product_example(
    tname: &str,
    t: &InverseSemigroup,
    g: &InverseSemigroup,
    t_simple: bool,
) -> Result<CheckReport> {
    let mut r = CheckReport::new(format!("{tname} × group by {tname} × {{1}}"));
    let order = g.len();
    let one = g.identity().expect("group");
    let s = direct_product_with_group(t, g)?;
    let n = ElemSet::from_ids(s.len(), t.elements().map(|x| product_id(x, one, order)));
    r.case(is_normal(&s, &n) && is_closed(&s, &n), || {
        "T × {1} is not closed normal".into()
    });

    let coset = coset_congruence(&s, &n)?;
    r.case(coset.num_classes() == order, || {
        format!("{} coset classes", coset.num_classes())
    });
    let by_group = s.elements().all(|x| {
        s.elements()
            .all(|y| coset.related(x, y) == (x % order == y % order))
    });
    r.case(by_group, || {
        "coset classes are not the group components".into()
    });

    let q = build_quotient(&s, &n)?;
    let qt = build_quotient(t, &ElemSet::full(t.len()))?;
    r.case(
        qt.num_classes() == green_relations(t).j.num_classes(),
        || "T⫽T is not T/J".into(),
    );
    let target = qt.groupoid.product(&esn_from(g));
    let image = |x: usize| qt.class_of(x / order) * order + x % order;
    let well_defined = q
        .classes
        .classes()
        .iter()
        .all(|c| c.iter().all(|&x| image(x) == image(c[0])));
    r.case(well_defined, || {
        "class map to (T⫽T) × G is not well defined".into()
    });
    if well_defined {
        let map = (0..q.num_classes()).map(|c| image(q.class_id(c))).collect();
        let iso = OgFunctor::new(&q.groupoid, &target, map)
            .map(|f| f.is_isomorphism(&q.groupoid, &target));
        r.case(iso == Ok(true), || format!("S⫽N ≇ (T⫽T) × G: {iso:?}"));
    }

    let (sq, natural) = coset.quotient_semigroup(&s);
    let st = esn_from(&sq);
    let map = (0..q.num_classes())
        .map(|c| natural[q.class_id(c)])
        .collect();
    match OgFunctor::new(&q.groupoid, &st, map) {
        Ok(kappa) => {
            r.case(kappa.is_surjective(&st), || "κ is not surjective".into());
            r.case(kappa.is_isomorphism(&q.groupoid, &st) == t_simple, || {
                format!("κ isomorphism should be {t_simple}")
            });
        }
        Err(e) => r.case(false, || format!("κ: {e}")),
    }
    Ok(r)
}

/// Gauge submonoid of the polycyclic monoid, with word length bound `l`.
pub fn gauge_properties(n: usize, l: usize) -> CheckReport {
    let mut r = CheckReport::new(format!("gauge monoid in P_{n} up to length {l}"));
    r.case(poly::gauge_is_normal(n, l), || "G_n is not normal".into());

    let cmp = poly::compare_gauge_leq(n, l);
    r.case(cmp.contradictions == 0 && cmp.conclusive > 0, || {
        format!("{cmp:?}")
    });

    let search = poly::GaugeWitnessSearch::new(n, l);
    let elems = poly::elements_up_to(n, l);
    let rows: Vec<_> = elems.iter().map(|x| search.row(x)).collect();
    for (i, x) in elems.iter().enumerate() {
        let Some((u, v)) = x.lengths() else { continue };
        for (j, y) in elems.iter().enumerate() {
            let Some((s, t)) = y.lengths() else { continue };
            use poly::SearchOutcome::*;
            let both = (rows[i].query(y), rows[j].query(x));
            let claim = u == s && v == t;
            match both {
                (Holds, Holds) => r.case(claim, || format!("{x} ≃ {y} found but lengths differ")),
                (Fails, _) | (_, Fails) => {
                    r.case(!claim, || format!("{x} ≄ {y} found but lengths agree"))
                }
                _ => {}
            }
        }
    }

    // class composition against the Brandt semigroup on {0..3}
    let k = 4;
    let b = brandt_semigroup(k).expect("Brandt");
    let zero = b.zero().expect("Brandt has a zero");
    for i in 0..k {
        for j in 0..k {
            for i2 in 0..k {
                for j2 in 0..k {
                    let c = poly::quotient_class_compose((i, j), (i2, j2));
                    let product = b.mul(brandt_id(i, j, k), brandt_id(i2, j2, k));
                    let expected = (product != zero).then(|| {
                        let m = product - 1;
                        (m / k, m % k)
                    });
                    r.case(c == expected, || format!("({i},{j})∘({i2},{j2}) = {c:?}"));
                    if n >= 2 {
                        r.case(
                            poly::class_compose_via_witness((i, j), (i2, j2)) == c,
                            || format!("witness composite ({i},{j})∘({i2},{j2})"),
                        );
                    }
                }
            }
        }
    }

    // the same-length relation is right cancellative; "equal or both
    // nonempty" is a left congruence that is not
    let coarse = |s: &[u8], t: &[u8]| s == t || (!s.is_empty() && !t.is_empty());
    r.case(
        !poly::relation_submonoid_is_normal(n, l.min(2), coarse),
        || "non-right-cancellative relation passes".into(),
    );
    r
}

/// Associativity of the polycyclic product on all pairs of words of length
/// at most `l`.
pub fn poly_associativity(n: usize, l: usize) -> CheckReport {
    use rayon::prelude::*;
    let mut r = CheckReport::new(format!("P_{n} associativity up to length {l}"));
    let elems = poly::elements_up_to(n, l);
    let bad: Vec<String> = elems
        .par_iter()
        .flat_map_iter(|x| {
            let elems = &elems;
            elems.iter().flat_map(move |y| {
                let xy = poly::mul(x, y);
                elems.iter().filter_map(move |z| {
                    let ok = poly::mul(&xy, z) == poly::mul(x, &poly::mul(y, z));
                    (!ok).then(|| format!("({x})({y})({z})"))
                })
            })
        })
        .collect();
    let total = elems.len().pow(3);
    r.cases = total;
    r.failures = bad.len();
    r.examples = bad.into_iter().take(KEPT_FAILURES).collect();
    for x in &elems {
        let inv_ok = x.inverse().inverse() == *x && poly::mul(&poly::mul(x, &x.inverse()), x) == *x;
        r.case(inv_ok, || format!("inverse laws fail at {x}"));
        let idem = poly::mul(x, x) == *x;
        let shape = match x {
            PolyElement::Zero => true,
            PolyElement::Pair(s, t) => s == t,
        };
        r.case(idem == x.is_idempotent() && idem == shape, || {
            format!("idempotent shape at {x}")
        });
    }
    r
}

/// Evaluations in `I_2`, the membership certificate for `baba⁻¹b⁻¹b⁻¹`, and
/// the Munn-tree laws on `count` seeded random words.
pub fn munn_properties(seed: u64, count: usize) -> Result<CheckReport> {
    let mut r = CheckReport::new("free inverse monoid");
    let i2 = symmetric_inverse_monoid(2)?;
    let zero = i2.zero().expect("I_2 has a zero");
    let tau = i2.elem(&[2, 1]);
    let eps = i2.elem(&[1, 0]);
    let id2 = i2.elem(&[0, 2]);
    let letter = |c: char| c as u8 - b'a';
    let word = |w: &str| munn::parse_word(w);

    let te: HashMap<u8, usize> = [(letter('t'), tau), (letter('e'), eps)].into();
    r.case(munn::evaluate(&word("Eete")?, &te, &i2)? == zero, || {
        "e⁻¹ete ↦ 0 fails".into()
    });
    let v = munn::evaluate(&word("te")?, &te, &i2)?;
    r.case(v == i2.elem(&[0, 1]), || format!("te ↦ {}", i2.label(v)));
    r.case(!i2.is_idempotent(v), || "te is idempotent".into());
    // composing right to left instead is evaluating the reversed word
    let v_op = munn::evaluate(&word("et")?, &te, &i2)?;
    r.case(v_op == i2.elem(&[2, 0]), || {
        format!("te ↦ {} right to left", i2.label(v_op))
    });

    let ab: HashMap<u8, usize> = [(letter('a'), eps), (letter('b'), id2)].into();
    r.case(munn::evaluate(&word("babAB")?, &ab, &i2)? == zero, || {
        "u ↦ 0 fails".into()
    });
    r.case(munn::evaluate(&word("b")?, &ab, &i2)? == id2, || {
        "v ↦ id_2 fails".into()
    });
    r.case(MunnTree::parse("babAB")? != MunnTree::parse("b")?, || {
        "u = v in FIM".into()
    });

    let pres = Presentation::parse("ab=ba")?;
    let x = MunnTree::parse("babABB")?;
    match munn::bounded_n_membership(&pres, &x, 4) {
        munn::Membership::Yes(cert) => {
            let product = cert.iter().fold(MunnTree::identity(), |acc, w| {
                acc.mul(&MunnTree::from_word(w))
            });
            r.case(product == x, || {
                "certificate does not multiply to the element".into()
            });
            // every assignment into I_2 satisfying ab = ba sends the certificate to idempotents
            for a in i2.elements() {
                for b in i2.elements() {
                    if i2.mul(a, b) != i2.mul(b, a) {
                        continue;
                    }
                    let asg: HashMap<u8, usize> = [(0, a), (1, b)].into();
                    for w in &cert {
                        let y = munn::evaluate(w, &asg, &i2)?;
                        r.case(i2.is_idempotent(y), || {
                            format!(
                                "atom {} ↦ non-idempotent under a={a}, b={b}",
                                munn::format_word(w)
                            )
                        });
                    }
                    let y = munn::evaluate(&x.to_word(), &asg, &i2)?;
                    r.case(i2.is_idempotent(y), || {
                        format!("element ↦ non-idempotent under a={a}, b={b}")
                    });
                }
            }
        }
        munn::Membership::Inconclusive => {
            r.case(false, || "no certificate for baba⁻¹b⁻¹b⁻¹".into())
        }
    }
    let free = Presentation::parse("")?;
    r.case(
        munn::bounded_n_membership(&free, &MunnTree::parse("a")?, 3)
            == munn::Membership::Inconclusive,
        || "a certified in the free presentation".into(),
    );

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let words: Vec<munn::Word> = (0..count)
        .map(|_| munn::random_word(&mut rng, 2, 6))
        .collect();
    let trees: Vec<MunnTree> = words.iter().map(|w| MunnTree::from_word(w)).collect();
    let assignments: Vec<HashMap<u8, usize>> = (0..count)
        .map(|i| [(0, (i * 7 + 3) % i2.len()), (1, (i * 5 + 1) % i2.len())].into())
        .collect();
    for i in 0..count {
        let (x, y, z) = (&trees[i], &trees[(i + 1) % count], &trees[(i + 2) % count]);
        r.case(x.mul(y).mul(z) == x.mul(&y.mul(z)), || {
            format!("associativity at {x}, {y}, {z}")
        });
        r.case(
            x.mul(&x.inv()).mul(x) == *x && x.inv().mul(x).mul(&x.inv()) == x.inv(),
            || format!("inverse law at {x}"),
        );
        r.case(x.inv().inv() == *x, || format!("double inverse at {x}"));
        let idem = x.mul(x) == *x;
        r.case(
            idem == x.is_idempotent() && idem == x.end().is_empty(),
            || format!("idempotent shape at {x}"),
        );
        r.case(MunnTree::from_word(&x.to_word()) == *x, || {
            format!("normal form round trip at {x}")
        });
        let e = x.mul(&x.inv());
        let f = y.inv().mul(y);
        r.case(e.mul(&f) == f.mul(&e), || {
            format!("idempotents {e}, {f} do not commute")
        });
        r.case(x.leq(y) == (x.mul(&x.inv()).mul(y) == *x), || {
            format!("order at {x}, {y}")
        });
        let mut joined = words[i].clone();
        joined.extend_from_slice(&words[(i + 1) % count]);
        r.case(MunnTree::from_word(&joined) == x.mul(y), || {
            format!("word concatenation at {x}, {y}")
        });
        let asg = &assignments[i];
        let ev = |w: &[u8]| munn::evaluate(w, asg, &i2);
        r.case(
            ev(&joined)? == i2.mul(ev(&words[i])?, ev(&words[(i + 1) % count])?),
            || "evaluation is not a homomorphism".into(),
        );
        r.case(ev(&x.to_word())? == ev(&words[i])?, || {
            format!("evaluation depends on the word for {x}")
        });
    }
    Ok(r)
}

/// Run a per-fixture suite over every small fixture.
pub fn over_fixtures(
    title: &str,
    suite: impl Fn(&str, &InverseSemigroup) -> Result<CheckReport> + Sync,
) -> CheckReport {
    use rayon::prelude::*;
    let reports: Vec<(String, Result<CheckReport>)> = small_fixtures()
        .into_par_iter()
        .map(|(name, s)| {
            let rep = suite(&name, &s);
            (name, rep)
        })
        .collect();
    let mut r = CheckReport::new(title);
    for (name, rep) in reports {
        r.absorb_result(rep, &name);
    }
    r
}
