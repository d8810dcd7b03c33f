//! Acceptance run: one line per criterion, nonzero exit if any fails.

use std::collections::HashMap;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use isq::builders::{
    cyclic_group, example_s6, example_t, small_fixtures, symmetric_inverse_monoid,
};
use isq::checks::{self, CheckReport};
use isq::congruence::is_simeq_congruence;
use isq::green::green_relations;
use isq::munn::{self, MunnTree, Presentation};
use isq::normal::non_units_with_identity;
use isq::ogroupoid::esn_to;
use isq::poly;
use isq::quotient::build_quotient;
use isq::{ElemSet, IsqError};

struct Criterion {
    id: u32,
    title: &'static str,
    budget: Duration,
    run: fn() -> Result<CheckReport, IsqError>,
}

fn c1() -> Result<CheckReport, IsqError> {
    let mut r = checks::s6_example()?;
    let s = example_s6();
    let full = ElemSet::full(s.len());
    let q = build_quotient(&s, &full)?;
    r.case(q.num_classes() == 3, || {
        format!("{} classes", q.num_classes())
    });
    let id1 = s.elem(&[1, 0, 0, 0]);
    let id2 = s.elem(&[0, 2, 0, 0]);
    let id13 = s.elem(&[1, 0, 3, 0]);
    let zero = s.zero().expect("zero");
    r.case(q.class_of(id1) == q.class_of(id2), || {
        "id_1 and id_2 in different classes".into()
    });
    r.case(
        q.class_of(s.mul(id13, id1)) != q.class_of(s.mul(id13, id2)),
        || "products are related".into(),
    );
    r.case(s.mul(id13, id2) == zero, || "id_{1,3} id_2 is not 0".into());
    r.case(!is_simeq_congruence(&s, &full)?, || {
        "≃_S is a congruence".into()
    });
    Ok(r)
}

fn c2() -> Result<CheckReport, IsqError> {
    let mut r = checks::t_example()?;
    let t = example_t();
    r.case(t.len() == 11, || format!("|T| = {}", t.len()));
    r.case(!green_relations(&t).j_poset_is_meet_semilattice(), || {
        "J poset is a semilattice".into()
    });
    let q = build_quotient(&t, &ElemSet::full(t.len()))?;
    let err = esn_to(&q.groupoid)
        .err()
        .map(|e| e.to_string())
        .unwrap_or_default();
    r.case(err.contains("not inductive"), || {
        format!("esn_to error {err:?}")
    });
    Ok(r)
}

fn c3() -> Result<CheckReport, IsqError> {
    let mut r = CheckReport::new("I_n by S_n");
    for n in [2usize, 3] {
        r.absorb(checks::symmetric_example(n)?);
        let s = symmetric_inverse_monoid(n)?;
        let q = build_quotient(&s, &non_units_with_identity(&s).expect("monoid"))?;
        let fact: usize = (1..=n).product();
        r.case(q.num_classes() == fact + n, || {
            format!("n={n}: {} classes", q.num_classes())
        });
        r.case(q.groupoid.identities().len() == n + 1, || {
            format!("n={n}: {} identities", q.groupoid.identities().len())
        });
    }
    Ok(r)
}

fn c4() -> Result<CheckReport, IsqError> {
    let mut r = checks::gauge_properties(2, 4);
    r.case(poly::gauge_is_normal(2, 4), || {
        "G_2 not normal at L=4".into()
    });
    let cmp = poly::compare_gauge_leq(2, 4);
    r.case(cmp.contradictions == 0 && cmp.conclusive > 0, || {
        format!("{cmp:?}")
    });
    r.case(
        poly::quotient_class_compose((2, 1), (1, 3)) == Some((2, 3)),
        || "(2,1)∘(1,3)".into(),
    );
    r.case(
        poly::quotient_class_compose((1, 2), (1, 2)).is_none(),
        || "(1,2)∘(1,2) defined".into(),
    );
    Ok(r)
}

fn c5() -> Result<CheckReport, IsqError> {
    let r = checks::over_fixtures("congruence theory", checks::congruence_properties);
    Ok(r)
}

fn c6() -> Result<CheckReport, IsqError> {
    checks::factorization_properties()
}

fn c7() -> Result<CheckReport, IsqError> {
    let i2 = symmetric_inverse_monoid(2)?;
    let z2 = cyclic_group(2)?;
    let mut r = checks::product_example("I_2", &i2, &z2, false)?;
    r.absorb(checks::product_example(
        "Z_3",
        &cyclic_group(3)?,
        &z2,
        true,
    )?);
    Ok(r)
}

fn c8() -> Result<CheckReport, IsqError> {
    let mut r = checks::munn_properties(2024, 1000)?;
    let i2 = symmetric_inverse_monoid(2)?;
    let asg: HashMap<u8, usize> = [(0, i2.elem(&[1, 0])), (1, i2.elem(&[0, 2]))].into();
    let u = munn::evaluate(&munn::parse_word("babAB")?, &asg, &i2)?;
    r.case(Some(u) == i2.zero(), || format!("u ↦ {}", i2.label(u)));
    let cert = munn::bounded_n_membership(
        &Presentation::parse("ab=ba")?,
        &MunnTree::parse("babABB")?,
        4,
    );
    r.case(matches!(cert, munn::Membership::Yes(_)), || {
        "no certificate at L=4".into()
    });
    Ok(r)
}

fn c9() -> Result<CheckReport, IsqError> {
    let mut r = CheckReport::new("preorder, equivalence and quotient suites");
    r.case(small_fixtures().len() >= 10, || "too few fixtures".into());
    r.absorb(checks::over_fixtures(
        "preorder",
        checks::preorder_properties,
    ));
    r.absorb(checks::over_fixtures(
        "equivalence",
        checks::equivalence_properties,
    ));
    r.absorb(checks::over_fixtures(
        "quotients",
        checks::quotient_properties,
    ));
    r.absorb(checks::domain_preorder_remark()?);
    Ok(r)
}

fn main() -> ExitCode {
    let criteria = [
        Criterion {
            id: 1,
            title: "S6 quotient classes and non-congruence",
            budget: Duration::from_secs(1),
            run: c1,
        },
        Criterion {
            id: 2,
            title: "T: J-classes not a semilattice, T⫽T not inductive",
            budget: Duration::from_secs(1),
            run: c2,
        },
        Criterion {
            id: 3,
            title: "I_n⫽S_n for n = 2, 3",
            budget: Duration::from_secs(5),
            run: c3,
        },
        Criterion {
            id: 4,
            title: "gauge monoid in P_2 at L = 4",
            budget: Duration::from_secs(30),
            run: c4,
        },
        Criterion {
            id: 5,
            title: "congruence theory over fixtures",
            budget: Duration::from_secs(60),
            run: c5,
        },
        Criterion {
            id: 6,
            title: "factorization and uniqueness",
            budget: Duration::from_secs(30),
            run: c6,
        },
        Criterion {
            id: 7,
            title: "I_2 × Z_2 by I_2 × {1}",
            budget: Duration::from_secs(5),
            run: c7,
        },
        Criterion {
            id: 8,
            title: "free inverse monoid examples and laws",
            budget: Duration::from_secs(30),
            run: c8,
        },
        Criterion {
            id: 9,
            title: "≤_N, ≃_N and quotient property suites",
            budget: Duration::from_secs(120),
            run: c9,
        },
    ];
    let mut all = true;
    for c in criteria {
        let start = Instant::now();
        let result = (c.run)();
        let elapsed = start.elapsed();
        let (ok, detail) = match &result {
            Ok(r) => (
                r.passed(),
                format!("{} cases, {} failures", r.cases, r.failures),
            ),
            Err(e) => (false, format!("error: {e}")),
        };
        let in_time = elapsed <= c.budget;
        let pass = ok && in_time;
        all &= pass;
        println!(
            "criterion {}: {} [{:.2}s / {}s] {} ({detail}{})",
            c.id,
            if pass { "PASS" } else { "FAIL" },
            elapsed.as_secs_f64(),
            c.budget.as_secs(),
            c.title,
            if in_time { "" } else { ", over time budget" },
        );
        if let Ok(r) = &result {
            for e in &r.examples {
                println!("    {e}");
            }
        }
    }
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
