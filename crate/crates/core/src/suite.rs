//! Every worked example and property suite, in a fixed order.

use rayon::prelude::*;
use serde::Serialize;

use crate::builders::{cyclic_group, symmetric_inverse_monoid};
use crate::checks::{self, CheckReport};
use crate::error::Result;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SuiteOptions {
    pub seed: u64,
    /// Word length bound for the polycyclic searches.
    pub maxlen: usize,
    /// Random words for the Munn-tree laws.
    pub munn_words: usize,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        Self {
            seed: 2024,
            maxlen: 4,
            munn_words: 1000,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct SuiteReport {
    pub passed: bool,
    pub items: Vec<CheckReport>,
}

fn flatten(name: &str, r: Result<CheckReport>) -> CheckReport {
    r.unwrap_or_else(|e| {
        let mut rep = CheckReport::new(name);
        rep.case(false, || e.to_string());
        rep
    })
}

type Item = Box<dyn Fn() -> CheckReport + Sync + Send>;

fn items(opts: SuiteOptions) -> Vec<Item> {
    vec![
        Box::new(|| flatten("S6 quotient by itself", checks::s6_example())),
        Box::new(|| flatten("T quotient by itself", checks::t_example())),
        Box::new(|| flatten("I_2 by non-permutations", checks::symmetric_example(2))),
        Box::new(|| flatten("I_3 by non-permutations", checks::symmetric_example(3))),
        Box::new(move || checks::gauge_properties(2, opts.maxlen)),
        Box::new(|| checks::poly_associativity(2, 3)),
        Box::new(|| checks::over_fixtures("congruence theory", checks::congruence_properties)),
        Box::new(|| flatten("factorization", checks::factorization_properties())),
        Box::new(|| {
            let run = || -> Result<CheckReport> {
                let i2 = symmetric_inverse_monoid(2)?;
                checks::product_example("I_2", &i2, &cyclic_group(2)?, false)
            };
            flatten("I_2 × Z_2", run())
        }),
        Box::new(|| {
            let run = || -> Result<CheckReport> {
                checks::product_example("Z_3", &cyclic_group(3)?, &cyclic_group(2)?, true)
            };
            flatten("Z_3 × Z_2", run())
        }),
        Box::new(move || {
            flatten(
                "free inverse monoid",
                checks::munn_properties(opts.seed, opts.munn_words),
            )
        }),
        Box::new(|| checks::over_fixtures("preorder ≤_N", checks::preorder_properties)),
        Box::new(|| checks::over_fixtures("equivalence ≃_N", checks::equivalence_properties)),
        Box::new(|| checks::over_fixtures("quotient groupoids", checks::quotient_properties)),
        Box::new(|| {
            flatten(
                "domain-inclusion preorder",
                checks::domain_preorder_remark(),
            )
        }),
    ]
}

/// Run everything; items run in parallel but are reported in order.
pub fn paper_suite(opts: SuiteOptions) -> SuiteReport {
    let items: Vec<CheckReport> = items(opts).par_iter().map(|f| f()).collect();
    SuiteReport {
        passed: items.iter().all(CheckReport::passed),
        items,
    }
}
