//! Fixture constructors: symmetric inverse monoids, the two subsemigroups of
//! `I_4` used as running examples, direct products with groups, Brandt
//! semigroups, cyclic groups and chains.

use crate::error::{IsqError, Result};
use crate::pbij::{all_partial_bijections, PartialBijection};
use crate::semigroup::{InverseSemigroup, RawTable};

pub const MAX_SYMMETRIC_DEGREE: usize = 5;

/// The symmetric inverse monoid `I_n`, `1 ≤ n ≤ 5`.
pub fn symmetric_inverse_monoid(n: usize) -> Result<InverseSemigroup> {
    if !(1..=MAX_SYMMETRIC_DEGREE).contains(&n) {
        return Err(IsqError::Input(format!(
            "degree {n} outside 1..={MAX_SYMMETRIC_DEGREE}"
        )));
    }
    InverseSemigroup::from_partial_bijections(all_partial_bijections(n))
}

fn pbij(images: &[u8]) -> PartialBijection {
    PartialBijection::new(images.to_vec()).expect("fixture map")
}

/// `{id_{1,3}, id_{1}, id_{2}, f, f⁻¹, 0}` in `I_4` with `f: 1 -> 2`.
///
/// Ids: 0 = `0`, 1 = `f⁻¹`, 2 = `id_{2}`, 3 = `id_{1}`, 4 = `id_{1,3}`, 5 = `f`.
pub fn example_s6() -> InverseSemigroup {
    let maps = [
        [1, 0, 3, 0],
        [1, 0, 0, 0],
        [0, 2, 0, 0],
        [2, 0, 0, 0],
        [0, 1, 0, 0],
        [0, 0, 0, 0],
    ];
    InverseSemigroup::from_partial_bijections(maps.iter().map(|m| pbij(m)).collect())
        .expect("S6 is closed")
}

/// The inverse subsemigroup of `I_4` generated by `id_{1,3}`, `id_{2,4}`,
/// `f: 1 -> 2` and `g: 3 -> 4`.
pub fn example_t() -> InverseSemigroup {
    let i4 = symmetric_inverse_monoid(4).expect("I_4");
    let gens: Vec<usize> = [[1, 0, 3, 0], [0, 2, 0, 4], [2, 0, 0, 0], [0, 0, 4, 0]]
        .iter()
        .map(|m| i4.elem(m))
        .collect();
    let set = i4
        .generated_subsemigroup(&gens)
        .expect("nonempty generators");
    i4.restrict_to(&set).expect("generated set is closed").0
}

/// Cyclic group `Z_n` with element `k` standing for `k mod n`.
pub fn cyclic_group(n: usize) -> Result<InverseSemigroup> {
    if n == 0 {
        return Err(IsqError::Input("cyclic group of order 0".into()));
    }
    let mul = (0..n)
        .map(|a| (0..n).map(|b| (a + b) % n).collect())
        .collect();
    let inv = (0..n).map(|a| (n - a) % n).collect();
    Ok(InverseSemigroup::from_table_unchecked(RawTable {
        mul,
        inv,
    }))
}

/// The chain semilattice `0 < 1 < ... < n-1` under `min`.
pub fn chain_semilattice(n: usize) -> Result<InverseSemigroup> {
    if n == 0 {
        return Err(IsqError::Input("empty semilattice".into()));
    }
    let mul = (0..n).map(|a| (0..n).map(|b| a.min(b)).collect()).collect();
    Ok(InverseSemigroup::from_table_unchecked(RawTable {
        mul,
        inv: (0..n).collect(),
    }))
}

/// `T × G` with componentwise product. Element `(t, g)` has id
/// `t * |G| + g`. Fails if `g` is not a group.
pub fn direct_product_with_group(
    t: &InverseSemigroup,
    g: &InverseSemigroup,
) -> Result<InverseSemigroup> {
    if !g.is_group() {
        return Err(IsqError::NotGroup);
    }
    let (nt, ng) = (t.len(), g.len());
    crate::limits::ensure_within(nt * ng)?;
    let id = |a: usize, b: usize| a * ng + b;
    let mut mul = Vec::with_capacity(nt * ng);
    let mut inv = Vec::with_capacity(nt * ng);
    for a in 0..nt {
        for b in 0..ng {
            let row = (0..nt)
                .flat_map(|c| (0..ng).map(move |d| (c, d)))
                .map(|(c, d)| id(t.mul(a, c), g.mul(b, d)));
            mul.push(row.collect());
            inv.push(id(t.inv(a), g.inv(b)));
        }
    }
    Ok(InverseSemigroup::from_table_unchecked(RawTable {
        mul,
        inv,
    }))
}

/// Id of `(t, g)` in [`direct_product_with_group`].
pub fn product_id(t: usize, g: usize, group_order: usize) -> usize {
    t * group_order + g
}

/// The combinatorial Brandt semigroup on `{0..k-1}`: the pairs `(i, j)` and
/// `0`, with `(i,j)(k,l) = (i,l)` if `j = k` and `0` otherwise. Id 0 is the
/// zero and `(i, j)` has id `1 + i*k + j`.
pub fn brandt_semigroup(k: usize) -> Result<InverseSemigroup> {
    let trivial = cyclic_group(1)?;
    brandt_semigroup_over(k, &trivial)
}

/// Brandt semigroup over a group `g`: triples `(i, x, j)` and `0`, with
/// `(i,x,j)(k,y,l) = (i,xy,l)` if `j = k`. `(i, x, j)` has id
/// `1 + (i*k + j)*|G| + x`.
pub fn brandt_semigroup_over(k: usize, g: &InverseSemigroup) -> Result<InverseSemigroup> {
    if k == 0 {
        return Err(IsqError::Input(
            "Brandt semigroup needs a nonempty index set".into(),
        ));
    }
    if !g.is_group() {
        return Err(IsqError::NotGroup);
    }
    let ng = g.len();
    let n = 1 + k * k * ng;
    crate::limits::ensure_within(n)?;
    let id = |i: usize, x: usize, j: usize| 1 + (i * k + j) * ng + x;
    let decode = |e: usize| {
        let r = e - 1;
        let x = r % ng;
        let ij = r / ng;
        (ij / k, x, ij % k)
    };
    let mut mul = vec![vec![0; n]; n];
    let mut inv = vec![0; n];
    for a in 1..n {
        let (i, x, j) = decode(a);
        inv[a] = id(j, g.inv(x), i);
        for (b, cell) in mul[a].iter_mut().enumerate().skip(1) {
            let (k2, y, l) = decode(b);
            if j == k2 {
                *cell = id(i, g.mul(x, y), l);
            }
        }
    }
    Ok(InverseSemigroup::from_table_unchecked(RawTable {
        mul,
        inv,
    }))
}

/// Id of `(i, j)` in [`brandt_semigroup`] on `{0..k-1}`.
pub fn brandt_id(i: usize, j: usize, k: usize) -> usize {
    1 + i * k + j
}

/// The semilattice of idempotents of `s` as a semigroup, with embedding.
pub fn semilattice_of(s: &InverseSemigroup) -> (InverseSemigroup, Vec<usize>) {
    s.restrict_to(&s.idempotent_set())
        .expect("E(S) is an inverse subsemigroup")
}

/// Named small fixtures with their display names, all of size at most 50.
pub fn small_fixtures() -> Vec<(String, InverseSemigroup)> {
    let i2 = symmetric_inverse_monoid(2).expect("I_2");
    let z2 = cyclic_group(2).expect("Z_2");
    let mut out = vec![
        ("I_1".to_string(), symmetric_inverse_monoid(1).expect("I_1")),
        ("I_2".to_string(), i2.clone()),
        ("I_3".to_string(), symmetric_inverse_monoid(3).expect("I_3")),
        ("S6".to_string(), example_s6()),
        ("T".to_string(), example_t()),
        ("Z_2".to_string(), z2.clone()),
        ("Z_3".to_string(), cyclic_group(3).expect("Z_3")),
        ("chain_3".to_string(), chain_semilattice(3).expect("chain")),
        (
            "E(I_3)".to_string(),
            semilattice_of(&symmetric_inverse_monoid(3).expect("I_3")).0,
        ),
        ("B_2".to_string(), brandt_semigroup(2).expect("B_2")),
        ("B_3".to_string(), brandt_semigroup(3).expect("B_3")),
        (
            "B_2(Z_2)".to_string(),
            brandt_semigroup_over(2, &z2).expect("B_2(Z_2)"),
        ),
        (
            "I_2xZ_2".to_string(),
            direct_product_with_group(&i2, &z2).expect("I_2 x Z_2"),
        ),
    ];
    out.retain(|(_, s)| s.len() <= 50);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::semigroup::check_inverse_semigroup;

    fn binom(n: usize, k: usize) -> usize {
        (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
    }

    fn factorial(n: usize) -> usize {
        (1..=n).product()
    }

    #[test]
    fn symmetric_sizes_match_count_formula() {
        for n in 1..=4 {
            let expected: usize = (0..=n)
                .map(|k| binom(n, k) * binom(n, k) * factorial(k))
                .sum();
            assert_eq!(symmetric_inverse_monoid(n).unwrap().len(), expected);
        }
        assert!(symmetric_inverse_monoid(0).is_err());
        assert!(symmetric_inverse_monoid(6).is_err());
    }

    #[test]
    fn running_examples() {
        let s6 = example_s6();
        assert_eq!(s6.len(), 6);
        assert_eq!(s6.elem(&[2, 0, 0, 0]), 5);
        assert_eq!(s6.elem(&[1, 0, 3, 0]), 4);
        let t = example_t();
        // id13, id24, f, f⁻¹, g, g⁻¹, id1..id4, 0
        assert_eq!(t.len(), 11);
        assert_eq!(t.idempotents().len(), 7);
    }

    #[test]
    fn products_and_brandt() {
        let i2 = symmetric_inverse_monoid(2).unwrap();
        let z2 = cyclic_group(2).unwrap();
        let p = direct_product_with_group(&i2, &z2).unwrap();
        assert_eq!(p.len(), 14);
        let e: Vec<usize> = i2
            .idempotents()
            .iter()
            .map(|&e| product_id(e, 0, 2))
            .collect();
        assert_eq!(p.idempotents(), e.as_slice());
        assert_eq!(direct_product_with_group(&z2, &i2), Err(IsqError::NotGroup));

        let b = brandt_semigroup(2).unwrap();
        assert_eq!(b.len(), 5);
        let mut diag = vec![0, brandt_id(0, 0, 2), brandt_id(1, 1, 2)];
        diag.sort();
        assert_eq!(b.idempotents(), diag.as_slice());
        assert_eq!(
            b.mul(brandt_id(0, 1, 2), brandt_id(1, 0, 2)),
            brandt_id(0, 0, 2)
        );
        assert_eq!(b.mul(brandt_id(0, 1, 2), brandt_id(0, 1, 2)), 0);
    }

    #[test]
    fn every_builder_output_is_an_inverse_semigroup() {
        for (name, s) in small_fixtures() {
            let report = check_inverse_semigroup(&s.raw_table());
            assert!(report.is_empty(), "{name}: {:?}", report.violations);
        }
        assert!(
            check_inverse_semigroup(&symmetric_inverse_monoid(4).unwrap().raw_table()).is_empty()
        );
    }
}
