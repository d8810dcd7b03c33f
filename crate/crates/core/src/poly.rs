//! The polycyclic monoid `P_n` and its gauge submonoid `G_n`, handled
//! symbolically.
//!
//! A nonzero element `(s, t)` acts on words by `ws ↦ wt`, so with
//! left-to-right composition
//! `(s,t)(u,v) = (s, pv)` if `t = pu`, `(ps, v)` if `u = pt`, and `0`
//! otherwise. Letters are `0..n`, printed as `a, b, c, ...`.

use std::collections::HashSet;
use std::fmt;

use rayon::prelude::*;
use smallvec::SmallVec;

use crate::error::{IsqError, Result};

pub type Word = SmallVec<[u8; 8]>;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PolyElement {
    Zero,
    Pair(Word, Word),
}

impl PolyElement {
    pub fn pair(s: &[u8], t: &[u8]) -> Self {
        PolyElement::Pair(Word::from_slice(s), Word::from_slice(t))
    }

    /// Parse `"0"` or `"(ab,ba)"`; the empty word is written as nothing or
    /// `ε`.
    pub fn parse(n: usize, text: &str) -> Result<Self> {
        let text = text.trim();
        if text == "0" {
            return Ok(PolyElement::Zero);
        }
        let inner = text
            .strip_prefix('(')
            .and_then(|r| r.strip_suffix(')'))
            .ok_or_else(|| IsqError::Parse(format!("expected (s,t), got {text:?}")))?;
        let (s, t) = inner
            .split_once(',')
            .ok_or_else(|| IsqError::Parse(format!("missing comma in {text:?}")))?;
        Ok(PolyElement::Pair(parse_word(n, s)?, parse_word(n, t)?))
    }

    pub fn inverse(&self) -> Self {
        match self {
            PolyElement::Zero => PolyElement::Zero,
            PolyElement::Pair(s, t) => PolyElement::Pair(t.clone(), s.clone()),
        }
    }

    pub fn is_idempotent(&self) -> bool {
        match self {
            PolyElement::Zero => true,
            PolyElement::Pair(s, t) => s == t,
        }
    }

    fn letters(&self) -> impl Iterator<Item = u8> + '_ {
        let (s, t): (&[u8], &[u8]) = match self {
            PolyElement::Zero => (&[], &[]),
            PolyElement::Pair(s, t) => (s, t),
        };
        s.iter().chain(t.iter()).copied()
    }

    /// Word lengths `(|s|, |t|)`; `None` for zero.
    pub fn lengths(&self) -> Option<(usize, usize)> {
        match self {
            PolyElement::Zero => None,
            PolyElement::Pair(s, t) => Some((s.len(), t.len())),
        }
    }
}

pub fn parse_word(n: usize, text: &str) -> Result<Word> {
    let text = text.trim();
    if text == "ε" {
        return Ok(Word::new());
    }
    text.bytes()
        .map(|c| match c {
            b'a'..=b'z' if ((c - b'a') as usize) < n => Ok(c - b'a'),
            _ => Err(IsqError::Parse(format!(
                "letter {:?} not in an alphabet of size {n}",
                c as char
            ))),
        })
        .collect()
}

fn write_word(f: &mut fmt::Formatter<'_>, w: &[u8]) -> fmt::Result {
    if w.is_empty() {
        return f.write_str("ε");
    }
    for &c in w {
        write!(f, "{}", (b'a' + c) as char)?;
    }
    Ok(())
}

impl fmt::Display for PolyElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PolyElement::Zero => f.write_str("0"),
            PolyElement::Pair(s, t) => {
                f.write_str("(")?;
                write_word(f, s)?;
                f.write_str(",")?;
                write_word(f, t)?;
                f.write_str(")")
            }
        }
    }
}

fn check_alphabet(n: usize, x: &PolyElement) -> Result<()> {
    match x.letters().find(|&c| c as usize >= n) {
        Some(c) => Err(IsqError::Input(format!(
            "letter {c} outside an alphabet of size {n}"
        ))),
        None => Ok(()),
    }
}

pub fn poly_mul(n: usize, x: &PolyElement, y: &PolyElement) -> Result<PolyElement> {
    check_alphabet(n, x)?;
    check_alphabet(n, y)?;
    Ok(mul(x, y))
}

/// Multiplication without the alphabet check.
pub fn mul(x: &PolyElement, y: &PolyElement) -> PolyElement {
    let (PolyElement::Pair(s, t), PolyElement::Pair(u, v)) = (x, y) else {
        return PolyElement::Zero;
    };
    if let Some(p) = t.strip_suffix(u.as_slice()) {
        let mut w = Word::from_slice(p);
        w.extend_from_slice(v);
        PolyElement::Pair(s.clone(), w)
    } else if let Some(p) = u.strip_suffix(t.as_slice()) {
        let mut w = Word::from_slice(p);
        w.extend_from_slice(s);
        PolyElement::Pair(w, v.clone())
    } else {
        PolyElement::Zero
    }
}

/// Natural partial order: `x ≤ y` iff `x = xx⁻¹y`.
pub fn natural_leq(x: &PolyElement, y: &PolyElement) -> bool {
    mul(&mul(x, &x.inverse()), y) == *x
}

/// Membership in `G_n`: zero or equal lengths.
pub fn gauge_membership(x: &PolyElement) -> bool {
    match x {
        PolyElement::Zero => true,
        PolyElement::Pair(s, t) => s.len() == t.len(),
    }
}

/// All words of length exactly `len` over `n` letters, in lexicographic
/// order.
pub fn words_of_length(n: usize, len: usize) -> Vec<Word> {
    let mut out = vec![Word::new()];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|w| {
                (0..n as u8).map(move |c| {
                    let mut w2 = w.clone();
                    w2.push(c);
                    w2
                })
            })
            .collect();
    }
    out
}

/// All words of length at most `max_len`, shortest first.
pub fn words_up_to(n: usize, max_len: usize) -> Vec<Word> {
    (0..=max_len).flat_map(|l| words_of_length(n, l)).collect()
}

/// Zero followed by every `(s, t)` with `|s|, |t| ≤ max_len`.
pub fn elements_up_to(n: usize, max_len: usize) -> Vec<PolyElement> {
    let words = words_up_to(n, max_len);
    let mut out = vec![PolyElement::Zero];
    for s in &words {
        for t in &words {
            out.push(PolyElement::Pair(s.clone(), t.clone()));
        }
    }
    out
}

/// Zero and every `(s, t)` with `|s| = |t| ≤ max_len`.
pub fn gauge_elements_up_to(n: usize, max_len: usize) -> Vec<PolyElement> {
    let mut out = vec![PolyElement::Zero];
    for l in 0..=max_len {
        let words = words_of_length(n, l);
        for s in &words {
            for t in &words {
                out.push(PolyElement::Pair(s.clone(), t.clone()));
            }
        }
    }
    out
}

/// Normality scan for the submonoid `{(s,t) : s Q t} ∪ {0}` of `P_n`: full,
/// closed under products and inverses, and closed under conjugation
/// `c⁻¹mc`, for all members and conjugators with words of length ≤ `max_len`.
pub fn relation_submonoid_is_normal<F>(n: usize, max_len: usize, related: F) -> bool
where
    F: Fn(&[u8], &[u8]) -> bool + Sync,
{
    let member = |x: &PolyElement| match x {
        PolyElement::Zero => true,
        PolyElement::Pair(s, t) => related(s, t),
    };
    let all = elements_up_to(n, max_len);
    let members: Vec<&PolyElement> = all.iter().filter(|x| member(x)).collect();
    let full = all.iter().filter(|x| x.is_idempotent()).all(member);
    full && members.par_iter().all(|m| {
        member(&m.inverse())
            && members.iter().all(|m2| member(&mul(m, m2)))
            && all.iter().all(|c| member(&mul(&mul(&c.inverse(), m), c)))
    })
}

/// `G_n` is normal in `P_n`, checked on all words of length ≤ `max_len`.
pub fn gauge_is_normal(n: usize, max_len: usize) -> bool {
    relation_submonoid_is_normal(n, max_len, |s, t| s.len() == t.len())
}

/// Closed form of `x ≤_{G_n} y`: for `x = (u,v)`, `y = (s,t)`,
/// `|u| - |s| = |v| - |t| ≥ 0`. Zero lies below everything and nothing
/// nonzero lies below zero.
pub fn gauge_leq(x: &PolyElement, y: &PolyElement) -> bool {
    match (x.lengths(), y.lengths()) {
        (None, _) => true,
        (Some(_), None) => false,
        (Some((u, v)), Some((s, t))) => u >= s && v >= t && u - s == v - t,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SearchOutcome {
    Holds,
    Fails,
    Inconclusive,
}

/// Witness search for `≤_{G_n}` with witnesses in `G_n` of word length at
/// most `max_len`.
///
/// For `x` the admissible `a` have `a⁻¹a = xx⁻¹` and the admissible `b` have
/// `bb⁻¹ = x⁻¹x`; the up-set of every product `axb` is collected once, so a
/// query for `y` is a set lookup.
#[derive(Debug, Clone)]
pub struct GaugeWitnessSearch {
    n: usize,
    max_len: usize,
    /// Gauge members of length ≤ `max_len`, grouped by range idempotent.
    by_ran: std::collections::HashMap<PolyElement, Vec<PolyElement>>,
    by_dom: std::collections::HashMap<PolyElement, Vec<PolyElement>>,
}

/// The witness up-set of one `x`, plus whether the witness pool was
/// complete.
#[derive(Debug, Clone)]
pub struct WitnessRow {
    above: HashSet<PolyElement>,
    complete: bool,
}

impl WitnessRow {
    pub fn query(&self, y: &PolyElement) -> SearchOutcome {
        if self.above.contains(y) {
            SearchOutcome::Holds
        } else if self.complete {
            SearchOutcome::Fails
        } else {
            SearchOutcome::Inconclusive
        }
    }
}

/// Every `(s, t)` with `(h, k) ≤ (s, t)`: strip a common prefix.
fn up_set(x: &PolyElement, out: &mut HashSet<PolyElement>) {
    match x {
        PolyElement::Zero => {}
        PolyElement::Pair(h, k) => {
            let mut i = 0;
            loop {
                out.insert(PolyElement::pair(&h[i..], &k[i..]));
                if i == h.len() || i == k.len() || h[i] != k[i] {
                    break;
                }
                i += 1;
            }
        }
    }
}

impl GaugeWitnessSearch {
    pub fn new(n: usize, max_len: usize) -> Self {
        let mut by_ran: std::collections::HashMap<PolyElement, Vec<PolyElement>> =
            Default::default();
        let mut by_dom: std::collections::HashMap<PolyElement, Vec<PolyElement>> =
            Default::default();
        for a in gauge_elements_up_to(n, max_len) {
            let inv = a.inverse();
            by_ran.entry(mul(&inv, &a)).or_default().push(a.clone());
            by_dom.entry(mul(&a, &inv)).or_default().push(a);
        }
        Self {
            n,
            max_len,
            by_ran,
            by_dom,
        }
    }

    pub fn alphabet(&self) -> usize {
        self.n
    }

    /// The pool is complete for `x` when every admissible witness in all of
    /// `G_n` is within the length bound: witnesses for `(u, v)` have words
    /// of lengths `|u|` and `|v|`.
    pub fn row(&self, x: &PolyElement) -> WitnessRow {
        let mut above = HashSet::new();
        let (complete, zero) = match x.lengths() {
            None => (true, true),
            Some((u, v)) => (u <= self.max_len && v <= self.max_len, false),
        };
        if zero {
            return WitnessRow {
                above,
                complete: false,
            };
        }
        let (dom, ran) = (mul(x, &x.inverse()), mul(&x.inverse(), x));
        let empty = Vec::new();
        for a in self.by_ran.get(&dom).unwrap_or(&empty) {
            let ax = mul(a, x);
            for b in self.by_dom.get(&ran).unwrap_or(&empty) {
                up_set(&mul(&ax, b), &mut above);
            }
        }
        WitnessRow { above, complete }
    }

    pub fn leq(&self, x: &PolyElement, y: &PolyElement) -> SearchOutcome {
        if *x == PolyElement::Zero {
            // a0b = 0 ≤ y for the witnesses a = b = 0
            return SearchOutcome::Holds;
        }
        self.row(x).query(y)
    }
}

/// Agreement statistics between [`gauge_leq`] and the witness search.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct GaugeComparison {
    pub pairs: usize,
    pub conclusive: usize,
    pub contradictions: usize,
}

/// Compare the closed form with the witness search on all pairs of elements
/// with words of length ≤ `max_len`.
pub fn compare_gauge_leq(n: usize, max_len: usize) -> GaugeComparison {
    let search = GaugeWitnessSearch::new(n, max_len);
    let all = elements_up_to(n, max_len);
    all.par_iter()
        .map(|x| {
            let row = (*x != PolyElement::Zero).then(|| search.row(x));
            let mut c = GaugeComparison::default();
            for y in &all {
                c.pairs += 1;
                let outcome = match &row {
                    None => SearchOutcome::Holds,
                    Some(r) => r.query(y),
                };
                let expected = gauge_leq(x, y);
                match outcome {
                    SearchOutcome::Inconclusive => {}
                    SearchOutcome::Holds | SearchOutcome::Fails => {
                        c.conclusive += 1;
                        if (outcome == SearchOutcome::Holds) != expected {
                            c.contradictions += 1;
                        }
                    }
                }
            }
            c
        })
        .reduce(GaugeComparison::default, |a, b| GaugeComparison {
            pairs: a.pairs + b.pairs,
            conclusive: a.conclusive + b.conclusive,
            contradictions: a.contradictions + b.contradictions,
        })
}

/// `[(u,v)] [(s,t)] = [(u,t)]` on classes indexed by word lengths; defined
/// iff `|v| = |s|`.
pub fn quotient_class_compose(x: (usize, usize), y: (usize, usize)) -> Option<(usize, usize)> {
    (x.1 == y.0).then_some((x.0, y.1))
}

/// The same composite computed from the quotient's definition: take
/// representatives `x = (a^i, a^j)`, `y = (b^j, b^l)` and the witness
/// `(a^j, b^j) ∈ G_n`, and read off the lengths of `x·w·y`. Needs `n ≥ 2`.
pub fn class_compose_via_witness(x: (usize, usize), y: (usize, usize)) -> Option<(usize, usize)> {
    if x.1 != y.0 {
        return None;
    }
    let a = |k: usize| vec![0u8; k];
    let b = |k: usize| vec![1u8; k];
    let rep_x = PolyElement::pair(&a(x.0), &a(x.1));
    let rep_y = PolyElement::pair(&b(y.0), &b(y.1));
    let witness = PolyElement::pair(&a(x.1), &b(y.0));
    debug_assert!(gauge_membership(&witness));
    mul(&mul(&rep_x, &witness), &rep_y).lengths()
}
