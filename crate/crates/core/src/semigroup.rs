//! Finite inverse semigroups given by a multiplication table.
//!
//! Elements are ids `0..|S|`. For the partial-bijection backend the ids index
//! the maps in lexicographic order of their image arrays, so the empty map is
//! always element 0; for table input the ids are the input order.

use std::collections::HashMap;
use std::fmt;

use crate::elemset::ElemSet;
use crate::error::{IsqError, Result};
use crate::pbij::PartialBijection;

/// How the elements of a semigroup are realized.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Backend {
    PartialBijections {
        degree: usize,
        maps: Vec<PartialBijection>,
    },
    Table,
}

#[derive(Clone, PartialEq, Eq)]
pub struct InverseSemigroup {
    size: usize,
    mul: Vec<u32>,
    inv: Vec<u32>,
    idempotents: Vec<usize>,
    is_idempotent: Vec<bool>,
    backend: Backend,
}

impl fmt::Debug for InverseSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("InverseSemigroup")
            .field("size", &self.size)
            .field("idempotents", &self.idempotents)
            .field("backend", &self.backend_name())
            .finish()
    }
}

/// A raw, unvalidated Cayley table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RawTable {
    pub mul: Vec<Vec<usize>>,
    pub inv: Vec<usize>,
}

/// One way a raw table fails to be an inverse semigroup.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TableViolation {
    Shape(String),
    OutOfRange {
        row: usize,
        col: usize,
        value: usize,
    },
    NotAssociative {
        a: usize,
        b: usize,
        c: usize,
    },
    InverseLaw {
        element: usize,
    },
    InverseNotUnique {
        element: usize,
        other: usize,
    },
    IdempotentsDoNotCommute {
        e: usize,
        f: usize,
    },
}

impl fmt::Display for TableViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TableViolation::Shape(s) => write!(f, "shape: {s}"),
            TableViolation::OutOfRange { row, col, value } => {
                write!(f, "entry ({row},{col}) = {value} out of range")
            }
            TableViolation::NotAssociative { a, b, c } => write!(f, "({a}{b}){c} != {a}({b}{c})"),
            TableViolation::InverseLaw { element } => {
                write!(
                    f,
                    "inverse law fails at {element}: s s' s = s, s' s s' = s' not both true"
                )
            }
            TableViolation::InverseNotUnique { element, other } => {
                write!(f, "{other} is a second inverse of {element}")
            }
            TableViolation::IdempotentsDoNotCommute { e, f: g } => {
                write!(f, "idempotents {e} and {g} do not commute")
            }
        }
    }
}

/// Result of [`check_inverse_semigroup`]. Empty iff the table is a valid
/// inverse semigroup.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct TableReport {
    pub violations: Vec<TableViolation>,
    /// Total violations found; `violations` keeps at most [`MAX_LISTED`].
    pub total: usize,
}

pub const MAX_LISTED: usize = 64;

impl TableReport {
    pub fn is_empty(&self) -> bool {
        self.total == 0
    }

    fn push(&mut self, v: TableViolation) {
        self.total += 1;
        if self.violations.len() < MAX_LISTED {
            self.violations.push(v);
        }
    }
}

/// Check associativity, the inverse laws, uniqueness of inverses and
/// commutation of idempotents.
pub fn check_inverse_semigroup(raw: &RawTable) -> TableReport {
    let mut report = TableReport::default();
    let n = raw.mul.len();
    if n == 0 {
        report.push(TableViolation::Shape("empty table".into()));
        return report;
    }
    if raw.inv.len() != n {
        report.push(TableViolation::Shape(format!(
            "inv has {} entries, expected {n}",
            raw.inv.len()
        )));
        return report;
    }
    for (r, row) in raw.mul.iter().enumerate() {
        if row.len() != n {
            report.push(TableViolation::Shape(format!(
                "row {r} has {} entries, expected {n}",
                row.len()
            )));
            return report;
        }
        for (c, &v) in row.iter().enumerate() {
            if v >= n {
                report.push(TableViolation::OutOfRange {
                    row: r,
                    col: c,
                    value: v,
                });
            }
        }
    }
    for (s, &v) in raw.inv.iter().enumerate() {
        if v >= n {
            report.push(TableViolation::OutOfRange {
                row: s,
                col: n,
                value: v,
            });
        }
    }
    if !report.is_empty() {
        return report;
    }
    let m = |a: usize, b: usize| raw.mul[a][b];
    for a in 0..n {
        for b in 0..n {
            let ab = m(a, b);
            for c in 0..n {
                if m(ab, c) != m(a, m(b, c)) {
                    report.push(TableViolation::NotAssociative { a, b, c });
                }
            }
        }
    }
    for s in 0..n {
        let x = raw.inv[s];
        if m(m(s, x), s) != s || m(m(x, s), x) != x {
            report.push(TableViolation::InverseLaw { element: s });
        }
        for y in 0..n {
            if y != x && m(m(s, y), s) == s && m(m(y, s), y) == y {
                report.push(TableViolation::InverseNotUnique {
                    element: s,
                    other: y,
                });
            }
        }
    }
    let idem: Vec<usize> = (0..n).filter(|&e| m(e, e) == e).collect();
    for (i, &e) in idem.iter().enumerate() {
        for &f in &idem[i + 1..] {
            if m(e, f) != m(f, e) {
                report.push(TableViolation::IdempotentsDoNotCommute { e, f });
            }
        }
    }
    report
}

impl InverseSemigroup {
    /// Validate a raw table and build the semigroup. Element ids follow the
    /// table's row order.
    pub fn from_table(raw: RawTable) -> Result<Self> {
        let report = check_inverse_semigroup(&raw);
        if !report.is_empty() {
            let first = report
                .violations
                .iter()
                .map(ToString::to_string)
                .take(3)
                .collect::<Vec<_>>();
            return Err(IsqError::NotInverseSemigroup(format!(
                "{} violation(s): {}",
                report.total,
                first.join("; ")
            )));
        }
        Ok(Self::from_table_unchecked(raw))
    }

    /// Build from a multiplication table alone, deriving inverses. Fails if
    /// some element lacks a unique inverse or the table is not an inverse
    /// semigroup.
    pub fn from_mul_table(mul: Vec<Vec<usize>>) -> Result<Self> {
        let n = mul.len();
        if mul
            .iter()
            .any(|r| r.len() != n || r.iter().any(|&v| v >= n))
        {
            return Err(IsqError::NotInverseSemigroup("malformed table".into()));
        }
        let mut inv = Vec::with_capacity(n);
        for s in 0..n {
            let candidates: Vec<usize> = (0..n)
                .filter(|&y| mul[mul[s][y]][s] == s && mul[mul[y][s]][y] == y)
                .collect();
            match candidates.as_slice() {
                [x] => inv.push(*x),
                _ => {
                    return Err(IsqError::NotInverseSemigroup(format!(
                        "element {s} has {} inverses",
                        candidates.len()
                    )))
                }
            }
        }
        Self::from_table(RawTable { mul, inv })
    }

    pub(crate) fn from_table_unchecked(raw: RawTable) -> Self {
        let n = raw.mul.len();
        let mut mul = Vec::with_capacity(n * n);
        for row in &raw.mul {
            mul.extend(row.iter().map(|&v| v as u32));
        }
        let inv = raw.inv.iter().map(|&v| v as u32).collect();
        Self::assemble(n, mul, inv, Backend::Table)
    }

    fn assemble(size: usize, mul: Vec<u32>, inv: Vec<u32>, backend: Backend) -> Self {
        let is_idempotent: Vec<bool> = (0..size).map(|e| mul[e * size + e] as usize == e).collect();
        let idempotents = (0..size).filter(|&e| is_idempotent[e]).collect();
        Self {
            size,
            mul,
            inv,
            idempotents,
            is_idempotent,
            backend,
        }
    }

    /// The inverse semigroup consisting of the given partial bijections.
    /// Duplicates are dropped and the maps sorted; the set must be closed
    /// under composition and inversion.
    pub fn from_partial_bijections(mut maps: Vec<PartialBijection>) -> Result<Self> {
        let degree = match maps.first() {
            Some(m) => m.degree(),
            None => return Err(IsqError::Input("empty element list".into())),
        };
        if maps.iter().any(|m| m.degree() != degree) {
            return Err(IsqError::Input("maps of different degrees".into()));
        }
        maps.sort();
        maps.dedup();
        crate::limits::ensure_within(maps.len())?;
        let index: HashMap<&PartialBijection, usize> =
            maps.iter().enumerate().map(|(i, m)| (m, i)).collect();
        let n = maps.len();
        let mut mul = Vec::with_capacity(n * n);
        for a in &maps {
            for b in &maps {
                let ab = a.then(b);
                match index.get(&ab) {
                    Some(&k) => mul.push(k as u32),
                    None => return Err(IsqError::NotClosed(format!("{a} {b} = {ab} is missing"))),
                }
            }
        }
        let mut inv = Vec::with_capacity(n);
        for a in &maps {
            let ai = a.inverse();
            match index.get(&ai) {
                Some(&k) => inv.push(k as u32),
                None => return Err(IsqError::NotClosed(format!("inverse of {a} is missing"))),
            }
        }
        Ok(Self::assemble(
            n,
            mul,
            inv,
            Backend::PartialBijections { degree, maps },
        ))
    }

    pub fn len(&self) -> usize {
        self.size
    }

    pub fn is_empty(&self) -> bool {
        self.size == 0
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.size
    }

    pub fn backend(&self) -> &Backend {
        &self.backend
    }

    pub fn backend_name(&self) -> &'static str {
        match self.backend {
            Backend::PartialBijections { .. } => "pbij",
            Backend::Table => "table",
        }
    }

    /// The partial bijections, for the bijection backend.
    pub fn maps(&self) -> Option<&[PartialBijection]> {
        match &self.backend {
            Backend::PartialBijections { maps, .. } => Some(maps),
            Backend::Table => None,
        }
    }

    pub fn degree(&self) -> Option<usize> {
        match &self.backend {
            Backend::PartialBijections { degree, .. } => Some(*degree),
            Backend::Table => None,
        }
    }

    /// Id of a map, for the bijection backend.
    pub fn find_map(&self, map: &PartialBijection) -> Option<usize> {
        self.maps()?.binary_search(map).ok()
    }

    /// Like [`find_map`](Self::find_map) but builds the map from an image
    /// array and panics if it is absent. Meant for fixtures.
    pub fn elem(&self, images: &[u8]) -> usize {
        let m = PartialBijection::new(images.to_vec()).expect("valid partial bijection");
        self.find_map(&m)
            .unwrap_or_else(|| panic!("{m} is not an element"))
    }

    pub fn check(&self, id: usize) -> Result<usize> {
        if id < self.size {
            Ok(id)
        } else {
            Err(IsqError::UnknownElement {
                id,
                size: self.size,
            })
        }
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.size + b] as usize
    }

    pub fn mul3(&self, a: usize, b: usize, c: usize) -> usize {
        self.mul(self.mul(a, b), c)
    }

    /// Left-to-right product of a sequence; `None` for an empty sequence.
    pub fn product(&self, xs: impl IntoIterator<Item = usize>) -> Option<usize> {
        xs.into_iter().reduce(|acc, x| self.mul(acc, x))
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inv[a] as usize
    }

    #[inline]
    pub fn is_idempotent(&self, a: usize) -> bool {
        self.is_idempotent[a]
    }

    pub fn idempotents(&self) -> &[usize] {
        &self.idempotents
    }

    pub fn idempotent_set(&self) -> ElemSet {
        ElemSet::from_ids(self.size, self.idempotents.iter().copied())
    }

    /// Domain idempotent `ss⁻¹`.
    #[inline]
    pub fn dom(&self, s: usize) -> usize {
        self.mul(s, self.inv(s))
    }

    /// Range idempotent `s⁻¹s`.
    #[inline]
    pub fn ran(&self, s: usize) -> usize {
        self.mul(self.inv(s), s)
    }

    /// Natural partial order: `s ≤ t` iff `s = ss⁻¹t`. Ids are not checked.
    #[inline]
    pub fn leq(&self, s: usize, t: usize) -> bool {
        self.mul(self.dom(s), t) == s
    }

    pub fn natural_leq(&self, s: usize, t: usize) -> Result<bool> {
        self.check(s)?;
        self.check(t)?;
        Ok(self.leq(s, t))
    }

    /// `st` when `s⁻¹s = tt⁻¹`, otherwise `None`.
    pub fn trace_product(&self, s: usize, t: usize) -> Result<Option<usize>> {
        self.check(s)?;
        self.check(t)?;
        Ok(self.trace_mul(s, t))
    }

    #[inline]
    pub(crate) fn trace_mul(&self, s: usize, t: usize) -> Option<usize> {
        (self.ran(s) == self.dom(t)).then(|| self.mul(s, t))
    }

    /// Two-sided identity, if the semigroup is a monoid.
    pub fn identity(&self) -> Option<usize> {
        self.idempotents.iter().copied().find(|&e| {
            self.elements()
                .all(|x| self.mul(e, x) == x && self.mul(x, e) == x)
        })
    }

    /// Two-sided zero, if any.
    pub fn zero(&self) -> Option<usize> {
        self.idempotents.iter().copied().find(|&z| {
            self.elements()
                .all(|x| self.mul(z, x) == z && self.mul(x, z) == z)
        })
    }

    pub fn is_group(&self) -> bool {
        self.idempotents.len() == 1
    }

    pub fn raw_table(&self) -> RawTable {
        let mul = (0..self.size)
            .map(|a| (0..self.size).map(|b| self.mul(a, b)).collect())
            .collect();
        let inv = (0..self.size).map(|a| self.inv(a)).collect();
        RawTable { mul, inv }
    }

    /// Human-readable name of an element.
    pub fn label(&self, id: usize) -> String {
        match self.maps() {
            Some(maps) => maps[id].to_string(),
            None => format!("s{id}"),
        }
    }

    /// Least subset containing `gens` closed under multiplication and
    /// inversion.
    pub fn generated_subsemigroup(&self, gens: &[usize]) -> Result<ElemSet> {
        if gens.is_empty() {
            return Err(IsqError::EmptyGenerators);
        }
        for &g in gens {
            self.check(g)?;
        }
        let mut set = ElemSet::empty(self.size);
        let mut members = Vec::new();
        let mut queue: Vec<usize> = gens.to_vec();
        while let Some(x) = queue.pop() {
            if !set.insert(x) {
                continue;
            }
            members.push(x);
            queue.push(self.inv(x));
            for &y in &members {
                queue.push(self.mul(x, y));
                queue.push(self.mul(y, x));
            }
        }
        Ok(set)
    }

    /// True if `set` is nonempty and closed under multiplication and
    /// inversion.
    pub fn is_inverse_subsemigroup(&self, set: &ElemSet) -> bool {
        !set.is_empty()
            && set.iter().all(|a| {
                set.contains(self.inv(a)) && set.iter().all(|b| set.contains(self.mul(a, b)))
            })
    }

    /// The inverse subsemigroup `set` as a semigroup in its own right,
    /// together with the embedding (new id -> old id). Partial-bijection
    /// subsemigroups stay partial bijections.
    pub fn restrict_to(&self, set: &ElemSet) -> Result<(InverseSemigroup, Vec<usize>)> {
        if !self.is_inverse_subsemigroup(set) {
            return Err(IsqError::NotClosed("not an inverse subsemigroup".into()));
        }
        let members = set.to_vec();
        if let Some(maps) = self.maps() {
            // lexicographic order is inherited, so ids stay monotone
            let sub =
                Self::from_partial_bijections(members.iter().map(|&i| maps[i].clone()).collect())?;
            return Ok((sub, members));
        }
        let mut new_id = vec![usize::MAX; self.size];
        for (i, &m) in members.iter().enumerate() {
            new_id[m] = i;
        }
        let mul = members
            .iter()
            .map(|&a| members.iter().map(|&b| new_id[self.mul(a, b)]).collect())
            .collect();
        let inv = members.iter().map(|&a| new_id[self.inv(a)]).collect();
        Ok((Self::from_table_unchecked(RawTable { mul, inv }), members))
    }
}

/// A semigroup homomorphism `S -> T`, verified on construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Homomorphism {
    map: Vec<usize>,
}

impl Homomorphism {
    pub fn new(
        source: &InverseSemigroup,
        target: &InverseSemigroup,
        map: Vec<usize>,
    ) -> Result<Self> {
        if map.len() != source.len() {
            return Err(IsqError::NotHomomorphism(format!(
                "map has {} entries, source has {} elements",
                map.len(),
                source.len()
            )));
        }
        for &y in &map {
            target.check(y)?;
        }
        for s in source.elements() {
            for t in source.elements() {
                if map[source.mul(s, t)] != target.mul(map[s], map[t]) {
                    return Err(IsqError::NotHomomorphism(format!(
                        "({s}{t})φ != (sφ)(tφ) at s={s}, t={t}"
                    )));
                }
            }
        }
        Ok(Self { map })
    }

    pub fn identity(s: &InverseSemigroup) -> Self {
        Self {
            map: s.elements().collect(),
        }
    }

    pub fn apply(&self, s: usize) -> usize {
        self.map[s]
    }

    pub fn map(&self) -> &[usize] {
        &self.map
    }
}
