//! Munn trees: elements of the free inverse monoid `FIM(X)`.
//!
//! Words are ASCII: a lowercase letter is a generator and the matching
//! uppercase letter its formal inverse. A tree is stored as its prefix-closed
//! set of reduced free-group words together with an endpoint.

use std::collections::{BTreeSet, HashMap, HashSet, VecDeque};
use std::fmt;

use rand::Rng;
use smallvec::SmallVec;

use crate::error::{IsqError, Result};
use crate::semigroup::InverseSemigroup;

/// A letter of `X ⊔ X⁻¹`: `2g` is generator `g`, `2g + 1` its inverse.
pub type Letter = u8;
/// A word over `X ⊔ X⁻¹`, not necessarily reduced.
pub type Word = SmallVec<[Letter; 16]>;

fn invert_letter(l: Letter) -> Letter {
    l ^ 1
}

pub fn parse_word(text: &str) -> Result<Word> {
    let text = text.trim();
    if text.is_empty() || text == "1" || text == "ε" {
        return Ok(Word::new());
    }
    text.chars()
        .map(|c| match c {
            'a'..='z' => Ok((c as u8 - b'a') * 2),
            'A'..='Z' => Ok((c as u8 - b'A') * 2 + 1),
            _ => Err(IsqError::Parse(format!(
                "bad symbol {c:?} in word {text:?}"
            ))),
        })
        .collect()
}

pub fn format_word(w: &[Letter]) -> String {
    if w.is_empty() {
        return "1".into();
    }
    w.iter()
        .map(|&l| {
            let base = if l & 1 == 0 { b'a' } else { b'A' };
            (base + l / 2) as char
        })
        .collect()
}

/// Formal inverse: reverse and invert each letter.
pub fn invert_word(w: &[Letter]) -> Word {
    w.iter().rev().map(|&l| invert_letter(l)).collect()
}

/// Free reduction of `u·v` where `u` is reduced.
fn reduce_onto(mut u: Word, v: &[Letter]) -> Word {
    for &l in v {
        if u.last() == Some(&invert_letter(l)) {
            u.pop();
        } else {
            u.push(l);
        }
    }
    u
}

pub fn reduce(w: &[Letter]) -> Word {
    reduce_onto(Word::new(), w)
}

/// Vertices ordered by length, then letters.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
struct Vertex(usize, Word);

impl Vertex {
    fn new(w: Word) -> Self {
        Vertex(w.len(), w)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MunnTree {
    vertices: BTreeSet<Vertex>,
    end: Word,
}

impl MunnTree {
    pub fn identity() -> Self {
        Self {
            vertices: BTreeSet::from([Vertex::new(Word::new())]),
            end: Word::new(),
        }
    }

    pub fn from_word(w: &[Letter]) -> Self {
        let mut vertices = BTreeSet::from([Vertex::new(Word::new())]);
        let mut at = Word::new();
        for &l in w {
            at = reduce_onto(at, &[l]);
            vertices.insert(Vertex::new(at.clone()));
        }
        Self { vertices, end: at }
    }

    pub fn parse(text: &str) -> Result<Self> {
        Ok(Self::from_word(&parse_word(text)?))
    }

    pub fn vertices(&self) -> impl Iterator<Item = &[Letter]> {
        self.vertices.iter().map(|v| v.1.as_slice())
    }

    pub fn num_vertices(&self) -> usize {
        self.vertices.len()
    }

    pub fn end(&self) -> &[Letter] {
        &self.end
    }

    pub fn contains_vertex(&self, w: &[Letter]) -> bool {
        self.vertices.contains(&Vertex::new(Word::from_slice(w)))
    }

    /// Translate `y` to the endpoint of `self` and take the union.
    pub fn mul(&self, y: &MunnTree) -> MunnTree {
        let mut vertices = self.vertices.clone();
        for v in &y.vertices {
            vertices.insert(Vertex::new(reduce_onto(self.end.clone(), &v.1)));
        }
        MunnTree {
            vertices,
            end: reduce_onto(self.end.clone(), &y.end),
        }
    }

    /// Reroot at the endpoint.
    pub fn inv(&self) -> MunnTree {
        let back = invert_word(&self.end);
        let vertices = self
            .vertices
            .iter()
            .map(|v| Vertex::new(reduce_onto(back.clone(), &v.1)))
            .collect();
        MunnTree {
            vertices,
            end: back,
        }
    }

    pub fn is_idempotent(&self) -> bool {
        self.end.is_empty()
    }

    /// `x ≤ y` iff `V(y) ⊆ V(x)` and the endpoints agree.
    pub fn leq(&self, y: &MunnTree) -> bool {
        self.end == y.end && y.vertices.is_subset(&self.vertices)
    }

    /// A word for the tree: a closed walk through every edge, then the
    /// geodesic to the endpoint.
    pub fn to_word(&self) -> Word {
        let mut out = Word::new();
        self.tour(&Word::new(), &mut out);
        out.extend_from_slice(&self.end);
        out
    }

    fn tour(&self, at: &Word, out: &mut Word) {
        let children = self
            .vertices
            .range(Vertex(at.len() + 1, Word::new())..Vertex(at.len() + 2, Word::new()))
            .filter(|v| v.1.starts_with(at));
        for child in children {
            let l = *child.1.last().expect("nonempty child");
            out.push(l);
            self.tour(&child.1, out);
            out.push(invert_letter(l));
        }
    }
}

impl fmt::Display for MunnTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_word(&self.to_word()))
    }
}

/// Evaluate a word in a finite inverse semigroup: left-to-right product of
/// images, uppercase letters mapped to inverses. The empty word goes to the
/// identity, which must then exist.
pub fn evaluate(
    word: &[Letter],
    assignment: &HashMap<u8, usize>,
    m: &InverseSemigroup,
) -> Result<usize> {
    let mut acc: Option<usize> = None;
    for &l in word {
        let g = *assignment.get(&(l / 2)).ok_or_else(|| {
            IsqError::Input(format!(
                "no value assigned to generator {}",
                (b'a' + l / 2) as char
            ))
        })?;
        m.check(g)?;
        let x = if l & 1 == 0 { g } else { m.inv(g) };
        acc = Some(acc.map_or(x, |a| m.mul(a, x)));
    }
    match acc {
        Some(a) => Ok(a),
        None => m
            .identity()
            .ok_or_else(|| IsqError::Input("empty word in a semigroup without identity".into())),
    }
}

/// Parse `a=idx3,b=5` into generator -> element id.
pub fn parse_assignment(text: &str) -> Result<HashMap<u8, usize>> {
    let mut out = HashMap::new();
    for part in text.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        let (name, value) = part
            .split_once('=')
            .ok_or_else(|| IsqError::Parse(format!("expected name=value, got {part:?}")))?;
        let name = name.trim();
        let g = match name.as_bytes() {
            [c @ b'a'..=b'z'] => c - b'a',
            _ => {
                return Err(IsqError::Parse(format!(
                    "generator name {name:?} must be one lowercase letter"
                )))
            }
        };
        let value = value.trim();
        let digits = value.strip_prefix("idx").unwrap_or(value);
        let id = digits
            .parse()
            .map_err(|_| IsqError::Parse(format!("bad element {value:?}")))?;
        out.insert(g, id);
    }
    Ok(out)
}

/// `⟨X : R⟩` with relations `(ℓ, r)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Presentation {
    pub relations: Vec<(Word, Word)>,
}

impl Presentation {
    /// Relations `l=r` separated by `,` or `;`. An empty string is the free
    /// presentation.
    pub fn parse(text: &str) -> Result<Self> {
        let mut relations = Vec::new();
        for part in text
            .split([',', ';'])
            .map(str::trim)
            .filter(|p| !p.is_empty())
        {
            let (l, r) = part
                .split_once('=')
                .ok_or_else(|| IsqError::Parse(format!("expected l=r, got {part:?}")))?;
            relations.push((parse_word(l)?, parse_word(r)?));
        }
        Ok(Self { relations })
    }

    /// Letters occurring in the relations, as generator indices.
    pub fn generators(&self) -> BTreeSet<u8> {
        self.relations
            .iter()
            .flat_map(|(l, r)| l.iter().chain(r.iter()).map(|&x| x / 2))
            .collect()
    }
}

/// `Q(R) = {ℓ⁻¹r, ℓr⁻¹}`, as words and trees.
pub fn q_of_relations(p: &Presentation) -> Vec<(Word, MunnTree)> {
    let mut out: Vec<(Word, MunnTree)> = Vec::new();
    for (l, r) in &p.relations {
        let mut a = invert_word(l);
        a.extend_from_slice(r);
        let mut b = l.clone();
        b.extend_from_slice(&invert_word(r));
        for w in [a, b] {
            let t = MunnTree::from_word(&w);
            if !out.iter().any(|(_, u)| *u == t) {
                out.push((w, t));
            }
        }
    }
    out
}

/// Reduced words over the letters of `gens` of length at most `max_len`.
fn reduced_words(gens: &BTreeSet<u8>, max_len: usize) -> Vec<Word> {
    let letters: Vec<Letter> = gens.iter().flat_map(|&g| [2 * g, 2 * g + 1]).collect();
    let mut out = vec![Word::new()];
    let mut layer = vec![Word::new()];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for w in &layer {
            for &l in &letters {
                if w.last() != Some(&invert_letter(l)) {
                    let mut w2 = w.clone();
                    w2.push(l);
                    next.push(w2);
                }
            }
        }
        out.extend(next.iter().cloned());
        layer = next;
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Membership {
    /// Words whose product equals the element; each is a conjugate
    /// `w⁻¹qw` of some `q ∈ Q(R) ∪ Q(R)⁻¹` or an idempotent `ww⁻¹`.
    Yes(Vec<Word>),
    Inconclusive,
}

/// Semidecision for membership in the normal inverse submonoid generated by
/// `Q(R)`: look for a product of at most `max_len` atoms, with conjugators of
/// length at most `max_len`, equal to `x`. Never answers "no".
///
/// Every prefix of such a product has its vertex set inside `V(x)`, so the
/// breadth-first search only keeps those.
pub fn bounded_n_membership(p: &Presentation, x: &MunnTree, max_len: usize) -> Membership {
    let mut gens = p.generators();
    for v in x.vertices() {
        gens.extend(v.iter().map(|&l| l / 2));
    }
    let conjugators = reduced_words(&gens, max_len);
    let mut atoms: Vec<(Word, MunnTree)> = Vec::new();
    let mut seen_atoms = HashSet::new();
    let mut push = |w: Word, atoms: &mut Vec<(Word, MunnTree)>| {
        let t = MunnTree::from_word(&w);
        if seen_atoms.insert(t.clone()) {
            atoms.push((w, t));
        }
    };
    let q = q_of_relations(p);
    for c in &conjugators {
        let ci = invert_word(c);
        for (qw, _) in &q {
            for base in [qw.clone(), invert_word(qw)] {
                let mut w = ci.clone();
                w.extend_from_slice(&base);
                w.extend_from_slice(c);
                push(w, &mut atoms);
            }
        }
        let mut idem = c.clone();
        idem.extend_from_slice(&ci);
        push(idem, &mut atoms);
    }
    let inside = |t: &MunnTree| t.vertices.is_subset(&x.vertices);
    let atoms: Vec<(Word, MunnTree)> = atoms
        .into_iter()
        .filter(|(_, t)| t.num_vertices() <= x.num_vertices())
        .collect();

    // BFS over partial products; `parent[i] = (previous state, atom)`
    let mut states: Vec<MunnTree> = Vec::new();
    let mut parent: Vec<Option<(usize, usize)>> = Vec::new();
    let mut index: HashMap<MunnTree, usize> = HashMap::new();
    let mut queue = VecDeque::new();
    for (ai, (_, t)) in atoms.iter().enumerate() {
        if inside(t) && !index.contains_key(t) {
            index.insert(t.clone(), states.len());
            states.push(t.clone());
            parent.push(Some((usize::MAX, ai)));
            queue.push_back((states.len() - 1, 1));
        }
    }
    let certificate = |mut i: usize, states_parent: &Vec<Option<(usize, usize)>>| {
        let mut factors = Vec::new();
        loop {
            let (prev, ai) = states_parent[i].expect("recorded");
            factors.push(atoms[ai].0.clone());
            if prev == usize::MAX {
                break;
            }
            i = prev;
        }
        factors.reverse();
        factors
    };
    while let Some((i, depth)) = queue.pop_front() {
        if states[i] == *x {
            return Membership::Yes(certificate(i, &parent));
        }
        if depth == max_len {
            continue;
        }
        for (ai, (_, t)) in atoms.iter().enumerate() {
            let next = states[i].mul(t);
            if inside(&next) && !index.contains_key(&next) {
                index.insert(next.clone(), states.len());
                states.push(next);
                parent.push(Some((i, ai)));
                queue.push_back((states.len() - 1, depth + 1));
            }
        }
    }
    Membership::Inconclusive
}

/// A random word over `gens` generators and their inverses.
pub fn random_word<R: Rng>(rng: &mut R, gens: u8, max_len: usize) -> Word {
    let len = rng.gen_range(0..=max_len);
    (0..len).map(|_| rng.gen_range(0..2 * gens)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builders::symmetric_inverse_monoid;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn t(w: &str) -> MunnTree {
        MunnTree::parse(w).unwrap()
    }

    #[test]
    fn shapes() {
        let x = t("aA");
        assert!(x.is_idempotent());
        assert_eq!(
            x.vertices().map(format_word).collect::<Vec<_>>(),
            vec!["1", "a"]
        );
        assert_ne!(t("babAB"), t("b"));
        assert_eq!(t("abBA"), t("aA").mul(&t("abBA")));
        assert!(MunnTree::parse("a1").is_err());
    }

    #[test]
    fn order() {
        let u = t("ab");
        assert!(u.mul(&u.inv()).mul(&u).leq(&u));
        assert!(t("aAb").leq(&t("b")));
        assert!(!t("a").leq(&t("b")));
        assert!(!t("b").leq(&t("aAb")));
    }

    #[test]
    fn laws_on_random_words() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..200 {
            let [x, y, z] = [0; 3].map(|_| MunnTree::from_word(&random_word(&mut rng, 2, 6)));
            assert_eq!(x.mul(&y).mul(&z), x.mul(&y.mul(&z)));
            assert_eq!(x.mul(&x.inv()).mul(&x), x);
            assert_eq!(x.inv().inv(), x);
            assert_eq!(MunnTree::from_word(&x.to_word()), x);
            assert_eq!(x.mul(&x) == x, x.is_idempotent());
        }
    }

    #[test]
    fn evaluations_in_i2() {
        let i2 = symmetric_inverse_monoid(2).unwrap();
        let (tau, eps) = (i2.elem(&[2, 1]), i2.elem(&[1, 0]));
        let te = HashMap::from([(b't' - b'a', tau), (b'e' - b'a', eps)]);
        assert_eq!(evaluate(&parse_word("EetE").unwrap(), &te, &i2).unwrap(), 0);
        assert_eq!(
            evaluate(&parse_word("te").unwrap(), &te, &i2).unwrap(),
            i2.elem(&[0, 1])
        );
        let ab = parse_assignment("a=idx3,b=2").unwrap();
        assert_eq!(
            evaluate(&parse_word("babAB").unwrap(), &ab, &i2).unwrap(),
            0
        );
        assert_eq!(
            evaluate(&parse_word("b").unwrap(), &ab, &i2).unwrap(),
            i2.elem(&[0, 2])
        );
        assert_eq!(evaluate(&Word::new(), &ab, &i2).unwrap(), i2.elem(&[1, 2]));
    }

    #[test]
    fn membership() {
        let p = Presentation::parse("ab=ba").unwrap();
        let x = t("babABB");
        match bounded_n_membership(&p, &x, 2) {
            Membership::Yes(factors) => {
                let product = factors.iter().fold(MunnTree::identity(), |acc, w| {
                    acc.mul(&MunnTree::from_word(w))
                });
                assert_eq!(product, x);
            }
            Membership::Inconclusive => panic!("expected a certificate"),
        }
        let q = q_of_relations(&p);
        assert!(matches!(
            bounded_n_membership(&p, &q[0].1, 1),
            Membership::Yes(_)
        ));
        let free = Presentation::parse("").unwrap();
        assert_eq!(
            bounded_n_membership(&free, &t("a"), 3),
            Membership::Inconclusive
        );
    }
}
