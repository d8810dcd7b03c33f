use serde::{Deserialize, Serialize};

/// An equivalence relation on `0..n`, kept in canonical form: members of a
/// class ascend, and classes are ordered by their least member. Two
/// partitions are equal iff they are the same relation.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Partition {
    class_of: Vec<usize>,
    classes: Vec<Vec<usize>>,
}

impl Partition {
    /// Build from arbitrary labels: `x` and `y` share a class iff
    /// `labels[x] == labels[y]`.
    pub fn from_labels<L: Eq + std::hash::Hash + Clone>(labels: &[L]) -> Self {
        let mut index = std::collections::HashMap::new();
        let mut classes: Vec<Vec<usize>> = Vec::new();
        let mut class_of = vec![0; labels.len()];
        for (x, l) in labels.iter().enumerate() {
            let c = *index.entry(l.clone()).or_insert_with(|| {
                classes.push(Vec::new());
                classes.len() - 1
            });
            classes[c].push(x);
            class_of[x] = c;
        }
        // first-occurrence order already sorts classes by least member
        Self { class_of, classes }
    }

    pub fn identity(n: usize) -> Self {
        Self {
            class_of: (0..n).collect(),
            classes: (0..n).map(|x| vec![x]).collect(),
        }
    }

    pub fn universal(n: usize) -> Self {
        if n == 0 {
            return Self::identity(0);
        }
        Self {
            class_of: vec![0; n],
            classes: vec![(0..n).collect()],
        }
    }

    /// The equivalence whose classes are the connected components of the
    /// union of `related` pairs.
    pub fn from_pairs(n: usize, related: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let mut uf = UnionFind::new(n);
        for (a, b) in related {
            uf.union(a, b);
        }
        uf.into_partition()
    }

    pub fn len(&self) -> usize {
        self.class_of.len()
    }

    pub fn is_empty(&self) -> bool {
        self.class_of.is_empty()
    }

    pub fn num_classes(&self) -> usize {
        self.classes.len()
    }

    pub fn class_of(&self, x: usize) -> usize {
        self.class_of[x]
    }

    pub fn class(&self, c: usize) -> &[usize] {
        &self.classes[c]
    }

    pub fn classes(&self) -> &[Vec<usize>] {
        &self.classes
    }

    /// Least member of class `c`.
    pub fn representative(&self, c: usize) -> usize {
        self.classes[c][0]
    }

    pub fn related(&self, x: usize, y: usize) -> bool {
        self.class_of[x] == self.class_of[y]
    }

    /// Every class of `self` lies inside a class of `other`.
    pub fn refines(&self, other: &Partition) -> bool {
        self.len() == other.len()
            && self
                .classes
                .iter()
                .all(|c| c.iter().all(|&x| other.related(c[0], x)))
    }

    /// Smallest equivalence containing both.
    pub fn join(&self, other: &Partition) -> Partition {
        let mut uf = UnionFind::new(self.len());
        for c in self.classes.iter().chain(other.classes.iter()) {
            for &x in &c[1..] {
                uf.union(c[0], x);
            }
        }
        uf.into_partition()
    }

    pub fn labels(&self) -> &[usize] {
        &self.class_of
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PartitionJson {
    pub classes: Vec<Vec<usize>>,
}

impl From<&Partition> for PartitionJson {
    fn from(p: &Partition) -> Self {
        Self {
            classes: p.classes.clone(),
        }
    }
}

/// Union-find with path halving; `union` reports whether two distinct classes
/// were merged.
#[derive(Debug, Clone)]
pub(crate) struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    pub fn new(n: usize) -> Self {
        Self {
            parent: (0..n).collect(),
        }
    }

    pub fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    pub fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        // keep the smaller id as root
        let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
        self.parent[hi] = lo;
        true
    }

    pub fn into_partition(mut self) -> Partition {
        let labels: Vec<usize> = (0..self.parent.len()).map(|x| self.find(x)).collect();
        Partition::from_labels(&labels)
    }
}
