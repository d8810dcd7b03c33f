//! Partial bijections of `{1..n}`.
//!
//! Maps act on the right and compose left to right: `x(fg) = (xf)g`. Under
//! this convention `ff⁻¹` is the identity on the domain of `f`.

use std::fmt;

use crate::error::{IsqError, Result};

/// A partial injective map on `{1..degree}`.
///
/// `images[i]` is the image of `i + 1`, with `0` meaning undefined.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PartialBijection {
    images: Vec<u8>,
}

impl PartialBijection {
    pub fn new(images: Vec<u8>) -> Result<Self> {
        let n = images.len();
        if n == 0 {
            return Err(IsqError::Input("partial bijection of degree 0".into()));
        }
        if n > u8::MAX as usize {
            return Err(IsqError::Input(format!("degree {n} too large")));
        }
        let mut seen = vec![false; n + 1];
        for &y in &images {
            let y = y as usize;
            if y > n {
                return Err(IsqError::Input(format!(
                    "image {y} out of range for degree {n}"
                )));
            }
            if y != 0 {
                if seen[y] {
                    return Err(IsqError::Input(format!(
                        "image {y} repeated; map is not injective"
                    )));
                }
                seen[y] = true;
            }
        }
        Ok(Self { images })
    }

    /// The empty map of the given degree.
    pub fn zero(degree: usize) -> Self {
        Self {
            images: vec![0; degree],
        }
    }

    pub fn identity(degree: usize) -> Self {
        Self {
            images: (1..=degree as u8).collect(),
        }
    }

    /// Identity map restricted to `domain` (1-based points).
    pub fn identity_on(degree: usize, domain: &[u8]) -> Result<Self> {
        let mut images = vec![0; degree];
        for &x in domain {
            if x == 0 || x as usize > degree {
                return Err(IsqError::Input(format!("point {x} out of range")));
            }
            images[x as usize - 1] = x;
        }
        Self::new(images)
    }

    /// The map defined only at `pairs`, sending each `x` to `y`.
    pub fn from_pairs(degree: usize, pairs: &[(u8, u8)]) -> Result<Self> {
        let mut images = vec![0; degree];
        for &(x, y) in pairs {
            if x == 0 || x as usize > degree {
                return Err(IsqError::Input(format!("point {x} out of range")));
            }
            images[x as usize - 1] = y;
        }
        Self::new(images)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[u8] {
        &self.images
    }

    pub fn image_of(&self, x: u8) -> Option<u8> {
        match self.images.get(x as usize - 1) {
            Some(&0) | None => None,
            Some(&y) => Some(y),
        }
    }

    pub fn rank(&self) -> usize {
        self.images.iter().filter(|&&y| y != 0).count()
    }

    pub fn domain(&self) -> Vec<u8> {
        (1..=self.degree() as u8)
            .filter(|&x| self.image_of(x).is_some())
            .collect()
    }

    /// Left-to-right composite: first `self`, then `other`.
    pub fn then(&self, other: &Self) -> Self {
        debug_assert_eq!(self.degree(), other.degree());
        let images = self
            .images
            .iter()
            .map(|&y| {
                if y == 0 {
                    0
                } else {
                    other.images[y as usize - 1]
                }
            })
            .collect();
        Self { images }
    }

    pub fn inverse(&self) -> Self {
        let mut images = vec![0; self.degree()];
        for (i, &y) in self.images.iter().enumerate() {
            if y != 0 {
                images[y as usize - 1] = (i + 1) as u8;
            }
        }
        Self { images }
    }

    pub fn is_idempotent(&self) -> bool {
        self.images
            .iter()
            .enumerate()
            .all(|(i, &y)| y == 0 || y as usize == i + 1)
    }

    pub fn is_permutation(&self) -> bool {
        self.rank() == self.degree()
    }
}

impl fmt::Display for PartialBijection {
    /// `[1->2, 3->3]`; the empty map prints as `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.rank() == 0 {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .images
            .iter()
            .enumerate()
            .filter(|(_, &y)| y != 0)
            .map(|(i, y)| format!("{}->{}", i + 1, y))
            .collect();
        write!(f, "[{}]", parts.join(", "))
    }
}

/// All partial bijections of the given degree, in lexicographic order of
/// their image arrays.
pub fn all_partial_bijections(degree: usize) -> Vec<PartialBijection> {
    let mut out = Vec::new();
    let mut images = vec![0u8; degree];
    let mut used = vec![false; degree + 1];
    fn rec(
        pos: usize,
        images: &mut Vec<u8>,
        used: &mut Vec<bool>,
        out: &mut Vec<PartialBijection>,
    ) {
        let n = images.len();
        if pos == n {
            out.push(PartialBijection {
                images: images.clone(),
            });
            return;
        }
        for y in 0..=n {
            if y != 0 && used[y] {
                continue;
            }
            images[pos] = y as u8;
            if y != 0 {
                used[y] = true;
            }
            rec(pos + 1, images, used, out);
            if y != 0 {
                used[y] = false;
            }
        }
        images[pos] = 0;
    }
    rec(0, &mut images, &mut used, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_non_injective() {
        assert!(PartialBijection::new(vec![1, 1]).is_err());
        assert!(PartialBijection::new(vec![3, 0]).is_err());
        assert!(PartialBijection::new(vec![]).is_err());
    }

    #[test]
    fn left_to_right_composition() {
        // f: 1->2, f f^-1 is the identity on {1}
        let f = PartialBijection::from_pairs(2, &[(1, 2)]).unwrap();
        let e1 = PartialBijection::identity_on(2, &[1]).unwrap();
        assert_eq!(f.then(&f.inverse()), e1);
        let tau = PartialBijection::new(vec![2, 1]).unwrap();
        // tau then id_{1}: 2 -> 1 -> 1, 1 -> 2 -> undefined
        assert_eq!(
            tau.then(&e1),
            PartialBijection::from_pairs(2, &[(2, 1)]).unwrap()
        );
    }

    #[test]
    fn enumeration_counts() {
        // sum_k C(n,k)^2 k!
        assert_eq!(all_partial_bijections(1).len(), 2);
        assert_eq!(all_partial_bijections(2).len(), 7);
        assert_eq!(all_partial_bijections(3).len(), 34);
        let four = all_partial_bijections(4);
        assert_eq!(four.len(), 209);
        assert!(four.windows(2).all(|w| w[0] < w[1]));
        assert_eq!(four[0], PartialBijection::zero(4));
    }

    #[test]
    fn display() {
        assert_eq!(PartialBijection::zero(3).to_string(), "0");
        assert_eq!(
            PartialBijection::new(vec![2, 0, 3]).unwrap().to_string(),
            "[1->2, 3->3]"
        );
    }
}
