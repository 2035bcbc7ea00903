//! Canonical sorted sets of integer codes.
//!
//! A [`CodeSet`] is the identity of every substructure in this crate:
//! submodules, ideals, closed sets of points. Keeping the representation
//! sorted and deduplicated makes equality, ordering and report output
//! deterministic by construction.

use serde::{Deserialize, Serialize};
use std::fmt;

use crate::finite_algebra::Code;

/// Sorted, deduplicated set of `u32` codes.
///
/// Depending on context the codes are element codes of a carrier or indices
/// of spectrum points.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize, Deserialize)]
pub struct CodeSet(Vec<Code>);

impl CodeSet {
    pub fn new() -> Self {
        CodeSet(Vec::new())
    }

    /// Builds a set from arbitrary codes, sorting and deduplicating.
    pub fn from_iter<I: IntoIterator<Item = Code>>(iter: I) -> Self {
        let mut v: Vec<Code> = iter.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        CodeSet(v)
    }

    /// Wraps a vector that is already sorted and deduplicated.
    pub fn from_sorted(v: Vec<Code>) -> Self {
        debug_assert!(v.windows(2).all(|w| w[0] < w[1]));
        CodeSet(v)
    }

    pub fn singleton(c: Code) -> Self {
        CodeSet(vec![c])
    }

    /// The full set `{0, 1, .., n-1}`.
    pub fn full(n: u32) -> Self {
        CodeSet((0..n).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, c: Code) -> bool {
        self.0.binary_search(&c).is_ok()
    }

    pub fn insert(&mut self, c: Code) -> bool {
        match self.0.binary_search(&c) {
            Ok(_) => false,
            Err(pos) => {
                self.0.insert(pos, c);
                true
            }
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = Code> + '_ {
        self.0.iter().copied()
    }

    pub fn as_slice(&self) -> &[Code] {
        &self.0
    }

    pub fn union(&self, other: &CodeSet) -> CodeSet {
        let mut v = Vec::with_capacity(self.0.len() + other.0.len());
        let (mut i, mut j) = (0, 0);
        while i < self.0.len() && j < other.0.len() {
            match self.0[i].cmp(&other.0[j]) {
                std::cmp::Ordering::Less => {
                    v.push(self.0[i]);
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    v.push(other.0[j]);
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    v.push(self.0[i]);
                    i += 1;
                    j += 1;
                }
            }
        }
        v.extend_from_slice(&self.0[i..]);
        v.extend_from_slice(&other.0[j..]);
        CodeSet(v)
    }

    pub fn intersect(&self, other: &CodeSet) -> CodeSet {
        let mut v = Vec::new();
        let (mut i, mut j) = (0, 0);
        while i < self.0.len() && j < other.0.len() {
            match self.0[i].cmp(&other.0[j]) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => {
                    v.push(self.0[i]);
                    i += 1;
                    j += 1;
                }
            }
        }
        CodeSet(v)
    }

    pub fn is_subset(&self, other: &CodeSet) -> bool {
        self.0.iter().all(|&c| other.contains(c))
    }

    pub fn is_proper_subset(&self, other: &CodeSet) -> bool {
        self.0.len() < other.0.len() && self.is_subset(other)
    }
}

impl fmt::Display for CodeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "}}")
    }
}

impl FromIterator<Code> for CodeSet {
    fn from_iter<I: IntoIterator<Item = Code>>(iter: I) -> Self {
        CodeSet::from_iter(iter)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn union_and_intersect_are_sorted_and_deduped() {
        let a = CodeSet::from_iter([3, 1, 2, 3]);
        let b = CodeSet::from_iter([2, 4]);
        assert_eq!(a.union(&b).as_slice(), &[1, 2, 3, 4]);
        assert_eq!(a.intersect(&b).as_slice(), &[2]);
    }

    #[test]
    fn subset_relations() {
        let a = CodeSet::from_iter([0, 2]);
        let b = CodeSet::from_iter([0, 1, 2]);
        assert!(a.is_subset(&b));
        assert!(a.is_proper_subset(&b));
        assert!(!b.is_subset(&a));
        assert!(!a.is_proper_subset(&a));
    }

    #[test]
    fn display_is_brace_delimited() {
        assert_eq!(CodeSet::from_iter([0, 2]).to_string(), "{0,2}");
        assert_eq!(CodeSet::new().to_string(), "{}");
    }
}
