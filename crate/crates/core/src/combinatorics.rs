//! Lazy lexicographic enumeration of strictly increasing index sequences.
//!
//! Indices are 1-based. [`subsets`] walks every k-subset of `{1..n}`;
//! [`subsets_containing`] walks only those that contain a fixed index.

use std::fmt;

use crate::error::{Error, Result};

/// A strictly increasing sequence of indices from `{1..universe}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IndexSubset {
    indices: Vec<usize>,
    universe: usize,
}

impl IndexSubset {
    pub fn new(indices: Vec<usize>, universe: usize) -> Result<Self> {
        if indices.is_empty() || indices.len() > universe {
            return Err(Error::InvalidCardinality {
                k: indices.len(),
                n: universe,
            });
        }
        for (pos, &ix) in indices.iter().enumerate() {
            if ix < 1 || ix > universe {
                return Err(Error::IndexOutOfRange {
                    what: "subset",
                    index: ix,
                    bound: universe,
                });
            }
            if pos > 0 && indices[pos - 1] >= ix {
                return Err(Error::InvalidCardinality {
                    k: indices.len(),
                    n: universe,
                });
            }
        }
        Ok(Self { indices, universe })
    }

    /// `{1..n}` as a single subset.
    pub fn full(n: usize) -> Result<Self> {
        Self::new((1..=n).collect(), n)
    }

    pub fn indices(&self) -> &[usize] {
        &self.indices
    }

    pub fn universe(&self) -> usize {
        self.universe
    }

    pub fn len(&self) -> usize {
        self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }

    pub fn contains(&self, ix: usize) -> bool {
        self.indices.binary_search(&ix).is_ok()
    }
}

impl fmt::Display for IndexSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (pos, ix) in self.indices.iter().enumerate() {
            if pos > 0 {
                f.write_str(",")?;
            }
            write!(f, "{ix}")?;
        }
        f.write_str(")")
    }
}

fn check_cardinality(k: usize, n: usize) -> Result<()> {
    if k < 1 || k > n {
        Err(Error::InvalidCardinality { k, n })
    } else {
        Ok(())
    }
}

/// Iterator over all k-subsets of `{1..n}` in lexicographic order.
#[derive(Clone, Debug)]
pub struct Subsets {
    n: usize,
    current: Option<Vec<usize>>,
}

impl Iterator for Subsets {
    type Item = IndexSubset;

    fn next(&mut self) -> Option<IndexSubset> {
        let cur = self.current.as_mut()?;
        let out = IndexSubset {
            indices: cur.clone(),
            universe: self.n,
        };
        let k = cur.len();
        // rightmost position that can still be incremented
        match (0..k).rev().find(|&p| cur[p] < self.n - (k - 1 - p)) {
            Some(p) => {
                cur[p] += 1;
                for q in p + 1..k {
                    cur[q] = cur[q - 1] + 1;
                }
            }
            None => self.current = None,
        }
        Some(out)
    }
}

pub fn subsets(k: usize, n: usize) -> Result<Subsets> {
    check_cardinality(k, n)?;
    Ok(Subsets {
        n,
        current: Some((1..=k).collect()),
    })
}

/// Iterator over k-subsets of `{1..n}` that contain `fixed`, lexicographic.
#[derive(Clone, Debug)]
pub struct SubsetsContaining {
    fixed: usize,
    n: usize,
    // (k-1)-subsets of the other n-1 indices, relabelled around `fixed`
    rest: Option<Subsets>,
    done: bool,
}

impl Iterator for SubsetsContaining {
    type Item = IndexSubset;

    fn next(&mut self) -> Option<IndexSubset> {
        if self.done {
            return None;
        }
        let Some(rest) = self.rest.as_mut() else {
            self.done = true;
            return Some(IndexSubset {
                indices: vec![self.fixed],
                universe: self.n,
            });
        };
        let other = rest.next()?;
        let mut indices = Vec::with_capacity(other.len() + 1);
        let mut placed = false;
        for &ix in other.indices() {
            let ix = if ix >= self.fixed { ix + 1 } else { ix };
            if !placed && ix > self.fixed {
                indices.push(self.fixed);
                placed = true;
            }
            indices.push(ix);
        }
        if !placed {
            indices.push(self.fixed);
        }
        Some(IndexSubset {
            indices,
            universe: self.n,
        })
    }
}

pub fn subsets_containing(k: usize, n: usize, fixed: usize) -> Result<SubsetsContaining> {
    check_cardinality(k, n)?;
    if fixed < 1 || fixed > n {
        return Err(Error::IndexOutOfRange {
            what: "fixed",
            index: fixed,
            bound: n,
        });
    }
    let rest = if k == 1 {
        None
    } else {
        Some(subsets(k - 1, n - 1)?)
    };
    Ok(SubsetsContaining {
        fixed,
        n,
        rest,
        done: false,
    })
}

fn binomial(n: usize, k: usize) -> u128 {
    let k = k.min(n - k);
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i as u128 + 1))
}

/// `C(n, k)`.
pub fn count_subsets(k: usize, n: usize) -> Result<u128> {
    check_cardinality(k, n)?;
    Ok(binomial(n, k))
}

/// `C(n-1, k-1)`.
pub fn count_subsets_containing(k: usize, n: usize) -> Result<u128> {
    check_cardinality(k, n)?;
    Ok(binomial(n - 1, k - 1))
}
