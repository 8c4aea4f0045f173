//! Integer lattice vectors and the binary tree of unimodular basis pairs.
//!
//! The tree rooted at a pair (v1, v2) with positive determinant has children
//! (v1, v1+v2) and (v1+v2, v2). Starting from ((1,0), (0,1)) it enumerates,
//! without repetition, every pair of nonnegative integer vectors whose
//! determinant is 1 — equivalently all matrices [[a,b],[c,d]] with
//! nonnegative entries and ad-bc = 1. Entries grow like Fibonacci numbers
//! along a branch, so coordinates are arbitrary-precision integers.

use crate::error::LatticeError;
use rug::Integer;
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LatticeVector {
    pub x: Integer,
    pub y: Integer,
}

impl LatticeVector {
    pub fn new<T: Into<Integer>, U: Into<Integer>>(x: T, y: U) -> Self {
        LatticeVector {
            x: x.into(),
            y: y.into(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.x == 0 && self.y == 0
    }

    pub fn add(&self, other: &LatticeVector) -> LatticeVector {
        LatticeVector {
            x: Integer::from(&self.x + &other.x),
            y: Integer::from(&self.y + &other.y),
        }
    }

    /// Squared Euclidean norm.
    pub fn norm2(&self) -> Integer {
        let xx = Integer::from(&self.x * &self.x);
        let yy = Integer::from(&self.y * &self.y);
        xx + yy
    }

    pub fn dot(&self, other: &LatticeVector) -> Integer {
        let a = Integer::from(&self.x * &other.x);
        let b = Integer::from(&self.y * &other.y);
        a + b
    }

    /// Determinant of the 2x2 matrix with rows `self`, `other`.
    pub fn det(&self, other: &LatticeVector) -> Integer {
        let a = Integer::from(&self.x * &other.y);
        let b = Integer::from(&self.y * &other.x);
        a - b
    }

    pub fn neg(&self) -> LatticeVector {
        LatticeVector {
            x: Integer::from(-&self.x),
            y: Integer::from(-&self.y),
        }
    }
}

impl fmt::Display for LatticeVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

/// Strip the content of a vector: v = g * u with u primitive and g >= 1.
pub fn primitive_decompose(v: &LatticeVector) -> Result<(Integer, LatticeVector), LatticeError> {
    if v.is_zero() {
        return Err(LatticeError::ZeroVector);
    }
    let g = Integer::from(v.x.gcd_ref(&v.y));
    let u = LatticeVector {
        x: Integer::from(&v.x / &g),
        y: Integer::from(&v.y / &g),
    };
    Ok((g, u))
}

/// An ordered pair of lattice vectors with positive determinant.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct UnimodularPair {
    pub v1: LatticeVector,
    pub v2: LatticeVector,
}

impl UnimodularPair {
    pub fn new(v1: LatticeVector, v2: LatticeVector) -> Self {
        UnimodularPair { v1, v2 }
    }

    /// The standard basis ((1,0), (0,1)).
    pub fn root() -> Self {
        UnimodularPair::new(LatticeVector::new(1, 0), LatticeVector::new(0, 1))
    }

    pub fn det(&self) -> Integer {
        self.v1.det(&self.v2)
    }

    pub fn sum(&self) -> LatticeVector {
        self.v1.add(&self.v2)
    }

    /// Children share v1 (resp. v2) and replace the other member by v1+v2.
    pub fn children(&self) -> (UnimodularPair, UnimodularPair) {
        let s = self.sum();
        (
            UnimodularPair::new(self.v1.clone(), s.clone()),
            UnimodularPair::new(s, self.v2.clone()),
        )
    }
}

impl fmt::Display for UnimodularPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.v1, self.v2)
    }
}

/// Result summary of a tree walk.
#[derive(Debug, Clone)]
pub struct EnumerateOutcome {
    /// Number of admitted (visited) nodes.
    pub node_count: u64,
    /// True if the walk stopped because `max_nodes` was reached.
    pub truncated: bool,
    /// Non-admitted boundary pairs: the subtrees hanging below them are
    /// exactly the unexplored part of the tree, so {admitted nodes} plus
    /// {subtrees of frontier pairs} partition the whole tree.
    pub frontier: Vec<UnimodularPair>,
}

/// Depth-first walk of the pair tree.
///
/// `admit` is called once per reached node with the pair and its depth below
/// `basis`; admitted nodes are passed to `visit` and expanded, others become
/// frontier entries. The walk stops after `max_nodes` admitted nodes and
/// moves any unexamined pairs into the frontier, setting `truncated`.
pub fn enumerate<A, V>(
    basis: &UnimodularPair,
    mut admit: A,
    max_nodes: u64,
    mut visit: V,
) -> EnumerateOutcome
where
    A: FnMut(&UnimodularPair, u32) -> bool,
    V: FnMut(&UnimodularPair, u32),
{
    let mut frontier = Vec::new();
    let mut stack: Vec<(UnimodularPair, u32)> = vec![(basis.clone(), 0)];
    let mut node_count = 0u64;
    let mut truncated = false;
    while let Some((pair, depth)) = stack.pop() {
        if node_count >= max_nodes {
            truncated = true;
            frontier.push(pair);
            frontier.extend(stack.drain(..).map(|(p, _)| p));
            break;
        }
        if admit(&pair, depth) {
            node_count += 1;
            visit(&pair, depth);
            let (left, right) = pair.children();
            // Push right first so the left child is processed first.
            stack.push((right, depth + 1));
            stack.push((left, depth + 1));
        } else {
            frontier.push(pair);
        }
    }
    EnumerateOutcome {
        node_count,
        truncated,
        frontier,
    }
}

/// Collect all admitted pairs into a vector (convenience for tests and
/// small-scale callers).
pub fn collect_admitted<A>(
    basis: &UnimodularPair,
    admit: A,
    max_nodes: u64,
) -> (Vec<UnimodularPair>, EnumerateOutcome)
where
    A: FnMut(&UnimodularPair, u32) -> bool,
{
    let mut out = Vec::new();
    let outcome = enumerate(basis, admit, max_nodes, |p, _| out.push(p.clone()));
    (out, outcome)
}

/// All pairs at exactly `depth` below `basis` (2^depth of them), used to
/// split the tree into independent subtrees for parallel summation.
pub fn split_at_depth(basis: &UnimodularPair, depth: u32) -> Vec<UnimodularPair> {
    let mut layer = vec![basis.clone()];
    for _ in 0..depth {
        let mut next = Vec::with_capacity(layer.len() * 2);
        for p in &layer {
            let (l, r) = p.children();
            next.push(l);
            next.push(r);
        }
        layer = next;
    }
    layer
}
