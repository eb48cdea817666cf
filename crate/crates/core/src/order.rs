//! Linear orders on a ground set.

use std::fmt;

use itertools::Itertools;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::sets::{ElemSet, MAX_ELEMENT};

const ABSENT: u8 = u8::MAX;

/// A total order on a finite set of elements, smallest first.
///
/// "Smallest" in every activity and initial-ideal computation refers to
/// this order, never to the numeric labels.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LinearOrder {
    seq: Vec<u32>,
    pos: [u8; MAX_ELEMENT as usize + 1],
}

impl LinearOrder {
    /// Builds an order from its elements listed smallest first.
    pub fn new(seq: Vec<u32>) -> Result<Self> {
        let mut pos = [ABSENT; MAX_ELEMENT as usize + 1];
        for (i, &e) in seq.iter().enumerate() {
            if e > MAX_ELEMENT {
                return Err(Error::InvalidOrder(format!("element {e} out of range")));
            }
            if pos[e as usize] != ABSENT {
                return Err(Error::InvalidOrder(format!("element {e} repeated")));
            }
            pos[e as usize] = i as u8;
        }
        Ok(LinearOrder { seq, pos })
    }

    /// Like [`LinearOrder::new`], additionally requiring the order to be a
    /// permutation of `ground`.
    pub fn on(ground: ElemSet, seq: Vec<u32>) -> Result<Self> {
        let order = LinearOrder::new(seq)?;
        if order.ground() != ground {
            return Err(Error::InvalidOrder(format!(
                "order covers {} but the ground set is {ground}",
                order.ground()
            )));
        }
        Ok(order)
    }

    /// The numeric order on `ground`.
    pub fn natural(ground: ElemSet) -> Self {
        LinearOrder::new(ground.to_vec()).expect("ground elements are distinct")
    }

    pub fn elements(&self) -> &[u32] {
        &self.seq
    }

    pub fn len(&self) -> usize {
        self.seq.len()
    }

    pub fn is_empty(&self) -> bool {
        self.seq.is_empty()
    }

    pub fn ground(&self) -> ElemSet {
        self.seq.iter().collect()
    }

    /// 0-based position of `e`; panics if `e` is not ordered.
    pub fn position(&self, e: u32) -> usize {
        let p = self.pos[e as usize];
        assert!(p != ABSENT, "element {e} is not in the order");
        p as usize
    }

    pub fn less(&self, a: u32, b: u32) -> bool {
        self.position(a) < self.position(b)
    }

    /// Order-smallest element of `set`.
    pub fn min_of(&self, set: ElemSet) -> Option<u32> {
        set.iter().min_by_key(|&e| self.position(e))
    }

    pub fn reversed(&self) -> Self {
        LinearOrder::new(self.seq.iter().rev().copied().collect()).expect("same elements")
    }

    /// The induced order on a subset.
    pub fn restrict(&self, set: ElemSet) -> Self {
        LinearOrder::new(self.seq.iter().copied().filter(|&e| set.contains(e)).collect()).expect("same elements")
    }

    /// Inserts a new element at the given 0-based position.
    pub fn with_inserted(&self, e: u32, index: usize) -> Result<Self> {
        let mut seq = self.seq.clone();
        if index > seq.len() {
            return Err(Error::InvalidOrder(format!("insertion index {index} out of range")));
        }
        seq.insert(index, e);
        LinearOrder::new(seq)
    }

    /// Every linear order on `ground`, in lexicographic order of sequences.
    pub fn all(ground: ElemSet) -> impl Iterator<Item = LinearOrder> {
        let n = ground.len();
        ground
            .to_vec()
            .into_iter()
            .permutations(n)
            .map(|seq| LinearOrder::new(seq).expect("permutation"))
    }
}

impl fmt::Display for LinearOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.seq.iter().join("<"))
    }
}

impl fmt::Debug for LinearOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl Serialize for LinearOrder {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.seq.serialize(s)
    }
}
