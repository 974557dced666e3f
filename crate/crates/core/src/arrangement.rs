//! Symbolic subspaces of the braid arrangement `S_n` and the type B
//! arrangement `B_n`, arrangements of them, intersection lattices and
//! characteristic polynomials.
//!
//! A type A subspace is a set partition of the coordinates: each block is a
//! run of equal coordinates. A type B subspace additionally carries a set of
//! coordinates forced to zero and a relative sign on every member of a
//! block, so that `x_i = sign_i * sign_j * x_j` within a block.
//!
//! Coordinates are 0-based in the API. The JSON documents in [`crate::io`]
//! use 1-based labels.

use std::collections::HashMap;
use std::fmt::{self, Debug};
use std::hash::Hash;

use num_bigint::BigInt;
use num_traits::One;
use rand::Rng;
use thiserror::Error;

use crate::complex::{CoxeterFace, FaceA, FaceB};
use crate::polyseries::IntPolynomial;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ArrangementError {
    #[error("subspace {index} lives in dimension {found}, expected {expected}")]
    AmbientMismatch { index: usize, expected: usize, found: usize },
    #[error("subspace {0} is the whole ambient space")]
    FullSpace(usize),
    #[error("subspace {0} contains subspace {1}")]
    NotAntichain(usize, usize),
    #[error("index {index} is out of range for an arrangement of {len} subspaces")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("subspace is not an element of the intersection lattice")]
    NotInLattice,
    #[error("invalid subspace: {0}")]
    InvalidSubspace(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    TypeA,
    TypeB,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::TypeA => write!(f, "A"),
            Family::TypeB => write!(f, "B"),
        }
    }
}

/// The host reflection arrangement: `S_n` or `B_n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Ambient {
    pub family: Family,
    pub n: usize,
}

impl Ambient {
    pub fn new(family: Family, n: usize) -> Self {
        Self { family, n }
    }

    /// `n - 1` for type A (inside `x_1 + ... + x_n = 0`), `n` for type B.
    pub fn essential_dim(&self) -> usize {
        match self.family {
            Family::TypeA => self.n.saturating_sub(1),
            Family::TypeB => self.n,
        }
    }
}

impl fmt::Display for Ambient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.family {
            Family::TypeA => write!(f, "S_{}", self.n),
            Family::TypeB => write!(f, "B_{}", self.n),
        }
    }
}

/// An element of the intersection lattice of `S_n` or `B_n`.
///
/// `Ord` is the canonical serialization order used for every deterministic
/// choice in the crate.
pub trait Flat: Clone + Eq + Ord + Hash + Debug + Send + Sync + 'static {
    type Face: CoxeterFace<Flat = Self>;
    const FAMILY: Family;

    /// The whole ambient space on `n` coordinates.
    fn full(n: usize) -> Self;
    fn n(&self) -> usize;
    /// Dimension inside the essential ambient space.
    fn dim(&self) -> usize;
    fn meet(&self, other: &Self) -> Self;
    /// Rewrite `self`, which must lie inside `host`, in the contracted
    /// coordinates of `host` (one coordinate per block, labelled by block
    /// minimum).
    fn recoordinate(&self, host: &Self) -> Self;
    /// The hyperplanes of the host reflection arrangement, in canonical order.
    fn hyperplanes(n: usize) -> Vec<Self>;
    /// Coefficients of a linear form cutting out `self`, if it is a hyperplane.
    fn linear_form(&self) -> Option<Vec<i64>>;

    fn ambient_dim(n: usize) -> usize {
        Ambient::new(Self::FAMILY, n).essential_dim()
    }

    /// Lattice order: `self <= other` iff `self` contains `other`.
    fn leq(&self, other: &Self) -> bool {
        self.meet(other) == *other
    }

    fn is_full(&self) -> bool {
        self.dim() == Self::ambient_dim(self.n())
    }

    fn is_hyperplane(&self) -> bool {
        self.n() > 0 && self.dim() + 1 == Self::ambient_dim(self.n())
    }

    fn ambient(&self) -> Ambient {
        Ambient::new(Self::FAMILY, self.n())
    }
}

/// Union-find with an optional parity on every link and a poison flag
/// per class (used for "this class is forced to zero").
struct ParityForest {
    parent: Vec<usize>,
    parity: Vec<bool>,
    poisoned: Vec<bool>,
}

impl ParityForest {
    fn new(n: usize) -> Self {
        Self { parent: (0..n).collect(), parity: vec![false; n], poisoned: vec![false; n] }
    }

    /// Root of `i` and the parity of the path from `i` to it.
    fn find(&mut self, i: usize) -> (usize, bool) {
        let p = self.parent[i];
        if p == i {
            return (i, false);
        }
        let (root, up) = self.find(p);
        self.parent[i] = root;
        self.parity[i] ^= up;
        (root, self.parity[i])
    }

    /// Record `value(i) = (-1)^odd * value(j)`.
    fn union(&mut self, i: usize, j: usize, odd: bool) {
        let (ri, pi) = self.find(i);
        let (rj, pj) = self.find(j);
        if ri == rj {
            if pi ^ pj != odd {
                self.poisoned[ri] = true;
            }
            return;
        }
        self.parent[ri] = rj;
        self.parity[ri] = pi ^ pj ^ odd;
        self.poisoned[rj] |= self.poisoned[ri];
    }

    fn poison(&mut self, i: usize) {
        let (r, _) = self.find(i);
        self.poisoned[r] = true;
    }

    fn is_poisoned(&mut self, i: usize) -> bool {
        let (r, _) = self.find(i);
        self.poisoned[r]
    }
}

/// A set partition of `{0, .., n-1}`: the subspace where coordinates in a
/// common block agree.
///
/// Stored as a restricted growth string: `labels[i]` is the index of the
/// block containing `i`, blocks numbered by their minimum.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SubspaceA {
    labels: Vec<usize>,
}

impl SubspaceA {
    /// Canonicalize an arbitrary block labelling.
    pub fn from_labels(raw: &[usize]) -> Self {
        let mut seen: HashMap<usize, usize> = HashMap::new();
        let labels = raw
            .iter()
            .map(|l| {
                let next = seen.len();
                *seen.entry(*l).or_insert(next)
            })
            .collect();
        Self { labels }
    }

    /// Blocks may omit singletons.
    pub fn from_blocks(n: usize, blocks: &[Vec<usize>]) -> Result<Self, ArrangementError> {
        let mut raw: Vec<Option<usize>> = vec![None; n];
        for (b, block) in blocks.iter().enumerate() {
            if block.is_empty() {
                return Err(ArrangementError::InvalidSubspace("empty block".into()));
            }
            for &i in block {
                let slot = raw.get_mut(i).ok_or_else(|| {
                    ArrangementError::InvalidSubspace(format!("coordinate {} out of range", i + 1))
                })?;
                if slot.is_some() {
                    return Err(ArrangementError::InvalidSubspace(format!(
                        "coordinate {} appears twice",
                        i + 1
                    )));
                }
                *slot = Some(b);
            }
        }
        let labels: Vec<usize> = raw
            .iter()
            .enumerate()
            .map(|(i, l)| l.unwrap_or(blocks.len() + i))
            .collect();
        Ok(Self::from_labels(&labels))
    }

    /// The subspace `x_i = x_j`.
    pub fn hyperplane(n: usize, i: usize, j: usize) -> Self {
        assert!(i != j && i < n && j < n);
        Self::from_blocks(n, &[vec![i, j]]).expect("valid hyperplane")
    }

    pub fn labels(&self) -> &[usize] {
        &self.labels
    }

    pub fn block_count(&self) -> usize {
        self.labels.iter().max().map_or(0, |m| m + 1)
    }

    /// Blocks ascending internally, ordered by minimum.
    pub fn blocks(&self) -> Vec<Vec<usize>> {
        let mut blocks = vec![Vec::new(); self.block_count()];
        for (i, &l) in self.labels.iter().enumerate() {
            blocks[l].push(i);
        }
        blocks
    }
}

impl Debug for SubspaceA {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let blocks: Vec<String> = self
            .blocks()
            .iter()
            .map(|b| b.iter().map(|i| (i + 1).to_string()).collect::<Vec<_>>().join(""))
            .collect();
        write!(f, "{{{}}}", blocks.join("|"))
    }
}

impl Flat for SubspaceA {
    type Face = FaceA;
    const FAMILY: Family = Family::TypeA;

    fn full(n: usize) -> Self {
        Self { labels: (0..n).collect() }
    }

    fn n(&self) -> usize {
        self.labels.len()
    }

    fn dim(&self) -> usize {
        self.block_count().saturating_sub(1)
    }

    fn meet(&self, other: &Self) -> Self {
        assert_eq!(self.n(), other.n(), "subspaces from different ambients");
        let n = self.n();
        let mut forest = ParityForest::new(n);
        for s in [self, other] {
            let mut first: Vec<Option<usize>> = vec![None; n];
            for (i, &l) in s.labels.iter().enumerate() {
                match first[l] {
                    Some(f) => forest.union(i, f, false),
                    None => first[l] = Some(i),
                }
            }
        }
        let roots: Vec<usize> = (0..n).map(|i| forest.find(i).0).collect();
        Self::from_labels(&roots)
    }

    fn recoordinate(&self, host: &Self) -> Self {
        debug_assert!(host.leq(self), "{self:?} is not inside {host:?}");
        let reps: Vec<usize> = host.blocks().iter().map(|b| self.labels[b[0]]).collect();
        Self::from_labels(&reps)
    }

    fn hyperplanes(n: usize) -> Vec<Self> {
        let mut out = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                out.push(Self::hyperplane(n, i, j));
            }
        }
        out
    }

    fn linear_form(&self) -> Option<Vec<i64>> {
        if !self.is_hyperplane() {
            return None;
        }
        let block = self.blocks().into_iter().find(|b| b.len() == 2)?;
        let mut form = vec![0; self.n()];
        form[block[0]] = 1;
        form[block[1]] = -1;
        Some(form)
    }
}

/// State of one coordinate of a type B subspace.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Coord {
    Zero,
    /// Member of block `block`; `negated` is the sign relative to the
    /// block minimum, which is never negated.
    Block { block: usize, negated: bool },
}

/// A subspace of `R^n` from the lattice of `B_n`: a zero set plus signed
/// blocks.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SubspaceB {
    coords: Vec<Coord>,
}

/// A block of a type B subspace together with the sign of each member.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignedBlock {
    pub members: Vec<usize>,
    /// `true` marks a negated member.
    pub negated: Vec<bool>,
}

impl SubspaceB {
    /// Canonicalize: renumber blocks by minimum, flip signs so every block
    /// minimum is positive.
    fn canonical(raw: &[Coord]) -> Self {
        let mut ids: HashMap<usize, (usize, bool)> = HashMap::new();
        let coords = raw
            .iter()
            .map(|c| match *c {
                Coord::Zero => Coord::Zero,
                Coord::Block { block, negated } => {
                    let next = ids.len();
                    let (id, base) = *ids.entry(block).or_insert((next, negated));
                    Coord::Block { block: id, negated: negated ^ base }
                }
            })
            .collect();
        Self { coords }
    }

    /// Build from a zero set and signed blocks; omitted coordinates become
    /// singleton blocks.
    pub fn from_parts(
        n: usize,
        zero: &[usize],
        blocks: &[SignedBlock],
    ) -> Result<Self, ArrangementError> {
        let mut raw: Vec<Option<Coord>> = vec![None; n];
        let mut claim = |i: usize, c: Coord| -> Result<(), ArrangementError> {
            let slot = raw.get_mut(i).ok_or_else(|| {
                ArrangementError::InvalidSubspace(format!("coordinate {} out of range", i + 1))
            })?;
            if slot.is_some() {
                return Err(ArrangementError::InvalidSubspace(format!(
                    "coordinate {} appears twice",
                    i + 1
                )));
            }
            *slot = Some(c);
            Ok(())
        };
        for &i in zero {
            claim(i, Coord::Zero)?;
        }
        for (b, block) in blocks.iter().enumerate() {
            if block.members.is_empty() || block.members.len() != block.negated.len() {
                return Err(ArrangementError::InvalidSubspace(
                    "signed block needs one sign per member".into(),
                ));
            }
            for (&i, &negated) in block.members.iter().zip(&block.negated) {
                claim(i, Coord::Block { block: b, negated })?;
            }
        }
        let coords: Vec<Coord> = raw
            .iter()
            .enumerate()
            .map(|(i, c)| c.unwrap_or(Coord::Block { block: blocks.len() + i, negated: false }))
            .collect();
        Ok(Self::canonical(&coords))
    }

    /// The hyperplane `x_i = x_j` (`negated == false`) or `x_i = -x_j`.
    pub fn pair_hyperplane(n: usize, i: usize, j: usize, negated: bool) -> Self {
        assert!(i != j && i < n && j < n);
        let block = SignedBlock { members: vec![i, j], negated: vec![false, negated] };
        Self::from_parts(n, &[], &[block]).expect("valid hyperplane")
    }

    /// The hyperplane `x_i = 0`.
    pub fn coordinate_hyperplane(n: usize, i: usize) -> Self {
        assert!(i < n);
        Self::from_parts(n, &[i], &[]).expect("valid hyperplane")
    }

    pub fn coords(&self) -> &[Coord] {
        &self.coords
    }

    pub fn zero_set(&self) -> Vec<usize> {
        (0..self.n()).filter(|&i| self.coords[i] == Coord::Zero).collect()
    }

    /// Signed blocks ordered by minimum; singletons included.
    pub fn signed_blocks(&self) -> Vec<SignedBlock> {
        let mut blocks: Vec<SignedBlock> =
            vec![SignedBlock { members: Vec::new(), negated: Vec::new() }; self.block_count()];
        for (i, c) in self.coords.iter().enumerate() {
            if let Coord::Block { block, negated } = *c {
                blocks[block].members.push(i);
                blocks[block].negated.push(negated);
            }
        }
        blocks
    }

    pub fn block_count(&self) -> usize {
        self.coords
            .iter()
            .filter_map(|c| match c {
                Coord::Block { block, .. } => Some(block + 1),
                Coord::Zero => None,
            })
            .max()
            .unwrap_or(0)
    }
}

impl Debug for SubspaceB {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let zero: Vec<String> = self.zero_set().iter().map(|i| (i + 1).to_string()).collect();
        let blocks: Vec<String> = self
            .signed_blocks()
            .iter()
            .map(|b| {
                b.members
                    .iter()
                    .zip(&b.negated)
                    .map(|(i, &neg)| format!("{}{}", if neg { "-" } else { "" }, i + 1))
                    .collect::<Vec<_>>()
                    .join(",")
            })
            .collect();
        write!(f, "0:{{{}}} {}", zero.join(","), blocks.join("|"))
    }
}

impl Flat for SubspaceB {
    type Face = FaceB;
    const FAMILY: Family = Family::TypeB;

    fn full(n: usize) -> Self {
        Self { coords: (0..n).map(|i| Coord::Block { block: i, negated: false }).collect() }
    }

    fn n(&self) -> usize {
        self.coords.len()
    }

    fn dim(&self) -> usize {
        self.block_count()
    }

    fn meet(&self, other: &Self) -> Self {
        assert_eq!(self.n(), other.n(), "subspaces from different ambients");
        let n = self.n();
        let mut forest = ParityForest::new(n);
        for s in [self, other] {
            let mut first: Vec<Option<usize>> = vec![None; n];
            for (i, c) in s.coords.iter().enumerate() {
                match *c {
                    Coord::Zero => forest.poison(i),
                    Coord::Block { block, negated } => match first[block] {
                        // the minimum of a block is positive, so the member's
                        // own sign is its parity against the minimum
                        Some(f) => forest.union(i, f, negated),
                        None => first[block] = Some(i),
                    },
                }
            }
        }
        let raw: Vec<Coord> = (0..n)
            .map(|i| {
                if forest.is_poisoned(i) {
                    Coord::Zero
                } else {
                    let (root, odd) = forest.find(i);
                    Coord::Block { block: root, negated: odd }
                }
            })
            .collect();
        Self::canonical(&raw)
    }

    fn recoordinate(&self, host: &Self) -> Self {
        debug_assert!(host.leq(self), "{self:?} is not inside {host:?}");
        let raw: Vec<Coord> = host
            .signed_blocks()
            .iter()
            .map(|b| self.coords[b.members[0]])
            .collect();
        Self::canonical(&raw)
    }

    fn hyperplanes(n: usize) -> Vec<Self> {
        let mut out = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                out.push(Self::pair_hyperplane(n, i, j, false));
                out.push(Self::pair_hyperplane(n, i, j, true));
            }
        }
        out.extend((0..n).map(|i| Self::coordinate_hyperplane(n, i)));
        out
    }

    fn linear_form(&self) -> Option<Vec<i64>> {
        if !self.is_hyperplane() {
            return None;
        }
        let mut form = vec![0; self.n()];
        let zero = self.zero_set();
        if let [i] = zero[..] {
            form[i] = 1;
            return Some(form);
        }
        let block = self.signed_blocks().into_iter().find(|b| b.members.len() == 2)?;
        form[block.members[0]] = 1;
        form[block.members[1]] = if block.negated[1] { 1 } else { -1 };
        Some(form)
    }
}

/// A finite antichain of proper subspaces from the lattice of `S_n` or `B_n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Arrangement<S: Flat> {
    n: usize,
    subspaces: Vec<S>,
}

/// `A / A`: the restricted arrangement written in the coordinates of its
/// host subspace.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Restriction<S: Flat> {
    pub host: S,
    pub arrangement: Arrangement<S>,
}

impl<S: Flat> Arrangement<S> {
    pub fn new(n: usize, subspaces: Vec<S>) -> Result<Self, ArrangementError> {
        for (index, s) in subspaces.iter().enumerate() {
            if s.n() != n {
                return Err(ArrangementError::AmbientMismatch { index, expected: n, found: s.n() });
            }
            if s.is_full() {
                return Err(ArrangementError::FullSpace(index));
            }
        }
        for (i, s) in subspaces.iter().enumerate() {
            for (j, t) in subspaces.iter().enumerate() {
                if i != j && s.leq(t) {
                    return Err(ArrangementError::NotAntichain(i, j));
                }
            }
        }
        Ok(Self { n, subspaces })
    }

    pub fn empty(n: usize) -> Self {
        Self { n, subspaces: Vec::new() }
    }

    /// The whole reflection arrangement `S_n` or `B_n`.
    pub fn reflection(n: usize) -> Self {
        Self { n, subspaces: S::hyperplanes(n) }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn ambient(&self) -> Ambient {
        Ambient::new(S::FAMILY, self.n)
    }

    pub fn subspaces(&self) -> &[S] {
        &self.subspaces
    }

    pub fn len(&self) -> usize {
        self.subspaces.len()
    }

    pub fn is_empty(&self) -> bool {
        self.subspaces.is_empty()
    }

    /// `d(A)`: the largest dimension of a member; `None` when empty.
    pub fn max_dim(&self) -> Option<usize> {
        self.subspaces.iter().map(Flat::dim).max()
    }

    pub fn is_hyperplane_arrangement(&self) -> bool {
        self.subspaces.iter().all(Flat::is_hyperplane)
    }

    pub fn lattice(&self) -> IntersectionLattice<S> {
        IntersectionLattice::build(self)
    }

    pub fn char_poly(&self) -> IntPolynomial {
        self.lattice().char_poly()
    }

    /// `T(A; x) = x^dim - chi(A; x)`
    pub fn tail_poly(&self) -> IntPolynomial {
        &IntPolynomial::monomial(1, S::ambient_dim(self.n)) - &self.char_poly()
    }

    pub fn deletion(&self, index: usize) -> Result<Self, ArrangementError> {
        if index >= self.subspaces.len() {
            return Err(ArrangementError::IndexOutOfRange { index, len: self.subspaces.len() });
        }
        let mut subspaces = self.subspaces.clone();
        subspaces.remove(index);
        Ok(Self { n: self.n, subspaces })
    }

    /// Whether `s` is an intersection of members (or the full space).
    pub fn lattice_contains(&self, s: &S) -> bool {
        let above = self
            .subspaces
            .iter()
            .filter(|b| b.leq(s))
            .fold(S::full(self.n), |acc, b| acc.meet(b));
        above == *s
    }

    /// Inclusion-maximal intersections `s ∩ B` strictly below `s`, contracted
    /// into the coordinates of `s`.
    pub fn restriction(&self, s: &S) -> Result<Restriction<S>, ArrangementError> {
        if s.n() != self.n {
            return Err(ArrangementError::AmbientMismatch { index: 0, expected: self.n, found: s.n() });
        }
        if !self.lattice_contains(s) {
            return Err(ArrangementError::NotInLattice);
        }
        let mut candidates: Vec<S> = Vec::new();
        for b in &self.subspaces {
            let m = s.meet(b);
            if m != *s && !candidates.contains(&m) {
                candidates.push(m);
            }
        }
        let maximal: Vec<S> = candidates
            .iter()
            .filter(|c| !candidates.iter().any(|d| d != *c && d.leq(c)))
            .cloned()
            .collect();
        let mut contracted: Vec<S> = maximal.iter().map(|c| c.recoordinate(s)).collect();
        contracted.sort();
        let arrangement = Self { n: s.recoordinate(s).n(), subspaces: contracted };
        Ok(Restriction { host: s.clone(), arrangement })
    }

    /// Restriction to the member at `index`.
    pub fn restriction_at(&self, index: usize) -> Result<Restriction<S>, ArrangementError> {
        let s = self
            .subspaces
            .get(index)
            .ok_or(ArrangementError::IndexOutOfRange { index, len: self.subspaces.len() })?
            .clone();
        self.restriction(&s)
    }

    /// Members sorted into canonical order.
    pub fn canonicalized(&self) -> Self {
        let mut subspaces = self.subspaces.clone();
        subspaces.sort();
        Self { n: self.n, subspaces }
    }
}

/// The intersection lattice, elements sorted by decreasing dimension so
/// that the full space comes first.
#[derive(Clone, Debug)]
pub struct IntersectionLattice<S: Flat> {
    elements: Vec<S>,
    mobius: Vec<BigInt>,
    index: HashMap<S, usize>,
}

impl<S: Flat> IntersectionLattice<S> {
    pub fn build(a: &Arrangement<S>) -> Self {
        let mut elements = vec![S::full(a.n)];
        let mut index: HashMap<S, usize> = HashMap::from([(elements[0].clone(), 0)]);
        let mut frontier: Vec<S> = Vec::new();
        for s in &a.subspaces {
            if !index.contains_key(s) {
                index.insert(s.clone(), elements.len());
                elements.push(s.clone());
                frontier.push(s.clone());
            }
        }
        // every element is a meet of atoms, so meeting with atoms suffices
        while let Some(y) = frontier.pop() {
            for atom in &a.subspaces {
                let m = y.meet(atom);
                if !index.contains_key(&m) {
                    index.insert(m.clone(), elements.len());
                    elements.push(m.clone());
                    frontier.push(m);
                }
            }
        }
        elements.sort_by(|s, t| t.dim().cmp(&s.dim()).then_with(|| s.cmp(t)));
        let index: HashMap<S, usize> =
            elements.iter().cloned().enumerate().map(|(i, s)| (s, i)).collect();
        let mut mobius: Vec<BigInt> = Vec::with_capacity(elements.len());
        for (j, y) in elements.iter().enumerate() {
            if j == 0 {
                mobius.push(BigInt::one());
                continue;
            }
            let below: BigInt = elements[..j]
                .iter()
                .zip(&mobius)
                .filter(|(z, _)| z.leq(y))
                .map(|(_, mu)| mu)
                .sum();
            mobius.push(-below);
        }
        Self { elements, mobius, index }
    }

    pub fn elements(&self) -> &[S] {
        &self.elements
    }

    /// `mu(0^, Y)` for each element, parallel to [`Self::elements`].
    pub fn mobius(&self) -> &[BigInt] {
        &self.mobius
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn position(&self, s: &S) -> Option<usize> {
        self.index.get(s).copied()
    }

    pub fn mobius_of(&self, s: &S) -> Option<&BigInt> {
        self.position(s).map(|i| &self.mobius[i])
    }

    pub fn char_poly(&self) -> IntPolynomial {
        self.elements
            .iter()
            .zip(&self.mobius)
            .fold(IntPolynomial::zero(), |acc, (y, mu)| {
                &acc + &IntPolynomial::monomial(mu.clone(), y.dim())
            })
    }
}

/// Random proper type A subspace on `n >= 2` coordinates.
pub fn random_subspace_a<R: Rng + ?Sized>(n: usize, rng: &mut R) -> SubspaceA {
    assert!(n >= 2);
    loop {
        // bias toward few blocks so that low-dimensional flats show up too
        let blocks = rng.gen_range(1..n);
        let labels: Vec<usize> = (0..n).map(|_| rng.gen_range(0..blocks)).collect();
        let s = SubspaceA::from_labels(&labels);
        if !s.is_full() {
            return s;
        }
    }
}

/// Random proper type B subspace on `n >= 1` coordinates.
pub fn random_subspace_b<R: Rng + ?Sized>(n: usize, rng: &mut R) -> SubspaceB {
    assert!(n >= 1);
    loop {
        let blocks = rng.gen_range(1..=n);
        let raw: Vec<Coord> = (0..n)
            .map(|_| {
                if rng.gen_bool(0.25) {
                    Coord::Zero
                } else {
                    Coord::Block { block: rng.gen_range(0..blocks), negated: rng.gen_bool(0.5) }
                }
            })
            .collect();
        let s = SubspaceB::canonical(&raw);
        if !s.is_full() {
            return s;
        }
    }
}

/// Greedy random antichain: draw up to `attempts` subspaces with `draw`,
/// keep those incomparable with everything kept so far. Never empty.
pub fn random_antichain<S, R, G>(n: usize, rng: &mut R, attempts: usize, mut draw: G) -> Arrangement<S>
where
    S: Flat,
    R: Rng + ?Sized,
    G: FnMut(&mut R) -> S,
{
    let mut kept: Vec<S> = Vec::new();
    for _ in 0..attempts.max(1) {
        let s = draw(rng);
        if kept.iter().all(|t| !t.leq(&s) && !s.leq(t)) {
            kept.push(s);
        }
    }
    Arrangement::new(n, kept).expect("antichain by construction")
}

/// Random nonempty set of hyperplanes of `S_n` or `B_n`.
pub fn random_hyperplane_arrangement<S: Flat, R: Rng + ?Sized>(n: usize, rng: &mut R) -> Arrangement<S> {
    let all = S::hyperplanes(n);
    loop {
        let chosen: Vec<S> = all.iter().filter(|_| rng.gen_bool(0.4)).cloned().collect();
        if !chosen.is_empty() {
            return Arrangement::new(n, chosen).expect("distinct hyperplanes form an antichain");
        }
    }
}

/// Every proper element of the lattice of `S_n` / `B_n`.
pub fn proper_flats<S: Flat>(n: usize) -> Vec<S> {
    let lattice = Arrangement::<S>::reflection(n).lattice();
    lattice.elements().iter().filter(|s| !s.is_full()).cloned().collect()
}
