//! Faces of the Coxeter complexes `Δ_{S_n}` and `Δ_{B_n}`, link
//! subcomplexes, and the enumerative data attached to them.
//!
//! A face of `Δ_{S_n}` is an ordered set partition `(B_1, .., B_k)` with
//! `k >= 2`, the cell where coordinates are constant on blocks and
//! increase from block to block. It is stored as the surjection
//! `i -> index of its block`.
//!
//! A face of `Δ_{B_n}` is a zero set plus ordered signed blocks. It is
//! stored as a value vector `v` with `v_i = 0` on the zero set and
//! `v_i = ±t` for members of the `t`-th block, so `v` is itself a point of
//! the open cell.

use std::collections::{HashMap, HashSet};
use std::fmt::Debug;
use std::hash::Hash;

use num_bigint::BigInt;
use num_integer::binomial;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::arrangement::{Arrangement, Coord, Flat, SignedBlock, SubspaceA, SubspaceB};
use crate::polyseries::{IntPolynomial, RationalSeries};

/// A nonempty face of `Δ_{S_n}` or `Δ_{B_n}`.
///
/// `Ord` is lexicographic on the stored vector and fixes every enumeration
/// order in the crate.
pub trait CoxeterFace: Clone + Eq + Ord + Hash + Debug + Send + Sync + 'static {
    type Flat: Flat<Face = Self>;

    /// Every nonempty face, in lexicographic order.
    fn enumerate(n: usize) -> Vec<Self>;
    fn n(&self) -> usize;
    fn dim(&self) -> usize;
    /// The 0-dimensional faces of this simplex.
    fn vertices(&self) -> Vec<Self>;
    /// Smallest lattice element containing the cell.
    fn support(&self) -> Self::Flat;
    /// Whether the cell lies inside `flat`.
    fn lies_in(&self, flat: &Self::Flat) -> bool;
    /// An integer point in the relative interior of the cell.
    fn point(&self) -> Vec<i64>;
    fn antipode(&self) -> Self;
    /// Carry a face of `Δ_{H/host}`, written in the contracted coordinates
    /// of `host`, back into `Δ_H`.
    fn lift(&self, host: &Self::Flat) -> Self;

    /// The top-dimensional faces.
    fn chambers(n: usize) -> Vec<Self> {
        let top = Self::Flat::ambient_dim(n);
        Self::enumerate(n).into_iter().filter(|f| f.dim() + 1 == top).collect()
    }
}

/// Ordered set partition of `{0, .., n-1}` into at least two blocks.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FaceA {
    ranks: Vec<usize>,
}

impl FaceA {
    /// From ordered blocks covering `{0, .., n-1}`.
    pub fn from_ordered_blocks(n: usize, blocks: &[Vec<usize>]) -> Option<Self> {
        let mut ranks = vec![usize::MAX; n];
        for (r, block) in blocks.iter().enumerate() {
            if block.is_empty() {
                return None;
            }
            for &i in block {
                if *ranks.get(i)? != usize::MAX {
                    return None;
                }
                ranks[i] = r;
            }
        }
        (blocks.len() >= 2 && ranks.iter().all(|&r| r != usize::MAX)).then_some(Self { ranks })
    }

    pub fn ranks(&self) -> &[usize] {
        &self.ranks
    }

    pub fn block_count(&self) -> usize {
        self.ranks.iter().max().map_or(0, |m| m + 1)
    }

    pub fn ordered_blocks(&self) -> Vec<Vec<usize>> {
        let mut blocks = vec![Vec::new(); self.block_count()];
        for (i, &r) in self.ranks.iter().enumerate() {
            blocks[r].push(i);
        }
        blocks
    }
}

impl Debug for FaceA {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let blocks: Vec<String> = self
            .ordered_blocks()
            .iter()
            .map(|b| b.iter().map(|i| (i + 1).to_string()).collect::<Vec<_>>().join(""))
            .collect();
        write!(f, "({})", blocks.join("|"))
    }
}

/// Surjections `[n] -> [k]` for every `k >= min_blocks`, lexicographically.
fn surjective_words(n: usize, min_blocks: usize) -> Vec<Vec<usize>> {
    fn go(
        pos: usize,
        n: usize,
        word: &mut Vec<usize>,
        counts: &mut Vec<usize>,
        min_blocks: usize,
        out: &mut Vec<Vec<usize>>,
    ) {
        if pos == n {
            let used = counts.iter().rposition(|&c| c > 0).map_or(0, |m| m + 1);
            if used >= min_blocks && counts[..used].iter().all(|&c| c > 0) {
                out.push(word.clone());
            }
            return;
        }
        let remaining = n - pos - 1;
        for v in 0..n {
            counts[v] += 1;
            let top = counts.iter().rposition(|&c| c > 0).unwrap_or(0);
            let missing = counts[..=top].iter().filter(|&&c| c == 0).count();
            if missing <= remaining {
                word.push(v);
                go(pos + 1, n, word, counts, min_blocks, out);
                word.pop();
            }
            counts[v] -= 1;
        }
    }
    let mut out = Vec::new();
    go(0, n, &mut Vec::with_capacity(n), &mut vec![0; n], min_blocks, &mut out);
    out
}

impl CoxeterFace for FaceA {
    type Flat = SubspaceA;

    fn enumerate(n: usize) -> Vec<Self> {
        surjective_words(n, 2).into_iter().map(|ranks| Self { ranks }).collect()
    }

    fn n(&self) -> usize {
        self.ranks.len()
    }

    fn dim(&self) -> usize {
        self.block_count() - 2
    }

    fn vertices(&self) -> Vec<Self> {
        (1..self.block_count())
            .map(|t| Self { ranks: self.ranks.iter().map(|&r| usize::from(r >= t)).collect() })
            .collect()
    }

    fn support(&self) -> SubspaceA {
        SubspaceA::from_labels(&self.ranks)
    }

    fn lies_in(&self, flat: &SubspaceA) -> bool {
        // every block of the flat sits inside one block of the face
        let mut rank_of_block: Vec<Option<usize>> = vec![None; flat.block_count()];
        flat.labels().iter().zip(&self.ranks).all(|(&l, &r)| match rank_of_block[l] {
            Some(existing) => existing == r,
            None => {
                rank_of_block[l] = Some(r);
                true
            }
        })
    }

    fn point(&self) -> Vec<i64> {
        self.ranks.iter().map(|&r| r as i64).collect()
    }

    fn antipode(&self) -> Self {
        let top = self.block_count() - 1;
        Self { ranks: self.ranks.iter().map(|&r| top - r).collect() }
    }

    fn lift(&self, host: &SubspaceA) -> Self {
        debug_assert_eq!(self.n(), host.block_count());
        Self { ranks: host.labels().iter().map(|&l| self.ranks[l]).collect() }
    }
}

/// Zero set plus ordered signed blocks; `values[i]` is `0` or `±(block + 1)`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FaceB {
    values: Vec<i64>,
}

impl FaceB {
    /// From a value vector whose absolute values, apart from zero, are
    /// exactly `{1, .., k}` with `k >= 1`.
    pub fn from_values(values: Vec<i64>) -> Option<Self> {
        let k = values.iter().map(|v| v.unsigned_abs()).max()? as usize;
        let mut seen = vec![false; k + 1];
        for v in &values {
            seen[v.unsigned_abs() as usize] = true;
        }
        (k >= 1 && seen[1..].iter().all(|&s| s)).then_some(Self { values })
    }

    pub fn values(&self) -> &[i64] {
        &self.values
    }

    pub fn block_count(&self) -> usize {
        self.values.iter().map(|v| v.unsigned_abs()).max().unwrap_or(0) as usize
    }

    pub fn zero_set(&self) -> Vec<usize> {
        (0..self.values.len()).filter(|&i| self.values[i] == 0).collect()
    }
}

impl Debug for FaceB {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{:?}", self.values)
    }
}

impl CoxeterFace for FaceB {
    type Flat = SubspaceB;

    fn enumerate(n: usize) -> Vec<Self> {
        // choose |v| as a word in {0..n} whose nonzero values are {1..k},
        // then every sign pattern on the nonzero coordinates, and sort
        let mut out = Vec::new();
        for word in surjective_words(n + 1, 1) {
            // words on n+1 letters with a sentinel last coordinate equal to 0
            // give exactly the "0 allowed, 1..k onto" patterns on n letters
            if word[n] != 0 {
                continue;
            }
            let abs = &word[..n];
            if abs.iter().all(|&a| a == 0) {
                continue;
            }
            let support: Vec<usize> = (0..n).filter(|&i| abs[i] != 0).collect();
            for mask in 0u64..(1 << support.len()) {
                let mut values: Vec<i64> = abs.iter().map(|&a| a as i64).collect();
                for (bit, &i) in support.iter().enumerate() {
                    if mask >> bit & 1 == 1 {
                        values[i] = -values[i];
                    }
                }
                out.push(Self { values });
            }
        }
        out.sort();
        out
    }

    fn n(&self) -> usize {
        self.values.len()
    }

    fn dim(&self) -> usize {
        self.block_count() - 1
    }

    fn vertices(&self) -> Vec<Self> {
        (1..=self.block_count() as i64)
            .map(|t| Self {
                values: self
                    .values
                    .iter()
                    .map(|&v| if v.abs() < t { 0 } else { v.signum() })
                    .collect(),
            })
            .collect()
    }

    fn support(&self) -> SubspaceB {
        let coords: Vec<Coord> = self
            .values
            .iter()
            .map(|&v| match v {
                0 => Coord::Zero,
                _ => Coord::Block { block: v.unsigned_abs() as usize, negated: v < 0 },
            })
            .collect();
        let blocks = group_signed(&coords);
        let zero: Vec<usize> = (0..coords.len()).filter(|&i| coords[i] == Coord::Zero).collect();
        SubspaceB::from_parts(self.n(), &zero, &blocks).expect("face support is well formed")
    }

    fn lies_in(&self, flat: &SubspaceB) -> bool {
        let mut first: Vec<Option<i64>> = vec![None; flat.block_count()];
        flat.coords().iter().zip(&self.values).all(|(c, &v)| match *c {
            Coord::Zero => v == 0,
            Coord::Block { block, negated } => {
                let expected = if negated { -v } else { v };
                match first[block] {
                    Some(f) => f == expected,
                    None => {
                        first[block] = Some(expected);
                        true
                    }
                }
            }
        })
    }

    fn point(&self) -> Vec<i64> {
        self.values.clone()
    }

    fn antipode(&self) -> Self {
        Self { values: self.values.iter().map(|v| -v).collect() }
    }

    fn lift(&self, host: &SubspaceB) -> Self {
        debug_assert_eq!(self.n(), host.block_count());
        let values = host
            .coords()
            .iter()
            .map(|c| match *c {
                Coord::Zero => 0,
                Coord::Block { block, negated } => {
                    if negated {
                        -self.values[block]
                    } else {
                        self.values[block]
                    }
                }
            })
            .collect();
        Self { values }
    }
}

fn group_signed(coords: &[Coord]) -> Vec<SignedBlock> {
    let mut groups: Vec<(usize, SignedBlock)> = Vec::new();
    for (i, c) in coords.iter().enumerate() {
        if let Coord::Block { block, negated } = *c {
            match groups.iter_mut().find(|(b, _)| *b == block) {
                Some((_, g)) => {
                    g.members.push(i);
                    g.negated.push(negated);
                }
                None => groups.push((
                    block,
                    SignedBlock { members: vec![i], negated: vec![negated] },
                )),
            }
        }
    }
    groups.into_iter().map(|(_, g)| g).collect()
}

/// Whether the cell of `face` lies in the union of the arrangement.
pub fn face_in_link<S: Flat>(face: &S::Face, a: &Arrangement<S>) -> bool {
    a.subspaces().iter().any(|s| face.lies_in(s))
}

/// Nonempty faces of `Δ_{A,H}` in enumeration order.
pub fn link_faces<S: Flat>(a: &Arrangement<S>) -> Vec<S::Face> {
    if a.is_empty() {
        return Vec::new();
    }
    S::Face::enumerate(a.n())
        .into_iter()
        .filter(|f| face_in_link(f, a))
        .collect()
}

/// `(f_{-1}, f_0, .., f_{d-1})`. The void complex has the empty vector.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct FVector(Vec<u64>);

impl FVector {
    pub fn new(counts: Vec<u64>) -> Self {
        Self(counts)
    }

    pub fn counts(&self) -> &[u64] {
        &self.0
    }

    pub fn is_void(&self) -> bool {
        self.0.is_empty()
    }

    /// One more than the dimension; `None` for the void complex.
    pub fn d(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    /// f-vector of faces given by their dimensions, plus the empty face.
    pub fn from_dims(dims: impl IntoIterator<Item = usize>) -> Self {
        let mut counts = vec![1u64];
        for d in dims {
            if counts.len() < d + 2 {
                counts.resize(d + 2, 0);
            }
            counts[d + 1] += 1;
        }
        Self(counts)
    }

    /// f-vector of the cone, by the join formula.
    pub fn cone(&self) -> Self {
        if self.is_void() {
            return Self(vec![1, 1]);
        }
        let mut counts = self.0.clone();
        counts.push(0);
        for i in (1..counts.len()).rev() {
            counts[i] += counts[i - 1];
        }
        Self(counts)
    }
}

/// `f(Δ_{A,H})`, with the empty face counted whenever `A` is nonempty.
pub fn link_f_vector<S: Flat>(a: &Arrangement<S>) -> FVector {
    if a.is_empty() {
        return FVector::default();
    }
    let f = FVector::from_dims(link_faces(a).iter().map(CoxeterFace::dim));
    let expected = a.max_dim().expect("nonempty") + 1;
    assert_eq!(f.counts().len(), expected, "link of {a:?} has the wrong dimension");
    f
}

/// f-vector of the whole Coxeter complex `Δ_H`.
pub fn coxeter_f_vector<S: Flat>(n: usize) -> FVector {
    FVector::from_dims(S::Face::enumerate(n).iter().map(CoxeterFace::dim))
}

pub fn h_polynomial(f: &FVector) -> IntPolynomial {
    let Some(d) = f.d() else {
        return IntPolynomial::zero();
    };
    f.counts().iter().enumerate().fold(IntPolynomial::zero(), |acc, (i, &c)| {
        let term = IntPolynomial::linear_power(-1, d - i).scale(&BigInt::from(c));
        &acc + &term
    })
}

pub fn reverse_h(f: &FVector) -> IntPolynomial {
    match f.d() {
        Some(d) => h_polynomial(f).reversed(d),
        None => IntPolynomial::zero(),
    }
}

/// `-f_{-1} + f_0 - f_1 + ...`; zero for the void complex.
pub fn reduced_euler(f: &FVector) -> BigInt {
    f.counts().iter().enumerate().fold(BigInt::zero(), |acc, (i, &c)| {
        if i % 2 == 0 {
            acc - c
        } else {
            acc + c
        }
    })
}

/// Number of degree-`m` monomials of `k[Δ]` whose support is a face.
pub fn hilbert_function(f: &FVector, m: usize) -> BigInt {
    if f.is_void() {
        return BigInt::zero();
    }
    if m == 0 {
        return BigInt::one();
    }
    f.counts()
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, &c)| BigInt::from(c) * binomial(BigInt::from(m - 1), BigInt::from(i - 1)))
        .sum()
}

/// `h̄(Δ; x) / (1 - x)^d`
pub fn hilbert_series(f: &FVector) -> RationalSeries {
    match f.d() {
        Some(d) => RationalSeries::new(reverse_h(f), d),
        None => RationalSeries::zero(),
    }
}

/// A simplicial complex given by its facets over vertices `0..vertex_count`.
///
/// No facets is the void complex; a single empty facet is `{∅}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AbstractComplex {
    #[serde(rename = "vertices")]
    vertex_count: usize,
    facets: Vec<Vec<usize>>,
}

impl AbstractComplex {
    /// Sorts every facet and the facet list. Facets are kept as given, so
    /// callers pass maximal faces.
    pub fn new(vertex_count: usize, facets: Vec<Vec<usize>>) -> Self {
        let mut facets: Vec<Vec<usize>> = facets
            .into_iter()
            .map(|mut f| {
                f.sort_unstable();
                f.dedup();
                f
            })
            .collect();
        facets.sort();
        facets.dedup();
        debug_assert!(facets.iter().flatten().all(|&v| v < vertex_count));
        Self { vertex_count, facets }
    }

    pub fn void() -> Self {
        Self { vertex_count: 0, facets: Vec::new() }
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn facets(&self) -> &[Vec<usize>] {
        &self.facets
    }

    pub fn is_pure(&self) -> bool {
        self.facets.windows(2).all(|w| w[0].len() == w[1].len())
    }

    /// Cardinality of every facet, if pure.
    pub fn facet_size(&self) -> Option<usize> {
        let first = self.facets.first()?.len();
        self.is_pure().then_some(first)
    }

    /// Adds one new vertex to every facet.
    pub fn cone(&self) -> Self {
        let apex = self.vertex_count;
        let facets = if self.facets.is_empty() {
            vec![vec![apex]]
        } else {
            self.facets
                .iter()
                .map(|f| {
                    let mut g = f.clone();
                    g.push(apex);
                    g
                })
                .collect()
        };
        Self::new(apex + 1, facets)
    }

    pub fn double_cone(&self) -> Self {
        self.cone().cone()
    }

    /// f-vector by listing every subset of every facet.
    pub fn f_vector(&self) -> FVector {
        let mut faces: HashSet<Vec<usize>> = HashSet::new();
        for facet in &self.facets {
            for mask in 0u64..(1 << facet.len()) {
                let face: Vec<usize> = facet
                    .iter()
                    .enumerate()
                    .filter(|(bit, _)| mask >> bit & 1 == 1)
                    .map(|(_, &v)| v)
                    .collect();
                faces.insert(face);
            }
        }
        let Some(top) = faces.iter().map(Vec::len).max() else {
            return FVector::default();
        };
        let mut counts = vec![0u64; top + 1];
        for face in &faces {
            counts[face.len()] += 1;
        }
        FVector::new(counts)
    }
}

/// A subcomplex of a Coxeter complex with its vertices indexed.
#[derive(Clone, Debug)]
pub struct FaceComplex<F: CoxeterFace> {
    vertices: Vec<F>,
    index: HashMap<F, usize>,
    facets: Vec<F>,
    complex: AbstractComplex,
}

impl<F: CoxeterFace> FaceComplex<F> {
    /// From the full list of nonempty faces of a subcomplex.
    pub fn from_faces(faces: &[F]) -> Self {
        let mut vertices: Vec<F> = faces.iter().filter(|f| f.dim() == 0).cloned().collect();
        vertices.sort();
        let index: HashMap<F, usize> =
            vertices.iter().cloned().enumerate().map(|(i, v)| (v, i)).collect();
        let mut covered: HashSet<Vec<usize>> = HashSet::new();
        let indexed: Vec<(F, Vec<usize>)> = faces
            .iter()
            .map(|f| {
                let mut ids: Vec<usize> = f.vertices().iter().map(|v| index[v]).collect();
                ids.sort_unstable();
                (f.clone(), ids)
            })
            .collect();
        for (_, ids) in &indexed {
            for skip in 0..ids.len() {
                let mut ridge = ids.clone();
                ridge.remove(skip);
                covered.insert(ridge);
            }
        }
        let mut facet_pairs: Vec<(F, Vec<usize>)> =
            indexed.into_iter().filter(|(_, ids)| !covered.contains(ids)).collect();
        facet_pairs.sort();
        let facets: Vec<F> = facet_pairs.iter().map(|(f, _)| f.clone()).collect();
        let facet_sets: Vec<Vec<usize>> = facet_pairs.into_iter().map(|(_, ids)| ids).collect();
        let complex = if faces.is_empty() {
            // the link of a point: only the empty face
            AbstractComplex::new(0, vec![Vec::new()])
        } else {
            AbstractComplex::new(vertices.len(), facet_sets)
        };
        Self { vertices, index, facets, complex }
    }

    pub fn void() -> Self {
        Self {
            vertices: Vec::new(),
            index: HashMap::new(),
            facets: Vec::new(),
            complex: AbstractComplex::void(),
        }
    }

    pub fn vertices(&self) -> &[F] {
        &self.vertices
    }

    /// Maximal faces, in face order.
    pub fn facet_faces(&self) -> &[F] {
        &self.facets
    }

    pub fn complex(&self) -> &AbstractComplex {
        &self.complex
    }

    pub fn vertex_index(&self, v: &F) -> Option<usize> {
        self.index.get(v).copied()
    }

    /// Sorted vertex indices of a face, if all its vertices belong here.
    pub fn face_indices(&self, face: &F) -> Option<Vec<usize>> {
        let mut ids = face
            .vertices()
            .iter()
            .map(|v| self.vertex_index(v))
            .collect::<Option<Vec<_>>>()?;
        ids.sort_unstable();
        Some(ids)
    }
}

/// `Δ_H` as an indexed complex.
pub fn coxeter_complex<S: Flat>(n: usize) -> FaceComplex<S::Face> {
    FaceComplex::from_faces(&S::Face::enumerate(n))
}

/// `Δ_{A,H}` as an indexed complex; void when `A` is empty.
pub fn link_complex<S: Flat>(a: &Arrangement<S>) -> FaceComplex<S::Face> {
    if a.is_empty() {
        return FaceComplex::void();
    }
    FaceComplex::from_faces(&link_faces(a))
}

pub fn link_abstract<S: Flat>(a: &Arrangement<S>) -> AbstractComplex {
    link_complex(a).complex().clone()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arrangement::{random_antichain, random_subspace_a, random_subspace_b};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn fv(c: &[u64]) -> FVector {
        FVector::new(c.to_vec())
    }

    fn poly(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64s(c)
    }

    fn stirling2(n: usize, k: usize) -> u64 {
        match (n, k) {
            (0, 0) => 1,
            (_, 0) | (0, _) => 0,
            _ => k as u64 * stirling2(n - 1, k) + stirling2(n - 1, k - 1),
        }
    }

    fn factorial(n: usize) -> u64 {
        (1..=n as u64).product()
    }

    #[test]
    fn type_a_face_counts() {
        let faces = FaceA::enumerate(3);
        assert_eq!(faces.iter().filter(|f| f.block_count() == 2).count(), 6);
        assert_eq!(faces.iter().filter(|f| f.block_count() == 3).count(), 6);
        assert_eq!(FaceA::enumerate(2).len(), 2);
        assert_eq!(coxeter_f_vector::<SubspaceA>(4), fv(&[1, 14, 36, 24]));
        for n in 2..=6 {
            let faces = FaceA::enumerate(n);
            for k in 2..=n {
                let count = faces.iter().filter(|f| f.block_count() == k).count() as u64;
                assert_eq!(count, stirling2(n, k) * factorial(k));
            }
            assert!(faces.windows(2).all(|w| w[0] < w[1]), "not in lexicographic order");
        }
    }

    #[test]
    fn type_b_face_counts() {
        assert_eq!(coxeter_f_vector::<SubspaceB>(1), fv(&[1, 2]));
        assert_eq!(coxeter_f_vector::<SubspaceB>(2), fv(&[1, 8, 8]));
        assert_eq!(FaceB::chambers(3).len(), 48);
        let faces = FaceB::enumerate(3);
        assert!(faces.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn spheres_have_the_right_euler_characteristic() {
        for n in 2..=6 {
            let f = coxeter_f_vector::<SubspaceA>(n);
            let sign = if (n - 2) % 2 == 0 { 1 } else { -1 };
            assert_eq!(reduced_euler(&f), BigInt::from(sign));
        }
        for n in 1..=4 {
            let f = coxeter_f_vector::<SubspaceB>(n);
            let sign = if (n - 1) % 2 == 0 { 1 } else { -1 };
            assert_eq!(reduced_euler(&f), BigInt::from(sign));
        }
    }

    #[test]
    fn supports() {
        let face = FaceA::from_ordered_blocks(3, &[vec![0, 1], vec![2]]).unwrap();
        assert_eq!(face.support(), SubspaceA::hyperplane(3, 0, 1));
        let chamber = FaceA::from_ordered_blocks(3, &[vec![0], vec![1], vec![2]]).unwrap();
        assert!(chamber.support().is_full());
        let b = FaceB::from_values(vec![0, 1, -1]).unwrap();
        let expected = SubspaceB::from_parts(
            3,
            &[0],
            &[SignedBlock { members: vec![1, 2], negated: vec![false, true] }],
        )
        .unwrap();
        assert_eq!(b.support(), expected);
    }

    #[test]
    fn link_membership() {
        let pi12 = Arrangement::new(3, vec![SubspaceA::hyperplane(3, 0, 1)]).unwrap();
        let face = FaceA::from_ordered_blocks(3, &[vec![0, 1], vec![2]]).unwrap();
        assert!(face_in_link(&face, &pi12));
        let chamber = FaceA::from_ordered_blocks(3, &[vec![0], vec![1], vec![2]]).unwrap();
        assert!(!face_in_link(&chamber, &Arrangement::<SubspaceA>::reflection(3)));
        let anti = Arrangement::new(3, vec![SubspaceB::pair_hyperplane(3, 0, 1, true)]).unwrap();
        let b = FaceB::from_values(vec![0, 0, 1]).unwrap();
        assert!(face_in_link(&b, &anti));
    }

    #[test]
    fn lies_in_agrees_with_support_order() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let faces_a = FaceA::enumerate(4);
        for _ in 0..50 {
            let s = random_subspace_a(4, &mut rng);
            for f in &faces_a {
                assert_eq!(f.lies_in(&s), s.leq(&f.support()));
            }
        }
        let faces_b = FaceB::enumerate(3);
        for _ in 0..50 {
            let s = random_subspace_b(3, &mut rng);
            for f in &faces_b {
                assert_eq!(f.lies_in(&s), s.leq(&f.support()), "{f:?} {s:?}");
            }
        }
    }

    #[test]
    fn link_f_vectors() {
        assert_eq!(link_f_vector(&Arrangement::<SubspaceA>::reflection(3)), fv(&[1, 6]));
        let single = Arrangement::new(3, vec![SubspaceA::hyperplane(3, 0, 1)]).unwrap();
        assert_eq!(link_f_vector(&single), fv(&[1, 2]));
        assert!(link_f_vector(&Arrangement::<SubspaceA>::empty(3)).is_void());
        // the origin alone: only the empty face
        let origin = Arrangement::new(3, vec![SubspaceA::from_labels(&[0, 0, 0])]).unwrap();
        assert_eq!(link_f_vector(&origin), fv(&[1]));
    }

    #[test]
    fn h_polynomial_examples() {
        assert_eq!(h_polynomial(&fv(&[1, 6, 6])), poly(&[1, 4, 1]));
        assert_eq!(h_polynomial(&fv(&[1, 6])), poly(&[5, 1]));
        assert_eq!(h_polynomial(&fv(&[1, 1])), poly(&[0, 1]));
        assert_eq!(reverse_h(&fv(&[1, 6, 6])), poly(&[1, 4, 1]));
        assert_eq!(reverse_h(&fv(&[1, 6])), poly(&[1, 5]));
        assert_eq!(reverse_h(&fv(&[1, 8, 8])), poly(&[1, 6, 1]));
        assert!(reverse_h(&FVector::default()).is_zero());
    }

    #[test]
    fn reduced_euler_examples() {
        assert_eq!(reduced_euler(&fv(&[1, 6])), BigInt::from(5));
        assert_eq!(reduced_euler(&fv(&[1, 6, 6])), BigInt::from(-1));
        assert_eq!(reduced_euler(&FVector::default()), BigInt::zero());
    }

    #[test]
    fn cones() {
        let hexagon = coxeter_complex::<SubspaceA>(3);
        assert_eq!(hexagon.complex().f_vector(), fv(&[1, 6, 6]));
        assert_eq!(hexagon.complex().cone().f_vector(), fv(&[1, 7, 12, 6]));
        assert_eq!(AbstractComplex::void().cone().f_vector(), fv(&[1, 1]));
        assert_eq!(fv(&[1, 6, 6]).cone(), fv(&[1, 7, 12, 6]));
        assert_eq!(FVector::default().cone(), fv(&[1, 1]));
        let point_link = AbstractComplex::new(0, vec![vec![]]);
        assert_eq!(point_link.f_vector(), fv(&[1]));
        assert_eq!(point_link.double_cone().f_vector(), fv(&[1, 2, 1]));
    }

    #[test]
    fn cone_keeps_reverse_h() {
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        for _ in 0..30 {
            let n = rng.gen_range(2..=5);
            let arr = random_antichain(n, &mut rng, 4, |r| random_subspace_a(n, r));
            let c = link_abstract(&arr);
            let f = c.f_vector();
            assert_eq!(f, link_f_vector(&arr));
            assert_eq!(reverse_h(&c.cone().f_vector()), reverse_h(&f));
            assert_eq!(c.cone().f_vector(), f.cone());
        }
    }

    #[test]
    fn link_abstract_examples() {
        let k3 = link_abstract(&Arrangement::<SubspaceA>::reflection(3));
        assert_eq!(k3.vertex_count(), 6);
        assert_eq!(k3.facets().len(), 6);
        assert!(k3.facets().iter().all(|f| f.len() == 1));

        let single = Arrangement::new(4, vec![SubspaceA::hyperplane(4, 0, 1)]).unwrap();
        let c = link_abstract(&single);
        assert_eq!(c.vertex_count(), 6);
        assert_eq!(c.facets().len(), 6);
        assert_eq!(c.f_vector(), fv(&[1, 6, 6]));

        let full = link_complex(&Arrangement::<SubspaceA>::reflection(3));
        assert_eq!(full.complex().f_vector(), fv(&[1, 6]));
        let hexagon = coxeter_complex::<SubspaceA>(3);
        assert_eq!(hexagon.complex().facets().len(), 6);
        assert!(hexagon.complex().is_pure());
    }

    #[test]
    fn hilbert_function_examples() {
        let hex = fv(&[1, 6, 6]);
        assert_eq!(hilbert_function(&hex, 0), BigInt::one());
        assert_eq!(hilbert_function(&hex, 2), BigInt::from(12));
        assert_eq!(hilbert_function(&hex, 3), BigInt::from(18));
        assert_eq!(hilbert_series(&hex).coefficients(4)[3], BigInt::from(18));
        assert_eq!(hilbert_series(&hex), RationalSeries::new(poly(&[1, 4, 1]), 2));
        assert_eq!(hilbert_series(&fv(&[1, 6])), RationalSeries::new(poly(&[1, 5]), 1));
        assert_eq!(hilbert_series(&fv(&[1, 1])), RationalSeries::new(poly(&[1]), 1));
        assert!(hilbert_series(&FVector::default()).is_zero());
        assert!(hilbert_function(&FVector::default(), 0).is_zero());
    }

    #[test]
    fn hilbert_series_matches_monomial_counts() {
        let mut rng = ChaCha8Rng::seed_from_u64(21);
        for _ in 0..30 {
            let n = rng.gen_range(1..=3);
            let arr = random_antichain(n, &mut rng, 4, |r| random_subspace_b(n, r));
            let f = link_f_vector(&arr);
            let d = f.d().unwrap();
            let count = 2 * d + 4;
            let from_series = hilbert_series(&f).coefficients(count);
            let direct: Vec<BigInt> = (0..count).map(|m| hilbert_function(&f, m)).collect();
            assert_eq!(from_series, direct);
        }
    }

    #[test]
    fn link_is_closed_under_subfaces() {
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        for _ in 0..20 {
            let arr = random_antichain(4, &mut rng, 4, |r| random_subspace_a(4, r));
            for face in link_faces(&arr) {
                for v in face.vertices() {
                    assert!(face_in_link(&v, &arr));
                }
            }
            let arr = random_antichain(3, &mut rng, 4, |r| random_subspace_b(3, r));
            for face in link_faces(&arr) {
                for v in face.vertices() {
                    assert!(face_in_link(&v, &arr));
                }
            }
        }
    }

    #[test]
    fn lift_inverts_contraction() {
        // faces of Δ_{H/A} land exactly on the faces of Δ_H inside A
        let mut rng = ChaCha8Rng::seed_from_u64(8);
        for _ in 0..20 {
            let host = random_subspace_a(5, &mut rng);
            let k = host.block_count();
            let mut lifted: Vec<FaceA> = if k >= 2 {
                FaceA::enumerate(k).iter().map(|f| f.lift(&host)).collect()
            } else {
                Vec::new()
            };
            lifted.sort();
            let inside: Vec<FaceA> = FaceA::enumerate(5).into_iter().filter(|f| f.lies_in(&host)).collect();
            assert_eq!(lifted, inside);
        }
        for _ in 0..20 {
            let host = random_subspace_b(3, &mut rng);
            let k = host.block_count();
            let mut lifted: Vec<FaceB> = if k >= 1 {
                FaceB::enumerate(k).iter().map(|f| f.lift(&host)).collect()
            } else {
                Vec::new()
            };
            lifted.sort();
            let inside: Vec<FaceB> = FaceB::enumerate(3).into_iter().filter(|f| f.lies_in(&host)).collect();
            assert_eq!(lifted, inside);
        }
    }
}
