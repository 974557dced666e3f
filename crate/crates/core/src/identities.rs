//! Exact verification of the enumerative identities relating link
//! complexes to characteristic polynomials, with structured reports.
//!
//! Every report compares a side computed from face enumeration with a side
//! computed from the intersection lattice or a brute-force coloring count.
//! The two never share intermediate results.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};
use thiserror::Error;

use crate::arrangement::{
    proper_flats, random_antichain, random_hyperplane_arrangement, random_subspace_a, random_subspace_b,
    Arrangement, Flat, SubspaceA, SubspaceB,
};
use crate::complex::{
    coxeter_complex, coxeter_f_vector, h_polynomial, hilbert_function, link_abstract, link_f_vector,
    reduced_euler, reverse_h, AbstractComplex, FVector,
};
use crate::graphmodels::{
    all_graphs, all_signed_graphs, chromatic_poly_brute, graph_to_arrangement, hypergraph_to_arrangement,
    random_hypergraph, region_count, signed_graph_to_arrangement, Graph, Hypergraph, SignedGraph,
};
use crate::io::{
    graph_doc, graph_from_doc, hypergraph_doc, hypergraph_from_doc, signed_graph_doc, signed_graph_from_doc,
    AnyArrangement, GraphDoc, HypergraphDoc, InputError, SignedGraphDoc,
};
use crate::polyseries::{eulerian_a, eulerian_b, polynomial_to_numerator, series_equal, IntPolynomial, RationalSeries};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Identity {
    DeletionRestriction,
    LemmaRecursion,
    LemmaEulerianA,
    LemmaEulerianB,
    LemmaSingleA,
    LemmaSingleB,
    TheoremSn,
    TheoremBn,
    Steingrimsson,
    CorollarySnRing,
    CorollarySnIdeal,
    CorollaryBnRing,
    CorollaryBnIdeal,
    EulerWedge,
}

impl Identity {
    pub const ALL: [Identity; 14] = [
        Self::DeletionRestriction,
        Self::LemmaRecursion,
        Self::LemmaEulerianA,
        Self::LemmaEulerianB,
        Self::LemmaSingleA,
        Self::LemmaSingleB,
        Self::TheoremSn,
        Self::TheoremBn,
        Self::Steingrimsson,
        Self::CorollarySnRing,
        Self::CorollarySnIdeal,
        Self::CorollaryBnRing,
        Self::CorollaryBnIdeal,
        Self::EulerWedge,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Self::DeletionRestriction => "DeletionRestriction",
            Self::LemmaRecursion => "LemmaRecursion",
            Self::LemmaEulerianA => "LemmaEulerianA",
            Self::LemmaEulerianB => "LemmaEulerianB",
            Self::LemmaSingleA => "LemmaSingleA",
            Self::LemmaSingleB => "LemmaSingleB",
            Self::TheoremSn => "TheoremSn",
            Self::TheoremBn => "TheoremBn",
            Self::Steingrimsson => "Steingrimsson",
            Self::CorollarySnRing => "CorollarySnRing",
            Self::CorollarySnIdeal => "CorollarySnIdeal",
            Self::CorollaryBnRing => "CorollaryBnRing",
            Self::CorollaryBnIdeal => "CorollaryBnIdeal",
            Self::EulerWedge => "EulerWedge",
        }
    }
}

impl fmt::Display for Identity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("unknown identity `{0}`")]
pub struct UnknownIdentity(pub String);

impl FromStr for Identity {
    type Err = UnknownIdentity;

    /// Case-insensitive; `-` and `_` are ignored, so `theorem-sn` works.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let key: String = s.chars().filter(|c| *c != '-' && *c != '_').collect::<String>().to_lowercase();
        Self::ALL
            .into_iter()
            .find(|id| id.name().to_lowercase() == key)
            .ok_or_else(|| UnknownIdentity(s.to_string()))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IdentityError {
    #[error("the arrangement is empty")]
    EmptyArrangement,
    #[error("the identity needs at least {0} members")]
    TooFewMembers(usize),
    #[error("arrangement member {0} is not a hyperplane")]
    NotHyperplanes(usize),
    #[error("the graph has no edges")]
    NoEdges,
    #[error("the subspace is the whole space")]
    FullSpace,
    #[error("{identity} needs a type {family} input")]
    WrongFamily { identity: Identity, family: char },
    #[error("Eulerian check needs n >= {0}")]
    TooSmall(usize),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub identity: Identity,
    pub input: Value,
    pub lhs: Value,
    pub rhs: Value,
    pub pass: bool,
}

fn to_value<T: Serialize>(t: &T) -> Value {
    serde_json::to_value(t).expect("serializable")
}

/// Exact JSON number, whatever the size.
pub fn number(x: &BigInt) -> Value {
    Value::Number(x.to_string().parse().expect("integers are JSON numbers"))
}

fn series_report(identity: Identity, input: Value, lhs: RationalSeries, rhs: RationalSeries) -> VerificationReport {
    let pass = series_equal(&lhs, &rhs);
    VerificationReport { identity, input, lhs: to_value(&lhs), rhs: to_value(&rhs), pass }
}

fn arrangement_input<S: Flat>(a: &Arrangement<S>) -> Value
where
    AnyArrangement: From<Arrangement<S>>,
{
    to_value(&AnyArrangement::from(a.clone()))
}

/// `(x - 1)^k h`
fn pad(h: &IntPolynomial, k: usize) -> IntPolynomial {
    &IntPolynomial::linear_power(-1, k) * h
}

fn d_of(f: &FVector) -> usize {
    f.d().expect("nonempty arrangements have nonvoid links")
}

/// `chi(a) = chi(a \ A) - chi(a / A)` for every member `A`.
pub fn verify_deletion_restriction<S: Flat>(a: &Arrangement<S>) -> Result<VerificationReport, IdentityError>
where
    AnyArrangement: From<Arrangement<S>>,
{
    if a.is_empty() {
        return Err(IdentityError::EmptyArrangement);
    }
    let chi = a.char_poly();
    let mut lhs = Vec::new();
    let mut rhs = Vec::new();
    for i in 0..a.len() {
        let deleted = a.deletion(i).expect("index in range").char_poly();
        let restricted = a.restriction_at(i).expect("member lies in the lattice").arrangement.char_poly();
        lhs.push(chi.clone());
        rhs.push(&deleted - &restricted);
    }
    let pass = lhs == rhs;
    Ok(VerificationReport {
        identity: Identity::DeletionRestriction,
        input: arrangement_input(a),
        lhs: to_value(&lhs),
        rhs: to_value(&rhs),
        pass,
    })
}

/// The recursion for `h(a)` obtained by splitting off the member at `index`.
pub fn verify_lemma_recursion<S: Flat>(
    a: &Arrangement<S>,
    index: usize,
) -> Result<VerificationReport, IdentityError>
where
    AnyArrangement: From<Arrangement<S>>,
{
    if a.len() < 2 {
        return Err(IdentityError::TooFewMembers(2));
    }
    let member = a.subspaces()[index].clone();
    let f_all = link_f_vector(a);
    let f_deleted = link_f_vector(&a.deletion(index).expect("index in range"));
    let f_single = link_f_vector(&Arrangement::new(a.n(), vec![member]).expect("one proper subspace"));
    let f_restricted = link_f_vector(&a.restriction_at(index).expect("member lies in the lattice").arrangement);
    let d = d_of(&f_all);
    let term = |f: &FVector| pad(&h_polynomial(f), d - d_of(f));
    let lhs = h_polynomial(&f_all);
    let rhs = &(&term(&f_deleted) + &term(&f_single)) - &term(&f_restricted);
    Ok(VerificationReport {
        identity: Identity::LemmaRecursion,
        input: json!({ "arrangement": arrangement_input(a), "member": index + 1 }),
        pass: lhs == rhs,
        lhs: to_value(&lhs),
        rhs: to_value(&rhs),
    })
}

/// `x h̄(Δ_{S_n}) = A_n`, compared as series over `(1 - x)^(n+1)`.
pub fn verify_lemma_eulerian_a(n: usize) -> Result<VerificationReport, IdentityError> {
    if n < 2 {
        return Err(IdentityError::TooSmall(2));
    }
    let f = coxeter_f_vector::<SubspaceA>(n);
    let lhs = RationalSeries::new(&IntPolynomial::x() * &reverse_h(&f), n + 1);
    let rhs = RationalSeries::new(eulerian_a(n), n + 1);
    Ok(series_report(Identity::LemmaEulerianA, json!({ "family": "A", "n": n }), lhs, rhs))
}

/// `h̄(Δ_{B_n}) = B_n`, compared as series over `(1 - x)^(n+1)`.
pub fn verify_lemma_eulerian_b(n: usize) -> Result<VerificationReport, IdentityError> {
    if n < 1 {
        return Err(IdentityError::TooSmall(1));
    }
    let f = coxeter_f_vector::<SubspaceB>(n);
    let lhs = RationalSeries::new(reverse_h(&f), n + 1);
    let rhs = RationalSeries::new(eulerian_b(n), n + 1);
    Ok(series_report(Identity::LemmaEulerianB, json!({ "family": "B", "n": n }), lhs, rhs))
}

/// The link of one subspace of `S_n` against `A_{d+1}`.
pub fn verify_lemma_single_a(s: &SubspaceA) -> Result<VerificationReport, IdentityError> {
    if s.is_full() {
        return Err(IdentityError::FullSpace);
    }
    let a = Arrangement::new(s.n(), vec![s.clone()]).expect("one proper subspace");
    let d = s.dim();
    let lhs = RationalSeries::new(&IntPolynomial::x() * &reverse_h(&link_f_vector(&a)), d + 2);
    let rhs = RationalSeries::new(eulerian_a(d + 1), d + 2);
    Ok(series_report(Identity::LemmaSingleA, arrangement_input(&a), lhs, rhs))
}

/// The link of one subspace of `B_n` against `B_d` (`1` when `d = 0`).
pub fn verify_lemma_single_b(s: &SubspaceB) -> Result<VerificationReport, IdentityError> {
    if s.is_full() {
        return Err(IdentityError::FullSpace);
    }
    let a = Arrangement::new(s.n(), vec![s.clone()]).expect("one proper subspace");
    let d = s.dim();
    let lhs = RationalSeries::new(reverse_h(&link_f_vector(&a)), d + 1);
    let numerator = if d == 0 { IntPolynomial::one() } else { eulerian_b(d) };
    let rhs = RationalSeries::new(numerator, d + 1);
    Ok(series_report(Identity::LemmaSingleB, arrangement_input(&a), lhs, rhs))
}

fn max_dim<S: Flat>(a: &Arrangement<S>) -> Result<usize, IdentityError> {
    a.max_dim().ok_or(IdentityError::EmptyArrangement)
}

/// `x h̄ / (1 - x)^(d+2) = sum m T(m) x^m`, with the link given by `f`.
pub fn theorem_sn_with(a: &Arrangement<SubspaceA>, f: &FVector) -> Result<VerificationReport, IdentityError> {
    let d = max_dim(a)?;
    let lhs = RationalSeries::new(&IntPolynomial::x() * &reverse_h(f), d + 2);
    let rhs = polynomial_to_numerator(&(&IntPolynomial::x() * &a.tail_poly()));
    Ok(series_report(Identity::TheoremSn, arrangement_input(a), lhs, rhs))
}

pub fn verify_theorem_sn(a: &Arrangement<SubspaceA>) -> Result<VerificationReport, IdentityError> {
    max_dim(a)?;
    theorem_sn_with(a, &link_f_vector(a))
}

fn odd(q: &IntPolynomial) -> IntPolynomial {
    q.compose(&IntPolynomial::from_i64s(&[1, 2]))
}

/// `h̄ / (1 - x)^(d+1) = sum T(2m+1) x^m`, with the link given by `f`.
pub fn theorem_bn_with(a: &Arrangement<SubspaceB>, f: &FVector) -> Result<VerificationReport, IdentityError> {
    let d = max_dim(a)?;
    let lhs = RationalSeries::new(reverse_h(f), d + 1);
    let rhs = polynomial_to_numerator(&odd(&a.tail_poly()));
    Ok(series_report(Identity::TheoremBn, arrangement_input(a), lhs, rhs))
}

pub fn verify_theorem_bn(a: &Arrangement<SubspaceB>) -> Result<VerificationReport, IdentityError> {
    max_dim(a)?;
    theorem_bn_with(a, &link_f_vector(a))
}

/// `x h̄(Ĝ) / (1 - x)^n = sum (m^n - P_G(m)) x^m` with `P_G` counted by brute force.
pub fn verify_steingrimsson(g: &Graph) -> Result<VerificationReport, IdentityError> {
    let a = graph_to_arrangement(g).map_err(|_| IdentityError::NoEdges)?;
    let n = g.n();
    let lhs = RationalSeries::new(&IntPolynomial::x() * &reverse_h(&link_f_vector(&a)), n);
    let q = &IntPolynomial::monomial(1, n) - &chromatic_poly_brute(g);
    let rhs = polynomial_to_numerator(&q);
    Ok(series_report(Identity::Steingrimsson, to_value(&graph_doc(g)), lhs, rhs))
}

fn window(d: usize) -> std::ops::RangeInclusive<usize> {
    0..=2 * d + 4
}

fn hilbert_values(c: &AbstractComplex, d: usize) -> Vec<BigInt> {
    let f = c.f_vector();
    window(d).map(|m| hilbert_function(&f, m)).collect()
}

fn values_report(identity: Identity, input: Value, lhs: Vec<BigInt>, rhs: Vec<BigInt>) -> VerificationReport {
    let pass = lhs == rhs;
    let show = |v: Vec<BigInt>| Value::Array(v.iter().map(number).collect());
    VerificationReport { identity, input, lhs: show(lhs), rhs: show(rhs), pass }
}

/// Hilbert function of the double cone over the link against `(m+1) T(m+1)`.
pub fn verify_corollary_sn_ring(a: &Arrangement<SubspaceA>) -> Result<VerificationReport, IdentityError> {
    let d = max_dim(a)?;
    let lhs = hilbert_values(&link_abstract(a).double_cone(), d);
    let t = a.tail_poly();
    let rhs = window(d).map(|m| BigInt::from(m + 1) * t.eval_int(&BigInt::from(m + 1))).collect();
    Ok(values_report(Identity::CorollarySnRing, arrangement_input(a), lhs, rhs))
}

/// Hilbert function of the ideal `H_Γ - H_Γ'` against `(m+1) chi(m+1)`.
pub fn verify_corollary_sn_ideal(a: &Arrangement<SubspaceA>) -> Result<VerificationReport, IdentityError> {
    let d = max_dim(a)?;
    let whole = hilbert_values(&coxeter_complex::<SubspaceA>(a.n()).complex().double_cone(), d);
    let part = hilbert_values(&link_abstract(a).double_cone(), d);
    let lhs = whole.iter().zip(&part).map(|(w, p)| w - p).collect();
    let chi = a.char_poly();
    let rhs = window(d).map(|m| BigInt::from(m + 1) * chi.eval_int(&BigInt::from(m + 1))).collect();
    Ok(values_report(Identity::CorollarySnIdeal, arrangement_input(a), lhs, rhs))
}

/// Hilbert function of the cone over the link against `T(2m+1)`.
pub fn verify_corollary_bn_ring(a: &Arrangement<SubspaceB>) -> Result<VerificationReport, IdentityError> {
    let d = max_dim(a)?;
    let lhs = hilbert_values(&link_abstract(a).cone(), d);
    let t = a.tail_poly();
    let rhs = window(d).map(|m| t.eval_int(&BigInt::from(2 * m + 1))).collect();
    Ok(values_report(Identity::CorollaryBnRing, arrangement_input(a), lhs, rhs))
}

/// Hilbert function of the ideal `H_Γ - H_Γ'` against `chi(2m+1)`.
pub fn verify_corollary_bn_ideal(a: &Arrangement<SubspaceB>) -> Result<VerificationReport, IdentityError> {
    let d = max_dim(a)?;
    let whole = hilbert_values(&coxeter_complex::<SubspaceB>(a.n()).complex().cone(), d);
    let part = hilbert_values(&link_abstract(a).cone(), d);
    let lhs = whole.iter().zip(&part).map(|(w, p)| w - p).collect();
    let chi = a.char_poly();
    let rhs = window(d).map(|m| chi.eval_int(&BigInt::from(2 * m + 1))).collect();
    Ok(values_report(Identity::CorollaryBnIdeal, arrangement_input(a), lhs, rhs))
}

/// `χ̃(link) = (-1)^dim (R - 1)` for an arrangement of hyperplanes.
pub fn verify_euler_wedge<S: Flat>(a: &Arrangement<S>) -> Result<VerificationReport, IdentityError>
where
    AnyArrangement: From<Arrangement<S>>,
{
    if a.is_empty() {
        return Err(IdentityError::EmptyArrangement);
    }
    if let Some(i) = a.subspaces().iter().position(|s| !s.is_hyperplane()) {
        return Err(IdentityError::NotHyperplanes(i));
    }
    let f = link_f_vector(a);
    let lhs = reduced_euler(&f);
    let regions = region_count(a).expect("hyperplanes") as i64;
    let dim = f.counts().len() as i64 - 2;
    let sign = if dim.rem_euclid(2) == 0 { 1 } else { -1 };
    let rhs = BigInt::from(sign * (regions - 1));
    Ok(VerificationReport {
        identity: Identity::EulerWedge,
        input: arrangement_input(a),
        pass: lhs == rhs,
        lhs: number(&lhs),
        rhs: number(&rhs),
    })
}

/// Run `identity` on an input. Graph-shaped documents are used through
/// their arrangements, except for `Steingrimsson`, which needs the graph.
pub fn verify_input(identity: Identity, input: &crate::io::Input) -> Result<Vec<VerificationReport>, VerifyInputError> {
    use crate::io::Input;
    let wrong = |family| VerifyInputError::Identity(IdentityError::WrongFamily { identity, family });
    if identity == Identity::Steingrimsson {
        let graph = match input {
            Input::Graph(g) => g.clone(),
            Input::Arrangement(AnyArrangement::A(a)) => graph_of(a).ok_or(VerifyInputError::NeedsGraph)?,
            _ => return Err(VerifyInputError::NeedsGraph),
        };
        return Ok(vec![verify_steingrimsson(&graph)?]);
    }
    let a = input.to_arrangement()?;
    let n = a.ambient().n;
    let reports = match (identity, &a) {
        (Identity::DeletionRestriction, AnyArrangement::A(a)) => vec![verify_deletion_restriction(a)?],
        (Identity::DeletionRestriction, AnyArrangement::B(a)) => vec![verify_deletion_restriction(a)?],
        (Identity::LemmaRecursion, AnyArrangement::A(a)) => {
            (0..a.len()).map(|i| verify_lemma_recursion(a, i)).collect::<Result<_, _>>()?
        }
        (Identity::LemmaRecursion, AnyArrangement::B(a)) => {
            (0..a.len()).map(|i| verify_lemma_recursion(a, i)).collect::<Result<_, _>>()?
        }
        (Identity::LemmaEulerianA, AnyArrangement::A(_)) => vec![verify_lemma_eulerian_a(n)?],
        (Identity::LemmaEulerianB, AnyArrangement::B(_)) => vec![verify_lemma_eulerian_b(n)?],
        (Identity::LemmaSingleA, AnyArrangement::A(a)) => {
            a.subspaces().iter().map(verify_lemma_single_a).collect::<Result<_, _>>()?
        }
        (Identity::LemmaSingleB, AnyArrangement::B(a)) => {
            a.subspaces().iter().map(verify_lemma_single_b).collect::<Result<_, _>>()?
        }
        (Identity::TheoremSn, AnyArrangement::A(a)) => vec![verify_theorem_sn(a)?],
        (Identity::TheoremBn, AnyArrangement::B(a)) => vec![verify_theorem_bn(a)?],
        (Identity::CorollarySnRing, AnyArrangement::A(a)) => vec![verify_corollary_sn_ring(a)?],
        (Identity::CorollarySnIdeal, AnyArrangement::A(a)) => vec![verify_corollary_sn_ideal(a)?],
        (Identity::CorollaryBnRing, AnyArrangement::B(a)) => vec![verify_corollary_bn_ring(a)?],
        (Identity::CorollaryBnIdeal, AnyArrangement::B(a)) => vec![verify_corollary_bn_ideal(a)?],
        (Identity::EulerWedge, AnyArrangement::A(a)) => vec![verify_euler_wedge(a)?],
        (Identity::EulerWedge, AnyArrangement::B(a)) => vec![verify_euler_wedge(a)?],
        (
            Identity::LemmaEulerianA
            | Identity::LemmaSingleA
            | Identity::TheoremSn
            | Identity::CorollarySnRing
            | Identity::CorollarySnIdeal,
            AnyArrangement::B(_),
        ) => return Err(wrong('A')),
        (_, _) => return Err(wrong('B')),
    };
    Ok(reports)
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VerifyInputError {
    #[error(transparent)]
    Input(#[from] InputError),
    #[error(transparent)]
    Identity(#[from] IdentityError),
    #[error("Steingrimsson needs a graph or an arrangement of type A hyperplanes")]
    NeedsGraph,
}

/// The graph whose arrangement is `a`, if `a` consists of hyperplanes.
fn graph_of(a: &Arrangement<SubspaceA>) -> Option<Graph> {
    let edges: Option<Vec<(usize, usize)>> = a
        .subspaces()
        .iter()
        .map(|s| {
            let block = s.blocks().into_iter().find(|b| b.len() == 2)?;
            s.is_hyperplane().then_some((block[0], block[1]))
        })
        .collect();
    Graph::new(a.n(), &edges?).ok()
}

/// An arrangement whose link is replaced by a given f-vector; used for
/// negative controls.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Fixture {
    pub arrangement: AnyArrangement,
    pub f_vector: FVector,
}

/// Inputs for `run_all`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "CatalogDoc", into = "CatalogDoc")]
pub struct Catalog {
    pub graphs: Vec<Graph>,
    pub hypergraphs: Vec<Hypergraph>,
    pub signed_graphs: Vec<SignedGraph>,
    pub arrangements: Vec<AnyArrangement>,
    /// Single-subspace arrangements for the single-link lemma.
    pub singles: Vec<AnyArrangement>,
    pub eulerian_a: Vec<usize>,
    pub eulerian_b: Vec<usize>,
    pub fixtures: Vec<Fixture>,
}

#[derive(Clone, Debug, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CatalogDoc {
    #[serde(default)]
    graphs: Vec<GraphDoc>,
    #[serde(default)]
    hypergraphs: Vec<HypergraphDoc>,
    #[serde(default)]
    signed_graphs: Vec<SignedGraphDoc>,
    #[serde(default)]
    arrangements: Vec<AnyArrangement>,
    #[serde(default)]
    singles: Vec<AnyArrangement>,
    #[serde(default)]
    eulerian_a: Vec<usize>,
    #[serde(default)]
    eulerian_b: Vec<usize>,
    #[serde(default)]
    fixtures: Vec<Fixture>,
}

impl TryFrom<CatalogDoc> for Catalog {
    type Error = InputError;

    fn try_from(doc: CatalogDoc) -> Result<Self, InputError> {
        Ok(Self {
            graphs: doc.graphs.iter().map(graph_from_doc).collect::<Result<_, _>>()?,
            hypergraphs: doc.hypergraphs.iter().map(hypergraph_from_doc).collect::<Result<_, _>>()?,
            signed_graphs: doc.signed_graphs.iter().map(signed_graph_from_doc).collect::<Result<_, _>>()?,
            arrangements: doc.arrangements,
            singles: doc.singles,
            eulerian_a: doc.eulerian_a,
            eulerian_b: doc.eulerian_b,
            fixtures: doc.fixtures,
        })
    }
}

impl From<Catalog> for CatalogDoc {
    fn from(c: Catalog) -> Self {
        Self {
            graphs: c.graphs.iter().map(graph_doc).collect(),
            hypergraphs: c.hypergraphs.iter().map(hypergraph_doc).collect(),
            signed_graphs: c.signed_graphs.iter().map(signed_graph_doc).collect(),
            arrangements: c.arrangements,
            singles: c.singles,
            eulerian_a: c.eulerian_a,
            eulerian_b: c.eulerian_b,
            fixtures: c.fixtures,
        }
    }
}

impl Catalog {
    pub fn is_empty(&self) -> bool {
        *self == Self::default()
    }
}

/// Random antichain of subspaces of positive dimension.
pub fn random_positive_antichain_a<R: Rng>(n: usize, rng: &mut R) -> Arrangement<SubspaceA> {
    random_antichain(n, rng, 4, |r| loop {
        let s = random_subspace_a(n, r);
        if s.dim() > 0 {
            return s;
        }
    })
}

pub fn random_positive_antichain_b<R: Rng>(n: usize, rng: &mut R) -> Arrangement<SubspaceB> {
    random_antichain(n, rng, 4, |r| loop {
        let s = random_subspace_b(n, r);
        if s.dim() > 0 {
            return s;
        }
    })
}

/// The built-in catalog: small graphs and signed graphs, random
/// hypergraphs and antichains, and every proper flat of small rank.
pub fn default_catalog() -> Catalog {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let graphs: Vec<Graph> = (2..=5)
        .flat_map(all_graphs)
        .filter(|g| !g.edges().is_empty())
        .collect();
    let hypergraphs = (0..100).map(|_| {
        let n = rng.gen_range(2..=5);
        random_hypergraph(n, &mut rng)
    });
    let hypergraphs: Vec<Hypergraph> = hypergraphs.collect();
    let signed_graphs: Vec<SignedGraph> = (1..=3)
        .flat_map(all_signed_graphs)
        .filter(|s| !s.is_empty())
        .collect();
    let mut arrangements: Vec<AnyArrangement> = Vec::new();
    arrangements.extend((0..50).map(|_| AnyArrangement::A(random_positive_antichain_a(5, &mut rng))));
    arrangements.extend((0..50).map(|_| AnyArrangement::B(random_positive_antichain_b(3, &mut rng))));
    arrangements.extend((0..50).map(|_| AnyArrangement::A(random_hyperplane_arrangement(5, &mut rng))));
    arrangements.extend((0..50).map(|_| AnyArrangement::B(random_hyperplane_arrangement(3, &mut rng))));
    let mut singles: Vec<AnyArrangement> = Vec::new();
    for n in 2..=5 {
        singles.extend(
            proper_flats::<SubspaceA>(n)
                .into_iter()
                .map(|s| AnyArrangement::A(Arrangement::new(n, vec![s]).expect("proper flat"))),
        );
    }
    for n in 1..=3 {
        singles.extend(
            proper_flats::<SubspaceB>(n)
                .into_iter()
                .map(|s| AnyArrangement::B(Arrangement::new(n, vec![s]).expect("proper flat"))),
        );
    }
    Catalog {
        graphs,
        hypergraphs,
        signed_graphs,
        arrangements,
        singles,
        eulerian_a: (2..=6).collect(),
        eulerian_b: (1..=4).collect(),
        fixtures: Vec::new(),
    }
}

#[derive(Clone, Debug)]
enum Job {
    Graph(Identity, Graph),
    TypeA(Identity, Arrangement<SubspaceA>),
    TypeB(Identity, Arrangement<SubspaceB>),
    Recursion(AnyArrangement, usize),
    Single(AnyArrangement),
    EulerianA(usize),
    EulerianB(usize),
    Fixture(Fixture),
}

fn type_a_jobs(a: &Arrangement<SubspaceA>, jobs: &mut Vec<Job>) {
    for id in [Identity::TheoremSn, Identity::CorollarySnRing, Identity::CorollarySnIdeal] {
        jobs.push(Job::TypeA(id, a.clone()));
    }
}

fn type_b_jobs(a: &Arrangement<SubspaceB>, jobs: &mut Vec<Job>) {
    for id in [Identity::TheoremBn, Identity::CorollaryBnRing, Identity::CorollaryBnIdeal] {
        jobs.push(Job::TypeB(id, a.clone()));
    }
}

fn jobs_of(catalog: &Catalog) -> Vec<Job> {
    let mut jobs = Vec::new();
    for g in &catalog.graphs {
        let a = graph_to_arrangement(g);
        jobs.push(Job::Graph(Identity::Steingrimsson, g.clone()));
        if let Ok(a) = a {
            jobs.push(Job::TypeA(Identity::DeletionRestriction, a.clone()));
            type_a_jobs(&a, &mut jobs);
            jobs.push(Job::TypeA(Identity::EulerWedge, a));
        }
    }
    for h in &catalog.hypergraphs {
        if let Ok(a) = hypergraph_to_arrangement(h) {
            jobs.push(Job::TypeA(Identity::DeletionRestriction, a.clone()));
            type_a_jobs(&a, &mut jobs);
        }
    }
    for s in &catalog.signed_graphs {
        if let Ok(a) = signed_graph_to_arrangement(s) {
            jobs.push(Job::TypeB(Identity::DeletionRestriction, a.clone()));
            type_b_jobs(&a, &mut jobs);
            jobs.push(Job::TypeB(Identity::EulerWedge, a));
        }
    }
    for any in &catalog.arrangements {
        match any {
            AnyArrangement::A(a) => {
                jobs.push(Job::TypeA(Identity::DeletionRestriction, a.clone()));
                type_a_jobs(a, &mut jobs);
                if a.is_hyperplane_arrangement() {
                    jobs.push(Job::TypeA(Identity::EulerWedge, a.clone()));
                }
            }
            AnyArrangement::B(a) => {
                jobs.push(Job::TypeB(Identity::DeletionRestriction, a.clone()));
                type_b_jobs(a, &mut jobs);
                if a.is_hyperplane_arrangement() {
                    jobs.push(Job::TypeB(Identity::EulerWedge, a.clone()));
                }
            }
        }
        if any.len() >= 2 {
            jobs.extend((0..any.len()).map(|i| Job::Recursion(any.clone(), i)));
        }
    }
    jobs.extend(catalog.singles.iter().cloned().map(Job::Single));
    jobs.extend(catalog.eulerian_a.iter().copied().map(Job::EulerianA));
    jobs.extend(catalog.eulerian_b.iter().copied().map(Job::EulerianB));
    jobs.extend(catalog.fixtures.iter().cloned().map(Job::Fixture));
    jobs
}

fn failed(identity: Identity, input: Value, e: IdentityError) -> VerificationReport {
    VerificationReport { identity, input, lhs: Value::Null, rhs: json!(e.to_string()), pass: false }
}

fn run_job(job: Job) -> Vec<VerificationReport> {
    let one = |id: Identity, input: Value, r: Result<VerificationReport, IdentityError>| {
        vec![r.unwrap_or_else(|e| failed(id, input, e))]
    };
    match job {
        Job::Graph(id, g) => one(id, to_value(&graph_doc(&g)), verify_steingrimsson(&g)),
        Job::TypeA(id, a) => {
            let input = arrangement_input(&a);
            let r = match id {
                Identity::DeletionRestriction => verify_deletion_restriction(&a),
                Identity::TheoremSn => verify_theorem_sn(&a),
                Identity::CorollarySnRing => verify_corollary_sn_ring(&a),
                Identity::CorollarySnIdeal => verify_corollary_sn_ideal(&a),
                Identity::EulerWedge => verify_euler_wedge(&a),
                other => unreachable!("{other} is not scheduled on type A arrangements"),
            };
            one(id, input, r)
        }
        Job::TypeB(id, a) => {
            let input = arrangement_input(&a);
            let r = match id {
                Identity::DeletionRestriction => verify_deletion_restriction(&a),
                Identity::TheoremBn => verify_theorem_bn(&a),
                Identity::CorollaryBnRing => verify_corollary_bn_ring(&a),
                Identity::CorollaryBnIdeal => verify_corollary_bn_ideal(&a),
                Identity::EulerWedge => verify_euler_wedge(&a),
                other => unreachable!("{other} is not scheduled on type B arrangements"),
            };
            one(id, input, r)
        }
        Job::Recursion(any, i) => {
            let input = to_value(&any);
            let r = match &any {
                AnyArrangement::A(a) => verify_lemma_recursion(a, i),
                AnyArrangement::B(a) => verify_lemma_recursion(a, i),
            };
            one(Identity::LemmaRecursion, input, r)
        }
        Job::Single(any) => {
            let input = to_value(&any);
            match &any {
                AnyArrangement::A(a) => a
                    .subspaces()
                    .iter()
                    .flat_map(|s| one(Identity::LemmaSingleA, input.clone(), verify_lemma_single_a(s)))
                    .collect(),
                AnyArrangement::B(a) => a
                    .subspaces()
                    .iter()
                    .flat_map(|s| one(Identity::LemmaSingleB, input.clone(), verify_lemma_single_b(s)))
                    .collect(),
            }
        }
        Job::EulerianA(n) => one(Identity::LemmaEulerianA, json!({ "family": "A", "n": n }), verify_lemma_eulerian_a(n)),
        Job::EulerianB(n) => one(Identity::LemmaEulerianB, json!({ "family": "B", "n": n }), verify_lemma_eulerian_b(n)),
        Job::Fixture(fx) => {
            let input = to_value(&fx);
            let (id, r) = match &fx.arrangement {
                AnyArrangement::A(a) => (Identity::TheoremSn, theorem_sn_with(a, &fx.f_vector)),
                AnyArrangement::B(a) => (Identity::TheoremBn, theorem_bn_with(a, &fx.f_vector)),
            };
            let r = r.map(|r| VerificationReport { input: input.clone(), ..r });
            one(id, input, r)
        }
    }
}

/// Every identity applicable to every catalog entry, in catalog order.
/// Failures are recorded in the reports, never raised.
pub fn run_all(catalog: &Catalog) -> Vec<VerificationReport> {
    let jobs = jobs_of(catalog);
    let nested: Vec<Vec<VerificationReport>> = jobs.into_par_iter().map(run_job).collect();
    nested.into_iter().flatten().collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::io::parse_input;

    fn arrangement_a(text: &str) -> Arrangement<SubspaceA> {
        match parse_input(text).unwrap().to_arrangement().unwrap() {
            AnyArrangement::A(a) => a,
            other => panic!("{other:?}"),
        }
    }

    fn k3() -> Arrangement<SubspaceA> {
        graph_to_arrangement(&Graph::complete(3)).unwrap()
    }

    fn poly(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64s(c)
    }

    #[test]
    fn identity_names() {
        for id in Identity::ALL {
            assert_eq!(id.name().parse::<Identity>(), Ok(id));
            assert_eq!(serde_json::to_value(id).unwrap(), json!(id.name()));
        }
        assert_eq!("steingrimsson".parse(), Ok(Identity::Steingrimsson));
        assert_eq!("theorem-sn".parse(), Ok(Identity::TheoremSn));
        assert_eq!("corollary_bn_ideal".parse(), Ok(Identity::CorollaryBnIdeal));
        assert!("theorem".parse::<Identity>().is_err());
    }

    #[test]
    fn deletion_restriction_examples() {
        let a = arrangement_a(r#"{"ambient":{"family":"A","n":3},"subspaces":[{"blocks":[[1,2]]},{"blocks":[[1,3]]}]}"#);
        let r = verify_deletion_restriction(&a).unwrap();
        assert!(r.pass);
        assert_eq!(r.lhs, json!([[1, -2, 1], [1, -2, 1]]));
        let single = Arrangement::new(4, vec![SubspaceA::hyperplane(4, 0, 1)]).unwrap();
        assert!(verify_deletion_restriction(&single).unwrap().pass);
        assert_eq!(
            verify_deletion_restriction(&Arrangement::<SubspaceA>::empty(3)),
            Err(IdentityError::EmptyArrangement)
        );
    }

    #[test]
    fn recursion_examples() {
        let a = k3();
        for i in 0..3 {
            assert!(verify_lemma_recursion(&a, i).unwrap().pass);
        }
        let two = Arrangement::new(4, vec![SubspaceA::hyperplane(4, 0, 1), SubspaceA::hyperplane(4, 2, 3)]).unwrap();
        assert!(verify_lemma_recursion(&two, 0).unwrap().pass);
        let b = Arrangement::new(
            2,
            vec![SubspaceB::coordinate_hyperplane(2, 0), SubspaceB::pair_hyperplane(2, 0, 1, true)],
        )
        .unwrap();
        assert!(verify_lemma_recursion(&b, 1).unwrap().pass);
        // a restriction consisting of the origin contributes h = 1
        let p = Arrangement::new(3, vec![SubspaceA::hyperplane(3, 0, 1), SubspaceA::hyperplane(3, 0, 2)]).unwrap();
        assert!(verify_lemma_recursion(&p, 0).unwrap().pass);
    }

    #[test]
    fn eulerian_examples() {
        let r = verify_lemma_eulerian_a(3).unwrap();
        assert!(r.pass);
        assert_eq!(r.lhs["num"], json!([0, 1, 4, 1]));
        assert!(verify_lemma_eulerian_a(2).unwrap().pass);
        let r = verify_lemma_eulerian_b(2).unwrap();
        assert!(r.pass);
        assert_eq!(r.lhs["num"], json!([1, 6, 1]));
    }

    #[test]
    fn single_examples() {
        assert!(verify_lemma_single_a(&SubspaceA::from_blocks(4, &[vec![0, 1, 2]]).unwrap()).unwrap().pass);
        assert!(verify_lemma_single_a(&SubspaceA::hyperplane(3, 0, 1)).unwrap().pass);
        assert!(verify_lemma_single_b(&SubspaceB::coordinate_hyperplane(2, 0)).unwrap().pass);
        assert!(verify_lemma_single_b(&SubspaceB::from_parts(2, &[0, 1], &[]).unwrap()).unwrap().pass);
        assert_eq!(verify_lemma_single_a(&SubspaceA::full(3)), Err(IdentityError::FullSpace));
    }

    #[test]
    fn theorem_sn_examples() {
        let r = verify_theorem_sn(&k3()).unwrap();
        assert!(r.pass);
        assert_eq!(r.lhs, json!({ "num": [0, 1, 5], "denom_power": 3 }));
        let single = Arrangement::new(4, vec![SubspaceA::hyperplane(4, 0, 3)]).unwrap();
        assert!(verify_theorem_sn(&single).unwrap().pass);
        let mixed = Arrangement::new(
            4,
            vec![SubspaceA::from_blocks(4, &[vec![0, 1, 2]]).unwrap(), SubspaceA::hyperplane(4, 2, 3)],
        )
        .unwrap();
        assert!(verify_theorem_sn(&mixed).unwrap().pass);
    }

    #[test]
    fn theorems_hold_for_the_origin() {
        // excluded from the catalogs, but the conventions make it hold
        let origin = Arrangement::new(4, vec![SubspaceA::from_labels(&[0, 0, 0, 0])]).unwrap();
        assert!(verify_theorem_sn(&origin).unwrap().pass);
        let origin = Arrangement::new(2, vec![SubspaceB::from_parts(2, &[0, 1], &[]).unwrap()]).unwrap();
        assert!(verify_theorem_bn(&origin).unwrap().pass);
        assert!(verify_corollary_bn_ring(&origin).unwrap().pass);
    }

    #[test]
    fn theorem_bn_examples() {
        let one = Arrangement::new(2, vec![SubspaceB::pair_hyperplane(2, 0, 1, false)]).unwrap();
        assert!(verify_theorem_bn(&one).unwrap().pass);
        let b2 = Arrangement::<SubspaceB>::reflection(2);
        let r = verify_theorem_bn(&b2).unwrap();
        assert!(r.pass);
        // q(m) = (2m+1)^2 - 2m(2m-2) = 8m + 1
        assert_eq!(odd(&b2.tail_poly()), poly(&[1, 8]));
        assert!(verify_theorem_bn(&Arrangement::<SubspaceB>::reflection(1)).unwrap().pass);
    }

    #[test]
    fn steingrimsson_examples() {
        assert!(verify_steingrimsson(&Graph::complete(3)).unwrap().pass);
        assert!(verify_steingrimsson(&Graph::new(2, &[(0, 1)]).unwrap()).unwrap().pass);
        assert!(verify_steingrimsson(&Graph::cycle(4)).unwrap().pass);
        assert_eq!(verify_steingrimsson(&Graph::new(3, &[]).unwrap()), Err(IdentityError::NoEdges));
    }

    #[test]
    fn corollary_examples() {
        let r = verify_corollary_sn_ring(&k3()).unwrap();
        assert!(r.pass);
        assert_eq!(r.lhs[0], json!(1));
        assert_eq!(r.lhs[2], json!(21));
        let r = verify_corollary_sn_ideal(&k3()).unwrap();
        assert!(r.pass);
        assert_eq!(r.lhs[1], json!(0));

        let one = Arrangement::new(2, vec![SubspaceB::pair_hyperplane(2, 0, 1, false)]).unwrap();
        let r = verify_corollary_bn_ring(&one).unwrap();
        assert!(r.pass);
        assert_eq!(r.lhs[1], json!(3));
        let r = verify_corollary_bn_ideal(&one).unwrap();
        assert!(r.pass);
        assert_eq!(r.lhs[0], json!(0));
        let r = verify_corollary_bn_ideal(&Arrangement::<SubspaceB>::reflection(2)).unwrap();
        assert!(r.pass);
        assert_eq!(r.rhs[1], json!(0));
    }

    #[test]
    fn euler_wedge_examples() {
        let r = verify_euler_wedge(&k3()).unwrap();
        assert!(r.pass);
        assert_eq!(r.lhs, json!(5));
        let one = Arrangement::new(4, vec![SubspaceA::hyperplane(4, 0, 1)]).unwrap();
        assert!(verify_euler_wedge(&one).unwrap().pass);
        let path = graph_to_arrangement(&Graph::path(3)).unwrap();
        let r = verify_euler_wedge(&path).unwrap();
        assert!(r.pass);
        assert_eq!(r.lhs, json!(3));
        let mixed = Arrangement::new(3, vec![SubspaceA::from_labels(&[0, 0, 0])]).unwrap();
        assert_eq!(verify_euler_wedge(&mixed), Err(IdentityError::NotHyperplanes(0)));
    }

    #[test]
    fn steingrimsson_agrees_with_theorem_sn() {
        for g in all_graphs(4).iter().filter(|g| !g.edges().is_empty()) {
            let a = graph_to_arrangement(g).unwrap();
            assert_eq!(verify_steingrimsson(g).unwrap().pass, verify_theorem_sn(&a).unwrap().pass);
        }
    }

    #[test]
    fn reports_round_trip() {
        let r = verify_theorem_sn(&k3()).unwrap();
        let text = serde_json::to_string(&r).unwrap();
        assert_eq!(serde_json::from_str::<VerificationReport>(&text).unwrap(), r);
    }

    #[test]
    fn empty_catalog() {
        assert!(run_all(&Catalog::default()).is_empty());
        assert!(Catalog::default().is_empty());
    }

    #[test]
    fn corrupted_fixture_fails_alone() {
        let a = k3();
        let good = Fixture { arrangement: AnyArrangement::A(a.clone()), f_vector: FVector::new(vec![1, 6]) };
        let bad = Fixture { arrangement: AnyArrangement::A(a), f_vector: FVector::new(vec![1, 7]) };
        let catalog = Catalog { fixtures: vec![good, bad], eulerian_a: vec![3], ..Catalog::default() };
        let reports = run_all(&catalog);
        assert_eq!(reports.len(), 3);
        let failures: Vec<&VerificationReport> = reports.iter().filter(|r| !r.pass).collect();
        assert_eq!(failures.len(), 1);
        assert_eq!(failures[0].identity, Identity::TheoremSn);
        assert_eq!(failures[0].input["f_vector"], json!([1, 7]));
    }

    #[test]
    fn catalog_round_trip() {
        let mut catalog = default_catalog();
        catalog.graphs.truncate(3);
        catalog.hypergraphs.truncate(3);
        catalog.signed_graphs.truncate(3);
        catalog.arrangements.truncate(3);
        catalog.fixtures.push(Fixture { arrangement: AnyArrangement::A(k3()), f_vector: FVector::new(vec![1, 6]) });
        let text = serde_json::to_string(&catalog).unwrap();
        assert_eq!(serde_json::from_str::<Catalog>(&text).unwrap(), catalog);
    }

    #[test]
    fn verify_input_dispatch() {
        let input = parse_input(r#"{"n":3,"edges":[[1,2],[1,3],[2,3]]}"#).unwrap();
        for id in Identity::ALL {
            let result = verify_input(id, &input);
            match id {
                Identity::LemmaEulerianB
                | Identity::LemmaSingleB
                | Identity::TheoremBn
                | Identity::CorollaryBnRing
                | Identity::CorollaryBnIdeal => assert!(result.is_err(), "{id}"),
                _ => assert!(result.unwrap().iter().all(|r| r.pass), "{id}"),
            }
        }
    }
}
