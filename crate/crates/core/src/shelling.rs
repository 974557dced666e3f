//! Chambers and the poset of regions of `S_n` / `B_n`, shelling orders of
//! `Δ_H` from its linear extensions, the inductive shelling of links of
//! hyperplane sub-arrangements, and a verifier for arbitrary orders.

use std::collections::{HashMap, HashSet};

use rand::Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::arrangement::{Arrangement, Flat};
use crate::complex::{link_complex, AbstractComplex, CoxeterFace, FaceComplex};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ShellingError {
    #[error("complex is not pure")]
    NotPure,
    #[error("order is not a permutation of the facets")]
    NotAPermutation,
    #[error("chamber set is not an order filter of the poset of regions")]
    NotAnOrderFilter,
    #[error("arrangement member {0} is not a hyperplane")]
    NotHyperplanes(usize),
}

/// `true` marks the positive side of a hyperplane.
pub type SignVector = Vec<bool>;

/// A facet of `Δ_H` with its position relative to every hyperplane.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Chamber<F> {
    pub face: F,
    pub signs: SignVector,
}

fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn sign_vector(point: &[i64], forms: &[Vec<i64>]) -> SignVector {
    forms
        .iter()
        .map(|form| {
            let v = dot(form, point);
            assert!(v != 0, "point {point:?} lies on a hyperplane");
            v > 0
        })
        .collect()
}

fn forms_of<S: Flat>(hyperplanes: &[S]) -> Vec<Vec<i64>> {
    hyperplanes.iter().map(|h| h.linear_form().expect("hyperplane")).collect()
}

/// Chambers of `S_n` or `B_n` in face order, signed against the canonical
/// hyperplane list.
pub fn chambers_of<S: Flat>(n: usize) -> Vec<Chamber<S::Face>> {
    let forms = forms_of(&S::hyperplanes(n));
    S::Face::chambers(n)
        .into_iter()
        .map(|face| {
            let signs = sign_vector(&face.point(), &forms);
            Chamber { face, signs }
        })
        .collect()
}

/// Hyperplane indices at which two chambers differ.
pub fn separation_set<F>(c1: &Chamber<F>, c2: &Chamber<F>) -> Vec<usize> {
    assert_eq!(c1.signs.len(), c2.signs.len());
    (0..c1.signs.len()).filter(|&i| c1.signs[i] != c2.signs[i]).collect()
}

/// Poset of regions based at one chamber.
#[derive(Clone, Debug)]
pub struct RegionPoset<F> {
    chambers: Vec<Chamber<F>>,
    base: usize,
    ell: Vec<usize>,
    covers: Vec<(usize, usize)>,
    up: Vec<Vec<usize>>,
}

impl<F: CoxeterFace> RegionPoset<F> {
    pub fn new(chambers: Vec<Chamber<F>>, base: usize) -> Self {
        let ell: Vec<usize> =
            chambers.iter().map(|c| separation_set(&chambers[base], c).len()).collect();
        let index: HashMap<&SignVector, usize> =
            chambers.iter().enumerate().map(|(i, c)| (&c.signs, i)).collect();
        let mut covers = Vec::new();
        let mut up = vec![Vec::new(); chambers.len()];
        for (i, c) in chambers.iter().enumerate() {
            let mut flipped = c.signs.clone();
            for h in 0..flipped.len() {
                flipped[h] = !flipped[h];
                if let Some(&j) = index.get(&flipped) {
                    if ell[j] == ell[i] + 1 {
                        covers.push((i, j));
                        up[i].push(j);
                    }
                }
                flipped[h] = !flipped[h];
            }
        }
        Self { chambers, base, ell, covers, up }
    }

    /// Poset of `S_n` / `B_n` based at `base`.
    pub fn of<S: Flat<Face = F>>(n: usize, base: &F) -> Self {
        let chambers = chambers_of::<S>(n);
        let b = chambers.iter().position(|c| c.face == *base).expect("base is a chamber");
        Self::new(chambers, b)
    }

    pub fn chambers(&self) -> &[Chamber<F>] {
        &self.chambers
    }

    pub fn base(&self) -> usize {
        self.base
    }

    pub fn ell(&self) -> &[usize] {
        &self.ell
    }

    pub fn covers(&self) -> &[(usize, usize)] {
        &self.covers
    }

    pub fn position(&self, face: &F) -> Option<usize> {
        self.chambers.iter().position(|c| c.face == *face)
    }

    /// Number of chambers at each distance from the base.
    pub fn rank_sizes(&self) -> Vec<usize> {
        let top = self.ell.iter().copied().max().unwrap_or(0);
        let mut sizes = vec![0; top + 1];
        for &l in &self.ell {
            sizes[l] += 1;
        }
        sizes
    }

    /// `i <= j`: separation sets from the base are nested.
    pub fn leq(&self, i: usize, j: usize) -> bool {
        let b = &self.chambers[self.base].signs;
        let (ci, cj) = (&self.chambers[i].signs, &self.chambers[j].signs);
        (0..b.len()).all(|h| ci[h] == b[h] || cj[h] != b[h])
    }

    pub fn is_order_filter(&self, members: &HashSet<usize>) -> bool {
        members.iter().all(|&i| self.up[i].iter().all(|j| members.contains(j)))
    }

    /// Chamber indices sorted by distance from the base, ties broken by face
    /// order; members of `filter` come after everything else.
    pub fn linear_extension(
        &self,
        filter: Option<&HashSet<usize>>,
    ) -> Result<Vec<usize>, ShellingError> {
        if let Some(f) = filter {
            if !self.is_order_filter(f) {
                return Err(ShellingError::NotAnOrderFilter);
            }
        }
        let mut order: Vec<usize> = (0..self.chambers.len()).collect();
        order.sort_by(|&i, &j| {
            let key = |k: usize| (filter.is_some_and(|f| f.contains(&k)), self.ell[k]);
            key(i).cmp(&key(j)).then_with(|| self.chambers[i].face.cmp(&self.chambers[j].face))
        });
        Ok(order)
    }

    /// A uniformly chosen minimal element at every step.
    pub fn random_linear_extension<R: Rng + ?Sized>(&self, rng: &mut R) -> Vec<usize> {
        let mut below = vec![0usize; self.chambers.len()];
        for &(_, j) in &self.covers {
            below[j] += 1;
        }
        let mut ready: Vec<usize> = (0..below.len()).filter(|&i| below[i] == 0).collect();
        let mut order = Vec::with_capacity(below.len());
        while !ready.is_empty() {
            let pick = rng.gen_range(0..ready.len());
            let i = ready.swap_remove(pick);
            order.push(i);
            for &j in &self.up[i] {
                below[j] -= 1;
                if below[j] == 0 {
                    ready.push(j);
                }
            }
        }
        order
    }
}

/// Facets listed by vertex indices.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ShellingOrder(pub Vec<Vec<usize>>);

impl ShellingOrder {
    pub fn facets(&self) -> &[Vec<usize>] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Order of faces expressed in the vertex indices of `complex`.
    pub fn from_faces<F: CoxeterFace>(complex: &FaceComplex<F>, faces: &[F]) -> Self {
        if faces.is_empty() && complex.complex().facets() == [Vec::<usize>::new()] {
            return Self(vec![Vec::new()]);
        }
        Self(
            faces
                .iter()
                .map(|f| complex.face_indices(f).expect("face of the complex"))
                .collect(),
        )
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ShellingVerdict {
    pub is_shelling: bool,
    /// 1-based position of the first facet that breaks the condition.
    pub first_violation: Option<usize>,
}

/// Decide whether `order` shells `complex`.
///
/// Facet `F_j` is fine when some vertex set `R_j`, consisting of the `v`
/// with `F_j \ {v}` inside an earlier facet, is not contained in any
/// earlier facet. For `j >= 2` an empty `R_j` always fails, so facets that
/// meet earlier ones only in the empty face are rejected.
pub fn check_shelling(
    complex: &AbstractComplex,
    order: &ShellingOrder,
) -> Result<ShellingVerdict, ShellingError> {
    if !complex.is_pure() {
        return Err(ShellingError::NotPure);
    }
    let facets: Vec<Vec<usize>> = order
        .facets()
        .iter()
        .map(|f| {
            let mut g = f.clone();
            g.sort_unstable();
            g
        })
        .collect();
    let mut sorted = facets.clone();
    sorted.sort();
    if sorted.windows(2).any(|w| w[0] == w[1]) || sorted != complex.facets() {
        return Err(ShellingError::NotAPermutation);
    }

    let mut first_seen: HashMap<Vec<usize>, usize> = HashMap::new();
    for (pos, f) in facets.iter().enumerate() {
        for skip in 0..f.len() {
            let mut ridge = f.clone();
            ridge.remove(skip);
            first_seen.entry(ridge).or_insert(pos);
        }
    }
    let sets: Vec<HashSet<usize>> = facets.iter().map(|f| f.iter().copied().collect()).collect();
    let violation = (1..facets.len()).into_par_iter().find_first(|&j| {
        let f = &facets[j];
        let restriction: Vec<usize> = (0..f.len())
            .filter(|&skip| {
                let mut ridge = f.clone();
                ridge.remove(skip);
                first_seen.get(&ridge).is_some_and(|&p| p < j)
            })
            .map(|skip| f[skip])
            .collect();
        sets[..j].iter().any(|earlier| restriction.iter().all(|v| earlier.contains(v)))
    });
    Ok(ShellingVerdict { is_shelling: violation.is_none(), first_violation: violation.map(|j| j + 1) })
}

pub fn is_shelling_order(
    complex: &AbstractComplex,
    order: &ShellingOrder,
) -> Result<bool, ShellingError> {
    check_shelling(complex, order).map(|v| v.is_shelling)
}

/// Chambers of `S_n` / `B_n` in a linear extension of the poset based at
/// the least chamber.
pub fn coxeter_shelling_faces<S: Flat>(n: usize) -> Vec<S::Face> {
    let chambers = chambers_of::<S>(n);
    if chambers.is_empty() {
        return Vec::new();
    }
    let poset = RegionPoset::new(chambers, 0);
    let order = poset.linear_extension(None).expect("no filter");
    order.into_iter().map(|i| poset.chambers[i].face.clone()).collect()
}

/// A shelling of `Δ_H` in the vertex indices of `coxeter_complex::<S>(n)`.
pub fn shell_coxeter<S: Flat>(n: usize) -> ShellingOrder {
    let complex = crate::complex::coxeter_complex::<S>(n);
    ShellingOrder::from_faces(&complex, &coxeter_shelling_faces::<S>(n))
}

fn check_hyperplanes<S: Flat>(a: &Arrangement<S>) -> Result<(), ShellingError> {
    match a.subspaces().iter().position(|s| !s.is_hyperplane()) {
        Some(i) => Err(ShellingError::NotHyperplanes(i)),
        None => Ok(()),
    }
}

/// Chambers of `H/A`, written in the coordinates of `A`, grouped by their
/// side of each hyperplane of `a/A`. Classes are ordered by their least
/// chamber and list members in face order.
pub fn complement_classes<S: Flat>(
    a: &Arrangement<S>,
    host: &S,
) -> Result<Vec<Vec<S::Face>>, ShellingError> {
    check_hyperplanes(a)?;
    if !host.is_hyperplane() {
        return Err(ShellingError::NotHyperplanes(a.len()));
    }
    let restricted = a.restriction(host).expect("members lie in the lattice");
    let k = restricted.arrangement.n();
    let forms = forms_of(restricted.arrangement.subspaces());
    let mut classes: Vec<(SignVector, Vec<S::Face>)> = Vec::new();
    for face in S::Face::chambers(k) {
        let signs = sign_vector(&face.point(), &forms);
        match classes.iter_mut().find(|(s, _)| *s == signs) {
            Some((_, members)) => members.push(face),
            None => classes.push((signs, vec![face])),
        }
    }
    Ok(classes.into_iter().map(|(_, members)| members).collect())
}

fn link_facet_order<S: Flat>(members: &[S]) -> Result<Vec<S::Face>, ShellingError> {
    let (last, rest) = members.split_last().expect("nonempty");
    let mut order = if rest.is_empty() { Vec::new() } else { link_facet_order(rest)? };
    let a = Arrangement::new(last.n(), members.to_vec()).expect("antichain of hyperplanes");
    let k = last.recoordinate(last).n();
    if S::ambient_dim(k) == 0 {
        // Δ_{H/A} is {∅}; nothing to lift
        return Ok(order);
    }
    let chambers = chambers_of::<S>(k);
    for class in complement_classes(&a, last)? {
        let base = class[0].antipode();
        let poset = RegionPoset::new(
            chambers.clone(),
            chambers.iter().position(|c| c.face == base).expect("antipode is a chamber"),
        );
        let filter: HashSet<usize> =
            class.iter().map(|f| poset.position(f).expect("class member is a chamber")).collect();
        let extension = poset.linear_extension(Some(&filter))?;
        order.extend(
            extension
                .into_iter()
                .filter(|i| filter.contains(i))
                .map(|i| poset.chambers[i].face.lift(last)),
        );
    }
    Ok(order)
}

/// Facets of `Δ_{A,H}` in the order built by deleting hyperplanes one at
/// a time, as faces of `Δ_H`.
pub fn shell_link_faces<S: Flat>(a: &Arrangement<S>) -> Result<Vec<S::Face>, ShellingError> {
    check_hyperplanes(a)?;
    if a.is_empty() {
        return Ok(Vec::new());
    }
    link_facet_order(a.canonicalized().subspaces())
}

/// Shelling of `Δ_{A,H}` for an arrangement of hyperplanes, together with
/// the indexed link it refers to. The empty arrangement gives the void
/// complex and the empty order.
pub fn shell_link<S: Flat>(
    a: &Arrangement<S>,
) -> Result<(FaceComplex<S::Face>, ShellingOrder), ShellingError> {
    let faces = shell_link_faces(a)?;
    let complex = link_complex(a);
    if a.is_empty() {
        return Ok((complex, ShellingOrder::default()));
    }
    let order = ShellingOrder::from_faces(&complex, &faces);
    Ok((complex, order))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arrangement::{random_hyperplane_arrangement, SubspaceA, SubspaceB};
    use crate::complex::{coxeter_complex, FaceA, FaceB};
    use rand::seq::SliceRandom;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn verify(complex: &AbstractComplex, order: &ShellingOrder) -> bool {
        check_shelling(complex, order).expect("well formed").is_shelling
    }

    #[test]
    fn chamber_counts() {
        assert_eq!(chambers_of::<SubspaceA>(3).len(), 6);
        assert_eq!(chambers_of::<SubspaceA>(4).len(), 24);
        assert_eq!(chambers_of::<SubspaceB>(2).len(), 8);
        assert_eq!(chambers_of::<SubspaceB>(3).len(), 48);
        let signs: HashSet<SignVector> =
            chambers_of::<SubspaceB>(3).into_iter().map(|c| c.signs).collect();
        assert_eq!(signs.len(), 48);
    }

    #[test]
    fn separation_sets() {
        let chambers = chambers_of::<SubspaceA>(3);
        let c = &chambers[0];
        assert!(separation_set(c, c).is_empty());
        let opposite = chambers.iter().find(|d| d.face == c.face.antipode()).unwrap();
        assert_eq!(separation_set(c, opposite), vec![0, 1, 2]);
        let poset = RegionPoset::new(chambers.clone(), 0);
        for &(i, j) in poset.covers() {
            assert_eq!(separation_set(&chambers[i], &chambers[j]).len(), 1);
        }
    }

    #[test]
    fn rank_sizes() {
        for base in 0..6 {
            assert_eq!(RegionPoset::new(chambers_of::<SubspaceA>(3), base).rank_sizes(), vec![1, 2, 2, 1]);
        }
        for base in 0..8 {
            assert_eq!(
                RegionPoset::new(chambers_of::<SubspaceB>(2), base).rank_sizes(),
                vec![1, 2, 2, 2, 1]
            );
        }
        assert_eq!(RegionPoset::new(chambers_of::<SubspaceA>(2), 0).rank_sizes(), vec![1, 1]);
        assert_eq!(
            RegionPoset::new(chambers_of::<SubspaceA>(4), 0).rank_sizes(),
            vec![1, 3, 5, 6, 5, 3, 1]
        );
    }

    #[test]
    fn antipodal_ranks() {
        let chambers = chambers_of::<SubspaceB>(3);
        let poset = RegionPoset::new(chambers.clone(), 5);
        let total = SubspaceB::hyperplanes(3).len();
        for (i, c) in chambers.iter().enumerate() {
            let j = poset.position(&c.face.antipode()).unwrap();
            assert_eq!(separation_set(c, &chambers[j]).len(), total);
            assert_eq!(poset.ell()[i] + poset.ell()[j], total);
        }
    }

    #[test]
    fn covers_generate_the_order() {
        let poset = RegionPoset::new(chambers_of::<SubspaceA>(4), 7);
        let m = poset.chambers().len();
        let mut reach = vec![vec![false; m]; m];
        for i in 0..m {
            reach[i][i] = true;
        }
        for &(i, j) in poset.covers() {
            reach[i][j] = true;
        }
        for k in 0..m {
            for i in 0..m {
                for j in 0..m {
                    if reach[i][k] && reach[k][j] {
                        reach[i][j] = true;
                    }
                }
            }
        }
        for i in 0..m {
            for j in 0..m {
                assert_eq!(reach[i][j], poset.leq(i, j));
            }
        }
    }

    #[test]
    fn linear_extensions() {
        let poset = RegionPoset::new(chambers_of::<SubspaceA>(3), 0);
        let order = poset.linear_extension(None).unwrap();
        assert!(order.windows(2).all(|w| poset.ell()[w[0]] <= poset.ell()[w[1]]));
        assert_eq!(order, poset.linear_extension(Some(&HashSet::new())).unwrap());
        let top = (0..6).find(|&i| poset.ell()[i] == 3).unwrap();
        let order = poset.linear_extension(Some(&HashSet::from([top]))).unwrap();
        assert_eq!(*order.last().unwrap(), top);
        let bottom = HashSet::from([poset.base()]);
        assert_eq!(poset.linear_extension(Some(&bottom)), Err(ShellingError::NotAnOrderFilter));
    }

    #[test]
    fn verifier_examples() {
        let hexagon = coxeter_complex::<SubspaceA>(3);
        let c = hexagon.complex();
        // walk the circle
        let mut cyclic = vec![c.facets()[0].clone()];
        while cyclic.len() < 6 {
            let last = cyclic.last().unwrap().clone();
            let next = c
                .facets()
                .iter()
                .find(|f| !cyclic.contains(f) && f.iter().any(|v| last.contains(v)))
                .unwrap()
                .clone();
            cyclic.push(next);
        }
        assert!(verify(c, &ShellingOrder(cyclic.clone())));

        let first = cyclic[0].clone();
        let opposite = cyclic[3].clone();
        let mut bad = vec![first, opposite];
        let rest: Vec<Vec<usize>> = cyclic.iter().filter(|f| !bad.contains(f)).cloned().collect();
        bad.extend(rest);
        let verdict = check_shelling(c, &ShellingOrder(bad)).unwrap();
        assert_eq!(verdict, ShellingVerdict { is_shelling: false, first_violation: Some(2) });

        let single = AbstractComplex::new(3, vec![vec![0, 1, 2]]);
        assert!(verify(&single, &ShellingOrder(vec![vec![2, 1, 0]])));
        let points = AbstractComplex::new(3, vec![vec![0], vec![1], vec![2]]);
        assert!(verify(&points, &ShellingOrder(vec![vec![2], vec![0], vec![1]])));
    }

    #[test]
    fn verifier_errors() {
        let mixed = AbstractComplex::new(3, vec![vec![0, 1], vec![2]]);
        assert_eq!(
            check_shelling(&mixed, &ShellingOrder(vec![vec![0, 1], vec![2]])),
            Err(ShellingError::NotPure)
        );
        let pair = AbstractComplex::new(3, vec![vec![0, 1], vec![1, 2]]);
        assert_eq!(
            check_shelling(&pair, &ShellingOrder(vec![vec![0, 1]])),
            Err(ShellingError::NotAPermutation)
        );
        assert_eq!(
            check_shelling(&pair, &ShellingOrder(vec![vec![0, 1], vec![0, 1]])),
            Err(ShellingError::NotAPermutation)
        );
    }

    /// Brute-force shelling test: the intersection of `F_j` with the union of
    /// earlier facets is pure of codimension one in `F_j`.
    fn shelling_by_definition(order: &[Vec<usize>]) -> bool {
        for j in 1..order.len() {
            let f: HashSet<usize> = order[j].iter().copied().collect();
            let traces: Vec<HashSet<usize>> =
                order[..j].iter().map(|g| g.iter().copied().filter(|v| f.contains(v)).collect()).collect();
            let maximal: Vec<&HashSet<usize>> = traces
                .iter()
                .filter(|t| !traces.iter().any(|u| u.len() > t.len() && t.is_subset(u)))
                .collect();
            if maximal.iter().any(|t| t.len() + 1 != f.len()) {
                return false;
            }
        }
        true
    }

    #[test]
    fn verifier_matches_definition() {
        let mut rng = ChaCha8Rng::seed_from_u64(31);
        let complex = coxeter_complex::<SubspaceB>(2);
        let square = coxeter_complex::<SubspaceA>(4);
        for c in [complex.complex(), square.complex()] {
            for _ in 0..200 {
                let mut facets = c.facets().to_vec();
                facets.shuffle(&mut rng);
                let order = ShellingOrder(facets.clone());
                assert_eq!(verify(c, &order), shelling_by_definition(&facets));
            }
        }
    }

    #[test]
    fn coxeter_shellings() {
        for n in 2..=5 {
            let cx = coxeter_complex::<SubspaceA>(n);
            assert!(verify(cx.complex(), &shell_coxeter::<SubspaceA>(n)), "S_{n}");
        }
        for n in 1..=4 {
            let cx = coxeter_complex::<SubspaceB>(n);
            assert!(verify(cx.complex(), &shell_coxeter::<SubspaceB>(n)), "B_{n}");
        }
        assert_eq!(shell_coxeter::<SubspaceA>(3).len(), 6);
        assert_eq!(shell_coxeter::<SubspaceB>(2).len(), 8);
    }

    #[test]
    fn random_extensions_shell() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        fn run<S: Flat, R: Rng>(n: usize, rng: &mut R) {
            let cx = coxeter_complex::<S>(n);
            let chambers = chambers_of::<S>(n);
            for _ in 0..20 {
                let base = rng.gen_range(0..chambers.len());
                let poset = RegionPoset::new(chambers.clone(), base);
                let ext = poset.random_linear_extension(rng);
                for &(i, j) in poset.covers() {
                    let p = |k| ext.iter().position(|&x| x == k).unwrap();
                    assert!(p(i) < p(j));
                }
                let faces: Vec<S::Face> = ext.iter().map(|&i| poset.chambers()[i].face.clone()).collect();
                assert!(verify(cx.complex(), &ShellingOrder::from_faces(&cx, &faces)));
            }
        }
        for n in 2..=4 {
            run::<SubspaceA, _>(n, &mut rng);
        }
        for n in 1..=3 {
            run::<SubspaceB, _>(n, &mut rng);
        }
    }

    #[test]
    fn complement_class_examples() {
        let p12 = SubspaceA::hyperplane(3, 0, 1);
        let p13 = SubspaceA::hyperplane(3, 0, 2);
        let a = Arrangement::new(3, vec![p12.clone(), p13]).unwrap();
        let classes = complement_classes(&a, &p12).unwrap();
        assert_eq!(classes.len(), 2);
        assert!(classes.iter().all(|c| c.len() == 1));

        let alone = Arrangement::new(3, vec![p12.clone()]).unwrap();
        let classes = complement_classes(&alone, &p12).unwrap();
        assert_eq!(classes, vec![FaceA::chambers(2)]);

        let k3 = Arrangement::<SubspaceA>::reflection(3);
        assert_eq!(complement_classes(&k3, &p12).unwrap().len(), 2);

        let origin = Arrangement::new(3, vec![SubspaceA::from_labels(&[0, 0, 0])]).unwrap();
        assert_eq!(complement_classes(&origin, &p12), Err(ShellingError::NotHyperplanes(0)));
    }

    #[test]
    fn link_shelling_examples() {
        let k3 = Arrangement::<SubspaceA>::reflection(3);
        let (cx, order) = shell_link(&k3).unwrap();
        assert_eq!(order.len(), 6);
        assert!(verify(cx.complex(), &order));

        let two = Arrangement::new(
            4,
            vec![SubspaceA::hyperplane(4, 0, 1), SubspaceA::hyperplane(4, 2, 3)],
        )
        .unwrap();
        let (cx, order) = shell_link(&two).unwrap();
        assert_eq!(order.len(), 12);
        assert!(verify(cx.complex(), &order));

        let one = Arrangement::new(2, vec![SubspaceB::coordinate_hyperplane(2, 0)]).unwrap();
        let (cx, order) = shell_link(&one).unwrap();
        assert_eq!(order.len(), 2);
        assert!(verify(cx.complex(), &order));

        // the link of x1 = x2 in S_2 is {∅}
        let point = Arrangement::new(2, vec![SubspaceA::hyperplane(2, 0, 1)]).unwrap();
        let (cx, order) = shell_link(&point).unwrap();
        assert_eq!(order, ShellingOrder(vec![vec![]]));
        assert!(verify(cx.complex(), &order));

        let (cx, order) = shell_link(&Arrangement::<SubspaceA>::empty(3)).unwrap();
        assert!(order.is_empty());
        assert!(verify(cx.complex(), &order));
    }

    #[test]
    fn random_link_shellings() {
        let mut rng = ChaCha8Rng::seed_from_u64(17);
        for _ in 0..15 {
            let a = random_hyperplane_arrangement::<SubspaceA, _>(5, &mut rng);
            let (cx, order) = shell_link(&a).unwrap();
            assert!(verify(cx.complex(), &order), "{a:?}");
            let b = random_hyperplane_arrangement::<SubspaceB, _>(3, &mut rng);
            let (cx, order) = shell_link(&b).unwrap();
            assert!(verify(cx.complex(), &order), "{b:?}");
        }
    }

    fn classes_meet_in_smaller_link<S: Flat>(a: &Arrangement<S>, rng: &mut ChaCha8Rng) {
        let members = a.canonicalized().subspaces().to_vec();
        let (last, rest) = members.split_last().unwrap();
        let classes = complement_classes(a, last).unwrap();
        if classes.len() < 2 {
            return;
        }
        for _ in 0..10 {
            let (i, j) = (rng.gen_range(0..classes.len()), rng.gen_range(0..classes.len()));
            if i == j {
                continue;
            }
            let f = classes[i].choose(rng).unwrap().lift(last);
            let g = classes[j].choose(rng).unwrap().lift(last);
            let common: Vec<S::Face> =
                f.vertices().into_iter().filter(|v| g.vertices().contains(v)).collect();
            assert!(rest.iter().any(|h| common.iter().all(|v| v.lies_in(h))));
        }
    }

    #[test]
    fn classes_only_meet_inside_the_deletion() {
        let mut rng = ChaCha8Rng::seed_from_u64(23);
        for _ in 0..20 {
            let a = random_hyperplane_arrangement::<SubspaceA, _>(5, &mut rng);
            classes_meet_in_smaller_link(&a, &mut rng);
            let b = random_hyperplane_arrangement::<SubspaceB, _>(3, &mut rng);
            classes_meet_in_smaller_link(&b, &mut rng);
        }
    }

    #[test]
    fn lifted_chambers_are_facets() {
        let host = SubspaceB::pair_hyperplane(3, 0, 2, true);
        for face in FaceB::chambers(2) {
            let lifted = face.lift(&host);
            assert!(lifted.lies_in(&host));
            assert_eq!(lifted.support(), host);
        }
    }
}
