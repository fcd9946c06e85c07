//! Association schemes: axiom verification, the intersection tensor, and
//! the operations built on it.
//!
//! `from_partition` is the single entry point that turns a
//! [`RelationPartition`] into an [`AssociationScheme`]. It is a total
//! check: the transpose axiom and the constancy of every intersection
//! count `|R_i(x) ∩ R_{j*}(y)|` are verified over *every* ordered pair, so
//! a successful return is a proof of schemehood at this point count.

use std::collections::BTreeSet;

use crate::bits::{intersection_count, BitMatrix};
use crate::digraph::{Digraph, RelationPartition};
use crate::error::{Error, Result};
use crate::spectra;

/// A verified association scheme on `n` points with `d` non-diagonal
/// classes.
#[derive(Clone, Debug)]
pub struct AssociationScheme {
    partition: RelationPartition,
    involution: Vec<usize>,
    valencies: Vec<usize>,
    tensor: Vec<u32>,
}

/// Derived flags of a scheme, plus spectral data when the scheme is a
/// translation scheme over `Z_n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SchemeReport {
    pub d: usize,
    pub valencies: Vec<usize>,
    pub commutative: bool,
    pub symmetric: bool,
    pub skew_symmetric: bool,
    pub primitive: bool,
    pub pseudocyclic: Option<bool>,
    pub multiplicities: Option<Vec<usize>>,
}

/// Outcome of the intersection-number identity suite.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityReport {
    pub violation: Option<IdentityViolation>,
}

impl IdentityReport {
    pub fn passed(&self) -> bool {
        self.violation.is_none()
    }
}

/// First failing identity, with the indices at which it fails.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityViolation {
    pub identity: IntersectionIdentity,
    pub indices: Vec<usize>,
    pub lhs: u64,
    pub rhs: u64,
}

/// The four standard identities satisfied by intersection numbers.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum IntersectionIdentity {
    /// `k_i k_j = Σ_l p_{i,j}^l k_l`
    ValencyProduct,
    /// `p_{i,j}^l k_l = p_{l,j*}^i k_i = p_{i*,l}^j k_j`
    TransposeSymmetry,
    /// `Σ_j p_{i,j}^l = k_i`
    RowSum,
    /// `Σ_α p_{i,j}^α p_{f,α}^l = Σ_β p_{f,i}^β p_{β,j}^l`
    Associativity,
}

impl std::fmt::Display for IntersectionIdentity {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            IntersectionIdentity::ValencyProduct => "valency-product",
            IntersectionIdentity::TransposeSymmetry => "transpose-symmetry",
            IntersectionIdentity::RowSum => "row-sum",
            IntersectionIdentity::Associativity => "associativity",
        };
        f.write_str(s)
    }
}

struct ClassViolation {
    i: usize,
    j: usize,
    l: usize,
    pair_a: (usize, usize),
    count_a: usize,
    pair_b: (usize, usize),
    count_b: usize,
}

/// Verify the scheme axioms on a partition and compute the full
/// intersection tensor.
///
/// Checks, in order: that the transpose of every class is a class (which
/// yields the involution `i ↦ i*`), then that `|R_i(x) ∩ R_{j*}(y)|` is
/// constant over all `(x, y)` in every class `R_l`. Counting uses
/// per-vertex class bit rows, so one count is a word-parallel
/// `popcount(row AND row)`.
///
/// With the `parallel` feature the constancy check fans out over the
/// classes `l` for larger inputs; the reported violation is always the
/// lexicographically least `(i, j, l)`, so the outcome does not depend on
/// scheduling.
pub fn from_partition(partition: RelationPartition) -> Result<AssociationScheme> {
    let n = partition.n();
    let d = partition.d();
    let m = d + 1;

    // class bit rows: rows[k] has row x = R_k(x)
    let mut rows: Vec<BitMatrix> = (0..m).map(|_| BitMatrix::new(n, n)).collect();
    for x in 0..n {
        for y in 0..n {
            rows[partition.class_of(x, y)].set(x, y);
        }
    }

    // axiom: the transpose of each class is a class
    let mut involution = vec![usize::MAX; m];
    let mut first_pair = vec![None; m];
    for x in 0..n {
        for y in 0..n {
            let k = partition.class_of(x, y);
            if first_pair[k].is_none() {
                first_pair[k] = Some((x, y));
                involution[k] = partition.class_of(y, x);
            }
        }
    }
    for x in 0..n {
        for y in 0..n {
            let k = partition.class_of(x, y);
            if partition.class_of(y, x) != involution[k] {
                return Err(Error::TransposeNotAClass { class: k, x, y });
            }
        }
    }
    debug_assert!((0..m).all(|k| involution[involution[k]] == k));

    // pairs of each class in row-major order; the first pair of a class
    // provides the reference count
    let mut pairs_by_class: Vec<Vec<(u32, u32)>> = vec![Vec::new(); m];
    for x in 0..n {
        for y in 0..n {
            pairs_by_class[partition.class_of(x, y)].push((x as u32, y as u32));
        }
    }

    let check_class = |l: usize| -> std::result::Result<Vec<u32>, ClassViolation> {
        let pairs = &pairs_by_class[l];
        let mut slice = vec![0u32; m * m];
        for i in 0..m {
            for j in 0..m {
                let jstar = involution[j];
                let (x0, y0) = pairs[0];
                let reference =
                    intersection_count(rows[i].row(x0 as usize), rows[jstar].row(y0 as usize));
                for &(x, y) in &pairs[1..] {
                    let count =
                        intersection_count(rows[i].row(x as usize), rows[jstar].row(y as usize));
                    if count != reference {
                        return Err(ClassViolation {
                            i,
                            j,
                            l,
                            pair_a: (x0 as usize, y0 as usize),
                            count_a: reference,
                            pair_b: (x as usize, y as usize),
                            count_b: count,
                        });
                    }
                }
                slice[i * m + j] = reference as u32;
            }
        }
        Ok(slice)
    };

    let outcomes = run_per_class(m, n, check_class);

    let mut tensor = vec![0u32; m * m * m];
    let mut worst: Option<ClassViolation> = None;
    for outcome in outcomes {
        match outcome {
            Ok((l, slice)) => {
                for i in 0..m {
                    for j in 0..m {
                        tensor[(i * m + j) * m + l] = slice[i * m + j];
                    }
                }
            }
            Err(v) => {
                let better = match &worst {
                    None => true,
                    Some(w) => (v.i, v.j, v.l) < (w.i, w.j, w.l),
                };
                if better {
                    worst = Some(v);
                }
            }
        }
    }
    if let Some(v) = worst {
        return Err(Error::NonConstantIntersection {
            i: v.i,
            j: v.j,
            l: v.l,
            pair_a: v.pair_a,
            count_a: v.count_a,
            pair_b: v.pair_b,
            count_b: v.count_b,
        });
    }

    let valencies: Vec<usize> = (0..m)
        .map(|i| tensor[(i * m + involution[i]) * m] as usize)
        .collect();
    debug_assert_eq!(valencies[0], 1);
    debug_assert_eq!(valencies.iter().sum::<usize>(), n);

    Ok(AssociationScheme {
        partition,
        involution,
        valencies,
        tensor,
    })
}

#[cfg(feature = "parallel")]
fn run_per_class<F>(m: usize, n: usize, f: F) -> Vec<std::result::Result<(usize, Vec<u32>), ClassViolation>>
where
    F: Fn(usize) -> std::result::Result<Vec<u32>, ClassViolation> + Sync,
{
    use rayon::prelude::*;
    // fan out only when there is real work per class
    if m * n * n >= 1 << 20 {
        (0..m)
            .into_par_iter()
            .map(|l| f(l).map(|slice| (l, slice)))
            .collect()
    } else {
        (0..m).map(|l| f(l).map(|slice| (l, slice))).collect()
    }
}

#[cfg(not(feature = "parallel"))]
fn run_per_class<F>(m: usize, _n: usize, f: F) -> Vec<std::result::Result<(usize, Vec<u32>), ClassViolation>>
where
    F: Fn(usize) -> std::result::Result<Vec<u32>, ClassViolation>,
{
    (0..m).map(|l| f(l).map(|slice| (l, slice))).collect()
}

/// The attached scheme of a digraph: the two-way distance partition,
/// verified as an association scheme.
///
/// Succeeds exactly when the digraph is weakly distance-regular. The
/// digraph must be strongly connected and not undirected.
pub fn attached_scheme(g: &Digraph) -> Result<AssociationScheme> {
    if g.is_undirected() {
        return Err(Error::UndirectedInput);
    }
    let partition = g.two_way_partition()?;
    from_partition(partition).map_err(|e| Error::NotWdr(Box::new(e)))
}

impl AssociationScheme {
    pub fn n(&self) -> usize {
        self.partition.n()
    }

    /// Number of non-diagonal classes.
    pub fn d(&self) -> usize {
        self.partition.d()
    }

    pub fn partition(&self) -> &RelationPartition {
        &self.partition
    }

    /// The transpose involution `i ↦ i*`.
    pub fn involution(&self, i: usize) -> usize {
        self.involution[i]
    }

    pub fn valency(&self, i: usize) -> usize {
        self.valencies[i]
    }

    pub fn valencies(&self) -> &[usize] {
        &self.valencies
    }

    /// Intersection number `p_{i,j}^l`.
    #[inline]
    pub fn p(&self, i: usize, j: usize, l: usize) -> usize {
        let m = self.d() + 1;
        self.tensor[(i * m + j) * m + l] as usize
    }

    /// Dense tensor as nested vectors indexed `[i][j][l]`.
    pub fn tensor_nested(&self) -> Vec<Vec<Vec<u32>>> {
        let m = self.d() + 1;
        (0..m)
            .map(|i| {
                (0..m)
                    .map(|j| (0..m).map(|l| self.tensor[(i * m + j) * m + l]).collect())
                    .collect()
            })
            .collect()
    }

    fn check_index(&self, i: usize) -> Result<()> {
        if i > self.d() {
            return Err(Error::IndexOutOfRange {
                index: i,
                classes: self.d(),
            });
        }
        Ok(())
    }

    pub fn is_commutative(&self) -> bool {
        let m = self.d() + 1;
        for i in 0..m {
            for j in i + 1..m {
                for l in 0..m {
                    if self.p(i, j, l) != self.p(j, i, l) {
                        return false;
                    }
                }
            }
        }
        true
    }

    pub fn is_symmetric(&self) -> bool {
        self.involution.iter().enumerate().all(|(i, &s)| i == s)
    }

    /// True when the diagonal is the only self-transpose relation.
    pub fn is_skew_symmetric(&self) -> bool {
        self.involution
            .iter()
            .enumerate()
            .all(|(i, &s)| (i == s) == (i == 0))
    }

    /// The relation product
    /// `EF = { l : Σ_{i in E} Σ_{j in F} p_{i,j}^l ≠ 0 }`.
    pub fn product(&self, e: &BTreeSet<usize>, f: &BTreeSet<usize>) -> Result<BTreeSet<usize>> {
        for &i in e.iter().chain(f.iter()) {
            self.check_index(i)?;
        }
        let mut out = BTreeSet::new();
        for l in 0..=self.d() {
            'search: for &i in e {
                for &j in f {
                    if self.p(i, j, l) != 0 {
                        out.insert(l);
                        break 'search;
                    }
                }
            }
        }
        Ok(out)
    }

    /// Smallest closed subset containing `seed` (and the diagonal): the
    /// least fixed point of `F ↦ F ∪ ⋃_{i,j in F} {i*}{j}`.
    pub fn closure(&self, seed: &BTreeSet<usize>) -> Result<BTreeSet<usize>> {
        for &i in seed {
            self.check_index(i)?;
        }
        let mut f: BTreeSet<usize> = seed.clone();
        f.insert(0);
        loop {
            let mut grew = false;
            let members: Vec<usize> = f.iter().copied().collect();
            for &i in &members {
                for &j in &members {
                    let istar = self.involution[i];
                    for l in 0..=self.d() {
                        if self.p(istar, j, l) != 0 && f.insert(l) {
                            grew = true;
                        }
                    }
                }
            }
            if !grew {
                return Ok(f);
            }
        }
    }

    /// True when every non-diagonal relation generates the whole scheme.
    pub fn is_primitive(&self) -> bool {
        let full = self.d() + 1;
        (1..=self.d()).all(|i| {
            let seed: BTreeSet<usize> = [i].into();
            self.closure(&seed).map(|c| c.len() == full).unwrap_or(false)
        })
    }

    /// Check the four standard intersection-number identities over all
    /// index combinations, reporting the first violation.
    ///
    /// Scan order: valency-product over `(i, j)`, transpose-symmetry over
    /// `(i, j, l)`, row-sum over `(i, l)`, then associativity over
    /// `(f, i)` pairs with the witness recorded as `(i, j, f, l)`.
    pub fn verify_intersection_identities(&self) -> IdentityReport {
        let m = self.d() + 1;
        let k = &self.valencies;

        for i in 0..m {
            for j in 0..m {
                let lhs = (k[i] * k[j]) as u64;
                let rhs: u64 = (0..m).map(|l| (self.p(i, j, l) * k[l]) as u64).sum();
                if lhs != rhs {
                    return IdentityReport {
                        violation: Some(IdentityViolation {
                            identity: IntersectionIdentity::ValencyProduct,
                            indices: vec![i, j],
                            lhs,
                            rhs,
                        }),
                    };
                }
            }
        }

        for i in 0..m {
            for j in 0..m {
                for l in 0..m {
                    let jstar = self.involution[j];
                    let istar = self.involution[i];
                    let base = (self.p(i, j, l) * k[l]) as u64;
                    let second = (self.p(l, jstar, i) * k[i]) as u64;
                    let third = (self.p(istar, l, j) * k[j]) as u64;
                    if base != second || base != third {
                        let rhs = if base != second { second } else { third };
                        return IdentityReport {
                            violation: Some(IdentityViolation {
                                identity: IntersectionIdentity::TransposeSymmetry,
                                indices: vec![i, j, l],
                                lhs: base,
                                rhs,
                            }),
                        };
                    }
                }
            }
        }

        for i in 0..m {
            for l in 0..m {
                let lhs: u64 = (0..m).map(|j| self.p(i, j, l) as u64).sum();
                if lhs != k[i] as u64 {
                    return IdentityReport {
                        violation: Some(IdentityViolation {
                            identity: IntersectionIdentity::RowSum,
                            indices: vec![i, l],
                            lhs,
                            rhs: k[i] as u64,
                        }),
                    };
                }
            }
        }

        // associativity, organised as B_f B_i = Σ_β p_{f,i}^β B_β with
        // (B_a)_{l,j} = p_{a,j}^l; zero entries are skipped, which keeps
        // the sweep fast on sparse tensors such as group schemes
        let mut lhs_mat = vec![0u64; m * m];
        let mut rhs_mat = vec![0u64; m * m];
        for f in 0..m {
            for i in 0..m {
                lhs_mat.iter_mut().for_each(|v| *v = 0);
                rhs_mat.iter_mut().for_each(|v| *v = 0);
                for l in 0..m {
                    for a in 0..m {
                        let v = self.p(f, a, l) as u64;
                        if v != 0 {
                            for j in 0..m {
                                lhs_mat[l * m + j] += v * self.p(i, j, a) as u64;
                            }
                        }
                    }
                }
                for b in 0..m {
                    let v = self.p(f, i, b) as u64;
                    if v != 0 {
                        for l in 0..m {
                            for j in 0..m {
                                rhs_mat[l * m + j] += v * self.p(b, j, l) as u64;
                            }
                        }
                    }
                }
                for l in 0..m {
                    for j in 0..m {
                        if lhs_mat[l * m + j] != rhs_mat[l * m + j] {
                            return IdentityReport {
                                violation: Some(IdentityViolation {
                                    identity: IntersectionIdentity::Associativity,
                                    indices: vec![i, j, f, l],
                                    lhs: lhs_mat[l * m + j],
                                    rhs: rhs_mat[l * m + j],
                                }),
                            };
                        }
                    }
                }
            }
        }

        IdentityReport { violation: None }
    }

    /// Flags derived from the tensor and involution. Multiplicities and
    /// the pseudocyclic flag are filled in only when the underlying
    /// partition is translation-invariant over `Z_n`.
    pub fn report(&self) -> SchemeReport {
        let (pseudocyclic, multiplicities) = match self.partition.difference_classes() {
            Some(classes) => {
                let eig = spectra::eigenmatrix(self.n(), &classes)
                    .expect("difference classes of a valid partition always partition 1..n");
                (Some(eig.is_pseudocyclic()), Some(eig.multiplicities()))
            }
            None => (None, None),
        };
        SchemeReport {
            d: self.d(),
            valencies: self.valencies.clone(),
            commutative: self.is_commutative(),
            symmetric: self.is_symmetric(),
            skew_symmetric: self.is_skew_symmetric(),
            primitive: self.is_primitive(),
            pseudocyclic,
            multiplicities,
        }
    }

    /// Copy of this scheme with one tensor entry overwritten.
    ///
    /// The result usually violates the scheme invariants; this exists so
    /// that the identity diagnostics can be exercised against known-bad
    /// tensors.
    pub fn with_tensor_entry(&self, i: usize, j: usize, l: usize, value: u32) -> Self {
        let m = self.d() + 1;
        let mut copy = self.clone();
        copy.tensor[(i * m + j) * m + l] = value;
        copy
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::digraph::Digraph;

    fn group_scheme(n: usize) -> AssociationScheme {
        let classes: Vec<Vec<usize>> = (1..n).map(|c| vec![c]).collect();
        from_partition(RelationPartition::from_difference_classes(n, &classes).unwrap()).unwrap()
    }

    fn cay13_scheme() -> AssociationScheme {
        attached_scheme(&Digraph::cayley(13, &[1, 3, 9]).unwrap()).unwrap()
    }

    #[test]
    fn cay13_is_a_four_class_scheme() {
        let s = cay13_scheme();
        assert_eq!(s.d(), 4);
        assert_eq!(s.valencies(), &[1, 3, 3, 3, 3]);
        assert_eq!(s.involution(1), 2);
        assert_eq!(s.involution(3), 4);
    }

    #[test]
    fn nonconstant_partition_is_rejected() {
        // differences {2,3} | {1} | {4} over Z_5
        let p =
            RelationPartition::from_difference_classes(5, &[vec![2, 3], vec![1], vec![4]]).unwrap();
        let err = from_partition(p).unwrap_err();
        match err {
            Error::NonConstantIntersection { i, j, l, count_a, count_b, .. } => {
                // first violating triple in (i, j, l) order, counts 0 vs 1
                assert_eq!((i, j, l), (1, 2, 1));
                assert_eq!((count_a, count_b), (0, 1));
            }
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn group_scheme_of_z5_is_valid() {
        let s = group_scheme(5);
        assert_eq!(s.d(), 4);
        assert!(s.valencies().iter().all(|&k| k == 1));
        assert!(s.is_skew_symmetric());
    }

    #[test]
    fn attached_scheme_examples() {
        let paley = attached_scheme(&Digraph::cayley(7, &[1, 2, 4]).unwrap()).unwrap();
        assert_eq!(paley.d(), 2);

        let err = attached_scheme(&Digraph::cayley(5, &[1, 2]).unwrap()).unwrap_err();
        assert!(matches!(err, Error::NotWdr(_)));

        let circuit5 = attached_scheme(&Digraph::cayley(5, &[1]).unwrap()).unwrap();
        assert_eq!(circuit5.d(), 4);
        assert!(circuit5.valencies().iter().all(|&k| k == 1));
    }

    #[test]
    fn attached_scheme_rejects_undirected_and_disconnected() {
        let und = Digraph::cayley(5, &[1, 4]).unwrap();
        assert_eq!(attached_scheme(&und).unwrap_err(), Error::UndirectedInput);
        let disc = Digraph::cayley(6, &[2]).unwrap();
        assert!(matches!(
            attached_scheme(&disc).unwrap_err(),
            Error::NotStronglyConnected { .. }
        ));
    }

    #[test]
    fn notwdr_witness_is_checkable() {
        // the two witness pairs really do have different counts
        let g = Digraph::cayley(5, &[1, 2]).unwrap();
        let partition = g.two_way_partition().unwrap();
        let err = from_partition(partition.clone()).unwrap_err();
        if let Error::NonConstantIntersection { i, j, l, pair_a, count_a, pair_b, count_b } = err {
            let naive = |(x, y): (usize, usize)| -> usize {
                let jstar = (0..=partition.d())
                    .find(|&c| {
                        (0..5).any(|a| {
                            (0..5).any(|b| {
                                partition.class_of(a, b) == j && partition.class_of(b, a) == c
                            })
                        })
                    })
                    .unwrap();
                (0..5)
                    .filter(|&z| {
                        partition.class_of(x, z) == i && partition.class_of(y, z) == jstar
                    })
                    .count()
            };
            assert_eq!(partition.class_of(pair_a.0, pair_a.1), l);
            assert_eq!(partition.class_of(pair_b.0, pair_b.1), l);
            assert_eq!(naive(pair_a), count_a);
            assert_eq!(naive(pair_b), count_b);
            assert_ne!(count_a, count_b);
        } else {
            panic!("expected NonConstantIntersection");
        }
    }

    #[test]
    fn product_examples() {
        let s = cay13_scheme();
        // classes: 1 = {1,3,9}, 2 = {4,10,12}, 3 = {2,5,6}, 4 = {7,8,11}
        let single = |i: usize| BTreeSet::from([i]);
        assert_eq!(
            s.product(&single(1), &single(1)).unwrap(),
            BTreeSet::from([2, 3])
        );
        assert_eq!(
            s.product(&single(1), &single(2)).unwrap(),
            BTreeSet::from([0, 3, 4])
        );
        // identity class acts as identity
        for f in 1..=4 {
            assert_eq!(s.product(&single(0), &single(f)).unwrap(), single(f));
        }
        assert!(matches!(
            s.product(&single(7), &single(1)),
            Err(Error::IndexOutOfRange { .. })
        ));
    }

    #[test]
    fn closure_examples() {
        let s = cay13_scheme();
        assert_eq!(
            s.closure(&BTreeSet::from([1])).unwrap(),
            BTreeSet::from([0, 1, 2, 3, 4])
        );
        assert_eq!(s.closure(&BTreeSet::from([0])).unwrap(), BTreeSet::from([0]));

        let c6 = attached_scheme(&Digraph::cayley(6, &[1]).unwrap()).unwrap();
        let two = c6.partition().class_of(0, 2);
        let closure = s6_closure(&c6, two);
        let expected: BTreeSet<usize> = [0, c6.partition().class_of(0, 2), c6.partition().class_of(0, 4)]
            .into();
        assert_eq!(closure, expected);
    }

    fn s6_closure(s: &AssociationScheme, seed: usize) -> BTreeSet<usize> {
        s.closure(&BTreeSet::from([seed])).unwrap()
    }

    #[test]
    fn primitivity_examples() {
        assert!(cay13_scheme().is_primitive());
        let c6 = attached_scheme(&Digraph::cayley(6, &[1]).unwrap()).unwrap();
        assert!(!c6.is_primitive());
        for p in [5usize, 7, 11] {
            let c = attached_scheme(&Digraph::cayley(p, &[1]).unwrap()).unwrap();
            assert!(c.is_primitive(), "circuit of prime length {p}");
        }
    }

    #[test]
    fn report_flags() {
        let s = cay13_scheme();
        let r = s.report();
        assert!(r.commutative && r.skew_symmetric && r.primitive && !r.symmetric);
        assert_eq!(r.pseudocyclic, Some(true));
        assert_eq!(r.multiplicities, Some(vec![1, 3, 3, 3, 3]));

        let paley = attached_scheme(&Digraph::cayley(7, &[1, 2, 4]).unwrap()).unwrap();
        let r = paley.report();
        assert!(r.commutative && !r.symmetric);

        let g5 = group_scheme(5);
        assert!(g5.report().skew_symmetric);
    }

    #[test]
    fn identity_suite_passes_on_valid_schemes() {
        assert!(cay13_scheme().verify_intersection_identities().passed());
        assert!(group_scheme(7).verify_intersection_identities().passed());
    }

    #[test]
    fn identity_suite_detects_mutation() {
        let s = cay13_scheme();
        // bump p_{1,1}^2 by one
        let broken = s.with_tensor_entry(1, 1, 2, s.p(1, 1, 2) as u32 + 1);
        let report = broken.verify_intersection_identities();
        let v = report.violation.expect("mutation must be detected");
        assert_eq!(v.identity, IntersectionIdentity::ValencyProduct);
        assert_eq!(v.indices, vec![1, 1]);
    }

    #[test]
    fn row_sum_property() {
        let s = cay13_scheme();
        let k = s.valencies();
        for i in 0..=s.d() {
            for l in 0..=s.d() {
                let sum: usize = (0..=s.d()).map(|j| s.p(i, j, l)).sum();
                assert_eq!(sum, k[i]);
            }
        }
    }

    #[test]
    fn closure_is_idempotent_and_monotone() {
        let s = cay13_scheme();
        let f = s.closure(&BTreeSet::from([3])).unwrap();
        assert_eq!(s.closure(&f).unwrap(), f);
        let g = s.closure(&BTreeSet::from([3, 4])).unwrap();
        assert!(f.is_subset(&g));
    }
}
