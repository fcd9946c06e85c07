//! Eigenvalues and multiplicities of translation schemes over `Z_n`.
//!
//! For a translation scheme the common eigenvectors of all class
//! adjacency matrices are the characters `χ_j(x) = exp(2πi·jx/n)`, so the
//! eigenvalue of class `i` at character `j` is the character sum over the
//! difference class `D_i`. Multiplicities fall out of grouping characters
//! with equal eigenvalue rows; no idempotent matrices are ever formed.

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Character-sum eigenvalue table of a translation partition.
///
/// Rows are indexed by characters `j in 0..n`, columns by classes
/// `i in 0..=d` with column 0 the diagonal class. `dual_classes` groups
/// characters whose rows agree; for a valid scheme there are exactly
/// `d + 1` groups and their sizes are the multiplicities.
#[derive(Clone, Debug)]
pub struct Eigenmatrix {
    n: usize,
    d: usize,
    entries: Vec<Complex64>,
    dual_classes: Vec<Vec<usize>>,
}

/// Rows closer than this (entrywise, in either component) land in the
/// same dual class. Entries are sums of at most n unit vectors, so at
/// desk scale the floating error is orders of magnitude below the grain,
/// and genuinely distinct algebraic values sit far above it.
const GROUPING_GRAIN: f64 = 1e-6;

/// Build the eigenvalue table for difference classes partitioning `1..n`.
pub fn eigenmatrix(n: usize, difference_classes: &[Vec<usize>]) -> Result<Eigenmatrix> {
    let mut seen = vec![false; n];
    seen[0] = true;
    for (idx, class) in difference_classes.iter().enumerate() {
        if class.is_empty() {
            return Err(Error::NotAPartition {
                n,
                detail: format!("class {idx} is empty"),
            });
        }
        for &c in class {
            if c == 0 || c >= n {
                return Err(Error::NotAPartition {
                    n,
                    detail: format!("element {c} out of range"),
                });
            }
            if seen[c] {
                return Err(Error::NotAPartition {
                    n,
                    detail: format!("element {c} appears twice"),
                });
            }
            seen[c] = true;
        }
    }
    if let Some(c) = seen.iter().position(|&s| !s) {
        return Err(Error::NotAPartition {
            n,
            detail: format!("element {c} is uncovered"),
        });
    }

    let d = difference_classes.len();
    let m = d + 1;
    let roots: Vec<Complex64> = (0..n)
        .map(|t| {
            let angle = 2.0 * std::f64::consts::PI * t as f64 / n as f64;
            Complex64::new(angle.cos(), angle.sin())
        })
        .collect();

    let mut entries = vec![Complex64::new(0.0, 0.0); n * m];
    for j in 0..n {
        entries[j * m] = Complex64::new(1.0, 0.0); // diagonal class {0}
        for (i, class) in difference_classes.iter().enumerate() {
            let mut sum = Complex64::new(0.0, 0.0);
            for &s in class {
                sum += roots[j * s % n];
            }
            entries[j * m + i + 1] = sum;
        }
    }

    // group characters by rounding rows to the grain and sorting the
    // keys; O(n log n) and independent of input order
    let key = |j: usize| -> Vec<(i64, i64)> {
        (0..m)
            .map(|i| {
                let e = entries[j * m + i];
                (
                    (e.re / GROUPING_GRAIN).round() as i64,
                    (e.im / GROUPING_GRAIN).round() as i64,
                )
            })
            .collect()
    };
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| key(a).cmp(&key(b)).then(a.cmp(&b)));
    let mut dual_classes: Vec<Vec<usize>> = Vec::new();
    let mut current_key: Option<Vec<(i64, i64)>> = None;
    for j in order {
        let k = key(j);
        if current_key.as_ref() == Some(&k) {
            dual_classes.last_mut().unwrap().push(j);
        } else {
            current_key = Some(k);
            dual_classes.push(vec![j]);
        }
    }
    for class in &mut dual_classes {
        class.sort_unstable();
    }
    dual_classes.sort_by_key(|c| c[0]);
    debug_assert_eq!(dual_classes.iter().map(Vec::len).sum::<usize>(), n);

    Ok(Eigenmatrix {
        n,
        d,
        entries,
        dual_classes,
    })
}

impl Eigenmatrix {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn d(&self) -> usize {
        self.d
    }

    /// Entry `P[j][i]`: the eigenvalue of class `i` on character `j`.
    pub fn entry(&self, j: usize, i: usize) -> Complex64 {
        self.entries[j * (self.d + 1) + i]
    }

    pub fn row(&self, j: usize) -> &[Complex64] {
        let m = self.d + 1;
        &self.entries[j * m..(j + 1) * m]
    }

    /// Characters grouped by equal rows; the group containing character 0
    /// comes first.
    pub fn dual_classes(&self) -> &[Vec<usize>] {
        &self.dual_classes
    }

    /// Sizes of the dual classes, ascending. For a valid scheme these are
    /// the ranks of the primitive idempotents and sum to `n`; the class
    /// of the trivial character contributes the trivial multiplicity 1.
    pub fn multiplicities(&self) -> Vec<usize> {
        let mut sizes: Vec<usize> = self.dual_classes.iter().map(Vec::len).collect();
        sizes.sort_unstable();
        sizes
    }

    /// Size of the dual class containing the trivial character.
    pub fn trivial_multiplicity(&self) -> usize {
        self.dual_classes
            .iter()
            .find(|c| c.contains(&0))
            .map(Vec::len)
            .unwrap_or(0)
    }

    /// True when all multiplicities other than the trivial one coincide.
    pub fn is_pseudocyclic(&self) -> bool {
        let mut others = self
            .dual_classes
            .iter()
            .filter(|c| !c.contains(&0))
            .map(Vec::len);
        match others.next() {
            None => true,
            Some(first) => others.all(|s| s == first),
        }
    }
}
