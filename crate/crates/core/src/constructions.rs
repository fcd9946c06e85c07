//! Prime-field arithmetic and the classical scheme constructions over
//! `Z_p`: cyclotomic schemes, Paley digraphs, circuits, and the multiplier
//! action on connection sets with its canonical forms.

use std::collections::BTreeSet;

use crate::digraph::{Digraph, RelationPartition};
use crate::error::{Error, Result};
use crate::scheme::{from_partition, AssociationScheme};

/// Trial-division primality test; plenty at desk scale.
pub fn is_prime(n: usize) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut q = 3;
    while q * q <= n {
        if n.is_multiple_of(q) {
            return false;
        }
        q += 2;
    }
    true
}

fn is_odd_prime(n: usize) -> bool {
    n >= 3 && is_prime(n)
}

pub fn mod_pow(base: usize, mut exp: usize, modulus: usize) -> usize {
    let m = modulus as u64;
    let mut b = base as u64 % m;
    let mut result = 1u64 % m;
    while exp > 0 {
        if exp & 1 == 1 {
            result = result * b % m;
        }
        b = b * b % m;
        exp >>= 1;
    }
    result as usize
}

fn distinct_prime_factors(mut n: usize) -> Vec<usize> {
    let mut out = Vec::new();
    let mut q = 2;
    while q * q <= n {
        if n.is_multiple_of(q) {
            out.push(q);
            while n.is_multiple_of(q) {
                n /= q;
            }
        }
        q += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Smallest primitive root modulo an odd prime `p`.
///
/// A candidate `a` is a primitive root iff `a^((p-1)/q) != 1` for every
/// prime `q` dividing `p - 1`.
pub fn primitive_root(p: usize) -> Result<usize> {
    if !is_odd_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let factors = distinct_prime_factors(p - 1);
    (2..p)
        .find(|&a| factors.iter().all(|&q| mod_pow(a, (p - 1) / q, p) != 1))
        .ok_or(Error::NotPrime(p))
}

/// Nonzero quadratic residues modulo `p`, sorted.
pub fn quadratic_residues(p: usize) -> Vec<usize> {
    let set: BTreeSet<usize> = (1..p).map(|x| x * x % p).collect();
    set.into_iter().collect()
}

/// The data of the cyclotomic scheme `Cyc(p, d)`: the index-`d` subgroup
/// of `Z_p^*` and its cosets.
///
/// Coset order is normalised by smallest element, so the classes do not
/// depend on which primitive root was found. All classes have size
/// `(p - 1) / d`.
#[derive(Clone, Debug)]
pub struct CyclotomicParams {
    pub p: usize,
    pub d: usize,
    pub alpha: usize,
    /// The `d` cosets, each sorted ascending; the family is sorted by its
    /// smallest element, so `classes[0]` contains 1.
    pub classes: Vec<Vec<usize>>,
}

pub fn cyclotomic_params(p: usize, d: usize) -> Result<CyclotomicParams> {
    if !is_odd_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if d == 0 || !(p - 1).is_multiple_of(d) {
        return Err(Error::NotDivisor { divisor: d, of: p - 1 });
    }
    let alpha = primitive_root(p)?;
    let step = mod_pow(alpha, d, p);
    let mut subgroup = Vec::with_capacity((p - 1) / d);
    let mut x = 1;
    loop {
        subgroup.push(x);
        x = x * step % p;
        if x == 1 {
            break;
        }
    }
    let mut classes: Vec<Vec<usize>> = Vec::with_capacity(d);
    let mut rep = 1;
    for _ in 0..d {
        let mut class: Vec<usize> = subgroup.iter().map(|&h| rep * h % p).collect();
        class.sort_unstable();
        classes.push(class);
        rep = rep * alpha % p;
    }
    classes.sort_by_key(|c| c[0]);
    Ok(CyclotomicParams { p, d, alpha, classes })
}

/// The cyclotomic scheme `Cyc(p, d)`: the translation scheme over `Z_p`
/// whose difference classes are the cosets of the index-`d` subgroup of
/// `Z_p^*`.
pub fn cyclotomic_scheme(p: usize, d: usize) -> Result<AssociationScheme> {
    let params = cyclotomic_params(p, d)?;
    let partition = RelationPartition::from_difference_classes(p, &params.classes)?;
    from_partition(partition)
}

/// The Paley digraph `Cay(Z_p, QR)` on the nonzero quadratic residues,
/// defined for primes `p ≡ 3 (mod 4)`.
pub fn paley_digraph(p: usize) -> Result<Digraph> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if p % 4 != 3 {
        return Err(Error::NotThreeModFour(p));
    }
    Digraph::cayley(p, &quadratic_residues(p))
}

/// The directed circuit `Cay(Z_n, {1})`, for `n >= 3`.
pub fn circuit(n: usize) -> Result<Digraph> {
    if n < 3 {
        return Err(Error::TooSmall(n));
    }
    Digraph::cayley(n, &[1])
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// A connection set `S ⊆ {1, ..., p-1}` for Cayley digraphs over `Z_p`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct ConnectionSet {
    modulus: usize,
    elems: Vec<usize>,
}

impl ConnectionSet {
    pub fn new(modulus: usize, elems: &[usize]) -> Result<Self> {
        let set: BTreeSet<usize> = elems.iter().copied().collect();
        if set.is_empty() {
            return Err(Error::EmptyConnectionSet);
        }
        if set.contains(&0) {
            return Err(Error::ZeroInConnectionSet);
        }
        if let Some(&s) = set.iter().find(|&&s| s >= modulus) {
            return Err(Error::ElementOutOfRange { element: s, modulus });
        }
        Ok(ConnectionSet {
            modulus,
            elems: set.into_iter().collect(),
        })
    }

    pub fn modulus(&self) -> usize {
        self.modulus
    }

    /// Sorted elements.
    pub fn elems(&self) -> &[usize] {
        &self.elems
    }

    pub fn digraph(&self) -> Result<Digraph> {
        Digraph::cayley(self.modulus, &self.elems)
    }

    /// True when `S = -S`, i.e. the Cayley digraph is undirected.
    pub fn is_symmetric(&self) -> bool {
        self.elems
            .iter()
            .all(|&s| self.elems.binary_search(&(self.modulus - s)).is_ok())
    }

    /// The image `sS = { s·x mod p : x in S }` under a unit multiplier.
    /// As digraphs, `Cay(Z_p, S)` and `Cay(Z_p, sS)` are isomorphic.
    pub fn multiplier_image(&self, s: usize) -> Result<ConnectionSet> {
        if gcd(s % self.modulus, self.modulus) != 1 {
            return Err(Error::NotAUnit { s, modulus: self.modulus });
        }
        let elems: Vec<usize> = self.elems.iter().map(|&x| s * x % self.modulus).collect();
        ConnectionSet::new(self.modulus, &elems)
    }

    /// The lexicographically least sorted tuple among all multiplier
    /// images of `S`. Constant on multiplier orbits, so it dedups the
    /// classifier's search space; the modulus must be prime.
    pub fn canonical_form(&self) -> Result<ConnectionSet> {
        if !is_prime(self.modulus) {
            return Err(Error::NotPrime(self.modulus));
        }
        let mut best = self.clone();
        for m in 2..self.modulus {
            let image = self.multiplier_image(m)?;
            if image.elems < best.elems {
                best = image;
            }
        }
        Ok(best)
    }
}

/// Test whether a translation-invariant partition over `Z_p` is the
/// cyclotomic partition with its own class count: returns `Some(d)` when
/// the difference classes coincide, as a set family, with the classes of
/// `Cyc(p, d)` where `d` is the number of non-diagonal classes.
pub fn cyclotomic_match(p: usize, partition: &RelationPartition) -> Result<Option<usize>> {
    if !is_odd_prime(p) {
        return Err(Error::NotPrime(p));
    }
    assert_eq!(partition.n(), p, "partition must live on Z_p");
    if let Some((x, y)) = partition.translation_witness() {
        return Err(Error::NotTranslationInvariant { x, y });
    }
    let d = partition.d();
    if d == 0 || !(p - 1).is_multiple_of(d) {
        return Ok(None);
    }
    let mine: BTreeSet<Vec<usize>> = partition
        .difference_classes()
        .expect("translation invariance was just checked")
        .into_iter()
        .collect();
    let cyc: BTreeSet<Vec<usize>> = cyclotomic_params(p, d)?.classes.into_iter().collect();
    Ok(if mine == cyc { Some(d) } else { None })
}
