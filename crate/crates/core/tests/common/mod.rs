//! Independent oracles shared by the integration suites.
//!
//! Everything here recomputes results from first principles — triple
//! loops, boolean matrix powers, dense complex arithmetic — so the
//! library's word-parallel paths are checked against code with no shared
//! machinery.

#![allow(dead_code, clippy::needless_range_loop)]

use rand::rngs::StdRng;
use rand::Rng;

use wdr_core::digraph::{Digraph, RelationPartition};

/// Verdict of the brute-force scheme check, mirroring the library's
/// deterministic first-violation rule: per class `l` the first `(i, j)`
/// in lexicographic order, then the least `(i, j, l)` overall.
pub enum NaiveOutcome {
    Scheme {
        involution: Vec<usize>,
        tensor: Vec<Vec<Vec<usize>>>,
    },
    TransposeFailure {
        class: usize,
        x: usize,
        y: usize,
    },
    CountFailure {
        i: usize,
        j: usize,
        l: usize,
    },
}

pub fn naive_scheme_check(p: &RelationPartition) -> NaiveOutcome {
    let n = p.n();
    let m = p.d() + 1;

    let mut inv = vec![usize::MAX; m];
    let mut first = vec![None; m];
    for x in 0..n {
        for y in 0..n {
            let k = p.class_of(x, y);
            if first[k].is_none() {
                first[k] = Some((x, y));
                inv[k] = p.class_of(y, x);
            }
        }
    }
    for x in 0..n {
        for y in 0..n {
            let k = p.class_of(x, y);
            if p.class_of(y, x) != inv[k] {
                return NaiveOutcome::TransposeFailure { class: k, x, y };
            }
        }
    }

    let mut tensor = vec![vec![vec![0usize; m]; m]; m];
    let mut best: Option<(usize, usize, usize)> = None;
    for l in 0..m {
        'scan: for i in 0..m {
            for j in 0..m {
                let jstar = inv[j];
                let mut reference: Option<usize> = None;
                for x in 0..n {
                    for y in 0..n {
                        if p.class_of(x, y) != l {
                            continue;
                        }
                        let count = (0..n)
                            .filter(|&z| p.class_of(x, z) == i && p.class_of(y, z) == jstar)
                            .count();
                        match reference {
                            None => reference = Some(count),
                            Some(r) if r != count => {
                                let cand = (i, j, l);
                                best = Some(match best {
                                    None => cand,
                                    Some(b) if cand < b => cand,
                                    Some(b) => b,
                                });
                                break 'scan;
                            }
                            _ => {}
                        }
                    }
                }
                tensor[i][j][l] = reference.expect("classes are nonempty");
            }
        }
    }
    match best {
        Some((i, j, l)) => NaiveOutcome::CountFailure { i, j, l },
        None => NaiveOutcome::Scheme {
            involution: inv,
            tensor,
        },
    }
}

/// Distances by boolean matrix powers: dist(x, y) is the first k >= 1
/// with a length-k walk, 0 on the diagonal. `None` when some ordered
/// pair stays unreachable.
pub fn matrix_power_distances(g: &Digraph) -> Option<Vec<Vec<usize>>> {
    let n = g.n();
    let adj: Vec<Vec<bool>> = (0..n)
        .map(|x| (0..n).map(|y| g.has_arc(x, y)).collect())
        .collect();
    let mut dist = vec![vec![usize::MAX; n]; n];
    for (x, row) in dist.iter_mut().enumerate() {
        row[x] = 0;
    }
    let mut reach = adj.clone();
    for k in 1..=n {
        for x in 0..n {
            for y in 0..n {
                if x != y && reach[x][y] && dist[x][y] == usize::MAX {
                    dist[x][y] = k;
                }
            }
        }
        // reach = reach * adj
        let mut next = vec![vec![false; n]; n];
        for x in 0..n {
            for z in 0..n {
                if reach[x][z] {
                    for y in 0..n {
                        if adj[z][y] {
                            next[x][y] = true;
                        }
                    }
                }
            }
        }
        reach = next;
    }
    if dist.iter().any(|row| row.contains(&usize::MAX)) {
        return None;
    }
    Some(dist)
}

/// A random translation partition over `Z_n`: every difference gets a
/// class, classes compacted to stay contiguous and nonempty.
pub fn random_translation_partition(rng: &mut StdRng, n: usize) -> RelationPartition {
    let dmax = rng.gen_range(1..n);
    let mut classes: Vec<Vec<usize>> = vec![Vec::new(); dmax];
    for c in 1..n {
        classes[rng.gen_range(0..dmax)].push(c);
    }
    classes.retain(|c| !c.is_empty());
    RelationPartition::from_difference_classes(n, &classes).expect("partition by construction")
}

/// A random digraph on a directed circuit backbone, so it is always
/// strongly connected.
pub fn random_backboned_digraph(rng: &mut StdRng, n: usize, extra_arc_prob: f64) -> Digraph {
    let mut lists: Vec<Vec<usize>> = (0..n).map(|x| vec![(x + 1) % n]).collect();
    for x in 0..n {
        for y in 0..n {
            if y != x && y != (x + 1) % n && rng.gen_bool(extra_arc_prob) {
                lists[x].push(y);
            }
        }
    }
    Digraph::from_out_neighbors(&lists).expect("no loops or duplicates by construction")
}

/// A plain random digraph; may be disconnected.
pub fn random_digraph(rng: &mut StdRng, n: usize, arc_prob: f64) -> Digraph {
    let mut lists: Vec<Vec<usize>> = vec![Vec::new(); n];
    for x in 0..n {
        for y in 0..n {
            if y != x && rng.gen_bool(arc_prob) {
                lists[x].push(y);
            }
        }
    }
    Digraph::from_out_neighbors(&lists).expect("no loops or duplicates by construction")
}
