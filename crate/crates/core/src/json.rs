//! Stable JSON shapes for the library's values.
//!
//! Every object carries a top-level `"schema": 1`. Field order follows
//! struct declaration order and collections are kept sorted, so identical
//! inputs serialize to byte-identical JSON.

use serde::{Deserialize, Serialize};

use crate::classifier::{CensusVerdict, ClassificationResult, Hit};
use crate::digraph::Digraph;
use crate::scheme::{AssociationScheme, SchemeReport};
use crate::spectra::Eigenmatrix;
use crate::theorems::{Family, SkewWitness};

pub const SCHEMA_VERSION: u32 = 1;

/// `{n, S}` for Cayley digraphs, `{n, adjacency}` otherwise.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct DigraphJson {
    pub schema: u32,
    pub n: usize,
    #[serde(rename = "S", skip_serializing_if = "Option::is_none")]
    pub s: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub adjacency: Option<Vec<Vec<usize>>>,
}

impl From<&Digraph> for DigraphJson {
    fn from(g: &Digraph) -> Self {
        match g.cayley_tag() {
            Some(tag) => DigraphJson {
                schema: SCHEMA_VERSION,
                n: tag.modulus,
                s: Some(tag.connection_set.clone()),
                adjacency: None,
            },
            None => DigraphJson {
                schema: SCHEMA_VERSION,
                n: g.n(),
                s: None,
                adjacency: Some((0..g.n()).map(|v| g.out_neighbors(v)).collect()),
            },
        }
    }
}

/// Full scheme data. `difference_classes` is present exactly when the
/// partition is translation-invariant over `Z_n`, which is what lets the
/// spectra command re-ingest this object.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SchemeJson {
    pub schema: u32,
    pub n: usize,
    pub d: usize,
    pub involution: Vec<usize>,
    pub valencies: Vec<usize>,
    /// Dense tensor indexed `[i][j][l]`.
    pub tensor: Vec<Vec<Vec<u32>>>,
    pub class_labels: Option<Vec<(usize, usize)>>,
    pub difference_classes: Option<Vec<Vec<usize>>>,
}

impl From<&AssociationScheme> for SchemeJson {
    fn from(s: &AssociationScheme) -> Self {
        SchemeJson {
            schema: SCHEMA_VERSION,
            n: s.n(),
            d: s.d(),
            involution: (0..=s.d()).map(|i| s.involution(i)).collect(),
            valencies: s.valencies().to_vec(),
            tensor: s.tensor_nested(),
            class_labels: s.partition().labels().map(|l| l.to_vec()),
            difference_classes: s.partition().difference_classes(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ReportJson {
    pub schema: u32,
    pub d: usize,
    pub valencies: Vec<usize>,
    pub commutative: bool,
    pub symmetric: bool,
    pub skew_symmetric: bool,
    pub primitive: bool,
    pub pseudocyclic: Option<bool>,
    pub multiplicities: Option<Vec<usize>>,
}

impl From<&SchemeReport> for ReportJson {
    fn from(r: &SchemeReport) -> Self {
        ReportJson {
            schema: SCHEMA_VERSION,
            d: r.d,
            valencies: r.valencies.clone(),
            commutative: r.commutative,
            symmetric: r.symmetric,
            skew_symmetric: r.skew_symmetric,
            primitive: r.primitive,
            pseudocyclic: r.pseudocyclic,
            multiplicities: r.multiplicities.clone(),
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SpectraJson {
    pub schema: u32,
    pub n: usize,
    pub multiplicities: Vec<usize>,
    pub pseudocyclic: bool,
}

impl From<&Eigenmatrix> for SpectraJson {
    fn from(e: &Eigenmatrix) -> Self {
        SpectraJson {
            schema: SCHEMA_VERSION,
            n: e.n(),
            multiplicities: e.multiplicities(),
            pseudocyclic: e.is_pseudocyclic(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SkewScanJson {
    pub schema: u32,
    pub n_max: u64,
    pub feasible: Vec<u64>,
    pub witnesses: Vec<SkewWitness>,
}

impl SkewScanJson {
    pub fn new(n_max: u64, witnesses: Vec<SkewWitness>) -> Self {
        SkewScanJson {
            schema: SCHEMA_VERSION,
            n_max,
            feasible: witnesses.iter().map(|w| w.n).collect(),
            witnesses,
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct HitJson {
    #[serde(rename = "S")]
    pub s: Vec<usize>,
    pub d: usize,
    pub valencies: Vec<usize>,
    pub primitive: bool,
    pub pseudocyclic: bool,
    pub family: Option<Family>,
}

impl From<&Hit> for HitJson {
    fn from(h: &Hit) -> Self {
        HitJson {
            s: h.connection_set.clone(),
            d: h.d,
            valencies: h.valencies.clone(),
            primitive: h.primitive,
            pseudocyclic: h.pseudocyclic,
            family: h.family,
        }
    }
}

/// Census of one prime. Wall time is intentionally not serialized: the
/// JSON for identical inputs must be byte-identical across runs.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ClassificationJson {
    pub schema: u32,
    pub p: usize,
    pub candidates_examined: u64,
    pub hits: Vec<HitJson>,
    pub imprimitive_wdr: Vec<Vec<usize>>,
}

impl From<&ClassificationResult> for ClassificationJson {
    fn from(r: &ClassificationResult) -> Self {
        ClassificationJson {
            schema: SCHEMA_VERSION,
            p: r.p,
            candidates_examined: r.candidates_examined,
            hits: r.hits.iter().map(HitJson::from).collect(),
            imprimitive_wdr: r.imprimitive_wdr.clone(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct PrimeCensusJson {
    pub p: usize,
    pub expected: Vec<Vec<usize>>,
    pub candidates_examined: u64,
    pub hits: Vec<HitJson>,
    pub ok: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct CensusJson {
    pub schema: u32,
    pub p_min: usize,
    pub p_max: usize,
    pub pass: bool,
    pub primes: Vec<PrimeCensusJson>,
    pub discrepancies: Vec<String>,
}

impl From<&CensusVerdict> for CensusJson {
    fn from(v: &CensusVerdict) -> Self {
        CensusJson {
            schema: SCHEMA_VERSION,
            p_min: v.p_min,
            p_max: v.p_max,
            pass: v.pass,
            primes: v
                .primes
                .iter()
                .map(|e| PrimeCensusJson {
                    p: e.p,
                    expected: e.expected.clone(),
                    candidates_examined: e.result.candidates_examined,
                    hits: e.result.hits.iter().map(HitJson::from).collect(),
                    ok: e.ok,
                })
                .collect(),
            discrepancies: v.discrepancies.clone(),
        }
    }
}

/// Payload accepted by the spectra entry points: either a bare list of
/// difference classes or a full scheme object carrying them.
#[derive(Clone, Debug, Deserialize)]
#[serde(untagged)]
pub enum ClassesInput {
    Classes(Vec<Vec<usize>>),
    Scheme(SchemeJson),
}

impl ClassesInput {
    /// The difference classes, if present.
    pub fn into_classes(self) -> Option<Vec<Vec<usize>>> {
        match self {
            ClassesInput::Classes(c) => Some(c),
            ClassesInput::Scheme(s) => s.difference_classes,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::cyclotomic_scheme;

    #[test]
    fn scheme_json_roundtrips_difference_classes() {
        let s = cyclotomic_scheme(13, 4).unwrap();
        let json = SchemeJson::from(&s);
        let text = serde_json::to_string(&json).unwrap();
        let parsed: ClassesInput = serde_json::from_str(&text).unwrap();
        assert_eq!(
            parsed.into_classes().unwrap(),
            vec![
                vec![1, 3, 9],
                vec![2, 5, 6],
                vec![4, 10, 12],
                vec![7, 8, 11]
            ]
        );
    }

    #[test]
    fn bare_class_lists_parse() {
        let parsed: ClassesInput = serde_json::from_str("[[1,2,4],[3,5,6]]").unwrap();
        assert_eq!(
            parsed.into_classes().unwrap(),
            vec![vec![1, 2, 4], vec![3, 5, 6]]
        );
    }

    #[test]
    fn digraph_json_shapes() {
        let g = Digraph::cayley(5, &[1, 2]).unwrap();
        let j = DigraphJson::from(&g);
        let text = serde_json::to_string(&j).unwrap();
        assert_eq!(text, r#"{"schema":1,"n":5,"S":[1,2]}"#);

        let g = Digraph::from_out_neighbors(&[vec![1], vec![0]]).unwrap();
        let j = DigraphJson::from(&g);
        let text = serde_json::to_string(&j).unwrap();
        assert_eq!(text, r#"{"schema":1,"n":2,"adjacency":[[1],[0]]}"#);
    }

    #[test]
    fn serialization_is_deterministic() {
        let s = cyclotomic_scheme(13, 4).unwrap();
        let a = serde_json::to_string(&SchemeJson::from(&s)).unwrap();
        let b = serde_json::to_string(&SchemeJson::from(&s)).unwrap();
        assert_eq!(a, b);
    }
}
