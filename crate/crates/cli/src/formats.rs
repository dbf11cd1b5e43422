//! JSON file formats. Complex numbers are `[re, im]`, matrices are lists of
//! rows, sheets are 1-based.

use std::collections::HashSet;
use std::fmt;
use std::marker::PhantomData;

use hardy_cover_core::{
    build_covering, CMatrix, CoveringAction, DoubledPresentation, GeneratorLabel, GroupPresentation, InducedRep,
    MatrixRep, Presentation, SchreierLabel, SheetPermutation, SubgroupRep, Transversal, Word, C64,
};
use serde::de::{MapAccess, Visitor};
use serde::ser::SerializeMap;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{CliError, Result};

pub type MatrixJson = Vec<Vec<[f64; 2]>>;
pub type WordJson = Vec<(String, i8)>;

/// A JSON object that keeps key order and rejects duplicate keys.
#[derive(Debug, Clone, PartialEq)]
pub struct OrderedMap<V>(pub Vec<(String, V)>);

impl<V> OrderedMap<V> {
    pub fn iter(&self) -> impl Iterator<Item = (&str, &V)> {
        self.0.iter().map(|(k, v)| (k.as_str(), v))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl<V> Default for OrderedMap<V> {
    fn default() -> Self {
        OrderedMap(Vec::new())
    }
}

impl<V> FromIterator<(String, V)> for OrderedMap<V> {
    fn from_iter<I: IntoIterator<Item = (String, V)>>(iter: I) -> Self {
        OrderedMap(iter.into_iter().collect())
    }
}

impl<V: Serialize> Serialize for OrderedMap<V> {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(self.0.len()))?;
        for (k, v) in &self.0 {
            map.serialize_entry(k, v)?;
        }
        map.end()
    }
}

impl<'de, V: Deserialize<'de>> Deserialize<'de> for OrderedMap<V> {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        struct MapVisitor<V>(PhantomData<V>);

        impl<'de, V: Deserialize<'de>> Visitor<'de> for MapVisitor<V> {
            type Value = OrderedMap<V>;

            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str("a JSON object")
            }

            fn visit_map<A: MapAccess<'de>>(self, mut access: A) -> std::result::Result<Self::Value, A::Error> {
                let mut seen = HashSet::new();
                let mut out = Vec::new();
                while let Some((k, v)) = access.next_entry::<String, V>()? {
                    if !seen.insert(k.clone()) {
                        return Err(serde::de::Error::custom(format!("duplicate key `{k}`")));
                    }
                    out.push((k, v));
                }
                Ok(OrderedMap(out))
            }
        }

        deserializer.deserialize_map(MapVisitor(PhantomData))
    }
}

pub fn complex_json(z: C64) -> [f64; 2] {
    [z.re, z.im]
}

pub fn matrix_to_json(m: &CMatrix) -> MatrixJson {
    m.to_rows().into_iter().map(|row| row.into_iter().map(complex_json).collect()).collect()
}

pub fn matrix_from_json(rows: &MatrixJson, what: &str) -> Result<CMatrix> {
    let cols = rows.first().map_or(0, Vec::len);
    if rows.iter().any(|r| r.len() != cols) {
        return Err(CliError::Config(format!("{what}: ragged matrix")));
    }
    if rows.len() != cols {
        return Err(CliError::Config(format!("{what}: matrix is {}x{cols}, expected square", rows.len())));
    }
    let data: Vec<Vec<C64>> = rows.iter().map(|r| r.iter().map(|&[re, im]| C64::new(re, im)).collect()).collect();
    Ok(CMatrix::from_rows(&data))
}

pub fn word_to_json<P: Presentation>(p: &P, w: &Word) -> WordJson {
    w.letters().iter().map(|l| (p.label(l.generator).expect("letter in range").to_string(), l.sign())).collect()
}

pub fn word_from_json<P: Presentation>(p: &P, w: &WordJson) -> Result<Word> {
    let pairs: Vec<(&str, i8)> = w.iter().map(|(g, e)| (g.as_str(), *e)).collect();
    Ok(p.parse_word(&pairs)?)
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PresentationJson {
    pub s: u32,
    pub k: u32,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub genus: Option<u32>,
    pub generators: Vec<String>,
    pub relator: WordJson,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub tau: Option<OrderedMap<WordJson>>,
}

impl PresentationJson {
    pub fn surface(p: &GroupPresentation) -> Self {
        PresentationJson {
            s: p.s,
            k: p.k,
            genus: None,
            generators: p.generators().iter().map(ToString::to_string).collect(),
            relator: word_to_json(p, p.relator()),
            tau: None,
        }
    }

    pub fn double(p: &DoubledPresentation) -> Self {
        let tau = p.generators().iter().zip(p.tau()).map(|(g, w)| (g.to_string(), word_to_json(p, w))).collect();
        PresentationJson {
            s: p.s,
            k: p.k,
            genus: Some(p.genus),
            generators: p.generators().iter().map(ToString::to_string).collect(),
            relator: word_to_json(p, p.relator()),
            tau: Some(tau),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CoveringJson {
    pub n: usize,
    pub perms: OrderedMap<Vec<usize>>,
}

impl CoveringJson {
    pub fn build(&self, p: &DoubledPresentation) -> Result<CoveringAction> {
        let mut perms = Vec::with_capacity(self.perms.len());
        for (label, images) in self.perms.iter() {
            let label: GeneratorLabel = label.parse()?;
            perms.push((label, SheetPermutation::from_one_based(images)?));
        }
        Ok(build_covering(p.clone(), self.n, &perms)?)
    }

    pub fn from_covering(c: &CoveringAction) -> Self {
        let p = c.presentation();
        let perms = p.generators().iter().zip(c.permutations()).map(|(g, s)| (g.to_string(), s.one_based())).collect();
        CoveringJson { n: c.sheets(), perms }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LatticeJson {
    pub p: MatrixJson,
    pub q: MatrixJson,
}

/// `χ₁` given by images of Schreier generators (`"3:A1"`), by images of the
/// double's generators (restricted to the subgroup), or, on the torus, by a
/// commuting pair on the lattice basis.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RepresentationJson {
    pub m: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub images: Option<OrderedMap<MatrixJson>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lattice: Option<LatticeJson>,
}

impl RepresentationJson {
    pub fn build(&self, t: &Transversal) -> Result<SubgroupRep> {
        let check_dim = |m: &CMatrix, what: &str| {
            if m.rows() == self.m {
                Ok(())
            } else {
                Err(CliError::Config(format!("{what}: expected {0}x{0} matrix, found {1}x{1}", self.m, m.rows())))
            }
        };
        match (&self.images, &self.lattice) {
            (Some(images), None) => {
                let schreier = images.iter().next().is_some_and(|(k, _)| k.contains(':'));
                if schreier || (images.is_empty() && t.schreier_generators().is_empty()) {
                    let mut pairs = Vec::new();
                    for (label, m) in images.iter() {
                        let mat = matrix_from_json(m, label)?;
                        check_dim(&mat, label)?;
                        pairs.push((label.parse::<SchreierLabel>()?, mat));
                    }
                    Ok(SubgroupRep::new(t, self.m, &pairs)?)
                } else {
                    let p = t.covering().presentation();
                    let mut pairs = Vec::new();
                    for (label, m) in images.iter() {
                        let mat = matrix_from_json(m, label)?;
                        check_dim(&mat, label)?;
                        pairs.push((label.parse::<GeneratorLabel>()?, mat));
                    }
                    let chi = MatrixRep::new(p, self.m, &pairs)?;
                    Ok(SubgroupRep::restrict(t, &chi)?)
                }
            }
            (None, Some(lattice)) => {
                let p = matrix_from_json(&lattice.p, "lattice.p")?;
                let q = matrix_from_json(&lattice.q, "lattice.q")?;
                check_dim(&p, "lattice.p")?;
                check_dim(&q, "lattice.q")?;
                Ok(hardy_cover_core::torus::lattice_rep(t, &p, &q)?)
            }
            _ => Err(CliError::Config("representation needs exactly one of `images` or `lattice`".into())),
        }
    }
}

/// The induced representation file written by `induce`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InducedJson {
    pub n: usize,
    pub m: usize,
    /// Per generator, the 1-based block column of each block row.
    pub block_structure: OrderedMap<Vec<usize>>,
    pub images: OrderedMap<MatrixJson>,
}

impl InducedJson {
    pub fn from_induced(chi2: &InducedRep) -> Self {
        let labels = chi2.rep().labels();
        InducedJson {
            n: chi2.sheets(),
            m: chi2.block_dim(),
            block_structure: labels
                .iter()
                .zip(chi2.block_columns())
                .map(|(g, cols)| (g.to_string(), cols.iter().map(|c| c + 1).collect()))
                .collect(),
            images: labels.iter().zip(chi2.rep().images()).map(|(g, m)| (g.to_string(), matrix_to_json(m))).collect(),
        }
    }
}
