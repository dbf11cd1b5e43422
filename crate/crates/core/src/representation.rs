//! Unitary matrix representations of presented groups and of the Schreier
//! generators of a covering's subgroup.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use crate::check::{self, Check, EXACT_TOL};
use crate::covering::{SchreierLabel, Transversal};
use crate::error::{Error, Result};
use crate::linalg::CMatrix;
use crate::presentation::{GeneratorLabel, Presentation};
use crate::word::{Alphabet, Word};

/// Generator images over a fixed alphabet.
#[derive(Debug, Clone, PartialEq)]
struct Images {
    m: usize,
    alphabet: Alphabet,
    names: Vec<String>,
    images: Vec<CMatrix>,
}

impl Images {
    fn new(m: usize, alphabet: Alphabet, names: Vec<String>, slots: Vec<Option<CMatrix>>) -> Result<Self> {
        let mut images = Vec::with_capacity(slots.len());
        for (name, slot) in names.iter().zip(slots) {
            let img = slot.ok_or_else(|| Error::MissingImage(name.clone()))?;
            if img.rows() != m || img.cols() != m {
                return Err(Error::DimensionMismatch { expected: m, found: img.rows().max(img.cols()) });
            }
            images.push(img);
        }
        Ok(Images { m, alphabet, names, images })
    }

    fn evaluate(&self, w: &Word) -> Result<CMatrix> {
        w.check_alphabet(self.alphabet)?;
        let mut acc = CMatrix::identity(self.m);
        for l in w.letters() {
            let img = &self.images[l.generator as usize];
            acc = if l.inverse { acc.matmul(&img.adjoint()) } else { acc.matmul(img) };
        }
        Ok(acc)
    }

    fn unitarity_checks(&self, out: &mut Vec<Check>) {
        for (name, img) in self.names.iter().zip(&self.images) {
            check::push(out, format!("unitary {name}"), img.unitarity_residual(), EXACT_TOL);
        }
    }
}

/// `χ` on the generators of a one-relator presentation.
#[derive(Debug, Clone, PartialEq)]
pub struct MatrixRep {
    inner: Images,
    labels: Vec<GeneratorLabel>,
}

impl MatrixRep {
    /// Every generator of `p` must receive an `m × m` image.
    pub fn new<P: Presentation>(p: &P, m: usize, images: &[(GeneratorLabel, CMatrix)]) -> Result<Self> {
        let mut slots = vec![None; p.rank()];
        for (label, img) in images {
            let g = p.index_of(*label).ok_or_else(|| Error::UnknownLabel(label.to_string()))?;
            slots[g as usize] = Some(img.clone());
        }
        let names = p.generators().iter().map(|g| g.to_string()).collect();
        Ok(MatrixRep { inner: Images::new(m, p.alphabet(), names, slots)?, labels: p.generators().to_vec() })
    }

    /// Images listed in generator order.
    pub fn from_ordered<P: Presentation>(p: &P, m: usize, images: Vec<CMatrix>) -> Result<Self> {
        let pairs: Vec<(GeneratorLabel, CMatrix)> = p.generators().iter().copied().zip(images).collect();
        Self::new(p, m, &pairs)
    }

    pub fn dim(&self) -> usize {
        self.inner.m
    }

    pub fn alphabet(&self) -> Alphabet {
        self.inner.alphabet
    }

    pub fn labels(&self) -> &[GeneratorLabel] {
        &self.labels
    }

    pub fn images(&self) -> &[CMatrix] {
        &self.inner.images
    }

    pub fn image(&self, label: GeneratorLabel) -> Option<&CMatrix> {
        let i = self.labels.iter().position(|&l| l == label)?;
        Some(&self.inner.images[i])
    }

    /// Product of letter images; inverse letters use the adjoint.
    pub fn evaluate(&self, w: &Word) -> Result<CMatrix> {
        self.inner.evaluate(w)
    }

    /// Unitarity of every image and triviality of the relator.
    pub fn check<P: Presentation>(&self, p: &P) -> Result<Vec<Check>> {
        let mut out = Vec::new();
        self.inner.unitarity_checks(&mut out);
        let r = self.evaluate(p.relator())?;
        check::push(&mut out, "relator", r.distance(&CMatrix::identity(self.dim())), EXACT_TOL);
        Ok(out)
    }
}

/// `χ₁` on the Schreier generators of a covering's basepoint stabiliser.
#[derive(Debug, Clone, PartialEq)]
pub struct SubgroupRep {
    inner: Images,
}

impl SubgroupRep {
    pub fn new(t: &Transversal, m: usize, images: &[(SchreierLabel, CMatrix)]) -> Result<Self> {
        let count = t.schreier_generators().len();
        let mut slots = vec![None; count];
        for (label, img) in images {
            let i = t.schreier_index(*label).ok_or_else(|| Error::UnknownLabel(label.to_string()))?;
            slots[i] = Some(img.clone());
        }
        let names = (0..count).map(|i| t.schreier_label(i).to_string()).collect();
        Ok(SubgroupRep { inner: Images::new(m, t.schreier_alphabet(), names, slots)? })
    }

    /// Evaluates `f` on the ambient word of every Schreier generator.
    pub fn from_fn<F>(t: &Transversal, m: usize, mut f: F) -> Result<Self>
    where
        F: FnMut(&Word) -> Result<CMatrix>,
    {
        let slots = t.schreier_generators().iter().map(|s| f(&s.word).map(Some)).collect::<Result<Vec<_>>>()?;
        let names = (0..slots.len()).map(|i| t.schreier_label(i).to_string()).collect();
        Ok(SubgroupRep { inner: Images::new(m, t.schreier_alphabet(), names, slots)? })
    }

    /// Restriction of a representation of the whole group.
    pub fn restrict(t: &Transversal, chi: &MatrixRep) -> Result<Self> {
        Self::from_fn(t, chi.dim(), |w| chi.evaluate(w))
    }

    pub fn dim(&self) -> usize {
        self.inner.m
    }

    pub fn images(&self) -> &[CMatrix] {
        &self.inner.images
    }

    pub fn names(&self) -> &[String] {
        &self.inner.names
    }

    /// Evaluates a word over the Schreier generators.
    pub fn evaluate(&self, w: &Word) -> Result<CMatrix> {
        self.inner.evaluate(w)
    }

    /// Evaluates an ambient word lying in the subgroup.
    pub fn evaluate_element(&self, t: &Transversal, w: &Word) -> Result<CMatrix> {
        self.evaluate(&t.schreier_rewrite(w)?)
    }

    /// Unitarity of every image and triviality of every rewritten relator.
    pub fn check(&self, t: &Transversal) -> Result<Vec<Check>> {
        let mut out = Vec::new();
        self.inner.unitarity_checks(&mut out);
        let id = CMatrix::identity(self.dim());
        for (i, r) in t.subgroup_relators()?.iter().enumerate() {
            let residual = self.evaluate(r)?.distance(&id);
            check::push(
                &mut out,
                format!("relator conjugate {} : {}", i + 1, t.format_schreier_word(r)),
                residual,
                EXACT_TOL,
            );
        }
        Ok(out)
    }
}
