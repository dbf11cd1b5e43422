//! Finite unramified coverings of a double, given as transitive right actions
//! of `π₁(X₂, p₀)` on the sheets, and Reidemeister–Schreier machinery for the
//! stabiliser of sheet 1 (the subgroup `π₁(X₁, p₀′)`).
//!
//! Sheets are 0-based here (`0` is the basepoint sheet); the JSON layer
//! presents them 1-based.

use alloc::collections::VecDeque;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::presentation::{DoubledPresentation, GeneratorLabel, Presentation};
use crate::word::{Alphabet, Letter, Word};

/// A bijection of `{0, …, n-1}`, acting on the right.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SheetPermutation {
    images: Vec<usize>,
}

impl SheetPermutation {
    pub fn identity(n: usize) -> Self {
        SheetPermutation { images: (0..n).collect() }
    }

    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            if i >= n || seen[i] {
                return Err(Error::InvalidPermutation(format!("{images:?} is not a bijection of 0..{n}")));
            }
            seen[i] = true;
        }
        Ok(SheetPermutation { images })
    }

    /// From 1-based images, as written in the JSON formats.
    pub fn from_one_based(images: &[usize]) -> Result<Self> {
        if images.contains(&0) {
            return Err(Error::InvalidPermutation(format!("{images:?}: sheets are numbered from 1")));
        }
        Self::from_images(images.iter().map(|&i| i - 1).collect())
    }

    /// The cycle `(c0 c1 … )` on `n` sheets, from 1-based labels.
    pub fn cycle(n: usize, cycle: &[usize]) -> Result<Self> {
        let mut images: Vec<usize> = (0..n).collect();
        for (i, &a) in cycle.iter().enumerate() {
            let b = cycle[(i + 1) % cycle.len()];
            if a == 0 || a > n || b == 0 || b > n {
                return Err(Error::InvalidPermutation(format!("cycle {cycle:?} leaves 1..={n}")));
            }
            images[a - 1] = b - 1;
        }
        Self::from_images(images)
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn one_based(&self) -> Vec<usize> {
        self.images.iter().map(|i| i + 1).collect()
    }

    pub fn apply(&self, sheet: usize) -> usize {
        self.images[sheet]
    }

    /// First `self`, then `other`.
    pub fn then(&self, other: &SheetPermutation) -> SheetPermutation {
        SheetPermutation { images: self.images.iter().map(|&i| other.images[i]).collect() }
    }

    pub fn inverse(&self) -> SheetPermutation {
        let mut images = vec![0; self.images.len()];
        for (i, &j) in self.images.iter().enumerate() {
            images[j] = i;
        }
        SheetPermutation { images }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i == j)
    }
}

impl fmt::Display for SheetPermutation {
    /// Cycle notation with 1-based sheets; `()` for the identity.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut seen = vec![false; self.images.len()];
        let mut any = false;
        for start in 0..self.images.len() {
            if seen[start] || self.images[start] == start {
                continue;
            }
            any = true;
            f.write_str("(")?;
            let mut i = start;
            let mut first = true;
            while !seen[i] {
                seen[i] = true;
                if !first {
                    f.write_str(" ")?;
                }
                write!(f, "{}", i + 1)?;
                first = false;
                i = self.images[i];
            }
            f.write_str(")")?;
        }
        if !any {
            f.write_str("()")?;
        }
        Ok(())
    }
}

/// A transitive permutation action of `π₁(X₂)` on `n` sheets whose relator
/// acts trivially.
#[derive(Debug, Clone, PartialEq)]
pub struct CoveringAction {
    n: usize,
    presentation: DoubledPresentation,
    perms: Vec<SheetPermutation>,
    inverse_perms: Vec<SheetPermutation>,
}

/// Validates a permutation action and packages it as a covering.
///
/// `perms` must name every generator of `p` exactly once.
pub fn build_covering(
    p: DoubledPresentation,
    n: usize,
    perms: &[(GeneratorLabel, SheetPermutation)],
) -> Result<CoveringAction> {
    if n == 0 {
        return Err(Error::InvalidSheetCount(0));
    }
    let mut slots: Vec<Option<SheetPermutation>> = vec![None; p.rank()];
    for (label, perm) in perms {
        let g = p.index_of(*label).ok_or_else(|| Error::UnknownLabel(label.to_string()))?;
        if perm.len() != n {
            return Err(Error::InvalidPermutation(format!(
                "permutation for {label} acts on {} sheets, expected {n}",
                perm.len()
            )));
        }
        if slots[g as usize].replace(perm.clone()).is_some() {
            return Err(Error::InvalidPermutation(format!("generator {label} given twice")));
        }
    }
    let perms: Vec<SheetPermutation> = slots
        .into_iter()
        .enumerate()
        .map(|(g, s)| s.ok_or_else(|| Error::MissingPermutation(p.generators()[g].to_string())))
        .collect::<Result<_>>()?;
    let inverse_perms = perms.iter().map(SheetPermutation::inverse).collect();
    let cover = CoveringAction { n, presentation: p, perms, inverse_perms };

    let orbit = cover.orbit_size();
    if orbit != n {
        return Err(Error::DisconnectedCover { orbit, sheets: n });
    }
    if !cover.sigma(cover.presentation.relator())?.is_identity() {
        return Err(Error::NotACovering);
    }
    Ok(cover)
}

impl CoveringAction {
    /// The identity covering of `p`.
    pub fn trivial(p: DoubledPresentation) -> Self {
        let perms = vec![SheetPermutation::identity(1); p.rank()];
        let inverse_perms = perms.clone();
        CoveringAction { n: 1, presentation: p, perms, inverse_perms }
    }

    pub fn sheets(&self) -> usize {
        self.n
    }

    pub fn presentation(&self) -> &DoubledPresentation {
        &self.presentation
    }

    pub fn permutation(&self, generator: u32) -> &SheetPermutation {
        &self.perms[generator as usize]
    }

    pub fn permutations(&self) -> &[SheetPermutation] {
        &self.perms
    }

    fn orbit_size(&self) -> usize {
        let mut seen = vec![false; self.n];
        seen[0] = true;
        let mut stack = vec![0];
        let mut count = 1;
        while let Some(i) = stack.pop() {
            for p in self.perms.iter().chain(&self.inverse_perms) {
                let j = p.apply(i);
                if !seen[j] {
                    seen[j] = true;
                    count += 1;
                    stack.push(j);
                }
            }
        }
        count
    }

    fn step(&self, sheet: usize, l: Letter) -> usize {
        let table = if l.inverse { &self.inverse_perms } else { &self.perms };
        table[l.generator as usize].apply(sheet)
    }

    /// `sheet · π(w)`, letters applied left to right.
    pub fn act(&self, sheet: usize, w: &Word) -> Result<usize> {
        w.check_alphabet(self.presentation.alphabet())?;
        if sheet >= self.n {
            return Err(Error::SheetOutOfRange { sheet, sheets: self.n });
        }
        Ok(w.letters().iter().fold(sheet, |s, &l| self.step(s, l)))
    }

    /// The coset `H w` as a sheet index: `0 · π(w)`.
    pub fn coset_of(&self, w: &Word) -> Result<usize> {
        self.act(0, w)
    }

    /// `σ_g(i) = i · π(g)`; satisfies `σ_{g'}(σ_{g''}(k)) = σ_{g''g'}(k)`.
    pub fn sigma(&self, g: &Word) -> Result<SheetPermutation> {
        g.check_alphabet(self.presentation.alphabet())?;
        let images = (0..self.n).map(|i| g.letters().iter().fold(i, |s, &l| self.step(s, l))).collect();
        Ok(SheetPermutation { images })
    }

    /// `true` iff `w` lies in the stabiliser of the basepoint sheet.
    pub fn in_subgroup(&self, w: &Word) -> Result<bool> {
        Ok(self.coset_of(w)? == 0)
    }
}

/// Schreier generator `g_i · x · g_{i·x}⁻¹` for a non-tree edge `(i, x)`.
#[derive(Debug, Clone, PartialEq)]
pub struct SchreierGenerator {
    pub sheet: usize,
    pub generator: u32,
    pub word: Word,
}

/// Name of a Schreier generator: `"<sheet>:<generator>"`, sheet 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SchreierLabel {
    pub sheet: usize,
    pub generator: GeneratorLabel,
}

impl fmt::Display for SchreierLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.sheet + 1, self.generator)
    }
}

impl core::str::FromStr for SchreierLabel {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::UnknownLabel(s.to_string());
        let (sheet, generator) = s.split_once(':').ok_or_else(bad)?;
        let sheet: usize = sheet.parse().map_err(|_| bad())?;
        if sheet == 0 {
            return Err(bad());
        }
        Ok(SchreierLabel { sheet: sheet - 1, generator: generator.parse()? })
    }
}

/// BFS Schreier transversal of a covering, with the Schreier generators of
/// the basepoint stabiliser.
#[derive(Debug, Clone, PartialEq)]
pub struct Transversal {
    cover: CoveringAction,
    reps: Vec<Word>,
    /// `tree[i][g]`: whether the edge `i --g--> i·g` belongs to the spanning tree.
    tree: Vec<Vec<bool>>,
    /// `edge_gen[i][g]`: index into `schreier` for non-tree edges.
    edge_gen: Vec<Vec<Option<usize>>>,
    schreier: Vec<SchreierGenerator>,
    schreier_alphabet: Alphabet,
}

/// Breadth-first search from sheet 0 along positive generator edges, in
/// generator order. Positive edges suffice: a finite permutation group's
/// orbits are the orbits of the positive monoid.
pub fn schreier_transversal(cover: &CoveringAction) -> Transversal {
    let n = cover.n;
    let rank = cover.perms.len();
    let alphabet = cover.presentation.alphabet();
    let mut reps: Vec<Option<Word>> = vec![None; n];
    let mut tree = vec![vec![false; rank]; n];
    reps[0] = Some(Word::identity(alphabet));
    let mut queue = VecDeque::from([0usize]);
    while let Some(i) = queue.pop_front() {
        for (g, perm) in cover.perms.iter().enumerate() {
            let j = perm.apply(i);
            if reps[j].is_none() {
                let mut letters = reps[i].as_ref().map(|w| w.letters().to_vec()).unwrap_or_default();
                letters.push(Letter::pos(g as u32));
                // all letters positive, hence reduced
                reps[j] = Some(Word::from_reduced_unchecked(alphabet, letters));
                tree[i][g] = true;
                queue.push_back(j);
            }
        }
    }
    let reps: Vec<Word> = reps.into_iter().map(|w| w.expect("covering is transitive")).collect();

    let mut schreier = Vec::new();
    let mut edge_gen = vec![vec![None; rank]; n];
    let mut labels = Vec::new();
    for i in 0..n {
        for g in 0..rank {
            if tree[i][g] {
                continue;
            }
            let j = cover.perms[g].apply(i);
            let x = Word::generator(alphabet, g as u32).expect("generator in range");
            let word = reps[i].multiply(&x).and_then(|w| w.multiply(&reps[j].invert())).expect("same alphabet");
            edge_gen[i][g] = Some(schreier.len());
            labels.push(SchreierLabel { sheet: i, generator: cover.presentation.generators()[g] });
            schreier.push(SchreierGenerator { sheet: i, generator: g as u32, word });
        }
    }
    // Tag with the labels and every permutation so that Schreier words of
    // distinct coverings never mix.
    let mut tag = format!("schreier;n={n};{alphabet:?}");
    for l in &labels {
        tag.push_str(&format!(";{l}"));
    }
    for p in &cover.perms {
        tag.push_str(&format!(";{p}"));
    }
    let schreier_alphabet = Alphabet::tagged(tag, schreier.len() as u32);

    Transversal { cover: cover.clone(), reps, tree, edge_gen, schreier, schreier_alphabet }
}

impl Transversal {
    pub fn covering(&self) -> &CoveringAction {
        &self.cover
    }

    pub fn sheets(&self) -> usize {
        self.cover.n
    }

    /// Coset representatives `g_i`; `reps()[0]` is the empty word.
    pub fn reps(&self) -> &[Word] {
        &self.reps
    }

    pub fn schreier_generators(&self) -> &[SchreierGenerator] {
        &self.schreier
    }

    pub fn schreier_alphabet(&self) -> Alphabet {
        self.schreier_alphabet
    }

    pub fn schreier_label(&self, index: usize) -> SchreierLabel {
        let s = &self.schreier[index];
        SchreierLabel { sheet: s.sheet, generator: self.cover.presentation.generators()[s.generator as usize] }
    }

    pub fn schreier_index(&self, label: SchreierLabel) -> Option<usize> {
        let g = self.cover.presentation.index_of(label.generator)?;
        *self.edge_gen.get(label.sheet)?.get(g as usize)?
    }

    pub fn is_tree_edge(&self, sheet: usize, generator: u32) -> bool {
        self.tree[sheet][generator as usize]
    }

    fn check_sheet(&self, k: usize) -> Result<()> {
        if k < self.cover.n {
            Ok(())
        } else {
            Err(Error::SheetOutOfRange { sheet: k, sheets: self.cover.n })
        }
    }

    /// Splits `g_k · g = h · g_j` with `j = σ_g(k)` and `h` in the subgroup.
    pub fn factorize(&self, k: usize, g: &Word) -> Result<(Word, usize)> {
        self.check_sheet(k)?;
        let j = self.cover.act(k, g)?;
        let h = self.reps[k].multiply(g)?.multiply(&self.reps[j].invert())?;
        debug_assert_eq!(self.cover.coset_of(&h), Ok(0));
        Ok((h, j))
    }

    /// `g_k^τ = h_k · g_{ν(k)}`; returns `(h_k, ν(k))`.
    pub fn nu_decompose(&self, k: usize) -> Result<(Word, usize)> {
        self.check_sheet(k)?;
        let gt = self.cover.presentation.apply_involution(&self.reps[k])?;
        let nu = self.cover.coset_of(&gt)?;
        let h = gt.multiply(&self.reps[nu].invert())?;
        Ok((h, nu))
    }

    /// `ν` as a permutation of the sheets; requires an involution-stable subgroup.
    pub fn nu(&self) -> Result<Vec<usize>> {
        self.require_involution_stable()?;
        (0..self.cover.n).map(|k| self.nu_decompose(k).map(|(_, nu)| nu)).collect()
    }

    /// `true` iff `τ` maps the subgroup to itself.
    pub fn involution_stable(&self) -> Result<bool> {
        for s in &self.schreier {
            if !self.cover.in_subgroup(&self.cover.presentation.apply_involution(&s.word)?)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn require_involution_stable(&self) -> Result<()> {
        if self.involution_stable()? {
            Ok(())
        } else {
            Err(Error::NotInvolutionStable)
        }
    }

    /// Reidemeister–Schreier rewriting of a subgroup element into the
    /// Schreier generators.
    pub fn schreier_rewrite(&self, w: &Word) -> Result<Word> {
        w.check_alphabet(self.cover.presentation.alphabet())?;
        let mut coset = 0usize;
        let mut out = Vec::new();
        for &l in w.letters() {
            if l.inverse {
                let prev = self.cover.inverse_perms[l.generator as usize].apply(coset);
                if let Some(s) = self.edge_gen[prev][l.generator as usize] {
                    out.push(Letter::neg(s as u32));
                }
                coset = prev;
            } else {
                if let Some(s) = self.edge_gen[coset][l.generator as usize] {
                    out.push(Letter::pos(s as u32));
                }
                coset = self.cover.perms[l.generator as usize].apply(coset);
            }
        }
        if coset != 0 {
            return Err(Error::NotSubgroupElement { coset });
        }
        Word::new(self.schreier_alphabet, out)
    }

    /// Substitutes the defining ambient words back into a Schreier word.
    pub fn expand(&self, w: &Word) -> Result<Word> {
        w.check_alphabet(self.schreier_alphabet)?;
        if self.schreier.is_empty() {
            return Ok(Word::identity(self.cover.presentation.alphabet()));
        }
        let images: Vec<Word> = self.schreier.iter().map(|s| s.word.clone()).collect();
        w.substitute(&images)
    }

    /// `schreier_rewrite(g_i · R · g_i⁻¹)` for every sheet `i`.
    pub fn subgroup_relators(&self) -> Result<Vec<Word>> {
        let r = self.cover.presentation.relator();
        self.reps.iter().map(|g| self.schreier_rewrite(&g.conjugate(r)?)).collect()
    }

    pub fn format_schreier_word(&self, w: &Word) -> String {
        format!("{}", w.display_with(|i| format!("[{}]", self.schreier_label(i as usize))))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presentation::double_group;

    pub(crate) fn torus_cover(n: usize) -> CoveringAction {
        let p = double_group(0, 2).unwrap();
        let cyc: Vec<usize> = (1..=n).collect();
        build_covering(
            p,
            n,
            &[
                (GeneratorLabel::A(1), SheetPermutation::cycle(n, &cyc).unwrap()),
                (GeneratorLabel::B(1), SheetPermutation::identity(n)),
            ],
        )
        .unwrap()
    }

    fn word(p: &DoubledPresentation, letters: &[(&str, i8)]) -> Word {
        p.parse_word(letters).unwrap()
    }

    #[test]
    fn rejects_noncommuting_torus_action() {
        let p = double_group(0, 2).unwrap();
        let err = build_covering(
            p,
            3,
            &[
                (GeneratorLabel::A(1), SheetPermutation::cycle(3, &[1, 2]).unwrap()),
                (GeneratorLabel::B(1), SheetPermutation::cycle(3, &[1, 2, 3]).unwrap()),
            ],
        );
        assert_eq!(err, Err(Error::NotACovering));
    }

    #[test]
    fn rejects_disconnected_action() {
        let p = double_group(0, 2).unwrap();
        let err = build_covering(
            p,
            3,
            &[
                (GeneratorLabel::A(1), SheetPermutation::cycle(3, &[1, 2]).unwrap()),
                (GeneratorLabel::B(1), SheetPermutation::identity(3)),
            ],
        );
        assert_eq!(err, Err(Error::DisconnectedCover { orbit: 2, sheets: 3 }));
    }

    #[test]
    fn rejects_missing_and_duplicate_generators() {
        let p = double_group(0, 2).unwrap();
        let id = SheetPermutation::identity(1);
        assert!(matches!(
            build_covering(p.clone(), 1, &[(GeneratorLabel::A(1), id.clone())]),
            Err(Error::MissingPermutation(_))
        ));
        assert!(matches!(
            build_covering(p, 1, &[(GeneratorLabel::A(1), id.clone()), (GeneratorLabel::A(1), id)]),
            Err(Error::InvalidPermutation(_))
        ));
    }

    #[test]
    fn identity_covering() {
        let p = double_group(1, 1).unwrap();
        let perms: Vec<_> = p.generators().iter().map(|&g| (g, SheetPermutation::identity(1))).collect();
        let c = build_covering(p.clone(), 1, &perms).unwrap();
        assert_eq!(c, CoveringAction::trivial(p.clone()));
        let t = schreier_transversal(&c);
        assert_eq!(t.reps(), &[Word::identity(p.alphabet())]);
        assert_eq!(t.schreier_generators().len(), p.rank());
        for (g, s) in t.schreier_generators().iter().enumerate() {
            assert_eq!(s.word, Word::generator(p.alphabet(), g as u32).unwrap());
        }
        assert_eq!(t.subgroup_relators().unwrap().len(), 1);
    }

    #[test]
    fn torus_three_cover_transversal() {
        let c = torus_cover(3);
        let p = c.presentation().clone();
        let t = schreier_transversal(&c);
        assert_eq!(t.reps(), &[word(&p, &[]), word(&p, &[("A1", 1)]), word(&p, &[("A1", 1), ("A1", 1)])]);
        let names: Vec<String> = (0..t.schreier_generators().len()).map(|i| t.schreier_label(i).to_string()).collect();
        assert_eq!(names, ["1:B1", "2:B1", "3:A1", "3:B1"]);
        let words: Vec<String> = t.schreier_generators().iter().map(|s| p.format_word(&s.word)).collect();
        assert_eq!(words, ["B1", "A1 B1 A1^-1", "A1 A1 A1", "A1 A1 B1 A1^-1 A1^-1"]);
    }

    #[test]
    fn torus_coset_and_sigma() {
        let c = torus_cover(3);
        let p = c.presentation().clone();
        assert_eq!(c.coset_of(&word(&p, &[("A1", 1); 4])).unwrap(), 1);
        assert_eq!(c.coset_of(&word(&p, &[])).unwrap(), 0);
        assert_eq!(c.coset_of(&word(&p, &[("B1", 1)])).unwrap(), 0);
        let cyc = SheetPermutation::cycle(3, &[1, 2, 3]).unwrap();
        assert_eq!(c.sigma(&word(&p, &[("A1", 1)])).unwrap(), cyc);
        assert!(c.sigma(&word(&p, &[])).unwrap().is_identity());
        assert_eq!(c.sigma(&word(&p, &[("A1", 1), ("B1", 1)])).unwrap(), cyc);
        assert_eq!(format!("{cyc}"), "(1 2 3)");
    }

    #[test]
    fn torus_factorize() {
        let c = torus_cover(3);
        let p = c.presentation().clone();
        let t = schreier_transversal(&c);
        assert_eq!(t.factorize(2, &word(&p, &[("A1", 1)])).unwrap(), (word(&p, &[("A1", 1); 3]), 0));
        assert_eq!(t.factorize(0, &word(&p, &[])).unwrap(), (word(&p, &[]), 0));
        assert_eq!(t.factorize(0, &word(&p, &[("B1", 1)])).unwrap(), (word(&p, &[("B1", 1)]), 0));
        assert!(matches!(t.factorize(3, &word(&p, &[])), Err(Error::SheetOutOfRange { .. })));
    }

    #[test]
    fn torus_nu() {
        let c = torus_cover(3);
        let p = c.presentation().clone();
        let t = schreier_transversal(&c);
        assert_eq!(t.nu_decompose(0).unwrap(), (word(&p, &[]), 0));
        assert_eq!(t.nu_decompose(1).unwrap(), (word(&p, &[("B1", 1), ("A1", 1), ("B1", -1), ("A1", -1)]), 1));
        let bab = word(&p, &[("B1", 1), ("A1", 1), ("B1", -1)]);
        let h3 = bab.multiply(&bab).unwrap().multiply(&word(&p, &[("A1", -1), ("A1", -1)])).unwrap();
        assert_eq!(t.nu_decompose(2).unwrap(), (h3, 2));
    }

    #[test]
    fn torus_rewrite() {
        let c = torus_cover(3);
        let p = c.presentation().clone();
        let t = schreier_transversal(&c);
        let idx = |s: &str| t.schreier_index(s.parse().unwrap()).unwrap() as u32;
        let sw = |pairs: &[(u32, i8)]| Word::from_signed(t.schreier_alphabet(), pairs).unwrap();
        assert_eq!(t.schreier_rewrite(&word(&p, &[("A1", 1); 3])).unwrap(), sw(&[(idx("3:A1"), 1)]));
        assert_eq!(t.schreier_rewrite(&word(&p, &[])).unwrap(), sw(&[]));
        assert_eq!(t.schreier_rewrite(&word(&p, &[("B1", 1)])).unwrap(), sw(&[(idx("1:B1"), 1)]));
        assert_eq!(t.schreier_rewrite(&word(&p, &[("A1", 1)])), Err(Error::NotSubgroupElement { coset: 1 }));
    }

    #[test]
    fn torus_subgroup_relators() {
        let c = torus_cover(3);
        let t = schreier_transversal(&c);
        let rels: Vec<String> = t.subgroup_relators().unwrap().iter().map(|w| t.format_schreier_word(w)).collect();
        assert_eq!(rels, ["[2:B1] [1:B1]^-1", "[3:B1] [2:B1]^-1", "[3:A1] [1:B1] [3:A1]^-1 [3:B1]^-1",]);
    }

    #[test]
    fn genus_two_double_cover() {
        let p = double_group(1, 1).unwrap();
        let swap = SheetPermutation::cycle(2, &[1, 2]).unwrap();
        let id = SheetPermutation::identity(2);
        let c = build_covering(
            p.clone(),
            2,
            &[
                (GeneratorLabel::APrime(1), swap),
                (GeneratorLabel::BPrime(1), id.clone()),
                (GeneratorLabel::ADouble(1), id.clone()),
                (GeneratorLabel::BDouble(1), id),
            ],
        )
        .unwrap();
        let t = schreier_transversal(&c);
        assert!(t.reps()[0].is_empty());
        assert_eq!(t.reps()[1].len(), 1);
        let rels = t.subgroup_relators().unwrap();
        assert_eq!(rels.len(), 2);
        assert!(rels.iter().all(|r| r.len() <= 4 * p.relator().len()));
    }

    #[test]
    fn schreier_labels_parse() {
        let l: SchreierLabel = "3:A1".parse().unwrap();
        assert_eq!(l, SchreierLabel { sheet: 2, generator: GeneratorLabel::A(1) });
        assert!("0:A1".parse::<SchreierLabel>().is_err());
        assert!("A1".parse::<SchreierLabel>().is_err());
    }
}
