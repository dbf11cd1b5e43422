//! One-relator presentations of the fundamental group of a bordered surface
//! `S` of genus `s` with `k` boundary circles, and of its double `X`.
//!
//! Generators of `π₁(S)`: `A0 … A{k-1}` (boundary loops), then the canonical
//! pairs `A'i, B'i`. Generators of `π₁(X)`: the pairs `Aj, Bj` for
//! `j = 1..k-1`, then `A'i, B'i`, then the mirrored pairs `A''i, B''i`.

use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::error::{Error, Result};
use crate::word::{Alphabet, Letter, Word};

/// Name of a generator. Labels are for I/O; kernels use dense indices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GeneratorLabel {
    A(u32),
    B(u32),
    APrime(u32),
    BPrime(u32),
    ADouble(u32),
    BDouble(u32),
}

impl fmt::Display for GeneratorLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GeneratorLabel::A(j) => write!(f, "A{j}"),
            GeneratorLabel::B(j) => write!(f, "B{j}"),
            GeneratorLabel::APrime(i) => write!(f, "A'{i}"),
            GeneratorLabel::BPrime(i) => write!(f, "B'{i}"),
            GeneratorLabel::ADouble(i) => write!(f, "A''{i}"),
            GeneratorLabel::BDouble(i) => write!(f, "B''{i}"),
        }
    }
}

impl FromStr for GeneratorLabel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let unknown = || Error::UnknownLabel(s.to_string());
        let (head, rest) = s.split_at(s.find(|c: char| c.is_ascii_digit()).ok_or_else(unknown)?);
        let index: u32 = rest.parse().map_err(|_| unknown())?;
        Ok(match head {
            "A" => GeneratorLabel::A(index),
            "B" => GeneratorLabel::B(index),
            "A'" => GeneratorLabel::APrime(index),
            "B'" => GeneratorLabel::BPrime(index),
            "A''" => GeneratorLabel::ADouble(index),
            "B''" => GeneratorLabel::BDouble(index),
            _ => return Err(unknown()),
        })
    }
}

/// Shared surface of the two presentation kinds.
pub trait Presentation {
    fn generators(&self) -> &[GeneratorLabel];
    fn relator(&self) -> &Word;
    fn alphabet(&self) -> Alphabet;

    fn rank(&self) -> usize {
        self.generators().len()
    }

    fn index_of(&self, label: GeneratorLabel) -> Option<u32> {
        self.generators().iter().position(|&g| g == label).map(|i| i as u32)
    }

    fn label(&self, index: u32) -> Option<GeneratorLabel> {
        self.generators().get(index as usize).copied()
    }

    fn generator_word(&self, label: GeneratorLabel) -> Result<Word> {
        let i = self.index_of(label).ok_or_else(|| Error::UnknownLabel(label.to_string()))?;
        Word::generator(self.alphabet(), i)
    }

    /// Parses `(label, ±1)` pairs into a reduced word.
    fn parse_word(&self, letters: &[(&str, i8)]) -> Result<Word> {
        let mut out = Vec::with_capacity(letters.len());
        for &(name, sign) in letters {
            let label: GeneratorLabel = name.parse()?;
            let g = self.index_of(label).ok_or_else(|| Error::UnknownLabel(name.to_string()))?;
            out.push(Letter::from_signed(g, sign).ok_or(Error::InvalidExponent(sign))?);
        }
        Word::new(self.alphabet(), out)
    }

    fn format_word(&self, w: &Word) -> String {
        let gens = self.generators();
        alloc::format!(
            "{}",
            w.display_with(|g| gens.get(g as usize).map(|l| l.to_string()).unwrap_or_else(|| "?".into()))
        )
    }
}

fn validate(s: i64, k: i64) -> Result<(u32, u32)> {
    match (u32::try_from(s), u32::try_from(k)) {
        (Ok(s), Ok(k)) if k >= 1 => Ok((s, k)),
        _ => Err(Error::InvalidSurface { s, k }),
    }
}

fn commutator(a: u32, b: u32) -> [Letter; 4] {
    [Letter::pos(a), Letter::pos(b), Letter::neg(a), Letter::neg(b)]
}

/// Presentation of `π₁(S, p₀)`.
#[derive(Debug, Clone, PartialEq)]
pub struct GroupPresentation {
    pub s: u32,
    pub k: u32,
    generators: Vec<GeneratorLabel>,
    relator: Word,
    alphabet: Alphabet,
}

impl Presentation for GroupPresentation {
    fn generators(&self) -> &[GeneratorLabel] {
        &self.generators
    }
    fn relator(&self) -> &Word {
        &self.relator
    }
    fn alphabet(&self) -> Alphabet {
        self.alphabet
    }
}

/// `π₁(S)` for genus `s` and `k` boundary circles, with the single relation
/// `∏ [A'i, B'i] · A{k-1} ⋯ A0 = 1`.
pub fn surface_group(s: i64, k: i64) -> Result<GroupPresentation> {
    let (s, k) = validate(s, k)?;
    let mut generators: Vec<GeneratorLabel> = (0..k).map(GeneratorLabel::A).collect();
    for i in 1..=s {
        generators.push(GeneratorLabel::APrime(i));
        generators.push(GeneratorLabel::BPrime(i));
    }
    let alphabet = Alphabet::from_labels(generators.iter());

    let mut letters = Vec::new();
    for i in 0..s {
        letters.extend(commutator(k + 2 * i, k + 2 * i + 1));
    }
    letters.extend((0..k).rev().map(Letter::pos));
    let relator = Word::new(alphabet, letters)?;
    Ok(GroupPresentation { s, k, generators, relator, alphabet })
}

/// Presentation of `π₁(X, p₀)` for the double `X` of `S`, together with the
/// action of the anti-holomorphic involution on generators.
#[derive(Debug, Clone, PartialEq)]
pub struct DoubledPresentation {
    pub s: u32,
    pub k: u32,
    /// `2s + k - 1`
    pub genus: u32,
    generators: Vec<GeneratorLabel>,
    relator: Word,
    alphabet: Alphabet,
    tau: Vec<Word>,
}

impl Presentation for DoubledPresentation {
    fn generators(&self) -> &[GeneratorLabel] {
        &self.generators
    }
    fn relator(&self) -> &Word {
        &self.relator
    }
    fn alphabet(&self) -> Alphabet {
        self.alphabet
    }
}

pub fn double_group(s: i64, k: i64) -> Result<DoubledPresentation> {
    let (s, k) = validate(s, k)?;
    let mut generators = Vec::new();
    for j in 1..k {
        generators.push(GeneratorLabel::A(j));
        generators.push(GeneratorLabel::B(j));
    }
    for i in 1..=s {
        generators.push(GeneratorLabel::APrime(i));
        generators.push(GeneratorLabel::BPrime(i));
    }
    for i in 1..=s {
        generators.push(GeneratorLabel::ADouble(i));
        generators.push(GeneratorLabel::BDouble(i));
    }
    let alphabet = Alphabet::from_labels(generators.iter());

    let a = |j: u32| 2 * (j - 1);
    let b = |j: u32| 2 * (j - 1) + 1;
    let prime = 2 * (k - 1);
    let a1 = |i: u32| prime + 2 * (i - 1);
    let b1 = |i: u32| prime + 2 * (i - 1) + 1;
    let a2 = |i: u32| prime + 2 * s + 2 * (i - 1);
    let b2 = |i: u32| prime + 2 * s + 2 * (i - 1) + 1;

    // ∏_{i=s..1} [A''i,B''i] · ∏_{i=1..s} [A'i,B'i] · ∏_{j=k-1..1} Aj · ∏_{j=1..k-1} Bj Aj⁻¹ Bj⁻¹
    let mut letters = Vec::new();
    for i in (1..=s).rev() {
        letters.extend(commutator(a2(i), b2(i)));
    }
    for i in 1..=s {
        letters.extend(commutator(a1(i), b1(i)));
    }
    letters.extend((1..k).rev().map(|j| Letter::pos(a(j))));
    for j in 1..k {
        letters.extend([Letter::pos(b(j)), Letter::neg(a(j)), Letter::neg(b(j))]);
    }
    let relator = Word::new(alphabet, letters)?;

    let mut tau = alloc::vec![Word::identity(alphabet); generators.len()];
    for j in 1..k {
        tau[a(j) as usize] = Word::new(alphabet, [Letter::pos(b(j)), Letter::pos(a(j)), Letter::neg(b(j))])?;
        tau[b(j) as usize] = Word::new(alphabet, [Letter::neg(b(j))])?;
    }
    for i in 1..=s {
        tau[a1(i) as usize] = Word::generator(alphabet, b2(i))?;
        tau[b1(i) as usize] = Word::generator(alphabet, a2(i))?;
        tau[a2(i) as usize] = Word::generator(alphabet, b1(i))?;
        tau[b2(i) as usize] = Word::generator(alphabet, a1(i))?;
    }

    Ok(DoubledPresentation { s, k, genus: 2 * s + k - 1, generators, relator, alphabet, tau })
}

impl DoubledPresentation {
    /// Image of each generator under the involution, indexed like `generators()`.
    pub fn tau(&self) -> &[Word] {
        &self.tau
    }

    /// `w ↦ w^τ`, letter by letter.
    pub fn apply_involution(&self, w: &Word) -> Result<Word> {
        w.check_alphabet(self.alphabet)?;
        if self.tau.is_empty() {
            return Ok(w.clone());
        }
        w.substitute(&self.tau)
    }

    /// The loop around boundary circle `i` as an element of `π₁(X)`.
    ///
    /// `A0` is not a generator of the double; it is recovered from the
    /// relation of `π₁(S)` as `(∏ [A'i,B'i] · A{k-1} ⋯ A1)⁻¹`.
    pub fn boundary_loop(&self, i: u32) -> Result<Word> {
        if i >= self.k {
            return Err(Error::UnknownLabel(GeneratorLabel::A(i).to_string()));
        }
        if i > 0 {
            return self.generator_word(GeneratorLabel::A(i));
        }
        let images = self.surface_images()?;
        let mut rest = Word::identity(self.alphabet);
        for i in 1..=self.s {
            let a = self.generator_word(GeneratorLabel::APrime(i))?;
            let b = self.generator_word(GeneratorLabel::BPrime(i))?;
            rest = rest.multiply(&a.multiply(&b)?.multiply(&a.invert())?.multiply(&b.invert())?)?;
        }
        for j in (1..self.k).rev() {
            rest = rest.multiply(&images[j as usize])?;
        }
        Ok(rest.invert())
    }

    /// Monodromy word `T` of the base lift of boundary circle `i`
    /// (`p̃^τ = T p̃`): the identity for the outer circle, `Bi` otherwise.
    pub fn boundary_monodromy(&self, i: u32) -> Result<Word> {
        match i {
            0 => Ok(Word::identity(self.alphabet)),
            i if i < self.k => self.generator_word(GeneratorLabel::B(i)),
            i => Err(Error::UnknownLabel(GeneratorLabel::B(i).to_string())),
        }
    }

    /// Images of the non-`A0` generators of `π₁(S)` in `π₁(X)`, indexed like
    /// [`surface_group`]'s generators; slot 0 holds the identity placeholder.
    fn surface_images(&self) -> Result<Vec<Word>> {
        let surface = surface_group(i64::from(self.s), i64::from(self.k))?;
        let mut out = Vec::with_capacity(surface.rank());
        for &label in surface.generators() {
            out.push(match label {
                GeneratorLabel::A(0) => Word::identity(self.alphabet),
                l => self.generator_word(l)?,
            });
        }
        Ok(out)
    }

    /// The inclusion `π₁(S) → π₁(X)` on generators, indexed like
    /// [`surface_group`]'s generators.
    pub fn surface_inclusion(&self) -> Result<Vec<Word>> {
        let mut images = self.surface_images()?;
        images[0] = self.boundary_loop(0)?;
        Ok(images)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::format;

    #[test]
    fn annulus_surface_group() {
        let p = surface_group(0, 2).unwrap();
        assert_eq!(p.generators(), &[GeneratorLabel::A(0), GeneratorLabel::A(1)]);
        assert_eq!(p.format_word(p.relator()), "A1 A0");
    }

    #[test]
    fn one_holed_torus_group() {
        let p = surface_group(1, 1).unwrap();
        let names: Vec<String> = p.generators().iter().map(|g| g.to_string()).collect();
        assert_eq!(names, ["A0", "A'1", "B'1"]);
        assert_eq!(p.format_word(p.relator()), "A'1 B'1 A'1^-1 B'1^-1 A0");
    }

    #[test]
    fn disk_group() {
        let p = surface_group(0, 1).unwrap();
        assert_eq!(p.rank(), 1);
        assert_eq!(p.format_word(p.relator()), "A0");
    }

    #[test]
    fn invalid_surfaces() {
        assert_eq!(surface_group(0, 0), Err(Error::InvalidSurface { s: 0, k: 0 }));
        assert_eq!(double_group(-1, 2), Err(Error::InvalidSurface { s: -1, k: 2 }));
    }

    #[test]
    fn torus_double() {
        let d = double_group(0, 2).unwrap();
        assert_eq!(d.generators(), &[GeneratorLabel::A(1), GeneratorLabel::B(1)]);
        assert_eq!(d.format_word(d.relator()), "A1 B1 A1^-1 B1^-1");
        assert_eq!(d.genus, 1);
    }

    #[test]
    fn sphere_double() {
        let d = double_group(0, 1).unwrap();
        assert_eq!(d.rank(), 0);
        assert!(d.relator().is_empty());
        assert_eq!(d.genus, 0);
    }

    #[test]
    fn genus_two_double() {
        let d = double_group(1, 1).unwrap();
        let names: Vec<String> = d.generators().iter().map(|g| g.to_string()).collect();
        assert_eq!(names, ["A'1", "B'1", "A''1", "B''1"]);
        assert_eq!(d.format_word(d.relator()), "A''1 B''1 A''1^-1 B''1^-1 A'1 B'1 A'1^-1 B'1^-1");
        assert_eq!(d.genus, 2);
    }

    #[test]
    fn involution_on_generators() {
        let d = double_group(1, 2).unwrap();
        let img = |name: &str| {
            let w = d.parse_word(&[(name, 1)]).unwrap();
            d.format_word(&d.apply_involution(&w).unwrap())
        };
        assert_eq!(img("B1"), "B1^-1");
        assert_eq!(img("A1"), "B1 A1 B1^-1");
        assert_eq!(img("A'1"), "B''1");
        assert_eq!(img("B'1"), "A''1");
        assert_eq!(img("A''1"), "B'1");
        assert_eq!(img("B''1"), "A'1");
    }

    #[test]
    fn involution_inverts_the_relator_up_to_rotation() {
        // τ(R) is R⁻¹ read cyclically, so τ is well defined on the group.
        let d = double_group(0, 2).unwrap();
        let r = d.apply_involution(d.relator()).unwrap();
        assert_eq!(r, d.relator().invert());
    }

    #[test]
    fn outer_boundary_loop() {
        let d = double_group(0, 2).unwrap();
        assert_eq!(d.format_word(&d.boundary_loop(0).unwrap()), "A1^-1");
        let d = double_group(1, 1).unwrap();
        assert_eq!(d.format_word(&d.boundary_loop(0).unwrap()), "B'1 A'1 B'1^-1 A'1^-1");
        assert_eq!(format!("{}", d.boundary_monodromy(0).unwrap().len()), "0");
    }

    #[test]
    fn labels_round_trip() {
        for l in ["A0", "B3", "A'2", "B'1", "A''4", "B''1"] {
            assert_eq!(l.parse::<GeneratorLabel>().unwrap().to_string(), l);
        }
        assert!("C1".parse::<GeneratorLabel>().is_err());
        assert!("A".parse::<GeneratorLabel>().is_err());
    }
}
