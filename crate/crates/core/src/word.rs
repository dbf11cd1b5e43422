//! Freely reduced words over a finite generator set.
//!
//! A [`Word`] is tagged with the [`Alphabet`] it was built over, so that
//! words coming from different presentations (or from the Schreier generators
//! of different coverings) cannot be multiplied by accident.

use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};

/// Identity of a generator set: a fingerprint of its labels and its size.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Alphabet {
    id: u64,
    rank: u32,
}

impl Alphabet {
    /// Fingerprints a generator set from the display form of its labels.
    pub fn from_labels<I, T>(labels: I) -> Self
    where
        I: IntoIterator<Item = T>,
        T: fmt::Display,
    {
        let mut hasher = Fnv1a::new();
        let mut rank = 0u32;
        for label in labels {
            let _ = fmt::write(&mut hasher, format_args!("{label}\u{1f}"));
            rank += 1;
        }
        Alphabet { id: hasher.finish(), rank }
    }

    /// An alphabet of `rank` anonymous generators identified by `tag`.
    pub fn tagged<T: fmt::Display>(tag: T, rank: u32) -> Self {
        let mut hasher = Fnv1a::new();
        let _ = fmt::write(&mut hasher, format_args!("{tag}"));
        Alphabet { id: hasher.finish(), rank }
    }

    pub fn rank(&self) -> u32 {
        self.rank
    }
}

struct Fnv1a(u64);

impl Fnv1a {
    fn new() -> Self {
        Fnv1a(0xcbf2_9ce4_8422_2325)
    }

    fn finish(&self) -> u64 {
        self.0
    }
}

impl fmt::Write for Fnv1a {
    fn write_str(&mut self, s: &str) -> fmt::Result {
        for b in s.bytes() {
            self.0 ^= u64::from(b);
            self.0 = self.0.wrapping_mul(0x0100_0000_01b3);
        }
        Ok(())
    }
}

/// A generator or its inverse.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    pub generator: u32,
    pub inverse: bool,
}

impl Letter {
    pub const fn new(generator: u32, inverse: bool) -> Self {
        Letter { generator, inverse }
    }

    pub const fn pos(generator: u32) -> Self {
        Letter::new(generator, false)
    }

    pub const fn neg(generator: u32) -> Self {
        Letter::new(generator, true)
    }

    /// From a `(generator, ±1)` pair.
    pub fn from_signed(generator: u32, sign: i8) -> Option<Self> {
        match sign {
            1 => Some(Letter::pos(generator)),
            -1 => Some(Letter::neg(generator)),
            _ => None,
        }
    }

    pub const fn sign(self) -> i8 {
        if self.inverse {
            -1
        } else {
            1
        }
    }

    pub const fn inv(self) -> Self {
        Letter::new(self.generator, !self.inverse)
    }
}

/// Cancels adjacent inverse pairs until none remain.
pub fn free_reduce<I: IntoIterator<Item = Letter>>(letters: I) -> Vec<Letter> {
    let mut out: Vec<Letter> = Vec::new();
    for l in letters {
        if out.last() == Some(&l.inv()) {
            out.pop();
        } else {
            out.push(l);
        }
    }
    out
}

pub fn is_reduced(letters: &[Letter]) -> bool {
    letters.windows(2).all(|w| w[0] != w[1].inv())
}

/// A freely reduced word. The empty word is the identity.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Word {
    alphabet: Alphabet,
    letters: Vec<Letter>,
}

impl Word {
    pub fn identity(alphabet: Alphabet) -> Self {
        Word { alphabet, letters: Vec::new() }
    }

    pub fn generator(alphabet: Alphabet, generator: u32) -> Result<Self> {
        Word::new(alphabet, [Letter::pos(generator)])
    }

    /// Builds a word from arbitrary letters, reducing freely.
    pub fn new<I: IntoIterator<Item = Letter>>(alphabet: Alphabet, letters: I) -> Result<Self> {
        let letters = free_reduce(letters);
        if let Some(bad) = letters.iter().find(|l| l.generator >= alphabet.rank) {
            return Err(Error::GeneratorOutOfRange { index: bad.generator, rank: alphabet.rank });
        }
        Ok(Word { alphabet, letters })
    }

    /// Builds a word from `(generator, ±1)` pairs.
    pub fn from_signed(alphabet: Alphabet, pairs: &[(u32, i8)]) -> Result<Self> {
        let mut letters = Vec::with_capacity(pairs.len());
        for &(g, s) in pairs {
            let l = Letter::from_signed(g, s).ok_or(Error::InvalidExponent(s))?;
            letters.push(l);
        }
        Word::new(alphabet, letters)
    }

    pub(crate) fn from_reduced_unchecked(alphabet: Alphabet, letters: Vec<Letter>) -> Self {
        debug_assert!(is_reduced(&letters));
        Word { alphabet, letters }
    }

    pub fn alphabet(&self) -> Alphabet {
        self.alphabet
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn check_alphabet(&self, alphabet: Alphabet) -> Result<()> {
        if self.alphabet == alphabet {
            Ok(())
        } else {
            Err(Error::AlphabetMismatch)
        }
    }

    pub fn multiply(&self, other: &Word) -> Result<Word> {
        other.check_alphabet(self.alphabet)?;
        let letters = free_reduce(self.letters.iter().chain(other.letters.iter()).copied());
        Ok(Word { alphabet: self.alphabet, letters })
    }

    /// Reverses the word and flips every exponent.
    pub fn invert(&self) -> Word {
        Word { alphabet: self.alphabet, letters: self.letters.iter().rev().map(|l| l.inv()).collect() }
    }

    pub fn pow(&self, exponent: i64) -> Word {
        let base = if exponent < 0 { self.invert() } else { self.clone() };
        let mut letters = Vec::with_capacity(base.len() * exponent.unsigned_abs() as usize);
        for _ in 0..exponent.unsigned_abs() {
            letters.extend_from_slice(&base.letters);
        }
        Word { alphabet: self.alphabet, letters: free_reduce(letters) }
    }

    /// `self · other · self⁻¹`
    pub fn conjugate(&self, other: &Word) -> Result<Word> {
        self.multiply(other)?.multiply(&self.invert())
    }

    /// Replaces every letter by a word (inverse letters by the inverse word)
    /// and reduces. `images[g]` is the image of generator `g`.
    pub fn substitute(&self, images: &[Word]) -> Result<Word> {
        let target = match images.first() {
            Some(w) => w.alphabet,
            None if self.is_empty() => return Ok(self.clone()),
            None => return Err(Error::GeneratorOutOfRange { index: self.letters[0].generator, rank: 0 }),
        };
        let mut out = Vec::new();
        for l in &self.letters {
            let img = images
                .get(l.generator as usize)
                .ok_or(Error::GeneratorOutOfRange { index: l.generator, rank: images.len() as u32 })?;
            img.check_alphabet(target)?;
            if l.inverse {
                out.extend(img.letters.iter().rev().map(|x| x.inv()));
            } else {
                out.extend_from_slice(&img.letters);
            }
        }
        Ok(Word { alphabet: target, letters: free_reduce(out) })
    }

    /// Sum of exponents of one generator.
    pub fn exponent_sum(&self, generator: u32) -> i64 {
        self.letters.iter().filter(|l| l.generator == generator).map(|l| i64::from(l.sign())).sum()
    }

    /// Formats with caller-supplied generator names; `x^-1` for inverses.
    pub fn display_with<'a, F>(&'a self, name: F) -> impl fmt::Display + 'a
    where
        F: Fn(u32) -> alloc::string::String + 'a,
    {
        DisplayWord { word: self, name }
    }
}

struct DisplayWord<'a, F> {
    word: &'a Word,
    name: F,
}

impl<F: Fn(u32) -> alloc::string::String> fmt::Display for DisplayWord<'_, F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.word.is_empty() {
            return f.write_str("1");
        }
        for (i, l) in self.word.letters.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            f.write_str(&(self.name)(l.generator))?;
            if l.inverse {
                f.write_str("^-1")?;
            }
        }
        Ok(())
    }
}
