//! Representations of a torus covering's subgroup through its lattice of
//! exponent sums.
//!
//! On the double of the annulus (`s = 0`, `k = 2`) the group is `Z²`
//! generated by `A1`, `B1`, and the subgroup of a connected covering is a
//! lattice `L`. Any pair of commuting unitaries `P`, `Q` defines `χ₁` on `L`
//! by `χ₁(p v₁ + q v₂) = P^p Q^q`.

use crate::covering::{CoveringAction, Transversal};
use crate::error::{Error, Result};
use crate::linalg::CMatrix;
use crate::presentation::{GeneratorLabel, Presentation};
use crate::representation::SubgroupRep;
use crate::word::Word;

/// Basis `v₁ = (a, b₀)`, `v₂ = (0, c)` of the lattice, with `a, c > 0` minimal
/// and `0 ≤ b₀ < c`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TorusLattice {
    pub a: i64,
    pub b0: i64,
    pub c: i64,
}

impl TorusLattice {
    pub fn of(cover: &CoveringAction) -> Result<Self> {
        let p = cover.presentation();
        let (ia, ib) = match (p.index_of(GeneratorLabel::A(1)), p.index_of(GeneratorLabel::B(1))) {
            (Some(a), Some(b)) if p.s == 0 && p.k == 2 => (a, b),
            _ => return Err(Error::InvalidSurface { s: i64::from(p.s), k: i64::from(p.k) }),
        };
        let (pa, pb) = (cover.permutation(ia), cover.permutation(ib));
        let mut b_orbit = alloc::vec![usize::MAX; cover.sheets()];
        let (mut sheet, mut y) = (0, 0i64);
        loop {
            b_orbit[sheet] = y as usize;
            sheet = pb.apply(sheet);
            y += 1;
            if sheet == 0 {
                break;
            }
        }
        let c = y;
        let (mut sheet, mut a) = (pa.apply(0), 1i64);
        while b_orbit[sheet] == usize::MAX {
            sheet = pa.apply(sheet);
            a += 1;
        }
        // 0·A^a = 0·B^y, so 0·A^a·B^(c−y) = 0.
        let b0 = (c - b_orbit[sheet] as i64) % c;
        Ok(TorusLattice { a, b0, c })
    }

    /// Coordinates of `(x, y)` in the basis, if it lies in the lattice.
    pub fn coordinates(&self, x: i64, y: i64) -> Option<(i64, i64)> {
        if x % self.a != 0 {
            return None;
        }
        let p = x / self.a;
        let rest = y - p * self.b0;
        (rest % self.c == 0).then_some((p, rest / self.c))
    }

    /// `Some((p, q))` for a word of the subgroup.
    pub fn coordinates_of(&self, cover: &CoveringAction, w: &Word) -> Option<(i64, i64)> {
        let pres = cover.presentation();
        let a = pres.index_of(GeneratorLabel::A(1))?;
        let b = pres.index_of(GeneratorLabel::B(1))?;
        self.coordinates(w.exponent_sum(a), w.exponent_sum(b))
    }
}

/// `χ₁(w) = P^p Q^q` where the exponent sums of `w` are `p v₁ + q v₂`.
pub fn lattice_rep(t: &Transversal, p: &CMatrix, q: &CMatrix) -> Result<SubgroupRep> {
    let cover = t.covering();
    let lattice = TorusLattice::of(cover)?;
    if p.rows() != q.rows() {
        return Err(Error::DimensionMismatch { expected: p.rows(), found: q.rows() });
    }
    SubgroupRep::from_fn(t, p.rows(), |w| {
        let (i, j) = lattice
            .coordinates_of(cover, w)
            .ok_or(Error::NotSubgroupElement { coset: cover.coset_of(w).unwrap_or(usize::MAX) })?;
        Ok(p.unitary_pow(i).matmul(&q.unitary_pow(j)))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::covering::{build_covering, schreier_transversal, SheetPermutation};
    use crate::presentation::double_group;

    fn cover(a: SheetPermutation, b: SheetPermutation) -> CoveringAction {
        let n = a.len();
        build_covering(double_group(0, 2).unwrap(), n, &[(GeneratorLabel::A(1), a), (GeneratorLabel::B(1), b)]).unwrap()
    }

    #[test]
    fn cyclic_lattice() {
        let c = cover(SheetPermutation::cycle(3, &[1, 2, 3]).unwrap(), SheetPermutation::identity(3));
        assert_eq!(TorusLattice::of(&c).unwrap(), TorusLattice { a: 3, b0: 0, c: 1 });
        let c = cover(SheetPermutation::identity(4), SheetPermutation::cycle(4, &[1, 2, 3, 4]).unwrap());
        assert_eq!(TorusLattice::of(&c).unwrap(), TorusLattice { a: 1, b0: 0, c: 4 });
    }

    #[test]
    fn skew_lattice() {
        // A and B both act as the same 3-cycle: L = {(x, y) : x + y ≡ 0 mod 3}.
        let s = SheetPermutation::cycle(3, &[1, 2, 3]).unwrap();
        let c = cover(s.clone(), s);
        let l = TorusLattice::of(&c).unwrap();
        assert_eq!(l, TorusLattice { a: 1, b0: 2, c: 3 });
        assert_eq!(l.coordinates(2, 1), Some((2, -1)));
        assert_eq!(l.coordinates(1, 1), None);
    }

    #[test]
    fn lattice_rep_is_consistent() {
        let s = SheetPermutation::cycle(3, &[1, 2, 3]).unwrap();
        let t = schreier_transversal(&cover(s.clone(), s));
        let p = CMatrix::scalar(1, crate::linalg::C64::from_polar(1.0, 0.4));
        let q = CMatrix::scalar(1, crate::linalg::C64::from_polar(1.0, -1.3));
        let chi = lattice_rep(&t, &p, &q).unwrap();
        assert!(crate::check::all_pass(&chi.check(&t).unwrap()));
    }
}
