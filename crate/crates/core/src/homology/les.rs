//! The long exact sequence `… → H^D_n → H^R_n → H^Q_n → H^D_{n−1} → …`.

use serde::{Deserialize, Serialize};

use crate::chains::{boundary, project, Variant};
use crate::error::{Error, Result};
use crate::quandle::FiniteQuandle;

use super::{format_group, Complex, HomologyMap, MapSummary};

/// Connecting map `∂_* : H^Q_n → H^D_{n−1}`: lift a generator to its
/// nondegenerate representative, take the rack boundary (degenerate because
/// the generator is a Q-cycle) and read off its D-class.
pub fn les_boundary_map(q: &FiniteQuandle, n: usize) -> Result<HomologyMap> {
    if n < 2 {
        return Err(Error::domain("connecting map needs degree at least 2"));
    }
    let hq = Complex::shared(q, Variant::Q)?.homology(n)?;
    let hd = Complex::shared(q, Variant::D)?.homology(n - 1)?;
    let images = hq
        .generators()
        .iter()
        .map(|g| {
            let b = boundary(q, g);
            debug_assert!(project(&b, Variant::Q).map_or(false, |p| p.is_zero()));
            hd.coordinates_of(&b)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(HomologyMap::from_images(&hq, &hd, &images))
}

/// `i_* : H^D_n → H^R_n`.
pub fn inclusion_map(q: &FiniteQuandle, n: usize) -> Result<HomologyMap> {
    let hd = Complex::shared(q, Variant::D)?.homology(n)?;
    let hr = Complex::shared(q, Variant::R)?.homology(n)?;
    let images = hd
        .generators()
        .iter()
        .map(|g| hr.coordinates_of(g))
        .collect::<Result<Vec<_>>>()?;
    Ok(HomologyMap::from_images(&hd, &hr, &images))
}

/// `j_* : H^R_n → H^Q_n`.
pub fn quotient_map(q: &FiniteQuandle, n: usize) -> Result<HomologyMap> {
    let hr = Complex::shared(q, Variant::R)?.homology(n)?;
    let hq = Complex::shared(q, Variant::Q)?.homology(n)?;
    let images = hr
        .generators()
        .iter()
        .map(|g| hq.coordinates_of(&project(g, Variant::Q)?))
        .collect::<Result<Vec<_>>>()?;
    Ok(HomologyMap::from_images(&hr, &hq, &images))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LesReport {
    pub degree: usize,
    /// `H^D_n`, `H^R_n`, `H^Q_n`, `H^D_{n−1}` rendered as `Z^r + Z_d …`.
    pub groups: [String; 4],
    pub inclusion: MapSummary,
    pub quotient: MapSummary,
    pub connecting: MapSummary,
    pub exact_at_rack: bool,
    pub exact_at_quandle: bool,
}

impl LesReport {
    pub fn is_exact(&self) -> bool {
        self.exact_at_rack && self.exact_at_quandle
    }
}

/// Checks `im = ker` at `H^R_n` and `H^Q_n` in
/// `H^D_n → H^R_n → H^Q_n → H^D_{n−1}`.
pub fn les_check(q: &FiniteQuandle, n: usize) -> Result<LesReport> {
    let i = inclusion_map(q, n)?;
    let j = quotient_map(q, n)?;
    let d = les_boundary_map(q, n)?;
    let group = |v: Variant, k: usize| -> Result<String> {
        let h = Complex::shared(q, v)?.homology(k)?;
        Ok(format_group(h.free_rank(), h.torsion()))
    };
    Ok(LesReport {
        degree: n,
        groups: [
            group(Variant::D, n)?,
            group(Variant::R, n)?,
            group(Variant::Q, n)?,
            group(Variant::D, n - 1)?,
        ],
        exact_at_rack: i.exact_with(&j)?,
        exact_at_quandle: j.exact_with(&d)?,
        inclusion: i.summary(),
        quotient: j.summary(),
        connecting: d.summary(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quandle::{dihedral, trivial};

    #[test]
    fn r3_connecting_maps_vanish() {
        let r3 = dihedral(3).unwrap();
        for n in [2, 3, 4] {
            assert!(les_boundary_map(&r3, n).unwrap().is_zero(), "n = {n}");
        }
        assert!(les_boundary_map(&r3, 1).is_err());
    }

    #[test]
    fn exactness_small_cases() {
        for q in [dihedral(3).unwrap(), trivial(2).unwrap()] {
            let report = les_check(&q, 2).unwrap();
            assert!(report.is_exact(), "{report:?}");
        }
    }

    #[test]
    fn connecting_then_inclusion_is_zero() {
        let r3 = dihedral(3).unwrap();
        let d = les_boundary_map(&r3, 3).unwrap();
        let i = inclusion_map(&r3, 2).unwrap();
        assert!(d.then(&i).unwrap().is_zero());
    }
}
