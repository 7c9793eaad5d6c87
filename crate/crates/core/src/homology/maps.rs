use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::intlin::{cokernel, kernel_basis, solve_linear, IntMatrix};

use super::{ClassCoordinates, HomologyGroup};

/// Homomorphism between two presented groups `⊕ Z/mᵢ` (`mᵢ = 0` for free
/// summands), as the integer matrix of generator images.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomologyMap {
    matrix: IntMatrix,
    source: Vec<BigInt>,
    target: Vec<BigInt>,
}

/// Serializable summary of a map.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MapSummary {
    pub matrix: Vec<Vec<String>>,
    pub source_moduli: Vec<String>,
    pub target_moduli: Vec<String>,
    pub zero: bool,
    pub surjective: bool,
    pub injective: bool,
}

fn reduce(x: &BigInt, m: &BigInt) -> BigInt {
    if m.is_zero() {
        x.clone()
    } else {
        x.mod_floor(m)
    }
}

impl HomologyMap {
    /// Builds a map from the target coordinates of each source generator.
    pub fn new(matrix: IntMatrix, source: Vec<BigInt>, target: Vec<BigInt>) -> Result<Self> {
        if matrix.rows() != target.len() || matrix.cols() != source.len() {
            return Err(Error::domain("map matrix does not match group shapes"));
        }
        let mut map = HomologyMap {
            matrix,
            source,
            target,
        };
        map.normalize();
        Ok(map)
    }

    pub(crate) fn from_images(
        src: &HomologyGroup,
        dst: &HomologyGroup,
        images: &[ClassCoordinates],
    ) -> Self {
        let columns: Vec<Vec<BigInt>> = images.iter().map(ClassCoordinates::to_vec).collect();
        let matrix = IntMatrix::from_columns(dst.summands(), &columns);
        HomologyMap::new(matrix, src.moduli(), dst.moduli()).expect("shapes agree")
    }

    fn normalize(&mut self) {
        for i in 0..self.matrix.rows() {
            for j in 0..self.matrix.cols() {
                let x = reduce(&self.matrix[(i, j)], &self.target[i]);
                self.matrix[(i, j)] = x;
            }
        }
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.matrix
    }

    pub fn source_moduli(&self) -> &[BigInt] {
        &self.source
    }

    pub fn target_moduli(&self) -> &[BigInt] {
        &self.target
    }

    pub fn is_zero(&self) -> bool {
        self.matrix.is_zero()
    }

    fn relations(moduli: &[BigInt]) -> IntMatrix {
        IntMatrix::diagonal(moduli.len(), moduli.len(), moduli)
    }

    fn in_lattice(x: &[BigInt], moduli: &[BigInt]) -> bool {
        x.iter().zip(moduli).all(|(a, m)| reduce(a, m).is_zero())
    }

    /// Image plus target relations spans everything.
    pub fn is_surjective(&self) -> bool {
        let gens = self.matrix.hconcat(&Self::relations(&self.target));
        cokernel(&gens).is_trivial()
    }

    /// Generators (as source coordinate vectors) of the kernel, modulo nothing.
    pub fn kernel_generators(&self) -> Vec<Vec<BigInt>> {
        let m = self.source.len();
        let neg_rel = Self::relations(&self.target);
        let neg_rel = IntMatrix::from_fn(neg_rel.rows(), neg_rel.cols(), |i, j| -neg_rel[(i, j)].clone());
        let k = kernel_basis(&self.matrix.hconcat(&neg_rel));
        (0..k.cols())
            .map(|j| k.column(j)[..m].to_vec())
            .filter(|x| !Self::in_lattice(x, &self.source))
            .collect()
    }

    pub fn is_injective(&self) -> bool {
        self.kernel_generators().is_empty()
    }

    /// Whether the target vector `y` lies in the image, modulo target relations.
    pub fn image_contains(&self, y: &[BigInt]) -> bool {
        let gens = self.matrix.hconcat(&Self::relations(&self.target));
        matches!(solve_linear(&gens, y), Ok(Some(_)))
    }

    /// `next ∘ self`.
    pub fn then(&self, next: &HomologyMap) -> Result<HomologyMap> {
        if self.target != next.source {
            return Err(Error::domain("composition: group shapes differ"));
        }
        HomologyMap::new(
            next.matrix.mul(&self.matrix),
            self.source.clone(),
            next.target.clone(),
        )
    }

    /// `im(self) = ker(next)`.
    pub fn exact_with(&self, next: &HomologyMap) -> Result<bool> {
        if !self.then(next)?.is_zero() {
            return Ok(false);
        }
        Ok(next
            .kernel_generators()
            .iter()
            .all(|x| self.image_contains(x)))
    }

    pub fn summary(&self) -> MapSummary {
        MapSummary {
            matrix: (0..self.matrix.rows())
                .map(|i| self.matrix.row(i).iter().map(ToString::to_string).collect())
                .collect(),
            source_moduli: self.source.iter().map(ToString::to_string).collect(),
            target_moduli: self.target.iter().map(ToString::to_string).collect(),
            zero: self.is_zero(),
            surjective: self.is_surjective(),
            injective: self.is_injective(),
        }
    }
}

impl fmt::Display for HomologyMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.matrix.rows() == 0 || self.matrix.cols() == 0 {
            return writeln!(f, "[]");
        }
        write!(f, "{}", self.matrix)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bi(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    fn map(rows: &[&[i64]], src: &[i64], dst: &[i64]) -> HomologyMap {
        let m = if rows.is_empty() {
            IntMatrix::zeros(0, src.len())
        } else {
            IntMatrix::from_rows(rows)
        };
        HomologyMap::new(m, bi(src), bi(dst)).unwrap()
    }

    #[test]
    fn reduction_mod_target() {
        let f = map(&[&[5]], &[24], &[3]);
        assert_eq!(f.matrix()[(0, 0)], BigInt::from(2));
        assert!(f.is_surjective());
        assert!(!f.is_injective());
    }

    #[test]
    fn z24_to_z3_by_8_is_zero() {
        let f = map(&[&[3]], &[24], &[3]);
        assert!(f.is_zero());
        assert!(!f.is_surjective());
    }

    #[test]
    fn multiplication_by_two_on_z() {
        let f = map(&[&[2]], &[0], &[0]);
        assert!(f.is_injective());
        assert!(!f.is_surjective());
    }

    #[test]
    fn z3_into_z6() {
        // 1 ↦ 2 is well-defined and injective
        let f = map(&[&[2]], &[3], &[6]);
        assert!(f.is_injective());
        assert!(!f.is_surjective());
    }

    #[test]
    fn exactness_of_z_to_z_to_z2() {
        let two = map(&[&[2]], &[0], &[0]);
        let quot = map(&[&[1]], &[0], &[2]);
        assert!(two.exact_with(&quot).unwrap());
        let three = map(&[&[3]], &[0], &[0]);
        assert!(!three.exact_with(&quot).unwrap());
    }

    #[test]
    fn maps_into_the_zero_group() {
        let f = map(&[], &[3], &[]);
        assert!(f.is_zero());
        assert!(f.is_surjective());
        assert!(!f.is_injective());
    }
}
