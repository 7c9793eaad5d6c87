//! Rack, degenerate and quandle homology with explicit generators, class
//! coordinates, boundary witnesses, induced maps and the long exact sequence
//! of `0 → C^D → C^R → C^Q → 0`.
//!
//! `H_n = ker ∂_n / im ∂_{n+1}` is computed from two Smith normal forms. The
//! first, of `∂_n`, gives a kernel basis `K` (trailing columns of `V`) and the
//! kernel-coordinate map `P` (trailing rows of `V⁻¹`). The second, of
//! `M = P·∂_{n+1}`, presents the homology as `coker M`; its left transform
//! `U'` gives class coordinates and `K·U'⁻¹` gives generator cycles.

mod les;
mod maps;

pub use les::{inclusion_map, les_boundary_map, les_check, quotient_map, LesReport};
pub use maps::{HomologyMap, MapSummary};

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::chains::{boundary, boundary_matrix_in, map_chain, project, Basis, Chain, Variant};
use crate::error::{Error, Result};
use crate::intlin::{left_snf, smith_normal_form, solve_with, IntMatrix, SnfDecomposition};
use crate::quandle::{QuandleHom, RackTable};

/// `Z^free_rank ⊕ Z/d₁ ⊕ … ⊕ Z/d_k` with representative cycles, free
/// generators first, then torsion in increasing order of `dᵢ`.
#[derive(Clone, Debug)]
pub struct HomologyGroup {
    variant: Variant,
    degree: usize,
    free_rank: usize,
    torsion: Vec<BigInt>,
    generators: Vec<Chain>,
    basis: Arc<Basis>,
    // summand coordinates of a cycle given its basis coordinates
    coords: IntMatrix,
}

/// Coordinates of a homology class against [`HomologyGroup::generators`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassCoordinates {
    pub free_part: Vec<BigInt>,
    /// entry `i` reduced into `0..dᵢ`
    pub torsion_part: Vec<BigInt>,
}

impl ClassCoordinates {
    pub fn is_zero(&self) -> bool {
        self.free_part.iter().chain(&self.torsion_part).all(Zero::is_zero)
    }

    /// Free then torsion entries as one vector.
    pub fn to_vec(&self) -> Vec<BigInt> {
        self.free_part.iter().chain(&self.torsion_part).cloned().collect()
    }
}

impl HomologyGroup {
    pub fn variant(&self) -> Variant {
        self.variant
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn free_rank(&self) -> usize {
        self.free_rank
    }

    pub fn torsion(&self) -> &[BigInt] {
        &self.torsion
    }

    pub fn generators(&self) -> &[Chain] {
        &self.generators
    }

    pub fn is_trivial(&self) -> bool {
        self.generators.is_empty()
    }

    /// Number of cyclic summands.
    pub fn summands(&self) -> usize {
        self.generators.len()
    }

    /// Order of each summand, `0` for free ones.
    pub fn moduli(&self) -> Vec<BigInt> {
        std::iter::repeat(BigInt::zero())
            .take(self.free_rank)
            .chain(self.torsion.iter().cloned())
            .collect()
    }

    /// Coordinates of the class of a cycle. The caller is responsible for
    /// `c` being a cycle in this group's variant; see [`class_of`].
    pub fn coordinates_of(&self, c: &Chain) -> Result<ClassCoordinates> {
        let x = self.basis.coordinates(c)?;
        let w = self.coords.mul_vec(&x);
        Ok(self.split(w))
    }

    fn split(&self, w: Vec<BigInt>) -> ClassCoordinates {
        let mut free_part = w;
        let torsion_part = free_part
            .split_off(self.free_rank)
            .into_iter()
            .zip(&self.torsion)
            .map(|(x, d)| x.mod_floor(d))
            .collect();
        ClassCoordinates {
            free_part,
            torsion_part,
        }
    }

    /// The chain representing the given summand coordinates.
    pub fn chain_of(&self, coords: &[BigInt]) -> Chain {
        let mut c = Chain::zero(self.degree);
        for (g, k) in self.generators.iter().zip(coords) {
            c.add_scaled(g, k);
        }
        c
    }
}

impl fmt::Display for HomologyGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_group(self.free_rank, &self.torsion))
    }
}

/// `0`, `Z`, `Z^2 + Z_3 + Z_6`, …
pub fn format_group(free_rank: usize, torsion: &[BigInt]) -> String {
    let mut parts = Vec::new();
    match free_rank {
        0 => {}
        1 => parts.push("Z".to_string()),
        r => parts.push(format!("Z^{r}")),
    }
    parts.extend(torsion.iter().map(|d| format!("Z_{d}")));
    if parts.is_empty() {
        "0".into()
    } else {
        parts.join(" + ")
    }
}

/// Chain complex `C^v_*` of one rack, memoizing bases, boundary SNFs and
/// homology groups per degree.
pub struct Complex {
    rack: RackTable,
    variant: Variant,
    bases: RwLock<HashMap<usize, Arc<Basis>>>,
    snfs: RwLock<HashMap<usize, Arc<SnfDecomposition>>>,
    groups: RwLock<HashMap<usize, Arc<HomologyGroup>>>,
}

impl Complex {
    pub fn new(rack: &RackTable, variant: Variant) -> Result<Self> {
        if variant != Variant::R && !rack.is_quandle() {
            return Err(Error::Variant(format!(
                "variant {variant} needs a quandle; this rack is not idempotent"
            )));
        }
        Ok(Complex {
            rack: rack.clone(),
            variant,
            bases: RwLock::default(),
            snfs: RwLock::default(),
            groups: RwLock::default(),
        })
    }

    /// Shared instance from the process-wide cache.
    pub fn shared(rack: &RackTable, variant: Variant) -> Result<Arc<Self>> {
        static CACHE: OnceLock<RwLock<HashMap<(u64, Variant), Vec<Arc<Complex>>>>> =
            OnceLock::new();
        let cache = CACHE.get_or_init(RwLock::default);
        let key = (rack.fingerprint(), variant);
        let same = |c: &&Arc<Complex>| c.rack.rows() == rack.rows();
        if let Some(c) = cache.read().unwrap().get(&key).and_then(|v| v.iter().find(same)) {
            return Ok(c.clone());
        }
        let mut w = cache.write().unwrap();
        let slot = w.entry(key).or_default();
        if let Some(c) = slot.iter().find(same) {
            return Ok(c.clone());
        }
        let c = Arc::new(Complex::new(rack, variant)?);
        slot.push(c.clone());
        Ok(c)
    }

    pub fn rack(&self) -> &RackTable {
        &self.rack
    }

    pub fn variant(&self) -> Variant {
        self.variant
    }

    /// Basis of `C_n`; the empty basis for `n = 0`.
    pub fn basis(&self, n: usize) -> Result<Arc<Basis>> {
        if let Some(b) = self.bases.read().unwrap().get(&n) {
            return Ok(b.clone());
        }
        let b = Arc::new(if n == 0 {
            Basis::empty(self.variant)
        } else {
            Basis::new(&self.rack, self.variant, n)?
        });
        self.bases.write().unwrap().insert(n, b.clone());
        Ok(b)
    }

    /// Matrix of `∂_n : C_n → C_{n−1}`.
    pub fn boundary_matrix(&self, n: usize) -> Result<IntMatrix> {
        let cols = self.basis(n)?;
        let rows = self.basis(n.saturating_sub(1))?;
        boundary_matrix_in(&self.rack, &rows, &cols)
    }

    /// Full decomposition of `∂_n`.
    pub fn boundary_snf(&self, n: usize) -> Result<Arc<SnfDecomposition>> {
        if let Some(s) = self.snfs.read().unwrap().get(&n) {
            return Ok(s.clone());
        }
        let s = Arc::new(smith_normal_form(&self.boundary_matrix(n)?));
        self.snfs.write().unwrap().insert(n, s.clone());
        Ok(s)
    }

    /// Number of basis elements of `C_n` without building the basis.
    pub fn dimension(&self, n: usize) -> usize {
        let q = self.rack.size() as u128;
        if n == 0 {
            return 0;
        }
        let all = q.saturating_pow(n as u32);
        let nondeg = q.saturating_mul(q.saturating_sub(1).saturating_pow(n as u32 - 1));
        let d = match self.variant {
            Variant::R => all,
            Variant::Q => nondeg,
            Variant::D => all - nondeg,
        };
        d.min(usize::MAX as u128) as usize
    }

    pub fn homology(&self, n: usize) -> Result<Arc<HomologyGroup>> {
        if n == 0 {
            return Err(Error::domain("homology degree must be at least 1"));
        }
        if let Some(g) = self.groups.read().unwrap().get(&n) {
            return Ok(g.clone());
        }
        let g = Arc::new(self.compute_homology(n)?);
        self.groups.write().unwrap().insert(n, g.clone());
        Ok(g)
    }

    fn compute_homology(&self, n: usize) -> Result<HomologyGroup> {
        let basis = self.basis(n)?;
        let dn = self.boundary_snf(n)?;
        let r = dn.rank();
        let dim = basis.len();
        let kernel = dn.v.column_range(r, dim);
        let to_kernel = dn.v_inverse().row_range(r, dim);

        let next = self.boundary_matrix(n + 1)?;
        let m = to_kernel.mul(&next);
        let pres = left_snf(&m);
        let k = dim - r;

        let mut free = Vec::new();
        let mut tors = Vec::new();
        for i in 0..k {
            match pres.diag.get(i) {
                Some(d) if d.is_one() => {}
                Some(d) => tors.push((i, d.clone())),
                None => free.push(i),
            }
        }
        let order: Vec<usize> = free.iter().copied().chain(tors.iter().map(|t| t.0)).collect();

        let mut generators = Vec::with_capacity(order.len());
        for &i in &order {
            let y = pres.u_inv.column(i);
            generators.push(basis.chain(&kernel.mul_vec(&y)));
        }
        let selector = IntMatrix::from_fn(order.len(), k, |a, b| {
            if order[a] == b {
                BigInt::one()
            } else {
                BigInt::zero()
            }
        });
        let coords = selector.mul(&pres.u).mul(&to_kernel);

        Ok(HomologyGroup {
            variant: self.variant,
            degree: n,
            free_rank: free.len(),
            torsion: tors.into_iter().map(|t| t.1).collect(),
            generators,
            basis,
            coords,
        })
    }

    /// Whether `∂c` vanishes in this variant.
    pub fn is_cycle(&self, c: &Chain) -> Result<bool> {
        c.check_in(&self.rack)?;
        let c = project(c, self.variant)?;
        Ok(project(&boundary(&self.rack, &c), self.variant)?.is_zero())
    }

    /// A chain `ν` of degree `n + 1` with `∂ν = c` in this variant, or `None`
    /// when the class of the cycle `c` is nonzero.
    pub fn is_boundary(&self, c: &Chain) -> Result<Option<Chain>> {
        self.require_cycle(c)?;
        let n = c.degree();
        if c.is_zero() {
            return Ok(Some(Chain::zero(n + 1)));
        }
        let rhs = self.basis(n)?.coordinates(c)?;
        let snf = self.boundary_snf(n + 1)?;
        let witness = solve_with(&snf, &rhs)?;
        Ok(witness.map(|x| self.basis(n + 1).expect("cached").chain(&x)))
    }

    pub fn class_of(&self, c: &Chain) -> Result<ClassCoordinates> {
        self.require_cycle(c)?;
        let n = if c.is_zero() { c.degree().max(1) } else { c.degree() };
        self.homology(n)?.coordinates_of(c)
    }

    fn require_cycle(&self, c: &Chain) -> Result<()> {
        if !self.is_cycle(c)? {
            return Err(Error::Precondition(format!(
                "chain is not a {} cycle",
                self.variant
            )));
        }
        Ok(())
    }
}

pub fn homology(rack: &RackTable, v: Variant, n: usize) -> Result<Arc<HomologyGroup>> {
    Complex::shared(rack, v)?.homology(n)
}

pub fn is_cycle(rack: &RackTable, c: &Chain, v: Variant) -> Result<bool> {
    Complex::shared(rack, v)?.is_cycle(c)
}

pub fn is_boundary(rack: &RackTable, c: &Chain, v: Variant) -> Result<Option<Chain>> {
    Complex::shared(rack, v)?.is_boundary(c)
}

pub fn class_of(rack: &RackTable, c: &Chain, v: Variant) -> Result<ClassCoordinates> {
    Complex::shared(rack, v)?.class_of(c)
}

/// Map on `H^v_n` induced by `f#(x₁,…,x_n) = (f x₁,…,f x_n)`.
pub fn induced_map(f: &QuandleHom, v: Variant, n: usize) -> Result<HomologyMap> {
    let src = homology(f.source(), v, n)?;
    let dst_complex = Complex::shared(f.target(), v)?;
    let dst = dst_complex.homology(n)?;
    let images = src
        .generators()
        .iter()
        .map(|g| {
            let image = project(&map_chain(f.map(), g), v)?;
            dst.coordinates_of(&image)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(HomologyMap::from_images(&src, &dst, &images))
}
