use std::fmt;

use num_integer::Integer;

use crate::error::{Error, Result};

use super::FiniteQuandle;

/// `h(T) = Σ cᵢ T^{min_degree + i}` over `Z_n`, with nonzero extreme coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LaurentPolynomial {
    modulus: u64,
    min_degree: i64,
    coefficients: Vec<u64>,
}

impl LaurentPolynomial {
    /// Reduces the coefficients mod `modulus` and strips zero ends.
    pub fn new(modulus: u64, min_degree: i64, coefficients: &[i64]) -> Result<Self> {
        if modulus < 2 {
            return Err(Error::domain("modulus must be at least 2"));
        }
        let reduced: Vec<u64> = coefficients
            .iter()
            .map(|&c| c.rem_euclid(modulus as i64) as u64)
            .collect();
        let Some(first) = reduced.iter().position(|&c| c != 0) else {
            return Err(Error::domain("zero polynomial"));
        };
        let last = reduced.iter().rposition(|&c| c != 0).unwrap();
        Ok(LaurentPolynomial {
            modulus,
            min_degree: min_degree + first as i64,
            coefficients: reduced[first..=last].to_vec(),
        })
    }

    /// Parses sums of terms like `T^2`, `-3T^-1`, `2*T`, `1`, e.g. `T^2+T+1`.
    pub fn parse(modulus: u64, s: &str) -> Result<Self> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(Error::domain("empty polynomial"));
        }
        let mut terms: Vec<(i64, i64)> = Vec::new();
        let bytes = compact.as_bytes();
        let mut start = 0;
        for i in 1..=bytes.len() {
            let at_split = i == bytes.len()
                || ((bytes[i] == b'+' || bytes[i] == b'-') && bytes[i - 1] != b'^');
            if at_split {
                terms.push(parse_term(&compact[start..i])?);
                start = i;
            }
        }
        let lo = terms.iter().map(|t| t.1).min().unwrap();
        let hi = terms.iter().map(|t| t.1).max().unwrap();
        let mut coeffs = vec![0i64; (hi - lo + 1) as usize];
        for (c, d) in terms {
            coeffs[(d - lo) as usize] += c;
        }
        Self::new(modulus, lo, &coeffs)
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn min_degree(&self) -> i64 {
        self.min_degree
    }

    pub fn coefficients(&self) -> &[u64] {
        &self.coefficients
    }

    /// Difference between the highest and lowest degree.
    pub fn degree_span(&self) -> usize {
        self.coefficients.len() - 1
    }
}

fn parse_term(t: &str) -> Result<(i64, i64)> {
    let bad = || Error::domain(format!("cannot parse polynomial term {t:?}"));
    let (sign, body) = match t.as_bytes().first() {
        Some(b'+') => (1, &t[1..]),
        Some(b'-') => (-1, &t[1..]),
        _ => (1, t),
    };
    let Some(pos) = body.find('T') else {
        return Ok((sign * body.parse::<i64>().map_err(|_| bad())?, 0));
    };
    let coeff = match body[..pos].trim_end_matches('*') {
        "" => 1,
        c => c.parse::<i64>().map_err(|_| bad())?,
    };
    let degree = match &body[pos + 1..] {
        "" => 1,
        rest => rest
            .strip_prefix('^')
            .ok_or_else(bad)?
            .parse::<i64>()
            .map_err(|_| bad())?,
    };
    Ok((sign * coeff, degree))
}

impl fmt::Display for LaurentPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &c) in self.coefficients.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            let d = self.min_degree + i as i64;
            if !first {
                f.write_str("+")?;
            }
            first = false;
            match (c, d) {
                (c, 0) => write!(f, "{c}")?,
                (1, 1) => f.write_str("T")?,
                (1, d) => write!(f, "T^{d}")?,
                (c, 1) => write!(f, "{c}T")?,
                (c, d) => write!(f, "{c}T^{d}")?,
            }
        }
        Ok(())
    }
}

fn inverse_mod(a: u64, n: u64) -> Option<u64> {
    let g = (a as i64).extended_gcd(&(n as i64));
    (g.gcd == 1).then(|| g.x.rem_euclid(n as i64) as u64)
}

/// The mod-n Alexander quandle `Z_n[T, T⁻¹]/(h)` with `a ∗ b = Ta + (1 − T)b`.
///
/// Elements are coefficient vectors `(a₀, …, a_{k−1})` of `1, T, …, T^{k−1}`,
/// `k` the degree span of `h`, numbered in lexicographic order with `a₀` most
/// significant.
pub fn alexander(h: &LaurentPolynomial) -> Result<FiniteQuandle> {
    let n = h.modulus;
    let c = &h.coefficients;
    let lead = *c.last().unwrap();
    let (Some(lead_inv), Some(_)) = (inverse_mod(lead, n), inverse_mod(c[0], n)) else {
        return Err(Error::InfiniteQuandle(format!(
            "extreme coefficients of {h} are not units mod {n}"
        )));
    };
    let k = h.degree_span();
    // monic normalization: T^k = -Σ_{i<k} m_i T^i
    let monic: Vec<u64> = c[..k].iter().map(|&x| x * lead_inv % n).collect();
    let size = (n as usize)
        .checked_pow(k as u32)
        .ok_or_else(|| Error::domain("Alexander quandle too large"))?;

    let decode = |mut idx: usize| -> Vec<u64> {
        let mut v = vec![0u64; k];
        for slot in v.iter_mut().rev() {
            *slot = (idx % n as usize) as u64;
            idx /= n as usize;
        }
        v
    };
    let encode = |v: &[u64]| -> usize { v.iter().fold(0, |acc, &x| acc * n as usize + x as usize) };
    let times_t = |v: &[u64]| -> Vec<u64> {
        let mut out = vec![0u64; k];
        let top = v[k - 1];
        for i in (1..k).rev() {
            out[i] = v[i - 1];
        }
        for i in 0..k {
            out[i] = (out[i] + (n - monic[i]) * top) % n;
        }
        out
    };

    if k == 0 {
        return FiniteQuandle::new(vec![vec![0]]);
    }
    let elems: Vec<Vec<u64>> = (0..size).map(decode).collect();
    let t_of: Vec<Vec<u64>> = elems.iter().map(|v| times_t(v)).collect();
    let rows = (0..size)
        .map(|a| {
            (0..size)
                .map(|b| {
                    let v: Vec<u64> = (0..k)
                        .map(|i| (t_of[a][i] + elems[b][i] + n - t_of[b][i]) % n)
                        .collect();
                    encode(&v)
                })
                .collect()
        })
        .collect();
    FiniteQuandle::new(rows)
}
