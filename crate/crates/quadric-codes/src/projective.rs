//! The projective space PG(N,q): normalized points, hyperplanes,
//! subspaces and incidence.
//!
//! Points and hyperplanes share one normalization rule: the leftmost
//! non-zero coordinate equals 1. Enumeration is in lexicographic order
//! of the coordinate encodings, with the first coordinate most
//! significant. That order is fixed forever; the column order of every
//! generator matrix and all golden outputs depend on it.

use crate::error::{Error, Result};
use crate::gf::{Fe, Field};
use crate::linalg::{self, MatrixGF};

/// Ambient geometry: the projective dimension N, the base field, and the
/// half-dimension parameter l (l = (N-1)/2 for odd N, l = N/2 for even N).
#[derive(Clone, Debug)]
pub struct GeometryContext {
    n_dim: usize,
    field: Field,
    l: usize,
}

impl GeometryContext {
    pub fn new(n_dim: usize, field: Field) -> Result<GeometryContext> {
        if n_dim < 2 {
            return Err(Error::DimensionTooSmall(n_dim));
        }
        let l = if n_dim % 2 == 1 { (n_dim - 1) / 2 } else { n_dim / 2 };
        Ok(GeometryContext { n_dim, field, l })
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n_dim
    }

    #[inline]
    pub fn l(&self) -> usize {
        self.l
    }

    #[inline]
    pub fn field(&self) -> &Field {
        &self.field
    }

    #[inline]
    pub fn q(&self) -> u16 {
        self.field.q()
    }

    /// |PG(N,q)| for this context.
    pub fn space_size(&self) -> u64 {
        pg_size(self.q() as u64, self.n_dim as i64)
    }
}

/// (q^(n+1) - 1)/(q - 1), the number of points of PG(n,q); 0 when n = -1.
pub fn pg_size(q: u64, n: i64) -> u64 {
    if n < 0 {
        return 0;
    }
    let mut acc = 0u64;
    let mut term = 1u64;
    for _ in 0..=n {
        acc += term;
        term *= q;
    }
    acc
}

/// A point of PG(N,q) with normalized coordinates.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct ProjectivePoint {
    pub coords: Vec<Fe>,
}

/// A hyperplane of PG(N,q), stored as a normalized dual vector.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Hyperplane {
    pub coeffs: Vec<Fe>,
}

impl Hyperplane {
    /// Incidence: the point lies on the hyperplane iff the dot product
    /// of coordinates and coefficients vanishes.
    pub fn contains(&self, p: &ProjectivePoint, f: &Field) -> bool {
        dot(&self.coeffs, &p.coords, f).is_zero()
    }
}

pub fn dot(a: &[Fe], b: &[Fe], f: &Field) -> Fe {
    debug_assert_eq!(a.len(), b.len());
    let mut acc = Fe::ZERO;
    for (&x, &y) in a.iter().zip(b) {
        acc = f.add(acc, f.mul(x, y));
    }
    acc
}

/// Scale `v` so its leftmost non-zero coordinate is 1.
pub fn normalize_vector(v: &[Fe], f: &Field) -> Result<Vec<Fe>> {
    let lead = v.iter().find(|c| !c.is_zero()).ok_or(Error::ZeroVector)?;
    let scale = f.inv(*lead)?;
    Ok(v.iter().map(|&c| f.mul(scale, c)).collect())
}

/// Normalize a raw coordinate vector into a projective point.
pub fn normalize(v: &[Fe], f: &Field) -> Result<ProjectivePoint> {
    Ok(ProjectivePoint {
        coords: normalize_vector(v, f)?,
    })
}

/// All normalized coordinate vectors of length `len` over GF(q), in
/// lexicographic order with the first coordinate most significant.
fn enumerate_normalized(len: usize, f: &Field) -> Vec<Vec<Fe>> {
    let q = f.q() as u64;
    let total = q.pow(len as u32);
    let mut out = Vec::with_capacity(pg_size(q, len as i64 - 1) as usize);
    let mut digits = vec![Fe::ZERO; len];
    for v in 1..total {
        // decode v most-significant-first
        let mut rem = v;
        for i in (0..len).rev() {
            digits[i] = Fe((rem % q) as u8);
            rem /= q;
        }
        if digits.iter().find(|c| !c.is_zero()) == Some(&Fe::ONE) {
            out.push(digits.clone());
        }
    }
    out
}

/// All (q^(N+1)-1)/(q-1) points of PG(N,q) in canonical order.
///
/// ```
/// use quadric_codes::gf::Field;
/// use quadric_codes::projective::{enumerate_points, GeometryContext};
///
/// let ctx = GeometryContext::new(2, Field::new(2, 1).unwrap()).unwrap();
/// let points = enumerate_points(&ctx); // the Fano plane
/// assert_eq!(points.len(), 7);
/// ```
pub fn enumerate_points(ctx: &GeometryContext) -> Vec<ProjectivePoint> {
    enumerate_normalized(ctx.n() + 1, ctx.field())
        .into_iter()
        .map(|coords| ProjectivePoint { coords })
        .collect()
}

/// All hyperplanes of PG(N,q), in the same canonical order (duality).
pub fn enumerate_hyperplanes(ctx: &GeometryContext) -> Vec<Hyperplane> {
    enumerate_normalized(ctx.n() + 1, ctx.field())
        .into_iter()
        .map(|coeffs| Hyperplane { coeffs })
        .collect()
}

/// A projective subspace, stored by a reduced-echelon basis of the
/// underlying vector subspace. The empty basis is the empty subspace.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Subspace {
    pub basis: Vec<Vec<Fe>>,
}

impl Subspace {
    pub fn empty() -> Subspace {
        Subspace { basis: Vec::new() }
    }

    /// Echelonize arbitrary spanning vectors into a canonical basis.
    pub fn from_vectors(vectors: &[Vec<Fe>], f: &Field) -> Subspace {
        Subspace {
            basis: linalg::echelon_basis(vectors, f),
        }
    }

    /// Projective dimension: |basis| - 1, so -1 for the empty subspace.
    pub fn proj_dim(&self) -> i64 {
        self.basis.len() as i64 - 1
    }

    /// Membership test against the echelon basis.
    pub fn contains_vector(&self, v: &[Fe], f: &Field) -> bool {
        let mut rem: Vec<Fe> = v.to_vec();
        for row in &self.basis {
            let pivot = row.iter().position(|c| !c.is_zero()).expect("basis rows are non-zero");
            if !rem[pivot].is_zero() {
                let factor = rem[pivot];
                for (r, &b) in rem.iter_mut().zip(row) {
                    *r = f.sub(*r, f.mul(factor, b));
                }
            }
        }
        rem.iter().all(|c| c.is_zero())
    }

    /// Materialize the point list of the subspace, in sorted canonical
    /// order. Each point appears exactly once.
    pub fn points(&self, f: &Field) -> Vec<ProjectivePoint> {
        let k = self.basis.len();
        if k == 0 {
            return Vec::new();
        }
        let coeff_sets = enumerate_normalized(k, f);
        let dim = self.basis[0].len();
        let mut out: Vec<ProjectivePoint> = coeff_sets
            .into_iter()
            .map(|coeffs| {
                let mut v = vec![Fe::ZERO; dim];
                for (c, row) in coeffs.iter().zip(&self.basis) {
                    if c.is_zero() {
                        continue;
                    }
                    for (slot, &b) in v.iter_mut().zip(row) {
                        *slot = f.add(*slot, f.mul(*c, b));
                    }
                }
                normalize(&v, f).expect("independent basis gives non-zero combinations")
            })
            .collect();
        out.sort();
        out
    }
}

/// The codimension-2 subspace common to two distinct hyperplanes.
pub fn intersect(h1: &Hyperplane, h2: &Hyperplane, ctx: &GeometryContext) -> Result<Subspace> {
    if h1 == h2 {
        return Err(Error::EqualHyperplanes);
    }
    let m = MatrixGF::from_rows(&[h1.coeffs.clone(), h2.coeffs.clone()]);
    let basis = linalg::kernel_basis(&m, ctx.field());
    debug_assert_eq!(basis.len(), ctx.n() - 1);
    Ok(Subspace { basis })
}

/// The q+1 hyperplanes through a codimension-2 subspace, in canonical
/// order of their dual vectors.
pub fn hyperplanes_through(s: &Subspace, ctx: &GeometryContext) -> Vec<Hyperplane> {
    let m = MatrixGF::from_rows(&s.basis);
    let dual_basis = linalg::kernel_basis(&m, ctx.field());
    let dual = Subspace { basis: dual_basis };
    dual.points(ctx.field())
        .into_iter()
        .map(|p| Hyperplane { coeffs: p.coords })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx(n: usize, p: u64, h: u32) -> GeometryContext {
        GeometryContext::new(n, Field::new(p, h).unwrap()).unwrap()
    }

    fn fe(vals: &[u8]) -> Vec<Fe> {
        vals.iter().map(|&v| Fe(v)).collect()
    }

    #[test]
    fn point_counts() {
        assert_eq!(enumerate_points(&ctx(2, 2, 1)).len(), 7);
        assert_eq!(enumerate_points(&ctx(5, 2, 1)).len(), 63);
        assert_eq!(enumerate_points(&ctx(3, 3, 1)).len(), 40);
        assert_eq!(enumerate_hyperplanes(&ctx(5, 2, 1)).len(), 63);
        assert_eq!(enumerate_hyperplanes(&ctx(4, 3, 1)).len(), 121);
        assert_eq!(enumerate_hyperplanes(&ctx(2, 2, 1)).len(), 7);
    }

    #[test]
    fn points_are_distinct_and_normalized() {
        for c in [ctx(3, 2, 1), ctx(2, 3, 1), ctx(2, 2, 2)] {
            let pts = enumerate_points(&c);
            assert_eq!(pts.len() as u64, pg_size(c.q() as u64, c.n() as i64));
            let set: std::collections::HashSet<_> = pts.iter().collect();
            assert_eq!(set.len(), pts.len());
            for p in &pts {
                assert_eq!(
                    p.coords.iter().find(|v| !v.is_zero()),
                    Some(&Fe::ONE)
                );
            }
        }
    }

    #[test]
    fn normalize_examples() {
        let f = Field::new(3, 1).unwrap();
        assert_eq!(normalize(&fe(&[0, 2, 1]), &f).unwrap().coords, fe(&[0, 1, 2]));
        assert_eq!(normalize(&fe(&[1, 0, 1]), &f).unwrap().coords, fe(&[1, 0, 1]));
        assert_eq!(normalize(&fe(&[0, 0, 0]), &f).unwrap_err(), Error::ZeroVector);
    }

    #[test]
    fn hyperplane_point_incidence_counts() {
        // each hyperplane of PG(N,q) carries (q^N - 1)/(q - 1) points
        for c in [
            ctx(2, 2, 1),
            ctx(3, 2, 1),
            ctx(4, 2, 1),
            ctx(5, 2, 1),
            ctx(2, 3, 1),
            ctx(3, 3, 1),
            ctx(4, 3, 1),
            ctx(5, 3, 1),
        ] {
            let pts = enumerate_points(&c);
            let expected = pg_size(c.q() as u64, c.n() as i64 - 1) as usize;
            for h in enumerate_hyperplanes(&c) {
                let on = pts.iter().filter(|p| h.contains(p, c.field())).count();
                assert_eq!(on, expected);
            }
        }
    }

    #[test]
    fn intersect_two_hyperplanes() {
        let c = ctx(5, 2, 1);
        let h1 = Hyperplane { coeffs: fe(&[1, 0, 0, 0, 0, 0]) };
        let h2 = Hyperplane { coeffs: fe(&[0, 1, 0, 0, 0, 0]) };
        let s = intersect(&h1, &h2, &c).unwrap();
        assert_eq!(s.proj_dim(), 3);
        assert_eq!(
            s.basis,
            vec![
                fe(&[0, 0, 1, 0, 0, 0]),
                fe(&[0, 0, 0, 1, 0, 0]),
                fe(&[0, 0, 0, 0, 1, 0]),
                fe(&[0, 0, 0, 0, 0, 1]),
            ]
        );

        // X0 = 0 and X0 + X1 = 0 force the same subspace
        let h3 = Hyperplane { coeffs: fe(&[1, 1, 0, 0, 0, 0]) };
        assert_eq!(intersect(&h1, &h3, &c).unwrap(), s);

        assert_eq!(intersect(&h1, &h1, &c).unwrap_err(), Error::EqualHyperplanes);
    }

    #[test]
    fn intersection_dimension_is_codim_two() {
        let c = ctx(4, 3, 1);
        let hs = enumerate_hyperplanes(&c);
        for i in (0..hs.len()).step_by(17) {
            for j in (0..hs.len()).step_by(23) {
                if hs[i] == hs[j] {
                    continue;
                }
                let s = intersect(&hs[i], &hs[j], &c).unwrap();
                assert_eq!(s.proj_dim(), c.n() as i64 - 2);
            }
        }
    }

    #[test]
    fn hyperplane_pencil_through_codim2() {
        let c = ctx(5, 2, 1);
        let h1 = Hyperplane { coeffs: fe(&[1, 0, 0, 0, 0, 0]) };
        let h2 = Hyperplane { coeffs: fe(&[0, 1, 0, 0, 0, 0]) };
        let s = intersect(&h1, &h2, &c).unwrap();
        let pencil = hyperplanes_through(&s, &c);
        assert_eq!(pencil.len(), c.q() as usize + 1);
        assert!(pencil.contains(&h1));
        assert!(pencil.contains(&h2));
        for h in &pencil {
            for v in &s.basis {
                assert!(dot(&h.coeffs, v, c.field()).is_zero());
            }
        }
    }

    #[test]
    fn subspace_points_and_membership() {
        let c = ctx(3, 3, 1);
        let s = Subspace::from_vectors(&[fe(&[1, 0, 0, 0]), fe(&[0, 1, 0, 0])], c.field());
        assert_eq!(s.proj_dim(), 1);
        let pts = s.points(c.field());
        assert_eq!(pts.len(), 4); // a line of PG(3,3)
        for p in &pts {
            assert!(s.contains_vector(&p.coords, c.field()));
        }
        assert!(!s.contains_vector(&fe(&[0, 0, 1, 0]), c.field()));
    }

    #[test]
    fn context_l_parameter() {
        assert_eq!(ctx(5, 2, 1).l(), 2);
        assert_eq!(ctx(4, 2, 1).l(), 2);
        assert_eq!(ctx(3, 2, 1).l(), 1);
        assert_eq!(ctx(2, 2, 1).l(), 1);
        assert_eq!(ctx(6, 2, 1).l(), 3);
        assert!(GeometryContext::new(1, Field::new(2, 1).unwrap()).is_err());
    }
}
