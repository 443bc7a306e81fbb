//! Quadratic forms and quadrics of PG(N,q).
//!
//! A form is stored by its upper-triangular coefficient vector, never by
//! a symmetric matrix with halved entries, so characteristic 2 needs no
//! special representation. Every quadric is a cone: an s-dimensional
//! vertex of singular points over a non-singular base in a complementary
//! space, with s = -1 meaning no vertex at all. Classification works by
//! computing the vertex exactly and matching the enumerated point count
//! against the closed-form cone sizes; rank-one and rank-two forms are
//! recognized first as repeated hyperplanes, hyperplane pairs, or
//! conjugate (irreducible) hyperplane pairs.

use crate::error::{Error, Result};
use crate::gf::{Fe, Field};
use crate::linalg::{self, MatrixGF};
use crate::projective::{
    self, pg_size, GeometryContext, Hyperplane, ProjectivePoint, Subspace,
};
use serde::{Deserialize, Serialize};

/// The three families of non-singular quadrics.
#[derive(Copy, Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    Hyperbolic,
    Elliptic,
    Parabolic,
}

impl Family {
    pub fn as_str(&self) -> &'static str {
        match self {
            Family::Hyperbolic => "hyperbolic",
            Family::Elliptic => "elliptic",
            Family::Parabolic => "parabolic",
        }
    }
}

impl std::str::FromStr for Family {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Family, String> {
        match s {
            "hyperbolic" => Ok(Family::Hyperbolic),
            "elliptic" => Ok(Family::Elliptic),
            "parabolic" => Ok(Family::Parabolic),
            other => Err(format!("unknown family {other:?}")),
        }
    }
}

impl std::fmt::Display for Family {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Number of upper-triangular coefficients of a quadratic form in
/// N+1 variables: (N+1)(N+2)/2.
pub fn coeff_count(n_dim: usize) -> usize {
    (n_dim + 1) * (n_dim + 2) / 2
}

/// Index of the coefficient of X_i X_j (i <= j) in the canonical
/// lexicographic order (0,0), (0,1), ..., (0,N), (1,1), ..., (N,N).
pub fn coeff_index(n_dim: usize, i: usize, j: usize) -> usize {
    debug_assert!(i <= j && j <= n_dim);
    i * (n_dim + 1) - i * (i + 1) / 2 + j
}

/// The monomials X_i X_j in canonical order.
pub fn monomials(n_dim: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::with_capacity(coeff_count(n_dim));
    for i in 0..=n_dim {
        for j in i..=n_dim {
            out.push((i, j));
        }
    }
    out
}

/// A homogeneous quadratic form in N+1 variables over GF(q).
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct QuadraticForm {
    pub n_dim: usize,
    pub coeffs: Vec<Fe>,
}

impl QuadraticForm {
    pub fn zero(n_dim: usize) -> QuadraticForm {
        QuadraticForm {
            n_dim,
            coeffs: vec![Fe::ZERO; coeff_count(n_dim)],
        }
    }

    pub fn from_coeffs(n_dim: usize, coeffs: Vec<Fe>) -> QuadraticForm {
        assert_eq!(coeffs.len(), coeff_count(n_dim));
        QuadraticForm { n_dim, coeffs }
    }

    #[inline]
    pub fn at(&self, i: usize, j: usize) -> Fe {
        self.coeffs[coeff_index(self.n_dim, i, j)]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Fe) {
        let idx = coeff_index(self.n_dim, i, j);
        self.coeffs[idx] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn add(&self, other: &QuadraticForm, f: &Field) -> QuadraticForm {
        debug_assert_eq!(self.n_dim, other.n_dim);
        QuadraticForm {
            n_dim: self.n_dim,
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(&a, &b)| f.add(a, b))
                .collect(),
        }
    }

    pub fn scale(&self, lambda: Fe, f: &Field) -> QuadraticForm {
        QuadraticForm {
            n_dim: self.n_dim,
            coeffs: self.coeffs.iter().map(|&a| f.mul(lambda, a)).collect(),
        }
    }

    /// True when other = lambda * self for some non-zero lambda.
    pub fn is_proportional_to(&self, other: &QuadraticForm, f: &Field) -> bool {
        if self.is_zero() || other.is_zero() {
            return self.is_zero() && other.is_zero();
        }
        let lead = self.coeffs.iter().position(|c| !c.is_zero()).unwrap();
        if other.coeffs[lead].is_zero() {
            return false;
        }
        let lambda = f.div(other.coeffs[lead], self.coeffs[lead]).unwrap();
        self.coeffs
            .iter()
            .zip(&other.coeffs)
            .all(|(&a, &b)| f.mul(lambda, a) == b)
    }

    /// Scale so the first non-zero coefficient is 1.
    pub fn normalized(&self, f: &Field) -> QuadraticForm {
        match self.coeffs.iter().find(|c| !c.is_zero()) {
            None => self.clone(),
            Some(&lead) => self.scale(f.inv(lead).unwrap(), f),
        }
    }

    /// The product of two linear forms.
    pub fn product_of_linear(alpha: &[Fe], beta: &[Fe], f: &Field) -> QuadraticForm {
        let n = alpha.len() - 1;
        debug_assert_eq!(beta.len(), n + 1);
        let mut form = QuadraticForm::zero(n);
        for i in 0..=n {
            form.set(i, i, f.mul(alpha[i], beta[i]));
            for j in i + 1..=n {
                let v = f.add(f.mul(alpha[i], beta[j]), f.mul(alpha[j], beta[i]));
                form.set(i, j, v);
            }
        }
        form
    }

    /// The square of a linear form.
    pub fn square_of_linear(alpha: &[Fe], f: &Field) -> QuadraticForm {
        QuadraticForm::product_of_linear(alpha, alpha, f)
    }

    /// a*alpha^2 + b*alpha*beta + c*beta^2 for linear forms alpha, beta.
    pub fn binary_combination(
        a: Fe,
        b: Fe,
        c: Fe,
        alpha: &[Fe],
        beta: &[Fe],
        f: &Field,
    ) -> QuadraticForm {
        let sq_a = QuadraticForm::square_of_linear(alpha, f).scale(a, f);
        let cross = QuadraticForm::product_of_linear(alpha, beta, f).scale(b, f);
        let sq_b = QuadraticForm::square_of_linear(beta, f).scale(c, f);
        sq_a.add(&cross, f).add(&sq_b, f)
    }

    /// Serialize as the text line `q N a00 a01 ... aNN`.
    pub fn to_line(&self, f: &Field) -> String {
        let mut s = format!("{} {}", f.q(), self.n_dim);
        for c in &self.coeffs {
            s.push(' ');
            s.push_str(&c.0.to_string());
        }
        s
    }

    /// Parse a `q N a00 a01 ... aNN` line, reconstructing the field from q.
    pub fn from_line(line: &str) -> Result<(Field, QuadraticForm)> {
        let mut parts = line.split_whitespace();
        let bad = || Error::MalformedFormLine(line.to_string());
        let q: u64 = parts.next().ok_or_else(bad)?.parse().map_err(|_| bad())?;
        let n: usize = parts.next().ok_or_else(bad)?.parse().map_err(|_| bad())?;
        let field = field_from_order(q)?;
        let mut coeffs = Vec::with_capacity(coeff_count(n));
        for part in parts {
            let v: u64 = part.parse().map_err(|_| bad())?;
            if v >= q {
                return Err(bad());
            }
            coeffs.push(field.elem(v));
        }
        if coeffs.len() != coeff_count(n) {
            return Err(bad());
        }
        Ok((field, QuadraticForm::from_coeffs(n, coeffs)))
    }
}

/// Build GF(q) from the field order by factoring q = p^h.
pub fn field_from_order(q: u64) -> Result<Field> {
    if q < 2 {
        return Err(Error::NonPrime(q));
    }
    let mut p = 0u64;
    for d in 2..=q {
        if q.is_multiple_of(d) {
            p = d;
            break;
        }
    }
    let mut h = 0u32;
    let mut rest = q;
    while rest > 1 {
        if !rest.is_multiple_of(p) {
            return Err(Error::NonPrime(q));
        }
        rest /= p;
        h += 1;
    }
    Field::new(p, h)
}

/// Evaluate the form at a coordinate vector.
#[inline]
pub fn evaluate_coords(form: &QuadraticForm, coords: &[Fe], f: &Field) -> Fe {
    let n = form.n_dim;
    debug_assert_eq!(coords.len(), n + 1);
    let mut acc = Fe::ZERO;
    let mut idx = 0;
    for i in 0..=n {
        if coords[i].is_zero() {
            idx += n + 1 - i;
            continue;
        }
        for j in i..=n {
            let a = form.coeffs[idx + j - i];
            if !a.is_zero() && !coords[j].is_zero() {
                acc = f.add(acc, f.mul(a, f.mul(coords[i], coords[j])));
            }
        }
        idx += n + 1 - i;
    }
    acc
}

/// Evaluate the form at a projective point. Because points carry
/// normalized coordinates the value is a well-defined representative.
pub fn evaluate(form: &QuadraticForm, p: &ProjectivePoint, f: &Field) -> Fe {
    evaluate_coords(form, &p.coords, f)
}

/// The polar bilinear form B(x,y) = f(x+y) - f(x) - f(y) as a matrix:
/// B_ij = a_ij for i != j and B_ii = 2 a_ii, which vanishes in
/// characteristic 2 (the matrix is then alternating).
pub fn polar_matrix(form: &QuadraticForm, f: &Field) -> MatrixGF {
    let n = form.n_dim;
    let mut m = MatrixGF::zero(n + 1, n + 1);
    for i in 0..=n {
        let two_aii = f.add(form.at(i, i), form.at(i, i));
        m.set(i, i, two_aii);
        for j in i + 1..=n {
            m.set(i, j, form.at(i, j));
            m.set(j, i, form.at(i, j));
        }
    }
    m
}

/// Bilinear polar value B(u,v) without building the matrix,
/// valid in every characteristic.
pub fn polar_value(form: &QuadraticForm, u: &[Fe], v: &[Fe], f: &Field) -> Fe {
    let sum: Vec<Fe> = u.iter().zip(v).map(|(&a, &b)| f.add(a, b)).collect();
    let fu = evaluate_coords(form, u, f);
    let fv = evaluate_coords(form, v, f);
    let fs = evaluate_coords(form, &sum, f);
    f.sub(f.sub(fs, fu), fv)
}

/// Number of projective points on the quadric, without materializing them.
pub fn point_count(form: &QuadraticForm, ctx: &GeometryContext) -> u64 {
    let f = ctx.field();
    let q = f.q() as u64;
    let len = ctx.n() + 1;
    let total = q.pow(len as u32);
    let mut digits = vec![Fe::ZERO; len];
    let mut count = 0u64;
    for v in 1..total {
        let mut rem = v;
        for slot in digits.iter_mut().rev() {
            *slot = Fe((rem % q) as u8);
            rem /= q;
        }
        if digits.iter().find(|c| !c.is_zero()) != Some(&Fe::ONE) {
            continue;
        }
        if evaluate_coords(form, &digits, f).is_zero() {
            count += 1;
        }
    }
    count
}

/// All points of the quadric, in canonical point order.
pub fn point_set(form: &QuadraticForm, ctx: &GeometryContext) -> Vec<ProjectivePoint> {
    projective::enumerate_points(ctx)
        .into_iter()
        .filter(|p| evaluate(form, p, ctx.field()).is_zero())
        .collect()
}

/// The subspace of singular points: x with B(x,.) = 0 and f(x) = 0.
pub fn vertex(form: &QuadraticForm, ctx: &GeometryContext) -> Subspace {
    let f = ctx.field();
    let radical = Subspace {
        basis: linalg::kernel_basis(&polar_matrix(form, f), f),
    };
    if radical.basis.is_empty() {
        return Subspace::empty();
    }
    let vectors: Vec<Vec<Fe>> = radical
        .points(f)
        .into_iter()
        .filter(|p| evaluate(form, p, f).is_zero())
        .map(|p| p.coords)
        .collect();
    Subspace::from_vectors(&vectors, f)
}

/// Geometric tail sum q^lo + q^(lo+1) + ... + q^hi; empty (0) if hi < lo.
/// The single summation helper behind every closed-form size in the crate.
pub fn geom_sum(q: u64, lo: i64, hi: i64) -> u64 {
    if hi < lo {
        return 0;
    }
    debug_assert!(lo >= 0);
    (lo..=hi).map(|e| q.pow(e as u32)).sum()
}

/// Closed-form size of a quadric of PG(N,q) with an s-dimensional vertex
/// and a non-singular base of the given family. s = -1 gives the sizes of
/// the non-singular quadrics themselves.
pub fn cone_size(s: i64, base: Family, ctx: &GeometryContext) -> Result<u64> {
    let n = ctx.n() as i64;
    let q = ctx.q() as u64;
    if s < -1 || s >= n {
        return Err(Error::InconsistentCone { s, n: ctx.n() });
    }
    match base {
        Family::Hyperbolic | Family::Elliptic => {
            // base dimension N-s-1 = 2d+1
            if (n - s) % 2 != 0 {
                return Err(Error::InconsistentCone { s, n: ctx.n() });
            }
            let d = (n - s - 2) / 2;
            if d < 0 {
                return Err(Error::InconsistentCone { s, n: ctx.n() });
            }
            let head = geom_sum(q, n - d, n - 1);
            let tail = geom_sum(q, 0, n - d - 2);
            Ok(match base {
                Family::Hyperbolic => head + 2 * q.pow((n - d - 1) as u32) + tail,
                Family::Elliptic => head + tail,
                Family::Parabolic => unreachable!(),
            })
        }
        Family::Parabolic => {
            // base dimension N-s-1 = 2d
            if (n - s) % 2 != 1 {
                return Err(Error::InconsistentCone { s, n: ctx.n() });
            }
            Ok(geom_sum(q, 0, n - 1))
        }
    }
}

/// Kinds of quadrics in the vertex/base taxonomy.
#[derive(Copy, Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BaseKind {
    Parabolic,
    Hyperbolic,
    Elliptic,
    TwoDistinctHyperplanes,
    RepeatedHyperplane,
    ConjugateHyperplanePair,
    /// Reserved for geometries outside the supported range; never
    /// produced for N >= 2.
    EmptyOrDegenerate,
}

/// The class of a quadric: vertex dimension, base kind, and the
/// enumerated point count.
#[derive(Copy, Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct QuadricClass {
    pub vertex_dim: i64,
    pub base_kind: BaseKind,
    pub point_count: u64,
}

impl QuadricClass {
    pub fn is_non_singular(&self) -> bool {
        self.vertex_dim == -1
    }
}

/// Decide whether the non-degenerate binary form induced on a 2-dim
/// complement of the vertex has a projective root, i.e. whether the
/// rank-2 form splits into two distinct hyperplanes.
fn binary_part_splits(form: &QuadraticForm, vert: &Subspace, ctx: &GeometryContext) -> bool {
    let f = ctx.field();
    let n = ctx.n();
    // complete the echelon vertex basis with standard vectors at its
    // non-pivot columns
    let pivot_cols: Vec<usize> = vert
        .basis
        .iter()
        .map(|row| row.iter().position(|c| !c.is_zero()).unwrap())
        .collect();
    let mut complement: Vec<Vec<Fe>> = Vec::with_capacity(2);
    for col in 0..=n {
        if pivot_cols.contains(&col) {
            continue;
        }
        let mut e = vec![Fe::ZERO; n + 1];
        e[col] = Fe::ONE;
        complement.push(e);
        if complement.len() == 2 {
            break;
        }
    }
    debug_assert_eq!(complement.len(), 2);
    let (u, v) = (&complement[0], &complement[1]);
    let a = evaluate_coords(form, u, f);
    let c = evaluate_coords(form, v, f);
    let b = polar_value(form, u, v, f);
    // projective roots of a s^2 + b st + c t^2: (1,t) for all t, and (0,1)
    if c.is_zero() {
        return true;
    }
    for t in f.elements() {
        let val = f.add(f.add(a, f.mul(b, t)), f.mul(c, f.mul(t, t)));
        if val.is_zero() {
            return true;
        }
    }
    false
}

/// Classify a non-zero form into the vertex/base taxonomy.
///
/// The vertex dimension comes from [`vertex`]; the base kind is decided
/// by matching the enumerated point count against the closed-form cone
/// sizes, with rank <= 2 forms recognized first by splitting their
/// induced binary part. The returned point count is the actual
/// enumerated count.
///
/// ```
/// use quadric_codes::gf::{Fe, Field};
/// use quadric_codes::projective::GeometryContext;
/// use quadric_codes::quadric::{classify, BaseKind, QuadraticForm};
///
/// let ctx = GeometryContext::new(5, Field::new(2, 1).unwrap()).unwrap();
/// // X0*X1 vanishes on the union of two hyperplanes of PG(5,2)
/// let mut form = QuadraticForm::zero(5);
/// form.set(0, 1, Fe::ONE);
/// let class = classify(&form, &ctx).unwrap();
/// assert_eq!(class.base_kind, BaseKind::TwoDistinctHyperplanes);
/// assert_eq!(class.point_count, 47);
/// ```
pub fn classify(form: &QuadraticForm, ctx: &GeometryContext) -> Result<QuadricClass> {
    if form.is_zero() {
        return Err(Error::ZeroForm);
    }
    let n = ctx.n() as i64;
    let q = ctx.q() as u64;
    let vert = vertex(form, ctx);
    let s = vert.proj_dim();
    let rho = n - s; // essential variables of the form
    let count = point_count(form, ctx);

    let class = |kind: BaseKind| QuadricClass {
        vertex_dim: s,
        base_kind: kind,
        point_count: count,
    };

    match rho {
        1 => {
            if count == pg_size(q, n - 1) {
                Ok(class(BaseKind::RepeatedHyperplane))
            } else {
                Err(Error::UnclassifiableForm)
            }
        }
        2 => {
            if binary_part_splits(form, &vert, ctx) {
                let expected = 2 * q.pow((n - 1) as u32) + pg_size(q, n - 2);
                if count == expected {
                    Ok(class(BaseKind::TwoDistinctHyperplanes))
                } else {
                    Err(Error::UnclassifiableForm)
                }
            } else if count == pg_size(q, n - 2) {
                Ok(class(BaseKind::ConjugateHyperplanePair))
            } else {
                Err(Error::UnclassifiableForm)
            }
        }
        _ => {
            let base_dim = rho - 1;
            if base_dim % 2 == 0 {
                if count == cone_size(s, Family::Parabolic, ctx)? {
                    Ok(class(BaseKind::Parabolic))
                } else {
                    Err(Error::UnclassifiableForm)
                }
            } else if count == cone_size(s, Family::Hyperbolic, ctx)? {
                Ok(class(BaseKind::Hyperbolic))
            } else if count == cone_size(s, Family::Elliptic, ctx)? {
                Ok(class(BaseKind::Elliptic))
            } else {
                Err(Error::UnclassifiableForm)
            }
        }
    }
}

/// The standard equations of the non-singular quadrics.
///
/// * parabolic, N = 2M: X0^2 + X1 X2 + ... + X_{2M-1} X_{2M}
/// * hyperbolic, N = 2M+1: X0 X1 + X2 X3 + ... + X_{2M} X_{2M+1}
/// * elliptic, N = 2M+1: g(X0,X1) + X2 X3 + ... + X_{2M} X_{2M+1},
///   where g = X0^2 + b X0 X1 + c X1^2 is the irreducible binary form
///   with the smallest (b,c) encoding (q=2 gives X0^2+X0X1+X1^2,
///   q=3 gives X0^2+X1^2).
pub fn standard_form(kind: Family, ctx: &GeometryContext) -> Result<QuadraticForm> {
    let n = ctx.n();
    let f = ctx.field();
    let mut form = QuadraticForm::zero(n);
    match kind {
        Family::Parabolic => {
            if !n.is_multiple_of(2) {
                return Err(Error::ParityMismatch {
                    family: "parabolic",
                    parity: "even",
                    n,
                });
            }
            form.set(0, 0, Fe::ONE);
            let mut i = 1;
            while i < n {
                form.set(i, i + 1, Fe::ONE);
                i += 2;
            }
        }
        Family::Hyperbolic => {
            if n % 2 != 1 {
                return Err(Error::ParityMismatch {
                    family: "hyperbolic",
                    parity: "odd",
                    n,
                });
            }
            let mut i = 0;
            while i < n {
                form.set(i, i + 1, Fe::ONE);
                i += 2;
            }
        }
        Family::Elliptic => {
            if n % 2 != 1 {
                return Err(Error::ParityMismatch {
                    family: "elliptic",
                    parity: "odd",
                    n,
                });
            }
            let (b, c) = smallest_irreducible_binary(f);
            form.set(0, 0, Fe::ONE);
            form.set(0, 1, b);
            form.set(1, 1, c);
            let mut i = 2;
            while i < n {
                form.set(i, i + 1, Fe::ONE);
                i += 2;
            }
        }
    }
    Ok(form)
}

/// The smallest (b,c) in encoding order with X^2 + b XY + c Y^2
/// irreducible over GF(q).
fn smallest_irreducible_binary(f: &Field) -> (Fe, Fe) {
    for b in f.elements() {
        'next: for c in f.elements() {
            if c.is_zero() {
                continue; // (0,1) is a root
            }
            for t in f.elements() {
                let val = f.add(f.add(Fe::ONE, f.mul(b, t)), f.mul(c, f.mul(t, t)));
                if val.is_zero() {
                    continue 'next;
                }
            }
            return (b, c);
        }
    }
    unreachable!("irreducible binary quadratics exist over every finite field")
}

/// The tangent hyperplane at a point of the quadric, with coefficient
/// vector B.P.
pub fn tangent_hyperplane(
    form: &QuadraticForm,
    p: &ProjectivePoint,
    ctx: &GeometryContext,
) -> Result<Hyperplane> {
    let f = ctx.field();
    if !evaluate(form, p, f).is_zero() {
        return Err(Error::PointOffQuadric);
    }
    let b = polar_matrix(form, f);
    let w = b.mul_vec(&p.coords, f);
    if w.iter().all(|c| c.is_zero()) {
        return Err(Error::DegeneratePolarPoint);
    }
    Ok(Hyperplane {
        coeffs: projective::normalize_vector(&w, f)?,
    })
}

/// The nucleus of a non-singular parabolic quadric for even q: the
/// unique point spanning the radical of the alternating polar form,
/// which lies off the quadric.
pub fn nucleus(form: &QuadraticForm, ctx: &GeometryContext) -> Result<ProjectivePoint> {
    let f = ctx.field();
    if f.p() != 2 || !ctx.n().is_multiple_of(2) {
        return Err(Error::NoNucleus);
    }
    let radical = linalg::kernel_basis(&polar_matrix(form, f), f);
    if radical.len() != 1 {
        return Err(Error::SingularBase);
    }
    let p = projective::normalize(&radical[0], f)?;
    if evaluate(form, &p, f).is_zero() {
        return Err(Error::SingularBase);
    }
    Ok(p)
}

/// Restrict a form to a subspace: the induced form in the basis
/// coordinates, valid in every characteristic.
pub fn restrict_to_subspace(form: &QuadraticForm, s: &Subspace, f: &Field) -> QuadraticForm {
    let k = s.basis.len();
    assert!(k >= 1);
    let mut out = QuadraticForm::zero(k - 1);
    for a in 0..k {
        out.set(a, a, evaluate_coords(form, &s.basis[a], f));
        for b in a + 1..k {
            out.set(a, b, polar_value(form, &s.basis[a], &s.basis[b], f));
        }
    }
    out
}

/// How a hyperplane (or lower-dimensional) section of a non-singular
/// quadric can look.
#[derive(Copy, Clone, PartialEq, Eq, Debug)]
pub enum SectionKind {
    /// Singular section: the hyperplane is tangent.
    Tangent,
    Hyperbolic,
    Elliptic,
    Parabolic,
}

/// Classify the section of a quadric by a hyperplane.
pub fn hyperplane_section_kind(
    form: &QuadraticForm,
    h: &Hyperplane,
    ctx: &GeometryContext,
) -> Result<SectionKind> {
    let f = ctx.field();
    let basis = linalg::kernel_basis(&MatrixGF::from_rows(std::slice::from_ref(&h.coeffs)), f);
    let sub = Subspace { basis };
    let restricted = restrict_to_subspace(form, &sub, f);
    let sub_ctx = GeometryContext::new(ctx.n() - 1, f.clone())?;
    let class = classify(&restricted, &sub_ctx)?;
    Ok(if class.vertex_dim >= 0 {
        SectionKind::Tangent
    } else {
        match class.base_kind {
            BaseKind::Hyperbolic => SectionKind::Hyperbolic,
            BaseKind::Elliptic => SectionKind::Elliptic,
            BaseKind::Parabolic => SectionKind::Parabolic,
            other => {
                return Err(Error::UnexpectedPairStructure(format!(
                    "non-singular hyperplane section classified as {other:?}"
                )))
            }
        }
    })
}

/// Section census of the q+1 hyperplanes through a codimension-2
/// subspace: how many are tangent, and how many cut each non-singular
/// kind. The counts always sum to q+1.
#[derive(Copy, Clone, PartialEq, Eq, Debug, Serialize)]
pub struct SectionProfile {
    pub tangent: usize,
    pub hyperbolic: usize,
    pub elliptic: usize,
    pub parabolic: usize,
}

impl SectionProfile {
    pub fn total(&self) -> usize {
        self.tangent + self.hyperbolic + self.elliptic + self.parabolic
    }
}

/// Classify each hyperplane through a codimension-2 subspace by its
/// section of the quadric.
pub fn section_profile(
    form: &QuadraticForm,
    s: &Subspace,
    ctx: &GeometryContext,
) -> Result<SectionProfile> {
    let expected = ctx.n() as i64 - 2;
    if s.proj_dim() != expected {
        return Err(Error::WrongSubspaceDimension {
            got: s.proj_dim(),
            expected,
        });
    }
    let mut profile = SectionProfile {
        tangent: 0,
        hyperbolic: 0,
        elliptic: 0,
        parabolic: 0,
    };
    for h in projective::hyperplanes_through(s, ctx) {
        match hyperplane_section_kind(form, &h, ctx)? {
            SectionKind::Tangent => profile.tangent += 1,
            SectionKind::Hyperbolic => profile.hyperbolic += 1,
            SectionKind::Elliptic => profile.elliptic += 1,
            SectionKind::Parabolic => profile.parabolic += 1,
        }
    }
    debug_assert_eq!(profile.total(), ctx.q() as usize + 1);
    Ok(profile)
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
    fn coeff_indexing_is_lexicographic() {
        let n = 3;
        let mons = monomials(n);
        assert_eq!(mons.len(), coeff_count(n));
        for (idx, &(i, j)) in mons.iter().enumerate() {
            assert_eq!(coeff_index(n, i, j), idx);
        }
    }

    #[test]
    fn standard_form_sizes() {
        // |Q+(5,2)| = 35, |Q-(5,2)| = 27, |Q(4,3)| = 40
        let c52 = ctx(5, 2, 1);
        let h = standard_form(Family::Hyperbolic, &c52).unwrap();
        assert_eq!(point_count(&h, &c52), 35);
        let e = standard_form(Family::Elliptic, &c52).unwrap();
        assert_eq!(point_count(&e, &c52), 27);
        let c43 = ctx(4, 3, 1);
        let p = standard_form(Family::Parabolic, &c43).unwrap();
        assert_eq!(point_count(&p, &c43), 40);
    }

    #[test]
    fn standard_form_parity_errors() {
        assert!(standard_form(Family::Parabolic, &ctx(5, 2, 1)).is_err());
        assert!(standard_form(Family::Hyperbolic, &ctx(4, 2, 1)).is_err());
        assert!(standard_form(Family::Elliptic, &ctx(4, 2, 1)).is_err());
    }

    #[test]
    fn elliptic_binary_part_choice() {
        // q=2: X0^2+X0X1+X1^2; q=3: X0^2+X1^2
        let f2 = ctx(3, 2, 1);
        let e2 = standard_form(Family::Elliptic, &f2).unwrap();
        assert_eq!(e2.at(0, 0), Fe::ONE);
        assert_eq!(e2.at(0, 1), Fe::ONE);
        assert_eq!(e2.at(1, 1), Fe::ONE);
        let f3 = ctx(3, 3, 1);
        let e3 = standard_form(Family::Elliptic, &f3).unwrap();
        assert_eq!(e3.at(0, 0), Fe::ONE);
        assert_eq!(e3.at(0, 1), Fe::ZERO);
        assert_eq!(e3.at(1, 1), Fe::ONE);
    }

    #[test]
    fn evaluate_examples() {
        let c = ctx(5, 2, 1);
        let f = c.field();
        let mut x0x1 = QuadraticForm::zero(5);
        x0x1.set(0, 1, Fe::ONE);
        let p = projective::normalize(&fe(&[1, 0, 0, 0, 0, 0]), f).unwrap();
        assert_eq!(evaluate(&x0x1, &p, f), Fe::ZERO);

        let mut x0sq = QuadraticForm::zero(5);
        x0sq.set(0, 0, Fe::ONE);
        assert_eq!(evaluate(&x0sq, &p, f), Fe::ONE);

        let hyp = standard_form(Family::Hyperbolic, &c).unwrap();
        let p = projective::normalize(&fe(&[1, 1, 0, 0, 0, 0]), f).unwrap();
        assert_eq!(evaluate(&hyp, &p, f), Fe::ONE);
    }

    #[test]
    fn point_set_of_degenerate_forms() {
        let c = ctx(5, 2, 1);
        let zero = QuadraticForm::zero(5);
        assert_eq!(point_set(&zero, &c).len(), 63);
        let mut x0sq = QuadraticForm::zero(5);
        x0sq.set(0, 0, Fe::ONE);
        assert_eq!(point_set(&x0sq, &c).len(), 31); // the hyperplane X0 = 0
    }

    #[test]
    fn polar_matrix_examples() {
        let f2 = Field::new(2, 1).unwrap();
        let mut x0x1 = QuadraticForm::zero(5);
        x0x1.set(0, 1, Fe::ONE);
        let b = polar_matrix(&x0x1, &f2);
        assert_eq!(b.at(0, 1), Fe::ONE);
        assert_eq!(b.at(1, 0), Fe::ONE);
        assert!(b.data.iter().filter(|c| !c.is_zero()).count() == 2);

        let mut x0sq = QuadraticForm::zero(5);
        x0sq.set(0, 0, Fe::ONE);
        let b = polar_matrix(&x0sq, &f2);
        assert!(b.data.iter().all(|c| c.is_zero())); // characteristic 2

        let f3 = Field::new(3, 1).unwrap();
        let mut x0sq3 = QuadraticForm::zero(2);
        x0sq3.set(0, 0, Fe::ONE);
        let b = polar_matrix(&x0sq3, &f3);
        assert_eq!(b.at(0, 0), Fe(2));
    }

    #[test]
    fn vertex_examples() {
        let c = ctx(5, 2, 1);
        let hyp = standard_form(Family::Hyperbolic, &c).unwrap();
        assert_eq!(vertex(&hyp, &c).proj_dim(), -1);

        // hyperbolic form in X2..X5 only: the vertex is the line <e0,e1>
        let mut cone = QuadraticForm::zero(5);
        cone.set(2, 3, Fe::ONE);
        cone.set(4, 5, Fe::ONE);
        let v = vertex(&cone, &c);
        assert_eq!(v.proj_dim(), 1);
        assert_eq!(v.basis, vec![fe(&[1, 0, 0, 0, 0, 0]), fe(&[0, 1, 0, 0, 0, 0])]);

        // X0^2 over odd q: both conditions force X0 = 0, so the vertex is
        // the hyperplane
        let c3 = ctx(4, 3, 1);
        let mut x0sq = QuadraticForm::zero(4);
        x0sq.set(0, 0, Fe::ONE);
        assert_eq!(vertex(&x0sq, &c3).proj_dim(), 3);
    }

    #[test]
    fn classify_examples() {
        let c = ctx(5, 2, 1);
        let hyp = standard_form(Family::Hyperbolic, &c).unwrap();
        let class = classify(&hyp, &c).unwrap();
        assert_eq!(class.vertex_dim, -1);
        assert_eq!(class.base_kind, BaseKind::Hyperbolic);
        assert_eq!(class.point_count, 35);

        let mut x0x1 = QuadraticForm::zero(5);
        x0x1.set(0, 1, Fe::ONE);
        let class = classify(&x0x1, &c).unwrap();
        assert_eq!(class.base_kind, BaseKind::TwoDistinctHyperplanes);
        assert_eq!(class.point_count, 47);

        // X0^2+X0X1+X1^2 over GF(2): zero set is the solid X0 = X1 = 0
        let mut conj = QuadraticForm::zero(5);
        conj.set(0, 0, Fe::ONE);
        conj.set(0, 1, Fe::ONE);
        conj.set(1, 1, Fe::ONE);
        let class = classify(&conj, &c).unwrap();
        assert_eq!(class.base_kind, BaseKind::ConjugateHyperplanePair);
        assert_eq!(class.point_count, 15);

        // line-vertex cone over Q+(3,2)
        let mut cone = QuadraticForm::zero(5);
        cone.set(2, 3, Fe::ONE);
        cone.set(4, 5, Fe::ONE);
        let class = classify(&cone, &c).unwrap();
        assert_eq!(class.vertex_dim, 1);
        assert_eq!(class.base_kind, BaseKind::Hyperbolic);
        assert_eq!(class.point_count, 39);

        assert_eq!(
            classify(&QuadraticForm::zero(5), &c).unwrap_err(),
            Error::ZeroForm
        );
    }

    #[test]
    fn cone_size_examples() {
        let c2 = ctx(5, 2, 1);
        assert_eq!(cone_size(1, Family::Hyperbolic, &c2).unwrap(), 39);
        assert_eq!(cone_size(-1, Family::Elliptic, &c2).unwrap(), 27);
        // Q(2,q) base in PG(6,2) sits under a 3-dimensional vertex
        let c6 = ctx(6, 2, 1);
        assert_eq!(cone_size(3, Family::Parabolic, &c6).unwrap(), 63);
        // parity violations
        assert!(cone_size(0, Family::Hyperbolic, &c2).is_err());
        assert!(cone_size(1, Family::Parabolic, &c2).is_err());
        assert!(cone_size(2, Family::Parabolic, &c6).is_err());
    }

    #[test]
    fn cone_size_matches_vertex_plus_lines_identity() {
        // |pi_s Q_b| = |PG(s,q)| + q^(s+1) |Q_b|
        for c in [ctx(4, 2, 1), ctx(5, 2, 1), ctx(6, 2, 1), ctx(4, 3, 1), ctx(5, 3, 1)] {
            let n = c.n() as i64;
            let q = c.q() as u64;
            for s in -1..n {
                for base in [Family::Hyperbolic, Family::Elliptic, Family::Parabolic] {
                    let Ok(size) = cone_size(s, base, &c) else {
                        continue;
                    };
                    let base_dim = n - s - 1;
                    let base_size = match base {
                        Family::Hyperbolic => {
                            let d = (base_dim - 1) / 2;
                            (q.pow(d as u32) + 1) * pg_size(q, d)
                        }
                        Family::Elliptic => {
                            let d = (base_dim - 1) / 2;
                            (q.pow((d + 1) as u32) + 1) * pg_size(q, d - 1)
                        }
                        Family::Parabolic => pg_size(q, base_dim - 1),
                    };
                    assert_eq!(
                        size,
                        pg_size(q, s) + q.pow((s + 1) as u32) * base_size,
                        "s={s} base={base:?} N={n} q={q}"
                    );
                }
            }
        }
    }

    #[test]
    fn classification_agrees_with_cone_size_for_all_forms_gf2() {
        // oracle equivalence over every non-zero form of PG(N,2), N <= 3,
        // plus a deterministic sample for N = 4, 5
        for n in 2..=3usize {
            let c = ctx(n, 2, 1);
            let m = coeff_count(n);
            for bits in 1u64..(1 << m) {
                let coeffs: Vec<Fe> = (0..m).map(|i| Fe(((bits >> i) & 1) as u8)).collect();
                let form = QuadraticForm::from_coeffs(n, coeffs);
                let class = classify(&form, &c).unwrap();
                assert_eq!(class.point_count, expected_size(&class, &c));
            }
        }
        for n in [4usize, 5] {
            let c = ctx(n, 2, 1);
            let m = coeff_count(n);
            let mut state = 0x9e3779b97f4a7c15u64;
            for _ in 0..2000 {
                state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                let bits = state >> (64 - m);
                if bits == 0 {
                    continue;
                }
                let coeffs: Vec<Fe> = (0..m).map(|i| Fe(((bits >> i) & 1) as u8)).collect();
                let form = QuadraticForm::from_coeffs(n, coeffs);
                let class = classify(&form, &c).unwrap();
                assert_eq!(class.point_count, expected_size(&class, &c));
            }
        }
    }

    #[test]
    fn classification_agrees_with_cone_size_sampled_gf3() {
        let c = ctx(4, 3, 1);
        let m = coeff_count(4);
        let mut state = 0x2545f4914f6cdd1du64;
        let mut checked = 0;
        while checked < 3000 {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            let mut v = state;
            let coeffs: Vec<Fe> = (0..m)
                .map(|_| {
                    let d = (v % 3) as u8;
                    v /= 3;
                    Fe(d)
                })
                .collect();
            let form = QuadraticForm::from_coeffs(4, coeffs);
            if form.is_zero() {
                continue;
            }
            let class = classify(&form, &c).unwrap();
            assert_eq!(class.point_count, expected_size(&class, &c));
            checked += 1;
        }
    }

    fn expected_size(class: &QuadricClass, c: &GeometryContext) -> u64 {
        let n = c.n() as i64;
        let q = c.q() as u64;
        let s = class.vertex_dim;
        match class.base_kind {
            BaseKind::Hyperbolic => cone_size(s, Family::Hyperbolic, c).unwrap(),
            BaseKind::Elliptic => cone_size(s, Family::Elliptic, c).unwrap(),
            BaseKind::Parabolic => cone_size(s, Family::Parabolic, c).unwrap(),
            BaseKind::TwoDistinctHyperplanes => 2 * q.pow((n - 1) as u32) + pg_size(q, n - 2),
            BaseKind::RepeatedHyperplane => pg_size(q, n - 1),
            BaseKind::ConjugateHyperplanePair => pg_size(q, n - 2),
            BaseKind::EmptyOrDegenerate => unreachable!(),
        }
    }

    #[test]
    fn vertex_points_are_singular() {
        let c = ctx(5, 2, 1);
        let mut cone = QuadraticForm::zero(5);
        cone.set(2, 3, Fe::ONE);
        cone.set(4, 5, Fe::ONE);
        let v = vertex(&cone, &c);
        let b = polar_matrix(&cone, c.field());
        for p in v.points(c.field()) {
            assert!(evaluate(&cone, &p, c.field()).is_zero());
            assert!(b.mul_vec(&p.coords, c.field()).iter().all(|x| x.is_zero()));
        }
    }

    #[test]
    fn tangent_hyperplane_examples() {
        let c = ctx(5, 2, 1);
        let f = c.field();
        let hyp = standard_form(Family::Hyperbolic, &c).unwrap();
        let p = projective::normalize(&fe(&[1, 0, 0, 0, 0, 0]), f).unwrap();
        let t = tangent_hyperplane(&hyp, &p, &c).unwrap();
        assert_eq!(t.coeffs, fe(&[0, 1, 0, 0, 0, 0])); // X1 = 0

        // the tangent section is a point-cone with 2|Q+(3,2)|+1 = 19 points
        let on_section = point_set(&hyp, &c)
            .into_iter()
            .filter(|pt| t.contains(pt, f))
            .count();
        assert_eq!(on_section, 19);

        let off = projective::normalize(&fe(&[1, 1, 0, 0, 0, 0]), f).unwrap();
        assert_eq!(
            tangent_hyperplane(&hyp, &off, &c).unwrap_err(),
            Error::PointOffQuadric
        );
    }

    #[test]
    fn nucleus_examples() {
        let c4 = ctx(4, 2, 1);
        let par = standard_form(Family::Parabolic, &c4).unwrap();
        let n = nucleus(&par, &c4).unwrap();
        assert_eq!(n.coords, fe(&[1, 0, 0, 0, 0]));

        let c2 = ctx(2, 2, 1);
        let conic = standard_form(Family::Parabolic, &c2).unwrap();
        let n = nucleus(&conic, &c2).unwrap();
        assert_eq!(n.coords, fe(&[1, 0, 0]));

        let c43 = ctx(4, 3, 1);
        let par3 = standard_form(Family::Parabolic, &c43).unwrap();
        assert_eq!(nucleus(&par3, &c43).unwrap_err(), Error::NoNucleus);
    }

    #[test]
    fn tangent_hyperplanes_pass_through_the_nucleus() {
        // even q: a hyperplane section of Q(2M,q) is singular exactly
        // when the hyperplane contains the nucleus, and a nuclear
        // codimension-2 space lies in q+1 tangent hyperplanes
        for c in [ctx(4, 2, 1), ctx(4, 2, 2)] {
            let par = standard_form(Family::Parabolic, &c).unwrap();
            let nuc = nucleus(&par, &c).unwrap();
            for h in projective::enumerate_hyperplanes(&c) {
                let tangent =
                    hyperplane_section_kind(&par, &h, &c).unwrap() == SectionKind::Tangent;
                assert_eq!(tangent, h.contains(&nuc, c.field()));
            }
        }

        // nuclear conic section of Q(4,2): all q+1 hyperplanes tangent
        let c = ctx(4, 2, 1);
        let par = standard_form(Family::Parabolic, &c).unwrap();
        let nuc = nucleus(&par, &c).unwrap();
        let hs = projective::enumerate_hyperplanes(&c);
        let mut checked = false;
        'outer: for i in 0..hs.len() {
            for j in i + 1..hs.len() {
                let s = projective::intersect(&hs[i], &hs[j], &c).unwrap();
                if !s.contains_vector(&nuc.coords, c.field()) {
                    continue;
                }
                let restricted = restrict_to_subspace(&par, &s, c.field());
                let sub_ctx = GeometryContext::new(2, c.field().clone()).unwrap();
                let Ok(class) = classify(&restricted, &sub_ctx) else { continue };
                if class.vertex_dim != -1 {
                    continue;
                }
                let profile = section_profile(&par, &s, &c).unwrap();
                assert_eq!(profile.tangent, c.q() as usize + 1);
                checked = true;
                break 'outer;
            }
        }
        assert!(checked);
    }

    #[test]
    fn nucleus_is_unique_radical_point_off_quadric() {
        for c in [ctx(2, 2, 1), ctx(4, 2, 1), ctx(6, 2, 1), ctx(2, 2, 2)] {
            let par = standard_form(Family::Parabolic, &c).unwrap();
            let radical = linalg::kernel_basis(&polar_matrix(&par, c.field()), c.field());
            assert_eq!(radical.len(), 1);
            let n = nucleus(&par, &c).unwrap();
            assert!(!evaluate(&par, &n, c.field()).is_zero());
        }
    }

    #[test]
    fn section_profiles_match_the_case_analysis() {
        // Q+(5,2), codim-2 space X0 = X1 = 0 cuts Q+(3,2):
        // two tangent hyperplanes and q-1 parabolic sections
        let c = ctx(5, 2, 1);
        let hyp = standard_form(Family::Hyperbolic, &c).unwrap();
        let s = Subspace::from_vectors(
            &[
                fe(&[0, 0, 1, 0, 0, 0]),
                fe(&[0, 0, 0, 1, 0, 0]),
                fe(&[0, 0, 0, 0, 1, 0]),
                fe(&[0, 0, 0, 0, 0, 1]),
            ],
            c.field(),
        );
        let profile = section_profile(&hyp, &s, &c).unwrap();
        assert_eq!(
            (profile.tangent, profile.parabolic, profile.hyperbolic, profile.elliptic),
            (2, 1, 0, 0)
        );

        // Q-(5,2), same space cuts Q+(3,2): q+1 parabolic sections
        let ell = standard_form(Family::Elliptic, &c).unwrap();
        let profile = section_profile(&ell, &s, &c).unwrap();
        assert_eq!(
            (profile.tangent, profile.parabolic, profile.hyperbolic, profile.elliptic),
            (0, 3, 0, 0)
        );
    }

    #[test]
    fn non_nuclear_conic_section_profile_of_q42() {
        // find a codim-2 space of PG(4,2) meeting Q(4,2) in a non-singular
        // conic and avoiding the nucleus: one tangent, q/2 hyperbolic and
        // q/2 elliptic hyperplanes through it
        let c = ctx(4, 2, 1);
        let par = standard_form(Family::Parabolic, &c).unwrap();
        let nuc = nucleus(&par, &c).unwrap();
        let hs = projective::enumerate_hyperplanes(&c);
        let mut found = false;
        'outer: for i in 0..hs.len() {
            for j in i + 1..hs.len() {
                let s = projective::intersect(&hs[i], &hs[j], &c).unwrap();
                if s.contains_vector(&nuc.coords, c.field()) {
                    continue;
                }
                let restricted = restrict_to_subspace(&par, &s, c.field());
                let sub_ctx = GeometryContext::new(2, c.field().clone()).unwrap();
                let Ok(class) = classify(&restricted, &sub_ctx) else {
                    continue;
                };
                if class.vertex_dim != -1 {
                    continue;
                }
                let profile = section_profile(&par, &s, &c).unwrap();
                assert_eq!(
                    (profile.tangent, profile.hyperbolic, profile.elliptic, profile.parabolic),
                    (1, 1, 1, 0)
                );
                found = true;
                break 'outer;
            }
        }
        assert!(found);
    }

    #[test]
    fn section_profile_partition_identity() {
        // summing |section| - |S cap Q| over the q+1 hyperplanes through S
        // recovers |Q| - |S cap Q|
        let c = ctx(5, 2, 1);
        let f = c.field();
        let hyp = standard_form(Family::Hyperbolic, &c).unwrap();
        let points = point_set(&hyp, &c);
        let hs = projective::enumerate_hyperplanes(&c);
        for (i, j) in [(0usize, 1usize), (3, 17), (10, 40)] {
            let s = projective::intersect(&hs[i], &hs[j], &c).unwrap();
            let in_s = points
                .iter()
                .filter(|p| s.contains_vector(&p.coords, f))
                .count() as u64;
            let mut total = 0u64;
            for h in projective::hyperplanes_through(&s, &c) {
                let sec = points.iter().filter(|p| h.contains(p, f)).count() as u64;
                total += sec - in_s;
            }
            assert_eq!(total, point_count(&hyp, &c) - in_s);
        }
    }

    #[test]
    fn form_line_round_trip() {
        let c = ctx(4, 3, 1);
        let par = standard_form(Family::Parabolic, &c).unwrap();
        let line = par.to_line(c.field());
        assert_eq!(line, "3 4 1 0 0 0 0 0 1 0 0 0 0 0 0 1 0");
        let (field, form) = QuadraticForm::from_line(&line).unwrap();
        assert_eq!(field.q(), 3);
        assert_eq!(form, par);
        assert!(QuadraticForm::from_line("3 4 1 0").is_err());
        assert!(QuadraticForm::from_line("nonsense").is_err());
    }
}
