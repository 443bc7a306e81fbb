//! The evaluation code of a non-singular quadric: every homogeneous
//! quadratic form, evaluated at the (normalized) points of the quadric,
//! contributes one codeword.
//!
//! The generator matrix has one row per monomial X_i X_j and one column
//! per quadric point, in canonical orders on both axes. The reported
//! dimension is always the measured rank of that matrix, never the
//! claimed binomial formula; deviations are surfaced by the callers.
//!
//! Weight spectra are computed by exhaustively enumerating coefficient
//! vectors over a row-space basis (dimension k), not over all q^m forms,
//! and walking the codeword incrementally. The index space shards into
//! contiguous ranges whose histograms merge by addition, so results are
//! identical for any thread count.

use crate::error::{Error, Result};
use crate::gf::Fe;
use crate::linalg::{self, MatrixGF};
use crate::projective::{GeometryContext, ProjectivePoint};
use crate::quadric::{self, QuadraticForm};
use serde::Serialize;
use std::collections::BTreeMap;

/// Enumeration guard: spectra larger than this require force=true.
pub const BUDGET_LIMIT: u128 = 1 << 32;

/// The evaluation code of a non-singular quadric.
#[derive(Clone, Debug)]
pub struct FunctionalCode {
    ctx: GeometryContext,
    base: QuadraticForm,
    columns: Vec<ProjectivePoint>,
    monomials: Vec<(usize, usize)>,
    generator: MatrixGF,
    dimension: usize,
    /// Reduced row echelon basis of the row space, dimension x n.
    basis: MatrixGF,
    /// Pivot columns of the basis; codeword values there are exactly the
    /// coefficients over the basis rows.
    pivots: Vec<usize>,
}

impl FunctionalCode {
    pub fn ctx(&self) -> &GeometryContext {
        &self.ctx
    }

    pub fn base_form(&self) -> &QuadraticForm {
        &self.base
    }

    pub fn columns(&self) -> &[ProjectivePoint] {
        &self.columns
    }

    pub fn monomials(&self) -> &[(usize, usize)] {
        &self.monomials
    }

    pub fn generator(&self) -> &MatrixGF {
        &self.generator
    }

    /// Code length n = |Q|.
    pub fn length(&self) -> usize {
        self.columns.len()
    }

    /// Measured dimension: the rank of the generator matrix.
    pub fn dimension(&self) -> usize {
        self.dimension
    }

    pub fn basis(&self) -> &MatrixGF {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Evaluate a form at every column.
    pub fn codeword_of(&self, form: &QuadraticForm) -> Vec<Fe> {
        let f = self.ctx.field();
        self.columns
            .iter()
            .map(|p| quadric::evaluate(form, p, f))
            .collect()
    }

    /// Index of a codeword in the coefficient enumeration order: the
    /// mixed-radix number formed by its values at the pivot columns.
    pub fn class_index(&self, codeword: &[Fe]) -> u64 {
        let q = self.ctx.q() as u64;
        let mut idx = 0u64;
        let mut scale = 1u64;
        for &col in &self.pivots {
            idx += codeword[col].0 as u64 * scale;
            scale *= q;
        }
        idx
    }

    /// The codeword with the given class index.
    pub fn codeword_of_index(&self, index: u64) -> Vec<Fe> {
        let f = self.ctx.field();
        let q = self.ctx.q() as u64;
        let mut cw = vec![Fe::ZERO; self.length()];
        let mut rem = index;
        for r in 0..self.dimension {
            let digit = Fe((rem % q) as u8);
            rem /= q;
            if digit.is_zero() {
                continue;
            }
            for (slot, &b) in cw.iter_mut().zip(self.basis.row(r)) {
                *slot = f.add(*slot, f.mul(digit, b));
            }
        }
        cw
    }

    /// Recover some quadratic form evaluating to the given codeword,
    /// by solving against the monomial generator.
    pub fn form_from_codeword(&self, codeword: &[Fe]) -> Option<QuadraticForm> {
        let f = self.ctx.field();
        let x = linalg::solve(&self.generator.transpose(), codeword, f)?;
        Some(QuadraticForm::from_coeffs(self.ctx.n(), x))
    }

    /// Basis of the kernel of the evaluation map: the forms vanishing
    /// identically on the quadric.
    pub fn evaluation_kernel(&self) -> Vec<QuadraticForm> {
        let f = self.ctx.field();
        linalg::kernel_basis(&self.generator.transpose(), f)
            .into_iter()
            .map(|coeffs| QuadraticForm::from_coeffs(self.ctx.n(), coeffs))
            .collect()
    }
}

/// Construct the evaluation code of a non-singular quadric.
pub fn build_code(form: &QuadraticForm, ctx: &GeometryContext) -> Result<FunctionalCode> {
    let class = quadric::classify(form, ctx)?;
    if !class.is_non_singular() {
        return Err(Error::SingularBase);
    }
    let f = ctx.field();
    let columns = quadric::point_set(form, ctx);
    let monomials = quadric::monomials(ctx.n());
    let n = columns.len();
    let mut generator = MatrixGF::zero(monomials.len(), n);
    for (r, &(i, j)) in monomials.iter().enumerate() {
        for (c, p) in columns.iter().enumerate() {
            generator.set(r, c, f.mul(p.coords[i], p.coords[j]));
        }
    }
    let mut basis = generator.clone();
    let (rank, pivots) = linalg::rref(&mut basis, f);
    basis.data.truncate(rank * n);
    basis.rows = rank;
    Ok(FunctionalCode {
        ctx: ctx.clone(),
        base: form.clone(),
        columns,
        monomials,
        generator,
        dimension: rank,
        basis,
        pivots,
    })
}

/// Number of columns where the form does not vanish; equals
/// |Q| - |Q and Zero(form)|.
pub fn codeword_weight(code: &FunctionalCode, form: &QuadraticForm) -> usize {
    code.codeword_of(form)
        .iter()
        .filter(|v| !v.is_zero())
        .count()
}

/// Sparse weight histogram of all non-zero codewords.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightSpectrum {
    counts: BTreeMap<usize, u64>,
    /// Total codewords enumerated, including the zero codeword.
    pub scanned: u128,
    pub truncation_bound: Option<usize>,
}

impl WeightSpectrum {
    pub fn count_at(&self, weight: usize) -> u64 {
        self.counts.get(&weight).copied().unwrap_or(0)
    }

    /// weight -> count pairs, smallest weight first.
    pub fn entries(&self) -> impl Iterator<Item = (usize, u64)> + '_ {
        self.counts.iter().map(|(&w, &c)| (w, c))
    }

    pub fn min_weight(&self) -> Option<usize> {
        self.counts.keys().next().copied()
    }

    pub fn total_nonzero(&self) -> u128 {
        self.counts.values().map(|&c| c as u128).sum()
    }
}

/// Exhaustive weight spectrum over all q^k codewords, optionally
/// truncating the *report* at `max_weight` (counting is always exact).
/// Refuses more than 2^32 codewords unless `force` is set.
pub fn weight_spectrum(
    code: &FunctionalCode,
    max_weight: Option<usize>,
    threads: usize,
    force: bool,
) -> Result<WeightSpectrum> {
    let q = code.ctx.q() as u128;
    let k = code.dimension as u32;
    let total = q.pow(k);
    if total > BUDGET_LIMIT && !force {
        return Err(Error::BudgetExceeded(total));
    }
    let hist = scan_weights(code, threads);
    let mut counts = BTreeMap::new();
    for (w, &c) in hist.iter().enumerate() {
        if w == 0 || c == 0 {
            continue;
        }
        if max_weight.is_none_or(|b| w <= b) {
            counts.insert(w, c);
        }
    }
    Ok(WeightSpectrum {
        counts,
        scanned: total,
        truncation_bound: max_weight,
    })
}

/// The smallest weight with a non-zero count.
pub fn min_distance(code: &FunctionalCode, threads: usize, force: bool) -> Result<usize> {
    let spectrum = weight_spectrum(code, None, threads, force)?;
    spectrum.min_weight().ok_or(Error::UnclassifiableForm)
}

/// Full histogram over weights 0..=n, zero codeword removed.
fn scan_weights(code: &FunctionalCode, threads: usize) -> Vec<u64> {
    let n = code.length();
    let q = code.ctx.q() as u64;
    let k = code.dimension;
    let total = (q as u128).pow(k as u32) as u64;
    let threads = threads.max(1).min(total.max(1) as usize);

    let shard = |start: u64, end: u64| -> Vec<u64> {
        if q == 2 && n <= 64 {
            scan_shard_gf2(code, start, end)
        } else {
            scan_shard_generic(code, start, end)
        }
    };

    let mut hist = vec![0u64; n + 1];
    if threads == 1 {
        hist = shard(0, total);
    } else {
        let chunk = total / threads as u64;
        let ranges: Vec<(u64, u64)> = (0..threads as u64)
            .map(|t| {
                let start = t * chunk;
                let end = if t + 1 == threads as u64 { total } else { start + chunk };
                (start, end)
            })
            .collect();
        let partials: Vec<Vec<u64>> = std::thread::scope(|scope| {
            let handles: Vec<_> = ranges
                .iter()
                .map(|&(s, e)| scope.spawn(move || shard(s, e)))
                .collect();
            handles.into_iter().map(|h| h.join().unwrap()).collect()
        });
        for partial in partials {
            for (slot, v) in hist.iter_mut().zip(partial) {
                *slot += v;
            }
        }
    }
    // the all-zero coefficient vector is the unique zero codeword
    debug_assert!(hist[0] >= 1);
    hist[0] -= 1;
    debug_assert_eq!(hist[0], 0, "basis rows must be independent");
    hist
}

/// Bitmask walk for q = 2, n <= 64: Gray-code enumeration with one XOR
/// and one popcount per codeword.
fn scan_shard_gf2(code: &FunctionalCode, start: u64, end: u64) -> Vec<u64> {
    let n = code.length();
    let k = code.dimension;
    let masks: Vec<u64> = (0..k)
        .map(|r| {
            code.basis
                .row(r)
                .iter()
                .enumerate()
                .fold(0u64, |m, (c, v)| m | ((v.0 as u64) << c))
        })
        .collect();
    let mut hist = vec![0u64; n + 1];
    if start >= end {
        return hist;
    }
    // state for index i is the Gray code i ^ (i >> 1)
    let gray = start ^ (start >> 1);
    let mut current = 0u64;
    for (r, mask) in masks.iter().enumerate() {
        if (gray >> r) & 1 == 1 {
            current ^= mask;
        }
    }
    hist[current.count_ones() as usize] += 1;
    for idx in start + 1..end {
        let flip = idx.trailing_zeros() as usize;
        current ^= masks[flip];
        hist[current.count_ones() as usize] += 1;
    }
    hist
}

/// Odometer walk for general q: consecutive coefficient vectors differ
/// in an amortized O(1) number of digits, and each digit change updates
/// the running codeword in O(n).
fn scan_shard_generic(code: &FunctionalCode, start: u64, end: u64) -> Vec<u64> {
    let f = code.ctx.field();
    let n = code.length();
    let q = code.ctx.q() as u64;
    let k = code.dimension;
    let rows: Vec<&[Fe]> = (0..k).map(|r| code.basis.row(r)).collect();
    let mut hist = vec![0u64; n + 1];
    if start >= end {
        return hist;
    }
    let mut digits = vec![Fe::ZERO; k];
    let mut rem = start;
    for d in digits.iter_mut() {
        *d = Fe((rem % q) as u8);
        rem /= q;
    }
    let mut current = vec![Fe::ZERO; n];
    for (d, row) in digits.iter().zip(&rows) {
        if d.is_zero() {
            continue;
        }
        for (slot, &b) in current.iter_mut().zip(*row) {
            *slot = f.add(*slot, f.mul(*d, b));
        }
    }
    let top = Fe((q - 1) as u8);
    for idx in start..end {
        let weight = current.iter().filter(|v| !v.is_zero()).count();
        hist[weight] += 1;
        if idx + 1 == end {
            break;
        }
        // increment the base-q odometer, updating the codeword per digit
        let mut pos = 0;
        loop {
            let old = digits[pos];
            let new = if old == top { Fe::ZERO } else { Fe(old.0 + 1) };
            digits[pos] = new;
            let delta = f.sub(new, old);
            for (slot, &b) in current.iter_mut().zip(rows[pos]) {
                *slot = f.add(*slot, f.mul(delta, b));
            }
            if new != Fe::ZERO {
                break;
            }
            pos += 1;
        }
    }
    hist
}

/// Spectrum report in the wire format used by the CLI.
#[derive(Clone, Debug, Serialize)]
pub struct SpectrumReport {
    pub q: u16,
    #[serde(rename = "N")]
    pub n_dim: usize,
    pub family: String,
    pub n: usize,
    pub dimension: usize,
    pub spectrum: Vec<SpectrumEntry>,
    pub truncated_at: Option<usize>,
}

#[derive(Clone, Debug, Serialize)]
pub struct SpectrumEntry {
    pub weight: usize,
    pub count: u64,
}

pub fn spectrum_report(
    code: &FunctionalCode,
    family: &str,
    spectrum: &WeightSpectrum,
) -> SpectrumReport {
    SpectrumReport {
        q: code.ctx().q(),
        n_dim: code.ctx().n(),
        family: family.to_string(),
        n: code.length(),
        dimension: code.dimension(),
        spectrum: spectrum
            .entries()
            .map(|(weight, count)| SpectrumEntry { weight, count })
            .collect(),
        truncated_at: spectrum.truncation_bound,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::Field;
    use crate::quadric::{standard_form, Family};

    fn ctx(n: usize, p: u64, h: u32) -> GeometryContext {
        GeometryContext::new(n, Field::new(p, h).unwrap()).unwrap()
    }

    fn code_for(family: Family, n: usize, p: u64) -> FunctionalCode {
        let c = ctx(n, p, 1);
        let f = standard_form(family, &c).unwrap();
        build_code(&f, &c).unwrap()
    }

    #[test]
    fn code_parameters() {
        let c = code_for(Family::Hyperbolic, 5, 2);
        assert_eq!(c.length(), 35);
        assert_eq!(c.dimension(), 20);

        let c = code_for(Family::Parabolic, 4, 3);
        assert_eq!(c.length(), 40);
        assert_eq!(c.dimension(), 14);

        let c = code_for(Family::Elliptic, 5, 2);
        assert_eq!(c.length(), 27);
        assert_eq!(c.dimension(), 20);
    }

    #[test]
    fn rejects_singular_base() {
        let c = ctx(5, 2, 1);
        let mut cone = QuadraticForm::zero(5);
        cone.set(2, 3, Fe::ONE);
        cone.set(4, 5, Fe::ONE);
        assert_eq!(build_code(&cone, &c).unwrap_err(), Error::SingularBase);
    }

    #[test]
    fn codeword_weight_examples() {
        let c = ctx(5, 2, 1);
        let hyp = standard_form(Family::Hyperbolic, &c).unwrap();
        let code = build_code(&hyp, &c).unwrap();

        // the base form itself gives the zero codeword
        assert_eq!(codeword_weight(&code, &hyp), 0);
        assert_eq!(codeword_weight(&code, &QuadraticForm::zero(5)), 0);

        // product of the tangent hyperplanes X1 = 0 (at e0) and X0 = 0
        // (at e1): the pair meets Q+(5,2) in 29 points, weight 6
        let mut pair = QuadraticForm::zero(5);
        pair.set(0, 1, Fe::ONE);
        assert_eq!(codeword_weight(&code, &pair), 6);
    }

    #[test]
    fn evaluation_kernel_is_the_base_form() {
        for code in [
            code_for(Family::Hyperbolic, 5, 2),
            code_for(Family::Elliptic, 5, 2),
            code_for(Family::Parabolic, 4, 2),
            code_for(Family::Parabolic, 4, 3),
        ] {
            let kernel = code.evaluation_kernel();
            assert_eq!(kernel.len(), 1);
            assert!(kernel[0].is_proportional_to(code.base_form(), code.ctx().field()));
        }
    }

    // Independent oracle: enumerate every form over the monomial
    // coefficient space and evaluate directly at the quadric points.
    // Each codeword is hit by exactly q^(m-k) forms.
    fn naive_form_space_histogram(code: &FunctionalCode) -> Vec<u64> {
        let cx = code.ctx();
        let f = cx.field();
        let q = cx.q() as u64;
        let m = quadric::coeff_count(cx.n());
        let mut hist = vec![0u64; code.length() + 1];
        for enc in 0..q.pow(m as u32) {
            let mut rem = enc;
            let coeffs: Vec<Fe> = (0..m)
                .map(|_| {
                    let d = Fe((rem % q) as u8);
                    rem /= q;
                    d
                })
                .collect();
            let form = QuadraticForm::from_coeffs(cx.n(), coeffs);
            let w = code
                .columns()
                .iter()
                .filter(|p| !quadric::evaluate(&form, p, f).is_zero())
                .count();
            hist[w] += 1;
        }
        hist
    }

    #[test]
    fn spectrum_matches_naive_form_enumeration() {
        for (family, n, p) in [
            (Family::Hyperbolic, 3usize, 2u64),
            (Family::Elliptic, 3, 2),
            (Family::Parabolic, 2, 2),
            (Family::Parabolic, 2, 3),
        ] {
            let code = code_for(family, n, p);
            let q = code.ctx().q() as u64;
            let m = quadric::coeff_count(n) as u32;
            let k = code.dimension() as u32;
            let multiplicity = q.pow(m - k);
            let naive = naive_form_space_histogram(&code);
            let spectrum = weight_spectrum(&code, None, 1, false).unwrap();
            for (w, &count) in naive.iter().enumerate().skip(1) {
                assert_eq!(
                    count,
                    multiplicity * spectrum.count_at(w),
                    "family={family} n={n} q={q} weight={w}"
                );
            }
            // zero-weight forms are exactly the kernel
            assert_eq!(naive[0], q.pow(m - k));
        }
    }

    #[test]
    fn spectrum_counts_divisible_by_q_minus_1() {
        let code = code_for(Family::Parabolic, 2, 3);
        let spectrum = weight_spectrum(&code, None, 1, false).unwrap();
        for (_, count) in spectrum.entries() {
            assert_eq!(count % 2, 0);
        }
    }

    #[test]
    fn spectrum_total_is_q_pow_k_minus_1() {
        let code = code_for(Family::Hyperbolic, 3, 3);
        let spectrum = weight_spectrum(&code, None, 1, false).unwrap();
        let q = 3u128;
        assert_eq!(spectrum.total_nonzero(), q.pow(code.dimension() as u32) - 1);
    }

    #[test]
    fn sharded_equals_single_threaded() {
        for (family, n, p) in [(Family::Hyperbolic, 5usize, 2u64), (Family::Parabolic, 4, 3)] {
            let code = code_for(family, n, p);
            let one = weight_spectrum(&code, None, 1, false).unwrap();
            let eight = weight_spectrum(&code, None, 8, false).unwrap();
            assert_eq!(one, eight);
        }
    }

    #[test]
    fn truncation_only_suppresses_reporting() {
        let code = code_for(Family::Hyperbolic, 5, 2);
        let full = weight_spectrum(&code, None, 1, false).unwrap();
        let bounded = weight_spectrum(&code, Some(12), 1, false).unwrap();
        for (w, c) in bounded.entries() {
            assert!(w <= 12);
            assert_eq!(c, full.count_at(w));
        }
        assert_eq!(bounded.truncation_bound, Some(12));
    }

    #[test]
    fn class_index_round_trip() {
        let code = code_for(Family::Parabolic, 4, 3);
        for index in [0u64, 1, 5, 81, 4_782_968] {
            let cw = code.codeword_of_index(index);
            assert_eq!(code.class_index(&cw), index);
        }
        // pivot digits of a form's codeword recover a form with the
        // same codeword
        let f = code.ctx().field().clone();
        let mut form = QuadraticForm::zero(4);
        form.set(0, 3, Fe(2));
        form.set(1, 1, Fe::ONE);
        let cw = code.codeword_of(&form);
        let recovered = code.form_from_codeword(&cw).unwrap();
        assert_eq!(code.codeword_of(&recovered), cw);
        let _ = f;
    }

    #[test]
    fn min_distance_matches_the_smallest_pair_weight() {
        let code = code_for(Family::Hyperbolic, 5, 2);
        assert_eq!(min_distance(&code, 2, false).unwrap(), 6);
        let code = code_for(Family::Parabolic, 4, 3);
        assert_eq!(min_distance(&code, 2, false).unwrap(), 12);
        let code = code_for(Family::Parabolic, 4, 2);
        assert_eq!(min_distance(&code, 1, false).unwrap(), 2);
    }

    #[test]
    fn budget_guard_refuses_oversized_scans() {
        // Q+(5,4) has dimension 20 over GF(4): 4^20 = 2^40 codewords
        let c = ctx(5, 2, 2);
        let hyp = standard_form(Family::Hyperbolic, &c).unwrap();
        let code = build_code(&hyp, &c).unwrap();
        assert_eq!(code.dimension(), 20);
        assert_eq!(
            weight_spectrum(&code, None, 1, false).unwrap_err(),
            Error::BudgetExceeded(1 << 40)
        );
    }
}
