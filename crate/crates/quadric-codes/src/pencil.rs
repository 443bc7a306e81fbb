//! Pencils of quadrics and the two-hyperplane scans.
//!
//! Two projectively independent forms span a pencil of q+1 quadrics,
//! canonically enumerated as f1 + t*f2 for t in GF(q), followed by f2.
//! Every member vanishes on V = Zero(f1) cap Zero(f2), and the members
//! together cover |PG(N,q)| + q|V| points counted with multiplicity.
//!
//! The scans check, exhaustively where the budget allows and by
//! fixed-seed sampling otherwise, that every quadric meeting the base
//! quadric in more than a threshold number of points has a member
//! splitting into two distinct hyperplanes in its pencil with the base.
//! "Two hyperplanes" is interpreted strictly; repeated hyperplanes and
//! conjugate (irreducible) pairs are tallied separately so reports
//! expose the distinction instead of burying it.

use crate::code::FunctionalCode;
use crate::error::{Error, Result};
use crate::gf::{Fe, Field};
use crate::projective::{self, GeometryContext};
use crate::quadric::{self, geom_sum, BaseKind, Family, QuadraticForm};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

/// A pencil of quadrics spanned by two independent forms.
#[derive(Clone, Debug)]
pub struct Pencil {
    pub f1: QuadraticForm,
    pub f2: QuadraticForm,
    /// The q+1 members: f1 + t*f2 for t in encoding order, then f2.
    pub members: Vec<QuadraticForm>,
}

/// Span the pencil of two non-proportional non-zero forms.
pub fn make_pencil(f1: &QuadraticForm, f2: &QuadraticForm, f: &Field) -> Result<Pencil> {
    if f1.is_zero() || f2.is_zero() {
        return Err(Error::ZeroForm);
    }
    if f1.is_proportional_to(f2, f) {
        return Err(Error::ProportionalForms);
    }
    let mut members = Vec::with_capacity(f.q() as usize + 1);
    for t in f.elements() {
        members.push(f1.add(&f2.scale(t, f), f));
    }
    members.push(f2.clone());
    Ok(Pencil {
        f1: f1.clone(),
        f2: f2.clone(),
        members,
    })
}

/// |Zero(f1) cap Zero(f2)| by direct point scan.
pub fn intersection_size(f1: &QuadraticForm, f2: &QuadraticForm, ctx: &GeometryContext) -> u64 {
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
        if quadric::evaluate_coords(f1, &digits, f).is_zero()
            && quadric::evaluate_coords(f2, &digits, f).is_zero()
        {
            count += 1;
        }
    }
    count
}

/// The partition identity: the q+1 members contain |PG(N,q)| + q|V|
/// points altogether, since V lies in all members and every other point
/// in exactly one.
///
/// ```
/// use quadric_codes::gf::{Fe, Field};
/// use quadric_codes::pencil::{make_pencil, verify_counting_identity};
/// use quadric_codes::projective::GeometryContext;
/// use quadric_codes::quadric::{standard_form, Family, QuadraticForm};
///
/// let ctx = GeometryContext::new(5, Field::new(2, 1).unwrap()).unwrap();
/// let q_plus = standard_form(Family::Hyperbolic, &ctx).unwrap();
/// let mut pair = QuadraticForm::zero(5);
/// pair.set(0, 1, Fe::ONE);
/// let pencil = make_pencil(&q_plus, &pair, ctx.field()).unwrap();
/// assert!(verify_counting_identity(&pencil, &ctx));
/// ```
pub fn verify_counting_identity(p: &Pencil, ctx: &GeometryContext) -> bool {
    let member_total: u64 = p
        .members
        .iter()
        .map(|m| quadric::point_count(m, ctx))
        .sum();
    let v = intersection_size(&p.f1, &p.f2, ctx);
    member_total == ctx.space_size() + ctx.q() as u64 * v
}

/// Everything measurable about one pencil: the intersection size, the
/// class of each member, and the reducible members if any.
#[derive(Clone, Debug)]
pub struct PencilReport {
    pub v_size: u64,
    /// One class per member, in canonical member order.
    pub member_classes: Vec<quadric::QuadricClass>,
    /// Strictly two distinct hyperplanes; repeated and conjugate
    /// members are reported separately.
    pub has_two_hyperplanes: bool,
    pub witness: Option<QuadraticForm>,
    pub repeated_witness: Option<QuadraticForm>,
    pub conjugate_witness: Option<QuadraticForm>,
}

/// Classify every member of a pencil and measure |V|.
pub fn pencil_report(p: &Pencil, ctx: &GeometryContext) -> Result<PencilReport> {
    let member_classes: Vec<quadric::QuadricClass> = p
        .members
        .iter()
        .map(|m| quadric::classify(m, ctx))
        .collect::<Result<_>>()?;
    let reducible = reducible_members(p, ctx)?;
    Ok(PencilReport {
        v_size: intersection_size(&p.f1, &p.f2, ctx),
        member_classes,
        has_two_hyperplanes: reducible.two_distinct.is_some(),
        witness: reducible.two_distinct,
        repeated_witness: reducible.repeated,
        conjugate_witness: reducible.conjugate,
    })
}

/// The reducible members of a pencil, by kind. Each slot holds the first
/// member in canonical order of that kind, if any.
#[derive(Clone, Debug, Default)]
pub struct ReducibleMembers {
    pub two_distinct: Option<QuadraticForm>,
    pub repeated: Option<QuadraticForm>,
    pub conjugate: Option<QuadraticForm>,
}

pub fn reducible_members(p: &Pencil, ctx: &GeometryContext) -> Result<ReducibleMembers> {
    let mut out = ReducibleMembers::default();
    for m in &p.members {
        let class = quadric::classify(m, ctx)?;
        let slot = match class.base_kind {
            BaseKind::TwoDistinctHyperplanes => &mut out.two_distinct,
            BaseKind::RepeatedHyperplane => &mut out.repeated,
            BaseKind::ConjugateHyperplanePair => &mut out.conjugate,
            _ => continue,
        };
        if slot.is_none() {
            *slot = Some(m.clone());
        }
    }
    Ok(out)
}

/// The first member (canonical order) that is a union of two distinct
/// hyperplanes, under the strict interpretation.
pub fn two_hyperplane_member(p: &Pencil, ctx: &GeometryContext) -> Result<Option<QuadraticForm>> {
    Ok(reducible_members(p, ctx)?.two_distinct)
}

/// The intersection-size thresholds of the two-hyperplane statements.
#[derive(Copy, Clone, PartialEq, Eq, Debug)]
pub enum ThresholdKind {
    /// q^(N-2) + 3q^(N-3) + 3q^(N-4) + 2q^(N-5) + ... + 2q + 1, with the
    /// trailing 2q^j terms running over j = N-5 down to 1 (empty at N=5).
    GeneralN,
    /// q^3 + 5q^2 + 1 for the hyperbolic quadric of PG(5,q).
    Hyperbolic5Corollary,
    /// q^2 + 11q + 1 for the parabolic quadric of PG(4,q).
    Parabolic4,
}

impl ThresholdKind {
    pub fn as_str(&self) -> &'static str {
        match self {
            ThresholdKind::GeneralN => "general_N",
            ThresholdKind::Hyperbolic5Corollary => "hyperbolic5_corollary",
            ThresholdKind::Parabolic4 => "parabolic4",
        }
    }
}

impl std::fmt::Display for ThresholdKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Threshold value above which |V| forces a two-hyperplane member.
pub fn threshold(kind: ThresholdKind, ctx: &GeometryContext) -> Result<u64> {
    let q = ctx.q() as u64;
    let n = ctx.n() as i64;
    match kind {
        ThresholdKind::GeneralN => {
            if n < 5 {
                return Err(Error::UnsupportedThreshold);
            }
            Ok(q.pow((n - 2) as u32)
                + 3 * q.pow((n - 3) as u32)
                + 3 * q.pow((n - 4) as u32)
                + 2 * geom_sum(q, 1, n - 5)
                + 1)
        }
        ThresholdKind::Hyperbolic5Corollary => {
            if n != 5 {
                return Err(Error::UnsupportedThreshold);
            }
            Ok(q * q * q + 5 * q * q + 1)
        }
        ThresholdKind::Parabolic4 => {
            if n != 4 {
                return Err(Error::UnsupportedThreshold);
            }
            Ok(q * q + 11 * q + 1)
        }
    }
}

// class flags used by the scans
const FLAG_TWO_DISTINCT: u8 = 1;
const FLAG_REPEATED: u8 = 2;
const FLAG_CONJUGATE: u8 = 4;

/// How a scan walks the form space.
#[derive(Copy, Clone, Debug)]
pub enum ScanMode {
    /// Every form modulo the evaluation kernel, via codeword classes.
    Full,
    /// Fixed-seed uniform samples over raw coefficient vectors.
    Sampled { count: u64, seed: u64 },
}

/// Outcome of a theorem scan.
#[derive(Clone, Debug, Serialize)]
pub struct ScanReport {
    pub kind: String,
    pub threshold: u64,
    pub scanned: u64,
    /// Forms over the threshold whose pencil has no two-hyperplane
    /// member, serialized as form lines.
    pub violations: Vec<String>,
    /// Largest |V| over pencils with no reducible member of any kind:
    /// the empirical sharpness datum.
    #[serde(rename = "max_V_irreducible_pencils")]
    pub max_v_irreducible_pencils: Option<u64>,
    /// Codeword classes whose pencil contains each reducible kind
    /// (full scans only).
    pub two_distinct_classes: Option<u64>,
    pub repeated_classes: Option<u64>,
    pub conjugate_classes: Option<u64>,
    pub max_v_observed: u64,
    /// Form lines of pencils attaining the irreducible maximum
    /// (full scans only, capped).
    pub max_v_irreducible_witnesses: Vec<String>,
    /// Pencils through the base whose members are all non-singular
    /// elliptic quadrics (full scans with an elliptic base only); the
    /// counting identity forces their intersection size, so the count
    /// is exhaustive over the scan universe.
    pub all_elliptic_pencils: Option<u64>,
    /// The observed intersection size of those pencils.
    #[serde(rename = "all_elliptic_V")]
    pub all_elliptic_v: Option<u64>,
    pub notes: Vec<String>,
}

/// Visit every non-zero codeword class once, with its weight.
fn walk_class_weights(code: &FunctionalCode, mut visit: impl FnMut(u64, u64)) {
    let q = code.ctx().q() as u64;
    let k = code.dimension();
    let total = q.pow(k as u32);
    if q == 2 && code.length() <= 64 {
        let masks: Vec<u64> = (0..k)
            .map(|r| {
                code.basis()
                    .row(r)
                    .iter()
                    .enumerate()
                    .fold(0u64, |m, (c, v)| m | ((v.0 as u64) << c))
            })
            .collect();
        let mut current = 0u64;
        for idx in 1..total {
            current ^= masks[idx.trailing_zeros() as usize];
            visit(idx ^ (idx >> 1), current.count_ones() as u64);
        }
    } else {
        let f = code.ctx().field();
        let len = code.length();
        let rows: Vec<&[Fe]> = (0..k).map(|r| code.basis().row(r)).collect();
        let mut digits = vec![Fe::ZERO; k];
        let mut current = vec![Fe::ZERO; len];
        let top = Fe((q - 1) as u8);
        for idx in 1..total {
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
            let weight = current.iter().filter(|v| !v.is_zero()).count() as u64;
            visit(idx, weight);
        }
    }
}

/// One quadratic-form preimage per row-space basis row, so any codeword
/// class gets a representative form by combining them.
fn basis_preimages(code: &FunctionalCode) -> Result<Vec<QuadraticForm>> {
    (0..code.dimension())
        .map(|r| {
            code.form_from_codeword(code.basis().row(r))
                .ok_or(Error::UnexpectedKernel)
        })
        .collect()
}

fn form_for_class(
    code: &FunctionalCode,
    preimages: &[QuadraticForm],
    class_index: u64,
) -> QuadraticForm {
    let f = code.ctx().field();
    let q = code.ctx().q() as u64;
    let mut rem = class_index;
    let mut form = QuadraticForm::zero(code.ctx().n());
    for pre in preimages {
        let digit = Fe((rem % q) as u8);
        rem /= q;
        if !digit.is_zero() {
            form = form.add(&pre.scale(digit, f), f);
        }
    }
    form
}

/// Mark, for every codeword class, which reducible kinds occur in the
/// pencil spanned by the base form and any representative of the class.
/// Requires the evaluation kernel to be exactly the span of the base
/// form, which makes "pencil membership" well defined per class.
fn reducible_class_flags(code: &FunctionalCode) -> Result<Vec<u8>> {
    let ctx = code.ctx();
    let f = ctx.field();
    let kernel = code.evaluation_kernel();
    if kernel.len() != 1 || !kernel[0].is_proportional_to(code.base_form(), f) {
        return Err(Error::UnexpectedKernel);
    }
    let q = f.q() as u64;
    let k = code.dimension() as u32;
    let size = q.pow(k) as usize;
    let mut flags = vec![0u8; size];

    let hyperplanes = projective::enumerate_hyperplanes(ctx);
    let scalars: Vec<Fe> = f.elements().filter(|e| !e.is_zero()).collect();
    // monic irreducible binary quadratics X^2 + b XY + c Y^2
    let mut irreducible_bc = Vec::new();
    for b in f.elements() {
        'next: for c in f.elements() {
            if c.is_zero() {
                continue;
            }
            for t in f.elements() {
                if f.add(f.add(Fe::ONE, f.mul(b, t)), f.mul(c, f.mul(t, t))).is_zero() {
                    continue 'next;
                }
            }
            irreducible_bc.push((b, c));
        }
    }

    let mut mark = |form: &QuadraticForm, flag: u8| {
        for lambda in &scalars {
            let g = form.scale(*lambda, f);
            let idx = code.class_index(&code.codeword_of(&g)) as usize;
            flags[idx] |= flag;
        }
    };

    for (i, h1) in hyperplanes.iter().enumerate() {
        let square = QuadraticForm::square_of_linear(&h1.coeffs, f);
        mark(&square, FLAG_REPEATED);
        for h2 in hyperplanes.iter().skip(i + 1) {
            let product = QuadraticForm::product_of_linear(&h1.coeffs, &h2.coeffs, f);
            mark(&product, FLAG_TWO_DISTINCT);
            for &(b, c) in &irreducible_bc {
                let conj = QuadraticForm::binary_combination(
                    Fe::ONE,
                    b,
                    c,
                    &h1.coeffs,
                    &h2.coeffs,
                    f,
                );
                mark(&conj, FLAG_CONJUGATE);
            }
        }
    }
    Ok(flags)
}

/// Scan the form space around a base quadric for violations of a
/// two-hyperplane threshold statement.
///
/// Every scanned form Q' with |Q cap Q'| above the threshold must admit
/// a two-distinct-hyperplanes member in its pencil with Q; any
/// counterexample is serialized in full. The scan also records the
/// largest |V| among pencils with no reducible member at all.
pub fn scan_theorem(
    code: &FunctionalCode,
    kind: ThresholdKind,
    mode: ScanMode,
    threads: usize,
    force: bool,
) -> Result<ScanReport> {
    let ctx = code.ctx();
    let family = base_family(code)?;
    validate_kind(kind, family, ctx.n())?;
    let thr = threshold(kind, ctx)?;
    let flags = reducible_class_flags(code)?;
    let n = code.length() as u64;

    let notes = match kind {
        ThresholdKind::GeneralN => vec![
            "small-dimension exceptional cases of the general statement (base \
             quadrics carrying subspaces of dimension N-3) are outside the scan scope"
                .to_string(),
        ],
        _ => Vec::new(),
    };
    match mode {
        ScanMode::Full => {
            let q = ctx.q() as u128;
            let total = q.pow(code.dimension() as u32);
            if total > crate::code::BUDGET_LIMIT && !force {
                return Err(Error::BudgetExceeded(total));
            }
            scan_full(code, kind, thr, &flags, n, threads, family, notes)
        }
        ScanMode::Sampled { count, seed } => {
            scan_sampled(code, kind, thr, &flags, n, count, seed, threads, notes)
        }
    }
}

/// Cap on serialized witnesses of the irreducible maximum.
const WITNESS_CAP: usize = 4;

/// Exhaustive census of the all-elliptic pencils through an elliptic
/// base: the counting identity forces their intersection size to
/// ((q+1)|Q| - |PG|)/q, so checking exactly the irreducible classes at
/// that size is complete.
fn all_elliptic_census(
    code: &FunctionalCode,
    flags: &[u8],
    n: u64,
    threads: usize,
) -> Result<(u64, Option<u64>)> {
    let ctx = code.ctx();
    let q = ctx.q() as u64;
    let numerator = (q + 1) as i128 * n as i128 - ctx.space_size() as i128;
    if numerator < 0 || numerator % q as i128 != 0 {
        return Ok((0, None));
    }
    let v_star = (numerator / q as i128) as u64;
    let mut candidates = Vec::new();
    walk_class_weights(code, |cls, wt| {
        if flags[cls as usize] == 0 && n - wt == v_star {
            candidates.push(cls);
        }
    });
    let preimages = basis_preimages(code)?;
    let threads = threads.max(1).min(candidates.len().max(1));
    let chunk = candidates.len().div_ceil(threads);
    let counts: Vec<u64> = std::thread::scope(|scope| {
        let handles: Vec<_> = candidates
            .chunks(chunk.max(1))
            .map(|part| {
                let preimages = &preimages;
                scope.spawn(move || {
                    let mut found = 0u64;
                    for &cls in part {
                        let rep = form_for_class(code, preimages, cls);
                        let pencil = make_pencil(code.base_form(), &rep, ctx.field())
                            .expect("class representatives span pencils");
                        let all_elliptic = pencil.members.iter().all(|m| {
                            matches!(
                                quadric::classify(m, ctx),
                                Ok(c) if c.vertex_dim == -1 && c.base_kind == BaseKind::Elliptic
                            )
                        });
                        if all_elliptic {
                            found += 1;
                        }
                    }
                    found
                })
            })
            .collect();
        handles.into_iter().map(|h| h.join().unwrap()).collect()
    });
    let count: u64 = counts.iter().sum();
    Ok((count, if count > 0 { Some(v_star) } else { None }))
}

fn base_family(code: &FunctionalCode) -> Result<Family> {
    let class = quadric::classify(code.base_form(), code.ctx())?;
    match class.base_kind {
        BaseKind::Hyperbolic => Ok(Family::Hyperbolic),
        BaseKind::Elliptic => Ok(Family::Elliptic),
        BaseKind::Parabolic => Ok(Family::Parabolic),
        _ => Err(Error::SingularBase),
    }
}

fn validate_kind(kind: ThresholdKind, family: Family, n: usize) -> Result<()> {
    let ok = match kind {
        ThresholdKind::GeneralN => n >= 6 || (n == 5 && family == Family::Elliptic),
        ThresholdKind::Hyperbolic5Corollary => n == 5 && family == Family::Hyperbolic,
        ThresholdKind::Parabolic4 => n == 4 && family == Family::Parabolic,
    };
    if ok {
        Ok(())
    } else {
        Err(Error::UnsupportedThreshold)
    }
}

struct ShardOutcome {
    violations: Vec<u64>,
    max_v_irreducible: Option<u64>,
    max_v: u64,
}

#[allow(clippy::too_many_arguments)]
fn scan_full(
    code: &FunctionalCode,
    kind: ThresholdKind,
    thr: u64,
    flags: &[u8],
    n: u64,
    threads: usize,
    family: Family,
    notes: Vec<String>,
) -> Result<ScanReport> {
    let q = code.ctx().q() as u64;
    let total = q.pow(code.dimension() as u32);
    let threads = threads.max(1).min(total.max(1) as usize);

    let run = |start: u64, end: u64| -> ShardOutcome {
        if q == 2 && code.length() <= 64 {
            scan_classes_gf2(code, thr, flags, n, start, end)
        } else {
            scan_classes_generic(code, thr, flags, n, start, end)
        }
    };

    let outcomes: Vec<ShardOutcome> = if threads == 1 {
        vec![run(1, total)]
    } else {
        let chunk = (total - 1) / threads as u64;
        let ranges: Vec<(u64, u64)> = (0..threads as u64)
            .map(|t| {
                let start = 1 + t * chunk;
                let end = if t + 1 == threads as u64 { total } else { start + chunk };
                (start, end)
            })
            .collect();
        std::thread::scope(|scope| {
            let handles: Vec<_> = ranges
                .iter()
                .map(|&(s, e)| scope.spawn(move || run(s, e)))
                .collect();
            handles.into_iter().map(|h| h.join().unwrap()).collect()
        })
    };

    let mut violations = Vec::new();
    let mut max_v_irr = None;
    let mut max_v = 0;
    for o in outcomes {
        violations.extend(o.violations);
        max_v_irr = max_v_irr.max(o.max_v_irreducible);
        max_v = max_v.max(o.max_v);
    }
    // canonical order regardless of sharding
    violations.sort_unstable();
    let violation_lines = violations
        .iter()
        .map(|&idx| witness_line(code, idx))
        .collect::<Result<Vec<_>>>()?;

    let mut two = 0u64;
    let mut rep = 0u64;
    let mut conj = 0u64;
    for &fl in flags.iter().skip(1) {
        if fl & FLAG_TWO_DISTINCT != 0 {
            two += 1;
        }
        if fl & FLAG_REPEATED != 0 {
            rep += 1;
        }
        if fl & FLAG_CONJUGATE != 0 {
            conj += 1;
        }
    }

    // serialize a few pencils attaining the irreducible maximum
    let mut witnesses = Vec::new();
    if let Some(maxv) = max_v_irr {
        let mut indices = Vec::new();
        walk_class_weights(code, |cls, wt| {
            if indices.len() < WITNESS_CAP && flags[cls as usize] == 0 && n - wt == maxv {
                indices.push(cls);
            }
        });
        let preimages = basis_preimages(code)?;
        witnesses = indices
            .iter()
            .map(|&cls| form_for_class(code, &preimages, cls).to_line(code.ctx().field()))
            .collect();
    }

    // the opportunistic all-elliptic census only makes sense for an
    // elliptic base (the base itself is a member of every pencil)
    let (all_elliptic_pencils, all_elliptic_v) = if family == Family::Elliptic {
        let (count, v) = all_elliptic_census(code, flags, n, threads)?;
        (Some(count), v)
    } else {
        (None, None)
    };

    Ok(ScanReport {
        kind: kind.as_str().to_string(),
        threshold: thr,
        scanned: total - 1,
        violations: violation_lines,
        max_v_irreducible_pencils: max_v_irr,
        two_distinct_classes: Some(two),
        repeated_classes: Some(rep),
        conjugate_classes: Some(conj),
        max_v_observed: max_v,
        max_v_irreducible_witnesses: witnesses,
        all_elliptic_pencils,
        all_elliptic_v,
        notes,
    })
}

fn scan_classes_gf2(
    code: &FunctionalCode,
    thr: u64,
    flags: &[u8],
    n: u64,
    start: u64,
    end: u64,
) -> ShardOutcome {
    let k = code.dimension();
    let masks: Vec<u64> = (0..k)
        .map(|r| {
            code.basis()
                .row(r)
                .iter()
                .enumerate()
                .fold(0u64, |m, (c, v)| m | ((v.0 as u64) << c))
        })
        .collect();
    let mut out = ShardOutcome {
        violations: Vec::new(),
        max_v_irreducible: None,
        max_v: 0,
    };
    if start >= end {
        return out;
    }
    // plain counter order: the state is the index itself, rebuilt from
    // scratch at shard entry and walked by single-bit Gray flips of the
    // counter's Gray code
    let mut idx = start;
    let gray = |i: u64| i ^ (i >> 1);
    let mut current = 0u64;
    let g = gray(idx);
    for (r, m) in masks.iter().enumerate() {
        if (g >> r) & 1 == 1 {
            current ^= m;
        }
    }
    loop {
        // current corresponds to class gray(idx)
        let class = gray(idx);
        if class != 0 {
            let v = n - current.count_ones() as u64;
            out.max_v = out.max_v.max(v);
            let fl = flags[class as usize];
            if fl == 0 {
                out.max_v_irreducible = Some(out.max_v_irreducible.map_or(v, |m: u64| m.max(v)));
            }
            if v > thr && fl & FLAG_TWO_DISTINCT == 0 {
                out.violations.push(class);
            }
        }
        idx += 1;
        if idx >= end {
            break;
        }
        current ^= masks[idx.trailing_zeros() as usize];
    }
    out
}

fn scan_classes_generic(
    code: &FunctionalCode,
    thr: u64,
    flags: &[u8],
    n: u64,
    start: u64,
    end: u64,
) -> ShardOutcome {
    let f = code.ctx().field();
    let q = code.ctx().q() as u64;
    let k = code.dimension();
    let len = code.length();
    let rows: Vec<&[Fe]> = (0..k).map(|r| code.basis().row(r)).collect();
    let mut out = ShardOutcome {
        violations: Vec::new(),
        max_v_irreducible: None,
        max_v: 0,
    };
    if start >= end {
        return out;
    }
    let mut digits = vec![Fe::ZERO; k];
    let mut rem = start;
    for d in digits.iter_mut() {
        *d = Fe((rem % q) as u8);
        rem /= q;
    }
    let mut current = vec![Fe::ZERO; len];
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
        if idx != 0 {
            let weight = current.iter().filter(|v| !v.is_zero()).count() as u64;
            let v = n - weight;
            out.max_v = out.max_v.max(v);
            let fl = flags[idx as usize];
            if fl == 0 {
                out.max_v_irreducible = Some(out.max_v_irreducible.map_or(v, |m: u64| m.max(v)));
            }
            if v > thr && fl & FLAG_TWO_DISTINCT == 0 {
                out.violations.push(idx);
            }
        }
        if idx + 1 == end {
            break;
        }
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
    out
}

#[allow(clippy::too_many_arguments)]
fn scan_sampled(
    code: &FunctionalCode,
    kind: ThresholdKind,
    thr: u64,
    flags: &[u8],
    n: u64,
    count: u64,
    seed: u64,
    threads: usize,
    notes: Vec<String>,
) -> Result<ScanReport> {
    let threads = threads.max(1).min(count.max(1) as usize);
    let run = |start: u64, end: u64| -> ShardOutcome {
        let ctx = code.ctx();
        let f = ctx.field();
        let q = f.q() as u64;
        let m = quadric::coeff_count(ctx.n());
        let mut out = ShardOutcome {
            violations: Vec::new(),
            max_v_irreducible: None,
            max_v: 0,
        };
        for sample in start..end {
            // one independent deterministic stream per sample index, so
            // the draw is invariant under sharding
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            rng.set_stream(sample);
            let form = loop {
                let coeffs: Vec<Fe> = (0..m).map(|_| Fe(rng.random_range(0..q) as u8)).collect();
                let form = QuadraticForm::from_coeffs(ctx.n(), coeffs);
                if !form.is_zero() && !form.is_proportional_to(code.base_form(), f) {
                    break form;
                }
            };
            let cw = code.codeword_of(&form);
            let weight = cw.iter().filter(|v| !v.is_zero()).count() as u64;
            let v = n - weight;
            out.max_v = out.max_v.max(v);
            let idx = code.class_index(&cw);
            let fl = flags[idx as usize];
            if fl == 0 {
                out.max_v_irreducible = Some(out.max_v_irreducible.map_or(v, |x: u64| x.max(v)));
            }
            if v > thr && fl & FLAG_TWO_DISTINCT == 0 {
                out.violations.push(idx);
            }
        }
        out
    };

    let outcomes: Vec<ShardOutcome> = if threads == 1 {
        vec![run(0, count)]
    } else {
        let chunk = count / threads as u64;
        let ranges: Vec<(u64, u64)> = (0..threads as u64)
            .map(|t| {
                let start = t * chunk;
                let end = if t + 1 == threads as u64 { count } else { start + chunk };
                (start, end)
            })
            .collect();
        std::thread::scope(|scope| {
            let handles: Vec<_> = ranges
                .iter()
                .map(|&(s, e)| scope.spawn(move || run(s, e)))
                .collect();
            handles.into_iter().map(|h| h.join().unwrap()).collect()
        })
    };

    let mut violations = Vec::new();
    let mut max_v_irr = None;
    let mut max_v = 0;
    for o in outcomes {
        violations.extend(o.violations);
        max_v_irr = max_v_irr.max(o.max_v_irreducible);
        max_v = max_v.max(o.max_v);
    }
    violations.sort_unstable();
    let violation_lines = violations
        .iter()
        .map(|&idx| witness_line(code, idx))
        .collect::<Result<Vec<_>>>()?;

    Ok(ScanReport {
        kind: kind.as_str().to_string(),
        threshold: thr,
        scanned: count,
        violations: violation_lines,
        max_v_irreducible_pencils: max_v_irr,
        two_distinct_classes: None,
        repeated_classes: None,
        conjugate_classes: None,
        max_v_observed: max_v,
        max_v_irreducible_witnesses: Vec::new(),
        all_elliptic_pencils: None,
        all_elliptic_v: None,
        notes,
    })
}

/// Serialize a violating class as a form line.
fn witness_line(code: &FunctionalCode, class_index: u64) -> Result<String> {
    let cw = code.codeword_of_index(class_index);
    let form = code
        .form_from_codeword(&cw)
        .ok_or(Error::UnexpectedKernel)?;
    Ok(form.to_line(code.ctx().field()))
}

/// Exhaustively verify the counting identity over every pencil of
/// quadratic forms of PG(N,2), via value bitmasks. Returns the number
/// of ordered-by-index form pairs checked and the number of violations.
pub fn exhaustive_identity_check(
    ctx: &GeometryContext,
    threads: usize,
    force: bool,
) -> Result<(u128, u64)> {
    let f = ctx.field();
    if f.q() != 2 {
        return Err(Error::UnsupportedThreshold);
    }
    let m = quadric::coeff_count(ctx.n());
    if m > 15 && !force {
        return Err(Error::BudgetExceeded(1u128 << (2 * m)));
    }
    let points = projective::enumerate_points(ctx);
    let p_total = points.len() as u64;
    let mons = quadric::monomials(ctx.n());
    let mono_masks: Vec<u64> = mons
        .iter()
        .map(|&(i, j)| {
            points
                .iter()
                .enumerate()
                .fold(0u64, |mask, (t, p)| {
                    mask | ((f.mul(p.coords[i], p.coords[j]).0 as u64) << t)
                })
        })
        .collect();
    // value mask for every form, filled along a Gray walk
    let total_forms = 1u64 << m;
    let mut table = vec![0u64; total_forms as usize];
    let mut current = 0u64;
    for enc in 1..total_forms {
        let flip = enc.trailing_zeros() as usize;
        current ^= mono_masks[flip];
        table[(enc ^ (enc >> 1)) as usize] = current;
    }

    let space = ctx.space_size();
    let table = &table;
    let run = move |start: u64, end: u64| -> (u128, u64) {
        let mut checked = 0u128;
        let mut violations = 0u64;
        for i in start..end {
            let m1 = table[i as usize];
            let z1 = p_total - m1.count_ones() as u64;
            for &m2 in &table[(i + 1) as usize..total_forms as usize] {
                let z2 = p_total - m2.count_ones() as u64;
                let z3 = p_total - (m1 ^ m2).count_ones() as u64;
                let v = p_total - (m1 | m2).count_ones() as u64;
                checked += 1;
                if z1 + z2 + z3 != space + 2 * v {
                    violations += 1;
                }
            }
        }
        (checked, violations)
    };

    let threads = threads.max(1);
    let results: Vec<(u128, u64)> = if threads == 1 {
        vec![run(1, total_forms)]
    } else {
        let chunk = (total_forms - 1) / threads as u64;
        let ranges: Vec<(u64, u64)> = (0..threads as u64)
            .map(|t| {
                let start = 1 + t * chunk;
                let end = if t + 1 == threads as u64 { total_forms } else { start + chunk };
                (start, end)
            })
            .collect();
        std::thread::scope(|scope| {
            let handles: Vec<_> = ranges
                .iter()
                .map(|&(s, e)| scope.spawn(move || run(s, e)))
                .collect();
            handles.into_iter().map(|h| h.join().unwrap()).collect()
        })
    };
    let mut checked = 0u128;
    let mut violations = 0u64;
    for (c, v) in results {
        checked += c;
        violations += v;
    }
    Ok((checked, violations))
}

/// Verify the counting identity over fixed-seed random pencils.
/// Returns (pairs checked, violations).
pub fn random_identity_check(ctx: &GeometryContext, pairs: u64, seed: u64) -> (u64, u64) {
    let f = ctx.field();
    let q = f.q() as u64;
    let m = quadric::coeff_count(ctx.n());
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let draw = |rng: &mut ChaCha8Rng| loop {
        let coeffs: Vec<Fe> = (0..m).map(|_| Fe(rng.random_range(0..q) as u8)).collect();
        let form = QuadraticForm::from_coeffs(ctx.n(), coeffs);
        if !form.is_zero() {
            break form;
        }
    };
    let mut violations = 0u64;
    let mut checked = 0u64;
    while checked < pairs {
        let f1 = draw(&mut rng);
        let f2 = draw(&mut rng);
        if f1.is_proportional_to(&f2, f) {
            continue;
        }
        let pencil = make_pencil(&f1, &f2, f).expect("independent by construction");
        if !verify_counting_identity(&pencil, ctx) {
            violations += 1;
        }
        checked += 1;
    }
    (checked, violations)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::code::build_code;
    use crate::quadric::standard_form;

    fn ctx(n: usize, p: u64, h: u32) -> GeometryContext {
        GeometryContext::new(n, Field::new(p, h).unwrap()).unwrap()
    }

    #[test]
    fn pencil_membership() {
        let c = ctx(5, 2, 1);
        let f = c.field();
        let hyp = standard_form(Family::Hyperbolic, &c).unwrap();
        let mut pair = QuadraticForm::zero(5);
        pair.set(0, 1, Fe::ONE);
        let p = make_pencil(&hyp, &pair, f).unwrap();
        assert_eq!(p.members.len(), 3);
        assert_eq!(p.members[0], hyp);
        assert_eq!(p.members[2], pair);

        let c3 = ctx(5, 3, 1);
        let hyp3 = standard_form(Family::Hyperbolic, &c3).unwrap();
        let ell3 = standard_form(Family::Elliptic, &c3).unwrap();
        let p3 = make_pencil(&hyp3, &ell3, c3.field()).unwrap();
        assert_eq!(p3.members.len(), 4);

        let doubled = hyp3.scale(Fe(2), c3.field());
        assert_eq!(
            make_pencil(&hyp3, &doubled, c3.field()).unwrap_err(),
            Error::ProportionalForms
        );
    }

    #[test]
    fn members_vanish_on_v() {
        let c = ctx(5, 2, 1);
        let hyp = standard_form(Family::Hyperbolic, &c).unwrap();
        let ell = standard_form(Family::Elliptic, &c).unwrap();
        let p = make_pencil(&hyp, &ell, c.field()).unwrap();
        for pt in crate::projective::enumerate_points(&c) {
            let on_both = quadric::evaluate(&hyp, &pt, c.field()).is_zero()
                && quadric::evaluate(&ell, &pt, c.field()).is_zero();
            if on_both {
                for m in &p.members {
                    assert!(quadric::evaluate(m, &pt, c.field()).is_zero());
                }
            }
        }
    }

    #[test]
    fn intersection_size_examples() {
        let c = ctx(5, 2, 1);
        let hyp = standard_form(Family::Hyperbolic, &c).unwrap();
        assert_eq!(intersection_size(&hyp, &hyp, &c), 35);

        // two-tangent-hyperplane product meets Q+(5,2) in 29 points
        let mut pair = QuadraticForm::zero(5);
        pair.set(0, 1, Fe::ONE);
        assert_eq!(intersection_size(&hyp, &pair, &c), 29);

        // X0^2: the hyperplane X0 = 0 is tangent (19 points);
        // X0 + X1 = 0 is a secant hyperplane (15 points)
        let mut x0sq = QuadraticForm::zero(5);
        x0sq.set(0, 0, Fe::ONE);
        assert_eq!(intersection_size(&hyp, &x0sq, &c), 19);
        let alpha: Vec<Fe> = vec![Fe::ONE, Fe::ONE, Fe::ZERO, Fe::ZERO, Fe::ZERO, Fe::ZERO];
        let secant_sq = QuadraticForm::square_of_linear(&alpha, c.field());
        assert_eq!(intersection_size(&hyp, &secant_sq, &c), 15);
    }

    #[test]
    fn counting_identity_for_the_two_hyperplane_pencil() {
        let c = ctx(5, 2, 1);
        let hyp = standard_form(Family::Hyperbolic, &c).unwrap();
        let mut pair = QuadraticForm::zero(5);
        pair.set(0, 1, Fe::ONE);
        let p = make_pencil(&hyp, &pair, c.field()).unwrap();
        let total: u64 = p.members.iter().map(|m| quadric::point_count(m, &c)).sum();
        assert_eq!(total, 121); // 63 + 2*29
        assert!(verify_counting_identity(&p, &c));
    }

    #[test]
    fn pencil_report_classifies_all_members() {
        let c = ctx(5, 2, 1);
        let hyp = standard_form(Family::Hyperbolic, &c).unwrap();
        let mut pair = QuadraticForm::zero(5);
        pair.set(0, 1, Fe::ONE);
        let p = make_pencil(&hyp, &pair, c.field()).unwrap();
        let report = pencil_report(&p, &c).unwrap();
        assert_eq!(report.v_size, 29);
        assert_eq!(report.member_classes.len(), 3);
        assert!(report.has_two_hyperplanes);
        assert_eq!(report.witness, Some(pair));
        // the member sizes obey the partition identity
        let total: u64 = report.member_classes.iter().map(|cl| cl.point_count).sum();
        assert_eq!(total, c.space_size() + 2 * report.v_size);
        // members: the base, the pair, and the line-cone over Q+(3,2)
        assert_eq!(report.member_classes[0].point_count, 35);
        assert_eq!(report.member_classes[1].point_count, 39);
        assert_eq!(report.member_classes[2].point_count, 47);
    }

    #[test]
    fn reducible_member_detection() {
        let c = ctx(5, 2, 1);
        let f = c.field();
        let hyp = standard_form(Family::Hyperbolic, &c).unwrap();

        let mut pair = QuadraticForm::zero(5);
        pair.set(0, 1, Fe::ONE);
        let p = make_pencil(&hyp, &pair, f).unwrap();
        assert_eq!(two_hyperplane_member(&p, &c).unwrap(), Some(pair.clone()));

        // pencil with only a repeated hyperplane: strict answer is none
        let mut x0sq = QuadraticForm::zero(5);
        x0sq.set(0, 0, Fe::ONE);
        let with_square = hyp.add(&x0sq, f);
        let p = make_pencil(&hyp, &with_square, f).unwrap();
        let members = reducible_members(&p, &c).unwrap();
        assert!(members.two_distinct.is_none());
        assert_eq!(members.repeated, Some(x0sq));

        // the hyperbolic/elliptic standard pencil is NOT an example of an
        // all-irreducible pencil: hyp + ell = (X0+X1)^2 over GF(2);
        // exhibit an all-irreducible one by a small scan instead
        let ell = standard_form(Family::Elliptic, &c).unwrap();
        let members = reducible_members(&make_pencil(&hyp, &ell, f).unwrap(), &c).unwrap();
        assert!(members.repeated.is_some());

        let mut found = false;
        for bits in 1u32..200 {
            let coeffs: Vec<Fe> = (0..21).map(|i| Fe(((bits >> (i % 9)) & 1) as u8)).collect();
            let cand = QuadraticForm::from_coeffs(5, coeffs);
            if cand.is_zero() || cand.is_proportional_to(&hyp, f) {
                continue;
            }
            let p = make_pencil(&hyp, &cand, f).unwrap();
            let members = reducible_members(&p, &c).unwrap();
            if members.two_distinct.is_none()
                && members.repeated.is_none()
                && members.conjugate.is_none()
            {
                found = true;
                break;
            }
        }
        assert!(found, "no all-irreducible pencil found in the scan window");
    }

    #[test]
    fn threshold_values() {
        let c6 = ctx(6, 2, 1);
        assert_eq!(threshold(ThresholdKind::GeneralN, &c6).unwrap(), 57);
        let c5 = ctx(5, 2, 1);
        assert_eq!(threshold(ThresholdKind::Hyperbolic5Corollary, &c5).unwrap(), 29);
        let c4 = ctx(4, 3, 1);
        assert_eq!(threshold(ThresholdKind::Parabolic4, &c4).unwrap(), 43);
        assert!(threshold(ThresholdKind::Hyperbolic5Corollary, &c4).is_err());
        assert!(threshold(ThresholdKind::Parabolic4, &c5).is_err());
        // N=5 reading of the general bound: empty 2q^j tail
        assert_eq!(threshold(ThresholdKind::GeneralN, &c5).unwrap(), 27);
    }

    #[test]
    fn exhaustive_identity_small() {
        let c = ctx(2, 2, 1);
        let (pairs, violations) = exhaustive_identity_check(&c, 1, false).unwrap();
        assert_eq!(pairs, 63 * 62 / 2);
        assert_eq!(violations, 0);

        let c = ctx(3, 2, 1);
        let (pairs, violations) = exhaustive_identity_check(&c, 2, false).unwrap();
        assert_eq!(pairs, 1023 * 1022 / 2);
        assert_eq!(violations, 0);
    }

    #[test]
    fn random_identity_gf3() {
        let c = ctx(3, 3, 1);
        let (checked, violations) = random_identity_check(&c, 100, 1);
        assert_eq!(checked, 100);
        assert_eq!(violations, 0);
    }

    // At N = 5 all pairs are out of reach, but every pencil through a
    // standard non-singular form is checkable with value bitmasks.
    #[test]
    fn identity_over_all_pencils_through_standard_forms_pg52() {
        let c = ctx(5, 2, 1);
        let f = c.field();
        let points = crate::projective::enumerate_points(&c);
        let p_total = points.len() as u64;
        let mons = quadric::monomials(5);
        let mono_masks: Vec<u64> = mons
            .iter()
            .map(|&(i, j)| {
                points.iter().enumerate().fold(0u64, |mask, (t, p)| {
                    mask | ((f.mul(p.coords[i], p.coords[j]).0 as u64) << t)
                })
            })
            .collect();
        let mask_of = |form: &QuadraticForm| {
            form.coeffs
                .iter()
                .zip(&mono_masks)
                .filter(|(c, _)| !c.is_zero())
                .fold(0u64, |acc, (_, m)| acc ^ m)
        };
        let space = c.space_size();
        for family in [Family::Hyperbolic, Family::Elliptic] {
            let f1 = standard_form(family, &c).unwrap();
            let m1 = mask_of(&f1);
            let z1 = p_total - m1.count_ones() as u64;
            let mut m2 = 0u64;
            for enc in 1u64..(1 << 21) {
                m2 ^= mono_masks[enc.trailing_zeros() as usize];
                if m2 == m1 {
                    continue; // proportional to f1: no pencil
                }
                let z2 = p_total - m2.count_ones() as u64;
                let z3 = p_total - (m1 ^ m2).count_ones() as u64;
                let v = p_total - (m1 | m2).count_ones() as u64;
                assert_eq!(z1 + z2 + z3, space + 2 * v);
            }
        }
    }

    #[test]
    fn scan_kind_validation() {
        let c = ctx(5, 2, 1);
        let hyp = standard_form(Family::Hyperbolic, &c).unwrap();
        let code = build_code(&hyp, &c).unwrap();
        assert!(matches!(
            scan_theorem(&code, ThresholdKind::Parabolic4, ScanMode::Full, 1, false),
            Err(Error::UnsupportedThreshold)
        ));
        assert!(matches!(
            scan_theorem(&code, ThresholdKind::GeneralN, ScanMode::Full, 1, false),
            Err(Error::UnsupportedThreshold)
        ));
    }
}
