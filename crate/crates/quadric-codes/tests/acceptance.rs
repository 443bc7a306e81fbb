//! Acceptance suite: one test per verification criterion, each printing
//! a pass/fail line (visible with `--nocapture`).
//!
//! Every expected value below is an exact integer frozen from the
//! exhaustive oracles themselves (spectra validated against a naive
//! independent form-space enumeration in the unit tests). Where the
//! closed-form tables predict fewer codewords than the oracle measures,
//! the discrepancy is asserted at its measured value and emitted as a
//! finding: the tables count hyperplane-pair codewords exactly, and the
//! spectrum legitimately exceeds them at weights the two-hyperplane
//! theorems do not cover at small q.

use quadric_codes::code::{build_code, spectrum_report, weight_spectrum, FunctionalCode};
use quadric_codes::pencil::{self, ScanMode, ThresholdKind};
use quadric_codes::projective::GeometryContext;
use quadric_codes::quadric::{field_from_order, point_count, standard_form, Family};
use quadric_codes::tables::{self, verify_family};
use std::time::Instant;

fn ctx(n: usize, q: u64) -> GeometryContext {
    GeometryContext::new(n, field_from_order(q).unwrap()).unwrap()
}

fn code_for(family: Family, n: usize, q: u64) -> FunctionalCode {
    let c = ctx(n, q);
    let f = standard_form(family, &c).unwrap();
    build_code(&f, &c).unwrap()
}

fn report(criterion: usize, name: &str, findings: &[String]) {
    if findings.is_empty() {
        println!("criterion {criterion:2} ({name}): PASS");
    } else {
        println!(
            "criterion {criterion:2} ({name}): PASS with {} finding(s)",
            findings.len()
        );
        for f in findings {
            println!("    finding: {f}");
        }
    }
}

#[test]
fn criterion_01_quadric_sizes() {
    let start = Instant::now();
    // closed-form sizes of the non-singular quadrics
    let expect = |family: Family, n: usize, q: u64| -> u64 {
        let q128 = q as u128;
        let val = match family {
            Family::Parabolic => {
                // q^(N-1) + ... + q + 1
                (0..n as u32).map(|e| q128.pow(e)).sum::<u128>()
            }
            Family::Hyperbolic => {
                let m = (n as u32 - 1) / 2;
                (q128.pow(m) + 1) * (q128.pow(m + 1) - 1) / (q128 - 1)
            }
            Family::Elliptic => {
                let m = (n as u32 - 1) / 2;
                (q128.pow(m + 1) + 1) * (q128.pow(m) - 1) / (q128 - 1)
            }
        };
        val as u64
    };
    for q in [2u64, 3] {
        for n in 2..=6usize {
            for family in [Family::Hyperbolic, Family::Elliptic, Family::Parabolic] {
                let c = ctx(n, q);
                let Ok(f) = standard_form(family, &c) else { continue };
                assert_eq!(
                    point_count(&f, &c),
                    expect(family, n, q),
                    "{family} N={n} q={q}"
                );
            }
        }
    }
    // spot values quoted throughout
    assert_eq!(point_count(&standard_form(Family::Hyperbolic, &ctx(5, 2)).unwrap(), &ctx(5, 2)), 35);
    assert_eq!(point_count(&standard_form(Family::Elliptic, &ctx(5, 2)).unwrap(), &ctx(5, 2)), 27);
    assert_eq!(point_count(&standard_form(Family::Parabolic, &ctx(4, 3)).unwrap(), &ctx(4, 3)), 40);
    assert!(start.elapsed().as_secs() < 1, "size check exceeded 1 s");
    report(1, "quadric sizes vs closed forms", &[]);
}

/// Shared helper for criteria 2-4: assert the exact oracle spectrum,
/// compare per weight against the count table, and return findings for
/// weights where the spectrum exceeds the table.
fn spectrum_criterion(
    family: Family,
    n: usize,
    q: u64,
    oracle: &[(usize, u64)],
    table_weights: &[(u64, u64)],
) -> Vec<String> {
    let code = code_for(family, n, q);
    let spectrum = weight_spectrum(&code, None, 1, false).unwrap();
    let measured: Vec<(usize, u64)> = spectrum.entries().collect();
    assert_eq!(measured, oracle, "{family} N={n} q={q} full spectrum");
    let mut findings = Vec::new();
    for &(w, table_count) in table_weights {
        let s = spectrum.count_at(w as usize);
        if table_count > 0 && s != table_count {
            findings.push(format!(
                "{family} N={n} q={q} weight {w}: spectrum has {s} codewords, \
                 the closed-form table predicts {table_count} (the excess comes \
                 from quadrics whose pencils stay irreducible)"
            ));
        }
        if table_count > 0 && s < table_count {
            panic!("spectrum below the pair count is impossible");
        }
    }
    findings
}

#[test]
fn criterion_02_spectrum_vs_hyperbolic_count_table() {
    let start = Instant::now();
    // oracle values: exhaustive 2^20 - 1 codewords
    let oracle: Vec<(usize, u64)> = vec![
        (6, 280),
        (8, 735),
        (10, 11648),
        (12, 52290),
        (14, 140360),
        (16, 244895),
        (18, 282240),
        (20, 195916),
        (22, 89320),
        (24, 26145),
        (26, 4480),
        (28, 210),
        (30, 56),
    ];
    // the hyperbolic count table at q=2, l=2 with the weight-10 coincidence merged and the
    // (1.1) row contributing 0 through its (q^2-3q+2) factor
    let table = vec![(6u64, 280u64), (8, 735), (10, 728), (12, 210), (14, 0)];
    let findings = spectrum_criterion(Family::Hyperbolic, 5, 2, &oracle, &table);

    // the minimum distance and the second weight count are exactly the
    // two-hyperplane predictions
    let code = code_for(Family::Hyperbolic, 5, 2);
    let spectrum = weight_spectrum(&code, Some(12), 1, false).unwrap();
    assert_eq!(spectrum.min_weight(), Some(6));
    assert_eq!(spectrum.count_at(6), 280);
    assert_eq!(spectrum.count_at(8), 735);
    for w in 0..6 {
        assert_eq!(spectrum.count_at(w), 0);
    }
    assert_eq!(findings.len(), 2); // weights 10 and 12
    assert!(
        start.elapsed().as_secs() < 60,
        "single-threaded spectrum exceeded 60 s"
    );
    report(2, "spectrum vs the hyperbolic count table, Q+(5,2)", &findings);
}

#[test]
fn criterion_03_spectrum_vs_elliptic_count_table() {
    let oracle: Vec<(usize, u64)> = vec![
        (4, 270),
        (6, 4752),
        (8, 34155),
        (10, 133056),
        (12, 269748),
        (14, 315360),
        (16, 202311),
        (18, 73920),
        (20, 13662),
        (22, 1296),
        (24, 45),
    ];
    // the elliptic count table at q=2, l=2: the (1.1) row carries the vanishing factor,
    // so weight 2 must be absent; the q=2 weight coincidence merges
    // (4.1) and (1.2) at weight 6
    let table = vec![(2u64, 0u64), (4, 270), (6, 792), (8, 675), (10, 216)];
    let findings = spectrum_criterion(Family::Elliptic, 5, 2, &oracle, &table);

    let code = code_for(Family::Elliptic, 5, 2);
    let spectrum = weight_spectrum(&code, None, 1, false).unwrap();
    assert_eq!(spectrum.count_at(2), 0, "the (1.1) row vanishes at q=2");
    assert_eq!(spectrum.min_weight(), Some(4));
    assert_eq!(spectrum.count_at(4), 270);
    assert_eq!(findings.len(), 3); // weights 6, 8, 10
    report(3, "spectrum vs the elliptic count table, Q-(5,2)", &findings);
}

#[test]
fn criterion_04_spectra_vs_parabolic_count_tables() {
    // Q(4,2) against the even-q table: 2^14 codewords in under a second
    let start = Instant::now();
    let oracle42: Vec<(usize, u64)> = vec![
        (2, 105),
        (4, 1365),
        (6, 5005),
        (8, 6435),
        (10, 3003),
        (12, 455),
        (14, 15),
    ];
    let table42 = vec![(0u64, 0u64), (2, 105), (4, 285), (6, 75), (8, 0)];
    let mut findings = spectrum_criterion(Family::Parabolic, 4, 2, &oracle42, &table42);
    // the w1 = 0 row: no non-zero codeword of weight 0 exists, and the
    // (1.5) row predicts 0 while the spectrum holds 6435 weight-8 words
    let code42 = code_for(Family::Parabolic, 4, 2);
    let s42 = weight_spectrum(&code42, None, 1, false).unwrap();
    assert_eq!(s42.count_at(0), 0);
    assert_eq!(s42.min_weight(), Some(2));
    findings.push(format!(
        "parabolic N=4 q=2 weight 8: table row (1.5) predicts 0 pairs (correct) \
         but the spectrum holds {} codewords from other quadrics",
        s42.count_at(8)
    ));
    assert!(start.elapsed().as_secs() < 1, "Q(4,2) spectrum exceeded 1 s");

    // Q(4,3) against the odd-q table: ~4.8e6 codewords
    let start43 = Instant::now();
    let oracle43: Vec<(usize, u64)> = vec![
        (12, 540),
        (15, 3600),
        (18, 39360),
        (21, 305280),
        (24, 1228320),
        (27, 1982240),
        (30, 1017648),
        (33, 193680),
        (36, 11580),
        (39, 720),
    ];
    let table43 = vec![(12u64, 540u64), (15, 3600), (18, 6960), (21, 2880), (24, 540)];
    findings.extend(spectrum_criterion(Family::Parabolic, 4, 3, &oracle43, &table43));
    assert!(
        start43.elapsed().as_secs() < 600,
        "Q(4,3) spectrum exceeded 10 min"
    );

    // row-by-row census reconciliation holds exactly for both parities
    for q in [2u16, 3] {
        let r = verify_family(Family::Parabolic, 2, q, 4, false).unwrap();
        assert!(r.count_rows.iter().all(|row| row.matches), "q={q} census");
        assert!(r.size_rows.iter().all(|row| row.matches), "q={q} sizes");
    }
    report(4, "spectra vs the parabolic count tables, Q(4,q)", &findings);
}

#[test]
fn criterion_05_hyperplane_pair_census() {
    let mut findings = Vec::new();
    for (family, q, pairs) in [
        (Family::Hyperbolic, 2u16, 1953u64),
        (Family::Elliptic, 2, 1953),
        (Family::Parabolic, 2, 465),
        (Family::Hyperbolic, 3, 66066),
        (Family::Elliptic, 3, 66066),
        (Family::Parabolic, 3, 7260),
    ] {
        let r = verify_family(family, 2, q, 4, false).unwrap();
        assert_eq!(r.pairs_total, pairs, "{family} q={q} pair count");
        assert!(r.classifier_total, "{family} q={q}: classifier not total");
        assert!(
            r.all_sizes_in_table,
            "{family} q={q}: measured size outside the table size set"
        );
        for row in &r.size_rows {
            assert!(
                row.matches,
                "{family} q={q} case {}: predicted size {} measured {:?}",
                row.label, row.predicted_size, row.measured_size
            );
        }
        for row in &r.count_rows {
            assert!(
                row.matches,
                "{family} q={q} row {}: predicted {} census {}",
                row.label, row.predicted_count, row.measured_count
            );
        }
        assert!(r.all_match, "{family} q={q}: census reconciliation failed");
        findings.extend(r.findings.iter().cloned());
    }
    // spectrum-side findings are covered by criteria 2-4; the census
    // itself must reconcile exactly, so only those findings may appear
    assert!(findings.iter().all(|f| f.contains("spectrum") || f.contains("table range")));
    report(5, "hyperplane-pair census vs the size and count tables", &[]);
}

#[test]
fn criterion_06_weight_divisibility() {
    // every non-zero weight divisible by q^(l-1), over the full spectra
    // of criteria 2-4
    for (family, n, q) in [
        (Family::Hyperbolic, 5usize, 2u64),
        (Family::Elliptic, 5, 2),
        (Family::Parabolic, 4, 2),
        (Family::Parabolic, 4, 3),
    ] {
        let code = code_for(family, n, q);
        let spectrum = weight_spectrum(&code, None, 4, false).unwrap();
        let l = code.ctx().l();
        assert!(
            tables::divisibility_check(&spectrum, l, q as u16),
            "{family} N={n} q={q}"
        );
        // and the spectra are complete: counts sum to q^k - 1
        assert_eq!(
            spectrum.total_nonzero(),
            (q as u128).pow(code.dimension() as u32) - 1
        );
    }
    report(6, "weight divisibility by q^(l-1)", &[]);
}

#[test]
fn criterion_07_pencil_counting_identity() {
    // exhaustive over every pencil of PG(N,2), N <= 4
    for (n, expected_pairs) in [
        (2usize, 1953u128),
        (3, 522_753),
        (4, 536_821_761),
    ] {
        let c = ctx(n, 2);
        let (pairs, violations) = pencil::exhaustive_identity_check(&c, 8, false).unwrap();
        assert_eq!(pairs, expected_pairs, "N={n}");
        assert_eq!(violations, 0, "N={n}");
    }
    // 10^3 fixed-seed random pairs at (q=3, N=5)
    let c = ctx(5, 3);
    let (checked, violations) = pencil::random_identity_check(&c, 1000, 1);
    assert_eq!(checked, 1000);
    assert_eq!(violations, 0);
    report(7, "pencil counting identity", &[]);
}

#[test]
fn criterion_08_theorem_scans() {
    let start = Instant::now();
    // full scan of Q-(5,2) against the general bound
    let code = code_for(Family::Elliptic, 5, 2);
    let r = pencil::scan_theorem(&code, ThresholdKind::GeneralN, ScanMode::Full, 4, false).unwrap();
    assert_eq!(r.threshold, 27);
    assert_eq!(r.scanned, (1 << 20) - 1);
    assert!(r.violations.is_empty());
    assert_eq!(r.max_v_irreducible_pencils, Some(21));
    assert_eq!(r.max_v_observed, 23);
    assert!(r.max_v_irreducible_pencils.unwrap() < r.threshold);
    // opportunistic census: 28800 pencils through Q-(5,2) have all
    // members elliptic, each meeting the base in exactly 9 points
    assert_eq!(r.all_elliptic_pencils, Some(28800));
    assert_eq!(r.all_elliptic_v, Some(9));
    assert_eq!(r.max_v_irreducible_witnesses.len(), 4);
    assert_eq!(r.notes.len(), 1);
    assert!(start.elapsed().as_secs() < 600);

    // full scan of Q+(5,2) against the corollary bound q^3+5q^2+1 = 29
    let t = Instant::now();
    let code = code_for(Family::Hyperbolic, 5, 2);
    let r = pencil::scan_theorem(
        &code,
        ThresholdKind::Hyperbolic5Corollary,
        ScanMode::Full,
        4,
        false,
    )
    .unwrap();
    assert_eq!(r.threshold, 29);
    assert_eq!(r.scanned, (1 << 20) - 1);
    assert!(r.violations.is_empty());
    assert_eq!(r.max_v_irreducible_pencils, Some(25));
    assert_eq!(r.max_v_observed, 29); // attained by the (1.3) pairs only
    assert_eq!(r.all_elliptic_pencils, None); // the base itself is hyperbolic
    assert!(t.elapsed().as_secs() < 600);

    // sampled scan of Q(4,3) against q^2+11q+1 = 43 (vacuously above
    // |Q(4,3)| = 40; the scan still measures the irreducible maximum)
    let t = Instant::now();
    let code = code_for(Family::Parabolic, 4, 3);
    let r = pencil::scan_theorem(
        &code,
        ThresholdKind::Parabolic4,
        ScanMode::Sampled { count: 1_000_000, seed: 1 },
        4,
        false,
    )
    .unwrap();
    assert_eq!(r.threshold, 43);
    assert_eq!(r.scanned, 1_000_000);
    assert!(r.violations.is_empty());
    assert_eq!(r.max_v_irreducible_pencils, Some(22));
    assert_eq!(r.max_v_observed, 28);
    assert!(t.elapsed().as_secs() < 600);

    report(8, "theorem scans find zero violations", &[]);
}

#[test]
fn criterion_09_determinism_across_thread_counts() {
    // spectra: byte-identical reports for 1 and 8 threads
    for (family, n, q, bound) in [
        (Family::Hyperbolic, 5usize, 2u64, Some(12)),
        (Family::Parabolic, 4, 3, None),
    ] {
        let code = code_for(family, n, q);
        let s1 = weight_spectrum(&code, bound, 1, false).unwrap();
        let s8 = weight_spectrum(&code, bound, 8, false).unwrap();
        let r1 = serde_json::to_string(&spectrum_report(&code, family.as_str(), &s1)).unwrap();
        let r8 = serde_json::to_string(&spectrum_report(&code, family.as_str(), &s8)).unwrap();
        assert_eq!(r1, r8, "{family} N={n} q={q}");
    }
    // scan reports
    let code = code_for(Family::Hyperbolic, 5, 2);
    let r1 = pencil::scan_theorem(&code, ThresholdKind::Hyperbolic5Corollary, ScanMode::Full, 1, false).unwrap();
    let r8 = pencil::scan_theorem(&code, ThresholdKind::Hyperbolic5Corollary, ScanMode::Full, 8, false).unwrap();
    assert_eq!(
        serde_json::to_string(&r1).unwrap(),
        serde_json::to_string(&r8).unwrap()
    );
    // sampled scans are seed-stable and shard-independent
    let code = code_for(Family::Parabolic, 4, 3);
    let s1 = pencil::scan_theorem(&code, ThresholdKind::Parabolic4, ScanMode::Sampled { count: 20_000, seed: 1 }, 1, false).unwrap();
    let s8 = pencil::scan_theorem(&code, ThresholdKind::Parabolic4, ScanMode::Sampled { count: 20_000, seed: 1 }, 8, false).unwrap();
    assert_eq!(
        serde_json::to_string(&s1).unwrap(),
        serde_json::to_string(&s8).unwrap()
    );
    // reconciliation reports
    let v1 = serde_json::to_string(&verify_family(Family::Elliptic, 2, 2, 1, false).unwrap()).unwrap();
    let v8 = serde_json::to_string(&verify_family(Family::Elliptic, 2, 2, 8, false).unwrap()).unwrap();
    assert_eq!(v1, v8);
    report(9, "byte-identical reports across thread counts", &[]);
}

#[test]
fn criterion_10_dimension_probe() {
    let mut findings = Vec::new();
    for q in [2u64, 3] {
        for n in 2..=6usize {
            for family in [Family::Hyperbolic, Family::Elliptic, Family::Parabolic] {
                let c = ctx(n, q);
                let Ok(f) = standard_form(family, &c) else { continue };
                let code = build_code(&f, &c).unwrap();
                let claimed = (n + 2) * (n + 1) / 2 - 1;
                if code.dimension() != claimed {
                    findings.push(format!(
                        "{family} N={n} q={q}: measured rank {} deviates from the \
                         claimed dimension C(N+2,2)-1 = {claimed} (the quadric has \
                         only n = {} points)",
                        code.dimension(),
                        code.length()
                    ));
                }
            }
        }
    }
    // the deviations are exactly the structural small cases where the
    // claimed dimension exceeds the code length
    assert_eq!(findings.len(), 3, "{findings:?}");
    assert!(findings[0].contains("parabolic N=2 q=2"));
    assert!(findings[1].contains("elliptic N=3 q=2"));
    assert!(findings[2].contains("parabolic N=2 q=3"));
    // and on the main verification grid the claim holds exactly
    for (family, n, q, k) in [
        (Family::Hyperbolic, 5usize, 2u64, 20usize),
        (Family::Elliptic, 5, 2, 20),
        (Family::Parabolic, 4, 2, 14),
        (Family::Parabolic, 4, 3, 14),
        (Family::Hyperbolic, 5, 3, 20),
        (Family::Elliptic, 5, 3, 20),
        (Family::Parabolic, 6, 2, 27),
    ] {
        assert_eq!(code_for(family, n, q).dimension(), k);
    }
    report(10, "dimension probe (rank vs claimed formula)", &findings);
}
