//! Oracle equivalence for the quadric classifier: the enumerated point
//! count of every form must equal the closed-form size of its class.
//! Exhaustive over all non-zero forms of PG(N,2) for N <= 5, sampled
//! (fixed seed) over GF(3) for N <= 5.

use quadric_codes::gf::{Fe, Field};
use quadric_codes::projective::{pg_size, GeometryContext};
use quadric_codes::quadric::{
    classify, coeff_count, cone_size, BaseKind, Family, QuadraticForm, QuadricClass,
};

fn ctx(n: usize, q: u64) -> GeometryContext {
    let f = match q {
        2 => Field::new(2, 1).unwrap(),
        3 => Field::new(3, 1).unwrap(),
        _ => unreachable!(),
    };
    GeometryContext::new(n, f).unwrap()
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
        BaseKind::EmptyOrDegenerate => unreachable!("never produced for N >= 2"),
    }
}

fn check_range_gf2(c: &GeometryContext, m: usize, start: u64, end: u64) {
    for bits in start..end {
        let coeffs: Vec<Fe> = (0..m).map(|i| Fe(((bits >> i) & 1) as u8)).collect();
        let form = QuadraticForm::from_coeffs(c.n(), coeffs);
        let class = classify(&form, c).unwrap();
        assert_eq!(
            class.point_count,
            expected_size(&class, c),
            "N={} bits={bits:#x} class={class:?}",
            c.n()
        );
    }
}

#[test]
fn classify_matches_cone_size_for_all_forms_gf2() {
    for n in 2..=5usize {
        let c = ctx(n, 2);
        let m = coeff_count(n);
        let total = 1u64 << m;
        let threads = 8u64;
        let chunk = (total - 1) / threads;
        std::thread::scope(|scope| {
            for t in 0..threads {
                let c = &c;
                let start = 1 + t * chunk;
                let end = if t + 1 == threads { total } else { start + chunk };
                scope.spawn(move || check_range_gf2(c, m, start, end));
            }
        });
    }
}

#[test]
fn classify_matches_cone_size_sampled_gf3() {
    // 100_000 forms split across the dimensions, deterministic LCG
    for (n, samples) in [(2usize, 10_000u64), (3, 20_000), (4, 30_000), (5, 40_000)] {
        let c = ctx(n, 3);
        let m = coeff_count(n);
        let threads = 8u64;
        let chunk = samples / threads;
        std::thread::scope(|scope| {
            for t in 0..threads {
                let c = &c;
                let start = t * chunk;
                let end = if t + 1 == threads { samples } else { start + chunk };
                scope.spawn(move || {
                    for i in start..end {
                        let mut state = (i + 1)
                            .wrapping_mul(0x9e3779b97f4a7c15)
                            .wrapping_add(n as u64);
                        let coeffs: Vec<Fe> = (0..m)
                            .map(|_| {
                                state = state
                                    .wrapping_mul(6364136223846793005)
                                    .wrapping_add(1442695040888963407);
                                Fe(((state >> 33) % 3) as u8)
                            })
                            .collect();
                        let form = QuadraticForm::from_coeffs(n, coeffs);
                        if form.is_zero() {
                            continue;
                        }
                        let class = classify(&form, c).unwrap();
                        assert_eq!(
                            class.point_count,
                            expected_size(&class, c),
                            "N={n} sample={i}"
                        );
                    }
                });
            }
        });
    }
}
