//! Property tests for the algebraic invariants that hold for every
//! input, not just the worked examples.

use proptest::prelude::*;
use quadric_codes::code::{build_code, codeword_weight};
use quadric_codes::gf::{Fe, Field};
use quadric_codes::linalg::{kernel_basis, rank, MatrixGF};
use quadric_codes::pencil::{make_pencil, verify_counting_identity};
use quadric_codes::projective::{normalize, GeometryContext};
use quadric_codes::quadric::{coeff_count, standard_form, Family, QuadraticForm};

fn field_for(idx: u8) -> Field {
    match idx % 4 {
        0 => Field::new(2, 1).unwrap(),
        1 => Field::new(3, 1).unwrap(),
        2 => Field::new(2, 2).unwrap(),
        _ => Field::new(5, 1).unwrap(),
    }
}

proptest! {
    #[test]
    fn normalization_is_idempotent_and_scalar_invariant(
        field_idx in 0u8..4,
        raw in proptest::collection::vec(0u8..5, 3..7),
        scalar in 1u8..5,
    ) {
        let f = field_for(field_idx);
        let v: Vec<Fe> = raw.iter().map(|&x| f.elem(x as u64)).collect();
        prop_assume!(v.iter().any(|c| !c.is_zero()));
        let lambda = f.elem(scalar as u64);
        prop_assume!(!lambda.is_zero());

        let p = normalize(&v, &f).unwrap();
        // leftmost non-zero coordinate is 1
        prop_assert_eq!(p.coords.iter().find(|c| !c.is_zero()), Some(&Fe::ONE));
        // normalizing again changes nothing
        prop_assert_eq!(normalize(&p.coords, &f).unwrap().coords.clone(), p.coords.clone());
        // scalar multiples normalize identically
        let scaled: Vec<Fe> = v.iter().map(|&c| f.mul(lambda, c)).collect();
        prop_assert_eq!(normalize(&scaled, &f).unwrap().coords, p.coords);
    }

    #[test]
    fn rank_plus_nullity_is_cols(
        field_idx in 0u8..4,
        rows in 1usize..5,
        cols in 1usize..6,
        data in proptest::collection::vec(0u8..25, 30),
    ) {
        let f = field_for(field_idx);
        let m = MatrixGF::new(
            rows,
            cols,
            data.iter().take(rows * cols).map(|&x| f.elem(x as u64)).collect(),
        );
        let r = rank(&m, &f);
        let kernel = kernel_basis(&m, &f);
        prop_assert_eq!(r + kernel.len(), cols);
        for v in &kernel {
            prop_assert!(m.mul_vec(v, &f).iter().all(|c| c.is_zero()));
        }
    }

    #[test]
    fn codeword_weight_is_scalar_invariant(
        coeffs in proptest::collection::vec(0u8..3, 15),
        scalar in 1u8..3,
    ) {
        // C2(Q(4,3)): weights of lambda*f and f coincide
        let field = Field::new(3, 1).unwrap();
        let ctx = GeometryContext::new(4, field).unwrap();
        let base = standard_form(Family::Parabolic, &ctx).unwrap();
        let code = build_code(&base, &ctx).unwrap();
        let form = QuadraticForm::from_coeffs(
            4,
            coeffs.iter().map(|&x| ctx.field().elem(x as u64)).collect(),
        );
        let lambda = ctx.field().elem(scalar as u64);
        let scaled = form.scale(lambda, ctx.field());
        prop_assert_eq!(codeword_weight(&code, &form), codeword_weight(&code, &scaled));
    }

    #[test]
    fn counting_identity_for_random_pencils(
        q_choice in 0u8..2,
        c1 in proptest::collection::vec(0u8..3, 10),
        c2 in proptest::collection::vec(0u8..3, 10),
    ) {
        let q = if q_choice == 0 { 2u64 } else { 3 };
        let field = Field::new(q, 1).unwrap();
        let ctx = GeometryContext::new(3, field).unwrap();
        prop_assert_eq!(coeff_count(3), 10);
        let f1 = QuadraticForm::from_coeffs(
            3,
            c1.iter().map(|&x| ctx.field().elem(x as u64)).collect(),
        );
        let f2 = QuadraticForm::from_coeffs(
            3,
            c2.iter().map(|&x| ctx.field().elem(x as u64)).collect(),
        );
        prop_assume!(!f1.is_zero() && !f2.is_zero());
        prop_assume!(!f1.is_proportional_to(&f2, ctx.field()));
        let p = make_pencil(&f1, &f2, ctx.field()).unwrap();
        prop_assert!(verify_counting_identity(&p, &ctx));
    }
}
