use runcount_core::closed_form::psi_polys;
use runcount_core::genfun::{phi_s_poly, u_s_gf};
use runcount_core::reference::{phi_reference, psi_reference};

#[test]
fn psi_table_rows_reproduced() {
    let psi = psi_polys(10);
    for (i, q) in psi.iter().enumerate() {
        assert_eq!(q.q, psi_reference(i).unwrap(), "Q_{i}");
    }
}

#[test]
fn phi_table_rows_reproduced() {
    for s in 1..=10 {
        assert_eq!(
            phi_s_poly(s).unwrap(),
            phi_reference(s as usize).unwrap(),
            "Φ_{s}"
        );
    }
}

#[test]
fn reference_numerators_clear_partial_fractions() {
    for s in [1u32, 4, 7, 10] {
        let mut gf = u_s_gf(s).unwrap();
        gf.numerator = phi_reference(s as usize).unwrap();
        assert!(gf.is_consistent(), "s={s}");
    }
}

#[test]
fn phi_10_has_21_inner_terms() {
    let p = phi_reference(10).unwrap();
    assert_eq!(p.valuation(), Some(11));
    assert_eq!(p.degree(), 31);
    assert_eq!(
        p.coeffs()
            .iter()
            .filter(|c| !num_traits::Zero::is_zero(*c))
            .count(),
        21
    );
}
