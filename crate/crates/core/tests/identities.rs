use runcount_core::closed_form::a_poly;
use runcount_core::closed_form::{f_series, f_series_from_ab, phi_parts, psi_polys};
use runcount_core::genfun::u_s_gf;
use runcount_core::genfun::{
    a_k_gf, atilde_poly, atilde_taylor_coeffs, delta_degree, delta_poly, phi_s_poly, verify_wz_sum,
    AtildeData,
};
use runcount_core::poly::{Polynomial, Var};
use runcount_core::rational::rat;
use runcount_core::recurrence::{verify_phi_recurrence, verify_psi_recurrence};

#[test]
fn recurrences_hold_to_twelve() {
    assert!(verify_psi_recurrence(&psi_polys(12), 12).passed());
    assert!(verify_phi_recurrence(&phi_parts(12), 12).passed());
}

#[test]
fn atilde_divisible_and_wz_to_thirty() {
    for k in 0..=30u32 {
        let factor = Polynomial::from_integers(Var::Z, &[1, 1]).pow(k + 1);
        assert!(atilde_poly(k).div_exact(&factor).is_ok(), "k={k}");
        assert!(verify_wz_sum(k), "k={k}");
    }
}

#[test]
fn atilde_dual_path_and_reconstruction() {
    for k in 0..=12 {
        atilde_taylor_coeffs(k).unwrap();
        let d = AtildeData::new(k).unwrap();
        assert_eq!(d.reconstruct(), d.atilde);
        assert_eq!(d.phi_tilde.degree(), k as i64 + 2);
    }
}

#[test]
fn a_k_series_to_forty() {
    for k in 0..=12 {
        let s = a_k_gf(k).unwrap().series(40);
        let a = a_poly(k);
        for n in 2..=40 {
            assert_eq!(s.coeff(n), &a.eval(&rat(n as i64)), "k={k} n={n}");
        }
    }
}

#[test]
fn f_series_coefficients_are_phi_parts() {
    let phi = phi_parts(12);
    for n in 2..=10i64 {
        for t in 1..=6i64 {
            let direct = f_series(n, t, 12);
            assert_eq!(direct, f_series_from_ab(n, t as u64, 12), "n={n} t={t}");
            for (i, part) in phi.iter().enumerate() {
                assert_eq!(
                    direct.coeff(i),
                    &part.eval(&rat(n), &rat(t)),
                    "n={n} t={t} i={i}"
                );
            }
        }
    }
}

#[test]
fn degree_claims() {
    for s in 1..=12u32 {
        assert_eq!(delta_poly(s).degree(), delta_degree(s));
        assert_eq!(phi_s_poly(s).unwrap().degree(), delta_degree(s) + 1);
    }
    for psi in psi_polys(12) {
        assert_eq!(psi.q.degree_first(), (psi.index / 2) as i64);
    }
}

#[test]
fn partial_fraction_series_agree() {
    for s in 1..=10u32 {
        let gf = u_s_gf(s).unwrap();
        assert_eq!(
            gf.partial_fraction_series(30).unwrap(),
            gf.series(30),
            "s={s}"
        );
    }
}
