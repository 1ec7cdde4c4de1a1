//! Reference values, kept verbatim as typeset expressions.
//!
//! `Q_i(n, s)` is listed without its `K(s - i)` prefactor. The `i = 7` row
//! had an unbalanced parenthesis as typeset; the closing `)` is restored here.

use crate::bivariate::BivariatePolynomial;
use crate::closed_form::NS;
use crate::error::{Error, Result};
use crate::expr::{parse_bivariate, parse_polynomial};
use crate::poly::{Polynomial, Var};

/// `Q_0 … Q_10`.
pub const PSI_TABLE: [&str; 11] = [
    "1",
    "-2",
    "(-2n+s+8)/4",
    "(2n-s-3)/2",
    "(4n^2-4(s+8)n+s^2+15s+32)/32",
    "(-8n^2+8(s+3)n-2(s^2+5s+10))/32",
    "(-8n^3+12(s+8)n^2-2(3s^2+45s+98)n+s^3+21s^2+74s+144)/384",
    "(16n^3-24(s+3)n^2+4(3s^2+15s+32)n-2(s^3+6s^2+23s+42))/384",
    "(16n^4-32(s+8)n^3+8(3s^2+45s+100)n^2-8(s^3+21s^2+76s+160)n\
     +s^4+26s^3+107s^2+442s+768)/6144",
    "(-16n^4+32(s+3)n^3-8(3s^2+15s+34)n^2+8(s+3)(s^2+3s+16)n\
     -(s^4+6s^3+35s^2+126s+216))/3072",
    "(-32n^5+80(s+8)n^4-80(s^2+15s+34)n^3+40(21s^2+s^3+78s+176)n^2\
     -2(5s^4+130s^3+555s^2+2510s+4504)n\
     +s^5+30s^4+115s^3+870s^2+2824s+4800)/122880",
];

/// `Φ_1 … Φ_10`.
pub const PHI_TABLE: [&str; 10] = [
    "2x^2",
    "4x^3",
    "2x^4(5-6x)",
    "4x^5(24x^2-29x+8)",
    "2x^6(720x^4-1704x^3+1436x^2-501x+61)",
    "4x^7(17280x^6-51336x^5+61188x^4-37256x^3+12209x^2-2041x+136)",
    "2x^8(-3628800x^9+15729120x^8-29341872x^7+30810864x^6-20028656x^5+8353808x^4\
     -2236439x^3+370871x^2-34601x+1385)",
    "4x^9(696729600x^{12}-3555239040x^{11}+8107966944x^{10}-10906662240x^9+9627417336x^8\
     -5872225480x^7+2537780728x^6-783164808x^5+171355239x^4-25936503x^3+2579241x^2\
     -151385x+3968)",
    "2x^{10}(1316818944000x^{16}-8712886694400x^{15}+26410986334080x^{14}-48618945021312x^{13}\
     +60779114417952x^{12}-54684478479456x^{11}+36624658707312x^{10}-18628018251952x^9\
     +7273896122392x^8-2188789058612x^7+506111568077x^6-89028957282x^5+11685816855x^4\
     -1107016832x^3+71414171x^2-2804314x+50521)",
    "4x^{11}(2528292372480000x^{20}-18993012627456000x^{19}+66507291476582400x^{18}\
     -144199874533248000x^{17}+216971940209451264x^{16}-240735551604776064x^{15}\
     +204330019791468672x^{14}-135856983272339904x^{13}+71875337579512880x^{12}\
     -30562090468050280x^{11}+10504633067351272x^{10}-2924633644527940x^9+658629666786430x^8\
     -119364099863329x^7+17244871619376x^6-1956223222079x^5+170214919190x^4\
     -10952481287x^3+490431140x^2-13630637x+176896)",
];

/// Reference `Q_i(n, s)` for `i <= 10`.
pub fn psi_reference(i: usize) -> Result<BivariatePolynomial> {
    let src = PSI_TABLE
        .get(i)
        .ok_or_else(|| Error::OutOfDomain(format!("no reference Q_{i}")))?;
    parse_bivariate(src, NS)
}

/// Reference `Φ_s(x)` for `1 <= s <= 10`.
pub fn phi_reference(s: usize) -> Result<Polynomial> {
    let src = s
        .checked_sub(1)
        .and_then(|k| PHI_TABLE.get(k))
        .ok_or_else(|| Error::OutOfDomain(format!("no reference Φ_{s}")))?;
    parse_polynomial(src, Var::X)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::genfun::delta_degree;

    #[test]
    fn all_rows_parse() {
        for i in 0..PSI_TABLE.len() {
            let q = psi_reference(i).unwrap();
            assert_eq!(q.degree_first(), (i / 2) as i64);
        }
        for s in 1..=PHI_TABLE.len() {
            let p = phi_reference(s).unwrap();
            assert_eq!(p.degree(), 1 + delta_degree(s as u32));
            assert_eq!(p.valuation(), Some(s + 1));
        }
        assert!(psi_reference(11).is_err());
        assert!(phi_reference(0).is_err());
    }
}
