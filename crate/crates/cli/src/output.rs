//! Output documents and their JSON / TSV / LaTeX renderings.
//!
//! Rationals are always written as exact strings (`"p/q"` or `"p"`).

use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use runcount_core::bivariate::BivariatePolynomial;
use runcount_core::closed_form::PsiPolynomial;
use runcount_core::genfun::FactoredDenominator;
use runcount_core::rational::{common_denominator, content};
use runcount_core::verify::VerificationReport;
use runcount_core::{Polynomial, Rational, RunCountTriangle, TruncatedSeries, Var};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Tsv,
    Latex,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolynomialDoc {
    pub kind: String,
    pub variable: String,
    pub coefficients: Vec<String>,
}

impl From<&Polynomial> for PolynomialDoc {
    fn from(p: &Polynomial) -> Self {
        PolynomialDoc {
            kind: "polynomial".into(),
            variable: p.var().to_string(),
            coefficients: p.coeffs().iter().map(ToString::to_string).collect(),
        }
    }
}

impl TryFrom<&PolynomialDoc> for Polynomial {
    type Error = String;

    fn try_from(doc: &PolynomialDoc) -> Result<Self, String> {
        let mut chars = doc.variable.chars();
        let var = match (chars.next(), chars.next()) {
            (Some(c), None) => Var::from_symbol(c),
            _ => None,
        }
        .ok_or_else(|| format!("unknown variable `{}`", doc.variable))?;
        let coeffs = doc
            .coefficients
            .iter()
            .map(|c| Rational::from_str(c).map_err(|e| format!("bad rational `{c}`: {e}")))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Polynomial::new(var, coeffs))
    }
}

#[derive(Debug, Serialize, Deserialize)]
pub struct TriangleRow {
    pub n: usize,
    pub counts: Vec<String>,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct TriangleDoc {
    pub kind: String,
    pub method: String,
    pub rows: Vec<TriangleRow>,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct TermDoc {
    pub n: u32,
    pub s: u32,
    pub coefficient: String,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct PsiRowDoc {
    pub i: u32,
    pub prefactor: String,
    pub variables: [String; 2],
    pub terms: Vec<TermDoc>,
    pub display: String,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct PsiDoc {
    pub kind: String,
    pub rows: Vec<PsiRowDoc>,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct FactorDoc {
    pub c: String,
    pub e: u32,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct DenominatorDoc {
    pub factors: Vec<FactorDoc>,
    pub expanded: PolynomialDoc,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct PhiDoc {
    pub kind: String,
    pub s: u32,
    pub numerator: PolynomialDoc,
    pub denominator: DenominatorDoc,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct SeriesDoc {
    pub kind: String,
    pub s: u32,
    pub variable: String,
    pub order: usize,
    pub coefficients: Vec<String>,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct CheckDoc {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct ReportDoc {
    pub kind: String,
    pub passed: bool,
    pub n_max: usize,
    pub s_max: usize,
    pub i_max: usize,
    pub k_max: usize,
    pub checks: Vec<CheckDoc>,
}

fn json<T: Serialize>(doc: &T) -> String {
    let mut text = serde_json::to_string_pretty(doc).expect("documents serialize");
    text.push('\n');
    text
}

pub fn render_triangle(t: &RunCountTriangle, method: &str, format: Format) -> String {
    match format {
        Format::Json => json(&TriangleDoc {
            kind: "triangle".into(),
            method: method.into(),
            rows: t
                .rows()
                .map(|(n, row)| TriangleRow {
                    n,
                    counts: row.iter().map(ToString::to_string).collect(),
                })
                .collect(),
        }),
        Format::Tsv => t
            .rows()
            .map(|(n, row)| {
                let cells: Vec<String> = row.iter().map(ToString::to_string).collect();
                format!("{n}\t{}\n", cells.join("\t"))
            })
            .collect(),
        Format::Latex => {
            let mut out = format!("\\begin{{tabular}}{{r|{}}}\n", "r".repeat(t.n_max() - 1));
            out.push_str("$n$ & $P(n,s)$ \\\\\n\\hline\n");
            for (n, row) in t.rows() {
                let cells: Vec<String> = row.iter().map(ToString::to_string).collect();
                out.push_str(&format!("{n} & {} \\\\\n", cells.join(" & ")));
            }
            out.push_str("\\end{tabular}\n");
            out
        }
    }
}

/// `x^{e}` with braces, as display output.
fn latex_power(var: char, e: usize) -> String {
    match e {
        0 => String::new(),
        1 => var.to_string(),
        e => format!("{var}^{{{e}}}"),
    }
}

fn power(var: char, e: usize) -> String {
    match e {
        0 => String::new(),
        1 => var.to_string(),
        e if e < 10 => format!("{var}^{e}"),
        e => format!("{var}^{{{e}}}"),
    }
}

/// Integer polynomial (ascending coefficients) written in descending powers,
/// e.g. `3s^2+45s+98`.
fn descending(coeffs: &[BigInt], var: char) -> String {
    let mut out = String::new();
    for (e, c) in coeffs.iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let mag = c.abs();
        if c.is_negative() {
            out.push('-');
        } else if !out.is_empty() {
            out.push('+');
        }
        let p = power(var, e);
        if !mag.is_one() || p.is_empty() {
            out.push_str(&mag.to_string());
        }
        out.push_str(&p);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

fn integer_coeffs(p: &Polynomial, scale: &BigInt) -> Vec<BigInt> {
    p.coeffs()
        .iter()
        .map(|c| (c * Rational::from_integer(scale.clone())).to_integer())
        .collect()
}

fn join_signed(pieces: Vec<String>) -> String {
    let mut out = String::new();
    for piece in pieces {
        if !out.is_empty() && !piece.starts_with('-') {
            out.push('+');
        }
        out.push_str(&piece);
    }
    out
}

/// `K(s-i)` followed by `Q_i` over its common denominator, with each
/// coefficient of `n^a` (a polynomial in `s`) written with its content
/// factored out, e.g. `K(s-4)(4n^2-4(s+8)n+s^2+15s+32)/32`.
pub fn psi_display(psi: &PsiPolynomial) -> String {
    let prefactor = match psi.index {
        0 => "K(s)".to_string(),
        i => format!("K(s-{i})"),
    };
    let q = &psi.q;
    let den = common_denominator(q.terms().map(|(_, c)| c));
    let mut pieces = Vec::new();
    for a in (0..=q.degree_first().max(0) as u32).rev() {
        let coeff = integer_coeffs(&q.coefficient_of_first(a), &den);
        let nonzero = coeff.iter().filter(|c| !c.is_zero()).count();
        if nonzero == 0 {
            continue;
        }
        let np = power('n', a as usize);
        if a == 0 {
            pieces.push(descending(&coeff, 's'));
        } else if nonzero == 1 {
            let mut piece = descending(&coeff, 's');
            if piece == "1" || piece == "-1" {
                piece.pop();
            }
            pieces.push(piece + &np);
        } else {
            let g = content(coeff.iter());
            let lead_negative = coeff
                .iter()
                .rev()
                .find(|c| !c.is_zero())
                .unwrap()
                .is_negative();
            let unit = if lead_negative { -g.clone() } else { g.clone() };
            let inner: Vec<BigInt> = coeff.iter().map(|c| c.div_floor(&unit)).collect();
            let sign = if lead_negative { "-" } else { "" };
            let mag = if g.is_one() {
                String::new()
            } else {
                g.to_string()
            };
            pieces.push(format!("{sign}{mag}({}){np}", descending(&inner, 's')));
        }
    }
    let body = join_signed(pieces);
    if body == "1" && den.is_one() {
        return prefactor;
    }
    let tail = if den.is_one() {
        String::new()
    } else {
        format!("/{den}")
    };
    format!("{prefactor}({body}){tail}")
}

fn psi_row(psi: &PsiPolynomial) -> PsiRowDoc {
    let q: &BivariatePolynomial = &psi.q;
    PsiRowDoc {
        i: psi.index,
        prefactor: match psi.index {
            0 => "K(s)".into(),
            i => format!("K(s-{i})"),
        },
        variables: ["n".into(), "s".into()],
        terms: q
            .terms()
            .map(|(&(n, s), c)| TermDoc {
                n,
                s,
                coefficient: c.to_string(),
            })
            .collect(),
        display: psi_display(psi),
    }
}

pub fn render_psi(family: &[PsiPolynomial], format: Format) -> String {
    match format {
        Format::Json => json(&PsiDoc {
            kind: "psi".into(),
            rows: family.iter().map(psi_row).collect(),
        }),
        Format::Tsv => {
            let mut out = String::new();
            for psi in family {
                for (&(a, b), c) in psi.q.terms() {
                    out.push_str(&format!("{}\t{a}\t{b}\t{c}\n", psi.index));
                }
            }
            out
        }
        Format::Latex => {
            let mut out =
                String::from("\\begin{tabular}{r|l}\n$i$ & $\\psi_i(n,s)$ \\\\\n\\hline\n");
            for psi in family {
                out.push_str(&format!("${}$ & ${}$ \\\\\n", psi.index, psi_display(psi)));
            }
            out.push_str("\\end{tabular}\n");
            out
        }
    }
}

/// `c x^v (inner)` with the integer content and lowest power factored out.
pub fn factored_display(p: &Polynomial) -> String {
    let var = p.var().symbol();
    let Some(v) = p.valuation() else {
        return "0".into();
    };
    let den = common_denominator(p.coeffs());
    let ints = integer_coeffs(p, &den);
    let g = content(ints.iter());
    let inner: Vec<BigInt> = ints[v..].iter().map(|c| c / &g).collect();
    let mut out = String::new();
    if !g.is_one() {
        out.push_str(&g.to_string());
    }
    out.push_str(&latex_power(var, v));
    let inner_str = descending(&inner, var);
    if inner_str != "1" {
        out.push_str(&format!("({inner_str})"));
    }
    if !den.is_one() {
        out.push_str(&format!("/{den}"));
    }
    out
}

pub fn denominator_display(d: &FactoredDenominator) -> String {
    let var = d.var.symbol();
    d.factors
        .iter()
        .map(|(c, e)| {
            let lin = if c.is_one() {
                format!("(1-{var})")
            } else {
                format!("(1-{c}{var})")
            };
            if *e == 1 {
                lin
            } else {
                format!("{lin}^{e}")
            }
        })
        .collect()
}

pub fn render_phi(
    s: u32,
    numerator: &Polynomial,
    den: &FactoredDenominator,
    format: Format,
) -> String {
    match format {
        Format::Json => json(&PhiDoc {
            kind: "phi".into(),
            s,
            numerator: numerator.into(),
            denominator: DenominatorDoc {
                factors: den
                    .factors
                    .iter()
                    .map(|(c, e)| FactorDoc {
                        c: c.to_string(),
                        e: *e,
                    })
                    .collect(),
                expanded: (&den.expand()).into(),
            },
        }),
        Format::Tsv => {
            let mut out = String::new();
            for (d, c) in numerator.coeffs().iter().enumerate() {
                out.push_str(&format!("numerator\t{d}\t{c}\n"));
            }
            for (c, e) in &den.factors {
                out.push_str(&format!("denominator\t{c}\t{e}\n"));
            }
            out
        }
        Format::Latex => format!(
            "$\\Phi_{{{s}}}(x) = {}$\n$\\Delta_{{{s}}}(x) = {}$\n",
            factored_display(numerator),
            denominator_display(den)
        ),
    }
}

pub fn render_series(s: u32, series: &TruncatedSeries, format: Format) -> String {
    match format {
        Format::Json => json(&SeriesDoc {
            kind: "series".into(),
            s,
            variable: series.var().to_string(),
            order: series.order(),
            coefficients: series.coeffs().iter().map(ToString::to_string).collect(),
        }),
        Format::Tsv => series
            .coeffs()
            .iter()
            .enumerate()
            .map(|(n, c)| format!("{n}\t{c}\n"))
            .collect(),
        Format::Latex => {
            let terms: Vec<String> = series
                .coeffs()
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(n, c)| format!("{c}{}", latex_power('x', n)))
                .collect();
            format!(
                "$u_{{{s}}}(x) = {} + O(x^{{{}}})$\n",
                join_signed(terms),
                series.order() + 1
            )
        }
    }
}

pub fn render_report(r: &VerificationReport, format: Format) -> String {
    match format {
        Format::Json => json(&ReportDoc {
            kind: "verification-report".into(),
            passed: r.passed(),
            n_max: r.config.n_max,
            s_max: r.config.s_max,
            i_max: r.config.i_max,
            k_max: r.config.k_max,
            checks: r
                .checks
                .iter()
                .map(|c| CheckDoc {
                    name: c.name.into(),
                    passed: c.passed,
                    detail: c.detail.clone(),
                })
                .collect(),
        }),
        Format::Tsv => r
            .checks
            .iter()
            .map(|c| {
                format!(
                    "{}\t{}\t{}\n",
                    c.name,
                    if c.passed { "PASS" } else { "FAIL" },
                    c.detail
                )
            })
            .collect(),
        Format::Latex => {
            let mut out = String::from("\\begin{tabular}{l|l}\ncheck & result \\\\\n\\hline\n");
            for c in &r.checks {
                out.push_str(&format!(
                    "\\texttt{{{}}} & {} \\\\\n",
                    c.name,
                    if c.passed { "pass" } else { "FAIL" }
                ));
            }
            out.push_str("\\end{tabular}\n");
            out
        }
    }
}
