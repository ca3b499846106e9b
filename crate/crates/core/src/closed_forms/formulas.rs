use num_bigint::{BigInt, BigUint};

use super::{ClosedFormError, Domain, Poly};
use crate::factored::FactoredInteger;
use crate::generators::Family;
use crate::indices::{integral_exponent, IndexKind, IndexValue, Params};

/// `prime^{exponent(n)}`, or `prime^{c * exponent(n)}` when `scaled_by_c`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrimePower {
    pub prime: u64,
    pub exponent: Poly,
    pub scaled_by_c: bool,
}

/// `base^{alpha_mul * α + offset}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AlphaPower {
    pub base: u64,
    pub alpha_mul: u32,
    pub offset: u32,
}

/// `coeff(n) * Π powers`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PowerTerm {
    pub coeff: Poly,
    pub powers: Vec<AlphaPower>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Formula {
    /// A plain integer constant.
    Literal(u64),
    /// Product of prime powers with exponents polynomial in `n` (and `c`).
    Product(Vec<PrimePower>),
    /// Sum of terms with exponents affine in `α`.
    PowerSum(Vec<PowerTerm>),
}

/// A published closed form for one `(family, index)`, piecewise in `n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IndexFormula {
    pub family: Family,
    pub index: IndexKind,
    pub pieces: Vec<(Domain, Formula)>,
}

impl IndexFormula {
    pub fn piece(&self, n: u32) -> Option<&Formula> {
        self.pieces
            .iter()
            .find(|(d, _)| d.contains(n))
            .map(|(_, f)| f)
    }

    pub fn domain_min(&self) -> u32 {
        self.pieces
            .iter()
            .map(|(d, _)| d.min)
            .min()
            .unwrap_or(u32::MAX)
    }

    /// Symbolic form of the piece covering `n`.
    pub fn render(&self, n: u32) -> Option<String> {
        self.piece(n).map(Formula::render)
    }

    pub fn evaluate(&self, n: u32, params: Params) -> Result<IndexValue, ClosedFormError> {
        let what = format!("{} closed form", self.index);
        let formula = self.piece(n).ok_or_else(|| ClosedFormError::OutOfRange {
            what: what.clone(),
            family: self.family,
            n,
        })?;
        formula
            .evaluate(n, params)
            .map_err(|prime| ClosedFormError::NegativeExponent {
                what,
                family: self.family,
                n,
                prime,
            })
    }
}

fn alpha_power_exact(p: &AlphaPower, k: u32) -> BigUint {
    BigUint::from(p.base).pow(p.alpha_mul * k + p.offset)
}

fn alpha_power_real(p: &AlphaPower, alpha: f64) -> f64 {
    (p.base as f64).powf(f64::from(p.alpha_mul) * alpha + f64::from(p.offset))
}

impl Formula {
    /// Evaluates literally. The error carries the prime whose exponent
    /// came out negative.
    fn evaluate(&self, n: u32, params: Params) -> Result<IndexValue, u64> {
        let n = i64::from(n);
        match self {
            Formula::Literal(v) => Ok(IndexValue::Factored(
                FactoredInteger::from_u64(*v).expect("literal constants are positive"),
            )),
            Formula::Product(powers) => {
                let mut out = FactoredInteger::one();
                for pp in powers {
                    let e = BigInt::from(pp.exponent.eval(n))
                        * if pp.scaled_by_c {
                            BigInt::from(params.c)
                        } else {
                            BigInt::from(1)
                        };
                    let e = BigUint::try_from(e).map_err(|_| pp.prime)?;
                    out = out
                        * FactoredInteger::prime_power(pp.prime, e)
                            .expect("formula bases are prime");
                }
                Ok(IndexValue::Factored(out))
            }
            Formula::PowerSum(terms) => Ok(match integral_exponent(params.alpha) {
                Some(k) => IndexValue::Integer(
                    terms
                        .iter()
                        .map(|t| {
                            let prod: BigUint =
                                t.powers.iter().map(|p| alpha_power_exact(p, k)).product();
                            BigInt::from(t.coeff.eval(n)) * BigInt::from(prod)
                        })
                        .sum(),
                ),
                None => IndexValue::Real(
                    terms
                        .iter()
                        .map(|t| {
                            let prod: f64 = t
                                .powers
                                .iter()
                                .map(|p| alpha_power_real(p, params.alpha))
                                .product();
                            t.coeff.eval(n) as f64 * prod
                        })
                        .sum(),
                ),
            }),
        }
    }

    /// Symbolic rendering: `c` is the Π₁ exponent and `a` stands for α.
    pub fn render(&self) -> String {
        match self {
            Formula::Literal(v) => v.to_string(),
            Formula::Product(powers) => powers
                .iter()
                .map(|pp| {
                    if pp.scaled_by_c {
                        format!("{}^{{c({})}}", pp.prime, pp.exponent)
                    } else {
                        format!("{}^{{{}}}", pp.prime, pp.exponent)
                    }
                })
                .collect::<Vec<_>>()
                .join(" * "),
            Formula::PowerSum(terms) => terms
                .iter()
                .map(|t| {
                    let nonzero = t.coeff.coefficients().iter().filter(|&&c| c != 0).count();
                    let mut out = if nonzero > 1 {
                        format!("({})", t.coeff)
                    } else {
                        t.coeff.to_string()
                    };
                    for p in &t.powers {
                        let exp = match (p.alpha_mul, p.offset) {
                            (1, 0) => "a".to_string(),
                            (m, 0) => format!("{m}a"),
                            (1, o) => format!("a+{o}"),
                            (m, o) => format!("{m}a+{o}"),
                        };
                        out.push_str(&format!(" * {}^{{{exp}}}", p.base));
                    }
                    out
                })
                .collect::<Vec<_>>()
                .join(" + "),
        }
    }
}

fn prod(powers: &[(u64, Poly)]) -> Formula {
    Formula::Product(
        powers
            .iter()
            .map(|(prime, exponent)| PrimePower {
                prime: *prime,
                exponent: exponent.clone(),
                scaled_by_c: false,
            })
            .collect(),
    )
}

fn prod_c(powers: &[(u64, Poly)]) -> Formula {
    Formula::Product(
        powers
            .iter()
            .map(|(prime, exponent)| PrimePower {
                prime: *prime,
                exponent: exponent.clone(),
                scaled_by_c: true,
            })
            .collect(),
    )
}

fn term(coeff: Poly, powers: &[(u64, u32, u32)]) -> PowerTerm {
    PowerTerm {
        coeff,
        powers: powers
            .iter()
            .map(|&(base, alpha_mul, offset)| AlphaPower {
                base,
                alpha_mul,
                offset,
            })
            .collect(),
    }
}

/// The published closed form for `(family, index)`, if one exists.
///
/// Only `Π_{1,c}`, `Π_2`, `χ_α` and `Π_1^*` have closed forms. Hexagonal
/// formulas are declared from `n = 2` (vertex-derived) and `n = 3`
/// (edge-derived), matching where their partition tables hold.
pub fn index_formula(family: Family, index: IndexKind) -> Option<IndexFormula> {
    use IndexKind::*;
    let p = Poly::new;
    let all = Domain::from(1);
    let pieces = match (family, index) {
        (Family::Silicate, MultFirst) => {
            vec![(all, prod_c(&[(2, p(&[0, -3, 9])), (3, p(&[0, 3, 15]))]))]
        }
        (Family::Silicate, MultSecond) => {
            vec![(all, prod(&[(2, p(&[0, -18, 54])), (3, p(&[0, 0, 72]))]))]
        }
        (Family::Silicate, SumConnectivity) => vec![(
            all,
            Formula::PowerSum(vec![
                term(p(&[0, 1]), &[(6, 1, 1)]),
                term(p(&[0, 2, 6]), &[(3, 2, 1)]),
                term(p(&[0, -2, 3]), &[(2, 2, 1), (3, 1, 1)]),
            ]),
        )],
        (Family::Silicate, MultFirstStar) => {
            vec![(all, prod(&[(2, p(&[0, -18, 36])), (3, p(&[0, 6, 54]))]))]
        }

        (Family::ChainSilicate, MultFirst) => {
            vec![(all, prod_c(&[(2, p(&[-1, 1])), (3, p(&[1, 3]))]))]
        }
        (Family::ChainSilicate, MultSecond) => {
            vec![(all, prod(&[(2, p(&[-6, 6])), (3, p(&[0, 12]))]))]
        }
        (Family::ChainSilicate, SumConnectivity) => vec![
            (
                Domain::exactly(1),
                Formula::PowerSum(vec![term(p(&[1]), &[(6, 1, 1)])]),
            ),
            (
                Domain::from(2),
                Formula::PowerSum(vec![
                    term(p(&[4, 1]), &[(2, 1, 0), (3, 1, 0)]),
                    term(p(&[-2, 4]), &[(3, 2, 0)]),
                    term(p(&[-2, 1]), &[(2, 2, 0), (3, 1, 0)]),
                ]),
            ),
        ],
        (Family::ChainSilicate, MultFirstStar) => vec![
            (Domain::exactly(1), Formula::Literal(46656)),
            (Domain::from(2), prod(&[(2, p(&[0, 3])), (3, p(&[-2, 10]))])),
        ],

        (Family::Hexagonal, MultFirst) => {
            vec![(
                Domain::from(2),
                prod_c(&[(2, p(&[-17, 3, 3])), (3, p(&[13, -9, 3]))]),
            )]
        }
        (Family::Hexagonal, MultSecond) => {
            vec![(
                Domain::from(2),
                prod(&[(2, p(&[-56, -6, 18])), (3, p(&[60, -54, 18]))]),
            )]
        }
        (Family::Hexagonal, SumConnectivity) => vec![(
            Domain::from(3),
            Formula::PowerSum(vec![
                term(p(&[-9, 3]), &[(2, 3, 1)]),
                term(p(&[-2, 1]), &[(2, 1, 2), (3, 1, 1)]),
                term(p(&[-10, 11, -3]), &[(2, 2, 0), (3, 1, 1)]),
                term(p(&[12]), &[(7, 1, 0)]),
                term(p(&[6]), &[(3, 2, 0)]),
            ]),
        )],
        (Family::Hexagonal, MultFirstStar) => vec![(
            Domain::from(3),
            prod(&[
                (2, p(&[-18, -46, 18])),
                (3, p(&[42, -33, 9])),
                (5, p(&[-24, 12])),
                (7, p(&[12])),
            ]),
        )],

        (Family::Oxide, MultFirst) => vec![(all, prod_c(&[(2, p(&[0, 0, 18]))]))],
        (Family::Oxide, MultSecond) => vec![(all, prod(&[(2, p(&[0, -12, 72]))]))],
        (Family::Oxide, SumConnectivity) => vec![(
            all,
            Formula::PowerSum(vec![
                term(p(&[0, 1]), &[(2, 1, 2), (3, 1, 1)]),
                term(p(&[0, -6, 9]), &[(2, 3, 1)]),
            ]),
        )],
        (Family::Oxide, MultFirstStar) => {
            vec![(all, prod(&[(2, p(&[0, -24, 54])), (3, p(&[0, 12]))]))]
        }

        (Family::Honeycomb, MultFirst) => {
            vec![(all, prod_c(&[(2, p(&[0, 6])), (3, p(&[0, -6, 6]))]))]
        }
        (Family::Honeycomb, MultSecond) => {
            vec![(all, prod(&[(2, p(&[0, 12])), (3, p(&[0, -18, 18]))]))]
        }
        (Family::Honeycomb, SumConnectivity) => vec![(
            all,
            Formula::PowerSum(vec![
                term(p(&[3]), &[(2, 2, 1)]),
                term(p(&[-12, 12]), &[(5, 1, 0)]),
                term(p(&[2, -5, 3]), &[(2, 1, 0), (3, 1, 1)]),
            ]),
        )],
        (Family::Honeycomb, MultFirstStar) => vec![(
            all,
            prod(&[
                (2, p(&[18, -15, 9])),
                (3, p(&[6, -15, 9])),
                (5, p(&[-12, 12])),
            ]),
        )],

        (_, FirstZagreb | SecondZagreb | NarumiKatayama) => return None,
    };
    Some(IndexFormula {
        family,
        index,
        pieces,
    })
}

/// Evaluates the published closed form literally.
pub fn formula_value(
    family: Family,
    index: IndexKind,
    n: u32,
    params: Params,
) -> Result<IndexValue, ClosedFormError> {
    let formula = index_formula(family, index).ok_or_else(|| ClosedFormError::OutOfRange {
        what: format!("{index} closed form"),
        family,
        n,
    })?;
    formula.evaluate(n, params)
}
