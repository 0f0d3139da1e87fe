//! Permittivity profiles ε(z, iζ) of the background medium.
//!
//! Every profile is evaluated on the imaginary frequency axis, where a
//! dissipationless permittivity is real and positive. A profile knows the
//! nearest real-axis singular point of its analytic continuation; the
//! background solution of the mode equation is anchored there.

use crate::error::{Error, Result};

/// Orientation of the inverse-square profile: `Minus` places the
/// singularity at `z = +a` (medium fills `z < a`), `Plus` at `z = -a`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InvSqSign {
    Minus,
    Plus,
}

impl InvSqSign {
    pub fn as_str(self) -> &'static str {
        match self {
            InvSqSign::Minus => "minus",
            InvSqSign::Plus => "plus",
        }
    }
}

/// A frequency-dependent multiplier r(ζ²) = P(ζ²)/Q(ζ²) applied to ε − 1
/// of a wrapped profile. Coefficients are in ascending powers of ζ².
#[derive(Debug, Clone, PartialEq)]
pub struct RationalZeta2 {
    pub numerator: Vec<f64>,
    pub denominator: Vec<f64>,
}

impl RationalZeta2 {
    pub fn eval(&self, zeta: f64) -> f64 {
        let z2 = zeta * zeta;
        let horner = |c: &[f64]| c.iter().rev().fold(0.0, |acc, &a| acc * z2 + a);
        horner(&self.numerator) / horner(&self.denominator)
    }
}

/// A permittivity profile ε(z, iζ).
#[derive(Debug, Clone, PartialEq)]
pub enum PermittivityProfile {
    /// ε ≡ 1. Evaluates bit-identically to `Constant { eps0: 1.0 }`.
    Vacuum,
    /// ε ≡ ε₀ > 0.
    Constant { eps0: f64 },
    /// ε(z) = λ/(a∓z)²; `Minus` is λ/(a−z)², `Plus` is λ/(a+z)².
    InverseSquare { lambda: f64, a: f64, sign: InvSqSign },
    /// ε(z,ζ) = 1 + r(ζ²)·(ε_inner(z,ζ) − 1): the wrapped profile with its
    /// susceptibility rescaled by a rational function of ζ².
    Scaled {
        inner: Box<PermittivityProfile>,
        multiplier: RationalZeta2,
    },
}

impl PermittivityProfile {
    pub fn vacuum() -> Self {
        PermittivityProfile::Vacuum
    }

    pub fn constant(eps0: f64) -> Result<Self> {
        if !(eps0 > 0.0) || !eps0.is_finite() {
            return Err(Error::Config(format!(
                "constant profile requires eps0 > 0, got {eps0}"
            )));
        }
        Ok(PermittivityProfile::Constant { eps0 })
    }

    pub fn inverse_square(lambda: f64, a: f64, sign: InvSqSign) -> Result<Self> {
        if !(lambda > 0.0) || !lambda.is_finite() {
            return Err(Error::Config(format!(
                "inverse-square profile requires lambda > 0, got {lambda}"
            )));
        }
        if !(a > 0.0) || !a.is_finite() {
            return Err(Error::Config(format!(
                "inverse-square profile requires a > 0, got {a}"
            )));
        }
        Ok(PermittivityProfile::InverseSquare { lambda, a, sign })
    }

    pub fn scaled(inner: PermittivityProfile, multiplier: RationalZeta2) -> Result<Self> {
        if multiplier.numerator.is_empty() || multiplier.denominator.is_empty() {
            return Err(Error::Config(
                "scaled profile requires non-empty multiplier polynomials".into(),
            ));
        }
        Ok(PermittivityProfile::Scaled {
            inner: Box::new(inner),
            multiplier,
        })
    }

    /// ε(z, iζ). `z` must lie strictly inside the analytic region.
    pub fn eval(&self, z: f64, zeta: f64) -> Result<f64> {
        self.check_in_region(z)?;
        Ok(self.eval_unchecked(z, zeta))
    }

    /// ε(z, iζ) without the region check; callers on hot paths check once.
    pub fn eval_unchecked(&self, z: f64, zeta: f64) -> f64 {
        match self {
            PermittivityProfile::Vacuum => 1.0,
            PermittivityProfile::Constant { eps0 } => *eps0,
            PermittivityProfile::InverseSquare { lambda, a, sign } => {
                let t = match sign {
                    InvSqSign::Minus => a - z,
                    InvSqSign::Plus => a + z,
                };
                lambda / (t * t)
            }
            PermittivityProfile::Scaled { inner, multiplier } => {
                1.0 + multiplier.eval(zeta) * (inner.eval_unchecked(z, zeta) - 1.0)
            }
        }
    }

    /// dε/dz at fixed ζ.
    pub fn eval_dz_unchecked(&self, z: f64, zeta: f64) -> f64 {
        match self {
            PermittivityProfile::Vacuum | PermittivityProfile::Constant { .. } => 0.0,
            PermittivityProfile::InverseSquare { lambda, a, sign } => match sign {
                InvSqSign::Minus => {
                    let t = a - z;
                    2.0 * lambda / (t * t * t)
                }
                InvSqSign::Plus => {
                    let t = a + z;
                    -2.0 * lambda / (t * t * t)
                }
            },
            PermittivityProfile::Scaled { inner, multiplier } => {
                multiplier.eval(zeta) * inner.eval_dz_unchecked(z, zeta)
            }
        }
    }

    /// Location of the nearest real-axis singular point of the analytic
    /// continuation. `-inf` for entire profiles.
    pub fn singularity(&self) -> f64 {
        match self {
            PermittivityProfile::Vacuum | PermittivityProfile::Constant { .. } => f64::NEG_INFINITY,
            PermittivityProfile::InverseSquare { a, sign, .. } => match sign {
                InvSqSign::Minus => *a,
                InvSqSign::Plus => -*a,
            },
            PermittivityProfile::Scaled { inner, .. } => inner.singularity(),
        }
    }

    /// For profiles diverging like c/(z_s − z)² at a finite singularity z_s,
    /// the coefficient c (which may depend on ζ). `None` for entire profiles.
    pub fn quadratic_singularity_coeff(&self, zeta: f64) -> Option<f64> {
        match self {
            PermittivityProfile::Vacuum | PermittivityProfile::Constant { .. } => None,
            PermittivityProfile::InverseSquare { lambda, .. } => Some(*lambda),
            PermittivityProfile::Scaled { inner, multiplier } => inner
                .quadratic_singularity_coeff(zeta)
                .map(|c| multiplier.eval(zeta) * c),
        }
    }

    fn check_in_region(&self, z: f64) -> Result<()> {
        if !z.is_finite() {
            return Err(Error::Domain(format!("position z = {z} is not finite")));
        }
        let zs = self.singularity();
        let inside = match self {
            PermittivityProfile::InverseSquare { sign, .. } => match sign {
                InvSqSign::Minus => z < zs,
                InvSqSign::Plus => z > zs,
            },
            PermittivityProfile::Scaled { inner, .. } => return inner.check_in_region(z),
            _ => true,
        };
        if inside {
            Ok(())
        } else {
            Err(Error::Domain(format!(
                "z = {z} is at or beyond the permittivity singularity at z = {zs}"
            )))
        }
    }

    /// Smallest ε on [z_lo, z_hi] at frequency ζ, by dense sampling.
    /// Used to bound the decay rate of spectral integrands.
    pub fn min_on(&self, z_lo: f64, z_hi: f64, zeta: f64) -> f64 {
        let n = 64;
        let mut m = f64::INFINITY;
        for i in 0..=n {
            let z = z_lo + (z_hi - z_lo) * (i as f64) / (n as f64);
            m = m.min(self.eval_unchecked(z, zeta));
        }
        m
    }

    /// The `SPEC` grammar used by the CLI: `vacuum`, `constant:EPS`,
    /// `invsq:LAMBDA,A,SIGN` with SIGN one of `minus`, `plus`.
    pub fn parse(spec: &str) -> Result<Self> {
        let spec = spec.trim();
        if spec == "vacuum" {
            return Ok(PermittivityProfile::Vacuum);
        }
        if let Some(rest) = spec.strip_prefix("constant:") {
            let eps0 = rest
                .trim()
                .parse::<f64>()
                .map_err(|_| Error::Config(format!("cannot parse epsilon in '{spec}'")))?;
            return PermittivityProfile::constant(eps0);
        }
        if let Some(rest) = spec.strip_prefix("invsq:") {
            let parts: Vec<&str> = rest.split(',').map(str::trim).collect();
            if parts.len() != 3 {
                return Err(Error::Config(format!(
                    "invsq spec needs LAMBDA,A,SIGN, got '{spec}'"
                )));
            }
            let lambda = parts[0]
                .parse::<f64>()
                .map_err(|_| Error::Config(format!("cannot parse lambda in '{spec}'")))?;
            let a = parts[1]
                .parse::<f64>()
                .map_err(|_| Error::Config(format!("cannot parse a in '{spec}'")))?;
            let sign = match parts[2] {
                "minus" => InvSqSign::Minus,
                "plus" => InvSqSign::Plus,
                other => {
                    return Err(Error::Config(format!(
                        "sign must be 'minus' or 'plus', got '{other}'"
                    )))
                }
            };
            return PermittivityProfile::inverse_square(lambda, a, sign);
        }
        Err(Error::Config(format!(
            "unknown profile spec '{spec}' (expected vacuum | constant:EPS | invsq:LAMBDA,A,SIGN)"
        )))
    }

    /// Canonical spec string (inverse of `parse` for the CLI kinds).
    pub fn spec_string(&self) -> String {
        match self {
            PermittivityProfile::Vacuum => "vacuum".into(),
            PermittivityProfile::Constant { eps0 } => format!("constant:{eps0}"),
            PermittivityProfile::InverseSquare { lambda, a, sign } => {
                format!("invsq:{lambda},{a},{}", sign.as_str())
            }
            PermittivityProfile::Scaled { inner, .. } => {
                format!("scaled({})", inner.spec_string())
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn constant_eval() {
        let p = PermittivityProfile::constant(4.0).unwrap();
        assert_eq!(p.eval(0.3, 2.0).unwrap(), 4.0);
        assert_eq!(p.eval(-17.0, 0.0).unwrap(), 4.0);
    }

    #[test]
    fn invsq_values_from_the_two_orientations() {
        let m = PermittivityProfile::inverse_square(1.0, 1.0, InvSqSign::Minus).unwrap();
        assert_eq!(m.eval(0.0, 1.0).unwrap(), 1.0);
        let p = PermittivityProfile::inverse_square(1.0, 1.0, InvSqSign::Plus).unwrap();
        assert_eq!(p.eval(1.0, 0.3).unwrap(), 0.25);
    }

    #[test]
    fn singularities() {
        assert_eq!(
            PermittivityProfile::constant(2.0).unwrap().singularity(),
            f64::NEG_INFINITY
        );
        assert_eq!(
            PermittivityProfile::inverse_square(1.0, 1.0, InvSqSign::Minus)
                .unwrap()
                .singularity(),
            1.0
        );
        assert_eq!(
            PermittivityProfile::inverse_square(1.0, 1.0, InvSqSign::Plus)
                .unwrap()
                .singularity(),
            -1.0
        );
    }

    #[test]
    fn eval_at_or_beyond_singularity_is_domain_error() {
        let m = PermittivityProfile::inverse_square(1.0, 1.0, InvSqSign::Minus).unwrap();
        for z in [1.0, 1.5] {
            let err = m.eval(z, 1.0).unwrap_err();
            assert!(matches!(err, Error::Domain(_)));
            assert!(err.to_string().contains("z = 1"));
        }
        assert!(m.eval(0.999_999, 1.0).is_ok());
    }

    #[test]
    fn vacuum_is_bit_identical_to_unit_constant() {
        let v = PermittivityProfile::vacuum();
        let c = PermittivityProfile::constant(1.0).unwrap();
        for z in [-3.0, 0.0, 0.7, 42.0] {
            for zeta in [0.0, 1.0, 17.5] {
                assert_eq!(
                    v.eval(z, zeta).unwrap().to_bits(),
                    c.eval(z, zeta).unwrap().to_bits()
                );
            }
        }
    }

    #[test]
    fn eps_prime_matches_finite_differences() {
        let profiles = [
            PermittivityProfile::inverse_square(1.3, 0.8, InvSqSign::Minus).unwrap(),
            PermittivityProfile::inverse_square(2.0, 1.5, InvSqSign::Plus).unwrap(),
        ];
        for p in &profiles {
            for z in [-0.3, 0.0, 0.4] {
                let h = 1e-6;
                let fd =
                    (p.eval_unchecked(z + h, 1.0) - p.eval_unchecked(z - h, 1.0)) / (2.0 * h);
                let an = p.eval_dz_unchecked(z, 1.0);
                assert!((fd - an).abs() <= 1e-6 * an.abs().max(1.0), "z={z}");
            }
        }
    }

    #[test]
    fn scaled_profile_is_positive_and_zeta_dependent() {
        let inner = PermittivityProfile::inverse_square(1.0, 1.0, InvSqSign::Plus).unwrap();
        // Drude-like relaxation of the susceptibility: r = 1/(1 + zeta^2).
        let p = PermittivityProfile::scaled(
            inner,
            RationalZeta2 {
                numerator: vec![1.0],
                denominator: vec![1.0, 1.0],
            },
        )
        .unwrap();
        let e0 = p.eval(0.5, 0.0).unwrap();
        let e1 = p.eval(0.5, 3.0).unwrap();
        assert!(e0 > 0.0 && e1 > 0.0);
        assert!(e0 != e1);
        // zeta -> inf: susceptibility dies, eps -> 1
        let einf = p.eval(0.5, 1e8).unwrap();
        assert!((einf - 1.0).abs() < 1e-10);
        // singularity metadata passes through
        assert_eq!(p.singularity(), -1.0);
        let c = p.quadratic_singularity_coeff(1.0).unwrap();
        assert!((c - 0.5).abs() < 1e-15);
    }

    #[test]
    fn grammar_round_trip_and_errors() {
        for s in ["vacuum", "constant:4", "invsq:1.0,1.0,minus", "invsq:2.5,0.5,plus"] {
            let p = PermittivityProfile::parse(s).unwrap();
            let p2 = PermittivityProfile::parse(&p.spec_string()).unwrap();
            assert_eq!(p, p2);
        }
        assert!(PermittivityProfile::parse("invsq:1,1").is_err());
        assert!(PermittivityProfile::parse("invsq:1,1,down").is_err());
        assert!(PermittivityProfile::parse("constant:-3").is_err());
        assert!(PermittivityProfile::parse("metal").is_err());
    }
}
