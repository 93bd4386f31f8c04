//! Material models and their analytic permittivity.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::SceneError;

/// Speed of light in m/s, used to convert laboratory resonance
/// frequencies (rad/s) into internal units of c/a.
pub const C_M_PER_S: f64 = 2.997_924_58e8;

/// One undamped Lorentz resonance: contributes `c w0^2 / (w0^2 - w^2)`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LorentzTerm {
    /// Oscillator strength (dimensionless).
    pub c: f64,
    /// Resonance frequency, internal units c/a.
    pub omega: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum MaterialKind {
    Vacuum,
    /// Perfect electric conductor: tangential E forced to zero.
    Pec,
    /// Perfect magnetic conductor: tangential H forced to zero.
    Pmc,
    /// Nondispersive dielectric (also used for fluids).
    Dielectric { eps: f64 },
    /// `eps(w) = eps_f + sum_j c_j w_j^2 / (w_j^2 - w^2)`.
    Lorentz { eps_f: f64, resonances: Vec<LorentzTerm> },
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MaterialModel {
    pub name: String,
    #[serde(flatten)]
    pub kind: MaterialKind,
}

impl MaterialModel {
    pub fn vacuum() -> Self {
        MaterialModel { name: "vacuum".into(), kind: MaterialKind::Vacuum }
    }

    pub fn pec() -> Self {
        MaterialModel { name: "pec".into(), kind: MaterialKind::Pec }
    }

    pub fn pmc() -> Self {
        MaterialModel { name: "pmc".into(), kind: MaterialKind::Pmc }
    }

    pub fn dielectric(name: &str, eps: f64) -> Self {
        MaterialModel { name: name.into(), kind: MaterialKind::Dielectric { eps } }
    }

    /// Silicon single-resonance model, `w0 = 6.6e15 rad/s`,
    /// `eps_0 = 1.035`, `eps_f = 11.87`.
    ///
    /// The published numerator reads `(eps_f - eps_0)`, which gives a
    /// static permittivity of 22.705; that looks like a sign typo for
    /// `(eps_0 - eps_f)` but is implemented verbatim. Pass
    /// `swapped_sign = true` to get the alternate numerator instead; the
    /// scenario-file switch `silicon-swapped` maps to it.
    pub fn silicon(length_scale_um: f64, swapped_sign: bool) -> Self {
        let eps_0 = 1.035;
        let eps_f = 11.87;
        let omega = rad_s_to_internal(6.6e15, length_scale_um);
        let c = if swapped_sign { eps_0 - eps_f } else { eps_f - eps_0 };
        MaterialModel {
            name: if swapped_sign { "silicon-swapped".into() } else { "silicon".into() },
            kind: MaterialKind::Lorentz { eps_f, resonances: vec![LorentzTerm { c, omega }] },
        }
    }

    /// Three-resonance silica model,
    /// `(C_) = (0.829, 0.095, 1.098)`, `(w_) = (0.867, 1.508, 203.4)e14 rad/s`.
    pub fn silica(length_scale_um: f64) -> Self {
        let cs = [0.829, 0.095, 1.098];
        let ws = [0.867e14, 1.508e14, 203.4e14];
        MaterialModel {
            name: "silica".into(),
            kind: MaterialKind::Lorentz {
                eps_f: 1.0,
                resonances: cs
                    .iter()
                    .zip(&ws)
                    .map(|(&c, &w)| LorentzTerm { c, omega: rad_s_to_internal(w, length_scale_um) })
                    .collect(),
            },
        }
    }

    pub fn is_conductor(&self) -> bool {
        matches!(self.kind, MaterialKind::Pec | MaterialKind::Pmc)
    }

    pub fn validate(&self) -> Result<(), SceneError> {
        match &self.kind {
            MaterialKind::Dielectric { eps } => {
                if !(*eps >= 1.0) {
                    return Err(SceneError::Validation(format!(
                        "material '{}': dielectric eps = {eps} must be >= 1",
                        self.name
                    )));
                }
            }
            MaterialKind::Lorentz { eps_f, resonances } => {
                if !(*eps_f >= 1.0) {
                    return Err(SceneError::Validation(format!(
                        "material '{}': eps_f = {eps_f} must be >= 1",
                        self.name
                    )));
                }
                for r in resonances {
                    if !(r.omega > 0.0) {
                        return Err(SceneError::Validation(format!(
                            "material '{}': resonance frequency must be positive",
                            self.name
                        )));
                    }
                }
            }
            _ => {}
        }
        Ok(())
    }
}

/// Convert a laboratory angular frequency (rad/s) to internal units of
/// c/a given the physical size of the unit length `a` in micrometres.
pub fn rad_s_to_internal(omega_rad_s: f64, length_scale_um: f64) -> f64 {
    omega_rad_s * length_scale_um * 1e-6 / C_M_PER_S
}

/// Analytic permittivity at a (generally complex) frequency.
///
/// Used both by the auxiliary-equation coefficient setup and by the
/// oracles, which evaluate on the positive imaginary axis where every
/// shipped model is real and >= 1.
pub fn epsilon_at(model: &MaterialModel, omega: Complex64) -> Result<Complex64, SceneError> {
    match &model.kind {
        MaterialKind::Vacuum => Ok(Complex64::new(1.0, 0.0)),
        MaterialKind::Pec | MaterialKind::Pmc => Err(SceneError::ConductorPermittivity),
        MaterialKind::Dielectric { eps } => Ok(Complex64::new(*eps, 0.0)),
        MaterialKind::Lorentz { eps_f, resonances } => {
            let mut acc = Complex64::new(*eps_f, 0.0);
            for r in resonances {
                let w0sq = r.omega * r.omega;
                let denom = w0sq - omega * omega;
                if denom.norm() < 1e-12 * w0sq {
                    return Err(SceneError::PermittivityPole(omega));
                }
                acc += r.c * w0sq / denom;
            }
            Ok(acc)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    #[test]
    fn vacuum_is_unity_everywhere() {
        let v = MaterialModel::vacuum();
        for w in [Complex64::new(0.0, 0.0), Complex64::new(3.0, 0.4), Complex64::new(0.0, 17.0)] {
            assert_eq!(epsilon_at(&v, w).unwrap(), Complex64::new(1.0, 0.0));
        }
    }

    #[test]
    fn silicon_static_value_as_printed() {
        // eps(0) = eps_f + (eps_f - eps_0) = 2*11.87 - 1.035
        let si = MaterialModel::silicon(1.0, false);
        let e0 = epsilon_at(&si, Complex64::new(0.0, 0.0)).unwrap();
        assert_abs_diff_eq!(e0.re, 22.705, epsilon = 1e-12);
        assert_abs_diff_eq!(e0.im, 0.0, epsilon = 1e-300);
        // swapped-numerator variant gives eps(0) = eps_0
        let si2 = MaterialModel::silicon(1.0, true);
        let e02 = epsilon_at(&si2, Complex64::new(0.0, 0.0)).unwrap();
        assert_abs_diff_eq!(e02.re, 1.035, epsilon = 1e-12);
    }

    #[test]
    fn silica_static_value() {
        let s = MaterialModel::silica(1.0);
        let e0 = epsilon_at(&s, Complex64::new(0.0, 0.0)).unwrap();
        assert_abs_diff_eq!(e0.re, 1.0 + 0.829 + 0.095 + 1.098, epsilon = 1e-12);
    }

    #[test]
    fn pole_is_a_domain_error() {
        let si = MaterialModel::silicon(1.0, false);
        let w0 = rad_s_to_internal(6.6e15, 1.0);
        assert!(epsilon_at(&si, Complex64::new(w0, 0.0)).is_err());
    }

    #[test]
    fn conductors_are_not_evaluable() {
        assert!(epsilon_at(&MaterialModel::pec(), Complex64::new(1.0, 0.0)).is_err());
    }

    #[test]
    fn imaginary_axis_is_real_and_at_least_one() {
        // needed by the Lifshitz oracle for every shipped model
        let models = [
            MaterialModel::vacuum(),
            MaterialModel::dielectric("fluid", 4.30),
            MaterialModel::silicon(1.0, false),
            MaterialModel::silica(1.0),
        ];
        for m in &models {
            for &xi in &[1e-4, 0.3, 2.0, 40.0, 1e4] {
                let e = epsilon_at(m, Complex64::new(0.0, xi)).unwrap();
                assert_abs_diff_eq!(e.im, 0.0, epsilon = 1e-14);
                assert!(e.re >= 1.0 - 1e-12, "{} at xi={xi}: {}", m.name, e.re);
            }
        }
    }

    #[test]
    fn lorentz_validation() {
        let bad = MaterialModel {
            name: "bad".into(),
            kind: MaterialKind::Lorentz {
                eps_f: 0.5,
                resonances: vec![LorentzTerm { c: 1.0, omega: 1.0 }],
            },
        };
        assert!(bad.validate().is_err());
        let bad2 = MaterialModel {
            name: "bad2".into(),
            kind: MaterialKind::Lorentz {
                eps_f: 2.0,
                resonances: vec![LorentzTerm { c: 1.0, omega: -3.0 }],
            },
        };
        assert!(bad2.validate().is_err());
    }
}
