//! Browser bindings for the demo page in `www/`.
//!
//! Each exported function takes plain strings and numbers and returns a JSON
//! document, so the page needs no generated type definitions beyond the
//! function signatures. The computations live in ordinary functions that
//! return `Result<String, String>`, which keeps them testable natively.

use serde::Serialize;
use wasm_bindgen::prelude::*;

use nsgp_core::dissonance::QuasiExtension;
use nsgp_core::factorization::{invariant_table, DEFAULT_ENUMERATION_CAP};
use nsgp_core::hilbert::{numerator_chi, numerator_chi_f, numerator_chihat_f, Settings};
use nsgp_core::{
    DissonanceReport, InvariantId, NumericalSemigroup, SparsePolynomial, SquarefreeDivisorComplex,
};

/// Largest `n` the profile and complex views will tabulate.
pub const MAX_PROFILE: u64 = 20_000;

fn semigroup(gens: &str) -> Result<NumericalSemigroup, String> {
    let parsed: Vec<u64> = gens
        .split(|c: char| c == ',' || c.is_whitespace())
        .filter(|part| !part.is_empty())
        .map(|part| {
            part.parse()
                .map_err(|_| format!("not a nonnegative integer: {part:?}"))
        })
        .collect::<Result<_, _>>()?;
    NumericalSemigroup::new(&parsed).map_err(|e| e.to_string())
}

fn invariant(name: &str) -> Result<InvariantId, String> {
    InvariantId::from_name(name).ok_or_else(|| format!("unknown invariant {name:?}"))
}

fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("plain data serializes")
}

#[derive(Serialize)]
struct Numerator {
    text: String,
    terms: SparsePolynomial,
    certified_to: Option<u64>,
    stable: bool,
}

impl Numerator {
    fn from_report(r: nsgp_core::NumeratorReport) -> Self {
        Self {
            text: r.poly.to_string(),
            terms: r.poly,
            certified_to: r.certified_to,
            stable: r.stable,
        }
    }
}

#[derive(Serialize)]
struct Numerators {
    generators: Vec<u64>,
    frobenius: i64,
    invariant: &'static str,
    denominator: String,
    chi: Numerator,
    chi_f: Numerator,
    chihat_f: Numerator,
}

/// The χ, χ_f and χ̂_f numerators of `S` for one invariant.
pub fn numerators_json(gens: &str, inv: &str) -> Result<String, String> {
    let s = semigroup(gens)?;
    let f = invariant(inv)?;
    let settings = Settings::default();
    let chi = numerator_chi(&s, &settings).map_err(|e| e.to_string())?;
    let chi_f = numerator_chi_f(&s, f, &settings).map_err(|e| e.to_string())?;
    let chihat_f = numerator_chihat_f(&s, f, &settings).map_err(|e| e.to_string())?;
    Ok(to_json(&Numerators {
        generators: s.generators().to_vec(),
        frobenius: s.frobenius(),
        invariant: f.name(),
        denominator: chi.denominator_text(),
        chi: Numerator::from_report(chi),
        chi_f: Numerator::from_report(chi_f),
        chihat_f: Numerator::from_report(chihat_f),
    }))
}

#[derive(Serialize)]
struct Profile {
    invariant: &'static str,
    frobenius: i64,
    members: Vec<bool>,
    f: Vec<i64>,
    /// Quasilinear extension, present for the maximum and minimum length.
    g: Option<Vec<i64>>,
    dissonance: Option<i64>,
    harmonic: Option<bool>,
}

/// `f(0..=upto)` together with `g` and the dissonance point when defined.
pub fn invariant_profile_json(gens: &str, inv: &str, upto: u64) -> Result<String, String> {
    if upto > MAX_PROFILE {
        return Err(format!("range too large (at most {MAX_PROFILE})"));
    }
    let s = semigroup(gens)?;
    let f = invariant(inv)?;
    let table = invariant_table(&s, f, upto, DEFAULT_ENUMERATION_CAP).map_err(|e| e.to_string())?;
    let members = (0..=upto as i64).map(|n| s.contains(n)).collect();
    let (g, dissonance, harmonic) = match f {
        InvariantId::MaxLen | InvariantId::MinLen => {
            let ext = QuasiExtension::new(&s, f, None, DEFAULT_ENUMERATION_CAP)
                .map_err(|e| e.to_string())?;
            let report =
                DissonanceReport::new(&s, f, &Settings::default()).map_err(|e| e.to_string())?;
            let g = (0..=upto as i64).map(|n| ext.eval(n)).collect();
            (
                Some(g),
                report.D_bruteforce.or(report.D_formula),
                Some(report.harmonic),
            )
        }
        _ => (None, None, None),
    };
    Ok(to_json(&Profile {
        invariant: f.name(),
        frobenius: s.frobenius(),
        members,
        f: table.values,
        g,
        dissonance,
        harmonic,
    }))
}

#[derive(Serialize)]
struct Complex {
    n: u64,
    generators: Vec<u64>,
    faces: Vec<Vec<u64>>,
    chi: i64,
    chi_f: i64,
    chihat_f: i64,
}

/// Faces of `Δ_n` and its three Euler characteristics.
pub fn divisor_complex_json(gens: &str, n: u64, inv: &str) -> Result<String, String> {
    if n > MAX_PROFILE {
        return Err(format!("n too large (at most {MAX_PROFILE})"));
    }
    let s = semigroup(gens)?;
    let f = invariant(inv)?;
    let table = invariant_table(&s, f, n, DEFAULT_ENUMERATION_CAP).map_err(|e| e.to_string())?;
    let d = SquarefreeDivisorComplex::new(&s, n);
    Ok(to_json(&Complex {
        n,
        generators: s.generators().to_vec(),
        faces: d.faces_as_generators(&s),
        chi: d.euler_char(),
        chi_f: d.weighted_euler(&s, &table).map_err(|e| e.to_string())?,
        chihat_f: d.augmented_euler(&s, &table).map_err(|e| e.to_string())?,
    }))
}

#[wasm_bindgen]
pub fn numerators(gens: &str, invariant: &str) -> Result<String, JsError> {
    numerators_json(gens, invariant).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn invariant_profile(gens: &str, invariant: &str, upto: u32) -> Result<String, JsError> {
    invariant_profile_json(gens, invariant, upto as u64).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn divisor_complex(gens: &str, n: u32, invariant: &str) -> Result<String, JsError> {
    divisor_complex_json(gens, n as u64, invariant).map_err(|e| JsError::new(&e))
}
