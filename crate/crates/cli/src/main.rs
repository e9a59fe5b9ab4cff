use std::fmt;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::json;

use nsgp_core::factorization::{generator_gap_gcd, invariant_table, DEFAULT_ENUMERATION_CAP};
use nsgp_core::hilbert::{
    numerator_apery, numerator_chi, numerator_chi_f, numerator_chihat_f,
    numerator_second_difference, one_minus_t_form, twogen_closed_forms, Settings,
};
use nsgp_core::{
    DissonanceReport, Error, GluingSpec, InvariantId, NumeratorForm, NumeratorReport,
    NumericalSemigroup, SquarefreeDivisorComplex,
};

#[derive(Parser, Debug)]
#[command(
    name = "nsgp",
    version,
    about = "Factorization invariants and Hilbert series numerators of numerical semigroups"
)]
struct Cli {
    #[command(flatten)]
    opts: Opts,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args, Debug)]
struct Opts {
    /// Truncation degree N for series computations.
    #[arg(long, global = true, env = "NSGP_TRUNC")]
    trunc: Option<u64>,
    /// Stability window W: numerator terms must vanish on (N - W, N].
    #[arg(long, global = true)]
    window: Option<u64>,
    /// Maximum number of factorizations enumerated for a single element.
    #[arg(long, global = true, default_value_t = DEFAULT_ENUMERATION_CAP)]
    cap: u64,
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Frobenius number, Apéry set of the multiplicity, minimality.
    Info {
        #[arg(value_parser = parse_gens)]
        gens: Gens,
    },
    /// Numerator of the Hilbert series H(S;t).
    Hilbert {
        #[arg(value_parser = parse_gens)]
        gens: Gens,
        /// One of apery, chi, oneminust.
        #[arg(long, default_value = "chi", value_parser = parse_form)]
        form: NumeratorForm,
        /// Apéry element p (defaults to the multiplicity).
        #[arg(long)]
        p: Option<u64>,
    },
    /// Numerator of the augmented Hilbert series H_f(S;t).
    Augmented {
        #[arg(value_parser = parse_gens)]
        gens: Gens,
        #[arg(long, default_value = "max", value_parser = parse_invariant)]
        invariant: InvariantId,
        /// One of chi, chihat, secdiff, closed2gen.
        #[arg(long, default_value = "chihat", value_parser = parse_form)]
        form: NumeratorForm,
        /// Shift p of the second difference (defaults to the multiplicity).
        #[arg(long)]
        p: Option<u64>,
    },
    /// Dissonance point of the maximum or minimum length (always JSON).
    Dissonance {
        #[arg(value_parser = parse_gens)]
        gens: Gens,
        #[arg(long, default_value = "max", value_parser = parse_invariant)]
        invariant: InvariantId,
    },
    /// Builds d1 S1 + d2 S2 and checks the gluing identities.
    Glue {
        #[arg(value_parser = parse_gens)]
        s1: Gens,
        #[arg(value_parser = parse_gens)]
        s2: Gens,
        d1: u64,
        d2: u64,
        #[arg(long, default_value = "max", value_parser = parse_invariant)]
        invariant: InvariantId,
    },
    /// Squarefree divisor complex of n with its Euler characteristics.
    Complex {
        #[arg(value_parser = parse_gens)]
        gens: Gens,
        n: u64,
        #[arg(long, default_value = "max", value_parser = parse_invariant)]
        invariant: InvariantId,
    },
}

/// A comma-separated generator list such as `6,9,20`.
#[derive(Debug, Clone)]
struct Gens(Vec<u64>);

fn parse_gens(text: &str) -> Result<Gens, String> {
    text.split(',')
        .map(|part| {
            part.trim()
                .parse::<u64>()
                .map_err(|_| format!("not a nonnegative integer: {part:?}"))
        })
        .collect::<Result<_, _>>()
        .map(Gens)
}

fn parse_invariant(text: &str) -> Result<InvariantId, String> {
    InvariantId::from_name(text)
        .ok_or_else(|| format!("unknown invariant {text:?} (max, min, numlens, linf)"))
}

fn parse_form(text: &str) -> Result<NumeratorForm, String> {
    NumeratorForm::from_name(text).ok_or_else(|| {
        format!("unknown form {text:?} (apery, chi, chihat, secdiff, oneminust, closed2gen)")
    })
}

/// A failure with its exit status and a stable, machine-readable code.
#[derive(Debug)]
struct Failure {
    code: &'static str,
    message: String,
    status: u8,
}

impl Failure {
    fn usage(code: &'static str, message: impl Into<String>) -> Self {
        Self {
            code,
            message: message.into(),
            status: 2,
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let status = match e {
            Error::NotStable { .. } => 3,
            Error::ExplosionGuard { .. } => 4,
            Error::EmptyGenerators
            | Error::ZeroGenerator
            | Error::GcdNotOne(_)
            | Error::GeneratorTooLarge(_)
            | Error::TooManyGenerators { .. }
            | Error::NotAnElement(_)
            | Error::SingleGenerator
            | Error::NotTwoGenerated
            | Error::UnsupportedInvariant(_)
            | Error::NoDecomposition(_)
            | Error::Parse(_) => 2,
            _ => 1,
        };
        Self {
            code: e.code(),
            message: e.to_string(),
            status,
        }
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "error[{}]: {}", self.code, self.message)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            println!("{out}");
            ExitCode::SUCCESS
        }
        Err(failure) => {
            eprintln!("{failure}");
            ExitCode::from(failure.status)
        }
    }
}

fn run(cli: &Cli) -> Result<String, Failure> {
    let opts = &cli.opts;
    let settings = Settings {
        trunc: opts.trunc,
        window: opts.window,
        cap: opts.cap,
    };
    match &cli.cmd {
        Cmd::Info { gens } => info(&NumericalSemigroup::new(&gens.0)?, opts.json),
        Cmd::Hilbert { gens, form, p } => {
            let s = NumericalSemigroup::new(&gens.0)?;
            let report = match form {
                NumeratorForm::Apery => numerator_apery(&s, p.unwrap_or(s.first()))?,
                NumeratorForm::Chi => numerator_chi(&s, &settings)?,
                NumeratorForm::OneMinusT => one_minus_t_form(&s),
                other => {
                    return Err(Failure::usage(
                        "unsupported_form",
                        format!(
                            "form {} is not available for hilbert (apery, chi, oneminust)",
                            other.name()
                        ),
                    ))
                }
            };
            Ok(numerator_output(&report, opts.json))
        }
        Cmd::Augmented {
            gens,
            invariant,
            form,
            p,
        } => {
            let s = NumericalSemigroup::new(&gens.0)?;
            let report = match form {
                NumeratorForm::Chi => numerator_chi_f(&s, *invariant, &settings)?,
                NumeratorForm::ChiHat => numerator_chihat_f(&s, *invariant, &settings)?,
                NumeratorForm::SecondDifference => {
                    numerator_second_difference(&s, *invariant, p.unwrap_or(s.first()), &settings)?
                }
                NumeratorForm::ClosedTwoGen => twogen_closed_forms(&s, *invariant)?,
                other => return Err(Failure::usage(
                    "unsupported_form",
                    format!(
                        "form {} is not available for augmented (chi, chihat, secdiff, closed2gen)",
                        other.name()
                    ),
                )),
            };
            Ok(numerator_output(&report, opts.json))
        }
        Cmd::Dissonance { gens, invariant } => {
            if !matches!(invariant, InvariantId::MaxLen | InvariantId::MinLen) {
                return Err(Failure::usage(
                    "unsupported_invariant",
                    format!(
                        "dissonance is defined for the maximum and minimum length only (max, min), not {}",
                        invariant.name()
                    ),
                ));
            }
            let s = NumericalSemigroup::new(&gens.0)?;
            Ok(DissonanceReport::new(&s, *invariant, &settings)?.to_json())
        }
        Cmd::Glue {
            s1,
            s2,
            d1,
            d2,
            invariant,
        } => {
            let spec = GluingSpec::new(
                NumericalSemigroup::new(&s1.0)?,
                NumericalSemigroup::new(&s2.0)?,
                *d1,
                *d2,
            );
            let (s, _) = spec.glue()?;
            let trunc = opts.trunc.unwrap_or_else(|| default_glue_trunc(&s));
            let report = nsgp_core::gluing::GluingReport::new(&spec, *invariant, trunc, opts.cap)?;
            if opts.json {
                return Ok(report.to_json());
            }
            let v = &report.validity;
            let check = |c: &nsgp_core::gluing::SeriesCheck| match c.first_mismatch {
                None => "holds".to_string(),
                Some(n) => format!("fails (first mismatch at degree {n})"),
            };
            Ok([
                format!("generators: {}", join(&report.generators)),
                format!("gcd(d1, d2) = 1: {}", v.gcd_one),
                format!("d1 in S2: {}", v.d1_in_s2),
                format!("d2 in S1: {}", v.d2_in_s1),
                format!(
                    "d1 not a minimal generator of S2: {}",
                    v.d1_not_minimal_generator_of_s2
                ),
                format!(
                    "d2 not a minimal generator of S1: {}",
                    v.d2_not_minimal_generator_of_s1
                ),
                format!("checked to degree: {trunc}"),
                format!("hilbert identity: {}", check(&report.hilbert_identity)),
                format!(
                    "harmonic gluing ({}): {}",
                    invariant.name(),
                    check(&report.harmonic_gluing)
                ),
                format!(
                    "augmented formula ({}): {}",
                    invariant.name(),
                    check(&report.augmented_formula)
                ),
            ]
            .join("\n"))
        }
        Cmd::Complex { gens, n, invariant } => {
            let s = NumericalSemigroup::new(&gens.0)?;
            let d = SquarefreeDivisorComplex::new(&s, *n);
            let table = invariant_table(&s, *invariant, *n, opts.cap)?;
            let chi_f = d.weighted_euler(&s, &table)?;
            let chihat_f = d.augmented_euler(&s, &table)?;
            let faces = d.faces_as_generators(&s);
            if opts.json {
                return Ok(json!({
                    "n": n,
                    "faces": faces,
                    "chi": d.euler_char(),
                    "invariant": invariant.name(),
                    "chi_f": chi_f,
                    "chihat_f": chihat_f,
                })
                .to_string());
            }
            let faces_text = if faces.is_empty() {
                "none".to_string()
            } else {
                faces
                    .iter()
                    .map(|face| {
                        if face.is_empty() {
                            "∅".to_string()
                        } else {
                            format!("{{{}}}", join(face))
                        }
                    })
                    .collect::<Vec<_>>()
                    .join(", ")
            };
            Ok([
                format!("faces: {faces_text}"),
                format!("chi: {}", d.euler_char()),
                format!("chi_{}: {chi_f}", invariant.name()),
                format!("chihat_{}: {chihat_f}", invariant.name()),
            ]
            .join("\n"))
        }
    }
}

/// Default degree for the gluing checks, `2 (F + 1) + n_[k]`.
fn default_glue_trunc(s: &NumericalSemigroup) -> u64 {
    2 * (s.frobenius() + 1) as u64 + s.generator_sum()
}

fn info(s: &NumericalSemigroup, as_json: bool) -> Result<String, Failure> {
    let mut apery = s.apery(s.first())?;
    apery.sort_unstable();
    let gap_gcd = match generator_gap_gcd(s) {
        Ok(g) => Some(g),
        Err(Error::SingleGenerator) => None,
        Err(e) => return Err(e.into()),
    };
    let minimal = s.minimal_generators();
    if as_json {
        return Ok(json!({
            "generators": s.generators(),
            "minimal_generators": minimal,
            "minimally_generated": s.is_minimally_generated(),
            "frobenius": s.frobenius(),
            "apery": apery,
            "generator_gap_gcd": gap_gcd,
        })
        .to_string());
    }
    let minimality = if s.is_minimally_generated() {
        "yes".to_string()
    } else {
        format!("no (minimal generators {})", join(&minimal))
    };
    Ok([
        format!("generators: {}", join(s.generators())),
        format!("minimal: {minimality}"),
        format!("frobenius: {}", s.frobenius()),
        format!("apery({}): {}", s.first(), join(&apery)),
        format!(
            "generator gap gcd: {}",
            gap_gcd.map_or_else(|| "undefined".to_string(), |g| g.to_string())
        ),
    ]
    .join("\n"))
}

fn numerator_output(report: &NumeratorReport, as_json: bool) -> String {
    if as_json {
        return report.to_json();
    }
    let certified = match report.certified_to {
        Some(n) if report.stable => format!("certified to degree {n}"),
        Some(n) => format!("computed to degree {n}, not stable"),
        None => "exact".to_string(),
    };
    format!(
        "{}\nover {}, {certified}",
        report.poly,
        report.denominator_text()
    )
}

fn join(values: &[u64]) -> String {
    values
        .iter()
        .map(u64::to_string)
        .collect::<Vec<_>>()
        .join(",")
}
