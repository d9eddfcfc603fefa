//! Command-line surface: `validate`, `dirac`, `cohomology`, `verify`.

mod report;
mod suites;

use std::path::PathBuf;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};

pub use report::{CheckRecord, Report, ReportSettings, Status};
pub use suites::{clifford_checks, Suite};

use crate::dirac::{eta_duflo, DiracAlgebra};
use crate::document::PairDocument;
use crate::error::{Error, Result};
use crate::liealg::{unit, Part, QuadraticPair};
use crate::scalar::Field;
use crate::specrep::{verify_central_character, DiracMatrix, GModule};
use crate::uenv::{casimir, Poly};

#[derive(Debug, Parser)]
#[command(name = "cubic-dirac", version, about = "Exact noncommutative Weil algebra and cubic Dirac computations")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// U(g) filtration cap; overrides the document setting.
    #[arg(long, global = true)]
    pub cap: Option<usize>,
    /// Working field; overrides the document setting.
    #[arg(long, global = true)]
    pub field: Option<Field>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,
    /// Include wall-clock time in the report.
    #[arg(long, global = true)]
    pub timing: bool,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check the Lie algebra, the form and the subalgebra.
    Validate { file: PathBuf },
    /// Print the cubic Dirac element, γ_p, α and ξ on the basis of r.
    Dirac { file: PathBuf },
    /// Dirac cohomology of the document's modules and the central-character comparison.
    Cohomology {
        file: PathBuf,
        /// Only this module (default: all modules in the document).
        #[arg(long)]
        module: Option<String>,
        /// Central element: `casimir` or `1`.
        #[arg(long, default_value = "casimir")]
        z: String,
    },
    /// Run verification suites.
    Verify {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = Suite::All)]
        suite: Suite,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

/// Exit status: 0 when every check passes, 1 on a verification failure, 2 on bad input.
pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_INPUT: i32 = 2;

/// Runs a parsed command; returns the rendered report (or diagnostic) and the exit code.
pub fn run(cli: &Cli) -> (String, i32) {
    let start = Instant::now();
    match execute(cli) {
        Ok(mut report) => {
            if cli.timing {
                report.timing_ms = Some(start.elapsed().as_millis() as u64);
            }
            let code = if report.failed() { EXIT_FAILED } else { EXIT_OK };
            let text = match cli.format {
                Format::Json => report.to_json(),
                Format::Text => report.to_text(),
            };
            (text, code)
        }
        Err(e) => (format!("error: {e}\n"), EXIT_INPUT),
    }
}

struct Session {
    doc: PairDocument,
    input: String,
    cap: usize,
    field: Field,
}

impl Session {
    fn load(cli: &Cli, file: &PathBuf) -> Result<Self> {
        let text = std::fs::read_to_string(file).map_err(|e| Error::Parse(format!("{}: {e}", file.display())))?;
        let mut doc = PairDocument::from_json(&text)?;
        if let Some(f) = cli.field {
            doc.settings.field = f;
        }
        let cap = cli.cap.unwrap_or(doc.settings.cap);
        let field = doc.settings.field;
        // re-check entries against an overriding field
        let doc = PairDocument::from_json(&doc.to_json())?;
        Ok(Session { doc, input: file.display().to_string(), cap, field })
    }

    fn report(&self, command: &str) -> Report {
        Report::new(command, &self.input, ReportSettings { cap: self.cap, field: self.field.name().into() })
    }

    fn pair(&self, report: &mut Report) -> Option<QuadraticPair> {
        match self.doc.to_pair() {
            Ok(p) => {
                report.push(CheckRecord::new("pair.valid", true));
                Some(p)
            }
            Err(e) => {
                report.push(CheckRecord::new("pair.valid", false).detail(e.to_string()));
                None
            }
        }
    }
}

fn execute(cli: &Cli) -> Result<Report> {
    match &cli.command {
        Command::Validate { file } => validate(&Session::load(cli, file)?),
        Command::Dirac { file } => dirac(&Session::load(cli, file)?),
        Command::Cohomology { file, module, z } => cohomology(&Session::load(cli, file)?, module.as_deref(), z),
        Command::Verify { file, suite } => verify(&Session::load(cli, file)?, *suite),
    }
}

fn validate(s: &Session) -> Result<Report> {
    let mut report = s.report("validate");
    let g = s.doc.lie_algebra_unchecked()?;
    let form = s.doc.form();
    let record = |name: &str, r: Result<()>| match r {
        Ok(()) => CheckRecord::new(name, true),
        Err(e) => CheckRecord::new(name, false).detail(e.to_string()),
    };
    report.push(record("lie.antisymmetry", g.check_antisymmetry()));
    report.push(record("lie.jacobi", g.check_jacobi()));
    report.push(record("form.symmetric", form.check_symmetric(&g)));
    report.push(record("form.nondegenerate", form.check_nondegenerate()));
    report.push(record("form.invariant", form.check_invariant(&g)));
    if let Some(pair) = s.pair(&mut report) {
        report.result("dim.g", pair.g().dim());
        report.result("dim.r", pair.dim(Part::R));
        report.result("dim.p", pair.dim(Part::P));
        report.result("symmetric", pair.is_symmetric());
    }
    for name in s.doc.module_names() {
        report.push(record(&format!("module.{name}"), s.doc.module(name, &g).map(|_| ())));
    }
    Ok(report)
}

fn dirac(s: &Session) -> Result<Report> {
    let mut report = s.report("dirac");
    let Some(pair) = s.pair(&mut report) else { return Ok(report) };
    let d = DiracAlgebra::new(&pair, s.cap.max(1))?;
    let p_labels = pair.space(Part::P).labels().to_vec();
    report.result("dirac", d.format(d.dirac()));
    report.result("gamma_p", d.gamma().format_with(&p_labels));
    let nr = pair.dim(Part::R);
    for x in 0..nr {
        let label = &pair.space(Part::R).labels()[x];
        report.result(format!("alpha.{label}"), d.alpha(&unit(nr, x)).format_with(&p_labels));
        report.result(format!("xi.{label}"), d.format(&d.xi_vector(&unit(nr, x))));
    }
    report.push(suites::cubic_invariance(&d));
    Ok(report)
}

/// `Ω` or `1` in `U(g)`.
pub fn central_element(pair: &QuadraticPair, d: &DiracAlgebra, which: &str) -> Result<Poly> {
    match which {
        "casimir" | "Casimir" | "omega" => casimir(d.algebra().uenv(), pair.basis(Part::G), &pair.dual_basis(Part::G)),
        "1" | "one" => Ok(Poly::one(pair.g().dim())),
        other => Err(Error::Parse(format!("unknown central element `{other}` (expected casimir or 1)"))),
    }
}

fn cohomology(s: &Session, only: Option<&str>, which: &str) -> Result<Report> {
    let mut report = s.report("cohomology");
    let Some(pair) = s.pair(&mut report) else { return Ok(report) };
    let d = DiracAlgebra::new(&pair, s.cap.max(2))?;
    let z = central_element(&pair, &d, which)?;
    let eta = eta_duflo(&pair, &z)?;
    let r_labels = pair.space(Part::R).labels().to_vec();
    report.result("z", z.format_with(pair.g().labels()));
    report.result("eta_R(z)", eta.format_with(&r_labels));
    let mut modules: Vec<GModule> = Vec::new();
    match only {
        Some(name) => modules.push(s.doc.module(name, pair.g())?),
        None => {
            if !s.doc.module_names().contains(&"trivial") {
                modules.push(GModule::trivial(pair.g()));
            }
            for name in s.doc.module_names() {
                modules.push(s.doc.module(name, pair.g())?);
            }
        }
    }
    for m in &modules {
        let key = format!("cohomology.{}", m.name());
        let dm = match DiracMatrix::new(&d, m, s.field) {
            Ok(dm) => dm,
            Err(e @ Error::FieldExtensionRequired(_)) => {
                report.push(CheckRecord::skipped(key, format!("{e}; rerun with --field Qi")));
                continue;
            }
            Err(e) => return Err(e),
        };
        let h = dm.cohomology()?;
        report.result(format!("{key}.dim"), h.dim());
        for (x, label) in r_labels.iter().enumerate() {
            let w = match h.weights(x) {
                Some(ws) => crate::scalar::format_coords(&ws),
                None => format!("char poly {}", crate::scalar::format_coords(&h.action(x).char_poly())),
            };
            report.result(format!("{key}.weights.{label}"), w);
        }
        report.push(CheckRecord::new(format!("{key}.commutes_with_xi"), dm.commutes_with_xi()));
        match verify_central_character(&dm, &z, &eta) {
            Ok(c) => report.push(
                CheckRecord::new(format!("{key}.central_character"), c.holds)
                    .witness("chi", &c.chi)
                    .witness("dim", c.cohomology_dim),
            ),
            Err(e @ Error::NoCentralCharacter(_)) => {
                report.push(CheckRecord::skipped(format!("{key}.central_character"), e.to_string()))
            }
            Err(e) => return Err(e),
        }
    }
    Ok(report)
}

fn verify(s: &Session, suite: Suite) -> Result<Report> {
    let mut report = s.report(&format!("verify --suite {}", suite.name()));
    let Some(pair) = s.pair(&mut report) else { return Ok(report) };
    for check in suites::run(&pair, suite, s.cap, s.field)? {
        report.push(check);
    }
    Ok(report)
}
