//! JSON file formats and the command-line front end for `trilie-core`.

pub mod error;
pub mod format;
pub mod report;

use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use trilie_core::cohomology::{
    cohomology_report_capped, graph_correspondence, rigidity, stability, subalgebra_complex, subalgebra_stability,
};
use trilie_core::deformation::{tangent_cocycle, jet_subalgebra_check, Jet1Map, Jet1Subspace};
use trilie_core::nr::{morphism_mc_residual, DEFAULT_MAX_DEGREE};
use trilie_core::{algebra::check_morphism, Complex, Morphism, PairIndex, QuotientSplit, ThreeLieAlgebra};

pub use error::{CliError, Witness};
use report::{
    CheckReport, CohomologyTable, DegreeReport, GraphReport, MorphismResidual, Render, ResidualEntry, RigidityReport,
    StabilityReport,
};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    #[default]
    Json,
    Text,
}

#[derive(Debug, Parser)]
#[command(name = "trilie", version, about = "Exact cohomology of 3-Lie algebras and their morphisms")]
pub struct Cli {
    #[arg(long, value_enum, default_value_t = OutputFormat::Json, global = true)]
    pub format: OutputFormat,

    #[command(subcommand)]
    pub command: Command,
}

/// `f: source → target`, all three from files.
#[derive(Debug, Args)]
pub struct MorphismArgs {
    #[arg(long)]
    pub source: PathBuf,
    #[arg(long)]
    pub target: PathBuf,
    /// Matrix with `rows = dim target`, `cols = dim source`.
    #[arg(long)]
    pub map: PathBuf,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check the fundamental identity on every basis 5-tuple.
    CheckAlgebra { algebra: PathBuf },
    /// Check that a linear map preserves the brackets.
    CheckMorphism(MorphismArgs),
    /// The Maurer-Cartan residual of a linear map between two algebras.
    McResidual(MorphismArgs),
    /// Cohomology of a morphism in degrees 0..=N.
    CohomologyMorphism {
        #[command(flatten)]
        morphism: MorphismArgs,
        #[arg(long, default_value_t = 2)]
        max_degree: usize,
    },
    /// Cohomology of an algebra with values in a representation, degrees 1..=N.
    CohomologyRep {
        #[arg(long)]
        algebra: PathBuf,
        #[arg(long)]
        rep: PathBuf,
        #[arg(long, default_value_t = 2)]
        max_degree: usize,
    },
    /// The H¹(f) = 0 rigidity criterion.
    Rigidity(MorphismArgs),
    /// The H²(f) = 0 stability criterion.
    Stability(MorphismArgs),
    /// Check a subalgebra, or with --stability its H² criterion.
    Subalgebra {
        #[arg(long)]
        algebra: PathBuf,
        #[arg(long)]
        subspace: PathBuf,
        #[arg(long)]
        stability: bool,
    },
    /// Compare H^k(f) with the cohomology of the graph of f.
    GraphIso {
        #[command(flatten)]
        morphism: MorphismArgs,
        #[arg(long)]
        degree: usize,
    },
    /// Check a first-order deformation of a morphism (with --source/--target/--map)
    /// or of a subalgebra (with --algebra/--subspace).
    Jet {
        #[arg(long)]
        alpha: PathBuf,
        #[arg(long, requires_all = ["target", "map"], conflicts_with_all = ["algebra", "subspace"])]
        source: Option<PathBuf>,
        #[arg(long)]
        target: Option<PathBuf>,
        #[arg(long)]
        map: Option<PathBuf>,
        #[arg(long, requires = "subspace")]
        algebra: Option<PathBuf>,
        #[arg(long)]
        subspace: Option<PathBuf>,
    },
}

fn load_morphism_parts(args: &MorphismArgs) -> Result<(ThreeLieAlgebra, ThreeLieAlgebra, trilie_core::LinearMap), CliError> {
    let g = format::load_algebra(&args.source)?;
    let h = format::load_algebra(&args.target)?;
    let f = format::load_map_with_shape(&args.map, h.dim(), g.dim())?;
    Ok((g, h, f))
}

fn load_morphism(args: &MorphismArgs) -> Result<Morphism, CliError> {
    let (g, h, f) = load_morphism_parts(args)?;
    Ok(Morphism::new(f, g, h)?)
}

fn check_degree(n: usize) -> Result<(), CliError> {
    if n > DEFAULT_MAX_DEGREE {
        return Err(CliError::Usage(format!("degree {n} exceeds the configured maximum {DEFAULT_MAX_DEGREE}")));
    }
    Ok(())
}

fn table(complex: &Complex, degrees: std::ops::RangeInclusive<usize>) -> Result<CohomologyTable, CliError> {
    let mut reports = Vec::new();
    for n in degrees {
        let r = cohomology_report_capped(complex, n, DEFAULT_MAX_DEGREE)?;
        let verdict = match (complex.is_morphism(), n, r.dim_h) {
            (true, 1, 0) => Some("rigid"),
            (true, 2, 0) => Some("stable"),
            (true, 1 | 2, _) => Some("criterion inconclusive"),
            _ => None,
        };
        reports.push(DegreeReport::new(&r, verdict));
    }
    Ok(CohomologyTable { reports })
}

fn subalgebra_parts(algebra: &Path, subspace: &Path) -> Result<(ThreeLieAlgebra, trilie_core::Subspace), CliError> {
    let a = format::load_algebra(algebra)?;
    let h = format::load_subspace(subspace, a.dim())?;
    Ok((a, h))
}

/// Runs one command and returns the rendered report.
pub fn run(cli: &Cli) -> Result<String, CliError> {
    let fmt = cli.format;
    match &cli.command {
        Command::CheckAlgebra { algebra } => {
            let t = format::load_tensor(algebra)?;
            let tuples = t.check_fundamental_identity()?;
            Ok(CheckReport::ok("fundamental identity", tuples, "tuples").render(fmt))
        }
        Command::CheckMorphism(args) => {
            let (g, h, f) = load_morphism_parts(args)?;
            let defect = check_morphism(&f, &g, &h)?;
            if let Some((triple, v)) = defect.first_failure() {
                return Err(CliError::Validation(Witness::vector("morphism", triple, v)));
            }
            Ok(CheckReport::ok("morphism", defect.defects.len(), "triples").render(fmt))
        }
        Command::McResidual(args) => {
            let (g, h, f) = load_morphism_parts(args)?;
            let residual = morphism_mc_residual(&f, g.tensor(), h.tensor())?;
            let d = g.dim();
            let mut entries = Vec::new();
            for p in PairIndex::all(d) {
                for k in p.j + 1..d {
                    let v = residual.value(&[p.position(d)], k);
                    if v.iter().any(|x| !x.is_zero()) {
                        entries.push(ResidualEntry::new([p.i, p.j, k], v));
                    }
                }
            }
            Ok(MorphismResidual { zero: entries.is_empty(), entries }.render(fmt))
        }
        Command::CohomologyMorphism { morphism, max_degree } => {
            check_degree(*max_degree)?;
            let f = load_morphism(morphism)?;
            Ok(table(&Complex::Morphism(f), 0..=*max_degree)?.render(fmt))
        }
        Command::CohomologyRep { algebra, rep, max_degree } => {
            check_degree(*max_degree)?;
            let a = format::load_algebra(algebra)?;
            let rep = format::load_representation(rep, &a)?;
            Ok(table(&Complex::Representation(rep), 1..=*max_degree)?.render(fmt))
        }
        Command::Rigidity(args) => {
            let v = rigidity(&load_morphism(args)?)?;
            Ok(RigidityReport { dim_h1: v.dim_h1, verdict: v.label() }.render(fmt))
        }
        Command::Stability(args) => {
            let v = stability(&load_morphism(args)?)?;
            Ok(StabilityReport { dim_h2: v.dim_h2, dim_z1: v.dim_z1, verdict: v.label() }.render(fmt))
        }
        Command::Subalgebra { algebra, subspace, stability } => {
            let (a, h) = subalgebra_parts(algebra, subspace)?;
            if *stability {
                let v = subalgebra_stability(&a, &h)?;
                Ok(StabilityReport { dim_h2: v.dim_h2, dim_z1: v.dim_z1, verdict: v.label() }.render(fmt))
            } else {
                subalgebra_complex(&a, &h)?;
                Ok(CheckReport::ok("subalgebra", h.dim(), "basis vectors").render(fmt))
            }
        }
        Command::GraphIso { morphism, degree } => {
            check_degree(*degree + 1)?;
            if *degree == 0 {
                return Err(CliError::Usage("the graph comparison starts at degree 1".into()));
            }
            let g = graph_correspondence(&load_morphism(morphism)?, *degree)?;
            Ok(GraphReport::from(&g).render(fmt))
        }
        Command::Jet { alpha, source, target, map, algebra, subspace } => match (source, target, map, algebra, subspace) {
            (Some(source), Some(target), Some(map), None, None) => {
                let args = MorphismArgs { source: source.clone(), target: target.clone(), map: map.clone() };
                let (g, h, f) = load_morphism_parts(&args)?;
                let velocity = format::load_map_with_shape(alpha, h.dim(), g.dim())?;
                let jet = Jet1Map::new(f, velocity)?;
                tangent_cocycle(&jet, &g, &h)?;
                Ok(CheckReport::ok("first-order deformation", g.dim(), "basis vectors").render(fmt))
            }
            (None, None, None, Some(algebra), Some(subspace)) => {
                let (a, h) = subalgebra_parts(algebra, subspace)?;
                let split = QuotientSplit::canonical(&h);
                let velocity = format::load_map_with_shape(alpha, split.quotient_dim(), h.dim())?;
                let check = jet_subalgebra_check(&Jet1Subspace::new(split, velocity)?, &a)?;
                if let Some((triple, v)) = check.first_failure() {
                    return Err(CliError::Validation(Witness::vector("first-order deformation", &triple, &v)));
                }
                Ok(CheckReport::ok("first-order deformation", h.dim(), "basis vectors").render(fmt))
            }
            _ => Err(CliError::Usage(
                "jet needs either --source, --target and --map, or --algebra and --subspace".into(),
            )),
        },
    }
}

/// Renders an error for the given format: JSON errors are objects with a
/// location or witness, text errors are single lines.
pub fn render_error(e: &CliError, fmt: OutputFormat) -> String {
    match fmt {
        OutputFormat::Text => e.to_string(),
        OutputFormat::Json => report::error_json(e),
    }
}
