use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use magicsq::cgmb::{check_decomposition, tate_skeleton, Fixture};
use magicsq::jinv::{self, GroupLabel, JTable};
use magicsq::magictables::{RostCondition, Tables};
use magicsq::output::{emit, Format, Plain, Render};
use magicsq::poincare::{conormed_poincare, dim_flag, poincare_poly, FlagVariety};
use magicsq::polyring::{divides_ring, divides_semiring, eval_rational};
use magicsq::qform::{af_killing_form_e7, parse_gamma, AlgebraKind, CompositionAlgebraR};
use magicsq::rootsys::{build_root_system, opposition_involution, parse_nodes};
use magicsq::verify::{run_verify_with, VerifyOptions};
use magicsq::weyl::{double_cosets, fundamental_degrees, minimal_coset_reps, weyl_order};
use magicsq::{CartanType, DiagramAut, IntPoly, NodeSet, Result, RootSystem};

#[derive(Parser)]
#[command(name = "magicsq", version, about = "Exact computations for the groups of the Freudenthal magic square")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = OutFormat::Json)]
    format: OutFormat,
    /// Accepted for reproducible pipelines; nothing here is random. Also
    /// zeroes runtimes in verify reports so output is byte-stable.
    #[arg(long, global = true)]
    seed_independent: bool,
    /// Directory overriding the bundled data files.
    #[arg(long, global = true)]
    fixtures: Option<PathBuf>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, ValueEnum)]
enum OutFormat {
    Json,
    Text,
    Csv,
}

impl From<OutFormat> for Format {
    fn from(f: OutFormat) -> Format {
        match f {
            OutFormat::Json => Format::Json,
            OutFormat::Text => Format::Text,
            OutFormat::Csv => Format::Csv,
        }
    }
}

#[derive(Subcommand)]
enum Cmd {
    /// Weyl group orders, coset representatives and double cosets.
    #[command(subcommand)]
    Weyl(WeylCmd),
    /// Polynomial arithmetic.
    #[command(subcommand)]
    Poly(PolyCmd),
    /// Poincaré polynomial of a flag variety.
    Poincare(PoincareArgs),
    /// J-invariant upper-motive polynomials.
    #[command(subcommand)]
    Jinv(JinvCmd),
    /// Tate skeletons and decomposition checks.
    #[command(subcommand)]
    Cgmb(CgmbCmd),
    /// Real quadratic forms.
    #[command(subcommand)]
    Qform(QformCmd),
    /// Classification tables.
    #[command(subcommand)]
    Tables(TablesCmd),
    /// Run the named verification fixtures.
    Verify {
        /// Glob over fixture names, e.g. `dims-*`.
        filter: Option<String>,
    },
}

#[derive(Subcommand)]
enum WeylCmd {
    /// |W| and the fundamental degrees.
    Order {
        #[arg(long = "type")]
        ctype: CartanType,
    },
    /// Minimal representatives of W/W_J.
    Cosets {
        #[arg(long = "type")]
        ctype: CartanType,
        /// Nodes generating W_J, comma-separated.
        #[arg(long, default_value = "")]
        parabolic: String,
        /// Print at most this many representatives.
        #[arg(long)]
        limit: Option<usize>,
    },
    /// Cells of W_left \ W / W_right.
    DoubleCosets {
        #[arg(long = "type")]
        ctype: CartanType,
        #[arg(long, default_value = "")]
        left: String,
        #[arg(long, default_value = "")]
        right: String,
        /// Diagram automorphism as cycles, `id`, or `opposition`.
        #[arg(long)]
        star: Option<String>,
    },
}

#[derive(Subcommand)]
enum PolyCmd {
    /// Product of numerator factors divided exactly by the denominator factors.
    EvalRational {
        #[arg(long = "num", required = true, value_delimiter = ',', allow_hyphen_values = true)]
        num: Vec<IntPoly>,
        #[arg(long = "den", value_delimiter = ',', allow_hyphen_values = true)]
        den: Vec<IntPoly>,
    },
    /// Whether q divides p.
    Divides {
        #[arg(long, allow_hyphen_values = true)]
        p: IntPoly,
        #[arg(long, allow_hyphen_values = true)]
        q: IntPoly,
        /// Require a quotient with nonnegative coefficients.
        #[arg(long)]
        semiring: bool,
    },
}

#[derive(Args)]
struct PoincareArgs {
    #[arg(long = "type")]
    ctype: CartanType,
    /// Circled nodes.
    #[arg(long)]
    variety: String,
    #[arg(long)]
    conormed: bool,
}

#[derive(Subcommand)]
enum JinvCmd {
    /// Poincaré polynomial of the upper Borel motive for a J value.
    Poly {
        #[arg(long)]
        group: GroupLabel,
        /// Comma-separated J values.
        #[arg(long)]
        j: String,
    },
    /// All admissible J values for a group.
    Enumerate {
        #[arg(long)]
        group: GroupLabel,
    },
}

#[derive(Subcommand)]
enum CgmbCmd {
    /// Twists of the Tate summands of an isotropic flag variety.
    Skeleton {
        #[arg(long)]
        ambient: CartanType,
        /// Anisotropic kernel nodes.
        #[arg(long)]
        kernel: String,
        /// Circled nodes of the variety.
        #[arg(long)]
        variety: String,
        /// Diagram automorphism; defaults to the opposition involution.
        #[arg(long)]
        star: Option<String>,
    },
    /// Check a stored decomposition.
    Check {
        #[arg(long)]
        fixture: String,
    },
}

#[derive(Subcommand)]
enum QformCmd {
    /// Killing form of the E7 group built from a quaternion algebra, an
    /// octonion algebra and three scalars.
    AfE7 {
        #[arg(long, default_value = "definite")]
        q: String,
        #[arg(long, default_value = "definite")]
        o: String,
        #[arg(long, default_value = "+,+,+", allow_hyphen_values = true)]
        gamma: String,
    },
}

#[derive(Subcommand)]
enum TablesCmd {
    /// The 4x4 grid of groups with invariant degrees.
    Magic,
    /// Cohomological conditions and parabolic types per group.
    Conditions {
        #[arg(long)]
        group: Option<String>,
    },
    /// 2E6 Tits indices by Rost invariant condition.
    TitsIndex {
        #[arg(long)]
        rost: Option<RostCondition>,
    },
}

#[derive(Serialize)]
struct OrderOut {
    ctype: String,
    order: String,
    degrees: Vec<u32>,
}

#[derive(Serialize)]
struct RepOut {
    length: u32,
    word: Vec<usize>,
}

#[derive(Serialize)]
struct CellOut {
    length: u32,
    word: Vec<usize>,
    orbit_size: u64,
    star_invariant: bool,
    stabilizer_nodes: NodeSet,
    stabilizer_type: Vec<String>,
}

#[derive(Serialize)]
struct PoincareOut {
    variety: String,
    dim: u32,
    poly: IntPoly,
    value_at_one: String,
}

#[derive(Serialize)]
struct DividesOut {
    divides: bool,
    quotient: Option<IntPoly>,
}

#[derive(Serialize)]
struct KillingOut {
    dim: usize,
    signature: i64,
    witt_index: usize,
}

enum Outcome {
    Printed,
    VerifyFailed,
}

fn star_for(rs: &RootSystem, star: Option<&str>) -> Result<DiagramAut> {
    match star {
        None | Some("opposition") => Ok(opposition_involution(rs)),
        Some(s) => DiagramAut::parse(rs, s),
    }
}

fn print<T: Render + ?Sized>(value: &T, format: Format) -> Result<Outcome> {
    print!("{}", emit(value, format)?);
    Ok(Outcome::Printed)
}

fn run(cli: Cli) -> Result<Outcome> {
    let format: Format = cli.format.into();
    let dir = cli.fixtures.as_deref();
    let tables = match dir.map(|d| d.join("tables.json")).filter(|p| p.exists()) {
        Some(p) => Tables::from_path(&p)?,
        None => Tables::builtin().clone(),
    };
    let jtable = match dir.map(|d| d.join("jinv_max.json")).filter(|p| p.exists()) {
        Some(p) => JTable::from_path(&p)?,
        None => JTable::builtin().clone(),
    };
    match cli.cmd {
        Cmd::Weyl(WeylCmd::Order { ctype }) => {
            let rs = build_root_system(ctype)?;
            let out = OrderOut {
                ctype: ctype.to_string(),
                order: weyl_order(&rs).to_string(),
                degrees: fundamental_degrees(&rs),
            };
            let line = format!("|W({})| = {}, degrees {:?}", out.ctype, out.order, out.degrees);
            print(&Plain::new(out, line), format)
        }
        Cmd::Weyl(WeylCmd::Cosets { ctype, parabolic, limit }) => {
            let rs = build_root_system(ctype)?;
            let reps: Vec<RepOut> = minimal_coset_reps(&rs, &parse_nodes(&parabolic)?)?
                .take(limit.unwrap_or(usize::MAX))
                .map(|r| RepOut {
                    length: r.length(),
                    word: r.element.reduced_word(&rs),
                })
                .collect();
            let line = reps
                .iter()
                .map(|r| format!("{} {:?}", r.length, r.word))
                .collect::<Vec<_>>()
                .join("\n");
            print(&Plain::new(reps, line), format)
        }
        Cmd::Weyl(WeylCmd::DoubleCosets { ctype, left, right, star }) => {
            let rs = build_root_system(ctype)?;
            let star = star.map(|s| star_for(&rs, Some(&s))).transpose()?;
            let cells = double_cosets(&rs, &parse_nodes(&left)?, &parse_nodes(&right)?, star.as_ref())?;
            let out: Vec<CellOut> = cells
                .iter()
                .map(|c| CellOut {
                    length: c.length,
                    word: c.min_rep.reduced_word(&rs),
                    orbit_size: c.orbit_size,
                    star_invariant: c.star_invariant,
                    stabilizer_nodes: c.stabilizer_nodes.clone(),
                    stabilizer_type: c.stabilizer_type(&rs).iter().map(|t| t.to_string()).collect(),
                })
                .collect();
            let line = out
                .iter()
                .map(|c| format!("len {:>3}  orbit {:>4}  star-invariant {}", c.length, c.orbit_size, c.star_invariant))
                .collect::<Vec<_>>()
                .join("\n");
            print(&Plain::new(out, line), format)
        }
        Cmd::Poly(PolyCmd::EvalRational { num, den }) => {
            let p = eval_rational(&num, &den)?;
            let line = p.to_string();
            print(&Plain::new(p, line), format)
        }
        Cmd::Poly(PolyCmd::Divides { p, q, semiring }) => {
            let quotient = if semiring { divides_semiring(&p, &q)? } else { divides_ring(&p, &q)? };
            let line = match &quotient {
                Some(x) => format!("yes, quotient {x}"),
                None => "no".to_string(),
            };
            let out = DividesOut {
                divides: quotient.is_some(),
                quotient,
            };
            print(&Plain::new(out, line), format)
        }
        Cmd::Poincare(a) => {
            let fv = FlagVariety::new(a.ctype, parse_nodes(&a.variety)?)?;
            let poly = if a.conormed { conormed_poincare(&fv)? } else { poincare_poly(&fv)? };
            let out = PoincareOut {
                variety: fv.label(),
                dim: dim_flag(&fv)?,
                value_at_one: poly.value_at_one().to_string(),
                poly,
            };
            let line = format!("P({}) = {}", out.variety, out.poly);
            print(&Plain::new(out, line), format)
        }
        Cmd::Jinv(JinvCmd::Poly { group, j }) => {
            let values = j
                .split(',')
                .map(|s| s.trim().parse::<u32>())
                .collect::<std::result::Result<Vec<_>, _>>()
                .map_err(|e| magicsq::Error::Parse(format!("bad J value list {j:?}: {e}")))?;
            let p = jtable.profile(group, values)?;
            let poly = jinv::upper_motive_poly(&p)?;
            let line = poly.to_string();
            print(&Plain::new(poly, line), format)
        }
        Cmd::Jinv(JinvCmd::Enumerate { group }) => {
            let adm = jtable.enumerate_admissible(group)?;
            let line = adm
                .profiles
                .iter()
                .map(|p| format!("{:?}", p.values))
                .collect::<Vec<_>>()
                .join("\n");
            print(&Plain::new(adm, line), format)
        }
        Cmd::Cgmb(CgmbCmd::Skeleton { ambient, kernel, variety, star }) => {
            let rs = build_root_system(ambient.untwisted())?;
            let fv = FlagVariety::new(ambient, parse_nodes(&variety)?)?;
            let star = star_for(&rs, star.as_deref())?;
            let shifts = tate_skeleton(&rs, &parse_nodes(&kernel)?, &fv.levi_nodes(), &star)?;
            let line = format!("{shifts:?}");
            print(&Plain::new(shifts, line), format)
        }
        Cmd::Cgmb(CgmbCmd::Check { fixture }) => {
            let f = Fixture::load(&fixture, dir)?;
            let check = check_decomposition(&f.decomposition()?);
            let line = if check.holds {
                format!("{}: holds", f.name)
            } else {
                format!("{}: fails, residual {}", f.name, check.residual)
            };
            let failed = !check.holds;
            print(&Plain::new(check, line), format)?;
            Ok(if failed { Outcome::VerifyFailed } else { Outcome::Printed })
        }
        Cmd::Qform(QformCmd::AfE7 { q, o, gamma }) => {
            let k = af_killing_form_e7(
                CompositionAlgebraR::parse(AlgebraKind::Quaternion, &q)?,
                CompositionAlgebraR::parse(AlgebraKind::Octonion, &o)?,
                parse_gamma(&gamma)?,
            )?;
            let out = KillingOut {
                dim: k.dim(),
                signature: k.signature(),
                witt_index: k.witt_index(),
            };
            let line = format!("dim {}, signature {}, Witt index {}", out.dim, out.signature, out.witt_index);
            print(&Plain::new(out, line), format)
        }
        Cmd::Tables(TablesCmd::Magic) => print(&tables.cells(), format),
        Cmd::Tables(TablesCmd::Conditions { group }) => match group {
            Some(g) => print(tables.conditions_for(&g)?, format),
            None => print(&tables.conditions, format),
        },
        Cmd::Tables(TablesCmd::TitsIndex { rost }) => match rost {
            Some(r) => {
                let case = tables.tits_index_for_rost(r).clone();
                let line = format!("{:?}: circled {:?}, kernel {:?}", r, case.circled_nodes, case.kernel_type);
                print(&Plain::new(case, line), format)
            }
            None => {
                let line = format!("{} cases", tables.tits_indices.cases.len());
                print(&Plain::new(tables.tits_indices.clone(), line), format)
            }
        },
        Cmd::Verify { filter } => {
            let opts = VerifyOptions {
                fixtures_dir: cli.fixtures.clone(),
                zero_timings: cli.seed_independent,
            };
            let report = run_verify_with(filter.as_deref(), &opts)?;
            print(&report, format)?;
            Ok(if report.all_pass() { Outcome::Printed } else { Outcome::VerifyFailed })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(Outcome::Printed) => ExitCode::SUCCESS,
        Ok(Outcome::VerifyFailed) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
