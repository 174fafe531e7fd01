//! Argument parsing and command dispatch.

use std::ffi::OsString;
use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use fk3_core::census::{analyze_surface, check_conditions, K3_MAX_DEGREE};
use fk3_core::quasismooth::failing_subsets;
use fk3_core::verify::{self, Violation};
use fk3_core::weights::{dim_sing_gcd_conditions, is_well_formed_hypersurface};
use fk3_core::{
    classify_hypersurface, is_fano_k3_numerics, is_quasi_smooth_not_cone, Condition, Fk3Filter,
    QuasiSmoothness, WeightSystem,
};

use crate::catalog::{self, CatalogFormat};
use crate::driver::Driver;
use crate::spec::parse_weight_spec;

/// Process exit codes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[repr(u8)]
pub enum Exit {
    Success = 0,
    /// The input fails one of the conditions.
    PredicateFailure = 1,
    /// A `--verify` cross-check found a violation.
    VerificationFailure = 2,
    Usage = 3,
    /// Writing the output failed.
    Io = 4,
}

#[derive(Debug, Parser)]
#[command(
    name = "fk3",
    version,
    about = "Census of quasi-smooth weighted Fano fourfolds of K3 type"
)]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalArgs,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct GlobalArgs {
    /// Output format.
    #[arg(long, value_enum, default_value_t = CatalogFormat::Csv, global = true)]
    pub format: CatalogFormat,
    /// Write to this file instead of standard output.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Worker threads; defaults to one per core.
    #[arg(long, global = true, value_parser = clap::value_parser!(u16).range(1..))]
    pub jobs: Option<u16>,
    /// Run every cross-check that applies and exit 2 on a violation.
    #[arg(long, global = true)]
    pub verify: bool,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Weighted K3 surfaces.
    K3 {
        #[command(subcommand)]
        action: K3Action,
    },
    /// Fano fourfolds of K3 type.
    Fk3 {
        #[command(subcommand)]
        action: Fk3Action,
    },
    /// Full record for one fourfold.
    Analyze { spec: String },
    /// Condition-by-condition report for one weight system.
    Check { spec: String },
    /// Orbifold strata of one hypersurface.
    Singularities { spec: String },
}

#[derive(Debug, Subcommand)]
pub enum K3Action {
    /// The K3 census.
    Enumerate,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum FilterArg {
    /// The subset criterion alone.
    #[default]
    Exact,
    /// Adds the singleton test behind the published 244-row table.
    Published,
}

impl From<FilterArg> for Fk3Filter {
    fn from(f: FilterArg) -> Self {
        match f {
            FilterArg::Exact => Fk3Filter::Exact,
            FilterArg::Published => Fk3Filter::PublishedSingleton,
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum Fk3Action {
    /// The fourfold census built from the K3 census.
    Enumerate {
        #[arg(long, value_enum, default_value_t = FilterArg::Exact)]
        filter: FilterArg,
    },
    /// Direct sweep over all six-tuples up to a degree bound.
    Brute {
        #[arg(long, value_parser = clap::value_parser!(i64).range(1..))]
        dmax: i64,
        #[arg(long, value_enum, default_value_t = FilterArg::Exact)]
        filter: FilterArg,
    },
    /// The two families with a singular surface and no associated K3.
    Extra,
}

struct Context<'a> {
    global: &'a GlobalArgs,
    driver: Driver,
    err: &'a mut dyn Write,
}

impl Context<'_> {
    /// Reports violations on standard error.
    fn verdict(&mut self, violations: &[Violation]) -> Exit {
        for v in violations {
            let _ = writeln!(self.err, "verify: {v}");
        }
        if violations.is_empty() {
            let _ = writeln!(self.err, "verify: all checks passed");
            Exit::Success
        } else {
            let _ = writeln!(self.err, "verify: {} violation(s)", violations.len());
            Exit::VerificationFailure
        }
    }
}

fn parse_spec(text: &str, err: &mut dyn Write) -> Result<WeightSystem, Exit> {
    parse_weight_spec(text).map_err(|e| {
        let _ = writeln!(err, "error: invalid weight spec '{text}': {e}");
        Exit::Usage
    })
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> Exit
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render();
            if e.use_stderr() {
                let _ = write!(stderr, "{}", rendered.ansi());
                return Exit::Usage;
            }
            let _ = write!(stdout, "{rendered}");
            return Exit::Success;
        }
    };
    let driver = match Driver::new(cli.global.jobs.map(usize::from)) {
        Ok(d) => d,
        Err(e) => {
            let _ = writeln!(stderr, "error: cannot start worker threads: {e}");
            return Exit::Usage;
        }
    };

    let mut buffer = Vec::new();
    let mut ctx = Context {
        global: &cli.global,
        driver,
        err: stderr,
    };
    let code = match dispatch(&cli.command, &mut ctx, &mut buffer) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(ctx.err, "error: {e}");
            return Exit::Io;
        }
    };
    let written = match &cli.global.out {
        None => stdout.write_all(&buffer).and_then(|()| stdout.flush()),
        Some(path) => File::create(path).and_then(|f| {
            let mut w = BufWriter::new(f);
            w.write_all(&buffer)?;
            w.flush()
        }),
    };
    if let Err(e) = written {
        let _ = writeln!(ctx.err, "error: cannot write output: {e}");
        return Exit::Io;
    }
    code
}

fn dispatch(command: &Command, ctx: &mut Context<'_>, out: &mut Vec<u8>) -> io::Result<Exit> {
    let fmt = ctx.global.format;
    match command {
        Command::K3 {
            action: K3Action::Enumerate,
        } => {
            let k3s = ctx.driver.k3_surfaces();
            let records = ctx.driver.analyze_surfaces(&k3s);
            catalog::emit_k3_catalog(out, &records, fmt)?;
            if ctx.global.verify {
                let mut violations = verify::k3_stabilization(&k3s);
                violations.extend(verify::no_duplicates(&k3s));
                return Ok(ctx.verdict(&violations));
            }
        }
        Command::Fk3 {
            action: Fk3Action::Enumerate { filter },
        } => {
            let filter = Fk3Filter::from(*filter);
            let k3s = ctx.driver.k3_surfaces();
            let list = ctx.driver.fourfolds(&k3s, filter);
            let records = ctx.driver.analyze_families(&list);
            catalog::emit_catalog(out, &records, fmt)?;
            if filter == Fk3Filter::PublishedSingleton {
                let _ = writeln!(
                    ctx.err,
                    "note: published filter also requires d mod a_i to be 0 or another weight"
                );
            }
            if ctx.global.verify {
                let d_max = k3s
                    .iter()
                    .map(WeightSystem::degree)
                    .max()
                    .unwrap_or(K3_MAX_DEGREE);
                let brute = ctx.driver.brute_force(d_max, filter);
                let violations = verify::check_fourfold_census(&records, &k3s, Some(&brute));
                return Ok(ctx.verdict(&violations));
            }
        }
        Command::Fk3 {
            action: Fk3Action::Brute { dmax, filter },
        } => {
            let filter = Fk3Filter::from(*filter);
            let mut list = ctx.driver.brute_force(*dmax, filter);
            list.sort_by(|x, y| {
                fk3_core::census::census_key(x).cmp(&fk3_core::census::census_key(y))
            });
            catalog::emit_weight_list(out, &list, fmt)?;
            if ctx.global.verify {
                let k3s = ctx.driver.k3_surfaces();
                let constructed: Vec<WeightSystem> = ctx
                    .driver
                    .fourfolds(&k3s, filter)
                    .into_iter()
                    .filter(|w| w.degree() <= *dmax)
                    .collect();
                let mut violations = verify::census_matches_brute_force(&constructed, &list);
                violations.extend(verify::no_duplicates(&list));
                return Ok(ctx.verdict(&violations));
            }
        }
        Command::Fk3 {
            action: Fk3Action::Extra,
        } => {
            let records = ctx.driver.extra_families(K3_MAX_DEGREE);
            catalog::emit_catalog(out, &records, fmt)?;
            if ctx.global.verify {
                let mut violations = Vec::new();
                if records.len() != 2 {
                    violations.push(Violation {
                        check: "extra-families",
                        family: None,
                        detail: format!("expected 2 families, found {}", records.len()),
                    });
                }
                violations.extend(verify::series_symmetry(&records));
                violations.extend(verify::fk3_hodge_shape(&records));
                violations.extend(verify::singular_dimension_consistency(&records));
                return Ok(ctx.verdict(&violations));
            }
        }
        Command::Analyze { spec } => {
            let ws = match parse_spec(spec, ctx.err) {
                Ok(ws) => ws,
                Err(code) => return Ok(code),
            };
            if ws.len() != 6 {
                let _ = writeln!(
                    ctx.err,
                    "error: analyze expects six weights, got {}",
                    ws.len()
                );
                return Ok(Exit::Usage);
            }
            let record = match fk3_core::analyze_family(&ws) {
                Ok(r) => r,
                Err(e) => {
                    let _ = writeln!(ctx.err, "{ws}: {e}");
                    return Ok(Exit::PredicateFailure);
                }
            };
            let records = [record];
            catalog::emit_catalog(out, &records, fmt)?;
            if ctx.global.verify {
                let mut violations = verify::series_correspondence(&records);
                violations.extend(verify::series_symmetry(&records));
                violations.extend(verify::fk3_hodge_shape(&records));
                violations.extend(verify::singular_dimension_consistency(&records));
                return Ok(ctx.verdict(&violations));
            }
        }
        Command::Check { spec } => {
            let ws = match parse_spec(spec, ctx.err) {
                Ok(ws) => ws,
                Err(code) => return Ok(code),
            };
            return check_report(&ws, out);
        }
        Command::Singularities { spec } => {
            let ws = match parse_spec(spec, ctx.err) {
                Ok(ws) => ws,
                Err(code) => return Ok(code),
            };
            match classify_hypersurface(&ws) {
                Ok((class, strata)) => {
                    catalog::emit_strata(out, &ws, &strata, fmt)?;
                    let dim = strata.iter().map(|s| s.locus_dim).max().unwrap_or(-1);
                    let _ = writeln!(ctx.err, "{ws}: dim Sing = {dim}, {class}");
                }
                Err(e) => {
                    let _ = writeln!(ctx.err, "{ws}: {e}");
                    return Ok(Exit::PredicateFailure);
                }
            }
        }
    }
    Ok(Exit::Success)
}

fn status(ok: bool) -> &'static str {
    if ok {
        "pass"
    } else {
        "FAIL"
    }
}

/// Writes one line per condition; returns [`Exit::PredicateFailure`] if any fails.
///
/// Six-weight inputs are judged by the fourfold conditions (1)–(5). Other
/// lengths get the conditions that make sense in any dimension.
fn check_report(ws: &WeightSystem, out: &mut Vec<u8>) -> io::Result<Exit> {
    writeln!(out, "{ws}")?;
    let mut all_ok = true;
    let mut line = |out: &mut Vec<u8>, label: String, ok: bool| -> io::Result<()> {
        all_ok &= ok;
        writeln!(out, "{label}: {}", status(ok))
    };

    let qs = is_quasi_smooth_not_cone(ws);
    let failing = failing_subsets(ws);
    let write_qs_detail = |out: &mut Vec<u8>| -> io::Result<()> {
        if let QuasiSmoothness::LinearCone { index } = qs {
            writeln!(out, "    linear cone: a_{index} = d")?;
        }
        for v in &failing {
            writeln!(
                out,
                "    I={}: d not in <a_I>, tangent indices {} ({} of {} needed)",
                v.subset,
                v.tangent_indices,
                v.tangent_indices.len(),
                v.subset.len()
            )?;
        }
        Ok(())
    };

    if ws.len() == 6 {
        let first_failure = check_conditions(ws, true).err();
        for c in Condition::ALL {
            let ok = match c {
                Condition::WellFormed => is_well_formed_hypersurface(ws),
                Condition::BelowDegree => ws.top() < ws.degree(),
                Condition::Fk3Sum => ws.weight_sum() == 2 * ws.degree(),
                Condition::QuasiSmooth => qs.holds(),
                Condition::SingularLocus => dim_sing_gcd_conditions(ws),
            };
            line(out, format!("({}) {c}", c.number()), ok)?;
            if c == Condition::QuasiSmooth {
                write_qs_detail(out)?;
            }
        }
        debug_assert_eq!(first_failure.is_none(), all_ok);
    } else {
        line(
            out,
            "well-formed hypersurface".into(),
            is_well_formed_hypersurface(ws),
        )?;
        line(
            out,
            "every weight below the degree".into(),
            ws.top() < ws.degree(),
        )?;
        line(out, "K3-type numerics".into(), is_fano_k3_numerics(ws))?;
        line(out, "quasi-smooth and not a linear cone".into(), qs.holds())?;
        write_qs_detail(out)?;
        if ws.len() == 4 && all_ok {
            let s = analyze_surface(ws).map_err(io::Error::other)?;
            writeln!(out, "h11_primitive: {}", s.hodge.middle_primitive())?;
        }
    }
    Ok(if all_ok {
        Exit::Success
    } else {
        Exit::PredicateFailure
    })
}
