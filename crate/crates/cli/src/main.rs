use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use rayon::prelude::*;
use serde_json::json;

use cyclodefect::abacus::{
    charged_hooks_abacus, default_window, multi_beta, normalize_multicharge, render_abacus,
};
use cyclodefect::extensions::{glpn_defect, orbit, yokonuma_block_key, yokonuma_defect};
use cyclodefect::partition::{enumerate_multipartitions, Multicharge, Multipartition};
use cyclodefect::roots::RootOfUnity;
use cyclodefect::scan::{assemble, evaluate_member, render_text, ScanParams, ScanReport};
use cyclodefect::schur::{
    defect_general, defect_integer, dipper_mathas_classes, format_classes, schur_factors,
    specialize_integer, CycloSpec,
};
use cyclodefect::weight::{core, fayers_weight};
use cyclodefect::Error;

mod csv_out;

#[derive(Parser)]
#[command(
    name = "cyclodefect",
    version,
    about = "Schur elements, defects, weights and cores of Ariki-Koike algebras"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Charged {
    /// Multipartition, e.g. `3.1|2.1.1` (`0` for an empty component).
    mp: Multipartition,
    /// Comma-separated multicharge; zeros when omitted.
    #[arg(long, allow_hyphen_values = true)]
    charge: Option<Multicharge>,
}

impl Charged {
    fn charge(&self) -> Multicharge {
        self.charge
            .clone()
            .unwrap_or_else(|| Multicharge::zero(self.mp.level()))
    }
}

#[derive(Subcommand)]
enum Command {
    /// Charged hook multiset H(λ), read off the abacus.
    Hooks {
        #[command(flatten)]
        input: Charged,
        /// Include hooks within one component (default).
        #[arg(long, overrides_with = "no_diagonal")]
        diagonal: bool,
        /// Leave out hooks within one component.
        #[arg(long, overrides_with = "diagonal")]
        no_diagonal: bool,
        /// Also print how many hooks are divisible by this modulus.
        #[arg(long = "mod")]
        modulus: Option<u32>,
        #[arg(long)]
        window: Option<i64>,
    },
    /// Φ_e-defect of the Schur element.
    Defect {
        #[command(flatten)]
        input: Charged,
        #[arg(long)]
        e: Option<u32>,
        /// Use a cyclotomic specialisation given by --roots, --rcharges, --qexp.
        #[arg(long)]
        general: bool,
        /// Ambient order N and exponent t of η = ζ_N^t.
        #[arg(long, value_delimiter = ',')]
        roots: Vec<i64>,
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        rcharges: Vec<i64>,
        #[arg(long, default_value_t = 1, allow_hyphen_values = true)]
        qexp: i64,
        #[arg(long)]
        json: bool,
    },
    /// Fayers weight.
    Weight {
        #[command(flatten)]
        input: Charged,
        #[arg(long)]
        e: u32,
    },
    /// (e, s)-core and weight by the abacus reduction.
    Core {
        #[command(flatten)]
        input: Charged,
        #[arg(long)]
        e: u32,
        #[arg(long)]
        window: Option<i64>,
        #[arg(long)]
        json: bool,
    },
    /// Generic Schur element as a factor list, or expanded at Q_a = y^{s_a}, q = y.
    Schur {
        mp: Multipartition,
        #[arg(long, allow_hyphen_values = true)]
        charge: Option<Multicharge>,
        #[arg(long)]
        json: bool,
    },
    /// Draw the l-abacus.
    Abacus {
        #[command(flatten)]
        input: Charged,
        #[arg(long)]
        window: Option<i64>,
    },
    /// Dipper-Mathas classes of ξ_a = ζ_N^{params[a]} with u = ζ_N^{u}.
    DmClasses {
        #[arg(long)]
        roots: u64,
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        params: Vec<i64>,
        #[arg(long, allow_hyphen_values = true)]
        u: i64,
        #[arg(long)]
        n: usize,
    },
    /// Yokonuma-Hecke defect over d packages of l components.
    Yokonuma {
        mp: Multipartition,
        #[arg(long)]
        d: usize,
        #[arg(long)]
        l: usize,
        #[arg(long, allow_hyphen_values = true)]
        charge: Option<Multicharge>,
        #[arg(long)]
        e: u32,
        #[arg(long)]
        json: bool,
    },
    /// Defect for G(pd, p, n) and the σ-orbit of the label.
    Glpn {
        mp: Multipartition,
        #[arg(long)]
        d: usize,
        #[arg(long)]
        p: usize,
        #[arg(long, value_delimiter = ',')]
        roots: Vec<i64>,
        /// r_0..r_{d-1}, repeated over the p packages (or all pd values).
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        rcharges: Vec<i64>,
        #[arg(long, default_value_t = 1, allow_hyphen_values = true)]
        qexp: i64,
        #[arg(long)]
        json: bool,
    },
    /// Check that defect is constant on residue-content blocks of Π^l(n).
    Scan {
        #[arg(long)]
        l: usize,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 2)]
        e: u32,
        #[arg(long, allow_hyphen_values = true)]
        charge: Option<Multicharge>,
        /// Worker threads; the report does not depend on it.
        #[arg(long, env = "CYCLODEFECT_JOBS")]
        jobs: Option<usize>,
        #[arg(long)]
        csv: Option<PathBuf>,
        #[arg(long)]
        json: bool,
        /// Add the σ-orbit size for p packages of l/p components.
        #[arg(long)]
        p: Option<usize>,
    },
}

enum Failure {
    Domain(Error),
    Io(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(e)
    }
}

type Outcome = Result<ExitCode, Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(Failure::Domain(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(match e {
                Error::BadSpecialisation { .. } => 3,
                Error::Invariant(_) => 1,
                _ => 2,
            })
        }
        Err(Failure::Io(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn eta(roots: &[i64]) -> Result<RootOfUnity, Error> {
    match roots {
        [n, t] if *n > 0 => RootOfUnity::new(*n as u64, *t),
        _ => Err(Error::InvalidSpec("--roots expects N,t with N > 0".into())),
    }
}

fn window_for(mp: &Multipartition, s: &Multicharge, window: Option<i64>) -> i64 {
    window.unwrap_or_else(|| default_window(mp, s))
}

fn print_json(value: &serde_json::Value) {
    println!(
        "{}",
        serde_json::to_string_pretty(value).expect("json value")
    );
}

fn run(command: Command) -> Outcome {
    match command {
        Command::Hooks {
            input,
            diagonal: _,
            no_diagonal,
            modulus,
            window,
        } => {
            let s = input.charge();
            let m = window_for(&input.mp, &s, window);
            let hooks = charged_hooks_abacus(&multi_beta(&input.mp, &s, m)?, !no_diagonal).hooks;
            let items: Vec<String> = hooks.to_sorted_vec().iter().map(i64::to_string).collect();
            println!("{{{}}}", items.join(", "));
            if let Some(e) = modulus {
                if e == 0 {
                    return Err(Error::InvalidModulus { e, min: 1 }.into());
                }
                println!("divisible by {e}: {}", hooks.count_divisible(e as i64));
            }
        }
        Command::Defect {
            input,
            e,
            general,
            roots,
            rcharges,
            qexp,
            json,
        } => {
            if general {
                let spec = CycloSpec::new(rcharges, qexp, eta(&roots)?)?;
                let d = defect_general(&input.mp, &spec)?;
                if json {
                    print_json(&json!({ "defect": d, "weight": null, "core": null }));
                } else {
                    println!("{d}");
                }
                return Ok(ExitCode::SUCCESS);
            }
            let e =
                e.ok_or_else(|| Error::InvalidSpec("--e is required without --general".into()))?;
            let s = input.charge();
            if e == 1 {
                // Only the specialisation itself is meaningful here.
                specialize_integer(&input.mp, &s)?;
            }
            let d = defect_integer(&input.mp, &s, e)?;
            if json {
                let (weight, core_mp) = if e >= 2 {
                    let (normal, perm) = normalize_multicharge(&s, e);
                    let moved = input.mp.permute(&perm);
                    let c = core(&moved, &normal, default_window(&moved, &normal), e)?;
                    (
                        Some(fayers_weight(&input.mp, &s, e)?),
                        Some(c.core.to_string()),
                    )
                } else {
                    (None, None)
                };
                print_json(&json!({ "defect": d, "weight": weight, "core": core_mp }));
            } else {
                println!("{d}");
            }
        }
        Command::Weight { input, e } => {
            println!("{}", fayers_weight(&input.mp, &input.charge(), e)?);
        }
        Command::Core {
            input,
            e,
            window,
            json,
        } => {
            let s = input.charge();
            let m = window_for(&input.mp, &s, window);
            let c = core(&input.mp, &s, m, e)?;
            if json {
                print_json(&serde_json::to_value(&c).expect("core result"));
            } else {
                println!("core {}", c.core);
                println!("charges {}", c.charges);
                println!("weight {}", c.weight);
            }
        }
        Command::Schur { mp, charge, json } => match charge {
            Some(s) => {
                let poly = specialize_integer(&mp, &s)?;
                if json {
                    print_json(&serde_json::to_value(&poly).expect("polynomial"));
                } else {
                    println!("{poly}");
                }
            }
            None => {
                let f = schur_factors(&mp);
                if json {
                    print_json(&serde_json::to_value(&f).expect("factors"));
                } else {
                    println!("{f}");
                }
            }
        },
        Command::Abacus { input, window } => {
            let s = input.charge();
            let m = window_for(&input.mp, &s, window);
            print!("{}", render_abacus(&multi_beta(&input.mp, &s, m)?));
        }
        Command::DmClasses {
            roots,
            params,
            u,
            n,
        } => {
            if roots == 0 {
                return Err(Error::InvalidSpec("--roots must be positive".into()).into());
            }
            let xi = params
                .iter()
                .map(|&t| RootOfUnity::new(roots, t))
                .collect::<Result<Vec<_>, _>>()?;
            let u = RootOfUnity::new(roots, u)?;
            println!("{}", format_classes(&dipper_mathas_classes(&xi, &u, n)?));
        }
        Command::Yokonuma {
            mp,
            d,
            l,
            charge,
            e,
            json,
        } => {
            let s = charge.unwrap_or_else(|| Multicharge::zero(l));
            let def = yokonuma_defect(&mp, d, l, &s, e)?;
            let key = if e >= 2 {
                Some(yokonuma_block_key(&mp, d, l, &s, e)?)
            } else {
                None
            };
            if json {
                let key: Option<Vec<&Vec<usize>>> =
                    key.as_ref().map(|k| k.iter().map(|r| &r.counts).collect());
                print_json(&json!({ "defect": def, "key": key }));
            } else {
                println!("{def}");
                if let Some(key) = key {
                    let parts: Vec<String> = key
                        .iter()
                        .map(|r| {
                            let c: Vec<String> = r.counts.iter().map(usize::to_string).collect();
                            format!("({})", c.join(","))
                        })
                        .collect();
                    println!("key {}", parts.join(" "));
                }
            }
        }
        Command::Glpn {
            mp,
            d,
            p,
            roots,
            rcharges,
            qexp,
            json,
        } => {
            let full = if rcharges.len() == d {
                (0..p).flat_map(|_| rcharges.iter().copied()).collect()
            } else {
                rcharges
            };
            let spec = CycloSpec::new(full, qexp, eta(&roots)?)?;
            let def = glpn_defect(&mp, d, p, &spec)?;
            let o = orbit(&mp, d, p)?;
            if json {
                print_json(
                    &json!({ "defect": def, "orbit_size": o.size, "stabilizer": o.stabilizer }),
                );
            } else {
                println!("{def}");
                println!("orbit {} stabilizer {}", o.size, o.stabilizer);
            }
        }
        Command::Scan {
            l,
            n,
            e,
            charge,
            jobs,
            csv,
            json,
            p,
        } => {
            let params = ScanParams {
                l,
                n,
                e,
                charge: charge.unwrap_or_else(|| Multicharge::zero(l)),
                p,
            };
            let report = run_scan(&params, jobs)?;
            if json {
                println!("{}", serde_json::to_string_pretty(&report).expect("report"));
            } else {
                print!("{}", render_text(&report));
            }
            if let Some(path) = csv {
                csv_out::write(&path, &report)
                    .map_err(|e| Failure::Io(format!("{}: {e}", path.display())))?;
            }
            if report.violation {
                return Ok(ExitCode::from(1));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn run_scan(params: &ScanParams, jobs: Option<usize>) -> Result<ScanReport, Failure> {
    params.validate()?;
    let all = enumerate_multipartitions(params.l, params.n);
    let evaluate = || {
        all.par_iter()
            .map(|mp| evaluate_member(mp, params, &defect_integer))
            .collect::<Result<Vec<_>, _>>()
    };
    let members = match jobs {
        Some(0) => return Err(Error::InvalidSpec("--jobs must be positive".into()).into()),
        Some(k) => rayon::ThreadPoolBuilder::new()
            .num_threads(k)
            .build()
            .map_err(|e| Failure::Io(e.to_string()))?
            .install(evaluate)?,
        None => evaluate()?,
    };
    Ok(assemble(params, members)?)
}
