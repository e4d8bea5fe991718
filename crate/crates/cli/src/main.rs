use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use rook_eulerian::invseq::DEFAULT_PRODUCT_LIMIT;
use rook_eulerian::perms::{OrderKind, Permutation, StatKind, DEFAULT_INTERVAL_LIMIT};
use rook_eulerian_cli::commands::{self, Analysis, Method, SearchTarget};
use rook_eulerian_cli::parallel::WORKERS_ENV;
use rook_eulerian_cli::record::Check;
use rook_eulerian_cli::{probe, reproduce, timed, CliError, CliResult, Outcome};

#[derive(Parser)]
#[command(name = "rooke", version, about = "Rook-Eulerian polynomials, permutation intervals and real-rootedness checks")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,

    /// Worker threads for parallel sweeps.
    #[arg(long, global = true, env = WORKERS_ENV)]
    workers: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Human,
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Brute,
    Recursive,
    Both,
}

#[derive(Clone, Copy, ValueEnum)]
enum OrderArg {
    Bruhat,
    Weak,
}

#[derive(Clone, Copy, ValueEnum)]
enum StatArg {
    Des,
    Asc,
    Exc,
    Peak,
}

#[derive(Args)]
struct CheckArgs {
    /// Decision procedures to run: real-rooted, ulc, lc, unimodal (repeatable or comma-separated).
    #[arg(long = "check", value_delimiter = ',')]
    checks: Vec<String>,

    /// Print approximate roots.
    #[arg(long)]
    roots: bool,
}

impl CheckArgs {
    fn analysis(&self) -> CliResult<Analysis> {
        let checks = self
            .checks
            .iter()
            .map(|c| Check::parse(c.trim()).map_err(CliError::Usage))
            .collect::<CliResult<Vec<_>>>()?;
        Ok(Analysis {
            checks,
            roots: self.roots,
        })
    }
}

#[derive(Subcommand)]
enum Command {
    /// Rook-Eulerian polynomial of a Ferrers board.
    BoardPoly {
        /// Weakly increasing row lengths, e.g. 3,4,4,6,7 or 34467.
        #[arg(long)]
        shape: String,
        /// Also emit the refined family by first-row column.
        #[arg(long)]
        refined: bool,
        #[arg(long, value_enum, default_value_t = MethodArg::Both)]
        method: MethodArg,
        /// Count descents instead of ascents.
        #[arg(long, conflicts_with = "refined")]
        descents: bool,
        #[command(flatten)]
        check: CheckArgs,
    },
    /// Statistic polynomial over a lower interval of the Bruhat or weak order.
    Interval {
        /// Top permutation, e.g. 4,6,2,1,7,3,5.
        #[arg(long)]
        top: String,
        #[arg(long, value_enum, default_value_t = OrderArg::Bruhat)]
        order: OrderArg,
        #[arg(long, value_enum, default_value_t = StatArg::Des)]
        stat: StatArg,
        /// Largest interval enumerated before refusing.
        #[arg(long, default_value_t = DEFAULT_INTERVAL_LIMIT)]
        max_interval: usize,
        #[command(flatten)]
        check: CheckArgs,
    },
    /// Ascent polynomial of the s-inversion sequences.
    SEulerian {
        /// The vector s, e.g. 1,2,3.
        #[arg(long)]
        s: String,
        /// Largest product of s enumerated before refusing.
        #[arg(long, default_value_t = DEFAULT_PRODUCT_LIMIT)]
        max_product: u128,
        #[command(flatten)]
        check: CheckArgs,
    },
    /// Search for an s whose s-Eulerian polynomial equals a target.
    SearchS {
        /// Use the board's polynomial as the target.
        #[arg(long, conflicts_with = "target", required_unless_present = "target")]
        shape: Option<String>,
        /// With --shape, target the descent polynomial instead of the ascent polynomial.
        #[arg(long, requires = "shape")]
        descents: bool,
        /// Ascending coefficients of the target.
        #[arg(long)]
        target: Option<String>,
        /// Longest s considered; defaults to 2·Ω(N)+1 where N is the target's value at 1.
        #[arg(long)]
        max_len: Option<usize>,
    },
    /// Multiset rook-Eulerian polynomial of a skew board.
    #[command(long_about = "Multiset rook-Eulerian polynomial of a skew board.\n\n\
        Shapes are normally entered with weakly increasing parts (shortest row first), \
        and --mu lists the removed cells per row, padded with leading zeros when shorter. \
        A weakly decreasing shape (longest row first, as in 333321/11) is accepted too: \
        it and its --mu are reversed, so 3,3,3,3,2,1 with --mu 1,1 becomes \
        1,2,3,3,3,3 with --mu 0,0,0,0,1,1.")]
    Multiset {
        #[arg(long)]
        shape: String,
        /// Inner shape removed from the board.
        #[arg(long)]
        mu: Option<String>,
        /// Multiplicity of each letter, e.g. 2,2,1.
        #[arg(long)]
        content: String,
        #[arg(long)]
        refined: bool,
        #[command(flatten)]
        check: CheckArgs,
    },
    /// Recompute published values and diff them against the embedded expectations.
    Reproduce {
        /// all, eq1, eq3, eq5, thm2-example, thm3, fig2, fig3, multiset-example, multiset-skew, s6-scan
        #[arg(default_value = "all")]
        targets: Vec<String>,
    },
    /// Search for counterexamples to the open conjectures.
    Probe {
        #[command(subcommand)]
        probe: ProbeCommand,
    },
    /// All verdicts and roots for a raw polynomial.
    Analyze {
        /// Ascending coefficients, e.g. 1,43,196,168,23,1.
        #[arg(long, allow_hyphen_values = true)]
        coeffs: String,
        #[arg(long)]
        no_roots: bool,
    },
}

#[derive(Subcommand)]
enum ProbeCommand {
    /// Ultra-log-concavity of descent polynomials over weak-order lower intervals.
    UlcWeak {
        /// Every permutation up to this size.
        #[arg(long, default_value_t = 6)]
        n: usize,
        /// Additional random permutations.
        #[arg(long, default_value_t = 0)]
        trials: usize,
        #[arg(long, default_value_t = 9)]
        max_random_n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Real-rootedness of excedance polynomials over Bruhat lower intervals of 312-avoiders.
    ExcBruhat {
        #[arg(long, default_value_t = 7)]
        n: usize,
        /// Include permutations that contain 312.
        #[arg(long)]
        no_312_filter: bool,
        /// Extra permutations to check.
        #[arg(long = "perm")]
        perms: Vec<String>,
    },
    /// Real-rootedness and interlacing of multiset families on boards in a square.
    MultisetInterlace {
        #[arg(long, default_value_t = 4)]
        side: usize,
        /// Random contents per board.
        #[arg(long, default_value_t = 20)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Real-rootedness of the ascent-set polynomial along random positive rays.
    SamePhase {
        #[arg(long, default_value = "3,4,4,6,7")]
        shape: String,
        #[arg(long, default_value_t = 50)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

fn order(o: OrderArg) -> OrderKind {
    match o {
        OrderArg::Bruhat => OrderKind::Bruhat,
        OrderArg::Weak => OrderKind::Weak,
    }
}

fn stat(s: StatArg) -> StatKind {
    match s {
        StatArg::Des => StatKind::Descent,
        StatArg::Asc => StatKind::Ascent,
        StatArg::Exc => StatKind::Excedance,
        StatArg::Peak => StatKind::Peak,
    }
}

fn run(command: Command) -> CliResult<Outcome> {
    match command {
        Command::BoardPoly {
            shape,
            refined,
            method,
            descents,
            check,
        } => {
            if descents {
                return commands::board_descents(&shape, &check.analysis()?);
            }
            let method = match method {
                MethodArg::Brute => Method::Brute,
                MethodArg::Recursive => Method::Recursive,
                MethodArg::Both => Method::Both,
            };
            commands::board_poly(&shape, refined, method, &check.analysis()?)
        }
        Command::Interval {
            top,
            order: o,
            stat: s,
            max_interval,
            check,
        } => commands::interval(&top, order(o), stat(s), max_interval, &check.analysis()?),
        Command::SEulerian {
            s,
            max_product,
            check,
        } => commands::s_eulerian(&s, max_product, &check.analysis()?),
        Command::SearchS {
            shape,
            descents,
            target,
            max_len,
        } => {
            let target = match (shape, target) {
                (Some(shape), _) => SearchTarget::Shape { shape, descents },
                (None, Some(c)) => SearchTarget::Coeffs(c),
                (None, None) => return Err(CliError::Usage("--shape or --target is required".into())),
            };
            commands::search_s(target, max_len)
        }
        Command::Multiset {
            shape,
            mu,
            content,
            refined,
            check,
        } => commands::multiset(&shape, mu.as_deref(), &content, refined, &check.analysis()?),
        Command::Reproduce { targets } => reproduce::reproduce(&reproduce::parse_targets(&targets)?),
        Command::Probe { probe: p } => match p {
            ProbeCommand::UlcWeak {
                n,
                trials,
                max_random_n,
                seed,
            } => probe::ulc_weak(n, trials, max_random_n, seed),
            ProbeCommand::ExcBruhat {
                n,
                no_312_filter,
                perms,
            } => {
                let extra = perms
                    .iter()
                    .map(|p| p.parse::<Permutation>())
                    .collect::<Result<Vec<_>, _>>()?;
                probe::exc_bruhat(n, !no_312_filter, &extra)
            }
            ProbeCommand::MultisetInterlace { side, trials, seed } => {
                probe::multiset_interlace(side, trials, seed)
            }
            ProbeCommand::SamePhase {
                shape,
                trials,
                seed,
            } => probe::same_phase(&shape, trials, seed),
        },
        Command::Analyze { coeffs, no_roots } => commands::analyze(&coeffs, !no_roots),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    if let Some(w) = cli.workers {
        std::env::set_var(WORKERS_ENV, w.to_string());
    }
    let format = cli.format;
    match timed(|| run(cli.command)) {
        Ok(out) => {
            let mut text = String::new();
            for rec in &out.records {
                match format {
                    Format::Json => text.push_str(&rec.to_json_line()),
                    Format::Human => text.push_str(&rec.to_string()),
                }
                text.push('\n');
            }
            print!("{text}");
            ExitCode::from(out.status.exit_code() as u8)
        }
        Err(e) => {
            eprintln!("rooke: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
