//! `pluriops` — batch command-line front end: enumeration, composition,
//! normal forms, K-basis computation, algebra demos, and the verification
//! suite with machine-readable reports.

use clap::{Args, Parser, Subcommand, ValueEnum};
use pluriops::algebra::{self, Pluri};
use pluriops::report::{Budget, Report};
use pluriops::syntax::SyntaxTree;
use pluriops::words::Word;
use pluriops::{checks, dias, linear, rewrite, trias};
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "pluriops", version, about = "Pluriassociative operads: computation and verification")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Operad {
    Dias,
    Trias,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Tsv,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Which {
    Pos,
    Sets,
    Words,
    Mwords,
    Free,
}

#[derive(Subcommand)]
enum Command {
    /// Dimension table of an operad as TSV (columns gamma, n, dim).
    Dims {
        #[arg(long, value_enum, default_value = "dias")]
        operad: Operad,
        #[arg(long)]
        gamma: u32,
        #[arg(long, default_value_t = 7)]
        max_arity: u32,
        #[arg(long, value_enum, default_value = "tsv")]
        format: Format,
    },
    /// List the elements of one homogeneous component, one word per line.
    Enumerate {
        #[arg(long, value_enum, default_value = "dias")]
        operad: Operad,
        #[arg(long)]
        gamma: u32,
        #[arg(long)]
        arity: u32,
    },
    /// Partial composition x o_i y in T M_gamma.
    Compose {
        #[arg(long)]
        gamma: u32,
        #[arg(long)]
        x: String,
        #[arg(long)]
        i: usize,
        #[arg(long)]
        y: String,
    },
    /// Rewrite a syntax tree to its hook normal form.
    NormalForm {
        #[arg(long)]
        gamma: u32,
        /// Prefix notation, e.g. "(R1 . (L1 . .))"; L/R/M label left,
        /// right and middle generators, "." is a leaf.
        #[arg(long)]
        tree: String,
        /// Print each step as tree<TAB>rule-family<TAB>position.
        #[arg(long)]
        trace: bool,
    },
    /// Congruence classes of trees of one arity (word, class size).
    Classes {
        #[arg(long)]
        gamma: u32,
        #[arg(long)]
        arity: usize,
    },
    /// K-basis computations.
    #[command(subcommand)]
    Kbasis(KbasisCommand),
    /// Example algebras built by the construction M.
    #[command(subcommand)]
    Algebra(AlgebraCommand),
    /// Trias-side commands.
    #[command(subcommand)]
    Trias(TriasCommand),
    /// Run a named verification suite (or `all`).
    Verify(VerifyArgs),
}

#[derive(Subcommand)]
enum KbasisCommand {
    /// Expand K^(gamma)_word in the word basis.
    Expand {
        #[arg(long)]
        gamma: u32,
        #[arg(long)]
        word: String,
    },
    /// Compose two K-basis elements; prints the K-indices of the result.
    Compose {
        #[arg(long)]
        gamma: u32,
        #[arg(long)]
        x: String,
        #[arg(long)]
        i: usize,
        #[arg(long)]
        y: String,
    },
}

#[derive(Subcommand)]
enum AlgebraCommand {
    /// Reproduce the worked example evaluations of one algebra.
    Demo {
        #[arg(long, value_enum)]
        which: Which,
        #[arg(long)]
        gamma: Option<u32>,
    },
    /// Check interface laws, relations and unit structure on a bounded
    /// universe.
    Verify {
        #[arg(long, value_enum)]
        which: Which,
        #[arg(long)]
        gamma: u32,
        /// Universe bound: largest integer (pos), word length (words,
        /// mwords, free); ignored for sets.
        #[arg(long, default_value_t = 2)]
        bound: u32,
    },
}

#[derive(Subcommand)]
enum TriasCommand {
    Dims {
        #[arg(long)]
        gamma: u32,
        #[arg(long, default_value_t = 7)]
        max_arity: u32,
        #[arg(long, value_enum, default_value = "tsv")]
        format: Format,
    },
    Enumerate {
        #[arg(long)]
        gamma: u32,
        #[arg(long)]
        arity: u32,
    },
    #[command(subcommand)]
    Verify(TriasVerify),
}

#[derive(Subcommand)]
enum TriasVerify {
    /// The eleven relation families and the degree-2 quotient dimension.
    Presentation {
        #[arg(long)]
        gamma: u32,
    },
    /// Convergence of the oriented rules and normal-form counts.
    Pbw {
        #[arg(long)]
        gamma: u32,
        #[arg(long, default_value_t = 3)]
        degree: usize,
    },
}

#[derive(Args)]
struct VerifyArgs {
    /// One of: dims, dias-axioms, symmetries, basic, rooted, convergence,
    /// kbasis, alt-presentation, presentation, pbw, algebras, all.
    which: String,
    /// Cap on the gamma sweep; defaults to the budget preset.
    #[arg(long)]
    gamma: Option<u32>,
    /// Budget preset; the PLURIOPS_BUDGET environment variable overrides
    /// this flag.
    #[arg(long, default_value = "desk")]
    budget: String,
    /// Seed for all sampled instances.
    #[arg(long, default_value_t = 20160203)]
    seed: u64,
    /// Degree bound override for the convergence and pbw checks.
    #[arg(long)]
    degree: Option<usize>,
    #[arg(long, value_enum, default_value = "tsv")]
    format: Format,
}

fn main() -> ExitCode {
    // Die quietly when a pipe downstream closes early (e.g. `... | head`).
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, String> {
    match cli.command {
        Command::Dims { operad, gamma, max_arity, format } => {
            print_dims(operad, gamma, max_arity, format);
            Ok(ExitCode::SUCCESS)
        }
        Command::Enumerate { operad, gamma, arity } => {
            let words = match operad {
                Operad::Dias => dias::enumerate(gamma, arity),
                Operad::Trias => trias::enumerate(gamma, arity),
            };
            for w in words {
                println!("{w}");
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Compose { gamma, x, i, y } => {
            let x = Word::parse(&x, gamma).map_err(|e| e.to_string())?;
            let y = Word::parse(&y, gamma).map_err(|e| e.to_string())?;
            let composed = x.compose(i, &y).map_err(|e| e.to_string())?;
            println!("{composed}");
            Ok(ExitCode::SUCCESS)
        }
        Command::NormalForm { gamma, tree, trace } => {
            let tree = SyntaxTree::parse(&tree).map_err(|e| e.to_string())?;
            tree.wordt(gamma).map_err(|e| e.to_string())?;
            let rules = if tree.contains_middle() {
                trias::trias_rules(gamma)
            } else {
                rewrite::dias_rules(gamma)
            };
            let (nf, steps) =
                rewrite::normal_form_trace(&tree, &rules).map_err(|e| e.to_string())?;
            if trace {
                for step in &steps {
                    println!("{}\t{}\t{}", step.tree, step.family, step.position);
                }
            }
            println!("{nf}");
            Ok(ExitCode::SUCCESS)
        }
        Command::Classes { gamma, arity } => {
            if arity == 0 {
                return Err("arity must be at least 1".into());
            }
            let gens = pluriops::syntax::dias_generators(gamma);
            let rules = rewrite::dias_rules(gamma);
            let classes = rewrite::congruence_classes(&gens, &rules, arity);
            println!("word\tsize");
            let mut rows: Vec<(Word, usize)> = classes
                .iter()
                .map(|class| (class[0].word(gamma).unwrap(), class.len()))
                .collect();
            rows.sort();
            for (word, size) in rows {
                println!("{word}\t{size}");
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Kbasis(cmd) => run_kbasis(cmd),
        Command::Algebra(cmd) => run_algebra(cmd),
        Command::Trias(cmd) => run_trias(cmd),
        Command::Verify(args) => run_verify(args),
    }
}

fn print_dims(operad: Operad, gamma: u32, max_arity: u32, format: Format) {
    let dims: Vec<(u32, u64)> = (1..=max_arity)
        .map(|n| {
            let d = match operad {
                Operad::Dias => dias::dim(gamma, n),
                Operad::Trias => trias::dim(gamma, n),
            };
            (n, d)
        })
        .collect();
    match format {
        Format::Tsv => {
            println!("gamma\tn\tdim");
            for (n, d) in dims {
                println!("{gamma}\t{n}\t{d}");
            }
        }
        Format::Json => {
            let rows: Vec<serde_json::Value> = dims
                .iter()
                .map(|(n, d)| serde_json::json!({"gamma": gamma, "n": n, "dim": d}))
                .collect();
            let doc = serde_json::json!({"schema": 1, "dims": rows});
            println!("{}", serde_json::to_string_pretty(&doc).unwrap());
        }
    }
}

fn run_kbasis(cmd: KbasisCommand) -> Result<ExitCode, String> {
    match cmd {
        KbasisCommand::Expand { gamma, word } => {
            let w = Word::parse(&word, gamma).map_err(|e| e.to_string())?;
            let expansion = linear::k_of_word(&w).map_err(|e| e.to_string())?;
            println!("{expansion}");
        }
        KbasisCommand::Compose { gamma, x, i, y } => {
            let x = Word::parse(&x, gamma).map_err(|e| e.to_string())?;
            let y = Word::parse(&y, gamma).map_err(|e| e.to_string())?;
            let result = linear::k_compose(&x, i, &y).map_err(|e| e.to_string())?;
            println!("{result}");
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn run_algebra(cmd: AlgebraCommand) -> Result<ExitCode, String> {
    match cmd {
        AlgebraCommand::Demo { which, gamma } => {
            run_demo(which, gamma)?;
            Ok(ExitCode::SUCCESS)
        }
        AlgebraCommand::Verify { which, gamma, bound } => {
            let failures = verify_algebra(which, gamma, bound as usize);
            if failures.is_empty() {
                println!("PASS");
                Ok(ExitCode::SUCCESS)
            } else {
                for f in &failures {
                    println!("FAIL\t{f}");
                }
                Ok(ExitCode::from(1))
            }
        }
    }
}

fn demo_gamma(which: Which, gamma: Option<u32>, minimum: u32) -> Result<u32, String> {
    let g = gamma.unwrap_or(minimum);
    if g < minimum {
        return Err(format!(
            "the {} demo needs gamma >= {minimum}",
            match which {
                Which::Pos => "pos",
                Which::Sets => "sets",
                Which::Words => "words",
                Which::Mwords => "mwords",
                Which::Free => "free",
            }
        ));
    }
    Ok(g)
}

fn run_demo(which: Which, gamma: Option<u32>) -> Result<(), String> {
    match which {
        Which::Pos => {
            let g = demo_gamma(which, gamma, 3)?;
            let p = algebra::MConstruction(algebra::PosAlgebra { gamma: g });
            println!("2 dashv_3 5 = {}", p.dashv(3, &2, &5));
            println!("1 vdash_3 2 = {}", p.vdash(3, &1, &2));
        }
        Which::Sets => {
            let g = demo_gamma(which, gamma, 5)?;
            let p = algebra::MConstruction(algebra::SetsAlgebra { gamma: g });
            let fmt = |s: &std::collections::BTreeSet<u32>| {
                let elems: Vec<String> = s.iter().map(|v| v.to_string()).collect();
                format!("{{{}}}", elems.join(","))
            };
            let x = [2u32, 4].into_iter().collect();
            let y = [1u32, 3, 5].into_iter().collect();
            println!("{} dashv_3 {} = {}", fmt(&x), fmt(&y), fmt(&p.dashv(3, &x, &y)));
            let x2 = [1u32, 2, 4].into_iter().collect();
            println!("{} vdash_3 {} = {}", fmt(&x2), fmt(&y), fmt(&p.vdash(3, &x2, &y)));
        }
        Which::Words => {
            let g = demo_gamma(which, gamma, 4)?;
            let p = algebra::MConstruction(algebra::WordsAlgebra { gamma: g });
            let fmt = |w: &Vec<u32>| w.iter().map(|l| l.to_string()).collect::<String>();
            let x = vec![4, 1, 2];
            let y = vec![1, 4, 2, 3, 1];
            println!("{} dashv_3 {} = {}", fmt(&x), fmt(&y), fmt(&p.dashv(3, &x, &y)));
            let x2 = vec![1, 1];
            let y2 = vec![3, 2, 3];
            println!("{} vdash_2 {} = {}", fmt(&x2), fmt(&y2), fmt(&p.vdash(2, &x2, &y2)));
        }
        Which::Mwords => {
            let g = demo_gamma(which, gamma, 3)?;
            let p = algebra::MConstruction(algebra::MWordsAlgebra { gamma: g });
            let x = algebra::MWord::parse("3 2! 5").unwrap();
            let y = algebra::MWord::parse("4 4! 1").unwrap();
            println!("{x} dashv_3 {y} = {}", p.dashv(3, &x, &y));
            let x2 = algebra::MWord::parse("1 3! 4 1! 3").unwrap();
            let y2 = algebra::MWord::parse("3 1 2! 3 1! 1").unwrap();
            println!("{x2} vdash_2 {y2} = {}", p.vdash(2, &x2, &y2));
        }
        Which::Free => {
            let g = demo_gamma(which, gamma, 4)?;
            let u = Word::parse("101241", g).map_err(|e| e.to_string())?;
            let v = Word::parse("203", g).map_err(|e| e.to_string())?;
            println!("{u} dashv_2 {v} = {}", algebra::free_dashv(2, &u, &v).unwrap());
            println!("{u} vdash_3 {v} = {}", algebra::free_vdash(3, &u, &v).unwrap());
        }
    }
    Ok(())
}

fn verify_algebra(which: Which, gamma: u32, bound: usize) -> Vec<String> {
    let mut failures = Vec::new();
    match which {
        Which::Pos => {
            let m = algebra::PosAlgebra { gamma };
            let universe = algebra::universes::pos(bound.max(2) as u32);
            collect(&mut failures, algebra::check_multiproj_interface(&m, &universe));
            collect(
                &mut failures,
                algebra::check_pluri_relations(&algebra::MConstruction(m), &universe),
            );
        }
        Which::Sets => {
            let m = algebra::SetsAlgebra { gamma };
            let universe = algebra::universes::sets(gamma);
            collect(&mut failures, algebra::check_multiproj_interface(&m, &universe));
            collect(
                &mut failures,
                algebra::check_pluri_relations(&algebra::MConstruction(m), &universe),
            );
        }
        Which::Words => {
            let m = algebra::WordsAlgebra { gamma };
            let universe = algebra::universes::words(gamma, bound);
            collect(&mut failures, algebra::check_multiproj_interface(&m, &universe));
            collect(
                &mut failures,
                algebra::check_pluri_relations(&algebra::MConstruction(m), &universe),
            );
        }
        Which::Mwords => {
            let m = algebra::MWordsAlgebra { gamma };
            let universe = algebra::universes::mwords(gamma, bound);
            collect(&mut failures, algebra::check_multiproj_interface(&m, &universe));
            collect(
                &mut failures,
                algebra::check_pluri_relations(&algebra::MConstruction(m), &universe),
            );
        }
        Which::Free => {
            let m = algebra::FreeWordsAlgebra { gamma };
            let universe = algebra::universes::free_words(gamma, bound);
            collect(&mut failures, algebra::check_multiproj_interface(&m, &universe));
            let dias_universe = algebra::universes::dias_words(gamma, bound as u32 + 1);
            collect(
                &mut failures,
                algebra::check_pluri_relations(&algebra::MConstruction(m), &dias_universe),
            );
        }
    }
    failures
}

fn collect(failures: &mut Vec<String>, violations: Vec<algebra::Violation>) {
    failures.extend(violations.into_iter().map(|v| v.to_string()));
}

fn run_trias(cmd: TriasCommand) -> Result<ExitCode, String> {
    match cmd {
        TriasCommand::Dims { gamma, max_arity, format } => {
            print_dims(Operad::Trias, gamma, max_arity, format);
            Ok(ExitCode::SUCCESS)
        }
        TriasCommand::Enumerate { gamma, arity } => {
            for w in trias::enumerate(gamma, arity) {
                println!("{w}");
            }
            Ok(ExitCode::SUCCESS)
        }
        TriasCommand::Verify(TriasVerify::Presentation { gamma }) => {
            let report = trias::check_presentation(gamma);
            for (family, ok) in &report.families {
                println!("family {family}\t{}", if *ok { "PASS" } else { "FAIL" });
            }
            println!(
                "quotient\t{} (free {} - rank {}), expected {}",
                report.quotient_dim, report.free_dim, report.relation_rank, report.expected_dim
            );
            Ok(if report.passed() { ExitCode::SUCCESS } else { ExitCode::from(1) })
        }
        TriasCommand::Verify(TriasVerify::Pbw { gamma, degree }) => {
            let report = trias::check_pbw(gamma, degree);
            println!("terminating\t{}", if report.terminating { "PASS" } else { "FAIL" });
            println!("confluent\t{}", if report.confluent { "PASS" } else { "FAIL" });
            println!(
                "normal forms are extended hooks\t{}",
                if report.normal_forms_are_extended_hooks { "PASS" } else { "FAIL" }
            );
            for (arity, got, want) in &report.normal_form_counts {
                println!(
                    "arity {arity}\t{got} normal forms, dimension {want}\t{}",
                    if got == want { "PASS" } else { "FAIL" }
                );
            }
            Ok(if report.passed() { ExitCode::SUCCESS } else { ExitCode::from(1) })
        }
    }
}

fn run_verify(args: VerifyArgs) -> Result<ExitCode, String> {
    let budget_name = std::env::var("PLURIOPS_BUDGET").unwrap_or(args.budget.clone());
    let budget = Budget::parse(&budget_name)
        .ok_or_else(|| format!("unknown budget '{budget_name}' (smoke|desk|deep)"))?;
    let gamma = args.gamma.unwrap_or_else(|| budget.max_gamma());
    let reports = match (args.which.as_str(), args.degree) {
        ("convergence", Some(degree)) => {
            vec![checks::check_convergence_at(gamma.min(3), degree)]
        }
        ("pbw", Some(degree)) => vec![checks::check_pbw_at(gamma.min(2), degree)],
        _ => checks::run_check(&args.which, gamma, budget, args.seed)
            .ok_or_else(|| format!("unknown check '{}'", args.which))?,
    };
    let all_passed = reports.iter().all(Report::passed);
    match args.format {
        Format::Tsv => {
            println!("check\tgamma\tbounds\tinstances\tfailures\tstatus");
            for report in &reports {
                println!("{}", report.tsv_row());
                for failure in report.failures.iter().take(10) {
                    println!("#\t{}\t{} != {}", failure.inputs, failure.lhs, failure.rhs);
                }
            }
        }
        Format::Json => {
            let doc = serde_json::json!({
                "schema": 1,
                "budget": budget.to_string(),
                "seed": args.seed,
                "reports": reports.iter().map(Report::json).collect::<Vec<_>>(),
            });
            println!("{}", serde_json::to_string_pretty(&doc).unwrap());
        }
    }
    for report in &reports {
        eprintln!("# {} finished in {:?}", report.check, report.wall);
    }
    Ok(if all_passed { ExitCode::SUCCESS } else { ExitCode::from(1) })
}
