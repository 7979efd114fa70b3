//! Command-line driver for the msaft library: counting, enumeration,
//! ideal generators, and the cross-verification pipeline.
//!
//! Exit codes: 0 success, 1 a verification failed, 2 usage error,
//! 3 a resource bound stopped the run (lift with --force where offered).

mod render;
mod verify;

use clap::{Parser, Subcommand, ValueEnum};
use msaft::binom::{msaft_count_closed, verify_identity, BigCount, IdentityId};
use msaft::ideal::{generate_st_minors, leading_ideal, s_pair_check, SPairOptions};
use msaft::msafts::{
    dihedral_classes, enumerate_forbidden_triples, enumerate_msafts_bruteforce,
    enumerate_msafts_bruteforce_with_bound, enumerate_msafts_via_walks, Msaft,
};
use msaft::ngon::NGon;
use msaft::strip::count_msafts_lgv;
use serde_json::{json, Map, Value};
use std::process::ExitCode;
use std::time::Duration;

/// Walk enumeration is fast but its output grows like 4.6^n; past this
/// point demand an explicit --force.
const WALK_BOUND: usize = 10;
const BRUTE_BOUND: usize = 8;

#[derive(Parser)]
#[command(name = "msaft", version, about = "Secant configurations of the regular n-gon: exact counts, enumeration, and the determinantal ideal they support", max_term_width = 100)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    /// Grow triple-free sets over all secants and keep the maximal ones
    Bruteforce,
    /// Assemble the sets from injective neighbor walks, one per family
    Walks,
    /// Sum path-count determinants over the strip graph
    Lgv,
    /// Evaluate the closed-form count
    Closed,
    /// Run every method and report each result
    All,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Dot,
}

#[derive(Subcommand)]
enum Command {
    /// Count the maximal triple-free sets by one or all methods
    Count {
        /// Number of polygon vertices (at least 3)
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value = "all")]
        method: Method,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        /// Lift the size bounds on the enumeration methods
        #[arg(long)]
        force: bool,
    },
    /// List every maximal triple-free set
    Enumerate {
        /// Number of polygon vertices (at least 3)
        #[arg(long)]
        n: usize,
        /// Enumeration method (a counting method is a usage error here)
        #[arg(long, value_enum, default_value = "walks")]
        method: Method,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        /// Display vertices as 1..n instead of 0..n-1 (text and dot only)
        #[arg(long)]
        one_indexed: bool,
        /// Lift the size bounds on the enumeration methods
        #[arg(long)]
        force: bool,
    },
    /// List the minimal forbidden triples of secants
    Triples {
        /// Number of polygon vertices (at least 3)
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        /// Display vertices as 1..n instead of 0..n-1 (text only)
        #[arg(long)]
        one_indexed: bool,
    },
    /// Print the interval 3x3-minor generators of the ideal
    Minors {
        /// Number of polygon vertices (at least 3)
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        /// Display vertices as 1..n instead of 0..n-1 (text only)
        #[arg(long)]
        one_indexed: bool,
    },
    /// Print the leading monomials of the generators
    Leading {
        /// Number of polygon vertices (at least 3)
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        /// Display vertices as 1..n instead of 0..n-1 (text only)
        #[arg(long)]
        one_indexed: bool,
    },
    /// Reduce every S-pair of the generators and report the remainders
    GroebnerCheck {
        /// Number of polygon vertices (at least 3)
        #[arg(long)]
        n: usize,
        /// Run past the built-in bound of n = 6
        #[arg(long)]
        force: bool,
        /// Stop after this many seconds and report the pairs left over
        #[arg(long)]
        max_seconds: Option<u64>,
        /// Reduce pairs with coprime leading monomials instead of skipping them
        #[arg(long)]
        no_coprime_skip: bool,
    },
    /// Check the binomial-identity suite for every n up to a limit
    Identities {
        #[arg(long, default_value_t = 300)]
        max_n: u64,
    },
    /// Run every cross-check the library supports at one n
    VerifyAll {
        /// Number of polygon vertices (at least 3)
        #[arg(long)]
        n: usize,
    },
    /// Emit the maximal sets as machine-readable JSON
    Export {
        /// Number of polygon vertices (at least 3)
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        /// Display vertices as 1..n instead of 0..n-1 (text and dot only)
        #[arg(long)]
        one_indexed: bool,
        /// Lift the size bound on walk enumeration
        #[arg(long)]
        force: bool,
    },
}

fn main() -> ExitCode {
    // Die quietly when the reader closes the pipe (e.g. piping into head)
    // instead of panicking on the failed write.
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = Cli::parse();
    let code = match cli.command {
        Command::Count { n, method, format, force } => cmd_count(n, method, format, force),
        Command::Enumerate { n, method, format, one_indexed, force } => {
            cmd_enumerate(n, method, format, one_indexed, force)
        }
        Command::Triples { n, format, one_indexed } => cmd_triples(n, format, one_indexed),
        Command::Minors { n, format, one_indexed } => cmd_minors(n, format, one_indexed),
        Command::Leading { n, format, one_indexed } => cmd_leading(n, format, one_indexed),
        Command::GroebnerCheck { n, force, max_seconds, no_coprime_skip } => {
            cmd_groebner_check(n, force, max_seconds, no_coprime_skip)
        }
        Command::Identities { max_n } => cmd_identities(max_n),
        Command::VerifyAll { n } => match check_n(n) {
            Ok(()) => verify::verify_all(n),
            Err(code) => code,
        },
        Command::Export { n, format, one_indexed, force } => {
            cmd_enumerate(n, Method::Walks, format, one_indexed, force)
        }
    };
    ExitCode::from(code)
}

fn usage(msg: &str) -> u8 {
    eprintln!("error: {msg}");
    2
}

fn check_n(n: usize) -> Result<(), u8> {
    if n < 3 {
        Err(usage("--n must be at least 3"))
    } else {
        Ok(())
    }
}

fn walks_list(g: &NGon, force: bool) -> Result<Vec<Msaft>, u8> {
    if g.n() > WALK_BOUND && !force {
        eprintln!(
            "error: walk enumeration is limited to n <= {WALK_BOUND}, got n = {}; pass --force to lift the bound",
            g.n()
        );
        return Err(3);
    }
    Ok(enumerate_msafts_via_walks(g))
}

fn brute_list(g: &NGon, force: bool) -> Result<Vec<Msaft>, u8> {
    let result = if force {
        enumerate_msafts_bruteforce_with_bound(g, g.n())
    } else {
        enumerate_msafts_bruteforce(g)
    };
    result.map_err(|e| {
        eprintln!("error: {e}; pass --force to lift the bound");
        3
    })
}

fn cmd_count(n: usize, method: Method, format: Format, force: bool) -> u8 {
    if let Err(code) = check_n(n) {
        return code;
    }
    if format == Format::Dot {
        return usage("count emits text or json; dot output lists sets, use enumerate or export");
    }
    let g = NGon::new(n);
    let all_mode = method == Method::All;
    let methods = if all_mode {
        vec![Method::Bruteforce, Method::Walks, Method::Lgv, Method::Closed]
    } else {
        vec![method]
    };
    // In all mode an out-of-bound enumeration method degrades to a skip
    // note; requested by name it is a hard abort.
    let mut rows: Vec<(&'static str, Option<BigCount>)> = Vec::new();
    for m in methods {
        let row = match m {
            Method::Bruteforce => {
                if n > BRUTE_BOUND && !force && all_mode {
                    ("bruteforce", None)
                } else {
                    match brute_list(&g, force) {
                        Ok(list) => ("bruteforce", Some(BigCount::from(list.len()))),
                        Err(code) => return code,
                    }
                }
            }
            Method::Walks => {
                if n > WALK_BOUND && !force && all_mode {
                    ("walks", None)
                } else {
                    match walks_list(&g, force) {
                        Ok(list) => ("walks", Some(BigCount::from(list.len()))),
                        Err(code) => return code,
                    }
                }
            }
            Method::Lgv => ("lgv", Some(count_msafts_lgv(&g))),
            Method::Closed => ("closed", Some(msaft_count_closed(n as u64))),
            Method::All => unreachable!("expanded above"),
        };
        rows.push(row);
    }
    match format {
        Format::Text => {
            for (name, count) in &rows {
                match count {
                    Some(c) => println!("{name}: {c}"),
                    None => println!("{name}: skipped (n = {n} too large; pass --force)"),
                }
            }
        }
        Format::Json => {
            let mut counts = Map::new();
            for (name, count) in &rows {
                if let Some(c) = count {
                    // Strings, not numbers: the counts outgrow every fixed
                    // integer width.
                    counts.insert((*name).into(), json!(c.to_string()));
                }
            }
            let mut root = Map::new();
            root.insert("n".into(), json!(n));
            root.insert("counts".into(), Value::Object(counts));
            println!("{}", Value::Object(root));
        }
        Format::Dot => unreachable!("rejected above"),
    }
    0
}

fn cmd_enumerate(n: usize, method: Method, format: Format, one_indexed: bool, force: bool) -> u8 {
    if let Err(code) = check_n(n) {
        return code;
    }
    let g = NGon::new(n);
    let list = match method {
        Method::Walks => match walks_list(&g, force) {
            Ok(list) => list,
            Err(code) => return code,
        },
        Method::Bruteforce => match brute_list(&g, force) {
            Ok(list) => list,
            Err(code) => return code,
        },
        Method::Lgv | Method::Closed | Method::All => {
            return usage("enumeration needs a listing method: walks or bruteforce");
        }
    };
    let off = one_indexed as usize;
    match format {
        Format::Text => {
            for m in &list {
                println!("{}", render::secant_list_text(m.secants(), off));
            }
        }
        Format::Json => {
            let classes = dihedral_classes(&g, &list)
                .expect("a complete enumeration is closed under the dihedral action");
            println!("{}", render::msafts_json(n, &list, classes.len()));
        }
        Format::Dot => print!("{}", render::msafts_dot(n, &list, off)),
    }
    0
}

fn cmd_triples(n: usize, format: Format, one_indexed: bool) -> u8 {
    if let Err(code) = check_n(n) {
        return code;
    }
    let g = NGon::new(n);
    let triples = enumerate_forbidden_triples(&g);
    let off = one_indexed as usize;
    match format {
        Format::Text => {
            for t in &triples {
                println!("{}", render::secant_list_text(t, off));
            }
        }
        Format::Json => {
            let mut root = Map::new();
            root.insert("n".into(), json!(n));
            root.insert("count".into(), json!(triples.len()));
            root.insert(
                "triples".into(),
                Value::Array(triples.iter().map(|t| render::secant_list_json(t)).collect()),
            );
            println!("{}", Value::Object(root));
        }
        Format::Dot => return usage("triples emits text or json"),
    }
    0
}

fn cmd_minors(n: usize, format: Format, one_indexed: bool) -> u8 {
    if let Err(code) = check_n(n) {
        return code;
    }
    let g = NGon::new(n);
    let gs = generate_st_minors(&g);
    let o = gs.order();
    let off = one_indexed as usize;
    match format {
        Format::Text => {
            for (p, m) in gs.generators().iter().zip(gs.minors()) {
                println!(
                    "rows {{{},{},{}}} cols {{{},{},{}}}: {}",
                    m.rows[0] + off,
                    m.rows[1] + off,
                    m.rows[2] + off,
                    m.cols[0] + off,
                    m.cols[1] + off,
                    m.cols[2] + off,
                    render::polynomial_text(o, p, off)
                );
            }
        }
        Format::Json => {
            let minors: Vec<Value> = gs
                .generators()
                .iter()
                .zip(gs.minors())
                .map(|(p, m)| {
                    let mut entry = Map::new();
                    entry.insert("rows".into(), json!(m.rows));
                    entry.insert("cols".into(), json!(m.cols));
                    entry.insert("polynomial".into(), json!(render::polynomial_text(o, p, 0)));
                    Value::Object(entry)
                })
                .collect();
            let mut root = Map::new();
            root.insert("n".into(), json!(n));
            root.insert("count".into(), json!(gs.len()));
            root.insert("minors".into(), Value::Array(minors));
            println!("{}", Value::Object(root));
        }
        Format::Dot => return usage("minors emits text or json"),
    }
    0
}

fn cmd_leading(n: usize, format: Format, one_indexed: bool) -> u8 {
    if let Err(code) = check_n(n) {
        return code;
    }
    let g = NGon::new(n);
    let gs = generate_st_minors(&g);
    let o = gs.order();
    let monomials = leading_ideal(&gs);
    let off = one_indexed as usize;
    match format {
        Format::Text => {
            for m in &monomials {
                println!("{}", render::monomial_text(o, m, off));
            }
        }
        Format::Json => {
            let mut root = Map::new();
            root.insert("n".into(), json!(n));
            root.insert("count".into(), json!(monomials.len()));
            root.insert(
                "monomials".into(),
                Value::Array(
                    monomials
                        .iter()
                        .map(|m| json!(render::monomial_text(o, m, 0)))
                        .collect(),
                ),
            );
            println!("{}", Value::Object(root));
        }
        Format::Dot => return usage("leading emits text or json"),
    }
    0
}

fn cmd_groebner_check(n: usize, force: bool, max_seconds: Option<u64>, no_coprime_skip: bool) -> u8 {
    if let Err(code) = check_n(n) {
        return code;
    }
    let g = NGon::new(n);
    let gs = generate_st_minors(&g);
    let opts = SPairOptions {
        force,
        time_limit: max_seconds.map(Duration::from_secs),
    };
    let report = match s_pair_check(&gs, !no_coprime_skip, &opts) {
        Ok(report) => report,
        Err(e) => {
            eprintln!("error: {e}; pass --force to lift the bound");
            return 3;
        }
    };
    println!("generators: {}", report.generator_count);
    println!("pairs: {}", report.pair_count);
    println!("skipped (coprime leading monomials): {}", report.skipped_coprime);
    println!("reduced to zero: {}", report.reduced_to_zero);
    if !report.completed() {
        println!("unprocessed (time limit): {}", report.unprocessed);
        eprintln!("error: the time limit cut the run short; raise --max-seconds");
        3
    } else if !report.nonzero_pairs.is_empty() {
        for (i, j) in &report.nonzero_pairs {
            println!("nonzero remainder: pair ({i},{j})");
        }
        1
    } else {
        println!("all S-pairs reduce to zero");
        0
    }
}

fn cmd_identities(max_n: u64) -> u8 {
    if max_n < 1 {
        return usage("--max-n must be at least 1");
    }
    let mut all_hold = true;
    for id in IdentityId::ALL {
        let failure = (1..=max_n).map(|n| verify_identity(id, n)).find(|c| !c.equal);
        match failure {
            None => println!("{id}: holds for n = 1..={max_n}"),
            Some(c) => {
                println!("{id}: FAILS at n = {} (lhs {}, rhs {})", c.n, c.lhs, c.rhs);
                all_hold = false;
            }
        }
    }
    if all_hold {
        0
    } else {
        1
    }
}
