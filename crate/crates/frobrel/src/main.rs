//! Batch command-line front end.
//!
//! Exit codes: 0 for success, 1 when a check or precondition fails, 2 for
//! unreadable or malformed input. Diagnostics go to standard error, data to
//! standard output.

use std::collections::BTreeSet;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use frobrel::correspondence::{frob_to_simplicial, simplicial_to_frob, CorrespondenceError};
use frobrel::enumerate::{brute_force, classify, smart_enumerate, up_to_iso};
use frobrel::exterior::SubsetSpec;
use frobrel::files::{
    self, FileError, FrobeniusFile, GroupoidFile, ResultsFile, SimplicialFile, SubsetSpecFile,
};
use frobrel::frobenius::FrobeniusObject;
use frobrel::rel::Relation;
use frobrel::term::{self, genus_invariant};
use frobrel::verdict::Verdict;

#[derive(Parser)]
#[command(
    name = "frobrel",
    version,
    about = "Exact computations with Frobenius objects in the category of relations"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Direction {
    Simplicial,
    Frobenius,
}

#[derive(Subcommand)]
enum Command {
    /// Verify an object file and report its derived structure and properties
    Check {
        /// Object file to check
        path: PathBuf,
    },
    /// Convert an object file to simplicial form or back
    Convert {
        /// Input file (object or simplicial, depending on direction)
        path: PathBuf,
        /// Target form
        #[arg(long, value_enum)]
        to: Direction,
        /// Output file; standard output when omitted
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Build the nerve and/or the induced Frobenius object of a groupoid
    Nerve {
        /// Groupoid file
        path: PathBuf,
        /// Where to write the simplicial file
        #[arg(long)]
        simplicial: Option<PathBuf>,
        /// Where to write the object file
        #[arg(long)]
        object: Option<PathBuf>,
    },
    /// Build an exterior-algebra object from a builtin or a member file
    Exterior {
        /// Ambient dimension
        dim: u8,
        /// `one-volume`, `torus`, or a path to a member file
        spec: String,
        /// Output file; standard output when omitted
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Evaluate a cobordism term against an object file
    Eval {
        /// Term text or builtin name (`mul ; counit`, `snake_left`), or
        /// `@path` to read the term from a file
        term: String,
        /// Object file
        path: PathBuf,
    },
    /// Evaluate the closed-surface invariant for genus 0 through max
    Genus {
        /// Object file
        path: PathBuf,
        /// Largest genus to evaluate
        #[arg(long, default_value_t = 2)]
        max: usize,
    },
    /// Enumerate all objects on a small carrier
    Enumerate {
        /// Carrier size (0 through 3)
        n: usize,
        /// Reduce to representatives up to isomorphism
        #[arg(long)]
        up_to_iso: bool,
        /// Print property tallies
        #[arg(long)]
        classify: bool,
        /// Also run the raw search (carrier size up to 2) and compare
        #[arg(long)]
        oracle_check: bool,
        /// Results file: written when absent, compared against when present
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Write the rotation, dagger, and opposite duals of an object
    Duals {
        /// Object file
        path: PathBuf,
        /// Output directory; the input's directory when omitted
        #[arg(long)]
        out_dir: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(error) => {
            eprintln!("error: {error}");
            ExitCode::from(2)
        }
    }
}

const PASS: ExitCode = ExitCode::SUCCESS;
const FAIL: ExitCode = ExitCode::FAILURE;

fn run(cli: Cli) -> Result<ExitCode, FileError> {
    match cli.command {
        Command::Check { path } => cmd_check(&path),
        Command::Convert { path, to, out } => cmd_convert(&path, to, out.as_deref()),
        Command::Nerve {
            path,
            simplicial,
            object,
        } => cmd_nerve(&path, simplicial.as_deref(), object.as_deref()),
        Command::Exterior { dim, spec, out } => cmd_exterior(dim, &spec, out.as_deref()),
        Command::Eval { term, path } => {
            let text = match term.strip_prefix('@') {
                Some(file) => std::fs::read_to_string(file)?.trim().to_owned(),
                None => term,
            };
            cmd_eval(&text, &path)
        }
        Command::Genus { path, max } => cmd_genus(&path, max),
        Command::Enumerate {
            n,
            up_to_iso: reduce,
            classify: tallies,
            oracle_check,
            out,
        } => cmd_enumerate(n, reduce, tallies, oracle_check, out.as_deref()),
        Command::Duals { path, out_dir } => cmd_duals(&path, out_dir.as_deref()),
    }
}

fn load_object(path: &Path) -> Result<FrobeniusObject, FileError> {
    files::load::<FrobeniusFile>(path)?.to_object()
}

fn emit<T: serde::Serialize>(value: &T, out: Option<&Path>) -> Result<(), FileError> {
    match out {
        Some(path) => files::save(path, value),
        None => {
            print!("{}", files::to_pretty_string(value)?);
            Ok(())
        }
    }
}

fn print_verdict(name: &str, verdict: &Verdict) -> bool {
    println!("{name}: {verdict}");
    verdict.passes()
}

fn yes_no(flag: bool) -> &'static str {
    if flag {
        "yes"
    } else {
        "no"
    }
}

fn cmd_check(path: &Path) -> Result<ExitCode, FileError> {
    let f = load_object(path)?;
    let mut ok = true;
    ok &= print_verdict("unit axiom", &f.check_unit());
    ok &= print_verdict("counit axiom", &f.check_counit());
    ok &= print_verdict("Frobenius axiom", &f.check_frobenius());
    if !ok {
        return Ok(FAIL);
    }
    let derived = match f.extract_alpha() {
        Ok(derived) => derived,
        Err(error) => {
            eprintln!("derivation failed: {error}");
            return Ok(FAIL);
        }
    };
    println!("alpha-hat: {}", derived.alpha_hat());
    println!("nakayama: {}", derived.nakayama());
    let st: Vec<String> = f
        .carrier()
        .iter()
        .map(|x| format!("{x}: {}|{}", derived.source_of(x), derived.target_of(x)))
        .collect();
    println!("source|target: {{{}}}", st.join(", "));
    ok &= print_verdict("exchange identities", &f.check_md_identities(&derived));
    ok &= print_verdict("rotation invariance", &f.check_rotation_property(&derived));

    let id = Relation::identity(f.carrier(), 1);
    let semantic_checks: [(&str, &str, &str); 2] = [
        ("associativity", "mul * id ; mul", "id * mul ; mul"),
        ("coassociativity", "comul ; comul * id", "comul ; id * comul"),
    ];
    for (name, left, right) in semantic_checks {
        let l = term::parse(left).unwrap().evaluate(&f);
        let r = term::parse(right).unwrap().evaluate(&f);
        let verdict = if l == r {
            Verdict::Pass
        } else {
            Verdict::fail(name, Vec::new())
        };
        ok &= print_verdict(name, &verdict);
    }
    for snake in ["snake_left", "snake_right"] {
        let value = term::builtin(snake).unwrap().evaluate(&f);
        let verdict = if value == id {
            Verdict::Pass
        } else {
            Verdict::fail(snake, Vec::new())
        };
        ok &= print_verdict(snake, &verdict);
    }
    println!("commutative: {}", yes_no(f.is_commutative()));
    println!("special: {}", yes_no(f.is_special()));
    println!("dagger: {}", yes_no(f.is_dagger()));
    println!(
        "Nakayama nontrivial: {}",
        yes_no(!derived.nakayama().is_identity())
    );
    Ok(if ok { PASS } else { FAIL })
}

fn cmd_convert(path: &Path, to: Direction, out: Option<&Path>) -> Result<ExitCode, FileError> {
    match to {
        Direction::Simplicial => {
            let f = load_object(path)?;
            match frob_to_simplicial(&f) {
                Ok(a) => {
                    emit(&SimplicialFile::from_alpha(&a), out)?;
                    Ok(PASS)
                }
                Err(error) => {
                    eprintln!("object not convertible: {error}");
                    Ok(FAIL)
                }
            }
        }
        Direction::Frobenius => {
            let file: SimplicialFile = files::load(path)?;
            let a = file.to_alpha()?;
            match simplicial_to_frob(&a) {
                Ok(f) => {
                    emit(&FrobeniusFile::from_object(&f), out)?;
                    Ok(PASS)
                }
                Err(CorrespondenceError::PropertyFailed {
                    property,
                    violation,
                }) => {
                    eprintln!("precondition {property} fails: {violation}");
                    Ok(FAIL)
                }
                Err(error) => {
                    eprintln!("conversion failed: {error}");
                    Ok(FAIL)
                }
            }
        }
    }
}

fn cmd_nerve(
    path: &Path,
    simplicial: Option<&Path>,
    object: Option<&Path>,
) -> Result<ExitCode, FileError> {
    if simplicial.is_none() && object.is_none() {
        eprintln!("error: pass --simplicial and/or --object to choose the outputs");
        return Ok(ExitCode::from(2));
    }
    let g = files::load::<GroupoidFile>(path)?.to_groupoid()?;
    if let Verdict::Fail(violation) = g.validate() {
        eprintln!("groupoid axioms fail: {violation}");
        return Ok(FAIL);
    }
    if let Some(out) = simplicial {
        let nerve = g.nerve().expect("validated above");
        files::save(out, &SimplicialFile::from_alpha(&nerve))?;
        eprintln!("wrote {}", out.display());
    }
    if let Some(out) = object {
        let f = g.hcc_frobenius().expect("validated above");
        files::save(out, &FrobeniusFile::from_object(&f))?;
        eprintln!("wrote {}", out.display());
    }
    Ok(PASS)
}

fn cmd_exterior(dim: u8, spec: &str, out: Option<&Path>) -> Result<ExitCode, FileError> {
    let spec = match spec {
        "one-volume" => SubsetSpec::one_volume(dim)?,
        "torus" => {
            if dim != 2 {
                eprintln!("error: the torus lives in dimension 2, got {dim}");
                return Ok(ExitCode::from(2));
            }
            SubsetSpec::torus()
        }
        path => {
            let file: SubsetSpecFile = files::load(Path::new(path))?;
            if file.n != dim {
                eprintln!("error: file is {}-dimensional, got dim {dim}", file.n);
                return Ok(ExitCode::from(2));
            }
            file.to_spec()?
        }
    };
    match spec.build_frobenius() {
        Ok(f) => {
            emit(&FrobeniusFile::from_object(&f), out)?;
            Ok(PASS)
        }
        Err(error) => {
            eprintln!("candidate set rejected: {error}");
            Ok(FAIL)
        }
    }
}

fn cmd_eval(text: &str, path: &Path) -> Result<ExitCode, FileError> {
    let term = match term::parse(text) {
        Ok(term) => term,
        Err(error) => {
            eprintln!("error: {error}");
            return Ok(ExitCode::from(2));
        }
    };
    let f = load_object(path)?;
    if let Verdict::Fail(violation) = f.verify() {
        eprintln!("object does not verify: {violation}");
        return Ok(FAIL);
    }
    let (src, tgt) = term.arity();
    eprintln!(
        "term: {term}  (composition form: {})",
        term.composition_notation()
    );
    eprintln!("arity: {src} -> {tgt}");
    let value = term.evaluate(&f);
    for (a, b) in value.pairs() {
        println!("({}) -> ({})", a.join(", "), b.join(", "));
    }
    Ok(PASS)
}

fn cmd_genus(path: &Path, max: usize) -> Result<ExitCode, FileError> {
    let f = load_object(path)?;
    if let Verdict::Fail(violation) = f.verify() {
        eprintln!("object does not verify: {violation}");
        return Ok(FAIL);
    }
    for genus in 0..=max {
        println!("genus {genus}: {}", genus_invariant(&f, genus));
    }
    Ok(PASS)
}

fn cmd_enumerate(
    n: usize,
    reduce: bool,
    tallies: bool,
    oracle_check: bool,
    out: Option<&Path>,
) -> Result<ExitCode, FileError> {
    let objects = match smart_enumerate(n) {
        Ok(objects) => objects,
        Err(error) => {
            eprintln!("error: {error}");
            return Ok(ExitCode::from(2));
        }
    };
    println!("objects on {n} elements: {}", objects.len());

    if oracle_check {
        match brute_force(n) {
            Ok(raw) => {
                if raw == objects {
                    println!("oracle check: the raw search agrees");
                } else {
                    let raw_set: BTreeSet<_> = raw.iter().collect();
                    let pruned_set: BTreeSet<_> = objects.iter().collect();
                    eprintln!(
                        "oracle mismatch: raw {} vs pruned {} ({} only raw, {} only pruned)",
                        raw.len(),
                        objects.len(),
                        raw_set.difference(&pruned_set).count(),
                        pruned_set.difference(&raw_set).count(),
                    );
                    return Ok(FAIL);
                }
            }
            Err(error) => {
                eprintln!("error: {error}");
                return Ok(ExitCode::from(2));
            }
        }
    }

    let representatives = up_to_iso(&objects);
    if reduce {
        println!("up to isomorphism: {}", representatives.len());
    }
    if tallies {
        let counts = classify(&objects);
        println!("commutative: {}", counts.commutative);
        println!("special: {}", counts.special);
        println!("dagger: {}", counts.dagger);
        println!("special and dagger: {}", counts.special_and_dagger);
        println!("nontrivial Nakayama: {}", counts.nontrivial_nakayama);
    }

    if let Some(path) = out {
        let fresh = ResultsFile {
            carrier_size: n,
            counts: classify(&objects).into(),
            up_to_iso: representatives.len(),
            representatives: representatives
                .iter()
                .map(FrobeniusFile::from_object)
                .collect(),
        };
        if path.exists() {
            let frozen: ResultsFile = files::load(path)?;
            if frozen == fresh {
                println!("results match {}", path.display());
            } else {
                eprintln!("results differ from {}", path.display());
                return Ok(FAIL);
            }
        } else {
            files::save(path, &fresh)?;
            eprintln!("wrote {}", path.display());
        }
    }
    Ok(PASS)
}

fn cmd_duals(path: &Path, out_dir: Option<&Path>) -> Result<ExitCode, FileError> {
    let f = load_object(path)?;
    let dir = match out_dir {
        Some(dir) => dir.to_path_buf(),
        None => path.parent().unwrap_or(Path::new(".")).to_path_buf(),
    };
    let stem = path
        .file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| "object".to_owned());
    for (name, dual) in [
        ("rotation", f.rotation_dual()),
        ("dagger", f.dagger_dual()),
        ("opposite", f.opposite_dual()),
    ] {
        let out = dir.join(format!("{stem}.{name}.json"));
        files::save(&out, &FrobeniusFile::from_object(&dual))?;
        println!(
            "{name}: {}",
            if dual == f {
                "equal to the original"
            } else {
                "different"
            }
        );
        eprintln!("wrote {}", out.display());
    }
    Ok(PASS)
}
