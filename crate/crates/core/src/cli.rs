//! Command-line front end. Results are pretty JSON on stdout; failures are a
//! JSON error object on stderr with exit code 2 (validation) or 3 (search too large).

use std::ffi::OsString;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::cdc::{self, ConstantDimensionCode};
use crate::equiv::{self, EquivalenceReport};
use crate::error::{Error, Result};
use crate::fixtures::{self, FIXTURE_NAMES};
use crate::flags::{FlagCode, TypeVector};
use crate::genset::{self, CodeProduct};
use crate::gf::Field;
use crate::grassmann::{AmbientSpace, GroupElement, Mode};
use crate::incdec;
use crate::io::{self, Document};
use crate::random::{self, Profile};
use crate::search::{SearchBudget, DEFAULT_MAX_CANDIDATES};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INVALID: i32 = 2;
pub const EXIT_TOO_LARGE: i32 = 3;

#[derive(Parser, Debug)]
#[command(
    name = "flagcode",
    version,
    about = "Constant dimension codes and flag codes over finite fields"
)]
struct Cli {
    /// Largest number of (matrix, automorphism) candidates a group scan may visit.
    #[arg(long, global = true, default_value_t = DEFAULT_MAX_CANDIDATES)]
    max_candidates: u128,
    /// Group listings longer than this are replaced by their size.
    #[arg(long, global = true, default_value_t = 64)]
    elements_limit: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Minimum distance and its bound.
    Distance {
        file: String,
        /// Require a flag code and report the flag distance.
        #[arg(long)]
        flag: bool,
    },
    /// Projected codes of a flag code.
    Projected {
        file: String,
    },
    /// Whether a code product (or the projections of a flag code) is a generating set.
    CheckGenset {
        file: String,
    },
    /// The SIC flag code generated by a code product.
    SicClosure {
        file: String,
    },
    CheckSic {
        file: String,
    },
    CheckDetermined {
        file: String,
    },
    /// Increasing, decreasing, disjoint, SIC, determined and optimum-distance status.
    Classify {
        file: String,
    },
    OdfcCheck {
        file: String,
    },
    /// Linear automorphism group.
    Aut {
        file: String,
        /// Also intersect the groups of the projected codes.
        #[arg(long)]
        via_projected: bool,
    },
    /// Semilinear automorphism group.
    Saut {
        file: String,
        #[arg(long)]
        via_projected: bool,
    },
    /// Search for g with SECOND = FIRST · g.
    Equiv {
        first: String,
        second: String,
        #[arg(long, value_enum, default_value_t = ModeArg::Linear)]
        mode: ModeArg,
    },
    /// A seeded random flag code.
    Random {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 2)]
        q: u64,
        #[arg(long)]
        n: usize,
        /// Comma-separated type vector, e.g. 1,2.
        #[arg(long = "type", value_delimiter = ',', required = true)]
        typevec: Vec<usize>,
        #[arg(long)]
        size: usize,
        #[arg(long, default_value = "generic")]
        profile: String,
    },
    /// Named example codes.
    Fixtures {
        name: Option<String>,
        #[arg(long)]
        list: bool,
        #[arg(long)]
        q: Option<u64>,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum ModeArg {
    Linear,
    Semilinear,
}

impl From<ModeArg> for Mode {
    fn from(m: ModeArg) -> Mode {
        match m {
            ModeArg::Linear => Mode::Linear,
            ModeArg::Semilinear => Mode::Semilinear,
        }
    }
}

/// Captured result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

fn error_value(kind: &str, message: &str) -> Value {
    json!({"error": kind, "message": message})
}

/// Runs one command line (the first item is the program name).
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => Outcome {
                    code: EXIT_OK,
                    stdout: e.to_string(),
                    stderr: String::new(),
                },
                kind => {
                    let label = match kind {
                        ErrorKind::InvalidSubcommand | ErrorKind::MissingSubcommand => "UnknownCommand",
                        _ => "ParseError",
                    };
                    Outcome {
                        code: EXIT_INVALID,
                        stdout: String::new(),
                        stderr: io::to_pretty(&error_value(label, e.to_string().trim())),
                    }
                }
            };
        }
    };
    match execute(&cli) {
        Ok(v) => Outcome {
            code: EXIT_OK,
            stdout: io::to_pretty(&v),
            stderr: String::new(),
        },
        Err(e) => Outcome {
            code: if matches!(e, Error::TooLarge { .. }) {
                EXIT_TOO_LARGE
            } else {
                EXIT_INVALID
            },
            stdout: String::new(),
            stderr: io::to_pretty(&error_value(e.kind(), &e.to_string())),
        },
    }
}

fn load(path: &str) -> Result<Document> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("{path}: {e}")))?;
    Document::from_json(&text)
}

fn load_flagcode(path: &str) -> Result<FlagCode> {
    match load(path)? {
        Document::FlagCode(c) => Ok(c),
        other => Err(Error::Parse(format!(
            "{path}: expected a flagcode payload, found {}",
            other.kind()
        ))),
    }
}

fn load_product(path: &str) -> Result<CodeProduct> {
    match load(path)? {
        Document::Product(p) => Ok(p),
        Document::FlagCode(c) => Ok(CodeProduct::of_projected(&c)),
        Document::Cdc(_) => Err(Error::Parse(format!(
            "{path}: expected a codeproduct or flagcode payload, found cdc"
        ))),
    }
}

fn opt<T>(v: Option<T>, f: impl FnOnce(T) -> Value) -> Value {
    v.map_or(Value::Null, f)
}

fn elements_value(elements: &[GroupElement], limit: usize) -> Value {
    if elements.len() > limit {
        Value::Null
    } else {
        Value::Array(elements.iter().map(io::group_element_value).collect())
    }
}

/// The `equiv` result object.
pub fn equivalence_value(r: &EquivalenceReport) -> Value {
    json!({
        "equivalent": r.equivalent,
        "witness": opt(r.witness.as_ref(), io::group_element_value),
        "pruned_by": opt(r.pruned_by, |p| json!(p.as_str())),
        "route": r.route.as_str(),
    })
}

fn execute(cli: &Cli) -> Result<Value> {
    let budget = SearchBudget::new(cli.max_candidates);
    match &cli.command {
        Command::Distance { file, flag } => {
            let doc = load(file)?;
            match (doc, flag) {
                (Document::FlagCode(c), _) => Ok(json!({
                    "min_flag_distance": c.min_distance(),
                    "bound": c.distance_bound(),
                    "optimum": c.is_odfc_direct(),
                    "size": c.len(),
                })),
                (Document::Cdc(c), false) => {
                    let st = c.max_distance_status();
                    Ok(json!({
                        "min_distance": st.distance,
                        "bound": st.bound,
                        "max_distance": st.attained,
                        "singleton": st.singleton,
                        "size": c.len(),
                    }))
                }
                (other, _) => Err(Error::Parse(format!(
                    "{file}: distance needs a {} payload, found {}",
                    if *flag { "flagcode" } else { "cdc or flagcode" },
                    other.kind()
                ))),
            }
        }
        Command::Projected { file } => {
            let c = load_flagcode(file)?;
            let proj = c.projected_codes();
            Ok(json!({
                "projected": proj.iter().map(io::cdc_value).collect::<Vec<_>>(),
                "sizes": proj.iter().map(ConstantDimensionCode::len).collect::<Vec<_>>(),
                "size": c.len(),
                "disjoint": c.is_disjoint(),
            }))
        }
        Command::CheckGenset { file } => {
            let p = load_product(file)?;
            let rep = genset::is_generating_set(&p);
            let flags = genset::product_flags(&p)?;
            Ok(json!({
                "generating": rep.generating,
                "witness": opt(rep.witness.as_ref(), |(level, u, side)| json!({
                    "level": level,
                    "subspace": io::subspace_value(u),
                    "missing": side.as_str(),
                })),
                "product_flag_count": flags.as_ref().map_or(0, FlagCode::len),
                "full_projections": genset::generates_via_product(&p)?,
            }))
        }
        Command::SicClosure { file } => {
            let p = load_product(file)?;
            Ok(Document::FlagCode(genset::sic_closure(&p)?).to_value())
        }
        Command::CheckSic { file } => {
            let c = load_flagcode(file)?;
            let rep = genset::is_sic(&c);
            Ok(json!({
                "sic": rep.sic,
                "witness": opt(rep.witness.as_ref(), |(level, f)| json!({
                    "level": level,
                    "flag": io::flag_value(f),
                })),
            }))
        }
        Command::CheckDetermined { file } => {
            let c = load_flagcode(file)?;
            let rep = genset::is_determined(&c);
            Ok(json!({
                "determined": rep.determined,
                "sic": rep.sic.sic,
                "sic_witness": opt(rep.sic.witness.as_ref(), |(_, f)| io::flag_value(f)),
                "multiplicities": rep.multiplicities.rows,
                "removable": opt(rep.removable.as_ref(), io::flag_value),
            }))
        }
        Command::Classify { file } => Ok(classification_value(&load_flagcode(file)?)),
        Command::OdfcCheck { file } => {
            let c = load_flagcode(file)?;
            let ext = c.typevec().extremes();
            Ok(json!({
                "direct": c.is_odfc_direct(),
                "via_disjoint": c.is_odfc_via_disjoint(),
                "via_extremes": c.is_odfc_via_extremes(),
                "distance": c.min_distance(),
                "bound": c.distance_bound(),
                "t_a": ext.t_a,
                "t_b": ext.t_b,
            }))
        }
        Command::Aut { file, via_projected } => {
            automorphisms(file, Mode::Linear, *via_projected, budget, cli.elements_limit)
        }
        Command::Saut { file, via_projected } => {
            automorphisms(file, Mode::Semilinear, *via_projected, budget, cli.elements_limit)
        }
        Command::Equiv { first, second, mode } => {
            let mode = Mode::from(*mode);
            match (load(first)?, load(second)?) {
                (Document::FlagCode(a), Document::FlagCode(b)) => Ok(equivalence_value(
                    &equiv::are_equivalent_flagcodes(&a, &b, mode, budget)?,
                )),
                (Document::Cdc(a), Document::Cdc(b)) => {
                    Ok(equivalence_value(&equiv::are_equivalent_cdcs(&a, &b, mode, budget)?))
                }
                (a, b) => Err(Error::Parse(format!(
                    "equiv needs two cdc or two flagcode payloads, found {} and {}",
                    a.kind(),
                    b.kind()
                ))),
            }
        }
        Command::Random {
            seed,
            q,
            n,
            typevec,
            size,
            profile,
        } => {
            let amb = AmbientSpace::new(&Field::with_order(*q)?, *n)?;
            let tv = TypeVector::new(&amb, typevec)?;
            let c = random::random_flagcode(*seed, &tv, *size, Profile::parse(profile)?)?;
            Ok(Document::FlagCode(c).to_value())
        }
        Command::Fixtures { name, list, q } => match (name, list) {
            (_, true) => Ok(json!({ "fixtures": FIXTURE_NAMES })),
            (Some(name), false) => Ok(fixtures::fixture(name, *q)?.to_value()),
            (None, false) => Err(Error::Parse("fixtures needs a name or --list".into())),
        },
    }
}

/// The `classify` result object.
pub fn classification_value(c: &FlagCode) -> Value {
    let cl = incdec::classify(c);
    let suff = incdec::sufficient_conditions(c);
    let monotone = |r: &incdec::MonotoneReport| {
        json!({
            "holds": r.holds,
            "witness": opt(r.witness.as_ref(), |(level, u)| json!({
                "level": level,
                "subspace": io::subspace_value(u),
            })),
        })
    };
    let cmp = |c: Option<incdec::Comparison>| opt(c, |c| json!({"lhs": c.lhs, "rhs": c.rhs, "holds": c.holds}));
    json!({
        "increasing": monotone(&cl.increasing),
        "decreasing": monotone(&cl.decreasing),
        "disjoint": {"holds": cl.disjoint, "witness_level": cl.disjoint_witness},
        "sic": {"holds": cl.sic, "witness": opt(cl.sic_witness.as_ref(), |(_, f)| io::flag_value(f))},
        "determined": {"holds": cl.determined, "removable": opt(cl.removable.as_ref(), io::flag_value)},
        "odfc": {"holds": cl.odfc, "distance": cl.min_distance, "bound": cl.distance_bound},
        "projected_sizes": c.projected_sizes(),
        "t_a": suff.extremes.t_a,
        "t_b": suff.extremes.t_b,
        "all_projected_max_distance": suff.all_max_distance,
        "tb_lt_2ta": cmp(suff.tb_lt_2ta),
        "two_tb_lt_n_plus_ta": cmp(suff.two_tb_lt_n_plus_ta),
        "predictions": suff.predictions.iter().map(|p| json!({
            "name": p.name,
            "predicts": p.predicts,
            "hypotheses": p.hypotheses,
            "conclusion": p.conclusion,
        })).collect::<Vec<_>>(),
    })
}

fn automorphisms(file: &str, mode: Mode, via_projected: bool, budget: SearchBudget, limit: usize) -> Result<Value> {
    match load(file)? {
        Document::Cdc(c) => {
            if via_projected {
                return Err(Error::Parse("--via-projected needs a flagcode payload".into()));
            }
            let g = cdc::automorphism_group(&c, mode, budget)?;
            Ok(json!({"aut_size": g.len(), "elements": elements_value(&g, limit)}))
        }
        Document::FlagCode(c) => {
            let g = equiv::aut_flagcode(&c, mode, budget)?;
            let mut v = json!({"aut_size": g.len(), "elements": elements_value(&g, limit)});
            if via_projected {
                let rep = equiv::aut_via_projected(&c, mode, budget)?;
                v["projected_sizes"] = json!(rep.level_sizes);
                v["intersection_size"] = json!(rep.elements.len());
                v["sic"] = json!(rep.sic);
                v["equal"] = json!(rep.elements == g);
            }
            Ok(v)
        }
        Document::Product(_) => Err(Error::Parse("aut needs a cdc or flagcode payload".into())),
    }
}
