use std::fmt::Write as _;
use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use rayon::prelude::*;
use serde_json::{json, Value};

use skewgb::charvar::{gk_dim_with, verify_component_bound_with, ComponentReport, Verdict};
use skewgb::fan::{FanConfig, FanIdeal, GroebnerCone, Walk};
use skewgb::filtration::{pr_halfspaces, pr_sample_positive, weight_names, LinearForm};
use skewgb::groebner::{buchberger_with, weight_groebner, GbConfig, Route};
use skewgb::parse::{parse_weight, ProblemFile};
use skewgb::{BaseOrder, Error, MonomialOrder, Poly, Rat, RingPresentation, WeightVector};

const EXIT_OTHER: u8 = 1;
const EXIT_PARSE: u8 = 3;
const EXIT_REGION: u8 = 4;
const EXIT_BUDGET: u8 = 5;
const EXIT_FAIL: u8 = 6;

#[derive(Parser)]
#[command(name = "skewgb", version, about = "Gröbner bases and characteristic varieties over Weyl-type algebras")]
struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Reduced Gröbner basis for a term order, or for a weight refined by it.
    Gb {
        file: PathBuf,
        #[arg(long)]
        order: Option<BaseOrder>,
        #[arg(long, allow_hyphen_values = true)]
        weight: Option<String>,
    },
    /// Characteristic ideal, its components and the dimension check.
    Charvar {
        file: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        weight: Option<String>,
        /// Lower bound for component dimensions (default: number of y's).
        #[arg(long)]
        bound: Option<usize>,
    },
    /// Gröbner fan by wall crossing.
    Fan { file: PathBuf },
    /// Gröbner walk between two positive weights.
    Walk {
        file: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        from: String,
        #[arg(long, allow_hyphen_values = true)]
        to: String,
    },
    /// Polynomial region of the ring.
    Pr { file: PathBuf },
    /// Gelfand–Kirillov dimension of R/I.
    Gkdim {
        file: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        weight: Option<String>,
    },
    /// Union of the reduced bases over all cones of the fan.
    Universal { file: PathBuf },
    /// Runs charvar on every weight of every `.txt` file in a directory.
    Verify {
        #[arg(long)]
        corpus: PathBuf,
        #[arg(long)]
        bound: Option<usize>,
    },
}

struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Parse { .. } => EXIT_PARSE,
            Error::NotInPolynomialRegion | Error::OutsideGroebnerRegion | Error::NotPositive => {
                EXIT_REGION
            }
            Error::BudgetExceeded(_) => EXIT_BUDGET,
            _ => EXIT_OTHER,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

struct Output {
    text: String,
    json: Value,
    code: u8,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let json = cli.json;
    match run(cli.cmd) {
        Ok(out) => {
            let body = if json {
                serde_json::to_string_pretty(&out.json).unwrap() + "\n"
            } else {
                out.text
            };
            // A closed pipe is not an error worth reporting.
            let _ = std::io::stdout().lock().write_all(body.as_bytes());
            ExitCode::from(out.code)
        }
        Err(f) => {
            if json {
                println!("{}", json!({ "error": f.message, "code": f.code }));
            }
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn load(path: &Path) -> Result<ProblemFile, Failure> {
    let src = std::fs::read_to_string(path).map_err(|e| Failure {
        code: EXIT_OTHER,
        message: format!("{}: {}", path.display(), e),
    })?;
    ProblemFile::parse(&src).map_err(|e| {
        let mut f = Failure::from(e);
        f.message = format!("{}: {}", path.display(), f.message);
        f
    })
}

fn weight_arg(p: &ProblemFile, arg: Option<&str>) -> Result<Option<WeightVector>, Failure> {
    match arg {
        Some(s) => Ok(Some(parse_weight(&p.ring, s).map_err(|e| Failure {
            code: EXIT_PARSE,
            message: format!("--weight: {e}"),
        })?)),
        None => Ok(p.weights.first().cloned()),
    }
}

fn fmt_ideal(ring: &RingPresentation, gens: &[Poly]) -> String {
    if gens.is_empty() {
        return "<0>".into();
    }
    let parts: Vec<String> = gens.iter().map(|g| ring.fmt_poly(g)).collect();
    format!("<{}>", parts.join(", "))
}

fn strs(ring: &RingPresentation, gens: &[Poly]) -> Vec<String> {
    gens.iter().map(|g| ring.fmt_poly(g)).collect()
}

fn fmt_point(w: &[Rat]) -> String {
    let parts: Vec<String> = w.iter().map(|x| x.to_string()).collect();
    format!("({})", parts.join(","))
}

fn run(cmd: Cmd) -> Result<Output, Failure> {
    let cfg = GbConfig::from_env()?;
    match cmd {
        Cmd::Gb { file, order, weight } => {
            let p = load(&file)?;
            let w = match &weight {
                Some(s) => weight_arg(&p, Some(s))?,
                None => None,
            };
            cmd_gb(&p, order, w.as_ref(), &cfg)
        }
        Cmd::Charvar { file, weight, bound } => {
            let p = load(&file)?;
            let w = weight_arg(&p, weight.as_deref())?.ok_or_else(|| Failure {
                code: EXIT_OTHER,
                message: "no weight given (use --weight or a 'weight:' line)".into(),
            })?;
            let bound = bound.unwrap_or(p.ring.n());
            let rep = verify_component_bound_with(&p.ring, &p.generators, &w, bound, &cfg)?;
            let code = if rep.verdict == Verdict::Fail { EXIT_FAIL } else { 0 };
            Ok(Output {
                text: fmt_report(&rep),
                json: serde_json::to_value(&rep).unwrap(),
                code,
            })
        }
        Cmd::Fan { file } => {
            let p = load(&file)?;
            cmd_fan(&p, &cfg)
        }
        Cmd::Walk { file, from, to } => {
            let p = load(&file)?;
            let w1 = weight_arg(&p, Some(&from))?.unwrap();
            let w2 = weight_arg(&p, Some(&to))?.unwrap();
            let fi = FanIdeal::new(&p.ring, &p.generators, &cfg)?;
            let walk = fi.walk(&w1.flat(), &w2.flat())?;
            Ok(fmt_walk(&p.ring, &w1, &w2, &walk))
        }
        Cmd::Pr { file } => {
            let p = load(&file)?;
            let hs = pr_halfspaces(&p.ring);
            let names = weight_names(&p.ring);
            let rows: Vec<String> = hs.strict.iter().map(|l| l.fmt_strict(&names)).collect();
            Ok(Output {
                text: format!("{hs}\n"),
                json: json!({ "names": names, "strict": hs.strict, "text": rows }),
                code: 0,
            })
        }
        Cmd::Gkdim { file, weight } => {
            let p = load(&file)?;
            let w = match weight_arg(&p, weight.as_deref())? {
                Some(w) if w.is_positive() => w,
                Some(_) if weight.is_none() => pr_sample_positive(&p.ring),
                Some(_) => return Err(Error::NotPositive.into()),
                None => pr_sample_positive(&p.ring),
            };
            let d = gk_dim_with(&p.ring, &p.generators, &w, &cfg)?;
            let text = match d {
                Some(d) => format!("{d}\n"),
                None => "zero module\n".into(),
            };
            Ok(Output {
                text,
                json: json!({ "weight": w.to_string(), "gkdim": d }),
                code: 0,
            })
        }
        Cmd::Universal { file } => {
            let p = load(&file)?;
            let fi = FanIdeal::new(&p.ring, &p.generators, &cfg)?;
            let fcfg = FanConfig {
                gb: cfg.clone(),
                ..FanConfig::default()
            };
            let u = fi.universal_gb(&fcfg)?;
            let mut text = String::new();
            for g in &u {
                writeln!(text, "{}", p.ring.fmt_poly(g)).unwrap();
            }
            Ok(Output {
                text,
                json: json!({ "universal": strs(&p.ring, &u) }),
                code: 0,
            })
        }
        Cmd::Verify { corpus, bound } => cmd_verify(&corpus, bound, &cfg),
    }
}

fn cmd_gb(
    p: &ProblemFile,
    order: Option<BaseOrder>,
    w: Option<&WeightVector>,
    cfg: &GbConfig,
) -> Result<Output, Failure> {
    let nv = p.ring.nvars();
    let base = order.or(p.order).unwrap_or(BaseOrder::GRevLex);
    let tiebreak = MonomialOrder::new(base, nv);
    let (elems, ord) = match w {
        Some(w) => {
            let g = weight_groebner(&p.ring, &p.generators, w, &tiebreak, Route::Auto, cfg)?;
            (g, tiebreak.refine(&w.flat()))
        }
        None => {
            let gb = buchberger_with(&p.ring, &p.generators, &tiebreak, cfg, None)?;
            (gb.into_elements(), tiebreak)
        }
    };
    let names = p.ring.names();
    let rendered: Vec<String> = elems.iter().map(|g| ord.fmt_poly(g, names)).collect();
    let mut text = String::new();
    for r in &rendered {
        writeln!(text, "{r}").unwrap();
    }
    let label = match w {
        Some(w) => format!("{base} refined by {w}"),
        None => base.to_string(),
    };
    Ok(Output {
        text,
        json: json!({ "order": label, "basis": rendered }),
        code: 0,
    })
}

fn fmt_report(r: &ComponentReport) -> String {
    let mut s = String::new();
    writeln!(s, "weight: ({})", r.weight.join(",")).unwrap();
    writeln!(s, "characteristic ideal: <{}>", r.char_ideal.join(", ")).unwrap();
    match (&r.radical, r.total_dim) {
        (_, None) => writeln!(s, "characteristic variety: empty").unwrap(),
        (Some(rad), Some(d)) => {
            writeln!(s, "radical: <{}>", rad.join(", ")).unwrap();
            writeln!(s, "dimension: {d}").unwrap();
            writeln!(s, "components:").unwrap();
            for c in &r.components {
                writeln!(
                    s,
                    "  <{}>  dim {}  {}",
                    c.vars.join(", "),
                    c.dim,
                    if c.pass { "ok" } else { "below bound" }
                )
                .unwrap();
            }
        }
        (None, Some(d)) => {
            writeln!(s, "dimension: {d}").unwrap();
            writeln!(s, "components: not computed (initial ideal is not monomial)").unwrap();
        }
    }
    match r.gkdim {
        Some(g) => writeln!(s, "GK dimension: {g}").unwrap(),
        None => writeln!(s, "GK dimension: zero module").unwrap(),
    }
    writeln!(s, "bound: {}", r.bound).unwrap();
    let verdict = match r.verdict {
        Verdict::VacuousPass => "VACUOUS-PASS (empty variety)".to_string(),
        v => v.to_string(),
    };
    writeln!(s, "verdict: {verdict}").unwrap();
    s
}

fn fmt_constraint(v: &[Rat], names: &[String], rel: &str) -> String {
    LinearForm::homogeneous(v.to_vec())
        .fmt_strict(names)
        .replacen(" > ", rel, 1)
}

fn cone_json(ring: &RingPresentation, c: &GroebnerCone, names: &[String]) -> Value {
    json!({
        "equalities": c.equalities().iter().map(|e| fmt_constraint(e, names, " = ")).collect::<Vec<_>>(),
        "strict": c.strict().iter().map(|e| fmt_constraint(e, names, " > ")).collect::<Vec<_>>(),
        "witness": fmt_point(&c.witness),
        "initial": strs(ring, &c.initial),
        "marker": strs(ring, &c.marker),
        "groebnerRegion": c.in_gr(),
    })
}

fn cmd_fan(p: &ProblemFile, cfg: &GbConfig) -> Result<Output, Failure> {
    let fi = FanIdeal::new(&p.ring, &p.generators, cfg)?;
    let fcfg = FanConfig {
        gb: cfg.clone(),
        ..FanConfig::default()
    };
    let fan = fi.enumerate(&fcfg)?;
    let names = weight_names(&p.ring);
    let mut text = String::new();
    writeln!(
        text,
        "# slice w0 = 0 of the fan of the x0-saturated homogenization; cones outside the Groebner region are marked"
    )
    .unwrap();
    writeln!(text, "cones: {}", fan.cones.len()).unwrap();
    for (k, c) in fan.cones.iter().enumerate() {
        let mut rows: Vec<String> = c
            .equalities()
            .iter()
            .map(|e| fmt_constraint(e, &names, " = "))
            .collect();
        rows.extend(c.strict().iter().map(|e| fmt_constraint(e, &names, " > ")));
        writeln!(text, "cone {}: {}", k + 1, rows.join(", ")).unwrap();
        writeln!(text, "  witness: {}", fmt_point(&c.witness)).unwrap();
        writeln!(text, "  initial ideal: {}", fmt_ideal(&p.ring, &c.initial)).unwrap();
        if !c.in_gr() {
            writeln!(text, "  outside the Groebner region").unwrap();
        }
    }
    let adj: Vec<String> = fan
        .adjacency
        .iter()
        .map(|(a, b)| format!("{}-{}", a + 1, b + 1))
        .collect();
    writeln!(text, "adjacent: {}", adj.join(" ")).unwrap();
    if !fan.complete {
        writeln!(text, "incomplete: cone budget exhausted").unwrap();
    }
    let cones: Vec<Value> = fan.cones.iter().map(|c| cone_json(&p.ring, c, &names)).collect();
    Ok(Output {
        text,
        json: json!({
            "describes": "slice w0 = 0 of the fan of the x0-saturated homogenization",
            "cones": cones,
            "adjacency": fan.adjacency,
            "complete": fan.complete,
        }),
        code: if fan.complete { 0 } else { EXIT_BUDGET },
    })
}

fn fmt_walk(ring: &RingPresentation, w1: &WeightVector, w2: &WeightVector, walk: &Walk) -> Output {
    let mut text = String::new();
    writeln!(text, "from {w1} to {w2}").unwrap();
    let kd = |d: Option<usize>| d.map_or("-".to_string(), |d| d.to_string());
    let mut steps = Vec::new();
    for s in &walk.steps {
        writeln!(
            text,
            "t = {}: Kdim {}, {}",
            s.from,
            kd(s.wall_kdim),
            fmt_ideal(ring, &s.wall_initial)
        )
        .unwrap();
        writeln!(
            text,
            "t in ({}, {}): Kdim {}, {}",
            s.from,
            s.to,
            kd(s.kdim),
            fmt_ideal(ring, &s.initial)
        )
        .unwrap();
        steps.push(json!({
            "from": s.from.to_string(),
            "to": s.to.to_string(),
            "wallInitial": strs(ring, &s.wall_initial),
            "wallKdim": s.wall_kdim,
            "initial": strs(ring, &s.initial),
            "kdim": s.kdim,
        }));
    }
    writeln!(
        text,
        "t = 1: Kdim {}, {}",
        kd(walk.end_kdim),
        fmt_ideal(ring, &walk.end_initial)
    )
    .unwrap();
    let walls: Vec<String> = walk.walls().iter().map(|x| x.to_string()).collect();
    writeln!(text, "walls: {}", if walls.is_empty() { "none".into() } else { walls.join(" ") }).unwrap();
    writeln!(text, "constant Kdim: {}", walk.constant_kdim()).unwrap();
    Output {
        text,
        json: json!({
            "from": w1.to_string(),
            "to": w2.to_string(),
            "steps": steps,
            "endInitial": strs(ring, &walk.end_initial),
            "endKdim": walk.end_kdim,
            "walls": walls,
            "constantKdim": walk.constant_kdim(),
        }),
        code: 0,
    }
}

fn cmd_verify(dir: &Path, bound: Option<usize>, cfg: &GbConfig) -> Result<Output, Failure> {
    let mut files: Vec<PathBuf> = std::fs::read_dir(dir)
        .map_err(|e| Failure {
            code: EXIT_OTHER,
            message: format!("{}: {}", dir.display(), e),
        })?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|x| x == "txt"))
        .collect();
    files.sort();
    let mut jobs = Vec::new();
    for f in &files {
        let p = load(f)?;
        for (k, w) in p.weights.iter().enumerate() {
            jobs.push((f.clone(), k, w.clone()));
        }
    }
    let results: Vec<(String, Result<ComponentReport, Failure>)> = jobs
        .par_iter()
        .map(|(f, k, w)| {
            let name = format!(
                "{}#{}",
                f.file_name().unwrap().to_string_lossy(),
                k + 1
            );
            let res = load(f).and_then(|p| {
                let b = bound.unwrap_or(p.ring.n());
                verify_component_bound_with(&p.ring, &p.generators, w, b, cfg).map_err(Failure::from)
            });
            (name, res)
        })
        .collect();
    let mut text = String::new();
    let mut rows = Vec::new();
    let mut failed = 0;
    for (name, res) in &results {
        match res {
            Ok(rep) => {
                let ok = matches!(rep.verdict, Verdict::Pass | Verdict::VacuousPass) && rep.sandwich_holds();
                if !ok {
                    failed += 1;
                }
                let dims: Vec<String> = rep.components.iter().map(|c| c.dim.to_string()).collect();
                writeln!(
                    text,
                    "{name} ({}): {} components [{}] gkdim {}{}",
                    rep.weight.join(","),
                    rep.verdict,
                    dims.join(","),
                    rep.gkdim.map_or("-".into(), |g| g.to_string()),
                    if ok { "" } else { "  <-- violation" }
                )
                .unwrap();
                rows.push(json!({ "case": name, "report": rep, "ok": ok }));
            }
            Err(e) => {
                failed += 1;
                writeln!(text, "{name}: error: {}", e.message).unwrap();
                rows.push(json!({ "case": name, "error": e.message, "ok": false }));
            }
        }
    }
    writeln!(text, "{} cases, {} failed", results.len(), failed).unwrap();
    Ok(Output {
        text,
        json: json!({ "cases": rows, "failed": failed }),
        code: if failed == 0 { 0 } else { EXIT_FAIL },
    })
}
