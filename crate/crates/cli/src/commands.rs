use std::fs;
use std::io::Write as _;
use std::path::Path;
use std::sync::Arc;

use serde_json::{json, Value};

use qdesign_core::duality::{dual_design, dual_large_set, DualSummary, DualityMap};
use qdesign_core::error::Error;
use qdesign_core::gf_space::FieldParams;
use qdesign_core::group_action::{orbit_partition, CyclicGroup};
use qdesign_core::io::{
    builtin, format_design, format_km, format_large_set, load_designs, parse_generator,
    resolve_group, KmMatrixFile, KmSummary, Report,
};
use qdesign_core::kramer_mesner::{build_km_system, KmSystem};
use qdesign_core::large_set::{
    algorithm_a_with, algorithm_b_with, verify_design, verify_large_set, AlgorithmAOutcome,
    AlgorithmAStop, AlgorithmBOutcome, Design, LargeSet, SearchOptions,
};
use qdesign_core::qarith::{check_large_set_admissible, LargeSetParams};

use crate::{Algo, DualArgs, Format, Input, KmArgs, Output, ParamsArgs, SearchArgs, SpaceArgs, VerifyArgs};

pub const EXIT_OK: u8 = 0;
pub const EXIT_FALSE: u8 = 1;
pub const EXIT_USAGE: u8 = 2;
pub const EXIT_RESOURCE: u8 = 3;
pub const EXIT_INCONCLUSIVE: u8 = 4;

#[derive(Debug)]
pub struct Failure {
    pub code: u8,
    pub message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure { code: EXIT_USAGE, message: message.into() }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Param(_) | Error::Parse { .. } | Error::DataIntegrity(_) => EXIT_USAGE,
            Error::Resource(_) => EXIT_RESOURCE,
            Error::Consistency(_) => EXIT_FALSE,
        };
        Failure { code, message: e.to_string() }
    }
}

type CmdResult = Result<u8, Failure>;

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::usage(format!("cannot read {}: {e}", path.display())))
}

fn write(path: &Path, contents: &str) -> Result<(), Failure> {
    fs::write(path, contents).map_err(|e| Failure {
        code: EXIT_FALSE,
        message: format!("cannot write {}: {e}", path.display()),
    })
}

/// Writes to stdout; a closed pipe is not an error.
fn print(format: Format, text: String, json: Value) {
    let body = match format {
        Format::Text => text,
        Format::Json => serde_json::to_string_pretty(&json).expect("json value") + "\n",
    };
    let _ = std::io::stdout().write_all(body.as_bytes());
}

fn to_value<T: serde::Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("report types serialize")
}

enum Loaded {
    Design(Design),
    LargeSet(LargeSet),
}

fn load(input: &Input) -> Result<Loaded, Failure> {
    if let Some(name) = &input.builtin {
        return Ok(Loaded::LargeSet(builtin(name)?));
    }
    if let Some(path) = &input.design {
        let mut designs = load_designs(&read(path)?)?;
        if designs.len() != 1 {
            return Err(Failure::usage(format!(
                "{} holds {} design sections; use --large-set",
                path.display(),
                designs.len()
            )));
        }
        return Ok(Loaded::Design(designs.remove(0)));
    }
    let path = input.large_set.as_ref().expect("clap requires one input");
    Ok(Loaded::LargeSet(LargeSet::new(load_designs(&read(path)?)?)?))
}

/// Verifies and returns `(verdict, text, json)`.
fn check(loaded: &Loaded) -> Result<(bool, String, Value), Failure> {
    Ok(match loaded {
        Loaded::Design(d) => {
            let r = verify_design(&d.blocks(), d.params())?;
            (r.verdict, r.render_text(), to_value(&r))
        }
        Loaded::LargeSet(ls) => {
            let r = verify_large_set(ls)?;
            (r.verdict, r.render_text(), to_value(&r))
        }
    })
}

fn status(ok: bool) -> u8 {
    if ok {
        EXIT_OK
    } else {
        EXIT_FALSE
    }
}

pub fn verify(a: &VerifyArgs) -> CmdResult {
    let loaded = load(&a.input)?;
    let (verdict, text, json) = check(&loaded)?;
    if let Some(out) = &a.output.out {
        let body = match a.output.format {
            Format::Text => text.clone(),
            Format::Json => serde_json::to_string_pretty(&json).expect("json value") + "\n",
        };
        write(out, &body)?;
    }
    print(a.output.format, text, json);
    Ok(status(verdict))
}

fn field(space: &SpaceArgs) -> Result<FieldParams, Failure> {
    Ok(FieldParams::new(space.q, space.n)?)
}

/// A built-in id, `cols:...`, or a generator file.
fn group(spec: &str, params: FieldParams) -> Result<CyclicGroup, Failure> {
    let path = Path::new(spec);
    if spec != "trivial" && spec != "singer-paper" && !spec.starts_with("cols:") && path.exists() {
        let g = parse_generator(&read(path)?)?;
        if g.params() != params {
            return Err(Failure::usage(format!(
                "generator in {spec} acts on F_{}^{}, expected F_{}^{}",
                g.params().q(),
                g.params().n(),
                params.q(),
                params.n()
            )));
        }
        return Ok(CyclicGroup::new(g)?);
    }
    Ok(resolve_group(spec, params)?)
}

fn system(space: &SpaceArgs, group_spec: &str, lambda: u64) -> Result<KmSystem, Failure> {
    if space.t >= space.k {
        return Err(Failure::usage(format!("need t < k, got t = {}, k = {}", space.t, space.k)));
    }
    if space.k > space.n {
        return Err(Failure::usage(format!("need k <= n, got k = {}, n = {}", space.k, space.n)));
    }
    let p = field(space)?;
    let g = group(group_spec, p)?;
    let rows = Arc::new(orbit_partition(&g, space.t)?);
    let cols = Arc::new(orbit_partition(&g, space.k)?);
    Ok(build_km_system(rows, cols, lambda)?)
}

pub fn km(a: &KmArgs) -> CmdResult {
    let s = system(&a.space, &a.group, a.lambda)?;
    let summary = KmSummary::from(&s);
    let matrix = format_km(&KmMatrixFile::from_system(&s));
    let mut text = summary.render_text();
    let mut json = to_value(&summary);
    match &a.output.out {
        Some(out) => write(out, &matrix)?,
        None => {
            text.push_str(&matrix);
            json["matrix"] = Value::String(matrix);
        }
    }
    print(a.output.format, text, json);
    Ok(status(summary.row_sums_equal_lambda_max))
}

fn found_large_set(ls: &LargeSet, output: &Output, how: &str) -> CmdResult {
    let report = verify_large_set(ls)?;
    if let Some(out) = &output.out {
        write(out, &format_large_set(ls))?;
    }
    let text = format!("result: found ({how})\n{}", report.render_text());
    let json = json!({ "result": "found", "algorithm": how, "report": report });
    print(output.format, text, json);
    Ok(status(report.verdict))
}

pub fn search(a: &SearchArgs) -> CmdResult {
    let sp = &a.space;
    let lsp = LargeSetParams::new(a.designs, sp.t, sp.n, sp.k, sp.q)?;
    let adm = check_large_set_admissible(&lsp)?;
    if !adm.admissible && !a.force {
        return Err(Failure::usage(format!(
            "LS_{}[{}]({},{},{}) is not admissible (use --force to search anyway): {}",
            sp.q,
            a.designs,
            sp.t,
            sp.k,
            sp.n,
            adm.failures().join("; ")
        )));
    }
    let Some(lambda) = adm.lambda else {
        return Err(Failure::usage(adm.failures().join("; ")));
    };
    if let Some(l) = a.lambda {
        if l != lambda {
            return Err(Failure::usage(format!(
                "--lambda {l} disagrees with lambda_max / N = {} / {} = {lambda}",
                adm.lambda_max, a.designs
            )));
        }
    }
    let s = system(sp, &a.group, lambda)?;
    let opts = SearchOptions {
        seed: a.seed,
        budget: a.budget,
        restarts: a.restarts,
        pool_cap: a.pool_cap,
        force: a.force,
    };
    match a.algo {
        Algo::A => match algorithm_a_with(&s, a.designs, &opts)? {
            AlgorithmAOutcome::Found(ls) => found_large_set(&ls, &a.output, "algorithm A"),
            AlgorithmAOutcome::Failed(f) => {
                let code = match f.reason {
                    AlgorithmAStop::NoDesign => EXIT_FALSE,
                    AlgorithmAStop::BudgetExhausted { .. } => EXIT_INCONCLUSIVE,
                };
                let json = json!({ "result": "failed", "algorithm": "algorithm A", "failure": f });
                print(a.output.format, f.render_text(), json);
                Ok(code)
            }
        },
        Algo::B => match algorithm_b_with(&s, a.designs, &opts)? {
            AlgorithmBOutcome::Found(ls) => found_large_set(&ls, &a.output, "algorithm B"),
            AlgorithmBOutcome::NotInPool { pool_size } => {
                let text = format!(
                    "result: no large set composed of {}-invariant designs\npool_size: {pool_size}\n",
                    s.group().label()
                );
                let json = json!({ "result": "not_in_pool", "algorithm": "algorithm B", "pool_size": pool_size });
                print(a.output.format, text, json);
                Ok(EXIT_FALSE)
            }
            AlgorithmBOutcome::Inconclusive { cap } => {
                let text = format!("result: inconclusive\nreason: design pool exceeded the cap of {cap}\n");
                let json = json!({ "result": "inconclusive", "algorithm": "algorithm B", "pool_cap": cap });
                print(a.output.format, text, json);
                Ok(EXIT_INCONCLUSIVE)
            }
        },
    }
}

pub fn dual(a: &DualArgs) -> CmdResult {
    let loaded = load(&a.input)?;
    let (verdict, text, json) = check(&loaded)?;
    if !verdict {
        let text = format!("input does not verify; no dual written\n{text}");
        print(a.output.format, text, json!({ "result": "input_not_verified", "input": json }));
        return Ok(EXIT_FALSE);
    }
    let (params, group) = match &loaded {
        Loaded::Design(d) => (*d.params(), d.partition().group().clone()),
        Loaded::LargeSet(ls) => (*ls.design_params(), ls.partition().group().clone()),
    };
    let summary = DualSummary::from(&DualityMap::new(params, group)?);
    let (file, dual_loaded) = match &loaded {
        Loaded::Design(d) => {
            let dd = dual_design(d)?;
            (format_design(&dd), Loaded::Design(dd))
        }
        Loaded::LargeSet(ls) => {
            let dl = dual_large_set(ls)?;
            (format_large_set(&dl), Loaded::LargeSet(dl))
        }
    };
    let (dual_ok, dual_text, dual_json) = check(&dual_loaded)?;
    if let Some(out) = &a.output.out {
        write(out, &file)?;
    }
    let text = format!("{}{}", summary.render_text(), dual_text);
    let json = json!({ "summary": summary, "verification": dual_json });
    print(a.output.format, text, json);
    Ok(status(dual_ok))
}

pub fn params(a: &ParamsArgs) -> CmdResult {
    let sp = &a.space;
    let lsp = LargeSetParams::new(a.designs, sp.t, sp.n, sp.k, sp.q)?;
    let r = check_large_set_admissible(&lsp)?;
    print(a.format, r.render_text(), to_value(&r));
    Ok(status(r.admissible))
}
