//! Command-line front end: argument parsing, dispatch and report output.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Map, Value};

use crate::corpus::bundle::{bundle, manifest};
use crate::corpus::{bol_search, chein_double, groups, DEFAULT_SEARCH_BUDGET};
use crate::error::{Error, Result};
use crate::io;
use crate::multgroups::{
    bound_check, classify_gr_shape, inner_generator_check, is_simple_loop, strong_simplicity_scan, mult_group, Side,
};
use crate::permgroup::DEFAULT_CLOSURE_CAP;
use crate::sigmaphi::{
    admissible_normal_subgroups, construct_loop, associator_stabilizer_check, quotient_loop, relations_check, verify_sigma_phi,
};
use crate::symspace::{
    coset_space, inversion_automorphism_check, psi_isomorphism_check, space_on_twisted_set, SymSpace,
};
use crate::table::{identify, inverse_properties, is_moufang, is_right_bol, Loop};

/// Process exit statuses.
pub mod exit {
    pub const OK: i32 = 0;
    pub const USAGE: i32 = 1;
    pub const INVARIANT: i32 = 2;
    pub const CANDIDATE: i32 = 3;
}

#[derive(Debug, Parser)]
#[command(name = "bolkit", version, about = "Finite Bol and Moufang loop toolkit")]
pub struct Cli {
    /// Emit a JSON document instead of key=value blocks.
    #[arg(long, global = true)]
    pub json: bool,
    /// Add wall-clock timings to the report.
    #[arg(long, global = true)]
    pub timing: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check that a table is a quasigroup with an identity.
    Validate { file: PathBuf },
    /// Classify tables: loop, group, Bol, Moufang, inverse properties.
    Identify {
        #[arg(required = true)]
        files: Vec<PathBuf>,
    },
    /// Multiplication group, inner mapping group and its simplicity.
    Multgroup {
        #[arg(long, default_value = "right")]
        side: SideArg,
        #[arg(required = true)]
        files: Vec<PathBuf>,
    },
    /// Simplicity, strong simplicity and the three-case classification of Gr.
    Simple {
        #[arg(required = true)]
        files: Vec<PathBuf>,
    },
    /// Verify a (sigma, phi) instance and build its Bol loop.
    Construct {
        file: PathBuf,
        /// Also build the quotient by this normal subgroup (comma-separated elements).
        #[arg(long, value_delimiter = ',')]
        quotient: Option<Vec<usize>>,
        /// Write the constructed loop table here.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check a symmetric-space file, or the spaces of an instance file.
    Symspace { file: PathBuf },
    /// Look for strongly simple Bol loops that are not Moufang.
    Scan {
        /// Table files or directories (searched recursively for *.tbl).
        paths: Vec<PathBuf>,
        /// Also scan every table of this order produced by the Bol search.
        #[arg(long)]
        bol_search: Option<usize>,
        #[arg(long, default_value_t = DEFAULT_SEARCH_BUDGET)]
        budget: u64,
    },
    /// Generate tables.
    Corpus {
        #[arg(long)]
        kind: CorpusKind,
        /// Group name for `group` (Z5, S3, Q8, D4, A4, A5, Z3xZ3, ...).
        #[arg(long)]
        name: Option<String>,
        /// Order for `bol-search`.
        #[arg(long)]
        order: Option<usize>,
        /// Stop after this many solutions.
        #[arg(long)]
        first: Option<usize>,
        #[arg(long, default_value_t = DEFAULT_SEARCH_BUDGET)]
        budget: u64,
        /// Base group for `chein-double`: a group name or a table file.
        #[arg(long)]
        base: Option<String>,
        /// Output file, or directory for multi-table output.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum SideArg {
    Right,
    Left,
    Full,
}

impl From<SideArg> for Side {
    fn from(s: SideArg) -> Side {
        match s {
            SideArg::Right => Side::Right,
            SideArg::Left => Side::Left,
            SideArg::Full => Side::Full,
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum CorpusKind {
    Group,
    BolSearch,
    CheinDouble,
    /// The full bundled corpus plus its manifest.
    Bundle,
}

/// Closure cap, overridable with `BOLKIT_CAP`.
pub fn closure_cap() -> std::result::Result<usize, String> {
    match std::env::var("BOLKIT_CAP") {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| format!("BOLKIT_CAP must be a positive integer, got {v:?}")),
        Err(_) => Ok(DEFAULT_CLOSURE_CAP),
    }
}

/// A failure that ends the command, with its exit status.
#[derive(Debug)]
struct Fail {
    status: i32,
    message: String,
}

impl Fail {
    fn usage(message: impl Into<String>) -> Self {
        Fail {
            status: exit::USAGE,
            message: message.into(),
        }
    }

    fn at(path: &Path, e: Error) -> Self {
        let status = match e {
            Error::Parse { .. } | Error::Empty | Error::OrderTooLarge { .. } | Error::NotSquare { .. } => exit::USAGE,
            _ => exit::INVARIANT,
        };
        Fail {
            status,
            message: format!("{}: {e}", path.display()),
        }
    }
}

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        let status = match e {
            Error::Invalid(_) | Error::Parse { .. } => exit::USAGE,
            _ => exit::INVARIANT,
        };
        Fail {
            status,
            message: e.to_string(),
        }
    }
}

struct Output {
    records: Vec<Value>,
    status: i32,
    /// Tables written to stdout instead of a report.
    raw: Option<String>,
}

impl Output {
    fn new() -> Self {
        Output {
            records: Vec::new(),
            status: exit::OK,
            raw: None,
        }
    }

    fn push(&mut self, v: Value) {
        self.records.push(v);
    }

    fn escalate(&mut self, status: i32) {
        // Counterexample candidates outrank invariant failures.
        self.status = self.status.max(status);
    }
}

fn read_text(path: &Path) -> std::result::Result<String, Fail> {
    std::fs::read_to_string(path).map_err(|e| Fail::usage(format!("{}: {e}", path.display())))
}

fn load_loop(path: &Path) -> std::result::Result<Loop, Fail> {
    io::read_loop(&read_text(path)?).map_err(|e| Fail::at(path, e))
}

fn to_value<T: Serialize>(t: &T) -> Value {
    serde_json::to_value(t).expect("reports serialize")
}

fn file_key(path: &Path) -> Value {
    Value::String(path.display().to_string())
}

/// Runs the CLI on `args` (including the program name), writing the report to
/// `out` and diagnostics to `err`. Returns the exit status.
pub fn run_with(args: impl IntoIterator<Item = OsString>, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let status = if e.use_stderr() { exit::USAGE } else { exit::OK };
            let _ = if e.use_stderr() {
                write!(err, "{e}")
            } else {
                write!(out, "{e}")
            };
            return status;
        }
    };
    let cap = match closure_cap() {
        Ok(c) => c,
        Err(m) => {
            let _ = writeln!(err, "error: {m}");
            return exit::USAGE;
        }
    };
    let started = Instant::now();
    match dispatch(&cli.command, cap) {
        Ok(mut o) => {
            if let Some(raw) = &o.raw {
                let _ = out.write_all(raw.as_bytes());
                return o.status;
            }
            if cli.timing {
                o.push(json!({ "elapsed_ms": started.elapsed().as_millis() as u64 }));
            }
            let text = if cli.json {
                let mut s = serde_json::to_string_pretty(&Value::Array(o.records)).expect("json");
                s.push('\n');
                s
            } else {
                render_text(&o.records)
            };
            let _ = out.write_all(text.as_bytes());
            o.status
        }
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.status
        }
    }
}

pub fn run() -> i32 {
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_with(std::env::args_os(), &mut stdout.lock(), &mut stderr.lock())
}

fn dispatch(cmd: &Command, cap: usize) -> std::result::Result<Output, Fail> {
    let mut o = Output::new();
    match cmd {
        Command::Validate { file } => validate(file, &mut o)?,
        Command::Identify { files } => {
            for f in files {
                identify_file(f, &mut o)?;
            }
        }
        Command::Multgroup { side, files } => {
            for f in files {
                let l = load_loop(f)?;
                let r = mult_group(&l, (*side).into(), cap)?;
                o.push(json!({
                    "file": file_key(f),
                    "side": r.side,
                    "order": r.group.order(),
                    "inner_order": r.inner.order(),
                    "transitive": r.group.is_transitive(),
                    "simple": r.simple,
                }));
            }
        }
        Command::Simple { files } => {
            for f in files {
                simple_file(f, cap, &mut o)?;
            }
        }
        Command::Construct { file, quotient, out } => construct(file, quotient.as_deref(), out.as_deref(), &mut o)?,
        Command::Symspace { file } => symspace(file, &mut o)?,
        Command::Scan {
            paths,
            bol_search,
            budget,
        } => scan(paths, *bol_search, *budget, cap, &mut o)?,
        Command::Corpus {
            kind,
            name,
            order,
            first,
            budget,
            base,
            out,
        } => corpus(*kind, name.as_deref(), *order, *first, *budget, base.as_deref(), out.as_deref(), &mut o)?,
    }
    Ok(o)
}

fn validate(file: &Path, o: &mut Output) -> std::result::Result<(), Fail> {
    let raw = io::parse_table(&read_text(file)?).map_err(|e| Fail::at(file, e))?;
    let report = identify(&raw);
    if report.error.as_deref().is_some_and(|_| report.order == 0) {
        return Err(Fail::at(file, Error::Empty));
    }
    o.push(json!({
        "file": file_key(file),
        "order": report.order,
        "quasigroup": report.quasigroup,
        "loop": report.is_loop(),
        "identity": report.identity,
        "error": report.error,
    }));
    if !report.is_loop() {
        o.escalate(exit::INVARIANT);
    }
    Ok(())
}

fn identify_file(file: &Path, o: &mut Output) -> std::result::Result<(), Fail> {
    let raw = io::parse_table(&read_text(file)?).map_err(|e| Fail::at(file, e))?;
    let r = identify(&raw);
    let holds = |w: Option<crate::table::IdentityWitness>| w.is_some_and(|w| w.holds);
    // Implications every table must satisfy.
    let mut invariants_ok = !(holds(r.associative) && !(holds(r.right_bol) && holds(r.moufang)));
    if let Some(ip) = r.inverse_properties {
        if holds(r.right_bol) {
            invariants_ok &= ip.right_ip;
            invariants_ok &= !ip.left_ip || holds(r.moufang);
        }
    }
    let mut v = to_value(&r);
    let obj = v.as_object_mut().expect("report is an object");
    obj.insert("file".into(), file_key(file));
    obj.insert("flags".into(), json!(r.flags().join(",")));
    obj.insert("invariants_ok".into(), json!(invariants_ok));
    o.push(v);
    if !invariants_ok {
        o.escalate(exit::INVARIANT);
    }
    Ok(())
}

fn simple_file(file: &Path, cap: usize, o: &mut Output) -> std::result::Result<(), Fail> {
    let l = load_loop(file)?;
    let gr_r = mult_group(&l, Side::Right, cap)?;
    let strong = gr_r.simple;
    let simple = is_simple_loop(&l, cap)?;
    let mut rec = json!({
        "file": file_key(file),
        "order": l.order(),
        "gr_right_order": gr_r.group.order(),
        "strongly_simple": strong,
        "simple": simple,
        "strong_implies_simple": !strong || simple,
    });
    if strong {
        rec["gr_shape"] = to_value(&classify_gr_shape(&l, cap)?);
    }
    o.push(rec);
    if strong && !simple {
        o.escalate(exit::INVARIANT);
    }
    Ok(())
}

fn construct(file: &Path, quotient: Option<&[usize]>, out: Option<&Path>, o: &mut Output) -> std::result::Result<(), Fail> {
    let d = io::read_instance(&read_text(file)?).map_err(|e| Fail::at(file, e))?;
    let verdict = verify_sigma_phi(&d);
    let mut rec = json!({
        "file": file_key(file),
        "group_order": d.group().order(),
        "n_order": d.n().len(),
        "phi_injective": d.is_injective(),
        "verdict": to_value(&verdict),
        "conditions_hold": verdict.holds(),
    });
    if !verdict.holds() {
        o.push(rec);
        o.escalate(exit::INVARIANT);
        return Ok(());
    }
    let c = construct_loop(&d)?;
    let l = c.as_loop();
    let relations = relations_check(&c);
    let cor1 = associator_stabilizer_check(&c);
    let admissible = admissible_normal_subgroups(&d)?;
    rec["loop_order"] = json!(l.order());
    rec["reps"] = json!(c.reps());
    rec["right_bol"] = json!(is_right_bol(l).holds);
    rec["moufang"] = json!(is_moufang(l).holds);
    rec["inverse_properties"] = to_value(&inverse_properties(l));
    rec["relations"] = to_value(&relations);
    rec["associator_stabilizer"] = json!(cor1);
    rec["sigma_phi_simple"] = json!(admissible.is_empty());
    rec["admissible_normal_subgroups"] = json!(admissible);
    rec["table"] = json!(l.to_rows());
    if let Some(h) = quotient {
        let q = quotient_loop(&c, h)?;
        rec["quotient"] = json!({
            "order": q.quotient.as_loop().order(),
            "projection": q.projection,
            "isomorphic": q.isomorphic,
            "core_criterion": q.core_criterion,
            "table": q.quotient.as_loop().to_rows(),
        });
        if q.isomorphic != q.core_criterion {
            o.escalate(exit::INVARIANT);
        }
    }
    if let Some(path) = out {
        std::fs::write(path, io::write_table(l)).map_err(|e| Fail::usage(format!("{}: {e}", path.display())))?;
    }
    if !relations.holds() || !cor1 {
        o.escalate(exit::INVARIANT);
    }
    o.push(rec);
    Ok(())
}

fn space_record(s: &SymSpace) -> Result<Value> {
    Ok(json!({
        "order": s.order(),
        "base": s.base(),
        "inversion_automorphism": match s.base() {
            Some(_) => Some(inversion_automorphism_check(s)?),
            None => None,
        },
    }))
}

fn symspace(file: &Path, o: &mut Output) -> std::result::Result<(), Fail> {
    let text = read_text(file)?;
    let is_instance = text.lines().any(|l| l.trim_start().starts_with("sigma:"));
    if !is_instance {
        let s = io::read_symspace(&text).map_err(|e| Fail::at(file, e))?;
        let mut rec = space_record(&s)?;
        rec["file"] = file_key(file);
        rec["axioms"] = json!(true);
        if rec["inversion_automorphism"] == json!(false) {
            o.escalate(exit::INVARIANT);
        }
        o.push(rec);
        return Ok(());
    }
    let d = io::read_instance(&text).map_err(|e| Fail::at(file, e))?;
    let gw = d.gw();
    let twisted = space_on_twisted_set(gw)?;
    let cosets = coset_space(gw)?;
    let psi = psi_isomorphism_check(gw)?;
    let rec = json!({
        "file": file_key(file),
        "group_order": gw.group().order(),
        "fixed_order": crate::symspace::fixed_subgroup(gw).len(),
        "twisted": space_record(&twisted.space)?,
        "twisted_carrier": twisted.carrier,
        "cosets": space_record(&cosets.space)?,
        "psi": to_value(&psi),
    });
    let inversions_ok = [&rec["twisted"], &rec["cosets"]]
        .iter()
        .all(|r| r["inversion_automorphism"] != json!(false));
    if !psi.holds() || !inversions_ok {
        o.escalate(exit::INVARIANT);
    }
    o.push(rec);
    Ok(())
}

fn collect_tables(path: &Path, out: &mut Vec<PathBuf>) -> std::result::Result<(), Fail> {
    if path.is_dir() {
        let mut entries: Vec<PathBuf> = std::fs::read_dir(path)
            .map_err(|e| Fail::usage(format!("{}: {e}", path.display())))?
            .filter_map(|e| e.ok().map(|e| e.path()))
            .collect();
        entries.sort();
        for e in entries {
            if e.is_dir() || e.extension().is_some_and(|x| x == "tbl") {
                collect_tables(&e, out)?;
            }
        }
    } else if path.exists() {
        out.push(path.to_path_buf());
    } else {
        return Err(Fail::usage(format!("{}: no such file or directory", path.display())));
    }
    Ok(())
}

fn scan(paths: &[PathBuf], search: Option<usize>, budget: u64, cap: usize, o: &mut Output) -> std::result::Result<(), Fail> {
    let mut files = Vec::new();
    for p in paths {
        collect_tables(p, &mut files)?;
    }
    let mut corpus: Vec<(String, Loop)> = Vec::new();
    let mut skipped = Vec::new();
    for f in &files {
        let text = read_text(f)?;
        match io::read_loop(&text) {
            Ok(l) => corpus.push((f.display().to_string(), l)),
            Err(Error::Parse { .. }) => return Err(Fail::at(f, io::read_loop(&text).unwrap_err())),
            Err(e) => skipped.push(json!({ "file": file_key(f), "reason": e.to_string() })),
        }
    }
    if let Some(n) = search {
        let mut k = 0;
        bol_search(n, budget, |l| {
            k += 1;
            corpus.push((format!("bol-search/{n}/{k}"), l));
            std::ops::ControlFlow::Continue(())
        })?;
    }

    let report = strong_simplicity_scan(&corpus, cap)?;
    let mut bound_failures = Vec::new();
    let mut implication_failures = Vec::new();
    let mut inner_failures = Vec::new();
    for ((name, l), entry) in corpus.iter().zip(&report.entries) {
        if !entry.right_bol {
            continue;
        }
        if !bound_check(l, cap)?.holds {
            bound_failures.push(name.clone());
        }
        if entry.strongly_simple == Some(true) && entry.simple == Some(false) {
            implication_failures.push(name.clone());
        }
        if l.order() <= 16 && !inner_generator_check(l, cap)? {
            inner_failures.push(name.clone());
        }
    }
    let strongly_simple = report
        .entries
        .iter()
        .filter(|e| e.strongly_simple == Some(true))
        .count();
    let summary = json!({
        "loops": corpus.len(),
        "bol": report.entries.iter().filter(|e| e.right_bol).count(),
        "strongly_simple": strongly_simple,
        "skipped": skipped.len(),
        "counterexample_candidates": report.candidates,
        "bound_failures": bound_failures,
        "strong_not_simple": implication_failures,
        "inner_generator_failures": inner_failures,
    });
    if !bound_failures.is_empty() || !implication_failures.is_empty() || !inner_failures.is_empty() {
        o.escalate(exit::INVARIANT);
    }
    if !report.candidates.is_empty() {
        o.escalate(exit::CANDIDATE);
    }
    // Search output is summarised rather than listed loop by loop.
    for e in report.entries.iter().filter(|e| !e.name.starts_with("bol-search/")) {
        o.push(to_value(e));
    }
    for s in skipped {
        o.push(s);
    }
    o.push(summary);
    Ok(())
}

fn write_out(path: &Path, contents: &str) -> std::result::Result<(), Fail> {
    if let Some(parent) = path.parent().filter(|p| !p.as_os_str().is_empty()) {
        std::fs::create_dir_all(parent).map_err(|e| Fail::usage(format!("{}: {e}", parent.display())))?;
    }
    std::fs::write(path, contents).map_err(|e| Fail::usage(format!("{}: {e}", path.display())))
}

#[allow(clippy::too_many_arguments)]
fn corpus(
    kind: CorpusKind,
    name: Option<&str>,
    order: Option<usize>,
    first: Option<usize>,
    budget: u64,
    base: Option<&str>,
    out: Option<&Path>,
    o: &mut Output,
) -> std::result::Result<(), Fail> {
    let single = |o: &mut Output, l: &Loop| -> std::result::Result<(), Fail> {
        let text = io::write_table(l);
        match out {
            Some(p) => {
                write_out(p, &text)?;
                o.push(json!({ "written": p.display().to_string(), "order": l.order() }));
            }
            None => o.raw = Some(text),
        }
        Ok(())
    };
    match kind {
        CorpusKind::Group => {
            let name = name.ok_or_else(|| Fail::usage("--kind group needs --name"))?;
            single(o, &groups::by_name(name)?)?;
        }
        CorpusKind::CheinDouble => {
            let base = base.ok_or_else(|| Fail::usage("--kind chein-double needs --base"))?;
            let g = if Path::new(base).is_file() {
                load_loop(Path::new(base))?
            } else {
                groups::by_name(base)?
            };
            single(o, &chein_double(&g)?)?;
        }
        CorpusKind::BolSearch => {
            let n = order.ok_or_else(|| Fail::usage("--kind bol-search needs --order"))?;
            let mut tables = Vec::new();
            let stats = bol_search(n, budget, |l| {
                tables.push(l);
                if first.is_some_and(|k| tables.len() >= k) {
                    std::ops::ControlFlow::Break(())
                } else {
                    std::ops::ControlFlow::Continue(())
                }
            })?;
            match out {
                Some(dir) => {
                    for (k, l) in tables.iter().enumerate() {
                        write_out(&dir.join(format!("bol{n}_{:05}.tbl", k + 1)), &io::write_table(l))?;
                    }
                    o.push(json!({
                        "order": n,
                        "written": tables.len(),
                        "nodes": stats.nodes,
                        "complete": stats.complete,
                        "directory": dir.display().to_string(),
                    }));
                }
                None => {
                    let mut text = String::new();
                    for (k, l) in tables.iter().enumerate() {
                        let flags = if is_moufang(l).holds { "moufang" } else { "not-moufang" };
                        text.push_str(&format!("# solution {} {flags}\n", k + 1));
                        text.push_str(&io::write_table(l));
                    }
                    o.raw = Some(text);
                }
            }
        }
        CorpusKind::Bundle => {
            let dir = out.ok_or_else(|| Fail::usage("--kind bundle needs --out DIR"))?;
            let entries = bundle(budget)?;
            for e in &entries {
                write_out(&dir.join(&e.path), &e.contents)?;
            }
            write_out(&dir.join("MANIFEST"), &manifest(&entries))?;
            o.push(json!({ "written": entries.len(), "directory": dir.display().to_string() }));
        }
    }
    Ok(())
}

/// `key=value` lines per record, nested keys joined with dots, records
/// separated by blank lines.
pub fn render_text(records: &[Value]) -> String {
    let mut out = String::new();
    for (i, r) in records.iter().enumerate() {
        if i > 0 {
            out.push('\n');
        }
        let mut lines = Vec::new();
        flatten("", r, &mut lines);
        for l in lines {
            out.push_str(&l);
            out.push('\n');
        }
    }
    out
}

fn scalar(v: &Value) -> Option<String> {
    match v {
        Value::Null => Some("none".into()),
        Value::Bool(b) => Some(b.to_string()),
        Value::Number(n) => Some(n.to_string()),
        Value::String(s) => Some(s.clone()),
        _ => None,
    }
}

fn flatten(prefix: &str, v: &Value, out: &mut Vec<String>) {
    let key = |k: &str| {
        if prefix.is_empty() {
            k.to_string()
        } else {
            format!("{prefix}.{k}")
        }
    };
    match v {
        Value::Object(map) => flatten_map(prefix, map, out),
        Value::Array(items) if items.iter().all(|i| scalar(i).is_some()) => {
            let joined: Vec<String> = items.iter().filter_map(scalar).collect();
            out.push(format!("{prefix}=[{}]", joined.join(",")));
        }
        Value::Array(items) if items.iter().all(|i| matches!(i, Value::Array(_))) => {
            // Tables and lists of subsets: one bracketed group per item.
            let groups: Vec<String> = items
                .iter()
                .map(|i| {
                    let parts: Vec<String> = i.as_array().into_iter().flatten().filter_map(scalar).collect();
                    format!("[{}]", parts.join(","))
                })
                .collect();
            out.push(format!("{prefix}=[{}]", groups.join(",")));
        }
        Value::Array(items) => {
            for (i, item) in items.iter().enumerate() {
                flatten(&key(&i.to_string()), item, out);
            }
        }
        other => out.push(format!("{prefix}={}", scalar(other).unwrap_or_default())),
    }
}

fn flatten_map(prefix: &str, map: &Map<String, Value>, out: &mut Vec<String>) {
    for (k, v) in map {
        let key = if prefix.is_empty() {
            k.clone()
        } else {
            format!("{prefix}.{k}")
        };
        flatten(&key, v, out);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn text_rendering() {
        let v = json!({"a": 1, "b": {"c": true, "d": null}, "e": [1, 2], "t": [[0, 1], [1, 0]]});
        assert_eq!(render_text(&[v]), "a=1\nb.c=true\nb.d=none\ne=[1,2]\nt=[[0,1],[1,0]]\n");
    }

    #[test]
    fn usage_errors_exit_one() {
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let args = ["bolkit", "frobnicate"].map(OsString::from);
        assert_eq!(run_with(args, &mut out, &mut err), exit::USAGE);
        let args = ["bolkit", "identify", "/nonexistent/file.tbl"].map(OsString::from);
        assert_eq!(run_with(args, &mut out, &mut err), exit::USAGE);
    }
}
