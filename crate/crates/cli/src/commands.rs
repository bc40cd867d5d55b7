use std::fmt::{self, Write};
use std::fs;
use std::path::Path;

use pbck::{
    AlgebraFile, AxiomSystem, CommutativityMethod, DsFilter, Error, FiniteAlgebra, HoopAlgebra, HoopLevel, SearchConfig,
    SearchKind, Subset, WitnessMode,
};
use serde_json::{json, Value};

use crate::render::{
    algebra_json, failures_text, map_json, map_row, report_json, report_text, subset_json, verdict, yes_no,
};

/// What a successful run prints. `passed == false` maps to exit code 1.
pub struct Outcome {
    pub passed: bool,
    pub text: String,
    pub json: Value,
}

#[derive(Debug)]
pub enum CliError {
    /// Unreadable or malformed input, unknown names, limits: exit code 2.
    Input(String),
    /// Well-formed input that fails a precondition of the requested operation: exit code 1.
    Check(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Input(_) => 2,
            CliError::Check(_) => 1,
        }
    }

    pub fn to_json(&self) -> Value {
        let (kind, message) = match self {
            CliError::Input(m) => ("input", m),
            CliError::Check(m) => ("check", m),
        };
        json!({ "error": { "kind": kind, "message": message } })
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Input(m) | CliError::Check(m) => f.write_str(m),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::Structure(_) | Error::InvalidPoint(_) | Error::SizeLimit { .. } | Error::BudgetExceeded { .. } => {
                CliError::Input(e.to_string())
            }
            _ => CliError::Check(e.to_string()),
        }
    }
}

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

fn load(path: &Path) -> Result<AlgebraFile, CliError> {
    let src = read(path)?;
    pbck::parse_algebra(&src).map_err(|e| CliError::Input(format!("{}:{e}", path.display())))
}

fn load_algebra(path: &Path) -> Result<FiniteAlgebra, CliError> {
    Ok(load(path)?.algebra)
}

/// Accepts `x,y`, `x y` or `{x,y}`.
fn parse_list(a: &FiniteAlgebra, list: &str) -> Result<Subset, CliError> {
    let names: Vec<&str> = list
        .trim()
        .trim_start_matches('{')
        .trim_end_matches('}')
        .split(|c: char| c == ',' || c.is_whitespace())
        .filter(|s| !s.is_empty())
        .collect();
    Ok(Subset::from_names(a, &names)?)
}

pub fn check(path: &Path, systems: &[AxiomSystem], mode: WitnessMode) -> Result<Outcome, CliError> {
    let a = load_algebra(path)?;
    let reports: Vec<_> = systems.iter().map(|&s| pbck::check_axiom_system_with(&a, s, mode)).collect();
    let passed = reports.iter().all(|r| r.passed());
    let mut text = String::new();
    for r in &reports {
        writeln!(text, "{}: {}", r.suite, verdict(r.passed())).unwrap();
        report_text(&mut text, r, "  ");
    }
    let json = json!({
        "file": path.display().to_string(),
        "passed": passed,
        "reports": reports.iter().map(|r| report_json(&a, r)).collect::<Vec<_>>(),
    });
    Ok(Outcome { passed, text, json })
}

pub fn classify(path: &Path, mode: WitnessMode) -> Result<Outcome, CliError> {
    let a = load_algebra(path)?;
    let pbck_ok = pbck::is_pseudo_bck(&a);
    let width = CommutativityMethod::ALL.iter().map(|m| m.label().len()).max().unwrap_or(0);
    let mut text = String::new();
    writeln!(text, "pseudo BCK-algebra: {}", yes_no(pbck_ok)).unwrap();
    let mut rows = Vec::new();
    let mut verdicts = Vec::new();
    for method in CommutativityMethod::ALL {
        let label = method.label();
        match pbck::check_commutative_with(&a, method, mode) {
            Ok(report) => {
                let ok = report.passed();
                verdicts.push(ok);
                match report.first_witness() {
                    Some(w) => writeln!(text, "{label:<width$}  {}  {}", verdict(ok), w.message).unwrap(),
                    None => writeln!(text, "{label:<width$}  {}", verdict(ok)).unwrap(),
                }
                rows.push(json!({ "method": label, "applicable": true, "commutative": ok, "report": report_json(&a, &report) }));
            }
            Err(Error::PreconditionViolated(why)) => {
                writeln!(text, "{label:<width$}  n/a   {why}").unwrap();
                rows.push(json!({ "method": label, "applicable": false, "reason": why }));
            }
            Err(e) => return Err(e.into()),
        }
    }
    let commutative = !verdicts.is_empty() && verdicts.iter().all(|&v| v);
    let agree = verdicts.windows(2).all(|w| w[0] == w[1]);
    writeln!(text, "commutative: {}", yes_no(commutative)).unwrap();
    if !agree {
        writeln!(text, "warning: methods disagree").unwrap();
    }
    let json = json!({
        "file": path.display().to_string(),
        "pseudo_bck": pbck_ok,
        "commutative": commutative,
        "methods_agree": agree,
        "methods": rows,
    });
    Ok(Outcome { passed: commutative, text, json })
}

pub enum DsMode {
    Filter(DsFilter),
    Generated(String),
}

pub fn ds(path: &Path, mode: DsMode) -> Result<Outcome, CliError> {
    let a = load_algebra(path)?;
    match mode {
        DsMode::Generated(list) => {
            let x = parse_list(&a, &list)?;
            let d = pbck::generated_ds(&a, x)?;
            let text = format!("{}\n", d.display(&a));
            let json = json!({ "generated_by": subset_json(&a, x), "ds": subset_json(&a, d) });
            Ok(Outcome { passed: true, text, json })
        }
        DsMode::Filter(filter) => {
            let list = pbck::enumerate_ds(&a, filter)?;
            let shown: Vec<String> = list.iter().map(|d| d.display(&a)).collect();
            let width = shown.iter().map(String::len).max().unwrap_or(0);
            let mut text = String::new();
            let mut rows = Vec::new();
            for (d, s) in list.iter().zip(&shown) {
                let c = pbck::classify_subset(&a, *d)?;
                let normal = if c.is_normal { "normal" } else { "-" };
                let comm = if c.is_commutative { "commutative" } else { "-" };
                writeln!(text, "{s:<width$}  {normal:<6}  {comm}").unwrap();
                rows.push(json!({ "members": subset_json(&a, *d), "normal": c.is_normal, "commutative": c.is_commutative }));
            }
            let json = json!({ "filter": filter, "count": list.len(), "systems": rows });
            Ok(Outcome { passed: true, text, json })
        }
    }
}

pub fn quotient(path: &Path, list: &str) -> Result<Outcome, CliError> {
    let a = load_algebra(path)?;
    let h = parse_list(&a, list)?;
    let q = pbck::quotient(&a, h).map_err(|e| match e {
        Error::NotNormal { x, y } => CliError::Check(format!(
            "{} is not normal: {x}->{y} and {x}~>{y} differ in membership",
            h.display(&a),
            x = a.name(x),
            y = a.name(y)
        )),
        e => e.into(),
    })?;
    let mut text = String::new();
    for (i, block) in q.blocks.iter().enumerate() {
        writeln!(text, "# block {}: {}", q.quotient.name(i), block.display(&a)).unwrap();
    }
    text.push_str(&pbck::write_algebra(&q.quotient, None));
    let blocks: Vec<Value> = q
        .blocks
        .iter()
        .enumerate()
        .map(|(i, b)| json!({ "name": q.quotient.name(i), "members": subset_json(&a, *b) }))
        .collect();
    let json = json!({
        "ds": subset_json(&a, h),
        "blocks": blocks,
        "quotient": algebra_json(&q.quotient, None),
    });
    Ok(Outcome { passed: true, text, json })
}

fn kind_label(kind: SearchKind) -> &'static str {
    match kind {
        SearchKind::Type1 => "type1",
        SearchKind::Type2 => "type2",
        SearchKind::Morphism => "sm",
    }
}

pub fn enumerate_states(path: &Path, kind: SearchKind, budget: u64) -> Result<Outcome, CliError> {
    let a = load_algebra(path)?;
    let maps = pbck::enumerate_states(&a, kind, budget)?;
    let mut text = String::new();
    for mu in &maps {
        writeln!(text, "{}", map_row(&a, mu)).unwrap();
    }
    writeln!(text, "# {} {} map(s) on {}", maps.len(), kind_label(kind), a.names().join(" ")).unwrap();
    let json = json!({
        "kind": kind_label(kind),
        "elements": a.names(),
        "count": maps.len(),
        "maps": maps.iter().map(|m| map_json(&a, m)).collect::<Vec<_>>(),
    });
    Ok(Outcome { passed: true, text, json })
}

pub fn classify_state(path: &Path, map_path: &Path, kind: SearchKind) -> Result<Outcome, CliError> {
    let a = load_algebra(path)?;
    let src = read(map_path)?;
    let mu = pbck::parse_map(&a, &src).map_err(|e| CliError::Input(format!("{}:{e}", map_path.display())))?;
    let cls = pbck::classify_map(&a, &mu)?;
    let sm = pbck::is_state_morphism(&a, &mu)?;
    let passed = match kind {
        SearchKind::Type1 => cls.type1,
        SearchKind::Type2 => cls.type2,
        SearchKind::Morphism => sm.is_state_morphism,
    };
    let is4 = match cls.is4 {
        Some(b) => yes_no(b),
        None => "n/a (not a meet-semilattice)",
    };
    let mut text = String::new();
    writeln!(text, "map: {}", map_row(&a, &mu)).unwrap();
    writeln!(text, "type I: {}", yes_no(cls.type1)).unwrap();
    failures_text(&mut text, &cls.type1_report, "  ");
    writeln!(text, "type II: {}", yes_no(cls.type2)).unwrap();
    failures_text(&mut text, &cls.type2_report, "  ");
    writeln!(text, "normal type I: {}", yes_no(cls.normal1)).unwrap();
    writeln!(text, "normal type II: {}", yes_no(cls.normal2)).unwrap();
    writeln!(text, "IS4: {is4}").unwrap();
    writeln!(
        text,
        "kernel: {} (normal: {}, commutative: {})",
        cls.kernel.display(&a),
        yes_no(cls.kernel_normal),
        yes_no(cls.kernel_commutative)
    )
    .unwrap();
    writeln!(text, "image: {}", cls.image.display(&a)).unwrap();
    writeln!(text, "state-morphism: {}", yes_no(sm.is_state_morphism)).unwrap();
    failures_text(&mut text, &sm.report, "  ");
    writeln!(text, "requested kind {}: {}", kind_label(kind), verdict(passed)).unwrap();
    let json = json!({
        "map": map_json(&a, &mu),
        "kind": kind_label(kind),
        "passed": passed,
        "type1": cls.type1,
        "type2": cls.type2,
        "normal1": cls.normal1,
        "normal2": cls.normal2,
        "is4": cls.is4,
        "kernel": subset_json(&a, cls.kernel),
        "kernel_normal": cls.kernel_normal,
        "kernel_commutative": cls.kernel_commutative,
        "image": subset_json(&a, cls.image),
        "state_morphism": sm.is_state_morphism,
        "endomorphism": sm.is_endomorphism,
        "idempotent": sm.is_idempotent,
        "type1_report": report_json(&a, &cls.type1_report),
        "type2_report": report_json(&a, &cls.type2_report),
        "morphism_report": report_json(&a, &sm.report),
    });
    Ok(Outcome { passed, text, json })
}

pub fn measure(path: &Path, measure_path: &Path) -> Result<Outcome, CliError> {
    let a = load_algebra(path)?;
    let src = read(measure_path)?;
    let m = pbck::parse_measure(&a, &src).map_err(|e| CliError::Input(format!("{}:{e}", measure_path.display())))?;
    let ok = pbck::is_measure(&a, &m)?;
    let values: Vec<Value> = a.elements().map(|x| json!({ "element": a.name(x), "value": m.value(x).to_string() })).collect();
    let mut text = String::new();
    writeln!(text, "measure: {}", yes_no(ok)).unwrap();
    if ok {
        let kernel = pbck::measure_kernel(&a, &m)?;
        writeln!(text, "kernel: {}", kernel.display(&a)).unwrap();
        let json = json!({ "measure": true, "values": values, "kernel": subset_json(&a, kernel) });
        return Ok(Outcome { passed: true, text, json });
    }
    let mut violations = Vec::new();
    for x in a.elements().filter(|&x| m.value(x) < &Default::default()) {
        writeln!(text, "  negative value m({}) = {}", a.name(x), m.value(x)).unwrap();
    }
    for (x, y) in pbck::measure_violations(&a, &m) {
        let (ar, sq) = (a.arrow(x, y), a.squiggle(x, y));
        writeln!(
            text,
            "  x={}, y={}: m(y)-m(x) = {}, m(x->y) = {}, m(x~>y) = {}",
            a.name(x),
            a.name(y),
            m.value(y) - m.value(x),
            m.value(ar),
            m.value(sq)
        )
        .unwrap();
        violations.push(json!([a.name(x), a.name(y)]));
    }
    let json = json!({ "measure": false, "values": values, "violations": violations });
    Ok(Outcome { passed: false, text, json })
}

pub fn hoop(path: &Path, level: HoopLevel) -> Result<Outcome, CliError> {
    let file = load(path)?;
    let Some(prod) = file.prod else {
        return Err(CliError::Input(format!("{}: no `prod` section", path.display())));
    };
    let h = HoopAlgebra::new(file.algebra, prod)?;
    let report = pbck::check_hoop(&h, level);
    let mut text = String::new();
    writeln!(text, "{}: {}", report.suite, verdict(report.passed())).unwrap();
    report_text(&mut text, &report, "  ");
    let json = json!({ "level": level, "passed": report.passed(), "report": report_json(h.base(), &report) });
    Ok(Outcome { passed: report.passed(), text, json })
}

pub fn product(first: &Path, second: &Path, output: Option<&Path>) -> Result<Outcome, CliError> {
    let a1 = load_algebra(first)?;
    let a2 = load_algebra(second)?;
    let p = pbck::direct_product(&a1, &a2)?;
    let body = pbck::write_algebra(&p, None);
    let text = match output {
        Some(out) => {
            fs::write(out, &body).map_err(|e| CliError::Input(format!("{}: {e}", out.display())))?;
            format!("wrote {} ({} elements)\n", out.display(), p.size())
        }
        None => body,
    };
    let json = json!({
        "output": output.map(|o| o.display().to_string()),
        "algebra": algebra_json(&p, None),
    });
    Ok(Outcome { passed: true, text, json })
}

pub fn enumerate(cfg: &SearchConfig, count_only: bool, as_json: bool) -> Result<Outcome, CliError> {
    let header = json!({ "size": cfg.size, "commutative": cfg.commutative_only, "up_to_iso": cfg.up_to_iso });
    if count_only {
        let count = pbck::count_models(cfg)?;
        let mut json = header;
        json["count"] = json!(count);
        return Ok(Outcome { passed: true, text: format!("{count}\n"), json });
    }
    let mut text = String::new();
    let mut models = Vec::new();
    let count = pbck::for_each_model(cfg, |a| {
        if as_json {
            models.push(algebra_json(a, None));
        } else {
            if !text.is_empty() {
                text.push('\n');
            }
            text.push_str(&pbck::write_algebra(a, None));
        }
    })?;
    writeln!(text, "# {count} model(s)").unwrap();
    let mut json = header;
    json["count"] = json!(count);
    json["models"] = json!(models);
    Ok(Outcome { passed: true, text, json })
}
