use std::fmt::Write as _;
use std::io::Write;

use serde::Serialize;
use serde_json::json;

use super::{
    build_spec, matrix_cap, Failure, Format, GridArgs, Level, ParamsArgs, Range, TableArgs, TauArgs, VerifyArgs,
};
use crate::evalcode::{self, EvalCode, EvalError, PointSet, MAX_BRUTE_CODEWORDS};
use crate::field::FieldElement;
use crate::footprint::{self, DefiningSet, Exponent, ProductSpec, MAX_GRID_LEN};
use crate::quantum::{self, GvVerdict, QuantumError, QuantumParams};
use crate::report::{self, TableRecord};

/// Rendered output, or a failure with whatever output was produced first.
pub(super) type Outcome = Result<String, (Option<String>, Failure)>;

fn fail(f: Failure) -> (Option<String>, Failure) {
    (None, f)
}

fn delta_in_range(spec: &ProductSpec, r: Range) -> Result<(), Failure> {
    let max = spec.n() + 1;
    if r.lo < 2 || r.hi > max {
        return Err(Failure::Hypothesis(format!(
            "delta {}..{} outside the admissible range 2..{max}",
            r.lo, r.hi
        )));
    }
    Ok(())
}

fn header(spec: &ProductSpec) -> String {
    let q = spec.q().map_or_else(|_| "overflow".to_string(), |q| q.to_string());
    format!("{spec} q={q} n={}", spec.n())
}

fn marker(p: &QuantumParams) -> &'static str {
    quantum::gv_classify(p).map_or("", |c| c.verdict.marker())
}

fn verdict(p: &QuantumParams) -> Option<GvVerdict> {
    quantum::gv_classify(p).ok().map(|c| c.verdict)
}

/// The enlarged distance is a lower bound, except when the Singleton bound
/// leaves no room above it.
fn display_params(p: &QuantumParams) -> String {
    let pinned = quantum::singleton_slack(p) < 2;
    QuantumParams {
        d_is_lower_bound: p.d_is_lower_bound && !pinned,
        ..*p
    }
    .to_string()
}

fn singleton_line(p: &QuantumParams) -> String {
    match quantum::singleton_slack(p) {
        0 => "SINGLETON: MDS".to_string(),
        s if s < 0 => format!("SINGLETON: VIOLATION slack={s}"),
        s => format!("SINGLETON: slack={s}"),
    }
}

fn csv_string<T: Serialize>(rows: &[T]) -> Result<String, Failure> {
    let mut w = csv::Writer::from_writer(Vec::new());
    for r in rows {
        w.serialize(r).map_err(|e| Failure::Io(std::io::Error::other(e)))?;
    }
    let bytes = w.into_inner().map_err(|e| Failure::Io(std::io::Error::other(e.to_string())))?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

fn ndjson<T: Serialize>(rows: &[T]) -> String {
    rows.iter()
        .map(|r| serde_json::to_string(r).expect("plain records serialize") + "\n")
        .collect()
}

fn hypothesis(e: QuantumError) -> Failure {
    Failure::Hypothesis(e.to_string())
}

#[derive(Serialize)]
struct ParamsRecord {
    code: &'static str,
    n: u64,
    k: u64,
    d: u64,
    d_lower_bound: bool,
    gv: Option<GvVerdict>,
    singleton_slack: Option<i64>,
}

impl ParamsRecord {
    fn quantum(code: &'static str, p: &QuantumParams) -> ParamsRecord {
        ParamsRecord {
            code,
            n: p.n,
            k: p.k,
            d: p.d,
            d_lower_bound: p.d_is_lower_bound,
            gv: verdict(p),
            singleton_slack: Some(quantum::singleton_slack(p)),
        }
    }
}

pub(super) fn params(a: &ParamsArgs, err: &mut dyn Write) -> Outcome {
    let spec = build_spec(&a.spec).map_err(fail)?;
    let delta = a
        .delta
        .single()
        .ok_or_else(|| fail(Failure::Usage("params takes a single --delta".into())))?;
    delta_in_range(&spec, a.delta).map_err(fail)?;
    let classical = quantum::classical_params(&spec, delta).map_err(|e| fail(hypothesis(e)))?;

    let mut text = String::new();
    writeln!(text, "code       {} delta={delta}", header(&spec)).unwrap();
    writeln!(text, "classical  {classical}").unwrap();
    let css = match quantum::css_params(&spec, delta) {
        Ok(c) => c,
        Err(e) => {
            let partial = (a.output.format == Format::Text).then_some(text);
            return Err((partial, hypothesis(e)));
        }
    };
    let steane = quantum::steane_params(&spec, delta);
    if let Err(e) = &steane {
        let _ = writeln!(err, "note: no enlargement at delta={delta}: {e}");
    }
    let best = steane.as_ref().map_or(css, |s| s.params);
    let violated = quantum::singleton_slack(&css) < 0 || quantum::singleton_slack(&best) < 0;

    let rendered = match a.output.format {
        Format::Text => {
            writeln!(text, "css        {} {}", display_params(&css), marker(&css)).unwrap();
            match &steane {
                Ok(s) => {
                    writeln!(text, "steane     {} {}", display_params(&s.params), marker(&s.params)).unwrap();
                    let k = quantum::enlarge_guarantee(&spec, delta).map_or("-".to_string(), |k| k.to_string());
                    let bound = footprint::tau_lower_bound(&spec, delta - 1)
                        .map_or("-".to_string(), |b| format!("{}{}", b.bound, if b.exact { "*" } else { "" }));
                    writeln!(text, "increase   {} (edge {k}, closed form {bound})", s.increase).unwrap();
                }
                Err(_) => writeln!(text, "steane     -").unwrap(),
            }
            writeln!(text, "{}", singleton_line(&best)).unwrap();
            text.lines().map(|l| l.trim_end().to_string() + "\n").collect()
        }
        Format::Csv => {
            let mut rows = vec![
                ParamsRecord {
                    code: "classical",
                    n: classical.n,
                    k: classical.k,
                    d: classical.d,
                    d_lower_bound: false,
                    gv: None,
                    singleton_slack: None,
                },
                ParamsRecord::quantum("css", &css),
            ];
            if let Ok(s) = &steane {
                rows.push(ParamsRecord::quantum("steane", &s.params));
            }
            csv_string(&rows).map_err(fail)?
        }
        Format::Json => {
            let q = |p: &QuantumParams| {
                json!({
                    "n": p.n, "k": p.k, "d": p.d, "d_lower_bound": p.d_is_lower_bound,
                    "gv": verdict(p), "singleton_slack": quantum::singleton_slack(p),
                })
            };
            let steane_json = steane.as_ref().ok().map(|s| {
                let mut v = q(&s.params);
                v["increase"] = json!(s.increase);
                v["prop4"] = json!(quantum::enlarge_guarantee(&spec, delta));
                v
            });
            let v = json!({
                "p": spec.p(), "r": spec.r_vec(), "q": css.q, "delta": delta,
                "classical": classical, "css": q(&css), "steane": steane_json,
            });
            v.to_string() + "\n"
        }
    };
    if violated {
        return Err((Some(rendered), Failure::Verification));
    }
    Ok(rendered)
}

pub(super) fn table(a: &TableArgs, err: &mut dyn Write) -> Outcome {
    let spec = build_spec(&a.spec).map_err(fail)?;
    delta_in_range(&spec, a.delta).map_err(fail)?;
    let rows = report::table(&spec, a.delta.lo, a.delta.hi);
    let mut text = String::new();
    let mut records = Vec::new();
    let mut violated = false;
    if a.output.format == Format::Text {
        writeln!(text, "# {}", header(&spec)).unwrap();
        writeln!(text, "{}", report::text_header().trim_end()).unwrap();
    }
    for (delta, row) in &rows {
        match row {
            Ok(row) => {
                violated |= quantum::singleton_slack(&row.css) < 0 || quantum::singleton_slack(&row.steane) < 0;
                if a.output.format == Format::Text {
                    writeln!(text, "{}", report::render_text_row(row).trim_end()).unwrap();
                }
                records.push(TableRecord::from(row));
            }
            Err(e) => {
                let warning = format!("# delta={delta} skipped: {e}");
                if a.output.format == Format::Text {
                    writeln!(text, "{warning}").unwrap();
                } else {
                    let _ = writeln!(err, "{warning}");
                }
            }
        }
    }
    let rendered = match a.output.format {
        Format::Text => text,
        Format::Csv => {
            if records.is_empty() {
                report::CSV_HEADER.to_string() + "\n"
            } else {
                csv_string(&records).map_err(fail)?
            }
        }
        Format::Json => ndjson(&records),
    };
    if violated {
        let _ = writeln!(err, "SINGLETON: VIOLATION");
        return Err((Some(rendered), Failure::Verification));
    }
    Ok(rendered)
}

pub(super) fn grid(a: &GridArgs) -> Outcome {
    let spec = build_spec(&a.spec).map_err(fail)?;
    let grid = footprint::sigma_grid(&spec).map_err(|e| fail(Failure::Hypothesis(e.to_string())))?;
    Ok(match a.output.format {
        Format::Text => grid.render(),
        Format::Csv => {
            let mut s = String::new();
            let cols: Vec<String> = (1..=spec.m()).map(|i| format!("a{i}")).collect();
            writeln!(s, "{},sigma", cols.join(",")).unwrap();
            for (e, v) in spec.exponents().zip(grid.values()) {
                let a: Vec<String> = e.as_slice().iter().map(|x| x.to_string()).collect();
                writeln!(s, "{},{v}", a.join(",")).unwrap();
            }
            s
        }
        Format::Json => {
            let rows: Vec<_> = spec
                .exponents()
                .zip(grid.values())
                .map(|(e, v)| json!({"a": e.as_slice(), "sigma": v}))
                .collect();
            ndjson(&rows)
        }
    })
}

#[derive(Serialize)]
struct TauRecord {
    s: u64,
    tau: u64,
    calls: u64,
    k: u64,
    bound: Option<u64>,
    bound_exact: bool,
}

pub(super) fn tau(a: &TauArgs) -> Outcome {
    let spec = build_spec(&a.spec).map_err(fail)?;
    let range = match a.s {
        Some(r) => r,
        None if spec.n() <= MAX_GRID_LEN => Range { lo: 1, hi: spec.n() },
        None => {
            return Err(fail(Failure::Usage(format!(
                "n = {} is large; give --s explicitly",
                spec.n()
            ))))
        }
    };
    let records: Vec<TauRecord> = (range.lo..=range.hi)
        .map(|s| {
            let (tau, calls) = footprint::tau_with_calls(&spec, s);
            let bound = footprint::tau_lower_bound(&spec, s).ok();
            TauRecord {
                s,
                tau,
                calls,
                k: footprint::edge_count(&spec, s),
                bound: bound.map(|b| b.bound),
                bound_exact: bound.is_some_and(|b| b.exact),
            }
        })
        .collect();
    Ok(match a.output.format {
        Format::Text => records
            .iter()
            .map(|r| {
                let bound = r
                    .bound
                    .map_or("-".to_string(), |b| format!("{b}{}", if r.bound_exact { "*" } else { "" }));
                format!("s={} tau={} calls={} K={} bound={bound}\n", r.s, r.tau, r.calls, r.k)
            })
            .collect(),
        Format::Csv => csv_string(&records).map_err(fail)?,
        Format::Json => ndjson(&records),
    })
}

#[derive(Serialize, Clone, Copy, PartialEq, Eq)]
#[serde(rename_all = "UPPERCASE")]
enum Status {
    Pass,
    Fail,
    Skip,
    Info,
}

impl Status {
    fn of(ok: bool) -> Status {
        if ok {
            Status::Pass
        } else {
            Status::Fail
        }
    }

    fn label(self) -> &'static str {
        match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Skip => "SKIP",
            Status::Info => "INFO",
        }
    }
}

#[derive(Serialize)]
struct Check {
    delta: Option<u64>,
    check: &'static str,
    status: Status,
    detail: String,
}

struct Checks(Vec<Check>);

impl Checks {
    fn push(&mut self, delta: Option<u64>, check: &'static str, status: Status, detail: String) {
        self.0.push(Check {
            delta,
            check,
            status,
            detail,
        });
    }
}

fn eval_failure(e: EvalError) -> Failure {
    Failure::Hypothesis(e.to_string())
}

/// Exhaustive distance when the message space is small enough.
fn distance_check(checks: &mut Checks, code: &EvalCode, delta: u64, designed: Option<u64>) -> Result<(), Failure> {
    match (evalcode::brute_min_distance(code), designed) {
        (Ok(d), Some(designed)) => checks.push(
            Some(delta),
            "distance",
            Status::of(d == designed),
            format!("dist_brute={d} dist_designed={designed}"),
        ),
        (Err(EvalError::EmptyCode), _) | (_, None) => {
            checks.push(Some(delta), "distance", Status::Skip, "empty code".into())
        }
        (Err(EvalError::BruteForceTooLarge { q, k }), _) => checks.push(
            Some(delta),
            "distance",
            Status::Skip,
            format!("q^k = {q}^{k} exceeds {MAX_BRUTE_CODEWORDS}"),
        ),
        (Err(e), _) => return Err(eval_failure(e)),
    }
    Ok(())
}

/// Minimum-weight witnesses: weight equals sigma, and the expansion of the
/// witness polynomial uses only monomials of `L` and reproduces the word.
fn witness_check(checks: &mut Checks, points: &PointSet, l: &DefiningSet, delta: u64, designed: Option<u64>) -> Result<(), Failure> {
    let Some(d) = designed else {
        checks.push(Some(delta), "witness", Status::Skip, "empty code".into());
        return Ok(());
    };
    let spec = points.spec();
    let f = points.field();
    let mut count = 0;
    let mut ok = true;
    for a in l.members() {
        let s = footprint::sigma(spec, a).map_err(|e| Failure::Hypothesis(e.to_string()))?;
        if s != d {
            continue;
        }
        count += 1;
        let word = evalcode::min_weight_witness(points, a).map_err(eval_failure)?;
        let terms = evalcode::witness_polynomial(points, a).map_err(eval_failure)?;
        let mut acc = vec![FieldElement::ZERO; points.len()];
        for (b, c) in &terms {
            ok &= l.contains(b);
            let ev = points.evaluate_monomial(b).map_err(eval_failure)?;
            for (x, y) in acc.iter_mut().zip(ev) {
                *x = f.add(*x, f.mul(*c, y));
            }
        }
        ok &= acc == word && evalcode::hamming_weight(&word) as u64 == s;
    }
    checks.push(
        Some(delta),
        "witness",
        Status::of(ok),
        format!("witnesses={count} weight={d} in_code={ok}"),
    );
    Ok(())
}

fn orthogonality_check(checks: &mut Checks, points: &PointSet, delta: Option<u64>, left: &[Exponent]) -> Result<(), Failure> {
    let spec = points.spec();
    let f = points.field();
    let all: Vec<Exponent> = spec.exponents().collect();
    let evals: Vec<Vec<FieldElement>> = all
        .iter()
        .map(|a| points.evaluate_monomial(a))
        .collect::<Result<_, _>>()
        .map_err(eval_failure)?;
    let index = |a: &Exponent| all.binary_search(a).expect("exponent in Delta");
    let mut pairs = 0u64;
    let mut mismatches = 0u64;
    for a in left {
        let ea = &evals[index(a)];
        for (b, eb) in all.iter().zip(&evals) {
            pairs += 1;
            let zero = f.dot(ea, eb).map_err(|e| Failure::Hypothesis(e.to_string()))?.is_zero();
            let predicted = footprint::monomials_orthogonal(spec, a, b).map_err(|e| Failure::Hypothesis(e.to_string()))?;
            mismatches += u64::from(zero != predicted);
        }
    }
    checks.push(
        delta,
        "orthogonality",
        Status::of(mismatches == 0),
        format!("pairs={pairs} mismatches={mismatches}"),
    );
    Ok(())
}

fn verify_single(checks: &mut Checks, points: &PointSet, delta: u64, a: &VerifyArgs) -> Result<(), Failure> {
    let spec = points.spec();
    let n = points.len();
    let l = footprint::improved_defining_set(spec, delta).map_err(|e| Failure::Hypothesis(e.to_string()))?;
    let l_perp = footprint::dual_defining_set(spec, delta).map_err(|e| Failure::Hypothesis(e.to_string()))?;
    let code = EvalCode::new(points, &l).map_err(eval_failure)?;
    if let Some(path) = &a.dump {
        let mut buf = Vec::new();
        evalcode::write_matrix_dump(&mut buf, points.field().q(), code.generator())?;
        std::fs::write(path, buf)?;
    }
    let rank = code.rank();
    checks.push(Some(delta), "rank", Status::of(rank == l.len()), format!("rank={rank} size={}", l.len()));
    let dual = evalcode::verify_dual_identity(points, delta).map_err(eval_failure)?;
    checks.push(Some(delta), "dual_identity", Status::of(dual), format!("dual={dual} n={n}"));
    let left: Vec<Exponent> = if n <= 512 {
        spec.exponents().collect()
    } else {
        l_perp.members().to_vec()
    };
    orthogonality_check(checks, points, Some(delta), &left)?;
    let combinatorial = footprint::is_dual_containing(spec, delta).map_err(|e| Failure::Hypothesis(e.to_string()))?;
    let matrix = evalcode::dual_in_row_space(points, delta).map_err(eval_failure)?;
    checks.push(
        Some(delta),
        "dual_containing",
        Status::of(combinatorial == matrix),
        format!("combinatorial={combinatorial} matrix={matrix}"),
    );
    let designed = footprint::min_sigma_at_least(spec, delta).map_err(|e| Failure::Hypothesis(e.to_string()))?;
    distance_check(checks, &code, delta, designed)?;
    witness_check(checks, points, &l, delta, designed)
}

fn verify_sweep(checks: &mut Checks, points: &PointSet, range: Range) -> Result<(), Failure> {
    let spec = points.spec();
    let n = points.len();
    let sweep = evalcode::duality_sweep(points).map_err(eval_failure)?;
    checks.push(
        None,
        "orthogonality",
        Status::of(sweep.orthogonality_mismatches.is_empty()),
        format!("pairs={} mismatches={}", n * (n + 1) / 2, sweep.orthogonality_mismatches.len()),
    );
    checks.push(None, "full_rank", Status::of(sweep.full_rank == n), format!("rank={} n={n}", sweep.full_rank));
    for c in sweep.checks.iter().filter(|c| (range.lo..=range.hi).contains(&c.delta)) {
        let delta = c.delta;
        checks.push(Some(delta), "rank", Status::of(c.rank_g == c.l_size), format!("rank={} size={}", c.rank_g, c.l_size));
        let dual = c.dual_identity(n);
        checks.push(Some(delta), "dual_identity", Status::of(dual), format!("dual={dual} n={n}"));
        let combinatorial = footprint::is_dual_containing(spec, delta).map_err(|e| Failure::Hypothesis(e.to_string()))?;
        let matrix = c.dual_contained(n);
        checks.push(
            Some(delta),
            "dual_containing",
            Status::of(matrix == Some(combinatorial)),
            format!("combinatorial={combinatorial} matrix={}", matrix.map_or("-".into(), |m| m.to_string())),
        );
        let l = footprint::improved_defining_set(spec, delta).map_err(|e| Failure::Hypothesis(e.to_string()))?;
        let designed = footprint::min_sigma_at_least(spec, delta).map_err(|e| Failure::Hypothesis(e.to_string()))?;
        let q = points.field().q() as u64;
        let small = q.checked_pow(l.len() as u32).is_some_and(|t| t <= MAX_BRUTE_CODEWORDS);
        if small && !l.is_empty() {
            let code = EvalCode::new(points, &l).map_err(eval_failure)?;
            distance_check(checks, &code, delta, designed)?;
        } else if l.is_empty() {
            checks.push(Some(delta), "distance", Status::Skip, "empty code".into());
        } else {
            checks.push(
                Some(delta),
                "distance",
                Status::Skip,
                format!("q^k = {q}^{} exceeds {MAX_BRUTE_CODEWORDS}", l.len()),
            );
        }
        witness_check(checks, points, &l, delta, designed)?;
    }
    Ok(())
}

fn verify_combinatorial(checks: &mut Checks, spec: &ProductSpec, range: Range) -> Result<(), Failure> {
    let total: u64 = (1..=spec.n()).map(|s| footprint::tau(spec, s)).sum();
    checks.push(None, "tau_sum", Status::of(total == spec.n()), format!("sum={total} n={}", spec.n()));
    for delta in range.lo..=range.hi {
        let k = footprint::improved_dimension(spec, delta).map_err(|e| Failure::Hypothesis(e.to_string()))?;
        let kp = footprint::dual_dimension(spec, delta).map_err(|e| Failure::Hypothesis(e.to_string()))?;
        checks.push(Some(delta), "dimensions", Status::of(k + kp == spec.n()), format!("k={k} k_perp={kp}"));
        let dc = footprint::is_dual_containing(spec, delta).map_err(|e| Failure::Hypothesis(e.to_string()))?;
        checks.push(Some(delta), "dual_containing", Status::Info, format!("combinatorial={dc}"));
    }
    Ok(())
}

pub(super) fn verify(a: &VerifyArgs, _err: &mut dyn Write) -> Outcome {
    let spec = build_spec(&a.spec).map_err(fail)?;
    let range = a.delta.unwrap_or(Range { lo: 2, hi: spec.n() + 1 });
    delta_in_range(&spec, range).map_err(fail)?;
    if a.dump.is_some() && range.single().is_none() {
        return Err(fail(Failure::Usage("--dump needs a single --delta".into())));
    }
    let mut checks = Checks(Vec::new());
    match a.level {
        Level::None => verify_combinatorial(&mut checks, &spec, range).map_err(fail)?,
        Level::Matrix => {
            let cap = matrix_cap();
            let points = PointSet::with_cap(&spec, cap).map_err(|e| fail(eval_failure(e)))?;
            match range.single() {
                Some(delta) => verify_single(&mut checks, &points, delta, a).map_err(fail)?,
                None => verify_sweep(&mut checks, &points, range).map_err(fail)?,
            }
        }
    }
    let failed = checks.0.iter().any(|c| c.status == Status::Fail);
    let rendered = match a.output.format {
        Format::Text => {
            let mut s = format!("# {}\n", header(&spec));
            for c in &checks.0 {
                let delta = c.delta.map_or(String::new(), |d| format!(" delta={d}"));
                writeln!(s, "{}{delta} {}: {}", c.status.label(), c.check, c.detail).unwrap();
            }
            s
        }
        Format::Csv => csv_string(&checks.0).map_err(fail)?,
        Format::Json => ndjson(&checks.0),
    };
    if failed {
        return Err((Some(rendered), Failure::Verification));
    }
    Ok(rendered)
}
