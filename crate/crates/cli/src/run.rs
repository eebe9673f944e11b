use std::path::PathBuf;

use cupprv::lrcone;
use cupprv::reduction::{self, GLTriple, ReductionOutcome};
use cupprv::rootsys::{RootSystemTables, CACHE_ENV_VAR};
use cupprv::weylcomb::{self, TripleRecord};
use cupprv::{prv, regression, repthy, schubert};
use cupprv::{GlWeight, RootSystem, RootType, Triple, Weight, WeylGroup};
use serde_json::{json, Value};

use crate::args::{Command, PairArgs, Scan, SystemArgs, TripleWords};
use crate::output::{to_value, Output, Table};
use crate::CliError;

type Res<T> = std::result::Result<T, CliError>;

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

fn build(t: RootType, n: usize, cache_dir: Option<PathBuf>) -> Res<(RootSystem, Option<PathBuf>)> {
    let dir = cache_dir.or_else(|| std::env::var_os(CACHE_ENV_VAR).map(PathBuf::from));
    match dir {
        Some(d) => {
            let (rs, path) = RootSystem::load_or_build(&d, t, n)?;
            Ok((rs, Some(path)))
        }
        None => Ok((RootSystem::new(t, n)?, None)),
    }
}

fn system(s: &SystemArgs) -> Res<RootSystem> {
    match (s.root_type, s.rank) {
        (Some(t), Some(n)) => Ok(build(t, n, None)?.0),
        _ => Err(usage("--type and --rank are required")),
    }
}

#[derive(Clone, Copy)]
enum Part {
    Lambda,
    Mu,
    Sum,
}

/// A resolved pair of weights, remembering GL totals for display.
struct Pair {
    rs: RootSystem,
    lam: Weight,
    mu: Weight,
    totals: Option<(i64, i64)>,
}

impl Pair {
    fn gl(&self, w: &Weight, part: Part) -> Option<GlWeight> {
        let (a, b) = self.totals?;
        let total = match part {
            Part::Lambda => a,
            Part::Mu => b,
            Part::Sum => a + b,
        };
        GlWeight::from_weight(w, total).ok()
    }

    fn show(&self, w: &Weight) -> String {
        self.show_part(w, Part::Sum)
    }

    fn show_part(&self, w: &Weight, part: Part) -> String {
        self.gl(w, part)
            .map_or_else(|| w.to_string(), |g| g.to_string())
    }

    fn value(&self, w: &Weight) -> Value {
        self.value_part(w, Part::Sum)
    }

    fn value_part(&self, w: &Weight, part: Part) -> Value {
        self.gl(w, part)
            .map_or_else(|| to_value(w), |g| to_value(&g))
    }

    fn header(&self) -> Value {
        let mut h = json!({"root_system": self.rs.label(), "lambda": self.lam, "mu": self.mu});
        if let Some((a, b)) = self.totals {
            h["gl_lambda"] = to_value(&GlWeight::from_weight(&self.lam, a).expect("round trip"));
            h["gl_mu"] = to_value(&GlWeight::from_weight(&self.mu, b).expect("round trip"));
        }
        h
    }
}

type Resolved = (RootSystem, Weight, Option<Weight>, Option<(i64, i64)>);

fn gl_or_plain(sys: &SystemArgs, gl: bool, lam: &Weight, mu: Option<&Weight>) -> Res<Resolved> {
    if gl {
        if sys.root_type.is_some_and(|t| t != RootType::A) {
            return Err(usage("--gl implies type A"));
        }
        let len = lam.rank();
        if len < 2 || mu.is_some_and(|m| m.rank() != len) {
            return Err(usage("GL tuples must have equal length at least 2"));
        }
        let rs = build(RootType::A, len - 1, None)?.0;
        let l = GlWeight(lam.0.clone());
        let m = mu.map(|m| GlWeight(m.0.clone()));
        let totals = (l.total(), m.as_ref().map_or(0, GlWeight::total));
        Ok((rs, l.to_weight(), m.map(|m| m.to_weight()), Some(totals)))
    } else {
        let rs = system(sys)?;
        rs.check_rank(lam)?;
        if let Some(m) = mu {
            rs.check_rank(m)?;
        }
        Ok((rs, lam.clone(), mu.cloned(), None))
    }
}

fn pair(p: &PairArgs) -> Res<Pair> {
    let (rs, lam, mu, totals) = gl_or_plain(&p.system, p.gl, &p.lam, Some(&p.mu))?;
    Ok(Pair {
        rs,
        lam,
        mu: mu.expect("mu given"),
        totals,
    })
}

fn words(g: &WeylGroup, t: &Triple) -> Value {
    json!({"w1": g.word_one_based(t.w1), "w2": g.word_one_based(t.w2), "w3": g.word_one_based(t.w3)})
}

fn word_str(w: &[u8]) -> String {
    if w.is_empty() {
        "e".into()
    } else {
        w.iter()
            .map(ToString::to_string)
            .collect::<Vec<_>>()
            .join(",")
    }
}

fn yn(b: bool) -> String {
    if b { "yes" } else { "no" }.into()
}

fn parse_word(g: &WeylGroup, s: &str) -> Res<cupprv::WeylElement> {
    let s = s.trim();
    if s.is_empty() || s == "e" {
        return Ok(g.identity());
    }
    let mut letters = Vec::new();
    for part in s
        .split(|c: char| c == ',' || c.is_whitespace())
        .filter(|p| !p.is_empty())
    {
        let i: usize = part
            .parse()
            .map_err(|_| usage(format!("bad letter {part:?} in word {s:?}")))?;
        if i == 0 || i > g.rank() {
            return Err(usage(format!("letter {i} out of range 1..={}", g.rank())));
        }
        letters.push((i - 1) as u8);
    }
    Ok(g.from_word(&letters))
}

/// One-line notation, 0- or 1-based (detected from the entries).
fn parse_perm(s: &str) -> Res<Vec<usize>> {
    let v: Vec<usize> = s
        .split(|c: char| c == ',' || c.is_whitespace())
        .filter(|p| !p.is_empty())
        .map(|p| {
            p.parse()
                .map_err(|_| usage(format!("bad permutation entry {p:?}")))
        })
        .collect::<Res<_>>()?;
    let mut sorted = v.clone();
    sorted.sort_unstable();
    if sorted.iter().copied().eq(1..=v.len()) {
        Ok(v.into_iter().map(|x| x - 1).collect())
    } else {
        Ok(v)
    }
}

pub fn run(cmd: &Command) -> Res<(Output, bool)> {
    let out = match cmd {
        Command::Rootsys {
            system: s,
            cache_dir,
        } => {
            let (t, n) = match (s.root_type, s.rank) {
                (Some(t), Some(n)) => (t, n),
                _ => return Err(usage("--type and --rank are required")),
            };
            let (rs, path) = build(t, n, cache_dir.clone())?;
            let tables = RootSystemTables::from_root_system(&rs);
            let order = rs.weyl().order();
            let mut table = Table::fields(vec![
                ("root_system", rs.label()),
                ("weyl_order", order.to_string()),
                ("positive_roots", rs.num_positive_roots().to_string()),
                ("rho", rs.rho().to_string()),
            ]);
            for (i, row) in rs.cartan().iter().enumerate() {
                table.row(vec![format!("cartan[{i}]"), format!("{row:?}")]);
            }
            if let Some(p) = &path {
                table.row(vec!["cache_file".into(), p.display().to_string()]);
            }
            Output::Report {
                command: "rootsys",
                result: json!({
                    "tables": to_value(&tables),
                    "weyl_order": order,
                    "cache_file": path.map(|p| p.display().to_string()),
                }),
                table,
            }
        }
        Command::Decompose {
            system: s,
            gl,
            lam,
            mu,
        } => {
            let (rs, lam, mu, totals) = gl_or_plain(s, *gl, lam, mu.as_ref())?;
            let p = Pair {
                lam: lam.clone(),
                mu: mu.clone().unwrap_or_else(|| Weight::zero(rs.rank())),
                totals,
                rs,
            };
            match mu {
                Some(mu) => {
                    let d = repthy::tensor_decompose(&p.rs, &lam, &mu)?;
                    let mut rows = d.sorted_entries(&p.rs);
                    rows.reverse();
                    let mut table = Table::new(&["nu'", "mult", "dim"]).titled(format!(
                        "{} V{} (x) V{}",
                        p.rs.label(),
                        p.show(&lam),
                        p.show(&mu)
                    ));
                    let mut comps = Vec::new();
                    for (nu, m) in &rows {
                        let dim = p.rs.weyl_dimension(nu)?;
                        table.row(vec![p.show(nu), m.to_string(), dim.to_string()]);
                        comps.push(json!({"nu": p.value(nu), "mult": m, "dim": dim.to_string()}));
                    }
                    let mut result = p.header();
                    result["components"] = Value::Array(comps);
                    result["total_dimension"] = json!(d.total_dimension(&p.rs).to_string());
                    Output::Report {
                        command: "decompose",
                        result,
                        table,
                    }
                }
                None => {
                    let m = repthy::weight_multiplicities(&p.rs, &lam)?;
                    let mut table = Table::new(&["weight", "mult"]).titled(format!(
                        "{} weights of V{}",
                        p.rs.label(),
                        lam
                    ));
                    let mut ws = Vec::new();
                    for (w, k) in m.iter().rev() {
                        table.row(vec![w.to_string(), k.to_string()]);
                        ws.push(json!({"weight": w, "mult": k}));
                    }
                    let result = json!({
                        "root_system": p.rs.label(), "lambda": lam,
                        "dimension": p.rs.weyl_dimension(&lam)?.to_string(), "dominant_weights": ws,
                    });
                    Output::Report {
                        command: "decompose",
                        result,
                        table,
                    }
                }
            }
        }
        Command::Prv { pair: pa, k_max } => {
            let p = pair(pa)?;
            let g = p.rs.weyl();
            let entries = prv::generalized_prv(&p.rs, &p.lam, &p.mu)?;
            let ct = prv::component_table(&p.rs, &p.lam, &p.mu, *k_max)?;
            let mut table = Table::new(&["nu'", "mult", "gen-PRV?", "cohomological?", "stable?"])
                .titled(format!(
                    "{} V{} (x) V{}, stability checked for k <= {}",
                    p.rs.label(),
                    p.show(&p.lam),
                    p.show(&p.mu),
                    ct.k_max
                ));
            for r in &ct.rows {
                table.row(vec![
                    p.show(&r.nu),
                    r.mult.to_string(),
                    yn(r.generalized_prv),
                    yn(r.cohomological),
                    yn(r.stable),
                ]);
            }
            let mut result = p.header();
            result["k_max"] = json!(ct.k_max);
            result["generalized_prv"] = Value::Array(
                entries.iter().map(|e| json!({"w": g.word_one_based(e.w), "nu": p.value(&e.nu), "mult": e.mult})).collect(),
            );
            result["components"] = Value::Array(
                ct.rows
                    .iter()
                    .map(|r| {
                        json!({"nu": p.value(&r.nu), "mult": r.mult, "generalized_prv": r.generalized_prv,
                               "cohomological": r.cohomological, "stable": r.stable})
                    })
                    .collect(),
            );
            result["counts"] = to_value(&ct.counts);
            Output::Report {
                command: "prv",
                result,
                table,
            }
        }
        Command::Cohomological { pair: pa } => {
            let p = pair(pa)?;
            let g = p.rs.weyl();
            let ws = prv::cohomological_components(&p.rs, &p.lam, &p.mu)?;
            let counts = prv::count_cohomological(&p.rs, &p.lam, &p.mu)?;
            let distinct = prv::distinct_components(&ws);
            let mut table = Table::new(&["w1", "w2", "w3", "q", "nu'"]).titled(format!(
                "{} V{} (x) V{}: {} distinct, {} by w",
                p.rs.label(),
                p.show(&p.lam),
                p.show(&p.mu),
                counts.distinct,
                counts.by_w_triple
            ));
            for x in &ws {
                let t = x.triple;
                table.row(vec![
                    word_str(&g.word_one_based(t.w1)),
                    word_str(&g.word_one_based(t.w2)),
                    word_str(&g.word_one_based(t.w3)),
                    x.q.to_string(),
                    p.show(&x.nu_prime),
                ]);
            }
            let mut result = p.header();
            result["distinct"] = Value::Array(distinct.iter().map(|w| p.value(w)).collect());
            result["counts"] = to_value(&counts);
            result["witnesses"] = Value::Array(
                ws.iter()
                    .map(|x| {
                        let mut v = words(g, &x.triple);
                        v["lambda_raw"] = p.value_part(&x.lambda_raw, Part::Lambda);
                        v["mu_raw"] = p.value_part(&x.mu_raw, Part::Mu);
                        v["nu_prime"] = p.value(&x.nu_prime);
                        v["q"] = json!(x.q);
                        v
                    })
                    .collect(),
            );
            Output::Report {
                command: "cohomological",
                result,
                table,
            }
        }
        Command::Theorem1 { pair: pa } => {
            let p = pair(pa)?;
            let g = p.rs.weyl();
            let v = prv::theorem1_check(&p.rs, &p.lam, &p.mu)?;
            let opt = |w: &Option<Weight>, part| {
                w.as_ref().map_or(Value::Null, |w| p.value_part(w, part))
            };
            let result = json!({
                "root_system": p.rs.label(),
                "lambda": p.lam, "mu": p.mu,
                "lambda_regular": v.lambda_regular, "mu_regular": v.mu_regular, "sum_regular": v.sum_regular,
                "length_lambda": v.length_lambda, "length_mu": v.length_mu, "length_sum": v.length_sum,
                "lengths_add": v.lengths_add,
                "inversion_sets_partition": v.partition,
                "surjective": v.surjective,
                "triple": v.triple.as_ref().map_or(Value::Null, |t| words(g, t)),
                "q": v.q,
                "lambda_prime": opt(&v.lambda_prime, Part::Lambda),
                "mu_prime": opt(&v.mu_prime, Part::Mu),
                "nu_prime": opt(&v.nu_prime, Part::Sum),
            });
            let show_opt = |w: &Option<Weight>, part| {
                w.as_ref().map_or("-".to_string(), |w| p.show_part(w, part))
            };
            let show_len = |l: Option<usize>| l.map_or("-".into(), |x| x.to_string());
            let table = Table::fields(vec![
                (
                    "regular",
                    format!("{} {} {}", v.lambda_regular, v.mu_regular, v.sum_regular),
                ),
                (
                    "lengths",
                    format!(
                        "{} {} {}",
                        show_len(v.length_lambda),
                        show_len(v.length_mu),
                        show_len(v.length_sum)
                    ),
                ),
                ("lengths_add", v.lengths_add.to_string()),
                ("inversion_sets_partition", v.partition.to_string()),
                ("surjective", v.surjective.to_string()),
                ("lambda'", show_opt(&v.lambda_prime, Part::Lambda)),
                ("mu'", show_opt(&v.mu_prime, Part::Mu)),
                ("nu'", show_opt(&v.nu_prime, Part::Sum)),
            ]);
            Output::Report {
                command: "theorem1",
                result,
                table,
            }
        }
        Command::Triples {
            system: s,
            nontrivial,
        } => {
            let rs = system(s)?;
            let g = rs.weyl();
            let ts = weylcomb::enumerate_admissible_triples(&rs, *nontrivial);
            let mut table = Table::new(&["w1", "w2", "w3", "lengths"]);
            let mut lines = Vec::new();
            for t in &ts {
                let r = TripleRecord::new(g, t);
                table.row(vec![
                    word_str(&r.w1),
                    word_str(&r.w2),
                    word_str(&r.w3),
                    format!("{:?}", r.len),
                ]);
                lines.push(to_value(&r));
            }
            Output::Lines {
                command: "triples",
                header: json!({"root_system": rs.label(), "nontrivial_only": nontrivial, "count": ts.len()}),
                lines,
                table,
            }
        }
        Command::Catalan { n } => {
            let count = weylcomb::catalan_count(*n)?;
            let ordered = weylcomb::ordered_partition_count(*n)?;
            Output::Report {
                command: "catalan",
                result: json!({"n": n, "count": count, "ordered": ordered}),
                table: Table::fields(vec![
                    ("n", n.to_string()),
                    ("count", count.to_string()),
                    ("ordered", ordered.to_string()),
                ]),
            }
        }
        Command::Reduce {
            lam,
            mu,
            nu,
            weak,
            cap,
        } => {
            let t = GLTriple::new(lam.clone(), mu.clone(), nu.clone())?;
            let c = t.lr_coefficient();
            if *weak {
                let w = reduction::weak_reduction_patterns(&t, *cap);
                let mut table = Table::new(&["chain"]).titled(format!(
                    "{} weak patterns, truncated = {}",
                    w.chains.len(),
                    w.truncated
                ));
                for ch in &w.chains {
                    table.row(vec![ch
                        .iter()
                        .map(|(i, j, k)| format!("({i},{j},{k})"))
                        .collect::<Vec<_>>()
                        .join(" ")]);
                }
                Output::Report {
                    command: "reduce",
                    result: json!({"triple": t, "lr_coefficient": c, "weak": true, "chains": w.chains, "truncated": w.truncated, "cap": cap}),
                    table,
                }
            } else {
                let outcome = reduction::reduction_pattern(&t)?;
                let mut table = Table::new(&["level", "i", "j", "k", "lam", "mu", "nu"]);
                let (cohomological, records) = match &outcome {
                    ReductionOutcome::Pattern(chain) => (true, reduction::chain_records(chain)),
                    ReductionOutcome::NotCohomological => (false, Vec::new()),
                };
                table.title = Some(if cohomological {
                    format!("reduction pattern, coefficient {c}")
                } else {
                    format!("not cohomological, coefficient {c}")
                });
                for r in &records {
                    table.row(vec![
                        r.level.to_string(),
                        r.i.to_string(),
                        r.j.to_string(),
                        r.k.to_string(),
                        r.lam.to_string(),
                        r.mu.to_string(),
                        r.nu.to_string(),
                    ]);
                }
                Output::Report {
                    command: "reduce",
                    result: json!({"triple": t, "lr_coefficient": c, "cohomological": cohomological, "chain": records}),
                    table,
                }
            }
        }
        Command::SchubertD { w1, w2, w3 } => {
            let (a, b, c) = (parse_perm(w1)?, parse_perm(w2)?, parse_perm(w3)?);
            let d = schubert::d_coefficient(&a, &b, &c)?;
            Output::Report {
                command: "schubert-d",
                result: json!({"w1": a, "w2": b, "w3": c, "d": d}),
                table: Table::fields(vec![("d", d.to_string())]),
            }
        }
        Command::Scans { scan } => run_scan(scan)?,
        Command::LrSlice { pair: pa, k_max } => {
            let p = pair(pa)?;
            let s = lrcone::lr_slice(&p.rs, &p.lam, &p.mu, *k_max)?;
            let mut table = Table::new(&["vertex"]).titled(format!(
                "{} V{} (x) V{}: {} support points, k <= {}",
                p.rs.label(),
                p.lam,
                p.mu,
                s.support.len(),
                s.k_max
            ));
            for v in &s.hull_vertices {
                table.row(vec![v.to_string()]);
            }
            Output::Report {
                command: "lr-slice",
                result: to_value(&s),
                table,
            }
        }
        Command::ConeDim {
            system: s,
            words: tw,
            all,
        } => {
            let rs = system(s)?;
            let g = rs.weyl();
            let triples: Vec<Triple> = if *all {
                weylcomb::admissible_triples(&rs).to_vec()
            } else {
                vec![triple_from_words(g, tw)?]
            };
            let mut table = Table::new(&["w1", "w2", "w3", "dim", "strictly dominant point"]);
            let mut rows = Vec::new();
            for t in &triples {
                let c = lrcone::cone_dimension(&rs, t)?;
                table.row(vec![
                    word_str(&g.word_one_based(t.w1)),
                    word_str(&g.word_one_based(t.w2)),
                    word_str(&g.word_one_based(t.w3)),
                    c.dim.to_string(),
                    yn(c.has_strictly_dominant_point()),
                ]);
                let mut v = words(g, t);
                v["dim"] = json!(c.dim);
                v["inequality_matrix"] = json!(c.inequality_matrix);
                v["implicit_equalities"] = json!(c.implicit_equalities);
                v["strictly_dominant"] = json!({
                    "lambda": c.strictly_dominant_lambda, "mu": c.strictly_dominant_mu, "nu": c.strictly_dominant_nu,
                });
                rows.push(v);
            }
            Output::Report {
                command: "cone-dim",
                result: json!({"root_system": rs.label(), "cones": rows}),
                table,
            }
        }
        Command::Figure { pair: pa, k_max } => {
            let p = pair(pa)?;
            Output::Svg(lrcone::figure_svg(&p.rs, &p.lam, &p.mu, *k_max)?)
        }
        Command::VerifyPaper => {
            let checks = regression::verify_paper()?;
            let ok = checks.iter().all(|c| c.passed);
            let mut table = Table::new(&["status", "check", "detail"]);
            for c in &checks {
                table.row(vec![
                    if c.passed { "PASS" } else { "FAIL" }.into(),
                    c.name.clone(),
                    c.detail.clone(),
                ]);
            }
            return Ok((
                Output::Report {
                    command: "verify-paper",
                    result: json!({"all_passed": ok, "checks": checks}),
                    table,
                },
                ok,
            ));
        }
    };
    Ok((out, true))
}

fn triple_from_words(g: &WeylGroup, tw: &TripleWords) -> Res<Triple> {
    match (&tw.w1, &tw.w2, &tw.w3) {
        (Some(a), Some(b), Some(c)) => Ok(Triple::new(
            parse_word(g, a)?,
            parse_word(g, b)?,
            parse_word(g, c)?,
        )),
        _ => Err(usage(
            "--w1, --w2 and --w3 are required unless --all is given",
        )),
    }
}

fn letters_to_rank(letters: usize, long: bool) -> Res<usize> {
    if letters >= 6 && !long {
        return Err(usage("six or more letters require --long"));
    }
    if letters < 2 {
        return Err(usage("at least two letters are required"));
    }
    Ok(letters - 1)
}

fn counts_table(title: String, c: &schubert::ScanCounts) -> Table {
    let mut t = Table::fields(vec![
        ("triples_checked", c.triples_checked.to_string()),
        ("d_equal_one", c.d_equal_one.to_string()),
        ("violations", c.violations.len().to_string()),
    ])
    .titled(title);
    for v in &c.violations {
        t.row(vec!["violation".into(), format!("{v:?}")]);
    }
    t
}

fn run_scan(scan: &Scan) -> Res<Output> {
    Ok(match scan {
        Scan::Claim0 { letters, long } | Scan::Claim10 { letters, long } => {
            let r = schubert::claim_scans(letters_to_rank(*letters, *long)?)?;
            let (name, part, what) = match scan {
                Scan::Claim0 { .. } => ("claim0", &r.claim0, "admissible triples with d = 1"),
                _ => (
                    "claim10",
                    &r.claim10,
                    "additive triples with d != 0 that are admissible",
                ),
            };
            Output::Report {
                command: if name == "claim0" {
                    "scans claim0"
                } else {
                    "scans claim10"
                },
                result: json!({
                    "letters": r.letters, "scope": r.scope,
                    "triples_checked": part.triples_checked, "d_equal_one": part.d_equal_one, "violations": part.violations,
                }),
                table: counts_table(format!("S{}: {what}", r.letters), part),
            }
        }
        Scan::Q0 { system: s, long } => {
            let rs = system(s)?;
            letters_to_rank(rs.rank() + 1, *long)?;
            let r = schubert::question0_scan(&rs)?;
            let mut table = counts_table(format!("{}: {}", rs.label(), r.scope), &r.claim0);
            table
                .rows
                .extend(counts_table(String::new(), &r.claim10).rows);
            Output::Report {
                command: "scans q0",
                result: to_value(&r),
                table,
            }
        }
        Scan::Q5 { length, max_entry } => {
            let r = reduction::question5_scan(*length, *max_entry)?;
            let table = Table::fields(vec![
                ("triples_checked", r.triples_checked.to_string()),
                (
                    "weak_and_cohomological",
                    r.weak_and_cohomological.to_string(),
                ),
                (
                    "weak_not_cohomological",
                    r.weak_not_cohomological.len().to_string(),
                ),
                (
                    "cohomological_without_weak",
                    r.cohomological_without_weak.len().to_string(),
                ),
                (
                    "weak_pattern_coefficient_not_one",
                    r.weak_pattern_coefficient_not_one.len().to_string(),
                ),
                (
                    "strict_shortcut_failures",
                    r.strict_shortcut_failures.len().to_string(),
                ),
            ])
            .titled(format!("GL({length}) tuples with entries <= {max_entry}"));
            Output::Report {
                command: "scans q5",
                result: to_value(&r),
                table,
            }
        }
        Scan::Q7 { pair: pa, k_max } => {
            let p = pair(pa)?;
            let r = lrcone::claim6_report(&p.rs, &p.lam, &p.mu, *k_max)?;
            let mut table = Table::new(&["vertex", "cohomological?", "gen-PRV?"]).titled(format!(
                "{} V{} (x) V{}: cohomological components are vertices = {}",
                p.rs.label(),
                p.lam,
                p.mu,
                r.all_cohomological_are_vertices
            ));
            for v in &r.vertices {
                table.row(vec![
                    v.vertex.to_string(),
                    yn(v.cohomological),
                    yn(v.generalized_prv),
                ]);
            }
            Output::Report {
                command: "scans q7",
                result: to_value(&r),
                table,
            }
        }
        Scan::Q8 {
            system: s,
            max_entry,
            k_max,
        } => {
            let rs = system(s)?;
            let pairs = lrcone::grid_pairs(rs.rank(), *max_entry);
            let r = lrcone::question8_grid(&rs, &pairs, *k_max)?;
            let mut table = Table::new(&[
                "lambda'",
                "mu'",
                "vertices",
                "cohomological",
                "by w",
                "cohomological vertices",
            ])
            .titled(format!(
                "{}: |W| = {}, 2^n = {}",
                r.root_system, r.weyl_order, r.lower_bound
            ));
            for row in &r.rows {
                table.row(vec![
                    row.lambda.to_string(),
                    row.mu.to_string(),
                    row.vertices.to_string(),
                    row.cohomological_distinct.to_string(),
                    row.cohomological_by_w.to_string(),
                    row.vertices_cohomological.to_string(),
                ]);
            }
            Output::Report {
                command: "scans q8",
                result: to_value(&r),
                table,
            }
        }
        Scan::Q22 { system: s, bound } => {
            let rs = system(s)?;
            let r = prv::question22_scan(&rs, *bound)?;
            let mut table = Table::fields(vec![
                ("pairs_checked", r.pairs_checked.to_string()),
                ("confirmations", r.confirmations.to_string()),
                ("surjective", r.surjective.to_string()),
                ("nonzero_coefficient", r.nonzero_coefficient.to_string()),
                ("counterexamples", r.counterexamples.len().to_string()),
            ])
            .titled(format!(
                "{}: coordinates in [-{bound}, {bound}]",
                r.root_system
            ));
            for (l, m) in &r.counterexamples {
                table.row(vec!["counterexample".into(), format!("{l} {m}")]);
            }
            Output::Report {
                command: "scans q22",
                result: to_value(&r),
                table,
            }
        }
        Scan::Conjecture { pair: pa, k_max } => {
            let p = pair(pa)?;
            let r = prv::conjecture_scan(&p.rs, &p.lam, &p.mu, *k_max)?;
            let mut table = Table::new(&["w", "nu'", "c_1..c_K", "stable?", "cohomological?"])
                .titled(format!(
                    "{} V{} (x) V{}, K = {}: subset holds = {}, consistent up to K = {}",
                    r.root_system,
                    p.lam,
                    p.mu,
                    r.k_max,
                    r.theorem2_direction_holds,
                    r.conjecture_consistent_up_to_k
                ));
            for row in &r.rows {
                table.row(vec![
                    word_str(&row.w),
                    p.show(&row.nu),
                    format!("{:?}", row.mults),
                    yn(row.stable_mult_one),
                    yn(row.cohomological),
                ]);
            }
            Output::Report {
                command: "scans conjecture",
                result: to_value(&r),
                table,
            }
        }
    })
}
