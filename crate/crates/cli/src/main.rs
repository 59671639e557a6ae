mod report;

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use quartic_core::algebra::parse_rational;
use quartic_core::cases::{param_k, run_case, ParamArg, ParamFamily};
use quartic_core::classify::{default_rank_facts, external_rank_facts, load_rank_facts, sweep, RankFact};
use quartic_core::ffcheck::count_curve_points;
use quartic_core::localsolve::{qp_soluble, LocalStatus, SuperellipticModel, DEFAULT_DEPTH_CAP};
use quartic_core::search::search_ck;
use quartic_core::{classify, CurveIndex, Error, HeightBound, QuarticCurve, Rational, Status};

use report::{to_value, Report};

#[derive(Parser)]
#[command(
    name = "quartic",
    version,
    about = "Rational points on x^3 z + x^2 y^2 + y^3 z = k z^4"
)]
struct Cli {
    /// Emit a JSON report instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute C_k(Q) from a rank-zero fact about one of the quotient curves.
    Classify {
        #[arg(long, allow_hyphen_values = true)]
        k: i64,
        /// Rank facts (TSV: k, i, rank, source). Defaults to the bundled facts.
        #[arg(long)]
        ranks: Option<PathBuf>,
        #[arg(long, default_value_t = HeightBound::DEFAULT.get())]
        height: u64,
    },
    /// Classify every nonzero k in a range and summarize.
    Sweep {
        #[arg(long, allow_hyphen_values = true)]
        from: i64,
        #[arg(long, allow_hyphen_values = true)]
        to: i64,
        #[arg(long)]
        ranks: Option<PathBuf>,
        #[arg(long, default_value_t = HeightBound::DEFAULT.get())]
        height: u64,
    },
    /// Run one of the six torsion cases.
    Case {
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=6))]
        n: u8,
    },
    /// Search C_k for points of bounded height.
    Search {
        #[arg(long, allow_hyphen_values = true)]
        k: String,
        #[arg(long, default_value_t = HeightBound::DEFAULT.get())]
        height: u64,
    },
    /// Torsion subgroup of E_{i,k}.
    Torsion {
        #[arg(long, value_enum)]
        curve: Curve,
        #[arg(long, allow_hyphen_values = true)]
        k: String,
    },
    /// p-adic solubility of c y^e = f(t).
    Localsolve {
        #[arg(long, allow_hyphen_values = true)]
        c: i64,
        #[arg(long)]
        e: u32,
        /// Coefficients of f, constant term first, comma separated.
        #[arg(long, allow_hyphen_values = true, value_delimiter = ',')]
        f: Vec<i64>,
        #[arg(long)]
        p: u64,
        #[arg(long, default_value_t = DEFAULT_DEPTH_CAP)]
        depth: u32,
    },
    /// Check #C_k(F_p) = p + 1 - a1 - a2 - a3 for good primes up to a bound.
    Ffcheck {
        #[arg(long, allow_hyphen_values = true)]
        k: i64,
        #[arg(long, default_value_t = 50)]
        pmax: u64,
    },
    /// Evaluate a parametrized family of k values.
    Param {
        #[arg(long)]
        family: ParamFamily,
        /// A rational `a/b`, or a point `x,y` for d14.
        #[arg(long, allow_hyphen_values = true)]
        arg: String,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Curve {
    E1,
    E2,
    E3,
}

impl From<Curve> for CurveIndex {
    fn from(c: Curve) -> Self {
        match c {
            Curve::E1 => CurveIndex::E1,
            Curve::E2 => CurveIndex::E2,
            Curve::E3 => CurveIndex::E3,
        }
    }
}

fn rational(s: &str) -> Result<Rational, Error> {
    parse_rational(s).ok_or_else(|| Error::Domain(format!("cannot parse {s:?} as a rational")))
}

fn facts(path: &Option<PathBuf>) -> Result<(Vec<RankFact>, String), Error> {
    Ok(match path {
        Some(p) => (load_rank_facts(p)?, p.display().to_string()),
        None => {
            let mut v = default_rank_facts();
            v.extend(external_rank_facts());
            (v, "bundled".into())
        }
    })
}

/// The report plus the text rendering.
fn run(cmd: &Command, started: Instant) -> Result<(Report, String), Error> {
    let mut text = String::new();
    let r = match cmd {
        Command::Classify { k, ranks, height } => {
            let (facts, origin) = facts(ranks)?;
            let res = classify(*k, &facts, HeightBound::new(*height)?)?;
            let mut r = Report::new("classify", json!({"k": k, "ranks": origin, "height": height}), started);
            r.ok = res.status == Status::Classified;
            r.provenance.computed = res.certificate.fibers.len();
            r.provenance.trusted = res.certificate.facts_used.iter().map(|f| f.to_string()).collect();
            text += &format!("k = {k}: {:?}\n", res.status);
            if res.status == Status::Classified {
                text += &format!("branch {}\n", res.branch);
            }
            for f in &res.certificate.facts_used {
                text += &format!("using {f}\n");
            }
            for f in &res.certificate.refuted {
                text += &format!("refuted {} by {:?}\n", f.fact, f.check);
            }
            for (i, t) in &res.certificate.torsion {
                text += &format!("{i}({k}) torsion {t}\n");
            }
            text += &format!("points ({}):\n", res.points.len());
            for p in &res.points {
                text += &format!("  {p}\n");
            }
            r.certificates = to_value(&res.certificate);
            r.results = json!({
                "status": to_value(&res.status),
                "branch": res.branch.number(),
                "points": to_value(&res.points),
            });
            r
        }
        Command::Sweep {
            from,
            to,
            ranks,
            height,
        } => {
            let (facts, origin) = facts(ranks)?;
            let (results, summary) = sweep(*from, *to, &facts, HeightBound::new(*height)?)?;
            let mut r = Report::new(
                "sweep",
                json!({"from": from, "to": to, "ranks": origin, "height": height}),
                started,
            );
            text += "       k  status           branch  points\n";
            let mut rows = Vec::new();
            for c in &results {
                let branch = if c.status == Status::Classified {
                    c.branch.number().to_string()
                } else {
                    "-".into()
                };
                text += &format!(
                    "{:>8}  {:<15}  {:>6}  {}\n",
                    c.k,
                    format!("{:?}", c.status),
                    branch,
                    c.points.len()
                );
                rows.push(json!({
                    "k": c.k,
                    "status": to_value(&c.status),
                    "branch": c.branch.number(),
                    "points": to_value(&c.points),
                }));
            }
            text += &format!(
                "{} of {} classified, {} need a rank fact, {} refuted\n",
                summary.classified, summary.total, summary.needs_rank_fact, summary.refuted
            );
            r.provenance.computed = summary.classified;
            r.provenance.trusted = vec![format!("rank facts from {origin}")];
            r.results = json!({"summary": to_value(&summary), "rows": rows});
            r
        }
        Command::Case { n } => {
            let reports = run_case(*n)?;
            let mut r = Report::new("case", json!({"n": n}), started);
            for c in &reports {
                text += &format!("case {} ({}), target {:?}\n", c.case_id, c.label, c.target);
                let ks: Vec<String> = c.integral_k_set.iter().map(|k| k.to_string()).collect();
                text += &format!("  integral k: {{{}}}\n", ks.join(", "));
                if !c.rational_extras.is_empty() {
                    let ks: Vec<String> = c.rational_extras.iter().map(|k| k.to_string()).collect();
                    text += &format!("  other rational k: {{{}}}\n", ks.join(", "));
                }
                for cert in &c.certificates {
                    let tag = if cert.is_imported() {
                        "imported"
                    } else if cert.holds() {
                        "ok"
                    } else {
                        "FAILED"
                    };
                    text += &format!("  [{tag}] {}\n", summary_line(cert));
                }
                r.provenance.imported += c.imported().count();
                r.provenance.computed += c.certificates.len() - c.imported().count();
                r.ok &= c.all_hold();
            }
            r.certificates = json!(reports.iter().map(|c| to_value(&c.certificates)).collect::<Vec<_>>());
            r.results = json!(reports
                .iter()
                .map(|c| json!({
                    "case_id": c.case_id,
                    "label": c.label,
                    "target": to_value(&c.target),
                    "integral_k_set": c.integral_k_set.iter().map(|k| k.to_string()).collect::<Vec<_>>(),
                    "rational_extras": c.rational_extras.iter().map(|k| k.to_string()).collect::<Vec<_>>(),
                }))
                .collect::<Vec<_>>());
            r
        }
        Command::Search { k, height } => {
            let kq = rational(k)?;
            let pts = search_ck(&kq, HeightBound::new(*height)?)?;
            let mut r = Report::new("search", json!({"k": kq.to_string(), "height": height}), started);
            text += &format!("{} points on C_{kq} up to height {height}\n", pts.len());
            for p in &pts {
                text += &format!("  {p}\n");
            }
            r.provenance.computed = pts.len();
            r.results = json!({"points": to_value(&pts)});
            r
        }
        Command::Torsion { curve, k } => {
            let kq = rational(k)?;
            let i = CurveIndex::from(*curve);
            let e = QuarticCurve::new(kq.clone())?.elliptic(i);
            let t = e.torsion_subgroup()?;
            let mut r = Report::new("torsion", json!({"curve": i.to_string(), "k": kq.to_string()}), started);
            text += &format!("{e}\ntorsion {} (order {})\n", t.structure, t.order());
            let mut pts = Vec::new();
            for p in &t.points {
                let n = e.point_order(p)?.expect("torsion point");
                text += &format!("  {p}  order {n}\n");
                pts.push(json!({"point": p.to_string(), "order": n}));
            }
            r.provenance.computed = 1;
            r.results = json!({
                "curve": e.to_string(),
                "structure": t.structure.to_string(),
                "order": t.order(),
                "points": pts,
            });
            r
        }
        Command::Localsolve { c, e, f, p, depth } => {
            let model = SuperellipticModel::from_i64(*c, *e, f)?;
            let v = qp_soluble(&model, *p, *depth)?;
            let mut r = Report::new(
                "localsolve",
                json!({"c": c, "e": e, "f": f, "p": p, "depth": depth}),
                started,
            );
            text += &format!("{model} over Q_{p}: {:?} (depth {})\n", v.status, v.depth_used);
            if let Some(w) = &v.witness {
                text += &format!("  witness {w:?}\n");
            }
            r.ok = v.status != LocalStatus::Unknown;
            r.provenance.computed = 1;
            r.results = to_value(&v);
            r
        }
        Command::Ffcheck { k, pmax } => {
            let mut r = Report::new("ffcheck", json!({"k": k, "pmax": pmax}), started);
            let mut rows = Vec::new();
            let mut skipped = Vec::new();
            text += "     p   #C  a1  a2  a3  identity\n";
            for p in (5..=*pmax).filter(|&p| quartic_core::algebra::is_prime(p)) {
                match count_curve_points(*k, p) {
                    Ok(t) => {
                        text += &format!(
                            "{:>6} {:>4} {:>3} {:>3} {:>3}  {}\n",
                            p, t.count_c, t.a1, t.a2, t.a3, t.identity_holds
                        );
                        r.ok &= t.identity_holds && t.hasse_holds();
                        rows.push(to_value(&t));
                    }
                    Err(Error::BadReduction { what, .. }) => {
                        text += &format!("{p:>6}  bad reduction: {what}\n");
                        skipped.push(json!({"p": p, "reason": what}));
                    }
                    Err(e) => return Err(e),
                }
            }
            r.provenance.computed = rows.len();
            r.results = json!({"traces": rows, "bad_primes": skipped});
            r
        }
        Command::Param { family, arg } => {
            let a = ParamArg::parse(arg)?;
            let (k, cert) = param_k(*family, &a)?;
            let mut r = Report::new(
                "param",
                json!({"family": family.to_string(), "arg": a.to_string()}),
                started,
            );
            let holds = cert.verify(&k);
            text += &format!("{family}({a}) = {k}\n  certificate {cert:?} holds: {holds}\n");
            r.ok = holds;
            r.provenance.computed = 1;
            r.results = json!({"k": k.to_string()});
            r.certificates = json!([to_value(&cert)]);
            r
        }
    };
    Ok((r, text))
}

fn summary_line(c: &quartic_core::cases::Certificate) -> String {
    let v = to_value(c);
    let kind = v.get("kind").and_then(|k| k.as_str()).unwrap_or("?").to_string();
    let label = ["label", "statement", "model"].iter().find_map(|f| {
        v.get(*f)
            .map(|x| x.as_str().map(str::to_string).unwrap_or_else(|| x.to_string()))
    });
    let at = |f: &str| {
        v.get(f)
            .map(|x| x.as_str().map(str::to_string).unwrap_or_else(|| x.to_string()))
    };
    match (label, at("curve"), at("k")) {
        (Some(l), _, _) => format!("{kind}: {l}"),
        (None, Some(c), Some(k)) => format!("{kind}: {c} at k = {k}"),
        _ => kind,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let started = Instant::now();
    match run(&cli.command, started) {
        Ok((mut report, text)) => {
            report.elapsed_ms = started.elapsed().as_millis() as u64;
            if cli.json {
                print!("{}", report.to_json());
            } else {
                print!("{text}");
            }
            if report.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cli_definition_is_consistent() {
        use clap::CommandFactory;
        Cli::command().debug_assert();
    }
}
