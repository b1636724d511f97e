use std::fmt::Write as _;

use num_bigint::BigUint;
use serde::Serialize;

use toric_core::layers::{self, PoincareRoute};
use toric_core::verify::{self, Outcome};
use toric_core::{oracle, RootSystem};

use crate::{Artifact, Command, Failure, Format, RouteArg, RunConfig};

#[derive(Serialize)]
struct Envelope<'a, T: Serialize> {
    #[serde(rename = "type")]
    ty: String,
    rank: usize,
    command: &'a str,
    results: &'a T,
    tool_version: &'static str,
}

fn json<T: Serialize>(cfg: &RunConfig, command: Command, results: &T) -> String {
    let env = Envelope {
        ty: cfg.ty.to_string(),
        rank: cfg.ty.rank(),
        command: command.name(),
        results,
        tool_version: env!("CARGO_PKG_VERSION"),
    };
    let mut s = serde_json::to_string_pretty(&env).expect("serializable");
    s.push('\n');
    s
}

fn csv<R: Serialize>(rows: &[R]) -> Result<String, Failure> {
    let mut w = csv::Writer::from_writer(Vec::new());
    for r in rows {
        w.serialize(r).map_err(|e| Failure::Usage(e.to_string()))?;
    }
    let bytes = w.into_inner().map_err(|e| Failure::Usage(e.to_string()))?;
    Ok(String::from_utf8(bytes).expect("utf-8"))
}

fn unsupported(cfg: &RunConfig, command: Command) -> Failure {
    Failure::Usage(format!(
        "format {:?} is not available for `{}`",
        cfg.format,
        command.name()
    ))
}

fn done(body: String) -> Result<Artifact, Failure> {
    Ok(Artifact {
        body,
        consistent: true,
    })
}

pub fn run(command: Command, cfg: &RunConfig, rs: &RootSystem) -> Result<Artifact, Failure> {
    match command {
        Command::Points => points(cfg, rs),
        Command::Layers => layer_counts(cfg, rs),
        Command::Census => census(cfg, rs),
        Command::Poincare => poincare(cfg, rs),
        Command::Euler => euler(cfg, rs),
        Command::Identity => identity(cfg),
        Command::Poset => poset(cfg, rs),
        Command::Verify => verify_all(cfg, rs),
    }
}

#[derive(Serialize)]
struct PointOrbitRow {
    factor: String,
    vertex: usize,
    aut_orbit: usize,
    orbit_size: String,
    point_type: String,
    stabilizer_order: String,
    aut_stabilizer_order: usize,
    center_stabilizer_order: usize,
}

#[derive(Serialize)]
struct PointsOut {
    total: String,
    total_by_aut_orbits: String,
    orbits: Vec<PointOrbitRow>,
}

fn points(cfg: &RunConfig, rs: &RootSystem) -> Result<Artifact, Failure> {
    let mut rows = Vec::new();
    let mut by_aut = BigUint::from(1u32);
    for &t in cfg.ty.factors() {
        let o = layers::point_orbits(t);
        by_aut *= o.total_by_aut_orbits();
        rows.extend(o.records.iter().map(|r| PointOrbitRow {
            factor: t.to_string(),
            vertex: r.vertex,
            aut_orbit: r.aut_orbit,
            orbit_size: r.orbit_size.to_string(),
            point_type: r.point_type.to_string(),
            stabilizer_order: r.stabilizer_order.to_string(),
            aut_stabilizer_order: r.aut_stabilizer_order,
            center_stabilizer_order: r.center_stabilizer_order,
        }));
    }
    let total = layers::count_points(rs.product_type());
    let consistent = total == by_aut;
    let out = PointsOut {
        total: total.to_string(),
        total_by_aut_orbits: by_aut.to_string(),
        orbits: rows,
    };
    let body = match cfg.format {
        Format::Json => json(cfg, Command::Points, &out),
        Format::Csv => csv(&out.orbits)?,
        Format::Text => {
            let mut s = format!("{}: {} points\n", cfg.ty, out.total);
            for r in &out.orbits {
                writeln!(
                    s,
                    "  {} vertex {}: orbit {:>6}  type {:<12} |W_p| = {}",
                    r.factor, r.vertex, r.orbit_size, r.point_type, r.stabilizer_order
                )
                .unwrap();
            }
            s
        }
        Format::Dot => return Err(unsupported(cfg, Command::Points)),
    };
    Ok(Artifact { body, consistent })
}

#[derive(Serialize)]
struct DimCount {
    dim: usize,
    count: String,
}

fn layer_counts(cfg: &RunConfig, rs: &RootSystem) -> Result<Artifact, Failure> {
    let counts: Vec<DimCount> = (0..=rs.rank())
        .map(|d| {
            Ok(DimCount {
                dim: d,
                count: layers::count_layers(rs, d, &cfg.caps)?.to_string(),
            })
        })
        .collect::<Result<_, toric_core::Error>>()?;
    let body = match cfg.format {
        Format::Json => json(cfg, Command::Layers, &counts),
        Format::Csv => csv(&counts)?,
        Format::Text => counts.iter().map(|c| format!("dim {}: {}\n", c.dim, c.count)).collect(),
        Format::Dot => return Err(unsupported(cfg, Command::Layers)),
    };
    done(body)
}

#[derive(Serialize)]
struct TypeCount {
    #[serde(rename = "type")]
    ty: String,
    count: String,
}

#[derive(Serialize)]
struct CensusRecordOut {
    dim: usize,
    theta_type: String,
    theta_roots: Vec<u32>,
    theta_orbit_size: usize,
    n_theta: String,
    layer_count_per_theta: String,
    phi_c_types: Vec<TypeCount>,
}

#[derive(Serialize)]
struct CensusOut {
    records: Vec<CensusRecordOut>,
    layer_counts: Vec<DimCount>,
}

#[derive(Serialize)]
struct CensusRow<'a> {
    dim: usize,
    theta_type: &'a str,
    theta_orbit_size: usize,
    n_theta: &'a str,
    phi_c_type: &'a str,
    count: &'a str,
}

fn census(cfg: &RunConfig, rs: &RootSystem) -> Result<Artifact, Failure> {
    let c = layers::layer_census(rs, &cfg.caps)?;
    let out = CensusOut {
        records: c
            .records
            .iter()
            .map(|r| CensusRecordOut {
                dim: r.dim,
                theta_type: r.tangent_type.to_string(),
                theta_roots: r.tangent_roots.clone(),
                theta_orbit_size: r.orbit_size,
                n_theta: r.n_theta.to_string(),
                layer_count_per_theta: r.layer_count_per_theta.to_string(),
                phi_c_types: r
                    .phi_c_types
                    .iter()
                    .map(|(t, n)| TypeCount {
                        ty: t.to_string(),
                        count: n.to_string(),
                    })
                    .collect(),
            })
            .collect(),
        layer_counts: (0..=rs.rank())
            .map(|d| DimCount {
                dim: d,
                count: c.layer_count(d).to_string(),
            })
            .collect(),
    };
    let body = match cfg.format {
        Format::Json => json(cfg, Command::Census, &out),
        Format::Csv => {
            let rows: Vec<CensusRow> = out
                .records
                .iter()
                .flat_map(|r| {
                    r.phi_c_types.iter().map(move |p| CensusRow {
                        dim: r.dim,
                        theta_type: &r.theta_type,
                        theta_orbit_size: r.theta_orbit_size,
                        n_theta: &r.n_theta,
                        phi_c_type: &p.ty,
                        count: &p.count,
                    })
                })
                .collect();
            csv(&rows)?
        }
        Format::Text => {
            let mut s = String::new();
            for r in &out.records {
                let types: Vec<String> = r.phi_c_types.iter().map(|p| format!("{} {}", p.count, p.ty)).collect();
                writeln!(
                    s,
                    "dim {}  {:>4} x {:<12} n_Θ = {:<3} layers: {}",
                    r.dim,
                    r.theta_orbit_size,
                    r.theta_type,
                    r.n_theta,
                    types.join(", ")
                )
                .unwrap();
            }
            for d in &out.layer_counts {
                writeln!(s, "total dim {}: {}", d.dim, d.count).unwrap();
            }
            s
        }
        Format::Dot => return Err(unsupported(cfg, Command::Census)),
    };
    done(body)
}

#[derive(Serialize)]
struct PoincareOut {
    closed_form: Option<String>,
    layer_sum: Option<String>,
    coefficients: Vec<String>,
    routes_agree: Option<bool>,
}

fn poincare(cfg: &RunConfig, rs: &RootSystem) -> Result<Artifact, Failure> {
    let closed = match cfg.route {
        RouteArg::Closed | RouteArg::Both => Some(layers::poincare(rs, PoincareRoute::ClosedForm, &cfg.caps)?),
        RouteArg::Layers => None,
    };
    let sum = match cfg.route {
        RouteArg::Layers | RouteArg::Both => Some(layers::poincare(rs, PoincareRoute::LayerSum, &cfg.caps)?),
        RouteArg::Closed => None,
    };
    let routes_agree = match (&closed, &sum) {
        (Some(a), Some(b)) => Some(a == b),
        _ => None,
    };
    let p = closed.as_ref().or(sum.as_ref()).expect("at least one route");
    let out = PoincareOut {
        closed_form: closed.as_ref().map(|p| p.to_string()),
        layer_sum: sum.as_ref().map(|p| p.to_string()),
        coefficients: p.coeffs().iter().map(|c| c.to_string()).collect(),
        routes_agree,
    };
    let body = match cfg.format {
        Format::Json => json(cfg, Command::Poincare, &out),
        Format::Text => {
            let mut s = format!("{p}\n");
            if let Some(agree) = routes_agree {
                writeln!(s, "routes agree: {agree}").unwrap();
            }
            s
        }
        Format::Csv | Format::Dot => return Err(unsupported(cfg, Command::Poincare)),
    };
    Ok(Artifact {
        body,
        consistent: routes_agree != Some(false),
    })
}

#[derive(Serialize)]
struct EulerOut {
    closed_form: String,
    via_poincare: Option<String>,
    routes_agree: Option<bool>,
    regular_character_multiple: i64,
}

fn euler(cfg: &RunConfig, rs: &RootSystem) -> Result<Artifact, Failure> {
    let e = layers::euler_characteristic(rs, &cfg.caps)?;
    let k = layers::equivariant_euler(rs, &cfg.caps)?.k;
    let out = EulerOut {
        closed_form: e.closed_form.to_string(),
        via_poincare: e.via_poincare.as_ref().map(|v| v.to_string()),
        routes_agree: e.agree(),
        regular_character_multiple: k,
    };
    let body = match cfg.format {
        Format::Json => json(cfg, Command::Euler, &out),
        Format::Text => {
            let mut s = format!("(-1)^n |W| = {}\n", out.closed_form);
            match &out.via_poincare {
                Some(v) => writeln!(s, "P(-1) = {v}").unwrap(),
                None => writeln!(s, "P(-1): beyond the enumeration bound, closed form only").unwrap(),
            }
            writeln!(s, "equivariant: {k} x regular character").unwrap();
            s
        }
        Format::Csv | Format::Dot => return Err(unsupported(cfg, Command::Euler)),
    };
    Ok(Artifact {
        body,
        consistent: e.agree() != Some(false) && k.abs() == 1,
    })
}

#[derive(Serialize)]
struct IdentityTerm {
    vertex: usize,
    point_type: String,
    term: String,
}

#[derive(Serialize)]
struct IdentityOut {
    #[serde(rename = "type")]
    ty: String,
    terms: Vec<IdentityTerm>,
    sum: String,
    holds: bool,
}

fn identity(cfg: &RunConfig) -> Result<Artifact, Failure> {
    let out: Vec<IdentityOut> = cfg
        .ty
        .factors()
        .iter()
        .map(|&t| {
            let id = layers::verify_degree_identity(t);
            IdentityOut {
                ty: t.to_string(),
                terms: id
                    .terms
                    .iter()
                    .map(|(v, pt, q)| IdentityTerm {
                        vertex: *v,
                        point_type: pt.to_string(),
                        term: q.to_string(),
                    })
                    .collect(),
                sum: id.sum.to_string(),
                holds: id.holds(),
            }
        })
        .collect();
    let consistent = out.iter().all(|o| o.holds);
    let body = match cfg.format {
        Format::Json => json(cfg, Command::Identity, &out),
        Format::Text => {
            let mut s = String::new();
            for o in &out {
                let terms: Vec<&str> = o.terms.iter().map(|t| t.term.as_str()).collect();
                writeln!(s, "{}: {} = {}", o.ty, terms.join(" + "), o.sum).unwrap();
            }
            s
        }
        Format::Csv | Format::Dot => return Err(unsupported(cfg, Command::Identity)),
    };
    Ok(Artifact { body, consistent })
}

#[derive(Serialize)]
struct PosetLayer {
    id: usize,
    dim: usize,
    #[serde(rename = "type")]
    ty: String,
    phi_c: Vec<u32>,
    theta: Vec<u32>,
    base_point: String,
}

#[derive(Serialize)]
struct PosetOut {
    layers: Vec<PosetLayer>,
    covers: Vec<(usize, usize)>,
}

fn poset(cfg: &RunConfig, rs: &RootSystem) -> Result<Artifact, Failure> {
    let p = oracle::build_poset(rs, &cfg.caps)?;
    let out = PosetOut {
        layers: p
            .layers
            .iter()
            .enumerate()
            .map(|(id, l)| PosetLayer {
                id,
                dim: l.dim,
                ty: l.ty.to_string(),
                phi_c: l.phi_c.clone(),
                theta: l.theta.clone(),
                base_point: l.base_point.to_string(),
            })
            .collect(),
        covers: p.covers.clone(),
    };
    let body = match cfg.format {
        Format::Json => json(cfg, Command::Poset, &out),
        Format::Dot => {
            let mut s = String::from("digraph layers {\n  rankdir=BT;\n");
            for l in &out.layers {
                writeln!(s, "  n{} [label=\"{}@{}\"];", l.id, l.ty, l.dim).unwrap();
            }
            for (a, b) in &out.covers {
                writeln!(s, "  n{a} -> n{b};").unwrap();
            }
            s.push_str("}\n");
            s
        }
        Format::Text => {
            let mut s = String::new();
            for l in &out.layers {
                writeln!(s, "{:>4}  dim {}  {:<12} base {}", l.id, l.dim, l.ty, l.base_point).unwrap();
            }
            writeln!(s, "{} covering pairs", out.covers.len()).unwrap();
            s
        }
        Format::Csv => return Err(unsupported(cfg, Command::Poset)),
    };
    Ok(Artifact {
        body,
        consistent: p.is_partial_order(),
    })
}

#[derive(Serialize)]
struct CheckOut {
    name: &'static str,
    outcome: &'static str,
    detail: String,
}

#[derive(Serialize)]
struct VerifyOut {
    checks: Vec<CheckOut>,
    passed: bool,
}

fn verify_all(cfg: &RunConfig, rs: &RootSystem) -> Result<Artifact, Failure> {
    let report = verify::verify(rs, &cfg.caps);
    let out = VerifyOut {
        checks: report
            .checks
            .iter()
            .map(|c| {
                let (outcome, detail) = match &c.outcome {
                    Outcome::Pass => ("pass", String::new()),
                    Outcome::Fail(d) => ("fail", d.clone()),
                    Outcome::Skipped(d) => ("skip", d.clone()),
                };
                CheckOut {
                    name: c.name,
                    outcome,
                    detail,
                }
            })
            .collect(),
        passed: report.passed(),
    };
    let body = match cfg.format {
        Format::Json => json(cfg, Command::Verify, &out),
        Format::Csv => csv(&out.checks)?,
        Format::Text => {
            let mut s: String = report.checks.iter().map(|c| format!("{c}\n")).collect();
            writeln!(s, "{}", if out.passed { "all checks passed" } else { "verification FAILED" }).unwrap();
            s
        }
        Format::Dot => return Err(unsupported(cfg, Command::Verify)),
    };
    Ok(Artifact {
        body,
        consistent: out.passed,
    })
}
