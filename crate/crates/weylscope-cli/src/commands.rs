use std::fmt::Write as _;
use std::path::Path;

use serde_json::{json, Value};
use weylscope::apartment::{ApartmentContext, CompactApartmentPoint};
use weylscope::gl_models::{DiagSeminorm, PglModel};
use weylscope::io::{self, PointSpec};
use weylscope::polyfan::{BoundaryPoint, Cone};
use weylscope::rational::{parse_vector, ExtendedValue};
use weylscope::root_data::{all_parabolics, ParabolicSet, RootDatum, RootSet, TypeLabel, WeylGroup};
use weylscope::type_geometry::{self, TypePrefan};
use weylscope::{Error, DEFAULT_ENUM_CAP};

use crate::{render as svg, DatumArgs, TypedArgs};

pub enum CliError {
    Validation(String),
    Cap(String),
}

impl CliError {
    pub fn code(&self) -> u8 {
        match self {
            CliError::Validation(_) => 2,
            CliError::Cap(_) => 3,
        }
    }

    pub fn message(&self) -> &str {
        match self {
            CliError::Validation(m) | CliError::Cap(m) => m,
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::CapExceeded { .. } | Error::DimensionCap { .. } => CliError::Cap(e.to_string()),
            other => CliError::Validation(other.to_string()),
        }
    }
}

type Res<T> = Result<T, CliError>;

pub struct Outcome {
    pub summary: String,
    pub report: Value,
}

fn invalid(m: impl Into<String>) -> CliError {
    CliError::Validation(m.into())
}

pub fn enum_cap() -> Res<usize> {
    match std::env::var("WEYLSCOPE_ENUM_CAP") {
        Ok(s) => s
            .trim()
            .parse::<usize>()
            .ok()
            .filter(|&c| c > 0)
            .ok_or_else(|| invalid(format!("WEYLSCOPE_ENUM_CAP must be a positive integer, got `{s}`"))),
        Err(_) => Ok(DEFAULT_ENUM_CAP),
    }
}

fn read(path: &Path) -> Res<String> {
    std::fs::read_to_string(path).map_err(|e| invalid(format!("{}: {e}", path.display())))
}

fn in_file(path: &Path, e: Error) -> CliError {
    match CliError::from(e) {
        CliError::Validation(m) => invalid(format!("{}: {m}", path.display())),
        other => other,
    }
}

fn load_datum(a: &DatumArgs) -> Res<RootDatum> {
    match (&a.datum, &a.datum_file) {
        (Some(name), _) => Ok(RootDatum::named(name)?),
        (None, Some(path)) => io::parse_datum(&read(path)?).map_err(|e| in_file(path, e)),
        (None, None) => Err(invalid("either --datum or --datum-file is required")),
    }
}

fn load_typed(a: &TypedArgs) -> Res<(RootDatum, TypeLabel)> {
    let d = load_datum(&a.datum)?;
    let t = TypeLabel::parse(&a.t, d.rank())?;
    Ok((d, t))
}

fn vector(s: &str, n: usize, what: &str) -> Res<Vec<weylscope::Q>> {
    let v = parse_vector(s).map_err(|e| invalid(format!("--{what}: {e}")))?;
    if v.len() != n {
        return Err(invalid(format!("--{what} has {} entries, expected {n}", v.len())));
    }
    Ok(v)
}

fn root_json(d: &RootDatum, a: usize) -> Value {
    json!(d.root(a))
}

fn roots_json(d: &RootDatum, s: &RootSet) -> Value {
    Value::Array(s.iter().map(|&a| root_json(d, a)).collect())
}

fn parabolic_json(d: &RootDatum, p: &ParabolicSet) -> Value {
    json!({
        "label": p.describe(d),
        "type": p.type_label(d).to_string(),
        "levi_simple_roots": d.base_of(&p.levi_roots(d)).iter().map(|&a| root_json(d, a)).collect::<Vec<_>>(),
        "size": p.len(),
    })
}

fn cone_line(c: &Cone) -> String {
    let rays: Vec<String> = c.rays().iter().map(|r| format!("({})", io::rational_strings(r).join(","))).collect();
    let lin = if c.lineality().is_empty() { String::new() } else { format!(" lineality {}", c.lineality().len()) };
    format!("dim {} rays [{}]{lin}", c.dim(), rays.join(" "))
}

fn prefan_outcome(d: &RootDatum, f: &TypePrefan, title: &str) -> Outcome {
    let mut s = String::new();
    let n = f.prefan.len();
    let by_dim: Vec<String> = (0..=d.rank())
        .map(|k| (k, f.prefan.cones().iter().filter(|c| c.dim() == k).count()))
        .filter(|&(_, c)| c > 0)
        .map(|(k, c)| format!("dim {k}: {c}"))
        .collect();
    let _ = writeln!(s, "{title}: {n} cones ({}), {}", by_dim.join(", "), if f.prefan.is_fan() { "fan" } else { "prefan with lineality" });
    for (i, (c, l)) in f.prefan.cones().iter().zip(&f.labels).enumerate() {
        let _ = writeln!(s, "  stratum {i}: {}  {}", l.describe(d), cone_line(c));
    }
    let cones: Vec<Value> = f
        .prefan
        .cones()
        .iter()
        .zip(&f.labels)
        .enumerate()
        .map(|(i, (c, l))| json!({ "id": i, "cone": io::ConeJson::from_cone(c), "parabolic": parabolic_json(d, l) }))
        .collect();
    let report = json!({
        "datum": d.label(),
        "type": f.t.to_string(),
        "is_fan": f.prefan.is_fan(),
        "ambient_dim": f.prefan.ambient_dim(),
        "strata": cones,
        "charts": f.charts.iter().map(|p| parabolic_json(d, p)).collect::<Vec<_>>(),
    });
    Outcome { summary: s, report }
}

pub fn datum_info(a: &DatumArgs, cap: usize) -> Res<Outcome> {
    let d = load_datum(a)?;
    let w = WeylGroup::enumerate(&d, cap)?;
    let mut s = String::new();
    let _ = writeln!(s, "datum {}", d.label());
    let _ = writeln!(s, "rank {}", d.rank());
    let _ = writeln!(s, "roots {} ({} positive)", d.num_roots(), d.num_positive());
    let _ = writeln!(s, "|W| = {}", w.len());
    let _ = writeln!(s, "components {}", d.components().len());
    let report = json!({
        "datum": d.label(),
        "rank": d.rank(),
        "cartan": d.cartan(),
        "symmetrizer": d.symmetrizer(),
        "num_roots": d.num_roots(),
        "num_positive": d.num_positive(),
        "weyl_order": w.len(),
        "positive_roots": d.positive_roots().map(|a| d.root(a).to_vec()).collect::<Vec<_>>(),
        "components": d.components(),
    });
    Ok(Outcome { summary: s, report })
}

pub fn fan(a: &DatumArgs, cap: usize) -> Res<Outcome> {
    let d = load_datum(a)?;
    let f = type_geometry::weyl_fan(&d, cap)?;
    Ok(prefan_outcome(&d, &f, &format!("Weyl fan of {}", d.label())))
}

pub fn prefan(a: &TypedArgs, cap: usize) -> Res<Outcome> {
    let (d, t) = load_typed(a)?;
    let f = type_geometry::prefan_of_type(&d, &t, cap)?;
    Ok(prefan_outcome(&d, &f, &format!("F_t of {} for t = {t}", d.label())))
}

pub fn relevant(a: &TypedArgs, all: bool, cap: usize) -> Res<Outcome> {
    let (d, t) = load_typed(a)?;
    let candidates: Vec<ParabolicSet> = if all {
        let w = WeylGroup::enumerate(&d, cap)?;
        all_parabolics(&d, &w).into_iter().map(|e| e.set).collect()
    } else {
        TypeLabel::all(d.rank()).iter().map(|y| ParabolicSet::standard(&d, y)).collect()
    };
    let mut s = String::new();
    let mut items = Vec::new();
    for q in &candidates {
        let r = type_geometry::relevance(&d, q, &t);
        if r.is_relevant {
            let _ = writeln!(s, "{}", q.describe(&d));
        }
        items.push(json!({
            "parabolic": parabolic_json(&d, q),
            "relevant": r.is_relevant,
            "minimal_relevant": parabolic_json(&d, &r.minimal_relevant),
        }));
    }
    let count = items.iter().filter(|v| v["relevant"] == json!(true)).count();
    let kind = if all { "parabolics" } else { "standard parabolics" };
    let _ = writeln!(s, "{count} of {} {kind} are {t}-relevant", candidates.len());
    Ok(Outcome {
        summary: s,
        report: json!({ "datum": d.label(), "type": t.to_string(), "parabolics": items }),
    })
}

pub fn cone(a: &TypedArgs, levi: &str) -> Res<Outcome> {
    let (d, t) = load_typed(a)?;
    let y = TypeLabel::parse(levi, d.rank())?;
    let q = ParabolicSet::standard(&d, &y);
    let tc = type_geometry::type_cone(&d, &q, &t);
    let rep = type_geometry::relevance(&d, &q, &t);
    let rt = type_geometry::rt_decomposition(&d, &q, &t);
    let mut s = String::new();
    let _ = writeln!(s, "C_t(Q) for Q = {} and t = {t}: {}", q.describe(&d), cone_line(&tc.cone));
    let fmt = |fs: &[Vec<i64>]| fs.iter().map(|f| format!("{f:?}")).collect::<Vec<_>>().join(" ");
    let _ = writeln!(s, "  <= 0: {}", fmt(tc.cone.inequalities()));
    let _ = writeln!(s, "  == 0: {}", fmt(tc.cone.equalities()));
    let _ = writeln!(s, "relevant: {}", rep.is_relevant);
    let _ = writeln!(s, "minimal relevant: {}", rep.minimal_relevant.describe(&d));
    let _ = writeln!(s, "dim C_t(Q) = dim 𝔠(Q): {}", rep.dims_equal);
    let _ = writeln!(s, "Levi roots nonvanishing {}, vanishing {}", rt.nonvanishing.len(), rt.vanishing.len());
    let report = json!({
        "datum": d.label(),
        "type": t.to_string(),
        "parabolic": parabolic_json(&d, &q),
        "cone": io::ConeJson::from_cone(&tc.cone),
        "relevant": rep.is_relevant,
        "minimal_relevant": parabolic_json(&d, &rep.minimal_relevant),
        "span_equalities": rep.span_equalities,
        "dims_equal": rep.dims_equal,
        "nonvanishing": roots_json(&d, &rt.nonvanishing),
        "vanishing": roots_json(&d, &rt.vanishing),
    });
    Ok(Outcome { summary: s, report })
}

fn point_json(ctx: &ApartmentContext, x: &CompactApartmentPoint) -> Value {
    json!({
        "stratum": x.point.stratum(),
        "residual": io::rational_strings(x.point.residual()),
        "parabolic": parabolic_json(ctx.datum(), &x.stratum),
    })
}

fn point_line(ctx: &ApartmentContext, x: &CompactApartmentPoint) -> String {
    format!(
        "stratum {} ({}), residual ({})",
        x.point.stratum(),
        x.stratum.describe(ctx.datum()),
        io::rational_strings(x.point.residual()).join(",")
    )
}

fn load_point(ctx: &ApartmentContext, path: &Path) -> Res<CompactApartmentPoint> {
    let spec = io::parse_point(&read(path)?).map_err(|e| in_file(path, e))?;
    let n = ctx.datum().rank();
    let bp = match spec {
        PointSpec::Interior(u) => BoundaryPoint::interior(ctx.prefan(), &u),
        PointSpec::Boundary { stratum, residual } => BoundaryPoint::new(ctx.prefan(), stratum, &residual),
    }
    .map_err(|e| in_file(path, e))?;
    debug_assert_eq!(bp.residual().len(), n);
    Ok(ctx.point(bp))
}

fn context(a: &TypedArgs, cap: usize) -> Res<ApartmentContext> {
    let (d, t) = load_typed(a)?;
    Ok(ApartmentContext::new(d, t, cap)?)
}

pub fn limit(a: &TypedArgs, u0: &str, v: &str, cap: usize) -> Res<Outcome> {
    let ctx = context(a, cap)?;
    let n = ctx.datum().rank();
    let x = ctx.limit(&vector(u0, n, "u0")?, &vector(v, n, "v")?)?;
    Ok(Outcome {
        summary: format!("limit: {}\n", point_line(&ctx, &x)),
        report: point_json(&ctx, &x),
    })
}

pub fn seminorm(a: &TypedArgs, point: &Path, poly: &Path, chart: Option<usize>, cap: usize) -> Res<Outcome> {
    let ctx = context(a, cap)?;
    let x = load_point(&ctx, point)?;
    let chart = match chart {
        Some(c) if c >= ctx.charts().len() => return Err(invalid(format!("chart {c} does not exist ({} charts)", ctx.charts().len()))),
        Some(c) => c,
        None => ctx.first_chart(&x)?,
    };
    let gens = ctx.generators(chart).to_vec();
    let f = io::parse_tropical(&read(poly)?, &gens).map_err(|e| in_file(poly, e))?;
    let value = ctx.seminorm_eval(&x, &f, chart)?;
    let d = ctx.datum();
    let mut s = String::new();
    let _ = writeln!(s, "point: {}", point_line(&ctx, &x));
    let _ = writeln!(s, "chart {chart}: {}", ctx.charts()[chart].describe(d));
    for (i, &g) in gens.iter().enumerate() {
        let _ = writeln!(s, "  X{i} = root {:?} value {}", d.root(g), ctx.generator_value(&x, g)?);
    }
    let _ = writeln!(s, "log seminorm = {value}");
    let values: Vec<String> = gens.iter().map(|&g| ctx.generator_value(&x, g).map(|v| v.to_string())).collect::<Result<_, _>>()?;
    let report = json!({
        "point": point_json(&ctx, &x),
        "chart": chart,
        "generators": gens.iter().map(|&g| d.root(g).to_vec()).collect::<Vec<_>>(),
        "generator_values": values,
        "is_norm": ctx.is_norm(&x, chart),
        "value": value.to_string(),
    });
    Ok(Outcome { summary: s, report })
}

pub fn stabilizer(a: &TypedArgs, point: &Path, cap: usize) -> Res<Outcome> {
    let ctx = context(a, cap)?;
    let x = load_point(&ctx, point)?;
    let p = ctx.stabilizer_profile(&x);
    let d = ctx.datum();
    let mut s = String::new();
    let _ = writeln!(s, "point: {}", point_line(&ctx, &x));
    let list = |set: &RootSet| {
        if set.is_empty() {
            return "none".to_string();
        }
        set.iter().map(|&a| format!("{:?}", d.root(a))).collect::<Vec<_>>().join(" ")
    };
    let _ = writeln!(s, "full (unipotent radical): {}", list(&p.full_unipotent));
    let _ = writeln!(s, "full (Levi): {}", list(&p.full_levi));
    for (&a, r) in &p.filtered {
        let _ = writeln!(s, "filtered {:?} at level {r}", d.root(a));
    }
    let _ = writeln!(s, "plus {}", p.normalizer_note);
    let filtered: Vec<Value> = p
        .filtered
        .iter()
        .map(|(&a, r)| json!({ "root": d.root(a), "level": r.to_string() }))
        .collect();
    let report = json!({
        "point": point_json(&ctx, &x),
        "full_unipotent": roots_json(d, &p.full_unipotent),
        "full_levi": roots_json(d, &p.full_levi),
        "filtered": filtered,
        "normalizer": p.normalizer_note,
    });
    Ok(Outcome { summary: s, report })
}

pub fn project(a: &TypedArgs, to_type: &str, point: &Path, cap: usize) -> Res<Outcome> {
    let ctx = context(a, cap)?;
    let t2 = TypeLabel::parse(to_type, ctx.datum().rank())?;
    let target = ApartmentContext::new(ctx.datum().clone(), t2, cap)?;
    let x = load_point(&ctx, point)?;
    let y = ctx.project(&x, &target)?;
    Ok(Outcome {
        summary: format!("{}\n  -> {}\n", point_line(&ctx, &x), point_line(&target, &y)),
        report: json!({ "from": point_json(&ctx, &x), "to": point_json(&target, &y), "to_type": target.type_label().to_string() }),
    })
}

pub fn pgl(values: Option<&str>, file: Option<&Path>, cap: usize) -> Res<Outcome> {
    let s = match (values, file) {
        (Some(v), _) => {
            let vals = v.split(',').map(ExtendedValue::parse).collect::<Result<Vec<_>, _>>().map_err(invalid)?;
            DiagSeminorm::new(vals)?
        }
        (None, Some(p)) => io::parse_seminorm(&read(p)?).map_err(|e| in_file(p, e))?,
        (None, None) => return Err(invalid("either --values or --seminorm is required")),
    };
    let m = PglModel::new(s.rank(), cap)?;
    let ctx = m.context();
    let x = m.to_apartment_point(&s)?;
    let blocks = m.stabilizer_blocks(&s)?;
    let d = m.datum();
    let kernel: Vec<usize> = s.kernel().iter().map(|i| i + 1).collect();
    let mut out = String::new();
    let vals: Vec<String> = s.values().iter().map(ToString::to_string).collect();
    let _ = writeln!(out, "seminorm ({}) on k^{}", vals.join(", "), s.rank() + 1);
    let _ = writeln!(out, "kernel indices {kernel:?}");
    let _ = writeln!(out, "stratum {}", m.stratum_label(&s)?.describe(d));
    let _ = writeln!(out, "apartment point: {}", point_line(ctx, &x));
    let _ = writeln!(out, "PGL(V/W) rank {}", m.quotient_rank(&s));
    let _ = writeln!(out, "full root groups {}, filtered {}", blocks.full.len(), blocks.filtered.len());
    let filtered: Vec<Value> = blocks
        .filtered
        .iter()
        .map(|(&a, r)| json!({ "root": d.root(a), "level": r.to_string() }))
        .collect();
    let report = json!({
        "values": vals,
        "kernel": kernel,
        "stratum": parabolic_json(d, &blocks.stratum),
        "point": point_json(ctx, &x),
        "quotient_rank": m.quotient_rank(&s),
        "full": roots_json(d, &blocks.full),
        "filtered": filtered,
    });
    Ok(Outcome { summary: out, report })
}

pub fn render(a: &TypedArgs, output: &Path, cap: usize) -> Res<Outcome> {
    let (d, t) = load_typed(a)?;
    if d.rank() != 2 {
        return Err(invalid(format!("render needs a rank-2 datum, got rank {}", d.rank())));
    }
    let f = type_geometry::prefan_of_type(&d, &t, cap)?;
    let doc = svg::render_svg(&d, &f);
    std::fs::write(output, &doc).map_err(|e| invalid(format!("{}: {e}", output.display())))?;
    let maximal = f.prefan.maximal_indices().len();
    Ok(Outcome {
        summary: format!("wrote {} ({} cones, {maximal} maximal)\n", output.display(), f.prefan.len()),
        report: json!({ "output": output.display().to_string(), "cones": f.prefan.len(), "maximal": maximal }),
    })
}
