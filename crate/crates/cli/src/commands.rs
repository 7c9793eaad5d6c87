//! One function per subcommand. Each returns human-readable text together with
//! the structured result used by `--json`.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde_json::{json, Value};

use qhom_core::catalog::parse_map_file;
use qhom_core::chains::{boundary, parse_chain, project, write_chain, Chain, Variant};
use qhom_core::diagrams::{
    endpoint_chain, enumerate_colorings, extract_chain, extract_chain0, extract_shadow_chain,
    fundamental_presentation, parse_assignments, realize_two_cycle, shadow_extend, shadow_extend0,
    AnyDiagram, Coloring, Diagram0, Diagram1, ShadowColoring, ShadowColoring0,
};
use qhom_core::homology::{
    format_group, induced_map, les_boundary_map, les_check, Complex, HomologyGroup, MapSummary,
};
use qhom_core::quandle::{check_hom, verify_axioms, AxiomMode, Element, QuandleHom, RackTable};

use crate::args::{ChainAction, ChainArgs, DiagramCmd, HomCmd, HomologyArgs, LesCmd, QuandleCmd};
use crate::error::{exit, CliError, CliResult};
use crate::inputs::Inputs;

/// Result of a successful command.
#[derive(Clone, Debug, PartialEq)]
pub struct Outcome {
    pub text: String,
    pub result: Value,
    pub code: i32,
}

impl Outcome {
    fn ok(text: impl Into<String>, result: Value) -> Self {
        Outcome {
            text: text.into(),
            result,
            code: exit::OK,
        }
    }
}

/// Shared state of one invocation.
pub struct Context {
    pub inputs: Inputs,
    pub max_columns: usize,
    pub force: bool,
    /// Warnings printed to stderr.
    pub warnings: std::sync::Mutex<Vec<String>>,
}

impl Context {
    pub fn new(inputs: Inputs, max_columns: usize, force: bool) -> Self {
        Context {
            inputs,
            max_columns,
            force,
            warnings: Default::default(),
        }
    }

    /// Refuses chain groups above the column guard unless forced.
    pub fn guard(&self, rack: &RackTable, v: Variant, n: usize) -> CliResult<()> {
        let dim = Complex::shared(rack, v)?.dimension(n);
        if dim <= self.max_columns {
            return Ok(());
        }
        let msg = format!(
            "C^{v}_{n} has {dim} basis elements, above the guard of {}",
            self.max_columns
        );
        if self.force {
            self.warnings.lock().unwrap().push(msg);
            Ok(())
        } else {
            Err(CliError::Guard(format!("{msg}; rerun with --force")))
        }
    }

    fn chain(&self, path: &Path, rack: &RackTable) -> CliResult<Chain> {
        let c = parse_chain(&self.inputs.read(path)?)
            .map_err(|e| CliError::input(format!("{}: {e}", path.display())))?;
        c.check_in(rack)?;
        Ok(c)
    }

    fn diagram(&self, path: &Path) -> CliResult<AnyDiagram> {
        let d = AnyDiagram::parse(&self.inputs.read(path)?)
            .map_err(|e| CliError::input(format!("{}: {e}", path.display())))?;
        let report = d.validate();
        if !report.is_ok() {
            return Err(CliError::input(format!(
                "{} is not a valid diagram:\n  {}",
                path.display(),
                report.violations.join("\n  ")
            )));
        }
        Ok(d)
    }

    fn diagram1(&self, path: &Path) -> CliResult<Diagram1> {
        match self.diagram(path)? {
            AnyDiagram::One(d) => Ok(d),
            AnyDiagram::Zero(_) => Err(CliError::input(format!(
                "{}: this command needs a diagram with crossings",
                path.display()
            ))),
        }
    }

    fn assignments(&self, path: &Path) -> CliResult<Vec<(String, String)>> {
        parse_assignments(&self.inputs.read(path)?)
            .map_err(|e| CliError::input(format!("{}: {e}", path.display())))
    }
}

pub fn int_json(x: &BigInt) -> Value {
    match x.to_i64() {
        Some(v) => json!(v),
        None => json!(x.to_string()),
    }
}

fn ints_json(xs: &[BigInt]) -> Value {
    Value::Array(xs.iter().map(int_json).collect())
}

pub fn chain_json(c: &Chain, rack: &RackTable) -> Value {
    json!({
        "degree": c.degree(),
        "terms": c.len(),
        "text": write_chain(c),
        "display": c.display_with(rack),
    })
}

fn write_file(path: &Path, text: &str) -> CliResult<()> {
    if let Some(dir) = path.parent().filter(|d| !d.as_os_str().is_empty()) {
        std::fs::create_dir_all(dir).map_err(|e| CliError::io(dir, e))?;
    }
    std::fs::write(path, text).map_err(|e| CliError::io(path, e))
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn indent(text: &str) -> String {
    text.lines().map(|l| format!("  {l}\n")).collect()
}

fn format_matrix(rows: &[Vec<String>]) -> String {
    if rows.is_empty() || rows[0].is_empty() {
        return "  (empty)\n".into();
    }
    let width = rows.iter().flatten().map(|s| s.chars().count()).max().unwrap_or(1);
    rows.iter()
        .map(|r| {
            let cells: Vec<String> = r.iter().map(|s| format!("{s:>width$}")).collect();
            format!("  [{}]\n", cells.join(" "))
        })
        .collect()
}

fn map_text(name: &str, m: &MapSummary) -> String {
    let mut s = format!(
        "{name}: zero {}, surjective {}, injective {}\n",
        yes_no(m.zero),
        yes_no(m.surjective),
        yes_no(m.injective)
    );
    s.push_str(&format_matrix(&m.matrix));
    s
}

fn group_json(h: &HomologyGroup, rack: &RackTable) -> Value {
    json!({
        "group": h.to_string(),
        "free_rank": h.free_rank(),
        "torsion": ints_json(h.torsion()),
        "generators": h.generators().iter().map(|g| chain_json(g, rack)).collect::<Vec<_>>(),
    })
}

pub fn quandle(ctx: &Context, cmd: &QuandleCmd) -> CliResult<Outcome> {
    match cmd {
        QuandleCmd::Show { source } => show_quandle(ctx, source),
        QuandleCmd::Verify { source, rack } => {
            let f = ctx.inputs.raw_table(source)?;
            let mode = if *rack { AxiomMode::Rack } else { AxiomMode::Quandle };
            let report = verify_axioms(&f.rows, mode)?;
            let what = if *rack { "rack" } else { "quandle" };
            if report.is_ok() {
                return Ok(Outcome::ok(
                    format!("ok: {source} satisfies the {what} axioms\n"),
                    json!({ "axioms": what, "ok": true, "violations": [] }),
                ));
            }
            Err(CliError::Precondition {
                message: format!(
                    "{source} violates the {what} axioms ({} instances)",
                    report.violations.len()
                ),
                witness: report.violations.iter().map(ToString::to_string).collect(),
            })
        }
    }
}

fn show_quandle(ctx: &Context, source: &str) -> CliResult<Outcome> {
    let f = ctx.inputs.raw_table(source)?;
    let n = f.rows.len();
    let label = |a: Element| match &f.labels {
        Some(l) => l[a].clone(),
        None => a.to_string(),
    };
    let width = (0..n).map(|a| label(a).chars().count()).max().unwrap_or(1);
    let mut text = format!("{source}: {n} elements\n");
    if let Some(l) = &f.labels {
        writeln!(text, "labels: {}", l.join(" ")).unwrap();
    }
    text.push_str("table (row a, column b holds a*b):\n");
    for row in &f.rows {
        let cells: Vec<String> = row.iter().map(|&x| format!("{:>width$}", label(x))).collect();
        writeln!(text, "  {}", cells.join(" ")).unwrap();
    }
    let rack_ok = verify_axioms(&f.rows, AxiomMode::Rack)?.is_ok();
    let quandle_ok = verify_axioms(&f.rows, AxiomMode::Quandle)?.is_ok();
    let orbits: Option<Vec<Vec<String>>> = if rack_ok {
        let rack = RackTable::new(f.rows.clone())?;
        Some(rack.orbits().iter().map(|o| o.iter().map(|&a| label(a)).collect()).collect())
    } else {
        None
    };
    if let Some(orbits) = &orbits {
        let shown: Vec<String> = orbits.iter().map(|o| format!("{{{}}}", o.join(" "))).collect();
        writeln!(text, "orbits ({}): {}", orbits.len(), shown.join(" ")).unwrap();
    }
    writeln!(text, "rack axioms: {}", if rack_ok { "ok" } else { "fail" }).unwrap();
    writeln!(text, "quandle axioms: {}", if quandle_ok { "ok" } else { "fail" }).unwrap();
    Ok(Outcome::ok(
        text,
        json!({
            "size": n,
            "table": f.rows,
            "labels": f.labels,
            "orbits": orbits,
            "rack": rack_ok,
            "quandle": quandle_ok,
        }),
    ))
}

pub fn homology(ctx: &Context, a: &HomologyArgs) -> CliResult<Outcome> {
    let rack = ctx.inputs.rack(&a.quandle)?;
    ctx.guard(&rack, a.variant, a.degree + 1)?;
    let h = Complex::shared(&rack, a.variant)?.homology(a.degree)?;
    let mut text = format!("{h}\n");
    if let Some(dir) = &a.emit_generators {
        for (i, g) in h.generators().iter().enumerate() {
            let path = dir.join(format!("g{}.chn", i + 1));
            write_file(&path, &write_chain(g))?;
            writeln!(text, "generator {} -> {}", i + 1, path.display()).unwrap();
        }
    }
    let mut result = group_json(&h, &rack);
    result["quandle"] = json!(a.quandle);
    result["variant"] = json!(a.variant.to_string());
    result["degree"] = json!(a.degree);
    Ok(Outcome::ok(text, result))
}

pub fn chain(ctx: &Context, a: &ChainArgs) -> CliResult<Outcome> {
    let rack = ctx.inputs.rack(&a.quandle)?;
    let c = ctx.chain(&a.chain, &rack)?;
    let v = a.variant;
    let complex = Complex::shared(&rack, v)?;
    match a.action {
        ChainAction::Boundary => {
            let b = project(&boundary(&rack, &project(&c, v)?), v)?;
            Ok(Outcome::ok(write_chain(&b), json!({ "boundary": chain_json(&b, &rack) })))
        }
        ChainAction::IsCycle => {
            let yes = complex.is_cycle(&c)?;
            Ok(Outcome::ok(format!("{}\n", yes_no(yes)), json!({ "cycle": yes })))
        }
        ChainAction::IsBoundary => {
            ctx.guard(&rack, v, c.degree() + 1)?;
            match complex.is_boundary(&c)? {
                None => Ok(Outcome::ok("no\n", json!({ "boundary": false }))),
                Some(nu) => {
                    // recompute before reporting
                    let verified = project(&boundary(&rack, &nu), v)? == project(&c, v)?;
                    if let Some(path) = &a.witness {
                        write_file(path, &write_chain(&nu))?;
                    }
                    let text = format!(
                        "yes\nwitness ({} terms, boundary verified: {}):\n{}",
                        nu.len(),
                        yes_no(verified),
                        indent(&write_chain(&nu))
                    );
                    Ok(Outcome::ok(
                        text,
                        json!({
                            "boundary": true,
                            "witness": chain_json(&nu, &rack),
                            "verified": verified,
                        }),
                    ))
                }
            }
        }
        ChainAction::Class => {
            ctx.guard(&rack, v, c.degree() + 1)?;
            let coords = complex.class_of(&c)?;
            let h = complex.homology(c.degree().max(1))?;
            let entries: Vec<String> = coords.to_vec().iter().map(ToString::to_string).collect();
            let text = format!(
                "group: {h}\nclass: [{}]{}\n",
                entries.join(", "),
                if coords.is_zero() { " (zero)" } else { "" }
            );
            Ok(Outcome::ok(
                text,
                json!({
                    "group": h.to_string(),
                    "moduli": ints_json(&h.moduli()),
                    "free_part": ints_json(&coords.free_part),
                    "torsion_part": ints_json(&coords.torsion_part),
                    "zero": coords.is_zero(),
                }),
            ))
        }
    }
}

/// A quandle named in a map file: catalog key, path relative to the map file,
/// or path relative to the working directory.
fn map_quandle(ctx: &Context, map_path: &Path, name: &str) -> CliResult<qhom_core::quandle::FiniteQuandle> {
    let beside: Option<PathBuf> = map_path.parent().map(|d| d.join(name)).filter(|p| p.is_file());
    match beside {
        Some(p) => ctx.inputs.quandle(&p.display().to_string()),
        None => ctx.inputs.quandle(name),
    }
}

pub fn hom(ctx: &Context, cmd: &HomCmd) -> CliResult<Outcome> {
    let HomCmd::Induced { map, variant, degree } = cmd;
    let file = parse_map_file(&ctx.inputs.read(map)?)
        .map_err(|e| CliError::input(format!("{}: {e}", map.display())))?;
    let source = map_quandle(ctx, map, &file.source)?;
    let target = map_quandle(ctx, map, &file.target)?;
    let images: Vec<Element> = file
        .images
        .iter()
        .map(|t| {
            target
                .element(t)
                .ok_or_else(|| CliError::input(format!("{t} is not an element of {}", file.target)))
        })
        .collect::<CliResult<_>>()?;
    let report = check_hom(&images, &source, &target)?;
    if !report.is_ok() {
        return Err(CliError::Precondition {
            message: format!("the map is not a homomorphism ({} pairs fail)", report.violations.len()),
            witness: report
                .violations
                .iter()
                .map(|&(a, b)| {
                    format!(
                        "f({a}*{b}) = {} but f({a})*f({b}) = {}",
                        target.label(images[source.op(a, b)]),
                        target.label(target.op(images[a], images[b]))
                    )
                })
                .collect(),
        });
    }
    let f = QuandleHom::new(source.clone(), target.clone(), images)?;
    ctx.guard(&source, *variant, degree + 1)?;
    ctx.guard(&target, *variant, degree + 1)?;
    let m = induced_map(&f, *variant, *degree)?.summary();
    let hs = Complex::shared(&source, *variant)?.homology(*degree)?;
    let ht = Complex::shared(&target, *variant)?.homology(*degree)?;
    let text = format!(
        "H^{variant}_{degree}({}) = {hs} -> H^{variant}_{degree}({}) = {ht}\n{}",
        file.source,
        file.target,
        map_text("induced map", &m)
    );
    Ok(Outcome::ok(
        text,
        json!({
            "source_group": hs.to_string(),
            "target_group": ht.to_string(),
            "map": m,
        }),
    ))
}

fn element(rack: &RackTable, token: &str) -> CliResult<Element> {
    rack.element(token)
        .ok_or_else(|| CliError::input(format!("{token} is not an element")))
}

pub fn diagram(ctx: &Context, cmd: &DiagramCmd) -> CliResult<Outcome> {
    match cmd {
        DiagramCmd::Validate { diagram } => {
            let text = ctx.inputs.read(diagram)?;
            let d = AnyDiagram::parse(&text)
                .map_err(|e| CliError::input(format!("{}: {e}", diagram.display())))?;
            let report = d.validate();
            if !report.is_ok() {
                return Err(CliError::Input(format!(
                    "{} is not a valid diagram:\n  {}",
                    diagram.display(),
                    report.violations.join("\n  ")
                )));
            }
            Ok(Outcome::ok("ok\n", json!({ "valid": true })))
        }
        DiagramCmd::Colorings { diagram, quandle, list } => colorings(ctx, diagram, quandle, *list),
        DiagramCmd::Shadow {
            diagram,
            quandle,
            coloring,
            region,
            element: seed,
            out,
        } => shadow(ctx, diagram, quandle, coloring, region, seed, out.as_deref()),
        DiagramCmd::Extract {
            diagram,
            coloring,
            quandle,
            out,
        } => extract(ctx, diagram, coloring, quandle, out.as_deref()),
        DiagramCmd::Realize {
            chain,
            quandle,
            variant,
            out,
        } => realize(ctx, chain, quandle, *variant, out.as_deref()),
        DiagramCmd::Present { diagram, count } => {
            let d = ctx.diagram1(diagram)?;
            let p = fundamental_presentation(&d)?;
            let mut text = format!("{p}\n");
            let mut result = json!({ "presentation": p.to_string(), "generators": p.generators });
            if let Some(key) = count {
                let q = ctx.inputs.rack(key)?;
                let k = p.count_homs(&q);
                writeln!(text, "homomorphisms into {key}: {k}").unwrap();
                result["homs"] = json!(k);
            }
            Ok(Outcome::ok(text, result))
        }
    }
}

/// All shadow colorings of a circle diagram.
fn shadow_colorings0(d: &Diagram0, rack: &RackTable) -> CliResult<Vec<ShadowColoring0>> {
    let k = d.vertex_names().len();
    let n = rack.size();
    let Some(first) = d.region_names().into_iter().next() else {
        return Ok(Vec::new());
    };
    let mut out = Vec::new();
    let mut colors = vec![0; k];
    loop {
        for seed in 0..n {
            if let Some(s) = shadow_extend0(d, rack, &colors, &first, seed)? {
                out.push(s);
            }
        }
        let mut i = 0;
        loop {
            if i == k {
                return Ok(out);
            }
            colors[i] += 1;
            if colors[i] < n {
                break;
            }
            colors[i] = 0;
            i += 1;
        }
    }
}

fn colorings(ctx: &Context, path: &Path, key: &str, list: bool) -> CliResult<Outcome> {
    let rack = ctx.inputs.rack(key)?;
    let rendered: Vec<String> = match ctx.diagram(path)? {
        AnyDiagram::One(d) => enumerate_colorings(&d, &rack)?
            .iter()
            .map(|c| c.assignments(&d, &rack))
            .collect(),
        AnyDiagram::Zero(d) => shadow_colorings0(&d, &rack)?
            .iter()
            .map(|s| s.assignments(&d, &rack))
            .collect(),
    };
    let mut text = format!("{}\n", rendered.len());
    if list {
        for (i, r) in rendered.iter().enumerate() {
            writeln!(text, "# coloring {}", i + 1).unwrap();
            text.push_str(r);
        }
    }
    Ok(Outcome::ok(
        text,
        json!({ "count": rendered.len(), "colorings": if list { json!(rendered) } else { Value::Null } }),
    ))
}

fn not_extendable(region: &str, seed: &str) -> CliError {
    CliError::precondition(format!(
        "no shadow coloring with {region} = {seed}: region colors disagree around a loop or at an endpoint"
    ))
}

fn shadow(
    ctx: &Context,
    path: &Path,
    key: &str,
    coloring: &Path,
    region: &str,
    seed: &str,
    out: Option<&Path>,
) -> CliResult<Outcome> {
    let rack = ctx.inputs.rack(key)?;
    let x = element(&rack, seed)?;
    let pairs = ctx.assignments(coloring)?;
    let text = match ctx.diagram(path)? {
        AnyDiagram::One(d) => {
            let c = Coloring::from_assignments(&d, &rack, &pairs)?;
            require_valid(c.check(&d, &rack)?, coloring)?;
            shadow_extend(&d, &rack, &c, region, x)?
                .ok_or_else(|| not_extendable(region, seed))?
                .assignments(&d, &rack)
        }
        AnyDiagram::Zero(d) => {
            let names = d.vertex_names();
            let vertices: Vec<Element> = names
                .iter()
                .map(|v| {
                    let token = pairs
                        .iter()
                        .find(|(n, _)| n == v)
                        .map(|(_, t)| t.as_str())
                        .ok_or_else(|| CliError::input(format!("no color for vertex {v}")))?;
                    element(&rack, token)
                })
                .collect::<CliResult<_>>()?;
            shadow_extend0(&d, &rack, &vertices, region, x)?
                .ok_or_else(|| not_extendable(region, seed))?
                .assignments(&d, &rack)
        }
    };
    if let Some(p) = out {
        write_file(p, &text)?;
    }
    Ok(Outcome::ok(text.clone(), json!({ "shadow": text })))
}

fn require_valid(report: qhom_core::quandle::ValidationReport<String>, path: &Path) -> CliResult<()> {
    if report.is_ok() {
        Ok(())
    } else {
        Err(CliError::input(format!(
            "{} is not a valid coloring:\n  {}",
            path.display(),
            report.violations.join("\n  ")
        )))
    }
}

fn extract(ctx: &Context, path: &Path, coloring: &Path, key: &str, out: Option<&Path>) -> CliResult<Outcome> {
    let rack = ctx.inputs.rack(key)?;
    let pairs = ctx.assignments(coloring)?;
    let mut result = json!({});
    let chain = match ctx.diagram(path)? {
        AnyDiagram::One(d) => {
            let shadowed = pairs.iter().any(|(n, _)| d.regions.contains(n));
            if shadowed {
                let s = ShadowColoring::from_assignments(&d, &rack, &pairs)?;
                require_valid(s.check(&d, &rack)?, coloring)?;
                if !d.is_closed() {
                    let ends = endpoint_chain(&d, &rack, &s)?;
                    result["endpoints"] = chain_json(&ends, &rack);
                }
                extract_shadow_chain(&d, &rack, &s)?
            } else {
                let c = Coloring::from_assignments(&d, &rack, &pairs)?;
                require_valid(c.check(&d, &rack)?, coloring)?;
                extract_chain(&d, &rack, &c)?
            }
        }
        AnyDiagram::Zero(d) => {
            let s = ShadowColoring0::from_assignments(&d, &rack, &pairs)?;
            require_valid(s.check(&d, &rack)?, coloring)?;
            extract_chain0(&d, &rack, &s)?
        }
    };
    let text = write_chain(&chain);
    if let Some(p) = out {
        write_file(p, &text)?;
    }
    result["chain"] = chain_json(&chain, &rack);
    Ok(Outcome::ok(text, result))
}

fn realize(ctx: &Context, path: &Path, key: &str, v: Variant, out: Option<&Path>) -> CliResult<Outcome> {
    let rack = ctx.inputs.rack(key)?;
    let c = ctx.chain(path, &rack)?;
    let (d, col) = realize_two_cycle(&rack, &c, v)?;
    let diagram_text = d.to_string();
    let coloring_text = col.assignments(&d, &rack);
    let prefix = out.map(Path::to_path_buf).unwrap_or_else(|| PathBuf::from("realized"));
    let adk = prefix.with_extension("adk");
    let colf = prefix.with_extension("col");
    write_file(&adk, &diagram_text)?;
    write_file(&colf, &coloring_text)?;
    let text = format!(
        "{} crossings, {} edges, {} regions\nwrote {} and {}\n",
        d.crossings.len(),
        d.edges.len(),
        d.regions.len(),
        adk.display(),
        colf.display()
    );
    Ok(Outcome::ok(
        text,
        json!({
            "crossings": d.crossings.len(),
            "diagram": diagram_text,
            "coloring": coloring_text,
            "files": [adk.display().to_string(), colf.display().to_string()],
        }),
    ))
}

pub fn les(ctx: &Context, cmd: &LesCmd) -> CliResult<Outcome> {
    match cmd {
        LesCmd::Check { quandle, degree } => {
            let q = ctx.inputs.quandle(quandle)?;
            ctx.guard(&q, Variant::R, degree + 1)?;
            let r = les_check(&q, *degree)?;
            let n = *degree;
            let mut text = format!(
                "H^D_{n} = {}, H^R_{n} = {}, H^Q_{n} = {}, H^D_{} = {}\n",
                r.groups[0],
                r.groups[1],
                r.groups[2],
                n - 1,
                r.groups[3]
            );
            text.push_str(&map_text("inclusion", &r.inclusion));
            text.push_str(&map_text("quotient", &r.quotient));
            text.push_str(&map_text("connecting", &r.connecting));
            writeln!(text, "exact at H^R_{n}: {}", yes_no(r.exact_at_rack)).unwrap();
            writeln!(text, "exact at H^Q_{n}: {}", yes_no(r.exact_at_quandle)).unwrap();
            Ok(Outcome::ok(text, serde_json::to_value(&r).expect("report serializes")))
        }
        LesCmd::BoundaryMap { quandle, degree } => {
            let q = ctx.inputs.quandle(quandle)?;
            ctx.guard(&q, Variant::R, degree + 1)?;
            let m = les_boundary_map(&q, *degree)?.summary();
            let hq = Complex::shared(&q, Variant::Q)?.homology(*degree)?;
            let hd = Complex::shared(&q, Variant::D)?.homology(degree - 1)?;
            let text = format!(
                "H^Q_{degree} = {hq} -> H^D_{} = {hd}\n{}",
                degree - 1,
                map_text("connecting map", &m)
            );
            Ok(Outcome::ok(
                text,
                json!({
                    "source_group": format_group(hq.free_rank(), hq.torsion()),
                    "target_group": format_group(hd.free_rank(), hd.torsion()),
                    "map": m,
                }),
            ))
        }
    }
}
