//! Command-line front end: preset registry, custom-lattice ingestion,
//! and subcommands wrapping the lattice, cone and scroll computations.
//!
//! Exit codes: 0 success, 2 validation error, 3 bound-stability failure,
//! 4 refused conjecture-dependent computation (missing --assume flags).

mod report;

use std::path::Path;
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Parser, Subcommand};
use num_bigint::BigInt;
use num_traits::Zero;
use serde_json::{json, Value};

use k3cone_core::beauville::{curve_class_from_divisor, riemann_roch};
use k3cone_core::cone::{
    ample_cone, chambers, e_classes, enumerate_square, fundamental_domain, nodal_classes,
    pell_family, positive_cone, ray_square, reduce_to_fundamental, square_zero_classes,
    Rank2Config,
};
use k3cone_core::cubic::{
    abel_jacobi_transfer, nodal_scroll_table, records_to_tsv, speculative_scroll_rows,
    unirational_degree, CubicLatticeData, ScrollRecord, UnirationalAssumptions,
};
use k3cone_core::preset::{resolve, Preset};
use k3cone_core::qlattice::parse_lattice_json;
use k3cone_core::{DivisibilityProfile, Error, GramLattice, IVec2};

use report::{
    config_json, disc_group_json, format_class, gram_json, profile_json, ray_human, ray_json,
    vec_json, Report, CONJECTURAL_CONES, CONJECTURAL_FIBRATION, CONJECTURAL_SCROLLS,
};

#[derive(Parser)]
#[command(
    name = "k3cone",
    version,
    about = "Exact lattice arithmetic, nodal classes, ample cones and scroll calculus for fourfolds of K3^[2] type"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Deterministic JSON output (sorted keys, numbers as decimal strings).
    #[arg(long, global = true)]
    json: bool,
    /// Tab-separated output (scrolls only).
    #[arg(long, global = true)]
    tsv: bool,
    /// Coordinate bound for class enumeration.
    #[arg(long, global = true, default_value_t = 200)]
    bound: u64,
    /// Iteration cap for reflection words.
    #[arg(long, global = true, default_value_t = 10_000)]
    max_iters: u64,
}

#[derive(Subcommand)]
enum Command {
    /// Rank, Gram matrix, signature, determinant, discriminant group and
    /// divisibility profile of a preset or lattice file.
    Lattice { input: String },
    /// Primitive positive-halfspace vectors of a given square.
    Enumerate {
        input: String,
        #[arg(allow_hyphen_values = true)]
        square: String,
        /// Polarization "a,b" (required for lattice files).
        #[arg(long)]
        g: Option<String>,
    },
    /// E-classes with kinds, the nodal subset, curve degrees and squares.
    Nodal { preset: String },
    /// The predicted ample cone.
    Ample { preset: String },
    /// Fundamental-domain chambers cut by (-10)-walls.
    Chambers { preset: String },
    /// Reflect a positive class into the fundamental domain.
    Reduce {
        preset: String,
        /// Coordinates "a,b".
        #[arg(allow_hyphen_values = true)]
        vector: String,
    },
    /// Primitive integral square-zero classes in the positive halfspace.
    Zero { preset: String },
    /// Numerical predictions for nodal scrolls on cubic fourfolds.
    Scrolls {
        #[arg(long, default_value_t = 11)]
        nmax: u64,
        /// Also list double-point counts beyond the nodal values.
        #[arg(long)]
        speculative: bool,
        /// How many speculative counts per degree.
        #[arg(long, default_value_t = 3)]
        slack: u64,
    },
    /// Transferred Beauville form of a cubic preset or custom (b, tsq).
    Fano {
        preset: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        b: Option<i64>,
        #[arg(long, allow_hyphen_values = true)]
        tsq: Option<i64>,
    },
    /// Degree of the scroll-induced unirational parametrization.
    Unirat {
        n: u64,
        delta: u64,
        /// Assert the scroll is not a cone.
        #[arg(long)]
        assume_not_cone: bool,
        /// Assert the scroll has isolated singularities.
        #[arg(long)]
        assume_isolated: bool,
    },
    /// Euler characteristic of a line bundle with the given square.
    Rr {
        #[arg(allow_hyphen_values = true)]
        q: String,
    },
    /// Discriminant group of a preset or lattice file.
    DiscGroup { input: String },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(report) => {
            use std::io::Write;
            let text = if cli.json {
                let mut s = serde_json::to_string_pretty(&report.to_json()).expect("serializable");
                s.push('\n');
                s
            } else {
                report.render_human()
            };
            // A closed pipe (e.g. piping into `head`) is not an error.
            let _ = std::io::stdout().write_all(text.as_bytes());
            ExitCode::SUCCESS
        }
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(exit_code(&err))
        }
    }
}

fn exit_code(err: &Error) -> u8 {
    match err {
        Error::Unstable { .. } => 3,
        Error::MissingAssumptions => 4,
        _ => 2,
    }
}

fn parse_big(text: &str) -> Result<BigInt, Error> {
    BigInt::from_str(text).map_err(|_| Error::Invalid(format!("not an integer: `{text}`")))
}

fn parse_vec(text: &str) -> Result<IVec2, Error> {
    let parts: Vec<&str> = text.split(',').collect();
    if parts.len() != 2 {
        return Err(Error::Invalid(format!(
            "expected coordinates `a,b`, got `{text}`"
        )));
    }
    Ok(IVec2(
        parse_big(parts[0].trim())?,
        parse_big(parts[1].trim())?,
    ))
}

enum Input {
    Preset(Preset),
    File {
        path: String,
        lattice: GramLattice,
        profile: Option<DivisibilityProfile>,
    },
}

impl Input {
    fn name(&self) -> String {
        match self {
            Input::Preset(p) => p.name().to_string(),
            Input::File { path, .. } => path.clone(),
        }
    }

    fn lattice(&self) -> &GramLattice {
        match self {
            Input::Preset(p) => p.lattice(),
            Input::File { lattice, .. } => lattice,
        }
    }

    fn profile(&self) -> Option<&DivisibilityProfile> {
        match self {
            Input::Preset(p) => p.profile(),
            Input::File { profile, .. } => profile.as_ref(),
        }
    }
}

fn resolve_input(text: &str) -> Result<Input, Error> {
    if Path::new(text).exists() {
        let content = std::fs::read_to_string(text)
            .map_err(|e| Error::LatticeFile(format!("{text}: {e}")))?;
        let (lattice, profile) = parse_lattice_json(&content)?;
        return Ok(Input::File {
            path: text.to_string(),
            lattice,
            profile,
        });
    }
    Ok(Input::Preset(resolve(text)?))
}

fn rank2_of(input: &Input, g_flag: Option<&str>) -> Result<Rank2Config, Error> {
    match input {
        Input::Preset(p) => p.rank2_config().cloned(),
        Input::File {
            lattice, profile, ..
        } => {
            let g = match g_flag {
                Some(text) => parse_vec(text)?,
                None => {
                    return Err(Error::Invalid(
                        "lattice files need an explicit polarization: pass --g a,b".into(),
                    ))
                }
            };
            let profile = profile.clone().unwrap_or_else(|| {
                DivisibilityProfile::new(vec![BigInt::from(1), BigInt::from(1)], lattice)
                    .expect("trivial profile")
            });
            Rank2Config::new(lattice.clone(), profile, g)
        }
    }
}

fn preset_cfg(name: &str) -> Result<(Preset, Rank2Config), Error> {
    let preset = resolve(name)?;
    let cfg = preset.rank2_config()?.clone();
    Ok((preset, cfg))
}

fn cfg_config_json(name: &str, cfg: &Rank2Config) -> Value {
    config_json(
        name,
        cfg.lattice(),
        Some(cfg.profile()),
        Some(cfg.polarization()),
    )
}

fn run(cli: &Cli) -> Result<Report, Error> {
    if cli.tsv && !matches!(cli.command, Command::Scrolls { .. }) {
        return Err(Error::Invalid(
            "--tsv is only available for the scrolls subcommand".into(),
        ));
    }
    match &cli.command {
        Command::Lattice { input } => cmd_lattice(input),
        Command::Enumerate { input, square, g } => {
            cmd_enumerate(input, square, g.as_deref(), cli.bound)
        }
        Command::Nodal { preset } => cmd_nodal(preset, cli.bound),
        Command::Ample { preset } => cmd_ample(preset, cli.bound),
        Command::Chambers { preset } => cmd_chambers(preset, cli.bound),
        Command::Reduce { preset, vector } => cmd_reduce(preset, vector, cli.max_iters, cli.bound),
        Command::Zero { preset } => cmd_zero(preset),
        Command::Scrolls {
            nmax,
            speculative,
            slack,
        } => cmd_scrolls(*nmax, *speculative, *slack, cli.tsv),
        Command::Fano { preset, b, tsq } => cmd_fano(preset.as_deref(), *b, *tsq),
        Command::Unirat {
            n,
            delta,
            assume_not_cone,
            assume_isolated,
        } => cmd_unirat(*n, *delta, *assume_not_cone, *assume_isolated),
        Command::Rr { q } => cmd_rr(q),
        Command::DiscGroup { input } => cmd_disc_group(input),
    }
}

fn cmd_lattice(input: &str) -> Result<Report, Error> {
    let input = resolve_input(input)?;
    let lattice = input.lattice();
    let mut report = Report::new("lattice");
    report.config = config_json(&input.name(), lattice, input.profile(), None);
    let det = lattice.determinant();
    let signature = lattice.signature().ok();
    let disc_group = lattice.discriminant_group().ok();
    report.result = json!({
        "rank": lattice.rank(),
        "labels": lattice.labels(),
        "gram": gram_json(lattice),
        "even": lattice.is_even(),
        "determinant": det.to_string(),
        "signature": signature.map(|(p, n)| json!([p, n])).unwrap_or(Value::Null),
        "discriminant_group": disc_group.as_ref().map(disc_group_json).unwrap_or(Value::Null),
        "profile": profile_json(input.profile()),
    });
    report.lines.push(format!("lattice: {}", input.name()));
    report.lines.push(format!("rank: {}", lattice.rank()));
    report
        .lines
        .push(format!("labels: {}", lattice.labels().join(", ")));
    for (i, row) in lattice.gram().iter().enumerate() {
        let cells: Vec<String> = row.iter().map(|x| x.to_string()).collect();
        report.lines.push(format!(
            "gram[{}]: [{}]",
            lattice.labels()[i],
            cells.join(", ")
        ));
    }
    report.lines.push(format!("even: {}", lattice.is_even()));
    report.lines.push(format!("determinant: {det}"));
    match signature {
        Some((p, n)) => report.lines.push(format!("signature: ({p}, {n})")),
        None => report
            .lines
            .push("signature: undefined (degenerate)".into()),
    }
    match &disc_group {
        Some(d) => {
            report.lines.push(format!("discriminant group: {d}"));
            for (o, q) in d.cyclic_orders.iter().zip(&d.q_values) {
                report
                    .lines
                    .push(format!("  generator of Z/{o}: q = {q} (mod 2)"));
            }
        }
        None => report
            .lines
            .push("discriminant group: undefined (odd or degenerate lattice)".into()),
    }
    if let Some(p) = input.profile() {
        let divs: Vec<String> = p.divisors().iter().map(|d| d.to_string()).collect();
        report.lines.push(format!("profile: ({})", divs.join(", ")));
    }
    Ok(report)
}

fn cmd_enumerate(input: &str, square: &str, g: Option<&str>, bound: u64) -> Result<Report, Error> {
    let input = resolve_input(input)?;
    let cfg = rank2_of(&input, g)?;
    let c = parse_big(square)?;
    let found = enumerate_square(&cfg, &c, bound);
    let labels = cfg.lattice().labels().to_vec();
    let mut report = Report::new("enumerate");
    report.config = cfg_config_json(&input.name(), &cfg);
    report.params = json!({"square": c.to_string(), "bound": bound.to_string()});
    let vectors: Vec<Value> = found
        .iter()
        .map(|v| {
            json!({
                "coords": vec_json(v),
                "display": format_class(v, &labels),
                "div": cfg.divisibility(v).to_string(),
            })
        })
        .collect();
    // On diagonal lattices diag(2n, -2) the generating automorphism and
    // seed solutions are reported alongside the enumeration.
    let lat = cfg.lattice();
    let pell = if lat.entry(0, 1).is_zero()
        && *lat.entry(1, 1) == BigInt::from(-2)
        && lat.entry(0, 0) > &BigInt::from(0)
        && (lat.entry(0, 0) % BigInt::from(2)).is_zero()
    {
        let n = u64::try_from(&(lat.entry(0, 0) / BigInt::from(2))).ok();
        n.map(|n| {
            let fam = pell_family(n, &c);
            json!({
                "seeds": fam.seeds.iter().map(|(x, y)| json!([x.to_string(), y.to_string()])).collect::<Vec<_>>(),
                "automorphism": fam.automorphism.iter().map(|row| json!([row[0].to_string(), row[1].to_string()])).collect::<Vec<_>>(),
            })
        })
    } else {
        None
    };
    report.result = json!({
        "count": found.len(),
        "vectors": vectors,
        "pell": pell.clone().unwrap_or(Value::Null),
    });
    report.lines.push(format!(
        "square {c}, bound {bound}: {} classes",
        found.len()
    ));
    for v in &found {
        report.lines.push(format!(
            "  {} {} (div {})",
            format_class(v, &labels),
            v,
            cfg.divisibility(v)
        ));
    }
    if let Some(p) = &pell {
        report.lines.push(format!(
            "pell data: seeds {}, automorphism {}",
            p["seeds"], p["automorphism"]
        ));
    }
    Ok(report)
}

fn class_entry(cfg: &Rank2Config, cl: &k3cone_core::cone::EClass) -> Result<Value, Error> {
    let labels = cfg.lattice().labels();
    let rho = cfg.lattice_vector(&cl.vector);
    let g = cfg.lattice_vector(cfg.polarization());
    let curve = curve_class_from_divisor(&rho, cfg.profile(), &g)?;
    Ok(json!({
        "coords": vec_json(&cl.vector),
        "display": format_class(&cl.vector, labels),
        "kind": cl.kind.name(),
        "square": cfg.form_eval(&cl.vector).to_string(),
        "div": cfg.divisibility(&cl.vector).to_string(),
        "nodal": cl.nodal,
        "curve_degree": curve.degree.to_string(),
        "curve_square": curve.r_square.to_string(),
    }))
}

fn cmd_nodal(preset: &str, bound: u64) -> Result<Report, Error> {
    let (_, cfg) = preset_cfg(preset)?;
    let nodal = nodal_classes(&cfg, bound)?;
    let mut all = e_classes(&cfg, bound);
    for cl in all.iter_mut() {
        cl.nodal = nodal.iter().any(|n| n.vector == cl.vector);
    }
    let labels = cfg.lattice().labels().to_vec();
    let mut report = Report::new("nodal");
    report.config = cfg_config_json(preset, &cfg);
    report.params = json!({"bound": bound.to_string()});
    let entries: Result<Vec<Value>, Error> = all.iter().map(|cl| class_entry(&cfg, cl)).collect();
    report.result = json!({
        "e_classes": entries?,
        "nodal": nodal
            .iter()
            .map(|cl| format_class(&cl.vector, &labels))
            .collect::<Vec<_>>(),
    });
    report.warnings.push(CONJECTURAL_CONES.to_string());
    report
        .lines
        .push(format!("E-classes within bound {bound}: {}", all.len()));
    for cl in &all {
        let rho = cfg.lattice_vector(&cl.vector);
        let g = cfg.lattice_vector(cfg.polarization());
        let curve = curve_class_from_divisor(&rho, cfg.profile(), &g)?;
        report.lines.push(format!(
            "  {} {} {} degree {} (R,R) {}{}",
            format_class(&cl.vector, &labels),
            cl.vector,
            cl.kind.name(),
            curve.degree,
            curve.r_square,
            if cl.nodal { "  [nodal]" } else { "" }
        ));
    }
    report.lines.push(format!(
        "nodal classes: {}",
        nodal
            .iter()
            .map(|cl| format_class(&cl.vector, &labels))
            .collect::<Vec<_>>()
            .join(", ")
    ));
    Ok(report)
}

fn cmd_ample(preset: &str, bound: u64) -> Result<Report, Error> {
    let (_, cfg) = preset_cfg(preset)?;
    let sector = ample_cone(&cfg, bound)?;
    let nodal = nodal_classes(&cfg, bound)?;
    let labels = cfg.lattice().labels().to_vec();
    let mut report = Report::new("ample");
    report.config = cfg_config_json(preset, &cfg);
    report.params = json!({"bound": bound.to_string()});
    report.result = json!({
        "rays": [ray_json(&cfg, &sector.lo), ray_json(&cfg, &sector.hi)],
        "open": true,
        "walls": nodal
            .iter()
            .map(|cl| format_class(&cl.vector, &labels))
            .collect::<Vec<_>>(),
    });
    report.warnings.push(CONJECTURAL_CONES.to_string());
    report
        .lines
        .push("predicted ample cone (open sector):".to_string());
    report
        .lines
        .push(format!("  ray: {}", ray_human(&cfg, &sector.lo)));
    report
        .lines
        .push(format!("  ray: {}", ray_human(&cfg, &sector.hi)));
    report.lines.push(format!(
        "cut by walls orthogonal to: {}",
        nodal
            .iter()
            .map(|cl| format_class(&cl.vector, &labels))
            .collect::<Vec<_>>()
            .join(", ")
    ));
    Ok(report)
}

fn cmd_chambers(preset: &str, bound: u64) -> Result<Report, Error> {
    let (_, cfg) = preset_cfg(preset)?;
    let chs = chambers(&cfg, bound)?;
    let domain = fundamental_domain(&cfg, bound)?;
    let labels = cfg.lattice().labels().to_vec();
    let mut report = Report::new("chambers");
    report.config = cfg_config_json(preset, &cfg);
    report.params = json!({"bound": bound.to_string()});
    report.result = json!({
        "fundamental_domain": {
            "rays": [ray_json(&cfg, &domain.sector.lo), ray_json(&cfg, &domain.sector.hi)],
            "walls": domain.walls.iter().map(|w| format_class(w, &labels)).collect::<Vec<_>>(),
        },
        "chambers": chs.iter().map(|ch| json!({
            "rays": [ray_json(&cfg, &ch.sector.lo), ray_json(&cfg, &ch.sector.hi)],
            "boundary_squares": [
                ray_square(&cfg, &ch.sector.lo).to_string(),
                ray_square(&cfg, &ch.sector.hi).to_string(),
            ],
            "contains_g": ch.contains_g,
        })).collect::<Vec<_>>(),
    });
    report.warnings.push(CONJECTURAL_CONES.to_string());
    report.lines.push(format!(
        "fundamental domain walls: {}",
        if domain.walls.is_empty() {
            "none (positive-cone boundary only)".to_string()
        } else {
            domain
                .walls
                .iter()
                .map(|w| format_class(w, &labels))
                .collect::<Vec<_>>()
                .join(", ")
        }
    ));
    report.lines.push(format!("chambers: {}", chs.len()));
    for (i, ch) in chs.iter().enumerate() {
        report.lines.push(format!(
            "  chamber {}: [{} ; {}]{}",
            i + 1,
            ray_human(&cfg, &ch.sector.lo),
            ray_human(&cfg, &ch.sector.hi),
            if ch.contains_g { "  [contains g]" } else { "" }
        ));
    }
    Ok(report)
}

fn cmd_reduce(preset: &str, vector: &str, max_iters: u64, bound: u64) -> Result<Report, Error> {
    let (_, cfg) = preset_cfg(preset)?;
    let v = parse_vec(vector)?;
    let reduction = reduce_to_fundamental(&cfg, &v, max_iters, bound)?;
    let labels = cfg.lattice().labels().to_vec();
    let mut report = Report::new("reduce");
    report.config = cfg_config_json(preset, &cfg);
    report.params = json!({
        "vector": vec_json(&v),
        "max_iters": max_iters.to_string(),
        "bound": bound.to_string(),
    });
    report.result = json!({
        "reduced": vec_json(&reduction.reduced),
        "reduced_display": format_class(&reduction.reduced, &labels),
        "word": reduction.word.iter().map(|w| format_class(w, &labels)).collect::<Vec<_>>(),
        "word_length": reduction.word.len(),
    });
    report
        .lines
        .push(format!("input: {} {}", format_class(&v, &labels), v));
    report.lines.push(format!(
        "reduced: {} {}",
        format_class(&reduction.reduced, &labels),
        reduction.reduced
    ));
    report.lines.push(format!(
        "word ({} reflections): {}",
        reduction.word.len(),
        if reduction.word.is_empty() {
            "identity".to_string()
        } else {
            reduction
                .word
                .iter()
                .map(|w| format!("s[{}]", format_class(w, &labels)))
                .collect::<Vec<_>>()
                .join(" , ")
        }
    ));
    Ok(report)
}

fn cmd_zero(preset: &str) -> Result<Report, Error> {
    let (_, cfg) = preset_cfg(preset)?;
    let zeros = square_zero_classes(&cfg);
    let cone = positive_cone(&cfg);
    let labels = cfg.lattice().labels().to_vec();
    let mut report = Report::new("zero");
    report.config = cfg_config_json(preset, &cfg);
    report.result = json!({
        "classes": zeros.iter().map(|v| json!({
            "coords": vec_json(v),
            "display": format_class(v, &labels),
        })).collect::<Vec<_>>(),
        "positive_cone_rays": [ray_json(&cfg, &cone.lo), ray_json(&cfg, &cone.hi)],
    });
    report.warnings.push(CONJECTURAL_FIBRATION.to_string());
    if zeros.is_empty() {
        report.lines.push(
            "no integral square-zero classes (the form discriminant is not a perfect square)"
                .into(),
        );
    } else {
        report.lines.push("square-zero classes:".into());
        for v in &zeros {
            report
                .lines
                .push(format!("  {} {}", format_class(v, &labels), v));
        }
    }
    Ok(report)
}

fn scroll_rows_json(rows: &[ScrollRecord]) -> Value {
    Value::Array(
        rows.iter()
            .map(|r| {
                json!({
                    "n": r.n.to_string(),
                    "delta": r.delta.to_string(),
                    "self_int": r.self_int.to_string(),
                    "disc": r.disc.to_string(),
                    "r_square": r.r_square.to_string(),
                    "unirat_deg": r.unirat_deg.as_ref().map(|d| Value::String(d.to_string())).unwrap_or(Value::Null),
                    "warnings": r.warnings.clone(),
                })
            })
            .collect(),
    )
}

fn cmd_scrolls(nmax: u64, speculative: bool, slack: u64, tsv: bool) -> Result<Report, Error> {
    if nmax < 2 {
        return Err(Error::DegreeTooSmall { min: 2, got: nmax });
    }
    let mut rows = nodal_scroll_table(nmax);
    if speculative {
        rows.extend(speculative_scroll_rows(nmax, slack));
        rows.sort_by_key(|r| (r.n, r.delta));
    }
    let mut report = Report::new("scrolls");
    report.params = json!({
        "nmax": nmax.to_string(),
        "speculative": speculative,
        "slack": slack.to_string(),
    });
    report.result = json!({
        "rows": scroll_rows_json(&rows),
        "tsv": records_to_tsv(&rows),
    });
    report.warnings.push(CONJECTURAL_SCROLLS.to_string());
    if tsv {
        // Raw TSV body replaces the human rendering.
        report.lines = records_to_tsv(&rows)
            .trim_end()
            .split('\n')
            .map(String::from)
            .collect();
    } else {
        for line in records_to_tsv(&rows).trim_end().split('\n') {
            report.lines.push(line.replace('\t', "  "));
        }
    }
    Ok(report)
}

fn cmd_fano(preset: Option<&str>, b: Option<i64>, tsq: Option<i64>) -> Result<Report, Error> {
    let (name, data) = match (preset, b, tsq) {
        (Some(name), None, None) => match resolve(name)? {
            Preset::Cubic { data, .. } => (name.to_string(), data),
            _ => {
                return Err(Error::Invalid(format!(
                    "`{name}` is not a cubic preset; use cubic-8 .. cubic-26 or --b/--tsq"
                )))
            }
        },
        (None, Some(b), Some(t)) => (
            format!("custom(b={b}, tsq={t})"),
            CubicLatticeData::from_i64(b, t)?,
        ),
        _ => {
            return Err(Error::Invalid(
                "pass either a cubic preset name or both --b and --tsq".into(),
            ))
        }
    };
    let (lattice, profile) = abel_jacobi_transfer(&data);
    let mut report = Report::new("fano");
    report.config = json!({
        "preset": name,
        "b": data.b.to_string(),
        "tsq": data.t_sq.to_string(),
        "disc": data.disc().to_string(),
    });
    report.result = json!({
        "gram": gram_json(&lattice),
        "labels": lattice.labels(),
        "profile": profile_json(Some(&profile)),
        "determinant": lattice.determinant().to_string(),
    });
    report.lines.push(format!(
        "cubic data: <h2, T> = {}, <T, T> = {}, discriminant {}",
        data.b,
        data.t_sq,
        data.disc()
    ));
    for (i, row) in lattice.gram().iter().enumerate() {
        let cells: Vec<String> = row.iter().map(|x| x.to_string()).collect();
        report.lines.push(format!(
            "gram[{}]: [{}]",
            lattice.labels()[i],
            cells.join(", ")
        ));
    }
    report
        .lines
        .push("profile (2, 1): pairings against g are even, against tau unconstrained".to_string());
    Ok(report)
}

fn cmd_unirat(n: u64, delta: u64, not_cone: bool, isolated: bool) -> Result<Report, Error> {
    let result = unirational_degree(
        n,
        delta,
        UnirationalAssumptions {
            not_cone,
            isolated_singularities: isolated,
        },
    )?;
    let mut report = Report::new("unirat");
    report.params = json!({
        "n": n.to_string(),
        "delta": delta.to_string(),
        "assume_not_cone": not_cone,
        "assume_isolated": isolated,
    });
    report.result = json!({"degree": result.degree.to_string()});
    report.warnings = result.warnings;
    report.lines.push(format!(
        "deg(phi) = C({}, 2) - {} = {}",
        n.saturating_sub(2),
        delta,
        result.degree
    ));
    Ok(report)
}

fn cmd_rr(q: &str) -> Result<Report, Error> {
    let q = parse_big(q)?;
    let chi = riemann_roch(&q)?;
    let mut report = Report::new("rr");
    report.params = json!({"q": q.to_string()});
    report.result = json!({"chi": chi.to_string()});
    report
        .lines
        .push(format!("chi = (q + 4)(q + 6)/8 = {chi} for q = {q}"));
    Ok(report)
}

fn cmd_disc_group(input: &str) -> Result<Report, Error> {
    let input = resolve_input(input)?;
    let lattice = input.lattice();
    let d = lattice.discriminant_group()?;
    let mut report = Report::new("disc-group");
    report.config = config_json(&input.name(), lattice, input.profile(), None);
    report.result = disc_group_json(&d);
    report.lines.push(format!("discriminant group: {d}"));
    for (o, q) in d.cyclic_orders.iter().zip(&d.q_values) {
        report
            .lines
            .push(format!("  generator of Z/{o}: q = {q} (mod 2)"));
    }
    if d.is_trivial() {
        report.lines.push("  (unimodular lattice)".into());
    }
    Ok(report)
}
