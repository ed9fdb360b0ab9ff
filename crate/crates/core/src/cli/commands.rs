use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use anyhow::{bail, ensure, Context, Result};

use crate::graph::{grid_graph, recognize_grid, Graph, GridSpec, VertexId};
use crate::search::{
    grid_lower_bound, max_domain_translations_with, perfect_translations,
    perfect_translations_on_grid, SearchConfig,
};
use crate::signals::{
    export_dot, image_to_signal, read_pgm, read_signal_csv, signal_to_image, write_pgm,
    write_signal_csv, DotOptions, PgmImage,
};
use crate::spectral::{compare_translations, graph_basis, grid_basis, spectral_translate, SUPPORT_THRESHOLD};
use crate::translations::{
    apply_to_signal, candidate_violation, classify, geometrical, is_perfect, matching_shifts,
    orbits, OrbitKind, PartialVertexMap, TranslationClass,
};

use super::{BudgetArgs, Command, Expectation, GraphSource, GridArgs, MapOrShift, OutArgs};

pub(super) fn execute(command: Command) -> Result<i32> {
    match command {
        Command::Gen { grid, out } => {
            let spec = grid.spec()?;
            emit(&out, &grid_graph(&spec).to_edge_list())?;
            Ok(0)
        }
        Command::Verify { source, map, expect } => verify(&source, &map, expect),
        Command::Classify { source, map, expect, budget } => classify_cmd(&source, &map, expect, &budget),
        Command::Search { source, budget, witness_cap, jobs, seed_lower_bound, require_complete, out_dir, out } => {
            let (g, spec) = source.load()?;
            let lower_bound = if seed_lower_bound {
                let spec = spec.as_ref().context("--seed-lower-bound needs --grid")?;
                Some(grid_lower_bound(spec)?)
            } else {
                None
            };
            let config = SearchConfig { budget: budget.budget(), witness_cap, jobs: jobs.into(), lower_bound };
            let outcome = max_domain_translations_with(&g, &config);
            let mut report = outcome.to_string();
            if let Some(spec) = &spec {
                for (i, w) in outcome.witnesses.iter().enumerate() {
                    writeln!(report, "witness {:03}: {}", i + 1, geometry(spec, w))?;
                }
            }
            if let Some(dir) = out_dir {
                write_maps(&dir, &outcome.witnesses)?;
            }
            emit(&out, &report)?;
            if require_complete && !outcome.is_complete() {
                eprintln!("error: search did not complete");
                return Ok(1);
            }
            Ok(0)
        }
        Command::Perfect { source, budget, out_dir, out } => {
            let (g, spec) = source.load()?;
            let budget = budget.budget();
            let found = match &spec {
                Some(spec) => perfect_translations_on_grid(spec, &budget),
                None => perfect_translations(&g, &budget),
            }
            .map_err(|reason| anyhow::anyhow!("search exhausted: {reason}"))?;
            let mut report = format!("perfect translations: {}\n", found.len());
            for (i, f) in found.iter().enumerate() {
                match &spec {
                    Some(spec) => writeln!(report, "map {:03}: {}", i + 1, geometry(spec, f))?,
                    None => writeln!(report, "map {:03}", i + 1)?,
                }
            }
            if let Some(dir) = out_dir {
                write_maps(&dir, &found)?;
            }
            emit(&out, &report)?;
            Ok(0)
        }
        Command::Orbits { map, out } => {
            let f = load_map(&map)?;
            emit(&out, &orbit_report(&f))?;
            Ok(0)
        }
        Command::Translate { mover, signal, fill, out } => {
            ensure!(fill.is_finite(), "--fill must be finite");
            let f = mover.load()?;
            let x = read_signal_csv(&read(&signal)?, Some(f.len()))?;
            emit(&out, &write_signal_csv(&apply_to_signal(&f, &x, fill)?))?;
            Ok(0)
        }
        Command::Spectral { source, signal, to_vertex, scaled, out } => {
            let (g, spec) = source.load()?;
            let x = read_signal_csv(&read(&signal)?, Some(g.num_vertices()))?;
            let v = parse_vertex(&to_vertex, g.num_vertices(), spec.as_ref())?;
            let basis = match &spec {
                Some(spec) => grid_basis(spec)?,
                None => graph_basis(&g)?,
            };
            emit(&out, &write_signal_csv(&spectral_translate(&basis, &x, v, scaled)?))?;
            Ok(0)
        }
        Command::Compare { signal, graphical, spectral, threshold, out } => {
            let x = read_signal_csv(&read(&signal)?, None)?;
            let yg = read_signal_csv(&read(&graphical)?, Some(x.len()))?;
            let ys = read_signal_csv(&read(&spectral)?, Some(x.len()))?;
            emit(&out, &compare_translations(&x, &yg, &ys, threshold)?.to_string())?;
            Ok(0)
        }
        Command::DemoImage { pgm, synthetic, shift, steps, fill, scaled, out_dir } => {
            ensure!(fill.is_finite(), "--fill must be finite");
            let img = match pgm {
                Some(path) => read_pgm(&read(&path)?)?,
                None => {
                    let size: GridSpec = synthetic.parse()?;
                    ensure!(size.dims() == 2, "--synthetic expects WxH");
                    PgmImage::synthetic(size.lengths()[0], size.lengths()[1])
                }
            };
            let demo = demo_image(&img, shift, steps as usize, fill, scaled)?;
            fs::create_dir_all(&out_dir).with_context(|| format!("creating {}", out_dir.display()))?;
            for (name, text) in [
                ("original.pgm", write_pgm(&img)),
                ("graphical.pgm", write_pgm(&demo.graphical)),
                ("spectral.pgm", write_pgm(&demo.spectral)),
                ("report.txt", demo.report.clone()),
            ] {
                write(&out_dir.join(name), &text)?;
            }
            print!("{}", demo.report);
            Ok(0)
        }
        Command::ExportDot { source, map, with_edges, out } => {
            let (g, spec) = source.load()?;
            let f = load_map(&map)?;
            let options = DotOptions { include_edges: with_edges, grid: spec.as_ref() };
            emit(&out, &export_dot(&g, &f, &options)?)?;
            Ok(0)
        }
        Command::ConjectureScan { grids, budget, jobs, out } => {
            let mut report = String::new();
            for text in grids {
                let spec: GridSpec = text.parse()?;
                report.push_str(&scan(&spec, &budget, jobs.into())?);
                report.push('\n');
            }
            emit(&out, &report)?;
            Ok(0)
        }
    }
}

impl GridArgs {
    fn spec(&self) -> Result<GridSpec> {
        grid_spec(&self.grid, self.cyclic)
    }
}

impl GraphSource {
    fn load(&self) -> Result<(Graph, Option<GridSpec>)> {
        match (&self.graph, &self.grid) {
            (Some(path), _) => Ok((Graph::parse_edge_list(&read(path)?)?, None)),
            (None, Some(text)) => {
                let spec = grid_spec(text, self.cyclic)?;
                Ok((grid_graph(&spec), Some(spec)))
            }
            (None, None) => bail!("give --graph or --grid"),
        }
    }
}

impl MapOrShift {
    fn load(&self) -> Result<PartialVertexMap> {
        if let Some(path) = &self.map {
            return load_map(path);
        }
        let (Some(shift), Some(grid)) = (self.shift, &self.grid) else {
            bail!("give --map, or --shift with --grid");
        };
        let spec = grid_spec(grid, self.cyclic)?;
        Ok(repeat(&geometrical(&spec, shift)?, self.steps as usize))
    }
}

fn grid_spec(text: &str, cyclic: bool) -> Result<GridSpec> {
    let spec: GridSpec = text.parse()?;
    Ok(GridSpec::new(spec.lengths().to_vec(), cyclic)?)
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

fn write(path: &Path, text: &str) -> Result<()> {
    fs::write(path, text).with_context(|| format!("writing {}", path.display()))
}

fn emit(out: &OutArgs, text: &str) -> Result<()> {
    match &out.output {
        Some(path) => write(path, text),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn load_map(path: &Path) -> Result<PartialVertexMap> {
    PartialVertexMap::parse(&read(path)?).with_context(|| format!("parsing {}", path.display()))
}

fn write_maps(dir: &PathBuf, maps: &[PartialVertexMap]) -> Result<()> {
    fs::create_dir_all(dir).with_context(|| format!("creating {}", dir.display()))?;
    for (i, f) in maps.iter().enumerate() {
        write(&dir.join(format!("witness_{:03}.map", i + 1)), &f.to_text())?;
    }
    Ok(())
}

/// `f` applied `k` times.
fn repeat(f: &PartialVertexMap, k: usize) -> PartialVertexMap {
    (1..k).fold(f.clone(), |acc, _| acc.then(f))
}

fn geometry(spec: &GridSpec, f: &PartialVertexMap) -> String {
    let shifts = matching_shifts(spec, f);
    if shifts.is_empty() {
        "not geometrical".to_string()
    } else {
        let names: Vec<String> = shifts.iter().map(ToString::to_string).collect();
        format!("geometrical {}", names.join(" "))
    }
}

fn parse_vertex(text: &str, n: usize, spec: Option<&GridSpec>) -> Result<VertexId> {
    let v = if text.contains(',') {
        let spec = spec.context("coordinates need --grid")?;
        let coord = text
            .split(',')
            .map(|t| t.trim().parse::<usize>())
            .collect::<Result<Vec<_>, _>>()
            .with_context(|| format!("bad coordinates `{text}`"))?;
        ensure!(
            coord.len() == spec.dims() && coord.iter().zip(spec.lengths()).all(|(c, l)| c < l),
            "coordinates `{text}` are not on the {spec} grid"
        );
        spec.index(&coord)
    } else {
        VertexId(text.trim().parse().with_context(|| format!("bad vertex `{text}`"))?)
    };
    ensure!(v.0 < n, "vertex {v} out of range for {n} vertices");
    Ok(v)
}

fn expectation_met(class: &TranslationClass, expect: Expectation) -> bool {
    match expect {
        Expectation::NotCandidate => matches!(class, TranslationClass::NotCandidate(_)),
        Expectation::Candidate => !matches!(class, TranslationClass::NotCandidate(_)),
        Expectation::Graphical => {
            matches!(class, TranslationClass::Graphical { .. } | TranslationClass::Perfect)
        }
        Expectation::Perfect => *class == TranslationClass::Perfect,
    }
}

fn check_expectation(met: bool, expect: Option<Expectation>) -> i32 {
    match expect {
        Some(e) if !met => {
            eprintln!("error: expectation `{}` not met", e_name(e));
            1
        }
        _ => 0,
    }
}

fn e_name(e: Expectation) -> &'static str {
    match e {
        Expectation::NotCandidate => "not-candidate",
        Expectation::Candidate => "candidate",
        Expectation::Graphical => "graphical",
        Expectation::Perfect => "perfect",
    }
}

fn verify(source: &GraphSource, map: &Path, expect: Option<Expectation>) -> Result<i32> {
    let (g, _) = source.load()?;
    let f = load_map(map)?;
    let class = match candidate_violation(&g, &f)? {
        Some(v) => TranslationClass::NotCandidate(v),
        None if is_perfect(&g, &f)? => TranslationClass::Perfect,
        None => TranslationClass::Candidate { maximality_undecided: true },
    };
    match &class {
        TranslationClass::NotCandidate(v) => println!("not a candidate: {v}"),
        TranslationClass::Perfect => println!("perfect, c={}", f.domain_size()),
        _ => println!("candidate, c={}", f.domain_size()),
    }
    if expect == Some(Expectation::Graphical) {
        bail!("verify does not decide maximality; use classify --expect graphical");
    }
    Ok(check_expectation(expectation_met(&class, expect.unwrap_or(Expectation::Candidate)), expect))
}

fn classify_cmd(source: &GraphSource, map: &Path, expect: Option<Expectation>, budget: &BudgetArgs) -> Result<i32> {
    let (g, spec) = source.load()?;
    let f = load_map(map)?;
    let class = classify(&g, &f, &budget.budget())?;
    let specs = match spec {
        Some(spec) => vec![spec],
        None => recognize_grid(&g),
    };
    let mut line = class.to_string();
    if class == TranslationClass::Perfect {
        write!(line, ", c={}", f.domain_size())?;
    }
    if !specs.is_empty() && !matches!(class, TranslationClass::NotCandidate(_)) {
        let shifts: Vec<String> = specs
            .iter()
            .flat_map(|s| matching_shifts(s, &f).into_iter().map(move |sh| format!("{sh} on {s}")))
            .collect();
        if shifts.is_empty() {
            line.push_str(", not geometrical");
        } else {
            write!(line, ", geometrical {}", shifts.join(", "))?;
        }
    }
    println!("{line}");
    Ok(check_expectation(expect.is_none_or(|e| expectation_met(&class, e)), expect))
}

fn orbit_report(f: &PartialVertexMap) -> String {
    let mut out = String::new();
    let (mut periodic, mut absorbed, mut malformed) = (0, 0, 0);
    for report in orbits(f) {
        let v = report.visited[0];
        match report.kind {
            OrbitKind::Periodic { period, entry_offset: 0 } => {
                periodic += 1;
                writeln!(out, "{v}: periodic, period {period}").unwrap();
            }
            OrbitKind::Periodic { period, entry_offset } => {
                malformed += 1;
                writeln!(out, "{v}: enters a cycle of period {period} after {entry_offset} steps").unwrap();
            }
            OrbitKind::Absorbed { steps } => {
                absorbed += 1;
                writeln!(out, "{v}: absorbed after {steps} steps").unwrap();
            }
        }
    }
    writeln!(out, "periodic: {periodic}, absorbed: {absorbed}, other: {malformed}").unwrap();
    out
}

pub(crate) struct Demo {
    pub graphical: PgmImage,
    pub spectral: PgmImage,
    pub report: String,
}

/// Shifts `img` by `steps` copies of `shift`, graphically and by
/// convolution with the impulse at the shifted origin. For a backward
/// shift the impulse sits at `len - steps`, the cyclic reading of `-steps`.
pub(crate) fn demo_image(img: &PgmImage, shift: crate::translations::Shift, steps: usize, fill: f64, scaled: bool) -> Result<Demo> {
    let (spec, x) = image_to_signal(img);
    ensure!(shift.dim < 2, "images have two dimensions, got {shift}");
    let len = spec.lengths()[shift.dim];
    ensure!(steps < len, "{steps} steps of {shift} leave the {spec} grid");
    let f = repeat(&geometrical(&spec, shift)?, steps);
    let y_graphical = apply_to_signal(&f, &x, fill)?;

    let mut coord = vec![0, 0];
    coord[shift.dim] = if shift.forward { steps } else { len - steps };
    let target = spec.index(&coord);
    let basis = grid_basis(&spec)?;
    let y_spectral = spectral_translate(&basis, &x, target, scaled)?;
    let comparison = compare_translations(&x, &y_graphical, &y_spectral, SUPPORT_THRESHOLD)?;

    let mut report = format!(
        "image: {}x{}\nshift: {shift} x {steps}\nspectral impulse at: ({},{})\nscaled: {scaled}\n",
        img.width, img.height, coord[0], coord[1]
    );
    report.push_str(&comparison.to_string());
    Ok(Demo {
        graphical: signal_to_image(&spec, &y_graphical, img.maxval)?,
        spectral: signal_to_image(&spec, &y_spectral, img.maxval)?,
        report,
    })
}

fn scan(spec: &GridSpec, budget: &BudgetArgs, jobs: usize) -> Result<String> {
    ensure!(!spec.is_cyclic(), "conjecture-scan works on noncyclic grids");
    let g = grid_graph(spec);
    let config = SearchConfig {
        budget: budget.budget(),
        witness_cap: 64,
        jobs,
        lower_bound: Some(grid_lower_bound(spec)?),
    };
    let outcome = max_domain_translations_with(&g, &config);
    let odd = outcome.witnesses.iter().filter(|w| matching_shifts(spec, w).is_empty()).count();
    let mut line = format!("{spec}: ");
    match &outcome.status {
        crate::search::Status::Complete => {
            write!(line, "complete, best_c={}, witnesses={}", outcome.best_c, outcome.witnesses.len())?;
            if outcome.witness_cap_hit {
                line.push_str(" (cap reached)");
            }
            if odd == 0 && !outcome.witness_cap_hit {
                line.push_str(", all geometrical");
            } else {
                write!(line, ", non-geometrical={odd}")?;
            }
        }
        crate::search::Status::Exhausted(reason) => {
            write!(line, "exhausted ({reason}), best so far {}, no conclusion", outcome.best_c)?;
        }
    }
    write!(line, ", nodes={}", outcome.nodes_expanded)?;
    Ok(line)
}
