use std::path::PathBuf;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use forestry::graph::{expand_lift, girth, random_girth_tower, Sign, SignString, SignedLift};
use forestry::MultiGraph;

use crate::input::load_graph;
use crate::output::{json, Format, Table};
use crate::{Common, Failure};

#[derive(Serialize)]
struct LevelRecord {
    level: usize,
    n: usize,
    m: usize,
    girth: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    signs: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    file: Option<PathBuf>,
}

#[derive(Serialize)]
struct LiftReport {
    graph: String,
    stalled: bool,
    levels: Vec<LevelRecord>,
}

fn record(level: usize, g: &MultiGraph, signs: Option<String>, file: Option<PathBuf>) -> LevelRecord {
    LevelRecord {
        level,
        n: g.vertex_count(),
        m: g.edge_count(),
        girth: girth(g).girth.to_string(),
        signs,
        file,
    }
}

pub fn run(signs: Option<&str>, random: bool, tower: Option<usize>, common: &Common) -> Result<(), Failure> {
    let (id, g) = load_graph(common)?;
    let report = match (signs, tower) {
        (_, Some(levels)) => build_tower(id, &g, levels, common)?,
        (Some(s), None) => {
            let parsed: SignString = s.parse().map_err(|e: forestry::Error| Failure::Input(e.to_string()))?;
            single(id, g, parsed.0, common)?
        }
        (None, None) if random => {
            let mut rng = ChaCha8Rng::seed_from_u64(common.seed);
            let signs = (0..g.edge_count())
                .map(|_| if rng.random_bool(0.5) { Sign::Minus } else { Sign::Plus })
                .collect();
            single(id, g, signs, common)?
        }
        (None, None) => return Err(Failure::Input("lift needs one of --signs, --random or --tower".into())),
    };
    let text = render(&report, common.format);
    // The lifted graph itself goes to stdout when there is no --out.
    if common.out.is_none() && tower.is_none() {
        eprint!("{text}");
    } else {
        print!("{text}");
    }
    Ok(())
}

fn single(id: String, g: MultiGraph, signs: Vec<Sign>, common: &Common) -> Result<LiftReport, Failure> {
    let lift = SignedLift::new(g, signs).map_err(|e| Failure::Input(e.to_string()))?;
    let h = expand_lift(&lift);
    match &common.out {
        Some(path) => std::fs::write(path, h.to_string())?,
        None => print!("{h}"),
    }
    let levels = vec![
        record(0, lift.base(), None, None),
        record(1, &h, Some(lift.sign_string()), common.out.clone()),
    ];
    Ok(LiftReport { graph: id, stalled: false, levels })
}

fn build_tower(id: String, g: &MultiGraph, levels: usize, common: &Common) -> Result<LiftReport, Failure> {
    let dir = common.out.clone().ok_or_else(|| Failure::Input("--tower needs --out <directory>".into()))?;
    std::fs::create_dir_all(&dir)?;
    let t = random_girth_tower(g, levels, usize::MAX, common.seed)?;
    let mut records = vec![record(0, g, None, None)];
    for (i, (h, signs)) in t.graphs.iter().zip(std::iter::once(None).chain(t.signs.iter().map(Some))).enumerate().skip(1) {
        let file = dir.join(format!("level_{i}.txt"));
        std::fs::write(&file, h.to_string())?;
        let signs = signs.map(|s| s.iter().map(|x| x.symbol()).collect());
        records.push(record(i, h, signs, Some(file)));
    }
    Ok(LiftReport { graph: id, stalled: t.stalled, levels: records })
}

fn render(report: &LiftReport, format: Format) -> String {
    if format == Format::Json {
        return json(report);
    }
    let mut t = Table::new(vec!["level", "n", "m", "girth", "file"]);
    for l in &report.levels {
        t.push(vec![
            l.level.to_string(),
            l.n.to_string(),
            l.m.to_string(),
            l.girth.clone(),
            l.file.as_ref().map(|f| f.display().to_string()).unwrap_or_default(),
        ]);
    }
    let mut out = if format == Format::Tsv { t.tsv() } else { t.pretty() };
    if report.stalled {
        out.push_str("tower stalled: no lift reduced the number of shortest cycles\n");
    }
    out
}
