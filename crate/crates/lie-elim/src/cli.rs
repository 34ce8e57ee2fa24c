//! Batch front end: graph file parsing, the four subcommands, and
//! deterministic text/CSV/JSON rendering.

use std::fmt::Write as _;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Map, Value};

use crate::core_lie::{witt_ranks, Alphabet, HallBasis, LieElement};
use crate::error::{LieError, Result};
use crate::fp_ideal::{
    decompose_j, fp_graded_ranks, fp_relators, relator_magnus_check, theta_empty_case,
    FPPresentation, OmegaAlgebra,
};
use crate::module_freeness::{check_freeness, FreenessReport};
use crate::pcommute::{eliminate, ideal_generate, raag_ranks, raag_relators, PartialCommutation};
use crate::tensor_oracle::{descent_expand, embed, identity_3_17_check, Embedder};
use crate::zmodule::Lattice;

pub const SCHEMA: &str = "lie-elim/1";

/// A defining graph: `n <count>` on the first content line, then one
/// `a b` edge per line. `#` starts a comment.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GraphFile {
    pub n: usize,
    pub edges: Vec<(usize, usize)>,
}

impl GraphFile {
    pub fn parse(text: &str) -> Result<Self> {
        let mut n = None;
        let mut edges = Vec::new();
        for (k, raw) in text.lines().enumerate() {
            let line_no = k + 1;
            let err = |msg: String| LieError::Parse { line: line_no, msg };
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let fields: Vec<&str> = line.split_whitespace().collect();
            match n {
                None => {
                    if fields.len() != 2 || fields[0] != "n" {
                        return Err(err(format!("expected `n <count>`, found `{line}`")));
                    }
                    let count: usize = fields[1]
                        .parse()
                        .map_err(|_| err(format!("bad vertex count `{}`", fields[1])))?;
                    if count == 0 {
                        return Err(err("vertex count must be positive".into()));
                    }
                    n = Some(count);
                }
                Some(count) => {
                    if fields.len() != 2 {
                        return Err(err(format!("expected `a b`, found `{line}`")));
                    }
                    let mut ends = [0usize; 2];
                    for (slot, f) in ends.iter_mut().zip(&fields) {
                        *slot = f.parse().map_err(|_| err(format!("bad vertex `{f}`")))?;
                        if *slot == 0 || *slot > count {
                            return Err(err(format!("vertex {slot} outside 1..={count}")));
                        }
                    }
                    if ends[0] == ends[1] {
                        return Err(err(format!("self-loop at vertex {}", ends[0])));
                    }
                    let e = (ends[0].max(ends[1]), ends[0].min(ends[1]));
                    if !edges.contains(&e) {
                        edges.push(e);
                    }
                }
            }
        }
        let n = n.ok_or(LieError::Parse {
            line: 0,
            msg: "missing `n <count>` line".into(),
        })?;
        edges.sort();
        Ok(GraphFile { n, edges })
    }

    pub fn theta(&self) -> Result<PartialCommutation> {
        PartialCommutation::new(self.n, &self.edges)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Csv,
    Json,
}

#[derive(Parser, Debug)]
#[command(
    name = "lie-elim",
    version,
    about = "Graded Lie algebras of graph groups and their Formanek-Procesi extensions over Z"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Graded ranks of the raag Lie algebra, with saturation flags.
    Ranks(CommonArgs),
    /// Ranks of gr(FP) and the decomposition checks of its relator ideal.
    Fp(CommonArgs),
    /// Run the elimination algorithm and print the generating sets.
    Eliminate(CommonArgs),
    /// Run the full check suite; exit code 0 iff everything passes.
    Verify(VerifyArgs),
}

#[derive(Args, Debug, Clone)]
pub struct CommonArgs {
    /// Graph file, or `-` for standard input.
    pub input: String,
    /// Degree cutoff (default 6 for n <= 3, otherwise 5).
    #[arg(short = 'd', long = "max-degree")]
    pub max_degree: Option<u32>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Seed for randomized checks.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Print nothing on standard output; only the exit code reports the verdict.
    #[arg(long)]
    pub quiet: bool,
    /// Print the vertex relabeling in text output.
    #[arg(long)]
    pub show_relabel: bool,
}

#[derive(Args, Debug, Clone)]
pub struct VerifyArgs {
    #[command(flatten)]
    pub common: CommonArgs,
    /// Test hook: double the first relator handed to the freeness checks.
    #[arg(long, hide = true)]
    pub corrupt_relator: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CommandKind {
    Ranks,
    Fp,
    Eliminate,
    Verify,
}

impl CommandKind {
    fn name(self) -> &'static str {
        match self {
            CommandKind::Ranks => "ranks",
            CommandKind::Fp => "fp",
            CommandKind::Eliminate => "eliminate",
            CommandKind::Verify => "verify",
        }
    }
}

#[derive(Clone, Debug)]
pub struct RunConfig {
    pub command: CommandKind,
    pub max_degree: u32,
    pub format: Format,
    pub seed: u64,
    pub show_relabel: bool,
    pub corrupt_relator: bool,
}

impl RunConfig {
    pub fn new(command: CommandKind, graph: &GraphFile, max_degree: Option<u32>) -> Result<Self> {
        let max_degree = max_degree.unwrap_or(if graph.n <= 3 { 6 } else { 5 });
        if max_degree == 0 {
            return Err(LieError::InvalidArgument(
                "--max-degree must be at least 1".into(),
            ));
        }
        Ok(RunConfig {
            command,
            max_degree,
            format: Format::Text,
            seed: 0,
            show_relabel: false,
            corrupt_relator: false,
        })
    }
}

/// One table of per-degree values.
#[derive(Clone, Debug)]
pub struct Section {
    pub name: String,
    pub columns: Vec<String>,
    pub rows: Vec<(u32, Vec<Value>)>,
    pub notes: Vec<String>,
}

impl Section {
    fn new(name: &str, columns: &[&str]) -> Self {
        Section {
            name: name.into(),
            columns: columns.iter().map(|c| c.to_string()).collect(),
            rows: vec![],
            notes: vec![],
        }
    }
}

#[derive(Clone, Debug)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug)]
pub struct Report {
    pub command: CommandKind,
    pub n: usize,
    pub max_degree: u32,
    pub relabel: Vec<usize>,
    pub sections: Vec<Section>,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn ok(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    fn check(&mut self, name: impl Into<String>, passed: bool, detail: impl Into<String>) {
        self.checks.push(Check {
            name: name.into(),
            passed,
            detail: detail.into(),
        });
    }

    pub fn to_json(&self) -> Value {
        let mut sections = Map::new();
        for s in &self.sections {
            let mut degrees = Map::new();
            for (d, vals) in &s.rows {
                let row: Map<String, Value> = s
                    .columns
                    .iter()
                    .cloned()
                    .zip(vals.iter().cloned())
                    .collect();
                degrees.insert(d.to_string(), Value::Object(row));
            }
            let mut obj = Map::new();
            obj.insert("degrees".into(), Value::Object(degrees));
            if !s.notes.is_empty() {
                obj.insert("notes".into(), json!(s.notes));
            }
            sections.insert(s.name.clone(), Value::Object(obj));
        }
        let checks: Vec<Value> = self
            .checks
            .iter()
            .map(|c| json!({"name": c.name, "passed": c.passed, "detail": c.detail}))
            .collect();
        json!({
            "schema": SCHEMA,
            "command": self.command.name(),
            "n": self.n,
            "maxDegree": self.max_degree,
            "relabel": self.relabel,
            "ok": self.ok(),
            "sections": sections,
            "checks": checks,
        })
    }

    pub fn to_text(&self, show_relabel: bool) -> String {
        let mut out = String::new();
        let _ = writeln!(
            out,
            "{} n={} max-degree={}",
            self.command.name(),
            self.n,
            self.max_degree
        );
        if show_relabel {
            let pairs: Vec<String> = self
                .relabel
                .iter()
                .enumerate()
                .map(|(i, l)| format!("{}->{}", i + 1, l))
                .collect();
            let _ = writeln!(out, "relabel (working->input): {}", pairs.join(" "));
        }
        for s in &self.sections {
            let _ = writeln!(out, "\n[{}]", s.name);
            if s.columns.is_empty() && s.rows.is_empty() {
                for note in &s.notes {
                    let _ = writeln!(out, "  {note}");
                }
                continue;
            }
            let mut header = vec!["d".to_string()];
            header.extend(s.columns.iter().cloned());
            let mut cells: Vec<Vec<String>> = vec![header];
            for (d, vals) in &s.rows {
                let mut row = vec![d.to_string()];
                row.extend(vals.iter().map(cell_text));
                cells.push(row);
            }
            let widths: Vec<usize> = (0..cells[0].len())
                .map(|j| cells.iter().map(|r| r[j].len()).max().unwrap_or(0))
                .collect();
            for row in &cells {
                let line: Vec<String> = row
                    .iter()
                    .zip(&widths)
                    .map(|(c, w)| format!("{c:>w$}"))
                    .collect();
                let _ = writeln!(out, "{}", line.join("  ").trim_end());
            }
            for note in &s.notes {
                let _ = writeln!(out, "  {note}");
            }
        }
        if !self.checks.is_empty() {
            let _ = writeln!(out, "\n[checks]");
            for c in &self.checks {
                let tag = if c.passed { "PASS" } else { "FAIL" };
                if c.detail.is_empty() {
                    let _ = writeln!(out, "{tag} {}", c.name);
                } else {
                    let _ = writeln!(out, "{tag} {}: {}", c.name, c.detail);
                }
            }
        }
        let _ = writeln!(out, "\nresult: {}", if self.ok() { "ok" } else { "FAILED" });
        out
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        for s in self.sections.iter().filter(|s| !s.columns.is_empty()) {
            let _ = writeln!(out, "section,d,{}", s.columns.join(","));
            for (d, vals) in &s.rows {
                let cols: Vec<String> = vals.iter().map(cell_text).collect();
                let _ = writeln!(out, "{},{},{}", s.name, d, cols.join(","));
            }
        }
        if !self.checks.is_empty() {
            let _ = writeln!(out, "check,passed");
            for c in &self.checks {
                let _ = writeln!(out, "{},{}", c.name, c.passed);
            }
        }
        out
    }

    pub fn render(&self, format: Format, show_relabel: bool) -> String {
        match format {
            Format::Text => self.to_text(show_relabel),
            Format::Csv => self.to_csv(),
            Format::Json => {
                let mut s =
                    serde_json::to_string_pretty(&self.to_json()).expect("report serializes");
                s.push('\n');
                s
            }
        }
    }
}

fn cell_text(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

fn identity_relabel(n: usize) -> Vec<usize> {
    (1..=n).collect()
}

pub fn cmd_ranks(graph: &GraphFile, cfg: &RunConfig) -> Result<Report> {
    let theta = graph.theta()?;
    let r = raag_ranks(&theta, cfg.max_degree)?;
    let mut s = Section::new("raag", &["rank", "idealRank", "saturated"]);
    for d in 1..=cfg.max_degree {
        let k = d as usize - 1;
        s.rows.push((
            d,
            vec![
                json!(r.ranks[k]),
                json!(r.ideal_ranks[k]),
                json!(r.saturated[k]),
            ],
        ));
    }
    let mut rep = Report {
        command: CommandKind::Ranks,
        n: graph.n,
        max_degree: cfg.max_degree,
        relabel: identity_relabel(graph.n),
        sections: vec![s],
        checks: vec![],
    };
    rep.check(
        "raag ideal saturated in every degree",
        r.saturated.iter().all(|&b| b),
        "",
    );
    Ok(rep)
}

pub fn cmd_fp(graph: &GraphFile, cfg: &RunConfig) -> Result<Report> {
    let theta = graph.theta()?;
    let d = cfg.max_degree;
    let fp = fp_graded_ranks(&theta, d)?;
    let mut s = Section::new(
        "fp",
        &[
            "rankJ",
            "rankGr",
            "saturated",
            "raagRank",
            "omegaQuotientRank",
            "splitOK",
            "restrictionOK",
        ],
    );
    for r in &fp.rows {
        s.rows.push((
            r.degree,
            vec![
                json!(r.rank_j),
                json!(r.rank_gr),
                json!(r.saturated),
                json!(r.raag_rank),
                json!(r.omega_quotient_rank),
                json!(r.split_ok),
                json!(r.restriction_ok),
            ],
        ));
    }
    let mut rep = Report {
        command: CommandKind::Fp,
        n: graph.n,
        max_degree: d,
        relabel: fp.relabel.clone(),
        sections: vec![s],
        checks: vec![],
    };
    rep.check(
        "J saturated in every degree",
        fp.rows.iter().all(|r| r.saturated),
        "",
    );
    rep.check(
        "rank gr = raag rank + w-side quotient rank",
        fp.rows.iter().all(|r| r.split_ok),
        "",
    );
    rep.check(
        "J meets L(y) in the raag ideal",
        fp.rows.iter().all(|r| r.restriction_ok),
        "",
    );
    if theta.is_empty() {
        let rows = theta_empty_case(graph.n, d)?;
        let mut s = Section::new(
            "emptyRelation",
            &[
                "witt",
                "rankY",
                "rankOmega",
                "rankJ",
                "independent",
                "eWrOmegaOK",
                "ok",
            ],
        );
        for r in &rows {
            s.rows.push((
                r.degree,
                vec![
                    json!(r.witt),
                    json!(r.rank_y),
                    json!(r.rank_omega),
                    json!(r.rank_j),
                    json!(r.independent),
                    json!(r.e_wr_omega_ok),
                    json!(r.ok),
                ],
            ));
        }
        rep.sections.push(s);
        rep.check("L(A) = L(Y) + L(Omega) + J", rows.iter().all(|r| r.ok), "");
    } else if d >= 2 {
        let dec = decompose_j(&theta, d)?;
        let names: Vec<String> = dec
            .rows
            .last()
            .map(|r| r.pieces.iter().map(|p| p.name.clone()).collect())
            .unwrap_or_default();
        let mut cols: Vec<&str> = vec!["rankJ"];
        cols.extend(names.iter().map(String::as_str));
        cols.extend([
            "independent",
            "spansJ",
            "fullSplit",
            "eWrOmegaOK",
            "omegaViewsAgree",
        ]);
        let mut s = Section::new("decomposition", &cols);
        for r in &dec.rows {
            let mut vals = vec![json!(r.rank_j)];
            vals.extend(r.pieces.iter().map(|p| json!(p.rank)));
            vals.extend([
                json!(r.independent),
                json!(r.spans_j),
                json!(r.full_split),
                json!(r.e_wr_omega_ok),
                json!(r.omega_views_agree),
            ]);
            s.rows.push((r.degree, vals));
        }
        s.notes
            .push("piece subscripts use working vertex labels; see relabel".into());
        rep.sections.push(s);
        rep.check(
            "J is the direct sum of the six piece families",
            dec.ok(),
            "",
        );
    }
    Ok(rep)
}

pub fn cmd_eliminate(graph: &GraphFile, cfg: &RunConfig) -> Result<Report> {
    let theta = graph.theta()?;
    let r = eliminate(&theta, cfg.max_degree)?;
    let steps = r.steps.len();
    let mut cols = vec!["witt".to_string(), "letters".to_string()];
    cols.extend(r.steps.iter().map(|s| format!("B{}", s.kappa + 1)));
    cols.extend(["ideal", "identityOK", "latticeMatch", "independent"].map(String::from));
    let col_refs: Vec<&str> = cols.iter().map(String::as_str).collect();
    let mut table = Section::new("ranks", &col_refs);
    for row in &r.rows {
        let mut vals = vec![json!(row.witt), json!(row.letters)];
        vals.extend((0..steps).map(|k| json!(row.b_ranks.get(k).copied().unwrap_or(0))));
        vals.extend([
            json!(row.ideal_rank),
            json!(row.identity_ok),
            json!(row.lattice_match),
            json!(row.independent),
        ]);
        table.rows.push((row.degree, vals));
    }
    let mut base = Section::new("base", &[]);
    base.notes.push(format!(
        "I_2 free generators: {}",
        r.base_generators.join(" ")
    ));
    let mut sections = vec![table, base];
    for st in &r.steps {
        let mut s = Section::new(&format!("step{}", st.kappa), &["p1", "p2", "pRest"]);
        for c in &st.split {
            s.rows
                .push((c.degree, vec![json!(c.p1), json!(c.p2), json!(c.p_rest)]));
        }
        s.notes.push(format!("adjoined {}", st.next));
        s.notes
            .push(format!("B{}: {}", st.kappa + 1, st.b_generators.join(" ")));
        s.notes
            .push(format!("D{}: {}", st.kappa + 1, st.d_generators.join(" ")));
        sections.push(s);
    }
    let mut rep = Report {
        command: CommandKind::Eliminate,
        n: graph.n,
        max_degree: cfg.max_degree,
        relabel: r.relabel.clone(),
        sections,
        checks: vec![],
    };
    rep.check(
        "rank identity per degree",
        r.rows.iter().all(|x| x.identity_ok),
        "",
    );
    rep.check(
        "ideal pieces span the relator ideal",
        r.rows.iter().all(|x| x.lattice_match),
        "",
    );
    rep.check(
        "pieces jointly independent",
        r.rows.iter().all(|x| x.independent),
        "",
    );
    if !r.chordal {
        rep.sections[0].notes.push("relation is not chordal".into());
    }
    Ok(rep)
}

fn random_element(rng: &mut ChaCha8Rng, basis: &HallBasis, d: u32, terms: usize) -> LieElement {
    let range = basis.degree_range(d);
    let mut u = LieElement::zero();
    while u.is_zero() {
        for _ in 0..terms {
            let i = rng.random_range(range.clone());
            let c: i64 = rng.random_range(-3..=3);
            u.add_term(i, &BigInt::from(c));
        }
    }
    u
}

fn random_degrees(rng: &mut ChaCha8Rng, parts: usize, total_max: u32) -> Vec<u32> {
    let mut degs = vec![1u32; parts];
    let mut budget = total_max.saturating_sub(parts as u32);
    for g in degs.iter_mut() {
        let extra = rng.random_range(0..=budget.min(1));
        *g += extra;
        budget -= extra;
    }
    degs
}

/// Jacobi, the tensor embedding of brackets, identity `[a,b,c..]` as a sum
/// of brackets, and the descent expansion, on seeded random instances.
pub fn random_identity_checks(
    basis: &HallBasis,
    seed: u64,
    instances: usize,
) -> Result<Vec<Check>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let dmax = basis.max_degree();
    let mut emb = Embedder::new(basis);
    let (mut jacobi, mut oracle, mut id317, mut descent) = (0, 0, 0, 0);
    for _ in 0..instances {
        let degs = random_degrees(&mut rng, 3, dmax);
        let [a, b, c] = [0, 1, 2].map(|k| random_element(&mut rng, basis, degs[k], 2));
        let j = basis
            .bracket(&a, &basis.bracket(&b, &c)?)?
            .add(&basis.bracket(&b, &basis.bracket(&c, &a)?)?)
            .add(&basis.bracket(&c, &basis.bracket(&a, &b)?)?);
        jacobi += j.is_zero() as usize;

        let degs = random_degrees(&mut rng, 2, dmax);
        let u = random_element(&mut rng, basis, degs[0], 3);
        let v = random_element(&mut rng, basis, degs[1], 3);
        oracle += (emb.embed(&basis.bracket(&u, &v)?) == emb.embed(&u).commutator(&emb.embed(&v)))
            as usize;

        let parts = rng.random_range(3..=dmax.clamp(3, 5) as usize);
        let degs = random_degrees(&mut rng, parts, dmax);
        let elems: Vec<LieElement> = degs
            .iter()
            .map(|&d| random_element(&mut rng, basis, d, 1))
            .collect();
        id317 += identity_3_17_check(basis, &elems[0], &elems[1], &elems[2..])? as usize;

        let polys: Vec<_> = elems.iter().map(|e| embed(basis, e)).collect();
        descent += (descent_expand(&polys)? == embed(basis, &basis.left_normed(&elems)?)) as usize;
    }
    let mk = |name: &str, hits: usize| Check {
        name: name.into(),
        passed: hits == instances,
        detail: format!("{hits}/{instances} random instances"),
    };
    Ok(vec![
        mk("Jacobi identity", jacobi),
        mk("bracket embeds as tensor commutator", oracle),
        mk("[a,b,c_1..c_r] as a sum of brackets", id317),
        mk("descent expansion of left-normed brackets", descent),
    ])
}

fn freeness_section(name: &str, rep: &FreenessReport) -> Section {
    let mut s = Section::new(
        name,
        &[
            "idealRank",
            "gamma2Rank",
            "actual",
            "predicted",
            "surjective",
            "saturated",
            "ok",
        ],
    );
    for r in &rep.rows {
        s.rows.push((
            r.degree,
            vec![
                json!(r.ideal_rank),
                json!(r.gamma2_rank),
                json!(r.actual),
                json!(r.predicted as u64),
                json!(r.surjective),
                json!(r.saturated),
                json!(r.ok),
            ],
        ));
    }
    s
}

fn corrupt(relators: &mut [LieElement]) {
    if let Some(r) = relators.first_mut() {
        *r = r.scaled(&BigInt::from(2));
    }
}

fn first_failure(rep: &FreenessReport) -> String {
    match rep.rows.iter().find(|r| !r.ok) {
        Some(r) => format!(
            "degree {}: actual {} predicted {} surjective {} saturated {}",
            r.degree, r.actual, r.predicted, r.surjective, r.saturated
        ),
        None => String::new(),
    }
}

pub fn cmd_verify(graph: &GraphFile, cfg: &RunConfig) -> Result<Report> {
    let theta = graph.theta()?;
    let d = cfg.max_degree;
    let mut rep = if graph.n >= 2 {
        cmd_fp(graph, cfg)?
    } else {
        cmd_ranks(graph, cfg)?
    };
    rep.command = CommandKind::Verify;

    let headroom = d.max(4);
    let y_basis = HallBasis::new(Alphabet::numbered("y", graph.n)?, headroom)?;
    let witt = witt_ranks(&y_basis.alphabet().degrees(), d);
    let hall_ok = (1..=d).all(|k| y_basis.degree_range(k).len() == witt[k as usize - 1]);
    rep.check("Hall basis ranks match Witt ranks", hall_ok, "");

    if !theta.is_empty() && d >= 2 {
        let el = eliminate(&theta, d)?;
        rep.check(
            "elimination identity, lattices and independence",
            el.ok(),
            "",
        );
        let mut relators = raag_relators(&y_basis, &theta)?;
        let ideal = ideal_generate(&y_basis, &relators, d)?;
        if cfg.corrupt_relator {
            corrupt(&mut relators);
        }
        let fr = check_freeness(&y_basis, &ideal, &relators, d)?;
        rep.check(
            "raag ideal modulo its commutator is free on the relators",
            fr.ok(),
            first_failure(&fr),
        );
        rep.sections.push(freeness_section("raagFreeness", &fr));
    }

    if graph.n >= 2 {
        let p = FPPresentation::new(&theta)?;
        let a_basis = p.ambient(headroom)?;
        let relators = fp_relators(&p, &a_basis)?;
        if theta.is_empty() {
            let mut r3: Vec<LieElement> = relators.r3.iter().map(|e| e.elem.clone()).collect();
            let j = ideal_generate(&a_basis, &r3, d)?;
            if cfg.corrupt_relator {
                corrupt(&mut r3);
            }
            let fr = check_freeness(&a_basis, &j, &r3, d)?;
            rep.check(
                "J modulo its commutator is free on the [s,y_i,y_j]",
                fr.ok(),
                first_failure(&fr),
            );
            rep.sections.push(freeness_section("fpFreeness", &fr));
        } else if d >= 2 {
            let omega = OmegaAlgebra::new(&p, headroom)?;
            let mut rel = omega.relators(&p.theta)?;
            let i_omega = ideal_generate(&omega.basis, &rel, d)?;
            if cfg.corrupt_relator {
                corrupt(&mut rel);
            }
            let fr = check_freeness(&omega.basis, &i_omega, &rel, d)?;
            rep.check(
                "w-side ideal modulo its commutator is free on the [w_a,w_b]",
                fr.ok(),
                first_failure(&fr),
            );
            rep.sections.push(freeness_section("omegaFreeness", &fr));

            let psi = omega.psi(&a_basis)?;
            let mut injective = true;
            let mut allowed = vec![true; p.n + 1];
            allowed[p.s()] = false;
            for k in 1..=d / 2 {
                let images: Vec<_> = a_basis
                    .degree_range(k)
                    .filter(|&i| a_basis.uses_only(i, &allowed))
                    .map(|i| {
                        psi.apply(&a_basis, &LieElement::basis(i))
                            .and_then(|u| omega.basis.vector(&u, 2 * k))
                    })
                    .collect::<Result<_>>()?;
                let count = images.len();
                injective &=
                    Lattice::span(omega.basis.degree_range(2 * k).len(), images).rank() == count;
            }
            rep.check("y_i -> w_i is injective on L(y)", injective, "");
        }
        let mag = relator_magnus_check(&theta)?;
        let bad: Vec<String> = mag
            .iter()
            .filter(|r| !r.matches)
            .map(|r| r.relator.clone())
            .collect();
        rep.check(
            "lowest Magnus terms of the group relators",
            bad.is_empty(),
            bad.join(" "),
        );
        rep.checks
            .extend(random_identity_checks(&a_basis, cfg.seed, 100)?);
    } else {
        rep.checks
            .extend(random_identity_checks(&y_basis, cfg.seed, 100)?);
    }
    Ok(rep)
}

pub fn run_command(kind: CommandKind, graph: &GraphFile, cfg: &RunConfig) -> Result<Report> {
    match kind {
        CommandKind::Ranks => cmd_ranks(graph, cfg),
        CommandKind::Fp => {
            if graph.n < 2 {
                return Err(LieError::InvalidArgument(
                    "fp needs at least 2 vertices".into(),
                ));
            }
            cmd_fp(graph, cfg)
        }
        CommandKind::Eliminate => cmd_eliminate(graph, cfg),
        CommandKind::Verify => cmd_verify(graph, cfg),
    }
}

fn read_input(path: &str) -> Result<String> {
    let read = if path == "-" {
        std::io::read_to_string(std::io::stdin())
    } else {
        std::fs::read_to_string(path)
    };
    read.map_err(|e| LieError::InvalidArgument(format!("cannot read {path}: {e}")))
}

/// Runs a parsed command line. Returns the rendered report (empty when
/// quiet) and whether every check passed.
pub fn run(cli: &Cli) -> Result<(String, bool)> {
    let (kind, common, corrupt_relator) = match &cli.command {
        Command::Ranks(a) => (CommandKind::Ranks, a, false),
        Command::Fp(a) => (CommandKind::Fp, a, false),
        Command::Eliminate(a) => (CommandKind::Eliminate, a, false),
        Command::Verify(v) => (CommandKind::Verify, &v.common, v.corrupt_relator),
    };
    let graph = GraphFile::parse(&read_input(&common.input)?)?;
    let mut cfg = RunConfig::new(kind, &graph, common.max_degree)?;
    cfg.format = common.format;
    cfg.seed = common.seed;
    cfg.show_relabel = common.show_relabel;
    cfg.corrupt_relator = corrupt_relator;
    let report = run_command(kind, &graph, &cfg)?;
    let text = if common.quiet {
        String::new()
    } else {
        report.render(cfg.format, cfg.show_relabel)
    };
    Ok((text, report.ok()))
}
