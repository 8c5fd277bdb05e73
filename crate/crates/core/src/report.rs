//! Commands behind the CLI, each producing a [`Report`] that renders as text or JSON.
//!
//! Rendering is deterministic: everything is built from sorted tables, so the same input gives
//! byte-identical output.

use std::fmt::Write as _;
use std::sync::Arc;

use serde::Serialize;
use thiserror::Error;

use crate::centralizer::{CentralizationMatrix, CentralizerContext, CentralizerError, CentralizerReport, IdentityReport};
use crate::check::{run_checks, CheckReport, Level};
use crate::crossed::{InstanceError, Limits, PointedCrossedCategory, RawInstance, Violation};
use crate::group::{FiniteGroup, GroupError};
use crate::instance::{parse_cayley, parse_instance, serialize_instance, ParseError};
use crate::lattice::{self, DatumView, Lattice, LatticeError};
use crate::simples::{IrrSet, SimplesError};

/// Failures, grouped by the exit status they map to.
#[derive(Debug, Error)]
pub enum CmdError {
    #[error("{0}")]
    Usage(String),
    #[error("parse error: {0}")]
    Parse(#[from] ParseError),
    #[error("invalid instance: {0}")]
    Validation(String),
    #[error("property failure: {0}")]
    Property(String),
    #[error("limit exceeded: {0}")]
    Limits(String),
}

impl CmdError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CmdError::Usage(_) => 1,
            CmdError::Parse(_) => 2,
            CmdError::Validation(_) => 3,
            CmdError::Property(_) => 4,
            CmdError::Limits(_) => 5,
        }
    }
}

impl From<InstanceError> for CmdError {
    fn from(e: InstanceError) -> Self {
        match e {
            InstanceError::LimitExceeded(_) | InstanceError::Group { err: GroupError::LimitExceeded { .. }, .. } => {
                CmdError::Limits(e.to_string())
            }
            _ => CmdError::Validation(e.to_string()),
        }
    }
}

impl From<SimplesError> for CmdError {
    fn from(e: SimplesError) -> Self {
        CmdError::Property(e.to_string())
    }
}

impl From<LatticeError> for CmdError {
    fn from(e: LatticeError) -> Self {
        match e {
            LatticeError::LimitExceeded { .. } | LatticeError::Group(GroupError::LimitExceeded { .. }) => {
                CmdError::Limits(e.to_string())
            }
            _ => CmdError::Property(e.to_string()),
        }
    }
}

impl From<CentralizerError> for CmdError {
    fn from(e: CentralizerError) -> Self {
        match e {
            CentralizerError::Lattice(l) => l.into(),
            _ => CmdError::Property(e.to_string()),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Text,
    Structured,
}

#[derive(Debug, Clone, Serialize)]
pub struct InstanceSummary {
    pub g: String,
    pub g_order: usize,
    pub x: String,
    pub x_order: usize,
    pub declared_order: u32,
    pub order: u32,
    pub orbits: usize,
    pub grading_surjective: bool,
    pub untwisted: bool,
}

impl InstanceSummary {
    pub fn of(cat: &PointedCrossedCategory) -> Self {
        InstanceSummary {
            g: cat.g().name().to_string(),
            g_order: cat.g().order(),
            x: cat.x().name().to_string(),
            x_order: cat.x().order(),
            declared_order: cat.declared_order(),
            order: cat.order(),
            orbits: cat.orbit_reps().len(),
            grading_surjective: cat.grading_surjective(),
            untwisted: cat.is_untwisted(),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct SimpleRow {
    pub label: String,
    pub orbit_rep: usize,
    pub orbit_size: usize,
    pub char_index: usize,
    pub stabilizer_order: usize,
    pub degree: u32,
    pub fpdim: u32,
    pub support: Vec<usize>,
    pub dual: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct SimplesSection {
    pub simples: Vec<SimpleRow>,
    pub global_dimension: u64,
    /// `fusion[a][b]` lists `(label, multiplicity)` of `S_a ⊗ S_b`
    pub fusion: Vec<Vec<Vec<(String, u32)>>>,
}

#[derive(Debug, Clone, Serialize)]
pub struct SubcatRow {
    pub index: usize,
    pub h_order: usize,
    pub y_order: usize,
    pub fpdim: u64,
    pub members: Vec<String>,
    pub datum: DatumView,
}

#[derive(Debug, Clone, Serialize)]
pub struct SubcatsSection {
    pub subcategories: Vec<SubcatRow>,
    /// covering relations `(smaller, larger)`
    pub edges: Vec<(usize, usize)>,
}

#[derive(Debug, Clone, Serialize)]
pub struct RepKernel {
    pub label: String,
    pub kernel: Vec<usize>,
}

#[derive(Debug, Clone, Serialize)]
pub struct CentralizeEntry {
    pub report: CentralizerReport,
    /// kernels of the ordinary representations in the input subcategory
    pub rep_kernels: Vec<RepKernel>,
}

#[derive(Debug, Clone, Serialize)]
pub struct CentralizeSection {
    pub nondegenerate: bool,
    pub mueger_center: Vec<String>,
    pub routes_agree: bool,
    pub matrix: CentralizationMatrix,
    pub entries: Vec<CentralizeEntry>,
    pub identities: IdentityReport,
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub command: String,
    pub instance: InstanceSummary,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub simples: Option<SimplesSection>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub subcategories: Option<SubcatsSection>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub centralizers: Option<CentralizeSection>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub checks: Option<CheckReport>,
}

impl Report {
    fn new(command: &str, cat: &PointedCrossedCategory) -> Self {
        Report {
            command: command.into(),
            instance: InstanceSummary::of(cat),
            simples: None,
            subcategories: None,
            centralizers: None,
            checks: None,
        }
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Structured => {
                let mut s = serde_json::to_string_pretty(self).expect("reports serialize");
                s.push('\n');
                s
            }
            Format::Text => self.to_text(),
        }
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let i = &self.instance;
        let _ = writeln!(
            s,
            "instance: G = {} (order {}), X = {} (order {}), N = {} (declared {}), {} orbits",
            i.g, i.g_order, i.x, i.x_order, i.order, i.declared_order, i.orbits
        );
        let _ = writeln!(s, "grading surjective: {}, untwisted: {}", yes(i.grading_surjective), yes(i.untwisted));
        if self.command == "validate" {
            s.push_str("valid\n");
        }
        if let Some(sec) = &self.simples {
            text_simples(&mut s, sec);
        }
        if let Some(sec) = &self.subcategories {
            text_subcats(&mut s, sec);
        }
        if let Some(sec) = &self.centralizers {
            text_centralizers(&mut s, sec);
        }
        if let Some(c) = &self.checks {
            text_checks(&mut s, c);
        }
        s
    }
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn text_simples(s: &mut String, sec: &SimplesSection) {
    let _ = writeln!(s, "\nsimples: {}", sec.simples.len());
    let _ = writeln!(s, "{:>8} {:>6} {:>6} {:>6} {:>6} {:>6} {:>8}  support", "label", "rep", "orbit", "|G_x|", "deg", "fpdim", "dual");
    for r in &sec.simples {
        let sup: Vec<String> = r.support.iter().map(usize::to_string).collect();
        let _ = writeln!(
            s,
            "{:>8} {:>6} {:>6} {:>6} {:>6} {:>6} {:>8}  {{{}}}",
            r.label,
            r.orbit_rep,
            r.orbit_size,
            r.stabilizer_order,
            r.degree,
            r.fpdim,
            r.dual,
            sup.join(",")
        );
    }
    let _ = writeln!(s, "global dimension: {}", sec.global_dimension);
    s.push_str("\nfusion rules:\n");
    for (a, row) in sec.fusion.iter().enumerate() {
        for (b, dec) in row.iter().enumerate().skip(a) {
            let terms: Vec<String> =
                dec.iter().map(|(l, m)| if *m == 1 { l.clone() } else { format!("{m}*{l}") }).collect();
            let _ = writeln!(s, "  {} x {} = {}", sec.simples[a].label, sec.simples[b].label, terms.join(" + "));
        }
    }
}

fn text_subcats(s: &mut String, sec: &SubcatsSection) {
    let _ = writeln!(s, "\nfusion subcategories: {}", sec.subcategories.len());
    for r in &sec.subcategories {
        let nontrivial = r.datum.lambda.iter().filter(|t| t.2 != 0).count();
        let _ = writeln!(
            s,
            "  #{:<3} |H|={:<3} |Y|={:<3} fpdim={:<5} lambda: {} nontrivial of {}  H={:?} Y={:?}  [{}]",
            r.index,
            r.h_order,
            r.y_order,
            r.fpdim,
            nontrivial,
            r.datum.lambda.len(),
            r.datum.h,
            r.datum.y,
            r.members.join(" ")
        );
    }
    let edges: Vec<String> = sec.edges.iter().map(|(a, b)| format!("{a}->{b}")).collect();
    let _ = writeln!(s, "covering relations: {}", edges.join(" "));
}

fn text_centralizers(s: &mut String, sec: &CentralizeSection) {
    let _ = writeln!(s, "\nMüger center: [{}] (nondegenerate: {})", sec.mueger_center.join(" "), yes(sec.nondegenerate));
    let _ = writeln!(s, "double braiding and p-indexed criterion agree: {}", yes(sec.routes_agree));
    s.push_str("centralization matrix:\n");
    s.push_str(&sec.matrix.to_text());
    for e in &sec.entries {
        let r = &e.report;
        let _ = writeln!(s, "\n#{} (|H|={}, |Y|={})' = #{} [{}] fpdim {}", r.input, r.datum.h.len(), r.datum.y.len(), r.centralizer, r.members.join(" "), r.fpdim);
        let _ = writeln!(
            s,
            "  H' = support of D: {}; support bound: {}; supports commute: {}; dimension residue: {}",
            yes(r.h_of_centralizer_is_support),
            yes(r.support_bound),
            yes(r.supports_commute),
            r.dimension_residue
        );
        match &r.prediction {
            Some(p) => {
                let _ = writeln!(
                    s,
                    "  prediction: H' = d(Y) {}, d(T) = H {}, |T| {} (expected {}), dim {} (expected {}), lambda~ {}: {}",
                    yes(p.h_matches),
                    yes(p.t_image_matches),
                    p.t_order,
                    p.t_order_expected,
                    p.dim,
                    p.dim_expected,
                    yes(p.lambda_matches),
                    if p.holds() { "agrees" } else { "DISAGREES" }
                );
            }
            None => s.push_str("  prediction: not applicable (needs surjective grading and trivial Müger center)\n"),
        }
        for k in &e.rep_kernels {
            let _ = writeln!(s, "  ker {} = {:?}", k.label, k.kernel);
        }
    }
    let id = &sec.identities;
    let _ = writeln!(
        s,
        "\nidentities: dimension {}, double centralizer {}, (D v E)' {}, (D n E)' {}, support of D' {}",
        ok(id.dimension.is_empty()),
        ok(id.double_centralizer.is_empty()),
        ok(id.join_to_meet.is_empty()),
        ok(id.meet_to_join.is_empty()),
        ok(id.support_of_centralizer.is_empty())
    );
    let _ = writeln!(s, "note: {}", crate::centralizer::NONDEGENERACY_NOTE);
}

fn ok(b: bool) -> &'static str {
    if b {
        "ok"
    } else {
        "FAIL"
    }
}

fn text_checks(s: &mut String, c: &CheckReport) {
    let level = match c.level {
        Level::Fast => "fast",
        Level::Full => "full",
    };
    let _ = writeln!(s, "\nchecks ({level}):");
    for o in &c.outcomes {
        let _ = writeln!(s, "  [{}] {}: {}", if o.passed { "pass" } else { "FAIL" }, o.module, o.name);
        for w in &o.witnesses {
            let _ = writeln!(s, "         witness: {w}");
        }
    }
    if !c.observations.is_empty() {
        s.push_str("observations:\n");
        for o in &c.observations {
            let _ = writeln!(s, "  [{}] {}: {}", if o.holds { "holds" } else { "fails" }, o.name, o.detail);
        }
    }
    let passed = c.outcomes.iter().filter(|o| o.passed).count();
    let _ = writeln!(s, "{passed}/{} properties pass", c.outcomes.len());
}

/// Instance text, or a built-in name such as `builtin:s3` or `builtin:twisted_c2`.
pub fn load_raw(source: &str, text: Option<&str>) -> Result<RawInstance, CmdError> {
    if let Some(name) = source.strip_prefix("builtin:") {
        return builtin_instance(name).ok_or_else(|| CmdError::Usage(format!("unknown built-in instance `{name}`")));
    }
    let text = text.ok_or_else(|| CmdError::Usage(format!("cannot read `{source}`")))?;
    Ok(parse_instance(text)?)
}

/// Untwisted doubles of the built-in groups plus the hand-built twisted instances.
pub fn builtin_instance(name: &str) -> Option<RawInstance> {
    match name {
        "twisted_c2" => Some(RawInstance::twisted_c2()),
        "twisted_s3" => Some(RawInstance::twisted_s3()),
        "central_c2" => Some(RawInstance::central_c2()),
        _ => FiniteGroup::builtin(name).map(|g| RawInstance::untwisted_double(&g)),
    }
}

pub fn load(raw: &RawInstance, limits: Limits) -> Result<Arc<PointedCrossedCategory>, CmdError> {
    Ok(Arc::new(PointedCrossedCategory::validate(raw, limits)?))
}

/// Violations of an invalid instance, for reporting; empty when it validates.
pub fn violations(raw: &RawInstance, limits: Limits) -> Vec<Violation> {
    match PointedCrossedCategory::validate(raw, limits) {
        Err(InstanceError::Violations(v)) => v,
        _ => Vec::new(),
    }
}

pub fn cmd_validate(raw: &RawInstance, limits: Limits) -> Result<Report, CmdError> {
    let cat = load(raw, limits)?;
    Ok(Report::new("validate", &cat))
}

/// A group given as a built-in name or as Cayley-table text.
pub fn cmd_gen_double(spec: &str, table: Option<&str>) -> Result<String, CmdError> {
    let g = match table {
        Some(text) => {
            let (name, rows) = parse_cayley(text, spec)?;
            FiniteGroup::from_table(&name, &rows).map_err(|e| CmdError::Validation(e.to_string()))?
        }
        None => FiniteGroup::builtin(spec).ok_or_else(|| {
            CmdError::Usage(format!("unknown group `{spec}`; built-ins are c1..c12, klein4, s3, d4, q8"))
        })?,
    };
    Ok(serialize_instance(&RawInstance::untwisted_double(&g)))
}

fn simples_section(irr: &IrrSet) -> Result<SimplesSection, CmdError> {
    let cat = irr.cat();
    let duals = irr.duals()?;
    let simples = irr
        .simples()
        .iter()
        .map(|s| SimpleRow {
            label: s.label(),
            orbit_rep: s.orbit_rep,
            orbit_size: cat.orbit(s.orbit_rep).len(),
            char_index: s.char_index,
            stabilizer_order: s.stabilizer_order,
            degree: s.degree,
            fpdim: s.fpdim,
            support: s.support.clone(),
            dual: irr.get(duals[s.index]).label(),
        })
        .collect();
    let table = irr.fusion_table()?;
    let fusion = table
        .iter()
        .map(|row| row.iter().map(|dec| dec.iter().map(|&(c, m)| (irr.get(c).label(), m)).collect()).collect())
        .collect();
    Ok(SimplesSection { simples, global_dimension: irr.global_dimension(), fusion })
}

pub fn cmd_simples(cat: Arc<PointedCrossedCategory>) -> Result<Report, CmdError> {
    let mut r = Report::new("simples", &cat);
    let irr = IrrSet::new(cat)?;
    r.simples = Some(simples_section(&irr)?);
    Ok(r)
}

fn subcats_section(irr: &IrrSet, lat: &Lattice) -> SubcatsSection {
    let subcategories = lat
        .subcats
        .iter()
        .enumerate()
        .map(|(i, sc)| SubcatRow {
            index: i,
            h_order: sc.datum.h.order(),
            y_order: sc.datum.y.order(),
            fpdim: sc.fpdim,
            members: sc.members.indices().iter().map(|&m| irr.get(m).label()).collect(),
            datum: (&sc.datum).into(),
        })
        .collect();
    SubcatsSection { subcategories, edges: lat.hasse_edges() }
}

/// The report and, when asked for, the DOT text of the Hasse diagram.
pub fn cmd_subcats(cat: Arc<PointedCrossedCategory>, want_dot: bool) -> Result<(Report, Option<String>), CmdError> {
    let mut r = Report::new("subcats", &cat);
    let irr = IrrSet::new(cat)?;
    let lat = lattice::enumerate_subcategories(&irr)?;
    r.subcategories = Some(subcats_section(&irr, &lat));
    let dot = want_dot.then(|| lat.to_dot(&irr));
    Ok((r, dot))
}

/// Resolves `N`, `#N`, `(h,y)` or `(h,y,k)` against the lattice; `(h,y)` must be unambiguous
/// and `k` picks among data with `|H| = h`, `|Y| = y` in lattice order.
pub fn select_datum(lat: &Lattice, selector: &str) -> Result<usize, CmdError> {
    let sel = selector.trim();
    let bad = || CmdError::Usage(format!("bad datum selector `{selector}`; use N, #N, (h,y) or (h,y,k)"));
    if let Some(inner) = sel.strip_prefix('(').and_then(|t| t.strip_suffix(')')) {
        let parts: Result<Vec<usize>, _> = inner.split(',').map(|p| p.trim().parse::<usize>()).collect();
        let parts = parts.map_err(|_| bad())?;
        let (h, y, k) = match parts[..] {
            [h, y] => (h, y, None),
            [h, y, k] => (h, y, Some(k)),
            _ => return Err(bad()),
        };
        let hits: Vec<usize> = (0..lat.len())
            .filter(|&i| lat.subcats[i].datum.h.order() == h && lat.subcats[i].datum.y.order() == y)
            .collect();
        return match (k, hits.len()) {
            (_, 0) => Err(CmdError::Usage(format!("no datum with |H| = {h}, |Y| = {y}"))),
            (None, 1) => Ok(hits[0]),
            (None, n) => Err(CmdError::Usage(format!(
                "{n} data have |H| = {h}, |Y| = {y}; add a third component 0..{} to choose",
                n - 1
            ))),
            (Some(k), n) if k < n => Ok(hits[k]),
            (Some(k), n) => Err(CmdError::Usage(format!("index {k} out of range for {n} matching data"))),
        };
    }
    let i: usize = sel.trim_start_matches('#').parse().map_err(|_| bad())?;
    if i < lat.len() {
        Ok(i)
    } else {
        Err(CmdError::Usage(format!("datum index {i} out of range (0..{})", lat.len())))
    }
}

/// Centralizers of the selected subcategories, or of all of them when `selector` is `None`.
pub fn cmd_centralize(cat: Arc<PointedCrossedCategory>, selector: Option<&str>) -> Result<Report, CmdError> {
    let mut r = Report::new("centralize", &cat);
    let irr = IrrSet::new(cat.clone())?;
    let lat = lattice::enumerate_subcategories(&irr)?;
    let ctx = CentralizerContext::new(&irr, &lat)?;
    let chosen: Vec<usize> = match selector {
        Some(s) => vec![select_datum(&lat, s)?],
        None => (0..lat.len()).collect(),
    };
    let e = cat.x().identity();
    let entries: Vec<CentralizeEntry> = chosen
        .iter()
        .map(|&i| {
            let rep_kernels = lat.subcats[i]
                .members
                .indices()
                .into_iter()
                .filter(|&m| irr.get(m).orbit_rep == e)
                .map(|m| RepKernel {
                    label: irr.get(m).label(),
                    kernel: irr.local_char(m, e).expect("component").kernel().members().to_vec(),
                })
                .collect();
            CentralizeEntry { report: ctx.report(i), rep_kernels }
        })
        .collect();
    let failed: Vec<usize> = entries.iter().filter(|e| !e.report.passes()).map(|e| e.report.input).collect();
    let identities = ctx.identities();
    r.centralizers = Some(CentralizeSection {
        nondegenerate: ctx.is_nondegenerate(),
        mueger_center: ctx.mueger_center().members.indices().iter().map(|&m| irr.get(m).label()).collect(),
        routes_agree: ctx.routes_agree,
        matrix: ctx.matrix.clone(),
        entries,
        identities: identities.clone(),
    });
    if !failed.is_empty() || !identities.is_clean() {
        return Err(CmdError::Property(format!(
            "centralizer identities fail for {:?}\n{}",
            failed,
            r.to_text()
        )));
    }
    Ok(r)
}

pub fn cmd_check(cat: Arc<PointedCrossedCategory>, level: Level) -> Report {
    let mut r = Report::new("check", &cat);
    r.checks = Some(run_checks(cat, level));
    r
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cat(name: &str) -> Arc<PointedCrossedCategory> {
        load(&builtin_instance(name).unwrap(), Limits::default()).unwrap()
    }

    #[test]
    fn reports_are_deterministic() {
        let a = cmd_subcats(cat("s3"), true).unwrap();
        let b = cmd_subcats(cat("s3"), true).unwrap();
        assert_eq!(a.0.render(Format::Structured), b.0.render(Format::Structured));
        assert_eq!(a.0.render(Format::Text), b.0.render(Format::Text));
        assert_eq!(a.1, b.1);
    }

    #[test]
    fn selectors() {
        let c = cat("c2");
        let irr = IrrSet::new(c).unwrap();
        let lat = lattice::enumerate_subcategories(&irr).unwrap();
        assert_eq!(select_datum(&lat, "(1,1)").unwrap(), select_datum(&lat, "0").unwrap());
        assert!(matches!(select_datum(&lat, "(2,2)"), Err(CmdError::Usage(_))));
        assert!(select_datum(&lat, "(2,2,1)").is_ok());
        assert!(select_datum(&lat, "#9").is_err());
        assert!(select_datum(&lat, "(a)").is_err());
    }

    #[test]
    fn toric_code_centralize_all() {
        let r = cmd_centralize(cat("c2"), None).unwrap();
        let sec = r.centralizers.unwrap();
        let selfc = sec.entries.iter().filter(|e| e.report.fpdim == 2 && e.report.centralizer == e.report.input).count();
        assert_eq!(selfc, 3);
        assert!(sec.nondegenerate);
    }

    #[test]
    fn gen_double_round_trips() {
        let text = cmd_gen_double("c2", None).unwrap();
        let raw = parse_instance(&text).unwrap();
        assert_eq!(serialize_instance(&raw), text);
        assert!(cmd_validate(&raw, Limits::default()).is_ok());
        assert!(matches!(cmd_gen_double("c13", None), Err(CmdError::Usage(_))));
    }
}
