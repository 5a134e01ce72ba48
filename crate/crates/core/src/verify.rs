//! Instance-level checks of the known results on total domination
//! polynomials and evidence gathering for the open conjectures.
//!
//! Each check yields a [`CheckReport`]. Reports carry a [`Level`]: a failing
//! `Theorem` check is a defect (or a counterexample to a published claim),
//! `Conjecture` failures are preserved as witnesses, and `Descriptive`
//! reports record behaviour of asymptotic statements without a verdict on
//! small cases.

use std::collections::BTreeMap;

use num_bigint::{BigInt, Sign};
use num_complex::Complex64;
use num_rational::BigRational;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::closed_forms::*;
use crate::corpus::{self, CorpusConfig, CorpusGraph};
use crate::enumeration::{
    count_total_dominating_sets, total_domination_polynomial_ie, CountTable, EnumerationConfig,
};
use crate::error::{invalid, Error, Result};
use crate::graph::{self, Graph};
use crate::polynomial::Polynomial;
use crate::roots::{
    self, count_nonzero_real_roots, count_real_roots, disc_bound_radius, find_roots, integer_roots,
    Bound,
};

/// Largest order on which the two enumeration routes are compared.
pub const IE_CHECK_MAX_ORDER: usize = 14;
/// Tolerance on `||z + 1| - 1|` for complete bipartite roots.
pub const CIRCLE_TOLERANCE: f64 = 1e-8;
/// Matching distance between numeric and analytic root multisets.
pub const MATCH_TOLERANCE: f64 = 1e-6;
/// Bound on `ln(n) ((ln n - 1) / n)^n` asserted from `n = 20` on.
pub const LIMIT_LEMMA_BOUND: f64 = 1e-6;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Pass,
    Fail,
    Unconverged,
    Skipped,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Level {
    Theorem,
    Conjecture,
    Descriptive,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CheckReport {
    pub check_id: String,
    pub level: Level,
    pub instance: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub witness: Option<Value>,
    pub metrics: BTreeMap<String, Value>,
}

impl CheckReport {
    /// A passing report; downgrade with [`fail`](Self::fail) and friends.
    pub fn new(check_id: &str, level: Level, instance: impl Into<String>) -> Self {
        CheckReport {
            check_id: check_id.into(),
            level,
            instance: instance.into(),
            status: Status::Pass,
            witness: None,
            metrics: BTreeMap::new(),
        }
    }

    pub fn metric(mut self, name: &str, value: impl Serialize) -> Self {
        self.metrics.insert(
            name.into(),
            serde_json::to_value(value).expect("metrics serialise"),
        );
        self
    }

    pub fn fail(mut self, witness: Value) -> Self {
        self.status = Status::Fail;
        self.witness = Some(witness);
        self
    }

    pub fn unconverged(mut self) -> Self {
        self.status = Status::Unconverged;
        self
    }

    pub fn skip(mut self, reason: &str) -> Self {
        self.status = Status::Skipped;
        self.metric("skip_reason", reason)
    }

    pub fn with_instance(mut self, instance: impl Into<String>) -> Self {
        self.instance = instance.into();
        self
    }

    pub fn with_level(mut self, level: Level) -> Self {
        self.level = level;
        self
    }

    pub fn is_theorem_failure(&self) -> bool {
        self.level == Level::Theorem && self.status == Status::Fail
    }
}

/// Short label for a graph.
pub fn describe(g: &Graph) -> String {
    format!("n={} m={}", g.order(), g.edge_count())
}

/// Everything needed to rebuild a graph.
pub fn graph_witness(g: &Graph) -> Value {
    json!({"n": g.order(), "edges": g.edges()})
}

/// Compares the pruned search with the inclusion–exclusion sum.
pub fn check_ie_identity(g: &Graph, cfg: &EnumerationConfig) -> Result<CheckReport> {
    let report = CheckReport::new("ie_identity", Level::Theorem, describe(g));
    if g.order() > IE_CHECK_MAX_ORDER.min(cfg.cap) {
        return Ok(report.skip("order exceeds inclusion-exclusion check limit"));
    }
    let search = count_total_dominating_sets(g, cfg)?.to_polynomial();
    let ie = total_domination_polynomial_ie(g, cfg)?;
    Ok(if search == ie {
        report.metric("polynomial", &search)
    } else {
        report.fail(json!({"graph": graph_witness(g), "search": search, "inclusion_exclusion": ie}))
    })
}

fn monotone_report(g: &Graph, table: &CountTable) -> CheckReport {
    let report = CheckReport::new("monotone_counts", Level::Theorem, describe(g));
    let bad = table.monotonicity_violations();
    if bad.is_empty() {
        report
    } else {
        report.fail(json!({"graph": graph_witness(g), "counts": table, "indices": bad}))
    }
}

/// `d_t(G, i) <= d_t(G, i + 1)` for `0 <= i < n/2`.
pub fn check_monotone_counts(g: &Graph, cfg: &EnumerationConfig) -> Result<CheckReport> {
    if g.order() > cfg.cap {
        return Ok(
            CheckReport::new("monotone_counts", Level::Theorem, describe(g))
                .skip("order exceeds enumeration cap"),
        );
    }
    Ok(monotone_report(g, &count_total_dominating_sets(g, cfg)?))
}

/// Unimodality of the coefficient sequence. Conjecture-level by default.
pub fn check_unimodality(p: &Polynomial, instance: &str) -> CheckReport {
    let report = CheckReport::new("unimodality", Level::Conjecture, instance);
    match p.is_unimodal() {
        Err(_) => report.skip("zero polynomial"),
        Ok(u) if u.unimodal => report.metric("mode", u.mode),
        Ok(u) => report
            .metric("mode", u.mode)
            .fail(json!({"coefficients": p})),
    }
}

fn integer_root_report(g: &Graph, dt: &Polynomial) -> Result<CheckReport> {
    let n = g.order();
    let delta = g.min_degree()?;
    let theorem_regime = 3 * delta >= 2 * n;
    let level = if theorem_regime {
        Level::Theorem
    } else {
        Level::Conjecture
    };
    let report = CheckReport::new("integer_roots", level, describe(g));
    if delta == 0 {
        return Ok(report.skip("isolated vertex"));
    }
    let radius = disc_bound_radius(g)?;
    let found = integer_roots(dt, radius)?;
    let report = report
        .metric("integer_roots", &found)
        .metric("min_degree", delta)
        .metric("radius", radius);
    Ok(if found.iter().all(|z| (-3..=0).contains(z)) {
        report
    } else {
        report.fail(json!({"graph": graph_witness(g), "polynomial": dt, "integer_roots": found}))
    })
}

/// Integer roots of `D_t(G)` lie in `{-3, -2, -1, 0}`. Theorem-level when
/// `δ >= 2n/3`, conjecture-level otherwise.
pub fn check_integer_root_conjecture(g: &Graph, cfg: &EnumerationConfig) -> Result<CheckReport> {
    if g.order() > cfg.cap {
        return Ok(
            CheckReport::new("integer_roots", Level::Conjecture, describe(g))
                .skip("order exceeds enumeration cap"),
        );
    }
    let dt = count_total_dominating_sets(g, cfg)?.to_polynomial();
    integer_root_report(g, &dt)
}

/// No nonzero real root of `D_t(K_n)` for even `n`.
pub fn check_kn_even_no_real(n: usize) -> Result<CheckReport> {
    if n < 2 || n % 2 == 1 {
        return invalid("K_n real-root check needs even n >= 2");
    }
    let report = CheckReport::new("kn_even_no_real", Level::Theorem, format!("K_{n}"));
    let count = count_nonzero_real_roots(&dt_complete(n)?)?;
    let report = report.metric("nonzero_real_roots", count);
    Ok(if count == 0 {
        report
    } else {
        report.fail(json!({"n": n, "polynomial": dt_complete(n)?, "nonzero_real_roots": count}))
    })
}

/// No nonzero real root of `D_t(B_n)`.
///
/// The witness on failure lists the real roots found numerically. The count
/// for the published closed form is recorded alongside as a metric.
pub fn check_bn_no_nonzero_real(n: usize) -> Result<CheckReport> {
    if n < 2 {
        return invalid("B_n real-root check needs n >= 2");
    }
    let dt = dt_book(n)?;
    let count = count_nonzero_real_roots(&dt)?;
    let published = count_nonzero_real_roots(&dt_book_published(n)?)?;
    let report = CheckReport::new("bn_no_nonzero_real", Level::Theorem, format!("B_{n}"))
        .metric("nonzero_real_roots", count)
        .metric("published_formula_nonzero_real_roots", published);
    if count == 0 {
        return Ok(report);
    }
    let real: Vec<f64> = match find_roots(&dt) {
        Ok(rs) => rs
            .roots
            .iter()
            .filter(|r| r.im.abs() <= 1e-9 * (1.0 + r.re.abs()))
            .map(|r| r.re)
            .collect(),
        Err(_) => Vec::new(),
    };
    Ok(report.fail(json!({
        "n": n,
        "polynomial": dt,
        "nonzero_real_roots": count,
        "approximate_real_roots": real,
    })))
}

/// A rational strictly between `-n` and `-ln n`, within `2^-40` of `-ln n`.
fn below_neg_log(n: usize) -> BigRational {
    let scaled = ((n as f64).ln() + 1e-9) * 2f64.powi(40);
    BigRational::new(
        -BigInt::from(scaled.ceil() as u64),
        BigInt::from(1u64) << 40u32,
    )
}

fn sign_label(s: Sign) -> i8 {
    match s {
        Sign::Minus => -1,
        Sign::NoSign => 0,
        Sign::Plus => 1,
    }
}

/// Whether `D_t(F_n)` has a certified real root in `(-n, -ln n)`.
///
/// Certified by a sign change between `-n` and a rational just below
/// `-ln n`, or else by a Sturm count on that interval. Descriptive: small
/// `n` may legitimately fail.
pub fn check_fn_root_interval(n: usize) -> Result<CheckReport> {
    if n < 2 {
        return invalid("F_n interval check needs n >= 2");
    }
    let f = dt_friendship(n)?;
    let mut left = BigRational::from_integer(-BigInt::from(n));
    let right = below_neg_log(n);
    let sign_left = f.sign_at(&left);
    let sign_right = f.sign_at(&right);
    if sign_left == Sign::NoSign {
        // keep the interval open at -n
        left += BigRational::new(BigInt::from(1), BigInt::from(1u64) << 40u32);
    }
    let sign_change = sign_left == Sign::Minus && sign_right == Sign::Plus;
    let sturm = if sign_change {
        None
    } else {
        Some(count_real_roots(
            &f,
            &Bound::Finite(left),
            &Bound::Finite(right.clone()),
        )?)
    };
    let certified = sign_change || sturm.is_some_and(|c| c >= 1);
    let report = CheckReport::new("fn_root_interval", Level::Descriptive, format!("F_{n}"))
        .metric("sign_at_neg_n", sign_label(sign_left))
        .metric("sign_at_neg_ln_n", sign_label(sign_right))
        .metric("sturm_count", sturm)
        .metric("right_endpoint", right.to_string())
        .metric(
            "certified_by",
            if sign_change {
                Some("sign_change")
            } else if certified {
                Some("sturm")
            } else {
                None
            },
        );
    Ok(if certified {
        report
    } else {
        report.fail(json!({
            "n": n,
            "sign_at_neg_n": sign_label(sign_left),
            "sign_at_neg_ln_n": sign_label(sign_right),
            "sturm_count": sturm,
        }))
    })
}

/// Least `n` in `from..=to` from which every tested `F_n` has a certified
/// root in `(-n, -ln n)`, together with the per-`n` reports.
pub fn fn_interval_threshold(from: usize, to: usize) -> Result<(Option<usize>, Vec<CheckReport>)> {
    let reports: Vec<CheckReport> = (from..=to)
        .into_par_iter()
        .map(check_fn_root_interval)
        .collect::<Result<_>>()?;
    let mut threshold = None;
    for r in reports.iter().rev() {
        if r.status != Status::Pass {
            break;
        }
        threshold = Some(r.instance[2..].parse::<usize>().expect("label F_n"));
    }
    Ok((threshold, reports))
}

/// `ln(n) ((ln n - 1) / n)^n`.
pub fn limit_lemma_value(n: usize) -> f64 {
    let n = n as f64;
    let l = n.ln();
    (l.ln() + n * ((l - 1.0) / n).ln()).exp()
}

/// All roots of `D_t(K_{m,n})` lie on `|z + 1| = 1` and match
/// `{ω - 1 : ω^m = 1 or ω^n = 1, ω ≠ 1}` plus a double root at zero.
pub fn check_kmn_circle(m: usize, n: usize) -> Result<CheckReport> {
    if m < 1 || n < 1 || m + n > 60 {
        return invalid("K_{m,n} circle check needs m, n >= 1 and m + n <= 60");
    }
    let report = CheckReport::new("kmn_circle", Level::Theorem, format!("K_{m},{n}"));
    let rs = find_roots(&dt_complete_bipartite(m, n)?)?;
    let numeric: Vec<Complex64> = rs.nonzero_points().collect();
    let max_dev = numeric
        .iter()
        .map(|z| ((z + 1.0).norm() - 1.0).abs())
        .fold(0.0, f64::max);
    let mut analytic: Vec<Complex64> = Vec::new();
    for k in [m, n] {
        for j in 1..k {
            analytic.push(
                Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI * j as f64 / k as f64) - 1.0,
            );
        }
    }
    let mut used = vec![false; analytic.len()];
    let mut max_match: f64 = 0.0;
    let mut unmatched = Vec::new();
    for z in &numeric {
        let best = analytic
            .iter()
            .enumerate()
            .filter(|(i, _)| !used[*i])
            .map(|(i, w)| (i, (z - w).norm()))
            .min_by(|a, b| a.1.total_cmp(&b.1));
        match best {
            Some((i, d)) if d <= MATCH_TOLERANCE => {
                used[i] = true;
                max_match = max_match.max(d);
            }
            _ => unmatched.push(json!([z.re, z.im])),
        }
    }
    let report = report
        .metric("max_circle_deviation", max_dev)
        .metric("max_match_distance", max_match)
        .metric("zero_multiplicity", rs.zero_multiplicity);
    let ok = max_dev <= CIRCLE_TOLERANCE
        && unmatched.is_empty()
        && numeric.len() == analytic.len()
        && rs.zero_multiplicity == 2;
    Ok(if ok {
        report
    } else if !rs.all_converged() {
        report.unconverged()
    } else {
        report.fail(json!({
            "m": m,
            "n": n,
            "max_circle_deviation": max_dev,
            "unmatched": unmatched,
            "zero_multiplicity": rs.zero_multiplicity,
        }))
    })
}

/// Family graphs with a closed form, each paired with that closed form,
/// restricted to order `<= max_order`.
pub fn closed_form_instances(
    max_order: usize,
    cfg: &EnumerationConfig,
) -> Result<Vec<(String, Graph, Polynomial)>> {
    let mut out = Vec::new();
    for n in 2..=max_order {
        out.push((format!("K_{n}"), graph::complete(n)?, dt_complete(n)?));
    }
    for n in (2..).take_while(|n| 2 * n < max_order) {
        out.push((format!("F_{n}"), graph::friendship(n)?, dt_friendship(n)?));
    }
    for n in (2..).take_while(|n| 2 * n + 2 <= max_order) {
        out.push((format!("B_{n}"), graph::book(n)?, dt_book(n)?));
    }
    for m in 1..max_order {
        for n in 1..=max_order - m {
            out.push((
                format!("K_{m},{n}"),
                graph::complete_bipartite(m, n)?,
                dt_complete_bipartite(m, n)?,
            ));
        }
    }
    // G ∘ K̄_m over several G of each order
    for n_g in 2..=max_order {
        for m in (1..).take_while(|m| n_g * (1 + m) <= max_order) {
            let bar = graph::empty_graph(m)?;
            let mut bases = vec![("P", graph::path(n_g)?), ("K", graph::complete(n_g)?)];
            if n_g >= 3 {
                bases.push(("C", graph::cycle(n_g)?));
            }
            bases.push(("S", graph::star(n_g - 1)?));
            for (name, base) in bases {
                out.push((
                    format!("{name}_{n_g}∘K̄_{m}"),
                    graph::corona(&base, &bar)?,
                    dt_corona_empty(n_g, m)?,
                ));
            }
        }
    }
    // K̄_m ∘ H over small H
    let hs = [
        ("K_1", graph::complete(1)?),
        ("K_2", graph::complete(2)?),
        ("K̄_2", graph::empty_graph(2)?),
        ("P_3", graph::path(3)?),
        ("K_3", graph::complete(3)?),
        ("C_4", graph::cycle(4)?),
        ("K̄_3", graph::empty_graph(3)?),
        ("S_3", graph::star(3)?),
        ("P_5", graph::path(5)?),
    ];
    for (name, h) in &hs {
        for m in (1..).take_while(|m| m * (1 + h.order()) <= max_order) {
            out.push((
                format!("K̄_{m}∘{name}"),
                graph::corona(&graph::empty_graph(m)?, h)?,
                dt_empty_corona(h, m, cfg)?,
            ));
        }
    }
    Ok(out)
}

/// Family instances used for identity sweeps (no closed form needed).
pub fn family_instances(max_order: usize) -> Result<Vec<(String, Graph)>> {
    let mut out: Vec<(String, Graph)> =
        closed_form_instances(max_order, &EnumerationConfig::default())?
            .into_iter()
            .map(|(name, g, _)| (name, g))
            .collect();
    for n in 2..=max_order {
        out.push((format!("P_{n}"), graph::path(n)?));
        if n >= 3 {
            out.push((format!("C_{n}"), graph::cycle(n)?));
        }
    }
    for n in 1..max_order {
        out.push((format!("S_{n}"), graph::star(n)?));
    }
    Ok(out)
}

fn closed_form_report(
    name: &str,
    g: &Graph,
    formula: &Polynomial,
    cfg: &EnumerationConfig,
) -> Result<CheckReport> {
    let report = CheckReport::new("closed_forms", Level::Theorem, name);
    let counted = count_total_dominating_sets(g, cfg)?.to_polynomial();
    Ok(if &counted == formula {
        report
    } else {
        report.fail(json!({"graph": graph_witness(g), "formula": formula, "enumerated": counted}))
    })
}

/// Published book-graph formula against exhaustive counts.
pub fn check_book_formula_published(n: usize, cfg: &EnumerationConfig) -> Result<CheckReport> {
    let g = graph::book(n)?;
    let report = CheckReport::new("book_formula_published", Level::Theorem, format!("B_{n}"));
    if g.order() > cfg.cap {
        return Ok(report.skip("order exceeds enumeration cap"));
    }
    let published = dt_book_published(n)?;
    let counted = count_total_dominating_sets(&g, cfg)?.to_polynomial();
    Ok(if published == counted {
        report
    } else {
        report.fail(json!({
            "graph": graph_witness(&g),
            "published": published,
            "enumerated": counted,
            "difference": &published - &counted,
        }))
    })
}

fn default_closed_form_order() -> usize {
    12
}
fn default_unimodal_max() -> usize {
    50
}
fn default_kmn_max_sum() -> usize {
    40
}

/// One entry of a campaign configuration.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "check", rename_all = "snake_case", deny_unknown_fields)]
pub enum CheckSpec {
    /// Closed forms against enumeration on family graphs.
    ClosedForms {
        #[serde(default = "default_closed_form_order")]
        max_order: usize,
    },
    /// Published book-graph formula against enumeration.
    BookFormulaPublished {
        from: usize,
        to: usize,
    },
    /// Both enumeration routes on the corpus (up to `max_order`) and on
    /// family graphs.
    IeIdentity {
        #[serde(default = "default_closed_form_order")]
        max_order: usize,
    },
    MonotoneCounts,
    DiscBound,
    IntegerRoots,
    /// Isolated-vertex corpus graphs have the zero polynomial.
    ZeroPolynomial,
    /// `D_t(K_n)` and `D_t(F_n)` for `n = 2..=families_max` (theorem
    /// level), then every corpus graph (conjecture level).
    Unimodality {
        #[serde(default = "default_unimodal_max")]
        families_max: usize,
    },
    KnEvenNoReal {
        from: usize,
        to: usize,
    },
    BnNoNonzeroReal {
        from: usize,
        to: usize,
    },
    FnRootInterval {
        from: usize,
        to: usize,
    },
    KmnCircle {
        #[serde(default = "default_kmn_max_sum")]
        max_sum: usize,
    },
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct CampaignConfig {
    /// Overrides `corpus.seed` when present.
    pub seed: Option<u64>,
    pub cap: usize,
    pub corpus: CorpusConfig,
    pub checks: Vec<CheckSpec>,
}

impl Default for CampaignConfig {
    fn default() -> Self {
        CampaignConfig {
            seed: None,
            cap: graph::DEFAULT_ENUMERATION_CAP,
            corpus: CorpusConfig::default(),
            checks: Vec::new(),
        }
    }
}

impl CampaignConfig {
    /// Every check at its default range.
    pub fn default_campaign() -> Self {
        CampaignConfig {
            checks: vec![
                CheckSpec::ClosedForms { max_order: 12 },
                CheckSpec::BookFormulaPublished { from: 2, to: 5 },
                CheckSpec::IeIdentity { max_order: 12 },
                CheckSpec::MonotoneCounts,
                CheckSpec::DiscBound,
                CheckSpec::IntegerRoots,
                CheckSpec::ZeroPolynomial,
                CheckSpec::Unimodality { families_max: 50 },
                CheckSpec::KnEvenNoReal { from: 2, to: 20 },
                CheckSpec::BnNoNonzeroReal { from: 2, to: 30 },
                CheckSpec::FnRootInterval { from: 2, to: 100 },
                CheckSpec::KmnCircle { max_sum: 40 },
            ],
            ..Self::default()
        }
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::InvalidInput(format!("campaign config: {e}")))
    }

    fn corpus_config(&self) -> CorpusConfig {
        CorpusConfig {
            seed: self.seed.unwrap_or(self.corpus.seed),
            ..self.corpus.clone()
        }
    }
}

struct Analysed {
    graph: CorpusGraph,
    table: CountTable,
}

fn analyse_corpus(cfg: &CampaignConfig, ecfg: &EnumerationConfig) -> Result<Vec<Analysed>> {
    corpus::generate(&cfg.corpus_config())
        .into_par_iter()
        .map(|graph| {
            let table = count_total_dominating_sets(&graph.graph, ecfg)?;
            Ok(Analysed { graph, table })
        })
        .collect()
}

fn per_graph<F>(corpus: &[Analysed], f: F) -> Result<Vec<CheckReport>>
where
    F: Fn(&Analysed) -> Result<Option<CheckReport>> + Sync,
{
    let out: Vec<Option<CheckReport>> = corpus
        .par_iter()
        .map(|a| Ok(f(a)?.map(|r| r.with_instance(a.graph.label()))))
        .collect::<Result<_>>()?;
    Ok(out.into_iter().flatten().collect())
}

fn needs_corpus(spec: &CheckSpec) -> bool {
    matches!(
        spec,
        CheckSpec::IeIdentity { .. }
            | CheckSpec::MonotoneCounts
            | CheckSpec::DiscBound
            | CheckSpec::IntegerRoots
            | CheckSpec::ZeroPolynomial
            | CheckSpec::Unimodality { .. }
    )
}

/// Runs every configured check in order. Reports come back in configuration
/// order, and within a check in corpus or parameter order, independent of
/// thread scheduling.
pub fn run_campaign(cfg: &CampaignConfig) -> Result<Vec<CheckReport>> {
    let ecfg = EnumerationConfig::with_cap(cfg.cap);
    let corpus = if cfg.checks.iter().any(needs_corpus) {
        analyse_corpus(cfg, &ecfg)?
    } else {
        Vec::new()
    };
    let mut reports = Vec::new();
    for spec in &cfg.checks {
        reports.extend(run_check(spec, &corpus, &ecfg)?);
    }
    Ok(reports)
}

fn run_check(
    spec: &CheckSpec,
    corpus: &[Analysed],
    ecfg: &EnumerationConfig,
) -> Result<Vec<CheckReport>> {
    match *spec {
        CheckSpec::ClosedForms { max_order } => closed_form_instances(max_order, ecfg)?
            .par_iter()
            .map(|(name, g, formula)| closed_form_report(name, g, formula, ecfg))
            .collect(),
        CheckSpec::BookFormulaPublished { from, to } => (from..=to)
            .map(|n| check_book_formula_published(n, ecfg))
            .collect(),
        CheckSpec::IeIdentity { max_order } => {
            let mut out = per_graph(corpus, |a| {
                Ok((a.graph.order <= max_order).then(|| {
                    let ie = total_domination_polynomial_ie(&a.graph.graph, ecfg);
                    let search = a.table.to_polynomial();
                    let report = CheckReport::new("ie_identity", Level::Theorem, "");
                    match ie {
                        Ok(ie) if ie == search => report,
                        Ok(ie) => report.fail(json!({
                            "graph": graph_witness(&a.graph.graph),
                            "search": search,
                            "inclusion_exclusion": ie,
                        })),
                        Err(e) => report.skip(&e.to_string()),
                    }
                }))
            })?;
            let families: Vec<CheckReport> = family_instances(max_order)?
                .par_iter()
                .map(|(name, g)| Ok(check_ie_identity(g, ecfg)?.with_instance(name.clone())))
                .collect::<Result<_>>()?;
            out.extend(families);
            Ok(out)
        }
        CheckSpec::MonotoneCounts => per_graph(corpus, |a| {
            Ok(Some(monotone_report(&a.graph.graph, &a.table)))
        }),
        CheckSpec::DiscBound => per_graph(corpus, |a| {
            if a.graph.graph.has_isolated_vertex() {
                return Ok(None);
            }
            roots::check_disc_bound_for(&a.graph.graph, &a.table.to_polynomial()).map(Some)
        }),
        CheckSpec::IntegerRoots => per_graph(corpus, |a| {
            if a.graph.graph.has_isolated_vertex() {
                return Ok(None);
            }
            integer_root_report(&a.graph.graph, &a.table.to_polynomial()).map(Some)
        }),
        CheckSpec::ZeroPolynomial => per_graph(corpus, |a| {
            if !a.graph.graph.has_isolated_vertex() {
                return Ok(None);
            }
            let r = CheckReport::new("zero_polynomial", Level::Theorem, "");
            let p = a.table.to_polynomial();
            Ok(Some(if p.is_zero() {
                r
            } else {
                r.fail(json!({"graph": graph_witness(&a.graph.graph), "polynomial": p}))
            }))
        }),
        CheckSpec::Unimodality { families_max } => {
            let mut out = Vec::new();
            for n in 2..=families_max {
                out.push(
                    check_unimodality(&dt_complete(n)?, &format!("K_{n}"))
                        .with_level(Level::Theorem),
                );
            }
            for n in 2..=families_max {
                out.push(
                    check_unimodality(&dt_friendship(n)?, &format!("F_{n}"))
                        .with_level(Level::Theorem),
                );
            }
            out.extend(per_graph(corpus, |a| {
                if a.graph.graph.has_isolated_vertex() {
                    return Ok(None);
                }
                Ok(Some(check_unimodality(&a.table.to_polynomial(), "")))
            })?);
            Ok(out)
        }
        CheckSpec::KnEvenNoReal { from, to } => (from..=to)
            .filter(|n| n % 2 == 0 && *n >= 2)
            .map(check_kn_even_no_real)
            .collect(),
        CheckSpec::BnNoNonzeroReal { from, to } => (from.max(2)..=to)
            .into_par_iter()
            .map(check_bn_no_nonzero_real)
            .collect(),
        CheckSpec::FnRootInterval { from, to } => {
            let (threshold, mut out) = fn_interval_threshold(from.max(2), to)?;
            let summary = CheckReport::new(
                "fn_root_interval_threshold",
                Level::Descriptive,
                format!("F_{}..F_{}", from.max(2), to),
            )
            .metric("threshold", threshold);
            out.push(match threshold {
                Some(_) => summary,
                None => summary.fail(json!({"range": [from, to], "threshold": null})),
            });
            for n in from.max(20)..=to {
                let v = limit_lemma_value(n);
                let r = CheckReport::new("fn_limit_lemma", Level::Theorem, format!("n={n}"))
                    .metric("value", v);
                out.push(if v < LIMIT_LEMMA_BOUND {
                    r
                } else {
                    r.fail(json!({"n": n, "value": v}))
                });
            }
            Ok(out)
        }
        CheckSpec::KmnCircle { max_sum } => {
            let pairs: Vec<(usize, usize)> = (1..max_sum)
                .flat_map(|m| (m..=max_sum - m).map(move |n| (m, n)))
                .collect();
            pairs
                .par_iter()
                .map(|&(m, n)| check_kmn_circle(m, n))
                .collect()
        }
    }
}

/// True if any theorem-level check failed.
pub fn has_theorem_failure(reports: &[CheckReport]) -> bool {
    reports.iter().any(CheckReport::is_theorem_failure)
}

/// JSON-lines rendering, one report per line.
pub fn to_json_lines(reports: &[CheckReport]) -> String {
    let mut out = String::new();
    for r in reports {
        out.push_str(&serde_json::to_string(r).expect("reports serialise"));
        out.push('\n');
    }
    out
}
