//! Recompute every expectation of a catalog and report one check per value.

use std::collections::HashMap;
use std::fmt::Write as _;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::catalog::Catalog;
use crate::error::{Error, Result};
use crate::graded::presentations_equivalent;
use crate::level::{cusp_count_mu, group_order_gamma, level_identity_sides, MuConvention};
use crate::linalg::{self, Solution};
use crate::poly::Polynomial;
use crate::rational::Rational;
use crate::spec_file::{LoadedRing, TableKind, TableSpec};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

impl Status {
    fn from_bool(ok: bool) -> Self {
        if ok {
            Status::Pass
        } else {
            Status::Fail
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Skipped => "SKIP",
        }
    }
}

/// One recomputed value.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub id: String,
    pub group: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ring: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub table: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub citation: Option<String>,
    pub subject: String,
    pub expected: String,
    pub computed: String,
    pub status: Status,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl Check {
    fn new(id: String, group: &str, subject: impl Into<String>, expected: impl ToString, computed: impl ToString, status: Status) -> Self {
        Check {
            id,
            group: group.to_string(),
            ring: None,
            table: None,
            citation: None,
            subject: subject.into(),
            expected: expected.to_string(),
            computed: computed.to_string(),
            status,
            note: None,
        }
    }

    fn ring(mut self, name: &str) -> Self {
        self.ring = Some(name.to_string());
        self
    }

    fn table(mut self, id: &str) -> Self {
        self.table = Some(id.to_string());
        self
    }

    fn cite(mut self, citation: Option<&str>) -> Self {
        self.citation = citation.map(str::to_string);
        self
    }

    fn note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }

    fn skip(mut self) -> Self {
        self.status = Status::Skipped;
        self
    }
}

/// Which checks a run includes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Scope {
    All,
    Ring(String),
    Table(String),
    Level,
    Torelli,
}

impl Scope {
    /// `all`, `level`, `torelli`, `table:<id>` or a ring name.
    pub fn parse(text: &str, catalog: &Catalog) -> Result<Scope> {
        match text {
            "all" => Ok(Scope::All),
            "level" => Ok(Scope::Level),
            "torelli" => Ok(Scope::Torelli),
            _ => {
                if let Some(id) = text.strip_prefix("table:") {
                    let known = catalog.rings().flat_map(|r| r.spec.expected.iter().flat_map(|e| e.tables.iter())).any(|t| t.id == id);
                    return if known { Ok(Scope::Table(id.to_string())) } else { Err(Error::UnknownTable(id.to_string())) };
                }
                if catalog.get(text).is_ok() {
                    Ok(Scope::Ring(text.to_string()))
                } else {
                    Err(Error::UnknownScope(text.to_string()))
                }
            }
        }
    }

    fn includes(&self, check: &Check) -> bool {
        match self {
            Scope::All => true,
            Scope::Ring(name) => check.ring.as_deref() == Some(name),
            Scope::Table(id) => check.table.as_deref() == Some(id),
            Scope::Level => check.group == "level",
            Scope::Torelli => check.group == "torelli",
        }
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub skipped: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub checks: Vec<Check>,
    pub summary: Summary,
}

impl Report {
    fn new(mut checks: Vec<Check>) -> Self {
        checks.sort_by(|a, b| a.id.cmp(&b.id));
        let mut summary = Summary::default();
        for c in &checks {
            match c.status {
                Status::Pass => summary.pass += 1,
                Status::Fail => summary.fail += 1,
                Status::Skipped => summary.skipped += 1,
            }
        }
        Report { checks, summary }
    }

    pub fn all_passed(&self) -> bool {
        self.summary.fail == 0
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            let _ = write!(out, "{} {}: {} expected {} computed {}", c.status.label(), c.id, c.subject, c.expected, c.computed);
            if let Some(n) = &c.note {
                let _ = write!(out, " ({n})");
            }
            if let Some(cite) = &c.citation {
                let _ = write!(out, " [{cite}]");
            }
            out.push('\n');
        }
        let _ = writeln!(out, "{} passed, {} failed, {} skipped", self.summary.pass, self.summary.fail, self.summary.skipped);
        out
    }
}

/// Run every check of `catalog` that `scope` includes.
pub fn verify(catalog: &Catalog, scope: &Scope) -> Report {
    type Job<'a> = Box<dyn Fn() -> Vec<Check> + Send + Sync + 'a>;
    let mut jobs: Vec<Job<'_>> = Vec::new();
    let wants_rings = !matches!(scope, Scope::Level);
    if wants_rings {
        for r in catalog.rings() {
            if let Scope::Ring(name) = scope {
                if name != r.name() {
                    continue;
                }
            }
            let r = r.as_ref();
            jobs.push(Box::new(move || hilbert_checks(r)));
            jobs.push(Box::new(move || degree_checks(r)));
            jobs.push(Box::new(move || identity_checks(r)));
            jobs.push(Box::new(move || vector_and_solve_checks(r)));
            jobs.push(Box::new(move || relative_push_checks(r)));
            jobs.push(Box::new(move || pushforward_identity_checks(r)));
            jobs.push(Box::new(move || equivalence_checks(r, catalog)));
            for t in r.spec.expected.iter().flat_map(|e| e.tables.iter()) {
                if let Scope::Table(id) = scope {
                    if *id != t.id {
                        continue;
                    }
                }
                jobs.push(Box::new(move || table_checks(r, t)));
            }
        }
    }
    if matches!(scope, Scope::All | Scope::Level) {
        jobs.push(Box::new(|| level_checks(catalog)));
    }
    let checks: Vec<Check> = jobs.par_iter().flat_map_iter(|job| job()).filter(|c| scope.includes(c)).collect();
    Report::new(checks)
}

fn error_check(id: String, group: &str, subject: &str, expected: impl ToString, e: Error) -> Check {
    Check::new(id, group, subject, expected, format!("error: {e}"), Status::Fail)
}

fn hilbert_checks(r: &LoadedRing) -> Vec<Check> {
    let Some(h) = r.spec.expected.as_ref().and_then(|e| e.hilbert.as_ref()) else {
        return Vec::new();
    };
    let computed = r.ring.hilbert_function(h.through());
    computed
        .iter()
        .enumerate()
        .map(|(d, rank)| {
            let expected = h.values().get(d).copied().unwrap_or(0);
            Check::new(
                format!("{}/hilbert/{d:02}", r.name()),
                "hilbert",
                format!("rank in degree {d}"),
                expected,
                rank,
                Status::from_bool(expected == *rank),
            )
            .ring(r.name())
            .cite(h.citation())
        })
        .collect()
}

fn degree_checks(r: &LoadedRing) -> Vec<Check> {
    let Some(e) = &r.spec.expected else { return Vec::new() };
    e.degrees
        .iter()
        .map(|(expr, spec)| {
            let id = format!("{}/degree/{expr}", r.name());
            let subject = format!("degree({expr})");
            let result = r.functional().and_then(|f| r.ring.degree(f, &r.parse(expr)?));
            match result {
                Ok(v) => Check::new(id, "degree", subject, spec.value(), &v, Status::from_bool(&v == spec.value())),
                Err(err) => error_check(id, "degree", &subject, spec.value(), err),
            }
            .ring(r.name())
            .cite(spec.citation())
        })
        .collect()
}

fn identity_checks(r: &LoadedRing) -> Vec<Check> {
    let Some(e) = &r.spec.expected else { return Vec::new() };
    e.identities
        .iter()
        .map(|id| {
            let check_id = format!("{}/identity/{}", r.name(), id.id);
            let relation = if id.equal { "=" } else { "!=" };
            let subject = format!("{} {relation} {}", id.lhs, id.rhs);
            let expected = if id.equal { "equal" } else { "different" };
            let result = (|| r.ring.classes_equal(&r.parse(&id.lhs)?, &r.parse(&id.rhs)?))();
            match result {
                Ok(eq) => {
                    let computed = if eq { "equal" } else { "different" };
                    Check::new(check_id, "identity", subject, expected, computed, Status::from_bool(eq == id.equal))
                }
                Err(err) => error_check(check_id, "identity", &subject, expected, err),
            }
            .ring(r.name())
            .cite(Some(&id.citation))
        })
        .collect()
}

fn parse_all(r: &LoadedRing, exprs: &[String]) -> Result<Vec<Polynomial>> {
    exprs.iter().map(|e| r.parse(e)).collect()
}

fn vector_and_solve_checks(r: &LoadedRing) -> Vec<Check> {
    let Some(e) = &r.spec.expected else { return Vec::new() };
    let mut out = Vec::new();
    for v in &e.pairing_vectors {
        let computed = (|| {
            let f = r.functional()?;
            let class = r.parse(&v.class)?;
            parse_all(r, &v.probes)?.iter().map(|p| r.ring.degree(f, &(&class * p))).collect::<Result<Vec<_>>>()
        })();
        for (j, (probe, value)) in v.probes.iter().zip(&v.values).enumerate() {
            let id = format!("{}/pairing_vector/{}/{j}", r.name(), v.id);
            let subject = format!("degree({} * {probe})", v.class);
            let check = match &computed {
                Ok(c) => Check::new(id, "pairing_vector", subject, value, &c[j], Status::from_bool(&c[j] == value)),
                Err(err) => error_check(id, "pairing_vector", &subject, value, err.clone()),
            };
            out.push(check.ring(r.name()).cite(Some(&v.citation)));
        }
    }
    for s in &e.solves {
        let id = format!("{}/solve/{}", r.name(), s.id);
        let subject = format!("class of degree {} from {} pairings", s.degree, s.probes.len());
        let scale = s.value_scale.clone().unwrap_or_else(Rational::one);
        let result = (|| {
            let f = r.functional()?;
            let values: Vec<Rational> = s.values.iter().map(|v| v * &scale).collect();
            let solved = r.ring.solve_class_from_pairings(f, s.degree, &parse_all(r, &s.probes)?, &values)?;
            let eq = r.ring.classes_equal(&solved, &r.parse(&s.expected)?)?;
            Ok((solved, eq))
        })();
        let check = match result {
            Ok((solved, eq)) => Check::new(id, "solve", subject, &s.expected, r.ring.normal_form(&solved), Status::from_bool(eq)),
            Err(err) => error_check(id, "solve", &subject, &s.expected, err),
        };
        out.push(check.ring(r.name()).cite(Some(&s.citation)));
    }
    out
}

fn relative_push_checks(r: &LoadedRing) -> Vec<Check> {
    let (Some(e), Some(rel)) = (&r.spec.expected, &r.relative) else { return Vec::new() };
    e.pushforwards
        .iter()
        .map(|p| {
            let id = format!("{}/pushforward/{}", r.name(), p.id);
            let subject = format!("pi_*({})", p.expr);
            let result = (|| {
                let pushed = rel.ring.pushforward(&rel.rule, &r.parse(&p.expr)?)?;
                let expected = rel.base.parse(&p.expected)?;
                let eq = rel.ring.base().classes_equal(&pushed, &expected)?;
                Ok((pushed, eq))
            })();
            match result {
                Ok((pushed, eq)) => Check::new(id, "pushforward", subject, &p.expected, &pushed, Status::from_bool(eq)),
                Err(err) => error_check(id, "pushforward", &subject, &p.expected, err),
            }
            .ring(r.name())
            .cite(Some(&p.citation))
        })
        .collect()
}

fn pushforward_identity_checks(r: &LoadedRing) -> Vec<Check> {
    let mut out = Vec::new();
    for (spec, tp) in r.spec.pushforwards.iter().zip(&r.pushforwards) {
        for id in &spec.identities {
            let check_id = format!("{}/{}/{}", r.name(), spec.name, id.id);
            let rhs =
                id.expected.clone().or_else(|| id.expected_combo.as_ref().map(|c| format!("{}_*({c})", spec.name))).unwrap_or_default();
            let subject = format!("{}_*({})", spec.name, id.combo);
            let result = (|| {
                let pushed = tp.push_combination(&tp.parse_combination(&id.combo)?)?;
                let target = match (&id.expected, &id.expected_combo) {
                    (Some(e), _) => r.parse(e)?,
                    (None, Some(c)) => tp.push_combination(&tp.parse_combination(c)?)?,
                    (None, None) => unreachable!("validated on load"),
                };
                let mut eq = r.ring.classes_equal(&pushed, &target)?;
                if id.exact {
                    eq &= pushed == target;
                }
                Ok((pushed, eq))
            })();
            let mut check = match result {
                Ok((pushed, eq)) => {
                    let computed = if eq { "balances".to_string() } else { format!("does not balance: {}", r.ring.normal_form(&pushed)) };
                    Check::new(check_id, &spec.name, subject, format!("balances with {rhs}"), computed, Status::from_bool(eq))
                }
                Err(err) => error_check(check_id, &spec.name, &subject, &rhs, err),
            }
            .ring(r.name())
            .cite(Some(&id.citation));
            if let Some(reading) = &id.informational {
                check = check.note(format!("informational, {reading}")).skip();
            }
            out.push(check);
        }
    }
    out
}

fn equivalence_checks(r: &LoadedRing, catalog: &Catalog) -> Vec<Check> {
    r.spec
        .equivalences
        .iter()
        .map(|eq| {
            let id = format!("{}/equivalence/{}", r.name(), eq.id);
            let subject = format!("{} ~ {}", r.name(), eq.other);
            let expected = if eq.equivalent { "isomorphic" } else { "not isomorphic" };
            let result = (|| {
                let other = catalog.get(&eq.other)?;
                let forward: HashMap<String, Polynomial> =
                    eq.forward.iter().map(|(k, v)| Ok((k.clone(), other.parse(v)?))).collect::<Result<_>>()?;
                let backward: HashMap<String, Polynomial> =
                    eq.backward.iter().map(|(k, v)| Ok((k.clone(), r.parse(v)?))).collect::<Result<_>>()?;
                presentations_equivalent(&r.ring, &other.ring, &forward, &backward)
            })();
            match result {
                Ok(iso) => {
                    let computed = if iso { "isomorphic" } else { "not isomorphic" };
                    Check::new(id, "equivalence", subject, expected, computed, Status::from_bool(iso == eq.equivalent))
                }
                Err(err) => error_check(id, "equivalence", &subject, expected, err),
            }
            .ring(r.name())
            .cite(Some(&eq.citation))
        })
        .collect()
}

/// Matrix of computed entries; `None` where a label has no expression.
type Computed = Vec<Vec<Option<Result<Rational>>>>;

fn table_checks(r: &LoadedRing, t: &TableSpec) -> Vec<Check> {
    let computed = match t.kind {
        TableKind::Pairing | TableKind::RelativePairing => pairing_entries(r, t),
        TableKind::Pushforward => pushforward_entries(r, t),
    };
    let group = match t.kind {
        TableKind::Pushforward => t.map.clone().unwrap_or_else(|| "table".into()),
        _ => "table".to_string(),
    };
    let scale = t.scale();
    let mut out = Vec::new();
    for (i, row) in t.rows.iter().enumerate() {
        for (j, col) in t.cols.iter().enumerate() {
            let id = format!("{}/table/{}/{i},{j}", r.name(), t.id);
            let subject = match t.kind {
                TableKind::Pushforward => format!("coefficient of {} in {}_*({})", col.label(), group, row.label()),
                _ => format!("degree({} * {})", row.label(), col.label()),
            };
            let expected = &t.values[i][j] * &scale;
            let candidates = t.candidates.get(&format!("{i},{j}"));
            let mut check = match &computed[i][j] {
                None => {
                    let mut c = Check::new(id, &group, subject, &expected, "not computable", Status::Skipped);
                    let reason = row.note().or(col.note()).unwrap_or("label has no expression in the ring");
                    c = c.note(reason);
                    if let Some(cands) = candidates {
                        let list: Vec<String> = cands.iter().map(|v| (v * &scale).to_string()).collect();
                        c = c.note(format!("{reason}; candidates {}", list.join(", ")));
                    }
                    c
                }
                Some(Err(e)) => error_check(id, &group, &subject, &expected, e.clone()),
                Some(Ok(v)) => {
                    let c = Check::new(id, &group, subject, &expected, v, Status::from_bool(*v == expected));
                    match candidates {
                        Some(cands) if *v != expected && cands.iter().any(|x| &(x * &scale) == v) => {
                            c.note("matches an alternative candidate").skip()
                        }
                        _ => c,
                    }
                }
            }
            .ring(r.name())
            .table(&t.id)
            .cite(Some(&t.citation));
            if t.scale() != Rational::one() {
                let scaled = format!("printed value times {}", t.scale());
                let note = match check.note.take() {
                    Some(n) => format!("{n}; {scaled}"),
                    None => scaled,
                };
                check = check.note(note);
            }
            out.push(check);
        }
    }
    if t.nonsingular {
        let id = format!("{}/determinant/{}", r.name(), t.id);
        let subject = format!("det of table {}", t.id);
        let square: Option<Result<Vec<Vec<Rational>>>> =
            computed.iter().map(|row| row.iter().cloned().collect::<Option<Result<Vec<_>>>>()).collect();
        let check = match square {
            Some(Ok(m)) if m.len() == m.first().map_or(0, Vec::len) => {
                let det = linalg::determinant(&m);
                Check::new(id, "determinant", subject, "nonzero", &det, Status::from_bool(!det.is_zero()))
            }
            Some(Err(e)) => error_check(id, "determinant", &subject, "nonzero", e),
            _ => Check::new(id, "determinant", subject, "nonzero", "not a computable square matrix", Status::Fail),
        };
        out.push(check.ring(r.name()).cite(Some(&t.citation)));
    }
    out
}

fn pairing_entries(r: &LoadedRing, t: &TableSpec) -> Computed {
    let rows: Vec<Option<Result<Polynomial>>> = t.rows.iter().map(|l| l.expr().map(|e| r.parse(e))).collect();
    let cols: Vec<Option<Result<Polynomial>>> = t.cols.iter().map(|l| l.expr().map(|e| r.parse(e))).collect();
    let entry = |a: &Polynomial, b: &Polynomial| -> Result<Rational> {
        if let (Some(k), Ok(Some(d))) = (t.row_degree, a.homogeneous_degree()) {
            if d != k {
                return Err(Error::WrongDegree { expected: k, found: d });
            }
        }
        match (t.kind, &r.relative) {
            (TableKind::RelativePairing, Some(rel)) => rel.ring.relative_degree(&rel.rule, rel.base.functional()?, &(a * b)),
            (TableKind::RelativePairing, None) => Err(Error::NoFunctional(r.name().to_string())),
            _ => r.ring.degree(r.functional()?, &(a * b)),
        }
    };
    rows.iter()
        .map(|row| {
            cols.iter()
                .map(|col| match (row, col) {
                    (Some(a), Some(b)) => Some(match (a, b) {
                        (Ok(a), Ok(b)) => entry(a, b),
                        (Err(e), _) | (_, Err(e)) => Err(e.clone()),
                    }),
                    _ => None,
                })
                .collect()
        })
        .collect()
}

fn pushforward_entries(r: &LoadedRing, t: &TableSpec) -> Computed {
    let result = (|| -> Result<Vec<Vec<Rational>>> {
        let tp = r.pushforward(t.map.as_deref().unwrap_or_default())?;
        let cols = t.cols.iter().map(|c| r.parse(c.expr().unwrap_or_default())).collect::<Result<Vec<_>>>()?;
        let mut out = Vec::new();
        for row in &t.rows {
            let image = tp.image(row.label()).ok_or_else(|| Error::UnknownSymbol(row.label().to_string()))?;
            out.push(coefficients_on(r, image, &cols)?);
        }
        Ok(out)
    })();
    match result {
        Ok(m) => m.into_iter().map(|row| row.into_iter().map(|v| Some(Ok(v))).collect()).collect(),
        Err(e) => t.rows.iter().map(|_| t.cols.iter().map(|_| Some(Err(e.clone()))).collect()).collect(),
    }
}

/// Coefficients of the class of `p` in the basis `cols` of one graded piece.
fn coefficients_on(r: &LoadedRing, p: &Polynomial, cols: &[Polynomial]) -> Result<Vec<Rational>> {
    let d = match cols.first().map(|c| c.homogeneous_degree()).transpose()?.flatten() {
        Some(d) => d,
        None => return Ok(vec![Rational::zero(); cols.len()]),
    };
    let basis: Vec<Vec<Rational>> = cols.iter().map(|c| r.ring.coordinates(c, d)).collect::<Result<_>>()?;
    let target = r.ring.coordinates(p, d)?;
    match linalg::solve(&linalg::transpose(&basis), &target) {
        Solution::Unique(x) => Ok(x),
        Solution::Singular { rank } => Err(Error::SingularPairing { rank, expected: cols.len() }),
        Solution::Inconsistent { row } => Err(Error::InconsistentPairings { probe: row }),
    }
}

fn level_checks(catalog: &Catalog) -> Vec<Check> {
    let data = catalog.level();
    let mut out = Vec::new();
    for g in &data.gamma {
        let v = group_order_gamma(g.genus, g.level);
        let id = format!("level/gamma/g{}/l{:02}", g.genus, g.level);
        let subject = format!("gamma_{}({})", g.genus, g.level);
        out.push(Check::new(id, "level", subject, &g.value, &v, Status::from_bool(v == g.value)).cite(Some(&g.citation)));
    }
    for m in &data.mu {
        let v = cusp_count_mu(m.genus, m.level, m.convention);
        let convention = match m.convention {
            MuConvention::AsPrinted => "as-printed",
            MuConvention::SingleFactor => "single-factor",
        };
        let id = format!("level/mu/{convention}/g{}/l{:02}", m.genus, m.level);
        let subject = format!("mu_{}({}) {convention}", m.genus, m.level);
        let mut check = Check::new(id, "level", subject, &m.value, &v, Status::from_bool(v == m.value)).cite(Some(&m.citation));
        if let Some(flag) = &m.flag {
            check = check.note(format!("informational, {flag}")).skip();
        }
        out.push(check);
    }
    for &level in &data.identity.levels {
        let (lhs, rhs) = level_identity_sides(level, MuConvention::SingleFactor);
        let id = format!("level/identity/l{level:02}");
        let subject = format!("(1/3) l mu_1 mu_2 = (1/12) gamma_2 / l^3 at l = {level}");
        out.push(Check::new(id, "level", subject, &rhs, &lhs, Status::from_bool(lhs == rhs)).cite(Some(&data.identity.citation)));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::catalog;

    #[test]
    fn scopes_parse() {
        let c = catalog();
        assert_eq!(Scope::parse("all", c).unwrap(), Scope::All);
        assert_eq!(Scope::parse("a3_tilde", c).unwrap(), Scope::Ring("a3_tilde".into()));
        assert_eq!(Scope::parse("table:3g", c).unwrap(), Scope::Table("3g".into()));
        assert!(matches!(Scope::parse("table:9z", c), Err(Error::UnknownTable(_))));
        assert!(matches!(Scope::parse("nonsense", c), Err(Error::UnknownScope(_))));
    }

    #[test]
    fn table_scopes_count_entries() {
        let c = catalog();
        assert_eq!(verify(c, &Scope::Table("3g".into())).checks.len(), 36);
        assert_eq!(verify(c, &Scope::Table("3b".into())).checks.len(), 25);
    }

    #[test]
    fn bundled_catalog_verifies() {
        let report = verify(catalog(), &Scope::All);
        assert!(report.all_passed(), "{}", report.to_text());
    }

    #[test]
    fn level_scope_passes() {
        let report = verify(catalog(), &Scope::Level);
        assert!(report.all_passed(), "{}", report.to_text());
        assert_eq!(report.summary.skipped, 1);
    }
}
