//! Rule engine deciding, for each polynomial degree `m`, whether a morphism
//! `f: X_d -> Y_e` of hypersurfaces in `Pⁿ` can exist without extending to
//! `F: Pⁿ -> Pⁿ` with `F⁻¹(Y) = X`.
//!
//! Every rule is a necessary condition. A case is *excluded* when one fires.
//! A surviving `m` with `em = d` is compatible with the extension conclusion
//! (the residual divisor `H = F⁻¹(Y) - X` has degree zero); a surviving `m`
//! with `em != d` leaves the case undetermined.
//!
//! Rule order is fixed: R0, R-HUR, R-GAP or R-GAP+, R-SIG, then the strict
//! rules R-INT, R-M1, R-M2. Every rule of the profile is evaluated and
//! recorded, the first one that fires names the exclusion.

use std::collections::BTreeSet;
use std::fmt;

use serde::ser::{SerializeMap, SerializeStruct};
use serde::{Serialize, Serializer};

use crate::bounds::{self, check_pair_params, HurwitzSides};
use crate::error::{require, Error, Result};
use crate::numerics::{int, render, Rational};

/// Characteristic of the ground field, as far as the rules care.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CharMode {
    Zero,
    Positive,
}

impl CharMode {
    pub fn as_str(self) -> &'static str {
        match self {
            CharMode::Zero => "char0",
            CharMode::Positive => "posChar",
        }
    }
}

impl fmt::Display for CharMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl std::str::FromStr for CharMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "0" | "char0" => Ok(CharMode::Zero),
            "p" | "posChar" => Ok(CharMode::Positive),
            other => Err(Error::Parse(format!("characteristic must be 0 or p, got {other:?}"))),
        }
    }
}

/// Which rule set to apply.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct CharProfile {
    pub mode: CharMode,
    pub strict: bool,
}

impl CharProfile {
    pub const CHAR0: CharProfile = CharProfile {
        mode: CharMode::Zero,
        strict: false,
    };
    pub const POS_CHAR: CharProfile = CharProfile {
        mode: CharMode::Positive,
        strict: false,
    };

    pub fn new(mode: CharMode, strict: bool) -> Self {
        CharProfile { mode, strict }
    }

    pub fn strict(self) -> Self {
        CharProfile { strict: true, ..self }
    }

    /// The rules of this profile in evaluation order.
    pub fn rules(self) -> Vec<RuleId> {
        let mut rules = vec![RuleId::ResidualEffective, RuleId::Hurwitz];
        match self.mode {
            CharMode::Zero => rules.extend([RuleId::ResidualGap, RuleId::SectionBound]),
            CharMode::Positive => rules.push(RuleId::ResidualNotLine),
        }
        if self.strict {
            rules.extend([RuleId::IntegralDegree, RuleId::LinearForcesEqual]);
            if self.mode == CharMode::Zero {
                rules.push(RuleId::QuadraticForcesDouble);
            }
        }
        rules
    }
}

impl fmt::Display for CharProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.mode.as_str())?;
        if self.strict {
            f.write_str("+strict")?;
        }
        Ok(())
    }
}

impl Serialize for CharProfile {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("CharProfile", 2)?;
        st.serialize_field("mode", self.mode.as_str())?;
        st.serialize_field("strict", &self.strict)?;
        st.end()
    }
}

/// Exclusion rules.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RuleId {
    /// R0: `X ⊂ F⁻¹(Y)`, so `deg H = em - d >= 0`.
    ResidualEffective,
    /// R-HUR: the Hurwitz-type inequality.
    Hurwitz,
    /// R-GAP (char 0): a nonzero `H` has degree at least `e`.
    ResidualGap,
    /// R-GAP+ (any char): a nonzero `H` is not a hyperplane.
    ResidualNotLine,
    /// R-SIG (char 0): a nonzero `H` forces `d <= n(m - 1)`.
    SectionBound,
    /// R-INT: `deg f = d·m^(n-1)/e` must be a positive integer.
    IntegralDegree,
    /// R-M1: `m = 1` forces `d = e`.
    LinearForcesEqual,
    /// R-M2 (char 0): `m = 2` forces `d = 2e`.
    QuadraticForcesDouble,
}

impl RuleId {
    pub fn as_str(self) -> &'static str {
        match self {
            RuleId::ResidualEffective => "R0",
            RuleId::Hurwitz => "R-HUR",
            RuleId::ResidualGap => "R-GAP",
            RuleId::ResidualNotLine => "R-GAP+",
            RuleId::SectionBound => "R-SIG",
            RuleId::IntegralDegree => "R-INT",
            RuleId::LinearForcesEqual => "R-M1",
            RuleId::QuadraticForcesDouble => "R-M2",
        }
    }
}

impl fmt::Display for RuleId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl Serialize for RuleId {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.as_str())
    }
}

/// Named exact values a rule looked at, in a fixed order.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Witness(pub Vec<(&'static str, Rational)>);

impl Witness {
    pub fn get(&self, name: &str) -> Option<&Rational> {
        self.0.iter().find(|(k, _)| *k == name).map(|(_, v)| v)
    }
}

impl Serialize for Witness {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(self.0.len()))?;
        for (k, v) in &self.0 {
            map.serialize_entry(k, &render(v))?;
        }
        map.end()
    }
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (k, v)) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{k}={v}")?;
        }
        Ok(())
    }
}

/// One entry of a rule trail.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RuleOutcome {
    pub id: RuleId,
    pub fired: bool,
    pub witness: Witness,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Status {
    Excluded,
    ExtensionForced,
    Survives,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Excluded => "Excluded",
            Status::ExtensionForced => "ExtensionForced",
            Status::Survives => "Survives",
        }
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A hypothesis `(n, d, e, m)` under a characteristic profile.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct MorphismCase {
    pub n: u32,
    pub d: u32,
    pub e: u32,
    pub m: u32,
    pub profile: CharProfile,
}

impl MorphismCase {
    pub fn new(n: u32, d: u32, e: u32, m: u32, profile: CharProfile) -> Result<Self> {
        bounds::check_morphism_params(n, d, e, m)?;
        Ok(MorphismCase { n, d, e, m, profile })
    }

    /// `deg H = em - d`; negative values mean `X ⊄ F⁻¹(Y)`, which is impossible.
    pub fn residual_degree(&self) -> i64 {
        i64::from(self.e) * i64::from(self.m) - i64::from(self.d)
    }
}

/// Verdict for a single polynomial degree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MVerdict {
    pub m: u32,
    pub status: Status,
    pub rules: Vec<RuleOutcome>,
    #[serde(skip)]
    pub residual_degree: i64,
}

impl MVerdict {
    /// First rule that fired, if any.
    pub fn excluded_by(&self) -> Option<RuleId> {
        self.rules.iter().find(|r| r.fired).map(|r| r.id)
    }

    /// Recomputes the status from the trail alone.
    pub fn replay(&self) -> Status {
        if self.rules.iter().any(|r| r.fired) {
            Status::Excluded
        } else if self.residual_degree == 0 {
            Status::ExtensionForced
        } else {
            Status::Survives
        }
    }
}

/// `n - δ + m(e - n) <= 0`: a degree-`δ` hypersurface section can map to a
/// smooth degree-`e` hypersurface with polynomial degree `m` only if this
/// holds.
pub fn section_bound_holds(n: u32, delta: u32, e: u32, m: u32) -> bool {
    let lhs = i64::from(n) - i64::from(delta) + i64::from(m) * (i64::from(e) - i64::from(n));
    lhs <= 0
}

struct RuleContext<'a> {
    case: &'a MorphismCase,
    hurwitz: HurwitzSides,
}

impl RuleContext<'_> {
    fn evaluate(&self, rule: RuleId) -> RuleOutcome {
        let MorphismCase { n, d, e, m, .. } = *self.case;
        let h = self.case.residual_degree();
        let (fired, witness) = match rule {
            RuleId::ResidualEffective => (
                h < 0,
                vec![("em", int(u64::from(e) * u64::from(m))), ("d", int(d)), ("deg_H", int(h))],
            ),
            RuleId::Hurwitz => (
                !self.hurwitz.holds,
                vec![("lhs", self.hurwitz.lhs.clone()), ("rhs", self.hurwitz.rhs.clone())],
            ),
            RuleId::ResidualGap => (
                h > 0 && h < i64::from(e),
                vec![("deg_H", int(h)), ("e", int(e))],
            ),
            RuleId::ResidualNotLine => (h == 1, vec![("deg_H", int(h))]),
            RuleId::SectionBound => {
                let cap = u64::from(n) * (u64::from(m) - 1);
                (h != 0 && u64::from(d) > cap, vec![("d", int(d)), ("n(m-1)", int(cap))])
            }
            RuleId::IntegralDegree => {
                let deg_f = bounds::degree_f(n, d, e, m);
                (!deg_f.is_integer(), vec![("deg_f", deg_f)])
            }
            RuleId::LinearForcesEqual => (m == 1 && d != e, vec![("m", int(m)), ("d", int(d)), ("e", int(e))]),
            RuleId::QuadraticForcesDouble => (
                m == 2 && u64::from(d) != 2 * u64::from(e),
                vec![("m", int(m)), ("d", int(d)), ("2e", int(2 * u64::from(e)))],
            ),
        };
        RuleOutcome {
            id: rule,
            fired,
            witness: Witness(witness),
        }
    }
}

/// Applies every rule of the case's profile, in order.
pub fn classify_m(case: &MorphismCase) -> MVerdict {
    let ctx = RuleContext {
        case,
        hurwitz: bounds::hurwitz_check(case.n, case.d, case.e, case.m),
    };
    let rules: Vec<RuleOutcome> = case.profile.rules().into_iter().map(|r| ctx.evaluate(r)).collect();
    let mut verdict = MVerdict {
        m: case.m,
        status: Status::Survives,
        rules,
        residual_degree: case.residual_degree(),
    };
    verdict.status = verdict.replay();
    verdict
}

/// Aggregate classification of a pair `(X_d, Y_e)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Overall {
    /// Every admissible `m` has `em = d`; any morphism extends with `F⁻¹(Y) = X`.
    ExtensionHolds,
    /// Every `m` is excluded; no morphism exists. A special case of
    /// [`Overall::ExtensionHolds`].
    NoMorphism,
    /// Some `m` with `em != d` passes every rule.
    Undetermined,
}

impl Overall {
    pub fn as_str(self) -> &'static str {
        match self {
            Overall::ExtensionHolds => "ExtensionHolds",
            Overall::NoMorphism => "NoMorphism",
            Overall::Undetermined => "Undetermined",
        }
    }

    /// True when the extension conclusion is established (including the
    /// vacuous case with no morphisms at all).
    pub fn extension_holds(self) -> bool {
        !matches!(self, Overall::Undetermined)
    }

    pub fn from_verdicts(verdicts: &[MVerdict]) -> Overall {
        if verdicts.iter().any(|v| v.status == Status::Survives) {
            Overall::Undetermined
        } else if verdicts.iter().any(|v| v.status == Status::ExtensionForced) {
            Overall::ExtensionHolds
        } else {
            Overall::NoMorphism
        }
    }
}

impl fmt::Display for Overall {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Separability threshold attached to a non-excluded `m`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Diagnostic {
    pub m: u32,
    #[serde(serialize_with = "bounds::ser_rational")]
    pub alpha: Rational,
}

/// Full report on `(n, d, e)` under one profile.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CaseReport {
    pub n: u32,
    pub d: u32,
    pub e: u32,
    pub profile: CharProfile,
    #[serde(rename = "M")]
    pub max_degree: u32,
    pub verdicts: Vec<MVerdict>,
    pub overall: Overall,
    pub diagnostics: Vec<Diagnostic>,
    #[serde(skip)]
    pub relaxed_threshold: u32,
}

impl CaseReport {
    pub fn surviving_m(&self) -> Vec<u32> {
        self.verdicts
            .iter()
            .filter(|v| v.status == Status::Survives)
            .map(|v| v.m)
            .collect()
    }

    pub fn forced_m(&self) -> Vec<u32> {
        self.verdicts
            .iter()
            .filter(|v| v.status == Status::ExtensionForced)
            .map(|v| v.m)
            .collect()
    }

    /// Context lines for human-readable output.
    pub fn notes(&self) -> Vec<String> {
        let mut notes = Vec::new();
        if self.profile.mode == CharMode::Positive {
            notes.push(
                "positive characteristic: verdicts apply to separable morphisms; alpha is the \
                 characteristic above which the residual-section bound is also available"
                    .to_string(),
            );
        }
        if self.d == 1 {
            notes.push(
                "d = 1: a smooth image of projective space is projective space, so no hyperplane \
                 maps onto Y; the Hurwitz rule already excludes every m here"
                    .to_string(),
            );
        }
        notes
    }
}

/// Runs [`classify_m`] for `m = 1..=M` where `M` comes from
/// [`bounds::max_poly_degree`].
pub fn classify_case(n: u32, d: u32, e: u32, profile: CharProfile) -> Result<CaseReport> {
    check_pair_params(n, d, e)?;
    let bound = bounds::max_poly_degree(n, d, e);
    let verdicts: Vec<MVerdict> = (1..=bound.max_degree)
        .map(|m| classify_m(&MorphismCase { n, d, e, m, profile }))
        .collect();
    let diagnostics = verdicts
        .iter()
        .filter(|v| v.status != Status::Excluded)
        .map(|v| Diagnostic {
            m: v.m,
            alpha: bounds::separability_threshold(n, d, e, v.m)
                .expect("non-excluded verdicts have em >= d"),
        })
        .collect();
    let overall = Overall::from_verdicts(&verdicts);
    Ok(CaseReport {
        n,
        d,
        e,
        profile,
        max_degree: bound.max_degree,
        verdicts,
        overall,
        diagnostics,
        relaxed_threshold: bound.relaxed_threshold,
    })
}

/// One line of a feasibility table.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TableRow {
    pub d: u32,
    pub overall: Overall,
    pub surviving_m: Vec<u32>,
}

impl From<&CaseReport> for TableRow {
    fn from(report: &CaseReport) -> Self {
        TableRow {
            d: report.d,
            overall: report.overall,
            surviving_m: report.surviving_m(),
        }
    }
}

/// One row per `d = 1..=d_max`, ordered by `d`. Rows are independent and
/// are evaluated on scoped worker threads.
pub fn generate_table(n: u32, e: u32, d_max: u32, profile: CharProfile) -> Result<Vec<TableRow>> {
    check_pair_params(n, 1, e)?;
    require(d_max >= 1, || format!("dmax must be >= 1, got {d_max}"))?;
    let workers = std::thread::available_parallelism().map_or(1, |p| p.get()).min(d_max as usize);
    let rows: Vec<Vec<(u32, TableRow)>> = std::thread::scope(|scope| {
        let handles: Vec<_> = (0..workers)
            .map(|w| {
                scope.spawn(move || {
                    (1..=d_max)
                        .filter(|d| (*d as usize - 1) % workers == w)
                        .map(|d| {
                            let report = classify_case(n, d, e, profile).expect("validated above");
                            (d, TableRow::from(&report))
                        })
                        .collect()
                })
            })
            .collect();
        handles.into_iter().map(|h| h.join().expect("table worker panicked")).collect()
    });
    let mut rows: Vec<(u32, TableRow)> = rows.into_iter().flatten().collect();
    rows.sort_by_key(|(d, _)| *d);
    Ok(rows.into_iter().map(|(_, row)| row).collect())
}

/// The set of `d` whose row establishes the extension conclusion.
pub fn holding_set(rows: &[TableRow]) -> BTreeSet<u32> {
    rows.iter().filter(|r| r.overall.extension_holds()).map(|r| r.d).collect()
}
