//! JSON views of library results. Rationals are rendered as `p/q` strings.

use planar_core::geometry::family::{DoubleStructure, DualStructure, FamilyParams, LineFamily};
use planar_core::geometry::IncidenceReport;
use planar_core::sets::{energy_report, multiplicity, productset, prune_noninvertible, sumset, EnergyOptions};
use planar_core::{NumberSet, Rational};
use serde::Serialize;

pub const SCHEMA_VERSION: u32 = 1;

fn r(x: &Rational) -> String {
    x.to_string()
}

fn pair(p: &(Rational, Rational)) -> [String; 2] {
    [r(&p.0), r(&p.1)]
}

#[derive(Clone, Debug, Serialize)]
pub struct EnergyView {
    /// Elements removed because they have no inverse.
    pub pruned: usize,
    pub energy: u64,
    pub energy_by_quadruples: Option<u64>,
    pub r_div_total: u64,
    pub n_squared: u64,
    pub dyadic_class: u32,
    pub lambda: Vec<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct CrossView {
    pub other_size: usize,
    pub sum: usize,
    pub product: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct SetStats {
    pub schema_version: u32,
    pub system: String,
    pub n: usize,
    pub sumset: usize,
    pub productset: usize,
    pub multiplicity: usize,
    pub per_functional: Vec<(String, usize)>,
    pub alpha: Option<String>,
    pub energy: Option<EnergyView>,
    pub cross: Option<CrossView>,
}

/// Statistics of a set. The energy part runs on the invertible elements and
/// is skipped when fewer than one remains.
pub fn set_stats(set: &NumberSet, energy_cutoff: usize, other: Option<&NumberSet>) -> anyhow::Result<SetStats> {
    let profile = multiplicity(set);
    let invertible = prune_noninvertible(set);
    let energy = if invertible.is_empty() {
        None
    } else {
        let e = energy_report(&invertible, &EnergyOptions { quadruple_cutoff: energy_cutoff })?;
        let m = invertible.len() as u64;
        Some(EnergyView {
            pruned: set.len() - invertible.len(),
            energy: e.energy,
            energy_by_quadruples: e.energy_by_quadruples,
            r_div_total: e.r_div_total(),
            n_squared: m * m,
            dyadic_class: e.dyadic_class,
            lambda: e.lambda.iter().map(r).collect(),
        })
    };
    let cross = match other {
        Some(b) => Some(CrossView {
            other_size: b.len(),
            sum: planar_core::sets::sum_of(set, b)?.len(),
            product: planar_core::sets::product_of(set, b)?.len(),
        }),
        None => None,
    };
    Ok(SetStats {
        schema_version: SCHEMA_VERSION,
        system: set.system().to_string(),
        n: set.len(),
        sumset: sumset(set).len(),
        productset: productset(set).len(),
        multiplicity: profile.max_multiplicity,
        per_functional: profile.per_functional.iter().map(|(f, k)| (format!("{f:?}"), *k)).collect(),
        alpha: profile.alpha,
        energy,
        cross,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct FamilyView {
    pub members: Vec<usize>,
    pub size: usize,
    pub sign: Option<&'static str>,
    pub real_line: Option<[String; 2]>,
    pub special_point: Option<[String; 2]>,
    pub line_parameter: Option<[String; 2]>,
    pub point_parameter: Option<[String; 2]>,
    pub structure: String,
    pub axis_base: Vec<String>,
    pub axis_direction: Vec<String>,
}

impl From<&LineFamily> for FamilyView {
    fn from(f: &LineFamily) -> Self {
        let mut view = FamilyView {
            members: f.members.clone(),
            size: f.len(),
            sign: None,
            real_line: None,
            special_point: None,
            line_parameter: None,
            point_parameter: None,
            structure: String::new(),
            axis_base: f.axis.base().iter().map(r).collect(),
            axis_direction: f.axis.directions().first().map(|d| d.iter().map(r).collect()).unwrap_or_default(),
        };
        match &f.params {
            FamilyParams::Dual { real_line, special_point, structure } => {
                view.real_line = Some(pair(real_line));
                view.special_point = Some(pair(special_point));
                view.structure = match structure {
                    DualStructure::ConstantB2 { b2 } => format!("constant b2 = {b2}"),
                    DualStructure::SlopeRelation { m } => format!("b2 = r1 (m - a2), m = {m}"),
                };
            }
            FamilyParams::Double { sign, line_parameter, point_parameter, structure } => {
                view.sign = Some(sign.name());
                view.line_parameter = Some(pair(line_parameter));
                view.point_parameter = Some(pair(point_parameter));
                view.structure = match structure {
                    DoubleStructure::ConstantB { b } => format!("constant b = {b}"),
                    DoubleStructure::SlopeRelation { m, m_prime } => format!("b = s (m - a), m = {m}, m' = {m_prime}"),
                };
            }
        }
        view
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct IncidenceView {
    pub schema_version: u32,
    pub points: usize,
    pub lines: usize,
    pub incidences: u64,
    pub degenerate_lines: usize,
    pub degenerate_incidences: u64,
    pub duplicate_points_merged: usize,
    pub duplicate_lines_merged: usize,
    pub families: Option<Vec<FamilyView>>,
}

impl IncidenceView {
    pub fn new(report: &IncidenceReport, families: Option<&[LineFamily]>) -> Self {
        IncidenceView {
            schema_version: SCHEMA_VERSION,
            points: report.points,
            lines: report.lines,
            incidences: report.incidences,
            degenerate_lines: report.degenerate_lines,
            degenerate_incidences: report.degenerate_incidences,
            duplicate_points_merged: report.duplicate_points,
            duplicate_lines_merged: report.duplicate_lines,
            families: families.map(|fs| fs.iter().map(FamilyView::from).collect()),
        }
    }
}
