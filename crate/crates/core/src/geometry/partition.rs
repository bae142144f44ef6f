use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use super::line::Line2;
use crate::numbers::System;
use crate::rational::Rational;
use crate::sets::fiber_classes;
use crate::{Error, Result};

fn slope_parts(lines: &[Line2]) -> Result<Vec<(&crate::PlanarNumber, System)>> {
    let mut out = Vec::with_capacity(lines.len());
    let system = lines.first().map(Line2::system);
    for line in lines {
        let Some((a, _)) = line.as_slope() else {
            return Err(Error::InvalidParameter(alloc::format!("line {line} is not in slope form")));
        };
        if Some(a.system()) != system {
            return Err(Error::SystemMismatch { left: system.expect("nonempty"), right: a.system() });
        }
        out.push((a, a.system()));
    }
    Ok(out)
}

/// Multiplicity of a set of slope-form lines: the largest number of lines
/// whose slopes share a fiber (`a₁`; or `Δ⁺(a)` or `Δ⁻(a)`).
pub fn line_multiplicity(lines: &[Line2]) -> Result<usize> {
    let slopes = slope_parts(lines)?;
    let mut best = 0;
    let mut count = |keys: Vec<Rational>| {
        let mut hist: BTreeMap<Rational, usize> = BTreeMap::new();
        for k in keys {
            *hist.entry(k).or_default() += 1;
        }
        best = best.max(hist.into_values().max().unwrap_or(0));
    };
    match slopes.first().map(|s| s.1) {
        None => {}
        Some(System::Dual) => count(slopes.iter().map(|(a, _)| a.re().clone()).collect()),
        Some(System::Double) => {
            count(slopes.iter().map(|(a, _)| a.delta_plus()).collect());
            count(slopes.iter().map(|(a, _)| a.delta_minus()).collect());
        }
    }
    Ok(best)
}

/// Splits the lines into as many parts as the line-set multiplicity so that
/// within each part no two slopes share a fiber. Returns input indices.
///
/// Dual: the `i`-th line (in input order) of every `a₁` fiber goes to part `i`.
/// Double: a proper edge colouring of the bipartite graph whose vertices are
/// the `Δ⁺` and `Δ⁻` values and whose edges are the slopes.
pub fn partition_multiplicity_one_indices(lines: &[Line2]) -> Result<Vec<Vec<usize>>> {
    let slopes = slope_parts(lines)?;
    if let Some(i) = lines.iter().position(Line2::is_degenerate) {
        return Err(Error::InvalidParameter(alloc::format!("line {} is degenerate", lines[i])));
    }
    match slopes.first().map(|s| s.1) {
        None => Ok(Vec::new()),
        Some(System::Dual) => {
            let mut seen: BTreeMap<&Rational, usize> = BTreeMap::new();
            let mut parts: Vec<Vec<usize>> = Vec::new();
            for (i, (a, _)) in slopes.iter().enumerate() {
                let slot = seen.entry(a.re()).or_default();
                if *slot == parts.len() {
                    parts.push(Vec::new());
                }
                parts[*slot].push(i);
                *slot += 1;
            }
            Ok(parts)
        }
        Some(System::Double) => Ok(fiber_classes(slopes.iter().map(|(a, _)| (a.delta_plus(), a.delta_minus())))),
    }
}

pub fn partition_multiplicity_one(lines: &[Line2]) -> Result<Vec<Vec<Line2>>> {
    Ok(partition_multiplicity_one_indices(lines)?
        .into_iter()
        .map(|part| part.into_iter().map(|i| lines[i].clone()).collect())
        .collect())
}
