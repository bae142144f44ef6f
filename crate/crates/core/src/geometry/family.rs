//! Line families: maximal sets of lines whose pairwise intersections are all
//! the same line of ℝ⁴.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;

use num_traits::Zero;

use super::flat::{AffineFlat4, Vec4};
use super::intersect::{classify_intersection, FamilySign, IntersectionKind};
use super::line::Line2;
use crate::numbers::{PlanarNumber, System};
use crate::rational::Rational;
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum DualStructure {
    /// Special point has `r₁ = 0`; every member has this `b₂`.
    ConstantB2 { b2: Rational },
    /// Every member satisfies `b₂ = r₁(m − a₂)`.
    SlopeRelation { m: Rational },
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum DoubleStructure {
    /// Point parameter `s = 0`; every member has this `b`.
    ConstantB { b: PlanarNumber },
    /// Every member satisfies `b₁ = s(m − a₁)` and `b₂ = s(m′ − a₂)`.
    SlopeRelation { m: Rational, m_prime: Rational },
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum FamilyParams {
    Dual {
        /// Shared `(a₁, b₁)`: every member projects to the real line `y = a₁x + b₁`.
        real_line: (Rational, Rational),
        special_point: (Rational, Rational),
        structure: DualStructure,
    },
    Double {
        sign: FamilySign,
        /// `(t, t′) = (Δ∓(a), Δ∓(b))`
        line_parameter: (Rational, Rational),
        /// `(s, s′) = (Δ±(x), Δ±(y))` along the common intersection
        point_parameter: (Rational, Rational),
        structure: DoubleStructure,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LineFamily {
    pub system: System,
    /// Indices into the input line list, ascending.
    pub members: Vec<usize>,
    /// The common intersection, a line of ℝ⁴.
    pub axis: AffineFlat4,
    pub params: FamilyParams,
}

impl LineFamily {
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn sign(&self) -> Option<FamilySign> {
        match &self.params {
            FamilyParams::Double { sign, .. } => Some(*sign),
            FamilyParams::Dual { .. } => None,
        }
    }

    /// Whether `line` satisfies the family's defining relations, checked on
    /// its coefficients alone.
    pub fn admits(&self, line: &Line2) -> bool {
        let Some((a, b)) = line.as_slope() else { return false };
        if a.system() != self.system {
            return false;
        }
        match &self.params {
            FamilyParams::Dual { real_line, special_point, structure } => {
                if *a.re() != real_line.0 || *b.re() != real_line.1 {
                    return false;
                }
                match structure {
                    DualStructure::ConstantB2 { b2 } => b.im() == b2,
                    DualStructure::SlopeRelation { m } => *b.im() == &special_point.0 * (m - a.im()),
                }
            }
            FamilyParams::Double { sign, line_parameter, point_parameter, structure } => {
                let (ta, tb) = match sign {
                    FamilySign::Positive => (a.delta_minus(), b.delta_minus()),
                    FamilySign::Negative => (a.delta_plus(), b.delta_plus()),
                };
                if ta != line_parameter.0 || tb != line_parameter.1 {
                    return false;
                }
                let s = &point_parameter.0;
                match structure {
                    DoubleStructure::ConstantB { b: fixed } => b == fixed,
                    DoubleStructure::SlopeRelation { m, m_prime } => {
                        *b.re() == s * (m - a.re()) && *b.im() == s * (m_prime - a.im())
                    }
                }
            }
        }
    }

    /// The hyperplane `y₁ ∓ y₂ = t(x₁ ∓ x₂) + t′` containing every member of a
    /// double-plane family.
    pub fn hyperplane(&self) -> Result<AffineFlat4> {
        family_hyperplane(self)
    }
}

pub fn family_hyperplane(f: &LineFamily) -> Result<AffineFlat4> {
    let FamilyParams::Double { sign, line_parameter: (t, t_), .. } = &f.params else {
        return Err(Error::InvalidParameter("hyperplanes are only defined for double-plane families".into()));
    };
    let one = Rational::from_integer(1.into());
    let row = match sign {
        FamilySign::Positive => [-t.clone(), t.clone(), one.clone(), -one, t_.clone()],
        FamilySign::Negative => [-t.clone(), -t.clone(), one.clone(), one, t_.clone()],
    };
    Ok(AffineFlat4::from_equations(&[row]).expect("a single nonzero equation is consistent"))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
enum BucketKey {
    Dual,
    Double(FamilySign),
}

/// All maximal families with at least `max(min_size, 2)` members among the
/// slope-form lines of `lines`. Other forms are ignored.
///
/// Lines are bucketed by the invariants every family shares (`(a₁, b₁)` in
/// the dual plane; sign and `(t, t′)` in the double plane), and pairs inside a
/// bucket are grouped by their ℝ⁴ intersection line.
pub fn detect_families(lines: &[Line2], min_size: usize) -> Vec<LineFamily> {
    let min_size = min_size.max(2);
    let mut buckets: BTreeMap<(BucketKey, Rational, Rational), Vec<usize>> = BTreeMap::new();
    for (i, line) in lines.iter().enumerate() {
        let Some((a, b)) = line.as_slope() else { continue };
        match a.system() {
            System::Dual => {
                buckets.entry((BucketKey::Dual, a.re().clone(), b.re().clone())).or_default().push(i);
            }
            System::Double => {
                let pos = (BucketKey::Double(FamilySign::Positive), a.delta_minus(), b.delta_minus());
                let neg = (BucketKey::Double(FamilySign::Negative), a.delta_plus(), b.delta_plus());
                buckets.entry(pos).or_default().push(i);
                buckets.entry(neg).or_default().push(i);
            }
        }
    }

    let mut families = Vec::new();
    for ((key, _, _), ids) in buckets {
        if ids.len() < min_size {
            continue;
        }
        let mut by_axis: BTreeMap<(Vec4, Vec4), BTreeSet<usize>> = BTreeMap::new();
        for (pos, &i) in ids.iter().enumerate() {
            for &k in &ids[pos + 1..] {
                if let IntersectionKind::InfiniteLine { base, direction } = classify_intersection(&lines[i], &lines[k]) {
                    let set = by_axis.entry((base, direction)).or_default();
                    set.insert(i);
                    set.insert(k);
                }
            }
        }
        for ((base, direction), members) in by_axis {
            if members.len() < min_size {
                continue;
            }
            let members: Vec<usize> = members.into_iter().collect();
            let axis = AffineFlat4::new(base, alloc::vec![direction]).expect("nonzero direction");
            let params = family_params(key, &axis, &lines[members[0]]);
            families.push(LineFamily { system: lines[members[0]].system(), members, axis, params });
        }
    }
    families.sort_by(|x, y| x.members.cmp(&y.members).then_with(|| x.axis.cmp(&y.axis)));
    families
}

fn family_params(key: BucketKey, axis: &AffineFlat4, member: &Line2) -> FamilyParams {
    let (a, b) = member.as_slope().expect("slope-form member");
    let p = axis.base();
    match key {
        BucketKey::Dual => {
            // x₁ and y₁ are constant along the axis
            let r1 = p[0].clone();
            let r2 = p[2].clone();
            let structure = if r1.is_zero() {
                DualStructure::ConstantB2 { b2: b.im().clone() }
            } else {
                DualStructure::SlopeRelation { m: b.im() / &r1 + a.im() }
            };
            FamilyParams::Dual { real_line: (a.re().clone(), b.re().clone()), special_point: (r1, r2), structure }
        }
        BucketKey::Double(sign) => {
            let (s, s_, line_parameter) = match sign {
                FamilySign::Positive => (&p[0] + &p[1], &p[2] + &p[3], (a.delta_minus(), b.delta_minus())),
                FamilySign::Negative => (&p[0] - &p[1], &p[2] - &p[3], (a.delta_plus(), b.delta_plus())),
            };
            let structure = if s.is_zero() {
                DoubleStructure::ConstantB { b: b.clone() }
            } else {
                DoubleStructure::SlopeRelation { m: b.re() / &s + a.re(), m_prime: b.im() / &s + a.im() }
            };
            FamilyParams::Double { sign, line_parameter, point_parameter: (s, s_), structure }
        }
    }
}

/// Number of lines two families have in common.
pub fn shared_members(f: &LineFamily, g: &LineFamily) -> usize {
    let (mut i, mut k, mut n) = (0, 0, 0);
    while i < f.members.len() && k < g.members.len() {
        match f.members[i].cmp(&g.members[k]) {
            core::cmp::Ordering::Less => i += 1,
            core::cmp::Ordering::Greater => k += 1,
            core::cmp::Ordering::Equal => {
                n += 1;
                i += 1;
                k += 1;
            }
        }
    }
    n
}

/// The bound on shared lines that applies to a pair of families.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum PairRule {
    /// Dual families over different real lines.
    DualDifferentRealLine,
    /// Dual families with the same real line and special point.
    DualSameSpecialPoint,
    /// Dual families with the same real line and different special points.
    DualDifferentSpecialPoint,
    /// Same-sign double families with different line parameters.
    DoubleDifferentLineParameter,
    /// Same sign, same line parameter, same `Δ±(x)`.
    DoubleSamePointParameter,
    /// Same sign, same line parameter, different `Δ±(x)`.
    DoubleDifferentPointParameter,
    /// Double families of opposite signs.
    DoubleOppositeSigns,
}

impl PairRule {
    pub fn bound(self) -> usize {
        match self {
            PairRule::DualDifferentRealLine
            | PairRule::DualSameSpecialPoint
            | PairRule::DoubleDifferentLineParameter
            | PairRule::DoubleSamePointParameter => 0,
            PairRule::DualDifferentSpecialPoint
            | PairRule::DoubleDifferentPointParameter
            | PairRule::DoubleOppositeSigns => 1,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            PairRule::DualDifferentRealLine => "dual-different-real-line",
            PairRule::DualSameSpecialPoint => "dual-same-special-point",
            PairRule::DualDifferentSpecialPoint => "dual-different-special-point",
            PairRule::DoubleDifferentLineParameter => "double-different-line-parameter",
            PairRule::DoubleSamePointParameter => "double-same-point-parameter",
            PairRule::DoubleDifferentPointParameter => "double-different-point-parameter",
            PairRule::DoubleOppositeSigns => "double-opposite-signs",
        }
    }

    pub const ALL: [PairRule; 7] = [
        PairRule::DualDifferentRealLine,
        PairRule::DualSameSpecialPoint,
        PairRule::DualDifferentSpecialPoint,
        PairRule::DoubleDifferentLineParameter,
        PairRule::DoubleSamePointParameter,
        PairRule::DoubleDifferentPointParameter,
        PairRule::DoubleOppositeSigns,
    ];
}

/// `None` for families from different systems.
pub fn pair_rule(f: &LineFamily, g: &LineFamily) -> Option<PairRule> {
    match (&f.params, &g.params) {
        (
            FamilyParams::Dual { real_line: r, special_point: p, .. },
            FamilyParams::Dual { real_line: r_, special_point: p_, .. },
        ) => Some(if r != r_ {
            PairRule::DualDifferentRealLine
        } else if p == p_ {
            PairRule::DualSameSpecialPoint
        } else {
            PairRule::DualDifferentSpecialPoint
        }),
        (
            FamilyParams::Double { sign, line_parameter: t, point_parameter: s, .. },
            FamilyParams::Double { sign: sign_, line_parameter: t_, point_parameter: s_, .. },
        ) => Some(if sign != sign_ {
            PairRule::DoubleOppositeSigns
        } else if t != t_ {
            PairRule::DoubleDifferentLineParameter
        } else if s.0 == s_.0 {
            PairRule::DoubleSamePointParameter
        } else {
            PairRule::DoubleDifferentPointParameter
        }),
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::constructions::{double_family_line, dual_family_line};
    use crate::rational::int;

    #[test]
    fn dual_explicit_family() {
        let lines: Vec<Line2> = (1..=10).map(dual_family_line).collect();
        let fams = detect_families(&lines, 2);
        assert_eq!(fams.len(), 1);
        assert_eq!(fams[0].len(), 10);
        let FamilyParams::Dual { special_point, .. } = &fams[0].params else { panic!() };
        assert_eq!(special_point, &(int(1), int(1)));
        assert!(lines.iter().all(|l| fams[0].admits(l)));
        assert!(family_hyperplane(&fams[0]).is_err());
    }

    #[test]
    fn double_explicit_family() {
        let lines: Vec<Line2> = (1..=10).map(double_family_line).collect();
        let fams = detect_families(&lines, 2);
        assert_eq!(fams.len(), 1);
        let f = &fams[0];
        assert_eq!(f.len(), 10);
        let FamilyParams::Double { sign, line_parameter, point_parameter, structure } = &f.params else { panic!() };
        assert_eq!(*sign, FamilySign::Positive);
        assert_eq!(point_parameter, &(int(3), int(21)));
        assert_eq!(line_parameter, &(int(1), int(6)));
        assert_eq!(structure, &DoubleStructure::SlopeRelation { m: int(5), m_prime: int(2) });
        let h = f.hyperplane().unwrap();
        // y₁ − y₂ = (x₁ − x₂) + 6
        let expected = AffineFlat4::from_equations(&[[int(-1), int(1), int(1), int(-1), int(6)]]).unwrap();
        assert_eq!(h, expected);
        for l in &lines {
            assert!(h.contains_flat(&l.flat().unwrap()));
            assert!(l.flat().unwrap().contains_flat(&f.axis));
        }
    }

    #[test]
    fn hyperplanes_follow_line_parameter() {
        let f = |t: i64, t_: i64| LineFamily {
            system: System::Double,
            members: Vec::new(),
            axis: AffineFlat4::point(crate::geometry::flat::zero4()),
            params: FamilyParams::Double {
                sign: FamilySign::Positive,
                line_parameter: (int(t), int(t_)),
                point_parameter: (int(0), int(0)),
                structure: DoubleStructure::ConstantB { b: PlanarNumber::zero(System::Double) },
            },
        };
        assert_eq!(family_hyperplane(&f(1, 6)).unwrap(), family_hyperplane(&f(1, 6)).unwrap());
        assert_ne!(family_hyperplane(&f(1, 6)).unwrap(), family_hyperplane(&f(2, 6)).unwrap());
    }

    #[test]
    fn generic_lines_have_no_family() {
        let lines: Vec<Line2> = (0..8)
            .map(|i: i64| {
                Line2::slope(
                    PlanarNumber::from_ints(System::Dual, i * i + 1, 2 * i - 3),
                    PlanarNumber::from_ints(System::Dual, 3 * i + 7, i),
                )
                .unwrap()
            })
            .collect();
        assert!(detect_families(&lines, 2).is_empty());
    }

    #[test]
    fn shared_count() {
        let mk = |members: Vec<usize>| LineFamily {
            system: System::Dual,
            members,
            axis: AffineFlat4::point(crate::geometry::flat::zero4()),
            params: FamilyParams::Dual {
                real_line: (int(0), int(0)),
                special_point: (int(0), int(0)),
                structure: DualStructure::ConstantB2 { b2: int(0) },
            },
        };
        assert_eq!(shared_members(&mk(alloc::vec![1, 3, 5, 7]), &mk(alloc::vec![2, 3, 7, 9])), 2);
    }
}
