use num_traits::Zero;

use super::flat::{canonical_line, AffineFlat4, Vec4};
use super::line::{Line2, Point2};
use crate::numbers::{PlanarNumber, System};
use crate::rational::Rational;

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum IntersectionKind {
    Empty,
    Single { point: Point2 },
    /// A line of ℝ⁴ in canonical form (see [`canonical_line`]).
    InfiniteLine { base: Vec4, direction: Vec4 },
    Identical,
    /// Two distinct lines sharing a flat of dimension ≥ 2. Only possible
    /// when a degenerate line is involved.
    Flat(AffineFlat4),
}

impl IntersectionKind {
    pub fn label(&self) -> &'static str {
        match self {
            IntersectionKind::Empty => "empty",
            IntersectionKind::Single { .. } => "single",
            IntersectionKind::InfiniteLine { .. } => "infinite-line",
            IntersectionKind::Identical => "identical",
            IntersectionKind::Flat(_) => "flat",
        }
    }

    pub fn as_flat(&self) -> Option<AffineFlat4> {
        match self {
            IntersectionKind::InfiniteLine { base, direction } => {
                AffineFlat4::new(base.clone(), alloc::vec![direction.clone()])
            }
            _ => None,
        }
    }
}

/// Sign of a double-plane line family: which of `Δ⁺(x)`, `Δ⁻(x)` is fixed
/// along the common intersection.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum FamilySign {
    /// `Δ⁻(a) = Δ⁻(a′)`, `Δ⁺(x)` fixed
    Positive,
    /// `Δ⁺(a) = Δ⁺(a′)`, `Δ⁻(x)` fixed
    Negative,
}

impl FamilySign {
    pub fn name(self) -> &'static str {
        match self {
            FamilySign::Positive => "positive",
            FamilySign::Negative => "negative",
        }
    }
}

/// Intersection of two lines. Slope-form pairs use closed formulas; any other
/// pair is handed to [`r4_oracle`].
pub fn classify_intersection(l1: &Line2, l2: &Line2) -> IntersectionKind {
    if l1.system() != l2.system() {
        return IntersectionKind::Empty;
    }
    match (l1.as_slope(), l2.as_slope()) {
        (Some((a, b)), Some((a_, b_))) => match l1.system() {
            System::Dual => classify_dual(a, b, a_, b_),
            System::Double => classify_double(a, b, a_, b_),
        },
        _ => r4_oracle(l1, l2),
    }
}

fn half(v: Rational) -> Rational {
    v / Rational::from_integer(2.into())
}

fn single(system: System, a: &PlanarNumber, b: &PlanarNumber, x1: Rational, x2: Rational) -> IntersectionKind {
    let x = PlanarNumber::new(system, x1, x2);
    let y = &(a * &x) + b;
    IntersectionKind::Single { point: Point2::new(x, y).expect("same system") }
}

fn classify_dual(a: &PlanarNumber, b: &PlanarNumber, a_: &PlanarNumber, b_: &PlanarNumber) -> IntersectionKind {
    let da1 = a.re() - a_.re();
    let da2 = a.im() - a_.im();
    let db1 = b_.re() - b.re();
    let db2 = b_.im() - b.im();
    if !da1.is_zero() {
        let x1 = &db1 / &da1;
        let x2 = (db2 - &x1 * &da2) / &da1;
        return single(System::Dual, a, b, x1, x2);
    }
    if !db1.is_zero() {
        return IntersectionKind::Empty;
    }
    if da2.is_zero() {
        return if db2.is_zero() { IntersectionKind::Identical } else { IntersectionKind::Empty };
    }
    // a₁ = a₁′, b₁ = b₁′, a₂ ≠ a₂′: x₁ is pinned and x₂ is free.
    let x1 = db2 / da2;
    let y1 = a.re() * &x1 + b.re();
    let y2 = a.im() * &x1 + b.im();
    let base = [x1, Rational::zero(), y1, y2];
    let direction = [Rational::zero(), Rational::from_integer(1.into()), Rational::zero(), a.re().clone()];
    let (base, direction) = canonical_line(base, direction);
    IntersectionKind::InfiniteLine { base, direction }
}

fn classify_double(a: &PlanarNumber, b: &PlanarNumber, a_: &PlanarNumber, b_: &PlanarNumber) -> IntersectionKind {
    let da1 = a.re() - a_.re();
    let da2 = a.im() - a_.im();
    let db1 = b_.re() - b.re();
    let db2 = b_.im() - b.im();
    let det = &da1 * &da1 - &da2 * &da2;
    if !det.is_zero() {
        let x1 = (&db1 * &da1 - &db2 * &da2) / &det;
        let x2 = (&db2 * &da1 - &db1 * &da2) / &det;
        return single(System::Double, a, b, x1, x2);
    }
    if da1.is_zero() {
        // then da2 = 0 too
        return if db1.is_zero() && db2.is_zero() { IntersectionKind::Identical } else { IntersectionKind::Empty };
    }
    let sign = if da1 == da2 { FamilySign::Positive } else { FamilySign::Negative };
    match sign {
        FamilySign::Positive => {
            // Δ⁻(a) = Δ⁻(a′): the Δ⁻ equation is solvable only if Δ⁻(b) = Δ⁻(b′),
            // and then Δ⁺(x) = s while Δ⁻(x) is free.
            if db1 != db2 {
                return IntersectionKind::Empty;
            }
            let s = &db1 / &da1;
            let t = a.delta_minus();
            let plus_y = a.delta_plus() * &s + b.delta_plus();
            let minus_y = b.delta_minus();
            // point with Δ⁻(x) = 0
            let base = [half(s.clone()), half(s), half(&plus_y + &minus_y), half(plus_y - minus_y)];
            let one = Rational::from_integer(1.into());
            let direction = [one.clone(), -one, t.clone(), -t];
            let (base, direction) = canonical_line(base, direction);
            IntersectionKind::InfiniteLine { base, direction }
        }
        FamilySign::Negative => {
            if db1 != -db2.clone() {
                return IntersectionKind::Empty;
            }
            let s = &db1 / &da1;
            let t = a.delta_plus();
            let minus_y = a.delta_minus() * &s + b.delta_minus();
            let plus_y = b.delta_plus();
            // point with Δ⁺(x) = 0
            let base = [half(s.clone()), half(-s), half(&plus_y + &minus_y), half(plus_y - minus_y)];
            let one = Rational::from_integer(1.into());
            let direction = [one.clone(), one, t.clone(), t];
            let (base, direction) = canonical_line(base, direction);
            IntersectionKind::InfiniteLine { base, direction }
        }
    }
}

/// Sign of the family two double-plane slope lines would share, when their
/// slopes differ by a zero divisor.
pub fn double_pair_sign(a: &PlanarNumber, a_: &PlanarNumber) -> Option<FamilySign> {
    let dplus = a.delta_plus() == a_.delta_plus();
    let dminus = a.delta_minus() == a_.delta_minus();
    match (dplus, dminus) {
        (false, true) => Some(FamilySign::Positive),
        (true, false) => Some(FamilySign::Negative),
        _ => None,
    }
}

/// Classification by exact Gaussian elimination of the four real equations.
pub fn r4_oracle(l1: &Line2, l2: &Line2) -> IntersectionKind {
    if l1.system() != l2.system() {
        return IntersectionKind::Empty;
    }
    let [e1, e2] = l1.real_equations();
    let [e3, e4] = l2.real_equations();
    let Some(flat) = AffineFlat4::from_equations(&[e1, e2, e3, e4]) else {
        return IntersectionKind::Empty;
    };
    match flat.dim() {
        0 => IntersectionKind::Single { point: Point2::from_r4(l1.system(), flat.base()) },
        1 => IntersectionKind::InfiniteLine { base: flat.base().clone(), direction: flat.directions()[0].clone() },
        _ => {
            if l1.flat().as_ref() == Some(&flat) && l2.flat().as_ref() == Some(&flat) {
                IntersectionKind::Identical
            } else {
                IntersectionKind::Flat(flat)
            }
        }
    }
}
