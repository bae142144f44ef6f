//! Rational affine subspaces of ℝ⁴ and exact Gaussian elimination.
//!
//! A point of 𝔻² or 𝕊² is the vector `(x₁, x₂, y₁, y₂)`. Each line splits into
//! two real linear equations in those coordinates, so intersections reduce to
//! solving small rational systems.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::rational::Rational;

pub type Vec4 = [Rational; 4];

/// One real equation `c·(x₁, x₂, y₁, y₂) = rhs`, stored as `[c₀, c₁, c₂, c₃, rhs]`.
pub type Equation = [Rational; 5];

pub fn zero4() -> Vec4 {
    core::array::from_fn(|_| Rational::zero())
}

/// An affine flat `base + span(directions)`.
///
/// Canonical form: the directions are the nonzero rows of a reduced row
/// echelon matrix and `base` is zero at every pivot column. Two flats are equal
/// as sets iff they are structurally equal.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct AffineFlat4 {
    base: Vec4,
    directions: Vec<Vec4>,
}

/// Reduces `rows` in place to reduced row echelon form over the first `cols`
/// columns. Returns the pivot column of each leading row.
pub fn row_reduce<const W: usize>(rows: &mut Vec<[Rational; W]>, cols: usize) -> Vec<usize> {
    match reduce_small(rows, cols) {
        Some((reduced, pivots)) => {
            *rows = reduced;
            pivots
        }
        None => reduce_rational(rows, cols),
    }
}

// Entries are kept below 2^100 so products of two stay inside i128.
const SMALL_LIMIT: u128 = 1 << 100;

fn small(x: i128) -> Option<i128> {
    (x.unsigned_abs() < SMALL_LIMIT).then_some(x)
}

fn integer_row<const W: usize>(row: &[Rational; W]) -> Option<[i128; W]> {
    let mut lcm: i128 = 1;
    for x in row {
        let d = x.denom().to_i128()?;
        lcm = small((lcm / lcm.gcd(&d)).checked_mul(d)?)?;
    }
    let mut out = [0i128; W];
    for (o, x) in out.iter_mut().zip(row) {
        *o = small(x.numer().to_i128()?.checked_mul(lcm / x.denom().to_i128()?)?)?;
    }
    Some(out)
}

fn strip_content(row: &mut [i128]) {
    let g = row.iter().fold(0i128, |g, x| g.gcd(x));
    if g > 1 {
        row.iter_mut().for_each(|x| *x /= g);
    }
}

/// Fraction-free elimination in `i128`; `None` if an entry grows too large.
/// Pivot rows come out identical to the rational reduction. Rows without a
/// pivot agree with it only in which entries are zero.
fn reduce_small<const W: usize>(rows: &[[Rational; W]], cols: usize) -> Option<(Vec<[Rational; W]>, Vec<usize>)> {
    let mut ints = rows.iter().map(integer_row).collect::<Option<Vec<_>>>()?;
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == ints.len() {
            break;
        }
        let Some(p) = (r..ints.len()).find(|&i| ints[i][c] != 0) else {
            continue;
        };
        ints.swap(r, p);
        let pivot_row = ints[r];
        for (i, row) in ints.iter_mut().enumerate() {
            if i == r || row[c] == 0 {
                continue;
            }
            let g = pivot_row[c].gcd(&row[c]);
            let (a, b) = (pivot_row[c] / g, row[c] / g);
            for (v, p) in row.iter_mut().zip(pivot_row.iter()) {
                *v = small(v.checked_mul(a)?.checked_sub(p.checked_mul(b)?)?)?;
            }
            strip_content(row);
        }
        pivots.push(c);
        r += 1;
    }
    let out = ints
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let scale = pivots.get(i).map_or(1, |&c| row[c]);
            core::array::from_fn(|k| Rational::new(BigInt::from(row[k]), BigInt::from(scale)))
        })
        .collect();
    Some((out, pivots))
}

fn reduce_rational<const W: usize>(rows: &mut [[Rational; W]], cols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        if !rows[r][c].is_one() {
            let inv = Rational::one() / &rows[r][c];
            for v in rows[r].iter_mut() {
                *v = &*v * &inv;
            }
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let factor = row[c].clone();
            for (v, p) in row.iter_mut().zip(pivot_row.iter()) {
                if !p.is_zero() {
                    *v -= &factor * p;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// Rank of a set of 4-vectors.
pub fn rank(vectors: &[Vec4]) -> usize {
    let mut rows = vectors.to_vec();
    row_reduce(&mut rows, 4).len()
}

fn is_zero4(v: &Vec4) -> bool {
    v.iter().all(Zero::is_zero)
}

impl AffineFlat4 {
    pub fn point(p: Vec4) -> Self {
        AffineFlat4 { base: p, directions: Vec::new() }
    }

    /// `None` when the directions are linearly dependent.
    pub fn new(base: Vec4, directions: Vec<Vec4>) -> Option<Self> {
        let mut rows = directions;
        let count = rows.len();
        let pivots = row_reduce(&mut rows, 4);
        if pivots.len() != count {
            return None;
        }
        Some(Self::from_reduced(base, rows, &pivots))
    }

    fn from_reduced(mut base: Vec4, directions: Vec<Vec4>, pivots: &[usize]) -> Self {
        for (row, &pc) in directions.iter().zip(pivots) {
            let coeff = base[pc].clone();
            if coeff.is_zero() {
                continue;
            }
            for (b, d) in base.iter_mut().zip(row.iter()) {
                *b -= &coeff * d;
            }
        }
        AffineFlat4 { base, directions }
    }

    /// Solution set of the system, or `None` when it is inconsistent.
    pub fn from_equations(equations: &[Equation]) -> Option<Self> {
        let mut rows = equations.to_vec();
        let pivots = row_reduce(&mut rows, 4);
        if rows[pivots.len()..].iter().any(|row| !row[4].is_zero()) {
            return None;
        }
        let mut base = zero4();
        for (row, &pc) in rows.iter().zip(&pivots) {
            base[pc] = row[4].clone();
        }
        let mut directions = Vec::new();
        for free in (0..4).filter(|c| !pivots.contains(c)) {
            let mut v = zero4();
            v[free] = Rational::one();
            for (row, &pc) in rows.iter().zip(&pivots) {
                v[pc] = -row[free].clone();
            }
            directions.push(v);
        }
        Some(Self::new(base, directions).expect("null space basis is independent"))
    }

    pub fn dim(&self) -> usize {
        self.directions.len()
    }

    pub fn base(&self) -> &Vec4 {
        &self.base
    }

    pub fn directions(&self) -> &[Vec4] {
        &self.directions
    }

    /// Removes the span of the directions from `v` (which is then zero iff `v`
    /// lay in the span).
    fn reduce(&self, mut v: Vec4) -> Vec4 {
        for row in &self.directions {
            let pc = row.iter().position(|x| !x.is_zero()).expect("nonzero direction");
            let coeff = v[pc].clone();
            if coeff.is_zero() {
                continue;
            }
            for (x, d) in v.iter_mut().zip(row.iter()) {
                *x -= &coeff * d;
            }
        }
        v
    }

    pub fn contains_point(&self, p: &Vec4) -> bool {
        let diff: Vec4 = core::array::from_fn(|i| &p[i] - &self.base[i]);
        is_zero4(&self.reduce(diff))
    }

    pub fn contains_flat(&self, other: &AffineFlat4) -> bool {
        self.contains_point(&other.base) && other.directions.iter().all(|d| is_zero4(&self.reduce(d.clone())))
    }
}

/// Canonical `(base, direction)` for the line `p + t·d`: `d` scaled so its
/// first nonzero entry is 1 and `p` moved to be zero at that entry.
pub fn canonical_line(point: Vec4, direction: Vec4) -> (Vec4, Vec4) {
    let k = direction.iter().position(|x| !x.is_zero()).expect("zero direction vector");
    let inv = Rational::one() / &direction[k];
    let direction: Vec4 = core::array::from_fn(|i| &direction[i] * &inv);
    let shift = point[k].clone();
    let base = core::array::from_fn(|i| &point[i] - &shift * &direction[i]);
    (base, direction)
}
