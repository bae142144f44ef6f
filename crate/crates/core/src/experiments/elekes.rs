//! Points `(A+A) × AA` against lines `y = c(x − d)` for `c, d ∈ A`.
//!
//! Every triple `(c, d, b)` puts `(d + b, cb)` on the line for `(c, d)`, so
//! there are at least `|A|³` incidences.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;

use super::Check;
use crate::geometry::family::{detect_families, FamilyParams, LineFamily};
use crate::geometry::{FamilySign, Line2, Point2};
use crate::numbers::{PlanarNumber, System};
use crate::rational::{floor_log2, Rational};
use crate::sets::{describe, multiplicity, productset, sumset, NumberSet};
use crate::{Error, Result};

#[derive(Clone, Debug)]
pub struct ElekesConfig {
    pub set: NumberSet,
    /// `A + A`, the x-coordinates of the points.
    pub sums: NumberSet,
    /// `AA`, the y-coordinates of the points.
    pub products: NumberSet,
    /// Line `i·n + k` is `y = c(x − d)` with `c = A[i]`, `d = A[k]`.
    pub lines: Vec<Line2>,
    pub distinct_lines: usize,
    /// For each line, the incident points as `(index in sums, index in products)`.
    pub incident_points: Vec<Vec<(u32, u32)>>,
    pub incidences: u64,
    /// Number of `(c, d, b)` witnesses confirmed.
    pub witnesses: u64,
}

impl ElekesConfig {
    pub fn system(&self) -> System {
        self.set.system()
    }

    pub fn point_count(&self) -> usize {
        self.sums.len() * self.products.len()
    }

    pub fn point(&self, (x, y): (u32, u32)) -> Point2 {
        Point2::new(self.sums.elements()[x as usize].clone(), self.products.elements()[y as usize].clone())
            .expect("same system")
    }

    /// Every point of `(A+A) × AA`, row by row.
    pub fn points(&self) -> Vec<Point2> {
        let mut out = Vec::with_capacity(self.point_count());
        for x in self.sums.iter() {
            for y in self.products.iter() {
                out.push(Point2::new(x.clone(), y.clone()).expect("same system"));
            }
        }
        out
    }
}

/// The lines `y = c(x − d)`, `c, d ∈ A`, in the order used by [`ElekesConfig`].
pub fn elekes_lines(set: &NumberSet) -> Vec<Line2> {
    let mut lines = Vec::with_capacity(set.len() * set.len());
    for c in set.iter() {
        for d in set.iter() {
            lines.push(Line2::slope(c.clone(), -&(c * d)).expect("same system"));
        }
    }
    lines
}

pub fn build_elekes(set: &NumberSet) -> Result<ElekesConfig> {
    if set.len() < 2 {
        return Err(Error::InvalidParameter(alloc::format!("need at least 2 elements, got {}", set.len())));
    }
    if let Some(bad) = set.iter().find(|x| !x.is_invertible()) {
        return Err(Error::NonInvertible(alloc::format!("{bad} in {}", describe(set))));
    }
    let sums = sumset(set);
    let products = productset(set);
    let lines = elekes_lines(set);
    let distinct_lines = lines.iter().collect::<BTreeSet<_>>().len();

    let mut incident_points = Vec::with_capacity(lines.len());
    let mut incidences = 0u64;
    for line in &lines {
        let (c, b) = line.as_slope().expect("slope form");
        let mut hits = Vec::new();
        for (xi, x) in sums.iter().enumerate() {
            let y = &(c * x) + b;
            if let Some(yi) = products.index_of(&y) {
                hits.push((xi as u32, yi as u32));
            }
        }
        incidences += hits.len() as u64;
        incident_points.push(hits);
    }

    let n = set.len();
    let mut witnesses = 0u64;
    for (i, c) in set.iter().enumerate() {
        for (k, d) in set.iter().enumerate() {
            let line = &lines[i * n + k];
            for b in set.iter() {
                let p = Point2::new(d + b, c * b).expect("same system");
                let on_grid = sums.contains(p.x()) && products.contains(p.y());
                if !on_grid || !line.contains(&p) {
                    return Err(Error::InvalidParameter(alloc::format!("witness {p} is not on {line}")));
                }
                witnesses += 1;
            }
        }
    }
    Ok(ElekesConfig { set: set.clone(), sums, products, lines, distinct_lines, incident_points, incidences, witnesses })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ClassifyOptions {
    /// Largest `|A|` accepted.
    pub cap: usize,
    /// Double plane only: also use negative families. Positive families are
    /// always used.
    pub include_negative: bool,
}

impl Default for ClassifyOptions {
    fn default() -> Self {
        ClassifyOptions { cap: 32, include_negative: false }
    }
}

/// Dyadic classes of one special incidence `(p, ℓ)` with witnessing family
/// `F`: each field is `⌊log₂⌋` of a count.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DyadicKey {
    /// Lines of `L` sharing the real line (dual) or line parameter (double) of `ℓ`.
    pub real_line: u32,
    /// Lines of `L` in `F`.
    pub family: u32,
    /// Points of `P` over the same real point (dual) or `Δ` pair (double) as `p`.
    pub point_fiber: u32,
    /// Families whose size class equals `family` and that share `F`'s special
    /// point (dual) or point parameter (double).
    pub families_at_point: u32,
}

impl DyadicKey {
    /// `(α′, β, γ, δ)` with `n^(2α′) = 2^real_line` and so on. Diagnostic only.
    pub fn exponents(&self, n: usize) -> Option<[f64; 4]> {
        if n < 2 {
            return None;
        }
        let ln_n = crate::diag::ln_u64(n as u64);
        let e = |class: u32| class as f64 * core::f64::consts::LN_2 / ln_n;
        Some([e(self.real_line) / 2.0, e(self.family), e(self.point_fiber), e(self.families_at_point)])
    }
}

#[derive(Clone, Debug)]
pub struct SpecialIncidenceStats {
    pub system: System,
    pub n: usize,
    /// Multiplicity `k` of `A`.
    pub multiplicity: usize,
    pub incidences: u64,
    pub n_special: u64,
    pub n_standard: u64,
    /// Families detected among the lines, restricted to the selected signs.
    pub families: Vec<LineFamily>,
    /// Special points (dual) or point parameters (double) of special incidences.
    pub special_points: BTreeSet<(Rational, Rational)>,
    /// Real lines `(a₁, b₁)` (dual) or line parameters (double) of lines in
    /// special incidences.
    pub real_lines: BTreeSet<(Rational, Rational)>,
    /// Indices into `families` of families witnessing a special incidence.
    pub qualifying_families: BTreeSet<usize>,
    /// Special incidences per dyadic class.
    pub buckets: BTreeMap<DyadicKey, u64>,
    pub checks: Vec<Check>,
}

impl SpecialIncidenceStats {
    pub fn all_hold(&self) -> bool {
        super::all_hold(&self.checks)
    }
}

/// Keys of a family: the real line or line parameter shared by its members,
/// and the special point or point parameter of its axis.
fn family_keys(f: &LineFamily) -> ((Rational, Rational), (Rational, Rational)) {
    match &f.params {
        FamilyParams::Dual { real_line, special_point, .. } => (real_line.clone(), special_point.clone()),
        FamilyParams::Double { line_parameter, point_parameter, .. } => (line_parameter.clone(), point_parameter.clone()),
    }
}

fn line_key(line: &Line2, sign: Option<FamilySign>) -> (Rational, Rational) {
    let (a, b) = line.as_slope().expect("slope form");
    match sign {
        None => (a.re().clone(), b.re().clone()),
        Some(FamilySign::Positive) => (a.delta_minus(), b.delta_minus()),
        Some(FamilySign::Negative) => (a.delta_plus(), b.delta_plus()),
    }
}

fn point_key(x: &PlanarNumber, sign: Option<FamilySign>) -> Rational {
    match sign {
        None => x.re().clone(),
        Some(FamilySign::Positive) => x.delta_plus(),
        Some(FamilySign::Negative) => x.delta_minus(),
    }
}

fn histogram<'a>(values: impl Iterator<Item = Rational> + 'a) -> BTreeMap<Rational, u64> {
    let mut h = BTreeMap::new();
    for v in values {
        *h.entry(v).or_insert(0) += 1;
    }
    h
}

/// Labels every incidence special or standard and gathers the dyadic
/// statistics of the special ones.
///
/// Dual plane: `(p, ℓ)` is special when another line of the same family also
/// passes through `p`. Double plane: `(p, ℓ)` is special when `ℓ` belongs to a
/// family whose common intersection contains `p`.
pub fn classify_incidences(cfg: &ElekesConfig, options: &ClassifyOptions) -> Result<SpecialIncidenceStats> {
    let n = cfg.set.len();
    if n > options.cap {
        return Err(Error::CapExceeded { what: "elements for incidence classification", limit: options.cap, actual: n });
    }
    let system = cfg.system();
    let k = multiplicity(&cfg.set).max_multiplicity;
    let families: Vec<LineFamily> = detect_families(&cfg.lines, 2)
        .into_iter()
        .filter(|f| match f.sign() {
            None | Some(FamilySign::Positive) => true,
            Some(FamilySign::Negative) => options.include_negative,
        })
        .collect();

    // (line, point) -> witnessing family
    let mut special: BTreeMap<(usize, (u32, u32)), usize> = BTreeMap::new();
    for (fi, f) in families.iter().enumerate() {
        match system {
            System::Dual => {
                let mut through: BTreeMap<(u32, u32), Vec<usize>> = BTreeMap::new();
                for &li in &f.members {
                    for &p in &cfg.incident_points[li] {
                        through.entry(p).or_default().push(li);
                    }
                }
                for (p, lines) in through {
                    if lines.len() >= 2 {
                        for li in lines {
                            special.entry((li, p)).or_insert(fi);
                        }
                    }
                }
            }
            System::Double => {
                for &li in &f.members {
                    for &p in &cfg.incident_points[li] {
                        if f.axis.contains_point(&cfg.point(p).r4()) {
                            special.entry((li, p)).or_insert(fi);
                        }
                    }
                }
            }
        }
    }

    let signs: Vec<Option<FamilySign>> = match system {
        System::Dual => alloc::vec![None],
        System::Double if options.include_negative => alloc::vec![Some(FamilySign::Positive), Some(FamilySign::Negative)],
        System::Double => alloc::vec![Some(FamilySign::Positive)],
    };
    let sign_slot = |s: Option<FamilySign>| signs.iter().position(|x| *x == s).expect("selected sign");
    let lines_per_key: Vec<BTreeMap<(Rational, Rational), u64>> = signs
        .iter()
        .map(|&s| {
            let mut h = BTreeMap::new();
            for l in &cfg.lines {
                *h.entry(line_key(l, s)).or_insert(0) += 1;
            }
            h
        })
        .collect();
    let sum_fibers: Vec<BTreeMap<Rational, u64>> =
        signs.iter().map(|&s| histogram(cfg.sums.iter().map(|x| point_key(x, s)))).collect();
    let product_fibers: Vec<BTreeMap<Rational, u64>> =
        signs.iter().map(|&s| histogram(cfg.products.iter().map(|x| point_key(x, s)))).collect();
    let mut families_at: BTreeMap<(Option<FamilySign>, (Rational, Rational), u32), u64> = BTreeMap::new();
    for f in &families {
        let (_, point) = family_keys(f);
        *families_at.entry((f.sign(), point, floor_log2(f.len() as u64))).or_insert(0) += 1;
    }

    let mut stats = SpecialIncidenceStats {
        system,
        n,
        multiplicity: k,
        incidences: cfg.incidences,
        n_special: special.len() as u64,
        n_standard: cfg.incidences - special.len() as u64,
        families: Vec::new(),
        special_points: BTreeSet::new(),
        real_lines: BTreeSet::new(),
        qualifying_families: BTreeSet::new(),
        buckets: BTreeMap::new(),
        checks: Vec::new(),
    };
    let mut off_point = 0u64;
    for (&(li, p), &fi) in &special {
        let f = &families[fi];
        let slot = sign_slot(f.sign());
        let (line_param, point_param) = family_keys(f);
        let q = cfg.point(p);
        if (point_key(q.x(), f.sign()), point_key(q.y(), f.sign())) != point_param {
            off_point += 1;
        }
        let real_line = lines_per_key[slot][&line_param];
        let point_fiber = sum_fibers[slot][&point_param.0] * product_fibers[slot][&point_param.1];
        let family_class = floor_log2(f.len() as u64);
        let key = DyadicKey {
            real_line: floor_log2(real_line),
            family: family_class,
            point_fiber: floor_log2(point_fiber),
            families_at_point: floor_log2(families_at[&(f.sign(), point_param.clone(), family_class)]),
        };
        *stats.buckets.entry(key).or_insert(0) += 1;
        stats.special_points.insert(point_param);
        stats.real_lines.insert(line_key(&cfg.lines[li], f.sign()));
        stats.qualifying_families.insert(fi);
    }

    let n64 = n as u64;
    let k64 = k as u64;
    let max_family = stats.qualifying_families.iter().map(|&fi| families[fi].len() as u64).max().unwrap_or(0);
    let max_lines_per_key = lines_per_key.iter().flat_map(|h| h.values().copied()).max().unwrap_or(0);
    let family_vs_line = stats
        .qualifying_families
        .iter()
        .map(|&fi| {
            let f = &families[fi];
            (f.len() as u64, lines_per_key[sign_slot(f.sign())][&family_keys(f).0])
        })
        .find(|(size, lines)| size > lines)
        .unwrap_or((0, 0));
    let max_sum_fiber = sum_fibers.iter().flat_map(|h| h.values().copied()).max().unwrap_or(0);
    let max_product_fiber = product_fibers.iter().flat_map(|h| h.values().copied()).max().unwrap_or(0);
    let max_point_fiber = (0..signs.len())
        .map(|s| {
            sum_fibers[s].values().max().copied().unwrap_or(0) * product_fibers[s].values().max().copied().unwrap_or(0)
        })
        .max()
        .unwrap_or(0);
    let mut lines_at_point: BTreeMap<(Option<FamilySign>, (Rational, Rational)), u64> = BTreeMap::new();
    for f in &families {
        *lines_at_point.entry((f.sign(), family_keys(f).1)).or_insert(0) += f.len() as u64;
    }
    let max_lines_at_point = lines_at_point.values().copied().max().unwrap_or(0);

    stats.checks = alloc::vec![
        Check::eq("special plus standard equals incidences", stats.n_special + stats.n_standard, cfg.incidences),
        Check::eq("special incidences lie over their special point", off_point, 0),
        Check::le("family size at most k", max_family, k64),
        Check::le("lines per real line at most k^2", max_lines_per_key, k64 * k64),
        Check::le("family size at most lines on its real line", family_vs_line.0, family_vs_line.1),
        Check::le("sum fiber at most n*k", max_sum_fiber, n64 * k64),
        Check::le("product fiber at most n*k", max_product_fiber, n64 * k64),
        Check::le("point fiber at most (n*k)^2", max_point_fiber, (n64 * k64) * (n64 * k64)),
        Check::le("family lines through one special point at most n*k", max_lines_at_point, n64 * k64),
    ];
    stats.families = families;
    Ok(stats)
}
