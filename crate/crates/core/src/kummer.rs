//! Divisor classes on the Kummer surface of `E₁ × E₂` in `(a, b); A` form.
//!
//! A class `(a, b); A` stands for `a·F₁ + b·F₂ + Σ A_ij·G_ij`, where `F₁`, `F₂`
//! are the pullbacks of the two rulings and `G_ij` the sixteen exceptional
//! curves. The pairing is `2(a·b′ + a′·b) − 2·Σ A_ij·A′_ij`.
//!
//! The curves `F_{1,i}` and `F_{2,j}` are `(½, 0; row i all −½)` and
//! `(0, ½; column j all −½)`, which makes `F₁ = 2F_{1,i} + Σ_j G_ij` hold.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_rational::Rational64;
use num_traits::{ToPrimitive, Zero};

use crate::constants::{ClassSpec, Constants, Weights};
use crate::exact::int;
use crate::lattice::GramLattice;
use crate::{Error, Result};

#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct KummerClass {
    pub f1: Rational64,
    pub f2: Rational64,
    pub g: [[Rational64; 4]; 4],
}

fn r(n: i64) -> Rational64 {
    Rational64::from_integer(n)
}

fn half() -> Rational64 {
    Rational64::new(1, 2)
}

impl KummerClass {
    pub fn zero() -> Self {
        KummerClass {
            f1: r(0),
            f2: r(0),
            g: [[r(0); 4]; 4],
        }
    }

    pub fn f1() -> Self {
        KummerClass {
            f1: r(1),
            ..Self::zero()
        }
    }

    pub fn f2() -> Self {
        KummerClass {
            f2: r(1),
            ..Self::zero()
        }
    }

    /// `G_{i,j}`, 1-based.
    pub fn g_curve(i: usize, j: usize) -> Result<Self> {
        check_index(i)?;
        check_index(j)?;
        let mut c = Self::zero();
        c.g[i - 1][j - 1] = r(1);
        Ok(c)
    }

    /// `F_{1,i}`: the curve over the `i`-th 2-torsion point of the first factor.
    pub fn f1_curve(i: usize) -> Result<Self> {
        check_index(i)?;
        let mut c = KummerClass {
            f1: half(),
            ..Self::zero()
        };
        for j in 0..4 {
            c.g[i - 1][j] = -half();
        }
        Ok(c)
    }

    /// `F_{2,j}`.
    pub fn f2_curve(j: usize) -> Result<Self> {
        check_index(j)?;
        let mut c = KummerClass {
            f2: half(),
            ..Self::zero()
        };
        for i in 0..4 {
            c.g[i][j - 1] = -half();
        }
        Ok(c)
    }

    pub fn from_spec(spec: &ClassSpec) -> Result<Self> {
        let mut c = KummerClass {
            f1: r(spec.f1),
            f2: r(spec.f2),
            ..Self::zero()
        };
        for &((i, j), v) in &spec.g {
            check_index(i)?;
            check_index(j)?;
            c.g[i - 1][j - 1] += r(v);
        }
        Ok(c)
    }

    pub fn pair(&self, other: &Self) -> Rational64 {
        let mut acc = r(2) * (self.f1 * other.f2 + other.f1 * self.f2);
        for i in 0..4 {
            for j in 0..4 {
                acc -= r(2) * self.g[i][j] * other.g[i][j];
            }
        }
        acc
    }

    pub fn square(&self) -> Rational64 {
        self.pair(self)
    }

    pub fn is_zero(&self) -> bool {
        *self == Self::zero()
    }

    /// All pairings with the 24 standard curves are integers.
    pub fn is_integral(&self) -> bool {
        standard_generators()
            .values()
            .all(|g| self.pair(g).is_integer())
    }
}

fn check_index(i: usize) -> Result<()> {
    if (1..=4).contains(&i) {
        Ok(())
    } else {
        Err(Error::IndexOutOfRange(i))
    }
}

impl fmt::Debug for KummerClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {});", self.f1, self.f2)?;
        let rows: Vec<String> = self
            .g
            .iter()
            .map(|row| {
                row.iter()
                    .map(|x| x.to_string())
                    .collect::<Vec<_>>()
                    .join(" ")
            })
            .collect();
        write!(f, " [{}]", rows.join(" | "))
    }
}

impl fmt::Display for KummerClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl Add for KummerClass {
    type Output = KummerClass;
    fn add(mut self, rhs: KummerClass) -> KummerClass {
        self.f1 += rhs.f1;
        self.f2 += rhs.f2;
        for i in 0..4 {
            for j in 0..4 {
                self.g[i][j] += rhs.g[i][j];
            }
        }
        self
    }
}

impl Neg for KummerClass {
    type Output = KummerClass;
    fn neg(self) -> KummerClass {
        self * -1
    }
}

impl Sub for KummerClass {
    type Output = KummerClass;
    fn sub(self, rhs: KummerClass) -> KummerClass {
        self + (-rhs)
    }
}

impl Mul<i64> for KummerClass {
    type Output = KummerClass;
    fn mul(mut self, k: i64) -> KummerClass {
        let k = r(k);
        self.f1 *= k;
        self.f2 *= k;
        for row in self.g.iter_mut() {
            for x in row.iter_mut() {
                *x *= k;
            }
        }
        self
    }
}

impl std::iter::Sum for KummerClass {
    fn sum<I: Iterator<Item = KummerClass>>(iter: I) -> Self {
        iter.fold(KummerClass::zero(), |a, b| a + b)
    }
}

/// `F₁`, `F₂`, `F{1}{i}` = `F_{1,i}`, `F{2}{j}` = `F_{2,j}` and `G{i}{j}`.
pub fn standard_generators() -> BTreeMap<String, KummerClass> {
    let mut m = BTreeMap::new();
    m.insert("F1".to_string(), KummerClass::f1());
    m.insert("F2".to_string(), KummerClass::f2());
    for i in 1..=4 {
        m.insert(format!("F1{i}"), KummerClass::f1_curve(i).expect("index"));
        m.insert(format!("F2{i}"), KummerClass::f2_curve(i).expect("index"));
        for j in 1..=4 {
            m.insert(
                format!("G{i}{j}"),
                KummerClass::g_curve(i, j).expect("index"),
            );
        }
    }
    m
}

/// `F₁ + F₂ − G_{i₁j₁} − G_{i₂j₂} − G_{i₃j₃}`, the class of a (1,1) curve
/// through three of the sixteen points.
pub fn morecurves_class(pairs: [(usize, usize); 3]) -> Result<KummerClass> {
    for &(i, j) in &pairs {
        check_index(i)?;
        check_index(j)?;
    }
    for a in 0..3 {
        for b in a + 1..3 {
            if pairs[a].0 == pairs[b].0 || pairs[a].1 == pairs[b].1 {
                return Err(Error::IndexCollision);
            }
        }
    }
    let mut c = KummerClass::f1() + KummerClass::f2();
    for (i, j) in pairs {
        c = c - KummerClass::g_curve(i, j)?;
    }
    Ok(c)
}

pub fn big_d(c: &Constants) -> Result<KummerClass> {
    KummerClass::from_spec(&c.big_d)
}

/// The standard curves together with `D` and `C₁ … C₄`.
///
/// `C₂` is defined by the difference `D − 2F_{2,1} − G_{3,1} − G_{4,1} − C₁`;
/// `C₄` is taken as displayed.
pub fn named_classes(c: &Constants) -> Result<BTreeMap<String, KummerClass>> {
    let mut m = standard_generators();
    let d = big_d(c)?;
    let c1 = morecurves_class(c.c1_pairs)?;
    let c2 = d - m["F21"] * 2 - m["G31"] - m["G41"] - c1;
    m.insert("D".into(), d);
    m.insert("C1".into(), c1);
    m.insert("C2".into(), c2);
    m.insert("C3".into(), morecurves_class(c.c3_pairs)?);
    m.insert("C4".into(), KummerClass::from_spec(&c.c4_class)?);
    Ok(m)
}

fn lookup(m: &BTreeMap<String, KummerClass>, label: &str) -> Result<KummerClass> {
    m.get(label)
        .copied()
        .ok_or_else(|| Error::UnknownNode(label.to_string()))
}

/// `Σ w·class` over a weighted list of named classes.
pub fn weighted_sum(m: &BTreeMap<String, KummerClass>, w: &Weights) -> Result<KummerClass> {
    w.iter().map(|(label, k)| Ok(lookup(m, label)? * *k)).sum()
}

#[derive(Clone, Debug)]
pub struct IiStarReport {
    pub sum: KummerClass,
    pub d: KummerClass,
    /// `(label, pairing with D)` for each component.
    pub component_pairings: Vec<(String, Rational64)>,
}

impl IiStarReport {
    pub fn holds(&self) -> bool {
        self.sum == self.d && self.component_pairings.iter().all(|(_, p)| p.is_zero())
    }
}

pub fn iistar_fiber_check(c: &Constants) -> Result<IiStarReport> {
    let m = named_classes(c)?;
    let d = m["D"];
    let sum = weighted_sum(&m, &c.iistar_fiber)?;
    let component_pairings = c
        .iistar_fiber
        .iter()
        .map(|(l, _)| Ok((l.clone(), lookup(&m, l)?.pair(&d))))
        .collect::<Result<_>>()?;
    Ok(IiStarReport {
        sum,
        d,
        component_pairings,
    })
}

pub type FiberComponents = Vec<(String, KummerClass, i64)>;

/// The two I₀* fibers as `(label, class, multiplicity)`.
pub fn i0star_fibers(c: &Constants) -> Result<(FiberComponents, FiberComponents)> {
    let m = named_classes(c)?;
    let build = |w: &Weights| -> Result<FiberComponents> {
        w.iter()
            .map(|(l, k)| Ok((l.clone(), lookup(&m, l)?, *k)))
            .collect()
    };
    Ok((build(&c.i0star_one)?, build(&c.i0star_two)?))
}

pub fn fiber_sum(f: &FiberComponents) -> KummerClass {
    f.iter().map(|(_, cl, k)| *cl * *k).sum()
}

#[derive(Clone, Debug)]
pub struct LabeledGraphReport {
    pub labels: Vec<String>,
    pub pairing: Vec<Vec<i64>>,
    pub expected: Vec<Vec<i64>>,
    pub rank: usize,
}

impl LabeledGraphReport {
    pub fn mismatches(&self) -> Vec<(String, String, i64, i64)> {
        let n = self.labels.len();
        let mut out = Vec::new();
        for i in 0..n {
            for j in i..n {
                if self.pairing[i][j] != self.expected[i][j] {
                    out.push((
                        self.labels[i].clone(),
                        self.labels[j].clone(),
                        self.pairing[i][j],
                        self.expected[i][j],
                    ));
                }
            }
        }
        out
    }

    pub fn adjacency(&self, a: &str, b: &str) -> Option<i64> {
        let i = self.labels.iter().position(|l| l == a)?;
        let j = self.labels.iter().position(|l| l == b)?;
        Some(self.pairing[i][j])
    }
}

/// Pairing matrix of the 20 labelled classes against the displayed tree.
pub fn labeled_graph_check(c: &Constants) -> Result<LabeledGraphReport> {
    let m = named_classes(c)?;
    let labels = c.labeled_nodes.clone();
    let classes: Vec<KummerClass> = labels
        .iter()
        .map(|l| lookup(&m, l))
        .collect::<Result<_>>()?;
    let n = labels.len();
    let mut pairing = vec![vec![0i64; n]; n];
    for i in 0..n {
        for j in 0..n {
            let p = classes[i].pair(&classes[j]);
            pairing[i][j] = p
                .is_integer()
                .then(|| p.to_integer())
                .ok_or_else(|| Error::NonIntegral(p.to_string()))?;
        }
    }
    let pos = |l: &str| {
        labels
            .iter()
            .position(|x| x == l)
            .ok_or_else(|| Error::UnknownNode(l.to_string()))
    };
    let mut expected = vec![vec![0i64; n]; n];
    for (i, row) in expected.iter_mut().enumerate() {
        row[i] = -2;
    }
    for (a, b) in &c.labeled_edges {
        let (i, j) = (pos(a)?, pos(b)?);
        expected[i][j] = 1;
        expected[j][i] = 1;
    }
    let rank = GramLattice::new(labels.clone(), pairing.clone())?.rank();
    Ok(LabeledGraphReport {
        labels,
        pairing,
        expected,
        rank,
    })
}

pub fn branch_octet(c: &Constants) -> Result<Vec<(String, KummerClass)>> {
    let m = named_classes(c)?;
    c.branch_octet
        .iter()
        .map(|l| Ok((l.clone(), lookup(&m, l)?)))
        .collect()
}

/// Self-intersection arithmetic for the one-parameter families.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FrickeNumbers {
    pub ry_f1: i64,
    pub ry_f2: i64,
    /// `(R_Y − n·F₂ − F₁)²`.
    pub proj_square: i64,
    /// Pullback to `X` doubles the square.
    pub rx_square: i64,
    /// Square of the primitive generator, half of `proj_square`.
    pub generator_square: i64,
}

pub fn fricke_numbers(c: &Constants, n: i64) -> Result<FrickeNumbers> {
    if n < 1 {
        return Err(Error::DimensionMismatch {
            expected: 1,
            got: 0,
        });
    }
    let ry_f1 = c.ry_f1_per_n * n;
    let ry_f2 = c.ry_f2;
    // Basis F₁, F₂, R_Y; R_Y is a fiber class, so R_Y² = 0.
    let f = KummerClass::f1()
        .pair(&KummerClass::f2())
        .to_i64()
        .expect("integer");
    let gram = vec![vec![0, f, ry_f1], vec![f, 0, ry_f2], vec![ry_f1, ry_f2, 0]];
    let lat = GramLattice::new(vec!["F1".into(), "F2".into(), "RY".into()], gram)?;
    let v = vec![int(-1), int(-n), int(1)];
    let proj = lat.induced_lattice(vec!["P".into()], &[v])?.gram()[0][0];
    Ok(FrickeNumbers {
        ry_f1,
        ry_f2,
        proj_square: proj,
        rx_square: 2 * proj,
        generator_square: proj / 2,
    })
}
