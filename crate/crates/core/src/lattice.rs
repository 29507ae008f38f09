//! Integral lattices given by Gram matrices, curve configurations and their
//! invariants.

// Matrix code reads better with explicit indices.
#![allow(clippy::needless_range_loop)]

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::exact::{int, BigRational};
use crate::{Error, Result};

/// A free ℤ-module with a symmetric integral bilinear form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GramLattice {
    labels: Vec<String>,
    gram: Vec<Vec<i64>>,
}

/// Summary invariants of a (possibly degenerate) lattice.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatticeInvariants {
    pub rank: usize,
    /// `(positive, negative)` inertia.
    pub signature: (usize, usize),
    /// Determinant of the nondegenerate quotient by the radical.
    pub determinant: BigInt,
    pub is_even: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StandardLattice {
    U,
    E8,
    E8Negative,
    Rank1(i64),
}

impl FromStr for StandardLattice {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let t = t.replace('\u{2212}', "-");
        match t.as_str() {
            "U" => return Ok(StandardLattice::U),
            "E8" => return Ok(StandardLattice::E8),
            "E8(-1)" => return Ok(StandardLattice::E8Negative),
            _ => {}
        }
        if let Some(m) = t.strip_prefix("rank1(").and_then(|r| r.strip_suffix(')')) {
            if let Ok(m) = m.parse::<i64>() {
                if m != 0 {
                    return Ok(StandardLattice::Rank1(m));
                }
            }
        }
        Err(Error::UnknownLattice(s.to_string()))
    }
}

/// Dynkin diagram of E8 as a chain of seven nodes with a branch at the fifth.
const E8_EDGES: [(usize, usize); 7] = [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (4, 7)];

pub fn standard_lattice(which: StandardLattice) -> GramLattice {
    match which {
        StandardLattice::U => GramLattice {
            labels: vec!["e".into(), "f".into()],
            gram: vec![vec![0, 1], vec![1, 0]],
        },
        StandardLattice::E8 | StandardLattice::E8Negative => {
            let sign = if which == StandardLattice::E8 { 1 } else { -1 };
            let mut gram = vec![vec![0i64; 8]; 8];
            for (i, row) in gram.iter_mut().enumerate() {
                row[i] = 2 * sign;
            }
            for &(a, b) in &E8_EDGES {
                gram[a][b] = -sign;
                gram[b][a] = -sign;
            }
            GramLattice {
                labels: (1..=8).map(|k| format!("r{k}")).collect(),
                gram,
            }
        }
        StandardLattice::Rank1(m) => GramLattice {
            labels: vec!["g".into()],
            gram: vec![vec![m]],
        },
    }
}

impl GramLattice {
    pub fn new(labels: Vec<String>, gram: Vec<Vec<i64>>) -> Result<Self> {
        let n = labels.len();
        if gram.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                got: gram.len(),
            });
        }
        for row in &gram {
            if row.len() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    got: row.len(),
                });
            }
        }
        for i in 0..n {
            for j in 0..i {
                if gram[i][j] != gram[j][i] {
                    return Err(Error::NotSymmetric);
                }
            }
        }
        Ok(GramLattice { labels, gram })
    }

    pub fn empty() -> Self {
        GramLattice {
            labels: Vec::new(),
            gram: Vec::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn gram(&self) -> &[Vec<i64>] {
        &self.gram
    }

    pub fn index_of(&self, label: &str) -> Result<usize> {
        self.labels
            .iter()
            .position(|l| l == label)
            .ok_or_else(|| Error::UnknownNode(label.to_string()))
    }

    /// Vector with the given label weights; unmentioned labels get 0.
    pub fn vector(&self, weights: &[(String, i64)]) -> Result<Vec<i64>> {
        let mut v = vec![0; self.dim()];
        for (label, w) in weights {
            v[self.index_of(label)?] += w;
        }
        Ok(v)
    }

    fn check_dim(&self, len: usize) -> Result<()> {
        if len != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                got: len,
            });
        }
        Ok(())
    }

    pub fn pair(&self, x: &[i64], y: &[i64]) -> Result<i64> {
        self.check_dim(x.len())?;
        self.check_dim(y.len())?;
        let mut acc = 0i64;
        for (i, xi) in x.iter().enumerate() {
            if *xi == 0 {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                acc += xi * self.gram[i][j] * yj;
            }
        }
        Ok(acc)
    }

    pub fn pair_rational(&self, x: &[BigRational], y: &[BigRational]) -> Result<BigRational> {
        self.check_dim(x.len())?;
        self.check_dim(y.len())?;
        let mut acc = BigRational::zero();
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if self.gram[i][j] != 0 {
                    acc += xi * yj * int(self.gram[i][j]);
                }
            }
        }
        Ok(acc)
    }

    /// Gram matrix of the given vectors, with rational entries.
    pub fn induced_gram(&self, vectors: &[Vec<BigRational>]) -> Result<Vec<Vec<BigRational>>> {
        let mut out = vec![vec![BigRational::zero(); vectors.len()]; vectors.len()];
        for i in 0..vectors.len() {
            for j in 0..=i {
                let v = self.pair_rational(&vectors[i], &vectors[j])?;
                out[i][j] = v.clone();
                out[j][i] = v;
            }
        }
        Ok(out)
    }

    /// Like [`GramLattice::induced_gram`] but demands integral output.
    pub fn induced_lattice(
        &self,
        labels: Vec<String>,
        vectors: &[Vec<BigRational>],
    ) -> Result<GramLattice> {
        let g = self.induced_gram(vectors)?;
        let mut gram = Vec::with_capacity(g.len());
        for row in g {
            let mut r = Vec::with_capacity(row.len());
            for x in row {
                if !x.is_integer() {
                    return Err(Error::NonIntegral(x.to_string()));
                }
                r.push(
                    x.to_integer()
                        .to_i64()
                        .ok_or_else(|| Error::NonIntegral(x.to_string()))?,
                );
            }
            gram.push(r);
        }
        GramLattice::new(labels, gram)
    }

    /// Sublattice spanned by a subset of the basis.
    pub fn restrict(&self, indices: &[usize]) -> GramLattice {
        GramLattice {
            labels: indices.iter().map(|&i| self.labels[i].clone()).collect(),
            gram: indices
                .iter()
                .map(|&i| indices.iter().map(|&j| self.gram[i][j]).collect())
                .collect(),
        }
    }

    pub fn is_even(&self) -> bool {
        (0..self.dim()).all(|i| self.gram[i][i] % 2 == 0)
    }

    pub fn rank(&self) -> usize {
        let (pos, neg) = self.signature();
        pos + neg
    }

    /// Inertia of the form, by symmetric Gaussian elimination over ℚ.
    pub fn signature(&self) -> (usize, usize) {
        let n = self.dim();
        let mut a: Vec<Vec<BigRational>> = self
            .gram
            .iter()
            .map(|r| r.iter().map(|&x| int(x)).collect())
            .collect();
        let (mut pos, mut neg) = (0, 0);
        for k in 0..n {
            if let Some(p) = (k..n).find(|&i| !a[i][i].is_zero()) {
                a.swap(k, p);
                for row in a.iter_mut() {
                    row.swap(k, p);
                }
            } else if let Some((i, j)) = (k..n)
                .flat_map(|i| (k..n).map(move |j| (i, j)))
                .find(|&(i, j)| i != j && !a[i][j].is_zero())
            {
                // e_i += e_j gives a nonzero diagonal entry 2·a_ij.
                for c in 0..n {
                    let v = a[j][c].clone();
                    a[i][c] += v;
                }
                for r in 0..n {
                    let v = a[r][j].clone();
                    a[r][i] += v;
                }
                a.swap(k, i);
                for row in a.iter_mut() {
                    row.swap(k, i);
                }
            } else {
                break;
            }
            let pivot = a[k][k].clone();
            if pivot.is_positive() {
                pos += 1;
            } else {
                neg += 1;
            }
            for r in (k + 1)..n {
                if a[r][k].is_zero() {
                    continue;
                }
                let f = &a[r][k] / &pivot;
                for c in k..n {
                    let v = &f * &a[k][c];
                    a[r][c] -= v;
                }
            }
            for r in (k + 1)..n {
                a[k][r] = BigRational::zero();
                a[r][k] = BigRational::zero();
            }
        }
        (pos, neg)
    }

    /// Nonzero invariant factors of the Gram matrix.
    pub fn smith_invariants(&self) -> Vec<BigInt> {
        let m: Vec<Vec<BigInt>> = self
            .gram
            .iter()
            .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
            .collect();
        smith_diagonal(m)
    }

    /// Determinant of the form induced on `L / radical`: sign from the
    /// negative inertia, magnitude the product of the invariant factors.
    pub fn quotient_determinant(&self) -> BigInt {
        let (_, neg) = self.signature();
        let mag: BigInt = self.smith_invariants().iter().product();
        if neg % 2 == 1 {
            -mag
        } else {
            mag
        }
    }

    pub fn invariants(&self) -> LatticeInvariants {
        let (pos, neg) = self.signature();
        LatticeInvariants {
            rank: pos + neg,
            signature: (pos, neg),
            determinant: self.quotient_determinant(),
            is_even: self.is_even(),
        }
    }

    /// Ordinary determinant of the Gram matrix (Bareiss elimination).
    pub fn determinant(&self) -> BigInt {
        let m: Vec<Vec<BigInt>> = self
            .gram
            .iter()
            .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
            .collect();
        bareiss_determinant(m)
    }

    /// Basis of the null space, each vector primitive with a positive first
    /// nonzero entry.
    pub fn kernel_basis(&self) -> Vec<Vec<i64>> {
        let n = self.dim();
        let mut a: Vec<Vec<BigRational>> = self
            .gram
            .iter()
            .map(|r| r.iter().map(|&x| int(x)).collect())
            .collect();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..n {
            let Some(p) = (row..n).find(|&r| !a[r][col].is_zero()) else {
                continue;
            };
            a.swap(row, p);
            let inv = BigRational::one() / &a[row][col];
            for c in col..n {
                a[row][c] = &a[row][c] * &inv;
            }
            for r in 0..n {
                if r != row && !a[r][col].is_zero() {
                    let f = a[r][col].clone();
                    for c in col..n {
                        let v = &f * &a[row][c];
                        a[r][c] -= v;
                    }
                }
            }
            pivots.push(col);
            row += 1;
        }
        let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&fc| {
                let mut v = vec![BigRational::zero(); n];
                v[fc] = BigRational::one();
                for (r, &pc) in pivots.iter().enumerate() {
                    v[pc] = -a[r][fc].clone();
                }
                primitive(&v)
            })
            .collect()
    }

    /// A subset of basis vectors whose Gram block has full rank and the same
    /// absolute determinant as `L / radical`, so it maps isomorphically onto
    /// the quotient.
    pub fn quotient_basis(&self) -> Option<Vec<usize>> {
        let n = self.dim();
        let r = self.rank();
        let target = self.quotient_determinant().abs();
        let mut chosen = Vec::new();
        search_subsets(n, r, 0, &mut chosen, &mut |keep| {
            let d = self.restrict(keep).determinant().abs();
            (d == target && !d.is_zero()).then(|| keep.to_vec())
        })
    }
}

fn search_subsets<T>(
    n: usize,
    k: usize,
    start: usize,
    chosen: &mut Vec<usize>,
    f: &mut impl FnMut(&[usize]) -> Option<T>,
) -> Option<T> {
    if chosen.len() == k {
        return f(chosen);
    }
    for i in start..n {
        chosen.push(i);
        if let Some(t) = search_subsets(n, k, i + 1, chosen, f) {
            return Some(t);
        }
        chosen.pop();
    }
    None
}

fn primitive(v: &[BigRational]) -> Vec<i64> {
    let lcm = v.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let ints: Vec<BigInt> = v.iter().map(|x| (x * &lcm).to_integer()).collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    let sign = match ints.iter().find(|x| !x.is_zero()) {
        Some(x) if x.is_negative() => -BigInt::one(),
        _ => BigInt::one(),
    };
    ints.iter()
        .map(|x| (x / &g * &sign).to_i64().expect("kernel entry fits in i64"))
        .collect()
}

fn bareiss_determinant(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            let Some(p) = (k + 1..n).find(|&r| !m[r][k].is_zero()) else {
                return BigInt::zero();
            };
            m.swap(k, p);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (&m[i][j] * &m[k][k] - &m[i][k] * &m[k][j]) / &prev;
                m[i][j] = v;
            }
        }
        prev = m[k][k].clone();
    }
    sign * &m[n - 1][n - 1]
}

/// Nonzero diagonal entries of the Smith normal form.
fn smith_diagonal(mut m: Vec<Vec<BigInt>>) -> Vec<BigInt> {
    let rows = m.len();
    let cols = m.first().map_or(0, |r| r.len());
    let mut out = Vec::new();
    let mut t = 0;
    while t < rows.min(cols) {
        // Pivot: smallest nonzero absolute value in the remaining block.
        let mut best: Option<(usize, usize)> = None;
        for i in t..rows {
            for j in t..cols {
                if !m[i][j].is_zero() && best.is_none_or(|(bi, bj)| m[i][j].abs() < m[bi][bj].abs())
                {
                    best = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = best else { break };
        m.swap(t, pi);
        for row in m.iter_mut() {
            row.swap(t, pj);
        }
        loop {
            let mut changed = false;
            for i in t + 1..rows {
                if m[i][t].is_zero() {
                    continue;
                }
                let q = m[i][t].div_floor(&m[t][t]);
                for j in t..cols {
                    let v = &q * &m[t][j];
                    m[i][j] -= v;
                }
                if !m[i][t].is_zero() {
                    m.swap(t, i);
                    changed = true;
                }
            }
            for j in t + 1..cols {
                if m[t][j].is_zero() {
                    continue;
                }
                let q = m[t][j].div_floor(&m[t][t]);
                for row in m.iter_mut().skip(t) {
                    let v = &q * &row[t];
                    row[j] -= v;
                }
                if !m[t][j].is_zero() {
                    for row in m.iter_mut() {
                        row.swap(t, j);
                    }
                    changed = true;
                }
            }
            if changed {
                continue;
            }
            // Row and column cleared; enforce divisibility of the remaining block.
            let bad = (t + 1..rows)
                .flat_map(|i| (t + 1..cols).map(move |j| (i, j)))
                .find(|&(i, j)| !(&m[i][j] % &m[t][t]).is_zero());
            match bad {
                Some((i, _)) => {
                    for j in t..cols {
                        let v = m[i][j].clone();
                        m[t][j] += v;
                    }
                }
                None => break,
            }
        }
        out.push(m[t][t].abs());
        t += 1;
    }
    out
}

pub fn direct_sum(a: &GramLattice, b: &GramLattice) -> GramLattice {
    let n = a.dim() + b.dim();
    let mut gram = vec![vec![0i64; n]; n];
    for i in 0..a.dim() {
        gram[i][..a.dim()].copy_from_slice(&a.gram[i]);
    }
    for i in 0..b.dim() {
        gram[a.dim() + i][a.dim()..].copy_from_slice(&b.gram[i]);
    }
    let mut labels = a.labels.clone();
    for l in &b.labels {
        let mut name = l.clone();
        while labels.contains(&name) {
            name.push('\'');
        }
        labels.push(name);
    }
    GramLattice { labels, gram }
}

impl fmt::Display for GramLattice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (l, row) in self.labels.iter().zip(&self.gram) {
            let cells: Vec<String> = row.iter().map(|x| format!("{x:>3}")).collect();
            writeln!(f, "{l:>4} {}", cells.join(""))?;
        }
        Ok(())
    }
}

/// Configuration of curves: nodes with self-intersections, simple edges for
/// transversal intersection in one point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CurveGraph {
    nodes: Vec<String>,
    edges: BTreeSet<(usize, usize)>,
    self_intersection: Vec<i64>,
}

impl CurveGraph {
    /// Graph with all self-intersections −2.
    pub fn new<S: AsRef<str>>(nodes: &[S], edges: &[(S, S)]) -> Result<Self> {
        let nodes: Vec<String> = nodes.iter().map(|s| s.as_ref().to_string()).collect();
        let mut index = HashMap::new();
        for (i, n) in nodes.iter().enumerate() {
            if index.insert(n.clone(), i).is_some() {
                return Err(Error::InvalidGraph(format!("duplicate node `{n}`")));
            }
        }
        let lookup = |s: &str| {
            index
                .get(s)
                .copied()
                .ok_or_else(|| Error::UnknownNode(s.to_string()))
        };
        let mut set = BTreeSet::new();
        for (a, b) in edges {
            let (i, j) = (lookup(a.as_ref())?, lookup(b.as_ref())?);
            if i == j {
                return Err(Error::InvalidGraph(format!(
                    "self-loop at `{}`",
                    a.as_ref()
                )));
            }
            set.insert((i.min(j), i.max(j)));
        }
        let n = nodes.len();
        Ok(CurveGraph {
            nodes,
            edges: set,
            self_intersection: vec![-2; n],
        })
    }

    pub fn with_self_intersection(mut self, node: &str, value: i64) -> Result<Self> {
        let i = self.index_of(node)?;
        self.self_intersection[i] = value;
        Ok(self)
    }

    pub fn nodes(&self) -> &[String] {
        &self.nodes
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn index_of(&self, name: &str) -> Result<usize> {
        self.nodes
            .iter()
            .position(|n| n == name)
            .ok_or_else(|| Error::UnknownNode(name.to_string()))
    }

    pub fn has_edge(&self, a: &str, b: &str) -> Result<bool> {
        let (i, j) = (self.index_of(a)?, self.index_of(b)?);
        Ok(self.edges.contains(&(i.min(j), i.max(j))))
    }

    fn neighbors(&self, i: usize) -> Vec<usize> {
        self.edges
            .iter()
            .filter_map(|&(a, b)| {
                if a == i {
                    Some(b)
                } else if b == i {
                    Some(a)
                } else {
                    None
                }
            })
            .collect()
    }

    /// Induced subgraph on the named nodes, in the given order.
    pub fn induced<S: AsRef<str>>(&self, names: &[S]) -> Result<CurveGraph> {
        let idx: Vec<usize> = names
            .iter()
            .map(|n| self.index_of(n.as_ref()))
            .collect::<Result<_>>()?;
        let pos: HashMap<usize, usize> = idx.iter().enumerate().map(|(k, &i)| (i, k)).collect();
        let edges = self
            .edges
            .iter()
            .filter_map(|(a, b)| match (pos.get(a), pos.get(b)) {
                (Some(&x), Some(&y)) => Some((x.min(y), x.max(y))),
                _ => None,
            })
            .collect();
        Ok(CurveGraph {
            nodes: idx.iter().map(|&i| self.nodes[i].clone()).collect(),
            edges,
            self_intersection: idx.iter().map(|&i| self.self_intersection[i]).collect(),
        })
    }

    pub fn remove_edge(&mut self, a: &str, b: &str) -> Result<bool> {
        let (i, j) = (self.index_of(a)?, self.index_of(b)?);
        Ok(self.edges.remove(&(i.min(j), i.max(j))))
    }
}

pub fn graph_to_gram(g: &CurveGraph) -> GramLattice {
    let n = g.len();
    let mut gram = vec![vec![0i64; n]; n];
    for i in 0..n {
        gram[i][i] = g.self_intersection[i];
    }
    for &(a, b) in &g.edges {
        gram[a][b] = 1;
        gram[b][a] = 1;
    }
    GramLattice {
        labels: g.nodes.clone(),
        gram,
    }
}

/// Graph isomorphism with the E8 Dynkin diagram: a tree on eight nodes with a
/// single trivalent node whose arms have lengths 1, 2 and 4.
pub fn is_e8_dynkin(g: &CurveGraph) -> bool {
    if g.len() != 8 || g.edge_count() != 7 {
        return false;
    }
    let degrees: Vec<usize> = (0..8).map(|i| g.neighbors(i).len()).collect();
    if degrees.iter().any(|&d| d == 0 || d > 3) {
        return false;
    }
    let hubs: Vec<usize> = (0..8).filter(|&i| degrees[i] == 3).collect();
    let [hub] = hubs[..] else { return false };
    let mut arms = Vec::new();
    for start in g.neighbors(hub) {
        let (mut prev, mut cur, mut len) = (hub, start, 1);
        loop {
            let next: Vec<usize> = g
                .neighbors(cur)
                .into_iter()
                .filter(|&x| x != prev)
                .collect();
            match next[..] {
                [] => break,
                [n] => {
                    prev = cur;
                    cur = n;
                    len += 1;
                    if len > 8 {
                        return false;
                    }
                }
                _ => return false,
            }
        }
        arms.push(len);
    }
    arms.sort_unstable();
    // Connectivity: arms plus the hub account for every node.
    arms == [1, 2, 4]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn standard_lattice_examples() {
        let u = standard_lattice(StandardLattice::U).invariants();
        assert_eq!(u.rank, 2);
        assert_eq!(u.signature, (1, 1));
        assert_eq!(u.determinant, BigInt::from(-1));
        assert!(u.is_even);

        let e8 = standard_lattice(StandardLattice::E8Negative);
        let inv = e8.invariants();
        assert_eq!((inv.rank, inv.signature), (8, (0, 8)));
        assert_eq!(inv.determinant, BigInt::one());
        assert_eq!(e8.determinant(), BigInt::one());
        assert!(inv.is_even);

        assert_eq!(
            standard_lattice(StandardLattice::Rank1(-4)).gram(),
            &[vec![-4]]
        );
        let r = standard_lattice(StandardLattice::Rank1(-6)).invariants();
        assert_eq!(r.signature, (0, 1));
        assert_eq!(r.determinant, BigInt::from(-6));
    }

    #[test]
    fn parse_names() {
        assert_eq!(
            "E8(−1)".parse::<StandardLattice>().unwrap(),
            StandardLattice::E8Negative
        );
        assert_eq!(
            "rank1(-4)".parse::<StandardLattice>().unwrap(),
            StandardLattice::Rank1(-4)
        );
        assert!("D4".parse::<StandardLattice>().is_err());
        assert!("rank1(0)".parse::<StandardLattice>().is_err());
    }

    #[test]
    fn direct_sum_examples() {
        let u = standard_lattice(StandardLattice::U);
        let uu = direct_sum(&u, &u);
        let inv = uu.invariants();
        assert_eq!((inv.rank, inv.signature), (4, (2, 2)));
        assert_eq!(inv.determinant, BigInt::one());
        assert_eq!(uu.labels(), &["e", "f", "e'", "f'"]);

        let e = standard_lattice(StandardLattice::E8Negative);
        let big = direct_sum(&direct_sum(&e, &e), &u);
        let inv = big.invariants();
        assert_eq!((inv.rank, inv.signature), (18, (1, 17)));
        assert_eq!(inv.determinant, BigInt::from(-1));
        assert_eq!(direct_sum(&u, &GramLattice::empty()), u);
    }

    #[test]
    fn graph_examples() {
        let a2 = CurveGraph::new(&["a", "b"], &[("a", "b")]).unwrap();
        let g = graph_to_gram(&a2);
        assert_eq!(g.gram(), &[vec![-2, 1], vec![1, -2]]);
        assert_eq!(g.determinant(), BigInt::from(3));
        assert!(CurveGraph::new(&["a"], &[("a", "a")]).is_err());
        assert_eq!(
            CurveGraph::new(&["a"], &[("a", "z")]).unwrap_err(),
            Error::UnknownNode("z".into())
        );
    }

    fn e8_graph() -> CurveGraph {
        let names: Vec<String> = (1..=8).map(|k| format!("r{k}")).collect();
        let edges: Vec<(String, String)> = E8_EDGES
            .iter()
            .map(|&(a, b)| (names[a].clone(), names[b].clone()))
            .collect();
        CurveGraph::new(&names, &edges).unwrap()
    }

    #[test]
    fn e8_recognition() {
        let g = e8_graph();
        assert!(is_e8_dynkin(&g));
        assert_eq!(
            graph_to_gram(&g),
            standard_lattice(StandardLattice::E8Negative)
        );
        let mut cut = g.clone();
        cut.remove_edge("r1", "r2").unwrap();
        assert!(!is_e8_dynkin(&cut));
        let names: Vec<String> = (1..=8).map(|k| format!("a{k}")).collect();
        let edges: Vec<(String, String)> = (0..7)
            .map(|k| (names[k].clone(), names[k + 1].clone()))
            .collect();
        assert!(!is_e8_dynkin(&CurveGraph::new(&names, &edges).unwrap()));
    }

    #[test]
    fn affine_e8_kernel() {
        // Attach an extra node to the end of the long arm.
        let mut names: Vec<String> = vec!["x".into()];
        names.extend((1..=8).map(|k| format!("r{k}")));
        let mut edges: Vec<(String, String)> = E8_EDGES
            .iter()
            .map(|&(a, b)| (format!("r{}", a + 1), format!("r{}", b + 1)))
            .collect();
        edges.push(("x".into(), "r1".into()));
        let g = graph_to_gram(&CurveGraph::new(&names, &edges).unwrap());
        assert_eq!(g.kernel_basis(), vec![vec![1, 2, 3, 4, 5, 6, 4, 2, 3]]);
        assert_eq!(g.invariants().rank, 8);
        assert!(standard_lattice(StandardLattice::U)
            .kernel_basis()
            .is_empty());
    }

    #[test]
    fn induced_forms() {
        let u = standard_lattice(StandardLattice::U);
        let basis = vec![vec![int(1), int(0)], vec![int(0), int(1)]];
        assert_eq!(
            u.induced_lattice(vec!["a".into(), "b".into()], &basis)
                .unwrap()
                .gram(),
            u.gram()
        );
        let half = vec![vec![crate::exact::rat(1, 2), crate::exact::rat(1, 2)]];
        assert!(matches!(
            u.induced_lattice(vec!["h".into()], &half),
            Err(Error::NonIntegral(_))
        ));
        assert!(u.induced_gram(&[vec![int(1)]]).is_err());
    }

    #[test]
    fn smith_of_degenerate_form() {
        let g = GramLattice::new(
            vec!["a".into(), "b".into(), "c".into()],
            vec![vec![2, 4, 6], vec![4, 2, 6], vec![6, 6, 12]],
        )
        .unwrap();
        // Row 3 = row 1 + row 2; quotient form has |det| = |2·2 − 4·4| = 12.
        assert_eq!(g.rank(), 2);
        assert_eq!(
            g.smith_invariants().iter().product::<BigInt>(),
            BigInt::from(12)
        );
        assert_eq!(g.quotient_determinant(), BigInt::from(-12));
        assert_eq!(g.quotient_basis(), Some(vec![0, 1]));
    }

    #[test]
    fn rejects_asymmetric() {
        assert_eq!(
            GramLattice::new(vec!["a".into(), "b".into()], vec![vec![0, 1], vec![2, 0]]),
            Err(Error::NotSymmetric)
        );
    }
}
