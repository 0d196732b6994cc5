//! Root systems of finite type (rank at most 4), weights in the
//! fundamental-weight basis, dominance order, and the Weyl dimension formula.
//!
//! Conventions: a weight is a vector of integers in the fundamental-weight
//! basis, so the weight of the simple root `α_j` is the j-th column of the
//! Cartan matrix `a[i][j] = ⟨α_j, α_i∨⟩`. For G2 the first simple root is
//! short, the Cartan matrix is [[2,-3],[-1,2]], and the six positive roots
//! come out in height order:
//!
//! ```text
//! α1 = (2,-1)   α2 = (-3,2)   α3 = α1+α2 = (-1,1)
//! α4 = 2α1+α2 = (1,0)   α5 = 3α1+α2 = (3,-1)   α6 = 3α1+2α2 = (0,1)
//! ```

use crate::Error;
use serde::{Deserialize, Serialize};
use smallvec::SmallVec;
use std::collections::{BTreeSet, HashMap};
use std::fmt;

pub const MAX_RANK: usize = 4;

/// Integer weight in the fundamental-weight basis.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Weight(pub SmallVec<[i64; 4]>);

impl Weight {
    pub fn new(coords: impl Into<SmallVec<[i64; 4]>>) -> Self {
        Weight(coords.into())
    }

    pub fn zero(rank: usize) -> Self {
        Weight(SmallVec::from_elem(0, rank))
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn is_dominant(&self) -> bool {
        self.0.iter().all(|&c| c >= 0)
    }

    pub fn add(&self, other: &Weight) -> Weight {
        assert_eq!(self.rank(), other.rank());
        Weight(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &Weight) -> Weight {
        assert_eq!(self.rank(), other.rank());
        Weight(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn scale(&self, k: i64) -> Weight {
        Weight(self.0.iter().map(|c| c * k).collect())
    }

    /// Parse "a,b" (comma-separated coordinates).
    pub fn parse(s: &str) -> Result<Weight, Error> {
        let coords: Result<SmallVec<[i64; 4]>, _> =
            s.split(',').map(|t| t.trim().parse::<i64>()).collect();
        coords
            .map(Weight)
            .map_err(|_| Error::InvalidInput(format!("cannot parse weight {s:?}")))
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|c| c.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl fmt::Debug for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A root, kept both in simple-root coordinates and as a weight.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Root {
    /// Coordinates over the simple roots (all non-negative for positive roots).
    pub simple_coords: Vec<i64>,
    /// Image in the fundamental-weight basis (Cartan transform of the above).
    pub weight: Weight,
    /// Sum of simple-root coordinates.
    pub height: i64,
    /// Squared length (α,α), normalized so short simple roots have length² 2.
    pub length_sq: i64,
    /// Coroot α∨ in the basis of simple coroots (integer coordinates).
    pub coroot_coords: Vec<i64>,
}

/// A finite root system with its Cartan data and the fixed ordering of
/// positive roots used everywhere downstream.
#[derive(Debug)]
pub struct RootSystem {
    label: String,
    rank: usize,
    cartan: Vec<Vec<i64>>,
    /// adj(A) with A the Cartan matrix: A^{-1} = adj / det.
    cartan_adj: Vec<Vec<i64>>,
    cartan_det: i64,
    /// Symmetrizers d_i = (α_i,α_i)/2, minimal positive integers.
    symmetrizer: Vec<i64>,
    positive_roots: Vec<Root>,
    /// simple coordinates -> index into positive_roots
    index_of: HashMap<Vec<i64>, usize>,
    rho: Weight,
    /// Scaled inner product on weights: form_w[i][j] = det(A)·(ϖ_i, ϖ_j).
    form_w: Vec<Vec<i64>>,
}

impl RootSystem {
    /// Build the root system named by a family letter and rank, e.g. ("G", 2).
    pub fn new(family: char, rank: usize) -> Result<Self, Error> {
        let cartan = cartan_matrix(family, rank)?;
        Ok(Self::from_cartan(format!("{family}{rank}"), cartan))
    }

    /// Parse labels like "G2", "A1", "B3".
    pub fn from_label(label: &str) -> Result<Self, Error> {
        let mut chars = label.chars();
        let family = chars
            .next()
            .ok_or_else(|| Error::UnknownType(label.to_string()))?
            .to_ascii_uppercase();
        let rank: usize = chars
            .as_str()
            .parse()
            .map_err(|_| Error::UnknownType(label.to_string()))?;
        Self::new(family, rank)
    }

    fn from_cartan(label: String, cartan: Vec<Vec<i64>>) -> Self {
        let rank = cartan.len();
        let (adj, det) = adjugate(&cartan);
        assert!(det > 0, "Cartan matrix must have positive determinant");
        let symmetrizer = symmetrizers(&cartan);
        let positive_roots = enumerate_positive_roots(&cartan, &symmetrizer);
        let index_of = positive_roots
            .iter()
            .enumerate()
            .map(|(i, r)| (r.simple_coords.clone(), i))
            .collect();
        let rho = Weight(SmallVec::from_elem(1, rank));
        // (ϖ_i, ϖ_j) = (A^{-1})_{ji} d_j ; scale by det(A) to stay integral.
        let mut form_w = vec![vec![0i64; rank]; rank];
        for i in 0..rank {
            for j in 0..rank {
                form_w[i][j] = adj[j][i] * symmetrizer[j];
            }
        }
        RootSystem {
            label,
            rank,
            cartan,
            cartan_adj: adj,
            cartan_det: det,
            symmetrizer,
            positive_roots,
            index_of,
            rho,
            form_w,
        }
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn positive_roots(&self) -> &[Root] {
        &self.positive_roots
    }

    pub fn num_positive_roots(&self) -> usize {
        self.positive_roots.len()
    }

    pub fn root(&self, idx: usize) -> &Root {
        &self.positive_roots[idx]
    }

    pub fn rho(&self) -> &Weight {
        &self.rho
    }

    pub fn symmetrizer(&self) -> &[i64] {
        &self.symmetrizer
    }

    /// Index of the positive root with the given simple coordinates.
    pub fn index_of_simple_coords(&self, coords: &[i64]) -> Option<usize> {
        self.index_of.get(coords).copied()
    }

    /// Is the given simple-coordinate vector a root (of either sign)?
    pub fn is_root(&self, coords: &[i64]) -> bool {
        if coords.iter().all(|&c| c >= 0) && coords.iter().any(|&c| c > 0) {
            return self.index_of.contains_key(coords);
        }
        if coords.iter().all(|&c| c <= 0) && coords.iter().any(|&c| c < 0) {
            let neg: Vec<i64> = coords.iter().map(|c| -c).collect();
            return self.index_of.contains_key(&neg);
        }
        false
    }

    /// ⟨μ, α∨⟩ for the positive root with index `idx`.
    pub fn coroot_pairing(&self, mu: &Weight, idx: usize) -> i64 {
        self.positive_roots[idx]
            .coroot_coords
            .iter()
            .zip(mu.coords())
            .map(|(k, m)| k * m)
            .sum()
    }

    /// Scaled W-invariant form on two weights: det(A)·(μ, ν).
    pub fn form_weights(&self, mu: &Weight, nu: &Weight) -> i64 {
        let mut acc = 0i64;
        for i in 0..self.rank {
            for j in 0..self.rank {
                acc += mu.coords()[i] * self.form_w[i][j] * nu.coords()[j];
            }
        }
        acc
    }

    /// Scaled form between a weight and a root: det(A)·(μ, α).
    pub fn form_weight_root(&self, mu: &Weight, root: &Root) -> i64 {
        let raw: i64 = root
            .simple_coords
            .iter()
            .zip(&self.symmetrizer)
            .zip(mu.coords())
            .map(|((c, d), m)| c * d * m)
            .sum();
        raw * self.cartan_det
    }

    /// Scaled form between two roots: det(A)·(α, β).
    pub fn form_roots(&self, a: &Root, b: &Root) -> i64 {
        self.form_weight_root(&a.weight, b)
    }

    /// Express `w` in simple-root coordinates if it lies in the root lattice:
    /// returns c with Σ c_i α_i = w.
    pub fn to_root_coords(&self, w: &Weight) -> Option<Vec<i64>> {
        let mut out = vec![0i64; self.rank];
        for (i, o) in out.iter_mut().enumerate() {
            let num: i64 = (0..self.rank)
                .map(|j| self.cartan_adj[i][j] * w.coords()[j])
                .sum();
            if num % self.cartan_det != 0 {
                return None;
            }
            *o = num / self.cartan_det;
        }
        Some(out)
    }

    /// Dominance order: mu ≤ lam iff lam − mu is a non-negative integer
    /// combination of simple roots.
    pub fn dominance_le(&self, mu: &Weight, lam: &Weight) -> bool {
        match self.to_root_coords(&lam.sub(mu)) {
            Some(c) => c.iter().all(|&v| v >= 0),
            None => false,
        }
    }

    /// Total degree of μ over the simple roots, scaled by det(A) to stay
    /// integral. Strictly monotone along dominance, so sorting by it refines
    /// the dominance order.
    pub fn scaled_degree(&self, mu: &Weight) -> i64 {
        let mut acc = 0i64;
        for i in 0..self.rank {
            for j in 0..self.rank {
                acc += self.cartan_adj[i][j] * mu.coords()[j];
            }
        }
        acc
    }

    /// The deterministic linear order refining dominance used for all tables:
    /// ascending scaled degree, ties broken with larger first coordinate
    /// first.
    pub fn linear_cmp(&self, a: &Weight, b: &Weight) -> std::cmp::Ordering {
        self.scaled_degree(a)
            .cmp(&self.scaled_degree(b))
            .then_with(|| b.coords().cmp(a.coords()))
    }

    /// All dominant weights μ ≤ lam, sorted by `linear_cmp`.
    pub fn saturated_below(&self, lam: &Weight) -> Vec<Weight> {
        assert!(lam.is_dominant(), "saturated_below requires dominant weight");
        // c_j = (λ-μ, ϖ_j)/d_j is bounded by (λ, ϖ_j)/d_j for dominant μ.
        let bounds: Vec<i64> = (0..self.rank)
            .map(|j| {
                let num: i64 = (0..self.rank)
                    .map(|k| self.cartan_adj[k][j] * self.symmetrizer[k] * lam.coords()[k])
                    .sum();
                // ceil(num / (d_j * det)) plus slack; num >= 0 for dominant λ
                num / (self.symmetrizer[j] * self.cartan_det) + 1
            })
            .collect();
        let mut out = Vec::new();
        let mut c = vec![0i64; self.rank];
        self.saturated_rec(lam, &bounds, &mut c, 0, &mut out);
        out.sort_by(|a, b| self.linear_cmp(a, b));
        out
    }

    fn saturated_rec(
        &self,
        lam: &Weight,
        bounds: &[i64],
        c: &mut Vec<i64>,
        i: usize,
        out: &mut Vec<Weight>,
    ) {
        if i == self.rank {
            let mut w = lam.clone();
            for j in 0..self.rank {
                for (k, wc) in w.0.iter_mut().enumerate() {
                    *wc -= c[j] * self.cartan[k][j];
                }
            }
            if w.is_dominant() {
                out.push(w);
            }
            return;
        }
        for v in 0..=bounds[i] {
            c[i] = v;
            self.saturated_rec(lam, bounds, c, i + 1, out);
        }
        c[i] = 0;
    }

    /// Covering relations of the dominance order restricted to `weights`
    /// (which should be dominance-closed). Each edge is (lower, upper).
    pub fn hasse_diagram(&self, weights: &[Weight]) -> Vec<(Weight, Weight)> {
        let mut edges = Vec::new();
        for a in weights {
            for b in weights {
                if a != b && self.dominance_le(a, b) {
                    let covered = weights.iter().any(|m| {
                        m != a && m != b && self.dominance_le(a, m) && self.dominance_le(m, b)
                    });
                    if !covered {
                        edges.push((a.clone(), b.clone()));
                    }
                }
            }
        }
        edges.sort_by(|(a1, b1), (a2, b2)| {
            self.linear_cmp(a1, a2).then_with(|| self.linear_cmp(b1, b2))
        });
        edges
    }

    /// Simple reflection s_i applied to a weight.
    pub fn simple_reflection(&self, i: usize, mu: &Weight) -> Weight {
        let c = mu.coords()[i];
        let mut out = mu.clone();
        for (k, v) in out.0.iter_mut().enumerate() {
            *v -= c * self.cartan[k][i];
        }
        out
    }

    /// The dominant Weyl-group conjugate of a weight.
    pub fn dominant_conjugate(&self, mu: &Weight) -> Weight {
        let mut w = mu.clone();
        loop {
            match w.coords().iter().position(|&c| c < 0) {
                Some(i) => w = self.simple_reflection(i, &w),
                None => return w,
            }
        }
    }

    /// Full Weyl-group orbit of a weight.
    pub fn weyl_orbit(&self, mu: &Weight) -> Vec<Weight> {
        let mut seen: BTreeSet<Weight> = BTreeSet::new();
        let mut stack = vec![mu.clone()];
        while let Some(w) = stack.pop() {
            if seen.insert(w.clone()) {
                for i in 0..self.rank {
                    stack.push(self.simple_reflection(i, &w));
                }
            }
        }
        seen.into_iter().collect()
    }

    /// Weyl dimension formula: ∏_{α>0} ⟨λ+ρ, α∨⟩ / ⟨ρ, α∨⟩.
    pub fn weyl_dimension(&self, lam: &Weight) -> num_bigint::BigInt {
        use num_bigint::BigInt;
        assert!(lam.is_dominant());
        let lr = lam.add(&self.rho);
        let mut num = BigInt::from(1);
        let mut den = BigInt::from(1);
        for idx in 0..self.positive_roots.len() {
            num *= BigInt::from(self.coroot_pairing(&lr, idx));
            den *= BigInt::from(self.coroot_pairing(&self.rho, idx));
        }
        let (q, r) = num_integer::Integer::div_rem(&num, &den);
        assert!(num_traits::Zero::is_zero(&r), "Weyl dimension not integral");
        q
    }
}

fn cartan_matrix(family: char, rank: usize) -> Result<Vec<Vec<i64>>, Error> {
    let unknown = || Error::UnknownType(format!("{family}{rank}"));
    if rank == 0 || rank > MAX_RANK {
        return Err(unknown());
    }
    let mut a = vec![vec![0i64; rank]; rank];
    for (i, row) in a.iter_mut().enumerate() {
        row[i] = 2;
    }
    let chain = |a: &mut Vec<Vec<i64>>| {
        for i in 0..rank - 1 {
            a[i][i + 1] = -1;
            a[i + 1][i] = -1;
        }
    };
    match family {
        'A' => chain(&mut a),
        'B' => {
            // last simple root short: ⟨α_{n-1}, α_n∨⟩ = -2
            if rank < 2 {
                return Err(unknown());
            }
            chain(&mut a);
            a[rank - 1][rank - 2] = -2;
        }
        'C' => {
            if rank < 2 {
                return Err(unknown());
            }
            chain(&mut a);
            a[rank - 2][rank - 1] = -2;
        }
        'D' => {
            if rank != 4 {
                return Err(unknown());
            }
            for m in a.iter_mut() {
                for v in m.iter_mut() {
                    if *v == -1 {
                        *v = 0;
                    }
                }
            }
            // star: node 2 (0-indexed 1) central
            for &(i, j) in &[(0usize, 1usize), (2, 1), (3, 1)] {
                a[i][j] = -1;
                a[j][i] = -1;
            }
        }
        'F' => {
            if rank != 4 {
                return Err(unknown());
            }
            chain(&mut a);
            // α1, α2 long; α3, α4 short
            a[2][1] = -2;
            a[1][2] = -1;
        }
        'G' => {
            if rank != 2 {
                return Err(unknown());
            }
            // α1 short: ⟨α2, α1∨⟩ = -3
            a[0][1] = -3;
            a[1][0] = -1;
        }
        _ => return Err(unknown()),
    }
    Ok(a)
}

/// Adjugate and determinant of a small integer matrix.
fn adjugate(a: &[Vec<i64>]) -> (Vec<Vec<i64>>, i64) {
    let n = a.len();
    let det = determinant(a);
    let mut adj = vec![vec![0i64; n]; n];
    for i in 0..n {
        for j in 0..n {
            // cofactor C_ji
            let minor: Vec<Vec<i64>> = (0..n)
                .filter(|&r| r != j)
                .map(|r| {
                    (0..n)
                        .filter(|&c| c != i)
                        .map(|c| a[r][c])
                        .collect::<Vec<_>>()
                })
                .collect();
            let sign = if (i + j) % 2 == 0 { 1 } else { -1 };
            adj[i][j] = sign * determinant(&minor);
        }
    }
    (adj, det)
}

fn determinant(a: &[Vec<i64>]) -> i64 {
    let n = a.len();
    match n {
        0 => 1,
        1 => a[0][0],
        _ => (0..n)
            .map(|j| {
                let minor: Vec<Vec<i64>> = (1..n)
                    .map(|r| {
                        (0..n)
                            .filter(|&c| c != j)
                            .map(|c| a[r][c])
                            .collect::<Vec<_>>()
                    })
                    .collect();
                let sign = if j % 2 == 0 { 1 } else { -1 };
                sign * a[0][j] * determinant(&minor)
            })
            .sum(),
    }
}

/// Minimal positive integers d with d_i a_ij = d_j a_ji.
fn symmetrizers(a: &[Vec<i64>]) -> Vec<i64> {
    let n = a.len();
    // propagate rationally across the Dynkin graph, then clear denominators
    let mut d: Vec<Option<(i64, i64)>> = vec![None; n];
    d[0] = Some((1, 1));
    loop {
        let mut changed = false;
        for i in 0..n {
            for j in 0..n {
                if i != j && a[i][j] != 0 && d[i].is_some() && d[j].is_none() {
                    let (num, den) = d[i].unwrap();
                    // d_j = d_i a_ij / a_ji
                    d[j] = Some(reduce_frac(num * a[i][j], den * a[j][i]));
                    changed = true;
                }
            }
        }
        if !changed {
            match d.iter().position(|v| v.is_none()) {
                Some(k) => d[k] = Some((1, 1)), // disconnected component
                None => break,
            }
        }
    }
    let lcm_den = d
        .iter()
        .map(|v| v.unwrap().1)
        .fold(1i64, num_integer::lcm);
    let mut out: Vec<i64> = d
        .iter()
        .map(|v| {
            let (num, den) = v.unwrap();
            num * (lcm_den / den)
        })
        .collect();
    let g = out.iter().copied().fold(0i64, num_integer::gcd);
    for v in out.iter_mut() {
        *v /= g;
    }
    assert!(out.iter().all(|&v| v > 0));
    out
}

fn reduce_frac(num: i64, den: i64) -> (i64, i64) {
    assert!(den != 0);
    let g = num_integer::gcd(num, den);
    let (mut num, mut den) = (num / g, den / g);
    if den < 0 {
        num = -num;
        den = -den;
    }
    (num, den)
}

fn enumerate_positive_roots(cartan: &[Vec<i64>], symmetrizer: &[i64]) -> Vec<Root> {
    let rank = cartan.len();
    let mut roots: BTreeSet<Vec<i64>> = BTreeSet::new();
    for i in 0..rank {
        let mut c = vec![0i64; rank];
        c[i] = 1;
        roots.insert(c);
    }
    // closure by root strings, one height at a time
    let mut frontier: Vec<Vec<i64>> = roots.iter().cloned().collect();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for beta in &frontier {
            for i in 0..rank {
                // p = max k with β - kα_i a root
                let mut p = 0i64;
                loop {
                    let mut test = beta.clone();
                    test[i] -= p + 1;
                    if is_root_in(&roots, &test) {
                        p += 1;
                    } else {
                        break;
                    }
                }
                let pairing: i64 = (0..rank).map(|k| cartan[i][k] * beta[k]).sum();
                let q = p - pairing;
                if q >= 1 {
                    let mut gamma = beta.clone();
                    gamma[i] += 1;
                    if roots.insert(gamma.clone()) {
                        next.push(gamma);
                    }
                }
            }
        }
        frontier = next;
    }

    let mut list: Vec<Vec<i64>> = roots.into_iter().collect();
    // height ascending, then lexicographically descending so simple roots
    // come out in index order
    list.sort_by(|a, b| {
        let ha: i64 = a.iter().sum();
        let hb: i64 = b.iter().sum();
        ha.cmp(&hb).then_with(|| b.cmp(a))
    });

    list.into_iter()
        .map(|c| {
            let weight = Weight(
                (0..rank)
                    .map(|i| (0..rank).map(|j| cartan[i][j] * c[j]).sum())
                    .collect(),
            );
            let height = c.iter().sum();
            // (α,α) = Σ_j c_j d_j ⟨α, α_j∨⟩ = Σ_j c_j d_j weight_j
            let length_sq: i64 = (0..rank)
                .map(|j| c[j] * symmetrizer[j] * weight.coords()[j])
                .sum();
            assert!(length_sq > 0 && length_sq % 2 == 0);
            let d_alpha = length_sq / 2;
            let coroot_coords: Vec<i64> = (0..rank)
                .map(|j| {
                    let num = c[j] * symmetrizer[j];
                    assert_eq!(num % d_alpha, 0, "coroot not integral");
                    num / d_alpha
                })
                .collect();
            Root {
                simple_coords: c,
                weight,
                height,
                length_sq,
                coroot_coords,
            }
        })
        .collect()
}

fn is_root_in(roots: &BTreeSet<Vec<i64>>, coords: &[i64]) -> bool {
    if coords.iter().all(|&c| c == 0) {
        return false;
    }
    if coords.iter().all(|&c| c >= 0) {
        return roots.contains(coords);
    }
    if coords.iter().all(|&c| c <= 0) {
        let neg: Vec<i64> = coords.iter().map(|c| -c).collect();
        return roots.contains(&neg);
    }
    false
}
