//! Formal characters: finitely supported multiplicity maps on the weight
//! lattice, plus Freudenthal's recursion for the character of the simple
//! complex module of a given highest weight.

use crate::rootsys::{RootSystem, Weight};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt;

/// A formal character: weight -> multiplicity, finite support.
#[derive(Clone, Debug, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Character(pub BTreeMap<Weight, u64>);

impl Character {
    pub fn new() -> Self {
        Character(BTreeMap::new())
    }

    pub fn singleton(w: Weight) -> Self {
        let mut c = Character::new();
        c.0.insert(w, 1);
        c
    }

    pub fn multiplicity(&self, w: &Weight) -> u64 {
        self.0.get(w).copied().unwrap_or(0)
    }

    pub fn add_weight(&mut self, w: Weight, m: u64) {
        if m > 0 {
            *self.0.entry(w).or_insert(0) += m;
        }
    }

    /// Total dimension.
    pub fn total(&self) -> u64 {
        self.0.values().sum()
    }

    pub fn support(&self) -> impl Iterator<Item = &Weight> {
        self.0.keys()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Weight, &u64)> {
        self.0.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn plus(&self, other: &Character) -> Character {
        let mut out = self.clone();
        for (w, m) in &other.0 {
            out.add_weight(w.clone(), *m);
        }
        out
    }

    /// Pointwise difference; None if any multiplicity would go negative.
    pub fn minus(&self, other: &Character) -> Option<Character> {
        let mut out = self.clone();
        for (w, m) in &other.0 {
            let cur = out.0.get_mut(w)?;
            if *cur < *m {
                return None;
            }
            *cur -= *m;
            if *cur == 0 {
                out.0.remove(w);
            }
        }
        Some(out)
    }

    /// Does every multiplicity of `self` fit inside `other`?
    pub fn le(&self, other: &Character) -> bool {
        self.0.iter().all(|(w, m)| *m <= other.multiplicity(w))
    }

    /// Product of characters (convolution of multiplicities).
    pub fn product(&self, other: &Character) -> Character {
        let mut out = Character::new();
        for (w1, m1) in &self.0 {
            for (w2, m2) in &other.0 {
                out.add_weight(w1.add(w2), m1 * m2);
            }
        }
        out
    }

    /// Stretch every weight by an integer factor (Frobenius-twist on the
    /// character level).
    pub fn dilate(&self, k: i64) -> Character {
        let mut out = Character::new();
        for (w, m) in &self.0 {
            out.add_weight(w.scale(k), *m);
        }
        out
    }
}

impl fmt::Display for Character {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .0
            .iter()
            .map(|(w, m)| if *m == 1 { format!("e{w}") } else { format!("{m}·e{w}") })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// Weight multiplicities of the simple complex module V(λ) by Freudenthal's
/// recursion, tabulated on the dominant weights ≤ λ.
pub fn dominant_multiplicities(rs: &RootSystem, lam: &Weight) -> BTreeMap<Weight, u64> {
    assert!(lam.is_dominant());
    let mut order = rs.saturated_below(lam);
    // top first: recursion feeds on weights closer to λ
    order.reverse();
    let mut mult: BTreeMap<Weight, u64> = BTreeMap::new();
    let lam_rho = lam.add(rs.rho());
    let c_lam = rs.form_weights(&lam_rho, &lam_rho);
    for mu in &order {
        if mu == lam {
            mult.insert(mu.clone(), 1);
            continue;
        }
        let mu_rho = mu.add(rs.rho());
        let denom = c_lam - rs.form_weights(&mu_rho, &mu_rho);
        assert!(denom > 0, "Freudenthal denominator must be positive");
        let mut rhs: i64 = 0;
        for root in rs.positive_roots() {
            let mut k = 1i64;
            loop {
                let nu = Weight::new(
                    mu.coords()
                        .iter()
                        .zip(root.weight.coords())
                        .map(|(a, b)| a + k * b)
                        .collect::<smallvec::SmallVec<[i64; 4]>>(),
                );
                let dom = rs.dominant_conjugate(&nu);
                let m = match mult.get(&dom) {
                    Some(&m) => m,
                    None => break,
                };
                rhs += rs.form_weight_root(&nu, root) * m as i64;
                k += 1;
            }
        }
        let num = 2 * rhs;
        assert!(num >= 0 && num % denom == 0, "Freudenthal division failed");
        let m = (num / denom) as u64;
        if m > 0 {
            mult.insert(mu.clone(), m);
        }
    }
    mult
}

/// χ(λ): the full character of V(λ), all Weyl-orbit images included.
pub fn weyl_character(rs: &RootSystem, lam: &Weight) -> Character {
    let dom = dominant_multiplicities(rs, lam);
    let mut ch = Character::new();
    for (mu, m) in &dom {
        for nu in rs.weyl_orbit(mu) {
            ch.add_weight(nu, *m);
        }
    }
    ch
}
