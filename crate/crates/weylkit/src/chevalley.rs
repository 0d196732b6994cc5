//! Chevalley basis structure constants.
//!
//! For positive roots the constants N_{α,β} (with [x_α, x_β] = N_{α,β}
//! x_{α+β}) are fixed by the extraspecial-pair convention: order the positive
//! roots by height, give the extraspecial pair of each non-simple root the
//! positive sign N = p+1, and propagate every other sign through the standard
//! quadruple relation. Constants for mixed and negative pairs follow from the
//! triple relation N_{a,b}/(c,c) = N_{b,c}/(a,a) = N_{c,a}/(b,b) on triples
//! with a+b+c = 0, together with N_{-a,-b} = -N_{a,b}.
//!
//! Other sign conventions exist in the wild; anything downstream that is
//! compared against external tables must be sign-insensitive.

use crate::rootsys::RootSystem;
use std::collections::HashMap;

/// Signed root index: +(i+1) is positive root i, -(i+1) its negative.
pub type SignedRoot = i32;

pub fn signed(idx: usize, negative: bool) -> SignedRoot {
    let v = (idx + 1) as i32;
    if negative {
        -v
    } else {
        v
    }
}

pub fn root_index(s: SignedRoot) -> usize {
    (s.unsigned_abs() as usize) - 1
}

/// One bracket [e_a, e_b] of root vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Bracket {
    Zero,
    /// coeff · x_{root} (negative `root` means a negative root vector)
    Root { root: SignedRoot, coeff: i64 },
    /// sign · h_{α∨} for the positive root with this index
    Coroot { pos_index: usize, sign: i64 },
}

/// Complete structure-constant table for a root system.
pub struct ChevalleyConstants {
    num_pos: usize,
    /// N_{β_i, β_j} for pairs with β_i+β_j a positive root.
    pos_n: HashMap<(usize, usize), i64>,
    table: HashMap<(SignedRoot, SignedRoot), Bracket>,
}

impl ChevalleyConstants {
    pub fn num_positive_roots(&self) -> usize {
        self.num_pos
    }

    /// N_{β_i, β_j} for positive roots whose sum is a root.
    pub fn n_positive(&self, i: usize, j: usize) -> Option<i64> {
        self.pos_n
            .get(&(i, j))
            .copied()
            .or_else(|| self.pos_n.get(&(j, i)).map(|v| -v))
    }

    /// Bracket of two root vectors given by signed indices.
    pub fn bracket(&self, a: SignedRoot, b: SignedRoot) -> &Bracket {
        self.table.get(&(a, b)).unwrap_or(&Bracket::Zero)
    }
}

/// Max k such that β - kα is a root (the "p" of the α-string through β).
fn string_down(rs: &RootSystem, alpha: usize, beta: usize) -> i64 {
    let a = &rs.root(alpha).simple_coords;
    let b = &rs.root(beta).simple_coords;
    let mut k = 1i64;
    loop {
        let test: Vec<i64> = b.iter().zip(a).map(|(bv, av)| bv - k * av).collect();
        if rs.is_root(&test) {
            k += 1;
        } else {
            return k - 1;
        }
    }
}

fn sum_index(rs: &RootSystem, i: usize, j: usize) -> Option<usize> {
    let s: Vec<i64> = rs
        .root(i)
        .simple_coords
        .iter()
        .zip(&rs.root(j).simple_coords)
        .map(|(a, b)| a + b)
        .collect();
    rs.index_of_simple_coords(&s)
}

/// β_i - β_j as a signed root index, when it is a root.
fn diff_signed(rs: &RootSystem, i: usize, j: usize) -> Option<SignedRoot> {
    let d: Vec<i64> = rs
        .root(i)
        .simple_coords
        .iter()
        .zip(&rs.root(j).simple_coords)
        .map(|(a, b)| a - b)
        .collect();
    if d.iter().all(|&v| v == 0) {
        return None;
    }
    if d.iter().all(|&v| v >= 0) {
        rs.index_of_simple_coords(&d).map(|k| signed(k, false))
    } else if d.iter().all(|&v| v <= 0) {
        let neg: Vec<i64> = d.iter().map(|v| -v).collect();
        rs.index_of_simple_coords(&neg).map(|k| signed(k, true))
    } else {
        None
    }
}

struct Builder<'a> {
    rs: &'a RootSystem,
    pos_n: HashMap<(usize, usize), i64>,
}

impl Builder<'_> {
    fn n(&self, i: usize, j: usize) -> i64 {
        match self.pos_n.get(&(i, j)) {
            Some(&v) => v,
            None => self
                .pos_n
                .get(&(j, i))
                .map(|&v| -v)
                .unwrap_or_else(|| panic!("constant N[{i},{j}] requested before computed")),
        }
    }

    /// N_{β_a, -β_b} for distinct positive roots a, b via the triple rule;
    /// zero when β_a - β_b is not a root.
    fn mixed(&self, a: usize, b: usize) -> i64 {
        let rs = self.rs;
        match diff_signed(rs, a, b) {
            None => 0,
            Some(e) if e > 0 => {
                // β_a - β_b = ε > 0: N_{a,-b} = (ε,ε)(-N_{b,ε})/(a,a)
                let eps = root_index(e);
                let num = rs.root(eps).length_sq * -self.n(b, eps);
                let den = rs.root(a).length_sq;
                assert_eq!(num % den, 0, "triple rule not integral");
                num / den
            }
            Some(e) => {
                // β_b - β_a = ε > 0: N_{a,-b} = (ε,ε)·N_{ε,a}/(b,b)
                let eps = root_index(e);
                let num = rs.root(eps).length_sq * self.n(eps, a);
                let den = rs.root(b).length_sq;
                assert_eq!(num % den, 0, "triple rule not integral");
                num / den
            }
        }
    }
}

pub fn chevalley_constants(rs: &RootSystem) -> ChevalleyConstants {
    let n = rs.num_positive_roots();
    let mut builder = Builder {
        rs,
        pos_n: HashMap::new(),
    };

    // positive roots come sorted by height, so index order is a valid
    // processing order
    for gamma in 0..n {
        if rs.root(gamma).height == 1 {
            continue;
        }
        let mut special: Vec<(usize, usize)> = Vec::new();
        for a in 0..n {
            for b in (a + 1)..n {
                if sum_index(rs, a, b) == Some(gamma) {
                    special.push((a, b));
                }
            }
        }
        assert!(!special.is_empty());
        special.sort_unstable();
        let (a0, b0) = special[0]; // extraspecial: minimal first component
        let n0 = string_down(rs, a0, b0) + 1;
        builder.pos_n.insert((a0, b0), n0);

        let gg = rs.root(gamma).length_sq;
        for &(a, b) in &special[1..] {
            // quadruple relation on (α0, β0, -α, -β):
            // N_{α,β} = (γ,γ)·[ N_{β0,-α}N_{α0,-β}/(β0-α,β0-α)
            //                  - N_{α0,-α}N_{β0,-β}/(α0-α,α0-α) ] / N_{α0,β0}
            let mut num = 0i64;
            let mut den = 1i64;
            if let Some(d) = diff_signed(rs, b0, a) {
                let dlen = rs.root(root_index(d)).length_sq;
                let t = builder.mixed(b0, a) * builder.mixed(a0, b);
                num = num * dlen + t * den;
                den *= dlen;
            }
            if let Some(d) = diff_signed(rs, a0, a) {
                let dlen = rs.root(root_index(d)).length_sq;
                let t = -builder.mixed(a0, a) * builder.mixed(b0, b);
                num = num * dlen + t * den;
                den *= dlen;
            }
            let total_num = gg * num;
            let total_den = den * n0;
            assert_eq!(total_num % total_den, 0, "special-pair sign not integral");
            let value = total_num / total_den;
            assert_eq!(
                value.abs(),
                string_down(rs, a, b) + 1,
                "|N| must equal p+1 for pair ({a},{b})"
            );
            builder.pos_n.insert((a, b), value);
        }
    }

    // assemble the full signed table
    let mut table = HashMap::new();
    for i in 0..n {
        table.insert(
            (signed(i, false), signed(i, true)),
            Bracket::Coroot {
                pos_index: i,
                sign: 1,
            },
        );
        table.insert(
            (signed(i, true), signed(i, false)),
            Bracket::Coroot {
                pos_index: i,
                sign: -1,
            },
        );
        for j in 0..n {
            if i == j {
                continue;
            }
            if let Some(k) = sum_index(rs, i, j) {
                let c = builder.n(i, j);
                table.insert(
                    (signed(i, false), signed(j, false)),
                    Bracket::Root {
                        root: signed(k, false),
                        coeff: c,
                    },
                );
                table.insert(
                    (signed(i, true), signed(j, true)),
                    Bracket::Root {
                        root: signed(k, true),
                        coeff: -c,
                    },
                );
            }
            if let Some(target) = diff_signed(rs, i, j) {
                let c = builder.mixed(i, j);
                table.insert(
                    (signed(i, false), signed(j, true)),
                    Bracket::Root {
                        root: target,
                        coeff: c,
                    },
                );
                table.insert(
                    (signed(j, true), signed(i, false)),
                    Bracket::Root {
                        root: target,
                        coeff: -c,
                    },
                );
            }
        }
    }

    ChevalleyConstants {
        num_pos: n,
        pos_n: builder.pos_n,
        table,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::RootSystem;

    fn g2() -> (RootSystem, ChevalleyConstants) {
        let rs = RootSystem::new('G', 2).unwrap();
        let cc = chevalley_constants(&rs);
        (rs, cc)
    }

    #[test]
    fn g2_absolute_values_match_root_strings() {
        let (_, cc) = g2();
        assert_eq!(cc.n_positive(0, 1).unwrap().abs(), 1); // α1+α2 = α3
        assert_eq!(cc.n_positive(0, 2).unwrap().abs(), 2); // α1+α3 = α4
        assert_eq!(cc.n_positive(0, 3).unwrap().abs(), 3); // α1+α4 = α5
        assert_eq!(cc.n_positive(1, 4).unwrap().abs(), 1); // α2+α5 = α6
        assert_eq!(cc.n_positive(2, 3).unwrap().abs(), 3); // α3+α4 = α6
    }

    #[test]
    fn g2_constants_fixed_by_extraspecial_convention() {
        let (_, cc) = g2();
        assert_eq!(cc.n_positive(0, 1), Some(1));
        assert_eq!(cc.n_positive(0, 2), Some(2));
        assert_eq!(cc.n_positive(0, 3), Some(3));
        assert_eq!(cc.n_positive(1, 4), Some(1));
        assert_eq!(cc.n_positive(2, 3), Some(-3));
        assert_eq!(cc.n_positive(1, 0), Some(-1));
        assert_eq!(cc.n_positive(0, 4), None); // α1+α5 not a root
    }

    #[test]
    fn antisymmetry_everywhere() {
        for label in ["A2", "B2", "G2", "A3"] {
            let rs = RootSystem::from_label(label).unwrap();
            let cc = chevalley_constants(&rs);
            let n = rs.num_positive_roots() as i32;
            for a in (-n..=n).filter(|&v| v != 0) {
                for b in (-n..=n).filter(|&v| v != 0) {
                    match (cc.bracket(a, b), cc.bracket(b, a)) {
                        (Bracket::Zero, Bracket::Zero) => {}
                        (
                            Bracket::Root { root: r1, coeff: c1 },
                            Bracket::Root { root: r2, coeff: c2 },
                        ) => {
                            assert_eq!(r1, r2);
                            assert_eq!(*c1, -c2, "bracket({a},{b})");
                        }
                        (
                            Bracket::Coroot { pos_index: i1, sign: s1 },
                            Bracket::Coroot { pos_index: i2, sign: s2 },
                        ) => {
                            assert_eq!(i1, i2);
                            assert_eq!(*s1, -s2);
                        }
                        other => panic!("mismatched bracket kinds {other:?}"),
                    }
                }
            }
        }
    }

    // Full adjoint-representation Jacobi sweep. Elements are integer vectors
    // over the basis x_1..x_N, y_1..y_N, h_1..h_rank.
    fn jacobi_sweep(label: &str) {
        let rs = RootSystem::from_label(label).unwrap();
        let cc = chevalley_constants(&rs);
        let n = rs.num_positive_roots();
        let rank = rs.rank();
        let dim = 2 * n + rank;

        let as_signed = |k: usize| -> Option<SignedRoot> {
            if k < n {
                Some(signed(k, false))
            } else if k < 2 * n {
                Some(signed(k - n, true))
            } else {
                None
            }
        };

        let bracket_basis = |a: usize, b: usize| -> Vec<i64> {
            let mut out = vec![0i64; dim];
            match (as_signed(a), as_signed(b)) {
                (Some(sa), Some(sb)) => match cc.bracket(sa, sb) {
                    Bracket::Zero => {}
                    Bracket::Root { root, coeff } => {
                        let idx = root_index(*root);
                        let pos = if *root > 0 { idx } else { n + idx };
                        out[pos] += coeff;
                    }
                    Bracket::Coroot { pos_index, sign } => {
                        for (i, k) in rs.root(*pos_index).coroot_coords.iter().enumerate() {
                            out[2 * n + i] += sign * k;
                        }
                    }
                },
                (None, Some(sb)) => {
                    // [h_i, x_β] = ⟨β, α_i∨⟩ x_β
                    let i = a - 2 * n;
                    let idx = root_index(sb);
                    let mut c = rs.root(idx).weight.coords()[i];
                    if sb < 0 {
                        c = -c;
                    }
                    out[b] += c;
                }
                (Some(sa), None) => {
                    let i = b - 2 * n;
                    let idx = root_index(sa);
                    let mut c = rs.root(idx).weight.coords()[i];
                    if sa < 0 {
                        c = -c;
                    }
                    out[a] -= c;
                }
                (None, None) => {}
            }
            out
        };

        let bracket_with_basis = |u: &[i64], c: usize| -> Vec<i64> {
            let mut out = vec![0i64; dim];
            for (i, &cu) in u.iter().enumerate() {
                if cu == 0 {
                    continue;
                }
                for (k, &w) in bracket_basis(i, c).iter().enumerate() {
                    out[k] += cu * w;
                }
            }
            out
        };

        for a in 0..dim {
            for b in 0..dim {
                let ab = bracket_basis(a, b);
                for c in 0..dim {
                    let mut total = bracket_with_basis(&ab, c);
                    let bc = bracket_basis(b, c);
                    // [[b,c],a] = -[a,[b,c]]
                    for (k, v) in bracket_with_basis(&bc, a).into_iter().enumerate() {
                        total[k] += v;
                    }
                    let ca = bracket_basis(c, a);
                    for (k, v) in bracket_with_basis(&ca, b).into_iter().enumerate() {
                        total[k] += v;
                    }
                    assert!(
                        total.iter().all(|&v| v == 0),
                        "{label}: Jacobi fails on basis triple ({a},{b},{c})"
                    );
                }
            }
        }
    }

    #[test]
    fn jacobi_identity_g2() {
        jacobi_sweep("G2");
    }

    #[test]
    fn jacobi_identity_a2() {
        jacobi_sweep("A2");
    }

    #[test]
    fn jacobi_identity_b2() {
        jacobi_sweep("B2");
    }

    #[test]
    fn jacobi_identity_b3() {
        jacobi_sweep("B3");
    }
}
