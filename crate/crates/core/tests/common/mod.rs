//! Independent oracles shared by the integration tests. They use plain dense
//! linear algebra over Q and share no code with the engines under test beyond
//! polynomial arithmetic.

#![allow(dead_code)]

use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

use jetdisc::chart::DivisorChart;
use jetdisc::jets::{arc_parameter_ring, arc_through_chart, TruncArc};
use jetdisc::{Ideal, Poly, PolyRing, Rat};
use num_traits::{One, Zero};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

/// Rank of a dense matrix by fraction-exact Gaussian elimination.
pub fn dense_rank(mut rows: Vec<Vec<Rat>>) -> usize {
    let cols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..rows.len()).find(|&r| !rows[r][c].is_zero()) else {
            continue;
        };
        rows.swap(rank, p);
        let pivot_row = rows[rank].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r != rank && !row[c].is_zero() {
                let factor = &row[c] / &pivot_row[c];
                for (entry, p) in row[c..cols].iter_mut().zip(&pivot_row[c..cols]) {
                    *entry -= &factor * p;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Coefficient of `t^k` in a polynomial of the arc parameter ring.
fn t_coeff(p: &Poly, k: usize) -> Rat {
    p.coefficient(&[k as u32])
}

/// Dimension of `{w in K[t]/(t^{m+1})^N : Σ_i ∂f/∂x_i(γ) w_i ≡ 0 for all f}`
/// from the exact arc components, by counting coefficient conditions.
pub fn tangent_nullity(ideal: &Ideal, arc: &[Poly], m: usize) -> usize {
    let ring = ideal.ring();
    let n_vars = ring.num_vars();
    let unknowns = n_vars * (m + 1);
    let mut rows = Vec::new();
    for f in ideal.generators() {
        let partials: Vec<Poly> = (0..n_vars)
            .map(|i| f.partial_derivative(i).unwrap().substitute(arc).unwrap())
            .collect();
        for j in 0..=m {
            let mut row = vec![Rat::zero(); unknowns];
            for (i, d) in partials.iter().enumerate() {
                for k in 0..=j {
                    row[i * (m + 1) + k] += t_coeff(d, j - k);
                }
            }
            rows.push(row);
        }
    }
    unknowns - dense_rank(rows)
}

/// Nullity of multiplication by a matrix over `K[t]/(t^{m+1})`, entries given
/// as coefficient lists.
pub fn series_matrix_nullity(entries: &[Vec<Vec<Rat>>], cols: usize, m: usize) -> usize {
    let unknowns = cols * (m + 1);
    let mut rows = Vec::new();
    for row in entries {
        for j in 0..=m {
            let mut out = vec![Rat::zero(); unknowns];
            for (c, entry) in row.iter().enumerate() {
                for k in 0..=j {
                    if let Some(a) = entry.get(j - k) {
                        out[c * (m + 1) + k] += a.clone();
                    }
                }
            }
            rows.push(out);
        }
    }
    unknowns - dense_rank(rows)
}

fn all_monomials(nvars: usize, max_degree: u32) -> Vec<Vec<u32>> {
    let mut out = vec![vec![]];
    for _ in 0..nvars {
        let mut next = Vec::new();
        for m in &out {
            let used: u32 = m.iter().sum();
            for e in 0..=(max_degree - used) {
                let mut v = m.clone();
                v.push(e);
                next.push(v);
            }
        }
        out = next;
    }
    out
}

/// Degree-bounded membership: is `f` a `Q`-combination of `u * g_i` with
/// `deg(u * g_i) <= bound`? Sound for any ideal; exact for homogeneous
/// generators and homogeneous `f` with `bound = deg f`.
pub fn macaulay_member(f: &Poly, gens: &[Poly], bound: u32) -> bool {
    let ring = f.ring().clone();
    let nvars = ring.num_vars();
    let mut index: HashMap<Vec<u32>, usize> = HashMap::new();
    let mut key = |e: &[u32]| {
        let next = index.len();
        *index.entry(e.to_vec()).or_insert(next)
    };
    // Echelon basis: pivot column -> row with leading 1 at the pivot.
    let mut basis: BTreeMap<usize, BTreeMap<usize, Rat>> = BTreeMap::new();
    let reduce = |v: &mut BTreeMap<usize, Rat>, basis: &BTreeMap<usize, BTreeMap<usize, Rat>>| loop {
        let Some((&col, coeff)) = v.iter().find(|(c, _)| basis.contains_key(c)) else {
            return;
        };
        let coeff = coeff.clone();
        for (c, a) in &basis[&col] {
            let entry = v.entry(*c).or_insert_with(Rat::zero);
            *entry -= &coeff * a;
            if entry.is_zero() {
                v.remove(c);
            }
        }
    };
    for g in gens {
        let Some(deg_g) = g.total_degree() else {
            continue;
        };
        if deg_g > bound {
            continue;
        }
        for u in all_monomials(nvars, bound - deg_g) {
            let product = g.mul_monomial(&u, &Rat::one());
            let mut v: BTreeMap<usize, Rat> =
                product.terms().map(|(e, c)| (key(e), c.clone())).collect();
            reduce(&mut v, &basis);
            if let Some((&pivot, lead)) = v.iter().next() {
                let inv = Rat::one() / lead;
                let v: BTreeMap<usize, Rat> = v.iter().map(|(c, a)| (*c, a * &inv)).collect();
                // Keep the basis fully reduced against the new pivot.
                for row in basis.values_mut() {
                    if let Some(a) = row.get(&pivot).cloned() {
                        for (c, b) in &v {
                            let entry = row.entry(*c).or_insert_with(Rat::zero);
                            *entry -= &a * b;
                            if entry.is_zero() {
                                row.remove(c);
                            }
                        }
                    }
                }
                basis.insert(pivot, v);
            }
        }
    }
    let mut target: BTreeMap<usize, Rat> = BTreeMap::new();
    for (e, c) in f.terms() {
        match index.get(e.as_slice()) {
            Some(&k) => {
                target.insert(k, c.clone());
            }
            None => return false,
        }
    }
    reduce(&mut target, &basis);
    target.is_empty()
}

pub fn small_coeff(rng: &mut ChaCha8Rng) -> Rat {
    loop {
        let c: i64 = rng.gen_range(-3..=3);
        if c != 0 {
            return Rat::from_integer(c.into());
        }
    }
}

/// Random polynomial with up to `terms` terms of degree at most `max_degree`,
/// or exactly `max_degree` when `homogeneous`.
pub fn random_poly(
    ring: &Arc<PolyRing>,
    rng: &mut ChaCha8Rng,
    terms: usize,
    max_degree: u32,
    homogeneous: bool,
) -> Poly {
    let n = ring.num_vars();
    let mut p = Poly::zero(ring);
    while p.is_zero() {
        for _ in 0..terms {
            let target = if homogeneous {
                max_degree
            } else {
                rng.gen_range(0..=max_degree)
            };
            let mut e = vec![0u32; n];
            for _ in 0..target {
                e[rng.gen_range(0..n)] += 1;
            }
            p = &p + &Poly::monomial(ring, e, small_coeff(rng));
        }
    }
    p
}

/// Random polynomial arc in the chart domain pushed forward through the chart.
/// The divisor coordinate has positive `t`-order; the others are generic.
pub fn random_chart_arc(chart: &DivisorChart, rng: &mut ChaCha8Rng, m: usize) -> TruncArc {
    let t = arc_parameter_ring();
    let tv = Poly::var(&t, 0).unwrap();
    let images: Vec<Poly> = (0..chart.chart_dim())
        .map(|k| {
            let a = Poly::constant(&t, small_coeff(rng));
            let b = Poly::constant(&t, Rat::from_integer(rng.gen_range(-3i64..=3).into()));
            if k == chart.divisor_index() {
                &tv * &(&a + &(&b * &tv))
            } else {
                let c = Poly::constant(&t, Rat::from_integer(rng.gen_range(-20i64..=20).into()));
                &c + &(&b * &tv)
            }
        })
        .collect();
    arc_through_chart(chart, &images, m).unwrap()
}
