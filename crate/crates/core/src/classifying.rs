//! `W` and `W̄` of simplicial groups and the Eilenberg–Mac Lane complexes
//! `K(A, n)`.
//!
//! `W̄G_n = G_{n−1} × ⋯ × G_0` (tuple position `k` holds `G_{n−1−k}`) with
//!
//! * `d₀(g) = (g_{n−2}, …, g_0)`,
//! * `dᵢ(g) = (d_{i−1}g_{n−1}, …, d₁g_{n−i+1}, d₀g_{n−i}·g_{n−i−1}, g_{n−i−2}, …)`,
//!   the product term dropping out for `i = n`,
//! * `sᵢ(g) = (s_{i−1}g_{n−1}, …, s₀g_{n−i}, e, g_{n−i−1}, …)`.
//!
//! `WG_n = G_n × ⋯ × G_0` is stored in the cumulative coordinates
//! `p_n = g_n`, `p_k = d₀(p_{k+1})·g_k`, in which `dᵢ` applies `d_{i−k}` to
//! position `k < i` and deletes position `i`, and `sᵢ` applies `s_{i−k}` to
//! positions `k <= i` and repeats position `i`. Every structure map is then
//! componentwise, so `WG` is a simplicial group under the componentwise
//! product for any `G`.

use std::sync::Arc;

use crate::abelian::{AbMorphism, FgAbGroup, IntMatrix, SimplicialAbGroup};
use crate::error::{Error, Result};
use crate::homotopy::{FinGroup, SimplicialGroup};
use crate::simplicial::{SimplicialMap, TruncSSet};

/// Mixed-radix encoding of tuples, first position most significant.
struct Radix {
    radices: Vec<usize>,
    total: usize,
}

impl Radix {
    fn new(radices: Vec<usize>) -> Radix {
        let total = radices.iter().product();
        Radix { radices, total }
    }

    fn decode(&self, mut x: usize) -> Vec<usize> {
        let mut out = vec![0; self.radices.len()];
        for k in (0..self.radices.len()).rev() {
            out[k] = x % self.radices[k];
            x /= self.radices[k];
        }
        out
    }

    fn encode(&self, t: &[usize]) -> usize {
        t.iter().zip(&self.radices).fold(0, |acc, (&v, &r)| acc * r + v)
    }
}

fn budgeted(total: usize, what: &str) -> Result<()> {
    if total > crate::DEFAULT_CELL_BUDGET {
        return Err(Error::Budget { what: what.into(), limit: crate::DEFAULT_CELL_BUDGET });
    }
    Ok(())
}

/// `W̄G` as a simplicial set; level `n` indexes tuples in the mixed radix
/// of `(|G_{n−1}|, …, |G_0|)`.
pub fn w_bar_sset(g: &SimplicialGroup) -> Result<TruncSSet> {
    let d = g.trunc_dim();
    let radix: Vec<Radix> = (0..=d).map(|n| Radix::new((0..n).map(|k| g.level(n - 1 - k).order()).collect())).collect();
    for r in &radix {
        budgeted(r.total, "W̄G cells")?;
    }
    let mut faces = vec![Vec::new()];
    for n in 1..=d {
        let mut fs = Vec::with_capacity(n + 1);
        for i in 0..=n {
            let map = (0..radix[n].total)
                .map(|x| {
                    let t = radix[n].decode(x);
                    let out: Vec<usize> = if i == 0 {
                        t[1..].to_vec()
                    } else {
                        let mut o = Vec::with_capacity(n - 1);
                        for k in 0..i.min(n - 1) {
                            let lvl = n - 1 - k;
                            if k + 1 < i {
                                o.push(g.face(lvl, i - 1 - k)[t[k]]);
                            } else {
                                // k = i − 1 < n − 1: twisted slot
                                let h = g.face(lvl, 0)[t[k]];
                                o.push(g.level(lvl - 1).mul(h, t[k + 1]));
                            }
                        }
                        o.extend_from_slice(&t[(i + 1).min(n)..]);
                        o
                    };
                    radix[n - 1].encode(&out)
                })
                .collect();
            fs.push(map);
        }
        faces.push(fs);
    }
    let mut degens = Vec::with_capacity(d);
    for n in 0..d {
        let mut ss = Vec::with_capacity(n + 1);
        for i in 0..=n {
            let map = (0..radix[n].total)
                .map(|x| {
                    let t = radix[n].decode(x);
                    let mut o = Vec::with_capacity(n + 1);
                    for (k, &tk) in t.iter().enumerate().take(i) {
                        o.push(g.degen(n - 1 - k, i - 1 - k)[tk]);
                    }
                    o.push(g.level(n - i).identity());
                    o.extend_from_slice(&t[i..]);
                    radix[n + 1].encode(&o)
                })
                .collect();
            ss.push(map);
        }
        degens.push(ss);
    }
    TruncSSet::from_raw(radix.iter().map(|r| r.total).collect(), faces, degens)
}

/// `W̄G` with the componentwise group structure; only a simplicial group
/// when `G` is abelian.
pub fn w_bar_group(g: &SimplicialGroup) -> Result<SimplicialGroup> {
    if !g.is_abelian() {
        return Err(Error::Invalid("W̄G is a simplicial group only for abelian G here".into()));
    }
    let sset = Arc::new(w_bar_sset(g)?);
    let levels = (0..=g.trunc_dim())
        .map(|n| (0..n).fold(FinGroup::trivial(), |acc, k| FinGroup::product(&acc, g.level(n - 1 - k))))
        .collect();
    SimplicialGroup::new_unchecked(levels, sset)
}

/// The principal fibration `WG → W̄G`.
#[derive(Clone, Debug)]
pub struct WComplex {
    pub base: SimplicialGroup,
    pub total: SimplicialGroup,
    pub quotient: Arc<TruncSSet>,
    /// `U(WG) → W̄G`.
    pub projection: SimplicialMap,
}

pub fn w_total(g: &SimplicialGroup) -> Result<WComplex> {
    let d = g.trunc_dim();
    let radix: Vec<Radix> = (0..=d).map(|n| Radix::new((0..=n).map(|k| g.level(n - k).order()).collect())).collect();
    for r in &radix {
        budgeted(r.total, "WG cells")?;
    }
    let mut faces = vec![Vec::new()];
    for n in 1..=d {
        let fs = (0..=n)
            .map(|i| {
                (0..radix[n].total)
                    .map(|x| {
                        let t = radix[n].decode(x);
                        let mut o: Vec<usize> = (0..i).map(|k| g.face(n - k, i - k)[t[k]]).collect();
                        o.extend_from_slice(&t[i + 1..]);
                        radix[n - 1].encode(&o)
                    })
                    .collect()
            })
            .collect();
        faces.push(fs);
    }
    let degens = (0..d)
        .map(|n| {
            (0..=n)
                .map(|i| {
                    (0..radix[n].total)
                        .map(|x| {
                            let t = radix[n].decode(x);
                            let mut o: Vec<usize> = (0..=i).map(|k| g.degen(n - k, i - k)[t[k]]).collect();
                            o.extend_from_slice(&t[i..]);
                            radix[n + 1].encode(&o)
                        })
                        .collect()
                })
                .collect()
        })
        .collect();
    let sset = Arc::new(TruncSSet::from_raw(radix.iter().map(|r| r.total).collect(), faces, degens)?);
    let levels =
        (0..=d).map(|n| (0..=n).fold(FinGroup::trivial(), |acc, k| FinGroup::product(&acc, g.level(n - k)))).collect();
    let total = SimplicialGroup::new_unchecked(levels, sset.clone())?;
    let problems = total.underlying().validate();
    if let Some(p) = problems.first() {
        return Err(Error::Inconsistent(format!("WG fails a simplicial identity: {p:?}")));
    }

    let quotient = Arc::new(w_bar_sset(g)?);
    let qv = quotient.validate();
    if let Some(p) = qv.first() {
        return Err(Error::Inconsistent(format!("W̄G fails a simplicial identity: {p:?}")));
    }
    // g_k = d₀(p_{k+1})⁻¹ p_k for k < n
    let bar_radix: Vec<Radix> =
        (0..=d).map(|n| Radix::new((0..n).map(|k| g.level(n - 1 - k).order()).collect())).collect();
    let levels = (0..=d)
        .map(|n| {
            (0..radix[n].total)
                .map(|x| {
                    let p = radix[n].decode(x);
                    let gs: Vec<usize> = (1..=n)
                        .map(|k| {
                            let lvl = n - k;
                            let grp = g.level(lvl);
                            grp.mul(grp.inv(g.face(lvl + 1, 0)[p[k - 1]]), p[k])
                        })
                        .collect();
                    bar_radix[n].encode(&gs)
                })
                .collect()
        })
        .collect();
    let projection = SimplicialMap::new(sset, quotient.clone(), levels)?;
    Ok(WComplex { base: g.clone(), total, quotient, projection })
}

/// `W̄A` for a simplicial abelian group, as block matrices over
/// `A_{n−1} ⊕ ⋯ ⊕ A_0`.
pub fn w_bar_ab(a: &SimplicialAbGroup) -> Result<SimplicialAbGroup> {
    let d = a.trunc_dim();
    // offsets[n][k]: first coordinate of block k (holding A_{n−1−k}) in level n
    let offsets: Vec<Vec<usize>> = (0..=d)
        .map(|n| {
            let mut off = vec![0];
            for k in 0..n {
                off.push(off[k] + a.level(n - 1 - k).ngens());
            }
            off
        })
        .collect();
    let levels: Vec<FgAbGroup> = (0..=d)
        .map(|n| FgAbGroup::from_orders((0..n).flat_map(|k| a.level(n - 1 - k).orders().to_vec()).collect()))
        .collect();
    let put = |m: &mut IntMatrix, r0: usize, c0: usize, block: &IntMatrix| {
        for r in 0..block.rows() {
            for c in 0..block.cols() {
                let v = m.get(r0 + r, c0 + c) + block.get(r, c);
                m.set(r0 + r, c0 + c, v);
            }
        }
    };
    let ident = |lvl: usize| IntMatrix::identity(a.level(lvl).ngens());

    let mut faces = vec![Vec::new()];
    for n in 1..=d {
        let mut fs = Vec::with_capacity(n + 1);
        for i in 0..=n {
            let mut m = IntMatrix::zeros(levels[n - 1].ngens(), levels[n].ngens());
            for kt in 0..n - 1 {
                let (r0, lvl) = (offsets[n - 1][kt], n - 2 - kt);
                if i == 0 || kt >= i {
                    put(&mut m, r0, offsets[n][kt + 1], &ident(lvl));
                } else if kt + 1 < i {
                    put(&mut m, r0, offsets[n][kt], a.face_matrix(n - 1 - kt, i - 1 - kt));
                } else {
                    put(&mut m, r0, offsets[n][kt], a.face_matrix(n - 1 - kt, 0));
                    put(&mut m, r0, offsets[n][kt + 1], &ident(lvl));
                }
            }
            fs.push(AbMorphism::new(levels[n].clone(), levels[n - 1].clone(), m)?);
        }
        faces.push(fs);
    }
    let mut degens = Vec::with_capacity(d);
    for n in 0..d {
        let mut ss = Vec::with_capacity(n + 1);
        for i in 0..=n {
            let mut m = IntMatrix::zeros(levels[n + 1].ngens(), levels[n].ngens());
            for kt in 0..=n {
                let r0 = offsets[n + 1][kt];
                if kt < i {
                    put(&mut m, r0, offsets[n][kt], a.degen(n - 1 - kt, i - 1 - kt).matrix());
                } else if kt > i {
                    put(&mut m, r0, offsets[n][kt - 1], &ident(n - kt));
                }
            }
            ss.push(AbMorphism::new(levels[n].clone(), levels[n + 1].clone(), m)?);
        }
        degens.push(ss);
    }
    SimplicialAbGroup::new(levels, faces, degens)
}

/// `K(A, n) = W̄ⁿ(disc A)`, truncated at `d`.
pub fn k_space(a: &FgAbGroup, n: usize, d: usize) -> Result<SimplicialAbGroup> {
    if n == 0 {
        return Err(Error::Invalid("K(A, n) needs n >= 1".into()));
    }
    let mut x = SimplicialAbGroup::discrete(a, d);
    for _ in 0..n {
        x = w_bar_ab(&x)?;
    }
    Ok(x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::abelian::dold_kan_n;
    use crate::homotopy::pi_n_group;

    #[test]
    fn w_bar_of_discrete_z2() {
        let g = SimplicialGroup::discrete(&FinGroup::cyclic(2), 3);
        let wb = w_bar_sset(&g).unwrap();
        assert_eq!(wb.cell_counts(), &[1, 2, 4, 8]);
        assert!(wb.validate().is_empty());
        let w = w_total(&g).unwrap();
        assert_eq!(w.total.underlying().cell_counts(), &[2, 4, 8, 16]);
        assert!(w.total.validate().is_empty());
        assert!(w.projection.is_levelwise_surjective());
    }

    #[test]
    fn w_of_nonabelian_group_is_simplicial_group() {
        let g = SimplicialGroup::discrete(&FinGroup::symmetric3(), 2);
        let w = w_total(&g).unwrap();
        assert!(w.total.validate().is_empty());
        for n in 0..2 {
            assert_eq!(pi_n_group(&w.total, n).unwrap().order(), 1);
        }
    }

    #[test]
    fn k_space_levels_and_homology() {
        let k = k_space(&FgAbGroup::cyclic(2), 1, 3).unwrap();
        let sizes: Vec<u128> = k.levels().iter().map(|l| l.cardinality().unwrap()).collect();
        assert_eq!(sizes, vec![1, 2, 4, 8]);
        let k2 = k_space(&FgAbGroup::cyclic(3), 2, 4).unwrap();
        let nk = dold_kan_n(&k2);
        for q in 0..4 {
            let h = nk.homology(q);
            if q == 2 {
                assert_eq!(h.invariant_factors(), vec![3]);
            } else {
                assert!(h.is_trivial(), "H_{q} = {h}");
            }
        }
        let kz = k_space(&FgAbGroup::integers(), 2, 3).unwrap();
        assert_eq!(dold_kan_n(&kz).homology(2).invariant_factors(), vec![0]);
    }

    #[test]
    fn group_and_abelian_routes_agree() {
        let a = FgAbGroup::cyclic(3);
        let via_ab = SimplicialGroup::from_ab(&k_space(&a, 1, 3).unwrap()).unwrap();
        let via_group = w_bar_group(&SimplicialGroup::discrete(&FinGroup::cyclic(3), 3)).unwrap();
        assert!(via_group.validate().is_empty());
        for n in 0..3 {
            assert_eq!(pi_n_group(&via_ab, n).unwrap().order(), pi_n_group(&via_group, n).unwrap().order());
        }
    }
}
