use std::collections::{BTreeMap, HashMap};

use rayon::prelude::*;

use super::skein::{delta, SkeinVector};
use crate::braid::{Generator, Letter, MixedBraidWord};
use crate::coeff::{LaurentPoly, Var};
use crate::error::{Error, Result};

/// Default limit on the number of crossings, i.e. `2^24` states.
pub const DEFAULT_CAP: usize = 24;

/// One letter of a smoothed word.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Tile {
    /// Two vertical strands.
    Identity,
    /// Cap on top, cup below, joining positions `i` and `i+1` (1-based).
    CapCup(usize),
    /// The first moving strand going once around the axis, with the sign of `t^±1`.
    Pass(i8),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SmoothingState {
    pub weight: LaurentPoly,
    pub tiles: Vec<Tile>,
}

/// Crossingless closure, after cancelling opposite adjacent passes.
///
/// `windings` holds one entry per essential component: `k > 0` when all its
/// passes come from `t`, `-k` when they come from `t^-1`. The component is
/// the curve [`closure_curve`]`(k)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TerminalState {
    pub contractible_loops: u32,
    pub windings: Vec<i64>,
}

fn tiles_for(letters: &[Letter], bits: u64) -> (i64, Vec<Tile>) {
    let mut exp = 0i64;
    let mut crossing = 0;
    let tiles = letters
        .iter()
        .map(|l| match l.gen {
            Generator::T => Tile::Pass(l.sign),
            Generator::Sigma(i) => {
                let capcup = bits >> crossing & 1 == 1;
                crossing += 1;
                // A-smoothing of a positive crossing is the identity tile
                let a_side = capcup == (l.sign < 0);
                exp += if a_side { 1 } else { -1 };
                if capcup {
                    Tile::CapCup(i)
                } else {
                    Tile::Identity
                }
            }
        })
        .collect();
    (exp, tiles)
}

fn check_cap(w: &MixedBraidWord, cap: usize) -> Result<usize> {
    let c = w.crossing_count();
    if c > cap || c > 62 {
        return Err(Error::StateCap { crossings: c, cap });
    }
    Ok(c)
}

/// All `2^c` smoothings, crossings numbered left to right, state `k` taking
/// the cap-cup tile at crossing `j` when bit `j` of `k` is set.
pub fn smooth_states(w: &MixedBraidWord, cap: usize) -> Result<Vec<SmoothingState>> {
    let c = check_cap(w, cap)?;
    Ok((0..1u64 << c)
        .map(|bits| {
            let (e, tiles) = tiles_for(w.letters(), bits);
            SmoothingState { weight: LaurentPoly::power(Var::A, e), tiles }
        })
        .collect())
}

#[derive(Clone, Copy)]
struct Pass {
    level: usize,
    /// Winding direction: tile sign times traversal direction.
    adjusted: i8,
    tile: i8,
}

/// Follows the strands of the closed tile diagram, cancels adjacent opposite
/// passes and classifies what remains.
/// Endpoints and, for a vertical edge through a `t` crossing, the pass.
type Edge = (usize, usize, Option<(usize, i8)>);

pub fn trace_components(strands: usize, tiles: &[Tile]) -> Result<TerminalState> {
    let n = strands;
    let levels = tiles.len();
    if levels == 0 {
        return Ok(TerminalState { contractible_loops: n as u32, windings: vec![] });
    }
    let node = |l: usize, p: usize| l * n + p;
    let nodes = (levels + 1) * n;
    // each node has exactly two incident edges
    let mut adj: Vec<[(usize, usize); 2]> = vec![[(usize::MAX, usize::MAX); 2]; nodes];
    let mut fill = vec![0u8; nodes];
    let mut edges: Vec<Edge> = Vec::with_capacity(nodes);
    let mut link = |a: usize, b: usize, pass: Option<(usize, i8)>, edges: &mut Vec<_>| {
        let id = edges.len();
        edges.push((a, b, pass));
        adj[a][fill[a] as usize] = (b, id);
        fill[a] += 1;
        adj[b][fill[b] as usize] = (a, id);
        fill[b] += 1;
    };
    for (l, tile) in tiles.iter().enumerate() {
        let skip = match tile {
            Tile::CapCup(i) => {
                link(node(l, i - 1), node(l, *i), None, &mut edges);
                link(node(l + 1, i - 1), node(l + 1, *i), None, &mut edges);
                Some(*i)
            }
            _ => None,
        };
        for p in 0..n {
            if skip.is_some_and(|i| p == i - 1 || p == i) {
                continue;
            }
            let pass = match tile {
                Tile::Pass(s) if p == 0 => Some((l, *s)),
                _ => None,
            };
            link(node(l, p), node(l + 1, p), pass, &mut edges);
        }
    }
    for p in 0..n {
        link(node(levels, p), node(0, p), None, &mut edges);
    }

    let mut seen = vec![false; nodes];
    let mut comps: Vec<Vec<Pass>> = Vec::new();
    for start in 0..nodes {
        if seen[start] {
            continue;
        }
        let mut passes = Vec::new();
        let mut cur = start;
        let mut via = usize::MAX;
        loop {
            seen[cur] = true;
            let slot = if adj[cur][0].1 != via { 0 } else { 1 };
            let (next, e) = adj[cur][slot];
            if let (a, _, Some((level, tile))) = edges[e] {
                let down = a == cur;
                passes.push(Pass { level, adjusted: if down { tile } else { -tile }, tile });
            }
            via = e;
            cur = next;
            if cur == start {
                break;
            }
        }
        comps.push(passes);
    }

    cancel_adjacent(&mut comps);

    let mut contractible = 0u32;
    let mut windings = Vec::new();
    for c in &comps {
        let Some(first) = c.first() else {
            contractible += 1;
            continue;
        };
        if c.iter().any(|p| p.adjusted != first.adjusted) {
            return Err(Error::OutOfDomain(format!(
                "component keeps passes of both directions after cancellation (levels {:?})",
                c.iter().map(|p| p.level).collect::<Vec<_>>()
            )));
        }
        if c.iter().any(|p| p.tile != first.tile) {
            return Err(Error::OutOfDomain(format!(
                "component mixes t and t^-1 passes (levels {:?})",
                c.iter().map(|p| p.level).collect::<Vec<_>>()
            )));
        }
        windings.push(c.len() as i64 * first.tile as i64);
    }
    windings.sort_unstable();
    Ok(TerminalState { contractible_loops: contractible, windings })
}

/// Removes pairs of passes that follow each other along a component, wind in
/// opposite directions and have no other pass between them around the axis
/// (cyclically in the level order).
fn cancel_adjacent(comps: &mut [Vec<Pass>]) {
    let mut levels: Vec<usize> = comps.iter().flatten().map(|p| p.level).collect();
    levels.sort_unstable();
    'outer: loop {
        let g = levels.len();
        for c in comps.iter_mut() {
            let k = c.len();
            if k < 2 {
                continue;
            }
            for i in 0..k {
                let j = (i + 1) % k;
                let (p, q) = (c[i], c[j]);
                if p.adjusted == q.adjusted {
                    continue;
                }
                let pa = levels.binary_search(&p.level).unwrap();
                let pb = levels.binary_search(&q.level).unwrap();
                if (pa + 1) % g == pb || (pb + 1) % g == pa {
                    let (hi, lo) = if i > j { (i, j) } else { (j, i) };
                    c.remove(hi);
                    c.remove(lo);
                    levels.remove(pa.max(pb));
                    levels.remove(pa.min(pb));
                    continue 'outer;
                }
            }
        }
        break;
    }
}

/// Closure of `t^k` on one strand. With positive crossings smoothed to the
/// identity at weight `A`, this is the mirror of the basis curve `t^k` for
/// `k > 0` and the basis curve `t^|k|` itself for `k < 0`; the braid
/// relations `t s1 t s1 = s1 t s1 t` hold for no other assignment.
pub fn closure_curve(k: i64) -> SkeinVector {
    let v = SkeinVector::basis(k.unsigned_abs() as u32);
    if k > 0 {
        v.mirror()
    } else {
        v
    }
}

/// Each contractible loop contributes `delta`; essential components are
/// multiplied in the skein algebra. A diagram of contractible loops only is
/// `delta^(count-1) t^0`.
pub fn merge_windings(ts: &TerminalState) -> SkeinVector {
    if ts.windings.is_empty() {
        let c = ts.contractible_loops.max(1);
        return SkeinVector::term(0, delta().pow(c - 1));
    }
    let mut ws = ts.windings.clone();
    ws.sort_by_key(|w| std::cmp::Reverse(w.unsigned_abs()));
    let mut acc = SkeinVector::term(0, LaurentPoly::one(Var::A));
    let mut first = true;
    for w in ws {
        let curve = closure_curve(w);
        acc = if first { curve } else { acc.product(&curve) };
        first = false;
    }
    acc.scale(&delta().pow(ts.contractible_loops))
}

/// Kauffman bracket of the closure in the solid torus, in the basis `t^n`.
pub fn evaluate_closure(w: &MixedBraidWord) -> Result<SkeinVector> {
    evaluate_closure_with_cap(w, DEFAULT_CAP)
}

pub fn evaluate_closure_with_cap(w: &MixedBraidWord, cap: usize) -> Result<SkeinVector> {
    let c = check_cap(w, cap)?;
    let n = w.strands();
    let letters = w.letters();
    type Acc = HashMap<TerminalState, BTreeMap<i64, i64>>;
    let acc: Acc = (0..1u64 << c)
        .into_par_iter()
        .try_fold(Acc::new, |mut acc, bits| {
            let (e, tiles) = tiles_for(letters, bits);
            let ts = trace_components(n, &tiles)?;
            *acc.entry(ts).or_default().entry(e).or_insert(0) += 1;
            Ok::<_, Error>(acc)
        })
        .try_reduce(Acc::new, |mut a, b| {
            for (ts, ws) in b {
                let slot = a.entry(ts).or_default();
                for (e, k) in ws {
                    *slot.entry(e).or_insert(0) += k;
                }
            }
            Ok(a)
        })?;
    let mut keys: Vec<_> = acc.keys().cloned().collect();
    keys.sort();
    let mut out = SkeinVector::zero();
    for ts in keys {
        let weight = LaurentPoly::from_terms(Var::A, acc[&ts].iter().map(|(e, k)| (*e, *k)));
        out = out + merge_windings(&ts).scale(&weight);
    }
    Ok(out)
}
