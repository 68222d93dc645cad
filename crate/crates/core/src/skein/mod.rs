//! Exact skein-recursion engines for the HOMFLY and Kauffman polynomials and
//! the Conway specialization.
//!
//! Both engines recurse on the first crossing (in a fixed walk order) whose
//! first visit runs under, switching it and smoothing it until every diagram
//! is descending, hence an unlink whose polynomial is known in closed form.
//! Switching a crossing never changes the walk, so the set of such crossings
//! strictly shrinks and the recursion terminates. States are canonically
//! relabelled and memoized.
//!
//! Conventions: HOMFLY P in (v, z) with v^-1 P(L+) - v P(L-) = z P(L0) and
//! P(unknot) = 1. Kauffman F in (a, z): F = a^{-w(D)} Lambda(D) with
//! Lambda(kink+) = a Lambda and Lambda(D+) + Lambda(D-) = z (Lambda(D0) +
//! Lambda(Dinf)). A k-component crossingless unlink evaluates to
//! ((v^-1 - v)/z)^{k-1}, respectively ((a + a^-1)/z - 1)^{k-1}.

pub mod oracle;

use std::collections::HashMap;

use thiserror::Error;

use crate::diagram::{PlanarDiagram, UnionFind};
use crate::poly::{DegreeSummary, LaurentPoly1, LaurentPoly2, PolyError};

/// Default crossing cap for the HOMFLY engine (branching factor 2).
pub const DEFAULT_HOMFLY_CAP: usize = 16;
/// Default crossing cap for the Kauffman engine (branching factor 3).
pub const DEFAULT_KAUFFMAN_CAP: usize = 14;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SkeinError {
    #[error("diagram has {crossings} crossings, over the engine cap {cap}")]
    CapExceeded { crossings: usize, cap: usize },
    #[error(transparent)]
    Poly(#[from] PolyError),
}

/// HOMFLY polynomial with the default crossing cap.
pub fn homfly(d: &PlanarDiagram) -> Result<LaurentPoly2, SkeinError> {
    homfly_capped(d, DEFAULT_HOMFLY_CAP)
}

pub fn homfly_capped(d: &PlanarDiagram, cap: usize) -> Result<LaurentPoly2, SkeinError> {
    if d.crossing_count() > cap {
        return Err(SkeinError::CapExceeded {
            crossings: d.crossing_count(),
            cap,
        });
    }
    let state = HState {
        crossings: d
            .crossings()
            .iter()
            .map(|x| (x.arcs, x.sign))
            .collect(),
        loops: d.free_loops() as u32,
    }
    .canonical();
    let mut memo = HashMap::new();
    Ok(homfly_rec(&state, &mut memo))
}

/// Kauffman polynomial with the default crossing cap.
pub fn kauffman(d: &PlanarDiagram) -> Result<LaurentPoly2, SkeinError> {
    kauffman_capped(d, DEFAULT_KAUFFMAN_CAP)
}

pub fn kauffman_capped(d: &PlanarDiagram, cap: usize) -> Result<LaurentPoly2, SkeinError> {
    if d.crossing_count() > cap {
        return Err(SkeinError::CapExceeded {
            crossings: d.crossing_count(),
            cap,
        });
    }
    let (state, shift) = KState {
        crossings: d.crossings().iter().map(|x| x.arcs).collect(),
        loops: d.free_loops() as u32,
    }
    .canonical();
    let mut memo = HashMap::new();
    let lambda = kauffman_rec(&state, &mut memo);
    // writhe normalization of the regular-isotopy invariant
    let w = d.writhe();
    Ok(lambda.shifted(shift - w as i32, 0, 1))
}

/// Kauffman polynomial with coefficients reduced modulo 2.
pub fn kauffman_mod2(d: &PlanarDiagram) -> Result<LaurentPoly2, SkeinError> {
    Ok(kauffman(d)?.mod2())
}

pub fn kauffman_mod2_capped(d: &PlanarDiagram, cap: usize) -> Result<LaurentPoly2, SkeinError> {
    Ok(kauffman_capped(d, cap)?.mod2())
}

/// Conway polynomial: the v = 1 specialization of HOMFLY.
pub fn conway(d: &PlanarDiagram) -> Result<LaurentPoly1, SkeinError> {
    Ok(homfly(d)?.eval_x_one())
}

pub fn conway_capped(d: &PlanarDiagram, cap: usize) -> Result<LaurentPoly1, SkeinError> {
    Ok(homfly_capped(d, cap)?.eval_x_one())
}

/// Extreme exponents of a nonzero polynomial.
pub fn degrees(p: &LaurentPoly2) -> Result<DegreeSummary, SkeinError> {
    Ok(p.degrees()?)
}

/// ((v^-1 - v)/z)^k, the HOMFLY unlink factor.
pub fn homfly_unlink_factor(k: u32) -> LaurentPoly2 {
    LaurentPoly2::from_terms([((-1, -1), 1), ((1, -1), -1)]).pow(k)
}

/// ((a + a^-1)/z - 1)^k, the Kauffman unlink factor.
pub fn kauffman_unlink_factor(k: u32) -> LaurentPoly2 {
    LaurentPoly2::from_terms([((1, -1), 1), ((-1, -1), 1), ((0, 0), -1)]).pow(k)
}

// ---------------------------------------------------------------------------
// oriented states (HOMFLY)

/// Skein state: normalized crossing tuples plus crossingless loops.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
struct HState {
    crossings: Vec<([u32; 4], i8)>,
    loops: u32,
}

fn h_entry_slots(sign: i8) -> [u8; 2] {
    if sign > 0 {
        [0, 3]
    } else {
        [0, 1]
    }
}

fn h_exit_of(sign: i8, slot: u8) -> u8 {
    match (sign > 0, slot) {
        (_, 0) => 2,
        (true, 3) => 1,
        (false, 1) => 3,
        _ => unreachable!("not an entry slot"),
    }
}

/// Walk data shared by canonicalization and crossing selection.
struct HWalk {
    /// arcs in global walk order
    arc_order: Vec<u32>,
    /// crossing indices in first-visit order, with entry slot
    first_visits: Vec<(usize, u8)>,
    components: u32,
}

impl HState {
    fn arc_max(&self) -> u32 {
        self.crossings
            .iter()
            .flat_map(|(arcs, _)| arcs.iter().copied())
            .max()
            .unwrap_or(0)
    }

    fn walk(&self) -> HWalk {
        let max = self.arc_max() as usize;
        // where each arc enters: (crossing, slot)
        let mut in_end: Vec<(usize, u8)> = vec![(usize::MAX, 0); max + 1];
        for (ci, (arcs, sign)) in self.crossings.iter().enumerate() {
            for s in h_entry_slots(*sign) {
                in_end[arcs[s as usize] as usize] = (ci, s);
            }
        }
        let mut seen_arc = vec![false; max + 1];
        let mut seen_crossing = vec![false; self.crossings.len()];
        let mut arc_order = Vec::new();
        let mut first_visits = Vec::new();
        let mut components = 0u32;
        for start in 1..=max as u32 {
            let (ci, _) = in_end[start as usize];
            if ci == usize::MAX || seen_arc[start as usize] {
                continue;
            }
            components += 1;
            let mut cur = start;
            loop {
                seen_arc[cur as usize] = true;
                arc_order.push(cur);
                let (ci, s) = in_end[cur as usize];
                if !seen_crossing[ci] {
                    seen_crossing[ci] = true;
                    first_visits.push((ci, s));
                }
                let out = h_exit_of(self.crossings[ci].1, s);
                cur = self.crossings[ci].0[out as usize];
                if cur == start {
                    break;
                }
            }
        }
        HWalk {
            arc_order,
            first_visits,
            components: components + self.loops,
        }
    }

    /// Relabel arcs in walk order, sort crossings, and remove kinks.
    fn canonical(mut self) -> HState {
        loop {
            // peel reducible curls: an arc occupying two adjacent slots
            let mut removed = false;
            for ci in 0..self.crossings.len() {
                let (arcs, _) = self.crossings[ci];
                if let Some(s) = (0..4u8)
                    .find(|&s| arcs[s as usize] == arcs[((s + 1) % 4) as usize])
                {
                    self.remove_kink(ci, s);
                    removed = true;
                    break;
                }
            }
            if !removed {
                break;
            }
        }
        let walk = self.walk();
        let max = self.arc_max() as usize;
        let mut label = vec![0u32; max + 1];
        for (i, &arc) in walk.arc_order.iter().enumerate() {
            label[arc as usize] = i as u32 + 1;
        }
        for (arcs, _) in self.crossings.iter_mut() {
            for a in arcs.iter_mut() {
                *a = label[*a as usize];
            }
        }
        self.crossings.sort();
        self
    }

    /// Straighten the curl whose loop arc spans slots (s, s+1): the crossing
    /// goes away, the two through-arcs merge, and the loop arc is absorbed
    /// into the strand. Only the through-strand can close into a free loop.
    fn remove_kink(&mut self, ci: usize, s: u8) {
        let (arcs, _) = self.crossings[ci];
        let j1 = arcs[((s + 2) % 4) as usize];
        let j2 = arcs[((s + 3) % 4) as usize];
        let max = self.arc_max() as usize;
        let mut uf = UnionFind::new(max + 1);
        uf.union(j1 as usize, j2 as usize);
        self.crossings.remove(ci);
        for (arcs, _) in self.crossings.iter_mut() {
            for a in arcs.iter_mut() {
                *a = uf.find(*a as usize) as u32;
            }
        }
        let rep = uf.find(j1 as usize) as u32;
        let still_used = self.crossings.iter().any(|(arcs, _)| arcs.contains(&rep));
        if !still_used {
            self.loops += 1;
        }
    }

    fn smooth(&self, ci: usize) -> HState {
        let (arcs, sign) = self.crossings[ci];
        let mut next = self.clone();
        let (j1, j2) = if sign > 0 {
            ((arcs[0], arcs[1]), (arcs[3], arcs[2]))
        } else {
            ((arcs[0], arcs[3]), (arcs[1], arcs[2]))
        };
        // two joins: run them one at a time through remove_crossing's
        // single-join plumbing by unioning both pairs at once
        next.remove_crossing_two(ci, j1, j2);
        next.canonical()
    }

    fn remove_crossing_two(&mut self, ci: usize, j1: (u32, u32), j2: (u32, u32)) {
        let max = self.arc_max() as usize;
        let mut uf = UnionFind::new(max + 1);
        uf.union(j1.0 as usize, j1.1 as usize);
        uf.union(j2.0 as usize, j2.1 as usize);
        let old = self.crossings.remove(ci);
        for (arcs, _) in self.crossings.iter_mut() {
            for a in arcs.iter_mut() {
                *a = uf.find(*a as usize) as u32;
            }
        }
        let mut gone: Vec<u32> = Vec::new();
        for a in old.0 {
            let rep = uf.find(a as usize) as u32;
            let still_used = self
                .crossings
                .iter()
                .any(|(arcs, _)| arcs.contains(&rep));
            if !still_used && !gone.contains(&rep) {
                gone.push(rep);
            }
        }
        self.loops += gone.len() as u32;
    }

    /// Switch over- and under-strand in place: the tuple re-anchors at the
    /// old incoming over-strand and the sign flips. Arcs and connectivity are
    /// untouched, so any walk of the old state is a walk of the new one.
    fn switch_in_place(&mut self, ci: usize) {
        let (arcs, sign) = self.crossings[ci];
        self.crossings[ci] = if sign > 0 {
            ([arcs[3], arcs[0], arcs[1], arcs[2]], -1)
        } else {
            ([arcs[1], arcs[2], arcs[3], arcs[0]], 1)
        };
    }
}

/// One skein pass: walk once, then unwind the whole chain of non-descending
/// crossings of that one walk. Each such crossing is switched in place (which
/// leaves the walk valid) and contributes a smoothed child; only the children
/// recurse, with strictly fewer crossings, so termination is by induction on
/// the crossing count. The fully switched diagram is descending, hence an
/// unlink.
fn homfly_rec(state: &HState, memo: &mut HashMap<HState, LaurentPoly2>) -> LaurentPoly2 {
    if state.crossings.is_empty() {
        return homfly_unlink_factor(state.loops.saturating_sub(1));
    }
    if let Some(hit) = memo.get(state) {
        return hit.clone();
    }
    let walk = state.walk();
    let bads: Vec<usize> = walk
        .first_visits
        .iter()
        .filter(|&&(_, s)| s == 0)
        .map(|&(ci, _)| ci)
        .collect();
    let mut cur = state.clone();
    let mut acc = LaurentPoly2::zero();
    // accumulated v-power of the switch prefactors v^{+/-2}
    let mut pre_v = 0i32;
    for &ci in &bads {
        let sign = cur.crossings[ci].1;
        let smoothed = homfly_rec(&cur.smooth(ci), memo);
        if sign > 0 {
            // P(L+) = v z P(L0) + v^2 P(L-)
            acc = &acc + &smoothed.shifted(pre_v + 1, 1, 1);
            pre_v += 2;
        } else {
            // P(L-) = -v^-1 z P(L0) + v^-2 P(L+)
            acc = &acc + &smoothed.shifted(pre_v - 1, 1, -1);
            pre_v -= 2;
        }
        cur.switch_in_place(ci);
    }
    let tail = homfly_unlink_factor(walk.components.saturating_sub(1));
    let result = &acc + &tail.shifted(pre_v, 0, 1);
    memo.insert(state.clone(), result.clone());
    result
}

// ---------------------------------------------------------------------------
// unoriented states (Kauffman)

/// Unoriented skein state: slots 0 and 2 carry the under-strand.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
struct KState {
    crossings: Vec<[u32; 4]>,
    loops: u32,
}

impl KState {
    fn arc_max(&self) -> u32 {
        self.crossings
            .iter()
            .flat_map(|arcs| arcs.iter().copied())
            .max()
            .unwrap_or(0)
    }

    /// Kink removal plus canonical relabelling. Returns the accumulated
    /// a-exponent from removed curls.
    fn canonical(mut self) -> (KState, i32) {
        let mut a_exp = 0i32;
        loop {
            let mut removed = false;
            for ci in 0..self.crossings.len() {
                let arcs = self.crossings[ci];
                if let Some(s) = (0..4u8)
                    .find(|&s| arcs[s as usize] == arcs[((s + 1) % 4) as usize])
                {
                    // curl sign: +1 when the loop starts at an even slot
                    a_exp += if s % 2 == 0 { 1 } else { -1 };
                    self.remove_kink(ci, s);
                    removed = true;
                    break;
                }
            }
            if !removed {
                break;
            }
        }
        // relabel in walk order
        let walk = self.walk();
        let max = self.arc_max() as usize;
        let mut label = vec![0u32; max + 1];
        for (i, &arc) in walk.arc_order.iter().enumerate() {
            label[arc as usize] = i as u32 + 1;
        }
        for arcs in self.crossings.iter_mut() {
            for a in arcs.iter_mut() {
                *a = label[*a as usize];
            }
            // anchor rotation: slot 0 vs slot 2 both carry the under-strand
            let rotated = [arcs[2], arcs[3], arcs[0], arcs[1]];
            if rotated < *arcs {
                *arcs = rotated;
            }
        }
        self.crossings.sort();
        (self, a_exp)
    }

    /// Straighten a curl; see [`HState::remove_kink`].
    fn remove_kink(&mut self, ci: usize, s: u8) {
        let arcs = self.crossings[ci];
        let j1 = arcs[((s + 2) % 4) as usize];
        let j2 = arcs[((s + 3) % 4) as usize];
        let max = self.arc_max() as usize;
        let mut uf = UnionFind::new(max + 1);
        uf.union(j1 as usize, j2 as usize);
        self.crossings.remove(ci);
        for arcs in self.crossings.iter_mut() {
            for a in arcs.iter_mut() {
                *a = uf.find(*a as usize) as u32;
            }
        }
        let rep = uf.find(j1 as usize) as u32;
        let still_used = self.crossings.iter().any(|arcs| arcs.contains(&rep));
        if !still_used {
            self.loops += 1;
        }
    }

    fn remove_crossing_two(&mut self, ci: usize, j1: (u32, u32), j2: (u32, u32)) {
        let max = self.arc_max() as usize;
        let mut uf = UnionFind::new(max + 1);
        uf.union(j1.0 as usize, j1.1 as usize);
        uf.union(j2.0 as usize, j2.1 as usize);
        let old = self.crossings.remove(ci);
        for arcs in self.crossings.iter_mut() {
            for a in arcs.iter_mut() {
                *a = uf.find(*a as usize) as u32;
            }
        }
        let mut gone: Vec<u32> = Vec::new();
        for a in old {
            let rep = uf.find(a as usize) as u32;
            let still_used = self.crossings.iter().any(|arcs| arcs.contains(&rep));
            if !still_used && !gone.contains(&rep) {
                gone.push(rep);
            }
        }
        self.loops += gone.len() as u32;
    }

    /// Walk every component, entering each arc at its smaller endpoint.
    fn walk(&self) -> KWalk {
        let max = self.arc_max() as usize;
        let mut ends: Vec<Vec<(usize, u8)>> = vec![Vec::new(); max + 1];
        for (ci, arcs) in self.crossings.iter().enumerate() {
            for (s, &a) in arcs.iter().enumerate() {
                ends[a as usize].push((ci, s as u8));
            }
        }
        let mut seen_end: Vec<[bool; 4]> = vec![[false; 4]; self.crossings.len()];
        let mut arc_order = Vec::new();
        let mut first_visits: Vec<(usize, u8, u32)> = Vec::new();
        let mut entries: Vec<Vec<(u8, u32)>> = vec![Vec::new(); self.crossings.len()];
        let mut components = 0u32;
        for start in 1..=max as u32 {
            let e = &ends[start as usize];
            if e.is_empty() {
                continue;
            }
            let first = *e.iter().min().unwrap();
            if seen_end[first.0][first.1 as usize] {
                continue;
            }
            components += 1;
            let comp_id = components;
            let (mut ci, mut s) = first;
            let mut cur = start;
            loop {
                arc_order.push(cur);
                seen_end[ci][s as usize] = true;
                if entries[ci].is_empty() {
                    first_visits.push((ci, s, comp_id));
                }
                entries[ci].push((s, comp_id));
                let out = (s + 2) % 4;
                seen_end[ci][out as usize] = true;
                let next_arc = self.crossings[ci][out as usize];
                let other = ends[next_arc as usize]
                    .iter()
                    .copied()
                    .find(|&(cj, t)| (cj, t) != (ci, out))
                    .unwrap_or((ci, out));
                ci = other.0;
                s = other.1;
                cur = next_arc;
                if (ci, s) == first {
                    break;
                }
            }
        }
        KWalk {
            arc_order,
            first_visits,
            entries,
            components: components + self.loops,
        }
    }

    /// Switch over/under in place: rotate the tuple one slot. Connectivity
    /// and arcs are untouched.
    fn switch_in_place(&mut self, ci: usize) {
        let arcs = self.crossings[ci];
        self.crossings[ci] = [arcs[1], arcs[2], arcs[3], arcs[0]];
    }

    fn smooth_a(&self, ci: usize) -> (KState, i32) {
        let arcs = self.crossings[ci];
        let mut next = self.clone();
        next.remove_crossing_two(ci, (arcs[0], arcs[1]), (arcs[2], arcs[3]));
        next.canonical()
    }

    fn smooth_b(&self, ci: usize) -> (KState, i32) {
        let arcs = self.crossings[ci];
        let mut next = self.clone();
        next.remove_crossing_two(ci, (arcs[0], arcs[3]), (arcs[1], arcs[2]));
        next.canonical()
    }
}

struct KWalk {
    arc_order: Vec<u32>,
    /// (crossing, entry slot, component) at first visit
    first_visits: Vec<(usize, u8, u32)>,
    /// both entries per crossing: (slot, component)
    entries: Vec<Vec<(u8, u32)>>,
    components: u32,
}

impl KWalk {
    /// Sum of self-crossing signs, well defined without orientations.
    fn self_writhe(&self) -> i32 {
        let mut w = 0;
        for packs in &self.entries {
            if packs.len() != 2 || packs[0].1 != packs[1].1 {
                continue;
            }
            let (s1, s2) = (packs[0].0, packs[1].0);
            let (under, over) = if s1 % 2 == 0 { (s1, s2) } else { (s2, s1) };
            w += if (4 + over - under) % 4 == 3 { 1 } else { -1 };
        }
        w
    }
}

fn kauffman_rec(state: &KState, memo: &mut HashMap<KState, LaurentPoly2>) -> LaurentPoly2 {
    let walk = state.walk();
    let bad = walk
        .first_visits
        .iter()
        .find(|&&(_, s, _)| s % 2 == 0)
        .copied();
    match bad {
        None => {
            // descending: unlink with curls; Lambda = a^w delta^{k-1}
            let factor = kauffman_unlink_factor(walk.components.saturating_sub(1));
            factor.shifted(walk.self_writhe(), 0, 1)
        }
        Some((ci, _, _)) => {
            if let Some(hit) = memo.get(state) {
                return hit.clone();
            }
            // Lambda(D) = z Lambda(A) + z Lambda(B) - Lambda(switched)
            let (sa, ea) = state.smooth_a(ci);
            let (sb, eb) = state.smooth_b(ci);
            let (sw, ew) = state.switch(ci);
            let pa = kauffman_rec(&sa, memo).shifted(ea, 1, 1);
            let pb = kauffman_rec(&sb, memo).shifted(eb, 1, 1);
            let pw = kauffman_rec(&sw, memo).shifted(ew, 0, 1);
            let result = &(&pa + &pb) - &pw;
            memo.insert(state.clone(), result.clone());
            result
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::{closure, torus_braid, BraidWord};
    use crate::diagram::PlanarDiagram;

    const TREFOIL: [[u32; 4]; 3] = [[1, 4, 2, 5], [3, 6, 4, 1], [5, 2, 6, 3]];
    const FIGURE_EIGHT: [[u32; 4]; 4] = [[4, 2, 5, 1], [8, 6, 1, 5], [6, 3, 7, 4], [2, 7, 3, 8]];

    fn right_trefoil() -> PlanarDiagram {
        closure(&torus_braid(3, 2).unwrap())
    }

    #[test]
    fn homfly_unknot_is_one() {
        assert_eq!(homfly(&PlanarDiagram::unknot()).unwrap(), LaurentPoly2::one());
        // one-crossing kink diagrams too
        let kink = PlanarDiagram::validate(&[[1, 1, 2, 2]]).unwrap();
        assert_eq!(homfly(&kink).unwrap(), LaurentPoly2::one());
    }

    #[test]
    fn homfly_right_trefoil_exact() {
        // skein by hand: P = 2v^2 - v^4 + v^2 z^2
        let want = LaurentPoly2::from_terms([((2, 0), 2), ((4, 0), -1), ((2, 2), 1)]);
        assert_eq!(homfly(&right_trefoil()).unwrap(), want);
    }

    #[test]
    fn homfly_left_trefoil_is_mirror_image() {
        let d = PlanarDiagram::validate(&TREFOIL).unwrap();
        let p = homfly(&d).unwrap();
        let want = LaurentPoly2::from_terms([((-2, 0), 2), ((-4, 0), -1), ((-2, 2), 1)]);
        assert_eq!(p, want);
        assert_eq!(
            homfly(&d.mirror()).unwrap(),
            p.substitute_x_neg_inv()
        );
    }

    #[test]
    fn homfly_figure_eight_exact() {
        let d = PlanarDiagram::validate(&FIGURE_EIGHT).unwrap();
        let want =
            LaurentPoly2::from_terms([((-2, 0), 1), ((0, 0), -1), ((2, 0), 1), ((0, 2), -1)]);
        assert_eq!(homfly(&d).unwrap(), want);
    }

    #[test]
    fn homfly_positive_hopf_exact() {
        let d = closure(&BraidWord::from_signed(2, &[1, 1]).unwrap());
        // P = v z + (v - v^3) z^-1
        let want = LaurentPoly2::from_terms([((1, 1), 1), ((1, -1), 1), ((3, -1), -1)]);
        assert_eq!(homfly(&d).unwrap(), want);
    }

    #[test]
    fn homfly_unlink_values() {
        let two = closure(&BraidWord::new(2, Vec::new()).unwrap());
        assert_eq!(homfly(&two).unwrap(), homfly_unlink_factor(1));
        let three = closure(&BraidWord::new(3, Vec::new()).unwrap());
        assert_eq!(homfly(&three).unwrap(), homfly_unlink_factor(2));
    }

    #[test]
    fn conway_degrees() {
        assert_eq!(
            conway(&right_trefoil()).unwrap().max_degree().unwrap(),
            2
        );
        let f8 = PlanarDiagram::validate(&FIGURE_EIGHT).unwrap();
        assert_eq!(conway(&f8).unwrap().max_degree().unwrap(), 2);
    }

    #[test]
    fn homfly_cap_is_enforced() {
        let d = closure(&torus_braid(9, 2).unwrap());
        assert!(matches!(
            homfly_capped(&d, 8),
            Err(SkeinError::CapExceeded { crossings: 9, cap: 8 })
        ));
    }

    #[test]
    fn kauffman_unknot_and_kinks() {
        assert_eq!(kauffman(&PlanarDiagram::unknot()).unwrap(), LaurentPoly2::one());
        let kink = PlanarDiagram::validate(&[[1, 1, 2, 2]]).unwrap();
        assert_eq!(kauffman(&kink).unwrap(), LaurentPoly2::one());
    }

    #[test]
    fn kauffman_trefoil_degrees() {
        let f = kauffman(&right_trefoil()).unwrap();
        let d = f.degrees().unwrap();
        assert_eq!(d.z_max, 2);
        assert_eq!(d.v_spread(), 3);
        // mirror symmetry: a -> a^-1
        let fl = kauffman(&PlanarDiagram::validate(&TREFOIL).unwrap()).unwrap();
        assert_eq!(fl, f.substitute_x_inv());
    }

    #[test]
    fn kauffman_figure_eight_degrees() {
        let f = kauffman(&PlanarDiagram::validate(&FIGURE_EIGHT).unwrap()).unwrap();
        let d = f.degrees().unwrap();
        assert_eq!(d.z_max, 3);
        assert_eq!(d.v_spread(), 4);
        // amphichiral: invariant under a -> a^-1
        assert_eq!(f.substitute_x_inv(), f);
    }

    #[test]
    fn kauffman_mod2_spreads() {
        let g3 = kauffman_mod2(&right_trefoil()).unwrap();
        assert_eq!(g3.degrees().unwrap().v_spread(), 3);
        let g4 = kauffman_mod2(&PlanarDiagram::validate(&FIGURE_EIGHT).unwrap()).unwrap();
        assert_eq!(g4.degrees().unwrap().v_spread(), 4);
    }

    #[test]
    fn engines_agree_with_oracle_on_small_diagrams() {
        let diagrams = vec![
            right_trefoil(),
            PlanarDiagram::validate(&TREFOIL).unwrap(),
            PlanarDiagram::validate(&FIGURE_EIGHT).unwrap(),
            closure(&BraidWord::from_signed(2, &[1, 1]).unwrap()),
            closure(&BraidWord::from_signed(3, &[1, 2, 1, 2]).unwrap()),
            PlanarDiagram::pretzel(&[2, 2]).unwrap(),
            PlanarDiagram::pretzel(&[3, 2]).unwrap(),
        ];
        for d in &diagrams {
            assert_eq!(
                homfly(d).unwrap(),
                oracle::naive_homfly(d),
                "homfly oracle mismatch"
            );
            assert_eq!(
                kauffman(d).unwrap(),
                oracle::naive_kauffman(d),
                "kauffman oracle mismatch"
            );
        }
    }

    #[test]
    fn morton_and_mwf_hold_on_samples() {
        use crate::seifert::seifert_circles;
        for d in [
            right_trefoil(),
            PlanarDiagram::validate(&FIGURE_EIGHT).unwrap(),
            closure(&torus_braid(5, 2).unwrap()),
            closure(&torus_braid(4, 3).unwrap()),
        ] {
            let p = homfly(&d).unwrap();
            let deg = p.degrees().unwrap();
            let s = seifert_circles(&d).unwrap().circle_count as i32;
            let c = d.crossing_count() as i32;
            assert!(deg.z_max <= c - s + 1, "Morton violated");
            assert!(deg.v_spread() % 2 == 0);
            assert!(deg.v_spread() / 2 + 1 <= s, "strand bound violated");
        }
    }
}
