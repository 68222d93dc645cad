//! Oriented link diagrams as PD codes.
//!
//! A diagram is a list of crossings over arc labels 1..=2n. Each crossing
//! lists its four arcs counterclockwise starting from the incoming
//! under-strand, so slot 0 is the under-strand entry, slot 2 its exit, and
//! slots 1/3 carry the over-strand. A crossing is positive when the
//! over-strand runs from slot 3 to slot 1.
//!
//! Arc labels run consecutively along each component in the direction of its
//! orientation, wrapping from the component's largest label back to its
//! smallest. Everything downstream (Seifert circles, skein engines, doubles)
//! relies on this normal form.

pub(crate) mod assembly;
mod pdfile;

pub use pdfile::{parse_pd_text, render_pd_text, PdParseError};

use std::collections::BTreeSet;

use thiserror::Error;

use assembly::{slot_is_in, OrientedAssembly, UnorientedAssembly};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum DiagramError {
    #[error("arc label {label} occurs {count} times, expected exactly 2")]
    ArcLabelCount { label: u32, count: usize },
    #[error("arc label {label} out of range 1..={max}")]
    ArcLabelRange { label: u32, max: u32 },
    #[error("over-strand orientation is ambiguous")]
    AmbiguousOverStrand,
    #[error("arc-successor relation is inconsistent with the labelling")]
    InconsistentOrientation,
    #[error("arc {arc} breaks consecutive numbering along its component")]
    NonConsecutiveLabels { arc: u32 },
    #[error("diagram is split")]
    Split,
    #[error("crossing data does not describe a planar diagram")]
    NonPlanar,
    #[error("genus parity violated: c - s - |K| + 2 is odd")]
    ParityViolation,
    #[error("arc {arc} is not an arc of this diagram")]
    InvalidArc { arc: u32 },
    #[error("a pretzel needs at least two twist regions")]
    TooFewTwistRegions,
    #[error("internal construction error: {0}")]
    Internal(String),
}

/// One crossing of a PD code. `arcs` are listed counterclockwise from the
/// incoming under-strand; `sign` is derived during validation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Crossing {
    pub arcs: [u32; 4],
    pub sign: i8,
}

impl Crossing {
    pub fn a(&self) -> u32 {
        self.arcs[0]
    }
    pub fn b(&self) -> u32 {
        self.arcs[1]
    }
    pub fn c(&self) -> u32 {
        self.arcs[2]
    }
    pub fn d(&self) -> u32 {
        self.arcs[3]
    }

    /// Arc on which the over-strand enters.
    pub fn over_in(&self) -> u32 {
        if self.sign > 0 {
            self.arcs[3]
        } else {
            self.arcs[1]
        }
    }

    /// Arc on which the over-strand leaves.
    pub fn over_out(&self) -> u32 {
        if self.sign > 0 {
            self.arcs[1]
        } else {
            self.arcs[3]
        }
    }
}

/// A validated oriented link diagram.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlanarDiagram {
    crossings: Vec<Crossing>,
    arc_count: usize,
    free_loops: usize,
    component_count: usize,
    split: bool,
}

impl PlanarDiagram {
    /// The zero-crossing unknot.
    pub fn unknot() -> Self {
        PlanarDiagram {
            crossings: Vec::new(),
            arc_count: 0,
            free_loops: 1,
            component_count: 1,
            split: false,
        }
    }

    /// Validate raw PD tuples into a diagram.
    ///
    /// Over-strand orientations are derived from the requirement that every
    /// arc is entered once and left once and that labels run consecutively
    /// along components. Split inputs are rejected.
    pub fn validate(raw: &[[u32; 4]]) -> Result<Self, DiagramError> {
        let n = raw.len();
        if n == 0 {
            return Ok(Self::unknot());
        }
        let max = (2 * n) as u32;
        let mut counts = vec![0usize; 2 * n + 1];
        for tuple in raw {
            for &arc in tuple {
                if arc == 0 || arc > max {
                    return Err(DiagramError::ArcLabelRange { label: arc, max });
                }
                counts[arc as usize] += 1;
            }
        }
        for (label, &count) in counts.iter().enumerate().skip(1) {
            if count != 2 {
                return Err(DiagramError::ArcLabelCount {
                    label: label as u32,
                    count,
                });
            }
        }

        // Solve the in/out status of every endpoint. Slot 0 enters, slot 2
        // leaves; over-slots are constrained by their arc-partner and by the
        // opposite over-slot of the same crossing.
        let mut occ: Vec<Vec<(usize, u8)>> = vec![Vec::new(); 2 * n + 1];
        for (ci, tuple) in raw.iter().enumerate() {
            for (s, &arc) in tuple.iter().enumerate() {
                occ[arc as usize].push((ci, s as u8));
            }
        }
        let mut status: Vec<[Option<bool>; 4]> = vec![[None; 4]; n];
        let mut queue: Vec<(usize, u8, bool)> = Vec::new();
        for ci in 0..n {
            queue.push((ci, 0, true));
            queue.push((ci, 2, false));
        }
        let mut set = |status: &mut Vec<[Option<bool>; 4]>,
                       queue: &mut Vec<(usize, u8, bool)>,
                       ci: usize,
                       s: u8,
                       v: bool|
         -> Result<(), DiagramError> {
            match status[ci][s as usize] {
                Some(old) if old != v => Err(DiagramError::InconsistentOrientation),
                Some(_) => Ok(()),
                None => {
                    status[ci][s as usize] = Some(v);
                    queue.push((ci, s, v));
                    Ok(())
                }
            }
        };
        // seed
        {
            let mut seeded: Vec<(usize, u8, bool)> = Vec::new();
            std::mem::swap(&mut queue, &mut seeded);
            for (ci, s, v) in seeded {
                set(&mut status, &mut queue, ci, s, v)?;
            }
        }
        let mut head = 0;
        while head < queue.len() {
            let (ci, s, v) = queue[head];
            head += 1;
            // arc partner gets the opposite status
            let arc = raw[ci][s as usize];
            for &(cj, t) in &occ[arc as usize] {
                if (cj, t) != (ci, s) {
                    set(&mut status, &mut queue, cj, t, !v)?;
                }
            }
            // over-slot siblings are one-in one-out
            if s == 1 || s == 3 {
                set(&mut status, &mut queue, ci, s ^ 2, !v)?;
            }
        }

        // Group still-unknown endpoints into parity components and try both
        // values for each; exactly one globally consistent diagram may remain.
        let mut comp_of: Vec<[usize; 4]> = vec![[usize::MAX; 4]; n];
        let mut comp_parity: Vec<[bool; 4]> = vec![[false; 4]; n];
        let mut comp_count = 0usize;
        for ci in 0..n {
            for s in [1u8, 3u8] {
                if status[ci][s as usize].is_some() || comp_of[ci][s as usize] != usize::MAX {
                    continue;
                }
                // BFS over the parity constraints
                let id = comp_count;
                comp_count += 1;
                let mut stack = vec![(ci, s, false)];
                while let Some((cj, t, parity)) = stack.pop() {
                    if comp_of[cj][t as usize] != usize::MAX {
                        continue;
                    }
                    comp_of[cj][t as usize] = id;
                    comp_parity[cj][t as usize] = parity;
                    let arc = raw[cj][t as usize];
                    for &(ck, u) in &occ[arc as usize] {
                        if (ck, u) != (cj, t) && status[ck][u as usize].is_none() {
                            stack.push((ck, u, !parity));
                        }
                    }
                    let sib = t ^ 2;
                    if status[cj][sib as usize].is_none() {
                        stack.push((cj, sib, !parity));
                    }
                }
            }
        }
        if comp_count > 12 {
            return Err(DiagramError::AmbiguousOverStrand);
        }
        let mut found: Option<PlanarDiagram> = None;
        for mask in 0u32..(1 << comp_count) {
            let mut signs = vec![0i8; n];
            for ci in 0..n {
                let over_in_at_3 = match status[ci][3] {
                    Some(v) => v,
                    None => {
                        let id = comp_of[ci][3];
                        let base = (mask >> id) & 1 == 1;
                        base ^ comp_parity[ci][3]
                    }
                };
                signs[ci] = if over_in_at_3 { 1 } else { -1 };
            }
            let crossings: Vec<Crossing> = raw
                .iter()
                .zip(&signs)
                .map(|(tuple, &sign)| Crossing { arcs: *tuple, sign })
                .collect();
            match Self::from_parts(crossings, 0, false) {
                Ok(d) => {
                    if comp_count == 0 {
                        return Ok(d);
                    }
                    if found.is_some() {
                        return Err(DiagramError::AmbiguousOverStrand);
                    }
                    found = Some(d);
                }
                Err(e) => {
                    if comp_count == 0 {
                        return Err(e);
                    }
                }
            }
        }
        found.ok_or(DiagramError::InconsistentOrientation)
    }

    /// Assemble a diagram from crossings with known signs, checking every
    /// structural invariant. All generator paths funnel through here.
    pub(crate) fn from_parts(
        crossings: Vec<Crossing>,
        free_loops: usize,
        allow_split: bool,
    ) -> Result<Self, DiagramError> {
        let n = crossings.len();
        if n == 0 {
            if free_loops == 0 {
                return Err(DiagramError::Internal("empty diagram".into()));
            }
            if free_loops > 1 && !allow_split {
                return Err(DiagramError::Split);
            }
            return Ok(PlanarDiagram {
                crossings,
                arc_count: 0,
                free_loops,
                component_count: free_loops,
                split: free_loops > 1,
            });
        }
        let max = (2 * n) as u32;
        let mut occ: Vec<Vec<(usize, u8)>> = vec![Vec::new(); 2 * n + 1];
        for (ci, x) in crossings.iter().enumerate() {
            if x.sign != 1 && x.sign != -1 {
                return Err(DiagramError::Internal("crossing sign unset".into()));
            }
            for (s, &arc) in x.arcs.iter().enumerate() {
                if arc == 0 || arc > max {
                    return Err(DiagramError::ArcLabelRange { label: arc, max });
                }
                occ[arc as usize].push((ci, s as u8));
            }
        }
        for (label, ends) in occ.iter().enumerate().skip(1) {
            if ends.len() != 2 {
                return Err(DiagramError::ArcLabelCount {
                    label: label as u32,
                    count: ends.len(),
                });
            }
        }
        // every arc: one entering endpoint, one leaving
        for ends in occ.iter().skip(1) {
            let ins = ends
                .iter()
                .filter(|&&(ci, s)| slot_is_in(crossings[ci].sign, s))
                .count();
            if ins != 1 {
                return Err(DiagramError::InconsistentOrientation);
            }
        }
        // successor of each arc, via the crossing it enters
        let mut succ = vec![0u32; 2 * n + 1];
        for x in &crossings {
            succ[x.a() as usize] = x.c();
            succ[x.over_in() as usize] = x.over_out();
        }
        // trace components; labels must be consecutive with wraparound
        let mut seen = vec![false; 2 * n + 1];
        let mut component_count = 0usize;
        for start in 1..=(2 * n) as u32 {
            if seen[start as usize] {
                continue;
            }
            component_count += 1;
            let mut cur = start;
            loop {
                seen[cur as usize] = true;
                let next = succ[cur as usize];
                if next == start {
                    break;
                }
                if next != cur + 1 {
                    return Err(DiagramError::NonConsecutiveLabels { arc: cur });
                }
                cur = next;
            }
        }
        // splitness: free loops beside crossings, or a disconnected
        // underlying 4-valent graph
        let graph_components = {
            let mut uf = UnionFind::new(n);
            for ends in occ.iter().skip(1) {
                uf.union(ends[0].0, ends[1].0);
            }
            uf.class_count()
        };
        let split = free_loops > 0 || graph_components > 1;
        if split && !allow_split {
            return Err(DiagramError::Split);
        }
        let d = PlanarDiagram {
            crossings,
            arc_count: 2 * n,
            free_loops,
            component_count: component_count + free_loops,
            split,
        };
        // planarity via Euler's formula on the face count
        let (face_count, _) = d.faces();
        if face_count != n + 1 + graph_components {
            return Err(DiagramError::NonPlanar);
        }
        // genus parity: c - s - |K| + 2 must be even
        let s = d.seifert_circle_count();
        if (n + s + d.component_count) % 2 != 0 {
            return Err(DiagramError::ParityViolation);
        }
        Ok(d)
    }

    pub fn crossings(&self) -> &[Crossing] {
        &self.crossings
    }

    pub fn crossing_count(&self) -> usize {
        self.crossings.len()
    }

    pub fn arc_count(&self) -> usize {
        self.arc_count
    }

    pub fn free_loops(&self) -> usize {
        self.free_loops
    }

    pub fn component_count(&self) -> usize {
        self.component_count
    }

    pub fn is_split(&self) -> bool {
        self.split
    }

    pub fn writhe(&self) -> i64 {
        self.crossings.iter().map(|x| x.sign as i64).sum()
    }

    /// successor[arc] = next arc along the same component.
    pub fn successor_map(&self) -> Vec<u32> {
        let mut succ = vec![0u32; self.arc_count + 1];
        for x in &self.crossings {
            succ[x.a() as usize] = x.c();
            succ[x.over_in() as usize] = x.over_out();
        }
        succ
    }

    /// Components as arc cycles, in ascending label order.
    pub fn trace_components(&self) -> Vec<Vec<u32>> {
        let succ = self.successor_map();
        let mut seen = vec![false; self.arc_count + 1];
        let mut out = Vec::new();
        for start in 1..=self.arc_count as u32 {
            if seen[start as usize] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut cur = start;
            loop {
                seen[cur as usize] = true;
                cycle.push(cur);
                cur = succ[cur as usize];
                if cur == start {
                    break;
                }
            }
            out.push(cycle);
        }
        out
    }

    /// Number of circles after the orientation-respecting smoothing of every
    /// crossing (free loops included).
    pub(crate) fn seifert_circle_count(&self) -> usize {
        if self.arc_count == 0 {
            return self.free_loops;
        }
        let mut uf = UnionFind::new(self.arc_count + 1);
        for x in &self.crossings {
            uf.union(x.a() as usize, x.over_out() as usize);
            uf.union(x.over_in() as usize, x.c() as usize);
        }
        let mut reps = BTreeSet::new();
        for arc in 1..=self.arc_count {
            reps.insert(uf.find(arc));
        }
        reps.len() + self.free_loops
    }

    /// Mirror image: over- and under-strands swap everywhere, so every sign
    /// flips while arcs and orientations stay put.
    pub fn mirror(&self) -> PlanarDiagram {
        let crossings = self
            .crossings
            .iter()
            .map(|x| Crossing {
                arcs: [x.arcs[0], x.arcs[3], x.arcs[2], x.arcs[1]],
                sign: -x.sign,
            })
            .collect();
        PlanarDiagram {
            crossings,
            ..self.clone()
        }
    }

    /// Connected sum: splice `arc1` of `self` into `arc2` of `other` with
    /// consistent orientation, then relabel canonically.
    pub fn connected_sum(
        &self,
        other: &PlanarDiagram,
        arc1: u32,
        arc2: u32,
    ) -> Result<PlanarDiagram, DiagramError> {
        if self.crossing_count() == 0 {
            return Ok(other.clone());
        }
        if other.crossing_count() == 0 {
            return Ok(self.clone());
        }
        if arc1 == 0 || arc1 > self.arc_count as u32 {
            return Err(DiagramError::InvalidArc { arc: arc1 });
        }
        if arc2 == 0 || arc2 > other.arc_count as u32 {
            return Err(DiagramError::InvalidArc { arc: arc2 });
        }
        let a1 = OrientedAssembly::from_diagram(self);
        let a2 = OrientedAssembly::from_diagram(other);
        let shift = self.crossing_count();
        let mut mate = a1.mate.clone();
        for slots in &a2.mate {
            mate.push(slots.map(|(c, s)| (c + shift, s)));
        }
        let mut signs = a1.signs.clone();
        signs.extend_from_slice(&a2.signs);
        // locate the out/in endpoints of each chosen arc
        let locate = |d: &PlanarDiagram, arc: u32, offset: usize| {
            let mut out_end = None;
            let mut in_end = None;
            for (ci, x) in d.crossings().iter().enumerate() {
                for s in 0..4u8 {
                    if x.arcs[s as usize] == arc {
                        if slot_is_in(x.sign, s) {
                            in_end = Some((ci + offset, s));
                        } else {
                            out_end = Some((ci + offset, s));
                        }
                    }
                }
            }
            (out_end.unwrap(), in_end.unwrap())
        };
        let (o1, i1) = locate(self, arc1, 0);
        let (o2, i2) = locate(other, arc2, shift);
        let set = |mate: &mut Vec<[(usize, u8); 4]>, a: (usize, u8), b: (usize, u8)| {
            mate[a.0][a.1 as usize] = b;
            mate[b.0][b.1 as usize] = a;
        };
        set(&mut mate, o1, i2);
        set(&mut mate, o2, i1);
        let asm = OrientedAssembly {
            mate,
            signs,
            free_loops: 0,
        };
        asm.realize(false)
    }

    /// Faces of the underlying 4-valent plane map. Returns the face count and
    /// the face id of each corner; corner (c, s) lies between slots s and s+1.
    pub fn faces(&self) -> (usize, Vec<[usize; 4]>) {
        let n = self.crossings.len();
        let mut mate: Vec<[(usize, u8); 4]> = vec![[(usize::MAX, 0); 4]; n];
        {
            let mut occ: Vec<Option<(usize, u8)>> = vec![None; self.arc_count + 1];
            for (ci, x) in self.crossings.iter().enumerate() {
                for (s, &arc) in x.arcs.iter().enumerate() {
                    match occ[arc as usize] {
                        None => occ[arc as usize] = Some((ci, s as u8)),
                        Some((cj, t)) => {
                            mate[ci][s] = (cj, t);
                            mate[cj][t as usize] = (ci, s as u8);
                        }
                    }
                }
            }
        }
        let mut face = vec![[usize::MAX; 4]; n];
        let mut count = 0usize;
        for c0 in 0..n {
            for s0 in 0..4u8 {
                if face[c0][s0 as usize] != usize::MAX {
                    continue;
                }
                let id = count;
                count += 1;
                let (mut c, mut s) = (c0, s0);
                while face[c][s as usize] == usize::MAX {
                    face[c][s as usize] = id;
                    let exit = (s + 1) % 4;
                    let (nc, ns) = mate[c][exit as usize];
                    c = nc;
                    s = ns;
                }
            }
        }
        (count, face)
    }

    /// True when under- and over-passages alternate along every component.
    pub fn is_alternating(&self) -> bool {
        self.crossings.iter().all(|x| {
            // the arc leaving the under-strand must enter an over-strand,
            // and the arc leaving the over-strand must enter an under-strand
            let under_next = x.c();
            let over_next = x.over_out();
            self.arc_enters_over(under_next) && !self.arc_enters_over(over_next)
        })
    }

    fn arc_enters_over(&self, arc: u32) -> bool {
        for x in &self.crossings {
            if x.over_in() == arc {
                return true;
            }
            if x.a() == arc {
                return false;
            }
        }
        false
    }

    /// True when no crossing is nugatory. A crossing is nugatory exactly when
    /// two of its opposite corners lie on the same face.
    pub fn is_reduced(&self) -> bool {
        let (_, face) = self.faces();
        self.crossings
            .iter()
            .enumerate()
            .all(|(ci, _)| face[ci][0] != face[ci][2] && face[ci][1] != face[ci][3])
    }

    /// Standard pretzel diagram: vertical twist regions of `twists[i]`
    /// crossings each, uniform handedness, joined along top and bottom.
    pub fn pretzel(twists: &[u32]) -> Result<PlanarDiagram, DiagramError> {
        if twists.len() < 2 {
            return Err(DiagramError::TooFewTwistRegions);
        }
        if twists.iter().any(|&a| a == 0) {
            return Err(DiagramError::Internal("empty twist region".into()));
        }
        let total: usize = twists.iter().map(|&a| a as usize).sum();
        let mut asm = UnorientedAssembly::new(total, 0);
        // crossing slots: (0,1,2,3) = (top-right, top-left, bottom-left,
        // bottom-right); the over-strand runs on the TL-BR diagonal.
        let mut base = 0usize;
        let mut tops = Vec::new(); // (top-left end, top-right end) per region
        let mut bottoms = Vec::new();
        for &a in twists {
            let a = a as usize;
            for j in 0..a - 1 {
                asm.glue((base + j, 2), (base + j + 1, 1)); // BL -> TL below
                asm.glue((base + j, 3), (base + j + 1, 0)); // BR -> TR below
            }
            tops.push(((base, 1), (base, 0)));
            bottoms.push(((base + a - 1, 2), (base + a - 1, 3)));
            base += a;
        }
        let k = twists.len();
        for i in 0..k {
            let next = (i + 1) % k;
            asm.glue(tops[i].1, tops[next].0); // top-right to next top-left
            asm.glue(bottoms[i].1, bottoms[next].0); // bottom-right to next bottom-left
        }
        asm.orient()?.realize(false)
    }

    /// Lexicographically minimal relabelling, for structural comparison.
    /// Falls back to the deterministic labelling on large diagrams.
    pub fn canonical_form(&self) -> PlanarDiagram {
        let comps = self.trace_components();
        let candidates: u64 = comps
            .iter()
            .map(|c| c.len() as u64)
            .product::<u64>()
            .saturating_mul((1..=comps.len() as u64).product::<u64>());
        if self.crossing_count() == 0 || candidates > 20_000 {
            let asm = OrientedAssembly::from_diagram(self);
            let mut d = asm.realize(self.split).expect("relabel of valid diagram");
            d.crossings.sort_by_key(|x| (x.arcs, x.sign));
            return d;
        }
        let mut best: Option<Vec<(u32, u32, u32, u32, i8)>> = None;
        let orders = permutations(comps.len());
        for order in &orders {
            // choose a start arc per component, in every combination
            let mut choice = vec![0usize; comps.len()];
            loop {
                let mut label = vec![0u32; self.arc_count + 1];
                let mut next = 1u32;
                for &ci in order {
                    let cyc = &comps[ci];
                    let start = choice[ci];
                    for k in 0..cyc.len() {
                        label[cyc[(start + k) % cyc.len()] as usize] = next;
                        next += 1;
                    }
                }
                let mut tuples: Vec<(u32, u32, u32, u32, i8)> = self
                    .crossings
                    .iter()
                    .map(|x| {
                        (
                            label[x.arcs[0] as usize],
                            label[x.arcs[1] as usize],
                            label[x.arcs[2] as usize],
                            label[x.arcs[3] as usize],
                            x.sign,
                        )
                    })
                    .collect();
                tuples.sort();
                if best.as_ref().map_or(true, |b| &tuples < b) {
                    best = Some(tuples);
                }
                // advance the mixed-radix choice vector
                let mut pos = 0;
                loop {
                    if pos == comps.len() {
                        break;
                    }
                    choice[pos] += 1;
                    if choice[pos] < comps[pos].len() {
                        break;
                    }
                    choice[pos] = 0;
                    pos += 1;
                }
                if pos == comps.len() {
                    break;
                }
            }
        }
        let tuples = best.expect("at least one labelling");
        let crossings: Vec<Crossing> = tuples
            .into_iter()
            .map(|(a, b, c, d, sign)| Crossing {
                arcs: [a, b, c, d],
                sign,
            })
            .collect();
        PlanarDiagram::from_parts(crossings, self.free_loops, self.split)
            .expect("canonical relabel of valid diagram")
    }

    /// Structural equality up to relabelling.
    pub fn canonically_eq(&self, other: &PlanarDiagram) -> bool {
        self.canonical_form() == other.canonical_form()
    }
}

fn permutations(k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    let mut items: Vec<usize> = (0..k).collect();
    heap_permute(&mut items, k, &mut out);
    out
}

fn heap_permute(items: &mut Vec<usize>, k: usize, out: &mut Vec<Vec<usize>>) {
    if k == 1 {
        out.push(items.clone());
        return;
    }
    for i in 0..k {
        heap_permute(items, k - 1, out);
        if k % 2 == 0 {
            items.swap(i, k - 1);
        } else {
            items.swap(0, k - 1);
        }
    }
}

pub(crate) struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    pub fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    pub fn find(&mut self, x: usize) -> usize {
        let mut root = x;
        while self.parent[root] != root {
            root = self.parent[root];
        }
        let mut cur = x;
        while self.parent[cur] != root {
            let next = self.parent[cur];
            self.parent[cur] = root;
            cur = next;
        }
        root
    }

    pub fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra] = rb;
        }
    }

    pub fn class_count(&mut self) -> usize {
        let n = self.parent.len();
        let mut reps = BTreeSet::new();
        for i in 0..n {
            reps.insert(self.find(i));
        }
        reps.len()
    }
}

/// Named fixture: diagrams of one link plus externally supplied invariants.
#[derive(Debug, Clone, Default)]
pub struct KnownInvariants {
    pub crossing_number: Option<Known>,
    pub genus: Option<Known>,
    pub free_genus: Option<Known>,
    pub braid_index: Option<Known>,
    pub arc_index: Option<Known>,
}

/// One externally supplied invariant value with its provenance.
#[derive(Debug, Clone)]
pub struct Known {
    pub value: u32,
    pub provenance: String,
}

#[derive(Debug, Clone)]
pub struct KnotRecord {
    pub name: String,
    pub diagrams: Vec<PlanarDiagram>,
    pub known: KnownInvariants,
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) const TREFOIL: [[u32; 4]; 3] = [[1, 4, 2, 5], [3, 6, 4, 1], [5, 2, 6, 3]];
    pub(crate) const FIGURE_EIGHT: [[u32; 4]; 4] =
        [[4, 2, 5, 1], [8, 6, 1, 5], [6, 3, 7, 4], [2, 7, 3, 8]];
    pub(crate) const HOPF: [[u32; 4]; 2] = [[1, 4, 2, 3], [4, 1, 3, 2]];

    #[test]
    fn empty_input_is_the_unknot() {
        let d = PlanarDiagram::validate(&[]).unwrap();
        assert_eq!(d.component_count(), 1);
        assert_eq!(d.crossing_count(), 0);
        assert!(!d.is_split());
    }

    #[test]
    fn trefoil_validates_with_one_component() {
        let d = PlanarDiagram::validate(&TREFOIL).unwrap();
        assert_eq!(d.component_count(), 1);
        assert_eq!(d.crossing_count(), 3);
        // all three crossings negative under this labelling
        assert!(d.crossings().iter().all(|x| x.sign == -1));
        // oracle: the unique trace is 1,2,3,4,5,6
        assert_eq!(
            d.trace_components(),
            vec![vec![1, 2, 3, 4, 5, 6]]
        );
    }

    #[test]
    fn hopf_orientations_resolve_unambiguously() {
        let d = PlanarDiagram::validate(&HOPF).unwrap();
        assert_eq!(d.component_count(), 2);
        assert!(d.crossings().iter().all(|x| x.sign == 1));
    }

    #[test]
    fn duplicate_label_is_rejected() {
        let raw = [[1, 4, 2, 5], [3, 6, 4, 1], [5, 2, 6, 4]];
        match PlanarDiagram::validate(&raw) {
            Err(DiagramError::ArcLabelCount { .. }) => {}
            other => panic!("expected label-count error, got {other:?}"),
        }
    }

    #[test]
    fn inconsistent_successor_is_rejected() {
        // swap two labels in the trefoil so tracing breaks
        let raw = [[1, 4, 2, 5], [3, 6, 4, 2], [5, 1, 6, 3]];
        assert!(PlanarDiagram::validate(&raw).is_err());
    }

    #[test]
    fn all_over_component_is_ambiguous() {
        // component {3,4} only ever crosses over component {1,2}: both
        // orientations of the over-component are globally consistent
        let raw = [[1, 3, 2, 4], [2, 4, 1, 3]];
        match PlanarDiagram::validate(&raw) {
            Err(DiagramError::AmbiguousOverStrand) => {}
            other => panic!("expected ambiguity error, got {other:?}"),
        }
    }

    #[test]
    fn mirror_is_an_involution_preserving_counts() {
        let d = PlanarDiagram::validate(&TREFOIL).unwrap();
        let m = d.mirror();
        assert!(m.crossings().iter().all(|x| x.sign == 1));
        assert_eq!(m.crossing_count(), d.crossing_count());
        assert_eq!(m.component_count(), d.component_count());
        assert_eq!(m.mirror(), d);
    }

    #[test]
    fn trefoil_is_reduced_alternating() {
        let d = PlanarDiagram::validate(&TREFOIL).unwrap();
        assert!(d.is_alternating());
        assert!(d.is_reduced());
        let (f, _) = d.faces();
        assert_eq!(f, 5); // Euler: c + 2
    }

    #[test]
    fn figure_eight_signs_and_faces() {
        let d = PlanarDiagram::validate(&FIGURE_EIGHT).unwrap();
        assert_eq!(d.writhe(), 0);
        assert!(d.is_alternating());
        assert!(d.is_reduced());
        let (f, _) = d.faces();
        assert_eq!(f, 6);
    }

    #[test]
    fn kink_is_not_reduced() {
        // one-crossing unknot: arc 2 is a loop at the crossing
        let raw = [[1, 1, 2, 2]];
        let d = PlanarDiagram::validate(&raw).unwrap();
        assert_eq!(d.component_count(), 1);
        assert!(!d.is_reduced());
    }

    #[test]
    fn connected_sum_adds_crossings_and_components() {
        let t = PlanarDiagram::validate(&TREFOIL).unwrap();
        let h = PlanarDiagram::validate(&HOPF).unwrap();
        let granny = t.connected_sum(&t, 1, 1).unwrap();
        assert_eq!(granny.crossing_count(), 6);
        assert_eq!(granny.component_count(), 1);
        let th = t.connected_sum(&h, 2, 3).unwrap();
        assert_eq!(th.crossing_count(), 5);
        assert_eq!(th.component_count(), 2);
    }

    #[test]
    fn connected_sum_with_unknot_is_identity() {
        let t = PlanarDiagram::validate(&TREFOIL).unwrap();
        let u = PlanarDiagram::unknot();
        let s = u.connected_sum(&t, 1, 1).unwrap();
        assert!(s.canonically_eq(&t));
    }

    #[test]
    fn pretzel_counts() {
        let p = PlanarDiagram::pretzel(&[2, 2, 2, 2]).unwrap();
        assert_eq!(p.crossing_count(), 8);
        assert!(p.is_alternating());
        let hopf = PlanarDiagram::pretzel(&[1, 1]).unwrap();
        assert_eq!(hopf.crossing_count(), 2);
        assert_eq!(hopf.component_count(), 2);
        let p33 = PlanarDiagram::pretzel(&[3, 3]).unwrap();
        assert_eq!(p33.crossing_count(), 6);
        assert!(PlanarDiagram::pretzel(&[5]).is_err());
    }

    #[test]
    fn parity_holds_on_fixtures() {
        for raw in [&TREFOIL[..], &FIGURE_EIGHT[..], &HOPF[..]] {
            let d = PlanarDiagram::validate(raw).unwrap();
            let parity =
                (d.crossing_count() + d.seifert_circle_count() + d.component_count()) % 2;
            assert_eq!(parity, 0);
        }
    }
}
