//! Endpoint-level construction kit for diagrams.
//!
//! Generators (braid closures, pretzels, doubles, surgery) describe a diagram
//! as crossings whose slots are glued in pairs, then realize it into a
//! canonically labelled [`PlanarDiagram`](super::PlanarDiagram). Slots are
//! numbered 0..4 counterclockwise; slots 0 and 2 carry the under-strand.

use super::{Crossing, DiagramError, PlanarDiagram};

/// Endpoint of an arc: (crossing index, slot 0..4).
pub(crate) type End = (usize, u8);

/// Unoriented gluing: under/over structure fixed, strand directions not yet chosen.
pub(crate) struct UnorientedAssembly {
    /// mate[c][s] = the endpoint glued to slot s of crossing c.
    pub mate: Vec<[End; 4]>,
    pub free_loops: usize,
}

/// Oriented gluing: every crossing tuple is anchored at its incoming
/// under-strand and carries a sign, so slot polarity is implied.
pub(crate) struct OrientedAssembly {
    pub mate: Vec<[End; 4]>,
    pub signs: Vec<i8>,
    pub free_loops: usize,
}

/// Slot polarity for a normalized crossing: true = strand enters here.
pub(crate) fn slot_is_in(sign: i8, slot: u8) -> bool {
    match slot {
        0 => true,
        2 => false,
        1 => sign < 0,
        3 => sign > 0,
        _ => unreachable!("slot out of range"),
    }
}

/// Exit slot for a strand entering at `slot` (straight through the crossing).
fn through(slot: u8) -> u8 {
    (slot + 2) % 4
}

impl UnorientedAssembly {
    pub fn new(crossings: usize, free_loops: usize) -> Self {
        Self {
            mate: vec![[(usize::MAX, 0); 4]; crossings],
            free_loops,
        }
    }

    /// Glue two endpoints with an arc.
    pub fn glue(&mut self, a: End, b: End) {
        debug_assert!(self.mate[a.0][a.1 as usize].0 == usize::MAX, "double glue at {a:?}");
        debug_assert!(self.mate[b.0][b.1 as usize].0 == usize::MAX, "double glue at {b:?}");
        self.mate[a.0][a.1 as usize] = b;
        self.mate[b.0][b.1 as usize] = a;
    }

    /// Choose strand directions and normalize every crossing.
    ///
    /// Components are walked from their smallest endpoint; the walk direction
    /// induces the orientation, which fixes each crossing's incoming under
    /// slot (rotation by 0 or 2) and its sign.
    pub fn orient(&self) -> Result<OrientedAssembly, DiagramError> {
        let n = self.mate.len();
        for (c, slots) in self.mate.iter().enumerate() {
            for (s, m) in slots.iter().enumerate() {
                if m.0 == usize::MAX {
                    return Err(DiagramError::Internal(format!(
                        "unglued slot {s} of crossing {c}"
                    )));
                }
            }
        }
        // entered[c][s] = this slot is where a walk entered the crossing.
        let mut entered = vec![[false; 4]; n];
        let mut visited = vec![[false; 4]; n];
        for c0 in 0..n {
            for s0 in 0..4u8 {
                if visited[c0][s0 as usize] {
                    continue;
                }
                // Walk the strand starting by entering (c0, s0).
                let (mut c, mut s) = (c0, s0);
                loop {
                    if visited[c][s as usize] {
                        break;
                    }
                    visited[c][s as usize] = true;
                    entered[c][s as usize] = true;
                    let out = through(s);
                    visited[c][out as usize] = true;
                    let (nc, ns) = self.mate[c][out as usize];
                    c = nc;
                    s = ns;
                    if (c, s) == (c0, s0) {
                        break;
                    }
                }
            }
        }
        // Rotate each crossing so the under-strand enters at slot 0.
        let mut rot = vec![0u8; n];
        let mut signs = vec![0i8; n];
        for c in 0..n {
            let under_in = if entered[c][0] { 0 } else { 2 };
            rot[c] = under_in;
            let over_in = if entered[c][1] { 1u8 } else { 3u8 };
            // After rotating by `under_in`, the over-strand enters at slot
            // (over_in - under_in) mod 4; entering at 3 means sign +1.
            let rel = (4 + over_in - under_in) % 4;
            signs[c] = if rel == 3 { 1 } else { -1 };
        }
        let mut mate = vec![[(usize::MAX, 0); 4]; n];
        for c in 0..n {
            for s in 0..4u8 {
                let (mc, ms) = self.mate[c][((s + rot[c]) % 4) as usize];
                let new_ms = (4 + ms - rot[mc]) % 4;
                mate[c][s as usize] = (mc, new_ms);
            }
        }
        Ok(OrientedAssembly {
            mate,
            signs,
            free_loops: self.free_loops,
        })
    }
}

impl OrientedAssembly {
    /// Build an oriented assembly straight from a validated diagram.
    pub fn from_diagram(d: &PlanarDiagram) -> Self {
        let n = d.crossings().len();
        // occurrences[arc] = endpoints carrying this arc label
        let mut occ: Vec<Vec<End>> = vec![Vec::new(); d.arc_count() + 1];
        for (c, x) in d.crossings().iter().enumerate() {
            for s in 0..4u8 {
                occ[x.arcs[s as usize] as usize].push((c, s));
            }
        }
        let mut mate = vec![[(usize::MAX, 0); 4]; n];
        for pair in occ.iter().skip(1) {
            debug_assert_eq!(pair.len(), 2);
            let (a, b) = (pair[0], pair[1]);
            mate[a.0][a.1 as usize] = b;
            mate[b.0][b.1 as usize] = a;
        }
        OrientedAssembly {
            mate,
            signs: d.crossings().iter().map(|x| x.sign).collect(),
            free_loops: d.free_loops(),
        }
    }

    /// Assign consecutive arc labels along each component and produce the
    /// diagram. Crossing order is preserved.
    pub fn realize(&self, allow_split: bool) -> Result<PlanarDiagram, DiagramError> {
        let n = self.mate.len();
        if n == 0 {
            return PlanarDiagram::from_parts(Vec::new(), self.free_loops, allow_split);
        }
        // Arc identity: the pair {endpoint, mate}. Every arc must run from an
        // Out endpoint to an In endpoint.
        let mut arc_label = vec![[0u32; 4]; n];
        let mut next_label = 1u32;
        // Components discovered in order of their smallest In endpoint.
        for c0 in 0..n {
            for s0 in 0..4u8 {
                if !slot_is_in(self.signs[c0], s0) || arc_label[c0][s0 as usize] != 0 {
                    continue;
                }
                // Walk forward from this entry until the cycle closes.
                let (mut c, mut s) = (c0, s0);
                loop {
                    // label the arc arriving at (c, s)
                    let (pc, ps) = self.mate[c][s as usize];
                    if slot_is_in(self.signs[pc], ps) {
                        return Err(DiagramError::Internal(
                            "arc with two incoming endpoints".into(),
                        ));
                    }
                    arc_label[c][s as usize] = next_label;
                    arc_label[pc][ps as usize] = next_label;
                    next_label += 1;
                    // continue along the strand: exit slot, then its mate
                    let out = exit_slot(self.signs[c], s);
                    let (nc, ns) = self.mate[c][out as usize];
                    c = nc;
                    s = ns;
                    if (c, s) == (c0, s0) {
                        break;
                    }
                }
            }
        }
        let crossings: Vec<Crossing> = (0..n)
            .map(|c| Crossing {
                arcs: arc_label[c],
                sign: self.signs[c],
            })
            .collect();
        PlanarDiagram::from_parts(crossings, self.free_loops, allow_split)
    }
}

/// Exit slot of the strand entering a normalized crossing at `slot`.
pub(crate) fn exit_slot(sign: i8, slot: u8) -> u8 {
    debug_assert!(slot_is_in(sign, slot));
    match slot {
        0 => 2,
        1 => 3,
        3 => 1,
        _ => unreachable!("not an entry slot"),
    }
}
