//! Seifert's algorithm on diagrams: circle census, diagram genus, the
//! alternating invariant s_a, and the flype rewrite.

use std::collections::BTreeSet;

use thiserror::Error;

use crate::diagram::assembly::{slot_is_in, OrientedAssembly};
use crate::diagram::{DiagramError, PlanarDiagram, UnionFind};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SeifertError {
    #[error("Seifert data requires a non-split diagram")]
    Split,
    #[error("s_a requires a reduced alternating diagram")]
    NotReducedAlternating,
}

#[derive(Debug, Error)]
pub enum FlypeError {
    #[error("tangle boundary has {0} arcs, a flype tangle needs exactly 4")]
    BadBoundary(usize),
    #[error("pivot crossing must sit outside the tangle")]
    PivotInsideTangle,
    #[error("pivot must be adjacent to exactly two boundary arcs on one side")]
    PivotNotAdjacent,
    #[error("tangle sides could not be matched across the flype")]
    SidesUnmatched,
    #[error("flype requires a reduced diagram")]
    NotReduced,
    #[error("crossing index {0} out of range")]
    BadCrossingIndex(usize),
    #[error("rewrite produced an invalid diagram: {0}")]
    Rewrite(#[from] DiagramError),
}

/// Result of Seifert's algorithm on a diagram.
///
/// `genus_twice` stores 2g(D) = c(D) - s(D) - |K| + 2, kept doubled so links
/// stay in integer arithmetic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeifertDecomposition {
    pub circle_count: usize,
    /// circle index (1-based) of each arc; index 0 unused
    pub circle_of_arc: Vec<usize>,
    pub genus_twice: i64,
}

/// Run Seifert's algorithm: smooth every crossing respecting orientation and
/// count the resulting circles.
pub fn seifert_circles(d: &PlanarDiagram) -> Result<SeifertDecomposition, SeifertError> {
    if d.is_split() {
        return Err(SeifertError::Split);
    }
    if d.arc_count() == 0 {
        return Ok(SeifertDecomposition {
            circle_count: 1,
            circle_of_arc: vec![0],
            genus_twice: 0,
        });
    }
    let mut uf = UnionFind::new(d.arc_count() + 1);
    for x in d.crossings() {
        // incoming under joins the outgoing over-side arc, and vice versa
        uf.union(x.a() as usize, x.over_out() as usize);
        uf.union(x.over_in() as usize, x.c() as usize);
    }
    let mut reps: BTreeSet<usize> = BTreeSet::new();
    for arc in 1..=d.arc_count() {
        reps.insert(uf.find(arc));
    }
    let ordered: Vec<usize> = reps.iter().copied().collect();
    let circle_of_arc: Vec<usize> = (0..=d.arc_count())
        .map(|arc| {
            if arc == 0 {
                0
            } else {
                ordered.iter().position(|&r| r == uf.find(arc)).unwrap() + 1
            }
        })
        .collect();
    let s = ordered.len();
    let genus_twice =
        d.crossing_count() as i64 - s as i64 - d.component_count() as i64 + 2;
    Ok(SeifertDecomposition {
        circle_count: s,
        circle_of_arc,
        genus_twice,
    })
}

/// Seifert-circle count of a reduced alternating diagram, which is an
/// invariant of the underlying alternating link.
pub fn s_a(d: &PlanarDiagram) -> Result<usize, SeifertError> {
    if !d.is_alternating() || !d.is_reduced() {
        return Err(SeifertError::NotReducedAlternating);
    }
    Ok(seifert_circles(d)?.circle_count)
}

/// A flype site: a tangle hanging off the rest of the diagram by four arcs,
/// with a pivot crossing adjacent to two of them.
#[derive(Debug, Clone)]
pub struct FlypeSite {
    pub tangle_crossings: BTreeSet<usize>,
    pub boundary_arcs: [u32; 4],
    pub pivot_crossing: usize,
}

impl FlypeSite {
    /// Validate indices against a diagram and compute the boundary arcs.
    pub fn new(
        d: &PlanarDiagram,
        tangle: impl IntoIterator<Item = usize>,
        pivot: usize,
    ) -> Result<Self, FlypeError> {
        let n = d.crossing_count();
        let tangle: BTreeSet<usize> = tangle.into_iter().collect();
        if pivot >= n {
            return Err(FlypeError::BadCrossingIndex(pivot));
        }
        if let Some(&bad) = tangle.iter().find(|&&c| c >= n) {
            return Err(FlypeError::BadCrossingIndex(bad));
        }
        if tangle.contains(&pivot) {
            return Err(FlypeError::PivotInsideTangle);
        }
        if tangle.is_empty() {
            // degenerate site, the flype is a no-op
            return Ok(FlypeSite {
                tangle_crossings: tangle,
                boundary_arcs: [0; 4],
                pivot_crossing: pivot,
            });
        }
        let boundary = boundary_arcs(d, &tangle);
        if boundary.len() != 4 {
            return Err(FlypeError::BadBoundary(boundary.len()));
        }
        Ok(FlypeSite {
            tangle_crossings: tangle,
            boundary_arcs: [boundary[0], boundary[1], boundary[2], boundary[3]],
            pivot_crossing: pivot,
        })
    }
}

fn boundary_arcs(d: &PlanarDiagram, tangle: &BTreeSet<usize>) -> Vec<u32> {
    let mut out = Vec::new();
    for arc in 1..=d.arc_count() as u32 {
        let mut inside = 0;
        let mut outside = 0;
        for (ci, x) in d.crossings().iter().enumerate() {
            for &a in &x.arcs {
                if a == arc {
                    if tangle.contains(&ci) {
                        inside += 1;
                    } else {
                        outside += 1;
                    }
                }
            }
        }
        if inside == 1 && outside == 1 {
            out.push(arc);
        }
    }
    out
}

/// Apply the flype at `site`: the pivot crossing moves to the far side of the
/// tangle and the tangle is turned over in place. Crossing count, component
/// count, writhe, and the Seifert circle count are all preserved.
pub fn flype(d: &PlanarDiagram, site: &FlypeSite) -> Result<PlanarDiagram, FlypeError> {
    if !d.is_reduced() {
        return Err(FlypeError::NotReduced);
    }
    if site.tangle_crossings.is_empty() {
        return Ok(d.clone());
    }
    let tangle = &site.tangle_crossings;
    let pivot = site.pivot_crossing;
    if pivot >= d.crossing_count() || tangle.iter().any(|&c| c >= d.crossing_count()) {
        return Err(FlypeError::BadCrossingIndex(pivot));
    }

    let crossings = d.crossings();
    // endpoints of every arc
    let mut ends: Vec<Vec<(usize, u8)>> = vec![Vec::new(); d.arc_count() + 1];
    for (ci, x) in crossings.iter().enumerate() {
        for (s, &a) in x.arcs.iter().enumerate() {
            ends[a as usize].push((ci, s as u8));
        }
    }

    // The two boundary arcs landing on the pivot must occupy cyclically
    // adjacent slots there: (q, q+1) counterclockwise, q facing the tangle's
    // lower corner.
    let pivot_arcs: Vec<u32> = site
        .boundary_arcs
        .iter()
        .copied()
        .filter(|&a| {
            ends[a as usize]
                .iter()
                .any(|&(ci, _)| ci == pivot)
        })
        .collect();
    if pivot_arcs.len() != 2 {
        return Err(FlypeError::PivotNotAdjacent);
    }
    let slot_of = |arc: u32, ci: usize| -> Option<u8> {
        ends[arc as usize]
            .iter()
            .find(|&&(c, _)| c == ci)
            .map(|&(_, s)| s)
    };
    let s1 = slot_of(pivot_arcs[0], pivot).unwrap();
    let s2 = slot_of(pivot_arcs[1], pivot).unwrap();
    let q = if (s1 + 1) % 4 == s2 {
        s1
    } else if (s2 + 1) % 4 == s1 {
        s2
    } else {
        return Err(FlypeError::PivotNotAdjacent);
    };

    // far-side boundary arcs, paired to the pivot corners by shared faces
    let far: Vec<u32> = site
        .boundary_arcs
        .iter()
        .copied()
        .filter(|&a| ends[a as usize].iter().all(|&(ci, _)| ci != pivot))
        .collect();
    if far.len() != 2 {
        return Err(FlypeError::PivotNotAdjacent);
    }
    let (face_count, face) = d.faces();
    // arcs on each face
    let mut face_arcs: Vec<BTreeSet<u32>> = vec![BTreeSet::new(); face_count];
    for (ci, x) in crossings.iter().enumerate() {
        for s in 0..4usize {
            // the corner (ci, s) is swept by a face walk that leaves along
            // slot (s+1); both bounding arcs lie on that face
            let f = face[ci][s];
            face_arcs[f].insert(x.arcs[s]);
            face_arcs[f].insert(x.arcs[(s + 1) % 4]);
        }
    }
    let top_face = face[pivot][((q + 1) % 4) as usize];
    let bottom_face = face[pivot][((q + 3) % 4) as usize];
    let f1_top = far
        .iter()
        .copied()
        .filter(|&a| face_arcs[top_face].contains(&a))
        .collect::<Vec<_>>();
    let f2_bottom = far
        .iter()
        .copied()
        .filter(|&a| face_arcs[bottom_face].contains(&a))
        .collect::<Vec<_>>();
    let (f1, f2) = match (f1_top.as_slice(), f2_bottom.as_slice()) {
        ([a], [b]) if a != b => (*a, *b),
        _ => return Err(FlypeError::SidesUnmatched),
    };

    // tangle-side endpoints of the four boundary arcs
    let tangle_end = |arc: u32| -> (usize, u8) {
        *ends[arc as usize]
            .iter()
            .find(|&&(ci, _)| tangle.contains(&ci))
            .unwrap()
    };
    let outside_end = |arc: u32| -> (usize, u8) {
        *ends[arc as usize]
            .iter()
            .find(|&&(ci, _)| !tangle.contains(&ci))
            .unwrap()
    };
    let e2 = tangle_end(crossings[pivot].arcs[q as usize]);
    let e1 = tangle_end(crossings[pivot].arcs[((q + 1) % 4) as usize]);
    let t1 = tangle_end(f1);
    let o1 = outside_end(f1);
    let t2 = tangle_end(f2);
    let o2 = outside_end(f2);

    // Build the rewired assembly.
    let asm = OrientedAssembly::from_diagram(d);
    let mut mate = asm.mate.clone();
    let mut signs = asm.signs.clone();

    // Turn the tangle over: every tangle crossing switches over/under and
    // reverses its cyclic reading; sign is preserved. Slot permutation:
    // positive (a,b,c,d) -> (d,c,b,a), negative -> (b,a,d,c).
    let perm_for = |sign: i8, s: u8| -> u8 {
        if sign > 0 {
            3 - s
        } else {
            s ^ 1
        }
    };
    let remap = |end: (usize, u8), signs: &[i8]| -> (usize, u8) {
        if tangle.contains(&end.0) {
            (end.0, perm_for(signs[end.0], end.1))
        } else {
            end
        }
    };
    let old_signs = signs.clone();
    // rewrite tangle crossing tuples in the mate table
    let mut new_mate = mate.clone();
    for &tc in tangle.iter() {
        let sign = old_signs[tc];
        for s in 0..4u8 {
            let ns = perm_for(sign, s);
            new_mate[tc][ns as usize] = mate[tc][s as usize];
        }
    }
    // remap endpoints stored anywhere that point into the tangle
    for row in new_mate.iter_mut() {
        for slot in row.iter_mut() {
            *slot = remap(*slot, &old_signs);
        }
    }
    mate = new_mate;

    let e1 = remap(e1, &old_signs);
    let e2 = remap(e2, &old_signs);
    let t1 = remap(t1, &old_signs);
    let t2 = remap(t2, &old_signs);

    let r1 = mate[pivot][((q + 2) % 4) as usize];
    let r2 = mate[pivot][((q + 3) % 4) as usize];

    let set = |mate: &mut Vec<[(usize, u8); 4]>, a: (usize, u8), b: (usize, u8)| {
        mate[a.0][a.1 as usize] = b;
        mate[b.0][b.1 as usize] = a;
    };
    // rest connects straight to the turned tangle on the pivot side
    set(&mut mate, r1, e2);
    set(&mut mate, r2, e1);
    // pivot re-appears between the far side of the tangle and the rest
    set(&mut mate, t2, (pivot, (q + 2) % 4));
    set(&mut mate, t1, (pivot, (q + 3) % 4));
    set(&mut mate, (pivot, q), o2);
    set(&mut mate, (pivot, (q + 1) % 4), o1);

    // Strand directions through the pivot may have reversed: re-anchor its
    // tuple so slot 0 is again the incoming under-strand, and re-derive sign.
    {
        let polarity = |mate: &Vec<[(usize, u8); 4]>, end: (usize, u8)| -> bool {
            // this endpoint is an entry iff its mate is an exit
            let (mc, ms) = mate[end.0][end.1 as usize];
            if mc == pivot {
                // loop at the pivot cannot appear in a reduced diagram
                unreachable!("pivot loop");
            }
            !slot_is_in(signs[mc], ms)
        };
        let under_in_0 = polarity(&mate, (pivot, 0));
        let rot = if under_in_0 { 0u8 } else { 2u8 };
        if rot == 2 {
            let row = mate[pivot];
            for s in 0..4u8 {
                let e = row[((s + 2) % 4) as usize];
                mate[pivot][s as usize] = e;
                mate[e.0][e.1 as usize] = (pivot, s);
            }
        }
        let over_in_3 = polarity(&mate, (pivot, 3));
        signs[pivot] = if over_in_3 { 1 } else { -1 };
    }

    let asm = OrientedAssembly {
        mate,
        signs,
        free_loops: 0,
    };
    Ok(asm.realize(false)?)
}

/// Enumerate flype sites over twist regions: maximal chains of crossings
/// joined pairwise by two parallel arcs. Each site takes a contiguous run of
/// the chain as the tangle and an adjacent chain crossing as pivot.
pub fn twist_region_sites(d: &PlanarDiagram) -> Vec<FlypeSite> {
    let n = d.crossing_count();
    // adjacency: crossings sharing exactly two arcs
    let mut shared = vec![vec![0usize; n]; n];
    for (ci, x) in d.crossings().iter().enumerate() {
        for (cj, y) in d.crossings().iter().enumerate().skip(ci + 1) {
            let mut count = 0;
            for &a in &x.arcs {
                if y.arcs.contains(&a) {
                    count += 1;
                }
            }
            shared[ci][cj] = count;
            shared[cj][ci] = count;
        }
    }
    let mut sites = Vec::new();
    for ci in 0..n {
        for cj in 0..n {
            if ci == cj || shared[ci][cj] != 2 {
                continue;
            }
            // grow a chain from cj away from ci
            let mut chain = vec![cj];
            let mut prev = ci;
            let mut cur = cj;
            loop {
                let next = (0..n)
                    .find(|&ck| ck != prev && ck != cur && shared[cur][ck] == 2);
                match next {
                    Some(ck) if !chain.contains(&ck) && ck != ci => {
                        chain.push(ck);
                        prev = cur;
                        cur = ck;
                    }
                    _ => break,
                }
            }
            for len in 1..=chain.len() {
                if let Ok(site) = FlypeSite::new(d, chain[..len].iter().copied(), ci) {
                    sites.push(site);
                }
            }
        }
    }
    sites
}

#[cfg(test)]
mod tests {
    use super::*;

    const TREFOIL: [[u32; 4]; 3] = [[1, 4, 2, 5], [3, 6, 4, 1], [5, 2, 6, 3]];
    const FIGURE_EIGHT: [[u32; 4]; 4] = [[4, 2, 5, 1], [8, 6, 1, 5], [6, 3, 7, 4], [2, 7, 3, 8]];

    #[test]
    fn trefoil_circles() {
        let d = PlanarDiagram::validate(&TREFOIL).unwrap();
        let s = seifert_circles(&d).unwrap();
        assert_eq!(s.circle_count, 2);
        assert_eq!(s.genus_twice, 2);
        // oracle trace: {1,3,5} and {2,4,6} are the two circles
        assert_eq!(s.circle_of_arc[1], s.circle_of_arc[3]);
        assert_eq!(s.circle_of_arc[3], s.circle_of_arc[5]);
        assert_eq!(s.circle_of_arc[2], s.circle_of_arc[4]);
        assert_ne!(s.circle_of_arc[1], s.circle_of_arc[2]);
    }

    #[test]
    fn unknot_circles() {
        let d = PlanarDiagram::unknot();
        let s = seifert_circles(&d).unwrap();
        assert_eq!(s.circle_count, 1);
        assert_eq!(s.genus_twice, 0);
    }

    #[test]
    fn figure_eight_circles() {
        let d = PlanarDiagram::validate(&FIGURE_EIGHT).unwrap();
        let s = seifert_circles(&d).unwrap();
        assert_eq!(s.circle_count, 3);
        assert_eq!(s.genus_twice, 2);
    }

    #[test]
    fn mirror_preserves_circles() {
        for raw in [&TREFOIL[..], &FIGURE_EIGHT[..]] {
            let d = PlanarDiagram::validate(raw).unwrap();
            let s1 = seifert_circles(&d).unwrap().circle_count;
            let s2 = seifert_circles(&d.mirror()).unwrap().circle_count;
            assert_eq!(s1, s2);
        }
    }

    #[test]
    fn s_a_on_trefoil() {
        let d = PlanarDiagram::validate(&TREFOIL).unwrap();
        assert_eq!(s_a(&d).unwrap(), 2);
    }

    #[test]
    fn s_a_rejects_non_alternating() {
        // closure of sigma_1 sigma_2 on three strands is not alternating
        let w = crate::braid::BraidWord::from_signed(3, &[1, 2]).unwrap();
        let d = crate::braid::closure(&w);
        assert!(matches!(s_a(&d), Err(SeifertError::NotReducedAlternating)));
    }

    #[test]
    fn flype_preserves_circles_on_pretzels() {
        let d = PlanarDiagram::pretzel(&[3, 2]).unwrap();
        let sites = twist_region_sites(&d);
        assert!(!sites.is_empty());
        let s0 = seifert_circles(&d).unwrap().circle_count;
        for site in &sites {
            let fd = flype(&d, site).unwrap();
            assert_eq!(fd.crossing_count(), d.crossing_count());
            assert_eq!(fd.component_count(), d.component_count());
            assert_eq!(seifert_circles(&fd).unwrap().circle_count, s0);
        }
    }

    #[test]
    fn flype_twice_is_identity_up_to_relabelling() {
        let d = PlanarDiagram::pretzel(&[3, 2]).unwrap();
        let sites = twist_region_sites(&d);
        let site = &sites[0];
        let once = flype(&d, site).unwrap();
        let twice = flype(&once, site).unwrap();
        assert!(twice.canonically_eq(&d));
    }

    #[test]
    fn empty_tangle_flype_is_identity() {
        let d = PlanarDiagram::pretzel(&[2, 2]).unwrap();
        let site = FlypeSite {
            tangle_crossings: BTreeSet::new(),
            boundary_arcs: [0; 4],
            pivot_crossing: 0,
        };
        let fd = flype(&d, &site).unwrap();
        assert_eq!(fd, d);
    }

    #[test]
    fn flype_rejects_bad_sites() {
        let d = PlanarDiagram::pretzel(&[2, 2]).unwrap();
        // tangle containing the pivot
        assert!(FlypeSite::new(&d, [0usize, 1], 1).is_err());
    }
}
