//! Blackboard-framed Whitehead doubles as explicit diagrams.
//!
//! Every base crossing becomes a 2x2 block of crossings between the two
//! antiparallel copies of the strand; the copies are hooked together by a
//! clasp, realized as a vertical stack of 2 + n uniform-sign crossings (the
//! two clasp crossings plus n half-twists between them). The result has
//! exactly 4c + 2 + n crossings and one component.

use thiserror::Error;

use crate::diagram::assembly::UnorientedAssembly;
use crate::diagram::{DiagramError, PlanarDiagram};
use crate::poly::LaurentPoly2;
use crate::seifert::{seifert_circles, SeifertError};
use crate::skein::{homfly_capped, kauffman_capped, SkeinError};

#[derive(Debug, Error)]
pub enum DoubleError {
    #[error("double construction needs a knot diagram, got {0} components")]
    NotAKnot(usize),
    #[error("base diagram must be reduced")]
    BaseNotReduced,
    #[error("clasp arc {0} is not an arc of the base diagram")]
    BadClaspArc(u32),
    #[error("clasp sign must be +1 or -1")]
    BadClaspSign,
    #[error(transparent)]
    Diagram(#[from] DiagramError),
    #[error(transparent)]
    Seifert(#[from] SeifertError),
}

/// Construction data for one double.
#[derive(Debug, Clone)]
pub struct DoubleSpec {
    pub base: PlanarDiagram,
    pub clasp_sign: i8,
    pub half_twists: u32,
    /// base arc along which the clasp is inserted; ignored for the
    /// zero-crossing base
    pub clasp_arc: u32,
}

impl DoubleSpec {
    pub fn new(
        base: PlanarDiagram,
        clasp_sign: i8,
        half_twists: u32,
        clasp_arc: u32,
    ) -> Result<Self, DoubleError> {
        if clasp_sign != 1 && clasp_sign != -1 {
            return Err(DoubleError::BadClaspSign);
        }
        if base.component_count() != 1 {
            return Err(DoubleError::NotAKnot(base.component_count()));
        }
        if !base.is_reduced() {
            return Err(DoubleError::BaseNotReduced);
        }
        if base.crossing_count() > 0 && (clasp_arc == 0 || clasp_arc as usize > base.arc_count()) {
            return Err(DoubleError::BadClaspArc(clasp_arc));
        }
        Ok(DoubleSpec {
            base,
            clasp_sign,
            half_twists,
            clasp_arc,
        })
    }
}

// Sub-crossing offsets within a block.
const NW: usize = 0;
const NE: usize = 1;
const SW: usize = 2;
const SE: usize = 3;

/// Slot of each compass port on a block sub-crossing. The under-strand of
/// every sub-crossing is the horizontal (doubled under) pair.
/// NW, NE: (W,S,E,N) = slots (0,1,2,3); SW, SE: (E,N,W,S) = slots (0,1,2,3).
fn block_port(sub: usize, port: char) -> u8 {
    let table = match sub {
        NW | NE => ['W', 'S', 'E', 'N'],
        SW | SE => ['E', 'N', 'W', 'S'],
        _ => unreachable!(),
    };
    table.iter().position(|&p| p == port).unwrap() as u8
}

/// Clasp-stack port tables: slot of each port for crossing j (0-based) in a
/// stack of sign `sign`. Rows alternate which strand passes over so the
/// stack is alternating with uniform crossing sign.
fn stack_port(sign: i8, j: usize, port: char) -> u8 {
    let odd = j % 2 == 0; // first row counts as odd
    let order: [char; 4] = match (sign > 0, odd) {
        (true, true) => ['B', 'b', 'T', 't'],   // BL BR TR TL
        (true, false) => ['T', 't', 'B', 'b'],  // TR TL BL BR
        (false, true) => ['t', 'B', 'b', 'T'],  // TL BL BR TR
        (false, false) => ['b', 'T', 't', 'B'], // BR TR TL BL
    };
    // port letters: 't' = top-left, 'T' = top-right, 'B' = bottom-left,
    // 'b' = bottom-right
    order.iter().position(|&p| p == port).unwrap() as u8
}

/// Build the blackboard double.
pub fn blackboard_double(spec: &DoubleSpec) -> Result<PlanarDiagram, DoubleError> {
    let base = &spec.base;
    let c = base.crossing_count();
    let k = spec.half_twists as usize + 2; // clasp stack height
    let total = 4 * c + k;
    let mut asm = UnorientedAssembly::new(total, 0);
    let stack_base = 4 * c;
    let stack = |j: usize, port: char| -> (usize, u8) {
        (stack_base + j, stack_port(spec.clasp_sign, j, port))
    };

    // stack internal wiring
    for j in 0..k - 1 {
        asm.glue(stack(j, 'B'), stack(j + 1, 't')); // bottom-left to top-left
        asm.glue(stack(j, 'b'), stack(j + 1, 'T')); // bottom-right to top-right
    }
    // box ports of the clasp: parallel copy enters top-left, leaves top-right;
    // the returning copy enters bottom (left/right depends on stack parity)
    let box_nw = stack(0, 't');
    let box_ne = stack(0, 'T');
    let (box_sw, box_se) = if k % 2 == 1 {
        (stack(k - 1, 'b'), stack(k - 1, 'B'))
    } else {
        (stack(k - 1, 'B'), stack(k - 1, 'b'))
    };

    if c == 0 {
        // doubled unknot: close the ribbon around the clasp directly
        asm.glue(box_ne, box_nw);
        asm.glue(box_sw, box_se);
        let d = asm.orient()?.realize(false)?;
        return Ok(d);
    }

    // block internal wiring per base crossing
    for i in 0..c {
        let sub = |which: usize, port: char| -> (usize, u8) {
            (4 * i + which, block_port(which, port))
        };
        asm.glue(sub(NW, 'E'), sub(NE, 'W')); // north row
        asm.glue(sub(SE, 'W'), sub(SW, 'E')); // south row
        asm.glue(sub(SW, 'N'), sub(NW, 'S')); // west column
        asm.glue(sub(NE, 'S'), sub(SE, 'N')); // east column
    }

    // parallel (F) and reversed (B) stubs of block i at base slot s
    let stubs = |i: usize, s: u8| -> ((usize, u8), (usize, u8)) {
        let sign = base.crossings()[i].sign;
        let sub = |which: usize, port: char| -> (usize, u8) {
            (4 * i + which, block_port(which, port))
        };
        match (s, sign > 0) {
            (0, _) => (sub(NW, 'W'), sub(SW, 'W')),
            (2, _) => (sub(NE, 'E'), sub(SE, 'E')),
            (3, true) => (sub(NE, 'N'), sub(NW, 'N')),
            (3, false) => (sub(NW, 'N'), sub(NE, 'N')),
            (1, true) => (sub(SE, 'S'), sub(SW, 'S')),
            (1, false) => (sub(SW, 'S'), sub(SE, 'S')),
            _ => unreachable!(),
        }
    };

    // endpoints of every base arc: (crossing, slot) leaving, (crossing, slot)
    // entering
    let mut arc_out = vec![(usize::MAX, 0u8); base.arc_count() + 1];
    let mut arc_in = vec![(usize::MAX, 0u8); base.arc_count() + 1];
    for (i, x) in base.crossings().iter().enumerate() {
        for s in 0..4u8 {
            let arc = x.arcs[s as usize] as usize;
            if crate::diagram::assembly::slot_is_in(x.sign, s) {
                arc_in[arc] = (i, s);
            } else {
                arc_out[arc] = (i, s);
            }
        }
    }

    for arc in 1..=base.arc_count() as u32 {
        let (ai, as_) = arc_out[arc as usize];
        let (bi, bs) = arc_in[arc as usize];
        let (f_from, b_from) = stubs(ai, as_);
        let (f_to, b_to) = stubs(bi, bs);
        if arc == spec.clasp_arc {
            asm.glue(f_from, box_nw);
            asm.glue(box_ne, f_to);
            asm.glue(b_to, box_se);
            asm.glue(box_sw, b_from);
        } else {
            asm.glue(f_from, f_to);
            asm.glue(b_to, b_from);
        }
    }

    let d = asm.orient()?.realize(false)?;
    Ok(d)
}

/// Seifert data of the constructed double, reported against the two
/// candidate circle counts 2c+1 and 2c+3.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DoubleCertificate {
    pub crossing_count: usize,
    pub circle_count: usize,
    pub genus_twice: i64,
    /// g(D) of the double, an upper bound for its canonical genus
    pub canonical_genus_upper: i64,
    pub matches_2c_plus_1: bool,
    pub matches_2c_plus_3: bool,
}

pub fn double_genus_certificate(spec: &DoubleSpec) -> Result<DoubleCertificate, DoubleError> {
    let d = blackboard_double(spec)?;
    let s = seifert_circles(&d)?;
    let c_base = spec.base.crossing_count();
    let n = spec.half_twists as usize;
    Ok(DoubleCertificate {
        crossing_count: d.crossing_count(),
        circle_count: s.circle_count,
        genus_twice: s.genus_twice,
        canonical_genus_upper: s.genus_twice / 2,
        matches_2c_plus_1: s.circle_count == 2 * c_base + 1 + n,
        matches_2c_plus_3: s.circle_count == 2 * c_base + 3 + n,
    })
}

/// Among the two clasp signs, the construction with more Seifert circles.
pub fn best_double(
    base: &PlanarDiagram,
    half_twists: u32,
    clasp_arc: u32,
) -> Result<(DoubleSpec, PlanarDiagram), DoubleError> {
    let mut best: Option<(usize, DoubleSpec, PlanarDiagram)> = None;
    for sign in [1i8, -1] {
        let spec = DoubleSpec::new(base.clone(), sign, half_twists, clasp_arc)?;
        let d = blackboard_double(&spec)?;
        let s = seifert_circles(&d)?.circle_count;
        if best.as_ref().map_or(true, |(bs, _, _)| s > *bs) {
            best = Some((s, spec, d));
        }
    }
    let (_, spec, d) = best.unwrap();
    Ok((spec, d))
}

/// Both sides of the doubled-degree comparison
/// 2 (maxdeg_z F(K) + 1) vs maxdeg_z P(W_K).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConjectureEvidence {
    pub left: i64,
    /// right side, when the double fits under the HOMFLY cap
    pub right: Option<i64>,
    pub equal: Option<bool>,
    pub left_ge_right: Option<bool>,
}

pub fn conjecture_evidence(
    base: &PlanarDiagram,
    clasp_arc: u32,
    homfly_cap: usize,
    kauffman_cap: usize,
) -> Result<ConjectureEvidence, DoubleError> {
    let f = match kauffman_capped(base, kauffman_cap) {
        Ok(f) => f,
        Err(SkeinError::CapExceeded { .. }) => {
            return Ok(ConjectureEvidence {
                left: 0,
                right: None,
                equal: None,
                left_ge_right: None,
            })
        }
        Err(SkeinError::Poly(_)) => unreachable!("nonzero Kauffman polynomial"),
    };
    let left = 2 * (max_z(&f) + 1);
    let (_, double) = best_double(base, 0, clasp_arc)?;
    let right = match homfly_capped(&double, homfly_cap) {
        Ok(p) => Some(max_z(&p)),
        Err(SkeinError::CapExceeded { .. }) => None,
        Err(SkeinError::Poly(_)) => unreachable!("nonzero HOMFLY polynomial"),
    };
    Ok(ConjectureEvidence {
        left,
        right,
        equal: right.map(|r| left == r),
        left_ge_right: right.map(|r| left >= r),
    })
}

fn max_z(p: &LaurentPoly2) -> i64 {
    p.degrees().expect("nonzero polynomial").z_max as i64
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::skein::homfly;

    const TREFOIL: [[u32; 4]; 3] = [[1, 4, 2, 5], [3, 6, 4, 1], [5, 2, 6, 3]];
    const FIGURE_EIGHT: [[u32; 4]; 4] = [[4, 2, 5, 1], [8, 6, 1, 5], [6, 3, 7, 4], [2, 7, 3, 8]];

    fn unknot_spec(sign: i8, twists: u32) -> DoubleSpec {
        DoubleSpec::new(PlanarDiagram::unknot(), sign, twists, 0).unwrap()
    }

    #[test]
    fn doubled_unknot_counts() {
        let d = blackboard_double(&unknot_spec(1, 0)).unwrap();
        assert_eq!(d.crossing_count(), 2);
        assert_eq!(d.component_count(), 1);
        // clasp crossings carry the clasp sign
        assert!(d.crossings().iter().all(|x| x.sign == 1));
        let neg = blackboard_double(&unknot_spec(-1, 0)).unwrap();
        assert!(neg.crossings().iter().all(|x| x.sign == -1));
    }

    #[test]
    fn doubled_unknot_is_unknotted_for_all_twists() {
        for twists in 0..=3 {
            for sign in [1, -1] {
                let d = blackboard_double(&unknot_spec(sign, twists)).unwrap();
                assert_eq!(d.crossing_count(), 2 + twists as usize);
                assert_eq!(
                    homfly(&d).unwrap(),
                    LaurentPoly2::one(),
                    "sign {sign}, twists {twists}"
                );
            }
        }
    }

    #[test]
    fn doubled_unknot_circle_census() {
        // s is odd by parity and grows by one per half-twist
        let mut last = None;
        for twists in 0..=5 {
            let cert = double_genus_certificate(&unknot_spec(1, twists)).unwrap();
            assert_eq!(cert.genus_twice, 0);
            assert_eq!(cert.circle_count % 2, 1);
            if let Some(prev) = last {
                assert_eq!(cert.circle_count, prev + 1);
            }
            last = Some(cert.circle_count);
        }
        assert_eq!(last, Some(8));
    }

    #[test]
    fn doubled_trefoil_counts() {
        let base = PlanarDiagram::validate(&TREFOIL).unwrap();
        for twists in 0..=5u32 {
            let (_, d) = best_double(&base, twists, 1).unwrap();
            assert_eq!(d.crossing_count(), 14 + twists as usize);
            assert_eq!(d.component_count(), 1);
        }
    }

    #[test]
    fn doubled_trefoil_genus_certificate() {
        let base = PlanarDiagram::validate(&TREFOIL).unwrap();
        let (spec, _) = best_double(&base, 0, 1).unwrap();
        let cert = double_genus_certificate(&spec).unwrap();
        // the construction realizes g(D) = c(base): s = 2c+3, 2g = 6
        assert_eq!(cert.genus_twice, 6);
        assert_eq!(cert.canonical_genus_upper, 3);
        assert!(cert.matches_2c_plus_3);
        assert!(!cert.matches_2c_plus_1);
        // twist invariance: same 2g, one more circle per half-twist
        let mut prev_s = cert.circle_count;
        for twists in 1..=5u32 {
            let spec_n = DoubleSpec::new(base.clone(), spec.clasp_sign, twists, 1).unwrap();
            let cert_n = double_genus_certificate(&spec_n).unwrap();
            assert_eq!(cert_n.genus_twice, 6, "twists {twists}");
            assert_eq!(cert_n.circle_count, prev_s + 1, "twists {twists}");
            prev_s = cert_n.circle_count;
        }
    }

    #[test]
    fn doubled_trefoil_homfly_degree() {
        let base = PlanarDiagram::validate(&TREFOIL).unwrap();
        let (_, d) = best_double(&base, 0, 1).unwrap();
        let p = homfly(&d).unwrap();
        assert_eq!(p.degrees().unwrap().z_max, 6);
    }

    #[test]
    fn conjecture_rows() {
        let trefoil = PlanarDiagram::validate(&TREFOIL).unwrap();
        let ev = conjecture_evidence(&trefoil, 1, 16, 14).unwrap();
        assert_eq!(ev.left, 6);
        assert_eq!(ev.right, Some(6));
        assert_eq!(ev.equal, Some(true));
        // figure-eight double has 18 crossings: skipped under the default cap
        let f8 = PlanarDiagram::validate(&FIGURE_EIGHT).unwrap();
        let ev8 = conjecture_evidence(&f8, 1, 16, 14).unwrap();
        assert_eq!(ev8.left, 8);
        assert_eq!(ev8.right, None);
    }

    #[test]
    fn rejects_bad_bases() {
        let hopf = PlanarDiagram::validate(&[[1, 4, 2, 3], [4, 1, 3, 2]]).unwrap();
        assert!(matches!(
            DoubleSpec::new(hopf, 1, 0, 1),
            Err(DoubleError::NotAKnot(2))
        ));
        let kink = PlanarDiagram::validate(&[[1, 1, 2, 2]]).unwrap();
        assert!(matches!(
            DoubleSpec::new(kink, 1, 0, 1),
            Err(DoubleError::BaseNotReduced)
        ));
    }
}
