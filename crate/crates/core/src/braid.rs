//! Braid words, closures, homogeneity, Markov moves, and torus braids.

use thiserror::Error;

use crate::diagram::assembly::OrientedAssembly;
use crate::diagram::{DiagramError, PlanarDiagram};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum BraidError {
    #[error("generator index {index} needs at least {} strands", index + 1)]
    GeneratorOutOfRange { index: usize },
    #[error("generator index 0 is not valid")]
    ZeroGenerator,
    #[error("torus braid needs p >= q >= 2, got ({p},{q})")]
    BadTorusParameters { p: usize, q: usize },
    #[error("braid word needs at least one strand")]
    NoStrands,
}

/// One letter: the Artin generator `index` (1-based), positive or inverse.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BraidLetter {
    pub index: usize,
    pub positive: bool,
}

/// A word in the braid group on `strand_count` strands.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BraidWord {
    pub strand_count: usize,
    pub letters: Vec<BraidLetter>,
}

impl BraidWord {
    pub fn new(strand_count: usize, letters: Vec<BraidLetter>) -> Result<Self, BraidError> {
        if strand_count == 0 {
            return Err(BraidError::NoStrands);
        }
        for l in &letters {
            if l.index == 0 {
                return Err(BraidError::ZeroGenerator);
            }
            if l.index >= strand_count {
                return Err(BraidError::GeneratorOutOfRange { index: l.index });
            }
        }
        Ok(BraidWord {
            strand_count,
            letters,
        })
    }

    /// Build from signed integers: `1 -2 1 -2` reads sigma_1 sigma_2^-1 ...
    pub fn from_signed(strand_count: usize, signed: &[i32]) -> Result<Self, BraidError> {
        let letters = signed
            .iter()
            .map(|&v| BraidLetter {
                index: v.unsigned_abs() as usize,
                positive: v > 0,
            })
            .collect();
        Self::new(strand_count, letters)
    }

    pub fn signed(&self) -> Vec<i32> {
        self.letters
            .iter()
            .map(|l| {
                let v = l.index as i32;
                if l.positive {
                    v
                } else {
                    -v
                }
            })
            .collect()
    }

    /// Permutation induced on strand positions (0-based), bottom of the braid.
    pub fn permutation(&self) -> Vec<usize> {
        let mut perm: Vec<usize> = (0..self.strand_count).collect();
        for l in &self.letters {
            perm.swap(l.index - 1, l.index);
        }
        perm
    }

    /// Number of cycles of the strand permutation = closure component count.
    pub fn cycle_count(&self) -> usize {
        let perm = self.permutation();
        let mut seen = vec![false; perm.len()];
        let mut cycles = 0;
        for start in 0..perm.len() {
            if seen[start] {
                continue;
            }
            cycles += 1;
            let mut cur = start;
            while !seen[cur] {
                seen[cur] = true;
                cur = perm[cur];
            }
        }
        cycles
    }

    /// Each generator 1..strand_count-1 occurs, and only with one sign.
    pub fn is_homogeneous(&self) -> bool {
        if self.strand_count < 2 {
            return false;
        }
        for index in 1..self.strand_count {
            let mut pos = 0usize;
            let mut neg = 0usize;
            for l in &self.letters {
                if l.index == index {
                    if l.positive {
                        pos += 1;
                    } else {
                        neg += 1;
                    }
                }
            }
            if pos + neg == 0 || (pos > 0 && neg > 0) {
                return false;
            }
        }
        true
    }

    pub fn writhe(&self) -> i64 {
        self.letters
            .iter()
            .map(|l| if l.positive { 1i64 } else { -1 })
            .sum()
    }
}

/// Conjugate g^-1 w g by a single generator letter.
pub fn conjugate(w: &BraidWord, letter: BraidLetter) -> Result<BraidWord, BraidError> {
    let mut letters = Vec::with_capacity(w.letters.len() + 2);
    letters.push(BraidLetter {
        index: letter.index,
        positive: !letter.positive,
    });
    letters.extend_from_slice(&w.letters);
    letters.push(letter);
    BraidWord::new(w.strand_count, letters)
}

/// Markov stabilization: append sigma_n^{+/-} on strand_count + 1 strands.
pub fn stabilize(w: &BraidWord, positive: bool) -> BraidWord {
    let mut letters = w.letters.clone();
    letters.push(BraidLetter {
        index: w.strand_count,
        positive,
    });
    BraidWord {
        strand_count: w.strand_count + 1,
        letters,
    }
}

/// The (p,q)-torus braid (sigma_1 ... sigma_{q-1})^p on q strands.
pub fn torus_braid(p: usize, q: usize) -> Result<BraidWord, BraidError> {
    if q < 2 || p < q {
        return Err(BraidError::BadTorusParameters { p, q });
    }
    let mut letters = Vec::with_capacity(p * (q - 1));
    for _ in 0..p {
        for index in 1..q {
            letters.push(BraidLetter {
                index,
                positive: true,
            });
        }
    }
    BraidWord::new(q, letters)
}

/// Close the braid: strand ends wrap around to their starts. Positive letters
/// produce positive crossings. Unused strands close to crossing-free loops,
/// so such closures carry the split marker.
pub fn closure(w: &BraidWord) -> PlanarDiagram {
    let n = w.strand_count;
    let used: Vec<bool> = {
        let mut used = vec![false; n];
        for l in &w.letters {
            used[l.index - 1] = true;
            used[l.index] = true;
        }
        used
    };
    let free_loops = used.iter().filter(|&&u| !u).count();
    let c = w.letters.len();
    if c == 0 {
        return PlanarDiagram::from_parts(Vec::new(), n, true)
            .expect("closure of empty word");
    }
    // Ends of the open braid: current[pos] = endpoint waiting to be extended.
    // Slot layout per crossing (normalized, CCW from incoming under):
    //   positive: a = NW in from position i, b = SW out (over), c = SE out,
    //             d = NE in from position i+1
    //   negative: a = NE in from position i+1, b = NW in, c = SW out,
    //             d = SE out
    let mut mate = vec![[(usize::MAX, 0u8); 4]; c];
    let mut pending: Vec<Option<(usize, u8)>> = vec![None; n];
    let mut first_in: Vec<Option<(usize, u8)>> = vec![None; n];
    let mut glue = |mate: &mut Vec<[(usize, u8); 4]>, a: (usize, u8), b: (usize, u8)| {
        mate[a.0][a.1 as usize] = b;
        mate[b.0][b.1 as usize] = a;
    };
    let mut signs = vec![0i8; c];
    for (ci, l) in w.letters.iter().enumerate() {
        let i = l.index - 1; // left position
        let (in_left, in_right, out_left, out_right) = if l.positive {
            ((ci, 0u8), (ci, 3u8), (ci, 1u8), (ci, 2u8))
        } else {
            ((ci, 1u8), (ci, 0u8), (ci, 2u8), (ci, 3u8))
        };
        signs[ci] = if l.positive { 1 } else { -1 };
        for (pos, incoming) in [(i, in_left), (i + 1, in_right)] {
            match pending[pos].take() {
                Some(prev_out) => glue(&mut mate, prev_out, incoming),
                None => first_in[pos] = Some(incoming),
            }
        }
        pending[i] = Some(out_left);
        pending[i + 1] = Some(out_right);
    }
    for pos in 0..n {
        if let (Some(out), Some(start)) = (pending[pos], first_in[pos]) {
            glue(&mut mate, out, start);
        }
    }
    let asm = OrientedAssembly {
        mate,
        signs,
        free_loops,
    };
    asm.realize(true).expect("braid closure is a valid diagram")
}

/// Closure that must be non-split (every strand engaged).
pub fn closure_nonsplit(w: &BraidWord) -> Result<PlanarDiagram, DiagramError> {
    let d = closure(w);
    if d.is_split() {
        return Err(DiagramError::Split);
    }
    Ok(d)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::seifert::seifert_circles;

    #[test]
    fn sigma1_cubed_closure() {
        let w = BraidWord::from_signed(2, &[1, 1, 1]).unwrap();
        let d = closure(&w);
        assert_eq!(d.crossing_count(), 3);
        assert_eq!(d.component_count(), 1);
        assert!(d.crossings().iter().all(|x| x.sign == 1));
        assert_eq!(seifert_circles(&d).unwrap().circle_count, 2);
    }

    #[test]
    fn figure_eight_braid_closure() {
        let w = BraidWord::from_signed(3, &[1, -2, 1, -2]).unwrap();
        let d = closure(&w);
        assert_eq!(d.crossing_count(), 4);
        assert_eq!(d.component_count(), 1);
        assert_eq!(seifert_circles(&d).unwrap().circle_count, 3);
        assert!(d.is_alternating());
    }

    #[test]
    fn single_letter_closure_is_unknot() {
        let w = BraidWord::from_signed(2, &[1]).unwrap();
        let d = closure(&w);
        assert_eq!(d.crossing_count(), 1);
        assert_eq!(d.component_count(), 1);
    }

    #[test]
    fn empty_word_closes_to_unlink() {
        let w = BraidWord::new(3, Vec::new()).unwrap();
        let d = closure(&w);
        assert_eq!(d.component_count(), 3);
        assert!(d.is_split());
        assert!(closure_nonsplit(&w).is_err());
    }

    #[test]
    fn homogeneity() {
        assert!(BraidWord::from_signed(2, &[1, 1, 1]).unwrap().is_homogeneous());
        assert!(BraidWord::from_signed(3, &[1, -2, 1, -2])
            .unwrap()
            .is_homogeneous());
        assert!(!BraidWord::from_signed(2, &[1, -1]).unwrap().is_homogeneous());
        // unused generator disqualifies
        assert!(!BraidWord::from_signed(3, &[1, 1]).unwrap().is_homogeneous());
    }

    #[test]
    fn torus_braid_shape() {
        let w = torus_braid(3, 2).unwrap();
        assert_eq!(w.signed(), vec![1, 1, 1]);
        let d = closure(&w);
        assert_eq!(d.crossing_count(), 3);
        let w43 = torus_braid(4, 3).unwrap();
        assert_eq!(w43.letters.len(), 8);
        assert_eq!(closure(&w43).crossing_count(), 8);
        assert!(torus_braid(2, 3).is_err());
    }

    #[test]
    fn torus_components_are_gcd() {
        for (p, q, want) in [(2, 2, 2), (3, 2, 1), (4, 2, 2), (6, 4, 2), (6, 3, 3)] {
            let w = torus_braid(p, q).unwrap();
            assert_eq!(closure(&w).component_count(), want, "({p},{q})");
            assert_eq!(w.cycle_count(), want);
        }
    }

    #[test]
    fn closure_circle_count_is_strand_count() {
        for (n, word) in [
            (2, vec![1, 1]),
            (3, vec![1, 2, 1, 2]),
            (4, vec![1, -2, 3, 1, -2, 3]),
        ] {
            let w = BraidWord::from_signed(n, &word).unwrap();
            let d = closure(&w);
            assert_eq!(seifert_circles(&d).unwrap().circle_count, n);
        }
    }

    #[test]
    fn markov_moves_change_counts_predictably() {
        let w = BraidWord::from_signed(2, &[1, 1, 1]).unwrap();
        let conj = conjugate(&w, BraidLetter { index: 1, positive: true }).unwrap();
        assert_eq!(conj.letters.len(), 5);
        let stab = stabilize(&w, true);
        assert_eq!(stab.strand_count, 3);
        assert_eq!(stab.signed(), vec![1, 1, 1, 2]);
        let empty = BraidWord::new(1, Vec::new()).unwrap();
        let stab0 = stabilize(&empty, true);
        assert_eq!(stab0.signed(), vec![1]);
        assert_eq!(closure(&stab0).component_count(), 1);
    }
}
