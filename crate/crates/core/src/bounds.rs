//! Crossing-number bound calculators.
//!
//! Every function here is pure integer arithmetic over computed or supplied
//! invariants and returns an auditable [`BoundRecord`]. Genus values are
//! passed doubled (2g) so links never leave integer arithmetic; braid index
//! b, component count k, and arc index alpha are plain integers.

use thiserror::Error;

use crate::poly::DegreeSummary;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum BoundsError {
    #[error("v-exponent spread E - e = {0} is odd; polynomial convention violated")]
    OddSpread(i32),
    #[error("empty factor list")]
    EmptyFactors,
    #[error("{0}")]
    BadInput(&'static str),
}

/// One evaluated bound: the rule, the inputs it consumed, and the value.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundRecord {
    pub name: &'static str,
    pub rule: &'static str,
    pub inputs: Vec<(&'static str, i64)>,
    pub value: i64,
}

impl BoundRecord {
    pub fn describe(&self) -> String {
        let inputs: Vec<String> = self
            .inputs
            .iter()
            .map(|(k, v)| format!("{k}={v}"))
            .collect();
        format!("{} [{}] {} = {}", self.name, self.rule, inputs.join(" "), self.value)
    }
}

/// Membership verdict for the family of links with c = 2g + b + |K| - 2.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FamilyVerdict {
    InFamily,
    NotInFamily,
    Unknown,
}

impl std::fmt::Display for FamilyVerdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            FamilyVerdict::InFamily => "in-family",
            FamilyVerdict::NotInFamily => "not-in-family",
            FamilyVerdict::Unknown => "unknown",
        };
        write!(f, "{s}")
    }
}

/// c >= 2g + b + |K| - 2, evaluated on the right-hand side.
pub fn genus_formula_bound(genus2: i64, braid_index: i64, components: i64) -> BoundRecord {
    BoundRecord {
        name: "genus-braid bound",
        rule: "c >= 2g + b + |K| - 2",
        inputs: vec![("2g", genus2), ("b", braid_index), ("|K|", components)],
        value: genus2 + braid_index + components - 2,
    }
}

/// Exact invariants of the standard (p,q) torus link diagram, p >= q >= 2.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TorusInvariants {
    pub crossing_number: i64,
    pub genus2: i64,
    pub braid_index: i64,
    pub components: i64,
}

pub fn torus_invariants(p: u64, q: u64) -> Result<TorusInvariants, BoundsError> {
    if q < 2 || p < q {
        return Err(BoundsError::BadInput("torus parameters need p >= q >= 2"));
    }
    let c = (p * q - p) as i64;
    let components = gcd(p, q) as i64;
    let braid_index = q as i64;
    // closed q-strand braid: 2g(D) = c(D) - q - |K| + 2
    let genus2 = c - braid_index - components + 2;
    Ok(TorusInvariants {
        crossing_number: c,
        genus2,
        braid_index,
        components,
    })
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Membership test for the family c = 2g + b + |K| - 2, over exact inputs.
pub fn family_check(c: i64, genus2: i64, braid_index: i64, components: i64) -> (FamilyVerdict, BoundRecord) {
    let record = genus_formula_bound(genus2, braid_index, components);
    let verdict = if c == record.value {
        FamilyVerdict::InFamily
    } else {
        FamilyVerdict::NotInFamily
    };
    (verdict, record)
}

/// c(K) >= sum of (2g_i + b_i + k_i - 2) over the factor links.
pub fn composite_bound(factors: &[(i64, i64, i64)]) -> Result<BoundRecord, BoundsError> {
    if factors.is_empty() {
        return Err(BoundsError::EmptyFactors);
    }
    let value = factors.iter().map(|&(g2, b, k)| g2 + b + k - 2).sum();
    Ok(BoundRecord {
        name: "composite bound",
        rule: "c >= sum(2g_i + b_i + |K_i| - 2)",
        inputs: vec![("factors", factors.len() as i64)],
        value,
    })
}

/// b(K_1 # ... # K_n) = sum b_i - (n - 1).
pub fn composite_braid_index(braid_indices: &[i64]) -> Result<BoundRecord, BoundsError> {
    if braid_indices.is_empty() {
        return Err(BoundsError::EmptyFactors);
    }
    let value = braid_indices.iter().sum::<i64>() - (braid_indices.len() as i64 - 1);
    Ok(BoundRecord {
        name: "composite braid index",
        rule: "b(#K_i) = sum(b_i) - (n-1)",
        inputs: vec![("factors", braid_indices.len() as i64)],
        value,
    })
}

/// b(K) >= (E - e)/2 + 1 from the HOMFLY v-degree spread.
pub fn mwf_bound(deg: &DegreeSummary) -> Result<BoundRecord, BoundsError> {
    let spread = deg.v_spread();
    if spread % 2 != 0 {
        return Err(BoundsError::OddSpread(spread));
    }
    Ok(BoundRecord {
        name: "braid index lower bound",
        rule: "b >= (E - e)/2 + 1",
        inputs: vec![("e", deg.v_min as i64), ("E", deg.v_max as i64)],
        value: (spread / 2 + 1) as i64,
    })
}

/// M <= c(D) - s(D) + 1 over all diagrams; M is consumed downstream as
/// 2g~ + |K| - 1 >= M.
pub fn morton_genus_bound(deg: &DegreeSummary) -> BoundRecord {
    BoundRecord {
        name: "canonical genus lower bound",
        rule: "2g~ + |K| - 1 >= M",
        inputs: vec![("M", deg.z_max as i64)],
        value: deg.z_max as i64,
    }
}

/// c(K) >= M + (E - e)/2.
pub fn homfly_crossing_bound(deg: &DegreeSummary) -> Result<BoundRecord, BoundsError> {
    let spread = deg.v_spread();
    if spread % 2 != 0 {
        return Err(BoundsError::OddSpread(spread));
    }
    Ok(BoundRecord {
        name: "polynomial crossing bound",
        rule: "c >= M + (E - e)/2",
        inputs: vec![
            ("M", deg.z_max as i64),
            ("e", deg.v_min as i64),
            ("E", deg.v_max as i64),
        ],
        value: deg.z_max as i64 + (spread / 2) as i64,
    })
}

/// c(K) >= 2b(K) - 2.
pub fn ohyama_bound(braid_index: i64) -> BoundRecord {
    BoundRecord {
        name: "braid-index crossing bound",
        rule: "c >= 2b - 2",
        inputs: vec![("b", braid_index)],
        value: 2 * braid_index - 2,
    }
}

/// c(K) >= maxdeg_z F(K) + 1, sharp for prime alternating knots.
pub fn kidwell_bound(maxdeg_z_f: i64) -> BoundRecord {
    BoundRecord {
        name: "Kauffman degree bound",
        rule: "c >= maxdeg_z F + 1",
        inputs: vec![("maxdeg_z F", maxdeg_z_f)],
        value: maxdeg_z_f + 1,
    }
}

/// alpha(K) >= spread_a(G) + 2 where G is the mod-2 Kauffman polynomial.
pub fn arc_index_bound_mod2(spread_a: i64) -> BoundRecord {
    BoundRecord {
        name: "arc index lower bound",
        rule: "alpha >= spread_a(G) + 2",
        inputs: vec![("spread_a", spread_a)],
        value: spread_a + 2,
    }
}

/// 2g of the (p,q) cable about a companion with doubled genus 2g_C,
/// gcd(p,q) = 1.
pub fn cable_genus(p: i64, q: i64, genus2_companion: i64) -> Result<BoundRecord, BoundsError> {
    if p < 1 || q < 1 || gcd(p as u64, q as u64) != 1 {
        return Err(BoundsError::BadInput("cable parameters need coprime p, q >= 1"));
    }
    Ok(BoundRecord {
        name: "cable genus",
        rule: "2g = (p-1)(q-1) + 2p g(C)",
        inputs: vec![("p", p), ("q", q), ("2g(C)", genus2_companion)],
        value: (p - 1) * (q - 1) + p * genus2_companion,
    })
}

/// c(K) >= q(p-1) + p c(C) for the (p,q) cable about a family-member
/// companion.
pub fn cable_crossing_bound(p: i64, q: i64, c_companion: i64) -> Result<BoundRecord, BoundsError> {
    if p < 1 || q < 1 || gcd(p as u64, q as u64) != 1 {
        return Err(BoundsError::BadInput("cable parameters need coprime p, q >= 1"));
    }
    Ok(BoundRecord {
        name: "cable crossing bound",
        rule: "c >= q(p-1) + p c(C)",
        inputs: vec![("p", p), ("q", q), ("c(C)", c_companion)],
        value: q * (p - 1) + p * c_companion,
    })
}

/// Pattern classification is the caller's: 0 and 1 use the strand weights,
/// anything else falls back to the arc-index estimate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PatternType {
    Type0,
    Type1,
    Other,
}

/// Inputs for the satellite bound; the three cases consume different fields.
#[derive(Debug, Clone, Copy, Default)]
pub struct SatelliteInputs {
    pub w0: Option<i64>,
    pub w1: Option<i64>,
    pub genus2_companion: Option<i64>,
    pub braid_index_companion: Option<i64>,
    pub genus_pattern: Option<i64>,
    pub arc_index_companion: Option<i64>,
}

/// Three-case satellite crossing bound.
pub fn satellite_bound(
    pattern: PatternType,
    inputs: &SatelliteInputs,
) -> Result<BoundRecord, BoundsError> {
    match pattern {
        PatternType::Type0 | PatternType::Type1 => {
            let w0 = inputs.w0.ok_or(BoundsError::BadInput("w0 required"))?;
            let g2c = inputs
                .genus2_companion
                .ok_or(BoundsError::BadInput("2g(C) required"))?;
            let bc = inputs
                .braid_index_companion
                .ok_or(BoundsError::BadInput("b(C) required"))?;
            let gb = inputs
                .genus_pattern
                .ok_or(BoundsError::BadInput("g(B) required"))?;
            let base = w0 * (g2c + bc - 1) + gb + w0;
            if pattern == PatternType::Type0 {
                Ok(BoundRecord {
                    name: "satellite bound (type 0)",
                    rule: "c >= w0(2g(C) + b(C) - 1) + g(B) + w0",
                    inputs: vec![("w0", w0), ("2g(C)", g2c), ("b(C)", bc), ("g(B)", gb)],
                    value: base,
                })
            } else {
                let w1 = inputs.w1.ok_or(BoundsError::BadInput("w1 required"))?;
                Ok(BoundRecord {
                    name: "satellite bound (type 1)",
                    rule: "c >= w0(2g(C) + b(C) - 1) + g(B) + w0 + w1",
                    inputs: vec![
                        ("w0", w0),
                        ("w1", w1),
                        ("2g(C)", g2c),
                        ("b(C)", bc),
                        ("g(B)", gb),
                    ],
                    value: base + w1,
                })
            }
        }
        PatternType::Other => {
            let alpha = inputs
                .arc_index_companion
                .ok_or(BoundsError::BadInput("alpha(C) required"))?;
            Ok(BoundRecord {
                name: "satellite bound (other)",
                rule: "c >= 2 alpha(C) - 2",
                inputs: vec![("alpha(C)", alpha)],
                value: 2 * alpha - 2,
            })
        }
    }
}

/// c(K) >= c(B) + b(B) c(C) for an alternating-braid pattern about a
/// family-member companion.
pub fn satellite_alt_braid_bound(c_pattern: i64, b_pattern: i64, c_companion: i64) -> BoundRecord {
    BoundRecord {
        name: "satellite alternating-braid bound",
        rule: "c >= c(B) + b(B) c(C)",
        inputs: vec![
            ("c(B)", c_pattern),
            ("b(B)", b_pattern),
            ("c(C)", c_companion),
        ],
        value: c_pattern + b_pattern * c_companion,
    }
}

/// c(K) >= 2c(C) + 2 when the companion is an alternating fibered knot.
pub fn alt_fibered_companion_bound(c_companion: i64) -> BoundRecord {
    BoundRecord {
        name: "alternating fibered companion bound",
        rule: "c >= 2c(C) + 2",
        inputs: vec![("c(C)", c_companion)],
        value: 2 * c_companion + 2,
    }
}

/// s_a(L) - 1 = sum of (s_a(L_i) - 1) over the parts of a planar Murasugi sum.
pub fn murasugi_sum_sa_check(total_sa: i64, part_sa: &[i64]) -> bool {
    total_sa - 1 == part_sa.iter().map(|&s| s - 1).sum::<i64>()
}

/// Alternating-link family membership from s_a versus a braid-index bracket.
/// `braid_index` is a closed interval [lo, hi]; b <= s_a always holds.
pub fn sab_criterion(s_a: i64, braid_index_lo: i64, braid_index_hi: i64) -> FamilyVerdict {
    if braid_index_lo == braid_index_hi {
        if braid_index_lo == s_a {
            FamilyVerdict::InFamily
        } else {
            FamilyVerdict::NotInFamily
        }
    } else if braid_index_hi < s_a {
        FamilyVerdict::NotInFamily
    } else if braid_index_lo >= s_a {
        FamilyVerdict::InFamily
    } else {
        FamilyVerdict::Unknown
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn genus_formula_values() {
        assert_eq!(genus_formula_bound(2, 2, 1).value, 3); // trefoil
        assert_eq!(genus_formula_bound(0, 1, 1).value, 0); // unknot
        assert_eq!(genus_formula_bound(6, 3, 1).value, 8); // 10-crossing fixture
    }

    #[test]
    fn torus_values() {
        let t32 = torus_invariants(3, 2).unwrap();
        assert_eq!(
            (t32.crossing_number, t32.braid_index, t32.components, t32.genus2),
            (3, 2, 1, 2)
        );
        let t22 = torus_invariants(2, 2).unwrap();
        assert_eq!(
            (t22.crossing_number, t22.braid_index, t22.components, t22.genus2),
            (2, 2, 2, 0)
        );
        let t54 = torus_invariants(5, 4).unwrap();
        assert_eq!(
            (t54.crossing_number, t54.braid_index, t54.components, t54.genus2),
            (15, 4, 1, 12)
        );
        assert!(torus_invariants(2, 3).is_err());
    }

    #[test]
    fn family_membership() {
        for p in 2..=8u64 {
            for q in 2..=p {
                let t = torus_invariants(p, q).unwrap();
                let (v, _) = family_check(t.crossing_number, t.genus2, t.braid_index, t.components);
                assert_eq!(v, FamilyVerdict::InFamily, "({p},{q})");
            }
        }
        // the 10-crossing counterexample: c=10 vs bound 8
        let (v, rec) = family_check(10, 6, 3, 1);
        assert_eq!(rec.value, 8);
        assert_eq!(v, FamilyVerdict::NotInFamily);
        let (v, _) = family_check(0, 0, 1, 1);
        assert_eq!(v, FamilyVerdict::InFamily);
    }

    #[test]
    fn composite_values() {
        assert_eq!(composite_bound(&[(2, 2, 1), (2, 2, 1)]).unwrap().value, 6);
        assert_eq!(composite_bound(&[(0, 1, 1)]).unwrap().value, 0);
        assert_eq!(composite_bound(&[(2, 2, 1), (2, 3, 1)]).unwrap().value, 7);
        assert!(composite_bound(&[]).is_err());
        assert_eq!(composite_braid_index(&[2, 2]).unwrap().value, 3);
        assert_eq!(composite_braid_index(&[4]).unwrap().value, 4);
        assert_eq!(composite_braid_index(&[2, 2, 2]).unwrap().value, 4);
    }

    #[test]
    fn degree_bounds() {
        let trefoil = DegreeSummary {
            v_min: 2,
            v_max: 4,
            z_min: 0,
            z_max: 2,
        };
        assert_eq!(mwf_bound(&trefoil).unwrap().value, 2);
        assert_eq!(homfly_crossing_bound(&trefoil).unwrap().value, 3);
        assert_eq!(morton_genus_bound(&trefoil).value, 2);
        let unknot = DegreeSummary {
            v_min: 0,
            v_max: 0,
            z_min: 0,
            z_max: 0,
        };
        assert_eq!(mwf_bound(&unknot).unwrap().value, 1);
        assert_eq!(homfly_crossing_bound(&unknot).unwrap().value, 0);
        let odd = DegreeSummary {
            v_min: 0,
            v_max: 1,
            z_min: 0,
            z_max: 0,
        };
        assert!(mwf_bound(&odd).is_err());
    }

    #[test]
    fn small_calculators() {
        assert_eq!(ohyama_bound(2).value, 2);
        assert_eq!(ohyama_bound(3).value, 4);
        assert_eq!(kidwell_bound(2).value, 3);
        assert_eq!(kidwell_bound(3).value, 4);
        assert_eq!(arc_index_bound_mod2(3).value, 5);
        assert_eq!(arc_index_bound_mod2(4).value, 6);
    }

    #[test]
    fn cable_values() {
        assert_eq!(cable_genus(2, 3, 2).unwrap().value, 6);
        assert_eq!(cable_genus(3, 4, 2).unwrap().value, 12);
        assert_eq!(cable_genus(1, 7, 2).unwrap().value, 2);
        assert_eq!(cable_crossing_bound(2, 3, 3).unwrap().value, 9);
        assert_eq!(cable_crossing_bound(2, 5, 3).unwrap().value, 11);
        assert_eq!(cable_crossing_bound(1, 9, 4).unwrap().value, 4);
        assert!(cable_genus(2, 4, 2).is_err());
    }

    #[test]
    fn satellite_values() {
        let inputs = SatelliteInputs {
            w0: Some(2),
            w1: Some(1),
            genus2_companion: Some(2),
            braid_index_companion: Some(2),
            genus_pattern: Some(0),
            arc_index_companion: Some(5),
        };
        assert_eq!(satellite_bound(PatternType::Type0, &inputs).unwrap().value, 8);
        assert_eq!(satellite_bound(PatternType::Type1, &inputs).unwrap().value, 9);
        assert_eq!(satellite_bound(PatternType::Other, &inputs).unwrap().value, 8);
        assert!(satellite_bound(PatternType::Type0, &SatelliteInputs::default()).is_err());
        assert_eq!(satellite_alt_braid_bound(3, 2, 3).value, 9);
        assert_eq!(satellite_alt_braid_bound(0, 1, 6).value, 6);
        assert_eq!(satellite_alt_braid_bound(4, 3, 3).value, 13);
        assert_eq!(alt_fibered_companion_bound(3).value, 8);
        assert_eq!(alt_fibered_companion_bound(4).value, 10);
        assert_eq!(alt_fibered_companion_bound(7).value, 16);
    }

    #[test]
    fn murasugi_and_sab() {
        assert!(murasugi_sum_sa_check(3, &[2, 2]));
        assert!(murasugi_sum_sa_check(2, &[2]));
        assert!(!murasugi_sum_sa_check(4, &[2, 2]));
        assert_eq!(sab_criterion(2, 2, 2), FamilyVerdict::InFamily);
        assert_eq!(sab_criterion(4, 3, 3), FamilyVerdict::NotInFamily);
        assert_eq!(sab_criterion(3, 2, 3), FamilyVerdict::Unknown);
    }
}
