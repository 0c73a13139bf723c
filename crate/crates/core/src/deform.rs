//! Deformations of the fiber product inside its natural parameter space.
//!
//! The pair of Weierstrass models lives in the 24-dimensional space of
//! coefficient vectors (deg f ≤ 4, deg g ≤ 6 on both sides, modulo
//! nothing). Keeping a common singular place of type (F, F′) imposes
//! deg·(b + b′ − 1) conditions; an isogeny between the generic fibers
//! removes one. Base Möbius transformations (3) and the two Weierstrass
//! rescalings (2) act on the family, so 5 dimensions are quotiented away.

use crate::config::{Configuration, PairEntry};
use crate::error::Error;
use crate::hodge::hodge_numbers;
use crate::kodaira::KodairaFiber;
use crate::product::classify_entry;

/// Dimension count of the deformations preserving the configuration.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DeformReport {
    /// Coefficients of (f₁, g₁, f₂, g₂): 5 + 7 + 5 + 7.
    pub ambient_dim: i64,
    /// Σ deg·(b₁ + b₂ − 1) over common places, minus d.
    pub conditions: i64,
    /// Dimension of the family keeping the configuration: ambient − conditions.
    pub family_dim: i64,
    /// Möbius transformations of the base (3) plus the two rescalings (2).
    pub quotient_dim: i64,
    /// family − quotient: moduli of the configuration.
    pub deformation_dim: i64,
    pub warnings: Vec<String>,
}

/// Count deformation dimensions and check them against h¹².
///
/// Cusp pairs (II×II) and tangency pairs (III×III) fall outside the
/// condition count — their collisions are not transverse — and error as
/// [`Error::UnsupportedPair`].
pub fn deformation_invariants(config: &Configuration) -> Result<DeformReport, Error> {
    screen_supported(config)?;
    let hodge = hodge_numbers(config)?;

    let conditions: i64 = config
        .common_entries()
        .map(|e| i64::from(e.degree) * (i64::from(e.b1()) + i64::from(e.b2()) - 1))
        .sum::<i64>()
        - config.d();
    let ambient_dim = 24;
    let family_dim = ambient_dim - conditions;
    let quotient_dim = 5;
    let deformation_dim = family_dim - quotient_dim;
    assert_eq!(
        deformation_dim, hodge.h12,
        "the condition count must reproduce h12 on supported configurations"
    );

    let mut warnings = Vec::new();
    for (index, entry) in config.entries().iter().enumerate() {
        if entry.is_common() && entry.degree >= 2 {
            warnings.push(format!(
                "the degree-{} orbit at {} is counted as one condition block; \
                 deformations moving its points independently break the field of \
                 definition and are not parameterized here",
                entry.degree,
                entry.label(index)
            ));
        }
    }

    Ok(DeformReport {
        ambient_dim,
        conditions,
        family_dim,
        quotient_dim,
        deformation_dim,
        warnings,
    })
}

fn screen_supported(config: &Configuration) -> Result<(), Error> {
    for (index, entry) in config.entries().iter().enumerate() {
        let pair = (entry.fiber1, entry.fiber2);
        let unsupported = matches!(
            pair,
            (Some(KodairaFiber::II), Some(KodairaFiber::II))
                | (Some(KodairaFiber::III), Some(KodairaFiber::III))
        );
        if unsupported {
            return Err(Error::UnsupportedPair {
                place: entry.label(index),
                pair: classify_entry(entry).pair_label(),
            });
        }
    }
    Ok(())
}

/// Deform the configuration to its generic arrangement with the same
/// invariants: tangencies and triple points split off transverse nodal
/// collisions, one-sided fibers decay into separate nodal fibers.
///
/// Concretely, a common III×I_n becomes I₂×I_n plus a one-sided I₁, a
/// common IV×I_n becomes I₃×I_n plus a one-sided I₁, multiplicative pairs
/// and one-sided cusps stay, and every other one-sided fiber F splits into
/// χF one-sided I₁'s. The result is abstract (no places) and the map is
/// idempotent; h¹¹, h¹², and both Euler characteristics are preserved.
pub fn generic_split(config: &Configuration) -> Result<Configuration, Error> {
    screen_supported(config)?;
    // Pairs without small resolutions have no invariants to preserve.
    let (resolvable, obstructions) = crate::product::small_resolution_exists(config);
    if !resolvable {
        return Err(Error::NoSmallResolution { obstructions });
    }

    let mut common = Coalesced::default();
    let mut only1 = Coalesced::default();
    let mut only2 = Coalesced::default();
    for entry in config.entries() {
        let degree = entry.degree;
        match (entry.fiber1, entry.fiber2) {
            (Some(first), Some(second)) => match (first, second) {
                (KodairaFiber::I(_), KodairaFiber::I(_)) => {
                    common.add(degree, Some(first), Some(second));
                }
                (KodairaFiber::III, KodairaFiber::I(n)) => {
                    common.add(degree, Some(KodairaFiber::I(2)), Some(KodairaFiber::I(n)));
                    only1.add(degree, Some(KodairaFiber::I(1)), None);
                }
                (KodairaFiber::I(n), KodairaFiber::III) => {
                    common.add(degree, Some(KodairaFiber::I(n)), Some(KodairaFiber::I(2)));
                    only2.add(degree, None, Some(KodairaFiber::I(1)));
                }
                (KodairaFiber::IV, KodairaFiber::I(n)) => {
                    common.add(degree, Some(KodairaFiber::I(3)), Some(KodairaFiber::I(n)));
                    only1.add(degree, Some(KodairaFiber::I(1)), None);
                }
                (KodairaFiber::I(n), KodairaFiber::IV) => {
                    common.add(degree, Some(KodairaFiber::I(n)), Some(KodairaFiber::I(3)));
                    only2.add(degree, None, Some(KodairaFiber::I(1)));
                }
                _ => unreachable!("pairs without small resolutions are screened above"),
            },
            (Some(fiber), None) => match split_one_sided(fiber) {
                Some((split, count)) => only1.add(degree * count, Some(split), None),
                None => only1.add(degree, Some(fiber), None),
            },
            (None, Some(fiber)) => match split_one_sided(fiber) {
                Some((split, count)) => only2.add(degree * count, None, Some(split)),
                None => only2.add(degree, None, Some(fiber)),
            },
            (None, None) => unreachable!("validated configurations have no empty entries"),
        }
    }

    let mut entries = common.entries;
    entries.extend(only1.entries);
    entries.extend(only2.entries);
    Configuration::new(entries, config.isogenous())
}

/// A one-sided fiber's generic decay: `Some((I₁, χF))` when it splits.
fn split_one_sided(fiber: KodairaFiber) -> Option<(KodairaFiber, u32)> {
    match fiber {
        KodairaFiber::I(1) | KodairaFiber::II => None,
        other => Some((
            KodairaFiber::I(1),
            other.euler().expect("reduced fibers have Euler numbers"),
        )),
    }
}

/// Entry list that merges repeats of the same abstract fiber pair.
#[derive(Default)]
struct Coalesced {
    entries: Vec<PairEntry>,
}

impl Coalesced {
    fn add(&mut self, degree: u32, fiber1: Option<KodairaFiber>, fiber2: Option<KodairaFiber>) {
        if let Some(existing) = self
            .entries
            .iter_mut()
            .find(|e| e.fiber1 == fiber1 && e.fiber2 == fiber2)
        {
            existing.degree += degree;
            return;
        }
        self.entries.push(PairEntry { place: None, degree, fiber1, fiber2 });
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::product::{ProductConfig, ProductOptions};
    use crate::qpoly::RatPoly;
    use crate::rational::rat_i64;

    fn poly(coeffs: &[i64]) -> RatPoly {
        RatPoly::from_integers(coeffs)
    }

    fn entry(
        degree: u32,
        fiber1: Option<KodairaFiber>,
        fiber2: Option<KodairaFiber>,
    ) -> PairEntry {
        PairEntry { place: None, degree, fiber1, fiber2 }
    }

    fn worked_pair() -> Configuration {
        let f1 = poly(&[1, 0, -1, 0, 1]).scale(&rat_i64(12));
        let g1 = poly(&[2, 0, -3, 0, -3, 0, 2]).scale(&rat_i64(4));
        let base = &poly(&[-3, 1]).pow(2) * &poly(&[-1, 1]).pow(2);
        let f2 = base.scale(&rat_i64(3));
        let g2 = &base * &poly(&[5, -4, 1]);
        ProductConfig::build(&f1, &g1, &f2, &g2, ProductOptions::default())
            .unwrap()
            .configuration()
    }

    #[test]
    fn worked_pair_dimension_count() {
        let report = deformation_invariants(&worked_pair()).unwrap();
        assert_eq!(report.ambient_dim, 24);
        assert_eq!(report.conditions, 9);
        assert_eq!(report.family_dim, 15);
        assert_eq!(report.deformation_dim, 10);
        assert!(report.warnings.is_empty());
    }

    #[test]
    fn isogenous_configurations_gain_a_dimension() {
        let generic = Configuration::new(
            vec![entry(12, Some(KodairaFiber::I(1)), Some(KodairaFiber::I(1)))],
            true,
        )
        .unwrap();
        let report = deformation_invariants(&generic).unwrap();
        assert_eq!(report.conditions, 11);
        assert_eq!(report.family_dim, 13);
        assert_eq!(report.deformation_dim, 8);

        // Same arrangement without the isogeny: one fewer modulus.
        let plain = Configuration::new(
            vec![entry(12, Some(KodairaFiber::I(1)), Some(KodairaFiber::I(1)))],
            false,
        )
        .unwrap();
        assert_eq!(deformation_invariants(&plain).unwrap().deformation_dim, 7);
    }

    #[test]
    fn orbit_places_carry_a_warning() {
        let f = poly(&[1, 0, -1, 0, 1]).scale(&rat_i64(12));
        let g = poly(&[2, 0, -3, 0, -3, 0, 2]).scale(&rat_i64(4));
        let config = ProductConfig::build(&f, &g, &f, &g, ProductOptions::default())
            .unwrap()
            .configuration();
        let report = deformation_invariants(&config).unwrap();
        assert_eq!(report.deformation_dim, 0);
        // The degree-2 orbit t²−1 meets itself in the self-product.
        assert_eq!(report.warnings.len(), 1);
        assert!(report.warnings[0].contains("t^2-1"));
    }

    #[test]
    fn cusp_and_tangency_pairs_are_rejected() {
        let cusp_pair = Configuration::new(
            vec![
                entry(1, Some(KodairaFiber::II), Some(KodairaFiber::II)),
                entry(1, Some(KodairaFiber::I(10)), None),
                entry(1, None, Some(KodairaFiber::I(10))),
            ],
            false,
        )
        .unwrap();
        assert!(matches!(
            deformation_invariants(&cusp_pair),
            Err(Error::UnsupportedPair { .. })
        ));
        assert!(matches!(generic_split(&cusp_pair), Err(Error::UnsupportedPair { .. })));
    }

    #[test]
    fn generic_split_preserves_invariants_and_is_idempotent() {
        let config = worked_pair();
        let before = hodge_numbers(&config).unwrap();
        let split = generic_split(&config).unwrap();
        let after = hodge_numbers(&split).unwrap();
        assert_eq!((before.h11, before.h12), (after.h11, after.h12));
        assert_eq!(before.chi_resolved, after.chi_resolved);

        // The IV at t−1 became I₃ against the I₂, shedding a nodal fiber.
        let pairs: Vec<(u32, Option<KodairaFiber>, Option<KodairaFiber>)> = split
            .entries()
            .iter()
            .map(|e| (e.degree, e.fiber1, e.fiber2))
            .collect();
        assert!(pairs.contains(&(1, Some(KodairaFiber::I(2)), Some(KodairaFiber::I(3)))));
        assert!(pairs.contains(&(1, Some(KodairaFiber::I(4)), Some(KodairaFiber::I(2)))));
        assert!(pairs.contains(&(6, Some(KodairaFiber::I(1)), None)));
        assert!(pairs.contains(&(7, None, Some(KodairaFiber::I(1)))));
        assert_eq!(pairs.len(), 4);

        let again = generic_split(&split).unwrap();
        assert_eq!(again, split);

        // A one-sided cusp stays a cusp, its nodal neighbors decay.
        let with_cusp = Configuration::new(
            vec![
                entry(1, Some(KodairaFiber::II), None),
                entry(2, Some(KodairaFiber::I(5)), None),
                entry(12, None, Some(KodairaFiber::I(1))),
            ],
            false,
        )
        .unwrap();
        let split = generic_split(&with_cusp).unwrap();
        let pairs: Vec<(u32, Option<KodairaFiber>, Option<KodairaFiber>)> = split
            .entries()
            .iter()
            .map(|e| (e.degree, e.fiber1, e.fiber2))
            .collect();
        assert_eq!(
            pairs,
            vec![
                (1, Some(KodairaFiber::II), None),
                (10, Some(KodairaFiber::I(1)), None),
                (12, None, Some(KodairaFiber::I(1))),
            ]
        );
    }
}
