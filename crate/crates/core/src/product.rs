//! The fiber product of two rational elliptic surfaces over the line.
//!
//! Over a place where both surfaces degenerate, the product threefold
//! acquires isolated singular points — one for each pair of singular points
//! of the two fibers. This module classifies those points, decides whether
//! they all admit small resolutions, whether any small resolution can be
//! projective, and lowers everything to the abstract
//! [`Configuration`](crate::config::Configuration) the invariant formulas
//! consume.

use crate::config::{Configuration, PairEntry};
use crate::error::Error;
use crate::kodaira::{
    analyze_surface, classify_fiber, AnalyzeOptions, KodairaFiber, SurfaceAnalysis, SurfaceModel,
};
use crate::places::{match_places, MatchedPlaces, Place, ValuationProfile};
use crate::qpoly::RatPoly;
use crate::rational::{rational_nth_root, rational_sqrt, Rational};
use std::fmt;

/// Analytic type of the singular points of the product over one place.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum SingularityKind {
    /// Ordinary double point xy = uv, one per pair of nodes.
    Node,
    /// Transverse A₂ surface singularity along the cusp direction.
    A2,
    /// A₃-type point from a node times a tangency.
    A3,
    /// D₄-type point from a node times a concurrent triple point.
    D4,
    /// The single D₄-type threefold point of a pair of cusps.
    D4Single,
    /// Compound A₃ point X² − U² = (y⁴ − v⁴)/4 of a pair of tangencies.
    CompoundA3,
    /// E₆-type point from a cusp times a tangency.
    E6,
    /// Factorial ordinary triple point from a cusp times a triple point.
    FactorialTriple,
    /// Ordinary (non-factorial) triple point from two triple points.
    SimpleTriple,
    /// Tangency times concurrent triple point; carries no small resolution.
    TangentTriple,
}

impl fmt::Display for SingularityKind {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            SingularityKind::Node => "A1",
            SingularityKind::A2 => "A2",
            SingularityKind::A3 => "A3",
            SingularityKind::D4 => "D4",
            SingularityKind::D4Single => "D4 (cusp pair)",
            SingularityKind::CompoundA3 => "cA3",
            SingularityKind::E6 => "E6",
            SingularityKind::FactorialTriple => "factorial triple point",
            SingularityKind::SimpleTriple => "ordinary triple point",
            SingularityKind::TangentTriple => "tangent triple point",
        };
        out.write_str(name)
    }
}

/// The singular points of the product over one geometric point of a place.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Singularity {
    pub kind: SingularityKind,
    /// Singular points per geometric point of the place.
    pub count: u32,
}

impl fmt::Display for Singularity {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.count == 1 {
            write!(out, "1 {} point", self.kind)
        } else {
            write!(out, "{} {} points", self.count, self.kind)
        }
    }
}

/// Classification of the product fiber over one place.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct FiberPairClass {
    pub fiber1: Option<KodairaFiber>,
    pub fiber2: Option<KodairaFiber>,
    /// `None` when one factor is smooth over the place.
    pub singularity: Option<Singularity>,
    /// Do the singular points over this place admit small resolutions?
    pub small_resolution: bool,
    /// Does this pair force every small resolution to be non-projective?
    pub projective_obstruction: bool,
    /// Euler number of the exceptional locus of a small resolution, per
    /// singular point; absent when no small resolution exists (and for
    /// smooth pairs, where there is nothing to resolve).
    pub chi_e: Option<u32>,
}

impl FiberPairClass {
    /// "I2 x IV" / "I4 x smooth" — fibers in surface order.
    pub fn pair_label(&self) -> String {
        let side = |fiber: &Option<KodairaFiber>| match fiber {
            Some(fiber) => fiber.to_string(),
            None => "smooth".to_string(),
        };
        format!("{} x {}", side(&self.fiber1), side(&self.fiber2))
    }
}

/// Classify the product singularities over a place carrying the two given
/// fibers (`None` = smooth). Requires reduced fibers, `I(n)` with n ≥ 1,
/// and at least one singular side.
pub fn pair_singularity(
    fiber1: Option<KodairaFiber>,
    fiber2: Option<KodairaFiber>,
) -> Result<FiberPairClass, Error> {
    for fiber in [&fiber1, &fiber2].into_iter().flatten() {
        if !fiber.is_reduced() {
            return Err(Error::InvalidConfiguration(format!(
                "non-reduced fiber {fiber} in a product pair"
            )));
        }
        if *fiber == KodairaFiber::I(0) {
            return Err(Error::InvalidConfiguration(
                "type I0 denotes a smooth fiber; leave the slot empty instead".into(),
            ));
        }
    }
    let (Some(first), Some(second)) = (fiber1, fiber2) else {
        if fiber1.is_none() && fiber2.is_none() {
            return Err(Error::InvalidConfiguration(
                "product pair with both fibers smooth".into(),
            ));
        }
        // One factor smooth: the product is a smooth fibration over this
        // place and nothing obstructs either resolution or projectivity.
        return Ok(FiberPairClass {
            fiber1,
            fiber2,
            singularity: None,
            small_resolution: true,
            projective_obstruction: false,
            chi_e: None,
        });
    };

    use KodairaFiber::{I, II, III, IV};
    use SingularityKind::*;
    let (kind, count, small_resolution, chi_e) = match (first, second) {
        (I(n), I(m)) => (Node, n * m, true, Some(2)),
        (I(n), II) | (II, I(n)) => (A2, n, false, None),
        (I(n), III) | (III, I(n)) => (A3, n, true, Some(2)),
        (I(n), IV) | (IV, I(n)) => (D4, n, true, Some(3)),
        (II, II) => (D4Single, 1, true, Some(3)),
        (II, III) | (III, II) => (E6, 1, false, None),
        (II, IV) | (IV, II) => (FactorialTriple, 1, false, None),
        (III, III) => (CompoundA3, 1, true, Some(4)),
        (III, IV) | (IV, III) => (TangentTriple, 1, false, None),
        (IV, IV) => (SimpleTriple, 1, false, None),
        (KodairaFiber::NonReduced(_), _) | (_, KodairaFiber::NonReduced(_)) => {
            unreachable!("non-reduced fibers are rejected above")
        }
    };
    // II×II and III×III force non-projective small resolutions outright;
    // an I₁ factor next to any singular fiber does the same.
    let projective_obstruction = matches!((first, second), (II, II) | (III, III))
        || first == I(1)
        || second == I(1);
    Ok(FiberPairClass {
        fiber1,
        fiber2,
        singularity: Some(Singularity { kind, count }),
        small_resolution,
        projective_obstruction,
        chi_e,
    })
}

/// Classify one configuration entry; infallible on a validated
/// [`Configuration`].
pub(crate) fn classify_entry(entry: &PairEntry) -> FiberPairClass {
    pair_singularity(entry.fiber1, entry.fiber2)
        .expect("validated configurations contain only classifiable pairs")
}

fn obstruction_list(
    config: &Configuration,
    blocked: impl Fn(&FiberPairClass) -> bool,
) -> Vec<String> {
    config
        .entries()
        .iter()
        .enumerate()
        .filter_map(|(index, entry)| {
            let class = classify_entry(entry);
            blocked(&class)
                .then(|| format!("{} at {}", class.pair_label(), entry.label(index)))
        })
        .collect()
}

/// Does the product admit a small resolution of all its singular points?
/// Returns the verdict together with the list of blocking pairs.
pub fn small_resolution_exists(config: &Configuration) -> (bool, Vec<String>) {
    let obstructions = obstruction_list(config, |class| !class.small_resolution);
    (obstructions.is_empty(), obstructions)
}

/// The pairs that force every small resolution to be non-projective.
pub fn projective_obstructions(config: &Configuration) -> Vec<String> {
    obstruction_list(config, |class| class.projective_obstruction)
}

/// Does some small resolution of the product carry an ample class?
/// Requires a small resolution to exist in the first place.
pub fn is_projective(config: &Configuration) -> Result<bool, Error> {
    let (exists, obstructions) = small_resolution_exists(config);
    if !exists {
        return Err(Error::NoSmallResolution { obstructions });
    }
    Ok(projective_obstructions(config).is_empty())
}

/// Detect (f₁, g₁) = (λ⁴f₂, λ⁶g₂) for a rational λ ≠ 0: the two generic
/// fibers are then isomorphic and the product carries the extra correction
/// term d = 1.
pub fn twist_equivalent(model1: &SurfaceModel, model2: &SurfaceModel) -> bool {
    match (
        proportionality(&model1.f, &model2.f),
        proportionality(&model1.g, &model2.g),
    ) {
        // g ≡ 0 on both: the ratio of f must be a fourth power λ⁴.
        (Some(Some(c)), Some(None)) => rational_nth_root(&c, 4).is_some(),
        // f ≡ 0 on both: the ratio of g must be a sixth power λ⁶.
        (Some(None), Some(Some(d))) => rational_nth_root(&d, 6).is_some(),
        // General case: f₁ = c·f₂ and g₁ = d·g₂ come from one λ exactly
        // when λ² = d/c is a rational square and (d/c)² = c.
        (Some(Some(c)), Some(Some(d))) => {
            let lambda_sq = &d / &c;
            &lambda_sq * &lambda_sq == c && rational_sqrt(&lambda_sq).is_some()
        }
        // f ≡ g ≡ 0 never validates (Δ ≡ 0), and disproportionate or
        // mixed-vanishing coefficients admit no twist.
        _ => false,
    }
}

/// `Some(Some(r))` when p = r·q with r ≠ 0; `Some(None)` when both vanish;
/// `None` when not proportional.
fn proportionality(p: &RatPoly, q: &RatPoly) -> Option<Option<Rational>> {
    match (p.is_zero(), q.is_zero()) {
        (true, true) => Some(None),
        (true, false) | (false, true) => None,
        (false, false) => {
            if p.degree() != q.degree() {
                return None;
            }
            let (Some(lead_p), Some(lead_q)) = (p.leading_coefficient(), q.leading_coefficient())
            else {
                return None;
            };
            let ratio = lead_p / lead_q;
            (p == &q.scale(&ratio)).then_some(Some(ratio))
        }
    }
}

/// Options for building a product from two Weierstrass models.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub struct ProductOptions {
    pub analyze: AnalyzeOptions,
    /// Force the isogeny flag; `None` auto-detects the λ-twist case.
    pub isogenous: Option<bool>,
}

/// Two analyzed surfaces with aligned places and every product fiber
/// classified.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ProductConfig {
    pub surface1: SurfaceAnalysis,
    pub surface2: SurfaceAnalysis,
    pub matched: MatchedPlaces,
    /// All singular places of the product in canonical order.
    pub pairs: Vec<(Place, FiberPairClass)>,
    pub isogenous: bool,
}

impl ProductConfig {
    /// Analyze both surfaces, align their singular places, and classify
    /// every fiber pair of the product.
    pub fn build(
        f1: &RatPoly,
        g1: &RatPoly,
        f2: &RatPoly,
        g2: &RatPoly,
        options: ProductOptions,
    ) -> Result<Self, Error> {
        let surface1 = analyze_surface(f1, g1, options.analyze)?;
        let surface2 = analyze_surface(f2, g2, options.analyze)?;
        for surface in [&surface1, &surface2] {
            let nonreduced: Vec<String> = surface
                .fibers
                .entries
                .iter()
                .filter(|(_, fiber)| !fiber.is_reduced())
                .map(|(place, _)| place.to_string())
                .collect();
            if !nonreduced.is_empty() {
                return Err(Error::NonReducedFiber { places: nonreduced });
            }
        }
        let matched = match_places(&surface1.model.profiles, &surface2.model.profiles)?;

        let classify = |profile: &ValuationProfile| {
            classify_fiber(profile.v_f, profile.v_g, profile.v_delta)
                .expect("profiles of an analyzed surface classify cleanly")
        };
        let mut pairs = Vec::new();
        for common in &matched.common {
            let class = pair_singularity(
                Some(classify(&common.profile1)),
                Some(classify(&common.profile2)),
            )?;
            pairs.push((common.place.clone(), class));
        }
        for profile in &matched.only1 {
            pairs.push((profile.place.clone(), pair_singularity(Some(classify(profile)), None)?));
        }
        for profile in &matched.only2 {
            pairs.push((profile.place.clone(), pair_singularity(None, Some(classify(profile)))?));
        }
        pairs.sort_by(|a, b| a.0.cmp(&b.0));

        let isogenous = options
            .isogenous
            .unwrap_or_else(|| twist_equivalent(&surface1.model, &surface2.model));
        Ok(ProductConfig { surface1, surface2, matched, pairs, isogenous })
    }

    /// Lower to the abstract configuration the invariant formulas consume.
    pub fn configuration(&self) -> Configuration {
        let entries = self
            .pairs
            .iter()
            .map(|(place, class)| PairEntry {
                place: Some(place.clone()),
                degree: place.degree(),
                fiber1: class.fiber1,
                fiber2: class.fiber2,
            })
            .collect();
        Configuration::new(entries, self.isogenous)
            .expect("an analyzed product always lowers to a valid configuration")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat_i64;

    fn poly(coeffs: &[i64]) -> RatPoly {
        RatPoly::from_integers(coeffs)
    }

    fn class(
        fiber1: Option<KodairaFiber>,
        fiber2: Option<KodairaFiber>,
    ) -> FiberPairClass {
        pair_singularity(fiber1, fiber2).unwrap()
    }

    #[test]
    fn the_pair_table() {
        use KodairaFiber::{I, II, III, IV};
        use SingularityKind::*;
        // (fibers, kind, count, small resolution, χ_E, projectivity blocked)
        let rows: &[(KodairaFiber, KodairaFiber, SingularityKind, u32, bool, Option<u32>, bool)] = &[
            (I(2), I(3), Node, 6, true, Some(2), false),
            (I(1), I(1), Node, 1, true, Some(2), true),
            (I(2), II, A2, 2, false, None, false),
            (I(2), III, A3, 2, true, Some(2), false),
            (I(1), III, A3, 1, true, Some(2), true),
            (I(2), IV, D4, 2, true, Some(3), false),
            (II, II, D4Single, 1, true, Some(3), true),
            (II, III, E6, 1, false, None, false),
            (II, IV, FactorialTriple, 1, false, None, false),
            (III, III, CompoundA3, 1, true, Some(4), true),
            (III, IV, TangentTriple, 1, false, None, false),
            (IV, IV, SimpleTriple, 1, false, None, false),
        ];
        for &(f1, f2, kind, count, small, chi_e, blocked) in rows {
            for (a, b) in [(f1, f2), (f2, f1)] {
                let got = class(Some(a), Some(b));
                assert_eq!(got.singularity, Some(Singularity { kind, count }), "{a} x {b}");
                assert_eq!(got.small_resolution, small, "{a} x {b}");
                assert_eq!(got.chi_e, chi_e, "{a} x {b}");
                assert_eq!(got.projective_obstruction, blocked, "{a} x {b}");
            }
        }
    }

    #[test]
    fn smooth_factors_and_bad_inputs() {
        let one_sided = class(Some(KodairaFiber::IV), None);
        assert_eq!(one_sided.singularity, None);
        assert!(one_sided.small_resolution);
        assert!(!one_sided.projective_obstruction);
        assert_eq!(one_sided.chi_e, None);
        assert_eq!(one_sided.pair_label(), "IV x smooth");

        assert!(pair_singularity(None, None).is_err());
        assert!(pair_singularity(Some(KodairaFiber::I(0)), Some(KodairaFiber::II)).is_err());
        let starred = KodairaFiber::NonReduced(crate::kodaira::StarLabel::IVStar);
        assert!(pair_singularity(Some(starred), Some(KodairaFiber::I(1))).is_err());
    }

    /// χ_E is absent exactly when there is nothing to resolve or no small
    /// resolution; present values are ≥ 2.
    #[test]
    fn chi_e_accompanies_small_resolutions() {
        use KodairaFiber::{I, II, III, IV};
        let fibers = [None, Some(I(1)), Some(I(2)), Some(II), Some(III), Some(IV)];
        for &a in &fibers {
            for &b in &fibers {
                let Ok(got) = pair_singularity(a, b) else { continue };
                match got.chi_e {
                    Some(chi) => {
                        assert!(got.small_resolution && got.singularity.is_some());
                        assert!(chi >= 2);
                    }
                    None => assert!(!got.small_resolution || got.singularity.is_none()),
                }
            }
        }
    }

    /// Dropping entries can only shrink the set of blocking pairs, so the
    /// small-resolution verdict is monotone under removal.
    #[test]
    fn small_resolution_verdict_is_monotone() {
        use KodairaFiber::{I, II, III, IV};
        let pool: &[(Option<KodairaFiber>, Option<KodairaFiber>)] = &[
            (Some(I(2)), Some(I(3))),
            (Some(II), Some(III)),
            (Some(IV), Some(IV)),
            (Some(I(4)), None),
            (Some(II), Some(II)),
        ];
        let blocking = |subset: &[usize]| -> Vec<usize> {
            subset
                .iter()
                .copied()
                .filter(|&i| !class(pool[i].0, pool[i].1).small_resolution)
                .collect()
        };
        let full: Vec<usize> = (0..pool.len()).collect();
        let full_blocking = blocking(&full);
        for mask in 0u32..(1 << pool.len()) {
            let subset: Vec<usize> =
                (0..pool.len()).filter(|i| mask & (1 << i) != 0).collect();
            for index in blocking(&subset) {
                assert!(full_blocking.contains(&index));
            }
        }
    }

    /// The two surfaces worked throughout: multiplicative fibers at
    /// 0, ±1, ∞ against a surface with a IV orbit along (t−1)(t−3) and
    /// I₂ fibers at 2 and ∞.
    fn worked_product() -> ProductConfig {
        let f1 = poly(&[1, 0, -1, 0, 1]).scale(&rat_i64(12));
        let g1 = poly(&[2, 0, -3, 0, -3, 0, 2]).scale(&rat_i64(4));
        let base = &poly(&[-3, 1]).pow(2) * &poly(&[-1, 1]).pow(2);
        let f2 = base.scale(&rat_i64(3));
        let g2 = &base * &poly(&[5, -4, 1]);
        ProductConfig::build(&f1, &g1, &f2, &g2, ProductOptions::default()).unwrap()
    }

    #[test]
    fn worked_product_pairs() {
        let product = worked_product();
        let labels: Vec<(String, String)> = product
            .pairs
            .iter()
            .map(|(place, class)| (place.to_string(), class.pair_label()))
            .collect();
        let expected = [
            ("t-3", "smooth x IV"),
            ("t-2", "smooth x I2"),
            ("t-1", "I2 x IV"),
            ("t", "I4 x smooth"),
            ("t+1", "I2 x smooth"),
            ("inf", "I4 x I2"),
        ];
        assert_eq!(labels.len(), expected.len());
        for (got, want) in labels.iter().zip(expected) {
            assert_eq!((got.0.as_str(), got.1.as_str()), want);
        }

        let config = product.configuration();
        assert!(!config.isogenous());
        let (small, obstructions) = small_resolution_exists(&config);
        assert!(small, "{obstructions:?}");
        assert!(is_projective(&config).unwrap());
        assert_eq!(config.common_entries().count(), 2);
    }

    #[test]
    fn twist_detection() {
        let f = poly(&[1, 0, -1, 0, 1]).scale(&rat_i64(12));
        let g = poly(&[2, 0, -3, 0, -3, 0, 2]).scale(&rat_i64(4));
        let identity = ProductConfig::build(&f, &g, &f, &g, ProductOptions::default()).unwrap();
        assert!(identity.isogenous);

        // λ = 2: (2⁴f, 2⁶g) is the same elliptic curve over ℚ(t).
        let f_twist = f.scale(&rat_i64(16));
        let g_twist = g.scale(&rat_i64(64));
        let twisted =
            ProductConfig::build(&f_twist, &g_twist, &f, &g, ProductOptions::default()).unwrap();
        assert!(twisted.isogenous);

        // c = 4, d = 8 satisfies d² = c³ with λ² = 2 irrational: no twist.
        let f_irr = f.scale(&rat_i64(4));
        let g_irr = g.scale(&rat_i64(8));
        let unrelated =
            ProductConfig::build(&f_irr, &g_irr, &f, &g, ProductOptions::default()).unwrap();
        assert!(!unrelated.isogenous);

        // An explicit flag overrides detection in both directions.
        let forced = ProductConfig::build(
            &f,
            &g,
            &f,
            &g,
            ProductOptions { isogenous: Some(false), ..ProductOptions::default() },
        )
        .unwrap();
        assert!(!forced.isogenous);
    }
}
