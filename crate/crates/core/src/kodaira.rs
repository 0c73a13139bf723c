//! Kodaira classification of singular fibers from valuation profiles, and
//! whole-surface validation of a Weierstrass model as a rational elliptic
//! surface with section and reduced fibers.

use crate::error::Error;
use crate::places::{place_profiles, Place, Valuation, ValuationProfile};
use crate::qpoly::{discriminant, RatPoly};
use std::fmt;

/// Label of a non-reduced (starred) fiber type.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum StarLabel {
    /// I_m* (m = 0 for the split four-component case).
    IStar(u32),
    IVStar,
    IIIStar,
    IIStar,
}

impl fmt::Display for StarLabel {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            StarLabel::IStar(m) => write!(out, "I{m}*"),
            StarLabel::IVStar => write!(out, "IV*"),
            StarLabel::IIIStar => write!(out, "III*"),
            StarLabel::IIStar => write!(out, "II*"),
        }
    }
}

/// A singular fiber type. Smooth fibers are never represented — absence of
/// an entry means smooth.
///
/// Reduced types carry component and Euler numbers; non-reduced types carry
/// neither and poison every downstream computation.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum KodairaFiber {
    /// Cycle of n rational curves (nodal cubic for n = 1).
    I(u32),
    /// Cuspidal cubic.
    II,
    /// Two rational curves meeting at a tangency.
    III,
    /// Three concurrent rational curves.
    IV,
    /// A starred type; rejected wherever reduced fibers are required.
    NonReduced(StarLabel),
}

impl KodairaFiber {
    /// Number of irreducible components (b); `None` for non-reduced types.
    pub fn components(&self) -> Option<u32> {
        match self {
            KodairaFiber::I(n) => Some(*n),
            KodairaFiber::II => Some(1),
            KodairaFiber::III => Some(2),
            KodairaFiber::IV => Some(3),
            KodairaFiber::NonReduced(_) => None,
        }
    }

    /// Euler number (χF); `None` for non-reduced types.
    ///
    /// The value 2 for type II is forced by Σ degree·χF = 12 and the local
    /// picture of a cuspidal cubic.
    pub fn euler(&self) -> Option<u32> {
        match self {
            KodairaFiber::I(n) => Some(*n),
            KodairaFiber::II => Some(2),
            KodairaFiber::III => Some(3),
            KodairaFiber::IV => Some(4),
            KodairaFiber::NonReduced(_) => None,
        }
    }

    pub fn is_reduced(&self) -> bool {
        !matches!(self, KodairaFiber::NonReduced(_))
    }

    /// Multiplicative reduction (type I_n)?
    pub fn is_multiplicative(&self) -> bool {
        matches!(self, KodairaFiber::I(_))
    }
}

impl fmt::Display for KodairaFiber {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            KodairaFiber::I(n) => write!(out, "I{n}"),
            KodairaFiber::II => write!(out, "II"),
            KodairaFiber::III => write!(out, "III"),
            KodairaFiber::IV => write!(out, "IV"),
            KodairaFiber::NonReduced(label) => write!(out, "{label}"),
        }
    }
}

/// Classify the fiber over a place from the vanishing orders of f, g, Δ.
///
/// The triple must be one a Weierstrass model can produce: the order of
/// Δ = f³ − 27g² equals min(3·v_f, 2·v_g) unless the leading terms cancel,
/// which requires 3·v_f = 2·v_g. Other triples are rejected as invalid,
/// non-minimal ones (v_f ≥ 4 and v_g ≥ 6) as requiring a minimal model.
pub fn classify_fiber(
    v_f: Valuation,
    v_g: Valuation,
    v_delta: u32,
) -> Result<KodairaFiber, Error> {
    let invalid = || Error::InvalidProfile {
        v_f: v_f.to_string(),
        v_g: v_g.to_string(),
        v_delta,
    };
    // f ≡ 0 and g ≡ 0 together force Δ ≡ 0: no elliptic surface at all.
    if v_f == Valuation::Infinite && v_g == Valuation::Infinite {
        return Err(invalid());
    }
    if v_f.is_at_least(4) && v_g.is_at_least(6) {
        return Err(Error::RequiresMinimalModel { place: "the given place".into() });
    }
    if v_delta == 0 {
        return Err(invalid());
    }
    let realizable = match (v_f.finite(), v_g.finite()) {
        (None, Some(vg)) => v_delta == 2 * vg,
        (Some(vf), None) => v_delta == 3 * vf,
        (Some(vf), Some(vg)) => {
            if 3 * vf == 2 * vg {
                v_delta >= 3 * vf
            } else {
                v_delta == (3 * vf).min(2 * vg)
            }
        }
        (None, None) => unreachable!(),
    };
    if !realizable {
        return Err(invalid());
    }

    if v_f.is_exactly(0) {
        return Ok(KodairaFiber::I(v_delta));
    }
    let fiber = if v_g.is_exactly(1) {
        KodairaFiber::II
    } else if v_f.is_exactly(1) {
        KodairaFiber::III
    } else if v_g.is_exactly(2) {
        KodairaFiber::IV
    } else if v_f.is_exactly(2) {
        // On the cancellation line (2, 3) the discriminant order can exceed
        // 6; each extra order adds one component pair.
        KodairaFiber::NonReduced(StarLabel::IStar(v_delta - 6))
    } else if v_g.is_exactly(3) {
        KodairaFiber::NonReduced(StarLabel::IStar(0))
    } else if v_g.is_exactly(4) {
        KodairaFiber::NonReduced(StarLabel::IVStar)
    } else if v_f.is_exactly(3) {
        KodairaFiber::NonReduced(StarLabel::IIIStar)
    } else if v_g.is_exactly(5) {
        KodairaFiber::NonReduced(StarLabel::IIStar)
    } else {
        unreachable!("non-minimal profiles are screened above")
    };
    Ok(fiber)
}

/// A validated Weierstrass model: y² = x³ + f(t)x + g(t) with
/// deg f ≤ 4, deg g ≤ 6, Δ ≠ 0, and its singular-place profiles.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SurfaceModel {
    pub f: RatPoly,
    pub g: RatPoly,
    pub delta: RatPoly,
    pub profiles: Vec<ValuationProfile>,
}

/// Classified singular fibers, in canonical place order (parallel to
/// `SurfaceModel::profiles`).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FiberTable {
    pub entries: Vec<(Place, KodairaFiber)>,
}

impl FiberTable {
    /// Σ degree·χF over all entries; `None` if any entry is non-reduced.
    pub fn total_euler(&self) -> Option<u32> {
        self.entries
            .iter()
            .map(|(place, fiber)| fiber.euler().map(|chi| place.degree() * chi))
            .sum()
    }

    pub fn all_reduced(&self) -> bool {
        self.entries.iter().all(|(_, fiber)| fiber.is_reduced())
    }

    /// All fibers multiplicative (type I_n)?
    pub fn semistable(&self) -> bool {
        self.entries.iter().all(|(_, fiber)| fiber.is_multiplicative())
    }
}

/// Options for `analyze_surface`.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub struct AnalyzeOptions {
    /// Twist away non-minimal finite places (divide f by p⁴ and g by p⁶)
    /// instead of rejecting them, then re-validate.
    pub minimalize: bool,
    /// Keep non-reduced fibers in the table instead of erroring, for
    /// reporting only; downstream computations still reject them.
    pub report_nonreduced: bool,
}

/// A validated surface together with its classified fiber table and the
/// places that were twisted away during minimalization.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SurfaceAnalysis {
    pub model: SurfaceModel,
    pub fibers: FiberTable,
    pub twisted_places: Vec<Place>,
}

/// Validate a Weierstrass model and classify every singular fiber.
///
/// Rejects degree overflows, identically vanishing discriminants,
/// non-minimal places (unless `minimalize`, which can only help at finite
/// places — within degrees (4, 6) the twist always re-surfaces at infinity,
/// where no minimal model with these degrees exists), and non-reduced
/// fibers (unless `report_nonreduced`).
pub fn analyze_surface(
    f: &RatPoly,
    g: &RatPoly,
    options: AnalyzeOptions,
) -> Result<SurfaceAnalysis, Error> {
    let mut f = f.clone();
    let mut g = g.clone();
    let mut twisted_places = Vec::new();
    let profiles = loop {
        let profiles = place_profiles(&f, &g)?;
        let offending = profiles
            .iter()
            .find(|p| p.v_f.is_at_least(4) && p.v_g.is_at_least(6));
        match offending {
            None => break profiles,
            Some(profile) => {
                let place = profile.place.clone();
                if !options.minimalize {
                    return Err(Error::RequiresMinimalModel { place: place.to_string() });
                }
                let Place::Finite(poly) = &place else {
                    // Degrees (4, 6) leave no room to absorb a twist at ∞.
                    return Err(Error::RequiresMinimalModel { place: place.to_string() });
                };
                if !f.is_zero() {
                    f = f.div_exact(&poly.pow(4));
                }
                if !g.is_zero() {
                    g = g.div_exact(&poly.pow(6));
                }
                twisted_places.push(place);
            }
        }
    };

    let mut entries = Vec::with_capacity(profiles.len());
    let mut nonreduced_places = Vec::new();
    for profile in &profiles {
        let fiber = classify_fiber(profile.v_f, profile.v_g, profile.v_delta).map_err(|e| {
            // Re-anchor the minimality error to the concrete place.
            if matches!(e, Error::RequiresMinimalModel { .. }) {
                Error::RequiresMinimalModel { place: profile.place.to_string() }
            } else {
                e
            }
        })?;
        if !fiber.is_reduced() {
            nonreduced_places.push(profile.place.to_string());
        }
        entries.push((profile.place.clone(), fiber));
    }
    if !nonreduced_places.is_empty() && !options.report_nonreduced {
        return Err(Error::NonReducedFiber { places: nonreduced_places });
    }

    let fibers = FiberTable { entries };
    if fibers.all_reduced() {
        assert_eq!(
            fibers.total_euler(),
            Some(12),
            "reduced fiber table must have total Euler number 12"
        );
    }
    let delta = discriminant(&f, &g);
    Ok(SurfaceAnalysis {
        model: SurfaceModel { f, g, delta, profiles },
        fibers,
        twisted_places,
    })
}
