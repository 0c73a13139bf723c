//! Places of the projective line over ℚ and valuation profiles of a
//! Weierstrass model at those places.
//!
//! A place is either a monic square-free nonconstant polynomial — standing
//! for the Galois orbit of its roots — or the point at infinity. No
//! irreducible factorization is ever computed: places are carved out of
//! Yun components of the discriminant by pairwise gcds, finely enough that
//! all geometric points of one place share the same vanishing orders of
//! f, g, and Δ. Every downstream formula weights a place by its degree
//! (= number of geometric points).

use crate::error::Error;
use crate::qpoly::{
    discriminant, gcd, valuation_at_infinity, valuation_of, yun_squarefree, RatPoly,
};
use std::cmp::Ordering;
use std::fmt;

/// Vanishing order of a polynomial at a place; `Infinite` means the
/// polynomial is identically zero.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Valuation {
    Finite(u32),
    Infinite,
}

impl Valuation {
    /// Is the order at least `bound`? (`Infinite` dominates everything.)
    pub fn is_at_least(self, bound: u32) -> bool {
        match self {
            Valuation::Finite(v) => v >= bound,
            Valuation::Infinite => true,
        }
    }

    /// Exactly the finite order `value`?
    pub fn is_exactly(self, value: u32) -> bool {
        matches!(self, Valuation::Finite(v) if v == value)
    }

    pub fn finite(self) -> Option<u32> {
        match self {
            Valuation::Finite(v) => Some(v),
            Valuation::Infinite => None,
        }
    }
}

impl PartialOrd for Valuation {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Valuation {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Valuation::Finite(a), Valuation::Finite(b)) => a.cmp(b),
            (Valuation::Finite(_), Valuation::Infinite) => Ordering::Less,
            (Valuation::Infinite, Valuation::Finite(_)) => Ordering::Greater,
            (Valuation::Infinite, Valuation::Infinite) => Ordering::Equal,
        }
    }
}

impl fmt::Display for Valuation {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Valuation::Finite(v) => write!(out, "{v}"),
            Valuation::Infinite => write!(out, "inf"),
        }
    }
}

/// A closed point-class of the base line: a monic square-free nonconstant
/// polynomial (Galois orbit of its roots) or the point at infinity.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum Place {
    Finite(RatPoly),
    Infinity,
}

impl Place {
    /// Number of geometric points in the orbit.
    pub fn degree(&self) -> u32 {
        match self {
            Place::Finite(poly) => poly.degree().expect("place polynomial is nonconstant") as u32,
            Place::Infinity => 1,
        }
    }

    pub fn is_infinity(&self) -> bool {
        matches!(self, Place::Infinity)
    }
}

impl PartialOrd for Place {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Place {
    /// Deterministic order: finite places by degree, then by descending-degree
    /// coefficient comparison; infinity sorts last.
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Place::Infinity, Place::Infinity) => Ordering::Equal,
            (Place::Infinity, Place::Finite(_)) => Ordering::Greater,
            (Place::Finite(_), Place::Infinity) => Ordering::Less,
            (Place::Finite(p), Place::Finite(q)) => p
                .degree()
                .cmp(&q.degree())
                .then_with(|| {
                    let n = p.coeffs().len();
                    for i in (0..n).rev() {
                        let ord = p.coefficient(i).cmp(&q.coefficient(i));
                        if ord != Ordering::Equal {
                            return ord;
                        }
                    }
                    Ordering::Equal
                }),
        }
    }
}

impl fmt::Display for Place {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Place::Finite(poly) => write!(out, "{poly}"),
            Place::Infinity => write!(out, "inf"),
        }
    }
}

/// Vanishing orders of (f, g, Δ) at one place. Only singular places
/// (v_Δ ≥ 1) are ever stored.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ValuationProfile {
    pub place: Place,
    pub v_f: Valuation,
    pub v_g: Valuation,
    pub v_delta: u32,
}

impl ValuationProfile {
    pub fn degree(&self) -> u32 {
        self.place.degree()
    }

    /// The same profile on a sub-place (used when matching splits a place).
    fn with_place(&self, place: Place) -> ValuationProfile {
        ValuationProfile {
            place,
            v_f: self.v_f,
            v_g: self.v_g,
            v_delta: self.v_delta,
        }
    }
}

/// Compute the valuation profiles of a Weierstrass model at every singular
/// place, including infinity (orders taken against homogeneous degrees
/// 4, 6, 12 for f, g, Δ).
///
/// Yun components of Δ fix v_Δ; gcd-refinement against Yun components of f
/// and of g splits them until v_f and v_g are uniform too. Profiles come
/// back sorted in the canonical place order.
pub fn place_profiles(f: &RatPoly, g: &RatPoly) -> Result<Vec<ValuationProfile>, Error> {
    if let Some(deg) = f.degree() {
        if deg > 4 {
            return Err(Error::DegreeOverflow { which: "f", degree: deg, max: 4 });
        }
    }
    if let Some(deg) = g.degree() {
        if deg > 6 {
            return Err(Error::DegreeOverflow { which: "g", degree: deg, max: 6 });
        }
    }
    let delta = discriminant(f, g);
    if delta.is_zero() {
        return Err(Error::NotAnEllipticSurface);
    }

    // Splitters: square-free components of f and of g (nonzero inputs only).
    let mut splitters = Vec::new();
    for poly in [f, g] {
        if !poly.is_zero() {
            for (component, _) in yun_squarefree(poly)?.parts {
                splitters.push(component);
            }
        }
    }

    let mut profiles = Vec::new();
    for (component, multiplicity) in yun_squarefree(&delta)?.parts {
        for piece in refine(component, &splitters)? {
            let v_f = if f.is_zero() {
                Valuation::Infinite
            } else {
                Valuation::Finite(valuation_of(f, &piece))
            };
            let v_g = if g.is_zero() {
                Valuation::Infinite
            } else {
                Valuation::Finite(valuation_of(g, &piece))
            };
            debug_assert_eq!(valuation_of(&delta, &piece), multiplicity);
            profiles.push(ValuationProfile {
                place: Place::Finite(piece),
                v_f,
                v_g,
                v_delta: multiplicity,
            });
        }
    }

    let v_delta_inf = valuation_at_infinity(&delta, 12)?;
    if v_delta_inf >= 1 {
        let v_f = if f.is_zero() {
            Valuation::Infinite
        } else {
            Valuation::Finite(valuation_at_infinity(f, 4)?)
        };
        let v_g = if g.is_zero() {
            Valuation::Infinite
        } else {
            Valuation::Finite(valuation_at_infinity(g, 6)?)
        };
        profiles.push(ValuationProfile {
            place: Place::Infinity,
            v_f,
            v_g,
            v_delta: v_delta_inf,
        });
    }

    profiles.sort_by(|a, b| a.place.cmp(&b.place));
    let total: u32 = profiles.iter().map(|p| p.degree() * p.v_delta).sum();
    assert_eq!(total, 12, "homogenized discriminant must have degree 12");
    Ok(profiles)
}

/// Split one square-free piece against each splitter until it lies wholly
/// inside or outside every one of them.
fn refine(piece: RatPoly, splitters: &[RatPoly]) -> Result<Vec<RatPoly>, Error> {
    let mut pieces = vec![piece];
    for splitter in splitters {
        let mut next = Vec::with_capacity(pieces.len());
        for piece in pieces {
            let common = gcd(&piece, splitter)?;
            let split_deg = common.degree().unwrap_or(0);
            let piece_deg = piece.degree().unwrap_or(0);
            if split_deg >= 1 && split_deg < piece_deg {
                next.push(piece.div_exact(&common));
                next.push(common);
            } else {
                next.push(piece);
            }
        }
        pieces = next;
    }
    Ok(pieces)
}

/// A place where both surfaces degenerate, with both profiles restricted
/// to it.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CommonPlace {
    pub place: Place,
    pub profile1: ValuationProfile,
    pub profile2: ValuationProfile,
}

/// Singular places of two surfaces, aligned: common places (both singular)
/// and places singular for exactly one surface. Matching splits finite
/// places by gcd so that every output place lies wholly in one category.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct MatchedPlaces {
    pub common: Vec<CommonPlace>,
    pub only1: Vec<ValuationProfile>,
    pub only2: Vec<ValuationProfile>,
}

/// Align the singular places of two surfaces.
pub fn match_places(
    profiles1: &[ValuationProfile],
    profiles2: &[ValuationProfile],
) -> Result<MatchedPlaces, Error> {
    let mut matched = MatchedPlaces::default();

    let inf1 = profiles1.iter().find(|p| p.place.is_infinity());
    let inf2 = profiles2.iter().find(|p| p.place.is_infinity());
    match (inf1, inf2) {
        (Some(p1), Some(p2)) => matched.common.push(CommonPlace {
            place: Place::Infinity,
            profile1: p1.clone(),
            profile2: p2.clone(),
        }),
        (Some(p1), None) => matched.only1.push(p1.clone()),
        (None, Some(p2)) => matched.only2.push(p2.clone()),
        (None, None) => {}
    }

    // Finite places: peel pairwise gcds off each pair of place polynomials.
    let finite_poly = |profile: &ValuationProfile| match &profile.place {
        Place::Finite(poly) => Some(poly.clone()),
        Place::Infinity => None,
    };
    let mut remainders2: Vec<(RatPoly, &ValuationProfile)> = profiles2
        .iter()
        .filter_map(|p| finite_poly(p).map(|poly| (poly, p)))
        .collect();
    for profile1 in profiles1 {
        let Some(mut remainder1) = finite_poly(profile1) else {
            continue;
        };
        for (remainder2, profile2) in remainders2.iter_mut() {
            if remainder1.degree().unwrap_or(0) == 0 {
                break;
            }
            if remainder2.degree().unwrap_or(0) == 0 {
                continue;
            }
            let shared = gcd(&remainder1, remainder2)?;
            if shared.degree().unwrap_or(0) >= 1 {
                remainder1 = remainder1.div_exact(&shared);
                *remainder2 = remainder2.div_exact(&shared);
                let place = Place::Finite(shared);
                matched.common.push(CommonPlace {
                    place: place.clone(),
                    profile1: profile1.with_place(place.clone()),
                    profile2: profile2.with_place(place),
                });
            }
        }
        if remainder1.degree().unwrap_or(0) >= 1 {
            matched.only1.push(profile1.with_place(Place::Finite(remainder1)));
        }
    }
    for (remainder2, profile2) in remainders2 {
        if remainder2.degree().unwrap_or(0) >= 1 {
            matched.only2.push(profile2.with_place(Place::Finite(remainder2)));
        }
    }

    matched.common.sort_by(|a, b| a.place.cmp(&b.place));
    matched.only1.sort_by(|a, b| a.place.cmp(&b.place));
    matched.only2.sort_by(|a, b| a.place.cmp(&b.place));
    Ok(matched)
}
