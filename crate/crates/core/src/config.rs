//! Fiber configurations of a product of two rational elliptic surfaces —
//! the shared currency of the invariant computations.
//!
//! A configuration lists, per place of the base line, the singular fiber of
//! each surface (or smoothness), weighted by the place's degree. The
//! Weierstrass pipeline lowers real surface data to this form; abstract
//! configurations with no attached places use exactly the same type, so
//! every formula downstream works for both.

use crate::error::Error;
use crate::kodaira::KodairaFiber;
use crate::places::Place;

/// One place of the base line with the fiber of each surface over it.
/// `None` fibers mean the surface is smooth there; at least one side is
/// always singular.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PairEntry {
    /// Concrete place, when the configuration came from Weierstrass data.
    pub place: Option<Place>,
    /// Number of geometric points this entry stands for (≥ 1).
    pub degree: u32,
    pub fiber1: Option<KodairaFiber>,
    pub fiber2: Option<KodairaFiber>,
}

impl PairEntry {
    /// Both surfaces singular here?
    pub fn is_common(&self) -> bool {
        self.fiber1.is_some() && self.fiber2.is_some()
    }

    /// Component count of the first fiber, 1 for a smooth fiber.
    pub fn b1(&self) -> u32 {
        self.fiber1.as_ref().and_then(KodairaFiber::components).unwrap_or(1)
    }

    /// Component count of the second fiber, 1 for a smooth fiber.
    pub fn b2(&self) -> u32 {
        self.fiber2.as_ref().and_then(KodairaFiber::components).unwrap_or(1)
    }

    /// Euler number of the first fiber, 0 for a smooth fiber.
    pub fn chi1(&self) -> u32 {
        self.fiber1.as_ref().and_then(KodairaFiber::euler).unwrap_or(0)
    }

    /// Euler number of the second fiber, 0 for a smooth fiber.
    pub fn chi2(&self) -> u32 {
        self.fiber2.as_ref().and_then(KodairaFiber::euler).unwrap_or(0)
    }

    /// Human label for messages: the place if known, else the entry index.
    pub fn label(&self, index: usize) -> String {
        match &self.place {
            Some(place) => place.to_string(),
            None => format!("entry {index}"),
        }
    }
}

/// A validated fiber configuration of the product.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Configuration {
    entries: Vec<PairEntry>,
    isogenous: bool,
}

impl Configuration {
    /// Validate and build: every entry carries at least one singular fiber
    /// with degree ≥ 1, all fibers are reduced, and each surface's fibers
    /// sum to total Euler number 12.
    pub fn new(entries: Vec<PairEntry>, isogenous: bool) -> Result<Self, Error> {
        for (index, entry) in entries.iter().enumerate() {
            if entry.degree == 0 {
                return Err(Error::InvalidConfiguration(format!(
                    "degree 0 at {}",
                    entry.label(index)
                )));
            }
            if entry.fiber1.is_none() && entry.fiber2.is_none() {
                return Err(Error::InvalidConfiguration(format!(
                    "both fibers smooth at {}",
                    entry.label(index)
                )));
            }
            for fiber in [&entry.fiber1, &entry.fiber2].into_iter().flatten() {
                if !fiber.is_reduced() {
                    return Err(Error::InvalidConfiguration(format!(
                        "non-reduced fiber {fiber} at {}",
                        entry.label(index)
                    )));
                }
            }
        }
        let config = Configuration { entries, isogenous };
        for (which, total) in [(1, config.surface_euler(1)), (2, config.surface_euler(2))] {
            if total != 12 {
                return Err(Error::InvalidConfiguration(format!(
                    "surface {which} has total fiber Euler number {total}, expected 12"
                )));
            }
        }
        Ok(config)
    }

    pub fn entries(&self) -> &[PairEntry] {
        &self.entries
    }

    /// Is the pair of generic fibers isogenous?
    pub fn isogenous(&self) -> bool {
        self.isogenous
    }

    /// The correction term d: 1 for isogenous generic fibers, else 0.
    pub fn d(&self) -> i64 {
        i64::from(self.isogenous)
    }

    /// Degree-weighted total Euler number of one surface's singular fibers.
    pub fn surface_euler(&self, which: u8) -> u32 {
        self.entries
            .iter()
            .map(|e| e.degree * if which == 1 { e.chi1() } else { e.chi2() })
            .sum()
    }

    /// Entries where both surfaces are singular.
    pub fn common_entries(&self) -> impl Iterator<Item = &PairEntry> {
        self.entries.iter().filter(|e| e.is_common())
    }

    /// Entries singular only for the given surface.
    pub fn only_entries(&self, which: u8) -> impl Iterator<Item = &PairEntry> + '_ {
        self.entries.iter().filter(move |e| {
            if which == 1 {
                e.fiber1.is_some() && e.fiber2.is_none()
            } else {
                e.fiber2.is_some() && e.fiber1.is_none()
            }
        })
    }

    /// All singular fibers of both surfaces multiplicative?
    pub fn semistable(&self) -> bool {
        self.entries.iter().all(|e| {
            e.fiber1.map_or(true, |f| f.is_multiplicative())
                && e.fiber2.map_or(true, |f| f.is_multiplicative())
        })
    }
}
