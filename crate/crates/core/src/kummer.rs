//! Kummer fibrations of the fiber product.
//!
//! Each surface carries a fiberwise involution x ↦ aᵢ − x through a
//! 2-torsion translation; the quotient of the product by the diagonal
//! involution, resolved, is the Kummer fibration Ŷ. All of its invariants
//! reduce to per-fiber data: the number a of fixed points of the involution
//! on the fiber, the number fn of those that are nodes, and — for the
//! ambiguous fiber types — a parity class on even cycles and a component
//! choice on tangent pairs.

use crate::config::Configuration;
use crate::error::Error;
use crate::hodge::hodge_numbers;
use crate::kodaira::KodairaFiber;
use crate::places::Place;
use crate::product::{classify_entry, small_resolution_exists, ProductConfig};
use std::fmt;

/// Class of the translation on the component cycle of an even I_n fiber:
/// an even class fixes four smooth points, an odd class two nodes.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Parity {
    Even,
    Odd,
}

impl fmt::Display for Parity {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        out.write_str(match self {
            Parity::Even => "even",
            Parity::Odd => "odd",
        })
    }
}

/// Action on the two tangent components of a type III fiber.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum IIICase {
    FixBoth,
    SwapComponents,
}

impl fmt::Display for IIICase {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        out.write_str(match self {
            IIICase::FixBoth => "fix-both",
            IIICase::SwapComponents => "swap",
        })
    }
}

/// Resolved involution behavior at one fiber. Empty means the behavior is
/// forced by the fiber type; parity applies only to even I_n, the
/// component case only to III.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub struct InvolutionChoice {
    pub parity: Option<Parity>,
    pub iii_case: Option<IIICase>,
}

/// How the user names an involution.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum InvolutionKind {
    /// Translation by the zero section: every even I_n is even, every III
    /// fixes both components. Overrides must agree.
    ZeroSection,
    /// Defaults as for the zero section, overrides free.
    Custom,
}

/// One user override, keyed by a surface (1 or 2) and the canonical string
/// of one of that surface's own singular places ("t^2-2", "inf", …) as
/// listed before place matching; split places inherit the choice.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct InvolutionOverride {
    pub surface: u8,
    pub place: String,
    pub value: OverrideValue,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum OverrideValue {
    Parity(Parity),
    Case(IIICase),
}

/// Involution specification as given by the user.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct InvolutionSpec {
    pub kind: InvolutionKind,
    pub overrides: Vec<InvolutionOverride>,
}

impl InvolutionSpec {
    pub fn zero_section() -> Self {
        InvolutionSpec { kind: InvolutionKind::ZeroSection, overrides: Vec::new() }
    }
}

/// Involution choices aligned with a configuration's entries.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ResolvedInvolution {
    choices: Vec<(InvolutionChoice, InvolutionChoice)>,
}

impl ResolvedInvolution {
    /// Validate explicit per-entry choices against the configuration.
    pub fn from_choices(
        config: &Configuration,
        choices: Vec<(InvolutionChoice, InvolutionChoice)>,
    ) -> Result<Self, Error> {
        if choices.len() != config.entries().len() {
            return Err(Error::InvalidInvolution(format!(
                "{} choices for {} configuration entries",
                choices.len(),
                config.entries().len()
            )));
        }
        for (entry, (choice1, choice2)) in config.entries().iter().zip(&choices) {
            fixed_point_count(entry.fiber1, *choice1)?;
            fixed_point_count(entry.fiber2, *choice2)?;
        }
        Ok(ResolvedInvolution { choices })
    }

    /// The zero-section involution on any configuration.
    pub fn zero_section(config: &Configuration) -> Self {
        let empty = InvolutionChoice::default();
        ResolvedInvolution {
            choices: vec![(empty, empty); config.entries().len()],
        }
    }

    pub fn choices(&self) -> &[(InvolutionChoice, InvolutionChoice)] {
        &self.choices
    }

    fn check_alignment(&self, config: &Configuration) -> Result<(), Error> {
        if self.choices.len() != config.entries().len() {
            return Err(Error::InvalidInvolution(
                "involution is not aligned with this configuration".into(),
            ));
        }
        Ok(())
    }
}

/// Resolve a user specification against a product's surfaces: overrides
/// are validated against each surface's own fiber table and inherited by
/// the matched sub-places that divide them. Abstract configurations (no
/// product) accept only override-free specifications.
pub fn resolve_involution(
    config: &Configuration,
    product: Option<&ProductConfig>,
    spec: &InvolutionSpec,
) -> Result<ResolvedInvolution, Error> {
    // Validate every override against the named surface's own fiber table.
    let mut resolved_overrides: Vec<(u8, Place, OverrideValue)> = Vec::new();
    for over in &spec.overrides {
        let Some(product) = product else {
            return Err(Error::InvalidInvolution(
                "overrides need surface data; this configuration has no places".into(),
            ));
        };
        let table = match over.surface {
            1 => &product.surface1.fibers,
            2 => &product.surface2.fibers,
            other => {
                return Err(Error::InvalidInvolution(format!(
                    "surface index {other} (expected 1 or 2)"
                )))
            }
        };
        let Some((place, fiber)) = table
            .entries
            .iter()
            .find(|(place, _)| place.to_string() == over.place)
        else {
            return Err(Error::InvalidInvolution(format!(
                "surface {} has no singular place {}",
                over.surface, over.place
            )));
        };
        match (over.value, fiber) {
            (OverrideValue::Parity(parity), KodairaFiber::I(n)) if n % 2 == 0 => {
                if spec.kind == InvolutionKind::ZeroSection && parity == Parity::Odd {
                    return Err(Error::InvalidInvolution(format!(
                        "odd parity at {} conflicts with the zero-section involution",
                        over.place
                    )));
                }
            }
            (OverrideValue::Parity(_), _) => {
                return Err(Error::InvalidInvolution(format!(
                    "parity override at {} needs an even I_n fiber, found {fiber}",
                    over.place
                )));
            }
            (OverrideValue::Case(case), KodairaFiber::III) => {
                if spec.kind == InvolutionKind::ZeroSection && case == IIICase::SwapComponents {
                    return Err(Error::InvalidInvolution(format!(
                        "swapping components at {} conflicts with the zero-section involution",
                        over.place
                    )));
                }
            }
            (OverrideValue::Case(_), _) => {
                return Err(Error::InvalidInvolution(format!(
                    "component override at {} needs a type III fiber, found {fiber}",
                    over.place
                )));
            }
        }
        resolved_overrides.push((over.surface, place.clone(), over.value));
    }

    // An entry place inherits an override when it divides the override's
    // place (matching may have split the original into gcd pieces).
    let inherits = |entry_place: &Option<Place>, override_place: &Place| -> bool {
        match (entry_place, override_place) {
            (Some(Place::Infinity), Place::Infinity) => true,
            (Some(Place::Finite(entry)), Place::Finite(original)) => {
                original.div_rem(entry).1.is_zero()
            }
            _ => false,
        }
    };
    let choice_for = |surface: u8, entry_place: &Option<Place>| -> InvolutionChoice {
        let mut choice = InvolutionChoice::default();
        for (over_surface, over_place, value) in &resolved_overrides {
            if *over_surface == surface && inherits(entry_place, over_place) {
                match value {
                    OverrideValue::Parity(parity) => choice.parity = Some(*parity),
                    OverrideValue::Case(case) => choice.iii_case = Some(*case),
                }
            }
        }
        choice
    };

    let choices = config
        .entries()
        .iter()
        .map(|entry| (choice_for(1, &entry.place), choice_for(2, &entry.place)))
        .collect();
    ResolvedInvolution::from_choices(config, choices)
}

/// Fixed points of the involution on one fiber: (a, fn) = (total fixed
/// points, how many of them are singular points of the fiber).
///
/// Smooth → (4, 0); I_odd → (3, 1); I_even → (4, 0) for even parity,
/// (2, 2) for odd; II → (2, 1); III → (3, 1) fixing both components,
/// (1, 1) swapping them; IV → (2, 1). A missing parity or component
/// choice defaults to the zero-section behavior (even, fix-both).
pub fn fixed_point_count(
    fiber: Option<KodairaFiber>,
    choice: InvolutionChoice,
) -> Result<(u32, u32), Error> {
    let reject_parity = |context: &str| -> Result<(), Error> {
        if choice.parity.is_some() {
            return Err(Error::InvalidInvolution(format!(
                "parity choice on {context} (only even I_n fibers carry one)"
            )));
        }
        Ok(())
    };
    let reject_case = |context: &str| -> Result<(), Error> {
        if choice.iii_case.is_some() {
            return Err(Error::InvalidInvolution(format!(
                "component choice on {context} (only type III fibers carry one)"
            )));
        }
        Ok(())
    };
    let Some(fiber) = fiber else {
        reject_parity("a smooth fiber")?;
        reject_case("a smooth fiber")?;
        return Ok((4, 0));
    };
    if !fiber.is_reduced() {
        return Err(Error::InvalidConfiguration(format!(
            "non-reduced fiber {fiber} has no involution data"
        )));
    }
    match fiber {
        KodairaFiber::I(0) => Err(Error::InvalidConfiguration(
            "type I0 denotes a smooth fiber; leave the slot empty instead".into(),
        )),
        KodairaFiber::I(n) if n % 2 == 1 => {
            reject_parity(&format!("an odd fiber I{n}"))?;
            reject_case("an I_n fiber")?;
            Ok((3, 1))
        }
        KodairaFiber::I(_) => {
            reject_case("an I_n fiber")?;
            match choice.parity.unwrap_or(Parity::Even) {
                Parity::Even => Ok((4, 0)),
                Parity::Odd => Ok((2, 2)),
            }
        }
        KodairaFiber::II => {
            reject_parity("a type II fiber")?;
            reject_case("a type II fiber")?;
            Ok((2, 1))
        }
        KodairaFiber::III => {
            reject_parity("a type III fiber")?;
            match choice.iii_case.unwrap_or(IIICase::FixBoth) {
                IIICase::FixBoth => Ok((3, 1)),
                IIICase::SwapComponents => Ok((1, 1)),
            }
        }
        KodairaFiber::IV => {
            reject_parity("a type IV fiber")?;
            reject_case("a type IV fiber")?;
            Ok((2, 1))
        }
        KodairaFiber::NonReduced(_) => unreachable!("screened above"),
    }
}

/// Per-place fixed-point data of the involution on both fibers.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FixedLocusRow {
    pub place: String,
    pub degree: u32,
    pub a1: u32,
    pub fn1: u32,
    pub a2: u32,
    pub fn2: u32,
}

/// The fixed locus of the involution: the branch curve C, its Euler
/// number, and the partition of the product's nodes into o fixed points
/// and b swapped pairs.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FixedLocusData {
    pub rows: Vec<FixedLocusRow>,
    pub chi_c: i64,
    pub o: i64,
    pub b: i64,
    /// Nodes of C itself: the node×node fixed points, equal to o on
    /// semistable configurations.
    pub node_count_of_c: i64,
}

fn fixed_locus_rows(
    config: &Configuration,
    inv: &ResolvedInvolution,
) -> Result<Vec<FixedLocusRow>, Error> {
    inv.check_alignment(config)?;
    config
        .entries()
        .iter()
        .zip(inv.choices())
        .enumerate()
        .map(|(index, (entry, (choice1, choice2)))| {
            let (a1, fn1) = fixed_point_count(entry.fiber1, *choice1)?;
            let (a2, fn2) = fixed_point_count(entry.fiber2, *choice2)?;
            Ok(FixedLocusRow {
                place: entry.label(index),
                degree: entry.degree,
                a1,
                fn1,
                a2,
                fn2,
            })
        })
        .collect()
}

/// Euler number of the branch curve C — the fixed locus of the diagonal
/// involution: χ(C) = 16·(2 − Σ deg) + Σ deg·a·a′ over all singular
/// places, with a = 4 on a smooth side.
pub fn chi_branch_curve(
    config: &Configuration,
    inv: &ResolvedInvolution,
) -> Result<i64, Error> {
    let (resolvable, obstructions) = small_resolution_exists(config);
    if !resolvable {
        return Err(Error::NoSmallResolution { obstructions });
    }
    let rows = fixed_locus_rows(config, inv)?;
    let total_degree: i64 = rows.iter().map(|r| i64::from(r.degree)).sum();
    let pairs: i64 = rows
        .iter()
        .map(|r| i64::from(r.degree) * i64::from(r.a1) * i64::from(r.a2))
        .sum();
    Ok(16 * (2 - total_degree) + pairs)
}

fn require_semistable(config: &Configuration) -> Result<(), Error> {
    for (index, entry) in config.entries().iter().enumerate() {
        let additive = [entry.fiber1, entry.fiber2]
            .into_iter()
            .flatten()
            .any(|fiber| !fiber.is_multiplicative());
        if additive {
            return Err(Error::NotSemistable { place: entry.label(index) });
        }
    }
    Ok(())
}

/// Partition the nodes of the product into o fixed points and b swapped
/// pairs. Semistable configurations only.
pub fn singular_point_partition(
    config: &Configuration,
    inv: &ResolvedInvolution,
) -> Result<(i64, i64), Error> {
    require_semistable(config)?;
    let (resolvable, obstructions) = small_resolution_exists(config);
    if !resolvable {
        return Err(Error::NoSmallResolution { obstructions });
    }
    let rows = fixed_locus_rows(config, inv)?;
    for (row, entry) in rows.iter().zip(config.entries()) {
        for (a, fiber) in [(row.a1, &entry.fiber1), (row.a2, &entry.fiber2)] {
            assert!((2..=4).contains(&a), "a = {a} out of range at {}", row.place);
            let odd_multiplicative =
                matches!(fiber, Some(KodairaFiber::I(n)) if n % 2 == 1);
            assert_eq!(
                a == 3,
                odd_multiplicative,
                "a = 3 must characterize odd I_n at {}",
                row.place
            );
        }
    }
    let o: i64 = rows
        .iter()
        .zip(config.entries())
        .filter(|(_, entry)| entry.is_common())
        .map(|(row, _)| i64::from(row.degree) * i64::from(row.fn1) * i64::from(row.fn2))
        .sum();
    let node_total: i64 = config
        .common_entries()
        .map(|entry| {
            let count = classify_entry(entry)
                .singularity
                .expect("common semistable pairs are nodal")
                .count;
            i64::from(entry.degree) * i64::from(count)
        })
        .sum();
    if (node_total - o) % 2 != 0 {
        return Err(Error::InternalInconsistency(format!(
            "node total {node_total} minus {o} fixed nodes is odd"
        )));
    }
    Ok((o, (node_total - o) / 2))
}

/// Assemble the complete fixed-locus description.
pub fn fixed_locus_data(
    config: &Configuration,
    inv: &ResolvedInvolution,
) -> Result<FixedLocusData, Error> {
    let chi_c = chi_branch_curve(config, inv)?;
    let (o, b) = singular_point_partition(config, inv)?;
    Ok(FixedLocusData {
        rows: fixed_locus_rows(config, inv)?,
        chi_c,
        o,
        b,
        node_count_of_c: o,
    })
}

/// Euler number of the resolved Kummer fibration:
/// χ(Ŷ) = (χ(X) − χ(C))/2 + 2χ(C) + 2o + b.
pub fn chi_kummer(config: &Configuration, inv: &ResolvedInvolution) -> Result<ChiKummer, Error> {
    require_semistable(config)?;
    let chi_c = chi_branch_curve(config, inv)?;
    let (o, b) = singular_point_partition(config, inv)?;
    let chi_x: i64 = config
        .common_entries()
        .map(|e| i64::from(e.degree) * i64::from(e.chi1()) * i64::from(e.chi2()))
        .sum();
    if (chi_x - chi_c) % 2 != 0 {
        return Err(Error::InternalInconsistency(format!(
            "chi(X) - chi(C) = {} is odd",
            chi_x - chi_c
        )));
    }
    let value = (chi_x - chi_c) / 2 + 2 * chi_c + 2 * o + b;

    let mut warnings = Vec::new();
    if o == 0 && b == 0 && chi_x == 0 && chi_c == -56 {
        warnings.push(
            "a previously published table lists -74 for this fixed locus; with o = b = 0 \
             and chi(X) = 0 the quotient formula forces chi = (3/2)*chi(C) = -84, and -74 \
             is not attainable as 3/2 of any integer"
                .into(),
        );
    }
    Ok(ChiKummer { value, chi_x, chi_c, o, b, warnings })
}

/// χ(Ŷ) together with every ingredient of the formula.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ChiKummer {
    pub value: i64,
    pub chi_x: i64,
    pub chi_c: i64,
    pub o: i64,
    pub b: i64,
    pub warnings: Vec<String>,
}

/// Does the resolved Kummer fibration carry an ample class? True exactly
/// when every singular fiber of both surfaces is multiplicative and no
/// common place pairs an I₁ with a singular fiber.
pub fn kummer_projective(config: &Configuration) -> Result<bool, Error> {
    let (resolvable, obstructions) = small_resolution_exists(config);
    if !resolvable {
        return Err(Error::NoSmallResolution { obstructions });
    }
    let i1_pair = config.common_entries().any(|e| {
        e.fiber1 == Some(KodairaFiber::I(1)) || e.fiber2 == Some(KodairaFiber::I(1))
    });
    Ok(config.semistable() && !i1_pair)
}

/// Hodge numbers of the Kummer fibration, split into the transversal part
/// (moduli of the branch curve) and the equisingular part.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct KummerHodge {
    pub k_components: i64,
    /// χ of the normalized branch curve: χ(C) + (nodes of C).
    pub chi_c_tilde: i64,
    /// Total genus of the branch curve: k − χ(C̃)/2.
    pub transversal: i64,
    /// Heuristic count of equisingular deformations.
    pub equisingular: i64,
    pub h12: i64,
    pub h11: i64,
    pub warnings: Vec<String>,
}

/// Compute h¹²(Ŷ) = transversal + equisingular and h¹¹(Ŷ) = h¹² + χ(Ŷ)/2.
///
/// Requires a semistable, Kummer-projective configuration. `k_components`
/// is the number of irreducible components of the branch curve — not
/// determined by fiber data; `None` defaults to 1 (a lower bound for the
/// transversal part) with a warning. The equisingular count is heuristic
/// and labeled so.
pub fn hodge_kummer(
    config: &Configuration,
    inv: &ResolvedInvolution,
    k_components: Option<i64>,
) -> Result<KummerHodge, Error> {
    require_semistable(config)?;
    if !kummer_projective(config)? {
        let obstructions: Vec<String> = config
            .entries()
            .iter()
            .enumerate()
            .filter(|(_, e)| {
                e.is_common()
                    && (e.fiber1 == Some(KodairaFiber::I(1))
                        || e.fiber2 == Some(KodairaFiber::I(1)))
            })
            .map(|(index, e)| format!("{} at {}", classify_entry(e).pair_label(), e.label(index)))
            .collect();
        return Err(Error::NotProjective { obstructions });
    }
    let chi = chi_kummer(config, inv)?;
    let mut warnings = chi.warnings.clone();

    let k = match k_components {
        Some(k) if k >= 1 => k,
        Some(k) => {
            return Err(Error::InvalidConfiguration(format!(
                "branch curve component count {k} must be at least 1"
            )))
        }
        None => {
            warnings.push(
                "branch curve component count defaulted to 1; the true count is not \
                 determined by fiber data, and h12 grows with it"
                    .into(),
            );
            1
        }
    };

    let chi_c_tilde = chi.chi_c + chi.o;
    if chi_c_tilde % 2 != 0 {
        return Err(Error::InternalInconsistency(format!(
            "normalized branch curve has odd Euler number {chi_c_tilde}"
        )));
    }
    let transversal = k - chi_c_tilde / 2;
    if transversal < 0 {
        return Err(Error::InternalInconsistency(format!(
            "negative total genus {transversal} for the branch curve"
        )));
    }

    let base = hodge_numbers(config)?;
    let excess = |which: u8| -> i64 {
        config
            .only_entries(which)
            .map(|e| {
                let b = if which == 1 { e.b1() } else { e.b2() };
                i64::from(e.degree) * i64::from(b - 1)
            })
            .sum()
    };
    let equisingular = base.h12 - excess(1) - excess(2);
    if equisingular < 0 {
        return Err(Error::InternalInconsistency(format!(
            "heuristic equisingular count {equisingular} is negative"
        )));
    }
    warnings.push(
        "the equisingular part uses a reconstructed count (h12 of the configuration \
         minus one-sided component excesses) and is heuristic"
            .into(),
    );
    let generic = equisingular == base.h12 && config.common_entries().count() == 0;
    if !generic {
        warnings.push(
            "no independent value exists for the equisingular part of this non-generic \
             configuration; treat h12 and h11 as estimates"
                .into(),
        );
    }

    let h12 = transversal + equisingular;
    if chi.value % 2 != 0 {
        return Err(Error::InternalInconsistency(format!(
            "chi of the Kummer fibration is odd: {}",
            chi.value
        )));
    }
    let h11 = h12 + chi.value / 2;
    if h11 < 1 {
        return Err(Error::InternalInconsistency(format!(
            "h11 = {h11} is below 1 for this Kummer fibration"
        )));
    }
    Ok(KummerHodge {
        k_components: k,
        chi_c_tilde,
        transversal,
        equisingular,
        h12,
        h11,
        warnings,
    })
}

/// Census label for a fixed point of the involution over a singular place.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub enum CensusLabel {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
    H,
    I,
    J,
    K,
    /// Combination outside the printed classification (triple-point pairs,
    /// anything involving a cusp).
    Unlisted,
}

impl fmt::Display for CensusLabel {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        out.write_str(match self {
            CensusLabel::A => "a",
            CensusLabel::B => "b",
            CensusLabel::C => "c",
            CensusLabel::D => "d",
            CensusLabel::E => "e",
            CensusLabel::F => "f",
            CensusLabel::G => "g",
            CensusLabel::H => "h",
            CensusLabel::I => "i",
            CensusLabel::J => "j",
            CensusLabel::K => "k",
            CensusLabel::Unlisted => "unlisted",
        })
    }
}

/// One quotient-singularity class.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct QuotientSingularity {
    pub label: CensusLabel,
    pub local_equation: String,
    pub resolution_note: String,
}

/// Census row: all fixed points of one class over one place,
/// degree-weighted.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CensusRow {
    pub place: String,
    pub degree: u32,
    pub count: i64,
    pub singularity: QuotientSingularity,
}

/// Local form of one factor at a fixed point.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug)]
enum LocalForm {
    Smooth = 1,
    NodeSwapped = 2,
    TangentSwapped = 3,
    TangentFixed = 4,
    Triple = 5,
    Cusp = 6,
}

impl LocalForm {
    fn describe(self) -> &'static str {
        match self {
            LocalForm::Smooth => "smooth point",
            LocalForm::NodeSwapped => "node with swapped branches",
            LocalForm::TangentSwapped => "tangency with swapped components",
            LocalForm::TangentFixed => "tangency on the fixed axis",
            LocalForm::Triple => "concurrent triple point",
            LocalForm::Cusp => "cusp",
        }
    }
}

/// The singular fixed points of one fiber under the involution.
fn singular_form(fiber: KodairaFiber, choice: InvolutionChoice) -> LocalForm {
    match fiber {
        KodairaFiber::I(_) => LocalForm::NodeSwapped,
        KodairaFiber::II => LocalForm::Cusp,
        KodairaFiber::III => match choice.iii_case.unwrap_or(IIICase::FixBoth) {
            IIICase::FixBoth => LocalForm::TangentFixed,
            IIICase::SwapComponents => LocalForm::TangentSwapped,
        },
        KodairaFiber::IV => LocalForm::Triple,
        KodairaFiber::NonReduced(_) => unreachable!("census requires reduced fibers"),
    }
}

fn classify_pair(first: LocalForm, second: LocalForm) -> QuotientSingularity {
    use CensusLabel::*;
    use LocalForm::*;
    let (low, high) = if first <= second { (first, second) } else { (second, first) };
    let (label, local_equation, resolution_note): (CensusLabel, String, &str) =
        match (low, high) {
            (Smooth, Smooth) => (A, "u^2 = x*y".into(), "transversal A1 along the branch curve"),
            (Smooth, NodeSwapped) => (
                B,
                "u^2 = x*(y^2 - t)".into(),
                "smooth branch point against a swapped node; no extra exceptional curve",
            ),
            (NodeSwapped, NodeSwapped) => (
                E,
                "u^2 = (x^2 - t)*(y^2 - t)".into(),
                "two nodes on the double cover",
            ),
            (NodeSwapped, TangentSwapped) => (
                F,
                format!("{} x {}", NodeSwapped.describe(), TangentSwapped.describe()),
                "two singularities of type A3",
            ),
            (Smooth, TangentSwapped) => (C, descriptive(Smooth, TangentSwapped), CENSUS_ONLY),
            (Smooth, TangentFixed) => (D, descriptive(Smooth, TangentFixed), CENSUS_ONLY),
            (Smooth, Triple) => (D, descriptive(Smooth, Triple), CENSUS_ONLY),
            (NodeSwapped, TangentFixed) => {
                (G, descriptive(NodeSwapped, TangentFixed), CENSUS_ONLY)
            }
            (NodeSwapped, Triple) => (I, descriptive(NodeSwapped, Triple), CENSUS_ONLY),
            (TangentSwapped, TangentSwapped) => {
                (H, descriptive(TangentSwapped, TangentSwapped), CENSUS_ONLY)
            }
            (TangentSwapped, TangentFixed) => {
                (J, descriptive(TangentSwapped, TangentFixed), CENSUS_ONLY)
            }
            (TangentFixed, TangentFixed) => {
                (K, descriptive(TangentFixed, TangentFixed), CENSUS_ONLY)
            }
            (a, b) => (
                Unlisted,
                descriptive(a, b),
                "combination outside the printed classification; census only",
            ),
        };
    QuotientSingularity {
        label,
        local_equation,
        resolution_note: resolution_note.to_string(),
    }
}

const CENSUS_ONLY: &str = "census only; no Euler bookkeeping for this type";

fn descriptive(first: LocalForm, second: LocalForm) -> String {
    format!("{} x {}", first.describe(), second.describe())
}

/// Classify every fixed point of the involution over the singular places.
/// Works for any reduced configuration; semistable ones produce only
/// labels (a), (b), (e).
pub fn quotient_singularity_census(
    config: &Configuration,
    inv: &ResolvedInvolution,
) -> Result<Vec<CensusRow>, Error> {
    inv.check_alignment(config)?;
    let mut rows = Vec::new();
    for (index, (entry, (choice1, choice2))) in
        config.entries().iter().zip(inv.choices()).enumerate()
    {
        let side = |fiber: Option<KodairaFiber>,
                    choice: InvolutionChoice|
         -> Result<Vec<(LocalForm, u32)>, Error> {
            let (a, fixed_nodes) = fixed_point_count(fiber, choice)?;
            let mut forms = Vec::new();
            if a - fixed_nodes > 0 {
                forms.push((LocalForm::Smooth, a - fixed_nodes));
            }
            if fixed_nodes > 0 {
                let fiber = fiber.expect("smooth fibers have no singular fixed points");
                forms.push((singular_form(fiber, choice), fixed_nodes));
            }
            Ok(forms)
        };
        let forms1 = side(entry.fiber1, *choice1)?;
        let forms2 = side(entry.fiber2, *choice2)?;
        let mut local: Vec<CensusRow> = Vec::new();
        for &(form1, count1) in &forms1 {
            for &(form2, count2) in &forms2 {
                let singularity = classify_pair(form1, form2);
                let count = i64::from(entry.degree) * i64::from(count1) * i64::from(count2);
                match local.iter_mut().find(|row| row.singularity == singularity) {
                    Some(row) => row.count += count,
                    None => local.push(CensusRow {
                        place: entry.label(index),
                        degree: entry.degree,
                        count,
                        singularity,
                    }),
                }
            }
        }
        local.sort_by(|x, y| x.singularity.label.cmp(&y.singularity.label));
        rows.extend(local);
    }
    Ok(rows)
}
