//! The fixed 16-entry code-smell catalog: what each smell is, how it is
//! refactored away, and the direction in which that refactoring is expected to
//! move CPU and memory usage.
//!
//! The enumeration order of [`SmellKind`] is part of the public contract:
//! feature vectors, reports, and exports all list kinds in this order.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

/// The sixteen catalogued smell kinds, in canonical order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SmellKind {
    CyclicDependency,
    GodMethod,
    SpaghettiCode,
    ShotgunSurgery,
    GodClass,
    LazyClass,
    RefusedBequest,
    TemporaryField,
    SpeculativeGenerality,
    DeadCode,
    DuplicateCode,
    LongParameter,
    LongStatement,
    PrimitiveObsession,
    OrphanVariable,
    Middleman,
}

impl SmellKind {
    /// All kinds in canonical catalog order.
    pub const ALL: [SmellKind; 16] = [
        SmellKind::CyclicDependency,
        SmellKind::GodMethod,
        SmellKind::SpaghettiCode,
        SmellKind::ShotgunSurgery,
        SmellKind::GodClass,
        SmellKind::LazyClass,
        SmellKind::RefusedBequest,
        SmellKind::TemporaryField,
        SmellKind::SpeculativeGenerality,
        SmellKind::DeadCode,
        SmellKind::DuplicateCode,
        SmellKind::LongParameter,
        SmellKind::LongStatement,
        SmellKind::PrimitiveObsession,
        SmellKind::OrphanVariable,
        SmellKind::Middleman,
    ];

    /// Stable kebab-case name, identical to the serialized form.
    pub fn name(self) -> &'static str {
        match self {
            SmellKind::CyclicDependency => "cyclic-dependency",
            SmellKind::GodMethod => "god-method",
            SmellKind::SpaghettiCode => "spaghetti-code",
            SmellKind::ShotgunSurgery => "shotgun-surgery",
            SmellKind::GodClass => "god-class",
            SmellKind::LazyClass => "lazy-class",
            SmellKind::RefusedBequest => "refused-bequest",
            SmellKind::TemporaryField => "temporary-field",
            SmellKind::SpeculativeGenerality => "speculative-generality",
            SmellKind::DeadCode => "dead-code",
            SmellKind::DuplicateCode => "duplicate-code",
            SmellKind::LongParameter => "long-parameter",
            SmellKind::LongStatement => "long-statement",
            SmellKind::PrimitiveObsession => "primitive-obsession",
            SmellKind::OrphanVariable => "orphan-variable",
            SmellKind::Middleman => "middleman",
        }
    }

    /// Position in the canonical order (0..16).
    pub fn ordinal(self) -> usize {
        SmellKind::ALL.iter().position(|k| *k == self).unwrap()
    }
}

impl fmt::Display for SmellKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Error for parsing an unknown smell-kind name.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("unknown smell kind `{0}`")]
pub struct UnknownSmellKind(pub String);

impl FromStr for SmellKind {
    type Err = UnknownSmellKind;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        SmellKind::ALL
            .iter()
            .copied()
            .find(|k| k.name() == s)
            .ok_or_else(|| UnknownSmellKind(s.to_string()))
    }
}

/// Expected direction of a resource metric after the smell is refactored away.
///
/// The ordering is total and intentional: `Improves < MixedUnknown < Worsens`,
/// so "worst direction wins" reductions can take a plain `max`.
#[derive(
    Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize,
)]
#[serde(rename_all = "kebab-case")]
pub enum ImpactDirection {
    /// Resource usage is expected to drop.
    Improves,
    /// Evidence is contradictory or absent.
    MixedUnknown,
    /// Resource usage is expected to rise.
    Worsens,
}

impl fmt::Display for ImpactDirection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            ImpactDirection::Improves => "improves",
            ImpactDirection::MixedUnknown => "mixed-unknown",
            ImpactDirection::Worsens => "worsens",
        };
        f.write_str(s)
    }
}

/// One catalog row: a smell, its refactoring, and the expected impact signs.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SmellDescriptor {
    pub kind: SmellKind,
    /// What the smell looks like in code.
    pub property: &'static str,
    /// The refactoring conventionally applied to remove it.
    #[serde(rename = "technique")]
    pub refactoring_technique: &'static str,
    /// Expected CPU-usage direction after refactoring.
    pub cpu_direction: ImpactDirection,
    /// Expected memory-usage direction after refactoring.
    pub mem_direction: ImpactDirection,
}

use ImpactDirection::{Improves, Worsens};

const CATALOG: [SmellDescriptor; 16] = [
    SmellDescriptor {
        kind: SmellKind::CyclicDependency,
        property: "packages or modules depend on one another in a closed cycle",
        refactoring_technique: "break the cycle by inverting or consolidating dependencies",
        cpu_direction: Improves,
        mem_direction: Improves,
    },
    SmellDescriptor {
        kind: SmellKind::GodMethod,
        property: "a single method accumulates many unrelated responsibilities",
        refactoring_technique: "extract method: split into smaller focused methods",
        cpu_direction: Worsens,
        mem_direction: Worsens,
    },
    SmellDescriptor {
        kind: SmellKind::SpaghettiCode,
        property: "long, deeply branched procedural code with little structure",
        refactoring_technique: "restructure into smaller, well-scoped units",
        cpu_direction: Improves,
        mem_direction: Improves,
    },
    SmellDescriptor {
        kind: SmellKind::ShotgunSurgery,
        property: "one behavioural change forces edits across many classes",
        refactoring_technique: "move method / move field to consolidate the behaviour",
        cpu_direction: Improves,
        mem_direction: Improves,
    },
    SmellDescriptor {
        kind: SmellKind::GodClass,
        property: "one class does the work of many",
        refactoring_technique: "extract class: split responsibilities into smaller classes",
        cpu_direction: Worsens,
        mem_direction: Worsens,
    },
    SmellDescriptor {
        kind: SmellKind::LazyClass,
        property: "a class too small to justify its existence",
        refactoring_technique: "inline class: collapse it into its callers",
        cpu_direction: Improves,
        mem_direction: Improves,
    },
    SmellDescriptor {
        kind: SmellKind::RefusedBequest,
        property: "a subclass uses almost nothing of what it inherits",
        refactoring_technique: "replace inheritance with delegation",
        cpu_direction: Improves,
        mem_direction: Improves,
    },
    SmellDescriptor {
        kind: SmellKind::TemporaryField,
        property: "a field is written in one narrow circumstance and read nowhere",
        refactoring_technique: "replace the field with a local or an explicit parameter",
        cpu_direction: Improves,
        mem_direction: Improves,
    },
    SmellDescriptor {
        kind: SmellKind::SpeculativeGenerality,
        property: "abstractions and parameters added for needs that never arrived",
        refactoring_technique: "collapse the unused hierarchy and drop unused parameters",
        cpu_direction: Improves,
        mem_direction: Improves,
    },
    SmellDescriptor {
        kind: SmellKind::DeadCode,
        property: "declarations that are never referenced from anywhere",
        refactoring_technique: "delete the unused code",
        cpu_direction: Improves,
        mem_direction: Improves,
    },
    SmellDescriptor {
        kind: SmellKind::DuplicateCode,
        property: "the same token sequence repeated instead of shared",
        refactoring_technique: "extract the common block and call it from every site",
        cpu_direction: Improves,
        mem_direction: Improves,
    },
    SmellDescriptor {
        kind: SmellKind::LongParameter,
        property: "a method takes more parameters than a reader can track",
        refactoring_technique: "introduce parameter object",
        cpu_direction: Improves,
        mem_direction: Worsens,
    },
    SmellDescriptor {
        kind: SmellKind::LongStatement,
        property: "a single statement or switch grown far past readability",
        refactoring_technique: "decompose the statement into smaller ones",
        cpu_direction: Improves,
        mem_direction: Improves,
    },
    SmellDescriptor {
        kind: SmellKind::PrimitiveObsession,
        property: "primitives and synchronized string buffers used where types belong",
        refactoring_technique: "replace primitives with small value types and modern builders",
        cpu_direction: Improves,
        mem_direction: Improves,
    },
    SmellDescriptor {
        kind: SmellKind::OrphanVariable,
        property: "a public constant its own class never touches, used only by others",
        refactoring_technique: "move the constant to the class that actually uses it",
        cpu_direction: Improves,
        mem_direction: Improves,
    },
    SmellDescriptor {
        kind: SmellKind::Middleman,
        property: "a class whose methods mostly forward to another object",
        refactoring_technique: "remove middle man: inline the delegations",
        cpu_direction: Improves,
        mem_direction: Improves,
    },
];

/// The full catalog in canonical order.
pub fn catalog() -> &'static [SmellDescriptor; 16] {
    &CATALOG
}

/// Look up the descriptor for one kind. Total: every kind has a row.
pub fn lookup(kind: SmellKind) -> &'static SmellDescriptor {
    &CATALOG[kind.ordinal()]
}

/// Expected `(cpu, memory)` directions for one kind.
pub fn expected_direction(kind: SmellKind) -> (ImpactDirection, ImpactDirection) {
    let d = lookup(kind);
    (d.cpu_direction, d.mem_direction)
}

/// True when refactoring the kind is expected to improve both resources.
pub fn improves_both(kind: SmellKind) -> bool {
    expected_direction(kind) == (Improves, Improves)
}

/// True when refactoring the kind is expected to worsen both resources.
pub fn worsens_both(kind: SmellKind) -> bool {
    expected_direction(kind) == (Worsens, Worsens)
}
