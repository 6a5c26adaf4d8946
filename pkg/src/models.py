"""Type definitions for monomial ideals, support posets and multi-state systems.

Every type here is immutable after construction. Variables are indexed from
0 internally; text formats and reports use names or 1-based indices.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from itertools import combinations
from typing import Iterable, Literal, Mapping, NewType, Sequence

import numpy as np

# Branded types
Exponents = tuple[int, ...]
Slot = tuple[int, int]  # (base variable, slot number starting at 1)
Level = NewType("Level", int)
FamilyName = NewType("FamilyName", str)

BoundDirection = Literal["upper", "lower", "exact"]
ResolutionKind = Literal["mvt", "taylor"]


def default_variable_names(num_vars: int, prefix: str = "x") -> tuple[str, ...]:
    """Names x1..xn used when an ideal carries no names of its own."""
    return tuple(f"{prefix}{i + 1}" for i in range(num_vars))


def canonical_key(exponents: Exponents) -> Exponents:
    """Sort key for generators; sorted descending this is lex order x1 > x2 > ..."""
    return exponents


def term_order_key(exponents: Exponents) -> tuple[int, tuple[int, ...]]:
    """Print order for polynomial terms: total degree, then lex (x1 first)."""
    return (sum(exponents), tuple(-a for a in exponents))


@dataclass(frozen=True)
class Monomial:
    """A monomial x^a stored as its dense exponent vector."""

    exponents: Exponents

    def __post_init__(self) -> None:
        if any(a < 0 for a in self.exponents):
            raise ValueError(f"Negative exponent in {self.exponents}")

    @classmethod
    def unit(cls, num_vars: int) -> "Monomial":
        return cls((0,) * num_vars)

    @classmethod
    def from_support(cls, support: Iterable[int], num_vars: int) -> "Monomial":
        """Squarefree monomial with the given variable indices."""
        chosen = set(support)
        return cls(tuple(1 if i in chosen else 0 for i in range(num_vars)))

    @property
    def num_vars(self) -> int:
        return len(self.exponents)

    @property
    def degree(self) -> int:
        return sum(self.exponents)

    @property
    def support(self) -> frozenset[int]:
        return frozenset(i for i, a in enumerate(self.exponents) if a)

    def is_unit(self) -> bool:
        return not any(self.exponents)

    def is_squarefree(self) -> bool:
        return all(a <= 1 for a in self.exponents)

    def divides(self, other: "Monomial") -> bool:
        return all(a <= b for a, b in zip(self.exponents, other.exponents))

    def lcm(self, other: "Monomial") -> "Monomial":
        return Monomial(tuple(max(a, b) for a, b in zip(self.exponents, other.exponents)))

    def colon(self, other: "Monomial") -> "Monomial":
        """The monomial generating <self> : <other>."""
        return Monomial(tuple(max(a - b, 0) for a, b in zip(self.exponents, other.exponents)))

    def __mul__(self, other: "Monomial") -> "Monomial":
        return Monomial(tuple(a + b for a, b in zip(self.exponents, other.exponents)))

    def format(self, names: Sequence[str] | None = None) -> str:
        """Render as ``x^2*y``; the unit monomial renders as ``1``."""
        labels = names or default_variable_names(self.num_vars)
        factors = [
            labels[i] if a == 1 else f"{labels[i]}^{a}"
            for i, a in enumerate(self.exponents)
            if a
        ]
        return "*".join(factors) if factors else "1"


@dataclass(frozen=True)
class MonomialIdeal:
    """A monomial ideal given by its minimal generating set G(I).

    Generators are stored in canonical order (descending lex on exponent
    vectors) so equality is structural. Names are presentation only.
    """

    num_vars: int
    generators: tuple[Monomial, ...]
    names: tuple[str, ...] | None = field(default=None, compare=False, repr=False)

    def __post_init__(self) -> None:
        if self.num_vars < 1:
            raise ValueError(f"An ideal needs at least one variable, got {self.num_vars}")
        for g in self.generators:
            if g.num_vars != self.num_vars:
                raise ValueError(
                    f"Generator {g.exponents} has {g.num_vars} exponents, expected {self.num_vars}"
                )
        if self.names is not None and len(self.names) != self.num_vars:
            raise ValueError(
                f"Got {len(self.names)} variable names for {self.num_vars} variables"
            )
        ordered = tuple(
            sorted(set(self.generators), key=lambda m: canonical_key(m.exponents), reverse=True)
        )
        object.__setattr__(self, "generators", ordered)
        _check_minimal(ordered)

    @property
    def is_zero(self) -> bool:
        return not self.generators

    @property
    def is_improper(self) -> bool:
        """True for the unit ideal <1>."""
        return len(self.generators) == 1 and self.generators[0].is_unit()

    @property
    def is_squarefree(self) -> bool:
        return all(g.is_squarefree() for g in self.generators)

    @property
    def support(self) -> frozenset[int]:
        result: set[int] = set()
        for g in self.generators:
            result |= g.support
        return frozenset(result)

    @property
    def variable_names(self) -> tuple[str, ...]:
        return self.names or default_variable_names(self.num_vars)

    def caps(self) -> tuple[int, ...]:
        """Maximum exponent of each variable over G(I)."""
        if not self.generators:
            return (0,) * self.num_vars
        return tuple(max(col) for col in zip(*(g.exponents for g in self.generators)))

    def contains(self, monomial: Monomial) -> bool:
        return any(g.divides(monomial) for g in self.generators)

    def with_names(self, names: Sequence[str] | None) -> "MonomialIdeal":
        return MonomialIdeal(self.num_vars, self.generators, tuple(names) if names else None)

    def format(self) -> str:
        body = ", ".join(g.format(self.variable_names) for g in self.generators)
        return f"<{body}>"


def _check_minimal(generators: tuple[Monomial, ...]) -> None:
    if len(generators) < 2:
        return
    matrix = np.array([g.exponents for g in generators], dtype=np.int64)
    for row_index, row in enumerate(matrix):
        dividers = np.all(matrix <= row, axis=1)
        dividers[row_index] = False
        if dividers.any():
            other = generators[int(np.argmax(dividers))]
            raise ValueError(
                f"Generators are not minimal: {other.exponents} divides "
                f"{generators[row_index].exponents}; build ideals with minimalize()"
            )


@dataclass(frozen=True)
class VariableMap:
    """Bijection between slot variables of two polynomial rings.

    Each pair maps a source slot (variable, slot) to a target slot; plain
    variables use slot 1. The polarization map sends (i, l) to the flat
    polarized variable (t, 1).
    """

    pairs: tuple[tuple[Slot, Slot], ...]
    source_size: int
    target_size: int

    def __post_init__(self) -> None:
        sources = [s for s, _ in self.pairs]
        targets = [t for _, t in self.pairs]
        if len(set(sources)) != len(sources) or len(set(targets)) != len(targets):
            raise ValueError("VariableMap must be bijective")
        by_base: dict[int, list[int]] = {}
        for base, slot in sources:
            by_base.setdefault(base, []).append(slot)
        for base, slots in by_base.items():
            if sorted(slots) != list(range(1, len(slots) + 1)):
                raise ValueError(
                    f"Slots of variable {base} must be contiguous from 1, got {sorted(slots)}"
                )

    @cached_property
    def forward(self) -> dict[Slot, Slot]:
        return dict(self.pairs)

    @cached_property
    def backward(self) -> dict[Slot, Slot]:
        return {t: s for s, t in self.pairs}

    def image(self, slot: Slot) -> Slot:
        return self.forward[slot]

    def preimage(self, slot: Slot) -> Slot:
        return self.backward[slot]

    def inverse(self) -> "VariableMap":
        return VariableMap(
            tuple(sorted((t, s) for s, t in self.pairs)), self.target_size, self.source_size
        )

    def then(self, other: "VariableMap") -> "VariableMap":
        """Compose: apply self, then other."""
        return VariableMap(
            tuple(sorted((s, other.image(t)) for s, t in self.pairs)),
            self.source_size,
            other.target_size,
        )

    def slot_counts(self) -> dict[int, int]:
        counts: dict[int, int] = {}
        for base, _ in self.forward:
            counts[base] = counts.get(base, 0) + 1
        return counts

    def __len__(self) -> int:
        return len(self.pairs)


@dataclass(frozen=True)
class MultigradedPolynomial:
    """Integer-coefficient polynomial keyed by multidegree.

    Terms are kept in print order (total degree, then lex) with no zero
    coefficients.
    """

    num_vars: int
    terms: tuple[tuple[Exponents, int], ...]

    def __post_init__(self) -> None:
        for exps, coeff in self.terms:
            if len(exps) != self.num_vars:
                raise ValueError(f"Term {exps} does not have {self.num_vars} exponents")
            if coeff == 0:
                raise ValueError(f"Zero coefficient stored for {exps}")

    @classmethod
    def from_terms(
        cls, num_vars: int, terms: Mapping[Exponents, int] | Iterable[tuple[Exponents, int]]
    ) -> "MultigradedPolynomial":
        """Merge, drop zero coefficients and order the terms."""
        merged: dict[Exponents, int] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for exps, coeff in items:
            merged[exps] = merged.get(exps, 0) + coeff
        ordered = sorted(
            ((e, c) for e, c in merged.items() if c != 0), key=lambda t: term_order_key(t[0])
        )
        return cls(num_vars, tuple(ordered))

    @classmethod
    def zero(cls, num_vars: int) -> "MultigradedPolynomial":
        return cls(num_vars, ())

    def as_dict(self) -> dict[Exponents, int]:
        return dict(self.terms)

    def coefficient(self, exponents: Exponents) -> int:
        return self.as_dict().get(exponents, 0)

    def is_zero(self) -> bool:
        return not self.terms

    def __len__(self) -> int:
        return len(self.terms)

    def __add__(self, other: "MultigradedPolynomial") -> "MultigradedPolynomial":
        return MultigradedPolynomial.from_terms(self.num_vars, [*self.terms, *other.terms])

    def __neg__(self) -> "MultigradedPolynomial":
        return MultigradedPolynomial(self.num_vars, tuple((e, -c) for e, c in self.terms))

    def __sub__(self, other: "MultigradedPolynomial") -> "MultigradedPolynomial":
        return self + (-other)

    def total_degree_specialization(self) -> dict[int, int]:
        """Replace each x^mu by t^|mu|; returns degree -> coefficient."""
        graded: dict[int, int] = {}
        for exps, coeff in self.terms:
            degree = sum(exps)
            graded[degree] = graded.get(degree, 0) + coeff
        return {d: c for d, c in sorted(graded.items()) if c != 0}

    def format(self, names: Sequence[str] | None = None) -> str:
        """Render as ``x*y + y^2 - 2*x*y*z``."""
        parts: list[str] = []
        for exps, coeff in self.terms:
            mono = Monomial(exps).format(names)
            magnitude = abs(coeff)
            if mono == "1":
                body = str(magnitude)
            elif magnitude == 1:
                body = mono
            else:
                body = f"{magnitude}*{mono}"
            if not parts:
                parts.append(body if coeff > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if coeff > 0 else f"- {body}")
        return " ".join(parts) if parts else "0"


@dataclass(frozen=True)
class MVTNode:
    """One node of a Mayer-Vietoris tree.

    ``generators`` is the node's generating list as built (equal to the
    minimal set unless the tree keeps raw lcm lists); ``position`` is the
    path from the root as a string of "L"/"R" steps.
    """

    ideal: MonomialIdeal
    generators: tuple[Monomial, ...]
    pivot: Monomial
    position: str
    relevant: bool
    left: int | None = None
    right: int | None = None

    @property
    def dimension(self) -> int:
        """Homological index the pivot contributes to."""
        return self.position.count("R")


@dataclass(frozen=True)
class MVTree:
    """Mayer-Vietoris tree stored as a node list; index 0 is the root."""

    nodes: tuple[MVTNode, ...]

    @property
    def root(self) -> MVTNode:
        return self.nodes[0]

    def relevant_nodes(self) -> list[MVTNode]:
        return [node for node in self.nodes if node.relevant]

    def __len__(self) -> int:
        return len(self.nodes)


@dataclass(frozen=True)
class BettiTable:
    """Multigraded Betti numbers beta_{i,mu} of an ideal (not the quotient)."""

    num_vars: int
    entries: tuple[tuple[int, Exponents, int], ...]

    def get(self, index: int, multidegree: Exponents) -> int:
        for i, mu, beta in self.entries:
            if i == index and mu == multidegree:
                return beta
        return 0

    def graded(self) -> dict[tuple[int, int], int]:
        """beta_{i,j} keyed by (homological index, total degree)."""
        table: dict[tuple[int, int], int] = {}
        for i, mu, beta in self.entries:
            key = (i, sum(mu))
            table[key] = table.get(key, 0) + beta
        return dict(sorted(table.items()))

    def totals(self) -> tuple[int, ...]:
        """Total Betti number per homological index."""
        if not self.entries:
            return ()
        counts = [0] * (max(i for i, _, _ in self.entries) + 1)
        for i, _, beta in self.entries:
            counts[i] += beta
        return tuple(counts)

    @property
    def proj_dim(self) -> int:
        if not self.entries:
            raise ValueError("The zero ideal has no projective dimension")
        return max(i for i, _, _ in self.entries)

    @property
    def regularity(self) -> int:
        if not self.entries:
            raise ValueError("The zero ideal has no regularity")
        return max(sum(mu) - i for i, mu, _ in self.entries)


@dataclass(frozen=True)
class SupportPoset:
    """The sets C_i of a squarefree ideal ordered by inclusion.

    ``classes`` groups variables with identical C_i; ``hasse`` lists cover
    pairs (lower, upper) between class indices.
    """

    cover_sets: dict[int, frozenset[int]]
    classes: tuple[tuple[int, ...], ...]
    hasse: tuple[tuple[int, int], ...]

    @property
    def variables(self) -> tuple[int, ...]:
        return tuple(sorted(self.cover_sets))

    @cached_property
    def class_index(self) -> dict[int, int]:
        return {v: k for k, members in enumerate(self.classes) for v in members}

    def class_set(self, index: int) -> frozenset[int]:
        return self.cover_sets[self.classes[index][0]]

    def less(self, i: int, j: int) -> bool:
        """Strict order between variables: C_i is a proper subset of C_j."""
        return self.cover_sets[i] < self.cover_sets[j]


@dataclass(frozen=True)
class OrderedSupportPoset:
    """A support poset refined by a total order on the variables.

    x_i precedes x_j when C_i is a proper subset of C_j, or C_i == C_j and
    x_i comes first in ``order``. ``hasse`` lists cover pairs of variables.
    """

    base: SupportPoset
    order: tuple[int, ...]
    hasse: tuple[tuple[int, int], ...]

    @property
    def elements(self) -> tuple[int, ...]:
        return self.base.variables

    @cached_property
    def rank(self) -> dict[int, int]:
        return {v: position for position, v in enumerate(self.order)}

    @cached_property
    def cover_pairs(self) -> frozenset[tuple[int, int]]:
        return frozenset(self.hasse)

    def precedes(self, i: int, j: int) -> bool:
        ci, cj = self.base.cover_sets[i], self.base.cover_sets[j]
        return ci < cj or (ci == cj and self.rank[i] < self.rank[j])

    def comparable(self, i: int, j: int) -> bool:
        return self.precedes(i, j) or self.precedes(j, i)


@dataclass(frozen=True)
class PathPartition:
    """Ordered blocks of variables, each listed upwards along a path."""

    blocks: tuple[tuple[int, ...], ...]
    order: tuple[int, ...] | None = None

    @property
    def num_blocks(self) -> int:
        return len(self.blocks)

    @property
    def elements(self) -> frozenset[int]:
        return frozenset(v for block in self.blocks for v in block)

    def block_sets(self) -> frozenset[frozenset[int]]:
        return frozenset(frozenset(block) for block in self.blocks)


@dataclass(frozen=True)
class DepolarizationRecord:
    """A depolarization J of a squarefree ideal and the map J^P -> source."""

    source: MonomialIdeal
    partition: PathPartition
    result: MonomialIdeal
    variable_map: VariableMap


@dataclass(frozen=True)
class EnumerationResult:
    """Depolarizations of one ideal, deduplicated up to variable renaming.

    ``refinement`` holds pairs (a, b) of record indices with records[a] below
    records[b]; ``maxima`` indexes the records with the fewest variables.
    """

    records: tuple[DepolarizationRecord, ...]
    refinement: tuple[tuple[int, int], ...]
    maxima: tuple[int, ...]
    raw: tuple[DepolarizationRecord, ...] = ()

    @property
    def maximum_records(self) -> list[DepolarizationRecord]:
        return [self.records[i] for i in self.maxima]


@dataclass(frozen=True)
class CoverSetsReport:
    """Outcome of building I_Sigma from prescribed sets C_i."""

    ideal: MonomialIdeal
    condition_one: bool
    condition_two: bool
    realizes_poset: bool
    failures: tuple[str, ...] = ()

    @property
    def verified(self) -> bool:
        return self.condition_one and self.condition_two and self.realizes_poset


@dataclass(frozen=True)
class SystemSpec:
    """A multi-state coherent system.

    Minimal j-paths come either from ``paths`` (level -> exponent vectors)
    or from a named family in the reliability registry.
    """

    num_components: int
    state_counts: tuple[int, ...]
    system_levels: int
    paths: dict[int, tuple[Exponents, ...]] | None = None
    family: FamilyName | None = None
    family_params: tuple[int, ...] = ()
    names: tuple[str, ...] | None = field(default=None, compare=False)

    def __post_init__(self) -> None:
        if self.names is not None and len(self.names) != self.num_components:
            raise ValueError(f"Got {len(self.names)} names for {self.num_components} components")
        if len(self.state_counts) != self.num_components:
            raise ValueError(
                f"Expected {self.num_components} state counts, got {len(self.state_counts)}"
            )
        if any(m < 1 for m in self.state_counts):
            raise ValueError(f"Every component needs at least two states: {self.state_counts}")
        if self.system_levels < 1:
            raise ValueError(f"System needs at least one working level, got {self.system_levels}")
        if (self.paths is None) == (self.family is None):
            raise ValueError("A system needs exactly one of explicit paths or a family")
        for level, vectors in (self.paths or {}).items():
            if not 1 <= level <= self.system_levels:
                raise ValueError(f"Path level {level} outside 1..{self.system_levels}")
            for vector in vectors:
                if len(vector) != self.num_components:
                    raise ValueError(f"Path {vector} does not have {self.num_components} entries")
                if any(not 0 <= s <= m for s, m in zip(vector, self.state_counts)):
                    raise ValueError(f"Path {vector} exceeds state counts {self.state_counts}")
            for first, second in combinations(vectors, 2):
                if all(a <= b for a, b in zip(first, second)) or all(
                    b <= a for a, b in zip(first, second)
                ):
                    raise ValueError(
                        f"Minimal {level}-paths {first} and {second} are comparable"
                    )


@dataclass(frozen=True)
class ProbabilityTable:
    """Point masses p_{i,s} = Pr(component i is exactly in state s)."""

    point_masses: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self) -> None:
        for i, row in enumerate(self.point_masses):
            if any(p < 0 for p in row):
                raise ValueError(f"Negative probability for component {i + 1}: {row}")
            if sum(row) != 1:
                raise ValueError(
                    f"Probabilities of component {i + 1} sum to {sum(row)}, expected 1"
                )

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[Fraction | int | float | str]]) -> "ProbabilityTable":
        """Build from decimals, fractions or strings; floats go through str()."""
        return cls(
            tuple(
                tuple(Fraction(str(p)) if isinstance(p, float) else Fraction(p) for p in row)
                for row in rows
            )
        )

    @property
    def num_components(self) -> int:
        return len(self.point_masses)

    @property
    def state_counts(self) -> tuple[int, ...]:
        return tuple(len(row) - 1 for row in self.point_masses)

    @cached_property
    def cumulative(self) -> tuple[tuple[Fraction, ...], ...]:
        """P_{i,a} = Pr(c_i >= a) for a = 0..m_i."""
        table = []
        for row in self.point_masses:
            tail = Fraction(0)
            values = []
            for p in reversed(row):
                tail += p
                values.append(tail)
            table.append(tuple(reversed(values)))
        return tuple(table)

    def at_least(self, component: int, level: int) -> Fraction:
        row = self.cumulative[component]
        if level <= 0:
            return Fraction(1)
        if level >= len(row):
            return Fraction(0)
        return row[level]


@dataclass(frozen=True)
class BoundStep:
    """One truncation of the alternating resolution sum."""

    depth: int
    value: Fraction
    direction: BoundDirection
    brackets: bool


@dataclass(frozen=True)
class ReliabilityReport:
    """R_{S,j} = Pr(system level >= j) and r_{S,j} = R_{S,j} - R_{S,j+1}."""

    level: int
    reliability: Fraction
    point_mass: Fraction
    bounds: tuple[BoundStep, ...] = ()


@dataclass(frozen=True)
class MonteCarloEstimate:
    """Sample mean of the level indicator with its binomial standard error."""

    mean: float
    std_error: float
    trials: int
    seed: int
