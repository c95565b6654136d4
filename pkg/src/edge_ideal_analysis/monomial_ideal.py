"""Exact monomial ideal arithmetic.

Monomials are sparse exponent vectors over variable indices ``0..ambient-1``.
Ideals are stored by their minimal generators in a canonical order, so two
ideals are equal exactly when their dataclasses compare equal.
"""

from __future__ import annotations

import logging
import re
from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Dict, FrozenSet, Iterable, List, Mapping, Optional, Sequence, Tuple

from .exceptions import (
    AmbientMismatch,
    ExponentOverflow,
    ParseError,
    UnitIdeal,
    ZeroIdeal,
)

logger = logging.getLogger(__name__)

MAX_EXPONENT = 2**63 - 1

_FACTOR = re.compile(r"^([A-Za-z_][A-Za-z0-9_]*)(?:\^(\d+))?$")


def _checked(exponent: int) -> int:
    if exponent > MAX_EXPONENT:
        raise ExponentOverflow(f"exponent {exponent} exceeds 64-bit range")
    return exponent


@dataclass(frozen=True, order=True)
class Monomial:
    """A monomial as sorted ``(variable, exponent)`` pairs with positive exponents.

    The unit monomial has no pairs.
    """

    exponents: Tuple[Tuple[int, int], ...] = ()

    def __post_init__(self):
        previous = -1
        for variable, exponent in self.exponents:
            if variable <= previous:
                raise ValueError("monomial exponents must be sorted by variable")
            if exponent <= 0:
                raise ValueError("monomial exponents must be positive")
            _checked(exponent)
            previous = variable

    @classmethod
    def one(cls) -> Monomial:
        return cls(())

    @classmethod
    def variable(cls, index: int, exponent: int = 1) -> Monomial:
        return cls(((index, exponent),))

    @classmethod
    def from_dict(cls, exponents: Mapping[int, int]) -> Monomial:
        """Builds a monomial, dropping zero exponents."""
        return cls(tuple(sorted((v, e) for v, e in exponents.items() if e)))

    @classmethod
    def from_variables(cls, variables: Iterable[int]) -> Monomial:
        """The squarefree monomial on a set of variables."""
        return cls(tuple((v, 1) for v in sorted(set(variables))))

    @cached_property
    def as_dict(self) -> Dict[int, int]:
        return dict(self.exponents)

    @property
    def support(self) -> FrozenSet[int]:
        return frozenset(self.as_dict)

    @property
    def total_degree(self) -> int:
        return sum(exponent for _, exponent in self.exponents)

    @property
    def is_one(self) -> bool:
        return not self.exponents

    @property
    def is_pure_power(self) -> bool:
        return len(self.exponents) == 1

    @property
    def is_squarefree(self) -> bool:
        return all(exponent == 1 for _, exponent in self.exponents)

    def degree(self, variable: int) -> int:
        """Exponent of ``variable`` (0 when absent)."""
        return self.as_dict.get(variable, 0)

    def divides(self, other: Monomial) -> bool:
        mine = self.exponents
        if len(mine) > len(other.exponents):
            return False
        theirs = other.as_dict
        return all(theirs.get(v, 0) >= e for v, e in mine)

    def __mul__(self, other: Monomial) -> Monomial:
        merged = dict(self.as_dict)
        for variable, exponent in other.exponents:
            merged[variable] = _checked(merged.get(variable, 0) + exponent)
        return Monomial.from_dict(merged)

    def gcd(self, other: Monomial) -> Monomial:
        theirs = other.as_dict
        return Monomial.from_dict(
            {v: min(e, theirs[v]) for v, e in self.exponents if v in theirs}
        )

    def lcm(self, other: Monomial) -> Monomial:
        merged = dict(self.as_dict)
        for variable, exponent in other.exponents:
            merged[variable] = max(merged.get(variable, 0), exponent)
        return Monomial.from_dict(merged)

    def quotient(self, other: Monomial) -> Monomial:
        """``self / gcd(self, other)``, the colon of a principal ideal by ``other``."""
        theirs = other.as_dict
        return Monomial.from_dict(
            {v: e - min(e, theirs.get(v, 0)) for v, e in self.exponents}
        )

    def radical(self) -> Monomial:
        return Monomial(tuple((v, 1) for v, _ in self.exponents))

    def format(self, names: Optional[Sequence[str]] = None) -> str:
        """Renders as ``x*y^2``; variables default to ``x0, x1, ...``."""
        if self.is_one:
            return "1"
        factors = []
        for variable, exponent in self.exponents:
            name = names[variable] if names is not None else f"x{variable}"
            factors.append(name if exponent == 1 else f"{name}^{exponent}")
        return "*".join(factors)


def minimalize(generators: Iterable[Monomial], ambient: int) -> MonomialIdeal:
    """Returns the ideal generated by ``generators`` with its minimal generators.

    Args:
        generators: Any monomials; duplicates and multiples are dropped.
        ambient: Number of variables of the polynomial ring.
    """
    kept: List[Monomial] = []
    for candidate in sorted(set(generators), key=lambda m: (m.total_degree, m)):
        if not any(existing.divides(candidate) for existing in kept):
            kept.append(candidate)
    return MonomialIdeal(tuple(sorted(kept)), ambient)


@dataclass(frozen=True)
class MonomialIdeal:
    """A monomial ideal given by its minimal generators.

    Attributes:
        generators: Divisibility antichain in canonical (sorted) order.
        ambient: Number of variables of the polynomial ring.
    """

    generators: Tuple[Monomial, ...]
    ambient: int

    def __post_init__(self):
        for generator in self.generators:
            if generator.exponents and generator.exponents[-1][0] >= self.ambient:
                raise AmbientMismatch(
                    f"generator {generator.format()} uses a variable outside "
                    f"the {self.ambient}-variable ring"
                )

    @classmethod
    def zero(cls, ambient: int) -> MonomialIdeal:
        return cls((), ambient)

    @property
    def is_zero(self) -> bool:
        return not self.generators

    @property
    def is_unit(self) -> bool:
        return any(generator.is_one for generator in self.generators)

    @property
    def is_squarefree(self) -> bool:
        return all(generator.is_squarefree for generator in self.generators)

    @property
    def support(self) -> FrozenSet[int]:
        """Variables that occur in some generator."""
        return frozenset(
            v for generator in self.generators for v, _ in generator.exponents
        )

    def max_exponents(self) -> Dict[int, int]:
        """Largest exponent of each variable over the generators."""
        largest: Dict[int, int] = {}
        for generator in self.generators:
            for variable, exponent in generator.exponents:
                largest[variable] = max(largest.get(variable, 0), exponent)
        return largest

    def contains(self, monomial: Monomial) -> bool:
        return any(generator.divides(monomial) for generator in self.generators)

    def colon(self, monomial: Monomial) -> MonomialIdeal:
        """The colon ideal ``I : f``."""
        return minimalize((g.quotient(monomial) for g in self.generators), self.ambient)

    def add(self, other: MonomialIdeal) -> MonomialIdeal:
        """The sum ``I + J``."""
        if other.ambient != self.ambient:
            raise AmbientMismatch(f"ambient {self.ambient} != {other.ambient}")
        return minimalize(self.generators + other.generators, self.ambient)

    def add_generators(self, *monomials: Monomial) -> MonomialIdeal:
        return minimalize(self.generators + tuple(monomials), self.ambient)

    def radical(self) -> MonomialIdeal:
        return minimalize((g.radical() for g in self.generators), self.ambient)

    def intersection(self, other: MonomialIdeal) -> MonomialIdeal:
        """``I ∩ J`` via pairwise lcm of generators."""
        if other.ambient != self.ambient:
            raise AmbientMismatch(f"ambient {self.ambient} != {other.ambient}")
        return minimalize(
            (a.lcm(b) for a in self.generators for b in other.generators),
            self.ambient,
        )

    def format(self, names: Optional[Sequence[str]] = None) -> str:
        if self.is_zero:
            return "(0)"
        return "(" + ", ".join(g.format(names) for g in self.generators) + ")"


def contains(ideal: MonomialIdeal, monomial: Monomial) -> bool:
    return ideal.contains(monomial)


def colon(ideal: MonomialIdeal, monomial: Monomial) -> MonomialIdeal:
    return ideal.colon(monomial)


def ideal_sum(first: MonomialIdeal, second: MonomialIdeal) -> MonomialIdeal:
    return first.add(second)


def radical(ideal: MonomialIdeal) -> MonomialIdeal:
    return ideal.radical()


def intersection(ideals: Sequence[MonomialIdeal]) -> MonomialIdeal:
    """Intersection of one or more ideals in the same ring."""
    result = ideals[0]
    for other in ideals[1:]:
        result = result.intersection(other)
    return result


@dataclass(frozen=True, order=True)
class IrreducibleComponent:
    """The irreducible ideal generated by pure powers ``x_i^{a_i}``.

    Attributes:
        entries: Sorted ``(variable, exponent)`` pairs.
    """

    entries: Tuple[Tuple[int, int], ...]

    @property
    def prime(self) -> FrozenSet[int]:
        """Variables of the radical, the associated prime."""
        return frozenset(variable for variable, _ in self.entries)

    def is_contained_in(self, other: IrreducibleComponent) -> bool:
        """True iff this component is a subset of ``other`` as an ideal."""
        theirs = dict(other.entries)
        return all(v in theirs and theirs[v] <= e for v, e in self.entries)

    def as_ideal(self, ambient: int) -> MonomialIdeal:
        return minimalize((Monomial.variable(v, e) for v, e in self.entries), ambient)

    def format(self, names: Optional[Sequence[str]] = None) -> str:
        return self.as_ideal(max(v for v, _ in self.entries) + 1).format(names)


def components_intersection(
    components: Sequence[IrreducibleComponent], ambient: int
) -> MonomialIdeal:
    """Intersection of irreducible components as an ideal on ``ambient`` variables."""
    return intersection([component.as_ideal(ambient) for component in components])


@lru_cache(maxsize=1 << 16)
def _split(generators: Tuple[Monomial, ...]) -> FrozenSet[IrreducibleComponent]:
    """Splits on the first non pure power at its lowest variable."""
    for generator in generators:
        if not generator.is_pure_power:
            variable, exponent = generator.exponents[0]
            power = Monomial.variable(variable, exponent)
            rest = Monomial(generator.exponents[1:])
            ambient = max(v for g in generators for v, _ in g.exponents) + 1
            ideal = MonomialIdeal(generators, ambient)
            return _split(ideal.add_generators(power).generators) | _split(
                ideal.add_generators(rest).generators
            )
    return frozenset({IrreducibleComponent(tuple(g.exponents[0] for g in generators))})


def _require_proper_nonzero(ideal: MonomialIdeal) -> None:
    if ideal.is_zero:
        raise ZeroIdeal("the zero ideal has no irreducible components")
    if ideal.is_unit:
        raise UnitIdeal("the unit ideal has no irreducible components")


def irreducible_decomposition(ideal: MonomialIdeal) -> List[IrreducibleComponent]:
    """Irredundant decomposition into irreducible components.

    Components that contain another component are dropped; what remains is
    irredundant because irreducible monomial ideals are meet-prime in the lattice
    of monomial ideals.

    Raises:
        ZeroIdeal: For the zero ideal.
        UnitIdeal: For the unit ideal.
    """
    _require_proper_nonzero(ideal)
    components = sorted(_split(ideal.generators))
    minimal = [
        component
        for component in components
        if not any(
            other != component and other.is_contained_in(component)
            for other in components
        )
    ]
    return sorted(minimal, key=lambda c: (len(c.entries), c.entries))


def associated_primes(ideal: MonomialIdeal) -> List[FrozenSet[int]]:
    """Distinct radicals of the irredundant components, smallest first."""
    primes = {component.prime for component in irreducible_decomposition(ideal)}
    return sorted(primes, key=lambda prime: (len(prime), sorted(prime)))


def height(ideal: MonomialIdeal) -> int:
    return min(len(prime) for prime in associated_primes(ideal))


def dimension(ideal: MonomialIdeal) -> int:
    """Krull dimension of ``R/I``; the zero ideal gives the ambient dimension."""
    if ideal.is_zero:
        return ideal.ambient
    if ideal.is_unit:
        raise UnitIdeal("R/(1) is the zero ring")
    return ideal.ambient - height(ideal)


def is_unmixed_ideal(ideal: MonomialIdeal) -> bool:
    """True iff all associated primes have the same height."""
    return len({len(prime) for prime in associated_primes(ideal)}) == 1


def parse_monomial(text: str, names: Dict[str, int]) -> Monomial:
    """Parses ``x*y^2``; new variable names are appended to ``names``."""
    text = text.strip()
    if text == "1":
        return Monomial.one()
    exponents: Dict[int, int] = {}
    for factor in text.split("*"):
        match = _FACTOR.match(factor.strip())
        if not match:
            raise ParseError(0, f"cannot read monomial factor '{factor.strip()}'")
        name, power = match.group(1), int(match.group(2) or 1)
        if power == 0:
            continue
        index = names.setdefault(name, len(names))
        exponents[index] = _checked(exponents.get(index, 0) + power)
    return Monomial.from_dict(exponents)


def parse_ideal(
    text: str, names: Optional[Sequence[str]] = None
) -> Tuple[MonomialIdeal, Tuple[str, ...]]:
    """Parses a comma separated generator list such as ``x*y^2, y*z^2``.

    Args:
        text: Generators, optionally wrapped in parentheses; ``0`` is the zero ideal.
        names: Variable names fixing the variable order; unknown names are
            appended in order of appearance.

    Returns:
        The minimalized ideal and the variable names.
    """
    table: Dict[str, int] = {name: i for i, name in enumerate(names or ())}
    body = text.strip()
    if body.startswith("(") and body.endswith(")"):
        body = body[1:-1]
    parts = [part for part in body.split(",") if part.strip()]
    if parts == ["0"] or not parts:
        return MonomialIdeal.zero(len(table)), tuple(table)
    monomials = [parse_monomial(part, table) for part in parts]
    return minimalize(monomials, len(table)), tuple(table)
