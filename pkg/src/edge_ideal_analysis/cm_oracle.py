"""Cohen-Macaulay oracle for monomial ideals.

The ideal is polarized to a squarefree ideal, its Stanley-Reisner complex is
built explicitly, and Reisner's criterion is checked: every link must have
vanishing reduced homology below its dimension.
"""

import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Optional, Sequence, Tuple

from .exceptions import BoundExceeded, NotSquarefree, UnitIdeal
from .linear_algebra import FieldChoice
from .models import Bounds, OracleResult, ReisnerWitness
from .monomial_ideal import Monomial, MonomialIdeal, minimalize
from .simplicial import SimplicialComplex

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class PolarizedIdeal:
    """A squarefree ideal with the provenance of each variable.

    Attributes:
        ideal: The polarization.
        lineage: For each new variable, ``(original variable, copy)`` with copies
            numbered from 1.
    """

    ideal: MonomialIdeal
    lineage: Tuple[Tuple[int, int], ...]

    def names(self, original: Optional[Sequence[str]] = None) -> Tuple[str, ...]:
        return tuple(
            f"{original[v] if original is not None else f'x{v}'}_{copy}"
            for v, copy in self.lineage
        )


def polarize(ideal: MonomialIdeal) -> PolarizedIdeal:
    """Replaces each ``x^a`` by ``x_1 ... x_a``.

    Variables absent from every generator keep a single copy, so a squarefree
    ideal polarizes to itself.
    """
    largest = ideal.max_exponents()
    offset = {}
    lineage = []
    for variable in range(ideal.ambient):
        offset[variable] = len(lineage)
        copies = largest.get(variable, 1)
        lineage.extend((variable, copy) for copy in range(1, copies + 1))
    generators = [
        Monomial.from_variables(
            offset[variable] + step
            for variable, exponent in generator.exponents
            for step in range(exponent)
        )
        for generator in ideal.generators
    ]
    return PolarizedIdeal(minimalize(generators, len(lineage)), tuple(lineage))


def stanley_reisner(
    ideal: MonomialIdeal, *, bounds: Bounds = Bounds()
) -> SimplicialComplex:
    """The complex of variable sets containing no generator's support.

    Raises:
        NotSquarefree: If some generator has an exponent above 1.
        BoundExceeded: If the ring or the complex is above its bound.
    """
    if not ideal.is_squarefree:
        raise NotSquarefree(f"{ideal.format()} is not squarefree")
    if ideal.ambient > bounds.polarized_ground:
        raise BoundExceeded("polarized_ground", ideal.ambient, bounds.polarized_ground)
    nonfaces = [
        sum(1 << variable for variable, _ in generator.exponents)
        for generator in ideal.generators
    ]
    return SimplicialComplex.from_minimal_nonfaces(
        ideal.ambient, nonfaces, face_bound=bounds.homology_faces
    )


def reduced_homology_ranks(complex_: SimplicialComplex, field: FieldChoice):
    """Reduced Betti numbers in degrees ``-1..dim`` over ``field``."""
    return complex_.reduced_homology_ranks(field)


def reisner_witness(
    complex_: SimplicialComplex, field: FieldChoice
) -> Optional[ReisnerWitness]:
    """First face, by size then bitmask, whose link has homology below its dimension."""
    for face in complex_.ordered_faces():
        link = complex_.link(face)
        # links of dimension <= 0 have no forbidden degree with a vertex present
        if link.dimension <= 0:
            continue
        found = link.first_low_homology(field)
        if found is not None:
            degree, rank = found
            logger.debug("Reisner witness at face %s in degree %d", bin(face), degree)
            return ReisnerWitness(
                face=tuple(v for v in range(complex_.ground) if face >> v & 1),
                dimension=degree,
                rank=rank,
            )
    return None


def _restrict_to_support(ideal: MonomialIdeal) -> MonomialIdeal:
    support = sorted(ideal.support)
    position = {old: new for new, old in enumerate(support)}
    return minimalize(
        (
            Monomial(tuple((position[v], e) for v, e in generator.exponents))
            for generator in ideal.generators
        ),
        len(support),
    )


@lru_cache(maxsize=4096)
def _check(ideal: MonomialIdeal, field: FieldChoice, bounds: Bounds) -> OracleResult:
    polarized = polarize(ideal).ideal
    # variables outside the support are cone points
    restricted = _restrict_to_support(polarized)
    complex_ = stanley_reisner(restricted, bounds=bounds)
    witness = reisner_witness(complex_, field)
    return OracleResult(
        cohen_macaulay=witness is None,
        field=field.label,
        polarized_ground=restricted.ambient,
        witness=witness,
    )


def oracle_check(
    ideal: MonomialIdeal,
    field: FieldChoice = FieldChoice(),
    *,
    bounds: Bounds = Bounds(),
) -> OracleResult:
    """Decides Cohen-Macaulayness of ``R/I`` over ``field`` with a failing face.

    The witness face is given in the variables of the polarized ideal restricted
    to its support.

    Raises:
        UnitIdeal: For the unit ideal.
        BoundExceeded: If the polarized support or the complex is too large.
    """
    if ideal.is_unit:
        raise UnitIdeal("R/(1) is the zero ring")
    result = _check(ideal, field, bounds)
    logger.debug(
        "Oracle over %s on %d polarized variables: %s",
        result.field,
        result.polarized_ground,
        result.cohen_macaulay,
    )
    return result


def is_cohen_macaulay(
    ideal: MonomialIdeal,
    field: FieldChoice = FieldChoice(),
    *,
    bounds: Bounds = Bounds(),
) -> bool:
    return oracle_check(ideal, field, bounds=bounds).cohen_macaulay
