"""Exact matrix rank over the rationals or a prime field."""

import logging
from dataclasses import dataclass
from typing import Dict, Optional, Tuple

from sympy import GF, QQ, ZZ, isprime
from sympy.polys.matrices import DomainMatrix

logger = logging.getLogger(__name__)

SparseRows = Dict[int, Dict[int, int]]


@dataclass(frozen=True)
class FieldChoice:
    """Coefficient field for homology: the rationals, or GF(p) when ``prime`` is set."""

    prime: Optional[int] = None

    def __post_init__(self):
        if self.prime is None:
            return
        if not isprime(self.prime):
            raise ValueError(f"field characteristic must be prime, got {self.prime}")

    @classmethod
    def parse(cls, text: str) -> "FieldChoice":
        """Reads ``q`` for the rationals or ``p:N`` for GF(N)."""
        value = str(text).strip().lower()
        if value in ("q", "qq", "rationals"):
            return cls()
        if value.startswith("p:"):
            try:
                return cls(int(value[2:]))
            except ValueError as exception:
                raise ValueError(f"invalid field '{text}': {exception}") from exception
        raise ValueError(f"invalid field '{text}': expected 'q' or 'p:N'")

    @property
    def label(self) -> str:
        return "q" if self.prime is None else f"p:{self.prime}"

    @property
    def characteristic(self) -> int:
        return self.prime or 0


def _integer_matrix(rows: SparseRows, shape: Tuple[int, int]) -> DomainMatrix:
    return DomainMatrix(
        {i: {j: ZZ(v) for j, v in row.items() if v} for i, row in rows.items()},
        shape,
        ZZ,
    )


def matrix_rank(rows: SparseRows, shape: Tuple[int, int], field: FieldChoice) -> int:
    """Rank of a sparse integer matrix over ``field``.

    Args:
        rows: Nonzero entries as ``{row: {column: value}}``.
        shape: ``(rows, columns)``.
        field: The coefficient field.
    """
    if shape[0] == 0 or shape[1] == 0 or not rows:
        return 0
    domain = QQ if field.prime is None else GF(field.prime)
    return _integer_matrix(rows, shape).convert_to(domain).rank()
