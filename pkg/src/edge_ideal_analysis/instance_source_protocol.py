"""Defines the protocol for instance sources."""

from dataclasses import dataclass
from typing import FrozenSet, Iterator, Optional, Protocol, Tuple

from .graph import Graph


@dataclass(frozen=True)
class Template:
    """An underlying graph to expand into oriented instances.

    Attributes:
        underlying: The graph.
        arcs: A fixed orientation; every orientation is expanded when None.
        weights: Baseline weights used when the weight alphabet is empty.
    """

    underlying: Graph
    arcs: Optional[FrozenSet[Tuple[int, int]]] = None
    weights: Optional[Tuple[int, ...]] = None


class InstanceSource(Protocol):
    """Protocol for families of underlying graphs fed to the harness."""

    name: str

    def templates(self) -> Iterator[Template]:
        """Yields the graphs of the family, with any fixed orientation or weights."""
        ...
