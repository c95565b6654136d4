"""Finite simplicial complexes stored as sets of face bitmasks."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import cached_property
from typing import Dict, FrozenSet, Iterable, List, Optional, Tuple

from .exceptions import BoundExceeded
from .graph import Graph, connected_components, iter_bits
from .linear_algebra import FieldChoice, SparseRows, matrix_rank
from .models import DEFAULT_FACE_BOUND

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SimplicialComplex:
    """A simplicial complex on the vertices ``0..ground-1``.

    Attributes:
        ground: Number of ground vertices (not all need to be faces).
        faces: Face bitmasks; the empty face ``0`` is present unless the complex
            is void.
    """

    ground: int
    faces: FrozenSet[int]

    @classmethod
    def from_minimal_nonfaces(
        cls,
        ground: int,
        nonfaces: Iterable[int],
        *,
        face_bound: int = DEFAULT_FACE_BOUND,
    ) -> SimplicialComplex:
        """Builds the complex of all sets containing none of ``nonfaces``.

        Raises:
            BoundExceeded: If the complex has more than ``face_bound`` faces.
        """
        nonfaces = tuple(nonfaces)
        if 0 in nonfaces:
            return cls(ground, frozenset())
        faces = [0]
        stack = [(0, 0)]
        while stack:
            face, start = stack.pop()
            for vertex in range(start, ground):
                grown = face | 1 << vertex
                if any(nonface & grown == nonface for nonface in nonfaces):
                    continue
                faces.append(grown)
                if len(faces) > face_bound:
                    raise BoundExceeded("faces", len(faces), face_bound)
                stack.append((grown, vertex + 1))
        return cls(ground, frozenset(faces))

    @cached_property
    def by_size(self) -> Dict[int, Tuple[int, ...]]:
        """Faces grouped by cardinality, each group sorted."""
        groups: Dict[int, List[int]] = {}
        for face in self.faces:
            groups.setdefault(face.bit_count(), []).append(face)
        return {size: tuple(sorted(group)) for size, group in groups.items()}

    @property
    def is_void(self) -> bool:
        return not self.faces

    @property
    def dimension(self) -> int:
        """Largest face size minus one; -1 for ``{∅}`` and the void complex."""
        return max(self.by_size, default=0) - 1

    @cached_property
    def vertex_mask(self) -> int:
        mask = 0
        for face in self.by_size.get(1, ()):
            mask |= face
        return mask

    def ordered_faces(self) -> List[int]:
        """Faces by size, then by bitmask."""
        return [face for size in sorted(self.by_size) for face in self.by_size[size]]

    def facets(self) -> List[int]:
        """Maximal faces, in `ordered_faces` order."""
        return [
            face
            for face in self.ordered_faces()
            if not any(
                face | 1 << v in self.faces
                for v in range(self.ground)
                if not face >> v & 1
            )
        ]

    def is_pure(self) -> bool:
        return len({facet.bit_count() for facet in self.facets()}) <= 1

    def link(self, face: int) -> SimplicialComplex:
        """``lk(F) = {G \\ F : G ⊇ F}``; same ground set."""
        if face not in self.faces:
            raise ValueError(f"{tuple(iter_bits(face))} is not a face")
        return SimplicialComplex(
            self.ground,
            frozenset(other ^ face for other in self.faces if other & face == face),
        )

    def _boundary_rank(self, degree: int, field: FieldChoice) -> int:
        """Rank of the boundary map from ``degree``-chains to ``degree-1``-chains."""
        if degree == 0:
            return 1 if self.vertex_mask else 0
        if degree == 1:
            edges = self.by_size.get(2, ())
            if not edges:
                return 0
            skeleton = Graph.from_edges(
                [str(v) for v in range(self.ground)],
                (tuple(iter_bits(edge)) for edge in edges),
            )
            return self.vertex_mask.bit_count() - len(
                connected_components(skeleton, self.vertex_mask)
            )
        upper = self.by_size.get(degree + 1, ())
        lower = self.by_size.get(degree, ())
        if not upper or not lower:
            return 0
        index = {face: position for position, face in enumerate(lower)}
        rows: SparseRows = {}
        for row, face in enumerate(upper):
            entries = {}
            for position, vertex in enumerate(iter_bits(face)):
                entries[index[face ^ 1 << vertex]] = -1 if position % 2 else 1
            rows[row] = entries
        return matrix_rank(rows, (len(upper), len(lower)), field)

    def reduced_homology_rank(self, degree: int, field: FieldChoice) -> int:
        """Rank of reduced homology in ``degree`` (>= -1) over ``field``."""
        chains = len(self.by_size.get(degree + 1, ()))
        if chains == 0:
            return 0
        if degree == -1:
            return 1 - self._boundary_rank(0, field)
        return (
            chains
            - self._boundary_rank(degree, field)
            - self._boundary_rank(degree + 1, field)
        )

    def reduced_homology_ranks(self, field: FieldChoice) -> List[int]:
        """Reduced Betti numbers in degrees ``-1..dimension``."""
        return [
            self.reduced_homology_rank(degree, field)
            for degree in range(-1, self.dimension + 1)
        ]

    def first_low_homology(self, field: FieldChoice) -> Optional[Tuple[int, int]]:
        """First ``(degree, rank)`` with nonzero homology below the dimension."""
        for degree in range(-1, self.dimension):
            rank = self.reduced_homology_rank(degree, field)
            if rank:
                return degree, rank
        return None
