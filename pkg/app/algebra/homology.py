# app/algebra/homology.py

from dataclasses import dataclass
from typing import Iterable

from app.algebra.linalg import rank_over
from app.algebra.monomials import RATIONALS, Field


@dataclass(frozen=True)
class SimplicialComplex:
    """
    Faces are bitmasks over positions in `vertices`. The void complex has no
    faces at all; the complex {∅} holds only the empty face (mask 0).
    """

    vertices: tuple[int, ...]
    faces: frozenset[int]

    @classmethod
    def from_faces(cls, vertices: Iterable[int], faces: Iterable[Iterable[int]]) -> "SimplicialComplex":
        vertices = tuple(vertices)
        position = {v: i for i, v in enumerate(vertices)}
        masks = set()
        for face in faces:
            mask = 0
            for v in face:
                mask |= 1 << position[v]
            masks.add(mask)
        # close downward
        closed = set()
        for mask in masks:
            sub = mask
            while True:
                closed.add(sub)
                if sub == 0:
                    break
                sub = (sub - 1) & mask
        return cls(vertices, frozenset(closed))

    @property
    def is_void(self) -> bool:
        return not self.faces

    @property
    def dimension(self) -> int:
        if self.is_void:
            return -2
        return max(bin(f).count("1") for f in self.faces) - 1

    def faces_of_dim(self, k: int) -> list[int]:
        return sorted(f for f in self.faces if bin(f).count("1") == k + 1)

    def face_sets(self) -> set[tuple[int, ...]]:
        return {
            tuple(v for i, v in enumerate(self.vertices) if f >> i & 1) for f in self.faces
        }

    def is_cone(self) -> bool:
        """True when some vertex joins every face; cones are acyclic."""
        if self.is_void:
            return False
        for i in range(len(self.vertices)):
            bit = 1 << i
            if bit in self.faces and all((f | bit) in self.faces for f in self.faces):
                return True
        return False


def _boundary_rows(upper: list[int], lower_index: dict[int, int]) -> list[list[int]]:
    rows = []
    for face in upper:
        row = [0] * len(lower_index)
        sign = 1
        bits = face
        pos = 0
        while bits:
            if bits & 1:
                row[lower_index[face & ~(1 << pos)]] = sign
                sign = -sign
            bits >>= 1
            pos += 1
        rows.append(row)
    return rows


def reduced_homology_dims(C: SimplicialComplex, field: Field = RATIONALS) -> tuple[int, ...]:
    """dims of H̃_{-1}, H̃_0, ..., H̃_{dim C}; the void complex gives (0,)."""
    if C.is_void:
        return (0,)

    top = C.dimension
    chains = {k: C.faces_of_dim(k) for k in range(-1, top + 1)}
    ranks = {k: 0 for k in range(-1, top + 2)}
    for k in range(0, top + 1):
        lower_index = {f: i for i, f in enumerate(chains[k - 1])}
        rows = _boundary_rows(chains[k], lower_index)
        ranks[k] = rank_over(rows, field.characteristic) if rows else 0

    return tuple(
        len(chains[k]) - ranks[k] - ranks[k + 1] for k in range(-1, top + 1)
    )
