"""Permutations of {0, ..., deg-1} stored as dense image tuples.

Composition is left to right: ``(p * q)(x) == q(p(x))``, the convention
of most permutation-group software.  Points are always 0-based.
"""

from __future__ import annotations

from math import lcm
from typing import Iterable, Sequence

from .errors import ValidationError


def compose(p: Sequence[int], q: Sequence[int]) -> tuple[int, ...]:
    """Raw image-tuple composition, p first then q."""
    return tuple(map(q.__getitem__, p))


def invert(p: Sequence[int]) -> tuple[int, ...]:
    inv = [0] * len(p)
    for i, pi in enumerate(p):
        inv[pi] = i
    return tuple(inv)


def identity_tuple(degree: int) -> tuple[int, ...]:
    return tuple(range(degree))


def tuple_order(p: Sequence[int]) -> int:
    """Order of a permutation, as the lcm of its cycle lengths."""
    seen = [False] * len(p)
    out = 1
    for start in range(len(p)):
        if seen[start]:
            continue
        length = 0
        j = start
        while not seen[j]:
            seen[j] = True
            j = p[j]
            length += 1
        out = lcm(out, length)
    return out


class Permutation:
    """An immutable permutation with hashing, powers and cycle output."""

    __slots__ = ("images",)

    def __init__(self, images: Iterable[int]):
        images = tuple(images)
        if sorted(images) != list(range(len(images))):
            raise ValidationError(f"not a permutation of 0..{len(images) - 1}: {images!r}")
        object.__setattr__(self, "images", images)

    @classmethod
    def identity(cls, degree: int) -> "Permutation":
        return cls(range(degree))

    @classmethod
    def from_cycles(cls, cycles: Sequence[Sequence[int]], degree: int) -> "Permutation":
        """Build a permutation from disjoint cycles on 0..degree-1."""
        images = list(range(degree))
        seen: set[int] = set()
        for cycle in cycles:
            for pt in cycle:
                if not 0 <= pt < degree:
                    raise ValidationError(f"point {pt} outside degree {degree}")
                if pt in seen:
                    raise ValidationError(f"point {pt} repeated; cycles must be disjoint")
                seen.add(pt)
            for a, b in zip(cycle, cycle[1:]):
                images[a] = b
            if cycle:
                images[cycle[-1]] = cycle[0]
        return cls(images)

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, point: int) -> int:
        return self.images[point]

    def __mul__(self, other: "Permutation") -> "Permutation":
        if self.degree != other.degree:
            raise ValidationError("cannot compose permutations of different degrees")
        p = Permutation.__new__(Permutation)
        object.__setattr__(p, "images", compose(self.images, other.images))
        return p

    def inverse(self) -> "Permutation":
        p = Permutation.__new__(Permutation)
        object.__setattr__(p, "images", invert(self.images))
        return p

    def __pow__(self, k: int) -> "Permutation":
        if k < 0:
            return self.inverse() ** (-k)
        result = identity_tuple(self.degree)
        base = self.images
        while k:
            if k & 1:
                result = compose(result, base)
            base = compose(base, base)
            k >>= 1
        p = Permutation.__new__(Permutation)
        object.__setattr__(p, "images", result)
        return p

    def order(self) -> int:
        return tuple_order(self.images)

    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self.images))

    def cycles(self) -> list[tuple[int, ...]]:
        """Nontrivial cycles, each starting at its smallest point."""
        seen = [False] * self.degree
        out = []
        for start in range(self.degree):
            if seen[start] or self.images[start] == start:
                seen[start] = True
                continue
            cycle = [start]
            j = self.images[start]
            seen[start] = True
            while j != start:
                seen[j] = True
                cycle.append(j)
                j = self.images[j]
            out.append(tuple(cycle))
        return out

    def cycle_string(self) -> str:
        cycles = self.cycles()
        if not cycles:
            return "()"
        return "".join("(" + " ".join(map(str, c)) + ")" for c in cycles)

    def __eq__(self, other) -> bool:
        return isinstance(other, Permutation) and self.images == other.images

    def __lt__(self, other: "Permutation") -> bool:
        return self.images < other.images

    def __hash__(self) -> int:
        return hash(self.images)

    def __repr__(self) -> str:
        return f"Permutation[{self.cycle_string()}, deg={self.degree}]"

    def __setattr__(self, name, value):
        raise AttributeError("Permutation is immutable")
