"""Points and lines of PG(2,q) in canonical form, with incidence.

Coordinate triples are normalized so that the first nonzero coordinate is 1.
The point enumeration order is fixed and defines row indices everywhere:
(0,0,1); then (0,1,c) for c ascending; then (1,b,c) for (b,c) ascending
lexicographically (by integer encoding).  Lines use the same normalized
triples (Plücker coordinates, dual to points).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .field import FieldElement, FieldSpec


def _normalize(coords: tuple[FieldElement, ...]) -> tuple[FieldElement, ...]:
    for c in coords:
        if not c.is_zero():
            s = c.inv()
            return tuple(s * x for x in coords)
    raise ValueError("projective coordinates cannot be all zero")


@dataclass(frozen=True)
class ProjPoint:
    coords: tuple[FieldElement, FieldElement, FieldElement]

    @classmethod
    def make(cls, a, b, c) -> "ProjPoint":
        return cls(_normalize((a, b, c)))

    @classmethod
    def from_encodings(cls, spec: FieldSpec, a: int, b: int, c: int) -> "ProjPoint":
        return cls.make(spec.element(a), spec.element(b), spec.element(c))

    @property
    def spec(self) -> FieldSpec:
        return self.coords[0].spec

    def encodings(self) -> tuple[int, int, int]:
        return tuple(c.encoding for c in self.coords)

    def __str__(self):
        return " ".join(str(c.encoding) for c in self.coords)


@dataclass(frozen=True)
class ProjLine:
    coords: tuple[FieldElement, FieldElement, FieldElement]

    @classmethod
    def make(cls, u, v, w) -> "ProjLine":
        return cls(_normalize((u, v, w)))

    @classmethod
    def from_encodings(cls, spec: FieldSpec, u: int, v: int, w: int) -> "ProjLine":
        return cls.make(spec.element(u), spec.element(v), spec.element(w))

    @property
    def spec(self) -> FieldSpec:
        return self.coords[0].spec

    def encodings(self) -> tuple[int, int, int]:
        return tuple(c.encoding for c in self.coords)

    def __str__(self):
        return " ".join(str(c.encoding) for c in self.coords)


def _canonical_triples(spec: FieldSpec):
    els = spec.elements()
    one = spec.one()
    zero = spec.zero()
    out = [(zero, zero, one)]
    for c in els:
        out.append((zero, one, c))
    for b in els:
        for c in els:
            out.append((one, b, c))
    return out


@lru_cache(maxsize=None)
def enumerate_points(spec: FieldSpec) -> tuple[ProjPoint, ...]:
    """All q^2+q+1 points in the canonical enumeration order."""
    return tuple(ProjPoint(t) for t in _canonical_triples(spec))


@lru_cache(maxsize=None)
def enumerate_lines(spec: FieldSpec) -> tuple[ProjLine, ...]:
    """All q^2+q+1 lines; by duality the same triples as the points."""
    return tuple(ProjLine(t) for t in _canonical_triples(spec))


@lru_cache(maxsize=None)
def point_index(spec: FieldSpec) -> dict:
    return {P: i for i, P in enumerate(enumerate_points(spec))}


@lru_cache(maxsize=None)
def line_index(spec: FieldSpec) -> dict:
    return {l: i for i, l in enumerate(enumerate_lines(spec))}


def incident(P: ProjPoint, line: ProjLine) -> bool:
    """True iff u*a + v*b + w*c = 0."""
    if P.spec != line.spec:
        raise ValueError("field mismatch")
    acc = P.spec.zero()
    for x, y in zip(P.coords, line.coords):
        acc = acc + x * y
    return acc.is_zero()


def line_points(line: ProjLine, spec: FieldSpec) -> list[ProjPoint]:
    """The q+1 points on the line, in enumeration order."""
    return [P for P in enumerate_points(spec) if incident(P, line)]


def pencil_lines(P: ProjPoint, spec: FieldSpec) -> list[ProjLine]:
    """The q+1 lines through P, in enumeration order."""
    return [l for l in enumerate_lines(spec) if incident(P, l)]


@lru_cache(maxsize=None)
def incidence_matrix(spec: FieldSpec) -> np.ndarray:
    """0/1 matrix, rows = points, columns = lines, in enumeration order."""
    points = enumerate_points(spec)
    lines = enumerate_lines(spec)
    M = np.zeros((len(points), len(lines)), dtype=np.int64)
    for i, P in enumerate(points):
        for j, l in enumerate(lines):
            if incident(P, l):
                M[i, j] = 1
    return M
