"""Point multisets with multiplicities mod p and the multiset sum.

A multiset is a dense multiplicity vector over {0,...,p-1}, indexed by the
canonical point enumeration.  Under entrywise sum mod p the multisets form
an abelian p-group of order p^(q^2+q+1); mapping a multiset to its power
sum polynomial is a group homomorphism into the polynomial space.
"""

from __future__ import annotations

from dataclasses import dataclass

from .field import FieldSpec
from .plane import ProjPoint, enumerate_points, point_index
from . import poly


@dataclass(frozen=True)
class PointMultiset:
    spec: FieldSpec
    mult: tuple[int, ...]

    def __post_init__(self):
        n = self.spec.q**2 + self.spec.q + 1
        if len(self.mult) != n:
            raise ValueError(f"multiplicity vector must have length {n}")
        if any(not 0 <= m < self.spec.p for m in self.mult):
            raise ValueError("multiplicities must lie in {0,...,p-1}")

    @classmethod
    def empty(cls, spec: FieldSpec) -> "PointMultiset":
        return cls(spec, (0,) * (spec.q**2 + spec.q + 1))

    @classmethod
    def full_plane(cls, spec: FieldSpec) -> "PointMultiset":
        return cls(spec, (1,) * (spec.q**2 + spec.q + 1))

    @classmethod
    def from_points(cls, spec: FieldSpec, points) -> "PointMultiset":
        """Multiset of the given points, each occurrence adding 1 (mod p)."""
        idx = point_index(spec)
        mult = [0] * (spec.q**2 + spec.q + 1)
        for P in points:
            mult[idx[P]] = (mult[idx[P]] + 1) % spec.p
        return cls(spec, tuple(mult))

    @classmethod
    def from_vector(cls, spec: FieldSpec, vec) -> "PointMultiset":
        return cls(spec, tuple(int(m) % spec.p for m in vec))

    @property
    def size(self) -> int:
        """Total multiplicity, as a true integer."""
        return sum(self.mult)

    @property
    def size_mod_p(self) -> int:
        return self.size % self.spec.p

    def multiplicity(self, P: ProjPoint) -> int:
        return self.mult[point_index(self.spec)[P]]

    def support(self) -> list[ProjPoint]:
        pts = enumerate_points(self.spec)
        return [pts[k] for k, m in enumerate(self.mult) if m]

    def is_plain_set(self) -> bool:
        return all(m in (0, 1) for m in self.mult)


def msum(A: PointMultiset, B: PointMultiset) -> PointMultiset:
    """Entrywise sum of multiplicities mod p (the group operation)."""
    if A.spec != B.spec:
        raise ValueError("field mismatch")
    p = A.spec.p
    return PointMultiset(A.spec, tuple((a + b) % p for a, b in zip(A.mult, B.mult)))


def minverse(A: PointMultiset) -> PointMultiset:
    """Entrywise p - m (mod p); the group inverse."""
    p = A.spec.p
    return PointMultiset(A.spec, tuple((-m) % p for m in A.mult))


def complement(A: PointMultiset, B: PointMultiset) -> PointMultiset:
    """The multiset counting each point m_B - m_A times; requires A <= B."""
    if A.spec != B.spec:
        raise ValueError("field mismatch")
    if any(a > b for a, b in zip(A.mult, B.mult)):
        raise ValueError("complement requires m_A(x) <= m_B(x) everywhere")
    return PointMultiset(A.spec, tuple(b - a for a, b in zip(A.mult, B.mult)))


def phi(S: PointMultiset) -> poly.HomPoly:
    """The group homomorphism sending a multiset to its power sum polynomial."""
    return poly.power_sum(S)


# -- text format ------------------------------------------------------

def mset_to_text(S: PointMultiset) -> str:
    """One line per point with nonzero multiplicity: "a b c : m"."""
    lines = [f"# mset q={S.spec}"]
    pts = enumerate_points(S.spec)
    for k, m in enumerate(S.mult):
        if m == 1:
            lines.append(str(pts[k]))
        elif m > 1:
            lines.append(f"{pts[k]} : {m}")
    return "\n".join(lines) + "\n"


def mset_from_text(text: str, spec: FieldSpec) -> PointMultiset:
    idx = point_index(spec)
    mult = [0] * (spec.q**2 + spec.q + 1)
    for lineno, raw in enumerate(text.splitlines(), start=1):
        s = raw.strip()
        if not s or s.startswith("#"):
            continue
        if ":" in s:
            coords_part, m_part = s.split(":", 1)
            try:
                m = int(m_part)
            except ValueError as e:
                raise ValueError(f"line {lineno}: bad multiplicity {m_part!r}") from e
        else:
            coords_part, m = s, 1
        parts = coords_part.split()
        if len(parts) != 3:
            raise ValueError(f"line {lineno}: expected 'a b c [: m]', got {raw!r}")
        try:
            a, b, c = (int(x) for x in parts)
            P = ProjPoint.from_encodings(spec, a, b, c)
        except ValueError as e:
            raise ValueError(f"line {lineno}: {e}") from e
        mult[idx[P]] = (mult[idx[P]] + m) % spec.p
    return PointMultiset(spec, tuple(mult))
