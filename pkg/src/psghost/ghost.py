"""Ghosts: multisets whose power sum polynomial vanishes identically.

Ghost predicates, known ghost constructors (lines, partial pencils,
punctured pencils), the constant-line-intersection characterization, and
the kernel description of the ghost subgroup with its size exponent.

The fast paths go through a cached prime-subfield point-image matrix: the
power sum polynomial of a multiset, in F_p coordinates, is the
multiplicity vector times that matrix mod p.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from . import linalg
from .field import FieldSpec
from .msets import PointMultiset, mset_to_text
from .plane import (ProjLine, ProjPoint, enumerate_lines, enumerate_points,
                    incidence_matrix, line_points, pencil_lines, point_index)
from .poly import monomial_indices, point_matrix_fp, _powers


@lru_cache(maxsize=None)
def line_evaluation_matrix_fp(spec: FieldSpec) -> np.ndarray:
    """(q^2+q+1) x (h*(q^2+q+1)) matrix over F_p.

    mult @ matrix mod p gives, per line, the h coordinates of the power sum
    polynomial evaluated at that line.  Built by composing the point-image
    matrix with the (F_p-linear) monomial evaluation map at each line.
    """
    p, h = spec.p, spec.h
    monos = monomial_indices(spec)
    lines = enumerate_lines(spec)
    d = spec.q - 1
    basis = [spec.element(p**k) for k in range(h)]  # 1, x, ..., x^(h-1)
    E = np.zeros((len(monos) * h, len(lines) * h), dtype=np.int64)
    for li, line in enumerate(lines):
        u, v, w = line.coords
        pu, pv, pw = _powers(u, d), _powers(v, d), _powers(w, d)
        for mi, (i, j) in enumerate(monos):
            val = pu[d - i - j] * (pv[j] * pw[i])
            for k in range(h):
                prod = basis[k] * val
                for s in range(h):
                    E[mi * h + k, li * h + s] = prod.coeffs[s]
    return point_matrix_fp(spec) @ E % p


def is_ghost(S: PointMultiset) -> bool:
    """True iff every coefficient of the power sum polynomial is zero."""
    spec = S.spec
    v = np.asarray(S.mult, dtype=np.int64)
    return not np.any(v @ point_matrix_fp(spec) % spec.p)


def all_line_evaluations_zero(S: PointMultiset) -> bool:
    """True iff the power sum polynomial evaluates to zero on every line."""
    spec = S.spec
    v = np.asarray(S.mult, dtype=np.int64)
    return not np.any(v @ line_evaluation_matrix_fp(spec) % spec.p)


def vandermonde_check(S: PointMultiset) -> bool:
    """Constant-intersection characterization.

    True iff some residue r mod p satisfies: every line meets S in r points
    (multiplicity-weighted, mod p) and the total multiplicity is r mod p.
    """
    spec = S.spec
    v = np.asarray(S.mult, dtype=np.int64)
    meets = v @ incidence_matrix(spec) % spec.p
    r = int(meets[0])
    return bool(np.all(meets == r)) and S.size % spec.p == r


def line_ghost(line: ProjLine, spec: FieldSpec) -> PointMultiset:
    """The plain point set of a line; always a ghost."""
    S = PointMultiset.from_points(spec, line_points(line, spec))
    assert is_ghost(S)
    return S


def partial_pencil_ghost(P: ProjPoint, lam: int, spec: FieldSpec) -> PointMultiset:
    """Point-set union of the first lam*p + 1 lines through P.

    Legal for 0 <= lam <= p^(h-1); the union is always a ghost.  Lines are
    taken in canonical enumeration order restricted to the pencil.
    """
    p, h, q = spec.p, spec.h, spec.q
    n_lines = lam * p + 1
    if not (0 <= lam <= p**(h - 1)) or n_lines > q + 1:
        raise ValueError(f"lambda = {lam} out of range for GF({spec})")
    pencil = pencil_lines(P, spec)[:n_lines]
    pts = {Q for l in pencil for Q in line_points(l, spec)}
    idx = point_index(spec)
    mult = [0] * (q**2 + q + 1)
    for Q in pts:
        mult[idx[Q]] = 1
    S = PointMultiset(spec, tuple(mult))
    assert is_ghost(S)
    return S


def punctured_pencil_ghost(P: ProjPoint, lam: int, spec: FieldSpec) -> PointMultiset:
    """Union of q - lam*p lines through P, with P itself removed; a ghost."""
    p, q = spec.p, spec.q
    n_lines = q - lam * p
    if not 1 <= n_lines <= q + 1:
        raise ValueError(f"lambda = {lam} out of range for GF({spec})")
    pencil = pencil_lines(P, spec)[:n_lines]
    pts = {Q for l in pencil for Q in line_points(l, spec)}
    pts.discard(P)
    idx = point_index(spec)
    mult = [0] * (q**2 + q + 1)
    for Q in pts:
        mult[idx[Q]] = 1
    S = PointMultiset(spec, tuple(mult))
    assert is_ghost(S)
    return S


@dataclass(frozen=True)
class GhostReport:
    """Computed dimensions and a kernel basis for the ghost subgroup."""

    q: int
    p: int
    h: int
    rank_phi: int
    ghost_exponent: int
    kernel_basis: tuple[PointMultiset, ...]
    note: str

    def ghost_count(self):
        """p^exponent as an integer when it fits 128 bits, else None."""
        n = self.p**self.ghost_exponent
        return n if n < 2**128 else None

    def to_json(self) -> str:
        return json.dumps({
            "q": self.q,
            "p": self.p,
            "h": self.h,
            "rank": self.rank_phi,
            "exponent": self.ghost_exponent,
            "count": self.ghost_count(),
            "note": self.note,
            "kernel_basis": [mset_to_text(S) for S in self.kernel_basis],
        }, indent=2)


@lru_cache(maxsize=None)
def ghost_report(spec: FieldSpec) -> GhostReport:
    """Rank of the point-image matrix over F_p, kernel basis, exponent."""
    M = point_matrix_fp(spec)
    B = linalg.left_kernel_basis(M, spec.p)
    rank_phi = M.shape[0] - B.shape[0]
    basis = tuple(PointMultiset.from_vector(spec, row) for row in B)
    for S in basis:
        assert is_ghost(S)
    note = ("exact for prime fields" if spec.h == 1
            else "computed, no literature value")
    return GhostReport(
        q=spec.q, p=spec.p, h=spec.h,
        rank_phi=rank_phi,
        ghost_exponent=M.shape[0] - rank_phi,
        kernel_basis=basis,
        note=note,
    )
