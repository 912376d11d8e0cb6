"""
Intersection forms of simply-connected 4-manifolds with boundary S^3.

Because the boundary is a homology sphere, ``H_2(N)`` and ``H_2(N, dN)``
are identified and a single integer vector type serves for both. The
``Q x`` products in :func:`is_characteristic` pair an absolute class with
the relative one; :func:`self_intersection` uses the absolute lift.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from typing import Sequence

from . import intmatrix
from .errors import DimensionMismatch, InvalidForm
from .intmatrix import Matrix

HomologyClass = tuple[int, ...]

HYPERBOLIC: Matrix = ((0, 1), (1, 0))

E8: Matrix = intmatrix.as_matrix(
    [
        [2, -1, 0, 0, 0, 0, 0, 0],
        [-1, 2, -1, 0, 0, 0, 0, 0],
        [0, -1, 2, -1, 0, 0, 0, 0],
        [0, 0, -1, 2, -1, 0, 0, 0],
        [0, 0, 0, -1, 2, -1, 0, -1],
        [0, 0, 0, 0, -1, 2, -1, 0],
        [0, 0, 0, 0, 0, -1, 2, 0],
        [0, 0, 0, 0, -1, 0, 0, 2],
    ]
)


@dataclass(frozen=True)
class IntersectionForm:
    """Symmetric unimodular integer matrix plus the Kirby-Siebenmann bit."""

    matrix: Matrix
    ks: int = 0

    def __init__(self, matrix: Sequence[Sequence[int]] = (), ks: int = 0):
        try:
            m = intmatrix.as_matrix(matrix)
        except (TypeError, ValueError) as exc:
            raise InvalidForm(str(exc)) from exc
        if m != intmatrix.transpose(m):
            raise InvalidForm("intersection form must be symmetric")
        if abs(intmatrix.determinant(m)) != 1:
            raise InvalidForm("intersection form must be unimodular (|det| = 1)")
        if ks not in (0, 1):
            raise InvalidForm(f"Kirby-Siebenmann invariant must be 0 or 1, got {ks!r}")
        object.__setattr__(self, "matrix", m)
        object.__setattr__(self, "ks", int(ks))

    @property
    def b2(self) -> int:
        return len(self.matrix)

    def is_even(self) -> bool:
        return all(self.matrix[i][i] % 2 == 0 for i in range(self.b2))

    def __add__(self, other: IntersectionForm) -> IntersectionForm:
        return connected_sum(self, other)


PRESETS: dict[str, IntersectionForm] = {
    "B4": IntersectionForm((), 0),
    "CP2": IntersectionForm([[1]], 0),
    "CP2bar": IntersectionForm([[-1]], 0),
    "S2xS2": IntersectionForm(HYPERBOLIC, 0),
    "K3": IntersectionForm(
        intmatrix.block_diagonal(
            intmatrix.scale(-1, E8), intmatrix.scale(-1, E8), HYPERBOLIC, HYPERBOLIC, HYPERBOLIC
        ),
        0,
    ),
    "E8": IntersectionForm(E8, 1),
}


def preset(name: str) -> IntersectionForm:
    """Punctured closed manifold by name: B4, CP2, CP2bar, S2xS2, K3, E8."""
    try:
        return PRESETS[name]
    except KeyError:
        raise InvalidForm(f"unknown manifold preset {name!r}; choose from {sorted(PRESETS)}") from None


def _check_class(Q: IntersectionForm, x: Sequence[int]) -> HomologyClass:
    x = tuple(int(v) for v in x)
    if len(x) != Q.b2:
        raise DimensionMismatch(f"class has length {len(x)} but the form has rank {Q.b2}")
    return x


def signature(Q: IntersectionForm | Sequence[Sequence[int]]) -> int:
    """Signature by congruence diagonalization over the rationals.

    Symmetric pivoting on a nonzero diagonal entry where possible; when the
    remaining diagonal is zero, a 2x2 block ``[[0, b], [b, 0]]`` is split off
    and contributes 0. Works for any symmetric matrix; null directions are
    simply skipped.
    """
    rows = Q.matrix if isinstance(Q, IntersectionForm) else Q
    a = [[Fraction(v) for v in row] for row in rows]
    sig = 0
    while a:
        n = len(a)
        p = next((i for i in range(n) if a[i][i] != 0), None)
        if p is not None:
            pivot = a[p][p]
            sig += 1 if pivot > 0 else -1
            rest = [i for i in range(n) if i != p]
            a = [[a[i][k] - a[i][p] * a[p][k] / pivot for k in rest] for i in rest]
            continue
        pair = next(((i, k) for i in range(n) for k in range(i + 1, n) if a[i][k] != 0), None)
        if pair is None:
            break
        i, k = pair
        # a[i][i] = a[k][k] = 0, so the block [[0, b], [b, 0]] is hyperbolic
        b = a[i][k]
        rest = [r for r in range(n) if r not in (i, k)]
        a = [
            [a[r][s] - (a[r][i] * a[k][s] + a[r][k] * a[i][s]) / b for s in rest]
            for r in rest
        ]
    return sig


def self_intersection(Q: IntersectionForm, x: Sequence[int]) -> int:
    x = _check_class(Q, x)
    return sum(xi * yi for xi, yi in zip(x, intmatrix.matvec(Q.matrix, x)))


def is_characteristic(Q: IntersectionForm, x: Sequence[int]) -> bool:
    """True iff ``x . a = a . a (mod 2)`` for every ``a``.

    Over Z/2 the map ``a -> a . a`` is linear, so checking the basis vectors
    suffices.
    """
    x = _check_class(Q, x)
    Qx = intmatrix.matvec(Q.matrix, x)
    return all((Qx[i] - Q.matrix[i][i]) % 2 == 0 for i in range(Q.b2))


def divisibility(x: Sequence[int]) -> int:
    """gcd of the coordinates; 0 exactly for the zero class."""
    return reduce(math.gcd, (abs(int(v)) for v in x), 0)


def connected_sum(A: IntersectionForm, B: IntersectionForm) -> IntersectionForm:
    return IntersectionForm(intmatrix.block_diagonal(A.matrix, B.matrix), A.ks ^ B.ks)


def stabilize(A: IntersectionForm, k: int = 1) -> IntersectionForm:
    """``A # k(S^2 x S^2)``: append k hyperbolic blocks."""
    if k < 0:
        raise ValueError(f"number of stabilizations must be nonnegative, got {k}")
    return IntersectionForm(intmatrix.block_diagonal(A.matrix, *([HYPERBOLIC] * k)), A.ks)


def pad_class(x: Sequence[int], extra: int) -> HomologyClass:
    """The class ``x + 0`` in a form with ``extra`` more basis vectors."""
    return tuple(int(v) for v in x) + (0,) * extra


def find_primitive_ordinary_class(Q: IntersectionForm) -> HomologyClass | None:
    """A primitive ordinary class if one exists in the standard basis, else None.

    For an even form every primitive class is ordinary. For an odd form of
    rank at least 2 one of ``e1``, ``e2`` is ordinary, since characteristic
    classes form a single coset of ``2 H_2``. Odd rank-1 forms and the empty
    form have none.
    """
    n = Q.b2
    if n == 0:
        return None
    e1 = (1,) + (0,) * (n - 1)
    if Q.is_even():
        return e1
    if n == 1:
        return None
    e2 = (0, 1) + (0,) * (n - 2)
    for candidate in (e1, e2, (1, 1) + (0,) * (n - 2)):
        if not is_characteristic(Q, candidate):
            return candidate
    raise AssertionError("unreachable: e1 and e2 cannot both be characteristic")


def _json_int(v) -> int:
    # integers may arrive as JSON strings when they exceed a consumer's number range
    if isinstance(v, bool) or not isinstance(v, (int, str)):
        raise InvalidForm(f"expected an integer, got {v!r}")
    try:
        return int(v)
    except ValueError:
        raise InvalidForm(f"expected an integer, got {v!r}") from None


def from_descriptor(desc) -> IntersectionForm:
    """Build a form from a manifold descriptor.

    Accepted shapes: a preset name, ``{"preset": name}``,
    ``{"matrix": [[...]], "ks": 0|1}``, or ``{"sum": [descriptor, ...]}``.
    """
    if isinstance(desc, str):
        return preset(desc)
    if not isinstance(desc, dict):
        raise InvalidForm(f"manifold descriptor must be a string or an object, got {desc!r}")
    keys = set(desc)
    if keys == {"preset"}:
        return preset(desc["preset"])
    if "matrix" in keys and keys <= {"matrix", "ks"}:
        rows = desc["matrix"]
        if not isinstance(rows, list) or not all(isinstance(r, list) for r in rows):
            raise InvalidForm("'matrix' must be a list of rows")
        return IntersectionForm([[_json_int(v) for v in r] for r in rows], _json_int(desc.get("ks", 0)))
    if keys == {"sum"}:
        if not isinstance(desc["sum"], list):
            raise InvalidForm("'sum' must be a list of descriptors")
        out = PRESETS["B4"]
        for part in desc["sum"]:
            out = connected_sum(out, from_descriptor(part))
        return out
    raise InvalidForm(f"unrecognized manifold descriptor keys {sorted(keys)}")
