"""
Knot invariants from a Seifert matrix.

Everything here is exact except the Levine-Tristram signature, which is
computed numerically and then certified: an approximate eigenbasis ``Q`` is
rounded to integers, ``Q^T R Q`` is formed exactly for a rigorously bounded
fixed-point approximation ``R`` of the Hermitian form, and a Gershgorin test
proves that every diagonal entry carries the sign of an eigenvalue. By
Sylvester's law of inertia this gives the signature. Precision doubles until
the test succeeds or the bit cap is hit.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple, Sequence

import mpmath
import numpy as np

from . import intmatrix
from .errors import CertificationFailed, InvalidSeifertMatrix, SingularAtRoot
from .intmatrix import Matrix
from .polynomial import IntPolynomial, LaurentPolynomial, cyclotomic, quotient_cyclotomic_like, resultant

DEFAULT_MAX_BITS = 4096
_START_BITS = 64


@dataclass(frozen=True)
class SeifertMatrix:
    """Integer Seifert matrix ``V`` of a knot.

    The only check made on construction is ``det(V - V^T) = 1``, which also
    forces the size to be even. The 0x0 matrix is the unknot.
    """

    entries: Matrix

    def __init__(self, entries: Sequence[Sequence[int]] = ()):
        try:
            m = intmatrix.as_matrix(entries)
        except (TypeError, ValueError) as exc:
            raise InvalidSeifertMatrix(str(exc)) from exc
        if len(m) % 2:
            raise InvalidSeifertMatrix(f"Seifert matrix must have even size, got {len(m)}")
        skew = intmatrix.sub(m, intmatrix.transpose(m))
        if intmatrix.determinant(skew) != 1:
            raise InvalidSeifertMatrix("det(V - V^T) must equal 1")
        object.__setattr__(self, "entries", m)

    @property
    def size(self) -> int:
        return len(self.entries)

    @property
    def T(self) -> Matrix:
        return intmatrix.transpose(self.entries)

    def tolist(self) -> list[list[int]]:
        return [list(r) for r in self.entries]


class RootOfUnityAngle(NamedTuple):
    """The point ``exp(2*pi*i*j/d)``; ``(j, d)`` is deliberately not reduced."""

    j: int
    d: int


def mirror(V: SeifertMatrix) -> SeifertMatrix:
    """Seifert matrix ``-V^T`` of the mirror image."""
    return SeifertMatrix(intmatrix.scale(-1, V.T))


def _seifert_pencil_determinant(V: SeifertMatrix) -> list[int]:
    """Coefficients (constant first) of ``det(V - t V^T)``.

    The determinant has degree at most ``n``, so it is recovered exactly by
    Newton interpolation through ``t = 0, ..., n``.
    """
    n = V.size
    Vt = V.T
    nodes = list(range(n + 1))
    values = [
        Fraction(intmatrix.determinant(intmatrix.sub(V.entries, intmatrix.scale(t, Vt))))
        for t in nodes
    ]
    # divided differences in place
    coef = values[:]
    for level in range(1, n + 1):
        for i in range(n, level - 1, -1):
            coef[i] = (coef[i] - coef[i - 1]) / (nodes[i] - nodes[i - level])
    poly = [Fraction(0)] * (n + 1)
    basis = [Fraction(1)]
    for k in range(n + 1):
        for i, b in enumerate(basis):
            poly[i] += coef[k] * b
        nxt = [Fraction(0)] * (len(basis) + 1)
        for i, b in enumerate(basis):
            nxt[i + 1] += b
            nxt[i] -= nodes[k] * b
        basis = nxt
    out = []
    for c in poly:
        if c.denominator != 1:
            raise ArithmeticError("interpolated determinant has a non-integer coefficient")
        out.append(int(c))
    return out


def alexander_polynomial(V: SeifertMatrix) -> LaurentPolynomial:
    """Alexander polynomial normalized so that ``D(1/t) = D(t)`` and ``D(1) = 1``.

    >>> str(alexander_polynomial(SeifertMatrix([[-1, 1], [0, -1]])))
    't^-1 - 1 + t'
    """
    raw = LaurentPolynomial.from_ordinary(IntPolynomial(_seifert_pencil_determinant(V)))
    if raw.is_zero():
        raise InvalidSeifertMatrix("det(V - tV^T) vanishes identically")
    span = raw.min_degree + raw.max_degree
    if span % 2:
        raise InvalidSeifertMatrix("det(V - tV^T) is not symmetric up to a unit")
    delta = raw * LaurentPolynomial.monomial(-span // 2, 1 if raw.eval_at_one() > 0 else -1)
    if delta.eval_at_one() != 1 or not delta.is_symmetric():
        raise InvalidSeifertMatrix("Alexander polynomial fails to normalize to D(1)=1, D(t)=D(1/t)")
    return delta


def knot_determinant(V: SeifertMatrix) -> int:
    """``|det(V + V^T)|``, which equals ``|D(-1)|``."""
    return abs(intmatrix.determinant(intmatrix.add(V.entries, V.T)))


def arf_invariant(V: SeifertMatrix) -> int:
    """Arf invariant from ``D(-1)`` mod 8: 0 for residues 1 and 7, 1 for 3 and 5."""
    r = alexander_polynomial(V).eval_at_minus_one() % 8
    if r in (1, 7):
        return 0
    if r in (3, 5):
        return 1
    raise InvalidSeifertMatrix(f"D(-1) = {r} mod 8 is even; not a knot Seifert matrix")


def vanishes_at_root(delta: LaurentPolynomial, j: int, d: int) -> bool:
    """Decide exactly whether ``delta(exp(2*pi*i*j/d)) == 0``.

    The point is a primitive m-th root of unity with ``m = d / gcd(j, d)``,
    so it is a root iff the m-th cyclotomic polynomial divides ``delta``.
    """
    m = d // math.gcd(j, d)
    q, _ = delta.to_ordinary()
    if q.is_zero():
        return True
    return q.is_divisible_by(cyclotomic(m))


class SignatureCertificate(NamedTuple):
    value: int
    bits: int


def _root_of_unity_fixed_point(j: int, d: int, bits: int) -> tuple[int, int]:
    """Return ``round(2**bits * cos)``, ``round(2**bits * sin)`` of ``2*pi*j/d``.

    Each is within 1 of the exact scaled value: evaluation runs 32 bits above
    the target, so the evaluation error is far below the final rounding.
    """
    with mpmath.workprec(bits + 32):
        theta = 2 * mpmath.pi * j / d
        c = int(mpmath.nint(mpmath.ldexp(mpmath.cos(theta), bits)))
        s = int(mpmath.nint(mpmath.ldexp(mpmath.sin(theta), bits)))
    return c, s


def _real_form_parts(V: SeifertMatrix) -> tuple[Matrix, Matrix, Matrix]:
    """Integer matrices ``R0, Rc, Rs`` with ``R = R0 + cos*Rc + sin*Rs``.

    ``R`` is the real symmetric 2n x 2n matrix of the Hermitian form
    ``(1-w)V + (1-conj w)V^T``, whose signature is twice the Hermitian one.
    """
    S = intmatrix.add(V.entries, V.T)
    K = intmatrix.sub(V.entries, V.T)
    n = V.size
    zero = tuple((0,) * n for _ in range(n))

    def blocks(a, b, c, e):
        top = tuple(ra + rb for ra, rb in zip(a, b))
        bottom = tuple(rc + re for rc, re in zip(c, e))
        return top + bottom

    negS = intmatrix.scale(-1, S)
    negK = intmatrix.scale(-1, K)
    R0 = blocks(S, zero, zero, S)
    Rc = blocks(negS, zero, zero, negS)
    Rs = blocks(zero, K, negK, zero)
    return R0, Rc, Rs


def _approximate_eigenvectors(R: Matrix, bits: int) -> list[list[int]]:
    """Approximate orthonormal eigenvectors of ``R``, scaled by ``2**bits`` and rounded."""
    if bits <= 53:
        arr = np.array([[float(Fraction(v, 1 << bits)) for v in row] for row in R])
        _, vecs = np.linalg.eigh(arr)
        return [[int(round(vecs[i, k] * (1 << bits))) for k in range(len(R))] for i in range(len(R))]
    with mpmath.workprec(bits + 16):
        mat = mpmath.matrix([[mpmath.ldexp(v, -bits) for v in row] for row in R])
        _, vecs = mpmath.eigsy(mat)
        return [
            [int(mpmath.nint(mpmath.ldexp(vecs[i, k], bits))) for k in range(len(R))]
            for i in range(len(R))
        ]


def _certify_inertia(R0: Matrix, Rc: Matrix, Rs: Matrix, c: int, s: int, bits: int) -> int | None:
    """Try to certify the signature of ``R0 + cos*Rc + sin*Rs`` at ``bits``.

    ``c`` and ``s`` are the fixed-point cosine and sine. Returns None if the
    bounds are not tight enough yet.
    """
    scale = 1 << bits
    R = tuple(
        tuple(scale * a + c * b + s * e for a, b, e in zip(r0, rc, rs))
        for r0, rc, rs in zip(R0, Rc, Rs)
    )
    err = tuple(tuple(abs(b) + abs(e) for b, e in zip(rc, rs)) for rc, rs in zip(Rc, Rs))
    q_bits = min(bits, 53) if bits <= 64 else bits
    Q = _approximate_eigenvectors(R, q_bits)
    Qt = intmatrix.transpose(Q)
    absQ = tuple(tuple(abs(v) for v in row) for row in Q)
    M = intmatrix.matmul(Qt, intmatrix.matmul(R, Q))
    B = intmatrix.matmul(intmatrix.transpose(absQ), intmatrix.matmul(err, absQ))
    sig = 0
    for i, row in enumerate(M):
        radius = sum(abs(v) + B[i][k] for k, v in enumerate(row) if k != i)
        if abs(row[i]) - B[i][i] <= radius:
            return None
        sig += 1 if row[i] > 0 else -1
    return sig


def certified_signature(V: SeifertMatrix, j: int, d: int, max_bits: int | None = None) -> SignatureCertificate:
    """Levine-Tristram signature at ``exp(2*pi*i*j/d)`` with the precision that certified it."""
    if d < 1 or not 0 <= j < d:
        raise ValueError(f"need 0 <= j < d, got j={j}, d={d}")
    max_bits = DEFAULT_MAX_BITS if max_bits is None else max_bits
    if j == 0 or V.size == 0:
        return SignatureCertificate(0, 0)
    if vanishes_at_root(alexander_polynomial(V), j, d):
        raise SingularAtRoot(j, d)
    R0, Rc, Rs = _real_form_parts(V)
    bits = _START_BITS
    while bits <= max_bits:
        c, s = _root_of_unity_fixed_point(j, d, bits)
        sig = _certify_inertia(R0, Rc, Rs, c, s, bits)
        if sig is not None:
            return SignatureCertificate(sig // 2, bits)
        bits *= 2
    raise CertificationFailed(f"signature at j={j}, d={d} not certified within {max_bits} bits")


def levine_tristram_signature(V: SeifertMatrix, j: int, d: int, max_bits: int | None = None) -> int:
    """Signature of ``(1-w)V + (1-conj w)V^T`` at ``w = exp(2*pi*i*j/d)``.

    Raises :class:`SingularAtRoot` when the Alexander polynomial vanishes at
    ``w``, and :class:`CertificationFailed` if ``max_bits`` is exhausted.
    """
    return certified_signature(V, j, d, max_bits).value


def branched_cover_h1_order(V: SeifertMatrix, d: int) -> int:
    """Order of ``H_1`` of the d-fold cyclic branched cover; 0 means infinite.

    Computed as ``|Res(D, 1 + t + ... + t^(d-1))|``, which is the product
    of ``|D|`` over the nontrivial d-th roots of unity.
    """
    if d < 1:
        raise ValueError(f"d must be a positive integer, got {d}")
    q, _ = alexander_polynomial(V).to_ordinary()
    return abs(resultant(q, quotient_cyclotomic_like(d)))
