"""
Exact integer polynomials.

Two representations live here. :class:`LaurentPolynomial` is a sparse map
from integer exponents to nonzero integer coefficients and is what knot
invariants such as the Alexander polynomial are reported in.
:class:`IntPolynomial` is a dense ordinary polynomial (constant term first)
used by the resultant and divisibility routines. All coefficients are Python
integers, so nothing overflows.
"""

from __future__ import annotations

from typing import Iterable, Mapping

from .intmatrix import determinant


class LaurentPolynomial:
    """Integer Laurent polynomial in one variable ``t``.

    Instances are immutable and hashable. Zero coefficients are never
    stored, and terms are kept sorted by exponent so that equality is
    structural.
    """

    __slots__ = ("_terms",)

    def __init__(self, coefficients: Mapping[int, int] | Iterable[tuple[int, int]] = ()):
        items = coefficients.items() if isinstance(coefficients, Mapping) else coefficients
        acc: dict[int, int] = {}
        for e, c in items:
            acc[int(e)] = acc.get(int(e), 0) + int(c)
        self._terms = tuple(sorted((e, c) for e, c in acc.items() if c != 0))

    @classmethod
    def monomial(cls, exponent: int, coefficient: int = 1) -> LaurentPolynomial:
        return cls({exponent: coefficient})

    @classmethod
    def from_ordinary(cls, p: IntPolynomial, shift: int = 0) -> LaurentPolynomial:
        """Return ``t**shift * p(t)``."""
        return cls((i + shift, c) for i, c in enumerate(p.coefficients))

    @property
    def terms(self) -> tuple[tuple[int, int], ...]:
        return self._terms

    @property
    def coefficients(self) -> dict[int, int]:
        return dict(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    @property
    def min_degree(self) -> int:
        if not self._terms:
            raise ValueError("zero polynomial has no degree")
        return self._terms[0][0]

    @property
    def max_degree(self) -> int:
        if not self._terms:
            raise ValueError("zero polynomial has no degree")
        return self._terms[-1][0]

    def __getitem__(self, exponent: int) -> int:
        return dict(self._terms).get(exponent, 0)

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPolynomial({0: other})
        if not isinstance(other, LaurentPolynomial):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(self._terms)

    def __add__(self, other):
        other = _coerce(other)
        return LaurentPolynomial(self._terms + other._terms)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPolynomial((e, -c) for e, c in self._terms)

    def __sub__(self, other):
        return self + (-_coerce(other))

    def __rsub__(self, other):
        return _coerce(other) - self

    def __mul__(self, other):
        other = _coerce(other)
        return LaurentPolynomial(
            (e1 + e2, c1 * c2) for e1, c1 in self._terms for e2, c2 in other._terms
        )

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative powers are only defined for monomials")
        out = LaurentPolynomial({0: 1})
        for _ in range(k):
            out = out * self
        return out

    def __call__(self, value):
        """Evaluate at ``value`` (any type supporting ``**`` with negative ints)."""
        return sum(c * value**e for e, c in self._terms)

    def substitute_inverse(self) -> LaurentPolynomial:
        """Return ``p(1/t)``."""
        return LaurentPolynomial((-e, c) for e, c in self._terms)

    def is_symmetric(self) -> bool:
        return self == self.substitute_inverse()

    def to_ordinary(self) -> tuple[IntPolynomial, int]:
        """Split off the lowest power of ``t``.

        Returns ``(q, s)`` with ``p(t) = t**s * q(t)`` and ``q(0) != 0``;
        the zero polynomial maps to ``(0, 0)``.
        """
        if not self._terms:
            return IntPolynomial(()), 0
        s = self.min_degree
        coeffs = [0] * (self.max_degree - s + 1)
        for e, c in self._terms:
            coeffs[e - s] = c
        return IntPolynomial(coeffs), s

    def eval_at_minus_one(self) -> int:
        return sum(-c if e % 2 else c for e, c in self._terms)

    def eval_at_one(self) -> int:
        return sum(c for _, c in self._terms)

    def __repr__(self):
        return f"LaurentPolynomial({dict(self._terms)!r})"

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for e, c in self._terms:
            mag = abs(c)
            if e == 0:
                body = str(mag)
            else:
                var = "t" if e == 1 else f"t^{e}"
                body = var if mag == 1 else f"{mag}*{var}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts)


def eval_at_minus_one(p: LaurentPolynomial) -> int:
    return p.eval_at_minus_one()


def to_ordinary(p: LaurentPolynomial) -> tuple[IntPolynomial, int]:
    return p.to_ordinary()


def _coerce(x) -> LaurentPolynomial:
    if isinstance(x, LaurentPolynomial):
        return x
    if isinstance(x, int):
        return LaurentPolynomial({0: x})
    if isinstance(x, IntPolynomial):
        return LaurentPolynomial.from_ordinary(x)
    raise TypeError(f"cannot combine LaurentPolynomial with {type(x).__name__}")


class IntPolynomial:
    """Dense integer polynomial, constant term first.

    Trailing zeros are stripped, so the leading coefficient is nonzero
    except for the zero polynomial, whose coefficient tuple is empty.
    """

    __slots__ = ("coefficients",)

    def __init__(self, coefficients: Iterable[int]):
        coeffs = [int(c) for c in coefficients]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        self.coefficients: tuple[int, ...] = tuple(coeffs)

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coefficients) - 1

    def is_zero(self) -> bool:
        return not self.coefficients

    @property
    def leading_coefficient(self) -> int:
        return self.coefficients[-1] if self.coefficients else 0

    def __eq__(self, other):
        if isinstance(other, int):
            other = IntPolynomial([other])
        if not isinstance(other, IntPolynomial):
            return NotImplemented
        return self.coefficients == other.coefficients

    def __hash__(self):
        return hash(self.coefficients)

    def __add__(self, other):
        other = _coerce_int(other)
        a, b = self.coefficients, other.coefficients
        n = max(len(a), len(b))
        return IntPolynomial(
            (a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)
        )

    __radd__ = __add__

    def __neg__(self):
        return IntPolynomial(-c for c in self.coefficients)

    def __sub__(self, other):
        return self + (-_coerce_int(other))

    def __mul__(self, other):
        other = _coerce_int(other)
        a, b = self.coefficients, other.coefficients
        if not a or not b:
            return IntPolynomial(())
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return IntPolynomial(out)

    __rmul__ = __mul__

    def __call__(self, value):
        acc = 0 * value
        for c in reversed(self.coefficients):
            acc = acc * value + c
        return acc

    def divmod_monic(self, divisor: IntPolynomial) -> tuple[IntPolynomial, IntPolynomial]:
        """Long division by a divisor with leading coefficient +-1."""
        if divisor.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        lead = divisor.leading_coefficient
        if lead not in (1, -1):
            raise ValueError("divisor must have unit leading coefficient")
        rem = list(self.coefficients)
        dd = divisor.degree
        if len(rem) - 1 < dd:
            return IntPolynomial(()), IntPolynomial(rem)
        quot = [0] * (len(rem) - dd)
        dc = divisor.coefficients
        for k in range(len(rem) - 1 - dd, -1, -1):
            c = rem[k + dd] * lead
            quot[k] = c
            if c:
                for i, v in enumerate(dc):
                    rem[k + i] -= c * v
        return IntPolynomial(quot), IntPolynomial(rem[:dd])

    def is_divisible_by(self, divisor: IntPolynomial) -> bool:
        return self.divmod_monic(divisor)[1].is_zero()

    def __repr__(self):
        return f"IntPolynomial({list(self.coefficients)!r})"

    def __str__(self):
        return str(LaurentPolynomial.from_ordinary(self))


def _coerce_int(x) -> IntPolynomial:
    if isinstance(x, IntPolynomial):
        return x
    if isinstance(x, int):
        return IntPolynomial([x])
    raise TypeError(f"cannot combine IntPolynomial with {type(x).__name__}")


def sylvester_matrix(p: IntPolynomial, q: IntPolynomial) -> list[list[int]]:
    """Sylvester matrix with the ``deg q`` rows of ``p`` on top.

    Coefficients are laid out leading term first.
    """
    m, n = p.degree, q.degree
    size = m + n
    pc = list(reversed(p.coefficients))
    qc = list(reversed(q.coefficients))
    rows = []
    for i in range(n):
        rows.append([0] * i + pc + [0] * (size - m - 1 - i))
    for i in range(m):
        rows.append([0] * i + qc + [0] * (size - n - 1 - i))
    return rows


def resultant(p: IntPolynomial, q: IntPolynomial) -> int:
    """Resultant of two nonzero integer polynomials.

    Defined as the determinant of :func:`sylvester_matrix`, so
    ``resultant(p, q) = lead(p)**deg(q) * prod(q(r) for r in roots(p))``.

    >>> resultant(IntPolynomial([-2, 1]), IntPolynomial([-3, 1]))
    -1
    """
    if p.is_zero() or q.is_zero():
        raise ValueError("resultant is undefined for the zero polynomial")
    return determinant(sylvester_matrix(p, q))


def quotient_cyclotomic_like(d: int) -> IntPolynomial:
    """``1 + t + ... + t**(d-1)``, whose roots are the nontrivial d-th roots of unity."""
    if d < 1:
        raise ValueError(f"d must be a positive integer, got {d}")
    return IntPolynomial([1] * d)


_CYCLOTOMIC_CACHE: dict[int, IntPolynomial] = {}


def cyclotomic(m: int) -> IntPolynomial:
    """The m-th cyclotomic polynomial, by dividing ``t**m - 1`` by the lower ones."""
    if m < 1:
        raise ValueError(f"m must be a positive integer, got {m}")
    if m in _CYCLOTOMIC_CACHE:
        return _CYCLOTOMIC_CACHE[m]
    poly = IntPolynomial([-1] + [0] * (m - 1) + [1])
    for k in range(1, m):
        if m % k == 0:
            poly, rem = poly.divmod_monic(cyclotomic(k))
            assert rem.is_zero()
    _CYCLOTOMIC_CACHE[m] = poly
    return poly
