"""
Deciding when a knot bounds a simple Z_d-disc representing a class x.

The inputs are a manifold ``N`` (its intersection form and Kirby-Siebenmann
bit), a nonzero class ``x`` of divisibility ``d``, and a Seifert matrix for
``K``. The quantities involved are

* the Arf congruence ``Arf(K) + ks(N) + (sigma(N) - x.x)/8 = 0 (mod 2)``,
  relevant only when ``x`` is characteristic;
* the j-signatures ``sigma(N) - 2j(d-j)/d^2 * x.x + sigma_K(exp(2 pi i j/d))``
  for ``0 <= j < d``, whose absolute values must not exceed ``b2(N)`` (or
  ``b2(N) + 2g`` for a genus g surface).

When ``H_1`` of the d-fold branched cover of ``K`` vanishes the two
conditions are equivalent to the existence of the disc. Otherwise they are
only necessary, and the engine answers Inconclusive rather than No.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import NamedTuple, Sequence

from . import form as _form
from .errors import DimensionMismatch, NotCharacteristic, NotDivisibleBy8, SingularAtRoot
from .form import IntersectionForm
from .knot import SeifertMatrix, arf_invariant, branched_cover_h1_order, certified_signature


class Answer(str, enum.Enum):
    YES = "Yes"
    NO = "No"
    INCONCLUSIVE = "Inconclusive"


class Exactness(str, enum.Enum):
    EXACT = "Exact"
    LOWER_BOUND_ONLY = "LowerBoundOnly"


class Scope(str, enum.Enum):
    SIMPLE_SURFACES = "SimpleSurfaces"
    ALL_SURFACES = "AllSurfaces"


@dataclass(frozen=True)
class ConditionRecord:
    """One checked condition.

    ``passed`` is None when the condition could not be evaluated (a
    j-signature at a root of the Alexander polynomial). ``necessary`` marks
    conditions whose failure rules the disc out.
    """

    condition: str
    required: object
    actual: object
    margin: int | None
    passed: bool | None
    necessary: bool
    detail: str = ""

    def as_dict(self) -> dict:
        return {
            "condition": self.condition,
            "required": self.required,
            "actual": self.actual,
            "margin": self.margin,
            "passed": self.passed,
            "necessary": self.necessary,
            "detail": self.detail,
        }


@dataclass(frozen=True)
class SliceVerdict:
    answer: Answer
    reasons: tuple[ConditionRecord, ...] = ()

    def as_dict(self) -> dict:
        return {"answer": self.answer.value, "reasons": [r.as_dict() for r in self.reasons]}


@dataclass(frozen=True)
class StabilizingResult:
    """Stabilizing number of (x, N) for K.

    ``value`` is the simple stabilizing number when it is known exactly. The
    plain stabilizing number equals it when ``simple_equals_plain`` is set,
    and is otherwise only bounded above by it.
    """

    finite: bool
    value: int | None
    lower_bound: int
    exactness: Exactness
    simple_equals_plain: bool = False
    h1_order: int | None = None
    skipped_j: tuple[int, ...] = ()

    def as_dict(self) -> dict:
        return {
            "finite": self.finite,
            "value": self.value,
            "lower_bound": self.lower_bound,
            "exactness": self.exactness.value,
            "simple_equals_plain": self.simple_equals_plain,
            "h1_order": self.h1_order,
            "skipped_j": list(self.skipped_j),
        }


class GenusBound(NamedTuple):
    value: int
    scope: Scope


class SigmaTerm(NamedTuple):
    """One row of the j-signature table; None entries mark a root of the Alexander polynomial."""

    j: int
    knot_signature: int | None
    correction: int
    value: int | None
    bits: int


@dataclass(frozen=True)
class SliceQuery:
    """The triple (N, x, K); ``d`` is always derived from ``x``."""

    form: IntersectionForm
    x: tuple[int, ...]
    V: SeifertMatrix
    max_bits: int | None = field(default=None, compare=False)

    def __post_init__(self):
        x = tuple(int(v) for v in self.x)
        if len(x) != self.form.b2:
            raise DimensionMismatch(f"class has length {len(x)} but the form has rank {self.form.b2}")
        if not any(x):
            raise ValueError("the class x must be nonzero")
        object.__setattr__(self, "x", x)

    @property
    def d(self) -> int:
        return _form.divisibility(self.x)


def _nonzero_class(Q: IntersectionForm, x: Sequence[int]) -> tuple[tuple[int, ...], int]:
    x = tuple(int(v) for v in x)
    if len(x) != Q.b2:
        raise DimensionMismatch(f"class has length {len(x)} but the form has rank {Q.b2}")
    d = _form.divisibility(x)
    if d == 0:
        raise ValueError("the class x must be nonzero")
    return x, d


def _ceil_half(n: int) -> int:
    return -(-n // 2)


def is_prime_power(d: int) -> bool:
    """True iff ``d = p**k`` for a prime p and k >= 1."""
    if d < 2:
        return False
    p = 2
    while p * p <= d and d % p:
        p += 1
    if d % p:
        return True  # d itself is prime
    while d % p == 0:
        d //= p
    return d == 1


def _correction(j: int, d: int, xx: int) -> int:
    # d | x coordinatewise, so d^2 | x.x and this is exact
    num = 2 * j * (d - j) * xx
    assert num % (d * d) == 0
    return num // (d * d)


def sigma_table(Q: IntersectionForm, x: Sequence[int], V: SeifertMatrix, max_bits: int | None = None) -> list[SigmaTerm]:
    """All j-signatures for ``0 <= j < d``, singular entries left as None."""
    x, d = _nonzero_class(Q, x)
    sig_n = _form.signature(Q)
    xx = _form.self_intersection(Q, x)
    table = []
    for j in range(d):
        corr = _correction(j, d, xx)
        try:
            cert = certified_signature(V, j, d, max_bits)
        except SingularAtRoot:
            table.append(SigmaTerm(j, None, corr, None, 0))
            continue
        table.append(SigmaTerm(j, cert.value, corr, sig_n - corr + cert.value, cert.bits))
    return table


def sigma_j(Q: IntersectionForm, x: Sequence[int], V: SeifertMatrix, j: int, max_bits: int | None = None) -> int:
    """j-signature of the d-fold cover of N branched along a surface representing x."""
    x, d = _nonzero_class(Q, x)
    if not 0 <= j < d:
        raise ValueError(f"need 0 <= j < d = {d}, got j = {j}")
    xx = _form.self_intersection(Q, x)
    return _form.signature(Q) - _correction(j, d, xx) + certified_signature(V, j, d, max_bits).value


def max_signature_bound(Q: IntersectionForm, x: Sequence[int], V: SeifertMatrix, max_bits: int | None = None) -> int:
    """``max_j |sigma_j|``; raises SingularAtRoot if any j hits a root of the Alexander polynomial."""
    table = sigma_table(Q, x, V, max_bits)
    for term in table:
        if term.value is None:
            x, d = _nonzero_class(Q, x)
            raise SingularAtRoot(term.j, d)
    return max(abs(t.value) for t in table)


def _arf_congruence(Q: IntersectionForm, x: tuple[int, ...], V: SeifertMatrix) -> int:
    diff = _form.signature(Q) - _form.self_intersection(Q, x)
    if diff % 8:
        raise NotDivisibleBy8(f"sigma(N) - x.x = {diff} is not divisible by 8")
    return (arf_invariant(V) + Q.ks + diff // 8) % 2


def arf_condition(Q: IntersectionForm, x: Sequence[int], V: SeifertMatrix) -> bool:
    """Whether ``Arf(K) + ks(N) + (sigma(N) - x.x)/8`` is even, for characteristic x."""
    x = _form._check_class(Q, x)
    if not _form.is_characteristic(Q, x):
        raise NotCharacteristic("the Arf congruence only applies to characteristic classes")
    return _arf_congruence(Q, x, V) == 0


def _arf_record(Q, x, V) -> ConditionRecord | None:
    if not _form.is_characteristic(Q, x):
        return None
    value = _arf_congruence(Q, x, V)
    return ConditionRecord(
        condition="arf_congruence",
        required=0,
        actual=value,
        margin=None,
        passed=value == 0,
        necessary=True,
        detail="Arf(K) + ks(N) + (sigma(N) - x.x)/8 mod 2",
    )


def decide_stably_slice(Q: IntersectionForm, x: Sequence[int], V: SeifertMatrix) -> SliceVerdict:
    """Whether K bounds a disc representing ``x + 0`` in some ``N # k(S^2 x S^2)``.

    Yes iff x is ordinary, or x is characteristic and the Arf congruence
    holds. This is an unconditional equivalence, so the answer is never
    Inconclusive.
    """
    x = _form._check_class(Q, x)
    rec = _arf_record(Q, x, V)
    if rec is None:
        ordinary = ConditionRecord("ordinary_class", True, True, None, True, False, "x is ordinary")
        return SliceVerdict(Answer.YES, (ordinary,))
    return SliceVerdict(Answer.YES if rec.passed else Answer.NO, (rec,))


def _signature_record(Q: IntersectionForm, table: list[SigmaTerm], genus: int = 0) -> ConditionRecord:
    known = [abs(t.value) for t in table if t.value is not None]
    skipped = [t.j for t in table if t.value is None]
    worst = max(known) if known else 0
    budget = Q.b2 + 2 * genus
    margin = budget - worst
    passed: bool | None = margin >= 0
    detail = "b2(N) >= max_j |sigma_j|" if genus == 0 else f"b2(N) + 2*{genus} >= max_j |sigma_j|"
    if skipped:
        detail += f"; undetermined at j = {skipped}"
        if passed:
            passed = None
    return ConditionRecord("signature_bound", budget, worst, margin, passed, True, detail)


def decide_simple_slice(Q: IntersectionForm, x: Sequence[int], V: SeifertMatrix, max_bits: int | None = None) -> SliceVerdict:
    """Three-valued answer to "does K bound a simple disc in N representing x?".

    No if the Arf congruence (characteristic x) or the signature bound fails,
    since both are necessary. Yes if both hold and the d-fold branched cover
    of K has trivial first homology. Inconclusive otherwise.
    """
    x, d = _nonzero_class(Q, x)
    reasons = []
    arf = _arf_record(Q, x, V)
    if arf is not None:
        reasons.append(arf)
    reasons.append(_signature_record(Q, sigma_table(Q, x, V, max_bits)))
    h1 = branched_cover_h1_order(V, d)
    reasons.append(
        ConditionRecord(
            condition="branched_cover_h1_trivial",
            required=1,
            actual=h1,
            margin=None,
            passed=h1 == 1,
            necessary=False,
            detail=f"|H_1(Sigma_{d}(K))| (0 means infinite)",
        )
    )
    if any(r.necessary and r.passed is False for r in reasons):
        answer = Answer.NO
    elif all(r.passed for r in reasons):
        answer = Answer.YES
    else:
        answer = Answer.INCONCLUSIVE
    return SliceVerdict(answer, tuple(reasons))


def stable_genus_representable(Q: IntersectionForm, x: Sequence[int], V: SeifertMatrix, g: int) -> SliceVerdict:
    """Whether x is stably represented by a genus g surface bounded by K."""
    if g < 0:
        raise ValueError(f"genus must be nonnegative, got {g}")
    if g == 0:
        return decide_stably_slice(Q, x, V)
    _form._check_class(Q, x)
    rec = ConditionRecord("positive_genus", 1, g, g - 1, True, False, "every class is stably representable for g > 0")
    return SliceVerdict(Answer.YES, (rec,))


def _lower_bound(Q: IntersectionForm, table: list[SigmaTerm]) -> int:
    known = [abs(t.value) for t in table if t.value is not None]
    return max(0, _ceil_half(max(known, default=0) - Q.b2))


def stabilizing_number(Q: IntersectionForm, x: Sequence[int], V: SeifertMatrix, max_bits: int | None = None) -> StabilizingResult:
    """Minimal k such that K bounds a simple disc representing ``x + 0`` in ``N # k(S^2 x S^2)``.

    Exact when the stabilizing numbers are finite and ``H_1`` of the d-fold
    branched cover vanishes; otherwise only the signature lower bound is
    reported (valid for simple discs, and for all discs if d is a prime
    power).
    """
    x, d = _nonzero_class(Q, x)
    table = sigma_table(Q, x, V, max_bits)
    lb = _lower_bound(Q, table)
    skipped = tuple(t.j for t in table if t.value is None)
    h1 = branched_cover_h1_order(V, d)
    finite = decide_stably_slice(Q, x, V).answer is Answer.YES
    if not finite:
        return StabilizingResult(False, None, lb, Exactness.LOWER_BOUND_ONLY, False, h1, skipped)
    if h1 == 1:
        # sn <= sn^simple always, so a zero simple number settles the plain one too
        plain = is_prime_power(d) or lb == 0
        return StabilizingResult(True, lb, lb, Exactness.EXACT, plain, h1, skipped)
    return StabilizingResult(True, None, lb, Exactness.LOWER_BOUND_ONLY, False, h1, skipped)


def genus_lower_bound(Q: IntersectionForm, x: Sequence[int], V: SeifertMatrix, max_bits: int | None = None) -> GenusBound:
    """Smallest g allowed by ``2g + b2(N) >= |sigma_j|`` for every j.

    The bound holds for simple Z_d-surfaces, and for every surface
    representing x when d is a prime power.
    """
    x, d = _nonzero_class(Q, x)
    lb = _lower_bound(Q, sigma_table(Q, x, V, max_bits))
    return GenusBound(lb, Scope.ALL_SURFACES if is_prime_power(d) else Scope.SIMPLE_SURFACES)
