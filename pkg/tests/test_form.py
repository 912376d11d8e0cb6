import random

import numpy as np
import pytest

from oracles import characteristic_vector, float_signature, matmul, random_unimodular, random_unimodular_form, transpose
from simpleslice.errors import DimensionMismatch, InvalidForm
from simpleslice.form import (
    E8,
    HYPERBOLIC,
    IntersectionForm,
    connected_sum,
    divisibility,
    find_primitive_ordinary_class,
    from_descriptor,
    is_characteristic,
    pad_class,
    preset,
    self_intersection,
    signature,
    stabilize,
)

RNG = random.Random(7)
RANDOM_FORMS = [random_unimodular_form(RNG) for _ in range(100)]


def test_form_validation():
    with pytest.raises(InvalidForm):
        IntersectionForm([[2]])
    with pytest.raises(InvalidForm):
        IntersectionForm([[1, 1], [0, 1]])
    with pytest.raises(InvalidForm):
        IntersectionForm([[1]], ks=2)


def test_signature_examples():
    assert signature(IntersectionForm([[1, 0], [0, 1]])) == 2
    assert signature(IntersectionForm(HYPERBOLIC)) == 0
    assert signature(IntersectionForm(E8)) == 8
    assert float_signature(E8) == 8


def test_presets():
    k3 = preset("K3")
    assert (k3.b2, signature(k3), k3.is_even(), k3.ks) == (22, -16, True, 0)
    e8 = preset("E8")
    assert (e8.b2, signature(e8), e8.ks) == (8, 8, 1)
    assert signature(preset("CP2bar")) == -1
    with pytest.raises(InvalidForm):
        preset("RP4")


def test_signature_handles_zero_diagonal():
    # congruent to diag(1, -1, 1); first pivot search finds no nonzero diagonal
    assert signature([[0, 1, 0], [1, 0, 1], [0, 1, 0]]) == 0
    assert signature([[0, 2], [2, 0]]) == 0


def test_signature_matches_eigenvalues_on_random_forms():
    for Q in RANDOM_FORMS:
        assert signature(IntersectionForm(Q)) == float_signature(Q)


@pytest.mark.parametrize(
    "Q, x, expected",
    [([[1]], (3,), True), ([[1]], (2,), False), (HYPERBOLIC, (1, 0), False), (HYPERBOLIC, (0, 0), True)],
)
def test_is_characteristic(Q, x, expected):
    assert is_characteristic(IntersectionForm(Q), x) is expected


def test_dimension_mismatch():
    with pytest.raises(DimensionMismatch):
        is_characteristic(preset("CP2"), (1, 0))
    with pytest.raises(DimensionMismatch):
        self_intersection(preset("S2xS2"), (1,))


@pytest.mark.parametrize("x, d", [((3,), 3), ((0, 0), 0), ((4, 6), 2), ((-6, 9), 3)])
def test_divisibility(x, d):
    assert divisibility(x) == d


@pytest.mark.parametrize("Q, x, xx", [([[1]], (3,), 9), (HYPERBOLIC, (1, 0), 0), ([[-1]], (1,), -1)])
def test_self_intersection(Q, x, xx):
    assert self_intersection(IntersectionForm(Q), x) == xx


def test_connected_sum():
    s = connected_sum(preset("CP2"), preset("CP2bar"))
    assert s.matrix == ((1, 0), (0, -1)) and s.ks == 0
    assert connected_sum(preset("CP2"), preset("B4")) == preset("CP2")
    t = preset("CP2") + preset("S2xS2")
    assert (t.b2, signature(t)) == (3, 1)
    assert connected_sum(preset("E8"), preset("E8")).ks == 0


def test_stabilize():
    cp2 = preset("CP2")
    assert stabilize(cp2, 0) == cp2
    s1 = stabilize(cp2, 1)
    assert s1.matrix == ((1, 0, 0), (0, 0, 1), (0, 1, 0))
    for k in range(4):
        sk = stabilize(preset("E8"), k)
        assert signature(sk) == 8 and sk.ks == 1 and sk.b2 == 8 + 2 * k


def test_find_primitive_ordinary_class():
    assert find_primitive_ordinary_class(IntersectionForm(HYPERBOLIC)) == (1, 0)
    assert find_primitive_ordinary_class(preset("CP2")) is None
    assert find_primitive_ordinary_class(preset("CP2bar")) is None
    assert find_primitive_ordinary_class(preset("B4")) is None
    x = find_primitive_ordinary_class(IntersectionForm([[1, 0], [0, -1]]))
    assert x == (1, 0)
    assert not is_characteristic(IntersectionForm([[1, 0], [0, -1]]), x)


def test_find_primitive_ordinary_class_on_random_forms():
    for Q in RANDOM_FORMS:
        form = IntersectionForm(Q)
        x = find_primitive_ordinary_class(form)
        if form.b2 >= 2 or form.is_even():
            assert x is not None
            assert divisibility(x) == 1 and not is_characteristic(form, x)
        else:
            assert x is None


def test_characteristic_classes_satisfy_mod_8():
    rng = random.Random(11)
    for Q in RANDOM_FORMS:
        form = IntersectionForm(Q)
        c = characteristic_vector(Q)
        for _ in range(3):
            x = [ci + 2 * rng.randint(-3, 3) for ci in c]
            assert is_characteristic(form, x)
            assert (signature(form) - self_intersection(form, x)) % 8 == 0


def test_characteristic_invariant_under_base_change():
    rng = random.Random(5)
    for Q in RANDOM_FORMS[:40]:
        n = len(Q)
        U = random_unimodular(rng, n, steps=n + 2)
        # new basis vectors are the columns of U: Q' = U^T Q U and x' solves U x' = x
        Qp = matmul(transpose(U), matmul(Q, U))
        Uinv = np.rint(np.linalg.inv(np.array(U, dtype=float))).astype(int).tolist()
        assert matmul(U, Uinv) == [[int(i == k) for k in range(n)] for i in range(n)]
        for _ in range(3):
            x = [rng.randint(-3, 3) for _ in range(n)]
            xp = [sum(Uinv[i][k] * x[k] for k in range(n)) for i in range(n)]
            assert is_characteristic(IntersectionForm(Q), x) == is_characteristic(IntersectionForm(Qp), xp)
            assert self_intersection(IntersectionForm(Q), x) == self_intersection(IntersectionForm(Qp), xp)


def test_connected_sum_properties():
    rng = random.Random(3)
    for A, B in zip(RANDOM_FORMS[::2], RANDOM_FORMS[1::2]):
        fa, fb = IntersectionForm(A, rng.randint(0, 1)), IntersectionForm(B, rng.randint(0, 1))
        s = connected_sum(fa, fb)
        assert s.b2 == fa.b2 + fb.b2
        assert signature(s) == signature(fa) + signature(fb)
        assert s.ks == fa.ks ^ fb.ks
        x = [rng.randint(-4, 4) for _ in range(fa.b2)]
        assert divisibility(pad_class(x, fb.b2)) == divisibility(x)


def test_descriptors():
    assert from_descriptor("CP2") == preset("CP2")
    assert from_descriptor({"preset": "K3"}) == preset("K3")
    assert from_descriptor({"matrix": [[0, 1], [1, 0]], "ks": 0}) == preset("S2xS2")
    assert from_descriptor({"matrix": [["-1"]]}) == preset("CP2bar")
    summed = from_descriptor({"sum": ["CP2", {"preset": "S2xS2"}, {"matrix": [[-1]], "ks": 0}]})
    assert summed.b2 == 4 and signature(summed) == 0
    for bad in ({"matrix": [[1.5]]}, {"foo": 1}, 3, {"sum": "CP2"}, {"matrix": [[2]]}):
        with pytest.raises(InvalidForm):
            from_descriptor(bad)
