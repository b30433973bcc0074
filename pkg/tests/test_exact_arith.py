from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from contactd3.errors import DomainError
from contactd3.exact_arith import (Inertia, QSymMatrix, cf_evaluate, determinant, dot, inertia,
                                   negative_cf_expand, solve_linear, to_rat)

from conftest import random_symmetric, random_unimodular, sympy_inertia

F = Fraction


def nested_oracle(coeffs):
    """Evaluate a0 - 1/(a1 - ...) with sympy rationals, outermost first."""
    if len(coeffs) == 1:
        return sympy.Rational(coeffs[0])
    return sympy.Rational(coeffs[0]) - 1 / nested_oracle(coeffs[1:])


@pytest.mark.parametrize("r, expected", [
    (F(-2), [-2]),
    (F(-3, 2), [-2, -2]),
    (F(-7, 3), [-3, -2, -2]),
])
def test_negative_cf_examples(r, expected):
    assert negative_cf_expand(r) == expected
    assert nested_oracle(expected) == sympy.Rational(r.numerator, r.denominator)


@pytest.mark.parametrize("coeffs, value", [([-2], F(-2)), ([-2, -2], F(-3, 2)),
                                           ([-3, -2, -2], F(-7, 3))])
def test_cf_evaluate_examples(coeffs, value):
    assert cf_evaluate(coeffs) == value


def test_cf_minus_one_is_singleton():
    assert negative_cf_expand(-1) == [-1]


@pytest.mark.parametrize("r", [F(-1, 2), F(0), F(3), F(-99, 100)])
def test_cf_rejects_above_minus_one(r):
    with pytest.raises(DomainError):
        negative_cf_expand(r)


def test_cf_evaluate_errors():
    with pytest.raises(DomainError):
        cf_evaluate([])
    with pytest.raises(DomainError):
        cf_evaluate([1, 0])


@given(st.integers(2, 400), st.integers(1, 399))
def test_cf_round_trip_property(a, b):
    if b >= a:
        b = b % (a - 1) + 1
    r = F(-a, b)
    cf = negative_cf_expand(r)
    assert cf_evaluate(cf) == r
    assert all(x <= -2 for x in cf)
    assert nested_oracle(cf) == sympy.Rational(-a, b)


@pytest.mark.parametrize("p", [2, 3, 4, 10, 57])
def test_cf_all_minus_two_chain(p):
    assert negative_cf_expand(F(-p, p - 1)) == [-2] * (p - 1)


def test_to_rat():
    assert to_rat("-7/3") == F(-7, 3)
    assert to_rat("−1/2") == F(-1, 2)
    assert to_rat(4) == 4
    with pytest.raises(TypeError):
        to_rat(0.5)
    with pytest.raises(DomainError):
        to_rat("1/0")


def test_qsym_rejects_asymmetric():
    with pytest.raises(DomainError):
        QSymMatrix([[1, 2], [3, 4]])
    with pytest.raises(DomainError):
        QSymMatrix([[1, 2]])


def test_qsym_direct_sum_and_congruence():
    Q = QSymMatrix.direct_sum([[2]], [[0, 1], [1, 0]])
    assert Q == [[2, 0, 0], [0, 0, 1], [0, 1, 0]]
    E = [[1, 0, 0], [1, 1, 0], [0, 0, 1]]
    assert Q.congruent(E) == [[2, 0, 1], [0, 0, 1], [1, 1, 0]]


@pytest.mark.parametrize("rows, expected", [
    ([[1]], (1, 0, 0)),
    ([[0, 1], [1, 0]], (1, 1, 0)),
    ([[0, -1], [-1, -2]], (1, 1, 0)),
    ([], (0, 0, 0)),
    ([[0, 0], [0, 0]], (0, 0, 2)),
    ([[F(1, 2), F(1, 3)], [F(1, 3), F(-1, 5)]], (1, 1, 0)),
])
def test_inertia_examples(rows, expected):
    assert inertia(QSymMatrix(rows)) == Inertia(*expected)


def test_inertia_matches_charpoly_oracle(rng):
    for _ in range(200):
        n = rng.randint(1, 6)
        rank = rng.choice([None, None, rng.randint(0, n)])
        A = random_symmetric(rng, n, singular_rank=rank)
        assert tuple(inertia(QSymMatrix(A))) == sympy_inertia(A)


def test_inertia_congruence_invariance(rng):
    for _ in range(500):
        n = rng.randint(1, 6)
        A = QSymMatrix(random_symmetric(rng, n))
        E = random_unimodular(rng, n)
        assert inertia(A.congruent(E)) == inertia(A)


def test_determinant_matches_sympy(rng):
    for _ in range(200):
        n = rng.randint(0, 7)
        A = random_symmetric(rng, n, -9, 9)
        assert determinant(QSymMatrix(A)) == (sympy.Matrix(A).det() if n else 1)
    Q = QSymMatrix([[F(1, 2), 1], [1, F(2, 3)]])
    assert determinant(Q) == F(1, 3) - 1


HONDA_13 = [[0, 1, 1, 1], [1, 0, -1, -1], [1, -1, 0, -1], [1, -1, -1, -3]]


@pytest.mark.parametrize("rows, r, expected", [
    ([[2]], [2], (F(1),)),
    ([[0]], [1], None),
    (HONDA_13, [0, 0, 0, 1], (F(-1, 3), F(1, 3), F(1, 3), F(-2, 3))),
])
def test_solve_linear_examples(rows, r, expected):
    x = solve_linear(QSymMatrix(rows), r)
    assert x == expected
    if x is not None:
        assert QSymMatrix(rows).apply(x) == tuple(F(v) for v in r)


def test_solve_linear_length_mismatch():
    with pytest.raises(DomainError):
        solve_linear(QSymMatrix([[1]]), [1, 2])


def test_solve_linear_singular_well_defined(rng):
    """Perturbing a solution along the kernel leaves r.x unchanged."""
    for _ in range(300):
        n = rng.randint(2, 6)
        A = random_symmetric(rng, n, singular_rank=rng.randint(1, n - 1))
        Q = QSymMatrix(A)
        y = [rng.randint(-3, 3) for _ in range(n)]
        r = Q.apply(y)
        x1 = solve_linear(Q, r)
        assert x1 is not None and Q.apply(x1) == r
        kernel = sympy.Matrix(A).nullspace()
        x2 = list(x1)
        for v in kernel:
            c = rng.randint(-5, 5)
            for k in range(n):
                x2[k] += c * F(int(sympy.fraction(v[k])[0]), int(sympy.fraction(v[k])[1]))
        assert Q.apply(x2) == r
        assert dot(r, x1) == dot(r, x2) == dot(r, y)


@settings(max_examples=200)
@given(st.integers(1, 5).flatmap(lambda n: st.tuples(
    st.lists(st.lists(st.integers(-5, 5), min_size=n, max_size=n), min_size=n, max_size=n),
    st.lists(st.integers(-5, 5), min_size=n, max_size=n))))
def test_solve_linear_property(data):
    rows, r = data
    n = len(rows)
    A = [[rows[min(i, j)][max(i, j)] for j in range(n)] for i in range(n)]
    Q = QSymMatrix(A)
    x = solve_linear(Q, r)
    M = sympy.Matrix(A)
    solvable = M.rank() == M.row_join(sympy.Matrix(r)).rank()
    assert (x is not None) == solvable
    if x is not None:
        assert Q.apply(x) == tuple(F(v) for v in r)
