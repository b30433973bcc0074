import pytest
import sympy

from contactd3 import _backend, _kernels_py

from conftest import random_symmetric, sympy_inertia


def test_kernel_inertia_against_oracle(kernels, rng):
    for _ in range(300):
        n = rng.randint(0, 6)
        A = random_symmetric(rng, n, singular_rank=rng.choice([None, rng.randint(0, n)]))
        assert tuple(kernels.int_inertia(A)) == sympy_inertia(A)


def test_kernel_det_against_oracle(kernels, rng):
    for _ in range(300):
        n = rng.randint(0, 7)
        A = random_symmetric(rng, n, -20, 20)
        expected = sympy.Matrix(A).det() if n else 1
        assert kernels.int_det(A) == expected


def test_kernel_zero_diagonal_trick(kernels):
    A = [[0, 0, 3], [0, 0, 0], [3, 0, 0]]
    assert tuple(kernels.int_inertia(A)) == (1, 1, 1)


def test_compiled_overflow_raises_and_backend_falls_back():
    kc = pytest.importorskip("contactd3._kernels")
    big = 2 ** 40
    A = [[big, big - 1, 3], [big - 1, big, 5], [3, 5, -big]]
    with pytest.raises(OverflowError):
        kc.int_det(A)
    assert _backend.int_det(A) == sympy.Matrix(A).det()
    huge = [[2 ** 70, 1], [1, -(2 ** 70)]]
    with pytest.raises(OverflowError):
        kc.int_inertia(huge)
    assert tuple(_backend.int_inertia(huge)) == (1, 1, 0)


def test_backends_agree_on_moderate_forms(rng):
    kc = pytest.importorskip("contactd3._kernels")
    for _ in range(50):
        A = random_symmetric(rng, rng.randint(8, 12), -3, 3)
        assert kc.int_inertia(A) == _kernels_py.int_inertia(A)
        assert kc.int_det(A) == _kernels_py.int_det(A)


def test_backend_wrapper_on_dense_forms(rng):
    """Dense 30x30 minors exceed 64 bits; the wrapper must still be exact."""
    for _ in range(5):
        A = random_symmetric(rng, 30, -3, 3)
        assert _backend.int_inertia(A) == _kernels_py.int_inertia(A)
        assert _backend.int_det(A) == _kernels_py.int_det(A)


def test_compiled_handles_honda_forms_without_fallback():
    kc = pytest.importorskip("contactd3._kernels")
    from contactd3.circle_bundle import honda_four_manifold
    for g, n in [(1, 40), (4, 40), (8, 40)]:
        rows = honda_four_manifold(g, n, 0).Q.to_int_rows()
        assert kc.int_inertia(rows) == _kernels_py.int_inertia(rows) == (2, n - 2 * g + 1, 0)
        assert abs(kc.int_det(rows)) == n
