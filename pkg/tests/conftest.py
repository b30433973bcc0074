import random

import pytest
import sympy

from contactd3 import _kernels_py

try:
    from contactd3 import _kernels as _kernels_c
except ImportError:
    _kernels_c = None

BACKENDS = [pytest.param(_kernels_py, id="python")]
if _kernels_c is not None:
    BACKENDS.append(pytest.param(_kernels_c, id="compiled"))


@pytest.fixture(params=BACKENDS)
def kernels(request):
    return request.param


def random_symmetric(rng, n, lo=-4, hi=4, singular_rank=None):
    if singular_rank is None:
        a = [[0] * n for _ in range(n)]
        for i in range(n):
            for j in range(i, n):
                a[i][j] = a[j][i] = rng.randint(lo, hi)
        return a
    # B^T D B with B of rank <= singular_rank
    k = singular_rank
    B = [[rng.randint(-2, 2) for _ in range(n)] for _ in range(k)]
    D = [rng.choice([-3, -2, -1, 1, 2, 3]) for _ in range(k)]
    return [[sum(B[t][i] * D[t] * B[t][j] for t in range(k)) for j in range(n)] for i in range(n)]


def random_unimodular(rng, n, steps=None):
    E = [[int(i == j) for j in range(n)] for i in range(n)]
    for _ in range(steps if steps is not None else 3 * n):
        if n < 2:
            break
        i, j = rng.sample(range(n), 2)
        s = rng.choice((1, -1))
        for r in range(n):
            E[r][i] += s * E[r][j]
    return E


def sympy_inertia(rows):
    """Inertia from the characteristic polynomial: real-rooted, so Descartes'
    rule of signs counts positive roots exactly."""
    n = len(rows)
    if n == 0:
        return (0, 0, 0)
    lam = sympy.Symbol("lam")
    poly = sympy.Poly(sympy.Matrix(rows).charpoly(lam).as_expr(), lam)
    coeffs = poly.all_coeffs()
    zero = 0
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
        zero += 1

    def changes(cs):
        cs = [c for c in cs if c != 0]
        return sum(1 for a, b in zip(cs, cs[1:]) if (a > 0) != (b > 0))

    pos = changes(coeffs)
    deg = len(coeffs) - 1
    neg = changes([c * (-1) ** (deg - k) for k, c in enumerate(coeffs)])
    return (pos, neg, zero)


@pytest.fixture
def rng():
    return random.Random(20021017)
