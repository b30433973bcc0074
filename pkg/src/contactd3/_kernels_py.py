"""Pure-Python integer kernels.

Reference implementations of the hot loops; the compiled module
``contactd3._kernels`` mirrors these function by function.
"""

from math import gcd


def int_inertia(rows):
    """Return ``(n_plus, n_minus, n_zero)`` of a symmetric integer matrix.

    Symmetric Gaussian elimination by congruence. Each Schur complement is
    scaled by the absolute value of its pivot and then by the gcd of the
    remaining block; both scalings are positive, so the inertia is unchanged.
    When every remaining diagonal entry vanishes, the basis vector ``e_k`` is
    replaced by ``e_k + e_j`` for some ``a[k][j] != 0``, which produces the
    nonzero diagonal entry ``2 a[k][j]``.
    """
    n = len(rows)
    a = [list(r) for r in rows]
    active = list(range(n))
    pos = neg = 0
    while active:
        piv = None
        best = 0
        for k in active:
            d = a[k][k]
            if d and (piv is None or abs(d) < best):
                piv, best = k, abs(d)
                if best == 1:
                    break
        if piv is None:
            pair = None
            for k in active:
                row = a[k]
                for j in active:
                    if row[j]:
                        pair = (k, j)
                        break
                if pair:
                    break
            if pair is None:
                break
            k, j = pair
            for t in active:
                a[k][t] += a[j][t]
            for t in active:
                a[t][k] += a[t][j]
            # now a[k][k] == 2 * a[k][j] != 0
            piv = k
        p = a[piv][piv]
        active.remove(piv)
        if p > 0:
            pos += 1
        else:
            neg += 1
        col = [i for i in active if a[i][piv]]
        if not col:
            continue
        ap = abs(p)
        sp = 1 if p > 0 else -1
        if ap != 1:
            for i in active:
                row = a[i]
                for j in active:
                    row[j] *= ap
        for i in col:
            ai = a[i][piv] * sp
            row = a[i]
            for j in col:
                row[j] -= ai * a[piv][j]
        if ap != 1:
            g = 0
            for i in active:
                row = a[i]
                for j in active:
                    if row[j]:
                        g = gcd(g, row[j])
                        if g == 1:
                            break
                if g == 1:
                    break
            if g > 1:
                for i in active:
                    row = a[i]
                    for j in active:
                        row[j] //= g
    return pos, neg, n - pos - neg


def int_det(rows):
    """Determinant of a square integer matrix by Bareiss elimination."""
    n = len(rows)
    if n == 0:
        return 1
    a = [list(r) for r in rows]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k]:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        akk = a[k][k]
        rowk = a[k]
        for i in range(k + 1, n):
            rowi = a[i]
            aik = rowi[k]
            for j in range(k + 1, n):
                rowi[j] = (rowi[j] * akk - aik * rowk[j]) // prev
        prev = akk
    return sign * a[n - 1][n - 1]
