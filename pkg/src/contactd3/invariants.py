"""Torsion test, c1 squared and the three-dimensional invariant d3."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import NonTorsion
from .exact_arith import QSymMatrix, dot, solve_linear
from .surgery import (ContactDiagram, FourManifoldData, LegendrianComponent,
                      build_four_manifold, reduce_diagram)

# Net d3 contribution of one contact (+1)-surgery: 1/2 from the ball removed
# from the cobordism plus the boundary value q = 1/2 of that ball.
PLUS_ONE_CORRECTION = Fraction(1)


@dataclass(frozen=True)
class InvariantReport:
    chi: int
    sigma: int
    torsion: bool
    c1_squared: Fraction | None
    d3: Fraction | None
    q_count: int
    inertia: tuple = ()

    def to_dict(self) -> dict:
        return {
            "chi": self.chi,
            "sigma": self.sigma,
            "torsion": self.torsion,
            "c1_squared": None if self.c1_squared is None else str(self.c1_squared),
            "d3": None if self.d3 is None else str(self.d3),
            "q_count": self.q_count,
            "inertia": list(self.inertia),
        }


def is_torsion(Q: QSymMatrix, r: Sequence) -> bool:
    """True iff ``r`` lies in the column space of ``Q`` over the rationals."""
    return solve_linear(Q, r) is not None


def c1_squared(Q: QSymMatrix, r: Sequence) -> Fraction:
    """``r . x`` for any rational solution of ``Q x = r``.

    Well defined: if ``Q x1 = Q x2 = r`` then ``r.x1 - r.x2 = x1^T Q (x1 - x2) = 0``.
    """
    x = solve_linear(Q, r)
    if x is None:
        raise NonTorsion("c1 is not in the image of the intersection form")
    return dot(r, x)


def d3_from(c1sq: Fraction, sigma: int, chi: int, q_count: int) -> Fraction:
    return (Fraction(c1sq) - 3 * sigma - 2 * chi) / 4 + q_count * PLUS_ONE_CORRECTION


def d3(fmd: FourManifoldData, r: Sequence | None = None) -> Fraction:
    r = fmd.c1_vec if r is None else r
    return d3_from(c1_squared(fmd.Q, r), fmd.sigma, fmd.chi, fmd.q_count)


def compute_invariants(fmd: FourManifoldData, r: Sequence | None = None) -> InvariantReport:
    r = fmd.c1_vec if r is None else r
    x = solve_linear(fmd.Q, r)
    if x is None:
        return InvariantReport(fmd.chi, fmd.sigma, False, None, None, fmd.q_count,
                               tuple(fmd.inertia))
    c1sq = dot(r, x)
    return InvariantReport(fmd.chi, fmd.sigma, True, c1sq,
                           d3_from(c1sq, fmd.sigma, fmd.chi, fmd.q_count),
                           fmd.q_count, tuple(fmd.inertia))


def diagram_invariants(d: ContactDiagram, variant: int | None = None,
                       convention: str | None = None) -> InvariantReport:
    return compute_invariants(build_four_manifold(reduce_diagram(d, variant, convention)))


def plus_one_family_diagram(m: int) -> ContactDiagram:
    """m contact (+1)- and m contact (-1)-surgeries on push-offs of the
    tb = -1 unknot in the standard 3-sphere; the result is the standard
    3-sphere again."""
    comps = [LegendrianComponent(f"K{k + 1}", -1, 0, 1) for k in range(m)]
    comps += [LegendrianComponent(f"K{k + 1}'", -1, 0, -1) for k in range(m)]
    n = 2 * m
    lk = [[-1 if i != j else 0 for j in range(n)] for i in range(n)]
    return ContactDiagram(0, tuple(comps), tuple(map(tuple, lk)))


def verify_plus_one_family(N: int) -> bool:
    """Check d3 = -1/2 for the first ``N`` members of the (+1)/(-1) push-off family."""
    if N < 1:
        raise ValueError("N must be at least 1")
    for m in range(1, N + 1):
        report = diagram_invariants(plus_one_family_diagram(m))
        if not report.torsion or report.d3 != Fraction(-1, 2):
            return False
    return True
