"""Honda's structures xi_0, xi_1 on circle bundles Y_{g,n} and their obstruction.

Y_{g,n} is the oriented circle bundle of Euler number n over the closed
genus-g surface, bounding the disc bundle D_{g,n}. For n >= 2g > 0 both
structures have

* Spin^c structure t_{2ig-1}, the restriction of s_e with
  ``2 - 2g + n + 2e = (-1)^i (n - 2g)``;
* ``d3(xi_i) = (n^2 - 3n + 4g^2) / (4n)``,

while a semi-fillable structure inducing the same Spin^c structure would
have ``d3 = (n^2 + n + 4g^2)/(4n) - 2g - 2``. The two values differ by
``2g + 1``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import DomainError
from .exact_arith import QSymMatrix, inertia
from .invariants import compute_invariants, d3 as pipeline_d3
from .surgery import (DEFAULT_CONVENTION, ContactDiagram, FourManifoldData,
                      LegendrianComponent, build_four_manifold, reduce_diagram)

NOT_SEMI_FILLABLE = "NotSemiFillable"
INCONCLUSIVE = "Inconclusive"
UNSUPPORTED = "Unsupported"
COINCIDE_NOTE = "StructuresCoincide"


@dataclass(frozen=True)
class CircleBundle:
    g: int
    n: int

    @property
    def b1(self) -> int:
        return 2 * self.g

    @property
    def torsion_order(self) -> int:
        return abs(self.n)


@dataclass(frozen=True, eq=False)
class SpinCClass:
    """Spin^c structure t_e on Y_{g,n}, carried by its lift s_e on D_{g,n}.

    Equality and hashing use ``e mod n``; ``c1_on_generator`` belongs to the
    lift and therefore depends on the representative.
    """

    g: int
    n: int
    e: int

    @property
    def residue(self) -> int:
        return self.e % self.n if self.n else self.e

    @property
    def c1_on_generator(self) -> int:
        return 2 - 2 * self.g + self.n + 2 * self.e

    def __eq__(self, other):
        if not isinstance(other, SpinCClass):
            return NotImplemented
        return (self.g, self.n, self.residue) == (other.g, other.n, other.residue)

    def __hash__(self):
        return hash((self.g, self.n, self.residue))


def _check(g, n, i=None):
    if not (isinstance(g, int) and isinstance(n, int)):
        raise DomainError("g and n must be integers")
    if not n >= 2 * g > 0:
        raise DomainError(f"need n >= 2g > 0, got g={g}, n={n}")
    if i is not None and i not in (0, 1):
        raise DomainError(f"structure index must be 0 or 1, got {i}")


def honda_spinc(g: int, n: int, i: int) -> SpinCClass:
    _check(g, n, i)
    # 2 - 2g + n + 2e = (-1)^i (n - 2g)
    e = -1 if i == 0 else 2 * g - 1 - n
    return SpinCClass(g, n, e)


def model_manifold(g: int, n: int, i: int) -> FourManifoldData:
    """D_{g,n} # S^2 x S^2 # (n-2g) CP^2-bar with the c1 of s_i.

    Basis: disc bundle generator, hyperbolic pair, exceptional classes.
    """
    _check(g, n, i)
    m = n - 2 * g
    s = -1 if i else 1
    diag_blocks = [[[n]], [[0, 1], [1, 0]]] + [[[-1]]] * m
    Q = QSymMatrix.direct_sum(*diag_blocks)
    c1 = (s * m, 0, 0) + (s,) * m
    labels = ("D", "H1", "H2") + tuple(f"E{k + 1}" for k in range(m))
    return FourManifoldData(Q=Q, c1_vec=c1, chi=1 - 2 * g + Q.dim, inertia=inertia(Q),
                            q_count=2, one_handles=2 * g, labels=labels)


def honda_diagram(g: int, n: int, i: int = 0,
                  convention: str = DEFAULT_CONVENTION) -> ContactDiagram:
    """Contact surgery diagram of xi_i on Y_{g,n}.

    A Legendrian surface knot through 2g 1-handles (tb = 2g-1, rot = 0,
    contact coefficient -1), and a Legendrian fiber (a meridian of it, tb = -1,
    rot = 0) with contact coefficient p/(p+1), p = n - 2g + 1.
    """
    _check(g, n, i)
    p = n - 2 * g + 1
    comps = (
        LegendrianComponent("S", 2 * g - 1, 0, -1),
        LegendrianComponent("F", -1, 0, Fraction(p, p + 1)),
    )
    return ContactDiagram(2 * g, comps, ((0, 1), (1, 0)), variant=i, convention=convention)


def honda_four_manifold(g: int, n: int, i: int = 0,
                        convention: str = DEFAULT_CONVENTION) -> FourManifoldData:
    return build_four_manifold(reduce_diagram(honda_diagram(g, n, i, convention)))


def d3_honda(g: int, n: int) -> Fraction:
    _check(g, n)
    return Fraction(n * n - 3 * n + 4 * g * g, 4 * n)


def nicolaescu_kappa(g: int, n: int, i: int) -> int:
    """Index of t_{xi_i} in the convention where kappa labels t_{g-1+kappa}."""
    e = honda_spinc(g, n, i).e
    k = (e - (g - 1)) % n
    if not 1 <= k <= n - 1:
        raise DomainError(f"kappa representative {k} outside [1, n-1]")
    return k


def d3_semifillable(g: int, n: int, kappa: int) -> Fraction:
    """d3 forced on a semi-fillable structure inducing t_{g-1+kappa}.

    Solves ``-1 - b1 = d3 - (2g-1)/2 - (n-1)/4 - kappa^2/n + kappa``.
    """
    _check(g, n)
    if kappa not in (g, n - g):
        raise DomainError(f"kappa must be g={g} or n-g={n - g}, got {kappa}")
    b1 = 2 * g
    return (-1 - b1 + Fraction(2 * g - 1, 2) + Fraction(n - 1, 4)
            + Fraction(kappa * kappa, n) - kappa)


def d3_semifillable_closed(g: int, n: int) -> Fraction:
    _check(g, n)
    return Fraction(n * n + n + 4 * g * g, 4 * n) - 2 * g - 2


@dataclass(frozen=True)
class ObstructionReport:
    g: int
    n: int
    i: int
    verdict: str
    spinc_e: int | None = None
    d3_xi: Fraction | None = None
    d3_model: Fraction | None = None
    kappa: int | None = None
    d3_semifillable: Fraction | None = None
    gap: Fraction | None = None
    note: str | None = None

    FIELDS = ("g", "n", "i", "spinc_e", "d3_xi", "d3_model", "kappa",
              "d3_semifillable", "gap", "verdict", "note")

    def to_dict(self) -> dict:
        out = {}
        for name in self.FIELDS:
            v = getattr(self, name)
            out[name] = str(v) if isinstance(v, Fraction) else v
        return out


def obstruction_report(g: int, n: int, i: int) -> ObstructionReport:
    """Verdict on semi-fillability of xi_i on Y_{g,n}; total on all integer inputs."""
    if i not in (0, 1):
        raise DomainError(f"structure index must be 0 or 1, got {i}")
    if g < 0:
        raise DomainError(f"genus must be non-negative, got {g}")
    if g == 0:
        return ObstructionReport(g, n, i, UNSUPPORTED,
                                 note="g = 0: Y_{0,n} is a lens space; tight structures are Stein fillable")
    if n < 2 * g:
        return ObstructionReport(g, n, i, INCONCLUSIVE,
                                 note="n < 2g: no Spin^c structure with the required moduli properties")
    spinc = honda_spinc(g, n, i)
    kappa = nicolaescu_kappa(g, n, i)
    d3_xi = d3_honda(g, n)
    d3_model = pipeline_d3(model_manifold(g, n, i))
    bound = d3_semifillable(g, n, kappa)
    gap = d3_xi - bound
    verdict = NOT_SEMI_FILLABLE if gap > 0 else INCONCLUSIVE
    note = COINCIDE_NOTE if n == 2 * g else None
    return ObstructionReport(g, n, i, verdict, spinc.residue, d3_xi, d3_model, kappa,
                             bound, gap, note)


def sweep(g_max: int, n_max: int) -> list[ObstructionReport]:
    """Reports for all 1 <= g <= g_max, 2g <= n <= n_max, i in {0, 1}, in
    lexicographic order. Each row is checked against the closed forms."""
    if g_max < 1 or n_max < 2:
        raise DomainError("need g_max >= 1 and n_max >= 2")
    rows = []
    for g in range(1, g_max + 1):
        for n in range(2 * g, n_max + 1):
            for i in (0, 1):
                rep = obstruction_report(g, n, i)
                if rep.d3_model != rep.d3_xi:
                    raise AssertionError(f"model d3 {rep.d3_model} != closed form {rep.d3_xi}"
                                         f" at (g, n, i) = ({g}, {n}, {i})")
                if rep.d3_semifillable != d3_semifillable_closed(g, n):
                    raise AssertionError(f"semi-fillable d3 mismatch at ({g}, {n}, {i})")
                if rep.gap != 2 * g + 1:
                    raise AssertionError(f"gap {rep.gap} != 2g+1 at ({g}, {n}, {i})")
                rows.append(rep)
    return rows


def model_invariants(g: int, n: int, i: int):
    return compute_invariants(model_manifold(g, n, i))
