"""Contact surgery diagrams and their reduction to (+-1)-surgeries.

A :class:`ContactDiagram` lists Legendrian components together with their
pairwise linking numbers, inside a handlebody with some 1-handles. Rational
contact coefficients are rewritten as contact (+-1)-surgeries on push-offs and
stabilizations; the reduced diagram then determines the linking matrix of a
4-dimensional handlebody and the evaluation of c1 on its 2-handles.

Linking numbers of push-offs follow the Legendrian convention: a push-off
``L'`` of ``L`` satisfies ``lk(L, L') = tb(L)`` and inherits every other
linking number of ``L``. Stabilizing changes ``tb`` and ``rot`` only.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from fractions import Fraction
from typing import Sequence

from .errors import DiagramFormatError, UnsupportedCoefficient
from .exact_arith import Inertia, QSymMatrix, inertia, negative_cf_expand, to_rat

CONVENTIONS = ("chain", "parallel")
# Selected by the Honda-family oracle: consecutive push-offs reproduce the
# closed-form invariants, parallel push-offs of one knot do not.
DEFAULT_CONVENTION = "chain"


@dataclass(frozen=True)
class LegendrianComponent:
    id: str
    tb: int
    rot: int
    coeff: Fraction
    stabilizations: int = 0

    def __post_init__(self):
        object.__setattr__(self, "coeff", to_rat(self.coeff))
        if self.coeff == 0:
            raise UnsupportedCoefficient(f"component {self.id}: contact coefficient 0")

    def smooth_framing(self) -> Fraction:
        return self.tb + self.coeff


def smooth_framing(c: LegendrianComponent) -> Fraction:
    """Surgery coefficient of ``c`` relative to the Seifert framing."""
    return c.tb + c.coeff


@dataclass(frozen=True)
class ContactDiagram:
    """Legendrian link in a handlebody with ``one_handles`` 1-handles.

    ``variant`` and ``convention`` are the default reduction choices used by
    :func:`reduce_diagram` when none are passed explicitly.
    """

    one_handles: int
    components: tuple
    linking: tuple
    variant: int = 0
    convention: str = DEFAULT_CONVENTION

    def __post_init__(self):
        comps = tuple(self.components)
        lk = tuple(tuple(int(x) for x in row) for row in self.linking)
        object.__setattr__(self, "components", comps)
        object.__setattr__(self, "linking", lk)
        n = len(comps)
        if self.one_handles < 0:
            raise DiagramFormatError("one_handles must be non-negative")
        if len(lk) != n or any(len(row) != n for row in lk):
            raise DiagramFormatError(
                f"linking matrix must be {n}x{n} for {n} components")
        for i in range(n):
            for j in range(i + 1, n):
                if lk[i][j] != lk[j][i]:
                    raise DiagramFormatError(f"linking matrix not symmetric at ({i}, {j})")
        ids = [c.id for c in comps]
        if len(set(ids)) != len(ids):
            raise DiagramFormatError("component ids must be unique")
        if self.variant not in (0, 1):
            raise DiagramFormatError("variant must be 0 or 1")
        if self.convention not in CONVENTIONS:
            raise DiagramFormatError(f"convention must be one of {CONVENTIONS}")

    def __len__(self):
        return len(self.components)


@dataclass(frozen=True)
class ReducedDiagram:
    diagram: ContactDiagram
    q_count: int
    provenance: dict = field(default_factory=dict)

    def __post_init__(self):
        plus = sum(1 for c in self.diagram.components if c.coeff == 1)
        bad = [c.id for c in self.diagram.components if c.coeff not in (1, -1)]
        if bad:
            raise ValueError(f"reduced diagram has non-unit coefficients: {bad}")
        if plus != self.q_count:
            raise ValueError(f"q_count {self.q_count} != number of +1 components {plus}")


@dataclass(frozen=True)
class ComponentReduction:
    """Components replacing one original component, with their mutual linking."""

    components: tuple
    linking: tuple
    q_count: int


@dataclass(frozen=True)
class FourManifoldData:
    Q: QSymMatrix
    c1_vec: tuple
    chi: int
    inertia: Inertia
    q_count: int
    one_handles: int = 0
    labels: tuple = ()

    @property
    def sigma(self) -> int:
        return self.inertia.sigma

    @property
    def dim(self) -> int:
        return self.Q.dim


def _stabilized(c: LegendrianComponent, new_id: str, s: int, sign: int) -> LegendrianComponent:
    return LegendrianComponent(new_id, c.tb - s, c.rot + sign * s, Fraction(-1),
                               c.stabilizations + s)


def _legendrian_chain(base: LegendrianComponent, cf: Sequence[int], sign: int,
                      convention: str, prefix: str):
    """(-1)-components realizing a contact r-surgery, r <= -1, on ``base``.

    With ``cf = [a0, ..., am]`` the first knot is ``base`` stabilized
    ``-a0 - 1`` times and each later knot is a push-off of the previous one
    with ``-ai - 2`` further stabilizations, all of sign ``sign``.
    """
    comps = []
    s = -cf[0] - 1
    for k, a in enumerate(cf):
        if k:
            s += -a - 2
        comps.append(_stabilized(base, f"{prefix}{k + 1}", s, sign))
    m = len(comps)
    lk = [[0] * m for _ in range(m)]
    for i in range(m):
        for j in range(m):
            if i != j:
                if convention == "chain":
                    lk[i][j] = comps[min(i, j)].tb
                else:
                    lk[i][j] = base.tb
    return comps, lk


def reduce_component(c: LegendrianComponent, variant: int = 0,
                     convention: str = DEFAULT_CONVENTION) -> ComponentReduction:
    """Rewrite one contact surgery as contact (+-1)-surgeries.

    * ``+1`` and ``-1`` are kept.
    * ``r < -1``: Legendrian surgery on a stabilized chain read off the
      negative continued fraction of ``r``.
    * ``p/(p+1)`` with ``p >= 1``: two (+1)-surgeries on ``c`` and a push-off,
      followed for ``p > 1`` by a ``-p/(p-1)`` chain on a further push-off.

    Stabilization signs are ``(-1)**variant``.
    """
    if variant not in (0, 1):
        raise ValueError("variant must be 0 or 1")
    if convention not in CONVENTIONS:
        raise ValueError(f"convention must be one of {CONVENTIONS}")
    r = c.coeff
    sign = -1 if variant else 1
    if r == 1 or r == -1:
        return ComponentReduction((c,), ((0,),), 1 if r == 1 else 0)
    if r < -1:
        comps, lk = _legendrian_chain(c, negative_cf_expand(r), sign, convention,
                                      f"{c.id}.")
        return ComponentReduction(tuple(comps), tuple(map(tuple, lk)), 0)
    if 0 < r < 1 and r.denominator == r.numerator + 1:
        p = r.numerator
        plus = [replace(c, id=f"{c.id}+1", coeff=Fraction(1)),
                replace(c, id=f"{c.id}+2", coeff=Fraction(1))]
        chain, chain_lk = [], []
        if p > 1:
            chain, chain_lk = _legendrian_chain(
                c, negative_cf_expand(Fraction(-p, p - 1)), sign, convention, f"{c.id}.")
        comps = plus + chain
        m = len(comps)
        lk = [[c.tb if i != j else 0 for j in range(m)] for i in range(m)]
        for i in range(len(chain)):
            for j in range(len(chain)):
                lk[2 + i][2 + j] = chain_lk[i][j]
        return ComponentReduction(tuple(comps), tuple(map(tuple, lk)), 2)
    raise UnsupportedCoefficient(
        f"component {c.id}: contact coefficient {r} is not +1, 1/2, p/(p+1) or <= -1")


def reduce_diagram(d: ContactDiagram, variant: int | None = None,
                   convention: str | None = None) -> ReducedDiagram:
    variant = d.variant if variant is None else variant
    convention = d.convention if convention is None else convention
    parts = [reduce_component(c, variant, convention) for c in d.components]
    comps = []
    owner = []
    local = []
    for k, part in enumerate(parts):
        for idx, comp in enumerate(part.components):
            comps.append(comp)
            owner.append(k)
            local.append(idx)
    m = len(comps)
    lk = [[0] * m for _ in range(m)]
    for a in range(m):
        for b in range(m):
            if a == b:
                continue
            ka, kb = owner[a], owner[b]
            if ka == kb:
                lk[a][b] = parts[ka].linking[local[a]][local[b]]
            else:
                lk[a][b] = d.linking[ka][kb]
    provenance = {comps[a].id: d.components[owner[a]].id for a in range(m)}
    reduced = ContactDiagram(d.one_handles, tuple(comps), tuple(map(tuple, lk)),
                             variant, convention)
    return ReducedDiagram(reduced, sum(p.q_count for p in parts), provenance)


def build_four_manifold(rd: ReducedDiagram, one_handles: int | None = None) -> FourManifoldData:
    """Linking matrix, c1 evaluation, Euler characteristic and inertia.

    The diagonal holds smooth framings (``tb - 1`` or ``tb + 1``), c1 on each
    2-handle is the rotation number, and ``chi = 1 - one_handles + #2-handles``.
    """
    d = rd.diagram
    h1 = d.one_handles if one_handles is None else one_handles
    n = len(d.components)
    rows = [[0] * n for _ in range(n)]
    for i, c in enumerate(d.components):
        rows[i][i] = int(c.tb + c.coeff)
        for j in range(n):
            if i != j:
                rows[i][j] = d.linking[i][j]
    Q = QSymMatrix(rows)
    return FourManifoldData(
        Q=Q,
        c1_vec=tuple(c.rot for c in d.components),
        chi=1 - h1 + n,
        inertia=inertia(Q),
        q_count=rd.q_count,
        one_handles=h1,
        labels=tuple(c.id for c in d.components),
    )


def permute_four_manifold(fmd: FourManifoldData, perm: Sequence[int]) -> FourManifoldData:
    """Reorder the 2-handle basis: new index ``k`` is old index ``perm[k]``."""
    Q = QSymMatrix([[fmd.Q[perm[i], perm[j]] for j in range(len(perm))]
                    for i in range(len(perm))])
    return replace(fmd, Q=Q, c1_vec=tuple(fmd.c1_vec[p] for p in perm),
                   inertia=inertia(Q),
                   labels=tuple(fmd.labels[p] for p in perm) if fmd.labels else ())
