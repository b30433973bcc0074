"""Kirby calculus at the level of linking matrices.

A :class:`MarkedForm` is an integer symmetric form together with the values
of c1 on the basis. A handleslide of handle ``i`` over handle ``j`` replaces
the basis vector ``e_i`` by ``e_i + sign * e_j``; blowups and blowdowns add
or remove an unlinked (+-1)-framed unknot. ``swap`` and ``reverse`` only
relabel the basis (reorder handles, reverse an attaching circle).

Move scripts serialize one move per line::

    slide 3 0 -
    blowdown 4
    blowup - 1
    reverse 0
    swap 1 2

Indices are 0-based positions in the form at the time the move is applied.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import PreconditionError, ReductionIncomplete
from .exact_arith import QSymMatrix, inertia
from .invariants import c1_squared, d3_from


@dataclass(frozen=True)
class MarkedForm:
    Q: tuple
    c1: tuple
    labels: tuple = ()

    def __post_init__(self):
        Q = tuple(tuple(int(x) for x in row) for row in self.Q)
        c1 = tuple(int(x) for x in self.c1)
        n = len(Q)
        labels = tuple(self.labels) if self.labels else tuple(f"h{i}" for i in range(n))
        if any(len(row) != n for row in Q):
            raise ValueError("form is not square")
        if len(c1) != n or len(labels) != n:
            raise ValueError("c1 and labels must match the dimension of the form")
        for i in range(n):
            for j in range(i + 1, n):
                if Q[i][j] != Q[j][i]:
                    raise ValueError(f"form not symmetric at ({i}, {j})")
        object.__setattr__(self, "Q", Q)
        object.__setattr__(self, "c1", c1)
        object.__setattr__(self, "labels", labels)

    @property
    def dim(self) -> int:
        return len(self.Q)

    def matrix(self) -> QSymMatrix:
        return QSymMatrix(self.Q)

    @classmethod
    def from_four_manifold(cls, fmd) -> "MarkedForm":
        return cls(fmd.Q.to_int_rows(), fmd.c1_vec, fmd.labels or ())


@dataclass(frozen=True)
class Move:
    kind: str
    a: int
    b: int = 0
    sign: int = 1

    def __str__(self):
        sgn = "+" if self.sign > 0 else "-"
        if self.kind == "slide":
            return f"slide {self.a} {self.b} {sgn}"
        if self.kind == "blowdown":
            return f"blowdown {self.a}"
        if self.kind == "blowup":
            return f"blowup {sgn} {self.a}"
        if self.kind == "reverse":
            return f"reverse {self.a}"
        if self.kind == "swap":
            return f"swap {self.a} {self.b}"
        raise ValueError(f"unknown move kind {self.kind!r}")

    @classmethod
    def parse(cls, line: str) -> "Move":
        parts = line.split()
        if not parts:
            raise ValueError("empty move")
        kind = parts[0]

        def sgn(tok):
            if tok not in ("+", "-"):
                raise ValueError(f"bad sign {tok!r} in {line!r}")
            return 1 if tok == "+" else -1

        if kind == "slide" and len(parts) == 4:
            return cls("slide", int(parts[1]), int(parts[2]), sgn(parts[3]))
        if kind == "blowdown" and len(parts) == 2:
            return cls("blowdown", int(parts[1]))
        if kind == "blowup" and len(parts) == 3:
            return cls("blowup", int(parts[2]), 0, sgn(parts[1]))
        if kind == "reverse" and len(parts) == 2:
            return cls("reverse", int(parts[1]))
        if kind == "swap" and len(parts) == 3:
            return cls("swap", int(parts[1]), int(parts[2]))
        raise ValueError(f"cannot parse move {line!r}")


class MoveScript(tuple):
    """Ordered, replayable tuple of :class:`Move`."""

    def __new__(cls, moves: Iterable[Move] = ()):
        return super().__new__(cls, moves)

    def dumps(self) -> str:
        return "".join(f"{m}\n" for m in self)

    @classmethod
    def loads(cls, text: str) -> "MoveScript":
        moves = []
        for raw in text.splitlines():
            line = raw.split("#", 1)[0].strip()
            if line:
                moves.append(Move.parse(line))
        return cls(moves)


def _check_index(m: MarkedForm, *idx):
    for i in idx:
        if not 0 <= i < m.dim:
            raise IndexError(f"handle index {i} out of range for dimension {m.dim}")


def handleslide(m: MarkedForm, i: int, j: int, sign: int = 1) -> MarkedForm:
    """Slide handle ``i`` over handle ``j``: ``Q' = E^T Q E``, ``c1' = E^T c1``
    with ``E = I + sign * e_j e_i^T``."""
    _check_index(m, i, j)
    if i == j:
        raise PreconditionError("cannot slide a handle over itself")
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    Q = [list(row) for row in m.Q]
    n = m.dim
    for t in range(n):
        Q[i][t] += sign * Q[j][t]
    for t in range(n):
        Q[t][i] += sign * Q[t][j]
    c1 = list(m.c1)
    c1[i] += sign * c1[j]
    return MarkedForm(Q, c1, m.labels)


def blowup(m: MarkedForm, sign: int = -1, c1_entry: int = 1, label: str | None = None) -> MarkedForm:
    """Direct sum with an unlinked ``sign``-framed unknot carrying ``c1_entry``."""
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    if abs(c1_entry) % 2 != 1:
        raise PreconditionError("c1 on a (+-1)-class must be odd (characteristic)")
    n = m.dim
    Q = [list(row) + [0] for row in m.Q] + [[0] * n + [sign]]
    label = label or f"e{n}"
    return MarkedForm(Q, m.c1 + (c1_entry,), m.labels + (label,))


def blowdown(m: MarkedForm, i: int) -> MarkedForm:
    _check_index(m, i)
    if abs(m.Q[i][i]) != 1:
        raise PreconditionError(f"handle {i} has framing {m.Q[i][i]}, not +-1")
    if any(m.Q[i][t] for t in range(m.dim) if t != i):
        raise PreconditionError(f"handle {i} is still linked to other handles")
    if m.Q[i][i] == -1 and abs(m.c1[i]) != 1:
        raise PreconditionError(f"c1 on the (-1)-class {i} is {m.c1[i]}, not +-1")
    keep = [t for t in range(m.dim) if t != i]
    Q = [[m.Q[a][b] for b in keep] for a in keep]
    return MarkedForm(Q, [m.c1[t] for t in keep], [m.labels[t] for t in keep])


def reverse(m: MarkedForm, i: int) -> MarkedForm:
    _check_index(m, i)
    Q = [list(row) for row in m.Q]
    for t in range(m.dim):
        Q[i][t] = -Q[i][t]
    for t in range(m.dim):
        Q[t][i] = -Q[t][i]
    c1 = list(m.c1)
    c1[i] = -c1[i]
    return MarkedForm(Q, c1, m.labels)


def swap(m: MarkedForm, i: int, j: int) -> MarkedForm:
    _check_index(m, i, j)
    perm = list(range(m.dim))
    perm[i], perm[j] = perm[j], perm[i]
    Q = [[m.Q[perm[a]][perm[b]] for b in range(m.dim)] for a in range(m.dim)]
    return MarkedForm(Q, [m.c1[p] for p in perm], [m.labels[p] for p in perm])


def apply_move(m: MarkedForm, mv: Move) -> MarkedForm:
    if mv.kind == "slide":
        return handleslide(m, mv.a, mv.b, mv.sign)
    if mv.kind == "blowdown":
        return blowdown(m, mv.a)
    if mv.kind == "blowup":
        return blowup(m, mv.sign, mv.a)
    if mv.kind == "reverse":
        return reverse(m, mv.a)
    if mv.kind == "swap":
        return swap(m, mv.a, mv.b)
    raise ValueError(f"unknown move kind {mv.kind!r}")


def apply_script(m: MarkedForm, script: Iterable[Move]) -> MarkedForm:
    for mv in script:
        m = apply_move(m, mv)
    return m


def d3_of_form(m: MarkedForm, one_handles: int = 0, q_count: int = 0) -> Fraction:
    """``(c1^2 - 3 sigma - 2 chi)/4 + q_count`` of the handlebody with this form.

    Raises :class:`~contactd3.errors.NonTorsion` for non-torsion c1.
    """
    Q = m.matrix()
    return d3_from(c1_squared(Q, m.c1), inertia(Q).sigma, 1 - one_handles + m.dim, q_count)


class _Reducer:
    def __init__(self, m: MarkedForm):
        self.m = m
        self.input_c1 = m.c1
        self.script = []
        self.units = []  # isolated (+-1)-classes
        self.hyperbolic = []  # (i, j) with Q[i][i] = Q[j][j] = 0, Q[i][j] = +-1

    def do(self, mv: Move):
        self.m = apply_move(self.m, mv)
        self.script.append(mv)

    def slide_times(self, i, j, k):
        """``e_i <- e_i + k e_j`` as |k| unit slides."""
        for _ in range(abs(k)):
            self.do(Move("slide", i, j, 1 if k > 0 else -1))

    def done(self):
        return {i for i in self.units} | {x for p in self.hyperbolic for x in p}

    def free(self):
        d = self.done()
        return [i for i in range(self.m.dim) if i not in d]

    def split_unit(self, i):
        u = self.m.Q[i][i]
        for t in range(self.m.dim):
            if t != i and self.m.Q[i][t]:
                # e_t <- e_t - u Q[i][t] e_i kills Q[i][t] since u*u = 1
                self.slide_times(t, i, -u * self.m.Q[i][t])
        self.units.append(i)

    def split_hyperbolic(self, i, j):
        eps = self.m.Q[i][j]
        qjj = self.m.Q[j][j]
        # (e_j + k e_i)^2 = Q[j][j] + 2 k eps
        self.slide_times(j, i, -qjj // (2 * eps))
        for t in range(self.m.dim):
            if t in (i, j):
                continue
            qit, qjt = self.m.Q[i][t], self.m.Q[j][t]
            self.slide_times(t, i, -eps * qjt)
            self.slide_times(t, j, -eps * qit)
        self.hyperbolic.append((i, j))

    def find_hyperbolic(self):
        free = self.free()
        Q = self.m.Q
        for i in free:
            if Q[i][i]:
                continue
            for j in free:
                if j != i and abs(Q[i][j]) == 1 and Q[j][j] % 2 == 0:
                    return i, j
        return None

    def find_unit(self, u):
        return next((i for i in self.free() if self.m.Q[i][i] == u), None)

    def find_unit_slide(self, u):
        """A slide ``e_i <- e_i + s e_j`` making ``Q[i][i] == u``.

        The handle slid over is preferably the one of largest framing, which
        is the one expected to survive as the residual block.
        """
        free = self.free()
        Q = self.m.Q
        order = sorted(free, key=lambda t: (-Q[t][t], t))
        for j in order:
            for i in free:
                if i == j:
                    continue
                for s in (1, -1):
                    if Q[i][i] + Q[j][j] + 2 * s * Q[i][j] == u:
                        return i, j, s
        return None

    def step(self) -> bool:
        pair = self.find_hyperbolic()
        if pair:
            self.split_hyperbolic(*pair)
            return True
        for u in (-1, 1):
            i = self.find_unit(u)
            if i is not None:
                self.split_unit(i)
                return True
            slide = self.find_unit_slide(u)
            if slide:
                i, j, s = slide
                self.do(Move("slide", i, j, s))
                self.split_unit(i)
                return True
        return False

    def normalize(self, blow_down: bool):
        ref = next((x for x in self.input_c1 if x), 1)
        ref = 1 if ref > 0 else -1
        free = self.free()
        for i, j in self.hyperbolic:
            if self.m.Q[i][j] < 0:
                self.do(Move("reverse", j))
        for i in free + self.units:
            if self.m.c1[i] * ref < 0:
                self.do(Move("reverse", i))
        neg = [i for i in self.units if self.m.Q[i][i] < 0]
        pos = [i for i in self.units if self.m.Q[i][i] > 0]
        order = free + [x for p in self.hyperbolic for x in p] + neg + pos
        # selection sort by swaps
        current = list(range(self.m.dim))
        for k, want in enumerate(order):
            at = current.index(want)
            if at != k:
                self.do(Move("swap", k, at))
                current[k], current[at] = current[at], current[k]
        self.units = list(range(len(order) - len(neg) - len(pos), len(order)))
        if blow_down:
            for k in reversed(self.units):
                self.do(Move("blowdown", k))
            self.units = []


def reduce_to_blocks(m: MarkedForm, blow_down: bool = False,
                     max_steps: int = 100000) -> tuple[MarkedForm, MoveScript]:
    """Greedy reduction to ``R + H + ... + H + <-1> + ... + <+1> + ...``.

    Moves, in order of preference: isolate a (+-1)-framed handle by sliding
    everything else off it; split off a hyperbolic pair (a 0-framed handle
    linked once with an even-framed one); slide two handles together to
    create a (+-1)-framed handle. The residual block ``R`` comes first, then
    the hyperbolic pairs, then the (-1)- and (+1)-classes. Classes are finally
    oriented so c1 has the sign of the first nonzero input c1 entry; with
    ``blow_down`` the (+-1)-classes are blown down as well.

    Raises :class:`ReductionIncomplete` (carrying the partial form and its
    script) if the residual block has dimension above one and no move applies.
    """
    red = _Reducer(m)
    for _ in range(max_steps):
        if len(red.free()) <= 1 or not red.step():
            break
    if len(red.free()) > 1:
        raise ReductionIncomplete(
            f"no applicable move on a residual block of dimension {len(red.free())}",
            red.m, MoveScript(red.script))
    red.normalize(blow_down)
    return red.m, MoveScript(red.script)


def block_form(residual: Sequence[int], hyperbolic: int, minus: int, c1: Sequence[int],
               labels: Sequence[str] = ()) -> MarkedForm:
    """``[residual] + hyperbolic * H + minus * <-1>`` with the given c1 values."""
    diag_blocks = [[[x]] for x in residual] + [[[0, 1], [1, 0]]] * hyperbolic + [[[-1]]] * minus
    n = sum(len(b) for b in diag_blocks)
    Q = [[0] * n for _ in range(n)]
    off = 0
    for b in diag_blocks:
        for i in range(len(b)):
            for j in range(len(b)):
                Q[off + i][off + j] = b[i][j]
        off += len(b)
    return MarkedForm(Q, c1, labels)
