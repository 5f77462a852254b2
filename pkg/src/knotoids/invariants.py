"""Diagram invariants: Kauffman bracket, Jones polynomial, the arrow
polynomial for knotoids, and the mod-3 homology exponent read off from the
Jones value at ``t = e^{i pi/3}``.

All state sums expand each crossing into its oriented smoothing (Seifert
smoothing, respecting strand orientations) or its disoriented smoothing.
For a crossing of sign ``s`` the oriented smoothing carries ``A**s`` and
the disoriented one ``A**-s``, which reduces to the classical unoriented
bracket when cusps are ignored.

Cusp bookkeeping for the arrow polynomial: every disoriented smoothing arc
carries one cusp; walking a state component, a cusp contributes ``-s`` when
entered through an over end of the crossing and ``+s`` through an under
end.  Adjacent opposite cusps cancel, so a component with cusp signs
summing to ``2i`` in absolute value reduces to ``i`` aligned cusp pairs:
loops contribute ``K_i`` and the open segment ``L_i`` (``i = 0`` gives the
scalar loop ``-A^2-A^-2`` and the trivial segment respectively).
"""

from __future__ import annotations

import cmath
import math

from .closures import closures
from .codes import ClosedCode, KnotoidCode
from .polynomials import BRACKET_LOOP, ArrowPoly, LaurentPoly

__all__ = [
    "InvariantError",
    "bracket",
    "jones",
    "delta",
    "h2_lower_bound",
    "arrow_polynomial",
    "Fingerprint",
    "fingerprint",
]

#: ``t**(1/2) = e^{i pi/6}``, expressed as the value of A (``t = A^-4``).
_A_AT_OMEGA = cmath.exp(-1j * math.pi / 12)
_SQRT3 = math.sqrt(3.0)


class InvariantError(ValueError):
    """Raised when an invariant evaluation is numerically inconsistent."""


def _crossing_data(entries: tuple[int, ...]):
    """Per-crossing (over_pos, under_pos, sign); order of first appearance."""
    first: dict[int, int] = {}
    out = []
    for pos, e in enumerate(entries):
        cid = e >> 2
        other = first.pop(cid, None)
        if other is None:
            first[cid] = pos
        else:
            if e & 2:
                over_pos, under_pos = pos, other
            else:
                over_pos, under_pos = other, pos
            out.append((over_pos, under_pos, 1 if e & 1 else -1))
    return out


def _normalized(raw: dict[int, LaurentPoly], writhe: int) -> LaurentPoly:
    """Apply the framing factor ``(-A^3)^(-w)`` to a bracket accumulator."""
    sign = -1 if writhe % 2 else 1
    total = LaurentPoly()
    for e, poly in raw.items():
        total = total + poly.shifted(e - 3 * writhe, sign)
    return total


def bracket(code: ClosedCode) -> LaurentPoly:
    """Kauffman bracket of a closed code (no writhe normalization)."""
    entries = tuple(code)
    n = len(entries) // 2
    if n == 0:
        return LaurentPoly.constant(1)
    crossings = _crossing_data(entries)
    m = len(entries)  # number of arcs

    # Accumulate state counts per (loops-1, A-exponent), then expand the
    # loop factor powers once.
    counters: list[dict[int, int]] = [dict() for _ in range(n + 1)]
    parent = list(range(m))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for state in range(1 << n):
        for i in range(m):
            parent[i] = i
        exponent = 0
        loops = m
        for ci, (p, q, s) in enumerate(crossings):
            p_out = p + 1 if p + 1 < m else 0
            q_out = q + 1 if q + 1 < m else 0
            if state >> ci & 1:  # oriented smoothing
                exponent += s
                pairs = ((p, q_out), (q, p_out))
            else:
                exponent -= s
                pairs = ((p, q), (p_out, q_out))
            for a, b in pairs:
                ra, rb = find(a), find(b)
                if ra != rb:
                    parent[ra] = rb
                    loops -= 1
        bucket = counters[loops - 1]
        bucket[exponent] = bucket.get(exponent, 0) + 1

    total = LaurentPoly()
    d_power = LaurentPoly.constant(1)
    for k in range(n + 1):
        if counters[k]:
            total = total + (LaurentPoly(counters[k]) * d_power)
        d_power = d_power * BRACKET_LOOP
    return total


def jones(code: ClosedCode) -> LaurentPoly:
    """Normalized bracket ``(-A^3)^(-w) * <D>``, still in the variable A
    (render with :meth:`LaurentPoly.jones_string` for the ``t`` form)."""
    w = code.writhe()
    sign = -1 if w % 2 else 1
    return bracket(code).shifted(-3 * w, sign)


def delta(code: ClosedCode) -> int:
    """dim of the first mod-3 homology of the double branched cover, read
    off from ``|V(K, omega)| = sqrt(3)**delta`` at ``t^(1/2) = e^{i pi/6}``.

    Raises:
        InvariantError: if the magnitude is not a power of sqrt(3) within
            ``1e-9 * (1 + |V|)``.
    """
    value = jones(code).evaluate(_A_AT_OMEGA)
    mag = abs(value)
    if mag < 1e-9:
        raise InvariantError(f"|V(omega)| ~ 0 for {code!r}")
    d = round(math.log(mag, _SQRT3))
    if d < 0 or abs(mag - _SQRT3**d) > 1e-9 * (1.0 + mag):
        raise InvariantError(
            f"|V(omega)| = {mag!r} is not a power of sqrt(3) (code {code!r})"
        )
    return d


def h2_lower_bound(delta1: int, delta2: int) -> int:
    """Band-surgery lower bound: each move changes delta by at most one, so
    the distance is at least the delta gap."""
    return abs(delta1 - delta2)


# -- arrow polynomial ----------------------------------------------------------

def arrow_polynomial(code: KnotoidCode) -> ArrowPoly:
    """Normalized arrow polynomial of a knotoid code.

    State components are walked explicitly to reduce cusps; the surviving
    cusp count of every component is asserted even.
    """
    entries = tuple(code)
    n = len(entries) // 2
    w = code.writhe()
    if n == 0:
        return ArrowPoly({(0, (), 0): 1})

    length = len(entries)
    num_arcs = length + 1
    # Per position: partner position, over flag, sign.
    partner = [0] * length
    first: dict[int, int] = {}
    for pos, e in enumerate(entries):
        cid = e >> 2
        other = first.pop(cid, None)
        if other is None:
            first[cid] = pos
        else:
            partner[pos] = other
            partner[other] = pos
    over = [bool(e & 2) for e in entries]
    sign = [1 if e & 1 else -1 for e in entries]
    crossing_list = _crossing_data(entries)

    # Walking tables, resolved per state below.  Arrived "at position p"
    # means: moving forward along arc p (slot IN) or backward along arc p+1
    # (slot OUT).
    accum: dict[tuple[tuple[int, ...], int, int], dict[int, int]] = {}

    for state in range(1 << n):
        oriented = [False] * length
        for ci, (p, q, _s) in enumerate(crossing_list):
            if state >> ci & 1:
                oriented[p] = oriented[q] = True
        exponent = 0
        for ci, (p, q, s) in enumerate(crossing_list):
            exponent += s if state >> ci & 1 else -s

        visited = [False] * num_arcs

        def walk(arc: int, forward: bool):
            """Follow the state curve from (arc, direction); returns
            (cusp_sum, end) where end is 'head', 'leg' or 'loop'."""
            cusps = 0
            start = (arc, forward)
            while True:
                visited[arc] = True
                if forward:
                    if arc == length:
                        return cusps, "head"
                    pos = arc  # arriving at IN slot of pos
                    arrived_in = True
                else:
                    if arc == 0:
                        return cusps, "leg"
                    pos = arc - 1  # arriving at OUT slot of pos
                    arrived_in = False
                o = over[pos]
                s = sign[pos]
                q = partner[pos]
                if oriented[pos]:
                    if arrived_in:
                        arc, forward = q + 1, True  # leave via partner OUT
                    else:
                        arc, forward = q, False     # leave via partner IN
                else:
                    cusps += -s if o else s
                    if arrived_in:
                        arc, forward = q, False     # leave via partner IN
                    else:
                        arc, forward = q + 1, True  # leave via partner OUT
                if (arc, forward) == start:
                    return cusps, "loop"

        seg_cusps, end = walk(0, True)
        if end != "head":
            raise InvariantError("state segment did not terminate at the head")
        if seg_cusps % 2:
            raise InvariantError("odd surviving cusp count on the segment")
        lam = abs(seg_cusps) // 2

        k_vars: list[int] = []
        zero_loops = 0
        for a in range(num_arcs):
            if not visited[a]:
                loop_cusps, end = walk(a, True)
                if end != "loop":
                    raise InvariantError("state loop leaked into an endpoint")
                if loop_cusps % 2:
                    raise InvariantError("odd surviving cusp count on a loop")
                i = abs(loop_cusps) // 2
                if i:
                    k_vars.append(i)
                else:
                    zero_loops += 1

        key = (tuple(sorted(k_vars)), lam, zero_loops)
        bucket = accum.setdefault(key, {})
        bucket[exponent] = bucket.get(exponent, 0) + 1

    # Expand loop factors and the framing normalization.
    norm_sign = -1 if w % 2 else 1
    d_powers = [LaurentPoly.constant(1)]
    for _ in range(n + 1):
        d_powers.append(d_powers[-1] * BRACKET_LOOP)
    terms: dict[tuple[int, tuple[int, ...], int], int] = {}
    for (k_vars, lam, zero_loops), bucket in accum.items():
        poly = (LaurentPoly(bucket) * d_powers[zero_loops]).shifted(-3 * w, norm_sign)
        for e, c in poly.coeffs.items():
            key = (e, k_vars, lam)
            nc = terms.get(key, 0) + c
            if nc:
                terms[key] = nc
            else:
                terms.pop(key, None)
    return ArrowPoly(terms)


# -- fingerprint ---------------------------------------------------------------

class Fingerprint(tuple):
    """(arrow string, Jones of the overpass closure, Jones of the mirrored
    underpass closure) -- the computable stand-in for the isotopy class."""

    __slots__ = ()

    def __new__(cls, arrow: str, jones_plus: str, jones_minus: str):
        return super().__new__(cls, (arrow, jones_plus, jones_minus))

    @property
    def arrow(self) -> str:
        return self[0]

    @property
    def jones_plus(self) -> str:
        return self[1]

    @property
    def jones_minus(self) -> str:
        return self[2]


def fingerprint(code: KnotoidCode) -> Fingerprint:
    """Classification fingerprint of a realizable, non-composite code."""
    arrow = arrow_polynomial(code).to_string()
    k_plus, k_minus = closures(code)
    return Fingerprint(arrow, jones(k_plus).jones_string(), jones(k_minus).jones_string())
