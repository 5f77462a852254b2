"""Constituent-knot closures and the branched-cover doubling of knotoids.

``closures`` routes an arc from the head's face to the leg's face along a
shortest path in the dual of the planar embedding.  Crossing a diagram arc
from its left side to its right side with the closure strand on top gives
a positive crossing (and the mirrored pass/sign pattern underneath), so
the overpassing and underpassing closures share one routing.

``lift`` realizes the double cover of the diagram sphere branched at the
two endpoints: cut the sphere along an arc joining the endpoints, take two
copies of the diagram sheet and cross-glue along the cut.  Every crossing
lifts to two copies; a crossing whose two passages are separated by an odd
number of cut crossings becomes a crossing between the two sheets and its
sign flips (one strand is traversed against the original direction).  The
result is validated operationally (planarity here, Jones/homology checks
in the test suite), not claimed correct axiomatically.
"""

from __future__ import annotations

from collections import deque

from .codes import ClosedCode, KnotoidCode, make_entry, mirror_closed
from .planarity import Embedding, build_embedding

__all__ = ["ClosureError", "closures", "lift"]


class ClosureError(ValueError):
    """Raised when a code cannot be embedded for closure routing."""


def _dual_path(emb: Embedding, src: int, dst: int, strategy: str = "bfs") -> list[int]:
    """Arcs crossed by a path from face ``src`` to face ``dst``.

    ``strategy`` selects a deterministic routing: ``"bfs"`` explores dual
    neighbors in ascending (face, arc) order, ``"bfs_rev"`` in descending
    order; both return shortest paths, generally through different arcs.
    """
    if src == dst:
        return []
    adj = emb.dual_neighbors()
    for row in adj:
        row.sort(reverse=(strategy == "bfs_rev"))
    prev: list[tuple[int, int] | None] = [None] * emb.num_faces
    seen = [False] * emb.num_faces
    seen[src] = True
    queue = deque([src])
    while queue:
        f = queue.popleft()
        if f == dst:
            break
        for g, arc in adj[f]:
            if not seen[g]:
                seen[g] = True
                prev[g] = (f, arc)
                queue.append(g)
    if not seen[dst]:
        raise ClosureError("dual graph disconnected; embedding is inconsistent")
    arcs: list[int] = []
    f = dst
    while f != src:
        f, arc = prev[f]  # type: ignore[misc]
        arcs.append(arc)
    arcs.reverse()
    return arcs


def _closure_entries(
    entries: tuple[int, ...],
    emb: Embedding,
    path_arcs: list[int],
    closure_over: bool,
) -> ClosedCode:
    """Closed code for one closure arc running head -> leg across the arcs."""
    next_id = max((e >> 2 for e in entries), default=0) + 1
    insertions: dict[int, int] = {}
    tail: list[int] = []
    face = emb.head_face
    for arc in path_arcs:
        left, right = emb.arc_faces(arc)
        if face == left:
            left_to_right = True
            face = right
        elif face == right:
            left_to_right = False
            face = left
        else:
            raise ClosureError("dual path left the embedding")
        if closure_over:
            sign = 1 if left_to_right else -1
        else:
            sign = -1 if left_to_right else 1
        insertions[arc] = make_entry(next_id, not closure_over, sign)
        tail.append(make_entry(next_id, closure_over, sign))
        next_id += 1
    if face != emb.leg_face:
        raise ClosureError("dual path did not reach the leg face")

    out: list[int] = []
    for pos, entry in enumerate(entries):
        if pos in insertions:
            out.append(insertions[pos])
        out.append(entry)
    last_arc = len(entries)
    if last_arc in insertions:
        out.append(insertions[last_arc])
    out.extend(tail)
    closed = ClosedCode(out)
    if not build_embedding(tuple(closed), closed=True).planar:
        raise ClosureError("closure produced a non-planar code")
    return closed


def closures(code: KnotoidCode, strategy: str = "bfs") -> tuple[ClosedCode, ClosedCode]:
    """Overpassing closure and mirrored underpassing closure of a knotoid.

    The knot types of the two outputs are independent of the dual route;
    ``strategy`` exists so tests can check exactly that.
    """
    entries = tuple(code)
    if not entries:
        trivial = ClosedCode(())
        return trivial, trivial
    emb = build_embedding(entries, closed=False)
    if not emb.planar:
        raise ClosureError(f"code is not realizable in S^2: {code!r}")
    path_arcs = _dual_path(emb, emb.head_face, emb.leg_face, strategy)
    k_plus = _closure_entries(entries, emb, path_arcs, closure_over=True)
    k_minus = mirror_closed(_closure_entries(entries, emb, path_arcs, closure_over=False))
    return k_plus, k_minus


def lift(code: KnotoidCode, strategy: str = "bfs") -> ClosedCode:
    """Closed code of the knot living over the knotoid in the double cover
    branched at the endpoints (the strongly invertible companion knot)."""
    entries = tuple(code)
    if not entries:
        return ClosedCode(())
    emb = build_embedding(entries, closed=False)
    if not emb.planar:
        raise ClosureError(f"code is not realizable in S^2: {code!r}")
    cut_arcs = set(_dual_path(emb, emb.leg_face, emb.head_face, strategy))

    length = len(entries)
    sheet = [0] * length
    flips = 0
    for pos in range(length):
        if pos in cut_arcs:  # cut crosses the arc entering this position
            flips ^= 1
        sheet[pos] = flips

    # Crossings whose passages sit on opposite sheets join the two copies
    # and flip sign.
    partner: dict[int, int] = {}
    first: dict[int, int] = {}
    for pos, e in enumerate(entries):
        cid = e >> 2
        if cid in first:
            partner[pos] = first[cid]
            partner[first[cid]] = pos
        else:
            first[cid] = pos
    sign_flip = {pos: sheet[pos] != sheet[partner[pos]] for pos in range(length)}

    def lifted_entry(pos: int, copy: int) -> int:
        e = entries[pos]
        cid = e >> 2
        side = sheet[pos] ^ copy
        new_id = 2 * cid - 1 + side
        sign = -1 if (e & 1) == 0 else 1
        if sign_flip[pos]:
            sign = -sign
        return make_entry(new_id, bool(e & 2), sign)

    out = [lifted_entry(pos, 0) for pos in range(length)]
    out.extend(lifted_entry(pos, 1) for pos in reversed(range(length)))
    closed = ClosedCode(out)
    if not build_embedding(tuple(closed), closed=True).planar:
        raise ClosureError("lift produced a non-planar code")
    return closed
