"""Combinatorial planar embeddings of Gauss codes.

A signed Gauss code determines a 4-valent map: vertices are the crossings
(plus two degree-1 endpoint vertices for open codes), edges are the arcs
between consecutive passages, and the cyclic order of the four half-edges
at each crossing is fixed by the pass/sign data.  The code is realizable
on the sphere exactly when face tracing of that map satisfies Euler's
formula ``V - E + F = 2``.

Rotation convention: at a crossing of sign ``+`` the counterclockwise order
of incident half-edges is (over-in, under-in, over-out, under-out); sign
``-`` swaps the two under slots.  Faces are traced with the face kept on
the right of each dart, so ``face_right`` of an arc's forward dart and of
its backward dart give the two sides of the arc.
"""

from __future__ import annotations

__all__ = ["Embedding", "build_embedding", "realizable_in_s2"]

LEG = -1
HEAD = -2


class Embedding:
    """Planar embedding data for one code, produced by :func:`build_embedding`.

    Attributes:
        entries: the packed code entries.
        closed: cyclic code flag.
        num_arcs: number of edges of the map.
        face_of_dart: face index per dart; dart ``2a`` runs forward along arc
            ``a`` (with the curve), dart ``2a+1`` backward.  The face stored
            is the one on the right of the dart.
        num_faces: total face count.
        planar: Euler check result.
        leg_face / head_face: faces wrapping the endpoints (open codes).
        dart_target: code position at the head of each dart (``LEG``/``HEAD``
            sentinels at the endpoints of open codes).
    """

    __slots__ = (
        "entries",
        "closed",
        "num_arcs",
        "face_of_dart",
        "num_faces",
        "planar",
        "leg_face",
        "head_face",
        "dart_target",
    )

    def arc_faces(self, arc: int) -> tuple[int, int]:
        """(left, right) faces of the arc, relative to its forward dart."""
        return self.face_of_dart[2 * arc + 1], self.face_of_dart[2 * arc]

    def dual_neighbors(self) -> list[list[tuple[int, int]]]:
        """Adjacency of the dual graph: per face, list of (other_face, arc)."""
        adj: list[list[tuple[int, int]]] = [[] for _ in range(self.num_faces)]
        for arc in range(self.num_arcs):
            left, right = self.arc_faces(arc)
            if left != right:
                adj[left].append((right, arc))
                adj[right].append((left, arc))
        return adj


def build_embedding(entries: tuple[int, ...], closed: bool) -> Embedding:
    """Trace the faces of the code's map; always succeeds, `.planar` reports
    the Euler check.  Closed codes need at least one crossing."""
    length = len(entries)
    n = length // 2
    emb = Embedding()
    emb.entries = tuple(entries)
    emb.closed = closed

    if closed:
        if n == 0:
            # A bare circle: realizable by convention, nothing to trace.
            emb.num_arcs = 0
            emb.face_of_dart = []
            emb.num_faces = 2
            emb.planar = True
            emb.leg_face = emb.head_face = -1
            emb.dart_target = []
            return emb
        num_arcs = length
    else:
        num_arcs = length + 1

    num_darts = 2 * num_arcs
    sigma = [0] * num_darts
    dart_target = [0] * num_darts

    # Partner position of each passage.
    partner = [0] * length
    first_pos: dict[int, int] = {}
    for pos, e in enumerate(entries):
        cid = e >> 2
        other = first_pos.pop(cid, None)
        if other is None:
            first_pos[cid] = pos
        else:
            partner[pos] = other
            partner[other] = pos

    # dart targets
    if closed:
        for a in range(num_arcs):
            dart_target[2 * a] = a
            dart_target[2 * a + 1] = a - 1 if a else length - 1
    else:
        for a in range(num_arcs):
            dart_target[2 * a] = a if a < length else HEAD
            dart_target[2 * a + 1] = a - 1 if a else LEG

    def in_arc(pos: int) -> int:
        return pos

    def out_arc(pos: int) -> int:
        nxt = pos + 1
        if closed and nxt == length:
            return 0
        return nxt

    # Rotation at each crossing, written once per crossing from its over side.
    seen_over: set[int] = set()
    for pos, e in enumerate(entries):
        if not e & 2:
            continue
        cid = e >> 2
        if cid in seen_over:
            continue
        seen_over.add(cid)
        p, q = pos, partner[pos]
        over_in = 2 * in_arc(p) + 1
        over_out = 2 * out_arc(p)
        under_in = 2 * in_arc(q) + 1
        under_out = 2 * out_arc(q)
        if e & 1:  # positive
            cycle = (over_in, under_in, over_out, under_out)
        else:
            cycle = (over_in, under_out, over_out, under_in)
        sigma[cycle[0]] = cycle[1]
        sigma[cycle[1]] = cycle[2]
        sigma[cycle[2]] = cycle[3]
        sigma[cycle[3]] = cycle[0]

    if not closed:
        sigma[0] = 0                      # leg: single dart, fixed point
        sigma[num_darts - 1] = num_darts - 1  # head

    # Face tracing: orbits of dart -> sigma[dart ^ 1].
    face_of_dart = [-1] * num_darts
    num_faces = 0
    for d0 in range(num_darts):
        if face_of_dart[d0] >= 0:
            continue
        d = d0
        while face_of_dart[d] < 0:
            face_of_dart[d] = num_faces
            d = sigma[d ^ 1]
        num_faces += 1

    emb.num_arcs = num_arcs
    emb.face_of_dart = face_of_dart
    emb.num_faces = num_faces
    vertices = n + (0 if closed else 2)
    emb.planar = vertices - num_arcs + num_faces == 2
    emb.dart_target = dart_target
    if closed:
        emb.leg_face = emb.head_face = -1
    else:
        emb.leg_face = face_of_dart[0]
        emb.head_face = face_of_dart[num_darts - 1]
    return emb


def realizable_in_s2(code, closed: bool | None = None) -> bool:
    """True iff the code's 4-valent map embeds in the sphere."""
    if closed is None:
        closed = getattr(code, "closed", False)
    return build_embedding(tuple(code), closed).planar
