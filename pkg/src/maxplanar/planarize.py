"""Fixed-embedding planarization: embed a planar subgraph once, then route
every deferred edge along a shortest face path, replacing each crossed edge
by a degree-4 dummy vertex.

The routing structure is the face-adjacency (dual) graph of the current
planarization: faces sharing an edge are adjacent at cost 1 (crossing that
edge); the search starts from all faces incident to one endpoint and stops
at the first face incident to the other.  No postprocessing, no embedding
changes: this is the simplest insertion scheme, which is exactly what makes
the choice of the starting subgraph matter.
"""

from __future__ import annotations

import random
from collections import deque
from dataclasses import dataclass

from .graph import EdgeSet, Graph
from .heuristics import SubgraphResult
from .planarity._lr import lr_embedding
from .planarity.types import Embedding, NonPlanarStartError


@dataclass(frozen=True)
class PlanarizedGraph:
    """Planar host with dummy vertices standing in for crossings."""

    host: Graph
    dummy_count: int
    embedding: Embedding
    origin_map: tuple[int, ...]  # host edge id -> edge id of the original graph
    original_vertex_count: int

    def recover_original(self) -> Graph:
        """Contract all dummies: the graph this planarization represents."""
        groups: dict[int, list[tuple[int, int]]] = {}
        for hid, orig in enumerate(self.origin_map):
            groups.setdefault(orig, []).append(self.host.edges[hid])
        n = self.original_vertex_count
        out: list[tuple[int, int]] = []
        for orig in sorted(groups):
            deg: dict[int, int] = {}
            for a, b in groups[orig]:
                deg[a] = deg.get(a, 0) + 1
                deg[b] = deg.get(b, 0) + 1
            ends = sorted(v for v, d in deg.items() if d == 1)
            if len(groups[orig]) == 1:
                a, b = groups[orig][0]
                ends = sorted((a, b))
            if len(ends) != 2 or ends[0] >= n or ends[1] >= n:
                raise AssertionError(f"origin {orig} does not contract to an edge")
            out.append((ends[0], ends[1]))
        return Graph(n, tuple(out))


def crossings(p: PlanarizedGraph) -> int:
    return p.dummy_count


def _trace_faces(
    rotations: list[list[int]], host_edges: list[tuple[int, int]]
) -> tuple[
    list[list[tuple[int, int]]],
    dict[tuple[int, int], int],
    dict[tuple[int, int], int],
    dict[int, list[int]],
]:
    """Faces of a rotation system.

    Returns (faces, arc_face, corner, vertex_faces):
      faces[fid]      -- cyclic arc list [(tail, host edge id), ...]
      arc_face        -- (tail, hid) -> fid
      corner          -- (fid, vertex) -> index in the vertex's rotation where
                         a new edge entering that face corner is inserted
      vertex_faces    -- vertex -> face ids incident to it (first-seen order)
    """
    pos: list[dict[int, int]] = [
        {e: i for i, e in enumerate(rot)} for rot in rotations
    ]
    faces: list[list[tuple[int, int]]] = []
    arc_face: dict[tuple[int, int], int] = {}
    corner: dict[tuple[int, int], int] = {}
    vertex_faces: dict[int, list[int]] = {}
    for v0 in range(len(rotations)):
        for e0 in rotations[v0]:
            if (v0, e0) in arc_face:
                continue
            fid = len(faces)
            face: list[tuple[int, int]] = []
            cur = (v0, e0)
            while cur not in arc_face:
                arc_face[cur] = fid
                face.append(cur)
                tail, eid = cur
                a, b = host_edges[eid]
                head = b if tail == a else a
                rot = rotations[head]
                nxt_idx = (pos[head][eid] + 1) % len(rot)
                if (fid, head) not in corner:
                    corner[(fid, head)] = nxt_idx
                    vertex_faces.setdefault(head, []).append(fid)
                cur = (head, rot[nxt_idx])
            faces.append(face)
    return faces, arc_face, corner, vertex_faces


def insert_edges_fixed(
    g: Graph, sub: SubgraphResult | EdgeSet, seed: int, shuffle: bool = True
) -> PlanarizedGraph:
    """Insert all non-subgraph edges into a fixed embedding of the subgraph.

    Deferred edges are processed in seed-shuffled order (edge-id order with
    shuffle=False); each is routed with the fewest crossings available in the
    planarization as it stands, ties broken by the deterministic face
    numbering.
    """
    kept = sub.kept if isinstance(sub, SubgraphResult) else frozenset(sub)
    g.check_edge_set(kept)
    n = g.vertex_count
    kept_ids = sorted(kept)
    sub_edges = [g.edges[e] for e in kept_ids]
    rotations = lr_embedding(n, sub_edges)
    if rotations is None:
        raise NonPlanarStartError("subgraph to planarize is not planar")

    host_edges: list[tuple[int, int]] = list(sub_edges)
    origin: list[int] = list(kept_ids)
    comp_parent = list(range(n))

    def find(x: int) -> int:
        root = x
        while comp_parent[root] != root:
            root = comp_parent[root]
        while comp_parent[x] != root:
            comp_parent[x], x = root, comp_parent[x]
        return root

    for a, b in sub_edges:
        comp_parent[find(a)] = find(b)

    deferred = [e for e in range(len(g.edges)) if e not in kept]
    if shuffle:
        rng = random.Random(seed)
        rng.shuffle(deferred)

    dummies = 0
    for orig_eid in deferred:
        u, v = g.edges[orig_eid]
        if find(u) != find(v):
            # Components can always be drawn into a common face: no crossing.
            hid = len(host_edges)
            host_edges.append((u, v))
            origin.append(orig_eid)
            rotations[u].append(hid)
            rotations[v].append(hid)
            comp_parent[find(u)] = find(v)
            continue

        faces, arc_face, corner, vertex_faces = _trace_faces(rotations, host_edges)
        sources = vertex_faces[u]
        targets = set(vertex_faces[v])
        pred: dict[int, tuple[int, int]] = {}
        seen = set(sources)
        queue = deque(sorted(sources))
        end_face = -1
        while queue:
            fid = queue.popleft()
            if fid in targets:
                end_face = fid
                break
            for tail, hid in faces[fid]:
                a, b = host_edges[hid]
                head = b if tail == a else a
                other = arc_face[(head, hid)]
                if other != fid and other not in seen:
                    seen.add(other)
                    pred[other] = (fid, hid)
                    queue.append(other)
        if end_face < 0:
            raise AssertionError("routing failed inside one component")

        path_faces = [end_face]
        crossed: list[int] = []
        while path_faces[-1] in pred:
            prev_fid, via = pred[path_faces[-1]]
            crossed.append(via)
            path_faces.append(prev_fid)
        path_faces.reverse()
        crossed.reverse()

        u_idx = corner[(path_faces[0], u)]
        v_idx = corner[(path_faces[-1], v)]

        # Split the crossed edges with dummies (in-place: positions in the
        # touched rotations are preserved).
        points = [u]
        toward_b: list[int] = []
        for i, c in enumerate(crossed):
            a, b = host_edges[c]
            from_face = path_faces[i]
            if arc_face[(a, c)] == from_face:
                ai, bi = a, b
            else:
                ai, bi = b, a
            d = len(rotations)
            dummies += 1
            host_edges[c] = (ai, d)
            hid_b = len(host_edges)
            host_edges.append((d, bi))
            origin.append(origin[c])
            rotations[bi][rotations[bi].index(c)] = hid_b
            rotations.append([])  # filled below
            points.append(d)
            toward_b.append(hid_b)
        points.append(v)

        seg_ids: list[int] = []
        for p, q in zip(points, points[1:]):
            hid = len(host_edges)
            host_edges.append((p, q))
            origin.append(orig_eid)
            seg_ids.append(hid)

        # Rotations: corner inserts at the endpoints, alternating order at
        # each dummy so the two original edges cross there.
        rotations[u].insert(u_idx, seg_ids[0])
        for i, c in enumerate(crossed):
            d = points[i + 1]
            rotations[d] = [c, seg_ids[i], toward_b[i], seg_ids[i + 1]]
        rotations[v].insert(v_idx, seg_ids[-1])

    host = Graph(n + dummies, tuple(host_edges))
    emb = Embedding(tuple(tuple(r) for r in rotations))
    return PlanarizedGraph(
        host=host,
        dummy_count=dummies,
        embedding=emb,
        origin_map=tuple(origin),
        original_vertex_count=n,
    )
