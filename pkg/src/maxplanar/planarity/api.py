"""Planarity operations: test, embed, extract witness, skip-mode subgraph."""

from __future__ import annotations

import random

from ..graph import EdgeSet, Graph
from ._engine import edge_addition_run
from ._lr import lr_embedding
from .types import Embedding, KuratowskiSubdivision, PlanarGraphError, PlanarityOutcome


def is_planar(g: Graph) -> bool:
    planar, _ = edge_addition_run(g.vertex_count, g.edges)
    return planar


def is_planar_edge_list(n: int, edges: list[tuple[int, int]]) -> bool:
    """Planarity of a raw edge list; avoids Graph construction in hot loops."""
    planar, _ = edge_addition_run(n, edges)
    return planar


def embed(g: Graph) -> PlanarityOutcome:
    """Full outcome: an embedding when planar, a Kuratowski witness when not."""
    rotations = lr_embedding(g.vertex_count, g.edges)
    if rotations is not None:
        return PlanarityOutcome(
            planar=True, embedding=Embedding(tuple(tuple(r) for r in rotations))
        )
    return PlanarityOutcome(planar=False, witness=extract_kuratowski(g))


def extract_kuratowski(g: Graph) -> KuratowskiSubdivision:
    """Edge-minimal non-planar edge set of g, classified as K5 or K3,3.

    Works by incremental edge removal: drop each edge whose removal keeps the
    remainder non-planar.  What survives is minimal, hence a Kuratowski
    subdivision, and its degree signature decides the kind.
    """
    if is_planar(g):
        raise PlanarGraphError("graph is planar; no Kuratowski subdivision exists")
    n = g.vertex_count
    kept = list(range(len(g.edges)))
    for eid in range(len(g.edges)):
        trial = [e for e in kept if e != eid]
        planar, _ = edge_addition_run(n, [g.edges[e] for e in trial])
        if not planar:
            kept = trial
    return classify_witness(g, frozenset(kept))


def classify_witness(g: Graph, edge_ids: EdgeSet) -> KuratowskiSubdivision:
    """Classify a minimal non-planar edge set by its degree signature."""
    deg: dict[int, int] = {}
    for eid in edge_ids:
        a, b = g.edges[eid]
        deg[a] = deg.get(a, 0) + 1
        deg[b] = deg.get(b, 0) + 1
    branch = sorted(v for v, d in deg.items() if d >= 3)
    degrees = sorted(deg[v] for v in branch)
    if degrees == [4, 4, 4, 4, 4]:
        kind = "K5"
    elif degrees == [3, 3, 3, 3, 3, 3]:
        kind = "K3_3"
    else:
        raise PlanarGraphError(
            f"edge set is not a minimal Kuratowski subdivision (branch degrees {degrees})"
        )
    return KuratowskiSubdivision(kind=kind, branch_vertices=tuple(branch), edges=edge_ids)


def edge_addition_subgraph(g: Graph, order_seed: int = 0) -> EdgeSet:
    """Planar spanning subgraph from one skip-mode edge-addition pass.

    The DFS root and neighbor orders are shuffled by the seed; every DFS tree
    edge is embedded, and each backedge is kept unless it cannot be added to
    the current partial embedding, in which case it is skipped and the pass
    continues.
    """
    n = g.vertex_count
    adjacency: list[list[tuple[int, int]]] = [[] for _ in range(n)]
    for eid, (a, b) in enumerate(g.edges):
        adjacency[a].append((b, eid))
        adjacency[b].append((a, eid))
    root_order = list(range(n))
    rng = random.Random(order_seed)
    rng.shuffle(root_order)
    for lst in adjacency:
        rng.shuffle(lst)
    _, skipped = edge_addition_run(
        n,
        g.edges,
        root_order=root_order,
        adjacency=adjacency,
        skip_unembeddable=True,
    )
    return frozenset(range(len(g.edges))) - frozenset(skipped)


def witness_is_valid(g: Graph, w: KuratowskiSubdivision) -> bool:
    """Degree signature, non-planarity, and one-edge-removal minimality."""
    try:
        classified = classify_witness(g, w.edges)
    except PlanarGraphError:
        return False
    if classified.kind != w.kind or classified.branch_vertices != w.branch_vertices:
        return False
    deg: dict[int, int] = {}
    for eid in w.edges:
        a, b = g.edges[eid]
        deg[a] = deg.get(a, 0) + 1
        deg[b] = deg.get(b, 0) + 1
    expected = 4 if w.kind == "K5" else 3
    for v, d in deg.items():
        if v in w.branch_vertices:
            if d != expected:
                return False
        elif d != 2:
            return False
    n = g.vertex_count
    edge_list = [g.edges[e] for e in sorted(w.edges)]
    planar, _ = edge_addition_run(n, edge_list)
    if planar:
        return False
    for i in range(len(edge_list)):
        trial = edge_list[:i] + edge_list[i + 1 :]
        planar, _ = edge_addition_run(n, trial)
        if not planar:
            return False
    return True


def validate_embedding(g: Graph, emb: Embedding) -> None:
    """Raise AssertionError unless emb is a planar embedding of g.

    Checks that rotations contain exactly the incident edges of each vertex
    and that Euler's formula V - E + F = 2 holds on every connected component
    with faces obtained by tracing the rotation system.
    """
    if len(emb.rotations) != g.vertex_count:
        raise AssertionError("rotation count != vertex count")
    incident: list[list[int]] = [[] for _ in range(g.vertex_count)]
    for eid, (a, b) in enumerate(g.edges):
        incident[a].append(eid)
        incident[b].append(eid)
    for v in range(g.vertex_count):
        if sorted(emb.rotations[v]) != sorted(incident[v]):
            raise AssertionError(f"rotation of vertex {v} does not match incidences")

    from ..graph import connected_components

    comps = connected_components(g)
    comp_of = [0] * g.vertex_count
    for ci, comp in enumerate(comps):
        for v in comp:
            comp_of[v] = ci
    face_per_comp = [0] * len(comps)
    for face in emb.faces(g):
        face_per_comp[comp_of[face[0][0]]] += 1
    edges_per_comp = [0] * len(comps)
    for a, _ in g.edges:
        edges_per_comp[comp_of[a]] += 1
    for ci, comp in enumerate(comps):
        v_c = len(comp)
        e_c = edges_per_comp[ci]
        f_c = face_per_comp[ci]
        if e_c == 0:
            continue  # single vertex: no arcs, no faces traced
        if v_c - e_c + f_c != 2:
            raise AssertionError(
                f"Euler check failed on component {ci}: V={v_c} E={e_c} F={f_c}"
            )


__all__ = [
    "is_planar",
    "is_planar_edge_list",
    "embed",
    "extract_kuratowski",
    "classify_witness",
    "edge_addition_subgraph",
    "witness_is_valid",
    "validate_embedding",
    "Embedding",
    "KuratowskiSubdivision",
    "PlanarityOutcome",
    "PlanarGraphError",
]
