"""Planarity outcome types: embeddings and Kuratowski witnesses."""

from __future__ import annotations

from dataclasses import dataclass

from ..graph import EdgeSet, Graph


class PlanarGraphError(ValueError):
    """Raised when a non-planar input was required but a planar one given."""


class NonPlanarStartError(ValueError):
    """Raised when an operation requires a planar starting subgraph."""


@dataclass(frozen=True)
class Embedding:
    """Combinatorial embedding: a cyclic order of incident edge ids per vertex."""

    rotations: tuple[tuple[int, ...], ...]

    def face_count(self, g: Graph) -> int:
        """Number of faces obtained by tracing the rotation system."""
        return len(self.faces(g))

    def faces(self, g: Graph) -> list[list[tuple[int, int]]]:
        """Faces as cyclic lists of directed arcs (tail vertex, edge id).

        The successor of arc (u, e) with head w is the edge after e in w's
        rotation, leaving w.  Every directed arc lies on exactly one face.
        """
        pos: list[dict[int, int]] = [
            {e: i for i, e in enumerate(rot)} for rot in self.rotations
        ]
        faces: list[list[tuple[int, int]]] = []
        seen: set[tuple[int, int]] = set()
        for v in range(g.vertex_count):
            for e in self.rotations[v]:
                arc = (v, e)
                if arc in seen:
                    continue
                face: list[tuple[int, int]] = []
                cur = arc
                while cur not in seen:
                    seen.add(cur)
                    face.append(cur)
                    tail, eid = cur
                    a, b = g.edges[eid]
                    head = b if tail == a else a
                    rot = self.rotations[head]
                    nxt = rot[(pos[head][eid] + 1) % len(rot)]
                    cur = (head, nxt)
                faces.append(face)
        return faces


@dataclass(frozen=True)
class KuratowskiSubdivision:
    """A K5 or K3,3 subdivision witnessing non-planarity.

    `edges` is an edge-minimal non-planar edge set of the host graph; the
    branch vertices have degree 4 (K5) or 3 (K3,3) within the witness and all
    other touched vertices have degree 2.
    """

    kind: str  # "K5" or "K3_3"
    branch_vertices: tuple[int, ...]
    edges: EdgeSet


@dataclass(frozen=True)
class PlanarityOutcome:
    planar: bool
    embedding: Embedding | None = None
    witness: KuratowskiSubdivision | None = None

    def __post_init__(self) -> None:
        if self.planar and (self.embedding is None or self.witness is not None):
            raise ValueError("planar outcome needs an embedding and no witness")
        if not self.planar and (self.witness is None or self.embedding is not None):
            raise ValueError("non-planar outcome needs a witness and no embedding")
