"""Z2 chain-complex machinery for surface complexes.

Edge sets are packed as integers over the dense edge index (sorted edge
ids); :func:`edges_to_mask`/:func:`mask_to_edges` convert at the boundary.
The cocycle basis comes from the tree/co-tree construction: a spanning
tree of the primal graph plus a spanning tree of the dual graph on the
remaining edges leave exactly 2g edges; each leftover edge closes one
primal cycle (through the tree) and one dual cycle (through the co-tree),
and the two bases pair as the identity matrix by construction.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .binmat import BinaryMatrix, parity, support
from .complexes import SurfaceComplex
from .errors import IntegrityError, InputError


def edges_to_mask(c: SurfaceComplex, edge_ids: Iterable[int]) -> int:
    idx = c.edge_index()
    mask = 0
    for e in edge_ids:
        mask ^= 1 << idx[e]
    return mask


def mask_to_edges(c: SurfaceComplex, mask: int) -> tuple[int, ...]:
    order = sorted(c.edges)
    return tuple(order[i] for i in support(mask))


def face_boundary_masks(c: SurfaceComplex) -> dict[int, int]:
    """Face id -> Z2 boundary (edge multiplicities mod 2)."""
    idx = c.edge_index()
    out = {}
    for f in sorted(c.faces):
        mask = 0
        for e in c.faces[f]:
            mask ^= 1 << idx[e]
        out[f] = mask
    return out


def vertex_star_masks(c: SurfaceComplex) -> dict[int, int]:
    """Vertex id -> edges with that vertex as an endpoint an odd number of times."""
    idx = c.edge_index()
    out = {v: 0 for v in c.vertices}
    for e, (u, v) in c.edges.items():
        if u != v:
            out[u] ^= 1 << idx[e]
            out[v] ^= 1 << idx[e]
    return out


@dataclass(frozen=True)
class ChainComplexZ2:
    """Boundary operators d2: C2 -> C1 and d1: C1 -> C0 over Z2.

    d2 is |E| x |F| (column f = boundary of face f); d1 is |V| x |E|
    (column e = endpoints of e, zero for a self-loop).  Row/column order
    follows the sorted id tuples carried alongside.
    """

    d2: BinaryMatrix
    d1: BinaryMatrix
    vertex_ids: tuple[int, ...]
    edge_ids: tuple[int, ...]
    face_ids: tuple[int, ...]


def boundary_matrices(c: SurfaceComplex) -> ChainComplexZ2:
    face_rows = face_boundary_masks(c)
    star_rows = vertex_star_masks(c)
    face_ids = tuple(sorted(c.faces))
    vertex_ids = tuple(sorted(c.vertices))
    edge_ids = tuple(sorted(c.edges))
    d2 = BinaryMatrix(len(face_ids), len(edge_ids), [face_rows[f] for f in face_ids]).transpose()
    d1 = BinaryMatrix(len(vertex_ids), len(edge_ids), [star_rows[v] for v in vertex_ids])
    prod = d1 @ d2
    if not prod.is_zero():
        raise IntegrityError("d1 . d2 != 0; boundary construction is broken")
    return ChainComplexZ2(d2=d2, d1=d1, vertex_ids=vertex_ids, edge_ids=edge_ids, face_ids=face_ids)


def betti1(c: SurfaceComplex) -> int:
    """dim ker(d1) - rank(d2); must equal 2 * genus for a valid complex."""
    cc = boundary_matrices(c)
    value = (len(cc.edge_ids) - cc.d1.rank()) - cc.d2.rank()
    if value != 2 * c.genus:
        raise IntegrityError(
            f"betti1 = {value} but genus {c.genus} demands {2 * c.genus}; "
            "complex integrity failure"
        )
    return value


def _tree_cotree(c: SurfaceComplex):
    """Spanning tree, dual co-tree, and the 2g leftover edge ids."""
    # primal spanning tree (BFS, edges in ascending id order)
    incidence: dict[int, list[tuple[int, int]]] = {v: [] for v in c.vertices}
    for e in sorted(c.edges):
        u, v = c.edges[e]
        if u == v:
            continue
        incidence[u].append((e, v))
        incidence[v].append((e, u))
    root = min(c.vertices)
    tree: set[int] = set()
    parent_edge: dict[int, tuple[int, int]] = {}  # vertex -> (edge, parent vertex)
    frontier = [root]
    seen = {root}
    while frontier:
        nxt = []
        for u in frontier:
            for e, w in incidence[u]:
                if w not in seen:
                    seen.add(w)
                    tree.add(e)
                    parent_edge[w] = (e, u)
                    nxt.append(w)
        frontier = nxt
    if len(seen) != c.num_vertices:
        raise IntegrityError("primal graph is not connected")

    # dual spanning tree on the remaining edges
    slots = c.edge_slots()
    dual_incidence: dict[int, list[tuple[int, int]]] = {f: [] for f in c.faces}
    for e in sorted(c.edges):
        if e in tree:
            continue
        (f1, _), (f2, _) = slots[e]
        if f1 == f2:
            continue
        dual_incidence[f1].append((e, f2))
        dual_incidence[f2].append((e, f1))
    droot = min(c.faces)
    cotree: set[int] = set()
    dual_parent: dict[int, tuple[int, int]] = {}
    frontier = [droot]
    dseen = {droot}
    while frontier:
        nxt = []
        for f in frontier:
            for e, g in dual_incidence[f]:
                if g not in dseen:
                    dseen.add(g)
                    cotree.add(e)
                    dual_parent[g] = (e, f)
                    nxt.append(g)
        frontier = nxt
    if len(dseen) != c.num_faces:
        raise IntegrityError("dual graph minus the spanning tree is not connected")

    leftover = sorted(set(c.edges) - tree - cotree)
    if len(leftover) != 2 * c.genus:
        raise IntegrityError(
            f"tree/co-tree leaves {len(leftover)} edges, expected {2 * c.genus}"
        )
    return tree, parent_edge, cotree, dual_parent, leftover


def cycle_cocycle_bases(c: SurfaceComplex) -> tuple[list[int], list[int]]:
    """Paired bases: 2g primal cycles and 2g cocycles with identity pairing."""
    _, parent_edge, _, dual_parent, leftover = _tree_cotree(c)
    idx = c.edge_index()

    def tree_path(v: int) -> int:
        mask = 0
        while v in parent_edge:
            e, v = parent_edge[v]
            mask ^= 1 << idx[e]
        return mask

    def cotree_path(f: int) -> int:
        mask = 0
        while f in dual_parent:
            e, f = dual_parent[f]
            mask ^= 1 << idx[e]
        return mask

    slots = c.edge_slots()
    cycles = []
    cocycles = []
    for x in leftover:
        u, v = c.edges[x]
        cycles.append((1 << idx[x]) ^ tree_path(u) ^ tree_path(v))
        (f1, _), (f2, _) = slots[x]
        cocycles.append((1 << idx[x]) ^ cotree_path(f1) ^ cotree_path(f2))
    return cycles, cocycles


def cocycle_basis(c: SurfaceComplex) -> list[int]:
    """2g edge sets that vanish on boundaries and induce a basis dual to H1."""
    betti1(c)
    cycles, cocycles = cycle_cocycle_bases(c)
    faces = face_boundary_masks(c)
    for k, coc in enumerate(cocycles):
        bad = [f for f, b in faces.items() if parity(b & coc)]
        if bad:
            raise IntegrityError(
                f"cocycle {k} meets face {bad[0]} boundary an odd number of times"
            )
    for i, cyc in enumerate(cycles):
        for j, coc in enumerate(cocycles):
            if parity(cyc & coc) != (1 if i == j else 0):
                raise IntegrityError("cycle/cocycle pairing matrix is not the identity")
    return cocycles


def is_cycle(c: SurfaceComplex, mask: int) -> bool:
    return all(parity(star & mask) == 0 for star in vertex_star_masks(c).values())


def homology_signature(c: SurfaceComplex, cycle: int, basis: Sequence[int] | None = None) -> int:
    """Pairing bits of a cycle against the cocycle basis; 0 iff a boundary."""
    if not is_cycle(c, cycle):
        raise InputError("edge set is not a cycle (some vertex has odd incidence)")
    if basis is None:
        basis = cocycle_basis(c)
    sig = 0
    for i, coc in enumerate(basis):
        if parity(cycle & coc):
            sig |= 1 << i
    return sig
