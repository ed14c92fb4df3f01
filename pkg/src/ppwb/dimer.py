"""Rhombus tilings of the a,b,c hexagon and dimer counting on its dual.

Grid convention.  Lattice coordinates (x, y) stand for the planar
point x*u + y*v with u at 0 degrees and v at 60 degrees.  The box
[0,a] x [0,b] x [0,c] is projected with the axes going to -v, u, v-u
respectively, which maps it onto the hexagon

    -a <= y <= c,  -c <= x <= b,  -a <= x + y <= b.

Unit triangles: the up triangle U(x, y) has corners (x, y), (x+1, y),
(x, y+1); the down triangle D(x, y) has corners (x+1, y), (x, y+1),
(x+1, y+1).  A rhombus is an up triangle joined with one of its three
down neighbours, written (x, y, o) where o names the partner of
U(x, y): 'A' -> D(x, y), 'B' -> D(x-1, y), 'C' -> D(x, y-1).  The
three letters are the three visible cube-face directions of the pile.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cmp_to_key
from typing import Iterator

from .core import BoxDims, PlanePartition
from .lgv import det_int

Triangle = tuple[str, int, int]  # ('U'|'D', x, y)
Rhombus = tuple[int, int, str]
Edge = tuple[Triangle, Triangle]  # (up, down)

ORIENTATIONS = "ABC"


class NotSignable(ValueError):
    """No consistent Kasteleyn sign assignment exists (non-planar input)."""


def _corners(t: Triangle) -> tuple[tuple[int, int], ...]:
    kind, x, y = t
    if kind == "U":
        return ((x, y), (x + 1, y), (x, y + 1))
    return ((x + 1, y), (x, y + 1), (x + 1, y + 1))


def _in_hexagon(box: BoxDims, p: tuple[int, int]) -> bool:
    a, b, c = box
    x, y = p
    return -a <= y <= c and -c <= x <= b and -a <= x + y <= b


def hexagon_triangles(box: BoxDims) -> tuple[list[Triangle], list[Triangle]]:
    """Up and down triangles of the triangulated hexagon, sorted."""
    box = BoxDims(*box).validate()
    a, b, c = box
    ups, downs = [], []
    for x in range(-c - 1, b + 1):
        for y in range(-a - 1, c + 1):
            if all(_in_hexagon(box, p) for p in _corners(("U", x, y))):
                ups.append(("U", x, y))
            if all(_in_hexagon(box, p) for p in _corners(("D", x, y))):
                downs.append(("D", x, y))
    return sorted(ups), sorted(downs)


def rhombus_triangles(r: Rhombus) -> tuple[Triangle, Triangle]:
    x, y, o = r
    if o == "A":
        return ("U", x, y), ("D", x, y)
    if o == "B":
        return ("U", x, y), ("D", x - 1, y)
    if o == "C":
        return ("U", x, y), ("D", x, y - 1)
    raise ValueError(f"unknown orientation {o!r}")


@dataclass(frozen=True)
class HexTiling:
    box: BoxDims
    rhombi: frozenset[Rhombus]

    def validate(self) -> "HexTiling":
        ups, downs = hexagon_triangles(self.box)
        need = set(ups) | set(downs)
        covered: set[Triangle] = set()
        for r in self.rhombi:
            for t in rhombus_triangles(r):
                if t not in need:
                    raise ValueError(f"rhombus {r} leaves the hexagon")
                if t in covered:
                    raise ValueError(f"triangle {t} covered twice")
                covered.add(t)
        if covered != need:
            raise ValueError("tiling does not cover the hexagon")
        return self


def pp_to_tiling(pp: PlanePartition, box: BoxDims) -> HexTiling:
    """Project the cube pile of the filling onto the hexagon.

    Top faces give A rhombi, faces seen along the row axis give B,
    faces seen along the column axis give C.
    """
    box = BoxDims(*box).validate()
    a, b, c = box
    grid = pp.grid(box)
    rhombi: set[Rhombus] = set()
    for i in range(1, a + 1):
        for j in range(1, b + 1):
            k = grid[i - 1][j - 1]
            rhombi.add((j - 1 - k, k - i, "A"))
    for j in range(1, b + 1):
        for k in range(1, c + 1):
            m = sum(1 for i in range(1, a + 1) if grid[i - 1][j - 1] >= k)
            rhombi.add((j - k, k - 1 - m, "B"))
    for i in range(1, a + 1):
        for k in range(1, c + 1):
            m = sum(1 for j in range(1, b + 1) if grid[i - 1][j - 1] >= k)
            rhombi.add((m - k, k - i, "C"))
    return HexTiling(box, frozenset(rhombi)).validate()


def tiling_to_pp(t: HexTiling) -> PlanePartition:
    """Invert pp_to_tiling; rejects tilings with incoherent orientations.

    The top face of cell (i, j) at height k sits at (j-1-k, k-i), so
    all top faces of one grid diagonal share x + y = j - i - 1, and
    along a diagonal the deeper cell always has the smaller y.
    """
    a, b, c = t.box
    by_diagonal: dict[int, list[tuple[int, int]]] = {}
    for x, y, o in t.rhombi:
        if o == "A":
            by_diagonal.setdefault(x + y, []).append((x, y))
    grid = [[0] * b for _ in range(a)]
    for d in range(-a, b):  # d = j - i for 1-based cells
        cells = [(i, i + d) for i in range(1, a + 1) if 1 <= i + d <= b]
        group = sorted(by_diagonal.pop(d - 1, []), key=lambda p: -p[1])
        if len(group) != len(cells):
            raise ValueError(f"diagonal {d} has {len(group)} top faces, expected {len(cells)}")
        for (i, j), (x, y) in zip(cells, group):
            k = y + i
            if not 0 <= k <= c or j - 1 - k != x:
                raise ValueError(f"top face at ({x},{y}) does not fit cell ({i},{j})")
            grid[i - 1][j - 1] = k
    if by_diagonal:
        raise ValueError("top faces outside the grid diagonals")
    pp = PlanePartition(grid)
    if pp_to_tiling(pp, t.box) != t:
        raise ValueError("orientation field is not the projection of a cube pile")
    return pp


def format_tiling(t: HexTiling) -> str:
    """One line per rhombus: 'x y o', sorted."""
    return "\n".join(f"{x} {y} {o}" for x, y, o in sorted(t.rhombi))


def parse_tiling(text: str, box: BoxDims) -> HexTiling:
    rhombi = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        if not line.strip():
            break
        parts = line.split()
        if len(parts) != 3 or parts[2] not in ORIENTATIONS:
            raise ValueError(f"line {lineno}: expected 'x y o' with o in A/B/C")
        try:
            rhombi.append((int(parts[0]), int(parts[1]), parts[2]))
        except ValueError:
            raise ValueError(f"line {lineno}: non-integer coordinate") from None
    return HexTiling(BoxDims(*box).validate(), frozenset(rhombi)).validate()


@dataclass(frozen=True)
class PlanarBipartiteGraph:
    """Bipartite graph with an embedding given by vertex positions.

    Positions are exact rational lattice coordinates; only the cyclic
    order of edges around each vertex is ever used.
    """

    ups: tuple[Triangle, ...]
    downs: tuple[Triangle, ...]
    edges: frozenset[Edge]
    positions: dict

    def neighbours(self, v: Triangle) -> list[Triangle]:
        out = []
        for u, d in self.edges:
            if u == v:
                out.append(d)
            elif d == v:
                out.append(u)
        return out


def _triangle_center(t: Triangle) -> tuple[Fraction, Fraction]:
    kind, x, y = t
    if kind == "U":
        return (Fraction(3 * x + 1, 3), Fraction(3 * y + 1, 3))
    return (Fraction(3 * x + 2, 3), Fraction(3 * y + 2, 3))


def build_hex_graph(box: BoxDims) -> PlanarBipartiteGraph:
    """Dual graph of the triangulated hexagon: a vertex per triangle,
    an edge per pair of adjacent triangles."""
    ups, downs = hexagon_triangles(box)
    downset = set(downs)
    edges: set[Edge] = set()
    for u in ups:
        _, x, y = u
        for d in (("D", x, y), ("D", x - 1, y), ("D", x, y - 1)):
            if d in downset:
                edges.add((u, d))
    positions = {t: _triangle_center(t) for t in ups + downs}
    return PlanarBipartiteGraph(tuple(ups), tuple(downs), frozenset(edges), positions)


def tiling_to_matching(t: HexTiling) -> frozenset[Edge]:
    """Each rhombus becomes the dual edge joining its two triangles."""
    t.validate()
    return frozenset(rhombus_triangles(r) for r in t.rhombi)


def matching_to_tiling(m: frozenset[Edge], box: BoxDims) -> HexTiling:
    """Inverse of tiling_to_matching; rejects non-perfect matchings."""
    rhombi = []
    for u, d in m:
        _, x, y = u
        if d == ("D", x, y):
            rhombi.append((x, y, "A"))
        elif d == ("D", x - 1, y):
            rhombi.append((x, y, "B"))
        elif d == ("D", x, y - 1):
            rhombi.append((x, y, "C"))
        else:
            raise ValueError(f"edge {(u, d)} does not join adjacent triangles")
    return HexTiling(BoxDims(*box).validate(), frozenset(rhombi)).validate()


def enumerate_matchings(g: PlanarBipartiteGraph) -> Iterator[frozenset[Edge]]:
    """All perfect matchings, recursing on the first uncovered vertex."""
    vertices = sorted(g.ups) + sorted(g.downs)
    adj: dict[Triangle, list[Edge]] = {v: [] for v in vertices}
    for e in sorted(g.edges):
        adj[e[0]].append(e)
        adj[e[1]].append(e)
    covered: set[Triangle] = set()
    chosen: list[Edge] = []

    def extend() -> Iterator[frozenset[Edge]]:
        v = next((w for w in vertices if w not in covered), None)
        if v is None:
            yield frozenset(chosen)
            return
        for e in adj[v]:
            other = e[1] if e[0] == v else e[0]
            if other in covered:
                continue
            covered.add(v)
            covered.add(other)
            chosen.append(e)
            yield from extend()
            chosen.pop()
            covered.discard(v)
            covered.discard(other)

    yield from extend()


def _cyclic_neighbours(g: PlanarBipartiteGraph) -> dict[Triangle, list[Triangle]]:
    """Neighbours of each vertex sorted counterclockwise by direction."""

    def direction_cmp(d1, d2) -> int:
        def half(d):
            dx, dy = d
            return 0 if (dy > 0 or (dy == 0 and dx > 0)) else 1

        h1, h2 = half(d1), half(d2)
        if h1 != h2:
            return -1 if h1 < h2 else 1
        cross = d1[0] * d2[1] - d1[1] * d2[0]
        if cross == 0:
            return 0
        return -1 if cross > 0 else 1

    adj: dict[Triangle, list[Triangle]] = {v: [] for v in g.ups + g.downs}
    for u, d in g.edges:
        adj[u].append(d)
        adj[d].append(u)
    out = {}
    for v, nbrs in adj.items():
        px, py = g.positions[v]
        dirs = {
            w: (g.positions[w][0] - px, g.positions[w][1] - py) for w in nbrs
        }
        out[v] = sorted(nbrs, key=cmp_to_key(lambda w1, w2: direction_cmp(dirs[w1], dirs[w2])))
    return out


def _trace_faces(g: PlanarBipartiteGraph) -> list[tuple[Triangle, ...]]:
    """All face cycles of the rotation system, one per directed edge."""
    cyc = _cyclic_neighbours(g)
    succ_index = {v: {w: i for i, w in enumerate(ns)} for v, ns in cyc.items()}
    remaining = set()
    for u, d in g.edges:
        remaining.add((u, d))
        remaining.add((d, u))
    faces = []
    while remaining:
        start = min(remaining)
        walk = [start]
        remaining.discard(start)
        v, w = start
        while True:
            ns = cyc[w]
            nxt = ns[(succ_index[w][v] - 1) % len(ns)]
            v, w = w, nxt
            if (v, w) == start:
                break
            walk.append((v, w))
            remaining.discard((v, w))
        faces.append(tuple(e[0] for e in walk))
    return faces


def _check_planar(g: PlanarBipartiteGraph, faces) -> None:
    """Euler-characteristic test of the rotation system, per component."""
    parent = {v: v for v in g.ups + g.downs}

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for u, d in g.edges:
        parent[find(u)] = find(d)
    touched = {v for e in g.edges for v in e}
    components = {find(v) for v in touched}
    vertices = len(touched)
    expected_faces = 2 * len(components) - vertices + len(g.edges)
    if len(faces) != expected_faces:
        raise NotSignable("edge rotation system is not planar")


def bounded_faces(g: PlanarBipartiteGraph) -> list[tuple[Triangle, ...]]:
    """Bounded faces of the embedding as vertex cycles.

    Faces traversed counterclockwise (positive signed area) are the
    bounded ones; each component's outer face comes out clockwise.
    """
    faces = _trace_faces(g)
    _check_planar(g, faces)
    bounded = []
    for cycle in faces:
        area = Fraction(0)
        for i, vert in enumerate(cycle):
            x1, y1 = g.positions[vert]
            x2, y2 = g.positions[cycle[(i + 1) % len(cycle)]]
            area += x1 * y2 - x2 * y1
        if area > 0:
            bounded.append(cycle)
    return bounded


def _kasteleyn_signs(g: PlanarBipartiteGraph) -> dict[Edge, int]:
    """Signs making every bounded face of length L carry (-1)^(L/2 + 1).

    Solved as a GF(2) system over the edges; honeycomb faces (L = 6)
    are satisfied by the all-positive assignment, but the solver also
    covers general planar bipartite inputs.
    """
    edge_list = sorted(g.edges)
    edge_index = {e: i for i, e in enumerate(edge_list)}
    rows = []
    for face in bounded_faces(g):
        L = len(face)
        if L % 2:
            raise NotSignable("odd face in a bipartite embedding")
        mask = 0
        for i in range(L):
            v, w = face[i], face[(i + 1) % L]
            e = (v, w) if (v, w) in edge_index else (w, v)
            mask ^= 1 << edge_index[e]
        rhs = (L // 2 + 1) % 2
        rows.append((mask, rhs))
    # GF(2) elimination
    pivots: dict[int, tuple[int, int]] = {}
    for mask, rhs in rows:
        for p, (pm, pr) in pivots.items():
            if mask >> p & 1:
                mask ^= pm
                rhs ^= pr
        if mask == 0:
            if rhs:
                raise NotSignable("inconsistent face sign constraints")
            continue
        p = mask.bit_length() - 1
        pivots[p] = (mask, rhs)
    # back-substitute lowest pivot first: a pivot row's other bits are
    # all lower than its pivot bit, and free variables stay 0
    solution = 0
    for p in sorted(pivots):
        mask, rhs = pivots[p]
        val = rhs
        rest = mask & ~(1 << p)
        while rest:
            b = rest & -rest
            if solution & b:
                val ^= 1
            rest ^= b
        if val:
            solution |= 1 << p
    return {e: (-1 if solution >> i & 1 else 1) for i, e in enumerate(edge_list)}


def kasteleyn_count(g: PlanarBipartiteGraph) -> int:
    """Number of perfect matchings as |det| of the signed adjacency matrix."""
    ups = sorted(g.ups)
    downs = sorted(g.downs)
    if len(ups) != len(downs):
        return 0
    if not ups:
        return 1
    signs = _kasteleyn_signs(g)
    ui = {u: i for i, u in enumerate(ups)}
    di = {d: i for i, d in enumerate(downs)}
    matrix = [[0] * len(downs) for _ in range(len(ups))]
    for e in g.edges:
        u, d = e
        matrix[ui[u]][di[d]] = signs[e]
    return abs(det_int(matrix))
