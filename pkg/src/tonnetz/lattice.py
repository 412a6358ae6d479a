"""The Tonnetz as an integer lattice of vertices and unit triangles.

Vertices are pairs (p, q): p steps along the fifth axis and q along the
major-third axis, with the origin at C.  An upward triangle rooted at v
has vertices {v, v+fifth, v+third}; a downward one {v, v+fifth,
v+fifth-third}.  The base triangle is the upward triangle at the origin.

Group elements act on the lattice through integer affine isometries; the
map from windows to isometries is a group homomorphism, and the induced
action on triangles is simply transitive.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from enum import Enum

from .core import AffinePermutation, TriangleCoords, triangle_to_perm

Vertex = tuple[int, int]

FIFTH: Vertex = (1, 0)
THIRD: Vertex = (0, 1)
ORIGIN: Vertex = (0, 0)


class Edge(Enum):
    """Edge of a triangle, named by the musical interval it spans."""

    FIFTH = "fifth"
    MINOR_THIRD = "minor-third"
    MAJOR_THIRD = "major-third"


@dataclass(frozen=True, order=True)
class Triangle:
    """A unit triangle, in normal form (root, orientation).

    The root is the vertex from which the +fifth edge stays inside the
    triangle; up is True for upward-pointing triangles.
    """

    root: Vertex
    up: bool

    def vertices(self) -> tuple[Vertex, Vertex, Vertex]:
        p, q = self.root
        if self.up:
            return ((p, q), (p + 1, q), (p, q + 1))
        return ((p, q), (p + 1, q), (p + 1, q - 1))

    def edge_vertices(self, edge: Edge) -> tuple[Vertex, Vertex]:
        p, q = self.root
        if self.up:
            if edge is Edge.FIFTH:
                return ((p, q), (p + 1, q))
            if edge is Edge.MAJOR_THIRD:
                return ((p, q), (p, q + 1))
            return ((p + 1, q), (p, q + 1))
        if edge is Edge.FIFTH:
            return ((p, q), (p + 1, q))
        if edge is Edge.MAJOR_THIRD:
            return ((p + 1, q - 1), (p + 1, q))
        return ((p, q), (p + 1, q - 1))


BASE_TRIANGLE = Triangle(ORIGIN, up=True)


def triangle_from_vertices(verts: frozenset[Vertex] | set[Vertex]) -> Triangle:
    """Normal form of a triangle given as a vertex set."""
    if len(verts) != 3:
        raise ValueError(f"need three vertices, got {sorted(verts)}")
    pmin = min(v[0] for v in verts)
    qmin = min(v[1] for v in verts)
    if (pmin, qmin) in verts:
        t = Triangle((pmin, qmin), up=True)
    else:
        t = Triangle((pmin, qmin + 1), up=False)
    if set(t.vertices()) != set(verts):
        raise ValueError(f"{sorted(verts)} is not a unit triangle")
    return t


def flip(t: Triangle, edge: Edge) -> Triangle:
    """The other triangle sharing the given edge; an involution."""
    p, q = t.root
    if t.up:
        if edge is Edge.FIFTH:
            return Triangle((p, q), up=False)
        if edge is Edge.MINOR_THIRD:
            return Triangle((p, q + 1), up=False)
        return Triangle((p - 1, q + 1), up=False)
    if edge is Edge.FIFTH:
        return Triangle((p, q), up=True)
    if edge is Edge.MINOR_THIRD:
        return Triangle((p, q - 1), up=True)
    return Triangle((p + 1, q - 1), up=True)


def neighbors(t: Triangle) -> tuple[Triangle, Triangle, Triangle]:
    return tuple(flip(t, e) for e in Edge)  # type: ignore[return-value]


# --- isometries ------------------------------------------------------------


@dataclass(frozen=True)
class Isometry:
    """Affine map x -> m @ x + v with an integer 2x2 matrix m."""

    m: tuple[int, int, int, int]
    v: Vertex

    def apply(self, x: Vertex) -> Vertex:
        m00, m01, m10, m11 = self.m
        return (m00 * x[0] + m01 * x[1] + self.v[0], m10 * x[0] + m11 * x[1] + self.v[1])

    def __mul__(self, other: Isometry) -> Isometry:
        """Composition self(other(x))."""
        if not isinstance(other, Isometry):
            return NotImplemented
        a00, a01, a10, a11 = self.m
        b00, b01, b10, b11 = other.m
        m = (
            a00 * b00 + a01 * b10,
            a00 * b01 + a01 * b11,
            a10 * b00 + a11 * b10,
            a10 * b01 + a11 * b11,
        )
        return Isometry(m, self.apply(other.v))

    def det(self) -> int:
        m00, m01, m10, m11 = self.m
        return m00 * m11 - m01 * m10

    def apply_triangle(self, t: Triangle) -> Triangle:
        return triangle_from_vertices({self.apply(x) for x in t.vertices()})


IDENTITY_ISOMETRY = Isometry((1, 0, 0, 1), (0, 0))

_GENERATOR_ISOMETRIES = {
    # reflection fixing the fifth edge of the base triangle (the C-G line)
    1: Isometry((1, 1, 0, -1), (0, 0)),
    # reflection fixing the major-third edge (the C-E line)
    2: Isometry((-1, 0, 1, 1), (0, 0)),
    # reflection fixing the minor-third edge (the E-G line)
    3: Isometry((0, -1, -1, 0), (1, 1)),
}


def generator_isometry(i: int) -> Isometry:
    try:
        return _GENERATOR_ISOMETRIES[i]
    except KeyError:
        raise ValueError(f"generator index must be 1, 2 or 3, got {i!r}") from None


def perm_to_iso(f: AffinePermutation) -> Isometry:
    """The lattice isometry realizing f; a group homomorphism."""
    iso = IDENTITY_ISOMETRY
    for i in f.reduced_word():
        iso = iso * generator_isometry(i)
    return iso


def triangle_of(f: AffinePermutation) -> Triangle:
    """Image of the base triangle under f's isometry."""
    iso = perm_to_iso(f)
    return triangle_from_vertices({iso.apply(x) for x in BASE_TRIANGLE.vertices()})


# --- the coordinate route between triangles and windows --------------------


def _centroid3(t: Triangle) -> tuple[int, int]:
    # three times the centroid, in lattice coordinates: always integral
    p, q = t.root
    if t.up:
        return (3 * p + 1, 3 * q + 1)
    return (3 * p + 2, 3 * q - 1)


def geometric_coords(t: Triangle) -> TriangleCoords:
    """Axis coordinates of the triangle center, computed from the lattice.

    Independent of the window arithmetic in core; the two routes agreeing
    on every element is one of the verification suites.
    """
    cp, cq = _centroid3(t)
    dp, dq = cp - 1, cq - 1
    return TriangleCoords(-(2 * dp + dq) // 3, (dp + 2 * dq) // 3, (dp - dq) // 3)


def triangle_from_coords(coords: TriangleCoords | tuple[int, int, int]) -> Triangle:
    """Inverse of geometric_coords."""
    _, c2, c3 = coords
    dq = c2 - c3
    dp = c2 + 2 * c3
    cp, cq = dp + 1, dq + 1
    if cp % 3 == 1:
        return Triangle(((cp - 1) // 3, (cq - 1) // 3), up=True)
    return Triangle(((cp - 2) // 3, (cq + 1) // 3), up=False)


def perm_of(t: Triangle) -> AffinePermutation:
    """The unique group element whose triangle is t."""
    return triangle_to_perm(geometric_coords(t))


def vertex_class(v: Vertex) -> int:
    """The orbit class of a vertex under the group action, in {0, 1, 2}.

    Class 2 vertices (like the major third above the origin) are the
    centers of the coset-hexagon tiling; classes 0 and 1 contain the
    origin and the fifth above it.
    """
    return (v[0] - v[1]) % 3


def class_vertex(t: Triangle, cls: int) -> Vertex:
    """The unique vertex of t in the given class."""
    for v in t.vertices():
        if vertex_class(v) == cls:
            return v
    raise ValueError(f"triangle {t} has no class-{cls} vertex")


# --- BFS oracle -------------------------------------------------------------


def gallery_distance_bfs(t1: Triangle, t2: Triangle) -> int:
    """Minimal number of edge flips from t1 to t2, by breadth-first search.

    This is the independent oracle for Coxeter length: for any element f,
    gallery_distance_bfs(base, triangle_of(f)) == f.length().
    """
    if t1 == t2:
        return 0
    seen = {t1}
    queue = deque([(t1, 0)])
    while queue:
        t, d = queue.popleft()
        for nb in neighbors(t):
            if nb == t2:
                return d + 1
            if nb not in seen:
                seen.add(nb)
                queue.append((nb, d + 1))
    raise RuntimeError("flip graph is connected; unreachable")


def triangle_ball(center: Triangle, radius: int) -> dict[Triangle, int]:
    """All triangles within the given flip distance, with their distances."""
    if radius < 0:
        raise ValueError("radius must be non-negative")
    dist = {center: 0}
    frontier = [center]
    for d in range(1, radius + 1):
        nxt = []
        for t in frontier:
            for nb in neighbors(t):
                if nb not in dist:
                    dist[nb] = d
                    nxt.append(nb)
        frontier = nxt
    return dist


# --- triangle text format ---------------------------------------------------


def format_triangle(t: Triangle) -> str:
    return "%s(%d,%d)" % ("U" if t.up else "D", t.root[0], t.root[1])


def parse_triangle(text: str) -> Triangle:
    """Parse "U(p,q)" or "D(p,q)"."""
    s = text.strip().replace("−", "-")
    if len(s) < 6 or s[0] not in "UD" or s[1] != "(" or not s.endswith(")"):
        raise ValueError(f"triangle must look like U(p,q) or D(p,q), got {text!r}")
    parts = s[2:-1].split(",")
    if len(parts) != 2:
        raise ValueError(f"triangle needs two coordinates, got {text!r}")
    try:
        p, q = (int(x.strip()) for x in parts)
    except ValueError:
        raise ValueError(f"triangle coordinates must be integers, got {text!r}") from None
    return Triangle((p, q), up=s[0] == "U")
