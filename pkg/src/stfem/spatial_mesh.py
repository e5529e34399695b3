"""Conforming spatial meshes with interior-DOF numbering.

Meshes are intervals (d=1) or triangulations (d=2) with homogeneous
Dirichlet conditions: every vertex on the boundary is flagged and the
remaining vertices carry the degrees of freedom, numbered 0..n_x-1 in
vertex order.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True)
class SpatialMesh:
    """Immutable conforming mesh of the spatial domain.

    Attributes
    ----------
    dimension : 1 or 2.
    vertices : (nv, dimension) float array of vertex coordinates.
    elements : (ne, dimension+1) int array; pairs for intervals,
        counterclockwise triples for triangles.
    boundary : (nv,) bool array, True for vertices on the domain boundary.
    interior_dof : (nv,) int array mapping vertex -> DOF index, -1 on
        boundary vertices.
    """

    dimension: int
    vertices: np.ndarray
    elements: np.ndarray
    boundary: np.ndarray
    interior_dof: np.ndarray

    @property
    def num_vertices(self) -> int:
        return len(self.vertices)

    @property
    def num_elements(self) -> int:
        return len(self.elements)

    @property
    def num_dofs(self) -> int:
        """Number of interior (non-boundary) vertices n_x."""
        return int((self.interior_dof >= 0).sum())


def _finish(dimension, vertices, elements):
    """Recompute boundary flags and interior numbering from connectivity."""
    vertices = np.ascontiguousarray(vertices, dtype=float)
    elements = np.ascontiguousarray(elements, dtype=np.int64)
    boundary = np.zeros(len(vertices), dtype=bool)
    if dimension == 1:
        counts = np.bincount(elements.ravel(), minlength=len(vertices))
        boundary[counts == 1] = True
    else:
        edges = _edge_counts(elements)
        for (a, b), cnt in edges.items():
            if cnt == 1:
                boundary[a] = True
                boundary[b] = True
    interior_dof = -np.ones(len(vertices), dtype=np.int64)
    inner = np.flatnonzero(~boundary)
    interior_dof[inner] = np.arange(len(inner))
    if dimension == 1:
        vertices = vertices.reshape(-1, 1)
    return SpatialMesh(dimension, vertices, elements, boundary, interior_dof)


def _edge_counts(elements):
    counts: dict[tuple[int, int], int] = {}
    for tri in elements:
        for a, b in ((tri[0], tri[1]), (tri[1], tri[2]), (tri[2], tri[0])):
            key = (a, b) if a < b else (b, a)
            counts[key] = counts.get(key, 0) + 1
    return counts


def build_structured_square(m: int) -> SpatialMesh:
    """Uniform triangulation of the unit square with m x m cells.

    Vertices are numbered lexicographically by (row, column); every grid
    cell is split along the same lower-left/upper-right diagonal, giving
    2*m^2 triangles and (m-1)^2 interior vertices.
    """
    if m < 1:
        raise ValueError("m must be >= 1")
    xs = np.linspace(0.0, 1.0, m + 1)
    xg, yg = np.meshgrid(xs, xs, indexing="xy")
    vertices = np.column_stack([xg.ravel(), yg.ravel()])

    def vid(i, j):
        return j * (m + 1) + i

    tris = []
    for j in range(m):
        for i in range(m):
            v00 = vid(i, j)
            v10 = vid(i + 1, j)
            v01 = vid(i, j + 1)
            v11 = vid(i + 1, j + 1)
            tris.append((v00, v10, v11))
            tris.append((v00, v11, v01))
    return _finish(2, vertices, np.array(tris))


def build_interval(m: int, length: float) -> SpatialMesh:
    """Uniform partition of (0, length) into m elements."""
    if m < 1:
        raise ValueError("m must be >= 1")
    if length <= 0:
        raise ValueError("length must be positive")
    vertices = np.linspace(0.0, length, m + 1)
    elements = np.column_stack([np.arange(m), np.arange(1, m + 1)])
    return _finish(1, vertices, elements)


def refine_uniform(mesh: SpatialMesh) -> SpatialMesh:
    """Split every element: bisection for intervals, four congruent
    children via edge midpoints for triangles.

    Parent vertices keep their indices; midpoints are appended in order
    of first encounter, so the result is deterministic.
    """
    if mesh.dimension == 1:
        verts = list(mesh.vertices[:, 0])
        elems = []
        for a, b in mesh.elements:
            mid = len(verts)
            verts.append(0.5 * (verts[a] + verts[b]))
            elems.append((a, mid))
            elems.append((mid, b))
        return _finish(1, np.array(verts), np.array(elems))

    verts = list(map(tuple, mesh.vertices))
    midpoint: dict[tuple[int, int], int] = {}

    def mid(a, b):
        key = (a, b) if a < b else (b, a)
        idx = midpoint.get(key)
        if idx is None:
            idx = len(verts)
            pa, pb = mesh.vertices[a], mesh.vertices[b]
            verts.append(((pa[0] + pb[0]) / 2, (pa[1] + pb[1]) / 2))
            midpoint[key] = idx
        return idx

    elems = []
    for v0, v1, v2 in mesh.elements:
        m01, m12, m20 = mid(v0, v1), mid(v1, v2), mid(v2, v0)
        elems.extend([(v0, m01, m20), (m01, v1, m12), (m20, m12, v2),
                      (m01, m12, m20)])
    return _finish(2, np.array(verts), np.array(elems))


def element_measures(mesh: SpatialMesh) -> np.ndarray:
    """Signed element lengths (d=1) or areas (d=2)."""
    pts = mesh.vertices[mesh.elements]
    if mesh.dimension == 1:
        return pts[:, 1, 0] - pts[:, 0, 0]
    e1 = pts[:, 1] - pts[:, 0]
    e2 = pts[:, 2] - pts[:, 0]
    return 0.5 * (e1[:, 0] * e2[:, 1] - e1[:, 1] * e2[:, 0])


def mesh_size(mesh: SpatialMesh) -> float:
    """Mesh-size indicator: max element length (d=1) or the square root
    of the maximal element area (d=2)."""
    meas = element_measures(mesh)
    if mesh.dimension == 1:
        return float(meas.max())
    return float(np.sqrt(meas.max()))


def check_admissible(mesh: SpatialMesh) -> None:
    """Raise AssertionError if the mesh violates conformity invariants:
    positive element measures, each triangle edge shared by at most two
    triangles, boundary flags matching the topological boundary."""
    meas = element_measures(mesh)
    assert (meas > 0).all(), "non-positive element measure"
    if mesh.dimension == 2:
        for edge, cnt in _edge_counts(mesh.elements).items():
            assert cnt in (1, 2), f"edge {edge} shared by {cnt} elements"
    rebuilt = _finish(mesh.dimension, mesh.vertices, mesh.elements)
    assert (rebuilt.boundary == mesh.boundary).all(), "stale boundary flags"
    dofs = mesh.interior_dof[mesh.interior_dof >= 0]
    assert sorted(dofs) == list(range(mesh.num_dofs)), "dof numbering gap"


def mesh_to_text(mesh: SpatialMesh) -> str:
    """Serialize to the plain-text exchange format:
    header "d nv ne", vertex lines, element lines, boundary-flag line."""
    lines = [f"{mesh.dimension} {mesh.num_vertices} {mesh.num_elements}"]
    for v in mesh.vertices:
        lines.append(" ".join(repr(float(c)) for c in v))
    for e in mesh.elements:
        lines.append(" ".join(str(int(i)) for i in e))
    lines.append(" ".join("1" if b else "0" for b in mesh.boundary))
    return "\n".join(lines) + "\n"


def mesh_from_text(text: str) -> SpatialMesh:
    """Parse the plain-text exchange format written by mesh_to_text."""
    rows = [ln.split() for ln in text.strip().splitlines() if ln.strip()]
    d, nv, ne = (int(x) for x in rows[0])
    vertices = np.array([[float(c) for c in r] for r in rows[1:1 + nv]])
    elements = np.array([[int(c) for c in r] for r in rows[1 + nv:1 + nv + ne]])
    mesh = _finish(d, vertices if d == 2 else vertices[:, 0], elements)
    flags = np.array([c == "1" for c in rows[1 + nv + ne]])
    if not (flags == mesh.boundary).all():
        raise ValueError("boundary flags in file disagree with connectivity")
    return mesh
