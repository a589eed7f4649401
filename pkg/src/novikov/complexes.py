"""Finite ordered simplicial complexes, integral 1-cocycles, and the
twisted Alexander-Whitney cup product.

Simplices are strictly increasing vertex tuples; the global integer order
on vertices fixes all orientation signs.  A cochain in degree q is a flat
list of values indexed by the sorted q-simplex list.  Cochain values sit
in the fiber over the first (minimal) vertex of the simplex; the twisted
coboundary multiplies the 0-th face term by the transport a**z(v0, v1).
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations

from .errors import (DegreeOutOfRange, MalformedSimplex, MissingEdge,
                     NotACocycle)
from .linalg import kernel_lattice_int
from .numfield import Scalar, check_nonzero, scalar_pow


class SimplicialComplex:
    """Face-closed collection of sorted vertex tuples, graded by dimension."""

    def __init__(self, simplices_by_dim):
        self.simplices = [sorted(s) for s in simplices_by_dim]
        self.index = [{s: i for i, s in enumerate(level)}
                      for level in self.simplices]

    @property
    def dim(self) -> int:
        return len(self.simplices) - 1

    @property
    def vertex_count(self) -> int:
        return len(self.simplices[0]) if self.simplices else 0

    def f_vector(self):
        return tuple(len(level) for level in self.simplices)

    def euler_characteristic(self) -> int:
        return sum((-1) ** q * len(level)
                   for q, level in enumerate(self.simplices))

    def n_simplices(self, q: int) -> int:
        if 0 <= q <= self.dim:
            return len(self.simplices[q])
        return 0

    def edges(self):
        return self.simplices[1] if self.dim >= 1 else []

    def has_simplex(self, s) -> bool:
        q = len(s) - 1
        return 0 <= q <= self.dim and tuple(s) in self.index[q]

    def coboundary_matrix(self, q: int):
        """Integer matrix of delta: C^q -> C^{q+1}; rows are (q+1)-simplices,
        columns are q-simplices, entry for (sigma, d_i sigma) is (-1)^i."""
        if not 0 <= q <= self.dim:
            raise DegreeOutOfRange(f"degree {q} outside 0..{self.dim}")
        if q == self.dim:
            return []
        cols = self.index[q]
        rows = []
        for sigma in self.simplices[q + 1]:
            row = [0] * len(self.simplices[q])
            for i in range(len(sigma)):
                face = sigma[:i] + sigma[i + 1:]
                row[cols[face]] += (-1) ** i
            rows.append(row)
        return rows

    def vertices(self):
        return [s[0] for s in self.simplices[0]]

    def maximal_simplices(self):
        """Simplices with no proper coface, all dimensions."""
        out = []
        for q, level in enumerate(self.simplices):
            if q == self.dim:
                out.extend(level)
                continue
            cofaces = set()
            for s in self.simplices[q + 1]:
                for i in range(len(s)):
                    cofaces.add(s[:i] + s[i + 1:])
            out.extend(s for s in level if s not in cofaces)
        return out

    def __repr__(self):
        return f"SimplicialComplex(f={self.f_vector()})"


def build_complex(maximal_simplices) -> SimplicialComplex:
    """Face closure of the given simplices, deduplicated and sorted."""
    by_dim = {}
    for s in maximal_simplices:
        tup = tuple(s)
        if len(set(tup)) != len(tup):
            raise MalformedSimplex(f"repeated vertex in {tup}")
        tup = tuple(sorted(tup))
        for k in range(1, len(tup) + 1):
            for face in combinations(tup, k):
                by_dim.setdefault(k - 1, set()).add(face)
    if not by_dim:
        return SimplicialComplex([])
    levels = [sorted(by_dim.get(q, set())) for q in range(max(by_dim) + 1)]
    return SimplicialComplex(levels)


class OneCocycle:
    """Integer edge weights satisfying the cocycle condition.

    Stored on sorted edges (u < v); the value on the reversed orientation
    is the negative.  Construct through ``validate_cocycle``.
    """

    def __init__(self, complex: SimplicialComplex, values: dict):
        self.complex = complex
        self.values = dict(values)

    def value(self, u: int, v: int) -> int:
        if u < v:
            return self.values[(u, v)]
        return -self.values[(v, u)]

    def transport_exponent(self, path) -> int:
        """Sum of edge values along consecutive vertices of ``path``."""
        return sum(self.value(path[i], path[i + 1])
                   for i in range(len(path) - 1))

    def as_vector(self):
        """Values in the sorted-edge basis order."""
        return [self.values[e] for e in self.complex.edges()]

    def is_zero(self) -> bool:
        return all(v == 0 for v in self.values.values())

    def scaled_sum(self, others_and_coeffs):
        """Integer combination of cocycles on the same complex."""
        vals = {e: 0 for e in self.values}
        for z, n in others_and_coeffs:
            for e, v in z.values.items():
                vals[e] += n * v
        return OneCocycle(self.complex, vals)


def validate_cocycle(complex: SimplicialComplex, edge_values: dict,
                     default_zero: bool = False) -> OneCocycle:
    """Check the edge map against the complex and the cocycle condition."""
    values = {}
    for e in complex.edges():
        if e in edge_values:
            values[e] = int(edge_values[e])
        elif default_zero:
            values[e] = 0
        else:
            raise MissingEdge(f"no cocycle value for edge {e}")
    extra = set(edge_values) - set(values)
    if extra:
        raise MissingEdge(f"cocycle assigns values to non-edges: {sorted(extra)}")
    z = OneCocycle(complex, values)
    if complex.dim >= 2:
        for tri in complex.simplices[2]:
            u, v, w = tri
            if z.value(u, v) + z.value(v, w) - z.value(u, w) != 0:
                raise NotACocycle(tri)
    return z


def class_rank_and_divisibility(complex: SimplicialComplex, z: OneCocycle):
    """Image of the pairing of [z] with H_1(X; Z).

    Returns (rank, divisibility): rank 0 iff the class pairs to zero with
    every cycle, otherwise 1 with divisibility the gcd of the pairing
    values over an integral basis of the cycle lattice.
    """
    if complex.dim < 1:
        return (0, 0)
    edges = complex.edges()
    nv = complex.vertex_count
    vindex = {v: i for i, v in enumerate(complex.vertices())}
    # boundary matrix: rows vertices, columns edges
    rows = [[0] * len(edges) for _ in range(nv)]
    for j, (u, v) in enumerate(edges):
        rows[vindex[u]][j] -= 1
        rows[vindex[v]][j] += 1
    zvec = z.as_vector()
    pairings = []
    for kvec in kernel_lattice_int(rows, len(edges)):
        pairings.append(sum(a * b for a, b in zip(zvec, kvec)))
    nonzero = [abs(p) for p in pairings if p]
    if not nonzero:
        return (0, 0)
    g = nonzero[0]
    for p in nonzero[1:]:
        g = _gcd(g, p)
    return (1, g)


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a


def coboundary_of_vertex_function(complex: SimplicialComplex, f: dict) -> OneCocycle:
    """delta f as a 1-cocycle: (delta f)(u, v) = f(v) - f(u)."""
    values = {(u, v): f.get(v, 0) - f.get(u, 0) for (u, v) in complex.edges()}
    return OneCocycle(complex, values)


def twisted_cup(complex: SimplicialComplex, z: OneCocycle, p: int, q: int,
                a1: Scalar, a2: Scalar, alpha, beta):
    """Alexander-Whitney cup product with local-coefficient transport.

    alpha is a p-cochain with monodromy a1, beta a q-cochain with monodromy
    a2; the result is a (p+q)-cochain with monodromy a1*a2:

        (alpha cup beta)(v_0..v_{p+q})
            = alpha(v_0..v_p) * a2**z(v_0 -> v_p) * beta(v_p..v_{p+q})

    The transport exponent z(v_0 -> v_p) is path-independent within a
    simplex by the cocycle condition.
    """
    check_nonzero(a1)
    check_nonzero(a2)
    d = p + q
    if d > complex.dim:
        return []
    front_index = complex.index[p]
    back_index = complex.index[q]
    out = []
    for sigma in complex.simplices[d]:
        front = sigma[:p + 1]
        back = sigma[p:]
        av = alpha[front_index[front]]
        bv = beta[back_index[back]]
        t = z.transport_exponent(front)
        out.append(av * scalar_pow(a2, t) * bv)
    return out


def twisted_coboundary_values(complex: SimplicialComplex, z: OneCocycle,
                              q: int, a: Scalar):
    """Matrix of the twisted coboundary delta_a: C^q -> C^{q+1} at monodromy a.

    Rows are (q+1)-simplices, columns q-simplices; the 0-th face term
    carries the transport factor a**z(v0, v1).
    """
    check_nonzero(a)
    if q >= complex.dim or q < 0:
        return []
    cols = complex.index[q]
    rows = []
    for sigma in complex.simplices[q + 1]:
        row = [Fraction(0)] * len(complex.simplices[q])
        for i in range(len(sigma)):
            face = sigma[:i] + sigma[i + 1:]
            if i == 0:
                coeff = scalar_pow(a, z.value(sigma[0], sigma[1]))
            else:
                coeff = (-1) ** i
            row[cols[face]] = row[cols[face]] + coeff
        rows.append(row)
    return rows
