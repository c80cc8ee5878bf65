"""Finite ordered simplicial complexes and their cochain complexes.

Vertices are integers 0..n-1 and carry their natural total order; every
simplex is stored as a strictly increasing vertex tuple.  Cochains take
values in Z (modulus 0) or Z/n, canonically reduced to [0, n).  Cohomology
is computed exactly, with explicit cocycle representatives for every
generator.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .exact_linalg import (
    AbelianGroupPresentation,
    F2Span,
    IntMatrix,
    f2_kernel,
    f2_pack_rows,
    f2_unpack,
    kernel_mod_p,
    smith_decomposition,
    solve_mod,
)

DEFAULT_DIMENSION_CAP = 6


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    p = 2
    while p * p <= n:
        if n % p == 0:
            return False
        p += 1
    return True


class SimplicialComplex:
    """Finite simplicial complex given by maximal simplices, closed eagerly."""

    def __init__(self, vertex_count: int, maximal_simplices, dimension_cap: int = DEFAULT_DIMENSION_CAP):
        if vertex_count < 0:
            raise ValueError("vertex_count must be >= 0")
        self.vertex_count = vertex_count
        normalized = []
        for s in maximal_simplices:
            s = tuple(s)
            if any(a >= b for a, b in zip(s, s[1:])):
                raise ValueError(f"simplex {s} is not strictly increasing")
            if s and (s[0] < 0 or s[-1] >= vertex_count):
                raise ValueError(f"simplex {s} has out-of-range vertices")
            if len(s) - 1 > dimension_cap:
                raise ValueError(f"simplex {s} exceeds dimension cap {dimension_cap}")
            normalized.append(s)
        self.maximal_simplices = tuple(sorted(set(normalized)))
        by_dim: dict[int, set] = {}
        for v in range(vertex_count):
            by_dim.setdefault(0, set()).add((v,))
        for s in self.maximal_simplices:
            for k in range(1, len(s) + 1):
                for face in combinations(s, k):
                    by_dim.setdefault(k - 1, set()).add(face)
        self.dim = max(by_dim) if by_dim else -1
        self._simplices = tuple(
            tuple(sorted(by_dim.get(q, ()))) for q in range(self.dim + 1)
        )
        self._index = [
            {s: i for i, s in enumerate(level)} for level in self._simplices
        ]
        self._cobound_cache: dict[int, IntMatrix] = {}
        self._cohom_cache: dict = {}
        self._components = None

    def simplices(self, q: int) -> tuple:
        if 0 <= q <= self.dim:
            return self._simplices[q]
        return ()

    def simplex_count(self, q: int) -> int:
        return len(self.simplices(q))

    def index_of(self, simplex) -> int:
        simplex = tuple(simplex)
        q = len(simplex) - 1
        if q < 0 or q > self.dim:
            raise KeyError(simplex)
        return self._index[q][simplex]

    def contains(self, simplex) -> bool:
        simplex = tuple(simplex)
        q = len(simplex) - 1
        return 0 <= q <= self.dim and simplex in self._index[q]

    def euler_characteristic(self) -> int:
        return sum((-1) ** q * self.simplex_count(q) for q in range(self.dim + 1))

    def components(self) -> tuple:
        """Connected components as sorted vertex tuples, ordered by least vertex."""
        if self._components is None:
            parent = list(range(self.vertex_count))

            def find(x):
                while parent[x] != x:
                    parent[x] = parent[parent[x]]
                    x = parent[x]
                return x

            for a, b in self.simplices(1):
                ra, rb = find(a), find(b)
                if ra != rb:
                    parent[max(ra, rb)] = min(ra, rb)
            groups: dict[int, list[int]] = {}
            for v in range(self.vertex_count):
                groups.setdefault(find(v), []).append(v)
            self._components = tuple(tuple(groups[r]) for r in sorted(groups))
        return self._components

    def component_of(self, vertex: int) -> int:
        for i, comp in enumerate(self.components()):
            if vertex in comp:
                return i
        raise KeyError(vertex)

    def __eq__(self, other):
        return (
            isinstance(other, SimplicialComplex)
            and self.vertex_count == other.vertex_count
            and self.maximal_simplices == other.maximal_simplices
        )

    def __hash__(self):
        return hash((self.vertex_count, self.maximal_simplices))

    def __repr__(self):
        return (
            f"SimplicialComplex({self.vertex_count} vertices, dim {self.dim}, "
            f"{len(self.maximal_simplices)} maximal simplices)"
        )

    def to_json_dict(self) -> dict:
        return {
            "vertex_count": self.vertex_count,
            "maximal_simplices": [list(s) for s in self.maximal_simplices],
        }

    @classmethod
    def from_json_dict(cls, data: dict) -> "SimplicialComplex":
        return cls(int(data["vertex_count"]), [tuple(s) for s in data["maximal_simplices"]])


@dataclass(frozen=True)
class Cochain:
    """q-cochain with integer values indexed by the fixed q-simplex order.

    modulus 0 means integer coefficients; otherwise values are reduced to
    [0, modulus).
    """

    complex: SimplicialComplex
    degree: int
    modulus: int
    values: tuple[int, ...]

    def __post_init__(self):
        expected = self.complex.simplex_count(self.degree)
        if len(self.values) != expected:
            raise ValueError(
                f"cochain in degree {self.degree} needs {expected} values, got {len(self.values)}"
            )
        if self.modulus < 0:
            raise ValueError("modulus must be >= 0")
        if self.modulus:
            object.__setattr__(
                self, "values", tuple(v % self.modulus for v in self.values)
            )

    @classmethod
    def zero(cls, complex: SimplicialComplex, degree: int, modulus: int) -> "Cochain":
        return cls(complex, degree, modulus, (0,) * complex.simplex_count(degree))

    def same_context(self, other: "Cochain") -> bool:
        return (
            self.complex == other.complex
            and self.degree == other.degree
            and self.modulus == other.modulus
        )

    def _require_context(self, other: "Cochain"):
        if not self.same_context(other):
            raise ValueError("cochain context mismatch (complex, degree or modulus)")

    def __add__(self, other: "Cochain") -> "Cochain":
        self._require_context(other)
        return Cochain(
            self.complex,
            self.degree,
            self.modulus,
            tuple(a + b for a, b in zip(self.values, other.values)),
        )

    def __sub__(self, other: "Cochain") -> "Cochain":
        self._require_context(other)
        return Cochain(
            self.complex,
            self.degree,
            self.modulus,
            tuple(a - b for a, b in zip(self.values, other.values)),
        )

    def __neg__(self) -> "Cochain":
        return Cochain(self.complex, self.degree, self.modulus, tuple(-a for a in self.values))

    def scale(self, k: int) -> "Cochain":
        return Cochain(self.complex, self.degree, self.modulus, tuple(k * a for a in self.values))

    def is_zero(self) -> bool:
        return all(v == 0 for v in self.values)

    def value_on(self, simplex) -> int:
        return self.values[self.complex.index_of(simplex)]

    def coboundary(self) -> "Cochain":
        x = self.complex
        q = self.degree
        out = []
        for s in x.simplices(q + 1):
            acc = 0
            for i in range(q + 2):
                face = s[:i] + s[i + 1 :]
                v = self.values[x._index[q][face]]
                acc += v if i % 2 == 0 else -v
            out.append(acc)
        return Cochain(x, q + 1, self.modulus, tuple(out))

    def is_cocycle(self) -> bool:
        d = self.coboundary()
        if self.modulus:
            return all(v % self.modulus == 0 for v in d.values)
        return d.is_zero()


@dataclass(frozen=True)
class CohomologyClass:
    """A cochain together with its checked cocycle certificate."""

    cochain: Cochain

    def __post_init__(self):
        if not self.cochain.is_cocycle():
            raise ValueError("representative is not a cocycle")

    @property
    def complex(self) -> SimplicialComplex:
        return self.cochain.complex

    @property
    def degree(self) -> int:
        return self.cochain.degree

    @property
    def modulus(self) -> int:
        return self.cochain.modulus


def coboundary_matrix(x: SimplicialComplex, q: int, n: int = 0) -> IntMatrix:
    """Matrix of delta_q: C^q -> C^{q+1}; entries reduced to [0, n) when n > 0."""
    if q < 0 or q > x.dim:
        raise ValueError(f"degree {q} out of range for complex of dimension {x.dim}")
    key = q
    if key not in x._cobound_cache:
        rows = x.simplex_count(q + 1)
        cols = x.simplex_count(q)
        entries = [0] * (rows * cols)
        for r, s in enumerate(x.simplices(q + 1)):
            for i in range(q + 2):
                face = s[:i] + s[i + 1 :]
                c = x._index[q][face]
                entries[r * cols + c] += 1 if i % 2 == 0 else -1
        x._cobound_cache[key] = IntMatrix(rows, cols, tuple(entries))
    m = x._cobound_cache[key]
    if n:
        return IntMatrix(m.rows, m.cols, tuple(v % n for v in m.entries))
    return m


def _coboundary_or_empty(x: SimplicialComplex, q: int) -> IntMatrix:
    """delta_{q}: C^q -> C^{q+1}; degenerate degrees give empty matrices."""
    if q < 0:
        return IntMatrix(x.simplex_count(0), 0, ())
    if q > x.dim:
        return IntMatrix(0, 0, ())
    if q == x.dim:
        return IntMatrix(0, x.simplex_count(q), ())
    return coboundary_matrix(x, q)


def _cohomology_degree_zero(x: SimplicialComplex, n: int):
    comps = x.components()
    basis = []
    for comp in comps:
        vals = [0] * x.vertex_count
        for v in comp:
            vals[v] = 1
        basis.append(CohomologyClass(Cochain(x, 0, n, tuple(vals))))
    if n == 0:
        pres = AbelianGroupPresentation(len(comps), ())
        orders = [0] * len(comps)
    else:
        pres = AbelianGroupPresentation(0, (n,) * len(comps)) if comps else AbelianGroupPresentation.trivial()
        orders = [n] * len(comps)
    return pres, basis, orders


class _SpanModP:
    """Incremental row span over F_p; insert() reports whether the rank grew."""

    def __init__(self, p: int):
        self.p = p
        self.rows: list[tuple[int, list[int]]] = []  # (pivot column, normalized row)

    def insert(self, vec) -> bool:
        p = self.p
        v = [a % p for a in vec]
        for pivot, row in self.rows:
            if v[pivot]:
                f = v[pivot]
                v = [(a - f * b) % p for a, b in zip(v, row)]
        j = next((i for i, a in enumerate(v) if a), None)
        if j is None:
            return False
        inv = pow(v[j], -1, p)
        self.rows.append((j, [(a * inv) % p for a in v]))
        return True


def _cohomology_mod_2(x: SimplicialComplex, q: int):
    m0 = x.simplex_count(q)
    if q < x.dim:
        kernel = f2_kernel(f2_pack_rows(coboundary_matrix(x, q)), m0)
    else:
        kernel = [1 << j for j in range(m0)]
    dprev = _coboundary_or_empty(x, q - 1)
    span = F2Span()
    dprev_t = f2_pack_rows(dprev.transpose())
    for col_bits in dprev_t:
        span.insert(col_bits)
    reps = [bits for bits in kernel if span.insert(bits)]
    basis = [
        CohomologyClass(Cochain(x, q, 2, tuple(f2_unpack(bits, m0)))) for bits in reps
    ]
    h = len(basis)
    pres = AbelianGroupPresentation(0, (2,) * h) if h else AbelianGroupPresentation.trivial()
    return pres, basis, [2] * h


def _cohomology_mod_p(x: SimplicialComplex, q: int, p: int):
    if p == 2:
        return _cohomology_mod_2(x, q)
    m0 = x.simplex_count(q)
    if q < x.dim:
        kernel = kernel_mod_p(coboundary_matrix(x, q).to_rows(), m0, p)
    else:
        kernel = [[1 if i == j else 0 for j in range(m0)] for i in range(m0)]
    dprev = _coboundary_or_empty(x, q - 1)
    span = _SpanModP(p)
    for j in range(dprev.cols):
        span.insert([dprev.at(i, j) for i in range(dprev.rows)])
    reps = [vec for vec in kernel if span.insert(vec)]
    basis = [CohomologyClass(Cochain(x, q, p, tuple(vec))) for vec in reps]
    h = len(basis)
    pres = AbelianGroupPresentation(0, (p,) * h) if h else AbelianGroupPresentation.trivial()
    return pres, basis, [p] * h


def _kernel_lattice(x: SimplicialComplex, q: int, n: int) -> IntMatrix:
    """Columns form a basis of {v : delta_q v = 0 (mod n)} as a lattice in Z^{m_q}."""
    dq = _coboundary_or_empty(x, q)
    m0 = x.simplex_count(q)
    if n == 0:
        stacked = dq
        width = m0
    else:
        stacked = dq.hstack(IntMatrix.diagonal([n] * dq.rows))
        width = m0 + dq.rows
    if stacked.rows == 0:
        return IntMatrix.identity(m0)
    dec = smith_decomposition(stacked)
    rank = dec.rank()
    cols = []
    for j in range(rank, width):
        col = [dec.v.at(i, j) for i in range(width)]
        cols.append(col[:m0])
    if not cols:
        return IntMatrix(m0, 0, ())
    return IntMatrix.from_rows([[c[i] for c in cols] for i in range(m0)])


def _cohomology_integral(x: SimplicialComplex, q: int, n: int):
    """Integral (n = 0) or composite-modulus cohomology via Smith normal form."""
    m0 = x.simplex_count(q)
    kernel = _kernel_lattice(x, q, n)
    k = kernel.cols
    if k == 0:
        return AbelianGroupPresentation.trivial(), [], []
    kdec = smith_decomposition(kernel)
    dprev = _coboundary_or_empty(x, q - 1)

    def in_kernel_coords(vec):
        # solve kernel * w = vec exactly using the cached decomposition
        c = kdec.u.mul_vector(vec)
        w = []
        diag = kdec.diagonal()
        for i in range(kernel.cols):
            d = diag[i] if i < len(diag) else 0
            if d == 0 or c[i] % d:
                raise ArithmeticError("vector not in kernel lattice")
            w.append(c[i] // d)
        for i in range(kernel.cols, kernel.rows):
            if c[i]:
                raise ArithmeticError("vector not in kernel lattice")
        return kdec.v.mul_vector(w)

    relation_cols = []
    for j in range(dprev.cols):
        col = [dprev.at(i, j) for i in range(dprev.rows)]
        relation_cols.append(in_kernel_coords(col))
    if n:
        for i in range(m0):
            vec = [0] * m0
            vec[i] = n
            relation_cols.append(in_kernel_coords(vec))
    if relation_cols:
        w = IntMatrix.from_rows([[col[i] for col in relation_cols] for i in range(k)])
    else:
        w = IntMatrix(k, 0, ())
    wdec = smith_decomposition(w)
    diag = wdec.diagonal()
    rank = sum(1 for d in diag if d)
    factors = []
    gens = []
    orders = []
    for i, d in enumerate(diag):
        if d > 1:
            factors.append(d)
            gens.append(i)
            orders.append(d)
    free_positions = list(range(rank, k))
    pres = AbelianGroupPresentation(len(free_positions), tuple(factors))
    basis = []
    for i in gens + free_positions:
        coords = [wdec.u_inv.at(r, i) for r in range(k)]
        vec = kernel.mul_vector(coords)
        basis.append(CohomologyClass(Cochain(x, q, n, tuple(vec))))
    orders = orders + [0] * len(free_positions)
    return pres, basis, orders


_SPARSE_COHOMOLOGY_THRESHOLD = 200


def _cohomology_integral_sparse(x: SimplicialComplex, q: int, n: int):
    """Sparse-factorization variant of the integral/composite path.

    Same contract as _cohomology_integral; scales to staircase products by
    replaying logged elimination ops instead of carrying dense transforms.
    """
    from .exact_linalg import _cached_oplog_solver, _OpLogSolver

    m0 = x.simplex_count(q)
    dq = _coboundary_or_empty(x, q)
    stack = dq if n == 0 else dq.hstack(IntMatrix.diagonal([n] * dq.rows))
    ksolver = _cached_oplog_solver(stack) if stack.rows else None
    if ksolver is None:
        kvecs = [[1 if i == j else 0 for i in range(m0)] for j in range(m0)]
    else:
        kvecs = [v[:m0] for v in ksolver.kernel_basis()]
    k = len(kvecs)
    if k == 0:
        return AbelianGroupPresentation.trivial(), [], []

    def in_kernel_coords(vec):
        if ksolver is None:
            return list(vec)
        if n == 0:
            lifted = list(vec)
        else:
            image = dq.mul_vector(vec)
            if any(v % n for v in image):
                raise ArithmeticError("vector not in the mod-n kernel lattice")
            lifted = list(vec) + [-(v // n) for v in image]
        coords = ksolver.free_coordinates(lifted)
        if coords is None:
            raise ArithmeticError("vector not in kernel lattice")
        return coords

    dprev = _coboundary_or_empty(x, q - 1)
    relation_cols = []
    for j in range(dprev.cols):
        relation_cols.append(in_kernel_coords([dprev.at(i, j) for i in range(dprev.rows)]))
    if n:
        for i in range(m0):
            vec = [0] * m0
            vec[i] = n
            relation_cols.append(in_kernel_coords(vec))
    if relation_cols:
        w = IntMatrix.from_rows([[col[i] for col in relation_cols] for i in range(k)])
    else:
        w = IntMatrix(k, 0, ())
    wsolver = _OpLogSolver(w)
    pivots = [(row, abs(d)) for row, _, d in wsolver.pivots]
    free_rows = wsolver.zero_rows
    # invariant-factor chain with matched generators: redistribute the prime
    # powers of the pivot values, largest first per prime, then CRT-combine
    prime_slots: dict[int, list[tuple[int, int]]] = {}
    for row, d in pivots:
        if d <= 1:
            continue
        rem, p = d, 2
        while p * p <= rem:
            if rem % p == 0:
                e = 0
                while rem % p == 0:
                    rem //= p
                    e += 1
                prime_slots.setdefault(p, []).append((p**e, row))
            p += 1
        if rem > 1:
            prime_slots.setdefault(rem, []).append((rem, row))
    for p in prime_slots:
        prime_slots[p].sort(reverse=True)
    depth = max((len(v) for v in prime_slots.values()), default=0)
    chain = []
    for t in range(depth):
        factor = 1
        parts = []  # (cyclic order of the pivot, prime power, pivot row)
        for p, slots in prime_slots.items():
            if t < len(slots):
                power, row = slots[t]
                factor *= power
                d_row = next(d for r, d in pivots if r == row)
                parts.append((d_row, power, row))
        chain.append((factor, parts))
    chain.sort(key=lambda fp: fp[0])
    uinv_cache: dict[int, list[int]] = {}

    def uinv(row):
        if row not in uinv_cache:
            uinv_cache[row] = wsolver.u_inverse_column(row)
        return uinv_cache[row]

    gen_coord_vectors = []
    orders = []
    for factor, parts in chain:
        acc = [0] * k
        for d_row, power, row in parts:
            scale = d_row // power
            col = uinv(row)
            for i in range(k):
                acc[i] += scale * col[i]
        gen_coord_vectors.append(acc)
        orders.append(factor)
    for r in free_rows:
        gen_coord_vectors.append(uinv(r))
        orders.append(0)
    pres = AbelianGroupPresentation(len(free_rows), tuple(f for f, _ in chain))
    basis = []
    for coords in gen_coord_vectors:
        vec = [0] * m0
        for j, c in enumerate(coords):
            if c:
                kv = kvecs[j]
                for i in range(m0):
                    vec[i] += c * kv[i]
        basis.append(CohomologyClass(Cochain(x, q, n, tuple(vec))))
    return pres, basis, orders


def cohomology(x: SimplicialComplex, q: int, n: int = 0):
    """H^q(X; Z/n) as (presentation, basis of CohomologyClass).

    Basis classes are listed torsion generators first (matching the
    invariant factors in order) and then free generators; the list order is
    deterministic.  Degrees beyond the dimension give the trivial group.
    """
    if q < 0:
        raise ValueError("degree must be >= 0")
    key = (q, n)
    if key in x._cohom_cache:
        return x._cohom_cache[key][:2]
    if q > x.dim:
        result = (AbelianGroupPresentation.trivial(), [], [])
    elif q == 0:
        result = _cohomology_degree_zero(x, n)
    elif n != 0 and _is_prime(n):
        result = _cohomology_mod_p(x, q, n)
    elif x.simplex_count(q) > _SPARSE_COHOMOLOGY_THRESHOLD:
        result = _cohomology_integral_sparse(x, q, n)
    else:
        result = _cohomology_integral(x, q, n)
    x._cohom_cache[key] = result
    return result[:2]


def generator_orders(x: SimplicialComplex, q: int, n: int = 0) -> list[int]:
    """Orders of the basis classes returned by cohomology(); 0 means infinite."""
    cohomology(x, q, n)
    return list(x._cohom_cache[(q, n)][2])


def is_cohomologous(a: Cochain, b: Cochain) -> bool:
    """True iff a - b is a coboundary over the common modulus."""
    if not a.same_context(b):
        raise ValueError("cochain context mismatch (complex, degree or modulus)")
    if not (a.is_cocycle() and b.is_cocycle()):
        raise ValueError("is_cohomologous needs cocycle inputs")
    diff = a - b
    if diff.is_zero():
        return True
    q = a.degree
    if q == 0:
        if a.modulus:
            return all(v % a.modulus == 0 for v in diff.values)
        return diff.is_zero()
    dprev = _coboundary_or_empty(a.complex, q - 1)
    return solve_mod(dprev, list(diff.values), a.modulus) is not None


def class_coordinates(xc: Cochain, basis, orders) -> list[int] | None:
    """Coordinates of [xc] in the given cohomology basis, or None if outside.

    Coordinates for torsion generators are canonicalized modulo the order.
    """
    if not basis:
        zero = Cochain.zero(xc.complex, xc.degree, xc.modulus)
        return [] if is_cohomologous(xc, zero) else None
    x = xc.complex
    q = xc.degree
    n = xc.modulus
    dprev = _coboundary_or_empty(x, q - 1)
    rep_cols = IntMatrix.from_rows(
        [[cls.cochain.values[i] for cls in basis] for i in range(x.simplex_count(q))]
    )
    system = dprev.hstack(rep_cols)
    sol = solve_mod(system, list(xc.values), n)
    if sol is None:
        return None
    coords = sol[dprev.cols :]
    out = []
    for c, d in zip(coords, orders):
        out.append(c % d if d else c)
    return out


class SimplicialMap:
    """Vertex map inducing a map of ordered simplicial complexes.

    Requires: on every simplex of the source the induced vertex sequence is
    weakly increasing in the target order, and its image (duplicates
    removed) is a simplex of the target.
    """

    def __init__(self, source: SimplicialComplex, target: SimplicialComplex, vertex_map):
        self.source = source
        self.target = target
        self.vertex_map = tuple(vertex_map)
        if len(self.vertex_map) != source.vertex_count:
            raise ValueError("vertex map length must equal source vertex count")
        for s in source.maximal_simplices:
            image = [self.vertex_map[v] for v in s]
            if any(a > b for a, b in zip(image, image[1:])):
                raise ValueError(f"vertex map is not monotone on simplex {s}")
            reduced = tuple(sorted(set(image)))
            if not target.contains(reduced):
                raise ValueError(f"image of simplex {s} is not a simplex of the target")

    def pullback(self, cochain: Cochain) -> Cochain:
        if cochain.complex != self.target:
            raise ValueError("cochain does not live on the target complex")
        q = cochain.degree
        out = []
        for s in self.source.simplices(q):
            image = tuple(self.vertex_map[v] for v in s)
            if any(a >= b for a, b in zip(image, image[1:])):
                out.append(0)
            else:
                out.append(cochain.value_on(image))
        return Cochain(self.source, q, cochain.modulus, tuple(out))
