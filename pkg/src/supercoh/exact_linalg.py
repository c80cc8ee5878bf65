"""Exact linear algebra over Z and Z/n.

Everything here is arbitrary-precision: Smith normal form with unimodular
transforms, linear system solving modulo n (n = 0 means "over Z"), and
cokernel presentations of finitely generated abelian groups.  All functions
are pure and deterministic; repeated solves against the same matrix reuse a
cached factorization.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import gcd


@dataclass(frozen=True)
class IntMatrix:
    """Dense integer matrix, row-major entries."""

    rows: int
    cols: int
    entries: tuple[int, ...]

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise ValueError("negative dimensions")
        if len(self.entries) != self.rows * self.cols:
            raise ValueError("entry count does not match rows*cols")

    def __hash__(self):
        # memoized: large matrices are used as cache keys for factorizations
        cached = self.__dict__.get("_hash")
        if cached is None:
            cached = hash((self.rows, self.cols, self.entries))
            object.__setattr__(self, "_hash", cached)
        return cached

    @classmethod
    def from_rows(cls, data) -> "IntMatrix":
        data = [list(row) for row in data]
        rows = len(data)
        cols = len(data[0]) if rows else 0
        if any(len(row) != cols for row in data):
            raise ValueError("ragged rows")
        return cls(rows, cols, tuple(x for row in data for x in row))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "IntMatrix":
        return cls(rows, cols, (0,) * (rows * cols))

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls(n, n, tuple(1 if i == j else 0 for i in range(n) for j in range(n)))

    @classmethod
    def diagonal(cls, diag, rows=None, cols=None) -> "IntMatrix":
        diag = list(diag)
        rows = len(diag) if rows is None else rows
        cols = len(diag) if cols is None else cols
        m = [[0] * cols for _ in range(rows)]
        for i, d in enumerate(diag):
            m[i][i] = d
        return cls.from_rows(m) if rows else cls(rows, cols, ())

    def at(self, i: int, j: int) -> int:
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple[int, ...]:
        return self.entries[i * self.cols : (i + 1) * self.cols]

    def to_rows(self) -> list[list[int]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def transpose(self) -> "IntMatrix":
        return IntMatrix(
            self.cols,
            self.rows,
            tuple(self.at(i, j) for j in range(self.cols) for i in range(self.rows)),
        )

    def mul(self, other: "IntMatrix") -> "IntMatrix":
        if self.cols != other.rows:
            raise ValueError("dimension mismatch in matrix product")
        out = []
        orows = other.to_rows()
        for i in range(self.rows):
            ri = self.row(i)
            acc = [0] * other.cols
            for k, a in enumerate(ri):
                if a:
                    rk = orows[k]
                    for j in range(other.cols):
                        acc[j] += a * rk[j]
            out.append(acc)
        if not out:
            return IntMatrix(0, other.cols, ())
        return IntMatrix.from_rows(out)

    def mul_vector(self, vec) -> list[int]:
        vec = list(vec)
        if len(vec) != self.cols:
            raise ValueError("dimension mismatch in matrix-vector product")
        return [sum(a * x for a, x in zip(self.row(i), vec) if a) for i in range(self.rows)]

    def hstack(self, other: "IntMatrix") -> "IntMatrix":
        if self.rows != other.rows:
            raise ValueError("row count mismatch in hstack")
        data = []
        for i in range(self.rows):
            data.append(list(self.row(i)) + list(other.row(i)))
        if not data:
            return IntMatrix(0, self.cols + other.cols, ())
        return IntMatrix.from_rows(data)

    def is_zero(self) -> bool:
        return all(x == 0 for x in self.entries)


@dataclass(frozen=True)
class AbelianGroupPresentation:
    """Invariant-factor presentation Z^free_rank + Z/d1 + ... with d1 | d2 | ...

    Factors of 1 are excluded.  The trivial group is (0, ()).
    """

    free_rank: int
    invariant_factors: tuple[int, ...]

    def __post_init__(self):
        if self.free_rank < 0:
            raise ValueError("negative free rank")
        for d in self.invariant_factors:
            if d < 2:
                raise ValueError("invariant factors must be >= 2")
        for a, b in zip(self.invariant_factors, self.invariant_factors[1:]):
            if b % a:
                raise ValueError("invariant factors must form a divisibility chain")

    @classmethod
    def trivial(cls) -> "AbelianGroupPresentation":
        return cls(0, ())

    def is_trivial(self) -> bool:
        return self.free_rank == 0 and not self.invariant_factors

    def order(self):
        """Group order, or None when infinite."""
        if self.free_rank:
            return None
        n = 1
        for d in self.invariant_factors:
            n *= d
        return n

    def __str__(self) -> str:
        parts = []
        if self.free_rank == 1:
            parts.append("Z")
        elif self.free_rank > 1:
            parts.append(f"Z^{self.free_rank}")
        parts.extend(f"Z/{d}" for d in reversed(self.invariant_factors))
        return " ⊕ ".join(parts) if parts else "0"


def normalize_factors(factors) -> tuple[int, ...]:
    """Rewrite an arbitrary list of cyclic orders as an invariant-factor chain."""
    primes: dict[int, list[int]] = {}
    for d in factors:
        if d < 2:
            continue
        n, p = d, 2
        while p * p <= n:
            if n % p == 0:
                e = 0
                while n % p == 0:
                    n //= p
                    e += 1
                primes.setdefault(p, []).append(p**e)
            p += 1
        if n > 1:
            primes.setdefault(n, []).append(n)
    for p in primes:
        primes[p].sort(reverse=True)
    depth = max((len(v) for v in primes.values()), default=0)
    chain = []
    for k in range(depth):
        d = 1
        for p, powers in primes.items():
            if k < len(powers):
                d *= powers[k]
        chain.append(d)
    return tuple(sorted(chain))


def direct_sum(*groups: AbelianGroupPresentation) -> AbelianGroupPresentation:
    free = sum(g.free_rank for g in groups)
    factors = [d for g in groups for d in g.invariant_factors]
    return AbelianGroupPresentation(free, normalize_factors(factors))


# ---------------------------------------------------------------------------
# Smith normal form


@dataclass(frozen=True)
class SmithDecomposition:
    """U*M*V = D with U, V unimodular and D diagonal with d1 | d2 | ...

    u_inv and v_inv are exact integer inverses of U and V.
    """

    u: IntMatrix
    d: IntMatrix
    v: IntMatrix
    u_inv: IntMatrix
    v_inv: IntMatrix

    def diagonal(self) -> list[int]:
        return [self.d.at(i, i) for i in range(min(self.d.rows, self.d.cols))]

    def rank(self) -> int:
        return sum(1 for x in self.diagonal() if x)


def _smith_inner(m: IntMatrix):
    rows, cols = m.rows, m.cols
    a = m.to_rows()
    u = IntMatrix.identity(rows).to_rows()
    uinv = IntMatrix.identity(rows).to_rows()
    v = IntMatrix.identity(cols).to_rows()
    vinv = IntMatrix.identity(cols).to_rows()

    def row_swap(i, j):
        a[i], a[j] = a[j], a[i]
        u[i], u[j] = u[j], u[i]
        for r in uinv:
            r[i], r[j] = r[j], r[i]

    def row_neg(i):
        a[i] = [-x for x in a[i]]
        u[i] = [-x for x in u[i]]
        for r in uinv:
            r[i] = -r[i]

    def row_axpy(src, dst, q):
        # row_dst -= q * row_src
        if not q:
            return
        a[dst] = [x - q * y for x, y in zip(a[dst], a[src])]
        u[dst] = [x - q * y for x, y in zip(u[dst], u[src])]
        for r in uinv:
            r[src] += q * r[dst]

    def col_swap(i, j):
        for r in a:
            r[i], r[j] = r[j], r[i]
        for r in v:
            r[i], r[j] = r[j], r[i]
        vinv[i], vinv[j] = vinv[j], vinv[i]

    def col_neg(j):
        for r in a:
            r[j] = -r[j]
        for r in v:
            r[j] = -r[j]
        vinv[j] = [-x for x in vinv[j]]

    def col_axpy(src, dst, q):
        # col_dst -= q * col_src
        if not q:
            return
        for r in a:
            r[dst] -= q * r[src]
        for r in v:
            r[dst] -= q * r[src]
        vinv[src] = [x + q * y for x, y in zip(vinv[src], vinv[dst])]

    def find_pivot(t):
        best = None
        pos = None
        for i in range(t, rows):
            ai = a[i]
            for j in range(t, cols):
                x = abs(ai[j])
                if x and (best is None or x < best):
                    best, pos = x, (i, j)
        return pos

    t = 0
    limit = min(rows, cols)
    while t < limit:
        pos = find_pivot(t)
        if pos is None:
            break
        i, j = pos
        if i != t:
            row_swap(t, i)
        if j != t:
            col_swap(t, j)
        while True:
            # clear column t with Euclidean steps
            dirty = False
            for i in range(rows):
                if i != t and a[i][t]:
                    q = a[i][t] // a[t][t]
                    row_axpy(t, i, q)
                    if a[i][t]:
                        row_swap(t, i)
                        dirty = True
            if dirty:
                continue
            for j in range(cols):
                if j != t and a[t][j]:
                    q = a[t][j] // a[t][t]
                    col_axpy(t, j, q)
                    if a[t][j]:
                        col_swap(t, j)
                        dirty = True
            if dirty:
                continue
            # pivot must divide the rest of the block
            offender = None
            for i in range(t + 1, rows):
                ai = a[i]
                for j in range(t + 1, cols):
                    if ai[j] % a[t][t]:
                        offender = i
                        break
                if offender is not None:
                    break
            if offender is None:
                break
            row_axpy(offender, t, -1)
        if a[t][t] < 0:
            row_neg(t)
        t += 1

    # enforce the divisibility chain on the diagonal
    r = t
    for i in range(r):
        for j in range(i + 1, r):
            if a[j][j] % a[i][i] == 0:
                continue
            col_axpy(j, i, -1)  # col_i += col_j, puts a[j][j] into column i
            while a[j][i]:
                q = a[i][i] // a[j][i]
                row_axpy(j, i, q)
                if a[i][i]:
                    row_swap(i, j)
                else:
                    break
            if a[i][i] == 0:
                row_swap(i, j)
            q = a[i][j] // a[i][i]
            col_axpy(i, j, q)
            if a[i][i] < 0:
                row_neg(i)
            if a[j][j] < 0:
                row_neg(j)
    return a, u, v, uinv, vinv


def smith_decomposition(m: IntMatrix) -> SmithDecomposition:
    a, u, v, uinv, vinv = _smith_inner(m)

    def pack(data, rows, cols):
        if rows == 0 or cols == 0:
            return IntMatrix(rows, cols, ())
        return IntMatrix.from_rows(data)

    return SmithDecomposition(
        u=pack(u, m.rows, m.rows),
        d=pack(a, m.rows, m.cols),
        v=pack(v, m.cols, m.cols),
        u_inv=pack(uinv, m.rows, m.rows),
        v_inv=pack(vinv, m.cols, m.cols),
    )


def smith_normal_form(m: IntMatrix) -> tuple[IntMatrix, IntMatrix, IntMatrix]:
    """Return (U, D, V) with U*M*V = D in Smith normal form.

    Pivoting is deterministic: smallest nonzero absolute value, lowest
    row-major index on ties.
    """
    dec = smith_decomposition(m)
    return dec.u, dec.d, dec.v


# ---------------------------------------------------------------------------
# Cached factorizations for repeated solves

_MAX_CACHED_SOLVERS = 128


class _OpLogSolver:
    """Sparse integer diagonalization of A with replayable row/column op logs.

    Solves A*x = b (mod n) for any n >= 0 after a single factorization.  Row
    ops replay on the right-hand side in O(1) per op; column ops replay on
    the solution vector.
    """

    def __init__(self, m: IntMatrix):
        self.nrows = m.rows
        self.ncols = m.cols
        rows: list[dict[int, int]] = [dict() for _ in range(m.rows)]
        col_index: list[set[int]] = [set() for _ in range(m.cols)]
        for i in range(m.rows):
            base = i * m.cols
            for j in range(m.cols):
                x = m.entries[base + j]
                if x:
                    rows[i][j] = x
                    col_index[j].add(i)
        self.row_ops: list[tuple] = []
        self.col_ops: list[tuple] = []
        self._factor(rows, col_index)

    def _factor(self, rows, col_index):
        row_ops, col_ops = self.row_ops, self.col_ops
        active_rows = set(range(self.nrows))
        active_cols = set(range(self.ncols))
        pivots: list[tuple[int, int, int]] = []

        def row_axpy(src, dst, q):
            if not q:
                return
            rs, rd = rows[src], rows[dst]
            for j, x in rs.items():
                new = rd.get(j, 0) - q * x
                if new:
                    rd[j] = new
                    col_index[j].add(dst)
                else:
                    rd.pop(j, None)
                    col_index[j].discard(dst)
            row_ops.append(("axpy", src, dst, q))

        def row_neg(i):
            rows[i] = {j: -x for j, x in rows[i].items()}
            row_ops.append(("neg", i, 0, 0))

        def col_axpy(src, dst, q):
            if not q:
                return
            for i in list(col_index[src]):
                x = rows[i][src]
                new = rows[i].get(dst, 0) - q * x
                if new:
                    rows[i][dst] = new
                    col_index[dst].add(i)
                else:
                    rows[i].pop(dst, None)
                    col_index[dst].discard(i)
            col_ops.append((src, dst, q))

        while True:
            best = None
            pivot = None
            for i in sorted(active_rows):
                for j, x in sorted(rows[i].items()):
                    if j not in active_cols:
                        continue
                    key = (abs(x), (len(col_index[j]) - 1) * (len(rows[i]) - 1), i, j)
                    if best is None or key < best:
                        best, pivot = key, (i, j)
                if best is not None and best[0] == 1 and best[1] == 0:
                    break
            if pivot is None:
                break
            pi, pj = pivot
            while True:
                if rows[pi][pj] < 0:
                    row_neg(pi)
                p = rows[pi][pj]
                for i in sorted(i for i in col_index[pj] if i != pi):
                    row_axpy(pi, i, rows[i][pj] // p)
                rem = [i for i in col_index[pj] if i != pi]
                if rem:
                    # remainders are in [1, p); retarget the pivot row
                    pi = min(rem, key=lambda i: (rows[i][pj], i))
                    continue
                for j in sorted(j for j in rows[pi] if j != pj):
                    col_axpy(pj, j, rows[pi][j] // p)
                rem_cols = [j for j in rows[pi] if j != pj]
                if rem_cols:
                    # likewise nonzero remainders strictly below p
                    pj = min(rem_cols, key=lambda j: (rows[pi][j], j))
                    continue
                break
            pivots.append((pi, pj, rows[pi][pj]))
            active_rows.discard(pi)
            active_cols.discard(pj)

        self.pivots = pivots
        self.zero_rows = sorted(active_rows)
        self.free_cols = sorted(active_cols)

    def solve(self, b, n: int):
        if len(b) != self.nrows:
            raise ValueError("dimension mismatch between matrix and vector")
        v = list(b)
        for op in self.row_ops:
            if op[0] == "axpy":
                _, src, dst, q = op
                v[dst] -= q * v[src]
            else:
                v[op[1]] = -v[op[1]]
        y = [0] * self.ncols
        for i, j, d in self.pivots:
            yj = _solve_scalar(d, v[i], n)
            if yj is None:
                return None
            y[j] = yj
        for i in self.zero_rows:
            if (v[i] if n == 0 else v[i] % n) != 0:
                return None
        for src, dst, q in reversed(self.col_ops):
            # col op was col_dst -= q*col_src; acting on coordinates:
            y[src] -= q * y[dst]
        if n:
            y = [x % n for x in y]
        return y

    def kernel_vector(self, j: int) -> list[int]:
        """Column V e_j of the diagonalization; a kernel vector for free j."""
        v = [0] * self.ncols
        v[j] = 1
        for src, dst, q in reversed(self.col_ops):
            v[src] -= q * v[dst]
        return v

    def kernel_basis(self) -> list[list[int]]:
        """Basis of ker(A) over Z, one vector per free column."""
        return [self.kernel_vector(j) for j in self.free_cols]

    def free_coordinates(self, vec) -> list[int] | None:
        """Coordinates of vec in the kernel basis; None when vec is not in ker(A).

        Computes V^{-1} vec by replaying inverse column ops and checks that
        every pivot-column coordinate vanishes.
        """
        v = list(vec)
        for src, dst, q in self.col_ops:
            v[src] += q * v[dst]
        for _, j, _ in self.pivots:
            if v[j]:
                return None
        return [v[j] for j in self.free_cols]

    def u_inverse_column(self, i: int) -> list[int]:
        """Column U^{-1} e_i of the diagonalization."""
        v = [0] * self.nrows
        v[i] = 1
        for op in reversed(self.row_ops):
            if op[0] == "axpy":
                _, src, dst, q = op
                v[dst] += q * v[src]
            else:
                v[op[1]] = -v[op[1]]
        return v


def _solve_scalar(d: int, c: int, n: int):
    """Smallest nonnegative y with d*y = c (mod n); None when unsolvable."""
    if n == 0:
        if d == 0:
            return 0 if c == 0 else None
        if c % d:
            return None
        return c // d
    d %= n
    c %= n
    if d == 0:
        return 0 if c == 0 else None
    g = gcd(d, n)
    if c % g:
        return None
    nn = n // g
    return (c // g) * pow(d // g, -1, nn) % nn


class _F2Solver:
    """Row echelon of [A | I] over F2 with bitmask rows, for repeated solves."""

    def __init__(self, m: IntMatrix):
        self.nrows = m.rows
        self.ncols = m.cols
        rows = []
        for i in range(m.rows):
            bits = 0
            base = i * m.cols
            for j in range(m.cols):
                if m.entries[base + j] & 1:
                    bits |= 1 << j
            rows.append((bits, 1 << i))
        echelon: list[tuple[int, int, int]] = []  # (pivot_col, a_bits, u_bits)
        residue: list[tuple[int, int]] = []
        for a_bits, u_bits in rows:
            for pcol, pa, pu in echelon:
                if (a_bits >> pcol) & 1:
                    a_bits ^= pa
                    u_bits ^= pu
            if a_bits:
                pcol = (a_bits & -a_bits).bit_length() - 1
                echelon.append((pcol, a_bits, u_bits))
            else:
                residue.append((a_bits, u_bits))
        self.echelon = echelon
        self.residue = residue

    def solve(self, b):
        b_bits = 0
        for i, x in enumerate(b):
            if x & 1:
                b_bits |= 1 << i
        for _, u_bits in self.residue:
            if (u_bits & b_bits).bit_count() & 1:
                return None
        x_bits = 0
        for pcol, a_bits, u_bits in reversed(self.echelon):
            rhs = (u_bits & b_bits).bit_count() & 1
            rhs ^= ((a_bits & x_bits).bit_count() & 1)
            if rhs:
                x_bits |= 1 << pcol
        out = [0] * self.ncols
        while x_bits:
            j = (x_bits & -x_bits).bit_length() - 1
            out[j] = 1
            x_bits &= x_bits - 1
        return out


@lru_cache(maxsize=_MAX_CACHED_SOLVERS)
def _cached_oplog_solver(m: IntMatrix) -> _OpLogSolver:
    return _OpLogSolver(m)


@lru_cache(maxsize=_MAX_CACHED_SOLVERS)
def _cached_f2_solver(m: IntMatrix) -> _F2Solver:
    return _F2Solver(m)


def solve_mod(a: IntMatrix, b, n: int):
    """One solution x of A*x = b (mod n), or None; n = 0 solves over Z.

    The returned solution verifies exactly; which solution is returned is
    deterministic for fixed inputs.
    """
    b = list(b)
    if len(b) != a.rows:
        raise ValueError("dimension mismatch between matrix and vector")
    if n < 0:
        raise ValueError("modulus must be >= 0")
    if n == 1:
        return [0] * a.cols
    if n == 2:
        return _cached_f2_solver(a).solve(b)
    return _cached_oplog_solver(a).solve(b, n)


def cokernel(a: IntMatrix, n: int) -> AbelianGroupPresentation:
    """Presentation of (Z/n)^rows / column-span(A); n = 0 gives Z^rows / span."""
    if n < 0:
        raise ValueError("modulus must be >= 0")
    m = a if n == 0 else a.hstack(IntMatrix.diagonal([n] * a.rows))
    if a.rows == 0:
        return AbelianGroupPresentation.trivial()
    dec = smith_decomposition(m)
    diag = dec.diagonal()
    factors = tuple(d for d in diag if d > 1)
    free = a.rows - sum(1 for d in diag if d)
    return AbelianGroupPresentation(free, factors)


# ---------------------------------------------------------------------------
# F_2 bitset toolkit (rows packed into Python ints, bit j = column j)


def f2_pack_rows(m: IntMatrix) -> list[int]:
    packed = []
    for i in range(m.rows):
        bits = 0
        base = i * m.cols
        for j in range(m.cols):
            if m.entries[base + j] & 1:
                bits |= 1 << j
        packed.append(bits)
    return packed


def f2_rref(rows: list[int]) -> tuple[list[int], list[int]]:
    """Reduced echelon rows (nonzero only) and their pivot columns, ascending."""
    echelon: list[tuple[int, int]] = []
    for row in rows:
        for pcol, prow in echelon:
            if (row >> pcol) & 1:
                row ^= prow
        if row:
            pcol = (row & -row).bit_length() - 1
            for i, (c, r) in enumerate(echelon):
                if (r >> pcol) & 1:
                    echelon[i] = (c, r ^ row)
            echelon.append((pcol, row))
    echelon.sort()
    return [r for _, r in echelon], [c for c, _ in echelon]


def f2_kernel(rows: list[int], ncols: int) -> list[int]:
    """Null-space basis over F2 as bitmasks, one per free column, ascending."""
    rref, pivots = f2_rref(rows)
    pivot_set = set(pivots)
    basis = []
    for free in range(ncols):
        if free in pivot_set:
            continue
        vec = 1 << free
        for prow, pcol in zip(rref, pivots):
            if (prow >> free) & 1:
                vec |= 1 << pcol
        basis.append(vec)
    return basis


class F2Span:
    """Incremental F2 row span; insert() reports whether the rank grew."""

    def __init__(self):
        self.echelon: list[tuple[int, int]] = []

    def insert(self, row: int) -> bool:
        for pcol, prow in self.echelon:
            if (row >> pcol) & 1:
                row ^= prow
        if not row:
            return False
        self.echelon.append(((row & -row).bit_length() - 1, row))
        return True


def f2_unpack(bits: int, ncols: int) -> list[int]:
    return [(bits >> j) & 1 for j in range(ncols)]


# ---------------------------------------------------------------------------
# F_p elimination toolkit (dense, small fields); used by higher modules


def rref_mod_p(rows: list[list[int]], p: int) -> tuple[list[list[int]], list[int]]:
    """Reduced row echelon form over F_p; returns (rref rows, pivot columns)."""
    rows = [[x % p for x in row] for row in rows]
    ncols = len(rows[0]) if rows else 0
    pivots = []
    r = 0
    for c in range(ncols):
        pr = next((i for i in range(r, len(rows)) if rows[i][c]), None)
        if pr is None:
            continue
        rows[r], rows[pr] = rows[pr], rows[r]
        inv = pow(rows[r][c], -1, p)
        rows[r] = [(x * inv) % p for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [(x - f * y) % p for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows, pivots


def kernel_mod_p(rows: list[list[int]], ncols: int, p: int) -> list[list[int]]:
    """Basis of the null space of the matrix over F_p, in free-column order."""
    rref, pivots = rref_mod_p(rows, p)
    pivot_set = set(pivots)
    basis = []
    for free in range(ncols):
        if free in pivot_set:
            continue
        vec = [0] * ncols
        vec[free] = 1
        for r, c in enumerate(pivots):
            vec[c] = (-rref[r][free]) % p
        basis.append(vec)
    return basis


def solve_mod_p(rows: list[list[int]], b: list[int], p: int):
    """One solution of the system over F_p, or None (free variables = 0)."""
    aug = [row + [bv] for row, bv in zip(rows, b)]
    ncols = len(rows[0]) if rows else 0
    rref, pivots = rref_mod_p(aug, p)
    if ncols in pivots:
        return None
    x = [0] * ncols
    for r, c in enumerate(pivots):
        x[c] = rref[r][ncols]
    return x
