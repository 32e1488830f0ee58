"""Exact sparse matrices over Q(w_N), graded spaces, braidings and embeddings.

A matrix is stored as a sparse map (row, col) -> integer coefficient vector in
the power basis of Q(w_N), together with one positive common denominator.
Small products are multiplied in pure Python; large ones are dispatched to
scipy sparse integer matmuls (one per pair of coefficient planes), which stay
exact as long as the entries fit in 64-bit integers (guarded).
"""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np
import scipy.sparse as sp

from .cyclotomic import CycScalar, cyclotomic_polynomial, field_degree, power_reduction

_SCIPY_WORK_THRESHOLD = 20_000  # estimated scalar multiplications
_INT64_GUARD = 1 << 62


@functools.cache
def _mul_table(n: int):
    """Reduction vectors for w^(d+e), d, e < deg Phi_n."""
    phi = field_degree(n)
    return tuple(power_reduction(n, m) for m in range(2 * phi - 1))


@functools.cache
def _conj_table(n: int):
    phi = field_degree(n)
    return tuple(power_reduction(n, (n - d) % n) for d in range(phi))


def _coeffs_of(scalar: CycScalar) -> tuple[tuple[int, ...], int]:
    den = math.lcm(*(c.denominator for c in scalar.coeffs))
    return tuple(int(c * den) for c in scalar.coeffs), den


def _mul_vec(n: int, a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    phi = len(a)
    out = [0] * phi
    table = _mul_table(n)
    for d, ad in enumerate(a):
        if not ad:
            continue
        for e, be in enumerate(b):
            if not be:
                continue
            p = ad * be
            if d + e < phi:
                out[d + e] += p
            else:
                for f, r in enumerate(table[d + e]):
                    if r:
                        out[f] += p * r
    return tuple(out)


class Matrix:
    """Dense-interface, sparse-storage matrix over Q(w_N)."""

    __slots__ = ("order", "rows", "cols", "den", "data")

    def __init__(self, order: int, rows: int, cols: int, data=None, den: int = 1):
        if rows < 0 or cols < 0:
            raise ValueError("negative dimensions")
        self.order = order
        self.rows = rows
        self.cols = cols
        self.den = den
        self.data: dict[tuple[int, int], tuple[int, ...]] = data or {}
        self._normalize()

    # -- construction ------------------------------------------------------

    @classmethod
    def zero(cls, order: int, rows: int, cols: int) -> "Matrix":
        return cls(order, rows, cols)

    @classmethod
    def identity(cls, order: int, n: int) -> "Matrix":
        phi = field_degree(order)
        one = tuple([1] + [0] * (phi - 1))
        return cls(order, n, n, {(i, i): one for i in range(n)})

    @classmethod
    def from_scalar_dict(cls, order, rows, cols, entries: dict) -> "Matrix":
        """Build from {(r, c): CycScalar | int | Fraction}."""
        den = 1
        vecs = {}
        for key, v in entries.items():
            if not isinstance(v, CycScalar):
                v = CycScalar.from_rational(order, v)
            if v.is_zero():
                continue
            vec, d = _coeffs_of(v)
            vecs[key] = (vec, d)
            den = math.lcm(den, d)
        data = {
            key: tuple(c * (den // d) for c in vec) for key, (vec, d) in vecs.items()
        }
        return cls(order, rows, cols, data, den)

    @classmethod
    def from_rows(cls, order, rows_of_entries) -> "Matrix":
        rows = len(rows_of_entries)
        cols = len(rows_of_entries[0]) if rows else 0
        entries = {}
        for r, row in enumerate(rows_of_entries):
            if len(row) != cols:
                raise ValueError("ragged rows")
            for c, v in enumerate(row):
                entries[(r, c)] = v
        return cls.from_scalar_dict(order, rows, cols, entries)

    def _normalize(self) -> None:
        self.data = {k: v for k, v in self.data.items() if any(v)}
        if not self.data:
            self.den = 1
            return
        g = self.den
        for vec in self.data.values():
            for c in vec:
                if c:
                    g = math.gcd(g, abs(c))
            if g == 1:
                break
        if g > 1:
            self.den //= g
            self.data = {k: tuple(c // g for c in v) for k, v in self.data.items()}

    # -- entry access ------------------------------------------------------

    def entry(self, r: int, c: int) -> CycScalar:
        vec = self.data.get((r, c))
        if vec is None:
            return CycScalar.zero(self.order)
        return CycScalar(self.order, [Fraction(x, self.den) for x in vec])

    def items(self):
        for (r, c), vec in self.data.items():
            yield r, c, CycScalar(self.order, [Fraction(x, self.den) for x in vec])

    @property
    def nnz(self) -> int:
        return len(self.data)

    def is_zero(self) -> bool:
        return not self.data

    def __eq__(self, other) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        return (
            self.order == other.order
            and (self.rows, self.cols) == (other.rows, other.cols)
            and self.den == other.den
            and self.data == other.data
        )

    def __hash__(self):
        return hash((self.order, self.rows, self.cols, self.den, frozenset(self.data.items())))

    def __repr__(self):
        return f"Matrix(N={self.order}, {self.rows}x{self.cols}, nnz={self.nnz})"

    # -- ring operations ---------------------------------------------------

    def _check_same_order(self, other: "Matrix") -> None:
        if self.order != other.order:
            raise ValueError("scalar order mismatch")

    def __add__(self, other: "Matrix") -> "Matrix":
        self._check_same_order(other)
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("dimension mismatch in addition")
        den = math.lcm(self.den, other.den)
        fa, fb = den // self.den, den // other.den
        data = {k: tuple(c * fa for c in v) for k, v in self.data.items()}
        for k, v in other.data.items():
            if k in data:
                data[k] = tuple(x + c * fb for x, c in zip(data[k], v))
            else:
                data[k] = tuple(c * fb for c in v)
        return Matrix(self.order, self.rows, self.cols, data, den)

    def __neg__(self) -> "Matrix":
        data = {k: tuple(-c for c in v) for k, v in self.data.items()}
        return Matrix(self.order, self.rows, self.cols, data, self.den)

    def __sub__(self, other: "Matrix") -> "Matrix":
        return self + (-other)

    def scale(self, scalar) -> "Matrix":
        if not isinstance(scalar, CycScalar):
            scalar = CycScalar.from_rational(self.order, scalar)
        vec, d = _coeffs_of(scalar)
        data = {k: _mul_vec(self.order, v, vec) for k, v in self.data.items()}
        return Matrix(self.order, self.rows, self.cols, data, self.den * d)

    def __mul__(self, scalar):
        return self.scale(scalar)

    __rmul__ = __mul__

    def __matmul__(self, other: "Matrix") -> "Matrix":
        self._check_same_order(other)
        if self.cols != other.rows:
            raise ValueError("dimension mismatch in product")
        work = self.nnz * (other.nnz / other.rows if other.rows else 0)
        if work > _SCIPY_WORK_THRESHOLD:
            return self._matmul_scipy(other)
        return self._matmul_python(other)

    def _matmul_python(self, other: "Matrix") -> "Matrix":
        n = self.order
        by_row: dict[int, list] = {}
        for (r, c), vec in other.data.items():
            by_row.setdefault(r, []).append((c, vec))
        out: dict[tuple[int, int], list[int]] = {}
        phi = field_degree(n)
        for (r, k), avec in self.data.items():
            for c, bvec in by_row.get(k, ()):
                prod = _mul_vec(n, avec, bvec)
                cur = out.get((r, c))
                if cur is None:
                    out[(r, c)] = list(prod)
                else:
                    for f in range(phi):
                        cur[f] += prod[f]
        data = {k: tuple(v) for k, v in out.items()}
        return Matrix(n, self.rows, other.cols, data, self.den * other.den)

    def _matmul_scipy(self, other: "Matrix") -> "Matrix":
        n = self.order
        phi = field_degree(n)
        a_planes = self._planes()
        b_planes = other._planes()
        self._overflow_guard(other)
        table = _mul_table(n)
        acc = [None] * phi
        for d in range(phi):
            if a_planes[d] is None:
                continue
            for e in range(phi):
                if b_planes[e] is None:
                    continue
                prod = a_planes[d] @ b_planes[e]
                if d + e < phi:
                    acc[d + e] = prod if acc[d + e] is None else acc[d + e] + prod
                else:
                    for f, r in enumerate(table[d + e]):
                        if r:
                            term = prod * r
                            acc[f] = term if acc[f] is None else acc[f] + term
        return Matrix._from_planes(
            n, self.rows, other.cols, acc, self.den * other.den
        )

    def kron(self, other: "Matrix") -> "Matrix":
        """Tensor product in row-major order (left factor is the slow index)."""
        self._check_same_order(other)
        n = self.order
        out = {}
        for (r1, c1), v1 in self.data.items():
            for (r2, c2), v2 in other.data.items():
                out[(r1 * other.rows + r2, c1 * other.cols + c2)] = _mul_vec(n, v1, v2)
        return Matrix(
            n, self.rows * other.rows, self.cols * other.cols, out, self.den * other.den
        )

    def adjoint(self) -> "Matrix":
        n = self.order
        phi = field_degree(n)
        table = _conj_table(n)
        out = {}
        for (r, c), vec in self.data.items():
            conj = [0] * phi
            for d, cd in enumerate(vec):
                if cd:
                    for f, t in enumerate(table[d]):
                        if t:
                            conj[f] += cd * t
            out[(c, r)] = tuple(conj)
        return Matrix(n, self.cols, self.rows, out, self.den)

    def transpose(self) -> "Matrix":
        out = {(c, r): v for (r, c), v in self.data.items()}
        return Matrix(self.order, self.cols, self.rows, out, self.den)

    def conj_entrywise(self) -> "Matrix":
        return self.adjoint().transpose()

    def power(self, k: int) -> "Matrix":
        if self.rows != self.cols:
            raise ValueError("power of a non-square matrix")
        if k < 0:
            raise ValueError("negative matrix power not supported")
        acc = Matrix.identity(self.order, self.rows)
        base = self
        while k:
            if k & 1:
                acc = acc @ base
            base = base @ base if k > 1 else base
            k >>= 1
        return acc

    # -- scipy bridge ------------------------------------------------------

    def _planes(self):
        phi = field_degree(self.order)
        if not self.data:
            return [None] * phi
        keys = list(self.data.keys())
        rows = np.fromiter((k[0] for k in keys), dtype=np.int64, count=len(keys))
        cols = np.fromiter((k[1] for k in keys), dtype=np.int64, count=len(keys))
        planes = []
        for d in range(phi):
            vals = np.fromiter(
                (v[d] for v in self.data.values()), dtype=np.int64, count=len(keys)
            )
            if not vals.any():
                planes.append(None)
            else:
                planes.append(
                    sp.csr_matrix((vals, (rows, cols)), shape=(self.rows, self.cols))
                )
        return planes

    @classmethod
    def _from_planes(cls, order, rows, cols, planes, den) -> "Matrix":
        phi = field_degree(order)
        data: dict[tuple[int, int], list[int]] = {}
        for d, plane in enumerate(planes):
            if plane is None:
                continue
            coo = plane.tocoo()
            for r, c, v in zip(coo.row, coo.col, coo.data):
                key = (int(r), int(c))
                vec = data.get(key)
                if vec is None:
                    vec = [0] * phi
                    data[key] = vec
                vec[d] += int(v)
        return cls(order, rows, cols, {k: tuple(v) for k, v in data.items()}, den)

    def _overflow_guard(self, other: "Matrix") -> None:
        ma = max((abs(c) for v in self.data.values() for c in v), default=0)
        mb = max((abs(c) for v in other.data.values() for c in v), default=0)
        phi = field_degree(self.order)
        bound = ma * mb * self.cols * phi * phi * (self.order + 1)
        if bound >= _INT64_GUARD:
            raise OverflowError(
                "entries too large for the int64 sparse backend; "
                "use smaller inputs or the pure-Python path"
            )

    # -- numeric views -----------------------------------------------------

    def to_complex_sparse(self):
        phi = field_degree(self.order)
        w = np.exp(2j * np.pi / self.order)
        planes = self._planes()
        acc = sp.csr_matrix((self.rows, self.cols), dtype=np.complex128)
        for d in range(phi):
            if planes[d] is not None:
                acc = acc + planes[d].astype(np.complex128) * (w**d)
        return acc / self.den

    def to_numpy(self) -> np.ndarray:
        if self.rows * self.cols > 4_000_000:
            raise MemoryError("matrix too large for a dense view")
        return np.asarray(self.to_complex_sparse().todense())

    def max_abs(self) -> float:
        """Largest entry magnitude, double precision."""
        m = self.to_complex_sparse()
        return float(np.abs(m.data).max()) if m.nnz else 0.0

    def operator_norm(self) -> float:
        """Approximate spectral norm (largest singular value)."""
        if self.is_zero():
            return 0.0
        if max(self.rows, self.cols) <= 512:
            return float(np.linalg.norm(self.to_numpy(), 2))
        from scipy.sparse.linalg import svds

        return float(svds(self.to_complex_sparse(), k=1, return_singular_vectors=False)[0])

    # -- serialization -----------------------------------------------------

    def to_json(self) -> dict:
        entries = [
            [self.entry(r, c).to_json() for c in range(self.cols)]
            for r in range(self.rows)
        ]
        return {"rows": self.rows, "cols": self.cols, "N": self.order, "entries": entries}

    @classmethod
    def from_json(cls, obj: dict) -> "Matrix":
        order = obj["N"]
        rows_of = [
            [CycScalar.from_json(s) for s in row] for row in obj["entries"]
        ]
        if len(rows_of) != obj["rows"] or any(len(r) != obj["cols"] for r in rows_of):
            raise ValueError("entry grid does not match declared shape")
        if not rows_of:
            return cls.zero(order, obj["rows"], obj["cols"])
        return cls.from_rows(order, rows_of)


# -- standard matrices -----------------------------------------------------


def clock_matrix(n: int) -> Matrix:
    """diag(1, w, ..., w^(n-1)); together with the shift it satisfies
    clock @ shift = w * (shift @ clock)."""
    return Matrix.from_scalar_dict(
        n, n, n, {(k, k): CycScalar.root_of_unity(n, k) for k in range(n)}
    )


def shift_matrix(n: int) -> Matrix:
    """Cyclic shift e_k -> e_(k+1 mod n)."""
    return Matrix.from_scalar_dict(n, n, n, {((k + 1) % n, k): 1 for k in range(n)})


def omega_matrix(n: int) -> Matrix:
    """The discrete-Fourier-type matrix with entries w^(-ij)/n."""
    return Matrix.from_scalar_dict(
        n,
        n,
        n,
        {
            (i, j): CycScalar.root_of_unity(n, (-i * j) % n) * Fraction(1, n)
            for i in range(n)
            for j in range(n)
        },
    )


def omega_inverse(n: int) -> Matrix:
    """Exact inverse of omega_matrix(n): entries w^(ij)."""
    return Matrix.from_scalar_dict(
        n,
        n,
        n,
        {(i, j): CycScalar.root_of_unity(n, (i * j) % n) for i in range(n) for j in range(n)},
    )


def mat_is_unitary(m: Matrix, mode: str = "exact", eps: float = 1e-9):
    """Return (is_unitary, residual).

    Exact mode compares A*A and AA* with the identity as exact scalars and
    reports residual 0.0 on success; tolerance mode bounds the max-entry
    residual of both products after numeric evaluation.
    """
    if m.rows != m.cols:
        raise ValueError("unitarity requires a square matrix")
    eye = Matrix.identity(m.order, m.rows)
    r1 = m.adjoint() @ m - eye
    r2 = m @ m.adjoint() - eye
    if mode == "exact":
        ok = r1.is_zero() and r2.is_zero()
        return ok, 0.0 if ok else max(r1.max_abs(), r2.max_abs())
    res = max(r1.max_abs(), r2.max_abs())
    return res < eps, res


# -- graded spaces and operators -------------------------------------------


@dataclass(frozen=True)
class GradedSpace:
    """A finite-dimensional Z_N-graded Hilbert space.

    Each basis vector carries a degree label in {0, ..., N-1}; the implementing
    grading unitary is diag(w^degrees).
    """

    order: int
    degrees: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "degrees", tuple(d % self.order for d in self.degrees))

    @property
    def dim(self) -> int:
        return len(self.degrees)

    def tensor(self, other: "GradedSpace") -> "GradedSpace":
        if self.order != other.order:
            raise ValueError("order mismatch")
        degs = [
            (a + b) % self.order for a in self.degrees for b in other.degrees
        ]
        return GradedSpace(self.order, tuple(degs))

    def grading_unitary(self) -> Matrix:
        return Matrix.from_scalar_dict(
            self.order,
            self.dim,
            self.dim,
            {(k, k): CycScalar.root_of_unity(self.order, d) for k, d in enumerate(self.degrees)},
        )

    def to_json(self) -> dict:
        return {"N": self.order, "degrees": list(self.degrees)}

    @classmethod
    def from_json(cls, obj) -> "GradedSpace":
        return cls(obj["N"], tuple(obj["degrees"]))


@dataclass(frozen=True)
class GradedOperator:
    space: GradedSpace
    mat: Matrix

    def __post_init__(self):
        if self.mat.rows != self.space.dim or self.mat.cols != self.space.dim:
            raise ValueError("matrix does not act on the given space")
        if self.mat.order != self.space.order:
            raise ValueError("scalar order does not match the space")

    def _same_space(self, other: "GradedOperator"):
        if self.space != other.space:
            raise ValueError("operators live on different spaces")

    def __add__(self, other):
        self._same_space(other)
        return GradedOperator(self.space, self.mat + other.mat)

    def __sub__(self, other):
        self._same_space(other)
        return GradedOperator(self.space, self.mat - other.mat)

    def __matmul__(self, other):
        self._same_space(other)
        return GradedOperator(self.space, self.mat @ other.mat)

    def __mul__(self, scalar):
        return GradedOperator(self.space, self.mat.scale(scalar))

    __rmul__ = __mul__

    def adjoint(self):
        return GradedOperator(self.space, self.mat.adjoint())

    def power(self, k: int):
        return GradedOperator(self.space, self.mat.power(k))


def degree_of(op: GradedOperator):
    """Z_N degree of a homogeneous operator, or None if inhomogeneous.

    The zero operator is homogeneous of every degree; we report 0.
    """
    degs = op.space.degrees
    n = op.space.order
    found = None
    for (r, c) in op.mat.data:
        t = (degs[r] - degs[c]) % n
        if found is None:
            found = t
        elif t != found:
            return None
    return 0 if found is None else found


def has_degree(op: GradedOperator, t: int) -> bool:
    """True iff every nonzero entry sits at degree difference t (zero passes)."""
    degs = op.space.degrees
    n = op.space.order
    return all((degs[r] - degs[c]) % n == t % n for (r, c) in op.mat.data)


def braiding(x_space: GradedSpace, y_space: GradedSpace, direction: str = "forward") -> Matrix:
    """Braiding unitary between X (x) Y and Y (x) X.

    forward: X(x)Y -> Y(x)X with phase w^(+l_a l_b);
    backward: Y(x)X -> X(x)Y with phase w^(-l_a l_b).
    """
    if x_space.order != y_space.order:
        raise ValueError("order mismatch")
    n = x_space.order
    dx, dy = x_space.dim, y_space.dim
    entries = {}
    if direction == "forward":
        for a, la in enumerate(x_space.degrees):
            for b, lb in enumerate(y_space.degrees):
                entries[(b * dx + a, a * dy + b)] = CycScalar.root_of_unity(n, la * lb)
        return Matrix.from_scalar_dict(n, dx * dy, dx * dy, entries)
    if direction == "backward":
        for a, la in enumerate(x_space.degrees):
            for b, lb in enumerate(y_space.degrees):
                entries[(a * dy + b, b * dx + a)] = CycScalar.root_of_unity(n, -la * lb)
        return Matrix.from_scalar_dict(n, dx * dy, dx * dy, entries)
    raise ValueError("direction must be 'forward' or 'backward'")


def embed_j1(x: GradedOperator, y_space: GradedSpace) -> GradedOperator:
    """First-leg embedding x -> x (x) id on X (x) Y."""
    target = x.space.tensor(y_space)
    return GradedOperator(target, x.mat.kron(Matrix.identity(x.mat.order, y_space.dim)))


def embed_j2(y: GradedOperator, x_space: GradedSpace) -> GradedOperator:
    """Second-leg embedding y -> c_(Y,X) (y (x) id) c_(X,Y) on X (x) Y.

    Built directly: the braiding phases contract to w^(l_a (l_b - l_b'))
    against the second-leg entry (b', b).
    """
    n = y.space.order
    if x_space.order != n:
        raise ValueError("order mismatch")
    target = x_space.tensor(y.space)
    dy = y.space.dim
    degs_y = y.space.degrees
    out: dict[tuple[int, int], CycScalar] = {}
    for br, bc, v in y.mat.items():
        for a, la in enumerate(x_space.degrees):
            phase = CycScalar.root_of_unity(n, la * (degs_y[bc] - degs_y[br]))
            out[(a * dy + br, a * dy + bc)] = phase * v
    mat = Matrix.from_scalar_dict(n, target.dim, target.dim, out)
    return GradedOperator(target, mat)


# -- rank computations -----------------------------------------------------


def span_dimension(mats, tol: float = 1e-9, exact: bool = False) -> int:
    """Dimension of the linear span of a family of equal-shape matrices.

    Default mode flattens to complex vectors and counts singular values above
    tol; exact mode runs Gaussian elimination over Q(w_N).
    """
    mats = list(mats)
    if not mats:
        return 0
    shape = (mats[0].rows, mats[0].cols)
    if any((m.rows, m.cols) != shape for m in mats):
        raise ValueError("matrices must share a shape")
    if exact:
        vectors = [
            [m.entry(r, c) for r in range(shape[0]) for c in range(shape[1])]
            for m in mats
        ]
        return exact_rank(vectors)
    veclen = shape[0] * shape[1]
    if len(mats) * veclen <= 2_000_000:
        stack = np.stack([m.to_numpy().ravel() for m in mats])
        if not np.any(stack):
            return 0
        s = np.linalg.svd(stack, compute_uv=False)
        return int(np.sum(s > tol))
    # incremental Gram-Schmidt with reorthogonalization, to bound memory
    ortho: list[np.ndarray] = []
    for m in mats:
        vec = m.to_numpy().ravel()
        scale = np.linalg.norm(vec)
        if scale == 0.0:
            continue
        for _ in range(2):
            for q in ortho:
                vec = vec - np.vdot(q, vec) * q
        nrm = np.linalg.norm(vec)
        if nrm > tol * max(1.0, scale):
            ortho.append(vec / nrm)
    return len(ortho)


def exact_rank(vectors: list[list[CycScalar]]) -> int:
    """Row rank over Q(w_N) by fraction-free-ish Gaussian elimination."""
    rows = [list(v) for v in vectors]
    rank = 0
    col_count = len(rows[0]) if rows else 0
    pivot_col = 0
    while rank < len(rows) and pivot_col < col_count:
        pivot = next(
            (i for i in range(rank, len(rows)) if not rows[i][pivot_col].is_zero()), None
        )
        if pivot is None:
            pivot_col += 1
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        inv = rows[rank][pivot_col].inverse()
        rows[rank] = [x * inv for x in rows[rank]]
        for i in range(len(rows)):
            if i != rank and not rows[i][pivot_col].is_zero():
                f = rows[i][pivot_col]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[rank])]
        rank += 1
        pivot_col += 1
    return rank


def exact_inverse(m: Matrix) -> Matrix:
    """Exact inverse of a small square matrix by Gauss-Jordan elimination."""
    if m.rows != m.cols:
        raise ValueError("inverse of a non-square matrix")
    n = m.rows
    a = [[m.entry(r, c) for c in range(n)] for r in range(n)]
    inv = [
        [CycScalar.one(m.order) if r == c else CycScalar.zero(m.order) for c in range(n)]
        for r in range(n)
    ]
    for col in range(n):
        pivot = next((r for r in range(col, n) if not a[r][col].is_zero()), None)
        if pivot is None:
            raise ZeroDivisionError("matrix is singular")
        a[col], a[pivot] = a[pivot], a[col]
        inv[col], inv[pivot] = inv[pivot], inv[col]
        scale = a[col][col].inverse()
        a[col] = [x * scale for x in a[col]]
        inv[col] = [x * scale for x in inv[col]]
        for r in range(n):
            if r != col and not a[r][col].is_zero():
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
                inv[r] = [x - f * y for x, y in zip(inv[r], inv[col])]
    return Matrix.from_rows(m.order, inv)
