"""Builders for concrete graded representations.

Covers magic unitaries and their Fourier twist, the clock/shift realization of
the permutation-family generators, the grading-extended (bosonized)
representation, the N-point space, and the fundamental corepresentation.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .cyclotomic import CycScalar
from .linalg import (
    GradedOperator,
    GradedSpace,
    Matrix,
    clock_matrix,
    exact_inverse,
    mat_is_unitary,
    shift_matrix,
)
from .presentations import (
    GeneratorSymbol,
    RepAssignment,
    boso_sn_relations,
    sn_plus_relations,
    un_plus_relations,
    xn_relations,
)
from .report import VerificationReport


@dataclass
class MagicUnitary:
    """N x N array of d x d blocks; validity is checked by validate_magic."""

    order: int
    block_dim: int
    blocks: list[list[Matrix]]

    def __post_init__(self):
        n, d = self.order, self.block_dim
        if len(self.blocks) != n or any(len(row) != n for row in self.blocks):
            raise ValueError("block grid must be N x N")
        for row in self.blocks:
            for b in row:
                if (b.rows, b.cols) != (d, d) or b.order != n:
                    raise ValueError("every block must be d x d with matching order")

    def block(self, i: int, j: int) -> Matrix:
        return self.blocks[i % self.order][j % self.order]

    def to_json(self) -> dict:
        return {
            "N": self.order,
            "d": self.block_dim,
            "blocks": [[b.to_json() for b in row] for row in self.blocks],
        }

    @classmethod
    def from_json(cls, obj: dict) -> "MagicUnitary":
        return cls(
            obj["N"], obj["d"], [[Matrix.from_json(b) for b in row] for row in obj["blocks"]]
        )

    def __eq__(self, other):
        if not isinstance(other, MagicUnitary):
            return NotImplemented
        return (
            self.order == other.order
            and self.block_dim == other.block_dim
            and self.blocks == other.blocks
        )


@dataclass
class TwistedMatrix:
    """Same shape as MagicUnitary; candidate for the untwisted relation set."""

    order: int
    block_dim: int
    blocks: list[list[Matrix]]

    __post_init__ = MagicUnitary.__post_init__
    block = MagicUnitary.block
    to_json = MagicUnitary.to_json

    @classmethod
    def from_json(cls, obj: dict) -> "TwistedMatrix":
        return cls(
            obj["N"], obj["d"], [[Matrix.from_json(b) for b in row] for row in obj["blocks"]]
        )

    def __eq__(self, other):
        if not isinstance(other, TwistedMatrix):
            return NotImplemented
        return (
            self.order == other.order
            and self.block_dim == other.block_dim
            and self.blocks == other.blocks
        )

    def conj(self) -> "TwistedMatrix":
        return TwistedMatrix(
            self.order,
            self.block_dim,
            [[b.conj_entrywise() for b in row] for row in self.blocks],
        )


def _residual_item(report: VerificationReport, label: str, diff: Matrix, mode: str, eps: float):
    if mode == "exact":
        ok = diff.is_zero()
        report.add(label, 0.0 if ok else diff.max_abs(), ok, exact=True)
    else:
        res = diff.max_abs()
        report.add(label, res, res < eps, exact=False)


def validate_magic(u: MagicUnitary, mode: str = "exact", eps: float = 1e-9) -> VerificationReport:
    """Check the projection and row/column-sum identities of a magic unitary."""
    n, d = u.order, u.block_dim
    report = VerificationReport("magic-unitary", mode=mode, eps=eps)
    eye = Matrix.identity(n, d)
    for i in range(n):
        for j in range(n):
            b = u.block(i, j)
            _residual_item(report, f"idempotent[{i},{j}]", b @ b - b, mode, eps)
            _residual_item(report, f"selfadjoint[{i},{j}]", b.adjoint() - b, mode, eps)
    for j in range(n):
        total = Matrix.zero(n, d, d)
        for i in range(n):
            total = total + u.block(i, j)
        _residual_item(report, f"colsum[{j}]", total - eye, mode, eps)
    for i in range(n):
        total = Matrix.zero(n, d, d)
        for j in range(n):
            total = total + u.block(i, j)
        _residual_item(report, f"rowsum[{i}]", total - eye, mode, eps)
    return report


def magic_to_twisted(u: MagicUnitary) -> TwistedMatrix:
    """Blockwise Fourier twist a_ij = (1/N) sum_{r,s} w^(ir - sj) u_rs."""
    n, d = u.order, u.block_dim
    inv_n = Fraction(1, n)
    blocks = []
    for i in range(n):
        row = []
        for j in range(n):
            acc = Matrix.zero(n, d, d)
            for r in range(n):
                for s in range(n):
                    acc = acc + u.block(r, s).scale(CycScalar.root_of_unity(n, i * r - s * j))
            row.append(acc.scale(inv_n))
        blocks.append(row)
    return TwistedMatrix(n, d, blocks)


def twisted_to_magic(a: TwistedMatrix) -> MagicUnitary:
    """Inverse Fourier twist u_ij = (1/N) sum_{r,s} w^(-ir + sj) a_rs."""
    n, d = a.order, a.block_dim
    inv_n = Fraction(1, n)
    blocks = []
    for i in range(n):
        row = []
        for j in range(n):
            acc = Matrix.zero(n, d, d)
            for r in range(n):
                for s in range(n):
                    acc = acc + a.block(r, s).scale(CycScalar.root_of_unity(n, -i * r + s * j))
            row.append(acc.scale(inv_n))
        blocks.append(row)
    return MagicUnitary(n, d, blocks)


# -- seeds -----------------------------------------------------------------


def identity_magic(n: int) -> MagicUnitary:
    eye, zero = Matrix.identity(n, 1), Matrix.zero(n, 1, 1)
    return MagicUnitary(n, 1, [[eye if i == j else zero for j in range(n)] for i in range(n)])


def permutation_magic(n: int, perm) -> MagicUnitary:
    """Magic unitary of a permutation: u_ij = [i == perm(j)] as 1x1 blocks."""
    perm = list(perm)
    if sorted(perm) != list(range(n)):
        raise ValueError("not a permutation of 0..N-1")
    eye, zero = Matrix.identity(n, 1), Matrix.zero(n, 1, 1)
    return MagicUnitary(
        n, 1, [[eye if i == perm[j] else zero for j in range(n)] for i in range(n)]
    )


def _is_projection(p: Matrix) -> bool:
    return (p @ p - p).is_zero() and (p.adjoint() - p).is_zero()


def paper_magic_unitary(n: int, p: Matrix, q: Matrix) -> MagicUnitary:
    """Two-projection block seed: (p, 1-p; 1-p, p) + (q, 1-q; 1-q, q) down the
    diagonal, identity blocks on the remaining diagonal tail."""
    if n < 4:
        raise ValueError("the block seed needs N >= 4")
    d = max(p.rows, q.rows, 1)

    def pad(m: Matrix) -> Matrix:
        if m.rows == d:
            return m
        out = {(r, c): m.entry(r, c) for r in range(m.rows) for c in range(m.cols)}
        return Matrix.from_scalar_dict(m.order, d, d, out)

    p, q = pad(p), pad(q)
    if not (_is_projection(p) and _is_projection(q)):
        raise ValueError("p and q must be exact projections")
    eye, zero = Matrix.identity(n, d), Matrix.zero(n, d, d)
    blocks = [[zero for _ in range(n)] for _ in range(n)]
    blocks[0][0], blocks[0][1] = p, eye - p
    blocks[1][0], blocks[1][1] = eye - p, p
    blocks[2][2], blocks[2][3] = q, eye - q
    blocks[3][2], blocks[3][3] = eye - q, q
    for k in range(4, n):
        blocks[k][k] = eye
    return MagicUnitary(n, d, blocks)


def default_paper_projections(n: int) -> tuple[Matrix, Matrix]:
    """The standard noncommuting pair: a coordinate projection and a uniform
    rank-one projection, both inside 4x4 blocks."""
    p = Matrix.from_scalar_dict(n, 4, 4, {(0, 0): 1})
    half = Fraction(1, 2)
    q = Matrix.from_scalar_dict(
        n, 4, 4, {(0, 0): half, (0, 1): half, (1, 0): half, (1, 1): half}
    )
    return p, q


def paper_seed(n: int) -> MagicUnitary:
    p, q = default_paper_projections(n)
    return paper_magic_unitary(n, p, q)


def random_projection(order: int, dim: int, rank: int, rng: random.Random) -> Matrix:
    """Exact orthogonal projection onto the column span of a random integer
    matrix: P = B (B*B)^(-1) B*."""
    if not 0 <= rank <= dim:
        raise ValueError("rank out of range")
    if rank == 0:
        return Matrix.zero(order, dim, dim)
    while True:
        b = Matrix.from_scalar_dict(
            order,
            dim,
            rank,
            {(r, c): rng.randint(-3, 3) for r in range(dim) for c in range(rank)},
        )
        gram = b.adjoint() @ b
        try:
            inv = exact_inverse(gram)
        except ZeroDivisionError:
            continue
        return b @ inv @ b.adjoint()


def random_block_magic(n: int, d: int, seed: int) -> MagicUnitary:
    """Block seed with two independent random exact projections."""
    rng = random.Random(seed)
    p = random_projection(n, d, rng.randint(1, max(1, d - 1)), rng)
    q = random_projection(n, d, rng.randint(1, max(1, d - 1)), rng)
    return paper_magic_unitary(n, p, q)


def paper_twisted_closed_form(n: int, p: Matrix, q: Matrix) -> TwistedMatrix:
    """Closed-form Fourier twist of the two-projection block seed:

    a_ij = (1/N)(1 - w^(-j))(1 - w^i)((p - 1) + w^(2(i-j))(q - 1)) + delta_ij.
    """
    if n < 4:
        raise ValueError("needs N >= 4")
    d = max(p.rows, q.rows, 1)
    if p.rows != d or q.rows != d:
        raise ValueError("p and q must share the block dimension")
    eye = Matrix.identity(n, d)
    inv_n = Fraction(1, n)
    pm1, qm1 = p - eye, q - eye
    blocks = []
    for i in range(n):
        row = []
        for j in range(n):
            w = CycScalar.root_of_unity
            factor = (CycScalar.one(n) - w(n, -j)) * (CycScalar.one(n) - w(n, i))
            acc = (pm1 + qm1.scale(w(n, 2 * (i - j)))).scale(factor * inv_n)
            if i == j:
                acc = acc + eye
            row.append(acc)
        blocks.append(row)
    return TwistedMatrix(n, d, blocks)


# -- representation builders -----------------------------------------------


def twisted_rep(a: TwistedMatrix) -> RepAssignment:
    """Representation of the untwisted relation set on the ungraded block space."""
    n, d = a.order, a.block_dim
    space = GradedSpace(n, (0,) * d)
    images = {}
    for i in range(n):
        for j in range(n):
            gen = GeneratorSymbol("a", (i, j), None)
            images[gen] = GradedOperator(space, a.block(i, j))
    return RepAssignment(space, images)


def build_sn_rep(u: MagicUnitary) -> RepAssignment:
    """Clock/shift twist of a magic unitary.

    On C^N (x) C^d with degree k on the k-th first-leg basis vector, set
    q_ij = v1^(-i) v2^(j-i) (x) a_ij where v1 = clock, v2 = shift and
    a = magic_to_twisted(u).  The Weyl relation v1 v2 = w v2 v1 makes the
    phase factors of the permutation relations cancel against the untwisted
    relations satisfied by a.
    """
    n, d = u.order, u.block_dim
    a = magic_to_twisted(u)
    space = GradedSpace(n, tuple(k for k in range(n) for _ in range(d)))
    v1, v2 = clock_matrix(n), shift_matrix(n)
    images = {}
    for i in range(n):
        for j in range(n):
            gen = GeneratorSymbol("q", (i, j), (j - i) % n)
            first = v1.power((n - i) % n) @ v2.power((j - i) % n)
            images[gen] = GradedOperator(space, first.kron(a.block(i, j)))
    return RepAssignment(space, images)


def build_un_rep_from_sn(rep: RepAssignment) -> RepAssignment:
    """Quotient-theorem assignment u_ij := q_ij."""
    images = {}
    for gen, op in rep.images.items():
        if gen.name != "q":
            continue
        images[GeneratorSymbol("u", gen.indices, gen.degree)] = op
    return RepAssignment(rep.space, images)


def build_boso_rep(base: RepAssignment, gen_name: str = "q") -> RepAssignment:
    """Adjoin the grading unitary.

    On C^N (x) L: Z = shift (x) I_L and G_ij = clock^(i-j) (x) pi(g_ij); the
    shift leg carries degree k on basis vector k, so Z is homogeneous of
    degree 1, and Z G_ij = w^(j-i) G_ij Z holds exactly.
    """
    n = base.space.order
    first = GradedSpace(n, tuple(range(n)))
    space = first.tensor(base.space)
    eye_l = Matrix.identity(n, base.space.dim)
    clock, shift = clock_matrix(n), shift_matrix(n)
    images = {GeneratorSymbol("z", (), 1 % n): GradedOperator(space, shift.kron(eye_l))}
    for gen, op in base.images.items():
        if gen.name != gen_name:
            continue
        i, j = gen.indices
        new_gen = GeneratorSymbol(gen_name, (i, j), (j - i) % n)
        images[new_gen] = GradedOperator(space, clock.power((i - j) % n).kron(op.mat))
    return RepAssignment(space, images)


def fundamental_rep(boso: RepAssignment) -> dict[tuple[int, int], GradedOperator]:
    """Fundamental corepresentation t_ij = Z^i Q_ij over the extended algebra."""
    n = boso.space.order
    z = boso.image(GeneratorSymbol("z", (), 1 % n))
    t = {}
    for i in range(n):
        zi = z.power(i)
        for j in range(n):
            q = boso.image(GeneratorSymbol("q", (i, j), (j - i) % n))
            t[(i, j)] = zi @ q
    return t


def fundamental_unitarity(boso: RepAssignment, mode: str = "exact", eps: float = 1e-9) -> VerificationReport:
    """Unitarity of t as a block matrix and of the direct sum z + t."""
    n = boso.space.order
    dim = boso.space.dim
    t = fundamental_rep(boso)
    report = VerificationReport("fundamental-rep", mode=mode, eps=eps)
    eye = Matrix.identity(n, dim)
    zero = Matrix.zero(n, dim, dim)
    for i in range(n):
        for j in range(n):
            left = zero
            right = zero
            for k in range(n):
                left = left + t[(k, i)].mat.adjoint() @ t[(k, j)].mat
                right = right + t[(i, k)].mat @ t[(j, k)].mat.adjoint()
            target = eye if i == j else zero
            _residual_item(report, f"t-adj-t[{i},{j}]", left - target, mode, eps)
            _residual_item(report, f"t-t-adj[{i},{j}]", right - target, mode, eps)
    z = boso.image(GeneratorSymbol("z", (), 1 % n))
    big = {}
    for r, c, v in z.mat.items():
        big[(r, c)] = v
    for (i, j), op in t.items():
        for r, c, v in op.mat.items():
            big[((1 + i) * dim + r, (1 + j) * dim + c)] = v
    block = Matrix.from_scalar_dict(n, (1 + n) * dim, (1 + n) * dim, big)
    ok, res = mat_is_unitary(block, mode=mode, eps=eps)
    report.add("z-plus-t-unitary", res, ok, exact=(mode == "exact"))
    return report


def build_xn_rep(n: int) -> RepAssignment:
    """The N-point space in its Fourier eigenbasis: P_j = (1/N) shift^j on C^N
    with degree s on basis vector s."""
    if n < 2:
        raise ValueError("order must be at least 2")
    space = GradedSpace(n, tuple(range(n)))
    s = shift_matrix(n)
    images = {}
    for j in range(n):
        gen = GeneratorSymbol("P", (j,), j)
        images[gen] = GradedOperator(space, s.power(j).scale(Fraction(1, n)))
    return RepAssignment(space, images)


def point_projections(xn: RepAssignment) -> list[Matrix]:
    """Recover the point projections p_i = sum_j w^(-ij) P_j."""
    n = xn.space.order
    out = []
    for i in range(n):
        acc = Matrix.zero(n, xn.space.dim, xn.space.dim)
        for j in range(n):
            pj = xn.image(GeneratorSymbol("P", (j,), j)).mat
            acc = acc + pj.scale(CycScalar.root_of_unity(n, -i * j))
        out.append(acc)
    return out


def check_sn_rep(rep: RepAssignment, mode: str = "exact", eps: float = 1e-9) -> VerificationReport:
    return _checked(sn_plus_relations(rep.space.order), rep, "sn-plus", mode, eps)


def check_un_rep(rep: RepAssignment, mode: str = "exact", eps: float = 1e-9) -> VerificationReport:
    return _checked(un_plus_relations(rep.space.order), rep, "un-plus", mode, eps)


def check_boso_rep(rep: RepAssignment, mode: str = "exact", eps: float = 1e-9) -> VerificationReport:
    return _checked(boso_sn_relations(rep.space.order), rep, "boso-sn", mode, eps)


def check_xn_rep(rep: RepAssignment, mode: str = "exact", eps: float = 1e-9) -> VerificationReport:
    return _checked(xn_relations(rep.space.order), rep, "xn", mode, eps)


def _checked(pres, rep, subject, mode, eps):
    from .presentations import check_presentation

    report = check_presentation(pres, rep, mode=mode, eps=eps)
    report.subject = subject
    return report
