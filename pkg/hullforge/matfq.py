"""
Dense exact linear algebra over a FieldSpec.

MatrixFq is a value type: entries are an immutable int64 array of element
codes, and every operation returns a new matrix. Arithmetic is done on
``galois`` FieldArrays and converted back to codes at the boundary.
"""
import logging
from dataclasses import dataclass
from enum import Enum
from typing import List, Optional, Sequence, Tuple

import galois
import numpy as np

from hullforge.errors import FieldError, ShapeError
from hullforge.gf import Fe, FieldSpec

logger = logging.getLogger(__name__)


class Form(str, Enum):
    """Sesquilinear form used for inner products, duals and hulls."""
    EUCLIDEAN = "euclidean"
    HERMITIAN = "hermitian"


def require_form(spec: FieldSpec, form) -> Form:
    form = Form(form)
    if form is Form.HERMITIAN and not spec.has_conjugation:
        raise FieldError(
            f"hermitian form needs GF(s^2); GF({spec.q}) has odd degree {spec.m}")
    return form


@dataclass(frozen=True, eq=False)
class MatrixFq:
    """Dense rows x cols matrix of element codes bound to a field."""
    spec: FieldSpec
    entries: np.ndarray

    def __post_init__(self):
        arr = np.array(self.entries, dtype=np.int64)
        if arr.ndim != 2:
            raise ShapeError(f"matrix entries must be 2-D, got shape {arr.shape}")
        if arr.size and (arr.min() < 0 or arr.max() >= self.spec.q):
            raise FieldError(f"matrix entries outside [0, {self.spec.q})")
        arr.flags.writeable = False
        object.__setattr__(self, "entries", arr)

    @classmethod
    def from_rows(cls, spec: FieldSpec, rows: Sequence[Sequence[int]],
                  cols: Optional[int] = None) -> "MatrixFq":
        if len(rows) == 0:
            return zeros(spec, 0, cols or 0)
        return cls(spec, np.array([list(r) for r in rows], dtype=np.int64))

    @classmethod
    def from_field_array(cls, spec: FieldSpec, arr: galois.FieldArray) -> "MatrixFq":
        return cls(spec, np.asarray(arr.view(np.ndarray), dtype=np.int64))

    @property
    def rows(self) -> int:
        return self.entries.shape[0]

    @property
    def cols(self) -> int:
        return self.entries.shape[1]

    @property
    def shape(self) -> Tuple[int, int]:
        return self.rows, self.cols

    def field_array(self) -> galois.FieldArray:
        return self.spec.array(self.entries)

    def row(self, i: int) -> Tuple[Fe, ...]:
        return tuple(int(x) for x in self.entries[i])

    def select_rows(self, indices: Sequence[int]) -> "MatrixFq":
        return MatrixFq(self.spec, self.entries[list(indices), :].reshape(len(indices), self.cols))

    def tolist(self) -> List[List[int]]:
        return self.entries.tolist()

    def is_zero(self) -> bool:
        return not self.entries.any()

    def is_diagonal(self) -> bool:
        off = self.entries.copy()
        np.fill_diagonal(off, 0)
        return not off.any()

    def diagonal(self) -> Tuple[Fe, ...]:
        return tuple(int(x) for x in np.diagonal(self.entries))

    def __matmul__(self, other: "MatrixFq") -> "MatrixFq":
        return product(self, other)

    def __eq__(self, other):
        if not isinstance(other, MatrixFq):
            return NotImplemented
        return self.spec == other.spec and np.array_equal(self.entries, other.entries)

    def __hash__(self):
        return hash((self.spec, self.entries.shape, self.entries.tobytes()))

    def __repr__(self):
        return f"MatrixFq(GF({self.spec.q}), {self.tolist()})"


def zeros(spec: FieldSpec, rows: int, cols: int) -> MatrixFq:
    return MatrixFq(spec, np.zeros((rows, cols), dtype=np.int64))


def identity(spec: FieldSpec, n: int) -> MatrixFq:
    return MatrixFq(spec, np.eye(n, dtype=np.int64))


def vstack(*mats: MatrixFq) -> MatrixFq:
    spec = mats[0].spec
    cols = {m.cols for m in mats}
    if len(cols) != 1:
        raise ShapeError(f"cannot stack matrices with column counts {sorted(cols)}")
    return MatrixFq(spec, np.vstack([m.entries for m in mats]))


def hstack(*mats: MatrixFq) -> MatrixFq:
    spec = mats[0].spec
    rows = {m.rows for m in mats}
    if len(rows) != 1:
        raise ShapeError(f"cannot join matrices with row counts {sorted(rows)}")
    return MatrixFq(spec, np.hstack([m.entries for m in mats]))


def diag_matrix(spec: FieldSpec, values: Sequence[Fe]) -> MatrixFq:
    return MatrixFq(spec, np.diag(np.asarray([spec.check(v) for v in values], dtype=np.int64))
                    .reshape(len(values), len(values)))


def _check_same_field(a: MatrixFq, b: MatrixFq) -> None:
    if a.spec != b.spec:
        raise FieldError(f"matrices live over different fields: GF({a.spec.q}) and GF({b.spec.q})")


def _conj(spec: FieldSpec, arr: galois.FieldArray) -> galois.FieldArray:
    return arr ** spec.subfield_order


def rref(M: MatrixFq) -> Tuple[MatrixFq, List[int], int]:
    """Reduced row echelon form, pivot columns and rank.

    The pivot is the topmost nonzero entry of the leftmost unsettled column.
    """
    if M.rows == 0 or M.cols == 0:
        return M, [], 0
    A = M.field_array().copy()
    rows, cols = A.shape
    pivots: List[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.flatnonzero(A[r:, c].view(np.ndarray))
        if nz.size == 0:
            continue
        pr = r + int(nz[0])
        if pr != r:
            A[[r, pr]] = A[[pr, r]]
        A[r] = A[r] / A[r, c]
        factors = A[:, c].copy()
        factors[r] = 0
        A = A - factors.reshape(-1, 1) * A[r].reshape(1, -1)
        pivots.append(c)
        r += 1
    logger.debug(f"rref: rank {r}, pivots {pivots}")
    return MatrixFq.from_field_array(M.spec, A), pivots, r


def rank(M: MatrixFq) -> int:
    return rref(M)[2]


def kernel(M: MatrixFq) -> MatrixFq:
    """Basis of {v : M v^T = 0}, one row per free column of rref(M).

    Each basis row has a 1 in its free slot, zeros in the other free slots.
    """
    R, pivots, r = rref(M)
    pivot_set = set(pivots)
    free = [c for c in range(M.cols) if c not in pivot_set]
    if not free:
        return zeros(M.spec, 0, M.cols)
    GF = M.spec.GF
    basis = GF.Zeros((len(free), M.cols))
    for j, f in enumerate(free):
        basis[j, f] = 1
    if r:
        Rf = R.field_array()[:r, :][:, free]
        basis[:, pivots] = -Rf.T
    return MatrixFq.from_field_array(M.spec, basis)


def product(A: MatrixFq, B: MatrixFq) -> MatrixFq:
    _check_same_field(A, B)
    if A.cols != B.rows:
        raise ShapeError(f"cannot multiply {A.shape} by {B.shape}")
    if A.rows == 0 or B.cols == 0 or A.cols == 0:
        return zeros(A.spec, A.rows, B.cols)
    return MatrixFq.from_field_array(A.spec, A.field_array() @ B.field_array())


def transpose(A: MatrixFq) -> MatrixFq:
    return MatrixFq(A.spec, A.entries.T)


def conjugate(A: MatrixFq) -> MatrixFq:
    """Entrywise x -> x^s on GF(s^2)."""
    require_form(A.spec, Form.HERMITIAN)
    if A.entries.size == 0:
        return A
    return MatrixFq.from_field_array(A.spec, _conj(A.spec, A.field_array()))


def conj_transpose(A: MatrixFq) -> MatrixFq:
    return transpose(conjugate(A))


def adjoint(A: MatrixFq, form) -> MatrixFq:
    """A^T for the euclidean form, A^dagger for the hermitian form."""
    form = require_form(A.spec, form)
    return conj_transpose(A) if form is Form.HERMITIAN else transpose(A)


def cross_gramian(A: MatrixFq, B: MatrixFq, form=Form.EUCLIDEAN) -> MatrixFq:
    """A B^T or A B^dagger."""
    return product(A, adjoint(B, form))


def gramian(G: MatrixFq, form=Form.EUCLIDEAN) -> MatrixFq:
    return cross_gramian(G, G, form)


def inner_product(spec: FieldSpec, u: Sequence[Fe], v: Sequence[Fe], form=Form.EUCLIDEAN) -> Fe:
    """<u, v> = sum u_i v_i, or sum u_i v_i^s for the hermitian form."""
    form = require_form(spec, form)
    if len(u) != len(v):
        raise ShapeError(f"vectors of lengths {len(u)} and {len(v)}")
    if len(u) == 0:
        return 0
    a, b = spec.array(list(u)), spec.array(list(v))
    if form is Form.HERMITIAN:
        b = _conj(spec, b)
    return int(np.add.reduce(a * b))


def pair_reduce_diagonal(S: MatrixFq) -> Tuple[MatrixFq, MatrixFq, MatrixFq]:
    """Invertible P, Q with P S Q^T = D diagonal, nonzero entries first.

    Row operations accumulate into P and column operations into Q^T. Pivots
    are never rescaled, so an already diagonal S only gets permuted.
    """
    if S.rows != S.cols:
        raise ShapeError(f"pair reduction needs a square matrix, got {S.shape}")
    n = S.rows
    spec = S.spec
    if n == 0:
        return S, S, S
    W = S.field_array().copy()
    P = spec.GF.Identity(n)
    Qt = spec.GF.Identity(n)
    r = 0
    while r < n:
        # leftmost column first, then topmost row
        hits = np.argwhere(W[r:, r:].view(np.ndarray).T != 0)
        if hits.size == 0:
            break
        pc, pr = r + int(hits[0][0]), r + int(hits[0][1])
        if pr != r:
            W[[r, pr]] = W[[pr, r]]
            P[[r, pr]] = P[[pr, r]]
        if pc != r:
            W[:, [r, pc]] = W[:, [pc, r]]
            Qt[:, [r, pc]] = Qt[:, [pc, r]]
        piv = W[r, r]
        if r + 1 < n:
            rf = W[r + 1:, r] / piv
            W[r + 1:] = W[r + 1:] - rf.reshape(-1, 1) * W[r].reshape(1, -1)
            P[r + 1:] = P[r + 1:] - rf.reshape(-1, 1) * P[r].reshape(1, -1)
            cf = W[r, r + 1:] / piv
            W[:, r + 1:] = W[:, r + 1:] - W[:, r].reshape(-1, 1) * cf.reshape(1, -1)
            Qt[:, r + 1:] = Qt[:, r + 1:] - Qt[:, r].reshape(-1, 1) * cf.reshape(1, -1)
        r += 1
    logger.debug(f"pair reduction: {r} nonzero diagonal entries of {n}")
    P_m = MatrixFq.from_field_array(spec, P)
    Q_m = transpose(MatrixFq.from_field_array(spec, Qt))
    D_m = MatrixFq.from_field_array(spec, W)
    return P_m, Q_m, D_m


def nonzero_rows(M: MatrixFq) -> MatrixFq:
    keep = [i for i in range(M.rows) if M.entries[i].any()]
    return M.select_rows(keep)


def row_space_equal(A: MatrixFq, B: MatrixFq) -> bool:
    _check_same_field(A, B)
    if A.cols != B.cols:
        raise ShapeError(f"row spaces of {A.shape} and {B.shape} live in different spaces")
    return nonzero_rows(rref(A)[0]) == nonzero_rows(rref(B)[0])


def random_matrix(spec: FieldSpec, rows: int, cols: int, rng: np.random.Generator) -> MatrixFq:
    return MatrixFq(spec, rng.integers(0, spec.q, size=(rows, cols), dtype=np.int64))


def random_invertible(spec: FieldSpec, n: int, rng: np.random.Generator) -> MatrixFq:
    """Uniform-ish invertible n x n matrix by rejection sampling."""
    while True:
        M = random_matrix(spec, n, n, rng)
        if rank(M) == n:
            return M
