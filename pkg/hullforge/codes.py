"""
Linear codes: canonical construction, duals, hulls and the Gramian rank law,
self-orthogonality / LCD / maximality predicates and exact minimum distance.
"""
import logging
from dataclasses import dataclass
from enum import Enum
from typing import Any, Dict, Iterator, Optional, Tuple, Union

import galois
import numpy as np
from tqdm import tqdm

from hullforge.config import DEFAULT_ENUMERATION_BUDGET, EnumerationBudget
from hullforge.errors import FieldError, InputError, UndecidedError
from hullforge.gf import FieldSpec
from hullforge.matfq import (
    Form, MatrixFq, adjoint, conjugate, gramian, identity, kernel, random_matrix,
    rank, require_form, rref, vstack, zeros,
)

logger = logging.getLogger(__name__)

BLOCK_SIZE = 1 << 14


class Side(str, Enum):
    CODE = "code"
    DUAL = "dual"


@dataclass(frozen=True)
class LinearCode:
    """An [n, k]_q code held as its canonical (rref) generator matrix."""
    spec: FieldSpec
    n: int
    k: int
    gen: MatrixFq

    @property
    def q(self) -> int:
        return self.spec.q

    def __str__(self):
        return f"[{self.n},{self.k}]_{self.q}"


@dataclass(frozen=True)
class ZeroCode:
    """Marker for the zero-dimensional code of length n."""
    spec: FieldSpec
    n: int

    k = 0

    @property
    def q(self) -> int:
        return self.spec.q

    @property
    def gen(self) -> MatrixFq:
        return zeros(self.spec, 0, self.n)

    def __str__(self):
        return f"[{self.n},0]_{self.q}"


AnyCode = Union[LinearCode, ZeroCode]


@dataclass(frozen=True)
class HullReport:
    form: Form
    n: int
    k: int
    hull: AnyCode
    ell: int
    gramian_rank_g: int
    gramian_rank_h: int
    consistent: bool

    def to_dict(self) -> Dict[str, Any]:
        return {
            "form": self.form.value,
            "n": self.n,
            "k": self.k,
            "ell": self.ell,
            "gramian_rank_g": self.gramian_rank_g,
            "gramian_rank_h": self.gramian_rank_h,
            "consistent": self.consistent,
            "hull_generator": self.hull.gen.tolist(),
        }


def make_code(spec: FieldSpec, G: MatrixFq) -> LinearCode:
    """Canonicalize a generator matrix; row-equivalent inputs give equal codes."""
    if G.spec != spec:
        raise FieldError(f"generator lives over GF({G.spec.q}), expected GF({spec.q})")
    if G.cols == 0:
        raise InputError("code length must be positive")
    R, _, r = rref(G)
    if r == 0:
        raise InputError("zero generator matrix: the zero code is not a LinearCode")
    return LinearCode(spec=spec, n=G.cols, k=r, gen=R.select_rows(range(r)))


def span(spec: FieldSpec, G: MatrixFq, n: int) -> AnyCode:
    """Row space of G as a code of length n, ZeroCode when G has rank 0."""
    if G.rows == 0 or rank(G) == 0:
        return ZeroCode(spec, n)
    return make_code(spec, G)


def full_space(spec: FieldSpec, n: int) -> LinearCode:
    return make_code(spec, identity(spec, n))


def dual(C: AnyCode, form=Form.EUCLIDEAN) -> AnyCode:
    """Euclidean dual = kernel of gen; hermitian dual = kernel of conj(gen)."""
    form = require_form(C.spec, form)
    if isinstance(C, ZeroCode):
        return full_space(C.spec, C.n)
    base = conjugate(C.gen) if form is Form.HERMITIAN else C.gen
    return span(C.spec, kernel(base), C.n)


def parity_check(C: AnyCode, form=Form.EUCLIDEAN) -> MatrixFq:
    return dual(C, form).gen


def code_sum(A: AnyCode, B: AnyCode) -> AnyCode:
    return span(A.spec, vstack(A.gen, B.gen), A.n)


def hull(C: AnyCode, form=Form.EUCLIDEAN) -> HullReport:
    """C intersected with its dual, computed as dual(C + dual(C))."""
    form = require_form(C.spec, form)
    D = dual(C, form)
    if isinstance(C, ZeroCode) or isinstance(D, ZeroCode):
        hull_code: AnyCode = ZeroCode(C.spec, C.n)
    else:
        hull_code = dual(code_sum(C, D), form)
    ell = hull_code.k
    rank_g = rank(gramian(C.gen, form))
    rank_h = rank(gramian(D.gen, form))
    consistent = rank_g == C.k - ell and rank_h == C.n - C.k - ell
    if not consistent:
        logger.warning(
            f"Gramian ranks ({rank_g}, {rank_h}) disagree with hull dimension {ell} of {C}")
    logger.debug(f"{form.value} hull of {C}: ell={ell}")
    return HullReport(
        form=form, n=C.n, k=C.k, hull=hull_code, ell=ell,
        gramian_rank_g=rank_g, gramian_rank_h=rank_h, consistent=consistent,
    )


def hull_dimension_via_gramian(C: AnyCode, form=Form.EUCLIDEAN) -> int:
    form = require_form(C.spec, form)
    return C.k - rank(gramian(C.gen, form))


def is_self_orthogonal(C: AnyCode, form=Form.EUCLIDEAN) -> bool:
    form = require_form(C.spec, form)
    return gramian(C.gen, form).is_zero()


def is_lcd(C: AnyCode, form=Form.EUCLIDEAN) -> bool:
    form = require_form(C.spec, form)
    return rank(gramian(C.gen, form)) == C.k


def _message_block(q: int, k: int, start: int, stop: int) -> np.ndarray:
    """Messages start..stop-1 in ascending base-q order, first digit most significant."""
    idx = np.arange(start, stop, dtype=np.int64)
    powers = q ** np.arange(k - 1, -1, -1, dtype=np.int64)
    return (idx[:, np.newaxis] // powers[np.newaxis, :]) % q


def iter_codeword_blocks(
    C: LinearCode,
    budget: Optional[EnumerationBudget] = None,
    block_size: int = BLOCK_SIZE,
    progress: bool = False,
) -> Iterator[Tuple[int, galois.FieldArray]]:
    """Yield (first message index, codewords) in deterministic blocks."""
    budget = budget or DEFAULT_ENUMERATION_BUDGET
    total = C.q ** C.k
    budget.check(total, f"enumerating {C}")
    G = C.gen.field_array()
    starts = range(0, total, block_size)
    for start in tqdm(starts, desc=f"Enumerating {C}", unit="block",
                      disable=not progress, leave=False):
        stop = min(start + block_size, total)
        msgs = C.spec.array(_message_block(C.q, C.k, start, stop))
        yield start, msgs @ G


def min_distance(
    C: LinearCode,
    budget: Optional[EnumerationBudget] = None,
    progress: bool = False,
) -> int:
    """Minimum weight over all nonzero codewords by message enumeration."""
    best = C.n
    for start, X in iter_codeword_blocks(C, budget, progress=progress):
        weights = np.count_nonzero(X.view(np.ndarray), axis=1)
        if start == 0:
            weights = weights[1:]
        if weights.size:
            best = min(best, int(weights.min()))
        if best == 1:
            break
    logger.debug(f"min distance of {C}: {best}")
    return best


def is_hull_maximal_so_in(
    C: AnyCode,
    form=Form.EUCLIDEAN,
    side=Side.CODE,
    budget: Optional[EnumerationBudget] = None,
    progress: bool = False,
) -> bool:
    """True iff no x in target minus hull(C) has <x, x> = 0.

    target is C, or dual(C) for side=dual. Enumeration decides when it fits
    the budget; otherwise k - ell <= 1 settles it in any characteristic and
    the converse holds in even characteristic.
    """
    form = require_form(C.spec, form)
    budget = budget or DEFAULT_ENUMERATION_BUDGET
    target = dual(C, form) if Side(side) is Side.DUAL else C
    if isinstance(target, ZeroCode):
        return True
    ell = hull(target, form).ell
    gap = target.k - ell
    if not budget.allows(target.q ** target.k):
        if gap <= 1:
            return True
        if target.spec.p == 2:
            return False
        raise UndecidedError(target.q ** target.k, budget.max_codewords,
                             f"maximality of the hull in {target}")

    spec = target.spec
    G_adj = adjoint(target.gen, form).field_array()
    for _, X in iter_codeword_blocks(target, budget, progress=progress):
        in_hull = ~np.any((X @ G_adj).view(np.ndarray), axis=1)
        Xc = X ** spec.subfield_order if form is Form.HERMITIAN else X
        selfs = np.add.reduce(X * Xc, axis=1).view(np.ndarray)
        if np.any((selfs == 0) & ~in_hull):
            return False
    return True


def random_code(spec: FieldSpec, n: int, k: int, seed: Optional[int] = None) -> LinearCode:
    """Deterministic function of seed; resamples until the generator has rank k."""
    if not 1 <= k <= n:
        raise InputError(f"need 1 <= k <= n, got n={n}, k={k}")
    rng = np.random.default_rng(seed)
    while True:
        G = random_matrix(spec, k, n, rng)
        if rank(G) == k:
            return make_code(spec, G)
