"""
Gramian diagonalization.

Odd characteristic: every code has a generator matrix with a diagonal
Gramian, built by repeatedly splitting off an anisotropic codeword and
projecting the rest onto its orthogonal complement. Any characteristic: if
the hull is maximal self-orthogonal in the code, Gram-Schmidt on a
complement of the hull does the same. Pair reduction always yields two
generator matrices whose cross-Gramian is diagonal.
"""
import logging
from dataclasses import dataclass
from enum import Enum
from typing import Any, Dict, List, Optional, Sequence, Tuple

import galois
import numpy as np

from hullforge.codes import (
    AnyCode, LinearCode, Side, ZeroCode, dual, hull, hull_dimension_via_gramian,
    is_hull_maximal_so_in,
)
from hullforge.config import EnumerationBudget
from hullforge.errors import (
    CharacteristicError, DomainRefusal, NotLcdError, NotMaximalHullError,
    UndecidedError, VerificationError,
)
from hullforge.gf import Fe, FieldSpec
from hullforge.matfq import (
    Form, MatrixFq, conjugate, cross_gramian, gramian, pair_reduce_diagonal, rank,
    require_form, row_space_equal, vstack, zeros,
)

logger = logging.getLogger(__name__)


class DiagMethod(str, Enum):
    """How a diagonal Gramian was obtained."""
    ODD_INDUCTION = "odd-induction"
    MAXIMAL_HULL_GS = "maximal-hull-gs"
    PAIR_REDUCTION = "pair-reduction"


class DiagStrategy(str, Enum):
    """What `diagonalize` is asked to do."""
    AUTO = "auto"
    ODD = "odd"
    MAXIMAL = "maximal"
    PAIR = "pair"
    LCD = "lcd"


@dataclass(frozen=True)
class DiagonalizationResult:
    code: LinearCode
    form: Form
    new_gen: MatrixFq
    diagonal: Tuple[Fe, ...]
    nonzero_count: int
    method: DiagMethod

    def to_dict(self) -> Dict[str, Any]:
        return {
            "n": self.code.n,
            "k": self.code.k,
            "form": self.form.value,
            "method": self.method.value,
            "new_gen": self.new_gen.tolist(),
            "diagonal": list(self.diagonal),
            "nonzero_count": self.nonzero_count,
        }


@dataclass(frozen=True)
class PairDiagonalization:
    """G1 = P gen and G2 with G1 * adjoint(G2) = diag(a_1, ..., a_{k-ell}, 0, ..., 0)."""
    code: LinearCode
    form: Form
    g1: MatrixFq
    g2: MatrixFq
    p: MatrixFq
    q: MatrixFq
    diagonal: Tuple[Fe, ...]
    nonzero_count: int
    method: DiagMethod = DiagMethod.PAIR_REDUCTION

    def to_dict(self) -> Dict[str, Any]:
        return {
            "n": self.code.n,
            "k": self.code.k,
            "form": self.form.value,
            "method": self.method.value,
            "g1": self.g1.tolist(),
            "g2": self.g2.tolist(),
            "p": self.p.tolist(),
            "q": self.q.tolist(),
            "diagonal": list(self.diagonal),
            "nonzero_count": self.nonzero_count,
        }


def _require_odd(spec: FieldSpec, what: str) -> None:
    if not spec.is_odd:
        raise CharacteristicError(
            f"{what} needs odd characteristic, GF({spec.q}) has characteristic {spec.p}")


def _ip(spec: FieldSpec, u: galois.FieldArray, v: galois.FieldArray, form: Form) -> Fe:
    if form is Form.HERMITIAN:
        v = v ** spec.subfield_order
    return int(np.add.reduce(u * v))


def _find(spec: FieldSpec, rows: galois.FieldArray, form: Form) \
        -> Optional[Tuple[int, galois.FieldArray]]:
    """(index of the row to drop, anisotropic vector) or None."""
    count = rows.shape[0]
    for i in range(count):
        if _ip(spec, rows[i], rows[i], form) != 0:
            logger.debug(f"row {i} is anisotropic")
            return i, rows[i].copy()
    for i in range(count):
        for j in range(i + 1, count):
            c = _ip(spec, rows[i], rows[j], form)
            if c == 0:
                continue
            logger.debug(f"rows {i} and {j} pair to an anisotropic vector")
            if form is Form.HERMITIAN:
                return i, rows[i] + spec.GF(c) * rows[j]
            return i, rows[i] + rows[j]
    return None


def find_anisotropic_rows(rows: MatrixFq, form=Form.EUCLIDEAN) -> Optional[Tuple[Fe, ...]]:
    """A vector in the row space with nonzero self inner product.

    Single rows by index first, then pairs (i < j) with <r_i, r_j> != 0:
    r_i + r_j for the euclidean form, r_i + <r_i, r_j> r_j for the hermitian
    one. None iff the rows span a self-orthogonal space.
    """
    spec = rows.spec
    form = require_form(spec, form)
    _require_odd(spec, "anisotropic search")
    if rows.rows == 0:
        return None
    hit = _find(spec, rows.field_array(), form)
    if hit is None:
        return None
    return tuple(int(x) for x in hit[1])


def find_anisotropic(C: AnyCode, form=Form.EUCLIDEAN) -> Optional[Tuple[Fe, ...]]:
    return find_anisotropic_rows(C.gen, form)


def _stack(spec: FieldSpec, rows: Sequence[galois.FieldArray], n: int) -> MatrixFq:
    if not rows:
        return zeros(spec, 0, n)
    return MatrixFq(spec, np.vstack([np.asarray(r.view(np.ndarray), dtype=np.int64) for r in rows]))


def _finish(C: LinearCode, form: Form, new_gen: MatrixFq, method: DiagMethod) -> DiagonalizationResult:
    S = gramian(new_gen, form)
    if not S.is_diagonal():
        raise VerificationError(f"{method.value} left a non-diagonal Gramian", S)
    diagonal = S.diagonal()
    nonzero = sum(1 for a in diagonal if a != 0)
    if any(a == 0 for a in diagonal[:nonzero]):
        raise VerificationError(f"{method.value} did not order nonzeros first", diagonal)
    if not row_space_equal(new_gen, C.gen):
        raise VerificationError(f"{method.value} changed the row space", new_gen)
    logger.debug(f"{method.value} on {C}: diagonal {diagonal}")
    return DiagonalizationResult(
        code=C, form=form, new_gen=new_gen, diagonal=diagonal,
        nonzero_count=nonzero, method=method,
    )


def diagonalize_odd(C: LinearCode, form=Form.EUCLIDEAN) -> DiagonalizationResult:
    spec = C.spec
    form = require_form(spec, form)
    _require_odd(spec, "odd-characteristic diagonalization")
    work = C.gen.field_array()
    picked: List[galois.FieldArray] = []
    while work.shape[0]:
        hit = _find(spec, work, form)
        if hit is None:
            break
        i, v = hit
        vv = spec.GF(_ip(spec, v, v, form))
        rest = work[[j for j in range(work.shape[0]) if j != i]]
        if rest.shape[0]:
            # c -> c - (<c, v> / <v, v>) v
            vc = v ** spec.subfield_order if form is Form.HERMITIAN else v
            coeffs = np.add.reduce(rest * vc.reshape(1, -1), axis=1) / vv
            rest = rest - coeffs.reshape(-1, 1) * v.reshape(1, -1)
        picked.append(v)
        work = rest
    new_gen = vstack(_stack(spec, picked, C.n), MatrixFq.from_field_array(spec, work))
    return _finish(C, form, new_gen, DiagMethod.ODD_INDUCTION)


def _lcd_result(C: LinearCode, form: Form) -> DiagonalizationResult:
    _require_odd(C.spec, "orthogonal basis construction")
    ell = hull_dimension_via_gramian(C, form)
    if ell > 0:
        raise NotLcdError(ell)
    return diagonalize_odd(C, form)


def orthogonal_basis_lcd(C: LinearCode, form=Form.EUCLIDEAN) -> MatrixFq:
    """Pairwise orthogonal anisotropic basis of an LCD code."""
    form = require_form(C.spec, form)
    return _lcd_result(C, form).new_gen


def _quotient_anisotropic(spec: FieldSpec, form: Form, norms: Sequence[Fe]) -> bool:
    """Whether sum d_i x_i^2 (or d_i N(x_i)) has only the trivial zero, odd q.

    Three or more variables always have a nontrivial zero, and so do two
    under the hermitian form since the norm maps onto the subfield.
    """
    if len(norms) <= 1:
        return True
    if form is Form.HERMITIAN or len(norms) >= 3:
        return False
    d1, d2 = norms
    return not spec.is_square(spec.neg(spec.mul(d2, spec.inv(d1))))


def diagonalize_maximal_hull(
    C: LinearCode,
    form=Form.EUCLIDEAN,
    budget: Optional[EnumerationBudget] = None,
) -> DiagonalizationResult:
    spec = C.spec
    form = require_form(spec, form)
    try:
        maximal: Optional[bool] = is_hull_maximal_so_in(C, form, Side.CODE, budget)
    except UndecidedError as e:
        logger.info(f"{e}; deciding from the Gram-Schmidt norms instead")
        maximal = None
    if maximal is False:
        raise NotMaximalHullError(f"the {form.value} hull of {C} is not maximal self-orthogonal in it")

    hull_gen = hull(C, form).hull.gen
    basis, current = hull_gen, hull_gen.rows
    complement: List[galois.FieldArray] = []
    for i in range(C.k):
        candidate = vstack(basis, C.gen.select_rows([i]))
        if rank(candidate) > current:
            basis, current = candidate, current + 1
            complement.append(C.gen.field_array()[i])

    orthogonal: List[galois.FieldArray] = []
    norms: List[Fe] = []
    for t in complement:
        for r, rr in zip(orthogonal, norms):
            t = t - spec.GF(_ip(spec, t, r, form)) / spec.GF(rr) * r
        tt = _ip(spec, t, t, form)
        if tt == 0:
            raise NotMaximalHullError(
                f"isotropic vector outside the {form.value} hull of {C}: {tuple(int(x) for x in t)}")
        orthogonal.append(t)
        norms.append(tt)
    if maximal is None and not _quotient_anisotropic(spec, form, norms):
        raise NotMaximalHullError(
            f"the {form.value} form on {C} modulo its hull has isotropic vectors "
            f"(diagonal {tuple(norms)})")
    new_gen = vstack(_stack(spec, orthogonal, C.n), hull_gen)
    return _finish(C, form, new_gen, DiagMethod.MAXIMAL_HULL_GS)


def pair_diagonal_generators(C: LinearCode, form=Form.EUCLIDEAN) -> PairDiagonalization:
    """G1 = P gen, G2 = Q gen (conj(Q) gen for the hermitian form), P S Q^T = D."""
    spec = C.spec
    form = require_form(spec, form)
    S = gramian(C.gen, form)
    P, Q, D = pair_reduce_diagonal(S)
    g1 = P @ C.gen
    g2 = (conjugate(Q) if form is Form.HERMITIAN else Q) @ C.gen
    cross = cross_gramian(g1, g2, form)
    if cross != D or not D.is_diagonal():
        raise VerificationError("pair reduction did not produce a diagonal cross-Gramian", cross)
    diagonal = D.diagonal()
    return PairDiagonalization(
        code=C, form=form, g1=g1, g2=g2, p=P, q=Q, diagonal=diagonal,
        nonzero_count=sum(1 for a in diagonal if a != 0),
    )


def diagonalize(
    C: LinearCode,
    form=Form.EUCLIDEAN,
    strategy=DiagStrategy.AUTO,
    side=Side.CODE,
    budget: Optional[EnumerationBudget] = None,
):
    """Dispatch to one diagonalization, on C or on its dual.

    auto picks odd-induction in odd characteristic and the maximal-hull
    branch otherwise; the dual side diagonalizes parity-check Gramians.
    """
    form = require_form(C.spec, form)
    strategy = DiagStrategy(strategy)
    target = dual(C, form) if Side(side) is Side.DUAL else C
    if isinstance(target, ZeroCode):
        raise DomainRefusal(f"the {form.value} dual of {C} is zero: nothing to diagonalize")
    if strategy is DiagStrategy.AUTO:
        strategy = DiagStrategy.ODD if target.spec.is_odd else DiagStrategy.MAXIMAL
    logger.debug(f"diagonalizing {target} ({Side(side).value} side) with {strategy.value}")
    if strategy is DiagStrategy.ODD:
        return diagonalize_odd(target, form)
    if strategy is DiagStrategy.MAXIMAL:
        return diagonalize_maximal_hull(target, form, budget)
    if strategy is DiagStrategy.LCD:
        return _lcd_result(target, form)
    return pair_diagonal_generators(target, form)
