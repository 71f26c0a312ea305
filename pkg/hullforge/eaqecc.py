"""
Entanglement-assisted quantum code parameters from hulls.

A linear [n, k, d]_q code with hull dimension ell gives an
[[n, k - ell, d; n - k - ell]]_q code, and its dual gives
[[n, n - k - ell, d_dual; k - ell]]_q. The extension appends r columns
to a parity-check matrix, paired with anisotropic rows of a diagonalized
generator, keeping the hull dimension while consuming r more ebits.
"""
import logging
from dataclasses import dataclass, replace
from enum import Enum
from fractions import Fraction
from typing import Any, Dict, Optional, Tuple

from hullforge.codes import (
    AnyCode, LinearCode, ZeroCode, dual, hull, min_distance, span,
)
from hullforge.config import EnumerationBudget
from hullforge.diag import diagonalize_odd
from hullforge.errors import BudgetExceeded, CharacteristicError, InputError, VerificationError
from hullforge.gf import Fe, FieldSpec
from hullforge.matfq import (
    Form, MatrixFq, diag_matrix, gramian, hstack, rank, require_form, vstack, zeros,
)
from hullforge.report import fraction_to_json

logger = logging.getLogger(__name__)


class Provenance(str, Enum):
    BASE_EUCLIDEAN = "base-euclidean"
    BASE_HERMITIAN = "base-hermitian"
    BASE_DUAL_SIDE = "base-dual-side"
    EXT_EUCLIDEAN = "ext-euclidean"
    EXT_HERMITIAN = "ext-hermitian"


@dataclass(frozen=True)
class EaqeccRecord:
    """[[n, k_logical, d; c]]_q with exact rates."""
    n: int
    k_logical: int
    d_exact: Optional[int]
    d_bounds: Tuple[int, int]
    c: int
    q: int
    provenance: Provenance
    r: int = 0

    def __post_init__(self):
        if self.n < 1 or self.k_logical < 0 or self.c < 0:
            raise InputError(f"invalid EAQECC parameters n={self.n}, k={self.k_logical}, c={self.c}")
        lo, hi = self.d_bounds
        if self.d_exact is not None and not lo <= self.d_exact <= hi:
            raise InputError(f"distance {self.d_exact} outside bounds {self.d_bounds}")
        object.__setattr__(self, "d_bounds", (int(lo), int(hi)))
        object.__setattr__(self, "provenance", Provenance(self.provenance))

    @property
    def rate(self) -> Fraction:
        return Fraction(self.k_logical, self.n)

    @property
    def net_rate(self) -> Fraction:
        return Fraction(self.k_logical - self.c, self.n)

    def parameters(self) -> Tuple[int, int, Optional[int], int, int]:
        return self.n, self.k_logical, self.d_exact, self.c, self.q

    def __str__(self):
        d = self.d_exact if self.d_exact is not None else f"{self.d_bounds[0]}..{self.d_bounds[1]}"
        return f"[[{self.n},{self.k_logical},{d};{self.c}]]_{self.q}"

    def to_dict(self) -> Dict[str, Any]:
        return {
            "n": self.n,
            "k_logical": self.k_logical,
            "d_exact": self.d_exact,
            "d_bounds": list(self.d_bounds),
            "c": self.c,
            "q": self.q,
            "rate": fraction_to_json(self.rate),
            "net_rate": fraction_to_json(self.net_rate),
            "provenance": self.provenance.value,
            "r": self.r,
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> 'EaqeccRecord':
        return cls(
            n=data["n"], k_logical=data["k_logical"], d_exact=data["d_exact"],
            d_bounds=tuple(data["d_bounds"]), c=data["c"], q=data["q"],
            provenance=Provenance(data["provenance"]), r=data.get("r", 0),
        )


@dataclass(frozen=True)
class ExtensionCertificate:
    original: LinearCode
    extended: LinearCode
    form: Form
    r: int
    ell: int
    alphas: Tuple[Fe, ...]
    x_rows: Tuple[Tuple[Fe, ...], ...]
    x_norms: Tuple[Fe, ...]
    parity_check: MatrixFq
    gramian_rank: int
    hull_preserved: bool
    d: Optional[int] = None
    d_prime: Optional[int] = None
    distance_sandwich_holds: Optional[bool] = None

    def to_dict(self) -> Dict[str, Any]:
        return {
            "form": self.form.value,
            "r": self.r,
            "ell": self.ell,
            "original": {"n": self.original.n, "k": self.original.k,
                         "gen": self.original.gen.tolist()},
            "extended": {"n": self.extended.n, "k": self.extended.k,
                         "gen": self.extended.gen.tolist()},
            "alphas": list(self.alphas),
            "x_rows": [list(x) for x in self.x_rows],
            "x_norms": list(self.x_norms),
            "parity_check": self.parity_check.tolist(),
            "gramian_rank": self.gramian_rank,
            "hull_preserved": self.hull_preserved,
            "d": self.d,
            "d_prime": self.d_prime,
            "distance_sandwich_holds": self.distance_sandwich_holds,
        }


@dataclass(frozen=True)
class RateReport:
    n: int
    k: int
    ell: int
    r: int
    rate: Fraction
    net_rate: Fraction
    net_rate_positive: bool
    condition_holds: bool
    lighter_condition_holds: bool
    record_consistent: bool

    def to_dict(self) -> Dict[str, Any]:
        return {
            "n": self.n, "k": self.k, "ell": self.ell, "r": self.r,
            "rate": fraction_to_json(self.rate),
            "net_rate": fraction_to_json(self.net_rate),
            "net_rate_positive": self.net_rate_positive,
            "condition_holds": self.condition_holds,
            "lighter_condition_holds": self.lighter_condition_holds,
            "record_consistent": self.record_consistent,
        }


def _distance(C: AnyCode, budget: Optional[EnumerationBudget], progress: bool) \
        -> Tuple[Optional[int], Tuple[int, int]]:
    """Exact distance when enumerable, else the trivial bounds (1, n)."""
    if isinstance(C, ZeroCode):
        return None, (1, C.n)
    try:
        d = min_distance(C, budget, progress)
    except BudgetExceeded as e:
        logger.warning(f"{e}; reporting distance bounds (1, {C.n})")
        return None, (1, C.n)
    return d, (d, d)


def _record_q(spec: FieldSpec, form: Form) -> int:
    return spec.subfield_order if form is Form.HERMITIAN else spec.q


def base_params(
    C: LinearCode,
    form=Form.EUCLIDEAN,
    budget: Optional[EnumerationBudget] = None,
    progress: bool = False,
) -> Tuple[EaqeccRecord, EaqeccRecord]:
    form = require_form(C.spec, form)
    ell = hull(C, form).ell
    n, k = C.n, C.k
    q = _record_q(C.spec, form)
    d, d_bounds = _distance(C, budget, progress)
    d_dual, d_dual_bounds = _distance(dual(C, form), budget, progress)
    first = EaqeccRecord(
        n=n, k_logical=k - ell, d_exact=d, d_bounds=d_bounds, c=n - k - ell, q=q,
        provenance=Provenance.BASE_HERMITIAN if form is Form.HERMITIAN else Provenance.BASE_EUCLIDEAN,
    )
    second = EaqeccRecord(
        n=n, k_logical=n - k - ell, d_exact=d_dual, d_bounds=d_dual_bounds, c=k - ell, q=q,
        provenance=Provenance.BASE_DUAL_SIDE,
    )
    logger.debug(f"base records for {C}: {first}, {second}")
    return first, second


def _pick_alpha(spec: FieldSpec, a: Fe, form: Form) -> Fe:
    """First nonzero alpha with alpha^2 (or its norm) != -a."""
    for alpha in spec.elements()[1:]:
        value = spec.norm(alpha) if form is Form.HERMITIAN else spec.mul(alpha, alpha)
        if spec.add(value, a) != 0:
            return alpha
    raise VerificationError(f"no admissible alpha for diagonal entry {a} in GF({spec.q})")


def _extend(
    C: LinearCode,
    r: int,
    form: Form,
    budget: Optional[EnumerationBudget],
    progress: bool,
) -> Tuple[ExtensionCertificate, EaqeccRecord]:
    spec = C.spec
    n, k = C.n, C.k
    ell = hull(C, form).ell
    if isinstance(r, bool) or not isinstance(r, int) or not 0 <= r <= k - ell:
        raise InputError(f"r must satisfy 0 <= r <= k - ell = {k - ell}, got {r!r}")

    diag = diagonalize_odd(C, form)
    x = diag.new_gen.select_rows(range(r))
    norms = diag.diagonal[:r]
    alphas = tuple(_pick_alpha(spec, a, form) for a in norms)
    logger.debug(f"extension by {r}: alphas {alphas} for diagonal entries {norms}")

    H = dual(C, form).gen
    H_ext = vstack(
        hstack(zeros(spec, H.rows, r), H),
        hstack(diag_matrix(spec, alphas), x),
    )
    extended = dual(span(spec, H_ext, n + r), form)
    g_rank = rank(gramian(H_ext, form))
    ext_ell = hull(extended, form).ell
    certificate = ExtensionCertificate(
        original=C, extended=extended, form=form, r=r, ell=ell,
        alphas=alphas, x_rows=tuple(x.row(i) for i in range(x.rows)), x_norms=tuple(norms),
        parity_check=H_ext, gramian_rank=g_rank, hull_preserved=ext_ell == ell,
    )
    if g_rank != n - k - ell + r or ext_ell != ell or extended.n != n + r or extended.k != k:
        raise VerificationError(
            f"extension of {C} by {r} failed: Gramian rank {g_rank}, "
            f"hull dimension {ext_ell}, extended code {extended}",
            certificate,
        )

    d, _ = _distance(C, budget, progress)
    d_prime, _ = _distance(extended, budget, progress)
    sandwich = None
    if d is not None and d_prime is not None:
        sandwich = d <= d_prime <= d + r
        if not sandwich:
            logger.warning(f"distance {d_prime} of {extended} is outside [{d}, {d + r}]")
    if d_prime is not None:
        bounds = (d_prime, d_prime)
    elif d is not None:
        bounds = (d, min(d + r, n + r))
    else:
        bounds = (1, n + r)
    certificate = replace(certificate, d=d, d_prime=d_prime, distance_sandwich_holds=sandwich)
    record = EaqeccRecord(
        n=n + r, k_logical=k - ell, d_exact=d_prime, d_bounds=bounds, c=n - k - ell + r,
        q=_record_q(spec, form),
        provenance=Provenance.EXT_HERMITIAN if form is Form.HERMITIAN else Provenance.EXT_EUCLIDEAN,
        r=r,
    )
    return certificate, record


def extend_euclidean(
    C: LinearCode,
    r: int,
    budget: Optional[EnumerationBudget] = None,
    progress: bool = False,
) -> Tuple[ExtensionCertificate, EaqeccRecord]:
    spec = C.spec
    if not spec.is_odd or spec.q < 5:
        raise CharacteristicError(f"euclidean extension needs odd q >= 5, got q={spec.q}")
    return _extend(C, r, Form.EUCLIDEAN, budget, progress)


def extend_hermitian(
    C: LinearCode,
    r: int,
    budget: Optional[EnumerationBudget] = None,
    progress: bool = False,
) -> Tuple[ExtensionCertificate, EaqeccRecord]:
    spec = C.spec
    form = require_form(spec, Form.HERMITIAN)
    if not spec.is_odd:
        raise CharacteristicError(
            f"hermitian extension needs an odd subfield order, got {spec.subfield_order}")
    return _extend(C, r, form, budget, progress)


def rate_report(record: EaqeccRecord, n: int, k: int, ell: int, r: int = 0) -> RateReport:
    """Exact rate bookkeeping for an extension of an [n, k] code with hull dimension ell."""
    if n < 1 or not 0 <= k <= n or not 0 <= ell <= min(k, n - k) or r < 0:
        raise InputError(f"inconsistent parameters n={n}, k={k}, ell={ell}, r={r}")
    rate = Fraction(k - ell, n + r)
    net_rate = Fraction(2 * k - n - r, n + r)
    positive = 2 * k > n and r < 2 * k - n
    if positive != (net_rate > 0):
        raise VerificationError(f"net rate {net_rate} disagrees with positivity flag {positive}")
    condition = 4 * k >= 3 * n + r
    lighter = 2 * ell <= 2 * k - n - r
    if (condition or lighter) and rate < Fraction(1, 2):
        raise VerificationError(f"rate {rate} below 1/2 although a rate condition holds")
    consistent = (
        record.n == n + r and record.k_logical == k - ell and record.c == n - k - ell + r
    )
    return RateReport(
        n=n, k=k, ell=ell, r=r, rate=rate, net_rate=net_rate,
        net_rate_positive=positive, condition_holds=condition,
        lighter_condition_holds=lighter, record_consistent=consistent,
    )
