"""
Brute-force reference computations for small codes.

Nothing here touches the matrix layer: codewords are built with scalar field
arithmetic from the generator rows, and hull membership is tested with
explicit inner products against every generator row. Slow on purpose.
"""
import itertools
import logging
from collections import Counter
from typing import FrozenSet, Iterator, List, Optional, Sequence, Tuple

from hullforge.codes import LinearCode
from hullforge.config import DEFAULT_ENUMERATION_BUDGET, EnumerationBudget
from hullforge.errors import CodeFileError, VerificationError
from hullforge.gf import Fe, FieldSpec, make_field
from hullforge.matfq import Form, require_form

logger = logging.getLogger(__name__)

Word = Tuple[Fe, ...]

CLOSURE_PROBES = 64


def enumerate_codewords(C: LinearCode, budget: Optional[EnumerationBudget] = None) -> Iterator[Word]:
    """All q^k codewords, messages in ascending base-q order (first digit most significant)."""
    spec = C.spec
    (budget or DEFAULT_ENUMERATION_BUDGET).check(C.q ** C.k, f"oracle enumeration of {C}")
    rows = [C.gen.row(i) for i in range(C.k)]
    for message in itertools.product(range(C.q), repeat=C.k):
        word = [0] * C.n
        for coef, row in zip(message, rows):
            if coef == 0:
                continue
            for j, x in enumerate(row):
                word[j] = spec.add(word[j], spec.mul(coef, x))
        yield tuple(word)


class _Pairing:
    """<u, v> with a precomputed conjugation table."""

    def __init__(self, spec: FieldSpec, form: Form):
        self.spec = spec
        if form is Form.HERMITIAN:
            self.conj = [spec.conjugate(x) for x in range(spec.q)]
        else:
            self.conj = list(range(spec.q))

    def __call__(self, u: Sequence[Fe], v: Sequence[Fe]) -> Fe:
        total = 0
        for a, b in zip(u, v):
            total = self.spec.add(total, self.spec.mul(a, self.conj[b]))
        return total


def _log_q(size: int, q: int) -> Optional[int]:
    ell, power = 0, 1
    while power < size:
        power *= q
        ell += 1
    return ell if power == size else None


def hull_by_enumeration(
    C: LinearCode,
    form=Form.EUCLIDEAN,
    budget: Optional[EnumerationBudget] = None,
) -> Tuple[FrozenSet[Word], int]:
    """Codewords orthogonal to every generator row, and log_q of their number."""
    spec = C.spec
    form = require_form(spec, form)
    ip = _Pairing(spec, form)
    rows = [C.gen.row(i) for i in range(C.k)]
    members = [c for c in enumerate_codewords(C, budget) if all(ip(c, g) == 0 for g in rows)]
    found = frozenset(members)

    probes = members[:CLOSURE_PROBES]
    for a in probes:
        for b in members:
            if tuple(spec.add(x, y) for x, y in zip(a, b)) not in found:
                raise VerificationError(f"hull of {C} is not closed under addition", (a, b))
        for s in spec.elements()[1:]:
            if tuple(spec.mul(s, x) for x in a) not in found:
                raise VerificationError(f"hull of {C} is not closed under scaling", (s, a))
    ell = _log_q(len(found), spec.q)
    if ell is None:
        raise VerificationError(f"hull of {C} has {len(found)} elements, not a power of {spec.q}")
    logger.debug(f"oracle {form.value} hull of {C}: {len(found)} codewords, ell={ell}")
    return found, ell


def min_distance_by_enumeration(C: LinearCode, budget: Optional[EnumerationBudget] = None) -> int:
    weights = Counter(sum(1 for x in c if x) for c in enumerate_codewords(C, budget))
    return min(w for w in weights if w > 0)


def maximal_so_by_enumeration(
    C: LinearCode,
    form=Form.EUCLIDEAN,
    budget: Optional[EnumerationBudget] = None,
) -> bool:
    """No isotropic codeword outside the hull."""
    form = require_form(C.spec, form)
    ip = _Pairing(C.spec, form)
    hull_words, _ = hull_by_enumeration(C, form, budget)
    for c in enumerate_codewords(C, budget):
        if c not in hull_words and ip(c, c) == 0:
            return False
    return True


def format_golden(
    spec: FieldSpec,
    n: int,
    words: Sequence[Word],
    command: str,
) -> str:
    """Header `p m n k` (k = log_q of the word count) then one codeword per line."""
    k = _log_q(len(words), spec.q)
    if k is None:
        raise VerificationError(f"{len(words)} words is not a power of {spec.q}")
    lines = [f"# produced by: {command}", f"{spec.p} {spec.m} {n} {k}"]
    lines += [" ".join(str(x) for x in w) for w in words]
    return "\n".join(lines) + "\n"


def parse_golden(text: str) -> Tuple[FieldSpec, int, int, List[Word]]:
    """Inverse of format_golden: (field, n, k, words)."""
    body = []
    for raw in text.lstrip("\ufeff").splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            body.append(line.split())
    if not body or len(body[0]) != 4:
        raise CodeFileError("golden file needs a `p m n k` header")
    try:
        p, m, n, k = (int(t) for t in body[0])
        words = [tuple(int(t) for t in row) for row in body[1:]]
    except ValueError as e:
        raise CodeFileError(f"golden file has a non-integer entry: {e}")
    spec = make_field(p, m)
    if len(words) != spec.q ** k:
        raise CodeFileError(f"golden file lists {len(words)} words, header promises {spec.q ** k}")
    bad = [i for i, w in enumerate(words) if len(w) != n or any(not 0 <= x < spec.q for x in w)]
    if bad:
        raise CodeFileError(f"golden file rows {bad} are malformed", bad)
    return spec, n, k, words
