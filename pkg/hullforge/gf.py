"""
Exact arithmetic in GF(p^m).

Elements are integer codes in [0, q). The base-p digits of a code are the
polynomial coefficients of the element, digit i being the coefficient of x^i,
which is also the integer representation used by ``galois``. Vectorized work
goes through the ``galois`` FieldArray class built for the field; scalar work
goes through lookup tables when the field is small enough.
"""
import itertools
import logging
from dataclasses import dataclass, field
from enum import Enum
from functools import lru_cache
from typing import Any, Dict, Final, List, Optional, Tuple

import galois
import numpy as np

from hullforge.errors import FieldError

logger = logging.getLogger(__name__)

MAX_FIELD_ORDER: Final = 2 ** 16
TABLE_LIMIT: Final = 512

# A field element, as its integer code.
Fe = int


class ArithOp(Enum):
    """Operations accepted by FieldSpec.arith."""
    ADD = "add"
    SUB = "sub"
    MUL = "mul"
    NEG = "neg"
    INV = "inv"
    POW = "pow"


@dataclass(frozen=True)
class FieldSpec:
    """A finite field GF(p^m) with a fixed monic irreducible modulus.

    ``modulus`` holds the m+1 coefficients low degree first.
    ``subfield_order`` is p^(m/2) for even m and enables the Hermitian form.
    """
    p: int
    m: int
    q: int
    modulus: Tuple[int, ...]
    subfield_order: Optional[int] = None
    _gf: Any = field(default=None, init=False, repr=False, compare=False)
    _tables: Optional[Dict[str, np.ndarray]] = field(
        default=None, init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.p < 2 or not galois.is_prime(self.p):
            raise FieldError(f"characteristic {self.p} is not prime")
        if self.m < 1:
            raise FieldError(f"extension degree must be >= 1, got {self.m}")
        if self.q != self.p ** self.m:
            raise FieldError(f"q={self.q} is not {self.p}^{self.m}")
        if len(self.modulus) != self.m + 1 or self.modulus[-1] != 1:
            raise FieldError(f"modulus {self.modulus} is not monic of degree {self.m}")
        if any(not 0 <= c < self.p for c in self.modulus):
            raise FieldError(f"modulus {self.modulus} has coefficients outside GF({self.p})")
        expected_sub = self.p ** (self.m // 2) if self.m % 2 == 0 else None
        if self.subfield_order != expected_sub:
            raise FieldError(
                f"subfield_order must be {expected_sub} for m={self.m}, got {self.subfield_order}")

        if self.m == 1:
            gf = galois.GF(self.p)
        else:
            poly = _poly(self.p, self.modulus)
            if not poly.is_irreducible():
                raise FieldError(f"modulus {self.modulus} is reducible over GF({self.p})")
            gf = galois.GF(self.q, irreducible_poly=poly)
        object.__setattr__(self, "_gf", gf)

        if self.q <= TABLE_LIMIT:
            els = gf.elements
            tables = {
                "add": _codes(els[:, np.newaxis] + els[np.newaxis, :]),
                "mul": _codes(els[:, np.newaxis] * els[np.newaxis, :]),
                "neg": _codes(-els),
            }
            object.__setattr__(self, "_tables", tables)

    # -- vectorized access -------------------------------------------------

    @property
    def GF(self):
        """The galois FieldArray class for this field."""
        return self._gf

    def array(self, values) -> galois.FieldArray:
        return self._gf(np.asarray(values, dtype=np.int64))

    @property
    def is_odd(self) -> bool:
        return self.p % 2 == 1

    @property
    def has_conjugation(self) -> bool:
        return self.subfield_order is not None

    # -- scalar arithmetic -------------------------------------------------

    def check(self, x: Fe) -> Fe:
        x = int(x)
        if not 0 <= x < self.q:
            raise FieldError(f"{x} is not an element code of GF({self.q})")
        return x

    def add(self, x: Fe, y: Fe) -> Fe:
        x, y = self.check(x), self.check(y)
        if self._tables is not None:
            return int(self._tables["add"][x, y])
        return int(self._gf(x) + self._gf(y))

    def neg(self, x: Fe) -> Fe:
        x = self.check(x)
        if self._tables is not None:
            return int(self._tables["neg"][x])
        return int(-self._gf(x))

    def sub(self, x: Fe, y: Fe) -> Fe:
        return self.add(x, self.neg(y))

    def mul(self, x: Fe, y: Fe) -> Fe:
        x, y = self.check(x), self.check(y)
        if self._tables is not None:
            return int(self._tables["mul"][x, y])
        return int(self._gf(x) * self._gf(y))

    def inv(self, x: Fe) -> Fe:
        x = self.check(x)
        if x == 0:
            raise ZeroDivisionError(f"0 has no inverse in GF({self.q})")
        # x^(q-2) = x^-1 for nonzero x
        return self.pow(x, self.q - 2)

    def pow(self, x: Fe, e: int) -> Fe:
        """Square-and-multiply exponentiation; negative e inverts first."""
        x = self.check(x)
        e = int(e)
        if e < 0:
            x, e = self.inv(x), -e
        result = 1
        while e:
            if e & 1:
                result = self.mul(result, x)
            x = self.mul(x, x)
            e >>= 1
        return result

    def arith(self, op: ArithOp, *operands: Fe) -> Fe:
        op = ArithOp(op)
        if op is ArithOp.NEG:
            return self.neg(*operands)
        if op is ArithOp.INV:
            return self.inv(*operands)
        if op is ArithOp.POW:
            x, e = operands
            return self.pow(x, e)
        binary = {ArithOp.ADD: self.add, ArithOp.SUB: self.sub, ArithOp.MUL: self.mul}
        return binary[op](*operands)

    def dot(self, u, v) -> Fe:
        """Plain sum of products of two equal-length code sequences."""
        total = 0
        for a, b in zip(u, v):
            total = self.add(total, self.mul(a, b))
        return total

    # -- Frobenius ---------------------------------------------------------

    def frobenius(self, x: Fe, e: int) -> Fe:
        """Return x^(p^e) for 0 <= e <= m."""
        if not 0 <= e <= self.m:
            raise FieldError(f"Frobenius exponent {e} outside [0, {self.m}]")
        return self.pow(x, self.p ** e)

    def conjugate(self, x: Fe) -> Fe:
        """The involution x -> x^s where s^2 = q."""
        if self.subfield_order is None:
            raise FieldError(f"GF({self.q}) has odd degree {self.m}: no conjugation")
        return self.frobenius(x, self.m // 2)

    def norm(self, x: Fe) -> Fe:
        """x^(s+1), which lies in the subfield of order s."""
        return self.mul(x, self.conjugate(x))

    # -- squares -----------------------------------------------------------

    def is_square(self, x: Fe) -> bool:
        x = self.check(x)
        if self.p == 2 or x == 0:
            return True
        # Euler's criterion
        return self.pow(x, (self.q - 1) // 2) == 1

    def sqrt(self, x: Fe) -> Optional[Fe]:
        """Smallest-code square root of x, or None for a non-square."""
        x = self.check(x)
        if self.p == 2:
            # squaring is a bijection; its inverse is x -> x^(q/2)
            return self.pow(x, self.q // 2)
        if not self.is_square(x):
            return None
        els = self._gf.elements
        roots = np.flatnonzero(_codes(els * els) == x)
        return int(roots[0])

    # -- enumeration and description --------------------------------------

    def elements(self) -> List[Fe]:
        return list(range(self.q))

    def modulus_str(self) -> str:
        terms = []
        for deg in range(self.m, -1, -1):
            c = self.modulus[deg]
            if c == 0:
                continue
            mono = "1" if deg == 0 else ("x" if deg == 1 else f"x^{deg}")
            if deg == 0:
                terms.append(str(c))
            else:
                terms.append(mono if c == 1 else f"{c}*{mono}")
        return " + ".join(terms)

    def describe(self) -> Dict[str, Any]:
        return {
            "p": self.p,
            "m": self.m,
            "q": self.q,
            "modulus": list(self.modulus),
            "subfield_order": self.subfield_order,
        }

    def __str__(self):
        return f"GF({self.q}) = GF({self.p})[x]/({self.modulus_str()})"


def _poly(p: int, coeffs_low_first) -> galois.Poly:
    return galois.Poly(list(reversed(coeffs_low_first)), field=galois.GF(p))


def _codes(arr) -> np.ndarray:
    """Plain int64 codes out of a FieldArray."""
    return np.asarray(arr.view(np.ndarray), dtype=np.int64)


def smallest_irreducible(p: int, m: int) -> Tuple[int, ...]:
    """Lexicographically smallest monic irreducible of degree m over GF(p),
    comparing coefficient vectors low degree first."""
    if m == 1:
        return (0, 1)
    for tail in itertools.product(range(p), repeat=m):
        if tail[0] == 0:
            # divisible by x
            continue
        coeffs = tail + (1,)
        if _poly(p, coeffs).is_irreducible():
            return coeffs
    raise FieldError(f"no irreducible polynomial of degree {m} over GF({p})")


@lru_cache(maxsize=None)
def make_field(p: int, m: int) -> FieldSpec:
    """Build GF(p^m) with its deterministic modulus."""
    p, m = int(p), int(m)
    if p < 2 or not galois.is_prime(p):
        raise FieldError(f"characteristic {p} is not prime")
    if m < 1:
        raise FieldError(f"extension degree must be >= 1, got {m}")
    q = p ** m
    if q > MAX_FIELD_ORDER:
        raise FieldError(f"GF({p}^{m}) has order {q} > {MAX_FIELD_ORDER}")
    modulus = smallest_irreducible(p, m)
    spec = FieldSpec(
        p=p, m=m, q=q, modulus=modulus,
        subfield_order=p ** (m // 2) if m % 2 == 0 else None,
    )
    logger.debug(f"Built {spec}")
    return spec


def enumerate_elements(spec: FieldSpec) -> List[Fe]:
    """All q element codes in ascending order."""
    return spec.elements()
