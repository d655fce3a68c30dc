"""Exact scalars: Laurent polynomials over Q and the rational-function field Q(q).

A Laurent polynomial is stored as a sparse map ``exponent -> Fraction`` with no
zero coefficients (the zero polynomial is the empty map).  A rational function
is a pair ``num / den`` of Laurent polynomials kept in a canonical reduced
form, so that structural equality (``==``) decides equality in the field:

* ``den`` is an ordinary polynomial (valuation 0) with integer coefficients,
  content 1 and positive leading coefficient;
* ``num`` and ``den`` have no common polynomial factor (``num`` may carry
  arbitrary ``q``-powers and fractional coefficients).

Every value is immutable; all operations return new objects.  No floating
point is used anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd as _int_gcd
from typing import Mapping, Union

Scalar = Union[int, Fraction]

_F0 = Fraction(0)
_F1 = Fraction(1)


class PoleError(ArithmeticError):
    """Specialization was requested at a zero of the denominator."""


# ---------------------------------------------------------------------------
# low-level term-dict helpers (exponent -> Fraction, zero coefficients absent)
# ---------------------------------------------------------------------------

def _add_terms(a: dict, b: dict) -> dict:
    out = dict(a)
    for e, c in b.items():
        s = out.get(e, _F0) + c
        if s:
            out[e] = s
        else:
            out.pop(e, None)
    return out


def _neg_terms(a: dict) -> dict:
    return {e: -c for e, c in a.items()}


def _mul_terms(a: dict, b: dict) -> dict:
    if not a or not b:
        return {}
    out: dict = {}
    for e1, c1 in a.items():
        for e2, c2 in b.items():
            e = e1 + e2
            s = out.get(e, _F0) + c1 * c2
            if s:
                out[e] = s
            else:
                del out[e]
    return out


def _scale_terms(a: dict, c: Fraction) -> dict:
    if not c:
        return {}
    return {e: v * c for e, v in a.items()}


def _shift_terms(a: dict, k: int) -> dict:
    if k == 0:
        return dict(a)
    return {e + k: v for e, v in a.items()}


def _eval_terms(a: dict, t: Fraction) -> Fraction:
    return sum((c * t ** e for e, c in a.items()), _F0)


def _dense(a: dict) -> tuple[list[Fraction], int]:
    """Return (coefficient list from valuation upward, valuation)."""
    if not a:
        return [], 0
    lo, hi = min(a), max(a)
    return [a.get(e, _F0) for e in range(lo, hi + 1)], lo


def _from_dense(coeffs: list[Fraction], val: int) -> dict:
    return {val + i: c for i, c in enumerate(coeffs) if c}


def _dense_trim(c: list[Fraction]) -> list[Fraction]:
    while c and not c[-1]:
        c.pop()
    return c


def _dense_divmod(a: list[Fraction], b: list[Fraction]) -> tuple[list[Fraction], list[Fraction]]:
    """Polynomial division with remainder over Q (dense, low-to-high lists)."""
    a = list(a)
    _dense_trim(a)
    db, lb = len(b) - 1, b[-1]
    quot = [_F0] * max(len(a) - db, 0)
    while len(a) - 1 >= db and a:
        k = len(a) - 1 - db
        f = a[-1] / lb
        quot[k] = f
        for i, bc in enumerate(b):
            a[k + i] -= f * bc
        _dense_trim(a)
    return quot, a


def _dense_exact_div(a: list[Fraction], b: list[Fraction]) -> list[Fraction] | None:
    quot, rem = _dense_divmod(a, b)
    return None if rem else quot


def _dense_primitive(a: list[Fraction]) -> tuple[list[Fraction], Fraction]:
    """Scale to integer coefficients, content 1, positive leading coefficient.

    Returns (primitive, factor) with a == factor * primitive.
    """
    den_lcm = 1
    for c in a:
        if c:
            den_lcm = den_lcm * c.denominator // _int_gcd(den_lcm, c.denominator)
    ints = [c * den_lcm for c in a]
    g = 0
    for c in ints:
        g = _int_gcd(g, int(c))
    if g == 0:
        return list(a), _F1
    if ints[-1] < 0:
        g = -g
    prim = [c / g for c in ints]
    return prim, Fraction(g, den_lcm)


def _dense_gcd(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    """Monic Euclid over Q, returned primitive with positive leading coefficient."""
    a, b = list(a), list(b)
    _dense_trim(a)
    _dense_trim(b)
    while b:
        _, r = _dense_divmod(a, b)
        a, b = b, r
    prim, _ = _dense_primitive(a)
    return prim


# q^2 + 1, the shifted form of q + q^-1; irreducible over Q
_QSQ_DENSE = [_F1, _F0, _F1]


def _dense_mul(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    if not a or not b:
        return []
    out = [_F0] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if ca:
            for j, cb in enumerate(b):
                out[i + j] += ca * cb
    return out


def _dense_pow(a: list[Fraction], n: int) -> list[Fraction]:
    out = [_F1]
    for _ in range(n):
        out = _dense_mul(out, a)
    return out


def _strip_qsq(a: list[Fraction], limit: int) -> tuple[list[Fraction], int]:
    """Divide out up to `limit` factors of q^2+1; return (quotient, count)."""
    n = 0
    while n < limit and len(a) > 2:
        quot = _dense_exact_div(a, _QSQ_DENSE)
        if quot is None:
            break
        a = quot
        n += 1
    return a, n


def _qsq_power_of(a: list[Fraction]) -> tuple[int, Fraction] | None:
    """If a == c*(q^2+1)^k for a constant c, return (k, c), else None."""
    k = 0
    while len(a) > 1:
        quot = _dense_exact_div(a, _QSQ_DENSE)
        if quot is None:
            return None
        a = quot
        k += 1
    return k, a[0]


def _coerce_coeff(c) -> Fraction:
    if isinstance(c, Fraction):
        return c
    if isinstance(c, int):
        return Fraction(c)
    raise TypeError(f"coefficient must be int or Fraction, got {type(c).__name__}")


def _term_str(e: int, c: Fraction, first: bool) -> str:
    sign = "-" if c < 0 else ("" if first else "+")
    mag = abs(c)
    if e == 0:
        body = str(mag)
    else:
        var = "q" if e == 1 else f"q^{e}"
        body = var if mag == 1 else f"{mag}*{var}"
    if first:
        return sign + body
    return f" {sign} {body}"


def _terms_str(a: dict) -> str:
    if not a:
        return "0"
    parts = []
    for e in sorted(a, reverse=True):
        parts.append(_term_str(e, a[e], first=not parts))
    return "".join(parts)


# ---------------------------------------------------------------------------
# Laurent polynomials
# ---------------------------------------------------------------------------

class LaurentPolynomial:
    """Element of Q[q, q^-1], a sparse map from integer exponents to rationals."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[int, Scalar] | None = None):
        clean: dict[int, Fraction] = {}
        if terms:
            for e, c in terms.items():
                c = _coerce_coeff(c)
                if c:
                    clean[int(e)] = c
        object.__setattr__(self, "terms", clean)

    @classmethod
    def _raw(cls, terms: dict) -> "LaurentPolynomial":
        obj = object.__new__(cls)
        object.__setattr__(obj, "terms", terms)
        return obj

    @classmethod
    def zero(cls) -> "LaurentPolynomial":
        return cls._raw({})

    @classmethod
    def one(cls) -> "LaurentPolynomial":
        return cls._raw({0: _F1})

    @classmethod
    def q(cls, exponent: int = 1) -> "LaurentPolynomial":
        return cls._raw({exponent: _F1})

    @classmethod
    def constant(cls, c: Scalar) -> "LaurentPolynomial":
        c = _coerce_coeff(c)
        return cls._raw({0: c} if c else {})

    # -- queries

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def degree(self) -> int:
        if not self.terms:
            raise ValueError("zero polynomial has no degree")
        return max(self.terms)

    def valuation(self) -> int:
        if not self.terms:
            raise ValueError("zero polynomial has no valuation")
        return min(self.terms)

    def evaluate(self, t: Scalar) -> Fraction:
        t = Fraction(t)
        if t == 0 and self.terms and min(self.terms) < 0:
            raise ZeroDivisionError("cannot evaluate negative q-powers at 0")
        return _eval_terms(self.terms, t)

    def shift(self, k: int) -> "LaurentPolynomial":
        return LaurentPolynomial._raw(_shift_terms(self.terms, k))

    def bar(self) -> "LaurentPolynomial":
        """The substitution q -> q^-1."""
        return LaurentPolynomial._raw({-e: c for e, c in self.terms.items()})

    # -- arithmetic

    def _promote(self, other):
        if isinstance(other, LaurentPolynomial):
            return other
        if isinstance(other, (int, Fraction)):
            return LaurentPolynomial.constant(other)
        return None

    def __add__(self, other):
        other = self._promote(other)
        if other is None:
            return NotImplemented
        return LaurentPolynomial._raw(_add_terms(self.terms, other.terms))

    __radd__ = __add__

    def __sub__(self, other):
        other = self._promote(other)
        if other is None:
            return NotImplemented
        return LaurentPolynomial._raw(_add_terms(self.terms, _neg_terms(other.terms)))

    def __rsub__(self, other):
        other = self._promote(other)
        if other is None:
            return NotImplemented
        return LaurentPolynomial._raw(_add_terms(other.terms, _neg_terms(self.terms)))

    def __neg__(self):
        return LaurentPolynomial._raw(_neg_terms(self.terms))

    def __mul__(self, other):
        other = self._promote(other)
        if other is None:
            return NotImplemented
        return LaurentPolynomial._raw(_mul_terms(self.terms, other.terms))

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative powers of a Laurent polynomial are not polynomials")
        out = LaurentPolynomial.one()
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __eq__(self, other):
        other = self._promote(other)
        if other is None:
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(tuple(sorted(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    def __str__(self):
        return _terms_str(self.terms)

    def __repr__(self):
        return f"LaurentPolynomial({self.terms!r})"


# ---------------------------------------------------------------------------
# rational functions
# ---------------------------------------------------------------------------

def _reduce(num: dict, den: dict) -> tuple[dict, dict]:
    """Canonical reduced form of num/den as term dicts.  See module docstring."""
    if not den:
        raise ZeroDivisionError("zero denominator")
    if not num:
        return {}, {0: _F1}
    dv = min(den)
    den0 = _shift_terms(den, -dv)
    num = _shift_terms(num, -dv)
    if len(den0) == 1:
        c = den0[0]
        return _scale_terms(num, 1 / c), {0: _F1}
    nv = min(num)
    ndense, _ = _dense(_shift_terms(num, -nv))
    ddense, _ = _dense(den0)

    res = _qsq_power_of(ddense)
    if res is not None:
        # denominator is c*(q^2+1)^k; cancel without a general gcd
        qk, c = res
        ndense, stripped = _strip_qsq(ndense, qk)
        if c != 1:
            ndense = [x / c for x in ndense]
        ddense = _dense_pow(_QSQ_DENSE, qk - stripped)
    else:
        g = _dense_gcd(ndense, ddense)
        if len(g) > 1:
            ndense = _dense_exact_div(ndense, g)
            ddense = _dense_exact_div(ddense, g)

    dprim, factor = _dense_primitive(ddense)
    if factor != 1:
        ndense = [c / factor for c in ndense]
    return _from_dense(ndense, nv), _from_dense(dprim, 0)


class RationalFunction:
    """Element of the field K = Q(q), stored as a canonical num/den pair."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        num = _as_laurent(num)
        den = LaurentPolynomial.one() if den is None else _as_laurent(den)
        n, d = _reduce(num.terms, den.terms)
        object.__setattr__(self, "num", LaurentPolynomial._raw(n))
        object.__setattr__(self, "den", LaurentPolynomial._raw(d))

    @classmethod
    def _make(cls, num: LaurentPolynomial, den: LaurentPolynomial) -> "RationalFunction":
        """Trusted constructor: caller guarantees canonical form."""
        obj = object.__new__(cls)
        object.__setattr__(obj, "num", num)
        object.__setattr__(obj, "den", den)
        return obj

    @classmethod
    def zero(cls) -> "RationalFunction":
        return cls._make(LaurentPolynomial.zero(), LaurentPolynomial.one())

    @classmethod
    def one(cls) -> "RationalFunction":
        return cls._make(LaurentPolynomial.one(), LaurentPolynomial.one())

    @classmethod
    def q(cls, exponent: int = 1) -> "RationalFunction":
        return cls._make(LaurentPolynomial.q(exponent), LaurentPolynomial.one())

    @classmethod
    def constant(cls, c: Scalar) -> "RationalFunction":
        return cls._make(LaurentPolynomial.constant(c), LaurentPolynomial.one())

    # -- queries

    @property
    def is_zero(self) -> bool:
        return self.num.is_zero

    @property
    def is_one(self) -> bool:
        return self.num.terms == {0: _F1} and self.den.terms == {0: _F1}

    def __bool__(self):
        return not self.num.is_zero

    # -- arithmetic

    def _promote(self, other):
        if isinstance(other, RationalFunction):
            return other
        if isinstance(other, (int, Fraction)):
            return RationalFunction.constant(other)
        if isinstance(other, LaurentPolynomial):
            return RationalFunction._make(other, LaurentPolynomial.one())
        return None

    def __add__(self, other):
        other = self._promote(other)
        if other is None:
            return NotImplemented
        a, b = self, other
        if a.den.terms == b.den.terms:
            if len(a.den.terms) == 1:
                return RationalFunction._make(
                    LaurentPolynomial._raw(_add_terms(a.num.terms, b.num.terms)), a.den)
            n, d = _reduce(_add_terms(a.num.terms, b.num.terms), a.den.terms)
        else:
            n, d = _reduce(
                _add_terms(_mul_terms(a.num.terms, b.den.terms),
                           _mul_terms(b.num.terms, a.den.terms)),
                _mul_terms(a.den.terms, b.den.terms))
        return RationalFunction._make(LaurentPolynomial._raw(n), LaurentPolynomial._raw(d))

    __radd__ = __add__

    def __sub__(self, other):
        other = self._promote(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._promote(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __neg__(self):
        return RationalFunction._make(-self.num, self.den)

    def __mul__(self, other):
        other = self._promote(other)
        if other is None:
            return NotImplemented
        if len(self.den.terms) == 1 and len(other.den.terms) == 1:
            # both denominators are 1: product of Laurent polynomials
            return RationalFunction._make(
                LaurentPolynomial._raw(_mul_terms(self.num.terms, other.num.terms)),
                LaurentPolynomial.one())
        n, d = _reduce(_mul_terms(self.num.terms, other.num.terms),
                       _mul_terms(self.den.terms, other.den.terms))
        return RationalFunction._make(LaurentPolynomial._raw(n), LaurentPolynomial._raw(d))

    __rmul__ = __mul__

    def inverse(self) -> "RationalFunction":
        if self.is_zero:
            raise ZeroDivisionError("inverse of zero in Q(q)")
        n, d = _reduce(self.den.terms, self.num.terms)
        return RationalFunction._make(LaurentPolynomial._raw(n), LaurentPolynomial._raw(d))

    def __truediv__(self, other):
        other = self._promote(other)
        if other is None:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._promote(other)
        if other is None:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        out = RationalFunction.one()
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __eq__(self, other):
        other = self._promote(other)
        if other is None:
            return NotImplemented
        return self.num.terms == other.num.terms and self.den.terms == other.den.terms

    def __hash__(self):
        return hash((self.num, self.den))

    # -- specialization

    def specialize(self, point) -> Fraction:
        """Exact value at q = t for a nonzero rational t; raises PoleError at poles."""
        t = _as_point_value(point)
        dval = self.den.evaluate(t)
        if dval == 0:
            raise PoleError(f"pole at q = {t}: denominator {self.den} vanishes")
        return self.num.evaluate(t) / dval

    # -- formatting

    def __str__(self):
        if len(self.den.terms) == 1:
            return str(self.num)
        return f"({self.num})/({self.den})"

    def __repr__(self):
        return f"RationalFunction({self.num.terms!r}, {self.den.terms!r})"

    def dump_str(self) -> str:
        """The `(numerator)/(denominator)` form used in matrix dumps."""
        return f"({self.num})/({self.den})"


def _as_laurent(x) -> LaurentPolynomial:
    if isinstance(x, LaurentPolynomial):
        return x
    if isinstance(x, (int, Fraction)):
        return LaurentPolynomial.constant(x)
    if isinstance(x, Mapping):
        return LaurentPolynomial(x)
    raise TypeError(f"cannot interpret {type(x).__name__} as a Laurent polynomial")


def normalize(num, den) -> RationalFunction:
    """Canonical reduced representative of num/den; errors on a zero denominator."""
    return RationalFunction(num, den)


@dataclass(frozen=True)
class SpecializationPoint:
    """A nonzero rational evaluation point for q."""

    value: Fraction

    def __post_init__(self):
        object.__setattr__(self, "value", Fraction(self.value))
        if self.value == 0:
            raise ValueError("specialization point must be nonzero")

    def __str__(self):
        return str(self.value)


def _as_point_value(point) -> Fraction:
    if isinstance(point, SpecializationPoint):
        return point.value
    t = Fraction(point)
    if t == 0:
        raise ValueError("specialization point must be nonzero")
    return t


def specialize(f: RationalFunction, point) -> Fraction:
    """Ring-homomorphism evaluation q -> t on K, with pole detection."""
    return f.specialize(point)


# frequently used elements
Q = RationalFunction.q()
QINV = RationalFunction.q(-1)
Q_MINUS_QINV = RationalFunction(LaurentPolynomial({1: 1, -1: -1}))
Q_PLUS_QINV = RationalFunction(LaurentPolynomial({1: 1, -1: 1}))
ONE = RationalFunction.one()
ZERO = RationalFunction.zero()
HALF = RationalFunction.constant(Fraction(1, 2))
