"""Sparse multivariate polynomials over Q in the variables rho, beta, alpha, x, y.

Monomials are packed into a single int (16 bits of exponent per variable) so
that monomial multiplication is integer addition.  Coefficients are ints
whenever they are integral and :class:`~fractions.Fraction` otherwise.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping

from .exactnum import QuadExtNum

VARS = ("rho", "beta", "alpha", "x", "y")
_ALIASES = {"ρ": "rho", "β": "beta", "α": "alpha"}
_BITS = 16
_FIELD = (1 << _BITS) - 1
MAX_DEGREE = _FIELD


def var_index(name: str) -> int:
    name = _ALIASES.get(name, name)
    try:
        return VARS.index(name)
    except ValueError:
        raise KeyError(f"unknown variable {name!r}; expected one of {VARS}") from None


def _pack(exps: Iterable[int]) -> int:
    key = 0
    for i, e in enumerate(exps):
        if e < 0 or e > MAX_DEGREE:
            raise ValueError(f"exponent {e} out of range")
        key |= e << (_BITS * i)
    return key


def _unpack(key: int) -> tuple[int, ...]:
    return tuple((key >> (_BITS * i)) & _FIELD for i in range(len(VARS)))


def _exp(key: int, i: int) -> int:
    return (key >> (_BITS * i)) & _FIELD


def _clean(c):
    if type(c) is Fraction and c.denominator == 1:
        return c.numerator
    return c


class MultiPoly:
    """Immutable sparse polynomial; ``terms`` maps exponent tuples to coefficients."""

    __slots__ = ("_t", "_deg")

    def __init__(self, terms: Mapping[tuple[int, ...], object] | None = None):
        t = {}
        for exps, c in (terms or {}).items():
            exps = tuple(exps) + (0,) * (len(VARS) - len(exps))
            c = _clean(Fraction(c) if not isinstance(c, (int, Fraction)) else c)
            if c:
                k = _pack(exps)
                t[k] = t.get(k, 0) + c
        self._t = {k: _clean(c) for k, c in t.items() if c}
        self._deg = None

    @classmethod
    def _raw(cls, t: dict) -> MultiPoly:
        p = cls.__new__(cls)
        p._t = t
        p._deg = None
        return p

    @classmethod
    def sum_of(cls, polys: Iterable[MultiPoly]) -> MultiPoly:
        t: dict[int, object] = {}
        get = t.get
        for p in polys:
            for k, c in p._t.items():
                t[k] = get(k, 0) + c
        return cls._raw({k: _clean(c) for k, c in t.items() if c})

    @classmethod
    def const(cls, c) -> MultiPoly:
        c = _clean(c)
        return cls._raw({0: c} if c else {})

    @classmethod
    def var(cls, name: str, power: int = 1) -> MultiPoly:
        i = var_index(name)
        if power < 0 or power > MAX_DEGREE:
            raise ValueError(f"power {power} out of range")
        return cls._raw({power << (_BITS * i): 1})

    @property
    def terms(self) -> dict[tuple[int, ...], object]:
        return {_unpack(k): c for k, c in self._t.items()}

    def degrees(self) -> tuple[int, ...]:
        """Maximum exponent of each variable."""
        if self._deg is None:
            deg = [0] * len(VARS)
            for k in self._t:
                for i in range(len(VARS)):
                    e = _exp(k, i)
                    if e > deg[i]:
                        deg[i] = e
            self._deg = tuple(deg)
        return self._deg

    def degree(self, name: str) -> int:
        return self.degrees()[var_index(name)]

    def is_zero(self) -> bool:
        return not self._t

    def constant_term(self):
        return self._t.get(0, 0)

    def __len__(self):
        return len(self._t)

    # -- arithmetic -------------------------------------------------------

    @staticmethod
    def _lift(other) -> MultiPoly | None:
        if isinstance(other, MultiPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return MultiPoly.const(other)
        return None

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        t = dict(self._t)
        for k, c in o._t.items():
            s = t.get(k, 0) + c
            if s:
                t[k] = s
            else:
                t.pop(k, None)
        return MultiPoly._raw({k: _clean(c) for k, c in t.items()})

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly._raw({k: -c for k, c in self._t.items()})

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c) -> MultiPoly:
        c = _clean(c)
        if not c:
            return MultiPoly()
        return MultiPoly._raw({k: _clean(v * c) for k, v in self._t.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        a, b = self._t, other._t
        if not a or not b:
            return MultiPoly()
        da, db = self.degrees(), other.degrees()
        if any(x + y > MAX_DEGREE for x, y in zip(da, db)):
            raise OverflowError("polynomial degree exceeds MAX_DEGREE")
        if len(a) < len(b):
            a, b = b, a
        out: dict[int, object] = {}
        get = out.get
        for k2, c2 in b.items():
            for k1, c1 in a.items():
                k = k1 + k2
                out[k] = get(k, 0) + c1 * c2
        return MultiPoly._raw({k: _clean(c) for k, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, e: int) -> MultiPoly:
        if not isinstance(e, int) or e < 0:
            raise ValueError("polynomial exponent must be a nonnegative integer")
        result = MultiPoly.const(1)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def __eq__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self._t == o._t

    def __hash__(self):
        return hash(frozenset(self._t.items()))

    # -- inspection -------------------------------------------------------

    def coefficient_of(self, name: str, degree: int) -> MultiPoly:
        """Coefficient of name**degree as a polynomial in the other variables."""
        i = var_index(name)
        shift = _BITS * i
        mask = _FIELD << shift
        t = {}
        for k, c in self._t.items():
            if (k & mask) >> shift == degree:
                t[k & ~mask] = c
        return MultiPoly._raw(t)

    def sorted_terms(self) -> list[tuple[tuple[int, ...], object]]:
        """Terms in graded order: total degree, then exponent tuple."""
        items = [(_unpack(k), c) for k, c in self._t.items()]
        items.sort(key=lambda kc: (sum(kc[0]), kc[0]))
        return items

    def __repr__(self):
        return f"MultiPoly({self})"

    def __str__(self):
        if not self._t:
            return "0"
        parts = []
        for exps, c in self.sorted_terms():
            mono = "*".join(
                v if e == 1 else f"{v}^{e}" for v, e in zip(VARS, exps) if e
            )
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"{c}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")

    # -- evaluation and substitution --------------------------------------

    def evaluate(self, assignment: Mapping[str, object]):
        """Exact value at a point; values may be ints, Fractions or QuadExtNum."""
        vals = {}
        field_d = None
        for name, v in assignment.items():
            i = var_index(name)
            if isinstance(v, QuadExtNum):
                if field_d is not None and field_d != v.d:
                    raise ValueError("assignment mixes different quadratic fields")
                field_d = v.d
            elif not isinstance(v, (int, Fraction)):
                raise TypeError(f"value for {name} is not exact: {v!r}")
            vals[i] = v
        deg = self.degrees()
        for i, dmax in enumerate(deg):
            if dmax and i not in vals:
                raise KeyError(f"no value given for variable {VARS[i]!r}")
        powers = {}
        for i, v in vals.items():
            pw = [1]
            for _ in range(deg[i]):
                pw.append(pw[-1] * v)
            powers[i] = pw
        total = QuadExtNum(0, 0, field_d) if field_d is not None else Fraction(0)
        for k, c in self._t.items():
            term = c
            for i in range(len(VARS)):
                e = _exp(k, i)
                if e:
                    term = term * powers[i][e]
            total = total + term
        return _clean(total) if isinstance(total, Fraction) else total

    def substitute(self, mapping: Mapping[str, MultiPoly]) -> MultiPoly:
        """Replace variables by polynomials (simultaneous substitution)."""
        subs = {var_index(n): MultiPoly._lift(p) for n, p in mapping.items()}
        deg = self.degrees()
        powers = {}
        for i, p in subs.items():
            pw = [MultiPoly.const(1)]
            for _ in range(deg[i]):
                pw.append(pw[-1] * p)
            powers[i] = pw
        keep_mask = 0
        for i in range(len(VARS)):
            if i not in subs:
                keep_mask |= _FIELD << (_BITS * i)
        out = MultiPoly()
        groups: dict[tuple[int, ...], dict] = {}
        for k, c in self._t.items():
            sig = tuple(_exp(k, i) for i in sorted(subs))
            g = groups.setdefault(sig, {})
            g[k & keep_mask] = c
        for sig, t in groups.items():
            part = MultiPoly._raw(t)
            for i, e in zip(sorted(subs), sig):
                if e:
                    part = part * powers[i][e]
            out = out + part
        return out

    def homogenize_substitute(self, name: str, num: MultiPoly, den: MultiPoly) -> RationalFn:
        """Substitute name -> num/den, returning the result over den**degree."""
        d = self.degree(name)
        total = MultiPoly()
        for e in range(d + 1):
            c = self.coefficient_of(name, e)
            if not c.is_zero():
                total = total + c * num**e * den ** (d - e)
        return RationalFn(total, den**d)


def poly_add(p: MultiPoly, q: MultiPoly) -> MultiPoly:
    return p + q


def poly_mul(p: MultiPoly, q: MultiPoly) -> MultiPoly:
    return p * q


def poly_neg(p: MultiPoly) -> MultiPoly:
    return -p


def poly_pow(p: MultiPoly, e: int) -> MultiPoly:
    return p**e


def poly_eval(p: MultiPoly, assignment: Mapping[str, object]):
    return p.evaluate(assignment)


def poly_equal(p: MultiPoly, q: MultiPoly) -> bool:
    return MultiPoly._lift(p) == MultiPoly._lift(q)


def coefficient_of(p: MultiPoly, name: str, degree: int) -> MultiPoly:
    if degree < 0:
        raise ValueError("degree must be nonnegative")
    return p.coefficient_of(name, degree)


def var(name: str, power: int = 1) -> MultiPoly:
    return MultiPoly.var(name, power)


def const(c) -> MultiPoly:
    return MultiPoly.const(c)


class RationalFn:
    """num/den with den a nonzero polynomial; equality by cross-multiplication."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=1):
        num = MultiPoly._lift(num)
        den = MultiPoly._lift(den)
        if num is None or den is None:
            raise TypeError("RationalFn parts must be polynomials or rationals")
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        self.num = num
        self.den = den

    @staticmethod
    def _lift(other) -> RationalFn | None:
        if isinstance(other, RationalFn):
            return other
        p = MultiPoly._lift(other)
        return RationalFn(p) if p is not None else None

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        if self.den == o.den:
            return RationalFn(self.num + o.num, self.den)
        return RationalFn(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return RationalFn(-self.num, self.den)

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return RationalFn(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return RationalFn(self.num * o.den, self.den * o.num)

    def __eq__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self.num * o.den == o.num * self.den

    __hash__ = None

    def as_poly(self) -> MultiPoly | None:
        """The polynomial itself when the denominator is a constant, else None."""
        if self.den.degrees() == (0,) * len(VARS):
            return self.num.scale(Fraction(1) / Fraction(self.den.constant_term()))
        return None

    def evaluate(self, assignment):
        num = self.num.evaluate(assignment)
        den = self.den.evaluate(assignment)
        if isinstance(den, QuadExtNum):
            return num / den
        if den == 0:
            raise ZeroDivisionError("denominator vanishes at this point")
        return _clean(Fraction(num) / den) if not isinstance(num, QuadExtNum) else num / den

    def __repr__(self):
        return f"RationalFn(({self.num}) / ({self.den}))"


def ratfn_equal(r, s) -> bool:
    return RationalFn._lift(r) == RationalFn._lift(s)


@lru_cache(maxsize=4096)
def rising(name: str, n: int, shift=0) -> MultiPoly:
    """(v + shift)^(n) as a polynomial in v, for n >= 0."""
    if n < 0:
        raise ValueError("use poch_poly for negative n")
    if n == 0:
        return MultiPoly.const(1)
    return rising(name, n - 1, shift) * (MultiPoly.var(name) + (shift + n - 1))


def poch_poly(name: str, n: int, shift=0) -> RationalFn:
    """Symbolic (v + shift)^(n); n < 0 gives 1/((v+shift-1)...(v+shift+n))."""
    if n >= 0:
        return RationalFn(rising(name, n, shift))
    return RationalFn(MultiPoly.const(1), rising(name, -n, shift + n))
