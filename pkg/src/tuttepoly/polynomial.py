"""Exact integer polynomials in one and two variables.

Coefficients are Python ints, so there is no overflow; point evaluation
uses :class:`fractions.Fraction`.
"""

from __future__ import annotations

import json
from fractions import Fraction
from math import comb, perm
from typing import Iterable, Mapping

Rational = Fraction

__all__ = [
    "BiPoly",
    "UniPoly",
    "Rational",
    "parse_rational",
    "format_rational",
]


def parse_rational(text: str) -> Fraction:
    """Parse ``"p/q"`` or an integer string into a Fraction.

    Decimal notation is rejected on purpose.
    """
    s = text.strip().replace("−", "-")
    if not s:
        raise ValueError("empty rational")
    if "." in s or "e" in s.lower():
        raise ValueError(f"not an integer or p/q rational: {text!r}")
    try:
        return Fraction(s)
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"not an integer or p/q rational: {text!r}") from exc


def format_rational(q: Fraction | int) -> str:
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def _monomial_text(coeff: int, powers: list[tuple[str, int]], first: bool) -> str:
    factors = [v if e == 1 else f"{v}^{e}" for v, e in powers if e]
    mag = abs(coeff)
    if not factors:
        body = str(mag)
    elif mag == 1:
        body = "*".join(factors)
    else:
        body = "*".join([str(mag)] + factors)
    if first:
        return ("-" if coeff < 0 else "") + body
    return (" - " if coeff < 0 else " + ") + body


def _pow_cache(base, n: int, one):
    out = [one]
    for _ in range(n):
        out.append(out[-1] * base)
    return out


class BiPoly:
    """Polynomial in two variables with integer coefficients.

    Terms are stored as ``{(i, j): c}`` meaning ``c * x**i * y**j``; zero
    coefficients are never stored. Instances are treated as immutable.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[tuple[int, int], int] | None = None):
        clean: dict[tuple[int, int], int] = {}
        if terms:
            for (i, j), c in terms.items():
                if i < 0 or j < 0:
                    raise ValueError("exponents must be non-negative")
                c = int(c)
                if c:
                    clean[(int(i), int(j))] = c
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict[tuple[int, int], int]) -> "BiPoly":
        p = cls.__new__(cls)
        p._terms = terms
        p._hash = None
        return p

    # -- constructors ---------------------------------------------------
    @classmethod
    def zero(cls) -> "BiPoly":
        return cls._raw({})

    @classmethod
    def one(cls) -> "BiPoly":
        return cls._raw({(0, 0): 1})

    @classmethod
    def constant(cls, c: int) -> "BiPoly":
        return cls._raw({(0, 0): int(c)} if c else {})

    @classmethod
    def monomial(cls, i: int, j: int, c: int = 1) -> "BiPoly":
        return cls({(i, j): c})

    @classmethod
    def x(cls) -> "BiPoly":
        return cls._raw({(1, 0): 1})

    @classmethod
    def y(cls) -> "BiPoly":
        return cls._raw({(0, 1): 1})

    # -- container protocol ---------------------------------------------
    @property
    def terms(self) -> dict[tuple[int, int], int]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def coefficient(self, i: int, j: int) -> int:
        return self._terms.get((i, j), 0)

    def degree_x(self) -> int:
        return max((i for i, _ in self._terms), default=-1)

    def degree_y(self) -> int:
        return max((j for _, j in self._terms), default=-1)

    def sorted_terms(self) -> list[tuple[int, int, int]]:
        """Terms as ``(i, j, c)`` ordered by ``i`` descending then ``j`` ascending."""
        return [(i, j, c) for (i, j), c in sorted(self._terms.items(), key=lambda t: (-t[0][0], t[0][1]))]

    # -- arithmetic -----------------------------------------------------
    @staticmethod
    def _coerce(other) -> "BiPoly | None":
        if isinstance(other, BiPoly):
            return other
        if isinstance(other, int):
            return BiPoly.constant(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        out = dict(self._terms)
        for k, c in o._terms.items():
            v = out.get(k, 0) + c
            if v:
                out[k] = v
            else:
                out.pop(k, None)
        return BiPoly._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return BiPoly._raw({k: -c for k, c in self._terms.items()})

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        if not isinstance(other, BiPoly):
            return NotImplemented
        out: dict[tuple[int, int], int] = {}
        for (i1, j1), c1 in self._terms.items():
            for (i2, j2), c2 in other._terms.items():
                k = (i1 + i2, j1 + j2)
                out[k] = out.get(k, 0) + c1 * c2
        return BiPoly._raw({k: c for k, c in out.items() if c})

    __rmul__ = __mul__

    def scale(self, c: int) -> "BiPoly":
        c = int(c)
        if not c:
            return BiPoly.zero()
        return BiPoly._raw({k: v * c for k, v in self._terms.items()})

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            return NotImplemented
        result = BiPoly.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def shift(self, di: int, dj: int) -> "BiPoly":
        """Multiply by ``x**di * y**dj``."""
        if di == 0 and dj == 0:
            return self
        return BiPoly._raw({(i + di, j + dj): c for (i, j), c in self._terms.items()})

    # -- comparison -----------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, BiPoly):
            return self._terms == other._terms
        if isinstance(other, int):
            return self._terms == BiPoly.constant(other)._terms
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    # -- calculus / evaluation -----------------------------------------
    def partial_derivative(self, p_order: int, q_order: int) -> "BiPoly":
        """Formal derivative, ``p_order`` times in x and ``q_order`` times in y."""
        if p_order < 0 or q_order < 0:
            raise ValueError("derivative orders must be non-negative")
        out = {}
        for (i, j), c in self._terms.items():
            if i >= p_order and j >= q_order:
                out[(i - p_order, j - q_order)] = c * perm(i, p_order) * perm(j, q_order)
        return BiPoly._raw(out)

    def substitute(self, x, y, one=None):
        """Evaluate with ``x`` and ``y`` taken from any commutative ring.

        Works for ints, Fractions, :class:`UniPoly` and :class:`BiPoly`
        values. ``one`` is the ring's unit; it defaults to ``1``, which
        is fine for every type in this module.
        """
        if one is None:
            one = 1
        if not self._terms:
            return one * 0
        xs = _pow_cache(x, self.degree_x(), one)
        ys = _pow_cache(y, self.degree_y(), one)
        total = one * 0
        for (i, j), c in self._terms.items():
            total = total + (xs[i] * ys[j]) * c
        return total

    def eval(self, x, y) -> Fraction:
        """Exact evaluation at a rational point."""
        return Fraction(self.substitute(Fraction(x), Fraction(y), Fraction(1)))

    __call__ = eval

    def substitute_line(self, axis: str, value=None) -> "UniPoly":
        """Restrict to a line and return a univariate polynomial.

        ``axis="x"`` fixes ``x = value`` (result in y), ``axis="y"``
        fixes ``y = value`` (result in x), and ``axis="diagonal"`` sets
        ``x = y`` (result in the common variable). ``value`` must be an
        integer for the first two.
        """
        if axis == "diagonal":
            coeffs: dict[int, int] = {}
            for (i, j), c in self._terms.items():
                coeffs[i + j] = coeffs.get(i + j, 0) + c
            return UniPoly.from_dict(coeffs)
        if value is None:
            raise ValueError("substitute_line needs a value for axis 'x' or 'y'")
        value = int(value)
        coeffs = {}
        for (i, j), c in self._terms.items():
            if axis == "x":
                d, k = j, i
            elif axis == "y":
                d, k = i, j
            else:
                raise ValueError(f"unknown axis {axis!r}")
            coeffs[d] = coeffs.get(d, 0) + c * value**k
        return UniPoly.from_dict(coeffs)

    # -- text / json ----------------------------------------------------
    def to_string(self, xvar: str = "x", yvar: str = "y") -> str:
        if not self._terms:
            return "0"
        parts = []
        for n, (i, j, c) in enumerate(self.sorted_terms()):
            parts.append(_monomial_text(c, [(xvar, i), (yvar, j)], n == 0))
        return "".join(parts)

    def __str__(self):
        return self.to_string()

    def __repr__(self):
        return f"BiPoly({self.to_string()!r})"

    def to_json_obj(self) -> list[list]:
        return [[i, j, str(c)] for i, j, c in self.sorted_terms()]

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj())

    @classmethod
    def from_json_obj(cls, triples: Iterable) -> "BiPoly":
        terms: dict[tuple[int, int], int] = {}
        for i, j, c in triples:
            terms[(int(i), int(j))] = terms.get((int(i), int(j)), 0) + int(c)
        return cls(terms)

    @classmethod
    def from_json(cls, text: str) -> "BiPoly":
        return cls.from_json_obj(json.loads(text))


class UniPoly:
    """Univariate integer polynomial, coefficients indexed by degree."""

    __slots__ = ("_c",)

    def __init__(self, coeffs: Iterable[int] = ()):
        c = [int(v) for v in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self._c = tuple(c)

    @classmethod
    def from_dict(cls, coeffs: Mapping[int, int]) -> "UniPoly":
        if not coeffs:
            return cls()
        out = [0] * (max(coeffs) + 1)
        for d, v in coeffs.items():
            out[d] += v
        return cls(out)

    @classmethod
    def var(cls) -> "UniPoly":
        return cls((0, 1))

    @classmethod
    def constant(cls, c: int) -> "UniPoly":
        return cls((c,))

    @property
    def coeffs(self) -> tuple[int, ...]:
        return self._c

    @property
    def degree(self) -> int:
        return len(self._c) - 1

    def coefficient(self, d: int) -> int:
        return self._c[d] if 0 <= d < len(self._c) else 0

    def is_zero(self) -> bool:
        return not self._c

    def __bool__(self):
        return bool(self._c)

    def __eq__(self, other):
        if isinstance(other, UniPoly):
            return self._c == other._c
        if isinstance(other, int):
            return self._c == UniPoly.constant(other)._c
        return NotImplemented

    def __hash__(self):
        return hash(self._c)

    def __add__(self, other):
        if isinstance(other, int):
            other = UniPoly.constant(other)
        if not isinstance(other, UniPoly):
            return NotImplemented
        a, b = self._c, other._c
        n = max(len(a), len(b))
        return UniPoly((a[k] if k < len(a) else 0) + (b[k] if k < len(b) else 0) for k in range(n))

    __radd__ = __add__

    def __neg__(self):
        return UniPoly(-v for v in self._c)

    def __sub__(self, other):
        if isinstance(other, int):
            other = UniPoly.constant(other)
        if not isinstance(other, UniPoly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        if isinstance(other, int):
            return UniPoly.constant(other) - self
        return NotImplemented

    def __mul__(self, other):
        if isinstance(other, int):
            return UniPoly(v * other for v in self._c)
        if isinstance(other, BiPoly):
            return NotImplemented
        if not isinstance(other, UniPoly):
            return NotImplemented
        if not self._c or not other._c:
            return UniPoly()
        out = [0] * (len(self._c) + len(other._c) - 1)
        for i, a in enumerate(self._c):
            if a:
                for j, b in enumerate(other._c):
                    out[i + j] += a * b
        return UniPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            return NotImplemented
        result = UniPoly((1,))
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __call__(self, value):
        """Horner evaluation; ``value`` may be any ring element."""
        acc = value * 0 if not isinstance(value, int) else 0
        for c in reversed(self._c):
            acc = acc * value + c
        return acc

    def derivative(self, order: int = 1) -> "UniPoly":
        return UniPoly(perm(d, order) * c for d, c in enumerate(self._c) if d >= order)

    def compose(self, inner):
        """``self(inner)`` for a polynomial ``inner`` (UniPoly or BiPoly)."""
        one = inner ** 0
        acc = one * 0
        for c in reversed(self._c):
            acc = acc * inner + one * c
        return acc

    def shift_argument(self, a: int) -> "UniPoly":
        """Return ``p(z + a)``."""
        out = [0] * len(self._c)
        for d, c in enumerate(self._c):
            for k in range(d + 1):
                out[k] += c * comb(d, k) * a ** (d - k)
        return UniPoly(out)

    def to_string(self, var: str = "x") -> str:
        if not self._c:
            return "0"
        parts = []
        for d in range(len(self._c) - 1, -1, -1):
            c = self._c[d]
            if c:
                parts.append(_monomial_text(c, [(var, d)], not parts))
        return "".join(parts)

    def __str__(self):
        return self.to_string()

    def __repr__(self):
        return f"UniPoly({list(self._c)})"

    def to_json_obj(self) -> list[str]:
        return [str(c) for c in self._c]
