"""Exact scalars: reduced rational functions over a declared set of parameters.

Every symbolic quantity in the package lives in a :class:`ParamContext`, an
ordered tuple of parameter names.  Values are :class:`Scalar` objects holding a
numerator and denominator in ``Z[names]`` (flint ``fmpz_mpoly`` under lex order
in declaration order), kept coprime with a positive leading denominator
coefficient.  Two equal values therefore have identical representations.

Plain numbers are ``int`` or :class:`fractions.Fraction`; they combine freely
with scalars of any context.  Scalars of two different contexts never mix
implicitly; use :meth:`ParamContext.coerce` or :meth:`Scalar.subs`.
"""

from __future__ import annotations

import re
from fractions import Fraction
from numbers import Rational

import flint

from .errors import ContextMismatch, DivisionByZero

_NAME = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")


class ParamContext:
    """An ordered, immutable list of parameter names."""

    __slots__ = ("names", "_mctx", "_index")

    def __init__(self, names=()):
        names = tuple(names)
        for name in names:
            if not isinstance(name, str) or not _NAME.match(name):
                raise ValueError(f"invalid parameter name {name!r}")
        if len(set(names)) != len(names):
            raise ValueError(f"duplicate parameter names in {names}")
        self.names = names
        self._mctx = flint.fmpz_mpoly_ctx.get(names, "lex")
        self._index = {name: i for i, name in enumerate(names)}

    def __eq__(self, other):
        return isinstance(other, ParamContext) and self.names == other.names

    def __hash__(self):
        return hash(("ParamContext", self.names))

    def __repr__(self):
        return f"ParamContext({self.names!r})"

    def __contains__(self, name):
        return name in self._index

    def index(self, name):
        try:
            return self._index[name]
        except KeyError:
            raise KeyError(f"{name!r} is not a parameter of {self!r}") from None

    def gen(self, name) -> Scalar:
        return Scalar._raw(self, self._mctx.gens()[self.index(name)], self._mctx.constant(1))

    def gens(self):
        return tuple(self.gen(name) for name in self.names)

    def const(self, value) -> Scalar:
        value = _as_fraction(value)
        return Scalar._raw(self, self._mctx.constant(value.numerator),
                           self._mctx.constant(value.denominator))

    @property
    def zero(self):
        return self.const(0)

    @property
    def one(self):
        return self.const(1)

    def extend(self, *names) -> ParamContext:
        return ParamContext(self.names + tuple(names))

    def coerce(self, value) -> Scalar:
        """Bring a number or a scalar of another context into this one.

        Variables are matched by name; every variable the value actually
        depends on must exist here.
        """
        if isinstance(value, Scalar):
            if value.ctx == self:
                return value
            used = value.variables()
            missing = [name for name in used if name not in self]
            if missing:
                raise ContextMismatch(f"{value} uses {missing}, absent from {self!r}")
            return value.subs({}, self)
        return self.const(value)

    def parse(self, text) -> Scalar:
        return parse_scalar(text, self)

    # scalars are built in the hot loops; keep the constructor cheap
    def _poly(self, value):
        return self._mctx.constant(value)


EMPTY = ParamContext(())


def _as_fraction(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, Rational)):
        return Fraction(value)
    if isinstance(value, flint.fmpz):
        return Fraction(int(value))
    if isinstance(value, flint.fmpq):
        return Fraction(int(value.p), int(value.q))
    raise TypeError(f"cannot interpret {value!r} as an exact rational")


def is_number(value) -> bool:
    return isinstance(value, (int, Fraction)) and not isinstance(value, bool)


class Scalar:
    """Element of Q(ctx.names) in canonical reduced form."""

    __slots__ = ("ctx", "num", "den")

    def __init__(self, ctx: ParamContext, num, den=None):
        if not isinstance(num, flint.fmpz_mpoly):
            num = ctx._poly(num)
        if den is None:
            den = ctx._poly(1)
        elif not isinstance(den, flint.fmpz_mpoly):
            den = ctx._poly(den)
        num, den = _reduce(num, den)
        self.ctx, self.num, self.den = ctx, num, den

    @classmethod
    def _raw(cls, ctx, num, den):
        obj = object.__new__(cls)
        obj.ctx, obj.num, obj.den = ctx, num, den
        return obj

    # -- inspection -------------------------------------------------------
    def is_zero(self):
        return self.num.is_zero()

    def is_constant(self):
        return self.num.is_constant() and self.den.is_constant()

    def to_fraction(self) -> Fraction:
        if not self.is_constant():
            raise ValueError(f"{self} is not a constant")
        n = int(self.num.leading_coefficient()) if not self.num.is_zero() else 0
        return Fraction(n, int(self.den.leading_coefficient()))

    def variables(self):
        degs_n, degs_d = self.num.degrees(), self.den.degrees()
        return tuple(name for i, name in enumerate(self.ctx.names)
                     if max(degs_n[i], degs_d[i]) > 0)

    def degree(self, var):
        """(degree of numerator, degree of denominator) in ``var``."""
        i = self.ctx.index(var)
        dn = self.num.degrees()[i] if not self.num.is_zero() else -1
        return dn, self.den.degrees()[i]

    def coefficients_in(self, var, part="num"):
        """Split numerator (or denominator) by powers of ``var``.

        Returns a dict ``k -> Scalar`` with polynomial coefficients free of var.
        """
        poly = self.num if part == "num" else self.den
        i = self.ctx.index(var)
        groups = {}
        for exps, coeff in poly.to_dict().items():
            k = exps[i]
            reduced = exps[:i] + (0,) + exps[i + 1:]
            groups.setdefault(k, {})[reduced] = coeff
        mctx = self.ctx._mctx
        one = mctx.constant(1)
        return {k: Scalar._raw(self.ctx, mctx.from_dict(terms), one) for k, terms in groups.items()}

    # -- arithmetic -------------------------------------------------------
    def _coerce_other(self, other):
        if isinstance(other, Scalar):
            if other.ctx != self.ctx:
                raise ContextMismatch(f"cannot combine scalars of {self.ctx!r} and {other.ctx!r}")
            return other
        if isinstance(other, bool):
            return NotImplemented
        if isinstance(other, (int, Fraction, flint.fmpz, flint.fmpq)):
            return self.ctx.const(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce_other(other)
        if other is NotImplemented:
            return other
        a, b, c, d = self.num, self.den, other.num, other.den
        if b == d:
            return Scalar(self.ctx, a + c, b)
        g = b.gcd(d)
        if g.is_one():
            return Scalar._raw(self.ctx, *_normalize_sign(a * d + c * b, b * d))
        bg, dg = b // g, d // g
        return Scalar(self.ctx, a * dg + c * bg, b * dg)

    __radd__ = __add__

    def __neg__(self):
        return Scalar._raw(self.ctx, -self.num, self.den)

    def __pos__(self):
        return self

    def __sub__(self, other):
        other = self._coerce_other(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce_other(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce_other(other)
        if other is NotImplemented:
            return other
        a, b, c, d = self.num, self.den, other.num, other.den
        if a.is_zero() or c.is_zero():
            return Scalar._raw(self.ctx, a * 0, b.context().constant(1))
        g1, g2 = a.gcd(d), c.gcd(b)
        if not g1.is_one():
            a, d = a // g1, d // g1
        if not g2.is_one():
            c, b = c // g2, b // g2
        return Scalar._raw(self.ctx, *_normalize_sign(a * c, b * d))

    __rmul__ = __mul__

    def inverse(self):
        if self.num.is_zero():
            raise DivisionByZero("inverse of zero")
        return Scalar._raw(self.ctx, *_normalize_sign(self.den, self.num))

    def __truediv__(self, other):
        other = self._coerce_other(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce_other(other)
        if other is NotImplemented:
            return other
        return other * self.inverse()

    def __pow__(self, k):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        return Scalar._raw(self.ctx, self.num ** k, self.den ** k)

    # -- comparison -------------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, Scalar):
            return self.ctx == other.ctx and self.num == other.num and self.den == other.den
        if is_number(other):
            return self.is_constant() and self.to_fraction() == other
        return NotImplemented

    def __hash__(self):
        if self.is_constant():
            return hash(self.to_fraction())
        return hash((self.ctx.names, _poly_key(self.num), _poly_key(self.den)))

    def __bool__(self):
        return not self.is_zero()

    # -- substitution -----------------------------------------------------
    def subs(self, mapping, ctx: ParamContext | None = None) -> Scalar:
        """Substitute variables by numbers or scalars of the target context.

        Unmapped variables map to the same-named variable of the target.
        """
        target = ctx or self.ctx
        if not self.ctx.names:
            return Scalar._raw(target, target._poly(int(_const_of(self.num))),
                               target._poly(int(_const_of(self.den))))
        images = []
        for name in self.ctx.names:
            if name in mapping:
                images.append(target.coerce(mapping[name]))
            elif name in target:
                images.append(target.gen(name))
            else:
                # a variable absent from the target is fine when unused
                images.append(None)
        used = set(self.variables())
        for name, img in zip(self.ctx.names, images):
            if img is None and name in used:
                raise ContextMismatch(f"no image for {name!r} in {target!r}")
        images = [img if img is not None else target.zero for img in images]
        mt = target._mctx
        if all(img.den.is_one() for img in images):
            polys = [img.num for img in images]
            return Scalar(target, self.num.compose(*polys, ctx=mt), self.den.compose(*polys, ctx=mt))
        bound = [max(dn, dd) for dn, dd in zip(self.num.degrees(), self.den.degrees())]
        num = _homogenized(self.num, images, bound, mt)
        den = _homogenized(self.den, images, bound, mt)
        if den.is_zero():
            raise DivisionByZero(f"denominator of {self} vanishes under substitution")
        return Scalar(target, num, den)

    def evaluate(self, **values) -> Fraction:
        return self.subs(values, EMPTY).to_fraction()

    # -- text -------------------------------------------------------------
    def __str__(self):
        if self.is_constant():
            return str(self.to_fraction())
        if self.den.is_one():
            return f"({self.num.str()})"
        return f"({self.num.str()})/({self.den.str()})"

    def __repr__(self):
        return f"Scalar({str(self)!r}, {self.ctx.names})"


def _const_of(poly):
    return poly.leading_coefficient() if not poly.is_zero() else 0


def _poly_key(poly):
    return tuple(sorted((exps, int(c)) for exps, c in poly.to_dict().items()))


def _normalize_sign(num, den):
    if den.leading_coefficient() < 0:
        return -num, -den
    return num, den


def _reduce(num, den):
    if den.is_zero():
        raise DivisionByZero("zero denominator")
    if num.is_zero():
        return num, den.context().constant(1)
    g = num.gcd(den)
    if not g.is_one():
        num, den = num // g, den // g
    return _normalize_sign(num, den)


def _homogenized(poly, images, bound, mctx):
    """Numerator of poly(P/Q) after multiplying through by prod Q_v^bound_v."""
    powers_p = [{} for _ in images]
    powers_q = [{} for _ in images]

    def power(cache, base, e):
        if e not in cache:
            cache[e] = base ** e
        return cache[e]

    total = mctx.constant(0)
    for exps, coeff in poly.to_dict().items():
        term = mctx.constant(int(coeff))
        for v, e in enumerate(exps):
            img = images[v]
            if bound[v] == 0:
                continue
            if e:
                term *= power(powers_p[v], img.num, e)
            if bound[v] - e:
                term *= power(powers_q[v], img.den, bound[v] - e)
        total += term
    return total


# -- parsing ------------------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z0-9_]*)|(\*\*|[-+*/^()]))")


def _tokenize(text):
    pos, tokens = 0, []
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ValueError(f"unexpected character at {pos} in {text!r}")
        num, ident, op = m.groups()
        if num is not None:
            tokens.append(("num", int(num)))
        elif ident is not None:
            tokens.append(("name", ident))
        else:
            tokens.append(("op", "^" if op == "**" else op))
        pos = m.end()
        while pos < len(text) and text[pos].isspace():
            pos += 1
    return tokens


def names_in(text):
    """Identifiers appearing in a scalar expression, in order of first use."""
    seen = []
    for kind, value in _tokenize(text):
        if kind == "name" and value not in seen:
            seen.append(value)
    return seen


class _Parser:
    def __init__(self, tokens, ctx):
        self.tokens, self.ctx, self.pos = tokens, ctx, 0

    def peek(self):
        return self.tokens[self.pos] if self.pos < len(self.tokens) else (None, None)

    def take(self, value=None):
        tok = self.peek()
        if tok[0] is None or (value is not None and tok[1] != value):
            raise ValueError(f"expected {value or 'token'} at position {self.pos}")
        self.pos += 1
        return tok

    def expr(self):
        value = self.term()
        while self.peek() in (("op", "+"), ("op", "-")):
            op = self.take()[1]
            rhs = self.term()
            value = value + rhs if op == "+" else value - rhs
        return value

    def term(self):
        value = self.unary()
        while self.peek() in (("op", "*"), ("op", "/")):
            op = self.take()[1]
            rhs = self.unary()
            value = value * rhs if op == "*" else value / rhs
        return value

    def unary(self):
        if self.peek() == ("op", "-"):
            self.take()
            return -self.unary()
        if self.peek() == ("op", "+"):
            self.take()
            return self.unary()
        return self.power()

    def power(self):
        base = self.atom()
        if self.peek() == ("op", "^"):
            self.take()
            sign = 1
            if self.peek() == ("op", "-"):
                self.take()
                sign = -1
            kind, exp = self.take()
            if kind != "num":
                raise ValueError("exponents must be integer literals")
            return base ** (sign * exp)
        return base

    def atom(self):
        kind, value = self.take()
        if kind == "num":
            return self.ctx.const(value)
        if kind == "name":
            return self.ctx.gen(value)
        if value == "(":
            inner = self.expr()
            self.take(")")
            return inner
        raise ValueError(f"unexpected token {value!r}")


def parse_scalar(text, ctx: ParamContext = EMPTY) -> Scalar:
    """Parse the text form produced by ``str(Scalar)`` (and ordinary infix)."""
    parser = _Parser(_tokenize(text), ctx)
    if not parser.tokens:
        raise ValueError("empty expression")
    value = parser.expr()
    if parser.pos != len(parser.tokens):
        raise ValueError(f"trailing input in {text!r}")
    return value


def render(value) -> str:
    """Text form of a number or scalar."""
    if isinstance(value, Scalar):
        return str(value)
    return str(_as_fraction(value))


def as_scalar(value, ctx: ParamContext) -> Scalar:
    return ctx.coerce(value)


def simplify(value):
    """Collapse constant scalars to Fractions; leave everything else alone."""
    if isinstance(value, Scalar) and value.is_constant():
        return value.to_fraction()
    if isinstance(value, int) and not isinstance(value, bool):
        return Fraction(value)
    return value
