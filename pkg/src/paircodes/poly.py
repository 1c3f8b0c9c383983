"""Dense polynomials over a field context and quotient rings F_q[x]/(x^n - c).

Coefficients are stored ascending by degree with no trailing zeros, so
the zero polynomial is the empty tuple and `degree` is None for it
rather than a fake number; dual-generator degree arithmetic depends on
that distinction staying loud.
"""

from __future__ import annotations

from .field import FieldCtx


class Poly:
    """Immutable polynomial over a fixed FieldCtx."""

    __slots__ = ("ctx", "coeffs")

    def __init__(self, ctx: FieldCtx, coeffs):
        cs = [int(c) for c in coeffs]
        for c in cs:
            if not 0 <= c < ctx.q:
                raise ValueError(f"coefficient {c} is not an element index of {ctx!r}")
        while cs and cs[-1] == 0:
            cs.pop()
        self.ctx = ctx
        self.coeffs = tuple(cs)

    @classmethod
    def zero(cls, ctx) -> "Poly":
        return cls(ctx, [])

    @classmethod
    def one(cls, ctx) -> "Poly":
        return cls(ctx, [1])

    @classmethod
    def constant(cls, ctx, c) -> "Poly":
        return cls(ctx, [c])

    @classmethod
    def x_power(cls, ctx, k: int, c=1) -> "Poly":
        return cls(ctx, [0] * k + [c])

    @classmethod
    def xn_minus_lambda(cls, ctx, n: int, lam) -> "Poly":
        return cls(ctx, [ctx.neg(lam)] + [0] * (n - 1) + [1])

    @classmethod
    def from_roots(cls, ctx, roots) -> "Poly":
        out = cls.one(ctx)
        for r in roots:
            out = out * cls(ctx, [ctx.neg(r), 1])
        return out

    @property
    def degree(self):
        """Degree, or None for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else None

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def lc(self) -> int:
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def monic(self) -> "Poly":
        if self.is_zero:
            return self
        inv = self.ctx.inv(self.lc())
        return self.scale(inv)

    def scale(self, c) -> "Poly":
        mul = self.ctx.mul
        return Poly(self.ctx, [mul(c, a) for a in self.coeffs])

    def _require_same_ctx(self, other: "Poly"):
        if self.ctx is not other.ctx:
            raise ValueError(f"mixed field contexts: {self.ctx!r} vs {other.ctx!r}")

    def __add__(self, other: "Poly") -> "Poly":
        self._require_same_ctx(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        add = self.ctx.add
        out = list(a)
        for i, c in enumerate(b):
            out[i] = add(out[i], c)
        return Poly(self.ctx, out)

    def __neg__(self) -> "Poly":
        neg = self.ctx.neg
        return Poly(self.ctx, [neg(c) for c in self.coeffs])

    def __sub__(self, other: "Poly") -> "Poly":
        return self + (-other)

    def __mul__(self, other: "Poly") -> "Poly":
        self._require_same_ctx(other)
        if self.is_zero or other.is_zero:
            return Poly.zero(self.ctx)
        ctx = self.ctx
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                if b:
                    out[i + j] = ctx.add(out[i + j], ctx.mul(a, b))
        return Poly(ctx, out)

    def __divmod__(self, other: "Poly"):
        self._require_same_ctx(other)
        if other.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        ctx = self.ctx
        d = other.degree
        lead_inv = ctx.inv(other.lc())
        rem = list(self.coeffs)
        if len(rem) <= d:
            return Poly.zero(ctx), self
        quo = [0] * (len(rem) - d)
        for i in range(len(rem) - 1, d - 1, -1):
            c = rem[i]
            if c:
                f = ctx.mul(c, lead_inv)
                quo[i - d] = f
                rem[i] = 0
                for j in range(d):
                    rem[i - d + j] = ctx.sub(rem[i - d + j], ctx.mul(f, other.coeffs[j]))
        return Poly(ctx, quo), Poly(ctx, rem[:d])

    def __floordiv__(self, other: "Poly") -> "Poly":
        return divmod(self, other)[0]

    def __mod__(self, other: "Poly") -> "Poly":
        return divmod(self, other)[1]

    def divides(self, other: "Poly") -> bool:
        return (other % self).is_zero

    def eval(self, x) -> int:
        """Horner evaluation at a point of the same context."""
        ctx = self.ctx
        acc = 0
        for c in reversed(self.coeffs):
            acc = ctx.add(ctx.mul(acc, x), c)
        return acc

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Poly)
            and self.ctx is other.ctx
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((id(self.ctx), self.coeffs))

    def __repr__(self) -> str:
        if self.is_zero:
            return "Poly(0)"
        terms = []
        for i in reversed(range(len(self.coeffs))):
            c = self.coeffs[i]
            if not c:
                continue
            if i == 0:
                terms.append(str(c))
            elif i == 1:
                terms.append(f"{c}*x" if c != 1 else "x")
            else:
                terms.append(f"{c}*x^{i}" if c != 1 else f"x^{i}")
        return "Poly(" + " + ".join(terms) + f" over {self.ctx!r})"


def gcd(a: Poly, b: Poly) -> Poly:
    """Monic greatest common divisor; gcd(f, 0) is monic(f)."""
    a._require_same_ctx(b)
    while not b.is_zero:
        a, b = b, a % b
    return a.monic()


def reciprocal(f: Poly) -> Poly:
    """x^deg(f) * f(1/x): the coefficient sequence reversed."""
    if f.is_zero:
        raise ValueError("reciprocal of the zero polynomial")
    return Poly(f.ctx, tuple(reversed(f.coeffs)))


def eval_embedded(f: Poly, smap, x) -> int:
    """Evaluate a small-field polynomial at a big-field point.

    Coefficients pass through the subfield embedding first, so the
    result lives in smap.big.
    """
    if f.ctx is not smap.small:
        raise ValueError("polynomial context does not match the tower's small field")
    big = smap.big
    acc = 0
    for c in reversed(f.coeffs):
        acc = big.add(big.mul(acc, x), smap.embed(c))
    return acc


class QuotientRing:
    """F_q[x]/(x^n - lam) with lam a nonzero shift constant."""

    __slots__ = ("ctx", "n", "lam")

    def __init__(self, ctx: FieldCtx, n: int, lam):
        lam = ctx._check(lam)
        if lam == 0:
            raise ValueError("shift constant must be nonzero")
        if n < 1:
            raise ValueError(f"ring length must be positive, got {n}")
        self.ctx = ctx
        self.n = n
        self.lam = lam

    def reduce(self, f: Poly) -> Poly:
        """Fold x^(n+i) down to lam * x^i until the degree is below n."""
        if f.ctx is not self.ctx:
            raise ValueError("polynomial context does not match the ring")
        if f.is_zero or f.degree < self.n:
            return f
        ctx, n, lam = self.ctx, self.n, self.lam
        out = list(f.coeffs[:n]) + [0] * max(0, n - len(f.coeffs))
        for i in range(n, len(f.coeffs)):
            c = f.coeffs[i]
            if c:
                # lam^(i // n) accounts for multiple wraps
                folded = ctx.mul(c, ctx.pow(lam, i // n))
                out[i % n] = ctx.add(out[i % n], folded)
        return Poly(ctx, out)

    def mul(self, a: Poly, b: Poly) -> Poly:
        return self.reduce(a * b)

    def __repr__(self) -> str:
        return f"QuotientRing({self.ctx!r}[x]/(x^{self.n} - {self.lam}))"
