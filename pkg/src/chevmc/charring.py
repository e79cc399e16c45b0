"""Exact character-ring arithmetic.

Elements of the equivariant K-group of a point are Laurent polynomials
e^mu with mu in the weight lattice and coefficients in Z[v, v^-1]
(see params.py).  Weights are stored as integer tuples in the "fine"
lattice: coordinates are h times the fundamental-weight coordinates,
where h is the scaling constant of the ambient root system.  This keeps
exponentials of mu/h integral for the operator formula while ordinary
weights occupy the sublattice of coordinates divisible by h.

Fractions keep their denominator in factored form; every arithmetic
operation tries to cancel each denominator factor by exact division,
which succeeds for the factor families that actually occur
(1 - e^beta, 1 + y e^beta and monomials).  Equality falls back to
cross-multiplication, so an unreduced fraction is never wrong, only
slower.
"""

from __future__ import annotations

from .params import Scalar, ONE


def _wadd(a, b):
    return tuple(x + y for x, y in zip(a, b))


def _wneg(a):
    return tuple(-x for x in a)


def _wsub(a, b):
    return tuple(x - y for x, y in zip(a, b))


class GA:
    """An element of the group algebra Z[v,v^-1][weight lattice].

    `c` maps a weight (tuple of fine-lattice coordinates) to a nonzero
    Scalar coefficient.
    """

    __slots__ = ("c",)

    def __init__(self, c=None):
        self.c = {} if c is None else {k: x for k, x in c.items() if x}

    @staticmethod
    def zero(rank=None):
        return GA()

    @staticmethod
    def term(weight, coeff=ONE):
        if isinstance(coeff, int):
            coeff = Scalar.int(coeff)
        return GA({tuple(weight): coeff})

    @staticmethod
    def const(coeff, rank):
        if isinstance(coeff, int):
            coeff = Scalar.int(coeff)
        return GA({(0,) * rank: coeff})

    def __add__(self, other):
        c = dict(self.c)
        for k, x in other.c.items():
            s = c.get(k, Scalar.zero()) + x
            if s:
                c[k] = s
            elif k in c:
                del c[k]
        return GA(c)

    def __neg__(self):
        return GA({k: -x for k, x in self.c.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, Scalar):
            return GA({k: x * other for k, x in self.c.items()})
        if isinstance(other, int):
            return GA({k: x * other for k, x in self.c.items()})
        c = {}
        for k1, x1 in self.c.items():
            for k2, x2 in other.c.items():
                k = _wadd(k1, k2)
                s = c.get(k, Scalar.zero()) + x1 * x2
                if s:
                    c[k] = s
                elif k in c:
                    del c[k]
        return GA(c)

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            raise ValueError("negative powers: invert explicitly")
        rank = len(next(iter(self.c))) if self.c else 0
        out = GA.const(1, rank)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, int):
            if other == 0:
                return not self.c
            other = GA.const(other, len(next(iter(self.c))))
        return self.c == other.c

    def __hash__(self):
        return hash(frozenset((k, frozenset(x.c.items())) for k, x in self.c.items()))

    def __bool__(self):
        return bool(self.c)

    def is_monomial(self):
        return len(self.c) == 1

    # -- lattice / Weyl operations ------------------------------------
    def map_weights(self, f):
        c = {}
        for k, x in self.c.items():
            kk = f(k)
            s = c.get(kk, Scalar.zero()) + x
            if s:
                c[kk] = s
            elif kk in c:
                del c[kk]
        return GA(c)

    def dual_vee(self):
        """e^mu -> e^-mu, y -> y^-1 (equivalently v -> v^-1)."""
        return GA({_wneg(k): x.v_inverse() for k, x in self.c.items()})

    def star(self):
        """e^mu -> e^-mu, parameters fixed."""
        return GA({_wneg(k): x for k, x in self.c.items()})

    def map_scalars(self, f):
        return GA({k: f(x) for k, x in self.c.items() if f(x)})

    def y_inverse(self):
        return GA({k: x.v_inverse() for k, x in self.c.items()})

    # -- division -----------------------------------------------------
    def leading(self):
        k = max(self.c)
        return k, self.c[k]

    def exact_div(self, other):
        """Exact quotient self/other, or None when not divisible.

        An exact quotient q of Laurent polynomials satisfies, coordinate
        by coordinate, max(q) = max(self) - max(other) and likewise for
        min (the extreme monomials of a product never cancel), so every
        quotient monomial lies in that box; a reduction step that leaves
        the box proves indivisibility, and steps inside it are finitely
        many since the leading monomial strictly decreases.
        """
        if not other:
            raise ZeroDivisionError
        if not self:
            return GA()
        n = len(next(iter(self.c)))
        qmax = tuple(
            max(k[i] for k in self.c) - max(k[i] for k in other.c)
            for i in range(n)
        )
        qmin = tuple(
            min(k[i] for k in self.c) - min(k[i] for k in other.c)
            for i in range(n)
        )
        if any(a > b for a, b in zip(qmin, qmax)):
            return None
        rem = dict(self.c)
        dk, dc = other.leading()
        quot = {}
        while rem:
            rk = max(rem)
            qc = rem[rk].divide(dc)
            if qc is None:
                return None
            qk = _wsub(rk, dk)
            if any(c < lo or c > hi for c, lo, hi in zip(qk, qmin, qmax)):
                return None
            quot[qk] = quot.get(qk, Scalar.zero()) + qc
            for k, x in other.c.items():
                kk = _wadd(k, qk)
                s = rem.get(kk, Scalar.zero()) - qc * x
                if s:
                    rem[kk] = s
                elif kk in rem:
                    del rem[kk]
        return GA(quot)

    # -- display ------------------------------------------------------
    def render(self, names=None, scale=1, var=None):
        """Render with weights divided by `scale` (the lattice constant h)."""
        if not self.c:
            return "0"
        parts = []
        for k in sorted(self.c, reverse=True):
            x = self.c[k]
            exps = []
            for i, e in enumerate(k):
                if not e:
                    continue
                if e % scale == 0:
                    es = str(e // scale)
                else:
                    es = "%d/%d" % (e, scale)
                nm = names[i] if names else "w%d" % (i + 1)
                exps.append("%s*%s" % (es, nm) if es != "1" else nm)
            mono = "e^{%s}" % "+".join(exps).replace("+-", "-") if exps else "1"
            cs = x.render(var=var)
            if cs == "1":
                parts.append(mono)
            elif cs == "-1":
                parts.append("-" + mono)
            elif len(x.c) == 1:
                parts.append("%s*%s" % (cs, mono) if mono != "1" else cs)
            else:
                parts.append("(%s)*%s" % (cs, mono) if mono != "1" else "(%s)" % cs)
        out = parts[0]
        for p in parts[1:]:
            out += " - " + p[1:] if p.startswith("-") else " + " + p
        return out

    def __repr__(self):
        return "GA(%s)" % self.render()

    def to_json(self):
        return [
            {"weight": list(k), "coeff": x.to_json()}
            for k, x in sorted(self.c.items())
        ]

    @staticmethod
    def from_json(items):
        return GA(
            {tuple(d["weight"]): Scalar.from_json(d["coeff"]) for d in items}
        )


class Frac:
    """num / prod(factors); factors is a tuple of GA elements."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=()):
        if not num:
            den = ()
        self.num = num
        self.den = tuple(den)

    @staticmethod
    def from_ga(g):
        return Frac(g)

    def _reduce(self):
        """Cancel denominator factors that divide the numerator exactly."""
        if not self.num:
            return Frac(GA())
        num = self.num
        kept = []
        for f in self.den:
            if f.is_monomial():
                (k, x), = f.c.items()
                inv = x.inverse()
                if inv is not None:
                    num = num.map_weights(lambda w, k=k: _wsub(w, k)) * inv
                    continue
            q = num.exact_div(f)
            if q is not None:
                num = q
            else:
                kept.append(f)
        return Frac(num, kept)

    def __add__(self, other):
        if not other.num:
            return self
        if not self.num:
            return other
        # common denominator via multiset lcm of factors
        from collections import Counter
        c1 = Counter(self.den)
        c2 = Counter(other.den)
        lcm = c1 | c2
        m1 = list(((lcm - c1)).elements())
        m2 = list(((lcm - c2)).elements())
        n1 = self.num
        for f in m1:
            n1 = n1 * f
        n2 = other.num
        for f in m2:
            n2 = n2 * f
        return Frac(n1 + n2, tuple(lcm.elements()))._reduce()

    def __neg__(self):
        return Frac(-self.num, self.den)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (Scalar, int)):
            return Frac(self.num * other, self.den)
        if isinstance(other, GA):
            other = Frac(other)
        return Frac(self.num * other.num, self.den + other.den)._reduce()

    __rmul__ = __mul__

    def inverse(self):
        if not self.num:
            raise ZeroDivisionError
        den = GA.const(1, len(next(iter(self.num.c))))
        for f in self.den:
            den = den * f
        return Frac(den, (self.num,))._reduce()

    def __truediv__(self, other):
        if isinstance(other, GA):
            other = Frac(other)
        return self * other.inverse()

    def __bool__(self):
        return bool(self.num)

    def __eq__(self, other):
        if isinstance(other, int) and other == 0:
            return not self.num
        if isinstance(other, GA):
            other = Frac(other)
        diff = self - other
        return not diff.num

    def __hash__(self):
        raise TypeError("fractions are not hashable")

    def as_ga(self):
        """Return the reduced numerator if the fraction is polynomial."""
        r = self._reduce()
        if r.den:
            num = r.num
            for f in r.den:
                q = num.exact_div(f) if num else GA()
                if q is None:
                    return None
                num = q
            return num
        return r.num

    def map(self, gmap):
        """Apply a GA -> GA ring map to numerator and factors."""
        return Frac(gmap(self.num), tuple(gmap(f) for f in self.den))

    def den_expanded(self, rank):
        den = GA.const(1, rank)
        for f in self.den:
            den = den * f
        return den

    def render(self, names=None, scale=1, var=None):
        g = self.as_ga()
        if g is not None:
            return g.render(names=names, scale=scale, var=var)
        s = "(%s)" % self.num.render(names=names, scale=scale, var=var)
        for f in self.den:
            s += " / (%s)" % f.render(names=names, scale=scale, var=var)
        return s

    def __repr__(self):
        return "Frac(%s)" % self.render()


def ga_sum(items, rank):
    out = GA()
    for g in items:
        out = out + g
    return out
