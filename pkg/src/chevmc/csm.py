"""Chern-Schwartz-MacPherson classes in equivariant cohomology.

A localization model of H_T*(G/B) over the polynomial ring on the
fundamental-weight linear forms, the degenerate affine Hecke algebra
with its commutation lemma, CSM/SM classes of Schubert cells built by
the cohomological Demazure-Lusztig recursion, and the first-Chern-class
Chevalley formula

    c1(L_lambda) . csm(X(w W_P)^o)
        = w(lambda) csm(X(w W_P)^o)
          - sum_{alpha>0, w s_alpha < w} <lambda, alpha^vee>
                csm(X(w s_alpha W_P)^o).
"""

from __future__ import annotations

from collections import Counter
from fractions import Fraction


class CohPoly:
    """Polynomial in the fundamental weights with rational coefficients.

    `c` maps an exponent tuple (one slot per fundamental weight) to a
    nonzero Fraction.
    """

    __slots__ = ("c",)

    def __init__(self, c=None):
        self.c = {} if c is None else {k: x for k, x in c.items() if x}

    @staticmethod
    def const(x, rank):
        x = Fraction(x)
        return CohPoly({(0,) * rank: x}) if x else CohPoly()

    @staticmethod
    def linear(fund_coords):
        """The linear form sum c_i varpi_i."""
        r = len(fund_coords)
        c = {}
        for i, a in enumerate(fund_coords):
            if a:
                c[tuple(1 if j == i else 0 for j in range(r))] = Fraction(a)
        return CohPoly(c)

    def __add__(self, other):
        c = dict(self.c)
        for k, x in other.c.items():
            s = c.get(k, 0) + x
            if s:
                c[k] = s
            elif k in c:
                del c[k]
        return CohPoly(c)

    def __neg__(self):
        return CohPoly({k: -x for k, x in self.c.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return CohPoly({k: x * other for k, x in self.c.items()})
        c = {}
        for k1, x1 in self.c.items():
            for k2, x2 in other.c.items():
                k = tuple(a + b for a, b in zip(k1, k2))
                s = c.get(k, 0) + x1 * x2
                if s:
                    c[k] = s
                elif k in c:
                    del c[k]
        return CohPoly(c)

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, int):
            other = CohPoly.const(other, len(next(iter(self.c))) if self.c else 0)
        return self.c == other.c

    def __hash__(self):
        return hash(frozenset(self.c.items()))

    def __bool__(self):
        return bool(self.c)

    def act(self, W, w):
        """The Weyl action through the fundamental-coordinate matrices."""
        mat = W.mats[w]
        r = len(mat)
        gens = [
            CohPoly.linear(tuple(mat[i][j] for i in range(r)))
            for j in range(r)
        ]
        out = CohPoly()
        for k, x in self.c.items():
            term = CohPoly.const(x, r)
            for j, e in enumerate(k):
                for _ in range(e):
                    term = term * gens[j]
            out = out + term
        return out

    def exact_div(self, other):
        """Exact quotient, or None; same box-bounded reduction as the
        character ring, with all exponents non-negative."""
        if not other:
            raise ZeroDivisionError
        if not self:
            return CohPoly()
        n = len(next(iter(self.c)))
        qmax = tuple(
            max(k[i] for k in self.c) - max(k[i] for k in other.c)
            for i in range(n)
        )
        if any(q < 0 for q in qmax):
            return None
        dk = max(other.c)
        dc = other.c[dk]
        rem = dict(self.c)
        quot = {}
        while rem:
            rk = max(rem)
            qk = tuple(a - b for a, b in zip(rk, dk))
            if any(c < 0 or c > hi for c, hi in zip(qk, qmax)):
                return None
            qc = rem[rk] / dc
            quot[qk] = quot.get(qk, 0) + qc
            for k, x in other.c.items():
                kk = tuple(a + b for a, b in zip(k, qk))
                s = rem.get(kk, 0) - qc * x
                if s:
                    rem[kk] = s
                elif kk in rem:
                    del rem[kk]
        return CohPoly(quot)

    def render(self):
        if not self.c:
            return "0"
        parts = []
        for k in sorted(self.c, reverse=True):
            mono = "*".join(
                ("w%d" % (i + 1)) if e == 1 else "w%d^%d" % (i + 1, e)
                for i, e in enumerate(k)
                if e
            )
            x = self.c[k]
            if not mono:
                parts.append(str(x))
            elif x == 1:
                parts.append(mono)
            elif x == -1:
                parts.append("-" + mono)
            else:
                parts.append("%s*%s" % (x, mono))
        return " + ".join(parts).replace("+ -", "- ")

    def __repr__(self):
        return "CohPoly(%s)" % self.render()


class CohFrac:
    """num / prod(factors) over CohPoly, factors kept in factored form."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=()):
        if not num:
            den = ()
        self.num = num
        self.den = tuple(den)

    def _reduce(self):
        if not self.num:
            return CohFrac(CohPoly())
        num = self.num
        kept = []
        for f in self.den:
            if len(f.c) == 1:
                (k, x), = f.c.items()
                if not any(k):
                    num = num * (1 / x)
                    continue
            q = num.exact_div(f)
            if q is not None:
                num = q
            else:
                kept.append(f)
        return CohFrac(num, kept)

    def __add__(self, other):
        if not other.num:
            return self
        if not self.num:
            return other
        c1 = Counter(self.den)
        c2 = Counter(other.den)
        lcm = c1 | c2
        n1 = self.num
        for f in (lcm - c1).elements():
            n1 = n1 * f
        n2 = other.num
        for f in (lcm - c2).elements():
            n2 = n2 * f
        return CohFrac(n1 + n2, tuple(lcm.elements()))._reduce()

    def __neg__(self):
        return CohFrac(-self.num, self.den)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return CohFrac(self.num * other, self.den)
        if isinstance(other, CohPoly):
            other = CohFrac(other)
        return CohFrac(self.num * other.num, self.den + other.den)._reduce()

    __rmul__ = __mul__

    def inverse(self):
        if not self.num:
            raise ZeroDivisionError
        rank = len(next(iter(self.num.c)))
        den = CohPoly.const(1, rank)
        for f in self.den:
            den = den * f
        return CohFrac(den, (self.num,))._reduce()

    def __truediv__(self, other):
        if isinstance(other, CohPoly):
            other = CohFrac(other)
        return self * other.inverse()

    def __bool__(self):
        return bool(self.num)

    def __eq__(self, other):
        if isinstance(other, int) and other == 0:
            return not self.num
        if isinstance(other, CohPoly):
            other = CohFrac(other)
        return not (self - other).num

    def as_poly(self):
        r = self._reduce()
        num = r.num
        for f in r.den:
            q = num.exact_div(f) if num else CohPoly()
            if q is None:
                return None
            num = q
        return num

    def map_poly(self, f):
        return CohFrac(f(self.num), tuple(f(g) for g in self.den))

    def render(self):
        p = self.as_poly()
        if p is not None:
            return p.render()
        s = "(%s)" % self.num.render()
        for f in self.den:
            s += " / (%s)" % f.render()
        return s

    def __repr__(self):
        return "CohFrac(%s)" % self.render()


# -- degenerate affine Hecke algebra -----------------------------------

class DegenerateHecke:
    """Elements are maps w -> CohPoly meaning sum p_w(x) T_w (with the
    polynomial part written on the left)."""

    def __init__(self, rs):
        self.rs = rs
        self.W = rs.weyl()

    def _alpha_poly(self, i):
        rs = self.rs
        return CohPoly.linear(tuple(rs.cartan[k][i] for k in range(rs.rank)))

    def demazure(self, i, p):
        """partial_i(p) = (p - s_i p) / alpha_i, always polynomial."""
        si = self.W.from_word((i,))
        diff = p - p.act(self.W, si)
        q = diff.exact_div(self._alpha_poly(i))
        assert q is not None, "Demazure difference not divisible"
        return q

    def t_left(self, i, elem):
        """T_i . (sum p_w T_w) with T_i x_lam = x_{s_i lam} T_i - <lam, a_i^vee>."""
        W = self.W
        si = W.from_word((i,))
        out = {}

        def put(w, p):
            s = out.get(w, CohPoly()) + p
            if s:
                out[w] = s
            elif w in out:
                del out[w]

        for w, p in elem.items():
            put(W.mul(si, w), p.act(W, si))
            put(w, -self.demazure(i, p))
        return out

    def t_w_times_x(self, w, lam_fund):
        """T_w x_lambda rewritten to normal form by direct relation use."""
        W = self.W
        elem = {0: CohPoly.linear(lam_fund)}
        for i in reversed(W.word(w)):
            elem = self.t_left(i, elem)
        return elem

    def commute_closed(self, w, lam_fund):
        """The commutation lemma's right-hand side:

            x_{w lambda} T_w - sum_{alpha>0, w s_alpha < w}
                <lambda, alpha^vee> T_{w s_alpha}.
        """
        rs = self.rs
        W = self.W
        wl = CohPoly.linear(lam_fund).act(W, w)
        out = {w: wl} if wl else {}
        for a in rs.positive_roots:
            ws = W.mul(w, W.reflection(a))
            if W.length[ws] < W.length[w]:
                pairing = rs.pairing(lam_fund, a)
                if pairing:
                    s = out.get(ws, CohPoly()) - CohPoly.const(
                        pairing, rs.rank
                    )
                    if s:
                        out[ws] = s
                    elif ws in out:
                        del out[ws]
        return out


# -- cohomological localization oracle ---------------------------------

class CohOracle:
    """H_T*(G/B) by restriction to fixed points, CohFrac valued."""

    def __init__(self, rs):
        self.rs = rs
        self.W = rs.weyl()
        self.rank = rs.rank
        self.N = rs.n_positive()
        W = self.W
        self._eul = []
        for w in range(W.n):
            facs = []
            for a in rs.positive_roots:
                wa = CohPoly.linear(a.fund).act(W, w)
                facs.append(-wa)
            self._eul.append(tuple(facs))
        self._order = sorted(
            range(W.n), key=lambda x: (W.length[x], W.words[x])
        )
        self._csm = None
        self._sm = None

    def point_class(self):
        g = CohPoly.const(1, self.rank)
        for f in self._eul[0]:
            g = g * f
        return {0: CohFrac(g)}

    def first_chern(self, lam_fund):
        """c1(L_lambda)|_v = v(lambda)."""
        W = self.W
        lam = CohPoly.linear(lam_fund)
        out = {}
        for v in range(W.n):
            p = lam.act(W, v)
            if p:
                out[v] = CohFrac(p)
        return out

    def mul(self, F, G):
        out = {}
        for w, f in F.items():
            if w in G:
                p = f * G[w]
                if p:
                    out[w] = p
        return out

    def add(self, F, G):
        out = dict(F)
        for w, g in G.items():
            s = out.get(w, CohFrac(CohPoly())) + g
            if s:
                out[w] = s
            elif w in out:
                del out[w]
        return out

    def dl_left(self, i, F):
        """T_i = ((alpha_i + 1)/alpha_i) s_i^L - 1/alpha_i pointwise."""
        rs = self.rs
        W = self.W
        ai = CohPoly.linear(tuple(rs.cartan[k][i] for k in range(rs.rank)))
        c1 = CohFrac(ai + CohPoly.const(1, rs.rank), (ai,))
        c2 = CohFrac(CohPoly.const(1, rs.rank), (ai,))
        si = W.from_word((i,))
        out = {}
        for w in range(W.n):
            sw = W.mul(si, w)
            acc = CohFrac(CohPoly())
            if sw in F:
                moved = F[sw].map_poly(lambda p: p.act(W, si))
                acc = acc + c1 * moved
            if w in F:
                acc = acc - c2 * F[w]
            if acc:
                out[w] = acc
        return out

    def csm(self, w):
        """c_SM(X(w)^o) by the Demazure-Lusztig recursion."""
        if self._csm is None:
            self._csm = {0: self.point_class()}
        cache = self._csm
        if w not in cache:
            word = self.W.word(w)
            rest = self.W.from_word(word[1:])
            cache[w] = self.dl_left(word[0], self.csm(rest))
        return cache[w]

    def integral(self, F):
        acc = CohFrac(CohPoly())
        for w, f in F.items():
            acc = acc + CohFrac(f.num, f.den + self._eul[w])
        p = acc.as_poly()
        assert p is not None, "integral is not polynomial"
        return p

    def pair(self, F, G):
        return self.integral(self.mul(F, G))

    def sm_y(self, u):
        """s_M(Y(u)^o): the basis dual to the CSM classes."""
        if self._sm is None:
            self._sm = self._solve_sm()
        return self._sm[u]

    def _solve_sm(self):
        W = self.W
        sm = {u: {} for u in range(W.n)}
        inv_eul = {
            w: CohFrac(CohPoly.const(1, self.rank), self._eul[w])
            for w in range(W.n)
        }
        for w in self._order:
            cw = self.csm(w)
            diag = (cw[w] * inv_eul[w]).inverse()
            for u in range(W.n):
                acc = CohFrac(CohPoly.const(1 if u == w else 0, self.rank))
                for v, f in cw.items():
                    if v != w and v in sm[u]:
                        acc = acc - f * sm[u][v] * inv_eul[v]
                val = acc * diag
                if val:
                    sm[u][w] = val
        return sm

    def expand_chern_product(self, lam_fund, w):
        """{u: coefficient} of c1(L_lambda) . csm(X(w)^o) in the CSM
        basis, by pairing with the dual basis."""
        W = self.W
        F = self.mul(self.first_chern(lam_fund), self.csm(w))
        out = {}
        for u in range(W.n):
            if not W.leq(u, w):
                continue
            p = self.pair(F, self.sm_y(u))
            if p:
                out[u] = p
        return out


# -- closed Chevalley formulas -----------------------------------------

def csm_chevalley(rs, lam_fund, w, parabolic=()):
    """{u in W^P: CohPoly} for c1(L_lambda) . csm(X(w W_P)^o)."""
    W = rs.weyl()
    if any(lam_fund[i] for i in parabolic):
        raise ValueError("lambda must pair to zero with the parabolic roots")
    if W.min_coset_rep(w, parabolic) != w:
        raise ValueError("w must be a minimal coset representative")
    out = {}
    diag = CohPoly.linear(lam_fund).act(W, w)
    if diag:
        out[w] = diag
    for a in rs.positive_roots:
        ws = W.mul(w, W.reflection(a))
        if W.length[ws] < W.length[w]:
            pairing = rs.pairing(lam_fund, a)
            if pairing:
                u = W.min_coset_rep(ws, parabolic)
                s = out.get(u, CohPoly()) - CohPoly.const(pairing, rs.rank)
                if s:
                    out[u] = s
                elif u in out:
                    del out[u]
    return out


def sm_chevalley(rs, lam_fund, w, parabolic=()):
    """{u in W^P: CohPoly} for c1(L_lambda) . s_M(Y(w W_P)^o), where the
    correction runs over alpha > 0 with w s_alpha > w."""
    W = rs.weyl()
    if any(lam_fund[i] for i in parabolic):
        raise ValueError("lambda must pair to zero with the parabolic roots")
    if W.min_coset_rep(w, parabolic) != w:
        raise ValueError("w must be a minimal coset representative")
    out = {}
    diag = CohPoly.linear(lam_fund).act(W, w)
    if diag:
        out[w] = diag
    for a in rs.positive_roots:
        ws = W.mul(w, W.reflection(a))
        if W.length[ws] > W.length[w]:
            pairing = rs.pairing(lam_fund, a)
            if pairing:
                u = W.min_coset_rep(ws, parabolic)
                s = out.get(u, CohPoly()) - CohPoly.const(pairing, rs.rank)
                if s:
                    out[u] = s
                elif u in out:
                    del out[u]
    return out
