"""Named verification suites over the identities the library implements.

Each suite expands to a list of independent cases; a case is a
top-level function plus JSON-simple arguments so suites can fan out
across a process pool.  Cases return None on success and a short
failure description otherwise.
"""

from __future__ import annotations

import itertools
from multiprocessing import Pool

from .params import Scalar
from .charring import GA, Frac
from .rootsystem import RootSystem
from .alcove import chain_lex_height
from .chevalley import (
    chevalley_table,
    duality_check,
    positivity_terms,
)
from .oracle import KOracle, StableBasis


def _table_fn(rs):
    def fn(w, lam_fund, sign):
        return chevalley_table(rs, lam_fund, w, sign=sign)
    return fn


def _lams_pm_fund_rho(rank):
    out = []
    for i in range(rank):
        e = tuple(1 if j == i else 0 for j in range(rank))
        out.append(e)
        out.append(tuple(-c for c in e))
    out.append((1,) * rank)
    out.append((-1,) * rank)
    return out


# -- case functions ----------------------------------------------------

def case_duality(family, rank, kind, lam):
    rs = RootSystem(family, rank)
    W = rs.weyl()
    fn = _table_fn(rs)
    for w in range(W.n):
        for u in range(W.n):
            lhs, rhs = duality_check(rs, tuple(lam), w, u, kind, fn)
            if lhs != rhs:
                return "duality %s fails at u=%s w=%s lambda=%s" % (
                    kind, W.word_str(u), W.word_str(w), lam,
                )
    return None


def case_oracle_equivalence(family, rank, lam):
    rs = RootSystem(family, rank)
    W = rs.weyl()
    o = KOracle(rs)
    for w in range(W.n):
        a = chevalley_table(rs, tuple(lam), w, sign=1)
        b = o.expand_product(tuple(lam), w)
        for u in set(a) | set(b):
            if a.get(u, GA()) != b.get(u, GA()):
                return "oracle mismatch at u=%s w=%s lambda=%s" % (
                    W.word_str(u), W.word_str(w), lam,
                )
    return None


def case_methods_agree(family, rank, lam):
    rs = RootSystem(family, rank)
    W = rs.weyl()
    for w in range(W.n):
        a = chevalley_table(rs, tuple(lam), w, sign=1, method="chain")
        b = chevalley_table(rs, tuple(lam), w, sign=1, method="bridge")
        c = chevalley_table(rs, tuple(lam), w, sign=1, method="operator")
        for u in set(a) | set(b) | set(c):
            ga, gb, gc = (t.get(u, GA()) for t in (a, b, c))
            if not (ga == gb == gc):
                return "method mismatch at u=%s w=%s lambda=%s" % (
                    W.word_str(u), W.word_str(w), lam,
                )
    return None


def case_stable(family, rank, lam):
    rs = RootSystem(family, rank)
    W = rs.weyl()
    o = KOracle(rs)
    sb = StableBasis(o)
    for w in range(W.n):
        for v in sb.stab(w):
            if not W.leq(w, v):
                return "stab support fails at w=%s" % W.word_str(w)
    for i in range(rank):
        for w in range(W.n):
            lhs, rhs = sb.hecke_T_on_stab(i, w)
            if not o.classes_equal(lhs, rhs):
                return "Hecke action on stab fails at i=%d w=%s" % (
                    i + 1, W.word_str(w),
                )
    S = sb.shift_matrix(tuple(lam))
    M = sb.wall_cross_path(tuple(lam))
    for w in range(W.n):
        for z in range(W.n):
            acc = GA()
            for x, c in M[w].items():
                if z in S[x]:
                    acc = acc + c * S[x][z]
            want = GA.const(1 if w == z else 0, rank)
            if acc != want:
                return "wall-crossing composition fails at (%s, %s)" % (
                    W.word_str(w), W.word_str(z),
                )
    return None


def case_hl(family, rank, lam):
    from .specialfn import hall_littlewood, big_h
    rs = RootSystem(family, rank)
    closed = hall_littlewood(rs, tuple(lam), "closed")
    for method in ("chain_restricted", "chain_opposite"):
        if closed != hall_littlewood(rs, tuple(lam), method):
            return "HL method %s disagrees at lambda=%s" % (method, lam)
    if closed != big_h(rs, tuple(-c for c in lam)).star():
        return "HL bridge through H_{-lambda} fails at lambda=%s" % (lam,)
    return None


def case_whittaker(family, rank, lam):
    from .specialfn import (
        whittaker, whittaker_chevalley,
        casselman_shalika_sides, whittaker_r_sides,
    )
    rs = RootSystem(family, rank)
    W = rs.weyl()
    for w in range(W.n):
        if whittaker(rs, tuple(lam), w) != whittaker_chevalley(
            rs, tuple(lam), w
        ):
            return "Whittaker methods disagree at w=%s lambda=%s" % (
                W.word_str(w), lam,
            )
    a, b = casselman_shalika_sides(rs, tuple(lam))
    if a != b:
        return "Casselman-Shalika fails at lambda=%s" % (lam,)
    a, b = whittaker_r_sides(rs, tuple(lam))
    if a != b:
        return "Whittaker R-function identity fails at lambda=%s" % (lam,)
    return None


def case_csm(family, rank, lam):
    from .csm import CohOracle, CohPoly, DegenerateHecke, csm_chevalley
    rs = RootSystem(family, rank)
    W = rs.weyl()
    o = CohOracle(rs)
    for w in range(W.n):
        a = csm_chevalley(rs, tuple(lam), w)
        b = o.expand_chern_product(tuple(lam), w)
        for u in set(a) | set(b):
            if a.get(u, CohPoly()) != b.get(u, CohPoly()):
                return "CSM Chevalley mismatch at u=%s w=%s lambda=%s" % (
                    W.word_str(u), W.word_str(w), lam,
                )
    dh = DegenerateHecke(rs)
    for w in range(W.n):
        lhs = dh.t_w_times_x(w, tuple(lam))
        rhs = dh.commute_closed(w, tuple(lam))
        if set(lhs) != set(rhs) or any(lhs[u] != rhs[u] for u in lhs):
            return "degenerate commutation fails at w=%s lambda=%s" % (
                W.word_str(w), lam,
            )
    return None


def case_positivity(family, rank, lam):
    rs = RootSystem(family, rank)
    W = rs.weyl()
    if not all(c >= 0 for c in lam):
        return "lambda %s is not dominant" % (lam,)
    chain = chain_lex_height(rs, tuple(lam))
    for w in range(W.n):
        positivity_terms(chain, w)
    return None


_CASE_FUNCS = {
    "duality": case_duality,
    "oracle": case_oracle_equivalence,
    "methods": case_methods_agree,
    "stable": case_stable,
    "hl": case_hl,
    "whittaker": case_whittaker,
    "csm": case_csm,
    "positivity": case_positivity,
}


def _lams_box(rank, max_weight):
    return [
        lam
        for lam in itertools.product(
            range(-max_weight, max_weight + 1), repeat=rank
        )
        if any(lam)
    ]


def _dominant_lams(rank, max_weight):
    return [
        lam
        for lam in itertools.product(range(0, max_weight + 1), repeat=rank)
        if any(lam)
    ]


def suite_cases(suite, family, rank, max_weight=2):
    """List of (case_id, func_name, args) for a named suite."""
    cases = []

    def add(func, *args):
        cases.append(("%s(%s)" % (func, ",".join(map(str, args))), func, args))

    if suite in ("dualities", "all"):
        for kind in ("serre", "star", "dynkin", "star_dynkin", "palindromic"):
            for lam in _lams_pm_fund_rho(rank):
                add("duality", family, rank, kind, lam)
    if suite in ("oracle", "all"):
        for lam in _lams_box(rank, max_weight):
            add("oracle", family, rank, lam)
    if suite in ("methods", "all"):
        for lam in _lams_pm_fund_rho(rank):
            add("methods", family, rank, lam)
    if suite in ("stable", "all"):
        for lam in _dominant_lams(rank, max_weight)[:3]:
            add("stable", family, rank, lam)
    if suite in ("hl", "all"):
        for lam in _dominant_lams(rank, max_weight):
            add("hl", family, rank, lam)
    if suite in ("whittaker", "all"):
        for lam in _lams_pm_fund_rho(rank):
            if all(c <= 0 for c in lam):
                add("whittaker", family, rank, lam)
    if suite in ("csm", "all"):
        for lam in _lams_pm_fund_rho(rank):
            if all(c >= 0 for c in lam):
                add("csm", family, rank, lam)
    if suite in ("positivity", "all"):
        for lam in _dominant_lams(rank, max_weight):
            add("positivity", family, rank, lam)
    if not cases:
        raise ValueError("unknown suite %r" % suite)
    return cases


def _run_one(item):
    case_id, func, args = item
    try:
        detail = _CASE_FUNCS[func](*args)
    except Exception as exc:  # surfaced as a failure, not a crash
        detail = "exception: %r" % (exc,)
    return case_id, detail


def run_suite(suite, family, rank, max_weight=2, jobs=1):
    """Run a suite; returns a list of (case_id, failure_or_None)."""
    cases = suite_cases(suite, family, rank, max_weight)
    if jobs > 1:
        with Pool(jobs) as pool:
            return pool.map(_run_one, cases)
    return [_run_one(c) for c in cases]
