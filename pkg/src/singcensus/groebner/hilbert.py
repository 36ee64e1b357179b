"""Dimension and degree of a quotient ring from its leading-term staircase.

Two independent readings are cross-checked on every query: the Krull
dimension from the maximal independent variable subset of the staircase, and
the pole order of the Hilbert series at t = 1.  The numerator of the series
(computed by the standard pivot recursion on the monomial ideal) evaluated at
t = 1 after cancelling the pole gives the degree, with multiplicity, of the
top-dimensional part.
"""

from dataclasses import dataclass
from itertools import combinations

from ..errors import InternalCheckError


@dataclass(frozen=True)
class DimensionDegree:
    """affine_dim is the Krull dimension of the affine cone (-1 for the unit
    ideal); projective_dim = affine_dim - 1 floored at -1; degree is 0 when
    the projective scheme is empty and >= 1 otherwise."""

    affine_dim: int
    projective_dim: int
    degree: int


def staircase_dimension(leads, nvars):
    """Krull dimension of k[x]/I from the leading exponent tuples of a
    reduced basis: the largest variable subset S such that no leading
    monomial is supported inside S.  -1 for the unit ideal."""
    leads = list(leads)
    if any(not any(e) for e in leads):
        return -1
    supports = [frozenset(i for i, e in enumerate(ex) if e) for ex in leads]
    for size in range(nvars, 0, -1):
        for subset in combinations(range(nvars), size):
            s = frozenset(subset)
            if not any(sup <= s for sup in supports):
                return size
    return 0


def _minimalize(gens):
    """Minimal generating set of a monomial ideal given as exponent tuples."""
    gens = sorted(set(gens), key=sum)
    out = []
    for g in gens:
        if not any(all(a <= b for a, b in zip(m, g)) for m in out):
            out.append(g)
    return out


def _poly_mul(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] += x * y
    return out


def _poly_add(a, b, shift=0):
    out = list(a) + [0] * max(0, shift + len(b) - len(a))
    for j, y in enumerate(b):
        out[shift + j] += y
    while len(out) > 1 and out[-1] == 0:
        out.pop()
    return out


def hilbert_numerator(leads, nvars):
    """Coefficients of N(t) with Hilbert series of k[x]/I equal to
    N(t) / (1-t)^nvars, for the monomial ideal generated by `leads`."""
    memo = {}

    def rec(gens):
        gens = tuple(sorted(gens))
        hit = memo.get(gens)
        if hit is not None:
            return hit
        if not gens:
            res = [1]
        elif any(not any(g) for g in gens):
            res = [0]
        else:
            # pairwise-disjoint supports form a regular sequence: product
            # formula.  This also guarantees the pivot below touches at
            # least two generators, so both split branches strictly shrink.
            supports = [[i for i, e in enumerate(g) if e] for g in gens]
            flat = [i for s in supports for i in s]
            if len(set(flat)) == len(flat):
                res = [1]
                for g in gens:
                    a = sum(g)
                    factor = [1] + [0] * (a - 1) + [-1]
                    res = _poly_mul(res, factor)
            else:
                # pivot on the most frequent variable
                counts = [0] * len(gens[0])
                for g in gens:
                    for i, e in enumerate(g):
                        if e:
                            counts[i] += 1
                piv = counts.index(max(counts))
                unit = tuple(1 if i == piv else 0 for i in range(len(gens[0])))
                plus = _minimalize([g for g in gens if g[piv] == 0] + [unit])
                colon = _minimalize(
                    [
                        tuple(e - 1 if i == piv and e else e for i, e in enumerate(g))
                        for g in gens
                    ]
                )
                res = _poly_add(rec(plus), rec(colon), shift=1)
        memo[gens] = res
        return res

    return rec(tuple(_minimalize(tuple(map(tuple, leads)))))


def _shave_pole(num):
    """Divide N(t) by (1-t) as often as it divides exactly; returns the
    multiplicity and the quotient."""
    mult = 0
    cur = list(num)
    while sum(cur) == 0 and any(cur):
        nxt = []
        acc = 0
        for a in cur[:-1]:
            acc += a
            nxt.append(acc)
        while len(nxt) > 1 and nxt[-1] == 0:
            nxt.pop()
        cur = nxt if nxt else [0]
        mult += 1
    return mult, cur


def dimension_degree_from_leads(leads, nvars):
    """(affine_dim, degree-of-top-part) for the cone cut out by a monomial
    staircase; degree convention: value of the cancelled numerator at t=1."""
    leads = [tuple(e) for e in leads]
    dim = staircase_dimension(leads, nvars)
    if dim == -1:
        return -1, 0
    num = hilbert_numerator(leads, nvars)
    mult, reduced = _shave_pole(num)
    pole_dim = nvars - mult
    if pole_dim != dim:
        raise InternalCheckError(
            f"staircase dimension {dim} disagrees with Hilbert-series pole {pole_dim}"
        )
    degree = sum(reduced)
    if degree < 1:
        raise InternalCheckError("nonpositive degree from Hilbert numerator")
    return dim, degree
