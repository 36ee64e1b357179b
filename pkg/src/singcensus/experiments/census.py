"""Singular-locus censuses over a prime field.

A census walks degree-l forms in n+1 variables — every nonzero one, or a
seeded random sample — and records the dimension and degree of each form's
singular locus.  The square-multiple census additionally enumerates the
forms divisible by a nontrivial square and compares that set against the
forms whose singular locus has codimension one.
"""

import time
from dataclasses import dataclass
from fractions import Fraction

from ..algebra.field import PrimeField
from ..algebra.poly import GradedSpace
from ..control import check_cap, fresh_seed, rational_json, trial_rng
from ..errors import ValidationError
from ..groebner import sing_dim_deg

__all__ = [
    "CensusRecord",
    "CensusSummary",
    "census",
    "write_census_csv",
    "CSV_HEADER",
    "square_multiple_set",
    "SquarefreeReport",
    "squarefree_census",
]

CSV_HEADER = "seed,trial,q,n,b,l,sing_dim,sing_deg,elapsed_ms"


@dataclass(frozen=True)
class CensusRecord:
    """One measured form: identity of the trial plus its singular locus."""

    seed: int
    index: int
    q: int
    n: int
    b: int
    l: int
    sing_dim: int
    sing_deg: int
    elapsed_ms: int

    def csv_row(self) -> str:
        return (
            f"{self.seed},{self.index},{self.q},{self.n},{self.b},{self.l},"
            f"{self.sing_dim},{self.sing_deg},{self.elapsed_ms}"
        )


@dataclass(frozen=True)
class CensusSummary:
    """Aggregate view: counts per singular-locus dimension and the
    empirical probability that the dimension reaches b."""

    n: int
    b: int
    l: int
    q: int
    mode: str
    trials: int
    seed: int
    histogram: dict
    prob_sing_dim_ge_b: Fraction

    def to_json_dict(self):
        return {
            "n": self.n,
            "b": self.b,
            "l": self.l,
            "q": self.q,
            "mode": self.mode,
            "trials": self.trials,
            "seed": self.seed,
            "histogram": {
                str(dim): self.histogram[dim] for dim in sorted(self.histogram)
            },
            "prob_sing_dim_ge_b": rational_json(self.prob_sing_dim_ge_b),
        }


def _validate_nbl(n: int, b: int, l: int) -> None:
    if n < 3:
        raise ValidationError("n >= 3 required")
    if not 1 <= b <= n - 1:
        raise ValidationError("1 <= b <= n-1 required")
    if l < 1:
        raise ValidationError("l >= 1 required")


def census(
    n: int,
    b: int,
    l: int,
    field: PrimeField,
    mode: str = "sample",
    trials: int | None = None,
    seed: int | None = None,
    cap=None,
):
    """Measure singular loci of degree-l forms; returns (records, summary).

    ``sample`` mode draws ``trials`` nonzero forms, each from its own
    (seed, index) random stream, so results do not depend on execution
    order.  ``exhaustive`` mode walks every nonzero form in coefficient-code
    order with seed recorded as 0 and index equal to the code.
    """
    _validate_nbl(n, b, l)
    space = GradedSpace(field, n + 1, l, GradedSpace.HOMOGENEOUS)
    q = field.p
    records = []

    def measure(index, seed_val, form):
        t0 = time.perf_counter()
        dd = sing_dim_deg(form)
        elapsed = round((time.perf_counter() - t0) * 1000)
        records.append(
            CensusRecord(
                seed=seed_val,
                index=index,
                q=q,
                n=n,
                b=b,
                l=l,
                sing_dim=dd.projective_dim,
                sing_deg=dd.degree,
                elapsed_ms=elapsed,
            )
        )

    if mode == "exhaustive":
        check_cap(space.size(), cap, what="exhaustive census")
        seed = 0
        for code, form in enumerate(space.iter_all()):
            if form.is_zero:
                continue
            measure(code, 0, form)
    elif mode == "sample":
        if trials is None or trials < 1:
            raise ValidationError("sample mode needs trials >= 1")
        if seed is None:
            seed = fresh_seed()
        for index in range(trials):
            rng = trial_rng(seed, index)
            measure(index, seed, space.sample_nonzero(rng))
    else:
        raise ValidationError(f"unknown census mode {mode!r}")

    histogram = {}
    hits = 0
    for rec in records:
        histogram[rec.sing_dim] = histogram.get(rec.sing_dim, 0) + 1
        if rec.sing_dim >= b:
            hits += 1
    summary = CensusSummary(
        n=n,
        b=b,
        l=l,
        q=q,
        mode=mode,
        trials=len(records),
        seed=seed,
        histogram=histogram,
        prob_sing_dim_ge_b=Fraction(hits, len(records)),
    )
    return records, summary


def write_census_csv(records, fh) -> None:
    """Stream records as CSV with the fixed header."""
    fh.write(CSV_HEADER + "\n")
    for rec in records:
        fh.write(rec.csv_row() + "\n")


def square_multiple_set(n: int, l: int, field: PrimeField, cap=None):
    """Enumerate the forms G^2 * H (G nonzero of degree e = 1..l//2, H
    nonzero of the complementary degree).

    Returns (representatives, pair_count, fiber_sizes): a dict from
    canonical form key to one representative polynomial, the number of
    (G, H) pairs walked, and the per-form count of pairs that produced it.
    """
    if l < 2:
        raise ValidationError("l >= 2 required for a square factor")
    q = field.p
    nv = n + 1
    spaces = {}

    def space_of(deg):
        if deg not in spaces:
            spaces[deg] = GradedSpace(field, nv, deg, GradedSpace.HOMOGENEOUS)
        return spaces[deg]

    total_pairs = 0
    for e in range(1, l // 2 + 1):
        total_pairs += (space_of(e).size() - 1) * (space_of(l - 2 * e).size() - 1)
    check_cap(total_pairs, cap, what="square-multiple enumeration")

    reps = {}
    fibers = {}
    pair_count = 0
    for e in range(1, l // 2 + 1):
        for G in space_of(e).iter_all():
            if G.is_zero:
                continue
            G2 = G * G
            for H in space_of(l - 2 * e).iter_all():
                if H.is_zero:
                    continue
                F = G2 * H
                pair_count += 1
                key = F.canonical_key()
                if key not in reps:
                    reps[key] = F
                fibers[key] = fibers.get(key, 0) + 1
    return reps, pair_count, fibers


@dataclass(frozen=True)
class SquarefreeReport:
    """Comparison of {divisible by a square} against {singular locus of
    codimension one} for degree-l forms."""

    n: int
    l: int
    q: int
    mode: str
    trials: int
    seed: int
    image_size: int
    pair_count: int
    max_fiber: int
    member_violations: int
    checked: int
    mismatches: int

    @property
    def agree(self) -> bool:
        return self.member_violations == 0 and self.mismatches == 0

    def to_json_dict(self):
        return {
            "n": self.n,
            "l": self.l,
            "q": self.q,
            "mode": self.mode,
            "trials": self.trials,
            "seed": self.seed,
            "image_size": self.image_size,
            "pair_count": self.pair_count,
            "max_fiber": self.max_fiber,
            "member_violations": self.member_violations,
            "checked": self.checked,
            "mismatches": self.mismatches,
            "agree": self.agree,
        }


def squarefree_census(
    n: int,
    l: int,
    field: PrimeField,
    mode: str = "sample",
    trials: int | None = None,
    seed: int | None = None,
    cap=None,
) -> SquarefreeReport:
    """Check: sing_dim >= n-1 if and only if the form has a square factor.

    Every enumerated square multiple is verified to have a singular locus
    of dimension at least n-1; then sampled (or all) nonzero forms are
    tested both ways and disagreements counted.
    """
    if n < 3:
        raise ValidationError("n >= 3 required")
    reps, pair_count, fibers = square_multiple_set(n, l, field, cap=cap)
    threshold = n - 1
    member_violations = 0
    for form in reps.values():
        if sing_dim_deg(form).projective_dim < threshold:
            member_violations += 1

    space = GradedSpace(field, n + 1, l, GradedSpace.HOMOGENEOUS)
    mismatches = 0
    checked = 0

    def compare(form):
        nonlocal mismatches, checked
        checked += 1
        in_set = form.canonical_key() in reps
        deep = sing_dim_deg(form).projective_dim >= threshold
        if in_set != deep:
            mismatches += 1

    if mode == "exhaustive":
        check_cap(space.size(), cap, what="exhaustive square-free census")
        seed = 0
        for form in space.iter_all():
            if not form.is_zero:
                compare(form)
    elif mode == "sample":
        if trials is None or trials < 1:
            raise ValidationError("sample mode needs trials >= 1")
        if seed is None:
            seed = fresh_seed()
        for index in range(trials):
            rng = trial_rng(seed, index)
            compare(space.sample_nonzero(rng))
    else:
        raise ValidationError(f"unknown census mode {mode!r}")

    return SquarefreeReport(
        n=n,
        l=l,
        q=field.p,
        mode=mode,
        trials=trials if mode == "sample" else checked,
        seed=seed,
        image_size=len(reps),
        pair_count=pair_count,
        max_fiber=max(fibers.values()),
        member_violations=member_violations,
        checked=checked,
        mismatches=mismatches,
    )
