"""Public Groebner-basis interface on top of the term-list kernels."""

from dataclasses import dataclass
from typing import List, Sequence, Tuple, Union

from ..algebra.field import PrimeField
from ..algebra.poly import Poly
from ..errors import ValidationError
from . import kernel
from .orders import ELIM0, GREVLEX, LEX

_ORDER_CODES = {"grevlex": GREVLEX, "lex": LEX, "elim0": ELIM0}


@dataclass(frozen=True)
class MonomialOrder:
    """A monomial order on a fixed number of variables.

    kind: "grevlex" (the default everywhere), "lex", or "elim0" (variable 0
    eliminated first, grevlex on the rest — used for ideal intersection).
    """

    kind: str
    num_vars: int

    def __post_init__(self):
        if self.kind not in _ORDER_CODES:
            raise ValidationError(f"unknown monomial order {self.kind!r}")
        if self.num_vars < 1:
            raise ValidationError("num_vars >= 1 required")

    @property
    def code(self) -> int:
        return _ORDER_CODES[self.kind]


def _to_terms(poly: Poly) -> List[Tuple[Tuple[int, ...], int]]:
    return [(exps, c) for exps, c in poly.terms.items()]


def _from_terms(terms, field: PrimeField, nvars: int) -> Poly:
    return Poly(field, nvars, {tuple(exps): c for exps, c in terms})


class GroebnerBasis:
    """Reduced Groebner basis of an ideal in F_p[x0..x{nv-1}].

    Canonical for the given order: equal ideals yield term-for-term equal
    bases regardless of the generators handed in.  Immutable once built.
    """

    def __init__(self, generators: Sequence[Poly], order: MonomialOrder, field=None):
        self.generators = list(generators)
        self.order = order
        self.field = self.generators[0].field if self.generators else field
        self.reduced = True
        for g in self.generators:
            if g.nvars != order.num_vars:
                raise ValidationError("generator/order variable-count mismatch")

    @property
    def nvars(self) -> int:
        return self.order.num_vars

    def normal_form(self, f: Poly) -> Poly:
        if f.nvars != self.nvars:
            raise ValidationError("polynomial has the wrong number of variables")
        if not self.generators:
            return f
        if f.field != self.field:
            raise ValidationError("polynomial lives over a different prime field")
        raw = kernel.normal_form(
            _to_terms(f),
            [_to_terms(g) for g in self.generators],
            self.nvars,
            self.field.p,
            self.order.code,
        )
        return _from_terms(raw, self.field, self.nvars)

    def contains(self, f: Poly) -> bool:
        return self.normal_form(f).is_zero

    def is_unit_ideal(self) -> bool:
        return any(g.degree() == 0 for g in self.generators)

    def lead_exponents(self) -> List[Tuple[int, ...]]:
        return [g.sorted_terms()[0][0] for g in self.generators]

    def __len__(self):
        return len(self.generators)

    def __iter__(self):
        return iter(self.generators)

    def __eq__(self, other):
        if not isinstance(other, GroebnerBasis):
            return NotImplemented
        return self.order == other.order and self.generators == other.generators


def buchberger(
    gens: Sequence[Poly], order: Union[MonomialOrder, str] = "grevlex"
) -> GroebnerBasis:
    """Reduced Groebner basis of the ideal generated by gens.

    Empty input yields the zero ideal; then `order` must be a MonomialOrder
    (the variable count cannot be read off the generators).
    """
    gens = [g for g in gens if not g.is_zero]
    if not gens:
        if not isinstance(order, MonomialOrder):
            raise ValidationError(
                "zero ideal: pass a MonomialOrder carrying the variable count"
            )
        return GroebnerBasis([], order)
    field = gens[0].field
    nvars = gens[0].nvars
    for g in gens[1:]:
        if g.field != field:
            raise ValidationError("generators live over different prime fields")
        if g.nvars != nvars:
            raise ValidationError("generators disagree on the number of variables")
    if isinstance(order, str):
        order = MonomialOrder(order, nvars)
    elif order.num_vars != nvars:
        raise ValidationError("generator/order variable-count mismatch")
    raw = kernel.reduced_groebner(
        [_to_terms(g) for g in gens], nvars, field.p, order.code
    )
    return GroebnerBasis([_from_terms(t, field, nvars) for t in raw], order)


def normal_form(f: Poly, gb: GroebnerBasis) -> Poly:
    return gb.normal_form(f)


def ideal_membership(f: Poly, gb: GroebnerBasis) -> bool:
    return gb.contains(f)
