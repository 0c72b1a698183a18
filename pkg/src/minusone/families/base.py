"""Catalog scaffolding: family records, parameter handling, weight descriptions."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

from ..precision import PrecisionContext


class UnknownFamilyError(KeyError):
    pass


class ParameterError(ValueError):
    """Parameters outside a family's schema, or hitting a printed denominator zero."""


class InadmissibleParameterError(ParameterError):
    """Parameters violate the admissibility clause of an orthogonality relation."""

    def __init__(self, message, clause=""):
        super().__init__(message)
        self.clause = clause


class NoEigenSystemError(LookupError):
    """Family has no eigenvalue equation on record."""


class NoClosedFormError(LookupError):
    """Family has no hypergeometric closed form on record."""


class NoWeightError(LookupError):
    """Family has no continuous orthogonality measure on record."""


@dataclass(frozen=True)
class FamilyInfo:
    id: str
    name: str
    params: tuple
    kind: str                 # "scheme" | "quasi" | "helper" | "q-aux"
    row: int | None           # parameter-count row in the scheme chart (scheme families)
    admissible: str           # human-readable admissibility clause
    anchor: str               # source anchor for the formulas, e.g. "A.3"
    external: bool = False    # data sourced from the standard hypergeometric catalog
    has_weight: bool = True
    has_eigen: bool = True
    symmetric: bool = False   # b_n identically zero
    variable: str = "x"


@dataclass(frozen=True)
class RecurrencePair:
    """Coefficients of x P_n = P_{n+1} + b_n P_n + u_n P_{n-1}."""
    b: object
    u: object
    A: object = None          # optional printed (A_n, C_n) decomposition
    C: object = None
    combine: str | None = None  # how (A, C) produce (b, u), e.g. "one-minus"


@dataclass
class SupportComponent:
    lo: object
    hi: object
    exp_lo: object = 0        # algebraic endpoint exponent; None at an infinite end
    exp_hi: object = 0
    decay_lo: str | None = None   # "gaussian" | "gamma-modulus" at infinite ends
    decay_hi: str | None = None


@dataclass
class WeightSpec:
    family: str
    components: list
    density: Callable                # includes any sign factor; nonnegative on the support
    measure_prefactor: object = 1    # multiplies the raw integral in the printed inner product
    notes: str = ""

    def total_support(self):
        return [(c.lo, c.hi) for c in self.components]


@dataclass
class EigenSystem:
    family: str
    operator: object                 # DunklOperator
    eigenvalue: Callable             # n -> lambda_n (free parameter already bound)
    free_name: str | None = None     # "sigma" / "epsilon" when the eigenvalue carries one
    free_value: object = None
    variable_scale: object = 1       # operator acts on P_n(s*x)/s**n
    notes: str = ""


def get_param(params: dict, name: str, ctx: PrecisionContext, default=None):
    if name not in params:
        if default is not None:
            return ctx.mp.mpf(default)
        raise ParameterError("missing parameter %r" % name)
    v = params[name]
    if isinstance(v, str):
        return ctx.mp.mpf(v)
    if isinstance(v, complex):
        return ctx.mp.mpc(v)
    return ctx.mp.convert(v)


def require_nonzero(value, what, ctx: PrecisionContext):
    if abs(value) <= ctx.tol(4) * 10:
        raise ParameterError("printed denominator vanishes: %s = %s" % (what, ctx.mp.nstr(value)))
    return value
