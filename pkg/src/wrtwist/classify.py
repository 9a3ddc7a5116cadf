"""Field-level statements: which fields have only the orthogonal twist, regulator
bounds, minimum product distance and sweep reports."""

from __future__ import annotations

import math
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from math import isqrt
from typing import Iterator

from .field import _is_square_free, new_field
from .ideals import Ideal, enumerate_principal_up_to_units, ideals_of_norm_at_most, min_nonzero_abs_norm, unit_ideal
from .twists import TwistClass, all_well_rounded_twists, enumeration_bound

REG_TOL = 1e-9


def is_square_free(D: int) -> bool:
    return D >= 2 and _is_square_free(D)


def square_free_range(lo: int, hi: int) -> list[int]:
    return [D for D in range(max(lo, 2), hi + 1) if _is_square_free(D)]


def is_special_form(D: int) -> bool:
    """D = s^2 + 1 with D = 2 (mod 4), or D = s^2 + 4 with D = 1 (mod 4)."""
    if D % 4 == 2:
        s = isqrt(D - 1)
        return s * s == D - 1
    if D % 4 == 1 and D >= 5:
        s = isqrt(D - 4)
        return s * s == D - 4
    return False


def regulator_bound_value(D: int) -> float:
    if D % 4 == 1:
        return math.log((math.sqrt(D - 4) + math.sqrt(D)) / 2)
    return math.log(math.sqrt(D - 1) + math.sqrt(D))


def regulator_lower_bound(D: int) -> tuple[float, bool]:
    """(bound, R_K - bound < 1e-9)."""
    bound = regulator_bound_value(D)
    return bound, new_field(D).regulator - bound < REG_TOL


def s_k_bound(disc: int) -> int:
    """1 + floor(sqrt(disc)/3)."""
    return 1 + isqrt(disc) // 3


def s_hat_k(disc: int) -> float:
    return s_k_bound(disc) / math.sqrt(disc)


def mpd_squared(I: Ideal) -> Fraction:
    """mpd(I)^2 = min|N|^2 / (N(I)^2 disc), exact."""
    m = min_nonzero_abs_norm(I)
    return Fraction(m * m, I.covolume_sq)


def mpd(I: Ideal) -> float:
    return min_nonzero_abs_norm(I) / (I.norm * math.sqrt(I.ctx.disc))


def twists_of_field(D: int) -> list[TwistClass]:
    return all_well_rounded_twists(unit_ideal(new_field(D)))


def unique_orthogonal_twist(D: int) -> bool:
    t = twists_of_field(D)
    return len(t) == 1 and t[0].cos_theta == 0


def orthogonal_twist_exists(D: int) -> tuple[bool, bool]:
    """(some twist is orthogonal, N(eps) == -1); the two must agree."""
    by_enum = any(t.cos_theta == 0 for t in twists_of_field(D))
    return by_enum, new_field(D).fund_unit_norm == -1


@dataclass
class FieldReport:
    D: int
    disc: int
    regulator: float
    reg_lower_bound: float
    reg_equality: bool
    fund_unit_norm: int
    twists: list[TwistClass]
    unique_orthogonal: bool
    s_k: int
    s_hat_k: float
    special_form: bool = False
    p_k: int = 0
    f4_classes: int = 0

    @property
    def twist_count(self) -> int:
        return len(self.twists)

    def row(self) -> dict:
        return {
            "D": self.D,
            "disc": self.disc,
            "regulator": self.regulator,
            "reg_lower_bound": self.reg_lower_bound,
            "reg_equality": self.reg_equality,
            "special_form": self.special_form,
            "fund_unit_norm": self.fund_unit_norm,
            "twist_count": self.twist_count,
            "f4_classes": self.f4_classes,
            "p_k": self.p_k,
            "unique_orthogonal": self.unique_orthogonal,
            "abs_cos": [f"{t.abs_cos.numerator}/{t.abs_cos.denominator}" for t in self.twists],
            "s_k": self.s_k,
            "s_hat_k": self.s_hat_k,
        }


def field_report(D: int) -> FieldReport:
    ctx = new_field(D)
    O = unit_ideal(ctx)
    tw = all_well_rounded_twists(O)
    p_k = len(enumerate_principal_up_to_units(O, enumeration_bound(O)))
    if len(tw) > 2 * p_k:
        raise AssertionError(f"D={D}: {len(tw)} twists exceed 2*|P_K| = {2 * p_k}")
    bound = regulator_bound_value(D)
    return FieldReport(
        D=D,
        disc=ctx.disc,
        regulator=ctx.regulator,
        reg_lower_bound=bound,
        reg_equality=ctx.regulator - bound < REG_TOL,
        fund_unit_norm=ctx.fund_unit_norm,
        twists=tw,
        unique_orthogonal=len(tw) == 1 and tw[0].cos_theta == 0,
        s_k=s_k_bound(ctx.disc),
        s_hat_k=s_hat_k(ctx.disc),
        special_form=is_special_form(D),
        p_k=p_k,
        f4_classes=len({k for t in tw for k in t.f4_values}),
    )


def worker_count() -> int:
    try:
        return max(1, int(os.environ.get("WRTWIST_THREADS", "1")))
    except ValueError:
        return 1


def survey(min_D: int, max_D: int, workers: int | None = None) -> Iterator[FieldReport]:
    """One report per square-free D in [min_D, max_D], in increasing D."""
    Ds = square_free_range(min_D, max_D)
    workers = worker_count() if workers is None else workers
    if workers <= 1:
        for D in Ds:
            yield field_report(D)
        return
    with ProcessPoolExecutor(max_workers=workers) as ex:
        yield from ex.map(field_report, Ds, chunksize=64)


@dataclass
class BestMpdReport:
    best_D: int
    best_ideal: tuple[int, int, int]
    best_mpd_sq: Fraction
    attained_at: list[tuple[int, tuple[int, int, int]]]
    rows: list[tuple[int, tuple[int, int, int], Fraction]] = field(repr=False)
    sweep_violations: list[int] = field(default_factory=list)
    max_small_D: int = 100
    max_sweep_D: int = 10**4

    @property
    def best_mpd(self) -> float:
        return math.sqrt(self.best_mpd_sq)

    @property
    def ok(self) -> bool:
        return (self.best_mpd_sq == Fraction(1, 5)
                and all(D == 5 for D, _ in self.attained_at)
                and not self.sweep_violations)


def best_mpd_check(max_small_D: int = 100, max_sweep_D: int = 10**4) -> BestMpdReport:
    """Largest mpd over every ideal of norm <= floor(sqrt(disc)/2) for D < max_small_D,
    and s_hat_k < 1/sqrt(5) for max_small_D <= D <= max_sweep_D."""
    rows = []
    best: Fraction | None = None
    for D in square_free_range(2, max_small_D - 1):
        ctx = new_field(D)
        for I in ideals_of_norm_at_most(ctx, isqrt(ctx.disc) // 2):
            rows.append((D, I.triple, mpd_squared(I)))
            if best is None or rows[-1][2] > best:
                best = rows[-1][2]
    attained = [(D, t) for D, t, v in rows if v == best]
    violations = []
    for D in square_free_range(max_small_D, max_sweep_D):
        disc = D if D % 4 == 1 else 4 * D
        s = s_k_bound(disc)
        # s_hat^2 < 1/5  <=>  5 s^2 < disc
        if not 5 * s * s < disc:
            violations.append(D)
    return BestMpdReport(attained[0][0], attained[0][1], best, attained, rows, violations,
                         max_small_D, max_sweep_D)
