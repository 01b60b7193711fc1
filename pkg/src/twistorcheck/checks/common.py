"""Report types, the check runner, and shared sampling helpers."""

from __future__ import annotations

import math
import random
import time
from dataclasses import dataclass
from fractions import Fraction

from ..errors import DegenerateCase
from ..scalars import DEFAULT_TOLERANCE, is_zero
from ..twistor import (
    TwistorContext, TwistorVector, norm_sq, project_orthogonal, twistor_vector,
)

PASS = "PASS"
FAIL = "FAIL"
DEGENERATE = "DEGENERATE"

EXACT = "exact"
FLOAT = "float"


@dataclass
class RunConfig:
    """Everything a check run depends on besides the checks themselves."""

    suite: str = "all"
    backend: str = "both"
    seed: int = 0
    trials: int = 10000
    tolerance: float = DEFAULT_TOLERANCE
    fmt: str = "text"


@dataclass
class CheckReport:
    """Structured outcome of one named verification."""

    id: str
    claim: str
    backend: str
    status: str
    residual: str | None = None
    certificate: str | None = None
    elapsed_ms: float = 0.0

    def to_json(self) -> dict:
        payload = {
            "id": self.id,
            "claim": self.claim,
            "backend": self.backend,
            "status": self.status,
        }
        if self.residual is not None:
            payload["residual"] = self.residual
        if self.certificate is not None:
            payload["certificate"] = self.certificate
        payload["elapsed_ms"] = round(self.elapsed_ms, 3)
        return payload


class CheckFailure(Exception):
    """Raised inside a check body when an asserted identity does not hold."""

    def __init__(self, message: str, residual=None, certificate=None):
        super().__init__(message)
        self.residual = residual
        self.certificate = certificate


def render(x) -> str:
    """Stable string form of a scalar, vector or small matrix for reports."""
    if isinstance(x, float):
        return repr(x)
    if isinstance(x, tuple):
        if x and isinstance(x[0], tuple):
            return "[" + "; ".join(", ".join(render(e) for e in row) for row in x) + "]"
        return "(" + ", ".join(render(e) for e in x) + ")"
    return str(x)


def execute(check_id: str, claim: str, backend: str, body) -> CheckReport:
    """Run one check body, timing it and translating failures into reports.

    ``body`` returns an optional dict with ``residual``/``certificate``
    strings; raising :class:`CheckFailure` produces a FAIL report and
    :class:`DegenerateCase` a DEGENERATE one.
    """
    start = time.perf_counter()
    try:
        outcome = body() or {}
        status = PASS
        residual = outcome.get("residual")
        certificate = outcome.get("certificate")
    except CheckFailure as failure:
        status = FAIL
        residual = None if failure.residual is None else render(failure.residual)
        certificate = str(failure) if failure.certificate is None else (
            f"{failure}: {render(failure.certificate)}")
    except DegenerateCase as degenerate:
        status, residual, certificate = DEGENERATE, None, str(degenerate)
    elapsed_ms = (time.perf_counter() - start) * 1000.0
    return CheckReport(check_id, claim, backend, status, residual, certificate, elapsed_ms)


def ensure(condition: bool, message: str, residual=None, certificate=None) -> None:
    if not condition:
        raise CheckFailure(message, residual=residual, certificate=certificate)


def ensure_zero(value, label: str, tol: float = DEFAULT_TOLERANCE) -> None:
    if not is_zero(value, tol):
        raise CheckFailure(f"{label} is nonzero", residual=value)


def ensure_equal(left, right, label: str, tol: float = DEFAULT_TOLERANCE) -> None:
    diff = left - right
    if isinstance(diff, float):
        if abs(diff) > tol * max(1.0, abs(left), abs(right)):
            raise CheckFailure(f"{label} differs", residual=diff)
    elif not is_zero(diff, tol):
        raise CheckFailure(f"{label} differs", residual=diff)


# -- deterministic sampling ---------------------------------------------------

def rng_for(seed: int, check_id: str) -> random.Random:
    return random.Random(f"{seed}:{check_id}")


def random_twistor(rng: random.Random) -> TwistorVector:
    return twistor_vector(*(rng.uniform(-1.0, 1.0) for _ in range(6)))


def random_unit_normal(ctx: TwistorContext, rng: random.Random) -> TwistorVector:
    while True:
        n = random_twistor(rng)
        length = math.sqrt(norm_sq(ctx, n))
        if length > 0.2:
            return (1.0 / length) * n


def random_admissible_pair(ctx: TwistorContext, rng: random.Random):
    """Unit normal N and X orthogonal to N and j2 N (float backend)."""
    n = random_unit_normal(ctx, rng)
    while True:
        x = project_orthogonal(ctx, random_twistor(rng), n)
        if norm_sq(ctx, x) > 1e-2:
            return n, x


def random_rational(rng: random.Random, bound: int = 9) -> Fraction:
    return Fraction(rng.randint(-bound, bound), rng.randint(1, bound))


def random_circle_point(rng: random.Random):
    theta = rng.uniform(0.0, 2.0 * math.pi)
    return math.cos(theta), math.sin(theta)


def max_abs(values) -> float:
    worst = 0.0
    for v in values:
        worst = max(worst, abs(v))
    return worst
