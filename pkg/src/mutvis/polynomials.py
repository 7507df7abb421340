"""Exact counting polynomials, closed forms, and coefficient bound checks.

Coefficients are arbitrary-precision Python integers throughout; a
polynomial's degree is the largest size of a counted set, so trailing zero
coefficients are never stored.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .errors import DomainError, OutOfRangeParam, UnsupportedFamily, UnsupportedVariant
from .visibility import Variant


@dataclass(frozen=True)
class CountPolynomial:
    """Nonnegative integer coefficient vector indexed by set size."""

    coeffs: tuple[int, ...]

    def __post_init__(self):
        coeffs = tuple(int(c) for c in self.coeffs)
        if not coeffs:
            raise ValueError("a polynomial needs at least the constant term")
        if any(c < 0 for c in coeffs):
            raise ValueError("coefficients must be nonnegative")
        if len(coeffs) > 1 and coeffs[-1] == 0:
            raise ValueError("trailing coefficient must be nonzero")
        object.__setattr__(self, "coeffs", coeffs)

    @classmethod
    def from_counts(cls, counts) -> "CountPolynomial":
        """Build from a raw count vector, trimming trailing zeros."""
        coeffs = list(counts)
        while len(coeffs) > 1 and coeffs[-1] == 0:
            coeffs.pop()
        return cls(tuple(coeffs))

    @classmethod
    def from_strings(cls, strings) -> "CountPolynomial":
        return cls(tuple(int(s, 10) for s in strings))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def coefficient(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def to_strings(self) -> list[str]:
        """Decimal-string coefficients; exact under any serialization."""
        return [str(c) for c in self.coeffs]

    def __str__(self) -> str:
        parts = []
        for i, c in enumerate(self.coeffs):
            if c == 0 and len(self.coeffs) > 1:
                continue
            if i == 0:
                parts.append(str(c))
            elif i == 1:
                parts.append(f"{c}x" if c != 1 else "x")
            else:
                parts.append(f"{c}x^{i}" if c != 1 else f"x^{i}")
        return " + ".join(parts)


def _poly_add(a: list[int], b: list[int]) -> list[int]:
    out = [0] * max(len(a), len(b))
    for i, c in enumerate(a):
        out[i] += c
    for i, c in enumerate(b):
        out[i] += c
    return out


def _poly_mul(a: list[int], b: list[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if ca:
            for j, cb in enumerate(b):
                out[i + j] += ca * cb
    return out


def binomial_row(k: int) -> list[int]:
    """Coefficients of ``(1+x)^k``."""
    return [comb(k, i) for i in range(k + 1)]


def closed_form(variant: Variant, family: str, n: int) -> CountPolynomial:
    """Reference polynomial for paths and balanced complete bipartite graphs.

    ``family`` is ``"path"`` (any variant; the non-plain variants need
    ``n >= 3``) or ``"knn"`` (``K_{n,n}`` with ``n >= 3``).
    """
    if family == "path":
        if variant is Variant.MV:
            if n < 1:
                raise OutOfRangeParam("path closed form needs n >= 1")
            return CountPolynomial.from_counts([1, n, comb(n, 2)])
        if n < 3:
            raise OutOfRangeParam(f"path {variant.value} closed form needs n >= 3")
        if variant is Variant.DUAL:
            return CountPolynomial((1, 2, 3))
        if variant is Variant.OUTER:
            return CountPolynomial((1, n, 1))
        if variant is Variant.TOTAL:
            return CountPolynomial((1, 2, 1))
        raise UnsupportedVariant(str(variant))
    if family == "knn":
        if n < 3:
            raise OutOfRangeParam("balanced bipartite closed form needs n >= 3")
        base = binomial_row(n)
        base[n] -= 1  # (1+x)^n - x^n
        square = _poly_mul(base, base)
        if variant in (Variant.DUAL, Variant.TOTAL):
            return CountPolynomial.from_counts(square)
        bump = [0] * n + [2]  # the two one-sided sets of size n
        if variant is Variant.MV:
            bump_n1 = [0] * (n + 1) + [2 * n]
            return CountPolynomial.from_counts(
                _poly_add(_poly_add(square, bump), bump_n1)
            )
        if variant is Variant.OUTER:
            return CountPolynomial.from_counts(_poly_add(square, bump))
        raise UnsupportedVariant(str(variant))
    raise UnsupportedFamily(f"no closed form for family {family!r}")


def generalized_binomial(x: float, k: int) -> float:
    """Product-form binomial coefficient for real ``x >= k > 0``."""
    if k <= 0:
        raise DomainError(f"k must be positive, got {k}")
    if x < k:
        raise DomainError(f"need x >= k, got x={x}, k={k}")
    value = 1.0
    for s in range(1, k + 1):
        value *= (x - s + 1) / s
    return value


def _solve_binomial(k: int, target: int) -> float:
    """Real ``z >= k`` with C(z, k) == target, by monotone bisection."""
    lo, hi = float(k), float(k + target)
    while hi - lo > 1e-9:
        mid = (lo + hi) / 2
        if generalized_binomial(mid, k) < target:
            lo = mid
        else:
            hi = mid
    return (lo + hi) / 2


@dataclass(frozen=True)
class ShadowCheck:
    """Outcome of the coefficient shadow bound at one index."""

    index: int
    coefficient: int
    z: float
    required_prev: float
    actual_prev: int
    passed: bool


def shadow_bound_check(p: CountPolynomial) -> tuple[ShadowCheck, ...]:
    """Check ``r_{i-1} >= C(z, i-1)`` where ``C(z, i) = r_i``, per index.

    Applies to polynomials of subset-closed families (plain, outer, total);
    indices with ``r_i = 0`` are skipped.  Violations are reported, never
    raised: a failure signals a counting bug upstream.
    """
    reports = []
    for i in range(1, p.degree + 1):
        r_i = p.coefficient(i)
        if r_i < 1:
            continue
        z = _solve_binomial(i, r_i)
        required = generalized_binomial(z, i - 1) if i > 1 else 1.0
        actual = p.coefficient(i - 1)
        reports.append(
            ShadowCheck(
                index=i,
                coefficient=r_i,
                z=z,
                required_prev=required,
                actual_prev=actual,
                passed=actual >= required - 1e-6,
            )
        )
    return tuple(reports)


@dataclass(frozen=True)
class SpectrumGapReport:
    """Binomial lower bounds and zero runs of a dual visibility spectrum."""

    mu_t: int
    bound_ok: bool
    violations: tuple[tuple[int, int, int], ...]  # (index, coefficient, required)
    gaps: tuple[tuple[int, int], ...]  # inclusive zero runs between positives
    r1_law_ok: bool  # r_1 = 0 exactly when mu_t = 0


def spectrum_gap_report(p: CountPolynomial, mu_t: int) -> SpectrumGapReport:
    """Verify ``r_i >= C(mu_t, i)`` up to ``mu_t`` and locate all gaps."""
    if mu_t < 0:
        raise DomainError("total visibility number cannot be negative")
    violations = []
    for i in range(0, mu_t + 1):
        required = comb(mu_t, i)
        if p.coefficient(i) < required:
            violations.append((i, p.coefficient(i), required))
    gaps = []
    run_start = None
    for i in range(1, p.degree + 1):  # trailing coefficient is positive
        if p.coefficient(i) == 0:
            if run_start is None:
                run_start = i
        elif run_start is not None:
            gaps.append((run_start, i - 1))
            run_start = None
    r1_law_ok = (p.coefficient(1) == 0) == (mu_t == 0)
    return SpectrumGapReport(
        mu_t=mu_t,
        bound_ok=not violations,
        violations=tuple(violations),
        gaps=tuple(gaps),
        r1_law_ok=r1_law_ok,
    )
