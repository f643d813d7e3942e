"""Exact truncated power series and the named generating functions.

Coefficients are exact rationals: plain ints wherever possible, with
``fractions.Fraction`` only where a division genuinely leaves the
integers.  Every named series below has integer coefficients, which is
asserted after construction.  No floating point enters this module.

The series grown here count, by total length or area:

* ``S``   half-animals / half-pyramids (little Schroeder numbers, A001003)
* ``R``   S + t(1 + S), the column transfer factor of pyramids
* ``Q``   (2 - 2t)S - t
* ``D``   directed animals / pyramids, D = S + S^2 / (1 - R)
* ``D_j`` directed animals of left half-width j: S for j = 0, S^2 R^(j-1) else
* ``B``   sum over k of S(1+S)^k QR^k / (1 - QR^k)
* ``M``   multi-directed animals / connected heaps, M = D / (1 - B)
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

Rational = int | Fraction

DEFAULT_ORDER = 64
# fixed-point construction of S costs O(N^3); above this order the closed
# form builds the series and the defining equation is still asserted
FIXED_POINT_LIMIT = 128


def _norm(c: Rational) -> Rational:
    if isinstance(c, Fraction):
        return int(c) if c.denominator == 1 else c
    if isinstance(c, int):
        return c
    raise TypeError(f"coefficients must be exact rationals, got {type(c).__name__}")


def _exact_div(a: Rational, b: Rational) -> Rational:
    if isinstance(a, int) and isinstance(b, int):
        q, r = divmod(a, b)
        return q if r == 0 else Fraction(a, b)
    return _norm(Fraction(a) / Fraction(b))


class TruncatedSeries:
    """Power series truncated at a fixed order, with exact coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Rational], order: int | None = None):
        cs = [_norm(c) for c in coeffs]
        if order is not None:
            if order < 0:
                raise ValueError("order must be non-negative")
            cs = cs[: order + 1] + [0] * (order + 1 - len(cs))
        if not cs:
            raise ValueError("a series needs at least its constant coefficient")
        self.coeffs = tuple(cs)

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, n: int) -> Rational:
        if not 0 <= n <= self.order:
            raise IndexError(f"coefficient {n} outside truncation order {self.order}")
        return self.coeffs[n]

    def __eq__(self, other: object) -> bool:
        return isinstance(other, TruncatedSeries) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        head = ", ".join(str(c) for c in self.coeffs[:8])
        tail = ", ..." if self.order >= 8 else ""
        return f"TruncatedSeries([{head}{tail}], order={self.order})"

    def valuation(self) -> int | None:
        """Index of the first nonzero coefficient, or None for the zero series."""
        return next((i for i, c in enumerate(self.coeffs) if c), None)

    def resized(self, order: int) -> "TruncatedSeries":
        return TruncatedSeries(self.coeffs, order)

    # -- ring operations ----------------------------------------------------

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        n = min(self.order, other.order)
        return TruncatedSeries([self.coeffs[i] + other.coeffs[i] for i in range(n + 1)])

    def __sub__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        n = min(self.order, other.order)
        return TruncatedSeries([self.coeffs[i] - other.coeffs[i] for i in range(n + 1)])

    def __neg__(self) -> "TruncatedSeries":
        return TruncatedSeries([-c for c in self.coeffs])

    def scaled(self, factor: Rational) -> "TruncatedSeries":
        return TruncatedSeries([c * factor for c in self.coeffs])

    def __mul__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        n = min(self.order, other.order)
        a, b = self.coeffs, other.coeffs
        res: list[Rational] = [0] * (n + 1)
        va = self.valuation()
        vb = other.valuation()
        if va is None or vb is None or va + vb > n:
            return TruncatedSeries(res)
        for i in range(va, n - vb + 1):
            ai = a[i]
            if not ai:
                continue
            for j in range(vb, n - i + 1):
                bj = b[j]
                if bj:
                    res[i + j] += ai * bj
        return TruncatedSeries(res)

    def __pow__(self, exponent: int) -> "TruncatedSeries":
        if exponent < 0:
            raise ValueError("negative powers are not defined; invert first")
        result = TruncatedSeries([1], self.order)
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def invert(self) -> "TruncatedSeries":
        """Multiplicative inverse; needs a nonzero constant term."""
        b = self.coeffs
        if b[0] == 0:
            raise ValueError("inversion needs a nonzero constant term")
        n = self.order
        q: list[Rational] = [_exact_div(1, b[0])] + [0] * n
        nonzero = [(i, b[i]) for i in range(1, n + 1) if b[i]]
        fast = b[0] == 1
        for m in range(1, n + 1):
            acc: Rational = 0
            for i, bi in nonzero:
                if i > m:
                    break
                acc += bi * q[m - i]
            q[m] = -acc if fast else _exact_div(-acc, b[0])
        return TruncatedSeries(q)

    def sqrt(self) -> "TruncatedSeries":
        """Square root by Newton iteration, doubling the correct order each step."""
        if self.coeffs[0] != 1:
            raise ValueError("sqrt needs constant term 1")
        target = self.order
        y = TruncatedSeries([1], 0)
        correct = 0
        half = Fraction(1, 2)
        while correct < target:
            correct = min(2 * correct + 1, target)
            s_t = self.resized(correct)
            y_t = y.resized(correct)
            y = (y_t + s_t * y_t.invert()).scaled(half)
        return y

    def shifted_up(self, k: int) -> "TruncatedSeries":
        """Multiply by t^k, truncating at the same order."""
        return TruncatedSeries((0,) * k + self.coeffs, self.order)

    def shifted_down(self, k: int) -> "TruncatedSeries":
        """Exact division by t^k; the k lowest coefficients must vanish."""
        if any(self.coeffs[i] for i in range(min(k, len(self.coeffs)))):
            raise ValueError(f"series is not divisible by t^{k}")
        return TruncatedSeries(self.coeffs[k:])

    # -- integrality ---------------------------------------------------------

    def is_integral(self) -> bool:
        return all(isinstance(c, int) for c in self.coeffs)

    def integralized(self) -> "TruncatedSeries":
        if not self.is_integral():
            bad = next(i for i, c in enumerate(self.coeffs) if not isinstance(c, int))
            raise AssertionError(f"coefficient {bad} is not an integer: {self.coeffs[bad]}")
        return self

    def to_json_dict(self, name: str) -> dict:
        return {
            "name": name,
            "order": self.order,
            "coefficients": [str(c) for c in self.integralized().coeffs],
        }


def _one(order: int) -> TruncatedSeries:
    return TruncatedSeries([1], order)


def _t(order: int) -> TruncatedSeries:
    return TruncatedSeries([0, 1], order)


def _series_S_fixed_point(order: int) -> TruncatedSeries:
    t = _t(order)
    one = _one(order)
    s = TruncatedSeries([0], order)
    for _ in range(order + 1):  # each pass gains at least one correct order
        s = t * ((one + s.scaled(2)) * (one + s))
    return s


def _series_S_closed(order: int) -> TruncatedSeries:
    root = TruncatedSeries([1, -6, 1], order + 1).sqrt()
    numerator = TruncatedSeries([1, -3], order + 1) - root
    return numerator.shifted_down(1).scaled(Fraction(1, 4))


def _assert_defining_equation(s: TruncatedSeries) -> None:
    one = _one(s.order)
    rhs = _t(s.order) * ((one + s.scaled(2)) * (one + s))
    if s != rhs:
        raise AssertionError("series does not satisfy S = t(1 + 2S)(1 + S)")


@lru_cache(maxsize=16)
def series_S(order: int) -> TruncatedSeries:
    """Half-animal counts: unique solution of S = t(1 + 2S)(1 + S), S(0) = 0.

    Built by fixed-point iteration and checked against the closed form
    (1 - 3t - sqrt(1 - 6t + t^2)) / (4t); above FIXED_POINT_LIMIT the
    closed form builds it and the defining equation is asserted instead.
    """
    closed = _series_S_closed(order)
    if order <= FIXED_POINT_LIMIT:
        fixed = _series_S_fixed_point(order)
        if fixed != closed:
            raise AssertionError("fixed-point and closed-form constructions disagree")
        s = fixed
    else:
        s = closed
    _assert_defining_equation(s)
    return s.integralized()


@lru_cache(maxsize=16)
def series_R(order: int) -> TruncatedSeries:
    """R = S + t(1 + S)."""
    s = series_S(order)
    return (s + _t(order) * (_one(order) + s)).integralized()


@lru_cache(maxsize=16)
def series_Q(order: int) -> TruncatedSeries:
    """Q = (2 - 2t)S - t."""
    s = series_S(order)
    return (TruncatedSeries([2, -2], order) * s - _t(order)).integralized()


@lru_cache(maxsize=16)
def series_D1(order: int) -> TruncatedSeries:
    """Directed-animal counts D(t) = ((1 + t)/sqrt(1 - 6t + t^2) - 1) / 4.

    Cross-checked against the pyramid decomposition S + S^2 / (1 - R).
    """
    root = TruncatedSeries([1, -6, 1], order).sqrt()
    d = (TruncatedSeries([1, 1], order) * root.invert() - _one(order)).scaled(Fraction(1, 4))
    s = series_S(order)
    alt = s + (s * s) * (_one(order) - series_R(order)).invert()
    if d != alt:
        raise AssertionError("closed form and S + S^2/(1-R) disagree for D")
    return d.integralized()


def series_Dj(order: int, j: int) -> TruncatedSeries:
    """Directed animals of left half-width exactly j (j = 0: half-animals)."""
    if j < 0:
        raise ValueError("left half-width must be non-negative")
    s = series_S(order)
    if j == 0:
        return s
    return ((s * s) * series_R(order) ** (j - 1)).integralized()


@lru_cache(maxsize=16)
def series_lw_total(order: int) -> TruncatedSeries:
    """Total left half-width over directed animals per area: S^2 / (1 - R)^2.

    Summing j * D_j over j >= 1 telescopes the geometric family into a
    double pole at R = 1; the average left half-width at area n is this
    coefficient divided by the one of D.
    """
    s = series_S(order)
    inv = (_one(order) - series_R(order)).invert()
    return ((s * s) * (inv * inv)).integralized()


@lru_cache(maxsize=8)
def series_B(order: int) -> TruncatedSeries:
    """B = sum over k >= 0 of S(1+S)^k QR^k / (1 - QR^k).

    The k-th term has valuation k + 2, so the sum stops at k = order - 2
    without losing anything below the truncation order.
    """
    s = series_S(order)
    q = series_Q(order)
    r = series_R(order)
    one = _one(order)
    one_plus_s = one + s
    total = TruncatedSeries([0], order)
    s1k = s  # S (1+S)^k
    grk = q  # Q R^k
    for k in range(max(order - 1, 0)):
        term = s1k * (grk * (one - grk).invert())
        v = term.valuation()
        if v is not None and v < k + 2:
            raise AssertionError(f"term k={k} has valuation {v} < {k + 2}")
        total = total + term
        s1k = s1k * one_plus_s
        grk = grk * r
    return total.integralized()


@lru_cache(maxsize=8)
def series_M(order: int) -> TruncatedSeries:
    """Multi-directed animal counts M = D / (1 - B)."""
    d = series_D1(order)
    m = (d * (_one(order) - series_B(order)).invert()).integralized()
    if any(m[n] < d[n] for n in range(order + 1)):
        raise AssertionError("M must dominate D coefficient-wise")
    return m


def series_by_name(name: str, order: int, j: int | None = None) -> TruncatedSeries:
    """Dispatch used by the command line; D means D(t, 1), LW the total
    left half-width numerator."""
    builders = {
        "S": series_S,
        "R": series_R,
        "Q": series_Q,
        "D": series_D1,
        "B": series_B,
        "M": series_M,
        "LW": series_lw_total,
    }
    if name == "Dj":
        if j is None:
            raise ValueError("series Dj needs the half-width j")
        return series_Dj(order, j)
    if name not in builders:
        raise ValueError(f"unknown series {name!r}")
    return builders[name](order)


def check_lemma_HD(order: int, kmax: int = 4) -> list[dict]:
    """Verify H_k * (D Q R^k) = S(1+S)^k QR^k / (1 - QR^k) coefficient-wise.

    H_k comes from the strip-heap census, the other factors from the
    series engine.  Returns one report row per k; failures are reported,
    not raised.
    """
    from .bijections import count_strip_heaps

    s = series_S(order)
    q = series_Q(order)
    r = series_R(order)
    d = series_D1(order)
    one = _one(order)
    rows = []
    for k in range(kmax + 1):
        hk = TruncatedSeries(count_strip_heaps(k, order), order)
        lhs = hk * (d * q * r**k)
        g = q * r**k
        rhs = (s * (one + s) ** k) * (g * (one - g).invert())
        bad = next((n for n in range(order + 1) if lhs[n] != rhs[n]), None)
        rows.append({"k": k, "pass": bad is None, "first_failure": bad})
    return rows
