"""Both sides of the partition identity and a verifier for each step of its proof.

For ``n >= 1`` the identity reads::

    sum_{|mu| = n} pbin(mu, r) X^(l(mu)-1) / z_mu * sum_i (mu_i)_s
        = (s-1)! binom(n+s-1, n-r) [binom(X+r+s-1, r) - binom(X+r-1, r)]

Every verifier returns a :class:`CheckResult` carrying the exact values of
both sides, so a failing cell can be inspected without rerunning it.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Any, Optional, Sequence

from partition_identity.comb import (
    DEFAULT_ORACLE_CAP,
    compositions_of,
    gen_binomial,
    partitions_of,
    pbin,
    pbin_expanded,
    pbin_oracle,
    pochhammer,
    z_mu,
)
from partition_identity.exact import (
    PolyX,
    SeriesPhi,
    X,
    binomial_power_int,
    binomial_power_sym,
    poly_binomial,
    render_rational,
    series_exp,
    series_log_inv,
)

PASS = "pass"
FAIL = "fail"


@dataclass(frozen=True)
class MainParams:
    n: int
    r: int
    s: int

    def __post_init__(self):
        for name in ("n", "r", "s"):
            v = getattr(self, name)
            if not isinstance(v, int) or v < 1:
                raise ValueError(f"{name} must be a positive integer, got {v!r}")


@dataclass(frozen=True)
class CheckResult:
    check_name: str
    params: dict[str, Any]
    status: str
    lhs_value: str
    rhs_value: str
    witness: Optional[str] = None

    @property
    def passed(self) -> bool:
        return self.status == PASS

    def sort_key(self) -> tuple:
        return (self.check_name, tuple(_key(v) for v in self.params.values()))


def _key(v):
    return tuple(v) if isinstance(v, (list, tuple)) else (v,)


def _poly_witness(a: PolyX, b: PolyX) -> Optional[str]:
    top = max(len(a.coeffs), len(b.coeffs))
    for k in range(top):
        if a.coefficient(k) != b.coefficient(k):
            return f"X^{k}"
    return None


def _compare_polys(name: str, params: dict, lhs: PolyX, rhs: PolyX) -> CheckResult:
    witness = _poly_witness(lhs, rhs)
    return CheckResult(
        name, params, PASS if witness is None else FAIL, lhs.render(), rhs.render(), witness
    )


def _compare_scalars(name: str, params: dict, lhs, rhs) -> CheckResult:
    ok = lhs == rhs
    return CheckResult(
        name,
        params,
        PASS if ok else FAIL,
        render_rational(lhs),
        render_rational(rhs),
        None if ok else "value",
    )


def verify_pbin_oracle(mu: Sequence[int], r: int, cap: int = DEFAULT_ORACLE_CAP) -> CheckResult:
    return _compare_scalars(
        "pbin-oracle", {"mu": list(mu), "r": r}, pbin(mu, r), pbin_oracle(mu, r, cap)
    )


# -- main identity ---------------------------------------------------------


def lhs_main(p: MainParams) -> PolyX:
    coeffs = [Fraction(0)] * p.n
    for mu in partitions_of(p.n):
        count = pbin(mu, p.r)
        if not count:
            continue
        inner = sum(pochhammer(m, p.s) for m in mu)
        coeffs[len(mu) - 1] += count * inner / z_mu(mu)
    return PolyX(coeffs)


def rhs_main(p: MainParams) -> PolyX:
    bracket = poly_binomial(p.r + p.s - 1, p.r) - poly_binomial(p.r - 1, p.r)
    return bracket * (math.factorial(p.s - 1) * gen_binomial(p.n + p.s - 1, p.n - p.r))


def verify_main(p: MainParams) -> CheckResult:
    lhs, rhs = lhs_main(p), rhs_main(p)
    params = {"n": p.n, "r": p.r, "s": p.s}
    result = _compare_polys("main", params, lhs, rhs)
    # degree bounds hold independently of the identity; a violation means a coefficient bug
    if lhs.degree is not None and lhs.degree > p.n - 1:
        return CheckResult("main", params, FAIL, result.lhs_value, result.rhs_value,
                           f"lhs degree {lhs.degree} > n-1")
    if rhs.degree is not None and rhs.degree > p.r - 1:
        return CheckResult("main", params, FAIL, result.lhs_value, result.rhs_value,
                           f"rhs degree {rhs.degree} > r-1")
    return result


# -- first rewrite: sum over compositions ------------------------------------


@lru_cache(maxsize=None)
def _pbin_by_parts(parts: tuple[int, ...], r: int) -> int:
    return pbin_expanded(parts, r)


def lhs_composition_form(p: MainParams) -> PolyX:
    """The left-hand side summed over compositions of ``n``, with ``pbin`` expanded over compositions of ``r``."""
    n, r, s = p.n, p.r, p.s
    coeffs = []
    for l in range(1, n + 1):
        acc = Fraction(0)
        for mu in compositions_of(n, l):
            # pbin does not depend on the order of the rows
            count = _pbin_by_parts(tuple(sorted(mu, reverse=True)), r)
            if not count:
                continue
            inner = sum(math.comb(m + s - 1, s) for m in mu)
            acc += Fraction(count * inner, math.prod(mu))
        coeffs.append(acc / math.factorial(l))
    return PolyX(coeffs) * math.factorial(s)


def verify_rewrite(p: MainParams) -> CheckResult:
    return _compare_polys(
        "rewrite", {"n": p.n, "r": p.r, "s": p.s}, lhs_composition_form(p), lhs_main(p)
    )


# -- binomial transformation and Chu-Vandermonde -----------------------------


def verify_binomial_transform(m: int, k: int, s: int) -> CheckResult:
    lhs = gen_binomial(m + s - 1, m - 1) * gen_binomial(m - 1, k - 1)
    rhs = (-1) ** (k - 1) * gen_binomial(-s - 1, k - 1) * gen_binomial(m + s - 1, k + s - 1)
    return _compare_scalars("transform", {"m": m, "k": k, "s": s}, lhs, rhs)


def verify_chu_vandermonde(n: int, rcomp: Sequence[int], i: int, s: int) -> CheckResult:
    """Brute-force the collapsed l-fold convolution; ``i`` is 1-based."""
    l = len(rcomp)
    if l < 1 or not 1 <= i <= l or n < l:
        raise ValueError("need 1 <= i <= len(rcomp) <= n")
    if any(x < 1 for x in rcomp):
        raise ValueError("rcomp parts must be positive")
    lhs = 0
    for mu in compositions_of(n, l):
        term = math.comb(mu[i - 1] + s - 1, s)
        for m, rj in zip(mu, rcomp):
            term *= gen_binomial(m - 1, rj - 1)
            if not term:
                break
        lhs += term
    r = sum(rcomp)
    ri = rcomp[i - 1]
    rhs = (-1) ** (ri - 1) * gen_binomial(-s - 1, ri - 1) * gen_binomial(n + s - 1, r + s - 1)
    return _compare_scalars("chu", {"n": n, "rcomp": list(rcomp), "i": i, "s": s}, lhs, rhs)


# -- reduced identity --------------------------------------------------------


def reduced_lhs(r: int, s: int) -> PolyX:
    if r < 1 or s < 1:
        raise ValueError("r and s must be positive")
    weight = [(-1) ** (k - 1) * gen_binomial(-s - 1, k - 1) for k in range(r + 1)]
    coeffs = []
    for l in range(1, r + 1):
        acc = Fraction(0)
        for rc in compositions_of(r, l):
            acc += Fraction(sum(weight[k] for k in rc), math.prod(rc))
        coeffs.append(acc / math.factorial(l))
    return PolyX(coeffs)


def reduced_rhs(r: int, s: int) -> PolyX:
    if r < 1 or s < 1:
        raise ValueError("r and s must be positive")
    return (poly_binomial(r + s - 1, r) - poly_binomial(r - 1, r)) / s


def verify_reduced(r: int, s: int) -> CheckResult:
    return _compare_polys("reduced", {"r": r, "s": s}, reduced_lhs(r, s), reduced_rhs(r, s))


# -- generating functions ----------------------------------------------------


def _series_result(name: str, params: dict, lhs: SeriesPhi, rhs: SeriesPhi,
                   witness: Optional[str] = None) -> CheckResult:
    if witness is None and lhs != rhs:
        k = lhs.first_difference(rhs)
        witness = f"Phi^{k}" if k is not None else "order"
    return CheckResult(
        name, params, PASS if witness is None else FAIL, lhs.render(), rhs.render(), witness
    )


def genfunc_chain_lhs(s: int, order: int) -> SeriesPhi:
    """``sum_l X^(l-1)/l! * sum_{i=1..l} L^(l-1) * G`` with ``L = log 1/(1-Phi)``, ``G = ((1-Phi)^-s - 1)/s``."""
    log_inv = series_log_inv(order)
    row = (binomial_power_int(s, order) - 1) / s
    total = SeriesPhi(order)
    log_pow = SeriesPhi(order, [1])
    x_pow = PolyX.constant(1)
    for l in range(1, order + 1):
        # the l summands over i are identical
        total = total + log_pow * row * (x_pow * Fraction(l, math.factorial(l)))
        log_pow = log_pow * log_inv
        x_pow = x_pow * X
    return total


def genfunc_chain_rhs(s: int, order: int) -> SeriesPhi:
    sym = binomial_power_sym(order)
    return (sym * binomial_power_int(s, order) - sym) / s


def verify_genfunc_chain(s: int, order: int) -> CheckResult:
    lhs, rhs = genfunc_chain_lhs(s, order), genfunc_chain_rhs(s, order)
    witness = None
    for r in range(1, order + 1):
        if lhs.coefficient(r) != reduced_lhs(r, s):
            witness = f"Phi^{r} lhs != reduced_lhs"
            break
        if rhs.coefficient(r) != reduced_rhs(r, s):
            witness = f"Phi^{r} rhs != reduced_rhs"
            break
    return _series_result("genfunc-chain", {"s": s, "order": order}, lhs, rhs, witness)


def single_row_series(s: int, order: int) -> SeriesPhi:
    """``sum_{k>=1} binom(k+s-1, s) Phi^k / k``."""
    return SeriesPhi(order, [0] + [Fraction(math.comb(k + s - 1, s), k) for k in range(1, order + 1)])


def verify_single_row_genfunc(s: int, order: int) -> CheckResult:
    lhs = single_row_series(s, order)
    rhs = (binomial_power_int(s, order) - 1) / s
    return _series_result("genfunc-row", {"s": s, "order": order}, lhs, rhs)


def verify_exp_log(order: int) -> CheckResult:
    """``exp(X log 1/(1-Phi)) == (1-Phi)^-X``."""
    lhs = series_exp(series_log_inv(order) * X)
    return _series_result("genfunc-exp", {"order": order}, lhs, binomial_power_sym(order))
