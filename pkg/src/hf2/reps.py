"""Arithmetic of the real representation ring RO(C_{2^n}).

A virtual representation of the cyclic group C_{2^n} is written as

    t * 1  +  c_alpha * alpha  +  sum_i c_lambda[i] * lambda_i

where 1 is the trivial representation, alpha the one-dimensional sign
representation, and lambda_i (0 <= i <= n-2) the two-dimensional rotation
by exp(2*pi*I / 2^(n-i)).  Every nonzero vector of lambda_i has stabilizer
C_{2^i}; alpha is fixed exactly by the index-two subgroup.
"""

from __future__ import annotations

from dataclasses import dataclass


class DegreeError(ValueError):
    """Raised for malformed degrees (bad n, wrong number of lambda slots)."""


@dataclass(frozen=True, order=True)
class Degree:
    """A point of RO(C_{2^n}), with lambda coefficients indexed 0..n-2."""

    n: int
    t: int
    c_alpha: int
    c_lambda: tuple[int, ...]

    def __add__(self, other: "Degree") -> "Degree":
        self._check_same_group(other)
        return Degree(
            self.n,
            self.t + other.t,
            self.c_alpha + other.c_alpha,
            tuple(a + b for a, b in zip(self.c_lambda, other.c_lambda)),
        )

    def __sub__(self, other: "Degree") -> "Degree":
        return self + (-other)

    def __neg__(self) -> "Degree":
        return Degree(self.n, -self.t, -self.c_alpha, tuple(-c for c in self.c_lambda))

    def _check_same_group(self, other: "Degree") -> None:
        if self.n != other.n:
            raise DegreeError(f"degree group mismatch: n={self.n} vs n={other.n}")

    def __str__(self) -> str:
        return format_degree(self)


def make_degree(n: int, t: int, c_alpha: int, c_lambda) -> Degree:
    if n < 1:
        raise DegreeError(f"n: group exponent must be >= 1, got {n}")
    c_lambda = tuple(int(c) for c in c_lambda)
    if len(c_lambda) != n - 1:
        raise DegreeError(
            f"c_lambda: expected {n - 1} lambda coefficients for n={n}, got {len(c_lambda)}"
        )
    return Degree(n, int(t), int(c_alpha), c_lambda)


def zero_degree(n: int) -> Degree:
    return make_degree(n, 0, 0, (0,) * (n - 1))


def trivial_degree(n: int, t: int) -> Degree:
    return make_degree(n, t, 0, (0,) * (n - 1))


def alpha_degree(n: int) -> Degree:
    return make_degree(n, 0, 1, (0,) * (n - 1))


def lambda_degree(n: int, i: int) -> Degree:
    if not 0 <= i <= n - 2:
        raise DegreeError(f"lambda index {i} out of range for n={n}")
    return make_degree(n, 0, 0, tuple(1 if j == i else 0 for j in range(n - 1)))


def underlying_dim(d: Degree) -> int:
    """Real dimension of the underlying virtual vector space."""
    return d.t + d.c_alpha + 2 * sum(d.c_lambda)


def fixed_dim(d: Degree, k: int) -> int:
    """Dimension of the C_{2^k}-fixed subspace, additively extended.

    The trivial part always counts, alpha survives for k <= n-1, and
    lambda_j survives (with weight two) exactly when k <= j.
    """
    if not 0 <= k <= d.n:
        raise DegreeError(f"subgroup exponent k={k} out of range for n={d.n}")
    dim = d.t
    if k <= d.n - 1:
        dim += d.c_alpha
    dim += 2 * sum(c for j, c in enumerate(d.c_lambda) if k <= j)
    return dim


def restrict(d: Degree, m: int):
    """Restrict to the subgroup C_{2^m}.

    m = n is the identity; m = 0 returns the integer underlying dimension
    since RO(e) = Z.  For 0 < m < n: alpha becomes trivial, lambda_j stays
    lambda_j for j <= m-2, becomes 2*alpha at j = m-1 and trivial 2 above.
    """
    if not 0 <= m <= d.n:
        raise DegreeError(f"restriction target m={m} out of range for n={d.n}")
    if m == 0:
        return underlying_dim(d)
    if m == d.n:
        return d
    t = d.t + d.c_alpha
    c_alpha = 0
    c_lam = [0] * (m - 1)
    for j, c in enumerate(d.c_lambda):
        if j <= m - 2:
            c_lam[j] += c
        elif j == m - 1:
            c_alpha += 2 * c
        else:
            t += 2 * c
    return make_degree(m, t, c_alpha, c_lam)


def pullback_eps(d: Degree) -> Degree:
    """Pull back along C_{2^(n+1)} -> C_{2^n}: fixes 1, alpha; lambda_i -> lambda_{i+1}."""
    return make_degree(d.n + 1, d.t, d.c_alpha, (0,) + d.c_lambda)


def strip_lambda0(d: Degree) -> Degree:
    """Drop the lambda_0 slot and shift lambda indices down (n decreases by one)."""
    if d.n < 2:
        raise DegreeError("strip_lambda0 needs n >= 2")
    return make_degree(d.n - 1, d.t, d.c_alpha, d.c_lambda[1:])


def format_degree(d: Degree) -> str:
    """Text form "t,cA,cL0,...,cL{n-2}" used by all CLI degree flags."""
    return ",".join(str(x) for x in (d.t, d.c_alpha) + d.c_lambda)


def parse_degree(s: str, n: int) -> Degree:
    parts = [p.strip() for p in s.split(",")]
    if len(parts) != n + 1:
        raise DegreeError(f"degree string needs {n + 1} entries for n={n}, got {len(parts)}")
    try:
        vals = [int(p) for p in parts]
    except ValueError as exc:
        raise DegreeError(f"non-integer entry in degree string {s!r}") from exc
    return make_degree(n, vals[0], vals[1], vals[2:])
