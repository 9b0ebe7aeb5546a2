"""
    Exact integer algebra of face vectors of simple polytopes.

    Conventions (all arrays ascending by index):
        F(alpha, t) = sum_k f_{n-k} alpha^(n-k) t^k
        H(alpha, t) = F(alpha - t, t) = sum_i h_i alpha^(n-i) t^i
        H = sum_i gamma_i (alpha t)^i (alpha + t)^(n-2i)
        g_0 = 1, g_i = h_i - h_{i-1} for 0 < i <= n/2
"""
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import ClassVar

from common.errors import DegreeMismatch, NonIntegerResult, NotSymmetric


@dataclass(frozen=True)
class FaceVector:
    """Integer coefficient sequence with its polytope dimension n."""
    entries: tuple
    degree: int
    kind: ClassVar[str] = "vector"

    def __iter__(self):
        return iter(self.entries)

    def __getitem__(self, idx):
        return self.entries[idx]

    def __len__(self):
        return len(self.entries)

    def to_list(self) -> list:
        return list(self.entries)

    def __repr__(self):
        return f"{type(self).__name__}({list(self.entries)}, n={self.degree})"


@dataclass(frozen=True, repr=False)
class FVector(FaceVector):
    """f_0..f_n, f_n = 1 for the polytope itself."""
    kind: ClassVar[str] = "f"

    @classmethod
    def of(cls, values) -> "FVector":
        values = tuple(int(value) for value in values)
        return cls(values, len(values) - 1)

    @classmethod
    def from_polynomial(cls, coefficients) -> "FVector":
        """From F-polynomial coefficients ordered by the power of t (f_n first)."""
        return cls.of(reversed(list(coefficients)))

    def polynomial(self) -> list:
        """F-polynomial coefficients ordered by the power of t."""
        return list(reversed(self.entries))

    def proper(self) -> list:
        """Counts of proper faces only, f_0..f_{n-1}."""
        return list(self.entries[:-1])


@dataclass(frozen=True, repr=False)
class HVector(FaceVector):
    """h_0..h_n, coefficients of H by the power of t."""
    kind: ClassVar[str] = "h"

    @classmethod
    def of(cls, values) -> "HVector":
        values = tuple(int(value) for value in values)
        return cls(values, len(values) - 1)


@dataclass(frozen=True, repr=False)
class GammaVector(FaceVector):
    """gamma_0..gamma_[n/2]."""
    kind: ClassVar[str] = "gamma"

    @classmethod
    def of(cls, values, degree: int) -> "GammaVector":
        values = [int(value) for value in values]
        values += [0] * (degree // 2 + 1 - len(values))
        if len(values) != degree // 2 + 1:
            raise DegreeMismatch(f"gamma-vector {values} is too long for n={degree}")
        return cls(tuple(values), degree)


@dataclass(frozen=True, repr=False)
class GVector(FaceVector):
    """g_0..g_[n/2]."""
    kind: ClassVar[str] = "g"

    @classmethod
    def of(cls, values, degree: int) -> "GVector":
        values = tuple(int(value) for value in values)
        if len(values) != degree // 2 + 1:
            raise DegreeMismatch(f"g-vector {list(values)} has the wrong length for n={degree}")
        return cls(values, degree)


def h_from_f(f: FVector) -> HVector:
    """h_i = sum_{k<=i} (-1)^(i-k) C(n-k, i-k) f_{n-k}, the expansion of F(alpha - t, t)."""
    n = f.degree
    return HVector.of(
        sum((-1) ** (i - k) * comb(n - k, i - k) * f[n - k] for k in range(i + 1))
        for i in range(n + 1)
    )


def f_from_h(h: HVector) -> FVector:
    """f_i = sum_{j=i}^{n} C(j, i) h_{n-j}."""
    n = h.degree
    return FVector.of(sum(comb(j, i) * h[n - j] for j in range(i, n + 1)) for i in range(n + 1))


def is_symmetric(h: HVector) -> bool:
    return h.entries == tuple(reversed(h.entries))


def _gamma_basis(n: int, i: int) -> list:
    """Coefficients of (alpha t)^i (alpha + t)^(n-2i) by the power of t."""
    row = [0] * (n + 1)
    for j in range(n - 2 * i + 1):
        row[i + j] = comb(n - 2 * i, j)
    return row


def gamma_from_h(h: HVector) -> GammaVector:
    """Peel gamma_i off the outer coefficients inward; h must be symmetric."""
    if not is_symmetric(h):
        raise NotSymmetric(h.entries)
    n = h.degree
    residual = list(h.entries)
    gamma = []
    for i in range(n // 2 + 1):
        gamma_i = residual[i]
        gamma.append(gamma_i)
        for idx, value in enumerate(_gamma_basis(n, i)):
            residual[idx] -= gamma_i * value
    if any(residual):
        raise NotSymmetric(h.entries)
    return GammaVector.of(gamma, n)


def h_from_gamma(gamma: GammaVector, n: int = None) -> HVector:
    """Expand sum_i gamma_i (alpha t)^i (alpha + t)^(n-2i)."""
    n = gamma.degree if n is None else n
    h = [0] * (n + 1)
    for i, gamma_i in enumerate(gamma.entries):
        if 2 * i > n:
            if gamma_i:
                raise DegreeMismatch(f"gamma_{i} != 0 exceeds degree n={n}")
            continue
        for idx, value in enumerate(_gamma_basis(n, i)):
            h[idx] += gamma_i * value
    return HVector.of(h)


def g_from_gamma(gamma: GammaVector, n: int = None) -> GVector:
    """
    g_i = (n - 2i + 1) sum_{j<=i} C(n-2j, i-j) gamma_j / (n - i - j + 1).
    Intermediate fractions must cancel; anything else is reported as an error.
    """
    n = gamma.degree if n is None else n
    entries = list(gamma.entries) + [0] * max(0, n // 2 + 1 - len(gamma.entries))
    g = []
    for i in range(n // 2 + 1):
        total = sum(Fraction(comb(n - 2 * j, i - j) * entries[j], n - i - j + 1)
                    for j in range(i + 1))
        value = (n - 2 * i + 1) * total
        if value.denominator != 1:
            raise NonIntegerResult(f"g_{i} = {value} is not an integer for gamma={entries}, n={n}")
        g.append(value.numerator)
    return GVector.of(g, n)


def g_from_h(h: HVector) -> GVector:
    """Successive differences up to [n/2]."""
    n = h.degree
    return GVector.of([h[0]] + [h[i] - h[i - 1] for i in range(1, n // 2 + 1)], n)


def h_from_g(g: GVector, n: int = None) -> HVector:
    """Prefix sums of g, reflected to the symmetric h-vector."""
    n = g.degree if n is None else n
    h = [0] * (n + 1)
    running = 0
    for i in range(n // 2 + 1):
        running += g[i]
        h[i] = running
        h[n - i] = running
    return HVector.of(h)


def f_from_gamma(gamma: GammaVector, n: int = None) -> FVector:
    """gamma -> h -> f."""
    return f_from_h(h_from_gamma(gamma, n))


def convolve_lists(first, second) -> list:
    """Polynomial product of coefficient lists."""
    product = [0] * (len(first) + len(second) - 1)
    for i, a in enumerate(first):
        if a:
            for j, b in enumerate(second):
                product[i + j] += a * b
    return product


def convolve(first: HVector, second: HVector) -> HVector:
    """H of a product polytope: coefficientwise polynomial product, degrees add."""
    return HVector.of(convolve_lists(first.entries, second.entries))


def leq_componentwise(first: FaceVector, second: FaceVector) -> bool:
    """Componentwise first <= second for vectors of the same kind and degree."""
    if type(first) is not type(second) or first.degree != second.degree \
            or len(first) != len(second):
        raise DegreeMismatch(f"cannot compare {first!r} with {second!r}")
    return all(a <= b for a, b in zip(first, second))


def cube_h(n: int) -> HVector:
    """h(I^n) = C(n, i)."""
    return HVector.of(comb(n, i) for i in range(n + 1))


def cube_gamma(n: int) -> GammaVector:
    """gamma(I^n) = (1, 0, ..., 0)."""
    return GammaVector.of([1], n)


def vectors_from_f(f: FVector) -> dict:
    """All four vectors of a simple polytope from its f-vector."""
    h = h_from_f(f)
    gamma = gamma_from_h(h)
    return {"f": f, "h": h, "g": g_from_h(h), "gamma": gamma}
