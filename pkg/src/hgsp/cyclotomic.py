"""Cyclotomic polynomials and products of them.

A factorization is a multiset of cyclotomic indices; expanding it gives a
monic integer polynomial, and reading off the primitive roots of unity gives
the rational parameter list (all a/m with gcd(a, m) = 1, one block per copy
of the m-th cyclotomic polynomial).  Both directions of that dictionary live
here, together with the scalar shift x -> -x on factorizations.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

from .poly import IntPoly


class NotCyclotomicProduct(ValueError):
    """A polynomial (or parameter list) that is not a product of cyclotomics."""


def totient(m: int) -> int:
    if m < 1:
        raise ValueError("totient needs a positive argument")
    result = m
    k = m
    p = 2
    while p * p <= k:
        if k % p == 0:
            result -= result // p
            while k % p == 0:
                k //= p
        p += 1
    if k > 1:
        result -= result // k
    return result


@lru_cache(maxsize=None)
def cyclotomic_poly(m: int) -> IntPoly:
    """The m-th cyclotomic polynomial, computed by exact division of x^m - 1."""
    if m < 1:
        raise ValueError("cyclotomic index must be positive")
    num = IntPoly.monomial(m) - IntPoly.one()
    for d in range(1, m):
        if m % d == 0:
            num = num.exact_div(cyclotomic_poly(d))
    return num


def admissible_indices(degree: int) -> tuple[int, ...]:
    """All m with phi(m) <= degree.  phi(m) >= sqrt(m/2) bounds the scan."""
    if degree < 1:
        raise ValueError("degree must be positive")
    top = 2 * degree * degree + 1
    return tuple(m for m in range(1, top + 1) if totient(m) <= degree)


@dataclass(frozen=True, init=False)
class CycloFactorization:
    """A multiset of cyclotomic indices, stored as sorted (index, multiplicity)."""

    factors: tuple[tuple[int, int], ...]

    def __init__(self, factors: Iterable[tuple[int, int]] = ()):
        merged: dict[int, int] = {}
        for m, k in factors:
            if m < 1:
                raise ValueError(f"bad cyclotomic index {m}")
            if k < 0:
                raise ValueError(f"negative multiplicity for index {m}")
            if k:
                merged[m] = merged.get(m, 0) + k
        object.__setattr__(
            self, "factors", tuple(sorted(merged.items()))
        )

    @property
    def degree(self) -> int:
        return sum(k * totient(m) for m, k in self.factors)

    @property
    def support(self) -> frozenset[int]:
        return frozenset(m for m, _ in self.factors)

    def multiplicity(self, m: int) -> int:
        return dict(self.factors).get(m, 0)

    def expand(self) -> IntPoly:
        p = IntPoly.one()
        for m, k in self.factors:
            p = p * cyclotomic_poly(m) ** k
        return p

    def parameters(self) -> tuple[Fraction, ...]:
        """Sorted list of a/m over primitive residues a mod m, with multiplicity."""
        out: list[Fraction] = []
        for m, k in self.factors:
            block = [Fraction(a, m) for a in range(m) if math.gcd(a, m) == 1]
            if m == 1:
                block = [Fraction(0)]
            out.extend(block * k)
        return tuple(sorted(out))

    def scalar_shift(self) -> "CycloFactorization":
        return CycloFactorization((shifted_index(m), k) for m, k in self.factors)

    # -- text form: "3^2,6" means Phi_3^2 * Phi_6 ---------------------------

    @property
    def text(self) -> str:
        return ",".join(f"{m}^{k}" if k > 1 else str(m) for m, k in self.factors)

    @classmethod
    def parse(cls, text: str) -> "CycloFactorization":
        items = []
        for chunk in text.split(","):
            chunk = chunk.strip()
            if not chunk:
                raise ValueError(f"bad factorization text {text!r}")
            if "^" in chunk:
                base, _, exp = chunk.partition("^")
                try:
                    items.append((int(base), int(exp)))
                except ValueError:
                    raise ValueError(f"bad factorization term {chunk!r}") from None
            else:
                try:
                    items.append((int(chunk), 1))
                except ValueError:
                    raise ValueError(f"bad factorization term {chunk!r}") from None
        if any(k < 1 for _, k in items):
            raise ValueError(f"multiplicities must be positive in {text!r}")
        return cls(items)

    def __str__(self) -> str:
        return self.text


def shifted_index(m: int) -> int:
    """Index map induced by x -> -x: Phi_m(-x) = +-Phi_{m'}(x)."""
    if m % 2 == 1:
        return 2 * m
    if m % 4 == 2:
        return m // 2
    return m


def scalar_shift_poly(p: IntPoly) -> IntPoly:
    """p(-x) for a monic polynomial of even degree (so the result stays monic)."""
    if not p.is_monic():
        raise ValueError("scalar shift expects a monic polynomial")
    if p.degree % 2 != 0:
        raise ValueError("scalar shift expects even degree")
    return p.negate_variable()


def exponent_gcd(p: IntPoly) -> int:
    """gcd of the exponents carrying nonzero coefficients (0 for constants)."""
    g = 0
    for e, c in enumerate(p.coeffs):
        if c:
            g = math.gcd(g, e)
    return g


def is_power_substitution(p: IntPoly, k: int) -> bool:
    """True when p(x) = q(x^k) for some polynomial q."""
    if k < 1:
        raise ValueError("power must be positive")
    if p.is_zero():
        return True
    return all(c == 0 for e, c in enumerate(p.coeffs) if e % k)


def factorization_from_poly(p: IntPoly) -> CycloFactorization:
    """Factor a monic polynomial into cyclotomics, or raise NotCyclotomicProduct."""
    if p.is_zero() or not p.is_monic():
        raise NotCyclotomicProduct("expected a monic polynomial")
    rest = p
    found: list[tuple[int, int]] = []
    for m in admissible_indices(max(p.degree, 1)):
        phi_m = cyclotomic_poly(m)
        k = 0
        while not rest.is_zero() and rest.degree >= phi_m.degree:
            q, r = divmod(rest, phi_m)
            if not r.is_zero():
                break
            rest = q
            k += 1
        if k:
            found.append((m, k))
        if rest.degree == 0:
            break
    if rest != IntPoly.one():
        raise NotCyclotomicProduct(f"non-cyclotomic part remains: {rest}")
    return CycloFactorization(found)


def factorization_from_parameters(params: Sequence[Fraction]) -> CycloFactorization:
    """Inverse of CycloFactorization.parameters.

    The input must consist, for each denominator m present, of whole copies
    of the primitive residue block {a/m : gcd(a, m) = 1}; the value 0 stands
    for the 1st cyclotomic polynomial x - 1.
    """
    residues: dict[int, list[Fraction]] = {}
    for r in params:
        r = Fraction(r)
        if not 0 <= r < 1:
            raise NotCyclotomicProduct(f"parameter {r} outside [0, 1)")
        residues.setdefault(r.denominator, []).append(r)
    factors = []
    for m, block in sorted(residues.items()):
        full = sorted(Fraction(a, m) for a in range(max(m, 1)) if math.gcd(a, m) == 1)
        if m == 1:
            full = [Fraction(0)]
        if len(block) % len(full):
            raise NotCyclotomicProduct(
                f"parameters with denominator {m} do not fill whole primitive blocks"
            )
        mult = len(block) // len(full)
        if sorted(block) != sorted(full * mult):
            raise NotCyclotomicProduct(
                f"parameters with denominator {m} are not primitive residues"
            )
        factors.append((m, mult))
    return CycloFactorization(factors)


def parse_parameters(text: str) -> tuple[Fraction, ...]:
    """Parse "1/3,2/3,0,..." into a sorted tuple of fractions in [0, 1)."""
    items = [t.strip() for t in text.split(",")]
    if not items or items == [""]:
        raise ValueError("empty parameter list")
    out = []
    for t in items:
        try:
            out.append(Fraction(t))
        except (ValueError, ZeroDivisionError):
            raise ValueError(f"bad parameter {t!r}") from None
    return tuple(sorted(out))


def format_parameters(params: Sequence[Fraction]) -> str:
    return ",".join(str(r) for r in params)
