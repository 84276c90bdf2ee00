"""Multiset arithmetic on characters of a finite cyclic group.

A one-dimensional representation of C = Z/m over a splitting field of
characteristic coprime to m is identified with a residue r mod m, its
exponent relative to a fixed primitive character.  A representation that
splits into one-dimensional pieces is then a multiset of residues.  All
the invariant-dimension bookkeeping done here depends only on exponents,
so no field elements are ever materialized.

Conventions:
  - tensor product  = convolution of exponent multisets
  - C-invariants    = multiplicity of the residue 0
  - Bockstein image = identity on exponents in odd characteristic,
                      exponent doubling in characteristic 2
"""

from __future__ import annotations

import math
from collections import Counter
from itertools import combinations
from typing import Iterable, Mapping

from .errors import EulerCharError

# Exhaustive character enumeration is linear in m; cap it so a bad spec
# cannot stall the process.
MAX_ENUMERATION_MODULUS = 1 << 20


class CharMultiset:
    """Multiset of character exponents mod m with nonnegative multiplicities."""

    __slots__ = ("m", "_counts")

    def __init__(self, m: int, counts: Mapping[int, int] | None = None):
        if m < 1:
            raise EulerCharError(f"modulus must be >= 1, got {m}")
        self.m = m
        cleaned: dict[int, int] = {}
        for r, c in (counts or {}).items():
            if c < 0:
                raise EulerCharError(f"negative multiplicity {c} for residue {r}")
            if not 0 <= r < m:
                raise EulerCharError(f"residue {r} out of range [0, {m})")
            if c:
                cleaned[r] = cleaned.get(r, 0) + c
        self._counts = cleaned

    @classmethod
    def from_elements(cls, m: int, elements: Iterable[int]) -> "CharMultiset":
        return cls(m, Counter(e % m for e in elements))

    @property
    def dim(self) -> int:
        """Total multiplicity, i.e. the dimension of the underlying module."""
        return sum(self._counts.values())

    def multiplicity(self, r: int) -> int:
        return self._counts.get(r % self.m, 0)

    def items(self):
        return sorted(self._counts.items())

    def elements(self) -> list[int]:
        out: list[int] = []
        for r, c in self.items():
            out.extend([r] * c)
        return out

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, CharMultiset)
            and self.m == other.m
            and self._counts == other._counts
        )

    def __hash__(self) -> int:
        return hash((self.m, tuple(self.items())))

    def __repr__(self) -> str:
        inside = ", ".join(f"{r}:{c}" for r, c in self.items())
        return f"CharMultiset(mod {self.m}; {{{inside}}})"

    def _require_same_modulus(self, other: "CharMultiset") -> None:
        if self.m != other.m:
            raise EulerCharError(f"modulus mismatch: {self.m} != {other.m}")

    def union(self, other: "CharMultiset") -> "CharMultiset":
        """Multiset union (direct sum of representations)."""
        self._require_same_modulus(other)
        merged = Counter(self._counts)
        merged.update(other._counts)
        return CharMultiset(self.m, merged)

    def tensor(self, other: "CharMultiset") -> "CharMultiset":
        """Character of the tensor product: convolution of exponents."""
        self._require_same_modulus(other)
        out: Counter[int] = Counter()
        for r, c in self._counts.items():
            for s, d in other._counts.items():
                out[(r + s) % self.m] += c * d
        return CharMultiset(self.m, out)

    def shifted(self, beta: int) -> "CharMultiset":
        """Tensor with the single character of exponent beta."""
        return CharMultiset(
            self.m, {(r + beta) % self.m: c for r, c in self._counts.items()}
        )

    def scaled(self, unit: int) -> "CharMultiset":
        """Multiply every exponent by a unit mod m (relabel the generator of C)."""
        if math.gcd(unit, self.m) != 1:
            raise EulerCharError(f"{unit} is not a unit mod {self.m}")
        out: Counter[int] = Counter()
        for r, c in self._counts.items():
            out[(r * unit) % self.m] += c
        return CharMultiset(self.m, out)

    def lambda2(self) -> "CharMultiset":
        """Second exterior power: pairwise sums over unordered pairs of slots."""
        out: Counter[int] = Counter()
        for a, b in combinations(self.elements(), 2):
            out[(a + b) % self.m] += 1
        return CharMultiset(self.m, out)

    def bockstein_image(self, p: int) -> "CharMultiset":
        """Character of the Bockstein of a degree-one piece.

        Identity for odd p; for p = 2 the exponents double (squares of the
        degree-one classes).
        """
        if p == 2:
            out: Counter[int] = Counter()
            for r, c in self._counts.items():
                out[(2 * r) % self.m] += c
            return CharMultiset(self.m, out)
        return self

    def invariants_dim(self) -> int:
        """Dimension of the C-fixed subspace: multiplicity of exponent 0."""
        return self._counts.get(0, 0)


def exterior_power(chars: CharMultiset, s: int) -> CharMultiset:
    """s-th exterior power of a sum of one-dimensional characters.

    Slots are distinct even when exponents repeat, so the total
    multiplicity is C(dim, s).
    """
    if s < 0:
        raise EulerCharError("exterior power degree must be >= 0")
    m = chars.m
    table: list[Counter[int]] = [Counter() for _ in range(s + 1)]
    table[0][0] = 1
    for alpha in chars.elements():
        for j in range(s, 0, -1):
            if not table[j - 1]:
                continue
            for r, c in list(table[j - 1].items()):
                table[j][(r + alpha) % m] += c
    return CharMultiset(m, table[s])


def symmetric_power(chars: CharMultiset, j: int) -> CharMultiset:
    """j-th symmetric power: monomials of degree j in the character slots."""
    if j < 0:
        raise EulerCharError("symmetric power degree must be >= 0")
    m = chars.m
    table: list[Counter[int]] = [Counter() for _ in range(j + 1)]
    table[0][0] = 1
    for alpha in chars.elements():
        # ascending degree reuses the current slot, allowing repeats
        for d in range(1, j + 1):
            for r, c in list(table[d - 1].items()):
                table[d][(r + alpha) % m] += c
    return CharMultiset(m, table[j])


def graded_character(chars: CharMultiset, p: int, n: int) -> CharMultiset:
    """Character of the degree-n cohomology of (Z/p)^k as a C-module.

    The input is the character of the degree-one part.  In odd
    characteristic the cohomology is exterior on degree-one generators
    tensored with polynomial on their Bocksteins in degree two; in
    characteristic 2 it is polynomial on the degree-one generators.
    """
    _require_coprime(p, chars.m)
    if n < 0:
        raise EulerCharError("degree must be >= 0")
    if p == 2:
        return symmetric_power(chars, n)
    out = CharMultiset(chars.m)
    betas = chars.bockstein_image(p)
    for s in range(n % 2, n + 1, 2):
        jj = (n - s) // 2
        out = out.union(exterior_power(chars, s).tensor(symmetric_power(betas, jj)))
    return out


def euler_local(chars: CharMultiset, p: int, beta: int) -> int:
    """h^2 - h^1 + h^0 of the semidirect product against the character beta.

    May be negative when p = 2: the square and degree-one contributions
    enter with opposite signs.
    """
    _require_coprime(p, chars.m)
    lam = chars.lambda2()
    value = lam.shifted(beta).invariants_dim()
    value += 1 if beta % chars.m == 0 else 0
    if p == 2:
        squares = chars.bockstein_image(2)
        value += squares.shifted(beta).invariants_dim()
        value -= chars.shifted(beta).invariants_dim()
    return value


def mu2_semidirect(chars: CharMultiset, p: int) -> int:
    """Second Swan invariant of E_k x| C from the character data."""
    _require_coprime(p, chars.m)
    if chars.dim < 1:
        raise EulerCharError("need at least one character exponent")
    _require_enumerable(chars.m)
    best = max(euler_local(chars, p, beta) for beta in range(chars.m))
    return max(1, best)


def e2_semidirect(chars: CharMultiset, p: int) -> int:
    """Cohomological invariant e_2 of E_k x| C.

    Maximum of the invariant-dimension expression over F_p, the rational
    baseline 2, and the (dominated) contribution from primes dividing m.
    """
    _require_coprime(p, chars.m)
    value = chars.lambda2().invariants_dim() - chars.invariants_dim() + 2
    if p == 2:
        squares = chars.bockstein_image(2)
        value += squares.invariants_dim() - chars.invariants_dim()
    candidates = [value, 2]
    if chars.m > 1:
        candidates.append(1)  # primes dividing |C| contribute at most 1
    return max(candidates)


def mun_semidirect(chars: CharMultiset, p: int, n: int) -> int:
    """n-th Swan invariant of E_k x| C for n >= 1.

    Alternating sums of invariant dimensions of the graded characters,
    maximized over all twisting characters, then clamped by the floors
    (1 for n even, 0 for n odd) which also absorb the contributions of
    primes dividing m.
    """
    _require_coprime(p, chars.m)
    if n < 1:
        raise EulerCharError("Swan invariants are defined for n >= 1")
    _require_enumerable(chars.m)
    m = chars.m
    graded = [graded_character(chars, p, t) for t in range(n + 1)]
    best = None
    for beta in range(m):
        total = 0
        target = (-beta) % m
        for t in range(n + 1):
            sign = 1 if (n - t) % 2 == 0 else -1
            total += sign * graded[t].multiplicity(target)
        if best is None or total > best:
            best = total
    floor = 1 if n % 2 == 0 else 0
    return max(floor, best)


def _require_coprime(p: int, m: int) -> None:
    if math.gcd(p, m) != 1:
        raise EulerCharError(f"characteristic {p} must be coprime to modulus {m}")


def _require_enumerable(m: int) -> None:
    if m > MAX_ENUMERATION_MODULUS:
        raise EulerCharError(
            f"modulus {m} exceeds enumeration cap {MAX_ENUMERATION_MODULUS}"
        )
