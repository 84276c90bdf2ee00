"""Symbolic group families, the spec grammar, and small concrete tables.

Supported families (grammar string in parentheses):

    Trivial              (1)
    Cyclic               (C(m))
    ElementaryAbelian    (E(p,k))            (Z/p)^k
    SemidirectIsotypic   (U(p,k,a,m))        (Z/p)^k x| Z/m, every eigenvalue
                                             character equal to alpha^a
    Semidirect           (Usd(p,m;a1,...,ak)) general eigenvalue exponents
    Frobenius            (J(k))              (Z/2)^k x| Z/(2^k-1), the cyclic
                                             factor multiplying by a primitive
                                             field element
    Product              (Prod(s,t))
    Quaternion           (Q(4n))             generalized quaternion/dicyclic
    TableGroup           (Table(path))       explicit multiplication table

Metadata (minimal generator count d, declared cohomological period,
solvability, exceptionality of periodic resolutions) is always declared by
the caller, never computed; operations that need a missing field raise
MissingMetadataError.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field, replace
from functools import reduce

import numpy as np

from .characters import CharMultiset
from .errors import MissingMetadataError, RealizeError, SpecError

# Smallest primitive polynomial over GF(2) per degree, bit i = coeff of x^i.
# Any other primitive choice gives an isomorphic group; fixing one keeps the
# multiplication tables reproducible.
PRIMITIVE_POLY = {
    1: 0x3,
    2: 0x7,
    3: 0xB,
    4: 0x13,
    5: 0x25,
    6: 0x43,
    7: 0x83,
    8: 0x11D,
    9: 0x211,
    10: 0x409,
    11: 0x805,
    12: 0x1053,
    13: 0x201B,
    14: 0x402B,
    15: 0x8003,
    16: 0x1002D,
}

ASSOCIATIVITY_CHECK_LIMIT = 128
DEFAULT_MAX_ORDER = 4096


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def prime_factors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


@dataclass(frozen=True)
class GroupMeta:
    """Caller-declared facts about a group; None means undeclared."""

    d: int | None = None
    period: int | None = None
    solvable: bool | None = None
    exceptional: bool | None = None

    def __post_init__(self):
        if self.d is not None and self.d < 0:
            raise SpecError(f"generator count d must be >= 0, got {self.d}")
        if self.period is not None:
            if self.period <= 0 or self.period % 2 != 0:
                raise SpecError(f"declared period must be a positive even integer, got {self.period}")


_NO_META = GroupMeta()


@dataclass(frozen=True)
class GroupSpec:
    """Base class for symbolic group descriptions."""

    meta: GroupMeta = field(default=_NO_META, kw_only=True)

    def with_meta(self, **kwargs) -> "GroupSpec":
        return replace(self, meta=replace(self.meta, **kwargs))

    def order(self) -> int:
        raise NotImplementedError

    def primes(self) -> list[int]:
        return prime_factors(self.order())

    def require_meta(self, name: str) -> object:
        value = getattr(self.meta, name)
        if value is None:
            raise MissingMetadataError(name, f"{self} requires declared metadata '{name}'")
        return value


@dataclass(frozen=True)
class Trivial(GroupSpec):
    def order(self) -> int:
        return 1

    def __str__(self) -> str:
        return "1"


@dataclass(frozen=True)
class Cyclic(GroupSpec):
    m: int

    def __post_init__(self):
        if self.m < 1:
            raise SpecError(f"cyclic order must be >= 1, got {self.m}")

    def order(self) -> int:
        return self.m

    def __str__(self) -> str:
        return f"C({self.m})"


@dataclass(frozen=True)
class ElementaryAbelian(GroupSpec):
    p: int
    k: int

    def __post_init__(self):
        if not is_prime(self.p):
            raise SpecError(f"elementary abelian base {self.p} is not prime")
        if self.k < 0:
            raise SpecError(f"rank must be >= 0, got {self.k}")

    def order(self) -> int:
        return self.p**self.k

    def __str__(self) -> str:
        return f"E({self.p},{self.k})"


@dataclass(frozen=True)
class Product(GroupSpec):
    left: GroupSpec
    right: GroupSpec

    def order(self) -> int:
        return self.left.order() * self.right.order()

    def factors(self) -> list[GroupSpec]:
        out = []
        for part in (self.left, self.right):
            if isinstance(part, Product):
                out.extend(part.factors())
            else:
                out.append(part)
        return out

    def __str__(self) -> str:
        return f"Prod({self.left},{self.right})"


def _validate_semidirect(p: int, m: int) -> None:
    if not is_prime(p):
        raise SpecError(f"semidirect base {p} is not prime")
    if m < 1:
        raise SpecError(f"cyclic complement order must be >= 1, got {m}")
    if math.gcd(p, m) != 1:
        raise SpecError(f"gcd({p},{m}) != 1: complement order must be prime to p")


@dataclass(frozen=True)
class SemidirectIsotypic(GroupSpec):
    """(Z/p)^k x| Z/m with all k eigenvalue characters equal to alpha^a."""

    p: int
    k: int
    a: int
    m: int

    def __post_init__(self):
        _validate_semidirect(self.p, self.m)
        if self.k < 1:
            raise SpecError(f"rank must be >= 1, got {self.k}")
        if not 0 <= self.a < self.m:
            raise SpecError(f"exponent {self.a} out of range [0,{self.m})")
        # faithful action: the eigenvalue alpha^a must have order exactly m
        if math.gcd(self.a, self.m) != 1:
            raise SpecError(
                f"eigenvalue exponent {self.a} has order {self.m // math.gcd(self.a, self.m)} < {self.m}; the action must be faithful"
            )

    def order(self) -> int:
        return self.p**self.k * self.m

    def exponents(self) -> CharMultiset:
        return CharMultiset(self.m, {self.a % self.m: self.k})

    def __str__(self) -> str:
        return f"U({self.p},{self.k},{self.a},{self.m})"


@dataclass(frozen=True)
class Semidirect(GroupSpec):
    """(Z/p)^k x| Z/m with eigenvalue characters alpha^{a_1},...,alpha^{a_k}."""

    p: int
    exps: tuple[int, ...]
    m: int

    def __post_init__(self):
        _validate_semidirect(self.p, self.m)
        if len(self.exps) < 1:
            raise SpecError("need at least one eigenvalue exponent")
        for a in self.exps:
            if not 0 <= a < self.m:
                raise SpecError(f"exponent {a} out of range [0,{self.m})")

    def order(self) -> int:
        return self.p ** len(self.exps) * self.m

    @property
    def k(self) -> int:
        return len(self.exps)

    def exponents(self) -> CharMultiset:
        return CharMultiset.from_elements(self.m, self.exps)

    def __str__(self) -> str:
        exps = ",".join(str(a) for a in self.exps)
        return f"Usd({self.p},{self.m};{exps})"


@dataclass(frozen=True)
class Frobenius(GroupSpec):
    """(Z/2)^k x| Z/(2^k-1); the cyclic part multiplies by a field generator."""

    k: int

    def __post_init__(self):
        if self.k < 1:
            raise SpecError(f"Frobenius rank must be >= 1, got {self.k}")

    def order(self) -> int:
        return 2**self.k * (2**self.k - 1)

    @property
    def p(self) -> int:
        return 2

    @property
    def m(self) -> int:
        return 2**self.k - 1

    def exponents(self) -> CharMultiset:
        return frobenius_exponents(self.k)

    def __str__(self) -> str:
        return f"J({self.k})"


@dataclass(frozen=True)
class Quaternion(GroupSpec):
    """Generalized quaternion group <a, b | a^{2n} = 1, b^2 = a^n, bab^-1 = a^-1>."""

    n4: int

    def __post_init__(self):
        if self.n4 < 8 or self.n4 % 4 != 0:
            raise SpecError(f"quaternion order must be a multiple of 4 and >= 8, got {self.n4}")

    def order(self) -> int:
        return self.n4

    def __str__(self) -> str:
        return f"Q({self.n4})"


@dataclass(frozen=True)
class TableGroup(GroupSpec):
    path: str

    def order(self) -> int:
        try:
            with open(self.path) as fh:
                return int(fh.readline().split()[0])
        except (OSError, ValueError, IndexError) as exc:
            raise RealizeError(f"cannot read table file {self.path}: {exc}") from exc

    def __str__(self) -> str:
        return f"Table({self.path})"


def frobenius_exponents(k: int) -> CharMultiset:
    """Eigenvalue exponents {2^0, ..., 2^(k-1)} mod 2^k - 1 of the J_k action."""
    if k < 1:
        raise SpecError(f"k must be >= 1, got {k}")
    m = 2**k - 1
    if m == 1:
        return CharMultiset(1, {0: 1})
    return CharMultiset.from_elements(m, (1 << i for i in range(k)))


# ---------------------------------------------------------------------------
# Grammar:  1 | C(m) | E(p,k) | U(p,k,a,m) | Usd(p,m;a1,...,ak) | J(k)
#           | Prod(spec,spec) | Q(4n) | Table(path)


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def error(self, message: str):
        raise SpecError(message, position=self.pos)

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, ch: str):
        self.skip_ws()
        if self.pos >= len(self.text) or self.text[self.pos] != ch:
            found = self.text[self.pos] if self.pos < len(self.text) else "end of input"
            self.error(f"expected '{ch}', found '{found}'")
        self.pos += 1

    def integer(self) -> int:
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == start:
            self.error("expected an integer")
        return int(self.text[start : self.pos])

    def name(self) -> str:
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isalpha():
            self.pos += 1
        return self.text[start : self.pos]

    def spec(self) -> GroupSpec:
        self.skip_ws()
        if self.peek() == "1":
            self.pos += 1
            return Trivial()
        head = self.name()
        if not head:
            self.error("expected a family name or '1'")
        if head == "C":
            self.expect("(")
            m = self.integer()
            self.expect(")")
            return Cyclic(m)
        if head == "E":
            self.expect("(")
            p = self.integer()
            self.expect(",")
            k = self.integer()
            self.expect(")")
            return ElementaryAbelian(p, k)
        if head == "U":
            self.expect("(")
            p = self.integer()
            self.expect(",")
            k = self.integer()
            self.expect(",")
            a = self.integer()
            self.expect(",")
            m = self.integer()
            self.expect(")")
            return SemidirectIsotypic(p, k, a, m)
        if head == "Usd":
            self.expect("(")
            p = self.integer()
            self.expect(",")
            m = self.integer()
            self.expect(";")
            exps = [self.integer()]
            while self.peek() == ",":
                self.expect(",")
                exps.append(self.integer())
            self.expect(")")
            return Semidirect(p, tuple(exps), m)
        if head == "J":
            self.expect("(")
            k = self.integer()
            self.expect(")")
            return Frobenius(k)
        if head == "Prod":
            self.expect("(")
            left = self.spec()
            self.expect(",")
            right = self.spec()
            self.expect(")")
            return Product(left, right)
        if head == "Q":
            self.expect("(")
            n4 = self.integer()
            self.expect(")")
            return Quaternion(n4)
        if head == "Table":
            self.expect("(")
            self.skip_ws()
            start = self.pos
            depth = 0
            while self.pos < len(self.text):
                ch = self.text[self.pos]
                if ch == ")" and depth == 0:
                    break
                depth += ch == "("
                depth -= ch == ")"
                self.pos += 1
            path = self.text[start : self.pos].strip()
            self.expect(")")
            if not path:
                self.error("empty table path")
            return TableGroup(path)
        self.error(f"unknown family '{head}'")


def parse_spec(text: str) -> GroupSpec:
    """Parse a group-spec string; invariants are checked on construction."""
    parser = _Parser(text)
    spec = parser.spec()
    parser.skip_ws()
    if parser.pos != len(text):
        parser.error("trailing characters after spec")
    return spec


# ---------------------------------------------------------------------------
# Concrete realizations


class ConcreteGroup:
    """A finite group as a multiplication table on indices 0..order-1.

    Index 0 is the identity.  Tables of order <= 128 are fully checked for
    associativity on construction; larger tables only get the cheap row and
    column permutation checks.
    """

    def __init__(self, mul):
        mul = np.asarray(mul, dtype=np.int64)
        if mul.ndim != 2 or mul.shape[0] != mul.shape[1]:
            raise RealizeError(f"multiplication table must be square, got shape {mul.shape}")
        n = mul.shape[0]
        if n < 1:
            raise RealizeError("group must have at least one element")
        if mul.min() < 0 or mul.max() >= n:
            raise RealizeError("table entries out of range")
        if not np.array_equal(mul[0], np.arange(n)) or not np.array_equal(mul[:, 0], np.arange(n)):
            raise RealizeError("index 0 must be the identity")
        ordered = np.broadcast_to(np.arange(n), (n, n))
        if not np.array_equal(np.sort(mul, axis=1), ordered):
            raise RealizeError("rows of the table are not permutations")
        if not np.array_equal(np.sort(mul.T, axis=1), ordered):
            raise RealizeError("columns of the table are not permutations")
        if n <= ASSOCIATIVITY_CHECK_LIMIT:
            left = mul[mul, :]        # left[a,b,c] = (a*b)*c
            right = mul[:, mul]       # right[a,b,c] = a*(b*c)
            if not np.array_equal(left, right):
                raise RealizeError("multiplication table is not associative")
        self.mul = mul
        self.order = n
        inv = np.empty(n, dtype=np.int64)
        rows, cols = np.nonzero(mul == 0)
        inv[rows] = cols
        self.inv = inv

    def multiply(self, a: int, b: int) -> int:
        return int(self.mul[a, b])

    def element_orders(self) -> list[int]:
        orders = []
        for g in range(self.order):
            x, k = g, 1
            while x != 0:
                x = self.multiply(x, g)
                k += 1
            orders.append(k)
        return orders

    def is_abelian(self) -> bool:
        return np.array_equal(self.mul, self.mul.T)

    def center_size(self) -> int:
        return int(np.sum(np.all(self.mul == self.mul.T, axis=1)))

    def relabel(self, perm) -> "ConcreteGroup":
        """Conjugate the table by a permutation with perm[0] == 0."""
        perm = np.asarray(perm, dtype=np.int64)
        if perm[0] != 0:
            raise RealizeError("relabeling must keep the identity at index 0")
        new = np.empty_like(self.mul)
        new[np.ix_(perm, perm)] = perm[self.mul]
        return ConcreteGroup(new)

    def commutator_subgroup(self) -> list[int]:
        """Element indices of the subgroup generated by all commutators."""
        gens = set()
        for a in range(self.order):
            for b in range(self.order):
                ab = self.multiply(a, b)
                ba = self.multiply(b, a)
                gens.add(self.multiply(ab, int(self.inv[ba])))
        members = {0}
        frontier = list(gens - {0}) or []
        members.update(gens)
        changed = True
        while changed:
            changed = False
            current = list(members)
            for x in current:
                for g in gens:
                    y = self.multiply(x, g)
                    if y not in members:
                        members.add(y)
                        changed = True
        return sorted(members)

    def abelianization_p_rank(self, p: int) -> int:
        """dim Hom(G, Z/p) computed from the abelianized quotient table."""
        comm = self.commutator_subgroup()
        comm_set = set(comm)
        # coset representatives and coset lookup
        coset_of = {}
        reps = []
        for g in range(self.order):
            if g in coset_of:
                continue
            reps.append(g)
            for h in comm:
                coset_of[self.multiply(g, h)] = len(reps) - 1
        count = 0
        for rep in reps:
            x = rep
            for _ in range(p - 1):
                x = self.multiply(x, rep)
            if coset_of[x] == coset_of[0]:
                count += 1
        rank = 0
        while count > 1:
            count //= p
            rank += 1
        return rank


def _vector_table(p: int, k: int) -> np.ndarray:
    """All vectors of F_p^k in lexicographic order, one per row."""
    if k == 0:
        return np.zeros((1, 0), dtype=np.int64)
    grids = np.indices((p,) * k).reshape(k, -1).T
    return grids.astype(np.int64)


def _vector_indices(vectors: np.ndarray, p: int) -> np.ndarray:
    k = vectors.shape[1]
    weights = p ** np.arange(k - 1, -1, -1, dtype=np.int64) if k else np.zeros(0, dtype=np.int64)
    return vectors @ weights


def _semidirect_table(p: int, action: np.ndarray, m: int) -> np.ndarray:
    """Table for F_p^k x| Z/m, the generator of Z/m acting by `action`.

    Elements are pairs (v, c) indexed lexicographically as vec_index*m + c,
    with (v,c)(w,d) = (v + action^c w, c + d).
    """
    k = action.shape[0]
    vecs = _vector_table(p, k)
    nvec = vecs.shape[0]
    powers = [np.eye(k, dtype=np.int64)]
    for _ in range(1, m):
        powers.append(powers[-1] @ action % p)
    # acted[c] maps vector index w to the index of action^c w
    acted = np.empty((m, nvec), dtype=np.int64)
    for c in range(m):
        images = vecs @ powers[c].T % p
        acted[c] = _vector_indices(images, p)
    vsum = np.empty((nvec, nvec), dtype=np.int64)
    for v in range(nvec):
        vsum[v] = _vector_indices((vecs[v] + vecs) % p, p)
    n = nvec * m
    table = np.empty((n, n), dtype=np.int64)
    for c in range(m):
        for d in range(m):
            # (v,c)(w,d): vector part v + action^c w, cyclic part c+d
            block = vsum[:, acted[c]]  # block[v,w]
            table[c::m, d::m] = block * m + (c + d) % m
    return table


def _companion_matrix_gf2(poly: int, k: int) -> np.ndarray:
    """Multiplication by a root of poly on the basis {1, u, ..., u^(k-1)}."""
    mat = np.zeros((k, k), dtype=np.int64)
    for i in range(k - 1):
        mat[i + 1, i] = 1
    for i in range(k):
        mat[i, k - 1] = (poly >> i) & 1
    return mat


def _quaternion_table(n4: int) -> np.ndarray:
    """Dicyclic table: elements a^i b^e indexed as i*2 + e."""
    two_n = n4 // 2
    n = n4

    def idx(i, e):
        return (i % two_n) * 2 + e

    table = np.empty((n, n), dtype=np.int64)
    half = two_n // 2
    for i in range(two_n):
        for e in (0, 1):
            for j in range(two_n):
                for f in (0, 1):
                    if e == 0:
                        table[idx(i, e), idx(j, f)] = idx(i + j, f)
                    else:
                        # b a^j = a^-j b;  b^2 = a^(n/2... ) = a^half
                        i2 = i - j
                        if f == 1:
                            table[idx(i, e), idx(j, f)] = idx(i2 + half, 0)
                        else:
                            table[idx(i, e), idx(j, f)] = idx(i2, 1)
    return table


def load_table(path: str) -> np.ndarray:
    try:
        with open(path) as fh:
            first = fh.readline().split()
            if len(first) != 1:
                raise RealizeError(f"{path}: first line must contain the group order")
            n = int(first[0])
            rows = []
            for line in fh:
                if line.strip():
                    rows.append([int(tok) for tok in line.split()])
    except OSError as exc:
        raise RealizeError(f"cannot read table file {path}: {exc}") from exc
    except ValueError as exc:
        raise RealizeError(f"malformed table file {path}: {exc}") from exc
    if len(rows) != n or any(len(r) != n for r in rows):
        raise RealizeError(f"{path}: expected {n} rows of {n} entries")
    return np.asarray(rows, dtype=np.int64)


def smallest_primitive_root(p: int) -> int:
    """Smallest generator of the unit group of F_p."""
    if p == 2:
        return 1
    factors = prime_factors(p - 1)
    for g in range(2, p):
        if all(pow(g, (p - 1) // q, p) != 1 for q in factors):
            return g
    raise RealizeError(f"no primitive root mod {p}")


def unit_of_order(p: int, m: int) -> int:
    """Canonical element of multiplicative order m in F_p; needs m | p-1."""
    if m == 1:
        return 1
    if (p - 1) % m != 0:
        raise RealizeError(
            f"no element of order {m} in F_{p}: eigenvalues are not realizable over the prime field (requires m | p-1)"
        )
    return pow(smallest_primitive_root(p), (p - 1) // m, p)


def realize(spec: GroupSpec, max_order: int = DEFAULT_MAX_ORDER) -> ConcreteGroup:
    """Build the multiplication table of a spec, refusing orders above max_order."""
    order = spec.order()
    if order > max_order:
        raise RealizeError(f"|G| = {order} exceeds max_order = {max_order}")
    if isinstance(spec, Trivial):
        return ConcreteGroup(np.zeros((1, 1), dtype=np.int64))
    if isinstance(spec, Cyclic):
        idx = np.arange(spec.m, dtype=np.int64)
        return ConcreteGroup((idx[:, None] + idx[None, :]) % spec.m)
    if isinstance(spec, ElementaryAbelian):
        if spec.k == 0:
            return ConcreteGroup(np.zeros((1, 1), dtype=np.int64))
        return ConcreteGroup(_semidirect_table(spec.p, np.eye(spec.k, dtype=np.int64), 1))
    if isinstance(spec, Product):
        left = realize(spec.left, max_order)
        right = realize(spec.right, max_order)
        nr = right.order
        a = left.mul[:, None, :, None] * nr
        b = right.mul[None, :, None, :]
        table = (a + b).reshape(left.order * nr, left.order * nr)
        return ConcreteGroup(table)
    if isinstance(spec, (SemidirectIsotypic, Semidirect)):
        exps = spec.exps if isinstance(spec, Semidirect) else (spec.a,) * spec.k
        zeta = unit_of_order(spec.p, spec.m)
        action = np.diag([pow(zeta, a, spec.p) for a in exps]).astype(np.int64)
        if len(exps) == 0:
            raise RealizeError("empty semidirect vector part")
        return ConcreteGroup(_semidirect_table(spec.p, action, spec.m))
    if isinstance(spec, Frobenius):
        if spec.k not in PRIMITIVE_POLY:
            raise RealizeError(
                f"no built-in primitive polynomial for k = {spec.k} (supported: 1..{max(PRIMITIVE_POLY)})"
            )
        action = _companion_matrix_gf2(PRIMITIVE_POLY[spec.k], spec.k)
        return ConcreteGroup(_semidirect_table(2, action, 2**spec.k - 1))
    if isinstance(spec, Quaternion):
        return ConcreteGroup(_quaternion_table(spec.n4))
    if isinstance(spec, TableGroup):
        return ConcreteGroup(load_table(spec.path))
    raise RealizeError(f"cannot realize spec {spec!r}")
