"""Brute-force cohomology dimensions via inhomogeneous bar cochains.

This is the independent check for every closed form in the package: it
never consults the series or character machinery.  C^n(G; M) is the space
of functions G^n -> M (C^0 = M), with the standard coboundary

    (d f)(g_1,...,g_{n+1}) = g_1 f(g_2,...,g_{n+1})
        + sum_i (-1)^i f(g_1,...,g_i g_{i+1},...,g_{n+1})
        + (-1)^{n+1} f(g_1,...,g_n)

and h^n = dim C^n - rank d^n - rank d^{n-1}, all over F_p with exact
arithmetic.  Coboundary matrices are built sparsely and ranks are taken by
Gaussian elimination with a fixed pivot order (first nonzero by ascending
row within each column vector), so results are reproducible bit for bit.

Rank packing per characteristic:
  p = 2   columns as Python int bitsets
  p = 3   columns as two bitplanes (value 1 -> lo bit, value 2 -> hi bit)
  p >= 5  dense numpy elimination
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass

import numpy as np

from .errors import BudgetError, EulerCharError, RealizeError
from .groupspec import ConcreteGroup, GroupSpec, Semidirect, SemidirectIsotypic, realize, unit_of_order
from .series import closed_form_series

DEFAULT_MEMORY_BUDGET = 2 * 1024**3
MEMORY_BUDGET_ENV = "EULERCHAR_MEMORY_BUDGET"
ORACLE_MAX_ORDER = 64
MODULE_CHECK_LIMIT = 64


def resolve_memory_budget(budget: int | None = None) -> int:
    if budget is not None:
        return budget
    env = os.environ.get(MEMORY_BUDGET_ENV)
    return int(env) if env else DEFAULT_MEMORY_BUDGET


class FpModule:
    """An F_p[G]-module given by one invertible matrix per group element."""

    def __init__(self, p: int, matrices):
        matrices = np.asarray(matrices, dtype=np.int64) % p
        if matrices.ndim != 3 or matrices.shape[1] != matrices.shape[2]:
            raise EulerCharError(f"module action must have shape (order, dim, dim), got {matrices.shape}")
        self.p = p
        self.matrices = matrices
        self.order = matrices.shape[0]
        self.dim = matrices.shape[1]
        if self.dim < 1:
            raise EulerCharError("module dimension must be >= 1")
        if not np.array_equal(matrices[0] % p, np.eye(self.dim, dtype=np.int64)):
            raise EulerCharError("identity element must act as the identity matrix")

    def check_against(self, group: ConcreteGroup) -> None:
        """Verify the action is a homomorphism (full pair check for small orders)."""
        if self.order != group.order:
            raise EulerCharError(f"module is over a group of order {self.order}, got {group.order}")
        if group.order > MODULE_CHECK_LIMIT:
            return
        mats = self.matrices
        for g in range(group.order):
            prod = mats[g] @ mats % self.p  # prod[h] = action[g] @ action[h]
            if not np.array_equal(prod, mats[group.mul[g]]):
                raise EulerCharError(f"action is not multiplicative at element {g}")

    @classmethod
    def trivial(cls, p: int, order: int) -> "FpModule":
        mats = np.broadcast_to(np.eye(1, dtype=np.int64), (order, 1, 1)).copy()
        return cls(p, mats)


def semidirect_character_module(spec: GroupSpec, beta: int, group: ConcreteGroup) -> FpModule:
    """One-dimensional module of a realized semidirect group.

    The cyclic complement acts through the canonical element of order m in
    F_p (the same one realize() uses), raised to beta; the vector part acts
    trivially.  Requires m | p - 1.
    """
    if not isinstance(spec, (SemidirectIsotypic, Semidirect)):
        raise EulerCharError("character modules are defined for semidirect specs only")
    zeta = unit_of_order(spec.p, spec.m)
    mats = np.empty((group.order, 1, 1), dtype=np.int64)
    for idx in range(group.order):
        c = idx % spec.m
        mats[idx, 0, 0] = pow(zeta, (beta * c) % spec.m, spec.p)
    module = FpModule(spec.p, mats)
    module.check_against(group)
    return module


@dataclass
class SparseMatrix:
    """Column-major sparse integer matrix; cols[j] maps row -> entry."""

    nrows: int
    ncols: int
    cols: list

    @classmethod
    def from_dense(cls, rows) -> "SparseMatrix":
        arr = [list(r) for r in rows]
        nrows = len(arr)
        ncols = len(arr[0]) if nrows else 0
        cols = [
            {i: arr[i][j] for i in range(nrows) if arr[i][j]} for j in range(ncols)
        ]
        return cls(nrows, ncols, cols)


def _rank_gf2(columns) -> int:
    pivots: dict[int, int] = {}
    rank = 0
    for v in columns:
        while v:
            pos = (v & -v).bit_length() - 1
            pivot = pivots.get(pos)
            if pivot is None:
                pivots[pos] = v
                rank += 1
                break
            v ^= pivot
    return rank


def _gf3_add(alo: int, ahi: int, blo: int, bhi: int) -> tuple[int, int]:
    e = alo ^ blo
    f = ahi ^ bhi
    return (e & ~f) | (ahi & bhi), (f & ~e) | (alo & blo)


def _rank_gf3(columns) -> int:
    pivots: dict[int, tuple[int, int]] = {}
    rank = 0
    for lo, hi in columns:
        while lo | hi:
            mask = lo | hi
            pos = (mask & -mask).bit_length() - 1
            entry = pivots.get(pos)
            if entry is None:
                if (hi >> pos) & 1:
                    lo, hi = hi, lo  # scale by 2 so the pivot entry is 1
                pivots[pos] = (lo, hi)
                rank += 1
                break
            plo, phi = entry
            if (lo >> pos) & 1:
                lo, hi = _gf3_add(lo, hi, phi, plo)  # subtract the pivot
            else:
                lo, hi = _gf3_add(lo, hi, plo, phi)  # subtract twice the pivot
    return rank


def _rank_dense_modp(matrix: np.ndarray, p: int) -> int:
    a = matrix % p
    nrows, ncols = a.shape
    rank = 0
    row = 0
    for col in range(ncols):
        nz = np.nonzero(a[row:, col])[0]
        if nz.size == 0:
            continue
        piv = row + int(nz[0])
        if piv != row:
            a[[row, piv]] = a[[piv, row]]
        inv = pow(int(a[row, col]), -1, p)
        a[row] = a[row] * inv % p
        below = np.nonzero(a[row + 1 :, col])[0]
        if below.size:
            idx = row + 1 + below
            a[idx] = (a[idx] - np.outer(a[idx, col], a[row])) % p
        rank += 1
        row += 1
        if row == nrows:
            break
    return rank


def rank_mod_p(matrix: SparseMatrix, p: int) -> int:
    """Rank of a sparse integer matrix over F_p."""
    if p == 2:
        cols = []
        for col in matrix.cols:
            bits = 0
            for r, value in col.items():
                if int(value) % 2:
                    bits |= 1 << int(r)
            cols.append(bits)
        return _rank_gf2(cols)
    if p == 3:
        cols = []
        for col in matrix.cols:
            lo = hi = 0
            for r, value in col.items():
                v = int(value) % 3
                if v == 1:
                    lo |= 1 << int(r)
                elif v == 2:
                    hi |= 1 << int(r)
            cols.append((lo, hi))
        return _rank_gf3(cols)
    # dense fallback; rows of the eliminated array are the matrix columns
    dense = np.zeros((matrix.ncols, matrix.nrows), dtype=np.int64)
    for j, col in enumerate(matrix.cols):
        for r, value in col.items():
            dense[j, r] = value % p
    return _rank_dense_modp(dense, p)


def coboundary_matrix(group: ConcreteGroup, module: FpModule, n: int) -> SparseMatrix:
    """Matrix of d^n : C^n -> C^(n+1) in the delta-function bases."""
    if n < 0:
        raise EulerCharError("degree must be >= 0")
    p = module.p
    order = group.order
    dim = module.dim
    mats = module.matrices
    if n == 0:
        cols = []
        for j in range(dim):
            col: dict[int, int] = {}
            for g in range(order):
                base = g * dim
                for i in range(dim):
                    value = int(mats[g, i, j] - (1 if i == j else 0)) % p
                    if value:
                        col[base + i] = value
            cols.append(col)
        return SparseMatrix(order * dim, dim, cols)

    inv = group.inv
    mul = group.mul
    powers = [order**e for e in range(n + 2)]
    ncols = powers[n] * dim
    nrows = powers[n + 1] * dim
    cols = []
    for t_index in range(powers[n]):
        # decode the source tuple, most significant digit first
        t = []
        rem = t_index
        for e in range(n - 1, -1, -1):
            t.append(rem // powers[e])
            rem %= powers[e]
        for j in range(dim):
            col: dict[int, int] = {}

            def add(row: int, value: int) -> None:
                value %= p
                if not value:
                    col.pop(row, None)
                    return
                col[row] = value

            # g . f(g_2, ..., g_{n+1})
            for g in range(order):
                w_index = g * powers[n] + t_index
                base = w_index * dim
                for i in range(dim):
                    value = int(mats[g, i, j])
                    if value:
                        add(base + i, col.get(base + i, 0) + value)
            # face maps merging adjacent arguments
            for pos in range(1, n + 1):
                sign = -1 if pos % 2 else 1
                target = t[pos - 1]
                prefix = 0
                for e in range(pos - 1):
                    prefix = prefix * order + t[e]
                suffix = 0
                for e in range(pos, n):
                    suffix = suffix * order + t[e]
                suffix_width = powers[n - pos]
                for x in range(order):
                    y = int(mul[inv[x], target])
                    w_index = ((prefix * order + x) * order + y) * suffix_width + suffix
                    row = w_index * dim + j
                    add(row, col.get(row, 0) + sign)
            # (-1)^{n+1} f(g_1, ..., g_n)
            sign = -1 if (n + 1) % 2 else 1
            for g in range(order):
                w_index = t_index * order + g
                row = w_index * dim + j
                add(row, col.get(row, 0) + sign)
            cols.append(col)
    return SparseMatrix(nrows, ncols, cols)


@dataclass(frozen=True)
class RankResult:
    """Ranks feeding one cohomology dimension: h^n = dim C^n - rk d^n - rk d^(n-1)."""

    n: int
    dim_cochains: tuple[int, int, int]  # dims of C^(n-1), C^n, C^(n+1)
    rank_prev: int
    rank_here: int

    @property
    def h(self) -> int:
        return self.dim_cochains[1] - self.rank_here - self.rank_prev

    def __post_init__(self):
        if self.h < 0:
            raise EulerCharError("negative cohomology dimension: inconsistent ranks")


def _estimate_bytes(order: int, dim: int, n: int, p: int) -> int:
    bits = 1 if p == 2 else 2 if p == 3 else 64
    total_bits = 0
    for deg in range(max(0, n - 1), n + 1):
        in_dim = order**deg * dim
        out_dim = order ** (deg + 1) * dim
        total_bits += in_dim * out_dim * bits
    return total_bits // 8 * 2  # packed columns plus elimination copies


def cochain_cohomology_dim(
    group: ConcreteGroup,
    module: FpModule,
    n: int,
    memory_budget: int | None = None,
) -> RankResult:
    """dim H^n(G; M) by exact rank computation on the bar cochain complex."""
    module.check_against(group)
    budget = resolve_memory_budget(memory_budget)
    needed = _estimate_bytes(group.order, module.dim, n, module.p)
    if needed > budget:
        raise BudgetError(needed, budget)
    p = module.p
    order = group.order
    dim = module.dim
    if n == 0:
        rank_prev = 0
        dims = (0, dim, order * dim)
    else:
        rank_prev = rank_mod_p(coboundary_matrix(group, module, n - 1), p)
        dims = (order ** (n - 1) * dim, order**n * dim, order ** (n + 1) * dim)
    rank_here = rank_mod_p(coboundary_matrix(group, module, n), p)
    return RankResult(n, dims, rank_prev, rank_here)


def fixed_space_dim(group: ConcreteGroup, module: FpModule) -> int:
    """dim M^G, computed independently by solving (action[g] - 1)x = 0."""
    dim = module.dim
    stacked: list[list[int]] = []
    eye = np.eye(dim, dtype=np.int64)
    for g in range(group.order):
        stacked.extend(((module.matrices[g] - eye) % module.p).tolist())
    return dim - rank_mod_p(SparseMatrix.from_dense(stacked), module.p)


@dataclass(frozen=True)
class ComparisonRow:
    n: int
    closed_form: int
    oracle: int

    @property
    def match(self) -> bool:
        return self.closed_form == self.oracle


def verify_series(
    spec: GroupSpec,
    p: int,
    n_max: int,
    memory_budget: int | None = None,
    max_order: int = ORACLE_MAX_ORDER,
) -> list[ComparisonRow]:
    """Closed-form dims against the bar oracle, degree by degree."""
    group = realize(spec, max_order=max_order)
    module = FpModule.trivial(p, group.order)
    closed = closed_form_series(spec, p, n_max)
    rows = []
    for n in range(n_max + 1):
        result = cochain_cohomology_dim(group, module, n, memory_budget)
        rows.append(ComparisonRow(n, closed.dim(n), result.h))
    return rows
