"""Exact computation in the degree-4 symplectic similitude groups over the
3- and 5-element fields.

Matrices act on column vectors over F_p in the basis (e1, e2, f1, f2) with
the fixed alternating form <e1,f1> = <e2,f2> = 1 and all other basis
pairings zero, i.e. Gram matrix

    J = [[ 0, 0, 1, 0],
         [ 0, 0, 0, 1],
         [-1, 0, 0, 0],
         [ 0,-1, 0, 0]].

An element g of the similitude group satisfies g^T J g = lambda(g) J with
lambda(g) != 0; lambda = 1 cuts out the symplectic group.  The two totally
isotropic-free planes span(e1,f1) and span(e2,f2) are orthogonal complements
of each other, so pairs of 2x2 blocks with equal determinant embed
block-wise and the plane swap is symplectic; this is the structural source
of the "trace zero on the swap coset" phenomenon the screen exploits.

Elements are packed into single int64 keys (16 entries, 2 bits each for
p = 3, 3 bits for p = 5), and bulk operations (closure, orbit scans,
characteristic-polynomial censuses) run vectorized over numpy arrays of
keys.  All constructions are deterministic given their seeds.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache, cached_property
import random

import numpy as np

from .permgroup import PermGroup

__all__ = [
    "GroupError",
    "ClosureCapExceeded",
    "pack_matrix",
    "unpack_matrix",
    "mat_mul",
    "mat_inv",
    "similitude",
    "transvection",
    "sp4_generators",
    "gsp4_generators",
    "sp4_order",
    "gsp4_order",
    "closure",
    "SubgroupTable",
    "full_group",
    "census",
    "trace_zero_fraction",
    "build_block_group",
    "index3_subgroups",
    "find_order480",
    "orbits_mod_sign",
    "degree24_image_order",
    "abelian_invariants",
    "vector_perm_group",
    "sample_split_subgroups",
]


class GroupError(Exception):
    """Structural expectation about a matrix group failed."""


class ClosureCapExceeded(GroupError):
    """A closure grew past its element budget."""


_J = ((0, 0, 1, 0), (0, 0, 0, 1), (-1, 0, 0, 0), (0, -1, 0, 0))


def _bits(p: int) -> int:
    if p == 3:
        return 2
    if p == 5:
        return 3
    raise ValueError("only the 3- and 5-element fields are supported")


def _shifts(p: int) -> np.ndarray:
    b = _bits(p)
    return (np.arange(16, dtype=np.int64) * b).reshape(4, 4)


def pack_matrix(m, p: int) -> int:
    """Pack a 4x4 matrix over F_p into one integer key."""
    b = _bits(p)
    key = 0
    pos = 0
    for row in m:
        for entry in row:
            key |= (int(entry) % p) << pos
            pos += b
    return key


def unpack_matrix(key: int, p: int) -> tuple[tuple[int, ...], ...]:
    b = _bits(p)
    mask = (1 << b) - 1
    out = []
    for i in range(4):
        row = []
        for j in range(4):
            row.append((key >> ((4 * i + j) * b)) & mask)
        out.append(tuple(row))
    return tuple(out)


def _pack_array(mats: np.ndarray, p: int) -> np.ndarray:
    """(N,4,4) uint8 -> (N,) int64 keys."""
    flat = mats.reshape(-1, 16).astype(np.int64)
    shifts = np.arange(16, dtype=np.int64) * _bits(p)
    return (flat << shifts).sum(axis=1)


def _unpack_array(keys: np.ndarray, p: int) -> np.ndarray:
    """(N,) int64 keys -> (N,4,4) uint8."""
    b = _bits(p)
    mask = (1 << b) - 1
    shifts = np.arange(16, dtype=np.int64) * b
    flat = (keys[:, None] >> shifts[None, :]) & mask
    return flat.astype(np.uint8).reshape(-1, 4, 4)


def mat_mul(a, b, p: int) -> tuple[tuple[int, ...], ...]:
    return tuple(
        tuple(sum(a[i][k] * b[k][j] for k in range(4)) % p for j in range(4))
        for i in range(4)
    )


def mat_inv(a, p: int) -> tuple[tuple[int, ...], ...]:
    """Inverse by Gauss-Jordan elimination over F_p."""
    m = [[a[i][j] % p for j in range(4)] + [int(i == j) for j in range(4)]
         for i in range(4)]
    for col in range(4):
        piv = next((r for r in range(col, 4) if m[r][col] % p), None)
        if piv is None:
            raise GroupError("singular matrix")
        m[col], m[piv] = m[piv], m[col]
        inv = pow(m[col][col], p - 2, p)
        m[col] = [x * inv % p for x in m[col]]
        for r in range(4):
            if r != col and m[r][col]:
                c = m[r][col]
                m[r] = [(x - c * y) % p for x, y in zip(m[r], m[col])]
    return tuple(tuple(row[4:]) for row in m)


_IDENTITY = ((1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1))


def similitude(m, p: int) -> int:
    """The similitude factor lambda with m^T J m = lambda J; raises
    GroupError when m does not preserve the form up to scalar."""
    g = np.asarray(m, dtype=np.int64) % p
    j = np.asarray(_J, dtype=np.int64) % p
    w = (g.T @ j @ g) % p
    lam = int(w[0, 2])
    if lam == 0 or not np.array_equal(w, (lam * j) % p):
        raise GroupError("matrix is not a symplectic similitude")
    return lam


def transvection(v, p: int, c: int = 1) -> tuple[tuple[int, ...], ...]:
    """x -> x + c<x,v>v, a symplectic map with similitude 1."""
    jv = [sum(_J[i][j] * v[j] for j in range(4)) % p for i in range(4)]
    # <x,v> = x^T J v, so the matrix is I + c * v (Jv)^T ... with the sign
    # fixed by <x,v> = sum_i x_i (Jv)_i
    return tuple(
        tuple((int(i == k) + c * v[i] * jv[k]) % p for k in range(4))
        for i in range(4)
    )


def sp4_generators(p: int) -> tuple[tuple[tuple[int, ...], ...], ...]:
    """Transvections generating the full symplectic group (checked by
    closure order in the tests against q^4 (q^2-1)(q^4-1))."""
    e1, e2, f1, f2 = (1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1)
    vs = [e1, f1, e2, f2, (1, 0, 0, 1), (0, 1, 1, 0)]
    return tuple(transvection(v, p) for v in vs)


def gsp4_generators(p: int) -> tuple[tuple[tuple[int, ...], ...], ...]:
    u = 2  # generates the multiplicative group of F_3 and F_5 alike
    dil = ((u, 0, 0, 0), (0, u, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1))
    return sp4_generators(p) + (dil,)


def sp4_order(p: int) -> int:
    return p**4 * (p**2 - 1) * (p**4 - 1)


def gsp4_order(p: int) -> int:
    return (p - 1) * sp4_order(p)


def closure(
    generators,
    p: int,
    cap: int = 40_000_000,
    chunk: int = 1 << 20,
) -> np.ndarray:
    """Sorted int64 keys of the subgroup generated by `generators`.

    Breadth-first over right-multiplication from the identity; every
    generator must be a symplectic similitude.  Raises ClosureCapExceeded as
    soon as the element count passes `cap`.
    """
    gens = []
    for g in generators:
        similitude(g, p)
        gens.append(np.asarray(g, dtype=np.uint8) % p)
    if not gens:
        return np.array([pack_matrix(_IDENTITY, p)], dtype=np.int64)
    gmat = np.stack(gens)  # (k,4,4)
    known = np.array([pack_matrix(_IDENTITY, p)], dtype=np.int64)
    frontier = known
    while frontier.size:
        new_chunks = []
        for lo in range(0, frontier.size, chunk):
            mats = _unpack_array(frontier[lo:lo + chunk], p)
            # (n,4,4) @ (k,4,4) -> (n,k,4,4), entries < 4*p^2 fit in int16
            prod = np.einsum(
                "nij,kjl->nkil", mats.astype(np.int16), gmat.astype(np.int16)
            ) % p
            new_chunks.append(_pack_array(prod.reshape(-1, 4, 4).astype(np.uint8), p))
        cand = np.unique(np.concatenate(new_chunks))
        fresh = cand[~np.isin(cand, known)]
        if fresh.size == 0:
            break
        known = np.union1d(known, fresh)
        if known.size > cap:
            raise ClosureCapExceeded(f"closure exceeded {cap} elements")
        frontier = fresh
    return known
