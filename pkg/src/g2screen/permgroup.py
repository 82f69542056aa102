"""Permutation groups on {0, ..., n-1} with Schreier-Sims order computation.

A permutation ``p`` is a sequence of length n with ``p[i]`` the image of i.
Composition is ``(p * q)(i) = p[q[i]]`` (apply q first).  The stabilizer
chain construction is deterministic, so ``order()`` is exact and
reproducible.  Permutations are held as numpy arrays internally, which keeps
the chain fast up to degrees of a few thousand.
"""

from __future__ import annotations

import numpy as np


def identity_perm(n: int) -> tuple[int, ...]:
    return tuple(range(n))


def compose(p, q) -> tuple[int, ...]:
    """p after q: i -> p[q[i]]."""
    return tuple(p[x] for x in q)


def inverse(p) -> tuple[int, ...]:
    out = [0] * len(p)
    for i, x in enumerate(p):
        out[x] = i
    return tuple(out)


def _as_array(p, degree: int) -> np.ndarray:
    a = np.asarray(p, dtype=np.int32)
    if a.shape != (degree,):
        raise ValueError("not a permutation of the stated degree")
    seen = np.zeros(degree, dtype=bool)
    seen[a] = True
    if not seen.all():
        raise ValueError("not a permutation of the stated degree")
    return a


class PermGroup:
    """Group generated by permutations, with a Schreier-Sims stabilizer chain.

    Exact ``order()`` and membership tests without enumerating the group.
    The chain stores, per level l, a base point ``b_l``, the generators
    inserted at that level (each fixes b_0..b_{l-1} pointwise), and the orbit
    of ``b_l`` under all generators at levels >= l with transversal elements.
    """

    def __init__(self, generators, degree: int | None = None):
        gens = list(generators)
        if degree is None:
            if not gens:
                raise ValueError("degree required for the trivial group")
            degree = len(gens[0])
        self.degree = degree
        self._id = np.arange(degree, dtype=np.int32)
        arrays = [_as_array(g, degree) for g in gens]
        self.generators = [tuple(int(x) for x in a) for a in arrays]
        self._base: list[int] = []
        self._level_gens: list[list[np.ndarray]] = []
        self._orbit: list[dict[int, np.ndarray]] = []
        pending = [a for a in arrays if not self._is_id(a)]
        for a in pending:
            self._insert(a)
        # complete the chain deepest level first; _complete may deepen the
        # chain, which its recursion handles before returning
        lvl = len(self._base) - 1
        while lvl >= 0:
            self._complete(lvl)
            lvl -= 1

    def _is_id(self, a: np.ndarray) -> bool:
        return bool((a == self._id).all())

    def _gens_at(self, level: int) -> list[np.ndarray]:
        """Generators of the level-th stabilizer: everything inserted at
        this level or deeper (deeper generators fix a longer base prefix,
        hence lie in every shallower stabilizer too)."""
        return [g for gs in self._level_gens[level:] for g in gs]

    def _insert(self, a: np.ndarray) -> int:
        """File a non-identity element under the deepest level whose base
        prefix it fixes pointwise, appending a new base point if needed."""
        m = 0
        while m < len(self._base) and a[self._base[m]] == self._base[m]:
            m += 1
        if m == len(self._base):
            moved = int(np.nonzero(a != self._id)[0][0])
            self._base.append(moved)
            self._level_gens.append([])
            self._orbit.append({})
        self._level_gens[m].append(a)
        return m

    def _rebuild_orbit(self, level: int) -> None:
        b = self._base[level]
        gens = self._gens_at(level)
        transversal = {b: self._id}
        frontier = [b]
        while frontier:
            nxt = []
            for pt in frontier:
                t = transversal[pt]
                for h in gens:
                    img = int(h[pt])
                    if img not in transversal:
                        transversal[img] = h[t]
                        nxt.append(img)
            frontier = nxt
        self._orbit[level] = transversal

    def _sift(self, a: np.ndarray, start: int = 0):
        """Reduce by transversal elements; return (residue, stuck_level).
        residue is None when a sifts to the identity."""
        for lvl in range(start, len(self._base)):
            if self._is_id(a):
                return None, lvl
            img = int(a[self._base[lvl]])
            t = self._orbit[lvl].get(img)
            if t is None:
                return a, lvl
            # t^{-1} com a: (t^{-1} a)[i] = index of a[i] in t
            tinv = np.empty_like(t)
            tinv[t] = self._id
            a = tinv[a]
        return (None, len(self._base)) if self._is_id(a) else (a, len(self._base))

    def _complete(self, level: int) -> None:
        """Make the chain complete from `level` down: every Schreier
        generator of this level sifts to the identity through the deeper
        levels.  Insertions always land strictly deeper, and each one grows
        a deeper orbit or the base, so the restart loop terminates."""
        while True:
            self._rebuild_orbit(level)
            transversal = self._orbit[level]
            gens = self._gens_at(level)
            dirty = False
            for pt in list(transversal):
                t = transversal[pt]
                for h in gens:
                    u = transversal[int(h[pt])]
                    uinv = np.empty_like(u)
                    uinv[u] = self._id
                    s = uinv[h[t]]
                    if self._is_id(s):
                        continue
                    residue, _ = self._sift(s, level + 1)
                    if residue is not None:
                        m = self._insert(residue)
                        for j in range(len(self._base) - 1, m - 1, -1):
                            self._complete(j)
                        dirty = True
                        break
                if dirty:
                    break
            if not dirty:
                return

    # -- queries --------------------------------------------------------

    def order(self) -> int:
        n = 1
        for transversal in self._orbit:
            n *= len(transversal)
        return n

    def contains(self, g) -> bool:
        try:
            a = _as_array(g, self.degree)
        except ValueError:
            return False
        residue, _ = self._sift(a)
        return residue is None
