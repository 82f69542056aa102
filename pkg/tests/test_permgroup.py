"""Schreier-Sims order and membership vs. independent references."""
import random
from math import factorial

import pytest
from sympy.combinatorics import Permutation, PermutationGroup

from g2screen.permgroup import PermGroup, compose, identity_perm, inverse


def cycle_perm(n, cyc):
    p = list(range(n))
    for i, x in enumerate(cyc):
        p[x] = cyc[(i + 1) % len(cyc)]
    return tuple(p)


class TestBasics:
    def test_compose_inverse(self):
        rng = random.Random(1)
        for _ in range(50):
            n = rng.randrange(2, 12)
            p = list(range(n)); rng.shuffle(p); p = tuple(p)
            q = list(range(n)); rng.shuffle(q); q = tuple(q)
            pq = compose(p, q)
            x = rng.randrange(n)
            assert pq[x] == p[q[x]]
            assert compose(p, inverse(p)) == identity_perm(n)
            assert compose(inverse(p), p) == identity_perm(n)

    def test_trivial_group(self):
        assert PermGroup([], degree=5).order() == 1
        assert PermGroup([identity_perm(4)]).order() == 1

    def test_rejects_non_permutation(self):
        with pytest.raises(ValueError):
            PermGroup([(0, 0, 1)])
        with pytest.raises(ValueError):
            PermGroup([(0, 1), (1, 0, 2)])


class TestKnownOrders:
    def test_symmetric_and_alternating(self):
        for n in range(2, 8):
            sn = PermGroup([cycle_perm(n, (0, 1)), cycle_perm(n, tuple(range(n)))])
            assert sn.order() == factorial(n)
        for n in range(3, 8):
            # A_n: 3-cycles (0 1 2) and either the n-cycle (n odd) or the
            # (n-1)-cycle on {1..n-1} (n even), both even permutations
            if n % 2:
                gens = [cycle_perm(n, (0, 1, 2)), cycle_perm(n, tuple(range(n)))]
            else:
                gens = [cycle_perm(n, (0, 1, 2)), cycle_perm(n, tuple(range(1, n)))]
            assert PermGroup(gens).order() == factorial(n) // 2

    def test_cyclic_dihedral(self):
        n = 12
        rot = cycle_perm(n, tuple(range(n)))
        assert PermGroup([rot]).order() == n
        refl = tuple((n - i) % n for i in range(n))
        assert PermGroup([rot, refl]).order() == 2 * n

    def test_membership(self):
        n = 6
        a4_like = PermGroup([cycle_perm(n, (0, 1, 2)), cycle_perm(n, (3, 4, 5))])
        assert a4_like.contains(cycle_perm(n, (0, 2, 1)))
        assert not a4_like.contains(cycle_perm(n, (0, 1)))
        assert a4_like.contains(identity_perm(n))


class TestAgainstSympy:
    def test_random_groups(self):
        rng = random.Random(7)
        for trial in range(25):
            n = rng.randrange(3, 10)
            k = rng.randrange(1, 4)
            gens = []
            for _ in range(k):
                p = list(range(n)); rng.shuffle(p)
                gens.append(tuple(p))
            ours = PermGroup(gens).order()
            theirs = PermutationGroup([Permutation(list(g)) for g in gens]).order()
            assert ours == theirs, (trial, gens)

    def test_random_membership(self):
        rng = random.Random(11)
        for _ in range(10):
            n = 8
            gens = []
            for _ in range(2):
                p = list(range(n)); rng.shuffle(p)
                gens.append(tuple(p))
            g = PermGroup(gens)
            sg = PermutationGroup([Permutation(list(x)) for x in gens])
            for _ in range(20):
                p = list(range(n)); rng.shuffle(p)
                assert g.contains(tuple(p)) == sg.contains(Permutation(p))
