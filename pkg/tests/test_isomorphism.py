import itertools

import numpy as np
import pytest

from netmet import (
    Bijection,
    BudgetError,
    Network,
    blow_up,
    constant_network,
    enumerate_automorphisms,
    exact_distance,
    skeletonize,
    strong_isomorphic,
    weak_isomorphic,
)
from helpers import rand_net, rand_permutation


def preserves_weights(bijection, left, right):
    fw = list(bijection.forward)
    return np.array_equal(right.weights[np.ix_(fw, fw)], left.weights)


class TestBijection:
    def test_rejects_non_permutation(self):
        with pytest.raises(ValueError):
            Bijection((0, 0))

    def test_inverse_and_compose(self):
        b = Bijection((2, 0, 1))
        assert b.compose(b.inverse()).forward == (0, 1, 2)
        assert b.inverse().compose(b).forward == (0, 1, 2)


class TestStrongIsomorphic:
    def test_recovers_permutation(self):
        rng = np.random.default_rng(0)
        for seed in range(10):
            local = np.random.default_rng(seed)
            net = rand_net(local, 4)
            moved = net.permuted(rand_permutation(local, 4))
            witness = strong_isomorphic(net, moved)
            assert witness is not None
            assert preserves_weights(witness, net, moved)

    def test_point_vs_constant_pair_not_bijective(self):
        assert strong_isomorphic(Network.from_weights([[0.5]]), constant_network(2, 0.5)) is None

    def test_two_node_swap(self):
        a = Network.from_weights([[1.0, 2.0], [3.0, 4.0]])
        b = Network.from_weights([[4.0, 3.0], [2.0, 1.0]])
        witness = strong_isomorphic(a, b)
        assert witness is not None
        assert witness.forward == (1, 0)

    def test_same_multiset_different_structure(self):
        a = Network.from_weights([[0.0, 1.0], [2.0, 3.0]])
        b = Network.from_weights([[0.0, 2.0], [1.0, 3.0]])
        assert strong_isomorphic(a, b) is None

    def test_tolerance_is_a_heuristic_escape_hatch(self):
        rng = np.random.default_rng(1)
        net = rand_net(rng, 3)
        moved = net.permuted([2, 0, 1])
        noisy = Network.from_weights(moved.weights + rng.uniform(-1e-8, 1e-8, (3, 3)))
        assert strong_isomorphic(net, noisy) is None
        witness = strong_isomorphic(net, noisy, tolerance=1e-6)
        assert witness is not None

    def test_equivalence_relation(self):
        rng = np.random.default_rng(2)
        net = rand_net(rng, 4)
        a = net.permuted(rand_permutation(rng, 4))
        b = net.permuted(rand_permutation(rng, 4))
        assert strong_isomorphic(net, net).forward == (0, 1, 2, 3)
        ab = strong_isomorphic(net, a)
        assert preserves_weights(ab.inverse(), a, net)
        bc = strong_isomorphic(a, b)
        assert preserves_weights(bc.compose(ab), net, b)


class TestWeakIsomorphic:
    def test_point_vs_constant_block(self):
        for k in (2, 4):
            related, witness = weak_isomorphic(Network.from_weights([[0.5]]), constant_network(k, 0.5))
            assert related and witness is not None

    def test_blow_ups_are_weakly_isomorphic(self):
        rng = np.random.default_rng(3)
        net = rand_net(rng, 3)
        related, witness = weak_isomorphic(net, blow_up(net, (3, 1, 2)))
        assert related
        skel = skeletonize(net).skeleton
        assert len(witness.forward) == skel.n

    def test_distinct_points_not_weakly_isomorphic(self):
        related, witness = weak_isomorphic(Network.from_weights([[1.0]]), Network.from_weights([[2.0]]))
        assert not related and witness is None

    def test_strong_implies_weak(self):
        rng = np.random.default_rng(4)
        net = rand_net(rng, 4)
        moved = net.permuted(rand_permutation(rng, 4))
        assert strong_isomorphic(net, moved) is not None
        assert weak_isomorphic(net, moved)[0]

    def test_agrees_with_exact_distance(self):
        rng = np.random.default_rng(5)
        for seed in range(15):
            local = np.random.default_rng(seed)
            x = rand_net(local, int(local.integers(1, 4)))
            if seed % 2:
                y = blow_up(x.permuted(rand_permutation(local, x.n)),
                            [int(k) for k in local.integers(1, 3, x.n)])
            else:
                y = rand_net(local, int(local.integers(1, 4)))
            assert weak_isomorphic(x, y)[0] == (exact_distance(x, y)[0] == 0.0)


class TestAutomorphisms:
    def test_generic_network_is_rigid(self):
        rng = np.random.default_rng(6)
        autos = enumerate_automorphisms(rand_net(rng, 4))
        assert [a.forward for a in autos] == [(0, 1, 2, 3)]

    def test_constant_network_has_full_symmetry(self):
        autos = enumerate_automorphisms(constant_network(3, 1.0))
        assert [a.forward for a in autos] == sorted(itertools.permutations(range(3)))

    def test_two_node_swap_symmetry(self):
        autos = enumerate_automorphisms(Network.from_weights([[0.0, 1.0], [1.0, 0.0]]))
        assert [a.forward for a in autos] == [(0, 1), (1, 0)]

    def test_budget(self):
        with pytest.raises(BudgetError):
            enumerate_automorphisms(constant_network(9, 0.0))

    def test_forms_group(self):
        net = blow_up(Network.from_weights([[1.0, 2.0], [3.0, 4.0]]), (2, 1))
        autos = enumerate_automorphisms(net)
        forwards = {a.forward for a in autos}
        assert (0, 1, 2) in forwards  # identity
        for a in autos:
            assert a.inverse().forward in forwards
            for b in autos:
                assert a.compose(b).forward in forwards


class TestTerminality:
    @staticmethod
    def _weight_preserving_surjections(net, skel):
        found = []
        for image in itertools.product(range(skel.n), repeat=net.n):
            if len(set(image)) != skel.n:
                continue
            if all(
                net.weights[i, j] == skel.weights[image[i], image[j]]
                for i in range(net.n)
                for j in range(net.n)
            ):
                found.append(image)
        return found

    def test_every_surjection_pair_differs_by_automorphism(self):
        # a symmetric base keeps the skeleton's automorphism group nontrivial
        base = Network.from_weights([[0.0, 1.0], [1.0, 0.0]])
        net = blow_up(base, (2, 2))
        skel = skeletonize(net).skeleton
        autos = [a.forward for a in enumerate_automorphisms(skel)]
        surjections = self._weight_preserving_surjections(net, skel)
        assert len(surjections) == 2

        for f in surjections:
            for g in surjections:
                assert any(all(g[i] == phi[f[i]] for i in range(net.n)) for phi in autos)

    def test_rigid_base_admits_one_surjection(self):
        base = Network.from_weights([[1.0, 2.0], [3.0, 4.0]])
        net = blow_up(base, (2, 2))
        skel = skeletonize(net).skeleton
        assert self._weight_preserving_surjections(net, skel) == [(0, 0, 1, 1)]
