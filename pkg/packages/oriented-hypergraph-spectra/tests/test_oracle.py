import math

import numpy as np
import pytest
from oriented_hypergraph_spectra import (
    GeneratorConfig,
    SwitchingFunction,
    SymmetricMatrix,
    dual,
    from_edges,
    random_instance,
    switch,
    switching_equivalent,
)
from oriented_hypergraph_spectra.errors import (
    BadConfigError,
    DifferentUnderlyingError,
    TooLargeError,
)
from oriented_hypergraph_spectra.linalg import Spectrum, sym_eigenvalues
from oriented_hypergraph_spectra.matrices import bundle
from oriented_hypergraph_spectra.model import is_uniformly_oriented
from oriented_hypergraph_spectra.oracle import (
    FindKind,
    classify_pair,
    cospectral_pair_search,
    random_switching,
    random_uniform_orientation,
    spectrum_sanity,
)
from oriented_hypergraph_spectra.spectra import adjacency_spectrum, laplacian_spectrum


def config(**overrides) -> GeneratorConfig:
    values = dict(seed=1, n=6, m=5, edge_size_min=2, edge_size_max=4, p_negative=0.5)
    values.update(overrides)
    return GeneratorConfig(**values)


class TestGeneratorConfig:
    @pytest.mark.parametrize(
        "overrides",
        [
            {"seed": -1},
            {"seed": 2**64},
            {"n": -1},
            {"edge_size_min": 3, "edge_size_max": 2},
            {"edge_size_max": 7},
            {"p_negative": 1.5},
            {"p_negative": math.nan},
        ],
    )
    def test_invalid(self, overrides):
        with pytest.raises(BadConfigError):
            config(**overrides)

    def test_largest_seed_accepted(self):
        assert config(seed=2**64 - 1).seed == 2**64 - 1

    def test_with_seed(self):
        assert config().with_seed(9) == config(seed=9)


class TestRandomInstance:
    def test_deterministic(self):
        assert random_instance(config(seed=5)) == random_instance(config(seed=5))

    def test_seeds_differ(self):
        instances = {random_instance(config(seed=s)) for s in range(10)}

        assert len(instances) > 1

    def test_shape_and_sizes(self):
        graph = random_instance(config(seed=3))

        assert (graph.n, graph.m) == (6, 5)
        assert all(2 <= size <= 4 for size in graph.edge_sizes())

    def test_no_negative_signs(self):
        graph = random_instance(config(p_negative=0.0))

        assert {inc.sign for inc in graph.incidences} == {1}
        assert is_uniformly_oriented(graph)

    def test_all_negative_signs(self):
        graph = random_instance(config(p_negative=1.0))

        assert {inc.sign for inc in graph.incidences} == {-1}

    def test_empty_edges_allowed(self):
        graph = random_instance(config(edge_size_min=0, edge_size_max=0))

        assert graph.edge_sizes() == (0, 0, 0, 0, 0)

    def test_empty_config(self):
        graph = random_instance(config(n=0, m=0, edge_size_min=0, edge_size_max=0))

        assert (graph.n, graph.m) == (0, 0)


class TestRandomOrientations:
    def test_random_switching(self):
        zeta = random_switching(8, seed=4)

        assert len(zeta) == 8
        assert zeta == random_switching(8, seed=4)

    def test_random_uniform_orientation(self, fano_like):
        graph = random_uniform_orientation(fano_like, seed=2)

        assert is_uniformly_oriented(graph)
        assert graph.same_underlying(fano_like)


class TestSwitchingEquivalent:
    def test_self(self, worked_example):
        witness = switching_equivalent(worked_example, worked_example)

        assert witness.found
        assert witness.zeta == SwitchingFunction.identity(4)

    def test_flip_both_ends(self, single_edge):
        negated = from_edges(2, [[(0, -1), (1, -1)]])

        witness = switching_equivalent(single_edge, negated)

        assert witness.found
        assert witness.zeta.signs == (-1, -1)

    def test_lone_edge_reaches_any_orientation(self):
        plus = from_edges(3, [[(0, 1), (1, 1), (2, 1)]])
        mixed = from_edges(3, [[(0, 1), (1, 1), (2, -1)]])

        assert switching_equivalent(plus, mixed).zeta.signs == (1, 1, -1)

    def test_two_edges_not_equivalent(self):
        plus = from_edges(3, [[(0, 1), (1, 1), (2, 1)], [(1, 1), (2, 1)]])
        mixed = from_edges(3, [[(0, 1), (1, 1), (2, -1)], [(1, 1), (2, 1)]])

        assert not switching_equivalent(plus, mixed).found

    def test_first_witness_in_order(self):
        # vertex 1 is isolated, so both its signs work; +1 comes first
        graph = from_edges(2, [[(0, 1)]])
        flipped = from_edges(2, [[(0, -1)]])

        assert switching_equivalent(graph, flipped).zeta.signs == (-1, 1)

    def test_different_underlying(self, single_edge, worked_example):
        with pytest.raises(DifferentUnderlyingError):
            switching_equivalent(single_edge, worked_example)

    def test_too_large(self):
        graph = from_edges(25, [])

        with pytest.raises(TooLargeError):
            switching_equivalent(graph, graph)

    def test_limit_is_configurable(self, worked_example):
        with pytest.raises(TooLargeError):
            switching_equivalent(worked_example, worked_example, limit=3)

    @pytest.mark.slow
    @pytest.mark.timeout(30)
    def test_random_switchings_are_found(self):
        for trial in range(100):
            n = 2 + trial % 9
            graph = random_instance(
                config(seed=trial, n=n, m=4, edge_size_min=1, edge_size_max=min(4, n))
            )
            zeta = random_switching(n, seed=1000 + trial)
            switched = switch(graph, zeta)

            witness = switching_equivalent(graph, switched)

            assert witness.found
            assert switch(graph, witness.zeta).same_orientation(switched)


class TestClassifyPair:
    def test_example_and_dual(self, worked_example):
        find = classify_pair(worked_example, dual(worked_example))

        assert find is not None
        assert find.kind is FindKind.LAPLACIAN
        assert find.dual_related

    def test_rectangular_dual(self):
        graph = from_edges(4, [[(0, 1), (1, -1), (2, 1)], [(2, 1), (3, 1)]])

        find = classify_pair(graph, dual(graph))

        assert find.kind is FindKind.NONZERO_LAPLACIAN
        assert find.dual_related
        assert not find.switching_equivalent

    def test_switched_copy(self, fano_like):
        switched = switch(fano_like, SwitchingFunction((1, -1, -1, 1, 1, -1)))

        find = classify_pair(fano_like, switched)

        assert find.kind is FindKind.LAPLACIAN
        assert find.switching_equivalent

    def test_not_cospectral(self, worked_example, make_star):
        assert classify_pair(worked_example, make_star(3)) is None


class TestCospectralSearch:
    def test_switching_equivalent_pairs_filtered(self):
        # edgeless instances are always cospectral and switching equivalent
        cfg = config(n=3, m=0, edge_size_min=0, edge_size_max=0)

        assert cospectral_pair_search(cfg, trials=5) == []

    def test_dual_related_kept_on_request(self):
        # one 3-edge versus its dual: three loops on a single vertex
        cfg = config(n=3, m=1, edge_size_min=3, edge_size_max=3, p_negative=0.0)
        partner = config(n=1, m=3, edge_size_min=1, edge_size_max=1, p_negative=0.0)

        assert cospectral_pair_search(cfg, trials=2, partner=partner) == []

        finds = cospectral_pair_search(
            cfg, trials=2, partner=partner, include_dual_related=True
        )

        assert [find.trial for find in finds] == [0, 1]
        assert all(find.dual_related for find in finds)
        assert not any(find.switching_equivalent for find in finds)

    def test_partner_order(self):
        cfg = config(n=3, m=1, edge_size_min=2, edge_size_max=2, p_negative=0.0)
        partner = config(n=2, m=1, edge_size_min=2, edge_size_max=2, p_negative=0.0)

        finds = cospectral_pair_search(cfg, trials=4, partner=partner)

        # one 2-edge on 3 vertices vs on 2 vertices: same nonzero spectrum {2}
        assert [find.trial for find in finds] == [0, 1, 2, 3]
        assert all(find.kind is FindKind.NONZERO_LAPLACIAN for find in finds)

    def test_workers_do_not_change_results(self):
        cfg = config(seed=77, n=4, m=3, edge_size_min=1, edge_size_max=3)

        single = cospectral_pair_search(cfg, trials=30, include_dual_related=True)
        threaded = cospectral_pair_search(
            cfg, trials=30, include_dual_related=True, workers=4
        )

        assert single == threaded

    def test_bad_arguments(self):
        with pytest.raises(BadConfigError):
            cospectral_pair_search(config(), trials=-1)
        with pytest.raises(BadConfigError):
            cospectral_pair_search(config(), trials=1, workers=0)


class TestSpectrumSanity:
    def test_all_ones(self):
        assert spectrum_sanity(SymmetricMatrix([[1, 1], [1, 1]]), Spectrum((2.0, 0.0)))

    def test_example(self, example_laplacian, example_spectrum):
        assert spectrum_sanity(
            SymmetricMatrix(example_laplacian), Spectrum(example_spectrum)
        )

    def test_perturbed(self):
        assert not spectrum_sanity(
            SymmetricMatrix([[1, 1], [1, 1]]), Spectrum((2.0, 0.01))
        )

    def test_order_mismatch(self):
        assert not spectrum_sanity(SymmetricMatrix([[1]]), Spectrum((1.0, 0.0)))

    def test_closed_form_three_by_three(self):
        matrix = SymmetricMatrix([[2, -1, 0], [-1, 2, -1], [0, -1, 2]])
        expected = Spectrum((2 + math.sqrt(2), 2.0, 2 - math.sqrt(2)))

        assert spectrum_sanity(matrix, expected)

    def test_closed_form_catches_matching_trace_and_norm(self):
        matrix = SymmetricMatrix([[2, -1, 0], [-1, 2, -1], [0, -1, 2]])
        root = math.sqrt(2.12)
        # sums to 6 with squares summing to 16, all inside the discs
        wrong = Spectrum((3.4, (2.6 + root) / 2, (2.6 - root) / 2))

        assert not spectrum_sanity(matrix, wrong)

    def test_frobenius_mismatch(self):
        matrix = SymmetricMatrix(np.diag([3, 1, 0]))

        assert not spectrum_sanity(matrix, Spectrum((2.0, 2.0, 0.0)))

    def test_squared_sum_is_compared_at_scale(self):
        # trace and Gersgorin discs match; the squared sum is off by 2e-4
        matrix = SymmetricMatrix(np.full((4, 4), 50))
        wrong = Spectrum((200.0, 0.01, 0.0, -0.01))

        assert spectrum_sanity(matrix, Spectrum((200.0, 0.0, 0.0, 0.0)))
        assert not spectrum_sanity(matrix, wrong)

    @pytest.mark.slow
    @pytest.mark.timeout(30)
    def test_sweep_spectra(self, sweep):
        for graph in sweep:
            matrices = bundle(graph)
            assert spectrum_sanity(matrices.adjacency, adjacency_spectrum(graph))
            assert spectrum_sanity(matrices.laplacian, laplacian_spectrum(graph))
            assert spectrum_sanity(
                matrices.laplacian, sym_eigenvalues(matrices.laplacian)
            )
