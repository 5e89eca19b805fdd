import os
import random
import time
import unittest

import numpy as np

from twobreak.services.colored_cost import ColoringError
from twobreak.services.general import mcps_graph_exact
from twobreak.services.generators import random_genome_pair
from twobreak.services.genome import (
    DcjMove,
    GenomeError,
    apply_dcj,
    breakpoint_graph,
    dcj_cost,
    parse_genome,
)
from twobreak.services.genome_mcps import (
    BreakpointStructureError,
    SegmentKind,
    decompose_breakpoint,
    maximum_decomposition,
    mcps_genomes,
    pair_weight,
    weight_matrix,
)
from twobreak.services.graph import TELOMERE, ColoredMultigraph, macd_exact
from twobreak.services.oracle import brute_mcps

GENOME_A = "> A\nL 1 2 -3\n"
GENOME_B = "> B\nL 1 -2 -3\n"
COLORS = {"1h": "x", "1t": "x", "2t": "x", "2h": "y", "3h": "z", "3t": "z"}
SWAP = DcjMove(cut=(("1h", "2t"), ("2h", "3h")), join=(("1h", "2h"), ("2t", "3h")))


class DecomposeBreakpointTest(unittest.TestCase):
    def test_worked_example_pool(self) -> None:
        graph = breakpoint_graph(parse_genome(GENOME_A), parse_genome(GENOME_B))

        pool = decompose_breakpoint(graph)

        self.assertEqual(len(pool.circles), 3)
        self.assertEqual(pool.closed_segments, 2)
        self.assertEqual(len(pool.aa_paths), 2)
        self.assertEqual(len(pool.bb_paths), 2)
        self.assertTrue(all(path.kind is SegmentKind.AA for path in pool.aa_paths))
        self.assertEqual(len(maximum_decomposition(pool)), 5)

    def test_linear_against_circular_gives_open_segments(self) -> None:
        graph = breakpoint_graph(parse_genome("L 1 2"), parse_genome("C 1 2"))

        pool = decompose_breakpoint(graph)
        decomposition = maximum_decomposition(pool)

        self.assertEqual(len(pool.aa_paths), len(pool.bb_paths))
        decomposition.check(graph)
        self.assertEqual(len(decomposition), macd_exact(graph)[0])

    def test_vertex_of_degree_two_is_rejected(self) -> None:
        graph = ColoredMultigraph.from_pairs(
            [("a", "b"), ("a", TELOMERE)], [("a", "b"), ("a", TELOMERE)]
        )

        with self.assertRaises(BreakpointStructureError):
            decompose_breakpoint(graph)

    def test_maximum_decomposition_on_random_pairs(self) -> None:
        for seed in range(60):
            rng = random.Random(seed)
            first, second, _ = random_genome_pair(rng, rng.randint(1, 4), 1)
            graph = breakpoint_graph(first, second)

            decomposition = maximum_decomposition(decompose_breakpoint(graph))

            decomposition.check(graph)
            self.assertEqual(len(decomposition), macd_exact(graph)[0], f"seed={seed}")


class WeightMatrixTest(unittest.TestCase):
    def test_telomere_loops_pair_for_free(self) -> None:
        graph = breakpoint_graph(parse_genome(GENOME_A), parse_genome(GENOME_B), COLORS)
        pool = decompose_breakpoint(graph)

        matrix = weight_matrix(pool.aa_paths, pool.bb_paths, graph.colors)

        self.assertEqual(matrix.shape, (2, 2))
        self.assertEqual(int(matrix.sum()), 0)

    def test_pair_weight_requires_aa_then_bb(self) -> None:
        graph = breakpoint_graph(parse_genome(GENOME_A), parse_genome(GENOME_B), COLORS)
        pool = decompose_breakpoint(graph)

        with self.assertRaises(BreakpointStructureError):
            pair_weight(pool.bb_paths[0], pool.aa_paths[0], graph.colors)


class McpsGenomesTest(unittest.TestCase):
    def test_worked_example(self) -> None:
        first, second = parse_genome(GENOME_A), parse_genome(GENOME_B)

        solution = mcps_genomes(first, second, COLORS)

        self.assertEqual(solution.cost, 1)
        self.assertEqual(len(solution.scenario), 1)
        self.assertEqual(solution.dcj, [SWAP])
        self.assertEqual(solution.summary()["edges"], 6)
        self.assertEqual(solution.summary()["cycles"], 5)

    def test_identical_genomes_need_nothing(self) -> None:
        genome = parse_genome(GENOME_A)

        solution = mcps_genomes(genome, genome, COLORS)

        self.assertEqual(solution.cost, 0)
        self.assertEqual(len(solution.scenario), 0)
        self.assertEqual(solution.dcj, [])

    def test_unoriented_genes_are_rejected(self) -> None:
        genome = parse_genome("U g\nL 1 g")

        with self.assertRaises(BreakpointStructureError):
            mcps_genomes(genome, genome, {"1h": "x", "1t": "x", "g": "y"})

    def test_random_pairs_match_exhaustive_search(self) -> None:
        for seed in range(100):
            rng = random.Random(seed)
            genes = 3 if seed % 5 == 0 else rng.randint(1, 2)
            first, second, coloring = random_genome_pair(
                rng, genes, rng.randint(1, 4), chromosomes=rng.randint(1, 2)
            )
            graph = breakpoint_graph(first, second, coloring)

            solution = mcps_genomes(first, second, coloring)

            self.assertEqual(solution.cost, brute_mcps(graph, cap=6), f"seed={seed}")
            self.assertEqual(
                len(solution.scenario), graph.size - solution.cycles, f"seed={seed}"
            )
            state, cost = first, 0
            for move in solution.dcj:
                cost += dcj_cost(move, state, coloring)
                state = apply_dcj(state, move)
            self.assertEqual(state.adjacencies, second.adjacencies, f"seed={seed}")
            self.assertEqual(cost, solution.cost, f"seed={seed}")

    def test_four_gene_pairs_match_exhaustive_search(self) -> None:
        for seed in range(10):
            rng = random.Random(400 + seed)
            first, second, coloring = random_genome_pair(
                rng, 4, rng.randint(2, 4), chromosomes=rng.randint(1, 2)
            )
            graph = breakpoint_graph(first, second, coloring)

            solution = mcps_genomes(first, second, coloring)

            self.assertEqual(solution.cost, brute_mcps(graph, cap=8), f"seed={seed}")

    def test_random_pairs_match_exact_graph_search(self) -> None:
        for seed in range(120):
            rng = random.Random(1000 + seed)
            first, second, coloring = random_genome_pair(
                rng, rng.randint(3, 5), rng.randint(1, 4), chromosomes=rng.randint(1, 3)
            )
            graph = breakpoint_graph(first, second, coloring)

            solution = mcps_genomes(first, second, coloring)
            exact_cost, exact_scenario = mcps_graph_exact(graph, cap=10)

            self.assertEqual(solution.cost, exact_cost, f"seed={seed}")
            self.assertEqual(len(solution.scenario), len(exact_scenario), f"seed={seed}")

    def test_different_gene_content_is_rejected(self) -> None:
        with self.assertRaises(GenomeError):
            mcps_genomes(parse_genome(GENOME_A), parse_genome("L 1 2"), COLORS)

    def test_telomere_color_on_extremity_is_rejected(self) -> None:
        genome = parse_genome(GENOME_A)

        with self.assertRaises(ColoringError):
            mcps_genomes(genome, genome, {**COLORS, "2h": "o"})

    def test_parallel_weights_match_serial_ones(self) -> None:
        rng = random.Random(7)
        first, second, coloring = random_genome_pair(rng, 12, 3, chromosomes=4)

        serial = mcps_genomes(first, second, coloring)
        parallel = mcps_genomes(first, second, coloring, jobs=2)

        self.assertEqual(serial.cost, parallel.cost)
        self.assertEqual(len(serial.scenario), len(parallel.scenario))


@unittest.skipUnless(os.getenv("RUN_SLOW_TESTS"), "RUN_SLOW_TESTS is not set")
class McpsGenomesScaleTest(unittest.TestCase):
    def test_three_hundred_genes(self) -> None:
        rng = random.Random(300)
        first, second, coloring = random_genome_pair(rng, 300, 4, chromosomes=6)

        started = time.perf_counter()
        solution = mcps_genomes(first, second, coloring)
        elapsed = time.perf_counter() - started

        self.assertLess(elapsed, 60.0)
        self.assertGreaterEqual(solution.cost, 0)

    def test_running_time_grows_at_most_cubically(self) -> None:
        sizes = [40, 80, 160]
        timings = []
        for genes in sizes:
            rng = random.Random(genes)
            first, second, coloring = random_genome_pair(rng, genes, 4, chromosomes=genes // 20)
            best = float("inf")
            for _ in range(3):
                started = time.perf_counter()
                mcps_genomes(first, second, coloring)
                best = min(best, time.perf_counter() - started)
            timings.append(best)

        slope = np.polyfit(np.log(sizes), np.log(timings), 1)[0]

        self.assertLess(slope, 3.5, f"timings={timings}")


if __name__ == "__main__":
    unittest.main()
