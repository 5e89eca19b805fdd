import random
import unittest

import networkx as nx

from twobreak.services.circle import AlternatingPath
from twobreak.services.generators import random_eulerian_graph
from twobreak.services.graph import ColoredMultigraph, InstanceCapError, macd_exact
from twobreak.services.oracle import (
    brute_macd,
    brute_mcps,
    brute_min_cost,
    brute_min_length,
    brute_misa,
    max_cycle_decomposition,
    parsimonious_scenarios,
)
from twobreak.services.scenario import validate_scenario


def plain_circle(size: int) -> ColoredMultigraph:
    names = [f"p{i}" for i in range(2 * size)]
    black = [(names[2 * i], names[2 * i + 1]) for i in range(size)]
    gray = [(names[2 * i + 1], names[(2 * i + 2) % (2 * size)]) for i in range(size)]
    return ColoredMultigraph.from_pairs(black, gray)


class BruteLengthTest(unittest.TestCase):
    def test_terminal_graph_needs_no_move(self) -> None:
        graph = ColoredMultigraph.from_pairs([("a", "b")], [("a", "b")])

        self.assertEqual(brute_min_length(graph), 0)

    def test_circle_needs_one_move_less_than_its_size(self) -> None:
        for size in range(1, 5):
            self.assertEqual(brute_min_length(plain_circle(size)), size - 1)

    def test_cap_is_enforced(self) -> None:
        with self.assertRaises(InstanceCapError):
            brute_min_length(plain_circle(6))
        with self.assertRaises(InstanceCapError):
            brute_mcps(plain_circle(3), cap=2)

    def test_cap_can_be_raised_explicitly(self) -> None:
        self.assertEqual(brute_min_length(plain_circle(6), cap=6), 5)


class BruteCostTest(unittest.TestCase):
    def test_min_cost_never_exceeds_parsimonious_cost(self) -> None:
        for seed in range(80):
            rng = random.Random(seed)
            graph = random_eulerian_graph(
                rng, rng.randint(1, 5), rng.randint(2, 4), colors=rng.randint(1, 3)
            )

            self.assertLessEqual(brute_min_cost(graph), brute_mcps(graph), f"seed={seed}")

    def test_single_color_makes_everything_free(self) -> None:
        graph = ColoredMultigraph.from_pairs(
            [("a", "b"), ("c", "d")],
            [("b", "c"), ("d", "a")],
            colors={"a": "x", "b": "x", "c": "x", "d": "x"},
        )

        self.assertEqual(brute_min_cost(graph), 0)
        self.assertEqual(brute_mcps(graph), 0)


class ParsimoniousScenariosTest(unittest.TestCase):
    def test_circle_counts(self) -> None:
        self.assertEqual(sum(1 for _ in parsimonious_scenarios(plain_circle(2))), 1)
        self.assertEqual(sum(1 for _ in parsimonious_scenarios(plain_circle(3))), 3)
        self.assertEqual(sum(1 for _ in parsimonious_scenarios(plain_circle(4))), 16)

    def test_every_scenario_is_valid_and_shortest(self) -> None:
        graph = plain_circle(4)

        for scenario in parsimonious_scenarios(graph):
            report = validate_scenario(graph, scenario)

            self.assertEqual(report.length, 3)
            self.assertTrue(report.final_terminal)


class BruteMacdTest(unittest.TestCase):
    def test_matches_exact_decomposition(self) -> None:
        for seed in range(150):
            rng = random.Random(seed)
            graph = random_eulerian_graph(rng, rng.randint(1, 7), rng.randint(2, 5))

            self.assertEqual(brute_macd(graph), macd_exact(graph)[0], f"seed={seed}")

    def test_cap_is_enforced(self) -> None:
        with self.assertRaises(InstanceCapError):
            brute_macd(plain_circle(9))


class BruteMisaTest(unittest.TestCase):
    def test_nested_pair_sharing_no_endpoint(self) -> None:
        path = AlternatingPath.from_colors(["x", "y", "z", "y", "x"])

        self.assertEqual(brute_misa(path), 2)

    def test_cap_is_enforced(self) -> None:
        with self.assertRaises(InstanceCapError):
            brute_misa(AlternatingPath.from_colors(["x"] * 14))


class MaxCycleDecompositionTest(unittest.TestCase):
    def test_small_graphs(self) -> None:
        bowtie = nx.Graph([(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (4, 0)])

        self.assertEqual(max_cycle_decomposition(nx.complete_graph(3)), 1)
        self.assertEqual(max_cycle_decomposition(nx.cycle_graph(4)), 1)
        self.assertEqual(max_cycle_decomposition(bowtie), 2)
        self.assertEqual(max_cycle_decomposition(nx.complete_graph(5)), 3)

    def test_graph_with_odd_degree_cannot_be_covered(self) -> None:
        with self.assertRaises(RuntimeError):
            max_cycle_decomposition(nx.path_graph(3))


if __name__ == "__main__":
    unittest.main()
