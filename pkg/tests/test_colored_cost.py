import random
import unittest

from twobreak.services.colored_cost import (
    ColoringError,
    ZeroCostError,
    complete_coloring,
    merged_graph,
    min_cost_scenario,
    project_scenario_to_merged,
    scenario_cost,
    two_break_cost,
    zero_cost_sort,
)
from twobreak.services.generators import random_eulerian_graph, random_zero_cost_graph
from twobreak.services.graph import ColoredMultigraph, is_terminal, macd_exact
from twobreak.services.oracle import brute_macd, brute_min_cost
from twobreak.services.scenario import KBreak, parsimonious_scenario, validate_scenario


def square(colors: dict[str, str]) -> ColoredMultigraph:
    return ColoredMultigraph.from_pairs(
        [("a", "b"), ("c", "d")], [("b", "c"), ("d", "a")], colors=colors
    )


def sorting_move(graph: ColoredMultigraph) -> KBreak:
    return KBreak.two_break(graph.edge(1), graph.edge(2), ("b", "c"), ("a", "d"))


class CostTest(unittest.TestCase):
    def test_move_keeping_colored_pairs_is_free(self) -> None:
        graph = square({"a": "x", "b": "y", "c": "x", "d": "y"})

        self.assertEqual(two_break_cost(sorting_move(graph), graph.colors), 0)

    def test_move_changing_colored_pairs_costs_one(self) -> None:
        graph = square({"a": "x", "b": "y", "c": "z", "d": "w"})

        self.assertEqual(two_break_cost(sorting_move(graph), graph.colors), 1)

    def test_complete_coloring_fills_in_the_telomere(self) -> None:
        graph = ColoredMultigraph.from_pairs([("a", "o")], [("a", "o")], colors={"a": "x"})

        self.assertEqual(complete_coloring(graph), {"a": "x", "o": "o"})

    def test_missing_color_is_an_error(self) -> None:
        graph = square({"a": "x"})

        with self.assertRaises(ColoringError):
            complete_coloring(graph)

    def test_telomere_color_on_ordinary_vertex_is_an_error(self) -> None:
        graph = square({"a": "o", "b": "y", "c": "x", "d": "y"})

        with self.assertRaises(ColoringError):
            complete_coloring(graph)
        with self.assertRaises(ColoringError):
            complete_coloring(graph, {"a": "x", "b": "o", "c": "x", "d": "y"})


class MergedGraphTest(unittest.TestCase):
    def test_merging_keeps_labels(self) -> None:
        graph = square({"a": "x", "b": "y", "c": "x", "d": "y"})

        merged = merged_graph(graph)

        self.assertEqual(merged.graph.labels, graph.labels)
        self.assertEqual(merged.graph.vertices, ("x", "y"))
        self.assertTrue(is_terminal(merged.graph))

    def test_projection_keeps_only_costly_moves(self) -> None:
        for seed in range(60):
            rng = random.Random(seed)
            graph = random_eulerian_graph(rng, rng.randint(1, 5), rng.randint(2, 5), colors=2)
            _, decomposition = macd_exact(graph)
            scenario = parsimonious_scenario(graph, decomposition)

            projected, parts = project_scenario_to_merged(graph, None, scenario)

            self.assertEqual(len(projected), scenario_cost(scenario, graph.colors), f"seed={seed}")
            parts.check(merged_graph(graph).graph)


class ZeroCostSortTest(unittest.TestCase):
    def test_square_with_terminal_merged_graph(self) -> None:
        graph = square({"a": "x", "b": "y", "c": "x", "d": "y"})

        scenario = zero_cost_sort(graph)

        self.assertTrue(validate_scenario(graph, scenario).final_terminal)
        self.assertEqual(scenario_cost(scenario, graph.colors), 0)

    def test_non_terminal_merged_graph_is_rejected(self) -> None:
        graph = square({"a": "x", "b": "y", "c": "z", "d": "w"})

        with self.assertRaises(ZeroCostError):
            zero_cost_sort(graph)

    def test_random_graphs_with_terminal_merged_graph(self) -> None:
        for seed in range(100):
            rng = random.Random(seed)
            graph = random_zero_cost_graph(rng, rng.randint(1, 6), rng.randint(2, 5), colors=3)

            scenario = zero_cost_sort(graph)
            report = validate_scenario(
                graph, scenario, lambda move: two_break_cost(move, graph.colors)
            )

            self.assertTrue(report.final_terminal, f"seed={seed}")
            self.assertEqual(report.cost, 0, f"seed={seed}")


class MinCostScenarioTest(unittest.TestCase):
    def test_min_cost_matches_exhaustive_search(self) -> None:
        for seed in range(200):
            rng = random.Random(seed)
            graph = random_eulerian_graph(
                rng, rng.randint(1, 5), rng.randint(2, 5), colors=rng.randint(1, 3)
            )
            merged = merged_graph(graph).graph

            cost, scenario = min_cost_scenario(graph)
            report = validate_scenario(
                graph, scenario, lambda move: two_break_cost(move, graph.colors)
            )

            self.assertEqual(cost, merged.size - brute_macd(merged), f"seed={seed}")
            self.assertEqual(cost, brute_min_cost(graph), f"seed={seed}")
            self.assertEqual(report.cost, cost, f"seed={seed}")
            self.assertTrue(report.final_terminal, f"seed={seed}")


if __name__ == "__main__":
    unittest.main()
