import random
import unittest

from twobreak.services.colored_cost import two_break_cost
from twobreak.services.general import best_decomposition, mcps_graph_exact
from twobreak.services.generators import random_eulerian_graph, random_simple_cycle
from twobreak.services.graph import ColoredMultigraph, macd_exact
from twobreak.services.oracle import brute_mcps
from twobreak.services.scenario import validate_scenario
from twobreak.services.simple_cycle import (
    SimpleCycleError,
    degree_two_vertices,
    eulerian_circles,
    mcps_simple_cycle,
)


def merged_hexagon(colors: dict[str, str] | None = None) -> ColoredMultigraph:
    """A three-edge circle with two opposite vertices merged into ``v``."""

    return ColoredMultigraph.from_pairs(
        [("v", "p1"), ("p2", "v"), ("p4", "p5")],
        [("p1", "p2"), ("v", "p4"), ("p5", "v")],
        colors=colors,
    )


class EulerianCirclesTest(unittest.TestCase):
    def test_one_doubled_vertex_gives_two_lifts(self) -> None:
        graph = merged_hexagon()

        lifts = eulerian_circles(graph)

        self.assertEqual(degree_two_vertices(graph), ["v"])
        self.assertEqual(len(lifts), 2)
        for lift in lifts:
            self.assertEqual(lift.merged(), graph)
            self.assertEqual(lift.circle.size, 3)

    def test_circle_is_its_own_lift(self) -> None:
        graph = ColoredMultigraph.from_pairs([("a", "b"), ("c", "d")], [("b", "c"), ("d", "a")])

        lifts = eulerian_circles(graph)

        self.assertEqual(len(lifts), 1)
        self.assertEqual(lifts[0].vertex_map, {v: v for v in graph.vertices})

    def test_gray_loop_at_doubled_vertex_forces_one_split(self) -> None:
        graph = ColoredMultigraph.from_pairs(
            [("v", "p1"), ("p2", "v")],
            [("p1", "p2"), ("v", "v")],
            colors={"v": "x", "p1": "y", "p2": "z"},
        )

        lifts = eulerian_circles(graph)
        cost, scenario = mcps_simple_cycle(graph)

        self.assertEqual(degree_two_vertices(graph), ["v"])
        self.assertEqual(len(lifts), 1)
        self.assertEqual(lifts[0].merged(), graph)
        self.assertEqual(lifts[0].circle.size, 2)
        self.assertEqual(cost, brute_mcps(graph))
        self.assertTrue(validate_scenario(graph, scenario).final_terminal)

    def test_black_loop_at_doubled_vertex_lifts_back(self) -> None:
        graph = ColoredMultigraph.from_pairs(
            [("v", "v"), ("p1", "p2")],
            [("v", "p1"), ("p2", "v")],
            colors={"v": "x", "p1": "x", "p2": "y"},
        )

        lifts = eulerian_circles(graph)
        cost, _ = mcps_simple_cycle(graph)

        self.assertIn(len(lifts), (1, 2))
        for lift in lifts:
            self.assertEqual(lift.merged(), graph)
            self.assertEqual(lift.circle.size, 2)
        self.assertEqual(cost, brute_mcps(graph))

    def test_black_degree_three_is_rejected(self) -> None:
        graph = ColoredMultigraph.from_pairs(
            [("v", "a"), ("v", "b"), ("v", "c")], [("v", "a"), ("v", "b"), ("v", "c")]
        )

        with self.assertRaises(SimpleCycleError):
            eulerian_circles(graph)

    def test_lift_count_is_bounded_by_doubled_vertices(self) -> None:
        for seed in range(50):
            rng = random.Random(seed)
            size = rng.randint(2, 5)
            graph = random_simple_cycle(rng, size, rng.randint(1, min(2, size - 1)), 1)

            lifts = eulerian_circles(graph)

            self.assertLessEqual(len(lifts), 2 ** len(degree_two_vertices(graph)), f"seed={seed}")
            for lift in lifts:
                self.assertEqual(lift.merged(), graph, f"seed={seed}")


class McpsSimpleCycleTest(unittest.TestCase):
    def test_merged_hexagon_matches_exhaustive_search(self) -> None:
        graph = merged_hexagon({"v": "x", "p1": "y", "p2": "y", "p4": "y", "p5": "x"})

        cost, scenario = mcps_simple_cycle(graph)
        report = validate_scenario(graph, scenario, lambda m: two_break_cost(m, graph.colors))

        self.assertEqual(cost, brute_mcps(graph))
        self.assertEqual(report.cost, cost)
        self.assertEqual(report.length, 2)
        self.assertTrue(report.final_terminal)

    def test_random_simple_cycles_match_exhaustive_search(self) -> None:
        for seed in range(100):
            rng = random.Random(seed)
            size = rng.randint(2, 5)
            graph = random_simple_cycle(rng, size, rng.randint(1, min(2, size - 1)), 3)

            cost, scenario = mcps_simple_cycle(graph)
            report = validate_scenario(graph, scenario, lambda m: two_break_cost(m, graph.colors))

            self.assertEqual(cost, brute_mcps(graph), f"seed={seed}")
            self.assertEqual(report.cost, cost, f"seed={seed}")
            self.assertEqual(report.length, graph.size - 1, f"seed={seed}")
            self.assertTrue(report.final_terminal, f"seed={seed}")


class McpsGraphExactTest(unittest.TestCase):
    def test_best_decomposition_is_maximum(self) -> None:
        graph = ColoredMultigraph.from_pairs(
            [("a", "b"), ("a", "b")],
            [("a", "b"), ("a", "b")],
            colors={"a": "x", "b": "y"},
        )

        cost, decomposition, scenario = best_decomposition(graph)

        self.assertEqual(cost, 0)
        self.assertEqual(len(decomposition), 2)
        self.assertEqual(len(scenario), 0)

    def test_random_graphs_match_exhaustive_search(self) -> None:
        for seed in range(100):
            rng = random.Random(seed)
            graph = random_eulerian_graph(
                rng, rng.randint(1, 5), rng.randint(2, 5), colors=rng.randint(1, 3)
            )
            cycles, _ = macd_exact(graph)

            cost, scenario = mcps_graph_exact(graph)
            report = validate_scenario(graph, scenario, lambda m: two_break_cost(m, graph.colors))

            self.assertEqual(cost, brute_mcps(graph), f"seed={seed}")
            self.assertEqual(report.cost, cost, f"seed={seed}")
            self.assertEqual(report.length, graph.size - cycles, f"seed={seed}")
            self.assertTrue(report.final_terminal, f"seed={seed}")


if __name__ == "__main__":
    unittest.main()
