import json
import unittest

from twobreak.services.genome import DcjMove
from twobreak.services.graph import ColoredMultigraph, EdgeColor, macd_exact
from twobreak.services.scenario import KBreak, Scenario, parsimonious_scenario, replay
from twobreak.utils.formats import (
    FormatError,
    dcj_to_json,
    format_coloring,
    format_graph,
    parse_coloring,
    parse_graph,
    parse_simple_graph,
    scenario_from_json,
    scenario_to_json,
)

SQUARE = """\
# four vertices, one black and one gray perfect matching
v a x
v b y
v c x
v d y
b a b
b c d
g b c
g d a
"""


class GraphFormatTest(unittest.TestCase):
    def test_labels_follow_file_order(self) -> None:
        graph = parse_graph(SQUARE)

        self.assertEqual([edge.label for edge in graph.black], [1, 2])
        self.assertEqual([edge.label for edge in graph.gray], [3, 4])
        self.assertIs(graph.edge(3).color, EdgeColor.GRAY)
        self.assertEqual(graph.colors, {"a": "x", "b": "y", "c": "x", "d": "y"})

    def test_formatting_reads_back(self) -> None:
        graph = parse_graph(SQUARE)

        self.assertEqual(parse_graph(format_graph(graph)), graph)

    def test_unbalanced_graph_is_a_format_error(self) -> None:
        with self.assertRaises(FormatError):
            parse_graph("b a b\ng a c\n")

    def test_unknown_line_is_a_format_error(self) -> None:
        with self.assertRaises(FormatError):
            parse_graph("x a b\n")

    def test_reserved_color_on_other_vertex_is_rejected(self) -> None:
        with self.assertRaises(FormatError):
            parse_graph("v a o\nb a a\ng a a\n")


class ColoringFormatTest(unittest.TestCase):
    def test_parse_and_format(self) -> None:
        colors = parse_coloring("b y\na x  # trailing comment\n\n")

        self.assertEqual(colors, {"a": "x", "b": "y"})
        self.assertEqual(format_coloring(colors), "a x\nb y\n")

    def test_duplicate_vertex_is_rejected(self) -> None:
        with self.assertRaises(FormatError):
            parse_coloring("a x\na y\n")

    def test_malformed_line_is_rejected(self) -> None:
        with self.assertRaises(FormatError):
            parse_coloring("a x y\n")

    def test_telomere_may_keep_its_color(self) -> None:
        self.assertEqual(parse_coloring("o o\n"), {"o": "o"})


class SimpleGraphFormatTest(unittest.TestCase):
    def test_triangle(self) -> None:
        graph = parse_simple_graph("1 2\n2 3\n3 1\n")

        self.assertEqual(graph.number_of_edges(), 3)

    def test_loops_and_repeats_are_rejected(self) -> None:
        with self.assertRaises(FormatError):
            parse_simple_graph("1 1\n")
        with self.assertRaises(FormatError):
            parse_simple_graph("1 2\n2 1\n")


class ScenarioFormatTest(unittest.TestCase):
    def setUp(self) -> None:
        self.graph = ColoredMultigraph.from_pairs(
            [("a", "b"), ("c", "d"), ("e", "f")], [("b", "c"), ("d", "e"), ("f", "a")]
        )
        self.scenario = parsimonious_scenario(self.graph, macd_exact(self.graph)[1])

    def test_json_document_decodes_to_the_same_moves(self) -> None:
        document = json.loads(json.dumps({"scenario": scenario_to_json(self.scenario)}))

        decoded = scenario_from_json(document, self.graph)

        self.assertEqual(decoded, self.scenario)

    def test_moves_without_labels_pick_matching_black_edges(self) -> None:
        first = KBreak.two_break(self.graph.edge(1), self.graph.edge(2), ("b", "c"), ("a", "d"))
        document = [{"remove": [["a", "b"], ["c", "d"]], "add": [["b", "c"], ["a", "d"]]}]

        decoded = scenario_from_json(document, self.graph)

        self.assertEqual(decoded, Scenario((first,)))
        self.assertEqual(replay(self.graph, decoded)[-1].edge(1).ends, ("b", "c"))

    def test_labels_must_match_endpoints(self) -> None:
        document = [
            {"remove": [["a", "b"], ["c", "d"]], "add": [["b", "c"], ["a", "d"]], "labels": [2, 1]}
        ]

        with self.assertRaises(FormatError):
            scenario_from_json(document, self.graph)

    def test_missing_edge_is_a_format_error(self) -> None:
        document = [{"remove": [["a", "c"], ["b", "d"]], "add": [["a", "b"], ["c", "d"]]}]

        with self.assertRaises(FormatError):
            scenario_from_json(document, self.graph)

    def test_document_must_be_a_list(self) -> None:
        with self.assertRaises(FormatError):
            scenario_from_json({"scenario": "nope"}, self.graph)


class DcjFormatTest(unittest.TestCase):
    def test_fission_keeps_telomeric_adjacencies(self) -> None:
        move = DcjMove(cut=(("1h", "2t"),), join=(("1h",), ("2t",)))

        self.assertEqual(dcj_to_json([move]), [{"cut": [["1h", "2t"]], "join": [["1h"], ["2t"]]}])


if __name__ == "__main__":
    unittest.main()
