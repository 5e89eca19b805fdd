import random
import unittest
from itertools import permutations

from twobreak.utils.assignment import AssignmentError, min_cost_perfect_matching
from twobreak.utils.chunk import batch_size_for, chunked, spread
from twobreak.utils.union_find import UnionFind


class ChunkTest(unittest.TestCase):
    def test_chunked_splits_sequence(self) -> None:
        self.assertEqual(list(chunked([1, 2, 3, 4, 5], 2)), [[1, 2], [3, 4], [5]])

    def test_chunked_rejects_non_positive_size(self) -> None:
        with self.assertRaises(ValueError):
            list(chunked([1], 0))

    def test_batch_size_gives_every_worker_several_batches(self) -> None:
        self.assertEqual(batch_size_for(100, 5), 5)
        self.assertEqual(batch_size_for(3, 8), 1)
        self.assertEqual(batch_size_for(0, 2), 1)

    def test_batch_size_rejects_missing_workers(self) -> None:
        with self.assertRaises(ValueError):
            batch_size_for(10, 0)

    def test_spread_keeps_order(self) -> None:
        items = list(range(37))

        batches = spread(items, 3)

        self.assertEqual([item for batch in batches for item in batch], items)
        self.assertGreater(len(batches), 3)


class UnionFindTest(unittest.TestCase):
    def test_unite_reports_new_merges_only(self) -> None:
        forest: UnionFind[int] = UnionFind(range(4))

        self.assertTrue(forest.unite(0, 1))
        self.assertTrue(forest.unite(2, 3))
        self.assertFalse(forest.unite(1, 0))
        self.assertTrue(forest.unite(1, 3))
        self.assertEqual(forest.groups(), [[0, 1, 2, 3]])

    def test_groups_keep_insertion_order(self) -> None:
        forest: UnionFind[str] = UnionFind("abcd")
        forest.unite("d", "b")

        self.assertEqual(forest.groups(), [["a"], ["b", "d"], ["c"]])


class MinCostPerfectMatchingTest(unittest.TestCase):
    def test_empty_matrix(self) -> None:
        self.assertEqual(min_cost_perfect_matching([]).total, 0)

    def test_non_square_matrix_is_rejected(self) -> None:
        with self.assertRaises(AssignmentError):
            min_cost_perfect_matching([[1, 2, 3], [4, 5, 6]])

    def test_matches_all_permutations(self) -> None:
        for seed in range(100):
            rng = random.Random(seed)
            n = rng.randint(1, 6)
            weights = [[rng.randint(0, 9) for _ in range(n)] for _ in range(n)]

            assignment = min_cost_perfect_matching(weights)

            best = min(
                sum(weights[row][column] for row, column in enumerate(order))
                for order in permutations(range(n))
            )
            self.assertEqual(assignment.total, best, f"seed={seed}")
            self.assertEqual(
                sorted(column for _, column in assignment.pairs), list(range(n)), f"seed={seed}"
            )
            self.assertEqual(
                sum(weights[row][column] for row, column in assignment.pairs), best, f"seed={seed}"
            )


if __name__ == "__main__":
    unittest.main()
