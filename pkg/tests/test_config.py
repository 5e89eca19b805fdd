import os
import unittest
from unittest.mock import patch

from twobreak.config import Settings


class SettingsTest(unittest.TestCase):
    def test_defaults(self) -> None:
        with patch.dict(os.environ, {}, clear=True):
            current = Settings(_env_file=None)

        self.assertEqual(current.cap_for("exact"), 10)
        self.assertEqual(current.cap_for("oracle"), 5)
        self.assertEqual(current.cap_for("macd-oracle"), 8)
        self.assertEqual(current.cap_for("misa-oracle"), 12)
        self.assertEqual(current.jobs, 1)

    def test_environment_overrides_caps(self) -> None:
        with patch.dict(os.environ, {"TWOBREAK_EXACT_CAP": "14", "TWOBREAK_JOBS": "3"}):
            current = Settings(_env_file=None)

        self.assertEqual(current.cap_for("exact"), 14)
        self.assertEqual(current.jobs, 3)

    def test_invocation_override_wins(self) -> None:
        current = Settings(_env_file=None)

        self.assertEqual(current.cap_for("oracle", 7), 7)

    def test_non_positive_override_is_rejected(self) -> None:
        with self.assertRaises(ValueError):
            Settings(_env_file=None).cap_for("exact", 0)

    def test_unknown_search_is_rejected(self) -> None:
        with self.assertRaises(ValueError):
            Settings(_env_file=None).cap_for("fastest")


if __name__ == "__main__":
    unittest.main()
