import unittest

from ..config import config
from ..models.graded import GradedDim
from ..services import catalog


class SuperTensorCase(unittest.TestCase):
    """Shared catalog algebras for all supertensor test cases."""

    @classmethod
    def setUpClass(cls):
        super().setUpClass()

        # Rank-1 Heisenbergs with even center
        cls.h10 = catalog.heisenberg_even(1, 0)
        cls.h01 = catalog.heisenberg_even(0, 1)
        cls.h20 = catalog.heisenberg_even(2, 0)
        cls.h11 = catalog.heisenberg_even(1, 1)
        cls.h02 = catalog.heisenberg_even(0, 2)

        # Odd-center Heisenbergs
        cls.hodd1 = catalog.heisenberg_odd(1)
        cls.hodd2 = catalog.heisenberg_odd(2)

        # Abelians
        cls.a21 = catalog.abelian(2, 1)
        cls.a23 = catalog.abelian(2, 3)

    def setUp(self):
        super().setUp()
        config.reset()
        config.set_param("supertensor.no_parallel", True)

    def tearDown(self):
        config.reset()
        super().tearDown()

    def assertDim(self, actual, expected, msg=None):
        """expected is an (even, odd) pair or a GradedDim."""
        if not isinstance(expected, GradedDim):
            expected = GradedDim(*expected)
        self.assertEqual(actual, expected, msg=msg or f"expected {expected}, got {actual}")
