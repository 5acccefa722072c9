from ..controllers.expression_parser import parse_expression
from ..exceptions import EmptyHeisenberg, InvalidParams, ParseError
from ..models.catalog_key import CatalogKey
from ..models.graded import GradedDim
from ..models.superalgebra import (
    check_axioms,
    derived_subalgebra,
    generalized_heisenberg_rank,
    nilpotency_class,
)
from ..services import catalog
from .common import SuperTensorCase


class TestCatalogFamilies(SuperTensorCase):
    """
    TC-401  Named families have the advertised dimensions.
    TC-402  Invalid parameters are rejected.
    TC-403  Free class-2 quotients are deterministic in their seed.
    TC-404  The sweep enumerates valid specimens.
    """

    # TC-401
    def test_tc401_dimensions(self):
        self.assertDim(catalog.heisenberg_even(2, 1).dim, (5, 1), msg="H(2,1) has dim (2m+1|n)")
        self.assertDim(catalog.heisenberg_odd(2).dim, (2, 3), msg="H_2 has dim (m|m+1)")
        self.assertDim(catalog.abelian(0, 3).dim, (0, 3), msg="A(0|3)")

    def test_tc401_rank_two_sums(self):
        L = catalog.gh_rank2("mixed", (1, 0, 1))
        self.assertDim(generalized_heisenberg_rank(L), (1, 1), msg="H(1,0)⊕H_1 has GH rank (1|1)")

    # TC-402
    def test_tc402_empty_heisenberg(self):
        with self.assertRaises(EmptyHeisenberg, msg="H(0,0) does not exist"):
            catalog.heisenberg_even(0, 0)

    def test_tc402_bad_params(self):
        with self.assertRaises(InvalidParams, msg="negative dimensions are rejected"):
            catalog.abelian(-1, 2)
        with self.assertRaises(InvalidParams, msg="H_0 does not exist"):
            catalog.heisenberg_odd(0)
        with self.assertRaises(InvalidParams, msg="free (2|0) has a one-dimensional center"):
            catalog.free_nilpotent2_quotient(2, 0, GradedDim(2, 0), 1)

    # TC-403
    def test_tc403_free_quotient_seeded(self):
        first = catalog.free_nilpotent2_quotient(3, 0, GradedDim(2, 0), 1)
        second = catalog.free_nilpotent2_quotient(3, 0, GradedDim(2, 0), 1)
        self.assertEqual(first.structure, second.structure, msg="same seed, same structure constants")
        self.assertTrue(check_axioms(first).ok, msg="F2 quotients satisfy the axioms")
        self.assertEqual(nilpotency_class(first), 2, msg="F2 quotients have class 2")
        self.assertDim(derived_subalgebra(first).dim, (2, 0), msg="kept center is the derived subalgebra")

    def test_tc403_free_center_dims(self):
        self.assertDim(catalog.free_center_dims(3, 0), (3, 0), msg="Λ² of a 3-dim even space")
        self.assertDim(catalog.free_center_dims(1, 2), (3, 2), msg="(0 + 3 | 2) for (1|2) generators")

    # TC-404
    def test_tc404_specimens_valid(self):
        keys = catalog.specimens(4, 7)
        self.assertTrue(keys, msg="the sweep is never empty")
        names = [str(k) for k in keys]
        self.assertIn("H(1,0)", names, msg="H(1,0) is swept")
        self.assertIn("Hodd(1)+A(1|0)", names, msg="Heisenberg ⊕ abelian is swept")
        for key in keys:
            L = key.build()
            self.assertLessEqual(L.dim.total, 4, msg=f"{key} exceeds the dimension cap")
            self.assertTrue(check_axioms(L).ok, msg=f"{key} must satisfy the axioms")


class TestExpressionParser(SuperTensorCase):
    """
    TC-405  Catalog expressions parse to keys with canonical text.
    TC-406  Malformed expressions raise ParseError.
    """

    # TC-405
    def test_tc405_round_trip_text(self):
        for text in ("H(1,0)", "Hodd(2)", "A(3|1)", "H(1,0)+Hodd(1)", "F2(3,0;2|0;seed=7)"):
            self.assertEqual(str(parse_expression(text)), text, msg=f"{text} keeps its canonical text")

    def test_tc405_whitespace_and_default_seed(self):
        key = parse_expression(" F2( 3 , 0 ; 2 | 0 ) + A(1|0) ", default_seed=5)
        self.assertEqual(str(key), "F2(3,0;2|0;seed=5)+A(1|0)", msg="whitespace is insignificant")

    def test_tc405_left_associative_sum(self):
        key = parse_expression("H(1,0)+H(1,0)+A(0|1)")
        self.assertEqual(key.family, "direct_sum_expr", msg="sums build a direct_sum_expr key")
        self.assertEqual(len(key.summands), 3, msg="left-associative sums stay flat")
        self.assertEqual(key, CatalogKey.sum(CatalogKey.sum(CatalogKey.heisenberg_even(1, 0),
                                                            CatalogKey.heisenberg_even(1, 0)),
                                             CatalogKey.abelian(0, 1)),
                         msg="parser agrees with CatalogKey.sum")

    # TC-406
    def test_tc406_malformed(self):
        for text in ("H(1)", "A(1,2)", "Hodd(1", "B(1|1)", "H(1,0)+", ""):
            with self.assertRaises(ParseError, msg=f"{text!r} must not parse"):
                parse_expression(text)

    def test_tc406_invalid_family_params(self):
        key = parse_expression("Hodd(0)")
        with self.assertRaises(InvalidParams, msg="Hodd(0) parses but cannot be built"):
            key.build()
