import numpy as np

from ..exceptions import DerivedDimNotOne, InvalidAlgebra, NotAnIdeal, NotNilpotent
from ..models.graded import GradedDim, Parity
from ..models.superalgebra import (
    LieSuperAlgebra,
    center,
    change_basis,
    check_axioms,
    derived_subalgebra,
    direct_sum,
    generalized_heisenberg_rank,
    lower_central_series,
    nilpotency_class,
    quotient,
)
from ..services import catalog
from ..services import exact_linalg as la
from ..services.recognizer import IRRATIONAL_SCALING, recognize_derived_dim_one
from .common import SuperTensorCase

E, O = Parity.EVEN, Parity.ODD


def _broken_jacobi():
    basis = [("e1", E), ("e2", E), ("e3", E)]
    return LieSuperAlgebra.build(basis, {(0, 1): {1: 1}, (0, 2): {2: 1}, (1, 2): {0: 1}})


def _invertible_block(rng, size):
    while True:
        block = rng.integers(-2, 3, size=(size, size)).tolist()
        if size == 0 or la.rank(la.matrix(block, size)) == size:
            return block


def _random_graded_basis(L, rng):
    even, odd = L.dim.even, L.dim.odd
    rows = [r + [0] * odd for r in _invertible_block(rng, even)]
    rows += [[0] * even + r for r in _invertible_block(rng, odd)]
    return rows


class TestAxioms(SuperTensorCase):
    """
    TC-301  Catalog algebras satisfy the graded axioms.
    TC-302  A broken Jacobi identity is reported with its triple.
    TC-303  Grading and even-diagonal violations are reported.
    """

    # TC-301
    def test_tc301_catalog_algebras_pass(self):
        for L in (self.h10, self.h01, self.h11, self.h02, self.hodd1, self.hodd2, self.a21):
            report = check_axioms(L)
            self.assertTrue(report.ok, msg=f"{L.names} must satisfy the axioms: {report.summary()}")

    # TC-302
    def test_tc302_broken_jacobi(self):
        report = check_axioms(_broken_jacobi())
        self.assertFalse(report.ok, msg="[e1,e2]=e2, [e1,e3]=e3, [e2,e3]=e1 violates Jacobi")
        self.assertEqual(report.kinds(), {"jacobi"}, msg="only Jacobi violations are expected")
        self.assertEqual(report.violations[0].names, ("e1", "e2", "e3"), msg="the violating triple is named")

    # TC-303
    def test_tc303_grading_violation(self):
        L = LieSuperAlgebra.build([("x", E), ("z", E), ("y", O)], {(0, 2): {1: 1}})
        self.assertIn("grading", check_axioms(L).kinds(), msg="[even, odd] landing in even is a grading error")

    def test_tc303_even_diagonal(self):
        L = LieSuperAlgebra.build([("x", E), ("z", E)], {(0, 0): {1: 1}})
        self.assertIn("skew", check_axioms(L).kinds(), msg="[x,x] ≠ 0 for even x is reported")

    def test_tc303_odd_before_even_rejected(self):
        with self.assertRaises(InvalidAlgebra, msg="odd basis elements may not precede even ones"):
            LieSuperAlgebra.build([("y", O), ("x", E)])


class TestStructure(SuperTensorCase):
    """
    TC-304  Derived subalgebra and center.
    TC-305  Lower central series and nilpotency class.
    TC-306  Generalized Heisenberg rank.
    TC-307  Quotients by ideals.
    TC-308  Direct sums.
    TC-309  Basis changes.
    """

    # TC-304
    def test_tc304_heisenberg_derived_and_center(self):
        self.assertDim(derived_subalgebra(self.h10).dim, (1, 0), msg="H(1,0)′ = span{z}")
        self.assertDim(center(self.h10).dim, (1, 0), msg="Z(H(1,0)) = span{z}")
        self.assertDim(derived_subalgebra(self.hodd1).dim, (0, 1), msg="H_1′ is odd")

    def test_tc304_abelian_center_is_whole(self):
        self.assertDim(center(self.a23).dim, (2, 3), msg="abelian center is the whole algebra")
        self.assertTrue(derived_subalgebra(self.a23).is_zero(), msg="abelian derived subalgebra is zero")

    def test_tc304_skew_folding(self):
        L = LieSuperAlgebra.build([("x1", E), ("x2", E), ("z", E)], {(1, 0): {2: 1}})
        self.assertEqual(L.bracket(0, 1), {2: la.to_scalar(-1)}, msg="[x2,x1]=z folds to [x1,x2]=−z")

    # TC-305
    def test_tc305_classes(self):
        self.assertEqual(nilpotency_class(self.h10), 2, msg="H(1,0) has class 2")
        self.assertEqual(nilpotency_class(self.a21), 1, msg="abelian algebras have class 1")
        self.assertEqual(len(lower_central_series(self.h10)), 3, msg="L ⊃ L² ⊃ 0 for H(1,0)")

    def test_tc305_not_nilpotent(self):
        L = LieSuperAlgebra.build([("e1", E), ("e2", E)], {(0, 1): {1: 1}})
        self.assertIsNone(nilpotency_class(L), msg="[e1,e2]=e2 is solvable but not nilpotent")

    # TC-306
    def test_tc306_gh_rank(self):
        self.assertDim(generalized_heisenberg_rank(self.h11), (1, 0), msg="H(1,1) has GH rank (1|0)")
        self.assertIsNone(generalized_heisenberg_rank(self.a21), msg="abelian algebras are not GH")
        mixed = direct_sum(self.h10, self.hodd1)
        self.assertDim(generalized_heisenberg_rank(mixed), (1, 1), msg="H(1,0)⊕H_1 has GH rank (1|1)")
        self.assertIsNone(generalized_heisenberg_rank(direct_sum(self.h10, self.a21)),
                          msg="an abelian summand enlarges the center beyond L′")

    # TC-307
    def test_tc307_quotient_by_center(self):
        Q = quotient(self.h10, center(self.h10))
        self.assertEqual(Q.dim, GradedDim(2, 0), msg="H(1,0)/Z is two-dimensional")
        self.assertTrue(Q.is_abelian(), msg="H(1,0)/Z is abelian")

    def test_tc307_not_an_ideal(self):
        line = la.span([(1, 0, 0)], 3)
        with self.assertRaises(NotAnIdeal, msg="span{x1} is not an ideal of H(1,0)"):
            quotient(self.h10, line)

    # TC-308
    def test_tc308_direct_sum_names_and_dims(self):
        L = direct_sum(self.h10, self.h10)
        self.assertDim(L.dim, (6, 0), msg="H(1,0)⊕H(1,0) has dim (6|0)")
        self.assertIn("x1'", L.names, msg="colliding names get a prime")
        self.assertTrue(check_axioms(L).ok, msg="direct sums satisfy the axioms")

    def test_tc308_direct_sum_parity_order(self):
        L = direct_sum(self.hodd1, self.h10)
        self.assertEqual(L.parities, tuple(sorted(L.parities)), msg="even basis elements come first")

    # TC-309
    def test_tc309_swap_basis(self):
        L = change_basis(self.h10, [(0, 1, 0), (1, 0, 0), (0, 0, 1)])
        self.assertEqual(L.structure_table(), {(0, 1): {2: la.to_scalar(-1)}},
                         msg="swapping x1 and x2 flips the sign of the bracket")

    def test_tc309_dependent_rows_rejected(self):
        with self.assertRaises(InvalidAlgebra, msg="dependent rows are not a basis"):
            change_basis(self.h10, [(1, 0, 0), (2, 0, 0), (0, 0, 1)])

    def test_tc309_random_basis_keeps_invariants(self):
        rng = np.random.default_rng(11)
        base = direct_sum(self.h11, catalog.abelian(1, 1))
        even, odd = base.dim.even, base.dim.odd
        while True:
            a = rng.integers(-2, 3, size=(even, even))
            b = rng.integers(-2, 3, size=(odd, odd))
            if round(np.linalg.det(a)) != 0 and round(np.linalg.det(b)) != 0:
                break
        rows = [list(r) + [0] * odd for r in a.tolist()] + [[0] * even + list(r) for r in b.tolist()]
        L = change_basis(base, rows)
        self.assertTrue(check_axioms(L).ok, msg="basis changes preserve the axioms")
        self.assertEqual(derived_subalgebra(L).dim, derived_subalgebra(base).dim, msg="L′ is basis independent")
        self.assertEqual(center(L).dim, center(base).dim, msg="Z(L) is basis independent")


class TestRecognizer(SuperTensorCase):
    """
    TC-310  Derived-dimension-one algebras are read as H ⊕ A.
    TC-311  The emitted basis realizes the isomorphism.
    TC-312  Irrational scalings are flagged instead of guessed.
    TC-313  Preconditions.
    TC-314  Recognized invariants survive random parity-preserving basis changes.
    """

    # TC-310
    def test_tc310_even_center(self):
        report = recognize_derived_dim_one(direct_sum(self.h20, catalog.abelian(1, 1)))
        self.assertEqual((report.m, report.n), (2, 0), msg="H(2,0)⊕A(1|1) has m=2, n=0")
        self.assertDim(report.abelian, (1, 1), msg="abelian part (1|1)")
        self.assertFalse(report.capable, msg="H(2,0)⊕A is not capable")

    def test_tc310_odd_center(self):
        report = recognize_derived_dim_one(self.hodd2)
        self.assertEqual(report.center_parity, Parity.ODD, msg="H_2 has odd derived subalgebra")
        self.assertEqual(report.m, 2, msg="H_2 has m=2")
        self.assertDim(report.abelian, (0, 0), msg="H_2 has no abelian part")

    def test_tc310_capable_forms(self):
        self.assertTrue(recognize_derived_dim_one(direct_sum(self.h10, self.a21)).capable,
                        msg="H(1,0)⊕A is capable")
        self.assertTrue(recognize_derived_dim_one(self.hodd1).capable, msg="H_1 is capable")

    # TC-311
    def test_tc311_basis_reproduces_normal_form(self):
        target = direct_sum(self.h01, catalog.abelian(0, 1))
        # f1 = 2z, f2 = y1 + b1, f3 = b1
        L = change_basis(target, [(2, 0, 0), (0, 1, 1), (0, 0, 1)])
        report = recognize_derived_dim_one(L)
        self.assertIsNone(report.basis_omitted, msg="rational scaling suffices here")
        rebuilt = change_basis(L, report.vectors())
        self.assertEqual(rebuilt.structure_table(), target.structure_table(),
                         msg="emitted basis must reproduce H(0,1)⊕A(0|1)")

    def test_tc311_even_basis_reproduces_normal_form(self):
        target = direct_sum(self.h10, catalog.abelian(1, 0))
        L = change_basis(target, [(1, 0, 0, 1), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 1, 1)])
        report = recognize_derived_dim_one(L)
        rebuilt = change_basis(L, report.vectors())
        self.assertEqual(rebuilt.structure_table(), target.structure_table(),
                         msg="emitted basis must reproduce H(1,0)⊕A(1|0)")

    # TC-312
    def test_tc312_irrational_scaling(self):
        L = LieSuperAlgebra.build([("z", E), ("y1", O), ("y2", O)], {(1, 1): {0: 1}, (2, 2): {0: 2}})
        report = recognize_derived_dim_one(L)
        self.assertEqual((report.m, report.n), (0, 2), msg="invariants are still reported")
        self.assertEqual(report.basis_omitted, IRRATIONAL_SCALING, msg="√2 is not rational")
        self.assertIsNone(report.vectors(), msg="no basis is emitted")

    # TC-313
    def test_tc313_preconditions(self):
        with self.assertRaises(DerivedDimNotOne, msg="H(1,0)⊕H(1,0) has a 2-dim derived subalgebra"):
            recognize_derived_dim_one(direct_sum(self.h10, self.h10))
        with self.assertRaises(NotNilpotent, msg="non-nilpotent input is rejected"):
            recognize_derived_dim_one(LieSuperAlgebra.build([("e1", E), ("e2", E)], {(0, 1): {1: 1}}))

    # TC-314
    def test_tc314_random_basis_keeps_normal_form(self):
        rng = np.random.default_rng(314)
        cases = (
            (self.h11, (1, 1), (0, 0)),
            (catalog.heisenberg_even(2, 1), (2, 1), (0, 0)),
            (direct_sum(catalog.heisenberg_even(1, 2), catalog.abelian(1, 1)), (1, 2), (1, 1)),
            (self.hodd2, (2, 0), (0, 0)),
            (direct_sum(self.hodd1, catalog.abelian(1, 2)), (1, 0), (1, 2)),
        )
        for base, expected_mn, expected_abelian in cases:
            reference = recognize_derived_dim_one(base)
            self.assertEqual((reference.m, reference.n), expected_mn, msg=f"{base.names} before any basis change")
            for trial in range(8):
                L = change_basis(base, _random_graded_basis(base, rng))
                report = recognize_derived_dim_one(L)
                label = f"{base.names} trial {trial}"
                self.assertEqual(report.center_parity, reference.center_parity, msg=f"{label}: center parity")
                self.assertEqual((report.m, report.n), expected_mn, msg=f"{label}: (m, n) must not change")
                self.assertDim(report.abelian, expected_abelian, msg=f"{label}: abelian part must not change")
                if report.vectors() is not None:
                    rebuilt = change_basis(L, report.vectors())
                    self.assertTrue(check_axioms(rebuilt).ok, msg=f"{label}: emitted basis gives a valid algebra")
                    self.assertEqual(recognize_derived_dim_one(rebuilt).abelian, report.abelian,
                                     msg=f"{label}: emitted basis keeps the abelian part")
