from itertools import product

import numpy as np

from ..exceptions import AbelianInput, ClassTooHigh, InvalidParams
from ..models.graded import GradedDim, Parity
from ..models.superalgebra import LieSuperAlgebra, derived_subalgebra, direct_sum
from ..services import catalog, formulas
from ..services import tensor_homology as th
from .common import SuperTensorCase


def _filiform():
    basis = [(f"e{i + 1}", Parity.EVEN) for i in range(4)]
    return LieSuperAlgebra.build(basis, {(0, 1): {2: 1}, (0, 2): {3: 1}})


class TestTensorSquares(SuperTensorCase):
    """
    TC-501  Tensor squares of rank-one Heisenbergs.
    TC-502  Exterior squares of Heisenbergs.
    TC-503  Abelian sweep: ⊗², ∧², □ and the ⊗² = ∧² ⊕ □ splitting.
    TC-504  Quotient dims do not depend on the relation order.
    TC-505  Class ≥ 3 inputs are rejected.
    """

    # TC-501
    def test_tc501_tensor_squares(self):
        self.assertDim(th.tensor_square(self.h10).quotient_dim, (6, 0), msg="⊗²H(1,0) = (6|0)")
        self.assertDim(th.tensor_square(self.h01).quotient_dim, (1, 0), msg="⊗²H(0,1) = (1|0)")
        self.assertDim(th.tensor_square(self.hodd1).quotient_dim, (2, 3), msg="⊗²H_1 = (2|3)")

    def test_tc501_representatives_match_dim(self):
        t = th.tensor_square(self.h10)
        self.assertEqual(len(t.representative_labels()), 6, msg="one representative per quotient dimension")
        self.assertTrue(all("⊗" in label for label in t.representative_labels()),
                        msg="representatives are e_i⊗e_j symbols")

    # TC-502
    def test_tc502_exterior_squares(self):
        self.assertDim(th.exterior_square(self.h10).quotient_dim, (3, 0), msg="∧²H(1,0) = (3|0)")
        self.assertDim(th.exterior_square(self.h01).quotient_dim, (1, 0), msg="∧²H(0,1) = (1|0)")
        self.assertDim(th.exterior_square(self.hodd1).quotient_dim, (1, 2), msg="∧²H_1 = (1|2)")
        for m in (2, 3):
            self.assertDim(th.exterior_square(catalog.heisenberg_odd(m)).quotient_dim, (m * m, m * m),
                           msg=f"∧²H_{m} = (m²|m²)")

    def test_tc502_even_heisenberg_family(self):
        for m, n in ((2, 0), (1, 1), (0, 2), (3, 0), (2, 1), (1, 2), (0, 3)):
            L = catalog.heisenberg_even(m, n)
            self.assertDim(th.exterior_square(L).quotient_dim, formulas.ext2_heisenberg_even(m, n),
                           msg=f"∧²H({m},{n}) matches the closed form")
            self.assertDim(th.tensor_square(L).quotient_dim, formulas.tensor2_heisenberg_even(m, n),
                           msg=f"⊗²H({m},{n}) matches the closed form")

    # TC-503
    def test_tc503_abelian_sweep(self):
        for p in range(7):
            for q in range(7 - p):
                if p + q == 0:
                    continue
                L = catalog.abelian(p, q)
                tensor = th.tensor_square(L)
                exterior = th.exterior_square(L)
                self.assertDim(tensor.quotient_dim, (p * p + q * q, 2 * p * q), msg=f"⊗²A({p}|{q})")
                self.assertDim(exterior.quotient_dim, formulas.multiplier_abelian(p, q), msg=f"∧²A({p}|{q})")
                self.assertDim(th.square_dim(L, tensor), th.gamma_dim(p, q), msg=f"□A({p}|{q}) = Γ")
                self.assertTrue(th.decomposition_check(L, tensor, exterior), msg=f"⊗² = ∧² ⊕ □ on A({p}|{q})")

    def test_tc503_heisenberg_decomposition(self):
        for L in (self.h10, self.h11, self.hodd1, self.hodd2):
            self.assertTrue(th.decomposition_check(L), msg=f"⊗² = ∧² ⊕ □ on {L.names}")

    # TC-504
    def test_tc504_relation_order_invariance(self):
        rng = np.random.default_rng(3)
        for L in (self.h11, self.hodd1):
            reference = th.tensor_square(L).quotient_dim
            triples = list(product(range(L.dim_total), repeat=3))
            for _ in range(3):
                shuffled = [triples[i] for i in rng.permutation(len(triples))]
                self.assertEqual(th.tensor_square(L, order=shuffled).quotient_dim, reference,
                                 msg="relation order must not change the quotient")

    # TC-505
    def test_tc505_class_three_rejected(self):
        with self.assertRaises(ClassTooHigh, msg="the filiform algebra has class 3"):
            th.tensor_square(_filiform())
        with self.assertRaises(ClassTooHigh, msg="exterior squares need class ≤ 2 as well"):
            th.exterior_square(_filiform())


class TestGamma(SuperTensorCase):
    """
    TC-506  Constructive Γ equals (p(p+1)/2 + q(q−1)/2 | pq).
    """

    def test_tc506_gamma_sweep(self):
        for p in range(7):
            for q in range(7 - p):
                self.assertDim(th.gamma_dim(p, q), formulas.gamma_dim_formula(p, q), msg=f"Γ({p}|{q})")

    def test_tc506_gamma_rejects_negative(self):
        with self.assertRaises(InvalidParams, msg="negative generator counts are rejected"):
            th.gamma_space(-1, 0)


class TestMultipliersAndCapability(SuperTensorCase):
    """
    TC-507  Schur multipliers through ∧² − L².
    TC-508  Exterior centers and capability.
    TC-509  Abelian pair exterior products.
    """

    # TC-507
    def test_tc507_multipliers(self):
        cases = (
            (self.h10, (2, 0)),
            (self.h01, (0, 0)),
            (self.h20, (5, 0)),
            (self.hodd1, (1, 1)),
            (self.hodd2, (4, 3)),
            (direct_sum(self.h10, self.h10), (8, 0)),
        )
        for L, expected in cases:
            self.assertDim(th.schur_multiplier_class2(L), expected, msg=f"M({L.names})")

    def test_tc507_direct_sum_multiplier(self):
        ab = GradedDim(2, 0)
        expected = formulas.multiplier_direct_sum(GradedDim(2, 0), GradedDim(2, 0), ab, ab)
        self.assertDim(th.schur_multiplier_class2(direct_sum(self.h10, self.h10)), expected,
                       msg="M(H⊕K) = M(H) + M(K) + H/H² ⊗ K/K²")

    # TC-508
    def test_tc508_capable(self):
        capable = [self.h10, self.hodd1]
        for k, l in ((1, 0), (0, 1), (2, 1), (1, 2)):
            capable.append(direct_sum(self.h10, catalog.abelian(k, l)))
        capable.append(direct_sum(self.hodd1, catalog.abelian(1, 1)))
        for L in capable:
            self.assertTrue(th.is_capable(L), msg=f"{L.names} is capable")

    def test_tc508_not_capable(self):
        for L in (self.h20, self.h11, self.h02, self.hodd2):
            zw = th.exterior_center(L)
            self.assertFalse(zw.is_zero(), msg=f"{L.names} is not capable")
            self.assertEqual(zw, derived_subalgebra(L), msg="Z^∧ is the derived line here")

    # TC-509
    def test_tc509_pair_exterior(self):
        for m, n in ((2, 1), (1, 2), (2, 2)):
            for k in range(m + 1):
                for h in range(n + 1):
                    self.assertDim(th.pair_exterior_abelian(m, n, k, h).quotient_dim,
                                   formulas.multiplier_pair_abelian(m, n, k, h),
                                   msg=f"A({m}|{n}) ∧ I({k}|{h})")

    def test_tc509_pair_exterior_full_ideal(self):
        self.assertDim(th.pair_exterior_abelian(2, 1, 2, 1).quotient_dim, formulas.multiplier_abelian(2, 1),
                       msg="I = A gives the multiplier of A")


class TestTripleTensorAndBound(SuperTensorCase):
    """
    TC-510  ⊗³ of Heisenbergs.
    TC-511  The ⊗³ bound and its equality case.
    """

    # TC-510
    def test_tc510_triple_tensors(self):
        self.assertDim(th.triple_tensor_class2(self.h10), (12, 0), msg="⊗³H(1,0) = (12|0)")
        self.assertDim(th.triple_tensor_class2(self.h01), (0, 1), msg="⊗³H(0,1) = (0|1)")
        self.assertDim(th.triple_tensor_class2(self.hodd1), (5, 5), msg="⊗³H_1 = (5|5)")
        for m, n in ((2, 0), (1, 1), (0, 2), (2, 1), (1, 2)):
            self.assertDim(th.triple_tensor_class2(catalog.heisenberg_even(m, n)),
                           (8 * m ** 3 + 6 * m * n * n, 12 * m * m * n + n ** 3), msg=f"⊗³H({m},{n})")

    def test_tc510_odd_heisenberg_two(self):
        constructive = th.triple_tensor_class2(self.hodd2)
        self.assertDim(constructive, (32, 32), msg="⊗²H_2 ⊗ H_2/H_2² = (8|8)·(2|2)")
        self.assertDim(formulas.triple_tensor_heisenberg_odd(2), (16, 16), msg="printed value stays (16|16)")

    # TC-511
    def test_tc511_bound_equality_h10(self):
        report = th.bound_check(self.h10)
        self.assertEqual((report.lhs, report.rhs), (12, 12), msg="H(1,0) attains the bound")
        self.assertTrue(report.equality and report.expected_equality, msg="equality expected for H(1,0)")
        self.assertTrue(report.consistent, msg="H(1,0) is consistent")

    def test_tc511_bound_strict_with_abelian(self):
        report = th.bound_check(direct_sum(self.h10, catalog.abelian(1, 0)))
        self.assertEqual((report.lhs, report.rhs), (33, 36), msg="11·3 < 4·3²")
        self.assertFalse(report.equality, msg="H(1,0)⊕A(1|0) is strict")
        self.assertTrue(report.consistent, msg="strictness is expected here")

    def test_tc511_bound_holds(self):
        for L in (self.h20, self.h11, self.h02, self.hodd1, self.hodd2, direct_sum(self.h10, self.hodd1)):
            self.assertTrue(th.bound_check(L).satisfied, msg=f"⊗³ bound holds for {L.names}")

    def test_tc511_abelian_rejected(self):
        with self.assertRaises(AbelianInput, msg="the bound is for non-abelian algebras"):
            th.bound_check(self.a21)
