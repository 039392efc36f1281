import random

import pytest

from clusterbounds import (
    CommutativityError,
    PauliOp,
    ValidationError,
    css_distance_bruteforce,
    ft_extend,
    ft_extend_matrices,
    hypergraph_product,
    min_nontrivial_weight,
    new_css,
    new_stabilizer,
    repetition_transpose,
    symplectic_product,
    toric_code,
)
from clusterbounds.gf2 import BitMatrix, BitVector

from conftest import make_random_matrix


class TestPauliOp:
    def test_label_round_trip(self):
        op = PauliOp.from_label("XIZY")
        assert op.label() == "XIZY"
        assert op.weight == 3
        assert op.support() == (0, 2, 3)

    def test_product_is_xor(self):
        a = PauliOp.from_label("XIZ")
        b = PauliOp.from_label("ZIZ")
        assert (a * b).label() == "YII"

    def test_binary_round_trip(self):
        op = PauliOp.from_label("YXZI")
        assert PauliOp.from_binary(op.to_binary()) == op

    def test_single(self):
        op = PauliOp.single(4, 2, "Y")
        assert op.label() == "IIYI"


class TestSymplecticProduct:
    def test_x_vs_z(self):
        assert symplectic_product(PauliOp.from_label("X"), PauliOp.from_label("Z")) == 1

    def test_self_commutes(self):
        op = PauliOp.from_label("X")
        assert symplectic_product(op, op) == 0

    def test_y_vs_z(self):
        assert symplectic_product(PauliOp.from_label("Y"), PauliOp.from_label("Z")) == 1

    def test_symmetric_bilinear(self):
        rng = random.Random(11)
        labels = "IXYZ"
        for _ in range(40):
            ops = [
                PauliOp.from_label("".join(rng.choice(labels) for _ in range(5)))
                for _ in range(3)
            ]
            a, b, c = ops
            assert symplectic_product(a, b) == symplectic_product(b, a)
            assert symplectic_product(a * b, c) == (
                symplectic_product(a, c) ^ symplectic_product(b, c)
            )


class TestNewStabilizer:
    def test_toric_parameters(self, toric2):
        stab = toric2.stabilizer
        assert (stab.n, stab.k, stab.w) == (8, 2, 4)

    def test_single_generator(self):
        code = new_stabilizer(BitMatrix.from_vectors([PauliOp.from_label("XX").to_binary()]))
        assert code.k == 1

    def test_commuting_mixed_rows_accepted(self):
        # X1 Z2 and Z1 X2 have symplectic product 1 + 1 = 0
        rows = [PauliOp.from_label("XZ").to_binary(), PauliOp.from_label("ZX").to_binary()]
        code = new_stabilizer(BitMatrix.from_vectors(rows))
        assert code.num_generators == 2

    def test_anticommuting_pair_rejected(self):
        rows = [PauliOp.from_label("XI").to_binary(), PauliOp.from_label("ZI").to_binary()]
        with pytest.raises(CommutativityError) as err:
            new_stabilizer(BitMatrix.from_vectors(rows))
        assert err.value.rows == (0, 1)

    def test_zero_row_rejected(self):
        with pytest.raises(ValidationError):
            new_stabilizer(BitMatrix.zeros(1, 4))

    def test_explicit_qubit_count_checked(self):
        with pytest.raises(ValidationError):
            new_stabilizer(BitMatrix.from_lists([[1, 1, 0, 0]]), n=3)

    def test_dependent_rows_do_not_change_k(self, toric2):
        stab = toric2.stabilizer
        doubled = new_stabilizer(BitMatrix(stab.G.rows + stab.G.rows[:1], stab.G.cols))
        assert doubled.k == stab.k


class TestSyndrome:
    def test_identity_error(self, toric3):
        stab = toric3.stabilizer
        assert not stab.syndrome(PauliOp.identity(18))

    def test_single_x_hits_two_sites(self, toric3):
        stab = toric3.stabilizer
        for j in range(toric3.n):
            assert stab.syndrome(PauliOp.single(18, j, "X")).weight == 2

    def test_generators_are_undetectable(self, toric3):
        stab = toric3.stabilizer
        for i in range(stab.num_generators):
            assert not stab.syndrome(stab.generator(i))

    def test_linearity(self, toric3):
        stab = toric3.stabilizer
        rng = random.Random(12)
        for _ in range(20):
            a = PauliOp.from_label("".join(rng.choice("IXYZ") for _ in range(18)))
            b = PauliOp.from_label("".join(rng.choice("IXYZ") for _ in range(18)))
            assert stab.syndrome(a * b) == stab.syndrome(a) ^ stab.syndrome(b)

    def test_dimension_mismatch(self, toric3):
        with pytest.raises(ValidationError):
            toric3.stabilizer.syndrome(PauliOp.identity(5))


class TestStabilizerMembership:
    def test_plaquette_is_member(self, toric2):
        stab = toric2.stabilizer
        assert stab.is_stabilizer_element(stab.generator(0))

    def test_product_of_plaquettes_is_member(self, toric2):
        stab = toric2.stabilizer
        assert stab.is_stabilizer_element(stab.generator(0) * stab.generator(1))

    def test_noncontractible_loop_is_not(self, toric2):
        loop = PauliOp(BitVector.from_indices(8, [0, 1]), BitVector(8))
        stab = toric2.stabilizer
        assert not stab.syndrome(loop)
        assert not stab.is_stabilizer_element(loop)

    def test_detectable_error_rejected(self, toric2):
        with pytest.raises(ValidationError):
            toric2.stabilizer.is_stabilizer_element(PauliOp.single(8, 0, "X"))


class TestToricCode:
    def test_small_parameters(self, toric2, toric3):
        assert (toric2.n, toric2.k, toric2.d) == (8, 2, 2)
        assert (toric3.n, toric3.k, toric3.d) == (18, 2, 3)
        assert toric2.w_X == toric2.w_Z == 4

    def test_distance_bruteforce(self, toric2, toric3):
        assert css_distance_bruteforce(toric2, 3) == 2
        assert css_distance_bruteforce(toric3, 4) == 3

    def test_rank_L4(self, toric4):
        assert toric4.G_X.rank() == 15
        assert toric4.G_Z.rank() == 15

    def test_each_qubit_in_two_checks_per_type(self, toric3):
        for m in (toric3.G_X, toric3.G_Z):
            for j in range(toric3.n):
                assert sum((row >> j) & 1 for row in m.rows) == 2

    def test_generator_count_and_dependencies(self, toric3):
        assert toric3.G_X.nrows + toric3.G_Z.nrows == 2 * 9
        assert toric3.G_X.rank() == 8 and toric3.G_Z.rank() == 8

    def test_L_too_small(self):
        with pytest.raises(ValidationError):
            toric_code(1)


class TestHypergraphProduct:
    def test_smallest_instance(self):
        rep2 = BitMatrix.from_lists([[1, 1]])
        code = hypergraph_product(rep2, rep2)
        assert code.n == 5
        assert (code.G_X @ code.G_Z.transpose()).is_zero()

    def test_cycle_matrix_gives_toric_parameters(self):
        rep3 = BitMatrix.from_lists([[1, 1, 0], [0, 1, 1], [1, 0, 1]])
        code = hypergraph_product(rep3, rep3)
        assert (code.n, code.k) == (18, 2)
        assert code.w_X == code.w_Z == 4

    def test_random_pairs_commute(self):
        rng = random.Random(13)
        for _ in range(5):
            h1 = make_random_matrix(rng, 2, 4, 2)
            h2 = make_random_matrix(rng, 2, 3, 2)
            code = hypergraph_product(h1, h2)
            assert (code.G_X @ code.G_Z.transpose()).is_zero()
            assert code.n == 4 * 3 + 2 * 2

    def test_zero_matrix_rejected(self):
        with pytest.raises(ValidationError):
            hypergraph_product(BitMatrix.zeros(2, 3), BitMatrix.identity(2))


class TestRepetitionTranspose:
    def test_m2(self):
        assert repetition_transpose(2) == BitMatrix.from_lists([[1], [1]])

    def test_m3(self):
        assert repetition_transpose(3) == BitMatrix.from_lists([[1, 0], [1, 1], [0, 1]])

    def test_column_sums_are_two(self):
        for m in range(2, 8):
            r = repetition_transpose(m)
            for c in range(m - 1):
                assert sum((row >> c) & 1 for row in r.rows) == 2

    def test_m_too_small(self):
        with pytest.raises(ValidationError):
            repetition_transpose(1)


class TestFtExtend:
    def test_shape_toric2_three_rounds(self, toric2):
        ft = ft_extend(toric2, 3, errors="x")
        assert ft.P.shape == (12, 32)
        assert ft.N == 32

    def test_orthogonality_and_row_weight(self, toric2, toric3):
        for code in (toric2, toric3):
            for m in (1, 2, 3, 4):
                ft = ft_extend(code, m, errors="x")
                assert (ft.P @ ft.Q.transpose()).is_zero()
                assert ft.w <= code.w_Z + 2

    def test_closed_form_parameters(self, toric2, toric3):
        for code, L in ((toric2, 2), (toric3, 3)):
            r = L * L
            for m in (1, 2, 3, 4):
                ft = ft_extend(code, m, errors="x")
                assert ft.N == m * code.n + (m - 1) * r
                assert ft.K == code.k == 2
                assert ft.D_ft == min(L, m)

    def test_distance_bruteforce_small_instances(self, toric2):
        for m in (2, 3):
            ft = ft_extend(toric2, m, errors="x")
            if ft.N <= 40:
                assert min_nontrivial_weight(ft.P, ft.Q, ft.D_ft) == ft.D_ft

    def test_single_round_is_bare_pair(self, toric2):
        ft = ft_extend(toric2, 1, errors="x")
        assert ft.P == toric2.G_Z
        assert ft.Q == toric2.G_X
        assert ft.N == toric2.n

    def test_matrix_level_entry_point(self, toric2):
        ft = ft_extend_matrices(toric2.G_Z, toric2.G_X, 2)
        assert ft.N == 2 * 8 + 4
        assert (ft.P @ ft.Q.transpose()).is_zero()

    def test_bad_round_count(self, toric2):
        with pytest.raises(ValidationError):
            ft_extend(toric2, 0, errors="x")


class TestCssValidation:
    def test_orthogonality_enforced(self):
        gx = BitMatrix.from_lists([[1, 1, 0]])
        gz = BitMatrix.from_lists([[1, 0, 1]])
        with pytest.raises(CommutativityError):
            new_css(gx, gz)

    def test_k_from_ranks(self, toric3):
        assert toric3.k == toric3.n - toric3.G_X.rank() - toric3.G_Z.rank()

    def test_sector_views(self, toric3):
        checks, degeneracy = toric3.sector("x")
        assert checks == toric3.G_Z and degeneracy == toric3.G_X
        checks, degeneracy = toric3.sector("z")
        assert checks == toric3.G_X and degeneracy == toric3.G_Z
        with pytest.raises(ValidationError):
            toric3.sector("w")

    def test_block_diagonal_stabilizer(self, toric2):
        stab = toric2.stabilizer
        assert stab.G.nrows == toric2.G_X.nrows + toric2.G_Z.nrows
        assert (stab.H @ stab.G.transpose()).is_zero()

    def test_check_times_generators_vanishes_everywhere(self, random_css_codes, toric3):
        for code in list(random_css_codes) + [toric3]:
            stab = code.stabilizer
            assert (stab.H @ stab.G.transpose()).is_zero()
