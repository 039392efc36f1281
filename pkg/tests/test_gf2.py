import random

import pytest

from clusterbounds import ValidationError
from clusterbounds.gf2 import BitMatrix, BitVector, hstack, kron, vstack


def random_bitmatrix(rng, rows, cols):
    return BitMatrix(tuple(rng.getrandbits(cols) for _ in range(rows)), cols)


def naive_matmul(a: BitMatrix, b: BitMatrix) -> BitMatrix:
    al, bl = a.to_lists(), b.to_lists()
    out = [
        [sum(al[i][k] * bl[k][j] for k in range(a.cols)) % 2 for j in range(b.cols)]
        for i in range(a.nrows)
    ]
    return BitMatrix.from_lists(out)


class TestBitVector:
    def test_xor_self_is_zero(self):
        v = BitVector.from01("10110")
        assert (v ^ v).bits == 0

    def test_weight_counts_set_bits(self):
        assert BitVector.from01("10110").weight == 3
        assert BitVector(7).weight == 0

    def test_round_trip(self):
        s = "0101100"
        assert BitVector.from01(s).to01() == s

    def test_support_and_indices(self):
        v = BitVector.from_indices(6, [1, 4])
        assert v.support() == (1, 4)
        assert v[1] == 1 and v[0] == 0

    def test_concat_split(self):
        a, b = BitVector.from01("101"), BitVector.from01("01")
        c = a.concat(b)
        assert c.to01() == "10101"
        left, right = c.split(3)
        assert (left, right) == (a, b)

    def test_dot_parity(self):
        assert BitVector.from01("110").dot(BitVector.from01("011")) == 1
        assert BitVector.from01("110").dot(BitVector.from01("101")) == 1
        assert BitVector.from01("110").dot(BitVector.from01("111")) == 0

    def test_length_mismatch(self):
        with pytest.raises(ValidationError):
            BitVector(3) ^ BitVector(4)


class TestRankKernel:
    def test_zero_matrix_rank(self):
        assert BitMatrix.zeros(3, 3).rank() == 0

    def test_identity_rank(self):
        assert BitMatrix.identity(3).rank() == 3

    def test_toric_plaquette_rank(self, toric2):
        # one global dependency among the four plaquettes
        assert toric2.G_X.rank() == 3

    def test_kernel_identity(self):
        assert BitMatrix.identity(3).kernel_dimension() == 0

    def test_kernel_all_ones(self):
        m = BitMatrix.from_lists([[1, 1, 1, 1], [1, 1, 1, 1]])
        assert m.rank() == 1
        assert m.kernel_dimension() == 3

    def test_kernel_zero_row(self):
        assert BitMatrix.zeros(1, 5).kernel_dimension() == 5

    def test_rank_nullity(self):
        rng = random.Random(1)
        for _ in range(30):
            r, c = rng.randint(1, 8), rng.randint(1, 8)
            m = random_bitmatrix(rng, r, c)
            assert m.rank() + m.kernel_dimension() == c

    def test_kernel_basis_annihilates(self):
        rng = random.Random(2)
        for _ in range(20):
            m = random_bitmatrix(rng, rng.randint(1, 6), rng.randint(1, 9))
            for v in m.kernel_basis():
                assert not m.mul_vec(v)
            assert len(m.kernel_basis()) == m.kernel_dimension()

    def test_kernel_basis_deterministic(self):
        m = BitMatrix.from_lists([[1, 0, 1, 1], [0, 1, 1, 0]])
        assert m.kernel_basis() == m.kernel_basis()


class TestRowSpace:
    def test_identity_contains_everything(self):
        m = BitMatrix.identity(4)
        assert m.row_space_contains(BitVector.from01("1011"))

    def test_zero_matrix_contains_nothing_nonzero(self):
        m = BitMatrix.zeros(2, 4)
        assert not m.row_space_contains(BitVector.from01("0100"))
        assert m.row_space_contains(BitVector(4))

    def test_toric_plaquette_combination(self, toric2):
        combo = BitVector(toric2.n, toric2.G_X.rows[0] ^ toric2.G_X.rows[1])
        assert toric2.G_X.row_space_contains(combo)

    def test_dimension_mismatch(self):
        with pytest.raises(ValidationError):
            BitMatrix.identity(3).row_space_contains(BitVector(4))

    def test_random_combinations_contained(self):
        rng = random.Random(3)
        for _ in range(20):
            m = random_bitmatrix(rng, 4, 7)
            acc = 0
            for row in m.rows:
                if rng.random() < 0.5:
                    acc ^= row
            assert m.row_space_contains(BitVector(7, acc))


class TestKron:
    def test_identity_times_identity(self):
        assert kron(BitMatrix.identity(2), BitMatrix.identity(3)) == BitMatrix.identity(6)

    def test_scalar_identity(self):
        rng = random.Random(4)
        a = random_bitmatrix(rng, 3, 5)
        one = BitMatrix.identity(1)
        assert kron(a, one) == a
        assert kron(one, a) == a

    def test_block_diagonal_copies(self, toric2):
        h = toric2.G_Z
        out = kron(BitMatrix.identity(3), h)
        assert out.shape == (12, 24)
        expected = BitMatrix(
            tuple(row << (8 * block) for block in range(3) for row in h.rows), 24
        )
        assert out == expected

    def test_dim_associativity(self):
        rng = random.Random(5)
        a = random_bitmatrix(rng, 2, 3)
        b = random_bitmatrix(rng, 3, 2)
        c = random_bitmatrix(rng, 1, 4)
        assert kron(kron(a, b), c).shape == kron(a, kron(b, c)).shape
        assert kron(kron(a, b), c) == kron(a, kron(b, c))


class TestMatmulStack:
    def test_matches_naive_product(self):
        rng = random.Random(6)
        for _ in range(15):
            a = random_bitmatrix(rng, rng.randint(1, 5), rng.randint(1, 5))
            b = random_bitmatrix(rng, a.cols, rng.randint(1, 5))
            assert a @ b == naive_matmul(a, b)

    def test_transpose_involution(self):
        rng = random.Random(7)
        m = random_bitmatrix(rng, 4, 6)
        assert m.transpose().transpose() == m

    def test_hstack_vstack(self):
        a = BitMatrix.from_lists([[1, 0], [0, 1]])
        b = BitMatrix.from_lists([[1, 1], [0, 0]])
        assert hstack(a, b) == BitMatrix.from_lists([[1, 0, 1, 1], [0, 1, 0, 0]])
        assert vstack(a, b) == BitMatrix.from_lists([[1, 0], [0, 1], [1, 1], [0, 0]])

    def test_shape_errors(self):
        with pytest.raises(ValidationError):
            BitMatrix.identity(2) @ BitMatrix.identity(3)
        with pytest.raises(ValidationError):
            hstack(BitMatrix.identity(2), BitMatrix.identity(3))
