import random

import pytest

from hf2.gf2 import CohomologyReducer, Span, columns_to_bitstrings, nullspace, rank


class TestSpan:
    def test_rank_known(self):
        # rows 101, 011, 110 over F_2: third = first + second
        assert rank([0b101, 0b011, 0b110]) == 2

    def test_express(self):
        s = Span()
        s.add(0b101)
        s.add(0b011)
        assert s.express(0b110) == 0b11  # sum of both generators
        assert s.express(0b001) is None

    def test_contains(self):
        s = Span()
        s.add(0b1)
        assert s.contains(0b1) and not s.contains(0b10)


class TestNullspace:
    def test_zero_map(self):
        assert sorted(nullspace([0, 0])) == [0b01, 0b10]

    def test_identityish(self):
        assert nullspace([0b1, 0b10]) == []

    def test_rank_nullity(self):
        rng = random.Random(7)
        for _ in range(50):
            cols = [rng.getrandbits(8) for _ in range(rng.randrange(1, 12))]
            assert rank(cols) + len(nullspace(cols)) == len(cols)

    def test_kernel_vectors_annihilate(self):
        rng = random.Random(11)
        for _ in range(30):
            cols = [rng.getrandbits(6) for _ in range(10)]
            for kv in nullspace(cols):
                img = 0
                for i in range(10):
                    if (kv >> i) & 1:
                        img ^= cols[i]
                assert img == 0


class TestReducer:
    def test_dims(self):
        # d_in: image spanned by 110; d_out: kernel = {000, 110, 011, 101}
        red = CohomologyReducer(3, [0b110], [0b1, 0b1, 0b1])
        assert red.h_dim == 1

    def test_express_mod_boundary(self):
        red = CohomologyReducer(2, [0b11], [0, 0])
        assert red.h_dim == 1
        # the two basis vectors agree modulo the boundary 11
        assert red.express(0b01) == red.express(0b10)

    def test_rejects_non_cocycle(self):
        red = CohomologyReducer(2, [], [0b1, 0])
        with pytest.raises(ValueError):
            red.express(0b01)

    def test_shape_check(self):
        with pytest.raises(ValueError):
            CohomologyReducer(3, [], [0])


def test_bitstrings():
    assert columns_to_bitstrings([0b101], 3) == ["101"]
    assert columns_to_bitstrings([0], 2) == ["00"]
