"""Tests for the partition module."""

import pytest
from hypothesis import given, settings
import hypothesis.strategies as st

from displacement_calculus.errors import DomainError
from displacement_calculus.partition import (
    EMPTY,
    Partition,
    VanishingSequence,
    conjugate,
    contains,
    corners,
    from_vanishing,
    iter_partitions,
    normalize,
    to_vanishing,
)


partitions = st.lists(st.integers(min_value=0, max_value=9), max_size=8).map(normalize)


class TestPartition:
    """Tests for the Partition value type."""

    def test_weight_and_length(self):
        """Test weight and length of a partition."""
        p = Partition((8, 7, 1, 1, 1))

        assert p.weight == 18
        assert p.length == 5
        assert p.part(0) == 8
        assert p.part(7) == 0

    def test_rejects_increasing_parts(self):
        """Test that parts must be weakly decreasing."""
        with pytest.raises(DomainError):
            Partition((1, 2))

    def test_rejects_zero_part(self):
        """Test that stored parts are positive."""
        with pytest.raises(DomainError):
            Partition((2, 0))

    def test_negative_row_index(self):
        """Test that negative rows cannot be read."""
        with pytest.raises(DomainError):
            Partition((1,)).part(-1)

    def test_text_encoding(self):
        """Test canonical text, with '0' for the empty partition."""
        assert Partition((8, 7, 1, 1, 1)).to_text() == "8,7,1,1,1"
        assert EMPTY.to_text() == "0"
        assert Partition.from_text("1,7,8,1,1") == Partition((8, 7, 1, 1, 1))
        assert Partition.from_text("0") == EMPTY

    def test_contains(self):
        """Test componentwise containment, also through the in operator."""
        assert contains(Partition((4, 4)), Partition((3, 1)))
        assert not contains(Partition((4, 4)), Partition((1, 1, 1)))
        assert Partition((2, 1)) in Partition((3, 2))
        assert EMPTY in Partition((1,))


class TestNormalize:
    """Tests for normalize function."""

    def test_sorts(self):
        """Test sorting into weakly decreasing order."""
        assert normalize([1, 7, 8, 1, 1]) == Partition((8, 7, 1, 1, 1))

    def test_empty(self):
        """Test the empty list."""
        assert normalize([]) == EMPTY

    def test_strips_zeros(self):
        """Test zero stripping."""
        assert normalize([2, 0, 2]) == Partition((2, 2))

    def test_negative_entry(self):
        """Test that negative entries are rejected."""
        with pytest.raises(DomainError):
            normalize([3, -1])


class TestConjugate:
    """Tests for conjugate function."""

    def test_figure_partition(self):
        """Test transposing (8,7,1,1,1)."""
        assert conjugate(Partition((8, 7, 1, 1, 1))) == Partition((5, 2, 2, 2, 2, 2, 2, 1))

    def test_empty(self):
        """Test the empty partition."""
        assert conjugate(EMPTY) == EMPTY

    def test_row_to_column(self):
        """Test a single row becomes a single column."""
        assert conjugate(Partition((3,))) == Partition((1, 1, 1))

    @given(partitions)
    def test_involution(self, p):
        """Test conjugation is an involution preserving weight."""
        assert conjugate(conjugate(p)) == p
        assert conjugate(p).weight == p.weight


class TestCorners:
    """Tests for corners function."""

    def test_figure_partition(self):
        """Test corners of (8,7,1,1,1)."""
        c = corners(Partition((8, 7, 1, 1, 1)))

        assert c.addable == ((0, 8), (1, 6), (2, -1), (5, -5))
        assert c.removable == ((0, 7), (1, 5), (4, -4))

    def test_empty(self):
        """Test the empty partition has one addable corner."""
        c = corners(EMPTY)

        assert c.addable == ((0, 0),)
        assert c.removable == ()

    def test_square(self):
        """Test corners of (2,2)."""
        c = corners(Partition((2, 2)))

        assert c.addable_diagonals == (2, -2)
        assert c.removable_diagonals == (0,)

    @given(partitions)
    def test_diagonals_strictly_decrease(self, p):
        """Test addable and removable diagonals are distinct and decreasing."""
        c = corners(p)
        for values in (c.addable_diagonals, c.removable_diagonals):
            assert all(x > y for x, y in zip(values, values[1:]))

    @given(partitions)
    def test_corner_duality(self, p):
        """Test corners of the conjugate carry negated diagonals."""
        c = corners(p)
        dual = corners(conjugate(p))

        assert sorted(dual.addable_diagonals) == sorted(-v for v in c.addable_diagonals)
        assert sorted(dual.removable_diagonals) == sorted(-v for v in c.removable_diagonals)

    @given(partitions)
    def test_corners_give_partitions(self, p):
        """Test that turning any single corner keeps a valid partition."""
        c = corners(p)
        values = list(p.parts) + [0]
        for i, _ in c.addable:
            grown = values.copy()
            grown[i] += 1
            assert normalize(grown).weight == p.weight + 1
            assert list(normalize(grown).parts) == [v for v in grown if v]
        for i, _ in c.removable:
            shrunk = values.copy()
            shrunk[i] -= 1
            assert list(normalize(shrunk).parts) == [v for v in shrunk if v]


class TestVanishing:
    """Tests for the partition/vanishing-sequence bijection."""

    def test_to_vanishing(self):
        """Test a_i = i + P_{r-i}."""
        assert to_vanishing(Partition((2, 2, 2)), 4).entries == (0, 1, 4, 5, 6)
        assert to_vanishing(EMPTY, 2).entries == (0, 1, 2)
        assert to_vanishing(Partition((3, 1)), 1).entries == (1, 4)

    def test_from_vanishing(self):
        """Test the inverse map."""
        assert from_vanishing(VanishingSequence((0, 1, 4, 5, 6))) == (Partition((2, 2, 2)), 4)
        assert from_vanishing(VanishingSequence((0, 1, 2))) == (EMPTY, 2)
        assert from_vanishing(VanishingSequence((1, 4))) == (Partition((3, 1)), 1)

    def test_r_too_small(self):
        """Test that r + 1 must cover every part."""
        with pytest.raises(DomainError):
            to_vanishing(Partition((1, 1, 1)), 1)

    def test_ramification_and_weight(self):
        """Test alpha_i = a_i - i and its sum."""
        a = VanishingSequence((1, 2, 5))

        assert a.ramification == (1, 1, 3)
        assert a.weight == 5
        assert a.r == 2

    def test_rejects_non_increasing(self):
        """Test strict monotonicity of vanishing sequences."""
        with pytest.raises(DomainError):
            VanishingSequence((0, 2, 2))
        with pytest.raises(DomainError):
            VanishingSequence(())

    @given(partitions, st.integers(min_value=0, max_value=4))
    def test_round_trip(self, p, extra):
        """Test from_vanishing inverts to_vanishing and weights agree."""
        r = max(p.length - 1, 0) + extra
        a = to_vanishing(p, r)

        assert from_vanishing(a) == (p, r)
        assert a.weight == p.weight


class TestIterPartitions:
    """Tests for iter_partitions function."""

    def test_counts(self):
        """Test the number of partitions of small n."""
        counts = [sum(1 for _ in iter_partitions(n)) for n in range(9)]

        assert counts == [1, 1, 2, 3, 5, 7, 11, 15, 22]

    def test_max_part(self):
        """Test bounding the largest part."""
        assert list(iter_partitions(4, max_part=2)) == [
            Partition((2, 2)), Partition((2, 1, 1)), Partition((1, 1, 1, 1)),
        ]
