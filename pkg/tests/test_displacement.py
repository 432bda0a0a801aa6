"""Tests for the displacement module."""

import pytest
from hypothesis import given, settings
import hypothesis.strategies as st

from displacement_calculus.displacement import (
    displace,
    divisors_from_two,
    linkage,
    linked_successors,
    seq_displace,
    successor_parts,
)
from displacement_calculus.engine import linked_by_definition
from displacement_calculus.errors import DomainError
from displacement_calculus.partition import (
    EMPTY,
    Partition,
    VanishingSequence,
    conjugate,
    contains,
    normalize,
    to_vanishing,
)
from displacement_calculus.progressions import EMPTY as NOTHING
from displacement_calculus.progressions import Residue, Singleton


partitions = st.lists(st.integers(min_value=0, max_value=7), max_size=7).map(normalize)
progressions = st.one_of(
    st.just(NOTHING),
    st.builds(Singleton, st.integers(min_value=-9, max_value=9)),
    st.builds(Residue, st.integers(min_value=-9, max_value=9), st.integers(min_value=2, max_value=7)),
)
FIGURE = Partition((8, 7, 1, 1, 1))


class TestDisplace:
    """Tests for displace function."""

    def test_figure_up(self):
        """Test turning the corners of (8,7,1,1,1) out along 2 mod 3."""
        assert displace(FIGURE, Residue(2, 3), "up") == Partition((9, 7, 2, 1, 1))

    def test_figure_down(self):
        """Test turning the corners of (8,7,1,1,1) in along 2 mod 3."""
        assert displace(FIGURE, Residue(2, 3), "down") == Partition((8, 6, 1, 1))

    def test_empty_progression(self):
        """Test the empty progression changes nothing."""
        assert displace(FIGURE, NOTHING, "up") == FIGURE
        assert displace(FIGURE, NOTHING, "down") == FIGURE

    def test_new_bottom_row(self):
        """Test the first all-zero row is addable."""
        assert displace(Partition((2,)), Singleton(-1), "up") == Partition((2, 1))
        assert displace(EMPTY, Singleton(0), "up") == Partition((1,))

    def test_bad_direction(self):
        """Test an unknown direction is rejected."""
        with pytest.raises(DomainError):
            displace(FIGURE, NOTHING, "sideways")

    @given(partitions, progressions)
    def test_stability(self, p, lam):
        """Test displacing twice in the same direction changes nothing more."""
        up = displace(p, lam, "up")
        down = displace(p, lam, "down")

        assert displace(up, lam, "up") == up
        assert displace(down, lam, "down") == down

    @given(partitions, progressions)
    def test_monotone(self, p, lam):
        """Test down(P) <= P <= up(P) with at most one box per row."""
        up = displace(p, lam, "up")
        down = displace(p, lam, "down")

        assert contains(up, p) and contains(p, down)
        assert up.length <= p.length + 1
        assert all(up.part(i) - p.part(i) <= 1 for i in range(up.length))

    @given(partitions, progressions)
    def test_between_has_same_displacements(self, p, lam):
        """Test any partition between down(P) and up(P) displaces like P."""
        up = displace(p, lam, "up")
        down = displace(p, lam, "down")

        for q in (up, down):
            assert displace(q, lam, "up") == up
            assert displace(q, lam, "down") == down

    @given(partitions, progressions)
    def test_conjugation_equivariance(self, p, lam):
        """Test conjugation commutes with displacement once lambda is negated."""
        for direction in ("up", "down"):
            assert conjugate(displace(p, lam, direction)) == displace(conjugate(p), lam.negate(), direction)

    @settings(max_examples=1000)
    @given(partitions, progressions, st.integers(min_value=0, max_value=4))
    def test_sequence_compatibility(self, p, lam, extra):
        """Test partition and sequence displacement agree after shifting by r + 1."""
        r = p.length + extra
        a = to_vanishing(p, r)
        shifted = lam.shift(r + 1)

        for direction in ("up", "down"):
            expected = to_vanishing(displace(p, lam, direction), r)
            assert seq_displace(a, shifted, direction) == expected


class TestSeqDisplace:
    """Tests for seq_displace function."""

    def test_up(self):
        """Test raising the top entry."""
        assert seq_displace(VanishingSequence((0, 2)), Singleton(3), "up").entries == (0, 3)

    def test_down(self):
        """Test lowering the top entry."""
        assert seq_displace(VanishingSequence((0, 3)), Singleton(3), "down").entries == (0, 2)

    def test_blocked(self):
        """Test an entry cannot run into its neighbour."""
        assert seq_displace(VanishingSequence((1, 2)), Singleton(2), "up").entries == (1, 2)

    def test_never_below_zero(self):
        """Test a zero vanishing order is never lowered."""
        a = VanishingSequence((0, 1, 3))

        assert seq_displace(a, Residue(0, 2), "down") == a


class TestLinkage:
    """Tests for linkage function."""

    def test_two_linked(self):
        """Test (1) -> (2,1) is 2-linked by 1 mod 2."""
        witness = linkage(Partition((1,)), Partition((2, 1)))

        assert witness.k == 2
        assert witness.lam == Residue(1, 2)
        assert witness.added_rows == (0, 1)

    def test_larger_modulus(self):
        """Test (2,2) -> (3,2,1) needs modulus 4."""
        witness = linkage(Partition((2, 2)), Partition((3, 2, 1)))

        assert witness.k == 2
        assert witness.lam == Residue(2, 4)

    def test_not_linked(self):
        """Test (2,1) -> (3,2) has no witness."""
        assert linkage(Partition((2, 1)), Partition((3, 2))) is None

    def test_single_box(self):
        """Test a single box is 1-linked by its diagonal."""
        witness = linkage(EMPTY, Partition((1,)))

        assert witness.k == 1
        assert witness.lam == Singleton(0)

    def test_weight_gaps(self):
        """Test pairs with weight gap outside {1, 2} are not linked."""
        assert linkage(FIGURE, FIGURE) is None
        assert linkage(EMPTY, Partition((2, 1))) is None
        assert linkage(Partition((1,)), Partition((3,))) is None

    def test_not_contained(self):
        """Test non-nested pairs are not linked."""
        assert linkage(Partition((2,)), Partition((1, 1, 1))) is None

    @given(partitions, progressions)
    def test_witness_is_sound(self, p, lam):
        """Test every reported witness reproduces the pair."""
        up = displace(p, lam, "up")
        witness = linkage(p, up)
        if witness is None:
            return
        assert displace(p, witness.lam, "up") == up
        assert displace(up, witness.lam, "down") == p
        assert witness.k == up.weight - p.weight == len(witness.added_rows)


class TestLinkedSuccessors:
    """Tests for linked_successors function."""

    def test_from_empty(self):
        """Test the only successor of the empty partition."""
        found = linked_successors(EMPTY, Partition((2, 2)))

        assert [(q, w.k, w.lam) for q, w in found] == [(Partition((1,)), 1, Singleton(0))]

    def test_from_one_box(self):
        """Test successors of (1) inside (2,2)."""
        found = linked_successors(Partition((1,)), Partition((2, 2)))

        assert [(q.parts, w.k) for q, w in found] == [((1, 1), 1), ((2,), 1), ((2, 1), 2)]
        assert found[2][1].lam == Residue(1, 2)

    def test_no_two_step(self):
        """Test (2,1) inside (2,2,2) has only single-box successors."""
        found = linked_successors(Partition((2, 1)), Partition((2, 2, 2)))

        assert [(q.parts, w.k) for q, w in found] == [((2, 1, 1), 1), ((2, 2), 1)]

    def test_outside_container(self):
        """Test the start must lie inside the container."""
        with pytest.raises(DomainError):
            linked_successors(Partition((3,)), Partition((2, 2)))

    @given(partitions)
    def test_witnesses_verify(self, q):
        """Test every successor is linked by its witness."""
        container = Partition(tuple(x + 2 for x in q.parts) + (2, 2))
        for upper, witness in linked_successors(q, container):
            assert displace(q, witness.lam, "up") == upper
            assert displace(upper, witness.lam, "down") == q

    @given(partitions)
    def test_matches_definition(self, q):
        """Test the divisor scan finds exactly the pairs linked by definition."""
        top = q.part(0)
        container = (top + 2,) * (q.length + 2)
        scanned = {(upper, k) for upper, _, k, _ in successor_parts(q.parts, container)}
        direct = {(upper, k) for upper, _, k in linked_by_definition(q.parts)}

        assert scanned == direct


class TestDivisors:
    """Tests for divisors_from_two function."""

    def test_divisors(self):
        """Test divisors of 12 from 2 upward."""
        assert divisors_from_two(12) == (2, 3, 4, 6, 12)
        assert divisors_from_two(1) == ()
