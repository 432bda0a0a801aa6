"""Tests for the difficulty engine."""

import pytest

from displacement_calculus.config import EngineConfig
from displacement_calculus.engine import (
    Step,
    ValidSequence,
    conjugate_sequence,
    difficulty,
    difficulty_oracle,
    verify_sequence,
    weight_lower_bound,
)
from displacement_calculus.errors import NotLinked, ResourceError, WrongEndpoint, WrongWeightJump
from displacement_calculus.partition import EMPTY, Partition, conjugate, iter_partitions
from displacement_calculus.progressions import Residue, Singleton


def partitions_up_to(n):
    for weight in range(n + 1):
        yield from iter_partitions(weight)


def two_one_certificate():
    return ValidSequence((
        Step(Partition((1,)), Singleton(0), 1),
        Step(Partition((2, 1)), Residue(1, 2), 2),
    ))


class TestDifficulty:
    """Tests for difficulty function."""

    def test_empty(self):
        """Test the empty partition costs nothing."""
        result = difficulty(EMPTY)

        assert result.delta == 0
        assert len(result.certificate) == 0

    def test_two_one(self):
        """Test (2,1) needs one 1-linked step."""
        result = difficulty(Partition((2, 1)))

        assert result.delta == 1
        assert result.certificate == two_one_certificate()

    @pytest.mark.parametrize("parts,expected", [
        ((1,), 1),
        ((2,), 2),
        ((2, 2), 2),
        ((2, 2, 2), 4),
        ((3, 3), 4),
        ((3, 3, 3), 5),
        ((4, 4, 4), 6),
        ((4, 4, 4, 4), 4),
    ])
    def test_box_values(self, parts, expected):
        """Test values from the published table."""
        assert difficulty(Partition(parts)).delta == expected

    def test_seven_square(self):
        """Test delta((7^7)) = 7."""
        assert difficulty(Partition((7,) * 7)).delta == 7

    def test_certificate_verifies(self):
        """Test the certificate costs exactly delta and ends at the target."""
        target = Partition((4, 4, 4))
        result = difficulty(target)

        assert verify_sequence(result.certificate, target) == result.delta
        assert result.certificate.final == target
        assert result.explored > 0

    def test_deterministic(self):
        """Test repeated runs produce the same certificate."""
        target = Partition((3, 3, 2))

        assert difficulty(target).certificate == difficulty(target).certificate

    def test_workers_agree(self):
        """Test parallel layer expansion gives identical output."""
        target = Partition((4, 4, 4))
        serial = difficulty(target, workers=1)
        parallel = difficulty(target, workers=2)

        assert parallel.delta == serial.delta
        assert parallel.certificate == serial.certificate

    def test_weight_limit(self):
        """Test the engine refuses targets over its limit."""
        with pytest.raises(ResourceError):
            difficulty(Partition((2, 2)), config=EngineConfig(weight_limit=3))

    def test_invariants(self):
        """Test parity, lower bound and certificate cost for every |P| <= 10."""
        for p in partitions_up_to(10):
            result = difficulty(p)
            assert result.delta % 2 == p.weight % 2
            assert result.delta >= weight_lower_bound(p)
            assert result.delta <= p.weight
            assert verify_sequence(result.certificate, p) == result.delta

    def test_duality_small(self):
        """Test delta(P) = delta(P*) for every |P| <= 10."""
        for p in partitions_up_to(10):
            assert difficulty(p).delta == difficulty(conjugate(p)).delta

    @pytest.mark.slow
    def test_duality(self):
        """Test delta(P) = delta(P*) for every |P| <= 14."""
        for p in partitions_up_to(14):
            assert difficulty(p).delta == difficulty(conjugate(p)).delta


class TestOracle:
    """Tests for difficulty_oracle function."""

    def test_values(self):
        """Test the oracle on small targets."""
        assert difficulty_oracle(Partition((1,))) == 1
        assert difficulty_oracle(Partition((2, 2))) == 2
        assert difficulty_oracle(Partition((2, 2, 2))) == 4
        assert difficulty_oracle(EMPTY) == 0

    def test_limit(self):
        """Test the oracle refuses large targets."""
        with pytest.raises(ResourceError):
            difficulty_oracle(Partition((7, 6)))

    def test_matches_engine(self):
        """Test the oracle agrees with the engine for every |P| <= 8."""
        checked = 0
        for p in partitions_up_to(8):
            assert difficulty_oracle(p) == difficulty(p).delta
            checked += 1
        assert checked == 67


class TestVerifySequence:
    """Tests for verify_sequence function."""

    def test_valid(self):
        """Test a hand-built certificate for (2,1)."""
        assert verify_sequence(two_one_certificate(), Partition((2, 1))) == 1

    def test_empty(self):
        """Test the empty sequence reaches the empty partition."""
        assert verify_sequence(ValidSequence(), EMPTY) == 0

    def test_not_linked(self):
        """Test two boxes cannot be added from nothing."""
        seq = ValidSequence((Step(Partition((2,)), Singleton(0), 2),))

        with pytest.raises(NotLinked) as exc:
            verify_sequence(seq)
        assert exc.value.step == 0

    def test_wrong_weight_jump(self):
        """Test a recorded k that disagrees with the weight change."""
        seq = ValidSequence((Step(Partition((1,)), Singleton(0), 2),))

        with pytest.raises(WrongWeightJump) as exc:
            verify_sequence(seq)
        assert exc.value.step == 0

    def test_wrong_endpoint(self):
        """Test a sequence ending somewhere else."""
        with pytest.raises(WrongEndpoint):
            verify_sequence(two_one_certificate(), Partition((3,)))

    def test_conjugate_sequence(self):
        """Test mirroring a certificate reaches the conjugate target at equal cost."""
        target = Partition((4, 2, 1))
        result = difficulty(target)
        mirrored = conjugate_sequence(result.certificate)

        assert verify_sequence(mirrored, conjugate(target)) == result.delta

    def test_rows(self):
        """Test the row encoding of a certificate."""
        assert two_one_certificate().to_rows() == [["1", "{0}", 1], ["2,1", "1 mod 2", 2]]


class TestLowerBound:
    """Tests for weight_lower_bound function."""

    def test_values(self):
        """Test max(2 P_0, 2 P*_0) - |P|."""
        assert weight_lower_bound(EMPTY) == 0
        assert weight_lower_bound(Partition((5,))) == 5
        assert weight_lower_bound(Partition((2, 2))) == 0
        assert weight_lower_bound(Partition((1, 1, 1))) == 3

    def test_never_negative(self):
        """Test wide boxes give 0 rather than a negative bound."""
        assert weight_lower_bound(Partition((4, 4, 4))) == 0
        assert weight_lower_bound(Partition((7,) * 7)) == 0
