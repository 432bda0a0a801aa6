"""Combinatorial elliptic-bridge chains driven by progressions.

Each bridge raises genus and degree by one and replaces the vanishing
sequence at the marked point by its upward displacement. The series stays
refined exactly when the old sequence is stable under downward displacement.
"""

from __future__ import annotations

import json
import logging
from dataclasses import dataclass, field, replace

from .displacement import seq_displace
from .engine import ValidSequence
from .errors import CertificateInvalid, PreconditionError
from .partition import VanishingSequence, from_vanishing
from .progressions import EMPTY, Progression, Residue, Singleton

logger = logging.getLogger(__name__)

MAX_PLACES = 2


@dataclass(frozen=True)
class BridgeRecord:
    """One bridge: its progression, the kind of bridge and how many places moved."""
    lam: Progression
    kind: str
    places: int

    @property
    def flagged(self) -> bool:
        return self.places > MAX_PLACES

    def to_dict(self) -> dict:
        return {
            "lambda": self.lam.to_text(),
            "kind": self.kind,
            "places": self.places,
            "flagged": self.flagged,
        }


@dataclass(frozen=True)
class ChainState:
    genus: int
    degree: int
    a: VanishingSequence
    refined_so_far: bool = True
    trace: tuple[BridgeRecord, ...] = field(default_factory=tuple)

    def to_dict(self) -> dict:
        partition, r = from_vanishing(self.a)
        return {
            "schema": 1,
            "genus": self.genus,
            "degree": self.degree,
            "r": r,
            "vanishing": list(self.a.entries),
            "partition": partition.to_text(),
            "refined": self.refined_so_far,
            "trace": [record.to_dict() for record in self.trace],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)


def bridge_kind(lam: Progression) -> str:
    """torsion(d) for a residue class mod d, non-torsion for a point, generic for nothing."""
    if isinstance(lam, Residue):
        return f"torsion({lam.modulus})"
    if isinstance(lam, Singleton):
        return "non-torsion"
    return "generic"


def chain_step(state: ChainState, lam: Progression) -> ChainState:
    raised = seq_displace(state.a, lam, "up")
    stable = seq_displace(state.a, lam, "down") == state.a
    places = sum(1 for old, new in zip(state.a.entries, raised.entries) if old != new)
    record = BridgeRecord(lam=lam, kind=bridge_kind(lam), places=places)
    if record.flagged:
        logger.warning("bridge %s displaces %d places", lam, places)
    return replace(
        state,
        genus=state.genus + 1,
        degree=state.degree + 1,
        a=raised,
        refined_so_far=state.refined_so_far and stable,
        trace=state.trace + (record,),
    )


def start_state(r: int) -> ChainState:
    """Genus 0, degree r, vanishing sequence (0, 1, ..., r): an unramified point on P^1."""
    if r < 0:
        raise PreconditionError(f"r must be nonnegative, got {r}")
    return ChainState(genus=0, degree=r, a=VanishingSequence(tuple(range(r + 1))))


def realize_certificate(cert: ValidSequence, g_final: int) -> ChainState:
    """Replay a certificate as a chain of bridges ending in genus g_final.

    Runs in rank r = g_final; step lambda becomes lambda + (r + 1) so that the
    sequence displacement mirrors the partition displacement through
    a_i = i + P_{r-i}. Extra genus is added with generic bridges.

    Args:
        cert: Valid sequence to replay
        g_final: Genus of the final chain; at least len(cert)

    Returns:
        ChainState whose vanishing sequence corresponds to cert.final

    Raises:
        PreconditionError: If g_final < len(cert)
        CertificateInvalid: If a bridge is not refined or the chain ends elsewhere
    """
    if g_final < len(cert):
        raise PreconditionError(
            f"genus {g_final} is too small for a certificate of {len(cert)} steps"
        )
    r = g_final
    state = start_state(r)
    for index, step in enumerate(cert.steps):
        state = chain_step(state, step.lam.shift(r + 1))
        if not state.refined_so_far:
            raise CertificateInvalid(f"step {index}: bridge along {step.lam} is not refined")
    while state.genus < g_final:
        state = chain_step(state, EMPTY)

    partition, _ = from_vanishing(state.a)
    if partition != cert.final:
        raise CertificateInvalid(f"chain ends at {partition}, certificate ends at {cert.final}")
    logger.debug("realized %s at genus %d", partition, g_final)
    return state
