"""Simulator and verifier for two-robot rendezvous that tolerates one crash."""

from .adversary import CrashPlan, SchedulerSpec, TruncationSpec
from .engine import Scenario, ScenarioError, Simulation, Trace, run
from .geometry import AgreementMode, DomainError, Similarity, Similarity1D, Vec2
from .protocols import PROTOCOL_IDS, get_protocol

__all__ = [
    "AgreementMode", "CrashPlan", "DomainError", "PROTOCOL_IDS", "Scenario", "ScenarioError",
    "SchedulerSpec", "Similarity", "Similarity1D", "Simulation", "Trace", "TruncationSpec",
    "Vec2", "get_protocol", "run",
]
