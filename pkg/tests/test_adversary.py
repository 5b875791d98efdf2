import math

import pytest
from hypothesis import given, strategies as st

from suir.adversary import (
    Custom,
    CrashPlan,
    FSync,
    Impossibility,
    MinimalDelta,
    SchedulerSpec,
    SSyncFair,
    TruncationSpec,
    UniformRandom,
    fsync_activation,
    impossibility_adversary,
    ssync_fair_activation,
    symmetry_preserving_truncation,
    truncate_move,
)
from suir.geometry import DomainError, Vec2

BOTH = frozenset({0, 1})


class TestActivation:
    def test_fsync(self):
        assert fsync_activation(BOTH) == BOTH
        assert fsync_activation({1}) == {1}
        with pytest.raises(DomainError):
            fsync_activation(set())

    @given(st.integers(0, 10**6), st.integers(1, 8), st.integers(0, 2**31))
    def test_ssync_deterministic_nonempty(self, rnd, k, seed):
        a = ssync_fair_activation(rnd, k, seed, BOTH)
        assert a and a <= BOTH
        assert a == ssync_fair_activation(rnd, k, seed, BOTH)

    @given(st.integers(1, 8), st.integers(0, 2**31))
    def test_ssync_window(self, k, seed):
        sched = SSyncFair(k, seed)
        idle = {0: 0, 1: 0}
        for t in range(300):
            active = sched.activate(t, BOTH, None, None)
            for r in (0, 1):
                idle[r] = 0 if r in active else idle[r] + 1
                assert idle[r] <= k - 1

    def test_ssync_k1_is_fsync(self):
        sched = SSyncFair(1, 3)
        assert all(sched.activate(t, BOTH, None, None) == BOTH for t in range(50))

    def test_ssync_only_correct(self):
        assert ssync_fair_activation(4, 2, 0, {1}) == {1}
        with pytest.raises(DomainError):
            ssync_fair_activation(0, 0, 0, BOTH)

    def test_ssync_varies(self):
        draws = {ssync_fair_activation(t, 100, 9, BOTH) for t in range(64)}
        assert len(draws) == 3


class TestImpossibility:
    def test_r_stays(self):
        assert impossibility_adversary((0.0, 0.0), (0.0, 1.0)) == {0}

    def test_r_moves_elsewhere(self):
        assert impossibility_adversary((0.5, 0.0), (0.0, 1.0)) == {0}

    def test_r_joins_and_other_moves(self):
        assert impossibility_adversary((1.0, 0.7), (0.0, 1.0)) == {0, 1}

    def test_r_joins_other_stays(self):
        assert impossibility_adversary((1.0, 1.0), (0.0, 1.0)) == {1}

    def test_designated_robot(self):
        assert impossibility_adversary((0.0, 1.0), (0.0, 1.0), designated=1) == {1}

    def test_degrades_with_one_correct(self):
        assert Impossibility().activate(0, frozenset({1}), (0.0, 1.0), {1: 0.0}) == {1}


class TestTruncation:
    def test_rigid_reaches(self):
        assert truncate_move(0.0, 5.0, 1.0) == 5.0
        assert truncate_move(Vec2(0, 0), Vec2(3, 4), 1.0) == Vec2(3, 4)

    def test_minimal_delta(self):
        assert truncate_move(0.0, 5.0, 1.0, "minimal_delta") == 1.0
        stop = truncate_move(Vec2(0, 0), Vec2(3, 4), 1.0, "minimal_delta")
        assert abs(stop - Vec2(0.6, 0.8)) < 1e-15

    def test_short_moves_are_rigid(self):
        assert truncate_move(0.0, 0.5, 1.0, "minimal_delta") == 0.5
        assert truncate_move(2.0, 2.0, 1.0, "minimal_delta") == 2.0

    def test_delta_domain(self):
        with pytest.raises(DomainError):
            truncate_move(0.0, 1.0, 0.0)

    @given(st.floats(-100, 100), st.floats(-100, 100), st.floats(1e-3, 10),
           st.integers(0, 1000), st.sampled_from(["rigid", "minimal_delta", "uniform_random"]))
    def test_travel_bounds(self, a, b, delta, seed, kind):
        strategy = TruncationSpec(kind, seed).build()
        stop = strategy.stop(a, b, delta)
        length = abs(b - a)
        travelled = abs(stop - a)
        slack = 1e-12 * max(1.0, abs(a), abs(b))  # rounding of stop - a
        assert travelled <= length + slack
        assert travelled >= min(delta, length) - slack
        assert abs(stop - a) + abs(b - stop) == pytest.approx(length, abs=1e-9)

    def test_uniform_is_seeded(self):
        a = [UniformRandom(5).stop(0.0, 10.0, 0.1) for _ in range(3)]
        s = UniformRandom(5)
        b = [s.stop(0.0, 10.0, 0.1) for _ in range(3)]
        assert a[0] == b[0] and len(set(b)) == 3

    def test_custom(self):
        c = Custom([0.5, (0.25, 1.0)])
        assert c.stop(0.0, 8.0, 1.0, round=0) == 4.0
        assert c.stop(0.0, 8.0, 1.0, round=1, robot=0) == 2.0
        assert c.stop(0.0, 8.0, 1.0, round=1, robot=1) == 8.0
        assert c.stop(0.0, 8.0, 1.0, round=7) == 8.0
        assert c.stop(0.0, 8.0, 1.0, round=0) == 4.0
        assert Custom([0.01]).stop(0.0, 8.0, 1.0, round=0) == 1.0  # clamped to delta

    def test_realize_leaves_others(self):
        assert MinimalDelta().realize({1: (0.0, 3.0)}, 1.0, 0) == {1: 1.0}


class TestSymmetric:
    def apex_moves(self, d=2.0, y=0.0):
        apex = Vec2(d / 2, y + d * math.sqrt(3) / 2)
        return (Vec2(0, y), apex), (Vec2(d, y), apex)

    def test_equal_travel_and_height(self):
        (s0, _), (s1, _) = moves = self.apex_moves()
        p0, p1 = symmetry_preserving_truncation(moves, 0.5)
        assert p0.y == p1.y
        assert abs(p0 - s0) == pytest.approx(0.5)
        assert abs(p1 - s1) == pytest.approx(0.5)
        # 60 degree geometry: the gap closes by exactly delta
        assert abs(p1 - p0) == pytest.approx(1.5, abs=1e-15)

    def test_reaches_apex_when_close(self):
        moves = self.apex_moves(0.3)
        p0, p1 = symmetry_preserving_truncation(moves, 0.5)
        assert p0 == p1 == moves[0][1]

    def test_rejects_asymmetric(self):
        (s0, a), (s1, _) = self.apex_moves()
        with pytest.raises(DomainError):
            symmetry_preserving_truncation(((s0, a), (s1 + Vec2(0, 1), a)), 0.5)
        with pytest.raises(DomainError):
            symmetry_preserving_truncation(((s0, a), (s1, a + Vec2(0.1, 0))), 0.5)
        with pytest.raises(DomainError):
            symmetry_preserving_truncation(((s0, -a), (s1, -a)), 0.5)
        with pytest.raises(DomainError):
            symmetry_preserving_truncation(((s0, a), (s1, a)), 0.0)

    def test_strategy_falls_back(self):
        strat = TruncationSpec("symmetry_preserving").build()
        out = strat.realize({0: (0.0, 4.0)}, 1.0, 0)
        assert out == {0: 1.0}


class TestSpecs:
    def test_scheduler_problems(self):
        assert SchedulerSpec("bogus").problems()
        assert SchedulerSpec("ssync_fair", 0).problems()
        assert not SchedulerSpec("ssync_fair", 3).problems()
        assert isinstance(SchedulerSpec().build(), FSync)

    def test_crash_plan(self):
        plan = CrashPlan(1, 3)
        assert not plan.crashed(1, 2) and plan.crashed(1, 3) and plan.crashed(1, 9)
        assert not plan.crashed(0, 9)
        assert CrashPlan(2).problems() and CrashPlan(0, -1).problems()

    def test_truncation_problems(self):
        assert TruncationSpec("bogus").problems()
        assert TruncationSpec("custom").problems()
        assert TruncationSpec().rigid and not TruncationSpec("minimal_delta").rigid
        assert TruncationSpec("custom", fractions=((0.5, 1.0),)).to_dict() == {
            "type": "custom", "fractions": [[0.5, 1.0]]}
