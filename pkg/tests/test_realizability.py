import itertools

import pytest

from dihedra import (
    AnalyticCharacter,
    DegenerateSignatureError,
    GeometricSignature,
    InvalidArgumentError,
    NotRealizableError,
    ParityError,
    analytic_from_geosig,
    divisors,
    enumerate_realizable_geosigs,
    exists_ske_with_geosig,
    generating_vector,
    geosig_of_ske,
    irreducible_analytic_cases,
    is_analytic_representation,
    is_realizable,
    verify_ske,
)

# one witness per reachable failure reason of is_realizable
REASON_CASES = [
    ((5, 0, 2, 0, (5,)), {}, "genus.low"),
    ((5, 0, 3, 0, (5,)), {}, "genus.invalid"),
    ((3, 0, 3, 0, (3,)), {"allow_low_genus": True}, "odd.cond1.parity"),
    ((5, 0, 0, 0, (5, 5, 5)), {}, "odd.cond2.count"),
    ((15, 0, 2, 0, (3, 3)), {}, "odd.cond3.lcm"),
    ((15, 1, 0, 0, (3,)), {}, "odd.cond3.lcm"),
    ((4, 0, 1, 0, (4, 4, 4)), {}, "even0.cond1.parity"),
    ((4, 0, 0, 0, (2, 2, 4, 4)), {}, "even0.cond2.count"),
    ((8, 0, 2, 0, (4, 4)), {}, "even0.cond3.lcm"),
    ((4, 0, 4, 0, (2,)), {}, "even0.cond4.A"),
    ((4, 1, 1, 0, ()), {}, "evenP.cond1.parity"),
    ((8, 1, 0, 0, (2, 2)), {}, "evenP.cond2.lcm"),
    ((8, 1, 0, 0, (4, 4)), {}, "evenP.cond2.B"),
]


def _all_geosigs(n, max_units=3, max_periods=3):
    period_values = [m for m in divisors(n) if m >= 2]
    for gamma in range(3):
        for a in range(max_units + 1):
            for b in range(max_units + 1 if n % 2 == 0 else 1):
                for v in range(max_periods + 1):
                    for periods in itertools.combinations_with_replacement(
                        period_values, v
                    ):
                        yield GeometricSignature(n, gamma, a, b, periods)


# ---------------------------------------------------------------------------
# the existence conditions


@pytest.mark.parametrize("args,kwargs,reason", REASON_CASES)
def test_failure_reasons(args, kwargs, reason):
    res = is_realizable(GeometricSignature(*args), **kwargs)
    assert not res
    assert res.reason == reason


def test_positive_cases():
    for args in ((3, 0, 2, 0, (3, 3)), (4, 0, 1, 1, (2, 4)), (8, 1, 0, 0, (4,)),
                 (45, 0, 2, 0, (5, 9)), (6, 2, 0, 0, ())):
        res = is_realizable(GeometricSignature(*args))
        assert res and res.reason == "ok"


def test_genus_gate_runs_first():
    # conditions hold at genus 0; only the gate rejects
    gs = GeometricSignature(5, 0, 2, 0, (5,))
    assert is_realizable(gs).reason == "genus.low"
    assert is_realizable(gs, allow_low_genus=True).ok
    # with the gate skipped, the parity condition is reported instead
    bad = GeometricSignature(5, 0, 3, 0, (5,))
    assert is_realizable(bad).reason == "genus.invalid"
    assert is_realizable(bad, allow_low_genus=True).reason == "odd.cond1.parity"


def test_result_is_truthy_on_success():
    assert bool(is_realizable(GeometricSignature(3, 0, 2, 0, (3, 3))))
    assert not bool(is_realizable(GeometricSignature(5, 0, 0, 0, (5, 5, 5))))


def test_realizability_matches_ske_oracle():
    # miniature of the full oracle-equivalence gate: every verdict at genus
    # 2..6 agrees with exhaustive surface-kernel-epimorphism search
    checked = 0
    for n in (3, 4, 5):
        period_values = [m for m in divisors(n) if m >= 2]
        for gamma in range(2):
            for a in range(5):
                for b in range(5 if n % 2 == 0 else 1):
                    for v in range(5 - 2 * gamma):
                        for periods in itertools.combinations_with_replacement(
                            period_values, v
                        ):
                            gs = GeometricSignature(n, gamma, a, b, periods)
                            try:
                                if not 2 <= gs.genus() <= 6:
                                    continue
                            except DegenerateSignatureError:
                                continue
                            assert bool(is_realizable(gs)) == (
                                exists_ske_with_geosig(gs)
                            ), gs
                            checked += 1
    assert checked > 100


# ---------------------------------------------------------------------------
# explicit generating vectors


def test_generating_vector_soundness():
    total = 0
    for n in (3, 4, 5, 6, 8, 9, 12):
        for gs in enumerate_realizable_geosigs(n, 16):
            vec = generating_vector(gs)
            assert verify_ske(vec, gs.plain())
            assert geosig_of_ske(vec) == gs
            total += 1
    assert total > 500


def test_generating_vector_at_low_genus():
    for n in (3, 4, 6):
        for gs in enumerate_realizable_geosigs(n, 1, allow_low_genus=True):
            vec = generating_vector(gs, allow_low_genus=True)
            assert verify_ske(vec, gs.plain())
            assert geosig_of_ske(vec) == gs


def test_generating_vector_solves_the_torus_case():
    # gamma = 1 with no reflections: the hyperbolic pair supplies the missing
    # generator, with the rotation exponent lifted to make the tuple generate
    vec = generating_vector(GeometricSignature(4, 1, 0, 0, (2,)))
    assert str(vec) == "(s, r; r^2)"


def test_generating_vector_rejects_unrealizable():
    with pytest.raises(NotRealizableError, match="odd.cond2.count"):
        generating_vector(GeometricSignature(5, 0, 0, 0, (5, 5, 5)))
    with pytest.raises(NotRealizableError, match="genus.low"):
        generating_vector(GeometricSignature(5, 0, 2, 0, (5,)))


# ---------------------------------------------------------------------------
# analytic characters of actions


def test_analytic_failure_reasons():
    probes = [
        (AnalyticCharacter(3, (1, 0), (0,)), "dim.low"),
        (AnalyticCharacter(3, (2, 0), (0,)), "odd.cond1"),
        (AnalyticCharacter(9, (0, 0), (0, 0, 1, 0)), "odd.cond2"),
        (AnalyticCharacter(5, (0, 0), (1, 0)), "odd.cond3"),
        (analytic_from_geosig(GeometricSignature(15, 1, 0, 0, (5,))), "odd.cond4"),
        (AnalyticCharacter(4, (2, 0, 1, 0), (0,)), "even.cond1"),
        (AnalyticCharacter(4, (0, 0, 1, 1), (1,)), "even.cond2"),
        (AnalyticCharacter(8, (0, 0, 0, 0), (1, 0, 0)), "even.cond3"),
        (analytic_from_geosig(GeometricSignature(8, 1, 0, 0, (2, 2))), "even.cond6.lcm"),
        (analytic_from_geosig(GeometricSignature(8, 1, 0, 0, (4, 4))), "even.cond6.B"),
    ]
    for V, reason in probes:
        res = is_analytic_representation(V)
        assert not res and res.reason == reason, (V, res)


def test_analytic_agrees_with_realizability():
    # character-level conditions vs signature-level conditions, both ways
    checked = 0
    for n in (3, 4, 5, 6, 9, 12):
        for gs in _all_geosigs(n):
            try:
                V = analytic_from_geosig(gs)
            except (ParityError, InvalidArgumentError):
                assert not is_realizable(gs)
                continue
            assert bool(is_analytic_representation(V)) == bool(is_realizable(gs)), gs
            checked += 1
    assert checked > 900


def test_irreducible_analytic_cases():
    cases = irreducible_analytic_cases()
    assert cases == [
        (3, GeometricSignature(3, 0, 2, 0, (3, 3))),
        (4, GeometricSignature(4, 0, 1, 1, (2, 4))),
        (6, GeometricSignature(6, 0, 1, 1, (2, 3))),
    ]
    for n, gs in cases:
        assert gs.genus() == 2
        assert analytic_from_geosig(gs).dimension == 2
        assert is_realizable(gs)


# ---------------------------------------------------------------------------
# bounded enumeration


def test_enumeration_matches_brute_force():
    for n, bound in ((3, 8), (4, 8), (6, 7)):
        period_values = [m for m in divisors(n) if m >= 2]
        brute = set()
        for gamma in range(3):
            for a in range(11):
                for b in range(11 if n % 2 == 0 else 1):
                    for v in range(7):
                        for periods in itertools.combinations_with_replacement(
                            period_values, v
                        ):
                            gs = GeometricSignature(n, gamma, a, b, periods)
                            try:
                                if gs.genus() <= bound and is_realizable(gs):
                                    brute.add(gs)
                            except DegenerateSignatureError:
                                continue
        enum = enumerate_realizable_geosigs(n, bound)
        assert len(enum) == len(set(enum))
        assert set(enum) == brute


def test_enumeration_is_sorted_and_bounded():
    out = enumerate_realizable_geosigs(6, 12)
    keys = [(gs.genus(), gs.sort_key()) for gs in out]
    assert keys == sorted(keys)
    assert all(2 <= gs.genus() <= 12 for gs in out)
    low = enumerate_realizable_geosigs(6, 12, allow_low_genus=True)
    assert set(out) < set(low)
    assert all(gs.genus() >= 0 for gs in low)


def test_enumeration_validation():
    assert enumerate_realizable_geosigs(5, -1) == []
    assert enumerate_realizable_geosigs(5, 1) == []
    with pytest.raises(InvalidArgumentError):
        enumerate_realizable_geosigs(1, 10)
