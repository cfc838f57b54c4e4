import random

import pytest
from hypothesis import strategies as st

from rank1stems.groups import GroupId, Irreducible, VirtualRep


def irreducible_pool(group, max_index=12):
    g = GroupId(group)
    if g.is_torus:
        return [Irreducible("z", n) for n in range(1, max_index + 1)]
    if g == GroupId.O2:
        return [Irreducible("delta")] + [Irreducible("sigma", n) for n in range(1, max_index + 1)]
    if g == GroupId.PIN2:
        return (
            [Irreducible("delta")]
            + [Irreducible("sigma", n) for n in range(1, max_index + 1)]
            + [Irreducible("h", m) for m in range(1, max_index + 1, 2)]
        )
    if g == GroupId.SO3:
        return [Irreducible("W", 2 * i + 1) for i in range(1, max_index + 1)]
    return [Irreducible("W", 2 * i + 1) for i in range(1, max_index + 1)] + [
        Irreducible("V", 2 * i) for i in range(1, max_index + 1)
    ]


def random_rep(rng: random.Random, group, max_terms=5, max_index=12, force=None) -> VirtualRep:
    """At most max_terms irreducibles, indices <= max_index, multiplicities in [-3, 3]."""
    pool = irreducible_pool(group, max_index)
    picks = rng.sample(pool, rng.randint(0, max_terms))
    if force is not None and force not in picks:
        picks = picks[: max_terms - 1] + [force]
    return VirtualRep(GroupId(group), tuple((irr, rng.randint(-3, 3)) for irr in picks))


@st.composite
def reps(draw, group, max_terms=5, max_index=12):
    pool = irreducible_pool(group, max_index)
    picks = draw(st.lists(st.sampled_from(pool), max_size=max_terms, unique=True))
    mults = [draw(st.integers(-3, 3)) for _ in picks]
    return VirtualRep(GroupId(group), tuple(zip(picks, mults)))


@pytest.fixture
def rng():
    return random.Random(20240601)


# -- acceptance summary ------------------------------------------------------------

_ACCEPTANCE = []


def pytest_runtest_logreport(report):
    if report.when == "call" and "test_acceptance.py" in report.nodeid:
        _ACCEPTANCE.append((report.nodeid.split("::")[-1], report.outcome))


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for name, outcome in _ACCEPTANCE:
        terminalreporter.write_line(f"{'PASS' if outcome == 'passed' else 'FAIL'}  {name}")
