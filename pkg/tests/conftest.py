import itertools

from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from ntfideals.monomial import MonomialIdeal

settings.register_profile(
    "default", deadline=None, suppress_health_check=[HealthCheck.too_slow], derandomize=True
)
settings.load_profile("default")

PROPERTY_CASES = 200


@st.composite
def ideals(draw, n_min=1, n_max=3, max_exp=3, max_gens=4, proper=True):
    n = draw(st.integers(n_min, n_max))
    vec = st.tuples(*[st.integers(0, max_exp)] * n)
    if proper:
        vec = vec.filter(any)
    gens = draw(st.lists(vec, min_size=1, max_size=max_gens))
    return MonomialIdeal(n, gens)


@st.composite
def squarefree_ideals(draw, n_min=2, n_max=5, max_gens=5):
    n = draw(st.integers(n_min, n_max))
    vec = st.tuples(*[st.integers(0, 1)] * n).filter(any)
    gens = draw(st.lists(vec, min_size=1, max_size=max_gens))
    return MonomialIdeal(n, gens)


def monomials_in_box(top):
    """Every exponent vector in the box ``[0, top_i]``."""
    return itertools.product(*(range(t + 1) for t in top))


# One PASS/FAIL line per acceptance criterion, from tests named test_criterion_NN_*.

_CRITERIA: dict = {}


def _criterion(nodeid: str):
    if "test_acceptance.py::" not in nodeid:
        return None
    name = nodeid.split("::")[-1]
    if not name.startswith("test_criterion_"):
        return None
    return int(name.split("_")[2])


def pytest_runtest_logreport(report):
    number = _criterion(report.nodeid)
    if number is None:
        return
    if report.failed or (report.when == "call" and report.skipped):
        _CRITERIA[number] = "FAIL"
    elif report.when == "call":
        _CRITERIA.setdefault(number, "PASS")


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_CRITERIA):
        terminalreporter.write_line(f"criterion {number:2d}: {_CRITERIA[number]}")
