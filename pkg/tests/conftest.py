import sys
from fractions import Fraction
from pathlib import Path

import pytest
from hypothesis import strategies as st

sys.path.insert(0, str(Path(__file__).parent))

from ospbi import pbw  # noqa: E402
from ospbi.pbw import PBWElement, PBWMonomial  # noqa: E402
from ospbi.tensor import TensorElement  # noqa: E402

CRITERIA = []


def monomials(max_exp=2):
    return st.builds(
        PBWMonomial,
        st.integers(0, max_exp),
        st.integers(0, 1),
        st.integers(0, max_exp),
        st.integers(0, 1),
        st.integers(0, max_exp),
        st.integers(0, 1),
    )


coefficients = st.builds(Fraction, st.integers(-5, 5).filter(bool), st.integers(1, 3))


def pbw_elements(max_terms=3, max_exp=2):
    return st.dictionaries(monomials(max_exp), coefficients, min_size=1, max_size=max_terms).map(
        PBWElement
    )


def tensor_elements(arity, max_terms=3, max_exp=1):
    keys = st.tuples(*[monomials(max_exp)] * arity)
    return st.dictionaries(keys, coefficients, min_size=1, max_size=max_terms).map(
        lambda terms: TensorElement(arity, terms)
    )


@pytest.fixture
def record_criterion():
    def record(number, title, passed, elapsed, limit):
        status = "PASS" if passed else "FAIL"
        CRITERIA.append(f"[{status}] criterion {number:>2}: {title} ({elapsed:.2f}s, limit {limit}s)")

    return record


def pytest_terminal_summary(terminalreporter):
    if CRITERIA:
        terminalreporter.section("acceptance criteria")
        for line in CRITERIA:
            terminalreporter.write_line(line)


@pytest.fixture
def gens():
    return {g.name: pbw.generator(g) for g in pbw.Generator}
