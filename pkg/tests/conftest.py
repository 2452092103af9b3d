from hypothesis import strategies as st

from snrep.perm import Permutation

ACCEPTANCE_LINES: list[str] = []


@st.composite
def perms(draw, min_n=1, max_n=8, n=None):
    if n is None:
        n = draw(st.integers(min_n, max_n))
    return Permutation(tuple(draw(st.permutations(range(n)))))


@st.composite
def perm_pairs(draw, min_n=1, max_n=8):
    n = draw(st.integers(min_n, max_n))
    return draw(perms(n=n)), draw(perms(n=n))


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
