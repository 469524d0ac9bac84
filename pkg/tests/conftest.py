from hypothesis import strategies as st

from newtonfill.laurent import LaurentPoly, VariableList

XY = VariableList(["x", "y"])
XYZ = VariableList(["x", "y", "z"])


def polys(variables=XY, max_terms=6, spread=4, min_terms=0):
    k = len(variables)
    vec = st.tuples(*[st.integers(-spread, spread)] * k)
    return st.frozensets(vec, min_size=min_terms, max_size=max_terms).map(
        lambda s: LaurentPoly(variables, s)
    )


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split("]")[1].split(".")[0])):
            terminalreporter.write_line(line)
