import hypothesis.strategies as st
from hypothesis import settings

from edgerank.multigraph import Graph

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

weights = st.floats(min_value=0.0, max_value=5.0, allow_nan=False, allow_infinity=False)


@st.composite
def graphs(draw, max_nodes=6, max_edges=10, min_nodes=1):
    """Labeled multigraphs with self-loops and parallel edges."""
    n = draw(st.integers(min_nodes, max_nodes))
    nodes = {f"v{i}": draw(weights) for i in range(n)}
    m = draw(st.integers(0, max_edges))
    ends = st.integers(0, n - 1)
    edges = {f"e{j:02d}": (f"v{draw(ends)}", f"v{draw(ends)}") for j in range(m)}
    return Graph(nodes, edges)


def cycle(n, weight=1.0):
    nodes = {f"v{i}": weight for i in range(n)}
    edges = {f"e{i + 1}": (f"v{i}", f"v{(i + 1) % n}") for i in range(n)}
    return Graph(nodes, edges)


def single_edge(x=1.0):
    return Graph({"u": x, "v": 0.0}, {"e": ("u", "v")})


# one line per acceptance criterion, printed after the test session
ACCEPTANCE: dict[int, str] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE):
        terminalreporter.write_line(ACCEPTANCE[n])
