from hypothesis import strategies as st

from mintrails.dag import build_dag


@st.composite
def dags(draw, min_n=1, max_n=6):
    n = draw(st.integers(min_n, max_n))
    order = draw(st.permutations(range(n)))
    pairs = [(order[i], order[j]) for i in range(n) for j in range(i + 1, n)]
    keep = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return build_dag(n, [p for p, k in zip(pairs, keep) if k])


@st.composite
def dag_queries(draw, min_n=2, max_n=6):
    """A DAG plus distinct x, y and a Z disjoint from both."""
    d = draw(dags(max(min_n, 2), max_n))
    x, y = draw(st.permutations(range(d.n)))[:2]
    rest = [v for v in range(d.n) if v not in (x, y)]
    z = draw(st.lists(st.sampled_from(rest), unique=True)) if rest else []
    return d, x, y, tuple(sorted(z))
