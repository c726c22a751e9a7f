import itertools

import pytest

from assocspec.trees import Leaf, Node


def all_bracketings(lo, hi):
    """Every bracketing of x_lo .. x_hi, built by splitting points (no trees involved)."""
    if lo == hi:
        return [Leaf(lo)]
    out = []
    for mid in range(lo, hi):
        for left in all_bracketings(lo, mid):
            for right in all_bracketings(mid + 1, hi):
                out.append(Node(left, right))
    return out


def brute_dfs_parent_arrays(n):
    """Parent arrays satisfying the interval definition directly."""
    found = []
    for tail in itertools.product(*[range(i) for i in range(1, n)]):
        parents = (-1,) + tail
        children = {i: [j for j in range(n) if parents[j] == i] for i in range(n)}

        def subtree(v):
            out = {v}
            for c in children[v]:
                out |= subtree(c)
            return out

        ok = True
        for v in range(n):
            s = subtree(v)
            if s != set(range(v, max(s) + 1)):
                ok = False
                break
        if ok:
            found.append(parents)
    return found


@pytest.fixture
def eight_leaf_term():
    return "((x1((x2x3)x4))x5)(x6(x7x8))"


def pytest_terminal_summary(terminalreporter):
    from tests import acceptance_log

    if acceptance_log.RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in acceptance_log.RESULTS:
            terminalreporter.write_line(line)
