import random

import pytest


def apply_graph(obj, op, e):
    """Apply one ``+``/``-`` graph update to a maintainer or an estimator."""
    if hasattr(obj, "insert_edge"):
        (obj.insert_edge if op == "+" else obj.delete_edge)(*e)
    else:
        (obj.insert if op == "+" else obj.delete)(*e)


class HyperDriver:
    """Maps endpoint tuples in generated streams onto hyperedge handles."""

    def __init__(self, target):
        self.target = target
        self.handles = {}

    def apply(self, op, e):
        key = frozenset(e)
        if op == "+":
            self.handles.setdefault(key, []).append(self.target.insert_hyperedge(e))
        else:
            self.target.delete_hyperedge(self.handles[key].pop(0))


@pytest.fixture
def rng():
    return random.Random(12345)
