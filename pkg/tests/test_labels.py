from hypothesis import given, settings
from hypothesis import strategies as st

from dyndsg.labels import DegreeTable, Entry, LabelList

ops = st.lists(st.tuples(st.sampled_from(["push", "remove", "up", "down"]), st.integers(0, 50)), max_size=120)


@settings(max_examples=200, deadline=None)
@given(ops)
def test_label_list_matches_model(program):
    lst = LabelList()
    key = 0
    live = {}
    for op, x in program:
        if op == "push":
            e = Entry(len(live) + x * 1000)
            lst.push(e, key)
            live[id(e)] = (e, key)
        elif op == "remove" and live:
            k = sorted(live)[x % len(live)]
            e, _ = live.pop(k)
            lst.remove(e)
        elif op == "up":
            lst.key_up(key)
            key += 1
        elif op == "down" and key > 0:
            key -= 1
            lst.key_down(key)
        assert lst.check(key) == []
        labels = [lab for _, lab in live.values()]
        assert len(lst) == len(labels)
        if labels:
            assert lst.min_entry().label == min(labels)
            assert lst.max_entry().label == max(labels)
        else:
            assert lst.min_entry() is None and lst.max_entry() is None
        above = [lab for lab in labels if lab >= key]
        assert lst.cursor_label() == (min(above) if above else None)
        for e, lab in live.values():
            assert e.label == lab


def test_groups_are_fifo():
    lst = LabelList()
    a, b, c = Entry("a"), Entry("b"), Entry("c")
    for e in (a, b, c):
        lst.push(e, 3)
    assert [e.owner for e in lst.entries()] == ["a", "b", "c"]
    assert lst.min_entry() is a and lst.max_entry() is a
    lst.remove(a)
    lst.push(a, 3)
    assert [e.owner for e in lst.entries()] == ["b", "c", "a"]


@settings(max_examples=100, deadline=None)
@given(st.integers(1, 8), st.lists(st.tuples(st.booleans(), st.integers(0, 7)), max_size=200))
def test_degree_table_tracks_max(n, program):
    t = DegreeTable(n)
    for up, v in program:
        v %= n
        if up:
            t.inc(v)
        elif t.indeg[v] > 0:
            t.dec(v)
        assert t.check() == []
        assert t.max_deg == max(t.indeg)
