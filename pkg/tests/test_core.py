from fractions import Fraction

import pytest

from dyndsg import Config, ConfigError, GraphError, InternalError, WorstCaseMaintainer, new_structure
from dyndsg.invariants import audit_structure


def test_new_structure_empty():
    s = new_structure(3)
    assert s.max_deg == 0 and list(s.arcs()) == []
    assert audit_structure(s) == []


def test_single_vertex_structure():
    s = new_structure(1)
    assert s.max_deg == 0
    with pytest.raises(GraphError):
        s.insert(0, 0)


@pytest.mark.parametrize("kw", [{"alpha": 0}, {"alpha": -1}, {"eps": 0}, {"eps": 1}, {"budget_c": 0}])
def test_invalid_config_rejected(kw):
    with pytest.raises(ConfigError):
        Config(3, **kw)


def test_config_mismatch_rejected():
    with pytest.raises(ConfigError):
        new_structure(4, Config(3))


def test_flip_single_arc():
    s = new_structure(3)
    s.insert(1, 2)
    (arc,) = s.arcs()
    assert (arc.tail, arc.head) == (2, 1)
    s.flip(arc)
    assert s.orientation() == {(1, 2): 1}
    assert (s.in_degree(1), s.in_degree(2)) == (0, 1)
    assert audit_structure(s) == []


def test_flip_moves_one_copy():
    s = new_structure(2)
    for _ in range(3):
        s._add_copy(0, 1)
    arc = s.arc(0, 1)
    s.flip(arc)
    assert s.orientation() == {(0, 1): 2, (1, 0): 1}
    assert len(s.records) == 1
    assert audit_structure(s) == []


def test_flip_empty_direction_errors():
    s = new_structure(2)
    s.insert(0, 1)
    empty = s.arc(0, 1) if s.arc(0, 1).count == 0 else s.arc(1, 0)
    with pytest.raises(InternalError):
        s.flip(empty)
    with pytest.raises(InternalError):
        s.set_arc_labels(empty)


def test_min_in_label_arc():
    s = new_structure(5)
    assert s.min_in_label_arc(0) is None
    # in-arcs of 0 labelled 1, 2, 3 at the head as they arrive
    for t in (1, 2, 3):
        s._add_copy(t, 0)
    arc, lab = s.min_in_label_arc(0)
    assert lab == 1 and arc.tail == 1
    # relabel the two lowest to the current degree 3
    s.set_arc_labels(s.arc(1, 0))
    s.set_arc_labels(s.arc(2, 0))
    arc, lab = s.min_in_label_arc(0)
    assert lab == 3 and arc.tail == 3
    assert audit_structure(s) == []


def test_max_out_label_arc():
    s = new_structure(4)
    assert s.max_out_label_arc(0) is None
    s._add_copy(3, 0)
    s._add_copy(0, 1)  # tail label 1
    for _ in range(3):
        s._add_copy(3, 0)
    s._add_copy(0, 2)  # tail label 4
    arc, lab = s.max_out_label_arc(0)
    assert (arc.head, lab) == (2, 4)
    s.flip(arc)
    arc, lab = s.max_out_label_arc(0)
    assert (arc.head, lab) == (1, 1)
    assert audit_structure(s) == []


def test_set_arc_labels_copies_degrees_and_is_idempotent():
    s = new_structure(3)
    for _ in range(3):
        s._add_copy(2, 0)
    s._add_copy(0, 1)
    s._add_copy(0, 1)
    arc = s.arc(0, 1)
    s.set_arc_labels(arc)
    assert (arc.lab_tail, arc.lab_head) == (3, 2)
    before = (arc.lab_tail, arc.lab_head)
    s.set_arc_labels(arc)
    assert (arc.lab_tail, arc.lab_head) == before
    # both copies share the one label pair
    assert arc.count == 2 and len(s.records) == 2
    assert audit_structure(s) == []


def test_insert_tie_goes_to_smaller_id():
    s = WorstCaseMaintainer(Config(2))
    s.insert(1, 0)
    arc = s.arc(1, 0)
    assert arc.count == 1 and (s.in_degree(0), s.in_degree(1)) == (1, 0)
    assert (arc.lab_head, arc.lab_tail) == (1, 0)


@pytest.mark.parametrize("bad", [(0, 3), (-1, 0), (0, 0)])
def test_insert_rejects_bad_vertices(bad):
    s = WorstCaseMaintainer(Config(3))
    with pytest.raises(GraphError):
        s.insert(*bad)


def test_delete_absent_edge():
    s = WorstCaseMaintainer(Config(3))
    with pytest.raises(GraphError):
        s.delete(0, 1)
    s.insert(0, 1)
    s.delete(1, 0)
    with pytest.raises(GraphError):
        s.delete(0, 1)
    assert s.max_deg == 0 and not s.records


def test_delete_prefers_heavier_head():
    s = new_structure(3)
    s._add_copy(0, 1)
    s._add_copy(1, 0)
    s._add_copy(2, 1)
    s.delete(0, 1)
    assert s.orientation() == {(1, 0): 1, (2, 1): 1}


def test_truncated_in_degree():
    s = WorstCaseMaintainer(Config(2), threshold=10)
    for target, want in ((3, 3), (15, 10), (10, 10)):
        while s.in_degree(0) < target:
            s._add_copy(1, 0)
        while s.in_degree(0) > target:
            s._remove_copy(s.arc(1, 0))
        assert s.truncated_in_degree(0) == want


def test_counters_count_every_iteration():
    s = WorstCaseMaintainer(Config(6, alpha=Fraction(1, 8)))
    for i in range(1, 6):
        for _ in range(3):
            s.insert(0, i)
    c = s.counters
    assert c.arcs_processed == c.flips + c.label_resets
