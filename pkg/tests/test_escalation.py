import csv
import io
import json

import pytest

from triuniv import catalog
from triuniv.core import TargetParity, TriSum
from triuniv.escalation import (
    NodeStatus,
    child_sums,
    escalate,
    is_proper,
    proper_universal_sums,
    table1,
    table1_csv,
    tree_json,
)

BOUND = 10**4


@pytest.fixture(scope="module")
def tree5():
    return escalate(5, BOUND)


def test_root_children(tree5):
    assert tree5.sum == TriSum() and tree5.truant.value == 2
    assert child_sums(tree5) == [TriSum.of(1), TriSum.of(2)]


def test_unary_children(tree5):
    delta1 = tree5.children[0]
    assert delta1.truant.value == 2
    assert child_sums(delta1) == [TriSum.of(1, 1), TriSum.of(1, 2)]


def test_binary_layer(tree5):
    assert [str(n.sum) for n in tree5.layer(2)] == ["1,1", "1,2", "2,2", "2,3", "2,4"]
    assert all(n.status is NodeStatus.FAILING for n in tree5.layer(2))


def test_ternary_layer(tree5):
    layer = tree5.layer(3)
    assert len(layer) == 27
    certified = [n for n in layer if n.status is NodeStatus.CERTIFIED]
    assert len(certified) == 15
    assert all(n.proper for n in certified)


def test_quaternary_certified_proper(tree5):
    assert sum(1 for n in tree5.layer(4) if n.status is NodeStatus.CERTIFIED and n.proper) == 37


def test_child_ranges_respect_truants(tree5):
    for node in tree5.walk():
        for child in node.children:
            c = child.sum.largest
            assert max(node.sum.largest, 1) <= c <= node.truant.value


def test_certified_nodes_are_leaves_and_truncation_only_at_cap(tree5):
    for node in tree5.walk():
        if node.status is NodeStatus.CERTIFIED:
            assert not node.children and not node.truant.found
        if node.status is NodeStatus.TRUNCATED:
            assert node.arity == 5
        if node.status is NodeStatus.FAILING and node.arity < 5:
            assert node.truant.value in catalog.criterion("E8").targets


def test_no_duplicate_sums(tree5):
    sums = [n.sum for n in tree5.walk()]
    assert len(sums) == len(set(sums))


@pytest.mark.parametrize("s, expected", [
    ("1,1,3,4", False),
    ("1,1,6,6", True),
    ("2,2,9,10", False),
    ("1,1,8", True),
    ("2,2,5,5", True),
])
def test_is_proper(s, expected):
    assert is_proper(s, BOUND) is expected


def test_table1_reproduced():
    result = table1(BOUND)
    assert result.matches, result.diff_report()
    assert result.counts() == {3: 15, 4: 37, 5: 23}
    assert TriSum.of(1, 1, 8) in result.found[3]
    assert TriSum.of(1, 1, 3) not in result.found[3]
    fam = [s for s in result.found[4] if s.coefficients[:3] == (2, 2, 5)]
    assert fam == [TriSum.of(2, 2, 5, 5)]


def test_table1_diff_report_flags_mismatch():
    result = table1(BOUND)
    result.expected = {3: result.expected[3][1:], 4: result.expected[4] + [TriSum.of(9, 9, 9, 9)]}
    assert not result.matches
    report = result.diff_report()
    assert "arity 3 unexpected: (1,1,1)" in report
    assert "arity 4 missing: (9,9,9,9)" in report
    assert "arity 5 unexpected" in report


def test_arity_six_has_no_proper_sums():
    root = escalate(6, BOUND)
    certified = [n for n in root.layer(6) if n.status is NodeStatus.CERTIFIED]
    assert certified
    assert not any(n.proper for n in certified)
    assert proper_universal_sums(root) == catalog.table1_expected()


def test_chain_pruning_is_flagged_and_spares_arity_five():
    full = escalate(6, BOUND, prune_chains=False)
    pruned = escalate(6, BOUND)
    flagged = [n for n in pruned.walk() if n.pruned]
    assert flagged and all(n.arity >= 5 and not n.children for n in flagged)
    assert TriSum.of(1, 1, 6, 9, 9) in [n.sum for n in flagged]
    for k in range(6):
        assert [n.sum for n in full.layer(k)] == [n.sum for n in pruned.layer(k)]
    assert len(full.layer(6)) > len(pruned.layer(6))


def test_all_integer_escalation():
    root = escalate(3, BOUND, parity=TargetParity.ALL)
    assert [str(n.sum) for n in root.layer(2)] == ["1,1", "1,2"]
    universal = [str(n.sum) for n in root.layer(3) if n.status is NodeStatus.CERTIFIED]
    assert universal == [str(t) for t in catalog.liouville_triples()]


def test_tree_json_shape(tree5):
    doc = json.loads(tree_json(tree5))
    assert set(doc) == {"sum", "even_truant", "status", "proper", "children"}
    assert doc["sum"] == "" and doc["even_truant"] == "2"
    first = doc["children"][0]
    assert first["sum"] == "1" and first["status"] == "failing"


def test_table1_csv():
    rows = list(csv.reader(io.StringIO(table1_csv(table1(BOUND)))))
    assert rows[0] == ["arity", "coefficients", "proper"]
    assert len(rows) == 76
    assert rows[1] == ["3", "1,1,1", "true"]


def test_escalate_rejects_bad_arity():
    with pytest.raises(ValueError):
        escalate(0, BOUND)
