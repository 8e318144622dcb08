"""
Escalation and the proper even universal sums
=============================================

Starting from the empty sum, each failing node with even truant t gets the
children obtained by appending c with max(sum) <= c <= t.  Sums passing the
eight-target criterion stop the branch; the ones with no even universal
one-smaller subsum are proper.
"""

# %%
from collections import Counter

from triuniv.escalation import NodeStatus, escalate, table1, table1_csv

root = escalate(5, 10**5)
for k in range(1, 6):
    layer = root.layer(k)
    print(k, len(layer), Counter(n.status.value for n in layer))

# %%
result = table1(10**5)
print(result.counts(), result.diff_report())
print(table1_csv(result)[:200])

# %%
# One level deeper: certified nodes appear but none is proper.
deep = escalate(6, 10**5)
six = [n for n in deep.layer(6) if n.status is NodeStatus.CERTIFIED]
print(len(six), "certified at arity 6;", sum(bool(n.proper) for n in six), "proper")
print("pruned chains:", [str(n.sum) for n in deep.walk() if n.pruned][:6])
