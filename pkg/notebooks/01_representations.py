"""
Which integers does a sum of triangular numbers represent?
==========================================================

A sum like 1*T(x) + 1*T(y) + 7*T(z), with T(x) = x(x+1)/2, is stored as a
``TriSum``.  The sweep marks every represented integer up to a bound.
"""

# %%
import numpy as np

from triuniv import TargetParity, TriSum, achievability, representation_count, triangular

s = TriSum.of(7, 1, 1)
print(s, "arity", s.arity)
print("triangular numbers:", [triangular(x) for x in range(8)])

# %%
# The represented set up to 60 as a boolean array.
seq = achievability(s, 60)
arr = seq.as_array()
print("represented:", np.flatnonzero(arr).tolist())
print("missing:    ", list(seq.missing()))
print("first missing even target:", seq.first_missing(TargetParity.EVEN))

# %%
# The count of triangular tuples agrees with the sweep on which values appear.
for n in (5, 6, 26):
    print(n, representation_count(s, n), seq[n])

# %%
# Density of represented integers for a few binary sums.
for coeffs in [(1, 1), (1, 2), (2, 3)]:
    seq = achievability(TriSum(coeffs), 100_000)
    print(coeffs, f"{seq.count() / len(seq):.3f}")
