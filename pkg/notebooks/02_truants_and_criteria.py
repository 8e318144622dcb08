"""
Truants and criterion sets
==========================

The truant of a sum is the first integer it misses; the even truant is the
first even integer it misses.  A criterion set is a short list of targets
whose representation is enough for universality of the matching kind.
"""

# %%
from triuniv import catalog, classify, even_truant, truant, verify_bound
from triuniv.core import TargetParity
from triuniv.truant import check_criterion, random_sums

for s in ["1,1", "2,2", "1,1,6", "1,1,7", "1,1,7,14", "1,1,7,14,35"]:
    print(f"{s:>12}  truant={truant(s, 10**4)}  even truant={even_truant(s, 10**4)}")

# %%
e8 = catalog.criterion("E8")
print(e8.name, e8.targets, "-", e8.provenance)
for s in ["1,1,2", "1,1,8", "1,1,7,21,21", "2,3,4,7"]:
    print(f"{s:>12}  {classify(s, e8)}")

# %%
# A bound check only ever claims what it checked.
print(verify_bound("1,1,8", TargetParity.EVEN, 10**5))

# %%
# Criterion vs. bounded check over random sums.
population = random_sums(300, max_coefficient=20, max_arity=5, seed=1)
for name in ["E8", "BK8", "kane-odd"]:
    result = check_criterion(catalog.criterion(name), population, 10**5)
    print(f"{name:>8}: {result.passing}/{result.checked} pass, {len(result.counterexamples)} counterexamples")
