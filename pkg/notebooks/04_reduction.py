"""
Reducing to a ternary section
=============================

An even target 2n is represented iff sum(a_i y_i^2) = 16n + sum(a_i) has an
all-odd solution.  Fixing odd tail values leaves a ternary problem; for a
section with one odd coefficient a substitution removes the oddness
conditions.
"""

# %%
from triuniv import TernarySectionForm, reduction_solver, shifted_target, tail_search

form = TernarySectionForm.for_section("2,2,3,3")
print(form.substitution)
m = shifted_target("2,2,3,3", 4) - 3
x = form.solve(m)
print(m, x, form.diagonal(x), form.evaluate(x))

# %%
for n in range(6):
    print(n, shifted_target("1,1,6,6", n), tail_search("1,1,6,6", n))

# %%
# A custom substitution: x^2 + (2y + z)^2 + 8 z^2.
f118 = TernarySectionForm((1, 1, 8), ((1, 0, 0), (0, 2, 1), (0, 0, 1)))
print(all(f118.solve(16 * n + 10) is not None for n in range(300)))

# %%
print("2,2,5,6 at 16:", reduction_solver("2,2,5,6", 16), " at 18:", reduction_solver("2,2,5,6", 18))
