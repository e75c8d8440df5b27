"""
Feeding a stream by hand
========================

The colorers are online: ``add`` colors one arrival and never revisits it.
``level_of`` previews the level the next arrival would receive.
"""

from fractions import Fraction as F

from ktcolor import Interval, KiersteadTrotter, omega_containing

stream = [(0, 1), (F(1, 2), F(3, 2)), (F(1, 4), F(5, 4)), (F(3, 4), F(7, 4)),
          (F(1, 8), F(9, 8)), (2, 3)]

kt = KiersteadTrotter()
placed = []
for i, (left, right) in enumerate(stream):
    v = Interval(i, left, right)
    preview = kt.level_of(v)
    a = kt.add(v)
    assert a.level == preview
    clique = omega_containing(placed, v)
    placed.append(v)
    print(f"{str(v):<22} clique through it: {clique.size}  -> level {a.level}, color {a.color}")

###############################################################################
# The result object groups the same assignments.

result = kt.result()
print("\ndistinct colors:", result.distinct_colors)
print("per level:", result.palette_sizes())
