"""
Random unit streams
===================

On random unit intervals both online algorithms stay well inside their worst
cases. This sweeps the density of the stream and prints the color counts next
to the clique number and the two upper bounds.
"""

from fractions import Fraction

from ktcolor import check, gen_random_unit, run

n = 1000
print(f"{'density':>8} {'w':>4} {'opt':>4} {'ff':>4} {'2w-1':>5} {'kt':>4} {'3w-3':>5}")
for density in (1, 2, 5, 10, 20, 40):
    instance = gen_random_unit(n, seed=density, span=Fraction(n, density))
    kt = check(instance, run("kt", instance))
    ff = check(instance, run("ff", instance))
    opt = run("opt", instance).distinct_colors
    w = kt.omega
    print(f"{density:>8} {w:>4} {opt:>4} {ff.distinct_colors:>4} {2 * w - 1:>5} "
          f"{kt.distinct_colors:>4} {3 * w - 3:>5}")
    assert kt.ok and ff.ok

###############################################################################
# Where KT spends its colors on the densest stream: level 1 is an independent
# set, level 2 a matching, higher levels at most three colors each.

print("\nlevel sizes (densest stream):", kt.per_level_palette_sizes)
print("level-2 intervals form a matching:", kt.level2_matching)
