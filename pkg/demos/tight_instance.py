"""
The tight instance: 3w - 3 colors on unit intervals
====================================================

Kierstead-Trotter splits the arrivals into levels and gives every level its
own palette. On unit intervals level 1 never needs more than one color and
level 2 never more than two, so the total is at most 1 + 2 + 3(w - 2).
``gen_theorem2(x)`` builds a stream with clique number ``x`` that fills every
palette, so the bound is reached exactly.
"""

import sys

from ktcolor import check, gen_theorem2, omega, run

x = int(sys.argv[1]) if len(sys.argv) > 1 else 6
instance = gen_theorem2(x)
result = run("kt", instance)

print(f"x = {x}: {len(instance)} unit intervals, clique number {omega(instance).size}")
print(f"KT colors: {result.distinct_colors}   (3x - 3 = {3 * x - 3})")
print(f"First-Fit: {run('ff', instance).distinct_colors}   offline: "
      f"{run('opt', instance).distinct_colors}")

###############################################################################
# Colors per level. Every level from 3 up is forced to its third color.

print("\nlevel  palette size")
for level, size in result.palette_sizes().items():
    print(f"{level:>5}  {'#' * size}")

###############################################################################
# The arrivals one by one.

print("\n  id  interval        level  color")
for v, a in zip(instance, result.assignments):
    span = f"[{v.left}, {v.right})"
    print(f"{v.id:>4}  {span:<15} {a.level:>5}  {a.color:>5}")

report = check(instance, result)
print(f"\nproper: {report.proper}, bound satisfied with equality: "
      f"{report.bounds['kt_unit_3w-3']['value'] == report.bounds['kt_unit_3w-3']['limit']}")

###############################################################################
# Drawing (needs matplotlib): one row per arrival, hue by level.

try:
    import matplotlib
    matplotlib.use("Agg")
    import matplotlib.pyplot as plt
except ImportError:
    sys.exit(0)

fig, ax = plt.subplots(figsize=(9, 0.25 * len(instance) + 1))
cmap = plt.get_cmap("tab10")
for v, a in zip(instance, result.assignments):
    ax.plot([float(v.left), float(v.right)], [v.id, v.id], lw=4,
            color=cmap((a.level - 1) % 10), solid_capstyle="butt")
    ax.text(float(v.right) + 0.05, v.id, f"{a.level}.{a.color}", va="center", fontsize=7)
ax.invert_yaxis()
ax.set_xlabel("position")
ax.set_ylabel("arrival")
ax.set_title(f"tight instance, x = {x}: labels are level.color")
fig.tight_layout()
fig.savefig(f"tight_instance_x{x}.png", dpi=120)
print(f"wrote tight_instance_x{x}.png")
