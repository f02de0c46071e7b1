# coding: utf-8

# # A point that fills a gap at every limit level
#
# Points of the ambient order are rational vectors with finite support,
# indexed by codes `w.a+b`. For each limit `d` in `S` there is one extra
# point `y(d)`, which is 1 along a fixed sequence climbing to `d`. All points
# are compared lexicographically.

# In[1]:

from compact_lines.duality import fills_proper_gap
from compact_lines.errors import InfiniteTruncation
from compact_lines.kurepa import build_filtration_presentation, gap_witness_left, gap_witness_right, truncate_projection
from compact_lines.ordinals import omega_times, parse_ord
from compact_lines.points import YPoint, format_point, lex_compare, parse_point


# In[2]:

d = omega_times(3)
print("the sequence towards", d, ":", [str(d.fs(n)) for n in range(5)])

y = YPoint(d)
a = parse_point("v[w.2+1:1, w.2+2:1/2]")
b = parse_point("v[w.2+1:1, w.2+2:3]")
print(lex_compare(a, y), lex_compare(y, b))


# `a` is below `y(d)` and `b` is above it. Both use only coordinates below `d`,
# so they belong to the level `X_d`. Witnesses find members squeezed in closer.

# In[3]:

print(format_point(gap_witness_left(d, a)))
print(format_point(gap_witness_right(d, b)))


# Iterate those witnesses a hundred times on each side, starting from sampled
# members of the level. Each step is checked to
# move strictly towards `y(d)` without crossing it.

# In[4]:

S = [omega_times(k) for k in range(1, 6)]
X_d = build_filtration_presentation(omega_times(6), S, d)
verdict = fills_proper_gap(y, X_d, 100)
print(type(verdict).__name__, verdict.depth)
for name, chain in ("left", verdict.left_chain), ("right", verdict.right_chain):
    print(name, [format_point(p) for p in chain[:3]], "...", len(chain), "points")


# Cutting a point down to the coordinates below `d` works for every point
# except `y(d)` itself, whose cut would need infinitely many coordinates.

# In[5]:

print(truncate_projection(parse_point("v[1:2, w.4:7]"), d))
print(truncate_projection(YPoint(omega_times(5)), d))
try:
    truncate_projection(y, d)
except InfiniteTruncation as exc:
    print("refused:", exc)
