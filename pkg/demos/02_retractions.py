# coding: utf-8

# # Restricting a chain and splitting the dual map
#
# When `Y` sits inside `X`, intersecting with `Y` sends final segments of `X`
# onto final segments of `Y`. We build a right inverse `g` of that map one
# fiber at a time and use it to project the hull of `Y` back onto `Y`.

# In[1]:

from compact_lines.duality import dual_inclusion, projection_from_right_inverse, right_inverse_from_gaps
from compact_lines.errors import GapObstruction
from compact_lines.orders import CharClass, FiniteOrder


# In[2]:

X = FiniteOrder.chain(7)
Y = {1, 4, 5}
f = dual_inclusion(X, Y)
print("f onto:", f.is_surjective(), " increasing:", f.is_increasing())


# In a finite chain every point is isolated, so every fiber splits.

# In[3]:

g = right_inverse_from_gaps(f)
print("f o g is the identity:", f.compose(g).is_identity())

p = projection_from_right_inverse(X, Y, g)
for x in p.domain:
    print(x, "->", p(x))


# Every point of the hull lands on a member of `Y`. The members themselves stay put.
#
# Pretend every point is a limit from both sides. Then a fiber with two
# points has no safe choice, and the construction reports which fiber blocked it.

# In[4]:

def all_limits(line, point, side):
    return CharClass.COUNTABLE_LIMIT

try:
    right_inverse_from_gaps(f, all_limits)
except GapObstruction as exc:
    print("obstruction at fiber", [sorted(s) for s in exc.fiber])
