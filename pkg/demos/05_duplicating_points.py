# coding: utf-8

# # Doubling points and gluing them back
#
# Duplicating a set `P` of points replaces each `p` by a pair `m(p) < p(p)`.
# Collating glues every pair back together. On finite orders we can watch the
# round trip point by point.

# In[1]:

from compact_lines.dsl import element_to_text, parse, to_text
from compact_lines.orders import collapse, collate, duplicate, materialize


# In[2]:

e = parse("sum(fin(3), rev(fin(2)))")
points = materialize(e).labels
doubled = duplicate(e, [points[1], points[3]])
print(to_text(doubled))
print([element_to_text(x) for x in materialize(doubled)])


# Collapsing sends each half back to the point it came from.

# In[3]:

print([element_to_text(collapse(doubled, x)) for x in materialize(doubled)])
print(collate(doubled) == e)


# Doubling can be nested. The inner halves are ordinary points to the outer layer.

# In[4]:

twice = parse("dup(dup(fin(2); 0); m(0))")
print([element_to_text(x) for x in materialize(twice)])
print([element_to_text(collapse(twice, x)) for x in materialize(twice)])
