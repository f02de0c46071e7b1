# coding: utf-8

# # Final segments of a finite chain
#
# A finite chain `X` has a dual line `K(X)`: its final segments, ordered by
# reverse inclusion. Going back, the segments of `K(X)` that drop the bottom
# but keep the top recover `X`. Here we check both directions on small chains.

# In[1]:

from compact_lines.duality import k_embedding, k_finite, x_embedding, x_finite
from compact_lines.orders import FiniteOrder, Fin, Sum, Rev, materialize


# Start with three labelled points.

# In[2]:

X = FiniteOrder(("a", "b", "c"))
K = k_finite(X)
for segment in K:
    print(sorted(segment))


# `K` has one more point than `X`. Its bottom is all of `X` and its top is empty.

# In[3]:

print(len(K), sorted(K.bottom), sorted(K.top))


# The canonical map sends `x` to the set of segments that miss it.

# In[4]:

emb = x_embedding(X)
for x in X:
    print(x, "->", len(emb(x)), "segments")
print("increasing:", emb.is_increasing(), " onto:", len(set(emb.table)) == len(x_finite(K)))


# The other direction starts from a chain with at least one point and goes K -> X(K) -> K(X(K)).

# In[5]:

chain = materialize(Sum(Fin(2), Rev(Fin(2))))
back = k_embedding(chain)
print(len(chain), "->", len(x_finite(chain)), "->", len(k_finite(x_finite(chain))))
print("canonical map increasing:", back.is_increasing())
