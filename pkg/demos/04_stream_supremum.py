# coding: utf-8

# # The limit of a stream whose coordinates settle
#
# A monotone stream of vectors has a limit when each coordinate stops moving
# after some known index. The caller supplies those indices as a certificate;
# the library checks them on a window of terms and reads the limit off.

# In[1]:

from fractions import Fraction

from compact_lines.errors import StabilizationViolation
from compact_lines.kurepa import stab_from_table, sup_stable_stream
from compact_lines.ordinals import OrdCode
from compact_lines.points import format_point, vec


# The target vector is built first. The stream reveals it one coordinate at a time.
# Its values are positive, so each new coordinate pushes the stream up.

# In[2]:

target = vec({"0": Fraction(1, 3), "w.1": 2, "w.1+4": 5, "w.3": Fraction(7, 2)})
keys = [k for k, _ in target.entries]

def stream(i):
    return vec({k: v for k, v in target.entries if k in keys[: i + 1]})

for i in range(5):
    print(i, format_point(stream(i)))


# Coordinates below `keys[j] + 1` are final from index `j` on.

# In[3]:

stab = stab_from_table({k.succ(): j for j, k in enumerate(keys)})
g = sup_stable_stream(stream, stab, probe_n=200)
print(format_point(g), g == target)


# A certificate that lies is caught on the window it covers.

# In[4]:

def drifting(i):
    return vec({0: 1, OrdCode(0, 1): i})

try:
    sup_stable_stream(drifting, lambda gamma: 0, probe_n=50)
except StabilizationViolation as exc:
    print(exc)
