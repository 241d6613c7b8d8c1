# coding: utf-8

# # Kites
#
# A kite K(p, q) is the complete graph K_p with a path of q extra vertices
# hung off one clique vertex. This walkthrough builds a few, looks at their
# spectra and checks the facts the rest of the library leans on.

# In[1]:

from math import comb

from kitegraph import (
    clique_number,
    ds_check,
    eigenvalues,
    kite,
    line_graph,
    starlike,
    is_isomorphic,
    to_graph6,
    triangle_count,

)
from kitegraph.exact import count_eigenvalues_ge


# In[2]:

g = kite(5, 3)
print(g.n, g.m, to_graph6(g))
print(eigenvalues(g).values)


# The clique survives as the unique largest clique, and every triangle lives inside it.

# In[3]:

for p, q in [(4, 0), (4, 2), (6, 5), (9, 11)]:
    k = kite(p, q)
    print(p, q, clique_number(k), triangle_count(k), comb(p, 3))


# A kite is the line graph of a starlike tree: p-1 pendant edges and one longer arm.

# In[4]:

t = starlike(*([1] * 4 + [4]))
print(is_isomorphic(line_graph(t), kite(5, 3)))


# Only one eigenvalue reaches 2, checked with exact arithmetic rather than floats.

# In[5]:

for q in range(0, 8):
    print(q, count_eigenvalues_ge(kite(6, q), 2), round(eigenvalues(kite(6, q)).values[1], 6))


# Small kites have no adjacency-cospectral mate anywhere in the census.

# In[6]:

for p, q in [(4, 1), (5, 2), (3, 4)]:
    print((p, q), ds_check(kite(p, q)).is_ds)
