# coding: utf-8

# # Exact characteristic polynomials
#
# Everything here is integer arithmetic, so identities between polynomials
# are checked by equality, not by a tolerance.

# In[1]:

from kitegraph import (
    MatrixKind,
    charpoly,
    charpoly_pendant_recurrence,
    cycle,
    discriminant,
    kite,
    path,
    star,
    trace_powers,
    verify_line_identity,
    verify_subdivision_identity,
)


# In[2]:

print(charpoly(path(3)))
print(charpoly(star(3), MatrixKind.SIGNLESS_LAPLACIAN).coeffs)
print(charpoly(cycle(5), "laplacian").coeffs)


# Line graphs and subdivisions are tied to the signless Laplacian of the original graph.

# In[3]:

for g in (star(4), cycle(7), kite(5, 2)):
    print(bool(verify_line_identity(g)), bool(verify_subdivision_identity(g)))


# Deleting a pendant vertex gives a two-term recurrence.
# Vertex 0 must be pendant here; in a path it is an endpoint.

# In[4]:

g = path(6)
print(charpoly_pendant_recurrence(g, 0) == charpoly(g))


# The constant term of the signless polynomial, up to sign, is the discriminant.

# In[5]:

print(discriminant(cycle(5)), discriminant(cycle(6)), discriminant(kite(4, 3)))


# Closed walks: tr(A^k) for k = 1..5. The third entry is six times the triangle count.

# In[6]:

print(trace_powers(kite(4, 2), 5))
