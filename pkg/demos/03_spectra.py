# coding: utf-8

# # Floating-point spectra, and when to trust them
#
# `eigenvalues` uses numpy and reports an error bound. For sharp questions
# such as whether the spectral radius is at most 2 there are exact certificates.

# In[1]:

import numpy as np

from kitegraph import (
    certify_lambda_min_ge,
    certify_rho_le,
    check_interlacing,
    cycle,
    eigenvalues,
    kite,
    path,
    second_largest,
    spectral_radius,
)
from kitegraph.spectra import path_eigenvalues


# In[2]:

rep = eigenvalues(path(8))
print(np.max(np.abs(np.array(rep.values) - path_eigenvalues(8))), rep.err_bound)


# A cycle has radius exactly 2, so float comparisons sit right on the edge.

# In[3]:

print(spectral_radius(cycle(9)))
print(certify_rho_le(cycle(9), 2).verdict, certify_rho_le(cycle(9), 2, strict=True).verdict)


# Kites never reach -2 from above.

# In[4]:

print(certify_lambda_min_ge(kite(7, 4), -2, strict=True))


# Cauchy interlacing for an induced subgraph.

# In[5]:

g = kite(6, 3)
keep = [0, 1, 2, 6, 7]
res = check_interlacing(g, g.induced(keep), keep)
print(res.holds)


# In[6]:

for p in range(4, 9):
    print(p, max(second_largest(kite(p, q)) for q in range(21)))
