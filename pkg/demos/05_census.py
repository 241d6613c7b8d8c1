# coding: utf-8

# # Cospectral census
#
# All graphs on n vertices are generated up to isomorphism and grouped by
# characteristic polynomial. n = 9 takes about a minute and caches its
# graph list on disk (set KITEGRAPH_CACHE_DIR to choose where).

# In[1]:

from kitegraph import MatrixKind, cospectral_classes, ds_check, lollipop, star, enumerate_graphs


# In[2]:

print([sum(1 for _ in enumerate_graphs(n)) for n in range(1, 8)])


# The smallest cospectral pair: the star K_{1,4} and C4 plus an isolated vertex.

# In[3]:

rep = cospectral_classes(5)
for c in rep.classes:
    print(c.members, c.charpoly)


# Graphs with a mate, by matrix, for n up to 7.

# In[4]:

for kind in MatrixKind:
    print(kind.value, [sum(len(c.members) for c in cospectral_classes(n, kind).classes) for n in range(1, 8)])


# In[5]:

v = ds_check(star(4))
print(v.is_ds, v.mates)
print(ds_check(star(4), connected_only=True).is_ds)
print(ds_check(lollipop(7, 5)).is_ds)


# The whole report is plain JSON.

# In[6]:

print(cospectral_classes(5, "signless").dumps()[:300])
