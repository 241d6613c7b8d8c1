# coding: utf-8

# # Root graphs
#
# Given a graph, `root_graph_search` lists every (multi)graph whose line graph
# is isomorphic to it. Simple roots come from Krausz clique partitions. Roots
# with doubled edges (B-graphs with petals) cover generalized line graphs.

# In[1]:

from kitegraph import (
    b_graph,
    complete,
    generalized_line_graph,
    kite,
    krausz_partitions,
    path,
    root_graph_search,
    star,
)


# In[2]:

for r in root_graph_search(kite(5, 2)):
    print(r.kind, r.graph.n, r.is_simple)


# K3 is the one connected graph with two different simple roots: itself and the claw.

# In[3]:

print(sorted(r.kind for r in root_graph_search(complete(3))))
print(list(krausz_partitions(complete(3))))


# The claw is not a line graph, but it is a generalized line graph.

# In[4]:

print([r.kind for r in root_graph_search(star(3))])
print(root_graph_search(star(5)))


# A petal on an end of P2 gives a generalized line graph on three vertices.

# In[5]:

g = generalized_line_graph(path(2), [1, 0])
print(g.n, g.m)
print(b_graph(path(2), [1, 0]))
