# %% [markdown]
# # Graphs and morphisms
#
# Graphs are immutable values. `Graph.build` takes node labels and
# `(source, target, label)` triples; loops and parallel edges are fine.

# %%
from dporewrite import (
    Graph,
    Morphism,
    classify_morphism,
    compose,
    enumerate_morphisms,
    find_isomorphism,
    validate_graph,
    validate_morphism,
)

arrow = Graph.build({"n1": "A", "n2": "B"}, {"e1": ("n1", "n2", "x")})
print(arrow)
print("valid:", validate_graph(arrow))

# %% [markdown]
# A broken candidate is reported clause by clause rather than rejected on
# construction.

# %%
broken = Graph({"n1"}, {"e1"}, {"e1": "n9"}, {"e1": "n1"}, {"n1": "A"}, {"e1": "x"})
print(validate_graph(broken))

# %% [markdown]
# Morphisms are pairs of finite maps. Validation checks range, endpoint and
# label preservation.

# %%
copy = Graph.build({"m1": "A", "m2": "B"}, {"d1": ("m1", "m2", "x")})
f = Morphism({"n1": "m1", "n2": "m2"}, {"e1": "d1"})
print(validate_morphism(arrow, copy, f), classify_morphism(arrow, copy, f))

relabelled = Graph.build({"m1": "A", "m2": "C"}, {"d1": ("m1", "m2", "x")})
print(validate_morphism(arrow, relabelled, f))

# %% [markdown]
# Enumeration is exhaustive and ordered, which makes `find_isomorphism`
# deterministic.

# %%
two = Graph.build({"a": "A", "b": "A"})
for g in enumerate_morphisms(two, two):
    print(g, classify_morphism(two, two, g))

print(find_isomorphism(arrow, Graph.build({"p9": "A", "p3": "B"}, {"q7": ("p9", "p3", "x")})))
print(compose(f, Morphism({"n1": "n1"})))
