# %% [markdown]
# # Applying a rule
#
# A rule is three graphs sharing identifiers: whatever sits in the interface
# is kept, the rest of the left side is deleted and the rest of the right
# side is added. Here an `x` edge `s -> t` is turned around.

# %%
from dporewrite import Graph, Rule, direct_derive, find_matches, invert_rule, comatch, find_isomorphism

rule = Rule(
    left=Graph.build({"s": "A", "t": "A"}, {"e": ("s", "t", "x")}),
    interface=Graph.build({"s": "A", "t": "A"}),
    right=Graph.build({"s": "A", "t": "A"}, {"f": ("t", "s", "x")}),
)
host = Graph.build(
    {"a": "A", "b": "A", "c": "B"},
    {"ab": ("a", "b", "x"), "bc": ("b", "c", "x"), "ca": ("c", "a", "y")},
)

matches = find_matches(rule, host)
for i, m in enumerate(matches):
    print(i, m.morphism)

# %% [markdown]
# The trace keeps every intermediate object: the deletion `D`, the tagged
# gluing `H` and the renamed result.

# %%
trace = direct_derive(rule, host, matches[0].morphism)
print("D =", trace.deletion.graph)
print("H =", trace.gluing.graph)
print("M =", trace.result)

# %% [markdown]
# Deleting a node that still has edges is refused: such matches never show
# up in `find_matches`.

# %%
drop_a = Rule(Graph.build({"n": "A"}), Graph(), Graph())
print(len(find_matches(drop_a, host)), "matches for deleting an A-node in the host")
print(len(find_matches(drop_a, Graph.build({"p": "A", "q": "B"}))), "match in an edgeless host")

# %% [markdown]
# Running the inverse rule at the co-match gives back the host up to
# isomorphism.

# %%
back = direct_derive(invert_rule(rule), trace.result, comatch(trace))
print(find_isomorphism(back.result, host))
