# %% [markdown]
# # Checking pushouts
#
# `is_pushout` glues the span canonically and looks for a commuting
# isomorphism onto the given corner. The cocone oracle tries every target
# graph within a size bound instead; the two should always agree.

# %%
from dporewrite import (
    Graph,
    Morphism,
    OracleBound,
    Square,
    check_universal_property_oracle,
    derivation_squares,
    direct_derive,
    find_matches,
    glue,
    gluing_square,
    identity,
    is_pushout,
    Rule,
)

K = Graph.build({"k1": "A"})
R = Graph.build({"k1": "A", "r2": "B"}, {"e": ("k1", "r2", "x")})
D = Graph.build({"d1": "A"})
d = Morphism({"k1": "d1"})
sq = gluing_square(K, D, R, identity(K), d, glue(K, D, R, identity(K), d))
print(is_pushout(sq), check_universal_property_oracle(sq, OracleBound(3, 3)))

# %% [markdown]
# An extra node in the corner keeps the square commuting but breaks the
# universal property; the oracle returns the offending cocone.

# %%
padded = Graph.build({**sq.D.node_items(), "extra": "A"}, sq.D.edge_items())
bad = Square(sq.A, sq.B, sq.C, padded, sq.b, sq.c, sq.f, sq.g)
res = check_universal_property_oracle(bad, OracleBound(3, 3))
print(is_pushout(bad), res.holds, res.mediators, res.counterexample.H)

# %% [markdown]
# Both squares of a derivation are pushouts.

# %%
rule = Rule(Graph.build({"n": "A"}), Graph.build({"n": "A"}), Graph.build({"n": "A"}, {"l": ("n", "n", "x")}))
host = Graph.build({"p": "A", "q": "B"}, {"e": ("p", "q", "y")})
trace = direct_derive(rule, host, find_matches(rule, host)[0].morphism)
print([is_pushout(s) for s in derivation_squares(trace)])
