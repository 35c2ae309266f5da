# %% [markdown]
# # Documents and the command line
#
# Graphs, rules and squares travel as JSON with one item per line, sorted
# by id, so the same value always gives the same bytes.

# %%
import subprocess
import sys
import tempfile
from pathlib import Path

from dporewrite import Graph, Rule
from dporewrite.fileformat import export_dot, parse_graph, serialize_graph, serialize_rule

g = Graph.build({"n1": "A", "n2": "A"}, {"e1": ("n1", "n2", "x"), "e2": ("n1", "n2", "x"), "l": ("n2", "n2", "y")})
text = serialize_graph(g)
print(text)
assert parse_graph(text) == g
print(export_dot(g))

# %% [markdown]
# The same files drive the `dporewrite` command.

# %%
work = Path(tempfile.mkdtemp())
(work / "host.json").write_text(text)
a = Graph.build({"n": "A"})
(work / "rule.json").write_text(serialize_rule(Rule(a, a, Graph.build({"n": "A"}, {"z": ("n", "n", "z")}))))

for argv in (
    ["match", "--rule", "rule.json", "--host", "host.json"],
    ["apply", "--rule", "rule.json", "--host", "host.json", "--all", "--out", "out.json"],
    ["iso", "out.0.json", "out.1.json"],
):
    proc = subprocess.run([sys.executable, "-m", "dporewrite", *argv], cwd=work, capture_output=True, text=True)
    print("$ dporewrite", " ".join(argv), f"(exit {proc.returncode})")
    print(proc.stdout)
