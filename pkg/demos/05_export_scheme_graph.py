"""Export the scheme chart as DOT and JSON.

The DOT graph arranges the fifteen continuous families by parameter count
(the quasi-orthogonal complementary family dashed) with solid specialization
edges, dashed limits and blue spectral-transformation pairs; the JSON export
carries every catalog edge with its kind and source anchor.
"""

import json

from minusone import scheme as S

dot = S.export_graph("dot")
with open("minus_one_scheme.dot", "w") as fh:
    fh.write(dot + "\n")
print("wrote minus_one_scheme.dot (%d lines)" % len(dot.splitlines()))

payload = json.loads(S.export_graph("json"))
with open("minus_one_scheme.json", "w") as fh:
    json.dump(payload, fh, indent=2, sort_keys=True)
print("wrote minus_one_scheme.json: %d nodes, %d edges"
      % (len(payload["nodes"]), len(payload["edges"])))

print("\nrows of the chart (nodes by parameter count):")
rows = {}
for node in payload["nodes"]:
    rows.setdefault(node["row"], []).append(node["id"])
for row in sorted(rows, reverse=True):
    print("  (%d)" % row, ", ".join(sorted(rows[row])))
