"""Expressions, matrix documents, and the verification suites.

Elements parse from a small grammar (explicit '*', '^' for repeated
multiplication, order preserved), matrices load from JSON documents, and
`run_verify` drives the named identity suites that the `ncdet verify`
subcommand exposes on the command line.
"""

import json
import tempfile
from pathlib import Path

from ncdet import (
    RingSpec,
    load_matrix,
    parse_expression,
    run_verify,
    symmetric_determinant,
)

# Expression parsing is ring-directed: the same source means different
# things over different rings.
free = RingSpec.free("a", "b")
print("over free{a, b}:   a*b - b*a =", parse_expression("a*b - b*a", free))
grassmann = RingSpec.grassmann(2)
print("over grassmann(2): v1*v2 + v2*v1 =", parse_expression("v1*v2 + v2*v1", grassmann))
print("over the integers: 1 + 2*3^2 =", parse_expression("1 + 2*3^2", RingSpec.integer()))
print()

# A matrix document is a JSON header plus a grid of expressions.
document = {
    "ring": {"kind": "free", "generators": ["a", "b", "c", "d"]},
    "n": 2,
    "entries": [["a", "b"], ["c", "d"]],
}
with tempfile.TemporaryDirectory() as tmp:
    path = Path(tmp) / "generic.json"
    path.write_text(json.dumps(document))
    _, matrix = load_matrix(path)
print("loaded matrix:")
print(matrix)
print("its sdet:", symmetric_determinant(matrix))
print()

# The verification suites re-derive the identities mechanically.  The same
# reports are available from the command line, e.g.
#   ncdet verify --suite thm3_1 --seed 42
#   ncdet verify --suite all
for suite in ("prop4_1", "thm3_1", "prop3_3"):
    report = run_verify(suite, seed=42)
    print(report)
    print()
