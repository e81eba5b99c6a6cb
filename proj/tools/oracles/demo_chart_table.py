#!/usr/bin/env python3
"""Regenerates corpus/oracle/demo-level-charts.json.

The fixture cycle is the graph {y1 = x1*x2, y2 = x1} in A^2 x square, and the
tower blows up the corner {y1 = 0, y2 = 0} once. Each vertex of the resulting
pentagon carries slot functions f_j(y1, y2); the transform of the graph under
the chart scaled at c is the closure of

    u_j = f_j(x1*x2, x1) / f_j(c),

so its ideal comes from clearing denominators in u_j - that ratio. This file
derives the five charts from the blow-up definition directly (slot i of the
center is replaced by the exceptional slot, the other center slot is divided
by it) and never touches the C++ implementation, so the stored table is an
independent check of the strict-transform code path.
"""

import json
from fractions import Fraction

import sympy as sp

x1, x2, y1, y2 = sp.symbols("x1 x2 y1 y2")

C = (Fraction(1, 3), Fraction(1, 4))

# Base-square corner charts: slot for {y_k = 0} is y_k, for {y_k = 1} is 1 - y_k.
# Divisor ids: D1 = {y1=1}, D2 = {y1=0}, D3 = {y2=1}, D4 = {y2=0}, E5 exceptional.
# Blowing up the corner {D2, D4} replaces the (0,0) chart (y1, y2) by:
#   (0,0)-D2+E5: slots [D4: y2/y1, E5: y1]
#   (0,0)-D4+E5: slots [D2: y1/y2, E5: y2]
CHARTS = [
    ("(1,0)", -1, [1 - y1, y2]),
    ("(0,1)", -1, [y1, 1 - y2]),
    ("(1,1)", +1, [(1 - y1), (1 - y2)]),
    ("(0,0)-D2+E5", -1, [y2 / y1, y1]),
    ("(0,0)-D4+E5", +1, [y1 / y2, y2]),
]

# Signs: corners keep (-1)^(number of ones); the two new vertices follow the
# edge recurrence sign(v) = -sgn(g) sign(w) along D4 from (1,0) (slot order
# swaps, sgn -1, so -(-1)(-1) = -1) and along D2 from (0,1) (slot order kept,
# sgn +1, so -(+1)(-1) = +1), consistent around the exceptional edge.

GRAPH = {y1: x1 * x2, y2: x1}


def poly_str(p):
    return sp.StrPrinter({"order": "lex"}).doprint(sp.expand(p))


def chart_entry(name, sign, slots):
    gens = []
    for j, f in enumerate(slots):
        val = f.subs(C_SUBS)
        assert val != 0 and sp.simplify(val) != sp.oo, f"{name}: slot {j} hits 0/oo at c"
        # u_j * f_j(c) = f_j(graph); clear denominators on both sides
        expr = sp.together(UV[j] * val - f.subs(GRAPH))
        num, _ = sp.fraction(expr)
        num = sp.expand(num)
        # normalize the leading rational away: content * primitive over ZZ
        num = sp.Poly(num, x1, x2, *UV).primitive()[1].as_expr()
        gens.append(poly_str(num))
    return {"vertex": name, "sign": sign, "generators": gens}


UV = sp.symbols("y1 y2")  # transform lives on a fresh square with the same names
C_SUBS = {y1: sp.Rational(1, 3), y2: sp.Rational(1, 4)}

entries = []
for name, sign, slots in CHARTS:
    entries.append(chart_entry(name, sign, slots))
    # sanity: substituting the graph parametrization back into the generators
    # must vanish identically
    for gen, f in zip(entries[-1]["generators"], slots):
        g = sp.sympify(gen, locals={"x1": x1, "x2": x2, "y1": UV[0], "y2": UV[1]})
        back = g.subs({UV[j]: slots[j].subs(GRAPH) / slots[j].subs(C_SUBS) for j in range(2)})
        assert sp.simplify(back) == 0, f"{name}: {gen} does not vanish on the transform"

doc = {
    "id": "demo-level-charts",
    "kind": "table",
    "note": (
        "Per-chart transforms of the graph cycle {y1 = x1*x2, y2 = x1} under the "
        "corner tower at c = (1/3, 1/4), derived by substituting the graph "
        "parametrization into each chart's slot functions and clearing "
        "denominators; regenerate with tools/oracles/demo_chart_table.py."
    ),
    "payload": {
        "tower": {"cube_dim": 2, "steps": [[2, 4]]},
        "point": ["1/3", "1/4"],
        "cycle": "graph-demo",
        "charts": entries,
    },
}

with open("corpus/oracle/demo-level-charts.json", "w") as fh:
    json.dump(doc, fh, indent=2)
    fh.write("\n")
print(json.dumps(entries, indent=2))
