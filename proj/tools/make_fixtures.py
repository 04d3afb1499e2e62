#!/usr/bin/env python3
"""Regenerates fixtures/*.json, the worked problem files used by tests and docs."""
import json
import math
import pathlib

OUT = pathlib.Path(__file__).resolve().parent.parent / "fixtures"


def names(n):
    return [f"v{i}" for i in range(1, n + 1)]


def k33_edges():
    return [[f"v{a}", f"v{b}"] for a in (1, 2, 3) for b in (4, 5, 6)]


def complete_edges(n):
    return [[f"v{a}", f"v{b}"] for a in range(1, n + 1) for b in range(a + 1, n + 1)]


def problem(vertices, edges, dim, group, type_, coords=None, seed=7, trials=20):
    out = {
        "graph": {"vertices": vertices, "edges": edges},
        "dimension": dim,
        "group": group,
        "type": type_,
    }
    if coords is not None:
        out["coordinates"] = coords
    out["seed"] = seed
    out["trials"] = trials
    return out


CS_Y_AXIS = {"schoenflies": "Cs", "params": {"mirror_angle": math.pi / 2}}
C2 = {"schoenflies": "C2"}
CS_3D = {"schoenflies": "Cs"}

GTP_EDGES = [["v1", "v2"], ["v1", "v3"], ["v2", "v3"], ["v4", "v5"], ["v4", "v6"], ["v5", "v6"],
             ["v1", "v4"], ["v2", "v5"], ["v3", "v6"]]
GBP_EDGES = [["v1", "v2"], ["v1", "v3"], ["v2", "v3"], ["v1", "v4"], ["v2", "v4"], ["v3", "v4"],
             ["v1", "v5"], ["v2", "v5"], ["v3", "v5"]]
GT_EDGES = [["v1", "v2"], ["v1", "v3"], ["v2", "v3"], ["v1", "v4"], ["v2", "v4"]]


def neg(points):
    return [[-x for x in p] for p in points]


def c9_coords():
    pts = []
    for i in range(9):
        a = 2 * math.pi * (i % 3) / 3
        pts.append([math.cos(a), math.sin(a)])
    return pts


def c4_gadget():
    cycle = [["v1", "v2"], ["v2", "v3"], ["v3", "v4"], ["v1", "v4"]]
    ears = [[f"v{i}", f"v{4 + i}"] for i in range(1, 5)] + [[f"v{i % 4 + 1}", f"v{4 + i}"] for i in range(1, 5)]
    p, sp, q, sq = [0.8, 0.5], [0.8, -0.5], [-0.3, 0.9], [-0.3, -0.9]
    coords = [p, sp, p, sp, q, sq, q, sq]
    return problem(names(8), cycle + ears, 2, {"schoenflies": "Cs"},
                   {"s": "(v1 v2 v3 v4)(v5 v6 v7 v8)"}, coords)


half = [[0.9, 0.2], [-0.3, 0.8], [-0.5, -0.6]]
gtp_a = [[0.1, 1.0], [1.2, 0.3], [-0.9, 0.4], [-0.1, -1.0], [0.9, -0.4], [-1.2, -0.3]]
gbp_base = [[0.2, 0.7, 0.0], [0.2, -0.7, 0.0], [-0.9, 0.0, 0.1]]

FIXTURES = {
    "k33_phi_a": problem(names(6), k33_edges(), 2, CS_Y_AXIS, {"s": "(v1 v2)(v5 v6)"},
                         [[-1, 1], [1, 1], [0, 2], [0, -1], [-1.5, 0], [1.5, 0]]),
    "k33_phi_b": problem(names(6), k33_edges(), 2, CS_Y_AXIS, {"s": "(v1 v4)(v2 v5)(v3 v6)"},
                         [[-1, 1], [-0.5, -0.7], [-1.2, -0.2], [1, 1], [0.5, -0.7], [1.2, -0.2]]),
    "gtp_psi_a": problem(names(6), GTP_EDGES, 2, C2, {"C2": "(v1 v4)(v2 v6)(v3 v5)"}, gtp_a),
    "gtp_psi_b": problem(names(6), GTP_EDGES, 2, C2, {"C2": "(v1 v4)(v2 v5)(v3 v6)"}, half + neg(half)),
    "k4_upsilon_a": problem(names(4), complete_edges(4), 3, CS_3D, {"s": "(v1 v2)"},
                            [[0.3, 0.6, 0.2], [0.3, -0.6, 0.2], [-0.8, 0.0, 0.5], [0.1, 0.0, -0.9]]),
    "k4_upsilon_b": problem(names(4), complete_edges(4), 3, CS_3D, {"s": "id"},
                            [[0.3, 0.0, 0.2], [-0.5, 0.0, 0.7], [-0.8, 0.0, -0.5], [0.6, 0.0, -0.9]]),
    "gbp_xi_a": problem(names(5), GBP_EDGES, 3, CS_3D, {"s": "(v1 v2)"},
                        gbp_base + [[0.1, 0.0, 1.0], [0.0, 0.0, -1.1]]),
    "gbp_xi_b": problem(names(5), GBP_EDGES, 3, CS_3D, {"s": "(v1 v2)(v4 v5)"},
                        gbp_base + [[0.1, 0.5, 0.9], [0.1, -0.5, 0.9]]),
    "k2_c2_identity": problem(names(2), complete_edges(2), 2, C2, {"C2": "id"}),
    "k2_c2_swap": problem(names(2), complete_edges(2), 2, C2, {"C2": "(v1 v2)"}, [[0.6, 0.2], [-0.6, -0.2]]),
    "k2_c3": problem(names(2), complete_edges(2), 2, {"schoenflies": "C3"}, {"C3": "(v1 v2)", "C3^2": "id"}),
    "k3_c2_swap": problem(names(3), complete_edges(3), 2, C2, {"C2": "(v1 v2)"},
                          [[0.8, 0.3], [-0.8, -0.3], [0.0, 0.0]]),
    "gt_c2": problem(names(4), GT_EDGES, 2, C2, {"C2": "(v1 v2)"}, [[1, 0.4], [-1, -0.4], [0, 0], [0, 0]]),
    "k33_c2v": problem(names(6), k33_edges(), 2, {"schoenflies": "C2v"},
                       {"C2": "(v1 v6)(v2 v5)(v3 v4)", "s_h": "(v1 v5)(v2 v6)(v3 v4)", "s_v": "(v1 v2)(v5 v6)"},
                       [[-1, 1], [1, 1], [0, 2], [0, -2], [-1, -1], [1, -1]]),
    "c9_c3": problem(names(9), [[f"v{i}", f"v{i % 9 + 1}"] for i in range(1, 10)], 2, {"schoenflies": "C3"},
                     {"C3": "(v1 v2 v3 v4 v5 v6 v7 v8 v9)", "C3^2": "(v1 v3 v5 v7 v9 v2 v4 v6 v8)"}, c9_coords()),
    "c4_gadget": c4_gadget(),
}

if __name__ == "__main__":
    OUT.mkdir(exist_ok=True)
    for name, body in FIXTURES.items():
        (OUT / f"{name}.json").write_text(json.dumps(body, indent=2) + "\n")
    print(f"wrote {len(FIXTURES)} fixtures to {OUT}")
