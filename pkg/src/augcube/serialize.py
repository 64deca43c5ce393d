"""JSON and DOT emission for every artifact the command line produces.

JSON is the canonical interchange: every artifact is an object with an
"artifact" tag, vertices appear as n-character bitstrings (highest bit
first), and edges as two-element bitstring lists in canonical order.
DOT output is derived and best-effort: hypercube-class edges are drawn
solid, augmented-class edges dashed, and cycle bundles get one color
per cycle.
"""

from __future__ import annotations

import json

from .gf2 import element_from_str, element_to_str, f_lower_bound
from .hamiltonicity import EdhcBundle, cycle_edges, verify_edhc_bundle
from .reciprocity import (
    SpanningSubcube,
    SubcubeSelection,
    subcube_from_selection,
)
from .topology import (
    CubeGraph,
    Edge,
    build_augmented_cube,
    build_cayley,
    build_hypercube,
    classify_edge,
    edge,
    matching_for_generator,
)


class MalformedArtifactError(ValueError):
    pass


def _bits(v: int, n: int) -> str:
    return element_to_str(v, n)


def _edge_json(e: Edge, n: int) -> list[str]:
    return [_bits(e[0], n), _bits(e[1], n)]


def _edge_from_json(pair, n: int) -> Edge:
    return edge(element_from_str(pair[0]), element_from_str(pair[1]))


def graph_to_json(g: CubeGraph) -> dict:
    return {
        "artifact": "graph",
        "n": g.n,
        "kind": g.kind,
        "generators": [_bits(s, g.n) for s in g.generators],
        "edges": [_edge_json(e, g.n) for e in g.edges()],
    }


def graph_from_json(d: dict) -> CubeGraph:
    n = d["n"]
    gens = [element_from_str(s) for s in d["generators"]]
    g = build_cayley(n, gens)
    return CubeGraph(n=n, generators=g.generators, kind=d.get("kind", "Cayley"))


def subcube_to_json(sub: SpanningSubcube) -> dict:
    n = sub.n
    return {
        "labels": [m.label() for m in sub.selection.chosen],
        "generators": [_bits(g, n) for g in sub.selection.generators()],
        "witness": [_bits(w, n) for w in sub.witness],
    }


def subcube_from_json(n: int, d: dict) -> SpanningSubcube:
    gens = [element_from_str(s) for s in d["generators"]]
    sel = SubcubeSelection(n, tuple(matching_for_generator(n, g) for g in gens))
    return subcube_from_selection(sel)


def pair_to_json(a: SpanningSubcube, b: SpanningSubcube) -> dict:
    n = a.n
    inter = sorted(a.edge_set() & b.edge_set())
    union_whole = (a.edge_set() | b.edge_set()) == build_augmented_cube(n).edge_set()
    return {
        "artifact": "subcube-pair",
        "n": n,
        "members": [subcube_to_json(a), subcube_to_json(b)],
        "intersection": [_edge_json(e, n) for e in inter],
        "union_is_whole": union_whole,
    }


def edhc_to_json(bundle: EdhcBundle) -> dict:
    n = bundle.host.n
    return {
        "artifact": "edhc-bundle",
        "n": n,
        "host_kind": bundle.host.kind,
        "cycles": [[_bits(v, n) for v in c] for c in bundle.cycles],
    }


def edhc_from_json(d: dict) -> EdhcBundle:
    n = d["n"]
    host = build_hypercube(n) if d["host_kind"] == "Q" else build_augmented_cube(n)
    cycles = [[element_from_str(s) for s in c] for c in d["cycles"]]
    return EdhcBundle(host, cycles)


def fault_set_to_json(n: int, faulty) -> list[list[str]]:
    """Fault sets interchange as a bare JSON list of canonical edge pairs."""
    return [_edge_json(e, n) for e in sorted(faulty)]


def fault_set_from_json(n: int, data) -> frozenset[Edge]:
    return frozenset(_edge_from_json(p, n) for p in data)


def fn_table_to_json(max_n: int) -> dict:
    return {
        "artifact": "fn-table",
        "rows": [[n, f_lower_bound(n)] for n in range(2, max_n + 1)],
    }


def selections_to_json(n: int, selections) -> dict:
    return {
        "artifact": "subcube-selections",
        "n": n,
        "count": len(selections),
        "selections": [
            {
                "labels": [m.label() for m in sel.chosen],
                "generators": [_bits(g, n) for g in sel.generators()],
            }
            for sel in selections
        ],
    }


def trials_to_json(reports, n: int, faults: int, pattern: str, seed: int) -> dict:
    return {
        "artifact": "fault-trials",
        "n": n,
        "faults": faults,
        "pattern": pattern,
        "seed": seed,
        "trials": [
            {
                "seed": r.seed,
                "pattern": r.pattern,
                "conditional_ok": r.conditional_ok,
                "selection": r.selection,
                "selection_via": r.selection_via,
                "internal_faults": r.internal_faults,
                "verdict": r.verdict,
                "spectrum_complete": r.spectrum_complete,
                "missing_lengths": r.missing_lengths,
            }
            for r in reports
        ],
    }


def dump(obj: dict, path: str | None) -> str:
    text = json.dumps(obj, indent=2, sort_keys=True) + "\n"
    if path:
        with open(path, "w") as fh:
            fh.write(text)
    return text


# ---------------------------------------------------------------------------
# verification of emitted artifacts


def verify_artifact(d, budget: int | None = None) -> tuple[bool, list[str]]:
    """Re-derive an emitted JSON artifact and compare; returns (ok,
    problems).  Fault-trial artifacts are re-run from their seeds."""
    if not isinstance(d, dict) or "artifact" not in d:
        return False, ["not an artifact object (missing 'artifact' tag)"]
    kind = d["artifact"]
    try:
        if kind == "graph":
            g = graph_from_json(d)
            fresh = graph_to_json(g)
            if fresh["edges"] != d["edges"]:
                return False, ["edge list does not match its generators"]
            return True, []
        if kind == "subcube-pair":
            n = d["n"]
            a = subcube_from_json(n, d["members"][0])
            b = subcube_from_json(n, d["members"][1])
            fresh = pair_to_json(a, b)
            problems = []
            if fresh["intersection"] != d["intersection"]:
                problems.append("stored intersection does not match the members")
            if fresh["union_is_whole"] != d["union_is_whole"]:
                problems.append("stored union flag does not match the members")
            return not problems, problems
        if kind == "edhc-bundle":
            bundle = edhc_from_json(d)
            report = verify_edhc_bundle(bundle.host, bundle)
            return report.ok, report.problems
        if kind == "fn-table":
            rows = d["rows"]
            for n, value in rows:
                if f_lower_bound(n) != value:
                    return False, [f"row n={n}: stored {value} != computed {f_lower_bound(n)}"]
            return True, []
        if kind == "subcube-selections":
            n = d["n"]
            problems = []
            for i, sel in enumerate(d["selections"]):
                sub = subcube_from_json(n, sel)
                if sub.graph.degree() != n:
                    problems.append(f"selection {i} is not {n}-regular")
            if d["count"] != len(d["selections"]):
                problems.append("count does not match the selection list")
            return not problems, problems
        if kind == "fault-trials":
            from .fault import run_fault_trial

            problems = []
            for t in d["trials"]:
                rep = run_fault_trial(
                    d["n"], d["faults"], t["pattern"], t["seed"], budget=budget
                )
                for key in (
                    "conditional_ok",
                    "selection",
                    "selection_via",
                    "internal_faults",
                    "verdict",
                    "spectrum_complete",
                    "missing_lengths",
                ):
                    if getattr(rep, key) != t[key]:
                        problems.append(
                            f"trial seed={t['seed']}: {key} replayed as "
                            f"{getattr(rep, key)!r}, stored {t[key]!r}"
                        )
            return not problems, problems
    except (KeyError, IndexError, TypeError, ValueError) as exc:
        raise MalformedArtifactError(str(exc)) from exc
    return False, [f"unknown artifact kind {kind!r}"]


# ---------------------------------------------------------------------------
# DOT export

_CYCLE_COLORS = [
    "red", "blue", "forestgreen", "darkorange", "purple", "brown",
    "deeppink", "teal",
]


def graph_to_dot(g: CubeGraph, cycles: list[list[int]] | None = None) -> str:
    """DOT text for a cube graph; hypercube edges solid, augmented edges
    dashed, each labeled by dimension.  With cycles, every edge on cycle
    i is drawn in the i-th color."""
    color_of: dict[Edge, str] = {}
    if cycles:
        for i, c in enumerate(cycles):
            col = _CYCLE_COLORS[i % len(_CYCLE_COLORS)]
            for e in cycle_edges(c):
                color_of[e] = col
    lines = ["graph cube {", "  node [shape=circle fontsize=10];"]
    for v in g.vertices():
        lines.append(f'  v{v} [label="{_bits(v, g.n)}"];')
    for u, v in g.edges():
        cls = classify_edge(g.n, (u, v))
        style = "solid" if cls is not None and cls.kind == "hypercube" else "dashed"
        attrs = [f"style={style}"]
        if cls is not None:
            attrs.append(f'label="{cls.dimension}"')
        col = color_of.get((u, v))
        if col:
            attrs.append(f"color={col} penwidth=2")
        lines.append(f"  v{u} -- v{v} [{' '.join(attrs)}];")
    lines.append("}")
    return "\n".join(lines) + "\n"
