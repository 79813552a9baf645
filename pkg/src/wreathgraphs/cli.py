"""Command-line front end.

Exit codes: 0 success, 1 negative answer, 2 input error, 3 size cap,
4 vertex not in the product, 5 verification failure.

Config files are JSON::

    {
      "kind": "generalized-wreath",
      "poset": {"elements": ["1", "2"], "covers": [["1", "2"]]},
      "factors": {
        "1": {"vertices": ["a", "b"], "edges": [["a", "b"]]},
        "2": {"type": "cycle", "n": 3}
      },
      "caps": {"max_vertices": 1000000, "iso_limit": 5000}
    }

A factor is an edge-list graph, a named graph (``complete``, ``cycle`` or
``path`` with ``n``), or a group with generators::

    {"group": {"type": "cyclic", "order": 2}, "generators": ["1"]}

Group factors stand for their Cayley graphs in graph products.  The binary
kinds (``cartesian``, ``lexicographic``, ``wreath``) fold left over the
factors in poset order, or in key order when no poset is given.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from typing import Optional

from .errors import BadPoint, InputError, SchemaError, SizeCap, VerificationFailed, WreathGraphsError
from .graph import ISOMORPHISM_CAP, Graph, are_isomorphic, complete_graph, cycle_graph, label_from_json, label_to_json, path_graph
from .groups import FiniteGroup, GeneratingSet, cayley_graph, cyclic_group
from .gwp_group import verify_cayley_theorem
from .poset import Poset
from .products import (
    MATERIALIZE_CAP,
    GwpSpec,
    binary_product_degree,
    binary_product_size,
    cartesian_product,
    cayley_gwp_spec,
    fold_product,
    generalized_wreath,
    lexicographic_product,
    wreath_product_graphs,
)

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_INPUT = 2
EXIT_SIZE = 3
EXIT_DOMAIN = 4
EXIT_VERIFY = 5

BINARY_KINDS = {
    "cartesian": cartesian_product,
    "lexicographic": lexicographic_product,
    "wreath": wreath_product_graphs,
}
KINDS = tuple(BINARY_KINDS) + ("generalized-wreath", "generalized-wreath-cayley")


class NotInProduct(WreathGraphsError):
    pass


@dataclass
class ProductConfig:
    kind: str
    poset: Optional[Poset]
    labels: list
    graphs: dict
    groups: dict = field(default_factory=dict)
    max_vertices: int = MATERIALIZE_CAP
    iso_limit: int = ISOMORPHISM_CAP

    def ordered_graphs(self) -> list[Graph]:
        return [self.graphs[i] for i in self.labels]

    def gwp_spec(self) -> GwpSpec:
        if self.kind == "generalized-wreath-cayley":
            return cayley_gwp_spec(self.poset, self.ordered_groups())
        return GwpSpec(self.poset, self.ordered_graphs())

    def ordered_groups(self) -> list[tuple[FiniteGroup, GeneratingSet]]:
        missing = [i for i in self.labels if i not in self.groups]
        if missing:
            raise SchemaError(f"factor {missing[0]!r} must be a group with generators")
        return [self.groups[i] for i in self.labels]


def parse_poset(data) -> Poset:
    if not isinstance(data, dict) or set(data) - {"elements", "covers"} or "elements" not in data:
        raise SchemaError('poset must be {"elements": [...], "covers": [[upper, lower], ...]}')
    elements, covers = data["elements"], data.get("covers", [])
    if not isinstance(elements, list) or not all(isinstance(e, str) for e in elements):
        raise SchemaError("poset elements must be an array of strings")
    if not elements:
        raise SchemaError("poset must have at least one element")
    if not isinstance(covers, list) or not all(isinstance(c, list) and len(c) == 2 for c in covers):
        raise SchemaError("poset covers must be [upper, lower] pairs")
    return Poset.from_covers(elements, [tuple(c) for c in covers])


def parse_group(data) -> FiniteGroup:
    if not isinstance(data, dict):
        raise SchemaError("group must be a JSON object")
    kind = data.get("type")
    if kind == "cyclic":
        order = data.get("order")
        if not isinstance(order, int) or isinstance(order, bool) or order < 1:
            raise SchemaError("cyclic group needs a positive integer order")
        return cyclic_group(order)
    if kind == "table":
        elements, table, identity = data.get("elements"), data.get("table"), data.get("identity")
        if not isinstance(elements, list) or not isinstance(table, list):
            raise SchemaError("table group needs elements and table arrays")
        index = {label_from_json(e): k for k, e in enumerate(elements)}
        try:
            rows = [[index[label_from_json(x)] for x in row] for row in table]
        except (KeyError, TypeError):
            raise SchemaError("table entries must be declared elements") from None
        return FiniteGroup([label_from_json(e) for e in elements], rows, label_from_json(identity))
    raise SchemaError(f"unknown group type {kind!r}")


def parse_factor(label, data):
    """Return ``(graph, group_pair_or_None)``."""
    if not isinstance(data, dict):
        raise SchemaError(f"factor {label!r} must be a JSON object")
    try:
        if "group" in data:
            group = parse_group(data["group"])
            gens = data.get("generators")
            if not isinstance(gens, list):
                raise SchemaError(f"factor {label!r} needs a generators array")
            genset = GeneratingSet(group, [label_from_json(g) for g in gens])
            return cayley_graph(group, genset), (group, genset)
        if "type" in data:
            n = data.get("n")
            if not isinstance(n, int) or isinstance(n, bool) or n < 1:
                raise SchemaError(f"factor {label!r} needs a positive integer n")
            builders = {"complete": complete_graph, "cycle": cycle_graph, "path": path_graph}
            if data["type"] not in builders:
                raise SchemaError(f"factor {label!r} has unknown graph type {data['type']!r}")
            return builders[data["type"]](n, data.get("labels")), None
        return Graph.from_dict(data), None
    except InputError as exc:
        raise type(exc)(f"factor {label!r}: {exc}") from exc


def parse_config(data, max_vertices: Optional[int] = None) -> ProductConfig:
    if not isinstance(data, dict):
        raise SchemaError("config must be a JSON object")
    kind = data.get("kind", "generalized-wreath-cayley")
    if kind not in KINDS:
        raise SchemaError(f"unknown product kind {kind!r}; expected one of {', '.join(KINDS)}")
    factors = data.get("factors")
    if not isinstance(factors, dict) or not factors:
        raise SchemaError("config needs a nonempty factors object")
    poset = parse_poset(data["poset"]) if "poset" in data else None
    if poset is None:
        if kind not in BINARY_KINDS:
            raise SchemaError(f"kind {kind!r} needs a poset")
        labels = list(factors)
    else:
        labels = list(poset.elements)
        if set(factors) != set(labels):
            odd = sorted(set(factors) ^ set(labels))
            raise SchemaError(f"factor keys must equal the poset elements (mismatch at {odd[0]!r})")
    graphs, groups = {}, {}
    for i in labels:
        graph, group = parse_factor(i, factors[i])
        graphs[i] = graph
        if group is not None:
            groups[i] = group
    caps = data.get("caps", {})
    if not isinstance(caps, dict):
        raise SchemaError("caps must be an object")
    cfg = ProductConfig(kind, poset, labels, graphs, groups)
    for key, attr in (("max_vertices", "max_vertices"), ("iso_limit", "iso_limit")):
        if key in caps:
            if not isinstance(caps[key], int) or caps[key] < 0:
                raise SchemaError(f"caps.{key} must be a nonnegative integer")
            setattr(cfg, attr, caps[key])
    if max_vertices is not None:
        cfg.max_vertices = max_vertices
    if kind == "generalized-wreath-cayley":
        cfg.ordered_groups()
    return cfg


def load_json(path: str):
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise SchemaError(f"cannot read {path}: {exc.strerror}") from exc
    except json.JSONDecodeError as exc:
        raise SchemaError(f"{path} is not valid JSON: {exc}") from exc


def build_graph(cfg: ProductConfig) -> Graph:
    if cfg.kind in BINARY_KINDS:
        return fold_product(BINARY_KINDS[cfg.kind], cfg.ordered_graphs(), cap=cfg.max_vertices)
    return generalized_wreath(cfg.gwp_spec(), cap=cfg.max_vertices)


def product_stats(cfg: ProductConfig) -> dict:
    graphs = cfg.ordered_graphs()
    if cfg.kind in BINARY_KINDS:
        n, d = len(graphs[0]), graphs[0].regular_degree()
        for g in graphs[1:]:
            n, d = binary_product_size(cfg.kind, n, len(g)), binary_product_degree(cfg.kind, n, d, len(g), g.regular_degree())
    else:
        spec = cfg.gwp_spec()
        graphs = list(spec.factors)
        n, d = spec.vertex_count(), spec.predicted_degree()
    return {
        "kind": cfg.kind,
        "vertices": str(n),
        "degree": d,
        "factors": [
            {"index": i, "vertices": len(g), "edges": g.num_edges, "degree": g.regular_degree()}
            for i, g in zip(cfg.labels, graphs)
        ],
    }


def product_neighbors(cfg: ProductConfig, vertex_json) -> list:
    if cfg.kind in BINARY_KINDS:
        graph = build_graph(cfg)
        label = label_from_json(vertex_json)
        if label not in graph:
            raise NotInProduct(f"{vertex_json!r} is not a vertex of the product")
        return [label_to_json(v) for v in graph.neighbors(label)]
    spec = cfg.gwp_spec()
    vertex = _gwp_vertex(spec, vertex_json)
    return [spec.vertex_to_json(h) for h in _lazy_neighbors(spec, vertex)]


def _gwp_vertex(spec: GwpSpec, data):
    if not isinstance(data, list) or not all(isinstance(t, dict) and set(t) == {"index", "values"} for t in data):
        raise SchemaError('vertex must be an array of {"index": ..., "values": [...]} tables')
    if [t["index"] for t in data] != list(spec.poset.elements):
        raise NotInProduct("vertex tables must cover every poset element once, in declared order")
    for t, n in zip(data, spec.table_lengths):
        if not isinstance(t["values"], list):
            raise SchemaError("table values must be an array")
        if len(t["values"]) != n:
            raise NotInProduct(f"table {t['index']!r} has {len(t['values'])} values, expected {n}")
    return spec.vertex_from_json(data)


def _lazy_neighbors(spec: GwpSpec, vertex):
    # index tuples sort in the same order the materialized graph enumerates vertices
    return [spec.to_labels(h) for h in sorted(spec.neighbor_indices(spec.to_indices(vertex)))]


def _dump(obj, indent=None) -> str:
    return json.dumps(obj, ensure_ascii=False, indent=indent) + "\n"


def _emit(text: str, out: Optional[str]) -> None:
    if out:
        with open(out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_build(args) -> int:
    cfg = parse_config(load_json(args.config), args.max_vertices)
    graph = build_graph(cfg)
    text = graph.to_dot() if args.format == "dot" else _dump(graph.to_dict())
    _emit(text, args.out)
    return EXIT_OK


def cmd_stats(args) -> int:
    cfg = parse_config(load_json(args.config), args.max_vertices)
    _emit(_dump(product_stats(cfg), indent=2), args.out)
    return EXIT_OK


def cmd_neighbors(args) -> int:
    cfg = parse_config(load_json(args.config), args.max_vertices)
    raw = args.vertex
    if raw.startswith("@"):
        vertex = load_json(raw[1:])
    else:
        try:
            vertex = json.loads(raw)
        except json.JSONDecodeError as exc:
            raise SchemaError(f"--vertex is not valid JSON: {exc}") from exc
    _emit(_dump(product_neighbors(cfg, vertex)), args.out)
    return EXIT_OK


def cmd_verify_theorem(args) -> int:
    cfg = parse_config(load_json(args.config), args.max_vertices)
    if cfg.poset is None:
        raise SchemaError("verify-theorem needs a poset")
    report = verify_cayley_theorem(cfg.poset, cfg.ordered_groups(), cap=cfg.max_vertices, iso_cap=cfg.iso_limit)
    _emit(_dump(report.to_dict(), indent=2), args.out)
    if not report.ok:
        raise VerificationFailed("verification failed", witness=report.witness)
    return EXIT_OK


def cmd_iso(args) -> int:
    g1 = Graph.from_dict(load_json(args.graph1))
    g2 = Graph.from_dict(load_json(args.graph2))
    cap = args.max_vertices if args.max_vertices is not None else ISOMORPHISM_CAP
    witness = are_isomorphic(g1, g2, cap=cap)
    if witness is None:
        _emit(_dump({"isomorphic": False}), args.out)
        return EXIT_NEGATIVE
    pairs = [[label_to_json(a), label_to_json(witness[a])] for a in g1.vertices]
    _emit(_dump({"isomorphic": True, "witness": pairs}), args.out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="wreathgraphs", description="Graph products and generalized wreath products.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, config=True):
        if config:
            p.add_argument("config", help="product config JSON file")
        p.add_argument("--max-vertices", type=int, default=None, help="materialization cap")
        p.add_argument("--out", default=None, help="write output here instead of stdout")

    p = sub.add_parser("build", help="materialize a product graph")
    common(p)
    p.add_argument("--format", choices=("json", "dot"), default="json")
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("stats", help="vertex count and degree without materializing")
    common(p)
    p.set_defaults(func=cmd_stats)

    p = sub.add_parser("neighbors", help="neighbours of one product vertex")
    common(p)
    p.add_argument("--vertex", required=True, help="vertex JSON, or @file")
    p.set_defaults(func=cmd_neighbors)

    p = sub.add_parser("verify-theorem", help="check the Cayley graph identity for group factors")
    common(p)
    p.set_defaults(func=cmd_verify_theorem)

    p = sub.add_parser("iso", help="test two edge-list graphs for isomorphism")
    p.add_argument("graph1")
    p.add_argument("graph2")
    common(p, config=False)
    p.set_defaults(func=cmd_iso)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except SizeCap as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_SIZE
    except NotInProduct as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except VerificationFailed as exc:
        print(f"verification failed: {json.dumps(exc.witness)}", file=sys.stderr)
        return EXIT_VERIFY
    except (InputError, BadPoint) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
