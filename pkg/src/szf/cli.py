"""Command-line front end: compute, classify, verify, and family.

Conventions: graph inputs come from --family, --input FILE, or stdin;
results go to stdout as JSON or CSV; diagnostics go to stderr. Exit codes
are 0 (success), 1 (verification mismatch), 2 (parse failure), and 3
(resource limit: order guard exceeded or an instance ran past the
timeout). The order guard defaults to 26 and can be overridden with
--max-n or the SZF_MAX_N environment variable.
"""

import argparse
import csv
import json
import math
import os
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .families import (
    SplitMix64, cycle, family_graph, gadget_family, hypercube,
    paired_blue_witness, path, random_gadget_spec, spider,
    corona_k1, corona_k2, diameter_bound_holds, diameter_lower_bound,
    th_cycle_formula, th_hypercube_formula, th_path_formula, th_spider_formula,
)
from .forcing import propagate
from .formats import format_edge_list, from_graph6, parse_edge_list, to_graph6
from .graph import Graph, components, diameter, from_edge_list, leaves, min_degree
from .structure import classify_extremes
from .throttling import throttle, throttle_with_bound

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_PARSE = 2
EXIT_RESOURCE = 3

DEFAULT_MAX_N = 26

SPIDER_CASES = ((4, 2), (5, 2), (6, 2), (4, 3), (5, 3), (6, 3), (4, 4), (5, 4), (5, 5))

CSV_HEADER = "spec,n,computed,predicted,match,runtime_ms"


@dataclass(frozen=True)
class VerificationRow:
    spec: str
    n: int
    computed: object
    predicted: object
    match: bool
    runtime_ms: int

    def csv_fields(self) -> list:
        return [self.spec, self.n, self.computed, self.predicted,
                str(self.match).lower(), self.runtime_ms]


def _max_n(args) -> int:
    if args.max_n is not None:
        return args.max_n
    env = os.environ.get("SZF_MAX_N")
    if env is not None:
        try:
            return int(env)
        except ValueError:
            raise ValueError(f"SZF_MAX_N must be an integer, got {env!r}") from None
    return DEFAULT_MAX_N


def _strip_comments(text: str) -> str:
    return "\n".join(ln for ln in text.splitlines() if not ln.lstrip().startswith("#"))


def _load_graph(args) -> Graph:
    if getattr(args, "family", None):
        return family_graph(args.family)
    if getattr(args, "input", None):
        with open(args.input, "r", encoding="ascii") as fh:
            text = fh.read()
    else:
        text = sys.stdin.read()
    text = _strip_comments(text)
    if args.format == "graph6":
        return from_graph6(text)
    return parse_edge_list(text)


# ---------------------------------------------------------------------------
# compute / classify / family

def cmd_compute(args) -> int:
    g = _load_graph(args)
    limit = _max_n(args)
    if g.n > limit:
        print(f"graph order {g.n} exceeds the limit {limit} (set --max-n or SZF_MAX_N)",
              file=sys.stderr)
        return EXIT_RESOURCE
    result = throttle(g) if args.bound is None else throttle_with_bound(g, args.bound)
    payload = {"n": g.n, **result.to_json_dict()}
    if args.trace:
        payload["trace"] = propagate(g, result.witness).to_lines()
    print(json.dumps(payload, sort_keys=True))
    return EXIT_OK


def cmd_classify(args) -> int:
    g = _load_graph(args)
    c = classify_extremes(g)
    payload = {"n": g.n, "label": c.label, "value": c.value, "evidence": c.evidence}
    if args.check:
        limit = _max_n(args)
        if g.n > limit:
            print(f"graph order {g.n} exceeds the limit {limit} for --check",
                  file=sys.stderr)
            return EXIT_RESOURCE
        th = throttle(g).th
        if c.value is not None:
            agrees = th == c.value
        else:
            agrees = th not in {1, 2, g.n - 1, g.n}
        payload["solver_th"] = th
        payload["agrees"] = agrees
    print(json.dumps(payload, sort_keys=True))
    return EXIT_OK


_LABELING_NOTES = {
    "path": "vertices 0..n-1 in path order",
    "cycle": "vertices 0..n-1 in ring order, edge (n-1,0) closes the cycle",
    "spider": "center 0, leg j occupies 1+j*leg..(j+1)*leg outward",
    "hypercube": "vertices are n-bit integers, edges at Hamming distance 1",
    "h": "hub 0, then pendant pairs, triangle pairs, extra edge pairs",
    "h_graph": "hub 0, then pendant pairs, triangle pairs, extra edge pairs",
    "friendship": "hub 0, then triangle pairs",
    "matching": "edge i joins 2i and 2i+1",
    "gadget_cycle": "base vertices 0..L-1 first, gadget pairs appended",
    "gadget_path": "base vertices 0..L-1 first, gadget pairs appended",
}


def cmd_family(args) -> int:
    g = family_graph(args.spec)
    name = args.spec.split(":", 1)[0].split("(", 1)[0]
    note = _LABELING_NOTES.get(name, "dense ids per generator documentation")
    print(f"# family={args.spec} n={g.n} labeling: {note}")
    if args.emit == "graph6":
        print(to_graph6(g))
    else:
        sys.stdout.write(format_edge_list(g))
    return EXIT_OK


# ---------------------------------------------------------------------------
# verification campaigns

def _corona_base_graph(seed: int) -> Graph:
    """Seeded connected base graph on 2..8 vertices (trees on odd seeds)."""
    rng = SplitMix64(seed)
    n = 2 + rng.below(7)
    if seed % 2 == 1:
        return from_edge_list(n, [(v, rng.below(v)) for v in range(1, n)])
    while True:
        edges = [(i, j) for i in range(n) for j in range(i + 1, n)
                 if rng.below(100) < 50]
        g = from_edge_list(n, edges)
        if len(components(g)) == 1:
            return g


def _certified_corona_k2_value(base: Graph, g2: Graph) -> int:
    """Exact throttling for small orders, else a witnessed upper bound."""
    if g2.n <= 15:
        return throttle_with_bound(g2, base.n + 1).th
    tr = propagate(g2, range(base.n))
    assert tr.completed
    return base.n + tr.pt


def _gadget_instance(seed: int):
    length = 10 + SplitMix64(seed).below(31)
    spec = random_gadget_spec("cycle", length, seed)
    return length, spec, gadget_family(spec)


def _all_graphs_stats(n: int):
    """Classifier vs brute-force disagreement count over all labeled graphs."""
    from itertools import combinations
    from .forcing import _propagate_mask

    pairs = list(combinations(range(n), 2))
    mismatches = 0
    for mask in range(1 << len(pairs)):
        g = from_edge_list(n, [pairs[i] for i in range(len(pairs)) if (mask >> i) & 1])
        bits = g.bit_adjacency
        full = (1 << n) - 1
        best = None
        for k in range(n + 1):
            for comb in combinations(range(n), k):
                m = 0
                for v in comb:
                    m |= 1 << v
                pt, _ = _propagate_mask(bits, full, m)
                if pt is not None and (best is None or k + pt < best):
                    best = k + pt
        c = classify_extremes(g)
        if c.value is not None:
            ok = c.value == best
        else:
            ok = best not in {1, 2, n - 1, n}
        if not ok:
            mismatches += 1
    return mismatches


def _run_instance(payload):
    campaign, key = payload
    start = time.monotonic()

    if campaign == "cycles":
        n = key
        row = ("cycle:%d" % n, n, throttle(cycle(n)).th, th_cycle_formula(n), None)
    elif campaign == "paths":
        n = key
        row = ("path:%d" % n, n, throttle(path(n)).th, th_path_formula(n), None)
    elif campaign == "spiders":
        p, leg = key
        g = spider(p, leg)
        predicted = th_spider_formula(p, leg)
        try:
            computed = throttle_with_bound(g, predicted).th
        except ValueError:
            computed = throttle(g).th
        row = (f"spider:{p},{leg}", g.n, computed, predicted, None)
    elif campaign == "hypercubes":
        n = key
        g = hypercube(n)
        predicted = th_hypercube_formula(n)
        row = (f"hypercube:{n}", g.n, throttle_with_bound(g, predicted).th, predicted, None)
    elif campaign == "coronas":
        seed, variant = key
        base = _corona_base_graph(seed)
        if variant == "k1":
            g = corona_k1(base)
            row = (f"corona_k1(seed={seed})", g.n, throttle(g).th, 2, None)
        elif variant == "k2":
            g = corona_k2(base)
            value = _certified_corona_k2_value(base, g)
            row = (f"corona_k2(seed={seed})", g.n, value, base.n + 1, value <= base.n + 1)
        else:  # k2_leaves: only emitted for bases with >= 3 leaves
            g = corona_k2(base)
            value = _certified_corona_k2_value(base, g)
            row = (f"corona_k2_leaves(seed={seed})", g.n, value, base.n, value <= base.n)
    elif campaign == "extremes":
        n = key
        mismatches = _all_graphs_stats(n)
        row = (f"extremes:n={n}", n, mismatches, 0, None)
    elif campaign == "diameter-bound":
        seed = key
        length, spec, g = _gadget_instance(seed)
        d = diameter(g)
        assert min_degree(g) >= 2 and d >= 4
        spacing = max(2, math.isqrt(2 * length))
        witness = paired_blue_witness(spec, spacing)
        tr = propagate(g, witness)
        assert tr.completed
        value = len(witness) + tr.pt
        if g.n <= 28:
            value = throttle_with_bound(g, value).th
        row = (f"gadget_cycle:{length},{seed}", g.n, value,
               str(diameter_lower_bound(d)), diameter_bound_holds(value, d))
    elif campaign == "gadget-family":
        seed = key
        length, spec, g = _gadget_instance(seed)
        spacing = max(2, math.isqrt(2 * length))
        witness = paired_blue_witness(spec, spacing)
        tr = propagate(g, witness)
        value = len(witness) + tr.pt if tr.completed else g.n + 1
        budget = math.isqrt(36 * length)
        row = (f"gadget_cycle:{length},{seed}", g.n, value, budget,
               tr.completed and value <= budget)
    else:
        raise ValueError(f"unknown campaign {campaign!r}")

    spec_str, n, computed, predicted, match = row
    if match is None:
        match = computed == predicted
    ms = int((time.monotonic() - start) * 1000)
    return VerificationRow(spec_str, n, computed, predicted, match, ms)


def _parse_range(text: str, what: str):
    parts = text.split("..")
    try:
        if len(parts) == 1:
            v = int(parts[0])
            return range(v, v + 1)
        if len(parts) == 2:
            return range(int(parts[0]), int(parts[1]) + 1)
    except ValueError:
        pass
    raise ValueError(f"{what} must look like A..B, got {text!r}")


def _campaign_keys(args):
    name = args.campaign
    if name in ("cycles", "paths"):
        return [("%s" % name, n) for n in _parse_range(args.n or "3..18", "--n")]
    if name == "spiders":
        return [("spiders", pair) for pair in SPIDER_CASES]
    if name == "hypercubes":
        return [("hypercubes", n) for n in _parse_range(args.n or "2..4", "--n")]
    if name == "coronas":
        seeds = _parse_range(args.seeds or "1..10", "--seeds")
        keys = []
        for s in seeds:
            keys.append(("coronas", (s, "k1")))
            keys.append(("coronas", (s, "k2")))
            base = _corona_base_graph(s)
            if len(leaves(base)) >= 3:
                keys.append(("coronas", (s, "k2_leaves")))
        return keys
    if name == "extremes":
        return [("extremes", n) for n in range(1, (args.n_max or 6) + 1)]
    if name in ("diameter-bound", "gadget-family"):
        return [(name, s) for s in _parse_range(args.seeds or "1..20", "--seeds")]
    raise ValueError(f"unknown campaign {name!r}")


def cmd_verify(args) -> int:
    keys = _campaign_keys(args)
    if args.jobs > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            rows = list(pool.map(_run_instance, keys))
    else:
        rows = [_run_instance(k) for k in keys]
    rows.sort(key=lambda r: (r.spec, r.n))

    out = sys.stdout if args.output is None else open(
        args.output, "w", encoding="ascii", newline="")
    try:
        writer = csv.writer(out)
        writer.writerow(CSV_HEADER.split(","))
        for row in rows:
            writer.writerow(row.csv_fields())
    finally:
        if args.output is not None:
            out.close()

    matched = sum(1 for r in rows if r.match)
    total_ms = sum(r.runtime_ms for r in rows)
    print(f"{args.campaign}: {matched}/{len(rows)} match, {total_ms} ms", file=sys.stderr)
    slow = [r for r in rows if r.runtime_ms > args.timeout_s * 1000]
    if slow:
        print(f"{len(slow)} instance(s) exceeded the {args.timeout_s}s timeout",
              file=sys.stderr)
        return EXIT_RESOURCE
    return EXIT_OK if matched == len(rows) else EXIT_MISMATCH


# ---------------------------------------------------------------------------

def _build_parser():
    parser = argparse.ArgumentParser(
        prog="szf",
        description="skew zero forcing throttling: compute, classify, verify, generate")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_input_flags(p):
        p.add_argument("--family", help="family spec string, e.g. cycle:8 or spider:4,3")
        p.add_argument("--input", help="read the graph from this file instead of stdin")
        p.add_argument("--format", choices=("graph6", "edgelist"), default="graph6")
        p.add_argument("--max-n", type=int, default=None,
                       help=f"order guard (default {DEFAULT_MAX_N}, env SZF_MAX_N)")

    p = sub.add_parser("compute", help="exact throttling result as JSON")
    add_input_flags(p)
    p.add_argument("--trace", action="store_true", help="embed the witness trace")
    p.add_argument("--bound", type=int, default=None,
                   help="admissible upper bound to accelerate the search")
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("classify", help="structural throttling classification as JSON")
    add_input_flags(p)
    p.add_argument("--check", action="store_true",
                   help="also run the solver and report agreement")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("verify", help="run a verification campaign, emit CSV")
    p.add_argument("--campaign", required=True,
                   choices=("paths", "cycles", "spiders", "hypercubes", "coronas",
                            "extremes", "diameter-bound", "gadget-family"))
    p.add_argument("--n", help="instance range A..B for paths/cycles/hypercubes")
    p.add_argument("--n-max", type=int, default=None, help="order cap for extremes")
    p.add_argument("--seeds", help="seed range A..B for seeded campaigns")
    p.add_argument("--timeout-s", type=float, default=300.0,
                   help="per-instance wall-clock limit (checked after each instance)")
    p.add_argument("--jobs", type=int, default=1, help="parallel workers")
    p.add_argument("--output", help="write CSV here instead of stdout")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("family", help="emit a generated family instance")
    p.add_argument("spec", help="family spec string, e.g. cycle:4 or h:0,2,0")
    p.add_argument("--emit", choices=("graph6", "edgelist"), default="graph6")
    p.set_defaults(func=cmd_family)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())
