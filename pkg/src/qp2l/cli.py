"""Command-line surface.

Exit codes are uniform across subcommands: 0 = yes/valid, 1 = no/invalid,
2 = input or usage error. ``solve`` prints a run report as JSON; ``gen``
prints an instance; ``render`` writes deterministic SVG.
"""

from __future__ import annotations

import json
import random
import statistics
import sys
import time
from dataclasses import dataclass, field

import click

from .graph_core import (ColoredGraph, InputError, Instance, edge,
                         instance_to_json, parse_instance)
from .hardness import LeveledInstance, reduce_olp
from .oracle import GuardError, oracle_b2befo
from .spqr_solver import solve
from .transforms import (book_from_json, book_to_track, drawing_from_json,
                         track_from_json, track_to_book, track_to_drawing,
                         verify_book, verify_quasi_planar, verify_track)


@dataclass
class RunReport:
    decision: str = "no"
    outputs: list = field(default_factory=list)    # paths written
    timings: dict = field(default_factory=dict)    # phase -> milliseconds
    stats: dict = field(default_factory=dict)

    def to_json(self):
        return json.dumps({
            "decision": self.decision,
            "outputs": self.outputs,
            "timings": self.timings,
            "stats": self.stats,
        }, indent=2, sort_keys=True)


def _fail(msg):
    click.echo(f"error: {msg}", err=True)
    sys.exit(2)


def _load_instance(path):
    try:
        with open(path) as fh:
            return parse_instance(fh.read())
    except (OSError, ValueError, InputError) as exc:
        _fail(exc)


@click.group()
def main():
    """Two-level quasi-planarity with a fixed order on one level."""


@main.command("solve")
@click.argument("path", type=click.Path())
@click.option("--emit", "emits", multiple=True,
              type=click.Choice(["book", "track", "drawing"]))
@click.option("--svg", "svg_path", type=click.Path(), default=None)
@click.option("--oracle-check", is_flag=True,
              help="Also run the exponential oracle and compare (test only).")
def cmd_solve(path, emits, svg_path, oracle_check):
    """Decide an instance file; exit 0 when a drawing exists, 1 when not."""
    report = RunReport()
    t0 = time.perf_counter()
    inst = _load_instance(path)
    t1 = time.perf_counter()
    try:
        be = solve(inst, stats=report.stats)
    except InputError as exc:
        _fail(exc)
    t2 = time.perf_counter()
    report.timings["parse"] = round(1000 * (t1 - t0), 3)
    report.timings["solve"] = round(1000 * (t2 - t1), 3)
    report.decision = "yes" if be is not None else "no"

    if oracle_check:
        try:
            ref = oracle_b2befo(inst)
        except GuardError as exc:
            _fail(exc)
        if (ref is None) != (be is None):
            _fail("solver and oracle disagree on this instance")

    body = {}
    if be is not None:
        tl = book_to_track(be)
        if "book" in emits:
            body["book"] = json.loads(be.to_json())
        if "track" in emits:
            body["track"] = json.loads(tl.to_json())
        if "drawing" in emits:
            body["drawing"] = json.loads(track_to_drawing(tl).to_json())
        if svg_path is not None:
            svg = render_svg(track_to_drawing(tl))
            try:
                with open(svg_path, "w") as fh:
                    fh.write(svg)
            except OSError as exc:
                _fail(exc)
            report.outputs.append(svg_path)
    t3 = time.perf_counter()
    report.timings["emit"] = round(1000 * (t3 - t2), 3)
    out = json.loads(report.to_json())
    out.update(body)
    click.echo(json.dumps(out, indent=2, sort_keys=True))
    sys.exit(0 if be is not None else 1)


@main.command("verify")
@click.argument("kind", type=click.Choice(["book", "track", "drawing"]))
@click.argument("path", type=click.Path())
def cmd_verify(kind, path):
    """Check a representation file; exit 0 when valid, 1 when not.

    For kind=book the file holds {"instance": ..., "book": ...}; track and
    drawing files hold the representation alone.
    """
    try:
        with open(path) as fh:
            data = json.load(fh)
    except (OSError, ValueError) as exc:
        _fail(exc)
    try:
        if kind == "book":
            inst = parse_instance(json.dumps(data["instance"]))
            be = book_from_json(json.dumps(data["book"]), inst.graph.color)
            ok = verify_book(inst, be)
        elif kind == "track":
            ok = verify_track(track_from_json(json.dumps(data)))
        else:
            ok = verify_quasi_planar(drawing_from_json(json.dumps(data)))
    except (KeyError, ValueError, TypeError, InputError) as exc:
        _fail(exc)
    click.echo("valid" if ok else "invalid")
    sys.exit(0 if ok else 1)


@main.command("oracle")
@click.argument("path", type=click.Path())
def cmd_oracle(path):
    """Brute-force decision (guarded); exit 0 = yes, 1 = no."""
    inst = _load_instance(path)
    try:
        be = oracle_b2befo(inst)
    except GuardError as exc:
        _fail(exc)
    click.echo("yes" if be is not None else "no")
    sys.exit(0 if be is not None else 1)


@main.command("reduce")
@click.argument("path", type=click.Path())
@click.option("-o", "out", type=click.Path(), required=True)
def cmd_reduce(path, out):
    """Reduce a leveled-planarity instance file to a saturator instance.

    Input: {"vertices": [...], "edges": [[a,b],...], "k": odd int,
    "v1": ..., "vk": ...}. Output: a colored graph as JSON.
    """
    try:
        with open(path) as fh:
            data = json.load(fh)
        li = LeveledInstance(vertices=list(data["vertices"]),
                             edges=[tuple(e) for e in data["edges"]],
                             k=int(data["k"]), v1=data["v1"], vk=data["vk"])
        g = reduce_olp(li)
    except (OSError, ValueError, KeyError, TypeError, InputError) as exc:
        _fail(exc)
    doc = {"black": sorted(g.black_vertices()),
           "red": sorted(g.red_vertices()),
           "edges": sorted([list(e) for e in g.edges])}
    try:
        with open(out, "w") as fh:
            json.dump(doc, fh, indent=2, sort_keys=True)
            fh.write("\n")
    except OSError as exc:
        _fail(exc)
    sys.exit(0)


def gen_positive(n_black, n_red, rng):
    """A random yes-instance: two staircase pages read off a book embedding.

    Each page walks the black order and the red order in lockstep, only
    moving forward, so same-page edges never alternate around the spine.
    """
    blacks = [f"b{i + 1}" for i in range(n_black)]
    reds = [f"r{i + 1}" for i in range(n_red)]
    edges = set()
    for _ in range(2):
        i = j = 0
        edges.add(edge(blacks[0], reds[0]))
        while i < n_black - 1 or j < n_red - 1:
            if j == n_red - 1 or (i < n_black - 1 and rng.random() < 0.5):
                i += 1
            else:
                j += 1
            edges.add(edge(blacks[i], reds[j]))
    g = ColoredGraph(black=blacks, red=reds, edges=sorted(edges))
    return Instance(graph=g, black_order=tuple(blacks))


def gen_negative(n_black, n_red, rng, tries=200):
    """Perturb a yes-instance with random extra edges until it turns no."""
    inst = gen_positive(n_black, n_red, rng)
    g = inst.graph
    blacks = sorted(g.black_vertices())
    reds = sorted(g.red_vertices())
    for _ in range(tries):
        b = rng.choice(blacks)
        r = rng.choice(reds)
        if edge(b, r) in g.edges:
            continue
        g = g.copy()
        g.add_edge(b, r)
        inst = Instance(graph=g, black_order=inst.black_order)
        if solve(inst) is None:
            return inst
    return None


@main.command("gen")
@click.option("--black", "n_black", type=int, required=True)
@click.option("--red", "n_red", type=int, required=True)
@click.option("--positive/--negative", "positive", default=True)
@click.option("--seed", type=int, default=0, show_default=True)
def cmd_gen(n_black, n_red, positive, seed):
    """Print a random instance as JSON."""
    if n_black < 1 or n_red < 1:
        _fail("need at least one vertex per class")
    rng = random.Random(seed)
    if positive:
        inst = gen_positive(n_black, n_red, rng)
    else:
        inst = gen_negative(n_black, n_red, rng)
        if inst is None:
            _fail("could not find a negative perturbation; "
                  "try another seed or size")
    click.echo(instance_to_json(inst))
    sys.exit(0)


def _crossings(d):
    es = []
    for u, v in d.edges:
        b, r = (u, v) if u in d.x_black else (v, u)
        es.append((d.x_black[b], d.x_red[r]))
    n = 0
    for i in range(len(es)):
        for j in range(i + 1, len(es)):
            (a1, a2), (b1, b2) = es[i], es[j]
            if (a1 - b1) * (a2 - b2) < 0:
                n += 1
    return n


def render_svg(d):
    """Deterministic SVG: the two levels as horizontal lines with unit
    spacing, straight edges, and the crossing count in a metadata comment."""
    unit, y1, y2, pad = 40, 40, 200, 20
    xs = list(d.x_black.values()) + list(d.x_red.values())
    width = pad * 2 + unit * (max(xs) if xs else 0)
    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width + pad}" '
        f'height="{y2 + pad}" viewBox="0 0 {width + pad} {y2 + pad}">',
        f"<!-- crossings: {_crossings(d)} -->",
        f'<line x1="{pad}" y1="{y1}" x2="{width}" y2="{y1}" '
        'stroke="#bbbbbb"/>',
        f'<line x1="{pad}" y1="{y2}" x2="{width}" y2="{y2}" '
        'stroke="#bbbbbb"/>',
    ]

    def px(level, v):
        x = d.x_black[v] if level == 1 else d.x_red[v]
        return pad + unit * x

    for u, v in sorted(d.edges):
        b, r = (u, v) if u in d.x_black else (v, u)
        lines.append(f'<line x1="{px(1, b)}" y1="{y1}" x2="{px(2, r)}" '
                     f'y2="{y2}" stroke="#333333"/>')
    for v in sorted(d.x_black):
        lines.append(f'<circle cx="{px(1, v)}" cy="{y1}" r="5" '
                     'fill="#000000"/>')
        lines.append(f'<text x="{px(1, v)}" y="{y1 - 10}" font-size="10" '
                     f'text-anchor="middle">{v}</text>')
    for v in sorted(d.x_red):
        lines.append(f'<circle cx="{px(2, v)}" cy="{y2}" r="5" '
                     'fill="#cc2222"/>')
        lines.append(f'<text x="{px(2, v)}" y="{y2 + 16}" font-size="10" '
                     f'text-anchor="middle">{v}</text>')
    lines.append("</svg>")
    return "\n".join(lines) + "\n"


@main.command("render")
@click.argument("path", type=click.Path())
@click.option("-o", "out", type=click.Path(), required=True)
def cmd_render(path, out):
    """Render a drawing file (TwoLevelDrawing JSON) to SVG."""
    try:
        with open(path) as fh:
            d = drawing_from_json(fh.read())
        svg = render_svg(d)
        with open(out, "w") as fh:
            fh.write(svg)
    except (OSError, ValueError, KeyError, TypeError) as exc:
        _fail(exc)
    sys.exit(0)


@main.command("bench")
@click.option("--sizes", default="1e4,2e4,4e4", show_default=True)
@click.option("--reps", type=int, default=5, show_default=True)
@click.option("--seed", type=int, default=0, show_default=True)
def cmd_bench(sizes, reps, seed):
    """Time the solver on random positive instances; exit 1 when a size
    doubling more than triples the median time."""
    try:
        ns = [int(float(s)) for s in sizes.split(",")]
    except ValueError as exc:
        _fail(exc)
    medians = []
    for n in ns:
        rng = random.Random(seed)
        inst = gen_positive(n // 2, n - n // 2, rng)
        times = []
        for _ in range(reps):
            t0 = time.perf_counter()
            be = solve(inst)
            times.append(time.perf_counter() - t0)
            if be is None:
                _fail("generator produced a no-instance")
        medians.append(statistics.median(times))
    ratios = [medians[i + 1] / medians[i] for i in range(len(medians) - 1)]
    click.echo(json.dumps({
        "sizes": ns,
        "median_seconds": [round(t, 4) for t in medians],
        "ratios": [round(r, 3) for r in ratios],
    }, indent=2))
    sys.exit(0 if all(r <= 3.0 for r in ratios) else 1)


if __name__ == "__main__":
    main()
