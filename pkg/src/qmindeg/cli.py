"""Command line interface: ``qmindeg convert|nbhd|mindeg|diagram|verify|batch``.

Exit codes: 0 success, 2 unparsable input, 3 domain violation,
4 oracle mismatch during ``verify``.
"""

from __future__ import annotations

import json
import os
import sys
import time

import click

from . import curves, mindeg, models
from .models import MODELS, InvalidIndex, Space

EXIT_PARSE = 2
EXIT_DOMAIN = 3
EXIT_MISMATCH = 4

_FAMILY_NAMES = {"A": "A", "GR": "A", "C": "C", "IG": "C", "B": "B", "OG": "B"}


class CliFailure(Exception):
    def __init__(self, code: int, message: str):
        super().__init__(message)
        self.code = code


def resolve_space(space: str, n: int | None, k: int | None) -> Space:
    """Build a Space from ``--space`` (family name or ``IG(5,16)`` sugar) and ``--n/--k``."""
    if "(" in space:
        try:
            parsed = Space.parse(space)
        except ValueError as e:
            raise CliFailure(EXIT_PARSE, f"space: {e}")
        if (n is not None and n != parsed.n) or (k is not None and k != parsed.k):
            raise CliFailure(EXIT_DOMAIN, f"space {space} disagrees with --n/--k")
        return parsed
    family = _FAMILY_NAMES.get(space.upper())
    if family is None:
        raise CliFailure(EXIT_PARSE, f"space: unknown family {space!r}; use Gr, IG, OG, A, B, C or e.g. IG(5,16)")
    if n is None or k is None:
        raise CliFailure(EXIT_PARSE, "space: --n and --k are required unless --space is written like IG(5,16)")
    try:
        return Space(family, k, n)
    except ValueError as e:
        raise CliFailure(EXIT_DOMAIN, str(e))


def parse_payload(model: str, text: str, space: Space):
    try:
        value = models.parse_index(model, text, space)
    except InvalidIndex as e:
        raise CliFailure(EXIT_DOMAIN, str(e))
    except ValueError as e:
        raise CliFailure(EXIT_PARSE, f"{model}: {e}")
    try:
        return models.validate(model, value, space)
    except InvalidIndex as e:
        raise CliFailure(EXIT_DOMAIN, str(e))


def render_diagram(lam) -> str:
    """English notation: first row on top, one ``#`` per box."""
    rows = ["#" * p for p in lam if p > 0]
    return "\n".join(rows) if rows else "(empty)"


def _space_json(space: Space) -> dict:
    return {"family": space.family, "k": space.k, "n": space.n, "name": str(space)}


def dump_json(doc: dict) -> str:
    return json.dumps(doc, sort_keys=True, separators=(",", ":"), ensure_ascii=True)


def _as_partition(model: str, value, space: Space):
    if model in (models.WINDOW, models.WORD):
        return models.from_window(models.PPRIME, models.to_window(model, value, space), space)
    return value


# -- command bodies (shared by click commands and batch mode) --------------

def do_convert(space: Space, source: str, target: str, payload: str) -> dict:
    value = parse_payload(source, payload, space)
    try:
        result = models.convert(source, target, value, space)
    except InvalidIndex as e:
        raise CliFailure(EXIT_DOMAIN, str(e))
    return {"input": payload, "space": _space_json(space), "model": f"{source}->{target}",
            "result": models.format_index(target, result, space)}


def do_nbhd(space: Space, model: str, payload: str, degree: int, with_chain: bool = False) -> dict:
    value = parse_payload(model, payload, space)
    if degree < 0:
        raise CliFailure(EXIT_DOMAIN, "degree must be nonnegative")
    try:
        steps = curves.chain(model, space, value, degree)
    except InvalidIndex as e:
        raise CliFailure(EXIT_DOMAIN, str(e))
    doc = {"input": payload, "space": _space_json(space), "model": model, "degree": degree,
           "result": models.format_index(model, steps[-1], space)}
    if with_chain:
        doc["chain"] = [models.format_index(model, x, space) for x in steps]
    return doc


def do_mindeg(space: Space, model: str, lam_text: str, mu_text: str, oracle: bool = False) -> dict:
    lam = parse_payload(model, lam_text, space)
    mu = parse_payload(model, mu_text, space)
    if oracle:
        u = models.to_window(model, lam, space)
        v = models.to_window(model, mu, space)
        answer = mindeg.min_degree_oracle(space, u, v)
    else:
        answer = mindeg.min_degree_diagram(space, lam, mu, model=model)
    return {"input": {"lambda": lam_text, "mu": mu_text}, "space": _space_json(space),
            "model": answer.model, "result": answer.d,
            "witness": models.format_index(answer.model, answer.witness, space),
            "chain": [models.format_index(answer.model, x, space) for x in answer.chain]}


def do_diagram(space: Space, model: str, payload: str) -> dict:
    value = parse_payload(model, payload, space)
    lam = _as_partition(model, value, space)
    return {"input": payload, "space": _space_json(space), "model": model,
            "result": render_diagram(lam), "partition": models.format_partition(lam)}


def do_verify(spaces: list[Space], max_letters: int, workers: int) -> dict:
    reports = []
    for sp in spaces:
        try:
            reports.append(mindeg.cross_verify(sp, max_letters=max_letters, workers=workers))
        except mindeg.ResourceBoundExceeded as e:
            raise CliFailure(EXIT_DOMAIN, str(e))
    return {"input": None, "space": [_space_json(r.space) for r in reports], "model": "all",
            "result": {
                "spaces": len(reports),
                "pairs": sum(r.pairs for r in reports),
                "mismatches": [
                    {"space": str(r.space), "lambda": list(m[0]), "mu": list(m[1]),
                     "diagram": m[2], "oracle": m[3]}
                    for r in reports for m in r.mismatches],
                "reports": [r.summary() for r in reports]}}


def shipped_spaces(max_letters: int) -> list[Space]:
    out = [Space("A", k, n) for n in range(2, max_letters + 1) for k in range(1, n)]
    for n in range(1, max_letters // 2 + 1):
        for k in range(1, n + 1):
            out += [Space("B", k, n), Space("C", k, n)]
    return out


# -- output -------------------------------------------------------------------

def _emit(doc: dict, output: str, text: str, started: float):
    if output == "json":
        doc = dict(doc, timing={"microseconds": int((time.perf_counter() - started) * 1e6)})
        click.echo(dump_json(doc))
    else:
        click.echo(text)


def _run(fn):
    try:
        fn()
    except CliFailure as e:
        click.echo(f"error: {e}", err=True)
        sys.exit(e.code)


space_options = [
    click.option("--space", "space_name", required=True,
                 help="Gr/A, IG/C, OG/B, or sugar like IG(5,16)"),
    click.option("--n", "n", type=int, default=None),
    click.option("--k", "k", type=int, default=None),
]
output_option = click.option("--output", type=click.Choice(["text", "json"]), default="text")
model_choice = click.Choice(list(MODELS))


def with_space(f):
    for opt in reversed(space_options):
        f = opt(f)
    return f


@click.group()
def main():
    """Curve neighborhoods and minimum quantum degrees for Gr, IG and OG."""


@main.command()
@with_space
@click.option("--from", "source", type=model_choice, required=True)
@click.option("--to", "target", type=model_choice, required=True)
@click.argument("payload")
@output_option
def convert(space_name, n, k, source, target, payload, output):
    """Re-express PAYLOAD in another indexing model."""
    def body():
        started = time.perf_counter()
        sp = resolve_space(space_name, n, k)
        doc = do_convert(sp, source, target, payload)
        _emit(doc, output, doc["result"], started)
    _run(body)


@main.command()
@with_space
@click.option("--model", type=model_choice, required=True)
@click.option("--d", "degree", type=int, required=True)
@click.option("--chain", "with_chain", is_flag=True, help="Also print degrees 0..d.")
@click.argument("payload")
@output_option
def nbhd(space_name, n, k, model, degree, with_chain, payload, output):
    """Index of the degree-D curve neighborhood of PAYLOAD."""
    def body():
        started = time.perf_counter()
        sp = resolve_space(space_name, n, k)
        doc = do_nbhd(sp, model, payload, degree, with_chain)
        text = "\n".join(doc["chain"]) if with_chain else doc["result"]
        _emit(doc, output, text, started)
    _run(body)


@main.command("mindeg")
@with_space
@click.option("--model", type=model_choice, required=True)
@click.option("--l", "lam", required=True, help="Class lambda of the first factor.")
@click.option("--m", "mu", required=True, help="Class mu of the second factor.")
@click.option("--oracle", is_flag=True, help="Use the Weyl group oracle instead of diagrams.")
@click.option("--diagrams/--no-diagrams", default=False, help="Draw every diagram of the chain.")
@output_option
def mindeg_cmd(space_name, n, k, model, lam, mu, oracle, diagrams, output):
    """Smallest d such that q^d appears in the product of the classes L and M."""
    def body():
        started = time.perf_counter()
        sp = resolve_space(space_name, n, k)
        doc = do_mindeg(sp, model, lam, mu, oracle)
        lines = [f"d={doc['result']}"]
        for i, step in enumerate(doc["chain"]):
            lines.append(f"  degree {i}: {step}")
            if diagrams and doc["model"] != models.WINDOW:
                lines.extend("    " + row for row in render_diagram(models.parse_partition(step)).splitlines())
        _emit(doc, output, "\n".join(lines), started)
    _run(body)


@main.command()
@with_space
@click.option("--model", type=model_choice, required=True)
@click.argument("payload")
@output_option
def diagram(space_name, n, k, model, payload, output):
    """Draw PAYLOAD as a Young diagram (windows and words via P')."""
    def body():
        started = time.perf_counter()
        sp = resolve_space(space_name, n, k)
        doc = do_diagram(sp, model, payload)
        _emit(doc, output, doc["result"], started)
    _run(body)


@main.command()
@click.option("--space", "space_name", default=None, help="Verify one space only.")
@click.option("--n", "n", type=int, default=None)
@click.option("--k", "k", type=int, default=None)
@click.option("--max-letters", type=int, default=10, show_default=True)
@click.option("--workers", type=int, default=None, help="Worker processes (default: CPU count).")
@output_option
def verify(space_name, n, k, max_letters, workers, output):
    """Cross-check diagram and Weyl-oracle minimum degrees on every pair."""
    def body():
        started = time.perf_counter()
        spaces = [resolve_space(space_name, n, k)] if space_name else shipped_spaces(max_letters)
        doc = do_verify(spaces, max_letters, workers or os.cpu_count() or 1)
        bad = doc["result"]["mismatches"]
        text = "\n".join(doc["result"]["reports"] + [
            f"{doc['result']['spaces']} spaces, {doc['result']['pairs']} pairs, {len(bad)} mismatches"])
        _emit(doc, output, text, started)
        if bad:
            raise CliFailure(EXIT_MISMATCH, f"{len(bad)} mismatches between diagram rule and oracle")
    _run(body)


def run_request(req: dict) -> dict:
    """Execute one batch request; raises CliFailure on bad input."""
    if not isinstance(req, dict) or "command" not in req:
        raise CliFailure(EXIT_PARSE, "batch: each line must be a JSON object with a 'command'")
    cmd = req["command"]
    if cmd == "verify":
        spaces = ([resolve_space(req["space"], req.get("n"), req.get("k"))]
                  if req.get("space") else shipped_spaces(req.get("max_letters", 10)))
        return do_verify(spaces, req.get("max_letters", 10), 1)
    try:
        sp = resolve_space(req["space"], req.get("n"), req.get("k"))
        if cmd == "convert":
            return do_convert(sp, req["from"], req["to"], req["payload"])
        if cmd == "nbhd":
            return do_nbhd(sp, req["model"], req["payload"], int(req["degree"]), bool(req.get("chain")))
        if cmd == "mindeg":
            return do_mindeg(sp, req["model"], req["lambda"], req["mu"], bool(req.get("oracle")))
        if cmd == "diagram":
            return do_diagram(sp, req["model"], req["payload"])
    except KeyError as e:
        raise CliFailure(EXIT_PARSE, f"batch: missing field {e}")
    except ValueError as e:
        raise CliFailure(EXIT_PARSE, f"batch: {e}")
    raise CliFailure(EXIT_PARSE, f"batch: unknown command {cmd!r}")


@main.command()
def batch():
    """Read one JSON request per line on stdin, write one JSON result per line.

    A failing line produces ``{"error": ..., "exit": code}``; the process exits
    with the largest code seen.
    """
    worst = 0
    for line in sys.stdin:
        if not line.strip():
            continue
        started = time.perf_counter()
        try:
            req = json.loads(line)
            doc = run_request(req)
            if req.get("command") == "verify" and doc["result"]["mismatches"]:
                worst = max(worst, EXIT_MISMATCH)
        except json.JSONDecodeError as e:
            doc, worst = {"error": f"batch: invalid JSON: {e.msg}", "exit": EXIT_PARSE}, max(worst, EXIT_PARSE)
        except CliFailure as e:
            doc, worst = {"error": str(e), "exit": e.code}, max(worst, e.code)
        doc["timing"] = {"microseconds": int((time.perf_counter() - started) * 1e6)}
        click.echo(dump_json(doc))
    sys.exit(worst)


if __name__ == "__main__":
    main()
