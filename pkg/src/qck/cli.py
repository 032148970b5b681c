"""Command line tool: seed construction, mutation, Laurent expansion,
verification, and the HTTP service.

Exit codes: 0 success, 2 invalid input (with the violated invariant named
on stderr), 3 failed verification.  Successful output on stdout is always
valid JSON; --json switches from indented to compact formatting.
"""

from __future__ import annotations

import json
import os
import sys

import click

from .cartan import CartanDatum
from .seeds import FrozenDirection, QuantumSeed, build_seed
from .torus import MutationState
from . import verifier as V


def _fail(message: str, code: int = 2):
    click.echo(f"error: {message}", err=True)
    sys.exit(code)


def _emit(obj, compact: bool):
    if compact:
        click.echo(json.dumps(obj, separators=(",", ":"), sort_keys=False))
    else:
        click.echo(json.dumps(obj, indent=2))


def _parse_cartan(cartan: str | None, cartan_matrix: str | None) -> CartanDatum:
    if cartan and cartan_matrix:
        _fail("give either --cartan or --cartan-matrix, not both")
    if cartan:
        try:
            return CartanDatum.named(cartan)
        except ValueError as exc:
            _fail(str(exc))
    if cartan_matrix:
        try:
            rows = [
                [int(x) for x in row.split(",") if x.strip() != ""]
                for row in cartan_matrix.split(";")
            ]
            return CartanDatum.from_matrix(rows)
        except ValueError as exc:
            _fail(f"bad Cartan matrix: {exc}")
    _fail("a Cartan datum is required (--cartan or --cartan-matrix)")


def _parse_word(word: str):
    if word is None or word.strip() == "":
        return ()
    try:
        return tuple(int(x) for x in word.split(","))
    except ValueError:
        _fail(f"bad word {word!r}: expected comma-separated indices")


def _load_seed(path: str) -> QuantumSeed:
    try:
        with open(path) as fh:
            return QuantumSeed.from_json(json.load(fh))
    except FileNotFoundError:
        _fail(f"seed file not found: {path}")
    except (KeyError, ValueError, json.JSONDecodeError) as exc:
        _fail(f"bad seed file {path}: {exc}")


@click.group()
def main():
    """Exact quantum cluster seeds, mutation, and identity verification."""


@main.command("seed")
@click.option("--cartan", default=None, help="Named Cartan matrix (A1..A4, D4).")
@click.option("--cartan-matrix", default=None, help='Explicit rows, e.g. "2,-1;-1,2".')
@click.option("--word", required=True, help="Reduced word, comma separated, 1-based.")
@click.option("--json", "compact", is_flag=True, help="Compact JSON output.")
def seed_cmd(cartan, cartan_matrix, word, compact):
    """Build the initial quantum seed for a reduced word."""
    datum = _parse_cartan(cartan, cartan_matrix)
    letters = _parse_word(word)
    try:
        seed = build_seed(datum, letters)
    except Exception as exc:
        _fail(f"word not reduced or invalid: {exc}")
    _emit(seed.to_json(), compact)


def _replay(seed: QuantumSeed, sequence):
    state = MutationState.initial(seed)
    for step, k in enumerate(sequence):
        try:
            state = state.mutate(k)
        except FrozenDirection:
            _fail(f"FrozenDirection at step {step + 1}: index {k} is frozen")
    return state


@main.command("mutate")
@click.option("--seed", "seed_path", required=True, help="Seed JSON file.")
@click.option("--sequence", required=True, help="Mutation directions, comma separated.")
@click.option("--json", "compact", is_flag=True)
def mutate_cmd(seed_path, sequence, compact):
    """Apply a mutation sequence; emit the final seed, variables, and shifts."""
    seed = _load_seed(seed_path)
    state = _replay(seed, _parse_word(sequence))
    _emit(
        {
            "seed": state.seed.to_json(),
            "variables": [x.to_json() for x in state.variables],
            "steps": state.history,
        },
        compact,
    )


@main.command("laurent")
@click.option("--seed", "seed_path", required=True, help="Seed JSON file.")
@click.option("--sequence", default="", help="Mutation directions, comma separated.")
@click.option("--json", "compact", is_flag=True)
def laurent_cmd(seed_path, sequence, compact):
    """Laurent expansions of the cluster variables in initial coordinates."""
    seed = _load_seed(seed_path)
    state = _replay(seed, _parse_word(sequence))
    _emit(
        {
            "variables": [x.to_json() for x in state.variables],
            "denominator_support": [x.denominator_support() for x in state.variables],
        },
        compact,
    )


@main.command("verify")
@click.argument("check")
@click.option("--seed", "seed_path", default=None, help="Seed JSON file.")
@click.option("--cartan", default=None)
@click.option("--cartan-matrix", default=None)
@click.option("--word", default=None, help="Reduced word for seed-based checks.")
@click.option("--at", "at_k", default=None, type=int, help="Direction k / index i.")
@click.option("--pair", default=None, help="Index pair i,j for commutation.")
@click.option("--u", "u_word", default=None, help="Word u for tsystem/delta.")
@click.option("--v", "v_word", default=None, help="Word v for tsystem.")
@click.option("--json", "compact", is_flag=True)
def verify_cmd(check, seed_path, cartan, cartan_matrix, word, at_k, pair, u_word, v_word, compact):
    """Run one verification check; exit 0 iff it passes, 3 on failure."""
    known = {"commutation", "tsystem", "exchange", "delta", "seed-conditions"}
    if check not in known:
        _fail(f"unknown check {check!r}; known: {sorted(known)}")

    if seed_path:
        seed = _load_seed(seed_path)
        datum = seed.cartan
    elif cartan or cartan_matrix:
        datum = _parse_cartan(cartan, cartan_matrix)
        seed = build_seed(datum, _parse_word(word)) if word else None
    else:
        _fail("give --seed or a Cartan datum")

    try:
        if check == "commutation":
            if not pair:
                _fail("commutation needs --pair i,j")
            i, j = (int(x) for x in pair.split(","))
            report = V.verify_commutation(seed, i, j)
        elif check == "exchange":
            if at_k is None:
                _fail("exchange needs --at k")
            report = V.verify_exchange(seed, at_k)
        elif check == "seed-conditions":
            report = V.verify_seed_conditions(seed)
        elif check == "tsystem":
            if at_k is None or u_word is None or v_word is None:
                _fail("tsystem needs --u, --v and --at i")
            report = V.verify_tsystem(datum, _parse_word(u_word), _parse_word(v_word), at_k)
        else:  # delta
            if at_k is None or u_word is None:
                _fail("delta needs --u (the word x) and --at i")
            report = V.verify_delta_ledger(datum, _parse_word(u_word), at_k)
    except FrozenDirection as exc:
        _fail(str(exc))
    except Exception as exc:
        _fail(f"{type(exc).__name__}: {exc}")

    _emit(report.to_json(), compact)
    if not report.passed:
        sys.exit(3)


@main.command("serve")
@click.option("--port", default=None, type=int, help="Port (default QCK_PORT or 8640).")
@click.option("--host", default="127.0.0.1")
def serve_cmd(port, host):
    """Run the HTTP service."""
    import uvicorn

    from .service import create_app

    if port is None:
        port = int(os.environ.get("QCK_PORT", "8640"))
    uvicorn.run(create_app(), host=host, port=port, log_level="warning")


if __name__ == "__main__":
    main()
