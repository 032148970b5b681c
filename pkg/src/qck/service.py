"""HTTP service over the seed engine.

Sessions are persisted as JSON files under QCK_STATE_DIR (default
./qck-state): the stored record is the Cartan datum, the reduced word and
the mutation history, and the state is replayed deterministically on load,
so undo restores byte-identical seed JSON.  Per-session writes are
serialized by an in-process lock; reads and verification jobs are free to
run concurrently.
"""

from __future__ import annotations

import json
import os
import threading
import time
import uuid
from pathlib import Path

from fastapi import FastAPI, HTTPException
from fastapi.responses import JSONResponse

from .cartan import CartanDatum
from .seeds import FrozenDirection, QuantumSeed, build_seed
from .torus import MutationState
from . import verifier as V


class SessionStore:
    def __init__(self, root: str | None = None):
        self.root = Path(root or os.environ.get("QCK_STATE_DIR", "./qck-state"))
        self.root.mkdir(parents=True, exist_ok=True)
        self._locks: dict[str, threading.Lock] = {}
        self._guard = threading.Lock()

    def lock(self, sid: str) -> threading.Lock:
        with self._guard:
            return self._locks.setdefault(sid, threading.Lock())

    def _path(self, sid: str) -> Path:
        return self.root / f"{sid}.json"

    def create(self, cartan: CartanDatum, word) -> dict:
        sid = uuid.uuid4().hex
        now = time.time()
        record = {
            "id": sid,
            "cartan": cartan.to_json(),
            "word": list(word),
            "history": [],
            "created": now,
            "modified": now,
        }
        self._write(record)
        return record

    def _write(self, record):
        self._path(record["id"]).write_text(json.dumps(record))

    def load(self, sid: str) -> dict:
        path = self._path(sid)
        if not path.exists():
            raise KeyError(sid)
        return json.loads(path.read_text())

    def update(self, record):
        record["modified"] = time.time()
        self._write(record)


def _replay(record) -> MutationState:
    cartan = CartanDatum.from_json(record["cartan"])
    seed = build_seed(cartan, record["word"])
    state = MutationState.initial(seed)
    for step in record["history"]:
        state = state.mutate(step["k"])
    return state


def _state_payload(record, state: MutationState) -> dict:
    return {
        "id": record["id"],
        "seed": state.seed.to_json(),
        "history": state.history,
    }


def create_app(store: SessionStore | None = None) -> FastAPI:
    app = FastAPI(title="qck", version="0.1.0")
    store = store or SessionStore()

    def _get_record(sid: str):
        try:
            return store.load(sid)
        except KeyError:
            raise HTTPException(status_code=404, detail=f"unknown session {sid}")

    @app.post("/api/seeds")
    def create_seed(body: dict):
        try:
            if "cartan" in body and isinstance(body["cartan"], str):
                cartan = CartanDatum.named(body["cartan"])
            else:
                cartan = CartanDatum.from_json(body["cartan"])
            word = [int(x) for x in body["word"]]
            seed = build_seed(cartan, word)
        except HTTPException:
            raise
        except Exception as exc:
            raise HTTPException(status_code=400, detail=str(exc))
        record = store.create(cartan, word)
        return {"id": record["id"], "seed": seed.to_json()}

    @app.get("/api/seeds/{sid}")
    def get_seed(sid: str):
        record = _get_record(sid)
        return _state_payload(record, _replay(record))

    @app.get("/api/seeds/{sid}/variables")
    def get_variables(sid: str):
        record = _get_record(sid)
        state = _replay(record)
        return {
            "id": sid,
            "variables": [x.to_json() for x in state.variables],
            "denominator_support": [x.denominator_support() for x in state.variables],
        }

    @app.post("/api/seeds/{sid}/mutate")
    def mutate(sid: str, body: dict):
        k = body.get("k")
        dry_run = bool(body.get("dry_run", False))
        if not isinstance(k, int):
            raise HTTPException(status_code=400, detail="body must carry an integer k")
        with store.lock(sid):
            record = _get_record(sid)
            state = _replay(record)
            try:
                new_state = state.mutate(k)
            except FrozenDirection:
                raise HTTPException(status_code=400, detail="FrozenDirection")
            except Exception as exc:
                raise HTTPException(status_code=400, detail=str(exc))
            step = new_state.history[-1]
            if not dry_run:
                record["history"].append(step)
                store.update(record)
        return {
            "seed": new_state.seed.to_json(),
            "exchanged_variable": new_state.variables[k - 1].to_json(),
            "m_k": step["m_k"],
            "m_k_prime": step["m_k_prime"],
            "dry_run": dry_run,
        }

    @app.post("/api/seeds/{sid}/undo")
    def undo(sid: str):
        with store.lock(sid):
            record = _get_record(sid)
            if not record["history"]:
                raise HTTPException(status_code=400, detail="nothing to undo")
            record["history"].pop()
            store.update(record)
            state = _replay(record)
        return _state_payload(record, state)

    @app.post("/api/verify")
    def verify(body: dict):
        check = body.get("check")
        params = body.get("params", {})
        try:
            if "seed" in params:
                seed = QuantumSeed.from_json(params["seed"])
                cartan = seed.cartan
            else:
                raw = params.get("cartan")
                cartan = (
                    CartanDatum.named(raw) if isinstance(raw, str) else CartanDatum.from_json(raw)
                )
                seed = build_seed(cartan, params["word"]) if params.get("word") else None
            if check == "commutation":
                i, j = params["pair"]
                report = V.verify_commutation(seed, int(i), int(j))
            elif check == "exchange":
                report = V.verify_exchange(seed, int(params["at"]))
            elif check == "seed-conditions":
                report = V.verify_seed_conditions(seed)
            elif check == "tsystem":
                report = V.verify_tsystem(
                    cartan, params["u"], params["v"], int(params["i"])
                )
            elif check == "delta":
                report = V.verify_delta_ledger(cartan, params["x"], int(params["i"]))
            else:
                raise HTTPException(status_code=400, detail=f"unknown check {check!r}")
        except HTTPException:
            raise
        except Exception as exc:
            raise HTTPException(status_code=400, detail=f"{type(exc).__name__}: {exc}")
        payload = report.to_json()
        if not report.passed:
            return JSONResponse(status_code=422, content=payload)
        return payload

    return app
