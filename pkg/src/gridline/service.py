"""HTTP service.

JSON-over-HTTP endpoints over an immutable network snapshot that is
replaced atomically by POST /network (compare-and-swap on the snapshot
version).  Response bodies come from the shared payload builders, so they
are byte-identical to the CLI's JSON output; every response carries the
snapshot version in the X-Snapshot-Version header.

Status codes: 400 validation failure (with a violation list), 404 unknown
preset or dataset, 409 stale base_version on mutation.
"""

from __future__ import annotations

import json
import threading
from pathlib import Path

from fastapi import FastAPI, Request, Response
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse
from fastapi.staticfiles import StaticFiles

from . import attacks, faulttree, payloads
from .errors import (FormatError, GridlineError, ScenarioError,
                     UnknownPresetError, ValidationError)
from .network import TransitNetwork, load_bundled, parse_dict

VERSION_HEADER = "X-Snapshot-Version"


class ServiceState:
    """Mutable service state: the working snapshot and the fixed tree."""

    def __init__(self, network: TransitNetwork, tree: faulttree.FaultTree,
                 curve: faulttree.ReductionCurve):
        self.lock = threading.Lock()
        self.network = network
        self.version = payloads.snapshot_version(network)
        self.tree = tree
        self.curve = curve

    def snapshot(self) -> tuple[TransitNetwork, str]:
        with self.lock:
            return self.network, self.version

    def replace(self, network: TransitNetwork, base_version: str) -> str | None:
        """Swap the snapshot if base_version is current; returns the new
        version, or None when the caller's base is stale."""
        with self.lock:
            if base_version != self.version:
                return None
            self.network = network
            self.version = payloads.snapshot_version(network)
            return self.version


def _json_response(payload, version: str, status: int = 200) -> Response:
    return Response(content=payloads.dump_bytes(payload), status_code=status,
                    media_type="application/json",
                    headers={VERSION_HEADER: version})


def _error(status: int, message: str, violations: list[str] | None = None) -> Response:
    body: dict = {"error": message}
    if violations is not None:
        body["violations"] = violations
    return JSONResponse(status_code=status, content=body)


def _map_error(exc: Exception) -> Response:
    if isinstance(exc, ValidationError):
        return _error(400, "validation failed", [str(v) for v in exc.violations])
    if isinstance(exc, UnknownPresetError):
        return _error(404, str(exc))
    if isinstance(exc, GridlineError):
        return _error(400, str(exc))
    raise exc


def _default_ui_dir() -> Path | None:
    candidate = Path(__file__).resolve().parents[2] / "frontend" / "dist"
    return candidate if candidate.is_dir() else None


def create_app(network: TransitNetwork | None = None,
               tree: faulttree.FaultTree | None = None,
               curve: faulttree.ReductionCurve | None = None,
               ui_dir: str | Path | None = None) -> FastAPI:
    if network is None:
        network = load_bundled("greenline17")
    if tree is None or curve is None:
        tree, curve = faulttree.load_bundled_tree()
    state = ServiceState(network, tree, curve)

    app = FastAPI(title="gridline", docs_url=None, redoc_url=None)
    app.state.gridline = state
    app.add_middleware(CORSMiddleware, allow_origins=["*"], allow_methods=["*"],
                       allow_headers=["*"])

    @app.middleware("http")
    async def stamp_version(request: Request, call_next):
        response = await call_next(request)
        if VERSION_HEADER not in response.headers:
            response.headers[VERSION_HEADER] = state.snapshot()[1]
        return response

    async def _body(request: Request) -> dict:
        try:
            body = await request.json()
        except (json.JSONDecodeError, UnicodeDecodeError):
            raise FormatError("request body is not valid JSON", "body")
        if not isinstance(body, dict):
            raise FormatError("expected a JSON object", "body")
        return body

    def _check_fields(body: dict, allowed: tuple[str, ...]) -> None:
        for field in body:
            if field not in allowed:
                raise FormatError(f"unknown field {field!r}", "body")

    def _seed_of(body: dict) -> int | None:
        seed = body.get("seed")
        if seed is None:
            return None
        if isinstance(seed, bool) or not isinstance(seed, int) or seed < 0:
            raise FormatError("seed must be a non-negative integer", "body.seed")
        return seed

    @app.get("/network")
    async def get_network():
        network, version = state.snapshot()
        return _json_response(payloads.network_payload(network), version)

    @app.post("/network")
    async def post_network(request: Request):
        try:
            body = await _body(request)
            _check_fields(body, ("base_version", "network"))
            for field in ("base_version", "network"):
                if field not in body:
                    raise FormatError(f"missing field {field!r}", "body")
            if not isinstance(body["base_version"], str):
                raise FormatError("base_version must be a string", "body.base_version")
            if not isinstance(body["network"], dict):
                raise FormatError("network must be an object", "body.network")
            replacement = parse_dict(body["network"])
        except Exception as exc:
            return _map_error(exc)
        new_version = state.replace(replacement, body["base_version"])
        if new_version is None:
            return _error(409, "stale base_version; fetch the current snapshot first")
        return _json_response({"version": new_version}, new_version)

    @app.get("/metrics")
    async def get_metrics():
        network, version = state.snapshot()
        try:
            payload = payloads.metrics_payload(network)
        except Exception as exc:
            return _map_error(exc)
        return _json_response(payload, version)

    @app.get("/risk")
    async def get_risk():
        network, version = state.snapshot()
        try:
            payload = payloads.risk_payload(network)
        except Exception as exc:
            return _map_error(exc)
        return _json_response(payload, version)

    @app.get("/resilience")
    async def get_resilience(request: Request):
        network, version = state.snapshot()
        params = request.query_params
        try:
            for key in params:
                if key not in ("gamma", "trials", "seed"):
                    raise FormatError(f"unknown query parameter {key!r}", "query")
            estimate = None
            if "gamma" in params:
                try:
                    gamma = float(params["gamma"])
                except ValueError:
                    raise FormatError("gamma must be a number", "query.gamma")
                try:
                    trials = int(params.get("trials", "10000"))
                except ValueError:
                    raise FormatError("trials must be an integer", "query.trials")
                if "seed" not in params:
                    raise FormatError(
                        "seed is required for a reproducible estimate", "query.seed")
                try:
                    seed = int(params["seed"])
                except ValueError:
                    raise FormatError("seed must be an integer", "query.seed")
                estimate = payloads.estimate_payload(network, gamma, trials, seed)
            elif "trials" in params or "seed" in params:
                raise FormatError("trials and seed only apply with gamma", "query")
            payload = payloads.resilience_payload(network, estimate)
        except Exception as exc:
            return _map_error(exc)
        return _json_response(payload, version)

    @app.post("/faulttree/allocate")
    async def post_allocate(request: Request):
        _, version = state.snapshot()
        try:
            body = await _body(request)
            _check_fields(body, ("budget", "allocator", "step"))
            if "budget" not in body:
                raise FormatError("missing field 'budget'", "body")
            budget = body["budget"]
            if isinstance(budget, bool) or not isinstance(budget, (int, float)):
                raise FormatError("budget must be a number", "body.budget")
            allocator = body.get("allocator", "proportional")
            if allocator not in faulttree.ALLOCATORS:
                raise FormatError(
                    f"allocator must be one of {', '.join(faulttree.ALLOCATORS)}",
                    "body.allocator")
            step = body.get("step", faulttree.DEFAULT_STEP)
            if isinstance(step, bool) or not isinstance(step, (int, float)) or step <= 0:
                raise FormatError("step must be a positive number", "body.step")
            payload = payloads.faulttree_payload(state.tree, state.curve,
                                                 float(budget), allocator,
                                                 float(step))
        except Exception as exc:
            return _map_error(exc)
        return _json_response(payload, version)

    @app.post("/attack")
    async def post_attack(request: Request):
        network, version = state.snapshot()
        try:
            body = await _body(request)
            _check_fields(body, ("preset", "scenario", "seed"))
            has_preset = "preset" in body
            has_scenario = "scenario" in body
            if has_preset == has_scenario:
                raise FormatError("provide exactly one of 'preset' or 'scenario'",
                                  "body")
            seed = _seed_of(body)
            if has_preset:
                if not isinstance(body["preset"], str):
                    raise FormatError("preset must be a string", "body.preset")
                scenario = attacks.preset(body["preset"])
            else:
                if not isinstance(body["scenario"], dict):
                    raise FormatError("scenario must be an object", "body.scenario")
                scenario = attacks.parse_scenario_dict(body["scenario"])
            if attacks.requires_seed(scenario) and seed is None:
                raise ScenarioError("scenario has random steps; a seed is required")
            after = attacks.apply_scenario(network, scenario, seed)
            payload = payloads.attack_payload(network, after)
        except Exception as exc:
            return _map_error(exc)
        return _json_response(payload, version)

    @app.get("/roi-curve")
    async def get_roi_curve(request: Request):
        _, version = state.snapshot()
        params = request.query_params
        try:
            for key in params:
                if key not in ("budgets", "allocator", "step"):
                    raise FormatError(f"unknown query parameter {key!r}", "query")
            if "budgets" not in params:
                raise FormatError("missing query parameter 'budgets'", "query")
            try:
                budgets = [float(part) for part in params["budgets"].split(",")
                           if part.strip() != ""]
            except ValueError:
                raise FormatError("budgets must be comma-separated numbers",
                                  "query.budgets")
            allocator = params.get("allocator", "proportional")
            if allocator not in faulttree.ALLOCATORS:
                raise FormatError(
                    f"allocator must be one of {', '.join(faulttree.ALLOCATORS)}",
                    "query.allocator")
            try:
                step = float(params.get("step", str(faulttree.DEFAULT_STEP)))
            except ValueError:
                raise FormatError("step must be a number", "query.step")
            payload = payloads.roi_payload(state.tree, state.curve, budgets,
                                           allocator, step)
        except Exception as exc:
            return _map_error(exc)
        return _json_response(payload, version)

    resolved_ui = Path(ui_dir) if ui_dir is not None else _default_ui_dir()
    if resolved_ui is not None and resolved_ui.is_dir():
        app.mount("/ui", StaticFiles(directory=str(resolved_ui), html=True),
                  name="ui")

    return app
