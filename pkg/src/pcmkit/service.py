"""Stateless HTTP JSON facade over analysis, localization, and repair proposals.

Endpoints:

  POST /api/analyze          matrix JSON (optional "ri_table") -> full indicator report
  POST /api/propose-repairs  matrix JSON -> 3 repair candidates, best first
  GET  /api/generate         ?family=cpc|fpc&x=X&n=N -> matrix JSON

Every float in every response is serialized with 12 significant digits
(``round12``), which keeps client-side round trips exact: applying a proposed
repair value and re-analyzing reproduces the projected kii bit-for-bit.
Validation failures return 400 with ``{"error": {"code", "message"}}``;
asking for repairs of a consistent matrix returns 409. The service keeps no
state; identical bodies always produce identical responses.
"""

from __future__ import annotations

import math
from pathlib import Path
from typing import Any

from fastapi import FastAPI, Request
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse
from fastapi.staticfiles import StaticFiles

from .analysis import analyze_matrix
from .indicators import kii
from .matrix import MAX_SIZE, MatrixValidationError, PCMatrix, is_consistent
from .matrixio import matrix_from_dict
from .reduction import repair_candidates
from .spectral import DEFAULT_RI_TABLE, RITable, cpc, fpc


def round12(value: float) -> float:
    """Round to 12 significant digits (the service's serialization contract)."""
    return float(f"{value:.12g}")


def _round12_opt(value: float | None) -> float | None:
    return None if value is None else round12(value)


class _ServiceError(Exception):
    def __init__(self, status: int, code: str, message: str):
        super().__init__(message)
        self.status = status
        self.code = code
        self.message = message


def _error_response(status: int, code: str, message: str) -> JSONResponse:
    return JSONResponse(status_code=status, content={"error": {"code": code, "message": message}})


async def _read_json(request: Request) -> Any:
    try:
        return await request.json()
    except Exception:
        raise _ServiceError(400, "bad_json", "request body is not valid JSON") from None


def _matrix_from_body(body: Any) -> PCMatrix:
    try:
        return matrix_from_dict(body)
    except MatrixValidationError as exc:
        raise _ServiceError(400, exc.code, str(exc)) from None


def _ri_table_from_body(body: Any, default: RITable) -> RITable:
    if not isinstance(body, dict) or "ri_table" not in body:
        return default
    raw = body["ri_table"]
    if not isinstance(raw, dict):
        raise _ServiceError(400, "bad_ri_table", '"ri_table" must be an object of n -> value')
    values: dict[int, float] = {}
    for key, value in raw.items():
        try:
            n = int(key)
        except (TypeError, ValueError):
            raise _ServiceError(400, "bad_ri_table", f"RI key {key!r} is not an integer") from None
        if isinstance(value, bool) or not isinstance(value, (int, float)):
            raise _ServiceError(400, "bad_ri_table", f"RI value for n={n} must be a number")
        values[n] = float(value)
    try:
        return RITable(values)
    except ValueError as exc:
        raise _ServiceError(400, "bad_ri_table", str(exc)) from None


def _analyze_payload(matrix: PCMatrix, ri_table: RITable) -> dict[str, Any]:
    report = analyze_matrix(matrix, ri_table=ri_table)
    worst = None
    if report.worst_triad is not None:
        t = report.worst_triad
        worst = {"i": t.i, "j": t.j, "k": t.k, "value": round12(report.kii)}
    return {
        "n": report.n,
        "consistent": report.consistent,
        "kii": _round12_opt(report.kii),
        "chain_ii": _round12_opt(report.chain_ii),
        "lambda_max": round12(report.lambda_max),
        "ci": round12(report.ci),
        "cr": _round12_opt(report.cr),
        "ri": _round12_opt(report.ri),
        "weights": [round12(w) for w in report.weights],
        "worst_triad": worst,
        "triad_heat": [
            {"i": s.i, "j": s.j, "k": s.k, "ii": round12(s.value)}
            for s in report.triad_scores
        ],
    }


def create_app(
    ri_table: RITable = DEFAULT_RI_TABLE,
    frontend_dir: str | Path | None = None,
) -> FastAPI:
    app = FastAPI(title="pcmkit", docs_url=None, redoc_url=None)
    app.add_middleware(
        CORSMiddleware,
        allow_origins=["*"],
        allow_methods=["*"],
        allow_headers=["*"],
    )

    @app.exception_handler(_ServiceError)
    async def _handle_service_error(request: Request, exc: _ServiceError):
        return _error_response(exc.status, exc.code, exc.message)

    @app.post("/api/analyze")
    async def analyze(request: Request):
        body = await _read_json(request)
        matrix = _matrix_from_body(body)
        table = _ri_table_from_body(body, ri_table)
        return _analyze_payload(matrix, table)

    @app.post("/api/propose-repairs")
    async def propose_repairs(request: Request):
        body = await _read_json(request)
        matrix = _matrix_from_body(body)
        if matrix.n < 3 or is_consistent(matrix):
            raise _ServiceError(409, "already_consistent", "matrix has no inconsistency to repair")
        candidates = []
        for cand in repair_candidates(matrix):
            new = round12(cand.new_value)
            # project from the rounded value so a client applying it sees this number
            projected = kii(matrix.with_entry(cand.cell[0], cand.cell[1], new)).value
            candidates.append(
                {
                    "cell": [cand.cell[0], cand.cell[1]],
                    "old": round12(cand.old_value),
                    "new": new,
                    "projected_kii": round12(projected),
                }
            )
        candidates.sort(key=lambda c: c["projected_kii"])  # stable: preserves candidate order on ties
        return candidates

    @app.get("/api/generate")
    async def generate(request: Request):
        params = request.query_params
        family = params.get("family")
        if family not in ("cpc", "fpc"):
            raise _ServiceError(400, "bad_family", "family must be 'cpc' or 'fpc'")
        try:
            x = float(params.get("x", ""))
        except ValueError:
            raise _ServiceError(400, "bad_value", "x must be a number") from None
        try:
            n = int(params.get("n", ""))
        except ValueError:
            raise _ServiceError(400, "bad_value", "n must be an integer") from None
        if not (math.isfinite(x) and x > 0):
            raise _ServiceError(400, "bad_value", f"x must be positive and finite, got {x!r}")
        if not (3 <= n <= MAX_SIZE):
            raise _ServiceError(400, "bad_value", f"n must be between 3 and {MAX_SIZE}, got {n}")
        matrix = cpc(x, n) if family == "cpc" else fpc(x, n)
        return {
            "n": matrix.n,
            "entries": [[round12(v) for v in row] for row in matrix.to_rows()],
        }

    if frontend_dir is not None:
        frontend_dir = Path(frontend_dir)
        if frontend_dir.is_dir():
            app.mount("/", StaticFiles(directory=frontend_dir, html=True), name="ui")

    return app
