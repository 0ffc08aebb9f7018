"""HTTP front end.

Run with: ``uvicorn rbac_sev.api:app``. Policy problems map to 400 with the
full diagnostic list in the error detail; an unknown permission in /explain
maps to 404. POST /validate never errors on policy content: the validation
outcome is its payload.
"""

from __future__ import annotations

from fastapi import FastAPI, HTTPException

from . import service
from .errors import InvalidParams, PolicySyntaxError, PolicyValidationError, UnknownPermission
from .schemas import (
    AnalyzeRequest,
    AnalyzeResponse,
    DotRequest,
    DotResponse,
    ExplainRequest,
    ExplainResponse,
    GenRequest,
    GenResponse,
    PolicyRequest,
    ValidateResponse,
)

app = FastAPI(
    title="rbac-sev",
    description="Severity levels of RBAC permissions, derived from the role hierarchy.",
    version="0.1.0",
)


def _bad_policy(exc: PolicySyntaxError | PolicyValidationError) -> HTTPException:
    return HTTPException(status_code=400, detail={
        "code": "invalid-policy",
        "diagnostics": [
            {"severity": d.severity, "code": d.code, "line": d.line, "message": d.message}
            for d in exc.diagnostics
        ],
    })


@app.get("/health")
def health() -> dict:
    return {"status": "ok"}


@app.post("/validate", response_model=ValidateResponse)
def validate_endpoint(req: PolicyRequest) -> ValidateResponse:
    return service.validate_policy(req.policy)


@app.post("/analyze", response_model=AnalyzeResponse)
def analyze_endpoint(req: AnalyzeRequest) -> AnalyzeResponse:
    try:
        return service.analyze_policy(req.policy, req.precision)
    except (PolicySyntaxError, PolicyValidationError) as exc:
        raise _bad_policy(exc) from exc


@app.post("/explain", response_model=ExplainResponse)
def explain_endpoint(req: ExplainRequest) -> ExplainResponse:
    try:
        return service.explain_permission(req.policy, req.permission, req.precision)
    except (PolicySyntaxError, PolicyValidationError) as exc:
        raise _bad_policy(exc) from exc
    except UnknownPermission as exc:
        raise HTTPException(status_code=404, detail=str(exc)) from exc


@app.post("/gen", response_model=GenResponse)
def gen_endpoint(req: GenRequest) -> GenResponse:
    try:
        return GenResponse(policy=service.generate(req))
    except InvalidParams as exc:
        raise HTTPException(status_code=400, detail=str(exc)) from exc


@app.post("/dot", response_model=DotResponse)
def dot_endpoint(req: DotRequest) -> DotResponse:
    try:
        return DotResponse(dot=service.policy_dot(req.policy, req.view))
    except (PolicySyntaxError, PolicyValidationError) as exc:
        raise _bad_policy(exc) from exc
