"""Pydantic request/response models for the HTTP service.

The CLI renders these same models, so the JSON a client receives over HTTP
is byte-identical to ``rbac-sev ... --format json`` for the same inputs.
Severities travel both as fixed-point decimals (presentation) and as exact
``num/den`` strings, so no downstream tool ever depends on rounding.
"""

from __future__ import annotations

from typing import Literal

from pydantic import BaseModel, Field


class DiagnosticOut(BaseModel):
    severity: Literal["error", "warning"]
    code: str
    line: int | None = None
    message: str


class PolicyRequest(BaseModel):
    policy: str


class ValidateResponse(BaseModel):
    ok: bool
    roles: int | None = None
    permissions: int | None = None
    depth: int | None = None
    diagnostics: list[DiagnosticOut] = Field(default_factory=list)


class AnalyzeRequest(PolicyRequest):
    precision: int = Field(default=4, ge=1, le=12)


class PermissionRow(BaseModel):
    permission: str
    severity: str
    severity_exact: str
    num_roles: int
    min_level: int
    max_level: int


class AnalyzeResponse(BaseModel):
    permissions: list[PermissionRow]


class ExplainRequest(PolicyRequest):
    permission: str
    precision: int = Field(default=4, ge=1, le=12)


class PathOut(BaseModel):
    roles: list[str]
    product: str
    product_exact: str


class ExplainResponse(BaseModel):
    permission: str
    paths: list[PathOut]
    total: str
    total_exact: str


class GenRequest(BaseModel):
    roles: int = Field(ge=1)
    perms: int = Field(ge=1)
    max_children: int = Field(default=4, ge=1)
    max_leaf_perms: int = Field(default=5, ge=1)
    seed: int = Field(default=0, ge=0, lt=2**64)


class GenResponse(BaseModel):
    policy: str


class DotRequest(PolicyRequest):
    view: Literal["tree", "extended", "merged"] = "tree"


class DotResponse(BaseModel):
    dot: str
