"""Service layer: policy text in, response models out.

Single home for the parse -> validate -> closure -> severity pipeline.
Both front ends are thin clients of these functions: the FastAPI routes
map the typed errors to HTTP statuses, the CLI maps them to exit codes.
"""

from __future__ import annotations

from .dot import render_dot
from .errors import PolicySyntaxError
from .generate import GenParams, generate_policy
from .inherit import PermissionClosure, compute_closure, permission_carriers
from .model import RoleTree, depths, height
from .parser import diagnose, parse, validate
from .render import format_fraction, fraction_str
from .schemas import (
    AnalyzeResponse,
    DiagnosticOut,
    ExplainResponse,
    GenRequest,
    PathOut,
    PermissionRow,
    ValidateResponse,
)
from .severity import SeverityReport, explain, severity_report


def load_tree(text: str) -> RoleTree:
    """Parse and validate policy text; raises with full diagnostics on failure."""
    return validate(parse(text))


def _diag_out(diags) -> list[DiagnosticOut]:
    return [
        DiagnosticOut(severity=d.severity, code=d.code, line=d.line, message=d.message)
        for d in diags
    ]


def validate_policy(text: str) -> ValidateResponse:
    """Validation as an outcome, never an exception.

    On success the response carries the summary counts plus any warnings;
    on failure, every diagnostic.
    """
    try:
        doc = parse(text)
    except PolicySyntaxError as exc:
        return ValidateResponse(ok=False, diagnostics=_diag_out(exc.diagnostics))
    diags = diagnose(doc)
    if any(d.severity == "error" for d in diags):
        return ValidateResponse(ok=False, diagnostics=_diag_out(diags))
    tree = validate(doc)
    closure = compute_closure(tree)
    return ValidateResponse(
        ok=True,
        roles=len(tree.roles),
        permissions=closure.counts[tree.root],
        depth=height(tree),
        diagnostics=_diag_out(diags),  # warnings only at this point
    )


def _analysis(text: str) -> tuple[RoleTree, PermissionClosure, SeverityReport]:
    tree = load_tree(text)
    closure = compute_closure(tree)
    return tree, closure, severity_report(tree, closure)


def analyze_policy(text: str, precision: int = 4) -> AnalyzeResponse:
    """Severity ranking with carrier counts and hierarchy level spans."""
    tree, closure, report = _analysis(text)
    level = depths(tree)
    rows = []
    for p in report.ranking:
        carriers = permission_carriers(closure, p)
        rows.append(PermissionRow(
            permission=p,
            severity=format_fraction(report.severities[p], precision),
            severity_exact=fraction_str(report.severities[p]),
            num_roles=len(carriers),
            min_level=min(level[r] for r in carriers),
            max_level=max(level[r] for r in carriers),
        ))
    return AnalyzeResponse(permissions=rows)


def explain_permission(text: str, permission: str, precision: int = 4) -> ExplainResponse:
    """Per-path breakdown of one permission's severity."""
    _, _, report = _analysis(text)
    contributions = explain(report, permission)
    total = report.severities[permission]
    return ExplainResponse(
        permission=permission,
        paths=[
            PathOut(
                roles=list(c.roles),
                product=format_fraction(c.product, precision),
                product_exact=fraction_str(c.product),
            )
            for c in contributions
        ],
        total=format_fraction(total, precision),
        total_exact=fraction_str(total),
    )


def generate(req: GenRequest) -> str:
    """Random policy text for the given generator parameters."""
    return generate_policy(GenParams(
        roles=req.roles,
        perms=req.perms,
        max_children=req.max_children,
        max_leaf_perms=req.max_leaf_perms,
        seed=req.seed,
    ))


def policy_dot(text: str, view: str = "tree") -> str:
    """DOT rendering of a valid policy."""
    return render_dot(load_tree(text), view)
