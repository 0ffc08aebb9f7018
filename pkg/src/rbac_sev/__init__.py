"""Severity levels of RBAC permissions, derived from the role hierarchy.

The public surface: parse/validate/serialize policy text, compute the
permission inheritance closure, weight sibling groups by permission-count
ratios, and aggregate severities by path products over the extended role
tree. Everything numeric is an exact rational.
"""

from .ahp import (
    PairwiseMatrix,
    build_matrix,
    check_consistency,
    weights_closed_form,
    weights_via_matrix,
)
from .dot import render_dot
from .errors import (
    EmptyGroupError,
    InvalidParams,
    PolicyError,
    PolicySyntaxError,
    PolicyValidationError,
    UnknownPermission,
    UnknownRole,
)
from .generate import GenParams, generate_policy
from .inherit import PermissionClosure, compute_closure, permission_carriers
from .model import (
    PermissionId,
    Rational,
    RoleId,
    RoleTree,
    depth,
    depths,
    dfs_order,
    height,
    leaves,
)
from .parser import (
    Diagnostic,
    PolicyDocument,
    diagnose,
    parse,
    serialize,
    validate,
)
from .severity import (
    ExtendedRoleTree,
    PathContribution,
    SeverityReport,
    WeightedTree,
    assign_weights,
    explain,
    extend,
    severity_by_mass_flow,
    severity_by_paths,
    severity_report,
)

__version__ = "0.1.0"

__all__ = [
    "PairwiseMatrix",
    "build_matrix",
    "check_consistency",
    "weights_closed_form",
    "weights_via_matrix",
    "render_dot",
    "EmptyGroupError",
    "InvalidParams",
    "PolicyError",
    "PolicySyntaxError",
    "PolicyValidationError",
    "UnknownPermission",
    "UnknownRole",
    "GenParams",
    "generate_policy",
    "PermissionClosure",
    "compute_closure",
    "permission_carriers",
    "PermissionId",
    "Rational",
    "RoleId",
    "RoleTree",
    "depth",
    "depths",
    "dfs_order",
    "height",
    "leaves",
    "Diagnostic",
    "PolicyDocument",
    "diagnose",
    "parse",
    "serialize",
    "validate",
    "ExtendedRoleTree",
    "PathContribution",
    "SeverityReport",
    "WeightedTree",
    "assign_weights",
    "explain",
    "extend",
    "severity_by_mass_flow",
    "severity_by_paths",
    "severity_report",
    "__version__",
]
