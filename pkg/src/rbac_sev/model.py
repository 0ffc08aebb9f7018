"""Core domain types for role hierarchies.

Roles and permissions are plain token strings living in separate namespaces.
Every number flowing through the pipeline is an exact rational
(``fractions.Fraction``), so the global constraint "severities sum to 1" is
an exact assertable identity, not a float tolerance. Decimal rendering
happens only at the output boundary (see :mod:`rbac_sev.render`).

All types are immutable after construction and safe to share across
concurrent tasks.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import UnknownRole

RoleId = str
PermissionId = str

# Exact rational number: always lowest terms, denominator > 0. The stdlib
# type guarantees both invariants and exact add/mul/div.
Rational = Fraction

# Shared token grammar for role and permission ids. Whitespace-free and
# DOT-friendly; '#' is reserved (comments, synthetic vertex ids).
TOKEN_PATTERN = r"[A-Za-z0-9_.:-]+"


@dataclass(frozen=True)
class RoleTree:
    """An oriented tree of roles with permissions attached to leaves only.

    An edge parent -> child means the parent dominates (inherits all
    permissions of) the child. Instances are produced by
    :func:`rbac_sev.parser.validate`, which guarantees the invariants:
    exactly one root, single parent per non-root role, no cycles, and
    every leaf carrying at least one permission.

    Child order is first-appearance order from the input and is preserved
    so that reports and DOT output are reproducible byte for byte; none of
    the severity math depends on it. ``roles`` holds every role in
    depth-first order.
    """

    root: RoleId
    roles: tuple[RoleId, ...]
    parent_of: dict[RoleId, RoleId]  # no entry for the root
    children_of: dict[RoleId, tuple[RoleId, ...]]  # entry for every role
    direct_perms: dict[RoleId, tuple[PermissionId, ...]]  # leaves only

    def is_leaf(self, role: RoleId) -> bool:
        return not self.children_of[role]


def dfs_order(tree: RoleTree) -> list[RoleId]:
    """All roles in depth-first preorder, children in stored order.

    Iterative on purpose: degenerate chain-shaped policies must not hit
    the interpreter recursion limit.
    """
    order = []
    stack = [tree.root]
    while stack:
        role = stack.pop()
        order.append(role)
        stack.extend(reversed(tree.children_of[role]))
    return order


def leaves(tree: RoleTree) -> list[RoleId]:
    """Roles with no children, in depth-first order from the root."""
    return [role for role in dfs_order(tree) if not tree.children_of[role]]


def depth(tree: RoleTree, role: RoleId) -> int:
    """Number of edges from the root down to ``role``; the root has depth 0."""
    if role not in tree.children_of:
        raise UnknownRole(f"unknown role: {role}")
    d = 0
    current = role
    while current in tree.parent_of:
        current = tree.parent_of[current]
        d += 1
    return d


def depths(tree: RoleTree) -> dict[RoleId, int]:
    """Depth of every role, computed in one pass."""
    out = {tree.root: 0}
    for role in dfs_order(tree):
        if role != tree.root:
            out[role] = out[tree.parent_of[role]] + 1
    return out


def height(tree: RoleTree) -> int:
    """Maximum depth over all roles (0 for a single-role tree)."""
    return max(depths(tree).values())
