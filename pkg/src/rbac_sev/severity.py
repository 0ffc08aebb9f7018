"""Severity levels of permissions, computed on the extended role tree.

Pipeline: append one single-permission vertex per (leaf, permission) pair
(:func:`extend`), weight every sibling group by relative permission counts
(:func:`assign_weights`), then sum the per-path weight products from the
root down to each permission vertex (:func:`severity_by_paths`).

:func:`severity_by_mass_flow` recomputes the same numbers by a different
route (unit mass cascading down the weighted tree) and must agree exactly;
it exists as a permanent cross-check, not as dead code.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .ahp import weights_closed_form
from .errors import UnknownPermission
from .inherit import PermissionClosure, compute_closure
from .model import PermissionId, RoleId, RoleTree, dfs_order, leaves

# A permission vertex is identified by (carrying leaf, permission).
PermVertex = tuple[RoleId, PermissionId]
Vertex = Union[RoleId, PermVertex]


@dataclass(frozen=True)
class ExtendedRoleTree:
    """Role tree plus one single-permission child per (leaf, permission).

    The appended vertices each carry exactly one permission and count 1;
    the original structure is untouched.
    """

    base: RoleTree
    perm_children: dict[RoleId, tuple[PermVertex, ...]]


@dataclass(frozen=True)
class WeightedTree:
    """Extended tree with a relative weight on every non-root vertex.

    Within any sibling group the weights sum to exactly 1; the root has
    no weight.
    """

    extended: ExtendedRoleTree
    weights: dict[Vertex, Fraction]


@dataclass(frozen=True)
class PathContribution:
    """One root-to-permission-vertex path and its weight product."""

    roles: tuple[RoleId, ...]  # root .. carrying leaf
    permission: PermissionId
    product: Fraction


@dataclass(frozen=True)
class SeverityReport:
    """Severity of every permission, with ranking and path breakdown.

    ``severities`` keys appear in first-depth-first-appearance order;
    the values sum to exactly 1. ``ranking`` sorts by severity descending,
    ties broken by permission id ascending.
    """

    severities: dict[PermissionId, Fraction]
    ranking: tuple[PermissionId, ...]
    contributions: dict[PermissionId, tuple[PathContribution, ...]]


def extend(tree: RoleTree) -> ExtendedRoleTree:
    """Append permission vertices under every leaf, in stored permission order."""
    perm_children = {
        leaf: tuple((leaf, p) for p in tree.direct_perms[leaf])
        for leaf in leaves(tree)
    }
    return ExtendedRoleTree(base=tree, perm_children=perm_children)


def assign_weights(ext: ExtendedRoleTree, closure: PermissionClosure) -> WeightedTree:
    """Weight every sibling group of the extended tree.

    Role children weigh in with their full permission counts; permission
    vertices contribute count 1 each, so a leaf's mass splits evenly over
    its permissions.
    """
    weights: dict[Vertex, Fraction] = {}
    base = ext.base
    for role in dfs_order(base):
        children = base.children_of[role]
        if children:
            vec = weights_closed_form([closure.counts[c] for c in children])
            weights.update(zip(children, vec))
        else:
            vertices = ext.perm_children[role]
            vec = weights_closed_form([1] * len(vertices))
            weights.update(zip(vertices, vec))
    return WeightedTree(extended=ext, weights=weights)


def _rank(severities: dict[PermissionId, Fraction]) -> tuple[PermissionId, ...]:
    return tuple(sorted(severities, key=lambda p: (-severities[p], p)))


def severity_by_paths(wt: WeightedTree) -> SeverityReport:
    """Sum, per permission, the weight products along all root-to-vertex paths.

    The root contributes no factor (it has no weight). All arithmetic is
    exact; the severities sum to exactly 1 because every sibling group's
    weights do.
    """
    base = wt.extended.base
    severities: dict[PermissionId, Fraction] = {}
    contribs: dict[PermissionId, list[PathContribution]] = {}

    stack: list[tuple[RoleId, tuple[RoleId, ...], Fraction]] = [
        (base.root, (base.root,), Fraction(1))
    ]
    while stack:
        role, path, product = stack.pop()
        children = base.children_of[role]
        if children:
            for child in reversed(children):
                stack.append((child, path + (child,), product * wt.weights[child]))
        else:
            for vertex in wt.extended.perm_children[role]:
                p = vertex[1]
                contribution = PathContribution(path, p, product * wt.weights[vertex])
                severities[p] = severities.get(p, Fraction(0)) + contribution.product
                contribs.setdefault(p, []).append(contribution)

    assert sum(severities.values()) == 1
    return SeverityReport(
        severities=severities,
        ranking=_rank(severities),
        contributions={p: tuple(c) for p, c in contribs.items()},
    )


def severity_by_mass_flow(wt: WeightedTree) -> SeverityReport:
    """Independent cross-check: cascade unit mass down the weighted tree.

    The root starts with mass 1 and every vertex pushes its mass to its
    children in proportion to their weights; a permission's severity is the
    total mass arriving at its vertices. Algebraically equal to
    :func:`severity_by_paths` by distributivity, and required to match it
    exactly.
    """
    base = wt.extended.base
    mass: dict[RoleId, Fraction] = {base.root: Fraction(1)}
    severities: dict[PermissionId, Fraction] = {}
    contribs: dict[PermissionId, list[PathContribution]] = {}

    for role in dfs_order(base):
        children = base.children_of[role]
        if children:
            for child in children:
                mass[child] = mass[role] * wt.weights[child]
        else:
            path = _path_from_root(base, role)
            for vertex in wt.extended.perm_children[role]:
                p = vertex[1]
                arrived = mass[role] * wt.weights[vertex]
                severities[p] = severities.get(p, Fraction(0)) + arrived
                contribs.setdefault(p, []).append(PathContribution(path, p, arrived))

    assert sum(severities.values()) == 1
    return SeverityReport(
        severities=severities,
        ranking=_rank(severities),
        contributions={p: tuple(c) for p, c in contribs.items()},
    )


def _path_from_root(tree: RoleTree, leaf: RoleId) -> tuple[RoleId, ...]:
    path = [leaf]
    while path[-1] in tree.parent_of:
        path.append(tree.parent_of[path[-1]])
    return tuple(reversed(path))


def explain(report: SeverityReport, p: PermissionId) -> list[PathContribution]:
    """The stored path contributions for ``p``, in depth-first order."""
    if p not in report.contributions:
        raise UnknownPermission(f"unknown permission: {p}")
    return list(report.contributions[p])


def severity_report(tree: RoleTree, closure: PermissionClosure | None = None) -> SeverityReport:
    """Run the full pipeline on a validated tree."""
    if closure is None:
        closure = compute_closure(tree)
    return severity_by_paths(assign_weights(extend(tree), closure))
