"""Permission inheritance closure.

Internal roles hold no permissions of their own; each role's full
permission set is the union over its subtree's leaves, computed in one
bottom-up pass. Sets are kept in first-depth-first-appearance order so
every downstream report iterates deterministically.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import UnknownPermission
from .model import PermissionId, RoleId, RoleTree, dfs_order


@dataclass(frozen=True)
class PermissionClosure:
    """Full permission set and cardinality for every role.

    ``rp`` maps each role (keys in depth-first order) to its ordered
    permission set; ``counts`` caches the cardinalities, which are all the
    weighting stage consumes. ``carriers`` is the reverse index: for each
    permission, the roles holding it, in depth-first order.
    """

    rp: dict[RoleId, tuple[PermissionId, ...]]
    counts: dict[RoleId, int]
    carriers: dict[PermissionId, tuple[RoleId, ...]]


def compute_closure(tree: RoleTree) -> PermissionClosure:
    """Union permissions upward from the leaves.

    For a leaf the set is its direct assignment; for an internal role it is
    the ordered union over its children. Every count is >= 1 because the
    validator guarantees each leaf carries at least one permission.
    """
    order = dfs_order(tree)
    sets: dict[RoleId, tuple[PermissionId, ...]] = {}
    # Reverse preorder visits all children before their parent.
    for role in reversed(order):
        children = tree.children_of[role]
        if not children:
            sets[role] = tree.direct_perms.get(role, ())
        else:
            merged: list[PermissionId] = []
            seen: set[PermissionId] = set()
            for child in children:
                for p in sets[child]:
                    if p not in seen:
                        seen.add(p)
                        merged.append(p)
            sets[role] = tuple(merged)

    rp = {role: sets[role] for role in order}
    carriers: dict[PermissionId, list[RoleId]] = {}
    for role in order:
        for p in rp[role]:
            carriers.setdefault(p, []).append(role)
    return PermissionClosure(
        rp=rp,
        counts={role: len(perms) for role, perms in rp.items()},
        carriers={p: tuple(roles) for p, roles in carriers.items()},
    )


def permission_carriers(closure: PermissionClosure, p: PermissionId) -> list[RoleId]:
    """All roles whose permission set contains ``p``, in depth-first order."""
    if p not in closure.carriers:
        raise UnknownPermission(f"unknown permission: {p}")
    return list(closure.carriers[p])
