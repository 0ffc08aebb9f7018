"""Seeded random policy generator.

Produces policy text that always parses and validates: tree-shaped
hierarchy, permissions on leaves only, every leaf non-empty, and every
permission placed on at least one leaf. Output is byte-deterministic for
a fixed seed (within this implementation). Mainly property-test fuel, also
exposed as the ``gen`` command for pipe composition.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .errors import InvalidParams


@dataclass(frozen=True)
class GenParams:
    roles: int
    perms: int
    max_children: int = 4
    max_leaf_perms: int = 5
    seed: int = 0


def _check(params: GenParams) -> None:
    if params.roles < 1:
        raise InvalidParams("roles must be >= 1")
    if params.perms < 1:
        raise InvalidParams("perms must be >= 1")
    if params.max_children < 1:
        raise InvalidParams("max-children must be >= 1")
    if params.max_leaf_perms < 1:
        raise InvalidParams("max-leaf-perms must be >= 1")
    if not 0 <= params.seed < 2**64:
        raise InvalidParams("seed must be an unsigned 64-bit integer")


def generate_policy(params: GenParams) -> str:
    """Generate policy text for the given parameters.

    Shape first: roles r1..rn are added one at a time, each attached to a
    uniformly chosen existing role that still has room under max_children.
    Then every leaf draws a uniform non-empty permission subset of size
    <= max_leaf_perms, and a final pass places any still-unused permission
    on a leaf with room (evicting a globally duplicated permission from a
    full leaf when none has room). Raises InvalidParams when the leaves
    cannot hold all perms distinct permissions.
    """
    _check(params)
    rng = random.Random(params.seed)
    n, m = params.roles, params.perms

    parent: dict[int, int] = {}
    child_count = [0] * (n + 1)
    for i in range(2, n + 1):
        # Always non-empty: i-1 existing roles offer (i-1)*max_children slots
        # and only i-2 are taken.
        candidates = [r for r in range(1, i) if child_count[r] < params.max_children]
        chosen = rng.choice(candidates)
        parent[i] = chosen
        child_count[chosen] += 1

    leaf_ids = [i for i in range(1, n + 1) if child_count[i] == 0]
    if len(leaf_ids) * params.max_leaf_perms < m:
        raise InvalidParams(
            f"{m} permissions cannot fit: {len(leaf_ids)} leaves x "
            f"{params.max_leaf_perms} max permissions per leaf"
        )

    perm_ids = [f"p{j}" for j in range(1, m + 1)]
    assigned: dict[int, list[str]] = {}
    used: set[str] = set()
    for leaf in leaf_ids:
        k = rng.randint(1, min(params.max_leaf_perms, m))
        perms = rng.sample(perm_ids, k)
        assigned[leaf] = perms
        used.update(perms)

    tally: dict[str, int] = {}
    for perms in assigned.values():
        for p in perms:
            tally[p] = tally.get(p, 0) + 1
    for p in perm_ids:
        if p in used:
            continue
        open_leaves = [l for l in leaf_ids if len(assigned[l]) < params.max_leaf_perms]
        if open_leaves:
            assigned[rng.choice(open_leaves)].append(p)
        else:
            # All leaves full. Capacity >= m and some permission missing, so
            # by pigeonhole a duplicated slot exists; swap it for p.
            slots = [
                (leaf, idx)
                for leaf in leaf_ids
                for idx, q in enumerate(assigned[leaf])
                if tally[q] >= 2
            ]
            if not slots:
                raise InvalidParams("no room left for required permissions")
            leaf, idx = rng.choice(slots)
            tally[assigned[leaf][idx]] -= 1
            assigned[leaf][idx] = p
        tally[p] = tally.get(p, 0) + 1
        used.add(p)

    lines = [f"edge r{parent[i]} r{i}" for i in range(2, n + 1)]
    lines += [f"assign r{leaf} " + " ".join(assigned[leaf]) for leaf in leaf_ids]
    return "\n".join(lines) + "\n"
