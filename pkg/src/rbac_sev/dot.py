"""Graphviz DOT export of the role hierarchy.

Three views: ``tree`` is the bare role tree, ``extended`` adds one boxed
vertex per (leaf, permission) pair, ``merged`` collapses those into a
single shared vertex per permission. Role nodes are labeled with their
permission count; in the weighted views each edge is labeled with the
child vertex's relative weight as an exact fraction. Output is
deterministic: nodes and edges follow depth-first order.
"""

from __future__ import annotations

from .inherit import compute_closure
from .model import RoleTree, dfs_order, leaves
from .render import fraction_str
from .severity import assign_weights, extend

VIEWS = ("tree", "extended", "merged")


def render_dot(tree: RoleTree, view: str = "tree") -> str:
    if view not in VIEWS:
        raise ValueError(f"unknown view {view!r}, expected one of {VIEWS}")
    closure = compute_closure(tree)
    order = dfs_order(tree)

    lines = ["digraph rbac {", "  rankdir=TB;"]
    for role in order:
        lines.append(f'  "{role}" [label="{role} |RP|={closure.counts[role]}"];')

    if view == "tree":
        for role in order[1:]:
            lines.append(f'  "{tree.parent_of[role]}" -> "{role}";')
        lines.append("}")
        return "\n".join(lines) + "\n"

    wt = assign_weights(extend(tree), closure)
    # '#' cannot occur in ids, so synthetic vertex names never collide.
    if view == "extended":
        for leaf in leaves(tree):
            for _, p in wt.extended.perm_children[leaf]:
                lines.append(f'  "{leaf}#{p}" [label="{p}", shape=box];')
    else:
        for p in closure.rp[tree.root]:
            lines.append(f'  "p#{p}" [label="{p}", shape=box];')

    for role in order[1:]:
        label = fraction_str(wt.weights[role])
        lines.append(f'  "{tree.parent_of[role]}" -> "{role}" [label="{label}"];')
    for leaf in leaves(tree):
        for vertex in wt.extended.perm_children[leaf]:
            p = vertex[1]
            target = f"{leaf}#{p}" if view == "extended" else f"p#{p}"
            label = fraction_str(wt.weights[vertex])
            lines.append(f'  "{leaf}" -> "{target}" [label="{label}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
