"""Policy file parsing, structural validation, canonical serialization.

File format (UTF-8, LF or CRLF accepted, LF emitted)::

    # full-line comment
    edge <parent-id> <child-id>
    assign <leaf-id> <perm-id> [<perm-id> ...]

Tokens are separated by spaces or tabs; ids match ``[A-Za-z0-9_.:-]+``.
Parsing and validation are separate steps: :func:`parse` only checks line
shape, :func:`diagnose` reports *all* structural problems at once with
stable codes and line numbers, and :func:`validate` builds the
:class:`~rbac_sev.model.RoleTree` when there are none.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .errors import PolicySyntaxError, PolicyValidationError
from .model import TOKEN_PATTERN, PermissionId, RoleId, RoleTree, dfs_order, leaves

_TOKEN_RE = re.compile(rf"^{TOKEN_PATTERN}$")

# Closed set of diagnostic codes.
ERROR_CODES = (
    "syntax",
    "multi-parent",
    "cycle",
    "multi-root",
    "no-root",
    "assign-internal",
    "leaf-no-perms",
    "unknown-role",
)
WARNING_CODES = ("duplicate-assign",)


@dataclass(frozen=True)
class Diagnostic:
    """A single validation finding with a stable machine-readable code."""

    severity: str  # "error" | "warning"
    code: str
    message: str
    line: int | None = None

    def render(self) -> str:
        if self.line is None:
            return f"{self.code}: {self.message}"
        return f"{self.code}:{self.line}: {self.message}"


@dataclass(frozen=True)
class EdgeDirective:
    parent: RoleId
    child: RoleId
    line: int


@dataclass(frozen=True)
class AssignDirective:
    leaf: RoleId
    perms: tuple[PermissionId, ...]
    line: int


@dataclass(frozen=True)
class PolicyDocument:
    """Raw parsed form; may still be structurally invalid."""

    edges: tuple[EdgeDirective, ...]
    assignments: tuple[AssignDirective, ...]


def parse(text: str) -> PolicyDocument:
    """Parse policy text into a document, keeping input order and line numbers.

    Blank lines and full-line ``#`` comments are skipped. Raises
    :class:`PolicySyntaxError` carrying one diagnostic per malformed line.
    """
    edges: list[EdgeDirective] = []
    assignments: list[AssignDirective] = []
    problems: list[Diagnostic] = []

    def bad(lineno: int, message: str) -> None:
        problems.append(Diagnostic("error", "syntax", message, lineno))

    for lineno, raw in enumerate(text.split("\n"), start=1):
        line = raw[:-1] if raw.endswith("\r") else raw
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        tokens = stripped.split()
        keyword = tokens[0]
        invalid = [t for t in tokens[1:] if not _TOKEN_RE.match(t)]
        if keyword == "edge":
            if len(tokens) != 3:
                bad(lineno, f"edge takes exactly 2 ids, got {len(tokens) - 1}")
            elif invalid:
                bad(lineno, f"invalid id: {invalid[0]!r}")
            else:
                edges.append(EdgeDirective(tokens[1], tokens[2], lineno))
        elif keyword == "assign":
            if len(tokens) < 3:
                bad(lineno, "assign takes a leaf id and at least one permission id")
            elif invalid:
                bad(lineno, f"invalid id: {invalid[0]!r}")
            else:
                # Duplicate permissions within one directive collapse: the
                # permission list is a set with first-appearance order.
                seen: set[str] = set()
                perms = tuple(p for p in tokens[2:] if not (p in seen or seen.add(p)))
                assignments.append(AssignDirective(tokens[1], perms, lineno))
        else:
            bad(lineno, f"unknown directive {keyword!r} (expected edge or assign)")

    if problems:
        raise PolicySyntaxError(problems)
    return PolicyDocument(tuple(edges), tuple(assignments))


def diagnose(doc: PolicyDocument) -> list[Diagnostic]:
    """Report every structural problem in the document, deterministically.

    Findings are ordered by line number (line-less findings last), then code.
    An empty result means :func:`validate` will succeed.
    """
    diags: list[Diagnostic] = []

    # Role universe and first-appearance lines. With no edges at all, the
    # assignment targets are the declared roles (degenerate one-role policy).
    role_order: list[RoleId] = []
    first_line: dict[RoleId, int] = {}

    def declare(role: RoleId, line: int) -> None:
        if role not in first_line:
            first_line[role] = line
            role_order.append(role)

    for e in doc.edges:
        declare(e.parent, e.line)
        declare(e.child, e.line)
    if not doc.edges:
        for a in doc.assignments:
            declare(a.leaf, a.line)

    # Repeated identical edges are harmless duplicates; first occurrence wins.
    edges: list[EdgeDirective] = []
    seen_pairs: set[tuple[RoleId, RoleId]] = set()
    for e in doc.edges:
        if (e.parent, e.child) not in seen_pairs:
            seen_pairs.add((e.parent, e.child))
            edges.append(e)

    parent_of_first: dict[RoleId, RoleId] = {}
    adjacency: dict[RoleId, list[RoleId]] = {r: [] for r in role_order}
    edge_line: dict[tuple[RoleId, RoleId], int] = {}
    for e in edges:
        adjacency[e.parent].append(e.child)
        edge_line[(e.parent, e.child)] = e.line
        if e.child in parent_of_first:
            if parent_of_first[e.child] != e.parent:
                diags.append(Diagnostic(
                    "error", "multi-parent",
                    f"role {e.child} already has parent {parent_of_first[e.child]}, "
                    f"cannot also be a child of {e.parent}",
                    e.line,
                ))
        else:
            parent_of_first[e.child] = e.parent

    # Cycle detection: iterative colored DFS over the (possibly non-tree)
    # edge relation; one diagnostic per back edge, anchored to the edge
    # line that closes the cycle.
    color: dict[RoleId, int] = {}  # 1 = on current path, 2 = done
    for start in role_order:
        if color.get(start):
            continue
        color[start] = 1
        path = [start]
        stack = [(start, iter(adjacency[start]))]
        while stack:
            node, it = stack[-1]
            child = next(it, None)
            if child is None:
                color[node] = 2
                stack.pop()
                path.pop()
                continue
            state = color.get(child, 0)
            if state == 1:
                cycle = path[path.index(child):] + [child]
                diags.append(Diagnostic(
                    "error", "cycle",
                    "cycle in role hierarchy: " + " -> ".join(cycle),
                    edge_line[(node, child)],
                ))
            elif state == 0:
                color[child] = 1
                path.append(child)
                stack.append((child, iter(adjacency[child])))

    # Root count. With edges present the roots are the parentless edge
    # endpoints; with assignments only, every declared role is a root.
    if doc.edges:
        roots = [r for r in role_order if r not in parent_of_first]
    else:
        roots = list(role_order)
    if not roots:
        message = "policy declares no roles" if not role_order else \
            "no root: every role has a parent"
        diags.append(Diagnostic("error", "no-root", message))
    for extra in roots[1:]:
        diags.append(Diagnostic(
            "error", "multi-root",
            f"multiple roots: {extra} and {roots[0]} both have no parent",
            first_line.get(extra),
        ))

    # Assignment checks.
    role_set = set(role_order)
    assigned: set[RoleId] = set()
    for a in doc.assignments:
        if a.leaf not in role_set:
            diags.append(Diagnostic(
                "error", "unknown-role",
                f"assign targets {a.leaf}, which appears in no edge",
                a.line,
            ))
            continue
        if adjacency.get(a.leaf):
            diags.append(Diagnostic(
                "error", "assign-internal",
                f"role {a.leaf} has children; only leaf roles may receive "
                "permissions directly",
                a.line,
            ))
            continue
        if a.leaf in assigned:
            diags.append(Diagnostic(
                "warning", "duplicate-assign",
                f"leaf {a.leaf} assigned more than once; permission sets merged",
                a.line,
            ))
        assigned.add(a.leaf)

    # Every leaf must carry at least one permission. Anchored to the line
    # where the leaf first appears, since the missing directive has none.
    for role in role_order:
        if not adjacency.get(role) and role not in assigned:
            diags.append(Diagnostic(
                "error", "leaf-no-perms",
                f"leaf role {role} has no permission assignment",
                first_line.get(role),
            ))

    diags.sort(key=lambda d: (d.line is None, d.line or 0, d.code, d.message))
    return diags


def validate(doc: PolicyDocument) -> RoleTree:
    """Build a valid role tree, or raise with every applicable diagnostic.

    Raises :class:`PolicyValidationError` (carrying errors and warnings both)
    if any error-severity diagnostic applies. Warnings alone do not fail;
    duplicate assignments to one leaf are merged as an ordered set union.
    """
    diags = diagnose(doc)
    if any(d.severity == "error" for d in diags):
        raise PolicyValidationError(diags)

    role_order: list[RoleId] = []
    seen: set[RoleId] = set()

    def declare(role: RoleId) -> None:
        if role not in seen:
            seen.add(role)
            role_order.append(role)

    parent_of: dict[RoleId, RoleId] = {}
    children: dict[RoleId, list[RoleId]] = {}
    seen_pairs: set[tuple[RoleId, RoleId]] = set()
    for e in doc.edges:
        declare(e.parent)
        declare(e.child)
        if (e.parent, e.child) in seen_pairs:
            continue
        seen_pairs.add((e.parent, e.child))
        parent_of[e.child] = e.parent
        children.setdefault(e.parent, []).append(e.child)

    merged: dict[RoleId, list[PermissionId]] = {}
    for a in doc.assignments:
        declare(a.leaf)
        bucket = merged.setdefault(a.leaf, [])
        for p in a.perms:
            if p not in bucket:
                bucket.append(p)

    root = next(r for r in role_order if r not in parent_of)
    # Canonical role order is depth-first, derived from the structure, so
    # that round-tripping through serialize() reproduces the tree exactly.
    dfs: list[RoleId] = []
    stack = [root]
    while stack:
        role = stack.pop()
        dfs.append(role)
        stack.extend(reversed(children.get(role, ())))
    return RoleTree(
        root=root,
        roles=tuple(dfs),
        parent_of=parent_of,
        children_of={r: tuple(children.get(r, ())) for r in role_order},
        direct_perms={leaf: tuple(perms) for leaf, perms in merged.items()},
    )


def serialize(tree: RoleTree) -> str:
    """Canonical text form: edges in depth-first order, then leaf assignments.

    Round-trip identity: ``validate(parse(serialize(t)))`` reproduces ``t``
    with identical ids, child order, and permission order, and serializing
    again is byte-identical.
    """
    lines = []
    for role in dfs_order(tree):
        if role != tree.root:
            lines.append(f"edge {tree.parent_of[role]} {role}")
    for leaf in leaves(tree):
        lines.append(f"assign {leaf} " + " ".join(tree.direct_perms[leaf]))
    return "\n".join(lines) + "\n"
