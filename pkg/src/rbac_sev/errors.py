"""Exception hierarchy shared across the package.

Parse and validation failures carry the full diagnostic list so callers
(CLI, HTTP service) can report every problem at once instead of the first.
"""

from __future__ import annotations


class PolicyError(Exception):
    """Base class for all policy processing errors."""


class UnknownRole(PolicyError):
    """A role id was requested that does not exist in the tree."""


class UnknownPermission(PolicyError):
    """A permission id was requested that occurs nowhere in the policy."""


class EmptyGroupError(PolicyError):
    """A sibling group with no members was handed to the weighting stage.

    Cannot happen for trees produced by the validator; kept as a defensive
    guard on the public functions.
    """


class InvalidParams(PolicyError):
    """Random-policy generator parameters are unsatisfiable."""


class PolicySyntaxError(PolicyError):
    """One or more lines of the policy file are not well-formed.

    ``diagnostics`` holds one entry per offending line, code ``syntax``.
    """

    def __init__(self, diagnostics):
        self.diagnostics = list(diagnostics)
        super().__init__(f"{len(self.diagnostics)} syntax error(s)")


class PolicyValidationError(PolicyError):
    """The parsed policy does not describe a valid role tree.

    ``diagnostics`` holds every applicable finding (errors and warnings),
    in deterministic order.
    """

    def __init__(self, diagnostics):
        self.diagnostics = list(diagnostics)
        errors = sum(1 for d in self.diagnostics if d.severity == "error")
        super().__init__(f"{errors} validation error(s)")
