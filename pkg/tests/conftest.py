"""Shared fixtures: the golden example policy and a generated-policy stream.

The golden policy is the canonical reference hierarchy used across the
suite; its exact severities, weights, and metadata were computed up front
with an independent mass-distribution oracle and are frozen in the tests.
"""

from __future__ import annotations

import pytest

from rbac_sev import compute_closure, parse, severity_report, validate
from rbac_sev.errors import InvalidParams
from rbac_sev.generate import GenParams, generate_policy

GOLDEN_POLICY = """\
edge r1 r2
edge r1 r3
edge r3 r5
edge r3 r6
edge r1 r4
edge r4 r7
edge r4 r8
edge r8 r10
edge r8 r11
edge r4 r9
assign r2 p2 p3
assign r5 p1 p2 p3
assign r6 p2 p4
assign r7 p5
assign r10 p1 p4 p5
assign r11 p1 p4
assign r9 p3 p5
"""


def tree_from(text: str):
    return validate(parse(text))


def generated_policies(count: int, max_roles: int = 50, max_perms: int = 20,
                       start_seed: int = 0):
    """Yield ``count`` policy texts with sizes cycling up to the maxima.

    Seeds advance deterministically; parameter combinations the generator
    cannot satisfy are skipped.
    """
    seed = start_seed
    produced = 0
    while produced < count:
        params = GenParams(
            roles=1 + (seed * 7) % max_roles,
            perms=1 + (seed * 3) % max_perms,
            seed=seed,
        )
        seed += 1
        try:
            text = generate_policy(params)
        except InvalidParams:
            continue
        produced += 1
        yield text


@pytest.fixture(scope="session")
def golden_text() -> str:
    return GOLDEN_POLICY


@pytest.fixture(scope="session")
def golden_tree():
    return tree_from(GOLDEN_POLICY)


@pytest.fixture(scope="session")
def golden_closure(golden_tree):
    return compute_closure(golden_tree)


@pytest.fixture(scope="session")
def golden_report(golden_tree, golden_closure):
    return severity_report(golden_tree, golden_closure)


@pytest.fixture()
def golden_file(tmp_path, golden_text):
    path = tmp_path / "golden.policy"
    path.write_text(golden_text, encoding="utf-8")
    return str(path)
