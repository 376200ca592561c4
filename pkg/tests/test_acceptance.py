"""The twelve acceptance criteria, each run at full scale with its time budget.

Every criterion records one PASS/FAIL line, printed in the terminal summary
(and directly when this file is run as a script).
"""
import time

import pytest

from og6lattice import cones
from og6lattice.claims import Context, run_claim

from conftest import ACCEPTANCE_LINES

CTX = Context(seed=0, scale="full")

CRITERIA = [
    (1, "transvection calculus, 1000 samples", "transvection-calculus", 5),
    (2, "stabilizer transvection identities, d = 1..10", "stabilizer-transvection-identities", 1),
    (3, "discriminant form of U^3 + (-2)^2 with dual-coset cross-check", "discriminant-og6", 1),
    (4, "mod-8 scan of primitive div-2 vectors, box 3", "mod8-div2-isotropic-scan", 60),
    (5, "Eichler criterion against the BFS oracle in U^2 + (-2), box 3", "eichler-criterion-vs-bfs", 300),
    (6, "transport round trip, 200 pairs", "transport-roundtrip", 60),
    (7, "generation of O+(U^3 + (-2)^2), 100 words", "monodromy-generation", 120),
    (8, "phi and varrho preserve the Mukai pairing", "phi-varrho-isometries", 5),
    (9, "image of (1,0,1) under square-2 extensions, 100 isometries", "zeta-image-arithmetic", 30),
    (10, "wall classifier and proof forms", "wall-table", 1),
    (11, "wall enumeration against the box oracle, 50 instances", "wall-enumeration-completeness", 300),
    (12, "lagrangian detector", "lagrangian-detector", 1),
]


def record(n, title, ok, detail):
    line = "criterion %2d %s  %s: %s" % (n, "PASS" if ok else "FAIL", title, detail)
    ACCEPTANCE_LINES[n] = line
    print(line)


@pytest.mark.parametrize("n, title, claim_id, budget", CRITERIA, ids=[c[2] for c in CRITERIA])
def test_criterion(n, title, claim_id, budget):
    start = time.perf_counter()
    res = run_claim(claim_id, CTX)
    elapsed = time.perf_counter() - start
    ok = res.passed and elapsed < budget
    detail = "%s [%.2fs, budget %ds]" % (res.detail, elapsed, budget)
    if n == 10:
        literal = literal_proof_forms_all_not_a_wall()
        ok = ok and literal
        if not literal:
            detail += "; as written it fails: form A at a = 1 is e1 - f1, which must be WallNotExceptional"
    record(n, title, ok, detail)
    assert res.passed, res.detail
    assert elapsed < budget, "took %.2fs, budget %ds" % (elapsed, budget)


def literal_proof_forms_all_not_a_wall():
    return all(cones.classify_divisor(cones.proof_form(x, a)).kind == cones.NOT_A_WALL
               for x in "ABCD" for a in range(1, 6))


@pytest.mark.xfail(strict=True, reason="form A with a = 1 equals e1 - f1, a (-2, div 1) class; "
                                       "the classifier table itself requires WallNotExceptional there")
def test_criterion_10_as_written():
    assert literal_proof_forms_all_not_a_wall()


def test_criterion_10_consistent_reading():
    assert cones.classify_divisor(cones.proof_form("A", 1)).kind == cones.WALL_NOT_EXCEPTIONAL
    assert all(cones.classify_divisor(cones.proof_form(x, a)).kind == cones.NOT_A_WALL
               for x in "ABCD" for a in range(1, 6) if (x, a) != ("A", 1))


if __name__ == "__main__":
    for n, title, claim_id, budget in CRITERIA:
        try:
            test_criterion(n, title, claim_id, budget)
        except AssertionError:
            pass
