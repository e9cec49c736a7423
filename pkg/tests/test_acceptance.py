"""Acceptance checks, one per shipped guarantee.

Each test exercises one end-to-end guarantee at its stated time budget and
prints a single summary line (run with ``pytest -s`` to see them).  Everything
asserted here is exact integer or exact rational arithmetic; there are no
tolerances to tune.
"""

import json
import random
import subprocess
import sys
import time
from fractions import Fraction
from math import gcd

import oracles

from tschirn.certificates import (
    CertificateRejection,
    build_certificate,
    check_certificate,
    deserialize,
    serialize,
)
from tschirn.covers import cover_numerics, destabilizer_scan
from tschirn.elliptic import GluingDatum, glued_cover_ledger
from tschirn.errors import NoSuchCover
from tschirn.etale import character_sum, etale_evidence, etale_stability
from tschirn.families import agl1, alternating_group, cyclic_group, pgl2, psl2
from tschirn.perms import PermGroup, Permutation, group_order, orbit_count_ordered_pairs
from tschirn.splitting import balanced_type, general_p1_splitting, is_balanced
from tschirn.verdicts import StabilityTag

REJECTION_CODES = {
    "BranchSplitMismatch",
    "RamifiedNode",
    "RuleViolation",
    "LedgerMismatch",
}


def run_criterion(number, label, budget_seconds, body):
    start = time.perf_counter()
    try:
        detail = body()
    except BaseException as exc:
        elapsed = time.perf_counter() - start
        print(f"criterion {number} [{label}]: FAIL ({elapsed:.2f}s): {exc!r}", flush=True)
        raise
    elapsed = time.perf_counter() - start
    ok = elapsed < budget_seconds
    status = "PASS" if ok else "FAIL"
    print(
        f"criterion {number} [{label}]: {detail}; {status}"
        f" ({elapsed:.2f}s, budget {budget_seconds:g}s)",
        flush=True,
    )
    assert ok, f"results correct but over budget: {elapsed:.2f}s >= {budget_seconds}s"


def test_criterion_1_family_character_identity():
    def body():
        groups = [alternating_group(r) for r in range(4, 9)]
        for q in (3, 4, 5, 7, 8, 9, 11):
            groups.append(pgl2(q))
            groups.append(psl2(q))
        for q in (3, 4, 5, 7, 8, 9):
            groups.append(agl1(q))
        for G in groups:
            ev = etale_evidence(G)
            assert ev.char_sum is not None, "both oracles must run at these orders"
            assert ev.char_sum == 2 * ev.order
            assert ev.pair_orbit_count == 2
            assert ev.irreducible
        n = len(groups)
        return f"{n}/{n} groups have char sum exactly 2|G| and 2 pair orbits"

    run_criterion(1, "family character identity", 30.0, body)


def test_criterion_2_cyclic_tower_verdicts():
    def body():
        assert etale_stability(cyclic_group(2)).tag is StabilityTag.STABLE
        for r in range(3, 101):
            verdict = etale_stability(cyclic_group(r))
            assert verdict.tag is StabilityTag.STRICTLY_SEMISTABLE
            assert verdict.witness == {"pair_orbit_count": r}
        return "r = 2 stable; r = 3..100 all strictly semistable with witness r"

    run_criterion(2, "cyclic tower verdicts", 5.0, body)


def test_criterion_3_random_monodromy_character_identity():
    def body():
        rng = random.Random(20260823)
        accepted = 0
        draws = 0
        while accepted < 500:
            draws += 1
            assert draws < 20_000, "rejection sampling is not terminating"
            degree = rng.randint(2, 12)
            gens = [
                Permutation(oracles.random_permutation(degree, rng))
                for _ in range(rng.randint(2, 3))
            ]
            G = PermGroup(gens)
            order = group_order(G)
            if order > 100_000:
                continue
            pairs = orbit_count_ordered_pairs(G)
            assert character_sum(G, cap=100_000) == order * pairs
            accepted += 1
        return f"500/500 random groups (of {draws} draws) satisfy the exact identity"

    run_criterion(3, "random monodromy character identity", 60.0, body)


def test_criterion_4_cover_ledger_identities():
    def body():
        checked = 0
        for r in range(2, 21):
            for h in range(0, 6):
                for g in range(0, 61):
                    try:
                        num = cover_numerics(r, g, h)
                    except NoSuchCover:
                        continue
                    assert num.g - 1 == num.r * (num.h - 1) + num.b // 2
                    assert num.b >= 0 and num.b % 2 == 0
                    assert num.tsch_rank == r - 1
                    assert num.tsch_degree == -(num.b // 2)
                    assert num.slope == Fraction(-(num.b // 2), r - 1)
                    checked += 1
        assert checked > 500
        return f"{checked} admissible (r, g, h) triples verified exactly"

    run_criterion(4, "cover ledger identities", 5.0, body)


def test_criterion_5_rational_target_splitting():
    def body():
        for r in range(2, 11):
            assert general_p1_splitting(r, 0).degrees == (-1,) * (r - 1)
        grid = 0
        for r in range(2, 11):
            for g in range(0, 31):
                split = general_p1_splitting(r, g)
                assert split.degrees == balanced_type(r - 1, -(g + r - 1)).degrees
                assert is_balanced(split)
                assert split.total_degree == -(g + r - 1)
                grid += 1
        return f"base case exact for r = 2..10; {grid} grid points match the closed form"

    run_criterion(5, "rational target splitting calculus", 5.0, body)


def test_criterion_6_glued_elliptic_ledgers():
    def body():
        adjacent = 0
        for r in range(2, 201):
            for count in range(1, 11):
                report = glued_cover_ledger(GluingDatum.adjacent(r, count))
                assert report.numerics.tsch_degree == -count
                assert report.clean
                adjacent += 1
        single = 0
        for r in range(2, 201):
            for d in range(1, r):
                report = glued_cover_ledger(GluingDatum(r=r, pairs=((0, d),)))
                expected = oracles.diagonal_subreps_by_enumeration(r, 0, d)
                assert report.pair_subreps == (expected,)
                assert report.clean == (gcd(d, r) == 1)
                single += 1
        return f"{adjacent} adjacent ledgers clean; {single} single pairs match enumeration"

    run_criterion(6, "glued elliptic cover ledgers", 10.0, body)


def test_criterion_7_destabilizer_scan_empty():
    def body():
        scans = 0
        for r in range(2, 21):
            for g in range(1, 51):
                assert destabilizer_scan(r, g) == ()
                scans += 1
        return f"{scans} slope windows scanned, no destabilizing sub-slope found"

    run_criterion(7, "destabilizer scan emptiness", 5.0, body)


def test_criterion_8_certificates():
    def body():
        branched = 0
        for r in range(2, 9):
            for h in range(2, 6):
                for g in range(r * (h - 1) + 2, 41):
                    verdict = check_certificate(build_certificate(r, g, h))
                    assert verdict.tag is StabilityTag.STABLE
                    branched += 1
        assert branched > 0
        elliptic = 0
        for r in range(2, 9):
            for g in range(2, 41):
                verdict = check_certificate(build_certificate(r, g, 1))
                expected = (
                    StabilityTag.STABLE
                    if gcd(r - 1, g - 1) == 1
                    else StabilityTag.SEMISTABLE
                )
                assert verdict.tag is expected
                assert verdict.at_least_semistable
                elliptic += 1

        rng = random.Random(20260823)
        rejected = 0
        for r, g in [(2, 15), (3, 20), (4, 25), (5, 30), (6, 35), (7, 40), (8, 40)]:
            cert = build_certificate(r, g, 5)
            doc = json.loads(serialize(cert))
            assert not isinstance(check_certificate(cert), CertificateRejection)
            for site in oracles.mutation_sites(doc):
                for _ in range(2):
                    mutated = oracles.mutate(doc, site, rng)
                    outcome = check_certificate(deserialize(json.dumps(mutated)))
                    assert isinstance(outcome, CertificateRejection), site
                    assert outcome.code in REJECTION_CODES
                    rejected += 1
        assert rejected >= 1000
        return (
            f"{branched} branched + {elliptic} elliptic certificates verified; "
            f"{rejected} mutations all rejected with named codes"
        )

    run_criterion(8, "certificate build and check", 60.0, body)


def test_criterion_9_cli_determinism():
    def run(args, stdin_text=None):
        return subprocess.run(
            [sys.executable, "-m", "tschirn", *args],
            capture_output=True,
            text=True,
            input=stdin_text,
            timeout=120,
        )

    cases = [
        (("etale", "--group", "pgl2:5"), 0),
        (("etale", "--group", "cyclic:4"), 0),
        (("etale", "--gens", "(1 2)", "--degree", "4"), 2),
        (("invariants", "-r", "3", "-g", "3", "-H", "1"), 0),
        (("invariants", "-r", "2", "-g", "0", "-H", "1"), 2),
        (("p1", "-r", "4", "-g", "1"), 0),
        (("certify", "-r", "3", "-g", "7", "-H", "2"), 0),
        (("families", "--rmax", "7", "--qmax", "9"), 0),
    ]

    def body():
        for args, expected_code in cases:
            first = run(args)
            second = run(args)
            assert first.returncode == expected_code, (args, first.stderr)
            assert second.returncode == expected_code
            assert first.stdout == second.stdout, args
        certificate = run(("certify", "-r", "3", "-g", "7", "-H", "2")).stdout
        piped_a = run(("check", "-"), stdin_text=certificate)
        piped_b = run(("check", "-"), stdin_text=certificate)
        assert piped_a.returncode == 0 and piped_b.returncode == 0
        assert piped_a.stdout == piped_b.stdout
        total = len(cases) + 1
        return f"{total} invocations byte-identical across repeat runs, exit codes exact"

    run_criterion(9, "command line determinism", 10.0, body)
