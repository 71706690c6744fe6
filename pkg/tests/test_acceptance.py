"""Acceptance criteria 1-10, one printed PASS/FAIL line each.

Criteria that do not hold are reported as FAIL and the test fails; the
measured counterexamples are printed next to the verdict.
"""

import dataclasses
import itertools
import json
import random
import time

import pytest

import fibharm.registry as registry
from fibharm.cli import main
from fibharm.exact import LogValue
from fibharm.harmonic import halfint_reduction_suite, lemma2_suite, lemma3_suite
from fibharm.registry import CONFIRMED, DISCREPANCY, lookup, registry_entries
from fibharm.registry.core import evaluate
from fibharm.report import Outcome
from fibharm.transforms import FiniteSequence, abel_check, binomial_transform, random_rational_sequence

SWEEP_BUDGET_S = 300.0


def verdict(capsys, k, ok, detail=""):
    with capsys.disabled():
        print(f"\nCRITERION {k}: {'PASS' if ok else 'FAIL'}  {detail}".rstrip())
    assert ok, detail


def timed(fn, *args):
    t0 = time.perf_counter()
    out = fn(*args)
    return out, time.perf_counter() - t0


def unequal(reports):
    return [r for r in reports if r.outcome is Outcome.UNEQUAL]


@pytest.fixture(scope="module")
def full_sweep(tmp_path_factory):
    d = tmp_path_factory.mktemp("sweep")
    out = {}
    for name, jobs in (("a", 1), ("b", 2)):
        path = d / f"{name}.json"
        code, secs = timed(main, ["verify", "--report", str(path), "--jobs", str(jobs)])
        out[name] = (code, secs, path.read_bytes())
    return out


def test_criterion_1_lemma2(capsys):
    reports, secs = timed(lemma2_suite, 200)
    bad = unequal(reports)
    ok = not bad and len(reports) == 8 * 201 and secs < 1.0
    verdict(capsys, 1, ok, f"{len(reports)} checks, {len(bad)} unequal, {secs:.3f}s")


def test_criterion_2_lemma3(capsys):
    reports, secs = timed(lemma3_suite, 25)
    bad = unequal(reports)
    detail = f"{len(reports)} checks, {len(bad)} unequal, {secs:.3f}s"
    if bad:
        r = bad[0]
        detail += f"; first: {r.identity} at {dict(r.assignment)}: {r.lhs} vs {r.rhs}"
    verdict(capsys, 2, not bad and secs < 1.0, detail)


def test_criterion_3_halfint_reductions(capsys):
    reports, secs = timed(halfint_reduction_suite, 10, 15)
    bad = unequal(reports)
    forms = sorted({r.identity for r in bad})
    detail = f"{len(reports)} checks, {len(bad)} unequal in {forms}, {secs:.3f}s"
    verdict(capsys, 3, not bad and secs < 5.0, detail)


def test_criterion_4_abel(capsys):
    rng = random.Random(4)
    failures = 0
    for _ in range(200):
        n = rng.randint(0, 40)
        a = random_rational_sequence(rng, n + 2, 0)
        b = random_rational_sequence(rng, n + 2, 0)
        for variant in ("Difference", "Sum"):
            failures += not abel_check(a, b, n, variant).equal
    verdict(capsys, 4, failures == 0, f"200 pairs x 2 variants, {failures} unequal")


def test_criterion_5_binomial_transform(capsys):
    rng = random.Random(5)
    inv_fail = 0
    for _ in range(100):
        s = random_rational_sequence(rng, rng.randint(1, 26), 0)
        inv_fail += binomial_transform(binomial_transform(s)).values != s.values
    e = lookup("bt-G-scaled")
    seeds = ((0, 1), (2, 1), (1, 1), (3, -1), (-2, 5))
    checked = closed_fail = 0
    for t, r, n, seed in itertools.product(range(-3, 4), range(-3, 4), range(0, 21), seeds):
        res = evaluate(e, {"n": n, "t": t, "r": r, "seed": seed})
        if res.outcome is Outcome.SKIPPED:
            continue
        checked += 1
        closed_fail += res.outcome is Outcome.UNEQUAL
    ok = inv_fail == 0 and closed_fail == 0 and checked > 0
    verdict(capsys, 5, ok, f"involution: {inv_fail}/100 unequal; closed form: {closed_fail}/{checked} unequal")


SPOTS = (
    ("rec-FF-part", {"n": 1}, -1),
    ("conv-sq", {"n": 2}, 1),
    ("boyad-HF-part", {"n": 2}, LogValue.coerce(-1) / 2),
    ("rec-odd-part", {"n": 1}, LogValue.coerce(2) / 3),
)


def test_criterion_6_spot_values(capsys):
    got = []
    for eid, a, want in SPOTS:
        r = evaluate(lookup(eid), a)
        want = LogValue.coerce(want)
        got.append((eid, r.lhs == want and r.rhs == want, f"{r.lhs} = {r.rhs}"))
    ok = all(g[1] for g in got)
    verdict(capsys, 6, ok, "; ".join(f"{e}: {v}" for e, _, v in got))


def test_criterion_7_full_sweep(capsys, full_sweep):
    code, secs, raw = full_sweep["a"]
    doc = json.loads(raw)
    problems = []
    for s in doc["summaries"]:
        st = lookup(s["id"]).audited_status
        if st.status == CONFIRMED and s["unequal"]:
            problems.append(f"{s['id']} unequal={s['unequal']}")
        elif st.status == DISCREPANCY:
            stored = {"assignment": st.counterexample, "lhs": st.lhs, "rhs": st.rhs}
            if s["first_counterexample"] != stored:
                problems.append(f"{s['id']} counterexample not reproduced")
        elif st.status not in (CONFIRMED, DISCREPANCY):
            problems.append(f"{s['id']} is {st.status}")
    n_disc = sum(lookup(s["id"]).audited_status.status == DISCREPANCY for s in doc["summaries"])
    ok = not problems and code == 0 and secs < SWEEP_BUDGET_S and len(doc["summaries"]) == len(registry_entries())
    detail = f"{len(doc['summaries'])} identities ({n_disc} Discrepancy), exit {code}, {secs:.1f}s"
    if problems:
        detail += "; " + ", ".join(problems[:5])
    verdict(capsys, 7, ok, detail)


def test_criterion_8_ln2_separation(capsys):
    bad = []
    two = LogValue.coerce(2)
    ln2 = LogValue(0, 1)
    for n, seed in itertools.product(range(0, 21), ((0, 1), (2, 1))):
        a = {"n": n, "seed": seed}
        f = evaluate(lookup("prop1-ln2-a"), a)
        pa, pb = evaluate(lookup("prop1-a"), a), evaluate(lookup("prop1-b"), a)
        # ln2 coefficient gives prop1-a, the rational part gives prop1-b
        if f.lhs != two * (pa.lhs * ln2 - pb.lhs) or f.rhs != two * (pa.rhs * ln2 - pb.rhs):
            bad.append(("prop1-ln2-a", n, seed))
        g = evaluate(lookup("prop1-ln2-b"), a)
        qa, qb = evaluate(lookup("prop2-a"), a), evaluate(lookup("prop2-b"), a)
        # same split, with the two sides exchanged
        if g.lhs != two * (qa.rhs * ln2 + qb.rhs) or g.rhs != two * (qa.lhs * ln2 + qb.lhs):
            bad.append(("prop1-ln2-b", n, seed))
    verdict(capsys, 8, not bad, f"84 side pairs compared, {len(bad)} mismatches {bad[:3]}")


def _mutated(fn):
    def rhs(p, X):
        return fn(p, X) + 1

    return rhs


def test_criterion_9_mutation_canary(capsys):
    escaped = []
    registry.registry_entries()
    for e in registry.registry_entries():
        by_id = dict(registry._BY_ID)
        by_id[e.id] = dataclasses.replace(e, rhs=_mutated(e.rhs))
        entries = tuple(by_id[x.id] for x in registry._ENTRIES)
        with pytest.MonkeyPatch.context() as mp:
            mp.setattr(registry, "_BY_ID", by_id)
            mp.setattr(registry, "_ENTRIES", entries)
            code = main(["verify", "--ids", e.id, "--fail-fast", "--jobs", "1"])
            capsys.readouterr()
        if code != 1:
            escaped.append(f"{e.id}->{code}")
    n = len(registry_entries())
    verdict(capsys, 9, not escaped, f"{n - len(escaped)}/{n} mutants exit 1 {escaped[:5]}")


def test_criterion_10_determinism(capsys, full_sweep):
    a, b = full_sweep["a"], full_sweep["b"]
    same = a[2] == b[2]
    verdict(capsys, 10, same, f"jobs=1 vs jobs=2 reports byte-identical: {same} ({len(a[2])} bytes)")
