"""Acceptance criteria, each at its stated trial count and exact equality.

Every test prints one ``PASS``/``FAIL`` line.  Run ``pytest tests/test_acceptance.py -s``
to see the lines, or ``python tests/test_acceptance.py`` for a summary without pytest.
"""

import sys
import time

import pytest

from diracgeom import suites

SEED = 0
_START = time.perf_counter()
_ELAPSED: dict[int, float] = {}


def _report(number: int, title: str, res, limit: float | None = None) -> tuple[bool, str]:
    elapsed = _ELAPSED[number]
    ok = res.passed and (limit is None or elapsed < limit)
    bad = {k: v for k, v in res.failure_counts.items() if v}
    line = f"[{'PASS' if ok else 'FAIL'}] criterion {number}: {title} ({elapsed:.1f} s"
    line += f", limit {limit:.0f} s)" if limit is not None else ")"
    if bad:
        line += f" failures {bad}"
    return ok, line


def _run(number: int, fn):
    t = time.perf_counter()
    res = fn()
    _ELAPSED[number] = time.perf_counter() - t
    return res


def _equivalence():
    return _run(1, lambda: suites.predicate_equivalence(SEED, 1000, 3))


def _duality():
    return _run(2, lambda: suites.duality(SEED, 1000, 3))


def _composition():
    return _run(3, lambda: suites.composition(SEED, 500, 3))


def _b_transforms():
    return _run(4, lambda: suites.b_transforms(SEED, 500, 3))


def _push_pull():
    return _run(5, lambda: suites.push_pull(SEED, 1000, 300, 3))


def _gc():
    return _run(6, lambda: suites.gc_endomorphisms(SEED, 200))


def _integrability():
    return _run(7, lambda: suites.integrability(SEED, 200, 100))


def _group_data():
    return _run(8, suites.group_data)


def _schouten():
    return _run(9, lambda: suites.schouten(SEED, 200, 200))


CRITERIA = [
    (1, "five Dirac predicates agree on random and structured triples", _equivalence, 20.0),
    (2, "dual-Dirac via the transpose and via (E, eps)", _duality, None),
    (3, "composites of Dirac and dual-Dirac maps", _composition, None),
    (4, "B-transform stability, instability instance, eps shift", _b_transforms, None),
    (5, "pushforward and pullback outputs, functoriality, kernel quotient", _push_pull, None),
    (6, "generalized complex endomorphisms and block matrices", _gc, None),
    (7, "invariant integrability against the formula", _integrability, 30.0),
    (8, "group-datum instances", _group_data, None),
    (9, "Schouten splitting independence and Jacobiator", _schouten, None),
]


def _check(number, title, fn, limit, emit):
    res = fn()
    ok, line = _report(number, title, res, limit)
    emit(line)
    return ok, res


@pytest.mark.parametrize("number,title,fn,limit", CRITERIA, ids=[f"criterion_{c[0]}" for c in CRITERIA])
def test_criterion(number, title, fn, limit, capsys):
    def emit(line):
        with capsys.disabled():
            print("\n" + line)

    ok, res = _check(number, title, fn, limit, emit)
    assert res.passed, f"failures: {res.failures[:3]}"
    if limit is not None:
        assert _ELAPSED[number] < limit


def test_total_runtime(capsys):
    total = sum(_ELAPSED.values())
    with capsys.disabled():
        print(f"\n[{'PASS' if total < 90 else 'FAIL'}] full suite runtime {total:.1f} s (limit 90 s)")
    assert len(_ELAPSED) == len(CRITERIA)
    assert total < 90


if __name__ == "__main__":
    results = [_check(n, t, f, lim, print)[0] for n, t, f, lim in CRITERIA]
    print(f"total {sum(_ELAPSED.values()):.1f} s, {sum(results)}/{len(results)} criteria pass")
    sys.exit(0 if all(results) else 1)
