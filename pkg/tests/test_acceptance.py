"""The ten acceptance criteria, each at its stated scale and time limit.

Every test prints one ``PASS``/``FAIL`` line (shown even under output capture)
and then asserts on the same outcome.
"""

import time

import pytest

from zerohecke.cli import characteristic
from zerohecke.combinat import (
    Composition,
    Multichain,
    Permutation,
    PWord,
    WeakComposition,
    compositions,
    parse_multichain,
)
from zerohecke.polyring import XPoly, transferred_demazure
from zerohecke.srring import SRElement, hecke_action, transfer
from zerohecke.verify import CHECKS, P211_LNT


def _run(calls):
    """Run ``(identity, kwargs)`` pairs; returns the first failure as text, or None."""
    for identity, kwargs in calls:
        out = CHECKS[identity](**kwargs)
        if not out.ok:
            return f"{identity}{kwargs}: {out.witness}"
    return None


@pytest.fixture
def criterion(capsys):
    def report(number, title, limit, body):
        start = time.perf_counter()
        failure = body()
        elapsed = time.perf_counter() - start
        if failure is None and elapsed >= limit:
            failure = f"took {elapsed:.1f} s, limit {limit} s"
        with capsys.disabled():
            status = "PASS" if failure is None else "FAIL"
            print(f"\n{status} criterion {number}: {title} ({elapsed:.2f} s)"
                  + ("" if failure is None else f" -- {failure}"))
        assert failure is None, failure

    return report


def _worked_examples():
    y = lambda text: SRElement.monomial(Multichain.from_bar_form(text))  # noqa: E731
    f = y("1|34||2|")
    x = XPoly.monomial((4, 1, 3, 3))
    checks = [
        ("pibar_1 y", hecke_action(1, f) == y("2|34||1|")),
        ("pibar_2 y", hecke_action(2, f) == -f),
        ("pibar_3 y", hecke_action(3, f) == SRElement.zero(4)),
        ("transfer", transfer(f) == x),
        ("pibar'_1 x", transferred_demazure(1, x) == XPoly.monomial((1, 4, 3, 3))),
        ("pibar'_2 x", transferred_demazure(2, x) == XPoly.monomial((4, 1, 3, 3), -1)),
        ("pibar'_3 x", transferred_demazure(3, x).is_zero()),
    ]
    m = Multichain.from_lists([[2], [2], [1, 2, 4], [1, 2, 3, 4]], 4)
    alpha, sigma = m.encode()
    checks += [
        ("bar form", m.bar_form() == "2||14|3|"),
        ("encoding", alpha == WeakComposition.of(1, 0, 2, 1, 0) and sigma == Permutation.of(2, 1, 4, 3)),
        ("p-word", parse_multichain("3|14||2|5").pword().letters == (2, 4, 1, 2, 5)),
        ("p'", parse_multichain("3|14||2|5").pword().prime() == (1, 3, 3, 4)),
        ("D(p)", PWord((2, 5, 1, 2, 4), 4).descent_set() == {2}),
        ("complement", Composition.of(2, 3, 1, 1).complement() == Composition.of(1, 2, 1, 3)),
        ("transpose", Composition.of(2, 3, 1, 1).transpose() == Composition.of(3, 1, 2, 1)),
        ("P_211", characteristic("2,1,1", "nc", "lnt").to_text() == P211_LNT),
    ]
    bad = [name for name, ok in checks if not ok]
    return f"mismatch: {', '.join(bad)}" if bad else None


def test_criterion_01_worked_examples(criterion):
    criterion(1, "worked examples bit-exact", 1, _worked_examples)


def test_criterion_02_operator_relations(criterion):
    calls = [("sr-relations", dict(n=n, kmax=3)) for n in (2, 3, 4)]
    criterion(2, "operator relations on F[B_n], n = 2..4, chain length <= 3", 30, lambda: _run(calls))


def test_criterion_03_invariants_and_theta(criterion):
    calls = []
    for n in range(1, 5):
        calls += [("invariant-algebra", dict(n=n, kmax=3)), ("theta-linearity", dict(n=n, kmax=3))]
    criterion(3, "invariant algebra and Theta-linearity, n <= 4, chain length <= 3", 60, lambda: _run(calls))


def test_criterion_04_component_isomorphism(criterion):
    calls = [("lemma-Na", dict(n=n, k=k)) for n in range(1, 5) for k in range(4)]
    criterion(4, "F[B_n]_alpha ~ H_n(0) pi_w0(alpha^c), n <= 4, k <= 3", 60, lambda: _run(calls))


def test_criterion_05_quotient_characteristic(criterion):
    calls = [("theorem-1", dict(alpha=",".join(map(str, a.parts))))
             for n in range(1, 6) for a in compositions(n)]
    criterion(5, "quotient dimension, Q_beta ~ P_beta, nc characteristic and specializations, n <= 5",
              120, lambda: _run(calls))


def test_criterion_06_multigraded_characteristic(criterion):
    calls = [("theorem-2", dict(n=n, K=4)) for n in range(1, 5)]
    criterion(6, "three expressions for Ch_{q,t}, n <= 4, K = 4", 120, lambda: _run(calls))


def test_criterion_07_corollaries(criterion):
    calls = []
    for n in range(1, 5):
        calls += [("garsia-gessel", dict(n=n, L=3)), ("garsia-gessel-second", dict(n=n, L=3))]
    calls += [("macmahon-carlitz", dict(n=n, K=6, qcap=None)) for n in range(1, 7)]
    calls += [("abr", dict(n=n, L=4)) for n in range(1, 6)]
    calls += [("box", dict(n=n, k=k)) for n in range(1, 6) for k in range(5)]
    criterion(7, "Garsia-Gessel (two forms), MacMahon-Carlitz, ABR and box counts", 180, lambda: _run(calls))


def test_criterion_08_nsym(criterion):
    calls = [("bz-inner", dict(n=5)), ("product-formula", dict(total=6)),
             ("periodic-corollary", dict(n=4, bmax=3))]
    criterion(8, "semi-self-duality, product formula, periodic corollary", 60, lambda: _run(calls))


def test_criterion_09_regular_representation(criterion):
    calls = [("regular-representation", dict(n=n)) for n in range(1, 6)]
    criterion(9, "F[B_n]/(Theta) has dimension n! and the full nc characteristic, n <= 5", 30,
              lambda: _run(calls))


def test_criterion_10_negative_control(criterion):
    criterion(10, "transfer map is not 0-Hecke equivariant", 1,
              lambda: _run([("transfer-counterexample", {})]))
