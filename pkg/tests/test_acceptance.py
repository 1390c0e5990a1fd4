"""Acceptance suite: one test per criterion, each printing a PASS line.

Every numeric comparison is exact (Fraction equality, tolerance zero).
Run with ``pytest tests/test_acceptance.py -v -s`` to see the lines.
"""

import random
import time
from fractions import Fraction as Q

import pytest

from helpers import hirzebruch_negative_coeffs, two_lines_negative_coeffs
from redlab.cli import main as cli_main
from redlab.dualgraph import (build_graph, chain_graph, classify,
                              discrepancies)
from redlab.hjcf import minor_det, uv_sequences
from redlab.lattice import (fixture_hirzebruch, fixture_two_lines, is_big,
                            lattice_blow_up, pull_back, zariski_decompose)
from redlab.redundancy import (GenericPoint, IntersectionPoint, blow_up,
                               blowup_depth_bound, chain_redundant_at,
                               enumerate_sequences, negative_part,
                               point_multiplicity, redundant_points)
from redlab.verify import (check_bracket_families, check_chain_tables,
                           check_d_closed_forms, verify_classification)

CORPUS_SEED = 20260810
CORPUS_SIZE = 10_000


class Timer:
    def __enter__(self):
        self.t0 = time.monotonic()
        return self

    def __exit__(self, *exc):
        self.elapsed = time.monotonic() - self.t0
        return False


@pytest.fixture(scope="module")
def random_corpus():
    """10^4 random strings with l <= 12 and weights <= 12, plus their
    matrix-solved discrepancies (shared by criteria 4 and 5)."""
    rng = random.Random(CORPUS_SEED)
    corpus = []
    for _ in range(CORPUS_SIZE):
        l = rng.randint(1, 12)
        ws = tuple(rng.randint(2, 12) for _ in range(l))
        a = discrepancies(chain_graph(ws)).as_tuple()
        corpus.append((ws, a))
    return corpus


def test_criterion_1_table_reproduction(capsys):
    with Timer() as t:
        res = check_chain_tables(single_max=12)
        assert res.ok, res.failures
        code = cli_main(["verify-tables"])
    assert code == 0
    assert t.elapsed < 1.0, f"took {t.elapsed:.2f}s"
    with capsys.disabled():
        print(f"\nPASS criterion 1: chain tables exact, verify-tables clean "
              f"({t.elapsed:.2f}s)")


def test_criterion_2_bracket_closed_forms(capsys):
    with Timer() as t:
        res = check_bracket_families(2, 10)
    assert res.ok, res.failures
    assert res.checked == 15 * 9
    assert t.elapsed < 1.0, f"took {t.elapsed:.2f}s"
    with capsys.disabled():
        print(f"PASS criterion 2: 15 bracket rows x b=2..10 exact, "
              f"a0 + a1 >= 1 off the canonical cases ({t.elapsed:.2f}s)")


def test_criterion_3_exhaustive_chain_classification(capsys):
    with Timer() as t:
        rep = verify_classification(6, 8, chains=True, d_types=False,
                                    brackets=False)
    assert rep.ok, rep.counterexamples[:5]
    assert rep.chains_checked == sum(7 ** l for l in range(1, 7))
    assert t.elapsed < 60.0, f"took {t.elapsed:.2f}s"
    with capsys.disabled():
        print(f"PASS criterion 3: {rep.chains_checked} chains, redundancy "
              f"matches the classified list, 0 counterexamples ({t.elapsed:.1f}s)")


def test_criterion_4_uv_identity_suite(random_corpus, capsys):
    with Timer() as t:
        for ws, a in random_corpus:
            d = uv_sequences(ws)
            l = len(ws)
            u, v, q = d.u, d.v, d.q
            # u, v against the independent minor determinants
            for s in range(1, l + 2):
                assert u[s] == minor_det(ws, set(range(s, l + 1)))
            for s in range(0, l + 1):
                assert v[s] == minor_det(ws, set(range(1, s + 1)))
            # (1) discrepancies from the matrix solve
            for i in range(1, l + 1):
                assert a[i - 1] == 1 - Q(u[i] + v[i], q)
            # (2) recurrences
            for i in range(1, l + 1):
                assert u[i + 1] == ws[i - 1] * u[i] - u[i - 1]
                assert v[i - 1] == ws[i - 1] * v[i] - v[i + 1]
            # (3) wronskian
            for i in range(0, l + 1):
                assert v[i] * u[i + 1] - v[i + 1] * u[i] == q
            # (4) bumping one weight adds u_i * v_i
            for i in range(1, l + 1):
                bumped = list(ws)
                bumped[i - 1] += 1
                q_new = uv_sequences(bumped).q
                assert q_new == v[i] * u[i] + q and q_new > q
            # (5)
            if l >= 2 and ws[0] >= 3:
                assert v[1] + v[2] < q
    assert t.elapsed < 30.0, f"took {t.elapsed:.2f}s"
    with capsys.disabled():
        print(f"PASS criterion 4: u/v identities (1)-(5) exact on "
              f"{len(random_corpus)} random strings ({t.elapsed:.1f}s)")


def test_criterion_5_pair_criterion_equivalence(random_corpus, capsys):
    mismatches = 0
    with Timer() as t:
        for ws, a in random_corpus:
            for k in range(1, len(ws)):
                if chain_redundant_at(ws, k) != (a[k - 1] + a[k] >= 1):
                    mismatches += 1
    assert mismatches == 0
    with capsys.disabled():
        print(f"PASS criterion 5: integer pair criterion equals discrepancy "
              f"sums, 0 mismatches ({t.elapsed:.1f}s)")


def test_criterion_6_d_type(capsys):
    with Timer() as t:
        res = check_d_closed_forms(b_max=8, arm_len_max=5, weight_max=5)
    assert res.ok, res.failures[:5]
    assert t.elapsed < 10.0, f"took {t.elapsed:.2f}s"
    with capsys.disabled():
        print(f"PASS criterion 6: D closed forms match solves on {res.checked} "
              f"graphs, four-case split correct ({t.elapsed:.1f}s)")


BDM_CORPUS = {
    (2, 2, 3, 2): 0, (2, 3, 2): 0, (2, 4): 0, (2,): 0, (5,): 0, (12,): 0,
    (2, 2, 3, 3): 1, (2, 3, 3, 2): 2, (2, 3, 3): 1, (3, 3): 1, (2, 5): 1,
}


def _check_chain_steps(cfg, p):
    """After blowing up p, every redundant point on the new curve has
    multiplicity mult_p - (1 - a) for the coefficient a of the followed
    curve; recurse along the enumerated chains."""
    child = blow_up(cfg, p)
    newest = cfg.next_id()
    for q in redundant_points(child):
        loc = q.location
        if isinstance(loc, IntersectionPoint):
            if newest not in loc.curves():
                continue
            other = loc.i if loc.j == newest else loc.j
            followed = child.coeff(other)
            assert q.mult == p.mult - (1 - followed)
            assert q.mult < p.mult
        elif isinstance(loc, GenericPoint):
            if loc.curve != newest:
                continue
        _check_chain_steps(child, q)


def test_criterion_7_blowup_dynamics(capsys):
    with Timer() as t:
        for ws, want in BDM_CORPUS.items():
            cfg = negative_part(chain_graph(ws))
            rep = enumerate_sequences(cfg, 12)
            assert not rep.unbounded and not rep.hit_bound
            assert rep.max_length == want, ws
            ms = [blowup_depth_bound(cfg, p) for p in redundant_points(cfg)]
            assert rep.max_length == (max(ms) if ms else 0), ws
            for p in redundant_points(cfg):
                _check_chain_steps(cfg, p)
    assert t.elapsed < 5.0, f"took {t.elapsed:.2f}s"
    with capsys.disabled():
        print(f"PASS criterion 7: enumerated max lengths equal max_p M(p), "
              f"drops are exactly 1 - a ({t.elapsed:.1f}s)")


def test_criterion_8_non_log_terminal_persistence(capsys):
    with Timer() as t:
        verts = [(0, 3)] + [(i, 2) for i in range(1, 5)]
        edges = [(0, i) for i in range(1, 5)]
        g = build_graph(verts, edges)
        d = discrepancies(g)
        assert d.as_tuple() == (Q(1), Q(1, 2), Q(1, 2), Q(1, 2), Q(1, 2))
        assert str(classify(d)) == "NonLogTerminal"
        rep = enumerate_sequences(negative_part(g), 5)
        assert rep.unbounded
        assert rep.max_length is None
        levels = {n.depth for n in rep.tree}
        assert levels == {1, 2, 3, 4, 5}
        # the generic family on the central curve survives every blow-up
        cfg = negative_part(g)
        for _ in range(5):
            assert any(isinstance(p.location, GenericPoint) and
                       point_multiplicity(cfg, p.location) >= 1
                       for p in redundant_points(cfg))
            cfg = blow_up(cfg, GenericPoint(0))
    assert t.elapsed < 5.0, f"took {t.elapsed:.2f}s"
    with capsys.disabled():
        print(f"PASS criterion 8: star is unbounded with redundant points at "
              f"every level to depth 5 ({t.elapsed:.1f}s)")


def test_criterion_9_lattice_solver(capsys):
    with Timer() as t:
        for m in range(4, 9):
            for n in range(4, m + 1):
                lat, mk, curves = fixture_two_lines(m, n)
                dec = zariski_decompose(lat, mk, curves)
                c1, c2 = two_lines_negative_coeffs(m, n)
                assert dict(dec.support) == {"l1": c1, "l2": c2}, (m, n)
                assert lat.pair(dec.P, dec.P) > 0
                assert is_big(lat, dec.P)
                new_lat, new_curves, e = lattice_blow_up(lat, ["l1", "l2"], curves)
                assert new_lat.rank == m + n + 2
                dec_up = zariski_decompose(new_lat, pull_back(mk) - e,
                                           new_curves + [("e", e)])
                assert dec_up.P == pull_back(dec.P), (m, n)
                assert dict(dec_up.support).get("e", Q(0)) == c1 + c2 - 1
        lat, mk, curves = fixture_hirzebruch(2, 3, [2, 3, 7])
        dec = zariski_decompose(lat, mk, curves)
        sigma_c, fiber_cs = hirzebruch_negative_coeffs(2, 3, [2, 3, 7])
        assert sigma_c == Q(44, 43)
        assert fiber_cs == [Q(22, 43), Q(29, 43), Q(37, 43)]
        assert dict(dec.support) == {"sigma": sigma_c, "F1": fiber_cs[0],
                                     "F2": fiber_cs[1], "F3": fiber_cs[2]}
    assert t.elapsed < 5.0, f"took {t.elapsed:.2f}s"
    with capsys.disabled():
        print(f"PASS criterion 9: lattice solver reproduces both fixture "
              f"closed forms; blow-up pulls the nef part back ({t.elapsed:.1f}s)")
