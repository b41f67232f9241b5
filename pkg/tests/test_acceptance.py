"""Exit criteria. Each test is one criterion and carries its own time budget."""
import random
import time
from contextlib import contextmanager

from multiproj import Atom, Factor, SheafSum, Space, line
from multiproj.beilinson import corner_summand, e1_page, kclass_check
from multiproj.blocks import standard_blocks, verify_block_axioms, verify_duality
from multiproj.bott import bott_chi, bott_h
from multiproj.criteria import (
    CERTIFIED_SPLIT,
    FAIL,
    INCONCLUSIVE,
    PASS,
    acm_check,
    characterize,
    omega_bundle,
    scan_intermediate,
    split_check,
)

from conftest import random_atom, random_sheaf, spaces_up_to


@contextmanager
def budget(seconds):
    start = time.perf_counter()
    yield
    elapsed = time.perf_counter() - start
    assert elapsed < seconds, f"took {elapsed:.2f}s, budget {seconds}s"


def window(X, S):
    a = max(abs(f.a) for atom, _ in S.terms for f in atom)
    B = X.d + a + X.s + 2
    return range(-B, B + 1)


def test_c1_bott_euler_oracle():
    """C1 Bott vs Euler-sequence chi and Serre duality, n<=4, |a|<=12, < 1 s"""
    with budget(1.0):
        for n in range(1, 5):
            for p in range(n + 1):
                for a in range(-12, 13):
                    f = Factor(n, p, a)
                    hs = [bott_h(f, q) for q in range(n + 1)]
                    assert sum((-1) ** q * h for q, h in enumerate(hs)) == bott_chi(f)
                    g = Factor(n, n - p, -a)
                    assert hs == [bott_h(g, n - q) for q in range(n + 1)]


def test_c2_block_axioms():
    """C2 standard block collections pass every axiom for all X with d<=6, < 5 s"""
    spaces = spaces_up_to(6)
    assert len(spaces) == 63
    with budget(5.0):
        for X in spaces:
            assert verify_block_axioms(standard_blocks(X)) == [], X


def test_c3_dual_delta_pattern():
    """C3 dual collection delta pattern on P1xP1, P1xP2, P2xP2, P1xP1xP1, < 10 s"""
    with budget(10.0):
        for dims in [(1, 1), (1, 2), (2, 2), (1, 1, 1)]:
            assert verify_duality(Space(dims)) == [], dims


def test_c4_beilinson_kclass():
    """C4 variant II pages converge in K-theory for 50+ random line sums per space, < 10 s"""
    rng = random.Random(4)
    with budget(10.0):
        for dims in [(1, 1), (1, 2)]:
            X = Space(dims)
            for _ in range(60):
                F = random_sheaf(rng, X, lo=-3, hi=3, forms=False)
                kc = kclass_check(e1_page(X, F, "II"))
                assert kc.ok and not any(kc.residual), F
            O = line(X, *([0] * X.s))
            page = e1_page(X, O, "II")
            assert page.cells == {(0, 0): [(Atom.line(X.dims, [0] * X.s), 1)]}


def test_c5_corner_soundness():
    """C5 predicted O^h0 summand is inside F whenever the hypotheses hold (200 sheaves)"""
    rng = random.Random(5)
    X = Space([1, 1])
    held = 0
    for _ in range(200):
        F = random_sheaf(rng, X, lo=-2, hi=2)
        if rng.random() < 0.5:
            F = F + line(X, 0, 0)
        rep = corner_summand(X, F)
        if rep.hypotheses_hold:
            held += 1
            trivial = Atom.line(X.dims, (0, 0))
            assert rep.predicted.multiplicity(trivial) <= F.multiplicity(trivial)
            assert rep.confirmed
    assert held > 0


def test_c6_splitting_criterion():
    """C6 box splitting criterion: soundness, interior forms inconclusive, O(-3,4) witness, < 30 s"""
    rng = random.Random(6)
    with budget(30.0):
        X = Space([1, 1])
        for _ in range(300):
            k = rng.randint(1, 4)
            E = SheafSum.of(X, [Atom.line(X.dims, (rng.randint(-2, 2), rng.randint(-2, 2))) for _ in range(k)])
            v = split_check(X, E)
            if v.verdict == CERTIFIED_SPLIT:
                assert all(f.p == 0 or f.p == f.n for a, _ in E.terms for f in a)
        for dims in [(2, 1), (2, 2), (3,), (1, 3), (2, 1, 1)]:
            Y = Space(dims)
            for _ in range(40):
                atom = random_atom(rng, dims)
                if any(0 < f.p < f.n for f in atom):
                    assert split_check(Y, SheafSum.of(Y, [atom])).verdict == INCONCLUSIVE, atom
        Z = Space([2, 3])
        v = split_check(Z, line(Z, -3, 4))
        assert v.verdict == INCONCLUSIVE
        assert 0 < v.witness.degree < Z.d and v.witness.dim > 0


def test_c7_acm_window_completeness():
    """C7 acm_check equals a brute-force scan over [-B, B] for 100 random atoms"""
    rng = random.Random(7)
    for _ in range(100):
        X = rng.choice(spaces_up_to(5))
        S = SheafSum.of(X, [random_atom(rng, X.dims, -6, 6)])
        assert acm_check(X, S) == scan_intermediate(X, S, window(X, S)), S


def test_c8_characterization():
    """C8 omega bundles characterize with PASS for d<=5, corner h^j == 1; perturbations FAIL, < 30 s"""
    with budget(30.0):
        for X in spaces_up_to(5):
            for j in range(1, X.d):
                F = omega_bundle(X, j)
                res = characterize(X, j, F)
                assert res.verdict == PASS, (X, j)
                corner = [c for c in res.checks if c.group == "corner"]
                assert len(corner) == len(standard_blocks(X).blocks[X.d - j])
                assert all(c.dim == 1 for c in corner)
                # first summand swapped for O
                bad = SheafSum.of(X, F.atoms()[1:] + [Atom.line(X.dims, [0] * X.s)])
                assert characterize(X, j, bad).verdict == FAIL, (X, j)


def test_c9_horrocks():
    """C9 on P2 and P3 split_check agrees with direct scanning (200 sums); Om^1 twists inconclusive"""
    rng = random.Random(9)
    for n in (2, 3):
        X = Space([n])
        for _ in range(100):
            S = random_sheaf(rng, X, lo=-4, hi=4)
            certified = split_check(X, S).verdict == CERTIFIED_SPLIT
            no_intermediate = not scan_intermediate(X, S, window(X, S))
            assert certified == no_intermediate, S
        for k in range(-10, 11):
            assert split_check(X, SheafSum.of(X, [Atom([Factor(n, 1, k)])])).verdict == INCONCLUSIVE
