"""Built-in cross-convention checks, runnable via `novikov self-check`.

Each check pits two independent computation paths against each other:
the cut-based deformation complex against direct twisted evaluation, the
fiber-level kernel/cokernel oracle against both, and the Leibniz identity
tying the cup product transport to the twisted coboundary sign.
"""

from __future__ import annotations

import random
from fractions import Fraction

from . import corpus
from .complexes import twisted_cup, twisted_coboundary_values
from .invariants import novikov_numbers, twisted_dims
from .twisted import DeformationComplex


def _random_rationals(rng, count):
    out = []
    while len(out) < count:
        a = Fraction(rng.randint(-9, 9), rng.randint(1, 9))
        if a != 0:
            out.append(a)
    return out


def check_deformation_convention(report):
    """Deformation complex at a == twisted dimensions at 1/a == oracle."""
    rng = random.Random(20260826)
    F = corpus.circle(3).complex
    cases = [
        (corpus.torus(), F, corpus.SimplicialSelfMap.identity(F)),
        (corpus.mapping_torus(F, corpus.SimplicialSelfMap(F, {0: 1, 1: 2, 2: 0})),
         F, corpus.SimplicialSelfMap(F, {0: 1, 1: 2, 2: 0})),
    ]
    for space, fiber, h in cases:
        D = DeformationComplex(space.cut)
        for a in _random_rationals(rng, 5) + [Fraction(1)]:
            lhs = [D.dim_at(q, a) for q in range(space.dimension + 1)]
            mid = twisted_dims(space, 1 / a)
            rhs = corpus.mv_oracle_dims(fiber, h, 1 / a)
            report("deformation convention "
                   f"({space.label}, a={a})", lhs == mid == rhs)


def check_leibniz(report):
    """delta(u cup v) = delta(u) cup v + (-1)^p u cup delta(v), twisted."""
    rng = random.Random(4)
    S = corpus.surface(2)
    X, z = S.complex, S.cocycle
    ok = True
    for _ in range(10):
        a1, a2 = _random_rationals(rng, 2)
        for p, q in ((0, 0), (0, 1), (1, 0), (1, 1)):
            u = [Fraction(rng.randint(-3, 3)) for _ in range(X.n_simplices(p))]
            v = [Fraction(rng.randint(-3, 3)) for _ in range(X.n_simplices(q))]
            ok = ok and _leibniz_holds(X, z, p, q, a1, a2, u, v)
    report("twisted Leibniz identity", ok)


def _apply(rows, vec):
    return [sum(r[j] * vec[j] for j in range(len(vec))) for r in rows]


def _leibniz_holds(X, z, p, q, a1, a2, u, v):
    lhs_vec = twisted_cup(X, z, p, q, a1, a2, u, v)
    d_rows = twisted_coboundary_values(X, z, p + q, a1 * a2)
    lhs = _apply(d_rows, lhs_vec) if d_rows else []
    du = _apply(twisted_coboundary_values(X, z, p, a1) or [], u)
    dv = _apply(twisted_coboundary_values(X, z, q, a2) or [], v)
    term1 = twisted_cup(X, z, p + 1, q, a1, a2, du, v) if p + 1 + q <= X.dim else []
    term2 = twisted_cup(X, z, p, q + 1, a1, a2, u, dv) if p + q + 1 <= X.dim else []
    sign = (-1) ** p
    n = max(len(lhs), len(term1), len(term2))

    def at(vec, i):
        return vec[i] if i < len(vec) else Fraction(0)

    return all(at(lhs, i) == at(term1, i) + sign * at(term2, i)
               for i in range(n))


def check_oracle_vs_generic(report):
    """Generic oracle dims equal Novikov numbers on mapping tori."""
    F = corpus.circle(3).complex
    h = corpus.SimplicialSelfMap.identity(F)
    space = corpus.torus()
    b = novikov_numbers(space)
    dims = corpus.mv_oracle_dims(F, h, Fraction(17, 5))
    report("oracle at a generic point vs Novikov numbers", dims == b)


def run(verbose=True) -> int:
    passed = 0
    failed = 0
    failures = []

    def report(name, ok):
        nonlocal passed, failed
        if ok:
            passed += 1
        else:
            failed += 1
            failures.append(name)
        if verbose:
            print(f"{'pass' if ok else 'FAIL'}: {name}")

    check_deformation_convention(report)
    check_leibniz(report)
    check_oracle_vs_generic(report)
    if verbose:
        print(f"{passed} passed, {failed} failed")
    return failed
