import os
import random
import subprocess
import sys

from novikov import _elim_pure, kernels


def _random_matrix(rng, nrows, ncols, lo=-9, hi=9):
    return [[rng.randint(lo, hi) for _ in range(ncols)] for _ in range(nrows)]


def test_selected_kernel_reports_implementation():
    assert kernels.IMPLEMENTATION in ("cython", "pure-python")
    assert callable(kernels.rank_int)


def test_pure_kernel_known_ranks():
    assert _elim_pure.rank_int([], 3) == 0
    assert _elim_pure.rank_int([[0, 0], [0, 0]], 2) == 0
    assert _elim_pure.rank_int([[1, 2], [2, 4]], 2) == 1
    assert _elim_pure.rank_int([[1, 0], [0, 1]], 2) == 2
    assert _elim_pure.rank_int([[2, 3, 5], [7, 11, 13]], 3) == 2


def test_kernels_agree_on_random_matrices():
    rng = random.Random(0)
    for _ in range(300):
        nrows = rng.randint(0, 8)
        ncols = rng.randint(1, 8)
        m = _random_matrix(rng, nrows, ncols)
        assert kernels.rank_int(m, ncols) == _elim_pure.rank_int(m, ncols)


def test_kernels_agree_on_big_entries():
    rng = random.Random(1)
    for _ in range(30):
        m = _random_matrix(rng, 6, 6, -10 ** 12, 10 ** 12)
        assert kernels.rank_int(m, 6) == _elim_pure.rank_int(m, 6)


def test_kernel_does_not_modify_input():
    m = [[1, 2, 3], [4, 5, 6]]
    snapshot = [row[:] for row in m]
    kernels.rank_int(m, 3)
    assert m == snapshot


def test_env_var_forces_pure_fallback():
    code = ("import novikov.kernels as k; "
            "print(k.IMPLEMENTATION); "
            "print(k.rank_int([[1, 2], [3, 4]], 2))")
    env = dict(os.environ, NOVIKOV_PURE_PYTHON="1")
    out = subprocess.run([sys.executable, "-c", code], env=env,
                         capture_output=True, text=True, check=True)
    assert out.stdout.split() == ["pure-python", "2"]
