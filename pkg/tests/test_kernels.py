import os
import subprocess
import sys

import numpy as np
import pytest

from biquandles import _pykernels as pure
from biquandles import kernels
from biquandles.braids import word_ops
from biquandles.catalog import builtin
from biquandles.core import identity_table

compiled = kernels.compiled
needs_compiled = pytest.mark.skipif(compiled is None, reason="compiled extension not built")


@needs_compiled
@pytest.mark.parametrize("n", [2, 3, 4])
def test_solve_up_agrees(n):
    D = identity_table(n)
    a, b = pure.solve_up(D), compiled.solve_up(D)
    assert a.shape == b.shape and (a == b).all()


@needs_compiled
def test_solve_up_agrees_nontrivial_down():
    D = builtin("BQ^3_3").birack.down
    assert (pure.solve_up(D) == compiled.solve_up(D)).all()


@needs_compiled
@pytest.mark.parametrize("n", [2, 3])
def test_admissible_downs_agree(n):
    assert (pure.admissible_downs(n) == compiled.admissible_downs(n)).all()


@needs_compiled
def test_apply_and_count_agree():
    tables = builtin("bigelow-pair").pair.tables()
    ops = word_ops(builtin("b1"), 5)
    X0 = np.random.default_rng(3).integers(0, 4, size=(500, 5))
    X1, X2 = X0.copy(), X0.copy()
    pure.apply_ops(X1, tables, ops)
    compiled.apply_ops(X2, tables, ops)
    assert (X1 == X2).all()
    assert pure.count_fixed(tables, ops, 4, 5) == compiled.count_fixed(tables, ops, 4, 5) == 736


def test_backend_reported():
    assert kernels.backend() == ("compiled" if compiled is not None else "python")


def test_pure_fallback_selected_by_env():
    env = dict(os.environ, BIQUANDLES_PURE="1")
    code = ("from biquandles import kernels; from biquandles.catalog import builtin; "
            "from biquandles.braids import fixed_point_count as f; "
            "print(kernels.backend(), f(builtin('b1'), builtin('bigelow-pair').pair, 5))")
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
    assert out.stdout.split() == ["python", "736"]
