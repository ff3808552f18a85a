import importlib.util
from pathlib import Path

import pytest

from assocforms.kernels import BACKEND

BENCH = Path(__file__).resolve().parents[1] / "benchmarks" / "bench_kernels.py"


@pytest.mark.skipif(BACKEND != "cython", reason="compiled kernels not built")
def test_benchmark_runs_and_backends_agree(capsys):
    spec = importlib.util.spec_from_file_location("bench_kernels", BENCH)
    mod = importlib.util.module_from_spec(spec)
    spec.loader.exec_module(mod)
    assert mod.main(["--repeat", "1"]) == 0
    out = capsys.readouterr().out
    assert "rref_mod" in out and "disagree" not in out
