"""Fixtures produce real hardyz outputs by invoking its CLI -- the only
interface plotkit is allowed to know about."""

import subprocess
import sys

import pytest


def _hardyz(*args):
    proc = subprocess.run([sys.executable, "-m", "hardyz.cli", *args],
                          capture_output=True, text=True)
    assert proc.returncode == 0, proc.stderr
    return proc.stdout.strip()


@pytest.fixture(scope="session")
def primary_out(tmp_path_factory):
    out = tmp_path_factory.mktemp("hardyz-out")
    o = str(out)
    _hardyz("z-eval", "--t0", "10", "--t1", "60", "--samples", "400",
            "--out-dir", o)
    _hardyz("zeros", "--t0", "14", "--t1", "500", "--out-dir", o)
    _hardyz("table2", "--T", "100,200,500", "--H", "100", "--out-dir", o)
    _hardyz("paircorr", "--tol", "1e-8", "--out-dir", o)
    return out
