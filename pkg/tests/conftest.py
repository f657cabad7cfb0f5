import numpy as np
import pytest

from utp import cli


def random_state(d: int, rng) -> np.ndarray:
    amps = rng.standard_normal(d) + 1j * rng.standard_normal(d)
    return amps / np.linalg.norm(amps)


def haar_matrix(d: int, rng) -> np.ndarray:
    z = (rng.standard_normal((d, d)) + 1j * rng.standard_normal((d, d))) / np.sqrt(2)
    q, r = np.linalg.qr(z)
    return q * (np.diag(r) / np.abs(np.diag(r))).conj()[None, :]


@pytest.fixture
def run_cli(capsys):
    """Run the CLI in-process; returns (exit_code, stdout, stderr)."""

    def _run(argv):
        capsys.readouterr()  # drop anything pending
        code = cli.run(argv)
        captured = capsys.readouterr()
        return code, captured.out, captured.err

    return _run
