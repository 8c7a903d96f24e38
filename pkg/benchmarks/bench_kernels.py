"""Throughput comparison of the numba and pure-numpy kernel backends.

Usage: python benchmarks/bench_kernels.py [N]

Times the three hot kernels (rigid-rotor energies, line-strength factors,
Boltzmann weights) on N synthetic lines with both implementations.  The
active backend is whatever trisym._kernels selected at import; the numpy
fallback is always available via numpy_backend().  Run with
TRISYM_NO_NUMBA=1 to confirm the fallback is the one being compared
against itself.
"""

import sys
import time

import numpy as np

from trisym import _kernels


def make_inputs(n, seed=7):
    rng = np.random.default_rng(seed)
    j = rng.integers(0, 60, n)
    k = np.array([rng.integers(0, jj + 1) for jj in j])
    dj = rng.integers(-1, 2, n)
    dk = rng.choice([-1, 1], n)
    return j, k, dj, dk


def bench(label, fn, *args, repeats=20):
    fn(*args)  # warm up (JIT compile / cache touch)
    best = min(
        (lambda t0: (fn(*args), time.perf_counter() - t0))(time.perf_counter())[1]
        for _ in range(repeats)
    )
    print(f"  {label:<22s} {best * 1e3:8.3f} ms")
    return best


def main():
    n = int(sys.argv[1]) if len(sys.argv) > 1 else 2_000_000
    j, k, dj, dk = make_inputs(n)
    np_rot, np_hl, np_boltz = _kernels.numpy_backend()
    energies = np_rot(j, k, 0.35, 0.17)

    print(f"active backend: {_kernels.BACKEND}   ({n} lines, best of 20)")
    print("rot_energy:")
    t_a = bench("active", _kernels.rot_energy_array, j, k, 0.35, 0.17)
    t_n = bench("numpy fallback", np_rot, j, k, 0.35, 0.17)
    print(f"  speedup: {t_n / t_a:.2f}x")
    print("honl_london (perpendicular):")
    t_a = bench("active", _kernels.honl_london_array, j, k, dj, dk, False)
    t_n = bench("numpy fallback", np_hl, j, k, dj, dk, False)
    print(f"  speedup: {t_n / t_a:.2f}x")
    print("boltzmann:")
    t_a = bench("active", _kernels.boltzmann_array, energies, 205.7)
    t_n = bench("numpy fallback", np_boltz, energies, 205.7)
    print(f"  speedup: {t_n / t_a:.2f}x")

    # sanity: both paths agree on this input
    assert np.allclose(
        _kernels.honl_london_array(j, k, dj, dk, False),
        np_hl(j, k, dj, dk, False),
        rtol=1e-13, atol=1e-15,
    )
    print("parity check: OK")


if __name__ == "__main__":
    main()
