"""Deterministic low-discrepancy sequences used for seeds and sample grids."""

import numpy as np

_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def _radical_inverse(index, base):
    inv = 0.0
    f = 1.0 / base
    while index > 0:
        inv += f * (index % base)
        index //= base
        f /= base
    return inv


def halton(count, dim, start=1):
    """First `count` Halton points in [0,1)^dim, skipping `start-1` terms.

    Deterministic for fixed arguments; bases are the first `dim` primes.
    """
    if dim > len(_PRIMES):
        raise ValueError(f"halton supports up to {len(_PRIMES)} dimensions")
    pts = np.empty((count, dim))
    for j in range(dim):
        base = _PRIMES[j]
        for i in range(count):
            pts[i, j] = _radical_inverse(start + i, base)
    return pts


def unit_box_samples(count, dim, start=1):
    """Halton points mapped to the symmetric unit box [-1,1]^dim."""
    return 2.0 * halton(count, dim, start=start) - 1.0


def box_samples(count, box, start=1):
    """Halton points mapped into `box`, a sequence of (lo, hi) pairs."""
    box = np.asarray(box, dtype=float)
    lo, hi = box[:, 0], box[:, 1]
    return lo + halton(count, len(box), start=start) * (hi - lo)


def coefficient_sequence(count, dim):
    """Fixed trial coefficient vectors in [-1,1]^dim for regular-element search."""
    return unit_box_samples(count, dim, start=3)
