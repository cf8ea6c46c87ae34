"""Random uniform registers and lowering profiles, for tests and experiments.

All generation is driven by an explicit random.Random so runs are
reproducible from a seed.  Pairs are produced profile-first: a random
legal profile determines its unique Fibonacci source, and the pair is
kept only when the staged lowering actually reaches the profile (a
pending term colliding with a parked residual makes a profile
unreachable; such draws are resampled).
"""

from __future__ import annotations

import random

from .anf import Anf, Monomial
from .register import Nlfsr
from .transform import GaloisProfile, ShiftMove, ShiftRejected, lower_to_profile, reconstruct_fibonacci


def random_monomial(rng: random.Random, lowest: int, highest: int, max_degree: int = 3) -> Monomial:
    """A random product-term over x_lowest..x_highest."""
    width = highest - lowest + 1
    degree = rng.randint(1, min(max_degree, width))
    return Monomial(rng.sample(range(lowest, highest + 1), degree))


def random_residual(
    rng: random.Random,
    tau: int,
    *,
    forbid_x0: bool = False,
    allow_constant: bool = True,
    max_terms: int = 3,
) -> Anf:
    """A random residual reading only x_0..x_tau (possibly zero)."""
    lowest = 1 if forbid_x0 else 0
    terms: list[Monomial] = []
    for _ in range(rng.randint(0, max_terms)):
        if allow_constant and rng.random() < 0.1:
            terms.append(Monomial())
        elif lowest <= tau:
            terms.append(random_monomial(rng, lowest, tau))
    return Anf(terms)


def random_profile(rng: random.Random, n: int, *, allow_constant: bool = True) -> GaloisProfile:
    """A random legal profile with a genuinely Galois terminal bit."""
    while True:
        tau = rng.randrange(0, n - 1)
        residuals = []
        for k in range(tau, n):
            residuals.append(
                random_residual(
                    rng, tau, forbid_x0=(k == n - 1), allow_constant=allow_constant
                )
            )
        if residuals[0].is_zero:
            continue  # the terminal bit itself must keep a residual
        return GaloisProfile(n, tau, tuple(residuals))


def random_lowering(
    rng: random.Random, n: int, *, allow_constant: bool = True
) -> tuple[Nlfsr, GaloisProfile, Nlfsr, list[ShiftMove]]:
    """A reachable (fibonacci, profile, galois, moves) quadruple.

    The Fibonacci source is reconstructed from the profile's register, so
    the pair is consistent by construction; unreachable profiles are
    resampled.
    """
    while True:
        profile = random_profile(rng, n, allow_constant=allow_constant)
        fib = reconstruct_fibonacci(profile.register())
        try:
            galois, moves = lower_to_profile(fib, profile)
        except ShiftRejected:
            continue
        return fib, profile, galois, moves
