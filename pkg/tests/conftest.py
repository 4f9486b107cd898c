"""Shared fixtures: the worked-example pair, strategies, and the grid oracle."""

from __future__ import annotations

import numpy as np
import pytest
from hypothesis import strategies as st

from merger_er_lab import CompanyProfile, MergerPair, derive_pair

# Two-company configuration used by most worked examples: A is priced at 4
# with 20 shares and risk charge 4, B at 2 with 10 shares and risk charge 3,
# so mu = (80, 20), rho = (80, 30), r* = 0.5, r** = 0.75.
EXAMPLE_A = dict(price=4.0, shares=20.0, risk_per_share=4.0)
EXAMPLE_B = dict(price=2.0, shares=10.0, risk_per_share=3.0)


@pytest.fixture(scope="session")
def example_pair() -> MergerPair:
    return derive_pair(CompanyProfile(**EXAMPLE_A), CompanyProfile(**EXAMPLE_B))


positive_floats = st.floats(min_value=1e-3, max_value=1e3, allow_nan=False, allow_infinity=False)
share_counts = st.floats(min_value=1.0, max_value=1e4, allow_nan=False, allow_infinity=False)


@st.composite
def profiles(draw) -> CompanyProfile:
    return CompanyProfile(
        price=draw(positive_floats),
        shares=draw(share_counts),
        risk_per_share=draw(positive_floats),
    )


@st.composite
def pairs(draw) -> MergerPair:
    return derive_pair(draw(profiles()), draw(profiles()))


@st.composite
def admissible_outcomes(draw) -> tuple[MergerPair, float, float]:
    """A pair plus (mu_m, rho_m) satisfying the feasibility preconditions."""
    pair = draw(pairs())
    gain = draw(st.floats(min_value=0.0, max_value=2.0))
    mu_m = pair.mu_sum * (1.0 + gain)
    t = draw(st.floats(min_value=1e-4, max_value=1.0))
    rho_m = pair.rho_floor + t * (pair.rho_sum - pair.rho_floor)
    return pair, mu_m, rho_m


def grid_accept_bounds(
    pair: MergerPair,
    mu_m: float,
    rho_m: float,
    r_max: float = 5.0,
    step: float = 1e-4,
):
    """Brute-force membership scan of the four defining inequalities.

    Vectorized re-statement of the per-share comparisons, independent of the
    closed-form bounds; returns (first, last) accepted grid ratio or None.
    """
    r = np.arange(0.0, r_max + step / 2.0, step)
    n_m = pair.a.shares + r * pair.b.shares
    value_share = mu_m / n_m
    risk_share = rho_m / n_m
    ok = (
        (value_share >= pair.a.price)
        & (r * value_share >= pair.b.price)
        & (risk_share <= pair.a.risk_per_share)
        & (r * risk_share <= pair.b.risk_per_share)
    )
    hits = np.nonzero(ok)[0]
    if hits.size == 0:
        return None
    return float(r[hits[0]]), float(r[hits[-1]])
