"""Shared fixtures: canonical lattices and profiles used across the suite."""

from __future__ import annotations

import pytest

from diatomic_waves import GaussianProfile, LatticeParams

#: NaCl-like physical inputs (masses in kg, spring constant in N/m,
#: spacing and observation window in m).
NACL_INPUTS = dict(
    m_heavy=5.88e-26,
    m_light=3.81e-26,
    spring_k=15.0,
    spacing=2.82e-10,
    window=1e-3,
)


@pytest.fixture
def gaussian() -> GaussianProfile:
    return GaussianProfile()


@pytest.fixture
def desk():
    """Factory for the canonical desk-scale lattice (gamma1/gamma2 fixed)."""

    def make(h: float) -> LatticeParams:
        return LatticeParams(gamma1=0.82, gamma2=1.27, h=h)

    return make


@pytest.fixture
def nacl_params() -> LatticeParams:
    return LatticeParams.from_masses(**NACL_INPUTS)


#: One line per acceptance criterion, echoed after the run (capture-safe).
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
