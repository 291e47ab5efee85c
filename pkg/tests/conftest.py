"""Shared fixtures: the canonical mode, lattices and a seeded generator."""

import numpy as np
import pytest

from prahmlab.core.config import RunConfig
from prahmlab.maxwell.grid import GridSpec
from prahmlab.packet.params import PacketSpec
from prahmlab.waveguide.modes import ModeKind, ModeSpec


@pytest.fixture
def te_mode() -> ModeSpec:
    """n = 1.5, ω = 2π, κ = 0.6·nω, separable-cosine profile."""
    return ModeSpec.canonical()


@pytest.fixture
def tm_mode() -> ModeSpec:
    return ModeSpec.canonical(kind=ModeKind.TM)


@pytest.fixture(params=[ModeKind.TE, ModeKind.TM], ids=["te", "tm"])
def mode(request: pytest.FixtureRequest) -> ModeSpec:
    return ModeSpec.canonical(kind=request.param)


@pytest.fixture
def canonical_grid() -> GridSpec:
    return GridSpec.canonical()


@pytest.fixture
def packet_spec(te_mode: ModeSpec) -> PacketSpec:
    return PacketSpec(M=1, mode=te_mode)


@pytest.fixture
def config() -> RunConfig:
    return RunConfig()


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(20240611)
