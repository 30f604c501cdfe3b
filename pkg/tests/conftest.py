"""Shared fixtures: the six reference signals at their standard size."""

import pytest

import chaos01 as c


@pytest.fixture(scope="session")
def sine_series():
    return c.gen_sine(100.0, 5000.0, 5000)


@pytest.fixture(scope="session")
def sawtooth_series():
    return c.gen_sawtooth(100.0, 5000.0, 5000)


@pytest.fixture(scope="session")
def quasi_series():
    return c.gen_quasiperiodic(5000.0, 5000)


@pytest.fixture(scope="session")
def chirp_series():
    return c.gen_chirp(0.0, 100.0, 1.0, 5000.0)


@pytest.fixture(scope="session")
def henon_series():
    return c.gen_henon()


@pytest.fixture(scope="session")
def random_series():
    return c.gen_uniform_random(5000, seed=0)
