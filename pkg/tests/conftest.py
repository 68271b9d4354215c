import os

import pytest

from origami_lab import load_origami

FIXTURES = os.path.join(os.path.dirname(__file__), "..", "fixtures")


def fixture_path(name):
    return os.path.join(FIXTURES, name + ".txt")


def fixture_origami(name):
    return load_origami(fixture_path(name))


@pytest.fixture
def l3():
    return fixture_origami("l3")


@pytest.fixture
def mstar():
    return fixture_origami("mstar")


@pytest.fixture
def mstarstar():
    return fixture_origami("mstarstar")


@pytest.fixture
def dema():
    return fixture_origami("dema")


@pytest.fixture
def ew():
    return fixture_origami("ew")


@pytest.fixture
def ltilde():
    return fixture_origami("ltilde")
