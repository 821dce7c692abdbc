import random

import pytest

from tietze.words import canonical_form

LETTERS = "abcdefghijklmnopqrstuvwxyz"


def w(text):
    """Word from compact letters: lowercase generator, uppercase inverse."""
    return tuple(LETTERS.index(c) + 1 if c.islower() else -(LETTERS.index(c.lower()) + 1)
                 for c in text)


def cf(text):
    return canonical_form(w(text))


def random_relator(rng, length, ngens):
    """Random nonempty canonical relator of roughly ``length`` symbols."""
    while True:
        raw = [rng.choice((1, -1)) * rng.randint(1, ngens) for _ in range(length)]
        r = canonical_form(raw)
        if r:
            return r


@pytest.fixture
def rng():
    return random.Random(20240601)


def pytest_terminal_summary(terminalreporter):
    mod = __import__("sys").modules.get("test_acceptance")
    lines = getattr(mod, "REPORT", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
