import random
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from umbral.umbral_core import DELTA_KINDS, VARIANTS, UmbralContext

ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)


@pytest.fixture
def rng():
    return random.Random(12345)


def contexts(ns=(1, 2), hs=(1,), deltas=DELTA_KINDS, variants=VARIANTS):
    return [UmbralContext(n, d, h, v) for n in ns for d in deltas for h in hs for v in variants]


def ctx_id(ctx):
    return f"n{ctx.n}-{ctx.delta_name}-h{ctx.h}-{ctx.variant}".replace("/", "_")
