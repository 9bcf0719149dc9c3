from pathlib import Path

import pytest

from gateboard.netlist import parse

FIXTURES = Path(__file__).parent / "fixtures"


def fixture_text(name: str) -> str:
    return (FIXTURES / name).read_text(encoding="utf-8")


def fixture_circuit(name: str):
    return parse(fixture_text(name))


@pytest.fixture
def half_adder():
    return fixture_circuit("half_adder.lgc")
