import pytest

from artifact.arith import GF, QQ
from artifact.poly import PolynomialRing
from artifact.variety import VarietyIdeal

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def report():
    """Record one pass/fail line per acceptance criterion."""

    def record(label: str, ok: bool, detail: str = ""):
        ACCEPTANCE_LINES.append(f"[{'PASS' if ok else 'FAIL'}] {label}" + (f": {detail}" if detail else ""))
        return ok

    return record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture(params=[GF(32003), QQ], ids=["fp32003", "qq"])
def field(request):
    return request.param


def affine(gens, n=3, field=GF(32003)):
    return VarietyIdeal.from_text(gens, n, field=field)


def projective(gens, n, field=GF(32003)):
    return VarietyIdeal.from_text(gens, n, projective=True, field=field)


def ring(names="x y z", field=QQ, order=None):
    r = PolynomialRing(tuple(names.split()), field)
    return r.with_order(order) if order is not None else r
