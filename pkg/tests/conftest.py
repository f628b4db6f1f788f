import pytest

from gpperiods.decider import base_field

QS = (3, 5, 7, 9)


def quadratic_extensions(F):
    return [
        F.extension(2, "unramified"),
        F.extension(2, "ramified", "square"),
        F.extension(2, "ramified", "nonsquare"),
    ]


def all_fields(F):
    """F, its three quadratic extensions, its unramified cubic and (q = 1 mod 3) its ramified cubic."""
    out = [F] + quadratic_extensions(F) + [F.extension(3, "unramified")]
    if (F.q - 1) % 3 == 0:
        out.append(F.extension(3, "ramified"))
    return out


@pytest.fixture(params=QS, ids=lambda q: f"q{q}")
def F(request):
    return base_field(request.param)


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(RESULTS):
        terminalreporter.write_line(RESULTS[n])
