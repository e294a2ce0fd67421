import pytest
from hypothesis import HealthCheck, settings, strategies as st

from permideal.algebra import Polynomial, Ring

settings.register_profile("ci", max_examples=60, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("ci")


@pytest.fixture(scope="session")
def r33():
    return Ring.of(3, 3)


def exps_strategy(ring: Ring, max_exp: int = 2, with_t: bool = False):
    k = ring.nvars if with_t else ring.nvars - 1
    return st.lists(st.integers(0, max_exp), min_size=k, max_size=k).map(
        lambda xs: tuple(xs) + ((0,) if not with_t else ()))


def coeffs(ring: Ring):
    if ring.field.characteristic:
        return st.integers(1, ring.field.characteristic - 1)
    return st.fractions(min_value=-5, max_value=5, max_denominator=4).filter(lambda c: c != 0)


def polys(ring: Ring, max_terms: int = 4, max_exp: int = 2, with_t: bool = False):
    term = st.tuples(exps_strategy(ring, max_exp, with_t), coeffs(ring))
    return st.lists(term, max_size=max_terms).map(lambda ts: _build(ring, ts))


def _build(ring, ts):
    out = ring.zero()
    for e, c in ts:
        out = out + Polynomial(ring, {e: c})
    return out


# -- acceptance bookkeeping --------------------------------------------------

ACCEPTANCE = {}


class criterion:
    """Context manager recording one part of an acceptance criterion as pass or fail."""

    def __init__(self, number: int, title: str, part: str):
        self.number, self.title, self.part = number, title, part

    def __enter__(self):
        return self

    def __exit__(self, exc_type, exc, tb):
        entry = ACCEPTANCE.setdefault(self.number, [self.title, []])
        entry[1].append((self.part, exc_type is None))
        return False


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.write_sep("=", "acceptance criteria")
    for number in sorted(ACCEPTANCE):
        title, parts = ACCEPTANCE[number]
        ok = all(flag for _, flag in parts)
        line = f"criterion {number:>2} {'PASS' if ok else 'FAIL'}  {title}"
        bad = [p for p, flag in parts if not flag]
        if bad:
            line += f"  (failed: {', '.join(bad)})"
        terminalreporter.write_line(line)
