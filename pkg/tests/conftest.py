from __future__ import annotations

import pytest

from psigreedoid import kernels

_KERNEL_NAMES = (
    "alpha", "is_stable", "closed_nbhd", "is_local_max", "stable_masks", "psi_masks",
    "max_stable_masks", "matching_number", "maximum_matching_pairs",
    "count_perfect_matchings", "accessibility_violation", "exchange_violation",
)


@pytest.fixture(params=sorted(kernels.backends()))
def backend(request, monkeypatch):
    """Route every kernel call through one backend for the duration of a test."""
    mod = kernels.backends()[request.param]
    for name in _KERNEL_NAMES:
        monkeypatch.setattr(kernels, name, getattr(mod, name))
    return request.param


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    lines = getattr(mod, "RESULTS", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in sorted(lines):
            terminalreporter.write_line(line)
