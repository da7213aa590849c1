"""Pytest configuration for the symscale test suite."""

from __future__ import annotations

import os
from typing import Optional

import pytest

from symscale import SLOW_ENV, get_module_path, is_slow_enabled


def pytest_configure(config):
    config.addinivalue_line('markers', f'slow: end-to-end test, runs only with {SLOW_ENV}=true')


def pytest_collection_modifyitems(config, items):
    if is_slow_enabled():
        return
    skip_slow = pytest.mark.skip(reason=f'slow test; set {SLOW_ENV}=true to run')
    for item in items:
        if 'slow' in item.keywords:
            item.add_marker(skip_slow)


def _missing_file_reason(exc: FileNotFoundError) -> Optional[str]:
    filename = exc.filename or ""
    if not filename:
        return None
    normalized = os.path.normpath(filename)
    packaged = os.path.join(get_module_path(), '')
    if normalized.startswith(packaged) and f'{os.sep}data{os.sep}' in normalized:
        return f"Missing packaged data file: {normalized}"
    return None


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    if report.when != "call" or report.passed or report.skipped:
        return
    excinfo = call.excinfo
    if excinfo is None or not isinstance(excinfo.value, FileNotFoundError):
        return
    reason = _missing_file_reason(excinfo.value)
    if reason:
        report.outcome = "skipped"
        report.wasxfail = False
        report.longrepr = (str(item.path), item.location[1], f"Skipped: {reason}")
        outcome.force_result(report)
