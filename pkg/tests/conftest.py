import pytest

_ACCEPTANCE: dict[str, tuple[bool, str]] = {}


@pytest.fixture
def criterion(request):
    """Record a PASS/FAIL line for an acceptance criterion.

    Usage: ``with criterion("1 end-to-end Hamiltonicity") as note: ...``;
    ``note(text)`` attaches a detail string.
    """

    class _Recorder:
        def __init__(self, name):
            self.name = name
            self.detail = ""

        def __call__(self, text):
            self.detail = text

        def __enter__(self):
            return self

        def __exit__(self, exc_type, exc, tb):
            ok = exc_type is None
            detail = self.detail if ok else f"{self.detail} {exc_type.__name__}: {exc}".strip()
            _ACCEPTANCE[self.name] = (ok, detail)
            return False

    return _Recorder


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(_ACCEPTANCE):
        ok, detail = _ACCEPTANCE[name]
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  criterion {name}  {detail}")
