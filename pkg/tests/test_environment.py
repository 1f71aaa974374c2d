import io

from core.environment import REQUIRED_PACKAGES, REQUIRED_TEMPLATES, EnvironmentChecker


def test_templates_present():
    ok, message = EnvironmentChecker(io.StringIO()).check_templates()
    assert ok
    assert str(len(REQUIRED_TEMPLATES)) in message


def test_packages():
    checker = EnvironmentChecker(io.StringIO())
    assert checker.check_package('sympy')[0]
    assert not checker.check_package('no_such_package_xyz')[0]
    assert checker.missing_packages() == []
    assert set(REQUIRED_PACKAGES) >= {'colorama', 'jinja2', 'networkx', 'sympy'}


def test_run_all_checks_reports_to_stream():
    stream = io.StringIO()
    assert EnvironmentChecker(stream).run_all_checks()
    assert "sympy" in stream.getvalue()
