from core.linear_code import code_from_generators, zero_code
from core.report import ReportRenderer, format_bool, format_generators, format_row, render
from core.ring import ring_new


def test_format_helpers():
    assert format_row((1, 0, 3)) == "1 0 3"
    assert format_bool(True) == "true"
    assert format_bool(False) == "false"


def test_format_generators():
    ring = ring_new(30)
    code = code_from_generators(ring, 2, [(15, 0), (0, 15)])
    assert format_generators(code) == "    15 0\n    0 15"
    assert format_generators(zero_code(ring, 2), indent=2) == "  (none)"


def test_all_templates_present():
    names = ReportRenderer().template_names()
    for name in ('info', 'dual', 'hull', 'lcd', 'distance', 'mpc', 'torsion', 'torsion_mpc', 'verify'):
        assert f"{name}.txt.j2" in names


def test_render_info():
    ring = ring_new(30)
    code = code_from_generators(ring, 2, [(15, 0), (0, 15)])

    class Params:
        length = 2
        cardinality_text = "4"
        rank = None
        distance_text = "1"

    text = render('info.txt.j2', name='C1', code=code, params=Params(), oracle=None)
    assert text == (
        "C1: code over Z_30\n"
        "  length: 2\n"
        "  cardinality: 4\n"
        "  rank: not free\n"
        "  min distance: 1\n"
        "  generators:\n"
        "    15 0\n"
        "    0 15\n"
    )
