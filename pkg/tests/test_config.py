import json

from core.config import DEFAULTS, load_config, load_config_file


def test_missing_file_gives_defaults(tmp_path):
    config = load_config(str(tmp_path / 'missing.json'))
    assert config == {**DEFAULTS, 'suites': {}}
    assert load_config_file(str(tmp_path / 'missing.json')) is None


def test_values_override_defaults(tmp_path):
    path = tmp_path / 'mpc_config.json'
    path.write_text(json.dumps({
        'weight_cap': 5, 'workers': 1, 'seed': 7,
        'suites': {'torsion': {'count': 12}},
    }))
    config = load_config(str(path))
    assert config['weight_cap'] == 5
    assert config['workers'] == 1
    assert config['seed'] == '7'
    assert config['suites'] == {'torsion': 12}
    assert config['enum_cap'] == DEFAULTS['enum_cap']


def test_invalid_values_warn_and_fall_back(tmp_path, capsys):
    path = tmp_path / 'mpc_config.json'
    path.write_text(json.dumps({
        'enum_cap': 0, 'workers': True, 'colour': 'red',
        'suites': {'torsion': {'count': -1}},
    }))
    config = load_config(str(path))
    assert config['enum_cap'] == DEFAULTS['enum_cap']
    assert config['workers'] == DEFAULTS['workers']
    assert config['suites'] == {}
    err = capsys.readouterr().err
    assert "enum_cap" in err
    assert "suites.torsion.count" in err
    assert "colour" in err


def test_bad_json_is_ignored(tmp_path, capsys):
    path = tmp_path / 'mpc_config.json'
    path.write_text('{not json')
    assert load_config_file(str(path)) is None
    assert load_config(str(path))['weight_cap'] == DEFAULTS['weight_cap']
    assert "mpc_config.json" in capsys.readouterr().err


def test_top_level_must_be_object(tmp_path):
    path = tmp_path / 'mpc_config.json'
    path.write_text('[1, 2]')
    assert load_config_file(str(path)) is None


def test_debug_prints_merged_config(tmp_path, capsys):
    load_config(str(tmp_path / 'missing.json'), debug=True)
    assert capsys.readouterr().err.startswith("[DEBUG]")
