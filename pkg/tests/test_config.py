"""Settings validation and the key=value override file format."""

import pytest

from diamag import (
    DEFAULT_SETTINGS,
    ConfigError,
    Settings,
    ValidationError,
    apply_overrides,
    parse_config,
)


def test_defaults_are_self_consistent():
    s = Settings()
    assert s == DEFAULT_SETTINGS
    assert s.delta_widths == (1e-1, 3e-2, 1e-2, 3e-3, 1e-3)


@pytest.mark.parametrize(
    "kwargs",
    [
        dict(large_s_threshold=0.0),
        dict(cancel_digits=-1.0),
        dict(rel_tol=float("nan")),
        dict(abs_tol=float("inf")),
        dict(max_subdivisions=10),
        dict(delta_widths=()),
        dict(delta_widths=(1e-2, 1e-2)),
        dict(delta_widths=(1e-3, 1e-2)),
        dict(delta_widths=(1e-2, -1e-3)),
        dict(extrapolation_order=0),
    ],
)
def test_settings_rejects_bad_values(kwargs):
    with pytest.raises(ValidationError):
        Settings(**kwargs)


def test_rel_tol_override_reaches_quadrature_settings(tmp_path):
    cfg = tmp_path / "o.cfg"
    cfg.write_text("rel_tol = 1e-10\n", encoding="utf-8")
    overrides = parse_config(str(cfg))
    assert overrides == {"rel_tol": 1e-10}
    s = apply_overrides(DEFAULT_SETTINGS, overrides)
    assert s.rel_tol == 1e-10
    assert s.abs_tol == DEFAULT_SETTINGS.abs_tol


def test_empty_file_leaves_defaults_unchanged(tmp_path):
    cfg = tmp_path / "empty.cfg"
    cfg.write_text("", encoding="utf-8")
    overrides = parse_config(str(cfg))
    assert overrides == {}
    assert apply_overrides(DEFAULT_SETTINGS, overrides) == DEFAULT_SETTINGS


def test_comments_and_blank_lines_ignored(tmp_path):
    cfg = tmp_path / "c.cfg"
    cfg.write_text(
        "# full-line comment\n\nabs_tol = 1e-12  # trailing comment\n",
        encoding="utf-8",
    )
    assert parse_config(str(cfg)) == {"abs_tol": 1e-12}


def test_unknown_key_error_names_key_and_line(tmp_path):
    cfg = tmp_path / "u.cfg"
    cfg.write_text("abs_tol = 1e-12\nunknown_key = 1\n", encoding="utf-8")
    with pytest.raises(ConfigError) as info:
        parse_config(str(cfg))
    message = str(info.value)
    assert "unknown_key" in message
    assert ":2:" in message


@pytest.mark.parametrize(
    "text, fragment",
    [
        ("just words\n", "key=value"),
        ("abs_tol = abc\n", "bad float"),
        ("max_subdivisions = 1.5\n", "bad integer"),
        ("delta_widths = 1e-2, oops\n", "bad width list"),
    ],
)
def test_malformed_lines_raise_with_line_number(tmp_path, text, fragment):
    cfg = tmp_path / "m.cfg"
    cfg.write_text(text, encoding="utf-8")
    with pytest.raises(ConfigError) as info:
        parse_config(str(cfg))
    assert ":1:" in str(info.value)
    assert fragment in str(info.value)


def test_delta_widths_override(tmp_path):
    cfg = tmp_path / "w.cfg"
    cfg.write_text("delta_widths = 3e-2, 1e-2, 3e-3\n", encoding="utf-8")
    s = apply_overrides(DEFAULT_SETTINGS, parse_config(str(cfg)))
    assert s.delta_widths == (3e-2, 1e-2, 3e-3)


def test_apply_overrides_rejects_invalid_combination():
    with pytest.raises(ConfigError):
        apply_overrides(DEFAULT_SETTINGS, {"rel_tol": -1.0})
    with pytest.raises(ConfigError):
        apply_overrides(DEFAULT_SETTINGS, {"not_a_field": 1.0})
