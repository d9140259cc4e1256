import subprocess
import sys

import pytest

from pullup.cli import main
from pullup.modelfile import load_model

from conftest import FIXTURES


def test_restructure_left_with_metrics(tmp_path, capsys):
    out = tmp_path / "out.model"
    code = main(
        ["restructure", str(FIXTURES / "left.model"), "-o", str(out), "--metrics"]
    )
    assert code == 0
    text = capsys.readouterr().out
    assert "declarations   8" in text
    assert "declarations   6" in text
    assert "new classes      1" in text
    assert out.exists()
    result = load_model(out.read_bytes())
    assert result.validate() == []
    assert result.declared_property_count == 6


def test_restructure_multi_inheritance_full_effectiveness(tmp_path, capsys):
    out = tmp_path / "out.model"
    code = main(
        [
            "restructure",
            str(FIXTURES / "left.model"),
            "-o",
            str(out),
            "--multi-inheritance",
            "--metrics",
        ]
    )
    assert code == 0
    text = capsys.readouterr().out
    assert "duplications   0" in text
    assert "effectiveness    100.0%" in text


def test_validate_ok(capsys):
    assert main(["validate", str(FIXTURES / "right.model")]) == 0
    assert capsys.readouterr().out.strip() == "OK"


def test_validate_broken_model(capsys):
    code = main(["validate", str(FIXTURES / "broken.model")])
    assert code == 1
    err = capsys.readouterr().err
    assert "Missing" in err


def test_metrics_command(capsys):
    assert main(["metrics", str(FIXTURES / "left.model")]) == 0
    out = capsys.readouterr().out
    assert "entities       4" in out
    assert "duplications   4" in out


def test_generate_and_restructure_pipeline(tmp_path, capsys):
    gen = tmp_path / "gen.model"
    out = tmp_path / "out.model"
    assert (
        main(["generate", "--family", "mixed", "--scale", "8", "--seed", "42", "-o", str(gen)])
        == 0
    )
    assert "elements" in capsys.readouterr().out
    assert (
        main(["restructure", str(gen), "-o", str(out), "--multi-inheritance"]) == 0
    )
    result = load_model(out.read_bytes())
    assert result.validate() == []


def test_usage_error_exit_code(capsys):
    assert main(["restructure"]) == 2
    assert main(["no-such-command"]) == 2
    assert main([]) == 2


def test_missing_input_file(tmp_path, capsys):
    code = main(["validate", str(tmp_path / "nope.model")])
    assert code == 1
    assert "error:" in capsys.readouterr().err


def test_min_subclasses_flag(tmp_path):
    doc = "classmodel v1\ntype T\nentity S\nentity A\n  prop a T\n  prop b T\n  super S\n"
    src = tmp_path / "in.model"
    src.write_text(doc)
    out = tmp_path / "out.model"
    assert main(["restructure", str(src), "-o", str(out), "--min-subclasses", "1"]) == 0
    result = load_model(out.read_bytes())
    s = result.entity(result.entity_id("S"))
    assert s.prop_names() == {"a", "b"}


def test_module_invocation():
    proc = subprocess.run(
        [sys.executable, "-m", "pullup", "metrics", str(FIXTURES / "left.model")],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert "declarations   8" in proc.stdout
