import csv
import io
import json
import subprocess
import sys
from fractions import Fraction
from importlib import resources
from pathlib import Path

import pytest
from hypothesis import given, settings, strategies as st

from fresnelkit import specfile
from fresnelkit.cli import EXIT_NO_RESULT, EXIT_OK, EXIT_PARSE, EXIT_PRECONDITION, GENERATE_KINDS, main
from fresnelkit.dispersion import POLARIZATION_POINTS, quartic_of
from fresnelkit.media import random_recipe
from fresnelkit.surface import TOLERANCE, directions, relative_residual, ray_polynomial, sample_surface

CORPUS = Path(str(resources.files("fresnelkit") / "corpus"))
SPECS = sorted(CORPUS.glob("*.json"))


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out = capsys.readouterr()
    return code, out.out, out.err


def test_corpus_is_bundled():
    names = {p.stem for p in SPECS}
    assert {"axion", "skewon-axion", "raw", "case1", "case1-singular", "q-lorentz"} <= names


@pytest.mark.parametrize("path", SPECS, ids=lambda p: p.stem)
def test_corpus_round_trip(path):
    text = path.read_text()
    assert specfile.dumps(specfile.loads(text)) == text


@settings(max_examples=30)
@given(st.sampled_from(GENERATE_KINDS), st.integers(0, 10 ** 6))
def test_generated_specs_round_trip(kind, seed):
    import random
    recipe = random_recipe(kind, random.Random(seed))
    text = specfile.dumps(recipe)
    again = specfile.loads(text)
    assert again == recipe and specfile.dumps(again) == text


def test_parse_errors_report_position(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text('{\n  "format_version": 1,\n  "recipe": {\n')
    with pytest.raises(specfile.SpecError) as info:
        specfile.load(bad)
    assert info.value.line is not None and info.value.column is not None
    text = (CORPUS / "axion.json").read_text()
    with pytest.raises(specfile.SpecError) as info:
        specfile.loads(text.replace('"alpha"', '"alhpa"'))
    assert "unknown field 'alhpa'" in str(info.value) and info.value.line == text.count("\n", 0, text.index('"alpha"')) + 1
    with pytest.raises(specfile.SpecError, match="conventions"):
        specfile.loads(text.replace('"contraction_sign": -1', '"contraction_sign": 1'))
    with pytest.raises(specfile.SpecError, match="rational"):
        specfile.loads(text.replace('"-2"', '-2'))
    with pytest.raises(specfile.SpecError, match="format_version"):
        specfile.loads(text.replace('"format_version": 1', '"format_version": 9'))
    with pytest.raises(specfile.SpecError, match="unknown top-level"):
        specfile.loads(text.replace('"format_version": 1', '"format_version": 1, "extra": 0'))


def test_classify_axion(capsys):
    code, out, _ = run(capsys, "classify", CORPUS / "axion.json", "--json")
    rep = json.loads(out)
    assert code == EXIT_OK
    assert rep["classification"]["class"] == "Axion"
    assert len(rep["quartic"]) == 35 and set(rep["quartic"].values()) == {"0"}


def test_classify_skewon_axion_reports_table_row(capsys):
    code, out, _ = run(capsys, "classify", CORPUS / "skewon-axion.json", "--json")
    c = json.loads(out)["classification"]
    assert code == EXIT_OK and c["class"] == "SkewonAxion" and c["inverse_table_row"] == "special P-axion"


def test_classify_random_is_not_dispersion_free(capsys):
    code, out, _ = run(capsys, "classify", CORPUS / "raw.json")
    assert code == EXIT_OK
    assert "class: NotDispersionFree" in out and "nonzero_coefficients: 0" not in out


def test_reports_are_deterministic(capsys, tmp_path):
    outs = []
    for i in range(2):
        target = tmp_path / f"r{i}.json"
        assert run(capsys, "classify", CORPUS / "case1.json", "--json", "--out", target)[0] == EXIT_OK
        outs.append(target.read_bytes())
    assert outs[0] == outs[1]
    _, timed, _ = run(capsys, "classify", CORPUS / "axion.json", "--json", "--timing")
    assert "timing_seconds" in json.loads(timed)


def test_float_rendering(capsys):
    _, out, _ = run(capsys, "classify", CORPUS / "skewon-axion.json", "--json", "--float")
    assert isinstance(json.loads(out)["decomposition"]["axion_scalar"], float)


def test_invert_paths(capsys):
    code, out, _ = run(capsys, "invert", CORPUS / "case1.json", "--json")
    rep = json.loads(out)
    assert code == EXIT_OK and rep["path"] == "case-1 formula" and rep["inverse"]["recipe"]["kind"] == "case1"
    code, out, _ = run(capsys, "invert", CORPUS / "case1-singular.json", "--json")
    rep = json.loads(out)
    assert code == EXIT_NO_RESULT and rep["inverse"] == {**rep["inverse"], "exists": False, "determinant": "0"}
    code, out, _ = run(capsys, "invert", CORPUS / "raw.json", "--json")
    assert code == EXIT_OK and json.loads(out)["path"] == "generic exact inverse"


def test_wave_command(capsys):
    code, out, _ = run(capsys, "wave", CORPUS / "axion.json", "--nu", "1", "2", "0", "1/2", "--json")
    rep = json.loads(out)
    assert code == EXIT_OK and rep["wave"]["found"]
    alpha = Fraction(specfile.load(CORPUS / "axion.json").alpha)
    assert [Fraction(x) for x in rep["wave"]["Psi"]] == [alpha * Fraction(x) for x in rep["wave"]["Phi"]]
    assert all(rep["wave"]["checks"].values())
    code, _, _ = run(capsys, "wave", CORPUS / "raw.json", "--nu", "1", "2", "3", "5")
    assert code == EXIT_NO_RESULT
    code, _, err = run(capsys, "wave", CORPUS / "axion.json", "--nu", "0", "0", "0", "0")
    assert code == EXIT_PRECONDITION and "nonzero" in err


def test_exit_codes_for_bad_input(capsys, tmp_path):
    assert run(capsys, "classify", tmp_path / "missing.json")[0] == EXIT_PARSE
    assert run(capsys, "wave", CORPUS / "axion.json", "--nu", "1", "x", "0", "0")[0] == EXIT_PARSE
    assert run(capsys, "surface", CORPUS / "axion.json", "--resolution", "4")[0] == EXIT_PRECONDITION


def test_dump_conventions(capsys):
    code, first, _ = run(capsys, "dump-conventions", "--json")
    _, second, _ = run(capsys, "dump-conventions", "--json")
    rep = json.loads(first)
    assert code == EXIT_OK and first == second
    assert rep["contraction_sign_s"] == -1
    assert [tuple(p) for p in rep["polarization_points"]] == list(POLARIZATION_POINTS)
    _, text, _ = run(capsys, "dump-conventions")
    assert "contraction_sign_s: -1" in text


def test_generate_command(capsys):
    code, out, _ = run(capsys, "generate", "case1", "--seed", "3")
    assert code == EXIT_OK and specfile.loads(out).kind == "case1"


def _rows(text):
    return list(csv.DictReader(io.StringIO(text)))


def test_surface_axion_marks_rays(capsys):
    code, out, _ = run(capsys, "surface", CORPUS / "axion.json", "--resolution", "8")
    rows = _rows(out)
    assert code == EXIT_OK and rows and all(r["status"] == "identically-zero" for r in rows)


def test_surface_lorentz_medium(capsys):
    code, out, _ = run(capsys, "surface", CORPUS / "q-lorentz.json", "--frequency", "3/2", "--resolution", "9")
    rows = _rows(out)
    assert code == EXIT_OK and len(rows) == len(directions(9))
    for r in rows:
        roots = [float(x) for x in r["roots"].split(";")]
        assert r["multiplicities"] == "2;2"
        assert all(abs(abs(k) - 1.5) <= TOLERANCE * 1.5 for k in roots)


def test_surface_generic_medium_root_counts_and_residuals():
    q = quartic_of(specfile.load(CORPUS / "raw.json").build())
    for s in sample_surface(q, 1, 8):
        assert len(s.roots) <= 4 and s.residual <= TOLERANCE
        for k, _ in s.roots:
            assert relative_residual(ray_polynomial(q, s.direction, 1), k) <= TOLERANCE


def test_directions_are_rational_unit_vectors():
    for d in directions(8):
        assert sum(c * c for c in d) == 1


def test_console_script_entry_point():
    proc = subprocess.run([sys.executable, "-m", "fresnelkit.cli", "dump-conventions"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0 and "bivector_order" in proc.stdout
