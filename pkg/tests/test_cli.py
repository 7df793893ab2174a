import json
import math

import pytest

from kleinian_rp.cli import dumps, main, parse_real


def run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr()


def test_parse_real():
    assert parse_real("-4*sin(pi/7)^2") == pytest.approx(-4 * math.sin(math.pi / 7) ** 2)
    assert parse_real("(sqrt5-1)/2") == pytest.approx((math.sqrt(5) - 1) / 2)
    assert parse_real("sqrt(2)") == pytest.approx(math.sqrt(2))
    for bad in ("__import__('os')", "x", "1/0", "open(1)"):
        with pytest.raises(Exception):
            parse_real(bad)


@pytest.mark.parametrize("argv, code, text", [
    (["classify", "--", "-3", "1.2360679775", "0.61803398875"], 0, "Tet[4,5;3]"),
    (["classify", "--", "-3", "-3", "0"], 2, "not_class_d"),
    (["classify", "--", "-1", "-1", "-0.5"], 1, "not_discrete"),
    (["two-elliptic", "7", "7", "--gamma-from-clause3"], 0, "Tet[3,7;3]"),
    (["gram", "5", "2", "2"], 0, "hyperbolic: true"),
    (["reduce", "5", "2", "-1"], 0, "r = 3"),
    (["verify", "--", "-3", "-3", "-3"], 0, "complete"),
])
def test_commands(capsys, argv, code, text):
    c, out = run(capsys, *argv)
    assert c == code
    assert text in out.out


def test_census_cusped_gt(capsys):
    c, out = run(capsys, "--json", "census", "--cusped", "--schema", "GT")
    assert c == 0 and len(json.loads(out.out)) == 3


def test_json_roundtrip_byte_identical(capsys):
    for argv in (["--json", "classify", "--", "-3", "sqrt5-1", "(sqrt5-1)/2"],
                 ["--json", "realize", "--", "-3", "-2", "-5"],
                 ["--json", "gram", "7", "2", "2"]):
        _, out = run(capsys, *argv)
        text = out.out.strip()
        assert dumps(json.loads(text)) == text


def test_error_exit_codes(capsys):
    assert run(capsys, "classify", "--", "-3", "x", "1")[0] == 64
    assert run(capsys, "frobnicate")[0] == 64
    c, out = run(capsys, "reduce", "6", "2", "-1")
    assert c == 65 and "InvalidRotation" in out.err
