import subprocess
import sys

import pytest

from mcs.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_reduce(capsys):
    assert run(capsys, "reduce", "abab", "acbcb") == (0, "abacbcb\n", "")
    assert run(capsys, "reduce", "--super", "ababacbcb", "abab", "acbcb")[:2] == (0, "abacbcb\n")
    assert run(capsys, "reduce", "a")[:2] == (0, "a\n")
    code, out, _ = run(capsys, "reduce", "ab", "ba", "ca")
    assert code == 0 and len(out.strip()) >= 3


def test_reduce_bad_super(capsys):
    code, out, err = run(capsys, "reduce", "--super", "abc", "abc", "cab")
    assert code == 2 and out == ""
    assert "input 2" in err and "'cab'" in err


def test_enum(capsys):
    assert run(capsys, "enum", "a", "b")[:2] == (0, "ba\nab\n")
    assert run(capsys, "enum", "--count", "bacba", "abcca")[:2] == (0, "6\n")
    code, out, _ = run(capsys, "enum", "--limit", "1", "xay", "zaw")
    assert code == 0 and out.count("\n") == 1
    assert run(capsys, "enum", "--limit", "0", "xay", "zaw")[:2] == (0, "")


def test_enum_limit_is_prefix(capsys):
    full = run(capsys, "enum", "bacba", "abcca")[1].splitlines()
    part = run(capsys, "enum", "--limit", "4", "bacba", "abcca")[1].splitlines()
    assert part == full[:4]


def test_enum_bad_flag(capsys):
    with pytest.raises(SystemExit) as info:
        main(["enum", "--limit", "-1", "a", "b"])
    assert info.value.code == 2
    with pytest.raises(SystemExit) as info:
        main(["enum", "a"])
    assert info.value.code == 2


def test_dot(tmp_path, capsys):
    path = tmp_path / "g.dot"
    assert run(capsys, "enum", "--count", "--dot", str(path), "bacba", "abcca")[0] == 0
    text = path.read_text()
    assert '"(A,0,B,0)"' in text
    run(capsys, "enum", "--count", "--dot", str(tmp_path / "h.dot"), "bacba", "abcca")
    assert (tmp_path / "h.dot").read_text() == text
    run(capsys, "enum", "--dot", str(path), "ab", "abc")
    assert path.read_text() == "digraph mcs {\n}\n"
    code, _, err = run(capsys, "enum", "--dot", str(tmp_path / "no" / "x.dot"), "a", "b")
    assert code == 2 and "cannot write" in err


def test_verify(capsys):
    assert run(capsys, "verify", "abacbcb", "abab", "acbcb")[:2] == (0, "minimal\n")
    code, out, _ = run(capsys, "verify", "ababacbcb", "abab", "acbcb")
    assert code == 1 and "index 1" in out
    assert run(capsys, "verify", "a", "a")[0] == 0
    code, out, _ = run(capsys, "verify", "ab", "c")
    assert code == 1 and "input 1" in out


def test_verify_file(tmp_path, capsys):
    p = tmp_path / "case.txt"
    p.write_text("abacbcb\nabab\nacbcb\n")
    assert run(capsys, "verify", "--file", str(p))[0] == 0
    assert run(capsys, "verify", "--file", str(tmp_path / "missing.txt"))[0] == 2
    p.write_text("")
    assert run(capsys, "verify", "--file", str(p))[0] == 2
    assert run(capsys, "verify")[0] == 2


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "mcs", "reduce", "abab", "acbcb"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0 and proc.stdout == "abacbcb\n"
