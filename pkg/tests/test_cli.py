import io
import os
import subprocess
import sys

import pytest

from signedrank.cli import main


def run(argv, stdin=""):
    out = io.StringIO()
    code = main(argv, stdin=io.StringIO(stdin), stdout=out)
    return code, out.getvalue()


def sh(argv, stdin=""):
    return subprocess.run(
        [sys.executable, "-m", "signedrank", *argv], input=stdin, capture_output=True, text=True
    )


def test_rank_from_stdin():
    assert run(["rank", "--family", "B"], "[-2,1]\n") == (0, "4\n")


def test_rank_from_argument():
    assert run(["rank", "--family", "b", "[-2,1]", "[1,-2]"]) == (0, "4\n1\n")


def test_stdin_wins_over_arguments():
    assert run(["rank", "--family", "B", "[1,2]"], "[-2,1]\n") == (0, "4\n")


def test_unrank():
    assert run(["unrank", "--family", "A", "--n", "3"], "2\n") == (0, "[3,1,2]\n")


def test_enumerate_d2():
    code, out = run(["enumerate", "--family", "D", "--n", "2"])
    rows = [line.split("\t") for line in out.splitlines()]
    assert code == 0
    assert [r[0] for r in rows] == ["0", "1", "2", "3"]
    assert rows[2][1] == "[-2,-1]"


def test_stats():
    code, out = run(["stats", "[-1,-2]"])
    assert (code, out) == (0, "[-1,-2]\t4\t3,1\t3:1\n")


def test_ns_encode_decode():
    assert run(["ns", "encode", "--family", "B", "--n", "4", "17"]) == (0, "2:0:1\n")
    assert run(["ns", "decode", "--family", "B", "--n", "4", "2:0:1"]) == (0, "17\n")
    assert run(["ns", "encode", "--family", "S", "6"]) == (0, "1:0:0\n")


def test_error_exit_codes():
    assert run(["rank", "--family", "D", "[-1,2]"])[0] == 3
    assert run(["unrank", "--family", "B", "--n", "2", "8"])[0] == 3
    assert run(["ns", "encode", "--family", "B", "--n", "2", "8"])[0] == 3
    assert run(["ns", "decode", "--family", "B", "--n", "4", "3:9"])[0] == 3
    assert run(["rank", "--family", "B", "[1,1]"])[0] == 4
    assert run(["unrank", "--family", "B", "--n", "2", "x"])[0] == 4
    with pytest.raises(SystemExit) as exc:
        main(["bogus"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["rank", "--family", "Q"])
    assert exc.value.code == 2


def test_enumerate_pipes_through_unrank():
    table = sh(["enumerate", "--family", "F", "--n", "3"])
    assert table.returncode == 0
    rows = [line.split("\t") for line in table.stdout.splitlines()]
    ranks = "\n".join(r[0] for r in rows) + "\n"
    back = sh(["unrank", "--family", "F", "--n", "3"], ranks)
    assert back.stdout == "".join(r[1] + "\n" for r in rows)


def test_crypt_round_trip(tmp_path):
    key = sh(["crypt", "keygen", "--n", "12", "--seed", "5"]).stdout.strip()
    plain = tmp_path / "plain.bin"
    plain.write_bytes(os.urandom(5000) + b"tail")
    enc, dec = tmp_path / "c.bin", tmp_path / "p.bin"
    assert sh(["crypt", "enc", "--key", key, str(plain), str(enc)]).returncode == 0
    assert sh(["crypt", "dec", "--key", key, str(enc), str(dec)]).returncode == 0
    assert dec.read_bytes() == plain.read_bytes()
    assert enc.read_bytes() != plain.read_bytes()


def test_crypt_errors(tmp_path):
    missing = tmp_path / "nope"
    assert run(["crypt", "enc", "--key", "[2,1,3,4]", str(missing), str(tmp_path / "o")])[0] == 4
    assert run(["crypt", "enc", "--key", "[2,1,3,4]", "--n", "5", "a", "b"])[0] == 3
    junk = tmp_path / "junk"
    junk.write_bytes(b"not a ciphertext at all")
    assert run(["crypt", "dec", "--key", "[2,1,3,4]", str(junk), str(tmp_path / "o")])[0] == 4


def test_selftest():
    code, out = run(["selftest"])
    assert code == 0
    assert out.count("PASS") == len(out.splitlines()) > 10
