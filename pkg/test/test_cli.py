# test/test_cli.py
import json
import sys
from pathlib import Path

sys.path.append(str(Path(__file__).parent.parent))  # Add project root to path
from analysis.conjugacy import conj_p
from analysis.polycyclic import reduce
from cli.main import EXIT_PRECONDITION, EXIT_USAGE, run
from core.words import parse_word

CPC = ["p1 p1 p2 q1", "p2 p2 p1 q2"]


def invoke(capsys, *argv):
    code = run(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_reduce_to_zero(capsys):
    code, out, _ = invoke(capsys, "reduce", "--preset", "pn", "--rank", "2", "q1 p2")
    assert code == 0
    assert out.strip() == "0"


def test_mul(capsys):
    code, out, _ = invoke(capsys, "mul", "--rank", "3", "p1 q2", "p2 p1 q1")
    assert code == 0
    assert out.strip() == "p1 p1 q1"


def test_conj_verdicts(capsys):
    code, out, _ = invoke(capsys, "conj", "--preset", "pn", "--rank", "2", "--rel", "p", *CPC)
    assert code == 0
    assert out.splitlines()[0] == "YES"
    assert out.splitlines()[1].startswith("witness: ")

    code, out, _ = invoke(capsys, "conj", "--preset", "pn", "--rank", "2", "--rel", "c", *CPC)
    assert code == 0
    assert out.strip() == "NO"

    code, out, _ = invoke(capsys, "conj", "--rel", "pstar", "p1 q2", "p2 q1")
    assert code == 0
    assert out.splitlines() == ["YES", "via: 0"]


def test_conj_json_matches_library(capsys):
    code, out, _ = invoke(capsys, "--json", "conj", "--rel", "p", *CPC)
    assert code == 0
    data = json.loads(out)
    assert set(data) >= {"command", "verdict", "witness", "normal_forms", "timings"}
    assert data["verdict"] == "YES"
    assert data["normal_forms"] == CPC

    a, b = (reduce(parse_word(text, rank=2)) for text in CPC)
    assert data["witness"] == [str(w) for w in conj_p(a, b).witness]

    # flag accepted after the subcommand too
    code, out, _ = invoke(capsys, "conj", "--rel", "c", "--json", *CPC)
    data = json.loads(out)
    assert data["verdict"] == "NO"
    assert "witness" not in data


def test_oracle(capsys):
    code, out, _ = invoke(capsys, "oracle", "--preset", "example22", "--rel", "p", "bac", "ba", "--bound", "3")
    assert code == 0
    assert out.splitlines() == ["YES", "witness: ba, c"]

    code, out, _ = invoke(capsys, "--json", "oracle", "--rel", "p", "p1", "p2", "--bound", "3")
    data = json.loads(out)
    assert data["verdict"] == "NO_AT_BOUND"
    assert data["details"]["bound"] == 3


def test_critpairs_and_classify(capsys, tmp_path):
    rules = tmp_path / "idem.rules"
    rules.write_text("aa -> a\n", encoding="utf-8")
    code, out, _ = invoke(capsys, "critpairs", "--rules", str(rules))
    assert code == 0
    assert "1 critical pairs; locally confluent: True" in out

    code, out, _ = invoke(capsys, "--json", "classify", "--preset", "pn", "--rank", "3")
    details = json.loads(out)["details"]
    assert details["monadic"] and details["length_reducing"] and not details["special"]
    assert details["locally_confluent"] is True


def test_zoo(capsys):
    code, out, _ = invoke(capsys, "zoo", "onerel-2")
    assert code == 0
    assert "normal forms: e a aa" in out

    code, out, _ = invoke(capsys, "zoo", "separation", "--json")
    data = json.loads(out)["details"]
    assert data["zero_c_class"] == ["0"]
    assert data["o_universal"]["holds"] is True


def test_bench(capsys):
    code, out, _ = invoke(capsys, "--json", "bench", "--lengths", "50,100", "--trials", "1", "--seed", "1")
    assert code == 0
    details = json.loads(out)["details"]
    assert [row["length"] for row in details["rows"]] == [50, 100]
    assert set(details["exponents"]) == {"reduce", "conj_p", "conj_c"}


def test_verify(capsys):
    code, out, _ = invoke(capsys, "verify", "--sweep", "presentation", "--sweep", "rotations",
                          "--max-component", "1")
    assert code == 0
    assert "FAIL" not in out
    assert out.startswith("ok")


def test_usage_errors(capsys):
    assert invoke(capsys, "reduce", "--rank", "2", "p3")[0] == EXIT_USAGE
    assert invoke(capsys, "reduce", "--preset", "bicyclic", "e")[0] == EXIT_USAGE
    assert invoke(capsys, "conj", "--preset", "example22", "--rel", "c", "ba", "bc")[0] == EXIT_USAGE
    assert invoke(capsys, "bench", "--lengths", "")[0] == EXIT_USAGE
    assert invoke(capsys, "bench", "--lengths", "0,10")[0] == EXIT_USAGE
    assert invoke(capsys, "conj", "--rel", "q", "p1", "p2")[0] == EXIT_USAGE

    code, _, err = invoke(capsys, "--config", "missing.yaml", "reduce", "e")
    assert code == EXIT_USAGE
    assert err.startswith("error:")


def test_precondition_errors(capsys):
    assert invoke(capsys, "reduce", "--preset", "tin1-cyclic-2", "xa")[0] == EXIT_PRECONDITION
    assert invoke(capsys, "reduce", "--preset", "pn", "--rank", "1", "p1")[0] == EXIT_PRECONDITION
    assert invoke(capsys, "bench", "--rank", "1", "--lengths", "10", "--trials", "1")[0] == EXIT_PRECONDITION
