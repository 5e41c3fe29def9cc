import io

import pytest

from eghkit.cli import ParseError, RunReport, main, parse_input
from eghkit.cli import commands
from eghkit.mideal import MonomialIdeal

DOC = """# weak example
ring x, y over monomial
degrees 2, 4
ideal x^2, x*y, y^4
"""


@pytest.fixture
def doc_path(tmp_path):
    path = tmp_path / "ideal.txt"
    path.write_text(DOC, encoding="utf-8")
    return str(path)


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_parse_document():
    doc = parse_input(DOC)
    assert doc.ring.names == ("x", "y")
    assert doc.is_monomial
    assert tuple(doc.degrees) == (2, 4)
    assert doc.monomial_ideal() == MonomialIdeal.parse("<x^2, x*y, y^4>", doc.ring)
    assert parse_input(doc.to_text()) == doc


def test_parse_polynomial_document():
    doc = parse_input("ring x, y, z over gf(7)\nideal x^2 + 8*y*z, y^3 - z^2*x  # two forms\n")
    assert str(doc.field) == "gf(7)"
    assert doc.generator_texts() == ["x^2 + y*z", "y^3 - x*z^2"]
    assert parse_input(doc.to_text()) == doc


def test_parse_declared_degrees_document():
    doc = parse_input("ring x, y, z over gf(7)\ndegrees 2, 3, 5\nideal x^2 + y*z, y^3 - z^2*x, z^5")
    assert not doc.is_monomial
    assert tuple(doc.degrees) == (2, 3, 5)
    assert [g.degree for g in doc.generators] == [2, 3, 5]


@pytest.mark.parametrize("text,line,column,fragment", [
    ("ring x, y\n", 1, 10, "over"),
    ("ring x, y over monomial\nideal x^2, w\n", 2, 12, "undeclared variable"),
    ("ring x, y over gf(7)\nideal x^2+y\n", 2, 7, "inhomogeneous"),
    ("ring x, y over gf(4)\n", 1, 16, "not prime"),
    ("ring x over gf(4)\n", 1, 13, "not prime"),
    ("ideal x\n", 1, 1, "ring"),
    ("ring x, y over monomial\nideal x + y\n", 2, 7, "monomial"),
    ("ring x, y over monomial\nideal x\nideal y\n", 3, 1, "duplicate"),
    ("ring x, y over monomial\nbogus 1\n", 2, 1, "unknown"),
])
def test_parse_errors_carry_positions(text, line, column, fragment):
    with pytest.raises(ParseError) as exc:
        parse_input(text)
    assert (exc.value.line, exc.value.column) == (line, column)
    assert fragment in str(exc.value)


def test_hilbert_text(capsys, doc_path):
    code, out, _ = run(capsys, "hilbert", doc_path)
    assert code == 0
    assert "ideal x^2, x*y, y^4" in out
    assert "hilbert: 1,2,1,1,0,0" in out


def test_lpp_records(capsys, doc_path):
    code, out, _ = run(capsys, "lpp", doc_path, "--format", "records")
    assert code == 0
    lines = out.splitlines()
    assert lines[0].startswith("kind=input command=lpp ring=x,y field=monomial degrees=2,4")
    assert lines[-1] == "kind=summary command=lpp lpp=<x^2,x*y,y^4> lex_part=<x^2,x*y> rows=6 violations=0"
    assert all(line.isascii() for line in lines)
    rows = [dict(kv.split("=", 1) for kv in line.split()) for line in lines if line.startswith("kind=row")]
    assert [r["lpp"] for r in rows] == ["1", "2", "1", "1", "0", "0"]


def test_growth_and_search(capsys):
    code, out, _ = run(capsys, "growth", "--n", "3", "--degrees", "2,2", "--d", "1", "--q", "3",
                       "--format", "records")
    assert code == 0
    assert "kind=summary command=growth bound=4 macaulay=6 refined=true" in out
    code, out, _ = run(capsys, "search", "--n-max", "2", "--a-max", "2", "--d-max", "1")
    assert code == 0 and "subsets: 10" in out


def test_liaison_and_slice(capsys, tmp_path):
    path = tmp_path / "link.txt"
    path.write_text("ring x, y over monomial\ndegrees 2, 2\nideal x, y\n", encoding="utf-8")
    code, out, _ = run(capsys, "liaison", str(path), "--format", "records")
    assert code == 0 and "linked=<x^2,x*y,y^2>" in out
    path.write_text("ring x, y, z over monomial\ndegrees 2\nideal x^2, x*z, y*z^2\n", encoding="utf-8")
    code, out, _ = run(capsys, "slice", str(path), "--format", "records")
    assert code == 0 and "result=<x^2,x*z,y*z^2>" in out and "N=2" in out


def test_egh_polynomial_document(capsys, tmp_path):
    path = tmp_path / "poly.txt"
    path.write_text("ring x, y over gf(101)\ndegrees 2, 3\nideal x^2 + y^2, y^3 + x*y^2, x*y\n", encoding="utf-8")
    code, out, _ = run(capsys, "egh", str(path), "--format", "records")
    assert code == 0
    assert "violations=0" in out


def test_stdin_and_input_errors(capsys, monkeypatch):
    monkeypatch.setattr("sys.stdin", io.StringIO("ring x, y over gf(4)\n"))
    code, _, err = run(capsys, "hilbert", "-")
    assert code == 2 and err.startswith("-:1:16:")
    monkeypatch.setattr("sys.stdin", io.StringIO("ring x, y over monomial\ndegrees 2, 3\nideal x^2, x*y, y^4\n"))
    code, _, err = run(capsys, "egh", "-")
    assert code == 2 and "does not contain" in err
    code, _, err = run(capsys, "hilbert", "/nonexistent/file")
    assert code == 2


def test_violation_exit_code(capsys, doc_path, monkeypatch):
    def failing(doc, opts):
        report = RunReport("hilbert", {}, ("degree", "pass"))
        report.rows = [{"degree": 0, "pass": False}]
        return report

    monkeypatch.setitem(commands.DOCUMENT_COMMANDS, "hilbert", failing)
    code, out, _ = run(capsys, "hilbert", doc_path)
    assert code == 1 and "FAIL" in out


def test_verify_is_reproducible_across_jobs(capsys):
    args = ["verify", "--n", "3", "--degrees", "2,3,5", "--trials", "6", "--seed", "4", "--format", "records"]
    code1, out1, _ = run(capsys, *args, "--jobs", "1")
    code2, out2, _ = run(capsys, *args, "--jobs", "2")
    code3, out3, _ = run(capsys, *args, "--jobs", "1")
    assert code1 == code2 == code3 == 0
    assert out1 == out2 == out3
    assert out1.count("kind=row") == 6
