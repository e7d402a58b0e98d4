import pytest

from hypertour.connectivity import random_strong_tournament
from hypertour.degenerate import degenerate_tournament, verify_membership
from hypertour.errors import DuplicateSubset, MissingSubset, ParseError
from hypertour.formats import parse_cert, parse_kht, parse_trn, serialize_cert, serialize_kht, serialize_trn
from hypertour.hypercore import Digraph, HyperDigraph, Tournament, random_hyperdigraph


H4_TEXT = "kht 1\n3 4\n1 2 3\n2 4 1\n3 4 1\n2 3 4\n"


def test_h4_round_trip(H4):
    assert serialize_kht(H4) == H4_TEXT
    assert parse_kht(H4_TEXT) == H4


def test_missing_row():
    with pytest.raises(MissingSubset):
        parse_kht("kht 1\n3 4\n1 2 3\n2 4 1\n3 4 1\n")


def test_duplicate_row():
    with pytest.raises(DuplicateSubset):
        parse_kht("kht 1\n3 4\n1 2 3\n3 2 1\n3 4 1\n2 3 4\n")


@pytest.mark.parametrize(
    "text,line",
    [
        ("kht 2\n3 4\n1 2 3\n2 4 1\n3 4 1\n2 3 4\n", 1),
        ("kht 1\n3 4\n1 2 3\n3 4 1\n2 4 1\n2 3 4\n", 5),
        ("kht 1\n3 x\n", 2),
        ("kht 1\r\n3 4\n", 1),
        ("kht 1\n3 4\n1 2 3\n2 4 1\n3 4 1\n2 3 4", 6),
    ],
)
def test_parse_errors(text, line):
    with pytest.raises(ParseError) as info:
        parse_kht(text)
    assert info.value.line == line
    assert str(info.value).startswith(f"line {line}:")


def test_non_ascii():
    with pytest.raises(ParseError):
        parse_kht("kht 1\n3 4\n1 2 3 \n".encode())


def test_hyperdigraph_format():
    H = random_hyperdigraph(3, 6, 0.4, 3)
    text = serialize_kht(H)
    assert text.startswith("khd 1\n")
    assert parse_kht(text) == H
    assert serialize_kht(HyperDigraph(4, 3)) == "khd 1\n3 4\n"


def test_trn_round_trip(C3):
    T = Tournament(3, frozenset({(1, 2), (2, 3), (3, 1)}))
    text = serialize_trn(T)
    assert text == "trn 1\n3\n1 2\n2 3\n3 1\n"
    back = parse_trn(text)
    assert isinstance(back, Tournament) and back.arcs == T.arcs
    D = parse_trn("trn 1\n4\n1 2\n")
    assert type(D) is Digraph
    with pytest.raises(ParseError):
        parse_trn("trn 1\n3\n2 3\n1 2\n")


def test_cert_round_trip():
    H, _ = random_strong_tournament(3, 7, 9)
    T, cert = degenerate_tournament(H)
    text = serialize_cert(cert, H.n)
    assert text.startswith("cert 1\n7\n") and text.count("\n") == 2 + 21
    back = parse_cert(text, H)
    assert back.assignment == cert.assignment
    assert verify_membership(T, H, back)
    assert parse_trn(serialize_trn(T)).arcs == T.arcs
