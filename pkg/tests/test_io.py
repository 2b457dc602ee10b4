import pytest

from quandlekit import io as qio
from quandlekit.algebra import make_alexander_rep, make_conj_rep, permutation_rep_r3
from quandlekit.errors import InputError
from quandlekit.homology import Cochain
from quandlekit.quandles import make_dihedral, make_trivial


def test_quandle_round_trip(tmp_path):
    q = make_dihedral(5)
    doc = qio.quandle_to_doc(q)
    path = tmp_path / "r5.json"
    path.write_text(qio.dumps_document(doc))
    q2 = qio.load_quandle(str(path))
    assert q2.table == q.table


def test_quandle_shorthands():
    assert qio.load_quandle("dihedral:4").size == 4
    assert qio.load_quandle("alexander:5:2").op(0, 1) == 4
    assert qio.load_quandle("trivial:3").op(1, 2) == 1
    with pytest.raises(InputError):
        qio.load_quandle("dihedral:x")
    with pytest.raises(InputError):
        qio.load_quandle("no-such-file.json")


def test_quandle_doc_validation():
    with pytest.raises(InputError):
        qio.quandle_from_doc({"size": 2})
    with pytest.raises(InputError):
        qio.quandle_from_doc({"size": 3, "table": [[0, 0], [1, 1]]})


def test_rep_round_trip(tmp_path):
    rep = make_conj_rep(permutation_rep_r3(3))
    path = tmp_path / "rep.json"
    path.write_text(qio.dumps_document(qio.rep_to_doc(rep)))
    rep2 = qio.load_rep(str(path))
    assert rep2.eta == rep.eta
    assert rep2.tau == rep.tau
    assert rep2.modulus == 3


def test_rep_shorthands():
    q = make_trivial(2)
    rep = qio.load_rep("alexander-rep:5:2", quandle=q)
    assert rep.modulus == 5
    rep2 = qio.load_rep("conj-rep:perm3")
    assert rep2.is_conj_type
    rep3 = qio.load_rep("trivial-action:7", quandle=q)
    assert rep3.eta_at(0, 1) == [[1]]
    assert rep3.tau_at(0, 1) == [[0]]
    with pytest.raises(InputError):
        qio.load_rep("alexander-rep:5:2")   # needs a quandle


def test_cochain_round_trip(tmp_path):
    kappa = Cochain(2, 3, 3, {(0, 1): [1, 0, 2], (2, 0): [0, 1, 0]})
    path = tmp_path / "kappa.json"
    path.write_text(qio.dumps_document(qio.cochain_to_doc(kappa)))
    back = qio.load_cochain(str(path))
    assert back.values == kappa.values
    assert (back.degree, back.modulus, back.dim) == (2, 3, 3)


def test_cochain_doc_validation():
    with pytest.raises(InputError):
        qio.cochain_from_doc({"degree": 2, "modulus": 3})
    with pytest.raises(InputError):
        qio.cochain_from_doc({"degree": 2, "modulus": 3, "dim": 1,
                              "values": {"0,1,2": [1]}})
    with pytest.raises(InputError):
        qio.cochain_from_doc({"degree": 2, "modulus": 3, "dim": 2,
                              "values": {"0,1": [1]}})


def test_zero_cochain_shorthand():
    rep = make_alexander_rep(make_trivial(2), 2, 1)
    kappa = qio.load_cochain("zero", rep=rep)
    assert kappa.values == {}
    with pytest.raises(InputError):
        qio.load_cochain("zero")


def test_invalid_json_reports_location(tmp_path):
    path = tmp_path / "broken.json"
    path.write_text("{\n  \"table\": [[0,\n}")
    with pytest.raises(InputError) as err:
        qio.load_quandle(str(path))
    assert "line" in str(err.value)


def test_dumps_document_is_stable():
    doc = {"b": 1, "a": [3, 2], "nested": {"z": 0, "y": 1}}
    assert qio.dumps_document(doc) == qio.dumps_document(dict(reversed(doc.items())))
