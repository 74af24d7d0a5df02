import json

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import GOLDEN
from hopfqf.adjoint import AlgebraMorphism
from hopfqf.examples import corpus as build_corpus
from hopfqf.examples import cyclic_group, group_algebra, taft
from hopfqf.family import QuantumFamilyData
from hopfqf.fileformat import FormatError, MorphismSpec, emit, parse_file, parse_text, to_document
from hopfqf.linalg import GF, QQ

GOLDEN_FILES = sorted(p.name for p in GOLDEN.glob("*.hopf.json") if "_ref_" not in p.name)


@pytest.mark.parametrize("name", GOLDEN_FILES)
def test_golden_parse_emit_is_identity(name):
    text = (GOLDEN / name).read_text(encoding="utf-8")
    assert emit(parse_file(GOLDEN / name).value) == text


@pytest.mark.parametrize("key", ["kZ2", "kS3", "fnZ2", "fnS3", "H4", "taft2_F3", "taft3_F7"])
def test_emit_parse_reproduces_tensors(key):
    h = build_corpus()[key]
    back = parse_text(emit(h)).value
    assert back.same_structure(h)
    assert back.basis_names == h.basis_names


@given(st.sampled_from([(2, 3), (2, 5), (3, 7), (3, 13)]))
def test_taft_roundtrip(np_):
    n, p = np_
    h = taft(n, GF(p))
    text = emit(h)
    assert emit(parse_text(text).value) == text


def test_emission_uses_string_scalars():
    doc = json.loads(emit(build_corpus()["H4"]))
    for key in ("mult", "comult", "counit", "antipode", "unit"):
        for entry in doc[key]:
            assert isinstance(entry[-1], str)
            assert all(isinstance(i, int) for i in entry[:-1])


def test_entry_arities():
    doc = to_document(build_corpus()["H4"])
    assert {k: len(doc[k][0]) for k in ("unit", "mult", "comult", "counit", "antipode")} == {
        "unit": 2,
        "mult": 4,
        "comult": 4,
        "counit": 2,
        "antipode": 3,
    }
    # Δ(x) = x⊗1 + g⊗x: source index first
    assert [2, 1, 2, "1"] in doc["comult"] and [2, 2, 0, "1"] in doc["comult"]
    # xg = -gx
    assert [2, 1, 3, "-1"] in doc["mult"]
    # S(x) = -gx
    assert [2, 3, "-1"] in doc["antipode"]


def test_family_with_relative_paths_matches_embedded():
    ref = parse_file(GOLDEN / "family_delta_ref_kZ2.hopf.json").value
    emb = parse_file(GOLDEN / "family_delta_kZ2.hopf.json").value
    assert ref.alpha == emb.alpha
    assert ref.h1.same_structure(emb.h1)
    assert emit(ref) == (GOLDEN / "family_delta_kZ2.hopf.json").read_text(encoding="utf-8")


def test_morphism_roundtrip_and_bind():
    c = build_corpus()
    h = c["H4"]
    phi = AlgebraMorphism(h, h.alg, h.alg.identity())
    spec = parse_text(emit(phi)).value
    assert isinstance(spec, MorphismSpec)
    assert spec.bind(h).map == phi.map
    with pytest.raises(FormatError):
        spec.bind(c["kS3"])


def kz2_doc():
    return json.loads(emit(group_algebra(cyclic_group(2), QQ)))


def mutate(fn):
    doc = kz2_doc()
    fn(doc)
    return json.dumps(doc)


@pytest.mark.parametrize(
    "edit, message",
    [
        (lambda d: d["mult"].append([0, 0, 2, "1"]), r"mult\[4\] \[0, 0, 2, \"1\"\]: index 2 out of range"),
        (lambda d: d["mult"][0].__setitem__(3, "2/4"), "non-canonical rational '2/4'"),
        (lambda d: d["mult"][0].__setitem__(3, "0"), "zero entries must be omitted"),
        (lambda d: d["mult"].append(list(d["mult"][0])), "duplicate entry"),
        (lambda d: d["counit"][0].__setitem__(1, 1), "scalar must be a string"),
        (lambda d: d["counit"][0].__setitem__(0, "0"), "index 0 is not an integer"),
        (lambda d: d["antipode"][0].pop(), "expected 2 indices"),
        (lambda d: d.__setitem__("field", "Fp:8"), "not a prime"),
        (lambda d: d.__setitem__("field", "R"), "unknown field tag"),
        (lambda d: d.__setitem__("kind", "coalgebra"), "kind"),
        (lambda d: d.pop("comult"), "comult: missing"),
        (lambda d: d.__setitem__("colour", "blue"), "unknown key"),
        (lambda d: d.__setitem__("basis", ["1", "1"]), "distinct"),
        (lambda d: d.__setitem__("dim", 0), "positive integer"),
    ],
)
def test_rejections(edit, message):
    with pytest.raises(FormatError, match=message):
        parse_text(mutate(edit))


def test_json_syntax_error_has_position():
    with pytest.raises(FormatError, match=r"line 2 column"):
        parse_text('{\n  "kind": "hopf",,\n}')


def test_float_literals_rejected():
    with pytest.raises(FormatError, match="numeric literal"):
        parse_text('{"kind": "hopf", "dim": 2.0}')


def test_duplicate_keys_rejected():
    with pytest.raises(FormatError, match="duplicate key"):
        parse_text('{"kind": "hopf", "kind": "hopf"}')


def test_prime_field_residues():
    text = emit(taft(2, GF(5)))
    bad = text.replace('"4"]', '"5"]', 1)
    assert bad != text
    with pytest.raises(FormatError, match="not in"):
        parse_text(bad)


def test_missing_file(tmp_path):
    with pytest.raises(FormatError, match="cannot read"):
        parse_file(tmp_path / "nope.hopf.json")


def test_missing_reference_and_cycle(tmp_path):
    fam = {"kind": "family", "field": "Q", "source": "a.hopf.json", "target": "a.hopf.json", "base": "a.hopf.json", "alpha": []}
    (tmp_path / "f.hopf.json").write_text(json.dumps(fam))
    with pytest.raises(FormatError, match="cannot read"):
        parse_file(tmp_path / "f.hopf.json")
    loop = dict(fam, source="f.hopf.json")
    (tmp_path / "f.hopf.json").write_text(json.dumps(loop))
    with pytest.raises(FormatError, match="circular"):
        parse_file(tmp_path / "f.hopf.json")


def test_reference_kind_and_field_checked(tmp_path):
    (tmp_path / "t.hopf.json").write_text(emit(taft(2, GF(3))))
    (tmp_path / "m.hopf.json").write_text(emit(group_algebra(cyclic_group(2), QQ).alg))
    base = {"kind": "family", "field": "Q", "base": "m.hopf.json", "alpha": []}
    (tmp_path / "f.hopf.json").write_text(json.dumps(dict(base, source="t.hopf.json", target="t.hopf.json")))
    with pytest.raises(FormatError, match="Fp:3"):
        parse_file(tmp_path / "f.hopf.json")
    (tmp_path / "g.hopf.json").write_text(json.dumps(dict(base, source="m.hopf.json", target="m.hopf.json")))
    with pytest.raises(FormatError, match="kind 'algebra'"):
        parse_file(tmp_path / "g.hopf.json")


def test_alpha_index_bounds():
    h = group_algebra(cyclic_group(2), QQ)
    doc = json.loads(emit(QuantumFamilyData(h, h, h.alg, h.comult)))
    doc["alpha"].append([0, 2, 0, "1"])
    with pytest.raises(FormatError, match=r"alpha\[2\].*index 2 out of range"):
        parse_text(json.dumps(doc))
