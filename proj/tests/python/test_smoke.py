"""Python smoke tests against the compiled _core module."""

import os
import pathlib

import pytest

import gralab

CONFIGS = pathlib.Path(os.environ.get("GRALAB_CONFIGS", "configs"))


def z8():
    return gralab.Structure(str(CONFIGS / "corpus" / "zmod-08.json"))


def test_structure_basics():
    s = z8()
    assert s.name == "zmod-08"
    assert s.ring_size == 8
    assert s.module_size == 8
    assert len(s.digest) == 16


def test_inline_config():
    s = gralab.Structure({"name": "z6", "ring": {"kind": "zmod", "n": 6}})
    assert s.ring_size == 6
    assert len(s.enumerate("graded-submodules")) == 4  # divisors of 6


def test_classify_weakly_prime():
    s = z8()
    good = s.classify("two", "graded-weakly-prime-ideal")
    assert good["holds"] is True
    bad = s.classify("four", "graded-weakly-prime-ideal")
    assert bad["holds"] is False
    assert bad["witness"]["I"]["generators"] == [[2]]


def test_classical_weakly_prime_witness_checks():
    s = z8()
    v = s.classify("four", "graded-classical-weakly-prime")
    assert v["holds"] is False
    assert v["witness"]["x"] == [2]
    assert s.check_witness("four", "graded-classical-weakly-prime", v["witness"])


def test_matrix_example():
    s = gralab.Structure(str(CONFIGS / "corpus" / "matrix2-z8-g4.json"))
    assert s.homogeneous_count == 127
    v = s.classify("zero", "graded-classical-weakly-prime")
    assert v["holds"] is True
    w = s.classify("zero", "graded-classical-prime")
    assert w["holds"] is False
    tz = s.triple_zero("zero")
    assert tz is not None
    assert "L" in tz


def test_enumerate_lattice():
    s = z8()
    subs = s.enumerate("graded-submodules")
    assert [item["size"] for item in subs] == [1, 2, 4, 8]


def test_verify_single_theorem():
    s = z8()
    report = s.verify("thm-quotient-down")
    assert report["violations"] == []
    assert report["hypothesis_passing"] >= 1


def test_theorem_ids_and_predicates():
    assert "thm-duo-chain" in gralab.theorem_ids()
    assert "graded-classical-weakly-prime" in gralab.predicate_names()


def test_errors():
    with pytest.raises(gralab.ValidationError):
        gralab.Structure({"name": "bad", "ring": {"kind": "zmod", "n": 0}})
    s = z8()
    with pytest.raises(gralab.ValidationError):
        s.classify("zero", "no-such-predicate")


def test_search():
    fam = CONFIGS / "families" / "matrix2-z8.json"
    res = gralab.search_separating_example(
        str(fam), "graded-classical-weakly-prime", "graded-classical-prime"
    )
    assert res["found"] is True
    assert res["instance"]["submodule"]["size"] == 1  # the zero submodule
