import math
import os
import sys

import pytest

mod_dir = os.environ.get("BRAID3_MODULE_DIR")
if mod_dir:
    sys.path.insert(0, mod_dir)
    import _braid3 as b3
else:
    b3 = pytest.importorskip("braid3")


def test_reduce_and_cyclic():
    assert b3.reduce_word("a1 a1 a1^-1") == "a1"
    assert b3.cyclic_reduce("a1 a2 a1^-1") == "a2"


def test_syllables_and_L():
    syl = b3.syllables("a2^-1 a1^2 a2^-3 a1^-1 a2^-1 a1^-1 a2 a1^-1")
    assert [d for _, d in syl] == [1, 2, 3, 3, 1, 1]
    L = b3.script_L("a2^-1 a1^2 a2^-3 a1^-1 a2^-1 a1^-1 a2 a1^-1")
    assert math.isclose(L, 3 * math.log(3) + math.log(7) + 2 * math.log(11), rel_tol=1e-14)


def test_normal_form_round_trip():
    nf = b3.normal_form("s1^3 s2^-2")
    assert nf["j"] == 1 and nf["k"] == 3 and nf["b1"] == "a2^-1"
    assert b3.braids_equal("s1^3 s2^-2", nf["denormalized"])
    assert b3.braids_equal("s1 s2", "s2^-1 d")


def test_entropy_and_bounds():
    h = b3.entropy_exact("a1^-1 a2")
    assert math.isclose(h, math.log(3 + 2 * math.sqrt(2)), rel_tol=1e-12)
    rep = b3.bounds("a1^-1 a2", "conjugacy")
    assert rep["entropy_lower"] <= h <= rep["entropy_upper"]
    assert b3.class_check("a1^-1 a2")
    exc = b3.bounds("a1^5", "tr")
    assert exc["exceptional"] is not None and exc["lambda_upper"] == 0.0


def test_braid_bounds():
    rep = b3.braid_bounds("s1^3 s2^-2")
    assert rep["exceptional"] is None
    assert math.isclose(rep["L"], 2 * math.log(3), rel_tol=1e-14)


def test_enumerate():
    assert len(b3.enumerate_words(2)) == 12


def test_analytic():
    assert math.isclose(b3.ellip_K(0.0), math.pi / 2, rel_tol=1e-14)
    lo, hi, plo, phi = b3.slalom_extremal_bounds(1.0)
    v = b3.slalom_extremal_exact(1.0)
    assert lo <= v <= hi and plo <= v <= phi
    assert b3.half_slalom_extremal(1.0) == v / 2


def test_glue():
    rep = b3.glue_word("a1^2 a2^-2", 1.0 / 180)
    assert rep["sup_mu"] < 0.1712
    assert rep["qc_dilatation"] <= 1.414


def test_audits():
    assert b3.audit_upper_bound_arithmetic()["all_pass"]
