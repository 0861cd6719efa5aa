import json

import pytest

from structid.algebra import Poly, Symbol, SymbolTable
from structid.bundled import get_example
from structid.structures import (
    DesignEdit,
    EditError,
    StructureError,
    apply_edits,
    make_structure,
    parse_structure,
    serialize_structure,
    validate_compartmental,
)

PARENT_THETA = (
    "k01", "k12", "k21", "k23", "k32",
    "x10", "x20", "x30",
    "c1", "c2", "c3",
)


def parent_text() -> str:
    return json.dumps(get_example("parent"))


def single_compartment(table=None):
    table = table or SymbolTable(["k", "c", "x0"])
    k, c, x0 = table.get("k"), table.get("c"), table.get("x0")
    return make_structure(
        n=1,
        k=1,
        A=[[-Poly.var(k)]],
        C=[[Poly.var(c)]],
        x0=[Poly.var(x0)],
        theta=[k, c, x0],
        outflow_params=[Poly.var(k)],
        compartmental=True,
        table=table,
    )


def test_parse_parent():
    spec = parse_structure(parent_text())
    assert spec.n == 3
    assert spec.k == 3
    assert tuple(s.name for s in spec.theta) == PARENT_THETA
    assert spec.compartmental


def test_parse_serialize_roundtrip_bit_exact():
    text1 = serialize_structure(parse_structure(parent_text()))
    text2 = serialize_structure(parse_structure(text1))
    assert text1 == text2
    spec1 = parse_structure(text1)
    spec2 = parse_structure(text2)
    assert spec1.A == spec2.A
    assert spec1.C == spec2.C
    assert spec1.x0 == spec2.x0
    assert spec1.theta == spec2.theta


def test_parse_accepts_bytes():
    spec = parse_structure(parent_text().encode("utf-8"))
    assert spec.n == 3


def test_shape_mismatch_rejected():
    doc = get_example("parent")
    doc = dict(doc, A=[row[:2] for row in doc["A"]])  # 3x2 instead of 3x3
    with pytest.raises(StructureError):
        parse_structure(json.dumps(doc))


def test_duplicate_parameter_rejected():
    doc = dict(get_example("parent"))
    doc["parameters"] = list(doc["parameters"]) + ["k01"]
    with pytest.raises(StructureError):
        parse_structure(json.dumps(doc))


def test_undeclared_symbol_becomes_constant():
    # names outside the parameters list are constants, not unknowns
    doc = dict(get_example("parent"))
    doc = dict(doc, A=[list(row) for row in doc["A"]])
    doc["A"][0][1] = "k12 * vol"
    spec = parse_structure(json.dumps(doc))
    assert "vol" in {s.name for s in spec.constants}
    assert all(s.name != "vol" for s in spec.theta)


def test_malformed_expression_rejected():
    doc = dict(get_example("parent"))
    doc = dict(doc, A=[list(row) for row in doc["A"]])
    doc["A"][0][0] = "k01 +"
    with pytest.raises(StructureError):
        parse_structure(json.dumps(doc))


def test_validate_single_compartment_passes():
    report = validate_compartmental(single_compartment())
    assert report.passed
    assert report.violations == ()


def test_validate_parent_passes():
    report = validate_compartmental(parse_structure(parent_text()))
    assert report.passed


def test_validate_positive_diagonal_fails():
    table = SymbolTable(["c", "x0"])
    spec = make_structure(
        n=1,
        k=1,
        A=[[Poly.one()]],
        C=[[Poly.var(table.get("c"))]],
        x0=[Poly.var(table.get("x0"))],
        theta=[table.get("c"), table.get("x0")],
        outflow_params=[Poly.zero()],
        compartmental=True,
        table=table,
    )
    report = validate_compartmental(spec)
    assert not report.passed
    assert any(
        v.constraint == "diagonal" and v.row == 1 and v.col == 1
        for v in report.violations
    )


def test_edit_constant_shrinks_theta():
    spec = parse_structure(parent_text())
    edit = DesignEdit.parse("C[1][1]=1", spec.table)
    edited = apply_edits(spec, [edit])
    assert len(spec.theta) == 11  # parent untouched
    assert len(edited.theta) == 10
    assert all(s.name != "c1" for s in edited.theta)


def test_empty_edit_list_is_identity():
    spec = parse_structure(parent_text())
    edited = apply_edits(spec, [])
    assert edited.A == spec.A
    assert edited.C == spec.C
    assert edited.x0 == spec.x0
    assert edited.theta == spec.theta


def test_edit_idempotent():
    spec = parse_structure(parent_text())
    edits = [DesignEdit.parse("C[3][3]=0", spec.table)]
    once = apply_edits(spec, edits)
    twice = apply_edits(once, [DesignEdit.parse("C[3][3]=0", once.table)])
    assert once.C == twice.C
    assert once.theta == twice.theta


def test_edit_x0_entry():
    spec = parse_structure(parent_text())
    edited = apply_edits(spec, [DesignEdit.parse("x0[2]=0", spec.table)])
    assert edited.x0[1].is_zero()
    assert all(s.name != "x20" for s in edited.theta)


def test_edit_out_of_range():
    spec = parse_structure(parent_text())
    with pytest.raises(EditError):
        apply_edits(spec, [DesignEdit.parse("C[4][1]=1", spec.table)])
    with pytest.raises(EditError):
        apply_edits(spec, [DesignEdit.parse("x0[9]=0", spec.table)])


def test_edit_parse_rejects_malformed():
    table = SymbolTable()
    for bad in ("C[1][1]", "A[1][1]=1", "x0[a]=1", "C[1][1]=1+"):
        with pytest.raises(EditError):
            DesignEdit.parse(bad, table)


def test_edit_fresh_symbol_appended():
    spec = parse_structure(parent_text())
    edited = apply_edits(spec, [DesignEdit.parse("x0[1]=q7", spec.table)])
    assert edited.theta[-1].name == "q7"
    assert all(s.name != "x10" for s in edited.theta)


def test_make_structure_shape_checks():
    table = SymbolTable(["k"])
    k = table.get("k")
    with pytest.raises(StructureError):
        make_structure(
            n=2,
            k=1,
            A=[[-Poly.var(k)]],  # 1x1 but n=2
            C=[[Poly.one(), Poly.zero()]],
            x0=[Poly.one(), Poly.zero()],
            theta=[k],
            outflow_params=[Poly.zero(), Poly.zero()],
            compartmental=False,
            table=table,
        )
