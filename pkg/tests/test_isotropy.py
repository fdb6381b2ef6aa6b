import pytest

from orbitcalc.isotropy import (
    admissible_data,
    alpha_pullback,
    characters_of_form,
    component_group,
    genuine_parity,
    levi_factors,
    lift_admissible,
)
from orbitcalc.partitions import DomainError
from orbitcalc.realforms import (
    KOrbit,
    RealForm,
    Signature,
    SignedDiagram,
    SpaceKind,
    descended_form,
    parse_form,
    signed_descent,
)


def diag(*cols):
    return SignedDiagram(tuple(Signature(p, m) for p, m in cols))


def ko_of(form_name, *cols):
    return KOrbit(parse_form(form_name), diag(*cols))


def test_levi_factors_principal_sl2():
    ko = ko_of("Sp(2,R)", (1, 0), (0, 1))
    factors = levi_factors(ko)
    assert [(f.level, tuple(f.kind), (f.signature.plus, f.signature.minus))
            for f in factors] == [(0, (-1, -1), (0, 0)), (1, (1, 1), (1, 0))]


def test_component_group_sizes():
    assert component_group(ko_of("Sp(2,R)", (1, 0), (0, 1))).size() == 2
    assert component_group(ko_of("Sp(4,R)", (1, 1), (1, 1))).size() == 4
    assert component_group(ko_of("Sp(4,R)", (2, 0), (0, 2))).size() == 2
    assert component_group(ko_of("Sp(1,0)", (2, 0))).size() == 1
    assert component_group(ko_of("O(1,1)", (1, 1))).size() == 4


def test_component_group_labels():
    g = component_group(ko_of("Sp(4,R)", (1, 1), (1, 1)))
    assert g.labels() == ["l1+", "l1-"]
    assert g.to_json() == {"generators": ["l1+", "l1-"], "size": 4}


def test_genuine_parity():
    assert genuine_parity(ko_of("Sp(2,R)", (1, 0), (0, 1))) == 1
    assert genuine_parity(ko_of("Sp(4,R)", (2, 0), (0, 2))) == 0
    assert genuine_parity(ko_of("O(1,1)", (1, 1))) == 0
    assert genuine_parity(ko_of("Sp(1,0)", (2, 0))) == 0


def test_admissible_data_counts():
    assert len(admissible_data(ko_of("Sp(2,R)", (1, 0), (0, 1)))) == 2
    assert len(admissible_data(ko_of("Sp(1,0)", (2, 0)))) == 1
    assert len(admissible_data(ko_of("Sp(4,R)", (1, 1), (1, 1)))) == 4


def test_admissible_datum_json():
    data = admissible_data(ko_of("Sp(2,R)", (1, 0), (0, 1)))
    assert data[0].to_json() == {"orbit": [[1, 0], [0, 1]],
                                 "bits": {"l1+": 0},
                                 "genuine_parity": 1}
    assert data[1].bits == (1,)


def descent_orbit(ko):
    return KOrbit(descended_form(ko.form, ko.diagram),
                  signed_descent(ko.diagram))


def test_alpha_pullback_side_swap():
    ko = ko_of("Sp(2,R)", (1, 0), (0, 1))
    ko_prime = descent_orbit(ko)
    assert ko_prime.form.name() == "O(0,1)"
    lower = admissible_data(ko_prime)
    assert [alpha_pullback(ko, d) for d in lower] == [(0,), (1,)]


def test_alpha_pullback_level_zero_goes_trivial():
    ko = ko_of("O(2,1)", (2, 1))  # zero orbit: single level-0 generator pair
    ko_prime = descent_orbit(ko)
    assert ko_prime.diagram.cols == ()
    datum = admissible_data(ko_prime)[0]
    assert alpha_pullback(ko, datum) == (0, 0)


def test_descent_pair_validation():
    ko = ko_of("Sp(4,R)", (2, 0), (0, 2))
    wrong_diagram = ko_of("O(1,1)", (1, 1))
    with pytest.raises(DomainError):
        alpha_pullback(ko, admissible_data(wrong_diagram)[0])
    # right diagram, but a quaternionic form instead of the descended one
    wrong_form = KOrbit(RealForm(SpaceKind(-1, 1), Signature(0, 2)),
                        diag((0, 2)))
    with pytest.raises(DomainError):
        alpha_pullback(ko, admissible_data(wrong_form)[0])


def test_characters_of_form():
    assert characters_of_form(parse_form("O(1,1)")) == \
        [(0, 0), (0, 1), (1, 0), (1, 1)]
    assert characters_of_form(parse_form("O(2,0)")) == [(0, 0), (1, 0)]
    assert characters_of_form(parse_form("Sp(2,R)")) == [(0, 0)]
    assert characters_of_form(parse_form("O*(4)")) == [(0, 0)]


def test_lift_admissible_rejects_bad_character():
    ko = ko_of("Sp(2,R)", (1, 0), (0, 1))
    datum = admissible_data(descent_orbit(ko))[0]
    with pytest.raises(DomainError):
        lift_admissible(ko, datum, (1, 0))


def test_lift_admissible_orthogonal_twist():
    ko = ko_of("O(2,1)", (1, 0), (0, 1), (1, 0))
    ko_prime = descent_orbit(ko)
    assert ko_prime.form.name() == "Sp(2,R)"
    got = set()
    for datum in admissible_data(ko_prime):
        for chi in characters_of_form(ko.form):
            got.add(lift_admissible(ko, datum, chi).bits)
    assert got == {d.bits for d in admissible_data(ko)}


def test_lift_admissible_surjective_from_sl2_descent():
    ko = ko_of("Sp(4,R)", (1, 1), (1, 1))
    ko_prime = descent_orbit(ko)
    got = set()
    for datum in admissible_data(ko_prime):
        for chi in characters_of_form(ko.form):
            got.add(lift_admissible(ko, datum, chi).bits)
    assert got == {d.bits for d in admissible_data(ko)}
