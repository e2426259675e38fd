import json

import pytest

from mahler_lab import catalog
from mahler_lab.errors import InvalidInput, NotCoprime, NotOddPrime, UnknownEntry
from mahler_lab.exact import RationalPoly
from mahler_lab.mahler import resolve_eigenvalue, solve_coefficients
from mahler_lab.regular import growth_constants, terms, verify_representation

PREFIX = 2**14
ENTRIES = catalog.standard_entries()


@pytest.mark.parametrize("entry", ENTRIES, ids=lambda e: e.name)
def test_all_forms_agree_on_prefix(entry):
    expected = entry.oracle(PREFIX)
    if entry.representation is not None:
        assert verify_representation(entry.representation, expected)
    if entry.mahler_equation is not None:
        assert solve_coefficients(entry.mahler_equation, PREFIX - 1) == expected


@pytest.mark.parametrize(
    "entry", [e for e in ENTRIES if e.expected.eigenvalue is not None and e.mahler_equation is not None],
    ids=lambda e: e.name,
)
def test_expected_eigenvalues_reproduced(entry):
    report, _ = resolve_eigenvalue(entry.mahler_equation, stride=entry.radial_stride)
    assert report.eigenvalue == entry.expected.eigenvalue


@pytest.mark.parametrize(
    "entry", [e for e in ENTRIES if e.expected.alpha is not None], ids=lambda e: e.name,
)
def test_expected_growth_reproduced(entry):
    g = growth_constants(entry.representation)
    assert g.alpha == entry.expected.alpha and g.m == entry.expected.m


def test_named_equations():
    stern = catalog.get("stern").mahler_equation
    assert stern.coeffs == (RationalPoly([0, 1]), RationalPoly([-1, -1, -1]))
    assert catalog.get("cyclotomic:3").mahler_equation.coeffs[1] == RationalPoly([-1, -1, -1])


def test_baum_sweet_blocks_definition():
    oracle = catalog.baum_sweet_oracle(2**12)
    assert [catalog.baum_sweet_by_blocks(n) for n in range(2**12)] == oracle
    assert oracle[:10] == [1, 1, 0, 1, 1, 0, 0, 1, 0, 1]


def test_dilcher_stolarsky_is_zero_one():
    vals = terms(catalog.get("dilcher-stolarsky").representation, PREFIX)
    assert set(vals) == {0, 1}


def test_cyclotomic_family_errors():
    with pytest.raises(NotOddPrime):
        catalog.cyclotomic_product(9, 2)
    with pytest.raises(NotOddPrime):
        catalog.cyclotomic_product(2, 3)
    with pytest.raises(NotCoprime):
        catalog.get("cyclotomic:3:3")
    with pytest.raises(InvalidInput):
        catalog.all_ones(1)


@pytest.mark.parametrize("name", ["nope", "cyclotomic:x", "cyclotomic:3:2:1", "all-ones:2:3"])
def test_unknown_entries(name):
    with pytest.raises(UnknownEntry):
        catalog.get(name)


def test_lookup_variants():
    assert catalog.get(" Stern ").name == "stern"
    assert catalog.get("cyclotomic:5", k=3).k == 3
    assert catalog.get("all-ones:3").k == 3


@pytest.mark.parametrize("entry", ENTRIES, ids=lambda e: e.name)
def test_json_export(entry):
    data = json.loads(json.dumps(entry.to_json()))
    assert data["name"] == entry.name and data["k"] == entry.k
