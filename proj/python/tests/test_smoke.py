import pytest

import bosonic


@pytest.fixture
def a2():
    return bosonic.Algebra("A2")


def test_relation_c(a2):
    x = a2.normal_form("f[1,0] f[1,1]")
    assert str(x) == "q^2 f[1,1] f[1,0] + (1 - q^2)"


def test_serre_vanishes(a2):
    assert a2.normal_form("f[1,0] f[1,0] f[2,0] - (q + q^-1) f[1,0] f[2,0] f[1,0] + f[2,0] f[1,0] f[1,0]").is_zero()


def test_form_and_weight(a2):
    assert a2.form("f[1,0]", "f[1,0]") == "q^-1 - q"
    assert a2.form("f[1,0]", "f[2,0]") == "0"
    assert a2.weight("f[1,0] f[2,1]") == [1, -1]


def test_braid_action(a2):
    assert a2.T(1, "f[1,0]") == "f[1,1]"
    assert a2.T(1, a2.T(2, "f[1,0]")) == "f[2,0]"
    x = a2.parse("f[2,1] f[1,0]")
    assert a2.T_inv(2, a2.T(2, x)) == x


def test_pbw(a2):
    p = bosonic.Pbw(a2, [1, 2, 2, 1])
    assert p.straighten(2, 3) == {"(0,0,0,0)": "1 - q^2"}
    assert bosonic.Pbw(a2, [1, 2, 1]).membership("f[1,1]") is None
    assert p.membership(p.F(4)) is not None


def test_braids():
    assert bosonic.garside_normal_form("A2", [2, 1, 1, 2]) == (0, [[2, 1], [1, 2]])
    assert bosonic.braid_equal("A2", [1, 2, 1], [2, 1, 2])
    assert bosonic.braid_gcd("A2", [1, 2], [1, 1]) == [1]


def test_errors():
    with pytest.raises(ValueError):
        bosonic.Element("f[1,")
    with pytest.raises(bosonic.GuardrailError):
        bosonic.Algebra("A2", max_height=2).normal_form("f[1,0] f[2,0] f[1,0]")


def test_suite():
    r = bosonic.run_suite("example-a2")
    assert r["ok"], r["checks"]
    assert bosonic.suite_names()[0] == "example-a2"
