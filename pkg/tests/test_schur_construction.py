import pytest

from schur_crystal.classes import count_class, count_distinct_avoiding, iter_class, schur3_class, schur5_class
from schur_crystal.partitions import shift
from schur_crystal.schur_construction import (
    SCHUR7_PATTERNS,
    SCHUR7_TEMPLATES,
    apply_beta,
    beta0,
    beta_preimage,
    beta_shifted,
    beta_table,
    derive_forbidden_set,
    expand_template,
    in_schur7,
    pattern_templates,
    schur7_class,
    schur_avoidance_class,
    schur_image_class,
    schur_p_membership,
)
from schur_crystal.sp_class import NotInClassError


@pytest.mark.parametrize(
    "lam, p, image",
    [
        ((5, 5), 5, (6, 4)),
        ((7, 7), 7, (8, 6)),
        ((7, 7, 7), 7, (9, 7, 5)),
        ((8, 7, 7), 7, (9, 8, 5)),
        ((7, 7, 6), 7, (9, 6, 5)),
        ((10, 7, 7), 7, (10, 8, 6)),
        ((9, 7, 7), 7, (9, 8, 6)),
        ((7, 7, 5), 7, (8, 6, 5)),
        ((7, 7, 4), 7, (8, 6, 4)),
        ((6, 5), 5, (6, 5)),
        ((5,), 5, (5,)),
    ],
)
def test_insertion_examples(lam, p, image):
    assert beta0(lam, p) == image


def test_insertion_rejects_nonmembers():
    with pytest.raises(NotInClassError):
        beta0((6, 4), 5)


def test_shifted_insertion():
    assert beta_shifted((14, 14), 7, 2) == (15, 13)
    assert beta_shifted((), 5, 2) == ()
    assert beta_shifted((12, 10), 5, 2) == (12, 10)
    # conjugation by a shift of 7
    assert beta_shifted((14, 14), 7, 2) == shift(beta0((7, 7), 7), 7, 1)


@pytest.mark.parametrize("p", [3, 5, 7, 9])
def test_insertion_is_injective_and_strict(p):
    table = beta_table(p)
    assert len(set(table)) == len(table)
    assert all(len(set(img)) == len(img) for img in table)


def test_image_membership_examples():
    assert schur_p_membership((6, 4), 5)
    assert beta_preimage((6, 4), 5) == (5, 5)
    assert not schur_p_membership((3, 2), 5)
    assert apply_beta((15, 15, 5, 5), 5) == (16, 14, 6, 4)


def test_forbidden_set_small_moduli():
    fs = derive_forbidden_set(3)
    assert fs.complete and not fs.exceptional
    assert (6, 3) in fs.minimal
    fs = derive_forbidden_set(5)
    assert fs.complete
    assert set(fs.exceptional) == {(3, 2), (10, 6, 4), (11, 9, 5), (11, 10, 5, 4)}


def test_forbidden_set_seven():
    fs = derive_forbidden_set(7)
    assert fs.complete
    assert len(fs.minimal) == len(fs.gap) + len(fs.exceptional)
    assert len(fs.exceptional) == 39
    assert set(fs.exceptional) == set(SCHUR7_PATTERNS)
    assert all(len(mu) == 4 and mu[0] - mu[-1] <= 7 for mu in fs.gap)


def test_templates_round_trip():
    assert sorted(mu for t in SCHUR7_TEMPLATES for mu in expand_template(t)) == sorted(SCHUR7_PATTERNS)
    assert len(SCHUR7_TEMPLATES) == 26
    back = pattern_templates(SCHUR7_PATTERNS)
    assert sorted(mu for t in back for mu in expand_template(t)) == sorted(SCHUR7_PATTERNS)
    assert expand_template("14,9..11,8,6") == [(14, 9, 8, 6), (14, 10, 8, 6), (14, 11, 8, 6)]


@pytest.mark.parametrize("p, reference", [(3, schur3_class), (5, schur5_class)])
def test_image_matches_classical(p, reference):
    img = schur_image_class(p)
    ref = reference()
    for n in range(31):
        assert set(iter_class(img, n)) == set(iter_class(ref, n))


@pytest.mark.parametrize("p", [3, 5, 7])
def test_avoidance_matches_image(p):
    img, av = schur_image_class(p), schur_avoidance_class(p)
    for n in range(26):
        assert set(iter_class(img, n)) == set(iter_class(av, n))


@pytest.mark.parametrize("p", [3, 5, 7, 9])
def test_image_equinumerous(p):
    assert count_class(schur_image_class(p), 30) == count_distinct_avoiding(p, 30)


def test_explicit_p7_rule_rejects_image_members():
    # Residue triples (1,0,6) and (6,1,0) are missing from the exception list of
    # the explicit p = 7 description, so it drops image members first at size 22.
    for lam in [(8, 7, 6, 1), (13, 8, 7, 6)]:
        assert schur_p_membership(lam, 7)
        assert not in_schur7(lam)
    explicit = count_class(schur7_class(), 22)
    image = count_class(schur_image_class(7), 22)
    assert explicit[:22] == image[:22]
    assert (explicit[22], image[22]) == (60, 61)
