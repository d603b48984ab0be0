import pytest

from gyrokit.catalog import cyclic, sym3
from gyrokit.core import Perm, ResourceCapError
from gyrokit.nuclei import (
    PermGroup,
    is_twisted_subgroup,
    left_nucleus,
    left_translations,
    lg_prime,
    lg_prime_word_oracle,
    lg_sharp,
    lmlt,
    middle_nucleus,
    radical,
    right_nucleus,
)
from gyrokit.normality import is_normal
from gyrokit.substructure import (
    is_L_subgyrogroup,
    is_subgroup,
    left_coset,
    right_coset,
)


class TestLeftTranslations:
    def test_z4_shifts(self):
        ts = left_translations(cyclic(4))
        assert [t.images for t in ts] == [
            (0, 1, 2, 3),
            (1, 2, 3, 0),
            (2, 3, 0, 1),
            (3, 0, 1, 2),
        ]
        assert ts[0].is_identity()

    def test_rows_are_bijections(self, corpus):
        for g in corpus.values():
            for t in left_translations(g):
                assert sorted(t.images) == list(g.elements())


class TestLmlt:
    def test_group_orders(self):
        assert lmlt(cyclic(4)).order == 4
        assert lmlt(sym3()).order == 6
        assert lmlt(cyclic(1)).order == 1

    def test_nonassociative_is_larger(self, nonassoc8):
        group = lmlt(nonassoc8)
        assert group.order > 8
        # it contains a nonidentity permutation fixing 0
        assert any(p(0) == 0 and not p.is_identity() for p in group.elements)

    def test_cap(self, nonassoc8):
        with pytest.raises(ResourceCapError):
            lmlt(nonassoc8, cap=4)

    def test_closure_properties(self, corpus):
        for g in corpus.values():
            group = lmlt(g)
            els = group.elements
            assert Perm.identity(g.order) in els
            assert all(p.inverse() in els for p in els)
            sample = sorted(els)[: min(len(els), 8)]
            assert all(p * q in els for p in sample for q in sample)


class TestTwistedSubgroups:
    def test_whole_group_is_twisted(self):
        group = lmlt(sym3())
        assert is_twisted_subgroup(group, group.elements).is_twisted

    def test_identity_alone_is_twisted(self):
        group = lmlt(cyclic(4))
        assert is_twisted_subgroup(group, [Perm.identity(4)]).is_twisted

    def test_translations_are_twisted(self, corpus):
        for g in corpus.values():
            group = lmlt(g)
            report = is_twisted_subgroup(group, left_translations(g))
            assert report.is_twisted, report.violations

    def test_violations_reported(self):
        group = lmlt(cyclic(4))
        shift = cyclic(4).left_translation(1)
        report = is_twisted_subgroup(group, [shift])
        assert not report.is_twisted
        kinds = {kind for _, _, kind in report.violations}
        assert "identity" in kinds

    def test_subset_must_be_inside(self):
        group = lmlt(cyclic(4))
        with pytest.raises(ValueError):
            is_twisted_subgroup(group, [Perm([1, 0, 2, 3])])


class TestLgSharp:
    def test_group_gives_all_translations(self, groups):
        for g in groups.values():
            assert lg_sharp(g) == frozenset(left_translations(g))

    def test_trivial(self):
        assert lg_sharp(cyclic(1)) == frozenset([Perm.identity(1)])

    def test_equals_nucleus_translations(self, corpus):
        for g in corpus.values():
            sharp = lg_sharp(g)
            expected = frozenset(
                g.left_translation(a) for a in left_nucleus(g).members
            )
            assert sharp == expected

    def test_three_characterizations_agree(self, corpus):
        # definitional intersection == translations of elements with trivial
        # gyrations on the right slot == translations of the left nucleus
        for g in corpus.values():
            translations = left_translations(g)
            lg = frozenset(translations)
            raw = lg
            for a in g.elements():
                raw &= frozenset(translations[a] * lx for lx in lg)
            by_gyr = frozenset(
                translations[x]
                for x in g.elements()
                if all(g.gyr(a, x).is_identity() for a in g.elements())
            )
            by_nucleus = frozenset(
                translations[a] for a in left_nucleus(g).members
            )
            assert raw == by_gyr == by_nucleus == lg_sharp(g)


class TestLgPrime:
    def test_abelian_group_trivial(self):
        for n in (1, 2, 3, 4, 8):
            assert lg_prime(cyclic(n)) == frozenset([Perm.identity(n)])

    def test_group_matches_derived_subgroup_translations(self, groups):
        # for a group, the reversal kernel is the set of translations by
        # classical derived-subgroup elements (independent group oracle)
        for g in groups.values():
            t, inv = g.table, g.inv
            comms = {
                t[inv[t[a][b]]][t[b][a]] for a in g.elements() for b in g.elements()
            }
            closed = {0} | comms
            while True:
                new = {t[a][b] for a in closed for b in closed}
                new |= {inv[a] for a in closed}
                if new <= closed:
                    break
                closed |= new
            expected = frozenset(g.left_translation(a) for a in closed)
            assert lg_prime(g) == expected

    def test_word_oracle_agreement(self, corpus):
        for g in corpus.values():
            construction = lg_prime(g)
            oracle = lg_prime_word_oracle(g, max_len=6)
            assert oracle <= construction, "oracle found missing elements"
            assert oracle == construction

    def test_chain(self, corpus):
        for g in corpus.values():
            assert lg_prime(g) <= lg_sharp(g) <= frozenset(left_translations(g))


class TestNuclei:
    def test_groups_have_full_nuclei(self, groups):
        for g in groups.values():
            full = tuple(g.elements())
            assert left_nucleus(g).members == full
            assert middle_nucleus(g).members == full
            assert right_nucleus(g).members == full

    def test_trivial(self):
        t = cyclic(1)
        assert left_nucleus(t).members == (0,)

    def test_nonassociative_proper(self, nonassoc8):
        nl = left_nucleus(nonassoc8)
        assert len(nl) < 8
        assert len(radical(nonassoc8)) < 8

    def test_left_equals_middle(self, corpus):
        for g in corpus.values():
            assert left_nucleus(g).members == middle_nucleus(g).members

    def test_nuclei_are_L_subgyrogroups_and_subgroups(self, corpus):
        for g in corpus.values():
            for nucleus in (left_nucleus(g), middle_nucleus(g), right_nucleus(g)):
                assert is_L_subgyrogroup(g, nucleus)
                assert is_subgroup(g, nucleus)

    def test_left_nucleus_normal_with_lemma(self, corpus):
        for g in corpus.values():
            nl = left_nucleus(g).as_set()
            for a in g.elements():
                assert left_coset(g, nl, a) == right_coset(g, nl, a)
                for b in g.elements():
                    assert frozenset(g.gyr(a, b)(x) for x in nl) <= nl
            assert is_normal(g, nl)

    def test_group_iff_left_nucleus_full(self, corpus):
        for g in corpus.values():
            assert g.is_group() == (len(left_nucleus(g)) == g.order)

    def test_census_nuclei_proper_for_nonassociative(self, census8):
        for g in census8:
            if not g.is_group():
                assert len(left_nucleus(g)) < g.order


class TestRadical:
    def test_abelian_gives_zero(self):
        for n in (2, 4, 8):
            assert radical(cyclic(n)).members == (0,)

    def test_trivial(self):
        assert radical(cyclic(1)).members == (0,)

    def test_postconditions(self, corpus):
        for g in corpus.values():
            rad = radical(g)
            assert rad.as_set() <= left_nucleus(g).as_set()
            assert is_subgroup(g, rad)
            assert is_normal(g, rad)
            rset = rad.as_set()
            for a in g.elements():
                assert left_coset(g, rset, a) == right_coset(g, rset, a)
                for b in g.elements():
                    assert frozenset(g.gyr(a, b)(x) for x in rset) <= rset


class TestPermGroup:
    def test_generated_requires_generators(self):
        with pytest.raises(ValueError):
            PermGroup.generated([])

    def test_contains(self):
        group = PermGroup.generated([Perm([1, 0])])
        assert Perm([1, 0]) in group and Perm.identity(2) in group
        assert group.order == 2

    def test_sym0_intersection_trivial(self, corpus):
        for g in corpus.values():
            translations = left_translations(g)
            fixing_zero = [p for p in translations if p(0) == 0]
            assert fixing_zero == [Perm.identity(g.order)]
