import pytest

from gyrokit.catalog import cyclic, sym3
from gyrokit.core import verify_axioms
from gyrokit.normality import (
    Hom,
    NotNormal,
    check_hom,
    check_sufficient_normality,
    image,
    induced_isomorphism,
    intersect_normals,
    is_normal,
    kernel,
    normal_closure,
    try_quotient,
)
from gyrokit.nuclei import left_nucleus
from gyrokit.substructure import enumerate_subgyrogroups, is_subgroup


class TestTryQuotient:
    def test_z6_by_even_part(self):
        z6 = cyclic(6)
        q = try_quotient(z6, [0, 2, 4])
        assert q.table.order == 2
        assert q.table.table == ((0, 1), (1, 0))
        assert q.normal_members == (0, 2, 4)

    def test_s3_transposition_subgroup_not_normal(self):
        s3 = sym3()
        with pytest.raises(NotNormal) as exc_info:
            try_quotient(s3, [0, 2])
        assert exc_info.value.step
        assert exc_info.value.witness is not None

    def test_quotient_table_passes_axioms(self, corpus):
        for g in corpus.values():
            for s in enumerate_subgyrogroups(g):
                if not is_normal(g, s):
                    continue
                q = try_quotient(g, s)
                assert verify_axioms(q.table.table).passed
                assert check_hom(q.projection)
                got_kernel = tuple(
                    a for a in g.elements() if q.projection(a) == 0
                )
                assert got_kernel == s.members

    def test_left_nucleus_always_normal(self, corpus):
        for g in corpus.values():
            q = try_quotient(g, left_nucleus(g))
            assert q.table.order * len(q.normal_members) == g.order

    def test_trivial_and_full(self, corpus):
        for g in corpus.values():
            assert is_normal(g, [0])
            assert is_normal(g, range(g.order))


class TestHoms:
    def test_identity_hom(self):
        z4 = cyclic(4)
        assert check_hom(Hom(z4, z4, (0, 1, 2, 3)))

    def test_parity_hom(self):
        phi = Hom(cyclic(4), cyclic(2), (0, 1, 0, 1))
        assert check_hom(phi)
        assert kernel(phi).members == (0, 2)
        assert image(phi).members == (0, 1)

    def test_perturbed_map_rejected_with_witness(self):
        z4, z2 = cyclic(4), cyclic(2)
        good = (0, 1, 0, 1)
        for i in range(4):
            bad = list(good)
            bad[i] ^= 1
            phi = Hom(z4, z2, tuple(bad))
            assert not check_hom(phi)

    def test_kernel_of_identity(self):
        z4 = cyclic(4)
        assert kernel(Hom(z4, z4, (0, 1, 2, 3))).members == (0,)

    def test_projection_kernels(self, corpus):
        for g in corpus.values():
            for s in enumerate_subgyrogroups(g):
                if not is_normal(g, s):
                    continue
                proj = try_quotient(g, s).projection
                assert kernel(proj).members == s.members

    def test_first_isomorphism(self, corpus):
        phi = Hom(cyclic(4), cyclic(2), (0, 1, 0, 1))
        induced = induced_isomorphism(phi)
        assert induced.domain.order == 2 and induced.codomain.order == 2
        for g in corpus.values():
            for s in enumerate_subgyrogroups(g):
                if not is_normal(g, s):
                    continue
                proj = try_quotient(g, s).projection
                induced = induced_isomorphism(proj)
                assert induced.domain.order == proj.codomain.order


class TestIntersectNormals:
    def test_z12_example(self):
        z12 = cyclic(12)
        got = intersect_normals(z12, [[0, 2, 4, 6, 8, 10], [0, 3, 6, 9]])
        assert got.members == (0, 6)

    def test_intersect_with_whole(self, corpus):
        for g in corpus.values():
            for s in enumerate_subgyrogroups(g):
                if not is_normal(g, s):
                    continue
                got = intersect_normals(g, [s, range(g.order)])
                assert got.members == s.members

    def test_all_pairs_on_nonassociative(self, nonassoc8):
        normals = [
            s
            for s in enumerate_subgyrogroups(nonassoc8)
            if is_normal(nonassoc8, s)
        ]
        for a in normals:
            for b in normals:
                got = intersect_normals(nonassoc8, [a, b])
                assert got.as_set() == a.as_set() & b.as_set()
                assert is_normal(nonassoc8, got)

    def test_rejects_non_normal_input(self):
        s3 = sym3()
        with pytest.raises(ValueError):
            intersect_normals(s3, [[0, 2]])


class TestNormalClosure:
    def test_normal_input_is_fixed_point(self, corpus):
        for g in corpus.values():
            for s in enumerate_subgyrogroups(g):
                if is_normal(g, s):
                    assert normal_closure(g, s.members).members == s.members

    def test_singleton_zero(self):
        assert normal_closure(cyclic(4), [0]).members == (0,)

    def test_s3_transposition_generates_everything(self):
        # oracle: the subgroup generated by all conjugates of (12), computed
        # with plain group arithmetic, is all of s3
        s3 = sym3()
        conjugates = set()
        for x in s3.elements():
            # x * 2 * x^-1
            conjugates.add(s3.table[s3.table[x][2]][s3.inv[x]])
        grown = {0} | conjugates
        while True:
            new = {s3.table[a][b] for a in grown for b in grown} | {
                s3.inv[a] for a in grown
            }
            if new <= grown:
                break
            grown |= new
        assert grown == set(range(6))
        assert normal_closure(s3, [2]).members == (0, 1, 2, 3, 4, 5)

    def test_minimality(self, corpus):
        for g in corpus.values():
            lattice = enumerate_subgyrogroups(g)
            normals = [s for s in lattice if is_normal(g, s)]
            for seed in lattice:
                closure = normal_closure(g, seed.members)
                assert seed.as_set() <= closure.as_set()
                assert is_normal(g, closure)
                for n in normals:
                    if seed.as_set() <= n.as_set():
                        assert closure.as_set() <= n.as_set()


class TestSufficientCondition:
    def test_examples(self):
        s3 = sym3()
        assert check_sufficient_normality(s3, [0])
        assert check_sufficient_normality(s3, [0, 3, 4])
        assert not check_sufficient_normality(s3, [0, 2])

    def test_implies_normal_on_corpus(self, corpus):
        for g in corpus.values():
            for s in enumerate_subgyrogroups(g):
                if check_sufficient_normality(g, s):
                    assert is_normal(g, s)

    def test_left_nucleus_satisfies_it(self, corpus):
        for g in corpus.values():
            assert check_sufficient_normality(g, left_nucleus(g))

    def test_converse_fails_somewhere(self, nonassoc8):
        # normality does not imply the sufficient condition; the whole
        # carrier of a nonassociative table is normal yet has nonidentity
        # inner gyrations
        assert is_normal(nonassoc8, range(8))
        assert not check_sufficient_normality(nonassoc8, range(8))


class TestGyrocommutativeQuotientWitness:
    def test_exists_on_every_corpus_table(self, corpus):
        for g in corpus.values():
            found = False
            for s in enumerate_subgyrogroups(g):
                if not is_normal(g, s) or not is_subgroup(g, s):
                    continue
                if try_quotient(g, s).table.is_gyrocommutative():
                    found = True
                    break
            assert found
