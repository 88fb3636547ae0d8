"""Prime spectra and the hull-kernel topology on Spec and Min."""

import itertools

import pytest

from ringlab.ideals import all_ideals, generated_ideal
from ringlab.rings import make_product, make_zmod
from ringlab.spectrum import (
    Ambient,
    SpecSubset,
    check_lemma_p3,
    check_lemma_p4,
    closure,
    compute_spectrum,
    hull,
    interior,
)
from ringlab.verdicts import Status


def prime_oracle(ring, mask):
    """Definition restated: proper, and ab in P forces a or b in P."""
    if mask == (1 << ring.size) - 1:
        return False
    for a in range(ring.size):
        for b in range(ring.size):
            if mask >> ring.mul[a][b] & 1 and not mask >> a & 1 and not mask >> b & 1:
                return False
    return True


def test_spectrum_z6():
    z6 = make_zmod(6)
    view = compute_spectrum(z6)
    assert [set(p.members) for p in view.primes] == [{0, 3}, {0, 2, 4}]
    assert view.maximal == (True, True)
    assert view.minimal == (True, True)


def test_spectrum_z12():
    view = compute_spectrum(make_zmod(12))
    assert sorted((set(p.members) for p in view.primes), key=len) == [
        {0, 3, 6, 9},
        {0, 2, 4, 6, 8, 10},
    ]


def test_spectrum_z4():
    view = compute_spectrum(make_zmod(4))
    assert [set(p.members) for p in view.primes] == [{0, 2}]


@pytest.mark.parametrize("n", [2, 3, 4, 5, 6, 8, 9, 12, 16, 18, 30])
def test_primes_of_zmod_match_prime_divisors(n):
    ring = make_zmod(n)
    view = compute_spectrum(ring)
    expected = []
    for p in range(2, n + 1):
        if n % p == 0 and all(p % q for q in range(2, p)):
            expected.append({x for x in range(n) if x % p == 0})
    assert sorted(map(sorted, (p.members for p in view.primes))) == sorted(map(sorted, expected))


def test_primality_filter_against_definition_oracle():
    for ring in [make_zmod(12), make_product([make_zmod(2), make_zmod(4)])]:
        view = compute_spectrum(ring)
        prime_masks = set(view.primes.masks())
        for ideal in all_ideals(ring):
            assert (ideal.mask in prime_masks) == prime_oracle(ring, ideal.mask)


def test_maximal_ideals_are_prime():
    for n in (4, 6, 8, 9, 12, 16, 18, 30):
        ring = make_zmod(n)
        family = all_ideals(ring)
        full = (1 << ring.size) - 1
        proper = [i.mask for i in family if i.mask != full]
        maximal = [m for m in proper if not any(x != m and m & ~x == 0 for x in proper)]
        prime_masks = set(compute_spectrum(ring).primes.masks())
        for m in maximal:
            assert m in prime_masks


def test_hull_examples():
    z12 = make_zmod(12)
    view = compute_spectrum(z12)
    assert hull(view, {6}, Ambient.MIN).members == view.space_mask(Ambient.MIN)
    assert hull(view, {0}).members == view.space_mask(Ambient.SPEC)
    assert hull(view, {1}).is_empty


def test_hull_sees_only_generated_ideal():
    for n in (6, 12, 30):
        ring = make_zmod(n)
        view = compute_spectrum(ring)
        for a in ring.elements:
            for b in ring.elements:
                s = {a, b}
                assert hull(view, s).members == hull(view, generated_ideal(ring, s).members).members


def test_closure_interior_degenerate_cases():
    view = compute_spectrum(make_zmod(6))
    for which in (Ambient.SPEC, Ambient.MIN):
        space = view.space_mask(which)
        full = SpecSubset(view, which, space)
        empty = SpecSubset(view, which, 0)
        assert closure(full).members == space
        assert interior(full).members == space
        assert closure(empty).members == 0
        assert interior(empty).members == 0


def test_min_z6_is_discrete():
    view = compute_spectrum(make_zmod(6))
    single = SpecSubset(view, Ambient.MIN, 1 << 1)  # the prime {0,2,4}
    assert closure(single).members == 1 << 1


def test_closure_is_kuratowski_on_corpus_spectra():
    for ring in [make_zmod(6), make_zmod(12), make_zmod(30),
                 make_product([make_zmod(2), make_zmod(2), make_zmod(2)])]:
        view = compute_spectrum(ring)
        for which in (Ambient.SPEC, Ambient.MIN):
            space = view.space_mask(which)
            bits = [i for i in range(view.count) if space >> i & 1]
            subsets = []
            for r in range(len(bits) + 1):
                for combo in itertools.combinations(bits, r):
                    subsets.append(sum(1 << i for i in combo))
            cl = {s: closure(SpecSubset(view, which, s)).members for s in subsets}
            assert cl[0] == 0
            for s in subsets:
                assert s & ~cl[s] == 0
                assert cl[cl[s]] == cl[s]
                for t in subsets:
                    if s & ~t == 0:
                        assert cl[s] & ~cl[t] == 0
                    if (s | t) in cl:
                        assert cl[s | t] == cl[s] | cl[t]


def test_basic_min_hulls_are_clopen_for_reduced_rings():
    for n in (2, 3, 5, 6, 30):
        ring = make_zmod(n)
        view = compute_spectrum(ring)
        for a in ring.elements:
            h = hull(view, {a}, Ambient.MIN)
            assert interior(h).members == h.members
            assert closure(h).members == h.members


def test_lemma_p4_verdicts():
    assert check_lemma_p4(make_zmod(6)).status is Status.HOLDS
    assert check_lemma_p4(make_zmod(30)).status is Status.HOLDS
    v = check_lemma_p4(make_zmod(4))
    assert v.status is Status.NOT_APPLICABLE
    assert v.witness["failed_hypothesis"] == "reduced"


def test_lemma_p3_verdicts():
    assert check_lemma_p3(make_zmod(6)).status is Status.HOLDS
    cube = make_product([make_zmod(2), make_zmod(2), make_zmod(2)])
    assert check_lemma_p3(cube).status is Status.HOLDS
    assert check_lemma_p3(make_zmod(12)).status is Status.NOT_APPLICABLE
