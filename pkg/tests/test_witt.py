import itertools
import math
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from wittknots.arith import squarefree_part
from wittknots.errors import NotPrime
from wittknots.pretzel import pretzel, witt_closed_form
from wittknots.witt import (
    ZERO,
    ResidueClass,
    WittClass,
    add,
    equals,
    from_diagonal,
    is_zero,
    local_profile,
    negate,
    order,
    relevant_primes,
    residue_at,
    signature,
    zero_residue,
)

from oracles import naive_is_prime, witt_equivalent_mod_p

entries = st.integers(-300, 300).filter(bool)
classes = st.lists(entries, max_size=8).map(from_diagonal)
primes = st.sampled_from([p for p in range(2, 60) if naive_is_prime(p)])


def W(*gens):
    return from_diagonal(gens)


def test_from_diagonal_examples():
    assert W(2, -2, 18).generators == (2,)
    assert W(-2, -6, -12, -20, 2, 6, 30, 2).generators == (2, -3, -5, 30)
    assert W().generators == ()


def test_from_diagonal_drops_zeros_and_takes_squarefree_parts():
    assert W(0, 8, 0).generators == (2,)
    assert from_diagonal([Fraction(3, 2)]).generators == (6,)


def test_canonical_order_by_absolute_value_then_sign():
    assert W(30, -5, 2, -3).generators == (2, -3, -5, 30)
    assert W(3, 3, -3).generators == (3,)
    assert W(-7, -7, 7).generators == (-7,)


def test_add_and_negate_examples():
    assert add(W(3), W(-3)).generators == ()
    assert negate(W(2, -5)).generators == (-2, 5)
    assert (W(2) + W(5)).generators == (2, 5)
    assert (-W(2)).generators == (-2,)


def test_signature_examples():
    assert signature(ZERO) == 0
    assert signature(W(-3, -5, 2, 30)) == 0
    assert signature(witt_closed_form(pretzel(-3, -3, -7, 5, 2))) == 8


def test_residue_examples():
    r = residue_at(W(6, 42, -35, -5), 3)
    assert (r.group, r.value) == ("Z4", 2)
    r = residue_at(witt_closed_form(pretzel(21, 13, -17, -15, 12)), 2549)
    assert (r.group, r.value) == ("Z2xZ2", (1, 0))
    for p in (2, 3, 5, 7, 13):
        assert residue_at(ZERO, p).is_zero()


def test_residue_groups_and_encoding():
    assert residue_at(W(2), 2) == ResidueClass(2, "Z2", 1)
    assert residue_at(W(2, 6), 2) == ResidueClass(2, "Z2", 0)
    # 2 is a non-residue mod 5
    assert residue_at(W(10), 5) == ResidueClass(5, "Z2xZ2", (0, 1))
    assert residue_at(W(5, 20), 5) == ResidueClass(5, "Z2xZ2", (0, 0))
    assert residue_at(W(-7), 7) == ResidueClass(7, "Z4", 3)
    assert residue_at(W(3), 5).is_zero()


def test_residue_rejects_composite():
    with pytest.raises(NotPrime):
        residue_at(W(6), 6)


def test_residue_json():
    assert residue_at(W(10), 5).to_json() == {"p": 5, "group": "Z2xZ2", "value": [0, 1]}
    assert residue_at(W(-7), 7).to_json() == {"p": 7, "group": "Z4", "value": 3}


def test_equals_examples():
    assert equals(W(1, 1), W(2, 2))
    assert not equals(W(2, 3), W(1, 6))
    w = W(6, 42, -35, -5)
    assert equals(w, w)


def test_order_examples():
    assert order(ZERO) == 1
    assert order(W(1)) == math.inf
    total = add(
        witt_closed_form(pretzel(21, 13, -17, -15, 12)),
        add(witt_closed_form(pretzel(-3, -3, -7, 5, 2)), witt_closed_form(pretzel(-3, -5, 7, 9, 6))),
    )
    assert order(total) == 4


def test_order_two_and_four():
    assert order(W(5, -1)) == 2
    assert order(W(3, -1)) == 4
    assert order(W(3, 3, -1, -1)) == 2


def test_local_profile_examples():
    assert local_profile(ZERO).signature == 0 and local_profile(ZERO).residues == {}
    lp = local_profile(W(-3, -5, 2, 30))
    assert lp.signature == 0 and lp.residues == {} and lp.is_zero()
    lp = local_profile(W(7))
    assert lp.signature == 1
    assert lp.residues == {7: ResidueClass(7, "Z4", 1)}


# --- W(F_p) against brute-force Witt equivalence ---------------------------


def _lift(u, p):
    """A square-free integer q with p*q square-free and q = u mod p."""
    q = u
    while q == 0 or q % p == 0 or squarefree_part(q) != q:
        q += p
    return q


def _encoded(units, p):
    total = zero_residue(p)
    for u in units:
        total = total + residue_at(W(p * _lift(u, p)), p)
    return total


@pytest.mark.parametrize("p", [3, 5, 7, 11, 13])
def test_residue_groups_match_brute_force_witt_equivalence(p):
    # every unit form up to dimension 2, plus forms built from the two square
    # classes {1, n} up to dimension 4
    n = next(x for x in range(2, p) if pow(x, (p - 1) // 2, p) != 1)
    small = {f for d in range(3) for f in itertools.combinations_with_replacement(range(1, p), d)}
    small |= {f for d in range(5) for f in itertools.combinations_with_replacement((1, n), d)}
    small = sorted(small)
    enc = {f: _encoded(f, p) for f in small}
    for f1, f2 in itertools.combinations(small, 2):
        if len(f1) + len(f2) > 4:
            continue
        assert (enc[f1] == enc[f2]) == witt_equivalent_mod_p(f1, f2, p), (f1, f2)


@pytest.mark.parametrize("p", [3, 5, 7, 11, 13])
def test_residue_addition_table(p):
    for a, b in itertools.product(range(1, p), repeat=2):
        s = _encoded((a,), p) + _encoded((b,), p)
        assert s == _encoded((a, b), p)
        assert (s.is_zero()) == witt_equivalent_mod_p((a, b), (), p)


def test_p_3_mod_4_four_generators_vanish():
    for p in (3, 7, 11, 19, 23):
        assert residue_at(W(p, p, p, p), p).is_zero()
        assert not residue_at(W(p, p), p).is_zero()


# --- properties ------------------------------------------------------------


@given(classes, classes, primes)
def test_residue_is_additive(w1, w2, p):
    assert residue_at(add(w1, w2), p) == residue_at(w1, p) + residue_at(w2, p)


@given(classes, primes)
def test_residue_of_negation(w, p):
    assert residue_at(negate(w), p) == -residue_at(w, p)


@given(classes)
def test_w_minus_w_has_order_one(w):
    assert order(add(w, negate(w))) == 1
    assert is_zero(w + (-w))


@given(classes, classes, classes)
def test_equals_is_an_equivalence(a, b, c):
    assert equals(a, a)
    assert equals(a, b) == equals(b, a)
    if equals(a, b) and equals(b, c):
        assert equals(a, c)


@given(classes, entries)
def test_adding_hyperbolic_pair_changes_nothing(w, a):
    assert equals(w, add(w, from_diagonal((a, -a))))


@given(entries, entries)
def test_sum_relation(a, b):
    # <a> + <b> = <a+b> + <ab(a+b)> whenever a + b != 0
    if a + b == 0:
        return
    assert equals(W(a, b), W(a + b, a * b * (a + b)))


@given(st.lists(entries, min_size=1, max_size=6), st.lists(st.integers(1, 30), min_size=1, max_size=6))
def test_square_scaling_is_invisible(gens, squares):
    scaled = [g * squares[i % len(squares)] ** 2 for i, g in enumerate(gens)]
    assert equals(W(*gens), W(*scaled))


@settings(max_examples=200)
@given(classes)
def test_order_is_consistent_with_profile(w):
    o = order(w)
    lp = local_profile(w)
    if lp.signature:
        assert o == math.inf
    elif not lp.residues:
        assert o == 1 and is_zero(w)
    else:
        assert o in (2, 4)
        assert is_zero(add(add(w, w), add(w, w)))
        assert (o == 2) == is_zero(add(w, w))


@given(classes)
def test_residues_only_at_relevant_primes(w):
    support = set(relevant_primes(w))
    assert set(local_profile(w).residues) <= support
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23):
        if p not in support:
            assert residue_at(w, p).is_zero()


@given(classes)
def test_canonical_form_invariants(w):
    g = w.generators
    assert all(a != 0 and squarefree_part(a) == a for a in g)
    assert not any(-a in g for a in g)
    assert list(g) == sorted(g, key=lambda a: (abs(a), a < 0))
    assert isinstance(w, WittClass)
