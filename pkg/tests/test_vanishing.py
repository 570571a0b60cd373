import random
from fractions import Fraction
from itertools import product
from math import comb

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from hypersym.exactnum import Cyclo, omega_pow
from hypersym.hypermatrix import Hypermatrix, InvalidInputError, act, slice_form
from hypersym.sampling import (
    random_eigencomponent,
    random_hypermatrix,
    random_in_components,
    random_vector,
    vanishing_subspace_sample,
    without_symmetric_part,
)
from hypersym.symmetry import canonical_cycle, project_isotypic
from hypersym.vanishing import (
    DegenerateSystemError,
    DiagSystem,
    cayley_det_222,
    chern_top,
    diag_polynomial,
    diag_system,
    field_modulus,
    projective_points,
    reduce_mod_p,
    resultant_n2,
    root_image,
    star_condition,
    star_condition_ff,
    witness_n2,
    witness_search_ff,
)
from test_hypermatrix import alternating_333


def diagonal_222():
    return Hypermatrix.from_entries(2, 3, [1, 0, 0, 0, 0, 0, 0, 1])


def discriminant_oracle(F, axis):
    """Det of a 2x2x2 as the discriminant of det(x M_1 + y M_2), slicing along ``axis``."""

    def slab(k):
        return [[F.entry(*(idx[:axis] + (k,) + idx[axis:])) for idx in [(i, j) for j in (1, 2)]] for i in (1, 2)]

    A, B = slab(1), slab(2)

    def det2(m):
        return m[0][0] * m[1][1] - m[0][1] * m[1][0]

    a = det2(A)
    c = det2(B)
    mixed = [[A[i][j] + B[i][j] for j in range(2)] for i in range(2)]
    b = det2(mixed) - a - c
    return b * b - a * c * 4


def test_cayley_examples(example_A):
    assert cayley_det_222(example_A) == 1
    assert cayley_det_222(Hypermatrix.zeros(2, 3)) == 0
    assert cayley_det_222(diagonal_222()) == 1
    with pytest.raises(InvalidInputError):
        cayley_det_222(Hypermatrix.zeros(3, 3))


def test_cayley_matches_discriminant_oracle(rng):
    for _ in range(25):
        F = random_hypermatrix(rng, 2, 3, bound=30)
        for axis in range(3):
            assert cayley_det_222(F) == discriminant_oracle(F, axis)


def test_star_condition_examples(example_A, rng):
    D = alternating_333()
    for _ in range(5):
        assert star_condition(D, random_vector(rng, 3))
    assert not star_condition(example_A, (1, 1))
    assert star_condition(Hypermatrix.zeros(2, 4), (3, 5))
    assert star_condition(example_A, (0, 0))


def test_diag_system_examples(example_A):
    S = diag_system(example_A)
    assert S.polys[0] == {(1, 1): -1, (0, 2): 1}
    assert S.polys[1] == {(2, 0): 1, (1, 1): -1}
    assert diag_system(Hypermatrix.zeros(2, 3)).is_zero()
    S = diag_system(diagonal_222())
    assert S.polys == [{(2, 0): 1}, {(0, 2): 1}]


def test_diag_system_evaluates_to_slices(rng):
    F = random_hypermatrix(rng, 3, 4, bound=20)
    S = diag_system(F)
    v = random_vector(rng, 3)
    assert S.evaluate(v) == slice_form(F, v, 4)


@pytest.mark.parametrize("n, d", [(2, 3), (3, 3), (2, 4), (3, 4)])
def test_euler_relation(n, d):
    rng = random.Random(n * 10 + d)
    for _ in range(25):
        F = random_hypermatrix(rng, n, d, bound=20)
        S = diag_system(F)
        assert S.euler_combination() == diag_polynomial(F)
        G = without_symmetric_part(F)
        assert diag_system(G).euler_combination() == {}


def test_resultant_examples(example_A):
    assert resultant_n2(diag_system(example_A)) == 0
    assert resultant_n2(diag_system(diagonal_222())) == 1
    g = {(2, 0): Cyclo.rational(3, 2), (1, 1): Cyclo.rational(3, -1), (0, 2): Cyclo.rational(3, 5)}
    assert resultant_n2(DiagSystem(2, 2, 3, [g, dict(g)])) == 0
    with pytest.raises(DegenerateSystemError):
        resultant_n2(diag_system(Hypermatrix.zeros(2, 3)))


def test_resultant_matches_sympy(rng):
    t = sympy.Symbol("t")
    for deg in (2, 3):
        for _ in range(10):
            cf = [Fraction(rng.randint(-9, 9), rng.randint(1, 5)) for _ in range(deg + 1)]
            cg = [Fraction(rng.randint(-9, 9), rng.randint(1, 5)) for _ in range(deg + 1)]
            cf[0] = cf[0] or Fraction(1)
            cg[0] = cg[0] or Fraction(1)
            polys = [
                {(deg - k, k): Cyclo.rational(3, c) for k, c in enumerate(cs) if c}
                for cs in (cf, cg)
            ]
            ours = resultant_n2(DiagSystem(2, deg, 3, polys))
            f = sum(sympy.Rational(c.numerator, c.denominator) * t ** (deg - k) for k, c in enumerate(cf))
            g = sum(sympy.Rational(c.numerator, c.denominator) * t ** (deg - k) for k, c in enumerate(cg))
            expected = sympy.resultant(f, g, t)
            assert ours == Fraction(int(sympy.fraction(expected)[0]), int(sympy.fraction(expected)[1]))


def test_witness_n2(example_A):
    rep = witness_n2(example_A)
    assert rep.mode == "exact" and rep.status == "found"
    assert all(c.is_zero() for c in diag_system(example_A).evaluate(rep.witness))
    assert witness_n2(diagonal_222()).status == "none"


def test_exact_witnesses_satisfy_star_on_vanishing_subspace():
    rng = random.Random(5)
    found = 0
    for d in (3, 4):
        for _ in range(6):
            m = rng.randrange(1, d)
            F = vanishing_subspace_sample(rng, 2, d, m, bound=20)
            rep = witness_n2(F)
            assert rep.status in {"found", "exists in an extension field"}
            if rep.status == "found":
                found += 1
                assert any(not c.is_zero() for c in rep.witness)
                assert star_condition(F, rep.witness)
    assert found > 0


def test_root_image():
    assert root_image(3, 7) == 2
    assert root_image(4, 13) == 5
    assert root_image(1, 5) == 1


def test_projective_points():
    pts = projective_points(2, 7).tolist()
    assert pts[:3] == [[0, 1], [1, 0], [1, 1]]
    assert len(pts) == 8
    assert len(projective_points(3, 5)) == 31


def test_witness_search_examples(example_A):
    rep = witness_search_ff(example_A, 7)
    assert rep.mode == "evidence-ff(7)"
    assert rep.witness == (1, 1)
    assert witness_search_ff(diagonal_222(), 7).witness is None
    assert witness_search_ff(Hypermatrix.zeros(2, 3), 7).witness == (0, 1)
    assert witness_search_ff(Hypermatrix.zeros(3, 3), 13).witness == (0, 0, 1)


def test_witness_search_preconditions(example_A):
    with pytest.raises(InvalidInputError):
        witness_search_ff(example_A, 5)  # 5 != 1 mod 3
    with pytest.raises(InvalidInputError):
        witness_search_ff(example_A, 9)
    F = example_A.scale(Fraction(1, 7))
    with pytest.raises(InvalidInputError):
        witness_search_ff(F, 7)


def brute_ff_witness(F, p):
    """Oracle: evaluate the reduced G_i at every normalized point with plain integers."""
    w = root_image(F.root_order, p)

    def red(c):
        total = 0
        for j, a in enumerate(c.coeffs):
            total += a.numerator * pow(a.denominator, -1, p) * pow(w, j, p)
        return total % p

    S = diag_system(F)
    reduced = [{e: red(c) for e, c in g.items()} for g in S.polys]
    candidates = sorted(
        pt for pt in product(range(p), repeat=F.n) if any(pt) and pt[next(i for i, x in enumerate(pt) if x)] == 1
    )
    for pt in candidates:
        vals = []
        for g in reduced:
            acc = 0
            for e, c in g.items():
                term = c
                for x, k in zip(pt, e):
                    term = term * pow(x, k, p)
                acc += term
            vals.append(acc % p)
        if not any(vals):
            return pt
    return None


@pytest.mark.parametrize("n, d, p", [(2, 3, 7), (3, 3, 7), (3, 3, 13), (2, 4, 5), (3, 4, 13)])
def test_witness_search_matches_brute_force(n, d, p):
    rng = random.Random(p + n + d)
    for _ in range(6):
        m = rng.randrange(1, d)
        F = vanishing_subspace_sample(rng, n, d, m, bound=20, avoid=p)
        assert witness_search_ff(F, p).witness == brute_ff_witness(F, p)


def gf_point_value(F, p, k, point):
    """Oracle: slices of the reduced system at a GF(p^k) point via sympy.galoistools (high-first lists)."""
    from sympy.polys.domains import ZZ
    from sympy.polys.galoistools import gf_add, gf_mul, gf_rem

    mod = list(field_modulus(p, k))[::-1]
    Fp = reduce_mod_p(F, p)
    coords = [gf_rem([int(c) for c in reversed(x)], mod, p, ZZ) for x in point]
    out = []
    for slot in range(F.d):
        for j in range(F.n):
            acc = []
            for idx in product(range(F.n), repeat=F.d):
                if idx[slot] != j or not Fp[idx]:
                    continue
                term = [int(Fp[idx])]
                for s, i in enumerate(idx):
                    if s != slot:
                        term = gf_rem(gf_mul(term, coords[i], p, ZZ), mod, p, ZZ)
                acc = gf_add(acc, term, p, ZZ)
            out.append(acc)
    return out


def test_extension_field_tables_form_a_field():
    for p, k in [(7, 2), (7, 3), (5, 2), (13, 2)]:
        mod = field_modulus(p, k)
        assert len(mod) == k + 1 and mod[-1] == 1
        # t generates a subgroup whose order divides p^k - 1, and t^(p^k) = t
        from sympy.polys.domains import ZZ
        from sympy.polys.galoistools import gf_pow_mod

        assert gf_pow_mod([1, 0], p**k, list(mod)[::-1], p, ZZ) == [1, 0]
    assert field_modulus(7, 2) == (1, 0, 1)  # -1 is a non-residue mod 7


@pytest.mark.parametrize("n, d, p, k", [(2, 3, 7, 2), (3, 3, 7, 2), (2, 4, 5, 2)])
def test_extension_witness_matches_galoistools_oracle(n, d, p, k):
    rng = random.Random(n + d + p + k)
    for _ in range(3):
        F = vanishing_subspace_sample(rng, n, d, rng.randrange(1, d), bound=20, avoid=p)
        rep = witness_search_ff(F, p, degree=k)
        assert rep.mode == f"evidence-ff({p}^{k})"
        # every earlier point is a non-witness, the reported one is a witness in all slots
        codes = projective_points(n, p, k)
        for code in codes:
            point = [[(int(c) // p**j) % p for j in range(k)] for c in code]
            vals = gf_point_value(F, p, k, point)
            last = vals[(d - 1) * n :]
            if not any(last):
                assert rep.witness == tuple(tuple(x) for x in point)
                assert not any(vals) and rep.details["all_slots_zero"]
                break
        else:
            assert rep.witness is None


def test_prime_field_witness_lifts_to_extension():
    rng = random.Random(11)
    F = random_eigencomponent(rng, 3, 3, 1, bound=20, avoid=7)
    while witness_search_ff(F, 7).witness is None:
        F = random_eigencomponent(rng, 3, 3, 1, bound=20, avoid=7)
    rep = witness_search_ff(F, 7)
    lifted = [(x, 0) for x in rep.witness]
    assert star_condition_ff(reduce_mod_p(F, 7), lifted, 7, degree=2)


def test_missing_prime_field_witnesses_appear_in_a_cubic_extension():
    """Three zeros counted with multiplicity: a Frobenius-stable set lives over GF(p^k), k <= 3."""
    rng = random.Random(2)
    missed = 0
    for _ in range(15):
        F = vanishing_subspace_sample(rng, 3, 3, rng.randrange(1, 3), bound=100, avoid=7)
        if witness_search_ff(F, 7).witness is not None:
            continue
        missed += 1
        reps = [witness_search_ff(F, 7, degree=k) for k in (2, 3)]
        found = [r for r in reps if r.witness is not None]
        assert found and all(r.details["all_slots_zero"] for r in found)
    assert missed > 0


@pytest.mark.parametrize("n, d, p", [(3, 3, 7), (3, 4, 13), (2, 5, 11)])
def test_slice_propagation_for_eigencomponents(n, d, p):
    """sigma F = w^m F and a vanishing last slice force every slice to vanish."""
    rng = random.Random(17 * d + p)
    hits = 0
    for _ in range(8):
        m = rng.randrange(1, d)
        F = random_eigencomponent(rng, n, d, m, bound=20, avoid=p)
        assert act(canonical_cycle(d), F) == F.scale(omega_pow(d, m))
        rep = witness_search_ff(F, p)
        if rep.witness is not None:
            hits += 1
            assert star_condition_ff(reduce_mod_p(F, p), rep.witness, p)
            assert rep.details["all_slots_zero"]
    assert hits > 0


def test_prior_result_star_holds_everywhere(rng):
    shapes = [(2, 2), (2, 1, 1), (1, 1, 1, 1)]
    for n in (2, 3):
        F = random_in_components(rng, n, 4, shapes, bound=20)
        for _ in range(10):
            assert star_condition(F, random_vector(rng, n))


def test_star_fails_generically_on_full_standard_component(rng):
    F = project_isotypic(random_hypermatrix(rng, 3, 3), (2, 1))
    assert not star_condition(F, random_vector(rng, 3))


def chern_closed_form(n, d):
    return sum((-1) ** (n - 1 - i) * comb(n, i) * (d - 1) ** i * d ** (n - 1 - i) for i in range(n))


def test_chern_examples():
    assert chern_top(2, 3) == 1
    assert chern_top(4, 2) == 0
    assert chern_top(3, 2) == 1


@pytest.mark.parametrize("n", range(1, 13))
@pytest.mark.parametrize("d", range(0, 9))
def test_chern_matches_closed_form(n, d):
    assert chern_top(n, d) == chern_closed_form(n, d)


def test_chern_parity_and_positivity():
    assert [chern_top(n, 2) for n in range(2, 13)] == [n % 2 for n in range(2, 13)]
    assert all(chern_top(n, d) > 0 for n in range(2, 11) for d in range(3, 9))


def test_chern_counts_zeros_of_binary_system():
    # for n = 2 the number of common roots of G_1, G_2 (with multiplicity) is c_1 = d - 2
    assert [chern_top(2, d) for d in range(3, 9)] == [d - 2 for d in range(3, 9)]


@settings(max_examples=20, deadline=None)
@given(st.sampled_from([3, 4]), st.integers(0, 10**6))
def test_resultant_vanishes_off_symmetric_part(d, seed):
    rng = random.Random(seed)
    F = without_symmetric_part(random_hypermatrix(rng, 2, d))
    S = diag_system(F)
    if S.is_zero():
        return
    assert resultant_n2(S) == 0
