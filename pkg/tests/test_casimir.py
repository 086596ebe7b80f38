import pytest

from ospbi import pbw
from ospbi.casimir import (
    SubsetIndex,
    all_subsets,
    canonical_path,
    casimir_along,
    centralizer_residuals,
    contiguous_casimir,
    explicit_casimir,
    generate_paths,
    intermediate_casimir,
    path_consistency,
    simple_embedding_casimir,
    subset,
)
from ospbi.perm import Permutation
from ospbi.rmatrix import apply_coaction, universal_R
from ospbi.tensor import coproduct, coproduct_iter, embed, evaluate, tensor_product, unit

# Frozen from the first verified run; C13 agrees with both conjugations.
C13_TEXT = (
    "P # 1 # P + 4*P # 1 # H*P - 16*P # 1 # Fm*Fp*P - 16*Fp*P # P # Fm"
    " + 4*H*P # 1 # P + 16*Fm*P # P # Fp - 16*Fm*Fp*P # 1 # P"
)


def test_subset_index_validation():
    assert subset(4, 3, 1).elements == (1, 3)
    with pytest.raises(ValueError):
        subset(3, 1, 1)
    with pytest.raises(ValueError):
        subset(3, 4)
    with pytest.raises(ValueError):
        subset(3, 1) | subset(4, 1)


def test_subset_set_algebra():
    a, b = subset(4, 1, 2), subset(4, 2, 3)
    assert (a | b).elements == (1, 2, 3)
    assert (a & b).elements == (2,)
    assert (a - b).elements == (1,)
    assert (a ^ b).elements == (1, 3)
    assert str(a ^ b) == "{1,3}"
    assert subset(4, 2, 3, 4).is_contiguous and not subset(4, 1, 3).is_contiguous


@pytest.mark.parametrize("n, count", [(2, 3), (3, 7), (4, 15)])
def test_all_subsets(n, count):
    subs = all_subsets(n)
    assert len(subs) == count
    assert [s.elements for s in subs] == sorted(s.elements for s in subs)
    assert len(all_subsets(n, include_empty=True)) == count + 1


def test_contiguous_examples():
    c = pbw.casimir()
    assert contiguous_casimir(1, 2, 3) == tensor_product(coproduct(c), unit(1))
    assert contiguous_casimir(2, 2, 3) == embed(c, 2, 3)
    assert contiguous_casimir(1, 3, 3) == coproduct_iter(2, c)
    assert intermediate_casimir(subset(3, 2, 3)) == tensor_product(unit(1), coproduct(c))
    with pytest.raises(ValueError):
        contiguous_casimir(2, 1, 3)


def test_empty_subset_is_unit():
    assert intermediate_casimir(SubsetIndex(3)) == unit(3)


def test_c13_golden_and_triple_agreement():
    A = subset(3, 1, 3)
    c13 = intermediate_casimir(A)
    assert str(c13) == C13_TEXT
    assert evaluate(C13_TEXT) == c13
    bar = simple_embedding_casimir(A)
    R12, R23 = universal_R(3, 1, 2), universal_R(3, 2, 3)
    R32 = universal_R(3, 3, 2)
    assert c13 == R12 * bar * R12
    assert c13 == R32 * bar * R32
    assert c13 == R23 * bar * R23
    assert c13 == explicit_casimir(A)


def test_explicit_examples():
    c = pbw.casimir()
    for i in (1, 2, 3):
        assert explicit_casimir(subset(3, i)) == embed(c, i, 3)
    assert explicit_casimir(subset(3, 1, 2, 3)) == coproduct_iter(2, c)
    with pytest.raises(ValueError):
        explicit_casimir(SubsetIndex(3))


def test_c13_explicit_text():
    # F+-_13 = F_1 P_2 P_3 + F_3, P_13 = P_1 P_3
    fp = evaluate("Fp#P#P + 1#1#Fp")
    fm = evaluate("Fm#P#P + 1#1#Fm")
    expected = (8 * fp.commutator(fm) + unit(3)) * evaluate("P#1#P")
    assert intermediate_casimir(subset(3, 1, 3)) == expected


def test_centralizer_c13_vs_naive_embedding():
    A = subset(3, 1, 3)
    assert centralizer_residuals(intermediate_casimir(A), 3).ok
    naive = centralizer_residuals(simple_embedding_casimir(A), 3)
    assert not naive.ok
    assert {c.name for c in naive.failures()} >= {"[Delta^(2)(Fp), X]", "[Delta^(2)(Fm), X]"}
    assert centralizer_residuals(unit(3), 3).ok
    with pytest.raises(ValueError):
        centralizer_residuals(unit(2), 3)


@pytest.mark.parametrize("n", [3, 4])
def test_every_casimir_centralizes(n):
    for A in all_subsets(n):
        report = centralizer_residuals(intermediate_casimir(A), n)
        assert report.ok, (str(A), report.format())


@pytest.mark.parametrize("n", [3, 4])
def test_explicit_equals_intermediate(n):
    for A in all_subsets(n):
        assert explicit_casimir(A) == intermediate_casimir(A), str(A)


def test_c123_commutes_with_c13():
    c123 = intermediate_casimir(subset(3, 1, 2, 3))
    assert c123.commutator(intermediate_casimir(subset(3, 1, 3))).is_zero


@pytest.mark.parametrize("n", [3, 4])
def test_total_casimir_commutes_with_all(n):
    total = intermediate_casimir(SubsetIndex(n, range(1, n + 1)))
    assert total == coproduct_iter(n - 1, pbw.casimir())
    for B in all_subsets(n):
        assert total.commutator(intermediate_casimir(B)).is_zero


def test_singletons_are_embeddings():
    for n in (3, 4):
        for i in range(1, n + 1):
            assert intermediate_casimir(subset(n, i)) == embed(pbw.casimir(), i, n)


def test_c13_from_coactions():
    d = coproduct(pbw.casimir())
    c13 = intermediate_casimir(subset(3, 1, 3))
    assert apply_coaction(d, 2, "hat") == c13
    assert apply_coaction(d, 1, "check") == c13


def test_canonical_path():
    K, s = canonical_path(subset(4, 1, 3, 4))
    assert K.elements == (1, 2, 3)
    assert s.word == (2, 3)


def test_paths_example_13_at_n3():
    A = subset(3, 1, 3)
    report = path_consistency(A, [(subset(3, 2, 3), (1,)), (subset(3, 1, 2), (2,))])
    assert report.ok and len(report) == 1


def test_paths_example_134_at_n4():
    A = subset(4, 1, 3, 4)
    report = path_consistency(A, [(subset(4, 1, 2, 3), (2, 3)), (subset(4, 2, 3, 4), (1,))])
    assert report.ok


def test_invariant_subset_is_fixed():
    K = subset(4, 2, 3, 4)
    c = intermediate_casimir(K)
    for word in [(2,), (3,), (2, 3, 2)]:
        assert casimir_along(K, word) == c
    assert path_consistency(K, [(K, ()), (K, (3,))]).ok


def test_path_contract_error():
    A = subset(4, 1, 3, 4)
    with pytest.raises(ValueError, match="sends"):
        path_consistency(A, [(subset(4, 1, 2, 3), (3, 2)), (subset(4, 2, 3, 4), (1,))])


@pytest.mark.parametrize("elements", [(1, 3), (1, 4), (2, 4), (1, 3, 4), (1, 2, 4)])
def test_generated_paths_agree(elements):
    A = SubsetIndex(4, elements)
    paths = generate_paths(A)
    assert len({(K.elements, s.word) for K, s in paths}) == len(paths) >= 2
    for K, s in paths:
        assert Permutation(4, s.word).apply_set(K.elements) == A.elements
    report = path_consistency(A, paths)
    assert report.ok, report.format()
