from math import comb

import pytest

from hypersym.combinat import dim_schur, partitions
from hypersym.dims import codims, dim_W, dim_Wi_standard, dimension_table
from hypersym.symmetry import subspace_rank


def test_dim_W_examples():
    assert dim_W((2, 1), 2) == 4
    assert dim_W((1, 1, 1), 2) == 0
    assert dim_W((3,), 2) == 4


def test_dim_Wi_standard_examples():
    assert dim_Wi_standard(2, 3) == 2
    assert dim_Wi_standard(2, 2) == 1
    assert dim_Wi_standard(3, 3) == 8
    with pytest.raises(ValueError):
        dim_Wi_standard(3, 1)


def test_codims_examples():
    assert codims(2, 3) == (6, 8)
    skew = sum(dim_W(lam, 2) for lam in partitions(3) if lam not in {(3,), (2, 1)})
    assert 2**3 - codims(2, 3)[0] == skew + dim_Wi_standard(2, 3) == 2
    assert 2**3 - codims(2, 3)[1] == skew == 0
    with pytest.raises(ValueError):
        codims(2, 2)


@pytest.mark.parametrize("d", range(1, 7))
@pytest.mark.parametrize("n", range(1, 7))
def test_dimensions_sum_to_full_space(n, d):
    table = dimension_table(n, d)
    assert table.total == n**d
    assert len(table.rows) == len(partitions(d))


@pytest.mark.parametrize("d", range(2, 9))
@pytest.mark.parametrize("n", range(1, 9))
def test_closed_form_matches_hook_content(n, d):
    assert dim_Wi_standard(n, d) == dim_schur((d - 1, 1), n)
    assert dim_W((d - 1, 1), n) == (d - 1) * dim_Wi_standard(n, d)


@pytest.mark.parametrize("d", range(3, 9))
@pytest.mark.parametrize("n", range(1, 9))
def test_codims_relate_to_decomposition(n, d):
    sym = dim_W((d,), n)
    std = dim_Wi_standard(n, d)
    assert codims(n, d) == (sym + (d - 2) * std, sym + (d - 1) * std)
    assert sym == comb(n + d - 1, d)


@pytest.mark.parametrize("n, d", [(2, 3), (3, 3), (2, 4), (3, 4), (2, 5), (4, 4)])
def test_three_way_agreement_with_exact_ranks(n, d):
    std = (d - 1, 1)
    for m in range(1, d):
        assert subspace_rank((std, m), n) == dim_schur(std, n) == dim_Wi_standard(n, d)


def test_table_json_and_text():
    t = dimension_table(2, 3)
    obj = t.to_json_obj()
    assert obj["total"] == 8
    assert obj["dim_Wi_standard"] == 2
    assert (obj["codim_theorem"], obj["codim_common"]) == (6, 8)
    assert [c["dim_W"] for c in obj["components"]] == [4, 4, 0]
    assert "total" in t.to_text()
    assert dimension_table(2, 2).codim_theorem is None
