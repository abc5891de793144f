import pytest

from finsplice import (
    ChainComplex,
    INDISC2,
    IntMatrix,
    NotAPoset,
    NotASubcomplex,
    PSEUDO_S1,
    PSEUDO_S1_DUP,
    SIERP,
    SimplicialComplex,
    all_groups,
    build_pipeline,
    chain_complex,
    cochain,
    decompose,
    is_subcomplex,
    order_complex,
    relative_chain_complex,
    specialisation_preorder,
    zero_complex,
)


@pytest.fixture(scope="module")
def circle_complex():
    return order_complex(specialisation_preorder(PSEUDO_S1), relation="strict")


@pytest.fixture(scope="module")
def dup_pipeline():
    return build_pipeline(PSEUDO_S1_DUP)


def test_circle_order_complex(circle_complex):
    assert circle_complex.face_counts() == (4, 4)
    assert circle_complex.faces(1) == (("c", "a"), ("c", "b"), ("d", "a"), ("d", "b"))
    assert circle_complex.faces(2) == ()


def test_single_point_complex():
    preorder = specialisation_preorder(SIERP)
    sc = order_complex(preorder, points=("a",))
    assert sc.face_counts() == (1,)


def test_dup_full_complex(dup_pipeline):
    sc = dup_pipeline.ambient_complex
    assert sc.face_counts() == (5, 6)
    assert sc.faces(1) == (
        ("c", "a"), ("c", "b"), ("c'", "a"), ("c'", "b"), ("d", "a"), ("d", "b"),
    )


def test_order_complex_rejects_non_posets():
    with pytest.raises(NotAPoset) as info:
        order_complex(specialisation_preorder(INDISC2), relation="leq")
    assert info.value.witness == ("x", "y")


def test_subcomplex_examples(dup_pipeline):
    assert is_subcomplex(dup_pipeline.sub_complex, dup_pipeline.ambient_complex)
    assert is_subcomplex(dup_pipeline.ambient_complex, dup_pipeline.ambient_complex)
    sierp_complex = order_complex(specialisation_preorder(SIERP), relation="strict")
    circle = order_complex(specialisation_preorder(PSEUDO_S1), relation="strict")
    assert not is_subcomplex(circle, sierp_complex)


def test_circle_boundary_matrix(circle_complex):
    cc = chain_complex(circle_complex)
    assert cc.direction == "homological"
    assert cc.basis[0] == ("a", "b", "c", "d")
    assert cc.basis[1] == ("c,a", "c,b", "d,a", "d,b")
    assert cc.maps[0].to_lists() == [
        [1, 0, 1, 0],
        [0, 1, 0, 1],
        [-1, -1, 0, 0],
        [0, 0, -1, -1],
    ]


def test_single_vertex_chain_complex():
    sc = SimplicialComplex(("v",), ((("v",),),))
    cc = chain_complex(sc)
    assert cc.top_degree == 0
    assert cc.maps == ()


def test_edge_boundary():
    sc = SimplicialComplex(("a", "b"), ((("a",), ("b",)), (("a", "b"),)))
    cc = chain_complex(sc)
    assert cc.maps[0].to_lists() == [[-1], [1]]


def test_relative_complex_of_dup(dup_pipeline):
    rel = dup_pipeline.relative_chain
    assert rel.basis == (("c'",), ("c',a", "c',b"))
    assert rel.maps[0].to_lists() == [[-1, -1]]


def test_relative_of_self_is_zero(dup_pipeline):
    cc = dup_pipeline.ambient_chain
    assert relative_chain_complex(cc, cc) == zero_complex("homological")


def test_relative_of_empty_is_identity(dup_pipeline):
    cc = dup_pipeline.ambient_chain
    assert relative_chain_complex(cc, zero_complex("homological")) == cc


def test_relative_rejects_non_subcomplex(dup_pipeline):
    other = chain_complex(order_complex(specialisation_preorder(SIERP), relation="strict"))
    with pytest.raises(NotASubcomplex):
        relative_chain_complex(dup_pipeline.ambient_chain, other)


def test_cochain_of_relative(dup_pipeline):
    assert dup_pipeline.relative_cochain.maps[0].to_lists() == [[-1], [-1]]


def test_cochain_of_zero_complex():
    assert cochain(zero_complex("homological")) == zero_complex("cohomological")


def test_cochain_of_circle_is_transpose(circle_complex):
    cc = chain_complex(circle_complex)
    dual = cochain(cc)
    assert dual.maps[0] == cc.maps[0].transpose()


def test_compositions_are_zero(pipelines):
    for data in pipelines[:100]:
        for cc in (data.poset_chain, data.ambient_chain, data.relative_chain):
            for i in range(len(cc.maps) - 1):
                assert cc.maps[i].mul(cc.maps[i + 1]).is_zero()


def test_chain_complex_rejects_bad_composition():
    m = IntMatrix.from_rows([[1]])
    with pytest.raises(ValueError):
        ChainComplex("homological", (("x",), ("y",), ("z",)), (m, m))


def test_poset_part_is_subcomplex_everywhere(pipelines):
    for data in pipelines:
        assert is_subcomplex(data.sub_complex, data.ambient_complex)


def test_relation_choice_agrees_on_poset_part(corpus):
    spaces, _ = corpus
    for space in spaces[:100]:
        preorder = specialisation_preorder(space)
        reps = decompose(preorder).representatives
        assert order_complex(preorder, reps, relation="leq") == order_complex(
            preorder, reps, relation="strict"
        )


def test_euler_characteristic_matches_betti(pipelines):
    for data in pipelines[:60]:
        for sc, cc in (
            (data.poset_complex, data.poset_chain),
            (data.ambient_complex, data.ambient_chain),
        ):
            betti = sum((-1) ** k * g.rank for k, g in enumerate(all_groups(cc)))
            assert sc.euler_characteristic() == betti
