import pytest

from pathmajority import GeneratorSpec, NavIndex, generate, oracle_majorities, oracle_minority
from pathmajority.oracle import SHAPES, SplitMix64, generate_multi, oracle_tally


def test_splitmix_reference_values():
    # reference outputs of SplitMix64 seeded with 0
    rng = SplitMix64(0)
    assert [rng.next_u64() for _ in range(3)] == [
        0xE220A8397B1DCDAF,
        0x6E789E6AA1B965F4,
        0x06C45D188009454F,
    ]


def test_f1_oracle(f1):
    assert oracle_majorities(f1, 5, 7, "0.35") == [1, 2]
    assert oracle_majorities(f1, 5, 7, "1/2") == []
    assert oracle_minority(f1, 5, 7, "1/5") == 3
    for u in f1.nodes():
        assert oracle_majorities(f1, u, u, "0.99") == [f1.original(f1.label[u])]


def test_tally_sums_to_length(f1):
    for u in f1.nodes():
        for v in f1.nodes():
            tally, length = oracle_tally(f1, u, v)
            assert sum(tally.values()) == length
            assert len(oracle_majorities(f1, u, v, "0.3")) <= 3


def test_generator_shapes():
    chain = generate(GeneratorSpec("chain", 5, 2, 1))
    assert chain.parent[1:] == [0, 1, 2, 3, 4]
    assert chain.label == generate(GeneratorSpec("chain", 5, 2, 1)).label
    cb = NavIndex(generate(GeneratorSpec("complete-binary", 7, 3)))
    assert cb.depth[1:] == [0, 1, 1, 2, 2, 2, 2]
    broom = generate(GeneratorSpec("broom", 10, 3))
    assert len(broom.children[5]) == 5
    cat = generate(GeneratorSpec("caterpillar", 10, 3, 4))
    assert all(cat.parent[i] <= 5 for i in range(6, 11))


@pytest.mark.parametrize("shape", SHAPES)
def test_generator_is_deterministic(shape):
    a = generate(GeneratorSpec(shape, 300, 9, 42))
    b = generate(GeneratorSpec(shape, 300, 9, 42))
    assert a.parent == b.parent and a.label == b.label and a.original_labels == b.original_labels
    assert generate_multi(GeneratorSpec(shape, 50, 4, 1)) == generate_multi(GeneratorSpec(shape, 50, 4, 1))


@pytest.mark.parametrize("spec", [GeneratorSpec("star", 5, 2), GeneratorSpec("chain", 0, 2), GeneratorSpec("chain", 4, 0)])
def test_generator_rejects_bad_specs(spec):
    with pytest.raises(ValueError):
        generate(spec)
