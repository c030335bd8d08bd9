import itertools

import pytest

from primpoints.errors import NotTransitive, ParseError
from primpoints.permact import (
    PermGroup,
    alternating_group,
    compose,
    cycles_literal,
    cyclic_group,
    dihedral_group,
    elements,
    group_order,
    is_primitive_action,
    is_transitive,
    minimal_blocks,
    parse_cycles,
    symmetric_group,
    transitive_corpus,
    verify_stabilizer_lemma,
)


def test_parse_cycles():
    assert parse_cycles("(0 1 2 3)(4 5)") == (1, 2, 3, 0, 5, 4)
    assert parse_cycles("(0,2)", degree=4) == (2, 1, 0, 3)
    assert parse_cycles("()", degree=3) == (0, 1, 2)
    with pytest.raises(ParseError):
        parse_cycles("(0 1")
    with pytest.raises(ParseError):
        parse_cycles("(0 0 1)")
    perm = parse_cycles("(0 3)(1 4 2)")
    assert parse_cycles(cycles_literal(perm)) == perm


def test_compose_convention():
    # apply right, then left
    a = parse_cycles("(0 1)", degree=3)
    b = parse_cycles("(1 2)", degree=3)
    assert compose(a, b) == (1, 2, 0)  # b first: 0->0->1, 1->2->2, 2->1->0


def test_is_transitive():
    assert is_transitive(cyclic_group(4))
    assert not is_transitive(PermGroup.make(3, [(1, 0, 2)]))
    assert is_transitive(symmetric_group(4))


def all_partitions(items):
    """Every set partition of items (Bell-number many)."""
    items = list(items)
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for part in all_partitions(rest):
        for i in range(len(part)):
            yield part[:i] + [[first] + part[i]] + part[i + 1 :]
        yield [[first]] + part


def primitive_by_exhaustion(G):
    """Oracle: scan every nontrivial partition for G-stability."""
    n = G.degree
    gens = G.generators
    for part in all_partitions(range(n)):
        if len(part) in (1, n):
            continue
        blocks = [frozenset(b) for b in part]
        bset = set(blocks)
        if all(frozenset(g[x] for x in b) in bset for g in gens for b in blocks):
            return False
    return True


def test_minimal_blocks_examples():
    d4 = dihedral_group(4)
    blocks = minimal_blocks(d4)
    assert blocks is not None
    assert set(blocks.partition) == {frozenset({0, 2}), frozenset({1, 3})}
    assert not primitive_by_exhaustion(d4)

    a4 = alternating_group(4)
    assert minimal_blocks(a4) is None
    assert primitive_by_exhaustion(a4)

    c6 = cyclic_group(6)
    sys6 = minimal_blocks(c6)
    assert sys6 is not None and sys6.block_size in (2, 3)

    with pytest.raises(NotTransitive):
        minimal_blocks(PermGroup.make(3, [(1, 0, 2)]))


def test_is_primitive_examples():
    assert is_primitive_action(symmetric_group(5))
    assert not is_primitive_action(cyclic_group(4))
    assert is_primitive_action(symmetric_group(2))


def test_corpus_counts_and_structure():
    corpus = transitive_corpus(7)
    by_degree = {}
    for name, G, order in corpus:
        by_degree.setdefault(G.degree, []).append((name, G, order))
    assert {d: len(v) for d, v in by_degree.items()} == {
        2: 1,
        3: 2,
        4: 5,
        5: 5,
        6: 16,
        7: 7,
    }
    # distinct as subgroups; same-order groups distinguished by invariants
    for d, groups in by_degree.items():
        sets = [frozenset(elements(G)) for _, G, _ in groups]
        assert len(set(sets)) == len(sets)


def test_corpus_primitivity_matches_exhaustion():
    for name, G, order in transitive_corpus(7):
        if order <= 5040:
            assert is_primitive_action(G) == primitive_by_exhaustion(G), name


def test_stabilizer_lemma_on_corpus():
    for name, G, _ in transitive_corpus(7):
        assert verify_stabilizer_lemma(G), name


def test_primitive_subgroup_implies_primitive_group():
    corpus = transitive_corpus(6)
    sets = {name: frozenset(elements(G)) for name, G, _ in corpus}
    groups = {name: G for name, G, _ in corpus}
    for a, b in itertools.permutations(sets, 2):
        ga, gb = groups[a], groups[b]
        if ga.degree != gb.degree or not sets[a] < sets[b]:
            continue
        if is_primitive_action(ga):
            assert is_primitive_action(gb), (a, b)


def subgroups_containing(n, seed_gens):
    """All subgroups of S_n containing the given seed, by closure extension."""
    base = frozenset(elements(PermGroup.make(n, seed_gens)))
    all_elems = sorted(elements(symmetric_group(n)))
    seen = {base: list(seed_gens)}
    frontier = [base]
    while frontier:
        new = []
        for sub in frontier:
            gens = seen[sub]
            for g in all_elems:
                if g in sub:
                    continue
                grown = frozenset(
                    elements(PermGroup.make(n, list(gens) + [g]))
                )
                if grown not in seen:
                    seen[grown] = list(gens) + [g]
                    new.append(grown)
        frontier = new
    return list(seen)


def conjugacy_classes_of_subgroups(n, subs):
    sym = sorted(elements(symmetric_group(n)))
    classes = []
    seen = set()
    for sub in subs:
        if sub in seen:
            continue
        cls = set()
        for g in sym:
            gi = tuple(sorted(range(n), key=lambda i: g[i]))
            conj = frozenset(compose(compose(g, h), gi) for h in sub)
            cls.add(conj)
        seen.update(cls)
        classes.append(sub)
    return classes


@pytest.mark.parametrize("n,expected", [(2, 1), (3, 2), (4, 5)])
def test_corpus_complete_small_degrees(n, expected):
    """Exhaustive check: the corpus lists every transitive class for n <= 4."""
    subs = subgroups_containing(n, [])
    transitive_subs = [
        s for s in subs if len({g[0] for g in s}) == n and len(s) >= n
    ]
    classes = conjugacy_classes_of_subgroups(n, transitive_subs)
    assert len(classes) == expected
    corpus_orders = sorted(
        order for _, G, order in transitive_corpus(n) if G.degree == n
    )
    assert corpus_orders == sorted(len(c) for c in classes)


def test_corpus_complete_degree5():
    """Transitive subgroups of S5 all contain a 5-cycle; enumerate above it."""
    subs = subgroups_containing(5, [parse_cycles("(0 1 2 3 4)")])
    transitive_subs = [s for s in subs if len({g[0] for g in s}) == 5]
    classes = conjugacy_classes_of_subgroups(5, transitive_subs)
    assert sorted(len(c) for c in classes) == [5, 10, 20, 60, 120]
