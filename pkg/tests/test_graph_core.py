import random
from fractions import Fraction

import pytest

from specmatch import (
    BiregularFamilySpec,
    ConstructionFailed,
    IndexOutOfRange,
    InvalidEdge,
    InvalidParameter,
    InvalidSpec,
    ParseError,
    bipartition,
    complement,
    complete_bipartite,
    complete_graph,
    connected_components,
    construct_biregular_family,
    construct_clique_apex,
    construct_join_exception,
    cycle_graph,
    degree_stats,
    empty_graph,
    from_edge_list,
    induced_subgraph,
    is_connected,
    isolated_count,
    join,
    make_family,
    parse_edge_list_text,
    parse_graph6,
    path_graph,
    to_edge_list_text,
    to_graph6,
)

from conftest import random_graph


def test_from_edge_list_path():
    g = from_edge_list(3, [(0, 1), (1, 2)])
    assert g.degrees() == [1, 2, 1]
    assert g.m == 2


def test_from_edge_list_single_vertex():
    g = from_edge_list(1, [])
    assert g.n == 1 and g.m == 0
    assert degree_stats(g) == (0, Fraction(0), 0)


def test_from_edge_list_dedups():
    g = from_edge_list(4, [(0, 1), (0, 1), (2, 3)])
    assert g.m == 2


def test_from_edge_list_rejects_self_loop():
    with pytest.raises(InvalidEdge):
        from_edge_list(3, [(1, 1)])


def test_from_edge_list_rejects_out_of_range():
    with pytest.raises(IndexOutOfRange):
        from_edge_list(3, [(0, 3)])


# --- graph6 ---------------------------------------------------------------


def test_graph6_k2():
    # 'A_' decodes by hand: n=2, single bit x01=1
    g = parse_graph6("A_")
    assert g.n == 2 and g.m == 1


def test_graph6_k1():
    g = parse_graph6("@")
    assert g.n == 1 and g.m == 0


def test_graph6_five_vertices_roundtrip():
    g = parse_graph6("D?{")
    assert g.n == 5
    assert to_graph6(g) == "D?{"


def test_graph6_header_stripped():
    assert parse_graph6(">>graph6<<A_").m == 1


def test_graph6_roundtrip_small_families():
    for g in (
        complete_graph(7),
        cycle_graph(9),
        path_graph(4),
        complete_bipartite(5, 2),
        empty_graph(3),
        construct_clique_apex(3),
    ):
        assert parse_graph6(to_graph6(g)) == g


def test_graph6_roundtrip_random_and_large():
    rng = random.Random(7)
    for n in (1, 2, 13, 62, 63, 100):
        g = random_graph(rng, n, 0.4)
        s = to_graph6(g)
        assert parse_graph6(s) == g
        # byte-identical re-encode
        assert to_graph6(parse_graph6(s)) == s


def test_graph6_bad_byte_offset():
    with pytest.raises(ParseError) as info:
        parse_graph6("D?\x20")
    assert info.value.offset == 2


def test_graph6_truncated():
    with pytest.raises(ParseError):
        parse_graph6("D?")


def test_graph6_trailing_garbage():
    with pytest.raises(ParseError):
        parse_graph6("A_?")


def test_graph6_nonzero_padding():
    # K2 body byte with a padding bit set: 0b110000 + 63 = 'o'
    with pytest.raises(ParseError):
        parse_graph6("Ao")


# --- constructions ---------------------------------------------------------


def test_complement_complete_is_empty():
    assert complement(complete_graph(4)) == empty_graph(4)


def test_complement_c5_is_five_cycle():
    gc = complement(cycle_graph(5))
    assert gc.degrees() == [2] * 5 and is_connected(gc)


def test_complement_involution():
    rng = random.Random(3)
    for _ in range(25):
        g = random_graph(rng, rng.randint(1, 12))
        assert complement(complement(g)) == g


def test_complement_of_clique_apex_is_star_plus_isolated():
    g = complement(construct_clique_apex(2))
    assert sorted(g.edges()) == [(2, 4), (3, 4)]
    assert isolated_count(g) == 2


def test_join_complete_bipartite():
    g = join(empty_graph(3), empty_graph(4))
    assert g.n == 7 and g.m == 12
    assert g == complete_bipartite(3, 4)


def test_join_edge_count_and_degrees():
    rng = random.Random(11)
    for _ in range(20):
        g1 = random_graph(rng, rng.randint(1, 6))
        g2 = random_graph(rng, rng.randint(1, 6))
        j = join(g1, g2)
        assert j.m == g1.m + g2.m + g1.n * g2.n
        for v in range(g1.n):
            assert j.degree(v) == g1.degree(v) + g2.n


def test_join_wheel_like():
    g = join(empty_graph(1), cycle_graph(4))
    assert g.m == 8


def test_induced_subgraph():
    assert induced_subgraph(complete_graph(5), [0, 1, 2]) == complete_graph(3)
    assert induced_subgraph(cycle_graph(5), [0, 1, 2]) == path_graph(3)
    g = random_graph(random.Random(5), 8)
    assert induced_subgraph(g, range(8)) == g


def test_induced_subgraph_bad_members():
    with pytest.raises(IndexOutOfRange):
        induced_subgraph(complete_graph(3), [0, 5])


def test_isolated_count():
    assert isolated_count(empty_graph(4)) == 4
    assert isolated_count(cycle_graph(5)) == 0
    star = complete_bipartite(1, 3)
    assert isolated_count(induced_subgraph(star, [1, 2, 3])) == 3


def test_degree_stats():
    assert degree_stats(cycle_graph(6)) == (2, Fraction(2), 2)
    assert degree_stats(complete_bipartite(1, 3)) == (1, Fraction(3, 2), 3)
    # hand count for the clique-plus-apex graph at t=2: degrees 4,4,3,3,2
    assert degree_stats(construct_clique_apex(2)) == (2, Fraction(16, 5), 4)


def test_connectivity_and_bipartition():
    assert is_connected(cycle_graph(5))
    assert bipartition(cycle_graph(5)) is None
    parts = bipartition(complete_bipartite(4, 3))
    assert parts is not None and sorted(map(len, parts)) == [3, 4]
    assert not is_connected(empty_graph(2))
    assert bipartition(empty_graph(2)) is not None
    assert len(connected_components(empty_graph(3))) == 3


def test_make_family():
    assert make_family("complete_bipartite", 4, 3).m == 12
    assert make_family("cycle", 5).degrees() == [2] * 5
    assert make_family("complete", 4).m == 6
    with pytest.raises(InvalidParameter):
        make_family("cycle", 2)
    with pytest.raises(InvalidParameter):
        make_family("moebius", 5)


# --- family constructors ----------------------------------------------------


def test_biregular_spec_complete_bipartite():
    g = construct_biregular_family(BiregularFamilySpec(3, 1, 3, 4))
    assert g == complete_bipartite(4, 3)


def test_biregular_spec_star():
    g = construct_biregular_family(BiregularFamilySpec(1, 2, 1, 3))
    # X = three leaves, Y = one hub
    assert g.degrees() == [1, 1, 1, 3]


def test_biregular_spec_needs_stitching():
    g = construct_biregular_family(BiregularFamilySpec(2, 2, 4, 3))
    assert g.n == 10 and g.m == 12
    assert is_connected(g)
    assert g.degrees() == [2] * 6 + [3] * 4


def test_biregular_spec_validation():
    with pytest.raises(InvalidSpec):
        BiregularFamilySpec(3, 1, 2, 4)  # y < delta
    with pytest.raises(InvalidSpec):
        BiregularFamilySpec(3, 1, 3, 5)  # degree sums disagree
    with pytest.raises(InvalidSpec):
        BiregularFamilySpec(3, 0, 3, 3)  # k must be positive


def test_join_exception_constructor():
    g = construct_join_exception(2, complete_graph(2))
    assert g.n == 5 and g.m == 7
    assert min(g.degrees()) == 2
    assert construct_join_exception(1, complete_graph(1)) == complete_bipartite(2, 1)
    assert construct_join_exception(3, empty_graph(3)) == complete_bipartite(4, 3)
    with pytest.raises(InvalidParameter):
        construct_join_exception(3, complete_graph(2))


def test_join_exception_violates_tutte_condition():
    for delta in range(1, 5):
        core = complete_graph(delta)
        g = construct_join_exception(delta, core)
        rest = induced_subgraph(g, range(delta + 1))
        assert isolated_count(rest) == delta + 1


def test_clique_apex():
    g2 = construct_clique_apex(2)
    assert (g2.n, g2.m) == (5, 8)
    g3 = construct_clique_apex(3)
    assert (g3.n, g3.m) == (7, 18)
    assert min(g3.degrees()) == 3
    with pytest.raises(InvalidParameter):
        construct_clique_apex(1)


# --- edge-list text ---------------------------------------------------------


def test_edge_list_roundtrip():
    g = construct_clique_apex(2)
    assert parse_edge_list_text(to_edge_list_text(g)) == g


def test_edge_list_comments():
    text = "# a triangle\n3 3\n0 1\n1 2 # last two\n0 2\n"
    assert parse_edge_list_text(text) == complete_graph(3)


def test_edge_list_count_mismatch():
    with pytest.raises(ParseError):
        parse_edge_list_text("2 2\n0 1\n")
