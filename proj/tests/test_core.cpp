#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "tempo/graph_io.hpp"
#include "tempo/rng.hpp"
#include "tempo/temporal_graph.hpp"
#include "test_util.hpp"

using namespace tempo;

TEST_CASE("construction and edge bookkeeping") {
    TemporalGraph g(4, false);
    CHECK(g.vertex_count() == 4);
    CHECK_FALSE(g.directed());
    CHECK(g.edge_count() == 0);

    g.add_edge(2, 0, {3, 1, 3});
    CHECK(g.edge_count() == 1);
    CHECK(g.has_edge(0, 2));
    CHECK(g.has_edge(2, 0));
    CHECK(g.labels(0, 2) == std::vector<Label>{1, 3});  // sorted, deduplicated
    CHECK(g.labels(2, 0) == std::vector<Label>{1, 3});
    CHECK(g.has_label(0, 2, 3));
    CHECK_FALSE(g.has_label(0, 2, 2));
    CHECK(g.labels(1, 3).empty());

    CHECK_THROWS_AS(g.add_edge(1, 1), std::invalid_argument);
    CHECK_THROWS_AS(g.add_label(0, 4, 1), std::out_of_range);
    CHECK_THROWS_AS(g.add_label(0, 1, 0), std::invalid_argument);
    CHECK_THROWS_AS(g.add_label(0, 1, -2), std::invalid_argument);
    CHECK_THROWS_AS(TemporalGraph(-1), std::invalid_argument);
}

TEST_CASE("directed graphs keep orientations apart") {
    TemporalGraph g(3, true);
    g.add_edge(0, 1, {1});
    CHECK(g.has_edge(0, 1));
    CHECK_FALSE(g.has_edge(1, 0));
    g.add_edge(1, 0, {2});
    CHECK(g.edge_count() == 2);
    auto edges = time_edges_sorted(g);
    REQUIRE(edges.size() == 2);  // one orientation per directed label
    CHECK(edges[0] == TimeEdge{0, 1, 1});
    CHECK(edges[1] == TimeEdge{1, 0, 2});
}

TEST_CASE("cost counts every label once") {
    TemporalGraph g(4, false);
    CHECK(cost(g) == 0);
    g.add_edge(0, 1, {1, 3});
    g.add_edge(1, 2, {3});
    g.add_edge(2, 3);
    CHECK(cost(g) == 3);

    auto k4 = testutil::complete_graph(4);
    Label next = 1;
    for (const auto& [edge, labels] : k4.edges()) k4.add_label(edge.first, edge.second, next++);
    CHECK(cost(k4) == 6);
}

TEST_CASE("slse detection") {
    TemporalGraph k3(3, false);
    k3.add_edge(0, 1, {1});
    k3.add_edge(1, 2, {2});
    k3.add_edge(0, 2, {3});
    CHECK(is_slse(k3));

    TemporalGraph shared(3, false);
    shared.add_edge(0, 1, {1});
    shared.add_edge(1, 2, {1});
    shared.add_edge(0, 2, {3});
    CHECK_FALSE(is_slse(shared));

    TemporalGraph multi(3, false);
    multi.add_edge(0, 1, {1, 2});
    multi.add_edge(1, 2, {3});
    CHECK_FALSE(is_slse(multi));

    TemporalGraph bare(3, false);
    bare.add_edge(0, 1);
    CHECK_FALSE(is_slse(bare));
}

TEST_CASE("journey validation") {
    TemporalGraph g(4, false);
    g.add_edge(0, 1, {5});
    g.add_edge(1, 2, {3, 7});
    g.add_edge(2, 3, {9});

    Journey direct{{{0, 1, 5}}, 5};
    CHECK(validate_journey(g, direct));
    Journey reversed{{{1, 0, 5}}, 5};  // undirected edges work both ways
    CHECK(validate_journey(g, reversed));

    Journey chain{{{0, 1, 5}, {1, 2, 7}, {2, 3, 9}}, 9};
    CHECK(validate_journey(g, chain));

    Journey equal_labels{{{2, 1, 3}, {1, 2, 3}}, 3};
    CHECK_FALSE(validate_journey(g, equal_labels));

    Journey broken_chain{{{0, 1, 5}, {2, 3, 9}}, 9};
    CHECK_FALSE(validate_journey(g, broken_chain));

    Journey missing_label{{{0, 1, 4}}, 4};
    CHECK_FALSE(validate_journey(g, missing_label));

    Journey wrong_arrival{{{0, 1, 5}}, 6};
    CHECK_FALSE(validate_journey(g, wrong_arrival));

    Journey empty;
    CHECK(validate_journey(g, empty));

    TemporalGraph d(2, true);
    d.add_edge(0, 1, {1});
    Journey against_direction{{{1, 0, 1}}, 1};
    CHECK_FALSE(validate_journey(d, against_direction));
}

TEST_CASE("label removal is by value and per edge") {
    TemporalGraph g(3, false);
    g.add_edge(0, 1, {1, 3});
    g.add_edge(1, 2, {1});

    auto h = remove_label(g, 0, 1, 1);
    CHECK(cost(h) == 2);
    CHECK(h.labels(0, 1) == std::vector<Label>{3});
    CHECK(h.labels(1, 2) == std::vector<Label>{1});  // shared value untouched elsewhere
    CHECK(g.labels(0, 1) == std::vector<Label>{1, 3});  // input unchanged

    auto bare = remove_label(h, 1, 2, 1);
    CHECK(bare.labels(1, 2).empty());
    CHECK(bare.has_edge(1, 2));  // edge survives with an empty label set

    CHECK_THROWS_AS(remove_label(g, 0, 1, 2), std::invalid_argument);
    CHECK_THROWS_AS(remove_label(g, 0, 2, 1), std::invalid_argument);
    CHECK(cost(remove_label(g, 0, 1, 3)) == cost(g) - 1);
}

TEST_CASE("time edges are label sorted and doubled for undirected graphs") {
    TemporalGraph g(3, false);
    g.add_edge(0, 1, {2});
    g.add_edge(1, 2, {1, 2});
    auto edges = time_edges_sorted(g);
    REQUIRE(edges.size() == 6);
    for (std::size_t i = 1; i < edges.size(); ++i) CHECK(edges[i - 1].label <= edges[i].label);
    CHECK(edges[0] == TimeEdge{1, 2, 1});
    CHECK(edges[1] == TimeEdge{2, 1, 1});
    // ties keep edge map order, then orientation order
    CHECK(edges[2] == TimeEdge{0, 1, 2});
    CHECK(edges[3] == TimeEdge{1, 0, 2});
    CHECK(edges[4] == TimeEdge{1, 2, 2});
    CHECK(edges[5] == TimeEdge{2, 1, 2});
}

TEST_CASE("graph text round trip is canonical") {
    std::string text = "t undirected 4\ne 0 1 1 3\ne 1 2 2\ne 2 3\n";
    auto g = parse_graph(text);
    CHECK(g.vertex_count() == 4);
    CHECK(cost(g) == 3);
    CHECK(format_graph(g) == text);

    // scrambled input canonicalizes to the same bytes
    auto scrambled = parse_graph("# comment\nt undirected 4\n\ne 2 3\ne 2 1 2\ne 1 0 3 1\n");
    CHECK(scrambled == g);
    CHECK(format_graph(scrambled) == text);

    std::string directed = "t directed 2\ne 0 1 4\ne 1 0 2\n";
    CHECK(format_graph(parse_graph(directed)) == directed);
}

TEST_CASE("graph parse errors carry line numbers") {
    auto message_of = [](const std::string& text) {
        try {
            parse_graph(text);
            return std::string();
        } catch (const std::exception& e) {
            return std::string(e.what());
        }
    };
    CHECK(message_of("e 0 1 2\n").find("line 1") != std::string::npos);
    CHECK(message_of("t undirected 3\nz 0 1\n").find("line 2") != std::string::npos);
    CHECK(message_of("t undirected 3\ne 0 3 1\n").find("line 2") != std::string::npos);
    CHECK(message_of("t undirected 3\ne 0 0 1\n") != "");
    CHECK(message_of("t undirected 3\ne 0 1 0\n") != "");
    CHECK(message_of("t sideways 3\n") != "");
    CHECK(message_of("t undirected 3\nt undirected 3\n") != "");
    CHECK(message_of("t undirected 3\ne 0 1 2 x\n") != "");
    CHECK(message_of("t undirected -1\n") != "");
    CHECK(message_of("") != "");
}

TEST_CASE("rng streams are deterministic and disjoint") {
    Rng a(42), b(42), c(43);
    for (int i = 0; i < 100; ++i) CHECK(a.next_u64() == b.next_u64());
    bool all_equal = true;
    Rng a2(42);
    for (int i = 0; i < 100; ++i) all_equal = all_equal && a2.next_u64() == c.next_u64();
    CHECK_FALSE(all_equal);

    CHECK(split_seed(7, 0) != split_seed(7, 1));
    CHECK(split_seed(7, 0) != split_seed(8, 0));
    CHECK(split_seed(7, 3) == split_seed(7, 3));

    Rng r(1);
    for (int i = 0; i < 1000; ++i) {
        auto x = r.below(17);
        CHECK(x < 17);
        int y = r.range(5, 9);
        CHECK(y >= 5);
        CHECK(y <= 9);
        double u = r.unit();
        CHECK(u >= 0.0);
        CHECK(u < 1.0);
    }

    std::vector<int> seq(10);
    for (int i = 0; i < 10; ++i) seq[i] = i;
    auto orig = seq;
    Rng s(5);
    s.shuffle(seq);
    auto sorted = seq;
    std::sort(sorted.begin(), sorted.end());
    CHECK(sorted == orig);  // still a permutation
    Rng s2(5);
    auto seq2 = orig;
    s2.shuffle(seq2);
    CHECK(seq == seq2);  // same seed, same order
}

TEST_CASE("graph equality is structural") {
    TemporalGraph a(3, false), b(3, false);
    a.add_edge(0, 1, {1, 2});
    b.add_edge(1, 0, {2});
    b.add_label(0, 1, 1);
    CHECK(a == b);
    b.add_label(0, 1, 5);
    CHECK_FALSE(a == b);
    CHECK_FALSE(TemporalGraph(3, false) == TemporalGraph(3, true));
    CHECK_FALSE(TemporalGraph(3, false) == TemporalGraph(4, false));
}
