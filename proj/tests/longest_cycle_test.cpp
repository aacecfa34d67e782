#include "ctov/longest_cycle.hpp"
#include "ctov/solvers.hpp"
#include "doctest.h"
#include "families.hpp"

using namespace ctov;

namespace {

MultiGraph path(int n) {
	MultiGraph g(n);
	for (int i = 0; i + 1 < n; ++i) {
		g.add_edge(i, i + 1);
	}
	return g;
}

MultiGraph clique(int n) {
	MultiGraph g(n);
	for (int a = 0; a < n; ++a) {
		for (int b = a + 1; b < n; ++b) {
			g.add_edge(a, b);
		}
	}
	return g;
}

LdtpInstance ldtp_on(MultiGraph host, std::vector<std::pair<VertexSet, VertexSet>> pairs) {
	LdtpInstance inst;
	inst.host = std::move(host);
	inst.min_edges.assign(pairs.size(), 0);
	inst.pairs = std::move(pairs);
	return inst;
}

} // namespace

TEST_CASE("q on cliques and trees") {
	// K3 on 0..2, u = 3, v = 4
	MultiGraph g = clique(3);
	g.add_vertex();
	g.add_vertex();
	g.add_edge(3, 0);
	g.add_edge(4, 1);
	CHECK(q_value(g, {0, 1, 2}, 3, 4) == 4);

	MultiGraph same = clique(3);
	same.add_vertex();
	same.add_vertex();
	same.add_edge(3, 0);
	same.add_edge(4, 0);
	CHECK(q_value(same, {0, 1, 2}, 3, 4) == 2);

	MultiGraph tree = path(3);
	tree.add_vertex();
	tree.add_vertex();
	tree.add_edge(3, 0);
	tree.add_edge(4, 2);
	CHECK(q_value(tree, {0, 1, 2}, 3, 4) == 4);

	tree.add_vertex();
	CHECK_FALSE(q_value(tree, {0, 1, 2}, 3, 5).has_value());

	MultiGraph c4 = path(4);
	c4.add_edge(3, 0);
	c4.add_vertex();
	c4.add_edge(4, 0);
	CHECK_THROWS_AS(q_value(c4, {0, 1, 2, 3}, 4, 4), GraphError);
}

TEST_CASE("labels keep the best |S| components") {
	// u = 0; K3 on 1..3 and an edge 4-5, both hanging from u twice
	MultiGraph g(6);
	g.add_edge(1, 2);
	g.add_edge(2, 3);
	g.add_edge(1, 3);
	g.add_edge(4, 5);
	g.add_edge(0, 1);
	g.add_edge(0, 2);
	g.add_edge(0, 4);
	g.add_edge(0, 5);
	const auto t = label_components(g, {0});
	REQUIRE(t.components.size() == 2);
	CHECK(t.components[0] == VertexSet{1, 2, 3});
	CHECK(t.of(0, 0) == std::vector<int>{0});

	// a second S vertex with no neighbours at all
	g.add_vertex();
	const auto both = label_components(g, {0, 6});
	CHECK(both.of(0, 0) == std::vector<int>{0, 1});
	CHECK(both.of(0, 6).empty());
	CHECK(both.of(6, 6).empty());
}

TEST_CASE("disjoint paths in cliques") {
	CHECK(ldtp_clique(ldtp_on(clique(3), {{{0}, {1}}})) == 2);
	CHECK(ldtp_clique(ldtp_on(clique(2), {{{0}, {0}}})) == 0);
	CHECK(ldtp_clique(ldtp_on(clique(4), {{{0}, {1}}, {{2}, {3}}})) == 2);
	CHECK_FALSE(ldtp_clique(ldtp_on(clique(4), {{{}, {1}}})).has_value());

	auto forced = ldtp_on(clique(1), {{{0}, {0}}});
	forced.min_edges = {1};
	CHECK_FALSE(ldtp_clique(forced).has_value());
}

TEST_CASE("disjoint paths in trees") {
	CHECK(ldtp_tree(ldtp_on(path(3), {{{0}, {2}}})) == 2);

	MultiGraph star(4);
	for (int i = 1; i < 4; ++i) {
		star.add_edge(0, i);
	}
	CHECK(ldtp_tree(ldtp_on(star, {{{1}, {2}}})) == 2);
	CHECK(ldtp_tree(ldtp_on(path(3), {{{0}, {0}}, {{2}, {2}}})) == 0);
	CHECK_FALSE(ldtp_tree(ldtp_on(path(3), {{{0}, {}}})).has_value());

	auto forced = ldtp_on(path(3), {{{1}, {1}}});
	CHECK(ldtp_tree(forced) == 0);
	forced.min_edges = {1};
	CHECK_FALSE(ldtp_tree(forced).has_value());

	const auto tables = ldtp_tree_tables(ldtp_on(path(3), {{{0}, {2}}}));
	CHECK(tables.root == 0);
	CHECK(tables.get_dp2(0, 1) == 2);
	CHECK(ldtp(ldtp_on(path(3), {{{0}, {2}}})) == 2);
}

TEST_CASE("longest cycle examples") {
	MultiGraph c5 = path(5);
	c5.add_edge(4, 0);
	CHECK(longest_cycle(c5, {2}) == 5);

	MultiGraph two = clique(4);
	for (int i = 0; i < 3; ++i) {
		two.add_vertex();
	}
	two.add_edge(4, 5);
	two.add_edge(5, 6);
	two.add_edge(4, 6);
	CHECK(longest_cycle(two, {}) == 4);

	CHECK_FALSE(longest_cycle(path(6), {1}).has_value());

	// u = 3, v = 4 on both ends of the path 0-1-2, plus the edge u-v
	MultiGraph uv = path(3);
	uv.add_vertex();
	uv.add_vertex();
	uv.add_edge(3, 0);
	uv.add_edge(4, 2);
	uv.add_edge(3, 4);
	CHECK(longest_cycle(uv, {3, 4}) == brute_force_longest_cycle(uv));
	CHECK(longest_cycle(uv, {3, 4}) == 5);
}

TEST_CASE("longest cycle rejects bad input") {
	MultiGraph dbl(3);
	dbl.add_edge(0, 1, 2);
	dbl.add_edge(1, 2);
	CHECK_THROWS_AS(longest_cycle(dbl, {1}), GraphError);

	MultiGraph c5 = path(5);
	c5.add_edge(4, 0);
	CHECK_THROWS_AS(longest_cycle(c5, {}), GraphError);
}

TEST_CASE("longest cycle matches enumeration") {
	family::Rng rng(51);
	for (int round = 0; round < 60; ++round) {
		const MultiGraph g = family::cycle_graph(rng, 11);
		const auto s = exact_ctov(g, 3);
		if (!s) {
			continue;
		}
		const auto want = brute_force_longest_cycle(g);
		CHECK(longest_cycle(g, *s) == want);
		LongestCycleOptions all;
		all.all_components = true;
		CHECK(longest_cycle(g, *s, all) == want);
	}
}
