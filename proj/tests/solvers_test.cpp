#include <algorithm>

#include "ctov/solvers.hpp"
#include "doctest.h"
#include "families.hpp"

using namespace ctov;

namespace {

MultiGraph cycle(int n, int offset = 0, MultiGraph g = {}) {
	while (g.capacity() < offset + n) {
		g.add_vertex();
	}
	for (int i = 0; i < n; ++i) {
		g.add_edge(offset + i, offset + (i + 1) % n);
	}
	return g;
}

MultiGraph paw_and_diamond() {
	MultiGraph g(8);
	g.add_edge(0, 1);
	g.add_edge(1, 2);
	g.add_edge(0, 2);
	g.add_edge(2, 3);
	g.add_edge(4, 5);
	g.add_edge(4, 6);
	g.add_edge(5, 6);
	g.add_edge(5, 7);
	g.add_edge(6, 7);
	return g;
}

} // namespace

TEST_CASE("obstructions") {
	MultiGraph fine(7);
	fine.add_edge(0, 1);
	fine.add_edge(1, 2);
	fine.add_edge(3, 4);
	fine.add_edge(4, 5);
	fine.add_edge(3, 5);
	CHECK_FALSE(find_obstruction(fine).has_value());

	const auto c5 = find_obstruction(cycle(5));
	REQUIRE(c5.has_value());
	CHECK(c5->kind == ObstructionKind::InducedCycle);
	CHECK(c5->vertices.size() == 5);

	MultiGraph paw(4);
	paw.add_edge(0, 1);
	paw.add_edge(1, 2);
	paw.add_edge(0, 2);
	paw.add_edge(2, 3);
	const auto o = find_obstruction(paw);
	REQUIRE(o.has_value());
	CHECK(o->kind == ObstructionKind::Paw);
	CHECK(o->vertices == std::vector<Vertex>{0, 1, 2, 3});

	MultiGraph dbl(3);
	dbl.add_edge(0, 1, 2);
	dbl.add_edge(1, 2);
	const auto d = find_obstruction(dbl);
	REQUIRE(d.has_value());
	CHECK(d->kind == ObstructionKind::InducedCycle);
	CHECK(d->vertices.size() == 2);
}

TEST_CASE("obstruction exists iff the graph is infeasible") {
	family::Rng rng(31);
	for (int round = 0; round < 400; ++round) {
		const auto inst = family::all()[round % family::all().size()](rng);
		CHECK(find_obstruction(inst.graph).has_value() == !is_feasible_deletion(inst.graph, VertexSet{}));
	}
}

TEST_CASE("exact solver examples") {
	const auto c4 = exact_ctov(cycle(4), 1);
	REQUIRE(c4.has_value());
	CHECK(c4->size() == 1);

	CHECK_FALSE(exact_ctov(paw_and_diamond(), 1).has_value());
	const auto two = exact_ctov(paw_and_diamond(), 2);
	REQUIRE(two.has_value());
	CHECK(two->size() == 2);
	CHECK(is_feasible_deletion(paw_and_diamond(), *two));

	MultiGraph fine(3);
	fine.add_edge(0, 1);
	const auto none = exact_ctov(fine, 0);
	REQUIRE(none.has_value());
	CHECK(none->empty());
}

TEST_CASE("brute force examples") {
	const auto c4 = brute_force_ctov(cycle(4), 1);
	REQUIRE(c4.has_value());
	CHECK(c4->size() == 1);
	CHECK_FALSE(brute_force_ctov(cycle(4, 4, cycle(4)), 1).has_value());
	CHECK_THROWS_AS(brute_force_ctov(MultiGraph(40), 1), std::invalid_argument);
	CHECK_THROWS_AS(brute_force_ctov(MultiGraph(12), 1, 10), std::invalid_argument);
}

TEST_CASE("exact solver agrees with subset enumeration") {
	family::Rng rng(32);
	for (int round = 0; round < 300; ++round) {
		const int n = rng.range(3, 10);
		MultiGraph g(n);
		const double p = rng.range(20, 60) / 100.0;
		for (int a = 0; a < n; ++a) {
			for (int b = a + 1; b < n; ++b) {
				if (rng.chance(p)) {
					g.add_edge(a, b, rng.chance(0.05) ? 2 : 1);
				}
			}
		}
		for (int budget = 0; budget <= 4; ++budget) {
			const auto e = exact_ctov(g, budget);
			const auto b = brute_force_ctov(g, budget);
			REQUIRE(e.has_value() == b.has_value());
			if (e) {
				CHECK(e->size() == b->size());
				CHECK(is_feasible_deletion(g, *e));
			}
		}
	}
}

TEST_CASE("greedy solver") {
	MultiGraph fine(3);
	fine.add_edge(0, 1);
	CHECK(approx_ctov(fine).empty());
	const auto c5 = approx_ctov(cycle(5));
	CHECK_FALSE(c5.empty());
	CHECK(is_feasible_deletion(cycle(5), c5));

	MultiGraph pc(8);
	pc.add_edge(0, 1);
	pc.add_edge(1, 2);
	pc.add_edge(0, 2);
	pc.add_edge(2, 3);
	pc = cycle(4, 4, pc);
	const auto s = approx_ctov(pc);
	CHECK(s.size() <= 8);
	CHECK(is_feasible_deletion(pc, s));

	family::Rng rng(33);
	for (int round = 0; round < 300; ++round) {
		const auto inst = family::all()[round % family::all().size()](rng);
		CHECK(is_feasible_deletion(inst.graph, approx_ctov(inst.graph)));
	}
}

TEST_CASE("longest cycle oracle") {
	CHECK(brute_force_longest_cycle(cycle(5)) == 5);
	MultiGraph tree(4);
	tree.add_edge(0, 1);
	tree.add_edge(1, 2);
	tree.add_edge(1, 3);
	CHECK_FALSE(brute_force_longest_cycle(tree).has_value());
	MultiGraph k4(4);
	for (int a = 0; a < 4; ++a) {
		for (int b = a + 1; b < 4; ++b) {
			k4.add_edge(a, b);
		}
	}
	CHECK(brute_force_longest_cycle(k4) == 4);
	MultiGraph dbl(2);
	dbl.add_edge(0, 1, 2);
	CHECK_THROWS_AS(brute_force_longest_cycle(dbl), std::invalid_argument);
	CHECK_THROWS_AS(brute_force_longest_cycle(MultiGraph(20)), std::invalid_argument);
}
