#include <algorithm>
#include <set>

#include "ctov/structure.hpp"
#include "doctest.h"
#include "families.hpp"
#include "oracles.hpp"

using namespace ctov;

namespace {

// Largest matching by trying every edge subset.
int brute_matching(const std::vector<IndexPair> &edges) {
	int best = 0;
	const int m = static_cast<int>(edges.size());
	for (uint32_t mask = 0; mask < (1u << m); ++mask) {
		std::set<int> l, r;
		bool ok = true;
		for (int i = 0; i < m && ok; ++i) {
			if ((mask >> i) & 1u) {
				ok = l.insert(edges[i].first).second && r.insert(edges[i].second).second;
			}
		}
		if (ok) {
			best = std::max(best, static_cast<int>(l.size()));
		}
	}
	return best;
}

bool is_matching(const std::vector<IndexPair> &m, const std::vector<IndexPair> &edges) {
	std::set<int> l, r;
	for (const auto &e : m) {
		if (std::find(edges.begin(), edges.end(), e) == edges.end() || !l.insert(e.first).second ||
				!r.insert(e.second).second) {
			return false;
		}
	}
	return true;
}

MultiGraph two_triangles() {
	MultiGraph g(5);
	g.add_edge(0, 1);
	g.add_edge(1, 2);
	g.add_edge(0, 2);
	g.add_edge(0, 3);
	g.add_edge(3, 4);
	g.add_edge(0, 4);
	return g;
}

} // namespace

TEST_CASE("bipartite matching") {
	CHECK(max_bipartite_matching(2, 2, {{0, 0}, {0, 1}, {1, 0}, {1, 1}}).size() == 2);
	CHECK(max_bipartite_matching(1, 3, {{0, 0}, {0, 1}, {0, 2}}).size() == 1);
	const std::vector<IndexPair> edges{{0, 1}, {1, 2}, {2, 0}, {0, 0}, {1, 1}, {2, 2}};
	const auto m = max_bipartite_matching(3, 3, edges);
	CHECK(m.size() == 3);
	CHECK(is_matching(m, edges));
}

TEST_CASE("bipartite matching against exhaustive search") {
	family::Rng rng(21);
	for (int round = 0; round < 300; ++round) {
		const int nl = rng.range(1, 4), nr = rng.range(1, 4);
		std::vector<IndexPair> edges;
		for (int a = 0; a < nl; ++a) {
			for (int b = 0; b < nr; ++b) {
				if (rng.chance(0.4)) {
					edges.emplace_back(a, b);
				}
			}
		}
		const auto m = max_bipartite_matching(nl, nr, edges);
		CHECK(is_matching(m, edges));
		CHECK(static_cast<int>(m.size()) == brute_matching(edges));
	}
}

TEST_CASE("general matching on an odd cycle") {
	CHECK(max_general_matching(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}}).size() == 2);
	CHECK(max_general_matching(6, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {4, 5}, {3, 5}}).size() == 3);
}

TEST_CASE("two triangles through v") {
	const MultiGraph g = two_triangles();
	const auto one = gallai_flower_or_blocker(g, 0, 1);
	REQUIRE(std::holds_alternative<Flower>(one));
	CHECK(std::get<Flower>(one).cycles.size() >= 2);
	CHECK(oracle::valid_flower(g, 0, std::get<Flower>(one)));

	const auto two = gallai_flower_or_blocker(g, 0, 2);
	REQUIRE(std::holds_alternative<Blocker>(two));
	const auto &b = std::get<Blocker>(two).vertices;
	CHECK(b.size() <= 4);
	const oracle::PetalTable petals(g, 0);
	CHECK_FALSE(petals.cycle_avoiding(petals.mask_of(b)));
}

TEST_CASE("trees have empty blockers") {
	MultiGraph t(5);
	t.add_edge(0, 1);
	t.add_edge(0, 2);
	t.add_edge(2, 3);
	t.add_edge(2, 4);
	for (Vertex v = 0; v < 5; ++v) {
		const auto r = gallai_flower_or_blocker(t, v, 1);
		REQUIRE(std::holds_alternative<Blocker>(r));
		CHECK(std::get<Blocker>(r).vertices.empty());
	}
}

TEST_CASE("a double edge is a petal") {
	MultiGraph g(3);
	g.add_edge(0, 1, 2);
	g.add_edge(1, 2);
	const auto r = gallai_flower_or_blocker(g, 0, 0);
	REQUIRE(std::holds_alternative<Flower>(r));
	const auto &f = std::get<Flower>(r);
	REQUIRE(f.cycles.size() == 1);
	CHECK(f.cycles[0] == std::vector<Vertex>{0, 1});
}

TEST_CASE("vertex joined to a whole triangle") {
	// one petal at most, but no single vertex blocks all cycles through v
	MultiGraph g(4);
	for (int a = 0; a < 4; ++a) {
		for (int b = a + 1; b < 4; ++b) {
			g.add_edge(a, b);
		}
	}
	CHECK(max_flower(g, 0).cycles.size() == 1);
	const auto r = gallai_flower_or_blocker(g, 0, 1);
	REQUIRE(std::holds_alternative<Blocker>(r));
	CHECK(std::get<Blocker>(r).vertices.size() == 2);
}

TEST_CASE("gallai rejects unknown vertices") {
	CHECK_THROWS_AS(gallai_flower_or_blocker(two_triangles(), 9, 1), GraphError);
}

TEST_CASE("max flower order matches petal enumeration") {
	family::Rng rng(22);
	for (int round = 0; round < 150; ++round) {
		const int n = rng.range(2, 9);
		MultiGraph g(n);
		for (int a = 0; a < n; ++a) {
			for (int b = a + 1; b < n; ++b) {
				if (rng.chance(0.35)) {
					g.add_edge(a, b, rng.chance(0.1) ? 2 : 1);
				}
			}
		}
		for (Vertex v = 0; v < n; ++v) {
			const oracle::PetalTable petals(g, v);
			const Flower f = max_flower(g, v);
			CHECK(oracle::valid_flower(g, v, f));
			CHECK(static_cast<int>(f.cycles.size()) == petals.max_flower_order());
		}
	}
}

TEST_CASE("expansion examples") {
	const std::vector<IndexPair> all{{0, 10}, {0, 11}};
	const auto forced = q_expansion({0}, {10, 11}, all, 2);
	CHECK(forced.k_prime == std::vector<int>{0});
	CHECK(forced.l_prime == std::vector<int>{10, 11});

	// a sees x1..x4, b only x4
	const std::vector<IndexPair> edges{{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 4}};
	const auto ex = q_expansion({0, 1}, {1, 2, 3, 4}, edges, 2);
	CHECK(oracle::valid_expansion({0, 1}, {1, 2, 3, 4}, edges, 2, ex));

	CHECK_THROWS_AS(q_expansion({0}, {1, 2, 3}, {{0, 2}, {0, 3}}, 2), std::invalid_argument);
	CHECK_THROWS_AS(q_expansion({0, 1}, {1, 2, 3}, {{0, 1}, {0, 2}, {1, 3}}, 2), std::invalid_argument);
}

TEST_CASE("p3 packing examples") {
	MultiGraph k4(4);
	for (int a = 0; a < 4; ++a) {
		for (int b = a + 1; b < 4; ++b) {
			k4.add_edge(a, b);
		}
	}
	CHECK(maximal_p3_packing(k4, {0, 1, 2, 3}).empty());

	MultiGraph path(4);
	path.add_edge(0, 1);
	path.add_edge(1, 2);
	path.add_edge(2, 3);
	const auto p = maximal_p3_packing(path, {0, 1, 2, 3});
	REQUIRE(p.size() == 1);
	CHECK(p[0] == P3{0, 1, 2});

	MultiGraph claw(4);
	claw.add_edge(0, 1);
	claw.add_edge(0, 2);
	claw.add_edge(0, 3);
	CHECK(maximal_p3_packing(claw, {0, 1, 2, 3}).size() == 1);

	// multi-edges still induce a P3
	MultiGraph multi(3);
	multi.add_edge(0, 1, 2);
	multi.add_edge(1, 2);
	CHECK(induces_p3(multi, 0, 1, 2));
	CHECK_FALSE(induces_p3(multi, 1, 0, 2));
}

TEST_CASE("p3 packing is valid and maximal") {
	family::Rng rng(23);
	for (int round = 0; round < 200; ++round) {
		const auto inst = family::erdos(rng);
		const auto &g = inst.graph;
		VertexSet allowed;
		for (Vertex v : g.vertices()) {
			if (rng.chance(0.7)) {
				allowed.push_back(v);
			}
		}
		const auto pack = maximal_p3_packing(g, allowed);
		for (size_t i = 0; i < pack.size(); ++i) {
			const auto &t = pack[i];
			CHECK(induces_p3(g, t.a, t.center, t.b));
			for (Vertex x : {t.a, t.center, t.b}) {
				CHECK(std::binary_search(allowed.begin(), allowed.end(), x));
			}
			for (size_t j = 0; j < i; ++j) {
				const std::set<Vertex> a{t.a, t.center, t.b};
				int shared = 0;
				for (Vertex x : {pack[j].a, pack[j].center, pack[j].b}) {
					shared += static_cast<int>(a.count(x));
				}
				CHECK(shared <= 1);
			}
		}
		for (const auto &tri : oracle::induced_p3s(g, allowed)) {
			bool blocked = false;
			for (const auto &t : pack) {
				const std::set<Vertex> a{t.a, t.center, t.b};
				int shared = 0;
				for (Vertex x : tri) {
					shared += static_cast<int>(a.count(x));
				}
				blocked = blocked || shared >= 2;
			}
			CHECK(blocked);
		}
	}
}

TEST_CASE("p3 star order") {
	MultiGraph p3(3);
	p3.add_edge(0, 1);
	p3.add_edge(1, 2);
	CHECK(p3_star_order(p3, 1, {0, 1, 2}) == 1);

	MultiGraph star(5);
	for (int i = 1; i < 5; ++i) {
		star.add_edge(0, i);
	}
	CHECK(p3_star_order(star, 0, {0, 1, 2, 3, 4}) == 2);

	MultiGraph k4(4);
	for (int a = 0; a < 4; ++a) {
		for (int b = a + 1; b < 4; ++b) {
			k4.add_edge(a, b);
		}
	}
	CHECK(p3_star_order(k4, 0, {0, 1, 2, 3}) == 0);
	CHECK_THROWS(p3_star_order(k4, 0, {1, 2, 3}));
}

TEST_CASE("p3 star order against enumeration") {
	family::Rng rng(24);
	for (int round = 0; round < 200; ++round) {
		const auto inst = family::erdos(rng);
		const auto &g = inst.graph;
		const VertexSet all = g.vertices();
		for (Vertex v : all) {
			CHECK(p3_star_order(g, v, all) == oracle::p3_star_order(g, v, all));
		}
	}
}
