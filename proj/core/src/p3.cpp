#include <algorithm>
#include <array>
#include <set>

#include "ctov/structure.hpp"

namespace ctov {

bool induces_p3(const MultiGraph &g, Vertex a, Vertex center, Vertex b) {
	if (a == center || b == center || a == b) {
		return false;
	}
	return g.adjacent(a, center) && g.adjacent(center, b) && !g.adjacent(a, b);
}

P3Packing maximal_p3_packing(const MultiGraph &g, const VertexSet &allowed) {
	std::vector<char> in(g.capacity(), 0);
	for (Vertex v : allowed) {
		if (!g.contains(v)) {
			throw GraphError("unknown vertex " + std::to_string(v));
		}
		in[v] = 1;
	}

	// every induced P3 is found exactly once from its center
	std::vector<std::array<Vertex, 3>> candidates;  // sorted triple, then center
	std::vector<P3> shapes;
	for (Vertex c : allowed) {
		std::vector<Vertex> nb;
		for (const auto &[u, m] : g.incident(c)) {
			if (in[u]) {
				nb.push_back(u);
			}
		}
		for (size_t i = 0; i < nb.size(); ++i) {
			const auto &inner = g.incident(nb[i]);
			for (size_t j = i + 1; j < nb.size(); ++j) {
				if (inner.count(nb[j])) {
					continue;
				}
				std::array<Vertex, 3> t{nb[i], c, nb[j]};
				std::sort(t.begin(), t.end());
				candidates.push_back(t);
				shapes.push_back({nb[i], c, nb[j]});
			}
		}
	}
	std::vector<size_t> order(candidates.size());
	for (size_t i = 0; i < order.size(); ++i) {
		order[i] = i;
	}
	std::sort(order.begin(), order.end(), [&](size_t x, size_t y) { return candidates[x] < candidates[y]; });

	// two distinct triples share >= 2 vertices iff they share a pair
	std::set<std::pair<Vertex, Vertex>> blocked;
	P3Packing packing;
	for (size_t idx : order) {
		const auto &t = candidates[idx];
		const std::array<std::pair<Vertex, Vertex>, 3> pairs{
				std::pair{t[0], t[1]}, std::pair{t[0], t[2]}, std::pair{t[1], t[2]}};
		bool free = true;
		for (const auto &p : pairs) {
			if (blocked.count(p)) {
				free = false;
				break;
			}
		}
		if (!free) {
			continue;
		}
		blocked.insert(pairs.begin(), pairs.end());
		packing.push_back(shapes[idx]);
	}
	return packing;
}

int p3_star_order(const MultiGraph &g, Vertex v, const VertexSet &allowed) {
	if (!std::binary_search(allowed.begin(), allowed.end(), v)) {
		throw GraphError("vertex " + std::to_string(v) + " is not in the allowed set");
	}
	// local ids for allowed vertices other than v
	std::vector<int> local(g.capacity(), -1);
	std::vector<Vertex> back;
	for (Vertex u : allowed) {
		if (u != v) {
			local[u] = static_cast<int>(back.size());
			back.push_back(u);
		}
	}

	// pairs {u1,u2} such that {v,u1,u2} induces a P3 in any arrangement:
	// v in the middle (u1,u2 in N(v), non-adjacent) or v at an end
	// (u1 in N(v), u2 in N(u1) \ N[v])
	std::set<IndexPair> aux;
	const auto &nv = g.incident(v);
	for (const auto &[u1, m1] : nv) {
		if (local[u1] < 0) {
			continue;
		}
		const auto &n1 = g.incident(u1);
		for (const auto &[u2, m2] : nv) {
			if (u2 <= u1 || local[u2] < 0) {
				continue;
			}
			if (!n1.count(u2)) {
				aux.emplace(local[u1], local[u2]);
			}
		}
		for (const auto &[u2, m2] : n1) {
			if (u2 == v || local[u2] < 0 || nv.count(u2)) {
				continue;
			}
			aux.emplace(std::min(local[u1], local[u2]), std::max(local[u1], local[u2]));
		}
	}
	std::vector<IndexPair> edges(aux.begin(), aux.end());
	return static_cast<int>(max_general_matching(static_cast<int>(back.size()), edges).size());
}

} // namespace ctov
