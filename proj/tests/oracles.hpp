#pragma once

// Brute-force references for the unit and acceptance tests. Everything here is
// exponential and meant for graphs of a dozen vertices or so.

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "ctov/longest_cycle.hpp"
#include "ctov/multigraph.hpp"
#include "ctov/structure.hpp"

namespace oracle {

using ctov::MultiGraph;
using ctov::Vertex;
using ctov::VertexSet;

// Vertex sets W (bitmask over `others`) such that some cycle through v has
// exactly W as its other vertices.
class PetalTable {
public:
	PetalTable(const MultiGraph &g, Vertex v) : v_(v) {
		for (Vertex x : g.vertices()) {
			if (x != v) {
				others_.push_back(x);
			}
		}
		const int n = static_cast<int>(others_.size());
		const uint32_t full = (1u << n) - 1;
		petal_.assign(size_t{1} << n, 0);
		std::vector<char> nv(n);
		for (int i = 0; i < n; ++i) {
			nv[i] = g.adjacent(v, others_[i]);
			if (g.multiplicity(v, others_[i]) >= 2) {
				petal_[1u << i] = 1;
			}
		}
		// reach[mask * n + e]: a path covering mask, starting at `start`, ending at e
		std::vector<char> reach((size_t{1} << n) * n);
		for (int start = 0; start < n; ++start) {
			if (!nv[start]) {
				continue;
			}
			std::fill(reach.begin(), reach.end(), 0);
			reach[(size_t{1} << start) * n + start] = 1;
			for (uint32_t mask = 1; mask <= full; ++mask) {
				if (!((mask >> start) & 1u)) {
					continue;
				}
				for (int e = 0; e < n; ++e) {
					if (!reach[size_t{mask} * n + e]) {
						continue;
					}
					if (e != start && nv[e]) {
						petal_[mask] = 1;
					}
					for (int x = 0; x < n; ++x) {
						if (!((mask >> x) & 1u) && g.adjacent(others_[e], others_[x])) {
							reach[size_t{mask | (1u << x)} * n + x] = 1;
						}
					}
				}
			}
		}
	}

	int size() const { return static_cast<int>(others_.size()); }
	bool petal(uint32_t mask) const { return petal_[mask] != 0; }

	uint32_t mask_of(const std::vector<Vertex> &vs) const {
		uint32_t m = 0;
		for (Vertex x : vs) {
			auto it = std::find(others_.begin(), others_.end(), x);
			if (it != others_.end()) {
				m |= 1u << (it - others_.begin());
			}
		}
		return m;
	}

	// Largest number of pairwise disjoint petals.
	int max_flower_order() const {
		const uint32_t full = (1u << size()) - 1;
		std::vector<int> best(size_t{full} + 1, 0);
		for (uint32_t m = 1; m <= full; ++m) {
			const uint32_t low = m & (~m + 1);
			int b = best[m & ~low];
			for (uint32_t w = m; w; w = (w - 1) & m) {
				if ((w & low) && petal_[w]) {
					b = std::max(b, 1 + best[m & ~w]);
				}
			}
			best[m] = b;
		}
		return best[full];
	}

	// Is there a cycle through v avoiding `blocked`?
	bool cycle_avoiding(uint32_t blocked) const {
		const uint32_t allowed = ((1u << size()) - 1) & ~blocked;
		for (uint32_t w = allowed; w; w = (w - 1) & allowed) {
			if (petal_[w]) {
				return true;
			}
		}
		return false;
	}

	Vertex center() const { return v_; }

private:
	Vertex v_;
	std::vector<Vertex> others_;
	std::vector<char> petal_;
};

inline bool valid_cycle(const MultiGraph &g, const std::vector<Vertex> &cyc) {
	if (cyc.size() < 2) {
		return false;
	}
	std::set<Vertex> seen(cyc.begin(), cyc.end());
	if (seen.size() != cyc.size()) {
		return false;
	}
	if (cyc.size() == 2) {
		return g.multiplicity(cyc[0], cyc[1]) >= 2;
	}
	for (size_t i = 0; i < cyc.size(); ++i) {
		if (!g.adjacent(cyc[i], cyc[(i + 1) % cyc.size()])) {
			return false;
		}
	}
	return true;
}

// Cycles start at v, are genuine, and pairwise share only v.
inline bool valid_flower(const MultiGraph &g, Vertex v, const ctov::Flower &f) {
	std::set<Vertex> used;
	for (const auto &cyc : f.cycles) {
		if (cyc.empty() || cyc.front() != v || !valid_cycle(g, cyc)) {
			return false;
		}
		for (size_t i = 1; i < cyc.size(); ++i) {
			if (!used.insert(cyc[i]).second) {
				return false;
			}
		}
	}
	return true;
}

inline bool valid_expansion(const std::vector<int> &k_side, const std::vector<int> &l_side,
		const std::vector<ctov::IndexPair> &edges, int q, const ctov::Expansion &ex) {
	if (ex.k_prime.empty() || ex.l_prime.empty()) {
		return false;
	}
	const std::set<int> kp(ex.k_prime.begin(), ex.k_prime.end());
	const std::set<int> lp(ex.l_prime.begin(), ex.l_prime.end());
	if (kp.size() != ex.k_prime.size() || lp.size() != ex.l_prime.size()) {
		return false;
	}
	for (int x : kp) {
		if (std::find(k_side.begin(), k_side.end(), x) == k_side.end()) {
			return false;
		}
	}
	for (int x : lp) {
		if (std::find(l_side.begin(), l_side.end(), x) == l_side.end()) {
			return false;
		}
	}
	const std::set<ctov::IndexPair> edge_set(edges.begin(), edges.end());
	// N(L') inside K'
	for (const auto &[a, b] : edges) {
		if (lp.count(b) && !kp.count(a)) {
			return false;
		}
	}
	if (ex.assignment.size() != lp.size()) {
		return false;
	}
	std::map<int, int> load;
	for (const auto &[l, k] : ex.assignment) {
		if (!lp.count(l) || !kp.count(k) || !edge_set.count({k, l})) {
			return false;
		}
		++load[k];
	}
	for (int k : kp) {
		if (load[k] != q) {
			return false;
		}
	}
	return true;
}

namespace detail {

inline bool in(const VertexSet &s, Vertex v) {
	return std::binary_search(s.begin(), s.end(), v);
}

// Unique path between a and b in a forest, empty when disconnected.
inline std::vector<Vertex> tree_path(const MultiGraph &t, Vertex a, Vertex b) {
	std::map<Vertex, Vertex> parent{{a, a}};
	std::vector<Vertex> queue{a};
	for (size_t i = 0; i < queue.size(); ++i) {
		for (const auto &[u, m] : t.incident(queue[i])) {
			if (!parent.count(u)) {
				parent[u] = queue[i];
				queue.push_back(u);
			}
		}
	}
	if (!parent.count(b)) {
		return {};
	}
	std::vector<Vertex> path{b};
	while (path.back() != a) {
		path.push_back(parent[path.back()]);
	}
	return path;
}

} // namespace detail

// Disjoint path packings on a tree by enumerating endpoint pairs. Only the
// indices in `z` are routed and every path stays inside `within`. With
// `partial`, one more path runs from pairs[i] side f to `partial->v`.
struct PartialPath {
	int index;
	int side;
	Vertex end;
};

inline std::optional<int64_t> tree_packing(const ctov::LdtpInstance &inst, uint32_t z, const VertexSet &within,
		std::optional<PartialPath> partial = std::nullopt) {
	const auto &t = inst.host;
	const int l = static_cast<int>(inst.pairs.size());
	std::vector<int> order;
	for (int i = 0; i < l; ++i) {
		if ((z >> i) & 1u) {
			order.push_back(i);
		}
	}
	std::optional<int64_t> best;
	std::set<Vertex> used;
	auto place = [&](const std::vector<Vertex> &path) {
		for (Vertex x : path) {
			if (used.count(x) || !detail::in(within, x)) {
				return false;
			}
		}
		return true;
	};
	auto rec = [&](auto &&self, size_t pos, int64_t acc) -> void {
		if (pos == order.size()) {
			if (!partial) {
				best = std::max(best.value_or(ctov::kNegInf), acc);
				return;
			}
			const auto &side = partial->side == 1 ? inst.pairs[partial->index].first : inst.pairs[partial->index].second;
			for (Vertex x : side) {
				const auto path = detail::tree_path(t, x, partial->end);
				if (!path.empty() && place(path)) {
					best = std::max(best.value_or(ctov::kNegInf), acc + static_cast<int64_t>(path.size()) - 1);
				}
			}
			return;
		}
		const int i = order[pos];
		for (Vertex a : inst.pairs[i].first) {
			for (Vertex b : inst.pairs[i].second) {
				const auto path = detail::tree_path(t, a, b);
				if (path.empty() || static_cast<int>(path.size()) - 1 < inst.min_edges[i] || !place(path)) {
					continue;
				}
				used.insert(path.begin(), path.end());
				self(self, pos + 1, acc + static_cast<int64_t>(path.size()) - 1);
				for (Vertex x : path) {
					used.erase(x);
				}
			}
		}
	};
	rec(rec, 0, 0);
	return best;
}

inline std::optional<int64_t> ldtp_tree(const ctov::LdtpInstance &inst) {
	const uint32_t full = (1u << inst.pairs.size()) - 1;
	return tree_packing(inst, full, inst.host.vertices());
}

// On a clique any ordering of a vertex set is a path, so a packing is a
// labelling of the vertices plus endpoints inside each label class.
inline std::optional<int64_t> ldtp_clique(const ctov::LdtpInstance &inst) {
	const VertexSet hosts = inst.host.vertices();
	const int n = static_cast<int>(hosts.size());
	const int l = static_cast<int>(inst.pairs.size());
	std::vector<int> label(n, 0);
	std::optional<int64_t> best;
	while (true) {
		int64_t total = 0;
		bool ok = true;
		for (int i = 0; i < l && ok; ++i) {
			VertexSet cls;
			for (int x = 0; x < n; ++x) {
				if (label[x] == i + 1) {
					cls.push_back(hosts[x]);
				}
			}
			if (cls.empty()) {
				ok = false;
				break;
			}
			const auto &[a_side, b_side] = inst.pairs[i];
			bool ends = false;
			if (cls.size() == 1) {
				ends = inst.min_edges[i] == 0 && detail::in(a_side, cls[0]) && detail::in(b_side, cls[0]);
			} else {
				for (Vertex a : cls) {
					for (Vertex b : cls) {
						ends = ends || (a != b && detail::in(a_side, a) && detail::in(b_side, b));
					}
				}
			}
			ok = ends;
			total += static_cast<int64_t>(cls.size()) - 1;
		}
		if (ok) {
			best = std::max(best.value_or(ctov::kNegInf), total);
		}
		int pos = 0;
		while (pos < n && label[pos] == l) {
			label[pos++] = 0;
		}
		if (pos == n) {
			break;
		}
		++label[pos];
	}
	return best;
}

// Greedy-free check: induced P3s inside `allowed`, as sorted triples.
inline std::vector<std::array<Vertex, 3>> induced_p3s(const MultiGraph &g, const VertexSet &allowed) {
	std::vector<std::array<Vertex, 3>> out;
	for (size_t i = 0; i < allowed.size(); ++i) {
		for (size_t j = i + 1; j < allowed.size(); ++j) {
			for (size_t h = j + 1; h < allowed.size(); ++h) {
				const Vertex a = allowed[i], b = allowed[j], c = allowed[h];
				const int e = g.adjacent(a, b) + g.adjacent(b, c) + g.adjacent(a, c);
				if (e == 2) {
					out.push_back({a, b, c});
				}
			}
		}
	}
	return out;
}

// Most P3s inside `allowed` that contain v and pairwise meet only in v.
inline int p3_star_order(const MultiGraph &g, Vertex v, const VertexSet &allowed) {
	std::vector<std::array<Vertex, 2>> rest;
	for (const auto &t : induced_p3s(g, allowed)) {
		if (t[0] == v || t[1] == v || t[2] == v) {
			std::array<Vertex, 2> r{};
			int i = 0;
			for (Vertex x : t) {
				if (x != v) {
					r[i++] = x;
				}
			}
			rest.push_back(r);
		}
	}
	int best = 0;
	std::set<Vertex> used;
	auto rec = [&](auto &&self, size_t pos, int count) -> void {
		best = std::max(best, count);
		if (count + static_cast<int>(rest.size() - pos) <= best) {
			return;
		}
		for (size_t i = pos; i < rest.size(); ++i) {
			if (used.count(rest[i][0]) || used.count(rest[i][1])) {
				continue;
			}
			used.insert(rest[i].begin(), rest[i].end());
			self(self, i + 1, count + 1);
			used.erase(rest[i][0]);
			used.erase(rest[i][1]);
		}
	};
	rec(rec, 0, 0);
	return best;
}

} // namespace oracle
