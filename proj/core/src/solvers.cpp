#include "ctov/solvers.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <queue>
#include <stdexcept>

namespace ctov {

namespace {

std::optional<Obstruction> parallel_pair(const MultiGraph &g, const VertexSet &comp) {
	for (Vertex u : comp) {
		for (const auto &[w, m] : g.incident(u)) {
			if (w > u && m >= 2) {
				return Obstruction{ObstructionKind::InducedCycle, {u, w}};
			}
		}
	}
	return std::nullopt;
}

std::optional<Obstruction> paw_or_diamond(const MultiGraph &g, const VertexSet &comp) {
	std::optional<std::array<Vertex, 3>> triangle;
	for (Vertex a : comp) {
		const auto &na = g.incident(a);
		for (auto it = na.upper_bound(a); it != na.end() && !triangle; ++it) {
			const auto &nb = g.incident(it->first);
			for (auto jt = std::next(it); jt != na.end(); ++jt) {
				if (nb.count(jt->first)) {
					triangle = std::array<Vertex, 3>{a, it->first, jt->first};
					break;
				}
			}
		}
		if (triangle) {
			break;
		}
	}
	if (!triangle) {
		return std::nullopt;
	}

	VertexSet clique(triangle->begin(), triangle->end());
	for (Vertex x : comp) {
		if (std::binary_search(clique.begin(), clique.end(), x)) {
			continue;
		}
		if (std::all_of(clique.begin(), clique.end(), [&](Vertex q) { return g.adjacent(x, q); })) {
			clique.insert(std::upper_bound(clique.begin(), clique.end(), x), x);
		}
	}
	for (Vertex x : comp) {
		if (std::binary_search(clique.begin(), clique.end(), x)) {
			continue;
		}
		auto hit = std::find_if(clique.begin(), clique.end(), [&](Vertex q) { return g.adjacent(x, q); });
		if (hit == clique.end()) {
			continue;
		}
		const Vertex q1 = *hit;
		const Vertex q2 = *std::find_if(clique.begin(), clique.end(), [&](Vertex q) { return !g.adjacent(x, q); });
		std::optional<Vertex> q3_adjacent;
		std::optional<Vertex> q3_other;
		for (Vertex q : clique) {
			if (q == q1 || q == q2) {
				continue;
			}
			if (g.adjacent(x, q)) {
				q3_adjacent = q3_adjacent.value_or(q);
			} else {
				q3_other = q3_other.value_or(q);
			}
		}
		if (q3_adjacent) {
			VertexSet vs{x, q1, q2, *q3_adjacent};
			std::sort(vs.begin(), vs.end());
			return Obstruction{ObstructionKind::Diamond, vs};
		}
		VertexSet vs{x, q1, q2, *q3_other};
		std::sort(vs.begin(), vs.end());
		return Obstruction{ObstructionKind::Paw, vs};
	}
	// the component is a clique after all; callers only pass bad components
	return std::nullopt;
}

std::optional<Obstruction> shortest_cycle(const MultiGraph &g, const VertexSet &comp) {
	std::vector<int> dist(g.capacity(), -1);
	std::vector<Vertex> parent(g.capacity(), -1);
	int best_len = std::numeric_limits<int>::max();
	std::vector<Vertex> best;
	for (Vertex root : comp) {
		for (Vertex v : comp) {
			dist[v] = -1;
			parent[v] = -1;
		}
		std::queue<Vertex> q;
		q.push(root);
		dist[root] = 0;
		bool done = false;
		while (!q.empty() && !done) {
			const Vertex u = q.front();
			q.pop();
			for (const auto &[w, m] : g.incident(u)) {
				if (dist[w] == -1) {
					dist[w] = dist[u] + 1;
					parent[w] = u;
					q.push(w);
				} else if (w != parent[u]) {
					const int len = dist[u] + dist[w] + 1;
					if (len < best_len) {
						best_len = len;
						std::vector<Vertex> left;
						for (Vertex x = u; x != -1; x = parent[x]) {
							left.push_back(x);
						}
						std::vector<Vertex> right;
						for (Vertex x = w; x != -1; x = parent[x]) {
							right.push_back(x);
						}
						// left ends at root; walk root..u then w..(child of root)
						std::reverse(left.begin(), left.end());
						best = left;
						right.pop_back();
						best.insert(best.end(), right.begin(), right.end());
					}
					done = true;
					break;
				}
			}
		}
	}
	if (best.empty()) {
		return std::nullopt;
	}
	return Obstruction{ObstructionKind::InducedCycle, best};
}

bool obstruction_less(const Obstruction &a, const Obstruction &b) {
	if (a.vertices.size() != b.vertices.size()) {
		return a.vertices.size() < b.vertices.size();
	}
	VertexSet sa = a.vertices;
	VertexSet sb = b.vertices;
	std::sort(sa.begin(), sa.end());
	std::sort(sb.begin(), sb.end());
	return sa < sb;
}

std::optional<Obstruction> component_obstruction(const MultiGraph &g, const VertexSet &comp) {
	if (auto found = parallel_pair(g, comp)) {
		return found;
	}
	if (auto found = paw_or_diamond(g, comp)) {
		return found;
	}
	if (auto found = shortest_cycle(g, comp)) {
		return found;
	}
	throw std::logic_error("bad component without an obstruction");
}

// Vertex-disjoint obstructions found greedily; each needs its own deletion.
int packing_bound(MultiGraph g, int stop) {
	int count = 0;
	while (count <= stop) {
		auto obs = find_obstruction(g);
		if (!obs) {
			break;
		}
		++count;
		g.remove_vertices(obs->vertices);
	}
	return count;
}

std::optional<VertexSet> minimum(const MultiGraph &g, int budget);

// Some solution of size <= budget for a connected bad graph.
std::optional<VertexSet> branch(const MultiGraph &g, int budget) {
	if (budget == 0) {
		return std::nullopt;
	}
	auto obs = find_obstruction(g);
	VertexSet order = obs->vertices;
	std::sort(order.begin(), order.end());
	for (Vertex v : order) {
		MultiGraph rest = g;
		rest.remove_vertex(v);
		if (auto sub = minimum(rest, budget - 1)) {
			sub->insert(std::upper_bound(sub->begin(), sub->end(), v), v);
			return sub;
		}
	}
	return std::nullopt;
}

// Minimum solution when it has at most `budget` vertices. Bad components
// are independent, so each one is solved on its own by iterative deepening.
std::optional<VertexSet> minimum(const MultiGraph &g, int budget) {
	std::vector<MultiGraph> parts;
	std::vector<int> bounds;
	int total = 0;
	for (const auto &comp : connected_components(g)) {
		if (classify(g, comp) != ComponentKind::Other) {
			continue;
		}
		parts.push_back(g.induced_subgraph(comp));
		bounds.push_back(packing_bound(parts.back(), budget));
		total += bounds.back();
		if (total > budget) {
			return std::nullopt;
		}
	}
	VertexSet out;
	int slack = budget - total;
	for (size_t i = 0; i < parts.size(); ++i) {
		std::optional<VertexSet> sol;
		for (int b = bounds[i]; b <= bounds[i] + slack && !sol; ++b) {
			sol = branch(parts[i], b);
		}
		if (!sol) {
			return std::nullopt;
		}
		slack -= static_cast<int>(sol->size()) - bounds[i];
		out.insert(out.end(), sol->begin(), sol->end());
	}
	std::sort(out.begin(), out.end());
	return out;
}

} // namespace

std::optional<Obstruction> find_obstruction(const MultiGraph &g) {
	std::optional<Obstruction> best;
	for (const auto &comp : connected_components(g)) {
		if (classify(g, comp) != ComponentKind::Other) {
			continue;
		}
		auto found = component_obstruction(g, comp);
		if (!best || obstruction_less(*found, *best)) {
			best = std::move(found);
		}
	}
	return best;
}

std::optional<VertexSet> exact_ctov(const MultiGraph &g, int budget) {
	if (budget < 0) {
		return std::nullopt;
	}
	return minimum(g, budget);
}

std::optional<VertexSet> brute_force_ctov(const MultiGraph &g, int budget, int cap) {
	const VertexSet ids = g.vertices();
	const int n = static_cast<int>(ids.size());
	if (n > cap || n > 31) {
		throw std::invalid_argument("brute_force_ctov: " + std::to_string(n) + " vertices exceed the oracle cap");
	}
	std::vector<int> local(g.capacity(), -1);
	for (int i = 0; i < n; ++i) {
		local[ids[i]] = i;
	}
	std::vector<uint32_t> adj(n, 0);
	std::vector<uint32_t> multi(n, 0);
	for (int i = 0; i < n; ++i) {
		for (const auto &[w, m] : g.incident(ids[i])) {
			adj[i] |= 1u << local[w];
			if (m >= 2) {
				multi[i] |= 1u << local[w];
			}
		}
	}
	const uint32_t all = n == 32 ? ~0u : ((1u << n) - 1);

	auto feasible = [&](uint32_t removed) {
		uint32_t left = all & ~removed;
		while (left) {
			uint32_t comp = left & (~left + 1);
			uint32_t frontier = comp;
			while (frontier) {
				uint32_t next = 0;
				for (uint32_t f = frontier; f; f &= f - 1) {
					next |= adj[std::countr_zero(f)];
				}
				next &= left & ~comp;
				comp |= next;
				frontier = next;
			}
			left &= ~comp;
			int64_t twice = 0;
			for (uint32_t c = comp; c; c &= c - 1) {
				const int u = std::countr_zero(c);
				if (multi[u] & comp) {
					return false;
				}
				twice += std::popcount(adj[u] & comp);
			}
			const int64_t size = std::popcount(comp);
			const int64_t edges = twice / 2;
			if (edges != size - 1 && edges != size * (size - 1) / 2) {
				return false;
			}
		}
		return true;
	};

	for (int s = 0; s <= std::min(budget, n); ++s) {
		if (s == 0) {
			if (feasible(0)) {
				return VertexSet{};
			}
			continue;
		}
		// Gosper's hack over all s-subsets in increasing numeric order
		uint64_t x = (uint64_t{1} << s) - 1;
		const uint64_t limit = uint64_t{1} << n;
		while (x < limit) {
			if (feasible(static_cast<uint32_t>(x))) {
				VertexSet out;
				for (uint64_t c = x; c; c &= c - 1) {
					out.push_back(ids[std::countr_zero(c)]);
				}
				return out;
			}
			const uint64_t low = x & (~x + 1);
			const uint64_t ripple = x + low;
			x = (((ripple ^ x) >> 2) / low) | ripple;
		}
	}
	return std::nullopt;
}

VertexSet approx_ctov(const MultiGraph &g) {
	MultiGraph rest = g;
	VertexSet out;
	while (auto obs = find_obstruction(rest)) {
		std::vector<Vertex> drop;
		if (obs->kind == ObstructionKind::InducedCycle && obs->vertices.size() > 2) {
			Vertex pick = obs->vertices.front();
			for (Vertex v : obs->vertices) {
				if (rest.degree(v) > rest.degree(pick) || (rest.degree(v) == rest.degree(pick) && v < pick)) {
					pick = v;
				}
			}
			drop.push_back(pick);
		} else {
			drop = obs->vertices;
		}
		for (Vertex v : drop) {
			rest.remove_vertex(v);
			out.push_back(v);
		}
	}
	std::sort(out.begin(), out.end());
	return out;
}

std::optional<int> brute_force_longest_cycle(const MultiGraph &g, int cap) {
	const VertexSet ids = g.vertices();
	const int n = static_cast<int>(ids.size());
	if (n > cap || n > 20) {
		throw std::invalid_argument("brute_force_longest_cycle: " + std::to_string(n) + " vertices exceed the oracle cap");
	}
	if (!g.is_simple()) {
		throw std::invalid_argument("brute_force_longest_cycle: graph has parallel edges");
	}
	std::vector<int> local(g.capacity(), -1);
	for (int i = 0; i < n; ++i) {
		local[ids[i]] = i;
	}
	std::vector<uint32_t> adj(n, 0);
	for (int i = 0; i < n; ++i) {
		for (const auto &[w, m] : g.incident(ids[i])) {
			adj[i] |= 1u << local[w];
		}
	}

	int best = 0;
	// cycles are rooted at their smallest vertex s; paths grow over vertices > s
	for (int s = 0; s < n; ++s) {
		const int free_bits = n - s - 1;
		std::vector<uint32_t> ends(size_t{1} << free_bits, 0);
		ends[0] = 1u << s;
		for (uint32_t sub = 0; sub < (1u << free_bits); ++sub) {
			const uint32_t reach = ends[sub];
			if (!reach) {
				continue;
			}
			const uint32_t mask = (sub << (s + 1)) | (1u << s);
			const int len = std::popcount(mask);
			for (uint32_t r = reach; r; r &= r - 1) {
				const int e = std::countr_zero(r);
				if (len >= 3 && (adj[e] >> s & 1u)) {
					best = std::max(best, len);
				}
				uint32_t grow = adj[e] & ~mask & ~((2u << s) - 1);
				for (; grow; grow &= grow - 1) {
					const int w = std::countr_zero(grow);
					ends[sub | (1u << (w - s - 1))] |= 1u << w;
				}
			}
		}
	}
	if (best == 0) {
		return std::nullopt;
	}
	return best;
}

const char *to_string(ObstructionKind kind) {
	switch (kind) {
	case ObstructionKind::Paw:
		return "paw";
	case ObstructionKind::Diamond:
		return "diamond";
	case ObstructionKind::InducedCycle:
		return "induced-cycle";
	}
	return "?";
}

} // namespace ctov
