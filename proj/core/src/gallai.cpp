#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "ctov/structure.hpp"

namespace ctov {

namespace {

// Auxiliary graph for disjoint T-paths in H = G - v - (2-cycle partners),
// T = remaining neighbours of v. Terminals get one node, every other vertex
// gets two adjacent twin nodes; every H-edge joins all copies of its ends.
// The maximum number of disjoint T-paths equals mu(aux) - #non-terminals.
struct TPathAux {
	std::vector<Vertex> original;  // node -> vertex
	std::vector<int> twin;         // node -> twin node, -1 for terminals
	std::vector<IndexPair> edges;
	int non_terminals = 0;

	bool terminal(int node) const { return twin[node] == -1; }
	int size() const { return static_cast<int>(original.size()); }
};

struct FlowerAnalysis {
	VertexSet two_cycle_partners;
	TPathAux aux;
	std::vector<IndexPair> matching;
	std::vector<std::vector<Vertex>> t_paths;
};

TPathAux build_aux(const MultiGraph &g, Vertex v, const VertexSet &skip) {
	TPathAux aux;
	std::vector<char> excluded(g.capacity(), 0);
	excluded[v] = 1;
	for (Vertex u : skip) {
		excluded[u] = 1;
	}
	std::vector<char> is_terminal(g.capacity(), 0);
	for (const auto &[u, m] : g.incident(v)) {
		is_terminal[u] = 1;
	}

	std::vector<std::vector<int>> copies(g.capacity());
	for (Vertex x : g.vertices()) {
		if (excluded[x]) {
			continue;
		}
		if (is_terminal[x]) {
			copies[x] = {aux.size()};
			aux.original.push_back(x);
			aux.twin.push_back(-1);
		} else {
			const int a = aux.size();
			copies[x] = {a, a + 1};
			aux.original.insert(aux.original.end(), {x, x});
			aux.twin.insert(aux.twin.end(), {a + 1, a});
			aux.edges.emplace_back(a, a + 1);
			++aux.non_terminals;
		}
	}
	for (Vertex x : g.vertices()) {
		if (excluded[x]) {
			continue;
		}
		for (const auto &[y, m] : g.incident(x)) {
			if (y <= x || excluded[y]) {
				continue;
			}
			for (int cx : copies[x]) {
				for (int cy : copies[y]) {
					aux.edges.emplace_back(cx, cy);
				}
			}
		}
	}
	return aux;
}

std::vector<int> mates(int n, const std::vector<IndexPair> &matching) {
	std::vector<int> mate(n, -1);
	for (const auto &[a, b] : matching) {
		mate[a] = b;
		mate[b] = a;
	}
	return mate;
}

// Alternating walks of (matching xor twin edges) that start and end at
// terminals; their projections are vertex-disjoint T-paths.
std::vector<std::vector<Vertex>> extract_t_paths(const TPathAux &aux, const std::vector<IndexPair> &matching) {
	const auto mate = mates(aux.size(), matching);
	std::vector<char> used(aux.size(), 0);
	std::vector<std::vector<Vertex>> paths;
	for (int start = 0; start < aux.size(); ++start) {
		if (!aux.terminal(start) || used[start] || mate[start] == -1) {
			continue;
		}
		std::vector<Vertex> path{aux.original[start]};
		int cur = start;
		bool ok = false;
		while (true) {
			const int next = mate[cur];
			path.push_back(aux.original[next]);
			if (aux.terminal(next)) {
				used[next] = 1;
				ok = true;
				break;
			}
			cur = aux.twin[next];
			if (mate[cur] == -1) {
				break;
			}
		}
		used[start] = 1;
		if (ok) {
			paths.push_back(std::move(path));
		}
	}
	return paths;
}

FlowerAnalysis analyse(const MultiGraph &g, Vertex v) {
	if (!g.contains(v)) {
		throw GraphError("unknown vertex " + std::to_string(v));
	}
	FlowerAnalysis out;
	for (const auto &[u, m] : g.incident(v)) {
		if (m >= 2) {
			out.two_cycle_partners.push_back(u);
		}
	}
	out.aux = build_aux(g, v, out.two_cycle_partners);
	out.matching = max_general_matching(out.aux.size(), out.aux.edges);
	out.t_paths = extract_t_paths(out.aux, out.matching);
	const int expected = static_cast<int>(out.matching.size()) - out.aux.non_terminals;
	if (static_cast<int>(out.t_paths.size()) != expected) {
		throw std::logic_error("T-path extraction disagrees with matching size");
	}
	return out;
}

Flower to_flower(Vertex v, const FlowerAnalysis &a) {
	Flower f;
	for (Vertex u : a.two_cycle_partners) {
		f.cycles.push_back({v, u});
	}
	for (const auto &p : a.t_paths) {
		std::vector<Vertex> cycle{v};
		cycle.insert(cycle.end(), p.begin(), p.end());
		f.cycles.push_back(std::move(cycle));
	}
	return f;
}

// Edmonds-Gallai decomposition of the auxiliary graph: D = nodes missed by
// some maximum matching, A = N(D) \ D. Removing A, all of C's terminals and
// all but one terminal of every D-component leaves no T-path.
Blocker to_blocker(const FlowerAnalysis &a) {
	const TPathAux &aux = a.aux;
	const int n = aux.size();
	const auto mate = mates(n, a.matching);
	const size_t mu = a.matching.size();

	std::vector<char> in_d(n, 0);
	std::vector<char> decided(n, 0);
	for (int x = 0; x < n; ++x) {
		if (decided[x]) {
			continue;
		}
		bool missable = mate[x] == -1;
		if (!missable) {
			std::vector<IndexPair> rest;
			rest.reserve(aux.edges.size());
			for (const auto &e : aux.edges) {
				if (e.first != x && e.second != x) {
					rest.push_back(e);
				}
			}
			missable = max_general_matching(n, rest).size() == mu;
		}
		in_d[x] = missable;
		decided[x] = 1;
		// twins are interchangeable, so they share the class
		if (!aux.terminal(x)) {
			in_d[aux.twin[x]] = missable;
			decided[aux.twin[x]] = 1;
		}
	}

	std::vector<std::vector<int>> adj(n);
	for (const auto &[p, q] : aux.edges) {
		adj[p].push_back(q);
		adj[q].push_back(p);
	}
	std::vector<char> in_a(n, 0);
	for (int x = 0; x < n; ++x) {
		if (in_d[x]) {
			continue;
		}
		for (int y : adj[x]) {
			if (in_d[y]) {
				in_a[x] = 1;
				break;
			}
		}
	}

	VertexSet b = a.two_cycle_partners;
	for (int x = 0; x < n; ++x) {
		if (in_a[x] || (!in_d[x] && aux.terminal(x))) {
			b.push_back(aux.original[x]);
		}
	}
	std::vector<char> seen(n, 0);
	for (int s = 0; s < n; ++s) {
		if (!in_d[s] || seen[s]) {
			continue;
		}
		std::vector<Vertex> terminals;
		std::vector<int> stack{s};
		seen[s] = 1;
		while (!stack.empty()) {
			int x = stack.back();
			stack.pop_back();
			if (aux.terminal(x)) {
				terminals.push_back(aux.original[x]);
			}
			for (int y : adj[x]) {
				if (in_d[y] && !seen[y]) {
					seen[y] = 1;
					stack.push_back(y);
				}
			}
		}
		std::sort(terminals.begin(), terminals.end());
		b.insert(b.end(), terminals.begin() + std::min<size_t>(1, terminals.size()), terminals.end());
	}
	std::sort(b.begin(), b.end());
	b.erase(std::unique(b.begin(), b.end()), b.end());

	const size_t order = a.two_cycle_partners.size() + a.t_paths.size();
	if (b.size() > 2 * order) {
		throw std::logic_error("Gallai blocker exceeds twice the flower order");
	}
	return Blocker{std::move(b)};
}

} // namespace

Flower max_flower(const MultiGraph &g, Vertex v) {
	return to_flower(v, analyse(g, v));
}

FlowerOrBlocker gallai_flower_or_blocker(const MultiGraph &g, Vertex v, int t) {
	if (t < 0) {
		throw std::invalid_argument("flower order bound must be non-negative");
	}
	const FlowerAnalysis a = analyse(g, v);
	const size_t order = a.two_cycle_partners.size() + a.t_paths.size();
	if (order >= static_cast<size_t>(t) + 1) {
		return to_flower(v, a);
	}
	return to_blocker(a);
}

} // namespace ctov
