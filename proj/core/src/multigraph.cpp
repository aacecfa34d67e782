#include "ctov/multigraph.hpp"

#include <algorithm>
#include <queue>

namespace ctov {

MultiGraph::MultiGraph(int n) : alive_(n, 1), adj_(n), num_alive_(n) {
	if (n < 0) {
		throw GraphError("negative vertex count");
	}
}

Vertex MultiGraph::add_vertex() {
	alive_.push_back(1);
	adj_.emplace_back();
	++num_alive_;
	return capacity() - 1;
}

VertexSet MultiGraph::vertices() const {
	VertexSet out;
	out.reserve(num_alive_);
	for (Vertex v = 0; v < capacity(); ++v) {
		if (alive_[v]) {
			out.push_back(v);
		}
	}
	return out;
}

void MultiGraph::check_vertex(Vertex v) const {
	if (!contains(v)) {
		throw GraphError("unknown vertex " + std::to_string(v));
	}
}

void MultiGraph::check_pair(Vertex u, Vertex v) const {
	check_vertex(u);
	check_vertex(v);
	if (u == v) {
		throw GraphError("self-loop at vertex " + std::to_string(u));
	}
}

int MultiGraph::multiplicity(Vertex u, Vertex v) const {
	check_vertex(u);
	check_vertex(v);
	auto it = adj_[u].find(v);
	return it == adj_[u].end() ? 0 : it->second;
}

void MultiGraph::add_edge(Vertex u, Vertex v, int mult) {
	check_pair(u, v);
	if (mult < 0) {
		throw GraphError("negative multiplicity");
	}
	if (mult == 0) {
		return;
	}
	adj_[u][v] += mult;
	adj_[v][u] += mult;
}

void MultiGraph::set_multiplicity(Vertex u, Vertex v, int mult) {
	check_pair(u, v);
	if (mult < 0) {
		throw GraphError("negative multiplicity");
	}
	if (mult == 0) {
		adj_[u].erase(v);
		adj_[v].erase(u);
	} else {
		adj_[u][v] = mult;
		adj_[v][u] = mult;
	}
}

void MultiGraph::remove_edge_unit(Vertex u, Vertex v) {
	const int m = multiplicity(u, v);
	if (m == 0) {
		throw GraphError("no edge between " + std::to_string(u) + " and " + std::to_string(v));
	}
	set_multiplicity(u, v, m - 1);
}

void MultiGraph::remove_vertex(Vertex v) {
	check_vertex(v);
	for (const auto &[u, m] : adj_[v]) {
		adj_[u].erase(v);
	}
	adj_[v].clear();
	alive_[v] = 0;
	--num_alive_;
}

void MultiGraph::remove_vertices(std::span<const Vertex> vs) {
	for (Vertex v : vs) {
		remove_vertex(v);
	}
}

const std::map<Vertex, int> &MultiGraph::incident(Vertex v) const {
	check_vertex(v);
	return adj_[v];
}

VertexSet MultiGraph::neighbors(Vertex v) const {
	const auto &inc = incident(v);
	VertexSet out;
	out.reserve(inc.size());
	for (const auto &[u, m] : inc) {
		out.push_back(u);
	}
	return out;
}

int MultiGraph::degree(Vertex v) const {
	int d = 0;
	for (const auto &[u, m] : incident(v)) {
		d += m;
	}
	return d;
}

int64_t MultiGraph::num_adjacent_pairs() const {
	int64_t twice = 0;
	for (Vertex v = 0; v < capacity(); ++v) {
		twice += static_cast<int64_t>(adj_[v].size());
	}
	return twice / 2;
}

int64_t MultiGraph::total_multiplicity() const {
	int64_t twice = 0;
	for (Vertex v = 0; v < capacity(); ++v) {
		for (const auto &[u, m] : adj_[v]) {
			twice += m;
		}
	}
	return twice / 2;
}

bool MultiGraph::is_simple() const {
	for (Vertex v = 0; v < capacity(); ++v) {
		for (const auto &[u, m] : adj_[v]) {
			if (m > 1) {
				return false;
			}
		}
	}
	return true;
}

MultiGraph MultiGraph::induced_subgraph(std::span<const Vertex> keep) const {
	std::vector<char> in(capacity(), 0);
	for (Vertex v : keep) {
		check_vertex(v);
		in[v] = 1;
	}
	MultiGraph out;
	out.alive_ = in;
	out.adj_.assign(capacity(), {});
	out.num_alive_ = static_cast<int>(std::count(in.begin(), in.end(), 1));
	for (Vertex v = 0; v < capacity(); ++v) {
		if (!in[v]) {
			continue;
		}
		for (const auto &[u, m] : adj_[v]) {
			if (in[u]) {
				out.adj_[v].emplace_hint(out.adj_[v].end(), u, m);
			}
		}
	}
	return out;
}

MultiGraph MultiGraph::without(std::span<const Vertex> drop) const {
	MultiGraph out = *this;
	for (Vertex v : drop) {
		if (out.contains(v)) {
			out.remove_vertex(v);
		}
	}
	return out;
}

VertexSet neighbor_set(const MultiGraph &g, Vertex v) {
	return g.neighbors(v);
}

int degree(const MultiGraph &g, Vertex v) {
	return g.degree(v);
}

int64_t rho(const MultiGraph &g, Vertex v) {
	const auto &inc = g.incident(v);
	int64_t count = 0;
	for (auto it = inc.begin(); it != inc.end(); ++it) {
		const auto &inner = g.incident(it->first);
		// count each pair once: only partners with a larger id
		for (auto jt = std::next(it); jt != inc.end(); ++jt) {
			if (inner.count(jt->first)) {
				++count;
			}
		}
	}
	return count;
}

namespace {

std::vector<char> membership(const MultiGraph &g, std::span<const Vertex> vs) {
	std::vector<char> in(g.capacity(), 0);
	for (Vertex v : vs) {
		if (!g.contains(v)) {
			throw GraphError("unknown vertex " + std::to_string(v));
		}
		in[v] = 1;
	}
	return in;
}

bool connected_within(const MultiGraph &g, std::span<const Vertex> vs, const std::vector<char> &in) {
	if (vs.empty()) {
		return false;
	}
	std::vector<char> seen(g.capacity(), 0);
	std::queue<Vertex> q;
	q.push(vs.front());
	seen[vs.front()] = 1;
	size_t reached = 1;
	while (!q.empty()) {
		Vertex v = q.front();
		q.pop();
		for (const auto &[u, m] : g.incident(v)) {
			if (in[u] && !seen[u]) {
				seen[u] = 1;
				++reached;
				q.push(u);
			}
		}
	}
	return reached == vs.size();
}

} // namespace

bool is_clique(const MultiGraph &g, std::span<const Vertex> vs) {
	auto in = membership(g, vs);
	const size_t need = vs.size() - 1;
	for (Vertex v : vs) {
		size_t inside = 0;
		for (const auto &[u, m] : g.incident(v)) {
			if (in[u]) {
				if (m != 1) {
					return false;
				}
				++inside;
			}
		}
		if (inside != need) {
			return false;
		}
	}
	return true;
}

bool is_tree(const MultiGraph &g, std::span<const Vertex> vs) {
	auto in = membership(g, vs);
	int64_t twice_edges = 0;
	for (Vertex v : vs) {
		for (const auto &[u, m] : g.incident(v)) {
			if (in[u]) {
				if (m > 1) {
					return false;
				}
				++twice_edges;
			}
		}
	}
	if (twice_edges / 2 != static_cast<int64_t>(vs.size()) - 1) {
		return false;
	}
	return connected_within(g, vs, in);
}

ComponentKind classify(const MultiGraph &g, std::span<const Vertex> connected) {
	if (is_clique(g, connected)) {
		return ComponentKind::Clique;
	}
	if (is_tree(g, connected)) {
		return ComponentKind::Tree;
	}
	return ComponentKind::Other;
}

std::vector<VertexSet> connected_components(const MultiGraph &g) {
	std::vector<VertexSet> out;
	std::vector<char> seen(g.capacity(), 0);
	for (Vertex s : g.vertices()) {
		if (seen[s]) {
			continue;
		}
		VertexSet comp;
		std::queue<Vertex> q;
		q.push(s);
		seen[s] = 1;
		while (!q.empty()) {
			Vertex v = q.front();
			q.pop();
			comp.push_back(v);
			for (const auto &[u, m] : g.incident(v)) {
				if (!seen[u]) {
					seen[u] = 1;
					q.push(u);
				}
			}
		}
		std::sort(comp.begin(), comp.end());
		out.push_back(std::move(comp));
	}
	return out;
}

std::vector<Component> components(const MultiGraph &g) {
	std::vector<Component> out;
	for (auto &vs : connected_components(g)) {
		const ComponentKind kind = classify(g, vs);
		out.push_back({std::move(vs), kind});
	}
	return out;
}

bool is_feasible_deletion(const MultiGraph &g, std::span<const Vertex> x) {
	const MultiGraph rest = g.without(x);
	for (const auto &vs : connected_components(rest)) {
		if (classify(rest, vs) == ComponentKind::Other) {
			return false;
		}
	}
	return true;
}

const char *to_string(ComponentKind kind) {
	switch (kind) {
	case ComponentKind::Clique:
		return "clique";
	case ComponentKind::Tree:
		return "tree";
	case ComponentKind::Other:
		return "other";
	}
	return "?";
}

} // namespace ctov
