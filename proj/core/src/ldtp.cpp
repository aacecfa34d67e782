#include <algorithm>
#include <stdexcept>

#include "ctov/longest_cycle.hpp"
#include "ctov/structure.hpp"

namespace ctov {

namespace {

void check_pairs(const LdtpInstance &inst) {
	if (inst.min_edges.size() != inst.pairs.size() && !inst.min_edges.empty()) {
		throw std::invalid_argument("min_edges must match the number of pairs");
	}
	if (inst.pairs.size() > 20) {
		throw std::invalid_argument("too many terminal pairs");
	}
	for (const auto &[a, b] : inst.pairs) {
		for (const VertexSet *side : {&a, &b}) {
			for (Vertex x : *side) {
				if (!inst.host.contains(x)) {
					throw GraphError("terminal " + std::to_string(x) + " is not a host vertex");
				}
			}
		}
	}
}

int min_edge(const LdtpInstance &inst, size_t i) {
	return inst.min_edges.empty() ? 0 : inst.min_edges[i];
}

int64_t add(int64_t a, int64_t b) {
	return (a == kNegInf || b == kNegInf) ? kNegInf : a + b;
}

} // namespace

std::optional<int64_t> ldtp_clique(const LdtpInstance &inst) {
	check_pairs(inst);
	const VertexSet hosts = inst.host.vertices();
	std::vector<int> local(inst.host.capacity(), -1);
	for (int i = 0; i < static_cast<int>(hosts.size()); ++i) {
		local[hosts[i]] = i;
	}
	const int l = static_cast<int>(inst.pairs.size());
	bool zero_ok = false;
	for (uint32_t f = 0; f < (1u << l); ++f) {
		bool allowed = true;
		for (int i = 0; i < l; ++i) {
			allowed = allowed && static_cast<int>((f >> i) & 1u) >= min_edge(inst, i);
		}
		if (!allowed) {
			continue;
		}
		std::vector<VertexSet> family;
		for (int i = 0; i < l; ++i) {
			const auto &[a, b] = inst.pairs[i];
			if ((f >> i) & 1u) {
				family.push_back(a);
				family.push_back(b);
			} else {
				VertexSet both;
				std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(both));
				family.push_back(both);
			}
		}
		std::vector<IndexPair> edges;
		for (int d = 0; d < static_cast<int>(family.size()); ++d) {
			for (Vertex x : family[d]) {
				edges.emplace_back(d, local[x]);
			}
		}
		const auto m = max_bipartite_matching(static_cast<int>(family.size()), static_cast<int>(hosts.size()), edges);
		if (m.size() != family.size()) {
			continue;
		}
		if (f != 0) {
			return static_cast<int64_t>(hosts.size()) - l;
		}
		zero_ok = true;
	}
	if (zero_ok) {
		return 0;
	}
	return std::nullopt;
}

TreeDpTables ldtp_tree_tables(const LdtpInstance &inst) {
	check_pairs(inst);
	const MultiGraph &t = inst.host;
	const VertexSet hosts = t.vertices();
	if (hosts.empty() || !is_tree(t, hosts)) {
		throw GraphError("tree solver needs a tree host");
	}
	const int l = static_cast<int>(inst.pairs.size());
	const uint32_t full = (1u << l) - 1;
	const size_t n_sets = size_t{1} << l;
	auto idx1 = [l](uint32_t z, int i, int f) { return (static_cast<size_t>(z) * l + i) * 2 + (f - 1); };

	TreeDpTables tab;
	tab.l = l;
	tab.root = hosts.front();

	// iterative DFS order, parents before children
	std::vector<Vertex> order;
	std::map<Vertex, Vertex> parent;
	std::vector<Vertex> stack{tab.root};
	parent[tab.root] = -1;
	while (!stack.empty()) {
		const Vertex v = stack.back();
		stack.pop_back();
		order.push_back(v);
		auto &kids = tab.children[v];
		for (const auto &[u, m] : t.incident(v)) {
			if (u != parent[v]) {
				parent[u] = v;
				kids.push_back(u);
				stack.push_back(u);
			}
		}
	}

	auto member = [&](int i, int f, Vertex v) {
		const VertexSet &side = f == 1 ? inst.pairs[i].first : inst.pairs[i].second;
		return std::binary_search(side.begin(), side.end(), v);
	};

	for (auto it = order.rbegin(); it != order.rend(); ++it) {
		const Vertex v = *it;
		std::vector<int64_t> aux0(n_sets, kNegInf);
		std::vector<int64_t> aux1(n_sets * l * 2, kNegInf);
		std::vector<int64_t> aux2(n_sets, kNegInf);
		aux0[0] = 0;
		aux2[0] = 0;
		for (int i = 0; i < l; ++i) {
			for (int f = 1; f <= 2; ++f) {
				if (member(i, f, v)) {
					aux1[idx1(0, i, f)] = 0;
				}
			}
			if (member(i, 1, v) && member(i, 2, v) && min_edge(inst, i) == 0) {
				aux2[1u << i] = 0;
			}
		}

		for (Vertex c : tab.children[v]) {
			const auto &c2 = tab.dp2[c];
			const auto &c1 = tab.dp1[c];
			std::vector<int64_t> n0(n_sets, kNegInf);
			std::vector<int64_t> n1(n_sets * l * 2, kNegInf);
			std::vector<int64_t> n2(n_sets, kNegInf);
			for (uint32_t z = 0; z <= full; ++z) {
				// Z' ranges over all subsets of Z, including Z itself and the empty set
				for (uint32_t zp = z;; zp = (zp - 1) & z) {
					const uint32_t rest = z & ~zp;
					n0[z] = std::max(n0[z], add(aux0[zp], c2[rest]));
					n2[z] = std::max(n2[z], add(aux2[zp], c2[rest]));
					for (int i = 0; i < l; ++i) {
						if ((z >> i) & 1u) {
							continue;
						}
						for (int f = 1; f <= 2; ++f) {
							int64_t &cell = n1[idx1(z, i, f)];
							cell = std::max(cell, add(aux1[idx1(zp, i, f)], c2[rest]));
							cell = std::max(cell, add(add(aux0[zp], c1[idx1(rest, i, f)]), 1));
						}
					}
					if (zp == 0) {
						break;
					}
				}
				// one path crosses the v - c edge
				for (int i = 0; i < l; ++i) {
					if (!((z >> i) & 1u)) {
						continue;
					}
					const uint32_t zi = z & ~(1u << i);
					for (uint32_t zp = zi;; zp = (zp - 1) & zi) {
						const uint32_t rest = zi & ~zp;
						for (int f = 1; f <= 2; ++f) {
							n2[z] = std::max(n2[z], add(add(aux1[idx1(zp, i, f)], c1[idx1(rest, i, 3 - f)]), 1));
						}
						if (zp == 0) {
							break;
						}
					}
				}
			}
			aux0.swap(n0);
			aux1.swap(n1);
			aux2.swap(n2);
		}
		tab.dp1[v] = std::move(aux1);
		tab.dp2[v] = std::move(aux2);
	}
	return tab;
}

std::optional<int64_t> ldtp_tree(const LdtpInstance &inst) {
	const TreeDpTables tab = ldtp_tree_tables(inst);
	const uint32_t full = (1u << tab.l) - 1;
	const int64_t value = tab.get_dp2(tab.root, full);
	if (value == kNegInf) {
		return std::nullopt;
	}
	return value;
}

std::optional<int64_t> ldtp(const LdtpInstance &inst) {
	const VertexSet hosts = inst.host.vertices();
	if (is_clique(inst.host, hosts)) {
		return ldtp_clique(inst);
	}
	if (is_tree(inst.host, hosts)) {
		return ldtp_tree(inst);
	}
	throw GraphError("LDTP host must be a clique or a tree");
}

} // namespace ctov
