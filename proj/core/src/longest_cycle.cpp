#include "ctov/longest_cycle.hpp"

#include <algorithm>
#include <queue>
#include <tuple>

namespace ctov {

namespace {

VertexSet attachments(const MultiGraph &g, Vertex s, const VertexSet &comp) {
	VertexSet out;
	for (Vertex x : comp) {
		if (g.adjacent(s, x)) {
			out.push_back(x);
		}
	}
	return out;
}

std::vector<int> bfs_dist(const MultiGraph &g, Vertex from, const VertexSet &comp) {
	std::vector<int> dist(g.capacity(), -1);
	std::queue<Vertex> q;
	q.push(from);
	dist[from] = 0;
	while (!q.empty()) {
		const Vertex x = q.front();
		q.pop();
		for (const auto &[y, m] : g.incident(x)) {
			if (dist[y] == -1 && std::binary_search(comp.begin(), comp.end(), y)) {
				dist[y] = dist[x] + 1;
				q.push(y);
			}
		}
	}
	return dist;
}

const std::vector<int> kNoLabels;

} // namespace

std::optional<int> q_value(const MultiGraph &g, const VertexSet &component, Vertex u, Vertex v) {
	const ComponentKind kind = classify(g, component);
	if (kind == ComponentKind::Other) {
		throw GraphError("q is defined for clique and tree components only");
	}
	const VertexSet au = attachments(g, u, component);
	const VertexSet av = attachments(g, v, component);
	if (au.empty() || av.empty()) {
		return std::nullopt;
	}
	if (kind == ComponentKind::Clique) {
		if (au.size() == 1 && av.size() == 1 && au[0] == av[0]) {
			return 2;
		}
		return static_cast<int>(component.size()) + 1;
	}
	int best = 0;
	for (Vertex wu : au) {
		const auto dist = bfs_dist(g, wu, component);
		for (Vertex wv : av) {
			best = std::max(best, dist[wv]);
		}
	}
	return best + 2;
}

const std::vector<int> &LabelTable::of(Vertex u, Vertex v) const {
	auto it = labels.find({u, v});
	return it == labels.end() ? kNoLabels : it->second;
}

LabelTable label_components(const MultiGraph &g, const VertexSet &s) {
	LabelTable table;
	table.components = connected_components(g.without(s));
	const size_t top = s.size();
	for (Vertex u : s) {
		for (Vertex v : s) {
			std::vector<std::pair<int, int>> scored;  // (-q, index)
			for (int ci = 0; ci < static_cast<int>(table.components.size()); ++ci) {
				if (auto q = q_value(g, table.components[ci], u, v); q && *q > 0) {
					scored.emplace_back(-*q, ci);
				}
			}
			std::sort(scored.begin(), scored.end());
			auto &out = table.labels[{u, v}];
			for (size_t i = 0; i < scored.size() && i < top; ++i) {
				out.push_back(scored[i].second);
			}
		}
	}
	return table;
}

namespace {

class Driver {
public:
	Driver(const MultiGraph &g, const VertexSet &s, const LongestCycleOptions &opts)
			: g_(g), s_(s), labels_(label_components(g, s)) {
		if (opts.all_components) {
			for (Vertex u : s_) {
				for (Vertex v : s_) {
					auto &out = labels_.labels[{u, v}];
					out.clear();
					for (int ci = 0; ci < static_cast<int>(labels_.components.size()); ++ci) {
						if (q_value(g_, labels_.components[ci], u, v)) {
							out.push_back(ci);
						}
					}
				}
			}
		}
	}

	std::optional<int> run() {
		for (const auto &comp : labels_.components) {
			if (comp.size() >= 3 && is_clique(g_, comp)) {
				best_ = std::max<int64_t>(best_, comp.size());
			}
		}
		std::vector<Vertex> seq;
		std::vector<char> used(s_.size(), 0);
		for (size_t first = 0; first < s_.size(); ++first) {
			// v_1 is the smallest vertex of the sequence
			seq = {s_[first]};
			used.assign(s_.size(), 0);
			used[first] = 1;
			extend(seq, used, first);
		}
		if (best_ <= 0) {
			return std::nullopt;
		}
		return static_cast<int>(best_);
	}

private:
	void extend(std::vector<Vertex> &seq, std::vector<char> &used, size_t first) {
		const size_t l = seq.size();
		// reflections: require v_2 < v_l once l >= 3
		if (l < 3 || seq[1] < seq.back()) {
			std::vector<int> choice;
			assign(seq, choice);
		}
		for (size_t j = first + 1; j < s_.size(); ++j) {
			if (used[j]) {
				continue;
			}
			used[j] = 1;
			seq.push_back(s_[j]);
			extend(seq, used, first);
			seq.pop_back();
			used[j] = 0;
		}
	}

	// choice[i] = component index for fragment i, or -1 for a direct edge
	void assign(const std::vector<Vertex> &seq, std::vector<int> &choice) {
		const size_t l = seq.size();
		const size_t i = choice.size();
		if (i == l) {
			evaluate(seq, choice);
			return;
		}
		const Vertex a = seq[i];
		const Vertex b = seq[(i + 1) % l];
		if (a != b && g_.adjacent(a, b)) {
			const bool all_direct = l == 2 && i == 1 && choice[0] == -1;
			if (!all_direct) {
				choice.push_back(-1);
				assign(seq, choice);
				choice.pop_back();
			}
		}
		for (int ci : labels_.of(a, b)) {
			choice.push_back(ci);
			assign(seq, choice);
			choice.pop_back();
		}
	}

	void evaluate(const std::vector<Vertex> &seq, const std::vector<int> &choice) {
		const size_t l = seq.size();
		std::map<int, std::vector<std::tuple<Vertex, Vertex, int>>> groups;
		int64_t total = static_cast<int64_t>(l);
		for (size_t i = 0; i < l; ++i) {
			if (choice[i] >= 0) {
				const Vertex a = seq[i];
				const Vertex b = seq[(i + 1) % l];
				groups[choice[i]].emplace_back(a, b, a == b ? 1 : 0);
				++total;
			}
		}
		for (auto &[ci, pairs] : groups) {
			const auto value = solve(ci, pairs);
			if (!value) {
				return;
			}
			total += *value;
		}
		best_ = std::max(best_, total);
	}

	std::optional<int64_t> solve(int ci, const std::vector<std::tuple<Vertex, Vertex, int>> &pairs) {
		auto key = std::make_pair(ci, pairs);
		auto it = memo_.find(key);
		if (it != memo_.end()) {
			return it->second;
		}
		const VertexSet &comp = labels_.components[ci];
		LdtpInstance inst;
		inst.host = g_.induced_subgraph(comp);
		for (const auto &[a, b, me] : pairs) {
			inst.pairs.emplace_back(attachments(g_, a, comp), attachments(g_, b, comp));
			inst.min_edges.push_back(me);
		}
		auto value = ldtp(inst);
		memo_.emplace(std::move(key), value);
		return value;
	}

	const MultiGraph &g_;
	const VertexSet &s_;
	LabelTable labels_;
	int64_t best_ = 0;
	std::map<std::pair<int, std::vector<std::tuple<Vertex, Vertex, int>>>, std::optional<int64_t>> memo_;
};

} // namespace

std::optional<int> longest_cycle(const MultiGraph &g, const VertexSet &s_in, const LongestCycleOptions &opts) {
	if (!g.is_simple()) {
		throw GraphError("longest cycle needs a simple graph");
	}
	VertexSet s = s_in;
	std::sort(s.begin(), s.end());
	s.erase(std::unique(s.begin(), s.end()), s.end());
	for (Vertex v : s) {
		if (!g.contains(v)) {
			throw GraphError("S names unknown vertex " + std::to_string(v));
		}
	}
	if (!is_feasible_deletion(g, s)) {
		throw GraphError("G - S has a component that is neither a clique nor a tree");
	}
	Driver driver(g, s, opts);
	return driver.run();
}

} // namespace ctov
