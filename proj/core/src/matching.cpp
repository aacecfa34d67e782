#include <algorithm>
#include <limits>
#include <queue>
#include <stdexcept>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/max_cardinality_matching.hpp>

#include "ctov/structure.hpp"

namespace ctov {

namespace {

class HopcroftKarp {
public:
	HopcroftKarp(int n_left, int n_right, const std::vector<IndexPair> &edges)
		: adj_(n_left), pair_left_(n_left, -1), pair_right_(n_right, -1), dist_(n_left) {
		for (const auto &[l, r] : edges) {
			if (l < 0 || l >= n_left || r < 0 || r >= n_right) {
				throw std::invalid_argument("bipartite edge out of range");
			}
			adj_[l].push_back(r);
		}
		for (auto &a : adj_) {
			std::sort(a.begin(), a.end());
			a.erase(std::unique(a.begin(), a.end()), a.end());
		}
	}

	std::vector<IndexPair> run() {
		while (bfs()) {
			for (int l = 0; l < static_cast<int>(adj_.size()); ++l) {
				if (pair_left_[l] == -1) {
					dfs(l);
				}
			}
		}
		std::vector<IndexPair> out;
		for (int l = 0; l < static_cast<int>(adj_.size()); ++l) {
			if (pair_left_[l] != -1) {
				out.emplace_back(l, pair_left_[l]);
			}
		}
		return out;
	}

private:
	static constexpr int kInf = std::numeric_limits<int>::max();

	bool bfs() {
		std::queue<int> q;
		for (int l = 0; l < static_cast<int>(adj_.size()); ++l) {
			if (pair_left_[l] == -1) {
				dist_[l] = 0;
				q.push(l);
			} else {
				dist_[l] = kInf;
			}
		}
		bool found = false;
		while (!q.empty()) {
			int l = q.front();
			q.pop();
			for (int r : adj_[l]) {
				int next = pair_right_[r];
				if (next == -1) {
					found = true;
				} else if (dist_[next] == kInf) {
					dist_[next] = dist_[l] + 1;
					q.push(next);
				}
			}
		}
		return found;
	}

	bool dfs(int l) {
		for (int r : adj_[l]) {
			int next = pair_right_[r];
			if (next == -1 || (dist_[next] == dist_[l] + 1 && dfs(next))) {
				pair_left_[l] = r;
				pair_right_[r] = l;
				return true;
			}
		}
		dist_[l] = kInf;
		return false;
	}

	std::vector<std::vector<int>> adj_;
	std::vector<int> pair_left_;
	std::vector<int> pair_right_;
	std::vector<int> dist_;
};

} // namespace

std::vector<IndexPair> max_bipartite_matching(int n_left, int n_right, const std::vector<IndexPair> &edges) {
	return HopcroftKarp(n_left, n_right, edges).run();
}

std::vector<IndexPair> max_general_matching(int n, const std::vector<IndexPair> &edges) {
	using Graph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS>;
	Graph graph(n);
	for (const auto &[a, b] : edges) {
		if (a < 0 || a >= n || b < 0 || b >= n || a == b) {
			throw std::invalid_argument("matching edge out of range");
		}
		boost::add_edge(a, b, graph);
	}
	std::vector<boost::graph_traits<Graph>::vertex_descriptor> mate(n);
	boost::edmonds_maximum_cardinality_matching(graph, mate.data());

	std::vector<IndexPair> out;
	const auto null = boost::graph_traits<Graph>::null_vertex();
	for (int a = 0; a < n; ++a) {
		if (mate[a] != null && static_cast<int>(mate[a]) > a) {
			out.emplace_back(a, static_cast<int>(mate[a]));
		}
	}
	return out;
}

} // namespace ctov
