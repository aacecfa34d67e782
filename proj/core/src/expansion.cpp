#include <algorithm>
#include <map>
#include <stdexcept>

#include "ctov/structure.hpp"

namespace ctov {

namespace {

std::map<int, int> index_of(const std::vector<int> &ids, const char *side) {
	std::map<int, int> out;
	for (int i = 0; i < static_cast<int>(ids.size()); ++i) {
		if (!out.emplace(ids[i], i).second) {
			throw std::invalid_argument(std::string("duplicate id on ") + side + " side");
		}
	}
	return out;
}

} // namespace

Expansion q_expansion(const std::vector<int> &k_side, const std::vector<int> &l_side,
		const std::vector<IndexPair> &edges, int q) {
	if (q < 1) {
		throw std::invalid_argument("q must be positive");
	}
	if (k_side.empty()) {
		throw std::invalid_argument("expansion needs a nonempty K");
	}
	if (l_side.size() < static_cast<size_t>(q) * k_side.size()) {
		throw std::invalid_argument("expansion needs |L| >= q|K|");
	}
	const auto k_index = index_of(k_side, "K");
	const auto l_index = index_of(l_side, "L");
	const int nk = static_cast<int>(k_side.size());
	const int nl = static_cast<int>(l_side.size());

	std::vector<std::vector<int>> k_adj(nk);
	std::vector<std::vector<int>> l_adj(nl);
	for (const auto &[k, l] : edges) {
		auto ki = k_index.find(k);
		auto li = l_index.find(l);
		if (ki == k_index.end() || li == l_index.end()) {
			throw std::invalid_argument("expansion edge endpoint not in K or L");
		}
		k_adj[ki->second].push_back(li->second);
		l_adj[li->second].push_back(ki->second);
	}
	for (int l = 0; l < nl; ++l) {
		if (l_adj[l].empty()) {
			throw std::invalid_argument("L contains an isolated vertex");
		}
	}

	std::vector<char> k_alive(nk, 1);
	std::vector<char> l_alive(nl, 1);
	while (true) {
		// copy c of K-vertex k is left node k * q + c
		std::vector<IndexPair> copy_edges;
		for (int k = 0; k < nk; ++k) {
			if (!k_alive[k]) {
				continue;
			}
			for (int l : k_adj[k]) {
				if (!l_alive[l]) {
					continue;
				}
				for (int c = 0; c < q; ++c) {
					copy_edges.emplace_back(k * q + c, l);
				}
			}
		}
		const auto matching = max_bipartite_matching(nk * q, nl, copy_edges);
		std::vector<int> mate_left(nk * q, -1);
		std::vector<int> mate_right(nl, -1);
		for (const auto &[left, right] : matching) {
			mate_left[left] = right;
			mate_right[right] = left;
		}
		std::vector<int> matched_count(nk, 0);
		for (const auto &[left, right] : matching) {
			++matched_count[left / q];
		}

		// vertices of K with an unmatched copy seed the alternating search
		std::vector<char> k_reached(nk, 0);
		std::vector<char> l_reached(nl, 0);
		std::vector<int> stack;
		for (int k = 0; k < nk; ++k) {
			if (k_alive[k] && matched_count[k] < q) {
				k_reached[k] = 1;
				stack.push_back(k);
			}
		}
		if (stack.empty()) {
			Expansion out;
			for (int k = 0; k < nk; ++k) {
				if (k_alive[k]) {
					out.k_prime.push_back(k_side[k]);
				}
			}
			for (const auto &[left, right] : matching) {
				out.assignment.emplace(l_side[right], k_side[left / q]);
			}
			for (const auto &[l, k] : out.assignment) {
				out.l_prime.push_back(l);
			}
			std::sort(out.k_prime.begin(), out.k_prime.end());
			return out;
		}
		while (!stack.empty()) {
			const int k = stack.back();
			stack.pop_back();
			for (int l : k_adj[k]) {
				if (!l_alive[l] || l_reached[l]) {
					continue;
				}
				l_reached[l] = 1;
				if (mate_right[l] == -1) {
					throw std::logic_error("augmenting path left after maximum matching");
				}
				const int partner = mate_right[l] / q;
				if (!k_reached[partner]) {
					k_reached[partner] = 1;
					stack.push_back(partner);
				}
			}
		}
		// the reached part violates Hall's condition; drop it and its neighbourhood
		for (int k = 0; k < nk; ++k) {
			if (k_reached[k]) {
				k_alive[k] = 0;
			}
		}
		for (int l = 0; l < nl; ++l) {
			if (l_reached[l]) {
				l_alive[l] = 0;
			}
		}
	}
}

} // namespace ctov
