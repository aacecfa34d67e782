#pragma once

#include <map>
#include <utility>
#include <variant>
#include <vector>

#include "ctov/multigraph.hpp"

namespace ctov {

using IndexPair = std::pair<int, int>;

/// Maximum-cardinality matching between left ids [0, n_left) and right ids
/// [0, n_right) (Hopcroft-Karp). Returned pairs are (left, right) sorted by left.
std::vector<IndexPair> max_bipartite_matching(int n_left, int n_right, const std::vector<IndexPair> &edges);

/// Maximum-cardinality matching of a general graph on [0, n). Pairs are
/// returned with first < second, sorted.
std::vector<IndexPair> max_general_matching(int n, const std::vector<IndexPair> &edges);

/// A v-flower: cycles through v that pairwise share only v. Each cycle is
/// listed as v followed by the other vertices in cycle order; a two-element
/// cycle {v,u} is the 2-cycle formed by a parallel pair.
struct Flower {
	std::vector<std::vector<Vertex>> cycles;
};

/// B with v not in B such that G - B has no cycle through v.
struct Blocker {
	VertexSet vertices;
};

using FlowerOrBlocker = std::variant<Flower, Blocker>;

/// Maximum-order v-flower (exact, via Gallai's reduction of disjoint
/// T-paths to matching with T = N(v)).
Flower max_flower(const MultiGraph &g, Vertex v);

/// Returns a flower of order >= t+1 when one exists, otherwise a blocker of
/// size at most 2 * (maximum flower order) <= 2t.
FlowerOrBlocker gallai_flower_or_blocker(const MultiGraph &g, Vertex v, int t);

/// K' ⊆ K, L' ⊆ L with N(L') ⊆ K' and a q-expansion of K' into L'.
struct Expansion {
	std::vector<int> k_prime;
	std::vector<int> l_prime;
	/// Each member of L' -> its partner in K'.
	std::map<int, int> assignment;
};

/// Expansion lemma. `edges` are (k, l) pairs over the ids listed in `k_side`
/// and `l_side` (the two id spaces are independent). Throws
/// std::invalid_argument unless |L| >= q|K|, K is nonempty and no member of
/// L is isolated.
Expansion q_expansion(const std::vector<int> &k_side, const std::vector<int> &l_side,
		const std::vector<IndexPair> &edges, int q);

/// Ordered triple (a, center, b) with a-center, center-b adjacent (any
/// multiplicity) and a, b non-adjacent.
struct P3 {
	Vertex a;
	Vertex center;
	Vertex b;

	bool operator==(const P3 &) const = default;
};

using P3Packing = std::vector<P3>;

bool induces_p3(const MultiGraph &g, Vertex a, Vertex center, Vertex b);

/// Greedy maximal packing of induced P3s inside `allowed`, pairwise sharing
/// at most one vertex. Candidates are scanned in lexicographic order of their
/// sorted vertex triple.
P3Packing maximal_p3_packing(const MultiGraph &g, const VertexSet &allowed);

/// Largest number of induced P3s inside `allowed` that contain v and pairwise
/// meet only in v. v may sit in any position of a P3.
int p3_star_order(const MultiGraph &g, Vertex v, const VertexSet &allowed);

} // namespace ctov
