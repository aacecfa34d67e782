#pragma once

#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "ctov/multigraph.hpp"

namespace ctov {

/// q(C,u,v): the longest u,v-path length whose interior lies in C, or
/// nullopt (minus infinity) when u or v has no neighbour in C.
/// Throws GraphError when C is neither a clique nor a tree.
std::optional<int> q_value(const MultiGraph &g, const VertexSet &component, Vertex u, Vertex v);

struct LabelTable {
	/// Components of G - S in ascending order of their smallest vertex.
	std::vector<VertexSet> components;
	/// (u, v) -> indices into `components`, best q first.
	std::map<std::pair<Vertex, Vertex>, std::vector<int>> labels;

	const std::vector<int> &of(Vertex u, Vertex v) const;
};

/// For every ordered pair of S-vertices (u = v allowed) keep the |S|
/// components with the largest finite q; ties go to the smaller index.
LabelTable label_components(const MultiGraph &g, const VertexSet &s);

struct LdtpInstance {
	/// Clique or tree; ids are those of the surrounding graph.
	MultiGraph host;
	std::vector<std::pair<VertexSet, VertexSet>> pairs;
	/// 1 forbids realising pair i by a single vertex.
	std::vector<int> min_edges;
};

/// Maximum total length (edges) of vertex-disjoint paths, path i joining
/// pairs[i].first to pairs[i].second; nullopt when no packing exists.
std::optional<int64_t> ldtp_clique(const LdtpInstance &inst);
std::optional<int64_t> ldtp_tree(const LdtpInstance &inst);
/// Dispatches on the host's kind.
std::optional<int64_t> ldtp(const LdtpInstance &inst);

constexpr int64_t kNegInf = std::numeric_limits<int64_t>::min() / 4;

/// Bottom-up tables of the tree solver, rooted at the smallest host vertex.
/// Index sets are bitmasks over pair indices; entries are kNegInf when no
/// configuration exists.
struct TreeDpTables {
	int l = 0;
	Vertex root = -1;
	/// vertex -> DP2[Z]
	std::map<Vertex, std::vector<int64_t>> dp2;
	/// vertex -> DP1 flattened as [Z][i][f-1]
	std::map<Vertex, std::vector<int64_t>> dp1;
	/// children in the rooted tree, ascending
	std::map<Vertex, std::vector<Vertex>> children;

	int64_t get_dp2(Vertex v, uint32_t z) const { return dp2.at(v)[z]; }
	int64_t get_dp1(Vertex v, uint32_t z, int i, int f) const {
		return dp1.at(v)[(static_cast<size_t>(z) * l + i) * 2 + (f - 1)];
	}
};

TreeDpTables ldtp_tree_tables(const LdtpInstance &inst);

struct LongestCycleOptions {
	/// Let every component (not only labelled ones) serve as a fragment host.
	bool all_components = false;
};

/// Longest cycle length of a simple graph given S with G - S a disjoint
/// union of cliques and trees; nullopt when the graph is acyclic.
/// Throws GraphError on parallel edges or an infeasible S.
std::optional<int> longest_cycle(const MultiGraph &g, const VertexSet &s, const LongestCycleOptions &opts = {});

} // namespace ctov
