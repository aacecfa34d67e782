#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace ctov {

/// Dense vertex index. Ids stay stable for the lifetime of a MultiGraph value;
/// removing a vertex tombstones it instead of renumbering the others.
using Vertex = int;

/// Sorted, duplicate-free list of vertices. All set-valued results in the
/// library use this representation so iteration order is always ascending.
using VertexSet = std::vector<Vertex>;

class GraphError : public std::invalid_argument {
public:
	using std::invalid_argument::invalid_argument;
};

/**
 * Undirected multigraph without self-loops.
 *
 * Each unordered pair {u,v} carries a positive multiplicity; pairs with
 * multiplicity zero are not stored. The container does not cap
 * multiplicities, the kernel rules normalise them.
 */
class MultiGraph {
public:
	MultiGraph() = default;
	explicit MultiGraph(int n);

	Vertex add_vertex();

	/// One past the largest id ever allocated (alive or not).
	int capacity() const { return static_cast<int>(alive_.size()); }
	int num_vertices() const { return num_alive_; }
	bool contains(Vertex v) const { return v >= 0 && v < capacity() && alive_[v]; }
	VertexSet vertices() const;

	int multiplicity(Vertex u, Vertex v) const;
	bool adjacent(Vertex u, Vertex v) const { return multiplicity(u, v) > 0; }

	/// Adds `mult` parallel copies of {u,v}.
	void add_edge(Vertex u, Vertex v, int mult = 1);
	/// Sets the multiplicity of {u,v}; zero removes the pair.
	void set_multiplicity(Vertex u, Vertex v, int mult);
	/// Removes a single parallel copy of {u,v}.
	void remove_edge_unit(Vertex u, Vertex v);
	void remove_vertex(Vertex v);
	void remove_vertices(std::span<const Vertex> vs);

	/// Neighbor -> multiplicity, ordered by neighbor id.
	const std::map<Vertex, int> &incident(Vertex v) const;

	VertexSet neighbors(Vertex v) const;
	int neighbor_count(Vertex v) const { return static_cast<int>(incident(v).size()); }
	int degree(Vertex v) const;

	/// Number of unordered pairs joined by at least one edge.
	int64_t num_adjacent_pairs() const;
	/// Sum of all multiplicities.
	int64_t total_multiplicity() const;
	bool is_simple() const;

	/// Subgraph induced by `keep`; vertex ids are preserved.
	MultiGraph induced_subgraph(std::span<const Vertex> keep) const;
	/// Copy of the graph with `drop` removed.
	MultiGraph without(std::span<const Vertex> drop) const;

	bool operator==(const MultiGraph &other) const = default;

private:
	void check_vertex(Vertex v) const;
	void check_pair(Vertex u, Vertex v) const;

	std::vector<char> alive_;
	std::vector<std::map<Vertex, int>> adj_;
	int num_alive_ = 0;
};

enum class ComponentKind { Clique, Tree, Other };

struct Component {
	VertexSet vertices;
	ComponentKind kind;
};

/// N(v): neighbors irrespective of multiplicity.
VertexSet neighbor_set(const MultiGraph &g, Vertex v);
/// d(v): sum of multiplicities of incident edges.
int degree(const MultiGraph &g, Vertex v);
/// Number of adjacent pairs inside N(v); parallel edges count once.
int64_t rho(const MultiGraph &g, Vertex v);

/// Exactly one edge between every two members (a double edge disqualifies).
bool is_clique(const MultiGraph &g, std::span<const Vertex> vs);
/// Connected and acyclic; a multiplicity >= 2 counts as a cycle.
bool is_tree(const MultiGraph &g, std::span<const Vertex> vs);
/// Clique wins over Tree when both hold (single vertices, single edges).
ComponentKind classify(const MultiGraph &g, std::span<const Vertex> connected);

/// Connected components in ascending order of their smallest vertex.
std::vector<VertexSet> connected_components(const MultiGraph &g);
std::vector<Component> components(const MultiGraph &g);

bool is_feasible_deletion(const MultiGraph &g, std::span<const Vertex> x);

/// A graph with a deletion budget.
struct Instance {
	MultiGraph graph;
	int k = 0;

	bool operator==(const Instance &other) const = default;
};

const char *to_string(ComponentKind kind);

} // namespace ctov
