#pragma once

#include <optional>
#include <vector>

#include "ctov/multigraph.hpp"

namespace ctov {

enum class ObstructionKind { Paw, Diamond, InducedCycle };

/// Minimal witness that a graph is not "every component a clique or a tree".
/// InducedCycle covers chordless cycles of length >= 4 and parallel pairs
/// (listed as two vertices). Paw and Diamond vertices are sorted; cycle
/// vertices are in cycle order.
struct Obstruction {
	ObstructionKind kind;
	std::vector<Vertex> vertices;
};

/// Some obstruction, or nullopt iff the graph is already feasible. Among the
/// bad components the smallest witness wins (ties: lexicographic vertex ids).
std::optional<Obstruction> find_obstruction(const MultiGraph &g);

/// Minimum feasible deletion set of size <= budget (branching on obstructions).
std::optional<VertexSet> exact_ctov(const MultiGraph &g, int budget);

constexpr int kDefaultCtovOracleCap = 22;
constexpr int kDefaultCycleOracleCap = 14;

/// Subset enumeration in order of size. Throws std::invalid_argument when the
/// graph has more than `cap` vertices (cap at most 31).
std::optional<VertexSet> brute_force_ctov(const MultiGraph &g, int budget, int cap = kDefaultCtovOracleCap);

/// Polynomial greedy: deletes whole paws, diamonds and parallel pairs, and the
/// highest-degree vertex of induced cycles. Always feasible, no ratio promised.
VertexSet approx_ctov(const MultiGraph &g);

/// Longest simple cycle length (edges) by bitmask DP, nullopt when acyclic.
/// Requires a simple graph with at most `cap` vertices.
std::optional<int> brute_force_longest_cycle(const MultiGraph &g, int cap = kDefaultCycleOracleCap);

const char *to_string(ObstructionKind kind);

} // namespace ctov
