#pragma once

#include <map>
#include <optional>
#include <vector>

#include "ctov/kernel.hpp"
#include "ctov/structure.hpp"

namespace ctov::detail {

// Per-vertex view for R2-R4: components of G - v - B adjacent to v.
struct SparseView {
	VertexSet blocker;
	std::vector<VertexSet> trees;
	std::vector<VertexSet> nontrees;
};

// Derived structures for one instance state, computed on first use.
// A context never outlives the state it was built for.
class Context {
public:
	Context(const Instance &inst, const RuleOptions &opts);

	const Instance &instance() const { return inst_; }
	const MultiGraph &graph() const { return inst_.graph; }
	int k() const { return inst_.k; }

	const Partition &partition();
	bool large_dense(Vertex v);

	const FlowerOrBlocker &gallai(Vertex v);
	// nullopt when Gallai returned a flower
	const std::optional<SparseView> &sparse_view(Vertex v);

	// The feasible set S; nullopt when none of size <= k exists (exact mode).
	const std::optional<VertexSet> &s();
	// S exists and |S| <= 4k
	bool s_usable();
	// Components of G - S; valid only when s_usable().
	const std::vector<VertexSet> &s_components();
	const VertexSet &v_tree();

	const P3Packing &packing();
	const VertexSet &v_ldmod();

private:
	const Instance &inst_;
	RuleOptions opts_;

	std::optional<Partition> partition_;
	std::vector<char> dense_mask_;
	std::map<Vertex, FlowerOrBlocker> gallai_;
	std::map<Vertex, std::optional<SparseView>> sparse_;
	bool s_done_ = false;
	std::optional<VertexSet> s_;
	std::optional<std::vector<VertexSet>> s_components_;
	std::optional<VertexSet> v_tree_;
	std::optional<P3Packing> packing_;
	std::optional<VertexSet> v_ldmod_;
};

// Evaluate one rule on a context; nullopt when it does not fire.
std::optional<Firing> fire(Context &ctx, RuleId rule);

bool contains(const VertexSet &set, Vertex v);

} // namespace ctov::detail
