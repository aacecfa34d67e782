#include "kernel_context.hpp"

#include <algorithm>
#include <stdexcept>

#include "ctov/solvers.hpp"

namespace ctov::detail {

bool contains(const VertexSet &set, Vertex v) {
	return std::binary_search(set.begin(), set.end(), v);
}

Context::Context(const Instance &inst, const RuleOptions &opts) : inst_(inst), opts_(opts) {
	if (opts_.s_override) {
		VertexSet s = *opts_.s_override;
		std::sort(s.begin(), s.end());
		s.erase(std::unique(s.begin(), s.end()), s.end());
		for (Vertex v : s) {
			if (!inst_.graph.contains(v)) {
				throw GraphError("S override names unknown vertex " + std::to_string(v));
			}
		}
		if (!is_feasible_deletion(inst_.graph, s)) {
			throw GraphError("S override is not a feasible deletion set");
		}
		opts_.s_override = std::move(s);
	}
}

const Partition &Context::partition() {
	if (!partition_) {
		partition_ = partition_vertices(inst_);
		dense_mask_.assign(graph().capacity(), 0);
		for (Vertex v : partition_->large_dense) {
			dense_mask_[v] = 1;
		}
	}
	return *partition_;
}

bool Context::large_dense(Vertex v) {
	partition();
	return dense_mask_[v] != 0;
}

const FlowerOrBlocker &Context::gallai(Vertex v) {
	auto it = gallai_.find(v);
	if (it == gallai_.end()) {
		it = gallai_.emplace(v, gallai_flower_or_blocker(graph(), v, k())).first;
	}
	return it->second;
}

const std::optional<SparseView> &Context::sparse_view(Vertex v) {
	auto it = sparse_.find(v);
	if (it != sparse_.end()) {
		return it->second;
	}
	std::optional<SparseView> view;
	if (const auto *blocker = std::get_if<Blocker>(&gallai(v))) {
		view.emplace();
		view->blocker = blocker->vertices;
		VertexSet drop = blocker->vertices;
		drop.insert(std::upper_bound(drop.begin(), drop.end(), v), v);
		const MultiGraph rest = graph().without(drop);
		for (const auto &comp : connected_components(rest)) {
			const bool touches = std::any_of(comp.begin(), comp.end(), [&](Vertex x) { return graph().adjacent(v, x); });
			if (!touches) {
				continue;
			}
			if (is_tree(rest, comp)) {
				view->trees.push_back(comp);
			} else {
				view->nontrees.push_back(comp);
			}
		}
	}
	return sparse_.emplace(v, std::move(view)).first->second;
}

const std::optional<VertexSet> &Context::s() {
	if (s_done_) {
		return s_;
	}
	s_done_ = true;
	if (opts_.s_override) {
		s_ = opts_.s_override;
		return s_;
	}
	if (opts_.s_solver == SSolver::Approx) {
		VertexSet approx = approx_ctov(graph());
		if (static_cast<int64_t>(approx.size()) <= 4 * static_cast<int64_t>(k())) {
			s_ = std::move(approx);
			return s_;
		}
	}
	s_ = exact_ctov(graph(), k());
	return s_;
}

bool Context::s_usable() {
	const auto &set = s();
	return set && static_cast<int64_t>(set->size()) <= 4 * static_cast<int64_t>(k());
}

const std::vector<VertexSet> &Context::s_components() {
	if (!s_components_) {
		if (!s_usable()) {
			throw std::logic_error("components of G - S requested without a usable S");
		}
		s_components_ = connected_components(graph().without(*s()));
	}
	return *s_components_;
}

const VertexSet &Context::v_tree() {
	if (!v_tree_) {
		VertexSet out;
		for (const auto &comp : s_components()) {
			if (is_tree(graph(), comp)) {
				out.insert(out.end(), comp.begin(), comp.end());
			}
		}
		std::sort(out.begin(), out.end());
		v_tree_ = std::move(out);
	}
	return *v_tree_;
}

const P3Packing &Context::packing() {
	if (!packing_) {
		packing_ = maximal_p3_packing(graph(), partition().large_dense);
	}
	return *packing_;
}

const VertexSet &Context::v_ldmod() {
	if (!v_ldmod_) {
		VertexSet covered;
		for (const auto &p : packing()) {
			covered.insert(covered.end(), {p.a, p.center, p.b});
		}
		std::sort(covered.begin(), covered.end());
		VertexSet out;
		std::set_difference(partition().large_dense.begin(), partition().large_dense.end(), covered.begin(),
				covered.end(), std::back_inserter(out));
		v_ldmod_ = std::move(out);
	}
	return *v_ldmod_;
}

} // namespace ctov::detail
