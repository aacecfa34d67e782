#include "ctov/kernel.hpp"

#include <algorithm>
#include <string>

#include "ctov/solvers.hpp"
#include "kernel_context.hpp"

namespace ctov {

using detail::Context;

Partition partition_vertices(const Instance &inst) {
	Partition p;
	const MultiGraph &g = inst.graph;
	const int64_t threshold = 7 * static_cast<int64_t>(inst.k);
	for (Vertex v : g.vertices()) {
		const int64_t n = g.neighbor_count(v);
		if (n <= threshold) {
			p.small.push_back(v);
		} else if (4 * rho(g, v) > n * (n - 1)) {
			p.large_dense.push_back(v);
		} else {
			p.large_sparse.push_back(v);
		}
	}
	return p;
}

std::optional<Firing> apply_rule(const Instance &inst, RuleId rule, const RuleOptions &opts) {
	Context ctx(inst, opts);
	return detail::fire(ctx, rule);
}

Measure measure(const Instance &inst) {
	return Measure{inst.k, inst.graph.num_vertices(), inst.graph.num_adjacent_pairs(), inst.graph.total_multiplicity()};
}

int64_t kernel_vertex_bound(int64_t k) {
	return 1389 * k * k + 52 * k;
}

namespace {

std::string bound_message(const char *what, int64_t value, int64_t bound) {
	return std::string(what) + " = " + std::to_string(value) + " exceeds " + std::to_string(bound);
}

void check_sparse(Context &ctx, std::vector<std::string> &out) {
	const int64_t k = ctx.k();
	for (Vertex v : ctx.graph().vertices()) {
		if (!ctx.large_dense(v) && ctx.graph().neighbor_count(v) > 7 * k) {
			out.push_back(bound_message(("|N(" + std::to_string(v) + ")|").c_str(), ctx.graph().neighbor_count(v), 7 * k));
		}
	}
}

void check_dense(Context &ctx, std::vector<std::string> &out) {
	const int64_t k = ctx.k();
	const auto &ld = ctx.partition().large_dense;
	if (static_cast<int64_t>(ld.size()) > 101 * k * k + 40 * k) {
		out.push_back(bound_message("|V_ld|", ld.size(), 101 * k * k + 40 * k));
	}
	int64_t outside = 0;
	for (Vertex v : ld) {
		const auto &inc = ctx.graph().incident(v);
		outside += std::any_of(inc.begin(), inc.end(), [&](const auto &e) { return !ctx.large_dense(e.first); });
	}
	if (outside > 84 * k * k + 4 * k) {
		out.push_back(bound_message("large-dense vertices with outside neighbours", outside, 84 * k * k + 4 * k));
	}
	const auto mod_components = connected_components(ctx.graph().induced_subgraph(ctx.v_ldmod()));
	if (static_cast<int64_t>(mod_components.size()) > 12 * k) {
		out.push_back(bound_message("components of V_ldmod", mod_components.size(), 12 * k));
	}
}

void check_final(Context &ctx, std::vector<std::string> &out) {
	const int64_t k = ctx.k();
	const int64_t n = ctx.graph().num_vertices();
	if (n > kernel_vertex_bound(k)) {
		out.push_back(bound_message("|V|", n, kernel_vertex_bound(k)));
	}
	if (!ctx.s_usable()) {
		return;
	}
	const VertexSet &vt = ctx.v_tree();
	if (static_cast<int64_t>(vt.size()) > 1232 * k * k) {
		out.push_back(bound_message("|V_tree|", vt.size(), 1232 * k * k));
	}
	const VertexSet &s = *ctx.s();
	int64_t attached = 0;
	for (Vertex v : vt) {
		const auto &inc = ctx.graph().incident(v);
		attached += std::any_of(inc.begin(), inc.end(), [&](const auto &e) { return detail::contains(s, e.first); });
	}
	if (attached > 28 * k * k) {
		out.push_back(bound_message("tree vertices adjacent to S", attached, 28 * k * k));
	}
}

void check_phase(Context &ctx, Phase phase, std::vector<std::string> &out) {
	switch (phase) {
	case Phase::SparseDone:
		check_sparse(ctx, out);
		break;
	case Phase::DenseDone:
		check_sparse(ctx, out);
		check_dense(ctx, out);
		break;
	case Phase::Final:
		check_sparse(ctx, out);
		check_dense(ctx, out);
		check_final(ctx, out);
		break;
	}
}

} // namespace

std::vector<std::string> assert_phase_invariants(const Instance &inst, Phase phase, const RuleOptions &opts) {
	Context ctx(inst, opts);
	std::vector<std::string> out;
	check_phase(ctx, phase, out);
	return out;
}

KernelOutcome kernelize(const Instance &inst, const KernelOptions &opts) {
	KernelOutcome outcome{Decided{false}, {}, {}};
	Diagnostics &diag = outcome.diagnostics;
	// S is re-derived from each state so the result depends on the graph only
	RuleOptions rule_opts;
	rule_opts.s_solver = opts.s_solver;
	Instance cur = inst;

	while (true) {
		if (cur.graph.num_vertices() == 0) {
			outcome.result = Decided{true};
			return outcome;
		}
		if (cur.k == 0) {
			outcome.result = Decided{is_feasible_deletion(cur.graph, {})};
			return outcome;
		}
		Context ctx(cur, rule_opts);
		std::optional<Firing> firing;
		for (RuleId rule : kAllRules) {
			if (opts.check_invariants && rule == RuleId::R5) {
				check_phase(ctx, Phase::SparseDone, diag.invariant_violations);
			}
			if (opts.check_invariants && rule == RuleId::R14) {
				check_phase(ctx, Phase::DenseDone, diag.invariant_violations);
			}
			firing = detail::fire(ctx, rule);
			if (firing) {
				break;
			}
		}
		if (!firing) {
			if (opts.check_invariants) {
				check_phase(ctx, Phase::Final, diag.invariant_violations);
			}
			if (opts.decide_residual && cur.graph.num_vertices() <= opts.residual_threshold) {
				outcome.result = Decided{exact_ctov(cur.graph, cur.k).has_value()};
			} else {
				outcome.result = std::move(cur);
			}
			return outcome;
		}

		++diag.rules_fired;
		++diag.per_rule[static_cast<int>(firing->record.rule)];
		outcome.trace.push_back(firing->record);
		if (auto *decided = std::get_if<Decided>(&firing->result)) {
			outcome.result = *decided;
			return outcome;
		}
		Instance next = std::move(std::get<Instance>(firing->result));
		if (!(measure(next) < measure(cur))) {
			++diag.measure_violations;
		}
		cur = std::move(next);
	}
}

} // namespace ctov
