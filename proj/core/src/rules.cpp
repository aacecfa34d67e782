#include <algorithm>
#include <stdexcept>

#include "ctov/solvers.hpp"
#include "kernel_context.hpp"

namespace ctov::detail {

namespace {

Firing finish(Context &ctx, RuleId rule, VertexSet deleted, int k_drop, std::vector<MultiplicityChange> changes = {},
		std::optional<VertexSet> s_used = std::nullopt) {
	TraceRecord rec;
	rec.rule = rule;
	rec.k_before = ctx.k();
	rec.s_used = std::move(s_used);
	if (ctx.k() - k_drop < 0) {
		// every deleted vertex is forced, so the budget cannot cover them
		rec.k_after = ctx.k();
		rec.decided = false;
		return Firing{rec, Decided{false}};
	}
	std::sort(deleted.begin(), deleted.end());
	for (auto &c : changes) {
		if (c.u > c.v) {
			std::swap(c.u, c.v);
		}
	}
	std::sort(changes.begin(), changes.end(), [](const auto &a, const auto &b) {
		return std::pair(a.u, a.v) < std::pair(b.u, b.v);
	});
	rec.k_after = ctx.k() - k_drop;
	rec.deleted = std::move(deleted);
	rec.changes = std::move(changes);
	auto result = replay(ctx.instance(), rec);
	return Firing{std::move(rec), std::move(result)};
}

Firing decide(Context &ctx, RuleId rule, bool answer, std::optional<VertexSet> s_used = std::nullopt) {
	TraceRecord rec;
	rec.rule = rule;
	rec.k_before = ctx.k();
	rec.k_after = ctx.k();
	rec.s_used = std::move(s_used);
	rec.decided = answer;
	return Firing{rec, Decided{answer}};
}

bool touches(const MultiGraph &g, const VertexSet &comp, const VertexSet &others) {
	for (Vertex x : comp) {
		for (const auto &[y, m] : g.incident(x)) {
			if (contains(others, y)) {
				return true;
			}
		}
	}
	return false;
}

std::optional<Firing> r1(Context &ctx) {
	for (Vertex v : ctx.partition().large_sparse) {
		if (std::holds_alternative<Flower>(ctx.gallai(v))) {
			return finish(ctx, RuleId::R1, {v}, 1);
		}
	}
	return std::nullopt;
}

std::optional<Firing> r2(Context &ctx) {
	for (Vertex v : ctx.partition().large_sparse) {
		const auto &view = ctx.sparse_view(v);
		if (view && static_cast<int>(view->nontrees.size()) >= ctx.k() + 1) {
			return finish(ctx, RuleId::R2, {v}, 1);
		}
	}
	return std::nullopt;
}

std::optional<Firing> r3(Context &ctx) {
	for (Vertex v : ctx.partition().large_sparse) {
		const auto &view = ctx.sparse_view(v);
		if (!view) {
			continue;
		}
		for (const auto &tree : view->trees) {
			if (!touches(ctx.graph(), tree, view->blocker)) {
				return finish(ctx, RuleId::R3, tree, 0);
			}
		}
	}
	return std::nullopt;
}

std::optional<Firing> r4(Context &ctx) {
	const MultiGraph &g = ctx.graph();
	for (Vertex v : ctx.partition().large_sparse) {
		const auto &view = ctx.sparse_view(v);
		if (!view || view->trees.empty() || ctx.k() < 1) {
			continue;
		}
		if (static_cast<int64_t>(view->trees.size()) < 4 * static_cast<int64_t>(ctx.k())) {
			continue;
		}
		const auto &b = view->blocker;
		bool prunable = false;
		std::vector<IndexPair> edges;
		for (int ci = 0; ci < static_cast<int>(view->trees.size()); ++ci) {
			bool any = false;
			for (int bi = 0; bi < static_cast<int>(b.size()); ++bi) {
				const auto &tree = view->trees[ci];
				if (std::any_of(tree.begin(), tree.end(), [&](Vertex x) { return g.adjacent(b[bi], x); })) {
					edges.emplace_back(bi, ci);
					any = true;
				}
			}
			prunable = prunable || !any;
		}
		if (prunable) {
			continue;  // R3 applies first
		}
		std::vector<int> k_side(b.size());
		std::vector<int> l_side(view->trees.size());
		for (int i = 0; i < static_cast<int>(k_side.size()); ++i) {
			k_side[i] = i;
		}
		for (int i = 0; i < static_cast<int>(l_side.size()); ++i) {
			l_side[i] = i;
		}
		const Expansion ex = q_expansion(k_side, l_side, edges, 2);
		std::vector<MultiplicityChange> changes;
		for (int ci : ex.l_prime) {
			for (Vertex x : view->trees[ci]) {
				if (g.adjacent(v, x)) {
					changes.push_back({v, x, 0});
				}
			}
		}
		for (int bi : ex.k_prime) {
			changes.push_back({v, b[bi], std::max(g.multiplicity(v, b[bi]), 2)});
		}
		return finish(ctx, RuleId::R4, {}, 0, std::move(changes));
	}
	return std::nullopt;
}

std::optional<Firing> r5(Context &ctx) {
	if (!ctx.s_usable()) {
		return decide(ctx, RuleId::R5, false, ctx.s());
	}
	return std::nullopt;
}

std::optional<Firing> r6(Context &ctx) {
	if (!ctx.s_usable()) {
		return std::nullopt;
	}
	const VertexSet &s = *ctx.s();
	const auto &comps = ctx.s_components();
	std::vector<int> owner(ctx.graph().capacity(), -1);
	for (int i = 0; i < static_cast<int>(comps.size()); ++i) {
		for (Vertex x : comps[i]) {
			owner[x] = i;
		}
	}
	for (Vertex v : ctx.partition().large_dense) {
		if (owner[v] >= 0 && is_tree(ctx.graph(), comps[owner[v]])) {
			return finish(ctx, RuleId::R6, {v}, 1, {}, s);
		}
	}
	return std::nullopt;
}

std::optional<Firing> r7(Context &ctx) {
	for (const auto &comp : connected_components(ctx.graph())) {
		if (classify(ctx.graph(), comp) != ComponentKind::Other) {
			return finish(ctx, RuleId::R7, comp, 0);
		}
	}
	return std::nullopt;
}

std::optional<Firing> r8(Context &ctx) {
	if (!ctx.s_usable() || ctx.s()->empty()) {
		return std::nullopt;
	}
	const MultiGraph &g = ctx.graph();
	const VertexSet &s = *ctx.s();
	std::vector<VertexSet> cliques;
	for (const auto &comp : ctx.s_components()) {
		if (comp.size() >= 3 && is_clique(g, comp) && touches(g, comp, s)) {
			cliques.push_back(comp);
		}
	}
	if (cliques.size() < 2 * s.size()) {
		return std::nullopt;
	}
	std::vector<IndexPair> edges;
	std::vector<int> k_side(s.size());
	std::vector<int> l_side(cliques.size());
	for (int si = 0; si < static_cast<int>(s.size()); ++si) {
		k_side[si] = si;
		for (int ci = 0; ci < static_cast<int>(cliques.size()); ++ci) {
			if (touches(g, cliques[ci], {s[si]})) {
				edges.emplace_back(si, ci);
			}
		}
	}
	for (int ci = 0; ci < static_cast<int>(cliques.size()); ++ci) {
		l_side[ci] = ci;
	}
	const Expansion ex = q_expansion(k_side, l_side, edges, 2);
	VertexSet del;
	for (int si : ex.k_prime) {
		del.push_back(s[si]);
	}
	const int drop = static_cast<int>(del.size());
	return finish(ctx, RuleId::R8, std::move(del), drop, {}, s);
}

std::optional<Vertex> r9_vertex(Context &ctx) {
	const VertexSet &ld = ctx.partition().large_dense;
	for (Vertex v : ld) {
		if (p3_star_order(ctx.graph(), v, ld) >= ctx.k() + 1) {
			return v;
		}
	}
	return std::nullopt;
}

std::optional<Firing> r9(Context &ctx) {
	if (auto v = r9_vertex(ctx)) {
		return finish(ctx, RuleId::R9, {*v}, 1);
	}
	return std::nullopt;
}

std::optional<Firing> r10(Context &ctx) {
	const int64_t k = ctx.k();
	if (static_cast<int64_t>(ctx.packing().size()) <= k * k || r9_vertex(ctx)) {
		return std::nullopt;
	}
	return decide(ctx, RuleId::R10, false);
}

int multi_neighbors(const MultiGraph &g, Vertex v) {
	int count = 0;
	for (const auto &[u, m] : g.incident(v)) {
		count += m >= 2;
	}
	return count;
}

std::optional<Vertex> r11_vertex(Context &ctx) {
	for (Vertex v : ctx.graph().vertices()) {
		if (multi_neighbors(ctx.graph(), v) > ctx.k()) {
			return v;
		}
	}
	return std::nullopt;
}

std::optional<Firing> r11(Context &ctx) {
	if (auto v = r11_vertex(ctx)) {
		return finish(ctx, RuleId::R11, {*v}, 1);
	}
	return std::nullopt;
}

std::optional<Firing> r12(Context &ctx) {
	int64_t pairs = 0;
	for (Vertex v : ctx.graph().vertices()) {
		pairs += multi_neighbors(ctx.graph(), v);
	}
	pairs /= 2;
	const int64_t k = ctx.k();
	if (pairs <= k * k || r11_vertex(ctx)) {
		return std::nullopt;
	}
	return decide(ctx, RuleId::R12, false);
}

std::optional<Firing> r13(Context &ctx) {
	const MultiGraph &g = ctx.graph();
	const VertexSet &mod = ctx.v_ldmod();
	if (mod.empty()) {
		return std::nullopt;
	}
	const MultiGraph inner = g.induced_subgraph(mod);
	for (const auto &comp : connected_components(inner)) {
		VertexSet qualifying;
		for (Vertex v : comp) {
			bool ok = true;
			for (const auto &[u, m] : g.incident(v)) {
				if (m >= 2 || !ctx.large_dense(u)) {
					ok = false;
					break;
				}
			}
			if (ok) {
				qualifying.push_back(v);
			}
		}
		if (static_cast<int>(qualifying.size()) >= ctx.k() + 4) {
			return finish(ctx, RuleId::R13, {qualifying.front()}, 0);
		}
	}
	return std::nullopt;
}

std::optional<Firing> r14(Context &ctx) {
	if (!ctx.s_usable()) {
		return std::nullopt;
	}
	const VertexSet &s = *ctx.s();
	const VertexSet &vt = ctx.v_tree();
	for (Vertex v : s) {
		if (!ctx.large_dense(v)) {
			continue;
		}
		int64_t hits = 0;
		for (const auto &[u, m] : ctx.graph().incident(v)) {
			hits += contains(vt, u);
		}
		if (hits >= 2 * static_cast<int64_t>(ctx.k()) + 4) {
			return finish(ctx, RuleId::R14, {v}, 1, {}, s);
		}
	}
	return std::nullopt;
}

std::optional<Firing> r15(Context &ctx) {
	const MultiGraph &g = ctx.graph();
	for (Vertex v : g.vertices()) {
		std::vector<Vertex> pendants;
		for (const auto &[u, m] : g.incident(v)) {
			if (g.degree(u) == 1) {
				pendants.push_back(u);
			}
		}
		if (pendants.size() >= 2) {
			return finish(ctx, RuleId::R15, {pendants[1]}, 0);
		}
	}
	return std::nullopt;
}

std::optional<Firing> r16(Context &ctx) {
	const MultiGraph &g = ctx.graph();
	for (Vertex u : g.vertices()) {
		for (const auto &[w, m] : g.incident(u)) {
			if (w > u && m >= 3) {
				return finish(ctx, RuleId::R16, {}, 0, {{u, w, 2}});
			}
		}
	}
	return std::nullopt;
}

// the other neighbour of a degree-2 vertex with two distinct neighbours
std::optional<Vertex> other_side(const MultiGraph &g, Vertex mid, Vertex from) {
	if (g.degree(mid) != 2 || g.neighbor_count(mid) != 2) {
		return std::nullopt;
	}
	for (const auto &[u, m] : g.incident(mid)) {
		if (u != from) {
			return u;
		}
	}
	return std::nullopt;
}

std::optional<Firing> r17(Context &ctx) {
	const MultiGraph &g = ctx.graph();
	for (Vertex v3 : g.vertices()) {
		if (g.degree(v3) != 1) {
			continue;
		}
		const Vertex v2 = g.incident(v3).begin()->first;
		const auto v1 = other_side(g, v2, v3);
		if (v1 && *v1 != v3 && !g.adjacent(*v1, v3)) {
			return finish(ctx, RuleId::R17, {v3}, 0);
		}
	}
	return std::nullopt;
}

std::optional<Firing> r18(Context &ctx) {
	const MultiGraph &g = ctx.graph();
	for (Vertex v3 : g.vertices()) {
		if (g.degree(v3) != 2 || g.neighbor_count(v3) != 2) {
			continue;
		}
		const Vertex v2 = g.incident(v3).begin()->first;
		const Vertex v4 = std::next(g.incident(v3).begin())->first;
		const auto v1 = other_side(g, v2, v3);
		const auto v5 = other_side(g, v4, v3);
		if (!v1 || !v5) {
			continue;
		}
		VertexSet five{*v1, v2, v3, v4, *v5};
		std::sort(five.begin(), five.end());
		if (std::adjacent_find(five.begin(), five.end()) != five.end()) {
			continue;
		}
		return finish(ctx, RuleId::R18, {v3}, 0, {{v2, v4, 1}});
	}
	return std::nullopt;
}

std::optional<Firing> r19(Context &ctx) {
	const MultiGraph &g = ctx.graph();
	for (Vertex v1 : g.vertices()) {
		if (g.degree(v1) != 3 || g.neighbor_count(v1) != 3) {
			continue;
		}
		const VertexSet nb = g.neighbors(v1);
		if (g.adjacent(nb[0], nb[1]) || g.adjacent(nb[0], nb[2]) || g.adjacent(nb[1], nb[2])) {
			continue;
		}
		for (Vertex v4 : nb) {
			if (g.degree(v4) == 1) {
				return finish(ctx, RuleId::R19, {v4}, 0);
			}
		}
	}
	return std::nullopt;
}

} // namespace

std::optional<Firing> fire(Context &ctx, RuleId rule) {
	switch (rule) {
	case RuleId::R1: return r1(ctx);
	case RuleId::R2: return r2(ctx);
	case RuleId::R3: return r3(ctx);
	case RuleId::R4: return r4(ctx);
	case RuleId::R5: return r5(ctx);
	case RuleId::R6: return r6(ctx);
	case RuleId::R7: return r7(ctx);
	case RuleId::R8: return r8(ctx);
	case RuleId::R9: return r9(ctx);
	case RuleId::R10: return r10(ctx);
	case RuleId::R11: return r11(ctx);
	case RuleId::R12: return r12(ctx);
	case RuleId::R13: return r13(ctx);
	case RuleId::R14: return r14(ctx);
	case RuleId::R15: return r15(ctx);
	case RuleId::R16: return r16(ctx);
	case RuleId::R17: return r17(ctx);
	case RuleId::R18: return r18(ctx);
	case RuleId::R19: return r19(ctx);
	}
	throw std::invalid_argument("unknown rule id");
}

} // namespace ctov::detail
