#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "ctov/multigraph.hpp"

namespace ctov {

enum class RuleId : int {
	R1 = 1, R2, R3, R4, R5, R6, R7, R8, R9, R10,
	R11, R12, R13, R14, R15, R16, R17, R18, R19
};
constexpr int kNumRules = 19;
constexpr std::array<RuleId, kNumRules> kAllRules{
		RuleId::R1, RuleId::R2, RuleId::R3, RuleId::R4, RuleId::R5, RuleId::R6, RuleId::R7,
		RuleId::R8, RuleId::R9, RuleId::R10, RuleId::R11, RuleId::R12, RuleId::R13, RuleId::R14,
		RuleId::R15, RuleId::R16, RuleId::R17, RuleId::R18, RuleId::R19};

std::string to_string(RuleId rule);
std::optional<RuleId> parse_rule_id(std::string_view text);

struct Partition {
	VertexSet large_sparse;
	VertexSet large_dense;
	VertexSet small;
};

Partition partition_vertices(const Instance &inst);

// multiplicity 0 removes the pair
struct MultiplicityChange {
	Vertex u;
	Vertex v;
	int multiplicity;
	bool operator==(const MultiplicityChange &) const = default;
};

/// One rule firing. Replay applies `deleted` first, then `changes`.
/// `s_used` is the feasible set the rule read, when it read one.
struct TraceRecord {
	RuleId rule;
	int k_before = 0;
	int k_after = 0;
	VertexSet deleted;
	std::vector<MultiplicityChange> changes;
	std::optional<VertexSet> s_used;
	std::optional<bool> decided;
	bool operator==(const TraceRecord &) const = default;
};
using Trace = std::vector<TraceRecord>;

struct Decided {
	bool answer;
	bool operator==(const Decided &) const = default;
};

struct Firing {
	TraceRecord record;
	std::variant<Instance, Decided> result;
};

enum class SSolver { Exact, Approx };

struct RuleOptions {
	SSolver s_solver = SSolver::Exact;
	// Use this feasible set as S instead of solving for one. It must be
	// feasible; R5 then fires iff |S| > 4k.
	std::optional<VertexSet> s_override;
};

/// Evaluates one rule's trigger on `inst` with freshly derived context.
/// nullopt when the trigger does not fire.
std::optional<Firing> apply_rule(const Instance &inst, RuleId rule, const RuleOptions &opts = {});

/// Re-applies a recorded firing (no trigger check).
std::variant<Instance, Decided> replay(const Instance &inst, const TraceRecord &record);

struct Measure {
	int64_t k;
	int64_t vertices;
	int64_t adjacent_pairs;
	int64_t multiplicity;
	auto operator<=>(const Measure &) const = default;
};
Measure measure(const Instance &inst);

enum class Phase { SparseDone, DenseDone, Final };

/// Bound checks that hold once the named phase's rules are exhausted.
/// Returns human-readable violations (empty when everything holds).
std::vector<std::string> assert_phase_invariants(const Instance &inst, Phase phase, const RuleOptions &opts = {});

int64_t kernel_vertex_bound(int64_t k);

struct KernelOptions {
	SSolver s_solver = SSolver::Exact;
	bool decide_residual = false;
	int residual_threshold = 64;
	bool check_invariants = true;
};

struct Diagnostics {
	int rules_fired = 0;
	std::array<int, kNumRules + 1> per_rule{};
	int measure_violations = 0;
	std::vector<std::string> invariant_violations;
};

struct KernelOutcome {
	std::variant<Decided, Instance> result;
	Trace trace;
	Diagnostics diagnostics;

	bool decided() const { return std::holds_alternative<Decided>(result); }
	bool answer() const { return std::get<Decided>(result).answer; }
	const Instance &reduced() const { return std::get<Instance>(result); }
};

KernelOutcome kernelize(const Instance &inst, const KernelOptions &opts = {});

void write_trace(std::ostream &out, const Trace &trace);
/// Throws std::runtime_error with a line number on malformed input.
Trace read_trace(std::istream &in);

} // namespace ctov
