#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>

#include "ctov/multigraph.hpp"

namespace ctov {

class ParseError : public std::runtime_error {
public:
	ParseError(int line, const std::string &what)
			: std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
	int line() const { return line_; }

private:
	int line_;
};

/// Text format:
///   c <comment>
///   p ctov <n> <m> <k>
///   e <u> <v> <multiplicity>      (m lines, 0-based ids)
Instance parse_instance(std::istream &in);
Instance parse_instance_string(const std::string &text);

/// Surviving vertices are renumbered 0..n-1 in ascending order; edges are
/// written sorted by (u, v) with u < v.
void write_instance(std::ostream &out, const Instance &inst);
std::string serialize_instance(const Instance &inst);

/// Whitespace-separated vertex ids; an optional leading "s" token is skipped.
VertexSet parse_vertex_set(std::istream &in);

struct GeneratorSpec {
	uint64_t seed = 1;
	int k = 1;                  // budget written into the instance
	int planted = 1;            // hub vertices that form the planted solution
	int cliques = 2;
	int clique_min = 3;
	int clique_max = 6;
	int trees = 2;
	int tree_min = 2;
	int tree_max = 6;
	int noise = 0;              // extra cycles, each hit by one more planted vertex
	int noise_min = 4;
	int noise_max = 6;
	double attach = 0.5;        // chance that a hub links to a given component
	int max_links = 2;          // attachment edges per (hub, component)
};

struct Generated {
	Instance instance;
	VertexSet planted;
};

/// Deterministic for a given spec; removing `planted` leaves cliques and trees.
Generated generate(const GeneratorSpec &spec);

} // namespace ctov
