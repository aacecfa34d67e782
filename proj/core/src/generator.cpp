#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>

#include "ctov/io.hpp"

namespace ctov {

namespace {

// std distributions differ between standard libraries; these do not.
class Rng {
public:
	explicit Rng(uint64_t seed) : engine_(seed) {}

	// uniform in [lo, hi]
	int range(int lo, int hi) {
		if (hi <= lo) {
			return lo;
		}
		const uint64_t span = static_cast<uint64_t>(hi - lo) + 1;
		const uint64_t limit = UINT64_MAX - UINT64_MAX % span;
		uint64_t x;
		do {
			x = engine_();
		} while (x >= limit);
		return lo + static_cast<int>(x % span);
	}

	bool chance(double p) {
		return static_cast<double>(engine_() >> 11) * 0x1.0p-53 < p;
	}

private:
	std::mt19937_64 engine_;
};

void check(const GeneratorSpec &spec) {
	auto bad = [](const char *what) { throw std::invalid_argument(std::string("generator spec: ") + what); };
	if (spec.k < 0 || spec.planted < 0 || spec.cliques < 0 || spec.trees < 0 || spec.noise < 0) {
		bad("counts must be non-negative");
	}
	if (spec.clique_min < 1 || spec.clique_max < spec.clique_min) {
		bad("clique size range");
	}
	if (spec.tree_min < 1 || spec.tree_max < spec.tree_min) {
		bad("tree size range");
	}
	if (spec.noise_min < 3 || spec.noise_max < spec.noise_min) {
		bad("noise cycle length range");
	}
	if (spec.attach < 0 || spec.attach > 1 || spec.max_links < 1) {
		bad("attachment parameters");
	}
}

} // namespace

Generated generate(const GeneratorSpec &spec) {
	check(spec);
	Rng rng(spec.seed);
	std::vector<std::pair<int, int>> edges;
	std::vector<std::vector<int>> groups;
	int n = spec.planted;
	std::vector<int> planted;
	for (int h = 0; h < spec.planted; ++h) {
		planted.push_back(h);
	}

	for (int c = 0; c < spec.cliques; ++c) {
		const int size = rng.range(spec.clique_min, spec.clique_max);
		std::vector<int> g;
		for (int i = 0; i < size; ++i) {
			g.push_back(n + i);
			for (int j = 0; j < i; ++j) {
				edges.emplace_back(n + j, n + i);
			}
		}
		n += size;
		groups.push_back(std::move(g));
	}
	for (int t = 0; t < spec.trees; ++t) {
		const int size = rng.range(spec.tree_min, spec.tree_max);
		std::vector<int> g{n};
		for (int i = 1; i < size; ++i) {
			edges.emplace_back(n + rng.range(0, i - 1), n + i);
			g.push_back(n + i);
		}
		n += size;
		groups.push_back(std::move(g));
	}
	for (int c = 0; c < spec.noise; ++c) {
		const int len = rng.range(spec.noise_min, spec.noise_max);
		std::vector<int> g;
		for (int i = 0; i < len; ++i) {
			g.push_back(n + i);
			edges.emplace_back(n + i, n + (i + 1) % len);
		}
		planted.push_back(n + rng.range(0, len - 1));
		n += len;
		groups.push_back(std::move(g));
	}

	std::set<std::pair<int, int>> seen(edges.begin(), edges.end());
	auto link = [&](int a, int b) {
		const auto p = std::minmax(a, b);
		if (a != b && seen.insert({p.first, p.second}).second) {
			edges.emplace_back(p.first, p.second);
		}
	};
	for (int h = 0; h < spec.planted; ++h) {
		for (int o = 0; o < h; ++o) {
			if (rng.chance(spec.attach)) {
				link(o, h);
			}
		}
		for (const auto &g : groups) {
			if (!rng.chance(spec.attach)) {
				continue;
			}
			const int links = rng.range(1, spec.max_links);
			for (int i = 0; i < links; ++i) {
				link(h, g[rng.range(0, static_cast<int>(g.size()) - 1)]);
			}
		}
	}

	// hide the construction order
	std::vector<int> perm(n);
	for (int i = 0; i < n; ++i) {
		perm[i] = i;
	}
	for (int i = n - 1; i > 0; --i) {
		std::swap(perm[i], perm[rng.range(0, i)]);
	}

	Generated out;
	out.instance.graph = MultiGraph(n);
	out.instance.k = spec.k;
	for (const auto &[a, b] : edges) {
		out.instance.graph.add_edge(perm[a], perm[b]);
	}
	for (int p : planted) {
		out.planted.push_back(perm[p]);
	}
	std::sort(out.planted.begin(), out.planted.end());
	out.planted.erase(std::unique(out.planted.begin(), out.planted.end()), out.planted.end());
	return out;
}

} // namespace ctov
