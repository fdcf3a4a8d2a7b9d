#include "qkernel/effort.hpp"

#include <algorithm>

namespace qk::effort {

namespace {
thread_local Stats g_stats;
}

void reset() { g_stats = Stats{}; }

Stats snapshot() { return g_stats; }

void note_series_terms(int n) { g_stats.max_series_terms = std::max(g_stats.max_series_terms, n); }

void note_quad_nodes(int n) { g_stats.max_quad_nodes = std::max(g_stats.max_quad_nodes, n); }

}  // namespace qk::effort
