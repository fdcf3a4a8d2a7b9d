#pragma once

namespace qk::effort {

/// Worst-case work counters for the current thread, reset per identity
/// sample so residual records can report evaluation effort.
struct Stats {
    int max_series_terms = 0;
    int max_quad_nodes = 0;
};

void reset();
Stats snapshot();
void note_series_terms(int n);
void note_quad_nodes(int n);

}  // namespace qk::effort
