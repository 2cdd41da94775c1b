#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace regfactor {

/// Dinic max-flow on a directed network with integer capacities.
class FlowNetwork {
public:
    explicit FlowNetwork(std::size_t nodes);

    std::size_t num_nodes() const noexcept { return adj_.size(); }
    void add_arc(std::size_t from, std::size_t to, std::int64_t capacity);
    /// Undirected edge: capacity in both directions.
    void add_edge(std::size_t a, std::size_t b, std::int64_t capacity);

    /// Max flow from s to t, stopping early once `limit` is reached.
    /// Resets previous flow first, so it may be called repeatedly.
    std::int64_t max_flow(std::size_t s, std::size_t t, std::int64_t limit = INT64_MAX);

private:
    struct Arc {
        std::size_t to;
        std::size_t rev;
        std::int64_t cap;
        std::int64_t initial;
    };

    bool build_levels(std::size_t s, std::size_t t);
    std::int64_t push(std::size_t v, std::size_t t, std::int64_t f);

    std::vector<std::vector<Arc>> adj_;
    std::vector<int> level_;
    std::vector<std::size_t> next_;
};

} // namespace regfactor
