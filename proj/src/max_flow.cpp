#include "regfactor/max_flow.hpp"

#include "regfactor/errors.hpp"

#include <algorithm>
#include <queue>

namespace regfactor {

FlowNetwork::FlowNetwork(std::size_t nodes) : adj_(nodes), level_(nodes), next_(nodes) {}

void FlowNetwork::add_arc(std::size_t from, std::size_t to, std::int64_t capacity) {
    if (from >= adj_.size() || to >= adj_.size())
        throw DomainError("flow arc endpoint out of range");
    if (from == to)
        return;
    adj_[from].push_back({to, adj_[to].size(), capacity, capacity});
    adj_[to].push_back({from, adj_[from].size() - 1, 0, 0});
}

void FlowNetwork::add_edge(std::size_t a, std::size_t b, std::int64_t capacity) {
    if (a >= adj_.size() || b >= adj_.size())
        throw DomainError("flow edge endpoint out of range");
    if (a == b)
        return;
    adj_[a].push_back({b, adj_[b].size(), capacity, capacity});
    adj_[b].push_back({a, adj_[a].size() - 1, capacity, capacity});
}

bool FlowNetwork::build_levels(std::size_t s, std::size_t t) {
    std::fill(level_.begin(), level_.end(), -1);
    std::queue<std::size_t> q;
    level_[s] = 0;
    q.push(s);
    while (!q.empty()) {
        auto v = q.front();
        q.pop();
        for (const auto& a : adj_[v]) {
            if (a.cap > 0 && level_[a.to] < 0) {
                level_[a.to] = level_[v] + 1;
                q.push(a.to);
            }
        }
    }
    return level_[t] >= 0;
}

std::int64_t FlowNetwork::push(std::size_t v, std::size_t t, std::int64_t f) {
    if (v == t)
        return f;
    for (auto& i = next_[v]; i < adj_[v].size(); ++i) {
        auto& a = adj_[v][i];
        if (a.cap <= 0 || level_[a.to] != level_[v] + 1)
            continue;
        if (auto got = push(a.to, t, std::min(f, a.cap)); got > 0) {
            a.cap -= got;
            adj_[a.to][a.rev].cap += got;
            return got;
        }
    }
    return 0;
}

std::int64_t FlowNetwork::max_flow(std::size_t s, std::size_t t, std::int64_t limit) {
    if (s >= adj_.size() || t >= adj_.size())
        throw DomainError("flow terminal out of range");
    for (auto& list : adj_)
        for (auto& a : list)
            a.cap = a.initial;
    if (s == t)
        return 0;
    std::int64_t total = 0;
    while (total < limit && build_levels(s, t)) {
        std::fill(next_.begin(), next_.end(), 0);
        while (total < limit) {
            auto f = push(s, t, limit - total);
            if (f == 0)
                break;
            total += f;
        }
    }
    return total;
}

} // namespace regfactor
