#include "hypercast/maxflow.hpp"

#include <algorithm>
#include <stdexcept>

namespace hypercast {

MaxFlow::MaxFlow(int vertex_count) {
    if (vertex_count < 0) throw std::invalid_argument("MaxFlow: negative vertex count");
    adjacency_.resize(static_cast<std::size_t>(vertex_count));
    level_.assign(static_cast<std::size_t>(vertex_count), -1);
    next_arc_.assign(static_cast<std::size_t>(vertex_count), 0);
}

int MaxFlow::add_arc(int from, int to, std::int64_t capacity) {
    if (from < 0 || from >= vertex_count() || to < 0 || to >= vertex_count())
        throw std::invalid_argument("MaxFlow::add_arc: vertex out of range");
    if (capacity < 0) throw std::invalid_argument("MaxFlow::add_arc: negative capacity");
    const int id = static_cast<int>(arcs_.size());
    arcs_.push_back({to, capacity});
    arcs_.push_back({from, 0});
    initial_cap_.push_back(capacity);
    initial_cap_.push_back(0);
    adjacency_[static_cast<std::size_t>(from)].push_back(id);
    adjacency_[static_cast<std::size_t>(to)].push_back(id + 1);
    return id;
}

bool MaxFlow::bfs_levels(int s, int t) {
    std::fill(level_.begin(), level_.end(), -1);
    level_[static_cast<std::size_t>(s)] = 0;
    std::vector<int> frontier{s};
    std::vector<int> next;
    while (!frontier.empty() && level_[static_cast<std::size_t>(t)] < 0) {
        next.clear();
        for (int v : frontier) {
            for (int id : adjacency_[static_cast<std::size_t>(v)]) {
                const Arc& arc = arcs_[static_cast<std::size_t>(id)];
                if (arc.cap <= 0 || level_[static_cast<std::size_t>(arc.to)] >= 0) continue;
                level_[static_cast<std::size_t>(arc.to)] =
                    level_[static_cast<std::size_t>(v)] + 1;
                next.push_back(arc.to);
            }
        }
        frontier.swap(next);
    }
    return level_[static_cast<std::size_t>(t)] >= 0;
}

std::int64_t MaxFlow::push(int v, int t, std::int64_t budget) {
    if (v == t || budget == 0) return budget;
    std::int64_t sent = 0;
    auto& adjacency = adjacency_[static_cast<std::size_t>(v)];
    for (std::size_t& i = next_arc_[static_cast<std::size_t>(v)]; i < adjacency.size(); ++i) {
        const int id = adjacency[i];
        Arc& arc = arcs_[static_cast<std::size_t>(id)];
        if (arc.cap <= 0 ||
            level_[static_cast<std::size_t>(arc.to)] != level_[static_cast<std::size_t>(v)] + 1)
            continue;
        const std::int64_t pushed = push(arc.to, t, std::min(budget - sent, arc.cap));
        if (pushed <= 0) continue;
        arc.cap -= pushed;
        arcs_[static_cast<std::size_t>(id ^ 1)].cap += pushed;
        sent += pushed;
        if (sent == budget) return sent;
    }
    level_[static_cast<std::size_t>(v)] = -1;  // dead end for this phase
    return sent;
}

std::int64_t MaxFlow::run(int s, int t, std::int64_t limit) {
    if (s < 0 || s >= vertex_count() || t < 0 || t >= vertex_count() || s == t)
        throw std::invalid_argument("MaxFlow::run: invalid terminals");
    if (limit < 0) throw std::invalid_argument("MaxFlow::run: negative limit");
    std::int64_t flow = 0;
    while (flow < limit && bfs_levels(s, t)) {
        std::fill(next_arc_.begin(), next_arc_.end(), 0);
        while (flow < limit) {
            const std::int64_t pushed = push(s, t, limit - flow);
            if (pushed == 0) break;
            flow += pushed;
        }
    }
    return flow;
}

void MaxFlow::reset() {
    for (std::size_t i = 0; i < arcs_.size(); ++i) arcs_[i].cap = initial_cap_[i];
}

std::vector<char> MaxFlow::source_side(int s) const {
    std::vector<char> seen(static_cast<std::size_t>(vertex_count()), 0);
    if (s < 0 || s >= vertex_count()) throw std::invalid_argument("MaxFlow::source_side: bad s");
    seen[static_cast<std::size_t>(s)] = 1;
    std::vector<int> stack{s};
    while (!stack.empty()) {
        const int v = stack.back();
        stack.pop_back();
        for (int id : adjacency_[static_cast<std::size_t>(v)]) {
            const Arc& arc = arcs_[static_cast<std::size_t>(id)];
            if (arc.cap > 0 && !seen[static_cast<std::size_t>(arc.to)]) {
                seen[static_cast<std::size_t>(arc.to)] = 1;
                stack.push_back(arc.to);
            }
        }
    }
    return seen;
}

}  // namespace hypercast
