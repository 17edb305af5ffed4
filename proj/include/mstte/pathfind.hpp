#pragma once

#include <functional>
#include <limits>
#include <map>
#include <optional>
#include <queue>
#include <set>
#include <vector>

#include "mstte/netmodel.hpp"

namespace mstte {

class UnionFind {
public:
    void add(int v) { parent_.emplace(v, v); }

    int find(int v) {
        int r = v;
        while (parent_.at(r) != r) r = parent_.at(r);
        while (parent_.at(v) != r) {
            int next = parent_.at(v);
            parent_[v] = r;
            v = next;
        }
        return r;
    }

    /// False iff both were already in the same set.
    bool unite(int a, int b) {
        int ra = find(a), rb = find(b);
        if (ra == rb) return false;
        parent_[ra] = rb;
        return true;
    }

private:
    std::map<int, int> parent_;
};

inline bool edges_acyclic(const std::set<LinkId>& edges) {
    UnionFind uf;
    for (const auto& e : edges) {
        uf.add(e.a);
        uf.add(e.b);
    }
    for (const auto& e : edges)
        if (!uf.unite(e.a, e.b)) return false;
    return true;
}

using LinkPredicate = std::function<bool(const DirectedLink&)>;
using SwitchPredicate = std::function<bool(SwitchId)>;
using LinkWeight = std::function<double(const DirectedLink&)>;

/// Minimum-cost simple path under a strictly positive per-direction
/// weight. Ties on cost resolve to the lexicographically smallest node
/// sequence. Optional predicates restrict usable links and transit
/// switches (endpoints are always allowed).
inline std::optional<Path> min_cost_path(const Topology& topo, SwitchId from,
                                         SwitchId to, const LinkWeight& weight,
                                         const LinkPredicate& link_ok = {},
                                         const SwitchPredicate& switch_ok = {}) {
    if (!topo.has_switch(from) || !topo.has_switch(to))
        throw std::invalid_argument("path endpoints must be switches");
    if (from == to) return std::nullopt;

    struct Label {
        double cost;
        std::vector<SwitchId> nodes;
        bool operator<(const Label& o) const {
            if (cost != o.cost) return cost < o.cost;
            return nodes < o.nodes;
        }
    };
    auto cmp = [](const Label& a, const Label& b) { return b < a; };
    std::priority_queue<Label, std::vector<Label>, decltype(cmp)> heap(cmp);
    std::map<SwitchId, Label> best;
    std::set<SwitchId> settled;

    Label start{0.0, {from}};
    best.emplace(from, start);
    heap.push(std::move(start));
    while (!heap.empty()) {
        Label cur = heap.top();
        heap.pop();
        SwitchId v = cur.nodes.back();
        if (!settled.insert(v).second) continue;
        if (v == to) {
            Path p;
            p.nodes = std::move(cur.nodes);
            return p;
        }
        for (SwitchId n : topo.neighbors(v)) {
            if (settled.count(n)) continue;
            if (n != to && switch_ok && !switch_ok(n)) continue;
            DirectedLink dl{v, n};
            if (link_ok && !link_ok(dl)) continue;
            double w = weight(dl);
            Label cand{cur.cost + w, cur.nodes};
            cand.nodes.push_back(n);
            auto it = best.find(n);
            if (it == best.end() || cand < it->second) {
                best[n] = cand;
                heap.push(std::move(cand));
            }
        }
    }
    return std::nullopt;
}

/// Fewest-hops path, lexicographically smallest on ties.
inline std::optional<Path> shortest_path(const Topology& topo, SwitchId from,
                                         SwitchId to,
                                         const LinkPredicate& link_ok = {},
                                         const SwitchPredicate& switch_ok = {}) {
    return min_cost_path(
        topo, from, to, [](const DirectedLink&) { return 1.0; }, link_ok,
        switch_ok);
}

/// BFS hop counts from a source; absent keys are unreachable.
inline std::map<SwitchId, int> hop_distances(const Topology& topo, SwitchId from,
                                             const LinkPredicate& link_ok = {}) {
    std::map<SwitchId, int> dist;
    if (!topo.has_switch(from)) return dist;
    std::queue<SwitchId> q;
    dist[from] = 0;
    q.push(from);
    while (!q.empty()) {
        SwitchId v = q.front();
        q.pop();
        for (SwitchId n : topo.neighbors(v)) {
            if (dist.count(n)) continue;
            if (link_ok && !link_ok({v, n})) continue;
            dist[n] = dist[v] + 1;
            q.push(n);
        }
    }
    return dist;
}

/// Deterministic shortest-path tree rooted at `root`: every switch's
/// root path is the lexicographically smallest among fewest-hop paths.
/// Returned map contains a parent for every reachable non-root switch.
inline std::map<SwitchId, SwitchId> shortest_path_tree(const Topology& topo,
                                                       SwitchId root) {
    if (!topo.has_switch(root))
        throw std::invalid_argument("tree root must be a switch");
    std::map<SwitchId, int> level = hop_distances(topo, root);
    std::vector<std::pair<int, SwitchId>> order;
    for (const auto& [v, d] : level) order.emplace_back(d, v);
    std::sort(order.begin(), order.end());

    std::map<SwitchId, std::vector<SwitchId>> root_path;
    root_path[root] = {root};
    std::map<SwitchId, SwitchId> parent;
    for (const auto& [d, v] : order) {
        if (v == root) continue;
        const std::vector<SwitchId>* best = nullptr;
        SwitchId best_parent = -1;
        for (SwitchId n : topo.neighbors(v)) {
            auto it = level.find(n);
            if (it == level.end() || it->second != d - 1) continue;
            const auto& cand = root_path.at(n);
            if (!best || cand < *best) {
                best = &cand;
                best_parent = n;
            }
        }
        parent[v] = best_parent;
        auto path = *best;
        path.push_back(v);
        root_path.emplace(v, std::move(path));
    }
    return parent;
}

inline std::set<LinkId> tree_edges(const std::map<SwitchId, SwitchId>& parent) {
    std::set<LinkId> out;
    for (const auto& [v, p] : parent) out.insert(LinkId(v, p));
    return out;
}

/// Unique node sequence between two switches inside a tree edge set;
/// empty when no tree path connects them.
inline std::vector<SwitchId> path_in_tree(const std::set<LinkId>& edges,
                                          SwitchId from, SwitchId to) {
    std::map<SwitchId, std::vector<SwitchId>> adj;
    for (const auto& e : edges) {
        adj[e.a].push_back(e.b);
        adj[e.b].push_back(e.a);
    }
    if (!adj.count(from) || !adj.count(to)) return {};
    std::map<SwitchId, SwitchId> prev;
    std::queue<SwitchId> q;
    prev[from] = from;
    q.push(from);
    while (!q.empty() && !prev.count(to)) {
        SwitchId v = q.front();
        q.pop();
        for (SwitchId n : adj[v])
            if (!prev.count(n)) {
                prev[n] = v;
                q.push(n);
            }
    }
    if (!prev.count(to)) return {};
    std::vector<SwitchId> seq;
    for (SwitchId v = to;; v = prev[v]) {
        seq.push_back(v);
        if (v == from) break;
    }
    std::reverse(seq.begin(), seq.end());
    return seq;
}

}  // namespace mstte
