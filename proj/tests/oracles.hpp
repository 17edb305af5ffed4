#pragma once

// Independent reference implementations used only to cross-check library
// results. Everything here recomputes from first principles (DFS, brute
// force, enumeration) and deliberately shares no code with the library
// algorithms under test.

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "mstte/netmodel.hpp"

namespace oracle {

using mstte::HostId;
using mstte::LinkId;
using mstte::SwitchId;

using Adjacency = std::map<SwitchId, std::set<SwitchId>>;

inline Adjacency adjacency_of(const std::set<LinkId>& edges) {
    Adjacency adj;
    for (const auto& e : edges) {
        adj[e.a].insert(e.b);
        adj[e.b].insert(e.a);
    }
    return adj;
}

inline Adjacency adjacency_of(const mstte::Topology& topo) {
    Adjacency adj;
    for (SwitchId s : topo.switches()) adj[s];
    for (const auto& [l, cap] : topo.links()) {
        adj[l.a].insert(l.b);
        adj[l.b].insert(l.a);
    }
    return adj;
}

/// DFS cycle detection over an undirected edge set.
inline bool has_cycle(const std::set<LinkId>& edges) {
    Adjacency adj = adjacency_of(edges);
    std::set<SwitchId> visited;
    for (const auto& [start, unused] : adj) {
        if (visited.count(start)) continue;
        // stack of (node, parent)
        std::vector<std::pair<SwitchId, SwitchId>> stack{{start, -1}};
        visited.insert(start);
        while (!stack.empty()) {
            auto [v, parent] = stack.back();
            stack.pop_back();
            bool parent_seen = false;
            for (SwitchId n : adj[v]) {
                if (n == parent && !parent_seen) {
                    parent_seen = true;  // the edge we came over, once
                    continue;
                }
                if (visited.count(n)) return true;
                visited.insert(n);
                stack.push_back({n, v});
            }
        }
    }
    return false;
}

inline std::set<SwitchId> reachable(const Adjacency& adj, SwitchId from) {
    std::set<SwitchId> seen;
    if (!adj.count(from)) return seen;
    std::vector<SwitchId> stack{from};
    seen.insert(from);
    while (!stack.empty()) {
        SwitchId v = stack.back();
        stack.pop_back();
        auto it = adj.find(v);
        if (it == adj.end()) continue;
        for (SwitchId n : it->second)
            if (seen.insert(n).second) stack.push_back(n);
    }
    return seen;
}

/// Spanning-tree check by cycle detection plus connectivity, no
/// union-find involved.
inline bool spanning_tree(const mstte::Topology& topo,
                          const std::set<LinkId>& edges) {
    if (topo.switch_count() <= 1) return edges.empty();
    if (edges.size() != topo.switch_count() - 1) return false;
    if (has_cycle(edges)) return false;
    Adjacency adj = adjacency_of(edges);
    for (SwitchId s : topo.switches()) adj[s];
    return reachable(adj, *topo.switches().begin()).size() == topo.switch_count();
}

/// All simple paths between two switches, DFS backtracking. Intended
/// for small graphs only.
inline std::vector<std::vector<SwitchId>> all_simple_paths(const Adjacency& adj,
                                                           SwitchId from,
                                                           SwitchId to) {
    std::vector<std::vector<SwitchId>> out;
    std::vector<SwitchId> cur{from};
    std::set<SwitchId> used{from};
    std::function<void(SwitchId)> dfs = [&](SwitchId v) {
        if (v == to) {
            if (cur.size() >= 2) out.push_back(cur);
            return;
        }
        auto it = adj.find(v);
        if (it == adj.end()) return;
        for (SwitchId n : it->second) {
            if (used.count(n)) continue;
            used.insert(n);
            cur.push_back(n);
            dfs(n);
            cur.pop_back();
            used.erase(n);
        }
    };
    dfs(from);
    return out;
}

/// Lexicographically smallest fewest-hop path, found by plain breadth
/// enumeration over all shortest paths.
inline std::optional<std::vector<SwitchId>> lex_shortest_path(
    const Adjacency& adj, SwitchId from, SwitchId to) {
    if (from == to) return std::nullopt;
    // Breadth-first frontier of lexicographically sorted partial paths;
    // the first completed path at the shallowest depth is the answer.
    std::vector<std::vector<SwitchId>> frontier{{from}};
    std::set<SwitchId> levels_seen{from};
    while (!frontier.empty()) {
        std::vector<std::vector<SwitchId>> next;
        std::set<SwitchId> next_nodes;
        std::sort(frontier.begin(), frontier.end());
        for (const auto& p : frontier) {
            if (p.back() == to) return p;
        }
        for (const auto& p : frontier) {
            auto it = adj.find(p.back());
            if (it == adj.end()) continue;
            for (SwitchId n : it->second) {
                if (levels_seen.count(n)) continue;
                auto q = p;
                q.push_back(n);
                next.push_back(std::move(q));
                next_nodes.insert(n);
            }
        }
        levels_seen.insert(next_nodes.begin(), next_nodes.end());
        frontier = std::move(next);
    }
    return std::nullopt;
}

/// One path per group member for the exhaustive grouping search.
struct GroupItem {
    std::set<LinkId> edges;
    std::size_t flow_id = 0;
    mstte::PathRole role = mstte::PathRole::Primary;
};

/// Minimum number of groups such that each group's edge union is
/// acyclic and no group holds both roles of one flow. Branch and bound
/// over all partitions; fine up to ~10 items.
inline std::size_t min_acyclic_groups(const std::vector<GroupItem>& items) {
    if (items.empty()) return 0;
    std::size_t best = items.size();
    std::vector<std::set<LinkId>> groups;
    std::vector<std::vector<std::pair<std::size_t, mstte::PathRole>>> flows;
    std::function<void(std::size_t)> place = [&](std::size_t i) {
        if (groups.size() >= best) return;
        if (i == items.size()) {
            best = std::min(best, groups.size());
            return;
        }
        const auto& item = items[i];
        for (std::size_t g = 0; g < groups.size(); ++g) {
            bool clash = false;
            for (auto [f, r] : flows[g])
                if (f == item.flow_id && r != item.role) clash = true;
            if (clash) continue;
            std::set<LinkId> merged = groups[g];
            merged.insert(item.edges.begin(), item.edges.end());
            if (has_cycle(merged)) continue;
            auto saved = groups[g];
            groups[g] = std::move(merged);
            flows[g].push_back({item.flow_id, item.role});
            place(i + 1);
            flows[g].pop_back();
            groups[g] = std::move(saved);
        }
        groups.push_back(item.edges);
        flows.push_back({{item.flow_id, item.role}});
        place(i + 1);
        groups.pop_back();
        flows.pop_back();
    };
    place(0);
    return best;
}

}  // namespace oracle
