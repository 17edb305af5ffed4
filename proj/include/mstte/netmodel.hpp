#pragma once

#include <algorithm>
#include <compare>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "mstte/check.hpp"

namespace mstte {

using SwitchId = int;
using HostId = int;

/// Undirected switch-pair identifying a link; endpoints kept normalized
/// so (a,b) and (b,a) compare equal.
struct LinkId {
    SwitchId a = -1;
    SwitchId b = -1;

    LinkId() = default;
    LinkId(SwitchId x, SwitchId y) : a(std::min(x, y)), b(std::max(x, y)) {
        if (x == y)
            throw std::invalid_argument("self-loop link at switch " +
                                        std::to_string(x));
    }

    auto operator<=>(const LinkId&) const = default;

    std::string str() const {
        return std::to_string(a) + "-" + std::to_string(b);
    }
};

/// One direction of a (full-duplex) link. Loads are accounted per
/// direction; the reverse direction has independent capacity.
struct DirectedLink {
    SwitchId from = -1;
    SwitchId to = -1;

    auto operator<=>(const DirectedLink&) const = default;

    LinkId undirected() const { return LinkId(from, to); }
    DirectedLink reversed() const { return {to, from}; }
    std::string str() const {
        return std::to_string(from) + "->" + std::to_string(to);
    }
};

/// Switched-network topology: switches joined by capacitated duplex
/// links, with end hosts attached to switches. At most one link per
/// switch pair; capacities are Mbps per direction.
class Topology {
public:
    void add_switch(SwitchId id) {
        if (switches_.count(id))
            throw std::invalid_argument("duplicate switch " + std::to_string(id));
        switches_.insert(id);
        adj_[id];
    }

    void add_link(SwitchId x, SwitchId y, double capacity_mbps) {
        LinkId id(x, y);
        if (!switches_.count(x) || !switches_.count(y))
            throw std::invalid_argument("link " + id.str() +
                                        " references unknown switch");
        if (links_.count(id))
            throw std::invalid_argument("parallel link " + id.str());
        if (capacity_mbps <= 0)
            throw std::invalid_argument("non-positive capacity on link " + id.str());
        links_.emplace(id, capacity_mbps);
        adj_[id.a].insert(id.b);
        adj_[id.b].insert(id.a);
    }

    void add_host(HostId id, SwitchId attach) {
        if (hosts_.count(id))
            throw std::invalid_argument("duplicate host " + std::to_string(id));
        if (!switches_.count(attach))
            throw std::invalid_argument("host " + std::to_string(id) +
                                        " attaches to unknown switch " +
                                        std::to_string(attach));
        hosts_.emplace(id, attach);
    }

    bool has_switch(SwitchId id) const { return switches_.count(id) != 0; }
    bool has_link(SwitchId x, SwitchId y) const {
        return x != y && links_.count(LinkId(x, y)) != 0;
    }
    bool has_host(HostId id) const { return hosts_.count(id) != 0; }

    double capacity(const LinkId& id) const {
        auto it = links_.find(id);
        if (it == links_.end())
            throw std::invalid_argument("unknown link " + id.str());
        return it->second;
    }

    SwitchId host_switch(HostId id) const {
        auto it = hosts_.find(id);
        if (it == hosts_.end())
            throw std::invalid_argument("unknown host " + std::to_string(id));
        return it->second;
    }

    const std::set<SwitchId>& switches() const { return switches_; }
    const std::map<LinkId, double>& links() const { return links_; }
    const std::map<HostId, SwitchId>& hosts() const { return hosts_; }

    const std::set<SwitchId>& neighbors(SwitchId id) const {
        auto it = adj_.find(id);
        if (it == adj_.end())
            throw std::invalid_argument("unknown switch " + std::to_string(id));
        return it->second;
    }

    std::size_t switch_count() const { return switches_.size(); }
    std::size_t link_count() const { return links_.size(); }
    std::size_t host_count() const { return hosts_.size(); }

    /// Connectivity over switches (hosts play no part).
    bool connected() const {
        if (switches_.empty()) return true;
        std::set<SwitchId> seen;
        std::vector<SwitchId> stack{*switches_.begin()};
        seen.insert(stack.back());
        while (!stack.empty()) {
            SwitchId v = stack.back();
            stack.pop_back();
            for (SwitchId n : adj_.at(v))
                if (seen.insert(n).second) stack.push_back(n);
        }
        return seen.size() == switches_.size();
    }

    /// Copy with one link removed. Unknown link is an error.
    Topology without_link(const LinkId& id) const {
        capacity(id);
        Topology t = *this;
        t.links_.erase(id);
        t.adj_[id.a].erase(id.b);
        t.adj_[id.b].erase(id.a);
        return t;
    }

    /// Copy with a switch removed along with its incident links and
    /// attached hosts.
    Topology without_switch(SwitchId id) const {
        if (!switches_.count(id))
            throw std::invalid_argument("unknown switch " + std::to_string(id));
        Topology t;
        for (SwitchId s : switches_)
            if (s != id) t.add_switch(s);
        for (const auto& [l, cap] : links_)
            if (l.a != id && l.b != id) t.add_link(l.a, l.b, cap);
        for (const auto& [h, s] : hosts_)
            if (s != id) t.add_host(h, s);
        return t;
    }

private:
    std::set<SwitchId> switches_;
    std::map<LinkId, double> links_;
    std::map<HostId, SwitchId> hosts_;
    std::map<SwitchId, std::set<SwitchId>> adj_;
};

/// Loop-free switch sequence. Always at least one hop; consecutive
/// nodes must be linked in the topology it was built against.
struct Path {
    std::vector<SwitchId> nodes;

    static Path between(const Topology& topo, std::vector<SwitchId> seq) {
        if (seq.size() < 2)
            throw std::invalid_argument("path needs at least one hop");
        std::set<SwitchId> seen;
        for (SwitchId v : seq)
            if (!seen.insert(v).second)
                throw std::invalid_argument("path repeats switch " +
                                            std::to_string(v));
        for (std::size_t i = 0; i + 1 < seq.size(); ++i)
            if (!topo.has_link(seq[i], seq[i + 1]))
                throw std::invalid_argument(
                    "path uses missing link " + LinkId(seq[i], seq[i + 1]).str());
        Path p;
        p.nodes = std::move(seq);
        return p;
    }

    SwitchId front() const { return nodes.front(); }
    SwitchId back() const { return nodes.back(); }
    std::size_t hop_count() const { return nodes.size() - 1; }

    std::vector<LinkId> edges() const {
        std::vector<LinkId> out;
        out.reserve(nodes.size() - 1);
        for (std::size_t i = 0; i + 1 < nodes.size(); ++i)
            out.emplace_back(nodes[i], nodes[i + 1]);
        return out;
    }

    std::vector<DirectedLink> directed_edges() const {
        std::vector<DirectedLink> out;
        out.reserve(nodes.size() - 1);
        for (std::size_t i = 0; i + 1 < nodes.size(); ++i)
            out.push_back({nodes[i], nodes[i + 1]});
        return out;
    }

    std::set<LinkId> edge_set() const {
        auto e = edges();
        return {e.begin(), e.end()};
    }

    bool contains_link(const LinkId& l) const {
        for (std::size_t i = 0; i + 1 < nodes.size(); ++i)
            if (LinkId(nodes[i], nodes[i + 1]) == l) return true;
        return false;
    }

    bool contains_switch(SwitchId v) const {
        return std::find(nodes.begin(), nodes.end(), v) != nodes.end();
    }

    /// Nodes strictly between the endpoints.
    std::vector<SwitchId> interior() const {
        if (nodes.size() <= 2) return {};
        return {nodes.begin() + 1, nodes.end() - 1};
    }

    std::string str() const {
        std::string s;
        for (std::size_t i = 0; i < nodes.size(); ++i) {
            if (i) s += '-';
            s += std::to_string(nodes[i]);
        }
        return s;
    }

    auto operator<=>(const Path&) const = default;
};

/// Offered load between two hosts, Mbps.
struct Demand {
    HostId src = -1;
    HostId dst = -1;
    double rate_mbps = 0;

    auto operator<=>(const Demand&) const = default;
};

struct TrafficMatrix {
    std::vector<Demand> demands;

    void validate(const Topology& topo) const {
        for (const auto& d : demands) {
            if (d.src == d.dst)
                throw std::invalid_argument("demand from host " +
                                            std::to_string(d.src) + " to itself");
            if (d.rate_mbps <= 0)
                throw std::invalid_argument("non-positive demand rate between " +
                                            std::to_string(d.src) + " and " +
                                            std::to_string(d.dst));
            topo.host_switch(d.src);
            topo.host_switch(d.dst);
        }
    }

    double offered_mbps() const {
        double sum = 0;
        for (const auto& d : demands) sum += d.rate_mbps;
        return sum;
    }
};

enum class PathRole { Primary, Backup };

inline const char* to_string(PathRole r) {
    return r == PathRole::Primary ? "primary" : "backup";
}

/// A selected switching path annotated with the flow it serves. Flow id
/// ties a primary to its backup; host annotations of -1 mark synthetic
/// paths (multicast tree fragments) that carry no demand.
struct TaggedPath {
    std::size_t flow_id = 0;
    HostId src = -1;
    HostId dst = -1;
    double rate_mbps = 0;
    PathRole role = PathRole::Primary;
    Path path;
};

struct PathSet {
    std::vector<TaggedPath> paths;

    void validate(const Topology& topo) const {
        for (const auto& tp : paths) {
            Path::between(topo, tp.path.nodes);
            if (tp.src >= 0 && topo.host_switch(tp.src) != tp.path.front())
                throw std::invalid_argument("path for host " +
                                            std::to_string(tp.src) +
                                            " does not start at its switch");
            if (tp.dst >= 0 && topo.host_switch(tp.dst) != tp.path.back())
                throw std::invalid_argument("path for host " +
                                            std::to_string(tp.dst) +
                                            " does not end at its switch");
        }
    }
};

/// Two distinct links meeting at one switch: a two-link sub-path, the
/// aggregation algorithm's merge-affinity unit.
struct EdgePair {
    LinkId first;
    LinkId second;
    SwitchId shared = -1;

    static std::optional<EdgePair> adjacent(const LinkId& x, const LinkId& y) {
        if (x == y) return std::nullopt;
        SwitchId common = -1;
        int matches = 0;
        for (SwitchId u : {x.a, x.b})
            for (SwitchId v : {y.a, y.b})
                if (u == v) {
                    common = u;
                    ++matches;
                }
        if (matches != 1) return std::nullopt;
        EdgePair ep;
        ep.first = std::min(x, y);
        ep.second = std::max(x, y);
        ep.shared = common;
        return ep;
    }

    auto operator<=>(const EdgePair&) const = default;

    std::string str() const { return first.str() + "+" + second.str(); }
};

/// A spanning tree bound to one 802.1q VLAN tag.
struct VlanTree {
    int vlan_tag = 0;
    std::set<LinkId> edges;
};

constexpr int kMaxVlanTag = 4094;

/// side x side switch grid with row-major ids, uniform link capacities
/// and a fixed number of hosts per switch (host n*H+k sits on switch n).
inline Topology build_grid(int side, double link_capacity_mbps,
                           int hosts_per_switch) {
    if (side < 2) throw std::invalid_argument("grid side must be >= 2");
    if (link_capacity_mbps <= 0)
        throw std::invalid_argument("grid capacity must be positive");
    if (hosts_per_switch < 0)
        throw std::invalid_argument("negative hosts per switch");
    Topology t;
    for (int r = 0; r < side; ++r)
        for (int c = 0; c < side; ++c) t.add_switch(r * side + c);
    for (int r = 0; r < side; ++r)
        for (int c = 0; c < side; ++c) {
            int v = r * side + c;
            if (c + 1 < side) t.add_link(v, v + 1, link_capacity_mbps);
            if (r + 1 < side) t.add_link(v, v + side, link_capacity_mbps);
        }
    for (int v = 0; v < side * side; ++v)
        for (int k = 0; k < hosts_per_switch; ++k)
            t.add_host(v * hosts_per_switch + k, v);
    return t;
}

/// Every ordered host pair whose attachment switches differ, at the
/// given rate.
inline TrafficMatrix uniform_matrix(const Topology& topo, double rate_mbps) {
    if (topo.host_count() < 2)
        throw std::invalid_argument("uniform matrix needs at least two hosts");
    if (rate_mbps <= 0)
        throw std::invalid_argument("uniform matrix rate must be positive");
    TrafficMatrix m;
    for (const auto& [src, ssw] : topo.hosts())
        for (const auto& [dst, dsw] : topo.hosts())
            if (src != dst && ssw != dsw)
                m.demands.push_back({src, dst, rate_mbps});
    return m;
}

/// True iff the edges form a spanning tree of the topology: acyclic,
/// connected over all switches, exactly |switches|-1 edges.
inline bool is_spanning_tree(const Topology& topo,
                             const std::set<LinkId>& edges) {
    for (const auto& e : edges) topo.capacity(e);  // rejects unknown links
    if (edges.size() != topo.switch_count() - 1 || topo.switch_count() == 0)
        return topo.switch_count() <= 1 && edges.empty();
    std::map<SwitchId, SwitchId> parent;
    auto find = [&](SwitchId v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    };
    for (SwitchId s : topo.switches()) parent[s] = s;
    std::size_t joined = 0;
    for (const auto& e : edges) {
        SwitchId ra = find(e.a), rb = find(e.b);
        if (ra == rb) return false;  // cycle
        parent[ra] = rb;
        ++joined;
    }
    return joined == topo.switch_count() - 1;
}

}  // namespace mstte
