#pragma once

#include <charconv>
#include <cstdio>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "mstte/check.hpp"
#include "mstte/netmodel.hpp"

namespace mstte {

/// Shortest representation that parses back to the same value.
inline std::string fmt_double(double v) {
    char buf[64];
    auto r = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, r.ptr);
}

inline std::string fmt_fixed(double v, int prec) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", prec, v);
    return buf;
}

inline double parse_double(const std::string& tok, int line) {
    double v = 0;
    auto r = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (r.ec != std::errc() || r.ptr != tok.data() + tok.size())
        throw ParseError(line, "expected a number, got '" + tok + "'");
    return v;
}

inline int parse_int(const std::string& tok, int line) {
    int v = 0;
    auto r = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (r.ec != std::errc() || r.ptr != tok.data() + tok.size())
        throw ParseError(line, "expected an integer, got '" + tok + "'");
    return v;
}

/// Splits a line into whitespace-separated tokens, dropping everything
/// after a '#'.
inline std::vector<std::string> tokenize_line(const std::string& line) {
    std::string body = line.substr(0, line.find('#'));
    std::istringstream ss(body);
    std::vector<std::string> toks;
    std::string t;
    while (ss >> t) toks.push_back(t);
    return toks;
}

inline void write_topology(std::ostream& os, const Topology& topo) {
    for (SwitchId s : topo.switches()) os << "switch " << s << "\n";
    for (const auto& [l, cap] : topo.links())
        os << "link " << l.a << " " << l.b << " " << fmt_double(cap) << "\n";
    for (const auto& [h, s] : topo.hosts())
        os << "host " << h << " " << s << "\n";
}

inline void write_matrix(std::ostream& os, const TrafficMatrix& m) {
    for (const auto& d : m.demands)
        os << "demand " << d.src << " " << d.dst << " " << fmt_double(d.rate_mbps)
           << "\n";
}

struct NetworkFile {
    Topology topology;
    TrafficMatrix matrix;
};

/// Reads the line-oriented network format: `switch <id>`,
/// `link <a> <b> <capacity_mbps>`, `host <id> <switch>`,
/// `demand <src> <dst> <rate_mbps>`. '#' starts a comment. Switches
/// must be declared before links and hosts that reference them.
inline NetworkFile parse_network(std::istream& in) {
    NetworkFile out;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        auto toks = tokenize_line(line);
        if (toks.empty()) continue;
        const std::string& kw = toks[0];
        try {
            if (kw == "switch") {
                if (toks.size() != 2)
                    throw ParseError(line_no, "switch takes one id");
                out.topology.add_switch(parse_int(toks[1], line_no));
            } else if (kw == "link") {
                if (toks.size() != 4)
                    throw ParseError(line_no, "link takes <a> <b> <capacity_mbps>");
                out.topology.add_link(parse_int(toks[1], line_no),
                                      parse_int(toks[2], line_no),
                                      parse_double(toks[3], line_no));
            } else if (kw == "host") {
                if (toks.size() != 3)
                    throw ParseError(line_no, "host takes <id> <switch>");
                out.topology.add_host(parse_int(toks[1], line_no),
                                      parse_int(toks[2], line_no));
            } else if (kw == "demand") {
                if (toks.size() != 4)
                    throw ParseError(line_no, "demand takes <src> <dst> <rate_mbps>");
                Demand d{parse_int(toks[1], line_no), parse_int(toks[2], line_no),
                         parse_double(toks[3], line_no)};
                if (d.src == d.dst)
                    throw ParseError(line_no, "demand endpoints must differ");
                if (d.rate_mbps <= 0)
                    throw ParseError(line_no, "demand rate must be positive");
                out.topology.host_switch(d.src);
                out.topology.host_switch(d.dst);
                out.matrix.demands.push_back(d);
            } else {
                throw ParseError(line_no, "unknown directive '" + kw + "'");
            }
        } catch (const std::invalid_argument& e) {
            throw ParseError(line_no, e.what());
        }
    }
    return out;
}

inline void write_tagged_path(std::ostream& os, const TaggedPath& tp) {
    os << "path " << tp.src << " " << tp.dst << " " << fmt_double(tp.rate_mbps)
       << " " << to_string(tp.role) << " " << tp.path.str() << "\n";
}

inline void write_path_set(std::ostream& os, const PathSet& ps) {
    for (const auto& tp : ps.paths) write_tagged_path(os, tp);
}

/// Reads an assignment dump (`path <src> <dst> <rate> primary|backup
/// <n0>-<n1>-...`). Primary lines open flows; a backup line joins the
/// flow with the same src/dst pair and must follow its primary.
inline PathSet parse_path_set(std::istream& in, const Topology& topo) {
    PathSet out;
    std::map<std::pair<HostId, HostId>, std::size_t> flow_of;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        auto toks = tokenize_line(line);
        if (toks.empty()) continue;
        if (toks[0] != "path")
            throw ParseError(line_no, "unknown directive '" + toks[0] + "'");
        if (toks.size() != 6)
            throw ParseError(line_no,
                             "path takes <src> <dst> <rate> primary|backup <nodes>");
        TaggedPath tp;
        tp.src = parse_int(toks[1], line_no);
        tp.dst = parse_int(toks[2], line_no);
        tp.rate_mbps = parse_double(toks[3], line_no);
        if (toks[4] == "primary")
            tp.role = PathRole::Primary;
        else if (toks[4] == "backup")
            tp.role = PathRole::Backup;
        else
            throw ParseError(line_no, "role must be primary or backup");
        std::vector<SwitchId> nodes;
        std::string seq = toks[5];
        std::size_t pos = 0;
        while (pos <= seq.size()) {
            std::size_t dash = seq.find('-', pos);
            std::string part = seq.substr(pos, dash == std::string::npos
                                                   ? std::string::npos
                                                   : dash - pos);
            nodes.push_back(parse_int(part, line_no));
            if (dash == std::string::npos) break;
            pos = dash + 1;
        }
        try {
            tp.path = Path::between(topo, nodes);
        } catch (const std::invalid_argument& e) {
            throw ParseError(line_no, e.what());
        }
        auto key = std::make_pair(tp.src, tp.dst);
        if (tp.role == PathRole::Primary) {
            tp.flow_id = out.paths.size();
            flow_of[key] = tp.flow_id;
        } else {
            auto it = flow_of.find(key);
            if (it == flow_of.end())
                throw ParseError(line_no, "backup before primary for " +
                                              std::to_string(tp.src) + "->" +
                                              std::to_string(tp.dst));
            tp.flow_id = it->second;
        }
        out.paths.push_back(std::move(tp));
    }
    return out;
}

}  // namespace mstte
