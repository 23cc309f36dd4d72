#include "accnet/io.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <istream>
#include <map>
#include <sstream>
#include <utility>

namespace accnet {

std::optional<NetFormat> format_from_name(const std::string& name) {
    if (name == "edge-list") return NetFormat::EdgeList;
    if (name == "matrix-csv") return NetFormat::MatrixCsv;
    if (name == "json") return NetFormat::Json;
    return std::nullopt;
}

namespace {

double parse_weight(const std::string& tok, int line) {
    size_t pos = 0;
    double w;
    try {
        w = std::stod(tok, &pos);
    } catch (const std::exception&) {
        throw parse_error("non-numeric weight '" + tok + "'", line);
    }
    if (pos != tok.size()) throw parse_error("non-numeric weight '" + tok + "'", line);
    return w;
}

EdgeListGraph parse_edge_list(std::istream& in) {
    EdgeListGraph g;
    std::map<std::string, int> index;
    std::map<std::pair<int, int>, bool> seen;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string u, v, w, extra;
        if (!(ls >> u)) continue;        // blank line
        if (u[0] == '#') continue;       // comment
        if (!(ls >> v >> w)) throw parse_error("expected 'U V W'", lineno);
        if (ls >> extra) throw parse_error("trailing token '" + extra + "'", lineno);
        auto intern = [&](const std::string& label) {
            auto it = index.find(label);
            if (it != index.end()) return it->second;
            const int id = static_cast<int>(g.labels.size());
            index.emplace(label, id);
            g.labels.push_back(label);
            return id;
        };
        const int ui = intern(u), vi = intern(v);
        if (ui == vi) throw parse_error("self-loop on '" + u + "'", lineno);
        const double wv = parse_weight(w, lineno);
        if (wv <= 0.0) throw parse_error("edge weight must be positive", lineno);
        const auto key = std::minmax(ui, vi);
        if (seen.count({key.first, key.second}))
            throw parse_error("duplicate edge " + u + " " + v, lineno);
        seen[{key.first, key.second}] = true;
        g.edges.push_back({ui, vi, wv});
    }
    if (g.labels.empty()) throw parse_error("no edges found", lineno == 0 ? 1 : lineno);
    return g;
}

std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : line) {
        if (c == ',') {
            out.push_back(cur);
            cur.clear();
        } else if (c != '\r') {
            cur += c;
        }
    }
    out.push_back(cur);
    for (auto& s : out) {
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.erase(0, 1);
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
    }
    return out;
}

bool is_number(const std::string& s) {
    size_t pos = 0;
    try {
        (void)std::stod(s, &pos);
    } catch (const std::exception&) {
        return false;
    }
    return pos == s.size();
}

TransportationNetwork parse_matrix_csv(std::istream& in) {
    std::vector<std::vector<std::string>> rows;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        rows.push_back(split_csv(line));
    }
    if (rows.empty()) throw parse_error("empty matrix", 1);

    std::vector<std::string> labels;
    size_t first_data = 0;
    if (!rows[0].empty() && !is_number(rows[0][0])) {  // optional label header
        labels = rows[0];
        first_data = 1;
    }
    const size_t n = rows.size() - first_data;
    if (n == 0) throw parse_error("matrix has a header but no rows", 1);
    std::vector<std::vector<double>> m;
    for (size_t r = first_data; r < rows.size(); ++r) {
        if (rows[r].size() != n)
            throw parse_error("matrix is not square: row has " + std::to_string(rows[r].size()) +
                                  " entries, expected " + std::to_string(n),
                              static_cast<int>(r + 1));
        std::vector<double> row;
        for (size_t c = 0; c < n; ++c) {
            if (!is_number(rows[r][c]))
                throw parse_error("non-numeric entry '" + rows[r][c] + "'",
                                  static_cast<int>(r + 1), static_cast<int>(c + 1));
            row.push_back(std::stod(rows[r][c]));
        }
        m.push_back(std::move(row));
    }
    if (!labels.empty() && labels.size() != n)
        throw parse_error("header has " + std::to_string(labels.size()) + " labels for " +
                              std::to_string(n) + " columns",
                          1);
    return TransportationNetwork::from_matrix(std::move(labels), std::move(m));
}

}  // namespace

TransportationNetwork network_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("labels") || !j.contains("distances"))
        throw parse_error("json network needs 'labels' and 'distances'", 1);
    std::vector<std::string> labels = j["labels"].get<std::vector<std::string>>();
    std::vector<std::vector<double>> m = j["distances"].get<std::vector<std::vector<double>>>();
    return TransportationNetwork::from_matrix(std::move(labels), std::move(m));
}

nlohmann::json network_to_json(const TransportationNetwork& net) {
    nlohmann::json j;
    j["labels"] = net.labels;
    std::vector<std::vector<double>> m(net.n, std::vector<double>(net.n));
    for (int i = 0; i < net.n; ++i)
        for (int k = 0; k < net.n; ++k) m[i][k] = net.d(i, k);
    j["distances"] = m;
    if (!net.metric) j["non_metric"] = true;
    return j;
}

ParsedNetwork parse_network(std::istream& in, NetFormat format) {
    ParsedNetwork out;
    switch (format) {
        case NetFormat::EdgeList:
            out.graph = parse_edge_list(in);
            break;
        case NetFormat::MatrixCsv:
            out.net = parse_matrix_csv(in);
            break;
        case NetFormat::Json: {
            nlohmann::json j;
            try {
                in >> j;
            } catch (const nlohmann::json::exception& e) {
                throw parse_error(std::string("invalid json: ") + e.what(), 1);
            }
            out.net = network_from_json(j);
            break;
        }
    }
    return out;
}

TransportationNetwork load_network(std::istream& in, NetFormat format) {
    ParsedNetwork p = parse_network(in, format);
    if (p.graph) return metric_closure(*p.graph);
    return tag_metric(std::move(*p.net));
}

std::string format_sig(double x, int digits) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", digits, x);
    return buf;
}

std::string emit_edge_list(const TransportationNetwork& net) {
    std::string out;
    for (int i = 0; i < net.n; ++i)
        for (int j = i + 1; j < net.n; ++j)
            if (net.d(i, j) > 0.0)
                out += net.labels[i] + " " + net.labels[j] + " " + format_sig(net.d(i, j)) + "\n";
    return out;
}

std::string emit_matrix_csv(const TransportationNetwork& net) {
    std::string out;
    for (int i = 0; i < net.n; ++i) {
        out += net.labels[i];
        if (i + 1 < net.n) out += ",";
    }
    out += "\n";
    for (int i = 0; i < net.n; ++i) {
        for (int j = 0; j < net.n; ++j) {
            out += format_sig(net.d(i, j));
            if (j + 1 < net.n) out += ",";
        }
        out += "\n";
    }
    return out;
}

}  // namespace accnet
