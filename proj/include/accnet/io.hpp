#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include <json.hpp>

#include "accnet/network.hpp"

namespace accnet {

enum class NetFormat { EdgeList, MatrixCsv, Json };

std::optional<NetFormat> format_from_name(const std::string& name);

struct parse_error : std::runtime_error {
    int line = 0;
    int column = 0;
    parse_error(const std::string& what, int line_, int column_ = 0)
        : std::runtime_error(what + " (line " + std::to_string(line_) +
                             (column_ > 0 ? ", column " + std::to_string(column_) : "") + ")"),
          line(line_), column(column_) {}
};

// Edge-list input stays a graph (completed later via metric closure);
// matrix/json input is already a full network. Exactly one member is set.
struct ParsedNetwork {
    std::optional<EdgeListGraph> graph;
    std::optional<TransportationNetwork> net;
};

ParsedNetwork parse_network(std::istream& in, NetFormat format);

// Parses and, for edge lists, applies the metric closure. The result carries
// the metric tag from validation.
TransportationNetwork load_network(std::istream& in, NetFormat format);

std::string emit_edge_list(const TransportationNetwork& net);
std::string emit_matrix_csv(const TransportationNetwork& net);

nlohmann::json network_to_json(const TransportationNetwork& net);
TransportationNetwork network_from_json(const nlohmann::json& j);

// Shortest decimal with up to `digits` significant digits (printf %.*g),
// locale-independent.
std::string format_sig(double x, int digits = 12);

}  // namespace accnet
