#pragma once

#include <optional>
#include <string>
#include <vector>

#include "accnet/network.hpp"

namespace accnet {

struct Fixture {
    std::string name;
    TransportationNetwork net;
    std::string provenance;
};

const std::vector<std::string>& fixture_names();
std::optional<Fixture> fixture_by_name(const std::string& name);

}  // namespace accnet
