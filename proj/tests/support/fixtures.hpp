#pragma once

#include <string>

#include "cli/fixture.hpp"

namespace ocrank::testing {

inline std::string fixture_path(const std::string& name) { return std::string(OCRANK_FIXTURE_DIR) + "/" + name; }

inline cli::Fixture load(const std::string& name) { return cli::load_fixture(fixture_path(name)); }

inline Transducer machine(const std::string& name) { return *load(name).machine; }

}  // namespace ocrank::testing
