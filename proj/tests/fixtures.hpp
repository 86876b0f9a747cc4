#pragma once

#include <string>

#include "gpw/gps_json.hpp"

#ifndef GPW_FIXTURE_DIR
#error "GPW_FIXTURE_DIR must point at tests/fixtures"
#endif

namespace fixtures {

inline std::string path(const std::string& name) { return std::string(GPW_FIXTURE_DIR) + "/" + name + ".json"; }

inline gpw::Structure load(const std::string& name) { return gpw::load_gps_file(path(name)); }

/// xγy = min(x, y) with 0 <= 1.
inline gpw::Structure min_semilattice() { return load("min_semilattice"); }
/// xγy = x, trivial order.
inline gpw::Structure left_zero() { return load("left_zero"); }
/// xγy = 0, trivial order.
inline gpw::Structure constant_zero() { return load("constant_zero"); }
inline gpw::Structure singleton() { return load("singleton"); }

}  // namespace fixtures
