#pragma once

#include "kocalc/ahss.hpp"
#include "kocalc/delta_complex.hpp"

#include <json.hpp>

#include <cstdint>
#include <string>

namespace kocalc {

inline constexpr const char* kEngineVersion = "0.1.0";

using nlohmann::json;

// Orders and divisors are emitted as JSON numbers when they fit exactly,
// decimal strings otherwise. No floating point anywhere.
json int_to_json(const Int& v);

json complex_to_json(const DeltaComplex& X);
DeltaComplex complex_from_json(const json& j);

json sign_cocycle_to_json(const SignCocycle& c);
SignCocycle sign_cocycle_from_json(const json& j, const DeltaComplex& X);

json f2_cocycle_to_json(int degree, const F2Vec& c);
F2Vec f2_cocycle_from_json(const json& j, int expected_degree, const DeltaComplex& X);

json group_to_json(const AbelianGroup& g);

json ko_report_to_json(const KOGroupReport& r);

std::uint64_t fnv1a64(const std::string& s);

}  // namespace kocalc
