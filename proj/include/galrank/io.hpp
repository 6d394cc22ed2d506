#pragma once

#include <memory>

#include <json.hpp>

#include "galrank/gabidulin.hpp"
#include "galrank/skew_poly.hpp"

namespace galrank {

// Elements serialize as nested coefficient arrays, least degree first:
// base level -> integer, level R -> [ints] (length s), level S -> [[ints]]
// (length m of length-s arrays).

nlohmann::json tower_params_to_json(const TowerParams& params);
TowerParams tower_params_from_json(const nlohmann::json& j);

nlohmann::json element_to_json(const GaloisTower& tower, const RingElement& e);
RingElement element_from_json(const GaloisTower& tower, Level level,
                              const nlohmann::json& j);

nlohmann::json vector_to_json(const GaloisTower& tower, std::span<const RingElement> v);
std::vector<RingElement> vector_from_json(const GaloisTower& tower, Level level,
                                          const nlohmann::json& j);

/// Polynomials serialize as arrays of S-element encodings, least degree first.
nlohmann::json poly_to_json(const SkewPoly& f);
SkewPoly poly_from_json(const GaloisTower& tower, const nlohmann::json& j);

/// Code configuration: {"params": <TowerParams>, "k": int, "n": int,
/// "g": "auto" | [elements]}. "auto" means the power basis support
/// [1, alpha, ..., alpha^(n-1)].
struct CodeConfig {
    TowerParams params;
    unsigned k = 1;
    unsigned n = 1;
    bool auto_support = true;
    nlohmann::json explicit_support;  // array of S elements when !auto_support
};

nlohmann::json code_config_to_json(const CodeConfig& config);
CodeConfig code_config_from_json(const nlohmann::json& j);

/// Materialized tower + code with shared lifetime.
struct LoadedCode {
    std::unique_ptr<GaloisTower> tower;
    std::unique_ptr<GabidulinCode> code;
};
LoadedCode load_code(const CodeConfig& config);

/// Parses a rank profile polynomial such as "0", "2", "1+x", "x^2", "1+2x".
RankProfile parse_profile(const std::string& text, unsigned r);

/// Raw byte framing: bytes are packed little-endian into base coefficients,
/// floor(log2(p^r)) bits per coefficient, zero-padded to k S-elements.
unsigned raw_capacity_bytes(const GaloisTower& tower, unsigned k);
std::vector<RingElement> pack_bytes(const GaloisTower& tower,
                                    std::span<const std::uint8_t> bytes, unsigned k);
std::vector<std::uint8_t> unpack_bytes(const GaloisTower& tower,
                                       std::span<const RingElement> message);

}  // namespace galrank
