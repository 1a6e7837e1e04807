#pragma once

#include <string>

#include <json.hpp>

#include "dualdec/code_spec.hpp"
#include "dualdec/dual_checks.hpp"
#include "dualdec/hard_decoder.hpp"

namespace dualdec {

inline constexpr const char* kVersion = "0.1.0";

// Hex packing: for binary polynomials the value with bit i = coefficient i;
// otherwise ceil(m/4) hex digits per symbol, coefficient 0 first.
std::string poly_to_hex(const CyclicPoly& p);
CyclicPoly poly_from_hex(const Field& field, int n, const std::string& hex);

// Fixture form "x^49+x^37+...+1"; nonbinary terms carry an a^i coefficient.
std::string poly_to_text(const CyclicPoly& p);
CyclicPoly poly_from_text(const Field& field, int n, const std::string& text);

std::string fnv1a_hex(const std::string& data);
std::string hash_file(const std::string& path);

nlohmann::json code_spec_to_json(const CodeSpec& spec);
CodeSpec code_spec_from_json(const nlohmann::json& j);
CodeSpec load_code_spec_file(const std::string& path);

nlohmann::json checks_to_json(const DualCheckSet& checks, const std::string& spec_hash,
                              std::uint64_t seed);
DualCheckSet checks_from_json(const nlohmann::json& j, const CodeSpec& spec);
DualCheckSet load_checks_file(const std::string& path, const CodeSpec& spec);
void save_checks_file(const std::string& path, const DualCheckSet& checks,
                      const std::string& spec_hash, std::uint64_t seed);

nlohmann::json report_to_json(const DecodeReport& report);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

} // namespace dualdec
