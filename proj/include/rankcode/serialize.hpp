#pragma once

// JSON documents for the command-line tool: the parameter document, element
// lists (hex strings), decode reports and simulation statistics.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"
#include "rankcode/decoders.hpp"
#include "rankcode/simulate.hpp"

namespace rankcode {

using Json = nlohmann::ordered_json;

/// Everything a parameter document describes, validated.
struct Setup {
  CodeSpec spec;
  std::optional<ModelAParams> model_a;
  std::optional<ModelBParams> model_b;
  std::uint64_t seed = 0;

  const FieldPtr& field() const { return spec.field_ptr(); }
  /// Simulation configuration using the document's model as error source.
  SimConfig sim_config(ErrorSource source, int t, int trials) const;
};

Json hex_list(const FieldContext& f, std::span<const Element> v);
std::vector<Element> parse_hex_list(const FieldContext& f, const Json& j, const std::string& what);

Json setup_to_json(const Setup& s);
/// Throws Error naming the offending field when the document is invalid.
Setup setup_from_json(const Json& j);

Json report_to_json(const FieldContext& f, const DecodeReport& rep, bool verbose);
Json decode_error_to_json(const FieldContext& f, const DecodeError& e);
Json stats_to_json(const SimStats& s, bool timing);
std::string stats_to_csv(const SimStats& s, bool timing);

}  // namespace rankcode
