#pragma once

#include <string>

#include "hklat/json_io.hpp"

namespace hklat {

// Input to the end-to-end scenario command.  Exactly one of m / degree is
// required; giving both is accepted only when they agree.
struct ScenarioConfig {
  int d = 0;
  int m = 0;             // 0 = not given
  Int degree = 0;        // used when has_degree
  bool has_degree = false;
  bool with_polar2 = false;
  int b_denominator = 0;                       // 0 = default to m
  std::string b_direction = "transcendental";  // or "picard" / "mixed"
};

// Every document carries "schema": "hklat/1" and a "command" tag.
json scenario_document(const ScenarioConfig& cfg);
json isotropic_document(const Int& n, int d);
json polar2_document(int d, int m);
json bn_document(int d, int m);
json fm_document(int d, int m);
json twisted_document(int denominator, const std::string& direction,
                      const Int& pic_square);

// Flat deterministic "key = value" rendering of a JSON document.
std::string render_text(const json& doc);
// format is "json" (2-space indent, trailing newline) or "text".
std::string render(const json& doc, const std::string& format);

}  // namespace hklat
