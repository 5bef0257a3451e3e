#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "irlab/ideal.hpp"

namespace irlab {

using Json = nlohmann::json;

const char* version();

/// Extension used by the dimension-three formula: either explicit direct
/// summands S/J_k or a containing ideal.
struct S2Spec {
  std::vector<std::vector<std::string>> summands;
  std::vector<std::string> containing;
};

/// Input file contents.
struct RingSpec {
  long long characteristic = 32003;
  std::vector<std::string> variables;
  std::vector<std::string> ideal;
  std::optional<std::string> module;
  std::optional<S2Spec> s2;
  Json labels = Json::object();
};

/// Throws InputError for structural problems.
RingSpec parse_ring_spec(const Json& j);
/// Reads and parses a file; errors name the file.
RingSpec load_ring_spec(const std::string& path);
Json to_json(const RingSpec& spec);

/// A parsed spec: ring, ideal and optional extension summands.
struct Problem {
  RingSpec spec;
  RingPtr ring;
  IdealPresentation ideal;
  std::optional<std::vector<IdealPresentation>> s2_summands;
  std::string name;
};

/// Builds the ring and ideal; rejects the unit ideal and inhomogeneous input
/// with InputError. ParseError propagates for bad polynomial text.
Problem make_problem(const RingSpec& spec, std::string name = {});

/// Base report: dimension, depth, socle, flags and filtration. The remaining
/// schema keys are present and empty.
Json analyze_report(const Problem& P, std::uint64_t seed);

/// Adds the stable value with `trials` extra C-systems to a base report.
void add_stable_value(Json& report, const Problem& P, std::uint64_t seed, int trials);

/// Adds the limit profile table to a base report.
void add_alpha_profile(Json& report, const Problem& P, std::uint64_t seed, int n_max, int samples);

/// Adds ir of the given parameters, or of a constructed C-system when
/// `params` is empty.
void add_ir(Json& report, const Problem& P, std::uint64_t seed, const std::vector<std::string>& params);

/// Whether every applicable cross-check in the report holds.
bool cross_checks_hold(const Json& report);

std::string render_text(const Json& report);

std::string to_string(const Polynomial& f);

}  // namespace irlab
