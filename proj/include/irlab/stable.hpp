#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "irlab/filtration.hpp"
#include "irlab/parameters.hpp"

namespace irlab {

/// One closed-form value compared against the stable value N.
struct CrossCheck {
  bool applicable = false;
  long long value = 0;
  /// "==" when equality with N is required, ">=" / "<=" for bounds, "iff"
  /// when equality must hold exactly when a classification flag does.
  std::string relation;
  bool holds = true;
  std::string note;
};

struct GcmFormula {
  long long value = 0;
  /// 2 * n0: parameter ideals inside this power of m realize the value.
  std::optional<int> deep_threshold;
};

/// sum_i C(d, i) s_i for generalized CM modules; absent otherwise.
std::optional<GcmFormula> formula_gcm(const LocalCohomology& H);

struct SeqFormula {
  long long double_sum = 0;
  /// sum_i s_i; filled when every filtration quotient is CM.
  std::optional<long long> collapsed;
};

/// Filtration formula s_0(M) + sum_i sum_j (C(d_{i+1}, j) - C(d_i, j)) s_j(M/D_i)
/// for sequentially generalized CM S/I; absent otherwise.
std::optional<SeqFormula> formula_seq(const SequentialClass& cls, const LocalCohomology& H);
std::optional<SeqFormula> formula_seq(const IdealPresentation& I);

struct Dim3Formula {
  long long value = 0;
  int s2_of_extension = 0;
  /// Whether x_1 kills H^2 of the extension and is a parameter element of
  /// the cokernel; filled when a parameter element is supplied.
  std::optional<bool> x1_annihilates_h2;
  std::optional<bool> x1_parameter_on_cokernel;
};

/// 2 s_2(M) + s_3(M) + s_2(E) for E = (+)_k S/J_k given by `summands`.
/// Requires M unmixed of dimension 3 and depth >= 2, the diagonal map
/// S/I -> E injective, and its cokernel zero or CM of dimension <= 1.
/// Throws PreconditionError naming the first violated condition.
Dim3Formula formula_dim3(const IdealPresentation& I, const std::vector<IdealPresentation>& summands,
                         const std::optional<Polynomial>& x1 = std::nullopt);

/// sum_{i<d} C(d, i) length(H^i) + s_d, for generalized CM modules.
std::optional<long long> lengths_upper_bound(const LocalCohomology& H);

struct StableOptions {
  int min_degree = 1;
  /// Extension summands for the dimension-three formula, if known.
  std::optional<std::vector<IdealPresentation>> s2_summands;
};

struct StableValueReport {
  int N = 0;
  ParameterSystem witness;
  IrResult ir;
  std::map<std::string, CrossCheck> cross_checks;
  std::vector<std::string> diagnostics;
};

StableValueReport stable_value(const IdealPresentation& I, std::uint64_t seed, const StableOptions& opt = {});

/// ir of C-systems from `trials` derived seeds with min-degrees cycling 1..3.
std::vector<int> stable_trials(const IdealPresentation& I, std::uint64_t seed, int trials);

struct LimitLevel {
  int n = 0;
  int samples = 0;
  int failures = 0;
  std::optional<int> min_ir;
  std::optional<int> max_ir;
  std::vector<Polynomial> argmin;
  std::map<int, int> histogram;
  /// ir of the C-system of min-degree n included at this level.
  std::optional<int> c_sop_ir;
  /// Samples with ir below s_d.
  int below_top_socle = 0;
};

struct LimitProfile {
  std::uint64_t seed = 0;
  int top_socle = 0;
  std::optional<int> N;
  std::vector<LimitLevel> levels;
};

LimitProfile limit_profile(const IdealPresentation& I, int n_max, int samples_per_n, std::uint64_t seed);

long long binomial(int n, int k);

}  // namespace irlab
