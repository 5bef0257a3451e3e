#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "irlab/ideal.hpp"

namespace irlab {

/// Record of how one element of a parameter system was chosen.
struct ParameterStage {
  int index = 0;  // 1-based position i of x_i
  /// Generators of the ideal the element was drawn from; for C-systems the
  /// cube a(M_cur)^3 of the annihilator product of the current quotient.
  std::vector<Polynomial> constraint;
  int degree = 0;
  std::uint64_t seed = 0;
  int dim_before = 0;
  int dim_after = 0;
};

struct ParameterSystem {
  std::vector<Polynomial> elements;  // x_1..x_d
  std::vector<ParameterStage> stages;  // in construction order (x_d first)
  int min_degree = 1;
  bool c_certified = false;
};

struct SopCheck {
  bool ok = false;
  /// Length of the first prefix whose quotient has the wrong dimension.
  std::optional<std::size_t> failing_prefix;
  int expected_dim = 0;
  int actual_dim = 0;
};

SopCheck check_system_of_parameters(const std::vector<Polynomial>& x, const IdealPresentation& I);
bool is_system_of_parameters(const std::vector<Polynomial>& x, const IdealPresentation& I);

struct ParameterSearchOptions {
  /// Degrees tried above the starting degree before giving up.
  int degree_span = 8;
  int attempts_per_degree = 3;
  /// Probability that each product g*u enters a candidate; 1 gives dense
  /// generic combinations. Within a degree the density doubles after each
  /// round of failed attempts.
  double density = 1.0;
};

/// Homogeneous x in C ∩ m^min_degree with dim S/(I + x) = dim S/I - 1,
/// built as a random combination of the products g*u (g a generator of C,
/// u a monomial). Throws SearchExhausted.
Polynomial find_parameter_element(const IdealPresentation& I, const IdealPresentation& C, int min_degree,
                                  std::uint64_t seed, const ParameterSearchOptions& opt = {});

/// C-system of parameters: x_i drawn from a(M_i)^3 with
/// M_i = S/(I + (x_{i+1}..x_d)), for i = d down to 1.
ParameterSystem construct_c_sop(const IdealPresentation& I, int min_degree, std::uint64_t seed,
                                const ParameterSearchOptions& opt = {});

/// Random homogeneous system of parameters with every element of degree
/// `degree`.
ParameterSystem random_sop(const IdealPresentation& I, int degree, std::uint64_t seed,
                           const ParameterSearchOptions& opt = {});

struct CertificateCheck {
  bool ok = false;
  /// 1-based index of the first element failing membership or dimension.
  std::optional<int> failing_index;
  std::string reason;
};

/// Recomputes every stage of a C-certificate from scratch.
CertificateCheck verify_c_certificate(const IdealPresentation& I, const std::vector<Polynomial>& x);

struct IrResult {
  int value = 0;
  int by_colon = 0;       // dim S/J - dim S/(J : m)
  int by_kernels = 0;     // common kernel of the multiplication maps
  long long length = 0;   // dim_k S/J
};

/// ir_M(q) = dim_k Soc(S/(I + q)) by two independent methods. Throws
/// PreconditionError when q is not a system of parameters and
/// InternalError when the methods disagree.
IrResult index_of_reducibility(const std::vector<Polynomial>& q, const IdealPresentation& I);

/// Socle dimension of an Artinian quotient S/J by both methods.
IrResult socle_dimension(const IdealPresentation& J);

struct DSequenceCheck {
  bool ok = true;
  /// (i, j) with ((x_1..x_i) : x_{i+1} x_j) != ((x_1..x_i) : x_j).
  std::optional<std::pair<int, int>> witness;
};

DSequenceCheck is_d_sequence(const std::vector<Polynomial>& x, const IdealPresentation& I);

}  // namespace irlab
