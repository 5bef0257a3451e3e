#include "irlab/stable.hpp"

#include <algorithm>
#include <numeric>

#include "irlab/errors.hpp"
#include "irlab/random.hpp"

namespace irlab {

long long binomial(int n, int k) {
  if (k < 0 || n < k) return 0;
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

namespace {

int socle_at(const LocalCohomology& H, int j) {
  if (j < 0 || j > H.dim) return 0;
  return H.socle[static_cast<std::size_t>(j)];
}

bool generalized_cm(const LocalCohomology& H) {
  for (int i = 0; i < H.dim; ++i)
    if (H.dual_dims[static_cast<std::size_t>(i)] > 0) return false;
  return true;
}

}  // namespace

std::optional<GcmFormula> formula_gcm(const LocalCohomology& H) {
  if (H.dim < 0 || !generalized_cm(H)) return std::nullopt;
  GcmFormula out;
  for (int i = 0; i <= H.dim; ++i) out.value += binomial(H.dim, i) * socle_at(H, i);
  if (H.dim >= 1) {
    AnnihilatorData ad = annihilator_data(H);
    if (ad.n0) out.deep_threshold = 2 * *ad.n0;
  }
  return out;
}

std::optional<SeqFormula> formula_seq(const SequentialClass& cls, const LocalCohomology& H) {
  if (!cls.seq_gcm || H.dim < 0) return std::nullopt;
  const auto& F = cls.filtration;
  SeqFormula out;
  out.double_sum = socle_at(H, 0);
  for (std::size_t i = 0; i < F.length(); ++i) {
    const int lo = F.dims[i], hi = F.dims[i + 1];
    LocalCohomology Q = local_cohomology(ModulePresentation::cyclic(F.ideals[i]));
    for (int j = 0; j <= hi; ++j) out.double_sum += (binomial(hi, j) - binomial(lo, j)) * socle_at(Q, j);
  }
  if (cls.seq_cm) out.collapsed = std::accumulate(H.socle.begin(), H.socle.end(), 0LL);
  return out;
}

std::optional<SeqFormula> formula_seq(const IdealPresentation& I) {
  return formula_seq(classify_sequential(I), local_cohomology(ModulePresentation::cyclic(I)));
}

Dim3Formula formula_dim3(const IdealPresentation& I, const std::vector<IdealPresentation>& summands,
                         const std::optional<Polynomial>& x1) {
  const auto& ring = I.ring();
  LocalCohomology H = local_cohomology(ModulePresentation::cyclic(I));
  if (H.dim != 3) throw PreconditionError("dimension is " + std::to_string(H.dim) + ", not 3");
  if (!H.depth || *H.depth < 2) throw PreconditionError("depth is below 2");
  if (!is_unmixed(I)) throw PreconditionError("module is not unmixed");
  if (summands.empty()) throw PreconditionError("no extension summands given");
  IdealPresentation meet = summands.front();
  for (std::size_t k = 1; k < summands.size(); ++k) meet = intersect(meet, summands[k]);
  if (!ideal_equal(meet, I)) throw PreconditionError("diagonal map into the extension is not injective");

  // cokernel of S/I -> (+)_k S/J_k, x |-> (x, ..., x)
  const auto m = static_cast<std::uint32_t>(summands.size());
  std::vector<Vec> rels;
  for (std::uint32_t k = 0; k < m; ++k)
    for (const auto& g : summands[k].generators()) rels.push_back(vec::embed(g, k));
  Vec diag;
  for (std::uint32_t k = 0; k < m; ++k) diag.terms.push_back({Monomial(), k, 1});
  rels.push_back(diag);
  ModulePresentation D(ring, std::vector<int>(m, 0), rels);
  LocalCohomology HD = local_cohomology(D);
  if (HD.dim > 1) throw PreconditionError("cokernel has dimension " + std::to_string(HD.dim));
  if (HD.dim >= 0 && (!HD.depth || *HD.depth != HD.dim)) throw PreconditionError("cokernel is not Cohen-Macaulay");

  Dim3Formula out;
  std::vector<LocalCohomology> parts;
  for (const auto& J : summands) {
    parts.push_back(local_cohomology(ModulePresentation::cyclic(J)));
    out.s2_of_extension += socle_at(parts.back(), 2);
  }
  out.value = 2LL * socle_at(H, 2) + socle_at(H, 3) + out.s2_of_extension;

  if (x1) {
    bool kills = true;
    for (const auto& P : parts) {
      if (P.dim < 2 || P.duals[2].num_generators() == 0) continue;
      if (!groebner(annihilator(P.duals[2])).contains(*x1)) kills = false;
    }
    out.x1_annihilates_h2 = kills;
    if (HD.dim < 0) {
      out.x1_parameter_on_cokernel = true;
    } else {
      std::vector<Vec> r2 = rels;
      for (std::uint32_t k = 0; k < m; ++k) r2.push_back(vec::embed(*x1, k));
      out.x1_parameter_on_cokernel = module_dimension(ModulePresentation(ring, std::vector<int>(m, 0), r2)) == HD.dim - 1;
    }
  }
  return out;
}

std::optional<long long> lengths_upper_bound(const LocalCohomology& H) {
  if (H.dim < 0 || !generalized_cm(H)) return std::nullopt;
  long long v = socle_at(H, H.dim);
  for (int i = 0; i < H.dim; ++i) {
    const auto& E = H.duals[static_cast<std::size_t>(i)];
    if (E.num_generators() == 0) continue;
    v += binomial(H.dim, i) * hilbert_series(E).multiplicity();
  }
  return v;
}

StableValueReport stable_value(const IdealPresentation& I, std::uint64_t seed, const StableOptions& opt) {
  const ModulePresentation M = ModulePresentation::cyclic(I);
  LocalCohomology H = local_cohomology(M);
  if (H.dim < 1) throw PreconditionError("stable value needs dim M >= 1");
  StableValueReport rep;
  rep.witness = construct_c_sop(I, opt.min_degree, seed);
  rep.ir = index_of_reducibility(rep.witness.elements, I);
  const int N = rep.N = rep.ir.value;

  const CmFlags flags = cm_flags(H, M);
  const SequentialClass cls = classify_sequential(I);
  const long long sd = socle_at(H, H.dim);
  const long long sum = std::accumulate(H.socle.begin(), H.socle.end(), 0LL);

  rep.cross_checks["top_socle_bound"] = {true, sd, ">=", N >= sd, ""};
  rep.cross_checks["cm_type"] = {true, sd, "iff", (N == sd) == flags.cm, "equality exactly for CM modules"};
  rep.cross_checks["socle_sum"] = {true, sum, "iff", N >= sum && ((N == sum) == cls.seq_cm),
                                   "N >= sum, equality exactly for sequentially CM modules"};
  if (auto g = formula_gcm(H))
    rep.cross_checks["generalized_cm_formula"] = {true, g->value, "==", g->value == N, ""};
  else
    rep.cross_checks["generalized_cm_formula"] = {false, 0, "==", true, "not generalized CM"};
  if (auto s = formula_seq(cls, H)) {
    rep.cross_checks["filtration_formula"] = {true, s->double_sum, "==", s->double_sum == N, ""};
    if (s->collapsed && *s->collapsed != s->double_sum)
      rep.diagnostics.push_back("filtration formula and socle sum differ on a sequentially CM module");
  } else {
    rep.cross_checks["filtration_formula"] = {false, 0, "==", true, "not sequentially generalized CM"};
  }
  if (auto b = lengths_upper_bound(H))
    rep.cross_checks["lengths_upper_bound"] = {true, *b, "<=", N <= *b, "ceiling from local cohomology lengths"};
  else
    rep.cross_checks["lengths_upper_bound"] = {false, 0, "<=", true, "not generalized CM"};

  if (opt.s2_summands) {
    try {
      Dim3Formula f = formula_dim3(I, *opt.s2_summands, rep.witness.elements.front());
      rep.cross_checks["dim3_formula"] = {true, f.value, "==", f.value == N, ""};
      if (f.x1_annihilates_h2 && !*f.x1_annihilates_h2)
        rep.diagnostics.push_back("first parameter does not annihilate H^2 of the extension");
      if (f.x1_parameter_on_cokernel && !*f.x1_parameter_on_cokernel)
        rep.diagnostics.push_back("first parameter is not a parameter element of the cokernel");
    } catch (const PreconditionError& e) {
      rep.cross_checks["dim3_formula"] = {false, 0, "==", true, e.what()};
    }
  }
  return rep;
}

std::vector<int> stable_trials(const IdealPresentation& I, std::uint64_t seed, int trials) {
  std::vector<int> out;
  for (int t = 0; t < trials; ++t) {
    ParameterSystem x = construct_c_sop(I, 1 + t % 3, derive_seed(seed, static_cast<std::uint64_t>(t)));
    out.push_back(index_of_reducibility(x.elements, I).value);
  }
  return out;
}

LimitProfile limit_profile(const IdealPresentation& I, int n_max, int samples_per_n, std::uint64_t seed) {
  LimitProfile prof;
  prof.seed = seed;
  LocalCohomology H = local_cohomology(ModulePresentation::cyclic(I));
  if (H.dim < 1) throw PreconditionError("limit profile needs dim M >= 1");
  prof.top_socle = socle_at(H, H.dim);
  try {
    prof.N = index_of_reducibility(construct_c_sop(I, 1, seed).elements, I).value;
  } catch (const SearchExhausted&) {
  }
  static constexpr double kDensities[] = {1.0, 0.5, 0.25, 0.1};
  for (int n = 1; n <= n_max; ++n) {
    LimitLevel lv;
    lv.n = n;
    const std::uint64_t lseed = derive_seed(seed, static_cast<std::uint64_t>(1000 + n));
    auto record = [&](int r, const std::vector<Polynomial>& q) {
      ++lv.histogram[r];
      if (!lv.min_ir || r < *lv.min_ir) {
        lv.min_ir = r;
        lv.argmin = q;
      }
      if (!lv.max_ir || r > *lv.max_ir) lv.max_ir = r;
      if (r < prof.top_socle) ++lv.below_top_socle;
    };
    // sparse draws can exhaust the search; keep drawing up to four times
    for (int k = 0; lv.samples < samples_per_n && k < 4 * samples_per_n; ++k) {
      ParameterSearchOptions opt;
      opt.density = kDensities[k % 4];
      try {
        ParameterSystem q = random_sop(I, n, derive_seed(lseed, static_cast<std::uint64_t>(k)), opt);
        record(index_of_reducibility(q.elements, I).value, q.elements);
        ++lv.samples;
      } catch (const SearchExhausted&) {
        ++lv.failures;
      }
    }
    try {
      ParameterSystem c = construct_c_sop(I, n, derive_seed(lseed, 1u << 20));
      int r = index_of_reducibility(c.elements, I).value;
      lv.c_sop_ir = r;
      record(r, c.elements);
    } catch (const SearchExhausted&) {
      ++lv.failures;
    }
    prof.levels.push_back(std::move(lv));
  }
  return prof;
}

}  // namespace irlab
