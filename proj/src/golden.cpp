#include "irlab/golden.hpp"

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <numeric>
#include <sstream>

#include "irlab/errors.hpp"
#include "irlab/random.hpp"
#include "irlab/stable.hpp"

#ifndef IRLAB_CORPUS_DIR
#define IRLAB_CORPUS_DIR "corpus"
#endif

namespace irlab {

std::string default_corpus_dir() { return IRLAB_CORPUS_DIR; }

const Problem& Corpus::at(const std::string& name) const {
  auto it = members.find(name);
  if (it == members.end()) throw InputError("corpus " + dir + " has no member '" + name + "'");
  return it->second;
}

Corpus load_corpus(const std::string& dir) {
  namespace fs = std::filesystem;
  if (!fs::is_directory(dir)) throw InputError(dir + ": not a corpus directory");
  std::vector<fs::path> files;
  for (const auto& e : fs::directory_iterator(dir))
    if (e.path().extension() == ".json") files.push_back(e.path());
  std::sort(files.begin(), files.end());
  if (files.empty()) throw InputError(dir + ": no corpus files");
  Corpus c;
  c.dir = dir;
  for (const auto& f : files) {
    RingSpec spec = load_ring_spec(f.string());
    try {
      c.members.emplace(f.stem().string(), make_problem(spec, f.stem().string()));
    } catch (const Error& e) {
      throw InputError(f.string() + ": " + e.what());
    }
  }
  return c;
}

namespace {

/// Collects expectation failures and a short summary line.
struct Tally {
  std::vector<std::string> fails;
  std::ostringstream info;

  void expect(bool ok, const std::string& what) {
    if (!ok) fails.push_back(what);
  }
  GoldenOutcome done() const {
    std::string d = info.str();
    for (const auto& f : fails) d += (d.empty() ? "" : "; ") + std::string("FAILED ") + f;
    return {fails.empty(), d};
  }
};

std::string list(const std::vector<int>& v) {
  std::string s = "[";
  for (std::size_t k = 0; k < v.size(); ++k) s += (k ? "," : "") + std::to_string(v[k]);
  return s + "]";
}

bool squarefree_monomial(const IdealPresentation& I) {
  if (!I.is_monomial()) return false;
  for (const auto& g : I.generators())
    for (std::size_t v = 0; v < I.ring()->nvars(); ++v)
      if (g.lead().mon[v] > 1) return false;
  return true;
}

IdealPresentation plus(const IdealPresentation& I, const std::vector<Polynomial>& extra) {
  std::vector<Polynomial> g = I.generators();
  g.insert(g.end(), extra.begin(), extra.end());
  return IdealPresentation(I.ring(), std::move(g));
}

/// Depth of S/I as the length of a regular sequence of random linear forms,
/// stopping at the first zero divisor.
int depth_by_regular_sequence(const IdealPresentation& I, std::uint64_t seed) {
  const auto& ring = I.ring();
  FieldRng rng(seed);
  IdealPresentation cur = groebner(I).presentation();
  int depth = 0;
  for (std::size_t k = 0; k < ring->nvars(); ++k) {
    Polynomial l(ring);
    for (std::size_t v = 0; v < ring->nvars(); ++v)
      l += Polynomial::variable(ring, v).scaled(rng.nonzero(ring->field()));
    if (!ideal_equal(quotient(cur, l), cur)) break;
    cur = groebner(plus(cur, {l})).presentation();
    ++depth;
  }
  return depth;
}

int socle_sum(const LocalCohomology& H) { return std::accumulate(H.socle.begin(), H.socle.end(), 0); }

int top_socle(const LocalCohomology& H) { return H.socle.back(); }

constexpr double kDensities[] = {1.0, 0.5, 0.25, 0.1};

GoldenOutcome dim3_example(const Corpus& C, std::uint64_t seed) {
  Tally t;
  const Problem& P = C.at("ex54");
  const ModulePresentation M = ModulePresentation::cyclic(P.ideal);
  const LocalCohomology H = local_cohomology(M);
  const CmFlags flags = cm_flags(H, M);
  if (!P.s2_summands) throw InputError("ex54 lacks its s2_ification summands");
  StableOptions opt;
  opt.s2_summands = P.s2_summands;
  const StableValueReport rep = stable_value(P.ideal, seed, opt);
  const Dim3Formula f = formula_dim3(P.ideal, *P.s2_summands, rep.witness.elements.front());
  const CertificateCheck cert = verify_c_certificate(P.ideal, rep.witness.elements);
  t.info << "dim " << H.dim << ", depth " << (H.depth ? *H.depth : -1) << ", unmixed " << flags.unmixed << ", socle "
         << list(H.socle) << ", N " << rep.N << ", dim3 formula " << f.value;
  t.expect(H.dim == 3, "dim == 3");
  t.expect(H.depth && *H.depth == 2, "depth == 2");
  t.expect(flags.unmixed, "unmixed");
  t.expect(H.socle == std::vector<int>{0, 0, 1, 2}, "socle == [0,0,1,2]");
  t.expect(rep.N == 4, "N == 4");
  t.expect(cert.ok, "C-certificate re-verifies");
  t.expect(f.value == 4, "dim3 formula == 4");
  return t.done();
}

GoldenOutcome filtration_example(const Corpus& C, std::uint64_t seed) {
  Tally t;
  const Problem& P = C.at("ex44");
  const SequentialClass cls = classify_sequential(P.ideal);
  const auto& F = cls.filtration;
  const LocalCohomology H = local_cohomology(ModulePresentation::cyclic(P.ideal));
  const IdealPresentation x = IdealPresentation::parse(P.ring, {"x"});
  t.expect(F.length() == 2 && ideal_equal(F.ideals[0], P.ideal) && ideal_equal(F.ideals[1], x),
           "filtration 0 ⊆ (x) ⊆ R");
  t.expect(F.dims == std::vector<int>{0, 1, 2}, "filtration dims [0,1,2]");
  t.expect(cls.seq_cm, "sequentially CM");
  const int sum = socle_sum(H);
  const int N = stable_value(P.ideal, seed).N;
  t.expect(sum == 2 && N == 2, "sum s_i == 2 == N");
  const LimitProfile prof = limit_profile(P.ideal, 4, 50, seed);
  std::vector<int> mins;
  for (const auto& lv : prof.levels) {
    mins.push_back(lv.min_ir.value_or(-1));
    t.expect(lv.max_ir && *lv.max_ir <= 2, "every ir <= 2 at n = " + std::to_string(lv.n));
    if (lv.n >= 2) {
      t.expect(lv.samples >= 50, "at least 50 samples at n = " + std::to_string(lv.n));
      t.expect(lv.min_ir == 2, "alpha estimate 2 at n = " + std::to_string(lv.n));
    }
  }
  t.info << "chain dims " << list(F.dims) << ", seq_CM " << cls.seq_cm << ", sum s_i " << sum << ", N " << N
         << ", alpha by level " << list(mins);
  return t.done();
}

GoldenOutcome stability(const Corpus& C, std::uint64_t seed) {
  Tally t;
  const std::vector<std::pair<std::string, int>> rings = {{"ex54", 4}, {"buchsbaum", 4}, {"ex44", 2}};
  for (std::size_t r = 0; r < rings.size(); ++r) {
    const auto& [name, expected] = rings[r];
    const Problem& P = C.at(name);
    std::vector<int> values;
    for (int k = 0; k < 10; ++k) {
      const std::uint64_t s = derive_seed(seed, 300 + 16 * r + static_cast<std::uint64_t>(k));
      ParameterSystem x = construct_c_sop(P.ideal, 1 + k % 3, s);
      values.push_back(index_of_reducibility(x.elements, P.ideal).value);
      if (k < 3) {
        // powers of a C-system stay a C-system
        std::vector<Polynomial> powered;
        for (std::size_t i = 0; i < x.elements.size(); ++i)
          powered.push_back(x.elements[i].pow(1 + static_cast<unsigned>((i + k) % 2)));
        values.push_back(index_of_reducibility(powered, P.ideal).value);
      }
    }
    const bool same = std::all_of(values.begin(), values.end(), [&](int v) { return v == values.front(); });
    t.info << (r ? ", " : "") << name << " " << list(values);
    t.expect(same, name + ": all C-systems agree");
    t.expect(values.front() == expected, name + ": value " + std::to_string(expected));
  }
  return t.done();
}

GoldenOutcome generalized_cm(const Corpus& C, std::uint64_t seed) {
  Tally t;
  const Problem& P = C.at("buchsbaum");
  const LocalCohomology H = local_cohomology(ModulePresentation::cyclic(P.ideal));
  const auto g = formula_gcm(H);
  t.expect(g.has_value(), "generalized CM");
  if (!g) return t.done();
  const int n0 = annihilator_data(H).n0.value_or(-1);
  const int deep = 2 * n0;
  t.expect(n0 >= 1 && g->deep_threshold == deep, "n0 defined");
  t.expect(g->value == 4, "formula == 4");
  std::vector<std::vector<Polynomial>> systems;
  systems.push_back({parse_polynomial("x^2+u^2", P.ring), parse_polynomial("y^2+v^2", P.ring)});
  for (int k = 0; k < 10; ++k) {
    ParameterSearchOptions opt;
    opt.density = kDensities[k % 4];
    systems.push_back(random_sop(P.ideal, deep + k % 2, derive_seed(seed, 400 + static_cast<std::uint64_t>(k)), opt)
                          .elements);
  }
  std::vector<int> values;
  for (const auto& q : systems) {
    for (const auto& e : q) t.expect(e.low_degree() >= deep, "parameter inside m^" + std::to_string(deep));
    IrResult r = index_of_reducibility(q, P.ideal);
    t.expect(r.by_colon == r.by_kernels, "socle algorithms agree");
    values.push_back(r.value);
    t.expect(r.value == g->value, "ir equals the formula");
  }
  t.info << "formula " << g->value << ", n0 " << n0 << ", ir of sops in m^" << deep << ": " << list(values);
  return t.done();
}

GoldenOutcome corpus_sweep(const Corpus& C, std::uint64_t seed) {
  Tally t;
  int members = 0, seq = 0, equal = 0;
  std::uint64_t k = 0;
  for (const auto& [name, P] : C.members) {
    if (!squarefree_monomial(P.ideal)) continue;
    ++members;
    const LocalCohomology H = local_cohomology(ModulePresentation::cyclic(P.ideal));
    const SequentialClass cls = classify_sequential(P.ideal);
    const int sum = socle_sum(H);
    const int N = stable_value(P.ideal, derive_seed(seed, 500 + k++)).N;
    seq += cls.seq_cm;
    equal += N == sum;
    t.expect(N >= sum, name + ": N " + std::to_string(N) + " >= " + std::to_string(sum));
    t.expect((N == sum) == cls.seq_cm, name + ": equality iff sequentially CM");
  }
  t.info << members << " square-free members, " << seq << " sequentially CM, " << equal << " with N == sum s_i";
  return t.done();
}

GoldenOutcome homological_oracles(const Corpus& C, std::uint64_t seed) {
  Tally t;
  int taylor = 0, hochster = 0, ab = 0;
  std::uint64_t k = 0;
  for (const auto& [name, P] : C.members) {
    const std::size_t n = P.ring->nvars();
    const ModulePresentation M = ModulePresentation::cyclic(P.ideal);
    const FreeResolution R = free_resolution(M);
    if (P.ideal.is_monomial()) {
      const FreeResolution T = minimalize(taylor_resolution(P.ideal));
      t.expect(T.graded_betti() == R.graded_betti(), name + ": Taylor and syzygy Betti numbers");
      ++taylor;
    }
    const LocalCohomology H = local_cohomology(M);
    if (squarefree_monomial(P.ideal)) {
      const int lo = -static_cast<int>(n) - 2, hi = 2;
      for (int i = 0; i <= H.dim; ++i) {
        const auto h = hochster_hilbert(P.ideal, i, lo, hi);
        for (int nu = lo; nu <= hi; ++nu) {
          const auto it = h.find(nu);
          const long long lhs = it == h.end() ? 0 : it->second;
          t.expect(lhs == H.hilbert(i, nu),
                   name + ": Hochster H^" + std::to_string(i) + " in degree " + std::to_string(nu));
        }
      }
      ++hochster;
    }
    const int depth = depth_by_regular_sequence(P.ideal, derive_seed(seed, 600 + k++));
    t.expect(R.length() + depth == static_cast<int>(n), name + ": pd + depth == n");
    t.expect(H.depth == depth, name + ": local cohomology depth matches a regular sequence");
    ++ab;
  }
  t.info << taylor << " Taylor comparisons, " << hochster << " Hochster comparisons, " << ab
         << " Auslander-Buchsbaum checks";
  return t.done();
}

GoldenOutcome cm_controls(const Corpus& C, std::uint64_t seed) {
  Tally t;
  std::uint64_t r = 0;
  for (const std::string name : {"cm_twisted_cubic", "cm_fat_point", "cm_pentagon"}) {
    const Problem& P = C.at(name);
    const ModulePresentation M = ModulePresentation::cyclic(P.ideal);
    const LocalCohomology H = local_cohomology(M);
    const int type = static_cast<int>(H.resolution.betti().back());
    t.expect(cm_flags(H, M).cm, name + ": CM");
    t.expect(top_socle(H) == type, name + ": s_d equals the last Betti number");
    std::vector<int> values;
    for (int k = 0; k < 10; ++k) {
      ParameterSearchOptions opt;
      opt.density = kDensities[k % 4];
      const std::uint64_t s = derive_seed(seed, 700 + 16 * r + static_cast<std::uint64_t>(k));
      values.push_back(index_of_reducibility(random_sop(P.ideal, 1 + k % 3, s, opt).elements, P.ideal).value);
    }
    for (int v : values) t.expect(v == type, name + ": ir equals the type");
    t.info << (r ? ", " : "") << name << " type " << type << " ir " << list(values);
    ++r;
  }
  return t.done();
}

GoldenOutcome socle_additivity(const Corpus& C, std::uint64_t seed) {
  Tally t;
  const Problem& P = C.at("ex54");
  const LocalCohomology H = local_cohomology(ModulePresentation::cyclic(P.ideal));
  const ParameterSystem x = construct_c_sop(P.ideal, 1, seed);
  const Polynomial& first = x.elements.back();
  const std::vector<int> got = socle_dimensions(ModulePresentation::cyclic(plus(P.ideal, {first})));
  std::vector<int> expected;
  for (int i = 0; i + 1 <= H.dim; ++i) expected.push_back(H.socle[i] + H.socle[i + 1]);
  t.info << "s(M) " << list(H.socle) << ", s(M/xM) " << list(got) << ", s_i + s_{i+1} " << list(expected);
  t.expect(got == expected, "s_i(M/xM) == s_i(M) + s_{i+1}(M)");
  t.expect(expected == std::vector<int>{0, 1, 3}, "values [0,1,3]");
  return t.done();
}

GoldenOutcome properties(const Corpus& C, std::uint64_t seed) {
  Tally t;
  int gb = 0, csops = 0, unmixed = 0;
  std::uint64_t k = 0;
  for (const auto& [name, P] : C.members) {
    const GroebnerBasis G = groebner(P.ideal);
    std::vector<Vec> gens;
    for (const auto& g : P.ideal.generators()) gens.push_back(vec::embed(g, 0));
    t.expect(verify_groebner(G.module_gb(), gens), name + ": S-pairs reduce to zero");
    for (const auto& e : G.elements()) {
      t.expect(e.lead().coeff == 1, name + ": monic basis");
      for (const auto& o : G.elements()) {
        if (&o == &e) continue;
        for (const auto& term : e.terms())
          t.expect(!o.lead().mon.divides(term.mon), name + ": reduced basis");
      }
    }
    ++gb;

    const LocalCohomology H = local_cohomology(ModulePresentation::cyclic(P.ideal));
    for (int r = 0; r < 2; ++r) {
      const ParameterSystem x = construct_c_sop(P.ideal, 1 + r, derive_seed(seed, 900 + 4 * k + r));
      t.expect(is_d_sequence(x.elements, P.ideal).ok, name + ": C-system is a d-sequence");
      t.expect(index_of_reducibility(x.elements, P.ideal).value >= top_socle(H), name + ": ir >= s_d");
      ++csops;
    }

    const IdealPresentation U = unmixed_component(P.ideal, derive_seed(seed, 950 + 4 * k)).ideal;
    for (std::uint64_t r = 1; r < 3; ++r)
      t.expect(ideal_equal(unmixed_component(P.ideal, derive_seed(seed, 950 + 4 * k + r)).ideal, U),
               name + ": unmixed component independent of the seed");
    ++unmixed;
    ++k;
  }
  t.info << gb << " Groebner checks, " << csops << " C-systems, " << unmixed << " unmixed-component checks";
  return t.done();
}

}  // namespace

const std::vector<GoldenCase>& golden_cases() {
  static const std::vector<GoldenCase> cases = {
      {"ac1", {"ex54"}, "dimension-three example: invariants, N = 4, formula = 4", 60, dim3_example},
      {"ac2", {"ex44", "limit"}, "(xy,xz): filtration, sequentially CM, alpha = 2", 120, filtration_example},
      {"ac3", {"stability", "ex54", "ex44", "buchsbaum"}, "C-systems from independent seeds agree", 0, stability},
      {"ac4", {"buchsbaum", "gcm"}, "generalized CM formula and deep parameter ideals", 0, generalized_cm},
      {"ac5", {"corpus"}, "N >= sum s_i, equality exactly when sequentially CM", 600, corpus_sweep},
      {"ac6", {"corpus", "homological"}, "Taylor, Hochster and Auslander-Buchsbaum oracles", 0, homological_oracles},
      {"ac7", {"cm"}, "CM controls: ir of random sops equals the type", 0, cm_controls},
      {"ac8", {"ex54", "socle"}, "socle additivity modulo a C-certified parameter", 0, socle_additivity},
      {"ac9", {"corpus", "properties"}, "property suites over the corpus", 0, properties},
  };
  return cases;
}

bool golden_selected(const GoldenCase& c, const std::string& filter) {
  if (filter.empty() || c.id.find(filter) != std::string::npos) return true;
  return std::any_of(c.tags.begin(), c.tags.end(), [&](const std::string& t) { return t == filter; });
}

std::vector<GoldenResult> run_golden(const Corpus& corpus, std::uint64_t seed, const std::string& filter,
                                     const std::function<void(const GoldenResult&)>& on_result) {
  std::vector<GoldenResult> out;
  for (const auto& c : golden_cases()) {
    if (!golden_selected(c, filter)) continue;
    GoldenResult r{c.id, c.title, false, "", 0};
    const auto t0 = std::chrono::steady_clock::now();
    try {
      GoldenOutcome o = c.run(corpus, seed);
      r.pass = o.pass;
      r.detail = o.detail;
    } catch (const std::exception& e) {
      r.detail = std::string("error: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (c.budget > 0 && r.seconds > c.budget) {
      r.pass = false;
      r.detail += "; FAILED time budget " + std::to_string(static_cast<int>(c.budget)) + " s";
    }
    if (on_result) on_result(r);
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace irlab
