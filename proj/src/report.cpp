#include "irlab/report.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "irlab/errors.hpp"
#include "irlab/stable.hpp"

#ifndef IRLAB_VERSION
#define IRLAB_VERSION "0.0.0"
#endif

namespace irlab {

const char* version() { return IRLAB_VERSION; }

std::string to_string(const Polynomial& f) { return f.to_string(); }

namespace {

std::vector<std::string> string_list(const Json& j, const std::string& what) {
  if (!j.is_array()) throw InputError(what + " must be an array of strings");
  std::vector<std::string> out;
  for (const auto& e : j) {
    if (!e.is_string()) throw InputError(what + " must be an array of strings");
    out.push_back(e.get<std::string>());
  }
  return out;
}

Json strings(const std::vector<Polynomial>& ps) {
  Json a = Json::array();
  for (const auto& p : ps) a.push_back(p.to_string());
  return a;
}

Json certificate_json(const ParameterSystem& x) {
  Json stages = Json::array();
  for (const auto& s : x.stages)
    stages.push_back({{"index", s.index},
                      {"a_cubed_gens", strings(s.constraint)},
                      {"degree", s.degree},
                      {"seed", s.seed},
                      {"dim_drop", {s.dim_before, s.dim_after}}});
  return {{"elements", strings(x.elements)}, {"stages", stages}, {"min_degree", x.min_degree}};
}

Json ir_json(const IrResult& r) {
  return {{"value", r.value},
          {"by_colon", r.by_colon},
          {"by_kernels", r.by_kernels},
          {"length", r.length},
          {"methods_agree", r.by_colon == r.by_kernels}};
}

Json check_json(const CrossCheck& c) {
  return {{"applicable", c.applicable},
          {"value", c.value},
          {"relation", c.relation},
          {"holds", c.holds},
          {"note", c.note}};
}

/// D_i = K_i / I rendered by the generators of K_i outside I.
std::string chain_text(const DimensionFiltration& F) {
  GroebnerBasis gbI = groebner(F.base);
  std::string out;
  for (const auto& K : F.ideals) {
    std::vector<std::string> outside;
    const GroebnerBasis gbK = groebner(K);
    for (const auto& g : gbK.elements())
      if (!gbI.contains(g)) outside.push_back(g.to_string());
    if (outside.empty()) {
      out += "0";
    } else {
      out += "(";
      for (std::size_t k = 0; k < outside.size(); ++k) out += (k ? ", " : "") + outside[k];
      out += ")";
    }
    out += " ⊆ ";
  }
  return out + "R";
}

}  // namespace

RingSpec parse_ring_spec(const Json& j) {
  if (!j.is_object()) throw InputError("ring specification must be a JSON object");
  static const std::set<std::string> known = {"characteristic", "variables", "ideal", "module", "s2_ification",
                                              "labels"};
  for (const auto& [k, v] : j.items())
    if (!known.count(k)) throw InputError("unknown key '" + k + "'");
  RingSpec s;
  if (j.contains("characteristic")) {
    if (!j["characteristic"].is_number_integer()) throw InputError("characteristic must be an integer");
    s.characteristic = j["characteristic"].get<long long>();
  }
  if (!j.contains("variables")) throw InputError("missing 'variables'");
  s.variables = string_list(j["variables"], "variables");
  if (s.variables.empty()) throw InputError("no variables");
  if (std::set<std::string>(s.variables.begin(), s.variables.end()).size() != s.variables.size())
    throw InputError("variables are not distinct");
  if (!j.contains("ideal")) throw InputError("missing 'ideal'");
  s.ideal = string_list(j["ideal"], "ideal");
  if (j.contains("module")) {
    if (!j["module"].is_string()) throw InputError("module must be a string");
    s.module = j["module"].get<std::string>();
  }
  if (j.contains("s2_ification")) {
    const Json& e = j["s2_ification"];
    S2Spec s2;
    if (e.is_array()) {
      for (const auto& part : e) s2.summands.push_back(string_list(part, "s2_ification summand"));
    } else if (e.is_object() && e.contains("summands")) {
      if (!e["summands"].is_array()) throw InputError("s2_ification summands must be an array");
      for (const auto& part : e["summands"]) s2.summands.push_back(string_list(part, "s2_ification summand"));
    } else if (e.is_object() && e.contains("containing")) {
      s2.containing = string_list(e["containing"], "s2_ification containing ideal");
    } else {
      throw InputError("s2_ification must list summands or a containing ideal");
    }
    s.s2 = std::move(s2);
  }
  if (j.contains("labels")) {
    if (!j["labels"].is_object()) throw InputError("labels must be an object");
    s.labels = j["labels"];
  }
  return s;
}

RingSpec load_ring_spec(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError(path + ": cannot open");
  try {
    return parse_ring_spec(Json::parse(in));
  } catch (const Json::exception& e) {
    throw InputError(path + ": " + e.what());
  } catch (const InputError& e) {
    throw InputError(path + ": " + e.what());
  }
}

Json to_json(const RingSpec& s) {
  Json j = {{"characteristic", s.characteristic}, {"variables", s.variables}, {"ideal", s.ideal}};
  if (s.module) j["module"] = *s.module;
  if (s.s2) {
    if (!s.s2->summands.empty())
      j["s2_ification"] = {{"summands", s.s2->summands}};
    else
      j["s2_ification"] = {{"containing", s.s2->containing}};
  }
  if (!s.labels.empty()) j["labels"] = s.labels;
  return j;
}

Problem make_problem(const RingSpec& spec, std::string name) {
  if (spec.module && *spec.module != "cyclic") throw InputError("unsupported module tag '" + *spec.module + "'");
  if (spec.characteristic < 2) throw InputError("characteristic must be a prime");
  RingPtr ring;
  try {
    ring = make_ring(spec.variables, static_cast<Coeff>(spec.characteristic));
  } catch (const PreconditionError& e) {
    throw InputError(e.what());
  }
  auto parse_all = [&](const std::vector<std::string>& gens) {
    std::vector<Polynomial> out;
    for (const auto& g : gens) {
      try {
        out.push_back(parse_polynomial(g, ring));
      } catch (const ParseError& e) {
        throw InputError("cannot parse '" + g + "': " + e.what());
      }
    }
    return IdealPresentation(ring, std::move(out));
  };
  IdealPresentation I = parse_all(spec.ideal);
  if (!I.is_homogeneous()) throw InputError("ideal is not homogeneous");
  if (groebner(I).is_unit()) throw InputError("unit ideal");
  Problem P{spec, ring, I, std::nullopt, std::move(name)};
  if (P.name.empty() && spec.labels.contains("name") && spec.labels["name"].is_string())
    P.name = spec.labels["name"].get<std::string>();
  if (spec.s2 && !spec.s2->summands.empty()) {
    std::vector<IdealPresentation> parts;
    for (const auto& s : spec.s2->summands) {
      parts.push_back(parse_all(s));
      if (!parts.back().is_homogeneous()) throw InputError("s2_ification summand is not homogeneous");
    }
    P.s2_summands = std::move(parts);
  }
  return P;
}

Json analyze_report(const Problem& P, std::uint64_t seed) {
  const ModulePresentation M = ModulePresentation::cyclic(P.ideal);
  const LocalCohomology H = local_cohomology(M);
  const CmFlags flags = cm_flags(H, M);
  const SequentialClass cls = classify_sequential(P.ideal);

  Json input = to_json(P.spec);
  if (!P.name.empty()) input["name"] = P.name;

  Json ideals = Json::array();
  for (const auto& K : cls.filtration.ideals) ideals.push_back(K.to_strings());
  Json steps = Json::array();
  for (const auto& s : cls.steps) {
    steps.push_back({{"index", s.index},
                     {"zero", s.zero},
                     {"dim", s.dim},
                     {"depth", s.depth ? Json(*s.depth) : Json()},
                     {"CM", s.cm},
                     {"gCM", s.generalized_cm}});
  }

  Json r;
  r["input"] = input;
  r["char"] = P.ring->field().characteristic();
  r["dim"] = H.dim;
  r["depth"] = H.depth ? Json(*H.depth) : Json();
  r["socle_dims"] = H.socle;
  r["flags"] = {{"CM", flags.cm},
                {"gCM", flags.generalized_cm},
                {"unmixed", flags.unmixed},
                {"seq_CM", cls.seq_cm},
                {"seq_gCM", cls.seq_gcm}};
  r["filtration"] = {{"chain", chain_text(cls.filtration)},
                     {"ideals", ideals},
                     {"dims", cls.filtration.dims},
                     {"steps", steps}};
  r["stable_value"] = nullptr;
  r["ir"] = nullptr;
  r["cross_checks"] = Json::object();
  r["alpha_profile"] = Json::array();
  r["diagnostics"] = Json::array();
  if (P.spec.s2 && P.spec.s2->summands.empty())
    r["diagnostics"].push_back("containing-ideal extensions are not used by the dimension-three formula");
  r["seed"] = seed;
  r["version"] = version();
  return r;
}

void add_stable_value(Json& report, const Problem& P, std::uint64_t seed, int trials) {
  StableOptions opt;
  opt.s2_summands = P.s2_summands;
  StableValueReport rep = stable_value(P.ideal, seed, opt);
  std::vector<int> runs = stable_trials(P.ideal, seed, trials);
  int agree = 0;
  for (int v : runs) agree += v == rep.N;
  const CertificateCheck cert = verify_c_certificate(P.ideal, rep.witness.elements);

  report["stable_value"] = {{"N", rep.N},
                            {"witness", certificate_json(rep.witness)},
                            {"certificate_verified", cert.ok},
                            {"ir", ir_json(rep.ir)},
                            {"trials", runs},
                            {"agreeing_trials", agree}};
  for (const auto& [k, c] : rep.cross_checks) report["cross_checks"][k] = check_json(c);
  report["cross_checks"]["seed_stability"] =
      check_json({true, agree, "==", agree == trials,
                  std::to_string(agree) + "/" + std::to_string(trials) + " C-systems from independent seeds give N"});
  report["cross_checks"]["certificate"] = check_json({true, cert.ok ? 1 : 0, "==", cert.ok, cert.reason});
  for (const auto& d : rep.diagnostics) report["diagnostics"].push_back(d);
}

void add_alpha_profile(Json& report, const Problem& P, std::uint64_t seed, int n_max, int samples) {
  LimitProfile prof = limit_profile(P.ideal, n_max, samples, seed);
  Json rows = Json::array();
  for (const auto& lv : prof.levels) {
    Json hist = Json::object();
    for (const auto& [v, c] : lv.histogram) hist[std::to_string(v)] = c;
    rows.push_back({{"n", lv.n},
                    {"min_ir", lv.min_ir ? Json(*lv.min_ir) : Json()},
                    {"max_ir", lv.max_ir ? Json(*lv.max_ir) : Json()},
                    {"samples", lv.samples},
                    {"failures", lv.failures},
                    {"histogram", hist},
                    {"c_sop_ir", lv.c_sop_ir ? Json(*lv.c_sop_ir) : Json()},
                    {"below_top_socle", lv.below_top_socle},
                    {"argmin", strings(lv.argmin)}});
  }
  report["alpha_profile"] = rows;
  if (!prof.levels.empty() && prof.levels.back().min_ir && prof.N) {
    const auto& last = prof.levels.back();
    report["diagnostics"].push_back("alpha estimate at n = " + std::to_string(last.n) + " is " +
                                    std::to_string(*last.min_ir) + "; stable value " + std::to_string(*prof.N));
  }
}

void add_ir(Json& report, const Problem& P, std::uint64_t seed, const std::vector<std::string>& params) {
  Json out;
  std::vector<Polynomial> q;
  if (params.empty()) {
    ParameterSystem x = construct_c_sop(P.ideal, 1, seed);
    q = x.elements;
    out["certificate"] = certificate_json(x);
  } else {
    for (const auto& s : params) {
      try {
        q.push_back(parse_polynomial(s, P.ring));
      } catch (const ParseError& e) {
        throw InputError("cannot parse parameter '" + s + "': " + e.what());
      }
    }
    out["certificate"] = nullptr;
  }
  IrResult r = index_of_reducibility(q, P.ideal);
  Json j = ir_json(r);
  j["params"] = strings(q);
  j["certificate"] = out["certificate"];
  report["ir"] = j;
}

bool cross_checks_hold(const Json& report) {
  for (const auto& [k, c] : report["cross_checks"].items())
    if (c["applicable"].get<bool>() && !c["holds"].get<bool>()) return false;
  return true;
}

std::string render_text(const Json& r) {
  std::ostringstream os;
  const Json& in = r["input"];
  os << "input     " << (in.contains("name") ? in["name"].get<std::string>() + "  " : "") << "S/(";
  for (std::size_t k = 0; k < in["ideal"].size(); ++k) os << (k ? ", " : "") << in["ideal"][k].get<std::string>();
  os << ")  over F_" << r["char"] << "[";
  for (std::size_t k = 0; k < in["variables"].size(); ++k)
    os << (k ? "," : "") << in["variables"][k].get<std::string>();
  os << "]\n";
  os << "dim       " << r["dim"] << "\n";
  os << "depth     " << r["depth"] << "\n";
  os << "socle     " << r["socle_dims"].dump() << "\n";
  os << "flags    ";
  for (const auto& [k, v] : r["flags"].items()) os << " " << k << "=" << (v.get<bool>() ? "yes" : "no");
  os << "\n";
  os << "filtration " << r["filtration"]["chain"].get<std::string>() << "  dims " << r["filtration"]["dims"].dump()
     << "\n";
  if (!r["stable_value"].is_null()) {
    const Json& s = r["stable_value"];
    os << "stable N  " << s["N"] << "  (" << s["agreeing_trials"] << "/" << s["trials"].size()
       << " trials agree, certificate " << (s["certificate_verified"].get<bool>() ? "verified" : "FAILED") << ")\n";
    os << "witness  ";
    for (const auto& e : s["witness"]["elements"]) {
      std::string t = e.get<std::string>();
      os << " [" << (t.size() > 48 ? t.substr(0, 45) + "..." : t) << "]";
    }
    os << "\n";
  }
  if (!r["ir"].is_null()) {
    const Json& s = r["ir"];
    os << "ir        " << s["value"] << "  (colon " << s["by_colon"] << ", kernels " << s["by_kernels"] << ", length "
       << s["length"] << ")\n";
  }
  for (const auto& [k, c] : r["cross_checks"].items()) {
    os << "check     " << k << ": ";
    if (!c["applicable"].get<bool>())
      os << "n/a";
    else
      os << c["relation"].get<std::string>() << " " << c["value"] << " " << (c["holds"].get<bool>() ? "ok" : "FAIL");
    if (!c["note"].get<std::string>().empty()) os << "  (" << c["note"].get<std::string>() << ")";
    os << "\n";
  }
  if (!r["alpha_profile"].empty()) {
    os << "  n  min  max  samples  c-sop  histogram\n";
    for (const auto& lv : r["alpha_profile"]) {
      os << "  " << lv["n"] << "  " << lv["min_ir"] << "    " << lv["max_ir"] << "    " << lv["samples"] << "       "
         << lv["c_sop_ir"] << "      " << lv["histogram"].dump() << "\n";
    }
  }
  for (const auto& d : r["diagnostics"]) os << "note      " << d.get<std::string>() << "\n";
  os << "seed " << r["seed"] << "  version " << r["version"].get<std::string>() << "\n";
  return os.str();
}

}  // namespace irlab
