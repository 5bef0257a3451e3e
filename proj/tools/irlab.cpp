#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "irlab/errors.hpp"
#include "irlab/golden.hpp"
#include "irlab/report.hpp"

namespace {

enum Exit { kOk = 0, kInput = 1, kResource = 2, kInternal = 3, kNotSop = 4, kGolden = 5 };

struct Common {
  std::string file;
  std::uint64_t seed = 1;
  bool json = true;
};

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("file", c.file, "ring specification (JSON)")->required();
  cmd->add_option("--seed", c.seed, "master seed")->capture_default_str();
  auto* j = cmd->add_flag("--json", "JSON output (default)");
  cmd->add_flag("--text", [&c](std::int64_t) { c.json = false; }, "text output")->excludes(j);
}

void emit(const irlab::Json& report, bool json) {
  if (json)
    std::cout << report.dump(2) << "\n";
  else
    std::cout << irlab::render_text(report);
}

void apply_budget() {
  const char* b = std::getenv("IRLAB_BUDGET");
  if (!b) return;
  try {
    std::size_t used = 0;
    const unsigned long long v = std::stoull(b, &used);
    if (used != std::string(b).size() || v == 0) throw std::invalid_argument(b);
    irlab::set_spair_budget(v);
  } catch (const std::exception&) {
    throw irlab::InputError(std::string("IRLAB_BUDGET is not a positive integer: ") + b);
  }
}

int report_error(const char* kind, const std::exception& e, int code) {
  std::cerr << "irlab: " << kind << ": " << e.what() << "\n";
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Index of reducibility of parameter ideals: invariants, stable values and limit profiles"};
  app.set_version_flag("--version", irlab::version());
  app.require_subcommand(1);

  Common common;
  std::vector<std::string> params;
  std::string params_text;
  int trials = 5, nmax = 4, samples = 50;
  std::string filter, corpus_dir = irlab::default_corpus_dir();
  std::uint64_t golden_seed = 1;

  auto* analyze = app.add_subcommand("analyze", "dimension, depth, socle, flags and dimension filtration");
  add_common(analyze, common);
  auto* ir = app.add_subcommand("ir", "index of reducibility of a parameter system");
  add_common(ir, common);
  ir->add_option("--params", params_text, "comma-separated parameters; a C-system is built when omitted");
  auto* stable = app.add_subcommand("stable", "stable value over C-systems of parameters");
  add_common(stable, common);
  stable->add_option("--trials", trials, "extra C-systems from derived seeds")->capture_default_str()->check(
      CLI::Range(1, 1000));
  auto* limit = app.add_subcommand("limit", "minimum of ir over sampled parameter ideals inside m^n");
  add_common(limit, common);
  limit->add_option("--nmax", nmax, "largest n")->capture_default_str()->check(CLI::Range(1, 64));
  limit->add_option("--samples", samples, "samples per n")->capture_default_str()->check(CLI::Range(1, 100000));
  auto* repro = app.add_subcommand("reproduce-examples", "run the golden assertions on the bundled corpus");
  repro->add_option("--filter", filter, "case id or tag");
  repro->add_option("--corpus", corpus_dir, "corpus directory")->capture_default_str();
  repro->add_option("--seed", golden_seed, "master seed")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kInput;
  }

  try {
    apply_budget();
    if (repro->parsed()) {
      const irlab::Corpus corpus = irlab::load_corpus(corpus_dir);
      std::string first_failure;
      auto results = irlab::run_golden(corpus, golden_seed, filter, [&](const irlab::GoldenResult& r) {
        std::cout << std::left << std::setw(5) << r.id << (r.pass ? "PASS  " : "FAIL  ") << std::right << std::fixed
                  << std::setprecision(2) << std::setw(8) << r.seconds << " s  " << r.title << "\n      " << r.detail
                  << std::endl;
        if (!r.pass && first_failure.empty()) first_failure = r.id + ": " + r.detail;
      });
      if (results.empty()) {
        std::cerr << "irlab: no golden case matches '" << filter << "'\n";
        return kInput;
      }
      if (!first_failure.empty()) {
        std::cerr << "irlab: first failing assertion " << first_failure << "\n";
        return kGolden;
      }
      std::cout << results.size() << "/" << results.size() << " passed\n";
      return kOk;
    }

    const irlab::Problem P = irlab::make_problem(irlab::load_ring_spec(common.file));
    irlab::Json report = irlab::analyze_report(P, common.seed);
    if (ir->parsed()) {
      if (!params_text.empty()) {
        std::string cur;
        for (char ch : params_text + ",") {
          if (ch != ',') {
            cur += ch;
            continue;
          }
          if (cur.find_first_not_of(" \t") == std::string::npos) throw irlab::InputError("empty parameter");
          params.push_back(cur);
          cur.clear();
        }
      }
      irlab::add_ir(report, P, common.seed, params);
    } else if (stable->parsed()) {
      irlab::add_stable_value(report, P, common.seed, trials);
    } else if (limit->parsed()) {
      irlab::add_alpha_profile(report, P, common.seed, nmax, samples);
    }
    emit(report, common.json);
    if (!irlab::cross_checks_hold(report)) {
      std::cerr << "irlab: a cross-check failed\n";
      return kInternal;
    }
    return kOk;
  } catch (const irlab::InputError& e) {
    return report_error("input error", e, kInput);
  } catch (const irlab::ParseError& e) {
    return report_error("parse error", e, kInput);
  } catch (const irlab::NotSystemOfParameters& e) {
    return report_error("ir", e, kNotSop);
  } catch (const irlab::ResourceError& e) {
    return report_error("resource budget", e, kResource);
  } catch (const irlab::SearchExhausted& e) {
    return report_error("parameter search exhausted", e, kResource);
  } catch (const irlab::InternalError& e) {
    return report_error("internal cross-check", e, kInternal);
  } catch (const irlab::PreconditionError& e) {
    return report_error("precondition", e, kInput);
  } catch (const std::exception& e) {
    return report_error("error", e, kInternal);
  }
}
