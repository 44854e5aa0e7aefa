// Command-line front end for the finite-algebra laboratory: catalog
// inspection, property checks, the verification suite, counterexample search,
// and witness replay. Exit codes: 0 = holds/passed, 1 = a failing verdict or
// anomaly, 2 = usage/config error, 3 = enumeration budget exhausted.
#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "armlab/catalog.hpp"
#include "armlab/config.hpp"
#include "armlab/errors.hpp"
#include "armlab/monoid_ring.hpp"
#include "armlab/property_lab.hpp"
#include "armlab/report.hpp"
#include "armlab/search.hpp"
#include "armlab/theorem_suite.hpp"

namespace {

using namespace armlab;

constexpr int kExitOk = 0;
constexpr int kExitFails = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

struct Options {
  std::string config_path;
  bool json = false;
  std::string out_path;
  int workers = 0;        // 0 = take the config default
  int degree = -1;        // -1 = take the config default
  std::string support;    // "m,n", empty = config default
};

std::string witness_text(const Witness& w) {
  const FiniteRing& R = w.alpha.ring();
  std::ostringstream os;
  os << "  alpha = " << render(w.alpha) << "\n"
     << "  beta  = " << render(w.beta) << "\n"
     << "  alpha*beta = " << render(mr_mul(w.alpha, w.beta)) << "\n"
     << "  coefficient product a_" << w.i << " * b_" << w.j << " = "
     << R.elem_name(w.product);
  if (w.partner)
    os << "  (does not commute with " << R.elem_name(*w.partner) << ")";
  os << "\n";
  return os.str();
}

std::string verdict_text(const Verdict& v) {
  std::ostringstream os;
  os << v.property << " on " << v.ring;
  if (!v.monoid.empty()) os << " over " << v.monoid;
  os << ": " << to_string(v.status) << "\n";
  if (!v.bound.empty()) os << "  bound: " << v.bound << "\n";
  if (!v.detail.empty()) os << "  " << v.detail << "\n";
  if (v.witness) os << witness_text(*v.witness);
  return os.str();
}

std::string structure_text(const StructureReport& r) {
  std::ostringstream os;
  os << "ring " << r.ring << ": size " << r.size
     << (r.has_one ? ", unital" : ", no identity (rng)")
     << (r.commutative ? ", commutative" : ", noncommutative") << "\n"
     << "  center: " << r.center.size() << " elements\n"
     << "  idempotents: " << r.idempotents.size() << "\n"
     << "  nilpotents: " << r.nilpotents.size() << "\n";
  if (r.units) os << "  units: " << r.units->size() << "\n";
  if (r.jacobson_radical)
    os << "  jacobson radical: " << r.jacobson_radical->size() << " elements\n";
  if (!r.note.empty()) os << "  note: " << r.note << "\n";
  return os.str();
}

std::string monoid_text(const MonoidReport& r) {
  std::ostringstream os;
  os << "monoid " << r.monoid << ": "
     << (r.size == 0 ? std::string("infinite (naturals)")
                     : "size " + std::to_string(r.size))
     << (r.axiomatic ? " [answers by definition]" : "") << "\n"
     << "  cancellative: " << (r.cancellative ? "yes" : "no") << "\n";
  if (r.cancellative_witness) {
    const auto& w = *r.cancellative_witness;
    os << "    witness (" << r.cancellative_witness_side << "): m=" << w[0]
       << ", g=" << w[1] << ", h=" << w[2] << "\n";
  }
  os << "  unique product: " << (r.unique_product ? "yes" : "no") << "\n"
     << "  group: " << (r.is_group ? "yes" : "no")
     << ", torsion-free: " << (r.torsion_free ? "yes" : "no") << "\n"
     << "  strictly orderable: " << (r.strict_total_order_exists ? "yes" : "no")
     << "\n";
  return os.str();
}

std::string theorem_text(const TheoremReport& r) {
  std::ostringstream os;
  os << r.id << ": " << (r.ok ? (r.anomaly ? "ANOMALY" : "ok") : "FAILED")
     << (r.probe ? " [probe]" : "") << "  (passed " << r.passed << ", failed "
     << r.failed << ", vacuous " << r.vacuous << ", skipped " << r.skipped
     << ")\n"
     << "  claim: " << r.claim << "\n"
     << "  bounds: " << r.bounds << "\n";
  if (!r.note.empty()) os << "  note: " << r.note << "\n";
  for (const InstanceResult& i : r.instances)
    if (i.outcome == "fail") {
      os << "  FAIL " << i.instance << ": " << i.detail << "\n";
      if (i.witness) os << witness_text(*i.witness);
    }
  return os.str();
}

std::string search_text(const SearchResult& r) {
  std::ostringstream os;
  os << "search target: " << r.target << "\n"
     << "findings: " << r.findings.size()
     << (r.partial ? " (partial: family truncated)" : "") << "\n";
  for (const SearchFinding& f : r.findings) {
    os << "- " << f.ring << " (size " << f.size << ")\n";
    for (const Verdict& v : f.verdicts) {
      std::istringstream in(verdict_text(v));
      std::string line;
      while (std::getline(in, line)) os << "    " << line << "\n";
    }
  }
  for (const std::string& s : r.skipped) os << "  skipped: " << s << "\n";
  if (!r.note.empty()) os << "note: " << r.note << "\n";
  return os.str();
}

// Emits either the text rendering or the JSON envelope to stdout/--out.
void emit(const Options& opt, const OutputOptions& cfg_out,
          const std::string& command, const std::string& config_text,
          nlohmann::json results, const std::string& text,
          double elapsed_seconds) {
  const bool json = opt.json || cfg_out.format == "json";
  const std::string path = !opt.out_path.empty() ? opt.out_path : cfg_out.path;
  std::string payload;
  if (json) {
    payload = make_envelope(command, config_text, std::move(results)).dump(2);
    payload += "\n";
  } else {
    std::ostringstream os;
    os << text << "elapsed: " << elapsed_seconds << " s\n";
    payload = os.str();
  }
  if (path.empty()) {
    std::cout << payload;
  } else {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot write to '" + path + "'");
    f << payload;
  }
}

std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, ',')) {
    if (!cur.empty()) out.push_back(cur);
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  Options opt;
  CLI::App app{"finite-algebra laboratory"};
  app.require_subcommand(1);
  app.add_option("--config", opt.config_path, "structure/budget config file");
  app.add_flag("--json", opt.json, "emit the JSON report envelope");
  app.add_option("--out", opt.out_path, "write the report to a file");
  app.add_option("--workers", opt.workers, "worker threads for enumeration");
  app.add_option("--degree", opt.degree,
                 "max exponent over the naturals (bounded checks)");
  app.add_option("--support", opt.support,
                 "support caps m,n over the naturals");

  CLI::App* catalog_cmd = app.add_subcommand("catalog", "catalog inspection");
  catalog_cmd->fallthrough();
  CLI::App* catalog_list = catalog_cmd->add_subcommand("list", "list catalog");
  catalog_list->fallthrough();

  std::string ring_name, monoid_name;
  CLI::App* ring_cmd = app.add_subcommand("ring", "ring inspection");
  ring_cmd->fallthrough();
  CLI::App* ring_scan_cmd = ring_cmd->add_subcommand("scan", "structural scan");
  ring_scan_cmd->fallthrough();
  ring_scan_cmd->add_option("name", ring_name, "catalog ring")->required();

  CLI::App* monoid_cmd = app.add_subcommand("monoid", "monoid inspection");
  monoid_cmd->fallthrough();
  CLI::App* monoid_scan_cmd =
      monoid_cmd->add_subcommand("scan", "structural scan");
  monoid_scan_cmd->fallthrough();
  monoid_scan_cmd->add_option("name", monoid_name, "catalog monoid")
      ->required();

  std::string check_prop, check_ring, check_monoid;
  CLI::App* check_cmd = app.add_subcommand("check", "decide one property");
  check_cmd->fallthrough();
  check_cmd
      ->add_option("property", check_prop,
                   "reduced | central_reduced | abelian | two_primal | "
                   "right_pp | baer | plain_armendariz | central_armendariz | "
                   "nil_armendariz")
      ->required();
  check_cmd->add_option("--ring", check_ring, "catalog ring")->required();
  check_cmd->add_option("--monoid", check_monoid,
                        "catalog monoid (armendariz properties)");

  std::string only_ids;
  CLI::App* suite_cmd = app.add_subcommand("suite", "verification suite");
  suite_cmd->fallthrough();
  CLI::App* suite_run = suite_cmd->add_subcommand("run", "run the suite");
  suite_run->fallthrough();
  suite_run->add_option("--only", only_ids, "comma-separated entry ids");

  std::string target_expr, family;
  CLI::App* search_cmd =
      app.add_subcommand("search", "counterexample search over a family");
  search_cmd->fallthrough();
  search_cmd->add_option("--target", target_expr, "boolean predicate expression")
      ->required();
  search_cmd
      ->add_option("--family", family,
                   "comma list of ring names and subrings_of(NAME)")
      ->required();

  std::string report_path;
  CLI::App* verify_cmd =
      app.add_subcommand("verify-witness", "replay every witness in a report");
  verify_cmd->fallthrough();
  verify_cmd->add_option("report", report_path, "JSON report envelope")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    Catalog cat = default_catalog();
    Config cfg;
    std::string config_text;
    if (!opt.config_path.empty()) {
      std::ifstream f(opt.config_path, std::ios::binary);
      if (!f) {
        std::cerr << "error: cannot read config '" << opt.config_path << "'\n";
        return kExitUsage;
      }
      std::ostringstream ss;
      ss << f.rdbuf();
      config_text = ss.str();
      cfg = parse_config(config_text);
      apply_config(cfg, cat);
    }
    ArmBounds bounds = cfg.budget.bounds;
    int workers = opt.workers > 0 ? opt.workers : cfg.budget.workers;
    if (opt.degree >= 0) bounds.degree = opt.degree;
    if (!opt.support.empty()) {
      int m = 0, n = 0;
      char comma = 0;
      std::istringstream in(opt.support);
      if (!(in >> m >> comma >> n) || comma != ',' || m < 1 || n < 1) {
        std::cerr << "error: --support expects m,n with positive integers\n";
        return kExitUsage;
      }
      bounds.support_m = m;
      bounds.support_n = n;
    }

    const auto start = std::chrono::steady_clock::now();
    auto elapsed = [&] {
      return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                           start)
          .count();
    };

    if (*catalog_list) {
      nlohmann::json j;
      std::ostringstream os;
      nlohmann::json rings = nlohmann::json::array();
      os << "rings:\n";
      for (const auto& r : cat.rings()) {
        rings.push_back({{"name", r->name()},
                         {"size", r->size()},
                         {"has_one", r->has_one()},
                         {"commutative", r->commutative()}});
        os << "  " << r->name() << " (size " << r->size()
           << (r->has_one() ? "" : ", rng")
           << (r->commutative() ? ", commutative" : "") << ")\n";
      }
      nlohmann::json monoids = nlohmann::json::array();
      os << "monoids:\n";
      for (const auto& m : cat.monoids()) {
        monoids.push_back({{"name", m->name()},
                           {"size", m->size()},
                           {"nat", m->is_nat()}});
        os << "  " << m->name()
           << (m->is_nat() ? " (naturals)"
                           : " (size " + std::to_string(m->size()) + ")")
           << "\n";
      }
      j["rings"] = std::move(rings);
      j["monoids"] = std::move(monoids);
      emit(opt, cfg.output, "catalog list", config_text, std::move(j), os.str(),
           elapsed());
      return kExitOk;
    }

    if (*ring_scan_cmd) {
      if (!cat.has_ring(ring_name)) {
        std::cerr << "error: unknown ring '" << ring_name << "'\n";
        return kExitUsage;
      }
      StructureReport r = ring_scan(cat.ring(ring_name));
      emit(opt, cfg.output, "ring scan " + ring_name, config_text, to_json(r),
           structure_text(r), elapsed());
      return kExitOk;
    }

    if (*monoid_scan_cmd) {
      if (!cat.has_monoid(monoid_name)) {
        std::cerr << "error: unknown monoid '" << monoid_name << "'\n";
        return kExitUsage;
      }
      MonoidReport r = monoid_scan(cat.monoid(monoid_name));
      emit(opt, cfg.output, "monoid scan " + monoid_name, config_text,
           to_json(r), monoid_text(r), elapsed());
      return kExitOk;
    }

    if (*check_cmd) {
      if (!cat.has_ring(check_ring)) {
        std::cerr << "error: unknown ring '" << check_ring << "'\n";
        return kExitUsage;
      }
      const FiniteRing& R = cat.ring(check_ring);
      Verdict v;
      if (check_prop == "reduced")
        v = check_classical(R, ClassicalProp::Reduced);
      else if (check_prop == "central_reduced")
        v = check_classical(R, ClassicalProp::CentralReduced);
      else if (check_prop == "abelian")
        v = check_classical(R, ClassicalProp::Abelian);
      else if (check_prop == "two_primal")
        v = check_classical(R, ClassicalProp::TwoPrimal);
      else if (check_prop == "right_pp")
        v = check_classical(R, ClassicalProp::RightPP);
      else if (check_prop == "baer")
        v = check_classical(R, ClassicalProp::Baer);
      else if (check_prop == "plain_armendariz" ||
               check_prop == "central_armendariz" ||
               check_prop == "nil_armendariz") {
        if (check_monoid.empty()) {
          std::cerr << "error: " << check_prop << " requires --monoid\n";
          return kExitUsage;
        }
        if (!cat.has_monoid(check_monoid)) {
          std::cerr << "error: unknown monoid '" << check_monoid << "'\n";
          return kExitUsage;
        }
        ArmKind kind = check_prop == "plain_armendariz" ? ArmKind::Plain
                       : check_prop == "central_armendariz" ? ArmKind::Central
                                                            : ArmKind::Nil;
        v = check_armendariz(R, cat.monoid(check_monoid), kind, bounds,
                             workers);
      } else {
        std::cerr << "error: unknown property '" << check_prop << "'\n";
        return kExitUsage;
      }
      std::string command = "check " + check_prop + " --ring " + check_ring;
      if (!check_monoid.empty()) command += " --monoid " + check_monoid;
      emit(opt, cfg.output, command, config_text, to_json(v), verdict_text(v),
           elapsed());
      if (v.status == Status::Fails) return kExitFails;
      if (v.status == Status::BudgetExhausted) return kExitBudget;
      return kExitOk;
    }

    if (*suite_run) {
      std::vector<std::string> ids =
          only_ids.empty() ? suite_entry_ids() : split_commas(only_ids);
      for (const std::string& id : ids) {
        const auto& known = suite_entry_ids();
        if (std::find(known.begin(), known.end(), id) == known.end()) {
          std::cerr << "error: unknown suite entry '" << id << "'\n";
          return kExitUsage;
        }
      }
      std::vector<TheoremReport> reports;
      for (const std::string& id : ids)
        reports.push_back(run_suite(id, cat, bounds, workers));
      nlohmann::json arr = nlohmann::json::array();
      std::ostringstream os;
      bool gate_fail = false;
      for (const TheoremReport& r : reports) {
        arr.push_back(to_json(r));
        os << theorem_text(r);
        if (!r.probe && (!r.ok || r.anomaly)) gate_fail = true;
      }
      std::string command = "suite run";
      if (!only_ids.empty()) command += " --only " + only_ids;
      emit(opt, cfg.output, command, config_text, std::move(arr), os.str(),
           elapsed());
      return gate_fail ? kExitFails : kExitOk;
    }

    if (*search_cmd) {
      SearchResult r =
          counterexample_search(target_expr, family, cat, bounds, workers);
      emit(opt, cfg.output,
           "search --target " + target_expr + " --family " + family,
           config_text, to_json(r), search_text(r), elapsed());
      for (const SearchFinding& f : r.findings)
        for (const Verdict& v : f.verdicts)
          if (v.status == Status::Fails) return kExitFails;
      return kExitOk;
    }

    if (*verify_cmd) {
      std::ifstream f(report_path, std::ios::binary);
      if (!f) {
        std::cerr << "error: cannot read report '" << report_path << "'\n";
        return kExitUsage;
      }
      nlohmann::json env;
      try {
        f >> env;
      } catch (const std::exception& ex) {
        std::cerr << "error: invalid JSON: " << ex.what() << "\n";
        return kExitUsage;
      }
      std::vector<std::string> problems, skipped;
      int verified = verify_envelope(env, cat, problems, skipped);
      nlohmann::json j;
      j["verified"] = verified;
      j["problems"] = problems;
      j["skipped"] = skipped;
      std::ostringstream os;
      os << "verified witnesses: " << verified << "\n";
      for (const std::string& p : problems) os << "PROBLEM: " << p << "\n";
      for (const std::string& s : skipped) os << "skipped: " << s << "\n";
      emit(opt, cfg.output, "verify-witness", config_text, std::move(j),
           os.str(), elapsed());
      return problems.empty() ? kExitOk : kExitFails;
    }

    std::cerr << "error: no runnable subcommand\n";
    return kExitUsage;
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const BudgetError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBudget;
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
