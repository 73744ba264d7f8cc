#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "greenhall/hall.hpp"
#include "greenhall/json_io.hpp"
#include "greenhall/kostka.hpp"
#include "greenhall/suites.hpp"

using namespace greenhall;

namespace {

Json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  Json j;
  in >> j;
  return j;
}

void emit(const Json& j, const std::string& format, const std::string& text_form) {
  if (format == "json") {
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << text_form << "\n";
  }
}

std::string report_text(const SuiteReport& rep) {
  std::ostringstream os;
  os << "suite " << rep.suite_name << " (bound " << rep.size_bound << ", seed "
     << rep.seed << "): " << rep.passed() << "/" << rep.total() << " passed";
  for (const SuiteCase& c : rep.cases) {
    if (!c.pass) {
      os << "\nFAIL " << c.id << "\n  lhs = " << c.lhs << "\n  rhs = " << c.rhs;
    }
  }
  return os.str();
}

std::vector<Rational> parse_rational_list(const std::string& csv) {
  std::vector<Rational> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(Rational::parse(item));
  }
  return out;
}

std::vector<int> parse_int_list(const std::string& csv) {
  std::vector<int> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(std::stoi(item));
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Kostka-Foulkes / Hall / Green polynomials, Whittaker traces, "
               "local Hecke identities and DVR elementary divisors"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format = "json";
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"json", "text"}));
  unsigned long seed = 7;
  app.add_option("--seed", seed, "Seed for randomized draws");
  int bound = -1;
  app.add_option("--bound", bound, "Grid size bound (suite-specific default)");

  int exit_code = 0;

  auto* kostka_cmd = app.add_subcommand("kostka", "Kostka-Foulkes polynomial");
  std::string shape_s, weight_s;
  kostka_cmd->add_option("--shape", shape_s, "Shape partition, e.g. 2,1")->required();
  kostka_cmd->add_option("--weight", weight_s, "Weight partition")->required();
  bool kostka_tilde_flag = false;
  kostka_cmd->add_flag("--tilde", kostka_tilde_flag, "Print the modified polynomial");
  kostka_cmd->callback([&] {
    Partition shape = Partition::parse_csv(shape_s);
    Partition weight = Partition::parse_csv(weight_s);
    LaurentPoly p = kostka_tilde_flag ? kostka_tilde(shape, weight)
                                      : kostka_foulkes(shape, weight);
    emit(to_json(p), format, p.str());
  });

  auto* chartable_cmd = app.add_subcommand("chartable", "Symmetric group character table");
  int degree = 0;
  chartable_cmd->add_option("--degree", degree, "Symmetric group degree")->required();
  chartable_cmd->callback([&] {
    if (degree < 0 || degree > 8) throw std::domain_error("degree out of supported range");
    Json rows = Json::object();
    std::ostringstream text;
    for (const Partition& lam : enumerate_partitions(degree)) {
      Json row = Json::object();
      for (const Partition& cls : enumerate_partitions(degree)) {
        row[cls.str()] = Rational(character_value(lam, cls)).str();
      }
      rows[lam.str()] = row;
      text << lam.str() << ":";
      for (const Partition& cls : enumerate_partitions(degree)) {
        text << " " << character_value(lam, cls);
      }
      text << "\n";
    }
    emit(rows, format, text.str());
  });

  auto* hall_cmd = app.add_subcommand("hall", "Hall polynomial with its sample counts");
  std::string lam_s, mu_s, nu_s;
  hall_cmd->add_option("--lambda", lam_s)->required();
  hall_cmd->add_option("--mu", mu_s)->required();
  hall_cmd->add_option("--nu", nu_s)->required();
  hall_cmd->callback([&] {
    Partition lam = Partition::parse_csv(lam_s);
    Partition mu = Partition::parse_csv(mu_s);
    Partition nu = Partition::parse_csv(nu_s);
    HallWitness wit;
    LaurentPoly g = hall_polynomial(lam, mu, nu, &wit);
    Json nodes = Json::array();
    for (const HallSample& s : wit.nodes) {
      nodes.push_back(Json{{"q", s.q}, {"count", s.count}});
    }
    Json j{{"lambda", to_json(lam)},
           {"mu", to_json(mu)},
           {"nu", to_json(nu)},
           {"polynomial", to_json(g)},
           {"nodes", nodes},
           {"holdout", Json{{"q", wit.holdout.q}, {"count", wit.holdout.count}}}};
    emit(j, format, g.str());
  });

  auto* green_cmd = app.add_subcommand("green", "Green class function Q^lambda(t)");
  std::string green_lam_s;
  bool modified = false;
  green_cmd->add_option("--lambda", green_lam_s)->required();
  green_cmd->add_flag("--x", modified, "Print X^lambda(t) instead");
  green_cmd->callback([&] {
    Partition lam = Partition::parse_csv(green_lam_s);
    ClassFunction f = modified ? x_polynomial(lam) : green_polynomial(lam);
    std::ostringstream text;
    for (const auto& [cls, v] : f.values()) {
      text << (cls.empty() ? "()" : cls.str()) << ": " << v.str() << "\n";
    }
    emit(to_json(f), format, text.str());
  });

  auto* whit_cmd = app.add_subcommand("whittaker", "Global Whittaker trace value");
  std::string spec_path, div_path, mode_s = "plain";
  whit_cmd->add_option("--spec", spec_path, "Local system JSON file")->required();
  whit_cmd->add_option("--divisors", div_path, "Divisor tuple JSON file")->required();
  whit_cmd->add_option("--mode", mode_s)->check(CLI::IsMember({"plain", "top"}));
  whit_cmd->callback([&] {
    LocalSystemSpec spec = local_system_from_json(load_json(spec_path));
    DivisorTuple d = divisors_from_json(load_json(div_path));
    Rational v = whittaker_global(
        spec, d, mode_s == "top" ? WhittakerMode::kTop : WhittakerMode::kPlain);
    emit(Json{{"mode", mode_s}, {"value", v.str()}}, format, v.str());
  });

  auto* hecke_cmd = app.add_subcommand("hecke-check", "Local Hecke eigen-identity check");
  long hecke_q = 2;
  std::string hmu_s, hnu_s, eig_s;
  hecke_cmd->add_option("--q", hecke_q)->required();
  hecke_cmd->add_option("--mu", hmu_s, "Partition; empty for the zero module");
  hecke_cmd->add_option("--nu", hnu_s, "Partition; empty for the zero module");
  hecke_cmd->add_option("--eigenvalues", eig_s, "Comma-separated rationals")->required();
  hecke_cmd->callback([&] {
    LocalHeckeInstance inst;
    inst.q = hecke_q;
    inst.mu = Partition::parse_csv(hmu_s);
    inst.nu = Partition::parse_csv(hnu_s);
    inst.eigenvalues = parse_rational_list(eig_s);
    HeckeReport r = hecke_identity_check(inst);
    Json j = to_json(r);
    j["q"] = hecke_q;
    j["mu"] = to_json(inst.mu);
    j["nu"] = to_json(inst.nu);
    emit(j, format,
         std::string(r.equal ? "equal" : "UNEQUAL") + ": applied=" + r.applied.str() +
             " product=" + r.product.str());
    if (!r.equal) exit_code = 1;
  });

  auto* snf_cmd = app.add_subcommand("snf-check", "Closed form vs minor-valuation Smith form");
  std::string a_s, d_s;
  snf_cmd->add_option("--a", a_s, "First-column valuations")->required();
  snf_cmd->add_option("--d", d_s, "Diagonal data (one fewer entry)");
  snf_cmd->callback([&] {
    ValuationMatrixSpec spec;
    spec.a = parse_int_list(a_s);
    spec.d = parse_int_list(d_s);
    std::vector<int> dp = elementary_divisors_closed(spec);
    std::vector<int> chain = divisor_chain(dp);
    auto oracle = smith_valuations(build_matrix(spec));
    Json oracle_j = Json::array();
    bool agree = oracle.size() == chain.size();
    for (size_t i = 0; i < oracle.size(); ++i) {
      if (oracle[i]) {
        oracle_j.push_back(*oracle[i]);
        if (agree && chain[i] != *oracle[i]) agree = false;
      } else {
        oracle_j.push_back(nullptr);
        agree = false;
      }
    }
    Json j{{"a", spec.a},
           {"d", spec.d},
           {"conforming", spec.conforming()},
           {"closed_d_prime", dp},
           {"closed_chain", chain},
           {"smith_valuations", oracle_j},
           {"agree", agree}};
    std::ostringstream text;
    text << "closed: ";
    for (size_t i = 0; i < chain.size(); ++i) text << (i ? "," : "") << chain[i];
    text << "  smith: ";
    for (size_t i = 0; i < oracle.size(); ++i) {
      text << (i ? "," : "");
      if (oracle[i]) {
        text << *oracle[i];
      } else {
        text << "inf";
      }
    }
    text << "  " << (agree ? "agree" : "DISAGREE");
    if (!spec.conforming()) text << " (non-conforming spec: no guarantee)";
    emit(j, format, text.str());
    if (!agree) exit_code = 1;
  });

  auto* fuzz_cmd = app.add_subcommand("snf-fuzz", "Randomized closed-form/oracle comparison");
  int count = 500, max_val = 4, max_size = 4;
  fuzz_cmd->add_option("--count", count);
  fuzz_cmd->add_option("--max-val", max_val);
  fuzz_cmd->add_option("--max-size", max_size);
  bool fuzz_timings = false;
  fuzz_cmd->add_flag("--timings", fuzz_timings, "Include per-case timings");
  fuzz_cmd->callback([&] {
    if (max_size > 4 || max_size < 1) throw std::domain_error("max-size out of range");
    SuiteReport rep = snf_fuzz(count, seed, max_size, max_val);
    emit(report_to_json(rep, fuzz_timings), format, report_text(rep));
    if (!rep.all_pass()) exit_code = 1;
  });

  auto* suite_cmd = app.add_subcommand("suite", "Run one identity suite");
  std::string suite_name;
  bool timings = false;
  suite_cmd->add_option("--name", suite_name, "Suite name")->required();
  suite_cmd->add_flag("--timings", timings, "Include per-case timings");
  suite_cmd->callback([&] {
    int b = bound;
    if (b < 0) {
      if (suite_name == "kostka-len2") b = 10;
      else if (suite_name == "orthogonality") b = 5;
      else if (suite_name == "lemma42-res" || suite_name == "lemma42-ind") b = 5;
      else if (suite_name == "hecke-41") b = 4;
      else if (suite_name == "snf-33") b = 4;
      else if (suite_name == "telescope-n2") b = 8;
      else b = 4;
    }
    SuiteReport rep = run_identity_suite(suite_name, b, seed);
    emit(report_to_json(rep, timings), format, report_text(rep));
    if (!rep.all_pass()) exit_code = 1;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return exit_code;
}
