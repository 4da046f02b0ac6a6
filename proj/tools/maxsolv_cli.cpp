// Command-line front end. Everything goes through the C API.

#include "maxsolv/maxsolv.h"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

namespace {

struct OracleTable {
  std::map<std::string, int> verdicts;
};

// Lines "theta verdict", e.g. "a1,a3 1" or "- 0".
OracleTable load_oracle(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot read oracle table '" + path + "'");
  OracleTable t;
  std::string line;
  while (std::getline(f, line)) {
    if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
    std::istringstream ls(line);
    std::string theta;
    int v = 0;
    if (!(ls >> theta)) continue;
    if (!(ls >> v) || (v != 0 && v != 1)) throw std::runtime_error("oracle table: bad line '" + line + "'");
    t.verdicts[theta] = v;
  }
  return t;
}

int oracle_lookup(void* user, const char* theta, const char*, const char*) {
  auto* t = static_cast<OracleTable*>(user);
  auto it = t->verdicts.find(theta);
  return it == t->verdicts.end() ? -1 : it->second;
}

int report_error(maxsolv_status s) {
  std::cerr << "error: " << maxsolv_status_name(s) << ": " << maxsolv_last_error() << "\n";
  const std::string w = maxsolv_last_witness();
  if (!w.empty()) std::cerr << "witness: " << w << "\n";
  return s == MAXSOLV_E_CERTIFICATION_FAILED ? 2 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"maximal connected solvable subgroups from a Satake/Tits index"};
  app.require_subcommand(1);
  bool json = false;
  std::string oracle_path;
  app.add_flag("--json", json, "emit one JSON document instead of TSV");
  app.add_option("--oracle-table", oracle_path, "admissibility verdicts for field: oracle")->check(CLI::ExistingFile);
  app.fallthrough();

  std::string index_path, realization_path, theta, theta1, theta2, slot1, slot2;
  struct Cmd {
    const char* name;
    const char* help;
  };
  const std::vector<Cmd> cmds = {
      {"roots", "absolute and restricted root inventory"},
      {"restrict", "restriction map, restricted Cartan matrix and multiplicities"},
      {"parabolic", "standard parabolic of type Theta"},
      {"admissible", "admissibility of every Theta"},
      {"classify", "one class per admissible Theta"},
      {"types", "W_k type classes"},
      {"conjugate", "conjugacy verdict for two classes"},
      {"verify", "Lie-algebra certification on the matching realization"},
  };
  for (const auto& c : cmds) {
    auto* sub = app.add_subcommand(c.name, c.help);
    sub->add_option("index", index_path, "index file")->required()->check(CLI::ExistingFile);
    if (std::string(c.name) == "parabolic") sub->add_option("--theta", theta, "e.g. a1,a3 or -")->required();
    if (std::string(c.name) == "verify")
      sub->add_option("--realization", realization_path, "certify this realization file instead of the built-in one")
          ->check(CLI::ExistingFile);
    if (std::string(c.name) == "conjugate") {
      sub->add_option("--theta1", theta1)->required();
      sub->add_option("--theta2", theta2)->required();
      sub->add_option("--slot1", slot1, "torus class of the first descriptor");
      sub->add_option("--slot2", slot2, "torus class of the second descriptor");
    }
  }
  app.add_subcommand("catalog", "bundled real forms and Lie-algebra realizations");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  }
  const std::string command = app.get_subcommands().front()->get_name();

  OracleTable oracle;
  maxsolv_index* idx = nullptr;
  if (command != "catalog") {
    if (auto s = maxsolv_index_load(index_path.c_str(), &idx); s != MAXSOLV_OK) return report_error(s);
    if (!oracle_path.empty()) {
      try {
        oracle = load_oracle(oracle_path);
      } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        maxsolv_index_free(idx);
        return 1;
      }
      maxsolv_index_set_oracle(idx, oracle_lookup, &oracle);
    }
  }

  std::vector<std::string> kv;
  if (command == "parabolic") kv.push_back("theta=" + theta);
  if (command == "verify" && !realization_path.empty()) kv.push_back("realization=" + realization_path);
  if (command == "conjugate") {
    kv.push_back("theta1=" + theta1);
    kv.push_back("theta2=" + theta2);
    if (!slot1.empty()) kv.push_back("slot1=" + slot1);
    if (!slot2.empty()) kv.push_back("slot2=" + slot2);
  }
  std::vector<const char*> opts;
  for (const auto& s : kv) opts.push_back(s.c_str());
  opts.push_back(nullptr);

  char* out = nullptr;
  const auto s = maxsolv_report(idx, command.c_str(), opts.data(), json ? 1 : 0, &out);
  if (out) {
    std::fputs(out, stdout);
    maxsolv_string_free(out);
  }
  maxsolv_index_free(idx);
  return s == MAXSOLV_OK ? 0 : report_error(s);
}
