#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "almost_fourier/clifford/clifford.hpp"
#include "almost_fourier/error.hpp"
#include "almost_fourier/families/families.hpp"
#include "almost_fourier/pairing/gram.hpp"
#include "almost_fourier/verify/verify.hpp"

namespace af = almost_fourier;
namespace verify = almost_fourier::verify;

namespace {

// Bad input that passed CLI parsing (unknown names, malformed data).
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::uint64_t parse_seed(const std::string& s) {
  try {
    std::size_t used = 0;
    const auto v = std::stoull(s, &used, 0);
    if (used == s.size()) return v;
  } catch (const std::exception&) {
  }
  throw UsageError("bad seed '" + s + "'");
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw UsageError("cannot write " + path);
  out << text;
}

void print_line(const nlohmann::ordered_json& j) { std::cout << j.dump() << '\n' << std::flush; }

verify::Runner make_runner() {
  return verify::Runner([](const verify::CheckResult& r) { print_line(verify::to_json(r)); });
}

int finish(const verify::Runner& r, const std::string& json_path) {
  if (!json_path.empty()) {
    nlohmann::ordered_json all = nlohmann::ordered_json::array();
    for (const auto& c : r.results()) all.push_back(verify::to_json(c));
    write_file(json_path, all.dump(1) + "\n");
  }
  return r.failures() ? 1 : 0;
}

bool is_user_error(af::ErrorKind k) {
  using af::ErrorKind;
  return k == ErrorKind::Parse || k == ErrorKind::BadParams || k == ErrorKind::SizeLimit || k == ErrorKind::BadIndex ||
         k == ErrorKind::UnknownLabel;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact nonabelian Fourier pairings, continuous families, W-graph Hecke modules and Clifford checks"};
  app.require_subcommand(1);
  std::string seed_text;
  app.add_option("--seed", seed_text, "seed for sampled checks (default 0xC4A7, env ALMOST_FOURIER_SEED)");

  auto* fourier = app.add_subcommand("fourier", "classical Fourier matrix of a small finite group");
  std::string group;
  std::string fourier_csv;
  fourier->add_option("--group", group, "trivial, Z2, Z3, Z4, S3, D4 or Q8 (all when omitted)");
  fourier->add_option("--csv", fourier_csv, "write the matrix as CSV");

  auto* heis = app.add_subcommand("heis", "Heisenberg family");
  int heis_n = 1;
  bool spectrum = false;
  std::string heis_json;
  heis->add_option("--n", heis_n, "n in {1,2,3}")->required();
  heis->add_flag("--spectrum", spectrum, "factor the characteristic polynomial of M^2");
  heis->add_option("--json", heis_json, "write the report as JSON");

  auto* family = app.add_subcommand("family", "tabulated continuous family");
  std::string family_id;
  std::string family_json;
  std::string family_csv;
  family->add_option("--id", family_id, "F14, F15a (r^2 = 1), F15b (r^2 = g_-1) or F112")->required();
  family->add_option("--json", family_json, "write the report as JSON");
  family->add_option("--csv", family_csv, "write the sector-1 matrix as CSV");

  auto* hecke = app.add_subcommand("hecke", "W-graph Hecke modules");
  verify::HeckeSelection sel;
  std::string kind_text;
  std::string lambda_text;
  std::string check_text;
  std::string hecke_json;
  hecke->add_option("--n", sel.n, "rank n >= 2")->required();
  hecke->add_option("--kind", kind_text, "a, b, c or d (all when omitted)");
  hecke->add_option("--lambda", lambda_text, "lambda for kind d, e.g. 2/3 (1, 2, 5 when omitted)");
  hecke->add_option("--check", check_text, "relations, omega, restrict, decompose or vrc (all when omitted)");
  hecke->add_option("--json", hecke_json, "write the report as JSON");

  auto* cliff = app.add_subcommand("clifford", "Clifford algebra and spin checks");
  std::string datum;
  std::string which = "all";
  std::string sc_type;
  std::string sc_m;
  std::string exceptional;
  cliff->add_option("--datum", datum, "multiplicities i:m_i, e.g. \"1:1,3:1\"");
  cliff->add_option("--check", which, "beta, delta, conj or all");
  cliff->add_option("--sc", sc_type, "SL, Spin or Sp");
  cliff->add_option("--m", sc_m, "multiplicities for --sc");
  cliff->add_option("--exceptional", exceptional, "group:label, e.g. F4:B_3");

  auto* all = app.add_subcommand("verify-all", "run every check");
  std::string all_json;
  all->add_option("--json", all_json, "write the report as JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    std::uint64_t seed = verify::kDefaultSeed;
    if (const char* env = std::getenv("ALMOST_FOURIER_SEED"); env && *env) seed = parse_seed(env);
    if (!seed_text.empty()) seed = parse_seed(seed_text);

    if (*fourier) {
      auto r = make_runner();
      if (group.empty()) {
        if (!fourier_csv.empty()) throw UsageError("--csv needs --group");
        for (const auto& g : verify::fourier_groups()) verify::fourier_checks(r, g);
      } else {
        verify::fourier_checks(r, group);
        if (!fourier_csv.empty()) {
          const auto M = verify::fourier_matrix(group);
          std::vector<std::string> labels;
          for (std::size_t k = 0; k < M.rows(); ++k) labels.push_back(std::to_string(k));
          write_file(fourier_csv, af::pairing::to_csv(af::pairing::GramSpace(labels, M)));
        }
      }
      return finish(r, "");
    }
    if (*heis) {
      auto r = make_runner();
      verify::heis_checks(r, heis_n, spectrum);
      return finish(r, heis_json);
    }
    if (*family) {
      auto r = make_runner();
      const auto id = af::families::parse_family(family_id);
      verify::family_checks(r, id);
      if (!family_csv.empty()) write_file(family_csv, af::pairing::to_csv(af::families::family_report(id).gram));
      return finish(r, family_json);
    }
    if (*hecke) {
      if (!kind_text.empty()) sel.kind = af::hecke::parse_kind(kind_text);
      if (!lambda_text.empty()) sel.lambda = af::exact::Scalar::parse(lambda_text);
      if (!check_text.empty()) {
        sel.check = verify::parse_hecke_check(check_text);
        if (!sel.check) throw UsageError("unknown hecke check '" + check_text + "'");
      }
      auto r = make_runner();
      verify::hecke_checks(r, sel, seed);
      return finish(r, hecke_json);
    }
    if (*cliff) {
      const int modes = !datum.empty() + !sc_type.empty() + !exceptional.empty();
      if (modes != 1) throw UsageError("clifford needs exactly one of --datum, --sc, --exceptional");
      if (!datum.empty()) {
        auto r = make_runner();
        verify::clifford_datum_checks(r, datum, which, seed);
        return finish(r, "");
      }
      if (!sc_type.empty()) {
        if (sc_m.empty()) throw UsageError("--sc needs --m");
        const auto m = af::clifford::parse_multiplicities(sc_m);
        nlohmann::ordered_json j;
        j["type"] = sc_type;
        j["m"] = sc_m;
        j["simply_connected"] = af::clifford::simply_connected(af::clifford::parse_type(sc_type), m);
        std::cout << j.dump() << '\n';
        return 0;
      }
      const auto colon = exceptional.find(':');
      if (colon == std::string::npos) throw UsageError("--exceptional expects group:label");
      const auto& row = af::clifford::exceptional_lookup(exceptional.substr(0, colon), exceptional.substr(colon + 1));
      nlohmann::ordered_json j;
      j["group"] = row.group;
      j["label"] = row.label;
      j["structure"] = row.h0;
      j["component_group"] = row.component_group;
      j["simply_connected"] = row.simply_connected;
      std::cout << j.dump() << '\n';
      return 0;
    }
    if (*all) {
      auto r = make_runner();
      verify::verify_all(r, seed);
      return finish(r, all_json);
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const af::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return is_user_error(e.kind()) ? 2 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}
