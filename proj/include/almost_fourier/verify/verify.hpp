#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "almost_fourier/exact/matrix.hpp"
#include "almost_fourier/families/families.hpp"
#include "almost_fourier/hecke/hecke.hpp"

namespace almost_fourier::verify {

constexpr std::uint64_t kDefaultSeed = 0xC4A7;

struct CheckResult {
  std::string name;
  std::string status;  // pass, fail, skipped
  std::string expected;
  std::string actual;
  double ms = 0;
  bool passed() const { return status == "pass"; }
};

using Sink = std::function<void(const CheckResult&)>;

/// Collects results and forwards each one to the sink as soon as it is known.
class Runner {
 public:
  explicit Runner(Sink sink = {}) : sink_(std::move(sink)) {}
  /// Runs actual() and passes when it returns expected. Library errors are
  /// reported as failures with the error text as the actual value.
  void check(const std::string& name, const std::string& expected, const std::function<std::string()>& actual);
  void skip(const std::string& name, const std::string& why);
  const std::vector<CheckResult>& results() const { return results_; }
  std::size_t failures() const;

 private:
  void emit(CheckResult r);
  Sink sink_;
  std::vector<CheckResult> results_;
};

/// {name, status, expected, actual, ms}; ms omitted when timing is false.
nlohmann::ordered_json to_json(const CheckResult& r, bool timing = true);
/// [[a,b],[c,d]] with scalar strings.
std::string matrix_string(const exact::ScalarMat& m);

/// trivial, Z2, Z3, Z4, S3, D4, Q8
const std::vector<std::string>& fourier_groups();
/// Hermitian, square one and size of the classical Fourier matrix. Throws
/// BadParams for an unknown group name.
void fourier_checks(Runner& r, const std::string& group);
exact::ScalarMat fourier_matrix(const std::string& group);

/// Closed forms, M^2, spectrum, characters and sector rules for n in {1,2}
/// (n = 3 runs the cheap subset).
void heis_checks(Runner& r, int n, bool spectrum);
/// Hermitian symmetry, conjugation invariance and Lambda-equivariance of the
/// Heisenberg pairing; exhaustive when samples is 0.
void pairing_property_checks(Runner& r, int n, std::size_t samples, std::uint64_t seed);

void family_checks(Runner& r, families::FamilyId id);

enum class HeckeCheck { Relations, Omega, Restrict, Decompose, Vrc };
std::optional<HeckeCheck> parse_hecke_check(const std::string& s);
struct HeckeSelection {
  int n = 2;
  std::optional<hecke::GraphKind> kind;      // all kinds when unset
  std::optional<exact::Scalar> lambda;       // 1, 2, 5 when unset
  std::optional<HeckeCheck> check;           // all checks when unset
};
void hecke_checks(Runner& r, const HeckeSelection& sel, std::uint64_t seed);

/// beta, delta, conj or all, for one spin datum.
void clifford_datum_checks(Runner& r, const std::string& datum, const std::string& which, std::uint64_t seed);
/// The fixed suite: random beta, y~ squares, Delta orders, kernel,
/// simply-connectedness cases and the exceptional table.
void clifford_checks(Runner& r, std::uint64_t seed);

constexpr int kCriteria = 9;
/// Checks behind one acceptance criterion (1..8; 9 is the CLI aggregate).
void criterion_checks(Runner& r, int criterion, std::uint64_t seed);
/// Criteria 1..8 in order.
void verify_all(Runner& r, std::uint64_t seed);

}  // namespace almost_fourier::verify
