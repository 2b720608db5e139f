#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "almost_fourier/exact/linalg.hpp"

namespace almost_fourier::hecke {

using exact::Poly;
using exact::PolyMat;
using exact::Scalar;
using exact::ScalarMat;
using exact::Vec;

constexpr std::uint64_t kDefaultSeed = 0xC4A7;

enum class GraphKind { A, B, C, D };

std::string kind_name(GraphKind k);
/// "a", "b", "c", "d" (either case). Throws BadParams.
GraphKind parse_kind(const std::string& s);

using Word = std::vector<int>;

/// Affine C_n Coxeter datum on s_0..s_n, or the parabolic part generated by
/// a subset of them.
struct WGraph {
  GraphKind kind = GraphKind::A;
  int n = 2;
  Scalar lambda = 1;
  std::vector<int> generators;  // acting generators, ascending
  std::vector<std::string> vertices;
  std::vector<std::vector<int>> marks;                     // per vertex
  std::map<std::pair<std::size_t, std::size_t>, Scalar> mu;  // (y, x) -> mu(y, x)

  std::size_t index(const std::string& v) const;
  /// Order of s_i s_j: 4 on the edges {0,1} and {n-1,n}, 3 on the other
  /// neighbours, 2 otherwise.
  int braid_order(int i, int j) const;
};

/// Throws BadParams (n < 2, n > 16, lambda = 0, mark outside generators,
/// weight on an unknown vertex, zero weight).
void validate(const WGraph& g);

/// Graphs (a), (b), (c), (d_lambda). lambda is only used by kind D.
WGraph wgraph(GraphKind kind, int n, const Scalar& lambda = 1);

/// The graph for the parabolic subgroup without s_i: vertices marked s_i are
/// removed and s_i no longer acts.
WGraph delete_generator(const WGraph& g, int i);

struct HeckeModule {
  std::vector<std::string> basis;
  std::vector<int> generators;
  std::map<int, PolyMat> T;  // matrix of T_s; column x holds T_s v_x
  std::optional<ScalarMat> omega;

  const PolyMat& gen(int s) const;
  std::size_t dim() const { return basis.size(); }
};

struct RelationReport {
  std::size_t quadratic = 0;
  std::size_t braid = 0;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

/// Matrices without any check.
HeckeModule raw_module(const WGraph& g);
RelationReport check_relations(const HeckeModule& m, const WGraph& g);
/// T_s v_x = -v_x if s marks x, else t^2 v_x + t sum_{y marked s} mu(y,x) v_y.
/// Adds omega for the full graphs. Throws RelationFailure.
HeckeModule hecke_module(const WGraph& g);

/// Permutation matrix of omega on the vertices of a full graph.
ScalarMat omega_matrix(const WGraph& g);
/// omega^2 = 1 and omega T_i omega = T_{n-i}; returns failures.
std::vector<std::string> check_omega(const HeckeModule& m, const WGraph& g);
/// omega for kind and n (lambda = 1); throws RelationFailure.
ScalarMat omega(GraphKind kind, int n);

/// Words of length <= max_len: all of them up to exhaustive_len, then
/// per_len uniform random ones for each longer length.
std::vector<Word> sample_words(const std::vector<int>& gens, std::size_t max_len = 6, std::size_t exhaustive_len = 3,
                               std::size_t per_len = 100, std::uint64_t seed = kDefaultSeed);
PolyMat word_matrix(const HeckeModule& m, const Word& w);
Poly word_trace(const HeckeModule& m, const Word& w);
std::string word_string(const Word& w);

struct RestrictReport {
  int i = 0;
  std::size_t count = 0;  // vertices marked s_i
  bool stable = false;
  bool sub_matches = false;
  bool quotient_trivial = false;
  std::size_t words = 0;
  bool trace_law = false;
  bool ok() const { return stable && sub_matches && quotient_trivial && trace_law; }
};

/// Restriction to the parabolic Hecke algebra without s_i. Throws
/// StabilityFailure when the unmarked span is not stable.
RestrictReport restrict_to(const HeckeModule& m, const WGraph& g, int i, std::uint64_t seed = kDefaultSeed);

struct CountingIdentity {
  int i;
  int na, nb, nc;
  bool a_ok, b_ok, c_ok;
};
/// n^i_a = (n_a+n_b+n_c)/2, n^i_b = (n_a+n_b-n_c)/2, n^i_c = (n_a-n_b+n_c)/2.
std::vector<CountingIdentity> counting_identities(int n);

struct DecompositionReport {
  int n = 0;
  std::size_t plus_dim = 0;
  std::size_t minus_dim = 0;
  bool commutes = false;
  bool stable = false;
  std::size_t words = 0;
  bool trace_equal = false;
  /// Traces on the eigenspaces equal those of E^a and E^b.
  bool plus_is_a = false;
  bool minus_is_b = false;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

/// E^{d_1} = E^a + E^b through the involution v_i <-> v'_i. Throws
/// DecompositionFailure.
DecompositionReport decompose_d1(int n, std::uint64_t seed = kDefaultSeed);

/// Traces of words avoiding s_i agree for all sampled lambda.
bool lambda_independence(int n, int i, const std::vector<Scalar>& samples, std::uint64_t seed = kDefaultSeed);
/// Words over all generators whose traces differ across the samples.
std::vector<Word> full_word_differences(int n, const std::vector<Scalar>& samples, std::uint64_t seed = kDefaultSeed);

struct VrcReport {
  ScalarMat F;     // rows phi*_{1,1}, phi*_{1,eps}, phi*_{r,1}, phi*_{r,eps} over e_{1,1}, e_{1,eps}, e_{r,1}, e_{r,eps}
  ScalarMat gram;  // reduced 4x4 pairing matrix of the r^2 = g_-1 family
  bool f_squared_identity = false;
  std::vector<std::pair<std::string, bool>> inverse_equalities;
  bool e_holds = false;
  bool matches_gram = false;
  bool eliminated_consistent = false;
  std::vector<std::string> notes;
  bool ok() const;
};

/// Throws ConsistencyFailure.
VrcReport vrc_identities(int n = 2);

struct SpecializeReport {
  std::vector<ScalarMat> generators;
  bool involutions = false;
  bool braids = false;
  std::optional<bool> omega;
  /// Kind D with lambda = 1: theta commutes and splits (n+1, n-1).
  std::optional<bool> theta_split;
  bool ok() const { return involutions && braids && omega.value_or(true) && theta_split.value_or(true); }
};

/// Evaluates at t = 1 (q = 1). Throws RelationFailure.
SpecializeReport specialize_q1(const HeckeModule& m, const WGraph& g);

/// {"kind","n","lambda","generators","vertices":[{"name","marks"}],"edges":[{"from","to","mu"}]}
/// with mu = mu(from, to).
nlohmann::json wgraph_to_json(const WGraph& g);
/// Throws Parse or BadParams.
WGraph wgraph_from_json(const nlohmann::json& j);

}  // namespace almost_fourier::hecke
