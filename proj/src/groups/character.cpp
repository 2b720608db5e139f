#include "almost_fourier/groups/character.hpp"

#include <algorithm>

#include "almost_fourier/error.hpp"

namespace almost_fourier::groups {

ClassFunction::ClassFunction(FiniteGroup g, std::vector<Scalar> values, std::string label)
    : g_(std::move(g)), values_(std::move(values)), label_(std::move(label)) {
  if (values_.size() != g_.order()) throw Error(ErrorKind::DimensionMismatch, "class function length");
  for (Elem x : g_.elements()) {
    for (Elem z : g_.elements()) {
      if (!((*this)(g_.conj(z, x)) == (*this)(x))) {
        throw Error(ErrorKind::InvalidCharacter, "'" + label_ + "' not constant on the class of " + g_.name(x));
      }
    }
  }
}

Scalar inner_product(const ClassFunction& a, const ClassFunction& b) {
  const auto& va = a.values();
  const auto& vb = b.values();
  Scalar acc;
  for (std::size_t k = 0; k < va.size(); ++k) {
    if (va[k].is_zero() || vb[k].is_zero()) continue;
    acc += va[k] * vb[k].conj();
  }
  return acc / Scalar(static_cast<long>(a.group().order()));
}

CharacterCheck validate_characters(const FiniteGroup& g, const std::vector<ClassFunction>& chars) {
  CharacterCheck out;
  Scalar sum_sq;
  for (std::size_t i = 0; i < chars.size(); ++i) {
    if (!chars[i].group().same_as(g)) {
      out.ok = false;
      out.diagnostics.push_back("character " + std::to_string(i) + " lives on another group");
      continue;
    }
    const Scalar d = chars[i].degree();
    sum_sq += d * d;
    for (std::size_t j = i; j < chars.size(); ++j) {
      if (!chars[j].group().same_as(g)) continue;
      const Scalar ip = inner_product(chars[i], chars[j]);
      const Scalar want(i == j ? 1 : 0);
      if (!(ip == want)) {
        out.ok = false;
        out.diagnostics.push_back("<" + std::to_string(i) + "," + std::to_string(j) + "> = " + ip.to_string());
      }
    }
  }
  if (!(sum_sq == Scalar(static_cast<long>(g.order())))) {
    out.ok = false;
    out.diagnostics.push_back("sum of squared degrees " + sum_sq.to_string() + " != " + std::to_string(g.order()));
  }
  return out;
}

std::vector<ClassFunction> abelian_characters(const FiniteGroup& g) {
  if (!g.is_abelian()) throw Error(ErrorKind::InvalidDatum, "abelian_characters on a nonabelian group");
  // Greedy generating set.
  std::vector<Elem> gens;
  std::size_t reached = 1;
  for (Elem x : g.elements()) {
    if (reached == g.order()) break;
    if (12 % g.elem_order(x) != 0) {
      throw Error(ErrorKind::CharacterTableMissing, "element order does not divide 12");
    }
    std::vector<Elem> trial = gens;
    trial.push_back(x);
    const std::size_t k = g.generated(trial).order();
    if (k > reached) {
      gens = std::move(trial);
      reached = k;
    }
  }
  // Each generator g_j maps to exp(2 pi i k_j / 12) with ord(g_j) k_j = 0 mod 12.
  std::vector<long> step(gens.size());
  for (std::size_t j = 0; j < gens.size(); ++j) step[j] = 12 / static_cast<long>(g.elem_order(gens[j]));
  std::vector<ClassFunction> out;
  std::vector<long> k(gens.size(), 0);
  const std::size_t n = g.order();
  while (true) {
    // Extend along a BFS from the identity; reject inconsistent assignments.
    std::vector<long> val(n, -1);
    val[g.position(g.identity())] = 0;
    std::vector<Elem> queue{g.identity()};
    bool ok = true;
    for (std::size_t q = 0; q < queue.size() && ok; ++q) {
      const long v = val[g.position(queue[q])];
      for (std::size_t j = 0; j < gens.size(); ++j) {
        const Elem y = g.mul(queue[q], gens[j]);
        const long w = (v + k[j]) % 12;
        long& slot = val[g.position(y)];
        if (slot < 0) {
          slot = w;
          queue.push_back(y);
        } else if (slot != w) {
          ok = false;
          break;
        }
      }
    }
    if (ok) {
      std::vector<Scalar> values;
      std::string label = "chi";
      for (auto e : k) label += "_" + std::to_string(e);
      if (std::all_of(k.begin(), k.end(), [](long e) { return e == 0; })) label = "1";
      for (std::size_t p = 0; p < n; ++p) values.push_back(Scalar::root_of_unity(val[p], 12));
      out.emplace_back(g, std::move(values), label);
    }
    std::size_t j = 0;
    for (; j < k.size(); ++j) {
      k[j] += step[j];
      if (k[j] < 12) break;
      k[j] = 0;
    }
    if (j == k.size()) break;
  }
  if (out.size() != n) throw Error(ErrorKind::InvalidCharacter, "abelian character count mismatch");
  return out;
}

std::vector<ClassFunction> irreducible_characters(const FiniteGroup& g) {
  if (g.is_abelian()) return abelian_characters(g);
  const auto& supplied = g.table()->characters;
  if (!g.is_whole() || supplied.empty()) {
    throw Error(ErrorKind::CharacterTableMissing, "no character table for a nonabelian group of order " +
                                                      std::to_string(g.order()));
  }
  std::vector<ClassFunction> out;
  for (std::size_t j = 0; j < supplied.size(); ++j) out.emplace_back(g, supplied[j], "irr" + std::to_string(j));
  return out;
}

}  // namespace almost_fourier::groups
