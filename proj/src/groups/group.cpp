#include "almost_fourier/groups/group.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "almost_fourier/error.hpp"

namespace almost_fourier::groups {

namespace {

void check_axioms(const Table& t) {
  const std::size_t n = t.order;
  auto m = [&](std::size_t a, std::size_t b) -> std::size_t { return t.mul[a * n + b]; };
  for (auto e : t.mul) {
    if (e >= n) throw Error(ErrorKind::NotAGroup, "table entry out of range");
  }
  // Latin square: every row and column is a permutation.
  std::vector<char> seen(n);
  for (std::size_t a = 0; a < n; ++a) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t b = 0; b < n; ++b) {
      if (seen[m(a, b)]++) throw Error(ErrorKind::NotAGroup, "row " + std::to_string(a) + " repeats");
    }
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t b = 0; b < n; ++b) {
      if (seen[m(b, a)]++) throw Error(ErrorKind::NotAGroup, "column " + std::to_string(a) + " repeats");
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    if (m(t.identity, a) != a || m(a, t.identity) != a) throw Error(ErrorKind::NotAGroup, "identity");
  }
  auto assoc = [&](std::size_t a, std::size_t b, std::size_t c) {
    if (m(m(a, b), c) != m(a, m(b, c))) {
      throw Error(ErrorKind::NotAGroup, "associativity fails at (" + std::to_string(a) + "," +
                                            std::to_string(b) + "," + std::to_string(c) + ")");
    }
  };
  if (n <= 512) {
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        for (std::size_t c = 0; c < n; ++c) assoc(a, b, c);
  } else {
    std::mt19937_64 rng(0xC4A7);
    for (int k = 0; k < 200000; ++k) assoc(rng() % n, rng() % n, rng() % n);
  }
}

}  // namespace

FiniteGroup::FiniteGroup(std::shared_ptr<const Table> table, std::vector<Elem> members)
    : table_(std::move(table)), members_(std::move(members)), pos_(table_->order, -1) {
  std::sort(members_.begin(), members_.end());
  for (std::size_t k = 0; k < members_.size(); ++k) pos_[members_[k]] = static_cast<int>(k);
}

FiniteGroup FiniteGroup::from_table(std::size_t order, std::vector<Elem> mul, std::vector<std::string> names,
                                    std::vector<std::vector<Scalar>> characters) {
  if (order == 0) throw Error(ErrorKind::NotAGroup, "empty carrier");
  if (order > kMaxOrder) throw Error(ErrorKind::SizeLimit, "group order " + std::to_string(order) + " > 4096");
  if (mul.size() != order * order) throw Error(ErrorKind::NotAGroup, "table size is not order^2");
  auto t = std::make_shared<Table>();
  t->order = order;
  t->mul = std::move(mul);
  // The identity is the unique e with e*e = e.
  bool found = false;
  for (std::size_t a = 0; a < order; ++a) {
    if (t->mul[a * order + a] == a) {
      t->identity = static_cast<Elem>(a);
      found = true;
      break;
    }
  }
  if (!found) throw Error(ErrorKind::NotAGroup, "no idempotent element");
  check_axioms(*t);
  t->inv.assign(order, 0);
  for (std::size_t a = 0; a < order; ++a) {
    for (std::size_t b = 0; b < order; ++b) {
      if (t->mul[a * order + b] == t->identity) t->inv[a] = static_cast<Elem>(b);
    }
  }
  if (names.empty()) {
    for (std::size_t a = 0; a < order; ++a) names.push_back("e" + std::to_string(a));
  }
  if (names.size() != order) throw Error(ErrorKind::DimensionMismatch, "names length");
  t->names = std::move(names);
  for (const auto& c : characters) {
    if (c.size() != order) throw Error(ErrorKind::DimensionMismatch, "character length");
  }
  t->characters = std::move(characters);
  std::vector<Elem> all(order);
  std::iota(all.begin(), all.end(), Elem{0});
  return FiniteGroup(std::move(t), std::move(all));
}

std::size_t FiniteGroup::position(Elem e) const {
  if (!contains(e)) throw Error(ErrorKind::ElementNotInGroup, "element " + std::to_string(e));
  return static_cast<std::size_t>(pos_[e]);
}

Elem FiniteGroup::power(Elem a, long k) const {
  if (k < 0) return power(inv(a), -k);
  Elem out = identity();
  for (long j = 0; j < k; ++j) out = mul(out, a);
  return out;
}

std::size_t FiniteGroup::elem_order(Elem a) const {
  std::size_t k = 1;
  for (Elem p = a; p != identity(); p = mul(p, a)) ++k;
  return k;
}

Elem FiniteGroup::by_name(const std::string& nm) const {
  for (Elem e : members_) {
    if (table_->names[e] == nm) return e;
  }
  throw Error(ErrorKind::ElementNotInGroup, "no element named '" + nm + "'");
}

bool FiniteGroup::is_abelian() const {
  for (Elem a : members_)
    for (Elem b : members_)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

bool FiniteGroup::is_central(Elem x) const {
  if (!contains(x)) return false;
  return std::all_of(members_.begin(), members_.end(), [&](Elem g) { return mul(g, x) == mul(x, g); });
}

std::vector<Elem> FiniteGroup::center() const {
  std::vector<Elem> out;
  for (Elem x : members_) {
    if (is_central(x)) out.push_back(x);
  }
  return out;
}

FiniteGroup FiniteGroup::centralizer(Elem x) const {
  if (!contains(x)) throw Error(ErrorKind::ElementNotInGroup, "centralizer of element " + std::to_string(x));
  std::vector<Elem> out;
  for (Elem g : members_) {
    if (mul(g, x) == mul(x, g)) out.push_back(g);
  }
  return FiniteGroup(table_, std::move(out));
}

FiniteGroup FiniteGroup::generated(const std::vector<Elem>& gens) const {
  std::vector<char> in(table_->order, 0);
  std::vector<Elem> out{identity()};
  in[identity()] = 1;
  for (std::size_t k = 0; k < out.size(); ++k) {
    for (Elem g : gens) {
      if (!contains(g)) throw Error(ErrorKind::ElementNotInGroup, "generator " + std::to_string(g));
      Elem p = mul(out[k], g);
      if (!in[p]) {
        in[p] = 1;
        out.push_back(p);
      }
    }
  }
  return FiniteGroup(table_, std::move(out));
}

std::vector<std::vector<Elem>> FiniteGroup::conjugacy_classes() const {
  std::vector<char> done(table_->order, 0);
  std::vector<std::vector<Elem>> classes;
  for (Elem x : members_) {
    if (done[x]) continue;
    std::vector<Elem> cls;
    for (Elem z : members_) {
      Elem y = conj(z, x);
      if (!done[y]) {
        done[y] = 1;
        cls.push_back(y);
      }
    }
    std::sort(cls.begin(), cls.end());
    classes.push_back(std::move(cls));
  }
  return classes;
}

CentralSubgroup::CentralSubgroup(FiniteGroup parent, const std::vector<Elem>& members)
    : parent_(std::move(parent)), sub_(parent_.generated(members)) {
  std::vector<Elem> m = members;
  std::sort(m.begin(), m.end());
  m.erase(std::unique(m.begin(), m.end()), m.end());
  if (m != sub_.elements()) throw Error(ErrorKind::NotAGroup, "central subgroup members not closed");
  for (Elem z : sub_.elements()) {
    if (!parent_.is_central(z)) throw Error(ErrorKind::NotCentral, "element " + parent_.name(z) + " is not central");
  }
}

std::size_t quotient_order(const FiniteGroup& g, const CentralSubgroup& n) {
  for (Elem z : n.elements()) {
    if (!g.is_central(z)) throw Error(ErrorKind::NotCentral, "element " + g.name(z) + " not central in subgroup");
  }
  return g.order() / n.order();
}

// ---------------------------------------------------------------- constructors

namespace {

std::vector<std::vector<Scalar>> cyclic_table(std::size_t n) {
  std::vector<std::vector<Scalar>> chars;
  if (12 % n != 0) return chars;
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<Scalar> v;
    for (std::size_t k = 0; k < n; ++k) v.push_back(Scalar::root_of_unity(static_cast<long>(j * k), static_cast<long>(n)));
    chars.push_back(std::move(v));
  }
  return chars;
}

}  // namespace

FiniteGroup trivial_group() { return FiniteGroup::from_table(1, {0}, {"1"}, {{Scalar(1)}}); }

FiniteGroup cyclic(std::size_t n) {
  if (n == 0) throw Error(ErrorKind::BadParams, "cyclic group of order 0");
  std::vector<Elem> mul(n * n);
  std::vector<std::string> names;
  for (std::size_t a = 0; a < n; ++a) {
    names.push_back(a == 0 ? "1" : a == 1 ? "a" : "a^" + std::to_string(a));
    for (std::size_t b = 0; b < n; ++b) mul[a * n + b] = static_cast<Elem>((a + b) % n);
  }
  return FiniteGroup::from_table(n, std::move(mul), std::move(names), cyclic_table(n));
}

FiniteGroup dihedral(std::size_t n) {
  if (n < 1) throw Error(ErrorKind::BadParams, "dihedral group needs n >= 1");
  // r^k s^e has index e*n + k; (r^a s^e)(r^b s^f) = r^(a + (-1)^e b) s^(e+f).
  const std::size_t order = 2 * n;
  std::vector<Elem> mul(order * order);
  std::vector<std::string> names;
  for (std::size_t x = 0; x < order; ++x) {
    const std::size_t a = x % n, e = x / n;
    std::string nm = a == 0 ? "" : a == 1 ? "r" : "r^" + std::to_string(a);
    if (e) nm += "s";
    names.push_back(nm.empty() ? "1" : nm);
    for (std::size_t y = 0; y < order; ++y) {
      const std::size_t b = y % n, f = y / n;
      const std::size_t k = e ? (a + n - b) % n : (a + b) % n;
      mul[x * order + y] = static_cast<Elem>(((e + f) % 2) * n + k);
    }
  }
  std::vector<std::vector<Scalar>> chars;
  if (12 % n == 0) {
    auto linear = [&](int rot, int refl) {
      std::vector<Scalar> v;
      for (std::size_t x = 0; x < order; ++x) {
        const std::size_t a = x % n, e = x / n;
        long s = (rot < 0 && a % 2 == 1 ? -1 : 1) * (refl < 0 && e == 1 ? -1 : 1);
        v.push_back(Scalar(s));
      }
      return v;
    };
    chars.push_back(linear(1, 1));
    chars.push_back(linear(1, -1));
    if (n % 2 == 0) {
      chars.push_back(linear(-1, 1));
      chars.push_back(linear(-1, -1));
    }
    for (std::size_t j = 1; 2 * j < n; ++j) {
      std::vector<Scalar> v;
      for (std::size_t x = 0; x < order; ++x) {
        const long a = static_cast<long>(x % n);
        if (x / n == 1) {
          v.push_back(Scalar());
        } else {
          const long jj = static_cast<long>(j);
          v.push_back(Scalar::root_of_unity(jj * a, static_cast<long>(n)) +
                      Scalar::root_of_unity(-jj * a, static_cast<long>(n)));
        }
      }
      chars.push_back(std::move(v));
    }
  }
  return FiniteGroup::from_table(order, std::move(mul), std::move(names), std::move(chars));
}

FiniteGroup quaternion() {
  // Index = 4*sign + unit, unit in {1, i, j, k}.
  static const int unit_mul[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static const int unit_sign[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
  static const char* unit_name[4] = {"1", "i", "j", "k"};
  std::vector<Elem> mul(64);
  std::vector<std::string> names;
  for (int x = 0; x < 8; ++x) {
    names.push_back((x >= 4 ? "-" : "") + std::string(unit_name[x % 4]));
    for (int y = 0; y < 8; ++y) {
      const int u = x % 4, v = y % 4;
      const int s = (x / 4 + y / 4 + unit_sign[u][v]) % 2;
      mul[static_cast<std::size_t>(x * 8 + y)] = static_cast<Elem>(4 * s + unit_mul[u][v]);
    }
  }
  std::vector<std::vector<Scalar>> chars;
  for (int si = 0; si < 2; ++si) {
    for (int sj = 0; sj < 2; ++sj) {
      std::vector<Scalar> v;
      for (int x = 0; x < 8; ++x) {
        const int u = x % 4;
        const int odd = (u == 1 ? si : u == 2 ? sj : u == 3 ? si ^ sj : 0);
        v.push_back(Scalar(odd ? -1 : 1));
      }
      chars.push_back(std::move(v));
    }
  }
  chars.push_back({2, 0, 0, 0, -2, 0, 0, 0});
  return FiniteGroup::from_table(8, std::move(mul), std::move(names), std::move(chars));
}

FiniteGroup symmetric(std::size_t n) {
  if (n < 1 || n > 4) throw Error(ErrorKind::SizeLimit, "symmetric group supported for n <= 4");
  std::vector<std::vector<int>> perms;
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  const std::size_t order = perms.size();
  auto index_of = [&](const std::vector<int>& q) {
    return static_cast<Elem>(std::lower_bound(perms.begin(), perms.end(), q) - perms.begin());
  };
  std::vector<Elem> mul(order * order);
  std::vector<std::string> names;
  // Cycle type as sorted cycle lengths, used for the character table.
  std::vector<std::vector<int>> types;
  for (std::size_t a = 0; a < order; ++a) {
    std::string nm;
    std::vector<char> seen(n, 0);
    std::vector<int> type;
    for (std::size_t s = 0; s < n; ++s) {
      if (seen[s]) continue;
      std::string cyc;
      int len = 0;
      for (std::size_t t = s; !seen[t]; t = static_cast<std::size_t>(perms[a][t])) {
        seen[t] = 1;
        cyc += std::to_string(t + 1);
        ++len;
      }
      type.push_back(len);
      if (len > 1) nm += "(" + cyc + ")";
    }
    std::sort(type.begin(), type.end());
    types.push_back(type);
    names.push_back(nm.empty() ? "1" : nm);
    for (std::size_t b = 0; b < order; ++b) {
      std::vector<int> c(n);
      for (std::size_t k = 0; k < n; ++k) c[k] = perms[a][static_cast<std::size_t>(perms[b][k])];
      mul[a * order + b] = index_of(c);
    }
  }
  // Supplied tables keyed by cycle type.
  std::vector<std::pair<std::vector<int>, std::vector<long>>> rows;
  if (n == 1) rows = {{{1}, {1}}};
  if (n == 2) rows = {{{1, 1}, {1, 1}}, {{2}, {1, -1}}};
  if (n == 3) rows = {{{1, 1, 1}, {1, 1, 2}}, {{1, 2}, {1, -1, 0}}, {{3}, {1, 1, -1}}};
  if (n == 4) {
    rows = {{{1, 1, 1, 1}, {1, 1, 3, 3, 2}},
            {{1, 1, 2}, {1, -1, 1, -1, 0}},
            {{2, 2}, {1, 1, -1, -1, 2}},
            {{1, 3}, {1, 1, 0, 0, -1}},
            {{4}, {1, -1, -1, 1, 0}}};
  }
  const std::size_t nchars = rows.front().second.size();
  std::vector<std::vector<Scalar>> chars(nchars);
  for (std::size_t a = 0; a < order; ++a) {
    for (const auto& [type, vals] : rows) {
      if (type != types[a]) continue;
      for (std::size_t j = 0; j < nchars; ++j) chars[j].push_back(Scalar(vals[j]));
    }
  }
  return FiniteGroup::from_table(order, std::move(mul), std::move(names), std::move(chars));
}

FiniteGroup klein() { return direct_product(cyclic(2), cyclic(2)); }

FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b) {
  const std::size_t na = a.order(), nb = b.order(), order = na * nb;
  std::vector<Elem> mul(order * order);
  std::vector<std::string> names;
  const auto& ea = a.elements();
  const auto& eb = b.elements();
  for (std::size_t x = 0; x < order; ++x) {
    names.push_back("(" + a.name(ea[x / nb]) + "," + b.name(eb[x % nb]) + ")");
    for (std::size_t y = 0; y < order; ++y) {
      const std::size_t pa = a.position(a.mul(ea[x / nb], ea[y / nb]));
      const std::size_t pb = b.position(b.mul(eb[x % nb], eb[y % nb]));
      mul[x * order + y] = static_cast<Elem>(pa * nb + pb);
    }
  }
  // Product characters when both factors carry supplied tables.
  std::vector<std::vector<Scalar>> chars;
  const auto& ca = a.table()->characters;
  const auto& cb = b.table()->characters;
  if (a.is_whole() && b.is_whole() && !ca.empty() && !cb.empty()) {
    for (const auto& u : ca) {
      for (const auto& v : cb) {
        std::vector<Scalar> w;
        for (std::size_t x = 0; x < order; ++x) w.push_back(u[ea[x / nb]] * v[eb[x % nb]]);
        chars.push_back(std::move(w));
      }
    }
  }
  return FiniteGroup::from_table(order, std::move(mul), std::move(names), std::move(chars));
}

}  // namespace almost_fourier::groups
