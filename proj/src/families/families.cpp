#include "almost_fourier/families/families.hpp"

#include "almost_fourier/error.hpp"

namespace almost_fourier::families {

using groups::ClassFunction;
using groups::Elem;
using groups::FiniteGroup;
using pairing::TabPoint;
using pairing::TabulatedDatum;
using pairing::ZRecord;

namespace {

// Group given by element names and a multiplication rule on positions.
template <class F>
FiniteGroup named_group(std::vector<std::string> names, F mul) {
  const std::size_t n = names.size();
  std::vector<Elem> table(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) table[a * n + b] = static_cast<Elem>(mul(a, b));
  return FiniteGroup::from_table(n, std::move(table), std::move(names));
}

FiniteGroup xor_group(std::vector<std::string> names) {
  return named_group(std::move(names), [](std::size_t a, std::size_t b) { return a ^ b; });
}

TabPoint make_point(std::string label, FiniteGroup g, std::map<std::string, std::string> lam, std::size_t zbar,
                    const std::vector<std::tuple<std::string, std::string, std::vector<Scalar>>>& irreps) {
  TabPoint p{std::move(label), g, {}, zbar, {}};
  for (const auto& [z, e] : lam) p.lambda_image[z] = g.by_name(e);
  for (const auto& [l, sec, vals] : irreps) p.irreps.push_back({l, sec, ClassFunction(g, vals, l)});
  return p;
}

struct Rec {
  const char* dy;
  const char* dx;
  bool adapted = true;
};

void put(TabulatedDatum& d, const std::string& x, const std::string& y, const std::string& h,
         const std::vector<Rec>& recs) {
  const auto& dx = d.point(x).d;
  const auto& dy = d.point(y).d;
  std::vector<ZRecord> out;
  for (const auto& r : recs) out.push_back({dy.by_name(r.dy), dx.by_name(r.dx), r.adapted});
  d.cells[{x, y, h}] = std::move(out);
}

TabulatedDatum make_f14() {
  TabulatedDatum d;
  d.name = "F14";
  d.components = {{"H0", "H0"}, {"H1", "H1"}};
  d.prefactor = 2;
  d.lambda = {"1", "c"};
  d.sectors = {{"1", {{"1", 1}, {"c", 1}}}, {"chi", {{"1", 1}, {"c", -1}}}};
  // Z_H(x) = Z_H(x)^0 Lambda with connected part, so D_x is the image of Lambda.
  for (const char* x : {"1", "x", "y"}) {
    d.points.push_back(make_point(x, xor_group({"1", "c"}), {{"1", "1"}, {"c", "c"}}, 1,
                                  {{"1", "1", {1, 1}}, {"chi", "chi", {1, -1}}}));
  }
  for (const char* x : {"1", "x", "y"})
    for (const char* y : {"1", "x", "y"})
      for (const char* h : {"H0", "H1"}) put(d, x, y, h, {{"1", "1"}});
  return d;
}

TabulatedDatum make_f15(bool r_squared_one) {
  TabulatedDatum d;
  d.name = r_squared_one ? "F15_rsq1" : "F15_rsqm1";
  d.components = {{"H0", "H0"}, {"H1", "H1"}};
  d.prefactor = 1;
  d.lambda = {"1", "g-1"};
  d.sectors = {{"1", {{"1", 1}, {"g-1", 1}}}, {"chi", {{"1", 1}, {"g-1", -1}}}};

  d.points.push_back(make_point("1", xor_group({"H0", "H1"}), {{"1", "H0"}, {"g-1", "H0"}}, 2,
                                {{"1", "1", {1, 1}}, {"eps", "1", {1, -1}}}));

  // Z_H(r) = {1, g-1, r, rg-1}.
  std::vector<std::string> zr = {"1", "g-1", "r", "rg-1"};
  const Scalar i = Scalar::i();
  // r of order 4 when r^2 = g-1: positions 0,1,2,3 are r^0, r^2, r^1, r^3.
  static const int expo[4] = {0, 2, 1, 3};
  const FiniteGroup dr = r_squared_one ? xor_group(zr) : named_group(zr, [](std::size_t a, std::size_t b) {
    return expo[(expo[a] + expo[b]) % 4];
  });
  std::vector<Scalar> chip = {1, -1, 1, -1}, chim = {1, -1, -1, 1};
  if (!r_squared_one) {
    chip = {1, -1, i, -i};
    chim = {1, -1, -i, i};
  }
  d.points.push_back(make_point("r", dr, {{"1", "1"}, {"g-1", "g-1"}}, 2,
                                {{"1", "1", {1, 1, 1, 1}},
                                 {"eps", "1", {1, 1, -1, -1}},
                                 {"chi+", "chi", chip},
                                 {"chi-", "chi", chim}}));
  d.points.push_back(make_point("g", xor_group({"1"}), {{"1", "1"}, {"g-1", "1"}}, 1, {{"1", "1", {1}}}));

  for (const char* h : {"H0", "H1"}) {
    put(d, "1", "1", h, {{"H0", "H0"}});
    put(d, "1", "r", h, {{"1", "H1"}});
    put(d, "r", "1", h, {{"H1", "1"}});
    put(d, "1", "g", h, {{"1", "H0"}});
    put(d, "g", "1", h, {{"H0", "1"}});
    put(d, "g", "g", h, {{"1", "1"}});
    put(d, "r", "g", h, {});
    put(d, "g", "r", h, {});
    // z in {1, g-1, g_i, g_-i} (times r on H1): z r z^-1 = g_{mu^2} r.
    put(d, "r", "r", h, {{"r", "r"}, {"r", "r"}, {"rg-1", "rg-1"}, {"rg-1", "rg-1"}});
  }
  return d;
}

TabulatedDatum make_f112() {
  TabulatedDatum d;
  d.name = "F112";
  d.components = {{"H", "H"}};
  d.prefactor = 1;
  d.lambda = {"1"};
  d.sectors = {{"1", {{"1", 1}}}};
  d.points.push_back(make_point("1", xor_group({"1"}), {{"1", "1"}}, 1, {{"1", "1", {1}}}));
  // N(T)/T with s the class of r.
  d.points.push_back(make_point("g-1", xor_group({"1", "s"}), {{"1", "1"}}, 2,
                                {{"1", "1", {1, 1}}, {"eps", "1", {1, -1}}}));
  d.points.push_back(make_point("g", xor_group({"1"}), {{"1", "1"}}, 1, {{"1", "1", {1}}}));

  put(d, "1", "1", "H", {{"1", "1"}});
  put(d, "1", "g-1", "H", {{"1", "1"}});
  put(d, "g-1", "1", "H", {{"1", "1"}});
  put(d, "1", "g", "H", {{"1", "1"}});
  put(d, "g", "1", "H", {{"1", "1"}});
  // z in {1, r, xi, xi r}; xi g-1 xi^-1 = r and the pair (r, g-1) is not adapted.
  put(d, "g-1", "g-1", "H", {{"1", "1"}, {"1", "1"}, {"s", "s", false}, {"s", "s", false}});
  put(d, "g-1", "g", "H", {{"1", "1"}, {"1", "1"}});
  put(d, "g", "g-1", "H", {{"1", "1"}, {"1", "1"}});
  put(d, "g", "g", "H", {{"1", "1"}, {"1", "1"}});
  return d;
}

Scalar h(long n) { return Scalar::frac(n, 2); }

ScalarMat golden_matrix(FamilyId id) {
  switch (id) {
    case FamilyId::F14:
      return ScalarMat::from_rows({{1, 1, 1}, {1, 1, 1}, {1, 1, 1}});
    case FamilyId::F15_rsq1:
    case FamilyId::F15_rsqm1:
      return ScalarMat::from_rows({{h(1), h(1), h(1), h(1), 1},
                                   {h(1), h(1), h(-1), h(-1), 1},
                                   {h(1), h(-1), h(1), h(-1), 0},
                                   {h(1), h(-1), h(-1), h(1), 0},
                                   {1, 1, 0, 0, 2}});
    case FamilyId::F112:
      return ScalarMat::from_rows(
          {{1, h(1), h(1), 1}, {h(1), h(1), 0, h(1)}, {h(1), 0, h(1), h(1)}, {1, h(1), h(1), 1}});
  }
  return {};
}

ScalarMat golden_reduced(FamilyId id) {
  switch (id) {
    case FamilyId::F14:
      return ScalarMat::from_rows({{1}});
    case FamilyId::F15_rsq1:
    case FamilyId::F15_rsqm1:
      return golden_matrix(id).submatrix({0, 1, 2, 3}, {0, 1, 2, 3});
    case FamilyId::F112:
      return ScalarMat::from_rows({{h(1), 0}, {0, h(1)}});
  }
  return {};
}

std::vector<std::string> golden_basis(FamilyId id) {
  switch (id) {
    case FamilyId::F14:
      return {"(1,1)"};
    case FamilyId::F15_rsq1:
    case FamilyId::F15_rsqm1:
      return {"(1,1)", "(1,eps)", "(r,1)", "(r,eps)"};
    case FamilyId::F112:
      return {"(g-1,1)", "(g-1,eps)"};
  }
  return {};
}

std::vector<Relation> golden_relations(FamilyId id) {
  switch (id) {
    case FamilyId::F14:
      return {{"(x,1) = (1,1)", {{"(x,1)", 1}, {"(1,1)", -1}}},
              {"(y,1) = (1,1)", {{"(y,1)", 1}, {"(1,1)", -1}}}};
    case FamilyId::F15_rsq1:
    case FamilyId::F15_rsqm1:
      return {{"(g,1) = (1,1)+(1,eps)", {{"(g,1)", 1}, {"(1,1)", -1}, {"(1,eps)", -1}}}};
    case FamilyId::F112:
      return {{"(g,1) = (1,1)", {{"(g,1)", 1}, {"(1,1)", -1}}},
              {"(1,1) = (g-1,1)+(g-1,eps)", {{"(1,1)", 1}, {"(g-1,1)", -1}, {"(g-1,eps)", -1}}}};
  }
  return {};
}

bool relation_holds(const pairing::GramSpace& gs, const Relation& r) {
  for (std::size_t j = 0; j < gs.matrix().cols(); ++j) {
    Scalar acc;
    for (const auto& [label, c] : r.terms) acc += c * gs(gs.index(label), j);
    if (!acc.is_zero()) return false;
  }
  return true;
}

}  // namespace

const std::vector<FamilyId>& all_families() {
  static const std::vector<FamilyId> ids = {FamilyId::F14, FamilyId::F15_rsq1, FamilyId::F15_rsqm1, FamilyId::F112};
  return ids;
}

std::string family_name(FamilyId id) {
  switch (id) {
    case FamilyId::F14:
      return "F14";
    case FamilyId::F15_rsq1:
      return "F15_rsq1";
    case FamilyId::F15_rsqm1:
      return "F15_rsqm1";
    case FamilyId::F112:
      return "F112";
  }
  return "?";
}

FamilyId parse_family(const std::string& text) {
  if (text == "F14") return FamilyId::F14;
  if (text == "F15a" || text == "F15_rsq1") return FamilyId::F15_rsq1;
  if (text == "F15b" || text == "F15_rsqm1") return FamilyId::F15_rsqm1;
  if (text == "F112") return FamilyId::F112;
  throw Error(ErrorKind::UnknownLabel, "unknown family '" + text + "'");
}

TabulatedDatum datum(FamilyId id) {
  TabulatedDatum d;
  switch (id) {
    case FamilyId::F14:
      d = make_f14();
      break;
    case FamilyId::F15_rsq1:
      d = make_f15(true);
      break;
    case FamilyId::F15_rsqm1:
      d = make_f15(false);
      break;
    case FamilyId::F112:
      d = make_f112();
      break;
  }
  pairing::validate(d);
  return d;
}

bool FamilyReport::ok() const {
  if (!golden_match() || !reduced_match() || !basis_match()) return false;
  if (radical.size() != golden_radical_dim) return false;
  for (const auto& r : relations)
    if (!r.holds) return false;
  for (const auto& v : values)
    if (!v.ok()) return false;
  return variants_coincide.value_or(true);
}

FamilyReport family_report(FamilyId id) {
  const auto d = datum(id);
  FamilyReport rep;
  rep.id = id;
  rep.name = family_name(id);
  rep.gram = pairing::pairing_matrix(d, "1", "1");
  rep.golden = golden_matrix(id);
  rep.radical = pairing::radical(rep.gram);
  rep.quotient_dim = pairing::quotient_dim(rep.gram);
  rep.golden_radical_dim = rep.golden.rows() - golden_reduced(id).rows();
  rep.images = pairing::image_set(rep.gram);
  rep.basis = pairing::positive_basis(rep.images);
  for (std::size_t m : rep.basis.members) rep.basis_labels.push_back(rep.images.labels[m]);
  rep.golden_basis = golden_basis(id);
  rep.reduced = pairing::reduced_gram(rep.basis, rep.images, rep.gram);
  rep.golden_reduced = golden_reduced(id);
  for (std::size_t p = 0; p < rep.gram.size(); ++p) rep.stars.push_back(pairing::star(p, rep.basis, rep.images, rep.gram));
  rep.relations = golden_relations(id);
  for (auto& r : rep.relations) r.holds = relation_holds(rep.gram, r);
  rep.extra_images = rep.images.coords.size() > rep.basis.members.size();

  switch (id) {
    case FamilyId::F14:
      rep.values.push_back({"((x,1),(y,1))", 1, pairing::pair_tabulated(d, {"x", "1"}, {"y", "1"})});
      rep.values.push_back({"quotient dim", 1, Scalar(static_cast<long>(rep.quotient_dim))});
      break;
    case FamilyId::F15_rsq1:
    case FamilyId::F15_rsqm1: {
      rep.values.push_back({"|Zbar(1)|", 2, Scalar(static_cast<long>(d.point("1").zbar))});
      rep.values.push_back({"|Zbar(r)|", 2, Scalar(static_cast<long>(d.point("r").zbar))});
      rep.values.push_back({"|Zbar(g)|", 1, Scalar(static_cast<long>(d.point("g").zbar))});
      const auto other = datum(id == FamilyId::F15_rsq1 ? FamilyId::F15_rsqm1 : FamilyId::F15_rsq1);
      rep.variants_coincide = pairing::pairing_matrix(other, "1", "1").matrix() == rep.gram.matrix();
      break;
    }
    case FamilyId::F112:
      rep.values.push_back({"kappa(g-1,g-1)", Scalar::frac(1, 2), pairing::kappa(d, "g-1", "g-1", "H")});
      rep.values.push_back({"kappa(g-1,g)", Scalar::frac(1, 2), pairing::kappa(d, "g-1", "g", "H")});
      rep.values.push_back({"kappa(g,g)", Scalar::frac(1, 2), pairing::kappa(d, "g", "g", "H")});
      rep.values.push_back({"kappa(1,g)", 1, pairing::kappa(d, "1", "g", "H")});
      break;
  }
  return rep;
}

}  // namespace almost_fourier::families
