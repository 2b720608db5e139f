#include "almost_fourier/heis/heisenberg.hpp"

#include "almost_fourier/error.hpp"

namespace almost_fourier::heis {

namespace {

unsigned bit(unsigned v, int j) { return (v >> j) & 1u; }

groups::FiniteGroup build_group(int n) {
  if (n < 1 || n > 3) throw Error(ErrorKind::SizeLimit, "Heisenberg group needs 1 <= n <= 3, got " + std::to_string(n));
  const unsigned space = 1u << (2 * n);
  const std::size_t order = 2 * space;
  // B(x,y) = sum_k x_{2k-1} y_{2k} plus x_1 y_1 + x_2 y_2 on the first block.
  auto B = [n](unsigned x, unsigned y) {
    unsigned s = bit(x, 0) * bit(y, 0) + bit(x, 1) * bit(y, 1);
    for (int k = 0; k < n; ++k) s += bit(x, 2 * k) * bit(y, 2 * k + 1);
    return s & 1u;
  };
  std::vector<Elem> mul(order * order);
  std::vector<std::string> names;
  for (std::size_t a = 0; a < order; ++a) {
    const unsigned ea = static_cast<unsigned>(a / space), xa = static_cast<unsigned>(a % space);
    std::string bits;
    for (int j = 0; j < 2 * n; ++j) bits += bit(xa, j) ? '1' : '0';
    names.push_back(xa == 0 ? (ea ? "c" : "1") : (ea ? "c.x" : "x") + bits);
    for (std::size_t b = 0; b < order; ++b) {
      const unsigned eb = static_cast<unsigned>(b / space), xb = static_cast<unsigned>(b % space);
      const unsigned e = (ea + eb + B(xa, xb)) & 1u;
      mul[a * order + b] = static_cast<Elem>(e * space + (xa ^ xb));
    }
  }
  return groups::FiniteGroup::from_table(order, std::move(mul), std::move(names));
}

pairing::FinitePairingDatum build_datum(int n) {
  auto g = build_group(n);
  const Elem c = 1u << (2 * n);
  groups::CentralSubgroup lam(g, {g.identity(), c});
  return pairing::FinitePairingDatum(std::move(g), std::move(lam));
}

}  // namespace

Heisenberg::Heisenberg(int n) : n_(n), datum_(build_datum(n)) {}

int Heisenberg::form(unsigned x, unsigned y) const {
  unsigned s = 0;
  for (int k = 0; k < n_; ++k) s += bit(x, 2 * k) * bit(y, 2 * k + 1) + bit(x, 2 * k + 1) * bit(y, 2 * k);
  return static_cast<int>(s & 1u);
}

int Heisenberg::bilinear(unsigned x, unsigned y) const {
  unsigned s = bit(x, 0) * bit(y, 0) + bit(x, 1) * bit(y, 1);
  for (int k = 0; k < n_; ++k) s += bit(x, 2 * k) * bit(y, 2 * k + 1);
  return static_cast<int>(s & 1u);
}

std::vector<ZEntry> Heisenberg::z_index() const {
  std::vector<ZEntry> out;
  for (unsigned x = 0; x < space_size(); ++x) {
    for (unsigned y = 0; y < space_size(); ++y) {
      if (ybar(x, y) == y) out.push_back({x, y});
    }
  }
  return out;
}

std::string Heisenberg::vec_name(unsigned x) const {
  std::string bits;
  for (int j = 0; j < 2 * n_; ++j) bits += bit(x, j) ? '1' : '0';
  return bits;
}

std::string Heisenberg::label(const ZEntry& z) const { return "(" + vec_name(z.x) + "," + vec_name(z.y) + ")"; }

SectorCharacters Heisenberg::sector_characters(unsigned x) const {
  const auto& g = group();
  auto z = g.centralizer(lift(x));
  SectorCharacters out;
  for (unsigned y = 0; y < space_size(); ++y) {
    if (ybar(x, y) != y) continue;
    std::vector<Scalar> v;
    for (Elem e : z.elements()) v.push_back(Scalar(form(psi(e), y) ? -1 : 1));
    out.ys.push_back(y);
    out.one.emplace_back(z, std::move(v), "y" + vec_name(y));
  }
  const long deg = x == 0 ? (1L << n_) : (1L << (n_ - 1));
  if (x == 0) {
    std::vector<Scalar> v;
    for (Elem e : z.elements()) v.push_back(e == lift(0) ? Scalar(deg) : e == c() ? Scalar(-deg) : Scalar());
    out.chi.emplace_back(z, std::move(v), "rho");
    return out;
  }
  // xdot^2 = c^{q(x)}, so the central character at xdot squares to (-1)^{q(x)}.
  const Scalar w = q(x) ? Scalar::i() : Scalar(1);
  for (int s : {1, -1}) {
    std::vector<Scalar> v;
    for (Elem e : z.elements()) {
      if (e == lift(x, 0)) v.push_back(Scalar(deg * s) * w);
      else if (e == lift(x, 1)) v.push_back(Scalar(-deg * s) * w);
      else if (e == lift(0, 0)) v.push_back(Scalar(deg));
      else if (e == lift(0, 1)) v.push_back(Scalar(-deg));
      else v.push_back(Scalar());
    }
    out.chi.emplace_back(z, std::move(v), s > 0 ? "rho" : "rho'");
  }
  return out;
}

FinitePoint Heisenberg::point(const ZEntry& z, unsigned eps) const {
  auto sc = sector_characters(z.x);
  for (std::size_t k = 0; k < sc.ys.size(); ++k) {
    if (sc.ys[k] == z.y) return {label(z), lift(z.x, eps), sc.one[k]};
  }
  throw Error(ErrorKind::BadIndex, "no Z entry " + label(z));
}

std::vector<FinitePoint> Heisenberg::chi_points(unsigned x, unsigned eps) const {
  auto sc = sector_characters(x);
  std::vector<FinitePoint> out;
  const std::string base = (eps ? "c." : "") + vec_name(x);
  for (std::size_t k = 0; k < sc.chi.size(); ++k) {
    out.push_back({"(" + base + "," + sc.chi[k].label() + ")", lift(x, eps), sc.chi[k]});
  }
  return out;
}

std::size_t z_count(int n) {
  const std::size_t e = std::size_t{1} << (2 * n);
  return e + (e - 1) * (e / 2);
}

Scalar closed_form(const Heisenberg& h, const ZEntry& a, const ZEntry& b) {
  if (h.form(a.x, b.x)) return Scalar();
  const int sign = (h.form(b.x, a.y) + h.form(a.x, b.y)) & 1 ? -1 : 1;
  const long den = (1L << (2 * h.n() - 2)) * (a.x == 0 ? 2 : 1) * (b.x == 0 ? 2 : 1);
  return Scalar::frac(sign, den);
}

GramSpace matrix_M(const Heisenberg& h, unsigned lift_eps) {
  std::vector<FinitePoint> pts;
  unsigned cur = ~0u;
  SectorCharacters sc;
  for (const auto& z : h.z_index()) {
    if (z.x != cur) {
      sc = h.sector_characters(z.x);
      cur = z.x;
    }
    for (std::size_t k = 0; k < sc.ys.size(); ++k) {
      if (sc.ys[k] == z.y) pts.push_back({h.label(z), h.lift(z.x, lift_eps), sc.one[k]});
    }
  }
  return pairing::finite_matrix(h.datum(), pts);
}

ScalarMat closed_form_matrix(const Heisenberg& h) {
  const auto zs = h.z_index();
  ScalarMat m(zs.size(), zs.size());
  for (std::size_t i = 0; i < zs.size(); ++i)
    for (std::size_t j = 0; j < zs.size(); ++j) m(i, j) = closed_form(h, zs[i], zs[j]);
  return m;
}

ScalarMat m2_block_formula(const Heisenberg& h) {
  const auto zs = h.z_index();
  ScalarMat m(zs.size(), zs.size());
  for (std::size_t i = 0; i < zs.size(); ++i) {
    for (std::size_t j = 0; j < zs.size(); ++j) {
      if (zs[i].x != zs[j].x) continue;
      const long ex = zs[i].x == 0 ? h.space_size() : h.space_size() / 2;
      const Scalar delta(zs[i].y == zs[j].y ? 2 : 0);
      m(i, j) = Scalar(zs[i].x == 0 ? 1 : 2) * (delta - Scalar::frac(1, ex));
    }
  }
  return m;
}

SpectrumReport spectrum_report(const GramSpace& m) {
  SpectrumReport r;
  const ScalarMat sq = m.matrix() * m.matrix();
  r.factorization = exact::factor_over(exact::char_poly(sq), {Scalar(1), Scalar(2), Scalar(4)});
  r.min_poly_124 = exact::min_poly_divides(sq, {Scalar(1), Scalar(2), Scalar(4)});
  r.min_poly_12 = exact::min_poly_divides(sq, {Scalar(1), Scalar(2)});
  r.det = exact::det(m.matrix());
  return r;
}

namespace {

void record(RuleCheck& rc, bool ok, const std::string& what) {
  ++rc.checked;
  if (ok) return;
  ++rc.mismatches;
  if (rc.examples.size() < 5) rc.examples.push_back(what);
}

}  // namespace

SectorRules check_sector_rules(const Heisenberg& h) {
  SectorRules out;
  const auto& d = h.datum();
  const long two_n = 1L << h.n();
  const unsigned space = h.space_size();
  for (unsigned xp = 0; xp < space; ++xp) {
    const bool required = xp == 0 || h.q(xp) == 1;
    for (unsigned ep = 0; ep < 2; ++ep) {
      const auto rhos = h.chi_points(xp, ep);
      // Mixed sector.
      for (unsigned x = 0; x < space; ++x) {
        for (unsigned e = 0; e < 2; ++e) {
          for (unsigned y = 0; y < space; ++y) {
            if (h.ybar(x, y) != y) continue;
            const auto p = h.point({x, y}, e);
            for (const auto& r : rhos) {
              Scalar want;
              if (x == 0) want = Scalar::frac((h.form(xp, y) ? -1 : 1) * (e ? -1 : 1), two_n);
              const Scalar got = pairing::pair_finite(d, p, r);
              record(required ? out.mixed_required : out.mixed_other, got == want,
                     p.label + (e ? "@c" : "") + " x " + r.label + ": " + got.to_string());
            }
          }
        }
      }
      // Chi sector against chi sector.
      for (unsigned x = 0; x < space; ++x) {
        for (unsigned e = 0; e < 2; ++e) {
          const auto lhs = h.chi_points(x, e);
          for (std::size_t a = 0; a < lhs.size(); ++a) {
            for (std::size_t b = 0; b < rhos.size(); ++b) {
              long want = 0;
              if (x == xp) {
                const bool same_rho = lhs[a].sigma.label() == rhos[b].sigma.label();
                want = (e == ep) == same_rho ? 1 : -1;
              }
              const Scalar got = pairing::pair_finite(d, lhs[a], rhos[b]);
              const bool req = required && (x == 0 || h.q(x) == 1);
              record(req ? out.chi_required : out.chi_other, got == Scalar(want),
                     lhs[a].label + " x " + rhos[b].label + ": " + got.to_string());
            }
          }
        }
      }
    }
  }
  return out;
}

}  // namespace almost_fourier::heis
