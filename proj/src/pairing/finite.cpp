#include "almost_fourier/pairing/finite.hpp"

#include "almost_fourier/error.hpp"

namespace almost_fourier::pairing {

FinitePairingDatum::FinitePairingDatum(FiniteGroup h, groups::CentralSubgroup lambda)
    : h_(std::move(h)), lambda_(std::move(lambda)), lambda_chars_(groups::abelian_characters(lambda_.group())) {
  if (!lambda_.parent().same_as(h_)) throw Error(ErrorKind::NotCentral, "Lambda belongs to another group");
}

FinitePairingDatum::FinitePairingDatum(FiniteGroup h)
    : FinitePairingDatum(h, groups::CentralSubgroup::trivial(h)) {}

std::size_t FinitePairingDatum::sector_of(const FinitePoint& p) const {
  const FiniteGroup& z = p.sigma.group();
  if (!h_.contains(p.x) || !z.contains(p.x) || z.order() != h_.centralizer(p.x).order()) {
    throw Error(ErrorKind::InvalidCharacter, "character of '" + p.label + "' is not on the centralizer of x");
  }
  const Scalar deg = p.sigma.degree();
  for (std::size_t c = 0; c < lambda_chars_.size(); ++c) {
    bool match = true;
    for (Elem zeta : lambda_.elements()) {
      if (!(p.sigma(zeta) == lambda_chars_[c](zeta) * deg)) {
        match = false;
        break;
      }
    }
    if (match) return c;
  }
  throw Error(ErrorKind::InvalidCharacter, "Lambda does not act by scalars on '" + p.label + "'");
}

Scalar pair_finite(const FinitePairingDatum& d, const FinitePoint& p, const FinitePoint& q) {
  d.sector_of(p);
  d.sector_of(q);
  const FiniteGroup& h = d.group();
  const long lam = static_cast<long>(d.lambda().order());
  const long zx = static_cast<long>(p.sigma.group().order()) / lam;
  const long zy = static_cast<long>(q.sigma.group().order()) / lam;
  const Elem x = p.x, y = q.x;
  Scalar acc;
  for (Elem z : h.elements()) {
    const Elem w = h.conj(z, x);
    if (h.mul(w, y) != h.mul(y, w)) continue;
    const Scalar& s = p.sigma(h.conj(h.inv(z), y));
    if (s.is_zero()) continue;
    const Scalar& t = q.sigma(w);
    if (t.is_zero()) continue;
    acc += t.conj() * s;
  }
  return acc / Scalar(lam * zx * zy);
}

FinitePoint conjugate_point(const FinitePairingDatum& d, Elem f, const FinitePoint& p) {
  const FiniteGroup& h = d.group();
  const Elem fx = h.conj(f, p.x);
  FiniteGroup z = h.centralizer(fx);
  std::vector<Scalar> values;
  values.reserve(z.order());
  const Elem finv = h.inv(f);
  for (Elem w : z.elements()) values.push_back(p.sigma(h.conj(finv, w)));
  return {p.label + "^" + h.name(f), fx, ClassFunction(std::move(z), std::move(values), p.sigma.label())};
}

FinitePoint translate_point(const FinitePairingDatum& d, Elem zeta, const FinitePoint& p) {
  if (!d.lambda().contains(zeta)) throw Error(ErrorKind::ElementNotInGroup, "translation by an element outside Lambda");
  return {d.group().name(zeta) + "*" + p.label, d.group().mul(zeta, p.x), p.sigma};
}

std::vector<FinitePoint> finite_points(const FinitePairingDatum& d, std::optional<std::size_t> sector) {
  std::vector<FinitePoint> out;
  const FiniteGroup& h = d.group();
  for (const auto& cls : h.conjugacy_classes()) {
    const Elem x = cls.front();
    for (const auto& sigma : groups::irreducible_characters(h.centralizer(x))) {
      FinitePoint p{"(" + h.name(x) + "," + sigma.label() + ")", x, sigma};
      if (!sector || d.sector_of(p) == *sector) out.push_back(std::move(p));
    }
  }
  return out;
}

GramSpace finite_matrix(const FinitePairingDatum& d, const std::vector<FinitePoint>& rows,
                        const std::vector<FinitePoint>& cols) {
  ScalarMat m(rows.size(), cols.size());
  std::vector<std::string> rl, cl;
  for (const auto& p : rows) rl.push_back(p.label);
  for (const auto& q : cols) cl.push_back(q.label);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) m(i, j) = pair_finite(d, rows[i], cols[j]);
  return GramSpace::block(std::move(rl), std::move(cl), std::move(m));
}

GramSpace finite_matrix(const FinitePairingDatum& d, const std::vector<FinitePoint>& points) {
  const std::size_t n = points.size();
  ScalarMat m(n, n);
  std::vector<std::string> labels;
  for (const auto& p : points) labels.push_back(p.label);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = pair_finite(d, points[i], points[j]);
  return GramSpace(std::move(labels), std::move(m));
}

GramSpace classical_fourier(const FiniteGroup& g) {
  FinitePairingDatum d(g);
  return finite_matrix(d, finite_points(d));
}

}  // namespace almost_fourier::pairing
