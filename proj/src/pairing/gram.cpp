#include "almost_fourier/pairing/gram.hpp"

#include <algorithm>
#include <map>

#include "almost_fourier/error.hpp"

namespace almost_fourier::pairing {

GramSpace::GramSpace(std::vector<std::string> labels, ScalarMat gram)
    : rows_(labels), cols_(std::move(labels)), m_(std::move(gram)) {
  if (m_.rows() != rows_.size() || m_.cols() != rows_.size()) {
    throw Error(ErrorKind::DimensionMismatch, "gram matrix size does not match labels");
  }
  if (!m_.is_hermitian()) throw Error(ErrorKind::InvalidDatum, "pairing matrix is not Hermitian");
}

GramSpace GramSpace::block(std::vector<std::string> rows, std::vector<std::string> cols, ScalarMat values) {
  if (values.rows() != rows.size() || values.cols() != cols.size()) {
    throw Error(ErrorKind::DimensionMismatch, "block size does not match labels");
  }
  GramSpace gs;
  gs.rows_ = std::move(rows);
  gs.cols_ = std::move(cols);
  gs.m_ = std::move(values);
  return gs;
}

std::size_t GramSpace::index(const std::string& label) const {
  auto it = std::find(rows_.begin(), rows_.end(), label);
  if (it == rows_.end()) throw Error(ErrorKind::UnknownLabel, "no point '" + label + "'");
  return static_cast<std::size_t>(it - rows_.begin());
}

std::vector<Vec> radical(const GramSpace& gs) { return exact::kernel_basis(gs.matrix().transpose()); }

std::size_t quotient_dim(const GramSpace& gs) { return exact::rank(gs.matrix()); }

std::size_t ImageSet::image_of(std::size_t point) const {
  for (std::size_t k = 0; k < classes.size(); ++k) {
    if (std::find(classes[k].begin(), classes[k].end(), point) != classes[k].end()) return k;
  }
  throw Error(ErrorKind::BadIndex, "point " + std::to_string(point) + " not in image set");
}

ImageSet image_set(const GramSpace& gs) {
  ImageSet out;
  out.columns = exact::independent_columns(gs.matrix());
  out.dim = out.columns.size();
  for (std::size_t i = 0; i < gs.size(); ++i) {
    Vec c;
    c.reserve(out.columns.size());
    for (auto j : out.columns) c.push_back(gs(i, j));
    auto it = std::find(out.coords.begin(), out.coords.end(), c);
    if (it == out.coords.end()) {
      out.coords.push_back(std::move(c));
      out.classes.push_back({i});
      out.labels.push_back(gs.labels()[i]);
    } else {
      out.classes[static_cast<std::size_t>(it - out.coords.begin())].push_back(i);
    }
  }
  return out;
}

namespace {

// Solves sum_k c_k basis_k = target over the basis coordinate rows.
std::optional<Vec> coefficients_in(const std::vector<std::size_t>& members, const ImageSet& images,
                                   const Vec& target) {
  const std::size_t d = images.dim;
  ScalarMat bt(d, members.size());
  for (std::size_t k = 0; k < members.size(); ++k)
    for (std::size_t r = 0; r < d; ++r) bt(r, k) = images.coords[members[k]][r];
  return exact::solve_exact(bt, target);
}

bool nonnegative(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return sgn(s.rational()) >= 0; });
}

}  // namespace

PositiveBasis positive_basis(const ImageSet& images) {
  for (const auto& c : images.coords) {
    for (const auto& s : c) {
      if (!s.is_rational()) throw Error(ErrorKind::NonRealCone, "quotient coordinate " + s.to_string() + " is not real");
    }
  }
  const std::size_t n = images.coords.size();
  const std::size_t d = images.dim;
  if (d > n) throw Error(ErrorKind::NoPositiveBasis, "fewer images than the quotient dimension");
  std::vector<PositiveBasis> found;
  std::vector<std::size_t> pick(d);
  for (std::size_t k = 0; k < d; ++k) pick[k] = k;
  while (true) {
    ScalarMat b(d, d);
    for (std::size_t k = 0; k < d; ++k)
      for (std::size_t r = 0; r < d; ++r) b(k, r) = images.coords[pick[k]][r];
    if (exact::rank(b) == d) {
      PositiveBasis cand{pick, {}};
      bool ok = true;
      for (std::size_t a = 0; a < n && ok; ++a) {
        auto c = coefficients_in(pick, images, images.coords[a]);
        if (!c || !nonnegative(*c)) ok = false;
        else cand.coefficients.push_back(std::move(*c));
      }
      if (ok) found.push_back(std::move(cand));
    }
    // Next d-subset in lexicographic order.
    std::size_t k = d;
    while (k > 0 && pick[k - 1] == n - d + k - 1) --k;
    if (k == 0) break;
    ++pick[k - 1];
    for (std::size_t j = k; j < d; ++j) pick[j] = pick[j - 1] + 1;
  }
  if (found.empty()) throw Error(ErrorKind::NoPositiveBasis, "no subset of the images is a nonnegative basis");
  if (found.size() > 1) {
    auto fmt = [&](const PositiveBasis& p) {
      std::string s = "{";
      for (auto m : p.members) s += (s.size() > 1 ? "," : "") + images.labels[m];
      return s + "}";
    };
    throw Error(ErrorKind::NonUnique, "nonnegative bases " + fmt(found[0]) + " and " + fmt(found[1]));
  }
  return found.front();
}

StarVector star(std::size_t point, const PositiveBasis& basis, const ImageSet& images, const GramSpace& gs) {
  if (point >= gs.size()) throw Error(ErrorKind::BadIndex, "star: point index");
  StarVector out;
  out.coords.assign(images.dim, Scalar());
  for (auto m : basis.members) {
    const std::size_t rep = images.classes[m].front();
    const Scalar w = gs(rep, point);
    out.coefficients.push_back(w);
    for (std::size_t r = 0; r < images.dim; ++r) out.coords[r] += w * images.coords[m][r];
  }
  return out;
}

std::optional<Vec> express(const Vec& point_weights, const PositiveBasis& basis, const ImageSet& images,
                           const GramSpace& gs) {
  if (point_weights.size() != gs.size()) throw Error(ErrorKind::DimensionMismatch, "express: weight count");
  Vec target(images.dim);
  for (std::size_t i = 0; i < gs.size(); ++i) {
    if (point_weights[i].is_zero()) continue;
    for (std::size_t r = 0; r < images.dim; ++r) target[r] += point_weights[i] * gs(i, images.columns[r]);
  }
  return coefficients_in(basis.members, images, target);
}

ScalarMat reduced_gram(const PositiveBasis& basis, const ImageSet& images, const GramSpace& gs) {
  const std::size_t k = basis.members.size();
  ScalarMat out(k, k);
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b)
      out(a, b) = gs(images.classes[basis.members[a]].front(), images.classes[basis.members[b]].front());
  return out;
}

std::string to_csv(const GramSpace& gs) {
  auto quote = [](const std::string& s) {
    if (s.find_first_of(",\"") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) q += (c == '"') ? std::string("\"\"") : std::string(1, c);
    return q + "\"";
  };
  std::string out = "label";
  for (const auto& c : gs.col_labels()) out += "," + quote(c);
  out += "\n";
  for (std::size_t i = 0; i < gs.size(); ++i) {
    out += quote(gs.labels()[i]);
    for (std::size_t j = 0; j < gs.col_labels().size(); ++j) out += "," + gs(i, j).to_string();
    out += "\n";
  }
  return out;
}

}  // namespace almost_fourier::pairing
