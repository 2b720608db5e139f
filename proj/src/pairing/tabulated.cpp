#include "almost_fourier/pairing/tabulated.hpp"

#include <algorithm>
#include <set>

#include "almost_fourier/error.hpp"
#include "almost_fourier/groups/io.hpp"

namespace almost_fourier::pairing {

const TabPoint& TabulatedDatum::point(const std::string& label) const { return points[point_index(label)]; }

std::size_t TabulatedDatum::point_index(const std::string& label) const {
  for (std::size_t k = 0; k < points.size(); ++k) {
    if (points[k].label == label) return k;
  }
  throw Error(ErrorKind::UnknownLabel, "datum " + name + " has no point '" + label + "'");
}

const Component& TabulatedDatum::component(const std::string& label) const {
  for (const auto& c : components) {
    if (c.label == label) return c;
  }
  throw Error(ErrorKind::UnknownLabel, "datum " + name + " has no component '" + label + "'");
}

namespace {

const TabIrrep& find_irrep(const TabPoint& p, const std::string& label) {
  for (const auto& ir : p.irreps) {
    if (ir.label == label) return ir;
  }
  throw Error(ErrorKind::UnknownLabel, "point '" + p.label + "' has no irrep '" + label + "'");
}

const std::vector<ZRecord>& cell(const TabulatedDatum& d, const std::string& x, const std::string& y,
                                 const std::string& h) {
  auto it = d.cells.find({x, y, h});
  if (it == d.cells.end()) throw Error(ErrorKind::MissingCell, "no cell " + x + "|" + y + "|" + h);
  return it->second;
}

void invalid(const TabulatedDatum& d, const std::string& what) {
  throw Error(ErrorKind::InvalidDatum, d.name + ": " + what);
}

}  // namespace

void validate(const TabulatedDatum& d) {
  if (d.components.empty()) invalid(d, "no components");
  for (const auto& c : d.components) {
    if (d.component(c.inverse).inverse != c.label) invalid(d, "component inverse of " + c.label);
  }
  if (d.lambda.empty()) invalid(d, "Lambda has no elements");
  if (d.prefactor == 0) invalid(d, "zero prefactor");
  std::set<std::string> sector_labels;
  for (const auto& [label, values] : d.sectors) {
    sector_labels.insert(label);
    for (const auto& z : d.lambda) {
      if (!values.count(z)) invalid(d, "sector " + label + " lacks a value at " + z);
    }
  }
  for (const auto& p : d.points) {
    std::set<groups::Elem> image;
    for (const auto& z : d.lambda) {
      auto it = p.lambda_image.find(z);
      if (it == p.lambda_image.end() || !p.d.contains(it->second)) invalid(d, "image of " + z + " in D_" + p.label);
      image.insert(it->second);
    }
    if (p.zbar * image.size() != p.d.order()) {
      invalid(d, "|Zbar(" + p.label + ")| = " + std::to_string(p.zbar) + " but |D|/|image of Lambda| = " +
                     std::to_string(p.d.order()) + "/" + std::to_string(image.size()));
    }
    std::vector<groups::ClassFunction> chars;
    for (const auto& ir : p.irreps) {
      if (!ir.character.group().same_as(p.d)) invalid(d, "irrep " + ir.label + " is not on D_" + p.label);
      if (!sector_labels.count(ir.sector)) invalid(d, "unknown sector " + ir.sector);
      const auto& chi = std::find_if(d.sectors.begin(), d.sectors.end(),
                                     [&](const auto& s) { return s.first == ir.sector; })->second;
      for (const auto& z : d.lambda) {
        if (!(ir.character(p.lambda_image.at(z)) == chi.at(z) * ir.character.degree())) {
          invalid(d, "Lambda does not act through " + ir.sector + " on (" + p.label + "," + ir.label + ")");
        }
      }
      chars.push_back(ir.character);
    }
    auto check = groups::validate_characters(p.d, chars);
    if (!check.ok) invalid(d, "character table of D_" + p.label + ": " + check.diagnostics.front());
  }
  for (const auto& px : d.points) {
    for (const auto& py : d.points) {
      for (const auto& h : d.components) {
        const auto& recs = cell(d, px.label, py.label, h.label);
        for (const auto& r : recs) {
          if (!py.d.contains(r.dy) || !px.d.contains(r.dx)) {
            invalid(d, "record out of range in " + px.label + "|" + py.label + "|" + h.label);
          }
        }
        const auto& mirror = cell(d, py.label, px.label, h.inverse);
        std::multiset<std::tuple<groups::Elem, groups::Elem, bool>> a, b;
        for (const auto& r : recs) a.insert({r.dx, r.dy, r.adapted});
        for (const auto& r : mirror) b.insert({r.dy, r.dx, r.adapted});
        if (a != b) invalid(d, "cell symmetry fails for " + px.label + "|" + py.label + "|" + h.label);
      }
    }
  }
  if (d.cells.size() != d.points.size() * d.points.size() * d.components.size()) invalid(d, "extra cells");
}

Scalar kappa(const TabulatedDatum& d, const std::string& x, const std::string& y, const std::string& h) {
  const auto& recs = cell(d, x, y, h);
  const long adapted = std::count_if(recs.begin(), recs.end(), [](const ZRecord& r) { return r.adapted; });
  return adapted == 0 ? Scalar() : Scalar::frac(1, adapted);
}

Scalar pair_tabulated(const TabulatedDatum& d, const TabSigma& p, const TabSigma& q) {
  const TabPoint& px = d.point(p.point);
  const TabPoint& py = d.point(q.point);
  const auto& sigma = find_irrep(px, p.irrep).character;
  const auto& tau = find_irrep(py, q.irrep).character;
  Scalar acc;
  for (const auto& h : d.components) {
    const Scalar k = kappa(d, p.point, q.point, h.label);
    if (k.is_zero()) continue;
    Scalar inner;
    for (const auto& r : cell(d, p.point, q.point, h.label)) inner += tau(r.dy).conj() * sigma(r.dx);
    acc += k * inner;
  }
  return acc / Scalar(static_cast<long>(d.prefactor * px.zbar * py.zbar));
}

Scalar pair_translated(const TabulatedDatum& d, const std::string& l, const TabSigma& p, const std::string& l2,
                       const TabSigma& q) {
  auto sector_value = [&](const TabSigma& s, const std::string& z) -> Scalar {
    const std::string& sec = find_irrep(d.point(s.point), s.irrep).sector;
    for (const auto& [label, values] : d.sectors) {
      if (label != sec) continue;
      auto it = values.find(z);
      if (it == values.end()) throw Error(ErrorKind::UnknownLabel, "no Lambda element '" + z + "'");
      return it->second;
    }
    throw Error(ErrorKind::UnknownLabel, "no sector '" + sec + "'");
  };
  return sector_value(p, l2) * sector_value(q, l).conj() * pair_tabulated(d, p, q);
}

std::vector<TabSigma> sector_points(const TabulatedDatum& d, const std::string& sector) {
  std::vector<TabSigma> out;
  for (const auto& p : d.points) {
    for (const auto& ir : p.irreps) {
      if (ir.sector == sector) out.push_back({p.label, ir.label});
    }
  }
  return out;
}

std::string sigma_label(const TabSigma& s) { return "(" + s.point + "," + s.irrep + ")"; }

GramSpace pairing_matrix(const TabulatedDatum& d, const std::string& chi, const std::string& chi2) {
  const auto rows = sector_points(d, chi);
  const auto cols = sector_points(d, chi2);
  if (rows.empty() || cols.empty()) throw Error(ErrorKind::InvalidDatum, "empty sector in " + d.name);
  ScalarMat m(rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) m(i, j) = pair_tabulated(d, rows[i], cols[j]);
  std::vector<std::string> rl, cl;
  for (const auto& r : rows) rl.push_back(sigma_label(r));
  for (const auto& c : cols) cl.push_back(sigma_label(c));
  if (chi == chi2) return GramSpace(std::move(rl), std::move(m));
  return GramSpace::block(std::move(rl), std::move(cl), std::move(m));
}

nlohmann::json datum_to_json(const TabulatedDatum& d) {
  nlohmann::json j;
  j["name"] = d.name;
  j["prefactor"] = d.prefactor;
  j["lambda"] = d.lambda;
  for (const auto& c : d.components) j["components"].push_back({{"label", c.label}, {"inverse", c.inverse}});
  for (const auto& [label, values] : d.sectors) {
    nlohmann::json v;
    for (const auto& [z, s] : values) v[z] = s.to_string();
    j["sectors"].push_back({{"label", label}, {"values", v}});
  }
  for (const auto& p : d.points) {
    nlohmann::json pj;
    pj["label"] = p.label;
    pj["group"] = groups::group_to_json(p.d);
    pj["group"].erase("characters");
    for (const auto& [z, e] : p.lambda_image) pj["lambda_image"][z] = p.d.position(e);
    pj["zbar"] = p.zbar;
    for (const auto& ir : p.irreps) {
      nlohmann::json vals = nlohmann::json::array();
      for (const auto& v : ir.character.values()) vals.push_back(v.to_string());
      pj["irreps"].push_back({{"label", ir.label}, {"sector", ir.sector}, {"values", vals}});
    }
    j["points"].push_back(pj);
  }
  j["cells"] = nlohmann::json::object();
  // Group elements are written as positions in the serialized D groups.
  for (const auto& [key, recs] : d.cells) {
    const auto& [x, y, h] = key;
    const auto& dx = d.point(x).d;
    const auto& dy = d.point(y).d;
    nlohmann::json rj = nlohmann::json::array();
    for (const auto& r : recs) rj.push_back({dy.position(r.dy), dx.position(r.dx), r.adapted});
    j["cells"][x + "|" + y + "|" + h] = rj;
  }
  return j;
}

TabulatedDatum datum_from_json(const nlohmann::json& j) {
  TabulatedDatum d;
  try {
    d.name = j.at("name").get<std::string>();
    d.prefactor = j.at("prefactor").get<std::size_t>();
    d.lambda = j.at("lambda").get<std::vector<std::string>>();
    for (const auto& c : j.at("components")) {
      d.components.push_back({c.at("label").get<std::string>(), c.at("inverse").get<std::string>()});
    }
    for (const auto& s : j.at("sectors")) {
      std::map<std::string, Scalar> values;
      for (const auto& [z, v] : s.at("values").items()) values[z] = Scalar::parse(v.get<std::string>());
      d.sectors.emplace_back(s.at("label").get<std::string>(), std::move(values));
    }
    for (const auto& pj : j.at("points")) {
      TabPoint p{pj.at("label").get<std::string>(), groups::group_from_json(pj.at("group")), {}, 1, {}};
      for (const auto& [z, e] : pj.at("lambda_image").items()) p.lambda_image[z] = e.get<groups::Elem>();
      p.zbar = pj.at("zbar").get<std::size_t>();
      for (const auto& ir : pj.at("irreps")) {
        std::vector<Scalar> vals;
        for (const auto& v : ir.at("values")) vals.push_back(Scalar::parse(v.get<std::string>()));
        const std::string label = ir.at("label").get<std::string>();
        p.irreps.push_back({label, ir.at("sector").get<std::string>(), groups::ClassFunction(p.d, std::move(vals), label)});
      }
      d.points.push_back(std::move(p));
    }
    for (const auto& [key, rj] : j.at("cells").items()) {
      const auto a = key.find('|');
      const auto b = key.find('|', a == std::string::npos ? a : a + 1);
      if (a == std::string::npos || b == std::string::npos) throw Error(ErrorKind::Parse, "bad cell key '" + key + "'");
      std::vector<ZRecord> recs;
      for (const auto& r : rj) {
        recs.push_back({r.at(0).get<groups::Elem>(), r.at(1).get<groups::Elem>(), r.at(2).get<bool>()});
      }
      d.cells[{key.substr(0, a), key.substr(a + 1, b - a - 1), key.substr(b + 1)}] = std::move(recs);
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::Parse, std::string("datum json: ") + e.what());
  }
  validate(d);
  return d;
}

}  // namespace almost_fourier::pairing
