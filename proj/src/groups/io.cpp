#include "almost_fourier/groups/io.hpp"

#include "almost_fourier/error.hpp"

namespace almost_fourier::groups {

nlohmann::json group_to_json(const FiniteGroup& g) {
  const auto& el = g.elements();
  nlohmann::json table = nlohmann::json::array();
  nlohmann::json names = nlohmann::json::array();
  for (Elem a : el) {
    names.push_back(g.name(a));
    for (Elem b : el) table.push_back(g.position(g.mul(a, b)));
  }
  nlohmann::json chars = nlohmann::json::array();
  if (g.is_whole()) {
    for (const auto& c : g.table()->characters) {
      nlohmann::json row = nlohmann::json::array();
      for (const auto& v : c) row.push_back(v.to_string());
      chars.push_back(row);
    }
  }
  return {{"order", g.order()}, {"table", table}, {"names", names}, {"characters", chars}};
}

FiniteGroup group_from_json(const nlohmann::json& j) {
  try {
    const std::size_t n = j.at("order").get<std::size_t>();
    if (n > kMaxOrder) throw Error(ErrorKind::SizeLimit, "group order " + std::to_string(n));
    std::vector<Elem> mul = j.at("table").get<std::vector<Elem>>();
    std::vector<std::string> names;
    if (j.contains("names")) names = j.at("names").get<std::vector<std::string>>();
    std::vector<std::vector<Scalar>> chars;
    if (j.contains("characters")) {
      for (const auto& row : j.at("characters")) {
        std::vector<Scalar> c;
        for (const auto& v : row) c.push_back(Scalar::parse(v.get<std::string>()));
        chars.push_back(std::move(c));
      }
    }
    return FiniteGroup::from_table(n, std::move(mul), std::move(names), std::move(chars));
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::Parse, std::string("group json: ") + e.what());
  }
}

}  // namespace almost_fourier::groups
