#include "zhs/links/catalog.hpp"

#include <fstream>
#include <stdexcept>

#include "zhs/links/fixtures.hpp"

namespace zhs::links {

using nlohmann::json;

json to_json(const FramedLinkDiagram& link) {
  json pd = json::array();
  for (const auto& c : link.crossings) pd.push_back({c.arcs[0], c.arcs[1], c.arcs[2], c.arcs[3], c.sign});
  return json{{"pd", pd}, {"components", link.components}, {"framings", link.framings}};
}

FramedLinkDiagram link_from_json(const json& j) {
  FramedLinkDiagram link;
  for (const auto& row : j.at("pd")) {
    if (row.size() != 5) throw InvalidDiagram("pd rows must have 5 entries");
    link.crossings.push_back(Crossing{{row[0].get<int>(), row[1].get<int>(), row[2].get<int>(), row[3].get<int>()},
                                      row[4].get<int>()});
  }
  link.components = j.at("components").get<std::vector<std::vector<int>>>();
  if (j.contains("framings")) {
    link.framings = j.at("framings").get<std::vector<int>>();
  } else {
    link.framings.assign(link.components.size(), 0);
  }
  require_valid(link);
  return link;
}

Catalog Catalog::builtin() {
  using namespace fixtures;
  Catalog c;
  c.add("empty", FramedLinkDiagram{});
  c.add("unknot", unknot());
  c.add("unknot+1", unknot(1));
  c.add("unknot-1", unknot(-1));
  c.add("unlink2", unlink(2));
  c.add("unlink3", unlink(3));
  c.add("hopf", hopf());
  c.add("trefoil", trefoil_right());
  c.add("trefoil+1", trefoil_right(1));
  c.add("trefoil-1", trefoil_right(-1));
  c.add("trefoil-left", trefoil_left());
  c.add("trefoil-left+1", trefoil_left(1));
  c.add("trefoil-left-1", trefoil_left(-1));
  c.add("trefoil-4crossing", closed_braid(3, {1, 1, 1, 2}));
  c.add("figure-eight", figure_eight());
  c.add("figure-eight+1", figure_eight(1));
  c.add("figure-eight-1", figure_eight(-1));
  c.add("kinked-unknot+", closed_braid(2, {1}));
  c.add("kinked-unknot-", closed_braid(2, {-1}));
  c.add("borromean", borromean());
  c.add("borromean+1", with_framings(borromean(), {1, 1, 1}));
  c.add("borromean-mirror", borromean_mirror());
  c.add("borromean-braid", closed_braid(3, {1, -2, 1, -2, 1, -2}));
  c.add("borromean-plus-unknot", with_framings(disjoint_union(borromean(), unknot()), {1, 1, 1, 1}));
  c.add("borromean-plus-figure-eight",
        with_framings(disjoint_union(borromean(), figure_eight()), {1, 1, 1, 1}));
  c.add("borromean-cable-2-1-1", with_framings(cable(borromean(), {2, 1, 1}), {1, 1, 1, 1}));
  return c;
}

Catalog Catalog::from_json(const json& j) {
  const json& entries = j.is_object() ? j.at("links") : j;
  if (!entries.is_array()) throw std::invalid_argument("catalog must be an array of link entries");
  Catalog c;
  for (const auto& e : entries) c.add(e.at("name").get<std::string>(), link_from_json(e));
  return c;
}

Catalog Catalog::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open catalog " + path.string());
  return from_json(json::parse(in));
}

json Catalog::to_json() const {
  json entries = json::array();
  for (const auto& name : order_) {
    json e = links::to_json(links_.at(name));
    e["name"] = name;
    entries.push_back(std::move(e));
  }
  return json{{"links", entries}};
}

void Catalog::save(const std::filesystem::path& path) const {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write catalog " + path.string());
  out << to_json().dump(1) << '\n';
}

void Catalog::add(const std::string& name, const FramedLinkDiagram& link) {
  require_valid(link);
  if (!links_.count(name)) order_.push_back(name);
  links_[name] = link;
}

const FramedLinkDiagram& Catalog::at(const std::string& name) const {
  auto it = links_.find(name);
  if (it == links_.end()) throw std::out_of_range("no catalog entry named '" + name + "'");
  return it->second;
}

std::vector<std::string> Catalog::names() const { return order_; }

void Catalog::merge(const Catalog& other) {
  for (const auto& name : other.order_) add(name, other.links_.at(name));
}

FramedLinkDiagram resolve_link(const std::string& spec, const Catalog& catalog) {
  if (catalog.contains(spec)) return catalog.at(spec);
  if (!std::filesystem::exists(spec)) throw std::out_of_range("'" + spec + "' is neither a catalog entry nor a file");
  std::ifstream in(spec);
  const json j = json::parse(in);
  if (j.is_object() && j.contains("pd")) return link_from_json(j);
  const Catalog c = Catalog::from_json(j);
  if (c.size() != 1) throw std::invalid_argument("link file must hold exactly one entry");
  return c.at(c.names().front());
}

}  // namespace zhs::links
