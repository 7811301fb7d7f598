#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "zhs/links/diagram.hpp"

namespace zhs::links {

nlohmann::json to_json(const FramedLinkDiagram& link);
/// Reads {pd: [[a,b,c,d,sign],...], components: [[arc,...],...], framings: [...]}
/// and validates the result. Missing framings default to 0.
FramedLinkDiagram link_from_json(const nlohmann::json& j);

/// Named link diagrams. Files hold either a JSON array of entries or an object
/// with a "links" array; each entry is the link object plus a "name".
class Catalog {
 public:
  static Catalog builtin();
  static Catalog load(const std::filesystem::path& path);
  static Catalog from_json(const nlohmann::json& j);

  void save(const std::filesystem::path& path) const;
  nlohmann::json to_json() const;

  void add(const std::string& name, const FramedLinkDiagram& link);
  bool contains(const std::string& name) const { return links_.count(name) != 0; }
  const FramedLinkDiagram& at(const std::string& name) const;
  std::vector<std::string> names() const;
  std::size_t size() const { return order_.size(); }

  /// Entries of `other` replace same-named entries here.
  void merge(const Catalog& other);

 private:
  std::map<std::string, FramedLinkDiagram> links_;
  std::vector<std::string> order_;
};

/// A catalog name, or a path to a JSON file holding one link object or a
/// catalog with exactly one entry.
FramedLinkDiagram resolve_link(const std::string& spec, const Catalog& catalog);

}  // namespace zhs::links
