#include "zhs/ohtsuki/nu_table.hpp"

#include <fstream>
#include <sstream>
#include <string>

namespace zhs::ohtsuki {

namespace {

std::string key_text(int f, int i, int m) {
  return "(f=" + std::to_string(f) + ", i=" + std::to_string(i) + ", m=" + std::to_string(m) + ")";
}

void check_key(int f, int i, int m) {
  if (f != 1 && f != -1) throw std::invalid_argument("nu framing must be +1 or -1");
  if (i < 0 || m < 0) throw std::invalid_argument("nu indices must be non-negative");
}

}  // namespace

MissingNuEntry::MissingNuEntry(int f_, int i_, int m_)
    : std::runtime_error("missing nu constant " + key_text(f_, i_, m_) + "; supply it with a nu table"),
      f(f_), i(i_), m(m_) {}

Rational NuTable::lookup(int f, int i, int m) const {
  check_key(f, i, m);
  if (i == 0) return m == 0 ? Rational(-f) : Rational(0);
  if (i == 1 && m == 0) return 2;
  auto it = user_.find({f, i, m});
  if (it == user_.end()) throw MissingNuEntry(f, i, m);
  return it->second;
}

std::optional<NuProvenance> NuTable::provenance(int f, int i, int m) const {
  check_key(f, i, m);
  if (is_builtin(i, m)) return NuProvenance::BuiltIn;
  if (user_.count({f, i, m})) return NuProvenance::UserSupplied;
  return std::nullopt;
}

void NuTable::set(int f, int i, int m, const Rational& value) {
  if (f != 1 && f != -1) throw NuTableError("nu entry " + key_text(f, i, m) + ": f must be +1 or -1");
  if (i < 0 || m < 0) throw NuTableError("nu entry " + key_text(f, i, m) + ": negative index");
  if (is_builtin(i, m)) throw NuTableError("nu entry " + key_text(f, i, m) + " is built in and cannot be overridden");
  if (!user_.emplace(std::make_tuple(f, i, m), value).second) {
    throw NuTableError("nu entry " + key_text(f, i, m) + " given twice");
  }
}

NuTable NuTable::from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw NuTableError("nu table must be a JSON array");
  NuTable t;
  for (const auto& e : j) {
    const auto& v = e.at("value");
    const Rational value = v.is_string() ? algebra::parse_rational(v.get<std::string>()) : Rational(v.get<long>());
    t.set(e.at("f").get<int>(), e.at("i").get<int>(), e.at("m").get<int>(), value);
  }
  return t;
}

NuTable NuTable::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw NuTableError("cannot open nu table " + path.string());
  return from_json(nlohmann::json::parse(in));
}

nlohmann::json NuTable::to_json() const {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& [key, value] : user_) {
    const auto& [f, i, m] = key;
    out.push_back({{"f", f}, {"i", i}, {"m", m}, {"value", algebra::to_string(value)}});
  }
  return out;
}

std::string NuTable::fingerprint() const { return to_json().dump(); }

}  // namespace zhs::ohtsuki
