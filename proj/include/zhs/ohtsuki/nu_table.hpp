#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <stdexcept>
#include <tuple>

#include <json.hpp>

#include "zhs/algebra/rational.hpp"

namespace zhs::ohtsuki {

using algebra::Rational;

/// Raised when a computation needs a constant nu_{f,i,m} that is neither
/// built in nor supplied by the caller.
class MissingNuEntry : public std::runtime_error {
 public:
  MissingNuEntry(int f, int i, int m);
  int f, i, m;
};

class NuTableError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class NuProvenance { BuiltIn, UserSupplied };

/// The surgery constants nu_{f,i,m} for f = +-1 and i, m >= 0. Two families
/// are built in and cannot be overridden: nu_{f,0,m} = -f [m == 0] and
/// nu_{f,1,0} = 2. Everything else must be supplied.
class NuTable {
 public:
  static bool is_builtin(int i, int m) { return i == 0 || (i == 1 && m == 0); }

  Rational lookup(int f, int i, int m) const;
  std::optional<NuProvenance> provenance(int f, int i, int m) const;

  /// Throws NuTableError for a built-in key, a repeated key or a bad f.
  void set(int f, int i, int m, const Rational& value);

  /// JSON list of {f, i, m, value: "p/q"}.
  static NuTable from_json(const nlohmann::json& j);
  static NuTable load(const std::filesystem::path& path);
  nlohmann::json to_json() const;

  /// Stable text form of the user entries, for memo keys.
  std::string fingerprint() const;
  std::size_t user_entries() const { return user_.size(); }

 private:
  std::map<std::tuple<int, int, int>, Rational> user_;
};

}  // namespace zhs::ohtsuki
