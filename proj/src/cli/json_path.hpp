#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <json.hpp>

#include "mtreg/exactalg/errors.hpp"
#include "mtreg/exactalg/numeric.hpp"

namespace mtreg::cli {

using json = nlohmann::json;

/// A JSON value together with its path from the document root; every accessor reports the path
/// on failure as a SchemaError.
class JNode {
 public:
  JNode(const json& j, std::string path) : j_(&j), path_(std::move(path)) {}

  const std::string& path() const { return path_; }
  const json& raw() const { return *j_; }

  [[noreturn]] void fail(const std::string& msg) const;

  bool has(const std::string& key) const;
  JNode at(const std::string& key) const;
  std::optional<JNode> find(const std::string& key) const;
  JNode at(std::size_t i) const;
  std::size_t size() const;  // arrays and objects

  bool is_string() const { return j_->is_string(); }
  bool is_array() const { return j_->is_array(); }
  bool is_object() const { return j_->is_object(); }

  std::int64_t as_int() const;
  double as_double() const;
  Rational as_rational() const;  // integer or decimal-free string "a/b"
  std::string as_string() const;
  bool as_bool() const;

  template <class F>
  void for_each_item(F&& f) const {
    for (std::size_t i = 0; i < size(); ++i) f(i, at(i));
  }
  template <class F>
  void for_each_member(F&& f) const {
    if (!is_object()) fail("expected object");
    for (auto it = j_->begin(); it != j_->end(); ++it) f(it.key(), JNode(it.value(), path_ + "." + it.key()));
  }

 private:
  const json* j_;
  std::string path_;
};

/// Re-raises library errors with the JSON path prepended to the detail.
template <class F>
auto with_path(const JNode& n, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const Error& e) {
    throw Error(e.code(), n.path() + ": " + e.detail());
  }
}

}  // namespace mtreg::cli
