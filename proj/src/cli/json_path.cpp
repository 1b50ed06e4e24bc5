#include "json_path.hpp"

#include "mtreg/exactalg/errors.hpp"

namespace mtreg::cli {

void JNode::fail(const std::string& msg) const { raise(ErrorCode::SchemaError, path_ + ": " + msg); }

bool JNode::has(const std::string& key) const { return j_->is_object() && j_->contains(key); }

JNode JNode::at(const std::string& key) const {
  if (!j_->is_object()) fail("expected object");
  auto it = j_->find(key);
  if (it == j_->end()) fail("missing key \"" + key + "\"");
  return JNode(*it, path_ + "." + key);
}

std::optional<JNode> JNode::find(const std::string& key) const {
  if (!has(key)) return std::nullopt;
  return at(key);
}

JNode JNode::at(std::size_t i) const {
  if (!j_->is_array()) fail("expected array");
  if (i >= j_->size()) fail("index " + std::to_string(i) + " out of range");
  return JNode((*j_)[i], path_ + "[" + std::to_string(i) + "]");
}

std::size_t JNode::size() const {
  if (!j_->is_array() && !j_->is_object()) fail("expected array");
  return j_->size();
}

std::int64_t JNode::as_int() const {
  if (!j_->is_number_integer()) fail("expected integer");
  return j_->get<std::int64_t>();
}

double JNode::as_double() const {
  if (!j_->is_number()) fail("expected number");
  return j_->get<double>();
}

Rational JNode::as_rational() const {
  if (j_->is_number_integer()) return Rational(Integer(std::to_string(j_->get<std::int64_t>())));
  if (!j_->is_string()) fail("expected rational (integer or string \"a/b\")");
  try {
    return parse_rational(j_->get<std::string>());
  } catch (const Error&) {
    fail("malformed rational \"" + j_->get<std::string>() + "\"");
  }
}

std::string JNode::as_string() const {
  if (!j_->is_string()) fail("expected string");
  return j_->get<std::string>();
}

bool JNode::as_bool() const {
  if (!j_->is_boolean()) fail("expected boolean");
  return j_->get<bool>();
}

}  // namespace mtreg::cli
