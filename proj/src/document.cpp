#include "orelclm/document.hpp"

#include <sstream>

#include "json.hpp"

namespace orelclm {

using nlohmann::json;

DocumentError::DocumentError(const std::string& what, std::size_t position, std::string where)
    : std::runtime_error(what), position_(position), where_(std::move(where)) {}

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& msg) {
  throw DocumentError(where + ": " + msg, DocumentError::npos, where);
}

std::uint64_t reduce_integer(const PrimeField& f, const json& v, const std::string& where) {
  if (v.is_number_unsigned()) return f.reduce_unsigned(v.get<std::uint64_t>());
  if (v.is_number_integer()) return f.reduce(v.get<std::int64_t>());
  fail(where, "expected an integer");
}

DensePoly parse_poly(const PrimeField& f, const json& v, const std::string& where) {
  if (!v.is_array()) fail(where, "expected a coefficient list");
  std::vector<std::uint64_t> c;
  c.reserve(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) c.push_back(reduce_integer(f, v[i], where + "[" + std::to_string(i) + "]"));
  return DensePoly(f, std::move(c));
}

}  // namespace

OperatorDocument parse_operators(std::string_view text) {
  json root;
  try {
    root = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw DocumentError("malformed document at byte " + std::to_string(e.byte) + ": " + e.what(), e.byte, "");
  }
  if (!root.is_object()) fail("$", "expected an object with keys \"p\" and \"ops\"");
  for (auto it = root.begin(); it != root.end(); ++it)
    if (it.key() != "p" && it.key() != "ops") fail("$." + it.key(), "unknown key");

  std::uint64_t p = PrimeField::kDefaultPrime;
  if (root.contains("p")) {
    const auto& jp = root["p"];
    if (!jp.is_number_unsigned()) fail("$.p", "expected a positive integer");
    p = jp.get<std::uint64_t>();
  }
  OperatorDocument doc;
  try {
    doc.field = PrimeField(p);
  } catch (const ArithmeticError& e) {
    fail("$.p", e.what());
  }

  if (!root.contains("ops")) fail("$", "missing \"ops\"");
  const auto& jops = root["ops"];
  if (!jops.is_array()) fail("$.ops", "expected a list of operators");
  for (std::size_t i = 0; i < jops.size(); ++i) {
    const std::string where = "$.ops[" + std::to_string(i) + "]";
    const auto& jl = jops[i];
    if (!jl.is_array()) fail(where, "expected a list of coefficients");
    std::vector<DensePoly> coeffs;
    for (std::size_t j = 0; j < jl.size(); ++j)
      coeffs.push_back(parse_poly(doc.field, jl[j], where + "[" + std::to_string(j) + "]"));
    OreOperator L(doc.field, std::move(coeffs));
    if (L.is_zero()) fail(where, "zero operator");
    doc.ops.push_back(std::move(L));
  }
  return doc;
}

std::string format_operator_list(const std::vector<OreOperator>& ops) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < ops.size(); ++i) {
    if (i) os << ',';
    os << '[';
    const auto& c = ops[i].coeffs();
    for (std::size_t j = 0; j < c.size(); ++j) {
      if (j) os << ',';
      os << (c[j].is_zero() ? std::string("[0]") : to_list_string(c[j]));
    }
    os << ']';
  }
  os << ']';
  return os.str();
}

std::string format_operators(const OperatorDocument& doc) {
  return "{\"p\":" + std::to_string(doc.field.prime()) + ",\"ops\":" + format_operator_list(doc.ops) + "}";
}

}  // namespace orelclm
