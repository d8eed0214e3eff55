#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "orelclm/ore.hpp"

namespace orelclm {

/// A prime and a list of nonzero operators.
///
/// Text form is JSON: {"p": 7, "ops": [[[0],[1]], [[6],[1]]]}.  Each operator
/// lists its coefficients by ascending power of D, each coefficient by
/// ascending power of x.  Integers may be negative or exceed p; they are
/// reduced on load.  "p" defaults to 2147483647.
struct OperatorDocument {
  PrimeField field;
  std::vector<OreOperator> ops;

  friend bool operator==(const OperatorDocument& a, const OperatorDocument& b) {
    return a.field == b.field && a.ops == b.ops;
  }
};

class DocumentError : public std::runtime_error {
 public:
  /// position: byte offset for syntax errors, otherwise npos; where: JSON path.
  DocumentError(const std::string& what, std::size_t position, std::string where);
  std::size_t position() const noexcept { return position_; }
  const std::string& where() const noexcept { return where_; }

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

 private:
  std::size_t position_;
  std::string where_;
};

OperatorDocument parse_operators(std::string_view text);
/// Canonical one-line form; residues in [0, p), zero coefficients as [0].
std::string format_operators(const OperatorDocument& doc);
std::string format_operator_list(const std::vector<OreOperator>& ops);

}  // namespace orelclm
