#pragma once

#include <span>
#include <stdexcept>
#include <string>
#include <string_view>

#include "divisor_forge/polynomial.hpp"

namespace dforge {

class PolynomialSyntaxError : public std::runtime_error {
 public:
  PolynomialSyntaxError(const std::string& what, size_t offset)
      : std::runtime_error(what), offset_(offset) {}
  size_t offset() const { return offset_; }

 private:
  size_t offset_;
};

// Grammar: sum of products with `+ - * ^`, integer literals, `/` by nonzero
// constants (so rational literals like 2/3 work), and parentheses.
Polynomial parsePolynomial(std::string_view text, std::span<const std::string> names,
                           MonomialOrder order = {});

}  // namespace dforge
