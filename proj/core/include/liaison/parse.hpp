#ifndef LIAISON_PARSE_HPP
#define LIAISON_PARSE_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "liaison/ideal.hpp"

namespace liaison {

/// Parses a polynomial expression: +, -, * (also implicit juxtaposition), ^,
/// parentheses, integer and a/b fraction coefficients, variables x0..x{n-1}.
Polynomial parse_polynomial(const PolyRing& r, const std::string& text);

/// Line-oriented ideal file:
///   ring GF(32003) vars 4
///   ideal <name>:
///   <one generator per line>
/// Blank lines and '#' comments are ignored.
struct IdealFile {
  PolyRing ring;
  std::vector<std::pair<std::string, Ideal>> ideals;

  const Ideal& get(const std::string& name) const;
};

IdealFile parse_ideal_file_text(const std::string& text,
                                std::optional<CoefficientField> field_override = std::nullopt);
IdealFile parse_ideal_file(const std::string& path,
                           std::optional<CoefficientField> field_override = std::nullopt);

/// Canonical rendering; parse(print(file)) round-trips exactly.
std::string print_ideal_file(const IdealFile& f);

/// Parses a comma- or semicolon-separated list of forms (the --ci flag).
std::vector<Polynomial> parse_form_list(const PolyRing& r, const std::string& text);

}  // namespace liaison

#endif
