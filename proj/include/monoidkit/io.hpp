#ifndef MONOIDKIT_IO_HPP
#define MONOIDKIT_IO_HPP

#include <iosfwd>
#include <string>

#include "json.hpp"
#include "monoidkit/monoid.hpp"

namespace monoidkit {

// Text format:
//   n=<order>
//   labels=<comma-separated>        (optional)
//   <n rows of n whitespace-separated element indices>
// '#' starts a comment; identity must be index 0.
FiniteMonoid parse_monoid_text(std::istream& in);
FiniteMonoid parse_monoid_text(const std::string& text);
std::string write_monoid_text(const FiniteMonoid& m);

// JSON mirror with keys "order", "labels", "table".
FiniteMonoid monoid_from_json(const nlohmann::json& j);
nlohmann::json monoid_to_json(const FiniteMonoid& m);

// Dispatches on ".json" extension, otherwise text.
FiniteMonoid load_monoid_file(const std::string& path);
void save_monoid_file(const FiniteMonoid& m, const std::string& path);

}  // namespace monoidkit

#endif
