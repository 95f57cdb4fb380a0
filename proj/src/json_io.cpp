#include "peaklab/json_io.hpp"

#include <map>
#include <sstream>

#include "peaklab/combinatorics.hpp"
#include "peaklab/permutation.hpp"

namespace peaklab {
namespace {

std::string perm_array(const Permutation& p) {
  std::ostringstream os;
  os << '[';
  for (int i = 1; i <= p.n(); ++i) {
    if (i > 1) os << ',';
    os << p.of(i);
  }
  os << ']';
  return os.str();
}

template <class K, class CoeffToJson>
std::string element_json(const Element<K>& a, CoeffToJson&& coeff_json) {
  // Elements are already grouped by degree with deterministic term order.
  std::ostringstream os;
  os << "{\"degree-terms\": [";
  bool first_degree = true;
  for (const auto& [n, terms] : a.parts()) {
    if (!first_degree) os << ", ";
    first_degree = false;
    os << "{\"n\": " << n << ", \"terms\": [";
    bool first_term = true;
    for (const auto& [p, c] : terms) {
      if (!first_term) os << ", ";
      first_term = false;
      os << "{\"perm\": " << perm_array(p) << ", \"coeff\": " << coeff_json(c)
         << "}";
    }
    os << "]}";
  }
  os << "]}";
  return os.str();
}

}  // namespace

std::string json_escape(const std::string& s) {
  std::ostringstream os;
  for (char ch : s) {
    switch (ch) {
      case '"': os << "\\\""; break;
      case '\\': os << "\\\\"; break;
      case '\n': os << "\\n"; break;
      case '\t': os << "\\t"; break;
      default:
        if (static_cast<unsigned char>(ch) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", ch);
          os << buf;
        } else {
          os << ch;
        }
    }
  }
  return os.str();
}

std::string json_of_cyclo(const Cyclo& c) {
  std::ostringstream os;
  os << "{\"order\": " << (c.field() ? c.field()->order() : 1)
     << ", \"coeffs\": [";
  const std::vector<Rational>& v = c.coeffs();
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ',';
    os << '"' << rational_to_string(v[i]) << '"';
  }
  os << "]}";
  return os.str();
}

std::string json_of_element(const Element<Rational>& a) {
  return element_json(a, [](const Rational& c) {
    return '"' + rational_to_string(c) + '"';
  });
}

std::string json_of_element(const Element<Cyclo>& a) {
  return element_json(a, [](const Cyclo& c) { return json_of_cyclo(c); });
}

std::string json_of_coords(
    const std::string& basis,
    const std::vector<std::pair<std::string, std::string>>& entries) {
  std::ostringstream os;
  os << "{\"basis\": \"" << json_escape(basis) << "\", \"coords\": {";
  bool first = true;
  for (const auto& [k, v] : entries) {
    if (!first) os << ", ";
    first = false;
    os << '"' << json_escape(k) << "\": \"" << json_escape(v) << '"';
  }
  os << "}}";
  return os.str();
}

std::string json_of_class_function(const ClassFunction& f) {
  std::ostringstream os;
  os << "{\"n\": " << f.n << ", \"values\": {";
  bool first = true;
  for (const Partition& p : partitions(f.n)) {
    if (!first) os << ", ";
    first = false;
    os << '"' << comp_key(p) << "\": \"" << rational_to_string(f.at(p))
       << '"';
  }
  os << "}}";
  return os.str();
}

}  // namespace peaklab
