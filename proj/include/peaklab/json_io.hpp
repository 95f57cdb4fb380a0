#pragma once

// Compact JSON serialization for the CLI: group-algebra elements at
// permutation level, cyclotomic scalars, named-basis coordinate vectors and
// class functions.  Output is deterministic (map order) and uses exact
// rational strings ("p" or "p/q"), never floating point.

#include <string>
#include <utility>
#include <vector>

#include "peaklab/class_functions.hpp"
#include "peaklab/cyclotomic.hpp"
#include "peaklab/element.hpp"
#include "peaklab/scalar.hpp"

namespace peaklab {

std::string json_escape(const std::string& s);

// {"order": 5, "coeffs": ["1", "0", "-1/2", "0"]}  (order 1 = plain rational)
std::string json_of_cyclo(const Cyclo& c);

// {"degree-terms": [{"n": 3, "terms": [{"perm": [1,3,2], "coeff": "-1/2"},
// ...]}]} with terms grouped by degree, both in increasing order.
std::string json_of_element(const Element<Rational>& a);

// Same shape with cyclotomic coefficients serialized as objects.
std::string json_of_element(const Element<Cyclo>& a);

// {"basis": "Xi", "coords": {"3.1": "1", ...}} from already-stringified
// key/value pairs (zero entries should be omitted by the caller).
std::string json_of_coords(
    const std::string& basis,
    const std::vector<std::pair<std::string, std::string>>& entries);

// {"n": 5, "values": {"3.1.1": "4", ...}} over all partitions of n.
std::string json_of_class_function(const ClassFunction& f);

}  // namespace peaklab
