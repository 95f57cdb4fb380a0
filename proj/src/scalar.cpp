#include "peaklab/scalar.hpp"

#include <cstdlib>
#include <stdexcept>

namespace peaklab {

std::string rational_to_string(const Rational& r) {
  return r.str();
}

Rational rational_from_string(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  std::string num = s, den = "1";
  if (auto slash = s.find('/'); slash != std::string::npos) {
    num = s.substr(0, slash);
    den = s.substr(slash + 1);
  }
  auto check_integer = [](const std::string& t, bool sign_ok) {
    if (t.empty()) return false;
    std::size_t i = (sign_ok && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
      if (t[i] < '0' || t[i] > '9') return false;
    return true;
  };
  if (!check_integer(num, true) || !check_integer(den, false))
    throw std::invalid_argument("bad rational literal: " + s);
  Integer p(num), q(den);
  if (q == 0) throw std::invalid_argument("zero denominator: " + s);
  return Rational(p, q);
}

int degree_cap() {
  static const int cap = [] {
    if (const char* env = std::getenv("PEAKLAB_DEGREE_CAP")) {
      int v = std::atoi(env);
      if (v > 0) return v;
    }
    return 10;
  }();
  return cap;
}

void require_degree(int n) {
  if (n < 0) throw std::invalid_argument("negative degree");
  if (n > degree_cap())
    throw std::invalid_argument("degree " + std::to_string(n) +
                                " exceeds the degree cap " +
                                std::to_string(degree_cap()) +
                                " (set PEAKLAB_DEGREE_CAP to raise it)");
}

}  // namespace peaklab
