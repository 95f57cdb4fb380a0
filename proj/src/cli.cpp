#include "peaklab/cli.hpp"

#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "peaklab/checks.hpp"
#include "peaklab/class_functions.hpp"
#include "peaklab/combinatorics.hpp"
#include "peaklab/descent_peak.hpp"
#include "peaklab/element.hpp"
#include "peaklab/eulerian.hpp"
#include "peaklab/json_io.hpp"
#include "peaklab/lie_idempotents.hpp"
#include "peaklab/linalg.hpp"
#include "peaklab/scalar.hpp"
#include "peaklab/structure_theory.hpp"

namespace peaklab {
namespace {

using checks::CheckDef;
using checks::CheckResult;

const char* kUsage =
    "usage: peaklab <subcommand> [flags]\n"
    "\n"
    "subcommands:\n"
    "  element     --basis {delta|xi|pi|gamma|tilde-xi} --n N [--index S]\n"
    "              [--as-coords {delta|xi|pi|gamma}] [--format json|text]\n"
    "              Print a basis element.  --index is a composition of n\n"
    "              like \"2.1\" for delta/xi/tilde-xi (default: the single\n"
    "              block \"n\"), and a peak set like \"2.4\" or an odd\n"
    "              composition for pi/gamma (default: the empty peak set).\n"
    "  verify      <check-id|all> [--n-max N] [--format json|text]\n"
    "              Run a registered check; exit 0 pass, 1 fail, 2 unknown.\n"
    "  checks      [--format json|text]\n"
    "              List every registered check with its statement.\n"
    "  report      [--n-max N] [--format json|csv]\n"
    "              Dimensions, Cartan matrices, radical chains, conjecture\n"
    "              status (default n-max 6).\n"
    "  idempotent  --kind {dynkin|canonical|klyachko|peak-dynkin|\n"
    "              peak-canonical} --n N [--i I] [--format json|text]\n"
    "  eulerian    --n N [--k K] [--table] [--format json|text]\n"
    "  cartan      --n N [--format json|csv]\n"
    "  radical     --n N\n"
    "\n"
    "common flags: --out PATH writes the payload to a file.\n"
    "environment: PEAKLAB_DEGREE_CAP bounds every degree (default 10).\n";

struct Args {
  std::map<std::string, std::string> flags;
  std::vector<std::string> positional;
  bool table = false;
};

// Returns nullopt and reports on malformed flags.
std::optional<Args> parse_args(int argc, const char* const* argv, int start,
                               std::ostream& err) {
  static const std::set<std::string> valued = {
      "--basis", "--n",    "--index", "--n-max",     "--format",
      "--out",   "--kind", "--i",     "--k",         "--as-coords"};
  Args a;
  for (int i = start; i < argc; ++i) {
    std::string t = argv[i];
    if (t == "--table") {
      a.table = true;
    } else if (valued.count(t)) {
      if (i + 1 >= argc) {
        err << "error: flag " << t << " requires a value\n";
        return std::nullopt;
      }
      a.flags[t] = argv[++i];
    } else if (t.rfind("--", 0) == 0) {
      err << "error: unknown flag " << t << "\n";
      return std::nullopt;
    } else {
      a.positional.push_back(t);
    }
  }
  return a;
}

std::optional<int> parse_int(const std::string& s) {
  try {
    std::size_t pos = 0;
    int v = std::stoi(s, &pos);
    if (pos != s.size()) return std::nullopt;
    return v;
  } catch (...) {
    return std::nullopt;
  }
}

// Requires --n with 1 <= n <= degree_cap(); reports and returns nullopt
// otherwise.
std::optional<int> require_n(const Args& a, std::ostream& err) {
  auto it = a.flags.find("--n");
  if (it == a.flags.end()) {
    err << "error: --n is required\n";
    return std::nullopt;
  }
  std::optional<int> n = parse_int(it->second);
  if (!n || *n < 1 || *n > degree_cap()) {
    err << "error: --n must be an integer in 1.." << degree_cap()
        << " (raise PEAKLAB_DEGREE_CAP to go higher)\n";
    return std::nullopt;
  }
  return n;
}

// Writes the payload to --out or the output stream.  Returns the exit code.
int emit(const Args& a, const std::string& payload, std::ostream& out,
         std::ostream& err, int code = 0) {
  auto it = a.flags.find("--out");
  if (it == a.flags.end()) {
    out << payload;
    return code;
  }
  std::ofstream f(it->second);
  if (!f) {
    err << "error: cannot open " << it->second << " for writing\n";
    return 1;
  }
  f << payload;
  f.flush();
  if (!f.good()) {
    err << "error: write to " << it->second << " failed\n";
    return 1;
  }
  return code;
}

std::string format_of(const Args& a, const std::string& def) {
  auto it = a.flags.find("--format");
  return it == a.flags.end() ? def : it->second;
}

std::string element_text(const Element<Rational>& e) {
  std::ostringstream os;
  for (const auto& [n, terms] : e.parts())
    for (const auto& [p, c] : terms)
      os << perm_key(p) << " " << rational_to_string(c) << "\n";
  if (e.is_zero()) os << "0\n";
  return os.str();
}

std::string element_text(const Element<Cyclo>& e) {
  std::ostringstream os;
  for (const auto& [n, terms] : e.parts())
    for (const auto& [p, c] : terms)
      os << perm_key(p) << " " << c.to_string() << "\n";
  if (e.is_zero()) os << "0\n";
  return os.str();
}

// Peak-set index: positions in 2..n-1, strictly increasing, no two adjacent;
// falls back to an odd composition of n mapped through the bijection.
std::optional<Subset> parse_peak_index(const std::string& s, int n) {
  Composition parts;
  try {
    parts = parse_comp_key(s);
  } catch (...) {
    return std::nullopt;
  }
  bool peak_like = true;
  int prev = 0;
  for (int v : parts) {
    if (v < 2 || v > n - 1 || (prev != 0 && v <= prev + 1)) {
      peak_like = false;
      break;
    }
    prev = v;
  }
  if (peak_like) {
    Subset P = 0;
    for (int v : parts) P |= Subset{1} << (v - 1);
    return P;
  }
  if (is_odd_composition(parts) && comp_sum(parts) == n && !parts.empty())
    return peak_set_of_odd(parts);
  return std::nullopt;
}

std::optional<Composition> parse_comp_index(const std::string& s, int n) {
  Composition q;
  try {
    q = parse_comp_key(s);
  } catch (...) {
    return std::nullopt;
  }
  for (int v : q)
    if (v < 1) return std::nullopt;
  if (comp_sum(q) != n || q.empty()) return std::nullopt;
  return q;
}

int cmd_element(const Args& a, std::ostream& out, std::ostream& err) {
  auto bit = a.flags.find("--basis");
  if (bit == a.flags.end()) {
    err << "error: --basis is required (delta, xi, pi, gamma or tilde-xi)\n";
    return 2;
  }
  std::string basis = bit->second;
  std::optional<int> n = require_n(a, err);
  if (!n) return 2;
  bool has_index = a.flags.count("--index") != 0;
  std::string index = has_index ? a.flags.at("--index") : "";

  Element<Rational> e;
  if (basis == "delta" || basis == "xi" || basis == "tilde-xi") {
    Composition q;
    if (has_index) {
      auto parsed = parse_comp_index(index, *n);
      if (!parsed) {
        err << "error: --index for basis '" << basis
            << "' must be a composition of " << *n
            << " with positive parts, like \"2.1\"\n";
        return 2;
      }
      q = *parsed;
    } else {
      q = Composition{*n};
    }
    e = basis == "delta" ? delta_elem(q)
                         : basis == "xi" ? xi_elem(q) : tilde_xi_elem(q);
  } else if (basis == "pi" || basis == "gamma") {
    auto P = parse_peak_index(index, *n);
    if (!P) {
      err << "error: --index for basis '" << basis
          << "' must be a peak set (positions in 2.." << *n - 1
          << ", increasing, no two adjacent, like \"2.4\") or an odd "
             "composition of "
          << *n << "\n";
      return 2;
    }
    e = basis == "pi" ? pi_elem(*n, *P) : gamma_elem(*n, *P);
  } else {
    err << "error: unknown basis '" << basis
        << "' (expected delta, xi, pi, gamma or tilde-xi)\n";
    return 2;
  }

  auto cit = a.flags.find("--as-coords");
  if (cit != a.flags.end()) {
    const DnContext& ctx = DnContext::get(*n);
    std::vector<std::pair<std::string, std::string>> entries;
    std::string target = cit->second;
    if (target == "delta" || target == "xi") {
      auto d = elem_to_delta_coords(ctx, e);
      if (!d) {
        err << "error: element is not in the descent span\n";
        return 1;
      }
      std::vector<Rational> v =
          target == "delta" ? *d : delta_to_xi(ctx, *d);
      for (Subset D = 0; D < static_cast<Subset>(ctx.num_subsets()); ++D)
        if (v[D] != 0)
          entries.emplace_back(comp_key(comp_of(D, *n)),
                               rational_to_string(v[D]));
    } else if (target == "pi" || target == "gamma") {
      auto p = elem_to_pi_coords(ctx, e);
      if (!p) {
        err << "error: element is not in the peak span\n";
        return 1;
      }
      std::vector<Rational> v = target == "pi" ? *p : pi_to_gamma(ctx, *p);
      for (int i = 0; i < ctx.num_peak_sets(); ++i)
        if (v[i] != 0)
          entries.emplace_back(subset_key(ctx.peak_list()[i]),
                               rational_to_string(v[i]));
    } else {
      err << "error: --as-coords must be delta, xi, pi or gamma\n";
      return 2;
    }
    std::string name = target;
    name[0] = static_cast<char>(std::toupper(name[0]));
    return emit(a, json_of_coords(name, entries) + "\n", out, err);
  }

  std::string fmt = format_of(a, "json");
  if (fmt == "json") return emit(a, json_of_element(e) + "\n", out, err);
  if (fmt == "text") return emit(a, element_text(e), out, err);
  err << "error: --format must be json or text\n";
  return 2;
}

int cmd_verify(const Args& a, std::ostream& out, std::ostream& err) {
  if (a.positional.empty()) {
    err << "error: verify needs a check id or 'all'\n";
    return 2;
  }
  std::string id = a.positional[0];
  int n_max = 0;
  if (auto it = a.flags.find("--n-max"); it != a.flags.end()) {
    std::optional<int> v = parse_int(it->second);
    if (!v || *v < 1) {
      err << "error: --n-max must be a positive integer\n";
      return 2;
    }
    n_max = *v;
  }
  std::vector<const CheckDef*> todo;
  if (id == "all") {
    for (const CheckDef& def : checks::registry()) todo.push_back(&def);
  } else {
    const CheckDef* def = checks::find_check(id);
    if (!def) {
      err << "error: unknown check '" << id
          << "'; run 'peaklab checks' for the list\n";
      return 2;
    }
    todo.push_back(def);
  }
  std::string fmt = format_of(a, "text");
  if (fmt != "text" && fmt != "json") {
    err << "error: --format must be json or text\n";
    return 2;
  }
  bool all_pass = true;
  std::ostringstream os;
  bool first = true;
  if (fmt == "json") os << "{\"results\": [";
  for (const CheckDef* def : todo) {
    CheckResult r = checks::run_check(*def, n_max);
    all_pass = all_pass && r.pass;
    if (fmt == "text") {
      os << def->id << " " << (r.pass ? "PASS" : "FAIL");
      if (def->report_only) os << " (report only)";
      os << " -- " << r.detail << "\n";
    } else {
      if (!first) os << ", ";
      first = false;
      os << "{\"id\": \"" << json_escape(def->id) << "\", \"pass\": "
         << (r.pass ? "true" : "false") << ", \"detail\": \""
         << json_escape(r.detail) << "\"}";
    }
  }
  if (fmt == "json")
    os << "], \"all-pass\": " << (all_pass ? "true" : "false") << "}\n";
  else
    os << (all_pass ? "all checks passed" : "FAILURES above") << "\n";
  return emit(a, os.str(), out, err, all_pass ? 0 : 1);
}

int cmd_checks(const Args& a, std::ostream& out, std::ostream& err) {
  std::string fmt = format_of(a, "text");
  std::ostringstream os;
  if (fmt == "json") {
    os << "{\"checks\": [";
    bool first = true;
    for (const CheckDef& def : checks::registry()) {
      if (!first) os << ", ";
      first = false;
      os << "{\"id\": \"" << json_escape(def.id) << "\", \"default-n-max\": "
         << def.default_n_max << ", \"report-only\": "
         << (def.report_only ? "true" : "false") << ", \"statement\": \""
         << json_escape(def.statement) << "\"}";
    }
    os << "]}\n";
  } else if (fmt == "text") {
    for (const CheckDef& def : checks::registry()) {
      os << def.id << "  [n <= " << def.default_n_max << "]"
         << (def.report_only ? " (report only)" : "") << "\n    "
         << def.statement << "\n";
    }
  } else {
    err << "error: --format must be json or text\n";
    return 2;
  }
  return emit(a, os.str(), out, err);
}

void json_int_array(std::ostringstream& os, const std::vector<long long>& v) {
  os << '[';
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ',';
    os << v[i];
  }
  os << ']';
}

int cmd_report(const Args& a, std::ostream& out, std::ostream& err) {
  int n_max = 6;
  if (auto it = a.flags.find("--n-max"); it != a.flags.end()) {
    std::optional<int> v = parse_int(it->second);
    if (!v || *v < 1) {
      err << "error: --n-max must be a positive integer\n";
      return 2;
    }
    n_max = *v;
  }
  n_max = std::min(n_max, degree_cap());
  std::string fmt = format_of(a, "json");

  std::vector<long long> descent, fib, nparts, oddparts, raddim;
  std::map<int, int> nilpotency;
  std::map<int, std::vector<int>> chains;
  for (int n = 1; n <= n_max; ++n) {
    const DnContext& ctx = DnContext::get(n);
    descent.push_back(ctx.num_subsets());
    fib.push_back(fibonacci_dim(n));
    nparts.push_back(static_cast<long long>(partitions(n).size()));
    oddparts.push_back(static_cast<long long>(odd_partitions(n).size()));
    raddim.push_back(ctx.num_peak_sets() -
                     static_cast<long long>(odd_partitions(n).size()));
    if (n >= 4) {
      nilpotency[n] = peak_radical_nilpotency_index(ctx);
      chains[n] = radical_power_dims_peak(ctx,
                                          radical_tilde_xi_differences(ctx));
    }
  }

  if (fmt == "csv") {
    std::ostringstream os;
    os << "n,descent-dim,fibonacci,partitions,odd-partitions,"
          "peak-radical-dim,nilpotency\n";
    for (int n = 1; n <= n_max; ++n)
      os << n << ',' << descent[n - 1] << ',' << fib[n - 1] << ','
         << nparts[n - 1] << ',' << oddparts[n - 1] << ',' << raddim[n - 1]
         << ',' << (nilpotency.count(n) ? nilpotency[n] : 1) << "\n";
    return emit(a, os.str(), out, err);
  }
  if (fmt != "json") {
    err << "error: --format must be json or csv\n";
    return 2;
  }

  std::ostringstream os;
  os << "{\n  \"n-max\": " << n_max << ",\n  \"descent-dim\": ";
  json_int_array(os, descent);
  os << ",\n  \"fibonacci\": ";
  json_int_array(os, fib);
  os << ",\n  \"partitions\": ";
  json_int_array(os, nparts);
  os << ",\n  \"odd-partitions\": ";
  json_int_array(os, oddparts);
  os << ",\n  \"peak-radical-dim\": ";
  json_int_array(os, raddim);
  os << ",\n  \"nilpotency\": {";
  {
    bool first = true;
    for (const auto& [n, v] : nilpotency) {
      if (!first) os << ", ";
      first = false;
      os << '"' << n << "\": " << v;
    }
    os << "}";
  }
  for (const auto& [n, chain] : chains) {
    os << ",\n  \"radical-chain-" << n << "\": ";
    json_int_array(os, std::vector<long long>(chain.begin(), chain.end()));
  }
  for (int n = 1; n <= n_max; ++n) {
    os << ",\n  \"cartan-" << n << "\": [";
    auto m = cartan_matrix(n);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i) os << ',';
      json_int_array(os,
                     std::vector<long long>(m[i].begin(), m[i].end()));
    }
    os << ']';
  }
  // K-tilde span dimensions (odd n) against the conjectured (n+1)/2.
  os << ",\n  \"ktilde\": {";
  {
    bool first = true;
    for (int n = 3; n <= n_max; n += 2) {
      int dim = klyachko_peak_span_dim(n);
      if (!first) os << ", ";
      first = false;
      os << '"' << n << "\": {\"dim\": " << dim
         << ", \"conjectured\": " << (n + 1) / 2 << ", \"status\": \""
         << (dim == (n + 1) / 2 ? "match" : "differs") << "\"}";
    }
    os << "}";
  }
  // Loewy chain comparison per degree.
  os << ",\n  \"loewy\": {";
  {
    bool first = true;
    for (int n = 4; n <= n_max; ++n) {
      const DnContext& ctx = DnContext::get(n);
      std::vector<std::vector<Rational>> jp;
      for (const auto& r : radical_tilde_xi_differences(ctx))
        jp.push_back(pi_to_delta(ctx, r));
      auto jd = radical_descent_differences(ctx);
      bool equal = true;
      for (const Partition& p : odd_partitions(n)) {
        auto lam = lambda_ideal_basis(ctx, p);
        auto pchain = module_radical_chain(ctx, jp, lam);
        auto dchain = module_radical_chain(ctx, jd, lam);
        for (std::size_t j = 1;
             (j < pchain.size() || 2 * j - 1 < dchain.size()) && j <= 10;
             ++j) {
          auto pj = j < pchain.size() ? pchain[j]
                                      : std::vector<std::vector<Rational>>{};
          auto d2 = 2 * j - 1 < dchain.size()
                        ? dchain[2 * j - 1]
                        : std::vector<std::vector<Rational>>{};
          auto row_of = [](const std::vector<Rational>& r) {
            std::map<int, Rational> row;
            for (std::size_t i = 0; i < r.size(); ++i)
              if (r[i] != 0) row.emplace(static_cast<int>(i), r[i]);
            return row;
          };
          RowSpace<Rational, int> sp, sd;
          for (const auto& r : pj) sp.insert(row_of(r));
          for (const auto& r : d2) sd.insert(row_of(r));
          if (sp.rank() != sd.rank()) equal = false;
          for (const auto& r : pj)
            if (!sd.contains(row_of(r))) equal = false;
        }
      }
      if (!first) os << ", ";
      first = false;
      os << '"' << n << "\": \""
         << (equal ? "equality at every step for all odd p"
                   : "strict inclusion for some odd p")
         << '"';
    }
    os << "}";
  }
  os << "\n}\n";
  return emit(a, os.str(), out, err);
}

int cmd_idempotent(const Args& a, std::ostream& out, std::ostream& err) {
  auto kit = a.flags.find("--kind");
  if (kit == a.flags.end()) {
    err << "error: --kind is required (dynkin, canonical, klyachko, "
           "peak-dynkin or peak-canonical)\n";
    return 2;
  }
  std::string kind = kit->second;
  std::optional<int> n = require_n(a, err);
  if (!n) return 2;
  std::string fmt = format_of(a, "json");
  if (fmt != "json" && fmt != "text") {
    err << "error: --format must be json or text\n";
    return 2;
  }
  if (kind == "klyachko") {
    long long i = 1;
    if (auto it = a.flags.find("--i"); it != a.flags.end()) {
      std::optional<int> v = parse_int(it->second);
      if (!v) {
        err << "error: --i must be an integer\n";
        return 2;
      }
      i = *v;
    }
    Element<Cyclo> e = klyachko_elem(*n, i);
    return emit(a,
                fmt == "json" ? json_of_element(e) + "\n" : element_text(e),
                out, err);
  }
  Element<Rational> e;
  if (kind == "dynkin") {
    e = omega_elem(*n);
  } else if (kind == "canonical") {
    e = rho_elem(*n);
  } else if (kind == "peak-dynkin") {
    e = peak_dynkin_elem(*n);
  } else if (kind == "peak-canonical") {
    e = peak_canonical_elem(*n);
  } else {
    err << "error: unknown kind '" << kind << "'\n";
    return 2;
  }
  return emit(a, fmt == "json" ? json_of_element(e) + "\n" : element_text(e),
              out, err);
}

int cmd_eulerian(const Args& a, std::ostream& out, std::ostream& err) {
  std::optional<int> n = require_n(a, err);
  if (!n) return 2;
  const DnContext& ctx = DnContext::get(*n);
  int dim = peak_eulerian_dim(*n);
  std::ostringstream os;
  if (a.table) {
    auto table = peak_eulerian_table(ctx);
    os << "{\"n\": " << *n << ", \"dim\": " << dim << ", \"table\": [";
    for (int j = 0; j < dim; ++j) {
      if (j) os << ", ";
      os << '[';
      for (int k = 0; k < dim; ++k) {
        if (k) os << ", ";
        os << '[';
        for (std::size_t i = 0; i < table[j][k].size(); ++i) {
          if (i) os << ',';
          os << '"' << rational_to_string(table[j][k][i]) << '"';
        }
        os << ']';
      }
      os << ']';
    }
    os << "]}\n";
    return emit(a, os.str(), out, err);
  }
  if (auto it = a.flags.find("--k"); it != a.flags.end()) {
    std::optional<int> k = parse_int(it->second);
    if (!k || *k < 0 || *k >= dim) {
      err << "error: --k must be in 0.." << dim - 1 << " for n = " << *n
          << "\n";
      return 2;
    }
    std::vector<Rational> v = pi_nk_coords(ctx, *k);
    std::vector<std::pair<std::string, std::string>> entries;
    for (int i = 0; i < ctx.num_peak_sets(); ++i)
      if (v[i] != 0)
        entries.emplace_back(subset_key(ctx.peak_list()[i]),
                             rational_to_string(v[i]));
    return emit(a, json_of_coords("Pi", entries) + "\n", out, err);
  }
  os << "{\"n\": " << *n << ", \"dim\": " << dim
     << ", \"graded-sums\": " << dim << "}\n";
  return emit(a, os.str(), out, err);
}

int cmd_cartan(const Args& a, std::ostream& out, std::ostream& err) {
  std::optional<int> n = require_n(a, err);
  if (!n) return 2;
  auto m = cartan_matrix(*n);
  std::vector<Partition> odd = odd_partitions(*n);
  std::string fmt = format_of(a, "json");
  std::ostringstream os;
  if (fmt == "csv") {
    for (std::size_t i = 0; i < m.size(); ++i) {
      os << comp_key(odd[i]);
      for (int v : m[i]) os << ',' << v;
      os << "\n";
    }
  } else if (fmt == "json") {
    os << "{\"n\": " << *n << ", \"partitions\": [";
    for (std::size_t i = 0; i < odd.size(); ++i) {
      if (i) os << ',';
      os << '"' << comp_key(odd[i]) << '"';
    }
    os << "], \"matrix\": [";
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i) os << ',';
      json_int_array(os, std::vector<long long>(m[i].begin(), m[i].end()));
    }
    os << "]}\n";
  } else {
    err << "error: --format must be json or csv\n";
    return 2;
  }
  return emit(a, os.str(), out, err);
}

int cmd_radical(const Args& a, std::ostream& out, std::ostream& err) {
  std::optional<int> n = require_n(a, err);
  if (!n) return 2;
  const DnContext& ctx = DnContext::get(*n);
  std::vector<int> chain =
      radical_power_dims_peak(ctx, radical_tilde_xi_differences(ctx));
  std::ostringstream os;
  os << "{\"n\": " << *n << ", \"dim\": "
     << ctx.num_peak_sets() - static_cast<int>(odd_partitions(*n).size())
     << ", \"chain\": ";
  json_int_array(os, std::vector<long long>(chain.begin(), chain.end()));
  os << ", \"nilpotency\": " << peak_radical_nilpotency_index(ctx) << "}\n";
  return emit(a, os.str(), out, err);
}

}  // namespace

int cli_main(int argc, const char* const* argv, std::ostream& out,
             std::ostream& err) {
  if (argc < 2) {
    err << kUsage;
    return 2;
  }
  std::string cmd = argv[1];
  if (cmd == "help" || cmd == "--help" || cmd == "-h") {
    out << kUsage;
    return 0;
  }
  auto args = parse_args(argc, argv, 2, err);
  if (!args) return 2;
  try {
    if (cmd == "element") return cmd_element(*args, out, err);
    if (cmd == "verify") return cmd_verify(*args, out, err);
    if (cmd == "checks") return cmd_checks(*args, out, err);
    if (cmd == "report") return cmd_report(*args, out, err);
    if (cmd == "idempotent") return cmd_idempotent(*args, out, err);
    if (cmd == "eulerian") return cmd_eulerian(*args, out, err);
    if (cmd == "cartan") return cmd_cartan(*args, out, err);
    if (cmd == "radical") return cmd_radical(*args, out, err);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  err << "error: unknown subcommand '" << cmd << "'\n\n" << kUsage;
  return 2;
}

}  // namespace peaklab
