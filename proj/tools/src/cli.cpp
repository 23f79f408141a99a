#include "hopflab/cli/cli.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <functional>
#include <nlohmann/json.hpp>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "hopflab/dupdend/iso.hpp"
#include "hopflab/dupdend/laws.hpp"
#include "hopflab/dupdend/primitives.hpp"
#include "hopflab/error.hpp"
#include "hopflab/exactcore/power_series.hpp"
#include "hopflab/hopf/antipode.hpp"
#include "hopflab/hopf/corrupt.hpp"
#include "hopflab/theta/laws.hpp"
#include "hopflab/theta/theta.hpp"

namespace hopflab::cli {

namespace {

using Json = nlohmann::ordered_json;
using exact::LinComb;
using exact::Scalar;
using hopf::KeyOf;
using hopf::LawReport;
using hopf::Side;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InfeasibleDegree : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Global {
  std::string format;  // empty: the command's default
  unsigned jobs = 1;
  bool force = false;

  bool json(const char* fallback = "text") const { return (format.empty() ? fallback : format) == std::string("json"); }
};

// Default feasibility limits, overridable by HOPF_LAB_MAX_DEGREE or --force.
constexpr int kEnumerateLimit = 7;
constexpr int kPairingMatrixLimit = 5;
constexpr int kKernelLimit = 5;
constexpr int kIsoLimit = 4;
constexpr int kPrimtotLimit = 5;
constexpr int kVerifyLimit = 5;

void check_degree(const std::string& command, int degree, int limit, const Global& g, int lowest = 0) {
  if (degree < lowest) throw UsageError(command + ": degree must be at least " + std::to_string(lowest));
  if (g.force) return;
  if (const char* env = std::getenv("HOPF_LAB_MAX_DEGREE")) {
    try {
      std::size_t used = 0;
      limit = std::stoi(env, &used);
      if (env[used] != '\0') throw std::invalid_argument(env);
    } catch (const std::exception&) {
      throw UsageError(std::string("HOPF_LAB_MAX_DEGREE is not an integer: '") + env + "'");
    }
  }
  if (degree > limit) {
    throw InfeasibleDegree(command + ": degree " + std::to_string(degree) + " is above the limit " +
                           std::to_string(limit) + " (use --force or HOPF_LAB_MAX_DEGREE)");
  }
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, ',')) {
    auto b = item.find_first_not_of(" \t");
    auto e = item.find_last_not_of(" \t");
    out.push_back(b == std::string::npos ? "" : item.substr(b, e - b + 1));
  }
  return out;
}

std::vector<Scalar> parse_scalars(const std::string& text) {
  std::vector<Scalar> out;
  for (const auto& item : split_list(text)) out.push_back(Scalar::parse(item));
  return out;
}

forests::GradedAlphabet parse_alphabet(const std::string& text) {
  if (text.empty()) return forests::GradedAlphabet::undecorated();
  std::vector<int> counts{0};
  for (const auto& item : split_list(text)) {
    try {
      std::size_t used = 0;
      int c = std::stoi(item, &used);
      if (used != item.size() || c < 0) throw std::invalid_argument(item);
      counts.push_back(c);
    } catch (const std::exception&) {
      throw UsageError("alphabet: expected comma-separated counts per degree, got '" + text + "'");
    }
  }
  return forests::GradedAlphabet(counts);
}

Side parse_side(const std::string& s) { return s == "prec" ? Side::Prec : Side::Succ; }

// Calls f with the carrier named `name`. Word carriers with `split` set use
// the opposite coproduct, the one carrying the split coproducts.
template <class F>
void with_carrier(const std::string& name, const std::string& alphabet, bool split, F&& f) {
  if (!alphabet.empty() && name != "hp") throw UsageError("--alphabet only applies to the planar carrier hp");
  if (name == "ck") return f(hopf::CKAlgebra{});
  if (name == "hp") return f(hopf::PlanarAlgebra(parse_alphabet(alphabet)));
  if (name == "ho") return f(hopf::OrderedAlgebra(false));
  if (name == "hho") return f(hopf::OrderedAlgebra(true));
  if (name == "pqsym") return f(words::WordAlgebra(false, split));
  if (name == "fqsym") return f(words::WordAlgebra(true, split));
  if (name == "pqsym-cop") return f(words::WordAlgebra(false, true));
  if (name == "fqsym-cop") return f(words::WordAlgebra(true, true));
  throw UsageError("unknown algebra '" + name + "'");
}

const std::vector<std::string> kCarriers{"ck", "hp", "ho", "hho", "pqsym", "fqsym", "pqsym-cop", "fqsym-cop"};

template <class A>
LinComb<KeyOf<A>> operand(const A& alg, const std::string& text) {
  return exact::parse_lincomb<KeyOf<A>>(text, [&](std::string_view s) { return alg.parse(s); });
}

template <class K>
Json terms_json(const LinComb<K>& x) {
  Json arr = Json::array();
  for (const auto& [k, c] : exact::canonical_terms(x)) arr.push_back({{"coeff", c->str()}, {"key", exact::format_key(*k)}});
  return arr;
}

template <class K>
Json terms_json(const exact::Tensor<K>& t) {
  Json arr = Json::array();
  for (const auto& [k, c] : exact::canonical_terms(t)) {
    arr.push_back({{"coeff", c->str()}, {"left", exact::format_key(k->first)}, {"right", exact::format_key(k->second)}});
  }
  return arr;
}

template <class L>
void print_value(std::ostream& out, const L& x, const Global& g) {
  if (g.json()) {
    out << terms_json(x).dump() << "\n";
  } else {
    out << exact::to_string(x) << "\n";
  }
}

Json report_json(const LawReport& r) {
  constexpr std::size_t kShown = 20;
  Json failures = Json::array();
  for (std::size_t i = 0; i < r.failures.size() && i < kShown; ++i) failures.push_back(r.failures[i]);
  return Json{{"law", r.law},
              {"degree", r.degree},
              {"checked", r.checked},
              {"failures", failures},
              {"failure_count", r.failures.size()},
              {"passed", r.passed()}};
}

void print_reports(std::ostream& out, const std::vector<LawReport>& reports, const Global& g, const char* fallback) {
  if (g.json(fallback)) {
    Json arr = Json::array();
    for (const auto& r : reports) arr.push_back(report_json(r));
    out << arr.dump() << "\n";
    return;
  }
  for (const auto& r : reports) {
    out << r.law << " degree=" << r.degree << " checked=" << r.checked << " failures=" << r.failures.size()
        << (r.passed() ? " PASS" : " FAIL") << "\n";
    for (std::size_t i = 0; i < r.failures.size() && i < 5; ++i) out << "  " << r.failures[i] << "\n";
  }
}

Json matrix_json(const exact::Matrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m.at(r, c).str());
    rows.push_back(std::move(row));
  }
  return rows;
}

template <class K>
Json keys_json(const std::vector<K>& keys) {
  Json arr = Json::array();
  for (const auto& k : keys) arr.push_back(exact::format_key(k));
  return arr;
}

// ---- enumerate ------------------------------------------------------------

int cmd_enumerate(const std::string& kind, int degree, const std::string& alphabet, bool count_only, const Global& g,
                  std::ostream& out) {
  check_degree("enumerate", degree, kEnumerateLimit, g);
  if (!alphabet.empty() && kind != "planar") throw UsageError("--alphabet only applies to --kind planar");
  std::vector<std::string> items;
  auto collect = [&](const auto& list) {
    for (const auto& x : list) items.push_back(exact::format_key(x));
  };
  if (kind == "rooted") {
    collect(forests::enumerate_rooted(degree));
  } else if (kind == "planar") {
    collect(forests::enumerate_planar(degree, parse_alphabet(alphabet)));
  } else if (kind == "ordered") {
    collect(forests::enumerate_ordered(degree));
  } else if (kind == "heap-ordered") {
    collect(forests::enumerate_heap_ordered(degree));
  } else if (kind == "parking") {
    collect(words::enumerate_parking(degree));
  } else {
    collect(words::enumerate_permutations(degree));
  }
  if (g.json()) {
    Json j{{"kind", kind}, {"degree", degree}, {"count", items.size()}};
    if (!count_only) j["items"] = items;
    out << j.dump() << "\n";
  } else if (count_only) {
    out << items.size() << "\n";
  } else {
    for (const auto& s : items) out << s << "\n";
  }
  return kOk;
}

// ---- arithmetic -------------------------------------------------------------

struct ArithArgs {
  std::string algebra;
  std::string alphabet;
  std::vector<std::string> operands;
  std::string side;
  bool reduced = false;
};

int cmd_mul(const ArithArgs& a, const Global& g, std::ostream& out) {
  with_carrier(a.algebra, a.alphabet, false, [&](const auto& alg) {
    LinComb<KeyOf<std::decay_t<decltype(alg)>>> acc = hopf::unit_element(alg);
    for (const auto& text : a.operands) acc = hopf::mul(alg, acc, operand(alg, text));
    print_value(out, acc, g);
  });
  return kOk;
}

int cmd_comul(const ArithArgs& a, const Global& g, std::ostream& out) {
  with_carrier(a.algebra, a.alphabet, false, [&](const auto& alg) {
    const auto x = operand(alg, a.operands.at(0));
    print_value(out, a.reduced ? hopf::reduced_comul(alg, x) : hopf::comul(alg, x), g);
  });
  return kOk;
}

int cmd_split(const ArithArgs& a, const Global& g, std::ostream& out) {
  with_carrier(a.algebra, a.alphabet, true, [&](const auto& alg) {
    using A = std::decay_t<decltype(alg)>;
    if constexpr (A::has_dupdend) {
      print_value(out, hopf::delta(alg, parse_side(a.side), operand(alg, a.operands.at(0))), g);
    } else {
      throw UsageError("the " + alg.name() + " algebra has no split coproduct");
    }
  });
  return kOk;
}

int cmd_nwarrow(const ArithArgs& a, const Global& g, std::ostream& out) {
  with_carrier(a.algebra, a.alphabet, true, [&](const auto& alg) {
    using A = std::decay_t<decltype(alg)>;
    if constexpr (A::has_dupdend) {
      auto acc = operand(alg, a.operands.at(0));
      for (std::size_t i = 1; i < a.operands.size(); ++i) acc = hopf::nwarrow(alg, acc, operand(alg, a.operands[i]));
      print_value(out, acc, g);
    } else {
      throw UsageError("the " + alg.name() + " algebra has no grafting product");
    }
  });
  return kOk;
}

int cmd_antipode(const ArithArgs& a, const Global& g, std::ostream& out) {
  with_carrier(a.algebra, a.alphabet, false, [&](const auto& alg) {
    hopf::Antipode s(alg);
    print_value(out, s(operand(alg, a.operands.at(0))), g);
  });
  return kOk;
}

int cmd_factorial(const std::string& kind, const std::string& text, const Global& g, std::ostream& out) {
  std::uint64_t value = 0;
  if (kind == "rooted") {
    value = forests::forest_factorial(forests::parse_rooted(text));
  } else if (kind == "planar") {
    value = forests::forest_factorial(forests::parse_planar(text));
  } else {
    value = forests::forest_factorial(forests::parse_ordered(text));
  }
  if (g.json()) {
    out << Json{{"forest", text}, {"factorial", value}}.dump() << "\n";
  } else {
    out << value << "\n";
  }
  return kOk;
}

int cmd_dual(const ArithArgs& a, const std::string& rule, const Global& g, std::ostream& out) {
  hopf::PlanarAlgebra alg(parse_alphabet(a.alphabet));
  const auto x = operand(alg, a.operands.at(0));
  const auto y = operand(alg, a.operands.at(1));
  const auto split_rule = rule == "rightmost-leaf" ? hopf::SplitRule::RightmostLeaf : hopf::SplitRule::LastRoot;
  auto value = exact::bilinear_map(x, y, [&](const auto& f, const auto& h) {
    if (a.side == "full") return hopf::dual_product(f, h);
    return hopf::dual_dendriform(parse_side(a.side), f, h, split_rule);
  });
  print_value(out, value, g);
  return kOk;
}

// ---- iterated splits --------------------------------------------------------

std::vector<dupdend::SplitStep> parse_steps(const std::string& text) {
  std::vector<dupdend::SplitStep> out;
  if (text.empty()) return out;
  for (const auto& item : split_list(text)) {
    auto at = item.find('@');
    const std::string side = item.substr(0, at);
    if (side != "prec" && side != "succ") throw UsageError("step '" + item + "': expected prec@slot or succ@slot");
    std::size_t slot = 0;
    if (at != std::string::npos) {
      try {
        std::size_t used = 0;
        const std::string digits = item.substr(at + 1);
        slot = std::stoul(digits, &used);
        if (used != digits.size()) throw std::invalid_argument(digits);
      } catch (const std::exception&) {
        throw UsageError("step '" + item + "': bad slot");
      }
    }
    out.push_back({parse_side(side), slot});
  }
  return out;
}

int cmd_iterate(const ArithArgs& a, const std::string& steps, bool deg_p_only, const Global& g, std::ostream& out) {
  with_carrier(a.algebra, a.alphabet, true, [&](const auto& alg) {
    using A = std::decay_t<decltype(alg)>;
    if constexpr (A::has_dupdend) {
      const auto x = operand(alg, a.operands.at(0));
      if (deg_p_only) {
        const int d = dupdend::deg_p(alg, x);
        if (g.json()) {
          out << Json{{"deg_p", d}}.dump() << "\n";
        } else {
          out << d << "\n";
        }
        return;
      }
      print_value(out, dupdend::iterated_coproduct(alg, parse_steps(steps), x), g);
    } else {
      throw UsageError("the " + alg.name() + " algebra has no split coproduct");
    }
  });
  return kOk;
}

// ---- theta and the pairing ----------------------------------------------------

LinComb<forests::OrderedForest> ordered_operand(const std::string& text) {
  return exact::parse_lincomb<forests::OrderedForest>(text, [](std::string_view s) { return forests::parse_ordered(s); });
}

int cmd_theta(const std::string& text, const Global& g, std::ostream& out) {
  print_value(out, theta::theta(ordered_operand(text)), g);
  return kOk;
}

int cmd_pairing(const std::string& f_text, const std::string& g_text, bool list, const Global& g, std::ostream& out) {
  const auto f = forests::parse_ordered(f_text);
  const auto h = forests::parse_ordered(g_text);
  const auto set = theta::pairing_set(f, h);
  if (g.json()) {
    Json j{{"value", set.size()}};
    if (list) j["bijections"] = keys_json(set);
    out << j.dump() << "\n";
    return kOk;
  }
  out << set.size() << "\n";
  if (list) {
    for (const auto& w : set) out << words::to_string(w) << "\n";
  }
  return kOk;
}

int cmd_pairing_matrix(int degree, bool heap, const Global& g, std::ostream& out) {
  check_degree("pairing-matrix", degree, kPairingMatrixLimit, g, 1);
  std::vector<forests::OrderedForest> basis;
  exact::Matrix m;
  if (heap) {
    basis = forests::enumerate_heap_ordered(degree);
    m = exact::Matrix(basis.size(), basis.size());
    for (std::size_t i = 0; i < basis.size(); ++i) {
      for (std::size_t j = 0; j < basis.size(); ++j) {
        m.set(i, j, Scalar(exact::BigInt(theta::pairing(basis[i], basis[j]))));
      }
    }
  } else {
    basis = forests::enumerate_ordered(degree);
    m = theta::pairing_matrix(degree, g.jobs);
  }
  const std::size_t rk = exact::rank(m);
  if (g.json()) {
    out << Json{{"degree", degree}, {"basis", keys_json(basis)}, {"matrix", matrix_json(m)}, {"rank", rk}}.dump()
        << "\n";
    return kOk;
  }
  const bool csv = g.format == "csv";
  if (csv) {
    out << "\"\"";
    for (const auto& f : basis) out << ",\"" << forests::to_string(f) << "\"";
    out << "\n";
  } else {
    out << "# degree " << degree << ", rank " << rk << "\n";
    for (std::size_t i = 0; i < basis.size(); ++i) out << "# " << i << ": " << forests::to_string(basis[i]) << "\n";
  }
  for (std::size_t r = 0; r < m.rows(); ++r) {
    if (csv) out << "\"" << forests::to_string(basis[r]) << "\",";
    for (std::size_t c = 0; c < m.cols(); ++c) out << (c ? (csv ? "," : " ") : "") << m.at(r, c).str();
    out << "\n";
  }
  return kOk;
}

int cmd_kernel(const std::string& of, int degree, const Global& g, std::ostream& out) {
  check_degree("kernel", degree, kKernelLimit, g, 1);
  const auto basis = forests::enumerate_ordered(degree);
  std::optional<std::vector<LinComb<forests::OrderedForest>>> by_pairing, by_theta;
  if (of != "theta") by_pairing = theta::pairing_kernel_basis(degree);
  if (of != "pairing") by_theta = theta::theta_kernel_basis(degree);
  std::optional<bool> same;
  if (by_pairing && by_theta) {
    auto dense = [&](const std::vector<LinComb<forests::OrderedForest>>& xs) {
      std::vector<std::vector<Scalar>> rows;
      for (const auto& x : xs) {
        std::vector<Scalar> v;
        for (const auto& f : basis) v.push_back(x.coefficient(f));
        rows.push_back(std::move(v));
      }
      return rows;
    };
    same = exact::same_span(dense(*by_pairing), dense(*by_theta), basis.size());
  }
  if (g.json()) {
    Json j{{"degree", degree}};
    auto add = [&](const char* name, const auto& ks) {
      Json elems = Json::array();
      for (const auto& x : ks) elems.push_back(exact::to_string(x));
      j[name] = Json{{"dimension", ks.size()}, {"basis", elems}};
    };
    if (by_pairing) add("pairing", *by_pairing);
    if (by_theta) add("theta", *by_theta);
    if (same) j["same_span"] = *same;
    out << j.dump() << "\n";
  } else {
    auto show = [&](const char* name, const auto& ks) {
      out << name << " kernel dimension " << ks.size() << "\n";
      for (const auto& x : ks) out << "  " << exact::to_string(x) << "\n";
    };
    if (by_pairing) show("pairing", *by_pairing);
    if (by_theta) show("theta", *by_theta);
    if (same) out << "same span: " << (*same ? "yes" : "no") << "\n";
  }
  return same && !*same ? kVerificationFailed : kOk;
}

// ---- primitives and series ------------------------------------------------------

int cmd_primtot(const std::string& carrier, int degree, bool show_basis, const std::string& alphabet, const Global& g,
                std::ostream& out) {
  check_degree("primtot", degree, kPrimtotLimit, g, 1);
  with_carrier(carrier, alphabet, true, [&](const auto& alg) {
    using A = std::decay_t<decltype(alg)>;
    if constexpr (A::has_dupdend) {
      std::vector<std::size_t> dims;
      std::vector<LinComb<KeyOf<A>>> top;
      for (int d = 1; d <= degree; ++d) {
        auto prims = dupdend::prim_tot(alg, d);
        dims.push_back(prims.size());
        if (d == degree) top = std::move(prims);
      }
      if (g.json()) {
        Json j{{"carrier", alg.name()}, {"dimensions", dims}};
        if (show_basis) {
          Json elems = Json::array();
          for (const auto& x : top) elems.push_back(exact::to_string(x));
          j["basis"] = elems;
        }
        out << j.dump() << "\n";
        return;
      }
      for (std::size_t i = 0; i < dims.size(); ++i) out << (i ? " " : "") << dims[i];
      out << "\n";
      if (show_basis) {
        for (const auto& x : top) out << exact::to_string(x) << "\n";
      }
    } else {
      throw UsageError("the " + alg.name() + " algebra has no split coproduct");
    }
  });
  return kOk;
}

std::vector<Scalar> preset_series(const std::string& name, std::size_t order) {
  std::vector<Scalar> out;
  exact::BigInt factorial = 1, catalan = 1;
  for (std::size_t n = 0; n <= order; ++n) {
    if (n > 0) factorial *= static_cast<unsigned>(n);
    if (name == "ordered" || name == "parking") {
      exact::BigInt p = 1;
      for (std::size_t i = 1; i < n; ++i) p *= static_cast<unsigned>(n + 1);
      out.push_back(Scalar(p));
    } else if (name == "heap-ordered" || name == "permutations") {
      out.push_back(Scalar(factorial));
    } else {
      out.push_back(Scalar(catalan));
      catalan = catalan * 2 * (2 * static_cast<unsigned>(n) + 1) / (static_cast<unsigned>(n) + 2);
    }
  }
  return out;
}

int cmd_series(const std::string& to_alphabet, const std::string& from_alphabet, const std::string& preset, int order,
               const Global& g, std::ostream& out) {
  if (order < 0) throw UsageError("series: order must be nonnegative");
  auto n = static_cast<std::size_t>(order);
  const int given = !to_alphabet.empty() + !from_alphabet.empty() + !preset.empty();
  if (given != 1) throw UsageError("series: give exactly one of --to-alphabet, --from-alphabet, --preset");
  exact::PowerSeries result(n);
  if (!from_alphabet.empty()) {
    result = exact::series_from_alphabet(exact::PowerSeries(parse_scalars(from_alphabet), n), n);
  } else {
    auto coeffs = preset.empty() ? parse_scalars(to_alphabet) : preset_series(preset, n);
    // An algebra series is known only as far as it was given.
    if (coeffs.empty()) throw UsageError("series: empty coefficient list");
    n = std::min(n, coeffs.size() - 1);
    result = exact::series_to_alphabet(exact::PowerSeries(std::move(coeffs), n), n);
  }
  if (g.json()) {
    out << result.to_json() << "\n";
    return kOk;
  }
  for (std::size_t i = 0; i <= n; ++i) out << (i ? " " : "") << result[i].str();
  out << "\n";
  return kOk;
}

// ---- verification -----------------------------------------------------------------

struct VerifyArgs {
  std::string carrier;
  std::string laws;
  std::string alphabet;
  int degree = 0;
  bool corrupt = false;
  unsigned seed = 0;
};

template <class A, class Suite>
std::vector<LawReport> run_suite(const A& alg, const VerifyArgs& v, hopf::CorruptOp op, Suite&& suite) {
  if (!v.corrupt) return suite(alg);
  const auto bad = hopf::make_corrupted(alg, op, v.seed);
  auto reports = suite(bad);
  std::string where = hopf::to_string(op) + " at " + exact::format_key(bad.first());
  if (op == hopf::CorruptOp::Product || op == hopf::CorruptOp::Nwarrow) where += ", " + exact::format_key(bad.second());
  for (auto& r : reports) r.law += " [corrupted " + where + "]";
  return reports;
}

template <class A>
std::vector<LawReport> verify_carrier(const A& alg, const VerifyArgs& v, unsigned jobs) {
  const int n = v.degree;
  std::vector<LawReport> out;
  auto append = [&](std::vector<LawReport> rs) {
    for (auto& r : rs) out.push_back(std::move(r));
  };
  auto keep_prefix = [](std::vector<LawReport> rs, const std::string& prefix) {
    std::vector<LawReport> kept;
    for (auto& r : rs) {
      if (r.law.rfind(prefix, 0) == 0) kept.push_back(std::move(r));
    }
    return kept;
  };
  for (const auto& law : split_list(v.laws)) {
    if (law == "hopf") {
      append(run_suite(alg, v, hopf::CorruptOp::Coproduct, [&](const auto& a) { return hopf::check_hopf(a, n, jobs); }));
      continue;
    }
    if constexpr (A::has_dupdend) {
      if (law == "e1") {
        append(run_suite(alg, v, hopf::CorruptOp::Nwarrow,
                         [&](const auto& a) { return dupdend::check_duplicial(a, n, jobs); }));
        continue;
      }
      if (law == "e2") {
        append(run_suite(alg, v, hopf::CorruptOp::DeltaPrec, [&](const auto& a) {
          auto rs = dupdend::check_dendriform_coalgebra(a, n, jobs);
          rs.push_back(hopf::check_split_sum(a, n, jobs));
          return rs;
        }));
        continue;
      }
      if (law == "e3" || law == "e4") {
        append(run_suite(alg, v, hopf::CorruptOp::DeltaPrec, [&](const auto& a) {
          return keep_prefix(dupdend::check_compatibilities(a, n, jobs), law + "-");
        }));
        continue;
      }
    }
    if constexpr (std::is_same_v<A, hopf::OrderedAlgebra>) {
      if (law == "pairing") {
        append(run_suite(alg, v, hopf::CorruptOp::Product, [&](const auto& a) { return theta::check_pairing(a, n, jobs); }));
        continue;
      }
      if (law == "theta") {
        append(run_suite(alg, v, hopf::CorruptOp::Product, [&](const auto& a) { return theta::check_theta(a, n, jobs); }));
        continue;
      }
    }
    throw UsageError("law '" + law + "' does not apply to carrier " + v.carrier);
  }
  return out;
}

int cmd_verify(const VerifyArgs& v, const Global& g, std::ostream& out) {
  check_degree("verify", v.degree, kVerifyLimit, g, 1);
  const bool needs_split = v.laws.find('e') != std::string::npos;
  std::vector<LawReport> reports;
  with_carrier(v.carrier, v.alphabet, needs_split, [&](const auto& alg) { reports = verify_carrier(alg, v, g.jobs); });
  print_reports(out, reports, g, "json");
  return hopf::all_passed(reports) ? kOk : kVerificationFailed;
}

// ---- isomorphism certificates ---------------------------------------------------------

template <class SK, class TK>
Json graded_map_json(const exact::GradedMap<SK, TK>& m) {
  Json blocks = Json::array();
  for (int d : m.degrees()) {
    const auto& b = m.block(d);
    blocks.push_back({{"degree", d},
                      {"rows", b.target.size()},
                      {"cols", b.source.size()},
                      {"rank", exact::rank(b.matrix)},
                      {"source", keys_json(b.source)},
                      {"target", keys_json(b.target)},
                      {"matrix", matrix_json(b.matrix)}});
  }
  return blocks;
}

template <class C>
Json certificate_json(const dupdend::IsoCertificate<C>& cert) {
  Json prims = Json::array();
  for (int d = 1; d <= cert.degree; ++d) {
    Json level = Json::array();
    for (const auto& x : cert.primitives[static_cast<std::size_t>(d)]) level.push_back(exact::to_string(x));
    prims.push_back(level);
  }
  Json laws = Json::array();
  for (const auto& r : cert.laws) laws.push_back(report_json(r));
  return Json{{"carrier", cert.carrier},      {"degree", cert.degree}, {"alphabet", cert.alphabet_sizes()},
              {"full_rank", cert.full_rank()}, {"primitives", prims},  {"phi", graded_map_json(cert.phi)},
              {"laws", laws},                  {"passed", cert.passed()}};
}

template <class F>
void with_iso_carrier(const std::string& name, F&& f) {
  if (name == "ho") return f(hopf::OrderedAlgebra(false));
  if (name == "hho") return f(hopf::OrderedAlgebra(true));
  if (name == "pqsym" || name == "pqsym-cop") return f(words::WordAlgebra(false, true));
  if (name == "fqsym" || name == "fqsym-cop") return f(words::WordAlgebra(true, true));
  throw UsageError("iso: unsupported carrier '" + name + "' (expected ho, hho, pqsym or fqsym)");
}

int cmd_iso(const std::string& from, const std::string& to, int degree, const Global& g, std::ostream& out) {
  check_degree("iso", degree, kIsoLimit, g, 1);
  bool passed = true;
  if (to.empty()) {
    auto single = [&](const auto& alg) {
      const auto cert = dupdend::build_isomorphism(alg, degree, true, g.jobs);
      passed = cert.passed();
      out << certificate_json(cert).dump() << "\n";
    };
    if (from == "hp") {
      single(hopf::PlanarAlgebra());
    } else {
      with_iso_carrier(from, single);
    }
    return passed ? kOk : kVerificationFailed;
  }
  with_iso_carrier(from, [&](const auto& src) {
    with_iso_carrier(to, [&](const auto& tgt) {
      const auto a = dupdend::build_isomorphism(src, degree, false, g.jobs);
      const auto b = dupdend::build_isomorphism(tgt, degree, false, g.jobs);
      Json j{{"from", src.name()},
             {"to", tgt.name()},
             {"degree", degree},
             {"alphabet", {{"from", a.alphabet_sizes()}, {"to", b.alphabet_sizes()}}}};
      std::vector<LawReport> laws;
      try {
        const auto psi = dupdend::compose_isomorphism(a, b);
        laws = dupdend::verify_hopf_iso(psi, src, tgt, degree, g.jobs);
        j["map"] = graded_map_json(psi);
      } catch (const DomainError& e) {
        laws.push_back(LawReport{"composable", degree, 1, {e.what()}});
      }
      Json reports = Json::array();
      for (const auto& r : laws) reports.push_back(report_json(r));
      j["laws"] = reports;
      passed = hopf::all_passed(laws);
      j["passed"] = passed;
      out << j.dump() << "\n";
    });
  });
  return passed ? kOk : kVerificationFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Combinatorial Hopf algebras of forests and words: arithmetic, law checks and isomorphisms",
               "hopf-lab"};
  app.require_subcommand(1);
  app.fallthrough();
  Global g;
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_option("--jobs,-j", g.jobs, "Worker threads for law checks and matrices")->check(CLI::Range(1u, 256u));
  app.add_flag("--force", g.force, "Ignore degree feasibility limits");

  std::function<int()> action;

  // enumerate
  std::string kind, alphabet;
  int degree = 0;
  bool count_only = false;
  auto* enumerate = app.add_subcommand("enumerate", "List a basis in canonical order");
  enumerate->add_option("--kind", kind, "Basis kind")
      ->required()
      ->check(CLI::IsMember({"rooted", "planar", "ordered", "heap-ordered", "parking", "permutations"}));
  enumerate->add_option("--degree,-n", degree, "Degree")->required();
  enumerate->add_option("--alphabet", alphabet, "Planar decorations: symbol counts for degrees 1,2,...");
  enumerate->add_flag("--count", count_only, "Print only the number of elements");
  enumerate->callback([&] { action = [&] { return cmd_enumerate(kind, degree, alphabet, count_only, g, out); }; });

  // arithmetic
  ArithArgs arith;
  auto algebra_option = [&](CLI::App* sub) {
    sub->add_option("--algebra,--carrier,-a", arith.algebra, "Algebra")->required()->check(CLI::IsMember(kCarriers));
    sub->add_option("--alphabet", arith.alphabet, "Planar decorations: symbol counts for degrees 1,2,...");
  };
  auto* mul = app.add_subcommand("mul", "Product of elements");
  algebra_option(mul);
  mul->add_option("operands", arith.operands, "Elements, e.g. \"(123)\" or \"2*1(2) - 1 2\"")->allow_extra_args(false)->required()->expected(2);
  mul->callback([&] { action = [&] { return cmd_mul(arith, g, out); }; });

  auto* comul = app.add_subcommand("comul", "Coproduct of an element");
  algebra_option(comul);
  comul->add_option("operand", arith.operands, "Element")->allow_extra_args(false)->required()->expected(1);
  comul->add_flag("--reduced", arith.reduced, "Drop the terms with a unit factor");
  comul->callback([&] { action = [&] { return cmd_comul(arith, g, out); }; });

  auto* split = app.add_subcommand("split", "Half of the split coproduct (words use the opposite coproduct)");
  algebra_option(split);
  split->add_option("--side", arith.side, "prec or succ")->required()->check(CLI::IsMember({"prec", "succ"}));
  split->add_option("operand", arith.operands, "Element")->allow_extra_args(false)->required()->expected(1);
  split->callback([&] { action = [&] { return cmd_split(arith, g, out); }; });

  auto* nwarrow = app.add_subcommand("nwarrow", "Grafting product x <- y");
  algebra_option(nwarrow);
  nwarrow->add_option("operands", arith.operands, "Elements")->allow_extra_args(false)->required()->expected(2);
  nwarrow->callback([&] { action = [&] { return cmd_nwarrow(arith, g, out); }; });

  auto* antipode = app.add_subcommand("antipode", "Antipode of an element");
  algebra_option(antipode);
  antipode->add_option("operand", arith.operands, "Element")->allow_extra_args(false)->required()->expected(1);
  antipode->callback([&] { action = [&] { return cmd_antipode(arith, g, out); }; });

  std::string rule = "last-root";
  auto* dual = app.add_subcommand("dual", "Products of the dual basis of planar forests");
  dual->add_option("--side", arith.side, "prec, succ or full")->check(CLI::IsMember({"prec", "succ", "full"}));
  dual->add_option("--rule", rule, "Which grafting flag decides the half")
      ->check(CLI::IsMember({"last-root", "rightmost-leaf"}));
  dual->add_option("--alphabet", arith.alphabet, "Planar decorations: symbol counts for degrees 1,2,...");
  dual->add_option("operands", arith.operands, "Two planar forests")->allow_extra_args(false)->required()->expected(2);
  dual->callback([&] {
    if (arith.side.empty()) arith.side = "full";
    action = [&] { return cmd_dual(arith, rule, g, out); };
  });

  std::string factorial_kind = "planar", forest_text;
  auto* factorial = app.add_subcommand("factorial", "The forest factorial F!");
  factorial->add_option("--kind", factorial_kind, "Forest kind")
      ->check(CLI::IsMember({"rooted", "planar", "ordered"}));
  factorial->add_option("forest", forest_text, "Forest")->required();
  factorial->callback([&] { action = [&] { return cmd_factorial(factorial_kind, forest_text, g, out); }; });

  std::string steps;
  bool deg_p_only = false;
  auto* iterate = app.add_subcommand("iterate", "Iterated split coproduct, or deg_p with --deg-p");
  algebra_option(iterate);
  iterate->add_option("--steps", steps, "Comma-separated prec@slot / succ@slot, slots from 0");
  iterate->add_flag("--deg-p", deg_p_only, "Print the smallest k with all k-step iterates zero");
  iterate->add_option("operand", arith.operands, "Element")->allow_extra_args(false)->required()->expected(1);
  iterate->callback([&] { action = [&] { return cmd_iterate(arith, steps, deg_p_only, g, out); }; });

  // theta and pairing
  std::string theta_text;
  auto* theta_cmd = app.add_subcommand("theta", "Image of ordered forests in the permutation algebra");
  theta_cmd->add_option("element", theta_text, "Ordered forest combination, e.g. \"1(2) + 2(1) - 1 2\"")->required();
  theta_cmd->callback([&] { action = [&] { return cmd_theta(theta_text, g, out); }; });

  std::vector<std::string> pair_operands;
  bool list = false;
  auto* pairing = app.add_subcommand("pairing", "Pairing of two ordered forests");
  pairing->add_option("forests", pair_operands, "Two ordered forests")->allow_extra_args(false)->required()->expected(2);
  pairing->add_flag("--list", list, "Also list the counted bijections");
  pairing->callback(
      [&] { action = [&] { return cmd_pairing(pair_operands.at(0), pair_operands.at(1), list, g, out); }; });

  bool heap = false;
  auto* pmatrix = app.add_subcommand("pairing-matrix", "Pairing matrix on ordered forests of one degree");
  pmatrix->add_option("--degree,-n", degree, "Degree")->required();
  pmatrix->add_flag("--heap", heap, "Restrict to heap-ordered forests");
  pmatrix->callback([&] { action = [&] { return cmd_pairing_matrix(degree, heap, g, out); }; });

  std::string kernel_of = "both";
  auto* kernel = app.add_subcommand("kernel", "Kernels of the pairing and of theta, and whether they agree");
  kernel->add_option("--of", kernel_of, "pairing, theta or both")
      ->check(CLI::IsMember({"pairing", "theta", "both"}));
  kernel->add_option("--degree,-n", degree, "Degree")->required();
  kernel->callback([&] { action = [&] { return cmd_kernel(kernel_of, degree, g, out); }; });

  // primitives and series
  std::string carrier;
  bool show_basis = false;
  auto* primtot = app.add_subcommand("primtot", "Dimensions of the totally primitive elements in degrees 1..n");
  primtot->add_option("--carrier,--algebra,-a", carrier, "Carrier")->required()->check(CLI::IsMember(kCarriers));
  primtot->add_option("--degree,-n", degree, "Highest degree")->required();
  primtot->add_option("--alphabet", alphabet, "Planar decorations: symbol counts for degrees 1,2,...");
  primtot->add_flag("--basis", show_basis, "Also print a basis in the highest degree");
  primtot->callback([&] { action = [&] { return cmd_primtot(carrier, degree, show_basis, alphabet, g, out); }; });

  std::string to_alpha, from_alpha, preset;
  int order = 8;
  auto* series = app.add_subcommand("series", "Convert between algebra and generator dimension series");
  series->add_option("--to-alphabet", to_alpha, "Algebra series c0,c1,...,ck (c0 = 1); output stops at order k");
  series->add_option("--from-alphabet", from_alpha, "Generator series c0,c1,... (c0 = 0)");
  series->add_option("--preset", preset, "Named algebra series, converted to its generator series")
      ->check(CLI::IsMember({"ordered", "heap-ordered", "planar", "parking", "permutations"}));
  series->add_option("--order", order, "Truncation order");
  series->callback([&] { action = [&] { return cmd_series(to_alpha, from_alpha, preset, order, g, out); }; });

  // verification
  VerifyArgs verify_args;
  auto* verify = app.add_subcommand("verify", "Check algebraic laws on full bases");
  verify->add_option("--carrier,--algebra,-a", verify_args.carrier, "Carrier")
      ->required()
      ->check(CLI::IsMember(kCarriers));
  verify->add_option("--laws", verify_args.laws, "Comma-separated: hopf,e1,e2,e3,e4,pairing,theta")->required();
  verify->add_option("--degree,-n", verify_args.degree, "Total degree bound")->required();
  verify->add_option("--alphabet", verify_args.alphabet, "Planar decorations: symbol counts for degrees 1,2,...");
  verify->add_flag("--corrupt", verify_args.corrupt, "Double one structure constant first (negative control)");
  verify->add_option("--seed", verify_args.seed, "Seed choosing the corrupted input");
  verify->callback([&] { action = [&] { return cmd_verify(verify_args, g, out); }; });

  std::string iso_from, iso_to;
  auto* iso = app.add_subcommand("iso", "Isomorphism certificate built from totally primitive elements");
  iso->add_option("--from", iso_from, "Source carrier")->required();
  iso->add_option("--to", iso_to, "Target carrier; omit for the single certificate of --from");
  iso->add_option("--degree,-n", degree, "Truncation degree")->required();
  iso->callback([&] { action = [&] { return cmd_iso(iso_from, iso_to, degree, g, out); }; });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }
  try {
    return action ? action() : kUsage;
  } catch (const InfeasibleDegree& e) {
    err << "error: " << e.what() << "\n";
    return kInfeasible;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
}

}  // namespace hopflab::cli
