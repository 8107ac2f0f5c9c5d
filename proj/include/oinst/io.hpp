#pragma once

#include <oinst/cohomology.hpp>
#include <oinst/error.hpp>
#include <oinst/kronecker.hpp>
#include <oinst/moduli.hpp>
#include <oinst/monad.hpp>
#include <oinst/random.hpp>
#include <oinst/tensor.hpp>

#include <json.hpp>

#include <cstddef>
#include <cstdint>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace oinst {

using nlohmann::json;

/// On-disk description of a candidate form:
///   {"c":int, "n":int, "r":int, "terms":[{"B":[[int]],"C":[[int]]}], "name":string?}
struct SpecFile {
  std::size_t c = 0, n = 0, r = 0;
  std::vector<Term> terms;
  std::optional<std::string> name;

  TensorSpec tensor() const { return {c, n, terms}; }

  friend bool operator==(const SpecFile&, const SpecFile&) = default;
};

struct SchemaViolation {
  std::string pointer;
  ErrorKind kind;
  std::string message;
};

class SpecError : public Error {
 public:
  explicit SpecError(std::vector<SchemaViolation> v)
      : Error(v.front().kind, summarize(v)), violations_(std::move(v)) {}

  const std::vector<SchemaViolation>& violations() const { return violations_; }

 private:
  static std::string summarize(const std::vector<SchemaViolation>& v) {
    std::string s;
    for (const auto& x : v) s += (s.empty() ? "" : "; ") + x.pointer + ": " + x.message;
    return s;
  }
  std::vector<SchemaViolation> violations_;
};

namespace detail {

inline std::optional<RatMatrix> read_int_matrix(const json& j, const std::string& ptr, std::vector<SchemaViolation>& out) {
  if (!j.is_array()) {
    out.push_back({ptr, ErrorKind::SchemaError, "expected an array of rows"});
    return std::nullopt;
  }
  std::vector<std::vector<long long>> rows;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const auto& row = j[i];
    const std::string rp = ptr + "/" + std::to_string(i);
    if (!row.is_array()) {
      out.push_back({rp, ErrorKind::SchemaError, "expected an array of integers"});
      return std::nullopt;
    }
    std::vector<long long> vals;
    for (std::size_t k = 0; k < row.size(); ++k) {
      if (!row[k].is_number_integer()) {
        out.push_back({rp + "/" + std::to_string(k), ErrorKind::SchemaError, "expected an integer"});
        return std::nullopt;
      }
      vals.push_back(row[k].get<long long>());
    }
    if (!rows.empty() && vals.size() != rows.front().size()) {
      out.push_back({rp, ErrorKind::ShapeMismatch, "ragged matrix"});
      return std::nullopt;
    }
    rows.push_back(std::move(vals));
  }
  return RatMatrix::from_rows(rows);
}

inline std::optional<std::size_t> read_count(const json& j, const char* key, std::vector<SchemaViolation>& out) {
  const std::string ptr = std::string("/") + key;
  if (!j.contains(key)) {
    out.push_back({ptr, ErrorKind::SchemaError, "missing"});
    return std::nullopt;
  }
  const auto& v = j.at(key);
  if (!v.is_number_integer() || v.get<long long>() < 0) {
    out.push_back({ptr, ErrorKind::SchemaError, "expected a non-negative integer"});
    return std::nullopt;
  }
  return v.get<std::size_t>();
}

}  // namespace detail

/// Validates shapes, integrality and skewness; every violation is reported
/// with the JSON pointer of the offending node.
inline SpecFile parse_spec_json(const json& j) {
  std::vector<SchemaViolation> bad;
  if (!j.is_object()) throw SpecError({{"", ErrorKind::SchemaError, "expected a JSON object"}});
  const auto c = detail::read_count(j, "c", bad);
  const auto n = detail::read_count(j, "n", bad);
  const auto r = detail::read_count(j, "r", bad);
  if (c && *c == 0) bad.push_back({"/c", ErrorKind::SchemaError, "charge must be at least 1"});
  if (n && *n == 0) bad.push_back({"/n", ErrorKind::SchemaError, "n must be at least 1"});
  SpecFile spec;
  if (j.contains("name")) {
    if (j["name"].is_string())
      spec.name = j["name"].get<std::string>();
    else
      bad.push_back({"/name", ErrorKind::SchemaError, "expected a string"});
  }
  if (!j.contains("terms") || !j["terms"].is_array()) {
    bad.push_back({"/terms", ErrorKind::SchemaError, "expected an array of {B, C} objects"});
  } else {
    const auto& terms = j["terms"];
    for (std::size_t t = 0; t < terms.size(); ++t) {
      const std::string tp = "/terms/" + std::to_string(t);
      if (!terms[t].is_object() || !terms[t].contains("B") || !terms[t].contains("C")) {
        bad.push_back({tp, ErrorKind::SchemaError, "expected an object with B and C"});
        continue;
      }
      auto B = detail::read_int_matrix(terms[t]["B"], tp + "/B", bad);
      auto C = detail::read_int_matrix(terms[t]["C"], tp + "/C", bad);
      if (!B || !C) continue;
      if (c && (B->rows() != *c || B->cols() != *c))
        bad.push_back({tp + "/B", ErrorKind::ShapeMismatch, "B must be c x c"});
      else if (!B->is_skew())
        bad.push_back({tp + "/B", ErrorKind::NotSkew, "B is not skew-symmetric"});
      if (n && (C->rows() != *n + 1 || C->cols() != *n + 1))
        bad.push_back({tp + "/C", ErrorKind::ShapeMismatch, "C must be (n+1) x (n+1)"});
      else if (!C->is_skew())
        bad.push_back({tp + "/C", ErrorKind::NotSkew, "C is not skew-symmetric"});
      spec.terms.push_back({std::move(*B), std::move(*C)});
    }
  }
  if (!bad.empty()) throw SpecError(std::move(bad));
  spec.c = *c;
  spec.n = *n;
  spec.r = *r;
  return spec;
}

inline SpecFile parse_spec(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw SpecError({{"", ErrorKind::SchemaError, std::string("malformed JSON: ") + e.what()}});
  }
  return parse_spec_json(j);
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::UsageError, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline SpecFile load_spec(const std::string& path) { return parse_spec(read_file(path)); }

// ---- serialization --------------------------------------------------------

inline json int_matrix_json(const RatMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (const Rat& v : m.row(i)) {
      if (!v.is_integer() || !v.num().fits_slong_p()) throw Error(ErrorKind::SchemaError, "non-integer entry in spec matrix");
      row.push_back(v.num().get_si());
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

inline json to_json(const SpecFile& s) {
  json j;
  j["c"] = s.c;
  j["n"] = s.n;
  j["r"] = s.r;
  j["terms"] = json::array();
  for (const auto& [B, C] : s.terms) j["terms"].push_back({{"B", int_matrix_json(B)}, {"C", int_matrix_json(C)}});
  if (s.name) j["name"] = *s.name;
  return j;
}

inline json to_json(const Rat& r) { return r.str(); }

inline json to_json(const RatMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (const Rat& v : m.row(i)) row.push_back(v.str());
    rows.push_back(std::move(row));
  }
  return rows;
}

inline json to_json(std::span<const Rat> v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(x.str());
  return a;
}

inline json int_vector_json(const std::vector<Int>& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(x.fits_slong_p() ? json(x.get_si()) : json(x.get_str()));
  return a;
}

inline json to_json(const LinFormMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_string(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

inline json to_json(const DegeneracyWitness& w) { return {{"h", int_vector_json(w.h)}, {"v", int_vector_json(w.v)}}; }

inline json to_json(const ConditionReport& r) {
  json j;
  j["c"] = r.c;
  j["n"] = r.n;
  j["r"] = r.r;
  j["rank_A"] = r.rank_A;
  j["a1_expected"] = r.a1_expected;
  j["a1_ok"] = r.a1_ok;
  j["a2_status"] = to_string(r.a2_status);
  if (r.a2_status == NondegStatus::SampledNoCounterexample) j["a2_samples"] = r.a2_samples;
  if (r.a2_witness) j["a2_witness"] = to_json(*r.a2_witness);
  j["a3_ok"] = r.a3_ok;
  j["q_subset"] = r.q_subset;
  j["precheck"] = to_string(r.precheck);
  json flags = json::array();
  for (auto p : r.precheck_flags) flags.push_back(to_string(p));
  j["precheck_flags"] = flags;
  j["warnings"] = r.warnings;
  j["pass"] = r.all_ok();
  return j;
}

inline json to_json(const ScanReport& r) {
  json w = json::array();
  for (const auto& x : r.witnesses) w.push_back({{"P", to_json(std::span<const Rat>(x.P))}, {"Q", to_json(std::span<const Rat>(x.Q))}, {"det", x.det.str()}});
  return {{"samples", r.samples}, {"trivial", r.trivial}, {"jumping", r.jumping}, {"degenerate", r.degenerate}, {"witnesses", w}};
}

inline json to_json(const SplitVerdict& v) {
  json j{{"verdict", to_string(v.verdict)}, {"det", v.determinant.str()}, {"gamma", to_json(v.gamma)}};
  if (v.pfaffian) j["pfaffian"] = v.pfaffian->str();
  return j;
}

inline json to_json(const KroneckerReport& k) {
  json j{{"K1", to_string(k.k1)},
         {"K2", to_string(k.k2)},
         {"rank_gamma", k.rank_gamma},
         {"expected_2c_plus_r", k.expected_2c_plus_r},
         {"K3_ok", k.k3_ok()},
         {"printed_2n_plus_r", k.printed_2n_plus_r},
         {"K3_printed_ok", k.k3_printed_ok()}};
  if (k.k1_witness) j["K1_witness"] = to_json(*k.k1_witness);
  if (k.samples) j["samples"] = k.samples;
  return j;
}

/// {"(i,k)": {"dim": d, "cert": "Direct"|"ForcedZero"|"SerreDual"}}
inline json to_json(const CohomTable& t) {
  json j = json::object();
  for (const auto& [key, e] : t.entries)
    j["(" + std::to_string(key.first) + "," + std::to_string(key.second) + ")"] = {{"dim", e.dim}, {"cert", to_string(e.cert)}};
  return j;
}

inline json to_json(const InstantonReport& r) {
  json checks = json::array();
  for (const auto& c : r.checks) checks.push_back({{"name", c.name}, {"ok", c.ok}});
  return {{"checks", checks}, {"charge", r.charge}, {"rank_E", r.rank_E}, {"table", to_json(r.table)},
          {"discrepancies", r.table.discrepancies}, {"pass", r.ok()}};
}

inline json to_json(const ModuliInfo& m) {
  return {{"c", m.c}, {"n", m.n}, {"dim", m.dim}, {"ambient_dim", m.ambient_dim}, {"group_dim", m.group_dim},
          {"possibly_empty", m.possibly_empty()}};
}

inline json to_json(const OrbitProbeReport& r) {
  return {{"trials", r.trials}, {"panel_lines", r.panel_lines}, {"violations", r.violations}};
}

// ---- generator -------------------------------------------------------------

enum class GenMode { Pure, Sum };

struct Generated {
  SpecFile spec;
  std::size_t attempts = 0;
};

inline constexpr std::size_t kMaxGenerationAttempts = 100;

namespace detail {

/// Block-diagonal skew matrix with 2x2 blocks [[0, λ], [-λ, 0]], λ ≠ 0.
inline RatMatrix block_skew(std::size_t dim, Rng& rng) {
  RatMatrix m(dim, dim);
  for (std::size_t b = 0; b + 1 < dim; b += 2) {
    long lambda = 0;
    while (lambda == 0) lambda = rng.uniform(-9, 9);
    m(b, b + 1) = lambda;
    m(b + 1, b) = -lambda;
  }
  return m;
}

inline RatMatrix random_skew(std::size_t dim, Rng& rng, long box) {
  RatMatrix m(dim, dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = i + 1; j < dim; ++j) {
      m(i, j) = rng.uniform(-box, box);
      m(j, i) = -m(i, j);
    }
  return m;
}

}  // namespace detail

/// Random maximal-rank candidate (r = (n-1)c). Pure mode needs c and n+1
/// even: a skew matrix of odd order is singular, so B ⊗ C would be degenerate.
inline Generated generate(std::size_t c, std::size_t n, GenMode mode, std::uint64_t seed, std::size_t sum_terms = 3) {
  if (c < 3 || n < 3) throw Error(ErrorKind::HypothesisViolation, "generation needs c >= 3 and n >= 3");
  if (mode == GenMode::Pure && (c % 2 != 0 || (n + 1) % 2 != 0))
    throw Error(ErrorKind::HypothesisViolation,
                "pure mode needs even c and odd n: a skew matrix of odd order (" +
                    std::string(c % 2 ? "B is " + std::to_string(c) + "x" + std::to_string(c)
                                      : "C is " + std::to_string(n + 1) + "x" + std::to_string(n + 1)) +
                    ") is singular, so B (x) C is degenerate; use sum mode");
  if (mode == GenMode::Sum && sum_terms < 1) throw Error(ErrorKind::UsageError, "sum mode needs at least one term");
  const std::size_t r = (n - 1) * c;
  for (std::size_t attempt = 1; attempt <= kMaxGenerationAttempts; ++attempt) {
    Rng rng(seed, attempt);
    SpecFile s;
    s.c = c;
    s.n = n;
    s.r = r;
    if (mode == GenMode::Pure) {
      s.terms.push_back({detail::block_skew(c, rng), detail::block_skew(n + 1, rng)});
    } else {
      for (std::size_t t = 0; t < sum_terms; ++t) s.terms.push_back({detail::random_skew(c, rng, 2), detail::random_skew(n + 1, rng, 2)});
    }
    s.name = std::string(mode == GenMode::Pure ? "pure" : "sum") + "-c" + std::to_string(c) + "-n" + std::to_string(n) +
             "-seed" + std::to_string(seed) + "-attempt" + std::to_string(attempt);
    if (check_conditions(flatten(s.tensor()), r).all_ok()) return {std::move(s), attempt};
  }
  throw Error(ErrorKind::GenerationExhausted, "no verified spec within " + std::to_string(kMaxGenerationAttempts) + " attempts");
}

/// 64-bit FNV-1a, used as the input fingerprint in reports.
inline std::string fnv1a_hex(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : bytes) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  std::ostringstream os;
  os << std::hex;
  os.width(16);
  os.fill('0');
  os << h;
  return os.str();
}

}  // namespace oinst
