#include "sumcolour/certificate.hpp"

#include <openssl/evp.h>

#include <array>
#include <set>

#include "sumcolour/errors.hpp"
#include "sumcolour/registry.hpp"

namespace sumcolour {

namespace {

[[noreturn]] void malformed(const std::string& what) { throw Error(Errc::MalformedCert, what); }

const Json& field(const Json& j, const char* name) {
  if (!j.is_object()) malformed("certificate is not an object");
  auto it = j.find(name);
  if (it == j.end()) malformed(std::string("missing field '") + name + "'");
  return *it;
}

std::string get_string(const Json& j, const char* name) {
  const Json& v = field(j, name);
  if (!v.is_string()) malformed(std::string("field '") + name + "' is not a string");
  return v.get<std::string>();
}

bool non_negative(const Json& v) {
  return v.is_number_unsigned() || (v.is_number_integer() && v.get<std::int64_t>() >= 0);
}

std::uint64_t get_uint(const Json& j, const char* name) {
  const Json& v = field(j, name);
  if (!non_negative(v)) malformed(std::string("field '") + name + "' is not a non-negative integer");
  return v.get<std::uint64_t>();
}

bool get_bool(const Json& j, const char* name) {
  const Json& v = field(j, name);
  if (!v.is_boolean()) malformed(std::string("field '") + name + "' is not a boolean");
  return v.get<bool>();
}

Rational rational_from(const Json& v) {
  if (!v.is_string()) malformed("rational is not a string");
  try {
    return Rational::parse(v.get<std::string>());
  } catch (const Error& e) {
    malformed(e.what());
  }
}

Json qvec_to_json(const QVec& x) {
  Json out = Json::array();
  for (const auto& c : x.coords()) out.push_back(c.str());
  return out;
}

QVec qvec_from(const Json& v) {
  if (!v.is_array()) malformed("vector is not an array");
  std::vector<Rational> coords;
  for (const auto& c : v) coords.push_back(rational_from(c));
  return QVec(std::move(coords));
}

template <class F>
auto guarded(F&& f) {
  try {
    return f();
  } catch (const Error& e) {
    if (e.code() == Errc::MalformedCert) throw;
    malformed(e.what());
  }
}

}  // namespace

Json interval_set_to_json(const IntervalSet& Z) {
  Json out = Json::array();
  for (const auto& iv : Z.intervals()) out.push_back(Json::array({iv.lo.str(), iv.hi.str()}));
  return out;
}

IntervalSet interval_set_from_json(const Json& j) {
  if (!j.is_array()) malformed("interval list is not an array");
  std::vector<Interval> ivs;
  for (const auto& iv : j) {
    if (!iv.is_array() || iv.size() != 2) malformed("interval is not a pair");
    ivs.push_back({rational_from(iv[0]), rational_from(iv[1])});
  }
  return guarded([&] { return IntervalSet(std::move(ivs)); });
}

std::string cert_digest(const Json& cert) {
  Json body = cert;
  if (body.is_object()) body.erase("digest");
  const std::string text = body.dump();
  std::array<unsigned char, EVP_MAX_MD_SIZE> md{};
  unsigned len = 0;
  if (EVP_Digest(text.data(), text.size(), md.data(), &len, EVP_sha256(), nullptr) != 1) {
    throw Error(Errc::InvalidArgument, "sha256 failed");
  }
  static constexpr char hex[] = "0123456789abcdef";
  std::string out = "sha256:";
  for (unsigned i = 0; i < len; ++i) {
    out += hex[md[i] >> 4];
    out += hex[md[i] & 15];
  }
  return out;
}

Json to_json(const SearchCert& c) {
  Json j;
  j["type"] = "search";
  j["colouring"] = c.colouring;
  j["mode"] = to_string(c.mode);
  j["k"] = c.k;
  j["ground"] = {{"height", c.ground.height}, {"dim", c.ground.dim}};
  j["max_size"] = c.max_size;
  j["budget"] = c.budget;
  j["witness"] = Json::array();
  for (const auto& x : c.witness) j["witness"].push_back(qvec_to_json(x));
  j["colour"] = c.colour;
  j["exhaustive"] = c.exhaustive;
  j["status"] = to_string(c.status);
  j["digest"] = cert_digest(j);
  return j;
}

Json to_json(const ConstructionCert& c) {
  Json j;
  j["type"] = "construction";
  j["method"] = c.method;
  j["k"] = c.k;
  j["m"] = c.m;
  j["alpha_prefix"] = c.alpha_prefix;
  j["X"] = c.X;
  j["Z"] = interval_set_to_json(c.Z);
  j["H"] = Json::array();
  for (const auto& h : c.H) j["H"].push_back(h.str());
  j["checked_sums"] = c.checked_sums;
  j["digest"] = cert_digest(j);
  return j;
}

SearchCert search_cert_from_json(const Json& j) {
  if (get_string(j, "type") != "search") malformed("not a search certificate");
  SearchCert c;
  c.colouring = get_string(j, "colouring");
  c.mode = guarded([&] { return parse_sum_mode(get_string(j, "mode")); });
  c.k = get_uint(j, "k");
  const Json& g = field(j, "ground");
  const std::uint64_t h = get_uint(g, "height");
  if (h > 1'000'000) malformed("ground height out of range");
  c.ground.height = static_cast<unsigned>(h);
  c.ground.dim = get_uint(g, "dim");
  c.max_size = get_uint(j, "max_size");
  c.budget = get_uint(j, "budget");
  const Json& w = field(j, "witness");
  if (!w.is_array()) malformed("witness is not an array");
  for (const auto& x : w) c.witness.push_back(qvec_from(x));
  const std::uint64_t colour = get_uint(j, "colour");
  if (colour > 0xffffffffULL) malformed("colour out of range");
  c.colour = static_cast<std::uint32_t>(colour);
  c.exhaustive = get_bool(j, "exhaustive");
  c.status = guarded([&] { return parse_search_status(get_string(j, "status")); });
  return c;
}

ConstructionCert construction_cert_from_json(const Json& j) {
  if (get_string(j, "type") != "construction") malformed("not a construction certificate");
  ConstructionCert c;
  c.method = get_string(j, "method");
  c.k = get_uint(j, "k");
  const std::uint64_t m = get_uint(j, "m");
  if (m > 1'000'000) malformed("base out of range");
  c.m = static_cast<unsigned>(m);
  const Json& prefix = field(j, "alpha_prefix");
  const Json& X = field(j, "X");
  if (!prefix.is_array() || !X.is_array()) malformed("alpha_prefix and X must be arrays");
  for (const auto& d : prefix) {
    if (!non_negative(d) || d.get<std::uint64_t>() > 1'000'000) malformed("bad digit");
    c.alpha_prefix.push_back(d.get<unsigned>());
  }
  for (const auto& p : X) {
    if (!non_negative(p)) malformed("bad position");
    c.X.push_back(p.get<std::size_t>());
  }
  c.Z = interval_set_from_json(field(j, "Z"));
  const Json& H = field(j, "H");
  if (!H.is_array()) malformed("H is not an array");
  for (const auto& h : H) c.H.push_back(rational_from(h));
  c.checked_sums = get_uint(j, "checked_sums");
  return c;
}

namespace {

VerifyReport fail(std::string reason) { return {false, std::move(reason)}; }

VerifyReport verify_search(const SearchCert& c, unsigned threads) {
  Colouring colouring;
  try {
    colouring = resolve_colouring(c.colouring);
  } catch (const Error& e) {
    return fail(e.what());
  }
  if (c.k < 1) return fail("k must be >= 1");
  if (c.ground.height < 1 || c.ground.dim < 1) return fail("empty ground description");
  if (colouring.dim != 0 && colouring.dim != c.ground.dim) return fail("colouring dimension differs from ground");
  if (c.max_size < 1) return fail("max_size must be >= 1");
  if (c.colour >= colouring.colours) return fail("colour outside the colouring's range");
  if (c.witness.size() > c.max_size) return fail("witness larger than max_size");

  std::set<QVec> seen;
  for (const auto& x : c.witness) {
    if (!in_ground(x, c.ground)) return fail("witness element " + format_qvec(x) + " outside ground");
    if (!seen.insert(x).second) return fail("repeated witness element " + format_qvec(x));
  }
  for (const auto& s : required_sums(c.witness, c.mode, c.k)) {
    std::uint32_t got = 0;
    try {
      got = colouring(s);
    } catch (const Error& e) {
      return fail(e.what());
    }
    if (got != c.colour) {
      return fail("sum " + format_qvec(s) + " has colour " + std::to_string(got) + ", claimed " +
                  std::to_string(c.colour));
    }
  }

  switch (c.status) {
    case SearchStatus::Found:
      if (c.witness.size() != c.max_size) return fail("status found but witness smaller than max_size");
      if (c.exhaustive) return fail("a found search is not exhaustive");
      break;
    case SearchStatus::BudgetExceeded:
      if (c.exhaustive) return fail("budget_exceeded search claims exhaustive");
      break;
    case SearchStatus::Exhausted: {
      if (!c.exhaustive) return fail("exhausted search must be exhaustive");
      if (c.witness.size() >= c.max_size) return fail("exhausted search with a full-size witness");
      // Exhaustiveness is a claim about the whole space: rerun it.
      SearchOptions opt{c.colouring, c.mode, c.k, c.ground, c.max_size, c.budget, threads};
      const SearchResult again = search_mono(opt);
      if (again.status != SearchStatus::Exhausted || again.best_size != c.witness.size()) {
        return fail("rerun does not reproduce the exhaustive result");
      }
      break;
    }
  }
  return {true, {}};
}

VerifyReport verify_construction(const ConstructionCert& c, unsigned threads) {
  try {
    if (c.k < 1) return fail("k must be >= 1");
    if (c.m != c.k + 2) return fail("base must be k + 2");
    std::vector<Rational> H;
    if (c.method == "cylinder") {
      H = build_H(c.alpha_prefix, c.alpha_prefix.size(), c.X, c.k, c.Z, threads).H;
    } else if (c.method == "greedy") {
      if (!c.alpha_prefix.empty() || !c.X.empty()) return fail("greedy certificate with digit data");
      H = greedy_baire(c.Z, c.k, c.H.size());
    } else {
      return fail("unknown method '" + c.method + "'");
    }
    if (H != c.H) return fail("H differs from the recomputed set");
    if (auto bad = first_escaping_multiset(c.H, c.k, c.Z, threads)) return fail("a k-sum leaves Z");
    if (multiset_count(c.H.size(), c.k) != from_u64(c.checked_sums)) return fail("checked_sums is wrong");
  } catch (const Error& e) {
    return fail(e.what());
  }
  return {true, {}};
}

}  // namespace

VerifyReport verify_cert(const Json& cert, unsigned threads) {
  const std::string type = get_string(cert, "type");
  const std::string digest = get_string(cert, "digest");
  VerifyReport report;
  if (type == "search") {
    report = verify_search(search_cert_from_json(cert), threads);
  } else if (type == "construction") {
    report = verify_construction(construction_cert_from_json(cert), threads);
  } else {
    malformed("unknown certificate type '" + type + "'");
  }
  if (report.ok && digest != cert_digest(cert)) return fail("digest mismatch");
  return report;
}

VerifyReport verify_cert_text(std::string_view text, unsigned threads) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    malformed(e.what());
  }
  return verify_cert(j, threads);
}

}  // namespace sumcolour
