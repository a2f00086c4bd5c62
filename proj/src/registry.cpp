#include "sumcolour/registry.hpp"

#include <memory>
#include <string>

#include "sumcolour/band.hpp"
#include "sumcolour/errors.hpp"
#include "sumcolour/stepup.hpp"
#include "sumcolour/support.hpp"

namespace sumcolour {

std::uint32_t Colouring::operator()(const QVec& x) const {
  if (dim != 0 && x.dim() != dim) {
    throw Error(Errc::InvalidArgument, id + " expects dimension " + std::to_string(dim) + ", got " +
                                           std::to_string(x.dim()));
  }
  return eval(x);
}

namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\n");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\n");
  return std::string(s.substr(b, e - b + 1));
}

std::map<std::string, std::uint64_t> parse_params(std::string_view id, std::string_view body) {
  std::map<std::string, std::uint64_t> out;
  while (!body.empty()) {
    const auto comma = body.find(',');
    const std::string item = trim(body.substr(0, comma));
    body = comma == std::string_view::npos ? std::string_view{} : body.substr(comma + 1);
    const auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0 || eq + 1 == item.size()) {
      throw Error(Errc::InvalidArgument, "bad parameter '" + item + "' in " + std::string(id));
    }
    std::size_t used = 0;
    std::uint64_t value = 0;
    try {
      value = std::stoull(item.substr(eq + 1), &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != item.size() - eq - 1 || item[eq + 1] == '-') {
      throw Error(Errc::InvalidArgument, "bad value in '" + item + "'");
    }
    if (!out.emplace(item.substr(0, eq), value).second) {
      throw Error(Errc::InvalidArgument, "repeated parameter in " + std::string(id));
    }
  }
  return out;
}

void expect_keys(const Colouring& c, std::initializer_list<const char*> keys) {
  if (c.params.size() != keys.size()) {
    throw Error(Errc::InvalidArgument, c.id + ": wrong parameter list");
  }
  for (const char* k : keys) {
    if (!c.params.contains(k)) throw Error(Errc::InvalidArgument, c.id + ": missing parameter " + k);
  }
}

}  // namespace

Colouring resolve_colouring(std::string_view id) {
  Colouring c;
  c.id = std::string(id);
  const auto colon = id.find(':');
  c.name = trim(id.substr(0, colon));
  if (colon != std::string_view::npos) c.params = parse_params(id, id.substr(colon + 1));

  if (c.name == "identity") {
    expect_keys(c, {});
    c.colours = 1;
    c.eval = [](const QVec&) { return 0U; };
  } else if (c.name == "band") {
    expect_keys(c, {"k", "m"});
    const BandParams params = band_params(c.params["k"], c.params["m"]);
    c.dim = 1;
    c.colours = static_cast<std::uint32_t>(params.modulus());
    c.eval = [params](const QVec& x) { return band_colour(params, x[0]); };
  } else if (c.name == "gamma72") {
    expect_keys(c, {"k", "m"});
    const std::uint64_t k = c.params["k"];
    if (k < 2) throw Error(Errc::InvalidArgument, "gamma72 needs k >= 2");
    if (c.params["m"] < 1) throw Error(Errc::InvalidArgument, "gamma72 needs m >= 1");
    c.dim = c.params["m"];
    c.colours = kGammaColours;
    c.eval = [k](const QVec& x) { return gamma(x, k).index(); };
  } else if (c.name == "tau144") {
    expect_keys(c, {"k"});
    const std::uint64_t k = c.params["k"];
    if (k < 2) throw Error(Errc::InvalidArgument, "tau144 needs k >= 2");
    c.colours = kTauColours;
    c.eval = [k](const QVec& x) { return tau(FinSeq(x), k).index(); };
  } else if (c.name == "psiW") {
    expect_keys(c, {"n", "seed"});
    if (c.params["n"] < 1) throw Error(Errc::InvalidArgument, "psiW needs n >= 1");
    auto order = std::make_shared<const WellOrder>(WellOrder::random(c.params["n"], c.params["seed"]));
    c.colours = 2;
    c.eval = [order](const QVec& x) { return std::uint32_t{psi_support(FinSeq(x), *order)}; };
  } else {
    throw Error(Errc::UnknownColouring, "no colouring named '" + c.name + "'");
  }
  return c;
}

QVec parse_qvec(std::string_view text) {
  std::string s = trim(text);
  if (!s.empty() && (s.front() == '(' || s.front() == '[')) {
    const char close = s.front() == '(' ? ')' : ']';
    if (s.back() != close) throw Error(Errc::InvalidArgument, "unbalanced vector '" + s + "'");
    s = s.substr(1, s.size() - 2);
  }
  std::vector<Rational> coords;
  std::string_view rest = s;
  for (;;) {
    const auto comma = rest.find(',');
    const std::string item = trim(rest.substr(0, comma));
    if (item.empty()) throw Error(Errc::InvalidArgument, "empty coordinate in '" + std::string(text) + "'");
    coords.push_back(Rational::parse(item));
    if (comma == std::string_view::npos) break;
    rest = rest.substr(comma + 1);
  }
  return QVec(std::move(coords));
}

std::string format_qvec(const QVec& x) {
  std::string out = "(";
  for (std::size_t i = 0; i < x.dim(); ++i) {
    if (i > 0) out += ", ";
    out += x[i].str();
  }
  return out + ")";
}

}  // namespace sumcolour
