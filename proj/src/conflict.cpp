#include "sumcolour/conflict.hpp"

#include <deque>
#include <mutex>
#include <shared_mutex>
#include <unordered_map>

#include <nlohmann/json.hpp>

#include "sumcolour/errors.hpp"
#include "sumcolour/phi.hpp"

namespace sumcolour {

namespace {

constexpr std::uint8_t kNoColour = 0xff;

}  // namespace

FpfFunction::FpfFunction(std::vector<std::size_t> image) : image_(std::move(image)) {
  for (std::size_t i = 0; i < image_.size(); ++i) {
    if (image_[i] >= image_.size()) {
      throw Error(Errc::InvalidArgument, "image of " + std::to_string(i) + " outside domain");
    }
    if (image_[i] == i) throw Error(Errc::FixedPointFound, "f(" + std::to_string(i) + ") = itself");
  }
}

std::vector<std::uint8_t> nofix_colour(const FpfFunction& f) {
  const std::size_t n = f.size();
  std::vector<std::vector<std::size_t>> preimages(n);
  for (std::size_t i = 0; i < n; ++i) preimages[f(i)].push_back(i);

  std::vector<std::uint8_t> colour(n, kNoColour);
  std::vector<std::uint32_t> seen(n, 0);  // walk id that first reached the vertex
  std::uint32_t walk = 0;

  for (std::size_t start = 0; start < n; ++start) {
    if (colour[start] != kNoColour) continue;
    // Follow f until a vertex repeats; it lies on the component's cycle.
    ++walk;
    std::size_t v = start;
    while (seen[v] != walk) {
      seen[v] = walk;
      v = f(v);
    }
    std::vector<std::size_t> cycle{v};
    for (std::size_t w = f(v); w != v; w = f(w)) cycle.push_back(w);
    // Rotate so the cycle starts at its earliest vertex.
    std::size_t best = 0;
    for (std::size_t i = 1; i < cycle.size(); ++i) {
      if (cycle[i] < cycle[best]) best = i;
    }
    std::rotate(cycle.begin(), cycle.begin() + static_cast<std::ptrdiff_t>(best), cycle.end());

    for (std::size_t i = 0; i < cycle.size(); ++i) colour[cycle[i]] = static_cast<std::uint8_t>(i % 2);
    if (cycle.size() % 2 == 1) colour[cycle.back()] = 2;

    std::deque<std::size_t> queue(cycle.begin(), cycle.end());
    while (!queue.empty()) {
      const std::size_t u = queue.front();
      queue.pop_front();
      for (std::size_t w : preimages[u]) {
        if (colour[w] != kNoColour) continue;
        bool used[3] = {false, false, false};
        if (colour[f(w)] != kNoColour) used[colour[f(w)]] = true;
        for (std::size_t y : preimages[w]) {
          if (colour[y] != kNoColour) used[colour[y]] = true;
        }
        std::uint8_t c = 0;
        while (used[c]) ++c;
        colour[w] = c;
        queue.push_back(w);
      }
    }
  }
  return colour;
}

unsigned r_p(std::uint64_t p, std::uint64_t k) {
  if (!is_prime(p)) throw Error(Errc::NotPrime, std::to_string(p) + " is not prime");
  if (k < 2) throw Error(Errc::InvalidArgument, "k must be >= 2");
  unsigned t = 1;
  Integer power = from_u64(p);
  const Integer bound = from_u64(k);
  while (power <= bound) {
    power *= static_cast<unsigned long>(p);
    ++t;
  }
  return t;
}

PrimeSplit prime_split(std::uint64_t k) {
  if (k < 2) throw Error(Errc::InvalidArgument, "k must be >= 2");
  return PrimeSplit{k};
}

unsigned m_p(std::uint64_t p, std::uint64_t k) {
  if (!is_prime(p)) throw Error(Errc::NotPrime, std::to_string(p) + " is not prime");
  if (k < 2) throw Error(Errc::InvalidArgument, "k must be >= 2");
  if (k % p != 0) throw Error(Errc::NotInP1, std::to_string(p) + " does not divide " + std::to_string(k));
  unsigned e = 0;
  while (k % p == 0) {
    k /= p;
    ++e;
  }
  return e;
}

PsiTable PsiTable::build(std::uint64_t p, std::uint64_t k) {
  const unsigned r = r_p(p, k);
  if (k % p == 0) throw Error(Errc::PInDividesK, std::to_string(p) + " divides " + std::to_string(k));
  const Integer modulus_z = pow_u(p, r);
  if (!fits_u64(modulus_z) || to_u64(modulus_z) > (1ULL << 32)) {
    throw Error(Errc::InvalidArgument, "residue table for p=" + std::to_string(p) + " too large");
  }
  PsiTable t;
  t.p_ = p;
  t.k_ = k;
  t.r_ = r;
  t.modulus_ = to_u64(modulus_z);

  // V = units in [1, p^r - 1], ascending; l(a) = k*a mod p^r.
  std::vector<std::uint64_t> units;
  std::vector<std::size_t> index_of(t.modulus_, 0);
  for (std::uint64_t a = 1; a < t.modulus_; ++a) {
    if (a % p == 0) continue;
    index_of[a] = units.size();
    units.push_back(a);
  }
  std::vector<std::size_t> image(units.size());
  const std::uint64_t kk = k % t.modulus_;  // modulus <= 2^32, no overflow
  for (std::size_t i = 0; i < units.size(); ++i) {
    image[i] = index_of[kk * units[i] % t.modulus_];
  }
  const auto nu = nofix_colour(FpfFunction(std::move(image)));

  t.colour_.assign(t.modulus_, kNoColour);
  for (std::size_t i = 0; i < units.size(); ++i) t.colour_[units[i]] = nu[i];
  return t;
}

std::shared_ptr<const PsiTable> PsiTable::shared(std::uint64_t p, std::uint64_t k) {
  struct KeyHash {
    std::size_t operator()(const std::pair<std::uint64_t, std::uint64_t>& key) const noexcept {
      return std::hash<std::uint64_t>{}(key.first * 0x9e3779b97f4a7c15ULL ^ key.second);
    }
  };
  static std::shared_mutex mu;
  static std::unordered_map<std::pair<std::uint64_t, std::uint64_t>, std::shared_ptr<const PsiTable>,
                            KeyHash>
      memo;
  const auto key = std::make_pair(p, k);
  {
    std::shared_lock lock(mu);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
  }
  auto built = std::make_shared<const PsiTable>(build(p, k));
  std::unique_lock lock(mu);
  return memo.emplace(key, std::move(built)).first->second;
}

std::uint8_t PsiTable::eval(const Integer& a) const {
  const unsigned long residue = mpz_fdiv_ui(a.get_mpz_t(), modulus_);
  return eval(static_cast<std::uint64_t>(residue));
}

std::uint8_t PsiTable::eval(std::uint64_t a) const {
  const std::uint8_t c = colour_[a % modulus_];
  if (c == kNoColour) throw Error(Errc::NotCoprime, std::to_string(p_) + " divides " + std::to_string(a));
  return c;
}

std::map<std::uint64_t, std::uint8_t> PsiTable::table() const {
  std::map<std::uint64_t, std::uint8_t> out;
  for (std::uint64_t a = 0; a < modulus_; ++a) {
    if (colour_[a] != kNoColour) out.emplace(a, colour_[a]);
  }
  return out;
}

nlohmann::json PsiTable::to_json() const {
  nlohmann::json table_json = nlohmann::json::object();
  for (const auto& [a, c] : table()) table_json[std::to_string(a)] = c;
  return {{"p", p_}, {"k", k_}, {"r", r_}, {"table", std::move(table_json)}};
}

std::shared_ptr<const PsiTable> psi_p(std::uint64_t p, std::uint64_t k) { return PsiTable::shared(p, k); }

std::uint8_t psi_p_eval(const PsiTable& table, const Integer& a) { return table.eval(a); }

}  // namespace sumcolour
