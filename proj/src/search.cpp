#include "sumcolour/search.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>
#include <optional>
#include <thread>

#include "sumcolour/errors.hpp"
#include "sumcolour/registry.hpp"

namespace sumcolour {

std::string to_string(SumMode mode) { return mode == SumMode::kX ? "kX" : "FSk"; }

SumMode parse_sum_mode(std::string_view text) {
  if (text == "kX") return SumMode::kX;
  if (text == "FSk") return SumMode::FSk;
  throw Error(Errc::InvalidArgument, "mode must be kX or FSk, got '" + std::string(text) + "'");
}

std::string to_string(SearchStatus status) {
  switch (status) {
    case SearchStatus::Found: return "found";
    case SearchStatus::Exhausted: return "exhausted";
    case SearchStatus::BudgetExceeded: return "budget_exceeded";
  }
  return "?";
}

SearchStatus parse_search_status(std::string_view text) {
  if (text == "found") return SearchStatus::Found;
  if (text == "exhausted") return SearchStatus::Exhausted;
  if (text == "budget_exceeded") return SearchStatus::BudgetExceeded;
  throw Error(Errc::InvalidArgument, "unknown status '" + std::string(text) + "'");
}

Integer height(const Rational& q) {
  Integer a = abs(q.num());
  return a > q.den() ? a : q.den();
}

namespace {

Integer vec_height(const QVec& x) {
  Integer h = 0;
  for (const auto& c : x.coords()) h = std::max(h, height(c));
  return h;
}

}  // namespace

bool in_ground(const QVec& x, const Ground& g) {
  if (x.dim() != g.dim) return false;
  for (const auto& c : x.coords()) {
    if (abs(c.num()) > g.height || c.den() > g.height) return false;
  }
  return true;
}

std::vector<QVec> enumerate_ground(unsigned H, std::size_t dim) {
  if (H < 1) throw Error(Errc::InvalidArgument, "height must be >= 1");
  if (dim < 1) throw Error(Errc::InvalidArgument, "dimension must be >= 1");
  std::vector<Rational> line;
  for (long b = 1; b <= static_cast<long>(H); ++b) {
    for (long a = -static_cast<long>(H); a <= static_cast<long>(H); ++a) {
      if (std::gcd(a, b) == 1) line.emplace_back(Integer(a), Integer(b));
    }
  }
  std::sort(line.begin(), line.end());
  const double total = std::pow(static_cast<double>(line.size()), static_cast<double>(dim));
  if (total > 5e6) throw Error(Errc::InvalidArgument, "ground set too large");

  std::vector<QVec> out;
  std::vector<std::size_t> idx(dim, 0);
  for (;;) {
    std::vector<Rational> coords;
    coords.reserve(dim);
    for (std::size_t i : idx) coords.push_back(line[i]);
    out.emplace_back(std::move(coords));
    std::size_t pos = dim;
    while (pos > 0 && idx[pos - 1] + 1 == line.size()) idx[--pos] = 0;
    if (pos == 0) break;
    ++idx[pos - 1];
  }
  std::vector<std::pair<Integer, QVec>> keyed;
  keyed.reserve(out.size());
  for (auto& v : out) keyed.emplace_back(vec_height(v), std::move(v));
  std::sort(keyed.begin(), keyed.end());
  out.clear();
  for (auto& [h, v] : keyed) out.push_back(std::move(v));
  return out;
}

namespace {

// Sums that contain X[last] at least once and otherwise use X[0..last).
// Calls emit(sum) for each; stops early when emit returns false.
template <class Emit>
bool new_sums(const std::vector<QVec>& X, std::size_t last, SumMode mode, std::uint64_t k,
              Emit&& emit) {
  const QVec& e = X[last];
  if (mode == SumMode::FSk) {
    if (k - 1 > last) return true;
    // (k-1)-subsets of X[0..last).
    std::vector<std::size_t> idx(k - 1);
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    for (;;) {
      QVec s = e;
      for (std::size_t i : idx) s += X[i];
      if (!emit(s)) return false;
      std::size_t pos = idx.size();
      while (pos > 0 && idx[pos - 1] == last - (idx.size() - pos) - 1) --pos;
      if (pos == 0) return true;
      ++idx[pos - 1];
      for (std::size_t i = pos; i < idx.size(); ++i) idx[i] = idx[i - 1] + 1;
    }
  }
  // kX: j >= 1 copies of e plus a (k-j)-multiset of X[0..last).
  for (std::uint64_t j = 1; j <= k; ++j) {
    const QVec base = e.scaled(Rational(static_cast<long>(j)));
    const std::size_t r = k - j;
    if (r == 0) {
      if (!emit(base)) return false;
      continue;
    }
    if (last == 0) continue;
    std::vector<std::size_t> idx(r, 0);
    for (;;) {
      QVec s = base;
      for (std::size_t i : idx) s += X[i];
      if (!emit(s)) return false;
      std::size_t pos = r;
      while (pos > 0 && idx[pos - 1] == last - 1) --pos;
      if (pos == 0) break;
      ++idx[pos - 1];
      for (std::size_t i = pos; i < r; ++i) idx[i] = idx[pos - 1];
    }
  }
  return true;
}

struct Improvement {
  std::uint64_t node;
  std::vector<std::size_t> members;
};

struct BranchTrace {
  std::uint64_t nodes = 0;                  // nodes used, capped at the budget
  bool complete = false;                    // subtree fully explored within the cap
  std::optional<std::uint64_t> found_at;    // node at which max_size was reached
  std::vector<Improvement> improvements;    // strictly increasing sizes
};

class BranchRunner {
 public:
  BranchRunner(const Colouring& colouring, const std::vector<QVec>& ground, const SearchOptions& opt)
      : colouring_(colouring), ground_(ground), opt_(opt) {}

  BranchTrace run(std::uint32_t colour, std::size_t first) {
    trace_ = {};
    colour_ = colour;
    members_.clear();
    X_.clear();
    if (try_add(first)) {
      if (!trace_.found_at) descend(first + 1);
    }
    trace_.complete = trace_.nodes <= opt_.budget && !aborted_;
    if (aborted_) trace_.nodes = opt_.budget + 1;
    aborted_ = false;
    return trace_;
  }

 private:
  std::uint32_t colour_of(const QVec& x) {
    auto it = cache_.find(x);
    if (it != cache_.end()) return it->second;
    const std::uint32_t c = colouring_(x);
    cache_.emplace(x, c);
    return c;
  }

  // One node: attempt to extend X by ground[i]. Leaves X extended on success.
  bool try_add(std::size_t i) {
    if (trace_.nodes == opt_.budget) {
      aborted_ = true;
      return false;
    }
    ++trace_.nodes;
    X_.push_back(ground_[i]);
    const bool ok = new_sums(X_, X_.size() - 1, opt_.mode, opt_.k,
                             [&](const QVec& s) { return colour_of(s) == colour_; });
    if (!ok) {
      X_.pop_back();
      return false;
    }
    members_.push_back(i);
    const std::size_t best = trace_.improvements.empty() ? 0 : trace_.improvements.back().members.size();
    if (members_.size() > best) trace_.improvements.push_back({trace_.nodes, members_});
    if (members_.size() == opt_.max_size) trace_.found_at = trace_.nodes;
    return true;
  }

  void descend(std::size_t from) {
    for (std::size_t i = from; i < ground_.size(); ++i) {
      if (aborted_ || trace_.found_at) return;
      if (try_add(i)) {
        if (trace_.found_at) return;
        descend(i + 1);
        X_.pop_back();
        members_.pop_back();
      }
    }
  }

  const Colouring& colouring_;
  const std::vector<QVec>& ground_;
  const SearchOptions& opt_;
  std::map<QVec, std::uint32_t> cache_;
  BranchTrace trace_;
  std::uint32_t colour_ = 0;
  std::vector<std::size_t> members_;
  std::vector<QVec> X_;
  bool aborted_ = false;
};

}  // namespace

std::vector<QVec> required_sums(const std::vector<QVec>& X, SumMode mode, std::uint64_t k) {
  std::vector<QVec> out;
  for (std::size_t last = 0; last < X.size(); ++last) {
    std::vector<QVec> prefix(X.begin(), X.begin() + static_cast<std::ptrdiff_t>(last) + 1);
    new_sums(prefix, last, mode, k, [&](const QVec& s) {
      out.push_back(s);
      return true;
    });
  }
  return out;
}

SearchResult search_mono(const SearchOptions& opt) {
  if (opt.max_size < 1) throw Error(Errc::InvalidArgument, "max_size must be >= 1");
  if (opt.k < 1) throw Error(Errc::InvalidArgument, "k must be >= 1");
  const Colouring colouring = resolve_colouring(opt.colouring);
  if (colouring.dim != 0 && colouring.dim != opt.ground.dim) {
    throw Error(Errc::InvalidArgument, colouring.id + " needs dimension " + std::to_string(colouring.dim));
  }
  const std::vector<QVec> ground = enumerate_ground(opt.ground.height, opt.ground.dim);
  const std::size_t n = ground.size();
  const std::size_t branches = static_cast<std::size_t>(colouring.colours) * n;

  std::vector<std::optional<BranchTrace>> traces(branches);
  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> first_found{std::numeric_limits<std::size_t>::max()};
  auto work = [&] {
    BranchRunner runner(colouring, ground, opt);
    for (std::size_t b = next++; b < branches; b = next++) {
      if (b > first_found.load()) continue;
      BranchTrace t = runner.run(static_cast<std::uint32_t>(b / n), b % n);
      if (t.found_at) {
        std::size_t cur = first_found.load();
        while (b < cur && !first_found.compare_exchange_weak(cur, b)) {
        }
      }
      traces[b] = std::move(t);
    }
  };
  const unsigned threads = std::max(1U, opt.threads);
  if (threads == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work);
    for (auto& th : pool) th.join();
  }

  // Replay the branches in sequential order against one shared budget.
  SearchResult result;
  std::uint64_t used = 0;
  std::size_t best_branch = 0;
  std::vector<std::size_t> best_members;
  result.status = SearchStatus::Exhausted;
  for (std::size_t b = 0; b < branches; ++b) {
    const BranchTrace& t = *traces[b];
    const std::uint64_t remaining = opt.budget - used;
    for (const auto& imp : t.improvements) {
      if (imp.node <= remaining && imp.members.size() > best_members.size()) {
        best_members = imp.members;
        best_branch = b;
      }
    }
    if (t.found_at && *t.found_at <= remaining) {
      used += *t.found_at;
      result.status = SearchStatus::Found;
      break;
    }
    if (!t.complete || t.nodes > remaining) {
      used = opt.budget;
      result.status = SearchStatus::BudgetExceeded;
      break;
    }
    used += t.nodes;
  }

  result.nodes = used;
  result.best_size = best_members.size();
  SearchCert& cert = result.cert;
  cert.colouring = colouring.id;
  cert.mode = opt.mode;
  cert.k = opt.k;
  cert.ground = opt.ground;
  cert.max_size = opt.max_size;
  cert.budget = opt.budget;
  cert.status = result.status;
  cert.exhaustive = result.status == SearchStatus::Exhausted;
  cert.colour = best_members.empty() ? 0 : static_cast<std::uint32_t>(best_branch / n);
  for (std::size_t i : best_members) cert.witness.push_back(ground[i]);
  return result;
}

}  // namespace sumcolour
