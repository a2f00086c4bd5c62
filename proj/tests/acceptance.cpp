// End-to-end acceptance run: one PASS/FAIL line per criterion.
#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include "sumcolour/band.hpp"
#include "sumcolour/certificate.hpp"
#include "sumcolour/conflict.hpp"
#include "sumcolour/digits.hpp"
#include "sumcolour/errors.hpp"
#include "sumcolour/phi.hpp"
#include "sumcolour/product.hpp"
#include "sumcolour/registry.hpp"
#include "sumcolour/rng.hpp"
#include "sumcolour/search.hpp"
#include "sumcolour/stepup.hpp"
#include "sumcolour/support.hpp"

using namespace sumcolour;

namespace {

// Wall-clock ceilings per criterion, in seconds.
constexpr double kLimit1 = 10;
constexpr double kLimit2 = 20;
constexpr double kLimit3 = 30;
constexpr double kLimit4 = 60;
constexpr double kLimit5 = 15;
constexpr double kLimit6 = 20;
constexpr double kLimit7BuildH = 60;
constexpr double kLimit7 = 120;
constexpr double kLimit8 = 120;

// Workload sizes.
constexpr int kPhiSamples = 10'000;
constexpr long kPhiMaxDen = 5000;
constexpr long kPhiOracleDen = 200;
constexpr int kFpfRandom = 1000;
constexpr std::size_t kFpfMaxSize = 500;
constexpr int kBandPairs = 1000;
constexpr int kThetaSamples = 10'000;
constexpr std::size_t kCaseFamilySize = 64;
constexpr std::uint64_t kCaseSeeds = 100;
constexpr int kXiSamples = 10'000;
constexpr int kChains = 1000;
constexpr int kFamilies = 1000;
constexpr std::size_t kPositiveMaxCount = 8;

struct Outcome {
  bool ok = true;
  std::string note;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      note = what;
    }
  }
};

unsigned worker_count() { return std::max(2U, std::min(8U, std::thread::hardware_concurrency())); }

// Runs body(i) for i in [0, n) over a small pool; first failure wins.
void parallel_for(std::size_t n, const std::function<void(std::size_t, Outcome&)>& body, Outcome& out) {
  std::atomic<std::size_t> next{0};
  std::vector<Outcome> local(worker_count());
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < local.size(); ++w) {
    pool.emplace_back([&, w] {
      for (std::size_t i = next++; i < n; i = next++) {
        try {
          body(i, local[w]);
        } catch (const std::exception& e) {
          local[w].require(false, e.what());
        }
        if (!local[w].ok) return;
      }
    });
  }
  for (auto& t : pool) t.join();
  for (const auto& l : local) out.require(l.ok, l.note);
}

int failures = 0;

void report(int id, const char* title, double limit, const std::function<void(Outcome&)>& body) {
  Outcome out;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    body(out);
  } catch (const std::exception& e) {
    out.require(false, std::string("exception: ") + e.what());
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  out.require(secs < limit, "took " + std::to_string(secs) + " s, limit " + std::to_string(limit) + " s");
  std::printf("criterion %d: %s  %s  [%.2f s / %.0f s]%s%s\n", id, out.ok ? "PASS" : "FAIL", title, secs, limit,
              out.ok ? "" : "  -- ", out.note.c_str());
  std::fflush(stdout);
  if (!out.ok) ++failures;
}

// ---------------------------------------------------------------------------

void criterion1(Outcome& out) {
  Rng rng(1001);
  for (int i = 0; i < kPhiSamples && out.ok; ++i) {
    const Rational x = rng.rational(1'000'000, kPhiMaxDen);
    const PhiDecomp d = decompose(x);
    out.require((x - d.value).is_integer(), "x - phi(x) not integral for " + x.str());
    for (const auto& part : d.parts) {
      const Integer pn = pow_u(part.p, part.n);
      out.require(part.a >= 1 && part.a < pn, "a out of range for " + x.str());
      out.require(valuation(part.a, part.p) == 0, "p divides a for " + x.str());
      if (x.den() <= kPhiOracleDen) {
        // Brute-force congruence: the unique a in [1, p^n) clearing p from the denominator.
        Integer found = 0;
        for (Integer a = 1; a < pn; ++a) {
          if (valuation((x - Rational(a, pn)).den(), part.p) == 0) {
            found = a;
            break;
          }
        }
        out.require(found == part.a, "oracle disagrees for " + x.str());
      }
    }
  }
}

bool proper(const FpfFunction& f, const std::vector<std::uint8_t>& nu) {
  for (std::size_t x = 0; x < f.size(); ++x) {
    if (nu[x] > 2 || nu[x] == nu[f(x)]) return false;
  }
  return true;
}

void criterion2(Outcome& out) {
  for (std::size_t n = 1; n <= 5 && out.ok; ++n) {
    std::size_t total = 1;
    for (std::size_t i = 0; i < n; ++i) total *= n;
    for (std::size_t code = 0; code < total; ++code) {
      std::vector<std::size_t> image(n);
      std::size_t c = code;
      bool fpf = true;
      for (std::size_t i = 0; i < n; ++i) {
        image[i] = c % n;
        c /= n;
        fpf = fpf && image[i] != i;
      }
      if (!fpf) continue;
      const FpfFunction f(image);
      out.require(proper(f, nofix_colour(f)), "exhaustive case fails");
    }
  }
  Rng rng(2002);
  for (int t = 0; t < kFpfRandom && out.ok; ++t) {
    const std::size_t n = 2 + rng.below(kFpfMaxSize - 1);
    std::vector<std::size_t> image(n);
    for (std::size_t i = 0; i < n; ++i) {
      image[i] = rng.below(n - 1);
      if (image[i] >= i) ++image[i];
    }
    const FpfFunction f(image);
    out.require(proper(f, nofix_colour(f)), "random case fails");
  }
  for (std::uint64_t k = 2; k <= 10; ++k) {
    for (std::uint64_t p = 2; p <= 97; ++p) {
      if (!is_prime(p) || k % p == 0) continue;
      const auto t = psi_p(p, k);
      for (std::uint64_t a = 1; a <= t->modulus(); ++a) {
        if (a % p == 0) continue;
        out.require(t->eval(a) != t->eval(k * a % t->modulus()),
                    "psi_p fails p=" + std::to_string(p) + " k=" + std::to_string(k));
      }
    }
  }
}

// Indices i in [0, 2^20) map to x = lo * (1 + (base - 1) i / 2^20); band_of is
// monotone in i, so the in-band indices form one range.
struct BandSampler {
  Rational lo;
  Integer width;
  Integer first, last;
  bool empty = false;
  static constexpr unsigned long kGrid = 1UL << 20;

  Rational at(const Integer& i) const { return lo * (Rational(1) + Rational(i * width, Integer(kGrid))); }

  BandSampler(const BandParams& p, BandIndex t) {
    const Integer base(static_cast<unsigned long>(p.base()));
    const auto root = static_cast<BandIndex>(p.root());
    const BandIndex e = t >= 0 ? t / root : -((-t + root - 1) / root);
    lo = e >= 0 ? Rational(pow(base, static_cast<unsigned long>(e)))
                : Rational(Integer(1), pow(base, static_cast<unsigned long>(-e)));
    width = base - 1;
    auto first_at_least = [&](BandIndex band) {
      Integer a = 0, b = kGrid;  // answer in [a, b]
      while (a < b) {
        const Integer mid = (a + b) / 2;
        if (band_of(p, at(mid)) >= band) b = mid; else a = mid + 1;
      }
      return a;
    };
    first = first_at_least(t);
    last = first_at_least(t + 1) - 1;
    empty = last < first;
  }
};

void criterion3(Outcome& out) {
  struct Job {
    BandParams params;
    BandIndex t;
  };
  std::vector<Job> jobs;
  for (std::uint64_t k = 2; k <= 4; ++k) {
    for (std::uint64_t m = k + 1; m <= 9; ++m) {
      const BandParams p = band_params(k, m);
      out.require(p.v >= static_cast<BandIndex>(p.u) + 1, "v < u+1");
      out.require(0 < p.v - static_cast<BandIndex>(p.u) && p.v - static_cast<BandIndex>(p.u) < p.l - 1,
                  "0 < v-u < l-1 fails");
      for (BandIndex t = -20; t <= 20; ++t) jobs.push_back({p, t});
    }
  }
  parallel_for(jobs.size(), [&](std::size_t j, Outcome& o) {
    const auto& [p, t] = jobs[j];
    const BandSampler s(p, t);
    o.require(!s.empty && s.last - s.first + 1 >= static_cast<long>(p.m), "band too thin to sample");
    if (!o.ok) return;
    Rng rng(3000 + j);
    const std::uint64_t span = Integer(s.last - s.first + 1).get_ui();
    for (int trial = 0; trial < kBandPairs && o.ok; ++trial) {
      std::set<std::uint64_t> picks;
      while (picks.size() < p.m) picks.insert(rng.below(span));
      std::vector<Rational> F;
      for (std::uint64_t i : picks) F.push_back(s.at(s.first + i));
      rng.shuffle(F);
      const std::vector<Rational> H(F.begin(), F.begin() + static_cast<std::ptrdiff_t>(p.k));
      o.require(band_property_check(p, t, F, H),
                "band property fails k=" + std::to_string(p.k) + " m=" + std::to_string(p.m));
    }
  }, out);
}

QVec random_qvec(Rng& rng, std::size_t m, std::int64_t h, bool nonzero) {
  for (;;) {
    std::vector<Rational> c;
    for (std::size_t i = 0; i < m; ++i) c.push_back(rng.rational(h, h));
    QVec v(std::move(c));
    if (!nonzero || !v.is_zero()) return v;
  }
}

void criterion4(Outcome& out) {
  Rng rng(4004);
  for (int i = 0; i < kThetaSamples && out.ok; ++i) {
    const std::uint64_t k = 2 + rng.below(4);
    const QVec x = random_qvec(rng, 1 + rng.below(4), 500, true);
    const auto a = gamma(x, k).theta;
    const auto b = gamma(x.scaled(Rational(static_cast<long>(k))), k).theta;
    out.require(b == (a + 2) % 4, "theta shift law fails");
  }

  struct Job {
    GammaCase c;
    std::size_t m;
    std::uint64_t k;
    std::uint64_t seed;
  };
  std::vector<Job> jobs;
  for (GammaCase c : {GammaCase::I, GammaCase::II, GammaCase::III, GammaCase::IV})
    for (std::uint64_t k : {2ULL, 3ULL})
      for (std::size_t m = 1; m <= 3; ++m)
        for (std::uint64_t seed = 0; seed < kCaseSeeds; ++seed) jobs.push_back({c, m, k, seed});
  parallel_for(jobs.size(), [&](std::size_t j, Outcome& o) {
    const Job& job = jobs[j];
    const auto X = case_generator(job.c, job.m, job.k, kCaseFamilySize, job.seed);
    Rng r(job.seed * 31 + j);
    const QVec u = random_qvec(r, job.m, 10, false);
    const QVec w = separate(u, X, job.k);
    o.require(gamma(u + w, job.k) != gamma(w.scaled(Rational(static_cast<long>(job.k))), job.k),
              "separate returned a non-witness");
  }, out);

  std::set<std::uint32_t> codes;
  for (std::uint8_t f = 0; f < 3; ++f)
    for (std::uint8_t g = 0; g < 3; ++g)
      for (std::uint8_t h = 0; h < 2; ++h)
        for (std::uint8_t th = 0; th < 4; ++th) codes.insert(GammaColour{f, g, h, th}.index());
  out.require(codes.size() == 72 && *codes.rbegin() == 71 && kGammaColours == 3U * 3U * 2U * 4U,
              "gamma encoding is not exactly 72 values");
  for (int i = 0; i < 2000 && out.ok; ++i) {
    const GammaColour c = gamma(random_qvec(rng, 1 + rng.below(3), 300, false), 2 + rng.below(5));
    out.require(c.f < 3 && c.g < 3 && c.h < 2 && c.theta < 4 && c.index() < 72, "gamma component out of range");
  }
}

void criterion5(Outcome& out) {
  Rng rng(5005);
  for (int i = 0; i < kXiSamples && out.ok; ++i) {
    const std::uint64_t k = 2 + rng.below(9);
    const Rational t = rng.nonzero_rational(1'000'000, 1'000'000);
    out.require(xi(t, k) != xi(t * Rational(static_cast<long>(k)), k), "xi flip law fails");
  }
  for (std::uint64_t k = 2; k <= 4; ++k) {
    for (int c = 0; c < kChains && out.ok; ++c) {
      std::vector<FinSeq> xs;
      std::size_t mu = rng.below(3);
      for (std::uint64_t j = 0; j < k; ++j) {
        FinSeq x;
        for (std::size_t t = 0; t < mu; ++t) {
          if (rng.coin()) x.set(t, rng.rational(60, 60));
        }
        x.set(mu, rng.nonzero_rational(60, 60));
        xs.push_back(std::move(x));
        mu += 1 + rng.below(3);
      }
      out.require(chain_check(xs, k), "chain_check false");
    }
  }
  out.require(kTauColours == 144U && 144U == 16U * 9U, "tau range is not 2^4 * 3^2");
  std::set<std::uint32_t> codes;
  for (std::uint32_t inner = 0; inner < kGammaColours; ++inner)
    for (std::uint8_t x = 0; x < 2; ++x) codes.insert(TauColour{inner, x}.index());
  out.require(codes.size() == 144 && *codes.rbegin() == 143, "tau encoding not injective into [0,144)");
  for (int i = 0; i < 2000 && out.ok; ++i) {
    FinSeq x;
    for (std::size_t t = 0; t < 6; ++t) {
      if (rng.coin()) x.set(t, rng.rational(80, 80));
    }
    out.require(tau(x, 2 + rng.below(3)).index() < 144, "tau index out of range");
  }
}

std::size_t l_index(const HVec& v, std::size_t l) {
  std::size_t t = 0;
  for (const auto& [i, c] : v.entries()) {
    if (++t == l) return i;
  }
  return 0;
}

void criterion6(Outcome& out) {
  int done = 0;
  std::uint64_t seed = 0;
  const std::uint64_t max_seed = 50 * kFamilies;
  while (done < kFamilies && out.ok && seed < max_seed) {
    Rng rng(seed);
    const std::uint64_t k = 2 + rng.below(3);
    const std::size_t m = 1 + rng.below(4);
    const std::size_t l = 1 + rng.below(m);
    std::set<std::size_t> shared;
    for (std::size_t t = 1; t <= m; ++t) {
      if (t != l && rng.coin()) shared.insert(t);
    }
    const WellOrder W = WellOrder::random(50, rng.next());
    const FamilySpec shape{50, m, l, shared, k, static_cast<std::size_t>(k + 4)};
    ++seed;
    std::vector<HVec> fam;
    try {
      fam = family_generator(shape, seed, W);
    } catch (const Error& e) {
      out.require(e.code() == Errc::TooSmallIndexSpace, e.what());
      continue;
    }
    const std::size_t nfixed = k - 2;
    std::optional<std::pair<std::size_t, std::size_t>> xy, wz;
    for (std::size_t a = nfixed; a < fam.size(); ++a) {
      for (std::size_t b = a + 1; b < fam.size(); ++b) {
        const std::size_t al = l_index(fam[a], l), bl = l_index(fam[b], l);
        bool below = true;
        for (std::size_t f = 0; f < nfixed; ++f) {
          const std::size_t fl = l_index(fam[f], l);
          below = below && W.before(fl, al) && W.before(fl, bl);
        }
        if (!below) continue;
        if (!xy && W.before(al, bl)) xy = {a, b};
        if (!wz && W.before(bl, al)) wz = {a, b};
      }
    }
    if (!xy || !wz) continue;
    const std::vector<HVec> fixed(fam.begin(), fam.begin() + static_cast<std::ptrdiff_t>(nfixed));
    const auto r = quadruple_check(fam, fam[xy->first], fam[xy->second], fam[wz->first], fam[wz->second], W, k, fixed);
    out.require(r.separated, "quadruple not separated at seed " + std::to_string(seed));
    out.require(r.left_xy == r.left_wz + 1, "left-of-max counts do not differ by one");
    ++done;
  }
  out.require(done == kFamilies, "only " + std::to_string(done) + " families checked");

  for (std::uint64_t s = 0; s < 50 && out.ok; ++s) {
    const WellOrder W = WellOrder::random(60, 600 + s);
    for (std::uint64_t k = 2; k <= 4; ++k) {
      for (std::size_t count = 1; count <= kPositiveMaxCount; ++count) {
        std::optional<std::vector<HVec>> fam;
        for (std::size_t j = 0; j < 60 && !fam; ++j) {
          try {
            fam = positive_family(W, j, k, count);
          } catch (const Error&) {
          }
        }
        out.require(fam.has_value(), "no positive family");
        if (!fam || k > count) continue;
        std::vector<bool> pick(count, false);
        std::fill(pick.end() - static_cast<std::ptrdiff_t>(k), pick.end(), true);
        do {
          HVec sum;
          for (std::size_t i = 0; i < count; ++i)
            if (pick[i]) sum += (*fam)[i];
          out.require(psi_support(sum, W) == 1, "positive family not monochromatic");
        } while (std::next_permutation(pick.begin(), pick.end()));
      }
    }
  }
}

CylinderUnion brute_core(const CylinderUnion& S, std::size_t pos) {
  const std::size_t depth = std::max(S.depth(), pos);
  CylinderUnion acc = S.refine(depth);
  for (unsigned c = 1; c < S.base(); ++c) {
    std::vector<unsigned> eta(depth, 0);
    eta[pos - 1] = c;
    acc = acc.intersect(S.translate(eta));
  }
  return acc;
}

void criterion7(Outcome& out, std::vector<Json>& certs) {
  const auto Z = IntervalSet::open(Rational::parse("1/4"), Rational::parse("1/2"));
  const auto t0 = std::chrono::steady_clock::now();
  const CylinderHit hit = find_cylinder_in(Z, 4);
  std::vector<std::size_t> X;
  for (std::size_t t = 1; t <= 10; ++t) X.push_back(hit.depth + t);
  const ConstructionCert cert = build_H(hit.prefix, hit.depth, X, 2, Z, worker_count());
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  out.require(secs < kLimit7BuildH, "build_H too slow");
  out.require(cert.H.size() == 1024, "H does not have 1024 elements");
  out.require(cert.checked_sums == 524'800, "checked_sums is not 524800");
  // Independent recount of every pair sum.
  std::size_t inside = 0;
  for (std::size_t i = 0; i < cert.H.size(); ++i)
    for (std::size_t j = i; j < cert.H.size(); ++j) inside += Z.contains(cert.H[i] + cert.H[j]) ? 1 : 0;
  out.require(inside == 524'800, "a pair sum leaves Z");
  certs.push_back(to_json(cert));

  const auto half = IntervalSet::open(Rational(0), Rational::parse("1/2"));
  const auto ys = greedy_baire(half, 2, 20);
  std::size_t sums = 0;
  for (std::size_t i = 0; i < ys.size(); ++i)
    for (std::size_t j = i; j < ys.size(); ++j) sums += half.contains(ys[i] + ys[j]) ? 1 : 0;
  out.require(sums == 210, "greedy sums outside Z");
  out.require(std::vector<Rational>(ys.begin(), ys.begin() + 3) ==
                  std::vector<Rational>{Rational::parse("1/5"), Rational::parse("1/6"), Rational::parse("1/7")},
              "greedy prefix is not [1/5, 1/6, 1/7]");
  ConstructionCert g;
  g.method = "greedy";
  g.k = 2;
  g.m = 4;
  g.Z = half;
  g.H = ys;
  g.checked_sums = 210;
  certs.push_back(to_json(g));

  // Cylinder algebra: every subset when the word space is tiny, seeded subsets otherwise;
  // every translation vector and every position.
  Rng rng(7007);
  for (unsigned m = 2; m <= 5 && out.ok; ++m) {
    for (std::size_t depth = 1; depth <= 6 && out.ok; ++depth) {
      std::uint64_t words = 1;
      for (std::size_t i = 0; i < depth; ++i) words *= m;
      std::vector<CylinderUnion> sets;
      if (words <= 9) {
        for (std::uint64_t mask = 0; mask < (1ULL << words); ++mask) {
          std::vector<std::uint64_t> codes;
          for (std::uint64_t c = 0; c < words; ++c)
            if ((mask >> c) & 1U) codes.push_back(c);
          sets.push_back(CylinderUnion::from_codes(m, depth, codes));
        }
      } else {
        for (int s = 0; s < 6; ++s) {
          std::vector<std::uint64_t> codes;
          const std::uint64_t density = 1 + rng.below(4);
          for (std::uint64_t c = 0; c < words; ++c)
            if (rng.below(5) < density) codes.push_back(c);
          sets.push_back(CylinderUnion::from_codes(m, depth, codes));
        }
      }
      const bool all_eta = words <= 256;
      for (const auto& S : sets) {
        const std::uint64_t n_eta = all_eta ? words : 24;
        for (std::uint64_t e = 0; e < n_eta; ++e) {
          std::vector<unsigned> eta(depth);
          std::uint64_t code = all_eta ? e : rng.below(words);
          for (std::size_t i = depth; i > 0; --i) {
            eta[i - 1] = static_cast<unsigned>(code % m);
            code /= m;
          }
          out.require(translate_digit(S, eta).measure() == S.measure(), "translation changed the measure");
        }
        for (std::size_t pos = 1; pos <= depth + 1; ++pos) {
          const auto core = robust_core(S, pos);
          out.require(core.subset_of(S) && core == brute_core(S, pos), "robust_core disagrees with brute force");
        }
      }
    }
  }
}

void criterion8(Outcome& out, std::vector<Json>& certs) {
  const std::vector<SearchOptions> suite = {
      {"gamma72:k=2,m=1", SumMode::kX, 2, {4, 1}, 8, 400'000, 1},
      {"gamma72:k=3,m=1", SumMode::FSk, 3, {3, 1}, 6, 200'000, 1},
      {"band:k=2,m=3", SumMode::FSk, 2, {1, 1}, 2, 10'000, 1},
      {"band:k=1,m=3", SumMode::kX, 2, {4, 1}, 6, 200'000, 1},
      {"tau144:k=2", SumMode::kX, 2, {2, 2}, 5, 100'000, 1},
      {"psiW:n=2,seed=3", SumMode::FSk, 2, {2, 2}, 6, 100'000, 1},
      {"identity", SumMode::kX, 3, {2, 1}, 7, 10'000, 1},
  };
  for (const auto& base : suite) {
    const SearchResult one = search_mono(base);
    const std::string ref = to_json(one.cert).dump();
    for (unsigned t : {2U, 4U, worker_count()}) {
      SearchOptions o = base;
      o.threads = t;
      const SearchResult many = search_mono(o);
      out.require(to_json(many.cert).dump() == ref && many.nodes == one.nodes,
                  "search output differs with " + std::to_string(t) + " workers on " + base.colouring);
    }
    certs.push_back(to_json(one.cert));
  }

  for (const auto& cert : certs) {
    const VerifyReport r = verify_cert(cert, worker_count());
    out.require(r.ok, "emitted certificate failed: " + r.reason);
  }

  // Single-field tampering: every field, every array element of the payload.
  auto detected = [&](const Json& j) {
    try {
      return !verify_cert(j, worker_count()).ok;
    } catch (const Error& e) {
      return e.code() == Errc::MalformedCert;
    }
  };
  auto mutate = [](Json& v) {
    if (v.is_string()) {
      const std::string s = v.get<std::string>();
      v = s.find('/') != std::string::npos ? Json(Rational(Rational::parse(s) + Rational(1)).str()) : Json(s + "x");
    } else if (v.is_boolean()) {
      v = !v.get<bool>();
    } else if (v.is_number_unsigned()) {
      v = v.get<std::uint64_t>() + 1;
    } else if (v.is_array()) {
      if (v.empty()) v.push_back(0); else v.erase(v.size() - 1);
    } else if (v.is_object()) {
      v["extra"] = 1;
    }
  };
  std::size_t tampered = 0;
  for (std::size_t c = 0; c < certs.size() && out.ok; ++c) {
    const Json& cert = certs[c];
    for (auto it = cert.begin(); it != cert.end(); ++it) {
      Json t = cert;
      mutate(t[it.key()]);
      out.require(detected(t), "tampering with '" + it.key() + "' went unnoticed");
      ++tampered;
      // Element-level edits inside arrays (bounded so the large H list stays cheap).
      if (it->is_array()) {
        for (std::size_t i = 0; i < std::min<std::size_t>(it->size(), 4); ++i) {
          Json e = cert;
          mutate(e[it.key()][i]);
          out.require(detected(e), "tampering with '" + it.key() + "[" + std::to_string(i) + "]' went unnoticed");
          ++tampered;
        }
      }
    }
  }
  out.require(tampered > 50, "too few tamper cases");
}

}  // namespace

int main() {
  std::vector<Json> certs;
  report(1, "phi round trip + congruence oracle", kLimit1, criterion1);
  report(2, "conflict colourings and psi_p separation", kLimit2, criterion2);
  report(3, "band property and parameter inequalities", kLimit3, criterion3);
  report(4, "theta shift, case separation, 72 encodings", kLimit4, criterion4);
  report(5, "xi flip, chains, 144 encodings", kLimit5, criterion5);
  report(6, "quadruple separation and positive families", kLimit6, criterion6);
  report(7, "digit constructions and cylinder algebra", kLimit7, [&](Outcome& o) { criterion7(o, certs); });
  report(8, "certificates: re-verify, tamper, determinism", kLimit8, [&](Outcome& o) { criterion8(o, certs); });
  std::printf("%s: %d of 8 criteria failed\n", failures == 0 ? "ALL PASS" : "FAILURES", failures);
  return failures == 0 ? 0 : 1;
}
