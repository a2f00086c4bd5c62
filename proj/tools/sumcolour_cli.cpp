// sumcolour: evaluate colourings, search for monochromatic sum sets,
// build digit constructions and verify certificates.
#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "sumcolour/certificate.hpp"
#include "sumcolour/errors.hpp"
#include "sumcolour/registry.hpp"
#include "sumcolour/support.hpp"

namespace sc = sumcolour;

namespace {

constexpr int kOk = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

void write_json(const sc::Json& j, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << j.dump(2) << '\n';
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << j.dump(2) << '\n';
}

unsigned default_threads() { return std::max(1U, std::thread::hardware_concurrency()); }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Colourings of rational vector spaces and monochromatic sum sets"};
  app.require_subcommand(1);

  // colour eval
  auto* colour = app.add_subcommand("colour", "Colouring utilities");
  colour->require_subcommand(1);
  auto* eval = colour->add_subcommand("eval", "Colour of one value");
  std::string eval_id, eval_value;
  eval->add_option("--id", eval_id, "colouring id, e.g. gamma72:k=2,m=1")->required();
  eval->add_option("value", eval_value, "a/b or (a/b, c/d, ...)")->required();

  // search
  auto* search = app.add_subcommand("search", "Search for a monochromatic kX or FS_k(X)");
  sc::SearchOptions opt;
  std::string mode = "kX", search_out;
  opt.threads = default_threads();
  search->add_option("--id", opt.colouring, "colouring id")->required();
  search->add_option("--mode", mode, "kX or FSk")->check(CLI::IsMember({"kX", "FSk"}));
  search->add_option("--k", opt.k, "number of summands")->check(CLI::Range(1, 16));
  search->add_option("--height", opt.ground.height, "ground height bound")->check(CLI::PositiveNumber);
  search->add_option("--dim", opt.ground.dim, "ground dimension")->check(CLI::PositiveNumber);
  search->add_option("--max-size", opt.max_size, "target |X|")->check(CLI::PositiveNumber);
  search->add_option("--budget", opt.budget, "node expansions");
  search->add_option("--threads", opt.threads, "worker threads")->check(CLI::PositiveNumber);
  search->add_option("--out", search_out, "certificate path (default stdout)");

  // construct
  auto* construct = app.add_subcommand("construct", "Digit constructions of sets with k-sums in Z");
  std::string method, z_text = "[[\"1/4\",\"1/2\"]]", construct_out;
  std::uint64_t ck = 2;
  std::size_t T = 10;
  construct->add_option("method", method, "cylinder or greedy")
      ->required()
      ->check(CLI::IsMember({"cylinder", "greedy"}));
  construct->add_option("--Z", z_text, "open intervals as JSON, e.g. [[\"0\",\"1/2\"]]");
  construct->add_option("--k", ck, "number of summands")->check(CLI::Range(1, 16));
  construct->add_option("--T", T, "number of free digits (cylinder) or elements (greedy)");
  construct->add_option("--out", construct_out, "certificate path (default stdout)");

  // verify
  auto* verify = app.add_subcommand("verify", "Re-verify a certificate");
  std::string cert_path;
  verify->add_option("cert", cert_path, "certificate file")->required()->check(CLI::ExistingFile);

  // generate
  auto* generate = app.add_subcommand("generate", "Seeded test data");
  generate->require_subcommand(1);
  auto* gen_case = generate->add_subcommand("case", "Vector family for one case of the 72-colouring");
  std::string which = "I";
  std::size_t gm = 1, gsize = 8;
  std::uint64_t gk = 2, gseed = 0;
  gen_case->add_option("--which", which, "I, II, III or IV")->check(CLI::IsMember({"I", "II", "III", "IV"}));
  gen_case->add_option("--m", gm, "dimension")->check(CLI::PositiveNumber);
  gen_case->add_option("--k", gk, "k")->check(CLI::Range(2, 64));
  gen_case->add_option("--size", gsize, "family size");
  gen_case->add_option("--seed", gseed, "seed");
  auto* gen_order = generate->add_subcommand("order", "Random well-order of n basis indices");
  std::size_t on = 10;
  std::uint64_t oseed = 0;
  gen_order->add_option("--n", on, "basis size")->check(CLI::PositiveNumber);
  gen_order->add_option("--seed", oseed, "seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*eval) {
      const sc::Colouring c = sc::resolve_colouring(eval_id);
      std::cout << c(sc::parse_qvec(eval_value)) << '\n';
      return kOk;
    }
    if (*search) {
      opt.mode = sc::parse_sum_mode(mode);
      const sc::SearchResult r = sc::search_mono(opt);
      write_json(sc::to_json(r.cert), search_out);
      std::cerr << sc::to_string(r.status) << ": best size " << r.best_size << " after " << r.nodes
                << " nodes\n";
      return r.status == sc::SearchStatus::Found ? kOk : kFail;
    }
    if (*construct) {
      const sc::IntervalSet Z = sc::interval_set_from_json(sc::Json::parse(z_text));
      sc::ConstructionCert cert;
      if (method == "cylinder") {
        const unsigned m = static_cast<unsigned>(ck + 2);
        const sc::CylinderHit hit = sc::find_cylinder_in(Z, m);
        std::vector<std::size_t> X(T);
        for (std::size_t t = 0; t < T; ++t) X[t] = hit.depth + 1 + t;
        cert = sc::build_H(hit.prefix, hit.depth, X, ck, Z, default_threads());
      } else {
        cert.method = "greedy";
        cert.k = ck;
        cert.m = static_cast<unsigned>(ck + 2);
        cert.Z = Z;
        cert.H = sc::greedy_baire(Z, ck, T);
        cert.checked_sums = sc::to_u64(sc::multiset_count(cert.H.size(), ck));
      }
      write_json(sc::to_json(cert), construct_out);
      return kOk;
    }
    if (*verify) {
      std::ifstream in(cert_path);
      std::stringstream buf;
      buf << in.rdbuf();
      const sc::VerifyReport r = sc::verify_cert_text(buf.str(), default_threads());
      std::cout << (r.ok ? "verified" : "FAILED: " + r.reason) << '\n';
      return r.ok ? kOk : kFail;
    }
    if (*gen_case) {
      const sc::GammaCase cases[] = {sc::GammaCase::I, sc::GammaCase::II, sc::GammaCase::III, sc::GammaCase::IV};
      const std::size_t idx = which == "I" ? 0 : which == "II" ? 1 : which == "III" ? 2 : 3;
      for (const auto& v : sc::case_generator(cases[idx], gm, gk, gsize, gseed)) {
        std::cout << sc::format_qvec(v) << '\n';
      }
      return kOk;
    }
    if (*gen_order) {
      const auto W = sc::WellOrder::random(on, oseed);
      for (std::size_t i = 0; i < W.size(); ++i) std::cout << (i ? " " : "") << W.rank(i);
      std::cout << '\n';
      return kOk;
    }
  } catch (const sc::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    const bool usage = e.code() == sc::Errc::InvalidArgument || e.code() == sc::Errc::UnknownColouring ||
                       e.code() == sc::Errc::BadOrder;
    return usage ? kUsage : kFail;
  } catch (const sc::Json::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
