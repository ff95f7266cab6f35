// tritile: verify and generate tilings, run certificates and searches.
//
// Exit codes: 0 success / expected verdict, 1 negative result, 2 bad input.
// Diagnostics go to stderr as "tritile: error[<kind>]: <message>".
#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "tritile/casework.hpp"
#include "tritile/tiling.hpp"

using namespace tritile;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

int fail(const std::string& kind, const std::string& msg) {
  std::cerr << "tritile: error[" << kind << "]: " << msg << "\n";
  return 2;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::ios_base::failure("cannot open " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) throw std::ios_base::failure("cannot write " + path);
}

// k/n with n > 0
std::pair<long, long> parse_angle(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) throw UsageError("expected k/n, got '" + s + "'");
  try {
    std::size_t a = 0, b = 0;
    long k = std::stol(s.substr(0, slash), &a), n = std::stol(s.substr(slash + 1), &b);
    if (a != slash || b != s.size() - slash - 1 || n < 1) throw UsageError("");
    return {k, n};
  } catch (const std::exception&) {
    throw UsageError("expected k/n with integers and n >= 1, got '" + s + "'");
  }
}

void check_env() {
  if (const char* env = std::getenv("TRITILE_PRECISION_CAP")) {
    char* end = nullptr;
    unsigned long v = std::strtoul(env, &end, 10);
    if (end == env || *end != '\0' || v < 64)
      throw UsageError(std::string("TRITILE_PRECISION_CAP must be an integer >= 64, got '") + env + "'");
  }
}

// the paper's verdict for each certificate
const std::map<std::string, Verdict>& expected_verdicts() {
  static const std::map<std::string, Verdict> m{
      {"piover6", Verdict::family},        {"piover5", Verdict::unsat},         {"twopifive", Verdict::unsat},
      {"pi11", Verdict::family},           {"pi14", Verdict::unsat},            {"threetwo-case2", Verdict::unsat},
      {"threetwo-case1", Verdict::unsat},  {"ell3", Verdict::unsat},            {"ell4", Verdict::unsat},
      {"ell5", Verdict::unsat},
  };
  return m;
}

CertificateReport run_certificate(const std::string& which, long pmax, bool decide_exceptional) {
  if (which == "piover6") return certify_piover6();
  if (which == "piover5") return certify_piover5();
  if (which == "twopifive") return certify_twopifive();
  if (which == "pi11") return certify_pi11_all(decide_exceptional);
  if (which == "pi14") return certify_pi14_all();
  if (which == "threetwo-case2") return engine_32_case2();
  if (which == "threetwo-case1") return engine_32_case1();
  if (which == "ell3") return eliminate_ell(3, pmax);
  if (which == "ell4") return eliminate_ell(4, pmax);
  if (which == "ell5") return eliminate_ell(5, pmax);
  throw UsageError("unknown certificate '" + which + "'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of triangle tilings and their nonexistence certificates"};
  app.require_subcommand(1);

  auto* verify = app.add_subcommand("verify", "verify a tiling file");
  std::string verify_path;
  verify->add_option("file", verify_path, "tiling file")->required();

  auto* gen = app.add_subcommand("gen", "generate a tiling");
  std::string family, out_path, svg_path, tile_path, outer_path, inner_path;
  long gen_n = 0;
  gen->add_option("family", family, "three | quadratic | compose | threem2 | twentyseven")
      ->required()
      ->check(CLI::IsMember({"three", "quadratic", "compose", "threem2", "twentyseven"}));
  gen->add_option("n", gen_n, "m for threem2, n for quadratic");
  gen->add_option("-o,--output", out_path, "output file (default stdout)");
  gen->add_option("--svg", svg_path, "also write an SVG drawing");
  gen->add_option("--tile", tile_path, "quadratic: take the tile from this tiling file (default: the three-tiling)");
  bool fit = false;
  gen->add_flag("--fit", fit, "quadratic: shrink the tile by 1/n so ABC is congruent to the original tile");
  gen->add_option("--outer", outer_path, "compose: outer tiling file");
  gen->add_option("--inner", inner_path, "compose: inner tiling file");

  auto* certify = app.add_subcommand("certify", "run a nonexistence certificate");
  std::string cert;
  long pmax = 30;
  bool decide_exceptional = false;
  std::vector<std::string> cert_names;
  for (const auto& [k, v] : expected_verdicts()) cert_names.push_back(k);
  certify->add_option("case", cert, "certificate")->required()->check(CLI::IsMember(cert_names));
  certify->add_option("--pmax", pmax, "ell3/ell4/ell5: largest P examined")->check(CLI::Range(6L, 1000L));
  certify->add_flag("--decide-exceptional", decide_exceptional, "pi11: run the engine on (2alpha, 4alpha, 5alpha)");

  auto* search = app.add_subcommand("search", "bounded d-matrix search");
  std::string search_kind;
  long nmax = 0;
  int workers = 1;
  search->add_option("kind", search_kind, "threetwo")->required()->check(CLI::IsMember({"threetwo"}));
  search->add_option("--nmax", nmax, "largest N")->required()->check(CLI::Range(1L, 100000L));
  search->add_option("--workers", workers, "worker threads")->check(CLI::Range(1, 1024));

  auto* classify_cmd = app.add_subcommand("classify", "families admitting N tiles");
  long classify_n = 0;
  classify_cmd->add_option("N", classify_n, "number of tiles")->required()->check(CLI::PositiveNumber);

  auto* minpoly_cmd = app.add_subcommand("minpoly", "monic minimal polynomial of sin(k pi/n) or cos(k pi/n)");
  std::string fn, angle;
  minpoly_cmd->add_option("function", fn, "sin | cos")->required()->check(CLI::IsMember({"sin", "cos"}));
  minpoly_cmd->add_option("angle", angle, "k/n")->required();

  auto* cyclo = app.add_subcommand("cyclo", "cyclotomic polynomial");
  long cyclo_n = 0;
  cyclo->add_option("n", cyclo_n, "order")->required()->check(CLI::PositiveNumber);

  auto* table = app.add_subcommand("table", "casework table");
  std::string table_kind;
  table->add_option("kind", table_kind, "ell3")->required()->check(CLI::IsMember({"ell3"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::string msg = e.what();
    return fail("usage", msg.empty() ? "invalid arguments" : msg);
  }

  try {
    check_env();
    if (*verify) {
      auto r = verify_tiling(load_tiling(read_file(verify_path)));
      std::cout << r.str();
      return r.pass ? 0 : 1;
    }
    if (*gen) {
      Tiling t;
      if (family == "three") {
        t = gen_three();
      } else if (family == "threem2") {
        if (gen_n < 1) throw UsageError("threem2 needs m >= 1");
        t = gen_3m2(gen_n);
      } else if (family == "twentyseven") {
        t = gen_27();
      } else if (family == "quadratic") {
        if (gen_n < 1) throw UsageError("quadratic needs n >= 1");
        TileShape tile = tile_path.empty() ? gen_three().tile : load_tiling(read_file(tile_path)).tile;
        if (fit) {
          Rational k(1, gen_n);
          tile = make_tile_shape(k * tile.side[0], k * tile.side[1], k * tile.side[2]);
        }
        t = gen_quadratic(tile, gen_n);
      } else {
        if (outer_path.empty() || inner_path.empty()) throw UsageError("compose needs --outer and --inner");
        t = compose(load_tiling(read_file(outer_path)), load_tiling(read_file(inner_path)));
      }
      std::string text = save_tiling(t);
      if (out_path.empty())
        std::cout << text;
      else
        write_file(out_path, text);
      if (!svg_path.empty()) write_file(svg_path, svg_export(t));
      return 0;
    }
    if (*certify) {
      auto r = run_certificate(cert, pmax, decide_exceptional);
      std::cout << r.str();
      return r.verdict == expected_verdicts().at(cert) ? 0 : 1;
    }
    if (*search) {
      auto r = search_32(nmax, workers);
      std::cout << r.str();
      return r.solutions.empty() ? 0 : 1;
    }
    if (*classify_cmd) {
      auto fams = classify(classify_n);
      std::cout << "N=" << classify_n << ": " << fams.size() << " families\n";
      for (const auto& f : fams) {
        std::cout << "family (" << f.id << "): " << f.description << "\n";
        for (const auto& w : f.witnesses) std::cout << "  witness: " << w << "\n";
      }
      return 0;
    }
    if (*minpoly_cmd) {
      auto [k, n] = parse_angle(angle);
      CycloNum x = fn == "sin" ? sin_pi(k, n) : cos_pi(k, n);
      std::cout << monic(minpoly(x)).str("x") << "\n";
      return 0;
    }
    if (*cyclo) {
      std::cout << cyclotomic_poly(cyclo_n).str("x") << "\n";
      return 0;
    }
    if (*table) {
      std::cout << table_ell3().str();
      return 0;
    }
  } catch (const UsageError& e) {
    return fail("usage", e.what());
  } catch (const TilingParseError& e) {
    return fail("parse", e.what());
  } catch (const std::ios_base::failure& e) {
    return fail("io", e.what());
  } catch (const AlgebraError& e) {
    return fail("algebra", e.what());
  }
  return 2;
}
