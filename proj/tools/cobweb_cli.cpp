// cobweb: command-line front end for the cobweb poset library.
//
//   cobweb <command> [args] [--format text|json|csv|dot] [--out PATH] [--unsafe-limits]
//
// Exit codes: 0 ok, 1 verification failure, 2 usage, 3 guard exceeded.

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "cobweb/fence.hpp"
#include "cobweb/format.hpp"
#include "cobweb/gvpaths.hpp"
#include "cobweb/poset.hpp"
#include "cobweb/seqcore.hpp"
#include "cobweb/tiling.hpp"
#include "cobweb/verify.hpp"
#include "cobweb/weighted.hpp"

namespace {

using cobweb::Json;
using cobweb::Limits;

constexpr int kExitOk = 0;
constexpr int kExitVerify = 1;
constexpr int kExitUsage = 2;
constexpr int kExitGuard = 3;

class usage_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string format = "text";
  std::string out;
  bool unsafe = false;
};

// What a command produces: an exit code, a JSON record and the text rendering
// used for every non-JSON format.
struct Output {
  int code = kExitOk;
  Json inputs = Json::object();
  Json result;
  std::string rendered;
};

Limits limits_of(const Options& o) { return o.unsafe ? Limits::lifted : Limits::enforced; }

void require_format(const Options& o, std::initializer_list<const char*> allowed, const std::string& command) {
  for (const char* f : allowed)
    if (o.format == f) return;
  throw usage_error("--format " + o.format + " is not supported by " + command);
}

std::string s(const cobweb::Int& v) { return v.str(); }

std::string matrix_rendering(const cobweb::IncMatrix& m, const std::string& format) {
  std::ostringstream out;
  if (format == "csv")
    cobweb::write_matrix_csv(out, m);
  else
    cobweb::write_matrix_text(out, m);
  return out.str();
}

// --- commands ---------------------------------------------------------------

Output cmd_fibonomial(const Options& o, std::optional<std::size_t> n, std::optional<std::size_t> k,
                      std::optional<std::size_t> triangle) {
  require_format(o, {"text", "json", "csv"}, "fibonomial");
  Output out;
  if (triangle) {
    if (n || k) throw usage_error("fibonomial: give either N K or --triangle R");
    cobweb::check_guard(limits_of(o), "fibonomial --triangle rows", *triangle, 200);
    out.inputs = {{"triangle", *triangle}};
    out.result = Json::array();
    std::ostringstream text;
    const char sep = o.format == "csv" ? ',' : ' ';
    for (std::size_t row = 0; row <= *triangle; ++row) {
      Json values = Json::array();
      for (std::size_t col = 0; col <= row; ++col) {
        const auto v = s(cobweb::fibonomial(row, col));
        values.push_back(v);
        text << (col ? std::string(1, sep) : "") << v;
      }
      text << '\n';
      out.result.push_back(std::move(values));
    }
    out.rendered = text.str();
    return out;
  }
  if (!n || !k) throw usage_error("fibonomial: N and K are required without --triangle");
  cobweb::check_guard(limits_of(o), "fibonomial n", *n, 5000);
  out.inputs = {{"n", *n}, {"k", *k}};
  const auto v = s(cobweb::fibonomial(*n, *k));
  out.result = v;
  out.rendered = v + '\n';
  return out;
}

Output cmd_zeta(const Options& o, std::size_t n, bool use_explicit, bool check) {
  require_format(o, {"text", "json", "csv"}, "zeta");
  const auto p = cobweb::CobwebPoset::build(n);
  Output out;
  out.inputs = {{"N", n}, {"construction", use_explicit ? "explicit" : "order"}, {"check", check}};
  if (check) {
    const auto a = cobweb::zeta_from_order(p, limits_of(o));
    const auto b = cobweb::zeta_explicit(p, limits_of(o));
    std::optional<std::pair<std::size_t, std::size_t>> diff;
    for (std::size_t x = 1; x <= a.dim() && !diff; ++x)
      for (std::size_t y = x; y <= a.dim() && !diff; ++y)
        if (a(x, y) != b(x, y)) diff = {x, y};
    if (diff) {
      out.code = kExitVerify;
      out.result = {{"match", false}, {"row", diff->first}, {"col", diff->second}};
      out.rendered = "MISMATCH at (" + std::to_string(diff->first) + ", " + std::to_string(diff->second) + ")\n";
    } else {
      out.result = {{"match", true}, {"dim", a.dim()}};
      out.rendered = "MATCH dim=" + std::to_string(a.dim()) + '\n';
    }
    return out;
  }
  if (o.format != "json") cobweb::check_guard(limits_of(o), "zeta N for text dumps", n, 12);
  const auto z = use_explicit ? cobweb::zeta_explicit(p, limits_of(o)) : cobweb::zeta_from_order(p, limits_of(o));
  out.result = cobweb::matrix_to_json(z);
  out.rendered = matrix_rendering(z, o.format);
  return out;
}

Output cmd_mobius(const Options& o, std::size_t n) {
  require_format(o, {"text", "json", "csv"}, "mobius");
  const auto p = cobweb::CobwebPoset::build(n);
  if (o.format != "json") cobweb::check_guard(limits_of(o), "mobius N for text dumps", n, 12);
  const auto mu = cobweb::mobius(p, limits_of(o));
  Output out;
  out.inputs = {{"N", n}};
  out.result = cobweb::matrix_to_json(mu);
  out.rendered = matrix_rendering(mu, o.format);
  return out;
}

Output cmd_chains(const Options& o, std::size_t k, std::size_t n, bool enumerate) {
  require_format(o, {"text", "json", "csv"}, "chains");
  if (k < 1 || k > n) throw usage_error("chains: need 1 <= K <= N");
  const auto p = cobweb::CobwebPoset::build(n);
  const cobweb::VertexCoord start{1, k};
  Output out;
  out.inputs = {{"k", k}, {"n", n}, {"enumerate", enumerate}};
  const auto count = cobweb::count_max_chains_from_vertex(p, start, n);
  if (!enumerate) {
    out.result = s(count);
    out.rendered = s(count) + '\n';
    return out;
  }
  const auto chains = cobweb::enumerate_max_chains(p, start, n, limits_of(o));
  if (cobweb::Nat(chains.size()) != count) {
    out.code = kExitVerify;
    std::cerr << "chains: enumerated " << chains.size() << " but closed form gives " << count << '\n';
  }
  std::ostringstream text;
  Json list = Json::array();
  const char* sep = o.format == "csv" ? "," : " ";
  for (const auto& chain : chains) {
    Json vertices = Json::array();
    for (std::size_t i = 0; i < chain.size(); ++i) {
      text << (i ? sep : "") << cobweb::to_string(chain[i]);
      vertices.push_back({chain[i].j, chain[i].s});
    }
    text << '\n';
    list.push_back(std::move(vertices));
  }
  out.result = {{"count", s(count)}, {"chains", std::move(list)}};
  out.rendered = text.str();
  return out;
}

Output cmd_tiling(const Options& o, std::size_t k, std::size_t r, std::size_t m, bool count_all, bool permuted) {
  require_format(o, {"text", "json"}, "tiling");
  const auto model = permuted ? cobweb::CopyModel::level_permuted : cobweb::CopyModel::literal;
  Output out;
  out.inputs = {{"k", k}, {"r", r}, {"m", m}, {"model", cobweb::to_string(model)}, {"count_all", count_all}};
  const auto expected = cobweb::fibonomial(k + m, m);

  if (count_all) {
    const auto total = cobweb::count_tilings(k, r, m, model, limits_of(o));
    out.result = {{"tilings", std::to_string(total)}};
    out.rendered = "tilings=" + std::to_string(total) + '\n';
    return out;
  }

  const auto tiling = cobweb::find_tiling(k, r, m, model, limits_of(o));
  if (!tiling) {
    out.code = kExitVerify;
    std::ostringstream why;
    why << "NO COVER: no exact cover of the " << cobweb::ChainUniverse(k, m).size() << " chains by "
        << cobweb::to_string(model) << " copies";
    if (const auto s_bad = cobweb::literal_tiling_obstruction(k, m); s_bad && model == cobweb::CopyModel::literal)
      why << "; F_" << *s_bad << " = " << cobweb::fib(*s_bad) << " does not divide F_" << k + *s_bad << " = "
          << cobweb::fib(k + *s_bad) << " (try --permuted)";
    out.result = {{"verdict", "NO_COVER"}, {"expected_copies", s(expected)}, {"reason", why.str()}};
    out.rendered = why.str() + '\n';
    return out;
  }
  const auto defect = cobweb::tiling_defect(*tiling);
  const bool ok = !defect && cobweb::Nat(tiling->copies.size()) == expected;
  if (!ok) out.code = kExitVerify;
  const std::string verdict = ok ? "VALID" : "INVALID" + (defect ? ": " + *defect : std::string(": copy count"));
  out.result = cobweb::tiling_to_json(*tiling);
  out.result["verdict"] = verdict;
  std::ostringstream text;
  cobweb::write_tiling_text(text, *tiling);
  text << verdict << '\n';
  out.rendered = text.str();
  return out;
}

Output cmd_gv(const Options& o, std::size_t n, std::size_t k) {
  require_format(o, {"text", "json"}, "gv");
  const auto via_paths = cobweb::fibonomial_via_paths(n, k, limits_of(o));
  const auto direct = cobweb::fibonomial(n + 1, k);
  Output out;
  out.inputs = {{"n", n}, {"k", k}};
  out.result = {{"paths_sum", s(via_paths)}, {"fibonomial", s(direct)}, {"match", via_paths == direct}};
  out.rendered = "sum N(R) = " + s(via_paths) + "\nfibonomial(" + std::to_string(n + 1) + "," + std::to_string(k) +
                 ") = " + s(direct) + '\n' + (via_paths == direct ? "MATCH" : "MISMATCH") + '\n';
  if (via_paths != direct) out.code = kExitVerify;
  return out;
}

cobweb::WeightVector parse_weights(const std::string& weights, const std::string& preset) {
  if (!weights.empty() && !preset.empty()) throw usage_error("konvalina: give either --weights or --preset");
  if (!weights.empty()) {
    std::vector<long long> values;
    std::stringstream in(weights);
    for (std::string item; std::getline(in, item, ',');) {
      try {
        std::size_t used = 0;
        values.push_back(std::stoll(item, &used));
        if (used != item.size()) throw std::invalid_argument(item);
      } catch (const std::exception&) {
        throw usage_error("konvalina: bad weight '" + item + "'");
      }
    }
    return cobweb::WeightVector::from_integers(values);
  }
  // preset: ones:N, arithmetic:N, geometric:N:Q
  std::vector<std::string> parts;
  std::stringstream in(preset);
  for (std::string item; std::getline(in, item, ':');) parts.push_back(item);
  auto number = [](const std::string& text) -> std::size_t {
    try {
      std::size_t used = 0;
      const auto v = std::stoull(text, &used);
      if (used != text.size()) throw std::invalid_argument(text);
      return v;
    } catch (const std::exception&) {
      throw usage_error("konvalina: bad preset parameter '" + text + "'");
    }
  };
  if (parts.size() == 2 && parts[0] == "ones") return cobweb::preset::ones(number(parts[1]));
  if (parts.size() == 2 && parts[0] == "arithmetic") return cobweb::preset::arithmetic(number(parts[1]));
  if (parts.size() == 3 && parts[0] == "geometric")
    return cobweb::preset::geometric_q(number(parts[1]), cobweb::Nat(number(parts[2])));
  throw usage_error("konvalina: preset must be ones:N, arithmetic:N or geometric:N:Q");
}

Output cmd_konvalina(const Options& o, const std::string& kind, const std::string& weights, const std::string& preset,
                     std::size_t k) {
  require_format(o, {"text", "json"}, "konvalina");
  if (weights.empty() && preset.empty()) throw usage_error("konvalina: --weights or --preset is required");
  const auto w = parse_weights(weights, preset);
  cobweb::check_guard(limits_of(o), "konvalina k", k, 2000);
  const auto value = kind == "c" ? cobweb::c_coeff(w, k) : cobweb::s_coeff(w, k);
  Output out;
  Json ws = Json::array();
  for (const auto& v : w.values()) ws.push_back(s(v));
  out.inputs = {{"kind", kind}, {"weights", std::move(ws)}, {"k", k}};
  out.result = s(value);
  out.rendered = s(value) + '\n';
  return out;
}

Output cmd_fence(const Options& o, std::size_t m) {
  require_format(o, {"text", "json"}, "fence");
  cobweb::check_guard(limits_of(o), "fence m", m, 10000);
  const auto ideals = cobweb::count_ideals(m);
  Output out;
  out.inputs = {{"m", m}};
  out.result = {{"ideals", s(ideals)}, {"fib_m_plus_2", s(cobweb::fib(m + 2))}};
  out.rendered = s(ideals) + '\n';
  if (ideals != cobweb::fib(m + 2)) out.code = kExitVerify;
  return out;
}

Output cmd_hasse(const Options& o, std::size_t n) {
  require_format(o, {"dot", "text", "json"}, "hasse");
  cobweb::check_guard(limits_of(o), "hasse N", n, 12);
  const auto p = cobweb::CobwebPoset::build(n);
  Output out;
  out.inputs = {{"N", n}};
  std::ostringstream dot;
  cobweb::write_hasse_dot(dot, p);
  out.result = {{"vertices", p.vertex_count()}, {"dot", dot.str()}};
  out.rendered = dot.str();
  return out;
}

Output cmd_verify(const Options& o, const std::string& suite, const std::string& fault) {
  require_format(o, {"text", "json"}, "verify");
  cobweb::VerifyOptions options;
  if (!fault.empty()) {
    const auto comma = fault.find(',');
    try {
      if (comma == std::string::npos) throw std::invalid_argument(fault);
      options.zeta_fault = std::make_pair(std::stoul(fault.substr(0, comma)), std::stoul(fault.substr(comma + 1)));
    } catch (const std::exception&) {
      throw usage_error("--inject-zeta-fault expects ROW,COL");
    }
  }
  const auto start = std::chrono::steady_clock::now();
  const auto results = cobweb::run_suite(suite, options);
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  Output out;
  out.inputs = {{"suite", suite}};
  Json list = Json::array();
  std::ostringstream text;
  std::size_t failed = 0;
  for (const auto& r : results) {
    if (!r.passed) ++failed;
    list.push_back({{"suite", r.suite}, {"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
    text << (r.passed ? "PASS " : "FAIL ") << r.suite << ": " << r.name;
    if (!r.detail.empty()) text << " -- " << r.detail;
    text << '\n';
  }
  // Wall time is not part of the JSON record so that output stays byte-identical.
  std::ostringstream timing;
  timing.setf(std::ios::fixed);
  timing.precision(2);
  timing << seconds;
  text << (failed ? "FAIL" : "PASS") << ' ' << results.size() - failed << '/' << results.size() << " properties in "
       << timing.str() << " s\n";
  out.result = {{"passed", failed == 0}, {"properties", std::move(list)}};
  out.rendered = text.str();
  if (o.format == "json") std::cerr << "verify: " << timing.str() << " s\n";
  if (failed) out.code = kExitVerify;
  return out;
}

void emit(const Options& o, const std::string& command, const Output& out) {
  std::string body;
  if (o.format == "json") {
    Json record = {{"command", command}, {"inputs", out.inputs}, {"result", out.result}, {"version", cobweb::kVersion}};
    body = record.dump(2) + '\n';
  } else {
    body = out.rendered;
  }
  if (o.out.empty()) {
    std::cout << body << std::flush;
    return;
  }
  std::ofstream file(o.out, std::ios::binary);
  if (!file || !(file << body)) throw usage_error("cannot write " + o.out);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fibonacci cobweb poset toolkit", "cobweb"};
  app.set_version_flag("--version", cobweb::kVersion);
  app.require_subcommand(1);
  app.fallthrough();

  Options opts;
  app.add_option("--format", opts.format, "Output format")
      ->check(CLI::IsMember({"text", "json", "csv", "dot"}))
      ->capture_default_str();
  app.add_option("--out", opts.out, "Write output to PATH instead of stdout");
  app.add_flag("--unsafe-limits", opts.unsafe, "Lift size guards");

  std::string command;
  std::function<Output()> run;

  std::optional<std::size_t> fib_n, fib_k, fib_triangle;
  auto* fibonomial = app.add_subcommand("fibonomial", "Fibonomial coefficient or triangle");
  fibonomial->add_option("n", fib_n);
  fibonomial->add_option("k", fib_k);
  fibonomial->add_option("--triangle", fib_triangle, "Print rows 0..R");
  fibonomial->callback([&] { run = [&] { return cmd_fibonomial(opts, fib_n, fib_k, fib_triangle); }; });

  std::size_t zeta_n = 0;
  bool zeta_explicit = false, zeta_order = false, zeta_check = false;
  auto* zeta = app.add_subcommand("zeta", "Zeta matrix of P_N");
  zeta->add_option("N", zeta_n)->required();
  auto* explicit_flag = zeta->add_flag("--explicit", zeta_explicit, "Build from the explicit formula");
  zeta->add_flag("--order", zeta_order, "Build from the order relation (default)")->excludes(explicit_flag);
  zeta->add_flag("--check", zeta_check, "Build both ways and compare");
  zeta->callback([&] { run = [&] { return cmd_zeta(opts, zeta_n, zeta_explicit, zeta_check); }; });

  std::size_t mobius_n = 0;
  auto* mobius = app.add_subcommand("mobius", "Moebius matrix of P_N");
  mobius->add_option("N", mobius_n)->required();
  mobius->callback([&] { run = [&] { return cmd_mobius(opts, mobius_n); }; });

  std::size_t chains_k = 0, chains_n = 0;
  bool chains_enumerate = false;
  auto* chains = app.add_subcommand("chains", "Maximal chains from <1,K> to level N");
  chains->add_option("k", chains_k)->required();
  chains->add_option("n", chains_n)->required();
  chains->add_flag("--enumerate", chains_enumerate, "List every chain");
  chains->callback([&] { run = [&] { return cmd_chains(opts, chains_k, chains_n, chains_enumerate); }; });

  std::size_t tiling_k = 0, tiling_r = 0, tiling_m = 0;
  bool tiling_count = false, tiling_permuted = false;
  auto* tiling = app.add_subcommand("tiling", "Partition the chains above <r,k> into disjoint copies of P_m");
  tiling->add_option("k", tiling_k)->required();
  tiling->add_option("r", tiling_r)->required();
  tiling->add_option("m", tiling_m)->required();
  tiling->add_flag("--count-all", tiling_count, "Count every tiling");
  tiling->add_flag("--permuted", tiling_permuted, "Allow copy level sizes in any order");
  tiling->callback([&] {
    run = [&] { return cmd_tiling(opts, tiling_k, tiling_r, tiling_m, tiling_count, tiling_permuted); };
  });

  std::size_t gv_n = 0, gv_k = 0;
  auto* gv = app.add_subcommand("gv", "Lattice path determinant sum");
  gv->add_option("n", gv_n)->required();
  gv->add_option("k", gv_k)->required();
  gv->callback([&] { run = [&] { return cmd_gv(opts, gv_n, gv_k); }; });

  std::string kv_kind, kv_weights, kv_preset;
  std::size_t kv_k = 0;
  auto* konvalina = app.add_subcommand("konvalina", "Weighted binomial coefficients of the first (c) or second (s) kind");
  konvalina->add_option("kind", kv_kind)->required()->check(CLI::IsMember({"c", "s"}));
  konvalina->add_option("k", kv_k)->required();
  konvalina->add_option("--weights", kv_weights, "Comma-separated nondecreasing weights");
  konvalina->add_option("--preset", kv_preset, "ones:N, arithmetic:N or geometric:N:Q");
  konvalina->callback([&] { run = [&] { return cmd_konvalina(opts, kv_kind, kv_weights, kv_preset, kv_k); }; });

  std::size_t fence_m = 0;
  auto* fence = app.add_subcommand("fence", "Order ideals of the zigzag fence on m points");
  fence->add_option("m", fence_m)->required();
  fence->callback([&] { run = [&] { return cmd_fence(opts, fence_m); }; });

  std::size_t hasse_n = 0;
  auto* hasse = app.add_subcommand("hasse", "Hasse diagram of P_N");
  hasse->add_option("N", hasse_n)->required();
  hasse->callback([&] { run = [&] { return cmd_hasse(opts, hasse_n); }; });

  std::string verify_suite = "all", verify_fault;
  auto* verify = app.add_subcommand("verify", "Run the property suites");
  verify->add_option("--suite", verify_suite)
      ->check(CLI::IsMember({"arith", "poset", "tiling", "paths", "fence", "all"}))
      ->capture_default_str();
  verify->add_option("--inject-zeta-fault", verify_fault)->group("");  // hidden
  verify->callback([&] { run = [&] { return cmd_verify(opts, verify_suite, verify_fault); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }
  command = app.get_subcommands().front()->get_name();

  try {
    if (opts.format == "dot" && command != "hasse") throw usage_error("--format dot is only supported by hasse");
    if (opts.unsafe) std::cerr << "warning: --unsafe-limits lifts size guards; this may take very long\n";
    const Output out = run();
    emit(opts, command, out);
    return out.code;
  } catch (const cobweb::guard_exceeded& e) {
    std::cerr << "cobweb: " << e.what() << " (rerun with --unsafe-limits to override)\n";
    return kExitGuard;
  } catch (const usage_error& e) {
    std::cerr << "cobweb: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "cobweb: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    std::cerr << "cobweb: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "cobweb: internal error: " << e.what() << '\n';
    return kExitVerify;
  }
}
