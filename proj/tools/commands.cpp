#include "commands.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <iterator>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "orelclm/algorithms.hpp"
#include "orelclm/clm.hpp"

namespace orelclm::cli {

using nlohmann::json;

OperatorDocument random_document(const PrimeField& f, int k, int d, int r, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint64_t> dist(0, f.prime() - 1);
  auto poly = [&] {
    std::vector<std::uint64_t> c(static_cast<std::size_t>(d + 1));
    for (auto& v : c) v = dist(rng);
    return DensePoly(f, std::move(c));
  };
  OperatorDocument doc{f, {}};
  for (int i = 0; i < k; ++i) {
    std::vector<DensePoly> coeffs;
    for (int j = 0; j < r; ++j) coeffs.push_back(poly());
    DensePoly lead(f);
    while (lead.is_zero()) lead = poly();
    coeffs.push_back(std::move(lead));
    doc.ops.emplace_back(f, std::move(coeffs));
  }
  return doc;
}

BenchRecord bench_case(const PrimeField& f, int n, int k, const std::string& algorithm, std::uint64_t seed) {
  BenchRecord rec{n, k, algorithm, seed};
  const auto doc = random_document(f, k, n, n, seed);
  const auto t0 = std::chrono::steady_clock::now();
  const auto r = compute_lclm(doc.ops, algorithm, {.heuristic_trials = 3, .seed = seed});
  rec.time_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  rec.order = r.lclm.order();
  rec.degree = degree(r.lclm);
  rec.size = arithmetic_size(r.lclm);
  return rec;
}

std::string bench_csv_header() { return "n,k,algorithm,seed,time_ms,order,degree,size"; }

std::string to_csv(const BenchRecord& r) {
  std::ostringstream os;
  os << r.n << ',' << r.k << ',' << r.algorithm << ',' << r.seed << ',' << std::fixed;
  os.precision(3);
  os << r.time_ms << ',' << r.order << ',' << r.degree << ',' << r.size;
  return os.str();
}

// ---------------------------------------------------------------------------
// selfcheck

namespace {

std::vector<OreOperator> selfcheck_instance(std::mt19937_64& rng, const PrimeField& f, int trial, int& d_max,
                                            int& r_max) {
  std::uniform_int_distribution<int> small(0, 2), kdist(2, 3);
  const int k = kdist(rng);
  d_max = small(rng);
  r_max = small(rng);
  auto doc = random_document(f, k, d_max, r_max, rng());
  auto ops = std::move(doc.ops);
  switch (trial % 5) {
    case 1: {  // shared right factor
      auto G = random_document(f, 1, 1, 1, rng()).ops[0];
      for (auto& L : ops) L = L * G;
      d_max += 1;
      r_max += 1;
      break;
    }
    case 2:  // duplicate
      ops.push_back(ops[0]);
      break;
    case 3:  // single operator
      ops.resize(1);
      break;
    default:
      break;
  }
  return ops;
}

}  // namespace

SelfcheckReport selfcheck(std::uint64_t seed, int trials, bool force_failure) {
  const PrimeField f;
  SelfcheckReport rep;
  rep.properties = {{"divisibility"}, {"minimality"}, {"order bound"}, {"degree bound"}, {"cross-algorithm"}, {"clm bounds"}};
  auto record = [&](std::size_t idx, bool ok, std::uint64_t s, const std::vector<OreOperator>& ops,
                    const std::string& detail) {
    auto& p = rep.properties[idx];
    ++p.total;
    if (ok) {
      ++p.passed;
      return;
    }
    rep.failures.push_back(p.name + " failed (seed " + std::to_string(s) + "): " + detail +
                           " input " + format_operators({f, ops}));
  };

  const std::vector<std::string> tags{"heffter", "euclid", "ext-euclid", "li", "vanhoeij", "dac:new", "iter:heffter", "heuristic"};
  for (int t = 0; t < trials; ++t) {
    const std::uint64_t s = seed + static_cast<std::uint64_t>(t);
    std::mt19937_64 rng(s);
    int d = 0, r = 0;
    const auto ops = selfcheck_instance(rng, f, t, d, r);
    const int k = static_cast<int>(ops.size());
    int sum_r = 0;
    for (const auto& L : ops) sum_r += L.order();

    auto ref = lclm_new(ops);
    if (force_failure && t == 0) ref.lclm = ref.lclm + OreOperator::scalar(DensePoly::constant(f, 1));

    bool divides = true;
    for (const auto& L : ops) divides = divides && right_divides(L, ref.lclm);
    record(0, divides, s, ops, "remainder is nonzero");

    bool minimal = ref.lclm.order() == order_of_lclm(ops);
    if (k == 2) minimal = minimal && ref.lclm.order() == heffter_order(ops[0], ops[1]);
    record(1, minimal, s, ops, "order " + std::to_string(ref.lclm.order()));

    record(2, ref.lclm.order() <= sum_r, s, ops, "order exceeds sum of orders");
    record(3, degree(ref.lclm) <= d * (k * (sum_r + 1) - sum_r), s, ops, "degree " + std::to_string(degree(ref.lclm)));

    std::string mismatch;
    for (const auto& tag : tags)
      if (compute_lclm(ops, tag, {.heuristic_trials = 3, .seed = s}).lclm != ref.lclm) mismatch += " " + tag;
    record(4, mismatch.empty(), s, ops, "disagreeing:" + mismatch);

    const auto c = clm_compute(ops);
    bool clm_ok = !c.clm.is_zero() && c.total_degree <= 2 * k * (d + r);
    for (const auto& L : ops) clm_ok = clm_ok && right_divides(L, c.clm);
    record(5, clm_ok, s, ops, "total degree " + std::to_string(c.total_degree));
  }
  return rep;
}

// ---------------------------------------------------------------------------
// command line

namespace {

struct Flags {
  std::string algorithm = "new";
  std::vector<std::string> algorithms{"new"};
  std::uint64_t prime = PrimeField::kDefaultPrime;
  std::uint64_t seed = 1;
  int order = 2;
  int degree = 2;
  int count = 2;
  int trials = 0;
  bool json = false;
  bool force_failure = false;
  std::vector<int> n_list{2, 3, 4};
  std::string input;
};

class CommandError : public std::runtime_error {
 public:
  CommandError(int code, const std::string& msg) : std::runtime_error(msg), code_(code) {}
  int code() const noexcept { return code_; }

 private:
  int code_;
};

OperatorDocument read_document(const Flags& fl, std::istream& in) {
  std::string text;
  if (fl.input.empty() || fl.input == "-") {
    text.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
  } else {
    std::ifstream file(fl.input);
    if (!file) throw CommandError(kFailure, "cannot open " + fl.input);
    text.assign(std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>());
  }
  auto doc = parse_operators(text);
  if (doc.ops.empty()) throw CommandError(kFailure, "document contains no operators");
  return doc;
}

json operator_json(const OreOperator& L) {
  json coeffs = json::array();
  for (const auto& c : L.coeffs()) {
    json poly = json::array();
    if (c.is_zero()) poly.push_back(0);
    for (auto v : c.coeffs()) poly.push_back(v);
    coeffs.push_back(std::move(poly));
  }
  return coeffs;
}

void print_operator(std::ostream& out, const PrimeField& f, const OreOperator& L, const Flags& fl, json extra) {
  if (fl.json) {
    extra["p"] = f.prime();
    extra["operator"] = operator_json(L);
    extra["order"] = L.order();
    extra["degree"] = degree(L);
    extra["size"] = arithmetic_size(L);
    out << extra.dump() << '\n';
    return;
  }
  out << format_operators({f, {L}}) << '\n';
  out << "order: " << L.order() << '\n';
  out << "degree: " << degree(L) << '\n';
  out << "size: " << arithmetic_size(L) << '\n';
  for (auto it = extra.begin(); it != extra.end(); ++it)
    if (it.key() != "command") out << it.key() << ": " << (it->is_string() ? it->get<std::string>() : it->dump()) << '\n';
}

int cmd_lclm(const Flags& fl, std::istream& in, std::ostream& out) {
  if (!is_known_algorithm(fl.algorithm)) throw CommandError(kUsage, "unknown algorithm '" + fl.algorithm + "'");
  const auto doc = read_document(fl, in);
  const auto r = compute_lclm(doc.ops, fl.algorithm, {.heuristic_trials = fl.trials > 0 ? fl.trials : 3, .seed = fl.seed});
  json extra{{"command", "lclm"}, {"algorithm", r.algorithm}};
  if (fl.json && r.rank) extra["rank"] = *r.rank;
  print_operator(out, doc.field, r.lclm, fl, std::move(extra));
  return kOk;
}

int cmd_gcrd(const Flags& fl, std::istream& in, std::ostream& out) {
  const auto doc = read_document(fl, in);
  auto g = primitive_part(doc.ops[0]);
  for (std::size_t i = 1; i < doc.ops.size(); ++i) g = gcrd(g, doc.ops[i]);
  print_operator(out, doc.field, g, fl, {{"command", "gcrd"}});
  return kOk;
}

int cmd_mul(const Flags& fl, std::istream& in, std::ostream& out) {
  const auto doc = read_document(fl, in);
  auto p = doc.ops[0];
  for (std::size_t i = 1; i < doc.ops.size(); ++i) p = p * doc.ops[i];
  print_operator(out, doc.field, p, fl, {{"command", "mul"}});
  return kOk;
}

int cmd_clm(const Flags& fl, std::istream& in, std::ostream& out) {
  const auto doc = read_document(fl, in);
  const auto c = clm_compute(doc.ops);
  print_operator(out, doc.field, c.clm, fl, {{"command", "clm"}, {"total_degree", c.total_degree}, {"N", c.N_used}});
  return kOk;
}

int cmd_random(const Flags& fl, std::ostream& out) {
  if (fl.count < 1 || fl.order < 0 || fl.degree < 0)
    throw CommandError(kUsage, "need --count >= 1, --order >= 0, --degree >= 0");
  const auto doc = random_document(PrimeField(fl.prime), fl.count, fl.degree, fl.order, fl.seed);
  out << format_operators(doc) << '\n';
  return kOk;
}

int cmd_bench(const Flags& fl, std::ostream& out, std::ostream& err) {
  for (const auto& a : fl.algorithms)
    if (!is_known_algorithm(a)) throw CommandError(kUsage, "unknown algorithm '" + a + "'");
  const PrimeField f(fl.prime);
  out << bench_csv_header() << '\n';
  int status = kOk;
  for (int n : fl.n_list) {
    for (const auto& a : fl.algorithms) {
      BenchRecord rec{n, fl.count, a, fl.seed};
      try {
        rec = bench_case(f, n, fl.count, a, fl.seed);
      } catch (const std::exception& e) {
        err << "bench n=" << n << " algorithm=" << a << " failed: " << e.what() << '\n';
        status = kFailure;
      }
      out << to_csv(rec) << '\n' << std::flush;
    }
  }
  return status;
}

int cmd_selfcheck(const Flags& fl, std::ostream& out) {
  const int trials = fl.trials > 0 ? fl.trials : 100;
  const auto rep = selfcheck(fl.seed, trials, fl.force_failure);
  for (const auto& p : rep.properties)
    out << (p.passed == p.total ? "PASS " : "FAIL ") << p.name << ": " << p.passed << "/" << p.total << '\n';
  for (const auto& msg : rep.failures) out << msg << '\n';
  return rep.ok() ? kOk : kFailure;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"LCLMs, CLMs and GCRDs of differential operators over F_p", "orelclm-cli"};
  app.require_subcommand(1);
  Flags fl;

  auto doc_input = [&](CLI::App* sub) {
    sub->add_option("input", fl.input, "operator document (default: standard input)");
    sub->add_flag("--json", fl.json, "machine-readable output");
  };
  auto* lclm = app.add_subcommand("lclm", "least common left multiple");
  doc_input(lclm);
  lclm->add_option("--algorithm,-a", fl.algorithm,
                   "new, heffter, euclid, ext-euclid, li, vanhoeij, heuristic, dac:<tag>, iter:<tag>");
  lclm->add_option("--seed", fl.seed, "seed for the heuristic");
  lclm->add_option("--trials", fl.trials, "heuristic attempts before falling back");
  auto* g = app.add_subcommand("gcrd", "greatest common right divisor");
  doc_input(g);
  auto* mul = app.add_subcommand("mul", "product L1*L2*...*Lk");
  doc_input(mul);
  auto* clm = app.add_subcommand("clm", "common left multiple of small total degree");
  doc_input(clm);

  auto* rnd = app.add_subcommand("random", "random operator document");
  rnd->add_option("--prime", fl.prime)->capture_default_str();
  rnd->add_option("--seed", fl.seed)->capture_default_str();
  rnd->add_option("--count,-k", fl.count)->capture_default_str();
  rnd->add_option("--order,-r", fl.order)->capture_default_str();
  rnd->add_option("--degree,-d", fl.degree)->capture_default_str();

  auto* bench = app.add_subcommand("bench", "time LCLMs of random operators of bidegree (n, n)");
  bench->add_option("--n", fl.n_list, "comma-separated n values")->delimiter(',')->capture_default_str();
  bench->add_option("--count,-k", fl.count)->capture_default_str();
  bench->add_option("--seed", fl.seed)->capture_default_str();
  bench->add_option("--prime", fl.prime)->capture_default_str();
  bench->add_option("--algorithm,-a", fl.algorithms, "comma-separated tags")->delimiter(',')->capture_default_str();

  auto* check = app.add_subcommand("selfcheck", "run the invariant suite on random instances");
  check->add_option("--seed", fl.seed)->capture_default_str();
  check->add_option("--trials", fl.trials, "number of instances (default 100)");
  check->add_flag("--force-failure", fl.force_failure, "corrupt one result to exercise the failure path");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kOk;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return kOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }

  try {
    if (lclm->parsed()) return cmd_lclm(fl, in, out);
    if (g->parsed()) return cmd_gcrd(fl, in, out);
    if (mul->parsed()) return cmd_mul(fl, in, out);
    if (clm->parsed()) return cmd_clm(fl, in, out);
    if (rnd->parsed()) return cmd_random(fl, out);
    if (bench->parsed()) return cmd_bench(fl, out, err);
    if (check->parsed()) return cmd_selfcheck(fl, out);
  } catch (const CommandError& e) {
    err << "error: " << e.what() << '\n';
    return e.code();
  } catch (const DocumentError& e) {
    err << "error: " << e.what() << '\n';
    return kFailure;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kFailure;
  }
  return kUsage;
}

}  // namespace orelclm::cli
