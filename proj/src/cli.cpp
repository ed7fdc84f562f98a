#include "sgpq/cli.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <ostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "sgpq/applications.hpp"
#include "sgpq/dpartition.hpp"
#include "sgpq/errors.hpp"
#include "sgpq/gamma.hpp"
#include "sgpq/json_io.hpp"
#include "sgpq/semigroup.hpp"

namespace sgpq {
namespace {

const std::map<std::string, std::string> kSynopsis = {
    {"", "usage: sgpq <quotient|dpartitions|gamma|bounds|sharpness|sym-closure|sym-cover|"
         "two-gens-d3|selftest> [flags]"},
    {"quotient", "usage: sgpq quotient --gens <csv> --d <int> [--max-d <int>] [--json]"},
    {"dpartitions", "usage: sgpq dpartitions --d <int> [--max-d <int>] [--json]"},
    {"gamma", "usage: sgpq gamma --gens <csv> --d <int> [--max-d <int>] [--json]"},
    {"bounds", "usage: sgpq bounds --gens <csv> --d <int> [--max-d <int>] [--json]"},
    {"sharpness", "usage: sgpq sharpness [--d <int>] [--max-d <int>] [--json]"},
    {"sym-closure", "usage: sgpq sym-closure --gens <csv> [--json]"},
    {"sym-cover", "usage: sgpq sym-cover --gens <csv> --d <int> [--rho <int>] [--json]"},
    {"two-gens-d3", "usage: sgpq two-gens-d3 --gens <n1,n2> [--json]"},
    {"selftest", "usage: sgpq selftest [--seed <int>] [--max-d <int>]"},
};

struct Options {
  std::string gens;
  int d = 0;
  std::int64_t rho = -1;
  bool json = false;
  std::uint64_t seed = 12345;
  int max_d = kDefaultMaxD;
};

std::string join(const std::vector<std::int64_t>& values) {
  std::ostringstream os;
  for (std::size_t i = 0; i < values.size(); ++i) os << (i ? "," : "") << values[i];
  return os.str();
}

std::string parts_text(const std::vector<int>& parts) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < parts.size(); ++i) os << (i ? "," : "") << parts[i];
  os << ')';
  return os.str();
}

void emit(std::ostream& out, const nlohmann::json& j) { out << j.dump(2) << "\n"; }

int do_quotient(const Options& opt, std::ostream& out) {
  NumericalSemigroup s = make_semigroup(parse_generators_csv(opt.gens));
  NumericalSemigroup oracle = quotient_oracle(s, opt.d);
  NumericalSemigroup via = quotient_via_gamma(s, opt.d, opt.max_d);
  bool agree = oracle == via;
  if (opt.json) {
    emit(out, {{"gens", s.minimal_generators().elements()},
               {"d", opt.d},
               {"quotient", semigroup_json(oracle)},
               {"agree", agree}});
  } else {
    out << "S minimal generators: " << join(s.minimal_generators().elements()) << "\n"
        << "S/" << opt.d << " minimal generators: "
        << join(oracle.minimal_generators().elements()) << "\n"
        << "S/" << opt.d << " frobenius: " << oracle.frobenius() << "\n"
        << "oracle/gamma agree: " << (agree ? "yes" : "no") << "\n";
  }
  return agree ? 0 : 1;
}

int do_dpartitions(const Options& opt, std::ostream& out) {
  std::vector<DPartition> ps = enumerate_d_partitions(opt.d, opt.max_d);
  if (opt.json) {
    emit(out, {{"d", opt.d},
               {"count", ps.size()},
               {"partitions", partitions_json(ps)}});
  } else {
    out << "|P(" << opt.d << ")| = " << ps.size() << "\n";
    for (const DPartition& p : ps) out << parts_text(p.parts) << "\n";
  }
  return 0;
}

int do_gamma(const Options& opt, std::ostream& out) {
  NumericalSemigroup s = make_semigroup(parse_generators_csv(opt.gens));
  GammaSet g = gamma(s, opt.d, std::nullopt, opt.max_d);
  BoundReport b = bound_report(s, opt.d, opt.max_d);
  if (opt.json) {
    nlohmann::json j = gamma_json(g, b);
    j["gens"] = s.minimal_generators().elements();
    emit(out, j);
  } else {
    out << "gamma(S/" << opt.d << ") = {" << join(g.elements) << "}\n";
    for (const GammaWitness& w : g.witnesses)
      out << "  " << w.value << " <- partition " << parts_text(w.partition.parts)
          << ", generators " << join(w.generators) << "\n";
    out << "nu_quotient=" << b.nu_quotient << " gamma_size=" << b.gamma_size
        << " bound_partitioned=" << b.bound_partitioned
        << " bound_binomial=" << b.bound_binomial << "\n";
  }
  return 0;
}

int do_bounds(const Options& opt, std::ostream& out) {
  NumericalSemigroup s = make_semigroup(parse_generators_csv(opt.gens));
  BoundReport b = bound_report(s, opt.d, opt.max_d);
  if (opt.json) {
    emit(out, {{"gens", s.minimal_generators().elements()},
               {"d", opt.d},
               {"nu_s", b.nu_s},
               {"nu_quotient", b.nu_quotient},
               {"gamma_size", b.gamma_size},
               {"bound_partitioned", b.bound_partitioned},
               {"bound_binomial", b.bound_binomial},
               {"sharp",
                {{"partitioned", b.sharp_partitioned}, {"binomial", b.sharp_binomial}}}});
  } else {
    out << "nu=" << b.nu_quotient << " gamma_size=" << b.gamma_size
        << " bound_partitioned=" << b.bound_partitioned
        << " bound_binomial=" << b.bound_binomial
        << " sharp_partitioned=" << (b.sharp_partitioned ? "yes" : "no")
        << " sharp_binomial=" << (b.sharp_binomial ? "yes" : "no") << "\n";
  }
  return 0;
}

int do_sharpness(const Options& opt, std::ostream& out) {
  std::vector<int> ds;
  if (opt.d > 0)
    ds.push_back(opt.d);
  else
    ds = {2, 3, 4, 5};

  nlohmann::json partitioned = nlohmann::json::array();
  nlohmann::json binomial_rows = nlohmann::json::array();
  std::ostringstream text;
  for (int d : ds) {
    NumericalSemigroup sd = family_S_d(d);
    BoundReport b = bound_report(sd, d, opt.max_d);
    partitioned.push_back({{"d", d},
                           {"gens", sd.minimal_generators().elements()},
                           {"nu_quotient", b.nu_quotient},
                           {"bound_partitioned", b.bound_partitioned},
                           {"sharp", b.sharp_partitioned}});
    text << "S_d family, d=" << d << ": gens=" << join(sd.minimal_generators().elements())
         << " nu=" << b.nu_quotient << " bound_partitioned=" << b.bound_partitioned
         << " sharp=" << (b.sharp_partitioned ? "yes" : "no") << "\n";
    for (int n = 2; n <= 4; ++n) {
      NumericalSemigroup snd = family_S_n_d(n, d);
      BoundReport bb = bound_report(snd, d, opt.max_d);
      binomial_rows.push_back({{"n", n},
                               {"d", d},
                               {"gens", snd.minimal_generators().elements()},
                               {"nu_quotient", bb.nu_quotient},
                               {"bound_binomial", bb.bound_binomial},
                               {"sharp", bb.sharp_binomial}});
      text << "S_{n,d} family, n=" << n << " d=" << d
           << ": gens=" << join(snd.minimal_generators().elements())
           << " nu=" << bb.nu_quotient << " bound_binomial=" << bb.bound_binomial
           << " sharp=" << (bb.sharp_binomial ? "yes" : "no") << "\n";
    }
  }
  if (opt.json)
    emit(out, {{"partitioned", partitioned}, {"binomial", binomial_rows}});
  else
    out << text.str();
  return 0;
}

int do_sym_closure(const Options& opt, std::ostream& out) {
  NumericalSemigroup s = make_semigroup(parse_generators_csv(opt.gens));
  NumericalSemigroup t = symmetric_closure(s);
  bool symmetric = is_symmetric(t);
  if (opt.json) {
    emit(out, {{"gens", s.minimal_generators().elements()},
               {"closure", semigroup_json(t)},
               {"symmetric", symmetric}});
  } else {
    out << "closure minimal generators: " << join(t.minimal_generators().elements()) << "\n"
        << "frobenius: " << t.frobenius() << "\n"
        << "symmetric: " << (symmetric ? "yes" : "no") << "\n";
  }
  return 0;
}

int do_sym_cover(const Options& opt, std::ostream& out) {
  NumericalSemigroup s = make_semigroup(parse_generators_csv(opt.gens));
  std::int64_t rho = opt.rho >= 0 ? opt.rho : admissible_rhos(s, opt.d, 1).front();
  NumericalSemigroup t = symmetric_cover(s, opt.d, rho);
  bool check = quotient_oracle(t, opt.d) == s;
  if (opt.json) {
    emit(out, cover_json(rho, t, check));
  } else {
    out << "rho = " << rho << "\n"
        << "T minimal generators: " << join(t.minimal_generators().elements()) << "\n"
        << "frobenius(T) = " << t.frobenius() << "\n"
        << "quotient check: " << (check ? "yes" : "no") << "\n";
  }
  return 0;
}

int do_two_gens_d3(const Options& opt, std::ostream& out) {
  GeneratorSet pair = parse_generators_csv(opt.gens);
  if (pair.size() != 2)
    fail(errc::usage, "two-gens-d3 needs exactly two distinct generators");
  std::int64_t n1 = pair.elements()[0], n2 = pair.elements()[1];
  GeneratorSet closed = quotient_two_gens_d3(n1, n2);
  NumericalSemigroup oracle = quotient_oracle(make_semigroup(pair), 3);
  bool agree = make_semigroup(closed) == oracle;
  if (opt.json) {
    emit(out, {{"n1", n1},
               {"n2", n2},
               {"closed_form", closed.elements()},
               {"quotient", semigroup_json(oracle)},
               {"agree", agree}});
  } else {
    out << "closed form generators: " << join(closed.elements()) << "\n"
        << "<" << n1 << "," << n2 << ">/3 minimal generators: "
        << join(oracle.minimal_generators().elements()) << "\n"
        << "agree: " << (agree ? "yes" : "no") << "\n";
  }
  return agree ? 0 : 1;
}

int do_selftest(const Options& opt, std::ostream& out) {
  bool all_ok = true;
  auto check = [&](bool ok, const std::string& label) {
    out << (ok ? "ok" : "FAIL") << ": " << label << "\n";
    all_ok = all_ok && ok;
  };

  auto plain = [](std::vector<std::vector<int>> parts, int d) {
    std::vector<DPartition> ps;
    for (auto& p : parts) ps.push_back({d, std::move(p)});
    return ps;
  };
  check(enumerate_d_partitions(1) == plain({{0}}, 1), "P(1) = {(0)}");
  check(enumerate_d_partitions(2) == plain({{0}, {1, 1}}, 2), "P(2) = {(0),(1,1)}");
  check(enumerate_d_partitions(3) == plain({{0}, {1, 2}, {1, 1, 1}, {2, 2, 2}}, 3),
        "P(3) = {(0),(1,2),(1,1,1),(2,2,2)}");
  check(count_d_partitions(4) == 7, "|P(4)| = 7");

  NumericalSemigroup s = make_semigroup(GeneratorSet({7, 9, 13}));
  GammaSet g = gamma(s, 3);
  BoundReport b = bound_report(s, 3);
  check(g.elements == std::vector<std::int64_t>({3, 7, 9, 11, 13}),
        "gamma(<7,9,13>/3) = {3,7,9,11,13}");
  check(quotient_oracle(s, 3).minimal_generators().elements() ==
            std::vector<std::int64_t>({3, 7, 11}),
        "<7,9,13>/3 = <3,7,11>");
  check(b.bound_partitioned == 5 && b.bound_binomial == 10,
        "<7,9,13>/3 bounds: partitioned 5, binomial 10");
  check(quotient_via_gamma(s, 3) == quotient_oracle(s, 3),
        "<7,9,13>/3 generating-set construction matches oracle");

  for (int d = 2; d <= 5; ++d) {
    NumericalSemigroup sd = family_S_d(d);
    BoundReport r = bound_report(sd, d);
    check(r.nu_quotient == d && r.bound_partitioned == d,
          "S_d family sharp at d = " + std::to_string(d));
  }

  for (auto [n, d] : std::vector<std::pair<int, int>>{{2, 2}, {3, 2}, {4, 2}, {2, 3}}) {
    NumericalSemigroup snd = family_S_n_d(n, d);
    BoundReport r = bound_report(snd, d);
    check(r.nu_quotient == r.bound_binomial, "S_{n,d} family sharp at (n,d) = (" +
                                                 std::to_string(n) + "," + std::to_string(d) +
                                                 ")");
  }
  {
    // At (3,3) two distinct generator multisets collide on one sum, so the
    // quotient's embedding dimension is |Gamma| = 9, one short of C(5,3);
    // the construction itself still matches the oracle exactly.
    NumericalSemigroup snd = family_S_n_d(3, 3);
    GammaSet g33 = gamma(snd, 3);
    NumericalSemigroup q = quotient_oracle(snd, 3);
    check(quotient_via_gamma(snd, 3) == q &&
              q.embedding_dimension() == static_cast<std::int64_t>(g33.elements.size()) &&
              q.embedding_dimension() <= bound_binomial(snd, 3),
          "S_{n,d} family at (3,3): construction matches oracle, nu = |gamma|");
  }

  std::mt19937_64 rng(opt.seed);
  std::uniform_int_distribution<int> nu_dist(2, 4);
  std::uniform_int_distribution<std::int64_t> gen_dist(2, 60);
  int tested = 0;
  bool sweep_ok = true;
  while (tested < 25) {
    std::vector<std::int64_t> gens;
    int k = nu_dist(rng);
    for (int i = 0; i < k; ++i) gens.push_back(gen_dist(rng));
    GeneratorSet gs(gens);
    if (gs.gcd() != 1) continue;
    ++tested;
    NumericalSemigroup rand_s = make_semigroup(gs);
    for (int d = 1; d <= 6; ++d)
      sweep_ok = sweep_ok && quotient_via_gamma(rand_s, d, opt.max_d) == quotient_oracle(rand_s, d);
  }
  check(sweep_ok, "random sweep: generating-set construction matches oracle (25 semigroups, d = 1..6)");

  out << (all_ok ? "selftest passed" : "selftest FAILED") << "\n";
  return all_ok ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"numerical semigroup quotients via d-partitions"};
  app.name("sgpq");
  app.require_subcommand(1);

  Options opt;
  auto add_common = [&](CLI::App* sub, bool gens, bool d_required) {
    if (gens) sub->add_option("--gens", opt.gens, "comma-separated generators")->required();
    if (d_required) sub->add_option("--d", opt.d, "quotient denominator")->required();
    sub->add_flag("--json", opt.json, "emit a JSON report");
    return sub;
  };

  CLI::App* quotient = add_common(
      app.add_subcommand("quotient", "minimal generators of S/d, oracle-checked"), true, true);
  quotient->add_option("--max-d", opt.max_d, "d-partition enumeration cap");
  CLI::App* dpartitions =
      add_common(app.add_subcommand("dpartitions", "enumerate P(d)"), false, true);
  dpartitions->add_option("--max-d", opt.max_d, "d-partition enumeration cap");
  CLI::App* gamma_cmd = add_common(
      app.add_subcommand("gamma", "the generating set of S/d with witnesses"), true, true);
  gamma_cmd->add_option("--max-d", opt.max_d, "d-partition enumeration cap");
  CLI::App* bounds = add_common(
      app.add_subcommand("bounds", "embedding-dimension bounds for S/d"), true, true);
  bounds->add_option("--max-d", opt.max_d, "d-partition enumeration cap");
  CLI::App* sharpness = add_common(
      app.add_subcommand("sharpness", "evaluate both bounds on their sharp families"), false,
      false);
  sharpness->add_option("--d", opt.d, "restrict to one d (default: 2..5)");
  sharpness->add_option("--max-d", opt.max_d, "d-partition enumeration cap");
  CLI::App* closure = add_common(
      app.add_subcommand("sym-closure", "smallest symmetric extension with the same Frobenius"),
      true, false);
  CLI::App* cover = add_common(
      app.add_subcommand("sym-cover", "symmetric T with T/d = S"), true, true);
  cover->add_option("--rho", opt.rho, "Frobenius number of the cover (default: smallest)");
  CLI::App* two_gens = add_common(
      app.add_subcommand("two-gens-d3", "closed-form <n1,n2>/3 against the oracle"), true,
      false);
  CLI::App* selftest =
      app.add_subcommand("selftest", "golden cases; nonzero exit on any mismatch");
  selftest->add_option("--seed", opt.seed, "seed for the randomized sweep");
  selftest->add_option("--max-d", opt.max_d, "d-partition enumeration cap");

  std::string verb;
  for (const std::string& a : args)
    if (kSynopsis.count(a)) {
      verb = a;
      break;
    }

  try {
    app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << kSynopsis.at(verb) << "\n";
    return 2;
  }

  try {
    if (app.got_subcommand(quotient)) return do_quotient(opt, out);
    if (app.got_subcommand(dpartitions)) return do_dpartitions(opt, out);
    if (app.got_subcommand(gamma_cmd)) return do_gamma(opt, out);
    if (app.got_subcommand(bounds)) return do_bounds(opt, out);
    if (app.got_subcommand(sharpness)) return do_sharpness(opt, out);
    if (app.got_subcommand(closure)) return do_sym_closure(opt, out);
    if (app.got_subcommand(cover)) return do_sym_cover(opt, out);
    if (app.got_subcommand(two_gens)) return do_two_gens_d3(opt, out);
    if (app.got_subcommand(selftest)) return do_selftest(opt, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    if (e.code() == errc::usage) {
      err << kSynopsis.at(verb) << "\n";
      return 2;
    }
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;  // unreachable with require_subcommand(1)
}

}  // namespace sgpq
