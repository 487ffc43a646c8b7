#include "fproot/cli.hpp"

#include <CLI11.hpp>
#include <chrono>
#include <ostream>

#include "fproot/check.hpp"
#include "fproot/content.hpp"
#include "fproot/frobenius.hpp"
#include "fproot/hsl.hpp"
#include "fproot/invariants.hpp"
#include "fproot/report.hpp"

namespace fproot {

namespace {

struct Options {
  std::string ring;
  std::vector<std::string> ideals;
  std::string poly;
  std::string q;
  std::string t;
  std::string lo = "0";
  std::string hi = "1";
  std::int64_t emax = 6;
  std::int64_t smax = 12;
  std::int64_t denom_bound = 12;
  std::uint64_t seed = 2026;
  std::string base;
  std::string multiplier;
  std::int64_t a_exp = 1;
  std::int64_t beta = 1;
  bool json = false;
};

std::vector<std::string> split_commas(const std::string& text) {
  std::vector<std::string> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto comma = text.find(',', pos);
    if (comma == std::string::npos) comma = text.size();
    out.push_back(text.substr(pos, comma - pos));
    if (comma == text.size()) break;
    pos = comma + 1;
  }
  return out;
}

Ring need_ring(const Options& opt) {
  if (opt.ring.empty()) throw DomainError("missing --ring");
  return parse_ring(opt.ring);
}

Ideal parse_ideal(const std::string& text, const Ring& ring) {
  std::vector<Polynomial> gens;
  for (const auto& chunk : split_commas(text)) gens.push_back(parse_poly(chunk, ring));
  return Ideal(ring, std::move(gens));
}

std::int64_t parse_q(const std::string& text, const Ring& ring) {
  std::int64_t q = 0;
  auto caret = text.find('^');
  if (caret != std::string::npos) {
    std::int64_t base = BigInt::from_decimal(text.substr(0, caret)).to_int64();
    std::int64_t exp = BigInt::from_decimal(text.substr(caret + 1)).to_int64();
    if (base != static_cast<std::int64_t>(ring->p))
      throw BadPower("q base " + std::to_string(base) + " differs from p=" +
                     std::to_string(ring->p));
    if (exp < 0) throw BadPower("negative Frobenius level");
    q = checked_pow_i64(base, exp, q_cap());
  } else {
    q = BigInt::from_decimal(text).to_int64();
  }
  require_p_power(q, *ring);
  return q;
}

Json jump_witnesses(const JumpDecision& decision) {
  return Json{{"tau_at", basis_to_json(decision.tau_at)},
              {"tau_left", basis_to_json(decision.tau_left)}};
}

struct Invocation {
  Json inputs;
  Json result;
  Json witnesses = Json::object();
  Ring ring;
  bool failed_check = false;
};

Invocation dispatch(const std::string& command, const Options& opt) {
  Invocation inv;
  if (command == "gb") {
    inv.ring = need_ring(opt);
    if (opt.ideals.size() != 1) throw DomainError("gb expects exactly one --ideal");
    Ideal ideal = parse_ideal(opt.ideals[0], inv.ring);
    inv.inputs = Json{{"ideal", ideal_to_json(ideal)}};
    inv.result = Json{{"basis", basis_to_json(ideal)["gens"]}};
  } else if (command == "member") {
    inv.ring = need_ring(opt);
    if (opt.ideals.size() != 1 || opt.poly.empty())
      throw DomainError("member expects --poly and one --ideal");
    Polynomial f = parse_poly(opt.poly, inv.ring);
    Ideal ideal = parse_ideal(opt.ideals[0], inv.ring);
    inv.inputs = Json{{"poly", f.str()}, {"ideal", ideal_to_json(ideal)}};
    inv.result = Json{{"member", membership(f, ideal)}};
  } else if (command == "intersect") {
    inv.ring = need_ring(opt);
    if (opt.ideals.size() < 2) throw DomainError("intersect expects at least two --ideal");
    std::vector<Ideal> family;
    Json in = Json::array();
    for (const auto& text : opt.ideals) {
      family.push_back(parse_ideal(text, inv.ring));
      in.push_back(ideal_to_json(family.back()));
    }
    Ideal meet = family[0];
    for (std::size_t i = 1; i < family.size(); ++i) meet = ideal_intersect(meet, family[i]);
    inv.inputs = Json{{"ideals", in}};
    inv.result = Json{{"ideal", ideal_to_json(meet)}};
  } else if (command == "bracket" || command == "root") {
    inv.ring = need_ring(opt);
    if (opt.ideals.size() != 1 || opt.q.empty())
      throw DomainError(command + " expects one --ideal and --q");
    Ideal ideal = parse_ideal(opt.ideals[0], inv.ring);
    std::int64_t q = parse_q(opt.q, inv.ring);
    inv.inputs = Json{{"ideal", ideal_to_json(ideal)}, {"q", q}};
    Ideal value = command == "bracket" ? bracket_power(ideal, q) : frobenius_root(ideal, q);
    inv.result = Json{{"ideal", ideal_to_json(value)}};
  } else if (command == "nu") {
    inv.ring = need_ring(opt);
    if (opt.poly.empty()) throw DomainError("nu expects --poly");
    Polynomial g = parse_poly(opt.poly, inv.ring);
    inv.inputs = Json{{"poly", g.str()}, {"emax", opt.emax}};
    auto values = nu_sequence(g, opt.emax);
    Json rows = Json::array();
    std::int64_t q = 1;
    for (std::size_t i = 0; i < values.size(); ++i) {
      q *= static_cast<std::int64_t>(inv.ring->p);
      rows.push_back(Json{{"e", static_cast<std::int64_t>(i + 1)}, {"q", q}, {"nu", values[i]}});
    }
    inv.result = Json{{"values", rows}};
  } else if (command == "tau") {
    inv.ring = need_ring(opt);
    if (opt.ideals.size() != 1 || opt.t.empty())
      throw DomainError("tau expects one --ideal and --t");
    Ideal a = parse_ideal(opt.ideals[0], inv.ring);
    BigRational t = BigRational::parse(opt.t);
    inv.inputs = Json{{"ideal", ideal_to_json(a)}, {"t", t.to_string()}, {"emax", opt.emax}};
    BmsResult res = bms_test_ideal(a, t, opt.emax);
    inv.result = Json{{"ideal", basis_to_json(res.tau)}};
    inv.witnesses = Json{{"chain", chain_to_json(res.chain)}};
  } else if (command == "fpt") {
    inv.ring = need_ring(opt);
    if (opt.poly.empty()) throw DomainError("fpt expects --poly");
    Polynomial g = parse_poly(opt.poly, inv.ring);
    inv.inputs = Json{{"poly", g.str()}, {"emax", opt.emax}};
    ThresholdResult res = fpt(g, opt.emax);
    inv.result = threshold_to_json(res);
    if (res.certificate) inv.witnesses = jump_witnesses(*res.certificate);
  } else if (command == "jumps") {
    inv.ring = need_ring(opt);
    if (opt.poly.empty()) throw DomainError("jumps expects --poly");
    Polynomial g = parse_poly(opt.poly, inv.ring);
    BigRational lo = BigRational::parse(opt.lo);
    BigRational hi = BigRational::parse(opt.hi);
    inv.inputs = Json{{"poly", g.str()},
                      {"lo", lo.to_string()},
                      {"hi", hi.to_string()},
                      {"emax", opt.emax},
                      {"denom_bound", opt.denom_bound}};
    JumpScan scan = jumping_numbers(g, lo, hi, opt.emax, opt.denom_bound);
    Json jumps = Json::array();
    for (const auto& j : scan.jumps) jumps.push_back(j.to_string());
    Json notes = Json::array();
    for (const auto& note : scan.notes) notes.push_back(note);
    inv.result = Json{{"jumps", jumps}, {"complete", scan.complete}, {"notes", notes}};
  } else if (command == "hsl") {
    inv.ring = need_ring(opt);
    if (!opt.multiplier.empty()) {
      FrobeniusActionSpec spec{parse_poly(opt.multiplier, inv.ring), opt.a_exp, opt.beta};
      inv.inputs = Json{{"multiplier", spec.u.str()}, {"a", spec.a_exp}, {"beta", spec.beta},
                        {"smax", opt.smax}};
      ChainReport chain = hsl_chain(spec, opt.smax);
      if (!chain.stabilized())
        throw Unstabilized("HSL chain did not stabilize by smax=" + std::to_string(opt.smax),
                           std::move(chain));
      inv.result = Json{{"hsl", *chain.stabilization_index}, {"chain", chain_to_json(chain)}};
    } else {
      if (opt.poly.empty()) throw DomainError("hsl expects --poly (or --multiplier)");
      Polynomial f = parse_poly(opt.poly, inv.ring);
      inv.inputs = Json{{"poly", f.str()}, {"smax", opt.smax}};
      HslResult res = hsl_compute(f, opt.smax);
      inv.result = Json{{"hsl", res.number}, {"chain", chain_to_json(res.chain)}};
    }
  } else if (command == "content") {
    inv.ring = need_ring(opt);
    if (opt.poly.empty() || opt.base.empty())
      throw DomainError("content expects --poly and --base");
    Polynomial f = parse_poly(opt.poly, inv.ring);
    SplitContext split = make_split(inv.ring, split_commas(opt.base));
    inv.inputs = Json{{"poly", f.str()}, {"base", opt.base}};
    inv.result = Json{{"ideal", ideal_to_json(poly_content(f, split).ideal)}};
  } else if (command == "check") {
    inv.inputs = Json{{"seed", opt.seed}};
    auto items = run_identity_suite(opt.seed);
    Json rows = Json::array();
    bool all_ok = true;
    for (const auto& item : items) {
      Json row{{"name", item.name}, {"passed", item.passed}, {"failed", item.failed}};
      if (!item.ok()) {
        row["first_failure"] = item.first_failure;
        all_ok = false;
      }
      rows.push_back(std::move(row));
    }
    inv.result = Json{{"identities", rows}, {"ok", all_ok}};
    inv.failed_check = !all_ok;
  } else {
    throw DomainError("unknown command " + command);
  }
  return inv;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact Frobenius-root, test-ideal, F-threshold and content computations over F_p[x1..xn]"};
  app.set_version_flag("--version", std::string("fproot ") + kVersion);
  app.require_subcommand(1);

  Options opt;
  const std::vector<std::pair<std::string, std::string>> commands = {
      {"gb", "reduced Groebner basis of an ideal"},
      {"member", "ideal membership of a polynomial"},
      {"intersect", "intersection of ideals (elimination)"},
      {"bracket", "Frobenius bracket power I^[q]"},
      {"root", "Frobenius root I^[1/q]"},
      {"nu", "nu-invariants nu_g(p^e) for e = 1..emax"},
      {"tau", "BMS test ideal tau(a^t) with its stabilized chain"},
      {"fpt", "F-pure threshold bracket and certification"},
      {"jumps", "certified F-jumping numbers in (lo, hi]"},
      {"hsl", "Hartshorne-Speiser-Lyubeznik number of a hypersurface"},
      {"content", "Ohm-Rush content over a base variable block"},
      {"check", "run the identity suite over a seeded random corpus"},
  };
  for (const auto& [name, help] : commands) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("--ring", opt.ring, "ring context, e.g. \"p=7;vars=x,y\"");
    sub->add_option("--ideal", opt.ideals, "ideal as comma-separated generators (repeatable)");
    sub->add_option("--poly", opt.poly, "polynomial");
    sub->add_option("--q", opt.q, "p-power, as p^e or an integer");
    sub->add_option("--t", opt.t, "exact exponent, a/b or integer");
    sub->add_option("--lo", opt.lo, "interval lower bound (exclusive), exact fraction");
    sub->add_option("--hi", opt.hi, "interval upper bound (inclusive), exact fraction");
    sub->add_option("--emax", opt.emax, "largest Frobenius level consulted");
    sub->add_option("--smax", opt.smax, "largest chain step");
    sub->add_option("--denom-bound", opt.denom_bound, "candidate denominator bound");
    sub->add_option("--seed", opt.seed, "corpus seed");
    sub->add_option("--base", opt.base, "comma-separated base variables");
    sub->add_option("--multiplier", opt.multiplier, "custom Frobenius action multiplier u");
    sub->add_option("--a", opt.a_exp, "custom action exponent a");
    sub->add_option("--beta", opt.beta, "custom action Frobenius stride beta");
    sub->add_flag("--json", opt.json, "emit a JSON report");
  }

  std::vector<const char*> argv;
  argv.push_back("fproot");
  for (const auto& a : args) argv.push_back(a.c_str());

  std::string command;
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
    for (const auto& [name, help] : commands) {
      (void)help;
      if (app.got_subcommand(name)) {
        command = name;
        break;
      }
    }
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForVersion& e) {
    out << app.version() << "\n";
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 1;
  }

  auto started = std::chrono::steady_clock::now();
  try {
    Invocation inv = dispatch(command, opt);
    double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                          started)
                    .count();
    Json report = make_report(command, inv.ring, std::move(inv.inputs), std::move(inv.result),
                              std::move(inv.witnesses));
    if (opt.json) {
      report["timing_ms"] = ms;
      out << report.dump(2) << "\n";
    } else {
      out << render_text(report);
    }
    return inv.failed_check ? 2 : 0;
  } catch (const Unstabilized& e) {
    if (opt.json) {
      Json payload{{"command", command},
                   {"version", kVersion},
                   {"error", Json{{"kind", "unstabilized"}, {"message", e.what()},
                                  {"partial_chain", chain_to_json(e.partial())}}}};
      out << payload.dump(2) << "\n";
    }
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    if (opt.json) {
      Json payload{{"command", command},
                   {"version", kVersion},
                   {"error", Json{{"kind", "domain"}, {"message", e.what()}}}};
      out << payload.dump(2) << "\n";
    }
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace fproot
