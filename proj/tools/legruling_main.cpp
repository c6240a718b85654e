// legruling: rulings and polynomial invariants of Legendrian fronts.

#include <filesystem>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "legruling/analysis.hpp"
#include "legruling/corpus.hpp"
#include "legruling/front_io.hpp"
#include "legruling/json.hpp"

namespace {

using namespace legruling;
using nlohmann::json;

enum ExitCode : int { kOk = 0, kCheckFailed = 1, kResourceLimit = 2, kInputError = 3 };

struct Settings {
  std::string format = "json";
  std::string grading = "ungraded";
  std::vector<int> reversed;
  int max_crossings = 16;
  std::optional<int> khovanov_bound;
  std::vector<std::string> inputs;
};

FrontDiagram load_input(const std::string& arg) {
  if (std::filesystem::exists(arg)) return read_front(arg);
  if (auto f = find_corpus_front(arg)) return *f;
  throw std::runtime_error("no such file or corpus front: " + arg);
}

// Result of one per-file computation: JSON payload, text rendering, verdict.
struct Outcome {
  json payload;
  std::string text;
  int code = kOk;
};

int emit(const Settings& s, const std::vector<Outcome>& outcomes) {
  int code = kOk;
  if (s.format == "json") {
    json out;
    if (outcomes.size() == 1) {
      out = outcomes.front().payload;
    } else {
      out = json::array();
      for (const auto& o : outcomes) out.push_back(o.payload);
    }
    std::cout << out.dump(2) << '\n';
  } else {
    for (const auto& o : outcomes) std::cout << o.text;
  }
  for (const auto& o : outcomes) code = std::max(code, o.code);
  return code;
}

int run_per_file(const Settings& s, const std::function<Outcome(const FrontDiagram&)>& fn) {
  std::vector<Outcome> outcomes;
  for (const auto& in : s.inputs) {
    try {
      outcomes.push_back(fn(load_input(in)));
    } catch (const ParseError& e) {
      std::cerr << in << ": " << e.what() << '\n';
      return kInputError;
    } catch (const ResourceLimitError& e) {
      std::cerr << in << ": " << e.what() << '\n';
      outcomes.push_back({{{"input", in}, {"error", e.what()}}, in + ": " + e.what() + "\n", kResourceLimit});
    } catch (const std::invalid_argument& e) {
      std::cerr << in << ": " << e.what() << '\n';
      return kInputError;
    } catch (const std::runtime_error& e) {
      std::cerr << in << ": " << e.what() << '\n';
      return kInputError;
    }
  }
  return emit(s, outcomes);
}

SkeinOptions skein_options(const Settings& s) { return {s.max_crossings, SkeinStrategy::Standard}; }

std::string pass_word(bool b) { return b ? "pass" : "FAIL"; }

Outcome do_validate(const FrontDiagram& f) {
  const auto report = validate(f);
  std::ostringstream text;
  text << f.name << ": " << (report.ok() ? "ok" : "invalid") << '\n';
  for (const auto& v : report.violations) text << "  event " << v.event << ": " << v.message << '\n';
  json j = to_json(report);
  j["name"] = f.name;
  return {j, text.str(), report.ok() ? kOk : kCheckFailed};
}

Outcome do_invariants(const Settings& s, const FrontDiagram& f) {
  const OrientedFront of(f, s.reversed);
  json j = to_json(of);
  j["diagram"] = LinkDiagram::from_front(of).to_pd_json();
  std::ostringstream text;
  text << f.name << ": tb = " << of.invariants().tb << ", r = " << of.invariants().r
       << ", writhe = " << of.invariants().writhe << ", components = " << of.num_components() << '\n';
  return {j, text.str(), kOk};
}

Outcome do_rulings(const Settings& s, const FrontDiagram& f) {
  const OrientedFront of(f, s.reversed);
  const GradingClass g = parse_grading_class(s.grading);
  const RulingCensus c = census(of);
  json j = to_json(c, g);
  j["name"] = f.name;
  std::ostringstream text;
  text << f.name << ": " << c.rulings(g).size() << ' ' << to_string(g) << " rulings, polynomial "
       << to_string(c.polynomial(g)) << '\n';
  for (const auto& r : c.rulings(g)) {
    text << "  switches {";
    for (std::size_t i = 0; i < r.switches.size(); ++i) text << (i ? "," : "") << r.switches[i];
    text << "} theta = " << r.theta << ", " << to_string(r.grading);
    if (r.genus) text << ", genus " << *r.genus;
    text << '\n';
  }
  return {j, text.str(), kOk};
}

Outcome do_polynomial(const Settings& s, const FrontDiagram& f, const std::string& which) {
  const OrientedFront of(f, s.reversed);
  const LinkDiagram d = LinkDiagram::from_front(of);
  json j = {{"name", f.name}};
  std::string rendered;
  if (which == "homfly") {
    const auto p = homfly(d, skein_options(s));
    j["homfly"] = to_json(p);
    rendered = to_string(p);
  } else if (which == "kauffman") {
    const auto p = kauffman_dubrovnik(d, skein_options(s));
    j["kauffman"] = to_json(p);
    rendered = to_string(p);
  } else {
    const auto p = conway(homfly(d, skein_options(s)));
    j["conway"] = to_json(p);
    rendered = to_string(p);
  }
  return {j, f.name + ": " + which + " = " + rendered + "\n", kOk};
}

Outcome do_rutherford(const Settings& s, const FrontDiagram& f) {
  const OrientedFront of(f, s.reversed);
  const RulingCensus c = census(of);
  const Polynomials polys = compute_polynomials(of, skein_options(s));
  const RutherfordCheck r = rutherford_check(of, c, polys);
  const MaxTbCertificate cert = max_tb_certificate(of, c, polys.homfly);
  const bool ok = r.pass() && cert.consistent();
  json j = {{"name", f.name}, {"rutherford", to_json(r)}, {"max_tb_certificate", to_json(cert)}, {"pass", ok}};
  std::ostringstream text;
  text << f.name << ": tb = " << r.tb << ", e = " << cert.e << (cert.maximal ? " (maximal tb)" : "") << '\n'
       << "  2-graded: " << pass_word(r.two_graded_pass()) << "  homfly slice " << to_string(r.homfly_slice)
       << " | rulings " << to_string(r.two_graded_poly) << '\n'
       << "  ungraded: " << pass_word(r.ungraded_pass()) << "  kauffman slice " << to_string(r.kauffman_slice)
       << " | rulings " << to_string(r.ungraded_poly) << '\n';
  return {j, text.str(), ok ? kOk : kCheckFailed};
}

Outcome do_rho(const Settings& s, const FrontDiagram& f) {
  AnalysisOptions opts{skein_options(s), s.khovanov_bound, s.reversed};
  const AnalysisReport rep = analyze(f, opts);
  json j = {{"name", f.name}, {"rho", to_json(rep.rho)}, {"M", rep.profile.M}, {"e", rep.profile.e}};
  std::ostringstream text;
  text << f.name << ": rho = " << (rep.rho.value ? std::to_string(*rep.rho.value) : std::string(to_string(rep.rho.kind)))
       << " (" << rep.rho.reason << ")\n";
  return {j, text.str(), rep.rho.consistent ? kOk : kCheckFailed};
}

Outcome do_tests(const Settings& s, const FrontDiagram& f) {
  AnalysisOptions opts{skein_options(s), s.khovanov_bound, s.reversed};
  const AnalysisReport rep = analyze(f, opts);
  std::ostringstream text;
  text << f.name << ": " << (rep.all_pass() ? "all checks pass" : "CHECKS FAILED") << '\n';
  text << "  rutherford: 2-graded " << pass_word(rep.rutherford.two_graded_pass()) << ", ungraded "
       << pass_word(rep.rutherford.ungraded_pass()) << '\n';
  text << "  tb + 1 = " << rep.max_tb.tb + 1 << ", e = " << rep.max_tb.e << '\n';
  text << "  obstructions: kauffman " << rep.no_ruling.kauffman_beats_homfly << ", negative "
       << rep.no_ruling.negative_counts << ", subset " << rep.no_ruling.subset_failure << ", khovanov "
       << (rep.no_ruling.khovanov_beats_homfly ? std::to_string(*rep.no_ruling.khovanov_beats_homfly) : "n/a") << '\n';
  if (rep.genus_tests) {
    text << "  bennequin test " << pass_word(rep.genus_tests->bennequin) << ", conway test "
         << pass_word(rep.genus_tests->conway) << '\n';
  }
  if (rep.genus_chain) {
    const auto& t = *rep.genus_chain;
    text << "  genus chain: " << (t.max_ruling_genus ? std::to_string(*t.max_ruling_genus) : "-") << " <= " << t.M
         << "/2 <= " << t.max_z_degree << "/2 <= " << t.seifert_genus << "  " << pass_word(t.holds()) << '\n';
  }
  for (const auto& msg : rep.failures) text << "  failure: " << msg << '\n';
  return {to_json(rep), text.str(), rep.all_pass() ? kOk : kCheckFailed};
}

int do_connsum(const Settings& s) {
  if (s.inputs.size() != 2) {
    std::cerr << "connsum takes exactly two fronts\n";
    return kInputError;
  }
  try {
    const FrontDiagram f1 = load_input(s.inputs[0]);
    const FrontDiagram f2 = load_input(s.inputs[1]);
    const ConnsumCheck c = connsum_check(f1, f2);
    const OrientedFront sum(connected_sum(f1, f2));
    const RutherfordCheck r = rutherford_check(sum, skein_options(s));
    const bool ok = c.pass() && r.pass();
    json j = to_json(c);
    j["events"] = render_front(sum.front());
    j["rutherford"] = to_json(r);
    j["pass"] = ok;
    std::ostringstream text;
    text << c.name << ": product census " << pass_word(c.pass()) << ", rutherford on the sum " << pass_word(r.pass())
         << '\n';
    for (const auto& pc : c.classes) {
      text << "  " << to_string(pc.grading) << ": " << pc.count_left << " x " << pc.count_right << " = "
           << pc.count_sum << '\n';
    }
    return emit(s, {{j, text.str(), ok ? kOk : kCheckFailed}});
  } catch (const ResourceLimitError& e) {
    std::cerr << e.what() << '\n';
    return kResourceLimit;
  } catch (const std::exception& e) {
    std::cerr << e.what() << '\n';
    return kInputError;
  }
}

int do_corpus(const Settings& s) {
  std::vector<CorpusEntry> entries;
  try {
    entries = active_corpus();
  } catch (const std::exception& e) {
    std::cerr << e.what() << '\n';
    return kInputError;
  }
  json out = json::array();
  std::ostringstream text;
  for (const auto& e : entries) {
    out.push_back({{"name", e.front.name}, {"description", e.description}, {"front", render_front(e.front)}});
    text << e.front.name << "  " << e.description << '\n';
  }
  if (s.format == "json") {
    std::cout << out.dump(2) << '\n';
  } else {
    std::cout << text.str();
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Normal rulings and skein polynomials of Legendrian front diagrams"};
  app.require_subcommand(1);
  app.fallthrough();

  Settings s;
  app.add_option("--format", s.format, "Output format")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--class", s.grading, "Ruling class listed by 'rulings'")
      ->check(CLI::IsMember({"ungraded", "two_graded", "z_graded"}));
  app.add_option("--reverse-component", s.reversed, "Reverse the orientation of a component (0-based id), repeatable")
      ->allow_extra_args(false);
  app.add_option("--max-crossings", s.max_crossings, "Crossing ceiling for the skein recursion")
      ->check(CLI::PositiveNumber);
  app.add_option("--khovanov-bound", s.khovanov_bound,
                 "min{k : sum_{i-j=k} HKh^{i,j} != 0}, enables the Khovanov obstruction");

  struct Cmd {
    const char* name;
    const char* help;
  };
  const std::vector<Cmd> per_file = {
      {"validate", "Check front files against the event rules"},
      {"invariants", "tb, rotation, Maslov potential, crossing signs and indices, PD export"},
      {"rulings", "Enumerate normal rulings"},
      {"homfly", "Homfly polynomial"},
      {"kauffman", "Dubrovnik-Kauffman polynomial"},
      {"conway", "Conway polynomial"},
      {"rutherford", "Compare ruling polynomials with the polynomial slices at v^(tb+1)"},
      {"rho", "Ruling genus"},
      {"tests", "Full analysis report"},
  };
  for (const auto& c : per_file) {
    auto* sub = app.add_subcommand(c.name, c.help);
    sub->add_option("fronts", s.inputs, "Front files or bundled corpus names")->required();
  }
  auto* connsum = app.add_subcommand("connsum", "Connected sum and product-census check");
  connsum->add_option("fronts", s.inputs, "Two front files or corpus names")->required()->expected(2);
  app.add_subcommand("corpus", "List the bundled corpus");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kInputError;
  }
  if (s.max_crossings > 16) {
    std::cerr << "warning: skein recursion time grows exponentially with the crossing count\n";
  }

  const std::string cmd = app.get_subcommands().front()->get_name();
  if (cmd == "corpus") return do_corpus(s);
  if (cmd == "connsum") return do_connsum(s);
  return run_per_file(s, [&](const FrontDiagram& f) -> Outcome {
    if (cmd == "validate") return do_validate(f);
    if (cmd == "invariants") return do_invariants(s, f);
    if (cmd == "rulings") return do_rulings(s, f);
    if (cmd == "homfly" || cmd == "kauffman" || cmd == "conway") return do_polynomial(s, f, cmd);
    if (cmd == "rutherford") return do_rutherford(s, f);
    if (cmd == "rho") return do_rho(s, f);
    return do_tests(s, f);
  });
}
