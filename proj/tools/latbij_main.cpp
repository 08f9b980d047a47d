// latbij command-line tool: apply/trace/verify/enumerate for the two
// lattice-path bijections and their counting identities.
//
// Exit codes: 0 success, 1 verification failure, 2 parse/paramater error,
// 3 precondition violation.

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "latbij/jsonio.hpp"
#include "latbij/oracle.hpp"
#include "latbij/render.hpp"
#include "latbij/trace.hpp"

using namespace latbij;
using nlohmann::json;

namespace {

// ---------------------------------------------------------------------------
// apply / trace
// ---------------------------------------------------------------------------

struct Applied {
  std::string text;
  json as_json;
};

Applied apply_one(const std::string& bijection, const std::string& input) {
  if (bijection == "g") {
    MarkedPath m = g_map(parse_triple(input));
    return {to_text(m), json_of(m)};
  }
  if (bijection == "g-inv") {
    PathTriple t = g_inv(parse_marked(input));
    return {to_text(t), json_of(t)};
  }
  if (bijection == "F") {
    AvoidPath u = big_f(TiePath::make(parse_ne(input)));
    return {to_text(u.path), json_of(u.path)};
  }
  if (bijection == "F-inv") {
    TiePath t = big_f_inv(AvoidPath::make(parse_ne(input)));
    return {to_text(t.path), json_of(t.path)};
  }
  if (bijection == "soccer") {
    MarkedTiePath m = soccer_forward(parse_ne(input));
    return {to_text(m), json_of(m)};
  }
  if (bijection == "soccer-inv") {
    NEPath p = soccer_inverse(parse_marked_tie(input));
    return {to_text(p), json_of(p)};
  }
  throw parse_error("unknown bijection: " + bijection);
}

std::vector<TraceEvent> trace_one(const std::string& bijection,
                                  const std::string& input, std::string& result) {
  std::vector<TraceEvent> events;
  if (bijection == "g") {
    MarkedPath out;
    events = trace_g(parse_triple(input), &out);
    result = to_text(out);
  } else if (bijection == "g-inv") {
    PathTriple out;
    events = trace_g_inv(parse_marked(input), &out);
    result = to_text(out);
  } else if (bijection == "F") {
    AvoidPath out;
    events = trace_big_f(TiePath::make(parse_ne(input)), &out);
    result = to_text(out.path);
  } else if (bijection == "F-inv") {
    TiePath out;
    events = trace_big_f_inv(AvoidPath::make(parse_ne(input)), &out);
    result = to_text(out.path);
  } else if (bijection == "soccer") {
    MarkedTiePath out;
    events = trace_soccer_forward(parse_ne(input), &out);
    result = to_text(out);
  } else if (bijection == "soccer-inv") {
    NEPath out;
    events = trace_soccer_inverse(parse_marked_tie(input), &out);
    result = to_text(out);
  } else {
    throw parse_error("unknown bijection: " + bijection);
  }
  return events;
}

// Best-effort drawing of a serialized value; class labels yield nothing.
std::string render_value(const std::string& value) {
  try {
    if (value.rfind("n=", 0) == 0) return render_ne(parse_ank(value).path);
    if (!value.empty() && value[0] == '(') {
      if (value.find('@') != std::string::npos) {
        MarkedTiePath m = parse_marked_tie(value);
        return render_marked_tie(m);
      }
      return render_ne(parse_ne(value));
    }
    if (value.find('|') != std::string::npos)
      return render_triple(parse_triple(value));
    if (value.find('@') != std::string::npos)
      return render_marked(parse_marked(value));
    if (value.find_first_not_of("UD") == std::string::npos && !value.empty())
      return render_ud(parse_ud(value));
  } catch (const std::exception&) {
  }
  return {};
}

std::vector<std::string> gather_inputs(const std::string& input) {
  std::vector<std::string> lines;
  if (input == "-") {
    std::string line;
    while (std::getline(std::cin, line))
      if (!line.empty()) lines.push_back(line);
  } else {
    lines.push_back(input);
  }
  return lines;
}

int cmd_apply(const std::string& bijection, const std::string& input,
              const std::string& format) {
  for (const std::string& line : gather_inputs(input)) {
    Applied out = apply_one(bijection, line);
    if (format == "json")
      std::cout << out.as_json.dump() << "\n";
    else
      std::cout << out.text << "\n";
  }
  return 0;
}

void print_render_indented(const std::string& drawing) {
  std::istringstream in(drawing);
  std::string line;
  while (std::getline(in, line)) std::cout << "    " << line << "\n";
}

int cmd_trace(const std::string& bijection, const std::string& input,
              const std::string& format, const std::string& render) {
  std::vector<std::string> lines = gather_inputs(input);
  if (lines.empty()) throw parse_error("no input to trace");
  const std::string& value = lines.front();

  std::string result;
  std::vector<TraceEvent> events = trace_one(bijection, value, result);

  if (format == "json") {
    json out{{"bijection", bijection}, {"input", value}, {"output", result}};
    out["events"] = json::array();
    for (const TraceEvent& e : events) {
      json je = json_of(e);
      if (render == "ascii") {
        std::string drawing = render_value(e.after);
        if (!drawing.empty()) je["render"] = drawing;
      }
      out["events"].push_back(std::move(je));
    }
    std::cout << out.dump() << "\n";
    return 0;
  }

  std::cout << "trace " << bijection << " " << value << "\n";
  for (std::size_t i = 0; i < events.size(); ++i) {
    const TraceEvent& e = events[i];
    std::cout << " " << (i + 1) << ". " << e.stage << "\n";
    std::cout << "    before: " << e.before << "\n";
    std::cout << "    after:  " << e.after << "\n";
    if (render == "ascii") {
      std::string drawing = render_value(e.after);
      if (!drawing.empty()) print_render_indented(drawing);
    }
  }
  std::cout << "result: " << result << "\n";
  return 0;
}

// ---------------------------------------------------------------------------
// enumerate
// ---------------------------------------------------------------------------

// Streaming generation in the canonical order: Up before Down, East before
// North, outer size split first.

template <class Fn>
void stream_balanced(int semilength, Fn&& fn) {
  std::string s(std::size_t(semilength), 'U');
  s += std::string(std::size_t(semilength), 'D');
  auto less = [](char a, char b) { return (a == 'U' ? 0 : 1) < (b == 'U' ? 0 : 1); };
  do {
    fn(s);
  } while (std::next_permutation(s.begin(), s.end(), less));
}

template <class Fn>
void stream_en_multiset(int easts, int norths, Fn&& fn) {
  std::string s(std::size_t(easts), 'E');
  s += std::string(std::size_t(norths), 'N');
  do {
    fn(s);
  } while (std::next_permutation(s.begin(), s.end()));
}

template <class Fn>
void stream_free(int n, Fn&& fn) {
  std::string s(std::size_t(2 * n), 'E');
  for (;;) {
    fn(s);
    std::size_t i = s.size();
    while (i > 0 && s[i - 1] == 'N') s[--i] = 'E';
    if (i == 0) return;
    s[i - 1] = 'N';
  }
}

int cmd_enumerate(const std::string& set, int n, int k, bool has_k,
                  const std::string& format) {
  const bool jsonl = format == "jsonl";
  if (n < 0) throw parse_error("--n must be non-negative");

  auto emit_ne = [&](GridPoint start, const std::string& steps) {
    if (jsonl)
      std::cout << json_of(NEPath(start, steps)).dump() << "\n";
    else
      std::cout << to_text(NEPath(start, steps)) << "\n";
  };

  if (set == "T") {
    for (int i = 0; i <= n; ++i)
      for (int j = 0; j + i <= n; ++j)
        stream_balanced(i, [&](const std::string& a) {
          stream_balanced(j, [&](const std::string& b) {
            stream_balanced(n - i - j, [&](const std::string& c) {
              if (jsonl)
                std::cout << json{{"A", a}, {"B", b}, {"C", c}}.dump() << "\n";
              else
                std::cout << a << "|" << b << "|" << c << "\n";
            });
          });
        });
    return 0;
  }
  if (set == "D") {
    stream_balanced(n, [&](const std::string& h) {
      for (int x = 0; x <= 2 * n; ++x) {
        if (jsonl)
          std::cout << json{{"H", h}, {"X", x}}.dump() << "\n";
        else
          std::cout << h << "@" << x << "\n";
      }
    });
    return 0;
  }
  if (set == "X") {
    stream_en_multiset(n, n, [&](const std::string& s) { emit_ne({0, 0}, s); });
    return 0;
  }
  if (set == "Y") {
    stream_free(n, [&](const std::string& s) {
      NEPath p({0, 0}, s);
      if (last_diagonal_touch(p) == 0) emit_ne({0, 0}, s);
    });
    return 0;
  }
  if (set == "free") {
    stream_free(n, [&](const std::string& s) { emit_ne({0, 0}, s); });
    return 0;
  }
  if (set == "A" || set == "B") {
    if (!has_k) throw parse_error("--set " + set + " requires --k");
    if (n < 1) throw parse_error("--set " + set + " requires n >= 1");
    if (k < n || k > 2 * n) throw parse_error("--k must lie in [n, 2n]");
    stream_en_multiset(k - 1, 2 * n - k, [&](const std::string& s) {
      NEPath p({1, 0}, s);
      if (set == "A" || !first_diagonal_touch(p).has_value()) emit_ne({1, 0}, s);
    });
    return 0;
  }
  throw parse_error("unknown set: " + set);
}

// ---------------------------------------------------------------------------
// verify
// ---------------------------------------------------------------------------

struct SuiteState {
  unsigned long long checks = 0;
  unsigned long long failures = 0;
};

void print_report(const std::string& label, const VerifyReport& rep,
                  SuiteState& state) {
  ++state.checks;
  if (!rep.pass()) ++state.failures;
  std::cout << label << "\n" << rep.to_text() << "\n";
}

void verify_soccer_suite(int n_max, unsigned threads, SuiteState& state) {
  auto show_ank = [](const AnkPath& p) { return to_text(p.path); };
  for (int n = 0; n <= n_max; ++n) {
    for (int k = n; n >= 1 && k <= 2 * n; ++k) {
      std::vector<AnkPath> codomain = all_bnk(n, k);
      if (k < 2 * n)
        for (AnkPath& q : all_ank(n, k + 1)) codomain.push_back(std::move(q));
      auto rep = verify_bijection(
          all_ank(n, k), codomain,
          [](const AnkPath& p) { return f_step(p).path; },
          [k](const AnkPath& q) { return q.k == k + 1 ? f_step_inv(q) : q; },
          show_ank, show_ank, threads);
      print_report("check=f_step n=" + std::to_string(n) + " k=" + std::to_string(k),
                   rep, state);
    }
    auto rep_f = verify_bijection(
        all_tie_paths(n), all_avoid_paths(n),
        [](const TiePath& p) { return big_f(p); },
        [](const AvoidPath& u) { return big_f_inv(u); },
        [](const TiePath& p) { return to_text(p.path); },
        [](const AvoidPath& u) { return to_text(u.path); }, threads);
    print_report("check=F n=" + std::to_string(n), rep_f, state);

    auto rep_c = verify_bijection(
        all_free_paths(n), all_marked_ties(n),
        [](const NEPath& p) { return soccer_forward(p); },
        [](const MarkedTiePath& m) { return soccer_inverse(m); },
        [](const NEPath& p) { return to_text(p); },
        [](const MarkedTiePath& m) { return to_text(m); }, threads);
    print_report("check=soccer n=" + std::to_string(n), rep_c, state);
  }
}

void verify_hockey_suite(int n_max, unsigned threads, SuiteState& state) {
  auto show_triple = [](const PathTriple& t) { return to_text(t); };
  auto show_marked = [](const MarkedPath& m) { return to_text(m); };
  for (int n = 0; n <= n_max; ++n) {
    std::vector<PathTriple> triples = all_triples(n);

    // class-image laws, checked directly
    unsigned long long violations = 0;
    std::vector<PathTriple> j_set, i_set;
    for (const PathTriple& t : triples) {
      const MarkedPath m = g_map(t);
      const int h = m.mark_height();
      switch (classify(t)) {
        case TripleClass::R:
          if (h != 0) ++violations;
          break;
        case TripleClass::U:
          if (h <= 0 || h != t.c.max_height()) ++violations;
          break;
        case TripleClass::VminusU:
          if (h >= 0 || h != t.c.min_height()) ++violations;
          break;
        case TripleClass::JBelow:
        case TripleClass::JAbove:
          if (h >= 0) ++violations;
          j_set.push_back(t);
          break;
      }
      if (is_in_i(t) && classify(t) != TripleClass::U) ++violations;
      if (is_in_i(t)) i_set.push_back(t);
    }
    ++state.checks;
    if (violations) ++state.failures;
    std::cout << "check=classes n=" << n << "\nviolations=" << violations
              << "\n\n";

    auto rep_z = verify_bijection(j_set, i_set, z_map, z_inv, show_triple,
                                  show_triple, threads);
    print_report("check=z n=" + std::to_string(n), rep_z, state);

    auto rep_g = verify_bijection(triples, all_marked(n), g_map, g_inv,
                                  show_triple, show_marked, threads);
    print_report("check=g n=" + std::to_string(n), rep_g, state);
  }
}

void verify_identity_suite(int n_max, SuiteState& state) {
  IdentityTable table{unsigned(n_max)};
  for (int n = 0; n <= n_max; ++n) {
    auto soccer = table.soccer(unsigned(n));
    auto hockey = table.hockey(unsigned(n));
    ++state.checks;
    std::cout << "check=identities n=" << n << "\n";
    if (soccer.first == soccer.second) {
      std::cout << "soccer=ok\n";
    } else {
      ++state.failures;
      std::cout << "soccer=FAIL lhs=" << soccer.first << " rhs=" << soccer.second
                << "\n";
    }
    if (hockey.first == hockey.second) {
      std::cout << "hockey=ok\n";
    } else {
      ++state.failures;
      std::cout << "hockey=FAIL lhs=" << hockey.first << " rhs=" << hockey.second
                << "\n";
    }
    std::cout << "\n";
  }
}

int cmd_verify(const std::string& suite, int n_max, unsigned threads) {
  SuiteState state;
  if (suite == "soccer" || suite == "all")
    verify_soccer_suite(n_max < 0 ? 6 : n_max, threads, state);
  if (suite == "hockey" || suite == "all")
    verify_hockey_suite(n_max < 0 ? 8 : n_max, threads, state);
  if (suite == "identities" || suite == "all")
    verify_identity_suite(n_max < 0 ? 500 : n_max, state);
  std::cout << "suite=" << suite << " checks=" << state.checks
            << " failures=" << state.failures << "\n";
  return state.failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"lattice-path bijection toolkit"};
  app.require_subcommand(1);

  std::string bijection, input = "-", format = "text", render = "none";
  std::string suite, set_name;
  int n = 0, k = 0, n_max = -1;
  unsigned parallel = 1;

  const std::vector<std::string> bijections{"soccer", "soccer-inv", "F",
                                            "F-inv", "g", "g-inv"};

  CLI::App* apply = app.add_subcommand("apply", "apply a bijection to a value");
  apply->add_option("--bijection", bijection, "which map to apply")
      ->required()
      ->check(CLI::IsMember(bijections));
  apply->add_option("--input", input, "value, or - for one value per stdin line")
      ->required();
  apply->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  CLI::App* trace = app.add_subcommand("trace", "apply and emit every stage");
  trace->add_option("--bijection", bijection)->required()->check(
      CLI::IsMember(bijections));
  trace->add_option("--input", input)->required();
  trace->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
  trace->add_option("--render", render)->check(CLI::IsMember({"none", "ascii"}));

  CLI::App* verify = app.add_subcommand("verify", "run exhaustive suites");
  verify->add_option("--suite", suite)
      ->required()
      ->check(CLI::IsMember({"soccer", "hockey", "identities", "all"}));
  verify->add_option("--n-max", n_max, "largest size to check");
  verify->add_option("--parallel", parallel, "worker threads")
      ->check(CLI::PositiveNumber);

  CLI::App* enumerate = app.add_subcommand("enumerate", "list a set, one per line");
  enumerate->add_option("--set", set_name)
      ->required()
      ->check(CLI::IsMember({"T", "D", "X", "Y", "free", "A", "B"}));
  enumerate->add_option("--n", n)->required();
  CLI::Option* k_opt = enumerate->add_option("--k", k);
  enumerate->add_option("--format", format)->check(CLI::IsMember({"text", "jsonl"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (apply->parsed()) return cmd_apply(bijection, input, format);
    if (trace->parsed()) return cmd_trace(bijection, input, format, render);
    if (verify->parsed()) return cmd_verify(suite, n_max, parallel);
    if (enumerate->parsed())
      return cmd_enumerate(set_name, n, k, k_opt->count() > 0, format);
  } catch (const parse_error& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const precondition_error& e) {
    std::cerr << "precondition violation: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
