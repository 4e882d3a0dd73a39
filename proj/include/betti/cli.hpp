#pragma once

// The `betti` command line, callable in-process for tests.
//
// Exit codes: 0 success or positive answer, 2 obstructed or negative
// answer, 1 usage, input or shape error.

#include "betti/facts.hpp"
#include "betti/format.hpp"
#include "betti/obstructions.hpp"
#include "betti/semigroup.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <string>
#include <vector>

namespace betti::cli {

inline constexpr int kOk = 0;
inline constexpr int kError = 1;
inline constexpr int kNegative = 2;

namespace detail {

inline BettiDiagram read_diagram(const std::string& path, std::istream& stdin_stream) {
  if (path == "-") return parse_diagram(stdin_stream);
  std::ifstream f(path);
  if (!f) throw ParseError("cannot open '" + path + "'");
  return parse_diagram(f);
}

inline std::string join(const IntVector& v) {
  std::string s;
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (k) s += ',';
    s += std::to_string(v[k]);
  }
  return s;
}

inline void print_decomposition(const PureDecomposition& p, std::ostream& out) {
  for (const auto& t : p.terms) out << to_string(t.coefficient) << ' ' << t.degrees.to_string() << '\n';
}

inline void print_generators(const Chain& chain, const DegreeWindow& w, bool witness, std::ostream& out) {
  BigInt det = determinant(phi_matrix(chain, w));
  GeneratorSet g = semigroup_generators(chain, w);
  out << "m=" << g.denominator << " det=" << abs(det) << " bound=" << generator_bound(chain, w)
      << " count=" << g.generators.size() << '\n';
  for (const auto& gen : g.generators) {
    if (witness) out << "# witness " << join(gen.witness) << '\n';
    out << format_diagram(gen.diagram);
  }
}

inline nlohmann::ordered_json report_json(const ObstructionReport& r) {
  nlohmann::ordered_json j;
  j["verdict"] = to_string(r.verdict());
  j["findings"] = nlohmann::ordered_json::array();
  for (const auto& f : r.findings) {
    nlohmann::ordered_json x;
    x["kind"] = to_string(f.kind);
    x["side"] = to_string(f.side);
    x["lhs"] = to_string(f.lhs);
    x["rhs"] = to_string(f.rhs);
    x["detail"] = f.detail;
    j["findings"].push_back(x);
  }
  j["notes"] = r.notes;
  return j;
}

}  // namespace detail

/// `args` excludes the program name.
inline int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Betti diagrams: pure diagrams, cone decompositions, semigroup generators, obstructions", "betti"};
  app.require_subcommand(1);

  // pure
  auto* pure_cmd = app.add_subcommand("pure", "print the pure diagram of a degree sequence");
  std::string pure_seq;
  bool normalized = false;
  pure_cmd->add_option("degrees", pure_seq, "comma-separated degrees, e.g. 0,1,3,4")->required();
  pure_cmd->add_flag("--normalized", normalized, "scale so that beta_0 = 1");

  // decompose / member / check / hilbert share a FILE argument
  auto* decompose_cmd = app.add_subcommand("decompose", "greedy decomposition into pure diagrams");
  std::string file = "-";
  decompose_cmd->add_option("file", file, "diagram file, '-' for stdin");

  auto* member_cmd = app.add_subcommand("member", "cone and lattice membership");
  member_cmd->add_option("file", file, "diagram file, '-' for stdin");

  std::string dlow, dhigh, chain_text;
  bool witness = false;
  auto* chains_cmd = app.add_subcommand("chains", "maximal chains of degree sequences in a window");
  chains_cmd->add_option("--dlow", dlow, "lower degree bounds")->required();
  chains_cmd->add_option("--dhigh", dhigh, "upper degree bounds")->required();

  auto* gens_cmd = app.add_subcommand("gens", "minimal generators of the lattice points of a simplex");
  gens_cmd->add_option("--dlow", dlow, "lower degree bounds")->required();
  gens_cmd->add_option("--dhigh", dhigh, "upper degree bounds")->required();
  gens_cmd->add_option("--chain", chain_text, "one chain, e.g. \"(0)>(0,3)>...\"; default all chains");
  gens_cmd->add_flag("--witness", witness, "print the coefficient vector of each generator");

  auto* check_cmd = app.add_subcommand("check", "run every obstruction check");
  bool no_split = false, json = false;
  check_cmd->add_option("file", file, "diagram file, '-' for stdin");
  check_cmd->add_flag("--no-split-search", no_split, "do not confirm maximal-minor findings");
  check_cmd->add_flag("--json", json, "machine-readable report");

  auto* br_cmd = app.add_subcommand("br", "Buchsbaum-Rim table");
  long long target = 0;
  std::string degrees;
  br_cmd->add_option("--target", target, "rank a of the target free module")->required();
  br_cmd->add_option("--degrees", degrees, "degrees of the source free module")->required();

  auto* hilbert_cmd = app.add_subcommand("hilbert", "numerator, codimension and Hilbert function");
  int vars = 0, upto = 0;
  hilbert_cmd->add_option("file", file, "diagram file, '-' for stdin");
  hilbert_cmd->add_option("--vars", vars, "number of variables (default: projective dimension)");
  hilbert_cmd->add_option("--to", upto, "last degree to evaluate (default: top degree + 2)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "betti: " << e.what() << '\n';
    return kError;
  }

  try {
    if (*pure_cmd) {
      DegreeSequence d = parse_degree_sequence(pure_seq);
      out << format_diagram(normalized ? normalized_pure(d).diagram() : pi(d));
      return kOk;
    }
    if (*decompose_cmd) {
      BettiDiagram d = detail::read_diagram(file, in);
      try {
        detail::print_decomposition(decompose(d), out);
      } catch (const NotInCone& e) {
        err << "betti: not in the cone: " << e.what() << '\n';
        return kNegative;
      }
      return kOk;
    }
    if (*member_cmd) {
      BettiDiagram d = detail::read_diagram(file, in);
      std::optional<PureDecomposition> p;
      std::string why;
      try {
        p = decompose(d);
      } catch (const NotInCone& e) {
        why = e.what();
      }
      bool lattice = p && is_integral(d);
      out << "IN_CONE " << (p ? "yes" : "no") << '\n' << "IN_LATTICE " << (lattice ? "yes" : "no") << '\n';
      if (p) detail::print_decomposition(*p, out);
      else err << "betti: " << why << '\n';
      if (auto fact = lookup_fact(d))
        out << "# recorded: " << (fact->in_module_semigroup ? "a module diagram" : "not a module diagram") << ", "
            << fact->reason << '\n';
      return lattice ? kOk : kNegative;
    }
    if (*chains_cmd) {
      DegreeWindow w(parse_int_list(dlow), parse_int_list(dhigh));
      for (const auto& c : enumerate_chains(w)) out << c.to_string() << '\n';
      return kOk;
    }
    if (*gens_cmd) {
      DegreeWindow w(parse_int_list(dlow), parse_int_list(dhigh));
      if (!chain_text.empty()) {
        detail::print_generators(parse_chain(chain_text), w, witness, out);
      } else {
        for (const auto& c : enumerate_chains(w)) {
          out << "# chain " << c.to_string() << '\n';
          detail::print_generators(c, w, witness, out);
        }
      }
      return kOk;
    }
    if (*check_cmd) {
      BettiDiagram d = detail::read_diagram(file, in);
      BatteryOptions opt;
      opt.split_search = !no_split;
      ObstructionReport r = battery(d, opt);
      if (json) {
        out << detail::report_json(r).dump(2) << '\n';
      } else {
        out << to_string(r.verdict()) << '\n';
        for (const auto& f : r.findings)
          out << to_string(f.kind) << ' ' << to_string(f.side) << ' ' << to_string(f.lhs) << ' ' << to_string(f.rhs)
              << (f.detail.empty() ? "" : " " + f.detail) << '\n';
        for (const auto& n : r.notes) out << "# " << n << '\n';
      }
      return r.verdict() == Verdict::Obstructed ? kNegative : kOk;
    }
    if (*br_cmd) {
      out << format_diagram(buchsbaum_rim_table(target, parse_int_list(degrees)));
      return kOk;
    }
    if (*hilbert_cmd) {
      BettiDiagram d = detail::read_diagram(file, in);
      if (d.empty()) throw std::invalid_argument("zero diagram");
      int p = pdim(d);
      int n = vars > 0 ? vars : std::max(p, 1);
      int top = std::numeric_limits<int>::min();
      for (const auto& [k, v] : d.entries()) top = std::max(top, k.second);
      int t_max = upto != 0 ? upto : top + 2;
      out << "numerator " << hilbert_numerator(d).to_string() << '\n';
      try {
        out << "codimension " << codimension(d) << '\n';
      } catch (const std::domain_error&) {
        out << "codimension undefined\n";
      }
      out << "cohen_macaulay " << (is_cohen_macaulay(d) ? "yes" : "no") << '\n';
      out << "defects";
      for (const auto& x : herzog_kuhl_defects(d, p)) out << ' ' << to_string(x);
      out << '\n';
      HilbertFunction h = hilbert_function(d, n, t_max);
      out << "hilbert n=" << n << " from=" << h.start << ':';
      for (const auto& x : h.values) out << ' ' << to_string(x);
      out << '\n';
      return kOk;
    }
  } catch (const ParseError& e) {
    err << "betti: " << e.what() << '\n';
    return kError;
  } catch (const NotApplicable& e) {
    err << "betti: " << e.what() << '\n';
    return kError;
  } catch (const std::invalid_argument& e) {
    err << "betti: " << e.what() << '\n';
    return kError;
  } catch (const std::exception& e) {
    err << "betti: " << e.what() << '\n';
    return kError;
  }
  return kError;
}

}  // namespace betti::cli
