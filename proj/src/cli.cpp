#include "pdsort/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>
#include <ostream>

#include "pdsort/analysis.hpp"
#include "pdsort/error.hpp"
#include "pdsort/sorting.hpp"
#include "pdsort/stretch.hpp"
#include "pdsort/text.hpp"
#include "pdsort/verify.hpp"

namespace pdsort::cli {

namespace {

constexpr const char* kCensusBanner = "# stretch-stack-sortable counts: computed, not from paper";

// "4" or "1..4".
std::pair<int, int> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      const int n = std::stoi(text);
      return {n, n};
    }
    return {std::stoi(text.substr(0, dots)), std::stoi(text.substr(dots + 2))};
  } catch (const std::exception&) {
    throw DomainError("bad range '" + text + "', expected N or A..B");
  }
}

const char* yes_no(bool b) { return b ? "true" : "false"; }

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Partition diagrams, stack-sorting and stretch-stack-sortability", "pdsort"};
  app.require_subcommand(1);

  int order = 0;
  std::string diagram_text;

  auto* parse = app.add_subcommand("parse", "Print a diagram in canonical text form");
  parse->add_option("--order", order, "Diagram order n")->required();
  parse->add_option("diagram", diagram_text, "Diagram literal")->required();

  std::string other_text;
  auto* compose_cmd = app.add_subcommand("compose", "Monoid product of two diagrams and the loop count");
  compose_cmd->add_option("--order", order, "Diagram order n")->required();
  compose_cmd->add_option("top", diagram_text, "Upper diagram")->required();
  compose_cmd->add_option("bottom", other_text, "Lower diagram")->required();

  bool trace = false;
  auto* sort_cmd = app.add_subcommand("sort", "Apply the stack-sorting lift to a diagram");
  sort_cmd->add_option("--order", order, "Diagram order n")->required();
  sort_cmd->add_flag("--trace", trace, "Print one line per decomposition");
  sort_cmd->add_option("diagram", diagram_text, "Diagram literal")->required();

  std::string alpha_text;
  int k = 0;
  auto* stretch_cmd = app.add_subcommand("stretch", "Apply Stretch_{alpha,k}");
  stretch_cmd->add_option("--alpha", alpha_text, "Set-composition, e.g. 1,2|3|5,6,7|4")->required();
  stretch_cmd->add_option("--k", k, "Target order")->required();
  stretch_cmd->add_option("--order", order, "Order of the input diagram")->required();
  stretch_cmd->add_option("diagram", diagram_text, "Diagram literal")->required();

  std::string perm_text;
  auto* check_cmd = app.add_subcommand("check", "Evaluate the sortability predicates");
  auto* check_order = check_cmd->add_option("--order", order, "Diagram order n");
  auto* check_perm = check_cmd->add_option("--perm", perm_text, "Permutation in one-line notation");
  auto* check_diagram = check_cmd->add_option("diagram", diagram_text, "Diagram literal");
  check_order->needs(check_diagram);
  check_diagram->needs(check_order);
  check_perm->excludes(check_diagram);

  std::string census_range = "1..4";
  bool census_check = false;
  bool deep = false;
  bool json = false;
  int jobs = 1;
  auto* census_cmd = app.add_subcommand("census", "Count stretch-stack-sortable diagrams in P_n");
  census_cmd->add_option("--n", census_range, "n or a range A..B")->required();
  census_cmd->add_flag("--check", census_check, "Cross-check both predicates on every diagram");
  census_cmd->add_flag("--deep", deep, "Allow n >= 5");
  census_cmd->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
  census_cmd->add_flag("--json", json, "One JSON object per row instead of TSV");

  int count_n = 0;
  int count_t = 1;
  auto* count_cmd = app.add_subcommand("count-sortable", "Count t-stack-sortable permutations of size n");
  count_cmd->add_option("--n", count_n, "Permutation size")->required()->check(CLI::Range(1, 12));
  count_cmd->add_option("--t", count_t, "Number of passes")->check(CLI::NonNegativeNumber);

  auto* verify_cmd = app.add_subcommand("verify", "Run the acceptance checks");
  verify_cmd->add_flag("--deep", deep, "Extend exhaustive checks to P_5");
  verify_cmd->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);

  bool dot = true;
  auto* render = app.add_subcommand("render", "Emit Graphviz DOT for a diagram");
  render->add_option("--order", order, "Diagram order n")->required();
  render->add_flag("--dot", dot, "DOT output (the only format)");
  render->add_option("diagram", diagram_text, "Diagram literal")->required();

  std::vector<std::string> argv(args.rbegin(), args.rend());
  try {
    app.parse(argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kDomainError;
  }

  try {
    if (*parse) {
      out << format_diagram(parse_diagram(diagram_text, order)) << '\n';
    } else if (*compose_cmd) {
      const auto [d, loops] = compose(parse_diagram(diagram_text, order), parse_diagram(other_text, order));
      out << format_diagram(d) << '\n' << "l=" << loops << '\n';
    } else if (*sort_cmd) {
      const auto traced = sort_diagram_traced(parse_diagram(diagram_text, order));
      out << format_diagram(traced.result) << '\n';
      if (trace) {
        for (const DecomposeEvent& e : traced.trace.events) out << format_event(e) << '\n';
      }
    } else if (*stretch_cmd) {
      const auto alpha = SetComposition::parse(alpha_text);
      out << format_diagram(stretch_map(alpha, k, parse_diagram(diagram_text, order))) << '\n';
    } else if (*check_cmd) {
      if (!perm_text.empty()) {
        const Word p = Word::parse(perm_text);
        if (!p.is_permutation()) throw DomainError("'" + perm_text + "' is not a permutation");
        out << "contains_231=" << yes_no(contains_231(p)) << '\n'
            << "stack_sortable=" << yes_no(is_t_stack_sortable(p, 1)) << '\n'
            << "sorted=" << sort_word(p).to_string() << '\n';
      } else if (*check_diagram) {
        const PartitionDiagram d = parse_diagram(diagram_text, order);
        const bool direct = is_sss_direct(d);
        const bool theorem = is_sss_theorem(d);
        out << "sorted=" << format_diagram(sort_diagram(d)) << '\n'
            << "stretch_of_identity=" << yes_no(is_stretch_of_identity(d)) << '\n'
            << "stretch_stack_sortable=" << yes_no(direct) << '\n'
            << "characterization=" << yes_no(theorem) << '\n';
        if (direct != theorem) return kVerificationFailed;
      } else {
        throw DomainError("check needs a diagram with --order, or --perm");
      }
    } else if (*census_cmd) {
      const auto [lo, hi] = parse_range(census_range);
      if (lo < 0 || hi < lo) throw DomainError("bad census range " + census_range);
      if (hi >= 5 && !deep) throw DomainError("census beyond n=4 requires --deep");
      if (hi > 8) throw DomainError("census is limited to n <= 8");
      if (!json) out << kCensusBanner << '\n' << "# n\ttotal\tsortable\tmillis\n";
      bool consistent = true;
      for (int n = lo; n <= hi; ++n) {
        const CensusRow row = census_stretch_sortable(n, {.check = census_check, .jobs = jobs});
        if (json) {
          nlohmann::json j = {{"n", row.n},
                              {"total", row.total},
                              {"sortable", row.sortable},
                              {"millis", row.elapsed.count()},
                              {"provenance", "computed, not from paper"}};
          if (census_check) j["mismatches"] = row.mismatches;
          out << j.dump() << '\n';
        } else {
          out << row.n << '\t' << row.total << '\t' << row.sortable << '\t' << row.elapsed.count() << '\n';
        }
        if (row.mismatches != 0) {
          consistent = false;
          err << "predicates disagree on " << row.mismatches << " diagrams at n=" << n << ", first "
              << format_diagram(*row.first_mismatch) << '\n';
        }
      }
      if (!consistent) return kVerificationFailed;
    } else if (*count_cmd) {
      out << count_t_stack_sortable(count_n, count_t) << '\n';
    } else if (*verify_cmd) {
      bool all = true;
      for (const CriterionResult& r : run_acceptance({.deep = deep, .jobs = jobs})) {
        out << format_result(r) << '\n';
        all = all && r.passed();
      }
      return all ? kOk : kVerificationFailed;
    } else if (*render) {
      out << to_dot(parse_diagram(diagram_text, order));
    }
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kDomainError;
  }
  return kOk;
}

}  // namespace pdsort::cli
