#pragma once

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "treext/bracket.hpp"
#include "treext/canonical.hpp"
#include "treext/construct.hpp"
#include "treext/enumerate.hpp"
#include "treext/invariants.hpp"
#include "treext/spectral.hpp"
#include "treext/tree.hpp"
#include "treext/verify.hpp"

namespace treext {

namespace cli_detail {

inline nlohmann::json report_to_json(const VerificationReport& r) {
  nlohmann::json j;
  j["claim"] = r.claim;
  j["description"] = r.description;
  j[r.majorised ? "bound" : "degree_sequence"] = r.degree_sequence;
  j["majorised"] = r.majorised;
  j["class_size"] = r.class_size;
  j["optimum"] = r.optimum;
  j["attained"] = r.attained;
  j["unique"] = r.unique;
  j["witnesses"] = r.witnesses;
  nlohmann::json params = nlohmann::json::object();
  for (const auto& [k, v] : r.params) params[k] = v;
  j["params"] = params;
  j["runtime_ms"] = r.runtime_ms;
  return j;
}

inline std::string params_string(const VerificationReport& r) {
  std::string out;
  for (const auto& [k, v] : r.params) {
    if (!out.empty()) out += ' ';
    out += k + "=" + v;
  }
  return out;
}

inline void print_report_line(std::ostream& out, const VerificationReport& r) {
  out << (r.passed() ? "ok      " : "REFUTED ") << r.claim;
  std::string params = params_string(r);
  if (!params.empty()) out << " [" << params << "]";
  out << "  " << (r.majorised ? "bound=" : "degrees=") << r.degree_sequence
      << "  class=" << r.class_size << "  optimum=" << r.optimum
      << "  attained=" << (r.attained ? "yes" : "no") << "  unique=" << (r.unique ? "yes" : "no")
      << "  witnesses=" << r.witnesses.size() << "  " << r.runtime_ms << "ms\n";
}

inline void print_report_csv(std::ostream& out, const VerificationReport& r) {
  out << r.claim << ',' << '"' << params_string(r) << '"' << ',' << '"' << r.degree_sequence
      << '"' << ',' << (r.majorised ? 1 : 0) << ',' << r.class_size << ',' << r.optimum << ','
      << (r.attained ? 1 : 0) << ',' << (r.unique ? 1 : 0) << ',' << r.witnesses.size() << ','
      << r.runtime_ms << '\n';
}

inline Tree load_tree(const std::string& path, std::istream& stdin_stream) {
  if (path == "-") return read_edge_list(stdin_stream);
  std::ifstream file(path);
  if (!file) throw Error("cannot open tree file '" + path + "'");
  return read_edge_list(file);
}

inline void print_tree(std::ostream& out, const Tree& t, const std::string& format) {
  if (format == "bracket")
    out << serialize_bracket({t, canonical_root(t)}) << '\n';
  else
    write_edge_list(out, t);
}

}  // namespace cli_detail

/// Entry point shared by the binary and the test-suite; returns the exit code.
/// 0 = success / claim attained, 1 = claim refuted, 2 = invalid input,
/// 3 = enumeration or oracle bound exceeded.
inline int run_cli(std::vector<std::string> args, std::istream& in, std::ostream& out,
                   std::ostream& err) {
  CLI::App app{"extremal trees with given degree sequence: construction, exact invariants, "
               "exhaustive verification"};
  app.set_config("--config");

  std::string degrees_csv, kind = "greedy", format = "edges";
  auto* construct_cmd = app.add_subcommand("construct", "build the greedy tree or the M-tree");
  construct_cmd->add_option("--degrees", degrees_csv, "degree sequence, comma-separated")
      ->required();
  construct_cmd->add_option("--kind", kind, "greedy | mtree")
      ->check(CLI::IsMember({"greedy", "mtree"}));
  construct_cmd->add_option("--format", format, "edges | bracket")
      ->check(CLI::IsMember({"edges", "bracket"}));

  std::string tree_path = "-", invariant_name;
  int root = 0;
  auto* invariant_cmd = app.add_subcommand("invariant", "evaluate an invariant on a tree");
  invariant_cmd->add_option("--tree", tree_path, "edge-list file, or - for stdin");
  invariant_cmd->add_option("--name", invariant_name, "invariant selector")->required();
  invariant_cmd->add_option("--root", root, "root used by rooted invariants (default 0)");

  std::string enum_degrees;
  bool majorised = false, count_only = false;
  int bound = default_enum_bound();
  std::string enum_format = "bracket";
  auto* enumerate_cmd = app.add_subcommand("enumerate", "list isomorphism classes");
  enumerate_cmd->add_option("--degrees", enum_degrees, "degree sequence")->required();
  enumerate_cmd->add_flag("--majorised", majorised, "enumerate the whole majorised class");
  enumerate_cmd->add_flag("--count-only", count_only, "print only the isomorph-free count");
  enumerate_cmd->add_option("--bound", bound, "enumeration vertex bound");
  enumerate_cmd->add_option("--format", enum_format, "bracket | edges")
      ->check(CLI::IsMember({"bracket", "edges"}));

  std::string verify_degrees, verify_invariant, report_path;
  bool verify_majorised_flag = false, csv = false;
  int verify_bound = default_enum_bound(), jobs = 1;
  auto* verify_cmd = app.add_subcommand("verify", "verify an extremality claim by enumeration");
  verify_cmd->add_option("--degrees", verify_degrees, "degree sequence")->required();
  verify_cmd->add_option("--invariant", verify_invariant, "claim selector, or 'all'")->required();
  verify_cmd->add_flag("--majorised", verify_majorised_flag,
                       "verify over the majorised class T_<B");
  verify_cmd->add_option("--report", report_path, "write the JSON report to this file");
  verify_cmd->add_option("--bound", verify_bound, "enumeration vertex bound");
  verify_cmd->add_option("--jobs", jobs, "parallel evaluation workers");
  verify_cmd->add_flag("--csv", csv, "CSV summary table instead of JSON");

  int nmax = 8;
  std::string crosscheck_report;
  auto* crosscheck_cmd =
      app.add_subcommand("crosscheck", "run the identity cross-checks over all small trees");
  crosscheck_cmd->add_option("--nmax", nmax, "largest vertex count to sweep");
  crosscheck_cmd->add_option("--report", crosscheck_report, "write the JSON report to this file");

  app.require_subcommand(1);

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return 2;
  }

  try {
    if (*construct_cmd) {
      DegreeSequence d = DegreeSequence::parse_csv(degrees_csv);
      Tree t = kind == "greedy" ? greedy_tree(d) : m_tree(d);
      cli_detail::print_tree(out, t, format);
      return 0;
    }

    if (*invariant_cmd) {
      Tree t = cli_detail::load_tree(tree_path, in);
      if (root < 0 || root >= t.size()) throw Error("root out of range");
      const std::string& name = invariant_name;
      auto starts_with = [&](const char* prefix) { return name.rfind(prefix, 0) == 0; };
      if (name == "wiener") out << wiener(t).get_str() << '\n';
      else if (name == "harary") {
        std::map<int, Ratio> f;
        for (int d = 1; d <= t.size(); ++d) f[d] = Ratio(1, d);
        out << to_string(wiener_like(t, f)) << '\n';
      } else if (starts_with("wab:")) {
        std::string params = name.substr(4);
        auto comma = params.find(',');
        if (comma == std::string::npos) throw UnknownSelector("wab needs :a,b");
        out << to_string(w_ab(t, ratio_from_string(params.substr(0, comma)),
                              ratio_from_string(params.substr(comma + 1))))
            << '\n';
      } else if (starts_with("steiner:")) {
        out << steiner_wiener(t, std::atoi(name.c_str() + 8)).get_str() << '\n';
      } else if (name == "subtrees") out << subtree_count(t).get_str() << '\n';
      else if (name == "hosoya") out << hosoya(t).get_str() << '\n';
      else if (name == "matching-poly")
        out << nlohmann::json(matching_poly(t).coeff_strings()).dump() << '\n';
      else if (name == "ms") out << independence_count(t).get_str() << '\n';
      else if (name == "rsf-poly")
        out << nlohmann::json(rsf_poly(t).coeff_strings()).dump() << '\n';
      else if (name == "solvability") {
        auto [s, tt] = solvability({t, root});
        out << "s=" << s.get_str() << " t=" << tt.get_str() << '\n';
      } else if (name == "energy" || name == "lel" || name == "ie") {
        double val = name == "energy" ? energy(t) : name == "lel" ? lel(t) : incidence_energy(t);
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.12g", val);
        out << buf << '\n';
      } else if (starts_with("rho:")) {
        out << to_string(rho({t, root}, RhoSelector::parse(name.substr(4)))) << '\n';
      } else {
        throw UnknownSelector("unknown invariant '" + name + "'");
      }
      return 0;
    }

    if (*enumerate_cmd) {
      DegreeSequence d = DegreeSequence::parse_csv(enum_degrees);
      std::vector<Tree> classes =
          majorised ? trees_majorised_by(d, bound) : trees_with_degrees(d, bound);
      if (count_only) {
        out << classes.size() << '\n';
      } else {
        for (const Tree& t : classes) {
          cli_detail::print_tree(out, t, enum_format);
          if (enum_format == "edges") out << '\n';
        }
      }
      return 0;
    }

    if (*crosscheck_cmd) {
      VerificationReport report = cross_check_identities(nmax);
      nlohmann::json j = cli_detail::report_to_json(report);
      if (!crosscheck_report.empty()) {
        std::ofstream file(crosscheck_report);
        file << j.dump(2) << '\n';
        cli_detail::print_report_line(out, report);
      } else {
        out << j.dump(2) << '\n';
      }
      return report.attained ? 0 : 1;
    }

    if (*verify_cmd) {
      DegreeSequence d = DegreeSequence::parse_csv(verify_degrees);
      std::vector<Claim> claims =
          verify_invariant == "all" ? all_claims() : claims_for(verify_invariant);
      std::vector<VerificationReport> reports;
      for (const Claim& claim : claims)
        reports.push_back(verify_majorised_flag ? verify_majorised(d, claim, verify_bound, jobs)
                                                : verify_extremality(d, claim, verify_bound, jobs));
      // polynomial claims carry a coefficientwise-dominance side report
      if (!verify_majorised_flag)
        for (VerificationReport& r : reports)
          if ((r.claim == "rf" || r.claim == "matching") && r.attained)
            r.params.emplace_back("coeff_dominance",
                                  coefficientwise_dominated(d, r.claim == "matching", verify_bound)
                                      ? "true"
                                      : "false");
      nlohmann::json j;
      if (reports.size() == 1) j = cli_detail::report_to_json(reports[0]);
      else {
        j = nlohmann::json::array();
        for (const auto& r : reports) j.push_back(cli_detail::report_to_json(r));
      }
      if (csv) {
        out << "claim,params,degrees,majorised,class_size,optimum,attained,unique,"
               "witness_count,runtime_ms\n";
        for (const auto& r : reports) cli_detail::print_report_csv(out, r);
      } else if (!report_path.empty()) {
        std::ofstream file(report_path);
        file << j.dump(2) << '\n';
        for (const auto& r : reports) cli_detail::print_report_line(out, r);
      } else {
        out << j.dump(2) << '\n';
      }
      bool all_passed = true;
      for (const auto& r : reports) all_passed = all_passed && r.passed();
      return all_passed ? 0 : 1;
    }
  } catch (const SizeBoundExceeded& e) {
    err << "error: " << e.what() << '\n';
    return 3;
  } catch (const OracleSizeExceeded& e) {
    err << "error: " << e.what() << '\n';
    return 3;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}

}  // namespace treext
