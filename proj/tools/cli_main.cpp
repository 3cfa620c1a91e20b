#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "formations/analysis.hpp"
#include "formations/classes.hpp"
#include "formations/config.hpp"
#include "formations/errors.hpp"
#include "formations/groupspec.hpp"
#include "formations/simple_table.hpp"
#include "formations/verify.hpp"

namespace {

// 0 all pass, 1 check failure, 2 usage or parse error, 3 budget exceeded
enum ExitCode { kOk = 0, kCheckFailed = 1, kUsage = 2, kBudget = 3 };

std::string valid_ids_line() {
  std::string line = "valid ids:";
  for (const formations::CheckInfo& c : formations::check_catalogue())
    line += " " + c.id;
  return line;
}

int cmd_analyze(const std::string& group_expr, const std::string& class_expr,
                const formations::Budgets& budgets, const std::string& format) {
  formations::PermGroup g = formations::build_group(group_expr, budgets);
  formations::GroupClass cls = formations::parse_class_expr(class_expr);
  formations::AnalysisReport report = formations::analyze(g, group_expr, cls, budgets);
  if (format == "structured")
    std::cout << formations::report_structured(report);
  else
    std::cout << formations::report_text(report);
  return kOk;
}

int cmd_verify(std::vector<std::string> ids, const std::string& corpus_file,
               const formations::Budgets& budgets, unsigned seed, const std::string& format) {
  bool all = ids.empty();
  for (const std::string& id : ids) all = all || id == "all";
  if (all) {
    ids = formations::default_check_ids();
  } else {
    for (const std::string& id : ids) {
      bool known = false;
      for (const formations::CheckInfo& c : formations::check_catalogue())
        known = known || c.id == id;
      if (!known) {
        std::cerr << "unknown check id: " << id << "\n" << valid_ids_line() << "\n";
        return kUsage;
      }
    }
  }

  formations::Corpus corpus = formations::default_corpus();
  corpus.budgets = budgets;
  if (!corpus_file.empty()) {
    std::ifstream in(corpus_file);
    if (!in) {
      std::cerr << "cannot read corpus file: " << corpus_file << "\n";
      return kUsage;
    }
    std::stringstream buf;
    buf << in.rdbuf();
    corpus.entries = formations::parse_manifest(buf.str());
    if (corpus.entries.empty()) {
      std::cerr << "corpus file has no entries: " << corpus_file << "\n";
      return kUsage;
    }
  }

  formations::VerifyReport report = formations::run_checks(corpus, ids, seed);
  if (format == "structured")
    std::cout << formations::verify_structured(report);
  else
    std::cout << formations::verify_text(report);
  return report.all_passed ? kOk : kCheckFailed;
}

int cmd_tables(const std::string& format) {
  const auto& table = formations::simple_group_table();
  if (format == "structured") {
    nlohmann::ordered_json doc = nlohmann::ordered_json::array();
    for (const formations::SimpleType& row : table) {
      nlohmann::ordered_json r;
      r["name"] = row.name;
      r["order"] = row.order;
      r["out_order"] = row.out_order;
      r["out_is_nilpotent"] = row.out_is_nilpotent;
      doc.push_back(std::move(r));
    }
    std::cout << doc.dump(2) << "\n";
    return kOk;
  }
  for (const formations::SimpleType& row : table)
    std::cout << row.name << ", " << row.order << ", " << row.out_order << ", "
              << (row.out_is_nilpotent ? "true" : "false") << "\n";
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite permutation group analysis: chief series, hypercenters, residuals and "
               "class membership"};
  app.require_subcommand(1);

  formations::Budgets defaults;
  std::size_t cap = defaults.element_cap;
  std::size_t subgroup_budget = defaults.subgroup_order_budget;
  std::size_t sd_budget = defaults.semidirect_budget;
  unsigned seed = 0;
  std::string format = "text";
  std::string corpus_file;

  app.add_option("--cap", cap, "element enumeration cap")->capture_default_str();
  app.add_option("--subgroup-budget", subgroup_budget,
                 "largest group order for subgroup enumeration")
      ->capture_default_str();
  app.add_option("--sd-budget", sd_budget,
                 "largest split extension built for centrality tests")
      ->capture_default_str();
  app.add_option("--seed", seed, "seed for randomized series walks")->capture_default_str();
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"text", "structured"}))
      ->capture_default_str();
  app.add_option("--corpus", corpus_file,
                 "manifest file replacing the default corpus (one 'label := expression' "
                 "per line)");

  std::string group_expr, class_expr;
  CLI::App* analyze = app.add_subcommand("analyze", "analyze one group against one class");
  analyze->fallthrough();  // accept the global options after the subcommand too
  analyze->add_option("group", group_expr, "group expression, e.g. \"S(5)\" or \"wr(A5,C2)\"")
      ->required();
  analyze->add_option("class", class_expr, "class expression, e.g. \"U\" or \"Jcs(U, all)\"")
      ->required();

  std::vector<std::string> check_ids;
  CLI::App* verify = app.add_subcommand("verify", "run the property checks over a corpus");
  verify->fallthrough();
  verify->add_option("checks", check_ids, "check ids, or 'all' (default)");

  app.add_subcommand("tables", "print the built-in simple group table")->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  formations::Budgets budgets{cap, subgroup_budget, sd_budget};
  if (cap == 0 || subgroup_budget == 0 || sd_budget == 0) {
    std::cerr << "budgets must be positive\n";
    return kUsage;
  }

  try {
    if (app.got_subcommand("analyze"))
      return cmd_analyze(group_expr, class_expr, budgets, format);
    if (app.got_subcommand("verify"))
      return cmd_verify(check_ids, corpus_file, budgets, seed, format);
    return cmd_tables(format);
  } catch (const formations::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const formations::DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const formations::ElementCapExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return kBudget;
  } catch (const formations::SizeGuardExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return kBudget;
  } catch (const formations::SubgroupBudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return kBudget;
  } catch (const formations::NoShortcutAvailable& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return kBudget;
  } catch (const formations::UnknownSimpleOrder& e) {
    std::cerr << "outside the built-in table: " << e.what() << "\n";
    return kBudget;
  } catch (const formations::FormationConsistencyViolation& e) {
    std::cerr << "consistency check failed: " << e.what() << "\n";
    return kCheckFailed;
  } catch (const formations::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
}
