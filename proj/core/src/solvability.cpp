#include <stdexcept>

#include "iterid/finite_group.hpp"
#include "iterid/named_words.hpp"
#include "iterid/structure.hpp"

namespace iterid {

SolvabilityReport solvability_by_word(const GroupPtr& g, std::string_view word_name, const CheckOptions& sampled) {
  if (word_name != "w_BW" && word_name != "w_BWW" && word_name != "w_BGGKPP") {
    throw std::invalid_argument("solvability word must be w_BW, w_BWW or w_BGGKPP, not '" + std::string(word_name) + "'");
  }
  if (!g->is_finite()) throw std::domain_error("solvability test needs a finite group; " + g->name() + " is infinite");
  const Word w = named_word(word_name);

  std::uint64_t combos = 1;
  bool exhaustive = true;
  for (int i = 0; i < w.arity(); ++i) {
    if (combos > kExhaustiveSolvabilityLimit / g->order()) {
      exhaustive = false;
      break;
    }
    combos *= g->order();
  }
  CheckOptions options = sampled;
  options.mode = exhaustive ? CheckMode::kExhaustive : CheckMode::kSampled;

  SolvabilityReport report;
  report.verdict = check_e_identity(w, g, options);
  const FiniteGroup fg(g);
  report.derived_length = derived_length(fg);
  report.oracle_solvable = report.derived_length >= 0;
  report.solvable = report.verdict.status != Status::kFails;

  const bool agrees = report.verdict.status == Status::kFails ? !report.oracle_solvable
                      : report.verdict.status == Status::kHolds ? report.oracle_solvable
                                                                 : true;
  if (!agrees) {
    throw OracleDisagreement(std::string(word_name) + " verdict on " + g->name() + " is " +
                             to_string(report.verdict.status) + " but the derived series says the group is " +
                             (report.oracle_solvable ? "solvable" : "not solvable"));
  }
  return report;
}

}  // namespace iterid
