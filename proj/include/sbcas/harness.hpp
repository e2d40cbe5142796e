#pragma once

// Random term generators and the executable contracts for factor,
// norm_rat_expr, norm_rat_fun, diff and quotation evaluation.

#include "sbcas/term.hpp"

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace sbcas {

struct GenConfig {
  std::uint64_t seed = 1;
  int max_depth = 6;
  int coeff_bound = 12;
  int cases = 500;

  /// Throws std::invalid_argument unless max_depth >= 1, cases >= 1, coeff_bound >= 1.
  void validate() const;
};

/// A closed term together with its value, built side by side.
template <class V>
struct Valued {
  Term term;
  V value;
};

/// Seeded stream of terms; the same config always yields the same sequence.
class TermGen {
 public:
  explicit TermGen(const GenConfig& cfg);

  Term numeral();
  /// Anything factor must reject: negative literals, sums, variables, lambdas, ...
  Term non_numeral();
  Term rat_expr();
  Term rat_fun();
  Term non_rat_expr();
  Term non_rat_fun();
  /// Operands of fractional powers stay away from zero at the sample grid,
  /// and every subterm stays within double-friendly magnitudes there.
  Term diff_expr();
  Term non_diff_expr();
  Valued<BigInt> int_term();
  Valued<BigRat> rat_term();
  /// A value-preserving rewrite of a rational expression.
  Term equal_variant(const Term& t);

  BigRat small_rational();
  std::mt19937_64& rng() { return rng_; }

 private:
  Term rat_expr_at(int depth);
  Term rat_leaf();
  Term diff_expr_at(int depth);
  Term diff_node_at(int depth);
  Valued<BigInt> int_term_at(int depth);
  std::optional<Valued<BigRat>> rat_term_at(int depth);
  int uniform(int lo, int hi);
  bool coin(double p);

  GenConfig cfg_;
  std::mt19937_64 rng_;
};

Term gen_numeral(const GenConfig& cfg);
Term gen_rat_expr(const GenConfig& cfg);
Term gen_rat_fun(const GenConfig& cfg);
Term gen_diff_expr(const GenConfig& cfg);

/// Sample points used for every generated differentiable term.
std::vector<double> diff_sample_grid();

struct BranchStats {
  std::string name;
  long hits = 0;
  long failures = 0;
  std::optional<std::string> first_counterexample;
};

struct Report {
  std::string suite;
  std::vector<BranchStats> branches;
  double seconds = 0;

  /// Counts one case for the branch; a failing case keeps its description if
  /// it is the branch's first.
  void record(const std::string& branch, bool passed, const std::string& what = {});
  /// Registers a branch with zero hits so missing coverage shows up.
  void expect_branch(const std::string& branch);
  void merge(const Report& other);

  long failures() const;
  /// No failures and every branch hit at least once.
  bool ok() const;
  std::string text() const;
  std::string json() const;
};

Report check_spec_factor(const GenConfig& cfg);
Report check_spec_norm_rat_expr(const GenConfig& cfg);
Report check_spec_norm_rat_fun(const GenConfig& cfg);
Report check_spec_diff(const GenConfig& cfg);
Report check_disquotation(const GenConfig& cfg);

}  // namespace sbcas
