#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "entcolor/bounds.hpp"

namespace entcolor {

// One member of a forbidden bipartite family for (2,F)-subgraph coloring.
struct ForbiddenGraph {
  int vertices = 0;
  int edges = 0;
  std::vector<std::pair<int, int>> edge_list;  // optional; required by the "direct" mode
};

// Lines "n m [u v ...]"; '#' comments allowed.
std::vector<ForbiddenGraph> parse_forbidden_family(std::string_view text);

struct PresetParams {
  int delta = 0;
  int gamma = 1;
  double alpha = 0.5;
  int r = 4;
  std::optional<int> exact_n;  // exact finite sums up to n objects instead of closed-form tails
  std::vector<ForbiddenGraph> family;
  std::string chi2f_mode = "general";  // general | edges | direct
};

struct Reference {
  std::string name;
  double value;
};

struct PresetResult {
  std::string problem;
  bool exact = false;
  QPolynomial q;
  RatioResult pinned;     // at the X chosen in the corresponding proof
  RatioResult optimized;  // at the root of P
  long long kappa = 0;    // ceil(stated) when a closed form is stated, else pinned.kappa
  std::optional<double> stated;
  std::optional<double> asymptotic;  // leading terms only; never used for kappa
  std::optional<long long> kappa_total;  // colours including a reserved one
  std::vector<Reference> references;
};

std::vector<std::string> preset_names();
PresetResult kappa_preset(const std::string& problem, const PresetParams& params);

// Q(X)/X for the v1 system at X = 2 sqrt(2 alpha) / Delta^{4/3}, in closed form.
double acyclic_v1_closed_form(double alpha, double delta);

struct AlphaChoice {
  double alpha;    // argmin to 1e-6
  double rounded;  // to 3 decimals
  double value;    // the minimised closed form
};
// Throws RangeError for delta < 24.
AlphaChoice optimal_alpha(double delta);

// Number of unlabeled trees on n vertices, n <= 20.
long long unlabeled_trees(int n);

// Terms for (2,F)-subgraph coloring without special sets: proper colouring plus
// one type per H with C_H = sum_u (tree embeddings rooted at u) / |Aut(H)|.
std::vector<Term> direct_forbidden_terms(const std::vector<ForbiddenGraph>& family, double delta);

}  // namespace entcolor
