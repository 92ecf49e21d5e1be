#pragma once

// Seeded property suites wiring the modules together, and the random
// generators they draw from.

#include <random>
#include <string>
#include <vector>

#include "kcell/io.hpp"

namespace kcell {

using Rng = std::mt19937_64;

/// Connected stable graph with 1..max_edges edges. Most vertices carry a
/// single cycle; defects are raised where stability requires it.
RibbonGraphData random_stable_graph(Rng& rng, int max_edges);

Rational random_rational(Rng& rng, long max_num = 9, long max_den = 4);
Polynomial random_polynomial(Rng& rng, int num_vars, int max_degree, int max_terms = 4);
LocalForm random_form(Rng& rng, int dim, int degree, int max_coefficient_degree = 3);
/// Random point of a compact polytope (convex combination of its vertices).
RationalVector random_point(Rng& rng, const Polytope& p);
/// Random positive edge lengths.
RationalVector random_lengths(Rng& rng, int edges);

/// Complexes used by the Stokes checks. Every polytope comes with an affine
/// embedding into a common R^ambient; the polytopes with `negative` set lie
/// on the side x_0 <= 0, which is where piecewise forms may jump.
struct CorpusComplex {
  std::string name;
  PolytopalComplex complex;
  int ambient = 0;
  std::vector<AffineMap> embedding;
  std::vector<bool> negative;
};

std::vector<CorpusComplex> stokes_corpus();

/// The two unit squares sharing the edge x = 0, with the form dx + dy on the
/// right, -2dx + dy on the left and dy on the edge.
CorpusComplex two_squares();
ExteriorForm two_squares_form(const CorpusComplex& c);

/// A form on the complex: the pullback of one random form on the ambient
/// space, plus terms vanishing on x_0 = 0 on the negative side.
ExteriorForm random_piecewise_form(Rng& rng, const CorpusComplex& c, int degree);
/// A random chain of k-simplices inside top-dimensional polytopes.
Chain random_chain(Rng& rng, const CorpusComplex& c, int degree, int pieces);

struct SuiteFailure {
  std::string check;
  std::string message;
  Json input;  // enough to rerun the case on its own
};

struct SuiteReport {
  std::string name;
  unsigned long seed = 0;
  long cases = 0;
  std::vector<SuiteFailure> failures;
  double seconds = 0;

  bool ok() const { return failures.empty(); }
};

const std::vector<std::string>& suite_names();

struct SuiteOptions {
  unsigned long seed = 1;
  int jobs = 1;
  /// Multiplies the number of random cases.
  double scale = 1.0;
};

/// Throws Error for an unknown suite name.
SuiteReport run_suite(const std::string& name, const SuiteOptions& options = {});
std::vector<SuiteReport> run_suites(const std::string& name, const SuiteOptions& options = {});

Json report_to_json(const SuiteReport& r);

/// Individual checks, also used by the tests. Each appends failures and
/// returns the number of cases it ran.
long check_contraction_laws(const StableRibbonGraph& g, Rng& rng, int max_subsets, std::vector<SuiteFailure>& out);
long check_stokes_case(Rng& rng, const CorpusComplex& c, std::vector<SuiteFailure>& out);
long check_homotopy_case(Rng& rng, std::vector<SuiteFailure>& out);

}  // namespace kcell
