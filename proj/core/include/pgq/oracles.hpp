#pragma once

#include <utility>
#include <vector>

#include "pgq/free_expr.hpp"

/// Brute-force reference computations used by the verification sweeps and
/// the tests. They deliberately avoid the closed-form shortcuts of the
/// library so that agreement is evidence rather than tautology.
namespace pgq::oracle {

/// Normal orders a word by repeatedly rewriting the leftmost
/// (thetabar, theta) pair as q^{-1} (theta, thetabar), discarding the term as
/// soon as l equal generators become adjacent.
PGElement rewrite_word(const Word& word, const AlgebraCtx& ctx);

using WeightedWord = std::pair<Complex, Word>;

/// Expands an expression into a sum of coefficient * word with q
/// substituted; products concatenate words.
std::vector<WeightedWord> expand_words(const FreeExpr& e, Complex q);

/// from_free_expr computed by word expansion followed by rewrite_word.
PGElement evaluate_by_rewriting(const FreeExpr& e, const AlgebraCtx& ctx);

}  // namespace pgq::oracle
