#include "pgq/oracles.hpp"

#include <variant>

namespace pgq::oracle {

namespace {

bool has_run(const Word& word, int length) {
  int run = 0;
  for (std::size_t k = 0; k < word.size(); ++k) {
    run = (k > 0 && word[k] == word[k - 1]) ? run + 1 : 1;
    if (run >= length) return true;
  }
  return false;
}

std::vector<WeightedWord> concat(const std::vector<WeightedWord>& a,
                                 const std::vector<WeightedWord>& b) {
  std::vector<WeightedWord> out;
  out.reserve(a.size() * b.size());
  for (const auto& [ca, wa] : a)
    for (const auto& [cb, wb] : b) {
      Word w = wa;
      w.insert(w.end(), wb.begin(), wb.end());
      out.emplace_back(ca * cb, std::move(w));
    }
  return out;
}

}  // namespace

PGElement rewrite_word(const Word& word, const AlgebraCtx& ctx) {
  const int l = ctx.order();
  Word w = word;
  Complex coeff = 1.0;
  while (true) {
    if (has_run(w, l)) return PGElement(l);
    bool swapped = false;
    for (std::size_t k = 0; k + 1 < w.size(); ++k) {
      if (w[k] == Generator::ThetaBar && w[k + 1] == Generator::Theta) {
        w[k] = Generator::Theta;
        w[k + 1] = Generator::ThetaBar;
        coeff /= ctx.q();
        swapped = true;
        break;
      }
    }
    if (!swapped) break;
  }
  int a = 0;
  int b = 0;
  for (Generator g : w) (g == Generator::Theta ? a : b) += 1;
  return PGElement::basis(l, a, b, coeff);
}

std::vector<WeightedWord> expand_words(const FreeExpr& e, Complex q) {
  const auto& node = e.node();
  if (const auto* c = std::get_if<FreeExpr::Constant>(&node)) return {{c->value, {}}};
  if (std::holds_alternative<FreeExpr::QSymbol>(node)) return {{q, {}}};
  if (std::holds_alternative<FreeExpr::Theta>(node)) return {{1.0, {Generator::Theta}}};
  if (std::holds_alternative<FreeExpr::ThetaBar>(node)) return {{1.0, {Generator::ThetaBar}}};
  if (const auto* s = std::get_if<FreeExpr::Sum>(&node)) {
    std::vector<WeightedWord> out;
    for (const auto& t : s->terms) {
      auto part = expand_words(t, q);
      out.insert(out.end(), part.begin(), part.end());
    }
    return out;
  }
  if (const auto* p = std::get_if<FreeExpr::Product>(&node)) {
    std::vector<WeightedWord> out{{1.0, {}}};
    for (const auto& f : p->factors) out = concat(out, expand_words(f, q));
    return out;
  }
  if (const auto* p = std::get_if<FreeExpr::Power>(&node)) {
    const auto base = expand_words(*p->base, q);
    std::vector<WeightedWord> out{{1.0, {}}};
    for (unsigned k = 0; k < p->exponent; ++k) out = concat(out, base);
    return out;
  }
  const auto& n = std::get<FreeExpr::Negate>(node);
  auto out = expand_words(*n.operand, q);
  for (auto& term : out) term.first = -term.first;
  return out;
}

PGElement evaluate_by_rewriting(const FreeExpr& e, const AlgebraCtx& ctx) {
  PGElement acc(ctx.order());
  for (const auto& [c, w] : expand_words(e, ctx.q())) acc += c * rewrite_word(w, ctx);
  return acc;
}

}  // namespace pgq::oracle
