#include "pgq/free_expr.hpp"

#include <stdexcept>

namespace pgq {

namespace {

template <class... Fs>
struct Overloaded : Fs... {
  using Fs::operator()...;
};
template <class... Fs>
Overloaded(Fs...) -> Overloaded<Fs...>;

bool contains(const FreeExpr& e, bool count_q) {
  return std::visit(
      Overloaded{
          [](const FreeExpr::Constant&) { return false; },
          [&](const FreeExpr::QSymbol&) { return count_q; },
          [](const FreeExpr::Theta&) { return true; },
          [](const FreeExpr::ThetaBar&) { return true; },
          [&](const FreeExpr::Sum& s) {
            for (const auto& t : s.terms)
              if (contains(t, count_q)) return true;
            return false;
          },
          [&](const FreeExpr::Product& p) {
            for (const auto& f : p.factors)
              if (contains(f, count_q)) return true;
            return false;
          },
          [&](const FreeExpr::Power& p) { return contains(*p.base, count_q); },
          [&](const FreeExpr::Negate& n) { return contains(*n.operand, count_q); },
      },
      e.node());
}

PGElement power(const PGElement& base, unsigned exponent, const AlgebraCtx& ctx) {
  PGElement result = PGElement::one(ctx.order());
  PGElement square = base;
  while (exponent > 0) {
    if (exponent & 1U) result = multiply(result, square, ctx);
    exponent >>= 1U;
    if (exponent > 0) square = multiply(square, square, ctx);
  }
  return result;
}

}  // namespace

FreeExpr FreeExpr::power(FreeExpr base, unsigned exponent) {
  return FreeExpr(Power{std::make_shared<const FreeExpr>(std::move(base)), exponent});
}

FreeExpr FreeExpr::negate(FreeExpr operand) {
  return FreeExpr(Negate{std::make_shared<const FreeExpr>(std::move(operand))});
}

bool FreeExpr::is_scalar() const { return !contains(*this, false); }
bool FreeExpr::is_numeric() const { return !contains(*this, true); }

bool operator==(const FreeExpr& a, const FreeExpr& b) {
  if (a.node_.index() != b.node_.index()) return false;
  return std::visit(
      Overloaded{
          [&](const FreeExpr::Constant& x) {
            return x.value == std::get<FreeExpr::Constant>(b.node_).value;
          },
          [](const FreeExpr::QSymbol&) { return true; },
          [](const FreeExpr::Theta&) { return true; },
          [](const FreeExpr::ThetaBar&) { return true; },
          [&](const FreeExpr::Sum& x) { return x.terms == std::get<FreeExpr::Sum>(b.node_).terms; },
          [&](const FreeExpr::Product& x) {
            return x.factors == std::get<FreeExpr::Product>(b.node_).factors;
          },
          [&](const FreeExpr::Power& x) {
            const auto& y = std::get<FreeExpr::Power>(b.node_);
            return x.exponent == y.exponent && *x.base == *y.base;
          },
          [&](const FreeExpr::Negate& x) {
            return *x.operand == *std::get<FreeExpr::Negate>(b.node_).operand;
          },
      },
      a.node_);
}

FreeExpr operator+(FreeExpr a, FreeExpr b) { return FreeExpr::sum({std::move(a), std::move(b)}); }
FreeExpr operator-(FreeExpr a, FreeExpr b) {
  return FreeExpr::sum({std::move(a), FreeExpr::negate(std::move(b))});
}
FreeExpr operator*(FreeExpr a, FreeExpr b) {
  return FreeExpr::product({std::move(a), std::move(b)});
}
FreeExpr operator*(Complex c, FreeExpr e) {
  return FreeExpr::product({FreeExpr::constant(c), std::move(e)});
}

PGElement from_free_expr(const FreeExpr& e, const AlgebraCtx& ctx) {
  const int l = ctx.order();
  return std::visit(
      Overloaded{
          [&](const FreeExpr::Constant& c) { return PGElement::basis(l, 0, 0, c.value); },
          [&](const FreeExpr::QSymbol&) { return PGElement::basis(l, 0, 0, ctx.q()); },
          [&](const FreeExpr::Theta&) { return PGElement::theta(l); },
          [&](const FreeExpr::ThetaBar&) { return PGElement::theta_bar(l); },
          [&](const FreeExpr::Sum& s) {
            PGElement acc(l);
            for (const auto& t : s.terms) acc += from_free_expr(t, ctx);
            return acc;
          },
          [&](const FreeExpr::Product& p) {
            PGElement acc = PGElement::one(l);
            for (const auto& f : p.factors) acc = multiply(acc, from_free_expr(f, ctx), ctx);
            return acc;
          },
          [&](const FreeExpr::Power& p) {
            return power(from_free_expr(*p.base, ctx), p.exponent, ctx);
          },
          [&](const FreeExpr::Negate& n) { return -from_free_expr(*n.operand, ctx); },
      },
      e.node());
}

Complex evaluate_numeric(const FreeExpr& e) {
  if (!e.is_numeric()) throw std::invalid_argument("expression is not a plain number");
  return std::visit(
      Overloaded{
          [](const FreeExpr::Constant& c) { return c.value; },
          [](const FreeExpr::QSymbol&) -> Complex { throw std::logic_error("unreachable"); },
          [](const FreeExpr::Theta&) -> Complex { throw std::logic_error("unreachable"); },
          [](const FreeExpr::ThetaBar&) -> Complex { throw std::logic_error("unreachable"); },
          [](const FreeExpr::Sum& s) {
            Complex acc = 0.0;
            for (const auto& t : s.terms) acc += evaluate_numeric(t);
            return acc;
          },
          [](const FreeExpr::Product& p) {
            Complex acc = 1.0;
            for (const auto& f : p.factors) acc *= evaluate_numeric(f);
            return acc;
          },
          [](const FreeExpr::Power& p) {
            return int_pow(evaluate_numeric(*p.base), p.exponent);
          },
          [](const FreeExpr::Negate& n) { return -evaluate_numeric(*n.operand); },
      },
      e.node());
}

}  // namespace pgq
