#pragma once

#include <memory>
#include <variant>
#include <vector>

#include "pgq/algebra.hpp"

namespace pgq {

/// Non-commutative polynomial in theta, thetabar with complex coefficients
/// and the symbolic constant q. Immutable; subtrees are shared.
class FreeExpr {
 public:
  struct Constant { Complex value; };
  struct QSymbol {};
  struct Theta {};
  struct ThetaBar {};
  struct Sum { std::vector<FreeExpr> terms; };
  /// Ordered; factor order is preserved on evaluation.
  struct Product { std::vector<FreeExpr> factors; };
  struct Power { std::shared_ptr<const FreeExpr> base; unsigned exponent; };
  struct Negate { std::shared_ptr<const FreeExpr> operand; };

  using Node = std::variant<Constant, QSymbol, Theta, ThetaBar, Sum, Product, Power, Negate>;

  static FreeExpr constant(Complex c) { return FreeExpr(Constant{c}); }
  static FreeExpr q() { return FreeExpr(QSymbol{}); }
  static FreeExpr theta() { return FreeExpr(Theta{}); }
  static FreeExpr theta_bar() { return FreeExpr(ThetaBar{}); }
  static FreeExpr sum(std::vector<FreeExpr> terms) { return FreeExpr(Sum{std::move(terms)}); }
  static FreeExpr product(std::vector<FreeExpr> factors) {
    return FreeExpr(Product{std::move(factors)});
  }
  static FreeExpr power(FreeExpr base, unsigned exponent);
  static FreeExpr negate(FreeExpr operand);

  const Node& node() const { return node_; }

  /// True when no generator appears (q may appear).
  bool is_scalar() const;
  /// True when neither a generator nor q appears.
  bool is_numeric() const;

  friend bool operator==(const FreeExpr& a, const FreeExpr& b);

 private:
  explicit FreeExpr(Node node) : node_(std::move(node)) {}
  Node node_;
};

FreeExpr operator+(FreeExpr a, FreeExpr b);
FreeExpr operator-(FreeExpr a, FreeExpr b);
FreeExpr operator*(FreeExpr a, FreeExpr b);
FreeExpr operator*(Complex c, FreeExpr e);

/// Evaluates an expression in PG_{l,q}, substituting ctx.q() for the q
/// symbol. Linear in the expression.
PGElement from_free_expr(const FreeExpr& e, const AlgebraCtx& ctx);

/// Evaluates an expression containing no generators and no q.
/// Throws std::invalid_argument otherwise.
Complex evaluate_numeric(const FreeExpr& e);

}  // namespace pgq
