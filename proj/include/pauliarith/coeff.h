// Copyright 2026 The pauliarith Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef PAULIARITH_COEFF_H
#define PAULIARITH_COEFF_H

#include <complex>
#include <functional>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace pauliarith {

using Complex = std::complex<double>;
using Bindings = std::map<std::string, Complex, std::less<>>;

enum class ExprKind { Const, Param, Neg, Add, Mul, Sin, Cos };

/// Immutable symbolic expression tree over real-valued named parameters.
///
/// Every factory returns a simplified tree. The normal form is:
///   - constants are folded; an Add or Mul holds at most one Const, placed first;
///   - Add and Mul are flattened (no Add directly in Add, no Mul directly in Mul);
///   - x + 0, x * 1 and x * 0 are reduced; like terms of an Add are merged;
///   - Neg never wraps a Const, a Neg, or a Mul with a constant factor.
/// No trigonometric identities are applied.
class Expr {
   public:
    static Expr constant(Complex value);
    /// Throws std::invalid_argument unless name is an identifier [A-Za-z_][A-Za-z0-9_]*.
    static Expr param(std::string name);
    static Expr neg(const Expr &e);
    static Expr add(std::vector<Expr> terms);
    static Expr mul(std::vector<Expr> factors);
    static Expr sin(const Expr &e);
    static Expr cos(const Expr &e);

    ExprKind kind() const;
    bool is_constant() const {
        return kind() == ExprKind::Const;
    }
    /// Only valid for Const nodes.
    Complex value() const;
    /// Only valid for Param nodes.
    const std::string &name() const;
    std::span<const Expr> children() const;

    /// Structural equality (constants compared exactly).
    bool operator==(const Expr &other) const;

    /// Prefix text form, e.g. "(* (const 2 0) (sin (param a)))".
    std::string to_string() const;
    static Expr parse(std::string_view text);

   private:
    struct Node;
    explicit Expr(std::shared_ptr<const Node> node) : node_(std::move(node)) {
    }
    static Expr make(ExprKind kind, std::vector<Expr> children);

    std::shared_ptr<const Node> node_;
};

/// Rebuilds the tree through the simplifying factories.
Expr simplify(const Expr &e);
/// Throws std::invalid_argument if a parameter is unbound.
Complex evaluate(const Expr &e, const Bindings &bindings);
Expr substitute(const Expr &e, const Bindings &bindings);
Expr differentiate(const Expr &e, std::string_view param);
/// Conjugates constants; parameters are real.
Expr conjugate(const Expr &e);

/// A Pauli-term weight: either a finite complex number or a non-constant expression.
class Coefficient {
   public:
    Coefficient() : value_(Complex{0, 0}) {
    }
    /// Throws std::domain_error for NaN or infinite components.
    Coefficient(Complex value);
    Coefficient(double value) : Coefficient(Complex{value, 0}) {
    }
    /// Constant expressions fold to numeric.
    explicit Coefficient(const Expr &expr);

    static Coefficient parameter(std::string name) {
        return Coefficient(Expr::param(std::move(name)));
    }

    bool is_numeric() const {
        return std::holds_alternative<Complex>(value_);
    }
    bool is_symbolic() const {
        return !is_numeric();
    }
    /// Throws std::logic_error when symbolic.
    Complex numeric() const;
    /// Throws std::logic_error when numeric.
    const Expr &expr() const;
    /// Numeric values become Const nodes.
    Expr as_expr() const;

    /// Structural equality; numeric values compared exactly.
    bool operator==(const Coefficient &other) const;

    Coefficient &operator+=(const Coefficient &other);

   private:
    std::variant<Complex, Expr> value_;
};

Coefficient add(const Coefficient &a, const Coefficient &b);
Coefficient mul(const Coefficient &a, const Coefficient &b);
Coefficient conjugate(const Coefficient &a);
Coefficient differentiate(const Coefficient &a, std::string_view param);
Coefficient substitute(const Coefficient &a, const Bindings &bindings);
Complex evaluate(const Coefficient &a, const Bindings &bindings);
/// Numeric: |value| <= tol. Symbolic: structural zero only, which the normal form
/// never produces, so always false.
bool is_zero(const Coefficient &a, double tol);

inline Coefficient operator+(const Coefficient &a, const Coefficient &b) {
    return add(a, b);
}
inline Coefficient operator*(const Coefficient &a, const Coefficient &b) {
    return mul(a, b);
}
inline Coefficient operator-(const Coefficient &a) {
    return mul(Coefficient(-1.0), a);
}
inline Coefficient operator-(const Coefficient &a, const Coefficient &b) {
    return add(a, -b);
}

/// "(re,im)" with shortest round-trip doubles, or "(expr <prefix form>)".
std::string to_string(const Coefficient &c);
Coefficient parse_coefficient(std::string_view text);

/// Shortest round-trip decimal form of a double.
std::string format_double(double v);
/// Strict parse of a whole string as a finite double.
double parse_double(std::string_view text);

}  // namespace pauliarith

#endif
