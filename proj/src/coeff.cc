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

#include "pauliarith/coeff.h"

#include <charconv>
#include <cmath>
#include <stdexcept>

namespace pauliarith {

struct Expr::Node {
    ExprKind kind;
    Complex value;
    std::string name;
    std::vector<Expr> children;
};

namespace {

bool is_finite(Complex v) {
    return std::isfinite(v.real()) && std::isfinite(v.imag());
}

bool valid_identifier(std::string_view name) {
    if (name.empty()) {
        return false;
    }
    auto alpha = [](char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_'; };
    if (!alpha(name[0])) {
        return false;
    }
    for (char c : name) {
        if (!alpha(c) && !(c >= '0' && c <= '9')) {
            return false;
        }
    }
    return true;
}

// Splits a non-constant Add term into (numeric factor, base).
std::pair<Complex, Expr> split_term(const Expr &term) {
    if (term.kind() == ExprKind::Neg) {
        return {Complex{-1, 0}, term.children()[0]};
    }
    if (term.kind() == ExprKind::Mul && term.children()[0].is_constant()) {
        auto ch = term.children();
        Complex c = ch[0].value();
        if (ch.size() == 2) {
            return {c, ch[1]};
        }
        return {c, Expr::mul(std::vector<Expr>(ch.begin() + 1, ch.end()))};
    }
    return {Complex{1, 0}, term};
}

}  // namespace

Expr Expr::make(ExprKind kind, std::vector<Expr> children) {
    return Expr(std::make_shared<const Node>(Node{kind, {}, {}, std::move(children)}));
}

Expr Expr::constant(Complex value) {
    if (!is_finite(value)) {
        throw std::domain_error("expression constants must be finite");
    }
    // Adding +0 turns -0 into +0 so equal constants print identically.
    value += Complex{0.0, 0.0};
    return Expr(std::make_shared<const Node>(Node{ExprKind::Const, value, {}, {}}));
}

Expr Expr::param(std::string name) {
    if (!valid_identifier(name)) {
        throw std::invalid_argument("invalid parameter name: \"" + name + "\"");
    }
    return Expr(std::make_shared<const Node>(Node{ExprKind::Param, {}, std::move(name), {}}));
}

Expr Expr::neg(const Expr &e) {
    return mul({constant(-1.0), e});
}

Expr Expr::mul(std::vector<Expr> factors) {
    Complex c{1, 0};
    std::vector<Expr> rest;
    std::function<void(const Expr &)> absorb = [&](const Expr &f) {
        switch (f.kind()) {
            case ExprKind::Const:
                c *= f.value();
                break;
            case ExprKind::Neg:
                c = -c;
                absorb(f.children()[0]);
                break;
            case ExprKind::Mul:
                for (const auto &g : f.children()) {
                    absorb(g);
                }
                break;
            default:
                rest.push_back(f);
        }
    };
    for (const auto &f : factors) {
        absorb(f);
    }
    if (c == Complex{0, 0} || rest.empty()) {
        return constant(c);
    }
    Expr body = rest.size() == 1 ? rest[0] : make(ExprKind::Mul, rest);
    if (c == Complex{1, 0}) {
        return body;
    }
    if (c == Complex{-1, 0}) {
        return make(ExprKind::Neg, {body});
    }
    rest.insert(rest.begin(), constant(c));
    return make(ExprKind::Mul, std::move(rest));
}

Expr Expr::add(std::vector<Expr> terms) {
    Complex sum{0, 0};
    std::vector<std::pair<Complex, Expr>> merged;
    std::function<void(const Expr &)> absorb = [&](const Expr &t) {
        if (t.kind() == ExprKind::Const) {
            sum += t.value();
            return;
        }
        if (t.kind() == ExprKind::Add) {
            for (const auto &u : t.children()) {
                absorb(u);
            }
            return;
        }
        auto [c, base] = split_term(t);
        for (auto &[mc, mb] : merged) {
            if (mb == base) {
                mc += c;
                return;
            }
        }
        merged.emplace_back(c, std::move(base));
    };
    for (const auto &t : terms) {
        absorb(t);
    }
    std::vector<Expr> out;
    if (sum != Complex{0, 0}) {
        out.push_back(constant(sum));
    }
    for (const auto &[c, base] : merged) {
        if (c == Complex{0, 0}) {
            continue;
        }
        out.push_back(mul({constant(c), base}));
    }
    if (out.empty()) {
        return constant(0.0);
    }
    if (out.size() == 1) {
        return out[0];
    }
    return make(ExprKind::Add, std::move(out));
}

Expr Expr::sin(const Expr &e) {
    if (e.is_constant()) {
        return constant(std::sin(e.value()));
    }
    return make(ExprKind::Sin, {e});
}

Expr Expr::cos(const Expr &e) {
    if (e.is_constant()) {
        return constant(std::cos(e.value()));
    }
    return make(ExprKind::Cos, {e});
}

ExprKind Expr::kind() const {
    return node_->kind;
}

Complex Expr::value() const {
    if (node_->kind != ExprKind::Const) {
        throw std::logic_error("Expr::value on a non-constant node");
    }
    return node_->value;
}

const std::string &Expr::name() const {
    if (node_->kind != ExprKind::Param) {
        throw std::logic_error("Expr::name on a non-parameter node");
    }
    return node_->name;
}

std::span<const Expr> Expr::children() const {
    return node_->children;
}

bool Expr::operator==(const Expr &other) const {
    if (node_ == other.node_) {
        return true;
    }
    if (node_->kind != other.node_->kind) {
        return false;
    }
    switch (node_->kind) {
        case ExprKind::Const:
            return node_->value == other.node_->value;
        case ExprKind::Param:
            return node_->name == other.node_->name;
        default:
            return node_->children == other.node_->children;
    }
}

std::string Expr::to_string() const {
    switch (kind()) {
        case ExprKind::Const:
            return "(const " + format_double(value().real()) + " " + format_double(value().imag()) + ")";
        case ExprKind::Param:
            return "(param " + name() + ")";
        default:
            break;
    }
    static constexpr const char *heads[] = {"", "", "neg", "+", "*", "sin", "cos"};
    std::string out = "(";
    out += heads[static_cast<int>(kind())];
    for (const auto &c : children()) {
        out += ' ';
        out += c.to_string();
    }
    out += ')';
    return out;
}

namespace {

class ExprParser {
   public:
    explicit ExprParser(std::string_view text) : text_(text) {
    }

    Expr parse_all() {
        Expr e = parse_expr();
        skip_space();
        if (pos_ != text_.size()) {
            fail("trailing characters");
        }
        return e;
    }

    Expr parse_expr() {
        skip_space();
        expect('(');
        std::string_view head = atom();
        Expr result = Expr::constant(0.0);
        if (head == "const") {
            double re = parse_double(atom());
            double im = parse_double(atom());
            result = Expr::constant({re, im});
        } else if (head == "param") {
            result = Expr::param(std::string(atom()));
        } else if (head == "neg" || head == "sin" || head == "cos") {
            Expr child = parse_expr();
            result = head == "neg" ? Expr::neg(child) : head == "sin" ? Expr::sin(child) : Expr::cos(child);
        } else if (head == "+" || head == "*") {
            std::vector<Expr> children;
            while (skip_space(), pos_ < text_.size() && text_[pos_] == '(') {
                children.push_back(parse_expr());
            }
            if (children.size() < 2) {
                fail("'" + std::string(head) + "' needs at least two operands");
            }
            result = head == "+" ? Expr::add(std::move(children)) : Expr::mul(std::move(children));
        } else {
            fail("unknown head '" + std::string(head) + "'");
        }
        skip_space();
        expect(')');
        return result;
    }

   private:
    void skip_space() {
        while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t' || text_[pos_] == '\n')) {
            ++pos_;
        }
    }
    void expect(char c) {
        if (pos_ >= text_.size() || text_[pos_] != c) {
            fail(std::string("expected '") + c + "'");
        }
        ++pos_;
    }
    std::string_view atom() {
        skip_space();
        size_t start = pos_;
        while (pos_ < text_.size() && text_[pos_] != ' ' && text_[pos_] != '(' && text_[pos_] != ')' &&
               text_[pos_] != '\t' && text_[pos_] != '\n') {
            ++pos_;
        }
        if (start == pos_) {
            fail("expected an atom");
        }
        return text_.substr(start, pos_ - start);
    }
    [[noreturn]] void fail(const std::string &why) const {
        throw std::invalid_argument("expression parse error at position " + std::to_string(pos_) + ": " + why);
    }

    std::string_view text_;
    size_t pos_ = 0;
};

}  // namespace

Expr Expr::parse(std::string_view text) {
    return ExprParser(text).parse_all();
}

namespace {

template <typename Leaf>
Expr rebuild(const Expr &e, const Leaf &leaf) {
    switch (e.kind()) {
        case ExprKind::Const:
        case ExprKind::Param:
            return leaf(e);
        case ExprKind::Neg:
            return Expr::neg(rebuild(e.children()[0], leaf));
        case ExprKind::Sin:
            return Expr::sin(rebuild(e.children()[0], leaf));
        case ExprKind::Cos:
            return Expr::cos(rebuild(e.children()[0], leaf));
        case ExprKind::Add:
        case ExprKind::Mul: {
            std::vector<Expr> children;
            for (const auto &c : e.children()) {
                children.push_back(rebuild(c, leaf));
            }
            return e.kind() == ExprKind::Add ? Expr::add(std::move(children)) : Expr::mul(std::move(children));
        }
    }
    throw std::logic_error("unreachable");
}

}  // namespace

Expr simplify(const Expr &e) {
    return rebuild(e, [](const Expr &leaf) { return leaf; });
}

Complex evaluate(const Expr &e, const Bindings &bindings) {
    switch (e.kind()) {
        case ExprKind::Const:
            return e.value();
        case ExprKind::Param: {
            auto it = bindings.find(e.name());
            if (it == bindings.end()) {
                throw std::invalid_argument("unbound parameter '" + e.name() + "'");
            }
            return it->second;
        }
        case ExprKind::Neg:
            return -evaluate(e.children()[0], bindings);
        case ExprKind::Sin:
            return std::sin(evaluate(e.children()[0], bindings));
        case ExprKind::Cos:
            return std::cos(evaluate(e.children()[0], bindings));
        case ExprKind::Add: {
            Complex total{0, 0};
            for (const auto &c : e.children()) {
                total += evaluate(c, bindings);
            }
            return total;
        }
        case ExprKind::Mul: {
            Complex total{1, 0};
            for (const auto &c : e.children()) {
                total *= evaluate(c, bindings);
            }
            return total;
        }
    }
    throw std::logic_error("unreachable");
}

Expr substitute(const Expr &e, const Bindings &bindings) {
    return rebuild(e, [&](const Expr &leaf) {
        if (leaf.kind() == ExprKind::Param) {
            if (auto it = bindings.find(leaf.name()); it != bindings.end()) {
                return Expr::constant(it->second);
            }
        }
        return leaf;
    });
}

Expr conjugate(const Expr &e) {
    return rebuild(e, [](const Expr &leaf) {
        if (leaf.is_constant()) {
            return Expr::constant(std::conj(leaf.value()));
        }
        return leaf;
    });
}

Expr differentiate(const Expr &e, std::string_view param) {
    switch (e.kind()) {
        case ExprKind::Const:
            return Expr::constant(0.0);
        case ExprKind::Param:
            return Expr::constant(e.name() == param ? 1.0 : 0.0);
        case ExprKind::Neg:
            return Expr::neg(differentiate(e.children()[0], param));
        case ExprKind::Sin: {
            const Expr &u = e.children()[0];
            return Expr::mul({Expr::cos(u), differentiate(u, param)});
        }
        case ExprKind::Cos: {
            const Expr &u = e.children()[0];
            return Expr::neg(Expr::mul({Expr::sin(u), differentiate(u, param)}));
        }
        case ExprKind::Add: {
            std::vector<Expr> terms;
            for (const auto &c : e.children()) {
                terms.push_back(differentiate(c, param));
            }
            return Expr::add(std::move(terms));
        }
        case ExprKind::Mul: {
            auto factors = e.children();
            std::vector<Expr> terms;
            for (size_t i = 0; i < factors.size(); ++i) {
                std::vector<Expr> product(factors.begin(), factors.end());
                product[i] = differentiate(factors[i], param);
                terms.push_back(Expr::mul(std::move(product)));
            }
            return Expr::add(std::move(terms));
        }
    }
    throw std::logic_error("unreachable");
}

Coefficient::Coefficient(Complex value) : value_(value + Complex{0.0, 0.0}) {
    if (!is_finite(value)) {
        throw std::domain_error("numeric coefficients must be finite");
    }
}

Coefficient::Coefficient(const Expr &expr) {
    if (expr.is_constant()) {
        value_ = expr.value();
    } else {
        value_ = expr;
    }
}

Complex Coefficient::numeric() const {
    if (auto *v = std::get_if<Complex>(&value_)) {
        return *v;
    }
    throw std::logic_error("coefficient is symbolic: " + std::get<Expr>(value_).to_string());
}

const Expr &Coefficient::expr() const {
    if (auto *e = std::get_if<Expr>(&value_)) {
        return *e;
    }
    throw std::logic_error("coefficient is numeric");
}

Expr Coefficient::as_expr() const {
    if (auto *v = std::get_if<Complex>(&value_)) {
        return Expr::constant(*v);
    }
    return std::get<Expr>(value_);
}

bool Coefficient::operator==(const Coefficient &other) const {
    return value_ == other.value_;
}

Coefficient &Coefficient::operator+=(const Coefficient &other) {
    auto *a = std::get_if<Complex>(&value_);
    auto *b = std::get_if<Complex>(&other.value_);
    if (a && b) {
        *a += *b;
        if (!is_finite(*a)) {
            throw std::domain_error("numeric coefficients must be finite");
        }
        return *this;
    }
    *this = add(*this, other);
    return *this;
}

Coefficient add(const Coefficient &a, const Coefficient &b) {
    if (a.is_numeric() && b.is_numeric()) {
        return Coefficient(a.numeric() + b.numeric());
    }
    return Coefficient(Expr::add({a.as_expr(), b.as_expr()}));
}

Coefficient mul(const Coefficient &a, const Coefficient &b) {
    if (a.is_numeric() && b.is_numeric()) {
        return Coefficient(a.numeric() * b.numeric());
    }
    return Coefficient(Expr::mul({a.as_expr(), b.as_expr()}));
}

Coefficient conjugate(const Coefficient &a) {
    if (a.is_numeric()) {
        return Coefficient(std::conj(a.numeric()));
    }
    return Coefficient(conjugate(a.expr()));
}

Coefficient differentiate(const Coefficient &a, std::string_view param) {
    if (a.is_numeric()) {
        return Coefficient(0.0);
    }
    return Coefficient(differentiate(a.expr(), param));
}

Coefficient substitute(const Coefficient &a, const Bindings &bindings) {
    if (a.is_numeric()) {
        return a;
    }
    return Coefficient(substitute(a.expr(), bindings));
}

Complex evaluate(const Coefficient &a, const Bindings &bindings) {
    if (a.is_numeric()) {
        return a.numeric();
    }
    return evaluate(a.expr(), bindings);
}

bool is_zero(const Coefficient &a, double tol) {
    if (a.is_numeric()) {
        return std::abs(a.numeric()) <= tol;
    }
    const Expr &e = a.expr();
    return e.is_constant() && e.value() == Complex{0, 0};
}

std::string format_double(double v) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    if (ec != std::errc()) {
        throw std::runtime_error("format_double failed");
    }
    return std::string(buf, ptr);
}

double parse_double(std::string_view text) {
    double v = 0;
    const char *begin = text.data();
    const char *end = text.data() + text.size();
    if (begin != end && *begin == '+') {
        ++begin;
    }
    auto [ptr, ec] = std::from_chars(begin, end, v);
    if (ec != std::errc() || ptr != end || !std::isfinite(v)) {
        throw std::invalid_argument("not a finite number: \"" + std::string(text) + "\"");
    }
    return v;
}

std::string to_string(const Coefficient &c) {
    if (c.is_numeric()) {
        return "(" + format_double(c.numeric().real()) + "," + format_double(c.numeric().imag()) + ")";
    }
    return "(expr " + c.expr().to_string() + ")";
}

Coefficient parse_coefficient(std::string_view text) {
    while (!text.empty() && text.front() == ' ') {
        text.remove_prefix(1);
    }
    while (!text.empty() && text.back() == ' ') {
        text.remove_suffix(1);
    }
    if (text.size() < 2 || text.front() != '(' || text.back() != ')') {
        throw std::invalid_argument("coefficient must be parenthesized: \"" + std::string(text) + "\"");
    }
    std::string_view inner = text.substr(1, text.size() - 2);
    if (inner.starts_with("expr ")) {
        return Coefficient(Expr::parse(inner.substr(5)));
    }
    auto comma = inner.find(',');
    if (comma == std::string_view::npos) {
        throw std::invalid_argument("numeric coefficient must be (re,im): \"" + std::string(text) + "\"");
    }
    return Coefficient(Complex{parse_double(inner.substr(0, comma)), parse_double(inner.substr(comma + 1))});
}

}  // namespace pauliarith
