#include "wstrata/grc_algebra.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace wstrata {

Algebra::Algebra() : gens_(std::make_shared<const std::vector<Generator>>()) {}

Algebra::Algebra(std::vector<Generator> g)
    : gens_(std::make_shared<const std::vector<Generator>>(std::move(g))) {}

Algebra Algebra::make(const std::vector<std::pair<std::string, int>>& gens) {
    std::vector<Generator> out;
    out.reserve(gens.size());
    std::set<std::string> seen;
    for (const auto& [name, degree] : gens) {
        if (degree < 1)
            throw std::invalid_argument("generator '" + name + "' has degree " +
                                        std::to_string(degree) + "; degrees must be >= 1");
        if (!seen.insert(name).second)
            throw std::invalid_argument("duplicate generator name '" + name + "'");
        out.push_back(Generator{name, degree});
    }
    return Algebra(std::move(out));
}

int Algebra::find(std::string_view name) const {
    for (int i = 0; i < size(); ++i)
        if ((*gens_)[static_cast<size_t>(i)].name == name) return i;
    return -1;
}

bool Algebra::same(const Algebra& other) const {
    if (gens_ == other.gens_) return true;
    if (gens_->size() != other.gens_->size()) return false;
    for (size_t i = 0; i < gens_->size(); ++i)
        if ((*gens_)[i].name != (*other.gens_)[i].name ||
            (*gens_)[i].degree != (*other.gens_)[i].degree)
            return false;
    return true;
}

int Monomial::exponent_of(int gen_index) const {
    for (const auto& [g, e] : factors)
        if (g == gen_index) return e;
    return 0;
}

Monomial Monomial::make(const Algebra& a, std::vector<std::pair<int, int>> factors) {
    Monomial m;
    int prev = -1;
    int degree = 0;
    for (const auto& [g, e] : factors) {
        if (g <= prev) throw std::invalid_argument("monomial factors not strictly increasing");
        if (g < 0 || g >= a.size()) throw std::invalid_argument("generator index out of range");
        if (e < 1) throw std::invalid_argument("monomial exponent must be >= 1");
        if (a.gen(g).odd() && e != 1)
            throw std::invalid_argument("odd generator '" + a.gen(g).name + "' squares to zero");
        degree += e * a.gen(g).degree;
        prev = g;
    }
    m.factors = std::move(factors);
    m.degree = degree;
    return m;
}

bool MonomialOrder::operator()(const Monomial& a, const Monomial& b) const {
    if (a.degree != b.degree) return a.degree < b.degree;
    // Equal degree: earlier generators with larger exponents come first.
    size_t i = 0, j = 0;
    while (i < a.factors.size() && j < b.factors.size()) {
        const auto& [ga, ea] = a.factors[i];
        const auto& [gb, eb] = b.factors[j];
        if (ga < gb) return true;   // a has a positive exponent where b has 0
        if (ga > gb) return false;
        if (ea != eb) return ea > eb;
        ++i;
        ++j;
    }
    return j < b.factors.size() ? false : i < a.factors.size();
}

std::optional<MonomialProduct> monomial_product(const Algebra& a, const Monomial& x,
                                                const Monomial& y) {
    Monomial merged;
    merged.factors.reserve(x.factors.size() + y.factors.size());
    merged.degree = x.degree + y.degree;

    // Count odd generator symbols of x not yet consumed; each odd symbol of
    // y emitted before them hops over all of them, flipping the sign once
    // per hop.
    int odd_remaining_x = 0;
    for (const auto& [g, e] : x.factors)
        if (a.gen(g).odd()) ++odd_remaining_x;  // odd exponents are always 1

    bool negative = false;
    size_t i = 0, j = 0;
    while (i < x.factors.size() || j < y.factors.size()) {
        bool take_x = j >= y.factors.size() ||
                      (i < x.factors.size() && x.factors[i].first <= y.factors[j].first);
        if (take_x) {
            auto [g, e] = x.factors[i++];
            if (a.gen(g).odd()) --odd_remaining_x;
            if (j < y.factors.size() && y.factors[j].first == g) {
                if (a.gen(g).odd()) return std::nullopt;  // odd square
                e += y.factors[j++].second;
            }
            merged.factors.emplace_back(g, e);
        } else {
            auto [g, e] = y.factors[j++];
            if (a.gen(g).odd() && (odd_remaining_x % 2) != 0) negative = !negative;
            merged.factors.emplace_back(g, e);
        }
    }
    return MonomialProduct{negative ? -1 : +1, std::move(merged)};
}

Element::Element(Algebra a, const Monomial& m, Rational coeff) : algebra_(std::move(a)) {
    if (coeff != 0) terms_.emplace(m, std::move(coeff));
}

Rational Element::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

bool Element::is_homogeneous() const {
    if (terms_.empty()) return true;
    const int d = terms_.begin()->first.degree;
    for (const auto& [m, c] : terms_)
        if (m.degree != d) return false;
    return true;
}

std::optional<int> Element::homogeneous_degree() const {
    if (terms_.empty() || !is_homogeneous()) return std::nullopt;
    return terms_.begin()->first.degree;
}

void Element::require_compatible(const Element& o) const {
    // Zero carries no monomials, so it is compatible with any algebra.
    if (is_zero() || o.is_zero()) return;
    if (!algebra_.same(o.algebra_)) throw std::invalid_argument("elements from different algebras");
}

void Element::add_term(const Monomial& m, const Rational& c) {
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Element Element::operator-() const {
    Element out(algebra_);
    for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
    return out;
}

Element& Element::operator+=(const Element& o) {
    require_compatible(o);
    if (algebra_.size() == 0 && !o.is_zero()) algebra_ = o.algebra_;
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

Element& Element::operator-=(const Element& o) {
    require_compatible(o);
    if (algebra_.size() == 0 && !o.is_zero()) algebra_ = o.algebra_;
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

Element& Element::operator*=(const Rational& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, coeff] : terms_) coeff *= c;
    return *this;
}

Element& Element::operator*=(const Element& o) {
    require_compatible(o);
    Element out(is_zero() ? o.algebra_ : algebra_);
    for (const auto& [mx, cx] : terms_) {
        for (const auto& [my, cy] : o.terms_) {
            auto p = monomial_product(out.algebra_, mx, my);
            if (!p) continue;
            Rational c = cx * cy;
            if (p->sign < 0) c = -c;
            out.add_term(p->value, c);
        }
    }
    *this = std::move(out);
    return *this;
}

Element gen_element(const Algebra& a, std::string_view name, int exponent) {
    const int g = a.find(name);
    if (g < 0) throw std::invalid_argument("unknown generator '" + std::string(name) + "'");
    if (exponent == 0) return Element::unit(a);
    return Element(a, Monomial::make(a, {{g, exponent}}));
}

namespace {

void enumerate_basis(const Algebra& a, int gen_index, int remaining, Monomial& partial,
                     std::vector<Monomial>& out) {
    if (remaining == 0) {
        Monomial m = partial;
        out.push_back(std::move(m));
        return;
    }
    if (gen_index >= a.size()) return;
    const Generator& g = a.gen(gen_index);
    int max_exp = g.odd() ? 1 : remaining / g.degree;
    if (g.degree > remaining) max_exp = 0;
    // Larger exponents first so the output is already in canonical order.
    for (int e = max_exp; e >= 0; --e) {
        if (e > 0) partial.factors.emplace_back(gen_index, e);
        enumerate_basis(a, gen_index + 1, remaining - e * g.degree, partial, out);
        if (e > 0) partial.factors.pop_back();
    }
}

}  // namespace

std::vector<Monomial> degree_basis(const Algebra& a, int n) {
    if (n < 0) throw std::invalid_argument("degree_basis: negative degree");
    std::vector<Monomial> out;
    Monomial partial;
    enumerate_basis(a, 0, n, partial, out);
    for (auto& m : out) m.degree = n;
    return out;
}

std::string monomial_str(const Algebra& a, const Monomial& m) {
    if (m.is_one()) return "1";
    std::ostringstream os;
    bool first = true;
    for (const auto& [g, e] : m.factors) {
        if (!first) os << "*";
        os << a.gen(g).name;
        if (e > 1) os << "^" << e;
        first = false;
    }
    return os.str();
}

std::string Element::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        Rational abs = c < 0 ? Rational(-c) : c;
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        if (abs != 1 || m.is_one()) {
            os << abs.get_str();
            if (!m.is_one()) os << "*";
        }
        if (!m.is_one()) os << monomial_str(algebra_, m);
        first = false;
    }
    return os.str();
}

}  // namespace wstrata
