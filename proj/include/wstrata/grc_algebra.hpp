#pragma once

#include <gmpxx.h>

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace wstrata {

/* Exact rational scalar. Gaussian elimination over Q and the 1/4 appearing
 * in the mapping-space differentials rule out floating point, and exponents
 * of even generators make numerators grow without bound. */
using Rational = mpq_class;

/* Free graded-commutative algebra over Q on a fixed, ordered list of
 * generators. Monomials are normal forms sorted by generator index; moving
 * odd-degree generators past each other contributes Koszul signs, and odd
 * generators square to zero. */

struct Generator {
    std::string name;
    int degree = 0;

    bool odd() const { return degree % 2 != 0; }
};

class Algebra {
public:
    Algebra();

    // Generators in the given order (the order fixes all monomial normal
    // forms and basis enumerations downstream). Throws std::invalid_argument
    // on a duplicate name or a degree < 1.
    static Algebra make(const std::vector<std::pair<std::string, int>>& gens);

    int size() const { return static_cast<int>(gens_->size()); }
    const Generator& gen(int i) const { return (*gens_)[static_cast<size_t>(i)]; }
    const std::vector<Generator>& generators() const { return *gens_; }
    int find(std::string_view name) const;  // -1 when absent

    // Structural equality; values from equal algebras interoperate.
    bool same(const Algebra& other) const;

private:
    explicit Algebra(std::vector<Generator> g);
    std::shared_ptr<const std::vector<Generator>> gens_;
};

/* Product of generator powers in normal form: factors sorted strictly by
 * generator index, exponents >= 1, odd generators with exponent exactly 1.
 * The total degree is cached. */
struct Monomial {
    std::vector<std::pair<int, int>> factors;  // (generator index, exponent)
    int degree = 0;

    bool is_one() const { return factors.empty(); }
    int exponent_of(int gen_index) const;

    bool operator==(const Monomial& o) const { return factors == o.factors; }

    // Validates the normal form against the algebra and fills the degree.
    static Monomial make(const Algebra& a, std::vector<std::pair<int, int>> factors);
    static Monomial one() { return Monomial{}; }
};

/* Canonical basis order: by total degree, then exponent vectors compared
 * lexicographically with larger exponents on earlier generators first. */
struct MonomialOrder {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

struct MonomialProduct {
    int sign;  // +1 or -1
    Monomial value;
};

// Merged normal form with the Koszul sign from sorting odd generator
// symbols, or nullopt when an odd generator would acquire exponent >= 2.
std::optional<MonomialProduct> monomial_product(const Algebra& a, const Monomial& x,
                                                const Monomial& y);

/* Finite Q-linear combination of monomials; the empty term map is 0.
 * Elements are immutable values; all arithmetic is by whole-value ops. */
class Element {
public:
    using TermMap = std::map<Monomial, Rational, MonomialOrder>;

    Element() = default;  // zero in the empty algebra; combines with anything
    explicit Element(Algebra a) : algebra_(std::move(a)) {}
    Element(Algebra a, const Monomial& m, Rational coeff = 1);

    static Element zero(const Algebra& a) { return Element(a); }
    static Element unit(const Algebra& a) { return Element(a, Monomial::one(), 1); }

    const Algebra& algebra() const { return algebra_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }
    Rational coefficient(const Monomial& m) const;

    bool is_homogeneous() const;
    // Degree of a nonzero homogeneous element; nullopt for 0 or mixed terms.
    std::optional<int> homogeneous_degree() const;

    Element operator-() const;
    Element& operator+=(const Element& o);
    Element& operator-=(const Element& o);
    Element& operator*=(const Rational& c);
    Element& operator*=(const Element& o);

    friend Element operator+(Element a, const Element& b) { return a += b; }
    friend Element operator-(Element a, const Element& b) { return a -= b; }
    friend Element operator*(Element a, const Element& b) { return a *= b; }
    friend Element operator*(Element a, const Rational& c) { return a *= c; }
    friend Element operator*(const Rational& c, Element a) { return a *= c; }

    bool operator==(const Element& o) const { return terms_ == o.terms_; }

    std::string str() const;  // e.g. "b2^2*v9 + 2*b2*v11"

private:
    void add_term(const Monomial& m, const Rational& c);
    void require_compatible(const Element& o) const;

    Algebra algebra_;
    TermMap terms_;
};

// Single generator raised to a power, as an element. Throws when the name
// is unknown or the power is invalid for an odd generator.
Element gen_element(const Algebra& a, std::string_view name, int exponent = 1);

// All monomials of total degree n in the canonical order; n = 0 gives [1].
std::vector<Monomial> degree_basis(const Algebra& a, int n);

std::string monomial_str(const Algebra& a, const Monomial& m);

}  // namespace wstrata
