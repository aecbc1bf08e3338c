#pragma once

#include <cstdint>
#include <map>
#include <string>

namespace polyjoin {

/// Coefficient field for every homology computation.
enum class Field { F2, Q };

/// Whether a series describes the polyhedral product or the polyhedral smash product.
enum class Mode { full, smash };

/// Univariate polynomial in t with nonnegative integer coefficients.
class UniPoly {
public:
    using Coeff = std::int64_t;

    UniPoly() = default;
    /// The constant polynomial c.
    static UniPoly constant(Coeff c);
    /// c·t^e.
    static UniPoly monomial(int exponent, Coeff c = 1);

    const std::map<int, Coeff>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Coeff coeff(int exponent) const;
    int degree() const { return terms_.empty() ? -1 : terms_.rbegin()->first; }
    Coeff evaluate_at_one() const;

    UniPoly& operator+=(const UniPoly& o);
    UniPoly& operator*=(const UniPoly& o);
    friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
    friend UniPoly operator*(UniPoly a, const UniPoly& b) { return a *= b; }

    /// a - b; throws std::domain_error if any coefficient would go negative.
    friend UniPoly operator-(const UniPoly& a, const UniPoly& b);

    /// Multiplies by t^k.
    UniPoly shifted(int k) const;

    bool operator==(const UniPoly&) const = default;

    /// Ascending exponents: "1 + 2*t^3 + t^5"; the zero polynomial prints as "0".
    std::string to_string() const;

private:
    void add_term(int e, Coeff c);
    std::map<int, Coeff> terms_;
};

/// Sparse graded dimensions: degree (≥ 0) → rank (> 0).
class GradedDims {
public:
    GradedDims() = default;
    GradedDims(std::initializer_list<std::pair<const int, std::int64_t>> init);

    static GradedDims from_series(const UniPoly& p);

    const std::map<int, std::int64_t>& ranks() const { return ranks_; }
    std::int64_t rank(int degree) const;
    bool empty() const { return ranks_.empty(); }
    void add(int degree, std::int64_t rank);

    /// Hilbert–Poincaré polynomial Σ rank_d t^d.
    UniPoly series() const;

    bool operator==(const GradedDims&) const = default;

private:
    std::map<int, std::int64_t> ranks_;
};

}  // namespace polyjoin
