#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "polyjoin/complex.hpp"
#include "polyjoin/poly.hpp"

namespace polyjoin {

/// s^{s_degree} · Π_{v ∈ support} t_v, with squarefree t-part.
struct Monomial {
    int s_degree = 0;
    Simplex support;

    bool operator==(const Monomial&) const = default;
};

/// Order: total s-degree, then lexicographic t-support.
struct MonomialOrder {
    bool operator()(const Monomial& a, const Monomial& b) const {
        if (a.s_degree != b.s_degree) return a.s_degree < b.s_degree;
        return lex_less(a.support, b.support);
    }
};

/// Sparse polynomial in s and squarefree per-vertex variables t_v.
class MultiPoly {
public:
    using Coeff = std::int64_t;

    MultiPoly() = default;
    static MultiPoly term(int s_degree, Simplex support, Coeff c = 1);

    const std::map<Monomial, Coeff, MonomialOrder>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Coeff coeff(int s_degree, Simplex support) const;

    MultiPoly& operator+=(const MultiPoly& o);
    /// Throws std::logic_error if the product would repeat a t-variable.
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }

    /// Substitute t_v := 1, leaving a polynomial in s.
    UniPoly at_unit_t() const;

    bool operator==(const MultiPoly&) const = default;

    /// "1 + s^8*t[11]*t[31]*t[32]" with labels taken from `ground`.
    std::string to_string(const GroundSet& ground) const;

private:
    void add_term(const Monomial& m, Coeff c);
    std::map<Monomial, Coeff, MonomialOrder> terms_;
};

/// β^{i,J}(Z_K(CA, A)) = dim H̃^i(Σ K_J ∧ Â^J); 1 iff i = 0 when J = ∅.
/// `reduced_a` holds H̃*(A_v) per vertex of K.
std::int64_t multigraded_betti(const SimplicialComplex& k, const std::vector<GradedDims>& reduced_a, int degree,
                               Simplex j_set, Field field);

/// Σ_{i,J} β^{i,J} s^i t^J; `reduced` drops the J = ∅ term.
MultiPoly beta_polynomial(const SimplicialComplex& k, const std::vector<GradedDims>& reduced_a, Field field,
                          bool reduced = false);

/// Beta-polynomial of Z_{K(L)}(CA, A) from the outer (D¹, S⁰) polynomial of K by substituting
/// t_b := reduced beta-polynomial of Z_{L_b}(CA, A). `reduced_a` is indexed by composed vertex.
MultiPoly beta_compose(const SimplicialComplex& k, std::span<const SimplicialComplex> ls,
                       const std::vector<GradedDims>& reduced_a, Field field);

/// Hochster: β^{-i, 2J}(K) = dim H̃^{|J|-i-1}(K_J), with H̃^{-1}({∅}) = 1.
std::int64_t hochster_betti(const SimplicialComplex& k, int i, Simplex j_set, Field field);

}  // namespace polyjoin
