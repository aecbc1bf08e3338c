#include "polyjoin/betti.hpp"

#include <stdexcept>

#include "polyjoin/joins.hpp"
#include "polyjoin/topology.hpp"

namespace polyjoin {

MultiPoly MultiPoly::term(int s_degree, Simplex support, Coeff c) {
    MultiPoly p;
    p.add_term(Monomial{s_degree, support}, c);
    return p;
}

void MultiPoly::add_term(const Monomial& m, Coeff c) {
    if (c == 0) return;
    if (c < 0 || m.s_degree < 0) throw std::domain_error("beta-polynomials have nonnegative exponents and coefficients");
    terms_[m] += c;
}

MultiPoly::Coeff MultiPoly::coeff(int s_degree, Simplex support) const {
    auto it = terms_.find(Monomial{s_degree, support});
    return it == terms_.end() ? 0 : it->second;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly out;
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) {
            if (!ma.support.disjoint(mb.support)) throw std::logic_error("product would break squarefree t-exponents");
            out.add_term(Monomial{ma.s_degree + mb.s_degree, ma.support | mb.support}, ca * cb);
        }
    return out;
}

UniPoly MultiPoly::at_unit_t() const {
    UniPoly p;
    for (const auto& [m, c] : terms_) p += UniPoly::monomial(m.s_degree, c);
    return p;
}

std::string MultiPoly::to_string(const GroundSet& ground) const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [m, c] : terms_) {
        if (!out.empty()) out += " + ";
        std::vector<std::string> factors;
        if (m.s_degree == 1)
            factors.emplace_back("s");
        else if (m.s_degree > 1)
            factors.push_back("s^" + std::to_string(m.s_degree));
        for (const auto& l : ground.labels_of(m.support)) factors.push_back("t[" + l + "]");
        if (factors.empty() || c != 1) factors.insert(factors.begin(), std::to_string(c));
        for (std::size_t i = 0; i < factors.size(); ++i) out += (i ? "*" : "") + factors[i];
    }
    return out;
}

namespace {

void check_dims(const SimplicialComplex& k, const std::vector<GradedDims>& reduced_a) {
    if (reduced_a.size() != k.vertex_count())
        throw std::invalid_argument("cohomology of A must be given for every vertex");
}

/// P(H̃*(Σ K_J ∧ Â^J)) by Künneth over the field.
UniPoly smash_series(const SimplicialComplex& k, const std::vector<GradedDims>& reduced_a, Simplex j_set, Field field) {
    UniPoly p = suspended_series(link_facets(k.facets(), Simplex{}, j_set), field);
    for (auto j : j_set.positions()) p *= reduced_a[j].series();
    return p;
}

}  // namespace

std::int64_t multigraded_betti(const SimplicialComplex& k, const std::vector<GradedDims>& reduced_a, int degree,
                               Simplex j_set, Field field) {
    check_dims(k, reduced_a);
    if (!j_set.subset_of(k.ground().all())) throw std::invalid_argument("index set outside the ground set");
    if (j_set.empty()) return degree == 0 ? 1 : 0;
    return smash_series(k, reduced_a, j_set, field).coeff(degree);
}

MultiPoly beta_polynomial(const SimplicialComplex& k, const std::vector<GradedDims>& reduced_a, Field field,
                          bool reduced) {
    check_dims(k, reduced_a);
    MultiPoly out;
    for_each_subset(k.ground().all(), [&](Simplex j_set) {
        if (j_set.empty()) {
            if (!reduced) out += MultiPoly::term(0, j_set);
            return;
        }
        const UniPoly series = smash_series(k, reduced_a, j_set, field);
        for (const auto& [i, c] : series.terms()) out += MultiPoly::term(i, j_set, c);
    });
    return out;
}

MultiPoly beta_compose(const SimplicialComplex& k, std::span<const SimplicialComplex> ls,
                       const std::vector<GradedDims>& reduced_a, Field field) {
    if (ls.size() != k.vertex_count()) throw std::invalid_argument("expected one block complex per base vertex");
    const BlockLayout layout = BlockLayout::of(ls);
    if (reduced_a.size() != layout.total)
        throw std::invalid_argument("cohomology of A must be given for every composed vertex");

    // Reduced beta-polynomial of each block, moved onto composed positions.
    std::vector<MultiPoly> substitutes;
    for (std::size_t b = 0; b < ls.size(); ++b) {
        std::vector<GradedDims> local(reduced_a.begin() + static_cast<std::ptrdiff_t>(layout.offset[b]),
                                      reduced_a.begin() + static_cast<std::ptrdiff_t>(layout.offset[b] + layout.size[b]));
        const MultiPoly block = beta_polynomial(ls[b], local, field, true);
        MultiPoly placed;
        for (const auto& [m, c] : block.terms())
            placed += MultiPoly::term(m.s_degree, layout.place(m.support, b), c);
        substitutes.push_back(std::move(placed));
    }

    // Outer polynomial of Z_K(D¹, S⁰): H̃(S⁰) is one class in degree 0, so β^{r,J} = [t^r] susp(K_J).
    const std::vector<GradedDims> s0(k.vertex_count(), GradedDims{{0, 1}});
    const MultiPoly outer = beta_polynomial(k, s0, field, false);
    MultiPoly out;
    for (const auto& [m, c] : outer.terms()) {
        MultiPoly term = MultiPoly::term(m.s_degree, Simplex{}, c);
        for (auto b : m.support.positions()) term = term * substitutes[b];
        out += term;
    }
    return out;
}

std::int64_t hochster_betti(const SimplicialComplex& k, int i, Simplex j_set, Field field) {
    if (!j_set.subset_of(k.ground().all())) throw std::invalid_argument("index set outside the ground set");
    // dim H̃^{|J|-i-1}(K_J) sits at t^{|J|-i} of the suspended series
    const int exponent = static_cast<int>(j_set.size()) - i;
    if (exponent < 0) return 0;
    return suspended_series(link_facets(k.facets(), Simplex{}, j_set), field).coeff(exponent);
}

}  // namespace polyjoin
