#include "polyjoin/poly.hpp"

#include <stdexcept>

namespace polyjoin {

namespace {

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("polynomial coefficient overflow");
    return r;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("polynomial coefficient overflow");
    return r;
}

}  // namespace

UniPoly UniPoly::constant(Coeff c) { return monomial(0, c); }

UniPoly UniPoly::monomial(int exponent, Coeff c) {
    if (exponent < 0) throw std::invalid_argument("negative exponent");
    if (c < 0) throw std::domain_error("negative coefficient");
    UniPoly p;
    p.add_term(exponent, c);
    return p;
}

void UniPoly::add_term(int e, Coeff c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second = checked_add(it->second, c);
        if (it->second == 0) terms_.erase(it);
    }
}

UniPoly::Coeff UniPoly::coeff(int exponent) const {
    auto it = terms_.find(exponent);
    return it == terms_.end() ? 0 : it->second;
}

UniPoly::Coeff UniPoly::evaluate_at_one() const {
    Coeff s = 0;
    for (const auto& [e, c] : terms_) s = checked_add(s, c);
    return s;
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

UniPoly& UniPoly::operator*=(const UniPoly& o) {
    if (terms_.empty()) return *this;
    UniPoly out;
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_) out.add_term(e1 + e2, checked_mul(c1, c2));
    *this = std::move(out);
    return *this;
}

UniPoly operator-(const UniPoly& a, const UniPoly& b) {
    UniPoly out = a;
    for (const auto& [e, c] : b.terms_) {
        const auto have = out.coeff(e);
        if (have < c) throw std::domain_error("polynomial subtraction went negative");
        if (have == c)
            out.terms_.erase(e);
        else
            out.terms_[e] = have - c;
    }
    return out;
}

UniPoly UniPoly::shifted(int k) const {
    UniPoly out;
    for (const auto& [e, c] : terms_) {
        if (e + k < 0) throw std::invalid_argument("negative exponent");
        out.terms_.emplace(e + k, c);
    }
    return out;
}

std::string UniPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [e, c] : terms_) {
        if (!out.empty()) out += " + ";
        if (e == 0) {
            out += std::to_string(c);
            continue;
        }
        if (c != 1) out += std::to_string(c) + "*";
        out += "t";
        if (e != 1) out += "^" + std::to_string(e);
    }
    return out;
}

GradedDims::GradedDims(std::initializer_list<std::pair<const int, std::int64_t>> init) {
    for (const auto& [d, r] : init) add(d, r);
}

GradedDims GradedDims::from_series(const UniPoly& p) {
    GradedDims g;
    for (const auto& [e, c] : p.terms()) g.add(e, c);
    return g;
}

std::int64_t GradedDims::rank(int degree) const {
    auto it = ranks_.find(degree);
    return it == ranks_.end() ? 0 : it->second;
}

void GradedDims::add(int degree, std::int64_t rank) {
    if (degree < 0) throw std::invalid_argument("negative degree in graded dimensions");
    if (rank < 0) throw std::invalid_argument("negative rank in graded dimensions");
    if (rank == 0) return;
    ranks_[degree] = checked_add(this->rank(degree), rank);
}

UniPoly GradedDims::series() const {
    UniPoly p;
    for (const auto& [d, r] : ranks_) p += UniPoly::monomial(d, r);
    return p;
}

}  // namespace polyjoin
