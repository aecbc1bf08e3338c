#include "polyjoin/linalg.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

#include <boost/multiprecision/cpp_int.hpp>

namespace polyjoin {

namespace {

std::size_t rank_f2(const SparseMatrix& m) {
    const std::size_t words = (m.rows + 63) / 64;
    std::vector<std::vector<std::uint64_t>> pivots;
    std::vector<std::ptrdiff_t> pivot_of(m.rows, -1);
    std::vector<std::uint64_t> col(words);
    for (const auto& column : m.columns) {
        std::fill(col.begin(), col.end(), 0);
        for (const auto& [row, value] : column) {
            if (value & 1) col[row / 64] ^= std::uint64_t{1} << (row % 64);
        }
        std::size_t w = 0;
        while (true) {
            while (w < words && col[w] == 0) ++w;
            if (w == words) break;
            const std::size_t low = w * 64 + static_cast<std::size_t>(std::countr_zero(col[w]));
            if (pivot_of[low] < 0) {
                pivot_of[low] = static_cast<std::ptrdiff_t>(pivots.size());
                pivots.push_back(col);
                break;
            }
            const auto& p = pivots[static_cast<std::size_t>(pivot_of[low])];
            for (std::size_t k = w; k < words; ++k) col[k] ^= p[k];
        }
    }
    return pivots.size();
}

struct Overflow {};

struct Checked {
    static std::int64_t mul(std::int64_t a, std::int64_t b) {
        std::int64_t r;
        if (__builtin_mul_overflow(a, b, &r)) throw Overflow{};
        return r;
    }
    static std::int64_t sub(std::int64_t a, std::int64_t b) {
        std::int64_t r;
        if (__builtin_sub_overflow(a, b, &r)) throw Overflow{};
        return r;
    }
    static std::int64_t gcd(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }
    static std::int64_t abs(std::int64_t a) {
        if (a == INT64_MIN) throw Overflow{};
        return a < 0 ? -a : a;
    }
};

using BigInt = boost::multiprecision::cpp_int;

struct Big {
    static BigInt mul(const BigInt& a, const BigInt& b) { return a * b; }
    static BigInt sub(const BigInt& a, const BigInt& b) { return a - b; }
    static BigInt gcd(const BigInt& a, const BigInt& b) { return boost::multiprecision::gcd(a, b); }
    static BigInt abs(const BigInt& a) { return a < 0 ? BigInt(-a) : a; }
};

template <class Int, class Ops>
std::size_t rank_q_impl(const SparseMatrix& m) {
    using Vec = std::vector<std::pair<std::size_t, Int>>;
    std::vector<Vec> pivots;
    std::unordered_map<std::size_t, std::size_t> pivot_of;

    auto normalize = [](Vec& v) {
        Int g = 0;
        for (const auto& e : v) g = Ops::gcd(g, Ops::abs(e.second));
        if (v.front().second < 0) g = Int(0) - g;
        if (g != 1) {
            for (auto& e : v) e.second /= g;
        }
    };

    for (const auto& column : m.columns) {
        Vec v;
        for (const auto& [row, value] : column) {
            if (value != 0) v.emplace_back(row, Int(value));
        }
        while (!v.empty()) {
            normalize(v);
            const std::size_t low = v.front().first;
            auto it = pivot_of.find(low);
            if (it == pivot_of.end()) {
                pivot_of.emplace(low, pivots.size());
                pivots.push_back(std::move(v));
                break;
            }
            // v ← a·v − b·u cancels the entry at `low` without division.
            const Vec& u = pivots[it->second];
            const Int a = u.front().second;
            const Int b = v.front().second;
            Vec out;
            out.reserve(v.size() + u.size());
            std::size_t i = 0, j = 0;
            while (i < v.size() || j < u.size()) {
                if (j == u.size() || (i < v.size() && v[i].first < u[j].first)) {
                    out.emplace_back(v[i].first, Ops::mul(a, v[i].second));
                    ++i;
                } else if (i == v.size() || u[j].first < v[i].first) {
                    out.emplace_back(u[j].first, Ops::sub(Int(0), Ops::mul(b, u[j].second)));
                    ++j;
                } else {
                    Int val = Ops::sub(Ops::mul(a, v[i].second), Ops::mul(b, u[j].second));
                    if (val != 0) out.emplace_back(v[i].first, std::move(val));
                    ++i;
                    ++j;
                }
            }
            v = std::move(out);
        }
    }
    return pivots.size();
}

}  // namespace

std::size_t rank(const SparseMatrix& m, Field field) {
    if (m.columns.size() != m.cols) throw std::invalid_argument("sparse matrix column count mismatch");
    for (const auto& c : m.columns)
        for (const auto& e : c)
            if (e.first >= m.rows) throw std::invalid_argument("sparse matrix row index out of range");
    if (field == Field::F2) return rank_f2(m);
    try {
        return rank_q_impl<std::int64_t, Checked>(m);
    } catch (const Overflow&) {
        return rank_q_impl<BigInt, Big>(m);
    }
}

SparseMatrix multiply(const SparseMatrix& a, const SparseMatrix& b) {
    if (a.cols != b.rows) throw std::invalid_argument("matrix product shape mismatch");
    SparseMatrix out(a.rows, b.cols);
    std::vector<SparseMatrix::Entry> acc;
    for (std::size_t j = 0; j < b.cols; ++j) {
        acc.clear();
        for (const auto& [k, bv] : b.columns[j])
            for (const auto& [i, av] : a.columns[k]) acc.emplace_back(i, av * bv);
        std::sort(acc.begin(), acc.end());
        for (std::size_t x = 0; x < acc.size();) {
            std::int64_t v = 0;
            std::size_t y = x;
            for (; y < acc.size() && acc[y].first == acc[x].first; ++y) v += acc[y].second;
            if (v != 0) out.columns[j].emplace_back(acc[x].first, v);
            x = y;
        }
    }
    return out;
}

void ChainComplex::check_shapes() const {
    if (dims.empty()) {
        if (!boundaries.empty()) throw std::invalid_argument("boundaries without chain groups");
        return;
    }
    if (boundaries.size() + 1 != dims.size())
        throw std::invalid_argument("chain complex needs exactly one boundary per adjacent pair of degrees");
    for (std::size_t k = 0; k < boundaries.size(); ++k) {
        const auto& d = boundaries[k];
        if (d.rows != dims[k] || d.cols != dims[k + 1] || d.columns.size() != d.cols)
            throw std::invalid_argument("boundary matrix shape does not match chain group ranks");
    }
}

bool ChainComplex::boundary_squares_to_zero() const {
    check_shapes();
    for (std::size_t k = 0; k + 1 < boundaries.size(); ++k) {
        SparseMatrix p = multiply(boundaries[k], boundaries[k + 1]);
        for (const auto& c : p.columns)
            if (!c.empty()) return false;
    }
    return true;
}

std::int64_t ChainComplex::euler_characteristic() const {
    std::int64_t chi = 0;
    for (std::size_t k = 0; k < dims.size(); ++k)
        chi += (k % 2 == 0 ? 1 : -1) * static_cast<std::int64_t>(dims[k]);
    return chi;
}

std::vector<std::size_t> betti_numbers(const ChainComplex& c, Field field) {
    c.check_shapes();
    std::vector<std::size_t> ranks(c.boundaries.size());
    for (std::size_t k = 0; k < c.boundaries.size(); ++k) ranks[k] = rank(c.boundaries[k], field);
    std::vector<std::size_t> betti(c.dims.size());
    for (std::size_t k = 0; k < c.dims.size(); ++k) {
        std::size_t b = c.dims[k];
        if (k >= 1) b -= ranks[k - 1];           // rank of ∂ out of C_k
        if (k < ranks.size()) b -= ranks[k];     // rank of ∂ into C_k
        betti[k] = b;
    }
    return betti;
}

}  // namespace polyjoin
