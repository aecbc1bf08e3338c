#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "polyjoin/poly.hpp"

namespace polyjoin {

/// Integer matrix stored column by column; each column is a sorted (row, value) list.
/// Boundary matrices only ever carry ±1, reduced mod 2 when the field is F2.
struct SparseMatrix {
    using Entry = std::pair<std::size_t, std::int64_t>;

    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<std::vector<Entry>> columns;

    SparseMatrix() = default;
    SparseMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), columns(c) {}
};

/// Rank over the field. F2 uses bit-parallel column reduction; Q uses exact
/// fraction-free elimination (64-bit, promoted to arbitrary precision on overflow).
std::size_t rank(const SparseMatrix& m, Field field);

/// Exact integer product a·b (dense result kept sparse).
SparseMatrix multiply(const SparseMatrix& a, const SparseMatrix& b);

/// A finite chain complex: dims[k] = rank of C_k, boundaries[k] : C_{k+1} → C_k.
struct ChainComplex {
    std::vector<std::size_t> dims;
    std::vector<SparseMatrix> boundaries;

    /// Throws std::invalid_argument if matrix shapes do not match adjacent dims.
    void check_shapes() const;
    /// ∂∘∂ = 0 over the integers.
    bool boundary_squares_to_zero() const;
    /// Σ_k (-1)^k dims[k].
    std::int64_t euler_characteristic() const;
};

/// dim ker ∂_k − rank ∂_{k+1} for every k.
std::vector<std::size_t> betti_numbers(const ChainComplex& c, Field field);

}  // namespace polyjoin
