#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "colie/scalar.hpp"

namespace colie {

/// Sparse vector over a field: column index -> nonzero entry.
using SparseVec = std::map<std::size_t, Scalar>;

void sparse_axpy(SparseVec& dst, const Scalar& c, const SparseVec& src);

/// Row-reduce in place semantics: returns fully reduced pivot rows keyed by
/// pivot column, each scaled to leading coefficient 1.
std::map<std::size_t, SparseVec> sparse_rref(std::vector<SparseVec> rows);

std::size_t sparse_rank(std::vector<SparseVec> rows);

/// Basis of { x : M x = 0 } for the matrix whose rows are given, acting on
/// coordinates 0..ncols-1. Free variables are set to 1 one at a time.
std::vector<SparseVec> sparse_kernel(const std::vector<SparseVec>& rows, std::size_t ncols,
                                     const FieldSpec& f);

} // namespace colie
