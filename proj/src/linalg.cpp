#include "colie/linalg.hpp"

namespace colie {

void sparse_axpy(SparseVec& dst, const Scalar& c, const SparseVec& src) {
    if (c.is_zero()) return;
    for (const auto& [col, v] : src) {
        auto it = dst.find(col);
        if (it == dst.end()) {
            dst.emplace(col, c * v);
        } else {
            it->second += c * v;
            if (it->second.is_zero()) dst.erase(it);
        }
    }
}

namespace {

std::map<std::size_t, SparseVec> eliminate(std::vector<SparseVec> rows, bool fully_reduce) {
    std::map<std::size_t, SparseVec> pivots;
    for (auto& row : rows) {
        // Reduce against existing pivots until the leading column is new.
        for (;;) {
            while (!row.empty() && row.begin()->second.is_zero()) row.erase(row.begin());
            if (row.empty()) break;
            auto lead = row.begin()->first;
            auto it = pivots.find(lead);
            if (it == pivots.end()) break;
            Scalar c = -row.begin()->second;
            sparse_axpy(row, c, it->second);
        }
        if (row.empty()) continue;
        if (fully_reduce) {
            // Clear non-leading entries at existing pivot columns too, else
            // the stored rows are not fully reduced and kernel extraction
            // reads stale coefficients. Stored pivot rows only touch their
            // own lead and free columns, so one forward scan suffices.
            auto it = std::next(row.begin());
            while (it != row.end()) {
                auto p = pivots.find(it->first);
                if (p == pivots.end()) {
                    ++it;
                    continue;
                }
                std::size_t col = it->first;
                sparse_axpy(row, -it->second, p->second);
                it = row.upper_bound(col);
            }
        }
        auto lead = row.begin()->first;
        Scalar inv = row.begin()->second.inv();
        SparseVec scaled;
        for (const auto& [col, v] : row) scaled.emplace(col, v * inv);
        if (fully_reduce) {
            for (auto& [pcol, prow] : pivots) {
                auto hit = prow.find(lead);
                if (hit == prow.end()) continue;
                Scalar c = -hit->second;
                prow.erase(hit);
                SparseVec tail = scaled;
                tail.erase(lead);
                sparse_axpy(prow, c, tail);
            }
        }
        pivots.emplace(lead, std::move(scaled));
    }
    return pivots;
}

} // namespace

std::map<std::size_t, SparseVec> sparse_rref(std::vector<SparseVec> rows) {
    return eliminate(std::move(rows), true);
}

std::size_t sparse_rank(std::vector<SparseVec> rows) {
    return eliminate(std::move(rows), false).size();
}

std::vector<SparseVec> sparse_kernel(const std::vector<SparseVec>& rows, std::size_t ncols,
                                     const FieldSpec& f) {
    auto pivots = sparse_rref(rows);
    // Transpose view of pivot rows: for each free column, collect the pivot
    // rows that mention it.
    std::vector<SparseVec> basis;
    const Scalar one = Scalar::one(f);
    for (std::size_t col = 0; col < ncols; ++col) {
        if (pivots.count(col)) continue;
        SparseVec v;
        v.emplace(col, one);
        for (const auto& [pcol, prow] : pivots) {
            auto it = prow.find(col);
            if (it != prow.end()) v.emplace(pcol, -it->second);
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

} // namespace colie
