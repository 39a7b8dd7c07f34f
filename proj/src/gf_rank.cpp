#include "steiner/gf_rank.hpp"

#include <utility>

namespace steiner {

int rank_gf2(std::vector<std::vector<std::uint64_t>> rows, int ncols) {
    int m = static_cast<int>(rows.size());
    int rank = 0;
    for (int col = 0; col < ncols && rank < m; ++col) {
        std::size_t w = static_cast<std::size_t>(col) >> 6;
        std::uint64_t bit = std::uint64_t{1} << (col & 63);
        int piv = -1;
        for (int i = rank; i < m; ++i) {
            if (rows[static_cast<std::size_t>(i)][w] & bit) { piv = i; break; }
        }
        if (piv < 0) continue;
        std::swap(rows[static_cast<std::size_t>(rank)], rows[static_cast<std::size_t>(piv)]);
        const auto& pr = rows[static_cast<std::size_t>(rank)];
        for (int i = 0; i < m; ++i) {
            if (i == rank) continue;
            auto& r = rows[static_cast<std::size_t>(i)];
            if (r[w] & bit)
                for (std::size_t t = 0; t < r.size(); ++t) r[t] ^= pr[t];
        }
        ++rank;
    }
    return rank;
}

// truth-table-exact bitsliced GF(3) addition:
//   lo' = (a_lo & ~b_lo & ~b_hi) | (b_lo & ~a_lo & ~a_hi) | (a_hi & b_hi)
//   hi' = (a_hi & ~b_lo & ~b_hi) | (b_hi & ~a_lo & ~a_hi) | (a_lo & b_lo)
void mod3_add_into(Mod3Row& a, const Mod3Row& b) {
    for (std::size_t i = 0; i < a.lo.size(); ++i) {
        std::uint64_t alo = a.lo[i], ahi = a.hi[i];
        std::uint64_t blo = b.lo[i], bhi = b.hi[i];
        std::uint64_t nb = ~(blo | bhi), na = ~(alo | ahi);
        a.lo[i] = (alo & nb) | (blo & na) | (ahi & bhi);
        a.hi[i] = (ahi & nb) | (bhi & na) | (alo & blo);
    }
}

int rank_gf3(std::vector<Mod3Row> rows, int ncols) {
    int m = static_cast<int>(rows.size());
    int rank = 0;
    for (int col = 0; col < ncols && rank < m; ++col) {
        std::size_t w = static_cast<std::size_t>(col) >> 6;
        std::uint64_t bit = std::uint64_t{1} << (col & 63);
        int piv = -1;
        for (int i = rank; i < m; ++i) {
            const auto& r = rows[static_cast<std::size_t>(i)];
            if ((r.lo[w] | r.hi[w]) & bit) { piv = i; break; }
        }
        if (piv < 0) continue;
        std::swap(rows[static_cast<std::size_t>(rank)], rows[static_cast<std::size_t>(piv)]);
        auto& pr = rows[static_cast<std::size_t>(rank)];
        if (pr.hi[w] & bit) std::swap(pr.lo, pr.hi); // scale by 2 so the pivot is 1
        Mod3Row twice{pr.hi, pr.lo};                 // 2 * pivot row
        for (int i = 0; i < m; ++i) {
            if (i == rank) continue;
            auto& r = rows[static_cast<std::size_t>(i)];
            if (r.lo[w] & bit)
                mod3_add_into(r, twice);   // entry 1: add 2*pivot
            else if (r.hi[w] & bit)
                mod3_add_into(r, pr);      // entry 2: add pivot
        }
        ++rank;
    }
    return rank;
}

int rank_dense(std::vector<std::vector<int>> rows, std::int64_t p) {
    int m = static_cast<int>(rows.size());
    if (m == 0) return 0;
    int ncols = static_cast<int>(rows[0].size());
    auto modinv = [p](std::int64_t a) {
        std::int64_t r = 1, b = a % p, e = p - 2;
        while (e) {
            if (e & 1) r = r * b % p;
            b = b * b % p;
            e >>= 1;
        }
        return r;
    };
    int rank = 0;
    for (int col = 0; col < ncols && rank < m; ++col) {
        int piv = -1;
        for (int i = rank; i < m; ++i)
            if (rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(col)] % p) { piv = i; break; }
        if (piv < 0) continue;
        std::swap(rows[static_cast<std::size_t>(rank)], rows[static_cast<std::size_t>(piv)]);
        auto& pr = rows[static_cast<std::size_t>(rank)];
        std::int64_t inv = modinv(pr[static_cast<std::size_t>(col)]);
        for (auto& x : pr) x = static_cast<int>(x * inv % p);
        for (int i = 0; i < m; ++i) {
            if (i == rank) continue;
            auto& r = rows[static_cast<std::size_t>(i)];
            std::int64_t f = r[static_cast<std::size_t>(col)] % p;
            if (!f) continue;
            for (std::size_t t = 0; t < r.size(); ++t)
                r[t] = static_cast<int>(((r[t] - f * pr[t]) % p + p) % p);
        }
        ++rank;
    }
    return rank;
}

} // namespace steiner
