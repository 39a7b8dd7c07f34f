#pragma once

#include <cstdint>
#include <vector>

namespace steiner {

// Rank of a 0/1 matrix over GF(2); rows packed into 64-bit words.
// rows[i] has ncols bits (little-endian word order).
int rank_gf2(std::vector<std::vector<std::uint64_t>> rows, int ncols);

// Bitsliced row over GF(3): entry j is lo-bit + 2*hi-bit (never both set).
struct Mod3Row {
    std::vector<std::uint64_t> lo, hi;
};

// c = a + b (mod 3), bitsliced. Planes must not overlap within a or b.
void mod3_add_into(Mod3Row& a, const Mod3Row& b);

int rank_gf3(std::vector<Mod3Row> rows, int ncols);

// Reference dense elimination for any prime p (small matrices only).
int rank_dense(std::vector<std::vector<int>> rows, std::int64_t p);

} // namespace steiner
