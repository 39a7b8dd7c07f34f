#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "steiner/field.hpp"

namespace steiner {

// A block design: v points with integer labels, blocks as k-subsets.
// The optional embedding ties point labels to field element codes and is
// what makes additivity checkable.
struct Design {
    int v = 0;
    int k = 0;
    int lambda = 1;
    std::vector<std::int32_t> points;
    std::vector<std::vector<std::int32_t>> blocks;

    struct Embedding {
        FieldSpec field;
        std::map<std::int32_t, Code> map; // point label -> element code
    };
    std::optional<Embedding> embedding;

    std::size_t block_count() const { return blocks.size(); }
};

struct Resolution {
    std::vector<std::vector<std::int32_t>> classes; // block indices, 0-based
};

struct VerificationReport {
    bool is_2_design = false;
    int lambda_min = 0, lambda_max = 0;
    std::int64_t r_num = 0, r_den = 1; // replication number (v-1)/(k-1)
    bool r_integral = false;
    struct PairDefect {
        std::int32_t a, b;
        int count;
    };
    std::vector<PairDefect> failures;
};

// Checks the "every pair in exactly lambda blocks" property; lists every
// defective pair otherwise. Throws MalformedBlock on structural problems.
VerificationReport verify_design(const Design& d);

// Prime divisors of (v-k)/(k-1); throws DesignParametersInadmissible if
// (k-1) does not divide (v-k) or v > k > 2 fails.
std::vector<std::int64_t> admissible_primes(int v, int k);

struct PrimePower {
    std::int64_t prime = 0;
    int exponent = 0;

    // value as uint64 when it fits
    std::optional<std::uint64_t> value() const {
        std::uint64_t acc = 1;
        for (int i = 0; i < exponent; ++i) {
            if (acc > UINT64_MAX / static_cast<std::uint64_t>(prime)) return std::nullopt;
            acc *= static_cast<std::uint64_t>(prime);
        }
        return acc;
    }
    std::string str() const {
        return std::to_string(prime) + "^" + std::to_string(exponent);
    }
};

// All q = rho^m with rho admissible, m <= exponent_bound, q = 1 (mod modulus),
// ascending.
std::vector<PrimePower> admissible_field_orders(int v, int k, std::int64_t modulus,
                                                int exponent_bound = 64);

// True iff every block's image under the embedding is zero-sum.
bool is_additive(const Design& d);

// True iff the classes partition the block list and each class partitions
// the point set.
bool verify_resolution(const Design& d, const Resolution& r);

// Rank over GF(p) of the v x b point-block incidence matrix.
int p_rank(const Design& d, std::int64_t p);

// Point-line design of PG(n,p): points are the 1-dimensional subspaces of
// F_p^(n+1) (canonical representatives with first nonzero coordinate 1,
// labelled 0..v-1 in lexicographic order), blocks are the lines.
Design pg_point_line_design(int n, std::int64_t p);

// True iff `block` equals the set of canonical representatives of the
// projective points on the GF(p)-line spanned by two of its members.
// Canonical representatives are the members of R_{q,(q-1)/(p-1)}.
bool is_projective_line(std::span<const Code> block, const FieldTable& field,
                        std::int64_t p);

// Canonical representative of the projective point of u (the unique scalar
// multiple of u lying in R_{q,(q-1)/(p-1)}).
Code canonical_rep(const FieldTable& field, Code u, std::int64_t p);

} // namespace steiner
