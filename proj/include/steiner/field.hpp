#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "steiner/errors.hpp"

namespace steiner {

// Element of GF(p^n), encoded as the base-p little-endian integer of its
// coefficient vector. Code 0 is the zero element, code 1 the unity.
using Code = std::uint32_t;

struct FieldSpec {
    std::int64_t p = 2;             // prime characteristic
    int n = 1;                      // extension degree
    std::vector<int> poly;          // monic degree-n polynomial, little-endian

    bool operator==(const FieldSpec&) const = default;
};

// Exact arithmetic in GF(p^n). Immutable after construction and safe to
// share read-only across threads. Fields up to q <= 2^20 carry full
// log/antilog tables; larger fields fall back to polynomial arithmetic
// with discrete logs computed on demand (baby-step giant-step).
class FieldTable {
public:
    static constexpr std::uint64_t kTableBudget = std::uint64_t{1} << 20;

    const FieldSpec& spec() const { return spec_; }
    std::uint64_t q() const { return q_; }
    std::int64_t p() const { return spec_.p; }
    int degree() const { return spec_.n; }
    bool tabulated() const { return tabulated_; }

    // The residue class of the polynomial "x" (a primitive element).
    Code x() const { return x_; }

    Code add(Code a, Code b) const;
    Code neg(Code a) const;
    Code sub(Code a, Code b) const { return add(a, neg(b)); }
    Code mul(Code a, Code b) const;
    Code inv(Code a) const;
    Code pow(Code a, std::int64_t e) const;

    // Discrete log base x; a must be nonzero.
    std::uint64_t log(Code a) const;
    // x^e for any integer exponent (reduced mod q-1).
    Code exp(std::int64_t e) const;

    void check_code(Code a) const {
        if (a >= q_)
            throw MixedFields("element code " + std::to_string(a) +
                              " out of range for GF(" + std::to_string(q_) +
                              ") - element of a different field?");
    }

private:
    friend std::shared_ptr<const FieldTable> build_field(const FieldSpec&);

    FieldTable() = default;

    std::vector<int> decode(Code a) const;
    Code encode(const std::vector<int>& v) const;
    Code mul_poly(Code a, Code b) const; // schoolbook product mod poly
    void ensure_bsgs() const;

    FieldSpec spec_;
    std::uint64_t q_ = 0;
    Code x_ = 0;
    bool tabulated_ = false;
    std::vector<Code> alog_;          // alog_[e] = x^e, period q-1
    std::vector<std::uint32_t> log_;  // log_[c] for c in [1, q)

    // lazy BSGS tables for non-tabulated fields
    mutable std::once_flag bsgs_once_;
    mutable std::vector<std::pair<Code, std::uint32_t>> bsgs_baby_; // sorted
    mutable Code bsgs_giant_ = 0;
    mutable std::uint32_t bsgs_m_ = 0;
};

// Verifies the spec (p prime; poly monic, irreducible, primitive) and
// builds the tables. Throws NonPrimeCharacteristic / NonPrimitivePolynomial.
std::shared_ptr<const FieldTable> build_field(const FieldSpec& spec);

// A curated (or searched) primitive polynomial for GF(p^n).
FieldSpec default_spec(std::int64_t p, int n);

// The order-n subgroup of GF(q)^*, generated by x^((q-1)/n).
struct UnityRoots {
    std::shared_ptr<const FieldTable> field;
    std::uint64_t n = 0;
    Code generator = 0;
    std::vector<Code> elements;     // generator^0 .. generator^(n-1)

    // generator^e with e reduced mod n
    Code element(std::int64_t e) const {
        std::int64_t m = static_cast<std::int64_t>(n);
        return elements[static_cast<std::size_t>(((e % m) + m) % m)];
    }
};

// Throws OrderDoesNotDivide unless n | q-1.
UnityRoots roots_of_unity(std::shared_ptr<const FieldTable> field, std::uint64_t n);

// True iff the field sum of s is zero; the empty set is zero-sum.
bool is_zero_sum(const FieldTable& field, std::span<const Code> s);

// All (or the first `limit`) k-subsets of s with zero field sum, in
// lexicographic order by position within s.
std::vector<std::vector<Code>> zero_sum_k_subsets(
    const FieldTable& field, std::span<const Code> s, int k,
    std::optional<std::uint64_t> limit = std::nullopt);

// Prime factorization helpers (trial division; adequate for q <= 2^32).
std::vector<std::int64_t> prime_factors(std::int64_t m);
bool is_prime(std::int64_t m);

} // namespace steiner
