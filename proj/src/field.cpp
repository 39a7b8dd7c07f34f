#include "steiner/field.hpp"

#include <algorithm>
#include <cmath>

namespace steiner {

bool is_prime(std::int64_t m) {
    if (m < 2) return false;
    for (std::int64_t d = 2; d * d <= m; ++d)
        if (m % d == 0) return false;
    return true;
}

std::vector<std::int64_t> prime_factors(std::int64_t m) {
    std::vector<std::int64_t> out;
    for (std::int64_t d = 2; d * d <= m; ++d) {
        if (m % d == 0) {
            out.push_back(d);
            while (m % d == 0) m /= d;
        }
    }
    if (m > 1) out.push_back(m);
    return out;
}

namespace {

using Poly = std::vector<int>; // little-endian coefficients over Z_p

int poly_deg(const Poly& a) {
    for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i)
        if (a[static_cast<std::size_t>(i)] != 0) return i;
    return -1;
}

// a mod b, b monic
Poly poly_mod(Poly a, const Poly& b, std::int64_t p) {
    int db = poly_deg(b);
    for (int i = poly_deg(a); i >= db; --i) {
        int c = a[static_cast<std::size_t>(i)];
        if (c == 0) continue;
        for (int j = 0; j <= db; ++j) {
            auto& t = a[static_cast<std::size_t>(i - db + j)];
            t = static_cast<int>(((t - static_cast<std::int64_t>(c) * b[static_cast<std::size_t>(j)]) % p + p) % p);
        }
    }
    a.resize(static_cast<std::size_t>(std::max(db, 1)));
    return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& mod, std::int64_t p) {
    Poly r(a.size() + b.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = static_cast<int>((r[i + j] + static_cast<std::int64_t>(a[i]) * b[j]) % p);
    }
    return poly_mod(std::move(r), mod, p);
}

Poly poly_powmod(Poly base, std::uint64_t e, const Poly& mod, std::int64_t p) {
    Poly r{1};
    base = poly_mod(std::move(base), mod, p);
    while (e) {
        if (e & 1) r = poly_mulmod(r, base, mod, p);
        base = poly_mulmod(base, base, mod, p);
        e >>= 1;
    }
    return r;
}

bool poly_is_one(const Poly& a) {
    if (poly_deg(a) != 0) return false;
    return a[0] == 1;
}

// trial division by every monic polynomial of degree 1..n/2
bool poly_irreducible(const Poly& f, std::int64_t p, int n) {
    if (n == 1) return true;
    for (int d = 1; d <= n / 2; ++d) {
        // iterate all p^d lower-coefficient vectors of a monic degree-d divisor
        std::uint64_t total = 1;
        for (int i = 0; i < d; ++i) total *= static_cast<std::uint64_t>(p);
        for (std::uint64_t code = 0; code < total; ++code) {
            Poly g(static_cast<std::size_t>(d) + 1, 0);
            std::uint64_t c = code;
            for (int i = 0; i < d; ++i) {
                g[static_cast<std::size_t>(i)] = static_cast<int>(c % static_cast<std::uint64_t>(p));
                c /= static_cast<std::uint64_t>(p);
            }
            g[static_cast<std::size_t>(d)] = 1;
            if (poly_deg(poly_mod(f, g, p)) < 0) return false;
        }
    }
    return true;
}

} // namespace

std::vector<int> FieldTable::decode(Code a) const {
    std::vector<int> v(static_cast<std::size_t>(spec_.n));
    auto p = static_cast<std::uint32_t>(spec_.p);
    for (int i = 0; i < spec_.n; ++i) {
        v[static_cast<std::size_t>(i)] = static_cast<int>(a % p);
        a /= p;
    }
    return v;
}

Code FieldTable::encode(const std::vector<int>& v) const {
    Code c = 0;
    auto p = static_cast<Code>(spec_.p);
    for (int i = spec_.n - 1; i >= 0; --i)
        c = c * p + static_cast<Code>(v[static_cast<std::size_t>(i)]);
    return c;
}

Code FieldTable::add(Code a, Code b) const {
    if (spec_.p == 2) return a ^ b;
    auto va = decode(a), vb = decode(b);
    auto p = static_cast<int>(spec_.p);
    for (std::size_t i = 0; i < va.size(); ++i) va[i] = (va[i] + vb[i]) % p;
    return encode(va);
}

Code FieldTable::neg(Code a) const {
    if (spec_.p == 2) return a;
    auto v = decode(a);
    auto p = static_cast<int>(spec_.p);
    for (auto& c : v) c = (p - c) % p;
    return encode(v);
}

Code FieldTable::mul_poly(Code a, Code b) const {
    auto p = spec_.p;
    Poly pa(decode(a).begin(), decode(a).end());
    Poly pb(decode(b).begin(), decode(b).end());
    Poly r = poly_mulmod(pa, pb, spec_.poly, p);
    std::vector<int> v(static_cast<std::size_t>(spec_.n), 0);
    for (std::size_t i = 0; i < r.size() && i < v.size(); ++i) v[i] = r[i];
    return encode(v);
}

Code FieldTable::mul(Code a, Code b) const {
    if (a == 0 || b == 0) return 0;
    if (tabulated_) {
        std::uint64_t e = log_[a - 1] + std::uint64_t{log_[b - 1]};
        if (e >= q_ - 1) e -= q_ - 1;
        return alog_[e];
    }
    return mul_poly(a, b);
}

Code FieldTable::inv(Code a) const {
    if (a == 0) throw Error("attempt to invert the zero element");
    return pow(a, static_cast<std::int64_t>(q_ - 2));
}

Code FieldTable::pow(Code a, std::int64_t e) const {
    if (a == 0) {
        if (e == 0) return 1;
        if (e < 0) throw Error("negative power of zero");
        return 0;
    }
    std::int64_t m = static_cast<std::int64_t>(q_ - 1);
    std::int64_t er = ((e % m) + m) % m;
    if (tabulated_) {
        std::uint64_t le = (log_[a - 1] * static_cast<std::uint64_t>(er)) % static_cast<std::uint64_t>(m);
        return alog_[le];
    }
    Code r = 1, base = a;
    std::uint64_t ee = static_cast<std::uint64_t>(er);
    while (ee) {
        if (ee & 1) r = mul_poly(r, base);
        base = mul_poly(base, base);
        ee >>= 1;
    }
    return r;
}

Code FieldTable::exp(std::int64_t e) const {
    std::int64_t m = static_cast<std::int64_t>(q_ - 1);
    std::int64_t er = ((e % m) + m) % m;
    if (tabulated_) return alog_[static_cast<std::uint64_t>(er)];
    return pow(x_, er);
}

void FieldTable::ensure_bsgs() const {
    std::call_once(bsgs_once_, [this] {
        auto m = static_cast<std::uint32_t>(std::ceil(std::sqrt(static_cast<double>(q_ - 1))));
        bsgs_m_ = m;
        bsgs_baby_.reserve(m);
        Code cur = 1;
        for (std::uint32_t j = 0; j < m; ++j) {
            bsgs_baby_.emplace_back(cur, j);
            cur = mul_poly(cur, x_);
        }
        std::sort(bsgs_baby_.begin(), bsgs_baby_.end());
        // x^(-m)
        Code xm = 1;
        for (std::uint32_t j = 0; j < m; ++j) xm = mul_poly(xm, x_);
        bsgs_giant_ = pow(xm, static_cast<std::int64_t>(q_ - 2));
    });
}

std::uint64_t FieldTable::log(Code a) const {
    if (a == 0) throw Error("log of the zero element");
    check_code(a);
    if (tabulated_) return log_[a - 1];
    ensure_bsgs();
    Code cur = a;
    for (std::uint64_t i = 0;; ++i) {
        auto it = std::lower_bound(bsgs_baby_.begin(), bsgs_baby_.end(),
                                   std::make_pair(cur, std::uint32_t{0}));
        if (it != bsgs_baby_.end() && it->first == cur)
            return (i * bsgs_m_ + it->second) % (q_ - 1);
        if (i > q_ / bsgs_m_ + 1)
            throw Error("discrete log failed (element outside the group?)");
        cur = mul_poly(cur, bsgs_giant_);
    }
}

std::shared_ptr<const FieldTable> build_field(const FieldSpec& spec) {
    if (!is_prime(spec.p))
        throw NonPrimeCharacteristic("p = " + std::to_string(spec.p) + " is not prime");
    if (spec.n < 1) throw Error("extension degree must be >= 1");
    if (spec.poly.size() != static_cast<std::size_t>(spec.n) + 1 ||
        spec.poly.back() != 1)
        throw NonPrimitivePolynomial("poly must be monic of degree n");
    for (int c : spec.poly)
        if (c < 0 || c >= spec.p)
            throw NonPrimitivePolynomial("poly coefficient out of range [0, p)");

    std::uint64_t q = 1;
    for (int i = 0; i < spec.n; ++i) {
        q *= static_cast<std::uint64_t>(spec.p);
        if (q > (std::uint64_t{1} << 32))
            throw SizeBudgetExceeded("q = p^n exceeds 2^32");
    }

    if (!poly_irreducible(spec.poly, spec.p, spec.n))
        throw NonPrimitivePolynomial("polynomial is reducible over Z_" + std::to_string(spec.p));

    auto ft = std::shared_ptr<FieldTable>(new FieldTable());
    ft->spec_ = spec;
    ft->q_ = q;
    ft->tabulated_ = q <= FieldTable::kTableBudget;

    // residue of "x": for n >= 2 it is the code p; for n = 1 it is -poly[0]
    if (spec.n >= 2)
        ft->x_ = static_cast<Code>(spec.p);
    else
        ft->x_ = static_cast<Code>((spec.p - spec.poly[0]) % spec.p);

    // order check: x^((q-1)/rho) != 1 for every prime rho | q-1
    for (std::int64_t rho : prime_factors(static_cast<std::int64_t>(q - 1))) {
        Poly xr = poly_powmod(Poly{0, 1}, (q - 1) / static_cast<std::uint64_t>(rho),
                              spec.poly, spec.p);
        if (spec.n == 1)
            xr = poly_powmod(Poly{static_cast<int>(ft->x_)},
                             (q - 1) / static_cast<std::uint64_t>(rho), spec.poly, spec.p);
        if (poly_is_one(xr))
            throw NonPrimitivePolynomial(
                "polynomial is irreducible but not primitive: x has order < q-1 "
                "(x^((q-1)/" + std::to_string(rho) + ") = 1)");
    }

    if (ft->tabulated_) {
        ft->alog_.resize(q - 1);
        ft->log_.assign(q - 1, 0);
        Code cur = 1;
        for (std::uint64_t e = 0; e < q - 1; ++e) {
            ft->alog_[e] = cur;
            ft->log_[cur - 1] = static_cast<std::uint32_t>(e);
            cur = ft->mul_poly(cur, ft->x_);
        }
        if (cur != 1)
            throw NonPrimitivePolynomial("x^(q-1) != 1 (internal inconsistency)");
    }
    return ft;
}

FieldSpec default_spec(std::int64_t p, int n) {
    struct Known { std::int64_t p; int n; std::vector<int> poly; };
    // x^8+x^4+x^3+x^2+1, x^5+2x+1, x^9+x^4+1, x^6+x+1, x^13+x^4+x^3+x+1, x^28+x^3+1
    static const Known known[] = {
        {2, 8, {1, 0, 1, 1, 1, 0, 0, 0, 1}},
        {3, 5, {1, 2, 0, 0, 0, 1}},
        {2, 9, {1, 0, 0, 0, 1, 0, 0, 0, 0, 1}},
        {2, 6, {1, 1, 0, 0, 0, 0, 1}},
        {2, 13, {1, 1, 0, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1}},
        {2, 28, {1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0,
                 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1}},
    };
    for (const auto& k : known)
        if (k.p == p && k.n == n) return FieldSpec{p, n, k.poly};

    // search lexicographically for a primitive polynomial
    std::uint64_t total = 1;
    for (int i = 0; i < n; ++i) total *= static_cast<std::uint64_t>(p);
    for (std::uint64_t code = 1; code < total; ++code) {
        FieldSpec s{p, n, std::vector<int>(static_cast<std::size_t>(n) + 1, 0)};
        std::uint64_t c = code;
        for (int i = 0; i < n; ++i) {
            s.poly[static_cast<std::size_t>(i)] = static_cast<int>(c % static_cast<std::uint64_t>(p));
            c /= static_cast<std::uint64_t>(p);
        }
        s.poly[static_cast<std::size_t>(n)] = 1;
        try {
            // order + irreducibility checks only; avoid building tables
            if (!poly_irreducible(s.poly, p, n)) continue;
            std::uint64_t q = 1;
            for (int i = 0; i < n; ++i) q *= static_cast<std::uint64_t>(p);
            bool primitive = true;
            for (std::int64_t rho : prime_factors(static_cast<std::int64_t>(q - 1))) {
                Poly xr = poly_powmod(n >= 2 ? Poly{0, 1} : Poly{static_cast<int>((p - s.poly[0]) % p)},
                                      (q - 1) / static_cast<std::uint64_t>(rho), s.poly, p);
                if (poly_is_one(xr)) { primitive = false; break; }
            }
            if (primitive) return s;
        } catch (const Error&) {
            continue;
        }
    }
    throw Error("no primitive polynomial found for p=" + std::to_string(p) +
                " n=" + std::to_string(n));
}

UnityRoots roots_of_unity(std::shared_ptr<const FieldTable> field, std::uint64_t n) {
    std::uint64_t q1 = field->q() - 1;
    if (n == 0 || q1 % n != 0)
        throw OrderDoesNotDivide("subgroup order " + std::to_string(n) +
                                 " does not divide q-1 = " + std::to_string(q1));
    UnityRoots r;
    r.field = field;
    r.n = n;
    r.generator = field->exp(static_cast<std::int64_t>(q1 / n));
    r.elements.reserve(n);
    Code cur = 1;
    for (std::uint64_t i = 0; i < n; ++i) {
        r.elements.push_back(cur);
        cur = field->mul(cur, r.generator);
    }
    if (cur != 1) throw Error("generator order mismatch (internal)");
    return r;
}

bool is_zero_sum(const FieldTable& field, std::span<const Code> s) {
    Code acc = 0;
    for (Code c : s) {
        field.check_code(c);
        acc = field.add(acc, c);
    }
    return acc == 0;
}

std::vector<std::vector<Code>> zero_sum_k_subsets(
    const FieldTable& field, std::span<const Code> s, int k,
    std::optional<std::uint64_t> limit) {
    if (k < 0 || static_cast<std::size_t>(k) > s.size())
        throw Error("k exceeds |s|");
    std::vector<std::vector<Code>> out;
    std::vector<std::size_t> idx(static_cast<std::size_t>(k));
    std::vector<Code> partial(static_cast<std::size_t>(k) + 1, 0);

    // lexicographic combinations with running prefix sums
    std::size_t n = s.size();
    if (k == 0) {
        out.push_back({});
        return out;
    }
    std::size_t depth = 0;
    idx[0] = 0;
    while (true) {
        if (idx[depth] >= n - static_cast<std::size_t>(k) + 1 + depth) {
            if (depth == 0) break;
            --depth;
            ++idx[depth];
            continue;
        }
        partial[depth + 1] = field.add(partial[depth], s[idx[depth]]);
        if (depth + 1 == static_cast<std::size_t>(k)) {
            if (partial[depth + 1] == 0) {
                std::vector<Code> subset;
                subset.reserve(static_cast<std::size_t>(k));
                for (auto i : idx) subset.push_back(s[i]);
                out.push_back(std::move(subset));
                if (limit && out.size() >= *limit) return out;
            }
            ++idx[depth];
        } else {
            ++depth;
            idx[depth] = idx[depth - 1] + 1;
        }
    }
    return out;
}

} // namespace steiner
