#include "gfwilson/symmetric.hpp"

#include <limits>
#include <string>

namespace gfwilson {

namespace {

void require_k(const Field& field, std::uint64_t k) {
    if (k < 1 || k > field.q() - 1) {
        throw Error(ErrorCode::KOutOfRange, "k = " + std::to_string(k) + " outside [1, " +
                                                std::to_string(field.q() - 1) + "] for " +
                                                field.name());
    }
}

}  // namespace

std::uint64_t binomial_saturating(std::uint64_t n, std::uint64_t k) noexcept {
    if (k > n) return 0;
    k = std::min(k, n - k);
    constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
    unsigned __int128 acc = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        acc = acc * (n - k + i) / i;  // exact: acc is C(n-k+i, i)
        if (acc > kMax) return kMax;
    }
    return static_cast<std::uint64_t>(acc);
}

FieldElement esp_naive(const Field& field, std::uint64_t k) {
    require_k(field, k);
    const std::uint64_t m = field.q() - 1;
    if (binomial_saturating(m, k) > kNaiveSubsetBudget) {
        throw Error(ErrorCode::BudgetExceeded, "C(" + std::to_string(m) + ", " + std::to_string(k) +
                                                   ") subsets exceed the naive budget");
    }
    const std::vector<FieldElement> elems = field.enumerate_nonzero();
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;

    FieldElement sum = field.zero();
    while (true) {
        FieldElement term = field.one();
        for (std::size_t i : idx) term = field.mul(term, elems[i]);
        sum = field.add(sum, term);

        // next combination in lexicographic order
        std::size_t pos = k;
        while (pos > 0 && idx[pos - 1] == m - k + (pos - 1)) --pos;
        if (pos == 0) break;
        ++idx[pos - 1];
        for (std::size_t i = pos; i < k; ++i) idx[i] = idx[i - 1] + 1;
    }
    return sum;
}

SymmetricProfile esp_all_product(const Field& field) {
    const std::size_t m = field.q() - 1;
    // coeffs[i] is the coefficient of x^i of the partial product.
    std::vector<FieldElement> coeffs;
    coeffs.reserve(m + 1);
    coeffs.push_back(field.one());
    for (const FieldElement& a : field.enumerate_nonzero()) {
        const FieldElement neg_a = field.neg(a);
        coeffs.push_back(coeffs.back());  // new leading coefficient (stays 1)
        for (std::size_t i = coeffs.size() - 2; i > 0; --i) {
            coeffs[i] = field.add(coeffs[i - 1], field.mul(neg_a, coeffs[i]));
        }
        coeffs[0] = field.mul(neg_a, coeffs[0]);
    }

    SymmetricProfile profile{field, {}};
    profile.values.reserve(m);
    for (std::size_t k = 1; k <= m; ++k) {
        const FieldElement& c = coeffs[m - k];
        profile.values.push_back(k % 2 == 0 ? c : field.neg(c));
    }
    return profile;
}

FieldElement power_sum_direct(const Field& field, std::uint64_t k) {
    require_k(field, k);
    FieldElement sum = field.zero();
    for (const FieldElement& a : field.enumerate_nonzero()) sum = field.add(sum, field.pow(a, k));
    return sum;
}

PowerSumProfile power_sums_direct(const Field& field) {
    const std::size_t m = field.q() - 1;
    PowerSumProfile out{field, std::vector<FieldElement>(m, field.zero())};
    for (const FieldElement& a : field.enumerate_nonzero()) {
        FieldElement power = a;
        for (std::size_t k = 0; k < m; ++k) {
            out.values[k] = field.add(out.values[k], power);
            power = field.mul(power, a);
        }
    }
    return out;
}

PowerSumProfile power_sums_from_esp(const SymmetricProfile& profile) {
    const Field& field = profile.field;
    const std::vector<FieldElement>& e = profile.values;
    PowerSumProfile out{field, {}};
    out.values.reserve(e.size());
    for (std::size_t k = 1; k <= e.size(); ++k) {
        FieldElement acc = field.scale(e[k - 1], k);
        if (k % 2 == 0) acc = field.neg(acc);
        for (std::size_t i = 1; i < k; ++i) {
            const FieldElement term = field.mul(e[i - 1], out.values[k - i - 1]);
            acc = i % 2 == 1 ? field.add(acc, term) : field.sub(acc, term);
        }
        out.values.push_back(acc);
    }
    return out;
}

FieldElement predicted_sk(const Field& field, std::uint64_t k) {
    if (field.q() < 3) {
        throw Error(ErrorCode::QTooSmall, "the identity needs q >= 3, got q = " + std::to_string(field.q()));
    }
    require_k(field, k);
    const std::int64_t floor_part = static_cast<std::int64_t>(k / (field.q() - 1));
    const std::int64_t sign = field.q() % 2 == 0 ? 1 : -1;
    return field.embed(floor_part * sign);
}

}  // namespace gfwilson
