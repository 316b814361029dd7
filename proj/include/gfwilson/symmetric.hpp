#pragma once

#include <cstdint>
#include <vector>

#include "gfwilson/field.hpp"

namespace gfwilson {

/// s_1 .. s_{q-1} of the nonzero elements of a field; values[k-1] = s_k.
struct SymmetricProfile {
    Field field;
    std::vector<FieldElement> values;

    const FieldElement& s(std::uint64_t k) const { return values.at(k - 1); }
};

/// p_1 .. p_{q-1}, values[k-1] = sum of a^k over the nonzero elements.
struct PowerSumProfile {
    Field field;
    std::vector<FieldElement> values;

    const FieldElement& p(std::uint64_t k) const { return values.at(k - 1); }
};

/// Subset-enumeration budget for esp_naive.
inline constexpr std::uint64_t kNaiveSubsetBudget = 1'000'000;

/// C(n, k), saturating at UINT64_MAX.
std::uint64_t binomial_saturating(std::uint64_t n, std::uint64_t k) noexcept;

/// Literal sum over all k-subsets of the nonzero elements. Brute-force
/// oracle: Error(KOutOfRange) unless 1 <= k <= q-1, Error(BudgetExceeded)
/// when C(q-1, k) > kNaiveSubsetBudget.
FieldElement esp_naive(const Field& field, std::uint64_t k);

/// Expands prod (x - a) over the nonzero a one linear factor at a time and
/// reads s_k = (-1)^k [x^{q-1-k}]. O(q^2) field multiplications.
SymmetricProfile esp_all_product(const Field& field);

/// sum_a a^k via elem_pow. Error(KOutOfRange) unless 1 <= k <= q-1.
FieldElement power_sum_direct(const Field& field, std::uint64_t k);

/// All p_k at once by running powers; same values as power_sum_direct.
PowerSumProfile power_sums_direct(const Field& field);

/// Newton's identities in the e -> p direction:
///   p_k = e_1 p_{k-1} - e_2 p_{k-2} + ... + (-1)^{k-1} k e_k
/// where k e_k is a k-fold sum, so no division happens.
PowerSumProfile power_sums_from_esp(const SymmetricProfile& profile);

/// floor(k/(q-1)) * (-1)^q embedded in the field: 0 for k < q-1, (-1)^q at
/// k = q-1. Error(QTooSmall) for q < 3, Error(KOutOfRange) outside [1, q-1].
FieldElement predicted_sk(const Field& field, std::uint64_t k);

}  // namespace gfwilson
