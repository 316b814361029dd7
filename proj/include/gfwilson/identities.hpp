#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "gfwilson/field.hpp"
#include "gfwilson/symmetric.hpp"

namespace gfwilson {

/// Ordered (name, value) pairs; enough to rerun a single check.
using ParamList = std::vector<std::pair<std::string, std::int64_t>>;

/// One exact comparison. Values are canonical strings: the decimal
/// encoding for field elements, the decimal residue for Z_m values.
struct CheckResult {
    std::string name;
    ParamList params;
    bool pass = false;
    std::string expected;
    std::string actual;

    friend bool operator==(const CheckResult&, const CheckResult&) = default;
};

struct VerificationReport {
    std::string subject;
    ParamList params;
    /// Little-endian modulus coefficients for field reports, empty otherwise.
    std::vector<std::uint32_t> modulus;
    std::vector<CheckResult> checks;

    bool all_pass() const noexcept;
    void append(const VerificationReport& other);
};

/// Header (subject, p, n, q, modulus) of a report about one field.
VerificationReport field_report(const Field& field);

/// s_k from the product expansion against floor(k/(q-1)) (-1)^q, k = 1..q-1.
/// Error(QTooSmall) for q < 3.
VerificationReport verify_generalized_wilson(const Field& field);
VerificationReport verify_generalized_wilson(const SymmetricProfile& profile);

/// sum_{k=1}^{q-1} (-1)^k s_k x^{q-1-k} + 1 == 0 at every nonzero x.
/// Error(QTooSmall) for q < 3.
VerificationReport verify_vieta_evaluation(const Field& field);
VerificationReport verify_vieta_evaluation(const SymmetricProfile& profile);

/// (p-1)! == -1 (mod p). Error(NotPrime), Error(PTooSmall) for p < 3.
CheckResult verify_wilson_prime(std::uint64_t p);

/// Sum of k-fold products of distinct elements of {1..p-1} against
/// -floor(k/(p-1)) mod p, read off the GF(p) product expansion.
/// Error(NotPrime), Error(PTooSmall), Error(KOutOfRange).
CheckResult verify_wilson_type(std::uint64_t p, std::uint64_t k);
/// Same check reusing a GF(p) profile (all k share one expansion).
CheckResult verify_wilson_type(const SymmetricProfile& prime_field_profile, std::uint64_t k);

/// sum_k prod_{i != k} a_i computed directly (full product times inverses)
/// and as s_{q-2} from the profile; passes when both are 0.
/// Error(QTooSmallForWolstenholme) for q < 5.
CheckResult verify_wolstenholme_field(const Field& field);
CheckResult verify_wolstenholme_field(const SymmetricProfile& profile);

/// sum_{k=1}^{p-1} (p-1)!/k mod p^2 as sum_k prod_{j != k} j, using prefix
/// and suffix products. O(p). Requires p prime, p^2 <= 2^30.
std::uint64_t wolstenholme_classical_sum(std::uint64_t p);

/// The classical congruence mod p^2 for p >= 5. With
/// `allow_negative_control`, p = 3 is also accepted (and fails).
/// Error(NotPrime), Error(PTooSmall).
CheckResult verify_wolstenholme_classical(std::uint64_t p, bool allow_negative_control = false);

}  // namespace gfwilson
