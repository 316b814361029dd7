#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>

#include "gfwilson/field.hpp"
#include "gfwilson/identities.hpp"

namespace gfwilson::cli {

inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitUsage = 2;

/// Largest field the O(q^2) verification suite will run on.
inline constexpr std::uint32_t kMaxSuiteOrder = std::uint32_t{1} << 13;
/// Largest prime for the wilson / wolstenholme sweeps (p^2 must stay <= 2^30).
inline constexpr std::uint64_t kMaxSweepPrime = 32749;

enum class Command { Verify, Sweep, Table, Wilson, Wolstenholme };
enum class Strategy { Product, Naive, Both };

struct CliConfig {
    Command command = Command::Verify;
    std::optional<std::uint32_t> p;
    unsigned n = 1;
    std::optional<std::uint32_t> max_q;
    std::optional<std::uint64_t> max_p;
    bool json = false;
    Strategy strategy = Strategy::Product;
    bool allow_negative_control = false;
    unsigned jobs = 0;  // 0: hardware concurrency
};

/// Generalized Wilson, Vieta evaluation and (q >= 5) the field Wolstenholme
/// analogue on one field. Naive strategies add or substitute the
/// subset-enumeration profile; Error(BudgetExceeded) when `Naive` cannot
/// cover every k.
VerificationReport field_suite(const Field& field, Strategy strategy);

int run_verify(const CliConfig& cfg, std::ostream& out, std::ostream& err);
int run_sweep(const CliConfig& cfg, std::ostream& out, std::ostream& err);
int run_table(const CliConfig& cfg, std::ostream& out, std::ostream& err);
int run_wilson(const CliConfig& cfg, std::ostream& out, std::ostream& err);
int run_wolstenholme(const CliConfig& cfg, std::ostream& out, std::ostream& err);

/// Entry point; args[0] is the program name. Returns the process exit code:
/// 0 all checks pass, 1 some check failed, 2 usage or parameter error.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace gfwilson::cli
