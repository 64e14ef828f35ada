#pragma once

#include <qapery/json_io.hpp>
#include <qapery/verify.hpp>

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace qapery {

/// Inclusive integer range.
struct Range {
    long lo = 0;
    long hi = -1;

    bool operator==(const Range&) const = default;
};

enum class SignOpt { theorem_default, plus, minus, both };

/// A declarative batch verification: which theorem, over which parameter
/// ranges, written where. The theorem determines exactly which ranges are
/// required; stray ranges are rejected.
struct SweepSpec {
    TheoremId theorem = TheoremId::T1E1;
    std::map<std::string, Range> ranges;
    SignOpt sign = SignOpt::theorem_default;   // only meaningful for T1E1/T1E2
    int workers = 1;
    std::string out_path;
    bool deterministic = false;     // drop elapsed_ms so reruns are byte-identical
    bool emit_quotients = false;    // include quotient witnesses in pass records

    bool operator==(const SweepSpec&) const = default;
};

/// One verification call: the sweep is a deterministic task list.
struct Task {
    TheoremId theorem = TheoremId::T1E1;
    std::map<std::string, long> params;
};

inline constexpr int kExitOk = 0;        // all pass / conjecture_pass
inline constexpr int kExitMathFail = 1;  // at least one fail (witness present)
inline constexpr int kExitUsage = 2;     // invalid spec, ranges, or resume target
inline constexpr int kExitIo = 3;        // I/O failure

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Expand a spec into its task list in the documented deterministic order.
/// Throws UsageError on empty ranges, missing/stray ranges, or floor
/// violations.
std::vector<Task> enumerate_tasks(const SweepSpec& spec);

/// The canonical JSON form of a spec: everything that defines the task list
/// and the record bytes (theorem, sign, ranges, deterministic,
/// emit_quotients); out_path and workers are execution details and excluded.
Json canonical_spec_json(const SweepSpec& spec);

/// FNV-1a 64-bit digest of the canonical form, as 16 hex digits.
std::string spec_hash(const SweepSpec& spec);

/// Rebuild a spec from its canonical JSON; nullopt if malformed.
std::optional<SweepSpec> spec_from_canonical_json(const Json& j);

using Dispatcher = std::function<VerificationReport(const Task&, VerifyContext&)>;

/// Map a task to the verifier it names.
VerificationReport dispatch_task(const Task& task, VerifyContext& ctx);

/// Execute a sweep: write the spec-hash header line, then one JSON record
/// per task in task order (buffered and flushed in order even when workers
/// complete out of order). Returns an exit code per the contract above.
int run_sweep(const SweepSpec& spec, VerifyContext& ctx,
              const Dispatcher& dispatch = dispatch_task);

/// Continue an interrupted sweep: re-read completed records, truncate a
/// corrupt trailing line, and compute only what is missing. The finished
/// file is identical to an uninterrupted run. If expected is given, its
/// canonical form must match the file header (guard against resuming with
/// the wrong parameters). Exit code covers old and new records together.
int resume_sweep(const std::string& path, VerifyContext& ctx,
                 const std::optional<SweepSpec>& expected = std::nullopt, int workers = 1,
                 const Dispatcher& dispatch = dispatch_task);

}  // namespace qapery
