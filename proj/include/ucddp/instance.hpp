#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace ucddp {

/// Error raised by the instance readers; the message names the offending
/// line (native format) or token (OR-Library format).
class parse_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A common-due-date instance: n tasks with processing times p, unit
/// earliness penalties alpha, unit tardiness penalties beta, and an
/// unrestrictive due date d >= sum(p).
///
/// All quantities are integers. Construction validates positivity of
/// p/alpha/beta, d >= sum(p), and rejects instances whose penalty
/// arithmetic could leave the 64-bit signed range.
class Instance {
public:
    Instance(std::vector<std::int64_t> p,
             std::vector<std::int64_t> alpha,
             std::vector<std::int64_t> beta,
             std::optional<std::int64_t> due = std::nullopt);

    int n() const { return static_cast<int>(p_.size()); }
    std::int64_t p(int j) const { return p_[static_cast<std::size_t>(j)]; }
    std::int64_t alpha(int j) const { return alpha_[static_cast<std::size_t>(j)]; }
    std::int64_t beta(int j) const { return beta_[static_cast<std::size_t>(j)]; }
    std::int64_t due_date() const { return d_; }
    std::int64_t total_processing() const { return sum_p_; }

    const std::vector<std::int64_t>& processing_times() const { return p_; }
    const std::vector<std::int64_t>& earliness_penalties() const { return alpha_; }
    const std::vector<std::int64_t>& tardiness_penalties() const { return beta_; }

    bool operator==(const Instance&) const = default;

private:
    std::vector<std::int64_t> p_;
    std::vector<std::int64_t> alpha_;
    std::vector<std::int64_t> beta_;
    std::int64_t d_ = 0;
    std::int64_t sum_p_ = 0;
};

// Exact ratio comparisons via integer cross-multiplication.
// alpha_ratio_greater(inst, i, j) <=> alpha_i/p_i > alpha_j/p_j.
bool alpha_ratio_greater(const Instance& inst, int i, int j);
bool beta_ratio_greater(const Instance& inst, int i, int j);

/// Native format: line 1 = n; optional line "d <int>"; then n lines
/// "p_j alpha_j beta_j". When the d line is absent, d defaults to sum(p).
Instance parse_native(std::istream& in);
Instance parse_native(const std::string& text);

/// Byte-deterministic native serialization (single spaces, trailing
/// newline on every line, d line always present).
std::string serialize_native(const Instance& inst);

/// OR-Library common-due-date layout: an optional leading instance-count
/// token, then per instance n rows of three integers "p alpha beta".
/// n is supplied by the caller; instance_index is 1-based; d = sum(p).
Instance parse_orlib(std::istream& in, int n, int instance_index);
Instance parse_orlib(const std::string& text, int n, int instance_index);

/// Number of instances declared by (or inferable from) an OR-Library file
/// for the given task count.
int orlib_instance_count(const std::string& text, int n);

struct IntRange {
    std::int64_t lo = 1;
    std::int64_t hi = 1;
};

/// Seeded uniform instance generator; deterministic across platforms for
/// fixed arguments. d = sum(p).
Instance generate_random(int n, std::uint64_t seed,
                         IntRange p_range, IntRange a_range, IntRange b_range);

} // namespace ucddp
