#include "ucddp/instance.hpp"

#include <algorithm>
#include <limits>
#include <random>
#include <sstream>

namespace ucddp {

namespace {

// Worst-case penalty arithmetic in this toolkit stays within a small
// multiple of n * (max alpha + max beta) * sum(p); the constraint
// evaluators additionally scale by 2 and the swap bound sums up to a
// dozen such terms. Capping the product at INT64_MAX/16 keeps every
// intermediate value representable.
constexpr std::int64_t kOverflowCap = std::numeric_limits<std::int64_t>::max() / 16;

void validate(const std::vector<std::int64_t>& p,
              const std::vector<std::int64_t>& alpha,
              const std::vector<std::int64_t>& beta,
              std::int64_t d, std::int64_t sum_p) {
    if (p.empty())
        throw std::invalid_argument("instance needs at least one task");
    if (alpha.size() != p.size() || beta.size() != p.size())
        throw std::invalid_argument("p, alpha, beta must have equal length");
    std::int64_t max_a = 0;
    std::int64_t max_b = 0;
    for (std::size_t j = 0; j < p.size(); ++j) {
        if (p[j] <= 0)
            throw std::invalid_argument("p must be positive");
        if (alpha[j] <= 0)
            throw std::invalid_argument("alpha must be positive");
        if (beta[j] <= 0)
            throw std::invalid_argument("beta must be positive");
        max_a = std::max(max_a, alpha[j]);
        max_b = std::max(max_b, beta[j]);
    }
    if (d < sum_p)
        throw std::invalid_argument("due date is restrictive: d < sum(p)");
    const unsigned __int128 worst =
        static_cast<unsigned __int128>(p.size()) *
        (static_cast<unsigned __int128>(max_a) + static_cast<unsigned __int128>(max_b)) *
        static_cast<unsigned __int128>(sum_p);
    if (worst > static_cast<unsigned __int128>(kOverflowCap))
        throw std::invalid_argument("penalty arithmetic would overflow 64-bit integers");
}

} // namespace

Instance::Instance(std::vector<std::int64_t> p,
                   std::vector<std::int64_t> alpha,
                   std::vector<std::int64_t> beta,
                   std::optional<std::int64_t> due)
    : p_(std::move(p)), alpha_(std::move(alpha)), beta_(std::move(beta)) {
    sum_p_ = 0;
    for (std::int64_t v : p_) {
        if (v > 0 && sum_p_ > std::numeric_limits<std::int64_t>::max() - v)
            throw std::invalid_argument("sum of processing times overflows");
        sum_p_ += v;
    }
    d_ = due.value_or(sum_p_);
    validate(p_, alpha_, beta_, d_, sum_p_);
}

bool alpha_ratio_greater(const Instance& inst, int i, int j) {
    return inst.alpha(i) * inst.p(j) > inst.alpha(j) * inst.p(i);
}

bool beta_ratio_greater(const Instance& inst, int i, int j) {
    return inst.beta(i) * inst.p(j) > inst.beta(j) * inst.p(i);
}

namespace {

[[noreturn]] void fail_line(int line_no, const std::string& what) {
    throw parse_error("line " + std::to_string(line_no) + ": " + what);
}

bool read_int(std::istringstream& ss, std::int64_t& out) {
    return static_cast<bool>(ss >> out);
}

bool line_is_blank(const std::string& line) {
    return line.find_first_not_of(" \t\r\n") == std::string::npos;
}

} // namespace

Instance parse_native(std::istream& in) {
    std::string line;
    int line_no = 0;

    auto next_line = [&](std::string& out) {
        while (std::getline(in, out)) {
            ++line_no;
            if (!line_is_blank(out))
                return true;
        }
        return false;
    };

    if (!next_line(line))
        throw parse_error("line 1: expected task count");
    std::int64_t n = 0;
    {
        std::istringstream ss(line);
        std::string extra;
        if (!read_int(ss, n) || (ss >> extra))
            fail_line(line_no, "expected a single integer task count");
        if (n < 1)
            fail_line(line_no, "task count must be at least 1");
    }

    std::optional<std::int64_t> due;
    std::vector<std::int64_t> p, a, b;
    p.reserve(static_cast<std::size_t>(n));
    a.reserve(static_cast<std::size_t>(n));
    b.reserve(static_cast<std::size_t>(n));

    for (std::int64_t row = 0; row < n; ++row) {
        if (!next_line(line))
            fail_line(line_no + 1, "unexpected end of input, expected task line");
        std::istringstream ss(line);
        if (row == 0 && !due) {
            // An optional "d <int>" line may precede the task rows.
            std::string head;
            std::istringstream probe(line);
            probe >> head;
            if (head == "d") {
                std::int64_t d = 0;
                std::string extra;
                if (!(probe >> d) || (probe >> extra))
                    fail_line(line_no, "malformed due-date line, expected \"d <int>\"");
                due = d;
                --row;
                continue;
            }
        }
        std::int64_t pj = 0, aj = 0, bj = 0;
        std::string extra;
        if (!read_int(ss, pj) || !read_int(ss, aj) || !read_int(ss, bj) || (ss >> extra))
            fail_line(line_no, "expected three integers \"p alpha beta\"");
        if (pj <= 0)
            fail_line(line_no, "p must be positive");
        if (aj <= 0)
            fail_line(line_no, "alpha must be positive");
        if (bj <= 0)
            fail_line(line_no, "beta must be positive");
        p.push_back(pj);
        a.push_back(aj);
        b.push_back(bj);
    }
    if (next_line(line))
        fail_line(line_no, "trailing content after task lines");

    try {
        return Instance(std::move(p), std::move(a), std::move(b), due);
    } catch (const std::invalid_argument& e) {
        throw parse_error(e.what());
    }
}

Instance parse_native(const std::string& text) {
    std::istringstream in(text);
    return parse_native(in);
}

std::string serialize_native(const Instance& inst) {
    std::ostringstream out;
    out << inst.n() << "\n";
    out << "d " << inst.due_date() << "\n";
    for (int j = 0; j < inst.n(); ++j)
        out << inst.p(j) << " " << inst.alpha(j) << " " << inst.beta(j) << "\n";
    return out.str();
}

namespace {

struct OrlibLayout {
    std::vector<std::int64_t> tokens;
    int count = 0;
    std::size_t offset = 0; // index of the first data token
};

OrlibLayout orlib_layout(const std::string& text, int n) {
    if (n < 1)
        throw parse_error("task count must be at least 1");
    OrlibLayout layout;
    std::istringstream in(text);
    std::int64_t tok = 0;
    while (in >> tok)
        layout.tokens.push_back(tok);
    if (!in.eof())
        throw parse_error("non-integer token in OR-Library file");
    const std::size_t total = layout.tokens.size();
    const std::size_t per_instance = 3 * static_cast<std::size_t>(n);
    if (total >= 1 && layout.tokens[0] >= 1 &&
        total - 1 == static_cast<std::size_t>(layout.tokens[0]) * per_instance) {
        layout.count = static_cast<int>(layout.tokens[0]);
        layout.offset = 1;
    } else if (total > 0 && total % per_instance == 0) {
        // No leading count: raw rows only.
        layout.count = static_cast<int>(total / per_instance);
        layout.offset = 0;
    } else {
        throw parse_error("token count mismatch: " + std::to_string(total) +
                          " tokens do not form instances of " + std::to_string(n) + " tasks");
    }
    return layout;
}

} // namespace

int orlib_instance_count(const std::string& text, int n) {
    return orlib_layout(text, n).count;
}

Instance parse_orlib(const std::string& text, int n, int instance_index) {
    OrlibLayout layout = orlib_layout(text, n);
    if (instance_index < 1 || instance_index > layout.count)
        throw parse_error("index out of range: instance " + std::to_string(instance_index) +
                          " of " + std::to_string(layout.count));
    const std::size_t per_instance = 3 * static_cast<std::size_t>(n);
    const std::size_t base =
        layout.offset + static_cast<std::size_t>(instance_index - 1) * per_instance;
    std::vector<std::int64_t> p, a, b;
    p.reserve(static_cast<std::size_t>(n));
    a.reserve(static_cast<std::size_t>(n));
    b.reserve(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
        const std::size_t row = base + 3 * static_cast<std::size_t>(k);
        p.push_back(layout.tokens[row]);
        a.push_back(layout.tokens[row + 1]);
        b.push_back(layout.tokens[row + 2]);
    }
    try {
        return Instance(std::move(p), std::move(a), std::move(b));
    } catch (const std::invalid_argument& e) {
        throw parse_error(e.what());
    }
}

Instance parse_orlib(std::istream& in, int n, int instance_index) {
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_orlib(buf.str(), n, instance_index);
}

namespace {

// Unbiased bounded draw from a fully specified engine, so that generated
// instances are identical across standard libraries and platforms.
std::int64_t uniform_in(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    const std::uint64_t limit =
        std::numeric_limits<std::uint64_t>::max() -
        std::numeric_limits<std::uint64_t>::max() % span;
    std::uint64_t draw;
    do {
        draw = rng();
    } while (draw >= limit);
    return lo + static_cast<std::int64_t>(draw % span);
}

void check_range(const IntRange& r, const char* name) {
    if (r.lo <= 0 || r.hi < r.lo)
        throw std::invalid_argument(std::string(name) +
                                    " range must satisfy 0 < lo <= hi");
}

} // namespace

Instance generate_random(int n, std::uint64_t seed,
                         IntRange p_range, IntRange a_range, IntRange b_range) {
    if (n < 1)
        throw std::invalid_argument("task count must be at least 1");
    check_range(p_range, "p");
    check_range(a_range, "alpha");
    check_range(b_range, "beta");
    std::mt19937_64 rng(seed);
    std::vector<std::int64_t> p(static_cast<std::size_t>(n));
    std::vector<std::int64_t> a(static_cast<std::size_t>(n));
    std::vector<std::int64_t> b(static_cast<std::size_t>(n));
    for (auto& v : p)
        v = uniform_in(rng, p_range.lo, p_range.hi);
    for (auto& v : a)
        v = uniform_in(rng, a_range.lo, a_range.hi);
    for (auto& v : b)
        v = uniform_in(rng, b_range.lo, b_range.hi);
    return Instance(std::move(p), std::move(a), std::move(b));
}

} // namespace ucddp
