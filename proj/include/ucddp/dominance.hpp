#pragma once

#include <cstdint>
#include <vector>

#include "json.hpp"
#include "ucddp/instance.hpp"
#include "ucddp/partition.hpp"

namespace ucddp {

/// The four task subsets around a pivot u: A(u)/B(u) hold the tasks with
/// strictly larger alpha/beta-ratio, A_bar(u)/B_bar(u) the remaining tasks
/// other than u (weak inequality). A, A_bar and {u} partition the task set,
/// likewise B, B_bar and {u}.
struct NeighborSets {
    std::vector<int> a;
    std::vector<int> a_bar;
    std::vector<int> b;
    std::vector<int> b_bar;
};

/// An affine function of delta: value(delta) = constant + sum coeff[i]*delta_i.
struct LinearForm {
    std::int64_t constant = 0;
    std::vector<std::int64_t> coeff;

    std::int64_t eval(const std::vector<std::uint8_t>& delta) const;
    double eval(const std::vector<double>& delta) const;
};

/// Upper bounds on -Delta_u / +Delta_u over all binary delta. M may be
/// negative; both bounds are tight.
struct BigMInsert {
    std::int64_t m;       // -Delta_u(delta) <= m
    std::int64_t m_prime; //  Delta_u(delta) <= m_prime
};

/// Upper bound m_tilde on -Delta_{u,v} over all binary delta, and the swap
/// inequality coefficient M_{u,v} = m_tilde if m_tilde >= 0, m_tilde/2
/// otherwise. M_{u,v} can be half-integral, so it is stored doubled.
struct BigMSwap {
    std::int64_t m_tilde;
    std::int64_t m_times2; // 2 * M_{u,v}, always exact
};

enum class ViolationKind { insert_early, insert_tardy, swap };

/// One violated dominance inequality at a binary point. magnitude is the
/// slack deficit, which is also the penalty decrease the corresponding
/// insert or swap operation would achieve.
struct Violation {
    ViolationKind kind;
    int u = -1;
    int v = -1; // unused for insert kinds
    std::int64_t magnitude = 0;
};

/// Per-instance tables for the dominance machinery: neighbor sets,
/// insert variation forms and ratio orders are computed once and shared
/// by the evaluators. Immutable after construction, safe for concurrent
/// readers.
class DominanceContext {
public:
    explicit DominanceContext(const Instance& inst);

    const Instance& instance() const { return *inst_; }
    const NeighborSets& sets(int u) const { return sets_[static_cast<std::size_t>(u)]; }
    const LinearForm& insert_form(int u) const { return insert_forms_[static_cast<std::size_t>(u)]; }

    LinearForm swap_form(int u, int v) const;

    std::int64_t delta_insert(const std::vector<std::uint8_t>& delta, int u) const;
    double delta_insert(const std::vector<double>& delta, int u) const;
    std::int64_t delta_swap(const std::vector<std::uint8_t>& delta, int u, int v) const;
    double delta_swap(const std::vector<double>& delta, int u, int v) const;

    BigMInsert big_m_insert(int u) const;
    BigMSwap big_m_swap(int u, int v) const;

    /// Evaluates the 2n insert inequalities and the n(n-1) swap
    /// inequalities at a binary point and reports the violated ones,
    /// insert-early then insert-tardy by task, then swaps by (u,v).
    std::vector<Violation> check(const std::vector<std::uint8_t>& delta) const;

    bool alpha_ratio_in_a(int u, int i) const { return in_a_[idx(u, i)] != 0; }
    bool beta_ratio_in_b(int u, int i) const { return in_b_[idx(u, i)] != 0; }

private:
    std::size_t idx(int u, int i) const {
        return static_cast<std::size_t>(u) * static_cast<std::size_t>(inst_->n()) +
               static_cast<std::size_t>(i);
    }

    const Instance* inst_;
    std::vector<NeighborSets> sets_;
    std::vector<LinearForm> insert_forms_;
    std::vector<std::uint8_t> in_a_; // in_a_[u*n+i] = [i in A(u)]
    std::vector<std::uint8_t> in_b_;
};

NeighborSets neighbor_sets(const Instance& inst, int u);

std::int64_t delta_insert(const Instance& inst, const std::vector<std::uint8_t>& delta, int u);
double delta_insert(const Instance& inst, const std::vector<double>& delta, int u);
std::int64_t delta_swap(const Instance& inst, const std::vector<std::uint8_t>& delta, int u, int v);
double delta_swap(const Instance& inst, const std::vector<double>& delta, int u, int v);

BigMInsert big_m_insert(const Instance& inst, int u);
BigMSwap big_m_swap(const Instance& inst, int u, int v);

std::vector<Violation> check_dominance(const Instance& inst,
                                       const std::vector<std::uint8_t>& delta);

/// [{"kind":"insert_early|insert_tardy|swap","u":int,"v":int|null,"violation":number}]
/// with 1-based task ids.
nlohmann::ordered_json violations_json(const std::vector<Violation>& violations);

} // namespace ucddp
