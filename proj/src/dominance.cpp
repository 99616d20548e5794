#include "ucddp/dominance.hpp"

#include <stdexcept>

namespace ucddp {

std::int64_t LinearForm::eval(const std::vector<std::uint8_t>& delta) const {
    std::int64_t v = constant;
    for (std::size_t i = 0; i < coeff.size(); ++i)
        if (delta[i])
            v += coeff[i];
    return v;
}

double LinearForm::eval(const std::vector<double>& delta) const {
    double v = static_cast<double>(constant);
    for (std::size_t i = 0; i < coeff.size(); ++i)
        v += static_cast<double>(coeff[i]) * delta[i];
    return v;
}

namespace {

void check_task(const Instance& inst, int u) {
    if (u < 0 || u >= inst.n())
        throw std::invalid_argument("task index out of range");
}

void check_binary(const Instance& inst, const std::vector<std::uint8_t>& delta) {
    if (static_cast<int>(delta.size()) != inst.n())
        throw std::invalid_argument("delta size does not match instance");
    for (std::uint8_t v : delta)
        if (v > 1)
            throw std::invalid_argument("delta entries must be 0 or 1");
}

void check_fractional(const Instance& inst, const std::vector<double>& delta) {
    if (static_cast<int>(delta.size()) != inst.n())
        throw std::invalid_argument("delta size does not match instance");
    for (double v : delta)
        if (!(v >= 0.0 && v <= 1.0))
            throw std::invalid_argument("delta entries must lie in [0,1]");
}

} // namespace

DominanceContext::DominanceContext(const Instance& inst) : inst_(&inst) {
    const int n = inst.n();
    sets_.resize(static_cast<std::size_t>(n));
    insert_forms_.resize(static_cast<std::size_t>(n));
    in_a_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
    in_b_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);

    for (int u = 0; u < n; ++u) {
        NeighborSets& s = sets_[static_cast<std::size_t>(u)];
        for (int i = 0; i < n; ++i) {
            if (i == u)
                continue;
            if (alpha_ratio_greater(inst, i, u)) {
                s.a.push_back(i);
                in_a_[idx(u, i)] = 1;
            } else {
                s.a_bar.push_back(i);
            }
            if (beta_ratio_greater(inst, i, u)) {
                s.b.push_back(i);
                in_b_[idx(u, i)] = 1;
            } else {
                s.b_bar.push_back(i);
            }
        }
    }

    // Delta_u(delta) = -a_u sum_{A(u)} p_i d_i
    //                + b_u (sum_{B(u)} p_i (1-d_i) + p_u)
    //                + p_u (sum_{Bb(u)} b_i (1-d_i) - sum_{Ab(u)} a_i d_i)
    for (int u = 0; u < n; ++u) {
        const NeighborSets& s = sets_[static_cast<std::size_t>(u)];
        LinearForm& f = insert_forms_[static_cast<std::size_t>(u)];
        f.constant = inst.beta(u) * inst.p(u);
        f.coeff.assign(static_cast<std::size_t>(n), 0);
        for (int i : s.a)
            f.coeff[static_cast<std::size_t>(i)] -= inst.alpha(u) * inst.p(i);
        for (int i : s.b) {
            f.constant += inst.beta(u) * inst.p(i);
            f.coeff[static_cast<std::size_t>(i)] -= inst.beta(u) * inst.p(i);
        }
        for (int i : s.b_bar) {
            f.constant += inst.p(u) * inst.beta(i);
            f.coeff[static_cast<std::size_t>(i)] -= inst.p(u) * inst.beta(i);
        }
        for (int i : s.a_bar)
            f.coeff[static_cast<std::size_t>(i)] -= inst.p(u) * inst.alpha(i);
    }
}

LinearForm DominanceContext::swap_form(int u, int v) const {
    const Instance& inst = *inst_;
    const int n = inst.n();
    check_task(inst, u);
    check_task(inst, v);
    if (u == v)
        throw std::invalid_argument("swap needs two distinct tasks");

    const NeighborSets& su = sets_[static_cast<std::size_t>(u)];
    const NeighborSets& sv = sets_[static_cast<std::size_t>(v)];

    LinearForm f;
    f.coeff.assign(static_cast<std::size_t>(n), 0);
    auto add_delta_term = [&](int i, std::int64_t c) { // + c * d_i
        f.coeff[static_cast<std::size_t>(i)] += c;
    };
    auto add_one_minus_term = [&](int i, std::int64_t c) { // + c * (1 - d_i)
        f.constant += c;
        f.coeff[static_cast<std::size_t>(i)] -= c;
    };

    for (int i : su.a)
        add_delta_term(i, -inst.alpha(u) * inst.p(i));
    for (int i : su.b)
        if (i != v)
            add_one_minus_term(i, inst.beta(u) * inst.p(i));
    f.constant += inst.beta(u) * inst.p(u);
    for (int i : sv.b)
        add_one_minus_term(i, -inst.beta(v) * inst.p(i));
    f.constant -= inst.beta(v) * inst.p(v);
    for (int i : sv.a)
        if (i != u)
            add_delta_term(i, inst.alpha(v) * inst.p(i));

    // The pivot tasks belong to neither of their own subsets, so u and v
    // never sit in the bar-set intersections below.
    if (alpha_ratio_greater(inst, u, v)) {
        // alpha_v/p_v < alpha_u/p_u
        for (int i : sv.a_bar)
            add_delta_term(i, (inst.p(v) - inst.p(u)) * inst.alpha(i));
        for (int i : sv.a)
            if (i != u && !alpha_ratio_in_a(u, i))
                add_delta_term(i, -inst.p(u) * inst.alpha(i)); // A(v) ∩ Ab(u)
    } else {
        for (int i : su.a_bar)
            add_delta_term(i, (inst.p(v) - inst.p(u)) * inst.alpha(i));
        for (int i : su.a)
            if (i != v && !alpha_ratio_in_a(v, i))
                add_delta_term(i, inst.p(v) * inst.alpha(i)); // A(u) ∩ Ab(v)
    }

    if (!beta_ratio_greater(inst, v, u)) {
        // beta_v/p_v <= beta_u/p_u
        for (int i : sv.b_bar)
            add_one_minus_term(i, (inst.p(u) - inst.p(v)) * inst.beta(i));
        for (int i : sv.b)
            if (i != u && !beta_ratio_in_b(u, i))
                add_one_minus_term(i, inst.p(u) * inst.beta(i)); // B(v) ∩ Bb(u)
    } else {
        for (int i : su.b_bar)
            add_one_minus_term(i, (inst.p(u) - inst.p(v)) * inst.beta(i));
        for (int i : su.b)
            if (i != v && !beta_ratio_in_b(v, i))
                add_one_minus_term(i, -inst.p(v) * inst.beta(i)); // B(u) ∩ Bb(v)
    }
    return f;
}

std::int64_t DominanceContext::delta_insert(const std::vector<std::uint8_t>& delta, int u) const {
    check_binary(*inst_, delta);
    check_task(*inst_, u);
    return insert_form(u).eval(delta);
}

double DominanceContext::delta_insert(const std::vector<double>& delta, int u) const {
    check_fractional(*inst_, delta);
    check_task(*inst_, u);
    return insert_form(u).eval(delta);
}

std::int64_t DominanceContext::delta_swap(const std::vector<std::uint8_t>& delta, int u, int v) const {
    check_binary(*inst_, delta);
    return swap_form(u, v).eval(delta);
}

double DominanceContext::delta_swap(const std::vector<double>& delta, int u, int v) const {
    check_fractional(*inst_, delta);
    return swap_form(u, v).eval(delta);
}

BigMInsert DominanceContext::big_m_insert(int u) const {
    const Instance& inst = *inst_;
    check_task(inst, u);
    const NeighborSets& s = sets_[static_cast<std::size_t>(u)];
    std::int64_t p_a = 0, a_abar = 0, p_b = 0, b_bbar = 0;
    for (int i : s.a)
        p_a += inst.p(i);
    for (int i : s.a_bar)
        a_abar += inst.alpha(i);
    for (int i : s.b)
        p_b += inst.p(i);
    for (int i : s.b_bar)
        b_bbar += inst.beta(i);
    BigMInsert m;
    m.m = inst.alpha(u) * p_a - inst.beta(u) * inst.p(u) + inst.p(u) * a_abar;
    m.m_prime = inst.beta(u) * p_b + inst.beta(u) * inst.p(u) + inst.p(u) * b_bbar;
    return m;
}

BigMSwap DominanceContext::big_m_swap(int u, int v) const {
    const Instance& inst = *inst_;
    check_task(inst, u);
    check_task(inst, v);
    if (u == v)
        throw std::invalid_argument("swap needs two distinct tasks");
    const NeighborSets& su = sets_[static_cast<std::size_t>(u)];
    const NeighborSets& sv = sets_[static_cast<std::size_t>(v)];

    auto sum_p = [&](const std::vector<int>& tasks) {
        std::int64_t s = 0;
        for (int i : tasks)
            s += inst.p(i);
        return s;
    };
    auto pos = [](std::int64_t x) { return x > 0 ? x : 0; };

    std::int64_t m = inst.alpha(u) * sum_p(su.a) - inst.beta(u) * inst.p(u) +
                     inst.beta(v) * sum_p(sv.b) + inst.beta(v) * inst.p(v);

    if (alpha_ratio_greater(inst, u, v)) {
        std::int64_t a_abar_v = 0;
        for (int i : sv.a_bar)
            a_abar_v += inst.alpha(i);
        std::int64_t a_cross = 0; // alpha(A(v) ∩ Ab(u))
        for (int i : sv.a)
            if (i != u && !alpha_ratio_in_a(u, i))
                a_cross += inst.alpha(i);
        m += pos(inst.p(u) - inst.p(v)) * a_abar_v + inst.p(u) * a_cross;
    } else {
        std::int64_t a_abar_u = 0;
        for (int i : su.a_bar)
            a_abar_u += inst.alpha(i);
        m += pos(inst.p(u) - inst.p(v)) * a_abar_u;
    }

    if (!beta_ratio_greater(inst, v, u)) {
        std::int64_t b_bbar_v = 0;
        for (int i : sv.b_bar)
            b_bbar_v += inst.beta(i);
        m += pos(inst.p(v) - inst.p(u)) * b_bbar_v;
    } else {
        std::int64_t b_bbar_u = 0;
        for (int i : su.b_bar)
            b_bbar_u += inst.beta(i);
        std::int64_t b_cross = 0; // beta(B(u) ∩ Bb(v))
        for (int i : su.b)
            if (i != v && !beta_ratio_in_b(v, i))
                b_cross += inst.beta(i);
        m += pos(inst.p(v) - inst.p(u)) * b_bbar_u + inst.p(v) * b_cross;
    }

    BigMSwap out;
    out.m_tilde = m;
    out.m_times2 = m >= 0 ? 2 * m : m;
    return out;
}

std::vector<Violation> DominanceContext::check(const std::vector<std::uint8_t>& delta) const {
    const Instance& inst = *inst_;
    check_binary(inst, delta);
    const int n = inst.n();
    std::vector<Violation> out;

    for (int u = 0; u < n; ++u) {
        const std::int64_t du = insert_form(u).eval(delta);
        const BigMInsert m = big_m_insert(u);
        // (5): Delta_u(delta) >= -M_u (1 - delta_u)
        const std::int64_t rhs5 = delta[static_cast<std::size_t>(u)] ? 0 : -m.m;
        if (du < rhs5)
            out.push_back({ViolationKind::insert_early, u, -1, rhs5 - du});
        // (6): -Delta_u(delta) >= -M'_u delta_u
        const std::int64_t rhs6 = delta[static_cast<std::size_t>(u)] ? -m.m_prime : 0;
        if (-du < rhs6)
            out.push_back({ViolationKind::insert_tardy, u, -1, rhs6 + du});
    }
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v) {
            if (u == v)
                continue;
            const std::int64_t duv = swap_form(u, v).eval(delta);
            const BigMSwap m = big_m_swap(u, v);
            // (7): Delta_{u,v}(delta) >= -M_{u,v} (delta_v + 1 - delta_u),
            // compared doubled so half-integral M stays exact.
            const std::int64_t mult =
                delta[static_cast<std::size_t>(v)] + 1 - delta[static_cast<std::size_t>(u)];
            const std::int64_t lhs2 = 2 * duv;
            const std::int64_t rhs2 = -m.m_times2 * mult;
            if (lhs2 < rhs2) {
                const std::int64_t deficit2 = rhs2 - lhs2;
                out.push_back({ViolationKind::swap, u, v, deficit2 / 2});
            }
        }
    return out;
}

NeighborSets neighbor_sets(const Instance& inst, int u) {
    check_task(inst, u);
    return DominanceContext(inst).sets(u);
}

std::int64_t delta_insert(const Instance& inst, const std::vector<std::uint8_t>& delta, int u) {
    return DominanceContext(inst).delta_insert(delta, u);
}

double delta_insert(const Instance& inst, const std::vector<double>& delta, int u) {
    return DominanceContext(inst).delta_insert(delta, u);
}

std::int64_t delta_swap(const Instance& inst, const std::vector<std::uint8_t>& delta, int u, int v) {
    return DominanceContext(inst).delta_swap(delta, u, v);
}

double delta_swap(const Instance& inst, const std::vector<double>& delta, int u, int v) {
    return DominanceContext(inst).delta_swap(delta, u, v);
}

BigMInsert big_m_insert(const Instance& inst, int u) {
    return DominanceContext(inst).big_m_insert(u);
}

BigMSwap big_m_swap(const Instance& inst, int u, int v) {
    return DominanceContext(inst).big_m_swap(u, v);
}

std::vector<Violation> check_dominance(const Instance& inst,
                                       const std::vector<std::uint8_t>& delta) {
    return DominanceContext(inst).check(delta);
}

nlohmann::ordered_json violations_json(const std::vector<Violation>& violations) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const Violation& v : violations) {
        nlohmann::ordered_json item;
        switch (v.kind) {
        case ViolationKind::insert_early: item["kind"] = "insert_early"; break;
        case ViolationKind::insert_tardy: item["kind"] = "insert_tardy"; break;
        case ViolationKind::swap: item["kind"] = "swap"; break;
        }
        item["u"] = v.u + 1;
        if (v.kind == ViolationKind::swap)
            item["v"] = v.v + 1;
        else
            item["v"] = nullptr;
        item["violation"] = v.magnitude;
        arr.push_back(item);
    }
    return arr;
}

} // namespace ucddp
